//! Linear algebra and polynomials over a prime field `Z/p`, `p < 2^32`.

use crate::arith::{factorize, pow_mod};

#[derive(Clone, Copy, Debug)]
pub struct Zp {
    pub p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        assert!(p < 1 << 32);
        Zp { p }
    }
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    pub fn pow(self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }
    pub fn neg(self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn primitive_root(self) -> u64 {
        let primes: Vec<u64> = factorize(self.p - 1).into_iter().map(|(r, _)| r).collect();
        (2..self.p)
            .find(|&g| primes.iter().all(|&r| self.pow(g, (self.p - 1) / r) != 1))
            .unwrap_or(1)
    }

    // Polynomials: coefficient vectors, lowest degree first, no trailing zeros.

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn poly_mul(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Self::trim(out)
    }

    /// Quotient and remainder; `b` nonzero.
    fn poly_divmod(self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        if r.len() < b.len() {
            return (Vec::new(), Self::trim(r));
        }
        let lead_inv = self.inv(b[db]);
        let mut q = vec![0; r.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mul(r[i + db], lead_inv);
            q[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = self.sub(r[i + j], self.mul(c, bj));
            }
        }
        r.truncate(db);
        (Self::trim(q), Self::trim(r))
    }

    fn monic(self, a: Vec<u64>) -> Vec<u64> {
        match a.last() {
            None => a,
            Some(&l) => {
                let li = self.inv(l);
                a.into_iter().map(|x| self.mul(x, li)).collect()
            }
        }
    }

    fn poly_gcd(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (Self::trim(a.to_vec()), Self::trim(b.to_vec()));
        while !b.is_empty() {
            let (_, r) = self.poly_divmod(&a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }

    fn poly_powmod(self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = vec![1];
        let mut b = self.poly_divmod(base, m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_divmod(&self.poly_mul(&acc, &b), m).1;
            }
            b = self.poly_divmod(&self.poly_mul(&b, &b), m).1;
            e >>= 1;
        }
        acc
    }

    /// Distinct roots of `f` in `Z/p`, sorted.
    pub fn roots(self, f: &[u64]) -> Vec<u64> {
        let f = self.monic(Self::trim(f.to_vec()));
        if f.len() <= 1 {
            return Vec::new();
        }
        // g = gcd(f, x^p − x) is the product of the distinct linear factors
        let xp = self.poly_powmod(&[0, 1], self.p, &f);
        let mut xp_minus_x = xp;
        xp_minus_x.resize(xp_minus_x.len().max(2), 0);
        xp_minus_x[1] = self.sub(xp_minus_x[1], 1);
        let g = self.poly_gcd(&f, &Self::trim(xp_minus_x));
        let mut out = Vec::new();
        self.split(g, &mut out);
        out.sort_unstable();
        out
    }

    fn split(self, g: Vec<u64>, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => {}
            2 => out.push(self.neg(g[0])),
            _ if self.p == 2 => {
                for r in 0..2 {
                    if g.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, r), c)) == 0 {
                        out.push(r);
                    }
                }
            }
            _ => {
                for a in 0..self.p {
                    let mut h = self.poly_powmod(&[a, 1], (self.p - 1) / 2, &g);
                    if h.is_empty() {
                        continue;
                    }
                    h[0] = self.sub(h[0], 1);
                    let d = self.poly_gcd(&g, &Self::trim(h));
                    if d.len() > 1 && d.len() < g.len() {
                        let (rest, _) = self.poly_divmod(&g, &d);
                        self.split(d, out);
                        self.split(self.monic(rest), out);
                        return;
                    }
                }
            }
        }
    }

    pub fn det(self, a: &[Vec<u64>]) -> u64 {
        let n = a.len();
        let mut m = a.to_vec();
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
                return 0;
            };
            if piv != col {
                m.swap(piv, col);
                det = self.neg(det);
            }
            det = self.mul(det, m[col][col]);
            let inv = self.inv(m[col][col]);
            for r in col + 1..n {
                if m[r][col] == 0 {
                    continue;
                }
                let f = self.mul(m[r][col], inv);
                for j in col..n {
                    let v = self.mul(f, m[col][j]);
                    m[r][j] = self.sub(m[r][j], v);
                }
            }
        }
        det
    }

    /// `det(xI − A)` by evaluation at `0..=n` and interpolation.
    pub fn char_poly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let xs: Vec<u64> = (0..=n as u64).collect();
        let ys: Vec<u64> = xs
            .iter()
            .map(|&x| {
                let m: Vec<Vec<u64>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let d = if i == j { x } else { 0 };
                                self.sub(d, a[i][j])
                            })
                            .collect()
                    })
                    .collect();
                self.det(&m)
            })
            .collect();
        let mut out = vec![0; n + 1];
        for i in 0..=n {
            let mut basis = vec![1u64];
            let mut denom = 1;
            for j in 0..=n {
                if i == j {
                    continue;
                }
                basis = self.poly_mul(&basis, &[self.neg(xs[j]), 1]);
                denom = self.mul(denom, self.sub(xs[i], xs[j]));
            }
            let scale = self.mul(ys[i], self.inv(denom));
            for (k, &c) in basis.iter().enumerate() {
                out[k] = self.add(out[k], self.mul(c, scale));
            }
        }
        Self::trim(out)
    }

    /// Basis of the right null space `{x : A·x = 0}` of an `r × c` matrix.
    pub fn kernel(self, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m = a.to_vec();
        let rows = m.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(piv, r);
            let inv = self.inv(m[r][col]);
            for j in 0..cols {
                m[r][j] = self.mul(m[r][j], inv);
            }
            for i in 0..rows {
                if i != r && m[i][col] != 0 {
                    let f = m[i][col];
                    for j in 0..cols {
                        let v = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(m[i][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form of the row space; returns rows and pivots.
    pub fn rref(self, rows_in: &[Vec<u64>], cols: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut m = rows_in.to_vec();
        let rows = m.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(piv, r);
            let inv = self.inv(m[r][col]);
            for j in 0..cols {
                m[r][j] = self.mul(m[r][j], inv);
            }
            for i in 0..rows {
                if i != r && m[i][col] != 0 {
                    let f = m[i][col];
                    for j in 0..cols {
                        let v = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        m.truncate(r);
        (m, pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_roots() {
        let z = Zp::new(31);
        // (x−3)(x−5)(x−5)(x^2+1): x^2+1 is irreducible mod 31
        let mut f = vec![1];
        for r in [3, 5, 5] {
            f = z.poly_mul(&f, &[z.neg(r), 1]);
        }
        f = z.poly_mul(&f, &[1, 0, 1]);
        assert_eq!(z.roots(&f), vec![3, 5]);
        assert_eq!(z.roots(&[0, 1]), vec![0]);
    }

    #[test]
    fn characteristic_polynomial() {
        let z = Zp::new(101);
        let a = vec![vec![2, 1], vec![0, 3]];
        // (x−2)(x−3) = x² − 5x + 6
        assert_eq!(z.char_poly(&a), vec![6, 96, 1]);
        assert_eq!(z.primitive_root(), 2);
        let k = z.kernel(&[vec![1, 2, 3], vec![2, 4, 6]], 3);
        assert_eq!(k.len(), 2);
    }
}
