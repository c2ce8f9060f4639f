use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::FFMatrix;
use crate::permutation::Permutation;

/// Elements the oracle can enumerate: a product, inverses and a way to
/// build the identity of matching shape.
pub trait GroupElement: Clone + Eq + Hash + Ord + Debug + Send + Sync {
    /// `self` first, then `other`.
    fn op(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn identity_like(&self) -> Self;
    fn is_one(&self) -> bool;
    /// Same degree (or same dimension and field).
    fn compatible(&self, other: &Self) -> bool;
}

impl GroupElement for Permutation {
    fn op(&self, other: &Self) -> Self {
        self.then(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }
    fn is_one(&self) -> bool {
        self.is_identity()
    }
    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

impl GroupElement for FFMatrix {
    /// Row-vector action: `v ↦ v·A·B`, so the matrix product `A·B`.
    fn op(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }
    fn inv(&self) -> Self {
        self.inverse().expect("group elements are invertible")
    }
    fn identity_like(&self) -> Self {
        FFMatrix::identity(self.field().clone(), self.dim())
    }
    fn is_one(&self) -> bool {
        self.is_identity()
    }
    fn compatible(&self, other: &Self) -> bool {
        self.dim() == other.dim() && **self.field() == **other.field()
    }
}

const TABLE_LIMIT: usize = 2048;

/// A finite group held as an explicit element list.
#[derive(Clone, Debug)]
pub struct SmallGroup<E: GroupElement> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<E>,
    table: Option<Vec<u32>>,
}

impl<E: GroupElement> SmallGroup<E> {
    /// Breadth-first closure of `generators`, identity first; new elements
    /// are appended in the order `x·s` is discovered for `x` in list order
    /// and `s` in generator order.
    pub fn enumerate(generators: &[E], cap: usize) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Precondition("no generators".into()))?;
        if let Some(bad) = generators.iter().find(|g| !g.compatible(first)) {
            return Err(Error::Precondition(format!("incompatible generator {bad:?}")));
        }
        let id = first.identity_like();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in generators {
                let y = elements[i].op(s);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
        let mut g = SmallGroup {
            elements,
            index,
            generators: generators.to_vec(),
            table: None,
        };
        g.build_table();
        Ok(g)
    }

    /// Wraps a complete element list. A generating set is picked with a
    /// seeded RNG and the closure must reproduce exactly the given set.
    pub fn from_elements(elements: &[E]) -> Result<Self> {
        let mut pool: Vec<E> = elements.to_vec();
        pool.sort();
        pool.dedup();
        let target = pool.len();
        let first = pool
            .first()
            .ok_or_else(|| Error::Precondition("empty element list".into()))?
            .clone();
        let mut rng = ChaCha8Rng::seed_from_u64(0x1f0);
        let mut gens: Vec<E> = Vec::new();
        let mut group = SmallGroup::enumerate(&[first.identity_like()], target + 1)?;
        let mut order: Vec<usize> = (0..pool.len()).collect();
        order.shuffle(&mut rng);
        for i in order {
            if group.order() == target {
                break;
            }
            if group.index_of(&pool[i]).is_some() {
                continue;
            }
            gens.push(pool[i].clone());
            group = SmallGroup::enumerate(&gens, target)
                .map_err(|_| Error::Precondition("element list is not closed".into()))?;
        }
        if group.order() != target || pool.iter().any(|x| group.index_of(x).is_none()) {
            return Err(Error::Precondition("element list is not a group".into()));
        }
        Ok(group)
    }

    fn build_table(&mut self) {
        let n = self.elements.len();
        if n > TABLE_LIMIT {
            return;
        }
        let mut table = Vec::with_capacity(n * n);
        for a in &self.elements {
            for b in &self.elements {
                table.push(self.index[&a.op(b)] as u32);
            }
        }
        self.table = Some(table);
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Index of `elements[a]·elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].op(&self.elements[b])],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].inv()]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn involutions(&self) -> Vec<usize> {
        (1..self.order()).filter(|&i| self.mul(i, i) == 0).collect()
    }

    pub fn exponent(&self, classes: &ClassData) -> u64 {
        classes
            .element_orders
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Conjugacy classes in canonical order: by element order, then
    /// descending size, then first element index.
    pub fn conjugacy_classes(&self) -> ClassData {
        let n = self.order();
        let gens: Vec<(usize, usize)> = self
            .generators
            .iter()
            .map(|s| {
                let i = self.index[s];
                (i, self.inverse(i))
            })
            .collect();
        let mut raw_class = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != usize::MAX {
                continue;
            }
            let id = raw.len();
            raw_class[start] = id;
            let mut orbit = vec![start];
            let mut pos = 0;
            while pos < orbit.len() {
                let x = orbit[pos];
                pos += 1;
                for &(s, si) in &gens {
                    let y = self.mul(self.mul(si, x), s);
                    if raw_class[y] == usize::MAX {
                        raw_class[y] = id;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        let mut keyed: Vec<(u64, usize, usize, Vec<usize>)> = raw
            .into_iter()
            .map(|c| (self.element_order(c[0]), c.len(), c[0], c))
            .collect();
        keyed.sort_by(|a, b| (a.0, std::cmp::Reverse(a.1), a.2).cmp(&(b.0, std::cmp::Reverse(b.1), b.2)));
        let mut element_class = vec![0; n];
        for (ci, (_, _, _, members)) in keyed.iter().enumerate() {
            for &e in members {
                element_class[e] = ci;
            }
        }
        let mut names = Vec::with_capacity(keyed.len());
        let mut letter = 0;
        for (ci, k) in keyed.iter().enumerate() {
            if ci > 0 && keyed[ci - 1].0 == k.0 {
                letter += 1;
            } else {
                letter = 0;
            }
            names.push(format!("{}{}", k.0, class_letters(letter)));
        }
        let order = n as u64;
        let inverse = keyed
            .iter()
            .map(|k| element_class[self.inverse(k.2)])
            .collect();
        ClassData {
            names,
            representatives: keyed.iter().map(|k| k.2).collect(),
            sizes: keyed.iter().map(|k| k.1 as u64).collect(),
            centralizer_orders: keyed.iter().map(|k| order / k.1 as u64).collect(),
            element_orders: keyed.iter().map(|k| k.0).collect(),
            classes: keyed.into_iter().map(|k| k.3).collect(),
            inverse,
            element_class,
        }
    }
}

/// `A`, …, `Z`, `AA`, `AB`, …
pub fn class_letters(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

/// Conjugacy classes of a [`SmallGroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub classes: Vec<Vec<usize>>,
    pub names: Vec<String>,
    pub representatives: Vec<usize>,
    pub sizes: Vec<u64>,
    pub centralizer_orders: Vec<u64>,
    pub element_orders: Vec<u64>,
    pub inverse: Vec<usize>,
    /// Class index of every element.
    pub element_class: Vec<usize>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class<E: GroupElement>(&self, g: &SmallGroup<E>, c: usize, k: u64) -> usize {
        let rep = self.representatives[c];
        let mut acc = g.identity_index();
        for _ in 0..k % self.element_orders[c] {
            acc = g.mul(acc, rep);
        }
        self.element_class[acc]
    }
}

/// Number of tuples `(g_1, …, g_m)` with `g_i` in `classes[i]` and
/// `g_1⋯g_m = target`.
pub fn count_tuples<E: GroupElement>(
    g: &SmallGroup<E>,
    cd: &ClassData,
    classes: &[usize],
    target: usize,
) -> Result<u128> {
    let (last, init) = classes
        .split_last()
        .ok_or_else(|| Error::Precondition("at least one class is required".into()))?;
    let mut dist = vec![0u128; g.order()];
    dist[g.identity_index()] = 1;
    for &c in init {
        let mut next = vec![0u128; g.order()];
        for (x, &cnt) in dist.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            for &y in &cd.classes[c] {
                next[g.mul(x, y)] += cnt;
            }
        }
        dist = next;
    }
    Ok(cd.classes[*last]
        .iter()
        .map(|&y| dist[g.mul(target, g.inverse(y))])
        .sum())
}

/// True iff `x` is the identity or is inverted by some involution.
pub fn is_strongly_real<E: GroupElement>(g: &SmallGroup<E>, x: usize) -> bool {
    if x == g.identity_index() {
        return true;
    }
    let xi = g.inverse(x);
    g.involutions()
        .into_iter()
        .any(|t| g.mul(g.mul(t, x), t) == xi)
}

/// Involution widths computed by breadth-first search over products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthReport {
    pub class_names: Vec<String>,
    pub class_widths: Vec<u32>,
    pub element_class: Vec<usize>,
    pub group_width: u32,
}

impl WidthReport {
    pub fn element_width(&self, i: usize) -> u32 {
        self.class_widths[self.element_class[i]]
    }
}

/// Width of every element: the least `k` with the element a product of `k`
/// involutions. Width is a class function, so only class representatives
/// are extended; `r` has width `≤ k` iff `r·t` has width `≤ k − 1` for some
/// involution `t`.
pub fn involution_width_oracle<E: GroupElement>(
    g: &SmallGroup<E>,
    cd: &ClassData,
) -> Result<WidthReport> {
    let invs = g.involutions();
    if invs.is_empty() && g.order() > 1 {
        return Err(Error::NotInvolutionGenerated);
    }
    let unset = u32::MAX;
    let mut widths = vec![unset; cd.len()];
    widths[cd.element_class[g.identity_index()]] = 0;
    let mut level = 0;
    loop {
        level += 1;
        let snapshot = widths.clone();
        let mut changed = false;
        for c in 0..cd.len() {
            if snapshot[c] != unset {
                continue;
            }
            let rep = cd.representatives[c];
            if invs
                .iter()
                .any(|&t| snapshot[cd.element_class[g.mul(rep, t)]] < level)
            {
                widths[c] = level;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if widths.contains(&unset) {
        return Err(Error::NotInvolutionGenerated);
    }
    Ok(WidthReport {
        class_names: cd.names.clone(),
        group_width: widths.iter().copied().max().unwrap_or(0),
        class_widths: widths,
        element_class: cd.element_class.clone(),
    })
}
