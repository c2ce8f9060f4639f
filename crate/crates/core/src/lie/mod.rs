//! Character degrees and values for unitary groups.

mod dual;
mod numbers;
mod partition;
mod table1;
mod weil;

pub use dual::{
    d2_target, d2_unipotent_closed, d3_target, d3_unipotent_closed, reconcile, transvection,
    AlphaCandidate, AlphaSelection, DualPair, ReconciliationLine, ReconciliationReport,
};
pub use numbers::{gu_order, ppd, su_order, torus_order_unitary};
pub use partition::{partitions, IntPoly, Partition, Variant};
pub use table1::{row_ids, table1_degree, table1_row, table1_value, Table1Row, TABLE1_ROWS};
pub use weil::{weil_chi, weil_zeta, weil_zeta_dim, WeilContext};
