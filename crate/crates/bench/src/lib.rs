//! Fixtures shared by the benchmarks.

use springer_cells::exactalg::qf;
use springer_cells::matchcore::enumerate_matchings;
use springer_cells::{JordanType, Matching, Q};

/// Every cell of type (n, N − n) for the balanced n.
pub fn balanced_cells(big_n: usize) -> (JordanType, Vec<Matching>) {
    let jt = JordanType::new(big_n / 2, big_n).expect("valid type");
    (jt, enumerate_matchings(&jt))
}

/// Deterministic nonzero parameters 1/2, 2/3, 3/4, ...
pub fn params(k: usize) -> Vec<Q> {
    (1..=k as i64).map(|i| qf(i, i + 1)).collect()
}
