use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cutting::piece_matrix;
use crate::exactalg::{in_span, qf, Field, Matrix, Q};
use crate::matchcore::{bt_word, Arc, JordanType, Letter, Matching};

use super::structure::valid_splits;
use super::{ClosureDecomposition, ClosureError};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Condition {
    /// V_i is the coordinate subspace fixed by the cell at split index i.
    SplitCoordinate { i: usize },
    /// X^k V_term ⊆ V_{init−1}, k = arcs within the arc.
    UnderArc { arc: (usize, usize), k: usize },
    /// X^{k+1} V_term(parent) ⊆ V_term(child), k = arcs between the two ends.
    ParentChild { child: (usize, usize), parent: (usize, usize), k: usize },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub cut: Vec<(usize, usize)>,
    pub sample: usize,
    pub condition: Condition,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ConditionReport {
    pub flags_checked: usize,
    pub violations: Vec<Violation>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pair(a: &Arc) -> (usize, usize) {
    (a.init, a.term)
}

fn power_in<F: Field>(jt: &JordanType, cols: &[Vec<F>], from: usize, k: usize, into: usize) -> Result<bool, ClosureError> {
    for c in &cols[..from] {
        let mut v = c.clone();
        for _ in 0..k {
            v = jt.apply_x(&v);
        }
        if !in_span(&v, &cols[..into])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conditions every flag in the closure of the cell of `m` satisfies,
/// evaluated on one flag.
pub fn flag_conditions<F: Field>(m: &Matching, jt: &JordanType, g: &Matrix<F>) -> Result<Vec<Condition>, ClosureError> {
    let mut bad = Vec::new();
    let cols = g.columns();
    let word = bt_word(m, jt)?;
    for i in valid_splits(m) {
        let t = (1..=i).filter(|&p| word.at(p) == Letter::T).count();
        let b = i - t;
        let coords: Vec<usize> = (0..t).chain(jt.n..jt.n + b).collect();
        let ok = coords.iter().all(|&r| {
            let e: Vec<F> = (0..jt.big_n).map(|x| if x == r { F::one() } else { F::zero() }).collect();
            in_span(&e, &cols[..i]).unwrap_or(false)
        });
        if !ok {
            bad.push(Condition::SplitCoordinate { i });
        }
    }
    for a in m.arcs() {
        let k = m.nested_count(a);
        if !power_in(jt, &cols, a.term, k, a.init - 1)? {
            bad.push(Condition::UnderArc { arc: pair(a), k });
        }
        if let Some(p) = m.parent(a) {
            let k = (p.term - a.term - 1) / 2;
            if !power_in(jt, &cols, p.term, k + 1, a.term)? {
                bad.push(Condition::ParentChild { child: pair(a), parent: pair(&p), k });
            }
        }
    }
    Ok(bad)
}

/// Evaluate the closure conditions of the cell on `samples` random points
/// of every piece.
pub fn check_necessary_conditions(
    dec: &ClosureDecomposition,
    samples: usize,
    seed: u64,
) -> Result<ConditionReport, ClosureError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ConditionReport::default();
    for p in &dec.pieces {
        for s in 0..samples {
            let u: Vec<Q> = (0..p.remaining().len())
                .map(|_| qf(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                .collect();
            let g = piece_matrix(p, &u)?;
            report.flags_checked += 1;
            for c in flag_conditions(&dec.m, &dec.jt, &g)? {
                report.violations.push(Violation { cut: p.cut.iter().map(pair).collect(), sample: s, condition: c });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::closure_decomposition;

    #[test]
    fn two_two_nested_passes() {
        let jt = JordanType::new(2, 4).unwrap();
        let m = Matching::parse(4, "(1,4)(2,3)").unwrap();
        let d = closure_decomposition(&m, &jt).unwrap();
        let r = check_necessary_conditions(&d, 10, 7).unwrap();
        assert!(r.passed());
        assert_eq!(r.flags_checked, 40);
    }

    #[test]
    fn excluded_word_fails_under_arc() {
        let jt = JordanType::new(2, 4).unwrap();
        let m = Matching::parse(4, "(1,2)(3,4)").unwrap();
        let bad = flag_conditions(&m, &jt, &Matrix::<Q>::identity(4)).unwrap();
        assert!(bad.contains(&Condition::UnderArc { arc: (1, 2), k: 1 }));
    }
}
