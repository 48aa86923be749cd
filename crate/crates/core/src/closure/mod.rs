//! Closure decompositions, necessary conditions, the χ/φ structure maps and
//! two certifiers for closure membership.

mod checks;
mod curves;
mod numeric;
mod structure;

pub use checks::{check_necessary_conditions, ConditionReport, Violation};
pub use curves::{synthesize_limit_curve, verify_limit_curve, PolyCurve};
pub use numeric::{curve_distance, flag_distance, numeric_infimum, NumericBudget};
pub use structure::{
    chi_embed, chi_restrict, chi_split, is_valid_split, phi_arrangement, phi_embed, phi_raw, phi_target_matching,
    t_matrix, valid_splits, SplitData,
};

use thiserror::Error;

use crate::cellgeom::CellError;
use crate::cutting::{labeled_cut, LabeledPiece};
use crate::exactalg::AlgError;
use crate::matchcore::{bt_word, check_arc_bound, Arc, BTWord, JordanType, MatchError, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error(transparent)]
    Match(#[from] MatchError),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("{0} is not a valid split index")]
    InvalidSplitIndex(usize),
    #[error("phi needs even N, got {0}")]
    OddN(usize),
    #[error("no limit curve found: {0}")]
    CurveNotFound(String),
    #[error("curve is degenerate: minor vector {0} vanishes identically")]
    DegenerateCurve(usize),
}

/// Subset of arcs encoded as a bitmask over `m.arcs()`.
pub fn subset_arcs(m: &Matching, mask: usize) -> Vec<Arc> {
    m.arcs()
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, a)| *a)
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureDecomposition {
    pub m: Matching,
    pub jt: JordanType,
    /// Indexed by the bitmask of the cut set.
    pub pieces: Vec<LabeledPiece>,
}

pub fn closure_decomposition(m: &Matching, jt: &JordanType) -> Result<ClosureDecomposition, ClosureError> {
    check_arc_bound(m, jt)?;
    let pieces = (0..1usize << m.len())
        .map(|mask| labeled_cut(m, &subset_arcs(m, mask), jt))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClosureDecomposition { m: m.clone(), jt: *jt, pieces })
}

/// Words obtained by swapping the end letters of every subset of arcs.
pub fn swap_candidates(m: &Matching, jt: &JordanType) -> Result<Vec<BTWord>, ClosureError> {
    let w = bt_word(m, jt)?;
    Ok((0..1usize << m.len())
        .map(|mask| {
            let mut x = w.clone();
            for a in subset_arcs(m, mask) {
                x.0.swap(a.init - 1, a.term - 1);
            }
            x
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_two_candidates() {
        let jt = JordanType::new(2, 4).unwrap();
        let m = Matching::parse(4, "(1,2)(3,4)").unwrap();
        let mut w: Vec<String> = swap_candidates(&m, &jt).unwrap().iter().map(|x| x.to_string()).collect();
        w.sort();
        assert_eq!(w, vec!["BTBT", "BTTB", "TBBT", "TBTB"]);
        let d = closure_decomposition(&m, &jt).unwrap();
        assert_eq!(d.pieces.len(), 4);
        let e = closure_decomposition(&Matching::empty(3), &JordanType::new(1, 3).unwrap()).unwrap();
        assert_eq!(e.pieces.len(), 1);
    }
}
