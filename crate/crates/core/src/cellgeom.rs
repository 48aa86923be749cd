//! The symbolic cell matrix f_M and exact structural checks on flags.

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{in_span, is_canonical, AlgError, Field, Matrix, Ring};
use crate::matchcore::{matching_permutation, Arc, JordanType, Letter, MatchError, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error(transparent)]
    Match(#[from] MatchError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("expected {expected} parameters, got {found}")]
    MissingParameter { expected: usize, found: usize },
}

/// Variable placement: `row`/`col` are 1-based, `arc` indexes `m.arcs()`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Slot {
    pub row: usize,
    pub col: usize,
    pub arc: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellTemplate {
    pub jt: JordanType,
    pub m: Matching,
    /// Pivot row of each column, 1-based.
    pub w: Vec<usize>,
    pub slots: Vec<Slot>,
    /// Per arc: number of top-block pivots strictly left of its init.
    pub r0: Vec<usize>,
}

/// One value per arc, in the matching's arc order.
pub type ParamVector<F> = Vec<F>;

pub fn build_template(m: &Matching, jt: &JordanType) -> Result<CellTemplate, CellError> {
    let prof = matching_permutation(m, jt)?;
    let mut r0 = Vec::with_capacity(m.len());
    let mut slots = Vec::new();
    for a in m.arcs() {
        let tops = (1..a.init).filter(|&i| prof.bt.at(i) == Letter::T).count();
        r0.push(tops);
        for (j, anc) in m.ancestors(a)?.iter().enumerate() {
            slots.push(Slot { row: tops + j + 1, col: a.init, arc: m.index_of(anc).unwrap() });
        }
    }
    Ok(CellTemplate { jt: *jt, m: m.clone(), w: prof.w, slots, r0 })
}

impl CellTemplate {
    pub fn size(&self) -> usize {
        self.jt.big_n
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn permutation_matrix<R: Ring>(&self) -> Matrix<R> {
        let w0: Vec<usize> = self.w.iter().map(|r| r - 1).collect();
        Matrix::permutation(&w0)
    }

    /// Structurally nonzero rows of a column (pivot included), 1-based.
    pub fn column_support(&self, col: usize) -> Vec<usize> {
        let mut rows: Vec<usize> = self.slots.iter().filter(|s| s.col == col).map(|s| s.row).collect();
        rows.push(self.w[col - 1]);
        rows.sort();
        rows
    }
}

/// f_M(v): permutation part plus parameters in their slots. Works over any
/// ring, so polynomial curves instantiate directly.
pub fn instantiate<R: Ring>(ct: &CellTemplate, v: &[R]) -> Result<Matrix<R>, CellError> {
    if v.len() != ct.m.len() {
        return Err(CellError::MissingParameter { expected: ct.m.len(), found: v.len() });
    }
    let mut g = ct.permutation_matrix::<R>();
    for s in &ct.slots {
        g[(s.row - 1, s.col - 1)] = v[s.arc].clone();
    }
    Ok(g)
}

pub fn verify_canonical<R: Ring>(g: &Matrix<R>) -> bool {
    is_canonical(g)
}

/// X·c_i ∈ span(c_1..c_i) for every i.
pub fn verify_springer<F: Field>(g: &Matrix<F>, jt: &JordanType) -> Result<bool, CellError> {
    if g.rows() != jt.big_n || !g.is_square() {
        return Err(AlgError::DimensionMismatch { expected: jt.big_n, found: g.rows() }.into());
    }
    if !crate::exactalg::is_invertible(g) {
        return Err(AlgError::Singular.into());
    }
    let cols = g.columns();
    for i in 0..cols.len() {
        if !in_span(&jt.apply_x(&cols[i]), &cols[..=i])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If V_i is spanned by standard basis vectors, their 1-based indices.
pub fn prefix_span_basis<R: Ring>(g: &Matrix<R>, i: usize) -> Option<Vec<usize>> {
    let support: Vec<usize> = (0..g.rows())
        .filter(|&r| (0..i).any(|c| !g[(r, c)].is_zero()))
        .map(|r| r + 1)
        .collect();
    // canonical columns are independent, so V_i ⊆ span(e_support) with equality iff sizes agree
    (support.len() == i).then_some(support)
}

/// The three column clauses for a canonical Springer representative.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ColumnClauses {
    pub top_columns_pure: bool,
    pub bottom_pivots_consecutive: bool,
    pub bottom_shift_relation: bool,
}

pub fn column_clauses<F: Field>(g: &Matrix<F>, jt: &JordanType) -> Result<ColumnClauses, CellError> {
    let n = jt.n;
    let piv = g.lowest_nonzero_rows().ok_or(AlgError::Singular)?;
    let cols = g.columns();
    let e = |r: usize| -> Vec<F> { (0..g.rows()).map(|i| if i == r { F::one() } else { F::zero() }).collect() };
    let mut out = ColumnClauses { top_columns_pure: true, bottom_pivots_consecutive: true, bottom_shift_relation: true };
    for k in 0..cols.len() {
        let p = piv[k] + 1;
        if p <= n {
            let pure = cols[k] == e(p - 1);
            let earlier = (1..p).all(|r| cols[..k].contains(&e(r - 1)));
            out.top_columns_pure &= pure && earlier;
        } else {
            let earlier: Vec<usize> = piv[..k].iter().map(|r| r + 1).collect();
            out.bottom_pivots_consecutive &= (n + 1..p).all(|r| earlier.contains(&r));
            if p >= n + 2 {
                if let Some(kp) = piv.iter().position(|&r| r + 1 == p - 1) {
                    let xg = jt.apply_x(&cols[k]);
                    let diff: Vec<F> = xg.iter().zip(&cols[kp]).map(|(a, b)| a.clone() - b.clone()).collect();
                    let in_top = diff[n..].iter().all(|x| x.is_zero());
                    out.bottom_shift_relation &= in_top && in_span(&diff, &cols[..k])?;
                }
            }
        }
    }
    Ok(out)
}

/// For the j-th arc α_j (by init) strictly inside α: X^j c_{init α_j} − c_{init α}
/// lies in span(e_1..e_{r0(α)}). Returns the first failing (α, α_j).
pub fn nested_column_identity<F: Field>(ct: &CellTemplate, g: &Matrix<F>) -> Option<(Arc, Arc)> {
    let cols = g.columns();
    for (ai, a) in ct.m.arcs().iter().enumerate() {
        let inner: Vec<&Arc> = ct.m.arcs().iter().filter(|b| a.covers(b)).collect();
        for (j, b) in inner.iter().enumerate() {
            let mut v = cols[b.init - 1].clone();
            for _ in 0..=j {
                v = ct.jt.apply_x(&v);
            }
            let ok = v
                .iter()
                .zip(&cols[a.init - 1])
                .enumerate()
                .all(|(r, (x, y))| r < ct.r0[ai] || *x == *y);
            if !ok {
                return Some((*a, **b));
            }
        }
    }
    None
}
