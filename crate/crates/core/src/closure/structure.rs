use crate::exactalg::{canonical_reduce, AlgError, Field, Matrix, Ring};
use crate::matchcore::{bt_word, JordanType, Letter, MatchError, Matching};

use super::ClosureError;

/// A split of {1..N} at i into a left block on {1..i} and a right block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitData {
    pub i: usize,
    pub m_left: Matching,
    pub m_right: Matching,
    pub jt_left: JordanType,
    pub jt_right: JordanType,
}

/// i ends a parentless arc, or lies on no arc.
pub fn is_valid_split(m: &Matching, i: usize) -> bool {
    if i == 0 || i > m.size() {
        return false;
    }
    match m.arc_at(i) {
        None => !m.arcs().iter().any(|a| a.contains_point(i)),
        Some(a) => a.term == i && m.parent(&a).is_none(),
    }
}

pub fn valid_splits(m: &Matching) -> Vec<usize> {
    (1..=m.size()).filter(|&i| is_valid_split(m, i)).collect()
}

pub fn chi_split(m: &Matching, jt: &JordanType, i: usize) -> Result<SplitData, ClosureError> {
    if !is_valid_split(m, i) {
        return Err(ClosureError::InvalidSplitIndex(i));
    }
    let w = bt_word(m, jt)?;
    let tops = (1..=i).filter(|&p| w.at(p) == Letter::T).count();
    let big_n = m.size();
    Ok(SplitData {
        i,
        m_left: m.relabel(i, 0, |a| a.term <= i),
        m_right: m.relabel(big_n - i, -(i as isize), |a| a.init > i),
        jt_left: JordanType::new(tops, i)?,
        jt_right: JordanType::new(jt.n - tops, big_n - i)?,
    })
}

/// Row placement of the interleaving: left rows first, then right rows, in
/// output order (top of left, top of right, bottom of left, bottom of right).
fn chi_rows(split: &SplitData) -> (Vec<usize>, Vec<usize>) {
    let t = split.jt_left.n;
    let b = split.jt_left.bottom();
    let tr = split.jt_right.n;
    let br = split.jt_right.bottom();
    let n = t + tr;
    let left: Vec<usize> = (0..t).chain(n..n + b).collect();
    let right: Vec<usize> = (t..n).chain(n + b..n + b + br).collect();
    (left, right)
}

pub fn chi_embed<R: Ring>(gl: &Matrix<R>, gr: &Matrix<R>, split: &SplitData) -> Result<Matrix<R>, ClosureError> {
    let (il, ir) = (split.jt_left.big_n, split.jt_right.big_n);
    for (g, d) in [(gl, il), (gr, ir)] {
        if g.rows() != d || g.cols() != d {
            return Err(AlgError::DimensionMismatch { expected: d, found: g.rows() }.into());
        }
    }
    let (left, right) = chi_rows(split);
    let mut out = Matrix::zeros(il + ir, il + ir);
    for (r, &orow) in left.iter().enumerate() {
        for c in 0..il {
            out[(orow, c)] = gl[(r, c)].clone();
        }
    }
    for (r, &orow) in right.iter().enumerate() {
        for c in 0..ir {
            out[(orow, il + c)] = gr[(r, c)].clone();
        }
    }
    Ok(out)
}

/// Inverse of `chi_embed` on its image: the two diagonal blocks.
pub fn chi_restrict<R: Ring>(g: &Matrix<R>, split: &SplitData) -> (Matrix<R>, Matrix<R>) {
    let (il, ir) = (split.jt_left.big_n, split.jt_right.big_n);
    let (left, right) = chi_rows(split);
    let mut gl = Matrix::zeros(il, il);
    let mut gr = Matrix::zeros(ir, ir);
    for (r, &orow) in left.iter().enumerate() {
        for c in 0..il {
            gl[(r, c)] = g[(orow, c)].clone();
        }
    }
    for (r, &orow) in right.iter().enumerate() {
        for c in 0..ir {
            gr[(r, c)] = g[(orow, il + c)].clone();
        }
    }
    (gl, gr)
}

fn check_phi_shape(g_rows: usize, g_cols: usize, jt: &JordanType) -> Result<usize, ClosureError> {
    let big_n = jt.big_n;
    if big_n % 2 == 1 {
        return Err(ClosureError::OddN(big_n));
    }
    if jt.n * 2 != big_n {
        return Err(MatchError::BadJordanType { n: jt.n, big_n }.into());
    }
    if g_rows + 2 != big_n || g_cols + 2 != big_n {
        return Err(AlgError::DimensionMismatch { expected: big_n - 2, found: g_rows }.into());
    }
    Ok(big_n / 2)
}

/// The block arrangement for finite a before T_a: inner top rows at
/// 1..h−1, e_h in the last column, e_{h+1} in the first, inner bottom rows
/// at h+2..N (h = N/2).
pub fn phi_arrangement<R: Ring>(g: &Matrix<R>, jt: &JordanType) -> Result<Matrix<R>, ClosureError> {
    let h = check_phi_shape(g.rows(), g.cols(), jt)?;
    let big_n = jt.big_n;
    let mut p = Matrix::zeros(big_n, big_n);
    p[(h - 1, big_n - 1)] = R::one();
    p[(h, 0)] = R::one();
    for r in 0..g.rows() {
        let orow = if r < h - 1 { r } else { r + 2 };
        for c in 0..g.cols() {
            p[(orow, c + 1)] = g[(r, c)].clone();
        }
    }
    Ok(p)
}

/// T_a: e_{j+h} ↦ e_{j+h} + a e_j.
pub fn t_matrix<R: Ring>(a: &R, big_n: usize) -> Matrix<R> {
    let h = big_n / 2;
    let mut t = Matrix::identity(big_n);
    for j in 0..h {
        t[(j, j + h)] = a.clone();
    }
    t
}

/// φ(a, g) before canonicalisation; `None` stands for a = ∞.
pub fn phi_raw<R: Ring>(a: Option<&R>, g: &Matrix<R>, jt: &JordanType) -> Result<Matrix<R>, ClosureError> {
    match a {
        Some(a) => {
            let p = phi_arrangement(g, jt)?;
            Ok(t_matrix(a, jt.big_n).mul(&p)?)
        }
        None => {
            check_phi_shape(g.rows(), g.cols(), jt)?;
            let big_n = jt.big_n;
            let mut d = Matrix::zeros(big_n, big_n);
            d[(0, 0)] = R::one();
            d[(big_n - 1, big_n - 1)] = R::one();
            for r in 0..g.rows() {
                for c in 0..g.cols() {
                    d[(r + 1, c + 1)] = g[(r, c)].clone();
                }
            }
            Ok(d)
        }
    }
}

pub fn phi_embed<F: Field>(a: Option<&F>, g: &Matrix<F>, jt: &JordanType) -> Result<Matrix<F>, ClosureError> {
    Ok(canonical_reduce(&phi_raw(a, g, jt)?)?)
}

/// The matching φ(a, ·) sends the cell of `inner` to, per the word rule
/// B·w'·T (finite a) or T·w'·B (a = ∞).
pub fn phi_target_matching(inner: &Matching, jt: &JordanType, infinite: bool) -> Result<Matching, ClosureError> {
    let inner_jt = JordanType::new(jt.n - 1, jt.big_n - 2)?;
    let w = bt_word(inner, &inner_jt)?;
    let (first, last) = if infinite { (Letter::T, Letter::B) } else { (Letter::B, Letter::T) };
    let mut letters = vec![first];
    letters.extend(w.0);
    letters.push(last);
    Ok(crate::matchcore::word_to_matching(&crate::matchcore::BTWord(letters)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, Q};

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn phi_four() {
        let jt = JordanType::new(2, 4).unwrap();
        let g = qm(&[&[7, 1], &[1, 0]]);
        let f = phi_embed(Some(&q(3)), &g, &jt).unwrap();
        assert_eq!(f, qm(&[&[3, 7, 1, 0], &[0, 3, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let f = phi_embed(None, &g, &jt).unwrap();
        assert_eq!(f, qm(&[&[1, 0, 0, 0], &[0, 7, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
        let f = phi_embed(Some(&q(3)), &Matrix::identity(2), &jt).unwrap();
        assert_eq!(f, qm(&[&[3, 1, 0, 0], &[0, 0, 3, 1], &[1, 0, 0, 0], &[0, 0, 1, 0]]));
        assert!(matches!(phi_embed(None, &Matrix::<Q>::identity(1), &JordanType::new(1, 3).unwrap()), Err(ClosureError::OddN(3))));
    }
}
