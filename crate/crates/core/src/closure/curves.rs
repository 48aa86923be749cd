use std::fmt;

use crate::cellgeom::{build_template, instantiate};
use crate::cutting::{labeled_cut, piece_matrix, LabeledPiece};
use crate::exactalg::{
    all_minor_vectors, canonical_reduce, leading_direction, projectively_equal, Field, Matrix, Poly, RatFunc, Ring, Q,
};
use crate::matchcore::{Arc, JordanType, Matching};

use super::structure::{chi_restrict, chi_split, phi_raw, t_matrix, valid_splits};
use super::ClosureError;

/// One polynomial in t per arc of the cell's matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyCurve {
    pub arcs: Vec<Arc>,
    pub entries: Vec<Poly<Q>>,
}

impl PolyCurve {
    pub fn constant(m: &Matching, v: &[Q]) -> Self {
        PolyCurve { arcs: m.arcs().to_vec(), entries: v.iter().cloned().map(Poly::constant).collect() }
    }

    pub fn eval(&self, t: &Q) -> Vec<Q> {
        self.entries.iter().map(|p| p.eval(t)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }
}

impl fmt::Display for PolyCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().zip(&self.entries).map(|(a, p)| format!("{a} -> {p}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

type RF = RatFunc<Q>;

fn rf_const(c: &Q) -> RF {
    RatFunc::from_poly(Poly::constant(c.clone()))
}

/// Exact order of growth and leading coefficient of a rational function.
fn rf_lead(r: &RF) -> Option<(i64, Q)> {
    let n = r.num();
    let d = r.den();
    let dn = n.degree()? as i64;
    let dd = d.degree().unwrap() as i64;
    Some((dn - dd, n.leading().unwrap().clone() * d.leading().unwrap().inv().unwrap()))
}

fn rf_leading_direction(v: &[RF]) -> Option<Vec<Q>> {
    let leads: Vec<Option<(i64, Q)>> = v.iter().map(rf_lead).collect();
    let top = leads.iter().flatten().map(|(d, _)| *d).max()?;
    let dir: Vec<Q> = leads
        .iter()
        .map(|l| match l {
            Some((d, c)) if *d == top => c.clone(),
            _ => <Q as Ring>::zero(),
        })
        .collect();
    Some(crate::exactalg::normalize(&dir))
}

fn limit_matches<R: Ring>(
    g: &Matrix<R>,
    target: &Matrix<Q>,
    lead: impl Fn(&[R]) -> Option<Vec<Q>>,
) -> Result<bool, ClosureError> {
    let got = all_minor_vectors(g);
    let want = all_minor_vectors(target);
    for (i, (a, b)) in got.iter().zip(&want).enumerate() {
        let dir = lead(a).ok_or(ClosureError::DegenerateCurve(i + 1))?;
        if !projectively_equal(&dir, b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact check that f_M(v(t)) tends to the piece matrix as t → ∞, one
/// Plücker vector per flag step.
pub fn verify_limit_curve(
    m: &Matching,
    jt: &JordanType,
    curve: &PolyCurve,
    piece: &LabeledPiece,
    target: &[Q],
) -> Result<bool, ClosureError> {
    let ct = build_template(m, jt)?;
    let g = instantiate(&ct, &curve.entries)?;
    let t = piece_matrix(piece, target)?;
    limit_matches(&g, &t, |v| leading_direction(v).ok())
}

fn verify_rational(m: &Matching, jt: &JordanType, v: &[RF], piece: &LabeledPiece, target: &[Q]) -> Result<bool, ClosureError> {
    let ct = build_template(m, jt)?;
    let g = instantiate(&ct, v)?;
    let t = piece_matrix(piece, target)?;
    limit_matches(&g, &t, rf_leading_direction)
}

fn verify_rational_target(m: &Matching, jt: &JordanType, v: &[RF], target: &Matrix<Q>) -> Result<bool, ClosureError> {
    let ct = build_template(m, jt)?;
    let g = instantiate(&ct, v)?;
    limit_matches(&g, target, rf_leading_direction)
}

/// Read cell parameters off a canonical matrix, insisting it is exactly
/// f_M at those parameters.
fn cell_params<F: Field>(m: &Matching, jt: &JordanType, c: &Matrix<F>) -> Option<Vec<F>> {
    let ct = build_template(m, jt).ok()?;
    let v: Vec<F> = m
        .arcs()
        .iter()
        .enumerate()
        .map(|(k, a)| c[(ct.r0[k], a.init - 1)].clone())
        .collect();
    (instantiate(&ct, &v).ok()? == *c).then_some(v)
}

/// Z_a = [[0, −a²I], [I, aJ]] on the inner space, J the shift on the top block.
fn z_matrix<R: Ring>(a: &R, inner: usize) -> Matrix<R> {
    let h = inner / 2;
    let mut z = Matrix::zeros(inner, inner);
    let a2 = a.clone() * a.clone();
    for r in 0..h {
        z[(r, h + r)] = -a2.clone();
        z[(h + r, r)] = R::one();
        if r + 1 < h {
            z[(h + r, h + r + 1)] = a.clone();
        }
    }
    z
}

/// Inner flag of a target whose first column is a·e_1 + e_{h+1}: undo T_a,
/// clear the e_{h+1} row with the first column, keep the middle block.
fn phi_inner_target(target: &Matrix<Q>, a: Option<&Q>) -> Result<Matrix<Q>, ClosureError> {
    let big_n = target.rows();
    let h = big_n / 2;
    let mut p = match a {
        Some(a) => t_matrix(&(-a.clone()), big_n).mul(target)?,
        None => target.clone(),
    };
    let (pivot_row, skip) = if a.is_some() { (h, h - 1) } else { (0, big_n - 1) };
    for c in 1..big_n {
        let f = p[(pivot_row, c)].clone();
        if !f.is_zero() {
            for r in 0..big_n {
                let d = f.clone() * p[(r, 0)].clone();
                p[(r, c)] = p[(r, c)].clone() - d;
            }
        }
    }
    let rows: Vec<usize> = (0..big_n).filter(|&r| r != pivot_row && r != skip).collect();
    if (1..big_n - 1).any(|c| !p[(skip, c)].is_zero()) {
        return Err(ClosureError::CurveNotFound("target is not in the image of phi".into()));
    }
    let inner = Matrix::from_rows(rows.iter().map(|&r| (1..big_n - 1).map(|c| p[(r, c)].clone()).collect()).collect());
    Ok(canonical_reduce(&inner)?)
}

/// Curve with exact rational-function entries, aligned with `m.arcs()`,
/// tending to the flag `target` (a canonical matrix in the piece's cell).
fn synth(m: &Matching, jt: &JordanType, cut: &[Arc], target: &Matrix<Q>) -> Result<Vec<RF>, ClosureError> {
    let fail = |why: &str| ClosureError::CurveNotFound(format!("{m} cut {cut:?}: {why}"));
    if cut.is_empty() {
        let v = cell_params(m, jt, target).ok_or_else(|| fail("target is not in the cell"))?;
        return Ok(v.iter().map(rf_const).collect());
    }
    let big_n = m.size();
    if let Some(&i) = valid_splits(m).iter().find(|&&i| i < big_n) {
        let sp = chi_split(m, jt, i)?;
        let (tl, tr) = chi_restrict(target, &sp);
        let cl: Vec<Arc> = cut.iter().filter(|a| a.term <= i).copied().collect();
        let cr: Vec<Arc> = cut.iter().filter(|a| a.init > i).map(|a| Arc::new(a.init - i, a.term - i)).collect();
        let mut v = synth(&sp.m_left, &sp.jt_left, &cl, &canonical_reduce(&tl)?)?;
        v.extend(synth(&sp.m_right, &sp.jt_right, &cr, &canonical_reduce(&tr)?)?);
        return Ok(v);
    }
    // no split below N: (1,N) is an arc and M is perfect
    let outer = Arc::new(1, big_n);
    debug_assert!(m.contains(&outer));
    let inner = m.relabel(big_n - 2, -1, |a| *a != outer);
    let inner_jt = JordanType::new(jt.n - 1, big_n - 2)?;
    let inner_cut: Vec<Arc> = cut.iter().filter(|a| **a != outer).map(|a| Arc::new(a.init - 1, a.term - 1)).collect();
    let inner_ct = build_template(&inner, &inner_jt)?;
    if !cut.contains(&outer) {
        let a0 = target[(0, 0)].clone();
        let h = synth(&inner, &inner_jt, &inner_cut, &phi_inner_target(target, Some(&a0))?)?;
        let g = instantiate(&inner_ct, &h)?;
        let f = canonical_reduce(&phi_raw(Some(&rf_const(&a0)), &g, jt)?)?;
        return cell_params(m, jt, &f).ok_or_else(|| fail("finite-a image left the cell"));
    }
    let h = synth(&inner, &inner_jt, &inner_cut, &phi_inner_target(target, None)?)?;
    let t = Poly::<Q>::t();
    let one = Poly::<Q>::one();
    let candidates = [t.clone(), t.clone() * t.clone(), t.clone() + one.clone(), (t.clone() * t.clone() * t.clone())];
    // A vanishing inner parameter leaves the twisted curve on the boundary;
    // nudging every inner entry by t^-k keeps its limit and moves it inside.
    for k in 0..4 {
        let nudge = RatFunc::new(if k == 0 { Poly::zero() } else { one.clone() }, Poly::monomial(Q::one(), k));
        let hk: Vec<RF> = h.iter().map(|x| x.clone() + nudge.clone()).collect();
        let hm = instantiate(&inner_ct, &hk)?;
        for a in &candidates {
            let a = RatFunc::from_poly(a.clone());
            let g = z_matrix(&a, big_n - 2).mul(&hm)?;
            let Ok(f) = canonical_reduce(&phi_raw(Some(&a), &g, jt)?) else {
                continue;
            };
            if let Some(v) = cell_params(m, jt, &f) {
                if k == 0 || verify_rational_target(m, jt, &v, target)? {
                    return Ok(v);
                }
            }
        }
    }
    Err(fail("twisted inner curve never entered the cell"))
}

/// A polynomial curve in the cell of `m` whose limit is the point of
/// cut(cell, A) with parameters `target` (indexed by M − A in M's order).
pub fn synthesize_limit_curve(
    m: &Matching,
    jt: &JordanType,
    cut: &[Arc],
    target: &[Q],
) -> Result<PolyCurve, ClosureError> {
    let piece = labeled_cut(m, cut, jt)?;
    if target.len() != piece.remaining().len() {
        return Err(crate::cellgeom::CellError::MissingParameter {
            expected: piece.remaining().len(),
            found: target.len(),
        }
        .into());
    }
    let v = synth(m, jt, &piece.cut, &piece_matrix(&piece, target)?)?;
    if !verify_rational(m, jt, &v, &piece, target)? {
        return Err(ClosureError::CurveNotFound(format!("{m} cut {cut:?}: rational curve has the wrong limit")));
    }
    let curve = PolyCurve { arcs: m.arcs().to_vec(), entries: v.iter().map(|r| r.polynomial_part()).collect() };
    if curve.max_degree() > 2 * m.len() {
        return Err(ClosureError::CurveNotFound(format!("{m} cut {cut:?}: degree {} exceeds 2|M|", curve.max_degree())));
    }
    if verify_limit_curve(m, jt, &curve, &piece, target)? {
        Ok(curve)
    } else {
        let shown: Vec<String> = v.iter().map(|r| r.to_string()).collect();
        Err(ClosureError::CurveNotFound(format!("{m} cut {cut:?}: polynomial part fails; rational curve {shown:?}")))
    }
}
