use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cellgeom::{build_template, instantiate, CellTemplate};

use crate::exactalg::{q_to_f64, Matrix, Ring, Q};
use crate::matchcore::{JordanType, Matching};

use super::curves::PolyCurve;
use super::ClosureError;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct NumericBudget {
    pub restarts: usize,
    pub max_evals: usize,
    /// Largest |v| explored.
    pub magnitude: f64,
    pub seed: u64,
}

impl Default for NumericBudget {
    fn default() -> Self {
        NumericBudget { restarts: 50, max_evals: 4000, magnitude: 1e12, seed: 0 }
    }
}

/// Orthonormal bases of every column prefix, built incrementally.
fn prefix_bases(cols: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(cols.len());
    for c in cols {
        let scale = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let mut v: Vec<f64> = c.iter().map(|x| x / scale).collect();
        for _ in 0..2 {
            for u in &basis {
                let d: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
                v.iter_mut().zip(u).for_each(|(a, b)| *a -= d * b);
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        basis.push(v.iter().map(|x| x / norm).collect());
    }
    basis
}

/// max_i ‖P_i − Q_i‖_F over the column-prefix flags of two invertible
/// matrices given by their columns.
pub fn flag_distance(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let ua = prefix_bases(a);
    let ub = prefix_bases(b);
    let n = ua.len();
    let dots: Vec<Vec<f64>> = ua
        .iter()
        .map(|x| ub.iter().map(|y| x.iter().zip(y).map(|(p, q)| p * q).sum()).collect())
        .collect();
    let mut cross = 0.0;
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..i {
            cross += dots[i][j] * dots[i][j] + dots[j][i] * dots[j][i];
        }
        cross += dots[i][i] * dots[i][i];
        // ‖P−Q‖² = 2i − 2‖UᵀW‖²
        let d2 = (2.0 * (i + 1) as f64 - 2.0 * cross).max(0.0);
        worst = worst.max(d2.sqrt());
    }
    worst
}

fn columns_f64(g: &Matrix<Q>) -> Vec<Vec<f64>> {
    g.columns().iter().map(|c| c.iter().map(q_to_f64).collect()).collect()
}

fn cell_columns(ct: &CellTemplate, v: &[f64]) -> Vec<Vec<f64>> {
    let n = ct.size();
    let mut cols = vec![vec![0.0; n]; n];
    for (c, &r) in ct.w.iter().enumerate() {
        cols[c][r - 1] = 1.0;
    }
    for s in &ct.slots {
        cols[s.col - 1][s.row - 1] = v[s.arc];
    }
    cols
}

/// Columns of a matrix after exact unit-triangular column reduction: each
/// column is divided by its largest entry and that row is cleared from the
/// later columns. Flags are unchanged and the result is well scaled for f64.
pub fn balanced_columns(g: &Matrix<Q>) -> Vec<Vec<f64>> {
    let mut done: Vec<(usize, Vec<Q>)> = Vec::new();
    for mut v in g.columns() {
        for (p, u) in &done {
            let s = v[*p].clone();
            if !s.is_zero() {
                v.iter_mut().zip(u).for_each(|(a, b)| *a -= &s * b);
            }
        }
        let p = (0..v.len()).fold(0, |k, i| if v[i].abs() > v[k].abs() { i } else { k });
        if !v[p].is_zero() {
            let s = v[p].clone();
            v.iter_mut().for_each(|a| *a /= &s);
        }
        done.push((p, v));
    }
    done.into_iter().map(|(_, v)| v.iter().map(q_to_f64).collect()).collect()
}

/// Distance from the target to f_M at the point v(t) of a curve, computed
/// from the exact matrix.
pub fn curve_distance(
    m: &Matching,
    jt: &JordanType,
    curve: &PolyCurve,
    target: &Matrix<Q>,
    t: &Q,
) -> Result<f64, ClosureError> {
    let ct = build_template(m, jt)?;
    let g = instantiate(&ct, &curve.eval(t))?;
    Ok(flag_distance(&balanced_columns(&g), &balanced_columns(target)))
}

fn nelder_mead(f: &dyn Fn(&[f64]) -> f64, x0: &[f64], step: f64, max_evals: usize, bound: f64) -> (Vec<f64>, f64) {
    let k = x0.len();
    let clamp = |x: &mut Vec<f64>| x.iter_mut().for_each(|v| *v = v.clamp(-bound, bound));
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(k + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..k {
        let mut x = x0.to_vec();
        x[i] += if x[i] + step > bound { -step } else { step };
        let fx = f(&x);
        simplex.push((x, fx));
    }
    let mut evals = k + 1;
    while evals < max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        if simplex[k].1 - simplex[0].1 < 1e-15 && simplex[0].1 < 1e-12 {
            break;
        }
        let centroid: Vec<f64> = (0..k).map(|j| simplex[..k].iter().map(|p| p.0[j]).sum::<f64>() / k as f64).collect();
        let along = |t: f64| -> Vec<f64> {
            let mut x: Vec<f64> = (0..k).map(|j| centroid[j] + t * (simplex[k].0[j] - centroid[j])).collect();
            clamp(&mut x);
            x
        };
        let xr = along(-1.0);
        let fr = f(&xr);
        evals += 1;
        if fr < simplex[0].1 {
            let xe = along(-2.0);
            let fe = f(&xe);
            evals += 1;
            simplex[k] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[k - 1].1 {
            simplex[k] = (xr, fr);
        } else {
            let xc = if fr < simplex[k].1 { along(-0.5) } else { along(0.5) };
            let fc = f(&xc);
            evals += 1;
            if fc < simplex[k].1.min(fr) {
                simplex[k] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for p in simplex.iter_mut().skip(1) {
                    let mut x: Vec<f64> = p.0.iter().zip(&best).map(|(a, b)| b + 0.5 * (a - b)).collect();
                    clamp(&mut x);
                    p.1 = f(&x);
                    p.0 = x;
                }
                evals += k;
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex.swap_remove(0)
}

/// Approximate inf over real v of the flag distance between the target and
/// f_M(v). Parameters are searched as v = sinh(z) so that starts spread
/// across many orders of magnitude.
pub fn numeric_infimum(
    m: &Matching,
    jt: &JordanType,
    target: &Matrix<Q>,
    budget: &NumericBudget,
) -> Result<f64, ClosureError> {
    let ct = build_template(m, jt)?;
    let tc = columns_f64(target);
    let k = m.len();
    let objective = |z: &[f64]| -> f64 {
        let v: Vec<f64> = z.iter().map(|x| x.sinh()).collect();
        flag_distance(&cell_columns(&ct, &v), &tc)
    };
    if k == 0 {
        return Ok(objective(&[]));
    }
    let bound = budget.magnitude.asinh();
    let best = (0..budget.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed.wrapping_mul(0x9e37_79b9).wrapping_add(r as u64));
            let x0: Vec<f64> = (0..k).map(|_| rng.gen_range(-bound..bound)).collect();
            let per = budget.max_evals / 4;
            let (mut x, mut fx) = nelder_mead(&objective, &x0, 1.0, per, bound);
            // restart the simplex around the incumbent with shrinking steps
            for step in [0.5, 0.05, 0.005] {
                let (y, fy) = nelder_mead(&objective, &x, step, per, bound);
                if fy <= fx {
                    x = y;
                    fx = fy;
                }
            }
            fx
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(best)
}
