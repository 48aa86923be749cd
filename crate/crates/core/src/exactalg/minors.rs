use super::matrix::Matrix;
use super::poly::Poly;
use super::scalar::{Field, Ring, Q};
use super::AlgError;

/// Row subsets of {0..n} of size k in lexicographic order.
pub fn row_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for r in start..n {
            if n - r < k - cur.len() {
                break;
            }
            cur.push(r);
            go(r + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Minors of all leading column blocks at once: entry `i-1` holds the
/// i×i minors of the first i columns, rows in lexicographic subset order.
/// Laplace expansion along the last column, memoised on row bitmasks.
pub fn all_minor_vectors<R: Ring>(g: &Matrix<R>) -> Vec<Vec<R>> {
    let n = g.rows();
    let upto = g.cols().min(n);
    assert!(n < 24, "minor memo is indexed by row bitmask");
    let mut memo: Vec<Option<R>> = vec![None; 1 << n];
    memo[0] = Some(R::one());
    let mut out = Vec::with_capacity(upto);
    for k in 1..=upto {
        let mut level = Vec::new();
        for s in row_subsets(n, k) {
            let mut acc = R::zero();
            let mask: usize = s.iter().map(|&r| 1usize << r).sum();
            for (pos, &r) in s.iter().enumerate() {
                let entry = &g[(r, k - 1)];
                if entry.is_zero() {
                    continue;
                }
                let sub = memo[mask & !(1 << r)].as_ref().expect("smaller minors first");
                if sub.is_zero() {
                    continue;
                }
                let term = entry.clone() * sub.clone();
                acc = if (pos + k - 1) % 2 == 0 { acc + term } else { acc - term };
            }
            memo[mask] = Some(acc.clone());
            level.push(acc);
        }
        out.push(level);
    }
    out
}

pub fn minor_vector<R: Ring>(g: &Matrix<R>, i: usize) -> Result<Vec<R>, AlgError> {
    if i == 0 || i > g.cols() || i > g.rows() {
        return Err(AlgError::DimensionMismatch { expected: g.cols(), found: i });
    }
    let sub = Matrix::from_columns(&g.columns()[..i]);
    Ok(all_minor_vectors(&sub).pop().unwrap())
}

/// Coefficients of the top degree present, normalised so the first nonzero
/// entry is 1: the projective limit of the vector as t → ∞.
pub fn leading_direction(v: &[Poly<Q>]) -> Result<Vec<Q>, AlgError> {
    let d = v.iter().filter_map(|p| p.degree()).max().ok_or(AlgError::ZeroVector)?;
    let top: Vec<Q> = v.iter().map(|p| p.coeff(d)).collect();
    Ok(normalize(&top))
}

pub fn normalize<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv().unwrap();
            v.iter().map(|x| x.clone() * inv.clone()).collect()
        }
    }
}

/// a = c·b for some nonzero c (both vectors nonzero).
pub fn projectively_equal<F: Field>(a: &[F], b: &[F]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (Some(i), Some(j)) = (a.iter().position(|x| !x.is_zero()), b.iter().position(|x| !x.is_zero())) else {
        return false;
    };
    if i != j {
        return false;
    }
    a.iter()
        .zip(b)
        .all(|(x, y)| x.clone() * b[i].clone() == y.clone() * a[i].clone())
}
