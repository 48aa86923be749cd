// Test-side reference implementations. They share nothing with the library
// beyond its scalar and matrix containers.
#![allow(dead_code)]

use num_traits::{One, Zero};
use springer_cells::exactalg::q;
use springer_cells::{Arc, JordanType, Matching, Matrix, Q};

pub fn jt(n: usize, big_n: usize) -> JordanType {
    JordanType::new(n, big_n).unwrap()
}

pub fn arcs(list: &[(usize, usize)]) -> Vec<Arc> {
    list.iter().map(|&(i, j)| Arc::new(i, j)).collect()
}

pub fn matching(big_n: usize, list: &[(usize, usize)]) -> Matching {
    Matching::new(big_n, arcs(list)).unwrap()
}

pub fn qm(rows: &[&[i64]]) -> Matrix<Q> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
}

/// All words over {B,T} of length `big_n` with `n` letters T.
pub fn words(n: usize, big_n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for mask in 0u32..1 << big_n {
        if mask.count_ones() as usize == n {
            out.push((0..big_n).map(|i| if mask >> i & 1 == 1 { 'T' } else { 'B' }).collect());
        }
    }
    out.sort();
    out
}

/// A B is closed by the nearest unclosed B to its left when a T arrives.
pub fn word_arcs(w: &str) -> Vec<(usize, usize)> {
    let mut open = Vec::new();
    let mut out = Vec::new();
    for (i, c) in w.chars().enumerate() {
        match c {
            'B' => open.push(i + 1),
            _ => {
                if let Some(b) = open.pop() {
                    out.push((b, i + 1));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn arcs_word(big_n: usize, n: usize, list: &[(usize, usize)]) -> String {
    let mut free_t = n - list.len();
    (1..=big_n)
        .map(|i| {
            if list.iter().any(|a| a.0 == i) {
                'B'
            } else if list.iter().any(|a| a.1 == i) {
                'T'
            } else if free_t > 0 {
                free_t -= 1;
                'T'
            } else {
                'B'
            }
        })
        .collect()
}

pub fn pairs(m: &Matching) -> Vec<(usize, usize)> {
    m.arcs().iter().map(|a| (a.init, a.term)).collect()
}

pub fn pairs_of(v: &[Arc]) -> Vec<(usize, usize)> {
    v.iter().map(|a| (a.init, a.term)).collect()
}

/// Swap the end letters of each cut arc, then pair again.
pub fn cut_by_swap(big_n: usize, n: usize, list: &[(usize, usize)], cut: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut w: Vec<char> = arcs_word(big_n, n, list).chars().collect();
    for &(i, j) in cut {
        w.swap(i - 1, j - 1);
    }
    word_arcs(&w.into_iter().collect::<String>())
}

/// j-th T to row j, j-th B to row n+j.
pub fn word_rows(w: &str, n: usize) -> Vec<usize> {
    let (mut t, mut b) = (0, 0);
    w.chars()
        .map(|c| {
            if c == 'T' {
                t += 1;
                t
            } else {
                b += 1;
                n + b
            }
        })
        .collect()
}

pub fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn columns(g: &Matrix<Q>) -> Vec<Vec<Q>> {
    (0..g.cols()).map(|c| (0..g.rows()).map(|r| g[(r, c)].clone()).collect()).collect()
}

pub fn rank(vs: &[Vec<Q>]) -> usize {
    let mut rows: Vec<Vec<Q>> = vs.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / piv.clone();
                for k in c..width {
                    let d = rows[r][k].clone() * f.clone();
                    rows[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d *= piv.clone();
        for i in c + 1..n {
            let f = a[i][c].clone() / piv.clone();
            for k in c..n {
                let s = a[c][k].clone() * f.clone();
                a[i][k] -= s;
            }
        }
    }
    d
}

/// The nilpotent with blocks e_n → … → e_1 → 0 and e_N → … → e_{n+1} → 0.
pub fn apply_x(n: usize, v: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); v.len()];
    for i in 1..v.len() {
        if i != n {
            out[i - 1] = v[i].clone();
        }
    }
    out
}

/// X maps each prefix span into itself.
pub fn x_stable(g: &Matrix<Q>, n: usize) -> bool {
    let cols = columns(g);
    (1..=cols.len()).all(|i| {
        let mut span = cols[..i].to_vec();
        let base = rank(&span);
        span.push(apply_x(n, &cols[i - 1]));
        base == i && rank(&span) == i
    })
}

/// Lowest nonzero entry of each column is 1 and those rows are empty to the right.
pub fn canonical(g: &Matrix<Q>) -> bool {
    let cols = columns(g);
    let mut used = vec![false; g.rows()];
    for (c, col) in cols.iter().enumerate() {
        let Some(p) = col.iter().rposition(|x| !x.is_zero()) else { return false };
        if !col[p].is_one() || used[p] {
            return false;
        }
        used[p] = true;
        if cols[c + 1..].iter().any(|later| !later[p].is_zero()) {
            return false;
        }
    }
    true
}

/// 1-based row of the lowest nonzero entry per column.
pub fn pivot_rows(g: &Matrix<Q>) -> Vec<usize> {
    columns(g).iter().map(|c| c.iter().rposition(|x| !x.is_zero()).map_or(0, |p| p + 1)).collect()
}

/// Plücker vector of the first i columns.
pub fn plucker(g: &Matrix<Q>, i: usize) -> Vec<Q> {
    let n = g.rows();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != i {
            continue;
        }
        let rows: Vec<usize> = (0..n).filter(|r| mask >> r & 1 == 1).collect();
        let sub: Vec<Vec<Q>> = rows.iter().map(|&r| (0..i).map(|c| g[(r, c)].clone()).collect()).collect();
        out.push(det(&sub));
    }
    out
}
