//! Brute-force ground truth over small prime fields.
//!
//! The enumeration walks canonical coset representatives column by column
//! and keeps the X-stable ones. It never touches the cell templates; only
//! [`cross_check_cells`] compares its output against them.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cellgeom::{build_template, instantiate, CellError};
use crate::exactalg::{FlagMatrix, Fp, Ring};
use crate::matchcore::{enumerate_matchings, JordanType, Matching};

pub const NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unsupported field size {0}; use 2, 3 or 5")]
    UnsupportedField(u32),
    #[error("search exceeded {limit} nodes")]
    Infeasible { limit: u64 },
    #[error(transparent)]
    Cell(#[from] CellError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FqConfig {
    pub q: u32,
    pub jt: JordanType,
}

impl FqConfig {
    pub fn new(q: u32, jt: JordanType) -> Result<Self, OracleError> {
        if ![2, 3, 5].contains(&q) {
            return Err(OracleError::UnsupportedField(q));
        }
        Ok(FqConfig { q, jt })
    }
}

/// Springer flags bucketed by pivot pattern (1-based one-line notation).
#[derive(Clone, Debug)]
pub struct FqEnumeration<const P: u32> {
    pub buckets: BTreeMap<Vec<usize>, Vec<FlagMatrix<Fp<P>>>>,
    /// Search nodes visited, a proxy for cost.
    pub visited: u64,
}

impl<const P: u32> FqEnumeration<P> {
    pub fn total(&self) -> usize {
        self.buckets.values().map(Vec::len).sum()
    }
}

struct Search<'a, const P: u32> {
    n: usize,
    size: usize,
    cols: Vec<Vec<Fp<P>>>,
    pivots: Vec<usize>,
    /// row → column whose pivot sits there
    owner: Vec<Option<usize>>,
    visited: &'a AtomicU64,
    out: Vec<(Vec<usize>, Vec<Vec<Fp<P>>>)>,
}

impl<const P: u32> Search<'_, P> {
    fn x(&self, v: &[Fp<P>]) -> Vec<Fp<P>> {
        let mut out = vec![Fp::zero(); self.size];
        for j in 0..self.size - 1 {
            if j + 1 != self.n {
                out[j] = v[j + 1];
            }
        }
        out
    }

    fn in_span(&self, v: &[Fp<P>]) -> bool {
        let mut v = v.to_vec();
        while let Some(r) = v.iter().rposition(|x| !x.is_zero()) {
            let Some(c) = self.owner[r] else { return false };
            let s = v[r];
            for (a, b) in v.iter_mut().zip(&self.cols[c]) {
                *a = *a - s * *b;
            }
        }
        true
    }

    fn push(&mut self, col: Vec<Fp<P>>, pivot: usize) -> bool {
        self.owner[pivot] = Some(self.cols.len());
        self.pivots.push(pivot);
        self.cols.push(col);
        let ok = self.in_span(&self.x(self.cols.last().unwrap()));
        if !ok {
            self.pop();
        }
        ok
    }

    fn pop(&mut self) {
        self.cols.pop();
        let p = self.pivots.pop().unwrap();
        self.owner[p] = None;
    }

    fn dfs(&mut self) -> Result<(), OracleError> {
        if self.visited.fetch_add(1, Ordering::Relaxed) >= NODE_LIMIT {
            return Err(OracleError::Infeasible { limit: NODE_LIMIT });
        }
        if self.cols.len() == self.size {
            let w = self.pivots.iter().map(|p| p + 1).collect();
            self.out.push((w, self.cols.clone()));
            return Ok(());
        }
        for p in 0..self.size {
            if self.owner[p].is_some() {
                continue;
            }
            let free: Vec<usize> = (0..p).filter(|&r| self.owner[r].is_none()).collect();
            for col in fillings::<P>(self.size, p, &free) {
                if self.push(col, p) {
                    self.dfs()?;
                    self.pop();
                }
            }
        }
        Ok(())
    }
}

fn fillings<const P: u32>(size: usize, pivot: usize, free: &[usize]) -> Vec<Vec<Fp<P>>> {
    let mut base = vec![Fp::zero(); size];
    base[pivot] = Fp::one();
    let mut all = vec![base];
    for &r in free {
        all = all
            .into_iter()
            .flat_map(|c| {
                Fp::<P>::elements().map(move |x| {
                    let mut c = c.clone();
                    c[r] = x;
                    c
                })
            })
            .collect();
    }
    all
}

/// All canonical flags over F_P fixed by the nilpotent of type `jt`.
pub fn enumerate_springer_flags<const P: u32>(jt: &JordanType) -> Result<FqEnumeration<P>, OracleError> {
    let size = jt.big_n;
    let visited = AtomicU64::new(0);
    let mut buckets: BTreeMap<Vec<usize>, Vec<FlagMatrix<Fp<P>>>> = BTreeMap::new();
    if size == 0 {
        buckets.insert(Vec::new(), vec![FlagMatrix::zeros(0, 0)]);
        return Ok(FqEnumeration { buckets, visited: 1 });
    }
    let firsts: Vec<(usize, Vec<Fp<P>>)> = (0..size)
        .flat_map(|p| {
            let free: Vec<usize> = (0..p).collect();
            fillings::<P>(size, p, &free).into_iter().map(move |c| (p, c))
        })
        .collect();
    let found: Result<Vec<_>, OracleError> = firsts
        .into_par_iter()
        .map(|(p, col)| {
            let mut s = Search {
                n: jt.n,
                size,
                cols: Vec::new(),
                pivots: Vec::new(),
                owner: vec![None; size],
                visited: &visited,
                out: Vec::new(),
            };
            if s.push(col, p) {
                s.dfs()?;
            }
            Ok(s.out)
        })
        .collect();
    for (w, cols) in found?.into_iter().flatten() {
        buckets.entry(w).or_default().push(FlagMatrix::from_columns(&cols));
    }
    Ok(FqEnumeration { buckets, visited: visited.into_inner() })
}

/// Number of complete flags over F_q, summed over permutations as
/// q^(free entries of the canonical form).
pub fn complete_flag_count(q: u64, size: usize) -> u64 {
    fn go(q: u64, size: usize, used: &mut Vec<bool>) -> u64 {
        if used.iter().filter(|u| **u).count() == size {
            return 1;
        }
        let mut total = 0;
        for p in 0..size {
            if used[p] {
                continue;
            }
            let free = (0..p).filter(|&r| !used[r]).count() as u32;
            used[p] = true;
            total += q.pow(free) * go(q, size, used);
            used[p] = false;
        }
        total
    }
    go(q, size, &mut vec![false; size])
}

#[derive(Clone, Debug, Serialize)]
pub struct BucketSummary {
    pub w: Vec<usize>,
    pub matching: Option<String>,
    pub size: usize,
    pub expected: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub q: u32,
    pub jt: JordanType,
    pub total: usize,
    pub complete_flags: u64,
    pub visited: u64,
    pub buckets: Vec<BucketSummary>,
    /// Nonempty pivot patterns are exactly the matching permutations.
    pub patterns_match: bool,
    /// Every bucket has q^(#arcs) flags.
    pub sizes_match: bool,
    /// Instantiating each template over all of F_q^k gives the bucket.
    pub instantiation_match: bool,
    /// Σ q^(#arcs) equals the number of flags found.
    pub total_match: bool,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.patterns_match && self.sizes_match && self.instantiation_match && self.total_match
    }
}

fn all_vectors<const P: u32>(k: usize) -> Vec<Vec<Fp<P>>> {
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                Fp::<P>::elements().map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

fn cross_check_p<const P: u32>(jt: &JordanType) -> Result<CrossCheckReport, OracleError> {
    let en = enumerate_springer_flags::<P>(jt)?;
    let q = P as usize;
    let matchings: Vec<Matching> = enumerate_matchings(jt);
    let mut by_w: BTreeMap<Vec<usize>, &Matching> = BTreeMap::new();
    let mut instantiation_match = true;
    for m in &matchings {
        let ct = build_template(m, jt)?;
        let expected: BTreeSet<Vec<Vec<Fp<P>>>> = all_vectors::<P>(m.len())
            .iter()
            .map(|v| instantiate(&ct, v).map(|g| g.to_rows()))
            .collect::<Result<_, _>>()?;
        let got: BTreeSet<Vec<Vec<Fp<P>>>> = en
            .buckets
            .get(&ct.w)
            .map(|b| b.iter().map(|g| g.to_rows()).collect())
            .unwrap_or_default();
        instantiation_match &= expected == got;
        by_w.insert(ct.w.clone(), m);
    }
    let patterns_match = en.buckets.keys().eq(by_w.keys());
    let buckets: Vec<BucketSummary> = en
        .buckets
        .iter()
        .map(|(w, flags)| {
            let m = by_w.get(w);
            BucketSummary {
                w: w.clone(),
                matching: m.map(|m| m.to_string()),
                size: flags.len(),
                expected: m.map(|m| q.pow(m.len() as u32)),
            }
        })
        .collect();
    let sizes_match = buckets.iter().all(|b| b.expected == Some(b.size));
    let predicted: usize = matchings.iter().map(|m| q.pow(m.len() as u32)).sum();
    Ok(CrossCheckReport {
        q: P,
        jt: *jt,
        total: en.total(),
        complete_flags: complete_flag_count(P as u64, jt.big_n),
        visited: en.visited,
        buckets,
        patterns_match,
        sizes_match,
        instantiation_match,
        total_match: predicted == en.total(),
    })
}

pub fn cross_check_cells(cfg: &FqConfig) -> Result<CrossCheckReport, OracleError> {
    match cfg.q {
        2 => cross_check_p::<2>(&cfg.jt),
        3 => cross_check_p::<3>(&cfg.jt),
        5 => cross_check_p::<5>(&cfg.jt),
        q => Err(OracleError::UnsupportedField(q)),
    }
}
