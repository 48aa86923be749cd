//! Verification suites: every module invariant, exercised exhaustively or on
//! seeded random samples.

use std::collections::BTreeSet;

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use springer_cells::cellgeom::{nested_column_identity, prefix_span_basis, verify_canonical, verify_springer};
use springer_cells::closure::{
    check_necessary_conditions, chi_embed, chi_split, closure_decomposition, curve_distance, numeric_infimum,
    phi_embed, phi_target_matching, subset_arcs, swap_candidates, synthesize_limit_curve, valid_splits,
    verify_limit_curve, NumericBudget,
};
use springer_cells::cutting::{cut, cut_set, labeled_cut_ordered, piece_matrix};
use springer_cells::exactalg::{
    canonical_reduce, is_canonical, is_invertible, leading_direction, minor_vector, q, q_to_f64, qf, rank,
};
use springer_cells::matchcore::{bt_word, enumerate_matchings, j_functions, matching_permutation, word_to_matching};
use springer_cells::{build_template, instantiate, labeled_cut, Arc, BTWord, JordanType, Label, Letter, Matching, Matrix, Poly, Q};

use crate::CliError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Combinatorics,
    Geometry,
    Closure,
    Fqcount,
    All,
}

impl Suite {
    fn bounds(self) -> (usize, usize) {
        // (default, largest accepted)
        match self {
            Suite::Combinatorics => (10, 12),
            Suite::Geometry => (8, 8),
            Suite::Closure => (6, 8),
            Suite::Fqcount => (6, 6),
            Suite::All => (6, 12),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub max_n: usize,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn table(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.failures == 0 { "ok  " } else { "FAIL" };
            s.push_str(&format!("{status} {:<34} N<={:<2} {:>8} cases", c.id, c.max_n, c.cases));
            if let Some(f) = &c.first_failure {
                s.push_str(&format!("  {} failures, first: {f}", c.failures));
            }
            s.push('\n');
        }
        s.push_str(if self.passed { "all checks passed\n" } else { "some checks FAILED\n" });
        s
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.cases += o.cases;
        self.failures += o.failures;
        self.first = self.first.or(o.first);
        self
    }

    fn finish(self, id: &str, max_n: usize) -> CheckResult {
        CheckResult { id: id.into(), max_n, cases: self.cases, failures: self.failures, first_failure: self.first }
    }
}

pub fn random_q(rng: &mut impl Rng) -> Q {
    qf(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn random_target(rng: &mut impl Rng, k: usize) -> Vec<Q> {
    (0..k).map(|_| random_q(rng)).collect()
}

fn rng_for(seed: u64, id: &str, salt: u64) -> ChaCha8Rng {
    let h = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ h ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Jordan types with 1 ≤ n < N ≤ max_n.
fn jordan_types(max_n: usize) -> Vec<JordanType> {
    (2..=max_n)
        .flat_map(|nn| (1..nn).map(move |n| JordanType::new(n, nn).expect("valid type")))
        .collect()
}

fn all_cells(max_n: usize) -> Vec<(JordanType, Matching)> {
    jordan_types(max_n)
        .into_iter()
        .flat_map(|jt| enumerate_matchings(&jt).into_iter().map(move |m| (jt, m)))
        .collect()
}

/// Runs `f` over all cells in parallel with a per-cell seeded RNG.
fn per_cell<F>(id: &str, max_n: usize, seed: u64, f: F) -> CheckResult
where
    F: Fn(&JordanType, &Matching, &mut ChaCha8Rng, &mut Tally) + Sync,
{
    let t = all_cells(max_n)
        .par_iter()
        .enumerate()
        .map(|(i, (jt, m))| {
            let mut t = Tally::default();
            f(jt, m, &mut rng_for(seed, id, i as u64), &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge);
    t.finish(id, max_n)
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

type Check = Box<dyn Fn() -> CheckResult + Sync + Send>;

fn combinatorics(max_n: usize) -> Vec<Check> {
    let cut_n = max_n.min(10);
    vec![
        Box::new(move || {
            let mut t = Tally::default();
            for jt in jordan_types(max_n) {
                for w in BTWord::all(jt.n, jt.big_n) {
                    let m = word_to_matching(&w);
                    let back = bt_word(&m, &jt);
                    t.check(back.as_ref() == Ok(&w), || format!("{w} -> {m} -> {back:?}"));
                }
            }
            t.finish("matchcore.roundtrip", max_n)
        }),
        Box::new(move || {
            let mut t = Tally::default();
            for jt in jordan_types(max_n) {
                let ms = enumerate_matchings(&jt);
                let distinct: BTreeSet<&Matching> = ms.iter().collect();
                let want = binom(jt.big_n, jt.n);
                t.check(ms.len() == want && distinct.len() == want, || format!("{jt}: {} matchings", ms.len()));
            }
            t.finish("matchcore.count", max_n)
        }),
        Box::new(move || {
            per_cell("matchcore.ancestor_count", max_n, 0, |_, m, _, t| {
                let (jb, je, _) = j_functions(m);
                for a in m.arcs() {
                    let anc = m.ancestors(a).map(|v| v.len()).unwrap_or(0);
                    // the J counts look at positions strictly before init
                    t.check(anc == jb[a.init - 1] - je[a.init - 1] + 1, || format!("{m} {a}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("matchcore.ancestor_shift", max_n, 0, |_, m, _, t| {
                for pair in m.arcs().windows(2) {
                    let (prev, cur) = (pair[0], pair[1]);
                    if m.parent(&cur).is_none() {
                        continue;
                    }
                    let ca = m.ancestors(&cur).unwrap();
                    let pa = m.ancestors(&prev).unwrap();
                    let r = cur.init as isize - prev.init as isize - 2;
                    for j in 2..=ca.len() {
                        let k = j as isize + r;
                        let ok = k >= 1 && pa.get(k as usize - 1) == Some(&ca[j - 1]);
                        t.check(ok, || format!("{m}: {prev},{cur} j={j}"));
                    }
                }
            })
        }),
        Box::new(move || {
            per_cell("matchcore.pivot_monotone", max_n, 0, |jt, m, _, t| {
                let w = matching_permutation(m, jt).unwrap().w;
                let top: Vec<usize> = w.iter().copied().filter(|&r| r <= jt.n).collect();
                let bot: Vec<usize> = w.iter().copied().filter(|&r| r > jt.n).collect();
                t.check(top.windows(2).all(|x| x[0] < x[1]) && bot.windows(2).all(|x| x[0] < x[1]), || {
                    format!("{m} {w:?}")
                });
            })
        }),
        Box::new(move || {
            per_cell("cutting.order_independence", cut_n, 0, |jt, m, rng, t| {
                for a_set in subsets(m, 64, rng) {
                    let reference = labeled_cut(m, &a_set, jt).unwrap();
                    let mut orders = permutations(&a_set, 24, rng);
                    orders.push(a_set.clone());
                    let mut any = false;
                    for ord in orders {
                        let b = cut_set(m, &ord, jt).unwrap();
                        t.check(b == reference.base, || format!("{m} cut {ord:?}"));
                        if let Ok(p) = labeled_cut_ordered(m, &ord, jt) {
                            any = true;
                            t.check(p == reference, || format!("{m} labelled cut {ord:?}"));
                        }
                    }
                    t.check(any, || format!("{m}: no admissible order for {a_set:?}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("cutting.unnesting", cut_n, 0, |jt, m, _, t| {
                for a in m.arcs() {
                    let Some(p) = m.parent(a) else { continue };
                    let mut arcs: Vec<Arc> = m.arcs().iter().filter(|b| *b != a && **b != p).copied().collect();
                    arcs.push(Arc::new(p.init, a.init));
                    arcs.push(Arc::new(a.term, p.term));
                    let want = Matching::new(m.size(), arcs).unwrap();
                    t.check(cut(m, a, jt).as_ref() == Ok(&want), || format!("{m} cut {a}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("cutting.distinct_bases", cut_n, 0, |jt, m, _, t| {
                let bases: BTreeSet<Matching> =
                    (0..1usize << m.len()).map(|s| cut_set(m, &subset_arcs(m, s), jt).unwrap()).collect();
                t.check(bases.len() == 1 << m.len(), || format!("{m}: {} bases", bases.len()));
            })
        }),
        Box::new(move || {
            per_cell("cutting.label_image", cut_n, 0, |jt, m, rng, t| {
                for a_set in subsets(m, 64, rng) {
                    let p = labeled_cut(m, &a_set, jt).unwrap();
                    let image: BTreeSet<Arc> = p
                        .labels
                        .iter()
                        .filter_map(|l| match l {
                            Label::Arc(a) => Some(*a),
                            Label::Zero => None,
                        })
                        .collect();
                    let rest: BTreeSet<Arc> = p.remaining().into_iter().collect();
                    t.check(image == rest && p.dim() == m.len() - a_set.len(), || format!("{m} cut {a_set:?}"));
                    for l in &p.labels {
                        let Label::Arc(b) = l else { continue };
                        let count = p.labels.iter().filter(|x| *x == l).count();
                        let above_cut = a_set.iter().any(|c| c != b && m.ancestors(c).is_ok_and(|v| v.contains(b)));
                        t.check(count == 1 || above_cut, || format!("{m} cut {a_set:?}: label {b} repeated"));
                    }
                }
            })
        }),
        Box::new(move || {
            per_cell("closure.piece_words", cut_n, 0, |jt, m, _, t| {
                let dec = closure_decomposition(m, jt).unwrap();
                let words: BTreeSet<BTWord> = dec.pieces.iter().map(|p| bt_word(&p.base, jt).unwrap()).collect();
                let cands: BTreeSet<BTWord> = swap_candidates(m, jt).unwrap().into_iter().collect();
                t.check(words == cands && words.len() == dec.pieces.len(), || format!("{m}"));
            })
        }),
    ]
}

fn subsets(m: &Matching, cap: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Arc>> {
    let total = 1usize << m.len();
    if total <= cap {
        (0..total).map(|s| subset_arcs(m, s)).collect()
    } else {
        (0..cap).map(|_| subset_arcs(m, rng.gen_range(0..total))).collect()
    }
}

fn permutations(v: &[Arc], cap: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Arc>> {
    fn all(v: &[Arc]) -> Vec<Vec<Arc>> {
        if v.is_empty() {
            return vec![Vec::new()];
        }
        (0..v.len())
            .flat_map(|i| {
                let mut rest = v.to_vec();
                let x = rest.remove(i);
                all(&rest).into_iter().map(move |mut p| {
                    p.insert(0, x);
                    p
                })
            })
            .collect()
    }
    if v.len() <= 4 {
        all(v)
    } else {
        (0..cap)
            .map(|_| {
                let mut p = v.to_vec();
                p.shuffle(rng);
                p
            })
            .collect()
    }
}

fn random_params(rng: &mut ChaCha8Rng, k: usize) -> Vec<Q> {
    (0..k).map(|_| random_q(rng)).collect()
}

fn geometry(max_n: usize, seed: u64) -> Vec<Check> {
    vec![
        Box::new(move || {
            per_cell("cellgeom.membership", max_n, seed, |jt, m, rng, t| {
                let ct = build_template(m, jt).unwrap();
                for _ in 0..20 {
                    let g = instantiate(&ct, &random_params(rng, m.len())).unwrap();
                    let ok = verify_canonical(&g) && verify_springer(&g, jt) == Ok(true);
                    t.check(ok, || format!("{m} {jt}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("cellgeom.injectivity", max_n, seed, |jt, m, rng, t| {
                if m.is_empty() {
                    return;
                }
                let ct = build_template(m, jt).unwrap();
                for _ in 0..5 {
                    let (u, v) = (random_params(rng, m.len()), random_params(rng, m.len()));
                    if u == v {
                        continue;
                    }
                    t.check(instantiate(&ct, &u).unwrap() != instantiate(&ct, &v).unwrap(), || format!("{m}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("cellgeom.last_row", max_n, seed, |jt, m, _, t| {
                let ct = build_template(m, jt).unwrap();
                for (k, a) in m.arcs().iter().enumerate() {
                    let last = ct.slots.iter().filter(|s| s.col == a.init).map(|s| s.row).max().unwrap_or(ct.r0[k]);
                    let anc = m.ancestors(a).unwrap().len();
                    t.check(last == ct.r0[k] + anc, || format!("{m} {a}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("cellgeom.split_coordinates", max_n, seed, |jt, m, rng, t| {
                let ct = build_template(m, jt).unwrap();
                let word = bt_word(m, jt).unwrap();
                let samples: Vec<Matrix<Q>> =
                    (0..10).map(|_| instantiate(&ct, &random_params(rng, m.len())).unwrap()).collect();
                for i in valid_splits(m) {
                    let bases: Vec<Option<Vec<usize>>> = samples.iter().map(|g| prefix_span_basis(g, i)).collect();
                    let tops = word.0[..i].iter().filter(|l| **l == Letter::T).count();
                    let ok = match &bases[0] {
                        Some(b) => bases.iter().all(|x| x.as_ref() == Some(b)) && b.iter().filter(|&&r| r <= jt.n).count() == tops,
                        None => false,
                    };
                    t.check(ok, || format!("{m} split {i}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("cellgeom.nested_columns", max_n, seed, |jt, m, rng, t| {
                let ct = build_template(m, jt).unwrap();
                for _ in 0..3 {
                    let g = instantiate(&ct, &random_params(rng, m.len())).unwrap();
                    let bad = nested_column_identity(&ct, &g);
                    t.check(bad.is_none(), || format!("{m} {bad:?}"));
                }
            })
        }),
        Box::new(move || {
            let id = "exactalg.canonical_reduce";
            let mut rng = rng_for(seed, id, 0);
            let mut t = Tally::default();
            let mut done = 0;
            while done < 200 {
                let n = rng.gen_range(2..=max_n.max(2));
                let rows: Vec<Vec<Q>> = (0..n).map(|_| random_params(&mut rng, n)).collect();
                let g = Matrix::from_rows(rows);
                if !is_invertible(&g) {
                    continue;
                }
                done += 1;
                let c = canonical_reduce(&g).unwrap();
                let spans = (1..=n).all(|i| {
                    let mut cols = g.columns()[..i].to_vec();
                    cols.extend_from_slice(&c.columns()[..i]);
                    rank(&cols) == i
                });
                t.check(is_canonical(&c) && canonical_reduce(&c).as_ref() == Ok(&c) && spans, || format!("{g}"));
            }
            t.finish(id, max_n)
        }),
        Box::new(move || {
            let id = "exactalg.leading_direction";
            let mut rng = rng_for(seed, id, 0);
            let mut t = Tally::default();
            let big = q(1_000_000_000);
            for _ in 0..50 {
                let n = rng.gen_range(2..=4);
                let rows: Vec<Vec<Poly<Q>>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| Poly::new((0..3).map(|_| q(rng.gen_range(-3..=3))).collect()))
                            .collect()
                    })
                    .collect();
                let g = Matrix::from_rows(rows);
                let at = g.map(|p| p.eval(&big));
                for i in 1..=n {
                    let exact = minor_vector(&g, i).unwrap();
                    let Ok(dir) = leading_direction(&exact) else { continue };
                    let num: Vec<f64> = minor_vector(&at, i).unwrap().iter().map(q_to_f64).collect();
                    let err = direction_error(&num, &dir.iter().map(q_to_f64).collect::<Vec<_>>());
                    t.check(err < 1e-6, || format!("size {i}: error {err:e}"));
                }
            }
            t.finish(id, 4)
        }),
        Box::new(move || {
            per_cell("closure.chi_words", max_n, seed, |jt, m, _, t| {
                let w = build_template(m, jt).unwrap().permutation_matrix::<Q>();
                for i in valid_splits(m) {
                    let s = chi_split(m, jt, i).unwrap();
                    let wl = build_template(&s.m_left, &s.jt_left).unwrap().permutation_matrix::<Q>();
                    let wr = build_template(&s.m_right, &s.jt_right).unwrap().permutation_matrix::<Q>();
                    t.check(chi_embed(&wl, &wr, &s).as_ref() == Ok(&w), || format!("{m} split {i}"));
                }
            })
        }),
        Box::new(move || {
            per_cell("closure.chi_commutes", max_n, seed, |jt, m, rng, t| {
                let ct = build_template(m, jt).unwrap();
                for i in valid_splits(m) {
                    let s = chi_split(m, jt, i).unwrap();
                    let cl = build_template(&s.m_left, &s.jt_left).unwrap();
                    let cr = build_template(&s.m_right, &s.jt_right).unwrap();
                    for _ in 0..3 {
                        let u = random_params(rng, s.m_left.len());
                        let v = random_params(rng, s.m_right.len());
                        let both: Vec<Q> = u.iter().chain(&v).cloned().collect();
                        let lhs = chi_embed(&instantiate(&cl, &u).unwrap(), &instantiate(&cr, &v).unwrap(), &s);
                        t.check(lhs.as_ref() == Ok(&instantiate(&ct, &both).unwrap()), || format!("{m} split {i}"));
                    }
                }
            })
        }),
        Box::new(move || {
            let id = "closure.phi_law";
            let mut rng = rng_for(seed, id, 0);
            let mut t = Tally::default();
            for nn in (4..=max_n).step_by(2) {
                let jt = JordanType::new(nn / 2, nn).unwrap();
                let inner_jt = JordanType::new(nn / 2 - 1, nn - 2).unwrap();
                for inner in enumerate_matchings(&inner_jt) {
                    let ct = build_template(&inner, &inner_jt).unwrap();
                    for _ in 0..3 {
                        let g = instantiate(&ct, &random_params(&mut rng, inner.len())).unwrap();
                        let a = random_q(&mut rng);
                        for infinite in [false, true] {
                            let h = phi_embed(if infinite { None } else { Some(&a) }, &g, &jt).unwrap();
                            let target = phi_target_matching(&inner, &jt, infinite).unwrap();
                            let w: Vec<usize> = h.lowest_nonzero_rows().unwrap().iter().map(|r| r + 1).collect();
                            let want = build_template(&target, &jt).unwrap().w;
                            t.check(w == want, || format!("{inner} infinite={infinite}"));
                        }
                    }
                }
            }
            t.finish(id, max_n)
        }),
    ]
}

/// Distance between the lines spanned by two vectors.
fn direction_error(a: &[f64], b: &[f64]) -> f64 {
    let k = (0..b.len()).fold(0, |k, i| if b[i].abs() > b[k].abs() { i } else { k });
    a.iter().zip(b).map(|(x, y)| (x / a[k] - y / b[k]).abs()).fold(0.0, f64::max)
}

fn closure(max_n: usize, seed: u64) -> Vec<Check> {
    vec![
        Box::new(move || {
            per_cell("closure.certification", max_n, seed, |jt, m, rng, t| {
                for mask in 0..1usize << m.len() {
                    let cut = subset_arcs(m, mask);
                    let piece = labeled_cut(m, &cut, jt).unwrap();
                    for _ in 0..5 {
                        let target = random_target(rng, piece.remaining().len());
                        let res = synthesize_limit_curve(m, jt, &cut, &target).and_then(|c| {
                            let ok = verify_limit_curve(m, jt, &c, &piece, &target)?;
                            let tm = piece_matrix(&piece, &target)?;
                            let d = curve_distance(m, jt, &c, &tm, &q(1_000_000_000))?;
                            Ok((ok, d))
                        });
                        let ok = matches!(res, Ok((true, d)) if d < 1e-4);
                        t.check(ok, || format!("{m} cut {cut:?} target {target:?}: {res:?}"));
                    }
                }
            })
        }),
        Box::new(move || {
            per_cell("closure.necessary_conditions", max_n, seed, |jt, m, rng, t| {
                let dec = closure_decomposition(m, jt).unwrap();
                let r = check_necessary_conditions(&dec, 10, rng.gen()).unwrap();
                t.check(r.passed(), || format!("{m}: {:?}", r.violations.first()));
            })
        }),
        Box::new(move || {
            per_cell("closure.disjointness", max_n, seed, |jt, m, _, t| {
                let dec = closure_decomposition(m, jt).unwrap();
                let bases: BTreeSet<&Matching> = dec.pieces.iter().map(|p| &p.base).collect();
                let dims_ok = dec.pieces.iter().all(|p| p.dim() == m.len() - p.cut.len());
                t.check(bases.len() == dec.pieces.len() && dims_ok, || format!("{m}"));
            })
        }),
        Box::new(move || {
            let id = "closure.numeric_oracle";
            let mut rng = rng_for(seed, id, 0);
            let mut t = Tally::default();
            let budget = NumericBudget { restarts: 20, seed, ..NumericBudget::default() };
            let jt = JordanType::new(2, 4).unwrap();
            for m in enumerate_matchings(&jt) {
                let cands: BTreeSet<BTWord> = swap_candidates(&m, &jt).unwrap().into_iter().collect();
                for mask in 0..1usize << m.len() {
                    let piece = labeled_cut(&m, &subset_arcs(&m, mask), &jt).unwrap();
                    let target = piece_matrix(&piece, &random_target(&mut rng, piece.remaining().len())).unwrap();
                    let d = numeric_infimum(&m, &jt, &target, &budget).unwrap();
                    t.check(d < 1e-4, || format!("{m} member {}: {d:e}", piece.base));
                }
                for w in BTWord::all(jt.n, jt.big_n).into_iter().filter(|w| !cands.contains(w)) {
                    let other = word_to_matching(&w);
                    let ct = build_template(&other, &jt).unwrap();
                    let target = instantiate(&ct, &random_target(&mut rng, other.len())).unwrap();
                    let d = numeric_infimum(&m, &jt, &target, &budget).unwrap();
                    t.check(d > 1e-1, || format!("{m} non-candidate {w}: {d:e}"));
                }
            }
            t.finish(id, 4)
        }),
    ]
}

fn fqcount(max_n: usize) -> Vec<Check> {
    use springer_cells::oracle::{cross_check_cells, FqConfig};
    vec![Box::new(move || {
        let mut t = Tally::default();
        for jt in jordan_types(max_n) {
            for q in [2, 3, 5] {
                if q == 5 && jt.big_n > 4 {
                    continue;
                }
                let r = FqConfig::new(q, jt).and_then(|c| cross_check_cells(&c));
                t.check(matches!(&r, Ok(r) if r.passed()), || format!("q={q} {jt}: {r:?}"));
            }
        }
        t.finish("oracle.cross_check", max_n)
    })]
}

pub fn run_suite(suite: Suite, max_n: Option<usize>, seed: u64) -> Result<SuiteReport, CliError> {
    let (default, cap) = suite.bounds();
    let n = max_n.unwrap_or(default);
    if n > cap || n < 2 {
        return Err(CliError::Usage(format!("--max-N for {suite:?} must lie in 2..={cap}").to_lowercase()));
    }
    let pick = |s: Suite| n.min(s.bounds().1);
    let mut checks: Vec<Check> = Vec::new();
    if matches!(suite, Suite::Combinatorics | Suite::All) {
        checks.extend(combinatorics(pick(Suite::Combinatorics)));
    }
    if matches!(suite, Suite::Geometry | Suite::All) {
        checks.extend(geometry(pick(Suite::Geometry), seed));
    }
    if matches!(suite, Suite::Closure | Suite::All) {
        checks.extend(closure(pick(Suite::Closure), seed));
    }
    if matches!(suite, Suite::Fqcount | Suite::All) {
        checks.extend(fqcount(pick(Suite::Fqcount)));
    }
    let results: Vec<CheckResult> = checks.par_iter().map(|c| c()).collect();
    let passed = results.iter().all(|c| c.failures == 0);
    Ok(SuiteReport { suite, seed, checks: results, passed })
}
