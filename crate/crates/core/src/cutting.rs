//! Cutting arcs, the λ relabelling, and the matrices of cut pieces.

use std::collections::BTreeMap;
use std::fmt;

use crate::cellgeom::{build_template, instantiate, CellError};
use crate::exactalg::{Matrix, Ring};
use crate::matchcore::{bt_word, word_to_matching, Arc, BTWord, JordanType, Letter, MatchError, Matching};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    Arc(Arc),
    Zero,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Arc(a) => write!(f, "{a}"),
            Label::Zero => f.write_str("0"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledPiece {
    pub jt: JordanType,
    /// The original matching M and cut set A (sorted).
    pub origin: Matching,
    pub cut: Vec<Arc>,
    /// The cut matching.
    pub base: Matching,
    /// One label per arc of `base`, in its arc order.
    pub labels: Vec<Label>,
}

impl LabeledPiece {
    /// M − A in M's arc order; parameters of a piece are indexed by this.
    pub fn remaining(&self) -> Vec<Arc> {
        self.origin.arcs().iter().filter(|a| !self.cut.contains(a)).copied().collect()
    }

    pub fn dim(&self) -> usize {
        let mut seen: Vec<Arc> = self
            .labels
            .iter()
            .filter_map(|l| match l {
                Label::Arc(a) => Some(*a),
                Label::Zero => None,
            })
            .collect();
        seen.sort();
        seen.dedup();
        seen.len()
    }

    pub fn label_of(&self, a: &Arc) -> Option<Label> {
        self.base.index_of(a).map(|i| self.labels[i])
    }
}

fn swap_word(w: &mut BTWord, a: &Arc) {
    w.0.swap(a.init - 1, a.term - 1);
}

fn require_arcs(m: &Matching, arcs: &[Arc]) -> Result<(), MatchError> {
    match arcs.iter().find(|a| !m.contains(a)) {
        Some(a) => Err(MatchError::ArcNotInMatching(a.init, a.term)),
        None => Ok(()),
    }
}

pub fn cut(m: &Matching, a: &Arc, jt: &JordanType) -> Result<Matching, MatchError> {
    cut_set(m, std::slice::from_ref(a), jt)
}

/// Swap the letters at both ends of every arc in `arcs`, then re-pair.
pub fn cut_set(m: &Matching, arcs: &[Arc], jt: &JordanType) -> Result<Matching, MatchError> {
    require_arcs(m, arcs)?;
    let mut w = bt_word(m, jt)?;
    for a in arcs {
        debug_assert_eq!((w.at(a.init), w.at(a.term)), (Letter::B, Letter::T));
        swap_word(&mut w, a);
    }
    Ok(word_to_matching(&w))
}

/// Outermost arcs first, ties broken by init.
pub fn top_down_order(m: &Matching, arcs: &[Arc]) -> Vec<Arc> {
    let mut v = arcs.to_vec();
    v.sort_by_key(|a| (m.depth(a), a.init));
    v.dedup();
    v
}

/// Cut one arc of a labelled matching, carrying labels forward.
fn cut_step(
    cur: &Matching,
    labels: &BTreeMap<Arc, Label>,
    a: &Arc,
    jt: &JordanType,
) -> Result<(Matching, BTreeMap<Arc, Label>), MatchError> {
    let parent = cur.parent(a);
    let next = cut(cur, a, jt)?;
    let mut out = BTreeMap::new();
    for b in next.arcs() {
        let l = if cur.contains(b) {
            labels[b]
        } else {
            match parent {
                Some(p) if b.init == p.init || b.term == p.term => labels[&p],
                _ => Label::Zero,
            }
        };
        out.insert(*b, l);
    }
    Ok((next, out))
}

/// Cut the arcs of `arcs` one at a time in the given order. Every arc must
/// still be present when its turn comes, which holds for any order that
/// cuts an arc before the arcs nested under it.
pub fn labeled_cut_ordered(
    m: &Matching,
    order: &[Arc],
    jt: &JordanType,
) -> Result<LabeledPiece, MatchError> {
    require_arcs(m, order)?;
    let mut cur = m.clone();
    let mut labels: BTreeMap<Arc, Label> = m.arcs().iter().map(|a| (*a, Label::Arc(*a))).collect();
    for a in order {
        if !cur.contains(a) {
            return Err(MatchError::ArcNotInMatching(a.init, a.term));
        }
        (cur, labels) = cut_step(&cur, &labels, a, jt)?;
    }
    let mut cutv = order.to_vec();
    cutv.sort();
    Ok(LabeledPiece {
        jt: *jt,
        origin: m.clone(),
        cut: cutv,
        labels: cur.arcs().iter().map(|b| labels[b]).collect(),
        base: cur,
    })
}

pub fn labeled_cut(m: &Matching, arcs: &[Arc], jt: &JordanType) -> Result<LabeledPiece, MatchError> {
    require_arcs(m, arcs)?;
    labeled_cut_ordered(m, &top_down_order(m, arcs), jt)
}

/// Parameters of the base cell: the value of each arc's label, zero for ZERO.
pub fn piece_params<R: Ring>(p: &LabeledPiece, u: &[R]) -> Result<Vec<R>, CellError> {
    let rem = p.remaining();
    if u.len() != rem.len() {
        return Err(CellError::MissingParameter { expected: rem.len(), found: u.len() });
    }
    Ok(p.labels
        .iter()
        .map(|l| match l {
            Label::Arc(a) => u[rem.iter().position(|r| r == a).expect("label in M - A")].clone(),
            Label::Zero => R::zero(),
        })
        .collect())
}

pub fn piece_matrix<R: Ring>(p: &LabeledPiece, u: &[R]) -> Result<Matrix<R>, CellError> {
    let ct = build_template(&p.base, &p.jt)?;
    instantiate(&ct, &piece_params(p, u)?)
}
