//! Arcs, standard noncrossing matchings, {B,T}-words and pivot profiles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    #[error("arc ({0},{1}) is not in the matching")]
    ArcNotInMatching(usize, usize),
    #[error("{arcs} arcs exceed min(n, N-n) = {bound}")]
    TooManyArcs { arcs: usize, bound: usize },
    #[error("invalid arc ({0},{1}) on {2} points")]
    InvalidArc(usize, usize, usize),
    #[error("endpoint {0} is used twice")]
    SharedEndpoint(usize),
    #[error("matching is not standard noncrossing")]
    NotStandard,
    #[error("word has length {found}, expected {expected}")]
    WordLength { expected: usize, found: usize },
    #[error("word has {found} T letters, expected {expected}")]
    WordTopCount { expected: usize, found: usize },
    #[error("invalid Jordan type n={n}, N={big_n}")]
    BadJordanType { n: usize, big_n: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Arc {
    pub init: usize,
    pub term: usize,
}

impl Arc {
    pub fn new(init: usize, term: usize) -> Self {
        Arc { init, term }
    }

    /// `other` lies strictly under `self`.
    pub fn covers(&self, other: &Arc) -> bool {
        self.init < other.init && other.term < self.term
    }

    pub fn contains_point(&self, i: usize) -> bool {
        self.init < i && i < self.term
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.init, self.term)
    }
}

impl FromStr for Arc {
    type Err = MatchError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| MatchError::Parse(format!("bad arc literal {s:?}")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| MatchError::Parse(format!("bad arc literal {s:?}")))?;
        let p = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| MatchError::Parse(format!("bad arc literal {s:?}")))
        };
        Ok(Arc::new(p(a)?, p(b)?))
    }
}

/// Parse "(1,8)(2,3)" or "(1,8),(2,3)" into a list of arcs.
pub fn parse_arcs(s: &str) -> Result<Vec<Arc>, MatchError> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        if rest.is_empty() {
            break;
        }
        let end = rest
            .find(')')
            .ok_or_else(|| MatchError::Parse(format!("unterminated arc in {s:?}")))?;
        out.push(rest[..=end].parse()?);
        rest = &rest[end + 1..];
    }
    Ok(out)
}

/// Jordan type (n, N−n): X e_i = e_{i−1}, except e_1 and e_{n+1} map to 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct JordanType {
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
}

impl JordanType {
    pub fn new(n: usize, big_n: usize) -> Result<Self, MatchError> {
        if n > big_n {
            return Err(MatchError::BadJordanType { n, big_n });
        }
        Ok(JordanType { n, big_n })
    }

    pub fn bottom(&self) -> usize {
        self.big_n - self.n
    }

    pub fn max_arcs(&self) -> usize {
        self.n.min(self.bottom())
    }

    /// X e_i as a 1-based index, `None` for the kernel vectors e_1, e_{n+1}.
    pub fn x_image(&self, i: usize) -> Option<usize> {
        if i == 1 || i == self.n + 1 {
            None
        } else {
            Some(i - 1)
        }
    }

    /// Apply X to a coordinate vector (0-based storage).
    pub fn apply_x<R: crate::exactalg::Ring>(&self, v: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); v.len()];
        for i in 1..=self.big_n {
            if let Some(j) = self.x_image(i) {
                out[j - 1] = v[i - 1].clone();
            }
        }
        out
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.bottom())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Letter {
    B,
    T,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BTWord(pub Vec<Letter>);

impl BTWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::T).count()
    }

    /// Letter at 1-based position.
    pub fn at(&self, i: usize) -> Letter {
        self.0[i - 1]
    }

    /// All words of length `big_n` with `n` letters T, lexicographic (B < T).
    pub fn all(n: usize, big_n: usize) -> Vec<BTWord> {
        fn go(pos: usize, big_n: usize, tops_left: usize, cur: &mut Vec<Letter>, out: &mut Vec<BTWord>) {
            if pos == big_n {
                if tops_left == 0 {
                    out.push(BTWord(cur.clone()));
                }
                return;
            }
            let left = big_n - pos;
            if left > tops_left {
                cur.push(Letter::B);
                go(pos + 1, big_n, tops_left, cur, out);
                cur.pop();
            }
            if tops_left > 0 {
                cur.push(Letter::T);
                go(pos + 1, big_n, tops_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n <= big_n {
            go(0, big_n, n, &mut Vec::with_capacity(big_n), &mut out);
        }
        out
    }
}

impl fmt::Display for BTWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::B => "B",
                Letter::T => "T",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BTWord {
    type Err = MatchError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                'B' | 'b' => Ok(Letter::B),
                'T' | 't' => Ok(Letter::T),
                _ => Err(MatchError::Parse(format!("bad letter {c:?} in word"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BTWord)
    }
}

/// Arcs on {1..N}, sorted by init, endpoints distinct.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Matching {
    big_n: usize,
    arcs: Vec<Arc>,
    noncrossing: bool,
    standard: bool,
}

impl Matching {
    pub fn new(big_n: usize, mut arcs: Vec<Arc>) -> Result<Self, MatchError> {
        let mut used = vec![false; big_n + 1];
        for a in &arcs {
            if a.init == 0 || a.init >= a.term || a.term > big_n {
                return Err(MatchError::InvalidArc(a.init, a.term, big_n));
            }
            for p in [a.init, a.term] {
                if used[p] {
                    return Err(MatchError::SharedEndpoint(p));
                }
                used[p] = true;
            }
        }
        arcs.sort();
        let noncrossing = !arcs.iter().any(|a| {
            arcs.iter()
                .any(|b| b.init < a.init && a.init < b.term && b.term < a.term)
        });
        let standard = (1..=big_n)
            .all(|i| used[i] || !arcs.iter().any(|a| a.contains_point(i)));
        Ok(Matching { big_n, arcs, noncrossing, standard })
    }

    pub fn empty(big_n: usize) -> Self {
        Matching { big_n, arcs: Vec::new(), noncrossing: true, standard: true }
    }

    pub fn parse(big_n: usize, s: &str) -> Result<Self, MatchError> {
        Matching::new(big_n, parse_arcs(s)?)
    }

    pub fn size(&self) -> usize {
        self.big_n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.binary_search(a).is_ok()
    }

    pub fn index_of(&self, a: &Arc) -> Option<usize> {
        self.arcs.binary_search(a).ok()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.noncrossing
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.arcs.len() == self.big_n
    }

    fn require_standard(&self) -> Result<(), MatchError> {
        if self.noncrossing && self.standard {
            Ok(())
        } else {
            Err(MatchError::NotStandard)
        }
    }

    /// Arc with an endpoint at position i.
    pub fn arc_at(&self, i: usize) -> Option<Arc> {
        self.arcs.iter().copied().find(|a| a.init == i || a.term == i)
    }

    /// Innermost arc strictly covering `a`.
    pub fn parent(&self, a: &Arc) -> Option<Arc> {
        self.arcs
            .iter()
            .filter(|b| b.covers(a))
            .max_by_key(|b| b.init)
            .copied()
    }

    /// [a, parent(a), parent(parent(a)), …].
    pub fn ancestors(&self, a: &Arc) -> Result<Vec<Arc>, MatchError> {
        if !self.contains(a) {
            return Err(MatchError::ArcNotInMatching(a.init, a.term));
        }
        let mut chain = vec![*a];
        while let Some(p) = self.parent(chain.last().unwrap()) {
            chain.push(p);
        }
        Ok(chain)
    }

    /// Number of arcs strictly covering `a`.
    pub fn depth(&self, a: &Arc) -> usize {
        self.arcs.iter().filter(|b| b.covers(a)).count()
    }

    /// Arcs lying within [init a, term a], including a.
    pub fn nested_count(&self, a: &Arc) -> usize {
        self.arcs
            .iter()
            .filter(|b| a.init <= b.init && b.term <= a.term)
            .count()
    }

    /// Ancestor function on positions: init of the innermost arc strictly
    /// covering i, or 0.
    pub fn ancestor_table(&self) -> AncestorTable {
        let anc = (1..=self.big_n)
            .map(|i| {
                self.arcs
                    .iter()
                    .filter(|a| a.contains_point(i))
                    .map(|a| a.init)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let chains = self
            .arcs
            .iter()
            .map(|a| self.ancestors(a).expect("arc of self"))
            .collect();
        AncestorTable { anc, chains }
    }

    /// Shift every arc by `offset` (restricting to a window).
    pub fn relabel(&self, big_n: usize, offset: isize, keep: impl Fn(&Arc) -> bool) -> Matching {
        let arcs = self
            .arcs
            .iter()
            .filter(|a| keep(a))
            .map(|a| Arc::new((a.init as isize + offset) as usize, (a.term as isize + offset) as usize))
            .collect();
        Matching::new(big_n, arcs).expect("relabelled submatching is valid")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arcs.is_empty() {
            return f.write_str("{}");
        }
        for a in &self.arcs {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AncestorTable {
    /// anc[i-1] for position i.
    pub anc: Vec<usize>,
    /// Per arc in matching order.
    pub chains: Vec<Vec<Arc>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PivotProfile {
    pub j_beg: Vec<usize>,
    pub j_end: Vec<usize>,
    pub j_not: Vec<usize>,
    /// One-line notation, 1-based: column i has its pivot in row w[i-1].
    pub w: Vec<usize>,
    pub bt: BTWord,
}

/// Counts of arc starts, arc ends and non-arc points among 1..i−1, for each i.
pub fn j_functions(m: &Matching) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = m.size();
    let (mut b, mut e, mut z) = (vec![0; n], vec![0; n], vec![0; n]);
    let (mut cb, mut ce, mut cz) = (0, 0, 0);
    for i in 1..=n {
        b[i - 1] = cb;
        e[i - 1] = ce;
        z[i - 1] = cz;
        match m.arc_at(i) {
            Some(a) if a.init == i => cb += 1,
            Some(_) => ce += 1,
            None => cz += 1,
        }
    }
    (b, e, z)
}

pub fn check_arc_bound(m: &Matching, jt: &JordanType) -> Result<(), MatchError> {
    if m.len() > jt.max_arcs() {
        Err(MatchError::TooManyArcs { arcs: m.len(), bound: jt.max_arcs() })
    } else {
        Ok(())
    }
}

pub fn bt_word(m: &Matching, jt: &JordanType) -> Result<BTWord, MatchError> {
    m.require_standard()?;
    check_arc_bound(m, jt)?;
    if m.size() != jt.big_n {
        return Err(MatchError::WordLength { expected: jt.big_n, found: m.size() });
    }
    let mut free_tops = jt.n - m.len();
    let letters = (1..=m.size())
        .map(|i| match m.arc_at(i) {
            Some(a) if a.init == i => Letter::B,
            Some(_) => Letter::T,
            None if free_tops > 0 => {
                free_tops -= 1;
                Letter::T
            }
            None => Letter::B,
        })
        .collect();
    Ok(BTWord(letters))
}

/// Pair adjacent B·T (after erasing already-paired letters) until none remain.
pub fn word_to_matching(w: &BTWord) -> Matching {
    let mut stack: Vec<usize> = Vec::new();
    let mut arcs = Vec::new();
    for (idx, &l) in w.0.iter().enumerate() {
        let pos = idx + 1;
        match l {
            Letter::B => stack.push(pos),
            Letter::T => {
                if let Some(b) = stack.pop() {
                    arcs.push(Arc::new(b, pos));
                }
            }
        }
    }
    Matching::new(w.len(), arcs).expect("stack pairing yields a valid matching")
}

/// Running-count rule: the j-th T goes to row j, the j-th B to row n+j.
pub fn word_permutation(w: &BTWord, n: usize) -> Vec<usize> {
    let (mut t, mut b) = (0, 0);
    w.0.iter()
        .map(|l| match l {
            Letter::T => {
                t += 1;
                t
            }
            Letter::B => {
                b += 1;
                n + b
            }
        })
        .collect()
}

pub fn matching_permutation(m: &Matching, jt: &JordanType) -> Result<PivotProfile, MatchError> {
    let bt = bt_word(m, jt)?;
    let (j_beg, j_end, j_not) = j_functions(m);
    let w = word_permutation(&bt, jt.n);
    Ok(PivotProfile { j_beg, j_end, j_not, w, bt })
}

/// All standard noncrossing matchings for the Jordan type, in word order.
pub fn enumerate_matchings(jt: &JordanType) -> Vec<Matching> {
    BTWord::all(jt.n, jt.big_n).iter().map(word_to_matching).collect()
}

/// Word validated against a Jordan type.
pub fn check_word(w: &BTWord, jt: &JordanType) -> Result<(), MatchError> {
    if w.len() != jt.big_n {
        return Err(MatchError::WordLength { expected: jt.big_n, found: w.len() });
    }
    if w.top_count() != jt.n {
        return Err(MatchError::WordTopCount { expected: jt.n, found: w.top_count() });
    }
    Ok(())
}
