use std::collections::BTreeMap;

use serde::Serialize;
use springer_cells::closure::{ClosureDecomposition, PolyCurve};
use springer_cells::cutting::Label;
use springer_cells::matchcore::{bt_word, matching_permutation, JordanType, MatchError, Matching};
use springer_cells::{Arc, CellTemplate, LabeledPiece, Matrix, Q};

#[derive(Serialize, Debug, Clone)]
pub struct MatchingJson {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    pub word: String,
    pub perm: Vec<usize>,
}

impl MatchingJson {
    pub fn new(m: &Matching, jt: &JordanType) -> Result<Self, MatchError> {
        let prof = matching_permutation(m, jt)?;
        Ok(MatchingJson { big_n: jt.big_n, n: jt.n, arcs: arcs_json(m.arcs()), word: prof.bt.to_string(), perm: prof.w })
    }
}

pub fn arcs_json(arcs: &[Arc]) -> Vec<[usize; 2]> {
    arcs.iter().map(|a| [a.init, a.term]).collect()
}

#[derive(Serialize, Debug)]
pub struct EnumerateJson {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: usize,
    pub count: usize,
    pub matchings: Vec<MatchingJson>,
}

/// Parameter name of the k-th arc: a, b, c, ...
pub fn param_name(k: usize) -> String {
    if k < 26 {
        ((b'a' + k as u8) as char).to_string()
    } else {
        format!("v{}", k + 1)
    }
}

#[derive(Serialize, Debug)]
pub struct CellJson {
    pub matching: MatchingJson,
    pub pivots: Vec<usize>,
    /// [row, col, arcIndex], 1-based rows and columns, 0-based arc index.
    pub slots: Vec<[usize; 3]>,
    pub params: BTreeMap<String, String>,
    pub matrix: Vec<Vec<String>>,
}

pub fn symbolic_matrix(ct: &CellTemplate) -> Vec<Vec<String>> {
    let n = ct.size();
    let mut rows = vec![vec!["0".to_string(); n]; n];
    for (c, &r) in ct.w.iter().enumerate() {
        rows[r - 1][c] = "1".into();
    }
    for s in &ct.slots {
        rows[s.row - 1][s.col - 1] = param_name(s.arc);
    }
    rows
}

impl CellJson {
    pub fn new(ct: &CellTemplate) -> Result<Self, MatchError> {
        Ok(CellJson {
            matching: MatchingJson::new(&ct.m, &ct.jt)?,
            pivots: ct.w.clone(),
            slots: ct.slots.iter().map(|s| [s.row, s.col, s.arc]).collect(),
            params: ct.m.arcs().iter().enumerate().map(|(k, a)| (a.to_string(), param_name(k))).collect(),
            matrix: symbolic_matrix(ct),
        })
    }
}

pub fn latex_array(rows: &[Vec<String>]) -> String {
    let mut s = String::from("\\begin{bmatrix}\n");
    for r in rows {
        s.push_str(&r.join(" & "));
        s.push_str(" \\\\\n");
    }
    s.push_str("\\end{bmatrix}\n");
    s
}

pub fn text_array(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|x| x.chars().count()).max().unwrap_or(1);
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

pub fn matrix_strings(g: &Matrix<Q>) -> Vec<Vec<String>> {
    g.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

#[derive(Serialize, Debug, Clone)]
pub struct PieceJson {
    pub cut: Vec<[usize; 2]>,
    pub base: String,
    pub word: String,
    pub dim: usize,
    /// Arc of the base matching ↦ arc of the original matching, or "0".
    pub labels: BTreeMap<String, String>,
}

impl PieceJson {
    pub fn new(p: &LabeledPiece) -> Result<Self, MatchError> {
        Ok(PieceJson {
            cut: arcs_json(&p.cut),
            base: p.base.to_string(),
            word: bt_word(&p.base, &p.jt)?.to_string(),
            dim: p.dim(),
            labels: p.base.arcs().iter().zip(&p.labels).map(|(a, l)| (a.to_string(), l.to_string())).collect(),
        })
    }
}

/// "(1,2)↦a, (3,4)↦a" with letters named after the original arcs.
pub fn label_text(p: &LabeledPiece) -> String {
    let name = |l: &Label| match l {
        Label::Arc(a) => param_name(p.origin.index_of(a).unwrap_or(usize::MAX)),
        Label::Zero => "0".into(),
    };
    p.base.arcs().iter().zip(&p.labels).map(|(a, l)| format!("{a}↦{}", name(l))).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize, Debug)]
pub struct CutJson {
    pub origin: MatchingJson,
    pub piece: PieceJson,
}

#[derive(Serialize, Debug, Clone)]
pub struct CurveJson {
    /// Arc ↦ coefficients in ascending degree.
    pub entries: BTreeMap<String, Vec<String>>,
    pub max_degree: usize,
}

impl CurveJson {
    pub fn new(c: &PolyCurve) -> Self {
        CurveJson {
            entries: c
                .arcs
                .iter()
                .zip(&c.entries)
                .map(|(a, p)| (a.to_string(), p.coeffs().iter().map(|x| x.to_string()).collect()))
                .collect(),
            max_degree: c.max_degree(),
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct CertificateJson {
    pub target: Vec<String>,
    pub curve: Option<CurveJson>,
    pub verified: bool,
    pub error: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct ClosurePieceJson {
    #[serde(flatten)]
    pub piece: PieceJson,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateJson>,
}

#[derive(Serialize, Debug)]
pub struct ClosureJson {
    pub matching: MatchingJson,
    pub pieces: Vec<ClosurePieceJson>,
    /// [from, to] piece indices for single-arc cuts.
    pub edges: Vec<[usize; 2]>,
    pub certified: Option<bool>,
}

/// Pieces are indexed by cut-set bitmask; an edge adds one arc to the cut.
pub fn closure_edges(dec: &ClosureDecomposition) -> Vec<[usize; 2]> {
    let k = dec.m.len();
    let mut e = Vec::new();
    for from in 0..1usize << k {
        for b in 0..k {
            if from >> b & 1 == 0 {
                e.push([from, from | 1 << b]);
            }
        }
    }
    e
}

pub fn closure_dot(dec: &ClosureDecomposition) -> String {
    let mut s = format!("digraph closure {{\n  label=\"{} {}\";\n", dec.m, dec.jt);
    for (i, p) in dec.pieces.iter().enumerate() {
        let labels = label_text(p);
        s.push_str(&format!("  p{i} [label=\"{}\\n{}\"];\n", p.base, if labels.is_empty() { "point".into() } else { labels }));
    }
    for [a, b] in closure_edges(dec) {
        s.push_str(&format!("  p{a} -> p{b};\n"));
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize, Debug)]
pub struct LimitJson {
    pub matching: MatchingJson,
    pub piece: PieceJson,
    pub certificate: CertificateJson,
}
