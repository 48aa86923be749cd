use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use springer_cells::closure::{closure_decomposition, synthesize_limit_curve, verify_limit_curve};
use springer_cells::exactalg::parse_q;
use springer_cells::matchcore::{bt_word, check_word, enumerate_matchings, parse_arcs, word_to_matching};
use springer_cells::oracle::{cross_check_cells, FqConfig};
use springer_cells::{build_template, labeled_cut, Arc, BTWord, JordanType, LabeledPiece, Matching, Q};

use crate::output::*;
use crate::suite::{random_target, run_suite};
use crate::{CliError, Command, Format, MatchingArgs};

fn emit_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(v).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("{cmd} does not support --format {f:?}").to_lowercase())
}

pub fn resolve(args: &MatchingArgs) -> Result<(Matching, JordanType), CliError> {
    let from_word = match &args.word {
        Some(w) => {
            let w: BTWord = w.parse()?;
            if let Some(nn) = args.big_n {
                if nn != w.len() {
                    return Err(CliError::Usage(format!("--N {nn} disagrees with word length {}", w.len())));
                }
            }
            if let Some(n) = args.n {
                if n != w.top_count() {
                    return Err(CliError::Usage(format!("--n {n} disagrees with the word's {} T letters", w.top_count())));
                }
            }
            let jt = JordanType::new(w.top_count(), w.len())?;
            check_word(&w, &jt)?;
            Some((word_to_matching(&w), jt, w))
        }
        None => None,
    };
    let from_arcs = match &args.matching {
        Some(s) => {
            let arcs = parse_matching_text(s)?;
            let big_n = args
                .big_n
                .or(from_word.as_ref().map(|x| x.1.big_n))
                .unwrap_or_else(|| arcs.iter().map(|a| a.term).max().unwrap_or(0));
            let n = args
                .n
                .or(from_word.as_ref().map(|x| x.1.n))
                .ok_or_else(|| CliError::Usage("--n is required with --matching".into()))?;
            let m = Matching::new(big_n, arcs)?;
            let jt = JordanType::new(n, big_n)?;
            bt_word(&m, &jt)?;
            Some((m, jt))
        }
        None => None,
    };
    match (from_word, from_arcs) {
        (Some((mw, jt, w)), Some((m, _))) => {
            if mw != m {
                return Err(CliError::Usage(format!("word {w} encodes {mw}, not {m}")));
            }
            Ok((m, jt))
        }
        (Some((m, jt, _)), None) | (None, Some((m, jt))) => Ok((m, jt)),
        (None, None) => Err(CliError::Usage("give --matching or --word".into())),
    }
}

fn parse_matching_text(s: &str) -> Result<Vec<Arc>, CliError> {
    let t = s.trim();
    if t.is_empty() || t == "{}" {
        return Ok(Vec::new());
    }
    Ok(parse_arcs(t)?)
}

fn parse_target(s: &str, len: usize) -> Result<Vec<Q>, CliError> {
    let v: Vec<Q> = s
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| parse_q(x.trim()).ok_or_else(|| CliError::Usage(format!("bad rational {x:?}"))))
        .collect::<Result<_, _>>()?;
    if v.len() != len {
        return Err(CliError::Usage(format!("target needs {len} values, got {}", v.len())));
    }
    Ok(v)
}

fn certify(m: &Matching, jt: &JordanType, piece: &LabeledPiece, target: Vec<Q>) -> CertificateJson {
    let res = synthesize_limit_curve(m, jt, &piece.cut, &target)
        .and_then(|c| verify_limit_curve(m, jt, &c, piece, &target).map(|ok| (c, ok)));
    let target = target.iter().map(|x| x.to_string()).collect();
    match res {
        Ok((c, ok)) => CertificateJson { target, curve: Some(CurveJson::new(&c)), verified: ok, error: None },
        Err(e) => CertificateJson { target, curve: None, verified: false, error: Some(e.to_string()) },
    }
}

pub fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Enumerate { big_n, n, out: o } => {
            let jt = JordanType::new(n, big_n)?;
            let ms = enumerate_matchings(&jt);
            let rows = ms.iter().map(|m| MatchingJson::new(m, &jt)).collect::<Result<Vec<_>, _>>()?;
            match o.format() {
                Format::Json => emit_json(out, &EnumerateJson { big_n, n, count: rows.len(), matchings: rows })?,
                Format::Table => {
                    for (m, r) in ms.iter().zip(&rows) {
                        writeln!(out, "{}  {:<24} {:?}", r.word, m.to_string(), r.perm)?;
                    }
                    writeln!(out, "{} matchings", rows.len())?;
                }
                f => return Err(unsupported("enumerate", f)),
            }
        }
        Command::Word { input, out: o } => {
            let (m, jt) = resolve(&input)?;
            let j = MatchingJson::new(&m, &jt)?;
            match o.format() {
                Format::Json => emit_json(out, &j)?,
                Format::Table => writeln!(out, "{m}\n{}\n{:?}", j.word, j.perm)?,
                f => return Err(unsupported("word", f)),
            }
        }
        Command::Cell { input, latex, out: o } => {
            let (m, jt) = resolve(&input)?;
            let ct = build_template(&m, &jt)?;
            let j = CellJson::new(&ct)?;
            let f = if latex { Format::Latex } else { o.format() };
            match f {
                Format::Json => emit_json(out, &j)?,
                Format::Latex => write!(out, "{}", latex_array(&j.matrix))?,
                Format::Table => {
                    let names: Vec<String> = j.params.iter().map(|(a, p)| format!("{a}={p}")).collect();
                    writeln!(out, "{m}  {}  {}", j.matching.word, names.join(" "))?;
                    write!(out, "{}", text_array(&j.matrix))?;
                }
                f => return Err(unsupported("cell", f)),
            }
        }
        Command::Cut { input, arcs, labels, out: o } => {
            let (m, jt) = resolve(&input)?;
            let cut = parse_matching_text(&arcs)?;
            let p = labeled_cut(&m, &cut, &jt)?;
            let j = CutJson { origin: MatchingJson::new(&m, &jt)?, piece: PieceJson::new(&p)? };
            match o.format() {
                Format::Json => emit_json(out, &j)?,
                Format::Table => {
                    writeln!(out, "{}  {}  dim {}", p.base, j.piece.word, j.piece.dim)?;
                    if labels {
                        writeln!(out, "{}", label_text(&p))?;
                    }
                }
                f => return Err(unsupported("cut", f)),
            }
        }
        Command::Closure { input, dot, certify: cert, seed, out: o } => {
            let (m, jt) = resolve(&input)?;
            let dec = closure_decomposition(&m, &jt)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pieces = Vec::new();
            let mut all_ok = true;
            for p in &dec.pieces {
                let certificates = if cert {
                    (0..5)
                        .map(|_| {
                            let t = random_target(&mut rng, p.remaining().len());
                            certify(&m, &jt, p, t)
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                all_ok &= certificates.iter().all(|c| c.verified);
                pieces.push(ClosurePieceJson { piece: PieceJson::new(p)?, certificates });
            }
            let j = ClosureJson {
                matching: MatchingJson::new(&m, &jt)?,
                pieces,
                edges: closure_edges(&dec),
                certified: cert.then_some(all_ok),
            };
            let graph = closure_dot(&dec);
            match dot.as_deref() {
                Some("-") => write!(out, "{graph}")?,
                Some(path) => std::fs::write(path, &graph)?,
                None => {}
            }
            if dot.as_deref() != Some("-") {
                match o.format() {
                    Format::Json => emit_json(out, &j)?,
                    Format::Dot => write!(out, "{graph}")?,
                    Format::Table => {
                        for (i, p) in j.pieces.iter().enumerate() {
                            let status = if cert {
                                if p.certificates.iter().all(|c| c.verified) { "  certified" } else { "  FAILED" }
                            } else {
                                ""
                            };
                            writeln!(out, "p{i} {} {} dim {}  {}{status}", p.piece.word, p.piece.base, p.piece.dim, label_text(&dec.pieces[i]))?;
                        }
                    }
                    f => return Err(unsupported("closure", f)),
                }
            }
            if !all_ok {
                return Err(CliError::Failed);
            }
        }
        Command::Limit { input, arcs, target, seed, out: o } => {
            let (m, jt) = resolve(&input)?;
            let cut = parse_matching_text(&arcs)?;
            let p = labeled_cut(&m, &cut, &jt)?;
            let k = p.remaining().len();
            let t = match target {
                Some(s) => parse_target(&s, k)?,
                None => random_target(&mut ChaCha8Rng::seed_from_u64(seed), k),
            };
            let c = certify(&m, &jt, &p, t);
            let ok = c.verified;
            let j = LimitJson { matching: MatchingJson::new(&m, &jt)?, piece: PieceJson::new(&p)?, certificate: c };
            match o.format() {
                Format::Json => emit_json(out, &j)?,
                Format::Table => {
                    writeln!(out, "{m} -> {}  target [{}]", p.base, j.certificate.target.join(", "))?;
                    if let Some(c) = &j.certificate.curve {
                        for (a, coeffs) in &c.entries {
                            writeln!(out, "  {a}: [{}]", coeffs.join(", "))?;
                        }
                    }
                    if let Some(e) = &j.certificate.error {
                        writeln!(out, "  error: {e}")?;
                    }
                    writeln!(out, "{}", if ok { "verified" } else { "NOT verified" })?;
                }
                f => return Err(unsupported("limit", f)),
            }
            if !ok {
                return Err(CliError::Failed);
            }
        }
        Command::Fqcount { q, big_n, n, out: o } => {
            let jt = JordanType::new(n, big_n)?;
            if big_n > 6 {
                return Err(CliError::Usage("fqcount supports N ≤ 6".into()));
            }
            let r = cross_check_cells(&FqConfig::new(q, jt)?)?;
            match o.format() {
                Format::Json => emit_json(out, &r)?,
                Format::Table => {
                    for b in &r.buckets {
                        writeln!(out, "{:?}  {:<20} {}", b.w, b.matching.as_deref().unwrap_or("?"), b.size)?;
                    }
                    writeln!(out, "total {} of {} flags over F_{}", r.total, r.complete_flags, r.q)?;
                    writeln!(
                        out,
                        "patterns {} sizes {} instantiation {} total {}",
                        r.patterns_match, r.sizes_match, r.instantiation_match, r.total_match
                    )?;
                }
                f => return Err(unsupported("fqcount", f)),
            }
            if !r.passed() {
                return Err(CliError::Failed);
            }
        }
        Command::Verify { suite, max_n, seed, out: o } => {
            let report = run_suite(suite, max_n, seed)?;
            match o.format() {
                Format::Json => emit_json(out, &report)?,
                Format::Table => write!(out, "{}", report.table())?,
                f => return Err(unsupported("verify", f)),
            }
            if !report.passed {
                return Err(CliError::Failed);
            }
        }
    }
    Ok(())
}
