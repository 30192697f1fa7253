//! The declarative job format: a ring header, named objects, and exactly
//! one command.
//!
//! ```text
//! # saturation of a twisted ideal
//! ring 2 domain dvr
//! ideal I = x1, x1 + t^2*x2
//! sat I degree 1
//! ```
//!
//! Declarations: `ring N [weights w1,..,wN] domain q|qt|dvr`,
//! `poly NAME = expr`, `ideal NAME = expr, expr, ...`,
//! `decomp NAME = (expr, expr), ...`, `chain NAME = I0 < I1 < ...`.
//! Commands: gb, height, sat, strength-bound, tame, syzygy, ebar,
//! contract, chains, selftest.

use std::collections::BTreeMap;
use std::fmt;
use tsat_core::groebner::MonomialOrder;
use tsat_core::ringcore::{CoeffDomain, Poly, RingSpec};
use tsat_core::strength::StrengthDecomposition;
use tsat_core::syntax;

#[derive(Debug, Clone)]
pub struct JobError {
    pub line: u32,
    pub col: u32,
    pub msg: String,
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for JobError {}

impl From<syntax::ParseError> for JobError {
    fn from(e: syntax::ParseError) -> Self {
        JobError {
            line: e.line,
            col: e.col,
            msg: e.msg,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Command {
    Gb { ideal: String, order: MonomialOrder },
    Height { ideal: String },
    Sat { ideal: String, degree: u64 },
    StrengthBound { poly: String },
    Tame { poly: String, witness: String },
    Syzygy { ideal: String, degree: u64 },
    Ebar { ideal: String, degree: u64 },
    Contract { ideal: String, degree: u64 },
    Chains { first: String, second: Option<String> },
    Selftest { seed: Option<u64> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Height { .. } => "height",
            Command::Sat { .. } => "sat",
            Command::StrengthBound { .. } => "strength-bound",
            Command::Tame { .. } => "tame",
            Command::Syzygy { .. } => "syzygy",
            Command::Ebar { .. } => "ebar",
            Command::Contract { .. } => "contract",
            Command::Chains { .. } => "chains",
            Command::Selftest { .. } => "selftest",
        }
    }
}

#[derive(Debug)]
pub struct Job {
    pub ring: Option<RingSpec>,
    pub polys: BTreeMap<String, Poly>,
    pub ideals: BTreeMap<String, Vec<Poly>>,
    pub decomps: BTreeMap<String, StrengthDecomposition>,
    pub chains: BTreeMap<String, Vec<String>>,
    pub command: Command,
}

impl Job {
    pub fn ring(&self) -> Result<&RingSpec, JobError> {
        self.ring.as_ref().ok_or_else(|| JobError {
            line: 1,
            col: 1,
            msg: "this command requires a ring declaration".into(),
        })
    }

    pub fn ideal(&self, name: &str, line: u32) -> Result<&[Poly], JobError> {
        self.ideals
            .get(name)
            .map(|v| v.as_slice())
            .ok_or_else(|| JobError {
                line,
                col: 1,
                msg: format!("undefined ideal '{name}'"),
            })
    }
}

fn err(line: u32, col: u32, msg: impl Into<String>) -> JobError {
    JobError {
        line,
        col,
        msg: msg.into(),
    }
}

/// Split at top-level occurrences of a separator (parenthesis depth 0).
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

struct Symbols<'a>(&'a BTreeMap<String, Poly>);

impl syntax::SymbolLookup for Symbols<'_> {
    fn lookup(&self, name: &str) -> Option<Poly> {
        self.0.get(name).cloned()
    }
}

fn parse_ring(rest: &str, lineno: u32) -> Result<RingSpec, JobError> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let mut it = tokens.iter().peekable();
    let n: usize = it
        .next()
        .ok_or_else(|| err(lineno, 1, "expected the number of variables"))?
        .parse()
        .map_err(|_| err(lineno, 1, "expected the number of variables"))?;
    let mut weights = vec![1u32; n];
    let mut domain = None;
    while let Some(tok) = it.next() {
        match *tok {
            "weights" => {
                let spec = it
                    .next()
                    .ok_or_else(|| err(lineno, 1, "expected a weight list"))?;
                let ws: Result<Vec<u32>, _> = spec.split(',').map(str::parse).collect();
                weights = ws.map_err(|_| err(lineno, 1, "invalid weight list"))?;
                if weights.len() != n {
                    return Err(err(lineno, 1, format!("expected {n} weights")));
                }
            }
            "domain" => {
                let d = it
                    .next()
                    .ok_or_else(|| err(lineno, 1, "expected a domain (q, qt, dvr)"))?;
                domain = Some(match *d {
                    "q" => CoeffDomain::FieldQ,
                    "qt" => CoeffDomain::FieldQt,
                    "dvr" => CoeffDomain::Dvr,
                    other => return Err(err(lineno, 1, format!("unknown domain '{other}'"))),
                });
            }
            other => return Err(err(lineno, 1, format!("unexpected token '{other}'"))),
        }
    }
    let domain = domain.ok_or_else(|| err(lineno, 1, "missing 'domain q|qt|dvr'"))?;
    RingSpec::weighted(weights, domain).map_err(|e| err(lineno, 1, e.to_string()))
}

/// Offset of an expression within its line, for diagnostics.
fn expr_offset(line: &str, expr: &str) -> u32 {
    let base = line.as_ptr() as usize;
    let pos = expr.as_ptr() as usize;
    (pos - base) as u32
}

pub fn parse_job(text: &str) -> Result<Job, JobError> {
    let mut ring: Option<RingSpec> = None;
    let mut polys: BTreeMap<String, Poly> = BTreeMap::new();
    let mut ideals: BTreeMap<String, Vec<Poly>> = BTreeMap::new();
    let mut decomps: BTreeMap<String, StrengthDecomposition> = BTreeMap::new();
    let mut chains: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut command: Option<Command> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx as u32 + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        let (head, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r),
            None => (trimmed, ""),
        };
        let need_ring = |ring: &Option<RingSpec>| {
            ring.clone()
                .ok_or_else(|| err(lineno, 1, "declare the ring first"))
        };
        let parse_expr = |ring: &RingSpec, polys: &BTreeMap<String, Poly>, expr: &str| {
            let col = expr_offset(line, expr);
            syntax::parse_poly_with(ring, expr, &Symbols(polys), lineno - 1, col)
                .map_err(JobError::from)
        };
        match head {
            "ring" => {
                if ring.is_some() {
                    return Err(err(lineno, 1, "duplicate ring declaration"));
                }
                ring = Some(parse_ring(rest, lineno)?);
            }
            "poly" => {
                let r = need_ring(&ring)?;
                let (name, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| err(lineno, 1, "expected 'poly NAME = expr'"))?;
                let name = name.trim().to_string();
                let value = parse_expr(&r, &polys, expr)?;
                polys.insert(name, value);
            }
            "ideal" => {
                let r = need_ring(&ring)?;
                let (name, exprs) = rest
                    .split_once('=')
                    .ok_or_else(|| err(lineno, 1, "expected 'ideal NAME = expr, ...'"))?;
                let mut gens = Vec::new();
                for piece in split_top_level(exprs, ',') {
                    let p = parse_expr(&r, &polys, piece)?;
                    if !p.is_zero() {
                        gens.push(p);
                    }
                }
                ideals.insert(name.trim().to_string(), gens);
            }
            "decomp" => {
                let r = need_ring(&ring)?;
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| err(lineno, 1, "expected 'decomp NAME = (g, h), ...'"))?;
                let mut pairs = Vec::new();
                for piece in split_top_level(body, ',') {
                    let piece = piece.trim();
                    let inner = piece
                        .strip_prefix('(')
                        .and_then(|s| s.strip_suffix(')'))
                        .ok_or_else(|| err(lineno, 1, "expected a parenthesized pair"))?;
                    let parts = split_top_level(inner, ',');
                    if parts.len() != 2 {
                        return Err(err(lineno, 1, "a pair has exactly two components"));
                    }
                    let g = parse_expr(&r, &polys, parts[0])?;
                    let h = parse_expr(&r, &polys, parts[1])?;
                    pairs.push((g, h));
                }
                decomps.insert(name.trim().to_string(), StrengthDecomposition { pairs });
            }
            "chain" => {
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| err(lineno, 1, "expected 'chain NAME = I0 < I1 < ...'"))?;
                let names: Vec<String> = body.split('<').map(|s| s.trim().to_string()).collect();
                for n in &names {
                    if !ideals.contains_key(n) {
                        return Err(err(lineno, 1, format!("undefined ideal '{n}' in chain")));
                    }
                }
                chains.insert(name.trim().to_string(), names);
            }
            cmd @ ("gb" | "height" | "sat" | "strength-bound" | "tame" | "syzygy" | "ebar"
            | "contract" | "chains" | "selftest") => {
                if command.is_some() {
                    return Err(err(lineno, 1, "a job holds exactly one command"));
                }
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                let degree_opt = |kw: &str| -> Result<u64, JobError> {
                    let pos = tokens
                        .iter()
                        .position(|t| *t == kw)
                        .ok_or_else(|| err(lineno, 1, format!("expected '{kw} N'")))?;
                    tokens
                        .get(pos + 1)
                        .and_then(|v| v.parse().ok())
                        .ok_or_else(|| err(lineno, 1, format!("expected an integer after '{kw}'")))
                };
                let first = || -> Result<String, JobError> {
                    tokens
                        .first()
                        .map(|s| s.to_string())
                        .ok_or_else(|| err(lineno, 1, "expected an object name"))
                };
                command = Some(match cmd {
                    "gb" => {
                        let order = match tokens.get(1).copied() {
                            None | Some("grevlex") => MonomialOrder::WeightedGrevlex,
                            Some("lex") => MonomialOrder::Lex,
                            Some("block") => MonomialOrder::Block(
                                tokens
                                    .get(2)
                                    .and_then(|v| v.parse().ok())
                                    .ok_or_else(|| err(lineno, 1, "expected 'block K'"))?,
                            ),
                            Some(other) => {
                                return Err(err(lineno, 1, format!("unknown order '{other}'")))
                            }
                        };
                        Command::Gb {
                            ideal: first()?,
                            order,
                        }
                    }
                    "height" => Command::Height { ideal: first()? },
                    "sat" => Command::Sat {
                        ideal: first()?,
                        degree: degree_opt("degree")?,
                    },
                    "strength-bound" => Command::StrengthBound { poly: first()? },
                    "tame" => {
                        let pos = tokens
                            .iter()
                            .position(|t| *t == "witness")
                            .ok_or_else(|| err(lineno, 1, "expected 'witness NAME'"))?;
                        Command::Tame {
                            poly: first()?,
                            witness: tokens
                                .get(pos + 1)
                                .map(|s| s.to_string())
                                .ok_or_else(|| err(lineno, 1, "expected 'witness NAME'"))?,
                        }
                    }
                    "syzygy" => Command::Syzygy {
                        ideal: first()?,
                        degree: degree_opt("degree")?,
                    },
                    "ebar" => Command::Ebar {
                        ideal: first()?,
                        degree: degree_opt("degree")?,
                    },
                    "contract" => Command::Contract {
                        ideal: first()?,
                        degree: degree_opt("degree")?,
                    },
                    "chains" => Command::Chains {
                        first: first()?,
                        second: tokens.get(1).map(|s| s.to_string()),
                    },
                    "selftest" => Command::Selftest {
                        seed: match tokens.iter().position(|t| *t == "seed") {
                            Some(pos) => Some(tokens.get(pos + 1).and_then(|v| v.parse().ok()).ok_or_else(
                                || err(lineno, 1, "expected an integer after 'seed'"),
                            )?),
                            None => None,
                        },
                    },
                    _ => unreachable!(),
                });
            }
            other => {
                return Err(err(lineno, 1, format!("unknown directive '{other}'")));
            }
        }
    }
    let command = command.ok_or_else(|| err(1, 1, "the job does not contain a command"))?;
    // referenced names must exist
    let check_ideal = |name: &String| -> Result<(), JobError> {
        if ideals.contains_key(name) {
            Ok(())
        } else {
            Err(err(1, 1, format!("undefined ideal '{name}'")))
        }
    };
    match &command {
        Command::Gb { ideal, .. }
        | Command::Height { ideal }
        | Command::Sat { ideal, .. }
        | Command::Syzygy { ideal, .. }
        | Command::Ebar { ideal, .. }
        | Command::Contract { ideal, .. } => check_ideal(ideal)?,
        Command::StrengthBound { poly } | Command::Tame { poly, .. } => {
            if !polys.contains_key(poly) {
                return Err(err(1, 1, format!("undefined polynomial '{poly}'")));
            }
            if let Command::Tame { witness, .. } = &command {
                if !decomps.contains_key(witness) {
                    return Err(err(1, 1, format!("undefined decomposition '{witness}'")));
                }
            }
        }
        Command::Chains { first, second } => {
            for name in std::iter::once(first).chain(second.iter()) {
                if !chains.contains_key(name) {
                    return Err(err(1, 1, format!("undefined chain '{name}'")));
                }
            }
        }
        Command::Selftest { .. } => {}
    }
    Ok(Job {
        ring,
        polys,
        ideals,
        decomps,
        chains,
        command,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_sat_job() {
        let job = parse_job(
            "# demo\nring 2 domain dvr\nideal I = x1, x1 + t^2*x2\nsat I degree 1\n",
        )
        .unwrap();
        assert_eq!(job.ideals["I"].len(), 2);
        assert!(matches!(job.command, Command::Sat { degree: 1, .. }));
    }

    #[test]
    fn domain_mismatch_diagnostic() {
        let e = parse_job("ring 2 domain dvr\npoly f = (1/t)*x1\nheight f\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("Q[t]_(t)"), "{}", e.msg);
    }

    #[test]
    fn undefined_variable_diagnostic() {
        let e = parse_job("ring 2 domain qt\npoly f = x3\ngb f\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("x3"));
    }

    #[test]
    fn undefined_names_are_rejected() {
        let e = parse_job("ring 2 domain qt\ngb J\n").unwrap_err();
        assert!(e.msg.contains("undefined ideal"));
    }

    #[test]
    fn decomp_pairs_parse() {
        let job = parse_job(
            "ring 2 domain qt\npoly f = x1*x2\ndecomp D = (t*x1, (1/t)*x2)\ntame f witness D\n",
        )
        .unwrap();
        assert_eq!(job.decomps["D"].pairs.len(), 1);
    }

    #[test]
    fn chain_declarations() {
        let job = parse_job(
            "ring 2 domain dvr\nideal Z = 0\nideal A = x1\nideal B = x1, x2\nchain C = Z < A < B\nchains C\n",
        )
        .unwrap();
        assert_eq!(job.chains["C"], vec!["Z", "A", "B"]);
        assert!(job.ideals["Z"].is_empty());
    }
}
