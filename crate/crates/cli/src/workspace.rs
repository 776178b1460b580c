//! The line-oriented workspace format.
//!
//! ```text
//! ring 4                      # 0 for Z, otherwise a modulus >= 2
//! module M [2]                # relation matrix: rows ';', entries ','
//! module F []                 # free; rank from a following `gens` clause
//! gens 2
//! morphism f M F [1;0]        # matrix is target-gens x source-gens
//! ses E f g
//! next X E E                  # ordered list, leftmost factor first
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Everything is validated at
//! parse time (well-definedness of morphisms, exactness of sequences), and
//! diagnostics carry the offending line number.

use std::fmt;

use thiserror::Error;
use yext::{FpModule, Matrix, ModMorphism, NExtension, RingSpec, ShortExactSeq};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown {kind} '{name}'")]
    UnknownName { kind: &'static str, name: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] yext::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub struct Workspace {
    pub ring: RingSpec,
    pub modules: Vec<(String, FpModule)>,
    pub morphisms: Vec<(String, ModMorphism)>,
    pub sequences: Vec<(String, ShortExactSeq)>,
    pub extensions: Vec<(String, NExtension)>,
}

impl Default for Workspace {
    fn default() -> Self {
        Workspace {
            ring: RingSpec::integers(),
            modules: Vec::new(),
            morphisms: Vec::new(),
            sequences: Vec::new(),
            extensions: Vec::new(),
        }
    }
}

fn lookup<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
}

impl Workspace {
    pub fn module(&self, name: &str) -> Result<&FpModule, CliError> {
        lookup(&self.modules, name).ok_or(CliError::UnknownName {
            kind: "module",
            name: name.to_string(),
        })
    }

    pub fn morphism(&self, name: &str) -> Result<&ModMorphism, CliError> {
        lookup(&self.morphisms, name).ok_or(CliError::UnknownName {
            kind: "morphism",
            name: name.to_string(),
        })
    }

    pub fn sequence(&self, name: &str) -> Result<&ShortExactSeq, CliError> {
        lookup(&self.sequences, name).ok_or(CliError::UnknownName {
            kind: "ses",
            name: name.to_string(),
        })
    }

    /// A named extension: either a `next` binding or a `ses` binding viewed
    /// as a degree-one extension.
    pub fn extension(&self, name: &str) -> Result<NExtension, CliError> {
        if let Some(x) = lookup(&self.extensions, name) {
            return Ok(x.clone());
        }
        if let Some(s) = lookup(&self.sequences, name) {
            return Ok(NExtension::from_ses(s.clone()));
        }
        Err(CliError::UnknownName {
            kind: "extension",
            name: name.to_string(),
        })
    }
}

fn parse_matrix(text: &str, line: usize) -> Result<(usize, usize, Vec<i64>), CliError> {
    let trimmed = text.trim();
    if !trimmed.starts_with('[') || !trimmed.ends_with(']') {
        return Err(CliError::Parse {
            line,
            message: format!("expected a bracketed matrix, got '{text}'"),
        });
    }
    let body = &trimmed[1..trimmed.len() - 1];
    if body.trim().is_empty() {
        return Ok((0, 0, Vec::new()));
    }
    let mut entries = Vec::new();
    let rows: Vec<&str> = body.split(';').collect();
    let mut cols = None;
    for row in &rows {
        let parts: Vec<&str> = row.split(',').collect();
        match cols {
            None => cols = Some(parts.len()),
            Some(c) if c == parts.len() => {}
            Some(c) => {
                return Err(CliError::Parse {
                    line,
                    message: format!("ragged matrix rows: {} vs {}", c, parts.len()),
                })
            }
        }
        for p in parts {
            entries.push(p.trim().parse::<i64>().map_err(|_| CliError::Parse {
                line,
                message: format!("bad integer '{}'", p.trim()),
            })?);
        }
    }
    Ok((rows.len(), cols.unwrap_or(0), entries))
}

pub fn parse_workspace(text: &str) -> Result<Workspace, CliError> {
    let mut ws = Workspace::default();
    let mut last_free_module: Option<usize> = None;
    let mut ring_fixed = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = stripped.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "ring" => {
                if tokens.len() != 2 {
                    return Err(CliError::Parse {
                        line,
                        message: "usage: ring <m>".into(),
                    });
                }
                if ring_fixed || !ws.modules.is_empty() {
                    return Err(CliError::Parse {
                        line,
                        message: "ring must be declared once, before any module".into(),
                    });
                }
                let m: u64 = tokens[1].parse().map_err(|_| CliError::Parse {
                    line,
                    message: format!("bad modulus '{}'", tokens[1]),
                })?;
                ws.ring = if m == 0 {
                    RingSpec::integers()
                } else {
                    RingSpec::modular(m).map_err(|e| CliError::Parse {
                        line,
                        message: e.to_string(),
                    })?
                };
                ring_fixed = true;
            }
            "module" => {
                if tokens.len() != 3 {
                    return Err(CliError::Parse {
                        line,
                        message: "usage: module <name> [relations]".into(),
                    });
                }
                let name = tokens[1].to_string();
                if lookup(&ws.modules, &name).is_some() {
                    return Err(CliError::Parse {
                        line,
                        message: format!("duplicate module '{name}'"),
                    });
                }
                let (rows, cols, entries) = parse_matrix(tokens[2], line)?;
                let (gens, relations) = if rows == 0 && cols == 0 {
                    (1, Matrix::zero(1, 0)) // rank may be adjusted by `gens`
                } else {
                    (rows, Matrix::from_i64(rows, cols, &entries))
                };
                let module =
                    FpModule::present(ws.ring, gens, &relations).map_err(|e| CliError::Parse {
                        line,
                        message: e.to_string(),
                    })?;
                last_free_module = if rows == 0 && cols == 0 {
                    Some(ws.modules.len())
                } else {
                    None
                };
                ws.modules.push((name, module));
            }
            "gens" => {
                if tokens.len() != 2 {
                    return Err(CliError::Parse {
                        line,
                        message: "usage: gens <count>".into(),
                    });
                }
                let rank: usize = tokens[1].parse().map_err(|_| CliError::Parse {
                    line,
                    message: format!("bad generator count '{}'", tokens[1]),
                })?;
                let slot = last_free_module.take().ok_or(CliError::Parse {
                    line,
                    message: "gens clause must follow a module with empty relations".into(),
                })?;
                ws.modules[slot].1 = FpModule::free(ws.ring, rank);
            }
            "morphism" => {
                if tokens.len() != 5 {
                    return Err(CliError::Parse {
                        line,
                        message: "usage: morphism <name> <src> <tgt> [matrix]".into(),
                    });
                }
                let name = tokens[1].to_string();
                if lookup(&ws.morphisms, &name).is_some() {
                    return Err(CliError::Parse {
                        line,
                        message: format!("duplicate morphism '{name}'"),
                    });
                }
                let src = ws.module(tokens[2]).map_err(|e| CliError::Parse {
                    line,
                    message: e.to_string(),
                })?;
                let tgt = ws.module(tokens[3]).map_err(|e| CliError::Parse {
                    line,
                    message: e.to_string(),
                })?;
                let (rows, cols, entries) = parse_matrix(tokens[4], line)?;
                let expected = (tgt.generators(), src.generators());
                let matrix = if rows == 0 && cols == 0 && expected.0 * expected.1 == 0 {
                    Matrix::zero(expected.0, expected.1)
                } else if (rows, cols) == expected {
                    Matrix::from_i64(rows, cols, &entries)
                } else {
                    return Err(CliError::Parse {
                        line,
                        message: format!(
                            "matrix is {rows}x{cols}, expected {}x{}",
                            expected.0, expected.1
                        ),
                    });
                };
                let morphism =
                    ModMorphism::new(src, tgt, &matrix).map_err(|e| CliError::Parse {
                        line,
                        message: e.to_string(),
                    })?;
                ws.morphisms.push((name, morphism));
                last_free_module = None;
            }
            "ses" => {
                if tokens.len() != 4 {
                    return Err(CliError::Parse {
                        line,
                        message: "usage: ses <name> <f> <g>".into(),
                    });
                }
                let name = tokens[1].to_string();
                if lookup(&ws.sequences, &name).is_some() {
                    return Err(CliError::Parse {
                        line,
                        message: format!("duplicate ses '{name}'"),
                    });
                }
                let f = ws.morphism(tokens[2]).map_err(|e| CliError::Parse {
                    line,
                    message: e.to_string(),
                })?;
                let g = ws.morphism(tokens[3]).map_err(|e| CliError::Parse {
                    line,
                    message: e.to_string(),
                })?;
                let seq = ShortExactSeq::new(f.clone(), g.clone()).map_err(|e| {
                    CliError::Parse {
                        line,
                        message: e.to_string(),
                    }
                })?;
                ws.sequences.push((name, seq));
                last_free_module = None;
            }
            "next" => {
                if tokens.len() < 3 {
                    return Err(CliError::Parse {
                        line,
                        message: "usage: next <name> <ses...> (leftmost factor first)".into(),
                    });
                }
                let name = tokens[1].to_string();
                if lookup(&ws.extensions, &name).is_some() {
                    return Err(CliError::Parse {
                        line,
                        message: format!("duplicate next '{name}'"),
                    });
                }
                let mut factors = Vec::new();
                for part in &tokens[2..] {
                    let seq = ws.sequence(part).map_err(|e| CliError::Parse {
                        line,
                        message: e.to_string(),
                    })?;
                    factors.push(seq.clone());
                }
                let ext = NExtension::new(factors).map_err(|e| CliError::Parse {
                    line,
                    message: e.to_string(),
                })?;
                ws.extensions.push((name, ext));
                last_free_module = None;
            }
            other => {
                return Err(CliError::Parse {
                    line,
                    message: format!("unknown directive '{other}'"),
                });
            }
        }
    }
    Ok(ws)
}

/// Renders a workspace back into the input grammar. Sequence and extension
/// lines refer to the morphism names they were built from, so only values
/// reachable from names survive a round trip; that is all a workspace holds.
impl fmt::Display for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ring.modulus())?;
        for (name, module) in &self.modules {
            if module.relations().cols() == 0 {
                writeln!(f, "module {name} []")?;
                writeln!(f, "gens {}", module.generators())?;
            } else {
                writeln!(f, "module {name} {}", module.relations())?;
            }
        }
        for (name, morphism) in &self.morphisms {
            let src = self
                .modules
                .iter()
                .find(|(_, m)| m == morphism.source())
                .map(|(n, _)| n.as_str())
                .unwrap_or("?");
            let tgt = self
                .modules
                .iter()
                .find(|(_, m)| m == morphism.target())
                .map(|(n, _)| n.as_str())
                .unwrap_or("?");
            writeln!(f, "morphism {name} {src} {tgt} {}", morphism.matrix())?;
        }
        for (name, seq) in &self.sequences {
            let locate = |wanted: &yext::ModMorphism| {
                self.morphisms
                    .iter()
                    .find(|(_, m)| {
                        m.matrix() == wanted.matrix()
                            && m.source() == wanted.source()
                            && m.target() == wanted.target()
                    })
                    .map(|(n, _)| n.as_str())
                    .unwrap_or("?")
            };
            writeln!(f, "ses {name} {} {}", locate(seq.f()), locate(seq.g()))?;
        }
        for (name, ext) in &self.extensions {
            let mut parts = Vec::new();
            for factor in ext.factors() {
                let part = self
                    .sequences
                    .iter()
                    .find(|(_, s)| {
                        s.f().matrix() == factor.f().matrix()
                            && s.g().matrix() == factor.g().matrix()
                            && s.left() == factor.left()
                    })
                    .map(|(n, _)| n.as_str())
                    .unwrap_or("?");
                parts.push(part);
            }
            writeln!(f, "next {name} {}", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GENERATOR: &str = "\
# the order-two generator over Z/4
ring 4
module M [2]
module R []
morphism f M R [2]
morphism g R M [1]
ses E f g
";

    #[test]
    fn parses_the_generator_workspace() {
        let ws = parse_workspace(GENERATOR).unwrap();
        assert_eq!(ws.ring.modulus(), 4);
        assert_eq!(ws.modules.len(), 2);
        let e = ws.sequence("E").unwrap();
        assert!(!e.is_split());
    }

    #[test]
    fn empty_input_is_the_default_workspace() {
        let ws = parse_workspace("").unwrap();
        assert!(ws.ring.is_integers());
        assert!(ws.modules.is_empty());
    }

    #[test]
    fn ill_defined_morphism_is_a_line_error() {
        let bad = "ring 4\nmodule M [2]\nmodule R []\nmorphism f M R [1]\n";
        match parse_workspace(bad) {
            Err(CliError::Parse { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("morphism"), "{message}");
            }
            Err(other) => panic!("unexpected error {other:?}"),
            Ok(_) => panic!("parse should fail"),
        }
    }

    #[test]
    fn non_exact_ses_is_rejected_with_line() {
        let bad = "\
ring 4
module M [2]
module R []
morphism f M R [0]
morphism g R M [1]
ses E f g
";
        match parse_workspace(bad) {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 6),
            Err(other) => panic!("unexpected error {other:?}"),
            Ok(_) => panic!("parse should fail"),
        }
    }

    #[test]
    fn print_and_reparse_round_trip() {
        let text = format!("{GENERATOR}next X E E\n");
        let ws = parse_workspace(&text).unwrap();
        let printed = ws.to_string();
        let again = parse_workspace(&printed).unwrap();
        assert_eq!(ws.modules.len(), again.modules.len());
        for ((_, a), (_, b)) in ws.modules.iter().zip(&again.modules) {
            assert_eq!(a, b);
        }
        for ((_, a), (_, b)) in ws.morphisms.iter().zip(&again.morphisms) {
            assert!(a.equal_to(b));
        }
        for ((_, a), (_, b)) in ws.sequences.iter().zip(&again.sequences) {
            assert!(a.equivalent(b));
        }
        assert_eq!(ws.extensions.len(), again.extensions.len());
    }

    #[test]
    fn gens_clause_resizes_free_module() {
        let ws = parse_workspace("ring 0\nmodule F []\ngens 3\n").unwrap();
        assert_eq!(ws.module("F").unwrap().generators(), 3);
    }
}
