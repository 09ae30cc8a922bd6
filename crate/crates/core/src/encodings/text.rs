//! Line-oriented system files.
//!
//! ```text
//! encoding coloring
//! param k 3
//! domain x_1 roots 3
//! domain x_2 range 1 4
//! domain y_1 bool
//! domain s_1 witness
//! gen (x_1^3 - 1)
//! wit s_1 (x_1 - x_2)*(x_1 - x_3)
//! ```

use super::{DomainSpec, Generator, GeneratorKind, PolySystem};
use crate::algebra::parse::parse_factors;
use crate::algebra::VarId;
use crate::error::Error;

pub fn write_system(s: &PolySystem) -> String {
    let mut out = format!("encoding {}\n", s.meta.encoding);
    for (k, v) in &s.meta.params {
        out.push_str(&format!("param {k} {v}\n"));
    }
    for (v, d) in &s.domains {
        let spec = match d {
            DomainSpec::IntRange { lo, hi } => format!("range {lo} {hi}"),
            DomainSpec::RootsOfUnity(k) => format!("roots {k}"),
            DomainSpec::Boolean => "bool".to_string(),
            DomainSpec::Witness => "witness".to_string(),
        };
        out.push_str(&format!("domain {v} {spec}\n"));
    }
    for g in &s.generators {
        let body = g.factors().iter().map(|f| format!("({f})")).collect::<Vec<_>>().join("*");
        let body = if body.is_empty() { "(1)".to_string() } else { body };
        match g.kind() {
            GeneratorKind::Zero => out.push_str(&format!("gen {body}\n")),
            GeneratorKind::Witness(w) => out.push_str(&format!("wit {w} {body}\n")),
        }
    }
    out
}

pub fn parse_system(text: &str) -> Result<PolySystem, Error> {
    let mut s = PolySystem::new("");
    let mut seen_encoding = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Malformed { line, msg: msg.to_string() };
        let wrap = |e: Error| Error::Malformed { line, msg: e.to_string() };
        let (head, rest) = l.split_once(' ').ok_or_else(|| bad("expected `keyword value`"))?;
        match head {
            "encoding" => {
                s.meta.encoding = rest.trim().to_string();
                seen_encoding = true;
            }
            "param" => {
                let (key, val) = rest.trim().split_once(' ').ok_or_else(|| bad("expected `param key value`"))?;
                s.meta.params.insert(key.to_string(), val.trim().to_string());
            }
            "domain" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                let v: VarId = f.first().ok_or_else(|| bad("missing variable"))?.parse().map_err(wrap)?;
                let num = |t: Option<&&str>| -> Result<i64, Error> {
                    t.ok_or_else(|| bad("missing bound"))?.parse().map_err(|_| bad("bad integer"))
                };
                let d = match f.get(1).copied() {
                    Some("range") if f.len() == 4 => {
                        let (lo, hi) = (num(f.get(2))?, num(f.get(3))?);
                        if lo > hi {
                            return Err(bad("empty range"));
                        }
                        DomainSpec::IntRange { lo, hi }
                    }
                    Some("roots") if f.len() == 3 => {
                        let k = num(f.get(2))?;
                        if k < 1 {
                            return Err(bad("root order must be positive"));
                        }
                        DomainSpec::RootsOfUnity(k as u32)
                    }
                    Some("bool") if f.len() == 2 => DomainSpec::Boolean,
                    Some("witness") if f.len() == 2 => DomainSpec::Witness,
                    _ => return Err(bad("unknown domain")),
                };
                s.domain(v, d);
            }
            "gen" => s.push(Generator::product(parse_factors(rest).map_err(wrap)?)),
            "wit" => {
                let (w, body) = rest.trim().split_once(' ').ok_or_else(|| bad("expected `wit s body`"))?;
                let w: VarId = w.parse().map_err(wrap)?;
                s.push(Generator::witness(w, parse_factors(body).map_err(wrap)?));
            }
            _ => return Err(bad(&format!("unknown keyword `{head}`"))),
        }
    }
    if !seen_encoding {
        return Err(Error::Malformed { line: 0, msg: "missing `encoding` line".into() });
    }
    Ok(s)
}
