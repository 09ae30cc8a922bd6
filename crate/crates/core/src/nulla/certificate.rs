use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::linsys::LinearSystem;
use crate::algebra::{Polynomial, Rational};
use crate::encodings::{parse_system, write_system, PolySystem};
use crate::error::{Error, Result};

/// Coefficients `α_i` with `Σ α_i f_i = 1` over a fixed generator list.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub system: Arc<PolySystem>,
    pub coefficients: Vec<Polynomial>,
    pub degree: u32,
}

pub(crate) fn max_degree(coefficients: &[Polynomial]) -> u32 {
    coefficients.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
}

impl Certificate {
    pub fn new(system: Arc<PolySystem>, coefficients: Vec<Polynomial>) -> Result<Certificate> {
        if coefficients.len() != system.len() {
            return Err(Error::LengthMismatch { expected: system.len(), got: coefficients.len() });
        }
        let degree = max_degree(&coefficients);
        Ok(Certificate { system, coefficients, degree })
    }

    /// Assembles `α_i = Σ_μ x_(i,μ) μ` from a solution of `ls`.
    pub(crate) fn from_solution(system: Arc<PolySystem>, ls: &LinearSystem, x: &[Rational]) -> Certificate {
        let mut coefficients = vec![Polynomial::zero(); system.len()];
        for ((i, mu), v) in ls.columns.iter().zip(x) {
            if !v.is_zero() {
                coefficients[*i].add_term(mu.clone(), v.clone());
            }
        }
        let degree = max_degree(&coefficients);
        Certificate { system, coefficients, degree }
    }

    /// `Σ α_i f_i`, expanded.
    pub fn combination(&self) -> Result<Polynomial> {
        if self.coefficients.len() != self.system.len() {
            return Err(Error::LengthMismatch { expected: self.system.len(), got: self.coefficients.len() });
        }
        let mut total = Polynomial::zero();
        for (a, g) in self.coefficients.iter().zip(&self.system.generators) {
            if !a.is_zero() {
                total.add_assign_ref(&(a * g.expanded()));
            }
        }
        Ok(total)
    }

    /// True iff the combination is exactly 1 and the stored degree matches.
    pub fn verify(&self) -> Result<bool> {
        Ok(self.combination()?.is_one() && self.degree == max_degree(&self.coefficients))
    }

    pub fn to_json(&self) -> String {
        let text = write_system(&self.system);
        let mut domains = BTreeMap::new();
        let mut generators = Vec::new();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("domain ") {
                let (v, spec) = rest.split_once(' ').expect("domain line");
                domains.insert(v.to_string(), spec.to_string());
            } else if line.starts_with("gen ") || line.starts_with("wit ") {
                generators.push(line.to_string());
            }
        }
        let file = CertFile {
            format: FORMAT.to_string(),
            encoding: self.system.meta.encoding.clone(),
            params: self.system.meta.params.clone(),
            domains,
            generators,
            degree: self.degree,
            coefficients: self.coefficients.iter().map(Polynomial::to_canonical).collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let file: CertFile = serde_json::from_str(text)?;
        if file.format != FORMAT {
            return Err(Error::Parse(format!("unknown certificate format `{}`", file.format)));
        }
        let mut sys = format!("encoding {}\n", file.encoding);
        for (k, v) in &file.params {
            sys.push_str(&format!("param {k} {v}\n"));
        }
        for (v, d) in &file.domains {
            sys.push_str(&format!("domain {v} {d}\n"));
        }
        for g in &file.generators {
            sys.push_str(g);
            sys.push('\n');
        }
        let system = Arc::new(parse_system(&sys)?);
        let coefficients = file
            .coefficients
            .iter()
            .map(|c| c.parse())
            .collect::<Result<Vec<Polynomial>>>()?;
        if coefficients.len() != system.len() {
            return Err(Error::LengthMismatch { expected: system.len(), got: coefficients.len() });
        }
        Ok(Certificate { system, coefficients, degree: file.degree })
    }
}

const FORMAT: &str = "nullstellensatz-certificate/1";

#[derive(Serialize, Deserialize)]
struct CertFile {
    format: String,
    encoding: String,
    params: BTreeMap<String, String>,
    domains: BTreeMap<String, String>,
    generators: Vec<String>,
    degree: u32,
    coefficients: Vec<String>,
}
