use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use super::certificate::Certificate;
use super::linsys::{build_system, SupportFilter};
use super::solve::solve_exact;
use crate::encodings::PolySystem;
use crate::error::{Error, Result};

/// One degree tried by [`find_certificate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Attempt {
    pub degree: u32,
    pub rows: usize,
    pub cols: usize,
    pub nnz: usize,
    pub solvable: bool,
    pub millis: u128,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub certificate: Option<Certificate>,
    pub attempts: Vec<Attempt>,
}

impl SearchOutcome {
    pub fn degree(&self) -> Option<u32> {
        self.certificate.as_ref().map(|c| c.degree)
    }
}

/// Solves at one degree; the certificate is verified before returning.
pub fn certificate_at_degree(
    system: &Arc<PolySystem>,
    d: u32,
    keep_prob: f64,
    seed: u64,
    filter: Option<SupportFilter<'_>>,
) -> Result<(Option<Certificate>, Attempt)> {
    let start = Instant::now();
    let ls = build_system(system, d, keep_prob, seed, filter);
    let sol = solve_exact(&ls);
    let attempt = Attempt {
        degree: d,
        rows: ls.num_rows(),
        cols: ls.num_cols(),
        nnz: ls.nnz(),
        solvable: sol.is_some(),
        millis: start.elapsed().as_millis(),
    };
    let cert = match sol {
        Some(x) => {
            let c = Certificate::from_solution(Arc::clone(system), &ls, &x);
            if !c.verify()? {
                return Err(Error::VerificationFailed(format!("solution at degree {d} does not expand to 1")));
            }
            Some(c)
        }
        None => None,
    };
    Ok((cert, attempt))
}

/// Tries `d = 0, 1, …, d_max` with every column present and returns the
/// first certificate found.
pub fn find_certificate(system: &PolySystem, d_max: u32) -> Result<SearchOutcome> {
    find_certificate_filtered(system, d_max, None)
}

pub fn find_certificate_filtered(
    system: &PolySystem,
    d_max: u32,
    filter: Option<SupportFilter<'_>>,
) -> Result<SearchOutcome> {
    let system = Arc::new(system.clone());
    let mut attempts = Vec::new();
    for d in 0..=d_max {
        let (cert, attempt) = certificate_at_degree(&system, d, 1.0, 0, filter)?;
        attempts.push(attempt);
        if cert.is_some() {
            return Ok(SearchOutcome { certificate: cert, attempts });
        }
    }
    Ok(SearchOutcome { certificate: None, attempts })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialSummary {
    pub trials: usize,
    pub successes: usize,
    pub seed: u64,
}

impl TrialSummary {
    pub fn fraction(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }
}

/// Runs `trials` sparsified solves at degree `d`; trial `t` uses seed
/// `seed + t`.
pub fn sparsification_trial(system: &PolySystem, d: u32, keep_prob: f64, trials: usize, seed: u64) -> Result<TrialSummary> {
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is required".into()));
    }
    if !(keep_prob > 0.0 && keep_prob <= 1.0) {
        return Err(Error::InvalidParameter(format!("keep probability {keep_prob} outside (0, 1]")));
    }
    let system = Arc::new(system.clone());
    let hits = (0..trials as u64)
        .into_par_iter()
        .map(|t| certificate_at_degree(&system, d, keep_prob, seed.wrapping_add(t), None).map(|(c, _)| c.is_some()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(TrialSummary { trials, successes: hits.iter().filter(|&&h| h).count(), seed })
}
