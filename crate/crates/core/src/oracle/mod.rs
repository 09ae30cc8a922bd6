//! Exhaustive feasibility and solution counting for a [`PolySystem`] over
//! its declared finite domains.
//!
//! Values live in the group ring `ℤ[C_K]`, `K` the lcm of all root-of-unity
//! orders (1 if none); a value is zero iff its image modulo `Φ_K` is zero.
//! Arithmetic runs in `i128` and falls back to big integers on overflow.

mod compile;
mod search;

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::algebra::{eval_cyclotomic, Rational, VarId};
use crate::encodings::{DomainSpec, GeneratorKind, PolySystem};
use crate::error::Error;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Count every solution instead of stopping at the first.
    pub count: bool,
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    /// Split the first variable's domain across the rayon pool.
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { count: false, budget: DEFAULT_BUDGET, parallel: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub feasible: bool,
    /// Integer value, or root exponent `e` for `ω_k^e`; witness variables
    /// `s` are omitted.
    pub witness: Option<BTreeMap<VarId, i64>>,
    /// Number of solutions over the non-witness variables.
    pub count: Option<BigUint>,
    pub nodes: u64,
}

pub fn decide(system: &PolySystem, count_all: bool) -> Result<OracleResult, Error> {
    decide_with(system, &OracleConfig { count: count_all, ..OracleConfig::default() })
}

pub fn decide_with(system: &PolySystem, config: &OracleConfig) -> Result<OracleResult, Error> {
    let ctx = compile::Ctx::build(system)?;
    search::run(&ctx, config)
}

/// Checks an assignment through the generic polynomial evaluators: integer
/// variables are substituted first, roots of unity are then evaluated in
/// the cyclotomic field. Zero generators must vanish, witness generators
/// need every factor nonzero.
pub fn check_assignment(system: &PolySystem, assignment: &BTreeMap<VarId, i64>) -> Result<bool, Error> {
    let mut ints: BTreeMap<VarId, Rational> = BTreeMap::new();
    let mut roots: BTreeMap<VarId, (u32, u32)> = BTreeMap::new();
    let mut order = 1u32;
    for (&v, &val) in assignment {
        match system.domains.get(&v) {
            Some(DomainSpec::RootsOfUnity(k)) => {
                roots.insert(v, (*k, val.rem_euclid(i64::from(*k)) as u32));
                order = num_integer::lcm(order, *k);
            }
            Some(DomainSpec::Witness) => {}
            Some(_) => {
                ints.insert(v, Rational::from_integer(val.into()));
            }
            None => return Err(Error::MissingDomain(v)),
        }
    }
    let exps: BTreeMap<VarId, u32> = roots.iter().map(|(&v, &(k, e))| (v, e * (order / k))).collect();
    let is_zero = |p: &crate::algebra::Polynomial| -> Result<bool, Error> {
        let rest = p.substitute(&ints);
        Ok(eval_cyclotomic(&rest, order, &exps)?.is_zero())
    };
    for g in &system.generators {
        let zeros = g.factors().iter().map(is_zero).collect::<Result<Vec<bool>, Error>>()?;
        let ok = match g.kind() {
            GeneratorKind::Zero => zeros.iter().any(|&z| z),
            GeneratorKind::Witness(_) => zeros.iter().all(|&z| !z),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
