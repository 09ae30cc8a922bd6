use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{cyclotomic_polynomial, Polynomial, VarId};
use crate::encodings::{DomainSpec, GeneratorKind, PolySystem};
use crate::error::Error;

/// One enumerated variable.
pub(super) struct Slot {
    pub var: VarId,
    /// `(integer part, root exponent mod K)` per domain value.
    pub values: Vec<(i64, u32)>,
    /// What the witness reports for each value.
    pub labels: Vec<i64>,
}

/// A factor polynomial with integer coefficients (scaled by the lcm of the
/// denominators, which does not change its zero set).
pub(super) struct CPoly {
    terms: Vec<(BigInt, Option<i128>, Vec<(usize, u32)>)>,
    pub slots: Vec<usize>,
}

pub(super) struct CFactor {
    pub poly: CPoly,
    pub private: Vec<usize>,
}

pub(super) struct CGen {
    pub witness: bool,
    pub factors: Vec<CFactor>,
    /// Enumerated by the main search.
    pub outer: Vec<usize>,
    /// Appear in no other generator; solved locally.
    pub private: Vec<usize>,
    pub disjoint_private: bool,
}

pub(super) struct Ctx {
    pub slots: Vec<Slot>,
    pub gens: Vec<CGen>,
    /// Slots in no remaining generator.
    pub free: Vec<usize>,
    /// Some constant or univariate generator can never hold.
    pub trivially_infeasible: bool,
    order: u32,
    phi: Vec<i128>,
    phi_big: Vec<BigInt>,
}

fn domain_values(d: DomainSpec, order: u32) -> (Vec<(i64, u32)>, Vec<i64>) {
    match d {
        DomainSpec::IntRange { lo, hi } => ((lo..=hi).map(|v| (v, 0)).collect(), (lo..=hi).collect()),
        DomainSpec::Boolean => (vec![(0, 0), (1, 0)], vec![0, 1]),
        DomainSpec::RootsOfUnity(k) => (
            (0..k).map(|e| (1, e * (order / k))).collect(),
            (0..k).map(i64::from).collect(),
        ),
        DomainSpec::Witness => unreachable!("witness variables are not enumerated"),
    }
}

impl CPoly {
    fn new(p: &Polynomial, slot_of: &BTreeMap<VarId, usize>) -> Result<CPoly, Error> {
        let den = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms = Vec::new();
        let mut slots = BTreeSet::new();
        for (m, c) in p.terms() {
            let coef = c.numer() * (&den / c.denom());
            let mut mono = Vec::new();
            for (v, e) in m.iter() {
                let s = *slot_of.get(&v).ok_or(Error::MissingDomain(v))?;
                slots.insert(s);
                mono.push((s, e));
            }
            let small = coef.to_i128();
            terms.push((coef, small, mono));
        }
        Ok(CPoly { terms, slots: slots.into_iter().collect() })
    }
}

impl Ctx {
    pub fn build(system: &PolySystem) -> Result<Ctx, Error> {
        let mut order = 1u32;
        for d in system.domains.values() {
            if let DomainSpec::RootsOfUnity(k) = d {
                order = order.lcm(k);
            }
        }
        for v in system.vars() {
            if !system.domains.contains_key(&v) {
                return Err(Error::MissingDomain(v));
            }
        }
        let mut slots = Vec::new();
        let mut slot_of = BTreeMap::new();
        for (&v, &d) in &system.domains {
            if d == DomainSpec::Witness {
                continue;
            }
            if d.size() == Some(0) {
                return Err(Error::InvalidParameter(format!("empty domain for {v}")));
            }
            let (values, labels) = domain_values(d, order);
            slot_of.insert(v, slots.len());
            slots.push(Slot { var: v, values, labels });
        }
        let phi_big = cyclotomic_polynomial(order);
        let phi = phi_big.iter().map(|c| c.to_i128().expect("small cyclotomic coefficients")).collect();
        let mut ctx = Ctx {
            slots,
            gens: Vec::new(),
            free: Vec::new(),
            trivially_infeasible: false,
            order,
            phi,
            phi_big,
        };

        let mut gens = Vec::new();
        for g in &system.generators {
            let factors = g
                .factors()
                .iter()
                .map(|f| CPoly::new(f, &slot_of))
                .collect::<Result<Vec<_>, _>>()?;
            gens.push((matches!(g.kind(), GeneratorKind::Witness(_)), factors));
        }

        // constant and univariate generators become domain filters
        let mut rest = Vec::new();
        for (witness, factors) in gens {
            let support: BTreeSet<usize> = factors.iter().flat_map(|f| f.slots.iter().copied()).collect();
            match support.len() {
                0 => {
                    let idx = vec![0; ctx.slots.len()];
                    if !ctx.holds(witness, &factors, &idx) {
                        ctx.trivially_infeasible = true;
                    }
                }
                1 => {
                    let s = *support.iter().next().unwrap();
                    let mut idx = vec![0; ctx.slots.len()];
                    let mut keep = Vec::new();
                    for v in 0..ctx.slots[s].values.len() {
                        idx[s] = v;
                        keep.push(ctx.holds(witness, &factors, &idx));
                    }
                    let slot = &mut ctx.slots[s];
                    let mut it = keep.iter();
                    slot.values.retain(|_| *it.next().unwrap());
                    let mut it = keep.iter();
                    slot.labels.retain(|_| *it.next().unwrap());
                    if slot.values.is_empty() {
                        ctx.trivially_infeasible = true;
                    }
                }
                _ => rest.push((witness, factors, support)),
            }
        }

        let mut uses = vec![0usize; ctx.slots.len()];
        for (_, _, support) in &rest {
            for &s in support {
                uses[s] += 1;
            }
        }
        ctx.free = (0..ctx.slots.len()).filter(|&s| uses[s] == 0).collect();
        for (witness, factors, support) in rest {
            let private: Vec<usize> = support.iter().copied().filter(|&s| uses[s] == 1).collect();
            let outer: Vec<usize> = support.iter().copied().filter(|&s| uses[s] > 1).collect();
            let factors: Vec<CFactor> = factors
                .into_iter()
                .map(|poly| {
                    let private = poly.slots.iter().copied().filter(|s| private.contains(s)).collect();
                    CFactor { poly, private }
                })
                .collect();
            let mut seen = BTreeSet::new();
            let disjoint_private = factors.iter().all(|f| f.private.iter().all(|&s| seen.insert(s)));
            ctx.gens.push(CGen { witness, factors, outer, private, disjoint_private });
        }
        Ok(ctx)
    }

    fn holds(&self, witness: bool, factors: &[CPoly], idx: &[usize]) -> bool {
        if witness {
            factors.iter().all(|f| !self.is_zero(f, idx))
        } else {
            factors.iter().any(|f| self.is_zero(f, idx))
        }
    }

    pub fn is_zero(&self, p: &CPoly, idx: &[usize]) -> bool {
        match self.fast_is_zero(p, idx) {
            Some(z) => z,
            None => self.big_is_zero(p, idx),
        }
    }

    fn fast_is_zero(&self, p: &CPoly, idx: &[usize]) -> Option<bool> {
        let k = self.order as usize;
        if k > 64 {
            return None;
        }
        let mut acc = [0i128; 64];
        for (_, small, mono) in &p.terms {
            let mut v = (*small)?;
            let mut e = 0u64;
            for &(s, x) in mono {
                let (iv, re) = self.slots[s].values[idx[s]];
                if iv != 1 {
                    v = v.checked_mul(i128::from(iv).checked_pow(x)?)?;
                }
                e += u64::from(re) * u64::from(x);
            }
            let slot = (e % k as u64) as usize;
            acc[slot] = acc[slot].checked_add(v)?;
        }
        let deg = self.phi.len() - 1;
        for i in (deg..k).rev() {
            let c = acc[i];
            if c != 0 {
                for j in 0..deg {
                    acc[i - deg + j] = acc[i - deg + j].checked_sub(c.checked_mul(self.phi[j])?)?;
                }
                acc[i] = 0;
            }
        }
        Some(acc[..deg].iter().all(|&a| a == 0))
    }

    fn big_is_zero(&self, p: &CPoly, idx: &[usize]) -> bool {
        let k = self.order as usize;
        let mut acc = vec![BigInt::zero(); k];
        for (coef, _, mono) in &p.terms {
            let mut v = coef.clone();
            let mut e = 0u64;
            for &(s, x) in mono {
                let (iv, re) = self.slots[s].values[idx[s]];
                if iv != 1 {
                    v *= num_traits::pow(BigInt::from(iv), x as usize);
                }
                e += u64::from(re) * u64::from(x);
            }
            acc[(e % k as u64) as usize] += v;
        }
        let deg = self.phi_big.len() - 1;
        for i in (deg..k).rev() {
            let c = std::mem::take(&mut acc[i]);
            if !c.is_zero() {
                for j in 0..deg {
                    acc[i - deg + j] -= &c * &self.phi_big[j];
                }
            }
        }
        acc[..deg].iter().all(|a| a.is_zero())
    }

    /// Evaluates a generator's factors at `idx`; for `Zero` generators the
    /// result is whether some factor vanishes, for witnesses whether none
    /// does.
    pub fn gen_holds(&self, g: &CGen, idx: &[usize]) -> bool {
        if g.witness {
            g.factors.iter().all(|f| !self.is_zero(&f.poly, idx))
        } else {
            g.factors.iter().any(|f| self.is_zero(&f.poly, idx))
        }
    }
}
