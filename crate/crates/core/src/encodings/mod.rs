//! Polynomial systems whose common zeros are exactly the solutions of a
//! combinatorial problem, plus the finite domains the oracle enumerates.

mod encoders;
mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{Polynomial, VarId};

pub use encoders::{
    encode, encode_colorable_subgraph, encode_edge_chromatic, encode_hamiltonian,
    encode_k_coloring, encode_longest_cycle, encode_planar_subgraph, encode_poset_dimension,
    encode_stable_set, encode_stable_set_refutation, EncodingParams, ENCODING_NAMES,
};
pub use text::{parse_system, write_system};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainSpec {
    /// Integers `lo..=hi`.
    IntRange { lo: i64, hi: i64 },
    /// Exponents `0..k` standing for `ω_k^e`.
    RootsOfUnity(u32),
    Boolean,
    /// Inverse witness `s` of an equation `s·P = 1`; eliminated by checking
    /// `P ≠ 0`.
    Witness,
}

impl DomainSpec {
    /// Enumerable size; `None` for witnesses.
    pub fn size(&self) -> Option<u64> {
        match *self {
            DomainSpec::IntRange { lo, hi } => Some((hi - lo + 1).max(0) as u64),
            DomainSpec::RootsOfUnity(k) => Some(u64::from(k)),
            DomainSpec::Boolean => Some(2),
            DomainSpec::Witness => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `∏ factors = 0`.
    Zero,
    /// `s · ∏ factors = 1`, stored expanded as `s·∏ factors − 1`.
    Witness(VarId),
}

/// One equation, kept in factored form. Large products (Vandermonde-style
/// distinctness witnesses) are only expanded on demand.
#[derive(Clone)]
pub struct Generator {
    factors: Vec<Polynomial>,
    kind: GeneratorKind,
    expanded: OnceLock<Polynomial>,
}

impl Generator {
    pub fn new(factors: Vec<Polynomial>, kind: GeneratorKind) -> Generator {
        Generator { factors, kind, expanded: OnceLock::new() }
    }

    pub fn zero(p: Polynomial) -> Generator {
        Generator::new(vec![p], GeneratorKind::Zero)
    }

    pub fn product(factors: Vec<Polynomial>) -> Generator {
        Generator::new(factors, GeneratorKind::Zero)
    }

    pub fn witness(s: VarId, factors: Vec<Polynomial>) -> Generator {
        Generator::new(factors, GeneratorKind::Witness(s))
    }

    pub fn factors(&self) -> &[Polynomial] {
        &self.factors
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    /// The generator as one polynomial `f` with equation `f = 0`.
    pub fn expanded(&self) -> &Polynomial {
        self.expanded.get_or_init(|| {
            let prod = Polynomial::product(&self.factors);
            match self.kind {
                GeneratorKind::Zero => prod,
                GeneratorKind::Witness(s) => &(&Polynomial::var(s) * &prod) - &Polynomial::one(),
            }
        })
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut v: BTreeSet<VarId> = self.factors.iter().flat_map(|f| f.vars()).collect();
        if let GeneratorKind::Witness(s) = self.kind {
            v.insert(s);
        }
        v
    }
}

impl PartialEq for Generator {
    fn eq(&self, other: &Generator) -> bool {
        self.kind == other.kind && self.factors == other.factors
    }
}

impl Eq for Generator {}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let GeneratorKind::Witness(s) = self.kind {
            write!(f, "{s}·")?;
        }
        for (k, p) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "({p})")?;
        }
        if let GeneratorKind::Witness(_) = self.kind {
            write!(f, " = 1")
        } else {
            write!(f, " = 0")
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SystemMeta {
    pub encoding: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    pub generators: Vec<Generator>,
    pub domains: BTreeMap<VarId, DomainSpec>,
    pub meta: SystemMeta,
}

impl PolySystem {
    pub fn new(encoding: &str) -> PolySystem {
        PolySystem {
            generators: Vec::new(),
            domains: BTreeMap::new(),
            meta: SystemMeta { encoding: encoding.to_string(), params: BTreeMap::new() },
        }
    }

    /// System with plain zero-generators and no domains; for hand-built
    /// certificates and solver tests.
    pub fn from_polynomials(encoding: &str, gens: Vec<Polynomial>) -> PolySystem {
        let mut s = PolySystem::new(encoding);
        s.generators = gens.into_iter().map(Generator::zero).collect();
        s
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> PolySystem {
        self.meta.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, g: Generator) {
        self.generators.push(g);
    }

    pub fn domain(&mut self, v: VarId, d: DomainSpec) {
        self.domains.insert(v, d);
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn expanded(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.expanded().clone()).collect()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.generators.iter().flat_map(|g| g.vars()).collect()
    }

    /// Variables used by some generator but lacking a domain.
    pub fn missing_domains(&self) -> Vec<VarId> {
        self.vars().into_iter().filter(|v| !self.domains.contains_key(v)).collect()
    }

    /// Product of domain sizes over non-witness variables, saturating.
    pub fn domain_product(&self) -> u128 {
        self.domains
            .values()
            .filter_map(|d| d.size())
            .fold(1u128, |acc, s| acc.saturating_mul(u128::from(s)))
    }
}
