use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Monomial, Rational, VarId};
use crate::encodings::PolySystem;

/// Predicate on multiplier monomials; columns failing it are dropped.
pub type SupportFilter<'a> = &'a (dyn Fn(&Monomial) -> bool + Sync);

/// Sparse system `M c = e_1` over certificate coefficients.
///
/// Column `(i, μ)` stands for the coefficient of `μ` in `α_i`; row `m`
/// collects the coefficient of `m` in `Σ α_i f_i`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub columns: Vec<(usize, Monomial)>,
    pub rows: Vec<Monomial>,
    /// Column-major entries `(row, value)`, rows ascending, no zeros.
    pub entries: Vec<Vec<(usize, Rational)>>,
    /// Nonzero right-hand side entries.
    pub rhs: BTreeMap<usize, Rational>,
}

impl LinearSystem {
    /// Generic system from explicit entries, for solver tests. Columns get
    /// placeholder labels.
    pub fn from_entries(
        nrows: usize,
        ncols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
        rhs: impl IntoIterator<Item = (usize, Rational)>,
    ) -> LinearSystem {
        let mut cols: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); ncols];
        for (r, c, v) in entries {
            assert!(r < nrows && c < ncols, "entry out of range");
            *cols[c].entry(r).or_insert_with(Rational::zero) += v;
        }
        LinearSystem {
            columns: (0..ncols).map(|c| (c, Monomial::one())).collect(),
            rows: vec![Monomial::one(); nrows],
            entries: cols
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
            rhs: rhs.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }
}

/// Every monomial of total degree `≤ d` in `vars`, ascending graded-lex.
pub fn monomials_up_to(vars: &[VarId], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    fn rec(k: usize, left: u32, vars: &[VarId], exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k == vars.len() {
            out.push(Monomial::from_pairs(vars.iter().copied().zip(exps.iter().copied())));
            return;
        }
        for e in 0..=left {
            exps[k] = e;
            rec(k + 1, left - e, vars, exps, out);
        }
        exps[k] = 0;
    }
    rec(0, d, vars, &mut exps, &mut out);
    out.sort();
    out
}

/// Columns `(i, μ)` for every generator `i` (in order) and every `μ` of
/// degree `≤ d` (graded-lex), each kept with probability `keep_prob` drawn
/// from a ChaCha stream seeded with `seed`.
pub fn build_system(
    system: &PolySystem,
    d: u32,
    keep_prob: f64,
    seed: u64,
    filter: Option<SupportFilter<'_>>,
) -> LinearSystem {
    assert!(keep_prob > 0.0 && keep_prob <= 1.0, "keep_prob must lie in (0, 1]");
    let vars: Vec<VarId> = system.vars().into_iter().collect();
    let monos = monomials_up_to(&vars, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut columns = Vec::new();
    for i in 0..system.generators.len() {
        for mu in &monos {
            let keep = keep_prob >= 1.0 || rng.gen_bool(keep_prob);
            if keep && filter.map_or(true, |f| f(mu)) {
                columns.push((i, mu.clone()));
            }
        }
    }
    let gens: Vec<_> = system.generators.iter().map(|g| g.expanded()).collect();
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut rows = Vec::new();
    let one = Monomial::one();
    row_of.insert(one.clone(), 0);
    rows.push(one);
    let mut entries = Vec::with_capacity(columns.len());
    for (i, mu) in &columns {
        let mut col: Vec<(usize, Rational)> = gens[*i]
            .terms()
            .map(|(m, c)| {
                let prod = m.mul(mu);
                let r = *row_of.entry(prod.clone()).or_insert_with(|| {
                    rows.push(prod);
                    rows.len() - 1
                });
                (r, c.clone())
            })
            .collect();
        col.sort_by_key(|e| e.0);
        entries.push(col);
    }
    let rhs = BTreeMap::from([(0, Rational::one())]);
    LinearSystem { columns, rows, entries, rhs }
}
