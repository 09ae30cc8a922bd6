//! Graph polynomial `f_G = ∏_{i<j, ij∈E} (x_i − x_j)`, its normal form
//! modulo `x_i^d − 1`, dual colorings and the simultaneous chromatic number.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{eval_cyclotomic, CyclotomicValue, Monomial, Polynomial, VarId};
use crate::error::{Error, Result};
use crate::graphs::Graph;

/// A map `V → {0..d−1}`; `values[v − 1]` is the label of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub d: u32,
    pub values: Vec<u32>,
}

impl Labeling {
    pub fn new(d: u32, values: Vec<u32>) -> Result<Labeling> {
        if d == 0 || values.iter().any(|&v| v >= d) {
            return Err(Error::InvalidParameter(format!("labels must lie in 0..{d}")));
        }
        Ok(Labeling { d, values })
    }

    pub fn get(&self, v: usize) -> u32 {
        self.values[v - 1]
    }

    /// `x^c`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(self.values.iter().enumerate().map(|(k, &e)| (VarId::x(k as u32 + 1), e)))
    }
}

/// Arcs `(tail, head)`, one per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// `(−1)^{#arcs with tail > head}`.
    pub fn sign(&self) -> i64 {
        if self.arcs.iter().filter(|(a, b)| a > b).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn outdeg(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for &(a, _) in &self.arcs {
            d[a - 1] += 1;
        }
        d
    }

    pub fn is_acyclic(&self, n: usize) -> bool {
        let mut indeg = vec![0usize; n + 1];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for &(a, b) in &self.arcs {
            indeg[b] += 1;
            out[a].push(b);
        }
        let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == n
    }
}

fn edge_factor(i: usize, j: usize) -> Polynomial {
    &Polynomial::var(VarId::x(i as u32)) - &Polynomial::var(VarId::x(j as u32))
}

/// `f_G`, fully expanded.
pub fn graph_polynomial(g: &Graph) -> Polynomial {
    g.edges().fold(Polynomial::one(), |acc, (i, j)| &acc * &edge_factor(i, j))
}

/// `[f_G]` at order `d`, reducing after every edge factor.
pub fn graph_polynomial_normal_form(g: &Graph, d: u32) -> Result<Polynomial> {
    if d == 0 {
        return Err(Error::InvalidParameter("order d must be positive".into()));
    }
    Ok(g.edges()
        .fold(Polynomial::one(), |acc, (i, j)| (&acc * &edge_factor(i, j)).normal_form_mod_unity(d)))
}

fn check_len(g: &Graph, c: &Labeling) -> Result<()> {
    if c.values.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: c.values.len() });
    }
    Ok(())
}

/// `ε(c) ≠ 0`, i.e. `c` is a proper coloring.
pub fn epsilon(g: &Graph, c: &Labeling) -> Result<bool> {
    check_len(g, c)?;
    Ok(g.edges().all(|(i, j)| c.get(i) != c.get(j)))
}

/// `ε(c) = f_G(ω^c)` in `ℚ(ω_d)`.
pub fn epsilon_value(g: &Graph, c: &Labeling) -> Result<CyclotomicValue> {
    check_len(g, c)?;
    let exps: BTreeMap<VarId, u32> =
        c.values.iter().enumerate().map(|(k, &e)| (VarId::x(k as u32 + 1), e)).collect();
    eval_cyclotomic(&graph_polynomial(g), c.d, &exps)
}

/// `ε*(c)` as the signed count of orientations `O` with `[δ^O] = c`.
pub fn epsilon_star(g: &Graph, c: &Labeling) -> Result<i64> {
    check_len(g, c)?;
    let n = g.n();
    let edges = g.edge_list();
    let d = c.d as usize;
    let mut remaining = vec![0usize; n + 1];
    for &(a, b) in &edges {
        remaining[a] += 1;
        remaining[b] += 1;
    }
    // a vertex is still viable if some t ≡ c(v) (mod d) lies in
    // [out, out + remaining]
    let viable = |v: usize, out: usize, rem: usize| -> bool {
        let target = c.get(v) as usize;
        let t = if out <= target { target } else { out + (d - (out - target) % d) % d };
        t <= out + rem
    };
    struct St<'a> {
        edges: &'a [(usize, usize)],
        out: Vec<usize>,
        remaining: Vec<usize>,
    }
    fn rec(st: &mut St, k: usize, flips: usize, viable: &dyn Fn(usize, usize, usize) -> bool) -> i64 {
        if k == st.edges.len() {
            return if flips % 2 == 0 { 1 } else { -1 };
        }
        let (a, b) = st.edges[k];
        st.remaining[a] -= 1;
        st.remaining[b] -= 1;
        let mut total = 0;
        for (tail, flip) in [(a, 0), (b, 1)] {
            st.out[tail] += 1;
            if viable(a, st.out[a], st.remaining[a]) && viable(b, st.out[b], st.remaining[b]) {
                total += rec(st, k + 1, flips + flip, viable);
            }
            st.out[tail] -= 1;
        }
        st.remaining[a] += 1;
        st.remaining[b] += 1;
        total
    }
    for v in 1..=n {
        if !viable(v, 0, remaining[v]) {
            return Ok(0);
        }
    }
    let mut st = St { edges: &edges, out: vec![0; n + 1], remaining };
    Ok(rec(&mut st, 0, 0, &viable))
}

/// `ε*(c)` read off as the coefficient of `x^c` in `[f_G]`.
pub fn epsilon_star_coefficient(g: &Graph, c: &Labeling) -> Result<i64> {
    check_len(g, c)?;
    let nf = graph_polynomial_normal_form(g, c.d)?;
    let coef = nf.coefficient(&c.monomial());
    Ok(coef.to_integer().to_i64().expect("small coefficient"))
}

/// Labelings `c` with nonzero coefficient in `[f_G]`, in ascending
/// monomial order.
pub fn dual_colorings(g: &Graph, d: u32) -> Result<Vec<(Labeling, i64)>> {
    let nf = graph_polynomial_normal_form(g, d)?;
    Ok(nf
        .terms()
        .map(|(m, c)| {
            let values = (1..=g.n()).map(|v| m.exponent(VarId::x(v as u32))).collect();
            (Labeling { d, values }, c.to_integer().to_i64().expect("small coefficient"))
        })
        .collect())
}

/// Least `d` admitting a labeling that is both a coloring and a dual
/// coloring, with the lex-first such labeling. Enumerating more than
/// `budget` proper colorings in total is an error.
pub fn simultaneous_chromatic_number(g: &Graph, budget: u64) -> Result<(u32, Labeling)> {
    let n = g.n();
    let adj = g.adjacency();
    let mut used = 0u64;
    for d in 1..=(g.max_degree() as u32 + 1) {
        let nf = graph_polynomial_normal_form(g, d)?;
        if nf.is_zero() {
            continue;
        }
        let mut vals = vec![0u32; n];
        let mut found = None;
        fn rec(
            v: usize,
            d: u32,
            adj: &[Vec<usize>],
            vals: &mut Vec<u32>,
            nf: &Polynomial,
            used: &mut u64,
            budget: u64,
            found: &mut Option<Vec<u32>>,
        ) -> Result<()> {
            if found.is_some() {
                return Ok(());
            }
            if v > vals.len() {
                *used += 1;
                if *used > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                let lab = Labeling { d, values: vals.clone() };
                if !nf.coefficient(&lab.monomial()).is_zero() {
                    *found = Some(vals.clone());
                }
                return Ok(());
            }
            for c in 0..d {
                if adj[v].iter().all(|&w| w > v || vals[w - 1] != c) {
                    vals[v - 1] = c;
                    rec(v + 1, d, adj, vals, nf, used, budget, found)?;
                }
            }
            vals[v - 1] = 0;
            Ok(())
        }
        rec(1, d, &adj, &mut vals, &nf, &mut used, budget, &mut found)?;
        if let Some(values) = found {
            return Ok((d, Labeling { d, values }));
        }
    }
    unreachable!("an orientation coloring exists at Δ + 1")
}

/// Repeatedly removes a maximum-degree vertex (smallest index on ties),
/// orienting its remaining edges away from it; labels are the out-degrees.
pub fn orientation_coloring(g: &Graph, d: u32) -> Result<(Labeling, Orientation)> {
    if (d as usize) < g.max_degree() + 1 {
        return Err(Error::InvalidParameter(format!("need d ≥ Δ + 1 = {}", g.max_degree() + 1)));
    }
    let n = g.n();
    let adj = g.adjacency();
    let mut alive = vec![true; n + 1];
    let mut deg: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { adj[v].len() }).collect();
    let mut values = vec![0u32; n];
    let mut arcs = Vec::new();
    for _ in 0..n {
        let v = (1..=n).filter(|&v| alive[v]).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).expect("vertex");
        values[v - 1] = deg[v] as u32;
        for &w in &adj[v] {
            if alive[w] {
                arcs.push((v, w));
                deg[w] -= 1;
            }
        }
        alive[v] = false;
    }
    let lab = Labeling { d, values };
    let o = Orientation { arcs };
    if !epsilon(g, &lab)? || epsilon_star(g, &lab)? == 0 {
        return Err(Error::VerificationFailed("orientation labeling is not simultaneous".into()));
    }
    Ok((lab, o))
}

/// Lovász: a connected bipartite graph has `σ = 2` iff `|A|` or `|B|` has
/// the parity of `|E|`.
pub fn bipartite_sigma_two(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::NotConnectedBipartite);
    }
    let (a, b) = g.bipartition().ok_or(Error::NotConnectedBipartite)?;
    let m = g.m() % 2;
    Ok(a.len() % 2 == m || b.len() % 2 == m)
}
