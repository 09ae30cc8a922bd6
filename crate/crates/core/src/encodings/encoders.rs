use crate::algebra::{Monomial, Polynomial, Rational, VarId};
use crate::error::Error;
use crate::graphs::{stability_number, Graph, Poset};

use super::{DomainSpec, Generator, PolySystem};

pub const ENCODING_NAMES: [&str; 9] = [
    "coloring",
    "stable-set",
    "stable-refute",
    "cycle",
    "hamiltonian",
    "poset-dim",
    "planar-subgraph",
    "colorable-subgraph",
    "edge-chromatic",
];

fn var(v: VarId) -> Polynomial {
    Polynomial::var(v)
}

fn int(c: i64) -> Polynomial {
    Polynomial::int(c)
}

fn u(i: usize) -> u32 {
    u32::try_from(i).expect("index fits in u32")
}

/// `∏_{s=lo..=hi} (v − s)` as a factor list.
fn range_factors(v: VarId, lo: i64, hi: i64) -> Vec<Polynomial> {
    (lo..=hi).map(|s| &var(v) - &int(s)).collect()
}

/// `a^{k−1} + a^{k−2}b + … + b^{k−1}`.
fn edge_poly(a: VarId, b: VarId, k: u32) -> Polynomial {
    Polynomial::from_terms((0..k).map(|t| {
        (
            Monomial::from_pairs([(a, k - 1 - t), (b, t)]),
            Rational::from_integer(1.into()),
        )
    }))
}

fn sum_minus(vars: impl IntoIterator<Item = VarId>, target: i64) -> Polynomial {
    let mut p = -&int(target);
    for v in vars {
        p = &p + &var(v);
    }
    p
}

/// Vertex generators `x_i^k − 1`, then for every edge the quotient
/// `(x_i^k − x_j^k)/(x_i − x_j)`.
pub fn encode_k_coloring(g: &Graph, k: u32) -> Result<PolySystem, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut s = PolySystem::new("coloring").param("k", k).param("n", g.n());
    for i in g.vertices() {
        let x = VarId::x(u(i));
        s.push(Generator::zero(&Polynomial::monomial(Monomial::var_pow(x, k)) - &int(1)));
        s.domain(x, DomainSpec::RootsOfUnity(k));
    }
    for (i, j) in g.edges() {
        s.push(Generator::zero(edge_poly(VarId::x(u(i)), VarId::x(u(j)), k)));
    }
    Ok(s)
}

/// `x_i² − x_i` per vertex, `x_i x_j` per edge, then `Σ x_i − k`.
pub fn encode_stable_set(g: &Graph, k: usize) -> Result<PolySystem, Error> {
    if k < 1 || k > g.n() {
        return Err(Error::InvalidParameter(format!("need 1 ≤ k ≤ n, got k={k}")));
    }
    let mut s = PolySystem::new("stable-set").param("k", k).param("n", g.n());
    stable_body(&mut s, g);
    s.push(Generator::zero(sum_minus(g.vertices().map(|i| VarId::x(u(i))), k as i64)));
    Ok(s)
}

fn stable_body(s: &mut PolySystem, g: &Graph) {
    for i in g.vertices() {
        let x = VarId::x(u(i));
        s.push(Generator::zero(&Polynomial::monomial(Monomial::var_pow(x, 2)) - &var(x)));
        s.domain(x, DomainSpec::Boolean);
    }
    for (i, j) in g.edges() {
        s.push(Generator::zero(Polynomial::monomial(Monomial::product_of([
            VarId::x(u(i)),
            VarId::x(u(j)),
        ]))));
    }
}

/// `J(G, r)`: target `Σ x_i − (α + r)` first, then vertex and edge
/// generators. `alpha` must equal the stability number.
pub fn encode_stable_set_refutation(g: &Graph, r: usize, alpha: usize) -> Result<PolySystem, Error> {
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let actual = stability_number(g);
    if actual != alpha {
        return Err(Error::Precondition(format!("alpha = {alpha} but the graph has α = {actual}")));
    }
    let mut s = PolySystem::new("stable-refute")
        .param("r", r)
        .param("alpha", alpha)
        .param("n", g.n());
    s.push(Generator::zero(sum_minus(g.vertices().map(|i| VarId::x(u(i))), (alpha + r) as i64)));
    stable_body(&mut s, g);
    Ok(s)
}

/// Cycle of length `L`: `Σ y_i − L`, then per vertex `y_i(y_i − 1)`,
/// `∏_s (x_i − s)` and the gated successor product.
pub fn encode_longest_cycle(g: &Graph, l: usize) -> Result<PolySystem, Error> {
    let n = g.n();
    if l < 3 || l > n {
        return Err(Error::InvalidParameter(format!("need 3 ≤ L ≤ n, got L={l}, n={n}")));
    }
    let mut s = PolySystem::new("cycle").param("L", l).param("n", n);
    s.push(Generator::zero(sum_minus(g.vertices().map(|i| VarId::y(u(i))), l as i64)));
    let adj = g.adjacency();
    for i in g.vertices() {
        let (xi, yi) = (VarId::x(u(i)), VarId::y(u(i)));
        s.push(Generator::product(vec![var(yi), &var(yi) - &int(1)]));
        s.push(Generator::product(range_factors(xi, 1, n as i64)));
        let mut factors = vec![var(yi)];
        for &j in &adj[i] {
            let (xj, yj) = (VarId::x(u(j)), VarId::y(u(j)));
            let yx = Polynomial::monomial(Monomial::product_of([yj, xj]));
            factors.push(&(&var(xi) - &yx) + &var(yj));
            factors.push(&(&var(xi) - &yx) - &var(yj).scale(&Rational::from_integer((l as i64 - 1).into())));
        }
        s.push(Generator::product(factors));
        s.domain(xi, DomainSpec::IntRange { lo: 1, hi: n as i64 });
        s.domain(yi, DomainSpec::Boolean);
    }
    Ok(s)
}

/// Per vertex `∏_s (x_i − s)` and `∏_{j ∈ Adj(i)} (x_i − x_j + 1)(x_i − x_j − (n−1))`.
pub fn encode_hamiltonian(g: &Graph) -> Result<PolySystem, Error> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n ≥ 3, got {n}")));
    }
    let mut s = PolySystem::new("hamiltonian").param("n", n);
    let adj = g.adjacency();
    for i in g.vertices() {
        let xi = VarId::x(u(i));
        s.push(Generator::product(range_factors(xi, 1, n as i64)));
        let mut factors = Vec::new();
        for &j in &adj[i] {
            let d = &var(xi) - &var(VarId::x(u(j)));
            factors.push(&d + &int(1));
            factors.push(&d - &int(n as i64 - 1));
        }
        s.push(Generator::product(factors));
        s.domain(xi, DomainSpec::IntRange { lo: 1, hi: n as i64 });
    }
    Ok(s)
}

/// Dimension at most `dim`: `dim` linear extensions given by value
/// variables `x_{i,k}`, with comparable pairs pinned and every incomparable
/// pair reversed in some extension.
pub fn encode_poset_dimension(p: &Poset, dim: usize) -> Result<PolySystem, Error> {
    if dim < 1 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    let m = p.len();
    let mut s = PolySystem::new("poset-dim").param("dim", dim).param("m", m);
    let x = |i: usize, k: usize| VarId::x2(u(i), u(k));
    let delta = |i: usize, j: usize, k: usize| VarId::delta(u(i), u(j), u(k));
    let mut deltas = Vec::new();
    for k in 1..=dim {
        for i in 1..=m {
            s.push(Generator::product(range_factors(x(i, k), 1, m as i64)));
            s.domain(x(i, k), DomainSpec::IntRange { lo: 1, hi: m as i64 });
        }
        let mut diffs = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                diffs.push(&var(x(i, k)) - &var(x(j, k)));
            }
        }
        s.push(Generator::witness(VarId::s(u(k)), diffs));
        s.domain(VarId::s(u(k)), DomainSpec::Witness);
    }
    for k in 1..=dim {
        for (a, b) in p.relations() {
            s.push(Generator::zero(&(&var(x(a, k)) - &var(x(b, k))) - &var(delta(a, b, k))));
            deltas.push(delta(a, b, k));
        }
    }
    for i in 1..=m {
        for j in i + 1..=m {
            if p.comparable(i, j) {
                continue;
            }
            for (a, b) in [(i, j), (j, i)] {
                let factors = (1..=dim)
                    .map(|k| {
                        deltas.push(delta(a, b, k));
                        &(&var(x(a, k)) - &var(x(b, k))) - &var(delta(a, b, k))
                    })
                    .collect();
                s.push(Generator::product(factors));
            }
        }
    }
    for d in deltas {
        s.push(Generator::product(range_factors(d, 1, m as i64 - 1)));
        s.domain(d, DomainSpec::IntRange { lo: 1, hi: m as i64 - 1 });
    }
    Ok(s)
}

/// Planar subgraph with `K` edges via three linear extensions of the
/// incidence poset, edges switched on and off by `z`.
///
/// Poset elements are numbered vertex `i ↦ i`, `e`-th edge in lex order
/// `↦ n + e`; `Δ` variables are `d_a_b_k` for the ordered element pair.
pub fn encode_planar_subgraph(g: &Graph, big_k: usize) -> Result<PolySystem, Error> {
    let (n, m) = (g.n(), g.m());
    if big_k > m {
        return Err(Error::InvalidParameter(format!("K = {big_k} exceeds |E| = {m}")));
    }
    let edges = g.edge_list();
    let top = (n + m) as i64;
    let mut s = PolySystem::new("planar-subgraph").param("K", big_k).param("n", n);
    let z = |e: usize| VarId::z2(u(edges[e].0), u(edges[e].1));
    let xv = |i: usize, k: usize| VarId::x2(u(i), u(k));
    let ye = |e: usize, k: usize| VarId::y3(u(edges[e].0), u(edges[e].1), u(k));
    let el = |e: usize| n + e + 1;
    let delta = |a: usize, b: usize, k: usize| VarId::delta(u(a), u(b), u(k));
    let mut deltas = Vec::new();
    let mut diff = |a: Polynomial, b: Polynomial, d: VarId| {
        deltas.push(d);
        &(&a - &b) - &var(d)
    };

    s.push(Generator::zero(sum_minus((0..m).map(z), big_k as i64)));
    for e in 0..m {
        s.push(Generator::zero(&Polynomial::monomial(Monomial::var_pow(z(e), 2)) - &var(z(e))));
        s.domain(z(e), DomainSpec::Boolean);
    }
    for k in 1..=3 {
        for i in 1..=n {
            s.push(Generator::product(range_factors(xv(i, k), 1, top)));
            s.domain(xv(i, k), DomainSpec::IntRange { lo: 1, hi: top });
        }
        for e in 0..m {
            s.push(Generator::product(range_factors(ye(e, k), 1, top)));
            s.domain(ye(e, k), DomainSpec::IntRange { lo: 1, hi: top });
        }
    }
    for k in 1..=3 {
        let mut f = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                f.push(&var(xv(i, k)) - &var(xv(j, k)));
            }
        }
        for i in 1..=n {
            for e in 0..m {
                f.push(&var(xv(i, k)) - &var(ye(e, k)));
            }
        }
        for e in 0..m {
            for h in e + 1..m {
                f.push(&var(ye(e, k)) - &var(ye(h, k)));
            }
        }
        s.push(Generator::witness(VarId::s(k as u32), f));
        s.domain(VarId::s(k as u32), DomainSpec::Witness);
    }
    for k in 1..=3 {
        for (e, &(a, b)) in edges.iter().enumerate() {
            for i in [a, b] {
                let d = diff(var(ye(e, k)), var(xv(i, k)), delta(el(e), i, k));
                s.push(Generator::product(vec![var(z(e)), d]));
            }
        }
    }
    for i in 1..=n {
        for (e, &(a, b)) in edges.iter().enumerate() {
            if i == a || i == b {
                continue;
            }
            let mut up = vec![var(z(e))];
            let mut down = vec![var(z(e))];
            for k in 1..=3 {
                up.push(diff(var(ye(e, k)), var(xv(i, k)), delta(el(e), i, k)));
            }
            for k in 1..=3 {
                down.push(diff(var(xv(i, k)), var(ye(e, k)), delta(i, el(e), k)));
            }
            s.push(Generator::product(up));
            s.push(Generator::product(down));
        }
    }
    for e in 0..m {
        for h in e + 1..m {
            let gate = Polynomial::monomial(Monomial::product_of([z(e), z(h)]));
            let mut fwd = vec![gate.clone()];
            let mut bwd = vec![gate];
            for k in 1..=3 {
                fwd.push(diff(var(ye(e, k)), var(ye(h, k)), delta(el(e), el(h), k)));
            }
            for k in 1..=3 {
                bwd.push(diff(var(ye(h, k)), var(ye(e, k)), delta(el(h), el(e), k)));
            }
            s.push(Generator::product(fwd));
            s.push(Generator::product(bwd));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for (a, b) in [(i, j), (j, i)] {
                let f = (1..=3).map(|k| diff(var(xv(a, k)), var(xv(b, k)), delta(a, b, k))).collect();
                s.push(Generator::product(f));
            }
        }
    }
    for d in deltas {
        s.push(Generator::product(range_factors(d, 1, top - 1)));
        s.domain(d, DomainSpec::IntRange { lo: 1, hi: top - 1 });
    }
    Ok(s)
}

/// `Σ y_{ij} − R`, `x_i^k − 1` per vertex, then per edge `y² − y` and
/// `y·(x_i^{k−1} + … + x_j^{k−1})`.
pub fn encode_colorable_subgraph(g: &Graph, k: u32, big_r: usize) -> Result<PolySystem, Error> {
    if k == 0 || big_r > g.m() {
        return Err(Error::InvalidParameter(format!("need k ≥ 1 and R ≤ |E|, got k={k}, R={big_r}")));
    }
    let mut s = PolySystem::new("colorable-subgraph").param("k", k).param("R", big_r).param("n", g.n());
    let y = |i: usize, j: usize| VarId::y2(u(i), u(j));
    s.push(Generator::zero(sum_minus(g.edges().map(|(i, j)| y(i, j)), big_r as i64)));
    for i in g.vertices() {
        let x = VarId::x(u(i));
        s.push(Generator::zero(&Polynomial::monomial(Monomial::var_pow(x, k)) - &int(1)));
        s.domain(x, DomainSpec::RootsOfUnity(k));
    }
    for (i, j) in g.edges() {
        let yv = y(i, j);
        s.push(Generator::zero(&Polynomial::monomial(Monomial::var_pow(yv, 2)) - &var(yv)));
        s.push(Generator::product(vec![var(yv), edge_poly(VarId::x(u(i)), VarId::x(u(j)), k)]));
        s.domain(yv, DomainSpec::Boolean);
    }
    Ok(s)
}

/// Edge colouring with `Δ` colours: `x_{ij}^Δ − 1` per edge, then per vertex
/// `s_i · ∏_{j<k ∈ Adj(i)} (x_{ij} − x_{ik}) = 1`.
pub fn encode_edge_chromatic(g: &Graph) -> Result<PolySystem, Error> {
    if g.m() == 0 {
        return Err(Error::InvalidParameter("graph has no edges".into()));
    }
    let delta = u(g.max_degree());
    let mut s = PolySystem::new("edge-chromatic").param("Delta", delta).param("n", g.n());
    let x = |a: usize, b: usize| VarId::x2(u(a.min(b)), u(a.max(b)));
    for (i, j) in g.edges() {
        s.push(Generator::zero(&Polynomial::monomial(Monomial::var_pow(x(i, j), delta)) - &int(1)));
        s.domain(x(i, j), DomainSpec::RootsOfUnity(delta));
    }
    let adj = g.adjacency();
    for i in g.vertices() {
        let mut f = Vec::new();
        for (t, &j) in adj[i].iter().enumerate() {
            for &k in &adj[i][t + 1..] {
                f.push(&var(x(i, j)) - &var(x(i, k)));
            }
        }
        s.push(Generator::witness(VarId::s(u(i)), f));
        s.domain(VarId::s(u(i)), DomainSpec::Witness);
    }
    Ok(s)
}

/// Parameters for [`encode`]; unused fields are ignored.
#[derive(Clone, Debug, Default)]
pub struct EncodingParams {
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub big_r: Option<usize>,
    pub r: Option<usize>,
    pub d: Option<usize>,
}

/// Encodes by CLI name. `poset-dim` uses the incidence poset of `g`;
/// `stable-refute` computes `α` itself.
pub fn encode(name: &str, g: &Graph, p: &EncodingParams) -> Result<PolySystem, Error> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::InvalidParameter(format!("encoding `{name}` needs --{flag}")))
    };
    match name {
        "coloring" => encode_k_coloring(g, u(need(p.k, "k")?)),
        "stable-set" => encode_stable_set(g, need(p.k, "k")?),
        "stable-refute" => encode_stable_set_refutation(g, p.r.unwrap_or(1), stability_number(g)),
        "cycle" => encode_longest_cycle(g, need(p.l, "L")?),
        "hamiltonian" => encode_hamiltonian(g),
        "poset-dim" => encode_poset_dimension(&Poset::incidence(g), need(p.d, "d")?),
        // K is read from --k
        "planar-subgraph" => encode_planar_subgraph(g, need(p.k, "k")?),
        "colorable-subgraph" => encode_colorable_subgraph(g, u(need(p.k, "k")?), need(p.big_r, "R")?),
        "edge-chromatic" => encode_edge_chromatic(g),
        _ => Err(Error::InvalidParameter(format!(
            "unknown encoding `{name}`; expected one of {}",
            ENCODING_NAMES.join(", ")
        ))),
    }
}
