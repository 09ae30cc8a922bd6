//! Explicit degree-`α(G)` certificates for `J(G, r)`: no stable set of size
//! `α(G) + r`.
//!
//! Coefficient layout follows the generator order of
//! [`encode_stable_set_refutation`]: `A`, then `Q_1..Q_n`, then `Q_e` for the
//! edges in lex order.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Monomial, Polynomial, Rational, VarId};
use crate::encodings::{encode_stable_set_refutation, PolySystem};
use crate::error::{Error, Result};
use crate::graphs::{stable_sets, stability_number, Graph};
use crate::nulla::Certificate;

/// `C_0 = 1/(α + r)`, `C_i = i·C_{i−1}/(α + r − i)` for `i = 1..=α`.
pub fn compute_constants(alpha: usize, r: usize) -> Result<Vec<Rational>> {
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let big = |v: usize| Rational::from_integer((v as i64).into());
    let mut c = vec![Rational::one() / big(alpha + r)];
    for i in 1..=alpha {
        let next = big(i) * &c[i - 1] / big(alpha + r - i);
        c.push(next);
    }
    Ok(c)
}

fn stable_monomial(set: &[usize]) -> Monomial {
    Monomial::from_pairs(set.iter().map(|&v| (VarId::x(v as u32), 1)))
}

/// `𝒫(i, G)` for `i = 0..=α`: sum of the square-free monomials of the
/// stable sets of size `i`.
pub fn stable_set_polynomials(g: &Graph) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for s in stable_sets(g) {
        if out.len() <= s.len() {
            out.resize(s.len() + 1, Polynomial::zero());
        }
        out[s.len()].add_term(stable_monomial(&s), Rational::one());
    }
    out
}

/// True iff `m` is square-free and its support is stable in `g`.
pub fn is_stable_monomial(g: &Graph, m: &Monomial) -> bool {
    let vs: Vec<usize> = m.vars().map(|v| v.indices()[0] as usize).collect();
    m.is_square_free()
        && vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&w| !g.has_edge(u, w)))
}

fn edge_index(g: &Graph) -> BTreeMap<(usize, usize), usize> {
    g.edges().enumerate().map(|(k, e)| (e, 1 + g.n() + k)).collect()
}

/// The explicit construction: `A = −Σ C_i 𝒫(i, G)`, then for every stable
/// set `S` (by size, then lex) and vertex `k`, rule 1 adds `C_{|S|+1}·x^S`
/// to `Q_k` when `S ∪ {k}` is stable, and rule 2 adds `C_{|S|}·x^{S∖l}` to
/// `Q_{kl}` for the smallest `l ∈ S` adjacent to `k`.
pub fn construct_certificate(g: &Graph, r: usize) -> Result<Certificate> {
    let alpha = stability_number(g);
    let c = compute_constants(alpha, r)?;
    let system = encode_stable_set_refutation(g, r, alpha)?;
    let eidx = edge_index(g);
    let mut coef = vec![Polynomial::zero(); system.len()];
    let sets = stable_sets(g);
    for s in &sets {
        coef[0].add_term(stable_monomial(s), -c[s.len()].clone());
    }
    for s in &sets {
        let i = s.len();
        for k in g.vertices() {
            if s.contains(&k) {
                continue;
            }
            match s.iter().position(|&d| g.has_edge(k, d)) {
                None => coef[k].add_term(stable_monomial(s), c[i + 1].clone()),
                Some(l) => {
                    let e = (k.min(s[l]), k.max(s[l]));
                    let rest: Vec<usize> = s.iter().copied().filter(|&v| v != s[l]).collect();
                    coef[eidx[&e]].add_term(stable_monomial(&rest), c[i].clone());
                }
            }
        }
    }
    let cert = Certificate::new(Arc::new(system), coef)?;
    if !cert.verify()? {
        return Err(Error::VerificationFailed("stable-set construction does not expand to 1".into()));
    }
    Ok(cert)
}

/// Recovers `(G, r)` from a `J(G, r)` certificate, checking that the
/// system is exactly the one the encoder produces.
fn refutation_graph(system: &PolySystem) -> Result<(Graph, usize)> {
    let bad = || Error::Precondition("not a stable-set refutation system".into());
    if system.meta.encoding != "stable-refute" {
        return Err(bad());
    }
    let get = |k: &str| system.meta.params.get(k).and_then(|v| v.parse::<usize>().ok()).ok_or_else(bad);
    let (n, r, alpha) = (get("n")?, get("r")?, get("alpha")?);
    let mut g = Graph::new(n);
    for gen in system.generators.iter().skip(1 + n) {
        let p = gen.expanded();
        let (m, c) = p.terms().next().ok_or_else(bad)?;
        let vs: Vec<usize> = m.vars().map(|v| v.indices()[0] as usize).collect();
        if p.num_terms() != 1 || !c.is_one() || vs.len() != 2 || m.degree() != 2 {
            return Err(bad());
        }
        g.add_edge(vs[0], vs[1])?;
    }
    let expected = encode_stable_set_refutation(&g, r, alpha)?;
    if expected.expanded() != system.expanded() {
        return Err(bad());
    }
    Ok((g, r))
}

/// Moves every monomial of `A` that is not a square-free stable-set monomial
/// into the `Q` coefficients; repeated squares go to `Q_j`, edges to `Q_ij`.
pub fn reduce_certificate(cert: &Certificate) -> Result<Certificate> {
    if !cert.verify()? {
        return Err(Error::VerificationFailed("input certificate does not expand to 1".into()));
    }
    let (g, _) = refutation_graph(&cert.system)?;
    let eidx = edge_index(&g);
    let b = cert.system.generators[0].expanded().clone();
    let mut coef = cert.coefficients.clone();
    loop {
        let bad = coef[0]
            .terms()
            .rev()
            .find(|(m, _)| !is_stable_monomial(&g, m))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = bad else { break };
        coef[0].add_term(m.clone(), -c.clone());
        let square = m.iter().find(|&(_, e)| e >= 2).map(|(v, _)| v);
        if let Some(v) = square {
            // m = m'·x_v², A·B gains c·m'·x_v·B and Q_v gains c·m'·B
            let rest = m.div(&Monomial::var_pow(v, 2)).expect("divides");
            coef[0].add_term(rest.mul(&Monomial::var(v)), c.clone());
            let k = v.indices()[0] as usize;
            coef[k].add_assign_ref(&b.mul_monomial(&rest).scale(&c));
        } else {
            let vs: Vec<usize> = m.vars().map(|v| v.indices()[0] as usize).collect();
            let e = vs
                .iter()
                .enumerate()
                .flat_map(|(a, &u)| vs[a + 1..].iter().map(move |&w| (u, w)))
                .find(|&(u, w)| g.has_edge(u, w))
                .expect("non-stable support has an edge");
            let xe = Monomial::from_pairs([(VarId::x(e.0 as u32), 1), (VarId::x(e.1 as u32), 1)]);
            let rest = m.div(&xe).expect("divides");
            coef[eidx[&e]].add_assign_ref(&b.mul_monomial(&rest).scale(&c));
        }
    }
    let out = Certificate::new(Arc::clone(&cert.system), coef)?;
    if !out.verify()? {
        return Err(Error::VerificationFailed("reduction broke the certificate".into()));
    }
    Ok(out)
}

/// After reduction, `A` has a nonzero term for every stable set of `g`
/// (the empty set being the constant term).
pub fn check_term_per_stable_set(cert: &Certificate, g: &Graph) -> Result<bool> {
    let reduced = reduce_certificate(cert)?;
    let a = &reduced.coefficients[0];
    Ok(stable_sets(g).iter().all(|s| !a.coefficient(&stable_monomial(s)).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::graphs::*;

    #[test]
    fn constants() {
        assert_eq!(compute_constants(2, 1).unwrap(), vec![rat(1, 3), rat(1, 6), rat(1, 3)]);
        assert_eq!(compute_constants(0, 1).unwrap(), vec![rat(1, 1)]);
        assert_eq!(compute_constants(1, 2).unwrap(), vec![rat(1, 3), rat(1, 6)]);
        assert!(compute_constants(1, 0).is_err());
    }

    #[test]
    fn single_vertex() {
        let c = construct_certificate(&complete(1), 1).unwrap();
        assert_eq!(c.coefficients[0], "-1/2*x_1 - 1/2".parse().unwrap());
        assert_eq!(c.coefficients[1], "1/2".parse().unwrap());
        assert_eq!(c.degree, 1);
    }

    #[test]
    fn turan_matches_printed_form() {
        let t = turan(5, 3).unwrap();
        let c = construct_certificate(&t, 1).unwrap();
        let a: Polynomial = "-1/3*x_1*x_2 - 1/3*x_3*x_4 - 1/6*x_1 - 1/6*x_2 - 1/6*x_3 - 1/6*x_4 - 1/6*x_5 - 1/3"
            .parse()
            .unwrap();
        assert_eq!(c.coefficients[0], a);
        assert_eq!(c.degree, 2);
        assert_eq!(reduce_certificate(&c).unwrap().coefficients, c.coefficients);
        assert!(check_term_per_stable_set(&c, &t).unwrap());
    }

    #[test]
    fn degrees_and_polynomials() {
        let p = petersen();
        let c = construct_certificate(&p, 1).unwrap();
        assert_eq!(c.degree, 4);
        assert!(c.coefficients[1..].iter().all(|q| q.degree().unwrap_or(0) <= 3));
        let polys = stable_set_polynomials(&p);
        assert_eq!(polys.len(), 5);
        assert_eq!(polys[1].num_terms(), 10);
        let c2 = construct_certificate(&cycle(6), 2).unwrap();
        assert_eq!(c2.degree, 3);
    }

    #[test]
    fn reduction_moves_squares_and_edges() {
        let g = path(3);
        let c = construct_certificate(&g, 1).unwrap();
        let b = c.system.generators[0].expanded().clone();
        let mut perturbed = c.coefficients.clone();
        // add D·(x_1² − x_1)·B − D·B·(x_1² − x_1) split across A and Q_1
        let d: Polynomial = "x_1^2 - x_1".parse().unwrap();
        perturbed[0] = &perturbed[0] + &d;
        perturbed[1] = &perturbed[1] - &b;
        let e: Polynomial = "x_1*x_2".parse().unwrap();
        perturbed[0] = &perturbed[0] + &e.scale(&rat(3, 1));
        perturbed[4] = &perturbed[4] - &b.scale(&rat(3, 1));
        let pc = Certificate::new(Arc::clone(&c.system), perturbed).unwrap();
        assert!(pc.verify().unwrap());
        let red = reduce_certificate(&pc).unwrap();
        assert!(red.coefficients[0].monomials().all(|m| is_stable_monomial(&g, m)));
        assert_eq!(red.coefficients[0], c.coefficients[0]);
        assert_eq!(reduce_certificate(&red).unwrap().coefficients, red.coefficients);
    }
}
