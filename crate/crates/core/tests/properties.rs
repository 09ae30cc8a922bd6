use std::sync::Arc;

use nullcert::dualcolor::{
    bipartite_sigma_two, epsilon, epsilon_star, graph_polynomial_normal_form, orientation_coloring,
    simultaneous_chromatic_number, Labeling,
};
use nullcert::encodings::{encode_k_coloring, encode_stable_set_refutation};
use nullcert::graphs::*;
use nullcert::nulla::{certificate_at_degree, find_certificate, find_certificate_filtered};
use nullcert::oracle::decide;
use nullcert::stablecert::{construct_certificate, is_stable_monomial, reduce_certificate};
use proptest::prelude::*;
use rayon::prelude::*;

fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(nonisomorphic_graphs).collect()
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            if mask >> bit & 1 == 1 {
                g.add_edge(a, b).unwrap();
            }
            bit += 1;
        }
    }
    g
}

fn labelings(n: usize, d: u32) -> impl Iterator<Item = Labeling> {
    (0..(d as u64).pow(n as u32)).map(move |mut k| {
        let values = (0..n)
            .map(|_| {
                let v = (k % d as u64) as u32;
                k /= d as u64;
                v
            })
            .collect();
        Labeling::new(d, values).unwrap()
    })
}

/// Plain sum over all `2^|E|` orientations.
fn orientation_sum(g: &Graph, c: &Labeling) -> i64 {
    let edges = g.edge_list();
    let d = c.d as usize;
    (0..1u64 << edges.len())
        .map(|mask| {
            let mut out = vec![0usize; g.n() + 1];
            let mut flips = 0;
            for (k, &(a, b)) in edges.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    out[b] += 1;
                    flips += 1;
                } else {
                    out[a] += 1;
                }
            }
            let hit = (1..=g.n()).all(|v| out[v] % d == c.get(v) as usize);
            match (hit, flips % 2) {
                (false, _) => 0,
                (true, 0) => 1,
                (true, _) => -1,
            }
        })
        .sum()
}

#[test]
fn non_three_colorable_needs_degree_four() {
    let hard: Vec<Graph> = small_graphs(6)
        .into_iter()
        .filter(|g| count_proper_colorings(g, 3, 0).count == 0)
        .collect();
    assert!(hard.len() > 10);
    hard.par_iter().for_each(|g| {
        let sys = Arc::new(encode_k_coloring(g, 3).unwrap());
        for d in 1..=3 {
            let (cert, _) = certificate_at_degree(&sys, d, 1.0, 0, None).unwrap();
            assert!(cert.is_none(), "degree {d} solvable for {}", g.to_edge_list());
        }
    });
}

#[test]
fn feasible_systems_stay_inconsistent() {
    small_graphs(5).par_iter().for_each(|g| {
        for k in [2, 3] {
            let sys = encode_k_coloring(g, k).unwrap();
            let feasible = decide(&sys, false).unwrap().feasible;
            let found = find_certificate(&sys, 4).unwrap().certificate.is_some();
            assert_ne!(feasible, found, "k={k} {}", g.to_edge_list());
        }
    });
}

#[test]
fn reduced_support_reaches_alpha() {
    small_graphs(5).par_iter().for_each(|g| {
        let alpha = stability_number(g);
        let sys = encode_stable_set_refutation(g, 1, alpha).unwrap();
        let filter = |m: &nullcert::algebra::Monomial| is_stable_monomial(g, m);
        let out = find_certificate_filtered(&sys, alpha as u32, Some(&filter)).unwrap();
        assert_eq!(out.degree(), Some(alpha as u32), "{}", g.to_edge_list());
        let cert = out.certificate.unwrap();
        assert!(cert.verify().unwrap());
    });
}

fn check_construction(g: &Graph, r: usize) {
    let alpha = stability_number(g);
    let cert = construct_certificate(g, r).unwrap();
    assert!(cert.verify().unwrap());
    assert_eq!(cert.coefficients[0].degree(), Some(alpha as u32));
    for q in &cert.coefficients[1..] {
        assert!(q.degree().map_or(true, |e| e as usize + 1 <= alpha));
    }
    let red = reduce_certificate(&cert).unwrap();
    assert_eq!(red.degree, cert.degree);
    assert!(red.coefficients[0].monomials().all(|m| is_stable_monomial(g, m)));
    let again = reduce_certificate(&red).unwrap();
    assert_eq!(again.coefficients, red.coefficients);
}

#[test]
fn construction_on_all_small_graphs() {
    small_graphs(6).par_iter().for_each(|g| {
        for r in [1, 2] {
            check_construction(g, r);
        }
    });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn construction_on_random_graphs(n in 7usize..=8, mask in any::<u64>(), r in 1usize..=2) {
        let g = graph_from_mask(n, mask & ((1u64 << (n * (n - 1) / 2)) - 1));
        check_construction(&g, r);
    }

    #[test]
    fn reduction_is_idempotent_after_perturbation(mask in 0u64..1 << 10, v in 1usize..=5, w in 1usize..=5) {
        let g = graph_from_mask(5, mask);
        let cert = construct_certificate(&g, 1).unwrap();
        let b = cert.system.generators[0].expanded().clone();
        let mut coef = cert.coefficients.clone();
        let xv = nullcert::algebra::Polynomial::var(nullcert::algebra::VarId::x(v as u32));
        let xw = nullcert::algebra::Polynomial::var(nullcert::algebra::VarId::x(w as u32));
        let m = &(&xv * &xv) * &xw;
        // A·B + Q_v·(x_v² − x_v): add m·B to A and cancel with Q_v
        coef[0] = &coef[0] + &(&m - &(&xv * &xw));
        coef[v] = &coef[v] - &(&xw * &b);
        let pert = nullcert::nulla::Certificate::new(Arc::clone(&cert.system), coef).unwrap();
        prop_assert!(pert.verify().unwrap());
        let red = reduce_certificate(&pert).unwrap();
        prop_assert!(red.coefficients[0].monomials().all(|m| is_stable_monomial(&g, m)));
        prop_assert_eq!(&reduce_certificate(&red).unwrap().coefficients, &red.coefficients);
    }
}

#[test]
fn coefficient_equals_orientation_sum() {
    let graphs: Vec<Graph> = small_graphs(6).into_iter().filter(|g| g.m() <= 8).collect();
    graphs.par_iter().for_each(|g| {
        for d in [2, 3] {
            let nf = graph_polynomial_normal_form(g, d).unwrap();
            for c in labelings(g.n(), d) {
                let coef = nf.coefficient(&c.monomial());
                let dfs = epsilon_star(g, &c).unwrap();
                assert_eq!(coef, nullcert::algebra::rat(dfs, 1), "{} {:?}", g.to_edge_list(), c.values);
                if g.n() <= 4 {
                    assert_eq!(dfs, orientation_sum(g, &c));
                }
            }
        }
    });
}

#[test]
fn colorable_iff_normal_form_nonzero() {
    small_graphs(6).par_iter().for_each(|g| {
        for d in 1..=4 {
            let colorable = count_proper_colorings(g, d, 0).count > 0;
            let nf = graph_polynomial_normal_form(g, d).unwrap();
            assert_eq!(colorable, !nf.is_zero(), "d={d} {}", g.to_edge_list());
        }
    });
}

#[test]
fn sigma_of_even_cycles() {
    for n in [4, 6, 8, 12] {
        let (s, w) = simultaneous_chromatic_number(&cycle(n), 1 << 24).unwrap();
        assert_eq!(s == 2, n % 4 == 0, "C_{n}");
        assert!(epsilon(&cycle(n), &w).unwrap());
    }
}

#[test]
fn bipartite_predicate_matches_search() {
    for n in 2..=7 {
        for g in connected_bipartite_graphs(n) {
            let (s, _) = simultaneous_chromatic_number(&g, 1 << 24).unwrap();
            assert_eq!(bipartite_sigma_two(&g).unwrap(), s == 2, "{}", g.to_edge_list());
        }
    }
}

#[test]
fn orientation_coloring_on_small_graphs() {
    small_graphs(6).par_iter().for_each(|g| {
        let d = g.max_degree() as u32 + 1;
        let (c, o) = orientation_coloring(g, d).unwrap();
        assert!(o.is_acyclic(g.n()));
        assert!(epsilon(g, &c).unwrap());
        assert_ne!(epsilon_star(g, &c).unwrap(), 0);
    });
}
