//! Acceptance suite: one line per criterion, then a hard failure if any
//! criterion did not hold.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use nullcert::algebra::Polynomial;
use nullcert::dualcolor::*;
use nullcert::encodings::*;
use nullcert::graphs::*;
use nullcert::nulla::*;
use nullcert::oracle::{decide_with, OracleConfig};
use nullcert::stablecert::*;

const K4_RUNTIME: Duration = Duration::from_secs(120);
const STABLE_RUNTIME: Duration = Duration::from_secs(30 * 60);
const WHEEL_RUNTIME: Duration = Duration::from_secs(10 * 60);
const HAMILTON_RUNTIME: Duration = Duration::from_secs(5 * 60);
const SIGMA_RUNTIME: Duration = Duration::from_secs(20 * 60);
const SPARSE_RUNTIME: Duration = Duration::from_secs(15 * 60);
const DUALITY_RUNTIME: Duration = Duration::from_secs(30 * 60);

const SPARSE_SEED: u64 = 0;
const SPARSE_TRIALS: usize = 100;
const SPARSE_HIGH_P: f64 = 0.4;
const SPARSE_HIGH_MIN: f64 = 0.80;
const SPARSE_LOW_P: f64 = 0.1;
const SPARSE_LOW_MAX: f64 = 0.20;

const DUALITY_DOMAIN_LIMIT: u128 = 1_000_000;
const DUALITY_MAX_N_LIGHT: usize = 5;
const DUALITY_MAX_N_HEAVY: usize = 4;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() <= limit, format!("took {:?}, limit {:?}", start.elapsed(), limit))
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("fixture polynomial")
}

/// Places `(generator, coefficient)` pairs onto the generators of `system`.
fn certificate_from(system: PolySystem, pieces: &[(&str, &str)]) -> Certificate {
    let mut coefficients = vec![Polynomial::zero(); system.len()];
    for (gen, coef) in pieces {
        let g = p(gen);
        let k = system
            .generators
            .iter()
            .position(|x| *x.expanded() == g)
            .unwrap_or_else(|| panic!("{gen} is not a generator"));
        coefficients[k] = &coefficients[k] + &p(coef);
    }
    Certificate::new(Arc::new(system), coefficients).unwrap()
}

fn k4_reference() -> Certificate {
    certificate_from(
        encode_k_coloring(&complete(4), 3).unwrap(),
        &[
            ("x_1^3 - 1", "-x_1^3 - 1"),
            ("x_4^2 + x_2*x_4 + x_2^2", "4/9*x_4^4 - 5/9*x_4^3*x_2 - 2/9*x_4^3*x_3 - 4/9*x_4^3*x_1 + 2/9*x_4^2*x_2*x_1 + 2/9*x_4^2*x_3*x_1"),
            ("x_2^2 + x_3*x_2 + x_3^2", "1/9*x_4^4 + 2/9*x_4^3*x_2 - 1/9*x_4^3*x_1 - 2/9*x_4^2*x_2*x_1"),
            ("x_4^2 + x_3*x_4 + x_3^2", "2/9*x_4^4 + 1/9*x_4^3*x_2 + 1/9*x_4^3*x_1 + 2/9*x_4^2*x_2*x_1"),
            ("x_4^2 + x_1*x_4 + x_1^2", "-2/3*x_4^4 + x_4^3*x_1 - x_4*x_1^3 + x_1^4"),
            ("x_2^2 + x_1*x_2 + x_1^2", "1/3*x_4^3*x_2"),
            ("x_3^2 + x_1*x_3 + x_1^2", "-1/3*x_4^4 - 1/3*x_4^3*x_2"),
        ],
    )
}

fn w3_reference() -> Certificate {
    certificate_from(
        encode_k_coloring(&odd_wheel(3).unwrap(), 3).unwrap(),
        &[
            ("x_1^2 + x_1*x_2 + x_2^2", "4/9*x_1^4 - 5/9*x_1^3*x_2 - 2/9*x_1^3*x_3 - 4/9*x_1^3*x_4 + 2/9*x_1^2*x_2*x_4 + 2/9*x_1^2*x_3*x_4"),
            ("x_2^2 + x_2*x_3 + x_3^2", "1/9*x_1^4 + 2/9*x_1^3*x_2 - 1/9*x_1^3*x_4 - 2/9*x_1^2*x_2*x_4"),
            ("x_2^2 + x_2*x_4 + x_4^2", "1/3*x_1^3*x_2"),
            ("x_1^2 + x_1*x_3 + x_3^2", "2/9*x_1^4 + 1/9*x_1^3*x_2 + 1/9*x_1^3*x_4 + 2/9*x_1^2*x_2*x_4"),
            ("x_1^2 + x_1*x_4 + x_4^2", "1/3*x_1^4"),
            ("x_3^2 + x_3*x_4 + x_4^2", "-1/3*x_1^4 - 1/3*x_1^3*x_2"),
            ("x_1^3 - 1", "-x_1^3 - 1"),
        ],
    )
}

fn t53_reference() -> Certificate {
    certificate_from(
        encode_stable_set_refutation(&turan(5, 3).unwrap(), 1, 2).unwrap(),
        &[
            ("x_1 + x_2 + x_3 + x_4 + x_5 - 3", "-1/3*(x_1*x_2 + x_3*x_4) - 1/6*(x_1 + x_2 + x_3 + x_4 + x_5) - 1/3"),
            ("x_1*x_3", "1/3*x_4 + 1/3*x_2 + 1/3"),
            ("x_1*x_4", "1/3*x_2 + 1/3"),
            ("x_1*x_5", "1/3*x_2 + 1/3"),
            ("x_2*x_3", "1/3*x_4 + 1/3"),
            ("x_2*x_4", "1/3"),
            ("x_2*x_5", "1/3"),
            ("x_3*x_5", "1/3*x_4 + 1/3"),
            ("x_4*x_5", "1/3"),
            ("x_1^2 - x_1", "1/3*x_2 + 1/6"),
            ("x_2^2 - x_2", "1/3*x_1 + 1/6"),
            ("x_3^2 - x_3", "1/3*x_4 + 1/6"),
            ("x_4^2 - x_4", "1/3*x_3 + 1/6"),
            ("x_5^2 - x_5", "1/6"),
        ],
    )
}

/// Every graph obtained by adding one vertex adjacent to any subset; if
/// `gs` meets every class on `n` vertices, the output meets every class on
/// `n + 1`.
fn one_vertex_extensions(gs: &[Graph]) -> Vec<Graph> {
    gs.iter()
        .flat_map(|g| {
            let n = g.n();
            (0..1u64 << n).map(move |s| {
                let mut h = Graph::new(n + 1);
                for (a, b) in g.edges() {
                    h.add_edge(a, b).unwrap();
                }
                for v in (1..=n).filter(|v| s >> (v - 1) & 1 == 1) {
                    h.add_edge(v, n + 1).unwrap();
                }
                h
            })
        })
        .collect()
}

fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(nonisomorphic_graphs).collect()
}

fn c1_k4_degree() -> Outcome {
    let start = Instant::now();
    let s = encode_k_coloring(&complete(4), 3).unwrap();
    let out = find_certificate(&s, 4).map_err(|e| e.to_string())?;
    ensure(out.degree() == Some(4), format!("degree {:?}", out.degree()))?;
    for a in &out.attempts[..4] {
        ensure(!a.solvable, format!("degree {} solvable", a.degree))?;
    }
    within(start, K4_RUNTIME)?;
    let last = out.attempts.last().unwrap();
    Ok(format!("degree 4, degrees 0-3 inconsistent, final system {}x{}, {:?}", last.rows, last.cols, start.elapsed()))
}

fn c2_reference_certificates() -> Outcome {
    for (name, c) in [("K4", k4_reference()), ("T(5,3)", t53_reference()), ("W3", w3_reference())] {
        ensure(c.combination().unwrap().is_one(), format!("{name} does not expand to 1"))?;
    }
    let mut bad = k4_reference();
    bad.coefficients[0] = -&bad.coefficients[0];
    ensure(!bad.verify().unwrap(), "sign-flipped K4 certificate verified")?;
    let seed = w3_seed_certificate().unwrap();
    ensure(seed.coefficients == w3_reference().coefficients, "library W3 seed differs from the transcription")?;
    Ok("K4, T(5,3) and W3 expand to exactly 1; sign flip rejected".into())
}

fn c3_stable_minimality() -> Outcome {
    let start = Instant::now();
    let graphs = small_graphs(6);
    for g in &graphs {
        let alpha = stability_number(g);
        let c = construct_certificate(g, 1).map_err(|e| format!("{g:?}: {e}"))?;
        ensure(c.verify().unwrap() && c.degree as usize == alpha, format!("{g:?}: constructed degree {}", c.degree))?;
        let s = encode_stable_set_refutation(g, 1, alpha).unwrap();
        let out = find_certificate(&s, alpha as u32).map_err(|e| e.to_string())?;
        ensure(out.degree() == Some(alpha as u32), format!("{g:?}: minimum degree {:?}, α = {alpha}", out.degree()))?;
    }
    within(start, STABLE_RUNTIME)?;
    Ok(format!("{} graphs on ≤ 6 vertices: construction and search both give α, {:?}", graphs.len(), start.elapsed()))
}

fn c4_term_per_stable_set() -> Outcome {
    let t = turan(5, 3).unwrap();
    let reference = t53_reference();
    ensure(check_term_per_stable_set(&reference, &t).unwrap(), "T(5,3) reference misses a stable set")?;
    let a = &reduce_certificate(&reference).unwrap().coefficients[0];
    ensure(a.num_terms() == 8, format!("T(5,3) A has {} terms", a.num_terms()))?;
    let built = construct_certificate(&t, 1).unwrap();
    ensure(built.coefficients == reference.coefficients, "construction differs from the T(5,3) reference")?;

    let pet = petersen();
    let pc = construct_certificate(&pet, 1).unwrap();
    ensure(check_term_per_stable_set(&pc, &pet).unwrap(), "Petersen misses a stable set")?;
    let tri = disjoint_triangles(2);
    let tc = construct_certificate(&tri, 1).unwrap();
    ensure(check_term_per_stable_set(&tc, &tri).unwrap(), "two triangles miss a stable set")?;
    let terms = reduce_certificate(&tc).unwrap().coefficients[0].num_terms();
    ensure(terms >= 16, format!("two triangles: {terms} terms"))?;
    Ok(format!(
        "T(5,3): 8 terms, equal to construction; Petersen: {} stable sets covered; two triangles: {terms} terms",
        stable_sets(&pet).len()
    ))
}

fn c5_odd_wheels() -> Outcome {
    let start = Instant::now();
    ensure(odd_wheel_syzygy().is_zero(), "syzygy does not vanish")?;
    let w5 = extend_odd_wheel_certificate(&w3_seed_certificate().unwrap(), 3).map_err(|e| e.to_string())?;
    let w7 = extend_odd_wheel_certificate(&w5, 5).map_err(|e| e.to_string())?;
    for (name, c) in [("W5", &w5), ("W7", &w7)] {
        ensure(c.verify().unwrap() && c.degree == 4, format!("{name}: degree {}", c.degree))?;
    }
    let s = encode_k_coloring(&odd_wheel(5).unwrap(), 3).unwrap();
    let out = find_certificate(&s, 4).map_err(|e| e.to_string())?;
    ensure(out.degree() == Some(4), format!("W5 search degree {:?}", out.degree()))?;
    within(start, WHEEL_RUNTIME)?;
    Ok(format!("syzygy = 0; W5, W7 certificates of degree 4 verify; W5 minimum degree 4; {:?}", start.elapsed()))
}

fn c6_identification() -> Outcome {
    let w5 = extend_odd_wheel_certificate(&w3_seed_certificate().unwrap(), 3).unwrap();
    let g = odd_wheel(5).unwrap();
    let c1 = contract_certificate(&w5, &g, 3, 5).map_err(|e| e.to_string())?;
    let g1 = g.identify_vertices(3, 5).unwrap();
    let c2 = contract_certificate(&c1, &g1, 2, 4).map_err(|e| e.to_string())?;
    let g2 = g1.identify_vertices(2, 4).unwrap();
    ensure(canonical_form(&g2) == canonical_form(&odd_wheel(3).unwrap()), "result is not W3")?;
    ensure(c2.verify().unwrap() && c2.degree <= 4, format!("degree {}", c2.degree))?;
    Ok(format!("W5 → W3 by identifying (3,5) then (2,4): verifies, degree {}", c2.degree))
}

fn c7_hamiltonian() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (name, g, expected) in [
        ("K3", complete(3), 6u64),
        ("K4", complete(4), 24),
        ("C5", cycle(5), 10),
        ("Petersen", petersen(), 0),
    ] {
        let cfg = OracleConfig { count: true, ..OracleConfig::default() };
        let r = decide_with(&encode_hamiltonian(&g).unwrap(), &cfg).map_err(|e| e.to_string())?;
        let count = r.count.unwrap();
        let direct = 2 * g.n() as u64 * hamiltonian_cycles(&g);
        ensure(count == BigUint::from(expected) && count == BigUint::from(direct), format!("{name}: {count}"))?;
        parts.push(format!("{name} {count}"));
    }
    within(start, HAMILTON_RUNTIME)?;
    Ok(format!("{} (= 2n × cycles)", parts.join(", ")))
}

fn c8_dual_example() -> Outcome {
    let g = Graph::from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
    let full = graph_polynomial(&g).num_terms();
    let nf = graph_polynomial_normal_form(&g, 3).unwrap().num_terms();
    let c = Labeling::new(3, vec![0, 0, 2, 0]).unwrap();
    let e1 = epsilon_star(&g, &c).unwrap();
    let e2 = epsilon_star_coefficient(&g, &c).unwrap();
    ensure(full == 20 && nf == 18 && e1 == 1 && e2 == 1, format!("{full} / {nf} terms, ε* = {e1} / {e2}"))?;
    Ok("f_G has 20 terms, [f_G] has 18, ε*(0,0,2,0) = 1 by both routes".into())
}

fn c9_simultaneous() -> Outcome {
    let start = Instant::now();
    for (n, s) in [(4, 2), (6, 3), (8, 2)] {
        let got = simultaneous_chromatic_number(&cycle(n), 10_000_000).map_err(|e| e.to_string())?.0;
        ensure(got == s, format!("σ(C{n}) = {got}"))?;
    }
    let small = small_graphs(6);
    let seven = one_vertex_extensions(&nonisomorphic_graphs(6));
    let eight = one_vertex_extensions(&seven);
    let counts = (small.len(), seven.len(), eight.len());
    let bad = small
        .par_iter()
        .chain(seven.par_iter())
        .chain(eight.par_iter())
        .find_map_any(|g| {
            let d = g.max_degree() as u32 + 1;
            let (lab, o) = match orientation_coloring(g, d) {
                Ok(x) => x,
                Err(e) => return Some(format!("{g:?}: {e}")),
            };
            let ok = o.is_acyclic(g.n()) && epsilon(g, &lab).unwrap() && epsilon_star(g, &lab).unwrap() != 0;
            (!ok).then(|| format!("{g:?}: not simultaneous"))
        });
    if let Some(msg) = bad {
        return Err(msg);
    }
    let mut bip = 0;
    for n in 2..=7 {
        for g in connected_bipartite_graphs(n) {
            let brute = simultaneous_chromatic_number(&g, 10_000_000).map_err(|e| e.to_string())?.0 == 2;
            ensure(bipartite_sigma_two(&g).unwrap() == brute, format!("{g:?}: predicate disagrees"))?;
            bip += 1;
        }
    }
    within(start, SIGMA_RUNTIME)?;
    Ok(format!(
        "σ(C4,C6,C8) = 2,3,2; orientation coloring on every graph with n ≤ 8 \
         ({} classes n ≤ 6, {} and {} one-vertex extensions at n = 7, 8); bipartite predicate on {bip} graphs; {:?}",
        counts.0,
        counts.1,
        counts.2,
        start.elapsed()
    ))
}

fn c10_sparsification() -> Outcome {
    let start = Instant::now();
    let s = encode_k_coloring(&complete(4), 3).unwrap();
    let hi = sparsification_trial(&s, 4, SPARSE_HIGH_P, SPARSE_TRIALS, SPARSE_SEED).unwrap().fraction();
    let lo = sparsification_trial(&s, 4, SPARSE_LOW_P, SPARSE_TRIALS, SPARSE_SEED).unwrap().fraction();
    within(start, SPARSE_RUNTIME)?;
    let detail = format!("seeds {SPARSE_SEED}..{}: p={SPARSE_HIGH_P} → {hi:.2} (need ≥ {SPARSE_HIGH_MIN}), p={SPARSE_LOW_P} → {lo:.2} (need ≤ {SPARSE_LOW_MAX})", SPARSE_SEED + SPARSE_TRIALS as u64 - 1);
    ensure(hi >= SPARSE_HIGH_MIN && lo <= SPARSE_LOW_MAX, detail.clone())?;
    Ok(detail)
}

/// `(encoding, params, degree bound)` for every instance of `g` in scope.
fn duality_cases(g: &Graph) -> Vec<(&'static str, EncodingParams, u32)> {
    let n = g.n();
    let alpha = stability_number(g) as u32;
    let mut cases = Vec::new();
    let with = |k: Option<usize>, l: Option<usize>, big_r: Option<usize>, d: Option<usize>| EncodingParams {
        k,
        l,
        big_r,
        r: Some(1),
        d,
    };
    if n <= DUALITY_MAX_N_LIGHT {
        for k in 1..=3 {
            cases.push(("coloring", with(Some(k), None, None, None), 4));
        }
        for k in 1..=n {
            cases.push(("stable-set", with(Some(k), None, None, None), alpha));
        }
        cases.push(("stable-refute", with(None, None, None, None), alpha));
        cases.push(("edge-chromatic", with(None, None, None, None), 4));
    }
    if n <= DUALITY_MAX_N_HEAVY {
        for k in 1..=2 {
            for big_r in 1..=g.m() {
                cases.push(("colorable-subgraph", with(Some(k), None, Some(big_r), None), 4));
            }
        }
        cases.push(("hamiltonian", with(None, None, None, None), 4));
        for l in 3..=n {
            cases.push(("cycle", with(None, Some(l), None, None), 4));
        }
        for d in 1..=2 {
            cases.push(("poset-dim", with(None, None, None, Some(d)), 4));
        }
        for big_k in 1..=g.m() {
            cases.push(("planar-subgraph", with(Some(big_k), None, None, None), 4));
        }
    }
    cases
}

fn c11_duality() -> Outcome {
    let start = Instant::now();
    let mut instances = Vec::new();
    let mut over_domain = 0;
    for g in small_graphs(DUALITY_MAX_N_LIGHT.max(DUALITY_MAX_N_HEAVY)) {
        for (name, params, d_max) in duality_cases(&g) {
            let Ok(s) = encode(name, &g, &params) else { continue };
            if s.domain_product() > DUALITY_DOMAIN_LIMIT {
                over_domain += 1;
                continue;
            }
            instances.push((name, g.clone(), s, d_max));
        }
    }
    let results: Vec<Result<(&str, bool, bool, String), String>> = instances
        .par_iter()
        .map(|(name, g, s, d_max)| {
            let feasible = decide_with(s, &OracleConfig::default()).map_err(|e| e.to_string())?.feasible;
            let cert = find_certificate(s, *d_max).map_err(|e| e.to_string())?.certificate.is_some();
            Ok((*name, feasible, cert, format!("{name} {:?} on {}", s.meta.params, g.to_edge_list().replace('\n', " "))))
        })
        .collect();
    let mut per_encoding: std::collections::BTreeMap<&str, (usize, usize, usize)> = Default::default();
    let mut unsound = Vec::new();
    let mut missing = Vec::new();
    for r in results {
        let (name, feasible, cert, label) = r?;
        let e = per_encoding.entry(name).or_default();
        e.0 += 1;
        e.1 += usize::from(!feasible);
        if feasible && cert {
            unsound.push(label);
        } else if !feasible && !cert {
            e.2 += 1;
            missing.push(label);
        }
    }
    let table = per_encoding
        .iter()
        .map(|(k, (total, inf, miss))| format!("{k} {total}/{inf}/{miss}"))
        .collect::<Vec<_>>()
        .join(", ");
    let summary = format!(
        "{} instances (encoding total/infeasible/infeasible without certificate: {table}); {over_domain} over the domain limit; {:?}",
        instances.len(),
        start.elapsed()
    );
    ensure(unsound.is_empty(), format!("certificate for a feasible system: {}", unsound.join("; ")))?;
    ensure(
        missing.is_empty(),
        format!("{summary}; infeasible with no certificate within the degree bound, e.g. {}", missing[..missing.len().min(3)].join("; ")),
    )?;
    within(start, DUALITY_RUNTIME)?;
    Ok(summary)
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("K4 minimum degree 4", c1_k4_degree),
        ("reference certificates verify", c2_reference_certificates),
        ("stable-set minimum degree equals α", c3_stable_minimality),
        ("a term for every stable set", c4_term_per_stable_set),
        ("odd-wheel extension", c5_odd_wheels),
        ("node identification", c6_identification),
        ("Hamiltonian counts", c7_hamiltonian),
        ("dual-coloring example", c8_dual_example),
        ("simultaneous chromatic number", c9_simultaneous),
        ("sparsification success rates", c10_sparsification),
        ("oracle/certificate duality", c11_duality),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    println!("criterion 12 SKIP  full-scale table rows are out of scope");
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
