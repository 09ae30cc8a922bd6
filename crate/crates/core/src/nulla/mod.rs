//! Nullstellensatz certificates via degree-bounded linear algebra.
//!
//! For a fixed degree `d` the unknown coefficients of `α_i` are solved from
//! the linear system `Σ α_i f_i = 1`; raising `d` until the system becomes
//! consistent yields a minimum-degree certificate.

mod certificate;
mod linsys;
mod search;
mod solve;
mod transform;

pub use certificate::Certificate;
pub use linsys::{build_system, monomials_up_to, LinearSystem, SupportFilter};
pub use search::{
    certificate_at_degree, find_certificate, find_certificate_filtered, sparsification_trial, Attempt,
    SearchOutcome, TrialSummary,
};
pub use solve::solve_exact;
pub use transform::{contract_certificate, extend_odd_wheel_certificate, odd_wheel_syzygy, w3_seed_certificate};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::*;
    use crate::graphs::*;

    #[test]
    fn k4_linear_system_shape() {
        let s = encode_k_coloring(&complete(4), 3).unwrap();
        assert_eq!(build_system(&s, 1, 1.0, 0, None).num_cols(), 50);
        assert_eq!(build_system(&s, 0, 1.0, 0, None).num_cols(), s.len());
        let a = build_system(&s, 1, 0.5, 7, None);
        let b = build_system(&s, 1, 0.5, 7, None);
        assert_eq!(a.columns, b.columns);
        assert!(a.num_cols() < 50);
    }

    #[test]
    fn k4_needs_degree_four() {
        let s = encode_k_coloring(&complete(4), 3).unwrap();
        let out = find_certificate(&s, 4).unwrap();
        assert_eq!(out.degree(), Some(4));
        assert_eq!(out.attempts.iter().filter(|a| !a.solvable).count(), 4);
    }

    #[test]
    fn small_refutations() {
        let k3 = encode_stable_set_refutation(&complete(3), 1, 1).unwrap();
        assert_eq!(find_certificate(&k3, 3).unwrap().degree(), Some(1));
        let t = turan(5, 3).unwrap();
        let s = encode_stable_set_refutation(&t, 1, 2).unwrap();
        assert_eq!(find_certificate(&s, 3).unwrap().degree(), Some(2));
    }

    #[test]
    fn json_round_trip() {
        let s = encode_stable_set_refutation(&cycle(5), 1, 2).unwrap();
        let c = find_certificate(&s, 3).unwrap().certificate.unwrap();
        let text = c.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert!(back.verify().unwrap());
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn wheel_chain() {
        assert!(odd_wheel_syzygy().is_zero());
        let w3 = w3_seed_certificate().unwrap();
        assert_eq!(w3.degree, 4);
        let w5 = extend_odd_wheel_certificate(&w3, 3).unwrap();
        assert_eq!(w5.degree, 4);
        let w7 = extend_odd_wheel_certificate(&w5, 5).unwrap();
        assert!(w7.verify().unwrap());
        assert_eq!(w7.degree, 4);
        assert!(matches!(extend_odd_wheel_certificate(&w3, 5), Err(crate::Error::Precondition(_))));
    }

    #[test]
    fn contraction_to_w3() {
        let w5 = extend_odd_wheel_certificate(&w3_seed_certificate().unwrap(), 3).unwrap();
        let g = odd_wheel(5).unwrap();
        let c1 = contract_certificate(&w5, &g, 3, 5).unwrap();
        let g1 = g.identify_vertices(3, 5).unwrap();
        let c2 = contract_certificate(&c1, &g1, 2, 4).unwrap();
        assert!(c2.verify().unwrap());
        assert!(c2.degree <= 4);
        assert_eq!(c2.system.expanded(), encode_k_coloring(&complete(4), 3).unwrap().expanded());
        assert!(matches!(contract_certificate(&w5, &g, 1, 2), Err(crate::Error::AdjacentPair(1, 2))));
    }
}
