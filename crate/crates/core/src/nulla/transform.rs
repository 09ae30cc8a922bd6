//! Certificate transfer: node identification and the odd-wheel step.

use std::collections::HashMap;
use std::sync::Arc;

use super::certificate::Certificate;
use crate::algebra::{Family, Polynomial, VarId};
use crate::encodings::{encode_k_coloring, PolySystem};
use crate::error::{Error, Result};
use crate::graphs::{identify_map, odd_wheel, Graph};

fn coloring_k(system: &PolySystem) -> Result<u32> {
    if system.meta.encoding != "coloring" {
        return Err(Error::Precondition(format!("expected a coloring system, got `{}`", system.meta.encoding)));
    }
    system
        .meta
        .params
        .get("k")
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| Error::Precondition("coloring system without parameter k".into()))
}

fn require_system(cert: &Certificate, expected: &PolySystem) -> Result<()> {
    if cert.system.expanded() != expected.expanded() {
        return Err(Error::Precondition("certificate is not over the expected coloring system".into()));
    }
    Ok(())
}

fn rename_x(f: impl Fn(u32) -> u32) -> impl Fn(VarId) -> VarId {
    move |v| if v.family() == Family::X { v.map_indices(&f) } else { v }
}

/// Re-expresses `pieces` (generator polynomial, coefficient) over `target`,
/// adding coefficients of generators that coincide, and verifies the
/// result.
fn assemble(target: PolySystem, pieces: impl IntoIterator<Item = (Polynomial, Polynomial)>) -> Result<Certificate> {
    let index: HashMap<String, usize> = target
        .generators
        .iter()
        .enumerate()
        .map(|(k, g)| (g.expanded().to_canonical(), k))
        .collect();
    let mut coefficients = vec![Polynomial::zero(); target.len()];
    for (gen, coef) in pieces {
        if coef.is_zero() {
            continue;
        }
        let k = *index
            .get(&gen.to_canonical())
            .ok_or_else(|| Error::VerificationFailed(format!("generator {gen} has no image")))?;
        coefficients[k].add_assign_ref(&coef);
    }
    let cert = Certificate::new(Arc::new(target), coefficients)?;
    if !cert.verify()? {
        return Err(Error::VerificationFailed("transferred certificate does not expand to 1".into()));
    }
    Ok(cert)
}

/// Transfers a coloring certificate for `g` to the graph with `j` merged
/// into `i`, by substituting `x_j := x_i`.
pub fn contract_certificate(cert: &Certificate, g: &Graph, i: usize, j: usize) -> Result<Certificate> {
    let k = coloring_k(&cert.system)?;
    require_system(cert, &encode_k_coloring(g, k)?)?;
    let h = g.identify_vertices(i, j)?;
    let (i32_, j32) = (i as u32, j as u32);
    let f = rename_x(move |v| identify_map(v as usize, i32_ as usize, j32 as usize) as u32);
    let pieces: Vec<_> = cert
        .system
        .generators
        .iter()
        .zip(&cert.coefficients)
        .map(|(gen, a)| (gen.expanded().rename(&f), a.rename(&f)))
        .collect();
    assemble(encode_k_coloring(&h, k)?, pieces)
}

// Template polynomials over x_0 (hub), x_1, x_2 and the rim end x_3 with the
// two new rim vertices x_4, x_5.
const ALPHA13: &str = "1/9*x_0*x_1^3 + 2/9*x_0*x_1^2*x_2 + 2/9*x_1^4 + 1/9*x_1^3*x_2";

const BETA: [(u32, u32, &str); 6] = [
    (3, 4, "-2/9*x_0^3*x_2 - 1/9*x_0^2*x_1*x_3 - 1/9*x_0^2*x_2*x_4 + 2/9*x_0*x_1^3 + 1/9*x_0*x_1*x_2*x_5 - 2/9*x_0*x_1*x_3*x_4 - 1/9*x_1*x_2*x_4*x_5 + 1/9*x_4^4"),
    (4, 5, "-2/9*x_0^4 + 1/9*x_0^3*x_4 - 1/9*x_0^2*x_1*x_2 - 2/9*x_0*x_1^2*x_2 + 1/9*x_0*x_1^2*x_4 - 1/9*x_0*x_1*x_2*x_3 - 2/9*x_1^4 - 1/9*x_1^2*x_2*x_4 + 1/9*x_1*x_2*x_3*x_4 + 1/9*x_1*x_2*x_4^2 - 1/9*x_4^4 + 1/9*x_4^3*x_5 - 1/9*x_4*x_5^3"),
    (0, 1, "-2/9*x_0^3*x_1 - 2/9*x_0^2*x_1^2 - 1/3*x_0^2*x_1*x_3 - 5/9*x_0^2*x_1*x_4 + 2/9*x_0^2*x_4*x_5 + 2/9*x_0^2*x_5^2 - 1/3*x_0*x_1^2*x_3 + 1/9*x_0*x_1^2*x_5 - 5/9*x_0*x_1*x_3^2 - 2/3*x_0*x_1*x_3*x_4 - 4/9*x_0*x_1*x_4^2 - 4/9*x_0*x_1*x_4*x_5 - 1/9*x_0*x_1*x_5^2 + 2/9*x_0*x_2*x_3^2 + 1/3*x_0*x_2*x_3*x_4 - 1/9*x_0*x_2*x_3*x_5 + 2/9*x_0*x_2*x_4^2 - 4/9*x_0*x_3^3 + 2/9*x_0*x_3^2*x_4 - 2/9*x_0*x_3*x_4^2 - 1/9*x_0*x_4^3 + 2/9*x_1^3*x_3 - 2/9*x_1^3*x_5 + 1/9*x_1^2*x_2*x_3 - 1/9*x_1^2*x_2*x_5 + 2/9*x_1^2*x_4^2 + 2/9*x_1^2*x_4*x_5 - 4/9*x_1*x_3^2*x_4 - 1/9*x_1*x_4^2*x_5 - 1/9*x_1*x_4*x_5^2 + 1/9*x_2*x_3^2*x_4 + 2/9*x_2*x_3*x_4^2 - 1/9*x_2*x_3*x_5^2 + 1/9*x_2*x_4^3 - 1/3*x_3^4 - 1/9*x_3^3*x_4 + 2/9*x_3^2*x_4^2"),
    (0, 3, "-2/9*x_0^4 - 1/9*x_0^3*x_3 - 2/9*x_0^3*x_4 + 5/9*x_0^2*x_1^2 - 2/9*x_0^2*x_1*x_2 + 2/9*x_0^2*x_1*x_3 + 1/3*x_0^2*x_3^2 - 1/9*x_0^2*x_3*x_4 + 4/9*x_0*x_1^3 + 1/9*x_0*x_1^2*x_3 + 5/9*x_0*x_1^2*x_4 - 1/9*x_0*x_1*x_2*x_4 - 1/9*x_0*x_1*x_2*x_5 + 1/3*x_0*x_1*x_3^2 + 1/3*x_0*x_1*x_3*x_4 - 2/9*x_0*x_3*x_4^2 + 2/9*x_1^4 + 1/9*x_1^3*x_2 + 4/9*x_1^3*x_4 - 1/9*x_1^2*x_2*x_4 + 1/3*x_1^2*x_3^2 + 1/9*x_1^2*x_3*x_4 + 2/9*x_1^2*x_4^2 + 1/9*x_1*x_2*x_4*x_5"),
    (0, 4, "2/9*x_0^4 + 1/3*x_0^3*x_1 + 1/3*x_0^3*x_3 + 1/9*x_0^2*x_1*x_2 + 1/9*x_0^2*x_1*x_3 + 1/9*x_0^2*x_1*x_4 + 1/9*x_0^2*x_1*x_5 + 2/9*x_0*x_1*x_3*x_4 + 1/9*x_0*x_2*x_3*x_5 + 2/9*x_0*x_3^3 + 1/9*x_0*x_3^2*x_4 + 1/9*x_0*x_3*x_4^2 + 1/9*x_1^3*x_5 - 2/9*x_1^2*x_2*x_3 + 1/9*x_1^2*x_2*x_5 - 4/9*x_1^2*x_3^2 - 1/9*x_1*x_2*x_3*x_4 - 1/9*x_1*x_2*x_4^2 + 1/9*x_2*x_3*x_5^2 - 1/9*x_3^2*x_4^2 - 1/9*x_3*x_4^3"),
    (0, 5, "-1/9*x_0^3*x_1 - 1/9*x_0^2*x_1^2 + 1/9*x_0^2*x_1*x_2 + 1/9*x_0^2*x_1*x_4 + 2/9*x_0*x_1*x_2*x_3 - 1/9*x_0*x_2*x_3*x_4 - 1/9*x_0*x_4^2*x_5 - 1/9*x_0*x_4*x_5^2 - 1/9*x_1^3*x_2 + 1/9*x_1^3*x_4 + 1/9*x_1^2*x_2*x_3 + 1/9*x_1^2*x_2*x_4 - 1/9*x_1*x_2*x_3*x_4 - 1/9*x_1*x_2*x_4^2 - 1/9*x_2*x_3*x_4^2 + 1/9*x_4^2*x_5^2 + 1/9*x_4*x_5^3"),
];

// Degree-4 certificate for W_3 on the same template variables, hub x_0.
const W3_SEED: [(u32, u32, &str); 6] = [
    (1, 2, "-4/9*x_0*x_1^3 + 2/9*x_0*x_1^2*x_2 + 2/9*x_0*x_1^2*x_3 + 4/9*x_1^4 - 5/9*x_1^3*x_2 - 2/9*x_1^3*x_3"),
    (2, 3, "-1/9*x_0*x_1^3 - 2/9*x_0*x_1^2*x_2 + 1/9*x_1^4 + 2/9*x_1^3*x_2"),
    (0, 2, "1/3*x_1^3*x_2"),
    (1, 3, ALPHA13),
    (0, 1, "1/3*x_1^4"),
    (0, 3, "-1/3*x_1^4 - 1/3*x_1^3*x_2"),
];
const W3_SEED_VERTEX1: &str = "-x_1^3 - 1";

fn template(text: &str) -> Polynomial {
    text.parse().expect("template polynomial")
}

fn edge3(a: u32, b: u32) -> Polynomial {
    let (xa, xb) = (Polynomial::var(VarId::x(a)), Polynomial::var(VarId::x(b)));
    &(&(&xa * &xa) + &(&xa * &xb)) + &(&xb * &xb)
}

/// `−α₁₃ e₁₃ + α₁₃ e₁₅ + Σ β_ab e_ab` on the template variables; expands to 0.
pub fn odd_wheel_syzygy() -> Polynomial {
    let a = template(ALPHA13);
    let mut s = &(&a * &edge3(1, 5)) - &(&a * &edge3(1, 3));
    for (p, q, b) in BETA {
        s.add_assign_ref(&(&template(b) * &edge3(p, q)));
    }
    s
}

/// The degree-4 3-coloring certificate of `W_3 = K_4` (rim 1, 2, 3, hub 4)
/// that seeds [`extend_odd_wheel_certificate`].
pub fn w3_seed_certificate() -> Result<Certificate> {
    let to_w3 = rename_x(|v| if v == 0 { 4 } else { v });
    let mut pieces = vec![(template("x_1^3 - 1"), template(W3_SEED_VERTEX1))];
    for (p, q, c) in W3_SEED {
        pieces.push((edge3(p, q).rename(&to_w3), template(c).rename(&to_w3)));
    }
    assemble(encode_k_coloring(&odd_wheel(3)?, 3)?, pieces)
}

/// Turns a 3-coloring certificate of `W_n` (rim `1..n`, hub `n+1`) whose
/// coefficient on `e_{1,n}` is the template `α₁₃` into one for `W_{n+2}`.
pub fn extend_odd_wheel_certificate(cert: &Certificate, n: usize) -> Result<Certificate> {
    let old = odd_wheel(n)?;
    if coloring_k(&cert.system)? != 3 {
        return Err(Error::Precondition("odd-wheel extension needs a 3-coloring certificate".into()));
    }
    require_system(cert, &encode_k_coloring(&old, 3)?)?;
    let n = n as u32;
    let old_hub = rename_x(move |v| match v {
        0 => n + 1,
        3 => n,
        v => v,
    });
    let rim_end = edge3(1, n).to_canonical();
    let k = cert
        .system
        .generators
        .iter()
        .position(|g| g.expanded().to_canonical() == rim_end)
        .expect("rim edge present");
    if cert.coefficients[k] != template(ALPHA13).rename(&old_hub) {
        return Err(Error::Precondition(format!("coefficient of e_1,{n} is not the wheel template")));
    }

    let hub_move = rename_x(move |v| if v == n + 1 { n + 3 } else { v });
    let place = rename_x(move |v| match v {
        0 => n + 3,
        3 => n,
        4 => n + 1,
        5 => n + 2,
        v => v,
    });
    let mut pieces = Vec::new();
    for (idx, (gen, a)) in cert.system.generators.iter().zip(&cert.coefficients).enumerate() {
        if idx != k {
            pieces.push((gen.expanded().rename(&hub_move), a.rename(&hub_move)));
        }
    }
    pieces.push((edge3(1, 5).rename(&place), template(ALPHA13).rename(&place)));
    for (p, q, b) in BETA {
        pieces.push((edge3(p, q).rename(&place), template(b).rename(&place)));
    }
    assemble(encode_k_coloring(&odd_wheel(n as usize + 2)?, 3)?, pieces)
}
