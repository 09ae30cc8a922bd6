//! Exact arithmetic in `ℚ(ω)`, `ω = exp(2πi/k)`, represented modulo the
//! k-th cyclotomic polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::var::VarId;
use super::Rational;
use crate::error::Error;

/// Coefficients (constant term first) of the k-th cyclotomic polynomial,
/// obtained by dividing `x^k − 1` by `Φ_m` for every proper divisor `m | k`.
pub fn cyclotomic_polynomial(k: u32) -> Vec<BigInt> {
    assert!(k >= 1, "cyclotomic order must be positive");
    let mut num: Vec<BigInt> = vec![BigInt::zero(); k as usize + 1];
    num[0] = BigInt::from(-1);
    num[k as usize] = BigInt::one();
    for m in 1..k {
        if k % m == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(m));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()), "inexact cyclotomic division");
    q
}

/// An element of `ℚ(ω_k)` as its unique reduced representative
/// `Σ coords[j]·ω^j`, `j < deg Φ_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    order: u32,
    coords: Vec<Rational>,
}

impl CyclotomicValue {
    pub fn zero(order: u32) -> CyclotomicValue {
        let deg = cyclotomic_polynomial(order).len() - 1;
        CyclotomicValue { order, coords: vec![Rational::zero(); deg] }
    }

    /// `Σ coeffs[e]·ω^e` for arbitrary exponents `e`.
    pub fn from_power_coeffs(order: u32, coeffs: &[Rational]) -> CyclotomicValue {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        let k = order as usize;
        let mut a = vec![Rational::zero(); k.max(deg)];
        for (e, c) in coeffs.iter().enumerate() {
            a[e % k] += c;
        }
        for i in (deg..a.len()).rev() {
            let c = std::mem::take(&mut a[i]);
            if c.is_zero() {
                continue;
            }
            for (j, p) in phi.iter().enumerate().take(deg) {
                a[i - deg + j] -= &c * Rational::from_integer(p.clone());
            }
        }
        a.truncate(deg);
        CyclotomicValue { order, coords: a }
    }

    pub fn root_power(order: u32, e: u32) -> CyclotomicValue {
        let mut c = vec![Rational::zero(); order as usize];
        c[(e % order) as usize] = Rational::one();
        CyclotomicValue::from_power_coeffs(order, &c)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The value as a rational, if it lies in `ℚ`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn add(&self, other: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.order, other.order);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        CyclotomicValue { order: self.order, coords }
    }

    pub fn mul(&self, other: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.order, other.order);
        let mut prod = vec![Rational::zero(); self.order as usize];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                prod[(i + j) % self.order as usize] += a * b;
            }
        }
        CyclotomicValue::from_power_coeffs(self.order, &prod)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut p = Polynomial::zero();
        let w = VarId::new(super::var::Family::X, &[0]);
        for (j, c) in self.coords.iter().enumerate() {
            p.add_term(super::Monomial::var_pow(w, j as u32), c.clone());
        }
        // printed with `x_0` standing for ω
        write!(f, "{}", p.to_string().replace("x_0", "w"))
    }
}

impl fmt::Debug for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicValue(k={}, {})", self.order, self)
    }
}

/// Exact value of `p` at `x_v = ω_k^{assignment[v]}`.
pub fn eval_cyclotomic(
    p: &Polynomial,
    k: u32,
    assignment: &BTreeMap<VarId, u32>,
) -> Result<CyclotomicValue, Error> {
    assert!(k >= 1, "cyclotomic order must be positive");
    let mut acc = vec![Rational::zero(); k as usize];
    for (m, c) in p.terms() {
        let mut e: u64 = 0;
        for (v, x) in m.iter() {
            let a = assignment.get(&v).ok_or(Error::MissingAssignment(v))?;
            e += u64::from(*a) * u64::from(x);
        }
        acc[(e % u64::from(k)) as usize] += c;
    }
    Ok(CyclotomicValue::from_power_coeffs(k, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(7), ints(&[1; 7]));
    }

    fn assign(pairs: &[(u32, u32)]) -> BTreeMap<VarId, u32> {
        pairs.iter().map(|&(v, c)| (VarId::x(v), c)).collect()
    }

    #[test]
    fn eval_examples() {
        let p: Polynomial = "x_1^3 - 1".parse().unwrap();
        for c in 0..3 {
            assert!(eval_cyclotomic(&p, 3, &assign(&[(1, c)])).unwrap().is_zero());
        }
        let e: Polynomial = "x_1^2 + x_1*x_2 + x_2^2".parse().unwrap();
        let same = eval_cyclotomic(&e, 3, &assign(&[(1, 0), (2, 0)])).unwrap();
        assert_eq!(same.as_rational(), Some(Rational::from_integer(3.into())));
        assert!(eval_cyclotomic(&e, 3, &assign(&[(1, 0), (2, 1)])).unwrap().is_zero());
        assert!(matches!(
            eval_cyclotomic(&e, 3, &assign(&[(1, 0)])),
            Err(Error::MissingAssignment(_))
        ));
    }

    #[test]
    fn one_plus_omega_plus_omega_squared() {
        // 1 + ω + ω² computed by hand in the basis {1, ω}: ω² = −1 − ω
        let one = CyclotomicValue::root_power(3, 0);
        let w = CyclotomicValue::root_power(3, 1);
        let w2 = w.mul(&w);
        assert_eq!(
            w2.coords(),
            &[Rational::from_integer((-1).into()), Rational::from_integer((-1).into())]
        );
        assert!(one.add(&w).add(&w2).is_zero());
    }

    #[test]
    fn prime_order_kills_x_k_minus_1() {
        for k in [2u32, 3, 5, 7] {
            let p: Polynomial = format!("x_1^{k} - 1").parse().unwrap();
            for c in 0..k {
                assert!(eval_cyclotomic(&p, k, &assign(&[(1, c)])).unwrap().is_zero());
            }
        }
    }
}
