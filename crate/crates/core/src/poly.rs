//! Sparse Laurent polynomials in one variable with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// `Σ c_e x^e` with `e ∈ ℤ`. Zero coefficients are never stored.
///
/// Jones polynomials are kept with exponents in quarter powers of `t`, so
/// the same type holds brackets in `A` and Jones polynomials in `t` without
/// fractions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coef: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coef: i64) {
        if coef == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coef;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Substitute `x -> x^k`.
    pub fn scale_exponents(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Substitute `x -> 1/x`.
    pub fn invert_variable(&self) -> Self {
        self.scale_exponents(-1)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Render with `var`, dividing exponents by `unit` (e.g. `unit = 4` for
    /// quarter powers of `t`). Non-integral exponents print as fractions.
    pub fn display_with(&self, var: &str, unit: i32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.unsigned_abs();
            let power = if e % unit == 0 {
                let k = e / unit;
                match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                }
            } else {
                let g = gcd(e.unsigned_abs(), unit.unsigned_abs()) as i32;
                format!("{var}^({}/{})", e / g, unit / g)
            };
            if power.is_empty() {
                out.push_str(&a.to_string());
            } else if a == 1 {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{a}*{power}"));
            }
        }
        out
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x", 1))
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((-8i32..8, -5i64..5), 0..6).prop_map(LaurentPolynomial::from_terms)
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = LaurentPolynomial::from_terms([(1, 2), (1, -2), (3, 1)]);
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(3, 1)]);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn delta_squared() {
        // (-A^2 - A^-2)^2 = A^4 + 2 + A^-4
        let d = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(d.pow(2), LaurentPolynomial::from_terms([(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn display() {
        let j = LaurentPolynomial::from_terms([(4, 1), (12, 1), (16, -1)]);
        assert_eq!(j.display_with("t", 4), "t + t^3 - t^4");
        let j = LaurentPolynomial::from_terms([(-8, 1), (-4, -1), (0, 1), (4, -1), (8, 1)]);
        assert_eq!(j.display_with("t", 4), "t^-2 - t^-1 + 1 - t + t^2");
        assert_eq!(LaurentPolynomial::monomial(-2, 3).display_with("t", 4), "3*t^(-1/2)");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
        }
    }
}
