//! Dense univariate integer polynomials. Used for Poincare polynomials (in
//! `q` or, with exponents doubled, in `t`) and for series coefficients.

use std::ops::{Add, Mul, Sub};

/// A polynomial with `i64` coefficients; `coeffs[k]` is the coefficient of
/// the k-th power. Invariant: no trailing zeros, so the zero polynomial is
/// the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn monomial(coeff: i64, degree: usize) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `1 + x + ... + x^{len-1}`.
    pub fn geometric(len: usize) -> Self {
        Self {
            coeffs: vec![1; len],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `scale * x^shift * other` in place.
    pub fn add_scaled_shifted(&mut self, other: &Self, scale: i64, shift: usize) {
        if scale == 0 || other.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, 0);
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += scale * c;
        }
        self.trim();
    }

    pub fn add_monomial(&mut self, coeff: i64, degree: usize) {
        if coeff == 0 {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += coeff;
        self.trim();
    }

    /// Substitutes the variable by its `factor`-th power.
    pub fn stretch(&self, factor: usize) -> Self {
        assert!(factor >= 1);
        let mut coeffs = vec![0; self.coeffs.len().saturating_sub(1) * factor + 1];
        if self.is_zero() {
            return Self::zero();
        }
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k * factor] = c;
        }
        Self { coeffs }
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// Human-readable form like `1 + q + 4*q^2`.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let body = match k {
                0 => c.to_string(),
                1 if c == 1 => var.to_string(),
                1 if c == -1 => format!("-{var}"),
                1 => format!("{c}*{var}"),
                _ if c == 1 => format!("{var}^{k}"),
                _ if c == -1 => format!("-{var}^{k}"),
                _ => format!("{c}*{var}^{k}"),
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (i, part) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(part);
            } else if let Some(rest) = part.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(part);
            }
        }
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, 1, 0);
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, -1, 0);
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_trims_trailing_zeros() {
        let p = IntPolynomial::from_coeffs(vec![1, 2, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 2]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPolynomial::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::from_coeffs(vec![1, 1]);
        let q = IntPolynomial::from_coeffs(vec![-1, 1]);
        assert_eq!((&p * &q).coeffs(), &[-1, 0, 1]);
        assert_eq!((&p + &q).coeffs(), &[0, 2]);
        assert_eq!((&p - &p).coeffs(), &[] as &[i64]);
        let mut r = IntPolynomial::zero();
        r.add_scaled_shifted(&p, 3, 2);
        assert_eq!(r.coeffs(), &[0, 0, 3, 3]);
    }

    #[test]
    fn stretch_doubles_exponents() {
        let p = IntPolynomial::from_coeffs(vec![1, 1, 4, 1]);
        assert_eq!(p.stretch(2).coeffs(), &[1, 0, 1, 0, 4, 0, 1]);
        assert_eq!(IntPolynomial::zero().stretch(2), IntPolynomial::zero());
    }

    #[test]
    fn eval_counts_points() {
        let p = IntPolynomial::from_coeffs(vec![1, 1, 4, 1]);
        assert_eq!(p.eval(1), 7);
        assert_eq!(p.eval(2), 27);
    }

    #[test]
    fn display_forms() {
        let p = IntPolynomial::from_coeffs(vec![1, 1, 4, 1]);
        assert_eq!(p.display("q"), "1 + q + 4*q^2 + q^3");
        let m = IntPolynomial::from_coeffs(vec![0, -1, 0, 2]);
        assert_eq!(m.display("t"), "-t + 2*t^3");
        assert_eq!(IntPolynomial::zero().display("q"), "0");
    }

    #[test]
    fn geometric_series() {
        assert_eq!(IntPolynomial::geometric(3).coeffs(), &[1, 1, 1]);
        assert!(IntPolynomial::geometric(0).is_zero());
    }

    mod laws {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = IntPolynomial> {
            proptest::collection::vec(-50i64..=50, 0..8).prop_map(IntPolynomial::from_coeffs)
        }

        proptest! {
            #[test]
            fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
                prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            }

            #[test]
            fn eval_is_a_ring_map(a in poly(), b in poly(), x in -9i64..=9) {
                prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
                prop_assert_eq!((&a + &b).eval(x), a.eval(x) + b.eval(x));
            }

            #[test]
            fn stretch_commutes_with_multiplication(a in poly(), b in poly()) {
                prop_assert_eq!((&a * &b).stretch(2), &a.stretch(2) * &b.stretch(2));
            }
        }
    }
}
