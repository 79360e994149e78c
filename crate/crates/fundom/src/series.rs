//! Two-variable generating series of the Poincare polynomials.
//!
//! The sum over all valuation pairs of the Poincare polynomial in `t` times
//! `T1^n1 T2^n2` is a rational function. This module carries both sides: a
//! closed rational expression as a sum of simple fractions, expandable to any
//! order, and the direct truncated sum, so the two can be checked against
//! each other coefficient by coefficient.

use crate::error::{Error, Result};
use crate::paving::closed_form_t;
use crate::poly::IntPolynomial;
use crate::weyl::RootValuation;

/// Truncated series in `T1, T2` with polynomial coefficients in `t`, keeping
/// every term of total degree at most `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    order: usize,
    grid: Vec<Vec<IntPolynomial>>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        BiSeries {
            order,
            grid: vec![vec![IntPolynomial::zero(); order + 1]; order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `T1^u1 T2^u2`; zero outside the truncation range.
    pub fn coefficient(&self, u1: usize, u2: usize) -> IntPolynomial {
        if u1 + u2 <= self.order {
            self.grid[u1][u2].clone()
        } else {
            IntPolynomial::zero()
        }
    }

    fn add(&mut self, other: &BiSeries) {
        for x in 0..=self.order {
            for y in 0..=self.order {
                self.grid[x][y] = &self.grid[x][y] + &other.grid[x][y];
            }
        }
    }

    fn truncate(&mut self) {
        for x in 0..=self.order {
            for y in 0..=self.order {
                if x + y > self.order {
                    self.grid[x][y] = IntPolynomial::zero();
                }
            }
        }
    }
}

/// A monomial `coeff * t^t_exp * T1^u1 * T2^u2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesMonomial {
    pub coeff: i64,
    pub t_exp: usize,
    pub u1: usize,
    pub u2: usize,
}

/// A denominator factor `1 - t^t_exp * T1^u1 * T2^u2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeometricFactor {
    pub t_exp: usize,
    pub u1: usize,
    pub u2: usize,
}

/// A single fraction: a polynomial numerator over a product of geometric
/// factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    pub numerator: Vec<SeriesMonomial>,
    pub denominator: Vec<GeometricFactor>,
}

impl Fraction {
    /// The fraction with the roles of `T1` and `T2` exchanged.
    pub fn mirror(&self) -> Fraction {
        Fraction {
            numerator: self
                .numerator
                .iter()
                .map(|m| SeriesMonomial {
                    coeff: m.coeff,
                    t_exp: m.t_exp,
                    u1: m.u2,
                    u2: m.u1,
                })
                .collect(),
            denominator: self
                .denominator
                .iter()
                .map(|g| GeometricFactor {
                    t_exp: g.t_exp,
                    u1: g.u2,
                    u2: g.u1,
                })
                .collect(),
        }
    }

    fn expand(&self, order: usize) -> Result<BiSeries> {
        let mut series = BiSeries::zero(order);
        for m in &self.numerator {
            if m.u1 <= order && m.u2 <= order {
                series.grid[m.u1][m.u2].add_monomial(m.coeff, m.t_exp);
            }
        }
        for g in &self.denominator {
            if g.u1 == 0 && g.u2 == 0 {
                return Err(Error::NonExpandableFactor);
            }
            for x in 0..=order {
                for y in 0..=order {
                    if x >= g.u1 && y >= g.u2 {
                        let prev = series.grid[x - g.u1][y - g.u2].clone();
                        series.grid[x][y].add_scaled_shifted(&prev, 1, g.t_exp);
                    }
                }
            }
        }
        series.truncate();
        Ok(series)
    }
}

/// A finite sum of fractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    pub fractions: Vec<Fraction>,
}

impl RationalFn {
    /// Expand every fraction and sum, truncated to total degree `order`.
    pub fn expand(&self, order: usize) -> Result<BiSeries> {
        let mut total = BiSeries::zero(order);
        for fraction in &self.fractions {
            total.add(&fraction.expand(order)?);
        }
        total.truncate();
        Ok(total)
    }
}

fn fraction(num: &[(i64, usize, usize, usize)], den: &[(usize, usize, usize)]) -> Fraction {
    Fraction {
        numerator: num
            .iter()
            .map(|&(coeff, t_exp, u1, u2)| SeriesMonomial {
                coeff,
                t_exp,
                u1,
                u2,
            })
            .collect(),
        denominator: den
            .iter()
            .map(|&(t_exp, u1, u2)| GeometricFactor { t_exp, u1, u2 })
            .collect(),
    }
}

/// The closed rational expression for the full two-variable Poincare series:
/// four fractions covering the sorted halfplane, their mirrors, and three
/// diagonal corrections compensating the double-counted diagonal.
pub fn poincare_generating() -> RationalFn {
    let halves = [
        fraction(
            &[(1, 2, 1, 1), (1, 0, 1, 1)],
            &[(0, 0, 1), (0, 1, 1), (4, 1, 1), (4, 1, 1)],
        ),
        fraction(
            &[(3, 4, 1, 2), (-1, 8, 2, 3)],
            &[(0, 0, 1), (2, 0, 1), (4, 1, 1), (4, 1, 1)],
        ),
        fraction(
            &[(4, 4, 1, 1)],
            &[(2, 0, 1), (4, 1, 1), (4, 1, 1), (6, 1, 1)],
        ),
        fraction(&[(1, 6, 1, 1)], &[(2, 0, 1), (6, 1, 1)]),
    ];
    let diagonal = [
        fraction(
            &[(-1, 2, 1, 1), (-1, 0, 1, 1)],
            &[(0, 1, 1), (4, 1, 1), (4, 1, 1)],
        ),
        fraction(&[(-4, 4, 1, 1)], &[(4, 1, 1), (4, 1, 1), (6, 1, 1)]),
        fraction(&[(-1, 6, 1, 1)], &[(6, 1, 1)]),
    ];
    let mut fractions: Vec<Fraction> = halves.to_vec();
    fractions.extend(halves.iter().map(Fraction::mirror));
    fractions.extend(diagonal);
    RationalFn { fractions }
}

/// The truncated series assembled directly from the closed-form Poincare
/// polynomials, one valuation pair at a time.
pub fn direct_series(order: usize) -> Result<BiSeries> {
    let mut series = BiSeries::zero(order);
    for n1 in 1..=order {
        for n2 in 1..=order.saturating_sub(n1) {
            let rv = RootValuation::new(vec![n1 as i64, n2 as i64])?;
            series.grid[n1][n2] = closed_form_t(&rv)?;
        }
    }
    Ok(series)
}

/// First coefficient where two series of equal order disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub u1: usize,
    pub u2: usize,
    pub left: IntPolynomial,
    pub right: IntPolynomial,
}

/// Compare two series coefficient by coefficient. `Ok(None)` means equal
/// through the shared order; orders must match.
pub fn compare(left: &BiSeries, right: &BiSeries) -> Result<Option<SeriesMismatch>> {
    if left.order != right.order {
        return Err(Error::OrderMismatch(left.order, right.order));
    }
    for total in 0..=left.order {
        for u1 in 0..=total {
            let u2 = total - u1;
            if left.grid[u1][u2] != right.grid[u1][u2] {
                return Ok(Some(SeriesMismatch {
                    u1,
                    u2,
                    left: left.grid[u1][u2].clone(),
                    right: right.grid[u1][u2].clone(),
                }));
            }
        }
    }
    Ok(None)
}
