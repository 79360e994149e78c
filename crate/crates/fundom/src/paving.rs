//! Affine paving of the rank 3 fundamental domain.
//!
//! Cells of the ambient Schubert variety are indexed by the lattice points of
//! a triangle; the fundamental domain occupies the hexagon inside it. The
//! Poincare polynomial is computed three independent ways: summing cell
//! dimensions point by point (with the complement contributions removed),
//! summing the per-region closed forms, and evaluating the closed formula.
//! All sorted inputs `n1 <= n2` describe the general case; the two Poincare
//! entry points accept unsorted data and normalize through the swap symmetry.

use crate::error::{Error, Result};
use crate::family::hexagon_membership;
use crate::poly::IntPolynomial;
use crate::weyl::{Coweight, RootValuation};

/// The seven regions cutting the Schubert triangle, mirror pairs marked with
/// a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangleRegion {
    R1,
    R1p,
    R2,
    R2p,
    R3,
    R4,
    R4p,
}

impl TriangleRegion {
    pub const ALL: [TriangleRegion; 7] = [
        TriangleRegion::R1,
        TriangleRegion::R1p,
        TriangleRegion::R2,
        TriangleRegion::R2p,
        TriangleRegion::R3,
        TriangleRegion::R4,
        TriangleRegion::R4p,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TriangleRegion::R1 => "R1",
            TriangleRegion::R1p => "R1p",
            TriangleRegion::R2 => "R2",
            TriangleRegion::R2p => "R2p",
            TriangleRegion::R3 => "R3",
            TriangleRegion::R4 => "R4",
            TriangleRegion::R4p => "R4p",
        }
    }
}

impl std::fmt::Display for TriangleRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The four regions covering the part of the triangle outside the hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComplementRegion {
    T1,
    T2,
    T3,
    T1p,
}

impl ComplementRegion {
    pub const ALL: [ComplementRegion; 4] = [
        ComplementRegion::T1,
        ComplementRegion::T2,
        ComplementRegion::T3,
        ComplementRegion::T1p,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ComplementRegion::T1 => "T1",
            ComplementRegion::T2 => "T2",
            ComplementRegion::T3 => "T3",
            ComplementRegion::T1p => "T1p",
        }
    }
}

impl std::fmt::Display for ComplementRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The four regions of the nonstandard cut of the hexagon itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VRegion {
    V1,
    V1p,
    V2,
    V3,
}

impl VRegion {
    pub const ALL: [VRegion; 4] = [VRegion::V1, VRegion::V1p, VRegion::V2, VRegion::V3];

    pub fn as_str(self) -> &'static str {
        match self {
            VRegion::V1 => "V1",
            VRegion::V1p => "V1p",
            VRegion::V2 => "V2",
            VRegion::V3 => "V3",
        }
    }
}

impl std::fmt::Display for VRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of classifying a hexagon point into the nonstandard cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VClassification {
    pub region: VRegion,
    /// True on the single point (present only when the larger valuation is
    /// four times the smaller) where the two mirror regions meet; it is
    /// assigned to V1 by convention.
    pub in_overlap: bool,
}

/// Offset exponent for a coordinate difference: `x` for `x >= 0`, `-x - 1`
/// for `x < 0`. A zero difference counts as the nonnegative side.
fn offset(x: i64) -> i64 {
    if x >= 0 {
        x
    } else {
        -x - 1
    }
}

fn checked_triangle(rv: &RootValuation, mu: &Coweight) -> Result<(i64, i64, i64)> {
    let (n1, n2) = rv.gl3_sorted()?;
    if mu.rank() != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            got: mu.rank(),
        });
    }
    let expected = 2 * n1 + n2;
    if mu.level() != expected {
        return Err(Error::WrongLevel {
            point: mu.coords().to_vec(),
            got: mu.level(),
            expected,
        });
    }
    let (a, b, c) = (mu.get(0), mu.get(1), mu.get(2));
    if a < 0 || b < 0 || c < 0 {
        return Err(Error::OutsideTriangle(mu.coords().to_vec()));
    }
    Ok((a, b, c))
}

/// Lattice points of the ambient Schubert triangle, lexicographically sorted.
pub fn triangle_points(rv: &RootValuation) -> Result<Vec<Coweight>> {
    let (n1, n2) = rv.gl3_sorted()?;
    let level = 2 * n1 + n2;
    let mut out = Vec::new();
    for a in 0..=level {
        for b in 0..=level - a {
            out.push(Coweight::new(vec![a, b, level - a - b]));
        }
    }
    Ok(out)
}

/// Dimension of the affine cell attached to a triangle point.
pub fn cell_dimension(rv: &RootValuation, mu: &Coweight) -> Result<i64> {
    let (n1, n2) = rv.gl3_sorted()?;
    let (_, b, c) = checked_triangle(rv, mu)?;
    Ok(n1.min(b) + n1.min(c) + n2.min(offset(b - c)))
}

/// The unique triangle region containing a triangle point.
pub fn triangle_region(rv: &RootValuation, mu: &Coweight) -> Result<TriangleRegion> {
    let (n1, n2) = rv.gl3_sorted()?;
    let (a, b, c) = checked_triangle(rv, mu)?;
    let d23 = b - c;
    let matches: Vec<TriangleRegion> = [
        (TriangleRegion::R1, d23 > n2),
        (TriangleRegion::R1p, -d23 > n2),
        (TriangleRegion::R2, d23 <= n2 && c < n1 && b > n1),
        (TriangleRegion::R2p, -d23 <= n2 && b < n1 && c > n1),
        (TriangleRegion::R3, b >= n1 && c >= n1),
        (
            TriangleRegion::R4,
            b <= n1 && c <= n1 && n2 < a && a <= n1 + n2,
        ),
        (
            TriangleRegion::R4p,
            b < n1 && c < n1 && n1 + n2 < a && a <= 2 * n1 + n2,
        ),
    ]
    .into_iter()
    .filter_map(|(region, hit)| hit.then_some(region))
    .collect();
    match matches.as_slice() {
        [region] => Ok(*region),
        _ => Err(Error::RegionCoverage {
            point: mu.coords().to_vec(),
            count: matches.len(),
        }),
    }
}

/// Triangle points belonging to one region, lexicographically sorted.
pub fn region_points(rv: &RootValuation, region: TriangleRegion) -> Result<Vec<Coweight>> {
    let mut out = Vec::new();
    for mu in triangle_points(rv)? {
        if triangle_region(rv, &mu)? == region {
            out.push(mu);
        }
    }
    Ok(out)
}

/// Sum of `q^dim` over the cells of one region, by enumeration.
pub fn region_sum_bruteforce(rv: &RootValuation, region: TriangleRegion) -> Result<IntPolynomial> {
    let mut sum = IntPolynomial::zero();
    for mu in region_points(rv, region)? {
        sum.add_monomial(1, cell_dimension(rv, &mu)? as usize);
    }
    Ok(sum)
}

/// Sum of `q^dim` over the cells of one region, in closed form.
pub fn region_sum_closed(rv: &RootValuation, region: TriangleRegion) -> Result<IntPolynomial> {
    let (n1, n2) = rv.gl3_sorted()?;
    let mut sum = IntPolynomial::zero();
    match region {
        TriangleRegion::R1 | TriangleRegion::R1p => {
            for i in 1..=n1 {
                sum.add_monomial(2 * i, (2 * n1 + n2 - i) as usize);
            }
        }
        TriangleRegion::R2 => {
            for i in 2 * n1 + 1..=n1 + n2 {
                sum.add_monomial(n1, i as usize);
            }
            for i in 1..=n1 - 1 {
                sum.add_monomial(n1 - i, (n1 + n2 + i) as usize);
            }
        }
        TriangleRegion::R2p => {
            for i in 2 * n1 + 1..=n1 + n2 {
                sum.add_monomial(n1, (i - 1) as usize);
            }
            for i in 1..=n1 - 1 {
                sum.add_monomial(n1 - i, (n1 + n2 + i - 1) as usize);
            }
        }
        TriangleRegion::R3 => {
            for i in 0..=n2 {
                sum.add_monomial(n2 + 1 - i, (2 * n1 + i) as usize);
            }
        }
        TriangleRegion::R4 => {
            sum.add_monomial(n1, (2 * n1) as usize);
            for i in 0..=n1 - 1 {
                sum.add_monomial(i + 1, (n1 + i) as usize);
            }
        }
        TriangleRegion::R4p => {
            for i in 0..=n1 - 1 {
                sum.add_scaled_shifted(&IntPolynomial::geometric(i as usize + 1), 1, i as usize);
            }
        }
    }
    Ok(sum)
}

/// Complement region of a triangle point, `None` for hexagon members.
// the predicates stay in the exact form the closed sums are indexed by
#[allow(clippy::int_plus_one)]
pub fn complement_region(rv: &RootValuation, mu: &Coweight) -> Result<Option<ComplementRegion>> {
    let (n1, n2) = rv.gl3_sorted()?;
    let (a, b, c) = checked_triangle(rv, mu)?;
    let matches: Vec<ComplementRegion> = [
        (ComplementRegion::T1, a >= n1 + n2 + 1),
        (ComplementRegion::T2, b >= n1 + n2 + 1),
        (ComplementRegion::T3, c >= n1 + n2 + 1),
        (ComplementRegion::T1p, 2 * n1 + 1 <= a && a <= n1 + n2),
    ]
    .into_iter()
    .filter_map(|(region, hit)| hit.then_some(region))
    .collect();
    if hexagon_membership(rv, mu)? {
        return if matches.is_empty() {
            Ok(None)
        } else {
            Err(Error::RegionCoverage {
                point: mu.coords().to_vec(),
                count: matches.len(),
            })
        };
    }
    match matches.as_slice() {
        [region] => Ok(Some(*region)),
        _ => Err(Error::RegionCoverage {
            point: mu.coords().to_vec(),
            count: matches.len(),
        }),
    }
}

fn complement_exponent(rv: &RootValuation, mu: &Coweight, region: ComplementRegion) -> i64 {
    let (n1, n2) = rv.gl3_sorted().expect("checked by callers");
    let (_, b, c) = (mu.get(0), mu.get(1), mu.get(2));
    match region {
        ComplementRegion::T1 | ComplementRegion::T1p => 2 * n1 + offset(b - c),
        ComplementRegion::T2 => n1 + n2 + c,
        ComplementRegion::T3 => n1 + n2 + b,
    }
}

/// Triangle points belonging to one complement region, sorted.
pub fn complement_points(rv: &RootValuation, region: ComplementRegion) -> Result<Vec<Coweight>> {
    let mut out = Vec::new();
    for mu in triangle_points(rv)? {
        if complement_region(rv, &mu)? == Some(region) {
            out.push(mu);
        }
    }
    Ok(out)
}

/// Overcount carried by one complement region, by enumeration.
pub fn complement_sum_bruteforce(
    rv: &RootValuation,
    region: ComplementRegion,
) -> Result<IntPolynomial> {
    let mut sum = IntPolynomial::zero();
    for mu in complement_points(rv, region)? {
        sum.add_monomial(1, complement_exponent(rv, &mu, region) as usize);
    }
    Ok(sum)
}

/// Overcount carried by one complement region, in closed form.
pub fn complement_sum_closed(
    rv: &RootValuation,
    region: ComplementRegion,
) -> Result<IntPolynomial> {
    let (n1, n2) = rv.gl3_sorted()?;
    let mut sum = IntPolynomial::zero();
    match region {
        ComplementRegion::T1 => {
            for i in 0..=n1 - 1 {
                sum.add_scaled_shifted(
                    &IntPolynomial::geometric(i as usize + 1),
                    1,
                    (2 * n1) as usize,
                );
            }
        }
        ComplementRegion::T2 | ComplementRegion::T3 => {
            for i in 1..=n1 {
                sum.add_monomial(i, (2 * n1 + n2 - i) as usize);
            }
        }
        ComplementRegion::T1p => {
            for i in n1..=n2 - 1 {
                sum.add_scaled_shifted(
                    &IntPolynomial::geometric(i as usize + 1),
                    1,
                    (2 * n1) as usize,
                );
            }
        }
    }
    Ok(sum)
}

/// Torus fixed points of the fundamental domain (the hexagon's lattice
/// points), lexicographically sorted.
pub fn fundamental_fixed_points(rv: &RootValuation) -> Result<Vec<Coweight>> {
    let (n1, n2) = rv.gl3_sorted()?;
    let level = 2 * n1 + n2;
    let mut out = Vec::new();
    for a in 0..=2 * n1 {
        let rest = level - a;
        let b_min = (rest - (n1 + n2)).max(0);
        let b_max = (n1 + n2).min(rest);
        for b in b_min..=b_max {
            out.push(Coweight::new(vec![a, b, rest - b]));
        }
    }
    Ok(out)
}

/// The nonstandard-cut region of a hexagon point.
///
/// The two mirror regions V1 and V1' may share one point, assigned to V1 and
/// flagged. Ties between the V2 and V3 comparisons (possible only with equal
/// second and third coordinates) are assigned to V3.
pub fn v_region(rv: &RootValuation, mu: &Coweight) -> Result<VClassification> {
    let (n1, n2) = rv.gl3_sorted()?;
    if !hexagon_membership(rv, mu)? {
        return Err(Error::OutsideDomain(mu.coords().to_vec()));
    }
    let (a, b, c) = (mu.get(0), mu.get(1), mu.get(2));
    let (p1, p2, p3) = (a - n1, b - n2, c - n2);
    let v1 = p1 <= p2 && p1 <= p3;
    let v1p = p1 >= p2 && p1 >= p3 && b <= n2 - n1 && c <= n2 - n1;
    let v2 = p2 < p1 && p2 < p3 && c > n2 - n1;
    let v3 = p3 < p1 && p3 < p2 && b > n2 - n1;
    let hits = usize::from(v1) + usize::from(v1p) + usize::from(v2) + usize::from(v3);
    match (v1, v1p, v2, v3) {
        (true, true, false, false) => Ok(VClassification {
            region: VRegion::V1,
            in_overlap: true,
        }),
        (true, false, false, false) => Ok(VClassification {
            region: VRegion::V1,
            in_overlap: false,
        }),
        (false, true, false, false) => Ok(VClassification {
            region: VRegion::V1p,
            in_overlap: false,
        }),
        (false, false, true, false) => Ok(VClassification {
            region: VRegion::V2,
            in_overlap: false,
        }),
        (false, false, false, true) => Ok(VClassification {
            region: VRegion::V3,
            in_overlap: false,
        }),
        (false, false, false, false) if p2 == p3 && p3 < p1 && b > n2 - n1 => Ok(VClassification {
            region: VRegion::V3,
            in_overlap: false,
        }),
        _ => Err(Error::RegionCoverage {
            point: mu.coords().to_vec(),
            count: hits,
        }),
    }
}

fn sorted_gl3(rv: &RootValuation) -> Result<RootValuation> {
    let (n1, n2) = rv.gl3()?;
    if n1 <= n2 {
        Ok(rv.clone())
    } else {
        RootValuation::new(vec![n2, n1])
    }
}

/// Poincare polynomial in `q` by the enumeration pipeline: every triangle
/// cell contributes its dimension, then the complement overcounts are
/// removed region by region. Unsorted valuations are normalized by the swap
/// symmetry.
pub fn poincare_pipeline(rv: &RootValuation) -> Result<IntPolynomial> {
    let rv = sorted_gl3(rv)?;
    let mut sum = IntPolynomial::zero();
    for mu in triangle_points(&rv)? {
        sum.add_monomial(1, cell_dimension(&rv, &mu)? as usize);
        if let Some(region) = complement_region(&rv, &mu)? {
            sum.add_monomial(-1, complement_exponent(&rv, &mu, region) as usize);
        }
    }
    Ok(sum)
}

/// Poincare polynomial in `q` by the closed formula. Unsorted valuations are
/// normalized by the swap symmetry.
pub fn closed_form(rv: &RootValuation) -> Result<IntPolynomial> {
    let (n1, n2) = sorted_gl3(rv)?.gl3_sorted()?;
    let mut sum = IntPolynomial::zero();
    for i in 1..=n1 {
        sum.add_monomial(i, (2 * i - 1) as usize);
        sum.add_monomial(i, (2 * i - 2) as usize);
    }
    for i in 2 * n1..=n1 + n2 - 1 {
        sum.add_monomial(2 * n1 + 1, i as usize);
    }
    for i in n1 + n2..=2 * n1 + n2 - 1 {
        sum.add_monomial(4 * (2 * n1 + n2 - i), i as usize);
    }
    sum.add_monomial(1, (2 * n1 + n2) as usize);
    Ok(sum)
}

/// Poincare polynomial in the topological variable `t` (exponents doubled).
pub fn closed_form_t(rv: &RootValuation) -> Result<IntPolynomial> {
    Ok(closed_form(rv)?.stretch(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(n1: i64, n2: i64) -> RootValuation {
        RootValuation::new(vec![n1, n2]).unwrap()
    }

    fn cw(c: [i64; 3]) -> Coweight {
        Coweight::new(c.to_vec())
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn cell_dimensions_spot_values() {
        let data = rv(1, 2);
        assert_eq!(cell_dimension(&data, &cw([4, 0, 0])).unwrap(), 0);
        assert_eq!(cell_dimension(&data, &cw([0, 4, 0])).unwrap(), 3);
        assert_eq!(cell_dimension(&data, &cw([0, 3, 1])).unwrap(), 4);
        assert_eq!(cell_dimension(&data, &cw([0, 0, 4])).unwrap(), 3);
        assert_eq!(cell_dimension(&data, &cw([2, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn cell_dimension_rejects_bad_points() {
        let data = rv(1, 2);
        assert!(matches!(
            cell_dimension(&data, &cw([1, 1, 1])),
            Err(Error::WrongLevel { .. })
        ));
        assert!(matches!(
            cell_dimension(&data, &cw([5, -1, 0])),
            Err(Error::OutsideTriangle(_))
        ));
        assert!(matches!(
            cell_dimension(&rv(2, 1), &cw([2, 1, 1])),
            Err(Error::UnsortedValuations(_))
        ));
    }

    #[test]
    fn triangle_point_count() {
        for (n1, n2) in [(1i64, 1i64), (1, 2), (2, 3)] {
            let level = 2 * n1 + n2;
            let expected = ((level + 1) * (level + 2) / 2) as usize;
            assert_eq!(triangle_points(&rv(n1, n2)).unwrap().len(), expected);
        }
    }

    #[test]
    fn region_examples() {
        let data = rv(1, 2);
        assert_eq!(
            triangle_region(&data, &cw([0, 4, 0])).unwrap(),
            TriangleRegion::R1
        );
        assert_eq!(
            triangle_region(&data, &cw([1, 2, 1])).unwrap(),
            TriangleRegion::R3
        );
        assert_eq!(
            triangle_region(&data, &cw([4, 0, 0])).unwrap(),
            TriangleRegion::R4p
        );
        assert_eq!(
            triangle_region(&data, &cw([3, 1, 0])).unwrap(),
            TriangleRegion::R4
        );
    }

    #[test]
    fn region_sums_for_one_two() {
        let data = rv(1, 2);
        let expect = [
            (TriangleRegion::R1, vec![0, 0, 0, 2]),
            (TriangleRegion::R1p, vec![0, 0, 0, 2]),
            (TriangleRegion::R2, vec![0, 0, 0, 1]),
            (TriangleRegion::R2p, vec![0, 0, 1]),
            (TriangleRegion::R3, vec![0, 0, 3, 2, 1]),
            (TriangleRegion::R4, vec![0, 1, 1]),
            (TriangleRegion::R4p, vec![1]),
        ];
        for (region, coeffs) in expect {
            let closed = region_sum_closed(&data, region).unwrap();
            let brute = region_sum_bruteforce(&data, region).unwrap();
            assert_eq!(closed, poly(&coeffs), "closed sum for {region}");
            assert_eq!(brute, closed, "brute vs closed for {region}");
        }
    }

    #[test]
    fn region_cells_for_r3_one_two() {
        let data = rv(1, 2);
        let points = region_points(&data, TriangleRegion::R3).unwrap();
        assert_eq!(points.len(), 6);
        let dims: Vec<i64> = points
            .iter()
            .map(|mu| cell_dimension(&data, mu).unwrap())
            .collect();
        let mut sorted = dims.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, [2, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn complement_examples() {
        let data = rv(1, 2);
        assert_eq!(
            complement_region(&data, &cw([4, 0, 0])).unwrap(),
            Some(ComplementRegion::T1)
        );
        assert_eq!(
            complement_region(&data, &cw([3, 1, 0])).unwrap(),
            Some(ComplementRegion::T1p)
        );
        assert_eq!(
            complement_region(&data, &cw([0, 4, 0])).unwrap(),
            Some(ComplementRegion::T2)
        );
        assert_eq!(
            complement_region(&data, &cw([0, 0, 4])).unwrap(),
            Some(ComplementRegion::T3)
        );
        assert_eq!(complement_region(&data, &cw([2, 2, 0])).unwrap(), None);
    }

    #[test]
    fn complement_sums_for_one_two() {
        let data = rv(1, 2);
        let expect = [
            (ComplementRegion::T1, vec![0, 0, 1]),
            (ComplementRegion::T2, vec![0, 0, 0, 1]),
            (ComplementRegion::T3, vec![0, 0, 0, 1]),
            (ComplementRegion::T1p, vec![0, 0, 1, 1]),
        ];
        for (region, coeffs) in expect {
            let closed = complement_sum_closed(&data, region).unwrap();
            let brute = complement_sum_bruteforce(&data, region).unwrap();
            assert_eq!(closed, poly(&coeffs), "closed sum for {region}");
            assert_eq!(brute, closed, "brute vs closed for {region}");
        }
    }

    #[test]
    fn complement_empty_prime_region_when_equal() {
        let data = rv(1, 1);
        assert!(complement_sum_closed(&data, ComplementRegion::T1p)
            .unwrap()
            .is_zero());
        assert!(complement_points(&data, ComplementRegion::T1p)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn fixed_points_enumeration() {
        let pts = fundamental_fixed_points(&rv(1, 1)).unwrap();
        let coords: Vec<&[i64]> = pts.iter().map(|p| p.coords()).collect();
        assert_eq!(
            coords,
            [
                &[0, 1, 2][..],
                &[0, 2, 1],
                &[1, 0, 2],
                &[1, 1, 1],
                &[1, 2, 0],
                &[2, 0, 1],
                &[2, 1, 0],
            ]
        );
        assert_eq!(fundamental_fixed_points(&rv(1, 2)).unwrap().len(), 10);
        assert_eq!(fundamental_fixed_points(&rv(2, 2)).unwrap().len(), 19);
    }

    #[test]
    fn fixed_points_match_membership() {
        for (n1, n2) in [(1i64, 1i64), (1, 2), (2, 3), (1, 4)] {
            let data = rv(n1, n2);
            let from_box: Vec<Coweight> = triangle_points(&data)
                .unwrap()
                .into_iter()
                .filter(|mu| hexagon_membership(&data, mu).unwrap())
                .collect();
            assert_eq!(fundamental_fixed_points(&data).unwrap(), from_box);
        }
    }

    #[test]
    fn v_region_examples() {
        assert_eq!(
            v_region(&rv(1, 1), &cw([0, 2, 1])).unwrap().region,
            VRegion::V1
        );
        assert_eq!(
            v_region(&rv(1, 1), &cw([2, 1, 0])).unwrap().region,
            VRegion::V3
        );
        assert_eq!(
            v_region(&rv(1, 2), &cw([2, 2, 0])).unwrap().region,
            VRegion::V3
        );
        assert_eq!(
            v_region(&rv(1, 2), &cw([2, 0, 2])).unwrap().region,
            VRegion::V2
        );
        assert!(matches!(
            v_region(&rv(1, 2), &cw([4, 0, 0])),
            Err(Error::OutsideDomain(_))
        ));
    }

    #[test]
    fn v_region_tie_points_go_to_v3() {
        // equal second and third coordinates strictly below the first shifted
        // coordinate, past the mirror threshold
        let data = rv(2, 2);
        let report = v_region(&data, &cw([4, 1, 1])).unwrap();
        assert_eq!(report.region, VRegion::V3);
        assert!(!report.in_overlap);
        let data = rv(2, 3);
        let report = v_region(&data, &cw([3, 2, 2])).unwrap();
        assert_eq!(report.region, VRegion::V3);
    }

    #[test]
    fn v_region_overlap_point() {
        // the mirror regions V1 and V1' meet exactly when n2 = 4 n1
        let data = rv(1, 4);
        let report = v_region(&data, &cw([0, 3, 3])).unwrap();
        assert_eq!(report.region, VRegion::V1);
        assert!(report.in_overlap);
        let mut overlaps = 0;
        for mu in fundamental_fixed_points(&data).unwrap() {
            if v_region(&data, &mu).unwrap().in_overlap {
                overlaps += 1;
            }
        }
        assert_eq!(overlaps, 1);
    }

    #[test]
    fn poincare_small_cases() {
        assert_eq!(closed_form(&rv(1, 1)).unwrap(), poly(&[1, 1, 4, 1]));
        assert_eq!(closed_form(&rv(1, 2)).unwrap(), poly(&[1, 1, 3, 4, 1]));
        assert_eq!(
            closed_form(&rv(2, 2)).unwrap(),
            poly(&[1, 1, 2, 2, 8, 4, 1])
        );
        assert_eq!(
            closed_form_t(&rv(1, 1)).unwrap(),
            poly(&[1, 0, 1, 0, 4, 0, 1])
        );
    }

    #[test]
    fn pipeline_matches_closed_form_small() {
        for (n1, n2) in [(1i64, 1i64), (1, 2), (2, 2), (2, 3), (1, 4), (3, 5)] {
            let data = rv(n1, n2);
            assert_eq!(
                poincare_pipeline(&data).unwrap(),
                closed_form(&data).unwrap(),
                "pipeline vs closed at ({n1}, {n2})"
            );
        }
    }

    #[test]
    fn swap_symmetry_normalization() {
        assert_eq!(
            closed_form(&rv(2, 1)).unwrap(),
            closed_form(&rv(1, 2)).unwrap()
        );
        assert_eq!(
            poincare_pipeline(&rv(3, 1)).unwrap(),
            poincare_pipeline(&rv(1, 3)).unwrap()
        );
    }

    #[test]
    fn euler_characteristic_counts_fixed_points() {
        for (n1, n2) in [(1i64, 1i64), (1, 2), (2, 2), (2, 3)] {
            let data = rv(n1, n2);
            let euler = closed_form(&data).unwrap().eval(1);
            let count = fundamental_fixed_points(&data).unwrap().len() as i64;
            assert_eq!(euler, count);
        }
    }

    #[test]
    fn triangle_sum_counts_all_points() {
        let data = rv(1, 2);
        let mut total = IntPolynomial::zero();
        for region in TriangleRegion::ALL {
            total = &total + &region_sum_bruteforce(&data, region).unwrap();
        }
        assert_eq!(total, poly(&[1, 1, 5, 7, 1]));
        assert_eq!(total.eval(1), 15);
    }
}
