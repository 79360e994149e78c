//! Stratification of the rank 3 coweight lattice by parabolic type.
//!
//! Every lattice point is assigned to exactly one stratum: the full group
//! (points of the hexagon itself), one of the six ordered maximal parabolics
//! (strips behind each face), or a Borel chamber (cones behind each vertex).
//! The assignment compares the point against a scaled copy of the regular
//! orthogonal family carrying a small level-zero perturbation that resolves
//! every boundary tie, so the whole test is exact integer arithmetic. Ties
//! resolve toward the lower-dimensional parabolic: the hexagon keeps its
//! boundary, strips keep their side walls, Borel cones are open along theirs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::{MaximalParabolic, OrthogonalFamily};
use crate::weyl::{Coweight, RootValuation, WeylElem};

/// Position weights of the tie-breaking perturbation, applied through each
/// chamber's image sequence. Increasing, summing to zero.
const TIE_BREAK: [i64; 3] = [-2, 0, 2];

/// Smallest admissible scale: one more than the largest perturbation
/// differential (12) entering any comparison.
pub const MIN_SCALE: i64 = 13;

/// Stratum label: the full group, a maximal parabolic, or a Borel chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParabolicLabel {
    Full,
    Maximal(MaximalParabolic),
    Borel(WeylElem),
}

impl ParabolicLabel {
    /// All thirteen rank 3 labels: the full group, then the six maximal
    /// parabolics, then the six chambers.
    pub fn all() -> Vec<ParabolicLabel> {
        let mut out = vec![ParabolicLabel::Full];
        out.extend(
            MaximalParabolic::all(3)
                .into_iter()
                .map(ParabolicLabel::Maximal),
        );
        out.extend(WeylElem::all(3).into_iter().map(ParabolicLabel::Borel));
        out
    }
}

impl std::fmt::Display for ParabolicLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParabolicLabel::Full => f.write_str("G"),
            ParabolicLabel::Maximal(p) => write!(f, "{p}"),
            ParabolicLabel::Borel(w) => write!(f, "B({w})"),
        }
    }
}

struct Classifier {
    vertices: Vec<(WeylElem, Vec<i64>)>,
    /// Each maximal parabolic with the indices into `vertices` of its two
    /// chambers.
    faces: Vec<(MaximalParabolic, usize, usize)>,
    max_abs: i64,
}

impl Classifier {
    fn new(rv: &RootValuation) -> Result<Self> {
        if rv.rank() != 3 {
            return Err(Error::RankNotThree(rv.rank()));
        }
        let family = OrthogonalFamily::regular(rv);
        let vertices: Vec<(WeylElem, Vec<i64>)> = family
            .vertices()
            .iter()
            .map(|(w, v)| (w.clone(), v.coords().to_vec()))
            .collect();
        let faces = MaximalParabolic::all(3)
            .into_iter()
            .map(|p| {
                let mut found = vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, (w, _))| p.contains_chamber(w))
                    .map(|(i, _)| i);
                let a = found.next().expect("two chambers per parabolic");
                let b = found.next().expect("two chambers per parabolic");
                (p, a, b)
            })
            .collect();
        let max_abs = vertices
            .iter()
            .flat_map(|(_, v)| v.iter())
            .map(|c| c.abs())
            .max()
            .unwrap_or(0);
        Ok(Classifier {
            vertices,
            faces,
            max_abs,
        })
    }

    fn default_scale(&self, mu: &Coweight) -> i64 {
        let m = mu
            .coords()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or(0)
            .max(self.max_abs);
        2 * 3 * (m + 1)
    }

    /// Level-zero projection tripled and scaled: `s * (3x - level * 1)`.
    fn project(coords: &[i64], scale: i64) -> [i64; 3] {
        let level: i64 = coords.iter().sum();
        [
            scale * (3 * coords[0] - level),
            scale * (3 * coords[1] - level),
            scale * (3 * coords[2] - level),
        ]
    }

    fn perturbed(&self, idx: usize, scale: i64) -> [i64; 3] {
        let (w, coords) = &self.vertices[idx];
        let mut out = Self::project(coords, scale);
        for (pos, weight) in TIE_BREAK.iter().enumerate() {
            out[w.image(pos)] += 3 * weight;
        }
        out
    }

    fn classify(&self, mu: &Coweight, scale: i64) -> Result<ParabolicLabel> {
        if mu.rank() != 3 {
            return Err(Error::RankMismatch {
                expected: 3,
                got: mu.rank(),
            });
        }
        let p = Self::project(mu.coords(), scale);
        let q: Vec<[i64; 3]> = (0..self.vertices.len())
            .map(|i| self.perturbed(i, scale))
            .collect();
        let block_sum =
            |v: &[i64; 3], block: &[usize]| -> i64 { block.iter().map(|&i| v[i]).sum() };

        let mut matches: Vec<ParabolicLabel> = Vec::new();

        let inside_all = self.faces.iter().all(|(par, c1, c2)| {
            let threshold = block_sum(&q[*c1], par.block());
            debug_assert_eq!(threshold, block_sum(&q[*c2], par.block()));
            block_sum(&p, par.block()) <= threshold
        });
        if inside_all {
            matches.push(ParabolicLabel::Full);
        }

        for (par, c1, c2) in &self.faces {
            let threshold = block_sum(&q[*c1], par.block());
            if block_sum(&p, par.block()) < threshold {
                continue;
            }
            let levi: Vec<usize> = if par.block().len() == 2 {
                par.block().to_vec()
            } else {
                par.complement()
            };
            let (i, j) = (levi[0], levi[1]);
            let dp = p[i] - p[j];
            let d1 = q[*c1][i] - q[*c1][j];
            let d2 = q[*c2][i] - q[*c2][j];
            if d1.min(d2) <= dp && dp <= d1.max(d2) {
                matches.push(ParabolicLabel::Maximal(par.clone()));
            }
        }

        for (idx, (w, _)) in self.vertices.iter().enumerate() {
            let qw = &q[idx];
            let cone = (0..3).all(|i| {
                (0..i).all(|j| {
                    let (x, y) = (w.image(i), w.image(j));
                    p[x] - p[y] >= qw[x] - qw[y]
                })
            });
            if cone {
                matches.push(ParabolicLabel::Borel(w.clone()));
            }
        }

        match matches.len() {
            1 => Ok(matches.pop().unwrap()),
            n => Err(Error::AmbiguousStratum {
                point: mu.coords().to_vec(),
                count: n,
            }),
        }
    }
}

/// Stratum of a rank 3 lattice point, with the scale chosen automatically.
pub fn ak_classify(rv: &RootValuation, mu: &Coweight) -> Result<ParabolicLabel> {
    let classifier = Classifier::new(rv)?;
    let scale = classifier.default_scale(mu);
    classifier.classify(mu, scale)
}

/// The scale [`ak_classify`] picks for a point: large enough that the
/// perturbation never flips an inequality between distinct rational walls.
pub fn default_scale(rv: &RootValuation, mu: &Coweight) -> Result<i64> {
    Ok(Classifier::new(rv)?.default_scale(mu))
}

/// Stratum of a rank 3 lattice point at an explicit scale. Any scale of at
/// least [`MIN_SCALE`] yields the same label.
pub fn ak_classify_with_scale(
    rv: &RootValuation,
    mu: &Coweight,
    scale: i64,
) -> Result<ParabolicLabel> {
    if scale < MIN_SCALE {
        return Err(Error::ScaleTooSmall {
            got: scale,
            min: MIN_SCALE,
        });
    }
    Classifier::new(rv)?.classify(mu, scale)
}

/// A rectangular slice of the coweight lattice: the points of one level with
/// all coordinates bounded in absolute value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub level: i64,
    pub max_abs: i64,
}

impl Window {
    /// Lattice points of the window, lexicographically sorted.
    pub fn points(&self) -> Vec<Coweight> {
        let m = self.max_abs;
        let mut out = Vec::new();
        for a in -m..=m {
            for b in -m..=m {
                let c = self.level - a - b;
                if c.abs() <= m {
                    out.push(Coweight::new(vec![a, b, c]));
                }
            }
        }
        out
    }
}

/// Classify every point of a window, building the family only once.
pub fn classify_window(
    rv: &RootValuation,
    window: &Window,
) -> Result<Vec<(Coweight, ParabolicLabel)>> {
    let classifier = Classifier::new(rv)?;
    window
        .points()
        .into_iter()
        .map(|mu| {
            let scale = classifier.default_scale(&mu);
            classifier.classify(&mu, scale).map(|label| (mu, label))
        })
        .collect()
}

/// Points of one stratum sharing a common image `nu`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSlice {
    pub nu: Vec<i64>,
    pub points: Vec<Coweight>,
}

/// Fixed points of one stratum inside a window, grouped by the stratum's
/// natural invariant: the level for the full group, the block and complement
/// sums for a maximal parabolic, the full coordinate vector for a chamber.
pub fn stratum_fixed_points(
    rv: &RootValuation,
    label: &ParabolicLabel,
    window: &Window,
) -> Result<Vec<StratumSlice>> {
    let mut groups: BTreeMap<Vec<i64>, Vec<Coweight>> = BTreeMap::new();
    for (mu, found) in classify_window(rv, window)? {
        if found != *label {
            continue;
        }
        let nu = match label {
            ParabolicLabel::Full => vec![mu.level()],
            ParabolicLabel::Maximal(p) => {
                let block: i64 = p.block().iter().map(|&i| mu.get(i)).sum();
                vec![block, mu.level() - block]
            }
            ParabolicLabel::Borel(_) => mu.coords().to_vec(),
        };
        groups.entry(nu).or_default().push(mu);
    }
    Ok(groups
        .into_iter()
        .map(|(nu, points)| StratumSlice { nu, points })
        .collect())
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

    fn maximal(block: &[usize]) -> ParabolicLabel {
        ParabolicLabel::Maximal(MaximalParabolic::new(3, block.iter().copied()).unwrap())
    }

    fn borel(line: &[usize]) -> ParabolicLabel {
        ParabolicLabel::Borel(WeylElem::from_one_line(line).unwrap())
    }

    #[test]
    fn full_stratum_examples() {
        assert_eq!(
            ak_classify(&rv(1, 2), &cw([2, 2, 0])).unwrap(),
            ParabolicLabel::Full
        );
        assert_eq!(
            ak_classify(&rv(1, 1), &cw([1, 1, 1])).unwrap(),
            ParabolicLabel::Full
        );
    }

    #[test]
    fn maximal_strip_and_wall() {
        let data = rv(1, 1);
        assert_eq!(ak_classify(&data, &cw([3, 0, 0])).unwrap(), maximal(&[0]));
        assert_eq!(ak_classify(&data, &cw([4, -1, 0])).unwrap(), maximal(&[0]));
        assert_eq!(ak_classify(&data, &cw([4, 0, -1])).unwrap(), maximal(&[0]));
        // one step off the cone wall lands in the chamber stratum
        assert_eq!(
            ak_classify(&data, &cw([10, -4, -3])).unwrap(),
            maximal(&[0])
        );
        assert_eq!(
            ak_classify(&data, &cw([10, -5, -2])).unwrap(),
            borel(&[2, 3, 1])
        );
    }

    #[test]
    fn full_stratum_is_the_hexagon() {
        for (n1, n2) in [(1i64, 1i64), (1, 2), (2, 1)] {
            let data = rv(n1, n2);
            let level = data.pair(0, 1) + data.pair(0, 2) + data.pair(1, 2);
            let window = Window {
                level,
                max_abs: 2 * (n1 + n2),
            };
            let bound = |i: usize| {
                (0..3)
                    .filter(|&j| j != i)
                    .map(|j| data.pair(i, j))
                    .sum::<i64>()
            };
            let bounds = [bound(0), bound(1), bound(2)];
            for mu in window.points() {
                let is_full = ak_classify(&data, &mu).unwrap() == ParabolicLabel::Full;
                let in_box = (0..3).all(|i| mu.get(i) >= 0 && mu.get(i) <= bounds[i]);
                assert_eq!(is_full, in_box, "point {:?}", mu.coords());
            }
        }
    }

    #[test]
    fn strip_window_enumeration() {
        let slices = stratum_fixed_points(
            &rv(1, 1),
            &maximal(&[0]),
            &Window {
                level: 3,
                max_abs: 4,
            },
        )
        .unwrap();
        assert_eq!(slices.len(), 2);
        assert_eq!(slices[0].nu, vec![3, 0]);
        assert_eq!(slices[0].points, vec![cw([3, 0, 0])]);
        assert_eq!(slices[1].nu, vec![4, -1]);
        assert_eq!(slices[1].points, vec![cw([4, -1, 0]), cw([4, 0, -1])]);
    }

    #[test]
    fn full_window_enumeration() {
        let slices = stratum_fixed_points(
            &rv(1, 1),
            &ParabolicLabel::Full,
            &Window {
                level: 3,
                max_abs: 4,
            },
        )
        .unwrap();
        assert_eq!(slices.len(), 1);
        assert_eq!(slices[0].nu, vec![3]);
        assert_eq!(slices[0].points.len(), 7);
    }

    #[test]
    fn borel_window_slices_are_singletons() {
        let slices = stratum_fixed_points(
            &rv(1, 1),
            &borel(&[3, 2, 1]),
            &Window {
                level: 3,
                max_abs: 4,
            },
        )
        .unwrap();
        assert!(!slices.is_empty());
        for slice in &slices {
            assert_eq!(slice.points.len(), 1);
            assert_eq!(slice.nu, slice.points[0].coords());
        }
    }

    #[test]
    fn every_window_point_gets_one_label() {
        for (n1, n2) in [(1i64, 2i64), (2, 1), (2, 2)] {
            let data = rv(n1, n2);
            let level = 2 * n1 + n2;
            for shift in [-1, 0, 2] {
                let window = Window {
                    level: level + shift,
                    max_abs: level + 3,
                };
                for mu in window.points() {
                    ak_classify(&data, &mu).unwrap();
                }
            }
        }
    }

    #[test]
    fn scale_stability() {
        let data = rv(1, 2);
        let window = Window {
            level: 4,
            max_abs: 6,
        };
        for mu in window.points() {
            let a = ak_classify(&data, &mu).unwrap();
            let b = ak_classify_with_scale(&data, &mu, 9973).unwrap();
            assert_eq!(a, b, "labels differ at {:?}", mu.coords());
        }
    }

    #[test]
    fn scale_too_small_is_rejected() {
        let err = ak_classify_with_scale(&rv(1, 1), &cw([1, 1, 1]), 12).unwrap_err();
        assert!(matches!(err, Error::ScaleTooSmall { got: 12, min } if min == MIN_SCALE));
        assert!(ak_classify_with_scale(&rv(1, 1), &cw([1, 1, 1]), MIN_SCALE).is_ok());
    }

    #[test]
    fn label_display_and_enumeration() {
        assert_eq!(ParabolicLabel::Full.to_string(), "G");
        assert_eq!(maximal(&[0]).to_string(), "P(1|23)");
        assert_eq!(borel(&[2, 3, 1]).to_string(), "B(231)");
        let all = ParabolicLabel::all();
        assert_eq!(all.len(), 13);
        assert_eq!(all[0], ParabolicLabel::Full);
        assert_eq!(all[1].to_string(), "P(1|23)");
        assert_eq!(all[12].to_string(), "B(321)");
    }

    #[test]
    fn rank_errors() {
        let bad = RootValuation::new(vec![1, 1, 1]).unwrap();
        assert!(matches!(
            ak_classify(&bad, &cw([1, 1, 1])),
            Err(Error::RankNotThree(4))
        ));
        assert!(matches!(
            ak_classify(&rv(1, 1), &Coweight::new(vec![1, 1])),
            Err(Error::RankMismatch { .. })
        ));
    }
}
