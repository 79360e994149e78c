//! Orthogonal families of coweights indexed by the Borel subgroups containing
//! the diagonal torus, realized through their chamber permutations.
//!
//! A family attaches to each chamber `w` a coweight so that vertices of
//! adjacent chambers differ by a nonnegative multiple of the separating
//! coroot. The family of a regular class is the one whose polytope is the
//! fundamental domain; its vertex for `w` has, in slot `w(i)`, the sum of the
//! valuations pairing slot `w(i)` against the earlier slots `w(0..i)`.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::weyl::{Coweight, RootValuation, WeylElem};

type Rat = Ratio<i64>;

/// Vertex of the regular family at chamber `w`.
pub fn regular_vertex(rv: &RootValuation, w: &WeylElem) -> Result<Coweight> {
    let d = rv.rank();
    if w.rank() != d {
        return Err(Error::RankMismatch {
            expected: d,
            got: w.rank(),
        });
    }
    let mut coords = vec![0i64; d];
    for i in 1..d {
        let slot = w.image(i);
        coords[slot] = (0..i).map(|j| rv.pair(slot, w.image(j))).sum();
    }
    Ok(Coweight::new(coords))
}

/// A complete orthogonal family: one vertex per chamber, common level,
/// adjacent vertices differing by nonnegative multiples of coroots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalFamily {
    rank: usize,
    level: i64,
    vertices: BTreeMap<WeylElem, Coweight>,
}

impl OrthogonalFamily {
    pub fn new(vertices: BTreeMap<WeylElem, Coweight>) -> Result<Self> {
        let Some(first) = vertices.keys().next() else {
            return Err(Error::IncompleteFamily {
                expected: 2,
                got: 0,
            });
        };
        let d = first.rank();
        if d < 2 {
            return Err(Error::RankTooSmall(d));
        }
        let expected: usize = (1..=d).product();
        if vertices.len() != expected || vertices.keys().any(|w| w.rank() != d) {
            return Err(Error::IncompleteFamily {
                expected,
                got: vertices.len(),
            });
        }
        let level = vertices.values().next().unwrap().level();
        for v in vertices.values() {
            if v.rank() != d {
                return Err(Error::RankMismatch {
                    expected: d,
                    got: v.rank(),
                });
            }
            if v.level() != level {
                return Err(Error::MixedLevels);
            }
        }
        let family = Self {
            rank: d,
            level,
            vertices,
        };
        for w in family.vertices.keys() {
            for k in 0..d - 1 {
                let neighbor = neighbor_chamber(w, k);
                if *w < neighbor {
                    family.adjacency_constant_of(w, &neighbor, k)?;
                }
            }
        }
        Ok(family)
    }

    /// The family of a regular class with the given valuations.
    pub fn regular(rv: &RootValuation) -> Self {
        let vertices = WeylElem::all(rv.rank())
            .into_iter()
            .map(|w| {
                let v = regular_vertex(rv, &w).expect("ranks agree");
                (w, v)
            })
            .collect();
        Self::new(vertices).expect("regular family is orthogonal")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn vertex(&self, w: &WeylElem) -> Result<&Coweight> {
        self.vertices.get(w).ok_or(Error::RankMismatch {
            expected: self.rank,
            got: w.rank(),
        })
    }

    pub fn vertices(&self) -> &BTreeMap<WeylElem, Coweight> {
        &self.vertices
    }

    /// The coefficient `c >= 0` in `vertex(w) - vertex(w s_k) = c * coroot`,
    /// where the coroot is the one separating the two chambers, positive for
    /// `w`. For the regular family this equals the valuation of the
    /// separating root.
    pub fn adjacency_constant(&self, w: &WeylElem, k: usize) -> Result<i64> {
        if w.rank() != self.rank || k + 1 >= self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: w.rank().max(k + 2),
            });
        }
        self.adjacency_constant_of(w, &neighbor_chamber(w, k), k)
    }

    fn adjacency_constant_of(&self, w: &WeylElem, neighbor: &WeylElem, k: usize) -> Result<i64> {
        let vw = &self.vertices[w];
        let vn = &self.vertices[neighbor];
        let hi = w.image(k + 1);
        let lo = w.image(k);
        let diff: Vec<i64> = vw
            .coords()
            .iter()
            .zip(vn.coords())
            .map(|(a, b)| a - b)
            .collect();
        let c = diff[hi];
        let clean = c >= 0
            && diff[lo] == -c
            && diff
                .iter()
                .enumerate()
                .all(|(i, &v)| i == hi || i == lo || v == 0);
        if !clean {
            return Err(Error::OrthogonalityViolation {
                w: w.one_line(),
                neighbor: neighbor.one_line(),
                diff,
            });
        }
        Ok(c)
    }

    /// Half-space view of the family's polytope: one face per maximal
    /// parabolic direction.
    pub fn polytope(&self) -> LatticePolytopeView {
        let faces = MaximalParabolic::all(self.rank)
            .into_iter()
            .map(|p| {
                let functional = FaceFunctional::new(&p);
                let repr = self.vertices[&p.chamber()].clone();
                let threshold = functional.pair(&repr);
                (p, functional, threshold)
            })
            .collect();
        LatticePolytopeView { faces }
    }
}

fn neighbor_chamber(w: &WeylElem, k: usize) -> WeylElem {
    let mut images = w.images().to_vec();
    images.swap(k, k + 1);
    WeylElem::new(images).expect("swap keeps a permutation")
}

/// Ordered two-block decomposition `(block | complement)` of the coordinate
/// indices, the combinatorial label of a maximal parabolic subgroup
/// containing the torus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalParabolic {
    d: usize,
    block: Vec<usize>,
}

impl MaximalParabolic {
    pub fn new(d: usize, block: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut block: Vec<usize> = block.into_iter().collect();
        block.sort_unstable();
        block.dedup();
        if block.is_empty() || block.len() >= d || block.iter().any(|&i| i >= d) {
            return Err(Error::InvalidBlock(block));
        }
        Ok(Self { d, block })
    }

    /// All `2^d - 2` ordered decompositions, by block size then
    /// lexicographically.
    pub fn all(d: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (1..(1u32 << d) - 1)
            .map(|mask| Self {
                d,
                block: (0..d).filter(|i| mask >> i & 1 == 1).collect(),
            })
            .collect();
        out.sort_by_key(|p| (p.block.len(), p.block.clone()));
        out
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn block(&self) -> &[usize] {
        &self.block
    }

    pub fn complement(&self) -> Vec<usize> {
        (0..self.d).filter(|i| !self.block.contains(i)).collect()
    }

    /// The opposite decomposition `(complement | block)`.
    pub fn opposite(&self) -> Self {
        Self {
            d: self.d,
            block: self.complement(),
        }
    }

    /// Whether the chamber of `w` lies in this parabolic: every block index
    /// must come after every complement index in the image sequence of `w`.
    pub fn contains_chamber(&self, w: &WeylElem) -> bool {
        if w.rank() != self.d {
            return false;
        }
        let pos = w.inverse();
        let first_block = self.block.iter().map(|&a| pos.image(a)).min().unwrap();
        let last_comp = self
            .complement()
            .iter()
            .map(|&b| pos.image(b))
            .max()
            .unwrap();
        last_comp < first_block
    }

    /// A canonical chamber inside this parabolic: complement indices in
    /// increasing order, then block indices in increasing order.
    pub fn chamber(&self) -> WeylElem {
        let mut images = self.complement();
        images.extend_from_slice(&self.block);
        WeylElem::new(images).expect("blocks partition the indices")
    }

    /// 1-based label like `1|23`.
    pub fn label(&self) -> String {
        let side = |ix: &[usize]| -> String { ix.iter().map(|i| (i + 1).to_string()).collect() };
        format!("{}|{}", side(&self.block), side(&self.complement()))
    }
}

impl std::fmt::Display for MaximalParabolic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "P({})", self.label())
    }
}

/// The fundamental coweight functional of a maximal parabolic direction,
/// made level-relative: indicator of the block minus its density times the
/// level. It vanishes on the Levi's coroots and takes value 1 on every
/// coroot crossing from block to complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceFunctional {
    weights: Vec<Rat>,
}

impl FaceFunctional {
    pub fn new(p: &MaximalParabolic) -> Self {
        let d = p.rank();
        let density = Rat::new(p.block().len() as i64, d as i64);
        let weights = (0..d)
            .map(|i| {
                let indicator = if p.block().contains(&i) { 1 } else { 0 };
                Rat::from_integer(indicator) - density
            })
            .collect();
        Self { weights }
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn pair(&self, x: &Coweight) -> Rat {
        self.pair_slice(x.coords())
    }

    pub fn pair_slice(&self, xs: &[i64]) -> Rat {
        debug_assert_eq!(xs.len(), self.weights.len());
        xs.iter()
            .zip(&self.weights)
            .map(|(&x, w)| w * Rat::from_integer(x))
            .sum()
    }
}

/// Distance between the two opposite faces of the family's polytope in the
/// direction of `p`, measured by the face functional. For the regular family
/// this is the sum of the valuations of the roots crossing the
/// decomposition.
pub fn face_distance(fam: &OrthogonalFamily, p: &MaximalParabolic) -> Result<Rat> {
    if p.rank() != fam.rank() {
        return Err(Error::RankMismatch {
            expected: fam.rank(),
            got: p.rank(),
        });
    }
    let functional = FaceFunctional::new(p);
    let near = fam.vertex(&p.chamber())?;
    let far = fam.vertex(&p.opposite().chamber())?;
    Ok(functional.pair(near) - functional.pair(far))
}

/// Minuscule-type parameters of the two extreme Schubert cells bounding the
/// fundamental domain: the antidominant vertex and the dominance bound. Both
/// read off the sorted valuation vector; the i-th entry of the first is the
/// sum of the valuations pairing i with the earlier indices, the i-th entry
/// of the second pairs i with all other indices.
pub fn schubert_params(rv: &RootValuation) -> Result<(Coweight, Coweight)> {
    if !rv.is_sorted() {
        return Err(Error::UnsortedValuations(rv.simple_valuations().to_vec()));
    }
    let d = rv.rank();
    let n = rv.simple_valuations();
    let mut mu = vec![0i64; d];
    for i in 1..d {
        mu[i] = mu[i - 1] + n[i - 1];
    }
    let total = mu[d - 1];
    let mut lambda = vec![0i64; d];
    for i in 0..d - 1 {
        lambda[i] = mu[i] + (d - 1 - i) as i64 * n[i];
    }
    lambda[d - 1] = total;
    Ok((Coweight::new(mu), Coweight::new(lambda)))
}

/// Lattice membership in the rank 3 fundamental domain, in its box form:
/// coordinates nonnegative, first bounded by twice the smaller valuation,
/// the others by the valuation sum. Requires the exact level.
pub fn hexagon_membership(rv: &RootValuation, mu: &Coweight) -> Result<bool> {
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
    Ok(a >= 0 && b >= 0 && c >= 0 && a <= 2 * n1 && b <= n1 + n2 && c <= n1 + n2)
}

/// Intersection of half-spaces, one per maximal parabolic direction, cutting
/// out the family's polytope. Comparisons are level-relative, so membership
/// of a point means membership of its projection to the family's level
/// plane.
#[derive(Debug, Clone)]
pub struct LatticePolytopeView {
    faces: Vec<(MaximalParabolic, FaceFunctional, Rat)>,
}

impl LatticePolytopeView {
    pub fn contains(&self, x: &Coweight) -> bool {
        self.faces
            .iter()
            .all(|(_, functional, threshold)| functional.pair(x) <= *threshold)
    }

    pub fn faces(&self) -> &[(MaximalParabolic, FaceFunctional, Rat)] {
        &self.faces
    }
}
