//! Coweight lattice of the diagonal torus of GL(d), the Weyl group acting on
//! it, and root valuation data in minimal form.
//!
//! A regular semisimple conjugacy class is recorded by the valuations
//! `n_1, ..., n_{d-1}` of its simple root values. Valuations of the remaining
//! roots are determined by the ultrametric minimum rule, so the full symmetric
//! valuation matrix is derived data.

use std::fmt;

use crate::error::{Error, Result};

/// Simple root valuations `n_i = val(alpha_{i,i+1}(gamma))` in minimal form.
/// Entries are at least 1, indices zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootValuation {
    simple: Vec<i64>,
}

impl RootValuation {
    pub fn new(simple: Vec<i64>) -> Result<Self> {
        if simple.is_empty() {
            return Err(Error::RankTooSmall(1));
        }
        for (index, &value) in simple.iter().enumerate() {
            if value < 1 {
                return Err(Error::NonPositiveValuation { index, value });
            }
        }
        Ok(Self { simple })
    }

    /// Rank `d` of the group, one more than the number of simple roots.
    pub fn rank(&self) -> usize {
        self.simple.len() + 1
    }

    pub fn simple_valuations(&self) -> &[i64] {
        &self.simple
    }

    /// Valuation of `alpha_{ij}(gamma)` for `i != j` (zero-based): the minimum
    /// of the simple valuations separating `i` from `j`.
    pub fn pair(&self, i: usize, j: usize) -> i64 {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        debug_assert!(lo < hi && hi < self.rank());
        self.simple[lo..hi].iter().copied().min().unwrap()
    }

    /// Full symmetric valuation matrix. Diagonal entries are padding zeros;
    /// only off-diagonal entries carry meaning.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let d = self.rank();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { 0 } else { self.pair(i, j) })
                    .collect()
            })
            .collect()
    }

    pub fn is_sorted(&self) -> bool {
        self.simple.windows(2).all(|w| w[0] <= w[1])
    }

    /// The two simple valuations of a rank 3 datum, checked sorted.
    pub(crate) fn gl3_sorted(&self) -> Result<(i64, i64)> {
        if self.rank() != 3 {
            return Err(Error::RankNotThree(self.rank()));
        }
        if !self.is_sorted() {
            return Err(Error::UnsortedValuations(self.simple.clone()));
        }
        Ok((self.simple[0], self.simple[1]))
    }

    pub(crate) fn gl3(&self) -> Result<(i64, i64)> {
        if self.rank() != 3 {
            return Err(Error::RankNotThree(self.rank()));
        }
        Ok((self.simple[0], self.simple[1]))
    }
}

/// A point of the coweight lattice of the diagonal torus, i.e. an integer
/// vector of length `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    coords: Vec<i64>,
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    /// Coordinate sum, the image under the determinant cocharacter.
    pub fn level(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for Coweight {
    fn from(coords: Vec<i64>) -> Self {
        Self::new(coords)
    }
}

/// An element of the Weyl group `S_d`, stored as zero-based images:
/// `images[i]` is where coordinate slot `i` is sent.
///
/// The action on coweights permutes coordinates by `(w x)_{w(i)} = x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElem {
    images: Vec<usize>,
}

impl WeylElem {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &v in &images {
            if v >= d || seen[v] {
                return Err(Error::InvalidPermutation(images.clone(), d));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// Builds from one-line notation with 1-based values.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        let images: Vec<usize> = line.iter().map(|&v| v.wrapping_sub(1)).collect();
        Self::new(images)
    }

    pub fn identity(d: usize) -> Self {
        Self {
            images: (0..d).collect(),
        }
    }

    /// The adjacent transposition swapping slots `k` and `k + 1`, zero-based.
    pub fn adjacent_transposition(d: usize, k: usize) -> Result<Self> {
        if k + 1 >= d {
            return Err(Error::RankMismatch {
                expected: d,
                got: k + 2,
            });
        }
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(k, k + 1);
        Ok(Self { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Self { images }
    }

    /// Composition `self . other`, applying `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    /// All of `S_d` in lexicographic order of the image sequence.
    pub fn all(d: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..d).collect();
        loop {
            out.push(Self {
                images: images.clone(),
            });
            // next_permutation on images
            let Some(i) = (0..d.saturating_sub(1)).rfind(|&i| images[i] < images[i + 1]) else {
                break;
            };
            let j = (i + 1..d).rfind(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }

    pub(crate) fn permute(&self, xs: &[i64]) -> Vec<i64> {
        let mut out = vec![0; xs.len()];
        for (i, &x) in xs.iter().enumerate() {
            out[self.images[i]] = x;
        }
        out
    }

    /// Action on a coweight by coordinate permutation. The level is preserved.
    pub fn apply(&self, x: &Coweight) -> Result<Coweight> {
        if self.rank() != x.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: x.rank(),
            });
        }
        Ok(Coweight::new(self.permute(x.coords())))
    }

    /// One-line notation with 1-based values, e.g. "231".
    pub fn one_line(&self) -> String {
        self.images.iter().map(|v| (v + 1).to_string()).collect()
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}
