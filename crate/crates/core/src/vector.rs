//! Exact vectors with a fixed denominator of two.
//!
//! Every root of the systems built here has coordinates that are either all
//! integers or all half-integers, so a vector is stored as its doubled
//! coordinates. All inner products are taken through [`ExactVector::dot4`],
//! which returns four times the Euclidean inner product and is always an
//! integer. No floating point appears anywhere in the crate.

use std::fmt;

/// A vector in the ambient Euclidean space, stored as doubled coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactVector {
    /// Doubled coordinates: the vector is `half / 2` componentwise.
    half: Vec<i64>,
}

impl ExactVector {
    /// Builds a vector from doubled coordinates.
    pub fn from_doubled(half: Vec<i64>) -> Self {
        ExactVector { half }
    }

    /// Builds a vector from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        ExactVector {
            half: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        ExactVector { half: vec![0; dim] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.half.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.half
    }

    pub fn is_zero(&self) -> bool {
        self.half.iter().all(|&c| c == 0)
    }

    /// Four times the Euclidean inner product; exact in `i64`.
    pub fn dot4(&self, other: &ExactVector) -> i64 {
        debug_assert_eq!(self.half.len(), other.half.len());
        self.half
            .iter()
            .zip(&other.half)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Four times the squared length.
    pub fn norm4(&self) -> i64 {
        self.dot4(self)
    }

    pub fn negated(&self) -> ExactVector {
        ExactVector {
            half: self.half.iter().map(|c| -c).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> ExactVector {
        ExactVector {
            half: self.half.iter().map(|c| k * c).collect(),
        }
    }

    pub fn add(&self, other: &ExactVector) -> ExactVector {
        ExactVector {
            half: self
                .half
                .iter()
                .zip(&other.half)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ExactVector) -> ExactVector {
        ExactVector {
            half: self
                .half
                .iter()
                .zip(&other.half)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Reflects `self` in the hyperplane orthogonal to `mirror`:
    /// `self - 2(self,mirror)/(mirror,mirror) * mirror`.
    ///
    /// The Cartan coefficient `2(v,m)/(m,m)` is an integer whenever both
    /// vectors are roots of a common system; inputs outside the half-integer
    /// lattice compatible with the mirror are a caller bug.
    pub fn reflected(&self, mirror: &ExactVector) -> ExactVector {
        let num = 2 * self.dot4(mirror);
        let den = mirror.norm4();
        assert!(den > 0, "cannot reflect in the zero vector");
        assert_eq!(
            num % den,
            0,
            "reflection leaves the half-integer lattice: {self:?} in {mirror:?}"
        );
        let t = num / den;
        self.sub(&mirror.scaled(t))
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.half.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        write!(f, ")")
    }
}
