//! Permutations of a finite point set `{0, 1, ..., degree-1}`.

use crate::error::{Error, Result};

/// A permutation stored as its image list: point `x` maps to `images[x]`.
///
/// Permutations are the raw material groups are built from; once a
/// [`FiniteGroup`](crate::group::FiniteGroup) has been assembled its elements
/// are plain indices and the permutations are no longer consulted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image list, checking that it is a
    /// bijection on `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for (x, &y) in images.iter().enumerate() {
            if (y as usize) >= degree {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {y} of point {x} is out of range for degree {degree}"),
                });
            }
            if seen[y as usize] {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {y} appears more than once"),
                });
            }
            seen[y as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a single point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// The underlying image list.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Functional composition `self ∘ other`: first apply `other`, then
    /// `self`. Fails if the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|&y| self.images[y as usize])
            .collect();
        Ok(Permutation { images })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }

    /// True if this is the identity map.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }
}
