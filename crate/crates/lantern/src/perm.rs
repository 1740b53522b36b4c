//! Permutations of puncture labels {1..n} and general finite point sets.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A bijection of {1..n}. Stored 0-indexed: `images[i]` is the image of
/// point `i` (so label `i+1` maps to label `images[i]+1`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::Dimension(
                    "permutation images are not a bijection".into(),
                ));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from a 1-indexed rule.
    pub fn from_rule(n: usize, rule: impl Fn(usize) -> usize) -> Result<Self, Error> {
        let images = (1..=n)
            .map(|i| {
                let im = rule(i);
                im.wrapping_sub(1)
            })
            .collect();
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-indexed application.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 0-indexed application.
    pub fn apply0(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    /// Composition `self ∘ other` — rightmost acts first, so `r3.compose(&r1)`
    /// reads as the product `r₃r₁`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// Disjoint-cycle decomposition, 1-indexed, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur + 1);
                cur = self.images[cur];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// True iff this is the single b-cycle (1,2,...,n).
    pub fn is_long_forward_cycle(&self) -> bool {
        let n = self.degree();
        (1..=n).all(|i| self.apply(i) == if i == n { 1 } else { i + 1 })
    }

    /// True iff this is the transposition (1,n).
    pub fn is_end_transposition(&self) -> bool {
        let n = self.degree();
        if n < 2 {
            return false;
        }
        self.apply(1) == n && self.apply(n) == 1 && (2..n).all(|i| self.apply(i) == i)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (idx, p) in cyc.iter().enumerate() {
                if idx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_rightmost_first() {
        // a = (1,2), b = (2,3); a∘b sends 3 -> 2 -> 1... b first: 3->2, then a: 2->1.
        let a = Permutation::from_rule(3, |i| match i {
            1 => 2,
            2 => 1,
            _ => i,
        })
        .unwrap();
        let b = Permutation::from_rule(3, |i| match i {
            2 => 3,
            3 => 2,
            _ => i,
        })
        .unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(3), 1);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 3);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
    }
}
