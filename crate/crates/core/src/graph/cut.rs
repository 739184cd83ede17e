use crate::error::{Error, Result};

/// A bipartition `[A, B]` of the vertices `0..n`.
///
/// Stored as membership, so the partition invariant holds by construction;
/// [`Cut::from_parts`] validates caller-supplied parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cut {
    in_b: Vec<bool>,
}

impl Cut {
    /// All vertices in `A`.
    pub fn all_a(n: usize) -> Self {
        Cut { in_b: vec![false; n] }
    }

    /// Membership vector with `true` meaning part `B`.
    pub fn from_membership(in_b: Vec<bool>) -> Self {
        Cut { in_b }
    }

    /// Cut whose `A` part is exactly `a`; everything else goes to `B`.
    pub fn from_part_a(n: usize, a: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut in_b = vec![true; n];
        for v in a {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            in_b[v] = false;
        }
        Ok(Cut { in_b })
    }

    /// Cut from two explicit parts that must partition `0..n`.
    pub fn from_parts(n: usize, a: &[usize], b: &[usize]) -> Result<Self> {
        let mut seen = vec![None; n];
        for (part, set) in [(false, a), (true, b)] {
            for &v in set {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v].replace(part).is_some() {
                    return Err(Error::Overlap(v));
                }
            }
        }
        let in_b = seen
            .iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| Error::InvalidCut(format!("vertex {v} is in neither part"))))
            .collect::<Result<_>>()?;
        Ok(Cut { in_b })
    }

    /// Cut from a bitmask where bit `v` set means `v ∈ B`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Cut {
            in_b: (0..n).map(|v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.in_b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.in_b.is_empty()
    }

    #[inline]
    pub fn in_a(&self, v: usize) -> bool {
        !self.in_b[v]
    }

    #[inline]
    pub fn in_b(&self, v: usize) -> bool {
        self.in_b[v]
    }

    pub fn set(&mut self, v: usize, in_b: bool) {
        self.in_b[v] = in_b;
    }

    pub fn flip(&mut self, v: usize) {
        self.in_b[v] = !self.in_b[v];
    }

    pub fn membership(&self) -> &[bool] {
        &self.in_b
    }

    pub fn part_a(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.in_a(v)).collect()
    }

    pub fn part_b(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.in_b(v)).collect()
    }

    /// `[B, A]`.
    pub fn swapped(&self) -> Self {
        Cut {
            in_b: self.in_b.iter().map(|b| !b).collect(),
        }
    }

    /// Same cut with vertex 0 moved into `A` (swapping sides if needed).
    pub fn normalized(self) -> Self {
        if self.in_b.first() == Some(&true) {
            self.swapped()
        } else {
            self
        }
    }

    /// Whether `u` and `v` lie in opposite parts.
    pub fn separates(&self, u: usize, v: usize) -> bool {
        self.in_b[u] != self.in_b[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_must_partition() {
        assert_eq!(Cut::from_parts(3, &[0, 1], &[1, 2]), Err(Error::Overlap(1)));
        assert!(matches!(
            Cut::from_parts(3, &[0], &[2]),
            Err(Error::InvalidCut(_))
        ));
        let c = Cut::from_parts(3, &[0, 2], &[1]).unwrap();
        assert_eq!(c.part_a(), vec![0, 2]);
        assert_eq!(c.part_b(), vec![1]);
        assert_eq!(c.swapped().part_a(), vec![1]);
    }

    #[test]
    fn mask_round_trip() {
        let c = Cut::from_mask(4, 0b1010);
        assert_eq!(c.part_b(), vec![1, 3]);
        assert!(c.separates(0, 1));
        assert!(!c.separates(1, 3));
        assert_eq!(Cut::from_mask(2, 0b01).normalized().part_a(), vec![0]);
    }
}
