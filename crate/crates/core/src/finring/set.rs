/// A set of ring elements, stored as sorted element positions plus a
/// membership bitmap over the whole ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    indices: Vec<usize>,
    bits: Vec<u64>,
}

impl ElementSet {
    pub(crate) fn from_sorted(universe: usize, indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        let mut bits = vec![0u64; universe.div_ceil(64)];
        for &i in &indices {
            bits[i / 64] |= 1 << (i % 64);
        }
        ElementSet { indices, bits }
    }

    pub(crate) fn from_unsorted(universe: usize, mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self::from_sorted(universe, indices)
    }

    pub(crate) fn from_bits(bits: Vec<u64>) -> Self {
        let mut indices = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut word = word;
            while word != 0 {
                let b = word.trailing_zeros() as usize;
                indices.push(w * 64 + b);
                word &= word - 1;
            }
        }
        ElementSet { indices, bits }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    #[inline]
    pub fn contains(&self, idx: usize) -> bool {
        self.bits
            .get(idx / 64)
            .is_some_and(|w| w & (1 << (idx % 64)) != 0)
    }

    /// Element positions in increasing (lexicographic) order.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    pub(crate) fn intersection_len(&self, other: &ElementSet) -> usize {
        self.indices.iter().filter(|&&i| other.contains(i)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_and_indices_agree() {
        let s = ElementSet::from_unsorted(200, vec![130, 3, 64, 3, 0]);
        assert_eq!(s.indices(), &[0, 3, 64, 130]);
        assert!(s.contains(130) && !s.contains(131) && !s.contains(10_000));
        let t = ElementSet::from_bits(s.bits.clone());
        assert_eq!(s, t);
    }
}
