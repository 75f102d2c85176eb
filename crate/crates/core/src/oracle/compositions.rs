use std::iter::FusedIterator;

/// An ordered tuple of positive integers with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
    total: u32,
}

impl Composition {
    /// `None` if some part is zero.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        let total = parts.iter().sum();
        Some(Self { parts, total })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Lexicographic stream of the compositions of `total` into `length` parts.
#[derive(Debug, Clone)]
pub struct Compositions {
    total: u32,
    next: Option<Vec<u32>>,
}

/// Every `length`-tuple of positive integers summing to `total`, in
/// lexicographic order. For `total = length = 0` this is the single empty
/// composition.
pub fn enumerate_compositions(total: u32, length: usize) -> Compositions {
    let next = match (total, length) {
        (0, 0) => Some(Vec::new()),
        (_, 0) => None,
        _ if (length as u64) > u64::from(total) => None,
        _ => {
            let mut first = vec![1; length];
            first[length - 1] = total - (length as u32 - 1);
            Some(first)
        }
    };
    Compositions { total, next }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // Successor: bump the part just left of the rightmost part > 1, reset
        // everything after it to 1 and let the last part absorb the rest.
        if let Some(big) = current.iter().rposition(|&p| p > 1).filter(|&j| j > 0) {
            let mut succ = current.clone();
            let pivot = big - 1;
            succ[pivot] += 1;
            let head: u32 = succ[..=pivot].iter().sum();
            let last = succ.len() - 1;
            for part in &mut succ[pivot + 1..last] {
                *part = 1;
            }
            succ[last] = self.total - head - (last - pivot - 1) as u32;
            self.next = Some(succ);
        }
        Some(Composition {
            parts: current,
            total: self.total,
        })
    }
}

impl FusedIterator for Compositions {}
