use std::fmt;
use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A verified homomorphism between element-indexed groups.
///
/// Verification is the Cayley-edge check: `f(x s) = f(x) f(s)` for every
/// element `x` and every source generator `s`. Every element is a word in
/// the generators reachable from the identity, so induction on word length
/// turns the edge check into `f(x y) = f(x) f(y)` for all `x, y`.
#[derive(Clone)]
pub struct Homomorphism {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<u32>,
    generator_images: Vec<usize>,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Homomorphism")
            .field("source", &self.source.label())
            .field("target", &self.target.label())
            .field("generator_images", &self.generator_images)
            .finish()
    }
}

impl Homomorphism {
    /// Extend generator images along the breadth-first Cayley words of the
    /// source and verify every edge on the way.
    pub fn extend(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, generator_images: &[usize]) -> Result<Self> {
        let gens = source.generators();
        if generator_images.len() != gens.len() {
            return Err(Error::GeneratorCount { expected: gens.len(), got: generator_images.len() });
        }
        if let Some(&bad) = generator_images.iter().find(|&&y| y >= target.order()) {
            return Err(Error::BadIndex(bad));
        }
        let n = source.order();
        let mut images = vec![u32::MAX; n];
        images[0] = 0;
        // Same traversal that produced the Cayley words: the first visit of
        // each element defines its image, every later visit is an edge check.
        for &x in source.bfs_order() {
            let x = x as usize;
            let fx = images[x] as usize;
            for (gi, &s) in gens.iter().enumerate() {
                let y = source.mul(x, s);
                let expected = target.mul(fx, generator_images[gi]) as u32;
                if images[y] == u32::MAX {
                    images[y] = expected;
                } else if images[y] != expected {
                    return Err(Error::NotAHomomorphism { element: x, generator: s });
                }
            }
        }
        Ok(Homomorphism {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
            generator_images: generator_images.to_vec(),
        })
    }

    /// Verify a full image table.
    pub fn from_table(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, table: Vec<u32>) -> Result<Self> {
        if table.len() != source.order() {
            return Err(Error::GeneratorCount { expected: source.order(), got: table.len() });
        }
        if table[0] != 0 {
            return Err(Error::NotAHomomorphism { element: 0, generator: 0 });
        }
        if let Some(&bad) = table.iter().find(|&&y| y as usize >= target.order()) {
            return Err(Error::BadIndex(bad as usize));
        }
        for x in 0..source.order() {
            for &s in source.generators() {
                if table[source.mul(x, s)] as usize != target.mul(table[x] as usize, table[s] as usize) {
                    return Err(Error::NotAHomomorphism { element: x, generator: s });
                }
            }
        }
        let generator_images = source.generators().iter().map(|&s| table[s] as usize).collect();
        Ok(Homomorphism { source: Arc::clone(source), target: Arc::clone(target), images: table, generator_images })
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        Homomorphism {
            source: Arc::clone(g),
            target: Arc::clone(g),
            images: (0..g.order() as u32).collect(),
            generator_images: g.generators().to_vec(),
        }
    }

    /// Conjugation `x -> c^-1 x c`.
    pub fn inner(g: &Arc<FiniteGroup>, c: usize) -> Result<Self> {
        let imgs: Vec<usize> = g.generators().iter().map(|&s| g.conj(s, c)).collect();
        Self::extend(g, g, &imgs)
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn generator_images(&self) -> &[usize] {
        &self.generator_images
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn is_automorphism(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target) && self.is_bijective()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    /// Left-to-right composite: first `self`, then `other`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::AxiomViolation("composition across mismatched groups".into()));
        }
        let images: Vec<u32> = self.images.iter().map(|&y| other.images[y as usize]).collect();
        let generator_images = self.source.generators().iter().map(|&s| images[s] as usize).collect();
        Ok(Homomorphism { source: Arc::clone(&self.source), target: Arc::clone(&other.target), images, generator_images })
    }

    pub fn inverse(&self) -> Option<Homomorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut images = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        let generator_images = self.target.generators().iter().map(|&s| images[s] as usize).collect();
        Some(Homomorphism { source: Arc::clone(&self.target), target: Arc::clone(&self.source), images, generator_images })
    }

    /// Whether this automorphism equals conjugation by some element; returns
    /// the least such element.
    pub fn inner_witness(&self) -> Option<usize> {
        let g = &self.source;
        (0..g.order()).find(|&c| {
            g.generators()
                .iter()
                .zip(&self.generator_images)
                .all(|(&s, &img)| g.conj(s, c) == img)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 10).unwrap())
    }

    #[test]
    fn trivial_homomorphism() {
        let g = s3();
        let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let h = Homomorphism::extend(&g, &z2, &[0, 0]).unwrap();
        assert!(h.images().iter().all(|&y| y == 0));
    }

    #[test]
    fn sign_map_and_order_obstruction() {
        let g = s3();
        let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        // transposition -> 1, 3-cycle -> 0 is the sign map
        assert!(Homomorphism::extend(&g, &z2, &[1, 0]).is_ok());
        // a 3-cycle cannot map to an involution
        assert!(matches!(Homomorphism::extend(&g, &z2, &[0, 1]), Err(Error::NotAHomomorphism { .. })));
    }

    #[test]
    fn inner_automorphisms_of_s3() {
        let g = s3();
        for c in 0..6 {
            let a = Homomorphism::inner(&g, c).unwrap();
            assert!(a.is_automorphism());
            assert!(a.inner_witness().is_some());
            let back = a.then(&a.inverse().unwrap()).unwrap();
            assert!(back.is_identity());
        }
    }
}
