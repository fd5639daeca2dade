use crate::group::{FiniteGroup, Homomorphism};

/// A permutation of the element indices of a group. Maps compose left to
/// right: `x^(στ) = (x^σ)^τ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermOnG {
    images: Vec<u32>,
}

impl PermOnG {
    pub fn identity(n: usize) -> Self {
        PermOnG { images: (0..n as u32).collect() }
    }

    /// `None` unless `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let p = PermOnG { images };
        p.is_bijection().then_some(p)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        PermOnG { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&y| {
            let y = y as usize;
            y < seen.len() && !std::mem::replace(&mut seen[y], true)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &PermOnG) -> PermOnG {
        PermOnG { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> PermOnG {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y as usize] = i as u32;
        }
        PermOnG { images: inv }
    }

    /// `φ⁻¹ σ φ`, i.e. `x ↦ φ(σ(φ⁻¹(x)))`.
    pub fn conjugate_by(&self, phi: &PermOnG) -> PermOnG {
        let phi_inv = phi.inverse();
        PermOnG {
            images: (0..self.images.len())
                .map(|x| phi.images[self.images[phi_inv.images[x] as usize] as usize])
                .collect(),
        }
    }

    pub fn commutes_with(&self, other: &PermOnG) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }
}

/// Right translation `x ↦ xg`.
pub fn rho(g: &FiniteGroup, a: usize) -> PermOnG {
    PermOnG { images: (0..g.order()).map(|x| g.mul(x, a) as u32).collect() }
}

/// Left translation `x ↦ gx`; an antihomomorphism under left-to-right composition.
pub fn lambda(g: &FiniteGroup, a: usize) -> PermOnG {
    PermOnG { images: (0..g.order()).map(|x| g.mul(a, x) as u32).collect() }
}

/// `x ↦ x⁻¹`.
pub fn inversion_perm(g: &FiniteGroup) -> PermOnG {
    PermOnG { images: g.inverse_table().to_vec() }
}

/// An automorphism as a permutation of the elements.
pub fn automorphism_perm(hom: &Homomorphism) -> PermOnG {
    PermOnG { images: hom.images().to_vec() }
}

/// Membership in `Hol(G) = Aut(G) ⋉ ρ(G)`: with `g = 0^σ`, the map
/// `α = σ ρ(g)⁻¹` must be an automorphism. Returns `(α, g)` on success.
pub fn hol_membership(g: &FiniteGroup, sigma: &PermOnG) -> Option<(PermOnG, usize)> {
    if sigma.degree() != g.order() {
        return None;
    }
    let t = sigma.apply(0);
    let t_inv = g.inv(t);
    let alpha: Vec<u32> = (0..g.order()).map(|x| g.mul(sigma.apply(x), t_inv) as u32).collect();
    let ok = (0..g.order()).all(|x| {
        g.generators().iter().all(|&s| {
            alpha[g.mul(x, s)] as usize == g.mul(alpha[x] as usize, alpha[s] as usize)
        })
    });
    (ok && sigma.is_bijection()).then(|| (PermOnG { images: alpha }, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![0, 2, 1]], 10).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = PermOnG::from_images(vec![1, 2, 0]).unwrap();
        let b = PermOnG::from_images(vec![0, 2, 1]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(b.then(&a).apply(0), 1);
    }

    #[test]
    fn rho_hom_lambda_antihom() {
        let g = s3();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(rho(&g, a).then(&rho(&g, b)), rho(&g, g.mul(a, b)));
                assert_eq!(lambda(&g, a).then(&lambda(&g, b)), lambda(&g, g.mul(b, a)));
            }
        }
    }

    #[test]
    fn inversion_conjugates_rho_to_lambda() {
        let g = s3();
        let inv = inversion_perm(&g);
        assert!(inv.then(&inv).is_identity());
        for a in 0..6 {
            assert_eq!(rho(&g, a).conjugate_by(&inv), lambda(&g, g.inv(a)));
        }
        assert!(hol_membership(&g, &inv).is_none());
        assert_eq!(hol_membership(&g, &rho(&g, 3)).map(|(a, t)| (a.is_identity(), t)), Some((true, 3)));
    }

    #[test]
    fn non_bijection_rejected() {
        assert!(PermOnG::from_images(vec![0, 0, 1]).is_none());
    }
}
