//! Builtin quasisimple factors realized as matrix groups over small fields.

mod field;
mod matrix;

pub use field::FiniteField;
pub use matrix::Matrix;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::abelian::AbelianInvariants;
use crate::catalog::{Catalog, QuasisimpleDescriptor};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Homomorphism, DEFAULT_ELEMENT_LIMIT};

/// A group of matrices with the code of each element kept for lookups.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub field: FiniteField,
    pub dim: usize,
    pub group: Arc<FiniteGroup>,
    codes: Vec<u32>,
    index_of_code: Vec<u32>,
}

impl MatrixGroup {
    pub fn matrix(&self, x: usize) -> Matrix {
        Matrix::decode(self.codes[x], self.dim, self.field)
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        match self.index_of_code.get(m.encode(self.field) as usize) {
            Some(&i) if i != u32::MAX => Some(i as usize),
            _ => None,
        }
    }

    /// Automorphism induced by `m -> f(m)` for a map `f` on matrices,
    /// checked on all Cayley edges.
    pub fn induced_automorphism(&self, f: impl Fn(&Matrix) -> Matrix) -> Result<Homomorphism> {
        let imgs = self
            .group
            .generators()
            .iter()
            .map(|&s| {
                self.index_of(&f(&self.matrix(s)))
                    .ok_or_else(|| Error::CertificateRejected("image matrix lies outside the group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let hom = Homomorphism::extend(&self.group, &self.group, &imgs)
            .map_err(|e| Error::CertificateRejected(e.to_string()))?;
        if !hom.is_bijective() {
            return Err(Error::CertificateRejected("induced map is not bijective".into()));
        }
        Ok(hom)
    }
}

/// Closure of the given matrices.
pub fn matrix_group(label: &str, field: FiniteField, gens: &[Matrix]) -> Result<MatrixGroup> {
    let dim = gens.first().ok_or(Error::NoGenerators)?.dim();
    let codes: Vec<u32> = gens.iter().map(|m| m.encode(field)).collect();
    let space = Matrix::code_space(dim, field);
    let mul = Arc::new(move |a: u32, b: u32| {
        Matrix::decode(a, dim, field).mul(&Matrix::decode(b, dim, field), field).encode(field)
    });
    let (group, element_codes) = FiniteGroup::from_codes(
        label,
        Matrix::identity(dim).encode(field),
        &codes,
        space,
        mul,
        DEFAULT_ELEMENT_LIMIT,
    )?;
    let mut index_of_code = vec![u32::MAX; space];
    for (i, &c) in element_codes.iter().enumerate() {
        index_of_code[c as usize] = i as u32;
    }
    Ok(MatrixGroup { field, dim, group: Arc::new(group), codes: element_codes, index_of_code })
}

/// `q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1)`.
pub fn special_linear_order(dim: usize, q: usize) -> usize {
    let mut order = q.pow((dim * (dim - 1) / 2) as u32);
    for i in 2..=dim {
        order *= q.pow(i as u32) - 1;
    }
    order
}

/// `SL(dim, q)` generated by elementary transvections.
pub fn special_linear(dim: usize, q: usize) -> Result<MatrixGroup> {
    if !matches!((dim, q), (2, 5) | (2, 7) | (3, 4)) {
        return Err(Error::UnsupportedParameters { dim, q });
    }
    let field = FiniteField::new(q).ok_or(Error::UnsupportedParameters { dim, q })?;
    let mut gens = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                for a in field.additive_basis() {
                    gens.push(Matrix::transvection(dim, i, j, a));
                }
            }
        }
    }
    if dim == 2 {
        // the two unipotent generators already suffice over a prime field
        gens.truncate(2);
    }
    matrix_group(&format!("SL({dim},{q})"), field, &gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinName {
    Sl2_5,
    Sl2_7,
    ThreeA6,
}

impl BuiltinName {
    pub const ALL: [BuiltinName; 3] = [BuiltinName::Sl2_5, BuiltinName::Sl2_7, BuiltinName::ThreeA6];

    pub fn as_str(self) -> &'static str {
        match self {
            BuiltinName::Sl2_5 => "SL2_5",
            BuiltinName::Sl2_7 => "SL2_7",
            BuiltinName::ThreeA6 => "THREE_A6",
        }
    }

    /// Declared order and center type, checked when the factor is built.
    fn declared(self) -> (usize, &'static [u64]) {
        match self {
            BuiltinName::Sl2_5 => (120, &[2]),
            BuiltinName::Sl2_7 => (336, &[2]),
            BuiltinName::ThreeA6 => (1080, &[3]),
        }
    }
}

impl fmt::Display for BuiltinName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BuiltinName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnsupportedName(s.to_string()))
    }
}

/// Generators of the Valentiner group `3.A6 < SL(3,4)`, the preimage of the
/// stabilizer of the hyperoval `{(1:t:t^2)} + {(0:0:1), (0:1:0)}` in
/// `PSL(3,4)`. Entries use the `F4` coding of [`FiniteField`].
const THREE_A6_GENERATORS: [[[u8; 3]; 3]; 2] = [
    [[0, 2, 0], [2, 1, 3], [3, 3, 3]],
    [[0, 0, 3], [0, 3, 0], [3, 1, 2]],
];

/// A builtin quasisimple factor with its realized group.
#[derive(Debug, Clone)]
pub struct BuiltinFactor {
    pub name: BuiltinName,
    pub matrices: MatrixGroup,
    pub center: AbelianInvariants,
    pub descriptor: QuasisimpleDescriptor,
}

impl BuiltinFactor {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.matrices.group
    }

    pub fn generator_matrices(&self) -> Vec<Matrix> {
        self.group().generators().iter().map(|&s| self.matrices.matrix(s)).collect()
    }

    /// Outer automorphism certificates: conjugation by a diagonal matrix
    /// of non-square determinant for `SL(2,q)`, the Frobenius map for `3.A6`.
    pub fn certificates(&self) -> Result<Vec<Homomorphism>> {
        match self.name {
            BuiltinName::Sl2_5 | BuiltinName::Sl2_7 => Ok(vec![diagonal_automorphism_certificate(self)?]),
            BuiltinName::ThreeA6 => Ok(vec![frobenius_certificate(self)?]),
        }
    }
}

/// Build and gate a builtin factor: the closure must have the declared
/// order and center, and the group must be quasisimple.
pub fn builtin(name: BuiltinName) -> Result<BuiltinFactor> {
    let matrices = match name {
        BuiltinName::Sl2_5 => special_linear(2, 5)?,
        BuiltinName::Sl2_7 => special_linear(2, 7)?,
        BuiltinName::ThreeA6 => {
            let gens: Vec<Matrix> = THREE_A6_GENERATORS
                .iter()
                .map(|m| Matrix::from_rows(&[&m[0], &m[1], &m[2]]))
                .collect();
            matrix_group("3.A6", FiniteField::F4, &gens)?
        }
    };
    let group = Arc::clone(&matrices.group);
    let (order, center_orders) = name.declared();
    if group.order() != order {
        return Err(Error::CertificateRejected(format!("{name}: closure has order {}, expected {order}", group.order())));
    }
    let center = AbelianInvariants::of_subgroup(&group, group.center());
    if center != AbelianInvariants::from_cyclic_orders(center_orders) {
        return Err(Error::CertificateRejected(format!("{name}: center is {center}")));
    }
    if !FiniteGroup::is_quasisimple(&group) {
        return Err(Error::NotQuasisimple(name.to_string()));
    }
    let descriptor = Catalog::builtin().identify((order as u64) / center.order(), center.clone())?;
    Ok(BuiltinFactor { name, matrices, center, descriptor })
}

pub fn builtin_by_name(name: &str) -> Result<BuiltinFactor> {
    builtin(name.parse()?)
}

/// Conjugation by `diag(r, 1)` with `r` a non-square, an outer automorphism
/// of `SL(2, q)`.
pub fn diagonal_automorphism_certificate(factor: &BuiltinFactor) -> Result<Homomorphism> {
    let f = factor.matrices.field;
    if !matches!(factor.name, BuiltinName::Sl2_5 | BuiltinName::Sl2_7) {
        return Err(Error::UnsupportedName(factor.name.to_string()));
    }
    let r = f.elements().find(|&a| a != 0 && !f.is_square(a)).expect("odd prime field has non-squares");
    let d = Matrix::diagonal(&[r, 1]);
    let d_inv = d.inverse(f).expect("diagonal matrix is invertible");
    factor.matrices.induced_automorphism(|m| d_inv.mul(m, f).mul(&d, f))
}

/// Entrywise squaring over `F4`.
pub fn frobenius_certificate(factor: &BuiltinFactor) -> Result<Homomorphism> {
    let f = factor.matrices.field;
    if f != FiniteField::F4 {
        return Err(Error::UnsupportedName(factor.name.to_string()));
    }
    let dim = factor.matrices.dim;
    factor.matrices.induced_automorphism(|m| {
        let rows: Vec<Vec<u8>> = (0..dim).map(|i| (0..dim).map(|j| f.mul(m.get(i, j), m.get(i, j))).collect()).collect();
        let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
        Matrix::from_rows(&refs)
    })
}
