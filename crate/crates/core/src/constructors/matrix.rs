use super::field::FiniteField;

/// A square matrix of dimension at most 3 over one of the small fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: [u8; 9],
}

impl Matrix {
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let dim = rows.len();
        assert!(dim <= 3 && rows.iter().all(|r| r.len() == dim), "matrix must be square of dimension <= 3");
        let mut entries = [0u8; 9];
        for (i, r) in rows.iter().enumerate() {
            entries[i * dim..(i + 1) * dim].copy_from_slice(r);
        }
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = [0u8; 9];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Matrix { dim, entries }
    }

    pub fn diagonal(values: &[u8]) -> Self {
        let mut m = Matrix::identity(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * m.dim + i] = v;
        }
        m
    }

    /// Identity plus `a` in position `(i, j)`, `i != j`.
    pub fn transvection(dim: usize, i: usize, j: usize, a: u8) -> Self {
        let mut m = Matrix::identity(dim);
        m.entries[i * dim + j] = a;
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &Matrix, f: FiniteField) -> Matrix {
        let d = self.dim;
        let mut entries = [0u8; 9];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0;
                for k in 0..d {
                    acc = f.add(acc, f.mul(self.get(i, k), other.get(k, j)));
                }
                entries[i * d + j] = acc;
            }
        }
        Matrix { dim: d, entries }
    }

    pub fn det(&self, f: FiniteField) -> u8 {
        let g = |i, j| self.get(i, j);
        match self.dim {
            1 => g(0, 0),
            2 => f.sub(f.mul(g(0, 0), g(1, 1)), f.mul(g(0, 1), g(1, 0))),
            3 => {
                let minor = |a, b, c, d| f.sub(f.mul(a, d), f.mul(b, c));
                let t0 = f.mul(g(0, 0), minor(g(1, 1), g(1, 2), g(2, 1), g(2, 2)));
                let t1 = f.mul(g(0, 1), minor(g(1, 0), g(1, 2), g(2, 0), g(2, 2)));
                let t2 = f.mul(g(0, 2), minor(g(1, 0), g(1, 1), g(2, 0), g(2, 1)));
                f.add(f.sub(t0, t1), t2)
            }
            _ => 1,
        }
    }

    /// Inverse by adjugate; `None` for singular matrices.
    pub fn inverse(&self, f: FiniteField) -> Option<Matrix> {
        let det_inv = f.inv(self.det(f))?;
        let d = self.dim;
        let mut entries = [0u8; 9];
        match d {
            1 => entries[0] = det_inv,
            2 => {
                entries[0] = f.mul(self.get(1, 1), det_inv);
                entries[1] = f.mul(f.neg(self.get(0, 1)), det_inv);
                entries[2] = f.mul(f.neg(self.get(1, 0)), det_inv);
                entries[3] = f.mul(self.get(0, 0), det_inv);
            }
            _ => {
                for i in 0..3 {
                    for j in 0..3 {
                        // cofactor C_ji goes to position (i, j)
                        let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
                        let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                        let minor = f.sub(
                            f.mul(self.get(rows[0], cols[0]), self.get(rows[1], cols[1])),
                            f.mul(self.get(rows[0], cols[1]), self.get(rows[1], cols[0])),
                        );
                        let signed = if (i + j) % 2 == 0 { minor } else { f.neg(minor) };
                        entries[i * 3 + j] = f.mul(signed, det_inv);
                    }
                }
            }
        }
        Some(Matrix { dim: d, entries })
    }

    /// Entries as base-`q` digits, row-major, least significant first.
    pub fn encode(&self, f: FiniteField) -> u32 {
        let q = f.size() as u32;
        self.entries[..self.dim * self.dim].iter().rev().fold(0, |acc, &e| acc * q + e as u32)
    }

    pub fn decode(code: u32, dim: usize, f: FiniteField) -> Matrix {
        let q = f.size() as u32;
        let mut entries = [0u8; 9];
        let mut c = code;
        for e in entries.iter_mut().take(dim * dim) {
            *e = (c % q) as u8;
            c /= q;
        }
        Matrix { dim, entries }
    }

    pub fn code_space(dim: usize, f: FiniteField) -> usize {
        (f.size() as usize).pow((dim * dim) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_roundtrip_and_inverse() {
        let f = FiniteField::Prime(7);
        let m = Matrix::from_rows(&[&[2, 3], &[1, 4]]);
        assert_eq!(Matrix::decode(m.encode(f), 2, f), m);
        let inv = m.inverse(f).unwrap();
        assert_eq!(m.mul(&inv, f), Matrix::identity(2));
    }

    #[test]
    fn three_by_three_inverse_over_f4() {
        let f = FiniteField::F4;
        let m = Matrix::from_rows(&[&[0, 2, 0], &[2, 1, 3], &[3, 3, 3]]);
        assert_eq!(m.det(f), 1);
        let inv = m.inverse(f).unwrap();
        assert_eq!(m.mul(&inv, f), Matrix::identity(3));
        assert_eq!(inv.mul(&m, f), Matrix::identity(3));
    }
}
