/// The small fields used for the builtin matrix groups.
///
/// Prime fields store residues `0..p`. `F4` stores `a + b x` as the bits
/// `b a` (so `2 = x`, `3 = x + 1 = x^2`) modulo `x^2 + x + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteField {
    F4,
    Prime(u8),
}

impl FiniteField {
    pub fn new(q: usize) -> Option<Self> {
        match q {
            4 => Some(FiniteField::F4),
            2 | 3 | 5 | 7 => Some(FiniteField::Prime(q as u8)),
            _ => None,
        }
    }

    pub fn size(self) -> u8 {
        match self {
            FiniteField::F4 => 4,
            FiniteField::Prime(p) => p,
        }
    }

    pub fn characteristic(self) -> u8 {
        match self {
            FiniteField::F4 => 2,
            FiniteField::Prime(p) => p,
        }
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            FiniteField::F4 => a ^ b,
            FiniteField::Prime(p) => (a + b) % p,
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        match self {
            FiniteField::F4 => a,
            FiniteField::Prime(p) => (p - a) % p,
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            FiniteField::F4 => {
                let mut r = 0u8;
                for i in 0..2 {
                    if (b >> i) & 1 == 1 {
                        r ^= a << i;
                    }
                }
                if r & 4 != 0 {
                    r ^= 0b111;
                }
                r
            }
            FiniteField::Prime(p) => ((a as u16 * b as u16) % p as u16) as u8,
        }
    }

    pub fn inv(self, a: u8) -> Option<u8> {
        (1..self.size()).find(|&b| self.mul(a, b) == 1).filter(|_| a != 0)
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.size()
    }

    pub fn is_square(self, a: u8) -> bool {
        self.elements().any(|b| self.mul(b, b) == a)
    }

    /// Generators of the additive group over the prime field.
    pub fn additive_basis(self) -> Vec<u8> {
        match self {
            FiniteField::F4 => vec![1, 2],
            FiniteField::Prime(_) => vec![1],
        }
    }
}
