use crate::error::{Error, Result};

/// `GF(2^k)` for `k ∈ {2, 3, 4}` with exp/log tables for the generator `g = x`.
///
/// Elements are bit vectors of polynomial coefficients (bit `i` ↔ `x^i`). The moduli
/// `x²+x+1`, `x³+x+1`, `x⁴+x+1` are primitive, so `x` generates the multiplicative group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfTable {
    q: usize,
    exp: Vec<u8>,
    log: Vec<usize>,
}

impl GfTable {
    pub fn new(q: usize) -> Result<Self> {
        let modulus: u16 = match q {
            4 => 0b111,
            8 => 0b1011,
            16 => 0b10011,
            _ => {
                return Err(Error::SpecInvalid {
                    reason: format!("q = {q} is not one of 4, 8, 16"),
                })
            }
        };
        let mut exp = Vec::with_capacity(q - 1);
        let mut log = vec![usize::MAX; q];
        let mut e: u16 = 1;
        for i in 0..q - 1 {
            if log[e as usize] != usize::MAX {
                return Err(Error::Internal(format!("x is not primitive mod {modulus:#b}")));
            }
            exp.push(e as u8);
            log[e as usize] = i;
            e <<= 1;
            if e & q as u16 != 0 {
                e ^= modulus;
            }
        }
        Ok(GfTable { q, exp, log })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[(self.log[a as usize] + self.log[b as usize]) % n]
    }

    /// `g^e`, exponent taken mod `q − 1`.
    pub fn pow_g(&self, e: usize) -> u8 {
        self.exp[e % (self.q - 1)]
    }

    /// Discrete log base `g`; `None` for zero.
    pub fn log(&self, a: u8) -> Option<usize> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        let n = self.q - 1;
        self.log(a).map(|l| self.exp[(n - l) % n])
    }
}
