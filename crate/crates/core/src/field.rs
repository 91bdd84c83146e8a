//! Prime field arithmetic.

use std::fmt;

use crate::error::{Error, Result};

/// Default characteristic used when a spec does not name one.
pub const DEFAULT_CHAR: u32 = 32003;

/// Largest accepted characteristic (products must fit in `u64`).
pub const MAX_CHAR: u32 = (1 << 31) - 1;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_char(p: u32) -> Result<()> {
    if !is_prime(p) || p > MAX_CHAR {
        return Err(Error::Input(format!("field characteristic {p} is not a supported prime")));
    }
    Ok(())
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    if s >= p as u64 {
        (s - p as u64) as u32
    } else {
        s as u32
    }
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + p as u64 - b as u64) as u32
    }
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue. Panics on zero.
pub fn inv(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero in F_{p}");
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if t < 0 {
        t += p as i64;
    }
    t as u32
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// Symmetric representative in `(-p/2, p/2]`, for display.
pub fn signed(v: u32, p: u32) -> i64 {
    if v as u64 > p as u64 / 2 {
        v as i64 - p as i64
    } else {
        v as i64
    }
}

/// An element of F_p that remembers its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FElem {
    value: u32,
    p: u32,
}

impl FElem {
    pub fn new(v: i64, p: u32) -> Self {
        FElem { value: reduce(v, p), p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    fn same(self, o: FElem) -> Result<u32> {
        if self.p != o.p {
            return Err(Error::ModulusMismatch(self.p, o.p));
        }
        Ok(self.p)
    }

    pub fn try_add(self, o: FElem) -> Result<FElem> {
        let p = self.same(o)?;
        Ok(FElem { value: add(self.value, o.value, p), p })
    }

    pub fn try_sub(self, o: FElem) -> Result<FElem> {
        let p = self.same(o)?;
        Ok(FElem { value: sub(self.value, o.value, p), p })
    }

    pub fn try_mul(self, o: FElem) -> Result<FElem> {
        let p = self.same(o)?;
        Ok(FElem { value: mul(self.value, o.value, p), p })
    }

    pub fn inverse(self) -> Option<FElem> {
        (self.value != 0).then(|| FElem { value: inv(self.value, self.p), p: self.p })
    }
}

impl std::ops::Add for FElem {
    type Output = FElem;
    fn add(self, o: FElem) -> FElem {
        self.try_add(o).expect("mixed moduli")
    }
}

impl std::ops::Sub for FElem {
    type Output = FElem;
    fn sub(self, o: FElem) -> FElem {
        self.try_sub(o).expect("mixed moduli")
    }
}

impl std::ops::Mul for FElem {
    type Output = FElem;
    fn mul(self, o: FElem) -> FElem {
        self.try_mul(o).expect("mixed moduli")
    }
}

impl std::ops::Neg for FElem {
    type Output = FElem;
    fn neg(self) -> FElem {
        FElem { value: neg(self.value, self.p), p: self.p }
    }
}

impl fmt::Debug for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 32003] {
            for a in 1..p.min(200) {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
    }

    #[test]
    fn primes() {
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert!(!is_prime(1));
        assert!(check_char(4).is_err());
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = FElem::new(1, 5);
        let b = FElem::new(1, 7);
        assert!(a.try_add(b).is_err());
        assert_eq!((FElem::new(3, 5) * FElem::new(2, 5)).value(), 1);
        assert_eq!((-FElem::new(2, 5)).value(), 3);
    }
}
