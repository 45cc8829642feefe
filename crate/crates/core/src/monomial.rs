//! Monomials in `X1..X4` and the local degree-reverse-lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const NVARS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(e1: u32, e2: u32, e3: u32, e4: u32) -> Self {
        Monomial([e1, e2, e3, e4])
    }

    /// Builds a monomial from signed exponents, rejecting negative or
    /// oversized ones.
    pub fn from_i64(exps: [i64; NVARS]) -> Result<Self> {
        let mut out = [0u32; NVARS];
        for (slot, e) in out.iter_mut().zip(exps) {
            if e < 0 {
                return Err(Error::InvalidParams(format!("negative exponent {e}")));
            }
            *slot = u32::try_from(e).map_err(|_| Error::ArithmeticOverflow("exponent"))?;
        }
        Ok(Monomial(out))
    }

    pub fn exps(&self) -> [u32; NVARS] {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i].max(other.0[i])))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i].min(other.0[i])))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| {
            self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow")
        }))
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(std::array::from_fn(|i| self.0[i] - other.0[i])))
    }

    /// `self / gcd(self, other)`.
    pub fn div_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| {
            self.0[i].saturating_sub(other.0[i])
        }))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(std::array::from_fn(|i| {
            self.0[i]
                .checked_mul(k)
                .expect("monomial exponent overflow")
        }))
    }
}

/// Negative-degree reverse-lexicographic order, `X1 > X2 > X3 > X4`.
///
/// Lower total degree is greater, so `1` is the maximum. Equal degrees are
/// compared from `X4` down to `X1`; the first smaller exponent wins.
#[derive(Debug, Clone, Copy, Default)]
pub struct LocalOrder;

impl LocalOrder {
    pub fn compare(a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
        for i in (0..NVARS).rev() {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

pub fn compare(a: &Monomial, b: &Monomial) -> Ordering {
    LocalOrder::compare(a, b)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "X{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParams(format!("cannot parse monomial {s:?}"));
        if s == "1" {
            return Ok(Monomial::ONE);
        }
        let mut exps = [0u32; NVARS];
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix('X').ok_or_else(bad)?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let var: usize = var.parse().map_err(|_| bad())?;
            if !(1..=NVARS).contains(&var) {
                return Err(bad());
            }
            exps[var - 1] += exp;
        }
        Ok(Monomial(exps))
    }
}
