//! Komeda parameters of a 4-generated pseudo-symmetric semigroup, the
//! derived generators, and a brute-force oracle for the Hilbert function of
//! the associated graded ring.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::checked::Checked;
use crate::error::{Error, Result};

/// The five integers `α1, α2, α3, α4, α21` defining the semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PseudoSymParams {
    pub alpha1: i64,
    pub alpha2: i64,
    pub alpha3: i64,
    pub alpha4: i64,
    pub alpha21: i64,
}

impl PseudoSymParams {
    /// Validates `α_i > 1` and `0 < α21 < α1 - 1`.
    pub fn new(alpha1: i64, alpha2: i64, alpha3: i64, alpha4: i64, alpha21: i64) -> Result<Self> {
        let p = PseudoSymParams {
            alpha1,
            alpha2,
            alpha3,
            alpha4,
            alpha21,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("alpha1", self.alpha1),
            ("alpha2", self.alpha2),
            ("alpha3", self.alpha3),
            ("alpha4", self.alpha4),
        ] {
            if v <= 1 {
                return Err(Error::InvalidParams(format!("{name} = {v} must exceed 1")));
            }
        }
        if self.alpha21 <= 0 || self.alpha21 >= self.alpha1 - 1 {
            return Err(Error::InvalidParams(format!(
                "alpha21 = {} must satisfy 0 < alpha21 < alpha1 - 1 = {}",
                self.alpha21,
                self.alpha1 - 1
            )));
        }
        Ok(())
    }

    pub(crate) fn checked(&self) -> [Checked; 5] {
        [
            Checked::new(self.alpha1),
            Checked::new(self.alpha2),
            Checked::new(self.alpha3),
            Checked::new(self.alpha4),
            Checked::new(self.alpha21),
        ]
    }

    /// `α4` as a count; valid parameters guarantee it is at least 2.
    pub fn alpha4_usize(&self) -> usize {
        self.alpha4 as usize
    }
}

impl fmt::Display for PseudoSymParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a1={}, a2={}, a3={}, a4={}, a21={})",
            self.alpha1, self.alpha2, self.alpha3, self.alpha4, self.alpha21
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorTuple {
    pub n1: i64,
    pub n2: i64,
    pub n3: i64,
    pub n4: i64,
}

impl GeneratorTuple {
    pub fn as_array(&self) -> [i64; 4] {
        [self.n1, self.n2, self.n3, self.n4]
    }

    pub fn is_ordered(&self) -> bool {
        self.n1 < self.n2 && self.n2 < self.n3 && self.n3 < self.n4
    }

    pub fn gcd(&self) -> i64 {
        self.as_array().into_iter().fold(0, gcd)
    }
}

impl fmt::Display for GeneratorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.n1, self.n2, self.n3, self.n4)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Komeda's generator formulas.
pub fn derive_generators(p: &PseudoSymParams) -> Result<GeneratorTuple> {
    p.validate()?;
    let [a1, a2, a3, a4, a21] = p.checked();
    let n1 = a2 * a3 * (a4 - 1) + 1;
    let n2 = a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3;
    let n3 = a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1;
    let n4 = a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2;
    Ok(GeneratorTuple {
        n1: n1.get("n1")?,
        n2: n2.get("n2")?,
        n3: n3.get("n3")?,
        n4: n4.get("n4")?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub cond4: bool,
    pub ordered: bool,
    pub coprime: bool,
}

impl ConditionReport {
    pub fn all(&self) -> bool {
        self.failing().is_empty()
    }

    /// Conditions (1)-(4) and `n1 < n2 < n3 < n4`; the basis and series
    /// formulas need nothing more, coprimality included.
    pub fn hypotheses_hold(&self) -> bool {
        self.cond1 && self.cond2 && self.cond3 && self.cond4 && self.ordered
    }

    /// Names of the conditions that fail, in a fixed order.
    pub fn failing(&self) -> Vec<&'static str> {
        [
            ("cond1", self.cond1),
            ("cond2", self.cond2),
            ("cond3", self.cond3),
            ("cond4", self.cond4),
            ("ordered", self.ordered),
            ("coprime", self.coprime),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

pub fn check_conditions(p: &PseudoSymParams) -> Result<ConditionReport> {
    let g = derive_generators(p)?;
    let (a1, a2, a3, a4, a21) = (p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21);
    Ok(ConditionReport {
        cond1: a1 > a4,
        cond2: a3 < a1 - a21,
        cond3: a4 < a2 + a3 - 1,
        cond4: a2 > a21 + 1,
        ordered: g.is_ordered(),
        coprime: g.gcd() == 1,
    })
}

/// Maximal factorization length `ord(s)` for every `s` in `[0, bound]`.
#[derive(Debug, Clone)]
pub struct OrderTable {
    bound: usize,
    ord: Vec<Option<u32>>,
}

impl OrderTable {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn ord(&self, s: usize) -> Option<u32> {
        self.ord.get(s).copied().flatten()
    }

    pub fn in_semigroup(&self, s: usize) -> bool {
        self.ord(s).is_some()
    }
}

pub fn compute_order_table(generators: &[i64], bound: usize) -> OrderTable {
    let gens: Vec<usize> = generators
        .iter()
        .filter(|&&n| n > 0)
        .map(|&n| n as usize)
        .collect();
    let mut ord: Vec<Option<u32>> = vec![None; bound + 1];
    ord[0] = Some(0);
    for s in 1..=bound {
        ord[s] = gens
            .iter()
            .filter(|&&n| n <= s)
            .filter_map(|&n| ord[s - n].map(|o| o + 1))
            .max();
    }
    OrderTable { bound, ord }
}

/// `H(n) = #{s in S : ord(s) = n}` for `n = 0..=depth`.
///
/// Any `s` with `ord(s) <= depth` satisfies `s <= depth * max(generators)`,
/// so the table is built to that bound.
pub fn oracle_hilbert(generators: &[i64], depth: usize) -> Vec<u64> {
    let largest = generators.iter().copied().max().unwrap_or(1).max(1) as usize;
    let bound = depth * largest;
    let table = compute_order_table(generators, bound);
    let mut h = vec![0u64; depth + 1];
    for s in 0..=bound {
        if let Some(o) = table.ord(s) {
            if (o as usize) <= depth {
                h[o as usize] += 1;
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> PseudoSymParams {
        PseudoSymParams::new(21, 11, 7, 4, 5).unwrap()
    }

    #[test]
    fn example_generators() {
        let g = derive_generators(&example1()).unwrap();
        assert_eq!(g.as_array(), [232, 237, 531, 1447]);
        let g = derive_generators(&PseudoSymParams::new(60, 20, 8, 6, 10).unwrap()).unwrap();
        assert_eq!(g.as_array(), [801, 831, 5010, 8610]);
    }

    #[test]
    fn n2_spot_check() {
        assert_eq!(5 * 7 * 4 + 15 * 6 + 7, 237);
        assert_eq!(derive_generators(&example1()).unwrap().n2, 237);
    }

    #[test]
    fn overflow_is_reported() {
        let p = PseudoSymParams::new(i64::MAX / 2, 3, 4, 5, 1).unwrap();
        assert!(matches!(
            derive_generators(&p),
            Err(Error::ArithmeticOverflow(_))
        ));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(PseudoSymParams::new(1, 3, 3, 3, 1).is_err());
        assert!(PseudoSymParams::new(5, 3, 3, 3, 4).is_err());
        assert!(PseudoSymParams::new(5, 3, 3, 3, 0).is_err());
        assert!(PseudoSymParams::new(5, 3, 3, 3, 3).is_ok());
    }

    #[test]
    fn conditions() {
        assert!(check_conditions(&example1()).unwrap().all());
        // the second worked example has gcd 3
        let p = PseudoSymParams::new(60, 20, 8, 6, 10).unwrap();
        let r = check_conditions(&p).unwrap();
        assert!(r.hypotheses_hold());
        assert_eq!(r.failing(), vec!["coprime"]);
        assert_eq!(derive_generators(&p).unwrap().gcd(), 3);
        let p = PseudoSymParams::new(21, 3, 7, 4, 2).unwrap();
        let r = check_conditions(&p).unwrap();
        assert!(!r.cond4);
        assert!(r.failing().contains(&"cond4"));
    }

    #[test]
    fn order_table_small() {
        let t = compute_order_table(&[2, 3], 10);
        assert_eq!(t.ord(4), Some(2));
        assert_eq!(t.ord(0), Some(0));
        assert_eq!(t.ord(1), None);
        assert_eq!(t.ord(9), Some(4));
        assert!(!t.in_semigroup(1));
    }

    #[test]
    fn oracle_small() {
        assert_eq!(oracle_hilbert(&[2, 3], 3), vec![1, 2, 2, 2]);
        assert_eq!(oracle_hilbert(&[1], 2), vec![1, 1, 1]);
    }

    #[test]
    fn oracle_example1_prefix() {
        let g = derive_generators(&example1()).unwrap();
        assert_eq!(oracle_hilbert(&g.as_array(), 4), vec![1, 4, 10, 20, 32]);
    }
}
