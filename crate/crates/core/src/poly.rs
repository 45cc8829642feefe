//! Dense integer polynomials in `t`, exact division by powers of `1 - t`, and
//! a sparse Laurent variant for identities whose ranges may run backwards.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::checked::Checked;
use crate::error::{Error, Result};

/// Degrees beyond this are treated as a formula bug rather than allocated.
pub const MAX_DEGREE: i64 = 1 << 24;

/// Canonical dense polynomial: `coeffs[i]` is the coefficient of `t^i` and
/// the last stored coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UniPoly {
    coeffs: Vec<i64>,
}

fn degree_index(e: i64) -> Result<usize> {
    if e < 0 {
        return Err(Error::InternalLimit(format!("negative power t^{e}")));
    }
    if e > MAX_DEGREE {
        return Err(Error::InternalLimit(format!(
            "degree {e} exceeds {MAX_DEGREE}"
        )));
    }
    Ok(e as usize)
}

fn exponent(e: impl Into<Checked>) -> Result<i64> {
    e.into().get("exponent")
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `c * t^e`.
    pub fn term(c: i64, e: impl Into<Checked>) -> Result<Self> {
        let e = degree_index(exponent(e)?)?;
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        Ok(Self::from_coeffs(coeffs))
    }

    /// `t^e`.
    pub fn monomial(e: impl Into<Checked>) -> Result<Self> {
        Self::term(1, e)
    }

    /// `Σ_{j=lo}^{hi} t^j`; zero when `hi < lo`.
    pub fn run(lo: impl Into<Checked>, hi: impl Into<Checked>) -> Result<Self> {
        Self::strided(lo, hi, 1, 0)
    }

    /// `Σ_{j=lo}^{hi} t^{j*step + shift}`; zero when `hi < lo`.
    pub fn strided(
        lo: impl Into<Checked>,
        hi: impl Into<Checked>,
        step: impl Into<Checked>,
        shift: impl Into<Checked>,
    ) -> Result<Self> {
        let (lo, hi) = (exponent(lo)?, exponent(hi)?);
        let (step, shift) = (exponent(step)?, exponent(shift)?);
        if hi < lo {
            return Ok(Self::zero());
        }
        let top = exponent(Checked::new(hi) * step + shift)?;
        let bottom = exponent(Checked::new(lo) * step + shift)?;
        let mut coeffs = vec![0i64; degree_index(top.max(bottom))? + 1];
        for j in lo..=hi {
            let e = degree_index(j * step + shift)?;
            coeffs[e] = coeffs[e]
                .checked_add(1)
                .ok_or(Error::ArithmeticOverflow("coefficient"))?;
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// `1 - t^e`.
    pub fn one_minus(e: impl Into<Checked>) -> Result<Self> {
        Self::one().sub(&Self::monomial(e)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = other
                .coeff(i)
                .checked_mul(sign)
                .and_then(|b| self.coeff(i).checked_add(b))
                .ok_or(Error::ArithmeticOverflow("coefficient"))?;
            out.push(v);
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = a
                    .checked_mul(b)
                    .and_then(|ab| out[i + j].checked_add(ab))
                    .ok_or(Error::ArithmeticOverflow("coefficient"))?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    /// Product of several factors.
    pub fn product(factors: &[&UniPoly]) -> Result<Self> {
        factors.iter().try_fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: impl Into<Checked>) -> Result<Self> {
        self.mul(&Self::monomial(e)?)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn min_coeff(&self) -> Option<i64> {
        self.coeffs.iter().copied().min()
    }

    /// Running sums `Σ_{j≤n} c_j` for `n = 0..len`.
    pub fn partial_sums(&self, len: usize) -> Vec<i64> {
        let mut acc = 0;
        (0..len)
            .map(|n| {
                acc += self.coeff(n);
                acc
            })
            .collect()
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }
}

/// Divides `f` by `(1 - t)^k`, checking the remainder at every step.
pub fn divide_exact(f: &UniPoly, k: usize) -> Result<UniPoly> {
    let mut cur = f.clone();
    for step in 1..=k {
        // f = (1 - t) q  ⇔  q_i = Σ_{j≤i} f_j and Σ f_j = 0
        let mut acc = 0i64;
        let mut q = Vec::with_capacity(cur.coeffs.len());
        for &c in &cur.coeffs {
            acc = acc
                .checked_add(c)
                .ok_or(Error::ArithmeticOverflow("quotient"))?;
            q.push(acc);
        }
        if acc != 0 {
            return Err(Error::NotDivisible {
                step,
                remainder: acc,
            });
        }
        cur = UniPoly::from_coeffs(q);
    }
    Ok(cur)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Sparse Laurent polynomial; used where a sum `Σ_{j=a}^{b}` with `b < a`
/// must be read as `(t^a - t^{b+1}) / (1 - t)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<i64, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn monomial(e: impl Into<Checked>) -> Result<Self> {
        let mut m = BTreeMap::new();
        m.insert(exponent(e)?, 1);
        Ok(Laurent(m))
    }

    /// Geometric-series reading of `Σ_{j=lo}^{hi} t^{j*step}`: for `hi < lo`
    /// this is `-Σ_{j=hi+1}^{lo-1} t^{j*step}`.
    pub fn sigma_strided(
        lo: impl Into<Checked>,
        hi: impl Into<Checked>,
        step: impl Into<Checked>,
    ) -> Result<Self> {
        let (lo, hi, step) = (exponent(lo)?, exponent(hi)?, exponent(step)?);
        let (a, b, sign) = if hi >= lo {
            (lo, hi, 1)
        } else {
            (hi + 1, lo - 1, -1)
        };
        if b - a > MAX_DEGREE {
            return Err(Error::InternalLimit(format!("range {a}..={b} too long")));
        }
        let mut out = Laurent::zero();
        for j in a..=b {
            out.add_term(exponent(Checked::new(j) * step)?, sign)?;
        }
        Ok(out)
    }

    pub fn sigma(lo: impl Into<Checked>, hi: impl Into<Checked>) -> Result<Self> {
        Self::sigma_strided(lo, hi, 1)
    }

    fn add_term(&mut self, e: i64, c: i64) -> Result<()> {
        let slot = self.0.entry(e).or_insert(0);
        *slot = slot
            .checked_add(c)
            .ok_or(Error::ArithmeticOverflow("coefficient"))?;
        if *slot == 0 {
            self.0.remove(&e);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(e, -c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Laurent::zero();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &other.0 {
                let e = e1
                    .checked_add(e2)
                    .ok_or(Error::ArithmeticOverflow("exponent"))?;
                let c = c1
                    .checked_mul(c2)
                    .ok_or(Error::ArithmeticOverflow("coefficient"))?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    pub fn product(factors: &[&Laurent]) -> Result<Self> {
        let mut acc = Laurent::monomial(0)?;
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&UniPoly> for Laurent {
    fn from(p: &UniPoly) -> Self {
        Laurent(
            p.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i as i64, c))
                .collect(),
        )
    }
}
