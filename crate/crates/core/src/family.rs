//! The parameters `s_j` and the binomial family that forms the standard
//! basis of the defining ideal, together with its leading forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::checked::Checked;
use crate::error::{Error, Result};
use crate::hilbert::MonomialIdeal;
use crate::local::{is_toric, leading_form, Binomial, LeadingForm};
use crate::monomial::Monomial;
use crate::semigroup::{check_conditions, derive_generators, GeneratorTuple, PseudoSymParams};

const MAX_S: i64 = 10_000_000;

/// `s_0, …, s_{α4-1}`, with `s_{-1} = 0` implied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SParameters(pub Vec<i64>);

impl SParameters {
    /// `s_j` for `j >= -1`.
    pub fn get(&self, j: i64) -> i64 {
        if j < 0 {
            0
        } else {
            self.0[j as usize]
        }
    }

    pub fn last(&self) -> i64 {
        *self.0.last().expect("alpha4 >= 2")
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for SParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `((α4-1)s+j)α2 + α4 - j < sα1 + ((α4-1)s+j+1)α21 + α3 - s`.
pub fn s_inequality(p: &PseudoSymParams, j: i64, s: i64) -> Result<bool> {
    let [a1, a2, a3, a4, a21] = p.checked();
    let k = (a4 - 1) * s + j;
    let lhs = k * a2 + a4 - j;
    let rhs = s * a1 + (k + 1) * a21 + a3 - s;
    Ok(lhs.get("s inequality")? < rhs.get("s inequality")?)
}

/// Least `s >= 0` satisfying the inequality, for each `j = 0..α4-1`.
///
/// The scan always starts at 0 so that a least value below `s_{j-1}` is
/// reported instead of being masked.
pub fn compute_s(p: &PseudoSymParams) -> Result<SParameters> {
    p.validate()?;
    let mut out = Vec::with_capacity(p.alpha4_usize());
    let mut previous = 0;
    for j in 0..p.alpha4 {
        let mut s = 0;
        while !s_inequality(p, j, s)? {
            s += 1;
            if s > MAX_S {
                return Err(Error::InternalLimit(format!("s_{j} exceeds {MAX_S}")));
            }
        }
        if s < previous {
            return Err(Error::MonotonicityViolation {
                j: j as usize,
                least: s,
                previous,
            });
        }
        previous = s;
        out.push(s);
    }
    Ok(SParameters(out))
}

/// The same values from the linear form of the inequality: `s·D > N_j`
/// with `D = α1 + (α4-1)α21 - 1 - (α4-1)α2` and
/// `N_j = jα2 + α4 - j - (j+1)α21 - α3`.
pub fn s_closed_form(p: &PseudoSymParams) -> Result<SParameters> {
    let [a1, a2, a3, a4, a21] = p.checked();
    let d = (a1 + (a4 - 1) * a21 - 1 - (a4 - 1) * a2).get("s denominator")?;
    if d <= 0 {
        return Err(Error::ConsistencyFailure(format!(
            "denominator {d} of the s_j ceiling is not positive"
        )));
    }
    let mut out = Vec::with_capacity(p.alpha4_usize());
    for j in 0..p.alpha4 {
        let n = (j * a2 + a4 - j - (j + 1) * a21 - a3).get("s numerator")?;
        out.push((n.div_euclid(d) + 1).max(0));
    }
    Ok(SParameters(out))
}

/// `jα2 + α4 < α1 + jα21 + j` for every `j = 0..α4-1`.
pub fn f1_exponent_bound_check(p: &PseudoSymParams) -> Result<bool> {
    let [a1, a2, _, a4, a21] = p.checked();
    for j in 0..p.alpha4 {
        let lhs = (j * a2 + a4).get("f1 bound lhs")?;
        let rhs = (a1 + j * a21 + j).get("f1 bound rhs")?;
        if lhs >= rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MemberName {
    F1(i64),
    F2,
    F3,
    F4,
    G(i64, i64),
}

impl fmt::Display for MemberName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemberName::F1(j) => write!(f, "f_{{1,{j}}}"),
            MemberName::F2 => f.write_str("f_2"),
            MemberName::F3 => f.write_str("f_3"),
            MemberName::F4 => f.write_str("f_4"),
            MemberName::G(j, i) => write!(f, "g_{{{j},{i}}}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Member {
    pub name: MemberName,
    pub binomial: Binomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFamily {
    pub params: PseudoSymParams,
    pub generators: GeneratorTuple,
    pub s: SParameters,
    /// `f_{1,0..α4-1}`, `f_2`, `f_3`, `f_4`, then `g_{j,i}` by `j` then `i`.
    pub members: Vec<Member>,
}

impl BasisFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn binomials(&self) -> Vec<Binomial> {
        self.members.iter().map(|m| m.binomial).collect()
    }

    pub fn get(&self, name: MemberName) -> Option<&Binomial> {
        self.members
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.binomial)
    }

    /// `2α4 + 3 + s_{α4-1}`.
    pub fn expected_len(&self) -> usize {
        (2 * self.params.alpha4 + 3 + self.s.last()) as usize
    }

    /// One `name = lead - tail` line per member.
    pub fn listing(&self) -> String {
        self.members
            .iter()
            .map(|m| format!("{} = {}\n", m.name, m.binomial))
            .collect()
    }

    pub fn all_toric(&self) -> Result<bool> {
        for m in &self.members {
            if !is_toric(&m.binomial, &self.generators)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn monomial(name: MemberName, exps: [Checked; 4]) -> Result<Monomial> {
    let mut vals = [0i64; 4];
    for (v, e) in vals.iter_mut().zip(exps) {
        *v = e.get("family exponent")?;
        if *v < 0 {
            return Err(Error::NegativeExponent(name.to_string()));
        }
    }
    Monomial::from_i64(vals)
}

fn binomial(name: MemberName, a: [Checked; 4], b: [Checked; 4]) -> Result<Member> {
    let binomial = Binomial::new(monomial(name, a)?, monomial(name, b)?)
        .ok_or_else(|| Error::ConsistencyFailure(format!("{name} is identically zero")))?;
    Ok(Member { name, binomial })
}

fn valid_params(p: &PseudoSymParams) -> Result<GeneratorTuple> {
    let report = check_conditions(p)?;
    if !report.hypotheses_hold() {
        return Err(Error::InvalidParams(format!(
            "{p} fails {}",
            report.failing().join(", ")
        )));
    }
    derive_generators(p)
}

pub fn build_family(p: &PseudoSymParams) -> Result<BasisFamily> {
    let generators = valid_params(p)?;
    let s = compute_s(p)?;
    let [a1, a2, a3, a4, a21] = p.checked();
    let zero = Checked::new(0);
    let one = Checked::new(1);
    let mut members = Vec::new();

    for j in 0..p.alpha4 {
        let name = MemberName::F1(j);
        members.push(binomial(
            name,
            [a1 + j * a21, zero, zero, zero],
            [zero, j * a2, one, a4 - j - 1],
        )?);
    }
    members.push(binomial(
        MemberName::F2,
        [zero, a2, zero, zero],
        [a21, zero, zero, one],
    )?);
    members.push(binomial(
        MemberName::F3,
        [zero, zero, a3, zero],
        [a1 - a21 - 1, one, zero, zero],
    )?);
    members.push(binomial(
        MemberName::F4,
        [zero, zero, zero, a4],
        [one, a2 - 1, a3 - 1, zero],
    )?);
    for j in 0..p.alpha4 {
        for i in s.get(j - 1)..=s.get(j) {
            let k = (a4 - 1) * i + j;
            members.push(binomial(
                MemberName::G(j, i),
                [zero, k * a2 + 1, zero, a4 - j - 1],
                [i * a1 + (k + 1) * a21 + 1, zero, a3 - i - 1, zero],
            )?);
        }
    }
    Ok(BasisFamily {
        params: *p,
        generators,
        s,
        members,
    })
}

/// The monomial each member's leading form must produce.
pub fn expected_leading_monomial(fam: &BasisFamily, name: MemberName) -> Result<Monomial> {
    let [a1, a2, a3, a4, a21] = fam.params.checked();
    let zero = Checked::new(0);
    let one = Checked::new(1);
    let exps = match name {
        MemberName::F1(j) => [zero, j * a2, one, a4 - (j + 1)],
        MemberName::F2 => [a21, zero, zero, one],
        MemberName::F3 => [zero, zero, a3, zero],
        MemberName::F4 => [zero, zero, zero, a4],
        MemberName::G(j, i) => {
            let k = (a4 - 1) * i + j;
            if i < fam.s.get(j) {
                [i * a1 + (k + 1) * a21 + 1, zero, a3 - (i + 1), zero]
            } else {
                [zero, k * a2 + 1, zero, a4 - (j + 1)]
            }
        }
    };
    monomial(name, exps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarredForm {
    pub name: MemberName,
    pub form: LeadingForm,
}

impl StarredForm {
    /// Both monomials of the member have the same degree.
    pub fn is_tie(&self) -> bool {
        matches!(self.form, LeadingForm::Binomial(_))
    }
}

/// Leading form of every member, checked against the expected monomials.
pub fn starred_forms(fam: &BasisFamily) -> Result<Vec<StarredForm>> {
    fam.members
        .iter()
        .map(|m| {
            let form = leading_form(&m.binomial);
            let expected = expected_leading_monomial(fam, m.name)?;
            // a tie's leading form is the whole binomial; the formula names
            // one of its terms, not necessarily the one the order prefers
            let matches = match form {
                LeadingForm::Monomial(lm) => lm == expected,
                LeadingForm::Binomial(b) => b.lead() == expected || b.tail() == expected,
            };
            if !matches {
                return Err(Error::LeadingFormMismatch {
                    member: m.name.to_string(),
                    expected: expected.to_string(),
                    found: form.to_string(),
                });
            }
            Ok(StarredForm { name: m.name, form })
        })
        .collect()
}

/// Minimal monomial generators of the ideal of leading forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentConeIdeal {
    pub gens: Vec<Monomial>,
}

impl TangentConeIdeal {
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.clone())
    }
}

pub fn leading_forms(fam: &BasisFamily) -> Result<TangentConeIdeal> {
    let monomials = starred_forms(fam)?
        .iter()
        .map(|s| s.form.leading_monomial())
        .collect();
    Ok(TangentConeIdeal {
        gens: MonomialIdeal::new(monomials).into_gens(),
    })
}

/// False when `X1` divides some minimal generator.
pub fn is_tangent_cone_cm(tc: &TangentConeIdeal) -> bool {
    !tc.gens.iter().any(|m| m.exps()[0] > 0)
}

/// Leading monomials in the pivot order of the closed-form derivation:
/// `g_{j,s_j}` for `j = α4-1..0`, then `g_{k,i}` for `k = α4-1..1` and
/// `i = s_k-1` down to `s_{k-1}`, then `f_4, f_3, f_2`, then
/// `f_{1,α4-1}..f_{1,0}`.
pub fn derivation_pivot_order(fam: &BasisFamily) -> Result<Vec<Monomial>> {
    let a4 = fam.params.alpha4;
    let mut names = Vec::new();
    for j in (0..a4).rev() {
        names.push(MemberName::G(j, fam.s.get(j)));
    }
    for k in (1..a4).rev() {
        let mut i = fam.s.get(k) - 1;
        while i >= fam.s.get(k - 1) {
            names.push(MemberName::G(k, i));
            i -= 1;
        }
    }
    names.extend([MemberName::F4, MemberName::F3, MemberName::F2]);
    for j in (0..a4).rev() {
        names.push(MemberName::F1(j));
    }
    names
        .into_iter()
        .map(|n| expected_leading_monomial(fam, n))
        .collect()
}
