//! Closed-form numerators `P`, `P1`, `P2` and the second Hilbert series `Q`.
//!
//! Every range `Σ_{j=a}^{b}` with `b < a` is empty.

use crate::checked::Checked;
use crate::error::Result;
use crate::family::SParameters;
use crate::poly::UniPoly;
use crate::semigroup::PseudoSymParams;

pub(crate) fn t(e: impl Into<Checked>) -> Result<UniPoly> {
    UniPoly::monomial(e)
}

pub(crate) fn omt(e: impl Into<Checked>) -> Result<UniPoly> {
    UniPoly::one_minus(e)
}

pub(crate) fn run(lo: impl Into<Checked>, hi: impl Into<Checked>) -> Result<UniPoly> {
    UniPoly::run(lo, hi)
}

pub(crate) fn prod(factors: &[&UniPoly]) -> Result<UniPoly> {
    UniPoly::product(factors)
}

/// `Σ_{i=1}^{α4-1} Σ_{j=s_{i-1}}^{s_i-1} t^{jα1 + ((α4-1)j+i+1)α21 + α3 - j}`.
pub fn t_sum(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
    let [a1, _, a3, a4, a21] = p.checked();
    let mut out = UniPoly::zero();
    for i in 1..p.alpha4 {
        for j in s.get(i - 1)..s.get(i) {
            out = out.add(&t(j * a1 + ((a4 - 1) * j + i + 1) * a21 + a3 - j)?)?;
        }
    }
    Ok(out)
}

/// `Σ_{j=0}^{α4-2} t^{((α4-1)s_j+j)α2 + α4 - j}`.
pub fn y_sum(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
    let [_, a2, _, a4, _] = p.checked();
    let mut out = UniPoly::zero();
    for j in 0..p.alpha4 - 1 {
        out = out.add(&t(((a4 - 1) * s.get(j) + j) * a2 + a4 - j)?)?;
    }
    Ok(out)
}

/// `Σ_{j=lo}^{hi} t^{jα2 + α4 - j + shift}`.
fn diagonal(p: &PseudoSymParams, lo: i64, hi: i64, shift: i64) -> Result<UniPoly> {
    let [_, a2, _, a4, _] = p.checked();
    let mut out = UniPoly::zero();
    for j in lo..=hi {
        out = out.add(&t(j * a2 + a4 - j + shift)?)?;
    }
    Ok(out)
}

/// Numerator of the Hilbert series over `(1-t)^4`.
pub fn closed_form_p(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
    let [_, a2, a3, a4, a21] = p.checked();
    let a4v = p.alpha4;
    let one_t = omt(1)?;
    let one_t_sq = one_t.mul(&one_t)?;
    let top = ((a4 - 1) * s.last() + a4 - 1) * a2 + 1;

    let mut r = UniPoly::one().sub(&t(a4)?)?;
    r = r.sub(&prod(&[&t(a4)?, &one_t, &omt(a21)?])?)?;
    r = r.sub(&prod(&[&t(top)?, &one_t_sq])?)?;
    r = r.sub(&one_t.mul(&diagonal(p, 1, a4v - 1, 0)?)?)?;
    let inner = UniPoly::one()
        .sub(&t((a4 - 2) * a2 + 1)?)?
        .sub(&omt(a2)?.mul(&diagonal(p, 0, a4v - 3, -1)?)?)?;
    r = r.sub(&t(a21 + 1)?.mul(&inner)?)?;
    r = r.sub(&prod(&[&one_t_sq, &omt(a21)?, &y_sum(p, s)?])?)?;
    r = r.sub(&prod(&[&omt((a4 - 1) * a2)?, &one_t_sq, &t_sum(p, s)?])?)?;
    let bracket = prod(&[&omt(a21 + 1)?, &omt((a4 - 1) * a2)?])?.sub(&prod(&[
        &omt(a2)?,
        &omt(a21)?,
        &diagonal(p, 0, a4v - 2, -1)?,
    ])?)?;
    r.sub(&t(a3)?.mul(&bracket)?)
}

/// `P / (1-t)`.
pub fn closed_form_p1(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
    let [_, a2, a3, a4, a21] = p.checked();
    let a4v = p.alpha4;
    let one_t = omt(1)?;
    let top = ((a4 - 1) * s.last() + a4 - 1) * a2 + 1;

    let mut r =
        omt(a21 + 1)?.mul(&run(0, a4 - 2)?.sub(&t(a3)?.mul(&run(0, (a4 - 1) * a2 - 1)?)?)?)?;
    r = r.add(&t(a4 - 1)?.mul(&omt((a4 - 1) * (a2 - 1) + 1)?)?)?;
    let tail = UniPoly::one().sub(&t(a3 - 1)?.mul(&run(0, a2 - 1)?)?)?;
    r = r.sub(&prod(&[&omt(a21)?, &diagonal(p, 0, a4v - 2, 0)?, &tail])?)?;
    r = r.sub(&t(top)?.mul(&one_t)?)?;
    r = r.sub(&prod(&[&one_t, &omt(a21)?, &y_sum(p, s)?])?)?;
    r.sub(&prod(&[&omt((a4 - 1) * a2)?, &one_t, &t_sum(p, s)?])?)
}

fn p2_with(p: &PseudoSymParams, s: &SParameters, second: UniPoly) -> Result<UniPoly> {
    let [_, a2, a3, a4, a21] = p.checked();
    let a4v = p.alpha4;
    let mut r = prod(&[&omt(a3 + a21)?, &t(a4 - 1)?, &run(0, (a4 - 1) * a2 - a4)?])?;
    r = r.sub(&second)?;
    r = r.sub(&prod(&[
        &omt(a3 - 1)?,
        &run(0, a21 - 1)?,
        &diagonal(p, 1, a4v - 2, 0)?,
    ])?)?;
    r = r.add(&t((a4 - 1) * a2)?.mul(&omt((a4 - 1) * s.last() * a2 + 1)?)?)?;
    r = r.add(&prod(&[&omt(a3)?, &run(0, a21)?, &run(0, a4 - 2)?])?)?;
    r = r.sub(&omt(a21)?.mul(&y_sum(p, s)?)?)?;
    r.sub(&omt((a4 - 1) * a2)?.mul(&t_sum(p, s)?)?)
}

/// `P / (1-t)^2`.
pub fn closed_form_p2(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
    let [_, a2, a3, a4, a21] = p.checked();
    let second = prod(&[&omt((a4 - 1) * a2 + a3 - a4)?, &t(a4)?, &run(0, a21 - 1)?])?;
    p2_with(p, s, second)
}

fn q_with(p: &PseudoSymParams, s: &SParameters, band: UniPoly) -> Result<UniPoly> {
    let [_, a2, a3, a4, a21] = p.checked();
    let a4v = p.alpha4;
    let mut r = prod(&[
        &run(0, a3 + a21 - 1)?,
        &t(a4 - 1)?,
        &run(0, (a4 - 1) * a2 - a4)?,
    ])?;
    r = r.add(&t((a4 - 1) * a2)?.mul(&run(0, (a4 - 1) * s.last() * a2)?)?)?;
    r = r.add(&prod(&[&t(a21)?, &run(0, a3 - 1)?, &run(0, a4 - 2)?])?)?;
    r = r.sub(&run(0, (a4 - 1) * a2 - 1)?.mul(&t_sum(p, s)?)?)?;
    let bracket = prod(&[&run(0, a3 - 1)?, &run(0, a4 - 2)?])?
        .sub(&band)?
        .sub(&y_sum(p, s)?)?
        .sub(&run(0, a3 - 2)?.mul(&diagonal(p, 1, a4v - 2, 0)?)?)?;
    r.add(&run(0, a21 - 1)?.mul(&bracket)?)
}

/// `P / (1-t)^3`.
pub fn closed_form_q(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
    let [_, a2, a3, a4, _] = p.checked();
    let band = t(a4)?.mul(&run(0, (a4 - 1) * a2 + a3 - a4 - 1)?)?;
    q_with(p, s, band)
}

/// The seven-term form of `Q`; terms are numbered as in
/// [`simplified_q_terms`].
pub fn closed_form_q_simplified(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
    simplified_q_terms(p, s)?
        .iter()
        .try_fold(UniPoly::zero(), |acc, term| acc.add(term))
}

/// The seven signed terms of the simplified `Q`:
///
/// 1. `t^{α4-1} Σ_0^{(α4-1)α2-α4}`
/// 2. `t^{α4+α21} Σ_0^{α3-2} Σ_0^{α2-α21-2} Σ_{j=0}^{α4-2} t^{j(α2-1)}`
/// 3. `t^{(α4-1)α2} Σ_0^{(α4-1)s_{α4-1}α2}`
/// 4. `t^{α21} Σ_0^{α3-1} Σ_0^{α4-2}`
/// 5. `-Σ_0^{(α4-1)α2-1} · T`
/// 6. `Σ_0^{α21-1} Σ_0^{α3-1} Σ_0^{α4-2}`
/// 7. `-Σ_0^{α21-1} · Y`
pub fn simplified_q_terms(p: &PseudoSymParams, s: &SParameters) -> Result<[UniPoly; 7]> {
    let [_, a2, a3, a4, a21] = p.checked();
    Ok([
        t(a4 - 1)?.mul(&run(0, (a4 - 1) * a2 - a4)?)?,
        prod(&[
            &t(a4 + a21)?,
            &run(0, a3 - 2)?,
            &run(0, a2 - a21 - 2)?,
            &UniPoly::strided(0, a4 - 2, a2 - 1, 0)?,
        ])?,
        t((a4 - 1) * a2)?.mul(&run(0, (a4 - 1) * s.last() * a2)?)?,
        prod(&[&t(a21)?, &run(0, a3 - 1)?, &run(0, a4 - 2)?])?,
        run(0, (a4 - 1) * a2 - 1)?.mul(&t_sum(p, s)?)?.neg(),
        prod(&[&run(0, a21 - 1)?, &run(0, a3 - 1)?, &run(0, a4 - 2)?])?,
        run(0, a21 - 1)?.mul(&y_sum(p, s)?)?.neg(),
    ])
}

/// Uncorrected variants of `P2`, `Q` and simplified `Q`. They disagree with the
/// algorithmic series whenever `α4 >= 3`; kept for discrepancy reports.
pub mod variant {
    use super::*;

    pub fn p2(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
        let [_, a2, a3, a4, a21] = p.checked();
        let second = prod(&[
            &omt(a2 + a3 - 2)?,
            &t((a4 - 2) * a2 + 2)?,
            &run(0, a21 - 1)?,
        ])?;
        p2_with(p, s, second)
    }

    pub fn q(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
        let [_, a2, a3, a4, _] = p.checked();
        let band = t((a4 - 2) * a2 + 2)?.mul(&run(0, a2 + a3 - 3)?)?;
        q_with(p, s, band)
    }

    pub fn q_simplified(p: &PseudoSymParams, s: &SParameters) -> Result<UniPoly> {
        let [_, a2, a3, a4, a21] = p.checked();
        let terms = [
            prod(&[&t(a4 - 1)?, &run(0, a3 + a21 - 1)?, &run(0, a2 - 1)?])?,
            prod(&[
                &t(a4 + a2 - 1 + a21)?,
                &run(0, a2 - a21 - 2)?,
                &run(0, a3 - 2)?,
                &UniPoly::strided(0, a4 - 3, a2 - 1, 0)?,
            ])?,
            t((a4 - 1) * a2)?.mul(&run(0, (a4 - 1) * s.last() * a2)?)?,
            prod(&[&t(a21)?, &run(0, a3 - 1)?, &run(0, a4 - 2)?])?,
            run(0, (a4 - 1) * a2 - 1)?.mul(&t_sum(p, s)?)?.neg(),
            prod(&[&run(0, a21 - 1)?, &run(0, a3 - 1)?, &run(0, a4 - 2)?])?,
            run(0, a21 - 1)?.mul(&y_sum(p, s)?)?.neg(),
            prod(&[
                &t(a4 + a2 + a3 - 2)?,
                &run(0, a21 - 1)?,
                &run(0, (a4 - 3) * (a2 - 1) - a3)?,
            ])?,
            t(a4 + a2 + a3 + a21 - 2)?.mul(&run(0, (a4 - 3) * a2 - a3 - a21 - 2)?)?,
        ];
        terms.iter().try_fold(UniPoly::zero(), |acc, x| acc.add(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::compute_s;
    use crate::poly::divide_exact;

    fn ex1() -> (PseudoSymParams, SParameters) {
        let p = PseudoSymParams::new(21, 11, 7, 4, 5).unwrap();
        let s = compute_s(&p).unwrap();
        (p, s)
    }

    #[test]
    fn chain_of_divisions() {
        let (p, s) = ex1();
        let big_p = closed_form_p(&p, &s).unwrap();
        assert_eq!(big_p.coeff(0), 1);
        assert_eq!(&big_p.coeffs()[..8], &[1, 0, 0, 0, -3, 3, -2, -1]);
        assert_eq!(
            divide_exact(&big_p, 1).unwrap(),
            closed_form_p1(&p, &s).unwrap()
        );
        assert_eq!(
            divide_exact(&big_p, 2).unwrap(),
            closed_form_p2(&p, &s).unwrap()
        );
        let q = closed_form_q(&p, &s).unwrap();
        assert_eq!(divide_exact(&big_p, 3).unwrap(), q);
        assert_eq!(closed_form_q_simplified(&p, &s).unwrap(), q);
        assert_eq!(q.eval_at_one(), 232);
        assert_eq!(&q.coeffs()[..10], &[1, 3, 6, 10, 12, 15, 17, 17, 15, 14]);
    }

    #[test]
    fn variants_differ_at_alpha4_4() {
        let (p, s) = ex1();
        let q = closed_form_q(&p, &s).unwrap();
        let alt = variant::q(&p, &s).unwrap();
        assert_eq!(alt.coeff(4), 13);
        assert_eq!(q.coeff(4), 12);
        assert_ne!(variant::q_simplified(&p, &s).unwrap(), q);
        assert_ne!(
            variant::p2(&p, &s).unwrap(),
            closed_form_p2(&p, &s).unwrap()
        );
    }
}
