//! First and second Hilbert series of the tangent cone, computed both
//! algorithmically and from closed forms, plus the Hilbert function report.

mod closed;
mod ideal;
mod identities;

use serde::{Deserialize, Serialize};

pub use closed::{
    closed_form_p, closed_form_p1, closed_form_p2, closed_form_q, closed_form_q_simplified,
    simplified_q_terms, t_sum, variant, y_sum,
};
pub use ideal::{bayer_stillman_p, colon, staircase_numerator, MonomialIdeal, PivotRule};
pub use identities::{identity_checks, variant_checks, IdentityCheck};

use crate::error::{Error, Result};
use crate::family::{
    build_family, derivation_pivot_order, leading_forms, starred_forms, BasisFamily,
};
use crate::poly::{divide_exact, UniPoly};
use crate::semigroup::{oracle_hilbert, PseudoSymParams};

/// Bayer–Stillman run that pivots on the leading forms in the order used by
/// the closed-form derivation.
pub fn bayer_stillman_derivation_order(fam: &BasisFamily) -> Result<UniPoly> {
    let ideal = MonomialIdeal::new(derivation_pivot_order(fam)?);
    bayer_stillman_p(&ideal, PivotRule::InOrder)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub params: PseudoSymParams,
    #[serde(rename = "P")]
    pub p: UniPoly,
    #[serde(rename = "P1")]
    pub p1: UniPoly,
    #[serde(rename = "P2")]
    pub p2: UniPoly,
    #[serde(rename = "Q")]
    pub q: UniPoly,
    /// `H(0..=max(deg Q, oracle_depth))`.
    #[serde(rename = "H")]
    pub h: Vec<i64>,
    /// Least `n0` with `H(n) = H(n0)` for all `n >= n0`; equals `deg Q`.
    pub regularity_index: usize,
    pub multiplicity: i64,
    pub nondecreasing: bool,
    pub closed_form_agrees: bool,
    pub pivot_orders_agree: bool,
    pub oracle_depth: usize,
    pub oracle_agrees: bool,
    pub identities: Vec<IdentityCheck>,
    pub variant_checks: Vec<IdentityCheck>,
    /// Family members whose two monomials have equal degree.
    pub ties: usize,
}

impl HilbertReport {
    pub fn identities_hold(&self) -> bool {
        self.identities.iter().all(|c| c.holds)
    }
}

fn agree(what: &str, algorithmic: &UniPoly, closed: &UniPoly) -> Result<()> {
    if algorithmic != closed {
        return Err(Error::ConsistencyFailure(format!(
            "{what}: algorithmic {algorithmic} vs closed form {closed}"
        )));
    }
    Ok(())
}

pub fn hilbert_report(p: &PseudoSymParams, oracle_depth: usize) -> Result<HilbertReport> {
    let fam = build_family(p)?;
    let s = &fam.s;
    let ties = starred_forms(&fam)?.iter().filter(|f| f.is_tie()).count();
    let tc = leading_forms(&fam)?;

    let big_p = bayer_stillman_p(&tc.ideal(), PivotRule::MaxDegree)?;
    agree("P", &big_p, &closed_form_p(p, s)?)?;
    let pivot_orders_agree = bayer_stillman_derivation_order(&fam)? == big_p;
    let p1 = divide_exact(&big_p, 1)?;
    agree("P1", &p1, &closed_form_p1(p, s)?)?;
    let p2 = divide_exact(&p1, 1)?;
    agree("P2", &p2, &closed_form_p2(p, s)?)?;
    let q = divide_exact(&p2, 1)?;
    agree("Q", &q, &closed_form_q(p, s)?)?;
    agree("simplified Q", &q, &closed_form_q_simplified(p, s)?)?;

    let multiplicity = fam.generators.n1;
    if q.eval_at_one() != multiplicity {
        return Err(Error::ConsistencyFailure(format!(
            "Q(1) = {} but n1 = {multiplicity}",
            q.eval_at_one()
        )));
    }
    let regularity_index = q.degree().unwrap_or(0);
    let h = q.partial_sums(regularity_index.max(oracle_depth) + 1);
    let oracle = oracle_hilbert(&fam.generators.as_array(), oracle_depth);
    let oracle_agrees = oracle
        .iter()
        .zip(&h)
        .all(|(&o, &hv)| i64::try_from(o).ok() == Some(hv));

    Ok(HilbertReport {
        params: *p,
        nondecreasing: q.min_coeff().unwrap_or(0) >= 0,
        identities: identity_checks(p, s)?,
        variant_checks: variant_checks(p, s)?,
        p: big_p,
        p1,
        p2,
        q,
        h,
        regularity_index,
        multiplicity,
        closed_form_agrees: true,
        pivot_orders_agree,
        oracle_depth,
        oracle_agrees,
        ties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_report() {
        let p = PseudoSymParams::new(21, 11, 7, 4, 5).unwrap();
        let r = hilbert_report(&p, 10).unwrap();
        assert!(r.nondecreasing);
        assert!(r.oracle_agrees);
        assert!(r.pivot_orders_agree);
        assert!(r.identities_hold());
        assert_eq!(&r.h[..5], &[1, 4, 10, 20, 32]);
        assert_eq!(r.multiplicity, 232);
        assert_eq!(r.p.degree(), Some(168));
        assert_eq!(r.q.degree(), Some(165));
        assert_eq!(r.regularity_index, 165);
        let n0 = r.regularity_index;
        assert_ne!(r.h[n0 - 1], r.h[n0]);
        assert_eq!(r.h[n0], 232);
    }
}
