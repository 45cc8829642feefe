//! Binomial arithmetic under the local order: s-polynomials, Mora's weak
//! normal form and the standard-basis criterion.
//!
//! Every element handled here has the shape `lead - tail` with coefficients
//! `+1, -1`. Differences of such binomials with a common leading term stay in
//! that shape, so no coefficient field is needed.

use std::cmp::Ordering;
use std::fmt;

use crate::checked::Checked;
use crate::error::{Error, Result};
use crate::monomial::{compare, Monomial};
use crate::semigroup::GeneratorTuple;

const MAX_REDUCTION_STEPS: usize = 1_000_000;

/// `lead - tail`, with `lead` the greater monomial under the local order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Binomial {
    lead: Monomial,
    tail: Monomial,
}

impl Binomial {
    /// Orients `a - b` so the greater monomial leads. `None` when `a == b`.
    pub fn new(a: Monomial, b: Monomial) -> Option<Binomial> {
        match compare(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, tail: b }),
            Ordering::Less => Some(Binomial { lead: b, tail: a }),
        }
    }

    /// Builds `c1*m1 + c2*m2`, which must be zero or a `±(u - v)` binomial.
    pub fn from_terms(c1: i64, m1: Monomial, c2: i64, m2: Monomial) -> Result<Option<Binomial>> {
        if m1 == m2 {
            return match c1.checked_add(c2) {
                Some(0) => Ok(None),
                _ => Err(Error::NonBinomialEscape(format!(
                    "{c1}*{m1} + {c2}*{m2} leaves a single term"
                ))),
            };
        }
        match (c1, c2) {
            (0, 0) => Ok(None),
            (1, -1) | (-1, 1) => Ok(Binomial::new(m1, m2)),
            _ => Err(Error::NonBinomialEscape(format!(
                "coefficients {c1}, {c2} on {m1}, {m2}"
            ))),
        }
    }

    pub fn lead(&self) -> Monomial {
        self.lead
    }

    pub fn tail(&self) -> Monomial {
        self.tail
    }

    /// `deg(tail) - deg(lead)`, nonnegative by orientation.
    pub fn ecart(&self) -> u64 {
        self.tail.degree() - self.lead.degree()
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Binomial {
        Binomial {
            lead: self.lead.mul(m),
            tail: self.tail.mul(m),
        }
    }

    /// True when both monomials are equal as multisets, i.e. `self` and
    /// `other` are the same binomial up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.tail)
    }
}

/// S-polynomial with respect to the lcm of the leading monomials.
pub fn spoly(f: &Binomial, g: &Binomial) -> Result<Option<Binomial>> {
    let l = f.lead.lcm(&g.lead);
    let mf = l.div(&f.lead).expect("lcm is divisible");
    let mg = l.div(&g.lead).expect("lcm is divisible");
    // mf*(lf - tf) - mg*(lg - tg) = mg*tg - mf*tf
    Binomial::from_terms(1, mg.mul(&g.tail), -1, mf.mul(&f.tail))
}

/// Mora's weak normal form of `f` with respect to `g`.
///
/// Reductors whose leading monomial divides `LM(h)` are drawn from the
/// growing set `T`, preferring minimal ecart (ties by position). When the
/// chosen reductor has larger ecart than `h`, `h` joins `T` first.
pub fn mora_nf(f: Option<Binomial>, g: &[Binomial]) -> Result<Option<Binomial>> {
    let Some(mut h) = f else {
        return Ok(None);
    };
    let mut t: Vec<Binomial> = g.to_vec();
    for _ in 0..MAX_REDUCTION_STEPS {
        let reductor = t
            .iter()
            .enumerate()
            .filter(|(_, r)| r.lead.divides(&h.lead))
            .min_by_key(|(i, r)| (r.ecart(), *i))
            .map(|(_, r)| *r);
        let Some(r) = reductor else {
            return Ok(Some(h));
        };
        if r.ecart() > h.ecart() {
            t.push(h);
        }
        match spoly(&h, &r)? {
            None => return Ok(None),
            Some(next) => h = next,
        }
    }
    Err(Error::InternalLimit(format!(
        "Mora reduction exceeded {MAX_REDUCTION_STEPS} steps"
    )))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasisVerdict {
    pub verified: bool,
    /// First pair `(i, j)` whose s-polynomial has a nonzero normal form.
    pub witness: Option<(usize, usize, Binomial)>,
    pub pairs_checked: usize,
}

/// Checks that every s-polynomial reduces to zero modulo `g`.
pub fn is_standard_basis(g: &[Binomial]) -> Result<StandardBasisVerdict> {
    let mut pairs_checked = 0;
    for i in 0..g.len() {
        for j in (i + 1)..g.len() {
            pairs_checked += 1;
            // coprime leading monomials reduce to zero (product criterion)
            if g[i].lead.is_coprime(&g[j].lead) {
                continue;
            }
            let s = spoly(&g[i], &g[j])?;
            if let Some(nf) = mora_nf(s, g)? {
                return Ok(StandardBasisVerdict {
                    verified: false,
                    witness: Some((i, j, nf)),
                    pairs_checked,
                });
            }
        }
    }
    Ok(StandardBasisVerdict {
        verified: true,
        witness: None,
        pairs_checked,
    })
}

/// Least homogeneous summand of a binomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadingForm {
    Monomial(Monomial),
    Binomial(Binomial),
}

impl LeadingForm {
    /// Leading monomial of the form under the local order.
    pub fn leading_monomial(&self) -> Monomial {
        match self {
            LeadingForm::Monomial(m) => *m,
            LeadingForm::Binomial(b) => b.lead,
        }
    }
}

impl fmt::Display for LeadingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeadingForm::Monomial(m) => m.fmt(f),
            LeadingForm::Binomial(b) => b.fmt(f),
        }
    }
}

pub fn leading_form(f: &Binomial) -> LeadingForm {
    if f.lead.degree() < f.tail.degree() {
        LeadingForm::Monomial(f.lead)
    } else {
        LeadingForm::Binomial(*f)
    }
}

/// `Σ e_i n_i`.
pub fn s_degree(m: &Monomial, g: &GeneratorTuple) -> Result<i64> {
    m.exps()
        .iter()
        .zip(g.as_array())
        .fold(Checked::new(0), |acc, (&e, n)| {
            acc + Checked::new(e as i64) * n
        })
        .get("s-degree")
}

/// Both monomials map to the same power of `t`.
pub fn is_toric(f: &Binomial, g: &GeneratorTuple) -> Result<bool> {
    Ok(s_degree(&f.lead, g)? == s_degree(&f.tail, g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn b(a: &str, c: &str) -> Binomial {
        Binomial::new(m(a), m(c)).unwrap()
    }

    #[test]
    fn orientation() {
        let f = b("X2^11", "X1^5*X4");
        assert_eq!(f.lead(), m("X1^5*X4"));
        assert_eq!(f.ecart(), 5);
        assert!(Binomial::new(m("X1"), m("X1")).is_none());
    }

    #[test]
    fn from_terms_closure() {
        assert_eq!(Binomial::from_terms(1, m("X1"), -1, m("X1")).unwrap(), None);
        assert!(matches!(
            Binomial::from_terms(1, m("X1"), 1, m("X1")),
            Err(Error::NonBinomialEscape(_))
        ));
        assert!(matches!(
            Binomial::from_terms(2, m("X1"), -1, m("X2")),
            Err(Error::NonBinomialEscape(_))
        ));
    }

    #[test]
    fn spoly_self_is_zero() {
        let f = b("X1^2", "X2^5");
        assert_eq!(spoly(&f, &f).unwrap(), None);
    }

    #[test]
    fn spoly_small() {
        // x^2 - y^5, x^2 - y^3 -> y^3 - y^5 with lead y^3
        let r = spoly(&b("X1^2", "X2^5"), &b("X1^2", "X2^3"))
            .unwrap()
            .unwrap();
        assert_eq!(r.lead(), m("X2^3"));
        assert_eq!(r.tail(), m("X2^5"));
    }

    #[test]
    fn spoly_f2_f4_example1() {
        let f2 = b("X2^11", "X1^5*X4");
        let f4 = b("X4^4", "X1*X2^10*X3^6");
        let g00 = b("X1^6*X3^6", "X2*X4^3");
        let expected = g00.mul_monomial(&m("X2^10"));
        assert_eq!(spoly(&f2, &f4).unwrap(), Some(expected));
    }

    #[test]
    fn nf_shortcut_k3() {
        let f = b("X1^3", "X2^3");
        let g = [b("X1", "X2")];
        assert_eq!(mora_nf(Some(f), &g).unwrap(), None);
    }

    #[test]
    fn nf_self_and_zero() {
        let g = b("X1^2*X3", "X2^4");
        assert_eq!(mora_nf(Some(g), &[g]).unwrap(), None);
        assert_eq!(mora_nf(None, &[g]).unwrap(), None);
    }

    #[test]
    fn nf_irreducible() {
        let f = b("X2^3", "X2^5");
        let g = [b("X1^2", "X2^5"), b("X1^2", "X2^3")];
        assert_eq!(mora_nf(Some(f), &g).unwrap(), Some(f));
    }

    #[test]
    fn standard_basis_small_cases() {
        let single = [b("X1^2", "X2^5")];
        assert!(is_standard_basis(&single).unwrap().verified);
        let g = [b("X1^2", "X2^5"), b("X1^2", "X2^3")];
        let v = is_standard_basis(&g).unwrap();
        assert!(!v.verified);
        let (i, j, w) = v.witness.unwrap();
        assert_eq!((i, j), (0, 1));
        assert_eq!(w, b("X2^3", "X2^5"));
    }

    #[test]
    fn leading_forms() {
        let f2 = b("X2^11", "X1^5*X4");
        assert_eq!(leading_form(&f2), LeadingForm::Monomial(m("X1^5*X4")));
        let h = b("X1", "X2");
        assert_eq!(leading_form(&h), LeadingForm::Binomial(h));
        let g34 = b("X2^166", "X1^165*X3^2");
        assert_eq!(leading_form(&g34), LeadingForm::Monomial(m("X2^166")));
    }

    #[test]
    fn toric_degrees() {
        let g = GeneratorTuple {
            n1: 232,
            n2: 237,
            n3: 531,
            n4: 1447,
        };
        assert_eq!(s_degree(&Monomial::ONE, &g).unwrap(), 0);
        assert_eq!(s_degree(&m("X2^11"), &g).unwrap(), 2607);
        assert!(is_toric(&b("X2^11", "X1^5*X4"), &g).unwrap());
        assert_eq!(s_degree(&m("X1^21"), &g).unwrap(), 4872);
        assert!(is_toric(&b("X1^21", "X3*X4^3"), &g).unwrap());
        assert!(!is_toric(&b("X1^21", "X3*X4^2"), &g).unwrap());
    }
}
