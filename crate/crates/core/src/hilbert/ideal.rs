//! Monomial ideals and the Bayer–Stillman recursion for the numerator of
//! their Hilbert series.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, NVARS};
use crate::poly::UniPoly;

const MAX_DEPTH: usize = 10_000;

/// Minimal generating set. Insertion order is preserved so a caller can
/// dictate the pivot sequence; compare with [`MonomialIdeal::canonical`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops duplicates and generators divisible by another generator.
    pub fn new(gens: Vec<Monomial>) -> Self {
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let redundant = gens.iter().enumerate().any(|(k, h)| {
                // equal generators: keep the first occurrence only
                h.divides(g) && (h != g || k < i)
            });
            if !redundant {
                kept.push(*g);
            }
        }
        MonomialIdeal { gens: kept }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Monomial> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Generators sorted by exponent vector.
    pub fn canonical(&self) -> Vec<Monomial> {
        let mut g = self.gens.clone();
        g.sort_by_key(|m| m.exps());
        g
    }
}

/// `I : w`, generated by `m / gcd(m, w)`.
pub fn colon(ideal: &MonomialIdeal, w: &Monomial) -> MonomialIdeal {
    MonomialIdeal::new(ideal.gens.iter().map(|m| m.div_by_gcd(w)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// A generator of largest degree (last such in generator order).
    #[default]
    MaxDegree,
    /// The first generator in insertion order.
    InOrder,
}

/// `P(I) = P(J) - t^{deg w} P(J : w)` where `I = J + ⟨w⟩`.
pub fn bayer_stillman_p(ideal: &MonomialIdeal, rule: PivotRule) -> Result<UniPoly> {
    recurse(ideal, rule, 0)
}

fn recurse(ideal: &MonomialIdeal, rule: PivotRule, depth: usize) -> Result<UniPoly> {
    if depth > MAX_DEPTH {
        return Err(Error::InternalLimit(format!(
            "Bayer-Stillman recursion deeper than {MAX_DEPTH}"
        )));
    }
    match ideal.gens.len() {
        0 => return Ok(UniPoly::one()),
        1 => return UniPoly::one_minus(ideal.gens[0].degree() as i64),
        _ => {}
    }
    if pairwise_coprime(ideal) {
        // complete intersection: the numerator factors
        return ideal.gens.iter().try_fold(UniPoly::one(), |acc, g| {
            acc.mul(&UniPoly::one_minus(g.degree() as i64)?)
        });
    }
    let idx = match rule {
        PivotRule::InOrder => 0,
        PivotRule::MaxDegree => {
            let top = ideal.gens.iter().map(Monomial::degree).max().unwrap_or(0);
            ideal
                .gens
                .iter()
                .rposition(|g| g.degree() == top)
                .unwrap_or(0)
        }
    };
    let w = ideal.gens[idx];
    let mut rest = ideal.gens.clone();
    rest.remove(idx);
    let j = MonomialIdeal { gens: rest };
    let jw = colon(&j, &w);
    let pj = recurse(&j, rule, depth + 1)?;
    let pjw = recurse(&jw, rule, depth + 1)?;
    pj.sub(&pjw.shift(w.degree() as i64)?)
}

fn pairwise_coprime(ideal: &MonomialIdeal) -> bool {
    let g = &ideal.gens;
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].is_coprime(&g[j])))
}

/// Numerator of the Hilbert series computed by counting standard monomials
/// degree by degree and multiplying by `(1-t)^4`, truncated at `max_degree`.
/// Agrees with [`bayer_stillman_p`] whenever the true numerator has degree
/// at most `max_degree`.
pub fn staircase_numerator(ideal: &MonomialIdeal, max_degree: usize) -> Result<UniPoly> {
    let mut counts = vec![0i64; max_degree + 1];
    // extend only in variables at or after the last one raised, so each
    // exponent vector is produced exactly once
    let mut stack = vec![(Monomial::ONE, 0usize)];
    while let Some((m, from)) = stack.pop() {
        let d = m.degree() as usize;
        if !ideal.contains(&m) {
            counts[d] += 1;
        }
        if d == max_degree {
            continue;
        }
        for v in from..NVARS {
            let mut e = m.exps();
            e[v] += 1;
            stack.push((Monomial(e), v));
        }
    }
    let mut hs = UniPoly::from_coeffs(counts);
    let factor = UniPoly::one_minus(1)?;
    for _ in 0..NVARS {
        hs = hs.mul(&factor)?;
    }
    let truncated: Vec<i64> = hs.coeffs().iter().take(max_degree + 1).copied().collect();
    Ok(UniPoly::from_coeffs(truncated))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(gens.iter().map(|g| m(g)).collect())
    }

    #[test]
    fn minimalization() {
        let i = ideal(&["X1^2", "X1^2*X2", "X1^2", "X2^3"]);
        assert_eq!(i.gens(), &[m("X1^2"), m("X2^3")]);
    }

    #[test]
    fn colon_examples() {
        assert_eq!(
            colon(&ideal(&["X1^2", "X1*X2"]), &m("X2")).gens(),
            &[m("X1")]
        );
        assert_eq!(colon(&ideal(&["X1"]), &m("X3")).gens(), &[m("X1")]);
        let c = colon(&ideal(&["X1^2*X2", "X2^3"]), &m("X1*X2"));
        assert_eq!(c.canonical(), vec![m("X2^2"), m("X1")]);
    }

    #[test]
    fn numerators() {
        assert_eq!(
            bayer_stillman_p(&MonomialIdeal::default(), PivotRule::MaxDegree).unwrap(),
            UniPoly::one()
        );
        let i = ideal(&["X1^2", "X1*X2"]);
        let expect = UniPoly::from_coeffs(vec![1, 0, -2, 1]);
        for rule in [PivotRule::MaxDegree, PivotRule::InOrder] {
            assert_eq!(bayer_stillman_p(&i, rule).unwrap(), expect);
        }
        assert_eq!(staircase_numerator(&i, 6).unwrap(), expect);
        // unit ideal
        assert!(bayer_stillman_p(&ideal(&["1"]), PivotRule::MaxDegree)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn staircase_counts_each_monomial_once() {
        let hs_free = staircase_numerator(&MonomialIdeal::default(), 5).unwrap();
        assert_eq!(hs_free, UniPoly::one());
    }
}
