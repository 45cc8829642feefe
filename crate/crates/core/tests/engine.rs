use std::cmp::Ordering;

use proptest::prelude::*;
use pseudosym::hilbert::{bayer_stillman_p, staircase_numerator, MonomialIdeal, PivotRule};
use pseudosym::monomial::compare;
use pseudosym::{mora_nf, Binomial, Monomial};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn monomial(max: u32) -> impl Strategy<Value = Monomial> {
    prop::array::uniform4(0..=max).prop_map(Monomial)
}

proptest! {
    #[test]
    fn power_difference_reduces_to_zero(m1 in monomial(4), m2 in monomial(4), k in 1u32..=6) {
        prop_assume!(m1 != m2);
        let g = Binomial::new(m1, m2).unwrap();
        let f = Binomial::new(m1.pow(k), m2.pow(k)).unwrap();
        prop_assert_eq!(mora_nf(Some(f), &[g]).unwrap(), None);
    }

    #[test]
    fn order_is_multiplicative(a in monomial(5), b in monomial(5), c in monomial(5)) {
        prop_assert_eq!(compare(&a, &b), compare(&a.mul(&c), &b.mul(&c)));
        prop_assert_eq!(compare(&a, &b) == Ordering::Equal, a == b);
    }

    #[test]
    fn order_prefers_lower_degree(a in monomial(5), b in monomial(5)) {
        if a.degree() < b.degree() {
            prop_assert_eq!(compare(&a, &b), Ordering::Greater);
        }
    }
}

#[test]
fn bayer_stillman_pivot_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let n = rng.gen_range(1..=6);
        let mut gens: Vec<Monomial> = (0..n)
            .map(|_| loop {
                let m = Monomial([0; 4].map(|_| rng.gen_range(0..=3)));
                if !m.is_one() {
                    break m;
                }
            })
            .collect();
        let ideal = MonomialIdeal::new(gens.clone());
        let lcm = ideal.gens().iter().fold(Monomial::ONE, |acc, g| acc.lcm(g));
        let oracle = staircase_numerator(&ideal, lcm.degree() as usize + 1).unwrap();
        let by_degree = bayer_stillman_p(&ideal, PivotRule::MaxDegree).unwrap();
        assert_eq!(by_degree, oracle, "{gens:?}");
        for _ in 0..3 {
            gens.shuffle(&mut rng);
            let shuffled = MonomialIdeal::new(gens.clone());
            assert_eq!(
                bayer_stillman_p(&shuffled, PivotRule::InOrder).unwrap(),
                oracle
            );
        }
    }
}
