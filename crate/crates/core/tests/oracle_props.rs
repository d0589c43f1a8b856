use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wqo_meter::oracle::build::{disjoint_union, lex_product, lex_sum, product};
use wqo_meter::oracle::random::random_poset;
use wqo_meter::oracle::{iso, oracle_invariants, FinitePoset, OracleInvariants};

fn inv(p: &FinitePoset) -> OracleInvariants {
    oracle_invariants(p).unwrap()
}

fn pair(seed: u64) -> (FinitePoset, FinitePoset) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_poset(&mut rng, 1 + seed as usize % 4, 0.4, 0.2);
    let b = random_poset(&mut rng, 1 + (seed / 4) as usize % 4, 0.4, 0.2);
    (a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn constructor_rows(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let (ia, ib) = (inv(&a), inv(&b));
        prop_assert_eq!(inv(&disjoint_union(&a, &b)).mot, ia.mot + ib.mot);
        prop_assert_eq!(inv(&disjoint_union(&a, &b)).width, ia.width + ib.width);
        prop_assert_eq!(inv(&lex_sum(&a, &b)).height, ia.height + ib.height);
        prop_assert_eq!(inv(&lex_sum(&a, &b)).width, ia.width.max(ib.width));
        prop_assert_eq!(inv(&product(&a, &b)).mot, ia.mot * ib.mot);
        prop_assert_eq!(inv(&lex_product(&a, &b)).height, ia.height * ib.height);
    }

    #[test]
    fn relabelling_is_isomorphic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(&mut rng, 1 + seed as usize % 10, 0.4, 0.2);
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut rng);
        let q = FinitePoset::from_relation(p.len(), |i, j| p.leq(perm[i], perm[j]));
        prop_assert!(iso(&p, &p).unwrap());
        prop_assert!(iso(&p, &q).unwrap());
        prop_assert!(iso(&q, &p.quotient()).unwrap());
        let (ip, iq) = (inv(&p), inv(&q));
        prop_assert_eq!((ip.mot, ip.height, ip.width), (iq.mot, iq.height, iq.width));
    }
}
