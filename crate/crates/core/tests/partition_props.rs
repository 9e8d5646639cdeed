use std::collections::HashSet;

use num_bigint::BigUint;
use parity_bias::counting::partition_numbers;
use parity_bias::partition::{enumerate, Bias, BiasSelector, ClassSpec, Partition, PartitionError};
use proptest::prelude::*;

fn p(v: &[i64]) -> Partition {
    Partition::from_parts(v).unwrap()
}

fn paper_specs() -> Vec<ClassSpec> {
    let mut v = vec![
        ClassSpec::all(),
        ClassSpec::distinct_parts(),
        ClassSpec::no_ones(),
        ClassSpec::no_ones().with_distinct(true),
        ClassSpec::avoiding(&[2]),
        ClassSpec::avoiding(&[1, 2]),
    ];
    for k in 3..=6 {
        v.push(ClassSpec::avoiding(&[k]));
        v.push(ClassSpec::avoiding(&[1, k]));
    }
    v
}

#[test]
fn construction_examples() {
    let a = p(&[3, 1, 2]);
    assert_eq!(a.parts(), &[3, 2, 1]);
    assert_eq!(a.n(), 6);
    let e = Partition::from_parts(&[]).unwrap();
    assert_eq!((e.n(), e.len()), (0, 0));
    assert_eq!(e.bias(), Bias::Balanced);
    assert_eq!(p(&[2, 2, 1]).n(), 5);
    assert_eq!(Partition::from_parts(&[3, 0]), Err(PartitionError::NonPositivePart(0)));
    assert_eq!(Partition::from_parts(&[-1]), Err(PartitionError::NonPositivePart(-1)));
}

#[test]
fn stats_examples() {
    let s = p(&[1]).stats();
    assert_eq!((s.len, s.len_even, s.len_odd, s.largest), (1, 0, 1, 1));
    let s = p(&[4, 2, 2, 1]).stats();
    assert_eq!((s.len, s.len_even, s.len_odd, s.largest, s.len_odd_gt1), (4, 3, 1, 4, 0));
    assert_eq!(s.mults, vec![(4, 1), (2, 2), (1, 1)]);
    let s = p(&[7, 2, 2, 1, 1]).stats();
    assert_eq!((s.len, s.len_even, s.len_odd, s.len_odd_gt1), (5, 2, 3, 1));
}

#[test]
fn union_split_and_bias_examples() {
    assert_eq!(p(&[3, 1]).union(&p(&[2])), p(&[3, 2, 1]));
    assert_eq!(p(&[2, 2]).union(&p(&[2])), p(&[2, 2, 2]));
    assert_eq!(p(&[5, 4]).union(&Partition::empty()), p(&[5, 4]));
    assert_eq!(p(&[4, 2, 2, 1]).split(), (p(&[4, 2, 2]), p(&[1])));
    assert_eq!(p(&[3, 1, 1]).split(), (Partition::empty(), p(&[3, 1, 1])));
    assert_eq!(p(&[3, 1, 1]).bias(), Bias::OddHeavy);
    assert_eq!(p(&[2, 1]).bias(), Bias::Balanced);
    assert_eq!(p(&[4, 2, 1]).bias(), Bias::EvenHeavy);
}

#[test]
fn satisfies_examples() {
    let q_o = ClassSpec::no_ones().with_bias(BiasSelector::OddHeavy);
    assert!(p(&[3, 3, 2]).satisfies(&q_o));
    assert!(!p(&[2, 1]).satisfies(&ClassSpec::no_ones()));
    let d_e = ClassSpec::distinct_parts().with_bias(BiasSelector::EvenHeavy);
    assert!(!p(&[4, 3]).satisfies(&d_e));
}

#[test]
fn enumerate_examples() {
    let p_o = ClassSpec::all().with_bias(BiasSelector::OddHeavy);
    let got: Vec<Partition> = enumerate(4, &p_o).collect();
    assert_eq!(got, vec![p(&[3, 1]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    let p_e = ClassSpec::all().with_bias(BiasSelector::EvenHeavy);
    assert_eq!(enumerate(2, &p_e).collect::<Vec<_>>(), vec![p(&[2])]);
    assert_eq!(enumerate(0, &ClassSpec::all()).collect::<Vec<_>>(), vec![Partition::empty()]);
}

#[test]
fn enumeration_matches_pentagonal_counts() {
    let pn = partition_numbers(30);
    for n in 0..=30u32 {
        assert_eq!(BigUint::from(enumerate(n, &ClassSpec::all()).count()), pn[n as usize], "n={n}");
    }
}

#[test]
fn distinct_part_counts_match_known_sequence() {
    // q(n), n = 0..=20
    let q = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64];
    for (n, &want) in q.iter().enumerate() {
        assert_eq!(enumerate(n as u32, &ClassSpec::distinct_parts()).count(), want, "n={n}");
    }
}

#[test]
fn enumeration_is_ordered_unique_and_in_spec() {
    for spec in paper_specs() {
        for n in 0..=24 {
            let all: Vec<Partition> = enumerate(n, &spec).collect();
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()), "{} n={n}", spec.name());
            let set: HashSet<&Partition> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|l| l.satisfies(&spec) && l.n() == n));
            let by_bias: usize = [BiasSelector::OddHeavy, BiasSelector::EvenHeavy, BiasSelector::Balanced]
                .into_iter()
                .map(|b| enumerate(n, &spec.clone().with_bias(b)).count())
                .sum();
            assert_eq!(by_bias, all.len());
            for l in &all {
                let (e, o) = l.split();
                assert_eq!(&e.union(&o), l);
            }
        }
    }
}

#[test]
fn class_names_round_trip() {
    for spec in paper_specs() {
        assert_eq!(ClassSpec::parse_name(&spec.name()).unwrap(), spec);
    }
    assert_eq!(ClassSpec::avoiding(&[2, 1]).key(), "d:0;m:1;f:1,2");
    assert_eq!(ClassSpec::no_ones().with_distinct(true).key(), "d:1;m:2;f:");
    assert!(ClassSpec::parse_name("X").is_err());
    assert!(ClassSpec::parse_name("P{0}").is_err());
}

proptest! {
    #[test]
    fn canonical_form(raw in proptest::collection::vec(1i64..40, 0..12)) {
        let l = Partition::from_parts(&raw).unwrap();
        prop_assert!(l.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(l.parts().iter().all(|&x| x >= 1));
        prop_assert_eq!(l.n() as i64, raw.iter().sum::<i64>());
        let mut shuffled = raw.clone();
        shuffled.reverse();
        prop_assert_eq!(Partition::from_parts(&shuffled).unwrap(), l.clone());
    }

    #[test]
    fn stats_consistent(raw in proptest::collection::vec(1i64..40, 0..12)) {
        let l = Partition::from_parts(&raw).unwrap();
        let s = l.stats();
        prop_assert_eq!(s.len, s.len_even + s.len_odd);
        prop_assert_eq!(s.len_odd_gt1, s.len_odd - l.multiplicity(1));
        prop_assert_eq!(s.mults.iter().map(|&(v, m)| v * m as u32).sum::<u32>(), l.n());
        prop_assert!(s.mults.windows(2).all(|w| w[0].0 > w[1].0));
        let expected = match s.len_odd.cmp(&s.len_even) {
            std::cmp::Ordering::Greater => Bias::OddHeavy,
            std::cmp::Ordering::Less => Bias::EvenHeavy,
            std::cmp::Ordering::Equal => Bias::Balanced,
        };
        prop_assert_eq!(l.bias(), expected);
    }

    #[test]
    fn union_adds_weights(a in proptest::collection::vec(1i64..30, 0..8), b in proptest::collection::vec(1i64..30, 0..8)) {
        let (x, y) = (Partition::from_parts(&a).unwrap(), Partition::from_parts(&b).unwrap());
        let u = x.union(&y);
        prop_assert_eq!(u.n(), x.n() + y.n());
        prop_assert_eq!(u.len(), x.len() + y.len());
        prop_assert_eq!(u, y.union(&x));
    }
}
