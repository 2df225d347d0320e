mod common;

use common::*;
use tropcrit::bergman::{complete_flags, in_bergman_fan, in_flag_cone};
use tropcrit::critical::seeded_rng;
use tropcrit::fixtures::corpus;
use tropcrit::rational::int;
use tropcrit::{Limits, Rational, RationalVector};

#[test]
fn circuit_criterion_matches_flag_search() {
    let mut rng = seeded_rng(3);
    for (name, m) in corpus().into_iter().filter(|(_, m)| m.ground_size() <= 7) {
        let (inside, outside) = check_bergman_equivalence(&mut rng, &m, 300).unwrap();
        assert!(inside > 0 && outside > 0, "{name}: {inside} / {outside}");
    }
}

#[test]
fn flag_cone_generators_lie_in_the_fan() {
    let mut rng = seeded_rng(5);
    use rand::Rng;
    for (name, m) in corpus() {
        for flag in complete_flags(&m, &Limits::default()).unwrap() {
            let mut x = vec![Rational::from(int(rng.random_range(-9..=9))); m.ground_size()];
            for f in &flag.flats()[1..] {
                let c = int(rng.random_range(0..=5));
                for e in f.iter() {
                    x[e] += &c;
                }
            }
            let x = RationalVector::new(0, x);
            assert!(in_flag_cone(&flag, &x), "{name}: {flag}");
            assert!(in_bergman_fan(&m, &x), "{name}: {flag}");
        }
    }
}

#[test]
fn flags_are_sorted_and_complete() {
    for (name, m) in corpus() {
        let flags = complete_flags(&m, &Limits::default()).unwrap();
        assert!(flags.windows(2).all(|p| p[0] < p[1]), "{name}");
        assert!(flags.iter().all(|f| f.is_complete_flag_of(&m)), "{name}");
    }
}
