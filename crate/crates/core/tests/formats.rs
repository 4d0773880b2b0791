use gi_core::format::*;
use gi_core::random::{
    random_3sat, random_instance, random_lrbds, random_rbds, random_rx3c, seeded, InstanceShape,
};
use gi_core::{Error, Problem, Profile, ProfileBuilder, RuleSpec};
use proptest::prelude::*;
use rand::Rng;

fn named_profile() -> impl Strategy<Value = Profile> {
    (1usize..=9).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n * n),
            proptest::collection::vec(proptest::option::of("[a-z][a-z0-9_(),@# ]{0,10}"), n),
        )
            .prop_map(move |(bits, names)| {
                let mut b = ProfileBuilder::new(n).unwrap();
                for i in 0..n {
                    for j in 0..n {
                        b.set(i, j, bits[i * n + j]);
                    }
                    if let Some(name) = &names[i] {
                        b.name(i, name.clone()).unwrap();
                    }
                }
                b.build()
            })
    })
}

proptest! {
    #[test]
    fn profiles_round_trip(p in named_profile()) {
        let text = write_profile(&p);
        let back = parse_profile(&text).unwrap();
        prop_assert_eq!(write_profile(&back), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn instances_round_trip(seed in any::<u64>(), which in 0usize..3, n in 1usize..=9) {
        let mut rng = seeded(seed);
        let target = rng.random_range(1..=n);
        let rules = [RuleSpec::consent(2, 3).unwrap(), RuleSpec::Csr, RuleSpec::Lsr];
        let shape = InstanceShape {
            problem: Problem::ALL[which],
            rule: rules[rng.random_range(0..3)],
            n,
            target,
            society: rng.random_range(target..=n),
            budget: rng.random_range(0..=n),
            density: 0.5,
        };
        let inst = random_instance(&mut rng, &shape).unwrap();
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(write_instance(&back), text);
        prop_assert_eq!(back, inst);
    }

    #[test]
    fn sources_round_trip(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let kappa = rng.random_range(1..=4);
        let src = random_rx3c(&mut rng, kappa).unwrap();
        prop_assert_eq!(parse_rx3c(&write_rx3c(&src)).unwrap(), src);
        let src = random_3sat(&mut rng, 4, 5).unwrap();
        prop_assert_eq!(parse_cnf3(&write_cnf3(&src)).unwrap(), src);
        let src = random_rbds(&mut rng, 4, 3, 2, 0.5).unwrap();
        prop_assert_eq!(parse_rbds(&write_rbds(&src)).unwrap(), src);
        let src = random_lrbds(&mut rng, 3, 4, 3, 0.5).unwrap();
        prop_assert_eq!(parse_lrbds(&write_lrbds(&src)).unwrap(), src);
    }

    #[test]
    fn parsers_never_panic(text in "[ -~\n]{0,200}") {
        let _ = parse_profile(&text);
        let _ = parse_instance(&text);
        let _ = parse_rx3c(&text);
        let _ = parse_cnf3(&text);
        let _ = parse_rbds(&text);
        let _ = parse_lrbds(&text);
    }
}

#[test]
fn errors_carry_positions() {
    let text = "gi-instance v1\nproblem: GCDI\nrule: consent 2 2\nS: 0 7\nk: 1\ngi-profile v1\nn 2\n00\n00\n";
    match parse_instance(text) {
        Err(Error::Parse(e)) => assert_eq!(e.line, 4),
        other => panic!("{other:?}"),
    }
    match parse_profile("gi-profile v1\nn 2\n01\n0x\n") {
        Err(Error::Parse(e)) => assert_eq!((e.line, e.column), (4, 2)),
        other => panic!("{other:?}"),
    }
}
