mod common;

use common::{set, space, spaces_up_to, FOUR_POINT, SIERPINSKI, THREE_POINT_SPLIT};
use topocheck::axioms::{decide, obligation_is_hypothesis, refutation_is_sound, witness_is_sound, Obligation, Witness};
use topocheck::{axiom_report, satisfies, Axiom, Disjointness, MeeklyOptions, Operands, SpaceContext, Topology};

const DEFAULT: MeeklyOptions = MeeklyOptions {
    disjointness: Disjointness::Open,
    operands: Operands::BothClosedOneSCStar,
};

const RELAXED: MeeklyOptions = MeeklyOptions {
    disjointness: Disjointness::Open,
    operands: Operands::SCStarSideNeedNotBeClosed,
};

#[test]
fn default_options_are_the_literal_reading() {
    assert_eq!(MeeklyOptions::default(), DEFAULT);
}

#[test]
fn discrete_is_normal() {
    let d = SpaceContext::new(Topology::discrete(3));
    let v = satisfies(&d, Axiom::Normal, DEFAULT);
    assert!(v.holds);
    assert!(v.refutation.is_none());
    for (ob, w) in &v.witnesses {
        assert!(witness_is_sound(&d, Axiom::Normal, DEFAULT, ob, w));
    }
}

#[test]
fn four_point_example_is_not_meekly() {
    let ctx = space(FOUR_POINT);
    let v = satisfies(&ctx, Axiom::MeeklySCStarNormal, DEFAULT);
    assert!(!v.holds);
    let r = v.refutation.expect("refutation");
    assert!(refutation_is_sound(&ctx, Axiom::MeeklySCStarNormal, DEFAULT, &r));
    assert!(obligation_is_hypothesis(&ctx, Axiom::MeeklySCStarNormal, DEFAULT, &r.obligation));
}

#[test]
fn three_point_split_is_meekly_under_relaxed_operands() {
    let ctx = space(THREE_POINT_SPLIT);
    let v = satisfies(&ctx, Axiom::MeeklySCStarNormal, RELAXED);
    assert!(v.holds);
    let k = set(&ctx, &["k"]);
    let lm = set(&ctx, &["l", "m"]);
    let (_, w) = v
        .witnesses
        .iter()
        .find(|(ob, _)| matches!(ob, Obligation::Pair { a, b } if *a == k && *b == lm))
        .expect("pair ({k}, {l,m}) is an obligation");
    assert_eq!(*w, Witness::Separation { u: k, v: lm });
    for (ob, w) in &v.witnesses {
        assert!(witness_is_sound(&ctx, Axiom::MeeklySCStarNormal, RELAXED, ob, w));
    }
}

#[test]
fn indiscrete_two_points_is_normal() {
    let ctx = SpaceContext::new(Topology::indiscrete(2));
    assert!(satisfies(&ctx, Axiom::Normal, DEFAULT).holds);
}

#[test]
fn sierpinski_is_not_t1() {
    let ctx = space(SIERPINSKI);
    let v = satisfies(&ctx, Axiom::T1, DEFAULT);
    assert!(!v.holds);
    assert_eq!(v.refutation.unwrap().obligation, Obligation::Singleton { point: 0 });
}

#[test]
fn report_examples() {
    let d = SpaceContext::new(Topology::discrete(3));
    let report = axiom_report(&d, DEFAULT);
    assert_eq!(report.len(), Axiom::ALL.len());
    for a in [
        Axiom::Normal,
        Axiom::SCStarNormal,
        Axiom::MeeklySCStarNormal,
        Axiom::SoftlyRegular,
        Axiom::AlmostRegular,
    ] {
        assert!(report.iter().find(|v| v.axiom == a).unwrap().holds, "{a}");
    }

    let i = SpaceContext::new(Topology::indiscrete(3));
    assert!(satisfies(&i, Axiom::MeeklySCStarNormal, DEFAULT).holds);

    let one = SpaceContext::new(Topology::discrete(1));
    for options in MeeklyOptions::ALL {
        assert!(axiom_report(&one, options).iter().all(|v| v.holds));
    }
}

#[test]
fn report_agrees_with_satisfies() {
    for t in spaces_up_to(3) {
        let ctx = SpaceContext::new(t);
        for options in MeeklyOptions::ALL {
            for v in axiom_report(&ctx, options) {
                assert_eq!(v.holds, decide(&ctx, v.axiom, options).holds);
            }
        }
    }
}

#[test]
fn witnesses_and_refutations_recheck() {
    for t in spaces_up_to(4) {
        let ctx = SpaceContext::new(t);
        for options in MeeklyOptions::ALL {
            for &axiom in Axiom::ALL {
                let v = satisfies(&ctx, axiom, options);
                if v.holds {
                    for (ob, w) in &v.witnesses {
                        assert!(witness_is_sound(&ctx, axiom, options, ob, w), "{axiom} {ob:?} {w:?}");
                    }
                } else {
                    let r = v.refutation.as_ref().unwrap();
                    assert!(refutation_is_sound(&ctx, axiom, options, r), "{axiom} {r:?}");
                }
            }
        }
    }
}

#[test]
fn closure_disjointness_is_stronger() {
    for t in spaces_up_to(4) {
        let ctx = SpaceContext::new(t);
        for operands in [Operands::BothClosedOneSCStar, Operands::SCStarSideNeedNotBeClosed] {
            let strong = MeeklyOptions {
                disjointness: Disjointness::ClosureDisjoint,
                operands,
            };
            let weak = MeeklyOptions {
                disjointness: Disjointness::Open,
                operands,
            };
            if decide(&ctx, Axiom::MeeklySCStarNormal, strong).holds {
                assert!(decide(&ctx, Axiom::MeeklySCStarNormal, weak).holds);
            }
        }
    }
}

#[test]
fn beta_variants_match_on_discrete_spaces() {
    for n in 1..=4 {
        let ctx = SpaceContext::new(Topology::discrete(n));
        assert_eq!(
            decide(&ctx, Axiom::BetaKNormal, DEFAULT).holds,
            decide(&ctx, Axiom::KNormal, DEFAULT).holds
        );
        assert_eq!(
            decide(&ctx, Axiom::AlmostBetaNormal, DEFAULT).holds,
            decide(&ctx, Axiom::AlmostNormal, DEFAULT).holds
        );
    }
}

#[test]
fn normal_implies_sc_star_normal() {
    for t in spaces_up_to(4) {
        let ctx = SpaceContext::new(t);
        if decide(&ctx, Axiom::Normal, DEFAULT).holds {
            assert!(decide(&ctx, Axiom::SCStarNormal, DEFAULT).holds);
        }
    }
}

#[test]
fn lindelof_is_unconditional() {
    for t in spaces_up_to(3) {
        assert!(decide(&SpaceContext::new(t), Axiom::Lindelof, DEFAULT).holds);
    }
}

#[test]
fn axiom_names_round_trip() {
    for &a in Axiom::ALL {
        assert_eq!(a.name().parse::<Axiom>().unwrap(), a);
    }
    assert_eq!(Axiom::MeeklySCStarNormal.name(), "meekly-sc-star-normal");
    assert_eq!(Axiom::SoftlyRegular.name(), "softly-regular");
}
