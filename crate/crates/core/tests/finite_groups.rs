//! Concretized finite groups: axioms, identification, class counts.

use braidforge_core::finite::{order4_pure_class_count, pure_elements, Conjugation};
use braidforge_core::{
    concretize_presentation, family_presentation, identify, projective_plane, sphere, EnumLimits, Family,
    FiniteGroupTable, GroupLabel, Presentation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn group(p: &Presentation) -> FiniteGroupTable {
    concretize_presentation(p, EnumLimits::default()).unwrap().unwrap()
}

fn mcg(code: &str) -> Presentation {
    family_presentation(code.parse::<Family>().unwrap()).unwrap()
}

#[test]
fn axioms_and_associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa550c);
    for p in [sphere(2).unwrap(), sphere(3).unwrap(), projective_plane(1).unwrap(), projective_plane(2).unwrap(), mcg("MCG-S2:3"), mcg("MCG-P2:2")] {
        let g = group(&p);
        assert!(g.satisfies_axioms(), "{}", p.label());
        assert_eq!(g.associativity_counterexample(&mut rng, 1000), None);
    }
}

#[test]
fn identification() {
    assert_eq!(identify(&group(&sphere(2).unwrap())), GroupLabel::Cyclic(2));
    assert_eq!(identify(&group(&sphere(3).unwrap())), GroupLabel::Dic12);
    assert_eq!(identify(&group(&projective_plane(2).unwrap())), GroupLabel::Q16);
    assert_eq!(identify(&group(&mcg("MCG-S2:3"))), GroupLabel::S3);
    let p = projective_plane(2).unwrap();
    let g = group(&p);
    let pure = g.restrict(&pure_elements(&g, &p).unwrap()).unwrap();
    assert_eq!(identify(&pure), GroupLabel::Q8);
}

#[test]
fn class_equation() {
    for p in [sphere(3).unwrap(), projective_plane(2).unwrap()] {
        let g = group(&p);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
        for c in &classes {
            assert_eq!(g.order() % c.len(), 0);
            assert_eq!(c.len() * g.centralizer(c[0]).len(), g.order());
        }
        assert_eq!(classes.iter().filter(|c| c.len() == 1).count(), g.center().len());
    }
}

#[test]
fn order_four_pure_classes() {
    let whole = order4_pure_class_count(2, Conjugation::WholeGroup, EnumLimits::default()).unwrap();
    let pure = order4_pure_class_count(2, Conjugation::PureSubgroup, EnumLimits::default()).unwrap();
    assert_eq!(pure, 3);
    // Conjugating by more elements can only merge classes.
    assert!(whole <= pure);
    assert_eq!(whole, 2);
    assert!(order4_pure_class_count(3, Conjugation::PureSubgroup, EnumLimits::default()).is_err());
}
