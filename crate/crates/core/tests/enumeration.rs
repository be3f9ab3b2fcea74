//! Coset enumeration: known orders, strategy agreement, Lagrange, determinism.

use braidforge_core::presentation::pure_generators;
use braidforge_core::{
    artin, enumerate, family_presentation, named_word, projective_plane, sphere, EnumLimits, EnumOutcome, Family,
    Named, Presentation, Strategy, Surface, Word,
};

fn limits(strategy: Strategy) -> EnumLimits {
    EnumLimits::default().with_strategy(strategy)
}

fn index(p: &Presentation, gens: &[Word], strategy: Strategy) -> usize {
    enumerate(p, gens, limits(strategy)).unwrap().index().expect("enumeration completes")
}

fn both(p: &Presentation, gens: &[Word]) -> usize {
    let h = index(p, gens, Strategy::HltLookahead);
    let f = index(p, gens, Strategy::Felsch);
    assert_eq!(h, f, "HLT and Felsch disagree on {}", p.label());
    h
}

#[test]
fn known_orders() {
    assert_eq!(both(&sphere(2).unwrap(), &[]), 2);
    assert_eq!(both(&sphere(3).unwrap(), &[]), 12);
    assert_eq!(both(&projective_plane(1).unwrap(), &[]), 2);
    assert_eq!(both(&projective_plane(2).unwrap(), &[]), 16);
    let d = Presentation::parse("gens: r s ; rels: r^5, s^2, s r s r").unwrap();
    assert_eq!(both(&d, &[]), 10);
    let s4 = Presentation::parse("gens: a b ; rels: a^2, b^3, a b a b a b a b").unwrap();
    assert_eq!(both(&s4, &[]), 24);
}

#[test]
fn symmetric_quotients_of_braid_groups() {
    for n in 2..=5 {
        let p = artin(n).unwrap();
        let sq: Vec<Word> = (1..n).map(|i| Word::gen(i).power(2)).collect();
        let factorial: usize = (1..=n).product();
        assert_eq!(both(&p.add_relators(&sq).unwrap(), &[]), factorial);
        assert_eq!(both(&p, &pure_generators(n)), factorial);
    }
}

#[test]
fn lagrange() {
    let g = projective_plane(2).unwrap();
    let order = both(&g, &[]);
    let subgroups: Vec<Vec<Word>> = vec![
        vec![],
        vec![Word::gen(1)],
        vec![Word::gen(2)],
        vec![named_word(Surface::ProjectivePlane, Named::A, 2).unwrap()],
        vec![named_word(Surface::ProjectivePlane, Named::B, 2).unwrap()],
        g.pure_subgroup_generators().unwrap(),
    ];
    for gens in subgroups {
        let idx = both(&g, &gens);
        // |H| from the subgroup enumerated inside the concretized group.
        let t = enumerate(&g, &[], EnumLimits::default()).unwrap().into_table().unwrap();
        let gt = braidforge_core::concretize(&t).unwrap();
        let h: Vec<usize> = gens.iter().map(|w| gt.element(w)).collect();
        assert_eq!(idx * gt.subgroup(&h).len(), order);
    }
}

#[test]
fn deterministic_tables() {
    for code in ["BS2:3", "BP2:2", "MCG-S2:3", "MCG-P2:2"] {
        let p = family_presentation(code.parse::<Family>().unwrap()).unwrap();
        for s in [Strategy::HltLookahead, Strategy::Felsch] {
            let a = enumerate(&p, &[], limits(s)).unwrap();
            let b = enumerate(&p, &[], limits(s)).unwrap();
            assert_eq!(a, b);
        }
        let h = enumerate(&p, &[], limits(Strategy::HltLookahead)).unwrap().into_table().unwrap();
        let f = enumerate(&p, &[], limits(Strategy::Felsch)).unwrap().into_table().unwrap();
        assert_eq!(h.to_text(), f.to_text(), "standardized tables differ for {code}");
    }
}

#[test]
fn limits_are_reported_not_guessed() {
    let p = artin(3).unwrap();
    let out = enumerate(&p, &[], EnumLimits::default().with_max_cosets(100)).unwrap();
    assert!(matches!(out, EnumOutcome::ResourceExceeded(_)));
    let p = sphere(6).unwrap();
    let out = enumerate(&p, &[], EnumLimits::default().with_max_cosets(1000)).unwrap();
    assert!(out.index().is_none());
}

#[test]
fn mapping_class_quotients() {
    let p = family_presentation(Family::MappingClass { surface: Surface::Sphere, n: 3 }).unwrap();
    assert_eq!(both(&p, &[]), 6);
    let p = family_presentation(Family::MappingClass { surface: Surface::ProjectivePlane, n: 2 }).unwrap();
    assert_eq!(both(&p, &[]), 8);
}
