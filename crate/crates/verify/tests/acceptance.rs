//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero on any failure that is not a pinned, analysed discrepancy.
//!
//! All comparisons are exact integer or label equality. Runtime budgets are
//! wall-clock seconds for the whole criterion.

use std::cell::RefCell;
use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

use braidforge::registry::{oracle_pairs, ORACLE_MAX_LEN};
use braidforge::DEFAULT_SEED;
use braidforge_core::finite::{order4_pure_class_count, pure_elements, pure_order4_class_formula, Conjugation};
use braidforge_core::garside::artin_action_all;
use braidforge_core::presentation::{delta_root, full_twist, pure_generator, y_set};
use braidforge_core::schreier::pure_subgroup;
use braidforge_core::{
    abelian_invariants, concretize, enumerate, evaluate_perm, family_presentation, identify, named_word,
    normal_form, smith_normal_form, AbelianInvariants, Abelianization, EnumLimits, EnumOutcome, Family,
    FiniteGroupTable, GroupLabel, IntMatrix, Letter, Named, Permutation, Presentation, Strategy, Surface, Word,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seconds allowed per criterion.
const BUDGET_S: [f64; 9] = [1.0, 30.0, 120.0, 5.0, 180.0, 60.0, 1.0, 30.0, 120.0];

const SNF_MATRICES: usize = 500;
const SNF_MAX_ENTRY: i64 = 20;
const SNF_MAX_DIM: usize = 12;
const RANDOM_WORDS: usize = 1000;
const ASSOCIATIVITY_TRIPLES: usize = 1000;
const ORACLE_PAIRS_PER_N: usize = 250;

/// Failures that reproduce a known, analysed discrepancy: (criterion line, observed value).
/// If the observed value changes, or the line starts passing, the run fails so the
/// analysis gets revisited.
const KNOWN_DISCREPANCIES: &[(&str, &str)] = &[("C7", "2")];

use Surface::{Disc, ProjectivePlane as Rp2, Sphere};

/// Everything the criteria enumerate or concretize, replayed by criterion 9.
#[derive(Default)]
struct Log {
    enumerations: Vec<(Presentation, Vec<Word>)>,
    groups: Vec<(String, FiniteGroupTable)>,
}

struct Ctx {
    log: RefCell<Log>,
}

impl Ctx {
    fn index(&self, p: &Presentation, gens: &[Word]) -> Option<usize> {
        let out = enumerate(p, gens, EnumLimits::default()).ok()?;
        if out.index().is_some() {
            self.log.borrow_mut().enumerations.push((p.clone(), gens.to_vec()));
        }
        out.index()
    }

    fn group(&self, p: &Presentation) -> Option<FiniteGroupTable> {
        let t = enumerate(p, &[], EnumLimits::default()).ok()?.into_table()?;
        self.log.borrow_mut().enumerations.push((p.clone(), Vec::new()));
        let g = concretize(&t).ok()?;
        self.log.borrow_mut().groups.push((p.label().to_string(), g.clone()));
        Some(g)
    }

    fn quotient(&self, p: &Presentation, words: &[Word]) -> Option<FiniteGroupTable> {
        self.group(&p.add_relators(words).ok()?)
    }
}

/// Mismatches collected within one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    misses: Vec<String>,
    /// Observed value of the first mismatch.
    first_observed: Option<String>,
}

impl Tally {
    fn eq(&mut self, what: impl Display, observed: impl Display, expected: impl Display) {
        self.checks += 1;
        let (o, e) = (observed.to_string(), expected.to_string());
        if o != e {
            self.first_observed.get_or_insert_with(|| o.clone());
            self.misses.push(format!("{what}: observed {o}, expected {e}"));
        }
    }

    fn holds(&mut self, what: impl Display, ok: bool) {
        self.eq(what, ok, true);
    }
}

fn braid(s: Surface, n: usize) -> Presentation {
    family_presentation(Family::Braid { surface: s, n }).unwrap()
}

fn mcg(s: Surface, n: usize) -> Presentation {
    family_presentation(Family::MappingClass { surface: s, n }).unwrap()
}

fn w(s: Surface, name: Named, n: usize) -> Word {
    named_word(s, name, n).unwrap()
}

fn show<T: Display>(x: Option<T>) -> String {
    x.map_or_else(|| "limit reached".to_string(), |v| v.to_string())
}

fn label(g: Option<FiniteGroupTable>) -> String {
    show(g.map(|g| identify(&g)))
}

fn cyclic(k: usize) -> GroupLabel {
    if k == 1 {
        GroupLabel::Trivial
    } else {
        GroupLabel::Cyclic(k as u64)
    }
}

fn invariants(torsion: Vec<u64>, free_rank: usize) -> AbelianInvariants {
    AbelianInvariants { torsion, free_rank }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn c1_finite_orders(cx: &Ctx, t: &mut Tally) {
    let order = |g: &Option<FiniteGroupTable>| show(g.as_ref().map(|g| g.order()));
    let s2 = cx.group(&braid(Sphere, 2));
    let s3 = cx.group(&braid(Sphere, 3));
    let r1 = cx.group(&braid(Rp2, 1));
    let r2 = cx.group(&braid(Rp2, 2));
    t.eq("|B2(S2)|", order(&s2), 2);
    t.eq("|B3(S2)|", order(&s3), 12);
    t.eq("|B1(RP2)|", order(&r1), 2);
    t.eq("|B2(RP2)|", order(&r2), 16);
    t.eq("B3(S2)", label(s3), GroupLabel::Dic12);
    t.eq("B2(RP2)", label(r2.clone()), GroupLabel::Q16);
    let pure = r2.and_then(|g| g.restrict(&pure_elements(&g, &braid(Rp2, 2)).ok()?).ok());
    t.eq("P2(RP2)", label(pure), GroupLabel::Q8);
}

fn c2_sphere_quotients(cx: &Ctx, t: &mut Tally) {
    for n in 3..=8 {
        let p = braid(Sphere, n);
        let a1 = cx.index(&p.add_relators(&[w(Sphere, Named::Alpha1, n)]).unwrap(), &[]);
        t.eq(format!("n={n} |B/<<alpha1>>|"), show(a1), n.gcd(&2));
        t.eq(format!("n={n} B/<<alpha0>>"), label(cx.quotient(&p, &[w(Sphere, Named::Alpha0, n)])), cyclic(n - 1));
        let expected = if n == 3 { GroupLabel::S3 } else { cyclic(n - 1) };
        t.eq(format!("n={n} B/<<alpha2>>"), label(cx.quotient(&p, &[w(Sphere, Named::Alpha2, n)])), expected);
    }
}

fn c3_rp2_generation(cx: &Ctx, t: &mut Tally) {
    for n in 2..=5 {
        let p = braid(Rp2, n);
        let (a, b) = (w(Rp2, Named::A, n), w(Rp2, Named::B, n));
        t.eq(format!("n={n} B/<<a>>"), label(cx.quotient(&p, &[a.clone()])), GroupLabel::Cyclic(2));
        t.eq(format!("n={n} B/<<b>>"), label(cx.quotient(&p, &[b.clone()])), GroupLabel::Cyclic(2));
        t.eq(format!("n={n} [B:<a,b>]"), show(cx.index(&p, &[a, b])), 1);
    }
    for n in 2..=4 {
        let p = braid(Rp2, n);
        let y = y_set(n).unwrap();
        let images = p.permutation_images().unwrap();
        for (k, yk) in y.iter().enumerate() {
            t.holds(format!("n={n} Y[{k}] pure"), evaluate_perm(yk, &images).unwrap().is_identity());
        }
        t.eq(format!("n={n} [B:<Y>]"), show(cx.index(&p, &y)), factorial(n));
    }
}

fn c4_abelianizations(_: &Ctx, t: &mut Tally) {
    for n in 2..=8 {
        t.eq(format!("B{n}^Ab"), abelian_invariants(&braid(Disc, n)), invariants(vec![], 1));
    }
    for n in 3..=8 {
        t.eq(format!("B{n}(S2)^Ab"), abelian_invariants(&braid(Sphere, n)), invariants(vec![2 * (n as u64 - 1)], 0));
    }
    for n in 2..=6 {
        t.eq(format!("B{n}(RP2)^Ab"), abelian_invariants(&braid(Rp2, n)), invariants(vec![2, 2], 0));
    }
    for n in 3..=6 {
        t.eq(format!("MCG{n}(D2)^Ab"), abelian_invariants(&mcg(Disc, n)), invariants(vec![(n * (n - 1)) as u64], 0));
    }
    for n in 4..=8 {
        // Images as multiples of the image of s1, which generates Z_{2(n-1)}.
        let p = braid(Sphere, n);
        let ab = Abelianization::new(&p);
        let m = 2 * (n as i64 - 1);
        for (name, k) in [(Named::Alpha0, n - 1), (Named::Alpha1, n), (Named::Alpha2, n - 1)] {
            let x = ab.image(&w(Sphere, name, n));
            let s1k = ab.image(&Word::gen(1).power(k as i64));
            let exp_sum: i64 = w(Sphere, name, n).exponent_sums(p.num_generators()).iter().sum();
            t.holds(format!("n={n} {name:?} image is {k}"), x == s1k && exp_sum.rem_euclid(m) == k as i64 % m);
        }
    }
}

fn pure_ab(p: &Presentation) -> Option<(usize, AbelianInvariants)> {
    let (table, sp) = pure_subgroup(p, EnumLimits::default()).ok()??;
    Some((table.n_cosets(), abelian_invariants(&sp.presentation)))
}

fn c5_pure_abelianizations(cx: &Ctx, t: &mut Tally) {
    let check = |t: &mut Tally, what: String, p: &Presentation, n: usize, exp: AbelianInvariants| match pure_ab(p) {
        Some((idx, ab)) => {
            t.eq(format!("{what} index"), idx, factorial(n));
            t.eq(what, ab, exp);
        }
        None => t.eq(what, "limit reached", exp),
    };
    for n in 3..=4 {
        check(t, format!("P{n}^Ab"), &braid(Disc, n), n, invariants(vec![], n * (n - 1) / 2));
    }
    for n in 3..=5 {
        check(t, format!("P{n}(S2)^Ab"), &braid(Sphere, n), n, invariants(vec![2], n * (n - 3) / 2));
    }
    for n in 2..=3 {
        check(t, format!("P{n}(RP2)^Ab"), &braid(Rp2, n), n, invariants(vec![2; n], 0));
    }
    for n in 3..=4 {
        let rank = pure_ab(&mcg(Disc, n)).map(|(_, ab)| ab.free_rank);
        t.eq(format!("(P{n}/<full twist>)^Ab free rank"), show(rank), n * (n - 1) / 2 - 1);
    }
    for n in 4..=5 {
        check(t, format!("PMCG{n}(S2)^Ab"), &mcg(Sphere, n), n, invariants(vec![], n * (n - 3) / 2));
    }
    let p = braid(Sphere, 3);
    let pure3 = cx.group(&p).map(|g| pure_elements(&g, &p).unwrap().len());
    t.eq("|P3(S2)|", show(pure3), 2);
}

fn same(u: &Word, v: &Word, n: usize) -> bool {
    normal_form(u, n).unwrap() == normal_form(v, n).unwrap()
}

fn c6_word_identities(_: &Ctx, t: &mut Tally) {
    for n in 3..=5 {
        let (d, tw) = (delta_root(n), full_twist(n));
        let garside_sq = braidforge_core::presentation::garside(n).power(2);
        t.holds(format!("n={n} delta^n = Delta^2"), same(&d.power(n as i64), &garside_sq, n));
        t.holds(format!("n={n} alpha1^(n-1) = Delta^2"), same(&w(Disc, Named::Alpha1, n).power(n as i64 - 1), &tw, n));
        for i in 1..=n - 2 {
            t.holds(format!("n={n} delta^{i} s1 delta^-{i}"), same(&Word::gen(1).conjugate(&d.power(i as i64)), &Word::gen(i + 1), n));
        }
        let mut prod = Word::empty();
        for i in 1..n {
            for j in i + 1..=n {
                prod = prod.concat(&pure_generator(i, j));
            }
        }
        t.holds(format!("n={n} Delta^2 = prod A_ij"), same(&prod, &tw, n));
        for i in 1..n {
            let s = Word::gen(i);
            t.holds(format!("n={n} Delta^2 s{i} = s{i} Delta^2"), same(&tw.concat(&s), &s.concat(&tw), n));
        }
    }
    let mut agree = 0;
    let mut total = 0;
    for n in 2..=5 {
        for (u, v) in oracle_pairs(n, DEFAULT_SEED, ORACLE_PAIRS_PER_N, ORACLE_MAX_LEN) {
            let action = artin_action_all(&u, n).unwrap() == artin_action_all(&v, n).unwrap();
            agree += (same(&u, &v, n) == action) as usize;
            total += 1;
        }
    }
    t.eq("oracle agreement", format!("{agree}/{total}"), "1000/1000");
}

fn c7_centralizers(cx: &Ctx, t: &mut Tally) -> (usize, usize) {
    let n = 2;
    let g = cx.group(&braid(Rp2, n)).expect("B2(RP2) is finite");
    for (name, order) in [(Named::A, 8), (Named::B, 4)] {
        let x = g.element(&w(Rp2, name, n));
        let mut c = g.centralizer(x);
        let mut cyc = g.subgroup(&[x]);
        c.sort_unstable();
        cyc.sort_unstable();
        t.eq(format!("|C({name:?})|"), c.len(), order);
        t.holds(format!("C({name:?}) = <{name:?}>"), c == cyc);
    }
    let whole = order4_pure_class_count(n, Conjugation::WholeGroup, EnumLimits::default()).unwrap();
    let pure = order4_pure_class_count(n, Conjugation::PureSubgroup, EnumLimits::default()).unwrap();
    let formula = pure_order4_class_formula(n as u64).unwrap();
    t.eq("B2(RP2)-classes of order-4 pure elements", whole, formula);
    (pure, formula as usize)
}

fn c8_mapping_classes(cx: &Ctx, t: &mut Tally) {
    let g = cx.group(&mcg(Sphere, 3));
    t.eq("MCG3(S2)", show(g.as_ref().map(|g| format!("order {} {}", g.order(), identify(g)))), "order 6 S3");
    if let Some(g) = g {
        let orders: Vec<String> = [Named::Alpha0, Named::Alpha1, Named::Alpha2]
            .iter()
            .map(|&a| g.element_order(g.element(&w(Sphere, a, 3))).to_string())
            .collect();
        t.eq("orders of alpha0, alpha1, alpha2 in MCG3(S2)", orders.join(","), "3,2,1");
    }
    let p = mcg(Disc, 2);
    let g = cx.group(&p);
    let pure = g.as_ref().map(|g| pure_elements(g, &p).unwrap().len());
    t.eq("MCG2(D2)", label(g), GroupLabel::Cyclic(2));
    t.eq("|PMCG2(D2)|", show(pure), 1);
    for n in 2..=4 {
        let p = mcg(Rp2, n);
        t.eq(format!("n={n} MCG/<<a>>"), label(cx.quotient(&p, &[w(Rp2, Named::A, n)])), GroupLabel::Cyclic(2));
        t.eq(format!("n={n} MCG/<<b>>"), label(cx.quotient(&p, &[w(Rp2, Named::B, n)])), GroupLabel::Cyclic(2));
    }
    if let Some(g) = cx.group(&mcg(Rp2, 2)) {
        let a = g.element_order(g.element(&w(Rp2, Named::A, 2)));
        let b = g.element_order(g.element(&w(Rp2, Named::B, 2)));
        t.eq("orders of a, b in MCG2(RP2)", format!("{a},{b}"), "4,2");
    }
}

fn random_matrix(rng: &mut impl Rng) -> IntMatrix {
    let (rows, cols) = (rng.gen_range(1..=SNF_MAX_DIM), rng.gen_range(1..=SNF_MAX_DIM));
    let density = rng.gen_range(0.2..=1.0);
    let entries: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(-SNF_MAX_ENTRY..=SNF_MAX_ENTRY) } else { 0 })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&entries)
}

fn divisibility_chain(d: &[BigInt]) -> bool {
    d.iter().all(|x| !x.is_negative())
        && d.windows(2).all(|p| if p[0].is_zero() { p[1].is_zero() } else { p[1].is_multiple_of(&p[0]) })
}

fn c9_properties(cx: &Ctx, t: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);

    let mut snf_ok = 0;
    for _ in 0..SNF_MATRICES {
        let m = random_matrix(&mut rng);
        let s = smith_normal_form(&m);
        let ok = s.u.mul(&m).mul(&s.v) == s.d
            && s.d.is_diagonal()
            && s.u.determinant().abs().is_one()
            && s.v.determinant().abs().is_one()
            && divisibility_chain(&s.diagonal());
        snf_ok += ok as usize;
    }
    t.eq("SNF exact with unimodular transforms", snf_ok, SNF_MATRICES);

    let log = cx.log.borrow();
    let mut agree = 0;
    for (p, gens) in &log.enumerations {
        let idx = |s: Strategy| match enumerate(p, gens, EnumLimits::default().with_strategy(s)).unwrap() {
            EnumOutcome::Completed(t) => Some(t.n_cosets()),
            EnumOutcome::ResourceExceeded(_) => None,
        };
        agree += (idx(Strategy::HltLookahead) == idx(Strategy::Felsch)) as usize;
    }
    t.eq("HLT and Felsch indices agree", agree, log.enumerations.len());

    let images = [Permutation::transposition(5, 1, 2), Permutation::cycle(5, &[1, 2, 3, 4, 5]), Permutation::cycle(5, &[2, 4])];
    let mut word_ok = 0;
    for _ in 0..RANDOM_WORDS {
        let raw: Vec<Letter> = (0..rng.gen_range(0..40)).map(|_| Letter::new(rng.gen_range(1..=3), rng.gen_bool(0.5))).collect();
        let u = Word::reduced(raw.clone());
        let v = Word::reduced((0..rng.gen_range(0..20)).map(|_| Letter::new(rng.gen_range(1..=3), rng.gen_bool(0.5))));
        let reduced = u.letters().windows(2).all(|p| p[0] != p[1].inverse());
        let idempotent = Word::reduced(u.letters().to_vec()) == u;
        let uv = evaluate_perm(&u.concat(&v), &images).unwrap();
        let hom = uv == evaluate_perm(&u, &images).unwrap().compose(&evaluate_perm(&v, &images).unwrap());
        let inv = u.concat(&u.inverse()).is_empty() && evaluate_perm(&u.inverse(), &images).unwrap() == evaluate_perm(&u, &images).unwrap().inverse();
        word_ok += (reduced && idempotent && hom && inv) as usize;
    }
    t.eq("free reduction and homomorphism laws", word_ok, RANDOM_WORDS);

    for (name, g) in &log.groups {
        let counterexample = g.associativity_counterexample(&mut rng, ASSOCIATIVITY_TRIPLES);
        t.holds(format!("associativity in {name} (counterexample {counterexample:?})"), counterexample.is_none());
    }
}

struct Line {
    id: String,
    title: &'static str,
    pass: bool,
    detail: String,
    observed: Option<String>,
}

fn run(id: usize, title: &'static str, cx: &Ctx, f: impl FnOnce(&Ctx, &mut Tally)) -> Line {
    let start = Instant::now();
    let mut t = Tally::default();
    f(cx, &mut t);
    let secs = start.elapsed().as_secs_f64();
    let budget = BUDGET_S[id - 1];
    let mut detail = format!("{} checks, {secs:.2} s of {budget} s", t.checks);
    if !t.misses.is_empty() {
        detail.push_str(&format!("; {}", t.misses.join("; ")));
    }
    if secs > budget {
        detail.push_str("; over budget");
    }
    Line { id: format!("C{id}"), title, pass: t.misses.is_empty() && secs <= budget, detail, observed: t.first_observed }
}

fn main() -> ExitCode {
    let cx = Ctx { log: RefCell::new(Log::default()) };
    let mut lines = vec![
        run(1, "finite orders and types", &cx, c1_finite_orders),
        run(2, "sphere quotients by alpha0, alpha1, alpha2", &cx, c2_sphere_quotients),
        run(3, "projective plane quotients and generation", &cx, c3_rp2_generation),
        run(4, "abelianizations by Smith normal form", &cx, c4_abelianizations),
        run(5, "pure subgroup abelianizations by rewriting", &cx, c5_pure_abelianizations),
        run(6, "word identities and normal form oracle", &cx, c6_word_identities),
    ];
    let mut pure_count = (0, 0);
    lines.push(run(7, "centralizers and order-4 class count in B2(RP2)", &cx, |cx, t| pure_count = c7_centralizers(cx, t)));
    lines.push(run(8, "mapping class group corollaries", &cx, c8_mapping_classes));
    lines.push(run(9, "property suites", &cx, c9_properties));

    let mut unexpected = 0;
    for line in &lines {
        let known = KNOWN_DISCREPANCIES.iter().find(|(id, _)| *id == line.id);
        let verdict = if line.pass { "PASS" } else { "FAIL" };
        let tag = match (line.pass, known) {
            (false, Some((_, obs))) if line.observed.as_deref() == Some(*obs) => " (known discrepancy)",
            (false, _) => {
                unexpected += 1;
                ""
            }
            (true, Some(_)) => {
                unexpected += 1;
                " (pinned discrepancy no longer reproduces)"
            }
            (true, None) => "",
        };
        println!("{verdict} {} {}{tag}: {}", line.id, line.title, line.detail);
    }
    let (pure, formula) = pure_count;
    let verdict = if pure == formula { "PASS" } else { "FAIL" };
    println!("{verdict} C7-pure order-4 pure classes under P2(RP2)-conjugation: observed {pure}, expected {formula}");
    unexpected += (pure != formula) as usize;

    if unexpected > 0 {
        println!("{unexpected} unexpected result(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
