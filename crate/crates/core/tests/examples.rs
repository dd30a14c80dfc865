//! Worked examples for every operation, on small rings where the answer can
//! be derived by hand.

use ringlab_core::central::{
    center, commutator, cyclic_c_submodule, is_centrally_essential, is_essential_c_submodule,
    socle_c_module,
};
use ringlab_core::corpus::{
    gf4, make_direct_product, make_gf, make_matrix_ring, make_upper_triangular, make_zmod,
    parse_spec, write_spec, Corpus,
};
use ringlab_core::criteria::*;
use ringlab_core::exterior::{build_exterior, exterior_mul, ExteriorAlgebra, SubsetIndex};
use ringlab_core::finring::*;
use ringlab_core::RingError;

fn members(m: &Submodule) -> Vec<Vec<u32>> {
    m.members().map(|e| e.coords().to_vec()).collect()
}

fn el(r: &Ring, c: &[i64]) -> Element {
    r.element(c).unwrap()
}

fn f2() -> Ring {
    make_zmod(2).unwrap()
}

fn f3() -> Ring {
    make_gf(3, 1, &[]).unwrap()
}

fn t2f2() -> Ring {
    make_upper_triangular(&f2(), 2).unwrap()
}

fn m2f2() -> Ring {
    make_matrix_ring(&f2(), 2).unwrap()
}

/// `Λ(F_3^3)`; coordinate `m` is the coefficient of the monomial with mask `m`.
fn lam33() -> ExteriorAlgebra {
    ExteriorAlgebra::build(&f3(), 3).unwrap()
}

fn mono(l: &ExteriorAlgebra, c: i64, pos: &[u32]) -> Element {
    let a = l.base().element(&[c]).unwrap();
    l.monomial(&a, SubsetIndex::from_positions(pos)).unwrap()
}

// ---- ring arithmetic ----------------------------------------------------

#[test]
fn multiplication() {
    let z6 = make_zmod(6).unwrap();
    assert_eq!(z6.mul(&el(&z6, &[4]), &el(&z6, &[5])), el(&z6, &[2]));
    let m = m2f2();
    let e12 = el(&m, &[0, 1, 0, 0]);
    assert!(m.mul(&e12, &e12).is_zero());
    let t = t2f2();
    let (e11, e12) = (el(&t, &[1, 0, 0]), el(&t, &[0, 1, 0]));
    assert_eq!(t.mul(&e11, &e12), e12);
    assert!(t.mul(&e12, &e11).is_zero());
}

#[test]
fn integer_multiples_and_orders() {
    let z6 = make_zmod(6).unwrap();
    assert!(z6.int_scale(2, &el(&z6, &[3])).is_zero());
    assert!(z6.int_scale(0, &el(&z6, &[5])).is_zero());
    let l = lam33();
    let two_e1 = l.ring().int_scale(2, &l.generator(1));
    assert_eq!(two_e1.coords(), &[0, 2, 0, 0, 0, 0, 0, 0]);

    let z8 = make_zmod(8).unwrap();
    assert_eq!(z8.additive_order(&el(&z8, &[2])), 4);
    assert_eq!(z8.additive_order(&z8.zero()), 1);
    assert_eq!(z6.additive_order(&el(&z6, &[3])), 2);

    assert_eq!(z6.characteristic(), 6);
    assert_eq!(t2f2().characteristic(), 2);
    assert_eq!(l.ring().characteristic(), 3);
}

#[test]
fn integer_annihilators() {
    let z6 = make_zmod(6).unwrap();
    let z8 = make_zmod(8).unwrap();
    assert_eq!(
        members(&annihilator_of_int(&z6, 2).unwrap()),
        vec![vec![0], vec![3]]
    );
    assert_eq!(
        members(&annihilator_of_int(&z8, 2).unwrap()),
        vec![vec![0], vec![4]]
    );
    assert!(annihilator_of_int(&m2f2(), 1).unwrap().is_zero());
    assert_eq!(
        annihilator_of_int(&z8, 2).unwrap().kind(),
        SubmoduleKind::TwoSidedIdeal
    );
}

#[test]
fn idempotent_scans() {
    let z6 = make_zmod(6).unwrap();
    let idem: Vec<_> = idempotents(&z6)
        .unwrap()
        .iter()
        .map(|e| e.coords()[0])
        .collect();
    assert_eq!(idem, vec![0, 1, 3, 4]);
    assert_eq!(idempotents(&gf4()).unwrap().len(), 2);
    let l = lam33();
    let idem = idempotents(l.ring()).unwrap();
    assert_eq!(idem, vec![l.ring().zero(), l.ring().one()]);
}

#[test]
fn radicals() {
    let z4 = make_zmod(4).unwrap();
    assert_eq!(
        members(&jacobson_radical(&z4).unwrap()),
        vec![vec![0], vec![2]]
    );
    assert!(jacobson_radical(&gf4()).unwrap().is_zero());
    let t = t2f2();
    assert_eq!(
        members(&jacobson_radical(&t).unwrap()),
        vec![vec![0, 0, 0], vec![0, 1, 0]]
    );

    assert_eq!(
        members(&prime_radical(&z4).unwrap()),
        vec![vec![0], vec![2]]
    );
    assert!(prime_radical(&make_zmod(6).unwrap()).unwrap().is_zero());
    let l = lam33();
    let n = prime_radical(l.ring()).unwrap();
    assert_eq!(n.len(), 2187);
    assert!(n.members().all(|x| x.coords()[0] == 0));
}

#[test]
fn closures() {
    let z8 = make_zmod(8).unwrap();
    let c = ideal_closure(&z8, &[el(&z8, &[2])], SubmoduleKind::TwoSidedIdeal).unwrap();
    assert_eq!(members(&c), vec![vec![0], vec![2], vec![4], vec![6]]);
    for kind in [
        SubmoduleKind::RightIdeal,
        SubmoduleKind::LeftIdeal,
        SubmoduleKind::TwoSidedIdeal,
        SubmoduleKind::CSubmodule,
        SubmoduleKind::AdditiveSubgroup,
    ] {
        assert!(ideal_closure(&z8, &[], kind).unwrap().is_zero());
    }
    let t = t2f2();
    let c = ideal_closure(&t, &[el(&t, &[0, 1, 0])], SubmoduleKind::TwoSidedIdeal).unwrap();
    assert_eq!(members(&c), vec![vec![0, 0, 0], vec![0, 1, 0]]);
}

#[test]
fn quotients() {
    let z8 = make_zmod(8).unwrap();
    let i = annihilator_of_int(&z8, 2).unwrap();
    let q = quotient_ring(&z8, &i).unwrap();
    assert_eq!((q.order(), q.characteristic()), (4, 4));
    assert_eq!(q.encoding(), Encoding::Table);

    let same = quotient_ring(&z8, &Submodule::zero(&z8, SubmoduleKind::TwoSidedIdeal)).unwrap();
    assert!(same.same_ring(&z8.one()));

    let t = t2f2();
    let q = quotient_ring(&t, &jacobson_radical(&t).unwrap()).unwrap();
    assert_eq!(q.order(), 4);
    assert!(structural_predicates(&q).unwrap().commutative);
    assert_eq!(idempotents(&q).unwrap().len(), 4);

    let right = ideal_closure(&t, &[el(&t, &[1, 0, 0])], SubmoduleKind::RightIdeal).unwrap();
    assert!(matches!(
        quotient_ring(&t, &right),
        Err(RingError::NotTwoSided)
    ));
}

#[test]
fn predicate_records() {
    let z6 = structural_predicates(&make_zmod(6).unwrap()).unwrap();
    assert_eq!(
        z6,
        PredicateRecord {
            commutative: true,
            has_zero_divisors: true,
            reduced: true,
            semiprime: true,
            regular: true,
            right_nonsingular: true,
        }
    );
    let z4 = make_zmod(4).unwrap();
    let p = structural_predicates(&z4).unwrap();
    assert!(!p.reduced && !p.semiprime && !p.right_nonsingular);
    assert_eq!(square_zero_witness(&z4).unwrap(), Some(el(&z4, &[2])));
    assert_eq!(singular_witness(&z4).unwrap(), Some(el(&z4, &[2])));

    let t = t2f2();
    let c = center(&t).unwrap();
    let c_ring = subring(&t, c.set(), "scalars").unwrap();
    assert!(!structural_predicates(&t).unwrap().semiprime);
    assert!(structural_predicates(&c_ring).unwrap().semiprime);
}

#[test]
fn right_socles() {
    let z4 = make_zmod(4).unwrap();
    assert_eq!(members(&socle_right(&z4).unwrap()), vec![vec![0], vec![2]]);
    assert_eq!(socle_right(&gf4()).unwrap().len(), 4);
    assert_eq!(socle_right(&make_zmod(6).unwrap()).unwrap().len(), 6);
}

// ---- center and essentiality ---------------------------------------------

#[test]
fn centers() {
    let m = m2f2();
    let c = center(&m).unwrap();
    let got: Vec<_> = c.members().map(|e| e.coords().to_vec()).collect();
    assert_eq!(got, vec![vec![0, 0, 0, 0], vec![1, 0, 0, 1]]);
    assert_eq!(center(&make_zmod(8).unwrap()).unwrap().len(), 8);
    assert_eq!(center(lam33().ring()).unwrap().len(), 243);
}

#[test]
fn commutators() {
    let l = lam33();
    let r = l.ring();
    let (e1, e2) = (l.generator(1), l.generator(2));
    assert_eq!(commutator(r, &e1, &e2).unwrap(), mono(&l, 2, &[1, 2]));
    assert!(commutator(r, &e1, &mono(&l, 1, &[2, 3])).unwrap().is_zero());
    assert!(commutator(r, &e1, &e1).unwrap().is_zero());
    let z2 = f2();
    assert!(matches!(
        commutator(r, &e1, &z2.one()),
        Err(RingError::RingMismatch)
    ));
}

#[test]
fn cyclic_submodules_over_the_center() {
    let t = t2f2();
    let e12 = el(&t, &[0, 1, 0]);
    assert_eq!(
        members(&cyclic_c_submodule(&t, &e12).unwrap()),
        vec![vec![0, 0, 0], vec![0, 1, 0]]
    );
    assert!(cyclic_c_submodule(&t, &t.zero()).unwrap().is_zero());
    // C = span{1, e1^e2, e1^e3, e2^e3, e1^e2^e3}, so e1 C = {a e1 + b e1^e2^e3}.
    let l = lam33();
    assert_eq!(
        cyclic_c_submodule(l.ring(), &l.generator(1)).unwrap().len(),
        9
    );
}

#[test]
fn essential_submodules() {
    let z8 = make_zmod(8).unwrap();
    assert!(
        is_essential_c_submodule(&annihilator_of_int(&z8, 2).unwrap())
            .unwrap()
            .essential
    );
    let z6 = make_zmod(6).unwrap();
    let e = is_essential_c_submodule(&annihilator_of_int(&z6, 2).unwrap()).unwrap();
    assert!(!e.essential);
    assert_eq!(e.witness, Some(el(&z6, &[2])));
    let whole = ideal_closure(&z6, &[z6.one()], SubmoduleKind::TwoSidedIdeal).unwrap();
    assert!(is_essential_c_submodule(&whole).unwrap().essential);

    let right = ideal_closure(&z6, &[z6.one()], SubmoduleKind::RightIdeal).unwrap();
    assert!(matches!(
        is_essential_c_submodule(&right),
        Err(RingError::PreconditionViolated(_))
    ));
}

#[test]
fn centrally_essential_rings() {
    let l = lam33();
    let e = is_centrally_essential(l.ring()).unwrap();
    assert!(e.essential && e.witness.is_none());
    for m in [2, 4, 6, 9] {
        assert!(
            is_centrally_essential(&make_zmod(m).unwrap())
                .unwrap()
                .essential
        );
    }
    // The least witness is E22: E22 C = {0, E22} misses C \ {0}. E12 is a
    // witness too but comes later in index order.
    let m = m2f2();
    let e = is_centrally_essential(&m).unwrap();
    assert!(!e.essential);
    assert_eq!(e.witness, Some(el(&m, &[0, 0, 0, 1])));
    let e12_c = cyclic_c_submodule(&m, &el(&m, &[0, 1, 0, 0])).unwrap();
    assert_eq!(e12_c.len(), 2);
    // E12 is also a witness, just not the least one
    let c = center(&m).unwrap();
    assert!(e12_c.members().all(|x| x.is_zero() || !c.contains(&x)));
}

#[test]
fn socles_over_the_center() {
    let z4 = make_zmod(4).unwrap();
    assert_eq!(
        socle_c_module(&z4).unwrap().set(),
        socle_right(&z4).unwrap().set()
    );
    assert_eq!(socle_c_module(&gf4()).unwrap().len(), 4);

    // Soc(R_C) is killed by J(C) = span{e_ij, e123} on the right, which
    // leaves span{e12, e13, e23, e123}; Soc(R_R) is killed by J and is
    // span{e123}.
    let l = lam33();
    let r = l.ring().with_limits(Limits {
        socle_cap: 6561,
        ..Limits::default()
    });
    assert_eq!(socle_c_module(&r).unwrap().len(), 81);
    assert_eq!(socle_right(&r).unwrap().len(), 3);
    assert!(matches!(
        socle_right(l.ring()),
        Err(RingError::SizeLimitExceeded { .. })
    ));
}

// ---- exterior algebras ----------------------------------------------------

#[test]
fn exterior_products() {
    let l = lam33();
    let r = l.ring();
    assert_eq!(
        r.mul(&l.generator(1), &l.generator(2)),
        mono(&l, 1, &[1, 2])
    );
    let x = r.add(&l.generator(3), &mono(&l, 2, &[1, 2]));
    assert_eq!(r.mul(&x, &r.one()), x);
    let e23 = mono(&l, 1, &[2, 3]);
    assert!(r.mul(&e23, &e23).is_zero());

    let f = l.base().clone();
    let (v1, v2) = (
        l.view(&l.generator(1)).unwrap(),
        l.view(&l.generator(2)).unwrap(),
    );
    let p = exterior_mul(&f, &v1, &v2).unwrap();
    assert_eq!(l.embed(&p), mono(&l, 1, &[1, 2]));
}

#[test]
fn exterior_builds() {
    assert_eq!(build_exterior(&f3(), 3).unwrap().order(), 6561);
    let z4 = make_zmod(4).unwrap();
    let a0 = build_exterior(&z4, 0).unwrap();
    assert!(a0.same_ring(&z4.one()));
    let l = build_exterior(&z4, 2).unwrap();
    assert_eq!((l.order(), l.characteristic()), (256, 4));
    assert!(matches!(
        build_exterior(&z4, 17),
        Err(RingError::InvalidArgument(_))
    ));
    assert!(matches!(
        build_exterior(&make_zmod(8).unwrap(), 3),
        Err(RingError::SizeLimitExceeded { .. })
    ));
}

#[test]
fn grade_projections() {
    let l = lam33();
    let r = l.ring();
    let f = l.base().clone();
    let x = r.add(&r.add(&r.one(), &l.generator(1)), &mono(&l, 1, &[1, 2]));
    let v = l.view(&x).unwrap();
    assert_eq!(l.embed(&v.grade_project(&f, 1)), l.generator(1));
    assert_eq!(l.embed(&v.grade_project(&f, 4)), r.zero());
    // c = c0 + c' with c0 in A
    let c = r.add(
        &r.add(&mono(&l, 2, &[]), &mono(&l, 1, &[1])),
        &mono(&l, 1, &[2, 3]),
    );
    assert_eq!(
        l.embed(&l.view(&c).unwrap().grade_project(&f, 0)),
        mono(&l, 2, &[])
    );
}

// ---- criteria -----------------------------------------------------------------

#[test]
fn ann2_and_characteristic() {
    let z8 = make_zmod(8).unwrap();
    let z6 = make_zmod(6).unwrap();
    assert!(ann2_essential(&z8).unwrap().essential);
    assert_eq!(ann2_essential(&z6).unwrap().witness, Some(el(&z6, &[2])));
    assert!(ann2_essential(&f2()).unwrap().essential);

    assert_eq!(lemma22_check(&z8).unwrap(), (true, true));
    assert_eq!(lemma22_check(&z6).unwrap(), (false, false));
    let z2z4 = make_direct_product(&f2(), &make_zmod(4).unwrap()).unwrap();
    assert_eq!(z2z4.characteristic(), 4);
    assert_eq!(lemma22_check(&z2z4).unwrap(), (true, true));
}

#[test]
fn exterior_criterion_instances() {
    assert!(thm13_check(&f3(), 3).unwrap());
    assert!(!thm13_check(&f3(), 2).unwrap());
    let z4 = make_zmod(4).unwrap();
    assert!(thm13_check(&z4, 2).unwrap());
    let oracle = is_centrally_essential(&build_exterior(&z4, 2).unwrap()).unwrap();
    assert!(oracle.essential);

    let z8 = make_zmod(8).unwrap();
    assert_eq!(
        thm14_check(&z8, 2).unwrap(),
        Thm14Verdict {
            part1: true,
            part2: None
        }
    );
    assert_eq!(
        thm14_check(&f3(), 2).unwrap(),
        Thm14Verdict {
            part1: false,
            part2: Some(false)
        }
    );
    assert_eq!(
        thm14_check(&f2(), 2).unwrap(),
        Thm14Verdict {
            part1: true,
            part2: Some(true)
        }
    );
}

#[test]
fn idempotents_are_central() {
    let l = lam33();
    assert_eq!(prop24_check(l.ring()).unwrap(), None);
    assert_eq!(prop24_check(&make_zmod(6).unwrap()).unwrap(), None);
    let z2z2 = make_direct_product(&f2(), &f2()).unwrap();
    assert_eq!(prop24_check(&z2z2).unwrap(), None);
    assert!(matches!(
        prop24_check(&m2f2()),
        Err(RingError::PreconditionViolated(_))
    ));
}

#[test]
fn five_conditions() {
    let z6 = prop28_report(&make_zmod(6).unwrap()).unwrap();
    assert_eq!(z6.conditions, [true; 5]);
    let z4 = prop28_report(&make_zmod(4).unwrap()).unwrap();
    assert_eq!(z4.conditions, [false; 5]);
    let t = prop28_report(&t2f2()).unwrap();
    assert!(!t.centrally_essential);
    assert!(!t.ring.semiprime && t.center.semiprime);
}

#[test]
fn quotient_by_the_radical() {
    let l = lam33();
    let t = thm15_part1_check(l.ring()).unwrap();
    assert_eq!((t.radical_size, t.quotient_size), (2187, 3));
    let t = thm15_part1_check(&make_zmod(8).unwrap()).unwrap();
    assert_eq!(t.quotient_size, 2);
    let t = thm15_part1_check(&make_zmod(6).unwrap()).unwrap();
    assert_eq!((t.radical_size, t.quotient_size), (1, 6));
}

#[test]
fn probes() {
    let l = lam33();
    let p = open_question_probe(l.ring()).unwrap();
    assert!(p.q1.commutative);
    assert!(p.q2.prime_radical_is_jacobson);
    assert!(matches!(p.q3, SocleFinding::Skipped { .. }));
    assert_eq!(
        (
            p.q4.center_size,
            p.q4.radical_size,
            p.q4.intersection_size,
            p.q4.sum_size
        ),
        (243, 2187, 81, 6561)
    );
    assert!(p.q4.holds);

    let z8 = open_question_probe(&make_zmod(8).unwrap()).unwrap();
    assert!(z8.q1.commutative && z8.q4.holds);
    assert_eq!(
        z8.q3,
        SocleFinding::Computed {
            socle_over_center: 2,
            socle_right: 2,
            equal: true
        }
    );

    // exploratory only: runs, no expected values
    let z4 = make_zmod(4).unwrap();
    open_question_probe(&build_exterior(&z4, 2).unwrap()).unwrap();

    assert!(matches!(
        open_question_probe(&m2f2()),
        Err(RingError::PreconditionViolated(_))
    ));
}

// ---- constructors and spec files ------------------------------------------------

#[test]
fn constructors() {
    let z8 = make_zmod(8).unwrap();
    assert_eq!((z8.order(), z8.characteristic()), (8, 8));
    assert_eq!(make_zmod(2).unwrap().order(), 2);
    assert_eq!(f3().order(), 3);
    let g = gf4();
    assert_eq!(idempotents(&g).unwrap().len(), 2);
    assert!(zero_divisor_witness(&g).unwrap().is_none());
    assert!(matches!(
        make_gf(2, 2, &[1, 0]),
        Err(RingError::NotIrreducible { .. })
    ));

    let m = m2f2();
    assert_eq!((m.order(), center(&m).unwrap().len()), (16, 2));
    assert!(make_matrix_ring(&g, 1).unwrap().same_ring(&g.one()));
    let t = t2f2();
    assert_eq!(t.order(), 8);
    let scalars: Vec<_> = center(&t)
        .unwrap()
        .members()
        .map(|e| e.coords().to_vec())
        .collect();
    assert_eq!(scalars, vec![vec![0, 0, 0], vec![1, 0, 1]]);
    assert_eq!(make_upper_triangular(&f2(), 1).unwrap().order(), 2);

    let z2z3 = make_direct_product(&f2(), &f3()).unwrap();
    let z6 = make_zmod(6).unwrap();
    let (a, b) = (classify(&z2z3).unwrap(), classify(&z6).unwrap());
    assert_eq!((a.size, a.characteristic), (6, 6));
    assert_eq!(a.predicates, b.predicates);
    assert_eq!(
        (
            a.center_size,
            a.idempotents,
            a.radical_size,
            a.centrally_essential
        ),
        (
            b.center_size,
            b.idempotents,
            b.radical_size,
            b.centrally_essential
        )
    );
    let z2z4 = make_direct_product(&f2(), &make_zmod(4).unwrap()).unwrap();
    assert!(ann2_essential(&z2z4).unwrap().essential);
}

#[test]
fn spec_files() {
    let text = write_spec(&make_zmod(8).unwrap()).unwrap();
    assert_eq!(parse_spec(&text).unwrap().moduli, vec![8]);
    let err = parse_spec(r#"{"name":"x","moduli":[2],"one":[1],"mul":[[[1]]],"colour":1}"#)
        .unwrap_err()
        .to_string();
    assert!(err.contains("colour"), "{err}");

    let l = lam33();
    let back = parse_spec(&write_spec(l.ring()).unwrap())
        .unwrap()
        .validate()
        .unwrap();
    let (a, b) = (classify(l.ring()).unwrap(), classify(&back).unwrap());
    assert_eq!(a, b);
}

#[test]
fn corpus_lookup() {
    let c = Corpus::builtin();
    assert_eq!(c.ring("lambda-f3-3").unwrap().order(), 6561);
    assert!(matches!(c.ring("nope"), Err(RingError::UnknownEntry(_))));
    assert!(c.names(true).len() > c.names(false).len());
}
