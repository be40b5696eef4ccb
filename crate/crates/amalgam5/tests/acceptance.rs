//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use num_bigint::BigUint;

use amalgam5::engine::{
    bfs_closure, elementary_abelian_2_rank, group_order_formula, matrix_group_order,
    verify_presentation_gl23, Family, MatGroup, SimsOptions, DEFAULT_FIELD_CAP,
};
use amalgam5::ff::{is_prime, legendre_minus_two, Field, Legendre, QuadExtCtx};
use amalgam5::matrix::{builtin_generators, DEFAULT_ORDER_CAP};
use amalgam5::reduction::{reduce_elem, IdealSign, ReductionContext};
use amalgam5::report::{Status, VerificationReport};
use amalgam5::ring::RingElem;
use amalgam5::suites::{self, ModLevel, ModOptions};

fn status_of(report: &VerificationReport, id: &str) -> Status {
    report
        .checks
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("check {id} missing from report"))
        .status
}

fn witness_of(report: &VerificationReport, id: &str) -> String {
    report
        .checks
        .iter()
        .find(|c| c.id == id)
        .map(|c| c.witness.clone())
        .unwrap_or_default()
}

fn assert_pass(report: &VerificationReport, id: &str) {
    assert_eq!(
        status_of(report, id),
        Status::Pass,
        "check {id} did not pass: {}",
        witness_of(report, id)
    );
}

#[test]
fn acceptance_1_exact_layer() {
    let t = Instant::now();
    let report = suites::verify_exact(&builtin_generators(), 0);
    for id in [
        "exact.unitary.a",
        "exact.unitary.b",
        "exact.unitary.c",
        "exact.unitary.d",
        "exact.det.a",
        "exact.det.b",
        "exact.det.c",
        "exact.det.d",
        "exact.order.a",
        "exact.order.b",
        "exact.order.c",
        "exact.order.d",
        "exact.order.bc",
        "exact.order.ad",
        "exact.bc4.nontrivial",
        "exact.bc4.central",
        "exact.a_word_in_bc",
        "exact.closure.d8",
        "exact.closure.s4",
        "exact.closure.gl23",
        "exact.d_not_in_h",
        "exact.h_cap_k",
    ] {
        assert_pass(&report, id);
    }
    assert!(report.all_passed(), "exact suite has non-passing checks");
    println!(
        "ACCEPTANCE 1: PASS - exact layer: unitarity, det 1, orders (a 4, b 2, c 3, d 3, bc 8, ad 2), \
         central (bc)^4, a as a word in b and c, closures 8/24/48, d not in H, |H cap K| = 8 \
         [{} ms]",
        t.elapsed().as_millis()
    );
}

#[test]
fn acceptance_2_presentation() {
    let t = Instant::now();
    let g = builtin_generators();
    let rep = verify_presentation_gl23(&g.b, &g.c);
    assert!(rep.relations.iter().all(|r| r.holds), "{}", rep.summary());
    assert_eq!(rep.closure_order, Some(48), "closure must have order 48");
    assert!(
        rep.cover_witness.is_some(),
        "no order-2 transposition preimage outside the centre"
    );
    assert!(rep.passed);
    println!(
        "ACCEPTANCE 2: PASS - all five relations hold, closure order 48, order-2 transposition \
         preimage exhibited ({}) [{} ms]",
        rep.cover_witness.unwrap(),
        t.elapsed().as_millis()
    );
}

#[test]
fn acceptance_3_theorem1_i_p3_both_ideals() {
    let t = Instant::now();
    let opts = ModOptions {
        level: ModLevel::Full,
        ..ModOptions::default()
    };
    // the (1 + sqrt(-2)) ideal (omega -> 2): the 11/110 orbit split and the
    // sharp 4-transitivity certificate
    let minus = suites::verify_mod(3, IdealSign::Minus, &opts).unwrap();
    assert_pass(&minus, "mod.order");
    assert_pass(&minus, "mod.orbits");
    assert!(witness_of(&minus, "mod.orbits").contains("{11, 110}"));
    assert_pass(&minus, "mod.m11.degree11_order");
    assert_pass(&minus, "mod.m11.tower");
    assert!(witness_of(&minus, "mod.m11.tower").contains("[11, 10, 9, 8]"));
    assert_pass(&minus, "mod.m11.degree110_order");
    let t_minus = t.elapsed().as_millis();

    // the conjugate ideal: same order, dual module ({55,66} orbits), exact
    // contragredient identity linking the two reductions
    let t2 = Instant::now();
    let plus = suites::verify_mod(3, IdealSign::Plus, &opts).unwrap();
    assert_pass(&plus, "mod.order");
    assert_pass(&plus, "mod.orbits");
    assert!(witness_of(&plus, "mod.orbits").contains("{55, 66}"));
    assert_pass(&plus, "mod.duality");
    assert_pass(&minus, "mod.duality");
    println!(
        "ACCEPTANCE 3: PASS - both ideals give order 7920; (1+sqrt(-2)) ideal: orbits {{11,110}}, \
         degree-11 image of order 7920, tower [11,10,9,8] with trivial final stabilizer \
         [{t_minus} ms]; conjugate ideal: dual module, orbits {{55,66}}, contragredient identity \
         verified [{} ms]",
        t2.elapsed().as_millis()
    );
}

#[test]
fn acceptance_4_theorem1_ii_sl_at_11_17_19() {
    let opts = ModOptions {
        level: ModLevel::Full,
        ..ModOptions::default()
    };
    let mut timings = Vec::new();
    for p in [11u64, 17, 19] {
        let t = Instant::now();
        let report = suites::verify_mod(p, IdealSign::Plus, &opts).unwrap();
        assert_pass(&report, "mod.det_one");
        assert_pass(&report, "mod.order");
        let target = group_order_formula(Family::Sl, 5, p).unwrap().value;
        assert!(
            witness_of(&report, "mod.order").contains(&target.to_string()),
            "certified order must equal |SL(5,{p})|"
        );
        let ms = t.elapsed().as_millis();
        assert!(ms < 120_000, "p = {p} exceeded the 2-minute budget: {ms} ms");
        timings.push(format!("p={p}: {ms} ms"));
    }
    println!(
        "ACCEPTANCE 4: PASS - certified |L_p| = |SL(5,p)| at p = 11, 17, 19 ({})",
        timings.join(", ")
    );
}

#[test]
fn acceptance_5_theorem1_iii_su_at_5_and_7() {
    let opts = ModOptions {
        level: ModLevel::Full,
        ..ModOptions::default()
    };
    let t = Instant::now();
    let report = suites::verify_mod(5, IdealSign::Plus, &opts).unwrap();
    assert_pass(&report, "mod.su_form");
    assert_pass(&report, "mod.order");
    let target = group_order_formula(Family::Su, 5, 5).unwrap().value;
    assert!(witness_of(&report, "mod.order").contains(&target.to_string()));
    let ms5 = t.elapsed().as_millis();
    assert!(ms5 < 600_000, "p = 5 exceeded the 10-minute budget: {ms5} ms");

    // p = 7 is optional per the criterion; here the projective domain with a
    // provably trivial scalar kernel makes it run, so a skip only happens if
    // the memory estimate rejects it.
    let t7 = Instant::now();
    let report7 = suites::verify_mod(7, IdealSign::Plus, &opts).unwrap();
    assert_pass(&report7, "mod.su_form");
    match status_of(&report7, "mod.order") {
        Status::Pass => {
            assert_pass(&report7, "mod.scalar_kernel");
            let target7 = group_order_formula(Family::Su, 5, 7).unwrap().value;
            assert!(witness_of(&report7, "mod.order").contains(&target7.to_string()));
            println!(
                "ACCEPTANCE 5: PASS - certified |L_5| = |SU(5,5)| with the Hermitian-form check \
                 [{ms5} ms]; p = 7 certified too (projective domain, trivial scalar kernel) [{} ms]",
                t7.elapsed().as_millis()
            );
        }
        Status::Skip | Status::Inconclusive => {
            let reason = witness_of(&report7, "mod.order");
            assert!(!reason.is_empty(), "a skipped p = 7 must carry a reason");
            println!(
                "ACCEPTANCE 5: PASS - certified |L_5| = |SU(5,5)| [{ms5} ms]; p = 7 skipped with \
                 reason: {reason}"
            );
        }
        Status::Fail => panic!(
            "p = 7 order check failed outright: {}",
            witness_of(&report7, "mod.order")
        ),
    }
}

#[test]
fn acceptance_6_elementary_abelian_remarks() {
    let t = Instant::now();
    let g = builtin_generators();
    let s = match ReductionContext::new(3, IdealSign::Minus).unwrap() {
        ReductionContext::Split(s) => s,
        _ => unreachable!(),
    };
    let ops = MatGroup::new(s.field);
    let l3 = bfs_closure(
        &ops,
        &[s.reduce(&g.a), s.reduce(&g.b), s.reduce(&g.c), s.reduce(&g.d)],
        &["a", "b", "c", "d"],
        DEFAULT_FIELD_CAP,
    )
    .unwrap();
    assert_eq!(l3.len(), 7920);
    assert_eq!(elementary_abelian_2_rank(&ops, &l3), 2);

    let bf = bfs_closure(
        &ops,
        &[s.reduce(&g.b), s.reduce(&g.f)],
        &["b", "f"],
        DEFAULT_FIELD_CAP,
    )
    .unwrap();
    assert_eq!(bf.len(), 80);
    assert_eq!(elementary_abelian_2_rank(&ops, &bf), 4);
    let ms = t.elapsed().as_millis();
    assert!(ms < 30_000, "criterion 6 exceeded 30 s: {ms} ms");
    println!(
        "ACCEPTANCE 6: PASS - L_3 has 2-rank 2 (no elementary abelian of order 8); \
         <b,f> mod 3 has order 80 and 2-rank 4 (order-16 elementary abelian present) [{ms} ms]"
    );
}

#[test]
fn acceptance_7_spectrum() {
    let t = Instant::now();
    let g = builtin_generators();
    let bc = &g.b * &g.c;
    assert_eq!(bc.element_order(DEFAULT_ORDER_CAP), Ok(8));
    assert!(bc.pow(8).is_identity());
    assert!(!bc.pow(4).is_identity());
    assert_eq!(bc.char_poly().is_self_reciprocal(), Ok(false));
    let ms = t.elapsed().as_millis();
    assert!(ms < 1_000, "criterion 7 exceeded 1 s: {ms} ms");
    println!(
        "ACCEPTANCE 7: PASS - (bc)^8 = I, (bc)^4 != I, char poly of bc is not self-reciprocal \
         [{ms} ms]"
    );
}

#[test]
fn acceptance_8_property_suites() {
    let t = Instant::now();
    // ring axioms and conjugation laws: 1000 deterministic pseudo-random cases
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
        RingElem::new(rng.gen_range(-9999i64..10000), rng.gen_range(-9999i64..10000), rng.gen_range(0u32..5))
    };
    for _ in 0..1000 {
        let u = draw(&mut rng);
        let v = draw(&mut rng);
        let w = draw(&mut rng);
        assert_eq!(&(&u + &v) + &w, &u + &(&v + &w));
        assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        assert_eq!(&u * &v, &v * &u);
        assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        assert_eq!((&u * &v).conj(), &u.conj() * &v.conj());
        assert_eq!((&u + &v).conj(), &u.conj() + &v.conj());
    }

    // reduce . conj = frobenius . reduce at inert primes, 100 cases
    for p in [5u64, 7] {
        let ctx = QuadExtCtx::new(p).unwrap();
        for _ in 0..50 {
            let u = draw(&mut rng);
            let lhs = reduce_elem(&ctx, ctx.t(), &u.conj());
            let rhs = ctx.frobenius(reduce_elem(&ctx, ctx.t(), &u));
            assert_eq!(lhs, rhs, "p = {p}");
        }
    }

    // chain order = closure size for the three subgroup images at p in {3,5,11}
    let g = builtin_generators();
    let subgroups: [Vec<&amalgam5::MatrixR>; 3] = [
        vec![&g.a, &g.b],
        vec![&g.a, &g.b, &g.d],
        vec![&g.b, &g.c],
    ];
    for p in [3u64, 5, 11] {
        match ReductionContext::new(p, IdealSign::Plus).unwrap() {
            ReductionContext::Split(s) => {
                for gens in &subgroups {
                    let reduced: Vec<_> = gens.iter().map(|m| s.reduce(m)).collect();
                    let ops = MatGroup::new(s.field);
                    let cl = bfs_closure(&ops, &reduced, &["g"], DEFAULT_FIELD_CAP).unwrap();
                    let res = matrix_group_order(&s.field, &reduced, &SimsOptions::default()).unwrap();
                    assert_eq!(res.order, BigUint::from(cl.len() as u64), "split p = {p}");
                }
            }
            ReductionContext::Inert(i) => {
                for gens in &subgroups {
                    let reduced: Vec<_> = gens.iter().map(|m| i.reduce(m)).collect();
                    let ops = MatGroup::new(i.field);
                    let cl = bfs_closure(&ops, &reduced, &["g"], DEFAULT_FIELD_CAP).unwrap();
                    let res = matrix_group_order(&i.field, &reduced, &SimsOptions::default()).unwrap();
                    assert_eq!(res.order, BigUint::from(cl.len() as u64), "inert p = {p}");
                }
            }
        }
    }

    // quadratic character of -2 against exhaustive search for every odd prime < 1000
    for p in (3u64..1000).filter(|&n| n % 2 == 1 && is_prime(n)) {
        let exhaustive = (1..p).any(|r| r * r % p == p - 2);
        let expected = if exhaustive { Legendre::Square } else { Legendre::NonSquare };
        assert_eq!(legendre_minus_two(p), Ok(expected), "p = {p}");
    }

    let ms = t.elapsed().as_millis();
    assert!(ms < 120_000, "criterion 8 exceeded 2 minutes: {ms} ms");
    println!(
        "ACCEPTANCE 8: PASS - ring axioms and conjugation laws (1000 cases), \
         frobenius/conjugation compatibility (100 cases at p = 5, 7), chain order = closure size \
         for the 8/24/48 subgroups at p = 3, 5, 11, quadratic character verified exhaustively for \
         all odd primes < 1000 [{ms} ms]"
    );
}
