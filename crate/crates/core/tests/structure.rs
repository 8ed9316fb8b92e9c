use std::sync::Arc;

use hopf_ore::hopf::{render, HopfStructure};
use hopf_ore::samples;
use hopf_ore::structure::{
    check_hopf_ideal, check_ideal, ideal_form, make_quotient, rank_crosscheck, rank_of, skew_primitives, IdealCheck,
    IdealForm, QuotientHopf, Rank,
};
use hopf_ore::Error;

#[test]
fn rank_examples() {
    assert_eq!(rank_of(&samples::taft(3).unwrap()).rank, Rank::Two);
    assert_eq!(rank_of(&samples::integers_q2().unwrap()).rank, Rank::One);
    assert_eq!(rank_of(&samples::case_three(3).unwrap()).rank, Rank::Infinite);
    assert_eq!(rank_of(&samples::z4_case_two().unwrap()).rank, Rank::One);
}

#[test]
fn skew_primitives_z9() {
    let h = samples::z9_zeta3().unwrap();
    let g = h.group();
    let a3 = g.pow(h.a(), 3);
    let s = skew_primitives(&h, &a3, 4, None).unwrap();
    let rendered: Vec<String> = s.basis.iter().map(render).collect();
    assert_eq!(rendered, vec!["x^3", "1 - g^3"]);
    assert!(s.verified);
    let s = skew_primitives(&h, h.a(), 4, None).unwrap();
    let rendered: Vec<String> = s.basis.iter().map(render).collect();
    assert_eq!(rendered, vec!["x", "1 - g"]);
    let g2 = g.pow(h.a(), 2);
    let s = skew_primitives(&h, &g2, 4, None).unwrap();
    assert_eq!(s.dim(), 1);
}

#[test]
fn crosscheck_char_two_differences() {
    let h = samples::case_three(2).unwrap();
    let c = rank_crosscheck(&h, 4, None).unwrap();
    assert!(c.agrees(), "{c:?}");
    // −1 = 1 in F_2
    assert_eq!(c.generators_found, vec!["x", "x^2 + x", "x^4 + x^2"]);
    let diff = h.x_pow(4).sub(&h.x_pow(2));
    assert_eq!(render(&diff), "x^4 + x^2");
}

#[test]
fn crosscheck_fixtures() {
    for (name, h, sample) in [
        ("taft3", samples::taft(3).unwrap(), None),
        ("z9", samples::z9_zeta3().unwrap(), None),
        ("z4", samples::z4_case_two().unwrap(), None),
        ("f3", samples::case_three(3).unwrap(), None),
        ("zq2", samples::integers_q2().unwrap(), Some(samples::integer_sample(2))),
    ] {
        let c = rank_crosscheck(&h, 6, sample.as_deref()).unwrap();
        assert!(c.agrees(), "{name}: {c:?}");
    }
}

#[test]
fn quotients() {
    for n in 2..=4u64 {
        let h = Arc::new(samples::taft(n).unwrap());
        let form = ideal_form(&h, n as u32, &h.ctx().zero()).unwrap();
        assert_eq!(form, IdealForm::XnOnly(n as u32));
        let q = make_quotient(&h, form.clone()).unwrap();
        assert_eq!(q.dimension(), Some(n * n));
        assert!(q.check_hopf_axioms().unwrap().passed());
        assert!(check_hopf_ideal(&h, &form, 2).unwrap().passed());
    }
    let h = Arc::new(samples::z4_sign().unwrap());
    let one = h.ctx().one();
    let form = ideal_form(&h, 2, &one).unwrap();
    assert_eq!(form, IdealForm::Skew(2, one.clone()));
    let q = make_quotient(&h, form.clone()).unwrap();
    assert_eq!(q.dimension(), Some(8));
    let r = q.check_hopf_axioms().unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(check_hopf_ideal(&h, &form, 2).unwrap().passed());
    let x2 = q.x_pow(2);
    assert_eq!(render(&x2), "1 - g^2");

    let bad = QuotientHopf::from_generator(h.clone(), 2, h.one()).unwrap();
    let rep = check_ideal(&bad, 1).unwrap();
    assert_eq!(rep.failure.unwrap().check, IdealCheck::Counit);
    assert!(matches!(ideal_form(&h, 3, &one), Err(Error::IdealConstraint(_))));
}
