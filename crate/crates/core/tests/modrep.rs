use std::sync::Arc;

use hopf_ore::group::Character;
use hopf_ore::hopf::{HElement, HopfOre, HopfStructure};
use hopf_ore::linalg::Matrix;
use hopf_ore::modrep::*;
use hopf_ore::samples;
use hopf_ore::structure::{make_quotient, IdealForm};
use hopf_ore::{FieldCtx, FieldElement};

fn parent_of(h: HopfOre) -> ModuleParent {
    ModuleParent::from_ore(Arc::new(h)).unwrap()
}

fn character(p: &ModuleParent, images: Vec<FieldElement>) -> Character {
    Character::new(p.ctx(), p.group(), images).unwrap()
}

/// ℤ/4 over ℚ(i), θ(g) = −1, a = g, so χ(g) = −1 and s = 2.
fn z4() -> ModuleParent {
    parent_of(samples::z4_sign().unwrap())
}

fn z4_skew() -> ModuleParent {
    let h = Arc::new(samples::z4_sign().unwrap());
    let one = h.ctx().one();
    let q = make_quotient(&h, IdealForm::Skew(2, one)).unwrap();
    ModuleParent::from_quotient(Arc::new(q)).unwrap()
}

fn block(p: &ModuleParent, l: &Character, b: &FieldElement) -> ModuleRep {
    realize(p, &SimpleSpec::BlockS(l.clone(), b.clone())).unwrap()
}

fn one_dim(p: &ModuleParent, l: &Character) -> ModuleRep {
    realize(p, &SimpleSpec::OneDim(l.clone())).unwrap()
}

fn intertwines(t: &Matrix, m: &ModuleRep, n: &ModuleRep) -> bool {
    m.generators().iter().zip(n.generators()).all(|(a, b)| t.mul(a).unwrap() == b.mul(t).unwrap())
}

#[test]
fn realize_matrices() {
    let p = z4();
    let k = p.ctx().clone();
    let eps = Character::trivial(&k, p.group());
    let v = one_dim(&p, &eps);
    assert_eq!(v.group_matrices()[0], Matrix::identity(&k, 1));
    assert!(v.x_matrix().is_zero());

    let i = k.zeta();
    let lam = character(&p, vec![i.clone()]);
    let m = block(&p, &lam, &k.one());
    let rho = Matrix::from_rows(&k, vec![vec![i.clone(), k.zero()], vec![k.zero(), -&i]]).unwrap();
    assert_eq!(m.group_matrices()[0], rho);
    let x = Matrix::from_rows(&k, vec![vec![k.zero(), k.one()], vec![k.one(), k.zero()]]).unwrap();
    assert_eq!(m.x_matrix(), &x);
    assert!(validate_module(&m).unwrap().passed());
}

#[test]
fn x_to_the_s_is_beta() {
    let p = parent_of(samples::cyclic_case_one(12, 12, 4, 1).unwrap());
    let k = p.ctx().clone();
    for e in 0..12 {
        let lam = character(&p, vec![k.zeta_pow(e)]);
        for b in [k.zero(), k.one(), k.zeta_pow(5) + k.from_i64(2)] {
            let m = block(&p, &lam, &b);
            assert_eq!(m.dim(), 3);
            assert_eq!(m.x_matrix().pow(3).unwrap(), Matrix::scalar(&k, 3, &b));
            assert!(validate_module(&m).unwrap().passed());
        }
    }
}

#[test]
fn quotient_annihilation() {
    let p = z4_skew();
    let k = p.ctx().clone();
    let lam = character(&p, vec![k.zeta()]);
    assert!(validate_module(&block(&p, &lam, &k.from_i64(2))).unwrap().passed());
    let bad = validate_module(&block(&p, &lam, &k.one())).unwrap();
    assert!(matches!(bad.failures[..], [ModuleFailure::IdealAction { .. }]));

    // ℤ/8 over ℚ(ζ₈), θ(g) = i, a = g²: the ideal ⟨x², 1 − a²⟩
    let h = Arc::new(samples::cyclic_case_one(8, 8, 2, 2).unwrap());
    let one = h.ctx().one();
    assert_eq!(hopf_ore::structure::ideal_form(&h, 2, &one).unwrap(), IdealForm::XnAndGroup(2));
    let q = make_quotient(&h, IdealForm::XnAndGroup(2)).unwrap();
    let qp = ModuleParent::from_quotient(Arc::new(q)).unwrap();
    let k = qp.ctx().clone();
    for e in 0..8 {
        let lam = character(&qp, vec![k.zeta_pow(e)]);
        let passes = validate_module(&one_dim(&qp, &lam)).unwrap().passed();
        assert_eq!(passes, lam.eval(qp.a()).pow(2).is_one(), "lambda(g) = zeta^{e}");
    }
}

#[test]
fn weights() {
    let p = z4();
    let k = p.ctx().clone();
    let lam = character(&p, vec![k.zeta()]);
    let m = block(&p, &lam, &k.one());
    let wd = weight_spaces_default(&m).unwrap();
    assert!(wd.is_weight_module);
    let chi_lam = p.chi().mul(&lam).unwrap();
    assert_eq!(wd.weights(), {
        let mut w = vec![&lam, &chi_lam];
        w.sort();
        w
    });
    assert_eq!(wd.max_multiplicity(), 1);

    let wd = weight_spaces_default(&one_dim(&p, &lam)).unwrap();
    assert_eq!(wd.weights(), vec![&lam]);

    let sigma = Character::trivial(&k, p.group());
    let t = tensor_module(&block(&p, &sigma, &k.one()), &block(&p, &lam, &k.from_i64(3))).unwrap();
    let wd = weight_spaces_default(&t).unwrap();
    assert!(wd.is_weight_module);
    assert_eq!(wd.spaces.len(), 2);
    assert!(wd.spaces.iter().all(|w| w.space.dim() == 2));
}

#[test]
fn simplicity_and_chains() {
    let p = parent_of(samples::taft(3).unwrap());
    let k = p.ctx().clone();
    let lam = character(&p, vec![k.zeta()]);
    assert_eq!(is_simple(&block(&p, &lam, &k.from_i64(2))).unwrap(), Simplicity::Yes);
    assert_eq!(is_simple(&one_dim(&p, &lam)).unwrap(), Simplicity::Yes);

    let nil = block(&p, &lam, &k.zero());
    let top = vec![k.zero(), k.zero(), k.one()];
    assert_eq!(is_simple(&nil).unwrap(), Simplicity::No(Subspace::span(&k, 3, vec![top])));

    let chain = submodule_lattice_chain(&nil).unwrap();
    assert!(chain.totally_ordered);
    assert_eq!(chain.dims(), vec![0, 1, 2, 3]);
    let chain = submodule_lattice_chain(&block(&p, &lam, &k.one())).unwrap();
    assert!(chain.totally_ordered);
    assert_eq!(chain.dims(), vec![0, 3]);

    let sigma = character(&p, vec![k.zeta_pow(2)]);
    let sum = one_dim(&p, &lam).direct_sum(&one_dim(&p, &sigma)).unwrap();
    let lattice = submodule_lattice_chain(&sum).unwrap();
    assert!(!lattice.totally_ordered);
    assert_eq!(lattice.dims(), vec![0, 1, 1, 2]);
}

#[test]
fn isomorphism_matrix() {
    for (h, s) in [(samples::cyclic_case_one(12, 12, 6, 1).unwrap(), 2), (samples::taft(3).unwrap(), 3)] {
        let p = parent_of(h);
        let k = p.ctx().clone();
        let roots: Vec<FieldElement> =
            k.roots_of_unity().into_iter().filter(|r| r.pow(p.group().order().unwrap() as i64).is_one()).collect();
        let chars: Vec<Character> = roots.iter().map(|r| character(&p, vec![r.clone()])).collect();
        let scalars = [k.zero(), k.one(), k.from_i64(-2)];
        let specs: Vec<(Character, FieldElement)> =
            chars.iter().flat_map(|c| scalars.iter().map(move |b| (c.clone(), b.clone()))).collect();
        let mods: Vec<ModuleRep> = specs.iter().map(|(c, b)| block(&p, c, b)).collect();
        for (i, (si, ai)) in specs.iter().enumerate() {
            for (j, (sj, aj)) in specs.iter().enumerate() {
                let verdict = is_isomorphic(&mods[i], &mods[j]).unwrap();
                let expected = if ai.is_zero() || aj.is_zero() {
                    ai.is_zero() && aj.is_zero() && si == sj
                } else {
                    ai == aj && si.same_class(sj, p.chi()).unwrap()
                };
                match verdict {
                    IsoVerdict::Yes(t) => {
                        assert!(expected, "s = {s}: {i} vs {j}");
                        assert!(intertwines(&t, &mods[i], &mods[j]));
                        assert_eq!(t.rank(), s);
                    }
                    IsoVerdict::No(_) => assert!(!expected, "s = {s}: {i} vs {j}"),
                    IsoVerdict::Undecided => panic!("undecided for {i} vs {j}"),
                }
            }
        }
    }
}

#[test]
fn one_dimensional_isomorphism() {
    let p = z4();
    let k = p.ctx().clone();
    let l = character(&p, vec![k.zeta()]);
    let s = character(&p, vec![-k.zeta()]);
    assert_eq!(
        is_isomorphic(&one_dim(&p, &l), &one_dim(&p, &s)).unwrap(),
        IsoVerdict::No(NonIsoReason::WeightMismatch)
    );
    assert!(is_isomorphic(&one_dim(&p, &l), &one_dim(&p, &l)).unwrap().is_yes());
    assert_eq!(
        is_isomorphic(&block(&p, &l, &k.zero()), &block(&p, &l, &k.one())).unwrap(),
        IsoVerdict::No(NonIsoReason::NoHoms)
    );
}

#[test]
fn tensor_identities() {
    let p = parent_of(samples::cyclic_case_one(12, 12, 4, 1).unwrap());
    let k = p.ctx().clone();
    let eps = Character::trivial(&k, p.group());
    let l = character(&p, vec![k.zeta_pow(5)]);
    let s = character(&p, vec![k.zeta_pow(2)]);
    let a = k.zeta_pow(1) + k.one();
    let unit = one_dim(&p, &eps);
    for m in [block(&p, &s, &a), one_dim(&p, &l), block(&p, &l, &k.zero())] {
        assert!(is_isomorphic(&tensor_module(&unit, &m).unwrap(), &m).unwrap().is_yes());
        assert!(is_isomorphic(&tensor_module(&m, &unit).unwrap(), &m).unwrap().is_yes());
    }
    let ls = l.mul(&s).unwrap();
    let t = tensor_module(&one_dim(&p, &l), &one_dim(&p, &s)).unwrap();
    assert!(is_isomorphic(&t, &one_dim(&p, &ls)).unwrap().is_yes());

    let left = tensor_module(&one_dim(&p, &l), &block(&p, &s, &a)).unwrap();
    let IsoVerdict::Yes(t) = is_isomorphic(&left, &block(&p, &ls, &a)).unwrap() else { panic!() };
    assert!(intertwines(&t, &left, &block(&p, &ls, &a)));
    let right = tensor_module(&block(&p, &s, &a), &one_dim(&p, &l)).unwrap();
    let scaled = &a * &l.eval(p.a()).pow(3);
    assert!(is_isomorphic(&right, &block(&p, &ls, &scaled)).unwrap().is_yes());

    let vm = block(&p, &s, &a);
    let vn = block(&p, &l, &k.one());
    let x = tensor_module(&vm, &vn).unwrap().x_matrix().clone();
    let rho_a = vn.group_action(p.a()).unwrap();
    let expected = vm.x_matrix().kron(&rho_a).add(&Matrix::identity(&k, 3).kron(vn.x_matrix())).unwrap();
    assert_eq!(x, expected);
}

#[test]
fn tensor_splitting_z4() {
    let p = z4();
    let k = p.ctx().clone();
    let sigma = Character::trivial(&k, p.group());
    let lam = character(&p, vec![k.zeta()]);
    let split = decompose_tensor(&p, &sigma, &k.one(), &lam, &k.one()).unwrap();
    assert!(split.scalar.is_zero());
    assert!(split.verified);
    let minus_i = character(&p, vec![-k.zeta()]);
    assert_eq!(
        split.summands,
        vec![SimpleSpec::BlockS(lam.clone(), k.zero()), SimpleSpec::BlockS(minus_i.clone(), k.zero())]
    );

    let split = decompose_tensor(&p, &sigma, &k.one(), &lam, &k.from_i64(2)).unwrap();
    assert!(split.scalar.is_one());
    assert!(split.verified);
    let a = realize(&p, &split.summands[0]).unwrap();
    let b = realize(&p, &split.summands[1]).unwrap();
    assert!(is_isomorphic(&a, &b).unwrap().is_yes());
}

#[test]
fn tensor_splitting_sign_patterns() {
    for (theta_exp, s) in [(6, 2i64), (4, 3)] {
        let p = parent_of(samples::cyclic_case_one(12, 12, theta_exp, 1).unwrap());
        let k = p.ctx().clone();
        for (se, le) in [(0, 1), (3, 5), (7, 2)] {
            let sigma = character(&p, vec![k.zeta_pow(se)]);
            let lam = character(&p, vec![k.zeta_pow(le)]);
            let ls = lam.eval(p.a()).pow(s);
            for sign_a in [1, -1] {
                for sign_b in [1, -1] {
                    let alpha = k.from_i64(sign_a);
                    // β = ∓αλ(a)^s gives c = 0, the other sign gives c ≠ 0
                    let beta = -&(&alpha * &ls) * k.from_i64(sign_b);
                    let split = decompose_tensor(&p, &sigma, &alpha, &lam, &beta).unwrap();
                    assert_eq!(split.scalar.is_zero(), sign_b == 1);
                    assert!(split.verified, "s = {s}, sigma = {sigma}, lambda = {lam}");
                    assert_eq!(split.summands.len(), s as usize);
                }
            }
        }
    }
}

#[test]
fn tensor_splitting_hypothesis() {
    // θ(a) = 1 is not primitive of order |χ| = 4
    let h = Arc::new(samples::cyclic_case_one(8, 8, 2, 4).unwrap());
    assert!(ModuleParent::from_ore(h).is_err());
    // ℤ/12, θ(g) = ζ₁₂³ = i, a = g²: θ(a) = −1 while |χ| = 4
    let p = parent_of(samples::cyclic_case_one(12, 12, 3, 2).unwrap());
    let k = p.ctx().clone();
    let e = Character::trivial(&k, p.group());
    assert!(matches!(decompose_tensor(&p, &e, &k.one(), &e, &k.one()), Err(hopf_ore::Error::Hypothesis(_))));
}

#[test]
fn classification() {
    let h = Arc::new(samples::taft(2).unwrap());
    let q = make_quotient(&h, IdealForm::XnOnly(2)).unwrap();
    let sweedler = ModuleParent::from_quotient(Arc::new(q)).unwrap();
    let c = classify_simples(&sweedler).unwrap();
    assert_eq!(c.simples.len(), 2);
    assert!(c.simples.iter().all(|s| matches!(s, SimpleSpec::OneDim(_))));
    assert!(certify_classification(&c).unwrap().passed());

    let p = z4_skew();
    let k = p.ctx().clone();
    let c = classify_simples(&p).unwrap();
    let sigma = character(&p, vec![-k.zeta()]).class_of(p.chi()).unwrap().representative().clone();
    assert_eq!(
        c.simples,
        vec![
            SimpleSpec::OneDim(character(&p, vec![k.one()])),
            SimpleSpec::OneDim(character(&p, vec![-k.one()])),
            SimpleSpec::BlockS(sigma, k.from_i64(2)),
        ]
    );
    let cert = certify_classification(&c).unwrap();
    assert!(cert.passed());
    assert_eq!((cert.sum_of_squares, cert.algebra_dimension), (6, Some(8)));

    let z = parent_of(samples::integers_q2().unwrap());
    let c = classify_simples(&z).unwrap();
    assert!(c.simples.is_empty());
    assert_eq!(c.families, vec![SimpleFamily::AllOneDimensional]);
}

#[test]
fn indecomposability_and_covers() {
    let p = parent_of(samples::taft(3).unwrap());
    let k = p.ctx().clone();
    let lam = character(&p, vec![k.zeta()]);
    for b in [k.zero(), k.one()] {
        let m = block(&p, &lam, &b);
        assert_eq!(is_indecomposable(&m).unwrap(), Indecomposability::Yes);
        let cover = cyclic_cover_check(&m, &lam).unwrap();
        assert_eq!(cover.witness, Some(vec![k.one(), k.zero(), k.zero()]));
    }
    let v = one_dim(&p, &lam);
    assert!(cyclic_cover_check(&v, &lam).unwrap().holds());
    let vv = v.direct_sum(&v).unwrap();
    assert!(matches!(is_indecomposable(&vv).unwrap(), Indecomposability::No { .. }));
    let cover = cyclic_cover_check(&vv, &lam).unwrap();
    assert!(!cover.holds() && cover.exhaustive);
}

#[test]
fn verma_action_and_maximal_submodules() {
    let p = parent_of(samples::taft(3).unwrap());
    let k = p.ctx().clone();
    let lam = character(&p, vec![k.zeta_pow(2)]);
    let v = verma(&p, &lam).unwrap();
    let h = p.ore();
    let g = h.grouplike(&p.group().generator(0));
    assert_eq!(v.apply(&h.x_pow(1), &v.basis_element(2)).unwrap(), v.basis_element(3));
    let gx = v.apply(&g, &v.basis_element(1)).unwrap();
    let expected = &p.chi().eval(&p.group().generator(0)) * &lam.eval(&p.group().generator(0));
    assert_eq!(gx, v.basis_element(1).scale(&expected));
    assert_eq!(v.apply(&g, &v.basis_element(0)).unwrap(), v.basis_element(0).scale(&lam.images()[0]));

    let j = v.submodule(&[v.basis_element(1)]).unwrap();
    assert_eq!(j, v.j_lambda());
    assert!(v.is_maximal(&j) && v.closure_holds(&j));
    let l = v.quotient(&j, &p).unwrap().unwrap();
    assert!(is_isomorphic(&l, &one_dim(&p, &lam)).unwrap().is_yes());

    let beta = k.from_i64(5);
    let gamma = k.zeta() + k.one();
    let jb = v.j_beta(&beta).unwrap();
    assert!(v.is_maximal(&jb));
    let lb = v.quotient(&jb, &p).unwrap().unwrap();
    assert!(is_isomorphic(&lb, &block(&p, &lam, &beta)).unwrap().is_yes());
    assert_eq!(is_simple(&lb).unwrap(), Simplicity::Yes);

    let f = v.basis_element(3).sub(&v.basis_element(0).scale(&beta));
    let g2 = v.basis_element(3).sub(&v.basis_element(0).scale(&gamma));
    let prod = {
        let mut c = vec![k.zero(); 7];
        for (i, a) in f.coeffs().iter().enumerate() {
            for (j, b) in g2.coeffs().iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Polynomial::new(&k, c)
    };
    let n = v.submodule(std::slice::from_ref(&prod)).unwrap();
    assert!(!v.is_maximal(&n) && v.closure_holds(&n));
    let jg = v.j_beta(&gamma).unwrap();
    assert!(v.contains(&jb, &prod) && v.contains(&jg, &prod));
    assert_eq!(v.intersection(&jb, &jg).unwrap(), n);
    assert!(!v.is_maximal(&v.j_beta(&k.zero()).unwrap()));
}

#[test]
fn verma_infinite_order() {
    let p = parent_of(samples::integers_q2().unwrap());
    let k = p.ctx().clone();
    let lam = character(&p, vec![k.from_i64(3)]);
    let v = verma(&p, &lam).unwrap();
    assert_eq!(v.submodule(&[v.basis_element(2).add(&v.basis_element(4))]).unwrap(), VermaSubmodule::Tail(Some(2)));
    assert!(v.is_maximal(&v.j_lambda()));
    assert!(v.submodule(&[v.basis_element(0)]).is_err());
    let l = v.quotient(&v.j_lambda(), &p).unwrap().unwrap();
    assert!(is_isomorphic(&l, &one_dim(&p, &lam)).unwrap().is_yes());
}

#[test]
fn verma_quotients_by_ideals() {
    // ⟨x³⟩ on the Taft algebra: |χ| = 3 = n
    let h = Arc::new(samples::taft(3).unwrap());
    let q = Arc::new(make_quotient(&h, IdealForm::XnOnly(3)).unwrap());
    let qp = ModuleParent::from_quotient(q.clone()).unwrap();
    let k = qp.ctx().clone();
    let lam = character(&qp, vec![k.zeta()]);
    let VermaQuotient::Module(m) = verma_quotient_mod_ideal(&lam, &q).unwrap() else { panic!() };
    assert!(validate_module(&m).unwrap().passed());
    assert!(is_isomorphic(&m, &block(&qp, &lam, &k.zero())).unwrap().is_yes());
    assert_eq!(is_indecomposable(&m).unwrap(), Indecomposability::Yes);

    // ⟨x², 1 − a²⟩ on ℤ/8
    let h = Arc::new(samples::cyclic_case_one(8, 8, 2, 2).unwrap());
    let q = Arc::new(make_quotient(&h, IdealForm::XnAndGroup(2)).unwrap());
    let qp = ModuleParent::from_quotient(q.clone()).unwrap();
    let k = qp.ctx().clone();
    for e in 0..8 {
        let lam = character(&qp, vec![k.zeta_pow(e)]);
        match verma_quotient_mod_ideal(&lam, &q).unwrap() {
            VermaQuotient::Zero => assert!(!lam.eval(qp.a()).pow(2).is_one()),
            VermaQuotient::Module(m) => {
                assert!(lam.eval(qp.a()).pow(2).is_one());
                assert_eq!(m.dim(), 2);
                assert!(validate_module(&m).unwrap().passed());
                assert_eq!(is_indecomposable(&m).unwrap(), Indecomposability::Yes);
            }
        }
    }

    // Skew(2, 1) on ℤ/4 with λ(g) = i gives V(λ, 2)
    let p = z4_skew();
    let q = p.quotient().unwrap().clone();
    let k = p.ctx().clone();
    let lam = character(&p, vec![k.zeta()]);
    let VermaQuotient::Module(m) = verma_quotient_mod_ideal(&lam, &q).unwrap() else { panic!() };
    assert!(validate_module(&m).unwrap().passed());
    assert!(is_isomorphic(&m, &block(&p, &lam, &k.from_i64(2))).unwrap().is_yes());

    let zero = Arc::new(make_quotient(&h, IdealForm::Zero).unwrap());
    let e = Character::trivial(&k, p.group());
    assert!(verma_quotient_mod_ideal(&e, &zero).is_err());
}

#[test]
fn non_case_one_parent_rejected() {
    let h = Arc::new(samples::case_three(3).unwrap());
    assert!(matches!(ModuleParent::from_ore(h), Err(hopf_ore::Error::CaseMismatch { .. })));
    let k = FieldCtx::rationals();
    let _ = HElement::zero();
    let _ = k;
}
