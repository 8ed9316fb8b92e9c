//! Ready-made extensions used by the test suites and the command line.

use crate::error::Result;
use crate::field::FieldCtx;
use crate::group::{AbelianGroup, Character, Cocycle, GroupElement};
use crate::hopf::HopfOre;

/// kG with G = ℤ/n = ⟨g⟩, θ(g) = `theta_exp`-th power of a primitive
/// `root`-th root of unity in Q(ζ_root), a = g^`a_exp`, α = 0.
pub fn cyclic_case_one(n: u64, root: u32, theta_exp: i64, a_exp: i64) -> Result<HopfOre> {
    let k = FieldCtx::cyclotomic(root)?;
    let g = AbelianGroup::cyclic(n)?;
    let w = k.primitive_root_of_unity(root as u64).expect("Q(zeta_m) contains zeta_m");
    let theta = Character::new(&k, &g, vec![w.pow(theta_exp)])?;
    HopfOre::new(&theta, &g.elem(&[a_exp])?, &Cocycle::zero(&theta))
}

/// Taft data: ℤ/n, θ(g) = ζ_n, a = g.
pub fn taft(n: u64) -> Result<HopfOre> {
    cyclic_case_one(n, n as u32, 1, 1)
}

/// ℤ/9 with θ(g) = ζ_3 and a = g.
pub fn z9_zeta3() -> Result<HopfOre> {
    cyclic_case_one(9, 3, 1, 1)
}

/// ℤ/4 over ℚ with θ(g) = −1 and a = g², so θ(a) = 1 and α = 0.
pub fn z4_case_two() -> Result<HopfOre> {
    let k = FieldCtx::rationals();
    let g = AbelianGroup::cyclic(4)?;
    let theta = Character::new(&k, &g, vec![k.from_i64(-1)])?;
    HopfOre::new(&theta, &g.elem(&[2])?, &Cocycle::zero(&theta))
}

/// ℤ/4 over ℚ(i) with θ(g) = −1 and a = g.
pub fn z4_sign() -> Result<HopfOre> {
    cyclic_case_one(4, 4, 2, 1)
}

/// ℤ/p over F_p with θ trivial, a = g and α(g) = 1.
pub fn case_three(p: u64) -> Result<HopfOre> {
    let k = FieldCtx::prime(p)?;
    let g = AbelianGroup::cyclic(p)?;
    let theta = Character::trivial(&k, &g);
    HopfOre::new(&theta, &g.generator(0), &Cocycle::new(&theta, vec![k.one()])?)
}

/// ℤ over ℚ with θ(g) = 2 and a = g.
pub fn integers_q2() -> Result<HopfOre> {
    let k = FieldCtx::rationals();
    let g = AbelianGroup::integers();
    let theta = Character::new(&k, &g, vec![k.from_i64(2)])?;
    HopfOre::new(&theta, &g.generator(0), &Cocycle::zero(&theta))
}

/// Powers g^k of the generator of ℤ for |k| ≤ radius.
pub fn integer_sample(radius: i64) -> Vec<GroupElement> {
    AbelianGroup::integers().sample_box(radius)
}
