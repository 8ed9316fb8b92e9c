//! Finitely generated abelian groups ℤ^r × ∏ ℤ/n_i, their characters and
//! 1-cocycles twisted by a character.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{q_integer, FieldCtx, FieldElement};

/// ℤ^r × ℤ/n_1 × … × ℤ/n_t, presented by formal generators. Free generators
/// come first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// An exponent vector with torsion coordinates reduced into `[0, n_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<i64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let single = self.coords.len() == 1;
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = if single { "g".to_string() } else { format!("g{}", i + 1) };
            if c == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{c}")?;
            }
        }
        Ok(())
    }
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(&n) = torsion.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidTorsionOrder(n));
        }
        Ok(AbelianGroup { free_rank, torsion })
    }

    /// ℤ/n.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(0, vec![n])
    }

    /// ℤ.
    pub fn integers() -> Self {
        AbelianGroup { free_rank: 1, torsion: vec![] }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion
    }

    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of generator `i`, `None` for free generators.
    pub fn generator_order(&self, i: usize) -> Option<u64> {
        i.checked_sub(self.free_rank).map(|t| self.torsion[t])
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Least common multiple of the torsion orders (1 for the trivial group).
    pub fn exponent(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().fold(1, |acc, n| acc.lcm(n)))
    }

    fn reduce(&self, mut coords: Vec<i64>) -> GroupElement {
        for (i, c) in coords.iter_mut().enumerate().skip(self.free_rank) {
            *c = c.rem_euclid(self.torsion[i - self.free_rank] as i64);
        }
        GroupElement { coords }
    }

    pub fn elem(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.num_generators() {
            return Err(Error::CoordinateLength { expected: self.num_generators(), got: coords.len() });
        }
        Ok(self.reduce(coords.to_vec()))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.num_generators()] }
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.num_generators()];
        coords[i] = 1;
        self.reduce(coords)
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.reduce(g.coords.iter().zip(&h.coords).map(|(a, b)| a + b).collect())
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        self.reduce(g.coords.iter().map(|a| -a).collect())
    }

    pub fn pow(&self, g: &GroupElement, k: i64) -> GroupElement {
        self.reduce(g.coords.iter().map(|a| a * k).collect())
    }

    /// Order of `g`, or `None` when it is infinite or exceeds `bound`.
    pub fn element_order(&self, g: &GroupElement, bound: u64) -> Option<u64> {
        if g.coords[..self.free_rank].iter().any(|&c| c != 0) {
            return None;
        }
        let ord = g.coords[self.free_rank..]
            .iter()
            .zip(&self.torsion)
            .fold(1u64, |acc, (&c, &n)| acc.lcm(&(n / (c as u64).gcd(&n))));
        (ord <= bound).then_some(ord)
    }

    /// All elements of a finite group, lexicographic in coordinates.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroup);
        }
        let mut out = vec![Vec::new()];
        for &n in &self.torsion {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..n as i64).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(|coords| GroupElement { coords }).collect())
    }

    /// Elements in the box |z_i| ≤ radius on free coordinates (all residues
    /// on torsion coordinates), lexicographic.
    pub fn sample_box(&self, radius: i64) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for i in 0..self.num_generators() {
            let range: Vec<i64> = match self.generator_order(i) {
                Some(n) => (0..n as i64).collect(),
                None => (-radius..=radius).collect(),
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    range.iter().map(move |&c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|coords| GroupElement { coords }).collect()
    }
}

/// A homomorphism G → k^×, given by its images on generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    ctx: FieldCtx,
    group: AbelianGroup,
    images: Vec<FieldElement>,
}

impl PartialOrd for Character {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Character {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.images.cmp(&other.images)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Character {
    pub fn new(ctx: &FieldCtx, group: &AbelianGroup, images: Vec<FieldElement>) -> Result<Self> {
        if images.len() != group.num_generators() {
            return Err(Error::CoordinateLength { expected: group.num_generators(), got: images.len() });
        }
        for (i, v) in images.iter().enumerate() {
            if v.ctx() != ctx {
                return Err(Error::ContextMismatch);
            }
            if v.is_zero() {
                return Err(Error::ZeroCharacterImage { generator: i });
            }
            if let Some(n) = group.generator_order(i) {
                if !v.pow(n as i64).is_one() {
                    return Err(Error::CharacterTorsion { generator: i, order: n });
                }
            }
        }
        Ok(Character { ctx: ctx.clone(), group: group.clone(), images })
    }

    pub fn trivial(ctx: &FieldCtx, group: &AbelianGroup) -> Self {
        Character { ctx: ctx.clone(), group: group.clone(), images: vec![ctx.one(); group.num_generators()] }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn images(&self) -> &[FieldElement] {
        &self.images
    }

    pub fn eval(&self, g: &GroupElement) -> FieldElement {
        self.images.iter().zip(g.coords()).fold(self.ctx.one(), |acc, (v, &z)| acc * v.pow(z))
    }

    fn check_group(&self, other: &Character) -> Result<()> {
        if self.group != other.group || self.ctx != other.ctx {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Character) -> Result<Character> {
        self.check_group(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a * b).collect();
        Ok(Character { images, ..self.clone() })
    }

    pub fn pow(&self, k: i64) -> Character {
        Character { images: self.images.iter().map(|a| a.pow(k)).collect(), ..self.clone() }
    }

    pub fn inv(&self) -> Character {
        self.pow(-1)
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(FieldElement::is_one)
    }

    /// Order in the character group, or `None` when infinite or above `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut acc = 1u64;
        for v in &self.images {
            acc = acc.lcm(&v.root_of_unity_order()?);
        }
        (acc <= bound).then_some(acc)
    }

    /// Exact order, `None` when infinite.
    pub fn exact_order(&self) -> Option<u64> {
        self.order(u64::MAX)
    }

    /// Whether `self = chi^t · other` for some t.
    pub fn same_class(&self, other: &Character, chi: &Character) -> Result<bool> {
        Ok(self.class_of(chi)? == other.class_of(chi)?)
    }

    /// Canonical representative of the coset of `self` modulo ⟨chi⟩: the
    /// least element of the orbit.
    pub fn class_of(&self, chi: &Character) -> Result<CharacterClass> {
        self.check_group(chi)?;
        let s = chi.exact_order().ok_or(Error::InfiniteCharacterOrder)?;
        let mut cur = self.clone();
        let mut best = self.clone();
        for _ in 1..s {
            cur = cur.mul(chi)?;
            if cur < best {
                best = cur.clone();
            }
        }
        Ok(CharacterClass { representative: best })
    }
}

/// An element of the quotient of the character group by a finite cyclic
/// subgroup ⟨chi⟩.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterClass {
    representative: Character,
}

impl CharacterClass {
    pub fn representative(&self) -> &Character {
        &self.representative
    }
}

/// All characters of a finite group with values in `ctx`, lexicographic in
/// the exponents of a fixed primitive root per generator.
pub fn enumerate_characters(ctx: &FieldCtx, group: &AbelianGroup) -> Result<Vec<Character>> {
    if !group.is_finite() {
        return Err(Error::InfiniteGroup);
    }
    let exponent = group.exponent().expect("finite");
    ctx.primitive_root_of_unity(exponent).ok_or(Error::MissingRootOfUnity(exponent))?;
    let mut out: Vec<Vec<FieldElement>> = vec![Vec::new()];
    for &n in group.torsion_orders() {
        let w = ctx.primitive_root_of_unity(n).expect("n divides the exponent");
        let powers: Vec<FieldElement> = (0..n as i64).map(|k| w.pow(k)).collect();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                powers.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(|images| Character { ctx: ctx.clone(), group: group.clone(), images }).collect())
}

/// A map α: G → k with α(gh) = α(g) + χ(g)α(h), stored by generator values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocycle {
    chi: Character,
    values: Vec<FieldElement>,
}

impl Cocycle {
    /// Validates pairwise compatibility and torsion consistency.
    pub fn new(chi: &Character, values: Vec<FieldElement>) -> Result<Self> {
        let c = Self::new_unchecked(chi, values)?;
        c.validate()?;
        Ok(c)
    }

    /// Builds a cocycle without the two validation identities. Only the
    /// length and field context are checked; used to exercise failure paths.
    pub fn new_unchecked(chi: &Character, values: Vec<FieldElement>) -> Result<Self> {
        let n = chi.group.num_generators();
        if values.len() != n {
            return Err(Error::CoordinateLength { expected: n, got: values.len() });
        }
        if values.iter().any(|v| v.ctx() != &chi.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(Cocycle { chi: chi.clone(), values })
    }

    pub fn zero(chi: &Character) -> Self {
        let n = chi.group.num_generators();
        Cocycle { chi: chi.clone(), values: vec![chi.ctx.zero(); n] }
    }

    pub fn validate(&self) -> Result<()> {
        let one = self.chi.ctx.one();
        let n = self.values.len();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = (&one - &self.chi.images[j]) * &self.values[i];
                let rhs = (&one - &self.chi.images[i]) * &self.values[j];
                if lhs != rhs {
                    return Err(Error::CocycleCompatibility { i, j });
                }
            }
            if let Some(ord) = self.chi.group.generator_order(i) {
                if !(q_integer(ord, &self.chi.images[i]) * &self.values[i]).is_zero() {
                    return Err(Error::CocycleTorsion { generator: i });
                }
            }
        }
        Ok(())
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(FieldElement::is_zero)
    }

    /// α(e_i^z) from the generator value.
    fn eval_generator_power(&self, i: usize, z: i64) -> FieldElement {
        let q = &self.chi.images[i];
        if z >= 0 {
            &self.values[i] * &q_integer(z as u64, q)
        } else {
            let pos = &self.values[i] * &q_integer((-z) as u64, q);
            -(q.pow(z) * pos)
        }
    }

    /// α(g), expanding g in generators with the cocycle law.
    pub fn eval(&self, g: &GroupElement) -> FieldElement {
        let ctx = &self.chi.ctx;
        let mut acc = ctx.zero();
        let mut prefix_char = ctx.one();
        for (i, &z) in g.coords().iter().enumerate() {
            if z == 0 {
                continue;
            }
            acc += &(&prefix_char * &self.eval_generator_power(i, z));
            prefix_char *= &self.chi.images[i].pow(z);
        }
        acc
    }

    /// The cocycle c·α.
    pub fn scale(&self, c: &FieldElement) -> Cocycle {
        Cocycle { chi: self.chi.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    /// The coboundary g ↦ c(1 − χ(g)).
    pub fn coboundary(chi: &Character, c: &FieldElement) -> Cocycle {
        let one = chi.ctx.one();
        Cocycle { chi: chi.clone(), values: chi.images.iter().map(|v| (&one - v) * c).collect() }
    }

    pub fn add(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.chi != other.chi {
            return Err(Error::CocycleCharacterMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Cocycle { chi: self.chi.clone(), values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_arithmetic() {
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let g = z4.generator(0);
        assert!(z4.pow(&g, 4).is_identity());
        let zz2 = AbelianGroup::new(1, vec![2]).unwrap();
        assert_eq!(zz2.element_order(&zz2.elem(&[1, 0]).unwrap(), 100), None);
        let z6 = AbelianGroup::cyclic(6).unwrap();
        assert_eq!(z6.element_order(&z6.elem(&[2]).unwrap(), 10), Some(3));
        assert_eq!(z6.elem(&[1, 2]), Err(Error::CoordinateLength { expected: 1, got: 2 }));
        assert_eq!(AbelianGroup::cyclic(1), Err(Error::InvalidTorsionOrder(1)));
        assert_eq!(z6.elem(&[-1]).unwrap().coords(), &[5]);
    }

    #[test]
    fn characters() {
        let k4 = FieldCtx::cyclotomic(4).unwrap();
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let chi = Character::new(&k4, &z4, vec![k4.zeta()]).unwrap();
        assert_eq!(chi.exact_order(), Some(4));
        let q = FieldCtx::rationals();
        let z2 = AbelianGroup::cyclic(2).unwrap();
        assert_eq!(
            Character::new(&q, &z2, vec![q.from_i64(2)]),
            Err(Error::CharacterTorsion { generator: 0, order: 2 })
        );
        assert_eq!(Character::new(&q, &z2, vec![q.zero()]), Err(Error::ZeroCharacterImage { generator: 0 }));
        let free = Character::new(&q, &AbelianGroup::integers(), vec![q.from_i64(2)]).unwrap();
        assert_eq!(free.exact_order(), None);
        let sign = Character::new(&k4, &z4, vec![k4.from_i64(-1)]).unwrap();
        assert_eq!(sign.order(10), Some(2));
        let k9 = FieldCtx::cyclotomic(9).unwrap();
        let z9 = AbelianGroup::cyclic(9).unwrap();
        let c3 = Character::new(&k9, &z9, vec![k9.zeta().pow(3)]).unwrap();
        assert_eq!(c3.order(100), Some(3));
    }

    #[test]
    fn enumeration() {
        let q = FieldCtx::rationals();
        let z2 = AbelianGroup::cyclic(2).unwrap();
        let chars = enumerate_characters(&q, &z2).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_trivial());
        assert_eq!(chars[1].images()[0], q.from_i64(-1));
        let k3 = FieldCtx::cyclotomic(3).unwrap();
        assert_eq!(enumerate_characters(&k3, &AbelianGroup::cyclic(3).unwrap()).unwrap().len(), 3);
        let v4 = AbelianGroup::new(0, vec![2, 2]).unwrap();
        assert_eq!(enumerate_characters(&q, &v4).unwrap().len(), 4);
        assert_eq!(enumerate_characters(&q, &AbelianGroup::cyclic(3).unwrap()), Err(Error::MissingRootOfUnity(3)));
        assert_eq!(enumerate_characters(&q, &AbelianGroup::integers()), Err(Error::InfiniteGroup));
    }

    #[test]
    fn cocycle_validation() {
        let q = FieldCtx::rationals();
        let v4 = AbelianGroup::new(0, vec![2, 2]).unwrap();
        let chi = Character::new(&q, &v4, vec![q.one(), q.from_i64(-1)]).unwrap();
        assert_eq!(
            Cocycle::new(&chi, vec![q.from_i64(3), q.from_i64(5)]),
            Err(Error::CocycleCompatibility { i: 0, j: 1 })
        );
        let z3 = AbelianGroup::cyclic(3).unwrap();
        let triv = Character::trivial(&q, &z3);
        assert_eq!(Cocycle::new(&triv, vec![q.one()]), Err(Error::CocycleTorsion { generator: 0 }));
        let f3 = FieldCtx::prime(3).unwrap();
        let triv3 = Character::trivial(&f3, &z3);
        assert!(Cocycle::new(&triv3, vec![f3.one()]).is_ok());
    }

    #[test]
    fn class_examples() {
        let k4 = FieldCtx::cyclotomic(4).unwrap();
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let ch = |v: FieldElement| Character::new(&k4, &z4, vec![v]).unwrap();
        let chi = ch(k4.from_i64(-1));
        let lambda = ch(k4.zeta());
        let sigma = ch(-k4.zeta());
        assert!(lambda.same_class(&sigma, &chi).unwrap());
        assert!(lambda.same_class(&lambda, &chi).unwrap());
        assert!(!ch(k4.one()).same_class(&lambda, &chi).unwrap());
        let q = FieldCtx::rationals();
        let free = Character::new(&q, &AbelianGroup::integers(), vec![q.from_i64(2)]).unwrap();
        assert_eq!(free.class_of(&free), Err(Error::InfiniteCharacterOrder));
    }
}
