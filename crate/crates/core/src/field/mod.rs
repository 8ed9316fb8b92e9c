//! Exact fields: cyclotomic fields over ℚ (power basis modulo Φ_N) and finite
//! fields F_p, F_{p^e}, each with a distinguished primitive root of unity.

mod cyclotomic;
mod finite;
mod parse;
pub mod qarith;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

use cyclotomic::{CycloData, CycloValue};
use finite::FiniteData;

pub use qarith::{gaussian_vanishing, gaussian_vanishing_closed_form, q_binomial, q_factorial, q_integer};

/// Which field a [`FieldCtx`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Cyclotomic(u32),
    PrimeField(u64),
    ExtField(u64, u32),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            FieldKind::PrimeField(p) => write!(f, "F_{p}"),
            FieldKind::ExtField(p, e) => write!(f, "F_{p}^{e}"),
        }
    }
}

#[derive(Debug)]
enum Repr {
    Cyclo(CycloData),
    Finite(FiniteData),
}

#[derive(Debug)]
struct CtxInner {
    kind: FieldKind,
    repr: Repr,
}

/// A shared handle to an exact field. Cloning is cheap.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<CtxInner>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({})", self.inner.kind)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.kind == other.inner.kind
    }
}

impl Eq for FieldCtx {}

impl Hash for FieldCtx {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.kind.hash(state);
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// Builds a field context. Extension fields use the lexicographically
    /// smallest monic irreducible modulus (coefficients compared from the
    /// constant term upward) and the smallest element of full multiplicative
    /// order as distinguished generator.
    pub fn new(kind: FieldKind) -> Result<Self> {
        let repr = match kind {
            FieldKind::Rationals => Repr::Cyclo(CycloData::new(1)),
            FieldKind::Cyclotomic(0) => return Err(Error::ZeroCyclotomicOrder),
            FieldKind::Cyclotomic(n) => Repr::Cyclo(CycloData::new(n)),
            FieldKind::PrimeField(p) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                Repr::Finite(FiniteData::new(p, 1)?)
            }
            FieldKind::ExtField(p, e) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if e == 0 {
                    return Err(Error::ZeroExtensionDegree);
                }
                Repr::Finite(FiniteData::new(p, e)?)
            }
        };
        Ok(FieldCtx { inner: Arc::new(CtxInner { kind, repr }) })
    }

    pub fn rationals() -> Self {
        Self::new(FieldKind::Rationals).expect("Q is always constructible")
    }

    pub fn cyclotomic(n: u32) -> Result<Self> {
        Self::new(FieldKind::Cyclotomic(n))
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(FieldKind::PrimeField(p))
    }

    pub fn extension(p: u64, e: u32) -> Result<Self> {
        Self::new(FieldKind::ExtField(p, e))
    }

    pub fn kind(&self) -> FieldKind {
        self.inner.kind
    }

    /// 0 for characteristic zero, otherwise p.
    pub fn characteristic(&self) -> u64 {
        match &self.inner.repr {
            Repr::Cyclo(_) => 0,
            Repr::Finite(f) => f.p,
        }
    }

    /// Number of elements for finite fields.
    pub fn size(&self) -> Option<u64> {
        match &self.inner.repr {
            Repr::Cyclo(_) => None,
            Repr::Finite(f) => Some(f.size),
        }
    }

    /// Dimension of the coordinate vectors (φ(N) or e).
    pub fn degree(&self) -> usize {
        match &self.inner.repr {
            Repr::Cyclo(c) => c.phi,
            Repr::Finite(f) => f.e as usize,
        }
    }

    /// Coefficients (constant term first) of the defining modulus: Φ_N for
    /// cyclotomic fields, the chosen irreducible polynomial for finite fields.
    pub fn modulus_coefficients(&self) -> Vec<String> {
        match &self.inner.repr {
            Repr::Cyclo(c) => c.modulus.iter().map(|b| b.to_string()).collect(),
            Repr::Finite(f) => f.modulus.iter().map(|b| b.to_string()).collect(),
        }
    }

    fn wrap(&self, value: Value) -> FieldElement {
        FieldElement { ctx: self.clone(), value }
    }

    pub fn zero(&self) -> FieldElement {
        match &self.inner.repr {
            Repr::Cyclo(c) => self.wrap(Value::Cyclo(CycloValue::zero(c.phi))),
            Repr::Finite(f) => self.wrap(Value::Finite(vec![0; f.e as usize])),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match &self.inner.repr {
            Repr::Cyclo(c) => self.wrap(Value::Cyclo(CycloValue::constant(c.phi, n.into()))),
            Repr::Finite(f) => self.wrap(Value::Finite(f.constant(n))),
        }
    }

    /// num/den reduced into the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement> {
        let d = self.from_i64(den);
        Ok(self.from_i64(num) * d.inv()?)
    }

    /// The distinguished root: ζ_N for cyclotomic fields (1 for ℚ), the
    /// distinguished multiplicative generator for finite fields.
    pub fn zeta(&self) -> FieldElement {
        match &self.inner.repr {
            Repr::Cyclo(c) => self.wrap(Value::Cyclo(c.zeta_power(1))),
            Repr::Finite(f) => self.wrap(Value::Finite(f.generator.clone())),
        }
    }

    /// Multiplicative order of the distinguished root.
    pub fn zeta_order(&self) -> u64 {
        match &self.inner.repr {
            Repr::Cyclo(c) => c.n as u64,
            Repr::Finite(f) => f.size - 1,
        }
    }

    pub fn zeta_pow(&self, k: i64) -> FieldElement {
        match &self.inner.repr {
            Repr::Cyclo(c) => self.wrap(Value::Cyclo(c.zeta_power(k))),
            Repr::Finite(_) => self.zeta().pow(k),
        }
    }

    /// The polynomial variable t of F_p[t]/(m(t)); equals 0 in a prime field.
    pub fn poly_var(&self) -> Option<FieldElement> {
        match &self.inner.repr {
            Repr::Cyclo(_) => None,
            Repr::Finite(f) => {
                let mut v = vec![0; f.e as usize];
                if f.e == 1 {
                    // t reduces modulo the linear modulus t
                    v[0] = (f.p - f.modulus[0] % f.p) % f.p;
                } else {
                    v[1] = 1;
                }
                Some(self.wrap(Value::Finite(v)))
            }
        }
    }

    /// Upper bound on the order of any root of unity in the field.
    pub fn root_of_unity_bound(&self) -> u64 {
        match &self.inner.repr {
            Repr::Cyclo(c) => (c.n as u64).lcm(&2),
            Repr::Finite(f) => f.size - 1,
        }
    }

    /// A primitive m-th root of unity, if the field contains one.
    pub fn primitive_root_of_unity(&self, m: u64) -> Option<FieldElement> {
        if m == 0 {
            return None;
        }
        let bound = self.root_of_unity_bound();
        if !bound.is_multiple_of(m) {
            return None;
        }
        let base = match &self.inner.repr {
            Repr::Cyclo(c) if c.n % 2 == 1 => -self.zeta(),
            _ => self.zeta(),
        };
        Some(base.pow((bound / m) as i64))
    }

    /// All roots of unity in the field, ordered by exponent of a primitive
    /// root of maximal order.
    pub fn roots_of_unity(&self) -> Vec<FieldElement> {
        let bound = self.root_of_unity_bound();
        let w = self.primitive_root_of_unity(bound).expect("bound is attained");
        let mut out = Vec::with_capacity(bound as usize);
        let mut cur = self.one();
        for _ in 0..bound {
            out.push(cur.clone());
            cur = &cur * &w;
        }
        out
    }

    /// All elements of a finite field in the canonical order (coordinates
    /// compared from the constant term upward).
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        match &self.inner.repr {
            Repr::Cyclo(_) => None,
            Repr::Finite(f) => Some(f.all_coords().into_iter().map(|v| self.wrap(Value::Finite(v))).collect()),
        }
    }

    /// Parses an exact scalar such as `"1/2"`, `"zeta^3 - 1"` or `"t^2+1"`.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        parse::parse_scalar(self, s)
    }

    fn check(&self, other: &FieldCtx) {
        if self != other {
            panic!("{}", Error::ContextMismatch);
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Value {
    Cyclo(CycloValue),
    Finite(Vec<u64>),
}

/// An element of a [`FieldCtx`], always in canonical reduced form.
///
/// Arithmetic operators panic when the operands come from different contexts;
/// use the `checked_*` methods where that can happen.
#[derive(Clone)]
pub struct FieldElement {
    ctx: FieldCtx,
    value: Value,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.value == other.value
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

/// A total order on coordinates, used only for canonical choices.
impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl FieldElement {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Cyclo(c) => c.is_zero(),
            Value::Finite(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ctx.one()
    }

    /// Coordinates as exact strings: rationals for cyclotomic fields, residues
    /// for finite fields.
    pub fn coordinates(&self) -> Vec<String> {
        match &self.value {
            Value::Cyclo(c) => c.coordinate_strings(),
            Value::Finite(v) => v.iter().map(|x| x.to_string()).collect(),
        }
    }

    /// The integer value when the element is a rational integer (char 0) or
    /// lies in the prime subfield (char p).
    pub fn as_integer(&self) -> Option<i64> {
        match &self.value {
            Value::Cyclo(c) => c.as_integer(),
            Value::Finite(v) => {
                if v.iter().skip(1).all(|&x| x == 0) {
                    Some(v[0] as i64)
                } else {
                    None
                }
            }
        }
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self * other)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match (&self.ctx.inner.repr, &self.value) {
            (Repr::Cyclo(d), Value::Cyclo(c)) => Value::Cyclo(d.inverse(c)),
            (Repr::Finite(d), Value::Finite(v)) => Value::Finite(d.inverse(v)),
            _ => unreachable!("value kind always matches its context"),
        };
        Ok(self.ctx.wrap(value))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert (panics on 0 to a negative power).
    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Smallest d ≤ bound with x^d = 1.
    pub fn mult_order(&self, bound: u64) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let one = self.ctx.one();
        let mut cur = self.clone();
        for d in 1..=bound {
            if cur == one {
                return Ok(Some(d));
            }
            cur = &cur * self;
        }
        Ok(None)
    }

    /// Exact multiplicative order if the element is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = self.ctx.root_of_unity_bound();
        // orders of roots of unity divide the bound
        let mut divisors: Vec<u64> = (1..=bound).filter(|d| bound.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        divisors.into_iter().find(|&d| self.pow(d as i64).is_one())
    }

    /// Whether the element is a primitive n-th root of unity.
    pub fn is_primitive_root(&self, n: u64) -> bool {
        self.root_of_unity_order() == Some(n)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.ctx.inner.repr, &self.value) {
            (Repr::Cyclo(d), Value::Cyclo(c)) => write!(f, "{}", c.render(d.n == 1)),
            (Repr::Finite(d), Value::Finite(v)) => write!(f, "{}", d.render(v)),
            _ => unreachable!(),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        self.ctx.check(&rhs.ctx);
        let value = match (&self.ctx.inner.repr, &self.value, &rhs.value) {
            (Repr::Cyclo(_), Value::Cyclo(a), Value::Cyclo(b)) => Value::Cyclo(a.add(b)),
            (Repr::Finite(d), Value::Finite(a), Value::Finite(b)) => Value::Finite(d.add(a, b)),
            _ => unreachable!(),
        };
        self.ctx.wrap(value)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        self.ctx.check(&rhs.ctx);
        let value = match (&self.ctx.inner.repr, &self.value, &rhs.value) {
            (Repr::Cyclo(d), Value::Cyclo(a), Value::Cyclo(b)) => Value::Cyclo(d.mul(a, b)),
            (Repr::Finite(d), Value::Finite(a), Value::Finite(b)) => Value::Finite(d.mul(a, b)),
            _ => unreachable!(),
        };
        self.ctx.wrap(value)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let value = match (&self.ctx.inner.repr, &self.value) {
            (Repr::Cyclo(_), Value::Cyclo(a)) => Value::Cyclo(a.neg()),
            (Repr::Finite(d), Value::Finite(a)) => Value::Finite(d.neg(a)),
            _ => unreachable!(),
        };
        self.ctx.wrap(value)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_four_is_gaussian_rationals() {
        let k = FieldCtx::cyclotomic(4).unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.modulus_coefficients(), vec!["1", "0", "1"]);
        let i = k.zeta();
        assert_eq!(&i * &i, k.from_i64(-1));
        assert_eq!(i.mult_order(12).unwrap(), Some(4));
    }

    #[test]
    fn cyclotomic_one_behaves_like_q() {
        let k = FieldCtx::cyclotomic(1).unwrap();
        assert_eq!(k.degree(), 1);
        assert!(k.zeta().is_one());
        let half = k.from_ratio(1, 2).unwrap();
        assert_eq!(&half + &half, k.one());
    }

    #[test]
    fn f4_modulus_is_t2_t_1() {
        let k = FieldCtx::extension(2, 2).unwrap();
        assert_eq!(k.size(), Some(4));
        assert_eq!(k.modulus_coefficients(), vec!["1", "1", "1"]);
        assert_eq!(k.zeta().mult_order(3).unwrap(), Some(3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::cyclotomic(0).unwrap_err(), Error::ZeroCyclotomicOrder);
        assert_eq!(FieldCtx::extension(3, 0).unwrap_err(), Error::ZeroExtensionDegree);
    }

    #[test]
    fn mult_order_examples() {
        let k6 = FieldCtx::cyclotomic(6).unwrap();
        assert_eq!(k6.zeta().mult_order(12).unwrap(), Some(6));
        let q = FieldCtx::rationals();
        assert_eq!(q.from_i64(-1).mult_order(10).unwrap(), Some(2));
        assert_eq!(q.from_i64(2).mult_order(100).unwrap(), None);
        assert_eq!(q.zero().mult_order(5), Err(Error::DivisionByZero));
    }

    #[test]
    fn zeta_satisfies_its_minimal_polynomial() {
        for n in 1..=12u32 {
            let k = FieldCtx::cyclotomic(n).unwrap();
            let z = k.zeta();
            let mut acc = k.zero();
            for (i, c) in k.modulus_coefficients().iter().enumerate() {
                let c: i64 = c.parse().unwrap();
                acc += &(k.from_i64(c) * z.pow(i as i64));
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta) != 0");
            assert_eq!(z.mult_order(n as u64).unwrap(), Some(n as u64));
        }
    }

    #[test]
    fn roots_of_unity_counts() {
        assert_eq!(FieldCtx::cyclotomic(12).unwrap().roots_of_unity().len(), 12);
        assert_eq!(FieldCtx::cyclotomic(3).unwrap().roots_of_unity().len(), 6);
        assert_eq!(FieldCtx::rationals().roots_of_unity().len(), 2);
        assert_eq!(FieldCtx::extension(3, 2).unwrap().roots_of_unity().len(), 8);
    }

    #[test]
    #[should_panic]
    fn mixing_contexts_panics() {
        let a = FieldCtx::cyclotomic(3).unwrap().one();
        let b = FieldCtx::prime(3).unwrap().one();
        let _ = &a + &b;
    }

    #[test]
    fn checked_ops_report_mismatch() {
        let a = FieldCtx::cyclotomic(3).unwrap().one();
        let b = FieldCtx::cyclotomic(4).unwrap().one();
        assert_eq!(a.checked_mul(&b), Err(Error::ContextMismatch));
    }
}
