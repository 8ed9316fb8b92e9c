use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arithmetic data for ℚ(ζ_N): Φ_N and the reduced powers of ζ.
#[derive(Debug)]
pub(super) struct CycloData {
    pub n: u32,
    pub phi: usize,
    /// Coefficients of Φ_N, constant term first; monic of degree `phi`.
    pub modulus: Vec<BigInt>,
    /// `zeta_table[m]` is ζ^m reduced to the power basis, for m in 0..N.
    zeta_table: Vec<Vec<BigInt>>,
    units: Vec<u32>,
}

/// A cyclotomic element stored as `num / den` with integer numerator
/// coordinates, `den > 0` and gcd(num, den) = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(super) struct CycloValue {
    num: Vec<BigInt>,
    den: BigInt,
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

pub(super) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 = ∏_{d | n} Φ_d
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl CycloData {
    pub fn new(n: u32) -> Self {
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        let mut zeta_table = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..n {
            zeta_table.push(cur.clone());
            // multiply by ζ and reduce with the monic modulus
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if phi == 1 {
                next[0] = -&top * &modulus[0];
            } else {
                next[0] = BigInt::zero();
                for (i, m) in modulus.iter().take(phi).enumerate() {
                    next[i] -= &top * m;
                }
            }
            cur = next;
        }
        let units = (1..=n).filter(|k| k.gcd(&n) == 1).collect();
        CycloData { n, phi, modulus, zeta_table, units }
    }

    pub fn zeta_power(&self, k: i64) -> CycloValue {
        let m = k.rem_euclid(self.n as i64) as usize;
        CycloValue { num: self.zeta_table[m].clone(), den: BigInt::one() }
    }

    fn reduce(&self, prod: Vec<BigInt>) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.phi];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.phi {
                out[k] += c;
            } else {
                for (o, t) in out.iter_mut().zip(&self.zeta_table[k % self.n as usize]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &CycloValue, b: &CycloValue) -> CycloValue {
        if a.is_zero() || b.is_zero() {
            return CycloValue::zero(self.phi);
        }
        let num = self.reduce(poly_mul_int(&a.num, &b.num));
        CycloValue::normalized(num, &a.den * &b.den)
    }

    /// σ_k(a) for the automorphism ζ ↦ ζ^k.
    fn conjugate(&self, a: &CycloValue, k: u32) -> CycloValue {
        let mut num = vec![BigInt::zero(); self.phi];
        for (i, c) in a.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = (i as u64 * k as u64 % self.n as u64) as usize;
            for (o, t) in num.iter_mut().zip(&self.zeta_table[m]) {
                if !t.is_zero() {
                    *o += c * t;
                }
            }
        }
        CycloValue { num, den: a.den.clone() }
    }

    pub fn inverse(&self, a: &CycloValue) -> CycloValue {
        // a · ∏_{k≠1} σ_k(a) is the norm, a rational number
        let mut rest = CycloValue::constant(self.phi, BigInt::one());
        for &k in &self.units {
            if k != 1 {
                rest = self.mul(&rest, &self.conjugate(a, k));
            }
        }
        let norm = self.mul(a, &rest);
        debug_assert!(norm.num.iter().skip(1).all(Zero::is_zero));
        let (nn, nd) = (norm.num[0].clone(), norm.den.clone());
        CycloValue::normalized(rest.num.iter().map(|c| c * &nd).collect(), &rest.den * nn)
    }
}

impl CycloValue {
    pub fn zero(phi: usize) -> Self {
        CycloValue { num: vec![BigInt::zero(); phi], den: BigInt::one() }
    }

    pub fn constant(phi: usize, c: BigInt) -> Self {
        let mut num = vec![BigInt::zero(); phi];
        num[0] = c;
        CycloValue { num, den: BigInt::one() }
    }

    pub fn from_rationals(coords: &[BigRational]) -> Self {
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        CycloValue::normalized(num, den)
    }

    fn normalized(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let g = num.iter().fold(den.clone(), |acc, c| acc.gcd(c));
        if num.iter().all(Zero::is_zero) {
            return CycloValue { den: BigInt::one(), num };
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den /= &g;
        }
        CycloValue { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            return CycloValue::normalized(num, self.den.clone());
        }
        let num = self.num.iter().zip(&other.num).map(|(a, b)| a * &other.den + b * &self.den).collect();
        CycloValue::normalized(num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        CycloValue { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn coordinates(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn coordinate_strings(&self) -> Vec<String> {
        self.coordinates().iter().map(|c| c.to_string()).collect()
    }

    pub fn as_integer(&self) -> Option<i64> {
        if !self.den.is_one() || self.num.iter().skip(1).any(|c| !c.is_zero()) {
            return None;
        }
        self.num[0].to_i64()
    }

    /// Descending-degree rendering such as `2*zeta^3 - 1/2*zeta + 1`.
    pub fn render(&self, rational_only: bool) -> String {
        let coords = self.coordinates();
        let terms: Vec<(usize, BigRational)> = coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return "0".into();
        }
        debug_assert!(!rational_only || terms.len() == 1);
        let mut out = String::new();
        for (idx, (deg, c)) in terms.into_iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial = match deg {
                0 => String::new(),
                1 => "zeta".to_string(),
                d => format!("zeta^{d}"),
            };
            if monomial.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{abs}*{monomial}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        // (1 + ζ_3) = -ζ_3^2, so its inverse is -ζ_3
        let d = CycloData::new(3);
        let a = CycloValue { num: ints(&[1, 1]), den: BigInt::one() };
        let inv = d.inverse(&a);
        assert_eq!(inv, CycloValue { num: ints(&[0, -1]), den: BigInt::one() });
    }

    #[test]
    fn render_descending() {
        let v = CycloValue::normalized(ints(&[2, -1, 4]), BigInt::from(2));
        assert_eq!(v.render(false), "2*zeta^2 - 1/2*zeta + 1");
    }
}
