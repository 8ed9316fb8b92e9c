use std::fmt;

use crate::field::{FieldCtx, FieldElement};

/// A univariate polynomial over an exact field, coefficients in ascending
/// degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: FieldCtx,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(ctx: &FieldCtx, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { ctx: ctx.clone(), coeffs }
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Polynomial { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::monomial(ctx, 0, ctx.one())
    }

    pub fn monomial(ctx: &FieldCtx, degree: usize, c: FieldElement) -> Self {
        let mut coeffs = vec![ctx.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(ctx, coeffs)
    }

    /// y − c.
    pub fn linear(ctx: &FieldCtx, c: &FieldElement) -> Self {
        Self::new(ctx, vec![-c, ctx.one()])
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.ctx, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-self.ctx.one()))
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Self::new(&self.ctx, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.ctx, out)
    }

    /// Quotient and remainder; panics on division by the zero polynomial.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ctx.zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[k - dd + j] = &rem[k - dd + j] - &(&c * b);
                }
            }
            quot[k - dd] = c;
            rem.pop();
        }
        (Self::new(&self.ctx, quot), Self::new(&self.ctx, rem))
    }

    pub fn rem(&self, d: &Polynomial) -> Polynomial {
        self.div_rem(d).1
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Monic greatest common divisor, with gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple, zero if either input is zero.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        self.mul(other).div_rem(&self.gcd(other)).0.monic()
    }

    /// Renders in the variable `var`, descending degree.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = c.to_string();
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else if cs.contains([' ', '+']) || cs[1..].contains('-') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            parts.push(term);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ctx: &FieldCtx, c: &[i64]) -> Polynomial {
        Polynomial::new(ctx, c.iter().map(|&v| ctx.from_i64(v)).collect())
    }

    #[test]
    fn gcd_and_lcm() {
        let k = FieldCtx::rationals();
        let a = p(&k, &[-2, 1]).mul(&p(&k, &[-3, 1]));
        let b = p(&k, &[-2, 1]).mul(&p(&k, &[5, 1]));
        assert_eq!(a.gcd(&b), p(&k, &[-2, 1]));
        assert_eq!(a.lcm(&b).degree(), Some(3));
        assert_eq!(p(&k, &[0, 1]).gcd(&Polynomial::one(&k)), Polynomial::one(&k));
        assert_eq!(Polynomial::zero(&k).gcd(&b.scale(&k.from_i64(3))), b);
    }

    #[test]
    fn division() {
        let k = FieldCtx::prime(5).unwrap();
        let a = p(&k, &[1, 2, 3, 4]);
        let d = p(&k, &[2, 0, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree() < d.degree());
        assert_eq!(p(&k, &[-1, 0, 1]).render("y"), "y^2 + 4");
    }
}
