use crate::error::{Error, Result};

use super::prime_factors;

/// Largest supported field size; elements and irreducibles are enumerated.
const MAX_FIELD_SIZE: u64 = 1 << 20;

/// F_p[t] / (m(t)) with a distinguished multiplicative generator.
#[derive(Debug)]
pub(super) struct FiniteData {
    pub p: u64,
    pub e: u32,
    pub size: u64,
    /// Monic modulus, constant term first, length e + 1.
    pub modulus: Vec<u64>,
    pub generator: Vec<u64>,
}

fn coords_from_index(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    // most significant digit is the constant term
    let mut v = vec![0; len];
    for i in (0..len).rev() {
        v[i] = idx % p;
        idx /= p;
    }
    v
}

/// Remainder of `a` modulo the monic `m` over F_p.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= dm {
        r.resize(dm, 0);
        return r;
    }
    for k in (dm..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for (j, &mj) in m.iter().enumerate() {
            let pos = k - dm + j;
            r[pos] = (r[pos] + p - (c * mj) % p) % p;
        }
    }
    r.truncate(dm);
    r
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let e = m.len() - 1;
    for d in 1..=e / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut f = coords_from_index(idx, p, d);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteData {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        let size = p.checked_pow(e).filter(|&s| s <= MAX_FIELD_SIZE).ok_or(Error::FieldTooLarge { p, e })?;
        let len = e as usize;
        let modulus = (0..size)
            .map(|idx| {
                let mut m = coords_from_index(idx, p, len);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut data = FiniteData { p, e, size, modulus, generator: vec![0; len] };
        let factors = prime_factors(size - 1);
        let generator = data
            .all_coords()
            .into_iter()
            .filter(|v| v.iter().any(|&c| c != 0))
            .find(|v| {
                let one = data.constant(1);
                factors.iter().all(|&r| data.pow(v, (size - 1) / r) != one)
            })
            .expect("the multiplicative group is cyclic");
        data.generator = generator;
        Ok(data)
    }

    pub fn all_coords(&self) -> Vec<Vec<u64>> {
        (0..self.size).map(|idx| coords_from_index(idx, self.p, self.e as usize)).collect()
    }

    pub fn constant(&self, n: i64) -> Vec<u64> {
        let mut v = vec![0; self.e as usize];
        v[0] = n.rem_euclid(self.p as i64) as u64;
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        poly_rem(&prod, &self.modulus, p)
    }

    pub fn pow(&self, a: &[u64], mut k: u64) -> Vec<u64> {
        let mut acc = self.constant(1);
        let mut base = a.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn inverse(&self, a: &[u64]) -> Vec<u64> {
        self.pow(a, self.size - 2)
    }

    /// Descending-degree rendering in the variable `t`.
    pub fn render(&self, v: &[u64]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}*t^{d}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
