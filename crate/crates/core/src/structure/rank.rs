use std::fmt;

use crate::field::FieldElement;
use crate::group::GroupElement;
use crate::hopf::{HElement, HopfCase, HopfOre, HopfStructure};

/// Dim_k(k ⊗_{H₀} H₁) − 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rank {
    One,
    Two,
    Infinite,
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rank::One => "1",
            Rank::Two => "2",
            Rank::Infinite => "infinite",
        })
    }
}

/// The shape of a free H₀-basis of H₁ modulo H₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H1Pattern {
    /// {x}
    Linear,
    /// {x, xⁿ}, characteristic 0 with q of order n ≥ 2.
    Power { n: u64 },
    /// {x} ∪ {x^{N·p^r} : r ≥ 0}, characteristic p with q of order N ≥ 2.
    ScaledPowers { order: u64, p: u64 },
    /// {x^{p^r} : r ≥ 0}, q = 1 with α(a) = 0.
    PrimePowers { p: u64 },
    /// {x} ∪ {x^{p^r} − x^{p^{r−1}} : r ≥ 1}, q = 1 with α(a) ≠ 0.
    Differences { p: u64 },
}

impl fmt::Display for H1Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Pattern::Linear => write!(f, "{{1, x}}"),
            H1Pattern::Power { n } => write!(f, "{{1, x, x^{n}}}"),
            H1Pattern::ScaledPowers { order, p } => write!(f, "{{1, x, x^({order}*{p}^r) : r >= 0}}"),
            H1Pattern::PrimePowers { p } => write!(f, "{{1, x^({p}^r) : r >= 0}}"),
            H1Pattern::Differences { p } => write!(f, "{{1, x, x^({p}^r) - x^({p}^(r-1)) : r >= 1}}"),
        }
    }
}

/// A predicted H₀-basis element of H₁ together with its group-like target g,
/// so that Δ(z) = z⊗g + 1⊗z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedGenerator {
    pub element: HElement,
    pub degree: u32,
    pub target: GroupElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub rank: Rank,
    pub pattern: H1Pattern,
}

impl RankResult {
    /// The predicted generators of degree ≤ `max_degree`.
    pub fn generators(&self, h: &HopfOre, max_degree: u32) -> Vec<PredictedGenerator> {
        let grp = h.group();
        let a = h.a();
        let make = |deg: u64, elem: HElement| PredictedGenerator {
            element: elem,
            degree: deg as u32,
            target: grp.pow(a, deg as i64),
        };
        let mut out = Vec::new();
        let max = max_degree as u64;
        let x = |d: u64| h.x_pow(d as u32);
        let powers = |base: u64, p: u64| {
            let mut v = Vec::new();
            let mut d = base;
            while d <= max {
                v.push(d);
                d *= p;
            }
            v
        };
        match &self.pattern {
            H1Pattern::Linear => {
                if max >= 1 {
                    out.push(make(1, x(1)));
                }
            }
            H1Pattern::Power { n } => {
                if max >= 1 {
                    out.push(make(1, x(1)));
                }
                if *n <= max {
                    out.push(make(*n, x(*n)));
                }
            }
            H1Pattern::ScaledPowers { order, p } => {
                if max >= 1 {
                    out.push(make(1, x(1)));
                }
                for d in powers(*order, *p) {
                    out.push(make(d, x(d)));
                }
            }
            H1Pattern::PrimePowers { p } => {
                for d in powers(1, *p) {
                    out.push(make(d, x(d)));
                }
            }
            H1Pattern::Differences { p } => {
                if max >= 1 {
                    out.push(make(1, x(1)));
                }
                for d in powers(*p, *p) {
                    out.push(make(d, x(d).sub(&x(d / p))));
                }
            }
        }
        out
    }
}

fn order_of(q: &FieldElement) -> Option<u64> {
    q.root_of_unity_order()
}

/// Rank of H from the characteristic and the order of q = θ(a).
pub fn rank_of(h: &HopfOre) -> RankResult {
    let p = h.ctx().characteristic();
    let ord = order_of(h.q());
    let (rank, pattern) = match (p, ord) {
        (0, Some(n)) if n >= 2 => (Rank::Two, H1Pattern::Power { n }),
        (0, _) => (Rank::One, H1Pattern::Linear),
        (p, Some(n)) if n >= 2 => (Rank::Infinite, H1Pattern::ScaledPowers { order: n, p }),
        (p, Some(1)) => match h.case() {
            HopfCase::Three => (Rank::Infinite, H1Pattern::Differences { p }),
            _ => (Rank::Infinite, H1Pattern::PrimePowers { p }),
        },
        _ => (Rank::One, H1Pattern::Linear),
    };
    RankResult { rank, pattern }
}
