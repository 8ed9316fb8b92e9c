//! Rank of H, skew-primitive elements, and rank-one quotients H/I.

mod quotient;
mod rank;
mod skew;

pub use quotient::{
    check_hopf_ideal, check_ideal, ideal_form, make_quotient, power_p_form, IdealCheck, IdealFailure, IdealForm,
    IdealReport, QuotientHopf,
};
pub use rank::{rank_of, H1Pattern, PredictedGenerator, Rank, RankResult};
pub use skew::{rank_crosscheck, skew_primitives, RankCrosscheck, SkewPrimitiveSpace, TargetCount};
