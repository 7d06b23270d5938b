//! Independent ground truth: a Buchberger engine and multiplication-map ranks.

mod buchberger;
mod rank;

pub use buchberger::{aci_generators, buchberger, initial_ideal_oracle, verify_is_gb, OracleConfig};
pub use rank::{multiplication_rank, rank_mod_p, MapRank};
