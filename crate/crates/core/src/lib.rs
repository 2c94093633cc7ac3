//! Dyck paths, staircase partitions and ad-nilpotent ideals of type A.
//!
//! Every object of rank `l` lives in one of four equinumerous families
//! (counted by `C_{l+1}`): staircase partitions [`LPartition`], Dyck
//! paths [`DyckPath`] of semilength `l + 1`, root ideals [`RootIdeal`] of
//! the positive roots of `A_l`, and their antichains of minimal roots.
//! The peak-insertion map [`d_map`] sends the `udu` statistic of a path to
//! the size of the largest simple subset `I` for which the ideal is still
//! an ideal of the parabolic `p_I`.

pub mod insertion;
pub mod convert;
pub mod counting;
pub mod dyck;
pub mod error;
pub mod exec;
pub mod lie;
pub mod partition;
pub mod roots;
pub mod verify;

pub use insertion::{d_inverse, d_map, d_map_steps, insertion_words, udu_ledger, LedgerMode, UduLedger};
pub use convert::{convert, Repr, Value};
pub use counting::{catalan, n_r_l, narayana, CensusSource, CensusTable};
pub use dyck::{enumerate_dyck, DyckPath, Step};
pub use error::{Error, Result};
pub use exec::Exec;
pub use partition::{enumerate_partitions, LPartition};
pub use roots::{enumerate_ideals, Antichain, PositiveRoot, RootIdeal, SimpleSubset};
pub use verify::{VerifyConfig, VerifyReport};
