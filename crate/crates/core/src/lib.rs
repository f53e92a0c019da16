//! Exact-arithmetic toolkit for character degrees and codegrees of finite
//! permutation groups.
//!
//! The crate computes exact complex character tables of permutation groups
//! (class-algebra eigenvector method with modular lifting), kernels, codegrees
//! and the square-free gcd condition on `gcd(deg, codeg)`, together with the
//! symbolic machinery the same computations need at scales beyond direct
//! computation: hook-length degree families for alternating and symmetric
//! groups, the full degree sets of groups between PSL2(q) and its automorphism
//! group, and arithmetic verification of bundled witness-degree tables.
//!
//! - [`perm`], [`chain`], [`group`]: permutations, stabilizer chains, group
//!   construction, conjugacy classes and power maps
//! - [`field`]: small finite fields used by the projective-line constructions
//! - [`cyclo`], [`modp`]: exact cyclotomic integers and linear algebra mod p
//! - [`chartab`]: character tables, table verification, restriction to normal
//!   subgroups
//! - [`codegree`]: kernels, codegrees, gcd reports and hypothesis verdicts
//! - [`families`]: partitions/hooks, PSL2 degree sets and condition predicates
//! - [`atlas`]: witness-degree tables with symbolic degree expressions
//! - [`verify`]: the consolidated claim suite behind `verify-paper`

pub mod arith;
pub mod atlas;
pub mod chain;
pub mod chartab;
pub mod codegree;
pub mod cyclo;
pub mod error;
pub mod families;
pub mod field;
pub mod group;
pub mod modp;
pub(crate) mod par;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
