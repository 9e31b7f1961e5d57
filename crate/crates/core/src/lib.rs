//! Exact arithmetic for mixed-radix Cantor groups.
//!
//! The crate realizes the Cantor set as the projective limit of direct sums
//! of cyclic groups described by an eventually periodic radix sequence, and
//! provides, all in exact rational arithmetic:
//!
//! * the lexicographic lattice of digit sequences with its
//!   embedding–projection pairs ([`radix`]);
//! * the strictly monotone map onto the unit interval and its staircase
//!   companion ([`cantor_map`]);
//! * the Boolean algebra of clopen prefix sets with canonical forms and
//!   partition atoms ([`clopen`]);
//! * Haar measure on clopen sets and exact verification that it pushes
//!   forward to interval length ([`measure`]);
//! * Cayley-table groups, towers of finite quotients, and their abelian
//!   replacement radices ([`group`]);
//! * exact digit conversion between any two radix systems ([`convert`]);
//! * reproducible uniform sampling with statistical cross-checks
//!   ([`sampler`]);
//! * the file formats used by the command-line tool ([`io`]).

pub mod cantor_map;
pub mod clopen;
pub mod convert;
pub mod error;
pub mod group;
pub mod io;
pub mod measure;
pub mod radix;
pub mod sampler;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

pub use cantor_map::unit_enclosure;
pub use clopen::{partition_atoms, ClopenInterval, ClopenSet};
pub use convert::{
    convert_point, convert_stream, digits_of_rational, ConversionResult, ConversionStatus,
    StreamConversion,
};
pub use group::{
    cyclic_mod_hom, FiniteGroup, GroupDefect, GroupHom, HomDefect, PushforwardMasses, Tower,
    TowerDefect,
};
pub use measure::{check_interval_pushforward, check_set_pushforward, level_consistency, PushforwardReport};
pub use radix::{
    lex_compare, CoCompactPoint, DigitProvider, FnProvider, LevelPoint, LexOrdering, Point,
    PointStream, RadixSystem,
};
pub use sampler::{
    empirical_vs_exact, ks_statistic, run_uniformity_test, run_uniformity_test_biased,
    sample_digits, sample_digits_biased, unit_midpoint_f64, FrequencyReport, KsReport,
    SamplerConfig,
};
