//! Numerical semigroups: gaps, multiplicity, conductor, Frobenius number,
//! small elements and Apéry sets, plus construction of a semigroup from a
//! finite generating set.
//!
//! A semigroup is represented by its [`GapsList`]. Lists render in the
//! bracket-semicolon style `[1;2;3]`.

pub mod apery;
pub mod enumerator;
pub mod error;
pub mod gaps;
pub mod generators;

pub use apery::{apery, apery_decompose, apery_residue, find_mod, AperyList, Decomposition};
pub use enumerator::{count_ge, lex_key, lgen, IndexList, LexKey, LgenStream};
pub use error::{Error, Result};
pub use gaps::{find_gap, gaps_from_membership, GapsList, InvariantReport, SmallElements};
pub use generators::{
    consecutive_values, gaps_from_generators, generating_set_from_gaps, mgen,
    small_elements_from_generators, GeneratorList,
};

use std::fmt;

pub(crate) fn fmt_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}
