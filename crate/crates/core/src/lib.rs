//! Symbolic workbench for ordinals below epsilon_omega: normal forms,
//! pseudonorms, fundamental sequences, the Hardy hierarchy, alpha-large sets,
//! the estimation function `F`, and the Ramsey partitions built on
//! last-difference exponents.

pub mod error;
pub mod estimation;
pub mod fundamental;
pub mod hardy;
pub mod oracle;
pub mod ordinal;
pub mod ramsey;
pub mod syntax;

pub use error::{Error, Result};
pub use ordinal::{Kind, OmegaTerm, Ordinal, Term};
pub use syntax::{parse_ordinal, render, Style};
