//! The user guide, rendered as a book from `book/` at the repository root
//! and included here chapter by chapter so that every example in it
//! compiles and runs under `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/model.md")]
pub mod model {}

#[doc = include_str!("../../../book/src/solvers.md")]
pub mod solvers {}

#[doc = include_str!("../../../book/src/debiasing.md")]
pub mod debiasing {}

#[doc = include_str!("../../../book/src/protocol.md")]
pub mod protocol {}

#[doc = include_str!("../../../book/src/data-and-metrics.md")]
pub mod data_and_metrics {}

#[doc = include_str!("../../../book/src/experiments.md")]
pub mod experiments {}
