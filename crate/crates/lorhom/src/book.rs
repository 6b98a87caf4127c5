//! The user guide, compiled as doc-tests.
//!
//! Each chapter of the mdbook guide in `book/src` is included here as the
//! documentation of an empty module, so `cargo test --doc` compiles and runs
//! every code block in the guide and the prose can never drift away from the
//! library's actual behaviour.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/roots.md")]
pub mod roots {}

#[doc = include_str!("../../../book/src/orbits.md")]
pub mod orbits {}

#[doc = include_str!("../../../book/src/matrixlie.md")]
pub mod matrixlie {}

#[doc = include_str!("../../../book/src/noncompact.md")]
pub mod noncompact {}

#[doc = include_str!("../../../book/src/catalog.md")]
pub mod catalog {}
