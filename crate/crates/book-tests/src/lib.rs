//! The guide under `book/`, compiled so its listings run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/surfaces.md")]
pub mod surfaces {}
#[doc = include_str!("../../../book/src/verifier.md")]
pub mod verifier {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
