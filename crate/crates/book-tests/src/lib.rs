//! The guide in `book/` compiled as documentation, so every Rust block in
//! it runs under `cargo test`.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/fusion-rings.md")]
pub mod fusion_rings {}

#[doc = include_str!("../../../book/src/doubles.md")]
pub mod doubles {}

#[doc = include_str!("../../../book/src/braidings.md")]
pub mod braidings {}

#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
