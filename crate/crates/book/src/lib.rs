//! The guide under `book/`, compiled so that every Rust listing in it runs
//! as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/frames-and-evidence.md")]
pub mod frames_and_evidence {}

#[doc = include_str!("../../../book/src/belief-and-plausibility.md")]
pub mod belief_and_plausibility {}

#[doc = include_str!("../../../book/src/combination.md")]
pub mod combination {}

#[doc = include_str!("../../../book/src/probability-bounds.md")]
pub mod probability_bounds {}

#[doc = include_str!("../../../book/src/families-and-sweeps.md")]
pub mod families_and_sweeps {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
