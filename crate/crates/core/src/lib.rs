// SPDX-License-Identifier: Apache-2.0

//! Linear codes over the mixed alphabet `Z_{p^s} × Z_{p^r}`.

pub mod cli;
pub mod code;
pub mod error;
pub mod group;
pub mod io;
pub mod lcp;
pub mod matrix;
pub mod oracle;
pub mod ring;

pub use code::{Ambient, CodeType, MixedCode, MixedStandardForm, MixedVector};
pub use error::{Error, Result};
pub use matrix::{RingMatrix, StandardForm};
pub use ring::{ChainRingSpec, Level, RingElement};
