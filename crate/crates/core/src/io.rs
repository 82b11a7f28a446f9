// SPDX-License-Identifier: Apache-2.0

//! The `.code` file format.
//!
//! ```toml
//! p = 2
//! s = 3
//! r = 2
//! alpha = 4
//! beta = 3
//! rows = [
//!   [7, 6, 5, 4, 1, 2, 3],
//!   [6, 4, 0, 2, 2, 0, 1],
//! ]
//!
//! [groups]        # optional
//! H = [2, 2]
//! K = [3]
//!
//! [meta]          # optional, ignored on input
//! type = "(4,3; 1 | 3, 0)"
//! ```
//!
//! Each row has `α + β` integers; the first `α` are read mod `p^s`, the rest
//! mod `p^r`, negatives included.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::code::{Ambient, MixedCode, MixedVector};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::ring::ChainRingSpec;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroups {
    #[serde(rename = "H")]
    h: Vec<usize>,
    #[serde(rename = "K")]
    k: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCodeFile {
    p: u64,
    s: u32,
    r: u32,
    alpha: usize,
    beta: usize,
    rows: Vec<Vec<i64>>,
    groups: Option<RawGroups>,
    #[allow(dead_code)]
    meta: Option<toml::Table>,
}

/// A parsed and validated code file.
#[derive(Debug, Clone)]
pub struct CodeFile {
    pub code: MixedCode,
    pub groups: Option<(GroupSpec, GroupSpec)>,
}

fn input_error(path: &str, message: impl Into<String>) -> Error {
    Error::Input {
        path: path.to_string(),
        message: message.into(),
    }
}

impl CodeFile {
    pub fn new(code: MixedCode, groups: Option<(GroupSpec, GroupSpec)>) -> Self {
        CodeFile { code, groups }
    }

    /// Parses file contents; `origin` names the source in diagnostics.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let raw: RawCodeFile = toml::from_str(text).map_err(|e| input_error(origin, e.to_string().trim_end()))?;
        let spec = ChainRingSpec::new(raw.p, raw.s, raw.r).map_err(|e| input_error(origin, format!("field p/s/r: {e}")))?;
        let ambient = Ambient::new(spec, raw.alpha, raw.beta);
        let mut gens = Vec::with_capacity(raw.rows.len());
        for (i, row) in raw.rows.iter().enumerate() {
            if row.len() != ambient.len() {
                return Err(input_error(
                    origin,
                    format!("field rows, row {}: expected {} entries (alpha + beta), found {}", i + 1, ambient.len(), row.len()),
                ));
            }
            gens.push(MixedVector::from_flat(ambient, row)?);
        }
        let groups = match raw.groups {
            None => None,
            Some(g) => {
                let h = GroupSpec::new(&g.h).map_err(|e| input_error(origin, format!("field groups.H: {e}")))?;
                let k = GroupSpec::new(&g.k).map_err(|e| input_error(origin, format!("field groups.K: {e}")))?;
                if h.order() != raw.alpha {
                    return Err(input_error(origin, format!("field groups.H: order {} but alpha = {}", h.order(), raw.alpha)));
                }
                if k.order() != raw.beta {
                    return Err(input_error(origin, format!("field groups.K: order {} but beta = {}", k.order(), raw.beta)));
                }
                Some((h, k))
            }
        };
        Ok(CodeFile {
            code: MixedCode::new(ambient, gens)?,
            groups,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let origin = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| input_error(&origin, e.to_string()))?;
        CodeFile::parse(&text, &origin)
    }

    /// Serializes with one row per line; `meta` entries are written as
    /// string values under `[meta]`.
    pub fn to_toml(&self, meta: &[(&str, String)]) -> String {
        let amb = self.code.ambient();
        let spec = amb.spec;
        let mut out = String::new();
        let _ = writeln!(out, "p = {}\ns = {}\nr = {}", spec.p(), spec.s(), spec.r());
        let _ = writeln!(out, "alpha = {}\nbeta = {}", amb.alpha, amb.beta);
        out.push_str(&rows_toml("rows", self.code.generators()));
        if let Some((h, k)) = &self.groups {
            let _ = writeln!(out, "\n[groups]\nH = {:?}\nK = {:?}", h.factors(), k.factors());
        }
        if !meta.is_empty() {
            out.push_str("\n[meta]\n");
            for (key, value) in meta {
                let _ = writeln!(out, "{key} = {}", toml::Value::String(value.clone()));
            }
        }
        out
    }
}

/// `key = [ [..], [..] ]` with one vector per line.
pub fn rows_toml(key: &str, rows: &[MixedVector]) -> String {
    if rows.is_empty() {
        return format!("{key} = []\n");
    }
    let mut out = format!("{key} = [\n");
    for v in rows {
        let _ = writeln!(out, "  {:?},", v.flat());
    }
    out.push_str("]\n");
    out
}
