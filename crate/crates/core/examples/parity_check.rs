// SPDX-License-Identifier: Apache-2.0

//! Closed-form parity-check matrix of a weakly-free code, checked against
//! the kernel-based dual.
//!
//!     cargo run --example parity_check

use std::path::PathBuf;

use chainmix::io::CodeFile;
use chainmix::MixedCode;

fn main() -> chainmix::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/ex2-standard.code");
    let code = CodeFile::load(&path)?.code;
    println!("C has type {}", code.code_type());

    let rows = code.parity_check_weakly_free()?;
    println!("parity-check matrix:");
    for r in &rows {
        println!("  {r}");
    }
    let h = MixedCode::new(code.ambient(), rows)?;
    println!("spans the dual: {}", h.same_code(&code.dual())?);
    println!("dual type {}", h.code_type());
    Ok(())
}
