// SPDX-License-Identifier: Apache-2.0

//! Row-reduce a Z8Z4 code to its standard generator matrix and read off its
//! type.
//!
//!     cargo run --example standard_form [FILE]

use std::path::PathBuf;

use chainmix::io::CodeFile;

fn main() -> chainmix::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/ex2.code"));
    let code = CodeFile::load(&path)?.code;

    println!("generators:");
    for g in code.generators() {
        println!("  {g}");
    }

    let form = code.standard_generator_matrix();
    let (perm_r, perm_rbar) = form.block_permutations();
    println!("\nstandard form (original column order):");
    for row in &form.rows {
        println!("  {row}");
    }
    println!("\ncolumn order {perm_r:?} | {perm_rbar:?}; staircase:");
    for row in form.staircase_rows() {
        println!("  {row}");
    }

    let t = &form.code_type;
    println!("\ntype {t}, |C| = {}^{}", code.spec().p(), t.dimension());
    println!("weakly-free {}, free {}, separable {}", t.is_weakly_free(), code.is_free(), code.is_separable());
    Ok(())
}
