//! Fixture loading shared by the benchmarks.

use std::path::PathBuf;

use artransfer::io::parse_spec;
use artransfer::{build_algebra, Algebra};

pub fn fixture(name: &str) -> Algebra {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    build_algebra(&parse_spec(&text).expect("fixture spec")).expect("fixture algebra")
}
