//! The measurement harness: wall-clock timings (median/mean/CV), operation
//! counts, and wire sizes for every operation on the production profile.
//!
//! Run: `cargo run --release --example benchmark`
//! (or pass an iteration count: `cargo run --release --example benchmark -- 5000`)

use certfree::{run_bench, SystemParams};
use rand::rngs::OsRng;

fn main() {
    let iterations: usize = std::env::args()
        .nth(1)
        .map(|arg| arg.parse().expect("iteration count"))
        .unwrap_or(1000);

    let params = SystemParams::production_default();
    let report = run_bench(iterations, &params, &mut OsRng).unwrap();
    print!("{report}");
}
