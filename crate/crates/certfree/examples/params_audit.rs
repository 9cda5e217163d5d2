//! The (t, k) estimator: forging a credential for a chosen identity means
//! finding an input to H1 that reproduces a target index multiset, which
//! costs `k·log2(t) - log2(k!)` bits of work (ordered tuples collide up to
//! the k! orderings). Larger t buys security and costs master-public-key
//! bytes; larger k buys security and costs point additions per operation.
//!
//! Run: `cargo run --example params_audit`

use certfree::{security_level, size_report, GroupProfile, SystemParams, H1_QUERY_BUDGET};

fn main() {
    println!(
        "{:>6} {:>4} {:>12} {:>14} {:>12} {:>10}",
        "t", "k", "raw bits", "after 2^64 q", "mpk bytes", "adds/enc"
    );
    for (t, k) in [
        (256u32, 18u32),
        (256, 32),
        (512, 20),
        (1024, 18),
        (1024, 32),
        (2048, 16),
        (4096, 14),
    ] {
        let raw = security_level(t, k, 1.0);
        let budgeted = security_level(t, k, H1_QUERY_BUDGET);
        let mpk = match SystemParams::new(GroupProfile::production(), t, k, 128) {
            Ok(params) => format!("{}", size_report(&params).mpk),
            Err(_) => "rejected".to_string(),
        };
        println!("{t:>6} {k:>4} {raw:>12.2} {budgeted:>14.2} {mpk:>12} {k:>10}");
    }

    println!();
    println!("reference (t=1024, k=18): {:.4} bits of raw index entropy", security_level(1024, 18, 1.0));
    println!("quarter-size mpk (t=256, k=32): {:.4} bits, 4x smaller mpk, 14 extra adds per encryption", security_level(256, 32, 1.0));

    // the gate applied by SystemParams::new on the production profile
    let rejected = SystemParams::new(GroupProfile::production(), 64, 8, 128);
    println!();
    println!("(t=64, k=8) -> {}", rejected.unwrap_err());
}
