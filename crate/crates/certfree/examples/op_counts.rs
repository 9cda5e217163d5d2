//! Group-operation counting: wrap the profile with a counter, run each
//! online operation once, and print the tallies next to the analytical
//! costs. Counting convention: one count per pairwise point addition (a
//! multi-add over n points counts n-1) and one per scalar multiplication,
//! with fixed-base multiplications also tracked separately.
//!
//! Run: `cargo run --example op_counts`

use certfree::{
    decrypt, encrypt, kex_finalize, kex_init, sign, verify, KexRole, KeyAuthority, SystemParams,
    UserCredential,
};
use rand::rngs::OsRng;

fn main() {
    let base = SystemParams::production_default();
    let k = base.k();
    let (params, counter) = base.instrumented();
    let authority = KeyAuthority::new(params.clone(), &mut OsRng);
    let alice = UserCredential::from_identity_based(
        "alice@count",
        authority.extract("alice@count", &mut OsRng).unwrap(),
    )
    .unwrap();
    let bob = UserCredential::from_identity_based(
        "bob@count",
        authority.extract("bob@count", &mut OsRng).unwrap(),
    )
    .unwrap();
    let mpk = authority.master_public();
    let msg = b"counted payload";

    println!("k = {k}");
    println!(
        "{:<14} {:>6} {:>6} {:>6}   analytical",
        "op", "muls", "fbmul", "adds"
    );

    counter.reset();
    let ct = encrypt(msg, alice.id(), alice.q_point(), mpk, &params, &mut OsRng);
    let c = counter.snapshot();
    println!(
        "{:<14} {:>6} {:>6} {:>6}   2 muls + k adds",
        "encrypt", c.total_muls(), c.fixed_base_muls, c.point_adds
    );

    counter.reset();
    decrypt(&alice, &ct, &params).unwrap();
    let c = counter.snapshot();
    println!(
        "{:<14} {:>6} {:>6} {:>6}   2 muls",
        "decrypt", c.total_muls(), c.fixed_base_muls, c.point_adds
    );

    counter.reset();
    let sig = sign(msg, &alice, &params, &mut OsRng);
    let c = counter.snapshot();
    println!(
        "{:<14} {:>6} {:>6} {:>6}   1 mul",
        "sign", c.total_muls(), c.fixed_base_muls, c.point_adds
    );

    counter.reset();
    assert!(verify(msg, alice.id(), alice.q_point(), mpk, &params, &sig));
    let c = counter.snapshot();
    println!(
        "{:<14} {:>6} {:>6} {:>6}   1 dbl-mul (= 2 muls + 1 add) + k adds",
        "verify", c.total_muls(), c.fixed_base_muls, c.point_adds
    );

    let eph_b = kex_init(&params, &mut OsRng);
    let msg_b = eph_b.message(&bob);
    counter.reset();
    let eph_a = kex_init(&params, &mut OsRng);
    let _ = kex_finalize(
        &alice,
        eph_a,
        bob.id(),
        &msg_b,
        mpk,
        &params,
        KexRole::Initiator,
    );
    let c = counter.snapshot();
    println!(
        "{:<14} {:>6} {:>6} {:>6}   3 muls + (k+1) adds",
        "kex per-user", c.total_muls(), c.fixed_base_muls, c.point_adds
    );
}
