//! Two-message authenticated key exchange: each side sends `(M = zP, Q)`,
//! combines the peer's static key `Y + Q` under its own `x` and the peer's
//! ephemeral under its own `z`, and lands on the same point
//! `(x_a·x_b + z_a·z_b)P`. The 32-byte session key additionally binds the
//! full transcript, so the two sides also agree on *who* they think they
//! talked to.
//!
//! Run: `cargo run --example key_exchange`

use certfree::{
    kex_finalize, kex_init, KexMessage, KexRole, KeyAuthority, SystemParams, UserCredential,
};
use rand::rngs::OsRng;

fn main() {
    let params = SystemParams::production_default();
    let authority = KeyAuthority::new(params.clone(), &mut OsRng);
    let mpk = authority.master_public();

    let alice = UserCredential::from_identity_based(
        "alice@relay",
        authority.extract("alice@relay", &mut OsRng).unwrap(),
    )
    .unwrap();
    let bob = UserCredential::from_identity_based(
        "bob@relay",
        authority.extract("bob@relay", &mut OsRng).unwrap(),
    )
    .unwrap();

    // 1. both sides pick a fresh ephemeral and exchange (M, Q)
    let eph_a = kex_init(&params, &mut OsRng);
    let eph_b = kex_init(&params, &mut OsRng);
    let msg_a = eph_a.message(&alice);
    let msg_b = eph_b.message(&bob);
    println!("alice -> bob: (M_A, Q_A)   bob -> alice: (M_B, Q_B)");

    // 2. both sides finalize; the ephemeral state is consumed so z is
    //    never reused
    let key_a = kex_finalize(
        &alice,
        eph_a,
        bob.id(),
        &msg_b,
        mpk,
        &params,
        KexRole::Initiator,
    );
    let key_b = kex_finalize(
        &bob,
        eph_b,
        alice.id(),
        &msg_a,
        mpk,
        &params,
        KexRole::Responder,
    );

    assert_eq!(key_a.point(), key_b.point());
    assert_eq!(key_a.key(), key_b.key());
    println!("shared point agrees; session key: {}", hex::encode(key_a.key()));

    // A tampered commitment diverges: alice computes against a forged M_B.
    let eph_a2 = kex_init(&params, &mut OsRng);
    let msg_a2 = eph_a2.message(&alice);
    let eph_b2 = kex_init(&params, &mut OsRng);
    let forged = KexMessage::from_parts(
        params
            .profile()
            .add(eph_b2.message(&bob).commitment(), &params.profile().generator()),
        *bob.q_point(),
    );
    let key_a2 = kex_finalize(
        &alice,
        eph_a2,
        bob.id(),
        &forged,
        mpk,
        &params,
        KexRole::Initiator,
    );
    let key_b2 = kex_finalize(
        &bob,
        eph_b2,
        alice.id(),
        &msg_a2,
        mpk,
        &params,
        KexRole::Responder,
    );
    assert_ne!(key_a2.key(), key_b2.key());
    println!("tampered M_B detected: session keys diverge");

    // No key-confirmation round is built in; a deployment that wants
    // explicit confirmation signs the transcript with the schemes' own
    // signatures.
}
