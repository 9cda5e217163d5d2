//! Identity-based flow end to end: the authority (PKG) publishes system
//! parameters and the master public key, issues alice her credential, and
//! from then on anyone can encrypt to `(identity, Q)` or verify her
//! signatures with no certificate in sight.
//!
//! Run: `cargo run --example idb_end_to_end`

use certfree::{
    decrypt, encrypt, sign, verify, verify_credential, KeyAuthority, SystemParams,
    UserCredential,
};
use rand::rngs::OsRng;

fn main() {
    // Authority side: one-time setup. t scalars are drawn, their
    // commitments become the master public key every sender holds.
    let params = SystemParams::production_default(); // t=1024, k=18, n=128
    let authority = KeyAuthority::new(params.clone(), &mut OsRng);
    println!(
        "authority ready: t={}, k={}, master public key {} points",
        params.t(),
        params.k(),
        authority.master_public().len()
    );

    // Authority side: key extraction for an identity. The returned pair
    // (x, Q) satisfies x*P = Y + Q where Y is derived from H1(id, Q) over
    // the master public key.
    let id = "alice@example";
    let extracted = authority.extract(id, &mut OsRng).unwrap();
    let alice = UserCredential::from_identity_based(id, extracted).unwrap();
    assert!(verify_credential(
        &alice,
        authority.master_public(),
        &params
    ));
    println!("issued credential for `{id}`; self-check passed");

    // Sender side: all that is needed is (id, Q) and the master public key.
    let message = b"rendezvous at waypoint 7";
    let ciphertext = encrypt(
        message,
        alice.id(),
        alice.q_point(),
        authority.master_public(),
        &params,
        &mut OsRng,
    );
    println!(
        "encrypted {} bytes -> {} byte ciphertext body ({} + {} + {})",
        message.len(),
        params.profile().point_len() + 16 + message.len(),
        params.profile().point_len(),
        16,
        message.len()
    );

    // Recipient side.
    let recovered = decrypt(&alice, &ciphertext, &params).unwrap();
    assert_eq!(recovered, message);
    println!("decrypted: {:?}", String::from_utf8_lossy(&recovered));

    // Signatures: alice signs, anyone verifies against her (id, Q).
    let signature = sign(message, &alice, &params, &mut OsRng);
    let ok = verify(
        message,
        alice.id(),
        alice.q_point(),
        authority.master_public(),
        &params,
        &signature,
    );
    println!("signature over the message verifies: {ok}");
    assert!(ok);

    let tampered = b"rendezvous at waypoint 8";
    let ok = verify(
        tampered,
        alice.id(),
        alice.q_point(),
        authority.master_public(),
        &params,
        &signature,
    );
    println!("signature over a tampered message verifies: {ok}");
    assert!(!ok);
}
