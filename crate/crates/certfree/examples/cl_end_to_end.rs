//! Certificateless flow end to end: the user contributes their own secret,
//! so the authority (KGC) alone can never decrypt or sign for them — and a
//! partial key issued for a different commitment is rejected by the binding
//! check rather than silently producing a broken credential.
//!
//! Run: `cargo run --example cl_end_to_end`

use certfree::{
    decrypt, encrypt, sign, user_key_gen, user_setup, verify, verify_credential, Error,
    KeyAuthority, SystemParams, UserSecret,
};
use rand::rngs::OsRng;

fn main() {
    let params = SystemParams::production_default();
    let authority = KeyAuthority::new(params.clone(), &mut OsRng);

    // User side: a private alpha and its public commitment U = alpha*P.
    // U travels to the authority (over whatever authenticated channel the
    // deployment already has); alpha never leaves the device.
    let bob_secret = user_setup(&params, &mut OsRng);
    println!("bob generated (alpha, U); sending U to the KGC");

    // Authority side: folds U into Q = U + W and issues the partial key w.
    let id = "bob@example";
    let partial = authority
        .part_key_gen(id, bob_secret.commitment(), &mut OsRng)
        .unwrap();
    println!("KGC issued a partial key bound to bob's commitment");

    // User side: check the binding equation Q - U = wP - Y, then finalize
    // x = w + alpha. Only bob, holding alpha, can complete the key.
    let bob = user_key_gen(
        id,
        &bob_secret,
        partial.clone(),
        authority.master_public(),
        &params,
    )
    .unwrap();
    assert!(verify_credential(&bob, authority.master_public(), &params));
    println!("bob finalized his credential; self-check passed");

    // What the binding check is for: the same partial key presented with a
    // *different* commitment (a key-replacement attempt) is rejected.
    let mallory_secret = user_setup(&params, &mut OsRng);
    let forged = UserSecret::from_parts(*mallory_secret.alpha(), *mallory_secret.commitment());
    match user_key_gen(id, &forged, partial, authority.master_public(), &params) {
        Err(Error::BindingCheckFailed) => {
            println!("substituted commitment rejected: binding check failed (as designed)")
        }
        other => panic!("expected a binding failure, got {other:?}"),
    }

    // From here on, everything looks exactly like the identity-based flow.
    let message = b"battery at 34%, returning";
    let ciphertext = encrypt(
        message,
        bob.id(),
        bob.q_point(),
        authority.master_public(),
        &params,
        &mut OsRng,
    );
    assert_eq!(decrypt(&bob, &ciphertext, &params).unwrap(), message);
    println!("encrypt/decrypt roundtrip ok");

    let signature = sign(message, &bob, &params, &mut OsRng);
    assert!(verify(
        message,
        bob.id(),
        bob.q_point(),
        authority.master_public(),
        &params,
        &signature
    ));
    println!("sign/verify roundtrip ok");
}
