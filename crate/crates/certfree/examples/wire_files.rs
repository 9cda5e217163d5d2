//! Wire formats: every artifact kind serialized and hex-dumped from a fixed
//! seed on the mock profile (short, deterministic dumps), plus the byte-size
//! table for the production configuration.
//!
//! Every container is `"CFC1" ‖ version ‖ kind ‖ params-digest(8) ‖ payload`;
//! integers are little-endian and payload lengths are fixed by
//! `(kind, params)`, except the ciphertext's trailing message part.
//!
//! Run: `cargo run --example wire_files`

use certfree::{
    encrypt, kex_init, setup, sign, size_report, to_bytes, user_key_gen, user_setup,
    write_system_params, GroupProfile, KeyAuthority, SystemParams, UserCredential,
};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn dump(name: &str, bytes: &[u8]) {
    println!("{name} ({} bytes):", bytes.len());
    for chunk in bytes.chunks(16) {
        println!("  {}", hex::encode(chunk));
    }
}

fn main() {
    // deterministic artifacts: mock profile, fixed seed
    let params = SystemParams::new(GroupProfile::mock(), 16, 4, 128).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(42);
    let authority = KeyAuthority::new(params.clone(), &mut rng);

    dump("params.cfc", &write_system_params(&params));
    dump("mpk.cfc", &to_bytes(authority.master_public(), &params));
    dump("msk.cfc", &to_bytes(authority.master_secret(), &params));

    let alice = UserCredential::from_identity_based(
        "alice",
        authority.extract("alice", &mut rng).unwrap(),
    )
    .unwrap();
    dump("alice.cred.cfc (identity-based)", &to_bytes(&alice, &params));

    let user = user_setup(&params, &mut rng);
    dump("bob.usk.cfc", &to_bytes(&user, &params));
    let partial = authority
        .part_key_gen("bob", user.commitment(), &mut rng)
        .unwrap();
    dump("bob.partial.cfc", &to_bytes(&partial, &params));
    let bob = user_key_gen("bob", &user, partial, authority.master_public(), &params).unwrap();
    dump("bob.cred.cfc (certificateless)", &to_bytes(&bob, &params));

    let ct = encrypt(
        b"hi",
        alice.id(),
        alice.q_point(),
        authority.master_public(),
        &params,
        &mut rng,
    );
    dump("msg.ct.cfc (2-byte message)", &to_bytes(&ct, &params));

    let sig = sign(b"hi", &bob, &params, &mut rng);
    dump("msg.sig.cfc", &to_bytes(&sig, &params));

    let eph = kex_init(&params, &mut rng);
    dump("a.kex.cfc", &to_bytes(&eph.message(&alice), &params));

    // production payload sizes for the reference configuration
    let prod = SystemParams::production_default();
    let report = size_report(&prod);
    println!("\nproduction payload sizes (t={}, k={}):", prod.t(), prod.k());
    println!("  container header           {:>6} B", report.header_len);
    println!("  params                     {:>6} B", report.params);
    println!("  master public key          {:>6} B", report.mpk);
    println!("  master secret key          {:>6} B", report.msk);
    println!("  credential (5-byte id)     {:>6} B", report.credential(5));
    println!("  ciphertext overhead        {:>6} B", report.ciphertext_overhead);
    println!("  signature                  {:>6} B", report.signature);
    println!("  kex message                {:>6} B", report.kex_message);
    println!("  user secret                {:>6} B", report.user_secret);
    println!("  partial key                {:>6} B", report.partial_key);

    // the size table is not hypothetical: verify one against real bytes
    let mut rng = ChaCha20Rng::seed_from_u64(43);
    let (_, mpk) = setup(&prod, &mut rng);
    assert_eq!(
        to_bytes(&mpk, &prod).len(),
        report.header_len + report.mpk
    );
}
