//! Cross-domain compatibility: an identity-based user and a certificateless
//! user under the same authority exchange encrypted messages, verify each
//! other's signatures, and agree on session keys — in all four pairings,
//! with the same four online functions.
//!
//! Run: `cargo run --example cross_domain`

use certfree::{
    decrypt, encrypt, kex_finalize, kex_init, sign, user_key_gen, user_setup, verify, Domain,
    KexRole, KeyAuthority, SystemParams, UserCredential,
};
use rand::rngs::OsRng;

fn make_credential(
    authority: &KeyAuthority,
    domain: Domain,
    id: &str,
) -> UserCredential {
    match domain {
        Domain::IdentityBased => UserCredential::from_identity_based(
            id,
            authority.extract(id, &mut OsRng).unwrap(),
        )
        .unwrap(),
        Domain::Certificateless => {
            let user = user_setup(authority.params(), &mut OsRng);
            let partial = authority
                .part_key_gen(id, user.commitment(), &mut OsRng)
                .unwrap();
            user_key_gen(
                id,
                &user,
                partial,
                authority.master_public(),
                authority.params(),
            )
            .unwrap()
        }
    }
}

fn label(domain: Domain) -> &'static str {
    match domain {
        Domain::IdentityBased => "IDB",
        Domain::Certificateless => "CL",
    }
}

fn main() {
    let params = SystemParams::production_default();
    let authority = KeyAuthority::new(params.clone(), &mut OsRng);
    let mpk = authority.master_public();

    for sender_domain in [Domain::IdentityBased, Domain::Certificateless] {
        for recipient_domain in [Domain::IdentityBased, Domain::Certificateless] {
            let sender = make_credential(&authority, sender_domain, "sender@pair");
            let recipient = make_credential(&authority, recipient_domain, "recipient@pair");

            // encrypted message: sender -> recipient
            let msg = b"same functions, different trust models";
            let ct = encrypt(msg, recipient.id(), recipient.q_point(), mpk, &params, &mut OsRng);
            assert_eq!(decrypt(&recipient, &ct, &params).unwrap(), msg);

            // signature: sender signs, recipient verifies
            let sig = sign(msg, &sender, &params, &mut OsRng);
            assert!(verify(msg, sender.id(), sender.q_point(), mpk, &params, &sig));

            // key exchange between the two
            let eph_s = kex_init(&params, &mut OsRng);
            let eph_r = kex_init(&params, &mut OsRng);
            let msg_s = eph_s.message(&sender);
            let msg_r = eph_r.message(&recipient);
            let key_s = kex_finalize(
                &sender,
                eph_s,
                recipient.id(),
                &msg_r,
                mpk,
                &params,
                KexRole::Initiator,
            );
            let key_r = kex_finalize(
                &recipient,
                eph_r,
                sender.id(),
                &msg_s,
                mpk,
                &params,
                KexRole::Responder,
            );
            assert_eq!(key_s.key(), key_r.key());

            println!(
                "{:>3} -> {:<3}  encryption ok, signature ok, kex keys agree",
                label(sender_domain),
                label(recipient_domain),
            );
        }
    }
    println!("all four domain pairings interoperate");
}
