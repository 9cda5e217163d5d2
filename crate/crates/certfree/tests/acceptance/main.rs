//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured evidence. Run with
//! `cargo test -p certfree --test acceptance -- --nocapture` to see them.

mod oracle;

use std::time::Instant;

use certfree::{
    decrypt, encrypt, kex_finalize, kex_init, security_level, sign, size_report, to_bytes,
    user_key_gen, user_setup, verify, Ciphertext, Domain, Error, GroupProfile, KexRole,
    KeyAuthority, SystemParams, UserCredential, UserSecret,
};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn mock_params(t: u32, k: u32) -> SystemParams {
    SystemParams::new(GroupProfile::mock(), t, k, 128).unwrap()
}

fn idb_credential(
    authority: &KeyAuthority,
    id: &str,
    rng: &mut ChaCha20Rng,
) -> UserCredential {
    UserCredential::from_identity_based(id, authority.extract(id, rng).unwrap()).unwrap()
}

fn cl_credential(
    authority: &KeyAuthority,
    id: &str,
    rng: &mut ChaCha20Rng,
) -> UserCredential {
    let user = user_setup(authority.params(), rng);
    let partial = authority.part_key_gen(id, user.commitment(), rng).unwrap();
    user_key_gen(
        id,
        &user,
        partial,
        authority.master_public(),
        authority.params(),
    )
    .unwrap()
}

/// Criterion 1: decrypt∘encrypt is the identity and verify∘sign accepts, for
/// 100 random messages on both profiles and both domains, with zero failures,
/// in under 30 seconds.
#[test]
fn criterion_1_correctness_roundtrips() {
    let started = Instant::now();
    let mut checked = 0usize;
    for params in [mock_params(16, 4), SystemParams::production_default()] {
        let mut rng = ChaCha20Rng::seed_from_u64(1001);
        let authority = KeyAuthority::new(params.clone(), &mut rng);
        for domain in [Domain::IdentityBased, Domain::Certificateless] {
            let cred = match domain {
                Domain::IdentityBased => idb_credential(&authority, "round-idb", &mut rng),
                Domain::Certificateless => cl_credential(&authority, "round-cl", &mut rng),
            };
            for i in 0..100 {
                let len = (i * 7) % 96;
                let mut msg = vec![0u8; len];
                rng.fill_bytes(&mut msg);
                let ct = encrypt(
                    &msg,
                    cred.id(),
                    cred.q_point(),
                    authority.master_public(),
                    &params,
                    &mut rng,
                );
                assert_eq!(decrypt(&cred, &ct, &params).unwrap(), msg);

                let sig = sign(&msg, &cred, &params, &mut rng);
                assert!(verify(
                    &msg,
                    cred.id(),
                    cred.q_point(),
                    authority.master_public(),
                    &params,
                    &sig
                ));
                checked += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 30,
        "roundtrips took {elapsed:?}, budget is 30 s"
    );
    println!(
        "criterion 1: PASS - {checked} message roundtrips (enc/dec and sign/verify), \
         2 profiles x 2 domains, zero failures in {elapsed:?}"
    );
}

/// Criterion 2: all four domain pairings succeed for encryption, signatures,
/// and key exchange; key exchange yields equal 32-byte session keys on both
/// sides.
#[test]
fn criterion_2_cross_domain_compatibility() {
    let params = SystemParams::production_default();
    let mut rng = ChaCha20Rng::seed_from_u64(1002);
    let authority = KeyAuthority::new(params.clone(), &mut rng);

    let make = |domain: Domain, name: &str, rng: &mut ChaCha20Rng| match domain {
        Domain::IdentityBased => idb_credential(&authority, name, rng),
        Domain::Certificateless => cl_credential(&authority, name, rng),
    };

    let mut pairings = 0usize;
    for sender_domain in [Domain::IdentityBased, Domain::Certificateless] {
        for recipient_domain in [Domain::IdentityBased, Domain::Certificateless] {
            let sender = make(sender_domain, "pair-sender", &mut rng);
            let recipient = make(recipient_domain, "pair-recipient", &mut rng);

            // encryption across domains
            let msg = b"cross-domain payload";
            let ct = encrypt(
                msg,
                recipient.id(),
                recipient.q_point(),
                authority.master_public(),
                &params,
                &mut rng,
            );
            assert_eq!(decrypt(&recipient, &ct, &params).unwrap(), msg);

            // signature across domains
            let sig = sign(msg, &sender, &params, &mut rng);
            assert!(verify(
                msg,
                sender.id(),
                sender.q_point(),
                authority.master_public(),
                &params,
                &sig
            ));

            // key exchange across domains
            let eph_s = kex_init(&params, &mut rng);
            let eph_r = kex_init(&params, &mut rng);
            let msg_s = eph_s.message(&sender);
            let msg_r = eph_r.message(&recipient);
            let key_s = kex_finalize(
                &sender,
                eph_s,
                recipient.id(),
                &msg_r,
                authority.master_public(),
                &params,
                KexRole::Initiator,
            );
            let key_r = kex_finalize(
                &recipient,
                eph_r,
                sender.id(),
                &msg_s,
                authority.master_public(),
                &params,
                KexRole::Responder,
            );
            assert_eq!(key_s.point(), key_r.point());
            assert_eq!(key_s.key(), key_r.key());
            assert_eq!(key_s.key().len(), 32);
            pairings += 1;
        }
    }
    assert_eq!(pairings, 4);
    println!(
        "criterion 2: PASS - encryption, signatures, and key exchange succeed for all \
         4 domain pairings; session keys agree on both sides"
    );
}

/// Criterion 3: exact byte sizes at (t = 1024, k = 18, n = 128) on the
/// production profile, checked on real artifacts, not just the size table.
#[test]
fn criterion_3_size_claims() {
    let params = SystemParams::production_default();
    assert_eq!((params.t(), params.k(), params.n_bits()), (1024, 18, 128));
    let mut rng = ChaCha20Rng::seed_from_u64(1003);
    let authority = KeyAuthority::new(params.clone(), &mut rng);
    let cred = idb_credential(&authority, "size-alice", &mut rng);
    let profile = params.profile();
    let header = certfree::wire::HEADER_LEN;

    let payload_len = |bytes: &[u8]| bytes.len() - header;

    // signature: 64 bytes
    let sig = sign(b"sized", &cred, &params, &mut rng);
    assert_eq!(payload_len(&to_bytes(&sig, &params)), 64);

    // kex message: 64 bytes
    let eph = kex_init(&params, &mut rng);
    let kexmsg = eph.message(&cred);
    assert_eq!(payload_len(&to_bytes(&kexmsg, &params)), 64);

    // ciphertext overhead: 48 bytes over the message for several lengths
    for len in [0usize, 1, 33, 100] {
        let ct = encrypt(
            &vec![7u8; len],
            cred.id(),
            cred.q_point(),
            authority.master_public(),
            &params,
            &mut rng,
        );
        assert_eq!(payload_len(&to_bytes(&ct, &params)), 48 + len);
    }

    // credential secret scalar and Q: 32 bytes each
    assert_eq!(profile.encode_scalar(cred.secret_scalar()).len(), 32);
    assert_eq!(profile.encode_point(cred.q_point()).len(), 32);

    // master public key payload: exactly 32768 bytes
    assert_eq!(
        payload_len(&to_bytes(authority.master_public(), &params)),
        32_768
    );

    let report = size_report(&params);
    assert_eq!(report.signature, 64);
    assert_eq!(report.kex_message, 64);
    assert_eq!(report.ciphertext_overhead, 48);
    assert_eq!(report.mpk, 32_768);

    println!(
        "criterion 3: PASS - signature 64 B, kex message 64 B, ciphertext overhead 48 B, \
         secret scalar 32 B, Q 32 B, mpk payload 32768 B (exact)"
    );
}

/// Criterion 4: instrumented group-operation counts. Convention: each
/// pairwise point addition counts one add (a multi-add over n points counts
/// n-1); fixed-base and variable-base multiplications count one each.
#[test]
fn criterion_4_operation_counts() {
    let base = SystemParams::production_default();
    let k = base.k() as u64;
    let (params, counter) = base.instrumented();
    let mut rng = ChaCha20Rng::seed_from_u64(1004);
    let authority = KeyAuthority::new(params.clone(), &mut rng);
    let alice = idb_credential(&authority, "count-alice", &mut rng);
    let bob = cl_credential(&authority, "count-bob", &mut rng);
    let msg = b"counted message";

    counter.reset();
    let ct = encrypt(
        msg,
        alice.id(),
        alice.q_point(),
        authority.master_public(),
        &params,
        &mut rng,
    );
    let enc = counter.snapshot();
    assert_eq!((enc.total_muls(), enc.point_adds), (2, k), "enc = 2 muls + k adds");

    counter.reset();
    decrypt(&alice, &ct, &params).unwrap();
    let dec = counter.snapshot();
    assert_eq!((dec.total_muls(), dec.point_adds), (2, 0), "dec = 2 muls");

    counter.reset();
    let sig = sign(msg, &alice, &params, &mut rng);
    let sgn = counter.snapshot();
    assert_eq!((sgn.total_muls(), sgn.point_adds), (1, 0), "sign = 1 mul");

    counter.reset();
    assert!(verify(
        msg,
        alice.id(),
        alice.q_point(),
        authority.master_public(),
        &params,
        &sig
    ));
    let ver = counter.snapshot();
    assert!(
        ver.total_muls() <= 2 && ver.point_adds <= k + 1,
        "verify <= 2 muls + (k+1) adds, got {} muls {} adds",
        ver.total_muls(),
        ver.point_adds
    );
    assert_eq!((ver.total_muls(), ver.point_adds), (2, k + 1));

    let eph_b = kex_init(&params, &mut rng);
    let msg_b = eph_b.message(&bob);
    counter.reset();
    let eph_a = kex_init(&params, &mut rng);
    let _ = kex_finalize(
        &alice,
        eph_a,
        bob.id(),
        &msg_b,
        authority.master_public(),
        &params,
        KexRole::Initiator,
    );
    let kex = counter.snapshot();
    assert!(
        kex.total_muls() <= 3 && kex.point_adds <= k + 1,
        "kex per-user <= 3 muls + (k+1) adds, got {} muls {} adds",
        kex.total_muls(),
        kex.point_adds
    );
    assert_eq!((kex.total_muls(), kex.point_adds), (3, k + 1));

    println!(
        "criterion 4: PASS - enc 2 muls + {k} adds, dec 2 muls, sign 1 mul, \
         verify 2 muls + {} adds, kex per-user 3 muls + {} adds \
         (each pairwise addition counts 1; multi-add over n points counts n-1)",
        k + 1,
        k + 1
    );
}

/// Criterion 5: the parameter estimator, with `log2(k!)` computed exactly.
/// `security_level(1024, 18, 1) = 180 - log2(18!) = 127.4934...`, checked
/// against an arbitrary-precision factorial; `security_level(256, 32, 1) >=
/// 138`; the master public key shrinks 4x at t = 256.
#[test]
fn criterion_5_parameter_estimator() {
    // independent oracle: exact 18! via big integers, then log2
    let mut factorial = num_bigint::BigUint::from(1u32);
    for i in 2u32..=18 {
        factorial *= num_bigint::BigUint::from(i);
    }
    assert_eq!(factorial.to_string(), "6402373705728000");
    let log2_18_fact = factorial.to_string().parse::<f64>().unwrap().log2();
    let expected = 180.0 - log2_18_fact;

    let level = security_level(1024, 18, 1.0);
    assert!(
        (level - expected).abs() < 1e-9,
        "estimator disagrees with the big-integer oracle: {level} vs {expected}"
    );
    assert!(
        (level - 127.4925).abs() <= 0.1,
        "security_level(1024, 18, 1) = {level}, expected 127.4925 +/- 0.1"
    );

    let level_small = security_level(256, 32, 1.0);
    assert!(level_small >= 138.0, "got {level_small}");

    let big = size_report(&SystemParams::production_default()).mpk;
    let small = size_report(
        &SystemParams::new(GroupProfile::production(), 256, 32, 128).unwrap(),
    )
    .mpk;
    assert_eq!(big, 4 * small, "mpk must shrink 4x at t = 256");

    println!(
        "criterion 5: PASS - security_level(1024,18,1) = {level:.4} bits \
         (exact log2(18!) = {log2_18_fact:.4}), security_level(256,32,1) = \
         {level_small:.4} >= 138, mpk {big} B -> {small} B (4x)"
    );
}

/// Criterion 6: 1000 single-bit tampers spread across R, u, and v. Bit flips
/// inside u or v keep the ciphertext well-formed and must surface as the
/// decryption-failure value; flips inside the encoded R may instead be
/// rejected at decode time as an invalid point. Zero decryptions succeed.
#[test]
fn criterion_6_fo_robustness() {
    let params = SystemParams::production_default();
    let mut rng = ChaCha20Rng::seed_from_u64(1006);
    let authority = KeyAuthority::new(params.clone(), &mut rng);
    let cred = idb_credential(&authority, "tamper-alice", &mut rng);
    let msg = b"the original plaintext";
    let ct = encrypt(
        msg,
        cred.id(),
        cred.q_point(),
        authority.master_public(),
        &params,
        &mut rng,
    );
    let profile = params.profile();
    let r_bytes = profile.encode_point(ct.r_point());

    let mut bottoms = 0usize;
    let mut invalid_points = 0usize;
    for trial in 0..1000usize {
        let zone = trial % 3;
        match zone {
            0 => {
                // tamper R
                let mut bytes = r_bytes.clone();
                let bit = rng.gen_range(0..bytes.len() * 8);
                bytes[bit / 8] ^= 1 << (bit % 8);
                match profile.decode_point(&bytes) {
                    Err(Error::InvalidPoint) => invalid_points += 1,
                    Err(other) => panic!("unexpected decode error {other:?}"),
                    Ok(tampered_r) => {
                        let tampered = Ciphertext::from_parts(
                            tampered_r,
                            ct.u().to_vec(),
                            ct.v().to_vec(),
                            &params,
                        )
                        .unwrap();
                        match decrypt(&cred, &tampered, &params) {
                            Err(Error::DecryptionFailed) => bottoms += 1,
                            other => panic!("tampered R accepted: {other:?}"),
                        }
                    }
                }
            }
            1 => {
                let mut u = ct.u().to_vec();
                let bit = rng.gen_range(0..u.len() * 8);
                u[bit / 8] ^= 1 << (bit % 8);
                let tampered =
                    Ciphertext::from_parts(*ct.r_point(), u, ct.v().to_vec(), &params).unwrap();
                match decrypt(&cred, &tampered, &params) {
                    Err(Error::DecryptionFailed) => bottoms += 1,
                    other => panic!("tampered u accepted: {other:?}"),
                }
            }
            _ => {
                let mut v = ct.v().to_vec();
                let bit = rng.gen_range(0..v.len() * 8);
                v[bit / 8] ^= 1 << (bit % 8);
                let tampered =
                    Ciphertext::from_parts(*ct.r_point(), ct.u().to_vec(), v, &params).unwrap();
                match decrypt(&cred, &tampered, &params) {
                    Err(Error::DecryptionFailed) => bottoms += 1,
                    other => panic!("tampered v accepted: {other:?}"),
                }
            }
        }
    }
    assert_eq!(bottoms + invalid_points, 1000);
    println!(
        "criterion 6: PASS - 1000 single-bit tampers across R/u/v: {bottoms} decryption \
         failures, {invalid_points} rejected as invalid R encodings, 0 acceptances"
    );
}

/// Criterion 7: the binding check rejects every substituted commitment:
/// exhaustively over the mock group (all q-1 candidates) and for 100 random
/// substitutions on the production profile.
#[test]
fn criterion_7_binding_rejection() {
    // exhaustive sweep over the mock group
    let params = mock_params(16, 4);
    let mut rng = ChaCha20Rng::seed_from_u64(1007);
    let authority = KeyAuthority::new(params.clone(), &mut rng);
    let user = user_setup(&params, &mut rng);
    let partial = authority
        .part_key_gen("bind-target", user.commitment(), &mut rng)
        .unwrap();
    let profile = params.profile();
    let honest = user.commitment().mock_value();

    let mut rejected = 0u32;
    for candidate in 0..certfree::group::MOCK_GROUP_ORDER as u16 {
        if candidate == honest {
            continue;
        }
        let forged = UserSecret::from_parts(
            *user.alpha(),
            profile.decode_point(&candidate.to_le_bytes()).unwrap(),
        );
        match user_key_gen(
            "bind-target",
            &forged,
            partial.clone(),
            authority.master_public(),
            &params,
        ) {
            Err(Error::BindingCheckFailed) => rejected += 1,
            other => panic!("substituted commitment {candidate} accepted: {other:?}"),
        }
    }
    assert_eq!(rejected, certfree::group::MOCK_GROUP_ORDER - 1);

    // 100 random substitutions on the production profile
    let params = SystemParams::production_default();
    let mut rng = ChaCha20Rng::seed_from_u64(1008);
    let authority = KeyAuthority::new(params.clone(), &mut rng);
    let user = user_setup(&params, &mut rng);
    let partial = authority
        .part_key_gen("bind-prod", user.commitment(), &mut rng)
        .unwrap();
    let profile = params.profile();
    for _ in 0..100 {
        let forged_point = profile.mul_base(&profile.scalar_random(&mut rng));
        if &forged_point == user.commitment() {
            continue;
        }
        let forged = UserSecret::from_parts(*user.alpha(), forged_point);
        match user_key_gen(
            "bind-prod",
            &forged,
            partial.clone(),
            authority.master_public(),
            &params,
        ) {
            Err(Error::BindingCheckFailed) => {}
            other => panic!("substituted commitment accepted: {other:?}"),
        }
    }

    println!(
        "criterion 7: PASS - binding check rejected all {} substituted commitments on the \
         mock group and 100 random substitutions on the production profile",
        certfree::group::MOCK_GROUP_ORDER - 1
    );
}

/// Criterion 8: 100 seeded full-protocol trials on the mock profile match an
/// independent modular-arithmetic oracle scalar-for-scalar.
#[test]
fn criterion_8_mock_oracle_equivalence() {
    let t = 8u32;
    let k = 3u32;
    let n_bytes = 16usize;
    let params = mock_params(t, k);

    let mut compared = 0usize;
    for seed in 0..100u64 {
        // identical entropy streams for the library and the oracle
        let mut lib_rng = ChaCha20Rng::seed_from_u64(9000 + seed);
        let mut orc_rng = ChaCha20Rng::seed_from_u64(9000 + seed);

        let id_a = format!("alice-{seed}");
        let id_b = format!("bob-{seed}");
        let msg = format!("trial {seed} payload").into_bytes();
        let msg2 = format!("trial {seed} signed").into_bytes();

        // setup
        let authority = KeyAuthority::new(params.clone(), &mut lib_rng);
        let orc_setup = oracle::setup(t, &mut orc_rng);
        let lib_v: Vec<u64> = authority
            .master_secret()
            .scalars()
            .iter()
            .map(|s| s.mock_value() as u64)
            .collect();
        assert_eq!(lib_v, orc_setup.v, "master secrets diverge at seed {seed}");
        let lib_big_v: Vec<u64> = authority
            .master_public()
            .points()
            .iter()
            .map(|p| p.mock_value() as u64)
            .collect();
        assert_eq!(lib_big_v, orc_setup.big_v);

        // identity-based extraction for alice
        let alice =
            UserCredential::from_identity_based(&id_a, authority.extract(&id_a, &mut lib_rng).unwrap())
                .unwrap();
        let (orc_x_a, orc_q_a) = oracle::extract(id_a.as_bytes(), &orc_setup, t, k, &mut orc_rng);
        assert_eq!(alice.secret_scalar().mock_value() as u64, orc_x_a);
        assert_eq!(alice.q_point().mock_value() as u64, orc_q_a);

        // certificateless flow for bob
        let bob_user = user_setup(&params, &mut lib_rng);
        let bob_partial = authority
            .part_key_gen(&id_b, bob_user.commitment(), &mut lib_rng)
            .unwrap();
        let bob = user_key_gen(
            &id_b,
            &bob_user,
            bob_partial.clone(),
            authority.master_public(),
            &params,
        )
        .unwrap();
        let (orc_alpha, orc_u, orc_w, orc_q_b, orc_x_b) =
            oracle::certificateless_keygen(id_b.as_bytes(), &orc_setup, t, k, &mut orc_rng);
        assert_eq!(bob_user.commitment().mock_value() as u64, orc_u);
        assert_eq!(bob_user.alpha().mock_value() as u64, orc_alpha);
        assert_eq!(bob_partial.secret().mock_value() as u64, orc_w);
        assert_eq!(bob.q_point().mock_value() as u64, orc_q_b);
        assert_eq!(bob.secret_scalar().mock_value() as u64, orc_x_b);

        // encryption to alice
        let ct = encrypt(
            &msg,
            &id_a,
            alice.q_point(),
            authority.master_public(),
            &params,
            &mut lib_rng,
        );
        let orc_ct = oracle::encrypt(
            &msg,
            id_a.as_bytes(),
            orc_q_a,
            &orc_setup,
            t,
            k,
            n_bytes,
            &mut orc_rng,
        );
        assert_eq!(ct.r_point().mock_value() as u64, orc_ct.r_point);
        assert_eq!(ct.u(), &orc_ct.u[..]);
        assert_eq!(ct.v(), &orc_ct.v[..]);
        assert_eq!(decrypt(&alice, &ct, &params).unwrap(), msg);
        assert_eq!(oracle::decrypt(orc_x_a, &orc_ct, n_bytes).unwrap(), msg);

        // signature by bob
        let sig = sign(&msg2, &bob, &params, &mut lib_rng);
        let orc_sig = oracle::sign(&msg2, orc_x_b, &mut orc_rng);
        assert_eq!(sig.s().mock_value() as u64, orc_sig.0);
        assert_eq!(sig.e().mock_value() as u64, orc_sig.1);
        assert!(verify(
            &msg2,
            &id_b,
            bob.q_point(),
            authority.master_public(),
            &params,
            &sig
        ));
        assert!(oracle::verify(
            &msg2,
            id_b.as_bytes(),
            orc_q_b,
            &orc_setup,
            t,
            k,
            orc_sig
        ));

        // key exchange, alice initiating
        let eph_a = kex_init(&params, &mut lib_rng);
        let eph_b = kex_init(&params, &mut lib_rng);
        let orc_kex_a = oracle::kex_init(&mut orc_rng);
        let orc_kex_b = oracle::kex_init(&mut orc_rng);
        assert_eq!(eph_a.commitment().mock_value() as u64, orc_kex_a.m_point);
        assert_eq!(eph_b.commitment().mock_value() as u64, orc_kex_b.m_point);

        let msg_a = eph_a.message(&alice);
        let msg_b = eph_b.message(&bob);
        let key_a = kex_finalize(
            &alice,
            eph_a,
            &id_b,
            &msg_b,
            authority.master_public(),
            &params,
            KexRole::Initiator,
        );
        let key_b = kex_finalize(
            &bob,
            eph_b,
            &id_a,
            &msg_a,
            authority.master_public(),
            &params,
            KexRole::Responder,
        );
        let orc_k_a = oracle::kex_finalize(
            orc_x_a,
            &orc_kex_a,
            id_b.as_bytes(),
            orc_kex_b.m_point,
            orc_q_b,
            &orc_setup,
            t,
            k,
        );
        let orc_k_b = oracle::kex_finalize(
            orc_x_b,
            &orc_kex_b,
            id_a.as_bytes(),
            orc_kex_a.m_point,
            orc_q_a,
            &orc_setup,
            t,
            k,
        );
        assert_eq!(orc_k_a, orc_k_b);
        assert_eq!(key_a.point().mock_value() as u64, orc_k_a);
        assert_eq!(key_b.point().mock_value() as u64, orc_k_b);

        let orc_session = oracle::session_key(
            orc_k_a,
            id_a.as_bytes(),
            orc_kex_a.m_point,
            orc_q_a,
            id_b.as_bytes(),
            orc_kex_b.m_point,
            orc_q_b,
        );
        assert_eq!(key_a.key(), &orc_session);
        assert_eq!(key_b.key(), &orc_session);

        compared += 1;
    }
    assert_eq!(compared, 100);
    println!(
        "criterion 8: PASS - 100 seeded full-protocol trials match the independent \
         modular-arithmetic oracle scalar-for-scalar (setup, both key flows, enc/dec, \
         sign/verify, kex, session keys)"
    );
}

/// Criterion 9: desk-scale performance sanity on the production profile:
/// median encrypt+decrypt under 10 ms and median sign+verify under 5 ms.
#[test]
fn criterion_9_performance_sanity() {
    let params = SystemParams::production_default();
    let mut rng = ChaCha20Rng::seed_from_u64(1009);
    let authority = KeyAuthority::new(params.clone(), &mut rng);
    let cred = idb_credential(&authority, "perf-alice", &mut rng);
    let msg = vec![0x42u8; 64];

    let median_of = |samples: &mut Vec<f64>| -> f64 {
        samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
        samples[samples.len() / 2]
    };

    let mut enc_dec = Vec::with_capacity(100);
    for _ in 0..100 {
        let start = Instant::now();
        let ct = encrypt(
            &msg,
            cred.id(),
            cred.q_point(),
            authority.master_public(),
            &params,
            &mut rng,
        );
        let out = decrypt(&cred, &ct, &params).unwrap();
        enc_dec.push(start.elapsed().as_secs_f64() * 1e3);
        assert_eq!(out, msg);
    }
    let enc_dec_median = median_of(&mut enc_dec);
    assert!(
        enc_dec_median < 10.0,
        "enc+dec median {enc_dec_median:.3} ms exceeds 10 ms"
    );

    let mut sign_verify = Vec::with_capacity(100);
    for _ in 0..100 {
        let start = Instant::now();
        let sig = sign(&msg, &cred, &params, &mut rng);
        let ok = verify(
            &msg,
            cred.id(),
            cred.q_point(),
            authority.master_public(),
            &params,
            &sig,
        );
        sign_verify.push(start.elapsed().as_secs_f64() * 1e3);
        assert!(ok);
    }
    let sign_verify_median = median_of(&mut sign_verify);
    assert!(
        sign_verify_median < 5.0,
        "sign+verify median {sign_verify_median:.3} ms exceeds 5 ms"
    );

    println!(
        "criterion 9: PASS - enc+dec median {enc_dec_median:.3} ms (< 10 ms), \
         sign+verify median {sign_verify_median:.3} ms (< 5 ms)"
    );
}
