//! Mutually compatible identity-based and certificateless cryptography over
//! a prime-order elliptic-curve group: public-key encryption with a
//! re-encryption soundness check, Schnorr-style signatures, and a
//! two-message authenticated key exchange, all without certificates.
//!
//! # The two domains
//!
//! * **Identity-based (IDB)**: a fully trusted authority (the PKG) derives
//!   each user's private key from the identity string. See
//!   [`KeyAuthority::extract`].
//! * **Certificateless (CL)**: the user contributes their own secret `α`
//!   with commitment `U`; the authority (the KGC) folds `U` into the key it
//!   issues, and the user finalizes the key locally after checking that the
//!   issued key binds to `U`. See [`user_setup`], [`KeyAuthority::part_key_gen`],
//!   and [`user_key_gen`]. Replacing `U` after the fact falsifies the key and
//!   is rejected by the binding check.
//!
//! Both flows end in the same [`UserCredential`] satisfying `x·P = Y + Q`,
//! where `Y` is the sum of the `k` master-key components selected by
//! `H1(ID, Q)`. Because the online operations only use that one equation,
//! encryption, signatures, and key exchange are byte-identical across the
//! domains: any pairing of IDB and CL users interoperates with no extra
//! cost.
//!
//! # Quick start
//!
//! ```
//! use certfree::{
//!     decrypt, encrypt, KeyAuthority, SystemParams, UserCredential,
//! };
//! use rand::rngs::OsRng;
//!
//! let params = SystemParams::production_default(); // t=1024, k=18, n=128
//! let authority = KeyAuthority::new(params.clone(), &mut OsRng);
//!
//! let alice = UserCredential::from_identity_based(
//!     "alice@example",
//!     authority.extract("alice@example", &mut OsRng).unwrap(),
//! )
//! .unwrap();
//!
//! let ct = encrypt(
//!     b"hello",
//!     alice.id(),
//!     alice.q_point(),
//!     authority.master_public(),
//!     &params,
//!     &mut OsRng,
//! );
//! assert_eq!(decrypt(&alice, &ct, &params).unwrap(), b"hello");
//! ```
//!
//! The `examples/` directory walks through every capability: the two
//! end-to-end flows, cross-domain messaging, key exchange, wire formats,
//! the parameter estimator, operation counting, and the benchmark harness.
//!
//! # Group backends
//!
//! All arithmetic happens behind [`GroupProfile`]: ristretto255 in
//! production (32-byte encodings, ~128-bit security) and a test-only mock
//! group (integers mod 7919) whose discrete logarithm is brute-forceable,
//! which is what makes the exhaustive protocol tests possible. Constant-time
//! behavior is whatever the backend provides; this crate does not harden
//! beyond it.
//!
//! # Parameters
//!
//! The master key has `t` components of which each identity uses `k`;
//! forging a key requires hitting a chosen index multiset, which
//! [`security_level`] scores as `k·log2(t) - log2(k!) - log2(budget)` bits.
//! The reference configuration `(t = 1024, k = 18)` gives ≈127.5 bits of
//! index entropy and a 32 KiB master public key; `(t = 256, k = 32)` trades
//! a few additions per operation for a 8 KiB master public key.

pub mod authority;
pub mod bench;
pub mod crypto;
pub mod error;
pub mod group;
pub mod hash;
pub mod user;
pub mod wire;

#[cfg(test)]
pub(crate) mod testutil;

pub use authority::{
    security_level, setup, Domain, KeyAuthority, MasterPublicKey, MasterSecretKey, PartialKey,
    SystemParams, H1_QUERY_BUDGET,
};
pub use bench::{run_bench, BenchReport, BenchRow};
pub use crypto::{
    decrypt, encrypt, kdf, kex_finalize, kex_init, sign, verify, Ciphertext, KexEphemeral,
    KexMessage, KexRole, SessionKey, Signature,
};
pub use error::{Error, Result};
pub use group::{GroupId, GroupPoint, GroupProfile, OpCounter, OpCounts, Scalar};
pub use hash::{h1_indexes, h2, h3, h4_expand, h5, HashConfig, IndexSet};
pub use user::{
    derive_public_point, user_key_gen, user_setup, verify_credential, UserCredential, UserSecret,
};
pub use wire::{
    from_bytes, peek_kind, read_system_params, size_report, to_bytes, write_system_params, Kind,
    SizeReport, WireArtifact,
};
