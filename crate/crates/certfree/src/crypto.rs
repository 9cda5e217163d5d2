//! The domain-agnostic online operations: public-key encryption with the
//! re-encryption (Fujisaki-Okamoto style) check, Schnorr-style signatures,
//! and the two-message key exchange.
//!
//! Every operation takes a recipient or signer as `(identity, Q)` against the
//! master public key, or a [`UserCredential`] for the private side. Because
//! identity-based and certificateless credentials satisfy the same equation
//! `x·P = Y + Q`, these functions are identical across the two domains and
//! any pairing of them interoperates.
//!
//! Encryption: `σ ←$ {0,1}^n`, `r = H2(σ, m)`, `R = rP`,
//! `u = H3(r(Y+Q)) ⊕ σ`, `v = H4(σ) ⊕ m` (with `H4` as a keystream so `m`
//! may have any length). Decryption recovers `σ' = H3(xR) ⊕ u`, rebuilds
//! `m'` and `r'`, and releases `m'` only if `r'P = R`; everything else is a
//! decryption failure carrying no partial plaintext.
//!
//! Signatures: `r ←$ Z_q`, `R = rP`, `e = H5(m, R)`, `s = r - e·x`;
//! verification recomputes `R' = sP + e(Y+Q)` and accepts iff `e = H5(m, R')`.
//!
//! Key exchange: each party sends `(M = zP, Q)`; the shared point is
//! `K = x(Y_peer + Q_peer) + z·M_peer = (x_a·x_b + z_a·z_b)P`. The raw point
//! is additionally run through a labeled KDF bound to the session transcript,
//! which is an extension over the bare point output; the transcript is
//! ordered initiator-first so both sides derive the same 32-byte key.

use rand_core::{CryptoRng, RngCore};

use crate::authority::{MasterPublicKey, SystemParams};
use crate::error::{Error, Result};
use crate::group::{GroupPoint, Scalar};
use crate::hash::{h2, h3, h4_expand, h5};
use crate::user::{derive_public_point, UserCredential};

use sha3::digest::{ExtendableOutput, Update, XofReader};
use sha3::Shake256;

const LABEL_KDF: &[u8] = b"CFC-KDF";
const LABEL_TRANSCRIPT: &[u8] = b"CFC-KEX-TRANSCRIPT";

/// Ciphertext `(R, u, v)`: the nonce commitment, the `n`-bit masked seed,
/// and the masked message of exactly the message's length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ciphertext {
    r_point: GroupPoint,
    u: Vec<u8>,
    v: Vec<u8>,
}

impl Ciphertext {
    /// Assemble a ciphertext from parts, enforcing `|u| = n`.
    pub fn from_parts(
        r_point: GroupPoint,
        u: Vec<u8>,
        v: Vec<u8>,
        params: &SystemParams,
    ) -> Result<Self> {
        if u.len() != params.hash_config().n_bytes() {
            return Err(Error::LengthMismatch {
                expected: params.hash_config().n_bytes(),
                got: u.len(),
            });
        }
        Ok(Ciphertext { r_point, u, v })
    }

    pub fn r_point(&self) -> &GroupPoint {
        &self.r_point
    }

    pub fn u(&self) -> &[u8] {
        &self.u
    }

    pub fn v(&self) -> &[u8] {
        &self.v
    }

    /// Message length this ciphertext decrypts to.
    pub fn message_len(&self) -> usize {
        self.v.len()
    }
}

/// Signature `(s, e)`: two canonical scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    s: Scalar,
    e: Scalar,
}

impl Signature {
    pub fn from_parts(s: Scalar, e: Scalar) -> Self {
        Signature { s, e }
    }

    pub fn s(&self) -> &Scalar {
        &self.s
    }

    pub fn e(&self) -> &Scalar {
        &self.e
    }
}

/// One party's ephemeral key-exchange state: the secret `z` and its
/// commitment `M = zP`. Consumed by [`kex_finalize`] so a nonce is never
/// reused across sessions.
pub struct KexEphemeral {
    z: Scalar,
    commitment: GroupPoint,
}

impl std::fmt::Debug for KexEphemeral {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KexEphemeral")
            .field("commitment", &self.commitment)
            .finish_non_exhaustive()
    }
}

impl KexEphemeral {
    /// Reassemble an ephemeral from its stored parts (for example, state
    /// persisted between the init and finalize steps of a file-based flow).
    pub fn from_parts(z: Scalar, commitment: GroupPoint) -> Self {
        KexEphemeral { z, commitment }
    }

    pub fn commitment(&self) -> &GroupPoint {
        &self.commitment
    }

    /// The ephemeral secret `z`. Needed by the wire layer.
    pub fn z(&self) -> &Scalar {
        &self.z
    }

    /// The `(M, Q)` message this party sends, pairing the fresh commitment
    /// with the credential's public point.
    pub fn message(&self, cred: &UserCredential) -> KexMessage {
        KexMessage {
            commitment: self.commitment,
            q_point: *cred.q_point(),
        }
    }
}

/// The `(M, Q)` pair exchanged by the two parties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KexMessage {
    commitment: GroupPoint,
    q_point: GroupPoint,
}

impl KexMessage {
    pub fn from_parts(commitment: GroupPoint, q_point: GroupPoint) -> Self {
        KexMessage {
            commitment,
            q_point,
        }
    }

    pub fn commitment(&self) -> &GroupPoint {
        &self.commitment
    }

    pub fn q_point(&self) -> &GroupPoint {
        &self.q_point
    }
}

/// Which side of the exchange this party is; only orders the transcript.
/// The shared point itself is symmetric by algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KexRole {
    Initiator,
    Responder,
}

/// The agreed key: the raw shared point and the 32-byte transcript-bound key
/// derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SessionKey {
    point: GroupPoint,
    key: [u8; 32],
}

impl SessionKey {
    pub fn point(&self) -> &GroupPoint {
        &self.point
    }

    pub fn key(&self) -> &[u8; 32] {
        &self.key
    }
}

/// Encrypt `msg` to the holder of `(recipient_id, Q)`. Any message length is
/// accepted, including empty; the ciphertext is `|point| + n/8 + |msg|`
/// bytes on the wire.
pub fn encrypt(
    msg: &[u8],
    recipient_id: &str,
    recipient_q: &GroupPoint,
    mpk: &MasterPublicKey,
    params: &SystemParams,
    rng: &mut (impl RngCore + CryptoRng),
) -> Ciphertext {
    let profile = params.profile();
    let cfg = params.hash_config();

    let mut sigma = vec![0u8; cfg.n_bytes()];
    rng.fill_bytes(&mut sigma);

    let r = h2(&sigma, msg, profile, cfg);
    let r_point = profile.mul_base(&r);

    let y = derive_public_point(recipient_id, recipient_q, mpk, params);
    let target = profile.add(&y, recipient_q);
    let shared = profile.mul(&r, &target);

    let mut u = h3(&shared, profile, cfg);
    for (u_byte, s_byte) in u.iter_mut().zip(&sigma) {
        *u_byte ^= s_byte;
    }

    let mut v = h4_expand(&sigma, msg.len(), cfg);
    for (v_byte, m_byte) in v.iter_mut().zip(msg) {
        *v_byte ^= m_byte;
    }

    Ciphertext { r_point, u, v }
}

/// Decrypt a ciphertext with a credential. Returns the plaintext only when
/// the re-encryption check `r'P = R` holds; any tampering surfaces as
/// [`Error::DecryptionFailed`] with no partial plaintext attached.
pub fn decrypt(
    cred: &UserCredential,
    ciphertext: &Ciphertext,
    params: &SystemParams,
) -> Result<Vec<u8>> {
    let profile = params.profile();
    let cfg = params.hash_config();

    let shared = profile.mul(cred.secret_scalar(), ciphertext.r_point());
    let mut sigma = h3(&shared, profile, cfg);
    for (s_byte, u_byte) in sigma.iter_mut().zip(&ciphertext.u) {
        *s_byte ^= u_byte;
    }

    let mut msg = h4_expand(&sigma, ciphertext.v.len(), cfg);
    for (m_byte, v_byte) in msg.iter_mut().zip(&ciphertext.v) {
        *m_byte ^= v_byte;
    }

    let r = h2(&sigma, &msg, profile, cfg);
    if profile.mul_base(&r) != *ciphertext.r_point() {
        return Err(Error::DecryptionFailed);
    }
    Ok(msg)
}

/// Sign a message. One fixed-base multiplication.
pub fn sign(
    msg: &[u8],
    cred: &UserCredential,
    params: &SystemParams,
    rng: &mut (impl RngCore + CryptoRng),
) -> Signature {
    let profile = params.profile();
    let r = profile.scalar_random(rng);
    let r_point = profile.mul_base(&r);
    let e = h5(msg, &r_point, profile);
    let s = r - e * *cred.secret_scalar();
    Signature { s, e }
}

/// Verify a signature against `(signer_id, Q)` and the master public key.
pub fn verify(
    msg: &[u8],
    signer_id: &str,
    signer_q: &GroupPoint,
    mpk: &MasterPublicKey,
    params: &SystemParams,
    sig: &Signature,
) -> bool {
    let profile = params.profile();
    let y = derive_public_point(signer_id, signer_q, mpk, params);
    let target = profile.add(&y, signer_q);
    let r_point = profile.add(&profile.mul_base(&sig.s), &profile.mul(&sig.e, &target));
    let e = h5(msg, &r_point, profile);
    e == sig.e
}

/// Start a key exchange: a fresh `(z, M = zP)`.
pub fn kex_init(params: &SystemParams, rng: &mut (impl RngCore + CryptoRng)) -> KexEphemeral {
    let profile = params.profile();
    let z = profile.scalar_random(rng);
    let commitment = profile.mul_base(&z);
    KexEphemeral { z, commitment }
}

fn append_party(transcript: &mut Vec<u8>, id: &str, msg: &KexMessage, params: &SystemParams) {
    let profile = params.profile();
    transcript.extend_from_slice(&(id.len() as u64).to_le_bytes());
    transcript.extend_from_slice(id.as_bytes());
    transcript.extend_from_slice(&profile.encode_point(&msg.commitment));
    transcript.extend_from_slice(&profile.encode_point(&msg.q_point));
}

/// Complete a key exchange. Computes
/// `K = x(Y_peer + Q_peer) + z·M_peer` and derives the session key over the
/// initiator-first transcript of both `(M, Q)` messages and identities.
/// Consumes the ephemeral state so `z` cannot be reused.
pub fn kex_finalize(
    cred: &UserCredential,
    ephemeral: KexEphemeral,
    peer_id: &str,
    peer_msg: &KexMessage,
    mpk: &MasterPublicKey,
    params: &SystemParams,
    role: KexRole,
) -> SessionKey {
    let profile = params.profile();

    let y_peer = derive_public_point(peer_id, &peer_msg.q_point, mpk, params);
    let target = profile.add(&y_peer, &peer_msg.q_point);
    let static_part = profile.mul(cred.secret_scalar(), &target);
    let ephemeral_part = profile.mul(ephemeral.z(), &peer_msg.commitment);
    let point = profile.add(&static_part, &ephemeral_part);

    let own_msg = ephemeral.message(cred);
    let mut transcript = Vec::new();
    match role {
        KexRole::Initiator => {
            append_party(&mut transcript, cred.id(), &own_msg, params);
            append_party(&mut transcript, peer_id, peer_msg, params);
        }
        KexRole::Responder => {
            append_party(&mut transcript, peer_id, peer_msg, params);
            append_party(&mut transcript, cred.id(), &own_msg, params);
        }
    }

    let key = kdf(&point, &transcript, params);
    SessionKey { point, key }
}

/// Derive 32 key bytes from a shared point and a transcript: XOF over
/// `label ‖ encode(K) ‖ H(transcript)`.
pub fn kdf(k_point: &GroupPoint, transcript: &[u8], params: &SystemParams) -> [u8; 32] {
    let mut th = Shake256::default();
    th.update(LABEL_TRANSCRIPT);
    th.update(transcript);
    let mut transcript_digest = [0u8; 32];
    th.finalize_xof().read(&mut transcript_digest);

    let mut h = Shake256::default();
    h.update(LABEL_KDF);
    h.update(&params.profile().encode_point(k_point));
    h.update(&transcript_digest);
    let mut key = [0u8; 32];
    h.finalize_xof().read(&mut key);
    key
}
