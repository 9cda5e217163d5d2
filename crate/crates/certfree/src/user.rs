//! User-side key material: certificateless user setup, partial-key
//! finalization with the binding check, public-point derivation, and key
//! self-verification.
//!
//! Both domains end in the same [`UserCredential`] shape, satisfying one
//! verification equation:
//!
//! ```text
//! x·P = Y + Q      where Y = Σ V_j over H1(ID, Q)
//! ```
//!
//! so everything downstream (encryption, signatures, key exchange) is
//! oblivious to which domain issued a credential. An identity-based
//! credential wraps the authority's extraction output directly; a
//! certificateless credential is finalized here by adding the user secret
//! `α` to the partial key `w` — but only after checking the binding equation
//! `Q - U = wP - Y`, which fails for any commitment other than the one the
//! authority folded into `Q`.

use rand_core::{CryptoRng, RngCore};

use crate::authority::{Domain, MasterPublicKey, PartialKey, SystemParams};
use crate::error::{Error, Result};
use crate::group::{GroupPoint, Scalar};
use crate::hash::h1_indexes;

/// A certificateless user's long-term secret `α` and its commitment `U = αP`.
pub struct UserSecret {
    alpha: Scalar,
    commitment: GroupPoint,
}

impl std::fmt::Debug for UserSecret {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UserSecret")
            .field("commitment", &self.commitment)
            .finish_non_exhaustive()
    }
}

impl UserSecret {
    /// Reassemble a user secret from its stored parts. No `U = αP` check is
    /// performed here; load through the wire layer for validated decoding.
    pub fn from_parts(alpha: Scalar, commitment: GroupPoint) -> Self {
        UserSecret { alpha, commitment }
    }

    /// The commitment `U` the user registers with the authority.
    pub fn commitment(&self) -> &GroupPoint {
        &self.commitment
    }

    /// The user secret `α`. Needed by the wire layer.
    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }
}

/// A complete, usable private credential for one identity.
///
/// Only `x` is retained: the certificateless intermediate values `w` and `α`
/// are not needed by any online operation and are dropped at finalization.
#[derive(Clone)]
pub struct UserCredential {
    id: String,
    q_point: GroupPoint,
    x: Scalar,
    domain: Domain,
}

impl std::fmt::Debug for UserCredential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UserCredential")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("q_point", &self.q_point)
            .finish_non_exhaustive()
    }
}

impl UserCredential {
    pub(crate) fn from_parts(id: String, q_point: GroupPoint, x: Scalar, domain: Domain) -> Self {
        UserCredential {
            id,
            q_point,
            x,
            domain,
        }
    }

    /// Wrap an identity-based extraction output as a credential.
    pub fn from_identity_based(id: &str, key: PartialKey) -> Result<Self> {
        if key.domain() != Domain::IdentityBased {
            return Err(Error::InvalidParams(
                "expected an identity-based extraction output".into(),
            ));
        }
        Ok(UserCredential {
            id: id.to_owned(),
            q_point: *key.q_point(),
            x: *key.secret(),
            domain: Domain::IdentityBased,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// The public commitment `Q` that accompanies the identity.
    pub fn q_point(&self) -> &GroupPoint {
        &self.q_point
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The private scalar `x`. Needed by the online operations and the wire
    /// layer.
    pub fn secret_scalar(&self) -> &Scalar {
        &self.x
    }
}

/// Certificateless user setup: a fresh `(α, U = αP)` pair.
pub fn user_setup(params: &SystemParams, rng: &mut (impl RngCore + CryptoRng)) -> UserSecret {
    let profile = params.profile();
    let alpha = profile.scalar_random(rng);
    let commitment = profile.mul_base(&alpha);
    UserSecret { alpha, commitment }
}

/// Derive the public point `Y = Σ V_j` for `(ID, Q)` from the master public
/// key. This is the value every sender and verifier computes; together with
/// `Q` it plays the role of the user's public key.
pub fn derive_public_point(
    id: &str,
    q_point: &GroupPoint,
    mpk: &MasterPublicKey,
    params: &SystemParams,
) -> GroupPoint {
    let profile = params.profile();
    let indexes = h1_indexes(id.as_bytes(), q_point, profile, params.hash_config());
    profile.multi_add(indexes.iter().map(|j| *mpk.component(j)))
}

/// Finalize a certificateless credential.
///
/// Accepts if and only if `Q - U = wP - Y`; a partial key generated for any
/// other commitment fails the equation, so a key-replacement attempt by the
/// authority or a man-in-the-middle is rejected here rather than producing a
/// silently broken key. On acceptance the private key is `x = w + α`.
pub fn user_key_gen(
    id: &str,
    user: &UserSecret,
    partial: PartialKey,
    mpk: &MasterPublicKey,
    params: &SystemParams,
) -> Result<UserCredential> {
    if partial.domain() != Domain::Certificateless {
        return Err(Error::InvalidParams(
            "expected a certificateless partial key".into(),
        ));
    }
    let profile = params.profile();
    let y = derive_public_point(id, partial.q_point(), mpk, params);
    let w_from_commitments = profile.sub(partial.q_point(), user.commitment());
    let w_from_key = profile.sub(&profile.mul_base(partial.secret()), &y);
    if w_from_commitments != w_from_key {
        return Err(Error::BindingCheckFailed);
    }
    let x = *partial.secret() + *user.alpha();
    Ok(UserCredential {
        id: id.to_owned(),
        q_point: *partial.q_point(),
        x,
        domain: Domain::Certificateless,
    })
}

/// Re-check the credential invariant `x·P = Y + Q`.
pub fn verify_credential(
    cred: &UserCredential,
    mpk: &MasterPublicKey,
    params: &SystemParams,
) -> bool {
    let profile = params.profile();
    let y = derive_public_point(cred.id(), cred.q_point(), mpk, params);
    profile.mul_base(cred.secret_scalar()) == profile.add(&y, cred.q_point())
}
