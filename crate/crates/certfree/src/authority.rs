//! The trusted-authority side: system setup, identity-based key extraction,
//! certificateless partial-key generation, and the `(t, k)` security
//! estimator.
//!
//! One authority serves both roles. In the identity-based domain it acts as
//! the PKG and the extracted `(x, Q)` pair is the user's complete key. In the
//! certificateless domain it acts as the KGC: the user supplies a commitment
//! `U = αP`, the authority folds it into `Q = U + W`, and the returned
//! `(w, Q)` only becomes a usable key once the user adds `α` after checking
//! the binding equation.
//!
//! The master secret is a vector of `t` scalars; each issued key masks the
//! sum of the `k` components selected by `H1(ID, Q)` with a fresh nonce `β`,
//! so issued keys never expose the components themselves.

use rand_core::{CryptoRng, RngCore};

use crate::error::{Error, Result};
use crate::group::{GroupProfile, GroupPoint, OpCounter, Scalar};
use crate::hash::{h1_indexes, HashConfig};
use crate::user::derive_public_point;

/// Standard random-oracle adversary budget used when validating production
/// configurations: `2^64` H1 queries.
pub const H1_QUERY_BUDGET: f64 = 18_446_744_073_709_551_616.0;

/// Residual security (in bits) a production configuration must retain after
/// granting the adversary the full [`H1_QUERY_BUDGET`]. 63 residual bits
/// correspond to ~127 bits of raw index-collision entropy, which is where
/// the reference configuration `(t = 1024, k = 18)` sits for a nominal
/// 128-bit target.
pub const MIN_RESIDUAL_SECURITY_BITS: f64 = 63.0;

/// Bits of security against index-collision forgery for a `(t, k)` choice:
/// `k·log2(t) - log2(k!) - log2(q_h1_budget)`.
///
/// `q_h1_budget` is the number of H1 queries granted to the adversary; pass
/// `1.0` for the raw entropy of the index selection. `log2(k!)` is computed
/// by exact summation, which stays well within `f64` precision for any
/// plausible `k`.
pub fn security_level(t: u32, k: u32, q_h1_budget: f64) -> f64 {
    assert!(t.is_power_of_two() && t >= 2, "t must be a power of two");
    assert!(k >= 1 && k <= t, "k must satisfy 1 <= k <= t");
    assert!(q_h1_budget >= 1.0, "query budget must be at least 1");
    let gamma = (k * t.trailing_zeros()) as f64;
    gamma - log2_factorial(k) - q_h1_budget.log2()
}

fn log2_factorial(k: u32) -> f64 {
    (2..=k as u64).map(|i| (i as f64).log2()).sum()
}

/// Complete system configuration: the group profile and the hash-suite
/// geometry `(t, k, n)`.
///
/// Production configurations are gated on `t >= 4k` and on the estimator
/// retaining [`MIN_RESIDUAL_SECURITY_BITS`] under the standard query budget.
/// Mock configurations skip both gates: the mock group has no security to
/// protect and its purpose is exhaustive testing at tiny parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemParams {
    profile: GroupProfile,
    hash: HashConfig,
}

impl SystemParams {
    pub fn new(profile: GroupProfile, t: u32, k: u32, n_bits: u16) -> Result<Self> {
        let hash = HashConfig::new(t, k, n_bits)?;
        if profile.id() == crate::group::GroupId::Production {
            if t < 4 * k {
                return Err(Error::InvalidParams(format!(
                    "t must be at least 4k on the production profile (t={t}, k={k})"
                )));
            }
            let residual = security_level(t, k, H1_QUERY_BUDGET);
            if residual < MIN_RESIDUAL_SECURITY_BITS {
                return Err(Error::InvalidParams(format!(
                    "(t={t}, k={k}) retains {residual:.2} bits against 2^64 H1 queries; \
                     need at least {MIN_RESIDUAL_SECURITY_BITS:.0}"
                )));
            }
        }
        Ok(SystemParams { profile, hash })
    }

    /// Reference production configuration: `t = 1024`, `k = 18`, `n = 128`.
    pub fn production_default() -> Self {
        SystemParams::new(GroupProfile::production(), 1024, 18, 128)
            .expect("reference configuration is valid")
    }

    pub fn profile(&self) -> &GroupProfile {
        &self.profile
    }

    pub fn hash_config(&self) -> &HashConfig {
        &self.hash
    }

    pub fn t(&self) -> u32 {
        self.hash.t()
    }

    pub fn k(&self) -> u32 {
        self.hash.k()
    }

    pub fn n_bits(&self) -> u16 {
        self.hash.n_bits()
    }

    /// Same configuration with an instrumented profile; point operations in
    /// anything built from the returned params are tallied in the counter.
    pub fn instrumented(&self) -> (Self, std::sync::Arc<OpCounter>) {
        let (profile, counter) = self.profile.instrumented();
        (
            SystemParams {
                profile,
                hash: self.hash,
            },
            counter,
        )
    }
}

/// The master secret key: `t` scalars `(v_1, .., v_t)`.
///
/// Deliberately opaque in `Debug` output; only the wire layer reads the
/// components back out.
pub struct MasterSecretKey {
    v: Vec<Scalar>,
}

impl std::fmt::Debug for MasterSecretKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MasterSecretKey(t={})", self.v.len())
    }
}

impl MasterSecretKey {
    pub(crate) fn from_scalars(v: Vec<Scalar>) -> Self {
        MasterSecretKey { v }
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    /// The components, in order. Needed for serialization and for test
    /// oracles; treat with care.
    pub fn scalars(&self) -> &[Scalar] {
        &self.v
    }
}

/// The master public key: `t` points `V_i = v_i·P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterPublicKey {
    points: Vec<GroupPoint>,
}

impl MasterPublicKey {
    pub(crate) fn from_points(points: Vec<GroupPoint>) -> Self {
        MasterPublicKey { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[GroupPoint] {
        &self.points
    }

    /// Component for a 1-based index as produced by `H1`.
    pub(crate) fn component(&self, index_1based: u32) -> &GroupPoint {
        &self.points[(index_1based - 1) as usize]
    }
}

/// Which trust domain a key was issued under. Online operations never branch
/// on this; it exists for wire formats and operator tooling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    IdentityBased,
    Certificateless,
}

impl Domain {
    pub(crate) fn wire_tag(self) -> u8 {
        match self {
            Domain::IdentityBased => 1,
            Domain::Certificateless => 2,
        }
    }

    pub(crate) fn from_wire_tag(tag: u8) -> Result<Self> {
        match tag {
            1 => Ok(Domain::IdentityBased),
            2 => Ok(Domain::Certificateless),
            other => Err(Error::BadKind(other)),
        }
    }
}

/// Authority output for one identity: the masked key scalar and the
/// commitment `Q` it is bound to.
///
/// In the identity-based domain the scalar is the final private key `x`;
/// in the certificateless domain it is the partial key `w` that the user
/// finalizes with their own `α`.
#[derive(Clone)]
pub struct PartialKey {
    secret: Scalar,
    q_point: GroupPoint,
    domain: Domain,
}

impl std::fmt::Debug for PartialKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PartialKey")
            .field("domain", &self.domain)
            .field("q_point", &self.q_point)
            .finish_non_exhaustive()
    }
}

impl PartialKey {
    pub(crate) fn new(secret: Scalar, q_point: GroupPoint, domain: Domain) -> Self {
        PartialKey {
            secret,
            q_point,
            domain,
        }
    }

    pub fn secret(&self) -> &Scalar {
        &self.secret
    }

    pub fn q_point(&self) -> &GroupPoint {
        &self.q_point
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }
}

/// Generate a fresh master key pair: `t` uniform scalars and their
/// commitments under the generator.
pub fn setup(
    params: &SystemParams,
    rng: &mut (impl RngCore + CryptoRng),
) -> (MasterSecretKey, MasterPublicKey) {
    let profile = params.profile();
    let t = params.t() as usize;
    let mut v = Vec::with_capacity(t);
    let mut points = Vec::with_capacity(t);
    for _ in 0..t {
        let s = profile.scalar_random(rng);
        points.push(profile.mul_base(&s));
        v.push(s);
    }
    (
        MasterSecretKey::from_scalars(v),
        MasterPublicKey::from_points(points),
    )
}

fn validate_identity(id: &str) -> Result<()> {
    if id.is_empty() {
        return Err(Error::InvalidIdentity("identity must be non-empty".into()));
    }
    if id.len() > u16::MAX as usize {
        return Err(Error::InvalidIdentity(format!(
            "identity is {} bytes; the wire format caps identities at {}",
            id.len(),
            u16::MAX
        )));
    }
    Ok(())
}

/// The PKG/KGC: holds the master key pair and issues user keys.
#[derive(Debug)]
pub struct KeyAuthority {
    params: SystemParams,
    msk: MasterSecretKey,
    mpk: MasterPublicKey,
}

impl KeyAuthority {
    /// Run setup and assume the authority role.
    pub fn new(params: SystemParams, rng: &mut (impl RngCore + CryptoRng)) -> Self {
        let (msk, mpk) = setup(&params, rng);
        KeyAuthority { params, msk, mpk }
    }

    /// Rebuild an authority from a stored master secret, recomputing the
    /// public commitments.
    pub fn from_master_secret(params: SystemParams, msk: MasterSecretKey) -> Result<Self> {
        if msk.len() != params.t() as usize {
            return Err(Error::InvalidParams(format!(
                "master secret has {} components but params require t={}",
                msk.len(),
                params.t()
            )));
        }
        let profile = params.profile();
        let points = msk.scalars().iter().map(|s| profile.mul_base(s)).collect();
        Ok(KeyAuthority {
            params,
            msk,
            mpk: MasterPublicKey::from_points(points),
        })
    }

    /// Adopt an existing key pair (for example, both halves loaded from
    /// disk). Verifies consistency `V_i = v_i·P`.
    pub fn from_key_pair(
        params: SystemParams,
        msk: MasterSecretKey,
        mpk: MasterPublicKey,
    ) -> Result<Self> {
        let rebuilt = Self::from_master_secret(params, msk)?;
        if rebuilt.mpk != mpk {
            return Err(Error::InvalidParams(
                "master public key does not match master secret key".into(),
            ));
        }
        Ok(rebuilt)
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn master_public(&self) -> &MasterPublicKey {
        &self.mpk
    }

    pub fn master_secret(&self) -> &MasterSecretKey {
        &self.msk
    }

    /// Sum of the master-secret components selected by an index set, with
    /// multiplicity.
    fn masked_component_sum(&self, indexes: &crate::hash::IndexSet) -> Scalar {
        let mut y = self.params.profile().scalar_zero();
        for j in indexes.iter() {
            y = y + self.msk.scalars()[(j - 1) as usize];
        }
        y
    }

    /// Identity-based key extraction: pick `β`, commit `Q = βP`, derive the
    /// index set from `H1(ID, Q)`, and return `x = Σ v_j + β` masked by the
    /// nonce. The identity `x·P = Y + Q` is checked before release; a failure
    /// would mean the hash suite and master key disagree, so it panics rather
    /// than returning a corrupt key.
    pub fn extract(&self, id: &str, rng: &mut (impl RngCore + CryptoRng)) -> Result<PartialKey> {
        validate_identity(id)?;
        let profile = self.params.profile();
        let beta = profile.scalar_random(rng);
        let q_point = profile.mul_base(&beta);
        let indexes = h1_indexes(id.as_bytes(), &q_point, profile, self.params.hash_config());
        let y = self.masked_component_sum(&indexes);
        let x = y + beta;

        let derived = derive_public_point(id, &q_point, &self.mpk, &self.params);
        let expected = profile.add(&derived, &q_point);
        assert_eq!(
            profile.mul_base(&x),
            expected,
            "extraction postcondition x*P = Y + Q failed"
        );
        Ok(PartialKey::new(x, q_point, Domain::IdentityBased))
    }

    /// Certificateless partial-key generation: fold the user commitment `U`
    /// into `Q = U + W` so that replacing `U` later falsifies the key, then
    /// mask the selected component sum with the nonce as in extraction.
    pub fn part_key_gen(
        &self,
        id: &str,
        user_commitment: &GroupPoint,
        rng: &mut (impl RngCore + CryptoRng),
    ) -> Result<PartialKey> {
        validate_identity(id)?;
        let profile = self.params.profile();
        let beta = profile.scalar_random(rng);
        let w_point = profile.mul_base(&beta);
        let q_point = profile.add(user_commitment, &w_point);
        let indexes = h1_indexes(id.as_bytes(), &q_point, profile, self.params.hash_config());
        let y = self.masked_component_sum(&indexes);
        let w = y + beta;
        Ok(PartialKey::new(w, q_point, Domain::Certificateless))
    }
}
