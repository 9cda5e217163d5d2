//! The five random oracles and the index-derivation procedure.
//!
//! All oracles are instantiated from a single extendable-output function
//! (SHAKE256) under per-oracle ASCII labels `CFC-H1` .. `CFC-H5`, so the
//! oracles are domain-separated from each other by construction. `H1`
//! additionally binds the `(t, k)` configuration into its label, so index
//! sets derived under different parameter choices never collide.
//!
//! * `H1(ID, Q)` yields `k` indexes of `log2(t)` bits each into the master
//!   key vector, read most-significant-bit first from the squeezed stream
//!   and mapped to `[1, t]` as `chunk + 1`. Duplicate indexes are permitted;
//!   downstream sums take them with multiplicity.
//! * `H2(σ, m)` and `H5(m, R)` produce scalars by wide reduction of 512
//!   squeezed bits, keeping the reduction bias below `2^-250`.
//! * `H3(K)` produces the `n`-bit mask for the encapsulated seed.
//! * `H4(σ)` is generalized to a keystream so the message part of a
//!   ciphertext can cover any length; its first `n` bits are the plain
//!   fixed-width value, since squeezing is a stream with the prefix
//!   property.

use sha3::digest::{ExtendableOutput, Update, XofReader};
use sha3::Shake256;

use crate::error::{Error, Result};
use crate::group::{GroupPoint, GroupProfile, Scalar};

const LABEL_H1: &[u8] = b"CFC-H1";
const LABEL_H2: &[u8] = b"CFC-H2";
const LABEL_H3: &[u8] = b"CFC-H3";
const LABEL_H4: &[u8] = b"CFC-H4";
const LABEL_H5: &[u8] = b"CFC-H5";

/// Hash-suite configuration: the symmetric space size `n` and the
/// master-key-vector geometry `(t, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HashConfig {
    t: u32,
    k: u32,
    n_bits: u16,
}

impl HashConfig {
    /// Structural validation only; security-level gating happens at the
    /// system-parameter layer.
    pub fn new(t: u32, k: u32, n_bits: u16) -> Result<Self> {
        if !t.is_power_of_two() || t < 2 {
            return Err(Error::InvalidParams(format!(
                "t must be a power of two >= 2, got {t}"
            )));
        }
        if k < 1 || k > t {
            return Err(Error::InvalidParams(format!(
                "k must satisfy 1 <= k <= t, got k={k}, t={t}"
            )));
        }
        if n_bits != 128 && n_bits != 256 {
            return Err(Error::InvalidParams(format!(
                "n must be 128 or 256 bits, got {n_bits}"
            )));
        }
        let cfg = HashConfig { t, k, n_bits };
        if cfg.gamma_bits() > 4096 {
            return Err(Error::InvalidParams(format!(
                "k*log2(t) = {} bits exceeds the supported extraction limit",
                cfg.gamma_bits()
            )));
        }
        Ok(cfg)
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n_bits(&self) -> u16 {
        self.n_bits
    }

    pub fn n_bytes(&self) -> usize {
        self.n_bits as usize / 8
    }

    /// Bits per index chunk.
    pub fn log2_t(&self) -> u32 {
        self.t.trailing_zeros()
    }

    /// Total bits `γ = k·log2(t)` consumed by index derivation.
    pub fn gamma_bits(&self) -> u32 {
        self.k * self.log2_t()
    }
}

/// The `k` indexes selected by `H1`, each in `[1, t]`, in derivation order.
/// Duplicates are permitted and meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    indexes: Vec<u32>,
}

impl IndexSet {
    pub fn as_slice(&self) -> &[u32] {
        &self.indexes
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.indexes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indexes.is_empty()
    }
}

fn shake(label: &[u8], parts: &[&[u8]]) -> impl XofReader {
    let mut h = Shake256::default();
    h.update(label);
    for part in parts {
        h.update(part);
    }
    h.finalize_xof()
}

fn squeeze(reader: &mut impl XofReader, len: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    reader.read(&mut out);
    out
}

/// Split a squeezed byte stream into `k` chunks of `log2(t)` bits each,
/// reading bits most-significant first, and map each chunk to `[1, t]`.
pub(crate) fn split_indexes(stream: &[u8], cfg: &HashConfig) -> IndexSet {
    let bits_per_index = cfg.log2_t();
    let mut indexes = Vec::with_capacity(cfg.k() as usize);
    let mut bit_pos = 0usize;
    for _ in 0..cfg.k() {
        let mut chunk: u32 = 0;
        for _ in 0..bits_per_index {
            let byte = stream[bit_pos / 8];
            let bit = (byte >> (7 - (bit_pos % 8))) & 1;
            chunk = (chunk << 1) | bit as u32;
            bit_pos += 1;
        }
        indexes.push(chunk + 1);
    }
    IndexSet { indexes }
}

/// `H1(ID, Q)`: derive the `k` master-key indexes for an identity and its
/// authority commitment. Deterministic; consumes exactly `γ = k·log2(t)`
/// bits of XOF output.
pub fn h1_indexes(
    id: &[u8],
    q_point: &GroupPoint,
    profile: &GroupProfile,
    cfg: &HashConfig,
) -> IndexSet {
    let mut reader = shake(
        LABEL_H1,
        &[
            &cfg.t().to_le_bytes(),
            &cfg.k().to_le_bytes(),
            &(id.len() as u64).to_le_bytes(),
            id,
            &profile.encode_point(q_point),
        ],
    );
    let stream = squeeze(&mut reader, cfg.gamma_bits().div_ceil(8) as usize);
    split_indexes(&stream, cfg)
}

/// `H2(σ, m)`: the encryption nonce scalar, wide-reduced from 512 bits.
pub fn h2(sigma: &[u8], msg: &[u8], profile: &GroupProfile, cfg: &HashConfig) -> Scalar {
    debug_assert_eq!(sigma.len(), cfg.n_bytes());
    let mut reader = shake(LABEL_H2, &[sigma, msg]);
    let mut wide = [0u8; 64];
    reader.read(&mut wide);
    profile.scalar_from_wide_bytes(&wide)
}

/// `H3(K)`: the `n`-bit mask derived from the ephemeral shared point.
pub fn h3(k_point: &GroupPoint, profile: &GroupProfile, cfg: &HashConfig) -> Vec<u8> {
    let mut reader = shake(LABEL_H3, &[&profile.encode_point(k_point)]);
    squeeze(&mut reader, cfg.n_bytes())
}

/// `H4(σ)` generalized to a keystream of `out_len` bytes. The first
/// `n` bits coincide with the fixed-width `H4(σ)` value.
pub fn h4_expand(sigma: &[u8], out_len: usize, cfg: &HashConfig) -> Vec<u8> {
    debug_assert_eq!(sigma.len(), cfg.n_bytes());
    let mut reader = shake(LABEL_H4, &[sigma]);
    squeeze(&mut reader, out_len)
}

/// `H5(m, R)`: the signature challenge scalar, wide-reduced from 512 bits.
pub fn h5(msg: &[u8], r_point: &GroupPoint, profile: &GroupProfile) -> Scalar {
    let mut reader = shake(
        LABEL_H5,
        &[
            &(msg.len() as u64).to_le_bytes(),
            msg,
            &profile.encode_point(r_point),
        ],
    );
    let mut wide = [0u8; 64];
    reader.read(&mut wide);
    profile.scalar_from_wide_bytes(&wide)
}
