//! Independent mock-group oracle: the whole protocol re-implemented with
//! plain `u64` modular arithmetic and direct XOF calls, sharing no code with
//! the library. The equivalence test replays identical entropy through both
//! and compares every intermediate value scalar-for-scalar.
//!
//! Conventions duplicated here on purpose (they are the protocol):
//! * group: integers mod 7919, generator 1, so `aP = a` and `X + Y = x + y`;
//! * scalars drawn as 64 little-endian bytes reduced mod 7919;
//! * oracle labels `CFC-H1`..`CFC-H5`, `CFC-KDF`, `CFC-KEX-TRANSCRIPT`;
//! * `H1` input `label ‖ t_le32 ‖ k_le32 ‖ len(id)_le64 ‖ id ‖ Q_le16`,
//!   split into `log2(t)`-bit chunks read MSB-first, each mapped to
//!   `chunk + 1`;
//! * `H2` input `label ‖ σ ‖ m`, `H3` input `label ‖ K_le16`, `H4` input
//!   `label ‖ σ`, `H5` input `label ‖ len(m)_le64 ‖ m ‖ R_le16`;
//! * scalars from `H2`/`H5` by reducing 64 squeezed bytes as above.

use rand_core::RngCore;
use sha3::digest::{ExtendableOutput, Update, XofReader};
use sha3::Shake256;

pub const Q: u64 = 7919;

fn reduce_le(bytes: &[u8]) -> u64 {
    let mut acc: u64 = 0;
    for &b in bytes.iter().rev() {
        acc = (acc * 256 + b as u64) % Q;
    }
    acc
}

pub fn draw_scalar(rng: &mut impl RngCore) -> u64 {
    let mut wide = [0u8; 64];
    rng.fill_bytes(&mut wide);
    reduce_le(&wide)
}

pub fn draw_sigma(rng: &mut impl RngCore, n_bytes: usize) -> Vec<u8> {
    let mut sigma = vec![0u8; n_bytes];
    rng.fill_bytes(&mut sigma);
    sigma
}

fn xof(label: &[u8], parts: &[&[u8]], out_len: usize) -> Vec<u8> {
    let mut h = Shake256::default();
    h.update(label);
    for p in parts {
        h.update(p);
    }
    let mut out = vec![0u8; out_len];
    h.finalize_xof().read(&mut out);
    out
}

fn point_bytes(p: u64) -> [u8; 2] {
    (p as u16).to_le_bytes()
}

pub fn h1_indexes(id: &[u8], q_point: u64, t: u32, k: u32) -> Vec<u32> {
    let log2_t = t.trailing_zeros();
    let gamma_bits = k * log2_t;
    let stream = xof(
        b"CFC-H1",
        &[
            &t.to_le_bytes(),
            &k.to_le_bytes(),
            &(id.len() as u64).to_le_bytes(),
            id,
            &point_bytes(q_point),
        ],
        gamma_bits.div_ceil(8) as usize,
    );
    let mut indexes = Vec::with_capacity(k as usize);
    let mut bit_pos = 0usize;
    for _ in 0..k {
        let mut chunk: u32 = 0;
        for _ in 0..log2_t {
            let bit = (stream[bit_pos / 8] >> (7 - (bit_pos % 8))) & 1;
            chunk = (chunk << 1) | bit as u32;
            bit_pos += 1;
        }
        indexes.push(chunk + 1);
    }
    indexes
}

pub fn h2(sigma: &[u8], msg: &[u8]) -> u64 {
    reduce_le(&xof(b"CFC-H2", &[sigma, msg], 64))
}

pub fn h3(k_point: u64, n_bytes: usize) -> Vec<u8> {
    xof(b"CFC-H3", &[&point_bytes(k_point)], n_bytes)
}

pub fn h4_expand(sigma: &[u8], out_len: usize) -> Vec<u8> {
    xof(b"CFC-H4", &[sigma], out_len)
}

pub fn h5(msg: &[u8], r_point: u64) -> u64 {
    reduce_le(&xof(
        b"CFC-H5",
        &[&(msg.len() as u64).to_le_bytes(), msg, &point_bytes(r_point)],
        64,
    ))
}

pub struct Setup {
    pub v: Vec<u64>,
    pub big_v: Vec<u64>,
}

pub fn setup(t: u32, rng: &mut impl RngCore) -> Setup {
    let v: Vec<u64> = (0..t).map(|_| draw_scalar(rng)).collect();
    let big_v = v.clone(); // V_i = v_i * P with P = 1
    Setup { v, big_v }
}

fn component_sum(v: &[u64], indexes: &[u32]) -> u64 {
    indexes.iter().fold(0u64, |acc, &j| (acc + v[(j - 1) as usize]) % Q)
}

/// Identity-based extraction: returns `(x, Q)`.
pub fn extract(id: &[u8], setup: &Setup, t: u32, k: u32, rng: &mut impl RngCore) -> (u64, u64) {
    let beta = draw_scalar(rng);
    let q_point = beta; // beta * P
    let indexes = h1_indexes(id, q_point, t, k);
    let y = component_sum(&setup.v, &indexes);
    ((y + beta) % Q, q_point)
}

/// Certificateless issue plus user-side finalize: returns
/// `(alpha, u, w, q, x)`.
pub fn certificateless_keygen(
    id: &[u8],
    setup: &Setup,
    t: u32,
    k: u32,
    rng: &mut impl RngCore,
) -> (u64, u64, u64, u64, u64) {
    let alpha = draw_scalar(rng);
    let u_point = alpha;
    let beta = draw_scalar(rng);
    let w_point = beta;
    let q_point = (u_point + w_point) % Q;
    let indexes = h1_indexes(id, q_point, t, k);
    let y = component_sum(&setup.v, &indexes);
    let w = (y + beta) % Q;

    // binding check: Q - U = wP - Y
    let lhs = (q_point + Q - u_point) % Q;
    let rhs = (w + Q - y) % Q;
    assert_eq!(lhs, rhs, "oracle binding check failed on an honest flow");
    let x = (w + alpha) % Q;
    (alpha, u_point, w, q_point, x)
}

pub fn derive_public_point(id: &[u8], q_point: u64, setup: &Setup, t: u32, k: u32) -> u64 {
    let indexes = h1_indexes(id, q_point, t, k);
    component_sum(&setup.big_v, &indexes)
}

pub struct OracleCiphertext {
    pub r_point: u64,
    pub u: Vec<u8>,
    pub v: Vec<u8>,
}

#[allow(clippy::too_many_arguments)]
pub fn encrypt(
    msg: &[u8],
    id: &[u8],
    q_point: u64,
    setup: &Setup,
    t: u32,
    k: u32,
    n_bytes: usize,
    rng: &mut impl RngCore,
) -> OracleCiphertext {
    let sigma = draw_sigma(rng, n_bytes);
    let r = h2(&sigma, msg);
    let r_point = r;
    let y = derive_public_point(id, q_point, setup, t, k);
    let shared = r * ((y + q_point) % Q) % Q;
    let u: Vec<u8> = h3(shared, n_bytes)
        .iter()
        .zip(&sigma)
        .map(|(h, s)| h ^ s)
        .collect();
    let v: Vec<u8> = h4_expand(&sigma, msg.len())
        .iter()
        .zip(msg)
        .map(|(h, m)| h ^ m)
        .collect();
    OracleCiphertext { r_point, u, v }
}

pub fn decrypt(x: u64, ct: &OracleCiphertext, n_bytes: usize) -> Option<Vec<u8>> {
    let shared = x * ct.r_point % Q;
    let sigma: Vec<u8> = h3(shared, n_bytes)
        .iter()
        .zip(&ct.u)
        .map(|(h, u)| h ^ u)
        .collect();
    let msg: Vec<u8> = h4_expand(&sigma, ct.v.len())
        .iter()
        .zip(&ct.v)
        .map(|(h, v)| h ^ v)
        .collect();
    let r = h2(&sigma, &msg);
    if r % Q == ct.r_point {
        Some(msg)
    } else {
        None
    }
}

pub fn sign(msg: &[u8], x: u64, rng: &mut impl RngCore) -> (u64, u64) {
    let r = draw_scalar(rng);
    let r_point = r;
    let e = h5(msg, r_point);
    let s = (r + Q - (e * x % Q)) % Q;
    (s, e)
}

pub fn verify(msg: &[u8], id: &[u8], q_point: u64, setup: &Setup, t: u32, k: u32, sig: (u64, u64)) -> bool {
    let (s, e) = sig;
    let y = derive_public_point(id, q_point, setup, t, k);
    let r_point = (s + e * ((y + q_point) % Q)) % Q;
    e == h5(msg, r_point)
}

pub struct OracleKex {
    pub z: u64,
    pub m_point: u64,
}

pub fn kex_init(rng: &mut impl RngCore) -> OracleKex {
    let z = draw_scalar(rng);
    OracleKex { z, m_point: z }
}

#[allow(clippy::too_many_arguments)]
pub fn kex_finalize(
    x: u64,
    own: &OracleKex,
    peer_id: &[u8],
    peer_m: u64,
    peer_q: u64,
    setup: &Setup,
    t: u32,
    k: u32,
) -> u64 {
    let y_peer = derive_public_point(peer_id, peer_q, setup, t, k);
    (x * ((y_peer + peer_q) % Q) + own.z * peer_m) % Q
}

fn transcript_party(out: &mut Vec<u8>, id: &[u8], m_point: u64, q_point: u64) {
    out.extend_from_slice(&(id.len() as u64).to_le_bytes());
    out.extend_from_slice(id);
    out.extend_from_slice(&point_bytes(m_point));
    out.extend_from_slice(&point_bytes(q_point));
}

/// Transcript-bound session key, initiator party first.
pub fn session_key(
    k_point: u64,
    init_id: &[u8],
    init_m: u64,
    init_q: u64,
    resp_id: &[u8],
    resp_m: u64,
    resp_q: u64,
) -> [u8; 32] {
    let mut transcript = Vec::new();
    transcript_party(&mut transcript, init_id, init_m, init_q);
    transcript_party(&mut transcript, resp_id, resp_m, resp_q);
    let digest = xof(b"CFC-KEX-TRANSCRIPT", &[&transcript], 32);
    let key = xof(b"CFC-KDF", &[&point_bytes(k_point), &digest], 32);
    key.try_into().unwrap()
}
