//! Bit-exact binary serialization for every artifact, and the container
//! format the CLI stores on disk.
//!
//! Every file is a container:
//!
//! ```text
//! offset  size  field
//! 0       4     magic "CFC1"
//! 4       1     version (1)
//! 5       1     kind
//! 6       8     params digest (truncated XOF of the params payload)
//! 14      ...   kind-specific payload
//! ```
//!
//! All multi-byte integers are little-endian. Payload lengths are fully
//! determined by `(kind, params)` — the ciphertext's message part runs to
//! the end of the container — and decoding rejects trailing bytes, foreign
//! parameter digests, unknown versions, and any group element that does not
//! decode, each with a distinct error. Identity strings are length-prefixed
//! (u16) raw UTF-8 with no normalization; canonicalize identities before
//! handing them to the library if your application needs it.
//!
//! Master-secret files carry a leading sentinel byte so a glance at a hex
//! dump shows they are secret material; the CLI also writes them with
//! restrictive permissions.

use sha3::digest::{ExtendableOutput, Update, XofReader};
use sha3::Shake256;

use crate::authority::{Domain, MasterPublicKey, MasterSecretKey, PartialKey, SystemParams};
use crate::crypto::{Ciphertext, KexMessage, Signature};
use crate::error::{Error, Result};
use crate::group::{GroupId, GroupProfile};
use crate::user::{UserCredential, UserSecret};

pub const MAGIC: [u8; 4] = *b"CFC1";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 14;

/// 'S' for secret: leading byte of master-secret payloads.
pub const MSK_SENTINEL: u8 = 0x53;

const LABEL_PARAMS_DIGEST: &[u8] = b"CFC-PARAMS-DIGEST";

/// Artifact kinds carried by the container.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Kind {
    Params = 1,
    MasterPublicKey = 2,
    MasterSecretKey = 3,
    Credential = 4,
    Ciphertext = 5,
    Signature = 6,
    KexMessage = 7,
    UserSecret = 8,
    PartialKey = 9,
}

impl Kind {
    pub fn tag(self) -> u8 {
        self as u8
    }

    pub fn from_tag(tag: u8) -> Result<Self> {
        Ok(match tag {
            1 => Kind::Params,
            2 => Kind::MasterPublicKey,
            3 => Kind::MasterSecretKey,
            4 => Kind::Credential,
            5 => Kind::Ciphertext,
            6 => Kind::Signature,
            7 => Kind::KexMessage,
            8 => Kind::UserSecret,
            9 => Kind::PartialKey,
            other => return Err(Error::BadKind(other)),
        })
    }
}

fn group_id_tag(id: GroupId) -> u8 {
    match id {
        GroupId::Production => 1,
        GroupId::Mock => 2,
    }
}

fn group_id_from_tag(tag: u8) -> Result<GroupId> {
    match tag {
        1 => Ok(GroupId::Production),
        2 => Ok(GroupId::Mock),
        other => Err(Error::BadKind(other)),
    }
}

fn params_payload(params: &SystemParams) -> Vec<u8> {
    let mut out = Vec::with_capacity(11);
    out.push(group_id_tag(params.profile().id()));
    out.extend_from_slice(&params.t().to_le_bytes());
    out.extend_from_slice(&params.k().to_le_bytes());
    out.extend_from_slice(&params.n_bits().to_le_bytes());
    out
}

/// Truncated digest binding an artifact to the parameters it was produced
/// under.
pub fn params_digest(params: &SystemParams) -> [u8; 8] {
    let mut h = Shake256::default();
    h.update(LABEL_PARAMS_DIGEST);
    h.update(&params_payload(params));
    let mut digest = [0u8; 8];
    h.finalize_xof().read(&mut digest);
    digest
}

/// Cursor over a payload with typed reads and a trailing-bytes check.
struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Reader { bytes, pos: 0 }
    }

    fn take(&mut self, len: usize) -> Result<&'a [u8]> {
        if self.bytes.len() - self.pos < len {
            return Err(Error::LengthMismatch {
                expected: self.pos + len,
                got: self.bytes.len(),
            });
        }
        let out = &self.bytes[self.pos..self.pos + len];
        self.pos += len;
        Ok(out)
    }

    fn take_u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn take_u16(&mut self) -> Result<u16> {
        let b = self.take(2)?;
        Ok(u16::from_le_bytes([b[0], b[1]]))
    }

    fn take_u32(&mut self) -> Result<u32> {
        let b = self.take(4)?;
        Ok(u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
    }

    fn take_point(&mut self, profile: &GroupProfile) -> Result<crate::group::GroupPoint> {
        let bytes = self.take(profile.point_len())?;
        profile.decode_point(bytes)
    }

    fn take_scalar(&mut self, profile: &GroupProfile) -> Result<crate::group::Scalar> {
        let bytes = self.take(profile.scalar_len())?;
        profile.decode_scalar(bytes)
    }

    fn rest(&mut self) -> &'a [u8] {
        let out = &self.bytes[self.pos..];
        self.pos = self.bytes.len();
        out
    }

    fn finish(self) -> Result<()> {
        let left = self.bytes.len() - self.pos;
        if left != 0 {
            return Err(Error::TrailingBytes(left));
        }
        Ok(())
    }
}

/// Serializable artifact payloads.
pub trait WireArtifact: Sized {
    /// Container kind tag for this artifact.
    const KIND: Kind;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>);
    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self>;
}

/// Serialize an artifact into a complete container.
pub fn to_bytes<T: WireArtifact>(value: &T, params: &SystemParams) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(T::KIND.tag());
    out.extend_from_slice(&params_digest(params));
    value.write_payload(params, &mut out);
    out
}

fn check_header(bytes: &[u8], expected_kind: Kind, params: &SystemParams) -> Result<usize> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::LengthMismatch {
            expected: HEADER_LEN,
            got: bytes.len(),
        });
    }
    if bytes[..4] != MAGIC {
        return Err(Error::BadMagic);
    }
    if bytes[4] != VERSION {
        return Err(Error::BadVersion(bytes[4]));
    }
    let kind = Kind::from_tag(bytes[5])?;
    if kind != expected_kind {
        return Err(Error::BadKind(bytes[5]));
    }
    if bytes[6..14] != params_digest(params) {
        return Err(Error::ParamsDigestMismatch);
    }
    Ok(HEADER_LEN)
}

/// Deserialize a container, checking magic, version, kind, and the params
/// digest before touching the payload.
pub fn from_bytes<T: WireArtifact>(bytes: &[u8], params: &SystemParams) -> Result<T> {
    let start = check_header(bytes, T::KIND, params)?;
    T::read_payload(&bytes[start..], params)
}

/// Read the kind tag of a container without decoding it.
pub fn peek_kind(bytes: &[u8]) -> Result<Kind> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::LengthMismatch {
            expected: HEADER_LEN,
            got: bytes.len(),
        });
    }
    if bytes[..4] != MAGIC {
        return Err(Error::BadMagic);
    }
    if bytes[4] != VERSION {
        return Err(Error::BadVersion(bytes[4]));
    }
    Kind::from_tag(bytes[5])
}

/// Serialize system parameters. The digest field is computed over the
/// params payload itself, making the file self-validating.
pub fn write_system_params(params: &SystemParams) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(Kind::Params.tag());
    out.extend_from_slice(&params_digest(params));
    out.extend_from_slice(&params_payload(params));
    out
}

/// Deserialize and re-validate system parameters.
pub fn read_system_params(bytes: &[u8]) -> Result<SystemParams> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::LengthMismatch {
            expected: HEADER_LEN,
            got: bytes.len(),
        });
    }
    if bytes[..4] != MAGIC {
        return Err(Error::BadMagic);
    }
    if bytes[4] != VERSION {
        return Err(Error::BadVersion(bytes[4]));
    }
    if bytes[5] != Kind::Params.tag() {
        return Err(Error::BadKind(bytes[5]));
    }
    let mut reader = Reader::new(&bytes[HEADER_LEN..]);
    let group_id = group_id_from_tag(reader.take_u8()?)?;
    let t = reader.take_u32()?;
    let k = reader.take_u32()?;
    let n_bits = reader.take_u16()?;
    reader.finish()?;
    let params = SystemParams::new(GroupProfile::new(group_id), t, k, n_bits)?;
    if bytes[6..14] != params_digest(&params) {
        return Err(Error::ParamsDigestMismatch);
    }
    Ok(params)
}

impl WireArtifact for MasterPublicKey {
    const KIND: Kind = Kind::MasterPublicKey;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        for p in self.points() {
            out.extend_from_slice(&profile.encode_point(p));
        }
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        let mut points = Vec::with_capacity(params.t() as usize);
        for _ in 0..params.t() {
            points.push(reader.take_point(profile)?);
        }
        reader.finish()?;
        Ok(MasterPublicKey::from_points(points))
    }
}

impl WireArtifact for MasterSecretKey {
    const KIND: Kind = Kind::MasterSecretKey;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        out.push(MSK_SENTINEL);
        for s in self.scalars() {
            out.extend_from_slice(&profile.encode_scalar(s));
        }
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        if reader.take_u8()? != MSK_SENTINEL {
            return Err(Error::BadKind(Kind::MasterSecretKey.tag()));
        }
        let mut scalars = Vec::with_capacity(params.t() as usize);
        for _ in 0..params.t() {
            scalars.push(reader.take_scalar(profile)?);
        }
        reader.finish()?;
        Ok(MasterSecretKey::from_scalars(scalars))
    }
}

fn write_identity(id: &str, out: &mut Vec<u8>) {
    debug_assert!(id.len() <= u16::MAX as usize);
    out.extend_from_slice(&(id.len() as u16).to_le_bytes());
    out.extend_from_slice(id.as_bytes());
}

fn read_identity(reader: &mut Reader<'_>) -> Result<String> {
    let len = reader.take_u16()? as usize;
    let bytes = reader.take(len)?;
    String::from_utf8(bytes.to_vec())
        .map_err(|_| Error::InvalidIdentity("identity is not valid UTF-8".into()))
}

impl WireArtifact for UserCredential {
    const KIND: Kind = Kind::Credential;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        out.push(self.domain().wire_tag());
        out.extend_from_slice(&profile.encode_scalar(self.secret_scalar()));
        out.extend_from_slice(&profile.encode_point(self.q_point()));
        write_identity(self.id(), out);
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        let domain = Domain::from_wire_tag(reader.take_u8()?)?;
        let x = reader.take_scalar(profile)?;
        let q_point = reader.take_point(profile)?;
        let id = read_identity(&mut reader)?;
        reader.finish()?;
        Ok(UserCredential::from_parts(id, q_point, x, domain))
    }
}

impl WireArtifact for Ciphertext {
    const KIND: Kind = Kind::Ciphertext;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        out.extend_from_slice(&profile.encode_point(self.r_point()));
        out.extend_from_slice(self.u());
        out.extend_from_slice(self.v());
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        let r_point = reader.take_point(profile)?;
        let u = reader.take(params.hash_config().n_bytes())?.to_vec();
        let v = reader.rest().to_vec();
        Ciphertext::from_parts(r_point, u, v, params)
    }
}

impl WireArtifact for Signature {
    const KIND: Kind = Kind::Signature;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        out.extend_from_slice(&profile.encode_scalar(self.s()));
        out.extend_from_slice(&profile.encode_scalar(self.e()));
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        let s = reader.take_scalar(profile)?;
        let e = reader.take_scalar(profile)?;
        reader.finish()?;
        Ok(Signature::from_parts(s, e))
    }
}

impl WireArtifact for KexMessage {
    const KIND: Kind = Kind::KexMessage;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        out.extend_from_slice(&profile.encode_point(self.commitment()));
        out.extend_from_slice(&profile.encode_point(self.q_point()));
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        let commitment = reader.take_point(profile)?;
        let q_point = reader.take_point(profile)?;
        reader.finish()?;
        Ok(KexMessage::from_parts(commitment, q_point))
    }
}

impl WireArtifact for UserSecret {
    const KIND: Kind = Kind::UserSecret;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        out.extend_from_slice(&profile.encode_scalar(self.alpha()));
        out.extend_from_slice(&profile.encode_point(self.commitment()));
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        let alpha = reader.take_scalar(profile)?;
        let commitment = reader.take_point(profile)?;
        reader.finish()?;
        Ok(UserSecret::from_parts(alpha, commitment))
    }
}

impl WireArtifact for PartialKey {
    const KIND: Kind = Kind::PartialKey;

    fn write_payload(&self, params: &SystemParams, out: &mut Vec<u8>) {
        let profile = params.profile();
        out.push(self.domain().wire_tag());
        out.extend_from_slice(&profile.encode_scalar(self.secret()));
        out.extend_from_slice(&profile.encode_point(self.q_point()));
    }

    fn read_payload(bytes: &[u8], params: &SystemParams) -> Result<Self> {
        let profile = params.profile();
        let mut reader = Reader::new(bytes);
        let domain = Domain::from_wire_tag(reader.take_u8()?)?;
        let secret = reader.take_scalar(profile)?;
        let q_point = reader.take_point(profile)?;
        reader.finish()?;
        Ok(PartialKey::new(secret, q_point, domain))
    }
}

/// Expected payload sizes (container header excluded) for a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SizeReport {
    pub point_len: usize,
    pub scalar_len: usize,
    pub header_len: usize,
    pub params: usize,
    /// `t` encoded points.
    pub mpk: usize,
    /// Sentinel byte plus `t` encoded scalars.
    pub msk: usize,
    /// Domain tag, secret scalar, and `Q`; the length-prefixed identity
    /// comes on top.
    pub credential_core: usize,
    /// Bytes a ciphertext adds over its message: `R` plus the masked seed.
    pub ciphertext_overhead: usize,
    pub signature: usize,
    pub kex_message: usize,
    pub user_secret: usize,
    /// Domain tag, partial scalar, and `Q`.
    pub partial_key: usize,
}

impl SizeReport {
    /// Full credential payload for an identity of `id_len` bytes.
    pub fn credential(&self, id_len: usize) -> usize {
        self.credential_core + 2 + id_len
    }

    /// Full ciphertext payload for a message of `msg_len` bytes.
    pub fn ciphertext(&self, msg_len: usize) -> usize {
        self.ciphertext_overhead + msg_len
    }
}

/// Compute the expected byte sizes for every artifact kind under `params`.
pub fn size_report(params: &SystemParams) -> SizeReport {
    let point = params.profile().point_len();
    let scalar = params.profile().scalar_len();
    let t = params.t() as usize;
    let n = params.hash_config().n_bytes();
    SizeReport {
        point_len: point,
        scalar_len: scalar,
        header_len: HEADER_LEN,
        params: 11,
        mpk: t * point,
        msk: 1 + t * scalar,
        credential_core: 1 + scalar + point,
        ciphertext_overhead: point + n,
        signature: 2 * scalar,
        kex_message: 2 * point,
        user_secret: scalar + point,
        partial_key: 1 + scalar + point,
    }
}
