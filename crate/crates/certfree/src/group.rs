//! Prime-order group abstraction with two interchangeable backends.
//!
//! The production backend is the ristretto255 group: prime order
//! `q = 2^252 + 27742317777372353535851937790883648493` (> 2^250), canonical
//! 32-byte encodings for both points and scalars, and decoding that rejects
//! anything off the group. The mock backend is the additive group of integers
//! modulo the prime 7919 with generator `P = 1`, so `a·P = a mod 7919` and
//! discrete logarithms fall to exhaustive search. The mock backend exists so
//! tests can check every protocol equation against brute-force oracles; it
//! offers no security whatsoever.
//!
//! All point operations go through a [`GroupProfile`] handle so that an
//! instrumented profile (see [`GroupProfile::instrumented`]) can count scalar
//! multiplications and point additions. Counting convention: every pairwise
//! group addition performed counts as one add, so a multi-add over `n` points
//! counts `n - 1` adds; fixed-base and variable-base multiplications count as
//! one multiplication each and are also tracked separately.
//!
//! Every value is immutable after construction and all operations are pure,
//! so unrestricted concurrent use is safe. Randomness is always injected by
//! the caller; the library never seeds its own generator.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use curve25519_dalek::constants::{RISTRETTO_BASEPOINT_POINT, RISTRETTO_BASEPOINT_TABLE};
use curve25519_dalek::ristretto::{CompressedRistretto, RistrettoPoint};
use curve25519_dalek::scalar::Scalar as RistrettoScalar;
use curve25519_dalek::traits::Identity;
use rand_core::{CryptoRng, RngCore};

use crate::error::{Error, Result};

/// Order of the mock group (and of its scalar field): a small prime chosen so
/// exhaustive discrete-log search is instant while accidental collisions in
/// tests stay unlikely.
pub const MOCK_GROUP_ORDER: u32 = 7919;

/// Identifies which backend a profile (and every value built under it) uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupId {
    /// ristretto255, 128-bit security, 32-byte encodings.
    Production,
    /// Integers mod 7919, test-only, 2-byte encodings.
    Mock,
}

/// Counters for group operations, attached to a profile by
/// [`GroupProfile::instrumented`].
#[derive(Debug, Default)]
pub struct OpCounter {
    point_muls: AtomicU64,
    fixed_base_muls: AtomicU64,
    point_adds: AtomicU64,
}

impl OpCounter {
    /// Zero all counters.
    pub fn reset(&self) {
        self.point_muls.store(0, Ordering::Relaxed);
        self.fixed_base_muls.store(0, Ordering::Relaxed);
        self.point_adds.store(0, Ordering::Relaxed);
    }

    /// Read the current counter values.
    pub fn snapshot(&self) -> OpCounts {
        OpCounts {
            point_muls: self.point_muls.load(Ordering::Relaxed),
            fixed_base_muls: self.fixed_base_muls.load(Ordering::Relaxed),
            point_adds: self.point_adds.load(Ordering::Relaxed),
        }
    }
}

/// A snapshot of an [`OpCounter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpCounts {
    /// Variable-base scalar multiplications.
    pub point_muls: u64,
    /// Fixed-base (generator) scalar multiplications.
    pub fixed_base_muls: u64,
    /// Pairwise point additions (including subtractions).
    pub point_adds: u64,
}

impl OpCounts {
    /// Scalar multiplications of either kind.
    pub fn total_muls(&self) -> u64 {
        self.point_muls + self.fixed_base_muls
    }
}

/// Handle to a group backend, optionally instrumented with an [`OpCounter`].
///
/// Cloning is cheap; clones of an instrumented profile share its counter.
#[derive(Clone)]
pub struct GroupProfile {
    id: GroupId,
    counter: Option<Arc<OpCounter>>,
}

impl fmt::Debug for GroupProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupProfile")
            .field("id", &self.id)
            .field("instrumented", &self.counter.is_some())
            .finish()
    }
}

impl PartialEq for GroupProfile {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for GroupProfile {}

/// A scalar in `[0, q)` for the profile's group order `q`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Scalar(ScalarRepr);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ScalarRepr {
    Production(RistrettoScalar),
    Mock(u16),
}

/// An element of the profile's group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GroupPoint(PointRepr);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum PointRepr {
    Production(RistrettoPoint),
    Mock(u16),
}

fn mixed() -> ! {
    panic!("group values from different profiles used in one operation")
}

fn mock_reduce_u64(v: u64) -> u16 {
    (v % MOCK_GROUP_ORDER as u64) as u16
}

/// Reduce a little-endian byte string modulo the mock order. Processes the
/// bytes from the most significant end so it agrees with ordinary big-integer
/// reduction.
fn mock_reduce_le_bytes(bytes: &[u8]) -> u16 {
    let mut acc: u32 = 0;
    for &b in bytes.iter().rev() {
        acc = (acc * 256 + b as u32) % MOCK_GROUP_ORDER;
    }
    acc as u16
}

impl GroupProfile {
    /// The production ristretto255 profile.
    pub fn production() -> Self {
        GroupProfile {
            id: GroupId::Production,
            counter: None,
        }
    }

    /// The test-only mock profile (integers mod 7919, generator 1).
    pub fn mock() -> Self {
        GroupProfile {
            id: GroupId::Mock,
            counter: None,
        }
    }

    /// Profile for a backend identifier.
    pub fn new(id: GroupId) -> Self {
        GroupProfile { id, counter: None }
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    /// Wrap this profile with a fresh operation counter. The returned profile
    /// has identical semantics; every point operation routed through it is
    /// tallied in the returned counter.
    pub fn instrumented(&self) -> (Self, Arc<OpCounter>) {
        let counter = Arc::new(OpCounter::default());
        let profile = GroupProfile {
            id: self.id,
            counter: Some(Arc::clone(&counter)),
        };
        (profile, counter)
    }

    /// Length in bytes of an encoded point.
    pub fn point_len(&self) -> usize {
        match self.id {
            GroupId::Production => 32,
            GroupId::Mock => 2,
        }
    }

    /// Length in bytes of an encoded scalar.
    pub fn scalar_len(&self) -> usize {
        match self.id {
            GroupId::Production => 32,
            GroupId::Mock => 2,
        }
    }

    /// Bit length of the group order.
    pub fn order_bits(&self) -> u32 {
        match self.id {
            // 2^252 < q < 2^253
            GroupId::Production => 253,
            // 2^12 < 7919 < 2^13
            GroupId::Mock => 13,
        }
    }

    fn bump_mul(&self) {
        if let Some(c) = &self.counter {
            c.point_muls.fetch_add(1, Ordering::Relaxed);
        }
    }

    fn bump_fixed_base(&self) {
        if let Some(c) = &self.counter {
            c.fixed_base_muls.fetch_add(1, Ordering::Relaxed);
        }
    }

    fn bump_add(&self) {
        if let Some(c) = &self.counter {
            c.point_adds.fetch_add(1, Ordering::Relaxed);
        }
    }

    /// Uniform scalar in `[0, q)`: draws 64 bytes from `rng` and reduces the
    /// little-endian value mod `q`, so the bias is below `2^-250` even for
    /// the production order. Entropy failures surface as panics from the
    /// caller-supplied generator.
    pub fn scalar_random(&self, rng: &mut (impl RngCore + CryptoRng)) -> Scalar {
        let mut wide = [0u8; 64];
        rng.fill_bytes(&mut wide);
        self.scalar_from_wide_bytes(&wide)
    }

    /// Interpret 64 little-endian bytes as an integer and reduce it mod `q`.
    pub fn scalar_from_wide_bytes(&self, wide: &[u8; 64]) -> Scalar {
        match self.id {
            GroupId::Production => Scalar(ScalarRepr::Production(
                RistrettoScalar::from_bytes_mod_order_wide(wide),
            )),
            GroupId::Mock => Scalar(ScalarRepr::Mock(mock_reduce_le_bytes(wide))),
        }
    }

    /// The scalar `v mod q`.
    pub fn scalar_from_u64(&self, v: u64) -> Scalar {
        match self.id {
            GroupId::Production => Scalar(ScalarRepr::Production(RistrettoScalar::from(v))),
            GroupId::Mock => Scalar(ScalarRepr::Mock(mock_reduce_u64(v))),
        }
    }

    pub fn scalar_zero(&self) -> Scalar {
        self.scalar_from_u64(0)
    }

    /// The group generator `P`.
    pub fn generator(&self) -> GroupPoint {
        match self.id {
            GroupId::Production => GroupPoint(PointRepr::Production(RISTRETTO_BASEPOINT_POINT)),
            GroupId::Mock => GroupPoint(PointRepr::Mock(1)),
        }
    }

    /// The identity element.
    pub fn identity(&self) -> GroupPoint {
        match self.id {
            GroupId::Production => GroupPoint(PointRepr::Production(RistrettoPoint::identity())),
            GroupId::Mock => GroupPoint(PointRepr::Mock(0)),
        }
    }

    /// Variable-base scalar multiplication `a·X`.
    pub fn mul(&self, a: &Scalar, x: &GroupPoint) -> GroupPoint {
        self.bump_mul();
        match (&a.0, &x.0) {
            (ScalarRepr::Production(a), PointRepr::Production(x)) => {
                GroupPoint(PointRepr::Production(a * x))
            }
            (ScalarRepr::Mock(a), PointRepr::Mock(x)) => GroupPoint(PointRepr::Mock(
                mock_reduce_u64(*a as u64 * *x as u64),
            )),
            _ => mixed(),
        }
    }

    /// Fixed-base scalar multiplication `a·P` (uses the precomputed generator
    /// table on the production backend).
    pub fn mul_base(&self, a: &Scalar) -> GroupPoint {
        self.bump_fixed_base();
        match &a.0 {
            ScalarRepr::Production(a) => {
                GroupPoint(PointRepr::Production(a * RISTRETTO_BASEPOINT_TABLE))
            }
            ScalarRepr::Mock(a) => GroupPoint(PointRepr::Mock(*a)),
        }
    }

    /// Point addition `X + Y`.
    pub fn add(&self, x: &GroupPoint, y: &GroupPoint) -> GroupPoint {
        self.bump_add();
        match (&x.0, &y.0) {
            (PointRepr::Production(x), PointRepr::Production(y)) => {
                GroupPoint(PointRepr::Production(x + y))
            }
            (PointRepr::Mock(x), PointRepr::Mock(y)) => GroupPoint(PointRepr::Mock(
                mock_reduce_u64(*x as u64 + *y as u64),
            )),
            _ => mixed(),
        }
    }

    /// Point subtraction `X - Y`, counted as an addition.
    pub fn sub(&self, x: &GroupPoint, y: &GroupPoint) -> GroupPoint {
        self.bump_add();
        match (&x.0, &y.0) {
            (PointRepr::Production(x), PointRepr::Production(y)) => {
                GroupPoint(PointRepr::Production(x - y))
            }
            (PointRepr::Mock(x), PointRepr::Mock(y)) => GroupPoint(PointRepr::Mock(
                mock_reduce_u64(*x as u64 + (MOCK_GROUP_ORDER - *y as u32) as u64),
            )),
            _ => mixed(),
        }
    }

    /// Sum of a sequence of points; the empty sum is the identity. Performs
    /// and counts `n - 1` pairwise additions for `n` points.
    pub fn multi_add<I: IntoIterator<Item = GroupPoint>>(&self, points: I) -> GroupPoint {
        let mut iter = points.into_iter();
        let Some(first) = iter.next() else {
            return self.identity();
        };
        iter.fold(first, |acc, p| self.add(&acc, &p))
    }

    /// Canonical encoding of a point (`point_len` bytes).
    pub fn encode_point(&self, x: &GroupPoint) -> Vec<u8> {
        match &x.0 {
            PointRepr::Production(p) => p.compress().to_bytes().to_vec(),
            PointRepr::Mock(v) => v.to_le_bytes().to_vec(),
        }
    }

    /// Decode a point, rejecting wrong lengths and off-group encodings with
    /// distinct errors.
    pub fn decode_point(&self, bytes: &[u8]) -> Result<GroupPoint> {
        if bytes.len() != self.point_len() {
            return Err(Error::LengthMismatch {
                expected: self.point_len(),
                got: bytes.len(),
            });
        }
        match self.id {
            GroupId::Production => {
                let mut buf = [0u8; 32];
                buf.copy_from_slice(bytes);
                CompressedRistretto(buf)
                    .decompress()
                    .map(|p| GroupPoint(PointRepr::Production(p)))
                    .ok_or(Error::InvalidPoint)
            }
            GroupId::Mock => {
                let v = u16::from_le_bytes([bytes[0], bytes[1]]);
                if (v as u32) < MOCK_GROUP_ORDER {
                    Ok(GroupPoint(PointRepr::Mock(v)))
                } else {
                    Err(Error::InvalidPoint)
                }
            }
        }
    }

    /// Canonical little-endian encoding of a scalar (`scalar_len` bytes).
    pub fn encode_scalar(&self, s: &Scalar) -> Vec<u8> {
        match &s.0 {
            ScalarRepr::Production(s) => s.to_bytes().to_vec(),
            ScalarRepr::Mock(v) => v.to_le_bytes().to_vec(),
        }
    }

    /// Decode a scalar, requiring canonical (fully reduced) form.
    pub fn decode_scalar(&self, bytes: &[u8]) -> Result<Scalar> {
        if bytes.len() != self.scalar_len() {
            return Err(Error::LengthMismatch {
                expected: self.scalar_len(),
                got: bytes.len(),
            });
        }
        match self.id {
            GroupId::Production => {
                let mut buf = [0u8; 32];
                buf.copy_from_slice(bytes);
                let maybe: Option<RistrettoScalar> =
                    RistrettoScalar::from_canonical_bytes(buf).into();
                maybe
                    .map(|s| Scalar(ScalarRepr::Production(s)))
                    .ok_or(Error::InvalidScalar)
            }
            GroupId::Mock => {
                let v = u16::from_le_bytes([bytes[0], bytes[1]]);
                if (v as u32) < MOCK_GROUP_ORDER {
                    Ok(Scalar(ScalarRepr::Mock(v)))
                } else {
                    Err(Error::InvalidScalar)
                }
            }
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match &self.0 {
            ScalarRepr::Production(s) => s == &RistrettoScalar::ZERO,
            ScalarRepr::Mock(v) => *v == 0,
        }
    }

    /// Mock-profile value, for exhaustive test oracles.
    ///
    /// Panics on production scalars.
    pub fn mock_value(&self) -> u16 {
        match self.0 {
            ScalarRepr::Mock(v) => v,
            ScalarRepr::Production(_) => panic!("mock_value called on a production scalar"),
        }
    }
}

impl GroupPoint {
    /// Mock-profile value, for exhaustive test oracles.
    ///
    /// Panics on production points.
    pub fn mock_value(&self) -> u16 {
        match self.0 {
            PointRepr::Mock(v) => v,
            PointRepr::Production(_) => panic!("mock_value called on a production point"),
        }
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match (self.0, rhs.0) {
            (ScalarRepr::Production(a), ScalarRepr::Production(b)) => {
                Scalar(ScalarRepr::Production(a + b))
            }
            (ScalarRepr::Mock(a), ScalarRepr::Mock(b)) => {
                Scalar(ScalarRepr::Mock(mock_reduce_u64(a as u64 + b as u64)))
            }
            _ => mixed(),
        }
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        match (self.0, rhs.0) {
            (ScalarRepr::Production(a), ScalarRepr::Production(b)) => {
                Scalar(ScalarRepr::Production(a - b))
            }
            (ScalarRepr::Mock(a), ScalarRepr::Mock(b)) => Scalar(ScalarRepr::Mock(
                mock_reduce_u64(a as u64 + (MOCK_GROUP_ORDER - b as u32) as u64),
            )),
            _ => mixed(),
        }
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self.0, rhs.0) {
            (ScalarRepr::Production(a), ScalarRepr::Production(b)) => {
                Scalar(ScalarRepr::Production(a * b))
            }
            (ScalarRepr::Mock(a), ScalarRepr::Mock(b)) => {
                Scalar(ScalarRepr::Mock(mock_reduce_u64(a as u64 * b as u64)))
            }
            _ => mixed(),
        }
    }
}
