//! Shared helpers for the in-crate unit tests.

use rand_core::{CryptoRng, RngCore};

/// Deterministic byte-stream rng: replays a fixed byte string, then zeros.
/// Used to force specific scalar draws through the wide-reduction path.
pub(crate) struct StreamRng {
    bytes: Vec<u8>,
    pos: usize,
}

impl StreamRng {
    pub(crate) fn new(bytes: Vec<u8>) -> Self {
        StreamRng { bytes, pos: 0 }
    }
}

impl RngCore for StreamRng {
    fn next_u32(&mut self) -> u32 {
        let mut b = [0u8; 4];
        self.fill_bytes(&mut b);
        u32::from_le_bytes(b)
    }

    fn next_u64(&mut self) -> u64 {
        let mut b = [0u8; 8];
        self.fill_bytes(&mut b);
        u64::from_le_bytes(b)
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        for d in dest.iter_mut() {
            *d = if self.pos < self.bytes.len() {
                let b = self.bytes[self.pos];
                self.pos += 1;
                b
            } else {
                0
            };
        }
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand_core::Error> {
        self.fill_bytes(dest);
        Ok(())
    }
}

impl CryptoRng for StreamRng {}

/// Rng whose successive 64-byte wide draws reduce to the given small values
/// on any profile (each value is placed in the low bytes of its own 64-byte
/// block).
pub(crate) fn scripted_scalars(values: &[u16]) -> StreamRng {
    let mut bytes = Vec::with_capacity(values.len() * 64);
    for &v in values {
        let mut wide = [0u8; 64];
        wide[..2].copy_from_slice(&v.to_le_bytes());
        bytes.extend_from_slice(&wide);
    }
    StreamRng::new(bytes)
}
