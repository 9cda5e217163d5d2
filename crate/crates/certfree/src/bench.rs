//! Desk-scale measurement harness: wall-clock timings, group-operation
//! counts, and wire sizes per operation, as aligned text or JSON rows.
//!
//! Only this library's own operations are measured; no counterpart schemes
//! are benchmarked, and absolute microsecond numbers are whatever the host
//! and group backend deliver. The operation counts are hardware-independent
//! and use the documented convention: every pairwise point addition counts
//! one add (a multi-add over `n` points counts `n - 1`), and fixed-base and
//! variable-base multiplications count one multiplication each.
//!
//! Offline authority operations (setup and the key-generation steps) run a
//! tenth of the requested iterations since setup alone costs `t` fixed-base
//! multiplications; the online operations run the full count.

use std::time::Instant;

use rand_core::{CryptoRng, RngCore};
use serde::Serialize;

use crate::authority::{setup, KeyAuthority, SystemParams};
use crate::crypto::{decrypt, encrypt, kex_finalize, kex_init, sign, verify, KexRole};
use crate::error::{Error, Result};
use crate::group::GroupId;
use crate::user::{user_key_gen, user_setup, UserCredential};
use crate::wire::size_report;

/// Message length used for the encryption rows.
const BENCH_MSG_LEN: usize = 32;

/// Coefficient-of-variation threshold above which a timing row is flagged.
const CV_WARN_PERCENT: f64 = 25.0;

/// One measured operation.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub op: String,
    pub iterations: usize,
    pub median_us: f64,
    pub mean_us: f64,
    /// Standard deviation over the mean, in percent.
    pub cv_percent: f64,
    pub muls: u64,
    pub fixed_base_muls: u64,
    pub adds: u64,
    /// Wire payload bytes this operation produces, when it produces one.
    pub bytes: Option<usize>,
}

/// Full harness output.
#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub t: u32,
    pub k: u32,
    pub n_bits: u16,
    pub rows: Vec<BenchRow>,
    pub notes: Vec<String>,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "configuration: t={}, k={}, n={} bits",
            self.t, self.k, self.n_bits
        )?;
        writeln!(
            f,
            "{:<16} {:>6} {:>12} {:>12} {:>8} {:>6} {:>6} {:>6} {:>8}",
            "op", "iters", "median_us", "mean_us", "cv_%", "muls", "fbmul", "adds", "bytes"
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "{:<16} {:>6} {:>12.2} {:>12.2} {:>8.1} {:>6} {:>6} {:>6} {:>8}",
                row.op,
                row.iterations,
                row.median_us,
                row.mean_us,
                row.cv_percent,
                row.muls,
                row.fixed_base_muls,
                row.adds,
                row.bytes.map_or_else(|| "-".into(), |b| b.to_string()),
            )?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}

struct Timings {
    median_us: f64,
    mean_us: f64,
    cv_percent: f64,
}

fn time_loop(iterations: usize, mut f: impl FnMut()) -> Timings {
    let mut samples = Vec::with_capacity(iterations);
    for _ in 0..iterations {
        let start = Instant::now();
        f();
        samples.push(start.elapsed().as_secs_f64() * 1e6);
    }
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median_us = if samples.len() % 2 == 1 {
        samples[samples.len() / 2]
    } else {
        (samples[samples.len() / 2 - 1] + samples[samples.len() / 2]) / 2.0
    };
    let mean_us = samples.iter().sum::<f64>() / samples.len() as f64;
    let variance = samples
        .iter()
        .map(|s| (s - mean_us).powi(2))
        .sum::<f64>()
        / samples.len() as f64;
    let cv_percent = if mean_us > 0.0 {
        variance.sqrt() / mean_us * 100.0
    } else {
        0.0
    };
    Timings {
        median_us,
        mean_us,
        cv_percent,
    }
}

/// Run the harness: per-operation median and mean wall-clock times over
/// `iterations` runs, operation counts from one instrumented run each, and
/// expected wire sizes.
///
/// Requires the production profile (mock timings would be meaningless) and
/// at least 100 iterations.
pub fn run_bench(
    iterations: usize,
    params: &SystemParams,
    rng: &mut (impl RngCore + CryptoRng),
) -> Result<BenchReport> {
    if params.profile().id() != GroupId::Production {
        return Err(Error::InvalidParams(
            "benchmarking requires the production profile".into(),
        ));
    }
    if iterations < 100 {
        return Err(Error::InvalidParams(format!(
            "need at least 100 iterations, got {iterations}"
        )));
    }

    let offline_iters = (iterations / 10).max(10);
    let sizes = size_report(params);
    let mut rows = Vec::new();
    let mut notes = vec![
        "op counts: one pairwise point addition per add; multi-add over n points counts n-1; \
         fixed-base multiplications are included in `muls` and repeated in `fbmul`"
            .to_string(),
        format!(
            "offline rows (setup, extract, part_key_gen, user_key_gen) run {offline_iters} \
             iterations; online rows run {iterations}"
        ),
        format!("encryption rows use {BENCH_MSG_LEN}-byte messages"),
    ];

    // fixtures
    let authority = KeyAuthority::new(params.clone(), rng);
    let alice = UserCredential::from_identity_based(
        "bench-alice",
        authority.extract("bench-alice", rng)?,
    )?;
    let bob_user = user_setup(params, rng);
    let bob_partial = authority.part_key_gen("bench-bob", bob_user.commitment(), rng)?;
    let bob = user_key_gen(
        "bench-bob",
        &bob_user,
        bob_partial,
        authority.master_public(),
        params,
    )?;
    let msg = vec![0xa5u8; BENCH_MSG_LEN];
    let ct = encrypt(
        &msg,
        alice.id(),
        alice.q_point(),
        authority.master_public(),
        params,
        rng,
    );
    let sig = sign(&msg, &alice, params, rng);

    // instrumented single runs for counts
    let (counted_params, counter) = params.instrumented();
    let counted_authority = KeyAuthority::new(counted_params.clone(), rng);
    let counted_alice = UserCredential::from_identity_based(
        "bench-alice",
        counted_authority.extract("bench-alice", rng)?,
    )?;

    let counts_of = |counter: &crate::group::OpCounter, f: &mut dyn FnMut()| {
        counter.reset();
        f();
        counter.snapshot()
    };

    let row = |op: &str,
                   iters: usize,
                   timings: Timings,
                   counts: crate::group::OpCounts,
                   bytes: Option<usize>| {
        BenchRow {
            op: op.to_string(),
            iterations: iters,
            median_us: timings.median_us,
            mean_us: timings.mean_us,
            cv_percent: timings.cv_percent,
            muls: counts.total_muls(),
            fixed_base_muls: counts.fixed_base_muls,
            adds: counts.point_adds,
            bytes,
        }
    };

    // setup
    {
        let timings = time_loop(offline_iters, || {
            let _ = setup(params, rng);
        });
        let counts = counts_of(&counter, &mut || {
            let _ = setup(&counted_params, rng);
        });
        rows.push(row("setup", offline_iters, timings, counts, Some(sizes.mpk)));
    }

    // extract
    {
        let timings = time_loop(offline_iters, || {
            let _ = authority.extract("bench-alice", rng).unwrap();
        });
        let counts = counts_of(&counter, &mut || {
            let _ = counted_authority.extract("bench-alice", rng).unwrap();
        });
        rows.push(row(
            "extract",
            offline_iters,
            timings,
            counts,
            Some(sizes.partial_key),
        ));
    }

    // part_key_gen + user_key_gen
    {
        let timings = time_loop(offline_iters, || {
            let _ = authority
                .part_key_gen("bench-bob", bob_user.commitment(), rng)
                .unwrap();
        });
        let counted_user = user_setup(&counted_params, rng);
        let counts = counts_of(&counter, &mut || {
            let _ = counted_authority
                .part_key_gen("bench-bob", counted_user.commitment(), rng)
                .unwrap();
        });
        rows.push(row(
            "part_key_gen",
            offline_iters,
            timings,
            counts,
            Some(sizes.partial_key),
        ));

        let timings = time_loop(offline_iters, || {
            let partial = authority
                .part_key_gen("bench-bob", bob_user.commitment(), rng)
                .unwrap();
            let _ = user_key_gen(
                "bench-bob",
                &bob_user,
                partial,
                authority.master_public(),
                params,
            )
            .unwrap();
        });
        let counted_partial = counted_authority
            .part_key_gen("bench-bob", counted_user.commitment(), rng)
            .unwrap();
        let counts = counts_of(&counter, &mut || {
            let _ = user_key_gen(
                "bench-bob",
                &counted_user,
                counted_partial.clone(),
                counted_authority.master_public(),
                &counted_params,
            )
            .unwrap();
        });
        rows.push(row(
            "user_key_gen",
            offline_iters,
            timings,
            counts,
            Some(sizes.credential(9)),
        ));
    }

    // encrypt / decrypt
    {
        let timings = time_loop(iterations, || {
            let _ = encrypt(
                &msg,
                alice.id(),
                alice.q_point(),
                authority.master_public(),
                params,
                rng,
            );
        });
        let counts = counts_of(&counter, &mut || {
            let _ = encrypt(
                &msg,
                counted_alice.id(),
                counted_alice.q_point(),
                counted_authority.master_public(),
                &counted_params,
                rng,
            );
        });
        rows.push(row(
            "encrypt",
            iterations,
            timings,
            counts,
            Some(sizes.ciphertext(BENCH_MSG_LEN)),
        ));

        let timings = time_loop(iterations, || {
            let _ = decrypt(&alice, &ct, params).unwrap();
        });
        let counted_ct = encrypt(
            &msg,
            counted_alice.id(),
            counted_alice.q_point(),
            counted_authority.master_public(),
            &counted_params,
            rng,
        );
        let counts = counts_of(&counter, &mut || {
            let _ = decrypt(&counted_alice, &counted_ct, &counted_params).unwrap();
        });
        rows.push(row("decrypt", iterations, timings, counts, None));
    }

    // sign / verify
    {
        let timings = time_loop(iterations, || {
            let _ = sign(&msg, &alice, params, rng);
        });
        let counts = counts_of(&counter, &mut || {
            let _ = sign(&msg, &counted_alice, &counted_params, rng);
        });
        rows.push(row("sign", iterations, timings, counts, Some(sizes.signature)));

        let timings = time_loop(iterations, || {
            assert!(verify(
                &msg,
                alice.id(),
                alice.q_point(),
                authority.master_public(),
                params,
                &sig
            ));
        });
        let counted_sig = sign(&msg, &counted_alice, &counted_params, rng);
        let counts = counts_of(&counter, &mut || {
            let _ = verify(
                &msg,
                counted_alice.id(),
                counted_alice.q_point(),
                counted_authority.master_public(),
                &counted_params,
                &counted_sig,
            );
        });
        rows.push(row("verify", iterations, timings, counts, None));
    }

    // key exchange, one user's side: init plus finalize
    {
        let peer_eph = kex_init(params, rng);
        let peer_msg = peer_eph.message(&bob);
        let timings = time_loop(iterations, || {
            let eph = kex_init(params, rng);
            let _ = kex_finalize(
                &alice,
                eph,
                "bench-bob",
                &peer_msg,
                authority.master_public(),
                params,
                KexRole::Initiator,
            );
        });
        let counts = counts_of(&counter, &mut || {
            let eph = kex_init(&counted_params, rng);
            let _ = kex_finalize(
                &counted_alice,
                eph,
                "bench-bob",
                &peer_msg,
                counted_authority.master_public(),
                &counted_params,
                KexRole::Initiator,
            );
        });
        rows.push(row(
            "kex_user_side",
            iterations,
            timings,
            counts,
            Some(sizes.kex_message),
        ));
    }

    for r in &rows {
        if r.cv_percent > CV_WARN_PERCENT {
            notes.push(format!(
                "timing variance for `{}` is {:.1}% (> {CV_WARN_PERCENT:.0}%); treat its numbers \
                 as noisy (thermal or scheduler interference)",
                r.op, r.cv_percent
            ));
        }
    }

    Ok(BenchReport {
        t: params.t(),
        k: params.k(),
        n_bits: params.n_bits(),
        rows,
        notes,
    })
}
