//! `certfree`: operator CLI for the certfree library.
//!
//! All state lives in explicit files (`.cfc` containers); nothing is read
//! from or written to home directories. Status chatter goes to stderr,
//! stdout carries only data (derived public values, audit numbers, bench
//! tables, or `--stdout` plaintext), and every failure maps to a documented
//! exit code with a machine-parsable `code=` line on stderr.
//!
//! Exit codes:
//!   0  success / signature verified
//!   1  I/O or usage failure
//!   2  invalid parameters or identity / audit below the security target
//!   3  partial-key binding check failed
//!   4  decryption failure
//!   5  signature verification returned false
//!   6  malformed container (magic, version, kind, digest, length, trailing)
//!   7  invalid group-element or hex encoding

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::OsRng;

use certfree::{
    decrypt, encrypt, kex_finalize, kex_init, run_bench, security_level, sign, to_bytes,
    user_key_gen, user_setup, verify, Ciphertext, Error as LibError, GroupId, GroupPoint,
    GroupProfile, KexEphemeral, KexMessage, KexRole, KeyAuthority, MasterPublicKey,
    MasterSecretKey, PartialKey, Signature, SystemParams, UserCredential, UserSecret,
    WireArtifact,
};

const ENV_PROFILE: &str = "CERTFREE_PROFILE";

#[derive(Parser)]
#[command(
    name = "certfree",
    version,
    about = "Compatible identity-based and certificateless encryption, signatures, and key exchange"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Paths shared by most subcommands. Conventional filenames inside `--dir`
/// are used unless overridden.
#[derive(Args)]
struct Locations {
    /// Directory holding params.cfc, mpk.cfc, and msk.cfc
    #[arg(long, default_value = ".")]
    dir: PathBuf,
    /// System parameters file (default: <dir>/params.cfc)
    #[arg(long)]
    params: Option<PathBuf>,
    /// Master public key file (default: <dir>/mpk.cfc)
    #[arg(long)]
    mpk: Option<PathBuf>,
    /// Master secret key file (default: <dir>/msk.cfc)
    #[arg(long)]
    msk: Option<PathBuf>,
}

impl Locations {
    fn params_path(&self) -> PathBuf {
        self.params.clone().unwrap_or_else(|| self.dir.join("params.cfc"))
    }

    fn mpk_path(&self) -> PathBuf {
        self.mpk.clone().unwrap_or_else(|| self.dir.join("mpk.cfc"))
    }

    fn msk_path(&self) -> PathBuf {
        self.msk.clone().unwrap_or_else(|| self.dir.join("msk.cfc"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Production,
    Mock,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Initiator,
    Responder,
}

#[derive(Subcommand)]
enum Command {
    /// Generate system parameters and the master key pair
    Setup {
        /// Master key vector length (power of two)
        #[arg(long, default_value_t = 1024)]
        t: u32,
        /// Components selected per identity
        #[arg(long, default_value_t = 18)]
        k: u32,
        /// Symmetric space size in bits (128 or 256)
        #[arg(long, default_value_t = 128)]
        n: u16,
        /// Group backend; defaults to $CERTFREE_PROFILE, then production
        #[arg(long, value_enum)]
        profile: Option<ProfileArg>,
        /// Output directory for params.cfc, mpk.cfc, msk.cfc
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Issue an identity-based credential (authority side)
    Extract {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        locations: Locations,
        /// Credential output file
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a certificateless user secret and commitment
    UserSetup {
        #[command(flatten)]
        locations: Locations,
        /// User secret output file
        #[arg(long)]
        out: PathBuf,
    },
    /// Issue a certificateless partial key for a user commitment (authority side)
    PartKey {
        #[arg(long)]
        id: String,
        /// The user's commitment U, hex-encoded
        #[arg(long)]
        commitment: String,
        #[command(flatten)]
        locations: Locations,
        /// Partial key output file
        #[arg(long)]
        out: PathBuf,
    },
    /// Finalize a certificateless credential from a partial key (user side)
    Finalize {
        #[arg(long)]
        id: String,
        /// User secret file from user-setup
        #[arg(long)]
        user_secret: PathBuf,
        /// Partial key file from part-key
        #[arg(long)]
        partial: PathBuf,
        #[command(flatten)]
        locations: Locations,
        /// Credential output file
        #[arg(long)]
        out: PathBuf,
    },
    /// Encrypt a file to an identity
    Encrypt {
        /// Recipient identity
        #[arg(long)]
        to_id: String,
        /// Recipient public point Q, hex-encoded
        #[arg(long)]
        to_q: String,
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        locations: Locations,
    },
    /// Decrypt a ciphertext file
    Decrypt {
        /// Credential file
        #[arg(long)]
        cred: PathBuf,
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        /// Plaintext output file (required unless --stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the plaintext to stdout instead of a file
        #[arg(long)]
        stdout: bool,
        #[command(flatten)]
        locations: Locations,
    },
    /// Sign a file
    Sign {
        #[arg(long)]
        cred: PathBuf,
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long)]
        out_sig: PathBuf,
        #[command(flatten)]
        locations: Locations,
    },
    /// Verify a signature over a file
    Verify {
        /// Signer identity
        #[arg(long)]
        id: String,
        /// Signer public point Q, hex-encoded
        #[arg(long)]
        q: String,
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long)]
        sig: PathBuf,
        #[command(flatten)]
        locations: Locations,
    },
    /// Start a key exchange: write the outgoing message and the ephemeral state
    KexInit {
        #[arg(long)]
        cred: PathBuf,
        /// Outgoing (M, Q) message file
        #[arg(long)]
        out_msg: PathBuf,
        /// Ephemeral state file, needed again by kex-finalize
        #[arg(long)]
        out_eph: PathBuf,
        #[command(flatten)]
        locations: Locations,
    },
    /// Complete a key exchange and write the 32-byte session key
    KexFinalize {
        #[arg(long)]
        cred: PathBuf,
        /// Ephemeral state file from kex-init
        #[arg(long)]
        eph: PathBuf,
        #[arg(long)]
        peer_id: String,
        /// Peer (M, Q) message file
        #[arg(long)]
        peer_msg: PathBuf,
        #[arg(long, value_enum)]
        role: RoleArg,
        /// Session key output file (32 raw bytes)
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        locations: Locations,
    },
    /// Score a (t, k) choice and fail below the security target
    ParamsAudit {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u32,
        /// Adversary H1-query budget, in bits (level is reduced by this)
        #[arg(long, default_value_t = 0.0)]
        budget_bits: f64,
        /// Minimum acceptable level in bits
        #[arg(long, default_value_t = 128.0)]
        min_bits: f64,
    },
    /// Measure per-operation timings, op counts, and sizes
    Bench {
        #[arg(long, default_value_t = 1000)]
        iters: usize,
        #[arg(long, default_value_t = 1024)]
        t: u32,
        #[arg(long, default_value_t = 18)]
        k: u32,
        /// Also write the report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum CliError {
    Lib(LibError),
    Io { path: PathBuf, message: String },
    Hex(String),
    Usage(String),
    VerifyFailed,
    BelowSecurityTarget { bits: f64, min_bits: f64 },
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.code(),
            CliError::Io { .. } => "io_error",
            CliError::Hex(_) => "invalid_hex",
            CliError::Usage(_) => "usage_error",
            CliError::VerifyFailed => "verify_failed",
            CliError::BelowSecurityTarget { .. } => "below_security_target",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) => match e {
                LibError::InvalidParams(_) | LibError::InvalidIdentity(_) => 2,
                LibError::BindingCheckFailed => 3,
                LibError::DecryptionFailed => 4,
                LibError::BadMagic
                | LibError::BadVersion(_)
                | LibError::BadKind(_)
                | LibError::ParamsDigestMismatch
                | LibError::LengthMismatch { .. }
                | LibError::TrailingBytes(_) => 6,
                LibError::InvalidPoint | LibError::InvalidScalar => 7,
            },
            CliError::Io { .. } | CliError::Usage(_) => 1,
            CliError::Hex(_) => 7,
            CliError::VerifyFailed => 5,
            CliError::BelowSecurityTarget { .. } => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::Hex(msg) => write!(f, "{msg}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::VerifyFailed => write!(f, "signature did not verify"),
            CliError::BelowSecurityTarget { bits, min_bits } => {
                write!(f, "security level {bits:.4} bits is below the target {min_bits:.1}")
            }
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_file(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| CliError::Io {
        path: path.to_owned(),
        message: e.to_string(),
    })
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes).map_err(|e| CliError::Io {
        path: path.to_owned(),
        message: e.to_string(),
    })
}

/// Write with owner-only permissions; the file holds secret material.
fn write_secret_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    write_file(path, bytes)?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        fs::set_permissions(path, fs::Permissions::from_mode(0o600)).map_err(|e| {
            CliError::Io {
                path: path.to_owned(),
                message: e.to_string(),
            }
        })?;
    }
    Ok(())
}

fn load_params(locations: &Locations) -> CliResult<SystemParams> {
    let path = locations.params_path();
    Ok(certfree::read_system_params(&read_file(&path)?)?)
}

fn load_artifact<T: WireArtifact>(path: &Path, params: &SystemParams) -> CliResult<T> {
    Ok(certfree::from_bytes::<T>(&read_file(path)?, params)?)
}

fn store_artifact<T: WireArtifact>(
    value: &T,
    params: &SystemParams,
    path: &Path,
) -> CliResult<()> {
    write_file(path, &to_bytes(value, params))
}

fn load_authority(locations: &Locations) -> CliResult<(SystemParams, KeyAuthority)> {
    let params = load_params(locations)?;
    let msk: MasterSecretKey = load_artifact(&locations.msk_path(), &params)?;
    let mpk: MasterPublicKey = load_artifact(&locations.mpk_path(), &params)?;
    let authority = KeyAuthority::from_key_pair(params.clone(), msk, mpk)?;
    Ok((params, authority))
}

fn load_mpk(locations: &Locations, params: &SystemParams) -> CliResult<MasterPublicKey> {
    load_artifact(&locations.mpk_path(), params)
}

fn decode_point_hex(hex_str: &str, params: &SystemParams) -> CliResult<GroupPoint> {
    let bytes = hex::decode(hex_str.trim())
        .map_err(|e| CliError::Hex(format!("not valid hex: {e}")))?;
    Ok(params.profile().decode_point(&bytes)?)
}

fn profile_from(arg: Option<ProfileArg>) -> CliResult<GroupProfile> {
    if let Some(arg) = arg {
        return Ok(match arg {
            ProfileArg::Production => GroupProfile::production(),
            ProfileArg::Mock => GroupProfile::mock(),
        });
    }
    match std::env::var(ENV_PROFILE) {
        Ok(value) => match value.as_str() {
            "production" => Ok(GroupProfile::production()),
            "mock" => Ok(GroupProfile::mock()),
            other => Err(CliError::Usage(format!(
                "{ENV_PROFILE} must be `production` or `mock`, got `{other}`"
            ))),
        },
        Err(_) => Ok(GroupProfile::production()),
    }
}

fn point_hex(point: &GroupPoint, params: &SystemParams) -> String {
    hex::encode(params.profile().encode_point(point))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Setup {
            t,
            k,
            n,
            profile,
            out_dir,
        } => {
            let profile = profile_from(profile)?;
            let params = SystemParams::new(profile, t, k, n)?;
            let authority = KeyAuthority::new(params.clone(), &mut OsRng);
            fs::create_dir_all(&out_dir).map_err(|e| CliError::Io {
                path: out_dir.clone(),
                message: e.to_string(),
            })?;
            write_file(&out_dir.join("params.cfc"), &certfree::write_system_params(&params))?;
            store_artifact(authority.master_public(), &params, &out_dir.join("mpk.cfc"))?;
            write_secret_file(
                &out_dir.join("msk.cfc"),
                &to_bytes(authority.master_secret(), &params),
            )?;
            eprintln!(
                "wrote params.cfc, mpk.cfc, msk.cfc to {} (t={t}, k={k}, n={n}, {})",
                out_dir.display(),
                match params.profile().id() {
                    GroupId::Production => "production",
                    GroupId::Mock => "mock",
                }
            );
            Ok(())
        }

        Command::Extract { id, locations, out } => {
            let (params, authority) = load_authority(&locations)?;
            let key = authority.extract(&id, &mut OsRng)?;
            let cred = UserCredential::from_identity_based(&id, key)?;
            write_secret_file(&out, &to_bytes(&cred, &params))?;
            println!("q={}", point_hex(cred.q_point(), &params));
            eprintln!("wrote identity-based credential for `{id}` to {}", out.display());
            Ok(())
        }

        Command::UserSetup { locations, out } => {
            let params = load_params(&locations)?;
            let user = user_setup(&params, &mut OsRng);
            write_secret_file(&out, &to_bytes(&user, &params))?;
            println!("u={}", point_hex(user.commitment(), &params));
            eprintln!("wrote user secret to {}", out.display());
            Ok(())
        }

        Command::PartKey {
            id,
            commitment,
            locations,
            out,
        } => {
            let (params, authority) = load_authority(&locations)?;
            let u_point = decode_point_hex(&commitment, &params)?;
            let partial = authority.part_key_gen(&id, &u_point, &mut OsRng)?;
            write_secret_file(&out, &to_bytes(&partial, &params))?;
            println!("q={}", point_hex(partial.q_point(), &params));
            eprintln!("wrote partial key for `{id}` to {}", out.display());
            Ok(())
        }

        Command::Finalize {
            id,
            user_secret,
            partial,
            locations,
            out,
        } => {
            let params = load_params(&locations)?;
            let mpk = load_mpk(&locations, &params)?;
            let user: UserSecret = load_artifact(&user_secret, &params)?;
            let partial: PartialKey = load_artifact(&partial, &params)?;
            let cred = user_key_gen(&id, &user, partial, &mpk, &params)?;
            write_secret_file(&out, &to_bytes(&cred, &params))?;
            println!("q={}", point_hex(cred.q_point(), &params));
            eprintln!("wrote certificateless credential for `{id}` to {}", out.display());
            Ok(())
        }

        Command::Encrypt {
            to_id,
            to_q,
            r#in,
            out,
            locations,
        } => {
            let params = load_params(&locations)?;
            let mpk = load_mpk(&locations, &params)?;
            let q_point = decode_point_hex(&to_q, &params)?;
            let msg = read_file(&r#in)?;
            let ct = encrypt(&msg, &to_id, &q_point, &mpk, &params, &mut OsRng);
            store_artifact(&ct, &params, &out)?;
            eprintln!(
                "encrypted {} bytes for `{to_id}` to {}",
                msg.len(),
                out.display()
            );
            Ok(())
        }

        Command::Decrypt {
            cred,
            r#in,
            out,
            stdout,
            locations,
        } => {
            let params = load_params(&locations)?;
            let cred: UserCredential = load_artifact(&cred, &params)?;
            let ct: Ciphertext = load_artifact(&r#in, &params)?;
            let msg = decrypt(&cred, &ct, &params)?;
            if stdout {
                use std::io::Write;
                std::io::stdout()
                    .write_all(&msg)
                    .map_err(|e| CliError::Io {
                        path: PathBuf::from("<stdout>"),
                        message: e.to_string(),
                    })?;
            } else {
                let out = out.ok_or_else(|| {
                    CliError::Usage("either --out or --stdout is required".into())
                })?;
                write_file(&out, &msg)?;
                eprintln!("decrypted {} bytes to {}", msg.len(), out.display());
            }
            Ok(())
        }

        Command::Sign {
            cred,
            r#in,
            out_sig,
            locations,
        } => {
            let params = load_params(&locations)?;
            let cred: UserCredential = load_artifact(&cred, &params)?;
            let msg = read_file(&r#in)?;
            let sig = sign(&msg, &cred, &params, &mut OsRng);
            store_artifact(&sig, &params, &out_sig)?;
            eprintln!("signed {} bytes, signature in {}", msg.len(), out_sig.display());
            Ok(())
        }

        Command::Verify {
            id,
            q,
            r#in,
            sig,
            locations,
        } => {
            let params = load_params(&locations)?;
            let mpk = load_mpk(&locations, &params)?;
            let q_point = decode_point_hex(&q, &params)?;
            let msg = read_file(&r#in)?;
            let sig: Signature = load_artifact(&sig, &params)?;
            if verify(&msg, &id, &q_point, &mpk, &params, &sig) {
                println!("true");
                Ok(())
            } else {
                println!("false");
                Err(CliError::VerifyFailed)
            }
        }

        Command::KexInit {
            cred,
            out_msg,
            out_eph,
            locations,
        } => {
            let params = load_params(&locations)?;
            let cred: UserCredential = load_artifact(&cred, &params)?;
            let eph = kex_init(&params, &mut OsRng);
            let msg = eph.message(&cred);
            store_artifact(&msg, &params, &out_msg)?;
            // the ephemeral is a (scalar, commitment) pair, stored as a
            // user-secret artifact
            let stored = UserSecret::from_parts(*eph.z(), *eph.commitment());
            write_secret_file(&out_eph, &to_bytes(&stored, &params))?;
            eprintln!(
                "wrote kex message to {} and ephemeral state to {}",
                out_msg.display(),
                out_eph.display()
            );
            Ok(())
        }

        Command::KexFinalize {
            cred,
            eph,
            peer_id,
            peer_msg,
            role,
            out,
            locations,
        } => {
            let params = load_params(&locations)?;
            let mpk = load_mpk(&locations, &params)?;
            let cred: UserCredential = load_artifact(&cred, &params)?;
            let stored: UserSecret = load_artifact(&eph, &params)?;
            let eph = KexEphemeral::from_parts(*stored.alpha(), *stored.commitment());
            let peer: KexMessage = load_artifact(&peer_msg, &params)?;
            let role = match role {
                RoleArg::Initiator => KexRole::Initiator,
                RoleArg::Responder => KexRole::Responder,
            };
            let session = kex_finalize(&cred, eph, &peer_id, &peer, &mpk, &params, role);
            write_secret_file(&out, session.key())?;
            eprintln!("wrote 32-byte session key to {}", out.display());
            Ok(())
        }

        Command::ParamsAudit {
            t,
            k,
            budget_bits,
            min_bits,
        } => {
            // validate structure through the config layer
            certfree::HashConfig::new(t, k, 128)?;
            let budget = 2f64.powf(budget_bits);
            let bits = security_level(t, k, budget);
            println!("{bits:.4}");
            if bits < min_bits {
                return Err(CliError::BelowSecurityTarget { bits, min_bits });
            }
            Ok(())
        }

        Command::Bench { iters, t, k, json } => {
            let params = SystemParams::new(GroupProfile::production(), t, k, 128)?;
            let report = run_bench(iters, &params, &mut OsRng)?;
            print!("{report}");
            if let Some(path) = json {
                write_file(&path, report.to_json().as_bytes())?;
                eprintln!("wrote JSON report to {}", path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: code={} {err}", err.code());
            ExitCode::from(err.exit_code())
        }
    }
}
