//! `bpc`: build, check, pair and reduce bordered structures of (2,2n) torus links.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bordered_torus::algebra::Side;
use bordered_torus::diagram::{independent, periodic_domains, provincially_admissible};
use bordered_torus::format::{from_json, to_json, Serialized};
use bordered_torus::pairing::{box_d, box_dd, PairingConfig, DEFAULT_PATH_CAP};
use bordered_torus::solid_torus::SolidTorusSlope;
use bordered_torus::structures::{
    check_a, check_d, check_dd, homology_rank, reduce, reduce_with, verify_homotopy, Kind,
    Structure,
};
use bordered_torus::torus_link::{
    build_cfdd_full, build_cfdd_simplified, build_equivalence, build_log,
};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "bpc",
    version,
    about = "Bordered Floer computations for (2,2n) torus links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Full,
    Simplified,
}

#[derive(Subcommand)]
enum Command {
    /// Build the type-DD structure of the (2,2n) torus link complement.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "full")]
        form: Form,
        /// Output file; the build log goes to `<out>.log`. Defaults to stdout, log to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the structure equation (or A-infinity relation) of a serialized structure.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        /// Longest chord sequence examined for A-infinity modules.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Verify the homotopy equivalence between the full and simplified forms.
    Equiv {
        #[arg(long)]
        n: usize,
    },
    /// Glue solid tori to one or both boundary components.
    Pair {
        #[arg(long)]
        n: usize,
        /// Slope glued to the left boundary: `inf` or a positive integer.
        #[arg(long)]
        left: Option<SolidTorusSlope>,
        /// Slope glued to the right boundary: `inf` or a positive integer.
        #[arg(long)]
        right: Option<SolidTorusSlope>,
        /// Cancel unit arrows before writing.
        #[arg(long)]
        reduce: bool,
        /// Longest glued-side chord sequence a path may accumulate.
        #[arg(long, env = "BPC_CAP", default_value_t = DEFAULT_PATH_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cancel all unit arrows of a serialized structure.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cancel in a random order drawn from this seed instead of the canonical one.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Homology rank of a serialized chain complex.
    Homology {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print the periodic domains of the genus-2 diagram.
    Domains {
        #[arg(long)]
        n: usize,
    },
}

/// A command that ran to completion but found a verification failure.
#[derive(Debug)]
struct Failed;

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for Failed {}

fn read(path: &Path) -> Result<Serialized> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn verdict(ok: bool, report: String) -> Result<()> {
    if ok {
        println!("ok");
        Ok(())
    } else {
        print!("{report}");
        Err(Failed.into())
    }
}

fn gen(n: usize, form: Form, out: Option<&Path>) -> Result<()> {
    let s = match form {
        Form::Full => build_cfdd_full(n)?,
        Form::Simplified => build_cfdd_simplified(n)?,
    };
    write(out, &to_json(&s.into()))?;
    if let Form::Full = form {
        let log = build_log(n)?;
        match out {
            Some(path) => {
                let mut name = path.as_os_str().to_owned();
                name.push(".log");
                fs::write(&name, log).context("writing the build log")?;
            }
            None => eprint!("{log}"),
        }
    }
    Ok(())
}

fn check(input: &Path, cap: Option<usize>) -> Result<()> {
    match read(input)? {
        Serialized::DD(s) => {
            let r = check_dd(&s);
            verdict(r.is_ok(), r.to_string())
        }
        Serialized::D(s) => {
            let r = check_d(&s);
            verdict(r.is_ok(), r.to_string())
        }
        Serialized::A(m) => {
            let r = check_a(&m, cap);
            verdict(r.is_ok(), r.to_string())
        }
        Serialized::Complex(c) => match homology_rank(&c) {
            Ok(_) => verdict(true, String::new()),
            Err(e) => verdict(false, format!("{e}\n")),
        },
    }
}

fn equiv(n: usize) -> Result<()> {
    let e = build_equivalence(n)?;
    let report = verify_homotopy(&e.f, &e.g, &e.h, &e.full, &e.simplified)?;
    print!("{report}");
    if report.is_ok() {
        Ok(())
    } else {
        Err(Failed.into())
    }
}

fn maybe_reduce<K: Kind>(s: Structure<K>, on: bool) -> Structure<K> {
    if on {
        reduce(&s)
    } else {
        s
    }
}

fn pair(
    n: usize,
    left: Option<SolidTorusSlope>,
    right: Option<SolidTorusSlope>,
    reduce_it: bool,
    cap: usize,
    out: Option<&Path>,
) -> Result<()> {
    let s = build_cfdd_full(n)?;
    let (first, first_side, second) = match (left, right) {
        (_, Some(r)) => (r, Side::Right, left),
        (Some(l), None) => (l, Side::Left, None),
        (None, None) => return Err(Usage("pair needs --left, --right or both".into()).into()),
    };
    let cfg = PairingConfig::new(first_side).with_cap(cap);
    let d = box_dd(&first.module()?, &s, &cfg)?;
    let Some(l) = second else {
        return write(out, &to_json(&maybe_reduce(d, reduce_it).into()));
    };
    let d = maybe_reduce(d, reduce_it);
    let c = box_d(
        &l.module()?,
        &d,
        &PairingConfig::new(Side::Left).with_cap(cap),
    )?;
    let c = maybe_reduce(c, reduce_it);
    let rank = homology_rank(&c)?;
    write(out, &to_json(&c.into()))?;
    println!("{rank}");
    Ok(())
}

fn reduce_seeded<K: Kind>(s: &Structure<K>, seed: Option<u64>) -> Structure<K> {
    match seed {
        None => reduce(s),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            reduce_with(s, |units| rng.random_range(0..units.len()))
        }
    }
}

fn reduce_file(input: &Path, out: Option<&Path>, seed: Option<u64>) -> Result<()> {
    let reduced: Serialized = match read(input)? {
        Serialized::DD(s) => reduce_seeded(&s, seed).into(),
        Serialized::D(s) => reduce_seeded(&s, seed).into(),
        Serialized::Complex(c) => reduce_seeded(&c, seed).into(),
        Serialized::A(_) => bail!("an A-infinity module has no unit arrows to cancel"),
    };
    write(out, &to_json(&reduced))
}

fn homology(input: &Path) -> Result<()> {
    match read(input)? {
        Serialized::Complex(c) => {
            println!("{}", homology_rank(&c)?);
            Ok(())
        }
        other => bail!("homology needs a chain complex, got kind {}", other.kind()),
    }
}

fn domains(n: usize) -> Result<()> {
    let (d1, d2) = periodic_domains(n)?;
    println!("D1: {d1}");
    println!("D2: {d2}");
    println!("independent: {}", independent(&d1, &d2));
    println!("provincially_admissible: {}", provincially_admissible(n)?);
    Ok(())
}

/// Marks an error as a usage error (exit 2).
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<Usage>() {
            return 2;
        }
        if let Some(bordered_torus::Error::InvalidParameter(_)) =
            cause.downcast_ref::<bordered_torus::Error>()
        {
            return 2;
        }
    }
    1
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { n, form, out } => gen(n, form, out.as_deref()),
        Command::Check { input, cap } => check(&input, cap),
        Command::Equiv { n } => equiv(n),
        Command::Pair {
            n,
            left,
            right,
            reduce,
            cap,
            out,
        } => pair(n, left, right, reduce, cap, out.as_deref()),
        Command::Reduce { input, out, seed } => reduce_file(&input, out.as_deref(), seed),
        Command::Homology { input } => homology(&input),
        Command::Domains { n } => domains(n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.is::<Failed>() {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
