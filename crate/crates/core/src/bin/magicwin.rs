use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use magic_windows::exact::RatVec;
use magic_windows::groupoid::{CongruenceFile, WordFile};
use magic_windows::io::{parse_json, read, RepSpec};
use magic_windows::quiver::QuiverSpec;
use magic_windows::report::{self, Report};
use magic_windows::{Error, Result};

/// Magic windows, wall-crossing matrices and Kähler groupoids, computed exactly.
#[derive(Parser)]
#[command(name = "magicwin", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

fn vec_arg(s: &str) -> std::result::Result<RatVec, String> {
    RatVec::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Cmd {
    /// Quasi-symmetry, spanning and existence of a generic invariant point.
    Check { rep: PathBuf },
    /// Facet normals and supports of the zonotope.
    Facets { rep: PathBuf },
    /// Window basis at delta.
    Window {
        rep: PathBuf,
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        delta: Option<RatVec>,
        /// Orientation for a half-open window on a wall.
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        eps: Option<RatVec>,
    },
    /// Walls met by the segment from one delta to another.
    Walls {
        rep: PathBuf,
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        from: RatVec,
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        to: RatVec,
    },
    /// Wall-crossing matrix between the windows at delta and delta'.
    Cross {
        rep: PathBuf,
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        delta: RatVec,
        #[arg(long = "delta-prime", value_parser = vec_arg, allow_hyphen_values = true)]
        delta_prime: RatVec,
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        ell: Option<RatVec>,
    },
    /// Matrix of a groupoid word, or a congruence verification table.
    Groupoid {
        rep: Option<PathBuf>,
        #[arg(long, conflicts_with = "verify", required_unless_present = "verify", requires = "rep")]
        word: Option<PathBuf>,
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Representation of a Nakajima quiver variety.
    Quiver {
        quiver: PathBuf,
        #[arg(long)]
        qprime: bool,
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        zeta: Option<RatVec>,
    },
    /// The Hilbert scheme of n points on the plane.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        walls: bool,
    },
}

fn load(path: &Path) -> Result<(RepSpec, String)> {
    let text = read(path)?;
    Ok((RepSpec::parse(&text)?, text))
}

fn need(v: Option<RatVec>, what: &str) -> Result<RatVec> {
    v.ok_or_else(|| Error::parse(format!("--{what} is required (none given and none in the file)")))
}

fn notes(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// The report, and whether the command's own verdict is a failure.
fn run(cmd: Cmd, argv: Vec<String>) -> Result<(Report, bool)> {
    use report::*;
    match cmd {
        Cmd::Check { rep } => {
            let (spec, text) = load(&rep)?;
            let r = check(&spec)?;
            let bad = !r.ok;
            Ok((Report::new(argv, &[text.as_bytes()], &r, notes(&[NOTE_WEIGHTS]))?, bad))
        }
        Cmd::Facets { rep } => {
            let (spec, text) = load(&rep)?;
            let r = facets(&spec)?;
            Ok((Report::new(argv, &[text.as_bytes()], &r, notes(&[NOTE_WEIGHTS]))?, false))
        }
        Cmd::Window { rep, delta, eps } => {
            let (spec, text) = load(&rep)?;
            let delta = need(delta.or(spec.delta.clone()), "delta")?;
            let r = window(&spec, &delta, eps.as_ref())?;
            Ok((Report::new(argv, &[text.as_bytes()], &r, notes(&[NOTE_WEIGHTS]))?, false))
        }
        Cmd::Walls { rep, from, to } => {
            let (spec, text) = load(&rep)?;
            let r = walls(&spec, &from, &to)?;
            let mut ns = notes(&[NOTE_NABLA]);
            if r.sigma_x.is_some() {
                ns.push(NOTE_SIGMA_X.into());
            }
            Ok((Report::new(argv, &[text.as_bytes()], &r, ns)?, false))
        }
        Cmd::Cross { rep, delta, delta_prime, ell } => {
            let (spec, text) = load(&rep)?;
            let ell = need(ell.or(spec.ell.clone()), "ell")?;
            let r = cross(&spec, &delta, &delta_prime, &ell)?;
            Ok((Report::new(argv, &[text.as_bytes()], &r, notes(&[NOTE_MATRIX, NOTE_NABLA]))?, false))
        }
        Cmd::Groupoid { rep, word: Some(w), .. } => {
            let (spec, text) = load(&rep.expect("clap requires rep with --word"))?;
            let wt = read(&w)?;
            let r = report::word(&spec, &parse_json::<WordFile>(&wt)?)?;
            Ok((Report::new(argv, &[text.as_bytes(), wt.as_bytes()], &r, notes(&[NOTE_MATRIX, NOTE_NABLA]))?, false))
        }
        Cmd::Groupoid { verify: Some(v), .. } => {
            let vt = read(&v)?;
            let r = verify(&parse_json::<CongruenceFile>(&vt)?)?;
            let bad = !r.report.passed;
            Ok((Report::new(argv, &[vt.as_bytes()], &r, notes(&[NOTE_MATRIX, NOTE_NABLA]))?, bad))
        }
        Cmd::Groupoid { .. } => Err(Error::parse("groupoid needs --word or --verify")),
        Cmd::Quiver { quiver: path, qprime, zeta } => {
            let text = read(&path)?;
            let mut q = QuiverSpec::parse(&text)?;
            if let Some(z) = zeta {
                q = q.with_zeta(z)?;
            }
            let r = quiver(&q, qprime)?;
            Ok((Report::new(argv, &[text.as_bytes()], &r, notes(&[NOTE_WEIGHTS, NOTE_THETA]))?, false))
        }
        Cmd::Hilbert { n, walls } => {
            let r = hilbert(n, walls)?;
            let mut ns = notes(&[NOTE_WEIGHTS]);
            if walls {
                ns.extend(notes(&[NOTE_SIGMA_X, NOTE_NABLA, "q = exp(2 pi i (delta + i ell)) on the diagonal"]));
            }
            Ok((Report::new(argv, &[], &r, ns)?, false))
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(cli.cmd, argv) {
        Ok((r, bad)) => {
            println!("{}", r.to_json());
            ExitCode::from(if bad { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
