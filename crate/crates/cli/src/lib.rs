//! The `quivermod` command line. Output is tab-separated, one record per
//! line; rationals print as `p/q`. Exit codes: 0 success, 1 verification
//! mismatch, 2 usage or domain error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use quivermod_core::field::{Field, PrimeField, Rationals};
use quivermod_core::kronecker::{
    expected_kronecker_exceptions, expected_loop_exceptions, kronecker_criterion_exceptions,
    loop_criterion_exceptions, ScanConfig, ScanResult,
};
use quivermod_core::models::{
    k3_conic, k3_destabilizer, k3_invariants, k3_semiinvariants, l2_conic, l2_invariants, l2_semiinvariants,
    parse_vec2, ConicFiber, Mat2, Vec2,
};
use quivermod_core::quadrics::{
    build_clifford, conic_has_rational_point, hilbert_polynomial_quadric, hilbert_symbols, QuadraticFormB,
    QuaternionAlgebra,
};
use quivermod_core::rational::{format_rational, parse_rational};
use quivermod_core::stability::{
    check_ample_stability_criterion, fine_moduli_predicate, hn_codimension, hn_types, predict_brauer,
    strictly_semistable_wall_codim,
};
use quivermod_core::{
    euler_form, gcd_of, linearization_weights, moduli_dimension, slope, DimensionVector, Error, Quiver, Stability,
};

/// Environment variable capping the number of scan workers.
pub const THREADS_ENV: &str = "QUIVERMOD_THREADS";

#[derive(Parser, Debug)]
#[command(name = "quivermod", version, about = "Exact invariants of quiver moduli spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct QuiverArg {
    /// Quiver file, or `loop:m` / `kronecker:m`.
    #[arg(long)]
    quiver: String,
}

#[derive(Args, Debug)]
struct ThetaArg {
    /// Stability weights, e.g. `1,0`.
    #[arg(long, allow_hyphen_values = true)]
    theta: Stability,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Euler form <d, e>.
    Euler {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        d: DimensionVector,
        #[arg(long)]
        e: DimensionVector,
    },
    /// Slope Theta(d) / |d|.
    Slope {
        #[command(flatten)]
        theta: ThetaArg,
        #[arg(long)]
        d: DimensionVector,
    },
    /// gcd of the entries of d.
    Gcd {
        #[arg(long)]
        d: DimensionVector,
    },
    /// Integer weights a with a . d = 1.
    Weights {
        #[arg(long)]
        d: DimensionVector,
    },
    /// Dimension 1 - <d, d> of the moduli space.
    Dim {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        d: DimensionVector,
    },
    /// Sufficient criterion for ample stability.
    AmplyStable {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: ThetaArg,
        #[arg(long)]
        d: DimensionVector,
    },
    /// Candidate Harder-Narasimhan types with their codimensions.
    Hn {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: ThetaArg,
        #[arg(long)]
        d: DimensionVector,
        /// Maximum number of parts (default: total dimension).
        #[arg(long)]
        max_parts: Option<usize>,
    },
    /// Codimension of the strictly semistable wall.
    Wall {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: ThetaArg,
        #[arg(long)]
        d: DimensionVector,
    },
    /// Predicted Brauer group order and how it is backed.
    Brauer {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        theta: ThetaArg,
        #[arg(long)]
        d: DimensionVector,
    },
    /// Whether a fine moduli space exists.
    Fine {
        #[arg(long)]
        d: DimensionVector,
    },
    /// Criterion scan over loop quivers L_m at d.
    VerifyLoop {
        #[arg(long, default_value_t = 2)]
        m_min: u64,
        #[arg(long)]
        m_max: u64,
        #[arg(long, default_value_t = 2)]
        d_min: u64,
        #[arg(long)]
        d_max: u64,
    },
    /// Criterion scan over Kronecker quivers K_m at (d1, d2).
    VerifyKronecker {
        #[arg(long, default_value_t = 3)]
        m_min: u64,
        #[arg(long)]
        m_max: u64,
        #[arg(long, default_value_t = 1)]
        d_min: u64,
        #[arg(long)]
        d_max: u64,
    },
    /// Invariants, semiinvariants and conic of a pair of 2x2 matrices.
    L2 {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Mat2,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Mat2,
        #[arg(long, allow_hyphen_values = true, value_parser = vec2)]
        v: Option<Vec2>,
    },
    /// Invariants, semiinvariants and conic of a triple of 2x2 matrices.
    K3 {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Mat2,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Mat2,
        #[arg(long = "C", allow_hyphen_values = true)]
        c: Mat2,
        #[arg(long, allow_hyphen_values = true, value_parser = vec2)]
        v: Option<Vec2>,
    },
    /// Clifford algebra of a quadratic form given by its b-matrix.
    Clifford {
        /// Row-major symmetric b-matrix entries.
        #[arg(long, required = true, allow_hyphen_values = true, value_delimiter = ',', value_parser = rational)]
        b: Vec<BigRational>,
        /// Work over Z/p instead of the rationals.
        #[arg(long = "char")]
        characteristic: Option<u64>,
    },
    /// Local Hilbert symbols (u, v) at all relevant places.
    Hilbert {
        #[arg(allow_hyphen_values = true, value_parser = rational)]
        u: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = rational)]
        v: BigRational,
    },
    /// Rational point on the conic with coefficients of x², xy, xz, y², yz, z².
    Conic {
        #[arg(num_args = 6, allow_hyphen_values = true, value_parser = rational)]
        coeffs: Vec<BigRational>,
    },
    /// Hilbert function of an n-dimensional quadric at t.
    Hilbpoly {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
}

fn rational(s: &str) -> Result<BigRational, Error> {
    parse_rational(s)
}

fn vec2(s: &str) -> Result<Vec2, Error> {
    parse_vec2(s)
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("output error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn load_quiver(spec: &str) -> Result<Quiver, Failure> {
    let family = |prefix: &str| {
        spec.strip_prefix(prefix)
            .map(|m| m.parse::<u64>().map_err(|_| Failure::Usage(format!("invalid arrow count in `{spec}`"))))
    };
    if let Some(m) = family("loop:") {
        return Ok(Quiver::loop_quiver(m?));
    }
    if let Some(m) = family("kronecker:") {
        return Ok(Quiver::kronecker(m?));
    }
    let path = PathBuf::from(spec);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Usage(format!("cannot read quiver file {}: {e}", path.display())))?;
    Ok(Quiver::parse(&text)?)
}

fn scan_config() -> Result<ScanConfig, Failure> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(ScanConfig::default()),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(ScanConfig { threads: Some(n) }),
            _ => Err(Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        },
    }
}

fn tsv(fields: &[String]) -> String {
    fields.join("\t")
}

fn rationals(xs: &[BigRational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

fn range(lo: u64, hi: u64, what: &str) -> Result<RangeInclusive<u64>, Failure> {
    if lo > hi {
        return Err(Failure::Usage(format!("empty {what} range {lo}..={hi}")));
    }
    Ok(lo..=hi)
}

fn report_scan(
    out: &mut dyn Write,
    err: &mut dyn Write,
    result: &ScanResult,
    expected: std::collections::BTreeSet<(u64, Vec<u64>)>,
) -> Outcome {
    for e in &result.exceptions {
        let cells: Vec<String> = e.cells.iter().map(|c| c.to_string()).collect();
        writeln!(out, "{}", tsv(&[e.m.to_string(), e.d.to_string(), cells.join(" ")]))?;
    }
    let found: std::collections::BTreeSet<_> = result.exception_keys().into_iter().collect();
    let verdict = if found == expected { "MATCH" } else { "MISMATCH" };
    writeln!(
        out,
        "exceptions\t{}\texpected\t{}\t{verdict}",
        found.len(),
        expected.len()
    )?;
    writeln!(
        err,
        "scanned {} cells ({} skipped) in {:.3}s",
        result.scanned,
        result.skipped,
        result.elapsed.as_secs_f64()
    )?;
    if found == expected {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn print_conic(out: &mut dyn Write, conic: &ConicFiber) -> Outcome {
    writeln!(out, "conic\t{conic}")?;
    Ok(())
}

fn clifford_report<F: Field>(out: &mut dyn Write, field: F, entries: &[BigRational]) -> Outcome {
    let elems = entries
        .iter()
        .map(|x| field.from_rational(x))
        .collect::<quivermod_core::Result<Vec<_>>>()?;
    let q = QuadraticFormB::from_row_major(field, elems)?;
    let cl = build_clifford(&q)?;
    let rank = cl.even_part.enveloping_rank()?;
    let even = cl.even_part.dimension();
    writeln!(
        out,
        "dimension\t{}\teven_dimension\t{even}\tsmooth\t{}\tenveloping_rank\t{rank}\tazumaya\t{}",
        cl.dimension(),
        q.is_smooth_quadric(),
        rank == even * even
    )?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Euler { quiver, d, e } => {
            let q = load_quiver(&quiver.quiver)?;
            writeln!(out, "{}", euler_form(&q, &d, &e)?)?;
        }
        Command::Slope { theta, d } => {
            writeln!(out, "{}", format_rational(&slope(&theta.theta, &d)?))?;
        }
        Command::Gcd { d } => writeln!(out, "{}", gcd_of(&d)?)?,
        Command::Weights { d } => {
            let w: Vec<String> = linearization_weights(&d)?.iter().map(BigInt::to_string).collect();
            writeln!(out, "{}", w.join(","))?;
        }
        Command::Dim { quiver, d } => {
            let q = load_quiver(&quiver.quiver)?;
            writeln!(out, "{}", moduli_dimension(&q, &d)?)?;
        }
        Command::AmplyStable { quiver, theta, d } => {
            let q = load_quiver(&quiver.quiver)?;
            let r = check_ample_stability_criterion(&q, &theta.theta, &d)?;
            let max = r.max_pairing.as_ref().map_or("none".to_string(), BigInt::to_string);
            let mut fields = vec![
                "passes".to_string(),
                r.passes().to_string(),
                "qualifying".to_string(),
                r.qualifying.to_string(),
                "max_pairing".to_string(),
                max,
            ];
            if let Some(w) = &r.witness {
                fields.extend(["witness".to_string(), format!("{}|{}", w.e, w.f)]);
            }
            writeln!(out, "{}", tsv(&fields))?;
        }
        Command::Hn { quiver, theta, d, max_parts } => {
            let q = load_quiver(&quiver.quiver)?;
            let parts = match max_parts {
                Some(k) => k,
                None => usize::try_from(d.entries().iter().sum::<u64>())
                    .map_err(|_| Failure::Usage("dimension vector too large".into()))?,
            };
            for t in hn_types(&q, &theta.theta, &d, parts.max(1), None)? {
                writeln!(out, "{t}\t{}", hn_codimension(&q, &t)?)?;
            }
        }
        Command::Wall { quiver, theta, d } => {
            let q = load_quiver(&quiver.quiver)?;
            match strictly_semistable_wall_codim(&q, &theta.theta, &d)? {
                Some(c) => writeln!(out, "{c}")?,
                None => writeln!(out, "none")?,
            }
        }
        Command::Brauer { quiver, theta, d } => {
            let q = load_quiver(&quiver.quiver)?;
            let p = predict_brauer(&q, &theta.theta, &d)?;
            writeln!(out, "order\t{}\tstatus\t{}", p.order, p.status)?;
            writeln!(err, "{}", p.generator_note)?;
        }
        Command::Fine { d } => {
            let f = fine_moduli_predicate(&d)?;
            writeln!(out, "fine\t{}\t{}", f.fine, f.note)?;
        }
        Command::VerifyLoop { m_min, m_max, d_min, d_max } => {
            let (m, d) = (range(m_min, m_max, "m")?, range(d_min, d_max, "d")?);
            let cfg = scan_config()?;
            let result = loop_criterion_exceptions(m.clone(), d.clone(), cfg)?;
            report_scan(out, err, &result, expected_loop_exceptions(&m, &d))?;
        }
        Command::VerifyKronecker { m_min, m_max, d_min, d_max } => {
            let (m, d) = (range(m_min, m_max, "m")?, range(d_min, d_max, "d")?);
            let cfg = scan_config()?;
            let result = kronecker_criterion_exceptions(m.clone(), d.clone(), cfg)?;
            report_scan(out, err, &result, expected_kronecker_exceptions(&m, &d))?;
        }
        Command::L2 { a, b, v } => {
            let p = l2_invariants(&a, &b);
            let inv = [p.a.clone(), p.b.clone(), p.c.clone(), p.d.clone(), p.e.clone()];
            writeln!(out, "invariants\t{}", tsv(&rationals(&inv)))?;
            writeln!(out, "h\t{}", format_rational(&p.h))?;
            writeln!(out, "stable\t{}", p.is_stable())?;
            if let Some(v) = v {
                writeln!(out, "semiinvariants\t{}", tsv(&rationals(&l2_semiinvariants(&a, &b, &v))))?;
            }
            print_conic(out, &l2_conic(&p))?;
        }
        Command::K3 { a, b, c, v } => {
            let p = k3_invariants(&a, &b, &c);
            writeln!(out, "invariants\t{}", tsv(&rationals(&p.coeffs)))?;
            writeln!(out, "h\t{}", format_rational(&p.h))?;
            writeln!(out, "stable\t{}", p.is_stable())?;
            if let Some(d) = k3_destabilizer(&a, &b, &c) {
                let (u1, u2) = d.dimension();
                writeln!(out, "destabilizer\t{u1},{u2}")?;
            }
            if let Some(v) = v {
                writeln!(out, "semiinvariants\t{}", tsv(&rationals(&k3_semiinvariants(&a, &b, &c, &v))))?;
            }
            match k3_conic(&p) {
                Ok(conic) => print_conic(out, &conic)?,
                Err(_) => writeln!(out, "conic\tnone")?,
            }
        }
        Command::Clifford { b, characteristic } => match characteristic {
            None | Some(0) => clifford_report(out, Rationals, &b)?,
            Some(p) => clifford_report(out, PrimeField::new(p)?, &b)?,
        },
        Command::Hilbert { u, v } => {
            let alg = QuaternionAlgebra::new(u.clone(), v.clone())?;
            for e in hilbert_symbols(&u, &v)? {
                writeln!(out, "{}\t{}", e.place, e.value)?;
            }
            writeln!(out, "split\t{}", alg.is_split())?;
        }
        Command::Conic { coeffs } => {
            let arr: [BigRational; 6] = coeffs
                .try_into()
                .map_err(|_| Failure::Usage("conic needs six coefficients".into()))?;
            let pt = conic_has_rational_point(&ConicFiber::new(arr))?;
            match &pt.witness {
                Some(w) => {
                    let w: Vec<String> = w.iter().map(BigInt::to_string).collect();
                    writeln!(out, "solvable\ttrue\twitness\t{}", w.join(","))?;
                }
                None => writeln!(out, "solvable\tfalse")?,
            }
        }
        Command::Hilbpoly { n, t } => writeln!(out, "{}", hilbert_polynomial_quadric(n, t))?,
    }
    Ok(())
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    let outcome = dispatch(cli, out, err);
    let _ = writeln!(err, "elapsed {:.3}s", start.elapsed().as_secs_f64());
    match outcome {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
