use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gamma4::report::{
    emit_csv, emit_json, exact_summary, profile_csv, render_audit, render_pinch, render_profile, render_report,
    render_table,
};
use gamma4::{
    alexander, d_pm1, family_table, framed_profile, obstruction_audit, pinch_sequence, report, scan,
    sigma_lattice, sigma_rec, t0, Error, Handedness, PinchMode, Result, TorusKnotClass,
};

#[derive(Parser)]
#[command(name = "gamma4", version, about = "Bounds on the nonorientable four-genus of torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Pair {
    #[arg(allow_negative_numbers = true)]
    p: i64,
    #[arg(allow_negative_numbers = true)]
    q: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// T(2k, 2k-1)
    #[value(name = "2k")]
    TwoK,
}

#[derive(Subcommand)]
enum Command {
    /// Bound certificate for T(p,q)
    Report {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        json: bool,
        /// Label the input as the mirror; both chiralities are always reported
        #[arg(long)]
        mirror: bool,
    },
    /// Certificates for a family of torus knots
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        kmax: i64,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Certificates for all coprime 2 <= q < p <= max
    Scan {
        #[arg(long)]
        max: i64,
        #[arg(long)]
        csv: bool,
    },
    /// Band-move trace
    Pinch {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        gamma3: bool,
    },
    /// Signature from the recursion and from the lattice count
    Signature {
        #[command(flatten)]
        pair: Pair,
    },
    /// Alexander polynomial and torsion coefficient
    Alexander {
        #[command(flatten)]
        pair: Pair,
    },
    /// Correction terms of +-1 surgery for both chiralities
    Dinv {
        #[command(flatten)]
        pair: Pair,
    },
    /// Framed lower bounds over a window of n = e(F)/2
    Profile {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        mirror: bool,
    },
    /// Exact replay of the correction-term inequality chain
    Audit {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        d: i64,
    },
}

fn knot(pair: &Pair, mirror: bool) -> Result<TorusKnotClass> {
    if pair.p < 1 || pair.q < 1 {
        return Err(Error::OutOfRange(format!("p and q must be positive, got ({}, {})", pair.p, pair.q)));
    }
    if num_integer::Integer::gcd(&pair.p, &pair.q) != 1 {
        return Err(Error::NotCoprime(pair.p, pair.q));
    }
    let hand = if mirror { Handedness::Left } else { Handedness::Right };
    TorusKnotClass::new(pair.p, pair.q, hand)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Report { pair, json, mirror } => {
            let k = knot(&pair, mirror)?;
            let r = report(pair.p, pair.q)?;
            if json {
                Ok(emit_json(&r))
            } else {
                Ok(format!("input {k}\n{}", render_report(&r)))
            }
        }
        Command::Table { family: Family::TwoK, kmax, csv, json } => {
            let rows = family_table(kmax)?;
            Ok(if csv {
                emit_csv(&rows)
            } else if json {
                emit_json(&rows)
            } else {
                render_table(&rows)
            })
        }
        Command::Scan { max, csv } => {
            if max < 3 {
                return Err(Error::OutOfRange(format!("--max {max} must be at least 3")));
            }
            let rows = scan(max)?;
            let body = if csv { emit_csv(&rows) } else { render_table(&rows) };
            let prefix = if csv { "# " } else { "" };
            Ok(format!("{body}{prefix}{}\n", exact_summary(&rows)))
        }
        Command::Pinch { pair, gamma3 } => {
            let k = knot(&pair, false)?;
            let mode = if gamma3 { PinchMode::Gamma3 } else { PinchMode::Gamma4 };
            Ok(render_pinch(&pinch_sequence(&k, mode)?))
        }
        Command::Signature { pair } => {
            let k = knot(&pair, false)?;
            let rec = sigma_rec(k.p(), k.q())?;
            let lattice = if k.p() >= 2 && k.q() >= 1 { sigma_lattice(k.p(), k.q())? } else { 0 };
            if rec != lattice {
                return Err(Error::Invariant(format!(
                    "signature engines disagree on ({}, {}): recursion {rec}, lattice {lattice}",
                    k.p(),
                    k.q()
                )));
            }
            Ok(format!(
                "sigma({p},{q}) recursion = {rec}\nsigma({p},{q}) lattice   = {lattice}\nsignature T({p},{q}) = {}  T(-{p},{q}) = {}\n",
                -rec,
                rec,
                p = k.p(),
                q = k.q()
            ))
        }
        Command::Alexander { pair } => {
            let k = knot(&pair, false)?;
            let poly = alexander(pair.p, pair.q)?;
            Ok(format!("{k}: {poly}\nt0 = {}\n", t0(pair.p, pair.q)?))
        }
        Command::Dinv { pair } => {
            let k = knot(&pair, false)?;
            let mut s = String::new();
            for c in [k, k.mirror()] {
                let (m, p) = d_pm1(&c)?;
                s.push_str(&format!("{c}: d(S^3_-1) = {m}  d(S^3_+1) = {p}\n"));
            }
            Ok(s)
        }
        Command::Profile { pair, from, to, csv, mirror } => {
            let k = knot(&pair, mirror)?;
            let profile = framed_profile(&k, from, to)?;
            Ok(if csv { profile_csv(&profile) } else { render_profile(&profile) })
        }
        Command::Audit { g, m, d } => Ok(render_audit(&obstruction_audit(g, m, d)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // a closed pipe on stdout is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
