use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use pseudosym::family::{leading_forms, starred_forms};
use pseudosym::hilbert::{identity_checks, variant_checks};
use pseudosym::sweep::{self, Interval, Status, SweepConfig, SweepSummary};
use pseudosym::{
    build_family, check_conditions, compute_s, derive_generators, hilbert_report,
    is_standard_basis, Error, PseudoSymParams,
};

/// Standard bases and Hilbert series of 4-generated pseudo-symmetric
/// monomial curves.
#[derive(Parser)]
#[command(name = "pseudosym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    a1: i64,
    #[arg(long)]
    a2: i64,
    #[arg(long)]
    a3: i64,
    #[arg(long)]
    a4: i64,
    #[arg(long)]
    a21: i64,
}

impl ParamArgs {
    fn params(&self) -> Result<PseudoSymParams, Error> {
        PseudoSymParams::new(self.a1, self.a2, self.a3, self.a4, self.a21)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generators and condition report.
    Derive {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// The standard-basis family.
    Basis {
        #[command(flatten)]
        params: ParamArgs,
        /// Check every s-polynomial reduces to zero.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// First and second Hilbert series and the Hilbert function.
    Hilbert {
        #[command(flatten)]
        params: ParamArgs,
        /// Compare with brute-force semigroup orders up to this n.
        #[arg(long, default_value_t = 0)]
        oracle: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run every check on one tuple.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 25)]
        oracle: usize,
        #[arg(long)]
        json: bool,
    },
    /// Identity and cancellation checks for one tuple.
    Identities {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every tuple in a box of parameters.
    Sweep {
        /// Range `LO..HI` (inclusive) or a single value.
        #[arg(long)]
        a1: Interval,
        #[arg(long)]
        a2: Interval,
        #[arg(long)]
        a3: Interval,
        #[arg(long)]
        a4: Interval,
        #[arg(long)]
        a21: Interval,
        #[arg(long, default_value_t = 0)]
        oracle: usize,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
}

enum Outcome {
    Ok,
    Inconsistent,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidParams(_) | Error::ArithmeticOverflow(_) | Error::Io(_) => 1,
        _ => 2,
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn derive(params: ParamArgs, as_json: bool) -> Result<Outcome, Error> {
    let p = params.params()?;
    let g = derive_generators(&p)?;
    let report = check_conditions(&p)?;
    if as_json {
        print_json(&json!({
            "schema": 1,
            "params": p,
            "generators": g,
            "gcd": g.gcd(),
            "conditions": report,
        }));
    } else {
        println!("generators: {g}");
        for (name, ok) in [
            ("cond1", report.cond1),
            ("cond2", report.cond2),
            ("cond3", report.cond3),
            ("cond4", report.cond4),
            ("ordered", report.ordered),
        ] {
            println!("{name:8} {}", if ok { "OK" } else { "FAILED" });
        }
        if report.coprime {
            println!("coprime  OK");
        } else {
            println!("coprime  NO (gcd {}): not a numerical semigroup", g.gcd());
        }
    }
    if !report.hypotheses_hold() {
        return Err(Error::InvalidParams(format!(
            "conditions fail: {}",
            report.failing().join(", ")
        )));
    }
    Ok(Outcome::Ok)
}

fn basis(params: ParamArgs, verify: bool, as_json: bool) -> Result<Outcome, Error> {
    let p = params.params()?;
    let fam = build_family(&p)?;
    let verdict = if verify {
        Some(is_standard_basis(&fam.binomials())?)
    } else {
        None
    };
    let tc = leading_forms(&fam)?;
    if as_json {
        let members: Vec<_> = fam
            .members
            .iter()
            .map(|m| {
                json!({
                    "name": m.name.to_string(),
                    "lead": m.binomial.lead().to_string(),
                    "tail": m.binomial.tail().to_string(),
                })
            })
            .collect();
        print_json(&json!({
            "schema": 1,
            "params": p,
            "generators": fam.generators,
            "s": fam.s,
            "members": members,
            "tangent_cone": tc.gens.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "verified": verdict.as_ref().map(|v| v.verified),
        }));
    } else {
        println!("generators: {}", fam.generators);
        println!("s: {}", fam.s);
        println!("{} members", fam.len());
        print!("{}", fam.listing());
        let stars = starred_forms(&fam)?;
        let ties = stars.iter().filter(|s| s.is_tie()).count();
        println!(
            "tangent cone: {} minimal generators ({ties} homogeneous members)",
            tc.gens.len()
        );
        if let Some(v) = &verdict {
            match &v.witness {
                None => println!("standard basis: VERIFIED ({} pairs)", v.pairs_checked),
                Some((i, j, nf)) => println!(
                    "standard basis: FAILED at ({}, {}): NF = {nf}",
                    fam.members[*i].name, fam.members[*j].name
                ),
            }
        }
    }
    match verdict {
        Some(v) if !v.verified => Ok(Outcome::Inconsistent),
        _ => Ok(Outcome::Ok),
    }
}

fn first_oracle_mismatch(h: &[i64], oracle: &[u64]) -> Option<usize> {
    oracle
        .iter()
        .zip(h)
        .position(|(&o, &v)| i64::try_from(o).ok() != Some(v))
}

fn hilbert(params: ParamArgs, oracle: usize, as_json: bool) -> Result<Outcome, Error> {
    let p = params.params()?;
    let r = hilbert_report(&p, oracle)?;
    let g = derive_generators(&p)?;
    let coprime = g.gcd() == 1;
    if as_json {
        let mut v = serde_json::to_value(&r).expect("serializable");
        v["schema"] = json!(1);
        print_json(&v);
    } else {
        println!("P = {}", r.p);
        println!("Q = {}", r.q);
        let shown = r.h.len().min(r.regularity_index + 1);
        let h: Vec<String> = r.h[..shown].iter().map(i64::to_string).collect();
        println!("H = {}", h.join(", "));
        println!("regularity index: {}", r.regularity_index);
        println!("multiplicity: {}", r.multiplicity);
        println!("nondecreasing: {}", yes(r.nondecreasing));
        if oracle > 0 {
            if r.oracle_agrees {
                println!("oracle agrees through n={oracle}");
            } else {
                let table = pseudosym::oracle_hilbert(&g.as_array(), oracle);
                let at = first_oracle_mismatch(&r.h, &table).unwrap_or(0);
                println!("oracle disagrees from n={at}");
                if !coprime {
                    println!("  (generators have gcd {}; the series describe the family's ideal, not the semigroup ring)", g.gcd());
                }
            }
        }
    }
    if !r.nondecreasing || (!r.oracle_agrees && coprime) {
        return Ok(Outcome::Inconsistent);
    }
    Ok(Outcome::Ok)
}

fn verify(params: ParamArgs, oracle: usize, as_json: bool) -> Result<Outcome, Error> {
    let p = params.params()?;
    let g = derive_generators(&p)?;
    let fam = build_family(&p)?;
    let sb = is_standard_basis(&fam.binomials())?;
    let r = hilbert_report(&p, oracle)?;
    let tc = leading_forms(&fam)?;
    let checks = vec![
        ("coprime", g.gcd() == 1),
        ("basis size formula", fam.len() == fam.expected_len()),
        ("members toric", fam.all_toric()?),
        ("standard basis", sb.verified),
        (
            "tangent cone not Cohen-Macaulay",
            !pseudosym::family::is_tangent_cone_cm(&tc),
        ),
        ("closed forms agree", r.closed_form_agrees),
        ("pivot orders agree", r.pivot_orders_agree),
        ("identities", r.identities_hold()),
        ("nondecreasing", r.nondecreasing),
        ("oracle", r.oracle_agrees),
    ];
    if as_json {
        let m: serde_json::Map<_, _> = checks
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        print_json(&json!({"schema": 1, "params": p, "s": fam.s, "checks": m}));
    } else {
        println!("s: {}", compute_s(&p)?);
        for (name, ok) in &checks {
            println!("{:34} {}", name, if *ok { "PASS" } else { "FAIL" });
        }
    }
    // gcd > 1 explains an oracle mismatch; anything else is a contradiction
    let coprime = g.gcd() == 1;
    let bad = checks
        .iter()
        .any(|(name, ok)| !ok && !(*name == "coprime" || (*name == "oracle" && !coprime)));
    Ok(if bad {
        Outcome::Inconsistent
    } else {
        Outcome::Ok
    })
}

fn identities(params: ParamArgs, as_json: bool) -> Result<Outcome, Error> {
    let p = params.params()?;
    let s = compute_s(&p)?;
    let ids = identity_checks(&p, &s)?;
    let variants = variant_checks(&p, &s)?;
    if as_json {
        print_json(&json!({"schema": 1, "params": p, "identities": ids, "variants": variants}));
    } else {
        for c in &ids {
            println!("{:36} {}", c.name, if c.holds { "HOLDS" } else { "FAILS" });
        }
        println!("variant forms:");
        for c in &variants {
            println!(
                "  {:34} {}",
                c.name,
                if c.holds { "agrees" } else { "differs" }
            );
        }
    }
    Ok(if ids.iter().all(|c| c.holds) {
        Outcome::Ok
    } else {
        Outcome::Inconsistent
    })
}

fn run_sweep(config: SweepConfig, out: Option<PathBuf>, csv: bool) -> Result<Outcome, Error> {
    let records = sweep::run_sweep(&config)?;
    let sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(File::create(path).map_err(|e| Error::Io(e.to_string()))?),
        None => Box::new(io::stdout().lock()),
    };
    let sink = BufWriter::new(sink);
    if csv {
        sweep::write_csv(sink, &records)?;
    } else {
        sweep::write_json(sink, &config, &records)?;
        if out.is_none() {
            println!();
        }
    }
    let summary = SweepSummary::from_records(&records);
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    let bad = records
        .iter()
        .any(|r| r.status == Status::Error || (r.status == Status::Valid && !r.all_checks_pass()));
    Ok(if bad {
        Outcome::Inconsistent
    } else {
        Outcome::Ok
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Derive { params, json } => derive(params, json),
        Command::Basis {
            params,
            verify: v,
            json,
        } => basis(params, v, json),
        Command::Hilbert {
            params,
            oracle,
            json,
        } => hilbert(params, oracle, json),
        Command::Verify {
            params,
            oracle,
            json,
        } => verify(params, oracle, json),
        Command::Identities { params, json } => identities(params, json),
        Command::Sweep {
            a1,
            a2,
            a3,
            a4,
            a21,
            oracle,
            jobs,
            out,
            csv,
            json: _,
        } => run_sweep(
            SweepConfig {
                alpha1: a1,
                alpha2: a2,
                alpha3: a3,
                alpha4: a4,
                alpha21: a21,
                oracle_depth: oracle,
                jobs,
            },
            out,
            csv,
        ),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Inconsistent) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
