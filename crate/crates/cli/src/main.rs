use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use altlines::certificate::{self, Certificate, Kind, WEAK_SURVEY};
use altlines::evenline::{build_line_even, EvenOptions};
use altlines::galoisid::identify;
use altlines::mestre::{build_line_odd, OddOptions};
use altlines::monodromy::full_report;
use altlines::quadform::{decide_strong_field, local_table, represent_minus_one};
use altlines::quarticline::{enumerate_params, strong_line, survey, weak_field_check, weak_line, QuarticParams, StrongParams};
use altlines::ratcore::{format_rat, int, parse_poly};
use altlines::Error;

/// Certified families of polynomials with alternating Galois group.
#[derive(Parser)]
#[command(name = "altlines", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Odd-degree line from a seed with square discriminant.
    ConstructOdd {
        #[arg(short = 'n')]
        n: usize,
        /// Seed polynomial, e.g. "X^5+4X^4-5X^3-28X^2-18X-2".
        #[arg(long)]
        seed_poly: Option<String>,
        /// Witness primes "p,q,r1[,r2...]".
        #[arg(long)]
        primes: Option<String>,
        #[arg(long, default_value_t = 1000)]
        prime_bound: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Even-degree line (needs n − 1 a square).
    ConstructEven {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        prime_bound: u64,
        #[arg(long, default_value_t = 200)]
        max_base: i64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Quartic line over ℚ from integers (k, m) with −4k³ − 27m² a square.
    ConstructQuartic {
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Strong quartic line over ℚ(√m).
    ConstructStrong {
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Re-check every evidence item of a certificate.
    Verify {
        path: PathBuf,
        /// Also run the monodromy suite.
        #[arg(long)]
        monodromy: bool,
    },
    /// Galois group evidence for one monic integer polynomial.
    Identify {
        poly: String,
        #[arg(long, default_value_t = 1000)]
        prime_bound: u64,
        /// Reject input of any other degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Whether 3x² − 2xy + 3y² represents −1 over ℚ(√m).
    DecideStrongField {
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// Exhaustive branch-cycle searches.
    MonodromyReport {
        #[arg(long)]
        json: bool,
    },
    /// Integer (k, m) with |k|, |m| ≤ height and −4k³ − 27m² a nonzero square.
    EnumerateQuartic {
        #[arg(long, default_value_t = 10)]
        height: i64,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted(_) => Failure::Budget(e.to_string()),
            Error::Parse { .. } | Error::BadFieldParameter(_) | Error::NotPrime(_) | Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(cert: &Certificate, output: Option<PathBuf>) -> CmdResult {
    let text = certificate::to_json(cert);
    match output {
        Some(path) => fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_primes(s: &str) -> Result<(u64, u64, Vec<u64>), Failure> {
    let v: Vec<u64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Usage(format!("bad prime {x:?}"))))
        .collect::<Result<_, _>>()?;
    if v.len() < 3 {
        return Err(Failure::Usage("--primes needs p,q,r".into()));
    }
    Ok((v[0], v[1], v[2..].to_vec()))
}

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::ConstructOdd { n, seed_poly, primes, prime_bound, seed, budget, output } => {
            let opts = OddOptions {
                seed_poly: seed_poly.as_deref().map(parse_poly).transpose()?,
                prime_bound,
                rng_seed: seed,
                primes: primes.as_deref().map(parse_primes).transpose()?,
                search_budget: budget,
            };
            let recipe = build_line_odd(n, &opts)?;
            emit(&certificate::family_certificate(Kind::Odd, &recipe, seed)?, output)
        }
        Cmd::ConstructEven { n, prime_bound, max_base, output } => {
            let recipe = build_line_even(n, &EvenOptions { prime_bound, max_base })?;
            emit(&certificate::family_certificate(Kind::Even, &recipe, 0)?, output)
        }
        Cmd::ConstructQuartic { k, m, output } => {
            let params = QuarticParams::from_km(int(k), int(m))?;
            if !params.cubic_irreducible()? {
                return Err(Failure::Usage(format!("X^3 + {k}X + {m} has a rational root; the line is generically V4")));
            }
            let line = weak_line(&params)?;
            let s = survey(&line.p, &line.q, WEAK_SURVEY)?;
            let root = weak_field_check(&params)?;
            emit(&certificate::weak_certificate(&line, &s, &root), output)
        }
        Cmd::ConstructStrong { m, output } => {
            let (u, c) = represent_minus_one(m)?;
            let line = strong_line(&StrongParams::new(m, u, c)?)?;
            emit(&certificate::strong_certificate(&line), output)
        }
        Cmd::Verify { path, monodromy } => verify(path, monodromy),
        Cmd::Identify { poly, prime_bound, degree } => {
            let f = parse_poly(&poly)?;
            if let Some(d) = degree {
                if f.deg0() != d {
                    return Err(Failure::Usage(format!("expected degree {d}, got {}", f.deg0())));
                }
            }
            let ev = identify(&f, prime_bound).map_err(|e| match e {
                Error::NotMonicInteger | Error::NotSeparable => Failure::Usage(e.to_string()),
                e => e.into(),
            })?;
            println!("polynomial      {}", ev.poly);
            println!("discriminant    {}", format_rat(&ev.disc));
            println!("disc square     {}", ev.disc_square);
            println!("verdict         {}", ev.verdict);
            if let Some(w) = &ev.witness {
                println!("witness         ell={} p={} q={} r={:?}", w.ell, w.p, w.q, w.r);
            }
            for (p, pat) in ev.patterns.iter().take(12) {
                println!("  mod {p:<6} {pat}");
            }
            Ok(())
        }
        Cmd::DecideStrongField { m } => {
            let yes = decide_strong_field(m)?;
            let reason = if m > 0 {
                "m > 0"
            } else if m.rem_euclid(8) == 1 {
                "m ≡ 1 mod 8"
            } else {
                "m < 0, m ≢ 1 mod 8"
            };
            println!("{} ({reason})", if yes { "yes" } else { "no" });
            println!("local isotropy of <1, 2, 1, 2m>:");
            for row in local_table(m)? {
                println!("  {:<8} {}", row.place.to_string(), if row.isotropic { "isotropic" } else { "anisotropic" });
            }
            Ok(())
        }
        Cmd::MonodromyReport { json } => {
            let r = full_report()?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
            } else {
                for c in &r.quartic_cases {
                    let groups: Vec<String> = c.groups.iter().map(|(g, k)| format!("{g}×{k}")).collect();
                    println!(
                        "types {:?}: {} tuples, {} transitive, groups [{}]",
                        c.data.types,
                        c.tuples,
                        c.transitive,
                        groups.join(", ")
                    );
                }
                println!("excluded triple empty     {}", r.excluded_triple_empty);
                println!("(2,2)-generated only V4   {}", r.case3_only_klein);
                for j in &r.jordan {
                    println!("jordan n={:<2}               {}", j.n, j.holds);
                }
                println!("Riemann-Hurwitz           {}", r.riemann_hurwitz_ok);
            }
            if r.all_pass() {
                Ok(())
            } else {
                Err(Failure::Verification("monodromy suite failed".into()))
            }
        }
        Cmd::EnumerateQuartic { height } => {
            for p in enumerate_params(height) {
                println!("k={} m={} c={}", format_rat(&p.k), format_rat(&p.m), format_rat(&p.c));
            }
            Ok(())
        }
    }
}

fn verify(path: PathBuf, monodromy: bool) -> CmdResult {
    let text = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let cert = certificate::from_json(&text).map_err(|e| Failure::Verification(format!("malformed certificate: {e}")))?;
    let mut checks = match certificate::verify(&cert) {
        Ok(c) => c,
        Err(e @ Error::BudgetExhausted(_)) => return Err(e.into()),
        Err(e) => return Err(Failure::Verification(format!("evidence could not be re-checked: {e}"))),
    };
    if monodromy {
        let ok = full_report()?.all_pass();
        checks.push(certificate::Check { name: "monodromy suite".into(), ok, detail: String::new() });
    }
    let width = checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    for c in &checks {
        let pad = width - c.name.chars().count();
        println!("{}  {}{}  {}", if c.ok { "ok  " } else { "FAIL" }, c.name, " ".repeat(pad), c.detail);
    }
    match checks.iter().find(|c| !c.ok) {
        None => Ok(()),
        Some(c) => Err(Failure::Verification(format!("check failed: {}", c.name))),
    }
}
