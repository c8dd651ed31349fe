//! Command-line driver for the `cgring` library.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cgring::agmod::selftest::identity_selftest;
use cgring::casestudies::{
    boyer_certificate, conjecture_probe, sw_static_checks, sw_verify, BoyerInstance, Properness, SwInstance,
};
use cgring::ideals::{
    bullet_generators, hash_generators, hashhash_generators, normally_generates_check_until,
    quotient_ring_of_presentation, Verdict,
};
use cgring::oracle::fuzz_bar;
use cgring::ring::RingError;
use cgring::words::parse_word_list;
use cgring::{parse_poly, parse_presentation, parse_word, Presentation, Rational, Word};

const EXIT_ERROR: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "cgring", version, about = "Commutative group rings, obstruction ideals and certificates")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect K[G] for a presentation.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Generators of L^#, L^## or L^• for a list of words.
    Ideal {
        kind: IdealKind,
        #[command(flatten)]
        presentation: PresentationArg,
        /// Comma-separated words in the presentation's generators.
        #[arg(long, default_value = "")]
        words: String,
    },
    /// Try to certify that the words do not normally generate the group.
    Normalgen {
        #[command(flatten)]
        presentation: PresentationArg,
        #[arg(long, default_value = "")]
        words: String,
        /// Compare the # ideals instead of the ## ideals.
        #[arg(long)]
        hash: bool,
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// Certificate that a proper power does not normally generate C_s * C_t.
    Boyer {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        word: String,
    },
    /// Checks for words in C_r * C_s * C_t.
    Sw {
        #[command(subcommand)]
        command: SwCommand,
    },
    /// Quaternion model checks.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Algebraic identities in A.
    Identity {
        #[command(subcommand)]
        command: IdentityCommand,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Variables, relations, reduced Gröbner basis and dimension.
    Describe {
        #[command(flatten)]
        presentation: PresentationArg,
    },
}

#[derive(Subcommand)]
enum SwCommand {
    /// Matrix relation rows, `w1 - W ∈ J` and optionally properness.
    Verify {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        word: String,
        #[arg(long)]
        properness: bool,
        /// Seconds allowed for the properness computation.
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// Identities that hold for every triple of orders.
    StaticChecks,
    /// Random search for counterexamples to the W' statement.
    Probe {
        #[arg(long, allow_hyphen_values = true)]
        c0: String,
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
        #[arg(long, allow_hyphen_values = true)]
        c2: String,
        #[arg(long, allow_hyphen_values = true)]
        c3: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Compare bar(w) with the quaternion model on random words and points.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        length: usize,
        #[arg(long, default_value_t = 3)]
        generators: usize,
        /// Bound on numerators and denominators of the random points.
        #[arg(long, default_value_t = 5)]
        height: i64,
    },
}

#[derive(Subcommand)]
enum IdentityCommand {
    /// Run every identity on seeded random elements.
    Selftest {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        generators: usize,
        #[arg(long, default_value_t = 6)]
        length: usize,
        #[arg(long, default_value_t = 8)]
        max_power: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealKind {
    Hash,
    Hashhash,
    Bullet,
}

#[derive(Args)]
struct PresentationArg {
    /// Presentation such as "<g1,g2|g1^2,g2^3>".
    presentation: Option<String>,
    /// Read the presentation from a file instead.
    #[arg(long, conflicts_with = "presentation")]
    file: Option<PathBuf>,
}

impl PresentationArg {
    fn load(&self) -> Result<Presentation, String> {
        let text = match (&self.presentation, &self.file) {
            (Some(p), _) => p.clone(),
            (None, Some(f)) => std::fs::read_to_string(f).map_err(|e| format!("{}: {}", f.display(), e))?,
            (None, None) => return Err("a presentation or --file is required".into()),
        };
        parse_presentation(text.trim()).map_err(|e| format!("presentation: {}", e))
    }
}

fn standard_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("g{}", i)).collect()
}

fn word_arg(text: &str, n: usize) -> Result<Word, String> {
    parse_word(text, &standard_names(n)).map_err(|e| format!("word: {}", e))
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, String> {
    let p = parse_poly(text).map_err(|e| format!("--{}: {}", name, e))?;
    if !p.is_constant() {
        return Err(format!("--{}: expected a rational number, got {}", name, text));
    }
    Ok(p.constant_term())
}

struct Output {
    json: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
        } else {
            println!("{}", text());
        }
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let out = Output { json: cli.json };
    match cli.command {
        Command::Ring {
            command: RingCommand::Describe { presentation },
        } => {
            let p = presentation.load()?;
            let ring = quotient_ring_of_presentation(&p).map_err(|e| e.to_string())?;
            let d = ring.describe();
            out.emit(&d, || {
                let mut s = format!("presentation: {}\n", p.render());
                s += &format!("variables: {}\n", d.variables.join(", "));
                s += &format!("order: {}\n", ring.order().describe());
                s += &format!("relations: {}\n", d.relations.len());
                for r in &d.relations {
                    s += &format!("  {}\n", r);
                }
                s += &format!("groebner basis: {}\n", d.groebner_basis.len());
                for g in &d.groebner_basis {
                    s += &format!("  {}\n", g);
                }
                match d.dimension {
                    Some(k) => s += &format!("dimension: {}", k),
                    None => s += "dimension: infinite",
                }
                s
            });
            Ok(0)
        }
        Command::Ideal {
            kind,
            presentation,
            words,
        } => {
            let p = presentation.load()?;
            let ws = parse_word_list(&words, &p.names).map_err(|e| format!("words: {}", e))?;
            let n = p.generator_count();
            let ideal = match kind {
                IdealKind::Hash => hash_generators(&ws, n),
                IdealKind::Hashhash => hashhash_generators(&ws, n),
                IdealKind::Bullet => bullet_generators(&ws, n),
            };
            let j = ideal.to_json();
            out.emit(&j, || {
                if j.generators.is_empty() {
                    "(zero ideal)".to_string()
                } else {
                    j.generators.join("\n")
                }
            });
            Ok(0)
        }
        Command::Normalgen {
            presentation,
            words,
            hash,
            timeout,
        } => {
            let p = presentation.load()?;
            let ws = parse_word_list(&words, &p.names).map_err(|e| format!("words: {}", e))?;
            let deadline = timeout.map(|s| std::time::Instant::now() + Duration::from_secs(s));
            #[derive(Serialize)]
            struct Report {
                presentation: String,
                words: Vec<String>,
                ideals: &'static str,
                verdict: Option<Verdict>,
                timed_out: bool,
            }
            let (verdict, code) = match normally_generates_check_until(&p, &ws, hash, deadline) {
                Ok(Verdict::CertifiedNo) => (Some(Verdict::CertifiedNo), 0),
                Ok(Verdict::Inconclusive) => (Some(Verdict::Inconclusive), EXIT_INCONCLUSIVE),
                Err(RingError::Timeout) => (None, EXIT_TIMEOUT),
                Err(e) => return Err(e.to_string()),
            };
            let rep = Report {
                presentation: p.render(),
                words: ws.iter().map(|w| w.render_with(&p.names)).collect(),
                ideals: if hash { "hash" } else { "hashhash" },
                verdict,
                timed_out: verdict.is_none(),
            };
            out.emit(&rep, || match verdict {
                Some(Verdict::CertifiedNo) => "certified: the words do not normally generate the group".into(),
                Some(Verdict::Inconclusive) => "inconclusive: the ideals agree".into(),
                None => "timed out".into(),
            });
            Ok(code)
        }
        Command::Boyer { s, t, r, word } => {
            let w = word_arg(&word, 2)?;
            let inst = BoyerInstance::new(s, t, r, w).map_err(|e| e.to_string())?;
            let cert = boyer_certificate(&inst).map_err(|e| e.to_string())?;
            out.emit(&cert, || {
                let mut s = format!("theta image: {}\n", cert.theta_image);
                s += &format!("remainder: {}\n", cert.remainder);
                s += &format!("degree: {}\n", cert.degree);
                s += &format!("leading coefficient: {}\n", cert.leading_coefficient);
                if !cert.component.is_empty() {
                    s += &format!("component: {}\n", cert.component.join(", "));
                }
                s += &format!("inverse: {}\n", cert.unit_certificate.inverse);
                s += &cert.conclusion;
                s
            });
            Ok(0)
        }
        Command::Sw { command } => match command {
            SwCommand::Verify {
                r,
                s,
                t,
                word,
                properness,
                timeout,
            } => {
                let w = word_arg(&word, 3)?;
                let inst = SwInstance::new(r, s, t, w).map_err(|e| e.to_string())?;
                let prop = properness.then(|| timeout.map(Duration::from_secs));
                let rep = sw_verify(&inst, prop).map_err(|e| e.to_string())?;
                out.emit(&rep, || {
                    let mut s = String::new();
                    for c in &rep.checks {
                        s += &format!("{} {}\n", status(c.passed), c.name);
                    }
                    if let Some(p) = rep.properness {
                        s += &format!("properness: {:?}\n", p);
                    }
                    if let Some(c) = &rep.conclusion {
                        s += c;
                    }
                    s.trim_end().to_string()
                });
                Ok(if !rep.checks_passed() {
                    EXIT_ERROR
                } else {
                    match rep.properness {
                        Some(Properness::TimedOut) => EXIT_TIMEOUT,
                        Some(Properness::WholeRing) => EXIT_INCONCLUSIVE,
                        _ => 0,
                    }
                })
            }
            SwCommand::StaticChecks => {
                let rep = sw_static_checks();
                out.emit(&rep, || {
                    rep.checks
                        .iter()
                        .map(|c| format!("{} {}", status(c.passed), c.name))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
                Ok(if rep.passed() { 0 } else { EXIT_ERROR })
            }
            SwCommand::Probe {
                c0,
                c1,
                c2,
                c3,
                trials,
                seed,
            } => {
                let c = [
                    rational_arg("c0", &c0)?,
                    rational_arg("c1", &c1)?,
                    rational_arg("c2", &c2)?,
                    rational_arg("c3", &c3)?,
                ];
                let rep = conjecture_probe(&c, seed, trials).map_err(|e| e.to_string())?;
                out.emit(&rep, || {
                    format!(
                        "seed {}: {} trials, {} counterexamples for W' = {}",
                        rep.seed,
                        rep.trials,
                        rep.counterexamples.len(),
                        rep.w_prime
                    )
                });
                Ok(0)
            }
        },
        Command::Oracle {
            command:
                OracleCommand::Fuzz {
                    trials,
                    seed,
                    length,
                    generators,
                    height,
                },
        } => {
            let rep = fuzz_bar(trials, length, generators, seed, height);
            out.emit(&rep, || {
                let mut s = format!("seed {}: {} trials, {} mismatches", rep.seed, rep.trials, rep.mismatches.len());
                for m in &rep.mismatches {
                    s += &format!("\n  trial {}: {} gives {} vs {}", m.trial, m.word, m.quaternion_mu, m.symbolic_bar);
                }
                s
            });
            Ok(if rep.passed() { 0 } else { EXIT_ERROR })
        }
        Command::Identity {
            command:
                IdentityCommand::Selftest {
                    seed,
                    trials,
                    generators,
                    length,
                    max_power,
                },
        } => {
            let rep = identity_selftest(generators, trials, length, max_power, seed);
            out.emit(&rep, || {
                let mut s = format!("seed {}: {} trials over {} generators", rep.seed, rep.trials, rep.generators);
                for c in &rep.checks {
                    s += &format!("\n{} {}", status(c.failures == 0), c.name);
                    if let Some(f) = &c.first_failure {
                        s += &format!(" ({} failures, first: {})", c.failures, f);
                    }
                }
                s
            });
            Ok(if rep.passed() { 0 } else { EXIT_ERROR })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(EXIT_ERROR)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn arguments_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn rational_flags() {
        assert_eq!(rational_arg("c1", "-1/2").unwrap(), cgring::rat(-1, 2));
        assert!(rational_arg("c1", "x").is_err());
    }
}
