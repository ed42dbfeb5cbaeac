//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 invalid input or suite violation, 2 null
//! operator result, 3 internal invariant failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bcrystal::bicrystal;
use bcrystal::diamond;
use bcrystal::extended::{self, ExtendedElement};
use bcrystal::graph::GraphSlice;
use bcrystal::pbw::PbwDatum;
use bcrystal::tableaux::tableau;
use bcrystal::verify::{run_suite, EnumerationSpec, Suite};
use bcrystal::{CartanType, CrystalElement};

#[derive(Parser)]
#[command(name = "bcrystal", version, about = "Polyhedral crystal toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test membership of a lattice point.
    Check {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        json: bool,
    },
    /// Apply an operator word such as "f1,e2*,f3" left to right.
    Apply {
        #[arg(long)]
        op: String,
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print the tableau T_i (or T_i* with --star).
    Tableau {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        star: bool,
    },
    /// Evaluate a sliding diamond at a position.
    Diamond {
        /// Position "s,t".
        #[arg(long)]
        at: String,
        #[arg(long)]
        star: bool,
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        render: bool,
        #[arg(long)]
        json: bool,
    },
    /// Convert between PBW exponent tuples and lattice coordinates (type A).
    Convert {
        #[arg(long, value_parser = ["pbw", "poly"])]
        from: String,
        #[arg(long, value_parser = ["pbw", "poly"])]
        to: String,
        #[arg(long)]
        cartan: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        tuple: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Apply extended operator words such as "F(1,0),E(2,-1)".
    Extended {
        #[arg(long)]
        op: String,
        /// Extended element as JSON {"cartan":"A3","slots":{"0":[...]}}.
        #[arg(long)]
        element: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite and report violations as JSON.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        cartan: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Export a truncated crystal graph as DOT (or JSON with --json).
    Graph {
        #[arg(long)]
        cartan: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Star edges only (default: usual edges only).
        #[arg(long, conflicts_with = "both")]
        star: bool,
        /// Both edge families.
        #[arg(long)]
        both: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ElementArgs {
    /// Cartan type, e.g. A3 (with --tuple).
    #[arg(long)]
    cartan: Option<String>,
    /// Canonical descending coordinate tuple, e.g. 2,4,0,5,1,3.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    tuple: Option<Vec<i64>>,
    /// Element as JSON {"cartan":"A3","entries":[[s,t,v],...]}.
    #[arg(long)]
    element: Option<String>,
}

impl ElementArgs {
    fn parse(&self) -> anyhow::Result<CrystalElement> {
        match (&self.element, &self.cartan, &self.tuple) {
            (Some(json), _, _) => Ok(CrystalElement::from_json(json)?),
            (None, Some(cartan), Some(tuple)) => {
                let cartan: CartanType = cartan.parse()?;
                Ok(CrystalElement::from_tuple(cartan, tuple)?)
            }
            _ => anyhow::bail!("provide --element JSON or both --cartan and --tuple"),
        }
    }
}

/// One step of an operator word: e/f, node index, star flag.
struct OpStep {
    lower: bool,
    i: usize,
    star: bool,
}

fn parse_word(word: &str) -> anyhow::Result<Vec<OpStep>> {
    word.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (body, star) = match tok.strip_suffix('*') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let lower = match body.chars().next() {
                Some('f') => true,
                Some('e') => false,
                _ => anyhow::bail!("bad operator token {tok:?}"),
            };
            let i: usize = body[1..]
                .parse()
                .map_err(|_| anyhow::anyhow!("bad operator token {tok:?}"))?;
            Ok(OpStep { lower, i, star })
        })
        .collect()
}

/// Extended word step: F/E at (i,k).
struct ExtStep {
    lower: bool,
    i: usize,
    k: i64,
}

fn parse_extended_word(word: &str) -> anyhow::Result<Vec<ExtStep>> {
    word.split("),")
        .map(|tok| {
            let tok = tok.trim().trim_end_matches(')');
            let (head, args) = tok
                .split_once('(')
                .ok_or_else(|| anyhow::anyhow!("bad extended token {tok:?}"))?;
            let lower = match head.trim() {
                "F" => true,
                "E" => false,
                other => anyhow::bail!("bad extended token {other:?}"),
            };
            let (i, k) = args
                .split_once(',')
                .ok_or_else(|| anyhow::anyhow!("bad extended token {tok:?}"))?;
            Ok(ExtStep {
                lower,
                i: i.trim().parse()?,
                k: k.trim().parse()?,
            })
        })
        .collect()
}

fn validate_node(cartan: CartanType, i: usize) -> anyhow::Result<()> {
    if !(1..=cartan.rank()).contains(&i) {
        anyhow::bail!("node index {i} out of range for {cartan}");
    }
    Ok(())
}

/// Distinguishes "null operator result" (exit 2) from input errors (exit 1).
enum CmdOutcome {
    Done,
    Null,
}

fn run(cli: Cli) -> anyhow::Result<CmdOutcome> {
    match cli.command {
        Command::Check { element, json } => {
            let b = element.parse()?;
            let member = b.is_member();
            if json {
                println!(
                    "{{\"cartan\":\"{}\",\"member\":{member},\"weight\":\"{}\"}}",
                    b.cartan(),
                    b.weight()
                );
            } else {
                println!("{}", if member { "member" } else { "not a member" });
            }
        }
        Command::Apply { op, element, json } => {
            let mut b = element.parse()?;
            if !b.is_member() {
                anyhow::bail!("element {b} is not a member");
            }
            for step in parse_word(&op)? {
                validate_node(b.cartan(), step.i)?;
                if step.lower {
                    b = bicrystal::f(&b, step.i, step.star);
                } else {
                    match bicrystal::e(&b, step.i, step.star) {
                        Some(next) => b = next,
                        None => {
                            eprintln!("null");
                            return Ok(CmdOutcome::Null);
                        }
                    }
                }
                if json {
                    println!("{}", b.to_json());
                } else {
                    println!(
                        "{}",
                        b.to_tuple()
                            .iter()
                            .map(i64::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                }
            }
        }
        Command::Tableau { cartan, i, star } => {
            let cartan: CartanType = cartan.parse()?;
            validate_node(cartan, i)?;
            print!("{}", tableau(cartan, i, star).render());
        }
        Command::Diamond {
            at,
            star,
            element,
            render,
            json,
        } => {
            let b = element.parse()?;
            let (s, t) = at
                .split_once(',')
                .ok_or_else(|| anyhow::anyhow!("--at expects \"s,t\""))?;
            let (s, t): (usize, usize) = (s.trim().parse()?, t.trim().parse()?);
            if !b.cartan().in_domain(s, t) {
                anyhow::bail!("({s},{t}) outside the index domain of {}", b.cartan());
            }
            let sum = diamond::diamond_sum(&b, s, t, star);
            if json {
                println!("{{\"at\":[{s},{t}],\"star\":{star},\"sum\":{sum}}}");
            } else {
                println!("{sum}");
            }
            if render {
                print!("{}", diamond::render(&b, s, t, star));
            }
        }
        Command::Convert {
            from,
            to,
            cartan,
            tuple,
            json,
        } => {
            let cartan: CartanType = cartan.parse()?;
            if from == to {
                anyhow::bail!("--from and --to must differ");
            }
            let out: Vec<i64> = if from == "pbw" {
                let datum = PbwDatum::from_tuple(cartan, &tuple)?;
                datum.to_polyhedral().to_tuple()
            } else {
                let b = CrystalElement::from_tuple(cartan, &tuple)?;
                if !b.is_member() {
                    anyhow::bail!("element {b} is not a member");
                }
                PbwDatum::from_polyhedral(&b)?.to_tuple()
            };
            let joined = out.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            if json {
                println!("{{\"cartan\":\"{cartan}\",\"{to}\":[{joined}]}}");
            } else {
                println!("{joined}");
            }
        }
        Command::Extended { op, element, json } => {
            let mut b = ExtendedElement::from_json(&element)?;
            for step in parse_extended_word(&op)? {
                validate_node(b.cartan(), step.i)?;
                b = if step.lower {
                    extended::f_hat(&b, step.i, step.k)
                } else {
                    extended::e_hat(&b, step.i, step.k)
                };
                if json {
                    println!("{}", b.to_json());
                } else {
                    println!("{b}");
                }
            }
        }
        Command::Verify {
            suite,
            cartan,
            depth,
            seed,
        } => {
            let suite: Suite = suite.parse()?;
            let cartan: CartanType = cartan.parse()?;
            let report = run_suite(suite, &EnumerationSpec::depth(cartan, depth), seed);
            println!("{}", report.to_json());
            if !report.passed() {
                anyhow::bail!(
                    "suite {suite} reported {} violations",
                    report.violations.len()
                );
            }
        }
        Command::Graph {
            cartan,
            depth,
            star,
            both,
            json,
        } => {
            let cartan: CartanType = cartan.parse()?;
            let (usual, star) = if both { (true, true) } else { (!star, star) };
            let g = GraphSlice::build(cartan, depth, usual, star);
            if json {
                println!("{}", g.to_json());
            } else {
                print!("{}", g.to_dot());
            }
        }
    }
    Ok(CmdOutcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(CmdOutcome::Done)) => ExitCode::SUCCESS,
        Ok(Ok(CmdOutcome::Null)) => ExitCode::from(2),
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
        // a panic below the CLI layer means a broken internal invariant
        Err(_) => ExitCode::from(3),
    }
}
