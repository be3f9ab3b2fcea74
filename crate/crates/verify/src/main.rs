use std::fs;
use std::process::ExitCode;

use braidforge::report::{EXIT_MALFORMED, EXIT_OK};
use braidforge::{claimed, emit_report, exit_code, parse_range, run_suite, Ctx, Format, GroupFamily, Suite, TheoremTable};
use braidforge_core::finite::pure_elements;
use braidforge_core::schreier::pure_subgroup;
use braidforge_core::{
    abelian_invariants, concretize, enumerate, family_presentation, identify, named_word, normal_form, EnumLimits,
    EnumOutcome, Family, Named, Presentation, Strategy, Word,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "braidforge", version, about = "Braid and mapping class group computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct EnumArgs {
    #[arg(long, default_value_t = 2_000_000)]
    max_cosets: usize,
    /// hlt or felsch
    #[arg(long, default_value = "hlt", value_parser = parse_strategy)]
    strategy: Strategy,
}

impl EnumArgs {
    fn limits(&self) -> EnumLimits {
        EnumLimits::default().with_max_cosets(self.max_cosets).with_strategy(self.strategy)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a presentation, e.g. `define BS2:4`.
    Define { family: String },
    /// Garside normal form of a word in B_n.
    Nf {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Exit 0 if two words are equal in B_n, 1 otherwise.
    Eq {
        #[arg(long)]
        n: usize,
        u: String,
        v: String,
    },
    /// Abelian invariants.
    Ab {
        family: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Order of a group or of a quotient by the normal closure of `--mod`.
    Order {
        family: String,
        #[arg(long = "mod")]
        modulo: Option<String>,
        /// Print the coset table.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Index of the subgroup generated by a comma-separated list.
    Index {
        family: String,
        #[arg(long)]
        subgroup: String,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Abelian invariants of the pure subgroup.
    PureAb {
        family: String,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Isomorphism type of a small finite group or quotient.
    Identify {
        family: String,
        #[arg(long = "mod")]
        modulo: Option<String>,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Conjugacy classes of a finite group, optionally filtered (`order=4,pure`).
    Classes {
        family: String,
        #[arg(long)]
        filter: Option<String>,
        /// Conjugate by the pure subgroup only.
        #[arg(long)]
        pure_conjugation: bool,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Run a claim suite and write a report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "3..6")]
        n: String,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = braidforge::DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Print claimed G, NG, TG, NTG values.
    Table {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "2..10")]
        n: String,
    },
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s {
        "hlt" => Ok(Strategy::HltLookahead),
        "felsch" => Ok(Strategy::Felsch),
        other => Err(format!("unknown strategy {other:?}; expected hlt or felsch")),
    }
}

/// A failure that should exit with the given code.
struct Fail(i32, String);

fn malformed(e: impl std::fmt::Display) -> Fail {
    Fail(EXIT_MALFORMED, e.to_string())
}

fn presentation(family: &str) -> Result<(Family, Presentation), Fail> {
    let f: Family = family.parse().map_err(malformed)?;
    Ok((f, family_presentation(f).map_err(malformed)?))
}

/// Splits on commas outside parentheses.
fn split_list(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.into_iter().filter(|x| !x.is_empty()).collect()
}

/// A named element such as `alpha0` or `A_ij(1,3)`, or a word in the generators.
fn element(f: Family, p: &Presentation, s: &str) -> Result<Word, Fail> {
    if let Ok(name) = s.parse::<Named>() {
        return named_word(f.surface(), name, f.strands()).map_err(malformed);
    }
    p.parse_word(s).map_err(malformed)
}

fn elements(f: Family, p: &Presentation, list: &str) -> Result<Vec<Word>, Fail> {
    split_list(list).into_iter().map(|s| element(f, p, s)).collect()
}

fn with_mod(f: Family, p: Presentation, modulo: &Option<String>) -> Result<Presentation, Fail> {
    match modulo {
        Some(m) => p.add_relators(&elements(f, &p, m)?).map_err(malformed),
        None => Ok(p),
    }
}

fn completed(outcome: EnumOutcome, limits: EnumLimits) -> Result<braidforge_core::CosetTable, Fail> {
    match outcome {
        EnumOutcome::Completed(t) => Ok(t),
        EnumOutcome::ResourceExceeded(live) => Err(Fail(
            EXIT_OK,
            format!("inconclusive: coset limit {} reached ({live} cosets live)", limits.max_cosets),
        )),
    }
}

fn run(cli: Cli) -> Result<i32, Fail> {
    match cli.command {
        Command::Define { family } => {
            let (_, p) = presentation(&family)?;
            println!("{p}");
            Ok(EXIT_OK)
        }
        Command::Nf { n, word } => {
            let p = braidforge_core::artin(n).map_err(malformed)?;
            let w = element(Family::Braid { surface: braidforge_core::Surface::Disc, n }, &p, &word)?;
            println!("{}", normal_form(&w, n).map_err(malformed)?);
            Ok(EXIT_OK)
        }
        Command::Eq { n, u, v } => {
            let f = Family::Braid { surface: braidforge_core::Surface::Disc, n };
            let p = braidforge_core::artin(n).map_err(malformed)?;
            let (u, v) = (element(f, &p, &u)?, element(f, &p, &v)?);
            let equal = normal_form(&u, n).map_err(malformed)? == normal_form(&v, n).map_err(malformed)?;
            println!("{}", if equal { "equal" } else { "not equal" });
            Ok(if equal { 0 } else { 1 })
        }
        Command::Ab { family, format } => {
            let (_, p) = presentation(&family)?;
            let ab = abelian_invariants(&p);
            match format.as_str() {
                "json" => println!(
                    "{}",
                    serde_json::json!({ "family": family, "free_rank": ab.free_rank, "torsion": ab.torsion })
                ),
                "text" => println!("{ab}"),
                other => return Err(malformed(format!("unknown format {other:?}"))),
            }
            Ok(EXIT_OK)
        }
        Command::Order { family, modulo, table, enumeration } => {
            let (f, p) = presentation(&family)?;
            let p = with_mod(f, p, &modulo)?;
            let limits = enumeration.limits();
            let t = completed(enumerate(&p, &[], limits).map_err(malformed)?, limits)?;
            println!("{}", t.n_cosets());
            if table {
                print!("{t}");
            }
            Ok(EXIT_OK)
        }
        Command::Index { family, subgroup, enumeration } => {
            let (f, p) = presentation(&family)?;
            let gens = elements(f, &p, &subgroup)?;
            let limits = enumeration.limits();
            let t = completed(enumerate(&p, &gens, limits).map_err(malformed)?, limits)?;
            println!("{}", t.n_cosets());
            Ok(EXIT_OK)
        }
        Command::PureAb { family, enumeration } => {
            let (_, p) = presentation(&family)?;
            match pure_subgroup(&p, enumeration.limits()).map_err(malformed)? {
                Some((t, sp)) => {
                    println!("index {}: {}", t.n_cosets(), abelian_invariants(&sp.presentation));
                    Ok(EXIT_OK)
                }
                None => Err(Fail(EXIT_OK, "inconclusive: coset limit reached".into())),
            }
        }
        Command::Identify { family, modulo, enumeration } => {
            let (f, p) = presentation(&family)?;
            let p = with_mod(f, p, &modulo)?;
            let limits = enumeration.limits();
            let t = completed(enumerate(&p, &[], limits).map_err(malformed)?, limits)?;
            println!("{}", identify(&concretize(&t).map_err(malformed)?));
            Ok(EXIT_OK)
        }
        Command::Classes { family, filter, pure_conjugation, enumeration } => {
            let (_, p) = presentation(&family)?;
            let limits = enumeration.limits();
            let g = concretize(&completed(enumerate(&p, &[], limits).map_err(malformed)?, limits)?).map_err(malformed)?;
            let pure = pure_elements(&g, &p).map_err(malformed)?;
            let (mut want_order, mut want_pure) = (None, false);
            for part in filter.as_deref().map(split_list).unwrap_or_default() {
                match part.split_once('=') {
                    Some(("order", k)) => want_order = Some(k.trim().parse::<u64>().map_err(malformed)?),
                    None if part == "pure" => want_pure = true,
                    _ => return Err(malformed(format!("unknown filter {part:?}"))),
                }
            }
            let subset: Vec<usize> = g
                .elements()
                .filter(|&x| want_order.map_or(true, |k| g.element_order(x) == k))
                .filter(|x| !want_pure || pure.contains(x))
                .collect();
            let acting: Vec<usize> = if pure_conjugation { pure.clone() } else { g.elements().collect() };
            let classes = g.classes_under(&subset, &acting);
            println!("{} classes", classes.len());
            for c in &classes {
                let rep = p.format_word(g.word(c[0]));
                println!("  size {:>3}  order {:>2}  {}", c.len(), g.element_order(c[0]), rep);
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, n, format, out, seed, enumeration } => {
            let suite: Suite = suite.parse().map_err(malformed)?;
            let ns = parse_range(&n).map_err(malformed)?;
            let format: Format = format.parse().map_err(malformed)?;
            let ctx = Ctx { limits: enumeration.limits(), seed };
            let results = run_suite(suite, ns.clone(), &ctx);
            let text = emit_report(&results, suite, &ns, &ctx, format);
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| Fail(1, format!("cannot write {path}: {e}")))?,
                None => print!("{text}"),
            }
            Ok(exit_code(&results))
        }
        Command::Table { family, n } => {
            let f: GroupFamily = family.parse().map_err(malformed)?;
            let ns = parse_range(&n).map_err(malformed)?;
            if ns.clone().all(|k| claimed(f, k).is_none()) {
                return Err(malformed(format!("{f} has no tabulated values in {n}")));
            }
            print!("{}", TheoremTable::new(f, ns));
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_MALFORMED as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Fail(code, msg)) => {
            eprintln!("braidforge: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
