//! Command-line surface: validate and analyze table files, emit corpora,
//! and run the conformance engine.
//!
//! Exit codes: 0 success; 1 validation or check failure (including
//! expected-pass conformance failures); 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gammasg::classify::classify;
use gammasg::conformance::{run_on, ConformanceReport};
use gammasg::enumerate::{
    build_corpus, default_conformance_manifest, CorpusManifest, CorpusSpec, Strategy, CELL_CAP,
    MAX_TRIES_DEFAULT,
};
use gammasg::error::Result;
use gammasg::green::{egg_box_text, green_structure, idempotent_order, primitive_idempotents};
use gammasg::ideals::{all_ideals, least_ideal, IdealKind};
use gammasg::io::{parse, read_corpus, write_corpus};
use gammasg::prime::all_prime_ideals;
use gammasg::semigroup::{GammaSemigroup, IdempotentMode};

#[derive(Parser)]
#[command(
    name = "gammasg",
    version,
    about = "Exact analysis of finite gamma-semigroups given as ternary tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdealsArg {
    Left,
    Right,
    #[value(name = "two-sided")]
    TwoSided,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Human,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a table file; diagnostics on failure.
    Validate { file: PathBuf },
    /// Report on one instance; sections are opt-in via flags.
    Analyze {
        file: PathBuf,
        /// Ideal catalogs (and the least ideal) of the given kind.
        #[arg(long, value_enum)]
        ideals: Option<IdealsArg>,
        /// Green's relations: class partitions and the egg-box diagram.
        #[arg(long)]
        green: bool,
        /// Idempotents, the idempotent order, and primitive idempotents.
        #[arg(long)]
        idempotents: bool,
        /// Simplicity flags via both routes, with any disagreements.
        #[arg(long)]
        classify: bool,
        /// Prime two-sided ideals.
        #[arg(long)]
        primes: bool,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Produce a corpus directory (table files plus a manifest).
    Enumerate {
        /// Carrier size (exhaustive/random) or maximum size (structured).
        #[arg(long)]
        n: Option<usize>,
        /// Gamma count (exhaustive/random).
        #[arg(long)]
        m: Option<usize>,
        /// Every associative table of the given shape.
        #[arg(long, conflicts_with = "random")]
        exhaustive: bool,
        /// Seeded rejection-sampled tables of the given shape.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 1729)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Per-instance try budget for --random.
        #[arg(long, default_value_t = MAX_TRIES_DEFAULT)]
        max_tries: usize,
        /// The labeled structured families.
        #[arg(long)]
        structured: bool,
        /// Deduplicate up to isomorphism (canonical forms).
        #[arg(long)]
        iso_reduce: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the claim registry over a corpus.
    Conform {
        /// Corpus directory (from `enumerate`); defaults to the pinned
        /// built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated check ids (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Write the TSV report here (default: stdout after the summary).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn load(file: &PathBuf) -> Result<GammaSemigroup> {
    parse(&fs::read_to_string(file)?)
}

fn ideal_kinds(arg: IdealsArg) -> Vec<IdealKind> {
    match arg {
        IdealsArg::Left => vec![IdealKind::Left],
        IdealsArg::Right => vec![IdealKind::Right],
        IdealsArg::TwoSided => vec![IdealKind::TwoSided],
        IdealsArg::All => IdealKind::all().to_vec(),
    }
}

fn analyze(
    s: &GammaSemigroup,
    ideals: Option<IdealsArg>,
    green: bool,
    idempotents: bool,
    do_classify: bool,
    primes: bool,
    format: FormatArg,
) -> Result<String> {
    let mut out = String::new();
    let human = format == FormatArg::Human;
    if human {
        out.push_str(&format!(
            "instance: n={} m={}{}\n",
            s.n(),
            s.m(),
            match s.zero() {
                Some(z) => format!(" zero={}", s.element_label(z)),
                None => String::new(),
            }
        ));
        out.push_str(&format!("commutative: {}\n", s.is_commutative()));
    } else {
        out.push_str(&format!("summary\tn\t{}\n", s.n()));
        out.push_str(&format!("summary\tm\t{}\n", s.m()));
        if let Some(z) = s.zero() {
            out.push_str(&format!("summary\tzero\t{z}\n"));
        }
        out.push_str(&format!("summary\tcommutative\t{}\n", s.is_commutative()));
    }

    if let Some(arg) = ideals {
        for kind in ideal_kinds(arg) {
            let catalog = all_ideals(s, kind)?;
            let least = least_ideal(s, kind);
            if human {
                out.push_str(&format!("{kind} ideals ({}):\n", catalog.ideals.len()));
                for b in &catalog.ideals {
                    out.push_str(&format!("  {}\n", b.render(s)));
                }
                out.push_str(&format!(
                    "least {kind} ideal: {} (ideal: {})\n",
                    least.set.render(s),
                    least.is_ideal
                ));
            } else {
                for (i, b) in catalog.ideals.iter().enumerate() {
                    out.push_str(&format!("ideal\t{kind}\t{i}\t{}\n", b.render_indices()));
                }
                out.push_str(&format!(
                    "least\t{kind}\t{}\t{}\n",
                    least.set.render_indices(),
                    least.is_ideal
                ));
            }
        }
    }

    if green {
        let g = green_structure(s);
        if human {
            for (name, classes) in [("L", &g.l_classes), ("R", &g.r_classes), ("D", &g.d_classes)]
            {
                let rendered: Vec<String> = classes
                    .iter()
                    .map(|c| {
                        let inner: Vec<String> =
                            c.iter().map(|&e| s.element_label(e)).collect();
                        format!("{{{}}}", inner.join(","))
                    })
                    .collect();
                out.push_str(&format!("{name}-classes: {}\n", rendered.join(" ")));
            }
            out.push_str(&format!(
                "lr-composition-commutes: {}\n",
                g.lr_composition_commutes
            ));
            out.push_str("egg-box:\n");
            out.push_str(&egg_box_text(s));
        } else {
            for (name, classes) in [("L", &g.l_classes), ("R", &g.r_classes), ("D", &g.d_classes)]
            {
                for (i, c) in classes.iter().enumerate() {
                    let inner: Vec<String> = c.iter().map(usize::to_string).collect();
                    out.push_str(&format!("green\t{name}\t{i}\t{{{}}}\n", inner.join(",")));
                }
            }
            out.push_str(&format!(
                "green\tlr_composition_commutes\t\t{}\n",
                g.lr_composition_commutes
            ));
        }
    }

    if idempotents {
        let exists = s.idempotents(IdempotentMode::Exists);
        let forall = s.idempotents(IdempotentMode::ForAll);
        let order = idempotent_order(s);
        let prim = primitive_idempotents(s);
        let label_list = |list: &[usize]| {
            let inner: Vec<String> = list.iter().map(|&e| s.element_label(e)).collect();
            inner.join(" ")
        };
        if human {
            out.push_str(&format!("idempotents (exists mode): {}\n", label_list(&exists)));
            out.push_str(&format!("idempotents (forall mode): {}\n", label_list(&forall)));
            out.push_str(&format!("primitive idempotents: {}\n", label_list(&prim)));
            out.push_str(&format!(
                "idempotent order: antisymmetric={} transitive={}\n",
                order.antisymmetric, order.transitive
            ));
        } else {
            for e in &exists {
                out.push_str(&format!("idempotent\texists\t{e}\n"));
            }
            for e in &forall {
                out.push_str(&format!("idempotent\tforall\t{e}\n"));
            }
            for e in &prim {
                out.push_str(&format!("primitive\t{e}\n"));
            }
            out.push_str(&format!("order\tantisymmetric\t{}\n", order.antisymmetric));
            out.push_str(&format!("order\ttransitive\t{}\n", order.transitive));
        }
    }

    if do_classify {
        let c = classify(s)?;
        let flags = [
            ("left-simple", c.left_simple),
            ("right-simple", c.right_simple),
            ("simple", c.simple),
            ("left-0-simple", c.left_0_simple),
            ("right-0-simple", c.right_0_simple),
            ("0-simple", c.zero_simple),
            ("completely-0-simple", c.completely_zero_simple),
            ("gamma-group-with-zero", c.gamma_group_with_zero),
        ];
        for (name, value) in flags {
            if human {
                out.push_str(&format!("{name}: {value}\n"));
            } else {
                out.push_str(&format!("classify\t{name}\t{value}\n"));
            }
        }
        for d in &c.disagreements {
            if human {
                out.push_str(&format!(
                    "route disagreement on {}: definitional={} characterization={}\n",
                    d.flag, d.route_a, d.route_b
                ));
            } else {
                out.push_str(&format!(
                    "disagreement\t{}\t{}\t{}\n",
                    d.flag, d.route_a, d.route_b
                ));
            }
        }
    }

    if primes {
        let ps = all_prime_ideals(s)?;
        if human {
            out.push_str(&format!("prime two-sided ideals ({}):\n", ps.len()));
            for p in &ps {
                out.push_str(&format!("  {}\n", p.render(s)));
            }
        } else {
            for (i, p) in ps.iter().enumerate() {
                out.push_str(&format!("prime\t{i}\t{}\n", p.render_indices()));
            }
        }
    }

    Ok(out)
}

struct EnumerateOpts {
    n: Option<usize>,
    m: Option<usize>,
    exhaustive: bool,
    random: bool,
    seed: u64,
    count: usize,
    max_tries: usize,
    structured: bool,
    iso_reduce: bool,
}

fn enumerate_manifest(opts: &EnumerateOpts) -> std::result::Result<CorpusManifest, String> {
    if !opts.exhaustive && !opts.random && !opts.structured {
        return Err("choose at least one of --exhaustive, --random, --structured".to_string());
    }
    let mut parts = Vec::new();
    if opts.exhaustive || opts.random {
        let (Some(n), Some(m)) = (opts.n, opts.m) else {
            return Err("--exhaustive/--random require --n and --m".to_string());
        };
        let strategy = if opts.exhaustive {
            Strategy::Exhaustive
        } else {
            Strategy::Random {
                seed: opts.seed,
                count: opts.count,
                max_tries: opts.max_tries,
            }
        };
        parts.push(CorpusSpec {
            n_range: (n, n),
            m_range: (m, m),
            strategy,
            adjoin_zero: false,
            iso_reduce: opts.iso_reduce,
            cell_cap: CELL_CAP.max(n * m * n),
        });
    }
    if opts.structured {
        parts.push(CorpusSpec {
            n_range: (1, opts.n.unwrap_or(12)),
            m_range: (1, usize::MAX),
            strategy: Strategy::Structured { families: None },
            adjoin_zero: false,
            iso_reduce: opts.iso_reduce,
            cell_cap: CELL_CAP,
        });
    }
    Ok(CorpusManifest { parts })
}

fn print_report(report: &ConformanceReport, report_path: Option<&PathBuf>) -> Result<()> {
    print!("{}", report.summary());
    match report_path {
        Some(path) => fs::write(path, report.to_tsv())?,
        None => print!("{}", report.to_tsv()),
    }
    Ok(())
}

fn real_main(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => match load(&file) {
            Ok(s) => {
                println!(
                    "valid gamma-semigroup: n={} m={}{}",
                    s.n(),
                    s.m(),
                    match s.zero() {
                        Some(z) => format!(" zero={}", s.element_label(z)),
                        None => String::new(),
                    }
                );
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                eprintln!("invalid: {e}");
                Ok(ExitCode::FAILURE)
            }
        },
        Command::Analyze {
            file,
            ideals,
            green,
            idempotents,
            classify,
            primes,
            format,
        } => {
            let s = load(&file)?;
            print!(
                "{}",
                analyze(&s, ideals, green, idempotents, classify, primes, format)?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            m,
            exhaustive,
            random,
            seed,
            count,
            max_tries,
            structured,
            iso_reduce,
            out,
        } => {
            let manifest = match enumerate_manifest(&EnumerateOpts {
                n,
                m,
                exhaustive,
                random,
                seed,
                count,
                max_tries,
                structured,
                iso_reduce,
            }) {
                Ok(manifest) => manifest,
                Err(usage) => {
                    eprintln!("usage error: {usage}");
                    return Ok(ExitCode::from(2));
                }
            };
            let corpus = build_corpus(&manifest)?;
            write_corpus(&out, &corpus)?;
            println!("wrote {} instances to {}", corpus.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Conform {
            corpus,
            checks,
            report,
        } => {
            let instances = match &corpus {
                Some(dir) => read_corpus(dir)?,
                None => build_corpus(&default_conformance_manifest())?,
            };
            let result = run_on(&instances, checks.as_deref())?;
            print_report(&result, report.as_ref())?;
            if result.expected_pass_failures > 0 {
                eprintln!(
                    "{} expected-pass failure(s)",
                    result.expected_pass_failures
                );
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
