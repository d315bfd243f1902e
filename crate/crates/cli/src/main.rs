use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, ColorChoice, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use splitloci::{
    build_hasse_with, closed_form_alpha, count_maximal_chains, enumerate_k_uniform_with,
    enumerate_maximal_chains_with, family_grid, saturation, splitting_locus_with, CVector,
    ChainOfLoops, Error, Guards, Modulus, Partition, SplittingType, Tableau, FAMILY_NAMES,
};

#[derive(Parser)]
#[command(
    name = "splitloci",
    version,
    about = "Splitting type loci, k-cores and chain counts",
    after_help = "Negative entries may be written as --mu -3,-1,1 or --mu=-3,-1,1."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    guards: GuardArgs,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct GuardArgs {
    /// Largest shape, in boxes, for tableau enumeration.
    #[arg(long, global = true)]
    max_boxes: Option<usize>,
    /// Most maximal chains to enumerate.
    #[arg(long, global = true)]
    max_chains: Option<u128>,
    /// Most nodes in a Hasse diagram.
    #[arg(long, global = true)]
    max_nodes: Option<usize>,
    /// Most tori in a splitting locus.
    #[arg(long, global = true)]
    max_tori: Option<u128>,
}

impl GuardArgs {
    fn guards(&self) -> Guards {
        let d = Guards::default();
        Guards {
            max_boxes: self.max_boxes.unwrap_or(d.max_boxes),
            max_chains: self.max_chains.unwrap_or(d.max_chains),
            max_nodes: self.max_nodes.unwrap_or(d.max_nodes),
            max_tori: self.max_tori.unwrap_or(d.max_tori),
        }
    }
}

/// A splitting type, or a C-vector with its modulus.
#[derive(Args)]
struct Source {
    /// Splitting type, comma separated.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["cvec", "k"])]
    mu: Option<String>,
    /// C-vector, comma separated.
    #[arg(long, requires = "k")]
    cvec: Option<String>,
    /// Length of the C-vector.
    #[arg(long)]
    k: Option<usize>,
}

impl Source {
    fn cvector(&self) -> Result<CVector, Failure> {
        match (&self.mu, &self.cvec, self.k) {
            (Some(mu), None, None) => Ok(parse_mu(mu)?.c_vector()),
            (None, Some(c), Some(k)) => {
                let c: CVector = c.parse()?;
                Modulus::new(k)?;
                if c.modulus().get() != k {
                    return Err(Error::ModulusMismatch {
                        expected: k,
                        found: c.modulus().get(),
                    }
                    .into());
                }
                Ok(c)
            }
            _ => Err(Failure::Usage(
                "give either --mu or both --cvec and --k".to_string(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// The staircase of a splitting type with its C-vector and rank.
    Lambda {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// The number of maximal chains below a C-vector.
    Count {
        #[command(flatten)]
        source: Source,
    },
    /// The Hasse diagram of the ideal below a C-vector.
    Hasse {
        #[command(flatten)]
        source: Source,
    },
    /// Every maximal chain below a C-vector, as residues from the bottom up.
    Chains {
        #[command(flatten)]
        source: Source,
    },
    /// k-uniform tableaux on a staircase or a given core.
    Tableaux {
        /// Splitting type whose staircase is the shape.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["shape", "k"])]
        mu: Option<String>,
        /// Shape as comma separated row lengths.
        #[arg(long, requires = "k")]
        shape: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// Alphabet size.
        #[arg(long)]
        g: u32,
        /// Keep only k-saturated tableaux.
        #[arg(long)]
        saturated: bool,
        /// Stop after this many tableaux.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Saturate a tableau read from a file, one row per line.
    Saturate {
        /// Path to the tableau, or - for standard input.
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Alphabet size.
        #[arg(long)]
        g: u32,
    },
    /// The tori of a splitting type locus on a chain of loops.
    Locus {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Genus of the chain of loops.
        #[arg(long)]
        g: u32,
    },
    /// Whether a locus is connected in codimension one.
    Connect {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        g: u32,
    },
    /// Compare a closed-form family against the recurrence.
    Verify {
        /// One of the family names listed in the help.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(FAMILY_NAMES))]
        family: String,
        /// Size bound for the family grid.
        #[arg(long, default_value_t = 6)]
        z_max: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn parse_mu(s: &str) -> Result<SplittingType, Failure> {
    Ok(s.parse()?)
}

fn modulus(k: usize) -> Result<Modulus, Failure> {
    Ok(Modulus::new(k)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn only_text_or_json(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(format!("`{what}` has no dot output")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String, Failure> {
    let guards = cli.guards.guards();
    let format = cli.format;
    match cli.command {
        Command::Lambda { mu } => {
            only_text_or_json(format, "lambda")?;
            let m = parse_mu(&mu)?;
            let k = m.k();
            let lam = m.lambda();
            let c = m.c_vector();
            Ok(match format {
                Format::Json => pretty(&json!({
                    "mu": m.entries(),
                    "k": k.get(),
                    "lambda": lam.rows(),
                    "cvector": c.entries(),
                    "rho": lam.rho(k),
                    "magnitude": m.magnitude(),
                })),
                _ => format!(
                    "mu: {m}\nk: {k}\nlambda: {lam}\ncvector: {c}\nrho: {}\nmagnitude: {}\n",
                    lam.rho(k),
                    m.magnitude()
                ),
            })
        }
        Command::Count { source } => {
            only_text_or_json(format, "count")?;
            let c = source.cvector()?;
            let alpha = count_maximal_chains(&c);
            Ok(match format {
                Format::Json => pretty(&json!({
                    "cvector": c.entries(),
                    "alpha": alpha.to_string(),
                })),
                _ => format!("{alpha}\n"),
            })
        }
        Command::Hasse { source } => {
            let h = build_hasse_with(&source.cvector()?, &guards)?;
            Ok(match format {
                Format::Json => h.to_json() + "\n",
                Format::Dot => h.to_dot(),
                Format::Text => {
                    let mut s = String::new();
                    for n in &h.nodes {
                        writeln!(s, "{}\trho={}\talpha={}", n.cvec, n.rho, n.alpha).unwrap();
                    }
                    s
                }
            })
        }
        Command::Chains { source } => {
            only_text_or_json(format, "chains")?;
            let chains: Vec<_> =
                enumerate_maximal_chains_with(&source.cvector()?, &guards)?.collect();
            Ok(match format {
                Format::Json => pretty(&Value::from(
                    chains
                        .iter()
                        .map(|c| Value::from(c.residues()))
                        .collect::<Vec<_>>(),
                )),
                _ => chains.iter().map(|c| format!("{c}\n")).collect(),
            })
        }
        Command::Tableaux {
            mu,
            shape,
            k,
            g,
            saturated,
            limit,
        } => {
            only_text_or_json(format, "tableaux")?;
            let (shape, k) = match (mu, shape, k) {
                (Some(mu), None, None) => {
                    let m = parse_mu(&mu)?;
                    (m.lambda(), m.k())
                }
                (None, Some(shape), Some(k)) => (shape.parse::<Partition>()?, modulus(k)?),
                _ => {
                    return Err(Failure::Usage(
                        "give either --mu or both --shape and --k".to_string(),
                    ))
                }
            };
            if !shape.is_k_core(k) {
                return Err(Error::NotACore(shape.to_string(), k.get()).into());
            }
            let found: Vec<Tableau> = enumerate_k_uniform_with(&shape, k, g, &guards)?
                .filter(|t| !saturated || t.is_k_saturated(k))
                .take(limit.unwrap_or(usize::MAX))
                .collect();
            Ok(match format {
                Format::Json => pretty(&serde_json::to_value(&found).expect("tableaux serialize")),
                _ => found
                    .iter()
                    .map(Tableau::to_text)
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Command::Saturate { file, k, g } => {
            only_text_or_json(format, "saturate")?;
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Domain(format!("reading standard input: {e}")))?;
                s
            } else {
                std::fs::read_to_string(&file)
                    .map_err(|e| Failure::Domain(format!("reading {}: {e}", file.display())))?
            };
            let t = Tableau::from_text(&text, g)?;
            let s = saturation(&t, modulus(k)?)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "tableau": serde_json::to_value(&s.tableau).expect("tableau serializes"),
                    "symbols": s.symbols,
                    "chain": s.chain.residues(),
                })),
                _ => s.tableau.to_text(),
            })
        }
        Command::Locus { mu, g } => {
            only_text_or_json(format, "locus")?;
            let m = parse_mu(&mu)?;
            let locus = splitting_locus_with(&m, &ChainOfLoops::new(g, m.k()), &guards)?;
            Ok(match format {
                Format::Json => locus.to_json() + "\n",
                _ => {
                    let mut s = String::new();
                    let dim = locus
                        .dimension()
                        .map_or_else(|| "empty".to_string(), |d| d.to_string());
                    writeln!(s, "mu: {m}\ng: {g}\ndimension: {dim}").unwrap();
                    writeln!(s, "tori: {}", locus.tori.len()).unwrap();
                    if let Ok(c) = locus.cardinality() {
                        writeln!(s, "cardinality: {c}").unwrap();
                    }
                    for t in &locus.tori {
                        let constraints: Vec<String> = t
                            .torus
                            .constraints
                            .iter()
                            .map(|(j, r)| format!("{j}:{r}"))
                            .collect();
                        writeln!(s, "\n{}{}", t.tableau, constraints.join(" ")).unwrap();
                    }
                    s
                }
            })
        }
        Command::Connect { mu, g } => {
            only_text_or_json(format, "connect")?;
            let m = parse_mu(&mu)?;
            let locus = splitting_locus_with(&m, &ChainOfLoops::new(g, m.k()), &guards)?;
            let connected = locus.is_connected_in_codimension_one()?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "mu": m.entries(),
                    "g": g,
                    "tori": locus.tori.len(),
                    "connected": connected,
                })),
                _ => format!(
                    "{}\n",
                    if connected {
                        "connected"
                    } else {
                        "disconnected"
                    }
                ),
            })
        }
        Command::Verify { family, z_max } => {
            only_text_or_json(format, "verify")?;
            let mut rows = Vec::new();
            for f in family_grid(&family, z_max)? {
                let closed = closed_form_alpha(&f)?;
                let rec = f.recurrence()?;
                rows.push((f.to_string(), closed, rec));
            }
            let all_agree = rows.iter().all(|(_, c, r)| c == r);
            let out = match format {
                Format::Json => pretty(&json!({
                    "family": family,
                    "bound": z_max,
                    "agree": all_agree,
                    "rows": rows
                        .iter()
                        .map(|(m, c, r)| json!({
                            "member": m,
                            "closed_form": c.to_string(),
                            "recurrence": r.to_string(),
                        }))
                        .collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = String::from("member\tclosed form\trecurrence\n");
                    for (m, c, r) in &rows {
                        let mark = if c == r { "" } else { "\tMISMATCH" };
                        writeln!(s, "{m}\t{c}\t{r}{mark}").unwrap();
                    }
                    let verdict = if all_agree { "agree" } else { "DISAGREE" };
                    writeln!(s, "{} rows {verdict}", rows.len()).unwrap();
                    s
                }
            };
            if all_agree {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Domain(
                    "closed form and recurrence disagree".to_string(),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let color = if std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty()) {
        ColorChoice::Never
    } else {
        ColorChoice::Auto
    };
    let matches = Cli::command().color(color).get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
