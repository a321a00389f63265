use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qleader::errormodel::{DescentRule, ErrorPartition, LhMinimality};
use qleader::geometry::{Oracle, VoronoiRule};
use qleader::leadercw::LeaderCodewords;
use qleader::leaderset::Criterion3Scope;
use qleader::verify::{run_all, VerifyOptions};
use qleader::{Error, Limits, LinearCode, ListClosure, TieBreak, WeightCompatibleOrder, Word};

/// Coset leaders, leader codewords and trial sets of q-ary linear codes.
#[derive(Parser)]
#[command(name = "qleader", version)]
struct Cli {
    /// Tie-break of the weight-compatible order.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Lex)]
    order: OrderArg,
    /// Upper bound on any exhaustive enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_enum)]
    max_enum: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Voronoi regions against every codeword (the default).
    #[arg(long, global = true, conflicts_with = "literal_voronoi")]
    strict_voronoi: bool,
    /// Voronoi regions against nonzero codewords only.
    #[arg(long, global = true)]
    literal_voronoi: bool,
    /// Minimality used for larger halves.
    #[arg(long, global = true, value_enum, default_value_t = LhArg::Subword1)]
    lh_minimality: LhArg,
    /// Descendant criterion scope of the closure.
    #[arg(long, global = true, value_enum, default_value_t = ScopeArg::GenSupport)]
    scope: ScopeArg,
    /// Descent rule of the decoder.
    #[arg(long, global = true, value_enum, default_value_t = DescentArg::Steepest)]
    descent: DescentArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Colex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum LhArg {
    Subword1,
    Order,
    Restriction,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    GenSupport,
    Coordinate,
}

#[derive(Clone, Copy, ValueEnum)]
enum DescentArg {
    Steepest,
    FirstFit,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    Trial,
    Leader,
}

#[derive(Subcommand)]
enum Command {
    /// Coset weight and leaders of every syndrome.
    CosetLeaders { file: PathBuf },
    /// Leader codewords with a witness each.
    LeaderCodewords {
        file: PathBuf,
        #[arg(long)]
        all_witnesses: bool,
    },
    /// The trial set extracted from the leader codewords.
    TrialSet { file: PathBuf },
    /// Zero neighbours by brute force.
    ZeroNeighbours {
        file: PathBuf,
        /// Also list the leader codewords and the difference.
        #[arg(long)]
        compare_leader_codewords: bool,
    },
    /// Gradient-descent decoding of one word.
    Decode {
        file: PathBuf,
        /// Word in comma-digit notation, one field element per token.
        word: String,
        #[arg(long, value_enum, default_value_t = SetArg::Leader)]
        set: SetArg,
    },
    /// Runs every check and exits nonzero when one fails.
    Verify { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qleader: {e}");
            ExitCode::from(match e {
                Error::Bound { .. } => 3,
                Error::Verification(_) => 1,
                _ => 2,
            })
        }
    }
}

struct Context {
    code: LinearCode,
    order: WeightCompatibleOrder,
    opts: VerifyOptions,
}

impl Context {
    fn load(cli: &Cli, file: &PathBuf) -> qleader::Result<Self> {
        let opts = VerifyOptions {
            tie: match cli.order {
                OrderArg::Lex => TieBreak::Lex,
                OrderArg::Colex => TieBreak::Colex,
            },
            limits: Limits::new(cli.max_enum),
            voronoi: if cli.literal_voronoi { VoronoiRule::NonzeroOnly } else { VoronoiRule::AllCodewords },
            lh: match cli.lh_minimality {
                LhArg::Subword1 => LhMinimality::Subword1,
                LhArg::Order => LhMinimality::Order,
                LhArg::Restriction => LhMinimality::Restriction,
            },
            scope: match cli.scope {
                ScopeArg::GenSupport => Criterion3Scope::GenSupport,
                ScopeArg::Coordinate => Criterion3Scope::Coordinate,
            },
            descent: match cli.descent {
                DescentArg::Steepest => DescentRule::Steepest,
                DescentArg::FirstFit => DescentRule::FirstFit,
            },
        };
        let code = LinearCode::from_file(file)?.with_limits(opts.limits);
        code.space().check_enumerable(&opts.limits)?;
        let order = WeightCompatibleOrder::new(code.space(), opts.tie.clone())?;
        Ok(Self { code, order, opts })
    }

    fn closure(&self) -> qleader::Result<ListClosure> {
        ListClosure::build_with(&self.code, &self.order, self.opts.scope)
    }

    fn fmt(&self, w: &Word) -> String {
        self.code.space().format_word(w)
    }

    fn oracle(&self) -> qleader::Result<Oracle<'_>> {
        Ok(Oracle::new(&self.code)?.with_rule(self.opts.voronoi))
    }
}

fn emit(format: Format, fields: &[String]) {
    match format {
        Format::Text => println!("{}", fields.join("  ")),
        Format::Tsv => println!("{}", fields.join("\t")),
    }
}

fn run(cli: &Cli) -> qleader::Result<bool> {
    match &cli.command {
        Command::CosetLeaders { file } => {
            let ctx = Context::load(cli, file)?;
            let lc = ctx.closure()?;
            let field = ctx.code.space().field();
            if cli.format == Format::Tsv {
                println!("syndrome\tweight\tcanonical\tleaders");
            }
            for r in lc.table().records() {
                let syndrome: Vec<String> = r
                    .syndrome
                    .iter()
                    .map(|&s| field.coords_of(s).iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                    .collect();
                let leaders: Vec<String> = r.leaders.iter().map(|l| ctx.fmt(l)).collect();
                match cli.format {
                    Format::Text => println!(
                        "s = {}  weight {}  N = {}  leaders: {}",
                        syndrome.join(" "),
                        r.weight,
                        ctx.fmt(&r.canonical_leader),
                        leaders.join(" | ")
                    ),
                    Format::Tsv => println!(
                        "{}\t{}\t{}\t{}",
                        syndrome.join(" "),
                        r.weight,
                        ctx.fmt(&r.canonical_leader),
                        leaders.join(";")
                    ),
                }
            }
            Ok(true)
        }
        Command::LeaderCodewords { file, all_witnesses } => {
            let ctx = Context::load(cli, file)?;
            let lc = ctx.closure()?;
            let lcw = LeaderCodewords::extract(&lc)?;
            if cli.format == Format::Tsv {
                println!("codeword\tn1\tposition\tn2");
            }
            for e in lcw.entries() {
                let shown = if *all_witnesses { e.witnesses.len() } else { 1 };
                for w in e.witnesses.iter().take(shown) {
                    let fields = [ctx.fmt(&e.word), ctx.fmt(&w.n1), w.position.to_string(), ctx.fmt(&w.n2)];
                    match cli.format {
                        Format::Text => println!("{}  = {} + e{} - {}", fields[0], fields[1], fields[2], fields[3]),
                        Format::Tsv => emit(cli.format, &fields),
                    }
                }
            }
            Ok(true)
        }
        Command::TrialSet { file } => {
            let ctx = Context::load(cli, file)?;
            let lc = ctx.closure()?;
            let lcw = LeaderCodewords::extract(&lc)?;
            let ep = ErrorPartition::new(&lc)?;
            let ts = ep.extract_trial_set(&lc, &lcw, ctx.opts.lh)?;
            if cli.format == Format::Tsv {
                println!("element\tfrom\tcanonical");
            }
            for (c, prov) in ts.members.iter().zip(&ts.provenance) {
                for (t, n) in prov {
                    let fields = [ctx.fmt(c), ctx.fmt(t), ctx.fmt(n)];
                    match cli.format {
                        Format::Text => println!("{}  = {} - {}", fields[0], fields[1], fields[2]),
                        Format::Tsv => emit(cli.format, &fields),
                    }
                }
            }
            Ok(true)
        }
        Command::ZeroNeighbours { file, compare_leader_codewords } => {
            let ctx = Context::load(cli, file)?;
            let oracle = ctx.oracle()?;
            let zn = oracle.zero_neighbours();
            let leaders = if *compare_leader_codewords {
                Some(LeaderCodewords::extract(&ctx.closure()?)?.set())
            } else {
                None
            };
            if cli.format == Format::Tsv {
                println!("{}", if leaders.is_some() { "word\tleader_codeword" } else { "word" });
            }
            for w in &zn {
                let mut fields = vec![ctx.fmt(w)];
                if let Some(l) = &leaders {
                    fields.push(if l.contains(w) { "yes" } else { "no" }.to_string());
                }
                emit(cli.format, &fields);
            }
            if let (Some(l), Format::Text) = (&leaders, cli.format) {
                println!(
                    "{} zero neighbours, {} leader codewords, {} zero neighbours outside, {} leader codewords outside",
                    zn.len(),
                    l.len(),
                    zn.difference(l).count(),
                    l.difference(&zn).count()
                );
            }
            Ok(true)
        }
        Command::Decode { file, word, set } => {
            let ctx = Context::load(cli, file)?;
            let y = ctx.code.space().parse_word(word)?;
            let lc = ctx.closure()?;
            let lcw = LeaderCodewords::extract(&lc)?;
            let ep = ErrorPartition::new(&lc)?;
            let t = match set {
                SetArg::Leader => lcw.words(),
                SetArg::Trial => ep.extract_trial_set(&lc, &lcw, ctx.opts.lh)?.members,
            };
            let d = ep.gradient_decode(&y, &t, ctx.opts.descent);
            match cli.format {
                Format::Text => {
                    println!("residual {}", ctx.fmt(&d.residual));
                    println!("codeword {}", ctx.fmt(&d.codeword));
                    println!("steps {}", d.steps);
                }
                Format::Tsv => {
                    println!("residual\tcodeword\tsteps");
                    println!("{}\t{}\t{}", ctx.fmt(&d.residual), ctx.fmt(&d.codeword), d.steps);
                }
            }
            Ok(true)
        }
        Command::Verify { file } => {
            let ctx = Context::load(cli, file)?;
            let reports = run_all(&ctx.code, &ctx.opts)?;
            let mut ok = true;
            for r in &reports {
                ok &= r.passed();
                match cli.format {
                    Format::Text => println!("{r}"),
                    Format::Tsv => println!(
                        "{}\t{}\t{}\t{}",
                        r.name,
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.checked,
                        r.violations.len()
                    ),
                }
            }
            Ok(ok)
        }
    }
}
