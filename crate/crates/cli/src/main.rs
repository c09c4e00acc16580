//! `helix`: command-line driver for the numerical helix toolkit.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check or an
//! exceeded cap, 2 on usage or parse errors.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use helix::braid::{normal_form, BraidWord};
use helix::collections::NumericalCollection;
use helix::markov::{
    eval_eq1, eval_eq2, explore_collections, explore_tuples, stabilizer_scan, unipotency_oracle,
    Eq2Variant, SixTuple,
};
use helix::pn;
use helix::regions::{
    format_point, lemma41_system, parse_rational, region_system, thm51_systems, DegreeMatrix,
    Feasibility, InequalitySystem,
};
use helix::verify::{run_suite, Check, Suite, SuiteConfig};

use report::{digest, RunReport};

#[derive(Parser, Debug)]
#[command(
    name = "helix",
    version,
    about = "Exact computations with numerical exceptional collections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the primary output here instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Eq2Arg {
    Printed,
    Corrected,
}

impl From<Eq2Arg> for Eq2Variant {
    fn from(v: Eq2Arg) -> Self {
        match v {
            Eq2Arg::Printed => Eq2Variant::Printed,
            Eq2Arg::Corrected => Eq2Variant::Corrected,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a braid word to a collection file and write the result.
    Mutate {
        /// Collection file, or a builtin `beilinson<N>`.
        collection: String,
        /// Letters such as `L0 R1`, applied rightmost first.
        word: String,
    },
    /// Run an invariant suite: braid, mutation, markov, regions, pn or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Eq2Arg::Corrected)]
        eq2_variant: Eq2Arg,
    },
    /// Breadth-first orbit of a collection under mutations, or of a six-tuple under G.
    Orbit {
        /// Collection file or builtin name.
        collection: Option<String>,
        /// Seed six-tuple such as `4,6,4,4,6,4`, explored under G.
        #[arg(long, conflicts_with = "collection")]
        tuple: Option<String>,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Eq2Arg::Corrected)]
        eq2_variant: Eq2Arg,
    },
    /// Freely reduced words up to a length that fix a collection.
    Stabilizer {
        collection: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 10_000_000)]
        cap: usize,
    },
    /// Feasibility of a phase-region system, with witness or certificate.
    Region {
        #[command(subcommand)]
        source: RegionSource,
        /// Also test membership of this point, e.g. `0,1/2,8/5,27/10`.
        #[arg(long, global = true)]
        point: Option<String>,
    },
    /// Braid word utilities.
    Braid {
        #[command(subcommand)]
        command: BraidCommand,
    },
    /// Projective space data.
    Pn {
        #[command(subcommand)]
        command: PnCommand,
    },
}

#[derive(Subcommand, Debug)]
enum RegionSource {
    /// Overlap of a strong region with its right mutation at `k`.
    Lemma {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// The left, right or dual intersection system on P³.
    Intersection {
        #[arg(value_enum)]
        which: Which,
    },
    /// Region of a collection whose Gram entries are all nonnegative.
    Collection { collection: String },
    /// A system in row notation, one `[c0,...,cn | b]` per line.
    Rows { file: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Left,
    Right,
    Dual,
}

#[derive(Subcommand, Debug)]
enum BraidCommand {
    /// Left normal form `D^k . p1 . p2 ...`.
    Nf {
        word: String,
        #[arg(long, default_value_t = 4)]
        strands: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PnCommand {
    /// Beilinson collection O, O(1), ..., O(n) in the collection file format.
    Gram { n: u32 },
}

/// Failures that map to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<helix::Error> for UsageError {
    fn from(e: helix::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<RunReport, UsageError>;

/// The recorded inputs of one run.
struct Inputs {
    echo: Vec<String>,
    contents: Vec<Vec<u8>>,
}

impl Inputs {
    fn new() -> Self {
        Inputs {
            echo: std::env::args().skip(1).collect(),
            contents: Vec::new(),
        }
    }

    fn report(&self) -> RunReport {
        let parts = self
            .echo
            .iter()
            .map(|s| s.as_bytes())
            .chain(self.contents.iter().map(Vec::as_slice));
        let mut command = String::from("helix");
        for a in &self.echo {
            command.push(' ');
            if a.is_empty() || a.contains(char::is_whitespace) {
                command.push_str(&format!("{a:?}"));
            } else {
                command.push_str(a);
            }
        }
        RunReport::new(command, digest(parts))
    }

    fn load_collection(&mut self, name: &str) -> Result<NumericalCollection, UsageError> {
        let path = Path::new(name);
        if !path.exists() {
            if let Some(n) = name
                .strip_prefix("beilinson")
                .and_then(|s| s.parse::<u32>().ok())
            {
                if n == 0 {
                    return Err(UsageError("beilinson needs n >= 1".into()));
                }
                self.contents.push(name.as_bytes().to_vec());
                return Ok(pn::beilinson_collection(n));
            }
        }
        let bytes = fs::read(path).map_err(|e| UsageError(format!("{name}: {e}")))?;
        let text =
            String::from_utf8(bytes.clone()).map_err(|e| UsageError(format!("{name}: {e}")))?;
        self.contents.push(bytes);
        Ok(NumericalCollection::from_json(&text)?)
    }

    fn load_text(&mut self, path: &Path) -> Result<String, UsageError> {
        let text =
            fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        self.contents.push(text.as_bytes().to_vec());
        Ok(text)
    }
}

fn tuple_fields(t: &SixTuple, variant: Eq2Variant) -> (BigInt, BigInt, bool) {
    (eval_eq1(t), eval_eq2(t, variant), unipotency_oracle(t))
}

fn cmd_mutate(inputs: &mut Inputs, collection: &str, word: &str) -> CmdResult {
    let c = inputs.load_collection(collection)?;
    let w = BraidWord::parse(word, c.size())?;
    let out = c.apply_word(&w)?;
    let mut r = inputs.report();
    r.lines.push(out.to_json());
    r.fact(
        "word",
        if w.is_empty() {
            "(empty)".into()
        } else {
            w.to_string()
        },
    );
    if let Ok(t) = SixTuple::from_collection(&out) {
        r.fact("tuple", &t);
        r.fact("eq1", eval_eq1(&t));
    }
    r.fact("strong", out.is_strong_candidate());
    r.checks.push(Check::compare(
        "mutate/conservation",
        true,
        out.is_consistent(),
    ));
    Ok(r)
}

fn cmd_verify(inputs: &Inputs, suite: &str, cfg: SuiteConfig) -> CmdResult {
    let suite: Suite = suite.parse()?;
    let mut r = inputs.report();
    r.fact("seed", cfg.seed);
    r.fact("samples", cfg.samples);
    r.checks = run_suite(suite, &cfg);
    Ok(r)
}

fn orbit_record(depth: usize, t: &SixTuple, variant: Eq2Variant) -> String {
    let (e1, e2, oracle) = tuple_fields(t, variant);
    format!("depth={depth} tuple={t} eq1={e1} eq2={e2} oracle={oracle}")
}

fn cmd_orbit(
    inputs: &mut Inputs,
    collection: Option<&str>,
    tuple: Option<&str>,
    depth: usize,
    cap: usize,
    variant: Eq2Variant,
) -> CmdResult {
    if cap == 0 {
        return Err(UsageError("--cap must be positive".into()));
    }
    let (records, complete, tuples): (Vec<String>, bool, Vec<SixTuple>) = match (collection, tuple)
    {
        (_, Some(text)) => {
            let seed = SixTuple::parse(text)?;
            let orbit = explore_tuples(&seed, depth, cap);
            let recs = orbit
                .members
                .iter()
                .map(|m| orbit_record(m.depth, &m.element, variant))
                .collect();
            (
                recs,
                orbit.complete,
                orbit.members.into_iter().map(|m| m.element).collect(),
            )
        }
        (Some(name), None) => {
            let seed = inputs.load_collection(name)?;
            SixTuple::from_collection(&seed)?;
            let orbit = explore_collections(&seed, depth, cap);
            let mut recs = Vec::new();
            let mut ts = Vec::new();
            for m in &orbit.members {
                let t = SixTuple::from_collection(&m.element)?;
                recs.push(orbit_record(m.depth, &t, variant));
                ts.push(t);
            }
            (recs, orbit.complete, ts)
        }
        (None, None) => return Err(UsageError("orbit needs a collection or --tuple".into())),
    };
    let mut r = inputs.report();
    r.lines = records;
    r.fact("members", tuples.len());
    r.fact("eq2-variant", format!("{variant:?}").to_lowercase());
    if !complete {
        r.partial = Some(format!("cap of {cap} members reached"));
    }
    let count = |f: &dyn Fn(&SixTuple) -> bool| tuples.iter().filter(|t| !f(t)).count();
    r.checks.push(Check::compare(
        "orbit/eq1-nonzero-members",
        0,
        count(&|t| eval_eq1(t) == BigInt::ZERO),
    ));
    r.checks.push(Check::compare(
        "orbit/eq2-nonzero-members",
        0,
        count(&|t| eval_eq2(t, variant) == BigInt::ZERO),
    ));
    r.checks.push(Check::compare(
        "orbit/oracle-rejected-members",
        0,
        count(&unipotency_oracle),
    ));
    Ok(r)
}

fn cmd_stabilizer(inputs: &mut Inputs, collection: &str, max_len: usize, cap: usize) -> CmdResult {
    let c = inputs.load_collection(collection)?;
    let mut r = inputs.report();
    r.fact("max-len", max_len);
    match stabilizer_scan(&c, max_len, cap) {
        Ok(words) => {
            let nontrivial = words.iter().filter(|w| !w.is_trivial()).count();
            r.lines = words.iter().map(ToString::to_string).collect();
            r.fact("words", words.len());
            r.checks
                .push(Check::compare("stabilizer/nontrivial-words", 0, nontrivial));
        }
        Err(helix::Error::CapExceeded { cap }) => {
            r.partial = Some(format!("cap of {cap} examined words reached"));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

fn cmd_region(inputs: &mut Inputs, source: &RegionSource, point: Option<&str>) -> CmdResult {
    let system: InequalitySystem = match source {
        RegionSource::Lemma { n, k } => lemma41_system(*n, *k)?,
        RegionSource::Intersection { which } => {
            let (l, r, d) = thm51_systems();
            match which {
                Which::Left => l,
                Which::Right => r,
                Which::Dual => d,
            }
        }
        RegionSource::Collection { collection } => {
            let c = inputs.load_collection(collection)?;
            region_system(&DegreeMatrix::from_collection(&c)?)
        }
        RegionSource::Rows { file } => {
            let text = inputs.load_text(file)?;
            InequalitySystem::parse_rows(&text)?
        }
    };
    let mut r = inputs.report();
    r.lines = system.to_rows().lines().map(str::to_string).collect();
    r.fact("dimension", system.dimension());
    r.fact("constraints", system.constraints().len());
    match system.is_feasible() {
        Feasibility::Feasible(w) => {
            r.fact("feasible", true);
            r.fact("witness", format_point(&w));
            r.checks.push(Check::compare(
                "region/witness-verified",
                true,
                system.contains_phases(&w)?,
            ));
        }
        Feasibility::Infeasible(cert) => {
            r.fact("feasible", false);
            r.fact("certificate", format_point(&cert.multipliers));
            r.checks.push(Check::compare(
                "region/certificate-verified",
                true,
                cert.verify(&system),
            ));
        }
    }
    if let Some(p) = point {
        let phases = p
            .split(',')
            .map(parse_rational)
            .collect::<helix::Result<Vec<_>>>()?;
        let inside = system.contains_phases(&phases)?;
        r.checks.push(Check::compare(
            format!("region/contains{}", format_point(&phases)),
            true,
            inside,
        ));
    }
    Ok(r)
}

fn cmd_braid_nf(inputs: &Inputs, word: &str, strands: usize) -> CmdResult {
    let w = BraidWord::parse(word, strands)?;
    let nf = normal_form(&w);
    let mut r = inputs.report();
    r.lines.push(nf.to_string());
    r.fact("trivial", nf.is_identity());
    r.checks.push(Check::compare(
        "braid/normal-form-stable",
        &nf,
        normal_form(&nf.to_word()),
    ));
    Ok(r)
}

fn cmd_pn_gram(inputs: &Inputs, n: u32) -> CmdResult {
    if n == 0 {
        return Err(UsageError("n must be at least 1".into()));
    }
    let c = pn::beilinson_collection(n);
    let mut r = inputs.report();
    r.lines.push(c.to_json());
    if let Ok(t) = SixTuple::from_collection(&c) {
        r.fact("tuple", t);
    }
    Ok(r)
}

fn run(cli: &Cli) -> CmdResult {
    let mut inputs = Inputs::new();
    match &cli.command {
        Command::Mutate { collection, word } => cmd_mutate(&mut inputs, collection, word),
        Command::Verify {
            suite,
            seed,
            samples,
            eq2_variant,
        } => cmd_verify(
            &inputs,
            suite,
            SuiteConfig {
                seed: *seed,
                samples: *samples,
                eq2_variant: (*eq2_variant).into(),
            },
        ),
        Command::Orbit {
            collection,
            tuple,
            depth,
            cap,
            eq2_variant,
        } => cmd_orbit(
            &mut inputs,
            collection.as_deref(),
            tuple.as_deref(),
            *depth,
            *cap,
            (*eq2_variant).into(),
        ),
        Command::Stabilizer {
            collection,
            max_len,
            cap,
        } => cmd_stabilizer(&mut inputs, collection, *max_len, *cap),
        Command::Region { source, point } => cmd_region(&mut inputs, source, point.as_deref()),
        Command::Braid {
            command: BraidCommand::Nf { word, strands },
        } => cmd_braid_nf(&inputs, word, *strands),
        Command::Pn {
            command: PnCommand::Gram { n },
        } => cmd_pn_gram(&inputs, *n),
    }
}

fn emit(cli: &Cli, r: &RunReport) -> std::io::Result<()> {
    let to_file = cli.common.output.is_some();
    if let Some(path) = &cli.common.output {
        let mut body = r.lines.join("\n");
        body.push('\n');
        fs::write(path, body)?;
    }
    let text = match cli.common.format {
        Format::Text => r.render_text(!to_file),
        Format::Json => r.render_json(!to_file),
    };
    print!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_status())
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
