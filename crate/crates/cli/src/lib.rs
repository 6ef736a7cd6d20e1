//! Command-line front end. [`run`] turns an argument vector into a
//! [`CommandResult`]; the binary only prints it and exits.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use macias_core::functions::is_trichotomous;
use macias_core::macias::{closure_finite, is_dense, is_open, sigma, Density, Openness};
use macias_core::numtheory::primes_in_progression;
use macias_core::oracle::{run_suites, Level, SuiteReport};
use macias_core::{
    ContinuityVerdict, Error, ExpFunction, Polynomial, ResidueSet, DEFAULT_PRIME_BOUND,
};

#[derive(Parser, Debug)]
#[command(
    name = "macias",
    version,
    about = "Decision procedures for the coprime topology on the positive integers"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print σ_N, the integers coprime to N.
    Sigma { n: u64 },
    /// Preimage of σ_N under a polynomial, or of σ_P under an exponential.
    Preimage {
        #[command(flatten)]
        map: MapArg,
        /// Modulus for a polynomial.
        #[arg(
            long,
            requires = "poly",
            conflicts_with = "exp",
            required_unless_present = "exp"
        )]
        n: Option<u64>,
        /// Prime for an exponential.
        #[arg(
            long,
            requires = "exp",
            conflicts_with = "poly",
            required_unless_present = "poly"
        )]
        p: Option<u64>,
    },
    /// Continuity verdict with the least witness prime.
    Continuity {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
        prime_bound: u64,
    },
    /// Whether a residue set is open.
    Open {
        #[arg(long)]
        set: String,
    },
    /// Whether a residue set is dense.
    Dense {
        #[arg(long)]
        set: String,
    },
    /// Closure of a finite set of points.
    Closure {
        #[arg(required = true)]
        points: Vec<u64>,
    },
    /// Compare continuity in the arithmetic-progression topology.
    Golomb {
        #[arg(long)]
        poly: String,
    },
    /// Distinct primes dividing f(1), ..., f(N).
    Schur {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        max: u64,
    },
    /// Primes p ≤ L with p ≡ A (mod B).
    Dirichlet {
        #[arg(long)]
        step: u64,
        #[arg(long)]
        offset: u64,
        #[arg(long)]
        limit: u64,
    },
    /// Walk through the two worked examples.
    Examples,
    /// Check the decision procedures against brute-force oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MapArg {
    /// Polynomial such as `x^2+4x+2`.
    #[arg(long)]
    poly: Option<String>,
    /// Exponential such as `2^x+3`.
    #[arg(long)]
    exp: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    DomainError,
    Inconclusive,
    Disagreement,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::DomainError => 1,
            Status::Inconclusive => 2,
            Status::Disagreement => 3,
        }
    }
}

/// Outcome of one invocation. Text and JSON are both rendered from
/// `result`, plus `text` for the human form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub status: Status,
    pub result: serde_json::Value,
    #[serde(skip)]
    text: String,
    #[serde(skip)]
    json: bool,
}

impl CommandResult {
    fn new(command: &str, status: Status, result: serde_json::Value, text: String) -> Self {
        CommandResult {
            command: command.to_string(),
            status,
            result,
            text,
            json: false,
        }
    }

    fn error(command: &str, message: String) -> Self {
        let result = json!({ "message": message });
        CommandResult::new(command, Status::DomainError, result, message)
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("json values serialize")
    }

    /// What the binary prints: JSON if `--json` was given, text otherwise.
    pub fn render(&self) -> String {
        if self.json {
            self.to_json()
        } else {
            self.text.clone()
        }
    }
}

fn to_value<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("domain types serialize")
}

fn set_text(set: &ResidueSet) -> String {
    set.to_string()
}

/// Dispatch `argv` (including the program name).
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let wants_json = argv.iter().any(|a| a == "--json");
    let mut out = match Cli::try_parse_from(&argv) {
        Ok(cli) => {
            let name = command_name(&cli.command);
            dispatch(cli.command).unwrap_or_else(|e| CommandResult::error(name, e.to_string()))
        }
        Err(e) => {
            let text = e.render().to_string().trim_end().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion
                | clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    CommandResult::new("help", Status::Ok, json!({ "usage": text }), text)
                }
                _ => CommandResult::new(
                    "usage",
                    Status::DomainError,
                    json!({ "message": text }),
                    text,
                ),
            }
        }
    };
    out.json = wants_json;
    out
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Sigma { .. } => "sigma",
        Command::Preimage { .. } => "preimage",
        Command::Continuity { .. } => "continuity",
        Command::Open { .. } => "open",
        Command::Dense { .. } => "dense",
        Command::Closure { .. } => "closure",
        Command::Golomb { .. } => "golomb",
        Command::Schur { .. } => "schur",
        Command::Dirichlet { .. } => "dirichlet",
        Command::Examples => "examples",
        Command::Verify { .. } => "verify",
    }
}

enum Map {
    Poly(Polynomial),
    Exp(ExpFunction),
}

impl Map {
    fn parse(arg: &MapArg) -> Result<Self, Error> {
        match (&arg.poly, &arg.exp) {
            (Some(p), _) => Ok(Map::Poly(p.parse()?)),
            (None, Some(e)) => Ok(Map::Exp(e.parse()?)),
            (None, None) => unreachable!("clap requires one of --poly, --exp"),
        }
    }

    fn describe(&self) -> String {
        match self {
            Map::Poly(f) => f.to_string(),
            Map::Exp(g) => g.to_string(),
        }
    }
}

fn dispatch(command: Command) -> Result<CommandResult, Error> {
    let name = command_name(&command);
    let ok = |result, text| CommandResult::new(name, Status::Ok, result, text);
    Ok(match command {
        Command::Sigma { n } => {
            let s = sigma(n)?;
            ok(json!({ "n": n, "set": to_value(&s) }), set_text(&s))
        }
        Command::Preimage { map, n, p } => {
            let map = Map::parse(&map)?;
            let (set, target) = match &map {
                Map::Poly(f) => {
                    let n = n.expect("clap requires --n with --poly");
                    (f.preimage_sigma(n)?, n)
                }
                Map::Exp(g) => {
                    let p = p.expect("clap requires --p with --exp");
                    (g.preimage_sigma(p)?, p)
                }
            };
            let result =
                json!({ "function": map.describe(), "target": target, "set": to_value(&set) });
            ok(result, set_text(&set))
        }
        Command::Continuity { map, prime_bound } => {
            let map = Map::parse(&map)?;
            let verdict = match &map {
                Map::Poly(f) => f.continuity(prime_bound)?,
                Map::Exp(g) => g.continuity(prime_bound)?,
            };
            let status = match verdict {
                ContinuityVerdict::Inconclusive { .. } => Status::Inconclusive,
                _ => Status::Ok,
            };
            let result = json!({ "function": map.describe(), "verdict": to_value(&verdict) });
            CommandResult::new(name, status, result, verdict.to_string())
        }
        Command::Open { set } => {
            let set: ResidueSet = set.parse()?;
            let openness = is_open(&set);
            let result = json!({ "set": to_value(&set), "openness": to_value(&openness) });
            ok(result, openness_text(&set, &openness))
        }
        Command::Dense { set } => {
            let set: ResidueSet = set.parse()?;
            let density = is_dense(&set);
            let result = json!({ "set": to_value(&set), "density": to_value(&density) });
            ok(result, density_text(&set, &density))
        }
        Command::Closure { points } => {
            let set = closure_finite(&points)?;
            ok(
                json!({ "points": points, "set": to_value(&set) }),
                set_text(&set),
            )
        }
        Command::Golomb { poly } => {
            let f: Polynomial = poly.parse()?;
            let golomb = f.is_golomb_continuous();
            let verdict = f.continuity(DEFAULT_PRIME_BOUND)?;
            let text = format!(
                "golomb: {}\nmacias: {verdict}",
                if golomb {
                    "continuous"
                } else {
                    "discontinuous"
                }
            );
            let result = json!({
                "function": f.to_string(),
                "golomb_continuous": golomb,
                "macias": to_value(&verdict),
            });
            ok(result, text)
        }
        Command::Schur { poly, max } => {
            let f: Polynomial = poly.parse()?;
            let primes = f.prime_divisor_census(max)?;
            let result = json!({ "function": f.to_string(), "max": max, "primes": primes });
            ok(result, join(&primes))
        }
        Command::Dirichlet {
            step,
            offset,
            limit,
        } => {
            let primes = primes_in_progression(step, offset, limit)?;
            let result =
                json!({ "step": step, "offset": offset, "limit": limit, "primes": primes });
            ok(result, join(&primes))
        }
        Command::Examples => examples()?,
        Command::Verify { level } => {
            let level = match level {
                VerifyLevel::Quick => Level::Quick,
                VerifyLevel::Full => Level::Full,
            };
            verify(level)
        }
    })
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn openness_text(set: &ResidueSet, openness: &Openness) -> String {
    match openness.failing_class {
        None => format!("{set} is open"),
        Some(r) => format!(
            "{set} is not open: no basic open set around class {r} mod {} lies inside it",
            set.modulus()
        ),
    }
}

fn density_text(set: &ResidueSet, density: &Density) -> String {
    match density.witness_class {
        Some(r) => format!("{set} is dense: class {r} is coprime to {}", set.modulus()),
        None => format!(
            "{set} is not dense: every class shares a prime with {}",
            set.modulus()
        ),
    }
}

#[derive(Serialize)]
struct ExampleReport {
    function: String,
    prime: u64,
    preimage: ResidueSet,
    complement: ResidueSet,
    complement_dense: bool,
    dense_piece: Option<ResidueSet>,
    openness: Openness,
    trichotomous_below: Vec<u64>,
    verdict: ContinuityVerdict,
}

fn example(f: &str, prime: u64) -> Result<ExampleReport, Error> {
    let f: Polynomial = f.parse().expect("fixed example");
    let preimage = f.preimage_sigma(prime)?;
    let complement = preimage.complement()?;
    let complement_dense = is_dense(&complement).dense;
    let dense_piece = complement
        .residues()
        .iter()
        .map(|&r| ResidueSet::new(complement.modulus(), [r]))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .find(|piece| is_dense(piece).dense);
    let mut trichotomous_below = Vec::new();
    for q in macias_core::numtheory::primes_from(2).take_while(|&q| q < prime) {
        if is_trichotomous(&f.preimage_sigma(q)?, q)? {
            trichotomous_below.push(q);
        }
    }
    Ok(ExampleReport {
        function: f.to_string(),
        prime,
        openness: is_open(&preimage),
        verdict: f.continuity(DEFAULT_PRIME_BOUND)?,
        preimage,
        complement,
        complement_dense,
        dense_piece,
        trichotomous_below,
    })
}

fn example_text(index: usize, e: &ExampleReport) -> String {
    let mut t = String::new();
    let p = e.prime;
    let _ = writeln!(t, "example {index}: f(x) = {}", e.function);
    if !e.trichotomous_below.is_empty() {
        let _ = writeln!(
            t,
            "  preimages of σ_q are ∅, σ_q or ℕ for q = {}",
            join(&e.trichotomous_below)
        );
    }
    let _ = writeln!(t, "  f⁻¹(σ_{p}) = {}", e.preimage);
    let _ = writeln!(
        t,
        "  complement {} is {}",
        e.complement,
        if e.complement_dense {
            "dense"
        } else {
            "not dense"
        }
    );
    match (&e.dense_piece, e.openness.failing_class) {
        (Some(piece), Some(_)) => {
            let _ = writeln!(
                t,
                "  {piece} is dense and misses {}, so every nonempty open set meets the complement",
                e.preimage
            );
            let _ = writeln!(t, "  {} is not open", e.preimage);
        }
        (None, Some(r)) => {
            let _ = writeln!(t, "  {} is not open at class {r}", e.preimage);
        }
        (_, None) => {
            let _ = writeln!(t, "  {} is open", e.preimage);
        }
    }
    let _ = write!(t, "  verdict: {}", e.verdict);
    t
}

fn examples() -> Result<CommandResult, Error> {
    let reports = [example("x^2+x", 7)?, example("x^2+4x+2", 7)?];
    let text = reports
        .iter()
        .enumerate()
        .map(|(i, e)| example_text(i + 1, e))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(CommandResult::new(
        "examples",
        Status::Ok,
        json!({ "examples": to_value(&reports) }),
        text,
    ))
}

fn verify(level: Level) -> CommandResult {
    let reports: Vec<SuiteReport> = run_suites(level);
    let failed = reports.iter().any(|r| !r.passed());
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(
            text,
            "{:<4} {:<24} {} checked, {} disagreements",
            if r.passed() { "ok" } else { "FAIL" },
            r.name,
            r.checked,
            r.disagreements.len()
        );
        for d in &r.disagreements {
            let _ = writeln!(text, "     {d}");
        }
    }
    let status = if failed {
        Status::Disagreement
    } else {
        Status::Ok
    };
    let level = match level {
        Level::Quick => "quick",
        Level::Full => "full",
    };
    CommandResult::new(
        "verify",
        status,
        json!({ "level": level, "suites": to_value(&reports) }),
        text.trim_end().to_string(),
    )
}
