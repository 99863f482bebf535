use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hyperoct::character::character_table_b;
use hyperoct::distribution::{DescentCount, WordCount};
use hyperoct::linalg::det_exact;
use hyperoct::perm::enumerate_bn;
use hyperoct::rsk::rsk_b;
use hyperoct::scalar::parse_rational;
use hyperoct::shapes::enumerate_bipartitions;
use hyperoct::suites::{run_suite, SuiteReport, SUITES};
use hyperoct::symfunc::{dist_to_schur_a, dist_to_schur_b, FineVerdict, SchurKey};
use hyperoct::weight_matrix::{build_a, build_a_hat, build_mix, det_closed_form};
use hyperoct::{
    Bipartition, DescentDistributionA, DescentDistributionB, Error, Rational, SchurVec, SignedPerm,
};

#[derive(Parser)]
#[command(
    name = "hyperoct",
    version,
    about = "Descent statistics, characters and fine sets of S_n and B_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (or `all`) at a given n.
    Verify {
        suite: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the character table of B_n.
    Char {
        #[arg(long)]
        n: usize,
        /// Restrict to one shape, e.g. '{"lambda":[2],"mu":[1]}'.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Expand a family or a descent distribution in the Schur basis.
    FineCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Group::B)]
        group: Group,
        /// Degree, needed only for type-A descent counts.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exact determinant of a weight matrix next to the closed form.
    DetWeight {
        #[arg(long)]
        n: usize,
        /// Mixing parameter p/q; implies `--matrix mix`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, value_enum)]
        matrix: Option<MatrixKind>,
        #[arg(long)]
        json: bool,
    },
    /// Type-B insertion and recording bitableaux of a signed permutation.
    Rsk {
        #[arg(long)]
        perm: String,
    },
    /// Signed descent set of a signed permutation.
    Sdes {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// Statistics of one signed permutation, or their distributions over B_n.
    Stats {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        perm: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    A,
    Ahat,
    Mix,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            suite,
            n,
            json,
            seed,
        } => verify(&suite, n, json, seed),
        Command::Char { n, shape, json } => character(n, shape.as_deref(), json),
        Command::FineCheck {
            input,
            group,
            n,
            json,
        } => fine_check(&input, group, n, json),
        Command::DetWeight {
            n,
            alpha,
            matrix,
            json,
        } => det_weight(n, alpha.as_deref(), matrix, json),
        Command::Rsk { perm } => rsk(&perm),
        Command::Sdes { perm, json } => sdes(&perm, json),
        Command::Stats { perm, n, json } => match (perm, n) {
            (Some(p), _) => perm_stats(&p, json),
            (None, Some(n)) => stats_table(n, json),
            (None, None) => Err(Failure::Usage("one of --perm or --n is required".into())),
        },
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn parse_perm(text: &str) -> Result<SignedPerm, Failure> {
    let window: Vec<i32> = serde_json::from_str(text)
        .map_err(|_| Failure::Usage(format!("expected a JSON array of integers, got {text:?}")))?;
    Ok(SignedPerm::new(window)?)
}

fn verify(suite: &str, n: usize, json: bool, seed: u64) -> Outcome {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Failure::Usage(format!(
            "unknown suite {suite:?}; expected one of {}, all",
            SUITES.join(", ")
        )));
    }
    let reports = run_suite(suite, n, seed)?;
    let passed = reports.iter().all(|r| r.passed);
    if json {
        if suite == "all" {
            print_json(&json!({ "n": n, "passed": passed, "suites": reports }))?;
        } else {
            print_json(&reports[0])?;
        }
    } else {
        for r in &reports {
            print_suite(r);
        }
        if suite == "all" {
            println!(
                "all suites at n = {n}: {}",
                if passed { "PASS" } else { "FAIL" }
            );
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn print_suite(r: &SuiteReport) {
    println!("suite {} (n = {})", r.suite, r.n);
    for c in &r.checks {
        println!(
            "  {} {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    for s in &r.skipped {
        println!("  skipped {s}");
    }
    let good = r.checks.iter().filter(|c| c.passed).count();
    println!(
        "{}: {} ({good}/{} checks)",
        r.suite,
        if r.passed { "PASS" } else { "FAIL" },
        r.checks.len()
    );
}

fn character(n: usize, shape: Option<&str>, json: bool) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    let only: Option<Bipartition> = shape.map(serde_json::from_str).transpose()?;
    if let Some(s) = &only {
        if s.size() != n {
            return Err(Error::SizeMismatch(n, s.size()).into());
        }
    }
    let classes = enumerate_bipartitions(n);
    let table: Vec<(Bipartition, Vec<i64>)> = character_table_b(n)?
        .into_iter()
        .filter(|(s, _)| only.as_ref().is_none_or(|o| o == s))
        .collect();
    if json {
        let rows: Vec<Value> = table
            .iter()
            .map(|(s, values)| json!({ "shape": s, "values": values }))
            .collect();
        return print_json(&json!({ "n": n, "classes": classes, "rows": rows }));
    }
    let labels: Vec<String> = classes.iter().map(ToString::to_string).collect();
    let first = table
        .iter()
        .map(|(s, _)| s.to_string().len())
        .max()
        .unwrap_or(0)
        .max(5);
    let widths: Vec<usize> = labels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            table
                .iter()
                .map(|(_, v)| v[j].to_string().len())
                .max()
                .unwrap_or(0)
                .max(l.len())
        })
        .collect();
    let mut header = format!("{:<first$}", "shape");
    for (l, w) in labels.iter().zip(&widths) {
        header += &format!("  {l:>w$}");
    }
    println!("{}", header.trim_end());
    for (s, values) in &table {
        let mut line = format!("{:<first$}", s.to_string());
        for (v, w) in values.iter().zip(&widths) {
            line += &format!("  {v:>w$}");
        }
        println!("{line}");
    }
    Ok(())
}

/// Accepted inputs of `fine-check`.
#[derive(serde::Deserialize)]
#[serde(untagged)]
enum FineInput {
    Perms(Vec<Vec<i32>>),
    Words(Vec<WordCount>),
    Descents(Vec<DescentCount>),
}

fn fine_check(path: &PathBuf, group: Group, n: Option<usize>, json: bool) -> Outcome {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let input: FineInput = serde_json::from_str(&text).map_err(|_| {
        Failure::Usage("expected a list of signed permutations or of descent counts".into())
    })?;
    match (group, input) {
        (Group::B, FineInput::Perms(list)) => {
            let perms = to_perms(list)?;
            let n = family_degree(&perms, n)?;
            report(
                dist_to_schur_b(&DescentDistributionB::from_perms(n, &perms)?)?,
                json,
            )
        }
        (Group::B, FineInput::Words(entries)) => {
            let n = match (entries.first(), n) {
                (Some(e), _) => e.word.chars().count(),
                (None, Some(n)) => n,
                (None, None) => return Err(Failure::Usage("empty distribution needs --n".into())),
            };
            report(
                dist_to_schur_b(&DescentDistributionB::from_word_counts(n, &entries)?)?,
                json,
            )
        }
        (Group::A, FineInput::Perms(list)) => {
            let perms = to_perms(list)?;
            let n = family_degree(&perms, n)?;
            report(
                dist_to_schur_a(&DescentDistributionA::from_perms(n, &perms)?)?,
                json,
            )
        }
        (Group::A, FineInput::Descents(entries)) => {
            let n = n.ok_or_else(|| Failure::Usage("type-A descent counts need --n".into()))?;
            report(
                dist_to_schur_a(&DescentDistributionA::from_descent_counts(n, &entries)?)?,
                json,
            )
        }
        (Group::A, FineInput::Words(_)) => {
            Err(Failure::Usage("signed-set words need --group B".into()))
        }
        (Group::B, FineInput::Descents(_)) => {
            Err(Failure::Usage("descent lists need --group A".into()))
        }
    }
}

fn to_perms(list: Vec<Vec<i32>>) -> Result<Vec<SignedPerm>, Failure> {
    list.into_iter()
        .map(|w| SignedPerm::new(w).map_err(Failure::from))
        .collect()
}

fn family_degree(perms: &[SignedPerm], n: Option<usize>) -> Result<usize, Failure> {
    let n = match (perms.first(), n) {
        (Some(w), _) => w.len(),
        (None, Some(n)) => n,
        (None, None) => return Err(Failure::Usage("empty family needs --n".into())),
    };
    if let Some(w) = perms.iter().find(|w| w.len() != n) {
        return Err(Error::SizeMismatch(n, w.len()).into());
    }
    Ok(n)
}

fn report<K: SchurKey + Serialize>(verdict: FineVerdict<K>, json: bool) -> Outcome {
    let fine = verdict.is_fine();
    if json {
        let coefficients: Option<Vec<Value>> = verdict.coefficients().map(entries);
        print_json(&json!({ "verdict": verdict.label(), "coefficients": coefficients }))?;
    } else {
        println!("verdict: {}", verdict.label());
        if let Some(v) = verdict.coefficients() {
            for (k, c) in v.iter() {
                println!("  {c}  {k}");
            }
        }
    }
    if fine {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn entries<K: SchurKey + Serialize>(v: &SchurVec<K, Rational>) -> Vec<Value> {
    v.iter()
        .map(|(k, c)| json!({ "shape": k, "coeff": c.to_string() }))
        .collect()
}

fn det_weight(n: usize, alpha: Option<&str>, matrix: Option<MatrixKind>, json: bool) -> Outcome {
    let kind = match (matrix, alpha) {
        (Some(MatrixKind::Mix) | None, Some(_)) => MatrixKind::Mix,
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "--alpha applies only to --matrix mix".into(),
            ))
        }
        (Some(k), None) => k,
        (None, None) => MatrixKind::A,
    };
    let alpha = match (kind, alpha) {
        (MatrixKind::A, _) => Rational::from_integer(1.into()),
        (MatrixKind::Ahat, _) => Rational::from_integer(0.into()),
        (MatrixKind::Mix, Some(a)) => parse_rational(a)?,
        (MatrixKind::Mix, None) => return Err(Failure::Usage("--matrix mix needs --alpha".into())),
    };
    let m = match kind {
        MatrixKind::A => build_a(n)?,
        MatrixKind::Ahat => build_a_hat(n)?,
        MatrixKind::Mix => build_mix(n, &alpha)?,
    };
    let det = det_exact(&m)?;
    let closed = det_closed_form(n, &alpha)?;
    let name = match kind {
        MatrixKind::A => "a",
        MatrixKind::Ahat => "ahat",
        MatrixKind::Mix => "mix",
    };
    if json {
        print_json(&json!({
            "n": n,
            "matrix": name,
            "alpha": alpha.to_string(),
            "size": m.rows(),
            "det": det.to_string(),
            "closed_form": closed.to_string(),
            "equal": det == closed,
        }))?;
    } else {
        println!("matrix {name}, n = {n}, alpha = {alpha}, size {}", m.rows());
        println!("det         {det}");
        println!("closed form {closed}");
    }
    if det == closed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn rsk(perm: &str) -> Outcome {
    let w = parse_perm(perm)?;
    let (p, q) = rsk_b(&w);
    print_json(&json!({ "P": p, "Q": q }))
}

fn sdes(perm: &str, json: bool) -> Outcome {
    let w = parse_perm(perm)?;
    let sigma = w.sdes();
    let signs: String = sigma.pairs().iter().map(|(_, s)| s.symbol()).collect();
    let composition = sigma.to_composition().to_signed_ints();
    if json {
        return print_json(&json!({
            "perm": w.window(),
            "word": sigma.word_string(),
            "set": sigma.set(),
            "signs": signs,
            "composition": composition,
        }));
    }
    println!("perm        {w}");
    println!("word        {}", sigma.word_string());
    println!("set         {:?}", sigma.set());
    println!("signs       {signs}");
    println!("composition {composition:?}");
    Ok(())
}

fn perm_stats(perm: &str, json: bool) -> Outcome {
    let w = parse_perm(perm)?;
    let cycle = w.cycle_type().into_bipartition();
    let value = json!({
        "perm": w.window(),
        "inverse": w.inverse().window(),
        "des": w.des(),
        "sdes": w.sdes().word_string(),
        "inv": w.inv(),
        "maj": w.maj(),
        "bar": w.bar(),
        "finv": w.finv(),
        "fmaj": w.fmaj(),
        "length": w.length_b(),
        "fixed_points": w.fixed_points(),
        "cycle_type": cycle,
    });
    if json {
        return print_json(&value);
    }
    println!("perm         {w}");
    println!("inverse      {}", w.inverse());
    println!("des          {:?}", w.des());
    println!("sdes         {}", w.sdes().word_string());
    println!("inv          {}", w.inv());
    println!("maj          {}", w.maj());
    println!("bar          {}", w.bar());
    println!("finv         {}", w.finv());
    println!("fmaj         {}", w.fmaj());
    println!("length       {}", w.length_b());
    println!("fixed points {}", w.fixed_points());
    println!("cycle type   {cycle}");
    Ok(())
}

/// Number of elements of `B_n` with each value of `finv`, `fmaj` and `ℓ_B`.
fn stats_table(n: usize, json: bool) -> Outcome {
    let top = n * n;
    let mut counts = vec![[0u64; 3]; top + 1];
    for w in enumerate_bn(n)? {
        counts[w.finv()][0] += 1;
        counts[w.fmaj()][1] += 1;
        counts[w.length_b()][2] += 1;
    }
    if json {
        let rows: Vec<Value> = counts
            .iter()
            .enumerate()
            .map(|(k, c)| json!({ "k": k, "finv": c[0], "fmaj": c[1], "length": c[2] }))
            .collect();
        return print_json(&json!({ "n": n, "rows": rows }));
    }
    println!("{:>3} {:>8} {:>8} {:>8}", "k", "finv", "fmaj", "length");
    for (k, c) in counts.iter().enumerate() {
        println!("{k:>3} {:>8} {:>8} {:>8}", c[0], c[1], c[2]);
    }
    Ok(())
}
