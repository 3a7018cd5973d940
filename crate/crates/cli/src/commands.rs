use std::ops::ControlFlow;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use nilpath_core::proofcheck::{Certificate, Class2Evidence};
use nilpath_core::{
    charpoly_path, class_census, classify, count_walks_exact, count_walks_parity,
    enumerate_walks, find_naive_failure, for_each_walk, naive_pivot, naive_reflect,
    path_adjacency, path_adjacency_dense, reflect_class3, theorem_check, ClassTag, EnumConfig,
    Error, ExactCount, IntMatrix, ParityReport, PathSpec, Walk,
};
use thiserror::Error;

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "nilpath",
    version,
    about = "Verify that the adjacency matrix of the path P_n, n = 2^m - 1, is nilpotent over GF(2)"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check A^n = 0 and that n is the nilpotency index.
    CheckNilpotent(SizeArgs),
    /// Count walks of length k from x to y.
    WalkCount(WalkCountArgs),
    /// Compare DP counts, enumeration and integer adjacency powers.
    VerifyLemma(VerifyLemmaArgs),
    /// Run the three-class parity induction.
    VerifyTheorem(VerifyTheoremArgs),
    /// Check the class-3 reflection on every class-3 walk.
    InvolutionTest(InvolutionArgs),
    /// Count walks by class relative to a pivot.
    Census(CensusArgs),
    /// Search for a walk on which the naive reflection leaves the path.
    NaiveDemo(NaiveArgs),
    /// Characteristic polynomial of P_n over GF(2).
    Charpoly(CharpolyArgs),
    /// Time A^n for n = 2^m - 1, m = 1..=max-m.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["m", "n"])))]
pub struct SizeArgs {
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct WalkCountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub x: usize,
    #[arg(long)]
    pub y: usize,
    #[arg(long)]
    pub k: usize,
    /// Exact count (default).
    #[arg(long, conflicts_with = "parity")]
    pub exact: bool,
    /// Parity only.
    #[arg(long)]
    pub parity: bool,
}

#[derive(Debug, Args)]
pub struct VerifyLemmaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max_k: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("endpoints").args(["x", "y"]).multiple(true).conflicts_with("all")))]
pub struct VerifyTheoremArgs {
    #[arg(long)]
    pub m: u32,
    /// Walk length; with --all defaults to every k in n..=n+4.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, requires = "y")]
    pub x: Option<usize>,
    #[arg(long, requires = "x")]
    pub y: Option<usize>,
    /// Every pair of endpoints.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct InvolutionArgs {
    #[arg(long)]
    pub m: u32,
    /// Largest walk length checked.
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub pivot: usize,
    #[arg(long)]
    pub x: usize,
    #[arg(long)]
    pub y: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct NaiveArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct CharpolyArgs {
    #[arg(long)]
    pub n: usize,
    /// Also check the polynomial is λ^n and compare with the nilpotency index.
    #[arg(long)]
    pub check_monomial: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 12)]
    pub max_m: u32,
}

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

type CmdResult = Result<ParityReport, CommandError>;

pub fn run(command: &Command) -> CmdResult {
    let started = Instant::now();
    let report = match command {
        Command::CheckNilpotent(a) => check_nilpotent(a),
        Command::WalkCount(a) => walk_count(a),
        Command::VerifyLemma(a) => verify_lemma(a),
        Command::VerifyTheorem(a) => verify_theorem(a),
        Command::InvolutionTest(a) => involution_test(a),
        Command::Census(a) => census(a),
        Command::NaiveDemo(a) => naive_demo(a),
        Command::Charpoly(a) => charpoly(a),
        Command::Bench(a) => bench(a),
    }?;
    Ok(report.timed(started))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parity_word(c: &ExactCount) -> &'static str {
    if c.bit(0) {
        "odd"
    } else {
        "even"
    }
}

fn check_nilpotent(args: &SizeArgs) -> CmdResult {
    let spec = match (args.m, args.n) {
        (Some(m), _) => PathSpec::from_exponent(m)?,
        (None, Some(n)) => PathSpec::new(n)?,
        (None, None) => unreachable!("clap requires one of --m / --n"),
    };
    let n = spec.n();
    let mut report = ParityReport::new("check-nilpotent");
    if let Some(m) = spec.m() {
        report = report.param("m", m);
    }
    report = report.param("n", n);

    let a = spec.adjacency();
    let a_n = a.pow(n as u64);
    report.check("A^n = 0", true, a_n.is_zero(), "square-and-multiply");
    let corner = a.pow(n as u64 - 1).get(1, n);
    report.check("A^(n-1)[1,n]", 1, corner as u8, "square-and-multiply");
    let index = a
        .nilpotency_index()
        .map_or_else(|| "none".to_owned(), |i| i.to_string());
    report.check("nilpotency index", n, index, "binary search over A^(2^j)");
    Ok(report)
}

fn walk_count(args: &WalkCountArgs) -> CmdResult {
    let WalkCountArgs { n, x, y, k, .. } = *args;
    let mut report = ParityReport::new("walk-count")
        .param("n", n)
        .param("x", x)
        .param("y", y)
        .param("k", k)
        .param("mode", if args.parity { "parity" } else { "exact" });
    let matrix_bit = |n: usize| -> Result<u8, Error> {
        Ok(path_adjacency(n)?.pow(k as u64).get(x, y) as u8)
    };

    if args.parity {
        let parity = count_walks_parity(n, x, y, k)?;
        report.check("parity vs A^k[x,y]", matrix_bit(n)?, parity.bit(), "bit-vector dp");
        return Ok(report);
    }

    let exact = count_walks_exact(n, x, y, k)?;
    let config = EnumConfig::from_env();
    if k <= config.cap {
        let mut enumerated = 0u64;
        let _ = for_each_walk::<()>(n, x, Some(y), k, &config, |_| {
            enumerated += 1;
            ControlFlow::Continue(())
        })?;
        report.check("walk count", enumerated, &exact, "vector dp vs enumeration");
    } else {
        report.check("walk count", &exact, &exact, "vector dp (beyond enumeration cap)");
    }
    report.check(
        "count mod 2 vs A^k[x,y]",
        matrix_bit(n)?,
        exact.bit(0) as u8,
        "vector dp vs square-and-multiply",
    );
    Ok(report)
}

fn verify_lemma(args: &VerifyLemmaArgs) -> CmdResult {
    let VerifyLemmaArgs { n, max_k } = *args;
    let config = EnumConfig::from_env();
    if max_k > config.cap {
        return Err(CommandError::Usage(format!(
            "--max-k {max_k} exceeds the enumeration cap {}",
            config.cap
        )));
    }
    PathSpec::new(n)?;
    let mut report = ParityReport::new("verify-lemma")
        .param("n", n)
        .param("max_k", max_k);
    let a: IntMatrix = path_adjacency_dense(n);
    let mut power = IntMatrix::identity(n);
    for k in 0..=max_k {
        let mut agree = 0usize;
        let mut total_walks = ExactCount::from(0u8);
        for x in 1..=n {
            for y in 1..=n {
                let dp = count_walks_exact(n, x, y, k)?;
                let enumerated = enumerate_walks(n, x, y, k, &config)?.len();
                if dp == ExactCount::from(enumerated) && &dp == power.get(x, y) {
                    agree += 1;
                }
                total_walks += dp;
            }
        }
        report.check(
            format!("k={k} pairs agreeing"),
            n * n,
            agree,
            format!("dp = enumeration = A^k over Z; {total_walks} walks"),
        );
        power = power.mul(&a);
    }
    Ok(report)
}

fn verify_theorem(args: &VerifyTheoremArgs) -> CmdResult {
    let spec = PathSpec::from_exponent(args.m)?;
    let n = spec.n();
    if let Some(k) = args.k {
        if k < n {
            return Err(CommandError::Usage(format!(
                "--k {k} is below n = {n}; the parity claim needs k >= n"
            )));
        }
    }
    if !args.all {
        let (Some(x), Some(y), Some(k)) = (args.x, args.y, args.k) else {
            return Err(CommandError::Usage(
                "verify-theorem needs --k --x --y, or --all".to_owned(),
            ));
        };
        return Ok(theorem_check(args.m, k, x, y)?.report());
    }

    let lengths: Vec<usize> = match args.k {
        Some(k) => vec![k],
        None => (n..=n + 4).collect(),
    };
    let mut report = ParityReport::new("verify-theorem")
        .param("m", args.m)
        .param("n", n)
        .param("all", true);
    report = match args.k {
        Some(k) => report.param("k", k),
        None => report.param("k", format!("{}..={}", n, n + 4)),
    };
    for &k in &lengths {
        for x in 1..=n {
            for y in 1..=n {
                let out = theorem_check(args.m, k, x, y)?;
                let source = match &out.certificate {
                    Certificate::Base => "base case".to_owned(),
                    Certificate::Induction { class1, class2, class3, .. } => format!(
                        "class 1 {}, class 2 {}/{} steps factored, class 3 {}+{}",
                        if class1.holds() { "ok" } else { "odd" },
                        class2
                            .iter()
                            .filter(|e| matches!(e, Class2Evidence::Factor { .. }))
                            .count(),
                        class2.len(),
                        class3.left,
                        class3.right,
                    ),
                };
                let observed = if out.is_even() { "even" } else { "odd" };
                report.check(format!("k={k} x={x} y={y}"), "even", observed, source);
            }
        }
    }
    Ok(report)
}

fn involution_test(args: &InvolutionArgs) -> CmdResult {
    let spec = PathSpec::from_exponent(args.m)?;
    let n = spec.n();
    let pivot = (n + 1) / 2;
    let config = EnumConfig::from_env();
    if args.k > config.cap {
        return Err(CommandError::Usage(format!(
            "--k {} exceeds the enumeration cap {}",
            args.k, config.cap
        )));
    }

    let mut checked = 0u64;
    let mut total = 0u64;
    let mut fixed_point_free = 0u64;
    let mut preserving = 0u64;
    let mut involutive = 0u64;
    for k in 0..=args.k {
        for x in 1..=n {
            let _ = for_each_walk::<()>(n, x, None, k, &config, |vs| {
                let w = Walk::new(vs.to_vec());
                if w.visits(pivot).nth(1).is_none() {
                    return ControlFlow::Continue(());
                }
                checked += 1;
                if let Ok(image) = reflect_class3(n, &w, pivot) {
                    total += 1;
                    fixed_point_free += (image != w) as u64;
                    preserving += (classify(n, &image, pivot).map(|c| c.tag) == Ok(ClassTag::Class3)
                        && (image.start(), image.end(), image.len())
                            == (w.start(), w.end(), w.len())) as u64;
                    involutive += (reflect_class3(n, &image, pivot).as_ref() == Ok(&w)) as u64;
                }
                ControlFlow::Continue(())
            })?;
        }
    }
    let mut report = ParityReport::new("involution-test")
        .param("m", args.m)
        .param("n", n)
        .param("pivot", pivot)
        .param("k", args.k);
    let source = format!("{checked} class-3 walks of length <= {}", args.k);
    report.check("reflection defined", checked, total, source.clone());
    report.check("fixed-point-free", checked, fixed_point_free, source.clone());
    report.check("class/start/end/length preserved", checked, preserving, source.clone());
    report.check("involution", checked, involutive, source);
    Ok(report)
}

fn census(args: &CensusArgs) -> CmdResult {
    let CensusArgs { n, pivot, x, y, k } = *args;
    let c = class_census(n, pivot, x, y, k)?;
    let mut report = ParityReport::new("census")
        .param("n", n)
        .param("pivot", pivot)
        .param("x", x)
        .param("y", y)
        .param("k", k);

    let config = EnumConfig::from_env();
    if k <= config.cap {
        let mut by_class = [0usize; 3];
        for w in enumerate_walks(n, x, y, k, &config)? {
            by_class[match classify(n, &w, pivot)?.tag {
                ClassTag::Class1 => 0,
                ClassTag::Class2 => 1,
                ClassTag::Class3 => 2,
            }] += 1;
        }
        for (name, (oracle, dp)) in ["c1", "c2", "c3"]
            .into_iter()
            .zip(by_class.into_iter().zip([&c.c1, &c.c2, &c.c3]))
        {
            report.check(name, oracle, dp, "class dp vs enumeration");
        }
    } else {
        for (name, dp) in [("c1", &c.c1), ("c2", &c.c2), ("c3", &c.c3)] {
            report.check(name, dp, dp, "class dp (beyond enumeration cap)");
        }
    }
    report.check(
        "c1 + c2 + c3",
        count_walks_exact(n, x, y, k)?,
        c.total(),
        "class dp vs walk-count dp",
    );
    let per_step_sum: ExactCount = c.per_step_c2.iter().sum();
    report.check("sum of per-step c2", &c.c2, per_step_sum, "first-arrival products");

    let theorem_regime = PathSpec::new(n)?.m().is_some() && pivot == (n + 1) / 2 && k >= n;
    for (i, count) in c.per_step_c2.iter().enumerate() {
        if theorem_regime {
            report.check(format!("c2 step {i}"), "even", parity_word(count), format!("{count} walks"));
        } else {
            report.check(format!("c2 step {i}"), count, count, "first-arrival product");
        }
    }
    report.check(
        "c3 first excursion left = right",
        &c.c3_left,
        &c.c3_right,
        "class dp",
    );
    Ok(report)
}

fn naive_demo(args: &NaiveArgs) -> CmdResult {
    let NaiveArgs { n, k } = *args;
    PathSpec::new(n)?;
    let config = EnumConfig::from_env();
    if k > config.cap {
        return Err(CommandError::Usage(format!(
            "--k {k} exceeds the enumeration cap {}",
            config.cap
        )));
    }
    let mut report = ParityReport::new("naive-demo").param("n", n).param("k", k);
    let witness = find_naive_failure(n, k, &config)?;
    report.check(
        "naive reflection fails somewhere",
        "yes",
        yes_no(witness.is_some()),
        "lexicographic search over all walks",
    );
    if let Some(w) = witness {
        let pivot = naive_pivot(&w).expect("witness repeats a vertex");
        let (observed, detail) = match naive_reflect(n, &w) {
            Err(Error::OutOfBounds { from, to, .. }) => {
                ("out of bounds", format!("{from} reflects to {to}"))
            }
            Err(e) => ("error", e.to_string()),
            Ok(image) => ("defined", image.to_string()),
        };
        report.check(
            format!("witness {w}, naive pivot {pivot}"),
            "out of bounds",
            observed,
            detail,
        );
        if let Some(m) = PathSpec::new(n)?.m().filter(|&m| m > 1) {
            let mid = 1usize << (m - 1);
            if w.visits(mid).nth(1).is_some() {
                let image = reflect_class3(n, &w, mid)?;
                report.check(
                    format!("midpoint {mid} reflection"),
                    "defined",
                    "defined",
                    image.to_string(),
                );
            } else {
                report.check(
                    format!("midpoint {mid} reflection"),
                    "not class 3",
                    "not class 3",
                    "witness handled by class 1 or 2",
                );
            }
        }
    }
    Ok(report)
}

fn charpoly(args: &CharpolyArgs) -> CmdResult {
    let n = args.n;
    let p = charpoly_path(n);
    let mut report = ParityReport::new("charpoly")
        .param("n", n)
        .param("check_monomial", args.check_monomial);
    report.check("charpoly", p.to_string(), p.to_string(), "three-term recurrence");
    report.check(
        "degree",
        n,
        p.degree().map_or_else(|| "none".to_owned(), |d| d.to_string()),
        "three-term recurrence",
    );
    if args.check_monomial {
        let monomial = p.is_monomial(n);
        report.check("charpoly = λ^n", true, monomial, "three-term recurrence");
        if n >= 1 {
            let nilpotent = path_adjacency(n)?.nilpotency_index().is_some();
            report.check(
                "nilpotent iff monomial",
                yes_no(monomial),
                yes_no(nilpotent),
                "nilpotency index",
            );
        }
    }
    Ok(report)
}

fn bench(args: &BenchArgs) -> CmdResult {
    if !(1..=16).contains(&args.max_m) {
        return Err(CommandError::Usage(format!(
            "--max-m {} outside 1..=16",
            args.max_m
        )));
    }
    let mut report = ParityReport::new("bench").param("max_m", args.max_m);
    for m in 1..=args.max_m {
        let n = (1usize << m) - 1;
        let a = path_adjacency(n)?;
        let started = Instant::now();
        let zero = a.pow(n as u64).is_zero();
        // Timings go to stderr so the report itself stays reproducible.
        eprintln!(
            "m={m:>2} n={n:>5}  A^n in {:>10.3} ms",
            started.elapsed().as_secs_f64() * 1e3
        );
        report.check(format!("m={m} n={n} A^n = 0"), true, zero, "square-and-multiply");
    }
    Ok(report)
}
