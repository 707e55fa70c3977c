use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kontsevich::checks::Check;
use kontsevich::json::{self, ComputeJson, HorizontalJson, LinkJson};
use kontsevich::{
    algebra::{quotient_dimension_circles, quotient_dimension_strands},
    kontsevich_link, kontsevich_of_braid, BraidWord, Error, DEFAULT_ZERO_THRESHOLD,
};

const STEPS_ENV: &str = "KONTSEVICH_STEPS";

#[derive(Parser)]
#[command(name = "kontsevich", about = "Kontsevich integral of braids and closed braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Z(braid) and optionally the reduced Z of its closure.
    Compute {
        #[arg(short = 'n', long = "strands")]
        n_strands: usize,
        /// Signed generator indices, e.g. "1 -2 1".
        #[arg(short = 'w', long = "word", allow_hyphen_values = true)]
        word: String,
        #[arg(short = 'm', long = "max-degree", default_value_t = 3)]
        max_degree: usize,
        /// Steps per letter [default: 512, or $KONTSEVICH_STEPS].
        #[arg(short = 's', long)]
        steps: Option<usize>,
        #[arg(long)]
        close: bool,
        #[arg(short = 'o', long, default_value = "kontsevich.json")]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ZERO_THRESHOLD)]
        zero_threshold: f64,
    },
    /// Run a named self-check; `all` runs every check.
    Verify {
        check: String,
        #[arg(short = 'm', long = "max-degree", default_value_t = 3)]
        max_degree: usize,
        #[arg(short = 's', long)]
        steps: Option<usize>,
    },
    /// Quotient dimensions per degree.
    Dims {
        #[arg(long, conflicts_with = "strands", required_unless_present = "strands")]
        circles: Option<usize>,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(short = 'm', long = "max-degree", default_value_t = 3)]
        max_degree: usize,
    },
}

enum Failure {
    Validation(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonFinite { .. } => Failure::Numerical(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

fn steps_or_default(steps: Option<usize>) -> Result<usize, Failure> {
    let steps = match steps {
        Some(s) => s,
        None => match std::env::var(STEPS_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Validation(format!("{STEPS_ENV}={v} is not a step count")))?,
            Err(_) => kontsevich::kz::DEFAULT_STEPS_PER_LETTER,
        },
    };
    if steps == 0 {
        return Err(Failure::Validation("steps must be positive".into()));
    }
    Ok(steps)
}

fn compute(
    n_strands: usize,
    word: &str,
    max_degree: usize,
    steps: usize,
    close: bool,
    output: &PathBuf,
    zero_threshold: f64,
) -> Result<(), Failure> {
    if !(zero_threshold.is_finite() && zero_threshold >= 0.0) {
        return Err(Failure::Validation("zero threshold must be non-negative".into()));
    }
    let braid = BraidWord::parse(word, n_strands)?;
    let z = kontsevich_of_braid(&braid, max_degree, steps)?.with_threshold(zero_threshold);

    println!("Z(braid) on {n_strands} strands, word \"{braid}\", degree <= {max_degree}");
    println!("{:<32} {:>22} {:>12}", "word", "|coefficient|", "arg");
    for (w, c) in z.terms() {
        println!("{:<32} {:>22.15e} {:>12.6}", w.to_string(), c.norm(), c.arg());
    }

    let link = if close {
        let closure = kontsevich_link(&braid, max_degree, steps)?;
        println!();
        println!(
            "reduced Z(closure): {} component(s) {:?}",
            closure.skeleton.n_components(),
            closure.skeleton.cycles
        );
        println!("{:<32} {:>22} {:>12}", "diagram", "|coefficient|", "arg");
        for (d, c) in closure.reduced.terms() {
            if c.norm() >= zero_threshold {
                println!("{:<32} {:>22.15e} {:>12.6}", d.to_string(), c.norm(), c.arg());
            }
        }
        let mut lj = LinkJson::from_closure(&closure)?;
        lj.reduced.terms.retain(|t| t.re.hypot(t.im) >= zero_threshold);
        Some(lj)
    } else {
        None
    };

    let doc = ComputeJson {
        word: braid.to_string(),
        braid: HorizontalJson::from(&z),
        link,
    };
    let text = json::to_string(&doc)?;
    std::fs::write(output, text + "\n")
        .map_err(|e| Failure::Validation(format!("cannot write {}: {e}", output.display())))?;
    println!();
    println!("wrote {}", output.display());
    Ok(())
}

fn verify(name: &str, max_degree: usize, steps: usize) -> Result<bool, Failure> {
    let checks: Vec<Check> = if name == "all" {
        Check::ALL.to_vec()
    } else {
        vec![name.parse::<Check>()?]
    };
    let mut ok = true;
    for check in checks {
        let report = check.run(max_degree, steps)?;
        println!("{report}");
        ok &= report.passed();
    }
    Ok(ok)
}

fn dims(circles: Option<usize>, strands: Option<usize>, max_degree: usize) -> Result<(), Failure> {
    let cells = (0..=max_degree)
        .map(|m| {
            let d = match (circles, strands) {
                (Some(q), _) if q >= 1 => quotient_dimension_circles(q, m)?,
                (_, Some(n)) if n >= 2 => quotient_dimension_strands(n, m)?,
                _ => return Err(Error::InvalidArgument("need --circles >= 1 or --strands >= 2".into())),
            };
            Ok(format!("{m}:{d}"))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    println!("{}", cells.join(" "));
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Compute {
            n_strands,
            word,
            max_degree,
            steps,
            close,
            output,
            zero_threshold,
        } => {
            let steps = steps_or_default(steps)?;
            compute(n_strands, &word, max_degree, steps, close, &output, zero_threshold)?;
            Ok(true)
        }
        Command::Verify {
            check,
            max_degree,
            steps,
        } => verify(&check, max_degree, steps_or_default(steps)?),
        Command::Dims {
            circles,
            strands,
            max_degree,
        } => {
            dims(circles, strands, max_degree)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
