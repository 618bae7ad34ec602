use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use foliation_cli::corpus::Corpus;
use foliation_cli::run::{render, run, run_corpus, Command, JobSpec};

/// Logarithmic vector fields of polynomial hypersurfaces over the rationals.
#[derive(Parser, Debug)]
#[command(name = "foliation", version)]
struct Args {
    /// One of: cofactor, trivial-gens, weakly-tame, weights, tame,
    /// jacobian-lift, free-basis, saito-det, decompose, nd-check,
    /// nd-decompose, oracle, certify
    command: Command,

    /// Defining polynomial, e.g. "x^2 + y^3". Omit with --corpus.
    f: Option<String>,

    /// Comma-separated variable names.
    #[arg(long, default_value = "x,y", value_delimiter = ',')]
    vars: Vec<String>,

    /// Vector field with semicolon-separated components; repeatable.
    #[arg(long = "field", allow_hyphen_values = true)]
    fields: Vec<String>,

    /// Degree bound for oracle and certify.
    #[arg(long)]
    degree: Option<u32>,

    /// Weights `l,m` for the tame test.
    #[arg(long, value_parser = parse_weights)]
    weights: Option<(u64, u64)>,

    /// Emit a JSON document instead of text.
    #[arg(long)]
    machine: bool,

    /// Run the command over every entry of a corpus file, or the bundled
    /// corpus when given as `bundled`.
    #[arg(long)]
    corpus: Option<String>,
}

fn parse_weights(s: &str) -> Result<(u64, u64), String> {
    let (l, m) = s.split_once(',').ok_or("expected l,m")?;
    let l = l.trim().parse::<u64>().map_err(|e| e.to_string())?;
    let m = m.trim().parse::<u64>().map_err(|e| e.to_string())?;
    Ok((l, m))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let job = JobSpec {
        command: args.command,
        f: args.f.clone().unwrap_or_default(),
        vars: args.vars,
        fields: args.fields,
        degree: args.degree,
        weights: args.weights,
        machine: args.machine,
    };

    if let Some(source) = args.corpus {
        let corpus =
            if source == "bundled" { Ok(Corpus::bundled()) } else { Corpus::load(&PathBuf::from(&source)) };
        return match corpus {
            Ok(c) => {
                let (code, out) = run_corpus(job.command, &c, &job);
                print!("{out}");
                ExitCode::from(code as u8)
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }

    if args.f.is_none() {
        eprintln!("error: a polynomial argument is required unless --corpus is given");
        return ExitCode::from(2);
    }
    let report = run(&job);
    print!("{}", render(&job, &report));
    ExitCode::from(report.exit as u8)
}
