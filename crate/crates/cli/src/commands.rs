use std::fs;
use std::io::Write;
use std::path::Path;

use fundpoly::channelsim::{run_trials_with, sample_llr, ChannelModel};
use fundpoly::code::gen::{cycle_union, random_cycle_code};
use fundpoly::code::io::{read, to_dense};
use fundpoly::lp::{lp_decode_on, Certificate, CostVector};
use fundpoly::structure::verify_vertex;
use fundpoly::vertexenum::{enumerate_vertices_with, vertices_to_json};
use fundpoly::{Codeword, Error, Exec, FundamentalPolytope, Limits, ParityCheckMatrix};
use serde_json::json;

use crate::{Cli, Command, InputArgs};

pub const EXIT_NONTRIVIAL: u8 = 10;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Guard { .. } => EXIT_GUARD,
            Error::Parse(_) | Error::Dimension(_) | Error::InvalidParameter(_) => EXIT_INPUT,
            Error::Contract(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    }
}

struct Ctx {
    exec: Exec,
    output: Option<std::path::PathBuf>,
}

impl Ctx {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.output {
            Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| io_failure(Path::new("<stdout>"), e))
            }
        }
    }

    fn emit_json(&self, value: &serde_json::Value) -> Result<(), Failure> {
        let mut text = serde_json::to_string_pretty(value).expect("JSON values serialise");
        text.push('\n');
        self.emit(&text)
    }
}

fn load(input: &InputArgs) -> Result<(ParityCheckMatrix, Limits), Failure> {
    let limits = Limits::lowered(input.max_n, input.max_degree)?;
    let h = read(&input.input, input.format)?;
    Ok((h, limits))
}

fn exec_for(jobs: Option<usize>) -> Result<Exec, Failure> {
    match jobs {
        Some(0) => Err(Failure {
            code: EXIT_INPUT,
            message: "--jobs must be at least 1".into(),
        }),
        Some(1) => Ok(Exec::Sequential),
        Some(_n) => {
            #[cfg(feature = "parallel")]
            {
                // a second call in the same process keeps the first pool
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(_n)
                    .build_global();
            }
            Ok(Exec::default())
        }
        None => Ok(Exec::default()),
    }
}

pub fn run(cli: Cli) -> Result<u8, Failure> {
    let ctx = Ctx {
        exec: exec_for(cli.jobs)?,
        output: cli.output,
    };
    match cli.command {
        Command::Enumerate { input } => enumerate(&ctx, &input),
        Command::Decode {
            input,
            lambda,
            p,
            seed,
        } => decode(&ctx, &input, lambda.as_deref(), p, seed),
        Command::Trials {
            input,
            p,
            trials,
            seed,
            csv,
        } => run_trials(&ctx, &input, p, trials, seed, csv.as_deref()),
        Command::Gen { n, r, seed, cycles } => gen(&ctx, n, r, seed, cycles),
        Command::Constraints { input } => {
            let (h, limits) = load(&input)?;
            let p = FundamentalPolytope::build_with_limit(&h, limits.max_check_degree)?;
            ctx.emit(&p.to_text())?;
            Ok(0)
        }
    }
}

fn enumerate(ctx: &Ctx, input: &InputArgs) -> Result<u8, Failure> {
    let (h, limits) = load(input)?;
    let p = FundamentalPolytope::build_with_limit(&h, limits.max_check_degree)?;
    let verts = enumerate_vertices_with(&p, &limits, ctx.exec)?;
    let reports = ctx.exec.map(verts.len(), |i| verify_vertex(&p, &verts[i]));

    let trivial = verts.iter().filter(|v| v.is_trivial()).count();
    let nontrivial = verts.len() - trivial;
    let holds = if !h.is_cycle_code() {
        "not-applicable"
    } else if reports.iter().all(|r| r.all_ok()) {
        "yes"
    } else {
        "no"
    };
    ctx.emit_json(&json!({
        "code": { "n": h.n(), "r": h.r(), "cycle_code": h.is_cycle_code() },
        "vertices": vertices_to_json(&verts),
        "reports": reports,
        "summary": { "trivial": trivial, "nontrivial": nontrivial, "theorem_holds": holds },
    }))?;
    eprintln!("{trivial} trivial, {nontrivial} nontrivial, theorem_holds: {holds}");
    Ok(0)
}

fn decode(
    ctx: &Ctx,
    input: &InputArgs,
    lambda_path: Option<&Path>,
    p: Option<fundpoly::Rational>,
    seed: u64,
) -> Result<u8, Failure> {
    let (h, limits) = load(input)?;
    let lambda = match (lambda_path, p) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("{}: {e}", path.display()),
            })?;
            CostVector::parse(&text)?
        }
        (None, Some(p)) => {
            let ch = ChannelModel::bsc(p)?;
            sample_llr(&ch, &Codeword::zero(h.n()), seed)?
        }
        (None, None) => {
            return Err(Failure {
                code: EXIT_INPUT,
                message: "decode needs --lambda FILE or --p P/Q".into(),
            })
        }
    };
    let poly = FundamentalPolytope::build_with_limit(&h, limits.max_check_degree)?;
    let result = lp_decode_on(&poly, &lambda)?;
    let mut value = serde_json::to_value(&result).expect("decode result serialises");
    value["lambda"] = serde_json::to_value(&lambda).expect("cost vector serialises");
    ctx.emit_json(&value)?;
    match result.certificate {
        Certificate::MlCodeword => {
            eprintln!("ML codeword, value {}", result.value);
            Ok(0)
        }
        Certificate::NontrivialPseudocodeword => {
            eprintln!(
                "nontrivial pseudocodeword {}, value {}",
                *result.optimum, result.value
            );
            Ok(EXIT_NONTRIVIAL)
        }
    }
}

fn run_trials(
    ctx: &Ctx,
    input: &InputArgs,
    p: fundpoly::Rational,
    trials: usize,
    seed: u64,
    csv_path: Option<&Path>,
) -> Result<u8, Failure> {
    let (h, limits) = load(input)?;
    let ch = ChannelModel::bsc(p.clone())?;
    let run = run_trials_with(&h, &ch, trials, seed, &limits, ctx.exec)?;
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(path).map_err(|e| io_failure(path, e))?;
        for r in &run.records {
            w.serialize(r).map_err(|e| io_failure(path, e))?;
        }
        w.flush().map_err(|e| io_failure(path, e))?;
    }
    let mut value = serde_json::to_value(&run.summary).expect("summary serialises");
    value["p"] = json!(p.to_pq());
    ctx.emit_json(&value)?;
    let s = &run.summary;
    eprintln!(
        "{} trials: {} LP word errors ({} nontrivial), {} ML word errors",
        s.trials, s.lp_word_errors, s.nontrivial_outputs, s.ml_word_errors
    );
    Ok(0)
}

fn gen(
    ctx: &Ctx,
    n: Option<usize>,
    r: Option<usize>,
    seed: u64,
    cycles: Option<Vec<usize>>,
) -> Result<u8, Failure> {
    let h = match cycles {
        Some(lengths) => cycle_union(&lengths)?,
        None => {
            let (n, r) = (n.unwrap_or(0), r.unwrap_or(0));
            random_cycle_code(n, r, seed)?
        }
    };
    debug_assert!(h.is_cycle_code());
    ctx.emit(&to_dense(&h))?;
    Ok(0)
}
