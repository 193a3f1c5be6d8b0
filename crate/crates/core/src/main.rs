use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use denumerant::audit::{verify, Status};
use denumerant::cache::cached_f_vector;
use denumerant::cyclotomic::{CyclotomicNumber, RootOfUnity};
use denumerant::error::Error;
use denumerant::exact::format_rational;
use denumerant::frobenius::{frobenius_bound, frobenius_number};
use denumerant::partition::{
    oracle_count, partition_from_f, partition_product_formula, polynomial_part, quasipolynomial,
    FVector, TupleSpec,
};
use denumerant::pfd::{pfd_coefficients, PfdTable, RademacherTable, RootRef};
use denumerant::waves::{WaveMode, WaveTable};

#[derive(Parser)]
#[command(name = "denumerant", version, about = "Exact restricted partition counts and their closed forms")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Use this common multiple of the parts as the period instead of their lcm.
    #[arg(long, global = true, value_name = "P")]
    period: Option<u64>,
    /// Largest n checked by `verify`.
    #[arg(long, global = true, value_name = "N", default_value_t = 200)]
    nmax: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of ways to write n as a non-negative combination of the parts.
    Count {
        #[arg(short, value_delimiter = ',', required = true)]
        a: Vec<u64>,
        #[arg(short)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Evaluate with every method and show that they agree.
        #[arg(long)]
        all_methods: bool,
    },
    /// Coefficient table d_m(v) of the quasi-polynomial, period lcm(a).
    Quasipoly {
        #[arg(short, value_delimiter = ',', required = true)]
        a: Vec<u64>,
    },
    /// Sylvester waves: polynomial parts per root, or their values at n.
    Waves {
        #[arg(short, value_delimiter = ',', required = true)]
        a: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Mode::Sylvester)]
        mode: Mode,
        #[arg(long, value_name = "N")]
        eval_at: Option<u64>,
    },
    /// Partial fraction coefficients over (λ - z)^l.
    Pfd {
        #[arg(short, value_delimiter = ',', required = true)]
        a: Vec<u64>,
    },
    /// Coefficients c_hkl(r) of 1/((1-z)...(1-z^r)) over (z - ω_hk)^l.
    Rademacher {
        #[arg(short)]
        r: usize,
    },
    /// Frobenius number and its upper bound.
    Frobenius {
        #[arg(short, value_delimiter = ',', required = true)]
        a: Vec<u64>,
    },
    /// Cross-check every formula for one tuple.
    Verify {
        #[arg(short, value_delimiter = ',', required = true)]
        a: Vec<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Dynamic programming.
    Oracle,
    /// Product formula over the f-vector.
    #[value(alias = "cor12")]
    Product,
    /// Binomial sum over the f-vector.
    FromF,
    /// Quasi-polynomial evaluation.
    Quasipoly,
}

impl Method {
    const ALL: [Method; 4] = [Method::Oracle, Method::Product, Method::FromF, Method::Quasipoly];

    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Product => "product",
            Method::FromF => "from-f",
            Method::Quasipoly => "quasipoly",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Single,
    Sylvester,
}

/// Failure while running a command; decides the exit code.
enum Failure {
    Usage(String),
    Audit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Audit { .. } | Error::NotRational { .. } => Failure::Audit(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

struct Ctx {
    json: bool,
    period: Option<u64>,
    nmax: u64,
    cache_dir: Option<PathBuf>,
}

impl Ctx {
    fn spec(&self, a: &[u64]) -> Result<TupleSpec, Error> {
        TupleSpec::with_period(a, self.period)
    }

    fn f_vector(&self, spec: &TupleSpec) -> FVector {
        cached_f_vector(self.cache_dir.as_deref(), spec)
    }

    fn emit(&self, value: &impl Serialize, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string(value).expect("serializable"));
        } else {
            print!("{}", text());
        }
    }
}

fn count_with(method: Method, fv: &FVector, n: u64) -> Result<BigInt, Error> {
    Ok(match method {
        Method::Oracle => oracle_count(fv.spec(), n),
        Method::Product => partition_product_formula(fv, n),
        Method::FromF => partition_from_f(fv, n),
        Method::Quasipoly => {
            let q = quasipolynomial(fv).eval(n);
            if !q.is_integer() {
                return Err(Error::audit("quasi-polynomial", format!("non-integer value {q}")));
            }
            q.to_integer()
        }
    })
}

fn cmd_count(cx: &Ctx, a: &[u64], n: u64, method: Method, all: bool) -> Outcome {
    let spec = cx.spec(a)?;
    let fv = cx.f_vector(&spec);
    if !all {
        let value = count_with(method, &fv, n)?;
        cx.emit(&json!({ "tuple": a, "n": n, "method": method.name(), "value": value.to_string() }), || {
            format!("{value}\n")
        });
        return Ok(ExitCode::SUCCESS);
    }
    let values = Method::ALL
        .iter()
        .map(|&m| Ok((m.name(), count_with(m, &fv, n)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let agree = values.iter().all(|(_, v)| v == &values[0].1);
    let map: serde_json::Map<String, Value> =
        values.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect();
    cx.emit(&json!({ "tuple": a, "n": n, "values": map, "agree": agree }), || {
        let mut out = String::new();
        for (name, v) in &values {
            out += &format!("{name:<10} {v}\n");
        }
        out += if agree { "all methods agree\n" } else { "METHODS DISAGREE\n" };
        out
    });
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn strings(v: &[num::BigRational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn cmd_quasipoly(cx: &Ctx, a: &[u64]) -> Outcome {
    let spec = cx.spec(a)?;
    let qp = quasipolynomial(&cx.f_vector(&spec)).fold_period(spec.lcm())?;
    let rows: Vec<Vec<String>> = qp.rows().iter().map(|r| strings(r)).collect();
    let poly = strings(&polynomial_part(&spec));
    cx.emit(
        &json!({ "tuple": a, "period": qp.period(), "rows": rows, "polynomial_part": poly }),
        || {
            let mut out = format!("period {}\n", qp.period());
            for (m, row) in rows.iter().enumerate() {
                out += &format!("d_{m}: [{}]\n", row.join(", "));
            }
            out += &format!("polynomial part (ascending): [{}]\n", poly.join(", "));
            out
        },
    );
    Ok(ExitCode::SUCCESS)
}

fn wave_table(cx: &Ctx, spec: &TupleSpec) -> Result<WaveTable, Error> {
    WaveTable::new(&quasipolynomial(&cx.f_vector(spec)))
}

fn cmd_waves(cx: &Ctx, a: &[u64], mode: Mode, eval_at: Option<u64>) -> Outcome {
    let spec = cx.spec(a)?;
    let table = wave_table(cx, &spec)?;
    let level = spec.lcm();
    let indices = spec.wave_indices();
    if let Some(n) = eval_at {
        let mut rows = Vec::new();
        let mut text = String::new();
        for &j in &indices {
            match mode {
                Mode::Sylvester => {
                    let w = format_rational(&table.sylvester(j, n)?);
                    text += &format!("W_{j}({n}) = {w}\n");
                    rows.push(json!({ "j": j, "value": w }));
                }
                Mode::Single => {
                    let w = table.wave(j, n, WaveMode::SingleRoot)?.lift(level)?;
                    text += &format!("W_{j}({n}) = {w}\n");
                    rows.push(json!({ "j": j, "value": w }));
                }
            }
        }
        let mut out = json!({ "tuple": a, "n": n, "mode": mode_name(mode), "waves": rows });
        if mode == Mode::Sylvester {
            let total = format_rational(&table.reconstruct(n)?);
            text += &format!("sum = {total}\n");
            out["sum"] = Value::String(total);
        }
        cx.emit(&out, || text);
        return Ok(ExitCode::SUCCESS);
    }

    let mut rows = Vec::new();
    let mut text = String::new();
    for w in table.roots() {
        if mode == Mode::Single && RootOfUnity::primitive(w.root.order(), 1)? != w.root {
            continue;
        }
        let coeffs = w.coeffs.iter().map(|c| c.lift(level)).collect::<Result<Vec<CyclotomicNumber>, _>>()?;
        let root = RootRef { level, power: w.root.power_at(level)? };
        text += &format!("{}: P(n) = ", w.root);
        text += &coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| if m == 0 { format!("({c})") } else { format!("({c}) n^{m}") })
            .collect::<Vec<_>>()
            .join(" + ");
        text += "\n";
        rows.push(json!({ "j": w.root.order(), "root": root, "coeffs": coeffs }));
    }
    cx.emit(&json!({ "tuple": a, "mode": mode_name(mode), "roots": rows }), || text);
    Ok(ExitCode::SUCCESS)
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Single => "single",
        Mode::Sylvester => "sylvester",
    }
}

fn cmd_pfd(cx: &Ctx, a: &[u64]) -> Outcome {
    let spec = cx.spec(a)?;
    let table: PfdTable = pfd_coefficients(&wave_table(cx, &spec)?);
    let rows = table.rows();
    cx.emit(&rows, || {
        rows.iter()
            .map(|row| {
                format!("c[z{}^{}, {}] = {}\n", row.root.level, row.root.power, row.order, row.coefficient)
            })
            .collect()
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_rademacher(cx: &Ctx, r: usize) -> Outcome {
    let rows = RademacherTable::with_period(r, cx.period)?.rows()?;
    cx.emit(&rows, || {
        rows.iter()
            .map(|row| format!("c_{{{},{},{}}}({r}) = {}\n", row.h, row.k, row.l, row.coefficient))
            .collect()
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_frobenius(cx: &Ctx, a: &[u64]) -> Outcome {
    let spec = cx.spec(a)?;
    let bound = frobenius_bound(&spec)?;
    let number = frobenius_number(&cx.f_vector(&spec))?;
    cx.emit(&json!({ "bound": bound, "frobenius": number }), || {
        format!("bound {bound}\nfrobenius {number}\n")
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cx: &Ctx, a: &[u64]) -> Outcome {
    let spec = cx.spec(a)?;
    let report = verify(&spec, cx.nmax);
    let passed = report.passed();
    cx.emit(&json!({ "report": report, "passed": passed }), || {
        let mut out = String::new();
        for c in &report.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out += &format!("{tag}  {}", c.name);
            if let Some(n) = c.first_failure {
                out += &format!(" [first failure at {n}]");
            }
            if let Some(d) = &c.detail {
                out += &format!(": {d}");
            }
            out += "\n";
        }
        let failed = report.failures().count();
        out += &if failed == 0 { "all checks passed\n".to_string() } else { format!("{failed} check(s) failed\n") };
        out
    });
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let cx = Ctx {
        json: cli.json,
        period: cli.period,
        nmax: cli.nmax,
        cache_dir: std::env::var_os("PARTITION_CACHE_DIR").map(PathBuf::from),
    };
    let outcome = match &cli.command {
        Command::Count { a, n, method, all_methods } => cmd_count(&cx, a, *n, *method, *all_methods),
        Command::Quasipoly { a } => cmd_quasipoly(&cx, a),
        Command::Waves { a, mode, eval_at } => cmd_waves(&cx, a, *mode, *eval_at),
        Command::Pfd { a } => cmd_pfd(&cx, a),
        Command::Rademacher { r } => cmd_rademacher(&cx, *r),
        Command::Frobenius { a } => cmd_frobenius(&cx, a),
        Command::Verify { a } => cmd_verify(&cx, a),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Audit(msg)) => {
            eprintln!("audit failure: {msg}");
            ExitCode::from(1)
        }
    }
}
