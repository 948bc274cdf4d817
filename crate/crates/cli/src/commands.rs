use std::io::Write;

use serde::Serialize;

use bending_bounds::bounds::{
    ahlfors_weill, angle_bound, bending_bound, bending_from_teich, r_from_norm,
    univalent_bending_bound, BoundEvaluation, BoundsError,
};
use bending_bounds::lamination::FiniteLamination;
use bending_bounds::verify::{
    run_area_campaign, run_bers_campaign, run_lemma_campaign, run_trig_campaign,
    run_wedge_campaign, VerificationReport, VerifyError,
};

use crate::format::significant15;
use crate::{CliError, EvalArgs, LaminationArgs, TableArgs, VerifyArgs};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require(value: Option<f64>, flag: &str, context: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| usage(format!("{context} requires --{flag}")))
}

pub fn eval(args: &EvalArgs) -> Result<(), CliError> {
    let print_eval = |b: BoundEvaluation| {
        println!("{} {}", significant15(b.value), b.branch);
    };
    let domain = |e: BoundsError| usage(e.to_string());
    match args.kind.as_str() {
        "bL" => {
            let l = require(args.l, "L", "--kind bL")?;
            let x = require(args.x, "x", "--kind bL")?;
            print_eval(bending_bound(l, x).map_err(domain)?);
        }
        "cL" => {
            let l = require(args.l, "L", "--kind cL")?;
            let r = require(args.r, "r", "--kind cL")?;
            print_eval(angle_bound(l, r).map_err(domain)?);
        }
        "teich" => {
            let l = require(args.l, "L", "--kind teich")?;
            let d_t = require(args.d_t, "dT", "--kind teich")?;
            print_eval(bending_from_teich(l, d_t).map_err(domain)?);
        }
        "r" => {
            let s = require(args.s, "s", "--kind r")?;
            println!("{}", significant15(r_from_norm(s).map_err(domain)?));
        }
        "aw" => {
            let s = require(args.s, "s", "--kind aw")?;
            println!("{}", significant15(ahlfors_weill(s).map_err(domain)?));
        }
        "fbcy" => {
            let l = require(args.l, "L", "--kind fbcy")?;
            println!("{}", significant15(univalent_bending_bound(l).map_err(domain)?));
        }
        other => return Err(usage(format!("unknown eval kind '{other}'"))),
    }
    Ok(())
}

pub fn table(args: &TableArgs) -> Result<(), CliError> {
    if args.kind != "bL" {
        return Err(usage(format!("table supports only --kind bL, got '{}'", args.kind)));
    }
    if args.format != "csv" {
        return Err(usage(format!("table emits csv, got --format {}", args.format)));
    }
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    if args.l <= 0.0 {
        return Err(usage("--L must be positive"));
    }
    let x_max = 0.5 / args.l.cosh();
    let mut out = String::from("x,value,branch\n");
    for i in 0..args.samples {
        let x = x_max * i as f64 / (args.samples - 1) as f64;
        let b = bending_bound(args.l, x).map_err(|e| usage(e.to_string()))?;
        out.push_str(&format!("{},{},{}\n", x, b.value, b.branch));
    }
    write_output(args.out.as_deref(), &out)
}

#[derive(Serialize)]
struct ConfigEcho<'a> {
    subcommand: &'a str,
    target: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<f64>,
    trials: u64,
    seed: u64,
    tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
}

#[derive(Serialize)]
struct CliReport<'a> {
    config: ConfigEcho<'a>,
    #[serde(flatten)]
    report: VerificationReport,
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    if args.format != "json" {
        return Err(usage(format!("verify emits json, got --format {}", args.format)));
    }
    let verr = |e: VerifyError| usage(e.to_string());
    let (report, trials, tol) = match args.target.as_str() {
        "halfplane-lemma" => {
            let l = require(args.l, "L", "halfplane-lemma")?;
            let r = require(args.r, "r", "halfplane-lemma")?;
            let trials = args.trials.unwrap_or(10_000);
            let tol = args.tol.unwrap_or(1e-9);
            (run_lemma_campaign(l, r, trials, args.seed).map_err(verr)?, trials, tol)
        }
        "trig" => {
            let trials = args.trials.unwrap_or(10_000);
            let tol = args.tol.unwrap_or(1e-10);
            (run_trig_campaign(trials, args.seed, tol), trials, tol)
        }
        "wedge" => {
            let k = require(args.k, "k", "wedge")?;
            let l = require(args.l, "L", "wedge")?;
            let tol = args.tol.unwrap_or(1e-3);
            let samples = args.samples.unwrap_or(9_999);
            (run_wedge_campaign(k, l, samples, args.seed, tol).map_err(verr)?, 4, tol)
        }
        "area-lemma" => {
            let trials = args.trials.unwrap_or(50);
            let tol = args.tol.unwrap_or(1e-6);
            (run_area_campaign(trials, args.seed, tol).map_err(verr)?, trials, tol)
        }
        "bers-kernel" => {
            let samples = args.samples.unwrap_or(20);
            let tol = args.tol.unwrap_or(1e-6);
            (run_bers_campaign(samples, args.seed, tol).map_err(verr)?, samples as u64, tol)
        }
        other => return Err(usage(format!("unknown verify target '{other}'"))),
    };
    let payload = CliReport {
        config: ConfigEcho {
            subcommand: "verify",
            target: &args.target,
            l: args.l,
            r: args.r,
            k: args.k,
            trials,
            seed: args.seed,
            tol,
            samples: args.samples,
        },
        report: report.clone(),
    };
    let json = serde_json::to_string_pretty(&payload).expect("report serialization") + "\n";
    write_output(args.out.as_deref(), &json)?;
    if report.violations > 0 {
        return Err(CliError::Violation(format!(
            "{} of {} checks violated the bound",
            report.violations, report.trials
        )));
    }
    Ok(())
}

pub fn lamination(args: &LaminationArgs) -> Result<(), CliError> {
    if args.l <= 0.0 {
        return Err(usage("--L must be positive"));
    }
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.input.display())))?;
    let spec: bending_bounds::lamination::LaminationFile =
        serde_json::from_str(&text).map_err(|e| usage(format!("malformed lamination file: {e}")))?;
    let lam = FiniteLamination::from_file_spec(&spec).map_err(|e| usage(e.to_string()))?;
    let norm = lam.norm_l(args.l).map_err(|e| usage(e.to_string()))?;
    println!("{norm}");
    Ok(())
}

fn write_output(path: Option<&std::path::Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}
