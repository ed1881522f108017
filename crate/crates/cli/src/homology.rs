use std::sync::Arc;

use clap::{Args, Subcommand};

use gammawitt::hochschild::{FieldSpec, DEFAULT_CELL_CAP};
use gammawitt::{AlgebraSpec, ComplexOptions, Field, HochschildComplex, HomologyKind, HomologyReport, Rationals};

use crate::io::{load, show_vector, Failure, Output};

#[derive(Subcommand, Debug)]
pub enum HomologyCommand {
    /// Nonzero homology cells of a truncated monoid algebra through `--nmax`.
    Compute(ComputeArgs),
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Algebra description: inline JSON, file or `-`.
    #[arg(long)]
    pub algebra: String,
    /// Homology relative to the degree-0 part (drops Γ-degree 0).
    #[arg(long)]
    pub relative: bool,
    #[arg(long, default_value_t = 3)]
    pub nmax: usize,
    /// Largest admissible cell dimension.
    #[arg(long, default_value_t = DEFAULT_CELL_CAP, value_parser = positive)]
    pub cell_cap: usize,
    /// Only Γ-degrees whose weight is at most this bound.
    #[arg(long)]
    pub max_weight: Option<i64>,
    /// Include representative cycles.
    #[arg(long)]
    pub basis: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("{s:?} is not a positive integer")),
    }
}

fn report_with<F: Field>(field: F, spec: &AlgebraSpec, args: &ComputeArgs, kind: HomologyKind) -> Result<HomologyReport, Failure> {
    let alg = spec.build(field)?;
    let mut options = ComplexOptions::new(args.nmax, args.relative).with_cell_cap(args.cell_cap);
    if let Some(w) = args.max_weight {
        options = options.with_max_weight(w);
    }
    let complex = HochschildComplex::new(Arc::new(alg), options)?;
    Ok(complex.report(kind, args.basis)?)
}

pub fn run(cmd: &HomologyCommand, kind: HomologyKind) -> Result<Output, Failure> {
    let HomologyCommand::Compute(args) = cmd;
    let spec: AlgebraSpec = load(&args.algebra)?;
    let report = match spec.field.prime_field()? {
        None => report_with(Rationals, &spec, args, kind)?,
        Some(fp) => report_with(fp, &spec, args, kind)?,
    };
    let name = match kind {
        HomologyKind::Hochschild => "HH",
        HomologyKind::Cyclic => "HC",
    };
    let field = match &spec.field {
        FieldSpec::Rationals => "Q".to_string(),
        FieldSpec::Prime { p } => format!("F_{p}"),
    };
    let mut text = format!("{name} over {field}, n ≤ {}", report.n_max);
    for e in &report.entries {
        text.push_str(&format!("\n{name}_{} {}: {}", e.n, show_vector(&e.eta), e.dim));
        for rep in e.basis.iter().flatten() {
            let terms: Vec<String> = rep.iter().map(|(t, c)| format!("{c}·{t}")).collect();
            text.push_str(&format!("\n    {}", terms.join(" + ")));
        }
    }
    Ok(Output::new(text, serde_json::to_value(&report)?))
}
