use clap::Subcommand;
use serde_json::json;

use gammawitt::witt::{CoeffJson, RingSpec, WittJson};
use gammawitt::{GhostVector, Integers, Polynomials, PrimeField, Rationals, Ring, WittVector};

use crate::io::{load, show_vector, Failure, Output};

#[derive(Subcommand, Debug)]
pub enum WittCommand {
    /// Witt sum of two vectors on the same truncation.
    Add {
        /// Witt vector JSON: inline, file or `-`.
        #[arg(long)]
        input: String,
        #[arg(long)]
        other: String,
    },
    /// Witt product of two vectors on the same truncation.
    Mul {
        #[arg(long)]
        input: String,
        #[arg(long)]
        other: String,
    },
    /// Ghost components, written in the Witt vector JSON shape.
    Ghost {
        #[arg(long)]
        input: String,
    },
    /// Witt vector with the given ghost components (fails when they are not in the image).
    FromGhost {
        #[arg(long)]
        input: String,
    },
    /// Frobenius `F_m`, landing on the divided truncation.
    Frobenius {
        #[arg(long)]
        input: String,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        m: i64,
    },
    /// Verschiebung `V_m` on the same truncation.
    Verschiebung {
        #[arg(long)]
        input: String,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        m: i64,
    },
    /// Split into classical big Witt vectors, one per ray.
    Decompose {
        #[arg(long)]
        input: String,
    },
}

impl WittCommand {
    fn input(&self) -> &str {
        match self {
            WittCommand::Add { input, .. }
            | WittCommand::Mul { input, .. }
            | WittCommand::Ghost { input }
            | WittCommand::FromGhost { input }
            | WittCommand::Frobenius { input, .. }
            | WittCommand::Verschiebung { input, .. }
            | WittCommand::Decompose { input } => input,
        }
    }

    fn other(&self) -> Option<&str> {
        match self {
            WittCommand::Add { other, .. } | WittCommand::Mul { other, .. } => Some(other),
            _ => None,
        }
    }
}

fn vector_output<R: Ring>(v: &WittVector<R>, ring: &RingSpec, heading: &str) -> Output {
    let mut json = v.to_json();
    json.ring = Some(ring.clone());
    let mut text = format!("{heading} over {} on {} members", v.ring().name(), v.base().len());
    for c in &json.coeffs {
        text.push_str(&format!("\n{} {}", show_vector(&c.gamma), c.value));
    }
    Output::new(text, serde_json::to_value(&json).expect("serializable"))
}

fn run_with<R: Ring>(ring: R, spec: &RingSpec, cmd: &WittCommand, first: &WittJson) -> Result<Output, Failure> {
    let x = WittVector::from_json(first, ring.clone())?;
    let second = || -> Result<WittVector<R>, Failure> {
        let doc: WittJson = load(cmd.other().expect("binary command"))?;
        if doc.ring.as_ref().is_some_and(|r| r != spec) {
            return Err(Failure::new("witt", "operands have different coefficient rings"));
        }
        Ok(WittVector::from_json(&doc, ring.clone())?)
    };
    match cmd {
        WittCommand::Add { .. } => Ok(vector_output(&x.add(&second()?)?, spec, "sum")),
        WittCommand::Mul { .. } => Ok(vector_output(&x.mul(&second()?)?, spec, "product")),
        WittCommand::Ghost { .. } => {
            let g = x.ghost();
            let coeffs = x
                .base()
                .enumerate()
                .iter()
                .zip(g.components())
                .filter(|(_, c)| !ring.is_zero(c))
                .map(|(gamma, c)| CoeffJson { gamma: gamma.clone(), value: ring.format(c) })
                .collect();
            let doc = WittJson { monoid: x.base().to_spec(), ring: Some(spec.clone()), coeffs };
            let mut text = format!("ghost components over {}", ring.name());
            for c in &doc.coeffs {
                text.push_str(&format!("\n{} {}", show_vector(&c.gamma), c.value));
            }
            Ok(Output::new(text, serde_json::to_value(&doc)?))
        }
        WittCommand::FromGhost { .. } => {
            let g = GhostVector::new(x.base().clone(), ring.clone(), x.coeffs().to_vec())?;
            Ok(vector_output(&g.from_ghost()?, spec, "Witt vector"))
        }
        WittCommand::Frobenius { m, .. } => Ok(vector_output(&x.frobenius(*m)?, spec, &format!("F_{m}"))),
        WittCommand::Verschiebung { m, .. } => Ok(vector_output(&x.verschiebung(*m)?, spec, &format!("V_{m}"))),
        WittCommand::Decompose { .. } => {
            let parts = x.ray_decompose();
            let mut text = String::new();
            let mut rows = Vec::new();
            for (ray, part) in &parts {
                let values: Vec<String> = part.coeffs.iter().map(|c| ring.format(c)).collect();
                let pairs: Vec<String> =
                    part.truncation_set.iter().zip(&values).map(|(e, v)| format!("{e}:{v}")).collect();
                if !text.is_empty() {
                    text.push('\n');
                }
                text.push_str(&format!("{} {}", show_vector(ray.primitive()), pairs.join(" ")));
                rows.push(json!({
                    "ray": ray.primitive(),
                    "truncation_set": part.truncation_set,
                    "coeffs": values,
                }));
            }
            Ok(Output::new(text, json!({ "ring": spec, "rays": rows })))
        }
    }
}

fn unsupported(spec: &RingSpec) -> Failure {
    Failure::new("ring", format!("unsupported coefficient ring kind {:?}", spec.kind))
}

fn prime(spec: &RingSpec) -> Result<PrimeField, Failure> {
    let p = spec.p.ok_or_else(|| Failure::new("ring", "Fp needs a modulus \"p\""))?;
    Ok(PrimeField::new(p)?)
}

pub fn run(cmd: &WittCommand) -> Result<Output, Failure> {
    let first: WittJson = load(cmd.input())?;
    let spec = first.ring.clone().unwrap_or_else(RingSpec::integers);
    match spec.kind.as_str() {
        "Z" => run_with(Integers, &spec, cmd, &first),
        "Q" => run_with(Rationals, &spec, cmd, &first),
        "Fp" => run_with(prime(&spec)?, &spec, cmd, &first),
        "poly" => {
            let var = spec.var.clone().unwrap_or_else(|| "x".into());
            let base = spec.base.as_deref().cloned().unwrap_or_else(RingSpec::integers);
            match base.kind.as_str() {
                "Z" => run_with(Polynomials::new(Integers, var), &spec, cmd, &first),
                "Q" => run_with(Polynomials::new(Rationals, var), &spec, cmd, &first),
                "Fp" => run_with(Polynomials::new(prime(&base)?, var), &spec, cmd, &first),
                _ => Err(unsupported(&base)),
            }
        }
        _ => Err(unsupported(&spec)),
    }
}
