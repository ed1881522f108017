use clap::Subcommand;
use serde_json::json;

use gammawitt::kgroup::RaySet;
use gammawitt::MonoidSpec;

use crate::io::{load, parse_vector, show_vector, Failure, Output};

#[derive(Subcommand, Debug)]
pub enum MonoidCommand {
    /// List the nonzero members of a truncation in (degree, lex) order.
    Enumerate {
        /// Monoid description with `weight` and `degree_bound`: inline JSON, file or `-`.
        #[arg(long)]
        input: String,
    },
    /// Rays of a truncation, or of a ray set up to a height.
    Rays {
        /// Monoid description with `weight` and `degree_bound`.
        #[arg(long, conflicts_with = "set")]
        input: Option<String>,
        /// `positive-orthant:M`, `lattice:N`, or a ray set JSON object.
        #[arg(long, default_value = "positive-orthant:2")]
        set: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        height: i64,
    },
    /// Content `c(γ)` of a member.
    Content {
        #[arg(long)]
        input: String,
        /// Comma separated coordinates, e.g. `2,4`.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Membership test.
    Contains {
        #[arg(long)]
        input: String,
        /// Comma separated coordinates, e.g. `2,4`.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
}

pub fn parse_ray_set(s: &str) -> Result<RaySet, Failure> {
    if s.trim_start().starts_with('{') {
        return load(s);
    }
    let bad = || Failure::new("input", format!("unknown ray set {s:?}"));
    let (kind, n) = s.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    match kind.trim() {
        "positive-orthant" => Ok(RaySet::PositiveOrthant { m: n }),
        "lattice" => Ok(RaySet::Lattice { n }),
        _ => Err(bad()),
    }
}

pub fn run(cmd: &MonoidCommand) -> Result<Output, Failure> {
    match cmd {
        MonoidCommand::Enumerate { input } => {
            let spec: MonoidSpec = load(input)?;
            let t = spec.truncated()?;
            let elems = t.enumerate().to_vec();
            let text = elems.iter().map(|v| show_vector(v)).collect::<Vec<_>>().join("\n");
            Ok(Output::new(text, json!({ "count": elems.len(), "elements": elems })))
        }
        MonoidCommand::Rays { input: Some(input), .. } => {
            let spec: MonoidSpec = load(input)?;
            let t = spec.truncated()?;
            let rays: Vec<_> = t
                .rays()
                .iter()
                .map(|rd| json!({ "primitive": rd.ray.primitive(), "multiples": rd.multiples }))
                .collect();
            let text = t
                .rays()
                .iter()
                .map(|rd| {
                    let m: Vec<String> = rd.multiples.iter().map(u64::to_string).collect();
                    format!("{} × {{{}}}", show_vector(rd.ray.primitive()), m.join(", "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::new(text, json!({ "count": rays.len(), "rays": rays })))
        }
        MonoidCommand::Rays { input: None, set, height } => {
            let rs = parse_ray_set(set)?;
            let rays = rs.instantiate(*height);
            let mut text = format!("{} rays of {rs} up to height {height}", rays.len());
            for r in &rays {
                text.push('\n');
                text.push_str(&show_vector(r));
            }
            Ok(Output::new(text, json!({ "set": rs, "height": height, "count": rays.len(), "rays": rays })))
        }
        MonoidCommand::Content { input, vector } => {
            let spec: MonoidSpec = load(input)?;
            let vector = parse_vector(vector).map_err(|e| Failure::new("input", e))?;
            let c = spec.monoid()?.content(&vector)?;
            Ok(Output::new(c.to_string(), json!({ "vector": vector, "content": c })))
        }
        MonoidCommand::Contains { input, vector } => {
            let spec: MonoidSpec = load(input)?;
            let vector = parse_vector(vector).map_err(|e| Failure::new("input", e))?;
            let m = spec.monoid()?.contains(&vector)?;
            Ok(Output::new(m.to_string(), json!({ "vector": vector, "member": m })))
        }
    }
}
