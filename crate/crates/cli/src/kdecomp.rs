use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;

use gammawitt::kgroup::{
    davis_laurent, fundamental_theorem, nk_power, polynomial_decomposition, wreath_orbit, Degree, Renderer, Style,
};
use gammawitt::FormalGroupExpr;

use crate::io::{Failure, Output};

#[derive(Subcommand, Debug)]
pub enum KDecompCommand {
    /// `K_q(k[x₁,…,x_n])` as a sum over rays of ℕ₊ orthants.
    Poly(Common),
    /// `K_q(k[x₁^{±1},…,x_n^{±1}])` as a sum over rays of ℤⁿ.
    Laurent(Common),
    /// `N^nK_q(k)` as a sum over rays of ℕ₊ⁿ.
    Nkpower(Common),
    /// Iterated fundamental theorem: `⊕ C(n,i) N^iK_q(k)`.
    Fundamental(Common),
    /// Orbit sizes and stabilizers of sign patterns under signed permutations.
    Orbits {
        #[arg(long, value_parser = clap::value_parser!(u16).range(0..=16))]
        n: u16,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    /// Number of variables.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..=40))]
    pub n: u16,
    /// Degree symbol or integer.
    #[arg(long, default_value = "q")]
    pub q: String,
    /// Replace every ray family by its rays up to this height.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub height: Option<i64>,
    #[arg(long, value_enum, default_value_t = StyleArg::Compact)]
    pub style: StyleArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StyleArg {
    Compact,
    Typeset,
    Factored,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Self {
        match s {
            StyleArg::Compact => Style::Compact,
            StyleArg::Typeset => Style::Typeset,
            StyleArg::Factored => Style::Factored,
        }
    }
}

fn expression(cmd: &KDecompCommand) -> Result<(FormalGroupExpr, &Common), Failure> {
    Ok(match cmd {
        KDecompCommand::Poly(c) => (polynomial_decomposition(c.n.into())?, c),
        KDecompCommand::Laurent(c) => (davis_laurent(c.n.into())?, c),
        KDecompCommand::Nkpower(c) => (nk_power(c.n.into())?, c),
        KDecompCommand::Fundamental(c) => (fundamental_theorem(c.n.into())?, c),
        KDecompCommand::Orbits { .. } => unreachable!("handled separately"),
    })
}

pub fn run(cmd: &KDecompCommand) -> Result<Output, Failure> {
    if let KDecompCommand::Orbits { n } = cmd {
        let n = usize::from(*n);
        let mut rows = Vec::new();
        let mut text = format!("sign patterns of length {n}");
        for r in 0..=n {
            let o = wreath_orbit(n, r)?;
            text.push_str(&format!("\nr = {r}: orbit {}, stabilizer {}", o.orbit_size, o.stabilizer_order));
            rows.push(json!({ "r": r, "orbit_size": o.orbit_size.to_string(), "stabilizer_order": o.stabilizer_order.to_string() }));
        }
        return Ok(Output::new(text, json!({ "n": n, "orbits": rows })));
    }
    let (mut e, c) = expression(cmd)?;
    if let Some(h) = c.height {
        e = e.instantiate_rays(h)?;
    }
    let text = Renderer::new(c.style.into(), Degree::parse(&c.q)).render(&e);
    Ok(Output::new(text.clone(), json!({ "expression": text, "terms": e.to_terms() })))
}
