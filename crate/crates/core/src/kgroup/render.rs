use serde::{Deserialize, Serialize};

use super::expr::{Atom, FormalGroupExpr};
use super::lpoly::LPoly;
use super::rays::RaySet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    /// `K_q ⊕ K_{q−1} ⊕ 2·NK_q`
    Compact,
    /// `K_q(k) ⊕ 2NK_q(k) ⊕ ⊕_{ρ⊂ℕ₊²}(NK_q(k) ⊕ NK_{q−1}(k))`
    Typeset,
    /// Typeset style with `(1+L)^a` factored out where possible.
    Factored,
}

/// The degree `q`: either a symbol or a concrete integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degree {
    Symbol(String),
    Value(i64),
}

impl Degree {
    pub fn parse(s: &str) -> Self {
        match s.trim().parse::<i64>() {
            Ok(v) => Degree::Value(v),
            Err(_) => Degree::Symbol(s.trim().to_string()),
        }
    }

    fn minus(&self, r: u32) -> String {
        match self {
            Degree::Value(v) => (v - i64::from(r)).to_string(),
            Degree::Symbol(s) if r == 0 => s.clone(),
            Degree::Symbol(s) => format!("{s}−{r}"),
        }
    }
}

impl Default for Degree {
    fn default() -> Self {
        Degree::Symbol("q".into())
    }
}

fn subscript(s: &str) -> String {
    if s.chars().count() == 1 {
        format!("_{s}")
    } else {
        format!("_{{{s}}}")
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn group_name(power: u32) -> String {
    match power {
        0 => "K".into(),
        1 => "NK".into(),
        p => format!("N{}K", superscript(p)),
    }
}

pub struct Renderer {
    pub style: Style,
    pub q: Degree,
}

impl Renderer {
    pub fn new(style: Style, q: Degree) -> Self {
        Renderer { style, q }
    }

    fn atom(&self, a: &Atom, m: u64) -> String {
        let core = format!("{}{}", group_name(a.power), subscript(&self.q.minus(a.shift)));
        let core = if self.style == Style::Compact { core } else { format!("{core}(k)") };
        match (m, self.style) {
            (1, _) => core,
            (m, Style::Compact) => format!("{m}·{core}"),
            (m, _) => format!("{m}{core}"),
        }
    }

    fn poly_terms(&self, power: u32, p: &LPoly) -> Vec<String> {
        p.terms().map(|(s, c)| self.atom(&Atom { power, shift: s }, c)).collect()
    }

    /// `c(1+L)^a` when `p` has that shape.
    fn factor(p: &LPoly) -> Option<(u64, u32)> {
        let top = p.terms().map(|(s, _)| s).max()?;
        let c = p.coefficient(0);
        if c == 0 {
            return None;
        }
        let candidate = LPoly::one_plus_l_pow(top).ok()?.scale(c);
        (candidate == *p).then_some((c, top))
    }

    fn factored(&self, power: u32, p: &LPoly) -> Option<String> {
        let (c, a) = Self::factor(p)?;
        if a == 0 {
            return None;
        }
        let coef = if c == 1 { String::new() } else { c.to_string() };
        let pow = if a == 1 { "(1+L)".to_string() } else { format!("(1+L){}", superscript(a)) };
        Some(format!("{coef}{pow}{}", self.atom(&Atom { power, shift: 0 }, 1)))
    }

    fn family(&self, r: &RaySet, p: &LPoly) -> String {
        let head = format!("⊕_{{ρ⊂{r}}}");
        if self.style == Style::Factored {
            if let Some(f) = self.factored(1, p) {
                return format!("{head}{f}");
            }
        }
        let terms = self.poly_terms(1, p);
        if terms.len() == 1 {
            format!("{head}{}", terms[0])
        } else {
            format!("{head}({})", terms.join(" ⊕ "))
        }
    }

    pub fn render(&self, e: &FormalGroupExpr) -> String {
        let mut parts = Vec::new();
        let mut powers: Vec<u32> = e.atoms().keys().map(|a| a.power).collect();
        powers.dedup();
        for power in powers {
            let p = e
                .atoms()
                .iter()
                .filter(|(a, _)| a.power == power)
                .fold(LPoly::zero(), |acc, (a, m)| acc.add(&LPoly::monomial(a.shift, *m)));
            match (self.style, self.factored(power, &p)) {
                (Style::Factored, Some(f)) => parts.push(f),
                _ => parts.extend(self.poly_terms(power, &p)),
            }
        }
        for (r, p) in e.families() {
            parts.push(self.family(r, p));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

pub fn render(e: &FormalGroupExpr, style: Style) -> String {
    Renderer::new(style, Degree::default()).render(e)
}
