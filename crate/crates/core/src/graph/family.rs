use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// A named graph family member.
///
/// String grammar:
/// `complete:n | cocktail:n | tailed-star:d | cycle:n | path:n | union:<spec>+<spec>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_n`.
    Complete(usize),
    /// `K_n'`: `K_n` minus a perfect matching, so every vertex has degree `n - 2`.
    Cocktail(usize),
    /// `sr_d`: the star `K_{1,d}` with one extra vertex hanging off a leaf.
    ///
    /// Vertex 0 is the centre, `1..=d` the leaves, `d + 1` the tail tip
    /// attached to leaf 1.
    TailedStar(usize),
    Cycle(usize),
    Path(usize),
    /// Disjoint union, components laid out left to right.
    Union(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::FamilySpec {
                spec: self.to_string(),
                reason: reason.to_string(),
            })
        };
        match *self {
            FamilySpec::Complete(0) | FamilySpec::Path(0) => bad("order must be positive"),
            FamilySpec::Cocktail(n) if n == 0 || n % 2 == 1 => bad(
                "cocktail graphs need an even positive order (an odd order gives an odd degree sum)",
            ),
            FamilySpec::TailedStar(0) => bad("tailed star needs d >= 1"),
            FamilySpec::Cycle(n) if n < 3 => bad("cycle needs at least 3 vertices"),
            FamilySpec::Union(ref parts) if parts.is_empty() => bad("union needs at least one part"),
            FamilySpec::Union(ref parts) => parts.iter().try_for_each(FamilySpec::validate),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            FamilySpec::Complete(n) => Graph::complete(n),
            FamilySpec::Cocktail(n) => {
                let mut g = Graph::complete(n)?.complement();
                for i in (0..n).step_by(2) {
                    g.add_edge(i, i + 1)?;
                }
                Ok(g.complement())
            }
            FamilySpec::TailedStar(d) => {
                let mut g = Graph::empty(d + 2)?;
                for leaf in 1..=d {
                    g.add_edge(0, leaf)?;
                }
                g.add_edge(1, d + 1)?;
                Ok(g)
            }
            FamilySpec::Cycle(n) => Graph::circulant(n, &[1]),
            FamilySpec::Path(n) => {
                let mut g = Graph::empty(n)?;
                for i in 1..n {
                    g.add_edge(i - 1, i)?;
                }
                Ok(g)
            }
            FamilySpec::Union(ref parts) => {
                let mut g = Graph::empty(0)?;
                for part in parts {
                    g = g.disjoint_union(&part.generate()?)?;
                }
                Ok(g)
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let err = |reason: String| Error::FamilySpec {
            spec: text.to_string(),
            reason,
        };
        let (kind, arg) = text
            .split_once(':')
            .ok_or_else(|| err("expected `<kind>:<parameter>`".into()))?;
        let number = || {
            arg.trim()
                .parse::<usize>()
                .map_err(|_| err(format!("`{arg}` is not a non-negative integer")))
        };
        let spec = match kind.trim() {
            "complete" => FamilySpec::Complete(number()?),
            "cocktail" => FamilySpec::Cocktail(number()?),
            "tailed-star" => FamilySpec::TailedStar(number()?),
            "cycle" => FamilySpec::Cycle(number()?),
            "path" => FamilySpec::Path(number()?),
            "union" => {
                let mut parts = Vec::new();
                for piece in arg.split('+') {
                    match piece.parse()? {
                        FamilySpec::Union(inner) => parts.extend(inner),
                        spec => parts.push(spec),
                    }
                }
                FamilySpec::Union(parts)
            }
            other => return Err(err(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cocktail(n) => write!(f, "cocktail:{n}"),
            FamilySpec::TailedStar(d) => write!(f, "tailed-star:{d}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Union(parts) => {
                write!(f, "union:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}
