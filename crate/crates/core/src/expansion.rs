//! Assembly of the full N-point vacuum matrix element: one term per
//! admissible chord diagram, each carrying its coefficient polynomial and
//! the propagator tokens of its chords.
//!
//! Propagators are opaque symbols (`D+` for parabose, `S+` for parafermi)
//! with argument order fixed as `(x_i - x_j)`, `i < j`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coefficients::CoefficientCache;
use crate::diagrams::{admissible_matchings, ChordDiagram, FieldKind, FieldPattern};
use crate::error::Result;
use crate::poly::PPolynomial;
use crate::Limits;

/// Which two-point function a chord stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    /// Scalar positive-frequency two-point function.
    DeltaPlus,
    /// Spinor positive-frequency two-point function.
    SPlus,
}

impl TokenKind {
    pub fn json_str(&self) -> &'static str {
        match self {
            TokenKind::DeltaPlus => "D+",
            TokenKind::SPlus => "S+",
        }
    }

    fn latex_symbol(&self) -> &'static str {
        match self {
            TokenKind::DeltaPlus => r"\Delta^{(+)}",
            TokenKind::SPlus => r"S^{(+)}",
        }
    }
}

/// One contraction, `D+(i,j)` or `S+(i,j)` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PropagatorToken {
    pub kind: TokenKind,
    pub i: u32,
    pub j: u32,
}

impl PropagatorToken {
    fn latex(&self) -> String {
        format!("{}(x_{}-x_{})", self.kind.latex_symbol(), self.i, self.j)
    }

    fn to_json(self) -> Value {
        json!({"kind": self.kind.json_str(), "i": self.i, "j": self.j})
    }
}

impl fmt::Display for PropagatorToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind.json_str(), self.i, self.j)
    }
}

/// One term of the expansion: a diagram, its coefficient polynomial and the
/// chord-by-chord propagator tokens in canonical chord order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub diagram: ChordDiagram,
    pub coefficient: PPolynomial,
    pub propagators: Vec<PropagatorToken>,
}

/// The full vacuum matrix element of a field product, terms in canonical
/// diagram order: `(N-1)!!` of them for parabose, `n!` for a balanced
/// charged parafermi pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pattern: FieldPattern,
    terms: Vec<ExpansionTerm>,
}

/// Output shape for [`Expansion::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Latex,
    Json,
}

/// Rendering knobs. `group_by_coefficient` merges terms with equal
/// coefficients (text and LaTeX only); `evaluate_at` appends the exact term
/// values at a concrete `p` (text and JSON only).
#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    pub group_by_coefficient: bool,
    pub evaluate_at: Option<u32>,
}

/// Expand the vacuum matrix element of the given field product: one term per
/// admissible diagram, with parabose or parafermi coefficients per pattern.
pub fn expand(pattern: &FieldPattern, limits: &Limits) -> Result<Expansion> {
    let diagrams = admissible_matchings(pattern, limits)?;
    let charged = pattern.is_charged();
    let kind = if charged {
        TokenKind::SPlus
    } else {
        TokenKind::DeltaPlus
    };
    let mut cache = CoefficientCache::new();
    let mut terms = Vec::with_capacity(diagrams.len());
    for diagram in diagrams {
        let graph = diagram.crossing_graph();
        let parabose = cache.coefficient_polynomial(&graph, limits)?;
        let coefficient = if charged && graph.edge_count() % 2 == 1 {
            -&parabose
        } else {
            parabose
        };
        let propagators = diagram
            .chords()
            .iter()
            .map(|&(i, j)| PropagatorToken { kind, i, j })
            .collect();
        terms.push(ExpansionTerm {
            diagram,
            coefficient,
            propagators,
        });
    }
    Ok(Expansion {
        pattern: pattern.clone(),
        terms,
    })
}

impl Expansion {
    pub fn pattern(&self) -> &FieldPattern {
        &self.pattern
    }

    pub fn terms(&self) -> &[ExpansionTerm] {
        &self.terms
    }

    pub fn num_fields(&self) -> usize {
        self.pattern.num_fields()
    }

    /// Exact value of every term's coefficient at a concrete order `p`.
    pub fn evaluate_at(&self, p: u32) -> Vec<(ChordDiagram, BigInt)> {
        self.terms
            .iter()
            .map(|t| (t.diagram.clone(), t.coefficient.eval_int(p)))
            .collect()
    }

    pub fn render(&self, format: RenderFormat, options: &RenderOptions) -> String {
        match format {
            RenderFormat::Text => self.render_text(options),
            RenderFormat::Latex => self.render_latex(options),
            RenderFormat::Json => self.to_json_with(options).to_string(),
        }
    }

    fn render_text(&self, options: &RenderOptions) -> String {
        let mut lines = Vec::new();
        if options.group_by_coefficient {
            for (coefficient, terms) in self.coefficient_groups() {
                let products = terms
                    .iter()
                    .map(|t| t.propagators.iter().join(" "))
                    .join(" + ");
                lines.push(format!("{} * {{ {} }}", text_coeff(coefficient), products));
            }
        } else {
            for term in &self.terms {
                lines.push(format!(
                    "{} * {}",
                    text_coeff(&term.coefficient),
                    term.propagators.iter().join(" ")
                ));
            }
        }
        if let Some(p) = options.evaluate_at {
            let values = self
                .terms
                .iter()
                .map(|t| t.coefficient.eval_int(p).to_string())
                .join(" ");
            lines.push(format!("at p={p}: {values}"));
        }
        lines.join("\n") + "\n"
    }

    fn render_latex(&self, options: &RenderOptions) -> String {
        let fields = self
            .pattern
            .kinds()
            .iter()
            .enumerate()
            .map(|(i, kind)| {
                let x = i + 1;
                match kind {
                    FieldKind::NeutralParabose => format!(r"\Phi(x_{x})"),
                    FieldKind::Parafermi => format!(r"\Psi(x_{x})"),
                    FieldKind::ParafermiConjugate => format!(r"\bar{{\Psi}}(x_{x})"),
                }
            })
            .join("");
        let summands: Vec<String> = if options.group_by_coefficient {
            self.coefficient_groups()
                .into_iter()
                .map(|(coefficient, terms)| {
                    let products = terms
                        .iter()
                        .map(|t| t.propagators.iter().map(PropagatorToken::latex).join(""))
                        .join(" + ");
                    format!(r"{}\,\{{{}\}}", coefficient.latex_form(), products)
                })
                .collect()
        } else {
            self.terms
                .iter()
                .map(|t| {
                    format!(
                        r"{}\,{}",
                        t.coefficient.latex_form(),
                        t.propagators.iter().map(PropagatorToken::latex).join("")
                    )
                })
                .collect()
        };
        let mut body = String::new();
        for (i, summand) in summands.iter().enumerate() {
            if i == 0 {
                body.push_str(summand);
            } else if let Some(rest) = summand.strip_prefix('-') {
                body.push_str("\n- ");
                body.push_str(rest);
            } else {
                body.push_str("\n+ ");
                body.push_str(summand);
            }
        }
        format!("\\[\n\\langle 0|{fields}|0\\rangle =\n{body}\n\\]\n")
    }

    /// JSON rendering; schema:
    /// `{"N", "kind", "pattern", "terms": [{"chords", "crossings", "coeffs",
    /// "propagators"}]}` with coefficients as decimal strings, ascending.
    pub fn to_json(&self) -> Value {
        self.to_json_with(&RenderOptions::default())
    }

    fn to_json_with(&self, options: &RenderOptions) -> Value {
        let kind = if self.pattern.is_charged() {
            "parafermi"
        } else {
            "parabose"
        };
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| {
                let mut term = json!({
                    "chords": t.diagram.chords().iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
                    "crossings": t.diagram.crossing_count(),
                    "coeffs": t.coefficient.to_json()["coeffs"],
                    "propagators": t.propagators.iter().map(|q| q.to_json()).collect::<Vec<_>>(),
                });
                if let Some(p) = options.evaluate_at {
                    term["value"] = json!(t.coefficient.eval_int(p).to_string());
                }
                term
            })
            .collect();
        let mut out = json!({
            "N": self.num_fields(),
            "kind": kind,
            "pattern": self.pattern.kinds().iter().map(|k| k.json_str()).collect::<Vec<_>>(),
            "terms": terms,
        });
        if let Some(p) = options.evaluate_at {
            out["p"] = json!(p);
        }
        out
    }

    /// Terms bucketed by equal coefficient, in order of first appearance.
    fn coefficient_groups(&self) -> Vec<(&PPolynomial, Vec<&ExpansionTerm>)> {
        let mut groups: Vec<(&PPolynomial, Vec<&ExpansionTerm>)> = Vec::new();
        for term in &self.terms {
            match groups.iter_mut().find(|(c, _)| *c == &term.coefficient) {
                Some((_, bucket)) => bucket.push(term),
                None => groups.push((&term.coefficient, vec![term])),
            }
        }
        groups
    }
}

fn text_coeff(poly: &PPolynomial) -> String {
    if poly.term_count() > 1 {
        format!("({poly})")
    } else {
        poly.to_string()
    }
}
