use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Kill, ModuleVector, WeylElement, WeylMonomial, POSITIONS, POSITION_NAMES};
use crate::exact::Coeff;

/// How each position is printed: `x`/`dx` or, after a Fourier transform at
/// that position, `xi_x`/`dxi_x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Presentation {
    pub dual: [bool; 3],
}

impl Presentation {
    pub const STANDARD: Presentation = Presentation { dual: [false; 3] };

    pub fn coordinate_name(&self, pos: usize) -> String {
        if self.dual[pos] {
            format!("xi_{}", POSITION_NAMES[pos])
        } else {
            POSITION_NAMES[pos].to_string()
        }
    }

    pub fn derivative_name(&self, pos: usize) -> String {
        format!("d{}", self.coordinate_name(pos))
    }

    fn monomial(&self, m: &WeylMonomial) -> String {
        let mut parts = Vec::new();
        for i in POSITIONS {
            push_power(&mut parts, self.coordinate_name(i), m.coord[i]);
        }
        for i in POSITIONS {
            push_power(&mut parts, self.derivative_name(i), m.deriv[i]);
        }
        parts.join("*")
    }
}

fn push_power(parts: &mut Vec<String>, name: String, e: u32) {
    match e {
        0 => {}
        1 => parts.push(name),
        _ => parts.push(format!("{name}^{e}")),
    }
}

/// Joins `(coefficient, monomial-text)` pairs into `a*m1 - b*m2 + ...`;
/// the input is expected in printing order.
fn join_terms<'a, C: Coeff + 'a>(terms: impl Iterator<Item = (&'a C, String)>) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = if neg { c.neg_ref() } else { c.clone() };
        let coeff = abs.to_string();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let is_one = abs == C::one();
        if mono.is_empty() {
            if abs.is_atomic() || (!neg) {
                out.push_str(&coeff);
            } else {
                out.push_str(&format!("({coeff})"));
            }
        } else if is_one {
            out.push_str(&mono);
        } else if abs.is_atomic() {
            out.push_str(&format!("{coeff}*{mono}"));
        } else {
            out.push_str(&format!("({coeff})*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Coeff> WeylElement<C> {
    /// Text in the given presentation, highest graded-lex term first.
    pub fn render(&self, p: &Presentation) -> String {
        join_terms(self.terms().rev().map(|(m, c)| (c, p.monomial(m))))
    }
}

impl<C: Coeff> ModuleVector<C> {
    pub fn render(&self, p: &Presentation) -> String {
        let sig = self.signature;
        join_terms(self.terms().rev().map(|(m, c)| {
            let mut parts = Vec::new();
            // coordinates print before derivatives, matching normal order
            for i in POSITIONS {
                if sig.kills[i] == Kill::Derivative {
                    push_power(&mut parts, p.coordinate_name(i), m.0[i]);
                }
            }
            for i in POSITIONS {
                if sig.kills[i] == Kill::Coordinate {
                    push_power(&mut parts, p.derivative_name(i), m.0[i]);
                }
            }
            (c, parts.join("*"))
        }))
    }
}

/// Display adapter carrying a presentation.
pub struct Rendered<'a, T> {
    pub value: &'a T,
    pub presentation: Presentation,
}

impl<C: Coeff> fmt::Display for Rendered<'_, WeylElement<C>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value.render(&self.presentation))
    }
}

impl<C: Coeff> fmt::Display for Rendered<'_, ModuleVector<C>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value.render(&self.presentation))
    }
}

impl<C: Coeff> fmt::Display for WeylElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Presentation::STANDARD))
    }
}

impl<C: Coeff> fmt::Display for ModuleVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Presentation::STANDARD))
    }
}
