//! Published reference values for the extremal constants and the case
//! table.
//!
//! Values are kept as the decimal strings they were published as; the
//! comparison tolerance is one unit in the last stated place, floored at
//! `1e-5`.

use super::cases::{CaseSolution, CaseSpec, CaseStatus};
use super::ExtremalConstants;

pub const TOLERANCE_FLOOR: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `|computed - value| <= tolerance`.
    Approx,
    /// `computed >= value - tolerance`.
    AtLeast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Theta,
    Rho,
    SecondRoot,
    TailRoot,
    /// The case unknown: `x` for `s = 1`, `alpha1` otherwise.
    Unknown(CaseSpec),
    Value(CaseSpec),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reference {
    pub quantity: Quantity,
    /// Published decimal, or `None` when the value is symbolic.
    pub text: Option<&'static str>,
    /// Exact value for symbolic entries.
    pub exact: Option<f64>,
    pub comparison: Comparison,
}

const fn approx(quantity: Quantity, text: &'static str) -> Reference {
    Reference { quantity, text: Some(text), exact: None, comparison: Comparison::Approx }
}

const B12: CaseSpec = CaseSpec::Boundary { s: 1, t: 2 };
const B13: CaseSpec = CaseSpec::Boundary { s: 1, t: 3 };
const B21: CaseSpec = CaseSpec::Boundary { s: 2, t: 1 };
const B22: CaseSpec = CaseSpec::Boundary { s: 2, t: 2 };
const TAIL1: CaseSpec = CaseSpec::TailBound { s: 1, t_from: 4 };
const TAIL2: CaseSpec = CaseSpec::TailBound { s: 2, t_from: 3 };

pub const REFERENCES: &[Reference] = &[
    approx(Quantity::Theta, "0.427373"),
    approx(Quantity::Rho, "0.159181"),
    approx(Quantity::SecondRoot, "0.234643"),
    approx(Quantity::TailRoot, "0.115749"),
    approx(Quantity::Unknown(CaseSpec::InteriorR1), "0.652704"),
    approx(Quantity::Value(CaseSpec::InteriorR1), "0.278"),
    approx(Quantity::Unknown(CaseSpec::InteriorR2), "0.442125"),
    approx(Quantity::Value(CaseSpec::InteriorR2), "0.172848"),
    approx(Quantity::Unknown(B12), "0.469285"),
    approx(Quantity::Value(B12), "0.1753"),
    approx(Quantity::Unknown(B13), "0.409632"),
    approx(Quantity::Value(B13), "0.2134"),
    approx(Quantity::Unknown(B22), "0.436338"),
    Reference {
        quantity: Quantity::Value(B22),
        text: None,
        exact: Some(1.0 / 6.0),
        comparison: Comparison::Approx,
    },
    approx(Quantity::Unknown(B21), "0.427373"),
    approx(Quantity::Value(B21), "0.159181"),
    Reference {
        quantity: Quantity::Value(TAIL1),
        text: Some("0.175925"),
        exact: None,
        comparison: Comparison::AtLeast,
    },
    Reference {
        quantity: Quantity::Value(TAIL2),
        text: Some("0.159450"),
        exact: None,
        comparison: Comparison::AtLeast,
    },
];

/// Number of digits after the decimal point in `text`.
pub fn decimals(text: &str) -> u32 {
    text.split_once('.').map_or(0, |(_, f)| f.len() as u32)
}

impl Reference {
    pub fn value(&self) -> f64 {
        match (self.text, self.exact) {
            (_, Some(x)) => x,
            (Some(t), None) => t.parse().expect("reference literals parse"),
            (None, None) => unreachable!("reference without a value"),
        }
    }

    pub fn tolerance(&self) -> f64 {
        match self.text {
            Some(t) if self.exact.is_none() => TOLERANCE_FLOOR.max(10f64.powi(-(decimals(t) as i32))),
            _ => TOLERANCE_FLOOR,
        }
    }

    pub fn accepts(&self, computed: f64) -> bool {
        let v = self.value();
        match self.comparison {
            Comparison::Approx => (computed - v).abs() <= self.tolerance(),
            Comparison::AtLeast => computed >= v - self.tolerance(),
        }
    }

    pub fn label(&self) -> String {
        match self.quantity {
            Quantity::Theta => "theta".into(),
            Quantity::Rho => "rho".into(),
            Quantity::SecondRoot => "second root".into(),
            Quantity::TailRoot => "x0".into(),
            Quantity::Unknown(c) => format!("{c} unknown"),
            Quantity::Value(c) => format!("{c} value"),
        }
    }

    pub fn display_value(&self) -> String {
        let sym = match self.comparison {
            Comparison::Approx => "",
            Comparison::AtLeast => ">= ",
        };
        match (self.text, self.exact) {
            (Some(t), _) => format!("{sym}{t}"),
            _ => format!("{sym}{:.6}", self.value()),
        }
    }
}

/// One reference checked against a computed value.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceCheck {
    pub reference: Reference,
    pub computed: Option<f64>,
    pub ok: bool,
}

/// The computed counterpart of `q`, if the inputs provide it.
pub fn lookup(q: Quantity, constants: &ExtremalConstants, tail_root: Option<f64>, rows: &[CaseSolution]) -> Option<f64> {
    let row = |c: CaseSpec| rows.iter().find(|r| r.case == c);
    match q {
        Quantity::Theta => Some(constants.theta),
        Quantity::Rho => Some(constants.rho),
        Quantity::SecondRoot => Some(constants.second_root),
        Quantity::TailRoot => tail_root,
        Quantity::Unknown(c) => row(c)?.reported_unknown().map(|(_, u)| u),
        Quantity::Value(c) => {
            let r = row(c)?;
            matches!(r.status, CaseStatus::Solved | CaseStatus::LowerBound)
                .then_some(r.value)
                .flatten()
        }
    }
}

pub fn check_all(constants: &ExtremalConstants, rows: &[CaseSolution]) -> Vec<ReferenceCheck> {
    let tail_root = rows
        .iter()
        .find(|r| r.case == TAIL2)
        .and_then(|r| r.x);
    REFERENCES
        .iter()
        .map(|&reference| {
            let computed = lookup(reference.quantity, constants, tail_root, rows);
            ReferenceCheck { reference, computed, ok: computed.is_some_and(|c| reference.accepts(c)) }
        })
        .collect()
}
