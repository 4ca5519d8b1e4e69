use std::fmt;

use thiserror::Error;

use crate::table::Element;

/// A malformed table: wrong shape or an entry outside `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("table has no elements")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("flat table of order {order} has {len} entries")]
    WrongLength { order: usize, len: usize },
    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: Element,
        order: usize,
    },
}

/// The axioms checked by validation, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `x·x = 0`
    Bck3,
    /// `0·x = 0`
    Bck4,
    /// `x·0 = x`
    RightZero,
    /// `x·y = 0` and `y·x = 0` imply `x = y`
    Bck5,
    /// `(x·(x·y))·y = 0`
    Bck2,
    /// `((x·y)·(x·z))·(z·y) = 0`
    Bck1,
}

impl Axiom {
    pub const CHECK_ORDER: [Axiom; 6] = [
        Axiom::Bck3,
        Axiom::Bck4,
        Axiom::RightZero,
        Axiom::Bck5,
        Axiom::Bck2,
        Axiom::Bck1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Bck1 => "BCK1",
            Axiom::Bck2 => "BCK2",
            Axiom::Bck3 => "BCK3",
            Axiom::Bck4 => "BCK4",
            Axiom::Bck5 => "BCK5",
            Axiom::RightZero => "x*0=x",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::Bck1 => "((x*y)*(x*z))*(z*y) = 0",
            Axiom::Bck2 => "(x*(x*y))*y = 0",
            Axiom::Bck3 => "x*x = 0",
            Axiom::Bck4 => "0*x = 0",
            Axiom::Bck5 => "x*y = 0 and y*x = 0 imply x = y",
            Axiom::RightZero => "x*0 = x",
        }
    }

    /// Names of the universally quantified variables, matching the witness layout.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Axiom::Bck1 => &["x", "y", "z"],
            Axiom::Bck2 | Axiom::Bck5 => &["x", "y"],
            Axiom::Bck3 | Axiom::Bck4 | Axiom::RightZero => &["x"],
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first failing axiom instance, with the lexicographically least witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<Element>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {} ({}) fails at ", self.axiom, self.axiom.statement())?;
        for (i, (name, value)) in self.axiom.variables().iter().zip(&self.witness).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("malformed table: {0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Axiom(#[from] AxiomViolation),
}
