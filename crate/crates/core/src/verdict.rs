use std::fmt;

use serde::Serialize;

/// A witnessed boolean decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

/// Evidence attached to a verdict. Element indices refer to the canonical
/// carrier of the ring or module the verdict is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Witness {
    Element(usize),
    ElementPair(usize, usize),
    Elements(Vec<usize>),
    Submodule(Vec<usize>),
    SubmodulePair(Vec<usize>, Vec<usize>),
    Idempotents(Vec<usize>),
    /// A map given by its value table.
    Map(Vec<usize>),
    /// A splitting `M -> R^k`; entry `x` is the coordinate tuple of the image of `x`.
    Splitting(Vec<Vec<usize>>),
    Integer(u64),
    IntegerPair(u64, u64),
}

/// Which characterization produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    /// The definition, checked over the full submodule lattice.
    Definitional,
    /// Annihilator sums over zero-intersecting pairs.
    Annihilator,
    /// Scan over idempotents.
    Idempotent,
    /// Scan over all elements of a carrier.
    ElementScan,
    /// Enumeration of all endomorphisms.
    Endomorphism,
    /// Search for a splitting of a free presentation.
    SplittingSearch,
    /// Verification of an explicitly constructed map.
    ExplicitMap,
    /// Ideal arithmetic in the integers (gcd/lcm).
    IntegerArithmetic,
}

impl Verdict {
    pub fn yes(method: Method) -> Self {
        Self {
            value: true,
            witness: None,
            method,
        }
    }

    pub fn no(method: Method) -> Self {
        Self {
            value: false,
            witness: None,
            method,
        }
    }

    pub fn with(value: bool, witness: Witness, method: Method) -> Self {
        Self {
            value,
            witness: Some(witness),
            method,
        }
    }

    pub fn holds(&self) -> bool {
        self.value
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{:?}]", self.value, self.method)?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(x) => write!(f, "element {x}"),
            Witness::ElementPair(a, b) => write!(f, "elements ({a}, {b})"),
            Witness::Elements(v) => write!(f, "elements {v:?}"),
            Witness::Submodule(v) => write!(f, "submodule {v:?}"),
            Witness::SubmodulePair(a, b) => write!(f, "submodules {a:?} and {b:?}"),
            Witness::Idempotents(v) => write!(f, "idempotents {v:?}"),
            Witness::Map(v) => write!(f, "map {v:?}"),
            Witness::Splitting(v) => write!(f, "splitting {v:?}"),
            Witness::Integer(n) => write!(f, "integer {n}"),
            Witness::IntegerPair(a, b) => write!(f, "integers ({a}, {b})"),
        }
    }
}
