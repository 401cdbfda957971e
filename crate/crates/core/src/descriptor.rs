//! Construction recipes for rings and modules.
//!
//! Every ring and module built by this crate remembers the descriptor that
//! produced it (its pedigree). Descriptors print in the same text grammar the
//! parser in [`crate::cli::parse`] accepts, and printing then re-parsing yields
//! an identical tree.

use std::fmt;

use serde::{Deserialize, Serialize};

/// An element literal: a canonical index, or a tuple matching the structure of
/// the carrier (product components, trivial-extension pairs, polynomial
/// coefficients, direct-sum coordinates).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ElemLit {
    Int(u64),
    Tuple(Vec<ElemLit>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingDescriptor {
    /// Integers modulo `n`.
    ZmodN(u64),
    /// Direct product, elements ordered lexicographically.
    Product(Vec<RingDescriptor>),
    /// `F_p[x]/(f)` with `f` monic, coefficients listed from the constant term up.
    PolyQuot { p: u64, coeffs: Vec<u64> },
    /// Quotient of `base` by the ideal generated by `generators`.
    Quotient {
        base: Box<RingDescriptor>,
        generators: Vec<ElemLit>,
    },
    /// Trivial extension `base ⋉ module`.
    TrivExt {
        base: Box<RingDescriptor>,
        module: Box<ModuleDescriptor>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleDescriptor {
    Regular(RingDescriptor),
    /// `R/I` with `I` generated by `generators`.
    Cyclic {
        ring: RingDescriptor,
        generators: Vec<ElemLit>,
    },
    DirectSum(Vec<ModuleDescriptor>),
    Sub {
        module: Box<ModuleDescriptor>,
        generators: Vec<ElemLit>,
    },
    QuotientMod {
        module: Box<ModuleDescriptor>,
        generators: Vec<ElemLit>,
    },
    /// A finite abelian group given by cyclic orders, realized over `Z/exponent`.
    ZAbelian(Vec<u64>),
    /// `module` regarded as a module over `R/I`, where `I` (generated by
    /// `generators`) must annihilate it.
    OverQuotient {
        module: Box<ModuleDescriptor>,
        generators: Vec<ElemLit>,
    },
    /// `M1 × M2` over the product ring `R1 × R2`, acting componentwise.
    ProductMod(Box<ModuleDescriptor>, Box<ModuleDescriptor>),
}

/// Either kind of descriptor, as produced by the parser.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Ring(RingDescriptor),
    Module(ModuleDescriptor),
}

impl RingDescriptor {
    pub fn zmod(n: u64) -> Self {
        RingDescriptor::ZmodN(n)
    }

    pub fn product(parts: impl IntoIterator<Item = RingDescriptor>) -> Self {
        RingDescriptor::Product(parts.into_iter().collect())
    }

    pub fn quotient(base: RingDescriptor, generators: Vec<ElemLit>) -> Self {
        RingDescriptor::Quotient {
            base: Box::new(base),
            generators,
        }
    }

    pub fn trivext(base: RingDescriptor, module: ModuleDescriptor) -> Self {
        RingDescriptor::TrivExt {
            base: Box::new(base),
            module: Box::new(module),
        }
    }
}

impl ModuleDescriptor {
    pub fn cyclic(ring: RingDescriptor, generators: Vec<ElemLit>) -> Self {
        ModuleDescriptor::Cyclic { ring, generators }
    }

    pub fn sub(module: ModuleDescriptor, generators: Vec<ElemLit>) -> Self {
        ModuleDescriptor::Sub {
            module: Box::new(module),
            generators,
        }
    }

    pub fn quotmod(module: ModuleDescriptor, generators: Vec<ElemLit>) -> Self {
        ModuleDescriptor::QuotientMod {
            module: Box::new(module),
            generators,
        }
    }

    pub fn overquot(module: ModuleDescriptor, generators: Vec<ElemLit>) -> Self {
        ModuleDescriptor::OverQuotient {
            module: Box::new(module),
            generators,
        }
    }
}

impl From<u64> for ElemLit {
    fn from(v: u64) -> Self {
        ElemLit::Int(v)
    }
}

impl fmt::Display for ElemLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLit::Int(v) => write!(f, "{v}"),
            ElemLit::Tuple(parts) => {
                f.write_str("(")?;
                write_joined(f, parts)?;
                f.write_str(")")
            }
        }
    }
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("[")?;
    write_joined(f, items)?;
    f.write_str("]")
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::ZmodN(n) => write!(f, "zmod {n}"),
            RingDescriptor::Product(parts) => {
                f.write_str("product(")?;
                write_joined(f, parts)?;
                f.write_str(")")
            }
            RingDescriptor::PolyQuot { p, coeffs } => {
                write!(f, "polyquot({p}, ")?;
                write_list(f, coeffs)?;
                f.write_str(")")
            }
            RingDescriptor::Quotient { base, generators } => {
                write!(f, "quot({base}, ")?;
                write_list(f, generators)?;
                f.write_str(")")
            }
            RingDescriptor::TrivExt { base, module } => write!(f, "trivext({base}, {module})"),
        }
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleDescriptor::Regular(r) => write!(f, "regular({r})"),
            ModuleDescriptor::Cyclic { ring, generators } => {
                write!(f, "cyclic({ring}, ")?;
                write_list(f, generators)?;
                f.write_str(")")
            }
            ModuleDescriptor::DirectSum(parts) => {
                f.write_str("dsum(")?;
                write_joined(f, parts)?;
                f.write_str(")")
            }
            ModuleDescriptor::Sub { module, generators } => {
                write!(f, "sub({module}, ")?;
                write_list(f, generators)?;
                f.write_str(")")
            }
            ModuleDescriptor::QuotientMod { module, generators } => {
                write!(f, "quotmod({module}, ")?;
                write_list(f, generators)?;
                f.write_str(")")
            }
            ModuleDescriptor::ZAbelian(orders) => {
                f.write_str("zabelian(")?;
                write_list(f, orders)?;
                f.write_str(")")
            }
            ModuleDescriptor::OverQuotient { module, generators } => {
                write!(f, "overquot({module}, ")?;
                write_list(f, generators)?;
                f.write_str(")")
            }
            ModuleDescriptor::ProductMod(a, b) => write!(f, "prodmod({a}, {b})"),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Ring(r) => r.fmt(f),
            Descriptor::Module(m) => m.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let r = RingDescriptor::product([RingDescriptor::zmod(2), RingDescriptor::zmod(3)]);
        assert_eq!(r.to_string(), "product(zmod 2, zmod 3)");
        let m = ModuleDescriptor::DirectSum(vec![
            ModuleDescriptor::cyclic(RingDescriptor::zmod(2), vec![ElemLit::Int(0)]),
            ModuleDescriptor::cyclic(RingDescriptor::zmod(2), vec![]),
        ]);
        assert_eq!(
            m.to_string(),
            "dsum(cyclic(zmod 2, [0]), cyclic(zmod 2, []))"
        );
        let lit = ElemLit::Tuple(vec![ElemLit::Int(1), ElemLit::Int(0)]);
        assert_eq!(lit.to_string(), "(1, 0)");
    }
}
