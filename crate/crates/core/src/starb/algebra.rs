use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_ATOMS: usize = 4;
pub const MAX_EXCEPTIONS: usize = 16;

const ATOM_NAMES: [&str; MAX_ATOMS] = ["p", "q", "r", "s"];

/// The powerset algebra on `atoms` atoms, elements encoded as bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Algebra {
    atoms: usize,
}

impl Algebra {
    pub fn new(atoms: usize) -> Result<Algebra> {
        if (1..=MAX_ATOMS).contains(&atoms) {
            Ok(Algebra { atoms })
        } else {
            Err(Error::AtomCount(atoms))
        }
    }

    pub fn atoms(self) -> usize {
        self.atoms
    }

    pub fn top(self) -> u32 {
        (1 << self.atoms) - 1
    }

    pub fn size(self) -> usize {
        1 << self.atoms
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..=self.top()
    }

    /// The `i`-th atom, `p` being atom 0.
    pub fn atom(self, i: usize) -> Result<u32> {
        if i < self.atoms {
            Ok(1 << i)
        } else {
            Err(Error::ElementOutOfRange {
                element: 1u32.checked_shl(i as u32).unwrap_or(0),
                atoms: self.atoms,
            })
        }
    }

    pub fn check(self, m: u32) -> Result<u32> {
        if m <= self.top() {
            Ok(m)
        } else {
            Err(Error::ElementOutOfRange {
                element: m,
                atoms: self.atoms,
            })
        }
    }

    pub fn meet(self, x: u32, y: u32) -> u32 {
        x & y
    }

    pub fn join(self, x: u32, y: u32) -> u32 {
        x | y
    }

    pub fn comp(self, x: u32) -> u32 {
        !x & self.top()
    }

    pub fn leq(self, x: u32, y: u32) -> bool {
        x & !y == 0
    }

    /// `0`, `1`, or the join of the atoms below `m`, e.g. `p∨r`.
    pub fn format(self, m: u32) -> String {
        if m == 0 {
            return "0".into();
        }
        if m == self.top() {
            return "1".into();
        }
        (0..self.atoms)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| ATOM_NAMES[i])
            .collect::<Vec<_>>()
            .join("∨")
    }

    /// Every element of the extension, ordered by `(f0, f1)`.
    pub fn ultra_elements(self) -> impl Iterator<Item = UltraElement> {
        self.elements().flat_map(move |f0| {
            self.elements().map(move |f1| UltraElement {
                algebra: self,
                f0,
                f1,
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order {
    /// Componentwise inclusion of Shannon pairs.
    Pointwise,
    /// Standard elements ordered as in the base algebra, the bottom below
    /// everything, and every nonstandard element below every nonzero
    /// standard one. Two nonstandard elements are compared pointwise.
    PaperFiat,
}

/// The class of the one-variable function `a ↦ (a ∧ f1) ∨ (¬a ∧ f0)`
/// modulo cofinite agreement. Two such classes coincide exactly when their
/// Shannon pairs do, so the pair is the representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UltraElement {
    algebra: Algebra,
    f0: u32,
    f1: u32,
}

impl UltraElement {
    pub fn new(algebra: Algebra, f0: u32, f1: u32) -> Result<UltraElement> {
        Ok(UltraElement {
            algebra,
            f0: algebra.check(f0)?,
            f1: algebra.check(f1)?,
        })
    }

    /// The class of the constant function `m`.
    pub fn standard(algebra: Algebra, m: u32) -> Result<UltraElement> {
        UltraElement::new(algebra, m, m)
    }

    pub fn bottom(algebra: Algebra) -> UltraElement {
        UltraElement {
            algebra,
            f0: 0,
            f1: 0,
        }
    }

    pub fn top(algebra: Algebra) -> UltraElement {
        let t = algebra.top();
        UltraElement {
            algebra,
            f0: t,
            f1: t,
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn pair(&self) -> (u32, u32) {
        (self.f0, self.f1)
    }

    pub fn is_standard(&self) -> bool {
        self.f0 == self.f1
    }

    pub fn is_bottom(&self) -> bool {
        self.f0 == 0 && self.f1 == 0
    }

    pub fn is_top(&self) -> bool {
        let t = self.algebra.top();
        self.f0 == t && self.f1 == t
    }

    /// The value of the representing function at `a`.
    pub fn apply(&self, a: u32) -> u32 {
        let alg = self.algebra;
        alg.join(alg.meet(a, self.f1), alg.meet(alg.comp(a), self.f0))
    }

    /// `[f¬]`, the class of `a ↦ f(¬a)`.
    pub fn fneg(&self) -> UltraElement {
        UltraElement {
            f0: self.f1,
            f1: self.f0,
            ..*self
        }
    }

    pub fn neg(&self) -> UltraElement {
        UltraElement {
            f0: self.algebra.comp(self.f0),
            f1: self.algebra.comp(self.f1),
            ..*self
        }
    }

    fn same_algebra(&self, other: &UltraElement) -> Result<Algebra> {
        if self.algebra == other.algebra {
            Ok(self.algebra)
        } else {
            Err(Error::AlgebraMismatch(self.algebra.atoms, other.algebra.atoms))
        }
    }

    pub fn inf(&self, other: &UltraElement) -> Result<UltraElement> {
        let alg = self.same_algebra(other)?;
        Ok(UltraElement {
            algebra: alg,
            f0: alg.meet(self.f0, other.f0),
            f1: alg.meet(self.f1, other.f1),
        })
    }

    pub fn sup(&self, other: &UltraElement) -> Result<UltraElement> {
        let alg = self.same_algebra(other)?;
        Ok(UltraElement {
            algebra: alg,
            f0: alg.join(self.f0, other.f0),
            f1: alg.join(self.f1, other.f1),
        })
    }

    pub fn leq(&self, other: &UltraElement, order: Order) -> Result<bool> {
        let alg = self.same_algebra(other)?;
        let pointwise = alg.leq(self.f0, other.f0) && alg.leq(self.f1, other.f1);
        Ok(match order {
            Order::Pointwise => pointwise,
            Order::PaperFiat => match (self.is_standard(), other.is_standard()) {
                _ if self.is_bottom() => true,
                (true, true) => pointwise,
                (false, true) => !other.is_bottom(),
                (true, false) => false,
                (false, false) => pointwise,
            },
        })
    }

    /// `leq` in pointwise order, for elements known to share an algebra.
    pub(crate) fn le(&self, other: &UltraElement) -> bool {
        self.leq(other, Order::Pointwise).expect("same algebra")
    }
}

impl fmt::Display for UltraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alg = self.algebra;
        if self.is_standard() {
            write!(f, "*{}", alg.format(self.f0))
        } else {
            write!(f, "⟨{}, {}⟩", alg.format(self.f0), alg.format(self.f1))
        }
    }
}

impl Serialize for UltraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A concrete representative: a Shannon-form function altered at finitely
/// many indices of the (infinite) index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFunction {
    algebra: Algebra,
    pair: (u32, u32),
    exceptions: Vec<(u64, u32)>,
}

impl RawFunction {
    pub fn new(algebra: Algebra, pair: (u32, u32), exceptions: Vec<(u64, u32)>) -> Result<Self> {
        if exceptions.len() > MAX_EXCEPTIONS {
            return Err(Error::TooManyExceptions(exceptions.len()));
        }
        algebra.check(pair.0)?;
        algebra.check(pair.1)?;
        for (_, v) in &exceptions {
            algebra.check(*v)?;
        }
        Ok(RawFunction {
            algebra,
            pair,
            exceptions,
        })
    }

    pub fn exceptions(&self) -> &[(u64, u32)] {
        &self.exceptions
    }

    /// The value at index `i`. Index `i` stands for the argument
    /// `i mod |B|`, so every argument recurs infinitely often.
    pub fn value_at(&self, i: u64) -> u32 {
        if let Some((_, v)) = self.exceptions.iter().rev().find(|(j, _)| *j == i) {
            return *v;
        }
        let a = (i % self.algebra.size() as u64) as u32;
        let alg = self.algebra;
        alg.join(alg.meet(a, self.pair.1), alg.meet(alg.comp(a), self.pair.0))
    }
}

/// Finitely many exceptions form a null set, so they are dropped.
pub fn quotient(raw: &RawFunction) -> UltraElement {
    UltraElement {
        algebra: raw.algebra,
        f0: raw.pair.0,
        f1: raw.pair.1,
    }
}
