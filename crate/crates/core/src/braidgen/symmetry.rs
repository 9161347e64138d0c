use std::fmt;

use serde::{Deserialize, Serialize};

/// Symmetry of `K(N,p,q)` forced by parity alone. Every simple minimal
/// knot is at least reversible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum SymmetryClass {
    Reversible,
    /// `p+q` odd: strongly positive amphicheiral, hence fully amphicheiral.
    StronglyFullyAmphicheiral,
    /// Reversible, with a period-two symmetry whose axis links the knot `linking` times.
    PeriodicOrderTwo { linking: u32 },
}

pub fn symmetry_class(n: u32, p: u32, q: u32) -> SymmetryClass {
    let (n_even, p_even, q_even) = (n.is_multiple_of(2), p.is_multiple_of(2), q.is_multiple_of(2));
    if p_even != q_even {
        SymmetryClass::StronglyFullyAmphicheiral
    } else if n_even || (p_even && q_even) {
        SymmetryClass::PeriodicOrderTwo { linking: n }
    } else {
        SymmetryClass::Reversible
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryClass::Reversible => f.write_str("reversible"),
            SymmetryClass::StronglyFullyAmphicheiral => f.write_str("strongly fully amphicheiral"),
            SymmetryClass::PeriodicOrderTwo { linking } => {
                write!(f, "reversible, period 2 (axis linking number {linking})")
            }
        }
    }
}
