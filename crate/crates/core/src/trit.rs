//! The three truth values of McCarthy's sequential three-valued logic and
//! their scalar connectives.
//!
//! Evaluation is left-to-right and short-circuiting, mimicking how most
//! programming languages evaluate boolean expressions. The third value `U`
//! stands for an undefined (non-terminating) test, so once the left operand
//! of a connective is `U` the whole expression is `U`. As a consequence
//! neither `and` nor `or` is commutative: `T.or(U) = T` but `U.or(T) = U`.

use std::fmt;
use std::ops;

/// A single truth value of the three-element algebra.
///
/// The declaration order `T < F < U` fixes the canonical sort order used for
/// universes, reports and file output. It is unrelated to the natural partial
/// order of an algebra (see [`crate::order::leq`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trit {
    T,
    F,
    U,
}

impl Trit {
    /// All three values in canonical order.
    pub const ALL: [Trit; 3] = [Trit::T, Trit::F, Trit::U];

    /// Negation: swaps `T` and `F`; `U` is the unique fixed point.
    #[inline]
    pub const fn not(self) -> Trit {
        match self {
            Trit::T => Trit::F,
            Trit::F => Trit::T,
            Trit::U => Trit::U,
        }
    }

    /// Left-sequential conjunction: `T` is the left identity, while `F` and
    /// `U` are left-zeros.
    #[inline]
    pub const fn and(self, rhs: Trit) -> Trit {
        match self {
            Trit::T => rhs,
            Trit::F => Trit::F,
            Trit::U => Trit::U,
        }
    }

    /// Left-sequential disjunction: `F` is the left identity, while `T` and
    /// `U` are left-zeros.
    #[inline]
    pub const fn or(self, rhs: Trit) -> Trit {
        match self {
            Trit::T => Trit::T,
            Trit::F => rhs,
            Trit::U => Trit::U,
        }
    }

    /// The halting test `down`: `T -> T`, `F -> F`, `U -> F`.
    #[inline]
    pub const fn down(self) -> Trit {
        match self {
            Trit::T => Trit::T,
            Trit::F | Trit::U => Trit::F,
        }
    }

    /// Canonical one-character spelling, as used in element literals.
    #[inline]
    pub const fn to_char(self) -> char {
        match self {
            Trit::T => 'T',
            Trit::F => 'F',
            Trit::U => 'U',
        }
    }

    /// Inverse of [`Trit::to_char`].
    #[inline]
    pub const fn from_char(c: char) -> Option<Trit> {
        match c {
            'T' => Some(Trit::T),
            'F' => Some(Trit::F),
            'U' => Some(Trit::U),
            _ => None,
        }
    }
}

impl ops::Not for Trit {
    type Output = Trit;
    fn not(self) -> Trit {
        Trit::not(self)
    }
}

impl ops::BitAnd for Trit {
    type Output = Trit;
    fn bitand(self, rhs: Trit) -> Trit {
        self.and(rhs)
    }
}

impl ops::BitOr for Trit {
    type Output = Trit;
    fn bitor(self, rhs: Trit) -> Trit {
        self.or(rhs)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}
