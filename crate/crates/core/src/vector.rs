//! Elements of the direct power `3^X` for a finite index set `X`, packed two
//! bits per coordinate into a pair of 64-bit planes.
//!
//! An element is the same thing as a pair of disjoint subsets
//! `(A, B) = (α⁻¹(T), α⁻¹(F))` of `X`: plane `t_bits` holds `A`, plane
//! `f_bits` holds `B`, and a coordinate lying in neither is `U`. On this
//! encoding the pointwise connectives reduce to word-parallel bit operations
//! implementing the set formulas
//!
//! ```text
//! not (A, B)        = (B, A)
//! (A, B) and (C, D) = (A ∩ C, B ∪ (A ∩ D))
//! (A, B) or  (C, D) = (A ∪ (B ∩ C), B ∩ D)
//! ```
//!
//! [`SetPair`] carries the same formulas spelled out on explicit index sets;
//! the two routes (and a third, coordinate-by-coordinate application of the
//! scalar tables) are cross-checked in the test suite.

use std::collections::BTreeSet;
use std::fmt;
use std::ops;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::trit::Trit;

/// Largest supported index set. Every computation in this crate is desk
/// scale, so a single machine word per plane is plenty.
pub const MAX_WIDTH: u8 = 64;

/// One element of `3^X` with `X = {0, …, width−1}`, immutable and `Copy`.
///
/// The canonical text form is a string over `{T, F, U}` with coordinate 0
/// leftmost, e.g. `TUF`. `Ord` is the lexicographic order on that string
/// under the coding `T < F < U`; it is a plain sort key for deterministic
/// output and has nothing to do with the algebra's natural order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TritVec {
    width: u8,
    t_bits: u64,
    f_bits: u64,
}

fn check_width(width: usize) -> Result<u8> {
    if width == 0 || width > MAX_WIDTH as usize {
        return Err(Error::WidthOutOfRange(width));
    }
    Ok(width as u8)
}

fn mask_for(width: u8) -> u64 {
    if width as usize == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl TritVec {
    /// Builds an element from raw bit planes, validating disjointness and
    /// range.
    pub fn from_masks(width: usize, t_bits: u64, f_bits: u64) -> Result<Self> {
        let width = check_width(width)?;
        let mask = mask_for(width);
        if t_bits & !mask != 0 || f_bits & !mask != 0 {
            let coordinate = (((t_bits | f_bits) & !mask).trailing_zeros()) as usize;
            return Err(Error::CoordinateOutOfRange { coordinate, width });
        }
        if t_bits & f_bits != 0 {
            let coordinate = (t_bits & f_bits).trailing_zeros() as usize;
            return Err(Error::OverlappingPair { coordinate });
        }
        Ok(TritVec {
            width,
            t_bits,
            f_bits,
        })
    }

    pub fn from_trits(trits: &[Trit]) -> Result<Self> {
        let width = check_width(trits.len())?;
        let mut t_bits = 0u64;
        let mut f_bits = 0u64;
        for (i, t) in trits.iter().enumerate() {
            match t {
                Trit::T => t_bits |= 1 << i,
                Trit::F => f_bits |= 1 << i,
                Trit::U => {}
            }
        }
        Ok(TritVec {
            width,
            t_bits,
            f_bits,
        })
    }

    pub fn from_fn(width: usize, mut f: impl FnMut(usize) -> Trit) -> Result<Self> {
        let width = check_width(width)?;
        let mut t_bits = 0u64;
        let mut f_bits = 0u64;
        for i in 0..width as usize {
            match f(i) {
                Trit::T => t_bits |= 1 << i,
                Trit::F => f_bits |= 1 << i,
                Trit::U => {}
            }
        }
        Ok(TritVec {
            width,
            t_bits,
            f_bits,
        })
    }

    /// The constant **T** = (X, ∅).
    pub fn truth(width: usize) -> Result<Self> {
        let width = check_width(width)?;
        Ok(TritVec {
            width,
            t_bits: mask_for(width),
            f_bits: 0,
        })
    }

    /// The constant **F** = (∅, X).
    pub fn falsity(width: usize) -> Result<Self> {
        let width = check_width(width)?;
        Ok(TritVec {
            width,
            t_bits: 0,
            f_bits: mask_for(width),
        })
    }

    /// The constant **U** = (∅, ∅).
    pub fn undefined(width: usize) -> Result<Self> {
        let width = check_width(width)?;
        Ok(TritVec {
            width,
            t_bits: 0,
            f_bits: 0,
        })
    }

    /// Parses an element literal such as `TUF` (coordinate 0 leftmost).
    pub fn parse(literal: &str) -> Result<Self> {
        let mut trits = Vec::with_capacity(literal.len());
        for (i, c) in literal.chars().enumerate() {
            match Trit::from_char(c) {
                Some(t) => trits.push(t),
                None => {
                    return Err(Error::BadLiteral {
                        literal: literal.to_string(),
                        reason: format!("unexpected character {c:?} at position {i}"),
                    })
                }
            }
        }
        if trits.is_empty() {
            return Err(Error::BadLiteral {
                literal: literal.to_string(),
                reason: "empty literal".to_string(),
            });
        }
        Self::from_trits(&trits)
    }

    #[inline]
    pub fn width(&self) -> u8 {
        self.width
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        mask_for(self.width)
    }

    /// Coordinates with value `T` (the set `A` of the pair view).
    #[inline]
    pub fn t_mask(&self) -> u64 {
        self.t_bits
    }

    /// Coordinates with value `F` (the set `B` of the pair view).
    #[inline]
    pub fn f_mask(&self) -> u64 {
        self.f_bits
    }

    /// Coordinates with value `U` (the complement `(A ∪ B)ᶜ`).
    #[inline]
    pub fn u_mask(&self) -> u64 {
        self.mask() & !(self.t_bits | self.f_bits)
    }

    #[inline]
    pub fn get(&self, coordinate: usize) -> Trit {
        debug_assert!(coordinate < self.width as usize);
        if self.t_bits >> coordinate & 1 == 1 {
            Trit::T
        } else if self.f_bits >> coordinate & 1 == 1 {
            Trit::F
        } else {
            Trit::U
        }
    }

    pub fn trits(&self) -> impl Iterator<Item = Trit> + '_ {
        (0..self.width as usize).map(|i| self.get(i))
    }

    /// True when no coordinate is `U`, i.e. the element lies in `2^X`.
    #[inline]
    pub fn is_boolean(&self) -> bool {
        self.u_mask() == 0
    }

    fn assert_same_width(&self, rhs: &Self) {
        assert!(
            self.width == rhs.width,
            "width mismatch: {} vs {}",
            self.width,
            rhs.width
        );
    }

    /// Pointwise negation: swaps the two planes.
    #[inline]
    pub fn not(&self) -> Self {
        TritVec {
            width: self.width,
            t_bits: self.f_bits,
            f_bits: self.t_bits,
        }
    }

    /// Pointwise left-sequential conjunction.
    ///
    /// Panics on width mismatch; all user-facing entry points validate
    /// widths before calling in here.
    #[inline]
    pub fn and(&self, rhs: &Self) -> Self {
        self.assert_same_width(rhs);
        TritVec {
            width: self.width,
            t_bits: self.t_bits & rhs.t_bits,
            f_bits: self.f_bits | (self.t_bits & rhs.f_bits),
        }
    }

    /// Pointwise left-sequential disjunction.
    #[inline]
    pub fn or(&self, rhs: &Self) -> Self {
        self.assert_same_width(rhs);
        TritVec {
            width: self.width,
            t_bits: self.t_bits | (self.f_bits & rhs.t_bits),
            f_bits: self.f_bits & rhs.f_bits,
        }
    }

    /// Pointwise halting test: `T` stays, `F` and `U` collapse to `F`.
    #[inline]
    pub fn down(&self) -> Self {
        TritVec {
            width: self.width,
            t_bits: self.t_bits,
            f_bits: self.mask() & !self.t_bits,
        }
    }

    /// The pair-of-sets view `(α⁻¹(T), α⁻¹(F))`.
    pub fn to_pairs(&self) -> SetPair {
        SetPair {
            width: self.width,
            t_set: mask_to_set(self.t_bits),
            f_set: mask_to_set(self.f_bits),
        }
    }

    /// Inverse of [`TritVec::to_pairs`]: requires `A ∩ B = ∅` and
    /// `A ∪ B ⊆ X`.
    pub fn from_pairs(width: usize, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Result<Self> {
        let w = check_width(width)?;
        for &i in a.iter().chain(b.iter()) {
            if i >= width {
                return Err(Error::CoordinateOutOfRange {
                    coordinate: i,
                    width: w,
                });
            }
        }
        if let Some(&i) = a.intersection(b).next() {
            return Err(Error::OverlappingPair { coordinate: i });
        }
        Self::from_masks(width, set_to_mask(a), set_to_mask(b))
    }
}

impl ops::Not for TritVec {
    type Output = TritVec;
    fn not(self) -> TritVec {
        TritVec::not(&self)
    }
}

impl ops::BitAnd for TritVec {
    type Output = TritVec;
    fn bitand(self, rhs: TritVec) -> TritVec {
        self.and(&rhs)
    }
}

impl ops::BitOr for TritVec {
    type Output = TritVec;
    fn bitor(self, rhs: TritVec) -> TritVec {
        self.or(&rhs)
    }
}

impl fmt::Display for TritVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.trits() {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

// Debug shows the literal rather than the raw planes; test failures read
// much better that way.
impl fmt::Debug for TritVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for TritVec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TritVec::parse(s)
    }
}

impl Ord for TritVec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.trits().cmp(other.trits()))
    }
}

impl PartialOrd for TritVec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn mask_to_set(mask: u64) -> BTreeSet<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn set_to_mask(set: &BTreeSet<usize>) -> u64 {
    set.iter().fold(0u64, |m, &i| m | (1 << i))
}

/// A pair of disjoint index sets `(A, B)` over `X = {0, …, width−1}`,
/// with the connectives written as the literal set formulas.
///
/// This is the transparent, set-theoretic twin of [`TritVec`]; it exists so
/// the word-parallel plane operations have an independently readable
/// counterpart to be checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPair {
    width: u8,
    t_set: BTreeSet<usize>,
    f_set: BTreeSet<usize>,
}

impl SetPair {
    pub fn new(width: usize, t_set: BTreeSet<usize>, f_set: BTreeSet<usize>) -> Result<Self> {
        // Validation is shared with the packed constructor.
        let vec = TritVec::from_pairs(width, &t_set, &f_set)?;
        Ok(SetPair {
            width: vec.width(),
            t_set,
            f_set,
        })
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn t_set(&self) -> &BTreeSet<usize> {
        &self.t_set
    }

    pub fn f_set(&self) -> &BTreeSet<usize> {
        &self.f_set
    }

    fn universe(&self) -> BTreeSet<usize> {
        (0..self.width as usize).collect()
    }

    /// `not (A₁, A₂) = (A₂, A₁)`
    pub fn not(&self) -> SetPair {
        SetPair {
            width: self.width,
            t_set: self.f_set.clone(),
            f_set: self.t_set.clone(),
        }
    }

    /// `(A₁, A₂) and (B₁, B₂) = (A₁ ∩ B₁, A₂ ∪ (A₁ ∩ B₂))`
    pub fn and(&self, rhs: &SetPair) -> SetPair {
        assert!(self.width == rhs.width, "width mismatch");
        let t_set: BTreeSet<usize> = self.t_set.intersection(&rhs.t_set).copied().collect();
        let a1_b2: BTreeSet<usize> = self.t_set.intersection(&rhs.f_set).copied().collect();
        let f_set: BTreeSet<usize> = self.f_set.union(&a1_b2).copied().collect();
        SetPair {
            width: self.width,
            t_set,
            f_set,
        }
    }

    /// `(A₁, A₂) or (B₁, B₂) = (A₁ ∪ (A₂ ∩ B₁), A₂ ∩ B₂)`
    pub fn or(&self, rhs: &SetPair) -> SetPair {
        assert!(self.width == rhs.width, "width mismatch");
        let a2_b1: BTreeSet<usize> = self.f_set.intersection(&rhs.t_set).copied().collect();
        let t_set: BTreeSet<usize> = self.t_set.union(&a2_b1).copied().collect();
        let f_set: BTreeSet<usize> = self.f_set.intersection(&rhs.f_set).copied().collect();
        SetPair {
            width: self.width,
            t_set,
            f_set,
        }
    }

    /// Coordinates assigned `U`, i.e. `(A ∪ B)ᶜ`.
    pub fn u_set(&self) -> BTreeSet<usize> {
        self.universe()
            .into_iter()
            .filter(|i| !self.t_set.contains(i) && !self.f_set.contains(i))
            .collect()
    }

    pub fn to_vec(&self) -> TritVec {
        TritVec::from_pairs(self.width as usize, &self.t_set, &self.f_set)
            .expect("SetPair invariants guarantee a valid element")
    }
}

impl From<TritVec> for SetPair {
    fn from(v: TritVec) -> SetPair {
        v.to_pairs()
    }
}
