//! Annihilators through the inbuilt if-then-else action, the induced
//! closure operator, closed sets and their Boolean structure, and the
//! induced partition of the full power.
//!
//! The annihilator of `a` collects the conditions whose action sends
//! `(a, a)` to `U`; extended to subsets by intersection it forms an
//! antitone Galois connection with itself, so `ann²` is a closure operator
//! and `ann³ = ann`. A consequence used heavily here: the closed sets are
//! exactly the annihilators of subsets, i.e. exactly the intersections of
//! element annihilators (plus the whole universe as the empty
//! intersection). That makes the family computable for any desk-size
//! algebra without touching the `2^|M|` subset lattice; the tests keep a
//! brute-force subset sweep around as the oracle for small universes.
//!
//! One caveat that never bites at this scale: over an infinite index set
//! `ann²` is not an algebraic (finitary) closure operator. Take the
//! family of elements that are `T` at a single coordinate and `U`
//! elsewhere, one per coordinate of an infinite power. Each finite
//! subfamily double-closes to a set whose members are still `U` at all but
//! finitely many coordinates, yet the whole family annihilates down to the
//! constant `U` alone and therefore double-closes to everything — the
//! all-`T` element appears at no finite stage. Everything in this crate is
//! finite, so the operator is used only as a plain closure operator.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::FiniteCAlgebra;
use crate::error::{Error, Result};
use crate::ifthenelse::ite;
use crate::report::{AxiomCheck, AxiomReport};
use crate::vector::TritVec;

/// Widths accepted by [`partition_by_annihilator`] and
/// [`closed_family_full`].
pub const PARTITION_WIDTH_BOUND: u8 = 6;

/// `ann(a) = { α ∈ M : α[a, a] = U }`.
pub fn ann(m: &FiniteCAlgebra, a: &TritVec) -> Result<Vec<TritVec>> {
    if !m.contains(a) {
        return Err(Error::NotInAlgebra(a.to_string()));
    }
    let undef = m.undefined();
    Ok(m.elements()
        .iter()
        .filter(|alpha| ite(alpha, a, a) == undef)
        .copied()
        .collect())
}

/// `ann(S) = ⋂_{a ∈ S} ann(a)`; the empty intersection is all of `M`.
pub fn ann_set(m: &FiniteCAlgebra, subset: &[TritVec]) -> Result<Vec<TritVec>> {
    for a in subset {
        if !m.contains(a) {
            return Err(Error::NotInAlgebra(a.to_string()));
        }
    }
    let undef = m.undefined();
    Ok(m.elements()
        .iter()
        .filter(|alpha| subset.iter().all(|a| ite(alpha, a, a) == undef))
        .copied()
        .collect())
}

/// The closure operator `ann²`.
pub fn ann2(m: &FiniteCAlgebra, subset: &[TritVec]) -> Result<Vec<TritVec>> {
    let first = ann_set(m, subset)?;
    ann_set(m, &first)
}

/// Is `S` a fixed point of `ann²`? The comparison is on the canonicalised
/// (sorted, deduplicated) subset.
pub fn is_closed(m: &FiniteCAlgebra, subset: &[TritVec]) -> Result<bool> {
    let canonical: BTreeSet<TritVec> = subset.iter().copied().collect();
    let closed: BTreeSet<TritVec> = ann2(m, subset)?.into_iter().collect();
    Ok(canonical == closed)
}

/// The family of all `ann²`-fixed subsets of the algebra, each stored
/// canonically, ordered by size then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSetFamily {
    ambient: FiniteCAlgebra,
    sets: Vec<Vec<TritVec>>,
}

/// Computes every closed set: the closed sets are the annihilators of
/// subsets, and every such annihilator is an intersection of element
/// annihilators, so closing `{ M } ∪ { ann(a) }` under pairwise
/// intersection enumerates the family exactly.
///
/// For a full power the family is additionally cross-checked against the
/// direct description: one closed set per subset `A` of coordinates,
/// holding the elements that are `U` everywhere on `A`.
pub fn closed_sets(m: &FiniteCAlgebra) -> ClosedSetFamily {
    let mut family: BTreeSet<Vec<TritVec>> = BTreeSet::new();
    family.insert(m.elements().to_vec());
    for a in m.elements() {
        family.insert(ann(m, a).expect("universe elements are members"));
    }
    loop {
        let mut fresh: Vec<Vec<TritVec>> = Vec::new();
        for x in &family {
            for y in &family {
                let meet: Vec<TritVec> = intersect(x, y);
                if !family.contains(&meet) {
                    fresh.push(meet);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        family.extend(fresh);
    }

    let mut sets: Vec<Vec<TritVec>> = family.into_iter().collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    for set in &sets {
        debug_assert!(is_closed(m, set).unwrap(), "family member must be closed");
    }
    if m.is_full() && m.width() <= PARTITION_WIDTH_BOUND {
        let direct: BTreeSet<Vec<TritVec>> = closed_family_full(m.width() as usize)
            .expect("width bound checked above")
            .into_iter()
            .map(|(_, set)| set)
            .collect();
        let ours: BTreeSet<Vec<TritVec>> = sets.iter().cloned().collect();
        assert_eq!(
            ours, direct,
            "fixpoint family must match the direct description on full powers"
        );
    }

    ClosedSetFamily {
        ambient: m.clone(),
        sets,
    }
}

fn intersect(x: &[TritVec], y: &[TritVec]) -> Vec<TritVec> {
    let y_set: BTreeSet<&TritVec> = y.iter().collect();
    x.iter().filter(|e| y_set.contains(e)).copied().collect()
}

impl ClosedSetFamily {
    pub fn ambient(&self) -> &FiniteCAlgebra {
        &self.ambient
    }

    pub fn sets(&self) -> &[Vec<TritVec>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_of(&self, set: &[TritVec]) -> Option<usize> {
        let canonical: Vec<TritVec> = set.to_vec();
        self.sets.iter().position(|s| *s == canonical)
    }

    /// Index of `{U}`, the least closed set (Boolean zero).
    pub fn zero(&self) -> usize {
        self.index_of(&[self.ambient.undefined()])
            .expect("{U} is always closed")
    }

    /// Index of the whole universe (Boolean one).
    pub fn one(&self) -> usize {
        self.index_of(self.ambient.elements())
            .expect("the universe is always closed")
    }

    /// Boolean negation: `ann(I)`.
    pub fn complement(&self, i: usize) -> usize {
        let neg = ann_set(&self.ambient, &self.sets[i]).expect("family members are subsets");
        self.index_of(&neg)
            .expect("annihilators of closed sets are closed")
    }

    /// Boolean meet: plain intersection.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let meet = intersect(&self.sets[i], &self.sets[j]);
        self.index_of(&meet)
            .expect("closure systems are intersection-closed")
    }

    /// Boolean join: `ann(ann(I) ∩ ann(J))`.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let a = ann_set(&self.ambient, &self.sets[i]).expect("family members are subsets");
        let b = ann_set(&self.ambient, &self.sets[j]).expect("family members are subsets");
        let joined = ann_set(&self.ambient, &intersect(&a, &b)).expect("subset of universe");
        self.index_of(&joined)
            .expect("annihilators of closed sets are closed")
    }

    /// Verifies the Boolean algebra laws over the whole family. The general
    /// question whether closed sets always form a Boolean algebra is open,
    /// so the outcome is reported per input rather than assumed.
    pub fn verify_boolean_laws(&self) -> AxiomReport {
        let n = self.sets.len();
        let pair = |i: usize, j: usize| format!("I={:?} J={:?}", self.sets[i], self.sets[j]);
        let mut checks = Vec::new();

        let mut law2 = |name: &'static str, f: &dyn Fn(usize, usize) -> bool| {
            for i in 0..n {
                for j in 0..n {
                    if !f(i, j) {
                        checks.push(AxiomCheck::failed(name, pair(i, j), (n * n) as u128, true));
                        return;
                    }
                }
            }
            checks.push(AxiomCheck::passed(name, (n * n) as u128, true));
        };

        law2("commutative-meet", &|i, j| self.meet(i, j) == self.meet(j, i));
        law2("commutative-join", &|i, j| self.join(i, j) == self.join(j, i));
        law2("absorption-meet", &|i, j| self.meet(i, self.join(i, j)) == i);
        law2("absorption-join", &|i, j| self.join(i, self.meet(i, j)) == i);

        let mut law3 = |name: &'static str, f: &dyn Fn(usize, usize, usize) -> bool| {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !f(i, j, k) {
                            checks.push(AxiomCheck::failed(
                                name,
                                format!("{} K={:?}", pair(i, j), self.sets[k]),
                                (n * n * n) as u128,
                                true,
                            ));
                            return;
                        }
                    }
                }
            }
            checks.push(AxiomCheck::passed(name, (n * n * n) as u128, true));
        };

        law3("associative-meet", &|i, j, k| {
            self.meet(self.meet(i, j), k) == self.meet(i, self.meet(j, k))
        });
        law3("associative-join", &|i, j, k| {
            self.join(self.join(i, j), k) == self.join(i, self.join(j, k))
        });
        law3("distributive-meet-over-join", &|i, j, k| {
            self.meet(i, self.join(j, k)) == self.join(self.meet(i, j), self.meet(i, k))
        });
        law3("distributive-join-over-meet", &|i, j, k| {
            self.join(i, self.meet(j, k)) == self.meet(self.join(i, j), self.join(i, k))
        });

        let mut law1 = |name: &'static str, f: &dyn Fn(usize) -> bool| {
            for i in 0..n {
                if !f(i) {
                    checks.push(AxiomCheck::failed(
                        name,
                        format!("I={:?}", self.sets[i]),
                        n as u128,
                        true,
                    ));
                    return;
                }
            }
            checks.push(AxiomCheck::passed(name, n as u128, true));
        };

        let zero = self.zero();
        let one = self.one();
        law1("identity-one", &|i| self.meet(i, one) == i);
        law1("identity-zero", &|i| self.join(i, zero) == i);
        law1("complement-meet", &|i| self.meet(i, self.complement(i)) == zero);
        law1("complement-join", &|i| self.join(i, self.complement(i)) == one);
        law1("double-complement", &|i| self.complement(self.complement(i)) == i);

        AxiomReport { checks }
    }

    /// The set of coordinates on which every member of `set` is `U`.
    pub fn common_u_mask(set: &[TritVec], width: usize) -> u64 {
        let mask = TritVec::undefined(width)
            .map(|u| u.mask())
            .unwrap_or(u64::MAX);
        set.iter().fold(mask, |acc, e| acc & e.u_mask())
    }

    /// For a full ambient power, verifies that complementing the common-U
    /// coordinate set is a Boolean isomorphism onto the power set of `X`,
    /// and returns the coordinate set keying each family member.
    pub fn verify_boolean_isomorphism(&self) -> Result<Vec<u64>> {
        if !self.ambient.is_full() {
            return Err(Error::Internal(
                "the power-set isomorphism is only asserted for full powers".to_string(),
            ));
        }
        let width = self.ambient.width() as usize;
        let full_mask = self.ambient.undefined().mask();
        let keys: Vec<u64> = self
            .sets
            .iter()
            .map(|set| Self::common_u_mask(set, width))
            .collect();

        let distinct: BTreeSet<u64> = keys.iter().copied().collect();
        if distinct.len() != self.sets.len() || self.sets.len() != 1 << width {
            return Err(Error::Internal(
                "closed sets do not biject with coordinate subsets".to_string(),
            ));
        }
        for (i, &a) in keys.iter().enumerate() {
            for (j, &b) in keys.iter().enumerate() {
                if keys[self.meet(i, j)] != a | b {
                    return Err(Error::Internal("meet does not map to union".to_string()));
                }
                if keys[self.join(i, j)] != a & b {
                    return Err(Error::Internal(
                        "join does not map to intersection".to_string(),
                    ));
                }
            }
            if keys[self.complement(i)] != full_mask & !a {
                return Err(Error::Internal(
                    "complement does not map to set complement".to_string(),
                ));
            }
        }
        Ok(keys)
    }
}

/// The closed sets of the full power, described directly: for each subset
/// `A` of coordinates (as a bit mask), the set of elements that are `U`
/// everywhere on `A`. Returned keyed and sorted by mask.
pub fn closed_family_full(width: usize) -> Result<Vec<(u64, Vec<TritVec>)>> {
    let probe = TritVec::undefined(width)?;
    let w = probe.width();
    if w > PARTITION_WIDTH_BOUND {
        return Err(Error::WidthBound {
            what: "closed family of the full power",
            width: w,
            bound: PARTITION_WIDTH_BOUND,
        });
    }
    let full = FiniteCAlgebra::full(width)?;
    let full_mask = probe.mask();
    let mut out = Vec::new();
    // The ambient mask is a contiguous run of low bits, so every value up
    // to it is a coordinate subset.
    for a in 0..=full_mask {
        let set: Vec<TritVec> = full
            .elements()
            .iter()
            .filter(|e| (e.t_mask() | e.f_mask()) & a == 0)
            .copied()
            .collect();
        out.push((a, set));
    }
    Ok(out)
}

/// The classes `S_A = { α : ann(α) = I_A }` of the full power, keyed by the
/// coordinate-set mask `A`. The classes partition the power and the class
/// of the full coordinate set is exactly the Boolean part.
pub fn partition_by_annihilator(width: usize) -> Result<BTreeMap<u64, Vec<TritVec>>> {
    let probe = TritVec::undefined(width)?;
    let w = probe.width();
    if w > PARTITION_WIDTH_BOUND {
        return Err(Error::WidthBound {
            what: "annihilator partition",
            width: w,
            bound: PARTITION_WIDTH_BOUND,
        });
    }
    let full = FiniteCAlgebra::full(width)?;
    let mut classes: BTreeMap<u64, Vec<TritVec>> = BTreeMap::new();
    for alpha in full.elements() {
        let annihilator = ann(&full, alpha)?;
        let key = ClosedSetFamily::common_u_mask(&annihilator, width);
        // ann(α) is closed (ann³ = ann), so it is the closed set keyed by
        // the common-U coordinates; membership by key is exact.
        classes.entry(key).or_default().push(*alpha);
    }
    Ok(classes)
}

/// Searches for a coordinate set `Y` witnessing the two-property
/// characterisation of closed sets in a full power: every member is `U`
/// throughout `Y` (P1), and every assignment on the complement of `Y` is
/// realised by some member (P2). Returns the witness when one exists;
/// closed sets have exactly one.
pub fn closed_characterisation_witness(width: usize, set: &[TritVec]) -> Result<Option<u64>> {
    let probe = TritVec::undefined(width)?;
    let w = probe.width();
    if w > PARTITION_WIDTH_BOUND {
        return Err(Error::WidthBound {
            what: "closed-set characterisation",
            width: w,
            bound: PARTITION_WIDTH_BOUND,
        });
    }
    let full_mask = probe.mask();
    'candidates: for y in 0..=full_mask {
        // P1: all members are U on Y.
        for e in set {
            if (e.t_mask() | e.f_mask()) & y != 0 {
                continue 'candidates;
            }
        }
        // P2: restrictions to the complement of Y realise every assignment.
        let complement_bits = (full_mask & !y).count_ones();
        let restrictions: BTreeSet<(u64, u64)> = set
            .iter()
            .map(|e| (e.t_mask() & !y, e.f_mask() & !y))
            .collect();
        if restrictions.len() as u128 == 3u128.pow(complement_bits) {
            return Ok(Some(y));
        }
        if y == full_mask {
            break;
        }
    }
    Ok(None)
}
