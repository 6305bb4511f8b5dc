//! The natural partial order `a ≤ b iff a or b = b`, atoms, the unordered
//! join `⊕`, atomicity analysis, and g-closedness.
//!
//! `F` is the least element of every algebra here, but the order is not a
//! lattice order. An element is an atom when nothing sits strictly between
//! `F` and it. The unordered join of a list exists exactly when every
//! rearrangement of the list has the same iterated join; on the pair view
//! `(A_i, B_i)` this is equivalent to the pairwise criterion
//! `A_i ∩ (A_j ∪ B_j)ᶜ = ∅`, which is what the implementation checks. A
//! factorial-cost oracle that literally tries all permutations lives in the
//! tests.

use std::collections::BTreeMap;

use crate::algebra::FiniteCAlgebra;
use crate::error::{Error, Result};
use crate::vector::TritVec;

/// The natural order: `a ≤ b` iff `a.or(b) == b`.
pub fn leq(a: &TritVec, b: &TritVec) -> bool {
    a.or(b) == *b
}

/// Atoms of the algebra: elements `a ≠ F` with nothing strictly between `F`
/// and `a` inside the universe.
pub fn atoms(m: &FiniteCAlgebra) -> Vec<TritVec> {
    atoms_of(m.elements(), &m.falsity())
}

/// Atoms relative to a subset `A` of some algebra; `A` must contain `F`.
/// Only the subset matters: the defining condition quantifies over `A`.
pub fn atoms_relative(subset: &[TritVec], width: usize) -> Result<Vec<TritVec>> {
    let bottom = TritVec::falsity(width)?;
    if !subset.contains(&bottom) {
        return Err(Error::MissingBottom);
    }
    Ok(atoms_of(subset, &bottom))
}

fn atoms_of(elements: &[TritVec], bottom: &TritVec) -> Vec<TritVec> {
    let mut out: Vec<TritVec> = elements
        .iter()
        .filter(|a| {
            **a != *bottom
                && !elements
                    .iter()
                    .any(|b| b != *a && b != bottom && leq(b, a))
        })
        .copied()
        .collect();
    out.sort();
    out
}

/// The atoms of the full power `3^width`: the `2·width` elements with
/// exactly one non-`F` coordinate, that coordinate being `T` or `U`.
pub fn global_atoms(width: usize) -> Result<Vec<TritVec>> {
    let bottom = TritVec::falsity(width)?;
    let w = bottom.width() as usize;
    let mut out = Vec::with_capacity(2 * w);
    for i in 0..w {
        for value in [crate::trit::Trit::T, crate::trit::Trit::U] {
            let mut trits: Vec<crate::trit::Trit> = bottom.trits().collect();
            trits[i] = value;
            out.push(TritVec::from_trits(&trits)?);
        }
    }
    out.sort();
    Ok(out)
}

/// For an atom of the full power, the unique coordinate carrying `T` or `U`.
pub fn atom_support(a: &TritVec) -> Result<usize> {
    let non_f = a.t_mask() | a.u_mask();
    if non_f.count_ones() != 1 {
        return Err(Error::NotAnAtom(a.to_string()));
    }
    Ok(non_f.trailing_zeros() as usize)
}

/// The unordered join `⊕` of a nonempty list: defined iff the iterated join
/// is the same under every reordering, in which case the result is `T` on
/// the union of the `T`-sets, `U` on the union of the `U`-sets, and `F`
/// elsewhere.
///
/// `None` is the "undefined" outcome, a first-class semantic value rather
/// than an error.
pub fn unordered_join(items: &[TritVec]) -> Option<TritVec> {
    assert!(!items.is_empty(), "unordered join of an empty list");
    let width = items[0].width();
    assert!(
        items.iter().all(|x| x.width() == width),
        "width mismatch in unordered join"
    );
    let mut t_acc = 0u64;
    let mut u_acc = 0u64;
    for (i, a) in items.iter().enumerate() {
        for b in &items[i + 1..] {
            // The pairwise criterion, both orders: a T-coordinate of one
            // operand falling in the U-set of another makes the join order
            // sensitive.
            if a.t_mask() & b.u_mask() != 0 || b.t_mask() & a.u_mask() != 0 {
                return None;
            }
        }
        t_acc |= a.t_mask();
        u_acc |= a.u_mask();
    }
    debug_assert_eq!(t_acc & u_acc, 0);
    let mask = items[0].mask();
    Some(
        TritVec::from_masks(width as usize, t_acc, mask & !(t_acc | u_acc))
            .expect("criterion guarantees disjoint planes"),
    )
}

/// The support criterion for atoms of the full power: `⊕` of a list of such
/// atoms is defined iff distinct atoms in it have pairwise distinct
/// supports. Inputs that are not atoms of `3^width` are rejected.
pub fn atom_join_defined(items: &[TritVec]) -> Result<bool> {
    let mut distinct: Vec<&TritVec> = Vec::new();
    for a in items {
        atom_support(a)?;
        if !distinct.contains(&a) {
            distinct.push(a);
        }
    }
    for (i, a) in distinct.iter().enumerate() {
        for b in &distinct[i + 1..] {
            if atom_support(a)? == atom_support(b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Left-zeros for `and`: the elements with `a.and(F) == a` (equivalently,
/// `a.and(b) == a` for every `b`).
pub fn left_zeros(m: &FiniteCAlgebra) -> Vec<TritVec> {
    let bottom = m.falsity();
    m.elements()
        .iter()
        .filter(|a| a.and(&bottom) == **a)
        .copied()
        .collect()
}

/// Some atom below `a` (the first in canonical order). Guaranteed to exist
/// in a finite algebra for `a ≠ F`.
pub fn min_atom_below(m: &FiniteCAlgebra, a: &TritVec) -> Result<TritVec> {
    if !m.contains(a) {
        return Err(Error::NotInAlgebra(a.to_string()));
    }
    if *a == m.falsity() {
        return Err(Error::BottomHasNoAtom);
    }
    atoms(m)
        .into_iter()
        .find(|atom| leq(atom, a))
        .ok_or_else(|| Error::Internal(format!("no atom below {a} in a finite algebra")))
}

/// Outcome of the atomicity analysis.
///
/// When the algebra is atomic, `decomposition` maps every non-`F` element to
/// the first witness set of atoms found whose `⊕` equals it. Witness sets
/// need not be unique; [`decomposition_count`] counts them all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicityReport {
    pub atomic: bool,
    pub decomposition: BTreeMap<TritVec, Vec<TritVec>>,
    pub obstruction: Option<TritVec>,
}

/// Decides whether every non-`F` element is an `⊕` of atoms.
///
/// For each element the search runs depth-first over subsets of the atoms
/// lying below it (a sound restriction: the parts of a defined `⊕` are
/// always below the whole). A branch is pruned as soon as its partial join
/// shows `T` or `U` at a coordinate where the target disagrees, since
/// extending a defined join only ever grows those coordinate sets.
pub fn atomicity(m: &FiniteCAlgebra) -> AtomicityReport {
    let bottom = m.falsity();
    let all_atoms = atoms(m);
    let mut decomposition = BTreeMap::new();

    for a in m.elements() {
        if *a == bottom {
            continue;
        }
        let below: Vec<TritVec> = all_atoms.iter().filter(|x| leq(x, a)).copied().collect();
        match decompose(a, &below) {
            Some(witness) => {
                decomposition.insert(*a, witness);
            }
            None => {
                return AtomicityReport {
                    atomic: false,
                    decomposition,
                    obstruction: Some(*a),
                };
            }
        }
    }
    AtomicityReport {
        atomic: true,
        decomposition,
        obstruction: None,
    }
}

/// Atomicity of a subset of `3^width` (for example a Boolean part `M_#`)
/// viewed as a structure of its own: atoms are taken relative to the
/// subset, and each non-`F` member must be an `⊕` of them.
pub fn atomicity_of_subset(subset: &[TritVec], width: usize) -> Result<AtomicityReport> {
    let bottom = TritVec::falsity(width)?;
    let rel_atoms = atoms_relative(subset, width)?;
    let mut decomposition = BTreeMap::new();
    let mut sorted: Vec<TritVec> = subset.to_vec();
    sorted.sort();
    for a in &sorted {
        if *a == bottom {
            continue;
        }
        let below: Vec<TritVec> = rel_atoms.iter().filter(|x| leq(x, a)).copied().collect();
        match decompose(a, &below) {
            Some(witness) => {
                decomposition.insert(*a, witness);
            }
            None => {
                return Ok(AtomicityReport {
                    atomic: false,
                    decomposition,
                    obstruction: Some(*a),
                });
            }
        }
    }
    Ok(AtomicityReport {
        atomic: true,
        decomposition,
        obstruction: None,
    })
}

/// Number of distinct atom sets whose `⊕` equals `a`. The analysis reports
/// only the first witness; whether witnesses are ever non-unique is left to
/// the caller to probe with this count.
pub fn decomposition_count(m: &FiniteCAlgebra, a: &TritVec) -> Result<usize> {
    if !m.contains(a) {
        return Err(Error::NotInAlgebra(a.to_string()));
    }
    let below: Vec<TritVec> = atoms(m).into_iter().filter(|x| leq(x, a)).collect();
    let mut count = 0usize;
    // Subset counts here are tiny (atoms below a single element), so a
    // plain bitmask enumeration is clearer than the pruned search.
    for mask in 1u32..(1 << below.len()) {
        let chosen: Vec<TritVec> = below
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, x)| *x)
            .collect();
        if unordered_join(&chosen) == Some(*a) {
            count += 1;
        }
    }
    Ok(count)
}

fn decompose(target: &TritVec, below: &[TritVec]) -> Option<Vec<TritVec>> {
    let mut chosen = Vec::new();
    dfs(target, below, 0, 0, 0, &mut chosen)
}

fn dfs(
    target: &TritVec,
    below: &[TritVec],
    next: usize,
    t_acc: u64,
    u_acc: u64,
    chosen: &mut Vec<TritVec>,
) -> Option<Vec<TritVec>> {
    if t_acc == target.t_mask() && u_acc == target.u_mask() && !chosen.is_empty() {
        return Some(chosen.clone());
    }
    if next == below.len() {
        return None;
    }
    let atom = &below[next];
    // Including `atom` keeps the join defined iff its T-set avoids the
    // accumulated U-set and vice versa.
    if atom.t_mask() & u_acc == 0 && atom.u_mask() & t_acc == 0 {
        let t_new = t_acc | atom.t_mask();
        let u_new = u_acc | atom.u_mask();
        // Prune joins that already disagree with the target: T- and U-sets
        // of a partial join only grow.
        if t_new & !target.t_mask() == 0 && u_new & !target.u_mask() == 0 {
            chosen.push(*atom);
            if let Some(found) = dfs(target, below, next + 1, t_new, u_new, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
    }
    dfs(target, below, next + 1, t_acc, u_acc, chosen)
}

/// Is every atom of `M` an atom of the ambient full power? Such an `M` is
/// called g-closed (closed with respect to global atoms).
pub fn is_g_closed(m: &FiniteCAlgebra) -> bool {
    first_local_atom(m).is_none()
}

/// The first atom of `M` that is not a global atom, if any — the witness
/// that `M` is not g-closed.
pub fn first_local_atom(m: &FiniteCAlgebra) -> Option<TritVec> {
    let global = global_atoms(m.width() as usize).expect("algebra width is valid");
    atoms(m).into_iter().find(|a| !global.contains(a))
}
