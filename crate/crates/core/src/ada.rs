//! Adas: C-algebras carrying the halting test `down`, detection and
//! closure, the Boolean skeleton, the disjoint-pair construction from a
//! Boolean algebra, and the atom pairing between the two halves of the atom
//! set.
//!
//! "Ada closure" here always means closure inside the ambient power of the
//! given embedding: the smallest superset of the universe closed under
//! not/and/or/down. The free (enveloping) ada of abstract algebra may be a
//! different object in general; for the finite, embedded computations in
//! this crate the two agree on everything we check, and the embedded
//! reading is what all downstream analyses use.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{close_under_ops, FiniteCAlgebra};
use crate::error::{Error, Result};
use crate::order::atoms;
use crate::report::{AxiomCheck, AxiomReport};
use crate::vector::TritVec;

/// A finite ada: a C-algebra whose universe is closed under `down`, with
/// A1–A6 verified at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAda {
    algebra: FiniteCAlgebra,
}

impl FiniteAda {
    pub fn new(algebra: FiniteCAlgebra) -> Result<Self> {
        if let Some((element, image)) = first_down_escape(&algebra) {
            return Err(Error::NotDownClosed {
                element: element.to_string(),
                image: image.to_string(),
            });
        }
        let report = verify_ada_axioms(&algebra);
        if let Some(failure) = report.first_failure() {
            return Err(Error::Internal(format!(
                "down-closed universe failed {}: {}",
                failure.name,
                failure.counterexample.as_deref().unwrap_or("?")
            )));
        }
        Ok(FiniteAda { algebra })
    }

    pub fn algebra(&self) -> &FiniteCAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> FiniteCAlgebra {
        self.algebra
    }

    pub fn width(&self) -> u8 {
        self.algebra.width()
    }

    pub fn elements(&self) -> &[TritVec] {
        self.algebra.elements()
    }

    /// The image `A↓ = { a↓ : a ∈ A }`, which coincides with the Boolean
    /// part `A_#` and with the fixed points of `down`.
    pub fn down_image(&self) -> Vec<TritVec> {
        let image: BTreeSet<TritVec> = self.elements().iter().map(|a| a.down()).collect();
        image.into_iter().collect()
    }
}

fn first_down_escape(m: &FiniteCAlgebra) -> Option<(TritVec, TritVec)> {
    m.elements().iter().find_map(|a| {
        let d = a.down();
        (!m.contains(&d)).then_some((*a, d))
    })
}

/// Is the universe closed under `down`? (A1–A6 then hold automatically for
/// the pointwise operation; `check_ada` verifies them anyway as a
/// self-test.)
pub fn is_ada(m: &FiniteCAlgebra) -> bool {
    first_down_escape(m).is_none()
}

/// Closure status plus the A1–A6 sweep (run only when closed).
#[derive(Debug, Clone)]
pub struct AdaCheck {
    pub closed_under_down: bool,
    pub first_escape: Option<(TritVec, TritVec)>,
    pub axioms: Option<AxiomReport>,
}

impl AdaCheck {
    pub fn is_ada(&self) -> bool {
        self.closed_under_down && self.axioms.as_ref().is_some_and(|r| r.all_hold())
    }
}

pub fn check_ada(m: &FiniteCAlgebra) -> AdaCheck {
    match first_down_escape(m) {
        Some(escape) => AdaCheck {
            closed_under_down: false,
            first_escape: Some(escape),
            axioms: None,
        },
        None => AdaCheck {
            closed_under_down: true,
            first_escape: None,
            axioms: Some(verify_ada_axioms(m)),
        },
    }
}

/// Checks A1–A6 over the universe. A1–A3 pin `down` on the constants, A4 is
/// the one genuinely binary law, A5 says every `down`-image is Boolean, and
/// A6 says `a↓ ≤ a`.
pub fn verify_ada_axioms(m: &FiniteCAlgebra) -> AxiomReport {
    let elements = m.elements();
    let top = m.truth();
    let bottom = m.falsity();
    let undef = m.undefined();
    let mut checks = Vec::new();

    let constant = |name: &'static str, ok: bool, witness: String| {
        if ok {
            AxiomCheck::passed(name, 1, true)
        } else {
            AxiomCheck::failed(name, witness, 1, true)
        }
    };
    checks.push(constant(
        "A1",
        bottom.down() == bottom,
        format!("down(F) = {}", bottom.down()),
    ));
    checks.push(constant(
        "A2",
        undef.down() == bottom,
        format!("down(U) = {}", undef.down()),
    ));
    checks.push(constant(
        "A3",
        top.down() == top,
        format!("down(T) = {}", top.down()),
    ));

    checks.push(sweep_binary(elements, "A4", |a, b| {
        a.and(&b.down()) == a.and(&a.and(b).down())
    }));
    checks.push(sweep_unary(elements, "A5", |a| {
        let d = a.down();
        d.or(&d.not()) == top
    }));
    checks.push(sweep_unary(elements, "A6", |a| a.down().or(a) == *a));

    AxiomReport { checks }
}

fn sweep_unary(
    elements: &[TritVec],
    name: &'static str,
    law: impl Fn(&TritVec) -> bool,
) -> AxiomCheck {
    let cases = elements.len() as u128;
    for a in elements {
        if !law(a) {
            return AxiomCheck::failed(name, format!("a={a}"), cases, true);
        }
    }
    AxiomCheck::passed(name, cases, true)
}

fn sweep_binary(
    elements: &[TritVec],
    name: &'static str,
    law: impl Fn(&TritVec, &TritVec) -> bool,
) -> AxiomCheck {
    let cases = (elements.len() * elements.len()) as u128;
    for a in elements {
        for b in elements {
            if !law(a, b) {
                return AxiomCheck::failed(name, format!("a={a} b={b}"), cases, true);
            }
        }
    }
    AxiomCheck::passed(name, cases, true)
}

/// The smallest superset of `M` inside its ambient power closed under
/// not/and/or/down: the fixpoint of one-step closure.
pub fn ada_closure(m: &FiniteCAlgebra) -> FiniteAda {
    let mut universe: BTreeSet<TritVec> = m.elements().iter().copied().collect();
    loop {
        universe = close_under_ops(universe);
        let fresh: Vec<TritVec> = universe
            .iter()
            .map(|a| a.down())
            .filter(|d| !universe.contains(d))
            .collect();
        if fresh.is_empty() {
            break;
        }
        universe.extend(fresh);
    }
    let algebra = FiniteCAlgebra::from_universe(m.width() as usize, universe)
        .expect("closure output is closed by construction");
    FiniteAda::new(algebra).expect("closure output is down-closed by construction")
}

/// Builds the ada of disjoint pairs over a Boolean subalgebra `Q ≤ 2^width`
/// embedded in `3^width` (elements of `Q` are the U-free vectors).
///
/// With `S = { α⁻¹(T) : α ∈ Q }`, the universe is every element whose pair
/// view `(E, F)` draws both sets from `S` — the sets are understood to
/// range over the given Boolean family, not over arbitrary subsets. The
/// Boolean part of the result recovers `Q` itself, which is verified here.
pub fn boolean_to_ada(width: usize, q: &[TritVec]) -> Result<FiniteAda> {
    let top = TritVec::truth(width)?;
    let bottom = TritVec::falsity(width)?;
    let q_set: BTreeSet<TritVec> = q.iter().copied().collect();
    for a in &q_set {
        if a.width() != top.width() {
            return Err(Error::WidthMismatch {
                left: top.width(),
                right: a.width(),
            });
        }
        if !a.is_boolean() {
            return Err(Error::NotBoolean(format!("{a} has a U coordinate")));
        }
    }
    if !q_set.contains(&top) || !q_set.contains(&bottom) {
        return Err(Error::NotBoolean("missing constant T or F".to_string()));
    }
    for a in &q_set {
        if !q_set.contains(&a.not()) {
            return Err(Error::NotBoolean(format!("not closed under not at {a}")));
        }
        for b in &q_set {
            if !q_set.contains(&a.and(b)) {
                return Err(Error::NotBoolean(format!(
                    "not closed under and at {a}, {b}"
                )));
            }
            if !q_set.contains(&a.or(b)) {
                return Err(Error::NotBoolean(format!(
                    "not closed under or at {a}, {b}"
                )));
            }
        }
    }

    let t_family: BTreeSet<u64> = q_set.iter().map(|a| a.t_mask()).collect();
    let mut universe: Vec<TritVec> = Vec::new();
    for &e in &t_family {
        for &f in &t_family {
            if e & f == 0 {
                universe.push(TritVec::from_masks(width, e, f)?);
            }
        }
    }
    let algebra = FiniteCAlgebra::from_universe(width, universe)
        .map_err(|err| Error::Internal(format!("disjoint-pair universe failed to close: {err}")))?;
    let ada = FiniteAda::new(algebra)
        .map_err(|err| Error::Internal(format!("disjoint-pair universe is not an ada: {err}")))?;

    let recovered: BTreeSet<TritVec> = ada.algebra().m_hash().into_iter().collect();
    if recovered != q_set {
        return Err(Error::Internal(
            "Boolean part of the pair ada does not recover Q".to_string(),
        ));
    }
    Ok(ada)
}

/// The pairing `G(α) = not(down(not α))` between the non-Boolean and the
/// Boolean atoms of an ada, verified to be a bijection.
pub fn atom_bijection(ada: &FiniteAda) -> Result<BTreeMap<TritVec, TritVec>> {
    let m = ada.algebra();
    let hash: BTreeSet<TritVec> = m.m_hash().into_iter().collect();
    let all_atoms = atoms(m);
    let domain: Vec<TritVec> = all_atoms
        .iter()
        .filter(|a| !hash.contains(a))
        .copied()
        .collect();
    let codomain: BTreeSet<TritVec> = all_atoms
        .iter()
        .filter(|a| hash.contains(a))
        .copied()
        .collect();

    let mut map = BTreeMap::new();
    let mut image = BTreeSet::new();
    for alpha in domain {
        let g = alpha.not().down().not();
        if !codomain.contains(&g) {
            return Err(Error::Internal(format!(
                "G({alpha}) = {g} is not a Boolean atom"
            )));
        }
        if !image.insert(g) {
            return Err(Error::Internal(format!("G is not injective at {alpha}")));
        }
        map.insert(alpha, g);
    }
    if image.len() != codomain.len() {
        return Err(Error::Internal(
            "G is not surjective onto the Boolean atoms".to_string(),
        ));
    }
    Ok(map)
}
