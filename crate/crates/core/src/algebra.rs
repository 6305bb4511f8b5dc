//! Finite C-algebras represented explicitly as subsets of `3^X`: generation
//! by closure, exhaustive subalgebra enumeration, and axiom verification.
//!
//! Every algebra handled here carries the constants **T**, **F**, **U** in
//! its signature; the subalgebra enumeration therefore only produces
//! universes containing all three. Universes are stored sorted in the
//! canonical element order and never mutated after construction.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::{AxiomCheck, AxiomReport};
use crate::vector::TritVec;

/// Widths accepted by [`FiniteCAlgebra::enumerate_subalgebras`].
pub const ENUMERATION_WIDTH_BOUND: u8 = 3;

/// Widths for which the full power `3^X` may be materialised.
pub const FULL_WIDTH_BOUND: u8 = 10;

/// A finite C-algebra with constants, embedded in `3^width`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteCAlgebra {
    width: u8,
    universe: Vec<TritVec>,
}

impl FiniteCAlgebra {
    /// The whole power `3^width`, in canonical order.
    pub fn full(width: usize) -> Result<Self> {
        let probe = TritVec::undefined(width)?;
        let width_u8 = probe.width();
        if width_u8 > FULL_WIDTH_BOUND {
            return Err(Error::WidthBound {
                what: "full power",
                width: width_u8,
                bound: FULL_WIDTH_BOUND,
            });
        }
        Ok(FiniteCAlgebra {
            width: width_u8,
            universe: all_elements(width_u8),
        })
    }

    /// Smallest subalgebra of `3^width` containing the generators and the
    /// constants: the fixpoint of one-step closure under not/and/or.
    pub fn generate(width: usize, generators: &[TritVec]) -> Result<Self> {
        let undef = TritVec::undefined(width)?;
        let w = undef.width();
        for g in generators {
            if g.width() != w {
                return Err(Error::WidthMismatch {
                    left: w,
                    right: g.width(),
                });
            }
        }
        let mut seed: BTreeSet<TritVec> = generators.iter().copied().collect();
        seed.insert(TritVec::truth(width)?);
        seed.insert(TritVec::falsity(width)?);
        seed.insert(undef);
        let universe = close_under_ops(seed);
        Ok(FiniteCAlgebra {
            width: w,
            universe: universe.into_iter().collect(),
        })
    }

    /// Wraps an explicit universe, validating the constants and closure
    /// under not/and/or. Duplicates are removed and the universe sorted.
    pub fn from_universe(width: usize, elements: impl IntoIterator<Item = TritVec>) -> Result<Self> {
        let undef = TritVec::undefined(width)?;
        let w = undef.width();
        let set: BTreeSet<TritVec> = elements.into_iter().collect();
        for e in &set {
            if e.width() != w {
                return Err(Error::WidthMismatch {
                    left: w,
                    right: e.width(),
                });
            }
        }
        for (constant, name) in [
            (TritVec::truth(width)?, "T"),
            (TritVec::falsity(width)?, "F"),
            (undef, "U"),
        ] {
            if !set.contains(&constant) {
                return Err(Error::MissingConstant(name.to_string()));
            }
        }
        check_closed(&set)?;
        Ok(FiniteCAlgebra {
            width: w,
            universe: set.into_iter().collect(),
        })
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    /// Universes always contain the three constants.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The universe in canonical order.
    pub fn elements(&self) -> &[TritVec] {
        &self.universe
    }

    pub fn contains(&self, element: &TritVec) -> bool {
        element.width() == self.width && self.universe.binary_search(element).is_ok()
    }

    pub fn is_full(&self) -> bool {
        self.universe.len() as u128 == 3u128.pow(self.width as u32)
    }

    pub fn truth(&self) -> TritVec {
        TritVec::truth(self.width as usize).expect("width validated at construction")
    }

    pub fn falsity(&self) -> TritVec {
        TritVec::falsity(self.width as usize).expect("width validated at construction")
    }

    pub fn undefined(&self) -> TritVec {
        TritVec::undefined(self.width as usize).expect("width validated at construction")
    }

    /// All distinct subalgebras of `3^width` containing the constants, in
    /// deterministic order (by size, then lexicographically on the sorted
    /// universe).
    ///
    /// Works by growing the subalgebra lattice from the bottom: start with
    /// the closure of the constants and repeatedly adjoin one outside
    /// element to an already-found subalgebra and close again. Every
    /// subalgebra N is reached because any chain
    /// `close(constants) ⊂ … ⊂ N` built by adjoining elements of N stays
    /// inside N and grows strictly.
    pub fn enumerate_subalgebras(width: usize) -> Result<Vec<Self>> {
        Self::enumerate_subalgebras_with_bound(width, ENUMERATION_WIDTH_BOUND)
    }

    pub fn enumerate_subalgebras_with_bound(width: usize, bound: u8) -> Result<Vec<Self>> {
        let undef = TritVec::undefined(width)?;
        let w = undef.width();
        if w > bound {
            return Err(Error::WidthBound {
                what: "subalgebra enumeration",
                width: w,
                bound,
            });
        }
        let ambient = all_elements(w);
        let bottom: BTreeSet<TritVec> = close_under_ops(
            [
                TritVec::truth(width)?,
                TritVec::falsity(width)?,
                undef,
            ]
            .into_iter()
            .collect(),
        );

        let mut found: BTreeSet<Vec<TritVec>> = BTreeSet::new();
        found.insert(bottom.iter().copied().collect());
        let mut frontier: Vec<BTreeSet<TritVec>> = vec![bottom];

        while !frontier.is_empty() {
            let extensions: Vec<Vec<TritVec>> = frontier
                .par_iter()
                .flat_map_iter(|algebra| {
                    ambient
                        .iter()
                        .filter(|x| !algebra.contains(x))
                        .map(|x| {
                            let mut seed = algebra.clone();
                            seed.insert(*x);
                            close_under_ops(seed).into_iter().collect::<Vec<_>>()
                        })
                        .collect::<Vec<_>>()
                })
                .collect();

            let mut next = Vec::new();
            for universe in extensions {
                if found.insert(universe.clone()) {
                    next.push(universe.into_iter().collect());
                }
            }
            frontier = next;
        }

        let mut algebras: Vec<FiniteCAlgebra> = found
            .into_iter()
            .map(|universe| FiniteCAlgebra { width: w, universe })
            .collect();
        algebras.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.universe.cmp(&b.universe))
        });
        Ok(algebras)
    }

    /// Checks the seven C-algebra identities over all tuples drawn from the
    /// universe, reporting the first counterexample of each.
    pub fn verify_c_axioms(&self) -> AxiomReport {
        verify_c_axioms_with(
            &self.universe,
            |a| a.not(),
            |a, b| a.and(b),
            |a, b| a.or(b),
        )
    }

    /// The Boolean part `M_# = { α : α or not α = T }`.
    pub fn m_hash(&self) -> Vec<TritVec> {
        let top = self.truth();
        self.universe
            .iter()
            .filter(|a| a.or(&a.not()) == top)
            .copied()
            .collect()
    }

    /// The complement `M_#ᶜ`, verified closed under not/and/or.
    pub fn m_hash_complement(&self) -> Result<Vec<TritVec>> {
        let hash: BTreeSet<TritVec> = self.m_hash().into_iter().collect();
        let complement: Vec<TritVec> = self
            .universe
            .iter()
            .filter(|a| !hash.contains(a))
            .copied()
            .collect();
        let comp_set: BTreeSet<TritVec> = complement.iter().copied().collect();
        check_closed(&comp_set).map_err(|e| {
            Error::Internal(format!("M_# complement failed to be a C-algebra: {e}"))
        })?;
        Ok(complement)
    }

    /// The algebra `M_#ᶜ ∪ {T, F}`, which is closed and carries the
    /// constants again.
    pub fn m_hash_complement_algebra(&self) -> Result<FiniteCAlgebra> {
        let mut elements = self.m_hash_complement()?;
        elements.push(self.truth());
        elements.push(self.falsity());
        FiniteCAlgebra::from_universe(self.width as usize, elements)
            .map_err(|e| Error::Internal(format!("M_#ᶜ ∪ {{T, F}} failed to close: {e}")))
    }
}

/// All of `3^width` in canonical order.
pub(crate) fn all_elements(width: u8) -> Vec<TritVec> {
    let mut out = Vec::with_capacity(3usize.pow(width as u32));
    let mut digits = vec![0u8; width as usize];
    loop {
        let vec = TritVec::from_fn(width as usize, |i| crate::trit::Trit::ALL[digits[i] as usize])
            .expect("width validated by caller");
        out.push(vec);
        // Increment as a base-3 counter, least significant digit last, so
        // the output comes out in canonical (lexicographic) order.
        let mut i = width as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if digits[i] < 2 {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Fixpoint of one-step closure under not/and/or.
pub(crate) fn close_under_ops(seed: BTreeSet<TritVec>) -> BTreeSet<TritVec> {
    let mut universe = seed;
    loop {
        let mut fresh: Vec<TritVec> = Vec::new();
        for a in &universe {
            let n = a.not();
            if !universe.contains(&n) {
                fresh.push(n);
            }
            for b in &universe {
                let m = a.and(b);
                if !universe.contains(&m) {
                    fresh.push(m);
                }
                let j = a.or(b);
                if !universe.contains(&j) {
                    fresh.push(j);
                }
            }
        }
        if fresh.is_empty() {
            return universe;
        }
        universe.extend(fresh);
    }
}

fn check_closed(set: &BTreeSet<TritVec>) -> Result<()> {
    for a in set {
        let n = a.not();
        if !set.contains(&n) {
            return Err(Error::NotClosed {
                op: "not",
                args: a.to_string(),
                result: n.to_string(),
            });
        }
        for b in set {
            let m = a.and(b);
            if !set.contains(&m) {
                return Err(Error::NotClosed {
                    op: "and",
                    args: format!("{a}, {b}"),
                    result: m.to_string(),
                });
            }
            let j = a.or(b);
            if !set.contains(&j) {
                return Err(Error::NotClosed {
                    op: "or",
                    args: format!("{a}, {b}"),
                    result: j.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Checks C1–C7 over `elements` with the supplied operations. Besides
/// verifying real algebras this doubles as a mutation-testing oracle: feed
/// it a perturbed table and it reports which identity breaks first.
pub fn verify_c_axioms_with<N, A, O>(elements: &[TritVec], not: N, and: A, or: O) -> AxiomReport
where
    N: Fn(&TritVec) -> TritVec,
    A: Fn(&TritVec, &TritVec) -> TritVec,
    O: Fn(&TritVec, &TritVec) -> TritVec,
{
    let mut checks = Vec::new();

    checks.push(sweep1(elements, "C1", |a| not(&not(a)) == *a));
    checks.push(sweep2(elements, "C2", |a, b| {
        not(&and(a, b)) == or(&not(a), &not(b))
    }));
    checks.push(sweep3(elements, "C3", |a, b, c| {
        and(&and(a, b), c) == and(a, &and(b, c))
    }));
    checks.push(sweep3(elements, "C4", |a, b, c| {
        and(a, &or(b, c)) == or(&and(a, b), &and(a, c))
    }));
    checks.push(sweep3(elements, "C5", |a, b, c| {
        and(&or(a, b), c) == or(&and(a, c), &and(&not(a), &and(b, c)))
    }));
    checks.push(sweep2(elements, "C6", |a, b| or(a, &and(a, b)) == *a));
    checks.push(sweep2(elements, "C7", |a, b| {
        or(&and(a, b), &and(b, a)) == or(&and(b, a), &and(a, b))
    }));

    AxiomReport { checks }
}

fn sweep1(
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

fn sweep2(
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

fn sweep3(
    elements: &[TritVec],
    name: &'static str,
    law: impl Fn(&TritVec, &TritVec, &TritVec) -> bool,
) -> AxiomCheck {
    let cases = (elements.len() as u128).pow(3);
    for a in elements {
        for b in elements {
            for c in elements {
                if !law(a, b, c) {
                    return AxiomCheck::failed(name, format!("a={a} b={b} c={c}"), cases, true);
                }
            }
        }
    }
    AxiomCheck::passed(name, cases, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trit::Trit;

    fn v(s: &str) -> TritVec {
        TritVec::parse(s).unwrap()
    }

    fn universe(m: &FiniteCAlgebra) -> Vec<String> {
        m.elements().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn generate_from_nothing_gives_the_diagonal() {
        let m0 = FiniteCAlgebra::generate(2, &[]).unwrap();
        assert_eq!(universe(&m0), ["TT", "FF", "UU"]);
    }

    #[test]
    fn generate_from_fu_gives_the_five_element_algebra() {
        let m1 = FiniteCAlgebra::generate(2, &[v("FU")]).unwrap();
        assert_eq!(universe(&m1), ["TT", "TU", "FF", "FU", "UU"]);
    }

    #[test]
    fn generate_width_one_with_t_is_everything() {
        let all = FiniteCAlgebra::generate(1, &[v("T")]).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.is_full());
    }

    #[test]
    fn generation_is_idempotent() {
        for m in FiniteCAlgebra::enumerate_subalgebras(2).unwrap() {
            let again = FiniteCAlgebra::generate(2, m.elements()).unwrap();
            assert_eq!(again, m);
        }
    }

    #[test]
    fn enumerate_width_one_is_just_the_power() {
        let algebras = FiniteCAlgebra::enumerate_subalgebras(1).unwrap();
        assert_eq!(algebras.len(), 1);
        assert!(algebras[0].is_full());
    }

    #[test]
    fn enumerate_width_two_finds_the_five() {
        let algebras = FiniteCAlgebra::enumerate_subalgebras(2).unwrap();
        let universes: Vec<Vec<String>> = algebras.iter().map(universe).collect();
        assert_eq!(
            universes,
            vec![
                vec!["TT", "FF", "UU"],
                vec!["TT", "TU", "FF", "FU", "UU"],
                vec!["TT", "FF", "UT", "UF", "UU"],
                vec!["TT", "TU", "FF", "FU", "UT", "UF", "UU"],
                vec!["TT", "TF", "TU", "FT", "FF", "FU", "UT", "UF", "UU"],
            ]
        );
    }

    /// The enumeration must agree with the feasible brute-force oracle:
    /// closing every subset of the ambient power and deduplicating.
    #[test]
    fn enumeration_matches_powerset_closure_oracle_width_two() {
        let ambient = all_elements(2);
        let mut oracle: BTreeSet<Vec<TritVec>> = BTreeSet::new();
        for mask in 0u32..(1 << ambient.len()) {
            let gens: Vec<TritVec> = ambient
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let m = FiniteCAlgebra::generate(2, &gens).unwrap();
            oracle.insert(m.elements().to_vec());
        }
        let enumerated: BTreeSet<Vec<TritVec>> = FiniteCAlgebra::enumerate_subalgebras(2)
            .unwrap()
            .into_iter()
            .map(|m| m.elements().to_vec())
            .collect();
        assert_eq!(enumerated, oracle);
    }

    #[test]
    fn enumeration_width_above_bound_is_refused() {
        let err = FiniteCAlgebra::enumerate_subalgebras(4).unwrap_err();
        assert!(matches!(err, Error::WidthBound { .. }));
    }

    /// Frozen census of the width-3 subalgebra lattice, cross-checked by
    /// seeded random generator subsets: every closure must already be in
    /// the enumerated list.
    #[test]
    fn enumeration_width_three_census() {
        use rand::{Rng, SeedableRng};

        let algebras = FiniteCAlgebra::enumerate_subalgebras(3).unwrap();
        assert_eq!(algebras.len(), 86);
        let as_sets: BTreeSet<Vec<TritVec>> = algebras
            .iter()
            .map(|m| m.elements().to_vec())
            .collect();

        let ambient = all_elements(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let gens: Vec<TritVec> = ambient
                .iter()
                .filter(|_| rng.random_range(0..8u8) == 0)
                .copied()
                .collect();
            let closed = FiniteCAlgebra::generate(3, &gens).unwrap();
            assert!(as_sets.contains(closed.elements()));
        }
    }

    #[test]
    fn axioms_hold_on_the_full_square() {
        let report = FiniteCAlgebra::full(2).unwrap().verify_c_axioms();
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn axioms_hold_on_every_width_two_subalgebra() {
        for m in FiniteCAlgebra::enumerate_subalgebras(2).unwrap() {
            assert!(m.verify_c_axioms().all_hold());
        }
    }

    /// Mutation oracle: replacing or by the commutative (Kleene) table
    /// breaks C5 and the checker says where.
    #[test]
    fn commutative_or_is_caught_by_c5() {
        let kleene_or = |a: &TritVec, b: &TritVec| {
            TritVec::from_fn(a.width() as usize, |i| match (a.get(i), b.get(i)) {
                (Trit::T, _) | (_, Trit::T) => Trit::T,
                (Trit::F, Trit::F) => Trit::F,
                _ => Trit::U,
            })
            .unwrap()
        };
        let full = FiniteCAlgebra::full(2).unwrap();
        let report = verify_c_axioms_with(
            full.elements(),
            |a| a.not(),
            |a, b| a.and(b),
            kleene_or,
        );
        assert!(!report.all_hold());
        let c5 = report.get("C5").unwrap();
        assert!(!c5.holds);
        assert!(c5.counterexample.is_some());
        // C7 becomes vacuous once or is commutative.
        assert!(report.get("C7").unwrap().holds);
    }

    #[test]
    fn m_hash_of_the_full_square() {
        let full = FiniteCAlgebra::full(2).unwrap();
        let hash: Vec<String> = full.m_hash().iter().map(|e| e.to_string()).collect();
        assert_eq!(hash, ["TT", "TF", "FT", "FF"]);
    }

    #[test]
    fn m_hash_of_m1_is_the_two_constants() {
        let m1 = FiniteCAlgebra::generate(2, &[v("FU")]).unwrap();
        let hash: Vec<String> = m1.m_hash().iter().map(|e| e.to_string()).collect();
        assert_eq!(hash, ["TT", "FF"]);
    }

    #[test]
    fn m_hash_sizes_on_powers() {
        for n in 1..=4usize {
            let full = FiniteCAlgebra::full(n).unwrap();
            assert_eq!(full.m_hash().len(), 1 << n);
        }
    }

    #[test]
    fn m_hash_complement_of_m1() {
        let m1 = FiniteCAlgebra::generate(2, &[v("FU")]).unwrap();
        let comp: Vec<String> = m1
            .m_hash_complement()
            .unwrap()
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(comp, ["TU", "FU", "UU"]);
        let bar = m1.m_hash_complement_algebra().unwrap();
        assert_eq!(universe(&bar), ["TT", "TU", "FF", "FU", "UU"]);
    }

    #[test]
    fn m_hash_complement_closure_holds_on_all_width_two_subalgebras() {
        for m in FiniteCAlgebra::enumerate_subalgebras(2).unwrap() {
            assert!(m.m_hash_complement().is_ok());
            assert!(m.m_hash_complement_algebra().is_ok());
        }
    }

    #[test]
    fn from_universe_rejects_open_sets() {
        let err = FiniteCAlgebra::from_universe(2, [v("TT"), v("FF"), v("UU"), v("TU")])
            .unwrap_err();
        assert!(matches!(err, Error::NotClosed { .. }), "{err}");
    }

    #[test]
    fn from_universe_requires_constants() {
        let err = FiniteCAlgebra::from_universe(2, [v("TT"), v("FF")]).unwrap_err();
        assert_eq!(err, Error::MissingConstant("U".to_string()));
    }

    #[test]
    fn closure_property_exhaustive_on_enumeration() {
        for m in FiniteCAlgebra::enumerate_subalgebras(2).unwrap() {
            for a in m.elements() {
                assert!(m.contains(&a.not()));
                for b in m.elements() {
                    assert!(m.contains(&a.and(b)));
                    assert!(m.contains(&a.or(b)));
                }
            }
        }
    }

    #[test]
    fn boolean_part_is_boolean_closed() {
        for m in FiniteCAlgebra::enumerate_subalgebras(2).unwrap() {
            let hash: BTreeSet<TritVec> = m.m_hash().into_iter().collect();
            let top = m.truth();
            let bottom = m.falsity();
            assert!(hash.contains(&top) && hash.contains(&bottom));
            for a in &hash {
                assert!(hash.contains(&a.not()));
                assert_eq!(a.and(&a.not()), bottom);
                assert_eq!(a.or(&a.not()), top);
                for b in &hash {
                    assert!(hash.contains(&a.and(b)));
                    assert_eq!(a.and(b), b.and(a));
                }
            }
        }
    }
}
