//! The if-then-else action and C-set axiom verification.
//!
//! A C-set is a pointed set acted on by a C-algebra through a ternary
//! `condition[then, else]` operation subject to the eight laws EC1–EC8
//! (EC8 is an implication, the others are identities). Two models are
//! covered here:
//!
//! * the inbuilt action of an algebra on itself,
//!   `α[β, γ] = (α and β) or (not α and γ)`, with base point `U`;
//! * the functional model: pointed maps on `X ∪ {⊥}` acted on by `3^X`,
//!   branching coordinatewise on the condition.
//!
//! Axiom sweeps are exhaustive when the tuple space fits the given budget
//! and fall back to a seeded uniform sample otherwise, so verdicts are
//! reproducible either way.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::FiniteCAlgebra;
use crate::error::{Error, Result};
use crate::report::{AxiomCheck, AxiomReport};
use crate::vector::TritVec;

/// Widths for which the functional model can enumerate its maps.
pub const FUNCTIONAL_WIDTH_BOUND: u8 = 5;

/// The inbuilt if-then-else: `(cond and then) or (not cond and else)`.
pub fn ite(cond: &TritVec, then: &TritVec, els: &TritVec) -> TritVec {
    cond.and(then).or(&cond.not().and(els))
}

/// A map on the pointed set `X_⊥ = {0, …, width−1} ∪ {⊥}` fixing `⊥`.
/// The base point is stored as index `width`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointedMap {
    width: u8,
    table: Vec<u8>,
}

impl PointedMap {
    /// Builds a map from its full table of `width + 1` images; the last
    /// entry is the image of `⊥` and must be `⊥` itself.
    pub fn new(width: usize, table: Vec<u8>) -> Result<Self> {
        let probe = TritVec::undefined(width)?;
        let w = probe.width();
        if table.len() != w as usize + 1 {
            return Err(Error::Internal(format!(
                "pointed map table must have {} entries, got {}",
                w as usize + 1,
                table.len()
            )));
        }
        if table[w as usize] != w {
            return Err(Error::BasePointNotFixed);
        }
        for &img in &table {
            if img > w {
                return Err(Error::CoordinateOutOfRange {
                    coordinate: img as usize,
                    width: w,
                });
            }
        }
        Ok(PointedMap { width: w, table })
    }

    /// Builds a map from the images of the non-base points only.
    pub fn from_images(width: usize, images: &[u8]) -> Result<Self> {
        let mut table = images.to_vec();
        table.push(width as u8);
        Self::new(width, table)
    }

    /// The base point of the pointed set, as an index.
    pub fn base_point(width: u8) -> u8 {
        width
    }

    /// The constant-`⊥` map, which is the base point of the C-set of maps.
    pub fn constant_bottom(width: usize) -> Result<Self> {
        let probe = TritVec::undefined(width)?;
        let w = probe.width();
        Ok(PointedMap {
            width: w,
            table: vec![w; w as usize + 1],
        })
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn apply(&self, point: u8) -> u8 {
        self.table[point as usize]
    }
}

impl fmt::Display for PointedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for x in 0..self.width {
            if x > 0 {
                write!(f, " ")?;
            }
            let img = self.table[x as usize];
            if img == self.width {
                write!(f, "{x}->_")?;
            } else {
                write!(f, "{x}->{img}")?;
            }
        }
        write!(f, "]")
    }
}

/// All `(width + 1)^width` maps fixing `⊥`, in lexicographic table order.
pub fn all_pointed_maps(width: usize) -> Result<Vec<PointedMap>> {
    let probe = TritVec::undefined(width)?;
    let w = probe.width();
    if w > FUNCTIONAL_WIDTH_BOUND {
        return Err(Error::WidthBound {
            what: "functional model",
            width: w,
            bound: FUNCTIONAL_WIDTH_BOUND,
        });
    }
    let n = w as usize;
    let count = (n + 1).pow(n as u32);
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let mut rem = code;
        let mut images = vec![0u8; n];
        for img in images.iter_mut() {
            *img = (rem % (n + 1)) as u8;
            rem /= n + 1;
        }
        out.push(PointedMap::from_images(width, &images)?);
    }
    Ok(out)
}

/// The functional if-then-else: branch on the condition coordinatewise,
/// sending undecided coordinates to `⊥`.
pub fn functional_action(cond: &TritVec, f: &PointedMap, g: &PointedMap) -> PointedMap {
    assert_eq!(cond.width(), f.width(), "condition/map width mismatch");
    assert_eq!(f.width(), g.width(), "map width mismatch");
    let w = f.width();
    let mut table = vec![w; w as usize + 1];
    for x in 0..w {
        table[x as usize] = match cond.get(x as usize) {
            crate::trit::Trit::T => f.apply(x),
            crate::trit::Trit::F => g.apply(x),
            crate::trit::Trit::U => w,
        };
    }
    PointedMap { width: w, table }
}

/// Exhaustively checks EC1–EC8 for the algebra acting on itself.
/// The largest sweep is `|M|⁶` tuples (EC2), so keep this to desk-size
/// universes; [`verify_cset_algebraic_budgeted`] samples instead.
pub fn verify_cset_algebraic(m: &FiniteCAlgebra) -> AxiomReport {
    verify_cset_algebraic_budgeted(m, u64::MAX, 0)
}

pub fn verify_cset_algebraic_budgeted(m: &FiniteCAlgebra, budget: u64, seed: u64) -> AxiomReport {
    verify_cset_with_action(
        m.elements(),
        m.elements(),
        &m.undefined(),
        ite,
        budget,
        seed,
    )
}

/// Same sweep with a caller-supplied action; mutating the action lets the
/// checker serve as its own test oracle.
pub fn verify_cset_algebraic_with_action<A>(
    m: &FiniteCAlgebra,
    action: A,
    budget: u64,
    seed: u64,
) -> AxiomReport
where
    A: Fn(&TritVec, &TritVec, &TritVec) -> TritVec + Sync,
{
    verify_cset_with_action(
        m.elements(),
        m.elements(),
        &m.undefined(),
        action,
        budget,
        seed,
    )
}

/// Checks EC1–EC8 for the functional model over `3^width`.
pub fn verify_cset_functional(width: usize, budget: u64, seed: u64) -> Result<AxiomReport> {
    let algebra = FiniteCAlgebra::full(width)?;
    let states = all_pointed_maps(width)?;
    let bottom = PointedMap::constant_bottom(width)?;
    Ok(verify_cset_with_action(
        algebra.elements(),
        &states,
        &bottom,
        functional_action,
        budget,
        seed,
    ))
}

/// The generic EC1–EC8 sweep over an arbitrary pointed state set.
pub fn verify_cset_with_action<S, A>(
    algebra: &[TritVec],
    states: &[S],
    bottom: &S,
    action: A,
    budget: u64,
    seed: u64,
) -> AxiomReport
where
    S: Clone + Eq + Send + Sync + fmt::Display,
    A: Fn(&TritVec, &S, &S) -> S + Sync,
{
    assert!(!algebra.is_empty() && !states.is_empty());
    let width = algebra[0].width() as usize;
    let undef = TritVec::undefined(width).expect("valid width");
    let falsity = TritVec::falsity(width).expect("valid width");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let act = &action;

    let mut checks = Vec::new();
    checks.push(sweep(
        "EC1", algebra, states, 0, 2, budget, &mut rng,
        |_a, st| act(&undef, st[0], st[1]) == *bottom,
    ));
    checks.push(sweep(
        "EC2", algebra, states, 2, 4, budget, &mut rng,
        |a, st| {
            act(&a[0], &act(&a[1], st[0], st[1]), &act(&a[1], st[2], st[3]))
                == act(&a[1], &act(&a[0], st[0], st[2]), &act(&a[0], st[1], st[3]))
        },
    ));
    checks.push(sweep(
        "EC3", algebra, states, 1, 3, budget, &mut rng,
        |a, st| act(&a[0], &act(&a[0], st[0], st[1]), st[2]) == act(&a[0], st[0], st[2]),
    ));
    checks.push(sweep(
        "EC4", algebra, states, 1, 3, budget, &mut rng,
        |a, st| act(&a[0], st[0], &act(&a[0], st[1], st[2])) == act(&a[0], st[0], st[2]),
    ));
    checks.push(sweep(
        "EC5", algebra, states, 1, 2, budget, &mut rng,
        |a, st| act(&a[0].not(), st[0], st[1]) == act(&a[0], st[1], st[0]),
    ));
    checks.push(sweep(
        "EC6", algebra, states, 0, 2, budget, &mut rng,
        |_a, st| act(&falsity, st[0], st[1]) == *st[1],
    ));
    checks.push(sweep(
        "EC7", algebra, states, 2, 2, budget, &mut rng,
        |a, st| act(&a[0].and(&a[1]), st[0], st[1]) == act(&a[0], &act(&a[1], st[0], st[1]), st[1]),
    ));
    checks.push(sweep(
        "EC8", algebra, states, 2, 2, budget, &mut rng,
        |a, st| {
            // Premise-filtered implication: vacuously true tuples pass.
            if act(&a[0], st[0], st[1]) != act(&a[0], st[1], st[1]) {
                return true;
            }
            let meet = a[0].and(&a[1]);
            act(&meet, st[0], st[1]) == act(&meet, st[1], st[1])
        },
    ));
    AxiomReport { checks }
}

#[allow(clippy::too_many_arguments)]
fn sweep<S, C>(
    name: &'static str,
    algebra: &[TritVec],
    states: &[S],
    alg_arity: u32,
    state_arity: u32,
    budget: u64,
    rng: &mut ChaCha8Rng,
    check: C,
) -> AxiomCheck
where
    S: Clone + Eq + Send + Sync + fmt::Display,
    C: Fn(&[TritVec], &[&S]) -> bool + Sync,
{
    let total = (algebra.len() as u128).pow(alg_arity) * (states.len() as u128).pow(state_arity);

    let decode = |mut idx: u128| -> (Vec<TritVec>, Vec<&S>) {
        let mut alg = Vec::with_capacity(alg_arity as usize);
        for _ in 0..alg_arity {
            alg.push(algebra[(idx % algebra.len() as u128) as usize]);
            idx /= algebra.len() as u128;
        }
        let mut st = Vec::with_capacity(state_arity as usize);
        for _ in 0..state_arity {
            st.push(&states[(idx % states.len() as u128) as usize]);
            idx /= states.len() as u128;
        }
        (alg, st)
    };

    let run = |idx: u128| -> bool {
        let (alg, st) = decode(idx);
        check(&alg, &st)
    };

    let render = |idx: u128| -> String {
        let (alg, st) = decode(idx);
        let alg_names = ["alpha", "beta"];
        let st_names = ["s", "t", "u", "v"];
        let mut parts: Vec<String> = alg
            .iter()
            .enumerate()
            .map(|(i, x)| format!("{}={x}", alg_names[i]))
            .collect();
        parts.extend(
            st.iter()
                .enumerate()
                .map(|(i, x)| format!("{}={x}", st_names[i])),
        );
        parts.join(" ")
    };

    if total <= budget as u128 {
        let first = (0..total as u64)
            .into_par_iter()
            .find_first(|&idx| !run(idx as u128));
        match first {
            Some(idx) => AxiomCheck::failed(name, render(idx as u128), total, true),
            None => AxiomCheck::passed(name, total, true),
        }
    } else {
        for _ in 0..budget {
            let idx = rng.random_range(0..total);
            if !run(idx) {
                return AxiomCheck::failed(name, render(idx), budget as u128, false);
            }
        }
        AxiomCheck::passed(name, budget as u128, false)
    }
}
