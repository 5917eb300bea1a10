//! Effectivity and `h^0` on the degree-4 del Pezzo surface.
//!
//! Imported fact: the effective cone of a del Pezzo surface of degree 4 is
//! generated by its sixteen lines, nef classes are base-point free and have no
//! higher cohomology. So if `D.E < 0` for a line `E`, then `E` is a fixed
//! component of `|D|` and `h^0(D) = h^0(D - E)`; once `D` is nef,
//! `h^0(D) = chi(D)` unless `D = 0`. A class of negative anticanonical degree
//! is never effective because `-K` is ample.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{rr_chi, DivisorClass, DEL_PEZZO_4};
use crate::lines::{enumerate_conic_classes, enumerate_lines, LineLabel, NamedLine};
use crate::par::{self, Execution};

fn del_pezzo_lines() -> &'static [NamedLine] {
    static LINES: OnceLock<Vec<NamedLine>> = OnceLock::new();
    LINES.get_or_init(|| enumerate_lines(DEL_PEZZO_4).expect("n = 5 is supported"))
}

/// Order in which lines are tried while peeling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PeelOrder {
    #[default]
    Lexicographic,
    Reversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PeelEnd {
    /// Reached a class meeting every line nonnegatively.
    Nef,
    /// Reached a class of negative anticanonical degree.
    NegativeDegree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H0Result {
    pub value: i64,
    /// Lines subtracted, with multiplicity, in the order they were peeled.
    pub peel_trace: Vec<(LineLabel, u32)>,
    /// The class peeling stopped at: nef, or of negative degree.
    pub nef_part: DivisorClass,
    pub end: PeelEnd,
}

fn check_lattice(d: &DivisorClass) -> Result<()> {
    if d.lattice() != DEL_PEZZO_4 {
        return Err(Error::Unsupported {
            n: d.lattice().n(),
            reason: "peeling needs the degree-4 del Pezzo lattice",
        });
    }
    Ok(())
}

pub fn h0(d: &DivisorClass) -> Result<H0Result> {
    h0_with_order(d, PeelOrder::default())
}

pub fn h0_with_order(d: &DivisorClass, order: PeelOrder) -> Result<H0Result> {
    check_lattice(d)?;
    let lines = del_pezzo_lines();
    let mut current = d.clone();
    let mut trace: Vec<(LineLabel, u32)> = Vec::new();
    loop {
        if current.anticanonical_degree() < 0 {
            return Ok(H0Result { value: 0, peel_trace: trace, nef_part: current, end: PeelEnd::NegativeDegree });
        }
        let negative = |line: &&NamedLine| current.dot(&line.class) < 0;
        let hit = match order {
            PeelOrder::Lexicographic => lines.iter().find(negative),
            PeelOrder::Reversed => lines.iter().rev().find(negative),
        };
        let Some(line) = hit else { break };
        current = current.checked_sub(&line.class)?;
        match trace.last_mut() {
            Some((name, mult)) if *name == line.name => *mult += 1,
            _ => trace.push((line.name.clone(), 1)),
        }
    }
    let value = if current.is_zero() {
        1
    } else if current.anticanonical_degree() > 0 {
        rr_chi(&current)
    } else {
        // nonzero nef classes have positive degree against the ample -K
        0
    };
    Ok(H0Result { value, peel_trace: trace, nef_part: current, end: PeelEnd::Nef })
}

pub fn is_effective(d: &DivisorClass) -> Result<bool> {
    Ok(h0(d)?.value > 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Ne1eVerdict {
    /// `h^0(d) <= 1`.
    H0AtMostOne,
    /// `h^0(d) > 1` but `-K - 2d` is not effective.
    ResidualNotEffective,
    /// Both conditions hold; a counterexample.
    Accepted,
}

impl Ne1eVerdict {
    pub fn key(self) -> &'static str {
        match self {
            Ne1eVerdict::H0AtMostOne => "h0_at_most_one",
            Ne1eVerdict::ResidualNotEffective => "residual_not_effective",
            Ne1eVerdict::Accepted => "accepted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ne1eOutcome {
    /// Every candidate with its verdict, lexicographically by class.
    pub verdicts: Vec<(DivisorClass, Ne1eVerdict)>,
}

impl Ne1eOutcome {
    pub fn candidates(&self) -> impl Iterator<Item = &DivisorClass> {
        self.verdicts.iter().map(|(d, _)| d)
    }

    /// Classes `d` with `h^0(d) > 1` and `-K - 2d` effective.
    pub fn found(&self) -> Vec<DivisorClass> {
        self.verdicts
            .iter()
            .filter(|(_, v)| *v == Ne1eVerdict::Accepted)
            .map(|(d, _)| d.clone())
            .collect()
    }

    /// Count per verdict; every verdict appears, possibly with zero.
    pub fn histogram(&self) -> BTreeMap<Ne1eVerdict, usize> {
        let mut h: BTreeMap<Ne1eVerdict, usize> = [
            (Ne1eVerdict::H0AtMostOne, 0),
            (Ne1eVerdict::ResidualNotEffective, 0),
            (Ne1eVerdict::Accepted, 0),
        ]
        .into();
        for (_, v) in &self.verdicts {
            *h.entry(*v).or_default() += 1;
        }
        h
    }
}

/// Effective classes `d` with `d.(-K) <= 2`.
///
/// If `-K - 2d` is effective then pairing with the nef class `-K` gives
/// `4 - 2 d.(-K) >= 0`, i.e. `d.(-K) <= 2`; and `h^0(d) > 1` forces `d`
/// effective. Since the effective monoid is generated by lines, each of
/// anticanonical degree 1, such `d` is a sum of at most two lines. Conic
/// classes are included explicitly as a cross-check; they are sums of two
/// meeting lines.
pub fn ne1e_candidates() -> Vec<DivisorClass> {
    let lines = del_pezzo_lines();
    let mut set: BTreeSet<DivisorClass> = BTreeSet::new();
    set.insert(DEL_PEZZO_4.zero());
    for (i, a) in lines.iter().enumerate() {
        set.insert(a.class.clone());
        for b in &lines[i..] {
            set.insert(&a.class + &b.class);
        }
    }
    set.extend(enumerate_conic_classes(DEL_PEZZO_4).expect("n = 5 is supported"));
    set.into_iter().collect()
}

pub fn ne1e_verdict(d: &DivisorClass) -> Result<Ne1eVerdict> {
    if h0(d)?.value <= 1 {
        return Ok(Ne1eVerdict::H0AtMostOne);
    }
    let residual = DEL_PEZZO_4.anticanonical().checked_sub(&d.checked_scale(2)?)?;
    Ok(if is_effective(&residual)? { Ne1eVerdict::Accepted } else { Ne1eVerdict::ResidualNotEffective })
}

pub fn ne1e_search() -> Result<Ne1eOutcome> {
    ne1e_search_with(Execution::default())
}

/// Runs [`ne1e_verdict`] over [`ne1e_candidates`]; the expected outcome has no
/// accepted candidate.
pub fn ne1e_search_with(exec: Execution) -> Result<Ne1eOutcome> {
    let candidates = ne1e_candidates();
    let verdicts = par::map(exec, &candidates, ne1e_verdict)
        .into_iter()
        .zip(candidates)
        .map(|(v, d)| v.map(|v| (d, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ne1eOutcome { verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::conic_f;

    const L: crate::Lattice = DEL_PEZZO_4;

    fn cls(c: &[i64]) -> DivisorClass {
        L.class(c).unwrap()
    }

    #[test]
    fn effectivity_examples() {
        assert!(is_effective(&L.anticanonical()).unwrap());
        assert!(!is_effective(&cls(&[1, -1, -1, -1, 0, 0])).unwrap());
        let r = h0(&(L.e(2) - L.e(1))).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.peel_trace, vec![(LineLabel::E(2), 1)]);
        assert_eq!(r.nef_part, -L.e(1));
        assert_eq!(r.end, PeelEnd::NegativeDegree);
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0(&cls(&[3, -1, -1, -1, 0, 0])).unwrap().value, 7);
        assert_eq!(h0(&conic_f(1)).unwrap().value, 2);
        assert_eq!(h0(&L.l()).unwrap().value, 3);
        assert_eq!(h0(&L.anticanonical()).unwrap().value, 5);
        assert_eq!(h0(&L.zero()).unwrap().value, 1);
    }

    #[test]
    fn line_has_one_section() {
        let r = h0(&L.e(1)).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.nef_part.is_zero());
        assert_eq!(r.peel_trace, vec![(LineLabel::E(1), 1)]);
    }

    #[test]
    fn fixed_part_with_multiplicity() {
        // l + 2 e1: e1 is peeled twice, leaving l
        let r = h0(&(L.l() + 2 * L.e(1))).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.peel_trace, vec![(LineLabel::E(1), 2)]);
        assert_eq!(r.nef_part, L.l());
    }

    #[test]
    fn other_lattices_are_unsupported() {
        assert!(matches!(h0(&crate::Lattice::new(4).l()), Err(Error::Unsupported { n: 4, .. })));
    }

    #[test]
    fn f1_is_rejected_on_its_residual() {
        let residual = L.anticanonical() - 2 * conic_f(1);
        assert_eq!(residual, cls(&[1, 1, -1, -1, -1, -1]));
        assert!(!is_effective(&residual).unwrap());
        assert_eq!(ne1e_verdict(&conic_f(1)).unwrap(), Ne1eVerdict::ResidualNotEffective);
        assert_eq!(ne1e_verdict(&L.e(1)).unwrap(), Ne1eVerdict::H0AtMostOne);
    }

    #[test]
    fn search_finds_nothing() {
        let out = ne1e_search().unwrap();
        assert!(out.found().is_empty());
        assert_eq!(out.verdicts.len(), 123);
        assert_eq!(out, ne1e_search_with(Execution::Sequential).unwrap());
    }
}
