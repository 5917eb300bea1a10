//! Root reflections, Cremona moves and orbits on the Picard lattice.
//!
//! The reflection in a root `r` (`r^2 = -2`, `r.K = 0`) is `D -> D + (D.r) r`.
//! Reflections in `e_i - e_j` swap two exceptional curves; the reflection in
//! `l - e_i - e_j - e_k` is the action of the quadratic Cremona transformation
//! centred at `p_i, p_j, p_k`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{canonical, DivisorClass, Lattice, DEL_PEZZO_4};
use crate::lines::{enumerate_roots, LineLabel, NamedLine};
use crate::par::{self, Execution};

/// Default bound on orbit and group closures. `W(D_5)` has 1920 elements and
/// line orbits have at most 240, so anything larger signals bad input.
pub const ORBIT_CAP: usize = 10_000;

/// An integer matrix acting on coefficient vectors (columns are images of
/// `l, e_1, ..., e_n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeAutomorphism {
    matrix: Vec<Vec<i64>>,
}

impl LatticeAutomorphism {
    pub fn identity(lattice: Lattice) -> Self {
        let r = lattice.rank();
        let matrix = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        LatticeAutomorphism { matrix }
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::new(self.matrix.len() - 1)
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, d: &DivisorClass) -> Result<DivisorClass> {
        let lattice = self.lattice();
        if d.lattice() != lattice {
            return Err(Error::RankMismatch { left: lattice.rank(), right: d.lattice().rank() });
        }
        let coeffs = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(d.coeffs())
                    .try_fold(0i64, |acc, (&m, &x)| m.checked_mul(x).and_then(|p| acc.checked_add(p)))
                    .ok_or(Error::Overflow("automorphism action"))
            })
            .collect::<Result<Vec<_>>>()?;
        lattice.class(&coeffs)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &LatticeAutomorphism) -> Result<LatticeAutomorphism> {
        let r = self.matrix.len();
        if other.matrix.len() != r {
            return Err(Error::RankMismatch { left: r, right: other.matrix.len() });
        }
        let mut matrix = vec![vec![0i64; r]; r];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..r)
                    .try_fold(0i64, |acc, k| {
                        self.matrix[i][k]
                            .checked_mul(other.matrix[k][j])
                            .and_then(|p| acc.checked_add(p))
                    })
                    .ok_or(Error::Overflow("automorphism product"))?;
            }
        }
        Ok(LatticeAutomorphism { matrix })
    }

    pub fn is_identity(&self) -> bool {
        *self == LatticeAutomorphism::identity(self.lattice())
    }

    /// Checks `wD.wE = D.E` on every pair of basis classes.
    pub fn preserves_form(&self) -> bool {
        let basis = self.lattice().basis();
        let images: Vec<DivisorClass> = basis.iter().map(|b| self.apply(b).expect("same lattice")).collect();
        basis.iter().zip(&images).all(|(a, wa)| {
            basis.iter().zip(&images).all(|(b, wb)| a.dot(b) == wa.dot(wb))
        })
    }

    pub fn fixes_canonical(&self) -> bool {
        let k = canonical(self.lattice());
        self.apply(&k).map(|wk| wk == k).unwrap_or(false)
    }
}

pub fn is_root(r: &DivisorClass) -> bool {
    r.dot(r) == -2 && r.dot(&canonical(r.lattice())) == 0
}

/// The reflection `D -> D + (D.r) r` in a root.
pub fn reflection(root: &DivisorClass) -> Result<LatticeAutomorphism> {
    if !is_root(root) {
        return Err(Error::InvalidRoot(root.to_string()));
    }
    let lattice = root.lattice();
    let r = root.coeffs();
    let size = lattice.rank();
    let mut matrix = vec![vec![0i64; size]; size];
    for (j, basis) in lattice.basis().iter().enumerate() {
        let pairing = basis.dot(root);
        for i in 0..size {
            matrix[i][j] = i64::from(i == j) + pairing * r[i];
        }
    }
    Ok(LatticeAutomorphism { matrix })
}

/// Roots whose first nonzero coefficient is positive.
pub fn positive_roots(lattice: Lattice) -> Result<Vec<DivisorClass>> {
    Ok(enumerate_roots(lattice)?
        .into_iter()
        .filter(|r| r.coeffs().iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .collect())
}

/// Reflections in all positive roots; they generate the Weyl group.
pub fn root_reflections(lattice: Lattice) -> Result<Vec<LatticeAutomorphism>> {
    positive_roots(lattice)?.iter().map(reflection).collect()
}

/// The ten roots `l - e_i - e_j - e_k` of the degree-4 del Pezzo lattice.
pub fn cremona_roots() -> Vec<DivisorClass> {
    let lat = DEL_PEZZO_4;
    let mut out = Vec::with_capacity(10);
    for i in 1..=5 {
        for j in i + 1..=5 {
            for k in j + 1..=5 {
                out.push(lat.l() - lat.e(i) - lat.e(j) - lat.e(k));
            }
        }
    }
    out.sort();
    out
}

pub fn orbit(start: &DivisorClass, generators: &[LatticeAutomorphism]) -> Result<Vec<DivisorClass>> {
    orbit_with(start, generators, ORBIT_CAP, Execution::default())
}

/// Breadth-first closure of `{start}` under `generators`, sorted. Each
/// frontier is expanded as one batch; the result does not depend on the
/// schedule.
pub fn orbit_with(
    start: &DivisorClass,
    generators: &[LatticeAutomorphism],
    cap: usize,
    exec: Execution,
) -> Result<Vec<DivisorClass>> {
    let mut seen: HashSet<DivisorClass> = HashSet::from([start.clone()]);
    let mut frontier = vec![start.clone()];
    while !frontier.is_empty() {
        let images = par::map(exec, &frontier, |d| {
            generators.iter().map(|g| g.apply(d)).collect::<Result<Vec<_>>>()
        });
        let mut next = Vec::new();
        for batch in images {
            for image in batch? {
                if seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::OrbitCap { cap });
        }
        frontier = next;
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// All products of `generators`, by breadth-first search on matrices.
pub fn group_closure(
    generators: &[LatticeAutomorphism],
    cap: usize,
    exec: Execution,
) -> Result<Vec<LatticeAutomorphism>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let id = LatticeAutomorphism::identity(first.lattice());
    let mut seen: HashSet<LatticeAutomorphism> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let products = par::map(exec, &frontier, |w| {
            generators.iter().map(|g| g.compose(w)).collect::<Result<Vec<_>>>()
        });
        let mut next = Vec::new();
        for batch in products {
            for w in batch? {
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::OrbitCap { cap });
        }
        frontier = next;
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.matrix.cmp(&b.matrix));
    Ok(out)
}

/// A single Cremona reflection taking a line onto some `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CremonaWitness {
    pub line: NamedLine,
    pub root: DivisorClass,
    pub automorphism: LatticeAutomorphism,
    pub image: LineLabel,
}

/// For a line of the degree-4 del Pezzo lattice other than `delta` and the
/// `e_i`, finds a reflection in some `l - e_i - e_j - e_k` mapping it onto an
/// exceptional curve `e_m` (which is automatically different from `delta`).
/// Roots are tried in lexicographic order.
pub fn cremona_witness(line: &NamedLine) -> Result<CremonaWitness> {
    if line.class.lattice() != DEL_PEZZO_4 {
        return Err(Error::Precondition(format!("{} is not on the degree-4 del Pezzo lattice", line.name)));
    }
    let c = &line.class;
    if c.dot(c) != -1 || c.dot(&canonical(DEL_PEZZO_4)) != -1 {
        return Err(Error::Precondition(format!("{} is not a line", line.name)));
    }
    match line.name {
        LineLabel::Delta => {
            return Err(Error::Precondition("delta is excluded".into()));
        }
        LineLabel::E(i) => {
            return Err(Error::Precondition(format!("e{i} is already exceptional for the blow-down")));
        }
        _ => {}
    }
    for root in cremona_roots() {
        let w = reflection(&root)?;
        let image = w.apply(c)?;
        if let Some(i) = (1..=5).find(|&i| image == DEL_PEZZO_4.e(i)) {
            return Ok(CremonaWitness {
                line: line.clone(),
                root,
                automorphism: w,
                image: LineLabel::E(i),
            });
        }
    }
    Err(Error::NoWitness(line.name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::enumerate_lines;

    const L: Lattice = DEL_PEZZO_4;

    #[test]
    fn reflection_examples() {
        let r = L.l() - L.e(1) - L.e(2) - L.e(3);
        let w = reflection(&r).unwrap();
        assert_eq!(w.apply(&L.l()).unwrap(), 2 * L.l() - L.e(1) - L.e(2) - L.e(3));
        assert_eq!(w.apply(&L.e(4)).unwrap(), L.e(4));
        let swap = reflection(&(L.e(1) - L.e(2))).unwrap();
        assert_eq!(swap.apply(&L.e(1)).unwrap(), L.e(2));
    }

    #[test]
    fn non_root_is_rejected() {
        assert!(matches!(reflection(&L.e(1)), Err(Error::InvalidRoot(_))));
        assert!(matches!(reflection(&(L.l() - L.e(1))), Err(Error::InvalidRoot(_))));
    }

    #[test]
    fn twenty_positive_roots_give_involutive_isometries() {
        let roots = positive_roots(L).unwrap();
        assert_eq!(roots.len(), 20);
        for r in &roots {
            let w = reflection(r).unwrap();
            assert!(w.compose(&w).unwrap().is_identity());
            assert!(w.preserves_form());
            assert!(w.fixes_canonical());
            assert_eq!(w.apply(r).unwrap(), -r);
        }
    }

    #[test]
    fn orbit_of_e1_is_all_lines() {
        let gens = root_reflections(L).unwrap();
        let orb = orbit(&L.e(1), &gens).unwrap();
        let lines: Vec<_> = enumerate_lines(L).unwrap().into_iter().map(|l| l.class).collect();
        assert_eq!(orb, lines);
        let seq = orbit_with(&L.e(1), &gens, ORBIT_CAP, Execution::Sequential).unwrap();
        assert_eq!(orb, seq);
    }

    #[test]
    fn trivial_orbits() {
        let gens = root_reflections(L).unwrap();
        assert_eq!(orbit(&L.canonical(), &gens).unwrap(), vec![L.canonical()]);
        assert_eq!(orbit(&L.e(1), &[]).unwrap(), vec![L.e(1)]);
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let gens = root_reflections(L).unwrap();
        assert_eq!(orbit_with(&L.e(1), &gens, 10, Execution::Sequential), Err(Error::OrbitCap { cap: 10 }));
    }

    #[test]
    fn weyl_group_of_d5_has_1920_elements() {
        let gens = root_reflections(L).unwrap();
        let group = group_closure(&gens, ORBIT_CAP, Execution::default()).unwrap();
        assert_eq!(group.len(), 1920);
    }

    #[test]
    fn witnesses_for_every_admissible_line() {
        let lines = enumerate_lines(L).unwrap();
        let admissible: Vec<_> = lines
            .iter()
            .filter(|l| !matches!(l.name, LineLabel::E(_) | LineLabel::Delta))
            .collect();
        assert_eq!(admissible.len(), 10);
        for line in admissible {
            let w = cremona_witness(line).unwrap();
            let image = w.automorphism.apply(&line.class).unwrap();
            assert_eq!(Some(image), w.image.class());
            assert_ne!(w.image, LineLabel::Delta);
        }
    }

    #[test]
    fn witness_examples() {
        let lines = enumerate_lines(L).unwrap();
        let by = |name: LineLabel| lines.iter().find(|l| l.name == name).unwrap().clone();
        let w = cremona_witness(&by(LineLabel::EPrime(1))).unwrap();
        assert_eq!(w.root, L.l() - L.e(1) - L.e(2) - L.e(3));
        assert_eq!(w.image, LineLabel::E(1));
        // gamma . (l - e_i - e_4 - e_5) = -1, so the reflection subtracts the root
        let w = cremona_witness(&by(LineLabel::Gamma)).unwrap();
        assert_eq!(w.automorphism.apply(&by(LineLabel::Gamma).class).unwrap(), w.image.class().unwrap());
        assert!(matches!(cremona_witness(&by(LineLabel::E(1))), Err(Error::Precondition(_))));
        assert!(matches!(cremona_witness(&by(LineLabel::Delta)), Err(Error::Precondition(_))));
    }
}
