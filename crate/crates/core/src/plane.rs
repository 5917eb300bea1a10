//! Exact rational geometry of five points in the projective plane and the
//! nine lines of the Burniat arrangement through them.
//!
//! Lines through pairs of points are labelled as on the blow-up: `e'_j` joins
//! the two points of `{p_1, p_2, p_3}` other than `p_j`, `g_j` joins `p_4` and
//! `p_j`, `h_j` joins `p_5` and `p_j` (`j = 1, 2, 3`). The branch components
//! are `B_1 = e_1 + e'_1 + g_2 + h_2`, `B_2 = e_2 + e'_2 + g_3 + h_3`,
//! `B_3 = e_3 + e'_3 + g_1 + h_1`.
//!
//! "General position" for five points means no three are collinear, which
//! is what makes the blow-up a del Pezzo surface of degree 4.
//!
//! Two distinct lines of the arrangement that share a point `p_i` meet only
//! there, and no three lines have pairwise disjoint pairs of defining points
//! (that would take six points). So under general position the arrangement
//! has no triple point away from `p_1, ..., p_5`; [`normal_crossing`] checks
//! this exactly anyway, and [`find_concurrencies`] is the underlying detector
//! for arbitrary line sets.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, DEL_PEZZO_4};
use crate::lines::LineLabel;
use crate::par::{self, Execution};
use crate::report::CheckReport;

type Q = BigRational;

fn normalize(mut c: [Q; 3]) -> Option<[Q; 3]> {
    let lead = c.iter().find(|x| !x.is_zero())?.clone();
    for x in c.iter_mut() {
        *x = &*x / &lead;
    }
    Some(c)
}

fn cross(a: &[Q; 3], b: &[Q; 3]) -> [Q; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Q; 3], b: &[Q; 3]) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn det3(a: &[Q; 3], b: &[Q; 3], c: &[Q; 3]) -> Q {
    dot(a, &cross(b, c))
}

fn fmt_coords(c: &[Q; 3], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "({}:{}:{})", c[0], c[1], c[2])
}

/// A point of the plane with first nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint([Q; 3]);

/// A line `a x + b y + c z = 0`, normalized like points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjLine([Q; 3]);

impl ProjPoint {
    pub fn new(x: Q, y: Q, z: Q) -> Result<Self> {
        normalize([x, y, z])
            .map(ProjPoint)
            .ok_or_else(|| Error::InvalidInput("(0:0:0) is not a point".into()))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        let q = |v: i64| Q::from_integer(BigInt::from(v));
        ProjPoint::new(q(x), q(y), q(z))
    }

    pub fn coords(&self) -> &[Q; 3] {
        &self.0
    }

    pub fn join(&self, other: &ProjPoint) -> Result<ProjLine> {
        normalize(cross(&self.0, &other.0))
            .map(ProjLine)
            .ok_or_else(|| Error::InvalidInput(format!("cannot join {self} with itself")))
    }

    pub fn lies_on(&self, line: &ProjLine) -> bool {
        dot(&self.0, &line.0).is_zero()
    }
}

impl ProjLine {
    pub fn coords(&self) -> &[Q; 3] {
        &self.0
    }

    /// Intersection point; `None` for equal lines.
    pub fn meet(&self, other: &ProjLine) -> Option<ProjPoint> {
        normalize(cross(&self.0, &other.0)).map(ProjPoint)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(&self.0, f)
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        fmt_coords(&self.0, f)?;
        write!(f, "]")
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses one point per line as three integers or rationals (`a b c`, e.g.
/// `1 2/3 -5`). Blank lines and `#` comments are skipped.
pub fn parse_points(text: &str) -> Result<Vec<ProjPoint>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::InvalidInput(format!("line {}: expected 3 coordinates, got {}", no + 1, fields.len())));
        }
        let coords = fields
            .iter()
            .map(|s| Q::from_str(s).map_err(|_| Error::InvalidInput(format!("line {}: bad number {s:?}", no + 1))))
            .collect::<Result<Vec<_>>>()?;
        let [x, y, z]: [Q; 3] = coords.try_into().expect("three fields");
        out.push(ProjPoint::new(x, y, z).map_err(|e| Error::InvalidInput(format!("line {}: {e}", no + 1)))?);
    }
    Ok(out)
}

/// `(1:0:0), (0:1:0), (0:0:1), (1:1:1), (1:2:3)`.
pub fn default_points() -> [ProjPoint; 5] {
    [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
        .map(|(x, y, z)| ProjPoint::from_ints(x, y, z).expect("nonzero"))
}

fn check_five_distinct(points: &[ProjPoint]) -> Result<()> {
    if points.len() != 5 {
        return Err(Error::InvalidInput(format!("expected 5 points, got {}", points.len())));
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if points[i] == points[j] {
                return Err(Error::InvalidInput(format!("p{} and p{} coincide at {}", i + 1, j + 1, points[i])));
            }
        }
    }
    Ok(())
}

/// Collinear triples among the points, 1-based.
pub fn collinear_triples(points: &[ProjPoint]) -> Vec<[usize; 3]> {
    let n = points.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if det3(&points[i].0, &points[j].0, &points[k].0).is_zero() {
                    out.push([i + 1, j + 1, k + 1]);
                }
            }
        }
    }
    out
}

/// True iff no three of the five (distinct) points are collinear.
pub fn general_position(points: &[ProjPoint]) -> Result<bool> {
    check_five_distinct(points)?;
    Ok(collinear_triples(points).is_empty())
}

/// The two defining points of an arrangement line, 1-based.
pub fn defining_points(label: &LineLabel) -> Option<(usize, usize)> {
    match *label {
        LineLabel::EPrime(1) => Some((2, 3)),
        LineLabel::EPrime(2) => Some((1, 3)),
        LineLabel::EPrime(3) => Some((1, 2)),
        LineLabel::G(j) if (1..=3).contains(&j) => Some((4, j)),
        LineLabel::H(j) if (1..=3).contains(&j) => Some((5, j)),
        _ => None,
    }
}

/// Labels of the nine arrangement lines.
pub fn arrangement_labels() -> [LineLabel; 9] {
    [
        LineLabel::EPrime(1),
        LineLabel::EPrime(2),
        LineLabel::EPrime(3),
        LineLabel::G(1),
        LineLabel::G(2),
        LineLabel::G(3),
        LineLabel::H(1),
        LineLabel::H(2),
        LineLabel::H(3),
    ]
}

/// Line components of `B_i`: `e'_i, g_{i+1}, h_{i+1}` with indices mod 3.
pub fn branch_lines(i: usize) -> [LineLabel; 3] {
    assert!((1..=3).contains(&i));
    let next = i % 3 + 1;
    [LineLabel::EPrime(i), LineLabel::G(next), LineLabel::H(next)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurniatArrangement {
    points: [ProjPoint; 5],
    lines: Vec<(LineLabel, ProjLine)>,
}

impl BurniatArrangement {
    /// Requires five pairwise distinct points; general position is checked
    /// by [`normal_crossing`].
    pub fn new(points: &[ProjPoint]) -> Result<Self> {
        check_five_distinct(points)?;
        let points: [ProjPoint; 5] = points.to_vec().try_into().expect("five points");
        let lines = arrangement_labels()
            .into_iter()
            .map(|label| {
                let (a, b) = defining_points(&label).expect("arrangement label");
                let line = points[a - 1].join(&points[b - 1])?;
                Ok((label, line))
            })
            .collect::<Result<_>>()?;
        Ok(BurniatArrangement { points, lines })
    }

    pub fn points(&self) -> &[ProjPoint; 5] {
        &self.points
    }

    pub fn lines(&self) -> &[(LineLabel, ProjLine)] {
        &self.lines
    }

    pub fn line(&self, label: &LineLabel) -> Option<&ProjLine> {
        self.lines.iter().find(|(l, _)| l == label).map(|(_, line)| line)
    }

    /// Indices (1-based) of the points lying on `line`.
    pub fn points_on(&self, line: &ProjLine) -> Vec<usize> {
        (1..=5).filter(|&i| self.points[i - 1].lies_on(line)).collect()
    }
}

/// Class of the strict transform: `l` minus the `e_i` of every `p_i` on the line.
pub fn class_of_line(arr: &BurniatArrangement, label: &LineLabel) -> Result<DivisorClass> {
    let line = arr
        .line(label)
        .ok_or_else(|| Error::InvalidInput(format!("{label} is not a line of the arrangement")))?;
    Ok(arr
        .points_on(line)
        .into_iter()
        .fold(DEL_PEZZO_4.l(), |acc, i| acc - DEL_PEZZO_4.e(i)))
}

/// Three or more lines through a point not in the allowed set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Concurrency {
    /// Indices into the input line slice, ascending.
    pub lines: [usize; 3],
    pub point: ProjPoint,
}

/// Every triple of pairwise distinct lines through a common point outside
/// `allowed`, found by exact 3x3 determinants.
pub fn find_concurrencies(lines: &[ProjLine], allowed: &[ProjPoint]) -> Vec<Concurrency> {
    let n = lines.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let Some(point) = lines[i].meet(&lines[j]) else { continue };
            for k in j + 1..n {
                if lines[k] == lines[i] || lines[k] == lines[j] {
                    continue;
                }
                if det3(&lines[i].0, &lines[j].0, &lines[k].0).is_zero() && !allowed.contains(&point) {
                    out.push(Concurrency { lines: [i, j, k], point: point.clone() });
                }
            }
        }
    }
    out
}

/// Re-checks a concurrency witness by direct incidence.
pub fn witness_holds(lines: &[ProjLine], allowed: &[ProjPoint], w: &Concurrency) -> bool {
    let distinct = w.lines[0] != w.lines[1] && w.lines[1] != w.lines[2] && w.lines[0] != w.lines[2];
    distinct
        && w.lines.iter().all(|&i| i < lines.len() && w.point.lies_on(&lines[i]))
        && !allowed.contains(&w.point)
}

/// Concurrencies of the arrangement away from `p_1, ..., p_5`, with labels.
pub fn arrangement_concurrencies(arr: &BurniatArrangement) -> Vec<([LineLabel; 3], Concurrency)> {
    let lines: Vec<ProjLine> = arr.lines.iter().map(|(_, l)| l.clone()).collect();
    find_concurrencies(&lines, &arr.points)
        .into_iter()
        .map(|c| (c.lines.map(|i| arr.lines[i].0.clone()), c))
        .collect()
}

/// Certifies that `B_1 + B_2 + B_3` is a normal crossing divisor on the
/// blow-up: points in general position, nine distinct lines, each passing
/// through exactly its two defining points, no triple point off the blown-up
/// points, and the components of each `B_i` disjoint after blowing up.
pub fn normal_crossing(arr: &BurniatArrangement) -> CheckReport {
    let mut report = CheckReport::new(
        "plane.normal_crossing",
        "Burniat branch arrangement",
        "B := B1 + B2 + B3 is a normal crossing divisor",
    );
    report.axiom("five points with no three collinear blow up to a del Pezzo surface of degree 4");
    let triples = collinear_triples(&arr.points);
    report.claim_holds(
        "general position",
        "no three of p1..p5 collinear",
        triples.is_empty(),
        if triples.is_empty() { "none collinear".to_string() } else { format!("collinear triples {triples:?}") },
    );
    if !triples.is_empty() {
        report.note("precondition failed; arrangement not certified");
        return report;
    }

    let distinct = (0..9).all(|i| (i + 1..9).all(|j| arr.lines[i].1 != arr.lines[j].1));
    report.claim_holds("nine distinct lines", "all nine lines pairwise distinct", distinct, distinct.to_string());

    let mut mismatches = Vec::new();
    for (label, line) in &arr.lines {
        let (a, b) = defining_points(label).expect("arrangement label");
        let on = arr.points_on(line);
        if on != sorted_pair(a, b) {
            mismatches.push(format!("{label} passes through {on:?}"));
        }
    }
    report.claim_holds(
        "incidence table",
        "each line passes through exactly its two defining points",
        mismatches.is_empty(),
        if mismatches.is_empty() { "as expected".to_string() } else { mismatches.join("; ") },
    );

    let triple_points = arrangement_concurrencies(arr);
    for (labels, c) in &triple_points {
        report.note(format!("{}, {}, {} concur at {}", labels[0], labels[1], labels[2], c.point));
    }
    report.claim_eq("triple points off p1..p5", 0usize, triple_points.len());

    let mut overlapping = Vec::new();
    for i in 1..=3 {
        let comps = branch_lines(i);
        for a in 0..3 {
            for b in a + 1..3 {
                let (la, lb) = (arr.line(&comps[a]).unwrap(), arr.line(&comps[b]).unwrap());
                match la.meet(lb) {
                    Some(p) if arr.points.contains(&p) => {}
                    _ => overlapping.push(format!("B{i}: {} meets {}", comps[a], comps[b])),
                }
            }
        }
    }
    report.claim_holds(
        "smooth branch components",
        "the three lines of each B_i meet only at blown-up points",
        overlapping.is_empty(),
        if overlapping.is_empty() { "disjoint after blow-up".to_string() } else { overlapping.join("; ") },
    );
    report
}

fn sorted_pair(a: usize, b: usize) -> Vec<usize> {
    if a < b { vec![a, b] } else { vec![b, a] }
}

/// Five random integer points with coordinates in `[-bound, bound]`; the
/// stream is a function of `(seed, index)` only.
pub fn random_points(seed: u64, index: u64, bound: i64) -> Vec<ProjPoint> {
    let bound = bound.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut out = Vec::with_capacity(5);
    while out.len() < 5 {
        let (x, y, z) = (
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        );
        if let Ok(p) = ProjPoint::from_ints(x, y, z) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FuzzOutcome {
    /// Repeated points or three collinear points.
    Degenerate,
    Pass,
    /// Failed with the given concurrency witnesses (possibly empty if another
    /// part of the certification failed).
    Fail { witnesses: Vec<Concurrency>, independently_rechecked: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub samples: u64,
    pub degenerate: u64,
    pub passed: u64,
    pub failed: u64,
    pub failures_rechecked: u64,
}

impl FuzzSummary {
    pub fn non_degenerate(&self) -> u64 {
        self.samples - self.degenerate
    }

    /// Fraction of non-degenerate samples that passed, as `(passed, total)`.
    pub fn pass_ratio(&self) -> (u64, u64) {
        (self.passed, self.non_degenerate())
    }
}

pub fn fuzz_sample(seed: u64, index: u64, bound: i64) -> FuzzOutcome {
    let points = random_points(seed, index, bound);
    let Ok(true) = general_position(&points) else { return FuzzOutcome::Degenerate };
    let arr = BurniatArrangement::new(&points).expect("distinct points");
    if normal_crossing(&arr).passed() {
        return FuzzOutcome::Pass;
    }
    let lines: Vec<ProjLine> = arr.lines.iter().map(|(_, l)| l.clone()).collect();
    let witnesses = find_concurrencies(&lines, &arr.points);
    let independently_rechecked = !witnesses.is_empty() && witnesses.iter().all(|w| witness_holds(&lines, &arr.points, w));
    FuzzOutcome::Fail { witnesses, independently_rechecked }
}

impl FuzzSummary {
    fn empty(seed: u64) -> Self {
        FuzzSummary { seed, samples: 0, degenerate: 0, passed: 0, failed: 0, failures_rechecked: 0 }
    }

    fn record(&mut self, o: FuzzOutcome) {
        self.samples += 1;
        match o {
            FuzzOutcome::Degenerate => self.degenerate += 1,
            FuzzOutcome::Pass => self.passed += 1,
            FuzzOutcome::Fail { independently_rechecked, .. } => {
                self.failed += 1;
                self.failures_rechecked += u64::from(independently_rechecked);
            }
        }
    }
}

/// Runs `samples` random configurations with coordinates in `[-bound, bound]`.
pub fn fuzz_normal_crossing(seed: u64, samples: u64, bound: i64, exec: Execution) -> FuzzSummary {
    let mut s = FuzzSummary::empty(seed);
    for o in par::map_range(exec, 0..samples, |i| fuzz_sample(seed, i, bound)) {
        s.record(o);
    }
    s
}

/// Draws configurations in index order until `target` non-degenerate ones have
/// been checked. Degenerate draws are counted but do not count towards `target`.
pub fn fuzz_non_degenerate(seed: u64, target: u64, bound: i64, exec: Execution) -> FuzzSummary {
    let mut s = FuzzSummary::empty(seed);
    let mut next = 0;
    while s.non_degenerate() < target {
        let batch = (target - s.non_degenerate()).max(16);
        for o in par::map_range(exec, next..next + batch, |i| fuzz_sample(seed, i, bound)) {
            if s.non_degenerate() == target {
                break;
            }
            s.record(o);
        }
        next += batch;
    }
    s
}

/// `(p.x / p.z, p.y / p.z)` helper for tests and reports; `None` at infinity.
pub fn affine(p: &ProjPoint) -> Option<(Q, Q)> {
    let z = &p.0[2];
    if z.is_zero() {
        None
    } else {
        Some((&p.0[0] / z, &p.0[1] / z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64, i64)]) -> Vec<ProjPoint> {
        v.iter().map(|&(x, y, z)| ProjPoint::from_ints(x, y, z).unwrap()).collect()
    }

    #[test]
    fn normalization_is_canonical() {
        let a = ProjPoint::from_ints(2, 4, 6).unwrap();
        let b = ProjPoint::from_ints(-1, -2, -3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(1:2:3)");
        let c = ProjPoint::from_ints(0, 0, -7).unwrap();
        assert_eq!(c.to_string(), "(0:0:1)");
        assert!(ProjPoint::from_ints(0, 0, 0).is_err());
    }

    #[test]
    fn general_position_examples() {
        assert!(general_position(&default_points()).unwrap());
        let bad = pts(&[(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 2, 1)]);
        assert!(!general_position(&bad).unwrap());
        assert_eq!(collinear_triples(&bad), vec![[1, 2, 3]]);
        let four = pts(&[(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]);
        assert!(matches!(general_position(&four), Err(Error::InvalidInput(_))));
        let dup = pts(&[(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 2, 2)]);
        assert!(matches!(general_position(&dup), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn default_configuration_is_certified() {
        let arr = BurniatArrangement::new(&default_points()).unwrap();
        let r = normal_crossing(&arr);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn degenerate_configuration_fails_precondition() {
        let bad = pts(&[(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 2, 1)]);
        let arr = BurniatArrangement::new(&bad).unwrap();
        let r = normal_crossing(&arr);
        assert!(!r.passed());
        assert_eq!(r.claims.len(), 1);
        assert!(!r.claims[0].pass);
    }

    #[test]
    fn classes_of_lines() {
        let arr = BurniatArrangement::new(&default_points()).unwrap();
        let l = DEL_PEZZO_4;
        assert_eq!(class_of_line(&arr, &LineLabel::EPrime(1)).unwrap(), l.l() - l.e(2) - l.e(3));
        assert_eq!(class_of_line(&arr, &LineLabel::G(2)).unwrap(), l.l() - l.e(4) - l.e(2));
        assert_eq!(class_of_line(&arr, &LineLabel::H(3)).unwrap(), l.l() - l.e(5) - l.e(3));
        assert!(class_of_line(&arr, &LineLabel::Gamma).is_err());
        for label in arrangement_labels() {
            assert_eq!(Some(class_of_line(&arr, &label).unwrap()), label.class());
        }
    }

    #[test]
    fn branch_sums() {
        let arr = BurniatArrangement::new(&default_points()).unwrap();
        let l = DEL_PEZZO_4;
        let expected = [[3, 1, -3, -1, -1, -1], [3, -1, 1, -3, -1, -1], [3, -3, -1, 1, -1, -1]];
        let mut total = l.zero();
        for i in 1..=3 {
            let b = branch_lines(i)
                .iter()
                .fold(l.e(i), |acc, lab| acc + class_of_line(&arr, lab).unwrap());
            assert_eq!(b.coeffs(), &expected[i - 1]);
            total = total + b;
        }
        assert_eq!(total, -3 * l.canonical());
    }

    #[test]
    fn a_forced_triple_point_needs_a_collinearity() {
        // g1 and e'3 both pass through p1, so g1, h2, e'3 can only concur at p1,
        // which would put p1, p2, p5 on one line.
        for idx in 0..200 {
            let points = random_points(7, idx, 9);
            let Ok(true) = general_position(&points) else { continue };
            let arr = BurniatArrangement::new(&points).unwrap();
            let p = arr.line(&LineLabel::G(1)).unwrap().meet(arr.line(&LineLabel::EPrime(3)).unwrap()).unwrap();
            assert_eq!(p, points[0]);
            assert!(!p.lies_on(arr.line(&LineLabel::H(2)).unwrap()));
        }
    }

    #[test]
    fn detector_reports_a_sixth_point_witness() {
        // x = 0, y = 0 and x + y = 0 all pass through (0:0:1)
        let lines = [
            ProjPoint::from_ints(0, 0, 1).unwrap().join(&ProjPoint::from_ints(0, 1, 0).unwrap()).unwrap(),
            ProjPoint::from_ints(0, 0, 1).unwrap().join(&ProjPoint::from_ints(1, 0, 0).unwrap()).unwrap(),
            ProjPoint::from_ints(0, 0, 1).unwrap().join(&ProjPoint::from_ints(1, -1, 0).unwrap()).unwrap(),
            ProjPoint::from_ints(1, 0, 1).unwrap().join(&ProjPoint::from_ints(0, 1, 1).unwrap()).unwrap(),
        ];
        let w = find_concurrencies(&lines, &[]);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].lines, [0, 1, 2]);
        assert_eq!(w[0].point, ProjPoint::from_ints(0, 0, 1).unwrap());
        assert!(witness_holds(&lines, &[], &w[0]));
        assert!(find_concurrencies(&lines, &[w[0].point.clone()]).is_empty());
    }

    #[test]
    fn parses_rationals_and_comments() {
        let text = "# five points\n1 0 0\n0 1 0\n\n0 0 1\n1 1 1  # unit\n1/2 1 3/2\n";
        let p = parse_points(text).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p[4], ProjPoint::from_ints(1, 2, 3).unwrap());
        assert!(parse_points("1 2\n").is_err());
        assert!(parse_points("1 x 2\n").is_err());
        assert!(parse_points("0 0 0\n").is_err());
    }

    #[test]
    fn fuzz_is_schedule_independent() {
        let a = fuzz_normal_crossing(11, 60, 6, Execution::Sequential);
        let b = fuzz_normal_crossing(11, 60, 6, Execution::Parallel);
        assert_eq!(a, b);
        assert_eq!(a.failed, 0);
        assert_eq!(a.passed + a.degenerate, 60);
    }

    #[test]
    fn fuzz_until_enough_non_degenerate() {
        // tiny coordinates make degenerate draws common
        let s = fuzz_non_degenerate(3, 40, 1, Execution::Parallel);
        assert_eq!(s.non_degenerate(), 40);
        assert!(s.degenerate > 0);
        assert_eq!(s, fuzz_non_degenerate(3, 40, 1, Execution::Sequential));
        let head = fuzz_normal_crossing(3, s.samples, 1, Execution::Sequential);
        assert_eq!(head, s);
    }
}
