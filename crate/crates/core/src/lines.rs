//! Enumeration of distinguished classes: lines (`D^2 = -1`, `K.D = -1`),
//! roots (`D^2 = -2`, `K.D = 0`) and conic classes (`D^2 = 0`, `K.D = -2`).
//!
//! Every search solves `a^2 - sum b_i^2 = s`, `3a - sum b_i = d` for a class
//! `a l - sum b_i e_i`. By Cauchy-Schwarz `(sum b_i)^2 <= n sum b_i^2`, so
//!
//! ```text
//! (3a - d)^2 <= n (a^2 - s)   <=>   (9 - n) a^2 - 6 d a + d^2 + n s <= 0.
//! ```
//!
//! For `n <= 8` the leading coefficient is positive and the admissible `a` form
//! a finite interval around `3d / (9 - n)`; for lines that is `a in [0, 2]` at
//! `n = 5`, `[0, 3]` at `n = 7` and `[-1, 7]` at `n = 8`. Given `a`, each `b_i`
//! is bounded by `|b_i| <= sqrt(a^2 - s)`. Past `n = 8` the quadratic
//! degenerates and the solution sets are infinite, so those lattices are
//! rejected.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Lattice, DEL_PEZZO_4};

/// Largest number of blown-up points for which enumeration terminates.
pub const MAX_POINTS: usize = 8;

/// Name of a line. The first six variants are the classical names on the
/// degree-4 del Pezzo surface; other lattices use [`LineLabel::Class`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LineLabel {
    /// `e_i`, the exceptional curve over `p_i`.
    E(usize),
    /// `e'_j = l - e_k - e_m`, `{j,k,m} = {1,2,3}`.
    EPrime(usize),
    /// `g_j = l - e_4 - e_j`.
    G(usize),
    /// `h_j = l - e_5 - e_j`.
    H(usize),
    /// `l - e_4 - e_5`.
    Gamma,
    /// The conic `2l - e_1 - ... - e_5`.
    Delta,
    Class(String),
}

impl LineLabel {
    /// The class on the degree-4 del Pezzo lattice, for the named variants.
    pub fn class(&self) -> Option<DivisorClass> {
        let lat = DEL_PEZZO_4;
        let e = |i: usize| lat.e(i);
        let in_range = |j: usize, hi: usize| (1..=hi).contains(&j);
        Some(match *self {
            LineLabel::E(i) if in_range(i, 5) => e(i),
            LineLabel::EPrime(j) if in_range(j, 3) => {
                let (k, m) = others(j);
                lat.l() - e(k) - e(m)
            }
            LineLabel::G(j) if in_range(j, 3) => lat.l() - e(4) - e(j),
            LineLabel::H(j) if in_range(j, 3) => lat.l() - e(5) - e(j),
            LineLabel::Gamma => lat.l() - e(4) - e(5),
            LineLabel::Delta => 2 * lat.l() - (1..=5).fold(lat.zero(), |acc, i| acc + e(i)),
            _ => return None,
        })
    }

    /// The sixteen named lines in declaration order.
    pub fn del_pezzo_names() -> Vec<LineLabel> {
        let mut v: Vec<LineLabel> = (1..=5).map(LineLabel::E).collect();
        v.extend((1..=3).map(LineLabel::EPrime));
        v.extend((1..=3).map(LineLabel::G));
        v.extend((1..=3).map(LineLabel::H));
        v.push(LineLabel::Gamma);
        v.push(LineLabel::Delta);
        v
    }

    fn for_degree_four(class: &DivisorClass) -> Option<LineLabel> {
        LineLabel::del_pezzo_names()
            .into_iter()
            .find(|name| name.class().as_ref() == Some(class))
    }
}

/// The two indices of `{1,2,3}` other than `j`.
fn others(j: usize) -> (usize, usize) {
    match j {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::E(i) => write!(f, "e{i}"),
            LineLabel::EPrime(j) => write!(f, "e'{j}"),
            LineLabel::G(j) => write!(f, "g{j}"),
            LineLabel::H(j) => write!(f, "h{j}"),
            LineLabel::Gamma => write!(f, "gamma"),
            LineLabel::Delta => write!(f, "delta"),
            LineLabel::Class(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NamedLine {
    pub class: DivisorClass,
    pub name: LineLabel,
}

fn check_supported(lattice: Lattice) -> Result<()> {
    if lattice.n() > MAX_POINTS {
        return Err(Error::Unsupported {
            n: lattice.n(),
            reason: "classes of fixed square and degree are infinite beyond 8 points",
        });
    }
    Ok(())
}

/// All classes `a l + sum c_i e_i` with `D^2 = self_int` and `D.(-K) = degree`,
/// lexicographically sorted.
pub fn enumerate_classes(lattice: Lattice, self_int: i64, degree: i64) -> Result<Vec<DivisorClass>> {
    check_supported(lattice)?;
    let n = lattice.n() as i64;
    let admissible = |a: i64| (9 - n) * a * a - 6 * degree * a + degree * degree + n * self_int <= 0;

    // The admissible reals form an interval containing the vertex, so the
    // integer solutions are contiguous and reachable from floor/ceil of it.
    let lead = 9 - n;
    let lo_start = (3 * degree).div_euclid(lead);
    let mut a_values = Vec::new();
    let mut a = lo_start;
    while admissible(a) {
        a_values.push(a);
        a -= 1;
    }
    let mut a = lo_start + 1;
    while admissible(a) {
        a_values.push(a);
        a += 1;
    }
    a_values.sort_unstable();

    let mut out = Vec::new();
    let mut b = vec![0i64; lattice.n()];
    for a in a_values {
        let sum = 3 * a - degree;
        let squares = a * a - self_int;
        fill(&mut b, 0, sum, squares, &mut |b| {
            let mut coeffs = Vec::with_capacity(lattice.rank());
            coeffs.push(a);
            coeffs.extend(b.iter().map(|x| -x));
            out.push(lattice.class(&coeffs).expect("rank is fixed"));
        });
    }
    out.sort();
    Ok(out)
}

/// Chooses `b[pos..]` with prescribed sum and sum of squares.
fn fill(b: &mut [i64], pos: usize, sum: i64, squares: i64, emit: &mut impl FnMut(&[i64])) {
    let rest = (b.len() - pos) as i64;
    if rest == 0 {
        if sum == 0 && squares == 0 {
            emit(b);
        }
        return;
    }
    if squares < 0 || sum * sum > rest * squares || (sum - squares).rem_euclid(2) != 0 {
        return;
    }
    let bound = isqrt(squares);
    for x in -bound..=bound {
        b[pos] = x;
        fill(b, pos + 1, sum - x, squares - x * x, emit);
    }
    b[pos] = 0;
}

fn isqrt(v: i64) -> i64 {
    let mut r = (v as f64).sqrt() as i64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// Lines: classes with `D^2 = -1`, `D.K = -1` and nonnegative `l`-coefficient.
/// On the degree-4 del Pezzo lattice the sixteen results carry their
/// classical names.
pub fn enumerate_lines(lattice: Lattice) -> Result<Vec<NamedLine>> {
    let classes = enumerate_classes(lattice, -1, 1)?;
    Ok(classes
        .into_iter()
        .filter(|c| c.degree_in_plane() >= 0)
        .map(|class| {
            let name = if lattice == DEL_PEZZO_4 {
                LineLabel::for_degree_four(&class).expect("every del Pezzo line is named")
            } else {
                LineLabel::Class(class.to_string())
            };
            NamedLine { class, name }
        })
        .collect())
}

/// Roots: `D^2 = -2`, `D.K = 0`, both signs.
pub fn enumerate_roots(lattice: Lattice) -> Result<Vec<DivisorClass>> {
    enumerate_classes(lattice, -2, 0)
}

/// Conic classes: primitive `D` with `D^2 = 0`, `D.K = -2` and nonnegative
/// `l`-coefficient. No nefness filter is applied.
pub fn enumerate_conic_classes(lattice: Lattice) -> Result<Vec<DivisorClass>> {
    let classes = enumerate_classes(lattice, 0, 2)?;
    Ok(classes
        .into_iter()
        .filter(|c| c.degree_in_plane() >= 0 && content(c) == 1)
        .collect())
}

fn content(c: &DivisorClass) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }
    c.coeffs().iter().fold(0, |g, &x| gcd(g, x))
}

/// Pairwise intersection numbers, in the order given.
pub fn incidence_table(lines: &[NamedLine]) -> Vec<Vec<i64>> {
    lines
        .iter()
        .map(|a| lines.iter().map(|b| a.class.dot(&b.class)).collect())
        .collect()
}

/// One tab-separated record per line: name, coefficient vector, incidence row.
pub fn line_table_text(lines: &[NamedLine]) -> String {
    let table = incidence_table(lines);
    let mut out = String::new();
    for (line, row) in lines.iter().zip(&table) {
        let vec: Vec<String> = line.class.coeffs().iter().map(i64::to_string).collect();
        let row: Vec<String> = row.iter().map(i64::to_string).collect();
        out.push_str(&format!("{}\t[{}]\t{}\n", line.name, vec.join(","), row.join(" ")));
    }
    out
}

/// The conic pencil `f_i = l - e_i` on the degree-4 del Pezzo lattice.
pub fn conic_f(i: usize) -> DivisorClass {
    DEL_PEZZO_4.l() - DEL_PEZZO_4.e(i)
}
