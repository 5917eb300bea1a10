//! The Picard lattice `Z^{1,n}` of the plane blown up at `n` points.
//!
//! A class is stored as its coefficient vector on the basis `(l, e_1, ..., e_n)`,
//! so `3l - e_1 - e_2` is `[3, -1, -1, 0, ...]`. The intersection form is
//! `diag(1, -1, ..., -1)` and the canonical class is `-3l + e_1 + ... + e_n`.
//!
//! All arithmetic is checked `i64`. The fallible entry points return
//! [`Error::Overflow`] or [`Error::RankMismatch`]; the operator impls panic on the
//! same conditions, since both indicate a programming error in the caller.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// The lattice of a blow-up of the plane at `n` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    n: usize,
}

/// The degree-4 del Pezzo lattice.
pub const DEL_PEZZO_4: Lattice = Lattice::new(5);

impl Lattice {
    pub const fn new(n: usize) -> Self {
        Lattice { n }
    }

    /// Number of blown-up points.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n + 1
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass { coeffs: vec![0; self.rank()] }
    }

    /// Pullback of a line of the plane.
    pub fn l(&self) -> DivisorClass {
        let mut coeffs = vec![0; self.rank()];
        coeffs[0] = 1;
        DivisorClass { coeffs }
    }

    /// Exceptional curve over the `i`-th point, 1-based.
    ///
    /// Panics if `i` is not in `1..=n`.
    pub fn e(&self, i: usize) -> DivisorClass {
        assert!((1..=self.n).contains(&i), "e{i} is not a basis class of Z^(1,{})", self.n);
        let mut coeffs = vec![0; self.rank()];
        coeffs[i] = 1;
        DivisorClass { coeffs }
    }

    /// Builds a class from `(coefficient of l, coefficient of e_1, ...)`.
    pub fn class(&self, coeffs: &[i64]) -> Result<DivisorClass> {
        if coeffs.len() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: coeffs.len() });
        }
        Ok(DivisorClass { coeffs: coeffs.to_vec() })
    }

    /// `l, e_1, ..., e_n`.
    pub fn basis(&self) -> Vec<DivisorClass> {
        std::iter::once(self.l()).chain((1..=self.n).map(|i| self.e(i))).collect()
    }

    pub fn canonical(&self) -> DivisorClass {
        canonical(*self)
    }

    pub fn anticanonical(&self) -> DivisorClass {
        -canonical(*self)
    }

    /// Gram matrix of the basis.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let basis = self.basis();
        basis
            .iter()
            .map(|a| basis.iter().map(|b| a.dot(b)).collect())
            .collect()
    }
}

/// An integer divisor class. Two classes are linearly equivalent iff their
/// coefficient vectors agree; the derived `Ord` is the lexicographic order on
/// coefficient vectors used for every canonical listing in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DivisorClass {
    coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn lattice(&self) -> Lattice {
        Lattice::new(self.coeffs.len() - 1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `l`, i.e. the degree of the image curve in the plane.
    pub fn degree_in_plane(&self) -> i64 {
        self.coeffs[0]
    }

    /// Coefficient of `e_i`, 1-based.
    pub fn e_coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Anticanonical degree `D.(-K)`.
    pub fn anticanonical_degree(&self) -> i64 {
        let d = self.coeffs[0].checked_mul(3).expect("overflow in anticanonical degree");
        self.coeffs[1..]
            .iter()
            .try_fold(d, |acc, &c| acc.checked_add(c))
            .expect("overflow in anticanonical degree")
    }

    /// Intersection number; panics on rank mismatch or overflow.
    pub fn dot(&self, other: &DivisorClass) -> i64 {
        intersect(self, other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, i64::checked_add, "class addition")
    }

    pub fn checked_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, i64::checked_sub, "class subtraction")
    }

    pub fn checked_scale(&self, k: i64) -> Result<DivisorClass> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(k).ok_or(Error::Overflow("class scaling")))
            .collect::<Result<_>>()?;
        Ok(DivisorClass { coeffs })
    }

    /// Exact half of the class, if every coefficient is even.
    pub fn halve(&self) -> Option<DivisorClass> {
        if self.coeffs.iter().all(|c| c % 2 == 0) {
            Some(DivisorClass { coeffs: self.coeffs.iter().map(|c| c / 2).collect() })
        } else {
            None
        }
    }

    fn zip_with(
        &self,
        other: &DivisorClass,
        op: fn(i64, i64) -> Option<i64>,
        what: &'static str,
    ) -> Result<DivisorClass> {
        check_rank(self, other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow(what)))
            .collect::<Result<_>>()?;
        Ok(DivisorClass { coeffs })
    }
}

fn check_rank(a: &DivisorClass, b: &DivisorClass) -> Result<()> {
    if a.coeffs.len() != b.coeffs.len() {
        return Err(Error::RankMismatch { left: a.coeffs.len(), right: b.coeffs.len() });
    }
    Ok(())
}

/// `a_0 b_0 - sum_{i>=1} a_i b_i`.
pub fn intersect(a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
    check_rank(a, b)?;
    let overflow = || Error::Overflow("intersection");
    let head = a.coeffs[0].checked_mul(b.coeffs[0]).ok_or_else(overflow)?;
    a.coeffs[1..].iter().zip(&b.coeffs[1..]).try_fold(head, |acc, (&x, &y)| {
        x.checked_mul(y)
            .and_then(|p| acc.checked_sub(p))
            .ok_or_else(overflow)
    })
}

/// `K = -3l + e_1 + ... + e_n`.
pub fn canonical(lattice: Lattice) -> DivisorClass {
    let mut coeffs = vec![1; lattice.rank()];
    coeffs[0] = -3;
    DivisorClass { coeffs }
}

/// Riemann-Roch on a rational surface: `chi(D) = 1 + (D^2 - D.K) / 2`.
///
/// `D^2 - D.K` is always even on this lattice since `D^2 = D.K` mod 2
/// coefficientwise.
pub fn rr_chi(d: &DivisorClass) -> i64 {
    let k = canonical(d.lattice());
    let d2 = d.dot(d);
    let dk = d.dot(&k);
    debug_assert_eq!((d2 - dk).rem_euclid(2), 0);
    1 + (d2 - dk) / 2
}

/// Adjunction: `p_a(D) = 1 + (D^2 + D.K) / 2`.
pub fn arith_genus(d: &DivisorClass) -> i64 {
    let k = canonical(d.lattice());
    1 + (d.dot(d) + d.dot(&k)) / 2
}

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
pub fn determinant(m: &[Vec<i64>]) -> Result<i64> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(1);
    }
    let overflow = || Error::Overflow("determinant");
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or_else(overflow)?;
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).map_err(|_| overflow())
}

impl fmt::Display for DivisorClass {
    /// Writes e.g. `3l - e1 - 2e3`; the zero class is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sym = if i == 0 { "l".to_string() } else { format!("e{i}") };
            let mag = c.unsigned_abs();
            let body = if mag == 1 { sym } else { format!("{mag}{sym}") };
            match (first, c < 0) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&DivisorClass> for &DivisorClass {
            type Output = DivisorClass;
            fn $m(self, rhs: &DivisorClass) -> DivisorClass {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<DivisorClass> for DivisorClass {
            type Output = DivisorClass;
            fn $m(self, rhs: DivisorClass) -> DivisorClass {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&DivisorClass> for DivisorClass {
            type Output = DivisorClass;
            fn $m(self, rhs: &DivisorClass) -> DivisorClass {
                (&self).$m(rhs)
            }
        }
        impl $tr<DivisorClass> for &DivisorClass {
            type Output = DivisorClass;
            fn $m(self, rhs: DivisorClass) -> DivisorClass {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.checked_scale(-1).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        -&self
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.checked_scale(self).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        self * &rhs
    }
}

/// Sum of classes in `lattice`; the empty sum is zero.
pub fn sum_classes<'a>(lattice: Lattice, classes: impl IntoIterator<Item = &'a DivisorClass>) -> DivisorClass {
    classes.into_iter().fold(lattice.zero(), |acc, c| acc + c)
}
