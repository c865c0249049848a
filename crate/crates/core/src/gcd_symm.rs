//! Elementary symmetric polynomials over the quarter-ring (ℕ, +, gcd).
//!
//! For a partition λ = (λ_1, …, λ_s), `g_i(λ)` is the sum over all
//! i-element index subsets of the gcd of the chosen parts. The `h_i` count
//! roots of unity lying in exactly i of the sets of λ_j-th roots of unity
//! and follow from the `g_i` by inclusion-exclusion.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{with_widening, ExactMatrix};
use crate::partitions::Partition;
use crate::scalar::checked;
use crate::Int;

/// Multiplication of the canonical quarter-ring: the gcd, with `0∙a = a`.
pub fn gcd_product(a: Int, b: Int) -> Int {
    num_integer::gcd(a, b)
}

/// `(g_1, …, g_s)`; index 1 is stored at position 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GVector(Vec<Int>);

impl GVector {
    pub fn values(&self) -> &[Int] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `g_i` for `1 <= i <= s`.
    pub fn get(&self, i: usize) -> Int {
        self.0[i - 1]
    }

    /// `g_s`, the gcd of all parts.
    pub fn last(&self) -> Int {
        self.0[self.0.len() - 1]
    }

    /// `Σ (-1)^{i+1} g_i`, the size of the union of the root sets.
    pub fn alternating_sum(&self) -> Result<Int> {
        self.0.iter().enumerate().try_fold(0 as Int, |acc, (k, &g)| {
            if k % 2 == 0 {
                checked::add(acc, g, "alternating g-sum")
            } else {
                checked::sub(acc, g, "alternating g-sum")
            }
        })
    }
}

/// `(h_1, …, h_s)`; index 1 is stored at position 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(Vec<Int>);

impl HVector {
    pub fn new(values: Vec<Int>) -> Self {
        HVector(values)
    }

    pub fn values(&self) -> &[Int] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Int {
        self.0[i - 1]
    }

    /// `Σ h_i`: number of distinct roots, i.e. simple blocks.
    pub fn total(&self) -> Result<Int> {
        checked::sum(self.0.iter().copied(), "h-vector sum")
    }

    /// `Σ i^power · h_i`.
    pub fn weighted_sum(&self, power: u32) -> Result<Int> {
        self.0.iter().enumerate().try_fold(0 as Int, |acc, (k, &h)| {
            let w = checked::mul(((k + 1) as Int).pow(power), h, "weighted h-sum")?;
            checked::add(acc, w, "weighted h-sum")
        })
    }
}

macro_rules! tuple_display {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, v) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

tuple_display!(GVector);
tuple_display!(HVector);

/// Pascal's triangle in checked integers.
#[derive(Debug, Clone)]
pub struct Binomials {
    rows: Vec<Vec<Int>>,
}

impl Binomials {
    pub fn up_to(max: usize) -> Result<Self> {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(max + 1);
        for m in 0..=max {
            let mut row = vec![1 as Int; m + 1];
            for k in 1..m {
                row[k] = checked::add(rows[m - 1][k - 1], rows[m - 1][k], "binomial")?;
            }
            rows.push(row);
        }
        Ok(Binomials { rows })
    }

    /// C(m, k); zero when k > m.
    pub fn get(&self, m: usize, k: usize) -> Int {
        if k > m {
            0
        } else {
            self.rows[m][k]
        }
    }
}

/// C(m, k) for a one-off lookup.
pub fn binomial(m: usize, k: usize) -> Result<Int> {
    Ok(Binomials::up_to(m)?.get(m, k))
}

/// The g-vector of λ.
///
/// Rather than visiting all 2^s subsets, this keeps for each subset size k
/// a histogram `gcd value -> number of k-subsets with that gcd`, adding one
/// part at a time. The empty subset starts at gcd 0, the quarter-ring zero.
pub fn g_vector(lambda: &Partition) -> Result<GVector> {
    let s = lambda.s();
    let mut by_size: Vec<BTreeMap<Int, Int>> = vec![BTreeMap::new(); s + 1];
    by_size[0].insert(0, 1);
    for (added, &part) in lambda.parts().iter().enumerate() {
        for k in (0..=added).rev() {
            let grown: Vec<(Int, Int)> = by_size[k]
                .iter()
                .map(|(&d, &count)| (gcd_product(d, part), count))
                .collect();
            for (d, count) in grown {
                let slot = by_size[k + 1].entry(d).or_insert(0);
                *slot = checked::add(*slot, count, "g-vector subset count")?;
            }
        }
    }
    let values = by_size[1..]
        .iter()
        .map(|hist| {
            hist.iter().try_fold(0 as Int, |acc, (&d, &count)| {
                checked::add(acc, checked::mul(d, count, "g-vector")?, "g-vector")
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GVector(values))
}

/// Builds a `GVector` from raw values, checking `g_s | g_i`.
pub fn g_vector_from_values(values: Vec<Int>) -> Result<GVector> {
    if values.is_empty() || values.iter().any(|&g| g <= 0) {
        return Err(Error::Precondition("g-vector entries must be positive".into()));
    }
    let last = values[values.len() - 1];
    if values.iter().any(|&g| g % last != 0) {
        return Err(Error::Precondition(format!(
            "g_s = {last} does not divide every g_i"
        )));
    }
    Ok(GVector(values))
}

/// `h_i = Σ_{k=0}^{s-i} (-1)^k C(i+k, i) g_{i+k}`, with the HVector
/// invariants checked on the way out.
pub fn h_vector(g: &GVector) -> Result<HVector> {
    let s = g.len();
    let binom = Binomials::up_to(s)?;
    let mut h = Vec::with_capacity(s);
    for i in 1..=s {
        let mut acc: Int = 0;
        for k in 0..=s - i {
            let term = checked::mul(binom.get(i + k, i), g.get(i + k), "h-vector")?;
            acc = if k % 2 == 0 {
                checked::add(acc, term, "h-vector")?
            } else {
                checked::sub(acc, term, "h-vector")?
            };
        }
        if acc < 0 {
            return Err(Error::Consistency(format!("h_{i} = {acc} is negative for g = {g}")));
        }
        h.push(acc);
    }
    let h = HVector(h);
    if h.get(s) != g.last() {
        return Err(Error::Consistency(format!("h_s != g_s for g = {g}")));
    }
    if h.weighted_sum(1)? != g.get(1) {
        return Err(Error::Consistency(format!("Σ i·h_i != g_1 for g = {g}")));
    }
    if h.total()? != g.alternating_sum()? {
        return Err(Error::Consistency(format!(
            "inclusion-exclusion fails for g = {g}"
        )));
    }
    Ok(h)
}

/// Strictly upper-triangular matrix of pairwise gcds of the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorMatrix(ExactMatrix<Int>);

impl DivisorMatrix {
    pub fn matrix(&self) -> &ExactMatrix<Int> {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.rows()
    }

    /// Entries `d_ij` for `i < j`, row by row.
    pub fn upper_entries(&self) -> Vec<Int> {
        let s = self.order();
        (0..s)
            .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
            .map(|(i, j)| self.0.get(i, j))
            .collect()
    }
}

/// The symmetric gcd matrix `C(λ) = (λ_i ∙ λ_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdMatrix(ExactMatrix<Int>);

impl GcdMatrix {
    pub fn matrix(&self) -> &ExactMatrix<Int> {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.rows()
    }

    pub fn trace(&self) -> Int {
        (0..self.order()).map(|i| self.0.get(i, i)).sum()
    }

    /// Sum of all entries, the number of pair orbits.
    pub fn total(&self) -> Result<Int> {
        self.0.total()
    }

    pub fn determinant(&self) -> Result<Int> {
        let det = with_widening(
            || self.0.determinant().map(i128::from),
            || self.0.cast::<i128>()?.determinant(),
        )?;
        Int::try_from(det).map_err(|_| Error::overflow("gcd matrix determinant"))
    }
}

pub fn divisor_matrix(lambda: &Partition) -> DivisorMatrix {
    let p = lambda.parts();
    DivisorMatrix(ExactMatrix::from_fn(p.len(), p.len(), |i, j| {
        if i < j {
            gcd_product(p[i], p[j])
        } else {
            0
        }
    }))
}

pub fn gcd_matrix(lambda: &Partition) -> GcdMatrix {
    let p = lambda.parts();
    GcdMatrix(ExactMatrix::from_fn(p.len(), p.len(), |i, j| gcd_product(p[i], p[j])))
}

/// `‖Λ_λ^i‖`, evaluated from its definition.
///
/// Entry (a, b) of the i-th semiring power of Λ_λ is a sum over index paths
/// `a = j_0 < j_1 < … < j_i = b`, each contributing the monomial
/// `λ_{j_0} λ_{j_1}² ⋯ λ_{j_{i-1}}² λ_{j_i}`. The evaluation map sends a
/// monomial to the gcd over the variables it contains, since repeated
/// factors collapse (`a∙a = a`). So each path contributes the gcd of the
/// parts along it.
pub fn power_norm(lambda: &Partition, i: usize) -> Result<Int> {
    let s = lambda.s();
    if i == 0 || i >= s {
        return Err(Error::Precondition(format!(
            "power exponent {i} outside 1..={} for {lambda}",
            s.saturating_sub(1)
        )));
    }
    let parts = lambda.parts();
    let mut total: Int = 0;
    for start in 0..s {
        walk_paths(parts, start, parts[start], i, &mut total)?;
    }
    Ok(total)
}

// Extends a path ending at `at` by `steps` more strictly increasing indices.
fn walk_paths(parts: &[Int], at: usize, support_gcd: Int, steps: usize, total: &mut Int) -> Result<()> {
    if steps == 0 {
        *total = checked::add(*total, support_gcd, "divisor matrix norm")?;
        return Ok(());
    }
    // leave room for the remaining steps
    for next in at + 1..=parts.len() - steps {
        walk_paths(parts, next, gcd_product(support_gcd, parts[next]), steps - 1, total)?;
    }
    Ok(())
}

/// Euler's totient by trial division.
pub fn euler_phi(mut m: Int) -> Int {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Exact determinant of `C(λ)` with the totient lower bound and the
/// product upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetBounds {
    pub determinant: Int,
    pub lower: Int,
    pub upper: Int,
    /// Parts pairwise distinct; the bounds are only claimed in that case.
    pub distinct: bool,
}

impl DetBounds {
    pub fn holds(&self) -> bool {
        !self.distinct
            || (self.determinant > 0 && self.lower <= self.determinant && self.determinant <= self.upper)
    }
}

/// For s = 1 the upper bound `λ_1 - 1/2` is not an integer and `λ_1` is
/// reported instead.
pub fn gcd_matrix_det_and_bounds(lambda: &Partition) -> Result<DetBounds> {
    let determinant = gcd_matrix(lambda).determinant()?;
    let parts = lambda.parts();
    let lower = parts
        .iter()
        .try_fold(1 as Int, |acc, &p| checked::mul(acc, euler_phi(p), "totient product"))?;
    let product = parts
        .iter()
        .try_fold(1 as Int, |acc, &p| checked::mul(acc, p, "part product"))?;
    let upper = if lambda.s() == 1 {
        product
    } else {
        let half_factorial = (3..=lambda.s() as Int)
            .try_fold(1 as Int, |acc, k| checked::mul(acc, k, "s!/2"))?;
        checked::sub(product, half_factorial, "determinant upper bound")?
    };
    Ok(DetBounds {
        determinant,
        lower,
        upper,
        distinct: lambda.has_distinct_parts(),
    })
}
