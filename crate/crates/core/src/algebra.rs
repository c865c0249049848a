//! Permutations, their pair orbits on [n]×[n], and the structure of the
//! algebra of matrices commuting with a permutation matrix.
//!
//! Permutations act on the right: `(i)σ` is the image of `i`, and the
//! product `στ` applies σ first. With `c_σ = Σ_i e_{i,(i)σ}` this gives
//! `c_σ c_τ = c_{στ}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcd_symm::{g_vector, gcd_matrix, h_vector, power_norm};
use crate::partition_poly::PartitionPolynomial;
use crate::partitions::Partition;
use crate::scalar::checked;
use crate::{Int, IntMatrix};

/// A bijection of {0, …, n-1}; printed and parsed 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The standard representative `(1 … λ_1)(λ_1+1 … λ_1+λ_2)…`.
    pub fn from_cycle_type(lambda: &Partition) -> Self {
        let mut images = Vec::with_capacity(lambda.n() as usize);
        let mut start = 0;
        for &len in lambda.parts() {
            let len = len as usize;
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`.
    ///
    /// Points not mentioned are fixed. `degree` defaults to the largest
    /// point mentioned; it must be given to include trailing fixed points.
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::parse(rest, "expected `(`"));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::parse(rest, "unclosed cycle"));
            };
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::parse(t, "points are positive integers")),
                    Ok(v) => Ok(v - 1),
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        let max_point = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
        let n = degree.unwrap_or(max_point);
        if max_point > n {
            return Err(Error::parse(max_point.to_string(), format!("point exceeds degree {n}")));
        }
        let mut images: Vec<Option<usize>> = vec![None; n];
        for cycle in &cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if images[x].is_some() {
                    return Err(Error::parse((x + 1).to_string(), "point appears twice"));
                }
                images[x] = Some(y);
            }
        }
        let images = images.into_iter().enumerate().map(|(i, y)| y.unwrap_or(i)).collect();
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `(i)σ`, 0-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// The product `self · other`: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Precondition("degrees differ".into()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        })
    }

    /// Disjoint cycles (0-based), each starting at its smallest point,
    /// ordered by that point. Fixed points are 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let points: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", points.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} on [{}]", self.degree())
    }
}

pub fn cycle_type(sigma: &Permutation) -> Result<Partition> {
    if sigma.degree() == 0 {
        return Err(Error::Precondition("permutation of the empty set has no cycle type".into()));
    }
    Partition::new(sigma.cycles().iter().map(|c| c.len() as Int).collect())
}

/// `c_σ` with `(c_σ)_{ij} = 1` iff `(i)σ = j`.
pub fn perm_matrix(sigma: &Permutation) -> IntMatrix {
    IntMatrix::from_fn(sigma.degree(), sigma.degree(), |i, j| Int::from(sigma.apply(i) == j))
}

/// Orbits of ⟨σ⟩ on cells (i, j) of [n]×[n] under (i,j) ↦ ((i)σ,(j)σ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDecomposition {
    pub n: usize,
    /// Orbit id of cell (i, j) at index i·n + j; ids are 0..count in
    /// order of first appearance.
    pub ids: Vec<usize>,
    pub count: usize,
}

impl OrbitDecomposition {
    pub fn id(&self, i: usize, j: usize) -> usize {
        self.ids[i * self.n + j]
    }

    /// Cells of each orbit, in row-major order.
    pub fn orbits(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.count];
        for i in 0..self.n {
            for j in 0..self.n {
                out[self.id(i, j)].push((i, j));
            }
        }
        out
    }
}

pub fn pair_orbits(sigma: &Permutation) -> OrbitDecomposition {
    let n = sigma.degree();
    let mut ids = vec![usize::MAX; n * n];
    let mut count = 0;
    for cell in 0..n * n {
        if ids[cell] != usize::MAX {
            continue;
        }
        let (mut i, mut j) = (cell / n, cell % n);
        while ids[i * n + j] == usize::MAX {
            ids[i * n + j] = count;
            i = sigma.apply(i);
            j = sigma.apply(j);
        }
        count += 1;
    }
    OrbitDecomposition { n, ids, count }
}

/// Indicator matrices of the pair orbits together with the cycle-support
/// idempotents `f_1, …, f_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitBasis {
    pub orbit_matrices: Vec<IntMatrix>,
    /// One per cycle, in the order of [`Permutation::cycles`].
    pub idempotents: Vec<IntMatrix>,
}

pub fn orbit_basis(sigma: &Permutation) -> OrbitBasis {
    let n = sigma.degree();
    let orbits = pair_orbits(sigma);
    let orbit_matrices = orbits
        .orbits()
        .iter()
        .map(|cells| {
            let mut m = IntMatrix::zeros(n, n);
            for &(i, j) in cells {
                m.set(i, j, 1);
            }
            m
        })
        .collect();
    let idempotents = sigma
        .cycles()
        .iter()
        .map(|cycle| {
            let mut m = IntMatrix::zeros(n, n);
            for &x in cycle {
                m.set(x, x, 1);
            }
            m
        })
        .collect();
    OrbitBasis {
        orbit_matrices,
        idempotents,
    }
}

/// Rank of S_n(λ, R): `g_1 + 2‖Λ_λ‖`.
pub fn dimension(lambda: &Partition) -> Result<Int> {
    if lambda.s() < 2 {
        return Ok(lambda.n());
    }
    let norm = power_norm(lambda, 1)?;
    checked::add(lambda.n(), checked::mul(2, norm, "dimension")?, "dimension")
}

/// A ground field described by its characteristic and whether it is
/// algebraically closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u64,
    algebraically_closed: bool,
}

impl FieldSpec {
    pub fn new(characteristic: u64, algebraically_closed: bool) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::Precondition(format!(
                "characteristic {characteristic} is neither 0 nor prime"
            )));
        }
        Ok(FieldSpec {
            characteristic,
            algebraically_closed,
        })
    }

    /// ℂ.
    pub fn complex() -> Self {
        FieldSpec {
            characteristic: 0,
            algebraically_closed: true,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn algebraically_closed(&self) -> bool {
        self.algebraically_closed
    }

    /// Parts of λ divisible by the characteristic.
    pub fn dividing_parts(&self, lambda: &Partition) -> Vec<Int> {
        if self.characteristic == 0 {
            return Vec::new();
        }
        let p = self.characteristic as Int;
        lambda.parts().iter().copied().filter(|&x| x % p == 0).collect()
    }
}

fn is_prime(m: u64) -> bool {
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d))
}

/// Semisimple iff the characteristic divides no part.
pub fn is_semisimple(lambda: &Partition, field: &FieldSpec) -> bool {
    field.dividing_parts(lambda).is_empty()
}

/// Block size `i` ↦ number of copies of `M_i(k)`; only nonzero
/// multiplicities are stored.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WedderburnShape(BTreeMap<usize, Int>);

impl WedderburnShape {
    pub fn blocks(&self) -> &BTreeMap<usize, Int> {
        &self.0
    }

    pub fn multiplicity(&self, size: usize) -> Int {
        self.0.get(&size).copied().unwrap_or(0)
    }

    /// `Σ i·h_i`, the degree n.
    pub fn degree(&self) -> Int {
        self.0.iter().map(|(&i, &h)| i as Int * h).sum()
    }

    /// `Σ i²·h_i`, the dimension of the algebra.
    pub fn dimension(&self) -> Int {
        self.0.iter().map(|(&i, &h)| (i * i) as Int * h).sum()
    }

    /// `Σ h_i`, the number of simple blocks.
    pub fn simple_blocks(&self) -> Int {
        self.0.values().sum()
    }

    pub fn largest_block(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(0)
    }
}

/// Renders as e.g. `k^3 x M_2(k)`.
impl fmt::Display for WedderburnShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .map(|(&size, &mult)| {
                let base = if size == 1 { "k".to_string() } else { format!("M_{size}(k)") };
                if mult == 1 {
                    base
                } else if size == 1 {
                    format!("k^{mult}")
                } else {
                    format!("{base}^{mult}")
                }
            })
            .collect();
        write!(f, "{}", factors.join(" x "))
    }
}

impl fmt::Debug for WedderburnShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter()).finish()
    }
}

fn require_semisimple_closed(lambda: &Partition, field: &FieldSpec) -> Result<()> {
    if !field.algebraically_closed {
        return Err(Error::Precondition(
            "requires algebraically closed field".into(),
        ));
    }
    if !is_semisimple(lambda, field) {
        return Err(Error::Precondition(format!(
            "{lambda} is not semisimple at characteristic {}",
            field.characteristic
        )));
    }
    Ok(())
}

pub fn wedderburn(lambda: &Partition, field: &FieldSpec) -> Result<WedderburnShape> {
    require_semisimple_closed(lambda, field)?;
    let h = h_vector(&g_vector(lambda)?)?;
    let shape = WedderburnShape(
        h.values()
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| (k + 1, m))
            .collect(),
    );
    if shape.degree() != lambda.n() || shape.largest_block() != lambda.s() {
        return Err(Error::Consistency(format!("shape {shape} does not fit {lambda}")));
    }
    let dim = gcd_matrix(lambda).total()?;
    if shape.dimension() != dim {
        return Err(Error::Consistency(format!(
            "shape {shape} has dimension {} but {lambda} has {dim} pair orbits",
            shape.dimension()
        )));
    }
    Ok(shape)
}

/// `S_n(λ) ≅ S_m(μ)` iff `n = m` and the partition polynomials agree.
///
/// The verdict is cross-checked against equality of Wedderburn shapes.
pub fn isomorphic(lambda: &Partition, mu: &Partition, field: &FieldSpec) -> Result<bool> {
    let shapes_equal = wedderburn(lambda, field)? == wedderburn(mu, field)?;
    let verdict = lambda.n() == mu.n()
        && PartitionPolynomial::from_g_vector(&g_vector(lambda)?)?
            == PartitionPolynomial::from_g_vector(&g_vector(mu)?)?;
    if verdict != shapes_equal {
        return Err(Error::Consistency(format!(
            "isomorphism test for {lambda} and {mu} disagrees with the Wedderburn shapes"
        )));
    }
    Ok(verdict)
}

/// Both sides of a Morita comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoritaReport {
    pub equivalent: bool,
    /// `Σ h_i` for each side.
    pub simple_blocks: [Int; 2],
    /// `g_s · ε(1)` for each side; equals `(-1)^{s+1} Σ h_i`.
    pub signed_values: [Int; 2],
}

/// Morita equivalence, decided by equal numbers of simple blocks.
pub fn morita_equivalent(lambda: &Partition, mu: &Partition, field: &FieldSpec) -> Result<MoritaReport> {
    let mut simple_blocks = [0; 2];
    let mut signed_values = [0; 2];
    for (k, part) in [lambda, mu].into_iter().enumerate() {
        simple_blocks[k] = wedderburn(part, field)?.simple_blocks();
        let g = g_vector(part)?;
        let eps = PartitionPolynomial::from_g_vector(&g)?;
        signed_values[k] = checked::mul(g.last(), eps.eval(1)?, "d·ε(1)")?;
        if signed_values[k].abs() != simple_blocks[k] {
            return Err(Error::Consistency(format!(
                "|d·ε(1)| = {} but Σh = {} for {part}",
                signed_values[k].abs(),
                simple_blocks[k]
            )));
        }
    }
    Ok(MoritaReport {
        equivalent: simple_blocks[0] == simple_blocks[1],
        simple_blocks,
        signed_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{all_partitions, enumerate_partitions};
    use proptest::prelude::*;

    fn p(parts: &[Int]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn perm(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, Some(n)).unwrap()
    }

    fn c() -> FieldSpec {
        FieldSpec::complex()
    }

    #[test]
    fn parsing_cycles() {
        let s = perm("(1 2 3)(4 5)", 5);
        assert_eq!(s.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(s.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::parse_cycles("(1 2)", None).unwrap().degree(), 2);
        assert_eq!(perm("", 3), Permutation::identity(3));
        assert_eq!(perm("()", 2).to_string(), "()");
        assert!(Permutation::parse_cycles("(1 2)(2 3)", None).is_err());
        assert!(Permutation::parse_cycles("(1 0)", None).is_err());
        assert!(Permutation::parse_cycles("(1 4)", Some(3)).is_err());
        assert!(Permutation::parse_cycles("1 2", None).is_err());
        assert!(Permutation::parse_cycles("(1 2", None).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&perm("(1 2 3)(4 5)", 5)).unwrap(), p(&[3, 2]));
        assert_eq!(cycle_type(&Permutation::identity(4)).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(cycle_type(&perm("(1 2 3 4 5 6)", 6)).unwrap(), p(&[6]));
        assert!(cycle_type(&Permutation::identity(0)).is_err());
        for n in 1..=8 {
            for lam in all_partitions(n) {
                assert_eq!(cycle_type(&Permutation::from_cycle_type(&lam)).unwrap(), lam);
            }
        }
    }

    #[test]
    fn permutation_matrix_laws() {
        assert_eq!(perm_matrix(&Permutation::identity(4)), IntMatrix::identity(4));
        let s = perm("(1 2 3)(4 5)", 6);
        let t = perm("(2 6)(3 4 5)", 6);
        let st = s.then(&t).unwrap();
        assert_eq!(perm_matrix(&s).checked_mul(&perm_matrix(&t)).unwrap(), perm_matrix(&st));
        assert_eq!(perm_matrix(&s).transpose(), perm_matrix(&s.inverse()));
        let m = perm_matrix(&s);
        for i in 0..6 {
            assert_eq!(m.row(i).iter().sum::<Int>(), 1);
            assert_eq!((0..6).map(|r| m.get(r, i)).sum::<Int>(), 1);
        }
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(pair_orbits(&Permutation::from_cycle_type(&p(&[4, 1]))).count, 7);
        assert_eq!(pair_orbits(&perm("(1 2 3 4 5 6 7)", 7)).count, 7);
        assert_eq!(pair_orbits(&Permutation::from_cycle_type(&p(&[2, 2]))).count, 8);
    }

    #[test]
    fn orbit_basis_small() {
        let id = orbit_basis(&Permutation::identity(2));
        assert_eq!(id.orbit_matrices.len(), 4);
        assert_eq!(id.idempotents, vec![
            IntMatrix::from_rows(vec![vec![1, 0], vec![0, 0]]).unwrap(),
            IntMatrix::from_rows(vec![vec![0, 0], vec![0, 1]]).unwrap(),
        ]);
        let swap = orbit_basis(&perm("(1 2)", 2));
        assert_eq!(swap.orbit_matrices, vec![
            IntMatrix::identity(2),
            IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap(),
        ]);
    }

    #[test]
    fn orbit_basis_properties() {
        for n in 1..=8 {
            for lam in all_partitions(n) {
                let sigma = Permutation::from_cycle_type(&lam);
                let c = perm_matrix(&sigma);
                let basis = orbit_basis(&sigma);
                let dim = dimension(&lam).unwrap();
                assert_eq!(basis.orbit_matrices.len() as Int, dim);
                assert_eq!(gcd_matrix(&lam).total().unwrap(), dim);
                for b in &basis.orbit_matrices {
                    assert_eq!(c.checked_mul(b).unwrap(), b.checked_mul(&c).unwrap());
                    assert!(basis.orbit_matrices.contains(&b.transpose()));
                }
                // disjoint supports covering every cell
                let sum = basis
                    .orbit_matrices
                    .iter()
                    .try_fold(IntMatrix::zeros(n, n), |acc, b| acc.checked_add(b))
                    .unwrap();
                assert!(sum.entries().all(|x| x == 1));
                let f = &basis.idempotents;
                assert_eq!(f.len(), lam.s());
                let mut total = IntMatrix::zeros(n, n);
                for (a, fa) in f.iter().enumerate() {
                    total = total.checked_add(fa).unwrap();
                    assert_eq!(fa.checked_mul(fa).unwrap(), *fa);
                    assert_eq!(c.checked_mul(fa).unwrap(), fa.checked_mul(&c).unwrap());
                    for fb in &f[a + 1..] {
                        assert_eq!(fa.checked_mul(fb).unwrap(), IntMatrix::zeros(n, n));
                    }
                }
                assert_eq!(total, IntMatrix::identity(n));
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&p(&[4, 2, 2])).unwrap(), 20);
        assert_eq!(dimension(&p(&[9])).unwrap(), 9);
        assert_eq!(dimension(&p(&[2, 2])).unwrap(), 8);
        assert_eq!(dimension(&p(&[3, 3, 3])).unwrap(), 27);
        assert_eq!(dimension(&p(&[8, 2, 1])).unwrap(), 19);
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::new(0, true).is_ok());
        assert!(FieldSpec::new(7, false).is_ok());
        assert!(FieldSpec::new(1, true).is_err());
        assert!(FieldSpec::new(9, true).is_err());
    }

    #[test]
    fn semisimplicity() {
        let lam = p(&[4, 2]);
        assert!(!is_semisimple(&lam, &FieldSpec::new(2, true).unwrap()));
        assert!(is_semisimple(&lam, &FieldSpec::new(3, true).unwrap()));
        assert!(is_semisimple(&lam, &c()));
        assert_eq!(FieldSpec::new(2, true).unwrap().dividing_parts(&lam), vec![4, 2]);
    }

    #[test]
    fn wedderburn_examples() {
        let shape = wedderburn(&p(&[4, 1]), &c()).unwrap();
        assert_eq!(shape.blocks(), &BTreeMap::from([(1, 3), (2, 1)]));
        assert_eq!(shape.to_string(), "k^3 x M_2(k)");
        let shape = wedderburn(&p(&[8, 2, 1]), &c()).unwrap();
        assert_eq!(shape.blocks(), &BTreeMap::from([(1, 6), (2, 1), (3, 1)]));
        assert_eq!(shape.to_string(), "k^6 x M_2(k) x M_3(k)");
        assert_eq!(wedderburn(&p(&[7]), &c()).unwrap().blocks(), &BTreeMap::from([(1, 7)]));
        assert_eq!(wedderburn(&p(&[2, 2]), &c()).unwrap().to_string(), "M_2(k)^2");
    }

    #[test]
    fn wedderburn_refusals() {
        let open = FieldSpec::new(0, false).unwrap();
        let e = wedderburn(&p(&[4, 1]), &open).unwrap_err();
        assert!(e.to_string().contains("requires algebraically closed field"));
        let e = wedderburn(&p(&[4, 2]), &FieldSpec::new(2, true).unwrap()).unwrap_err();
        assert!(e.to_string().contains("not semisimple at characteristic 2"));
        // positive characteristic coprime to the parts is fine
        assert!(wedderburn(&p(&[4, 2]), &FieldSpec::new(5, true).unwrap()).is_ok());
    }

    #[test]
    fn wedderburn_sum_rules() {
        for n in 1..=30 {
            for lam in all_partitions(n) {
                let shape = wedderburn(&lam, &c()).unwrap();
                assert_eq!(shape.degree(), lam.n());
                assert_eq!(shape.dimension(), dimension(&lam).unwrap());
                assert!(shape.multiplicity(lam.s()) >= 1);
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(isomorphic(&p(&[4, 1]), &p(&[3, 2]), &c()).unwrap());
        assert!(isomorphic(&p(&[17, 11, 8, 2]), &p(&[17, 11, 6, 4]), &c()).unwrap());
        assert!(!isomorphic(&p(&[4, 2, 2]), &p(&[2, 1, 1]), &c()).unwrap());
        assert!(isomorphic(&p(&[4, 2]), &p(&[4, 2]), &FieldSpec::new(2, true).unwrap()).is_err());
    }

    #[test]
    fn morita_examples() {
        let r = morita_equivalent(&p(&[4, 1]), &p(&[3, 2]), &c()).unwrap();
        assert!(r.equivalent);
        let r = morita_equivalent(&p(&[4, 1]), &p(&[4]), &c()).unwrap();
        assert!(r.equivalent);
        assert_eq!(r.simple_blocks, [4, 4]);
        assert_eq!(r.signed_values, [-4, 4]);
        let r = morita_equivalent(&p(&[2, 1]), &p(&[1, 1]), &c()).unwrap();
        assert!(!r.equivalent);
        assert_eq!(r.simple_blocks, [2, 1]);
    }

    #[test]
    fn isomorphic_implies_morita() {
        for n in 1..=14 {
            for s in 1..=n {
                let list = enumerate_partitions(s, n);
                for a in &list {
                    for b in &list {
                        if isomorphic(a, b, &c()).unwrap() {
                            assert!(morita_equivalent(a, b, &c()).unwrap().equivalent);
                        }
                    }
                }
            }
        }
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn product_law(
            (s, t) in (1usize..=8).prop_flat_map(|n| (arb_perm(n), arb_perm(n)))
        ) {
            let lhs = perm_matrix(&s).checked_mul(&perm_matrix(&t)).unwrap();
            prop_assert_eq!(lhs, perm_matrix(&s.then(&t).unwrap()));
            prop_assert_eq!(perm_matrix(&s).transpose(), perm_matrix(&s.inverse()));
        }

        #[test]
        fn orbit_count_invariances(
            (s, t) in (1usize..=9).prop_flat_map(|n| (arb_perm(n), arb_perm(n)))
        ) {
            let l = pair_orbits(&s).count;
            let conj = t.then(&s).unwrap().then(&t.inverse()).unwrap();
            prop_assert_eq!(pair_orbits(&conj).count, l);
            prop_assert_eq!(pair_orbits(&s.inverse()).count, l);
            let lam = cycle_type(&s).unwrap();
            prop_assert_eq!(l as Int, gcd_matrix(&lam).total().unwrap());
            prop_assert_eq!(cycle_type(&conj).unwrap(), lam);
        }
    }
}
