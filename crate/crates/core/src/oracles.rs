//! Brute-force verifiers that recompute each closed-form invariant from
//! first principles, and a sweep that runs them all against the library.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{cycle_type, dimension, pair_orbits, perm_matrix, wedderburn, FieldSpec, Permutation};
use crate::error::{Error, Result};
use crate::gcd_symm::{g_vector, gcd_matrix, gcd_matrix_det_and_bounds, gcd_product, h_vector, power_norm, HVector};
use crate::linalg::with_widening;
use crate::partition_poly::{distinct_eigenvalue_count, epsilon, equivalent};
use crate::partitions::{all_partitions, enumerate_partitions, Partition};
use crate::{limits, Int, IntMatrix};

/// `k/l` in lowest terms with `0 <= k < l`; stands for the root of unity
/// `exp(2πi k/l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedFraction {
    num: Int,
    den: Int,
}

impl ReducedFraction {
    pub fn new(k: Int, l: Int) -> Result<Self> {
        if l < 1 {
            return Err(Error::Precondition(format!("denominator {l} must be positive")));
        }
        let k = k.rem_euclid(l);
        let g = gcd_product(k, l);
        Ok(ReducedFraction { num: k / g, den: l / g })
    }

    pub fn numerator(&self) -> Int {
        self.num
    }

    pub fn denominator(&self) -> Int {
        self.den
    }

    /// Whether `m · (k/l)` is an integer, i.e. the root is an m-th root of unity.
    pub fn is_root_of_order_dividing(&self, m: Int) -> bool {
        (m * self.num) % self.den == 0
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `g_i` by literal enumeration of all i-subsets of part indices.
pub fn brute_g(lambda: &Partition, i: usize) -> Result<Int> {
    if i == 0 || i > lambda.s() {
        return Err(Error::Precondition(format!("index {i} outside 1..={}", lambda.s())));
    }
    let mut total = 0;
    subsets(lambda.parts(), 0, i, 0, &mut total);
    Ok(total)
}

// Sum over subsets of size `need` drawn from parts[from..], of the gcd
// with `acc` (the running gcd of the chosen prefix).
fn subsets(parts: &[Int], from: usize, need: usize, acc: Int, total: &mut Int) {
    if need == 0 {
        *total += acc;
        return;
    }
    for k in from..=parts.len() - need {
        subsets(parts, k + 1, need - 1, num_integer::gcd(acc, parts[k]), total);
    }
}

/// The set `V` of all λ_j-th roots of unity, as reduced fractions.
pub fn root_union(lambda: &Partition) -> BTreeSet<ReducedFraction> {
    lambda
        .parts()
        .iter()
        .flat_map(|&l| (0..l).map(move |k| ReducedFraction::new(k, l).expect("positive part")))
        .collect()
}

/// `h_i` = number of roots lying in exactly i of the sets V_j.
pub fn eigenvalue_multiplicities(lambda: &Partition) -> HVector {
    let mut h = vec![0 as Int; lambda.s()];
    for root in root_union(lambda) {
        let hits = lambda
            .parts()
            .iter()
            .filter(|&&l| root.is_root_of_order_dividing(l))
            .count();
        h[hits - 1] += 1;
    }
    HVector::new(h)
}

/// Nullity of the linear map `X ↦ X c_σ - c_σ X` on n×n matrices.
///
/// Unknowns are ordered row-major (X_11, X_12, …, X_nn); the system is
/// n²×n² with entries in {-1, 0, 1}.
pub fn commutant_dimension(sigma: &Permutation, cap: usize) -> Result<usize> {
    let n = sigma.degree();
    if n > cap {
        return Err(Error::Bound {
            what: "matrix degree",
            requested: n,
            limit: cap,
        });
    }
    let system = commutator_system(sigma);
    let rank = with_widening(|| system.rank(), || system.cast::<i128>()?.rank())?;
    Ok(n * n - rank)
}

/// Row (i, j) holds the coefficients of the unknowns in `(X c - c X)_{ij}
/// = Σ_q X_iq c_qj - Σ_p c_ip X_pj`.
pub fn commutator_system(sigma: &Permutation) -> IntMatrix {
    let n = sigma.degree();
    let c = perm_matrix(sigma);
    IntMatrix::from_fn(n * n, n * n, |row, unknown| {
        let (i, j) = (row / n, row % n);
        let (p, q) = (unknown / n, unknown % n);
        let right = if p == i { c.get(q, j) } else { 0 };
        let left = if q == j { c.get(i, p) } else { 0 };
        right - left
    })
}

/// Parameters of a verification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    /// Largest degree for the commutant linear systems.
    pub matrix_cap: usize,
    /// Largest n for the families that enumerate all part subsets.
    pub subset_cap: usize,
    /// Test hook: corrupts one gcd on the brute-force side.
    pub inject_fault: bool,
}

impl VerifyConfig {
    pub fn new(n_max: usize) -> Self {
        VerifyConfig {
            n_max,
            matrix_cap: limits::DEFAULT_MATRIX_CAP,
            subset_cap: limits::DEFAULT_SUBSET_CAP,
            inject_fault: false,
        }
    }

    pub fn with_matrix_cap(mut self, cap: usize) -> Self {
        self.matrix_cap = cap;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_max: usize,
    pub matrix_cap: usize,
    pub families: Vec<FamilyReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyReport::passed)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyReport> {
        self.families.iter().find(|f| f.family == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification up to n = {} (matrix cap {})", self.n_max, self.matrix_cap)?;
        for fam in &self.families {
            let status = if fam.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {:<28} {:>8} instances", fam.family, fam.instances)?;
            for fail in &fam.failures {
                writeln!(
                    f,
                    "     input {}: expected {}, got {}",
                    fail.input, fail.expected, fail.actual
                )?;
            }
        }
        let verdict = if self.passed() { "all checks passed" } else { "FAILED" };
        write!(f, "{verdict}")
    }
}

// Keep at most this many counterexamples per family.
const MAX_RECORDED_FAILURES: usize = 10;

struct Family {
    name: &'static str,
    instances: usize,
    failures: Vec<Failure>,
}

impl Family {
    fn new(name: &'static str) -> Self {
        Family {
            name,
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn check<T: PartialEq + fmt::Debug>(&mut self, input: impl fmt::Display, expected: Result<T>, actual: Result<T>) {
        self.instances += 1;
        let ok = matches!((&expected, &actual), (Ok(a), Ok(b)) if a == b);
        if !ok && self.failures.len() < MAX_RECORDED_FAILURES {
            let show = |r: &Result<T>| match r {
                Ok(v) => format!("{v:?}"),
                Err(e) => format!("error: {e}"),
            };
            self.failures.push(Failure {
                input: input.to_string(),
                expected: show(&expected),
                actual: show(&actual),
            });
        }
    }

    fn finish(self) -> FamilyReport {
        FamilyReport {
            family: self.name.to_string(),
            instances: self.instances,
            failures: self.failures,
        }
    }
}

fn partitions_up_to(n_max: usize) -> Vec<Partition> {
    (1..=n_max).flat_map(all_partitions).collect()
}

fn g_vs_brute(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("g_vector_vs_brute_g");
    let mut fault_pending = cfg.inject_fault;
    for lam in partitions_up_to(cfg.n_max.min(cfg.subset_cap)) {
        let fast = g_vector(&lam);
        for i in 1..=lam.s() {
            let mut brute = brute_g(&lam, i);
            if fault_pending && i == 2 {
                brute = brute.map(|v| v + 1);
                fault_pending = false;
            }
            fam.check(format!("{lam}, i={i}"), brute, fast.as_ref().map(|g| g.get(i)).map_err(Clone::clone));
        }
    }
    fam.finish()
}

fn power_norm_vs_g(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("power_norm_vs_g");
    for lam in partitions_up_to(cfg.n_max.min(cfg.subset_cap)) {
        let g = g_vector(&lam);
        for i in 1..lam.s() {
            let expected = g.as_ref().map(|g| g.get(i + 1)).map_err(Clone::clone);
            fam.check(format!("{lam}, i={i}"), expected, power_norm(&lam, i));
        }
    }
    fam.finish()
}

fn h_vs_eigenvalues(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("h_vector_vs_eigenvalues");
    for lam in partitions_up_to(cfg.n_max) {
        let h = g_vector(&lam).and_then(|g| h_vector(&g));
        fam.check(&lam, Ok(eigenvalue_multiplicities(&lam)), h);
    }
    fam.finish()
}

fn inclusion_exclusion(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("inclusion_exclusion");
    for lam in partitions_up_to(cfg.n_max) {
        let union = root_union(&lam).len() as Int;
        fam.check(&lam, Ok(union), g_vector(&lam).and_then(|g| g.alternating_sum()));
        fam.check(&lam, Ok(union), distinct_eigenvalue_count(&lam));
    }
    fam.finish()
}

fn wedderburn_sums(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("wedderburn_sum_rules");
    let field = FieldSpec::complex();
    for lam in partitions_up_to(cfg.n_max) {
        let h = g_vector(&lam).and_then(|g| h_vector(&g));
        fam.check(format!("{lam} Σi·h_i"), Ok(lam.n()), h.as_ref().map_err(Clone::clone).and_then(|h| h.weighted_sum(1)));
        fam.check(format!("{lam} Σi²·h_i"), dimension(&lam), h.as_ref().map_err(Clone::clone).and_then(|h| h.weighted_sum(2)));
        fam.check(format!("{lam} shape"), dimension(&lam), wedderburn(&lam, &field).map(|s| s.dimension()));
    }
    fam.finish()
}

fn orbit_counts(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("orbit_count_vs_gcd_sum");
    for lam in partitions_up_to(cfg.n_max) {
        let sigma = Permutation::from_cycle_type(&lam);
        let walked = pair_orbits(&sigma).count as Int;
        fam.check(format!("{lam} cycle type"), Ok(lam.clone()), cycle_type(&sigma));
        fam.check(format!("{lam} Σgcd"), gcd_matrix(&lam).total(), Ok(walked));
        fam.check(format!("{lam} dimension"), dimension(&lam), Ok(walked));
    }
    fam.finish()
}

fn commutant(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("commutant_nullity");
    for lam in partitions_up_to(cfg.n_max.min(cfg.matrix_cap)) {
        let sigma = Permutation::from_cycle_type(&lam);
        let nullity = commutant_dimension(&sigma, cfg.matrix_cap).map(|d| d as Int);
        fam.check(&lam, Ok(pair_orbits(&sigma).count as Int), nullity);
    }
    fam.finish()
}

fn determinant_bounds(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("determinant_bounds");
    for lam in partitions_up_to(cfg.n_max).into_iter().filter(Partition::has_distinct_parts) {
        fam.check(&lam, Ok(true), gcd_matrix_det_and_bounds(&lam).map(|b| b.holds()));
    }
    fam.finish()
}

fn scaling(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("scaling_invariance");
    for lam in partitions_up_to(cfg.n_max) {
        for d in 2..=3 {
            let Ok(scaled) = lam.scale(d) else { continue };
            let expected = g_vector(&lam).map(|g| g.values().iter().map(|x| d * x).collect::<Vec<_>>());
            fam.check(format!("g({d}·{lam})"), expected, g_vector(&scaled).map(|g| g.values().to_vec()));
            fam.check(format!("ε({d}·{lam})"), epsilon(&lam), epsilon(&scaled));
        }
    }
    fam.finish()
}

// Smallest prime coprime to every part of both partitions.
fn coprime_prime(a: &Partition, b: &Partition) -> Int {
    let mut m = 2;
    loop {
        let prime = (2..m).take_while(|d| d * d <= m).all(|d| m % d != 0);
        if prime && a.parts().iter().chain(b.parts()).all(|&x| gcd_product(x, m) == 1) {
            return m;
        }
        m += 1;
    }
}

fn append_part(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("append_part");
    for n in 1..=cfg.n_max.min(limits::PAIR_SWEEP_N) {
        for s in 1..=n {
            let list = enumerate_partitions(s, n);
            for (ia, a) in list.iter().enumerate() {
                for b in &list[ia..] {
                    for m in [1, coprime_prime(a, b)] {
                        let single = Partition::single(m).expect("positive");
                        let grown = a.concat(&single).and_then(|x| b.concat(&single).and_then(|y| equivalent(&x, &y)));
                        fam.check(format!("{a}, {b}, m={m}"), equivalent(a, b), grown);
                    }
                }
            }
        }
    }
    fam.finish()
}

fn concatenation(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("concatenation");
    let limit = cfg.n_max.min(limits::CONCAT_SWEEP_N);
    // equivalent pairs (λ, μ) with λ before μ in enumeration order, plus (λ, λ)
    let mut pairs = Vec::new();
    for n in 1..=limit {
        for s in 1..=n {
            let mut by_key: BTreeMap<Vec<Int>, Vec<Partition>> = BTreeMap::new();
            for lam in enumerate_partitions(s, n) {
                if let Ok(g) = g_vector(&lam) {
                    by_key.entry(g.values().to_vec()).or_default().push(lam);
                }
            }
            for class in by_key.values() {
                for (i, a) in class.iter().enumerate() {
                    for b in &class[i..] {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    let coprime = |x: &Partition, y: &Partition| {
        x.parts().iter().all(|&a| y.parts().iter().all(|&b| gcd_product(a, b) == 1))
    };
    for (lam, mu) in pairs.iter().filter(|(a, b)| a != b) {
        for (gamma, delta) in &pairs {
            if coprime(lam, gamma) && coprime(mu, delta) && coprime(lam, delta) && coprime(mu, gamma) {
                let joined = lam
                    .concat(gamma)
                    .and_then(|x| mu.concat(delta).and_then(|y| equivalent(&x, &y)));
                fam.check(format!("{lam}~{mu}, {gamma}~{delta}"), Ok(true), joined);
            }
        }
    }
    fam.finish()
}

fn multiset_sufficiency(cfg: &VerifyConfig) -> FamilyReport {
    let mut fam = Family::new("multiset_sufficiency");
    for n in 1..=cfg.n_max.min(limits::MULTISET_SWEEP_N) {
        for s in 2..=n {
            let mut by_multiset: BTreeMap<Vec<Int>, Vec<Partition>> = BTreeMap::new();
            for lam in enumerate_partitions(s, n) {
                let mut entries = crate::gcd_symm::divisor_matrix(&lam).upper_entries();
                entries.sort_unstable();
                by_multiset.entry(entries).or_default().push(lam);
            }
            for group in by_multiset.values() {
                for other in &group[1..] {
                    fam.check(format!("{} vs {other}", group[0]), Ok(true), equivalent(&group[0], other));
                }
            }
        }
    }
    fam.finish()
}

type FamilyFn = fn(&VerifyConfig) -> FamilyReport;

const FAMILIES: [FamilyFn; 12] = [
    g_vs_brute,
    power_norm_vs_g,
    h_vs_eigenvalues,
    inclusion_exclusion,
    wedderburn_sums,
    orbit_counts,
    commutant,
    determinant_bounds,
    scaling,
    append_part,
    concatenation,
    multiset_sufficiency,
];

/// Runs every check family up to `cfg.n_max`.
///
/// Families run in parallel; the report lists them in a fixed order. An
/// `n_max` of 0 yields an empty, passing report.
pub fn verify_all(cfg: &VerifyConfig) -> Result<VerificationReport> {
    if cfg.n_max > limits::MAX_VERIFY_N {
        return Err(Error::Bound {
            what: "nmax",
            requested: cfg.n_max,
            limit: limits::MAX_VERIFY_N,
        });
    }
    if cfg.matrix_cap > limits::MAX_MATRIX_CAP {
        return Err(Error::Bound {
            what: "matrix cap",
            requested: cfg.matrix_cap,
            limit: limits::MAX_MATRIX_CAP,
        });
    }
    let families = if cfg.n_max == 0 {
        Vec::new()
    } else {
        FAMILIES.par_iter().map(|run| run(cfg)).collect()
    };
    Ok(VerificationReport {
        n_max: cfg.n_max,
        matrix_cap: cfg.matrix_cap,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[Int]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn fractions_reduce() {
        let f = ReducedFraction::new(2, 4).unwrap();
        assert_eq!((f.numerator(), f.denominator()), (1, 2));
        assert_eq!(ReducedFraction::new(4, 4).unwrap(), ReducedFraction::new(0, 1).unwrap());
        assert_eq!(ReducedFraction::new(-1, 4).unwrap(), ReducedFraction::new(3, 4).unwrap());
        assert!(ReducedFraction::new(1, 0).is_err());
        assert!(f.is_root_of_order_dividing(2));
        assert!(!f.is_root_of_order_dividing(3));
    }

    #[test]
    fn brute_g_examples() {
        assert_eq!(brute_g(&p(&[8, 2, 1]), 2).unwrap(), 4);
        assert_eq!(brute_g(&p(&[9]), 1).unwrap(), 9);
        assert_eq!(brute_g(&p(&[12, 4, 3, 1]), 3).unwrap(), 4);
        assert!(brute_g(&p(&[3, 1]), 3).is_err());
        assert!(brute_g(&p(&[3, 1]), 0).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalue_multiplicities(&p(&[4, 2])).values(), &[2, 2]);
        assert_eq!(eigenvalue_multiplicities(&p(&[5])).values(), &[5]);
        assert_eq!(eigenvalue_multiplicities(&p(&[2, 2])).values(), &[0, 2]);
        assert_eq!(eigenvalue_multiplicities(&p(&[8, 2, 1])).values(), &[6, 1, 1]);
        assert_eq!(root_union(&p(&[4, 1])).len(), 4);
    }

    #[test]
    fn commutant_examples() {
        let cyc = Permutation::parse_cycles("(1 2 3)", Some(3)).unwrap();
        assert_eq!(commutant_dimension(&cyc, 12).unwrap(), 3);
        assert_eq!(commutant_dimension(&Permutation::identity(2), 12).unwrap(), 4);
        let swap = Permutation::parse_cycles("(1 2)", Some(3)).unwrap();
        assert_eq!(commutant_dimension(&swap, 12).unwrap(), 5);
        assert!(matches!(
            commutant_dimension(&Permutation::identity(13), 12),
            Err(Error::Bound { .. })
        ));
    }

    #[test]
    fn commutator_rows_have_two_nonzeros_at_most() {
        let sigma = Permutation::parse_cycles("(1 2 3)(4 5)", None).unwrap();
        let sys = commutator_system(&sigma);
        for r in 0..sys.rows() {
            let nz: Vec<Int> = sys.row(r).iter().copied().filter(|&x| x != 0).collect();
            assert!(nz.is_empty() || (nz.len() == 2 && nz.iter().sum::<Int>() == 0));
        }
    }

    #[test]
    fn verify_small() {
        let report = verify_all(&VerifyConfig::new(10)).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.families.len() >= 8);
        assert!(report.families.iter().all(|f| f.instances > 0), "{report}");
    }

    #[test]
    fn verify_empty() {
        let report = verify_all(&VerifyConfig::new(0)).unwrap();
        assert!(report.families.is_empty());
        assert!(report.passed());
    }

    #[test]
    fn verify_detects_injected_fault() {
        let mut cfg = VerifyConfig::new(6);
        cfg.inject_fault = true;
        let report = verify_all(&cfg).unwrap();
        assert!(!report.passed());
        let fam = report.family("g_vector_vs_brute_g").unwrap();
        assert_eq!(fam.failures.len(), 1);
        assert!(report.to_string().contains("FAIL g_vector_vs_brute_g"));
        let others_pass = report.families.iter().filter(|f| f.family != fam.family).all(FamilyReport::passed);
        assert!(others_pass);
    }

    #[test]
    fn verify_rejects_oversized_requests() {
        assert!(matches!(verify_all(&VerifyConfig::new(500)), Err(Error::Bound { .. })));
        let cfg = VerifyConfig::new(5).with_matrix_cap(99);
        assert!(matches!(verify_all(&cfg), Err(Error::Bound { .. })));
    }
}
