//! Report types emitted by each command. All of them round-trip through JSON.

use std::collections::BTreeMap;

use invalg::classify::{class_rows, ClassRow};
use invalg::{
    count_partitions, dimension, distinct_eigenvalue_count, enumerate_partitions, epsilon,
    equivalent, g_vector, gcd_matrix_det_and_bounds, h_vector, isomorphic, limits,
    morita_equivalent, pair_orbits, wedderburn, commutant_dimension, cycle_type, DetBounds, Error,
    FieldSpec, GVector, HVector, Int, MoritaReport, Partition, PartitionPolynomial, Permutation,
    Result, WedderburnShape,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub partition: Partition,
    pub n: Int,
    pub s: usize,
    pub g_vector: GVector,
    pub h_vector: HVector,
    pub epsilon: String,
    /// Low degree first.
    pub epsilon_coefficients: PartitionPolynomial,
    pub distinct_eigenvalues: Int,
    pub dimension: Int,
    pub determinant: DetBounds,
    pub characteristic: u64,
    pub algebraically_closed: bool,
    pub semisimple: bool,
    pub dividing_parts: Vec<Int>,
    pub wedderburn: Option<WedderburnShape>,
    pub wedderburn_text: Option<String>,
    pub note: Option<String>,
}

/// "2 divides 4 and 2"
fn divides_phrase(p: u64, parts: &[Int]) -> String {
    let list: Vec<String> = parts.iter().map(Int::to_string).collect();
    let joined = match list.split_last() {
        Some((last, rest)) if !rest.is_empty() => format!("{} and {last}", rest.join(", ")),
        _ => list.join(""),
    };
    format!("{p} divides {joined}")
}

// Structure results are unavailable (not closed or not semisimple) rather
// than wrong; other errors propagate.
fn optional<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::Precondition(msg)) => Ok(Err(msg)),
        Err(e) => Err(e),
    }
}

pub fn analyze(lambda: &Partition, field: &FieldSpec) -> Result<AnalyzeReport> {
    let g = g_vector(lambda)?;
    let h = h_vector(&g)?;
    let eps = epsilon(lambda)?;
    let dividing_parts = field.dividing_parts(lambda);
    let semisimple = dividing_parts.is_empty();
    let (wedderburn, note) = if !semisimple {
        let why = divides_phrase(field.characteristic(), &dividing_parts);
        (None, Some(format!("not semisimple ({why})")))
    } else {
        match optional(wedderburn(lambda, field))? {
            Ok(shape) => (Some(shape), None),
            Err(msg) => (None, Some(msg)),
        }
    };
    Ok(AnalyzeReport {
        partition: lambda.clone(),
        n: lambda.n(),
        s: lambda.s(),
        epsilon: eps.to_string(),
        epsilon_coefficients: eps,
        distinct_eigenvalues: distinct_eigenvalue_count(lambda)?,
        dimension: dimension(lambda)?,
        determinant: gcd_matrix_det_and_bounds(lambda)?,
        characteristic: field.characteristic(),
        algebraically_closed: field.algebraically_closed(),
        semisimple,
        dividing_parts,
        wedderburn_text: wedderburn.as_ref().map(ToString::to_string),
        wedderburn,
        note,
        g_vector: g,
        h_vector: h,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub equivalent: bool,
    pub epsilon: [String; 2],
    pub degrees: [Int; 2],
    pub isomorphic: Option<bool>,
    pub morita: Option<bool>,
    pub simple_blocks: Option<[Int; 2]>,
    pub signed_values: Option<[Int; 2]>,
    pub note: Option<String>,
}

pub fn compare(lambda: &Partition, mu: &Partition, field: &FieldSpec) -> Result<CompareReport> {
    let iso = optional(isomorphic(lambda, mu, field))?;
    let mor = optional(morita_equivalent(lambda, mu, field))?;
    let note = iso.as_ref().err().or(mor.as_ref().err()).cloned();
    let mor = mor.ok();
    Ok(CompareReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        equivalent: equivalent(lambda, mu)?,
        epsilon: [epsilon(lambda)?.to_string(), epsilon(mu)?.to_string()],
        degrees: [lambda.n(), mu.n()],
        isomorphic: iso.ok(),
        morita: mor.map(|m| m.equivalent),
        simple_blocks: mor.map(|m| m.simple_blocks),
        signed_values: mor.map(|m| m.signed_values),
        note,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub isomorphic: bool,
    pub shapes: [WedderburnShape; 2],
    pub shape_text: [String; 2],
}

pub fn iso(lambda: &Partition, mu: &Partition, field: &FieldSpec) -> Result<IsoReport> {
    let shapes = [wedderburn(lambda, field)?, wedderburn(mu, field)?];
    Ok(IsoReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        isomorphic: isomorphic(lambda, mu, field)?,
        shape_text: [shapes[0].to_string(), shapes[1].to_string()],
        shapes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoritaCommandReport {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(flatten)]
    pub verdict: MoritaReport,
}

pub fn morita(lambda: &Partition, mu: &Partition, field: &FieldSpec) -> Result<MoritaCommandReport> {
    Ok(MoritaCommandReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        verdict: morita_equivalent(lambda, mu, field)?,
    })
}

pub fn classify_rows(s: usize, n: usize) -> Result<(invalg::EquivalenceClasses, Vec<ClassRow>)> {
    let classes = invalg::classify(s, n)?;
    let rows = class_rows(&classes);
    Ok((classes, rows))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionList {
    pub s: usize,
    pub n: usize,
    pub partitions: Vec<Partition>,
}

pub fn self_equivalent(s: usize, n: usize) -> Result<PartitionList> {
    Ok(PartitionList {
        s,
        n,
        partitions: invalg::self_equivalent(s, n)?,
    })
}

pub fn enumerate(s: usize, n: usize) -> Result<PartitionList> {
    if n > limits::MAX_ENUMERATION_N {
        return Err(Error::Bound {
            what: "n",
            requested: n,
            limit: limits::MAX_ENUMERATION_N,
        });
    }
    if s == 0 || n < s {
        return Err(Error::Precondition(format!("need 1 <= s <= n, got s = {s}, n = {n}")));
    }
    Ok(PartitionList {
        s,
        n,
        partitions: enumerate_partitions(s, n),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub s: usize,
    pub n: usize,
    pub p: Int,
    pub i: usize,
    /// class size -> number of classes of that size
    pub e: BTreeMap<usize, usize>,
}

pub fn count(s: usize, n: usize) -> Result<CountReport> {
    let classes = invalg::classify(s, n)?;
    let p = count_partitions(s, n)?;
    if p as usize != classes.summary.p {
        return Err(Error::Consistency(format!(
            "p({s},{n}) = {p} but enumeration produced {}",
            classes.summary.p
        )));
    }
    Ok(CountReport {
        s,
        n,
        p,
        i: classes.summary.i,
        e: classes.summary.e,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermReport {
    pub permutation: String,
    pub degree: usize,
    pub cycle_type: Partition,
    pub pair_orbits: usize,
    pub dimension: Int,
    /// Solved directly when the degree is within the matrix cap.
    pub commutant_nullity: Option<usize>,
    pub wedderburn: Option<WedderburnShape>,
    pub wedderburn_text: Option<String>,
    pub note: Option<String>,
}

pub fn perm(cycles: &str, degree: Option<usize>, matrix_cap: usize, field: &FieldSpec) -> Result<PermReport> {
    if matrix_cap > limits::MAX_MATRIX_CAP {
        return Err(Error::Bound {
            what: "matrix cap",
            requested: matrix_cap,
            limit: limits::MAX_MATRIX_CAP,
        });
    }
    let sigma = Permutation::parse_cycles(cycles, degree)?;
    let lambda = cycle_type(&sigma)?;
    let orbits = pair_orbits(&sigma).count;
    let dim = dimension(&lambda)?;
    if orbits as Int != dim {
        return Err(Error::Consistency(format!(
            "{orbits} pair orbits but dimension formula gives {dim}"
        )));
    }
    let commutant_nullity = if sigma.degree() <= matrix_cap {
        let nullity = commutant_dimension(&sigma, matrix_cap)?;
        if nullity != orbits {
            return Err(Error::Consistency(format!(
                "commutant has dimension {nullity} but there are {orbits} pair orbits"
            )));
        }
        Some(nullity)
    } else {
        None
    };
    let (shape, note) = match optional(wedderburn(&lambda, field))? {
        Ok(shape) => (Some(shape), None),
        Err(msg) => (None, Some(msg)),
    };
    Ok(PermReport {
        permutation: sigma.to_string(),
        degree: sigma.degree(),
        cycle_type: lambda,
        pair_orbits: orbits,
        dimension: dim,
        commutant_nullity,
        wedderburn_text: shape.as_ref().map(ToString::to_string),
        wedderburn: shape,
        note,
    })
}
