//! Polynomial-equivalence classes of P(s, n).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcd_symm::{g_vector, GVector};
use crate::partition_poly::PartitionPolynomial;
use crate::partitions::{enumerate_partitions, Partition};
use crate::{limits, Int};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClass {
    /// Shared g-vector of all members.
    pub key: GVector,
    pub epsilon: PartitionPolynomial,
    pub members: Vec<Partition>,
}

/// p(s,n), i(s,n) and e(s,n,j).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub p: usize,
    pub i: usize,
    /// class size j -> number of classes of that size
    pub e: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClasses {
    pub s: usize,
    pub n: usize,
    pub classes: Vec<EquivalenceClass>,
    pub summary: ClassSummary,
}

impl EquivalenceClasses {
    /// Class sizes in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    /// Index of the class containing `lambda`, if any.
    pub fn class_of(&self, lambda: &Partition) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(lambda))
    }

    /// Members of singleton classes.
    pub fn self_equivalent(&self) -> Vec<Partition> {
        self.classes
            .iter()
            .filter(|c| c.members.len() == 1)
            .map(|c| c.members[0].clone())
            .collect()
    }
}

/// Groups P(s, n) by g-vector.
///
/// Classes are sorted by key; members keep enumeration order. The g-vectors
/// are computed in parallel, and since grouping is keyed and ordered the
/// result does not depend on the number of workers.
pub fn classify(s: usize, n: usize) -> Result<EquivalenceClasses> {
    if s == 0 || n < s {
        return Err(Error::Precondition(format!("classify needs 1 <= s <= n, got s={s}, n={n}")));
    }
    if n > limits::MAX_ENUMERATION_N {
        return Err(Error::Bound {
            what: "n",
            requested: n,
            limit: limits::MAX_ENUMERATION_N,
        });
    }
    let partitions = enumerate_partitions(s, n);
    let keyed = partitions
        .into_par_iter()
        .map(|lam| g_vector(&lam).map(|g| (g, lam)))
        .collect::<Result<Vec<_>>>()?;
    group(s, n, keyed)
}

fn group(s: usize, n: usize, keyed: Vec<(GVector, Partition)>) -> Result<EquivalenceClasses> {
    let p = keyed.len();
    let mut by_key: BTreeMap<GVector, Vec<Partition>> = BTreeMap::new();
    for (g, lam) in keyed {
        by_key.entry(g).or_default().push(lam);
    }
    let classes = by_key
        .into_iter()
        .map(|(key, members)| {
            Ok(EquivalenceClass {
                epsilon: PartitionPolynomial::from_g_vector(&key)?,
                key,
                members,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut e = BTreeMap::new();
    for c in &classes {
        *e.entry(c.members.len()).or_insert(0) += 1;
    }
    Ok(EquivalenceClasses {
        s,
        n,
        summary: ClassSummary { p, i: classes.len(), e },
        classes,
    })
}

/// Partitions of P(s, n) that are equivalent to no other member.
pub fn self_equivalent(s: usize, n: usize) -> Result<Vec<Partition>> {
    Ok(classify(s, n)?.self_equivalent())
}

/// One CSV row: parts, g-vector, class index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub parts: String,
    pub g_vector: String,
    pub class_id: usize,
}

/// Rows in class order, members in enumeration order.
pub fn class_rows(classes: &EquivalenceClasses) -> Vec<ClassRow> {
    let join = |v: &[Int]| v.iter().map(Int::to_string).collect::<Vec<_>>().join(",");
    classes
        .classes
        .iter()
        .enumerate()
        .flat_map(|(id, c)| {
            c.members.iter().map(move |m| ClassRow {
                parts: join(m.parts()),
                g_vector: join(c.key.values()),
                class_id: id,
            })
        })
        .collect()
}
