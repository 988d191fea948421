//! Grothendieck group presentations for finite families of arcs.
//!
//! The split Grothendieck group of a family is free on its arcs. Each AR
//! triangle whose middle term lies in the family splices with zero objects and
//! suspensions into an (n+3)-angle, contributing one alternating-sum relation:
//!
//! * ending at `X` (`τX → M → X`): `(1 + (-1)^n)[X] + (-1)^{n+1}[M] = 0`;
//! * starting at `X` (`X → M → τ⁻¹X`): `(1 + (-1)^n)[X] - [M] = 0`.
//!
//! Only relations whose arcs all lie in the family are emitted. For families
//! other than the canonical one the result is a presentation by a subset of
//! the relations, so it surjects onto the true group.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::angulation::{canonical_family, validate_noncrossing, ArcFamily, CrossingPair, FamilyError};
use crate::ar_quiver::{ar_triangle, arrows_from};
use crate::arc_model::{Arc, ArcError, CategoryParams};
use crate::exec::Execution;
use crate::intlinalg::{cokernel, Cokernel, IntMatrix};
use crate::json::{json_ints, JsonInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum K0Error {
    #[error("family is not non-crossing: {0}")]
    Crossing(CrossingPair),
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("truncation must contain at least 2 arcs, got {0}")]
    TruncationTooSmall(u64),
}

/// Indexes the arcs of a family as generators `0..g`.
#[derive(Debug, Clone)]
pub struct K0Basis {
    family: ArcFamily,
    index: HashMap<Arc, usize>,
}

impl K0Basis {
    pub fn new(family: ArcFamily) -> Self {
        let index = family.arcs().iter().enumerate().map(|(i, a)| (*a, i)).collect();
        K0Basis { family, index }
    }

    pub fn family(&self) -> &ArcFamily {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn index_of(&self, a: &Arc) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn arc(&self, i: usize) -> Arc {
        self.family.arcs()[i]
    }
}

/// One relation `Σ cᵢ [Tᵢ] = 0`. The first nonzero coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationVector {
    pub coefficients: Vec<i64>,
}

impl RelationVector {
    fn normalized(mut coefficients: Vec<i64>) -> Self {
        if coefficients.iter().find(|c| **c != 0).is_some_and(|c| *c < 0) {
            coefficients.iter_mut().for_each(|c| *c = -*c);
        }
        RelationVector { coefficients }
    }

    /// `Σ cᵢ xᵢ`.
    pub fn evaluate(&self, values: &[i64]) -> i128 {
        self.coefficients
            .iter()
            .zip(values)
            .map(|(c, x)| *c as i128 * *x as i128)
            .sum()
    }
}

fn even_sign(n: i64) -> i64 {
    if n % 2 == 0 {
        2
    } else {
        0
    }
}

/// Relation from the triangle ending at generator `i`, if its middle lies in the basis.
fn ending_relation(params: CategoryParams, basis: &K0Basis, i: usize) -> Result<Option<RelationVector>, ArcError> {
    let tri = ar_triangle(params, basis.arc(i))?;
    let Some(middle) = tri.middle.iter().map(|m| basis.index_of(m)).collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    let n = params.n();
    let mut c = vec![0i64; basis.len()];
    c[i] += even_sign(n);
    let sign = if n % 2 == 0 { -1 } else { 1 };
    for j in middle {
        c[j] += sign;
    }
    Ok(Some(RelationVector::normalized(c)))
}

/// Relation from the triangle starting at generator `i`, if its middle lies in the basis.
fn starting_relation(params: CategoryParams, basis: &K0Basis, i: usize) -> Result<Option<RelationVector>, ArcError> {
    let middle = arrows_from(params, basis.arc(i))?;
    let Some(middle) = middle.iter().map(|m| basis.index_of(m)).collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    let mut c = vec![0i64; basis.len()];
    c[i] += even_sign(params.n());
    for j in middle {
        c[j] -= 1;
    }
    Ok(Some(RelationVector::normalized(c)))
}

/// All AR-induced relations supported inside the basis, deduplicated. Order:
/// relations from triangles ending in the family by generator index, then
/// those from triangles starting in it.
pub fn ar_relations(params: CategoryParams, basis: &K0Basis) -> Result<Vec<RelationVector>, K0Error> {
    ar_relations_with(params, basis, Execution::Sequential)
}

pub fn ar_relations_with(
    params: CategoryParams,
    basis: &K0Basis,
    exec: Execution,
) -> Result<Vec<RelationVector>, K0Error> {
    let idx: Vec<usize> = (0..basis.len()).collect();
    let ending = exec.map(&idx, |&i| ending_relation(params, basis, i));
    let starting = exec.map(&idx, |&i| starting_relation(params, basis, i));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in ending.into_iter().chain(starting) {
        if let Some(r) = r? {
            if seen.insert(r.clone()) {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// A finitely generated abelian group presented by arcs and AR relations.
#[derive(Debug, Clone)]
pub struct K0Presentation {
    pub basis: K0Basis,
    pub relations: Vec<RelationVector>,
    pub cokernel: Cokernel,
    /// Coordinates of each generator's class, in basis order.
    pub class_map: Vec<Vec<BigInt>>,
}

impl K0Presentation {
    pub fn free_rank(&self) -> usize {
        self.cokernel.free_rank()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.cokernel.invariant_factors()
    }

    pub fn relation_matrix(&self) -> IntMatrix {
        relation_matrix(self.basis.len(), &self.relations)
    }

    pub fn class_of(&self, a: &Arc) -> Option<&[BigInt]> {
        self.basis.index_of(a).map(|i| self.class_map[i].as_slice())
    }

    /// Wire form: `{invariant_factors, free_rank, classes, relations_used, truncation}`.
    pub fn report(&self, truncation: Option<u64>) -> PresentationReport<'_> {
        PresentationReport {
            invariant_factors: json_ints(&self.invariant_factors()),
            free_rank: self.free_rank(),
            classes: ClassTable(self),
            relations_used: self.relations.len(),
            truncation: truncation.unwrap_or(self.basis.len() as u64),
        }
    }
}

fn relation_matrix(g: usize, relations: &[RelationVector]) -> IntMatrix {
    IntMatrix::from_fn(relations.len(), g, |i, j| BigInt::from(relations[i].coefficients[j]))
}

/// Presents the group generated by `family` modulo its AR relations.
///
/// Free coordinates are oriented so the first generator with a nonzero
/// coordinate is positive; for the canonical family that makes `[T₁] ↦ +1`.
pub fn k0_presentation(params: CategoryParams, family: &ArcFamily) -> Result<K0Presentation, K0Error> {
    validate_noncrossing(family).map_err(K0Error::Crossing)?;
    let basis = K0Basis::new(family.clone());
    let relations = ar_relations(params, &basis)?;
    let coker = cokernel(&relation_matrix(basis.len(), &relations));
    let class_map = (0..basis.len()).map(|i| coker.class_of_generator(i)).collect();
    Ok(K0Presentation {
        basis,
        relations,
        cokernel: coker,
        class_map,
    })
}

#[derive(Serialize)]
pub struct PresentationReport<'a> {
    pub invariant_factors: Vec<JsonInt>,
    pub free_rank: usize,
    pub classes: ClassTable<'a>,
    pub relations_used: usize,
    pub truncation: u64,
}

/// `{"[t,u]": [coords], ...}` in basis order.
pub struct ClassTable<'a>(&'a K0Presentation);

impl Serialize for ClassTable<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let p = self.0;
        let mut map = serializer.serialize_map(Some(p.basis.len()))?;
        for (i, coords) in p.class_map.iter().enumerate() {
            let a = p.basis.arc(i);
            map.serialize_entry(&format!("[{},{}]", a.t(), a.u()), &json_ints(coords))?;
        }
        map.end()
    }
}

/// The class of `T_i` as a multiple of `[T₁]`: `i` for even `n`; for odd `n`,
/// `0` at even `i` and `(-1)^k` at `i = 2k + 1`.
pub fn canonical_class_formula(n: i64, i: u64) -> i64 {
    if n % 2 == 0 {
        i as i64
    } else if i.is_multiple_of(2) {
        0
    } else if (i / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of checking that the truncated canonical family presents ℤ with
/// the expected generator classes.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: i64,
    pub m: u64,
    pub free_rank: usize,
    pub invariant_factors: Vec<JsonInt>,
    pub relations_used: usize,
    /// Free coordinate of `[T_i]` for `i = 1..=m`, when the group is ℤ.
    pub classes: Vec<JsonInt>,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub first_failure: Option<String>,
    pub summary: String,
}

pub fn verify_theorem(params: CategoryParams, m: u64) -> Result<VerifyReport, K0Error> {
    if m < 2 {
        return Err(K0Error::TruncationTooSmall(m));
    }
    let n = params.n();
    let family = canonical_family(params, m)?;
    let pres = k0_presentation(params, &family)?;
    let torsion = pres.invariant_factors();
    let mut checks = Vec::new();

    checks.push(Check {
        name: "free_rank",
        passed: pres.free_rank() == 1,
        detail: format!("free_rank={}", pres.free_rank()),
    });
    checks.push(Check {
        name: "torsion",
        passed: torsion.is_empty(),
        detail: format!(
            "torsion={:?}",
            torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>()
        ),
    });

    let free_coord: Vec<BigInt> = pres
        .class_map
        .iter()
        .map(|c| c.first().cloned().unwrap_or_default())
        .collect();
    let formula_detail = if pres.free_rank() != 1 || !torsion.is_empty() {
        Some("group is not Z, class formula not applicable".to_string())
    } else if !free_coord[0].is_one() {
        Some(format!("[T_1] maps to {} instead of 1", free_coord[0]))
    } else {
        (1..=m).find_map(|i| {
            let want = canonical_class_formula(n, i);
            let got = &free_coord[(i - 1) as usize];
            (*got != BigInt::from(want)).then(|| format!("[T_{i}] = {got}, expected {want}"))
        })
    };
    checks.push(Check {
        name: "class_formula",
        passed: formula_detail.is_none(),
        detail: formula_detail.unwrap_or_else(|| {
            if n % 2 == 0 {
                format!("[T_i] = i[T_1] for i <= {m}")
            } else {
                format!("[T_2k] = 0, [T_2k+1] = (-1)^k [T_1] for indices <= {m}")
            }
        }),
    });
    checks.push(Check {
        name: "relations_vanish",
        passed: pres
            .relations
            .iter()
            .all(|r| pres.cokernel.project_i64(&r.coefficients).iter().all(Zero::is_zero)),
        detail: format!("{} relations map to zero", pres.relations.len()),
    });

    let first_failure = checks
        .iter()
        .find(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail));
    let passed = first_failure.is_none();
    let summary = if passed {
        let shape = if n % 2 == 0 { "linear" } else { "alternate" };
        format!("free_rank=1, torsion=[], classes {shape}")
    } else {
        format!("FAIL {}", first_failure.as_deref().unwrap_or_default())
    };
    Ok(VerifyReport {
        n,
        m,
        free_rank: pres.free_rank(),
        invariant_factors: json_ints(&torsion),
        relations_used: pres.relations.len(),
        classes: if pres.free_rank() == 1 {
            json_ints(&free_coord)
        } else {
            Vec::new()
        },
        checks,
        passed,
        first_failure,
        summary,
    })
}

/// Runs [`verify_theorem`] over every `(n, m)` pair, in row-major order.
pub fn verify_grid(ns: &[i64], ms: &[u64], exec: Execution) -> Result<Vec<VerifyReport>, K0Error> {
    let jobs: Vec<(i64, u64)> = ns.iter().flat_map(|&n| ms.iter().map(move |&m| (n, m))).collect();
    exec.map(&jobs, |&(n, m)| verify_theorem(CategoryParams::new(n)?, m))
        .into_iter()
        .collect()
}

/// Free coordinate of a class as `i64`, for presentations of ℤ.
pub fn free_coordinate(class: &[BigInt]) -> Option<i64> {
    class.first().and_then(ToPrimitive::to_i64)
}
