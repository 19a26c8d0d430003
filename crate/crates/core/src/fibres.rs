//! Fibres of the completed algebra over `Spec k⟦c⟧`: at the generic point a
//! product of matrix algebras, one block per admissible cycle; at the closed
//! point the quotient `A/cA`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{admissible_decomposition, is_finite_projective};
use crate::error::{Error, Result};
use crate::presentation::{ArrowId, GentlePresentation, VertexClass};

/// Block sizes of the generic fibre, largest first.
pub fn generic_fibre(gp: &GentlePresentation) -> Vec<usize> {
    let mut lengths = admissible_decomposition(gp).lengths();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// `|Q₀| + Σ_α (ℓ_α − 1) + #two-regular vertices`.
pub fn rank(gp: &GentlePresentation) -> usize {
    let paths: usize = admissible_decomposition(gp)
        .cycles
        .iter()
        .map(|c| c.len() * (c.len() - 1))
        .sum();
    let two_regular = gp
        .vertex_ids()
        .filter(|&v| gp.vertex_class(v) == VertexClass::TwoRegularGentle)
        .count();
    gp.quiver().vertex_count() + paths + two_regular
}

/// A relation `Σ paths = 0`; each path is listed in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibreRelation {
    pub terms: Vec<Vec<ArrowId>>,
}

impl FibreRelation {
    /// Written right to left, e.g. `β·α = 0` for "α then β".
    pub fn display(&self, gp: &GentlePresentation) -> String {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|path| {
                path.iter()
                    .rev()
                    .map(|&a| gp.arrow_name(a))
                    .collect::<Vec<_>>()
                    .join("·")
            })
            .collect();
        format!("{} = 0", terms.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialFibre {
    /// The original quadratic relations followed by the cycle relations.
    pub relations: Vec<FibreRelation>,
    pub dimension: usize,
}

/// `A/cA`: the quiver with `I` plus `c·e_v = 0` at each vertex, i.e. the
/// admissible cycle at a transition vertex and the sum of the two cycles at
/// a two-regular vertex.
pub fn special_fibre(gp: &GentlePresentation) -> Result<SpecialFibre> {
    require_finite_projective(gp)?;
    let mut relations: Vec<FibreRelation> = gp
        .relations()
        .pairs()
        .iter()
        .map(|&(a, b)| FibreRelation {
            terms: vec![vec![a, b]],
        })
        .collect();
    let decomposition = admissible_decomposition(gp);
    let cycle_at = |a: ArrowId| -> Vec<ArrowId> {
        let cycle = decomposition
            .cycles
            .iter()
            .find(|c| c.arrows.contains(&a))
            .expect("finite projective: every arrow lies on an admissible cycle");
        let start = cycle.arrows.iter().position(|&b| b == a).unwrap();
        let mut rotated = cycle.arrows[start..].to_vec();
        rotated.extend_from_slice(&cycle.arrows[..start]);
        rotated
    };
    for v in gp.vertex_ids() {
        let out = gp.quiver().outgoing(v);
        if out.is_empty() {
            continue;
        }
        relations.push(FibreRelation {
            terms: out.into_iter().map(cycle_at).collect(),
        });
    }
    Ok(SpecialFibre {
        relations,
        dimension: rank(gp),
    })
}

/// `dim_k A/cⁿA = n · rank`.
pub fn intermediate_dim(gp: &GentlePresentation, n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidQuotientOrder(n));
    }
    require_finite_projective(gp)?;
    Ok(n * rank(gp))
}

fn require_finite_projective(gp: &GentlePresentation) -> Result<()> {
    let fp = is_finite_projective(gp)?;
    if fp.finite_projective {
        Ok(())
    } else {
        Err(Error::NotFiniteProjective(gp.names(&fp.witnesses)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreReport {
    pub rank: usize,
    pub generic: Vec<usize>,
    pub special_relations: Vec<String>,
}

pub fn fibre_report(gp: &GentlePresentation) -> Result<FibreReport> {
    let special = special_fibre(gp)?;
    Ok(FibreReport {
        rank: special.dimension,
        generic: generic_fibre(gp),
        special_relations: special.relations.iter().map(|r| r.display(gp)).collect(),
    })
}

impl fmt::Display for FibreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.generic.iter().map(|l| format!("Mat{l}")).collect();
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(
            f,
            "generic fibre: {}",
            if blocks.is_empty() {
                "0".into()
            } else {
                blocks.join(" × ")
            }
        )?;
        writeln!(f, "special fibre: dimension {}", self.rank)?;
        for r in &self.special_relations {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
