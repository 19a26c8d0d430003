//! The full analysis of one presentation, as plain names and integers so that
//! it round-trips through JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{assign_signs, verify_theta, SignAssignment, TruncatedAlgebra};
use crate::combinatorics::{
    admissible_decomposition, differential_decomposition, glue_split, injective_dimension,
    is_finite_projective, koszul_dual, ComponentKind,
};
use crate::error::Result;
use crate::fibres::{fibre_report, FibreReport};
use crate::lattices::ar_quiver;
use crate::presentation::{classify_strict, GentlePresentation, StrictPresentation};
use crate::singularity;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub name: String,
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteProjectiveVerdict {
    pub finite_projective: bool,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: String,
    pub arrows: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulSummary {
    pub name: String,
    pub arrows: usize,
    pub relations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArSummary {
    pub nodes: usize,
    pub projectives: usize,
    pub irreducible: usize,
    pub finite_orbits: usize,
    pub periodic_orbits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub dc_arrows: Vec<String>,
    pub orbits: Vec<Vec<String>>,
    pub invariant: Vec<usize>,
}

/// Which of the two canonical sign assignments to use: `+1` on the first or on
/// the second declared arrow out of each two-regular vertex.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignChoice {
    #[default]
    Declaration,
    Flipped,
}

impl SignChoice {
    pub fn signs(self, sp: &StrictPresentation) -> SignAssignment {
        let signs = assign_signs(sp);
        match self {
            SignChoice::Declaration => signs,
            SignChoice::Flipped => signs.flipped(sp),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub signs: SignChoice,
    pub positive_arrows: Vec<String>,
    pub rank: usize,
    /// `cartan[s][t]`: number of basis elements from vertex `s` to vertex `t`,
    /// i.e. the k[c]-rank of that Peirce component.
    pub cartan: Vec<Vec<usize>>,
}

pub fn algebra_summary(sp: &StrictPresentation, choice: SignChoice) -> Result<AlgebraSummary> {
    let signs = choice.signs(sp);
    let positive = sp
        .arrow_ids()
        .filter(|&a| signs.is_positive(a))
        .collect::<Vec<_>>();
    let alg = TruncatedAlgebra::new(sp.clone(), signs, 2)?;
    let n = sp.quiver().vertex_count();
    let mut cartan = vec![vec![0; n]; n];
    for &item in alg.basis() {
        cartan[alg.item_source(item).0][alg.item_target(item).0] += 1;
    }
    Ok(AlgebraSummary {
        signs: choice,
        positive_arrows: sp.names(&positive),
        rank: alg.rank(),
        cartan,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaVerdict {
    pub order: usize,
    pub checks: usize,
    pub failures: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub presentation: Summary,
    pub gentle: bool,
    pub strict: bool,
    pub vertex_classes: BTreeMap<String, String>,
    pub admissible_cycles: Vec<Vec<String>>,
    pub differential_cycles: Vec<Vec<String>>,
    pub differential_walks: Vec<Vec<String>>,
    pub injective_dimension: usize,
    pub finite_projective: FiniteProjectiveVerdict,
    pub glued_components: Vec<Component>,
    pub koszul_dual: KoszulSummary,
    /// Present only for admissible-complete presentations.
    pub algebra: Option<AlgebraSummary>,
    /// Present only for admissible-complete presentations.
    pub ar_quiver: Option<ArSummary>,
    pub singularity: SingularityReport,
    /// Present only for finite-projective presentations.
    pub fibres: Option<FibreReport>,
    /// Present only when requested and the presentation is admissible-complete.
    pub omega_verify: Option<OmegaVerdict>,
}

pub fn singularity_report(gp: &GentlePresentation) -> SingularityReport {
    SingularityReport {
        dc_arrows: gp.names(&singularity::dc_arrows(gp)),
        orbits: singularity::orbits(gp)
            .iter()
            .map(|o| gp.names(o))
            .collect(),
        invariant: singularity::invariant(gp),
    }
}

pub fn analyze(
    gp: &GentlePresentation,
    omega_order: Option<usize>,
    signs: SignChoice,
) -> Result<Report> {
    let q = gp.quiver();
    let strict = classify_strict(gp).admissible_complete;
    let fp = is_finite_projective(gp)?;
    let dual = koszul_dual(gp)?;
    let dd = differential_decomposition(gp);
    let strict_gp = if strict {
        Some(StrictPresentation::new(gp.clone())?)
    } else {
        None
    };

    let ar_quiver = strict_gp.as_ref().map(|sp| {
        let ar = ar_quiver(sp);
        ArSummary {
            nodes: ar.nodes.len(),
            projectives: ar.nodes.iter().filter(|n| n.is_projective()).count(),
            irreducible: ar.irreducible.len(),
            finite_orbits: ar.finite_orbits(),
            periodic_orbits: ar.periodic_orbits(),
        }
    });
    let algebra = strict_gp
        .as_ref()
        .map(|sp| algebra_summary(sp, signs))
        .transpose()?;
    let omega_verify = match (omega_order, strict_gp) {
        (Some(order), Some(sp)) => {
            let report = verify_theta(sp.clone(), signs.signs(&sp), order)?;
            Some(OmegaVerdict {
                order,
                checks: report.total_checks(),
                failures: report.failures.len(),
                passed: report.passed(),
            })
        }
        _ => None,
    };

    Ok(Report {
        presentation: Summary {
            name: q.name().to_string(),
            vertices: q.vertex_count(),
            arrows: q.arrow_count(),
            relations: gp.relations().len(),
        },
        gentle: true,
        strict,
        vertex_classes: gp
            .vertex_ids()
            .map(|v| {
                (
                    gp.vertex_name(v).to_string(),
                    gp.vertex_class(v).to_string(),
                )
            })
            .collect(),
        admissible_cycles: admissible_decomposition(gp)
            .cycles
            .iter()
            .map(|c| gp.names(&c.arrows))
            .collect(),
        differential_cycles: dd.cycles.iter().map(|c| gp.names(&c.arrows)).collect(),
        differential_walks: dd.walks.iter().map(|w| gp.names(&w.arrows)).collect(),
        injective_dimension: injective_dimension(gp),
        finite_projective: FiniteProjectiveVerdict {
            finite_projective: fp.finite_projective,
            witnesses: gp.names(&fp.witnesses),
        },
        glued_components: glue_split(gp)
            .components
            .iter()
            .map(|c| Component {
                kind: match c.kind {
                    ComponentKind::A => "A".into(),
                    ComponentKind::ATilde => "Ã".into(),
                },
                arrows: gp.names(&c.arrows),
            })
            .collect(),
        koszul_dual: KoszulSummary {
            name: dual.quiver().name().to_string(),
            arrows: dual.quiver().arrow_count(),
            relations: dual.relations().len(),
        },
        algebra,
        ar_quiver,
        singularity: singularity_report(gp),
        fibres: if fp.finite_projective {
            Some(fibre_report(gp)?)
        } else {
            None
        },
        omega_verify,
    })
}
