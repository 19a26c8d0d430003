//! Lattices over the completed algebra as labels: projectives `P_j` and arrow
//! ideals `L_α = Aα`. Resolutions, the translate τ and the AR quiver are all
//! read off σ and ρ.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::differential_path;
use crate::presentation::{ArrowId, GentlePresentation, StrictPresentation, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LatticeLabel {
    Projective(VertexId),
    ArrowIdeal(ArrowId),
}

impl LatticeLabel {
    pub fn is_projective(self) -> bool {
        matches!(self, LatticeLabel::Projective(_))
    }

    /// `P(j)` or `L(α)` with the presentation's names.
    pub fn name(self, gp: &GentlePresentation) -> String {
        match self {
            LatticeLabel::Projective(v) => format!("P({})", gp.vertex_name(v)),
            LatticeLabel::ArrowIdeal(a) => format!("L({})", gp.arrow_name(a)),
        }
    }
}

/// `L_α ≅ P_{t(α)}` exactly when `t(α)` is a transition vertex.
pub fn canonicalize(sp: &StrictPresentation, raw: LatticeLabel) -> LatticeLabel {
    match raw {
        LatticeLabel::ArrowIdeal(a) if sp.is_transition(sp.target(a)) => {
            LatticeLabel::Projective(sp.target(a))
        }
        other => other,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ResolutionKind {
    Periodic { period: usize },
    Finite { length: usize },
}

/// `⋯ → P_{t(α₂)} →·α₂ P_{t(α₁)} →·α₁ L_α` along `d_α = (α₁, α₂, …)`; for a
/// periodic resolution the listed terms repeat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub terms: Vec<VertexId>,
    pub maps: Vec<ArrowId>,
}

pub fn projective_resolution(sp: &StrictPresentation, alpha: ArrowId) -> Resolution {
    let d = differential_path(sp, alpha);
    let kind = if d.is_cycle() {
        ResolutionKind::Periodic { period: d.len() }
    } else {
        ResolutionKind::Finite {
            length: d.len() - 1,
        }
    };
    Resolution {
        kind,
        terms: d.arrows.iter().map(|&a| sp.target(a)).collect(),
        maps: d.arrows,
    }
}

/// The kernel of the projective cover `P_{t(α)} → L_α`, read from the second
/// map of the resolution; `None` when the cover is an isomorphism.
pub fn syzygy(sp: &StrictPresentation, alpha: ArrowId) -> Option<LatticeLabel> {
    let resolution = projective_resolution(sp, alpha);
    let next = match resolution.kind {
        ResolutionKind::Periodic { period } => Some(resolution.maps[1 % period]),
        ResolutionKind::Finite { .. } => resolution.maps.get(1).copied(),
    };
    next.map(|b| canonicalize(sp, LatticeLabel::ArrowIdeal(b)))
}

/// `τ(L_α) = L_{ρ(α)}`; undefined on projectives.
pub fn tau(sp: &StrictPresentation, node: LatticeLabel) -> Option<LatticeLabel> {
    match canonicalize(sp, node) {
        LatticeLabel::Projective(_) => None,
        LatticeLabel::ArrowIdeal(a) => sp
            .rho(a)
            .map(|b| canonicalize(sp, LatticeLabel::ArrowIdeal(b))),
    }
}

/// Whether `L_α` is a non-projective maximal Cohen–Macaulay lattice.
pub fn is_mcm(sp: &StrictPresentation, alpha: ArrowId) -> bool {
    differential_path(sp, alpha).is_cycle()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitKind {
    Finite,
    Periodic,
}

/// Nodes listed along τ, starting from a node without τ-preimage (finite) or
/// from the earliest-declared arrow ideal (periodic).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauOrbit {
    pub kind: OrbitKind,
    pub nodes: Vec<LatticeLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArQuiver {
    pub nodes: Vec<LatticeLabel>,
    /// Irreducible maps `(from, to)`.
    pub irreducible: Vec<(LatticeLabel, LatticeLabel)>,
    pub tau: Vec<(LatticeLabel, LatticeLabel)>,
    pub orbits: Vec<TauOrbit>,
}

impl ArQuiver {
    pub fn finite_orbits(&self) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.kind == OrbitKind::Finite)
            .count()
    }

    pub fn periodic_orbits(&self) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.kind == OrbitKind::Periodic)
            .count()
    }

    pub fn tau_of(&self, node: LatticeLabel) -> Option<LatticeLabel> {
        self.tau.iter().find(|(x, _)| *x == node).map(|&(_, y)| y)
    }
}

pub fn ar_quiver(sp: &StrictPresentation) -> ArQuiver {
    let mut nodes: Vec<LatticeLabel> = sp.vertex_ids().map(LatticeLabel::Projective).collect();
    let ideals: Vec<ArrowId> = sp
        .arrow_ids()
        .filter(|&a| sp.is_two_regular(sp.target(a)))
        .collect();
    nodes.extend(ideals.iter().map(|&a| LatticeLabel::ArrowIdeal(a)));

    let mut irreducible = Vec::new();
    let mut tau_pairs = Vec::new();
    for &a in &ideals {
        let l = LatticeLabel::ArrowIdeal(a);
        let p = LatticeLabel::Projective(sp.target(a));
        let translate = tau(sp, l).expect("ρ is defined into a two-regular vertex");
        irreducible.push((translate, p));
        irreducible.push((p, l));
        tau_pairs.push((l, translate));
    }
    for j in sp.vertex_ids().filter(|&j| sp.is_transition(j)) {
        let gamma = sp.quiver().outgoing(j)[0];
        let radical = canonicalize(sp, LatticeLabel::ArrowIdeal(gamma));
        irreducible.push((radical, LatticeLabel::Projective(j)));
    }

    let orbits = tau_orbits(&ideals, &tau_pairs);
    ArQuiver {
        nodes,
        irreducible,
        tau: tau_pairs,
        orbits,
    }
}

fn tau_orbits(ideals: &[ArrowId], tau: &[(LatticeLabel, LatticeLabel)]) -> Vec<TauOrbit> {
    let next = |x: LatticeLabel| tau.iter().find(|(a, _)| *a == x).map(|&(_, b)| b);
    let has_preimage: BTreeSet<LatticeLabel> = tau.iter().map(|&(_, b)| b).collect();
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();

    // Finite orbits first, from their τ-sources; what remains lies on cycles.
    let sources = ideals
        .iter()
        .map(|&a| LatticeLabel::ArrowIdeal(a))
        .filter(|l| !has_preimage.contains(l));
    for start in sources {
        let mut nodes = vec![start];
        let mut current = start;
        while let Some(n) = next(current) {
            nodes.push(n);
            current = n;
        }
        seen.extend(nodes.iter().copied());
        orbits.push(TauOrbit {
            kind: OrbitKind::Finite,
            nodes,
        });
    }
    for &a in ideals {
        let start = LatticeLabel::ArrowIdeal(a);
        if seen.contains(&start) {
            continue;
        }
        let mut nodes = vec![start];
        let mut current = next(start).expect("remaining ideals lie on τ-cycles");
        while current != start {
            nodes.push(current);
            current = next(current).expect("remaining ideals lie on τ-cycles");
        }
        seen.extend(nodes.iter().copied());
        orbits.push(TauOrbit {
            kind: OrbitKind::Periodic,
            nodes,
        });
    }
    orbits
}

impl fmt::Display for LatticeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeLabel::Projective(v) => write!(f, "P[{}]", v.0),
            LatticeLabel::ArrowIdeal(a) => write!(f, "L[{}]", a.0),
        }
    }
}
