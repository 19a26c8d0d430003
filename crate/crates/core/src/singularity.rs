//! The singularity category as finite data: one indecomposable `L_α` per
//! arrow on a differential cycle, shift `Σ⁻¹ = ρ`, Hom spaces of dimension δ.

use serde::Serialize;

use crate::combinatorics::differential_path;
use crate::error::{Error, Result};
use crate::presentation::{ArrowId, GentlePresentation};

/// Arrows on differential cycles, in declaration order.
pub fn dc_arrows(gp: &GentlePresentation) -> Vec<ArrowId> {
    gp.arrow_ids()
        .filter(|&a| differential_path(gp, a).is_cycle())
        .collect()
}

fn ensure_dc(gp: &GentlePresentation, a: ArrowId) -> Result<()> {
    if differential_path(gp, a).is_cycle() {
        Ok(())
    } else {
        Err(Error::NotDifferentialCycleArrow(
            gp.arrow_name(a).to_string(),
        ))
    }
}

/// `Σ⁻¹(L_α) = L_{ρ(α)}`.
pub fn shift_inverse(gp: &GentlePresentation, a: ArrowId) -> Result<ArrowId> {
    ensure_dc(gp, a)?;
    Ok(gp.rho(a).expect("ρ is total on differential cycles"))
}

/// `Σ(L_α) = L_{ρ⁻¹(α)}`.
pub fn shift(gp: &GentlePresentation, a: ArrowId) -> Result<ArrowId> {
    ensure_dc(gp, a)?;
    Ok(gp
        .rho_preimage(a)
        .expect("ρ is bijective on differential cycles"))
}

/// ρ-orbits on the differential-cycle arrows, each starting at its
/// earliest-declared member; orbits ordered by that member.
pub fn orbits(gp: &GentlePresentation) -> Vec<Vec<ArrowId>> {
    let mut seen = vec![false; gp.quiver().arrow_count()];
    let mut out = Vec::new();
    for a in dc_arrows(gp) {
        if seen[a.0] {
            continue;
        }
        let mut orbit = vec![a];
        let mut b = gp.rho(a).expect("ρ is total on differential cycles");
        while b != a {
            orbit.push(b);
            b = gp.rho(b).expect("ρ is total on differential cycles");
        }
        for b in &orbit {
            seen[b.0] = true;
        }
        out.push(orbit);
    }
    out
}

/// Shift-orbit lengths, largest first.
pub fn invariant(gp: &GentlePresentation) -> Vec<usize> {
    let mut lengths: Vec<usize> = orbits(gp).iter().map(Vec::len).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

pub fn hom_dim(gp: &GentlePresentation, a: ArrowId, b: ArrowId) -> Result<usize> {
    ensure_dc(gp, a)?;
    ensure_dc(gp, b)?;
    Ok(usize::from(a == b))
}

/// The Serre functor on objects, computed as `Σ ∘ τ` with `τ = ρ`.
pub fn serre(gp: &GentlePresentation, a: ArrowId) -> Result<ArrowId> {
    let translated = shift_inverse(gp, a)?;
    let image = shift(gp, translated)?;
    if image != a {
        return Err(Error::Internal(format!(
            "Serre functor moved `{}` to `{}`",
            gp.arrow_name(a),
            gp.arrow_name(image)
        )));
    }
    Ok(image)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub compatible: bool,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub verdict: String,
}

/// Equal invariants are a necessary condition for derived equivalence only.
pub fn compare(left: &GentlePresentation, right: &GentlePresentation) -> Comparison {
    let (l, r) = (invariant(left), invariant(right));
    let compatible = l == r;
    let verdict = if compatible {
        format!(
            "compatible: both have shift-orbit lengths {l:?} (a necessary condition for derived equivalence, not a sufficient one)"
        )
    } else {
        format!(
            "incompatible: shift-orbit lengths {l:?} vs {r:?} differ, so the algebras are not derived equivalent (equal lengths are a necessary condition)"
        )
    };
    Comparison {
        compatible,
        left: l,
        right: r,
        verdict,
    }
}
