//! The map ϑ from the twisted ideal `A°_ν` to `ω = Hom_R(A, R)` and its
//! inverse ψ, with an exhaustive bilinearity check.
//!
//! `A°` is generated by `eᵢ` for two-regular `i` and by the arrow `γ(j)`
//! leaving each transition vertex `j`. Division by `c` is needed to evaluate
//! ϑ on `c·e_j`, so the working algebra carries one extra power of `c`
//! and comparisons are made modulo `c^N`.

use serde::Serialize;

use super::{AlgebraElement, BasisItem, OmegaElement, Poly, SignAssignment, TruncatedAlgebra};
use crate::error::{Error, Result};
use crate::presentation::{ArrowId, StrictPresentation, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Generator {
    Idempotent(VertexId),
    Arrow(ArrowId),
}

#[derive(Debug)]
pub struct Theta {
    alg: TruncatedAlgebra,
    order: usize,
    generators: Vec<(Generator, OmegaElement)>,
}

impl Theta {
    pub fn new(sp: StrictPresentation, signs: SignAssignment, order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::TruncationTooSmall(order));
        }
        let alg = TruncatedAlgebra::new(sp, signs, order + 1)?;
        let sp = alg.presentation();
        let mut generators = Vec::new();
        for v in sp.vertex_ids() {
            if sp.is_two_regular(v) {
                let beta = positive_out(&alg, v);
                generators.push((
                    Generator::Idempotent(v),
                    alg.dual(BasisItem::FullCycle(beta)),
                ));
            } else {
                let gamma = sp.quiver().outgoing(v)[0];
                let image = alg
                    .dual(alg.prefix(gamma, alg.cycle_length(gamma) - 1))
                    .neg();
                generators.push((Generator::Arrow(gamma), image));
            }
        }
        Ok(Theta {
            alg,
            order,
            generators,
        })
    }

    /// The working algebra (one `c`-power beyond the requested order).
    pub fn algebra(&self) -> &TruncatedAlgebra {
        &self.alg
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> impl Iterator<Item = (Generator, &OmegaElement)> {
        self.generators.iter().map(|(g, phi)| (*g, phi))
    }

    pub fn generator_element(&self, g: Generator) -> AlgebraElement {
        match g {
            Generator::Idempotent(v) => self.alg.basis_element(BasisItem::Idempotent(v)),
            Generator::Arrow(a) => self.alg.arrow(a),
        }
    }

    pub fn generator_name(&self, g: Generator) -> String {
        let sp = self.alg.presentation();
        match g {
            Generator::Idempotent(v) => format!("e_{}", sp.vertex_name(v)),
            Generator::Arrow(a) => sp.arrow_name(a).to_string(),
        }
    }

    fn image(&self, g: Generator) -> &OmegaElement {
        &self
            .generators
            .iter()
            .find(|(h, _)| *h == g)
            .expect("generator belongs to this presentation")
            .1
    }

    /// ϑ on an element of `A°`, R-linearly through the generators.
    pub fn apply(&self, x: &AlgebraElement) -> Result<OmegaElement> {
        let alg = &self.alg;
        let sp = alg.presentation();
        let mut out = alg.zero_functional();
        for (i, coef) in x.terms() {
            let item = alg.basis()[i];
            let source = alg.item_source(item);
            let (coef, left, g) = if sp.is_two_regular(source) {
                (coef.clone(), item, Generator::Idempotent(source))
            } else {
                let gamma = sp.quiver().outgoing(source)[0];
                match item {
                    BasisItem::Path { len, .. } => (
                        coef.clone(),
                        alg.prefix(gamma, len - 1),
                        Generator::Arrow(gamma),
                    ),
                    BasisItem::Idempotent(_) => {
                        let coef = coef.div_c().ok_or(Error::OutsideSubmodule)?;
                        let prefix = alg.prefix(gamma, alg.cycle_length(gamma) - 1);
                        (coef, prefix, Generator::Arrow(gamma))
                    }
                    BasisItem::FullCycle(_) => {
                        return Err(Error::Internal(
                            "positive cycle at a transition vertex".into(),
                        ))
                    }
                }
            };
            let term = alg.left_act(&alg.basis_element(left), self.image(g))?;
            out = out.add(&term.scale(&coef, alg.order()))?;
        }
        Ok(out)
    }

    /// ψ: the inverse of ϑ on the dual basis, extended R-linearly.
    pub fn psi(&self, phi: &OmegaElement) -> Result<AlgebraElement> {
        let alg = &self.alg;
        let sp = alg.presentation();
        let c = Poly::c_pow(1);
        let mut out = alg.zero();
        for (i, coef) in phi.terms() {
            let image = match alg.basis()[i] {
                BasisItem::Idempotent(v) => {
                    let c_e = alg.element_from(&[(BasisItem::Idempotent(v), c.clone())]);
                    if sp.is_two_regular(v) {
                        alg.basis_element(BasisItem::FullCycle(positive_out(alg, v)))
                            .sub(&c_e)?
                    } else {
                        c_e.neg()
                    }
                }
                BasisItem::FullCycle(beta) => {
                    alg.basis_element(BasisItem::Idempotent(sp.source(beta)))
                }
                BasisItem::Path { start, len } => {
                    let head = alg.sigma_pow(start, len);
                    let p = alg.basis_element(BasisItem::Path {
                        start: head,
                        len: alg.cycle_length(head) - len,
                    });
                    if alg.signs().is_positive(head) {
                        p
                    } else {
                        p.neg()
                    }
                }
            };
            out = out.add(&image.scale(coef, alg.order()))?;
        }
        Ok(out)
    }

    /// Every generator `g` against every basis element `p`:
    /// `ϑ(g·ν(p)) = ϑ(g)·p`, `ϑ(p·g) = p·ϑ(g)`, and `ψ(ϑ(g)) = g`; plus
    /// `ψ∘ϑ = id` on the R-basis of `A°` and `ϑ∘ψ = id` on the dual basis.
    pub fn verify(&self) -> Result<ThetaReport> {
        let alg = &self.alg;
        let n = self.order;
        let mut generators = Vec::new();
        let mut failures = Vec::new();
        let witness = |idx: Option<usize>| idx.map(|i| alg.item_label(alg.basis()[i]));

        for (g, phi) in self.generators() {
            let name = self.generator_name(g);
            let gx = self.generator_element(g);
            let mut checks = 0;
            let before = failures.len();
            let mut fail = |identity: &str, basis: String, witness: Option<String>| {
                failures.push(ThetaFailure {
                    generator: name.clone(),
                    identity: identity.to_string(),
                    basis,
                    witness: witness.unwrap_or_default(),
                });
            };

            let back = self.psi(phi)?;
            checks += 1;
            if let Some(w) = back.first_difference(&gx, n) {
                fail("psi(theta(g)) = g", String::new(), witness(Some(w)));
            }

            for (j, &item) in alg.basis().iter().enumerate() {
                let p = alg.basis_element_at(j);
                let label = alg.item_label(item);

                let lhs = self.apply(&alg.multiply(&gx, &alg.nu(&p)?)?)?;
                let rhs = alg.right_act(phi, &p)?;
                checks += 1;
                if let Some(w) = lhs.first_difference(&rhs, n) {
                    fail(
                        "theta(g·nu(p)) = theta(g)·p",
                        label.clone(),
                        witness(Some(w)),
                    );
                }

                let lhs = self.apply(&alg.multiply(&p, &gx)?)?;
                let rhs = alg.left_act(&p, phi)?;
                checks += 1;
                if let Some(w) = lhs.first_difference(&rhs, n) {
                    fail("theta(p·g) = p·theta(g)", label, witness(Some(w)));
                }
            }
            generators.push(GeneratorReport {
                generator: name,
                checks,
                failures: failures.len() - before,
            });
        }

        let mut inverse_checks = 0;
        for (j, &item) in alg.basis().iter().enumerate() {
            let label = alg.item_label(item);
            let phi = alg.dual_at(j);
            inverse_checks += 1;
            if let Some(w) = self.apply(&self.psi(&phi)?)?.first_difference(&phi, n) {
                failures.push(ThetaFailure {
                    generator: "-".into(),
                    identity: "theta(psi(p*)) = p*".into(),
                    basis: label.clone(),
                    witness: witness(Some(w)).unwrap_or_default(),
                });
            }
            for x in self.submodule_basis(item) {
                inverse_checks += 1;
                if let Some(w) = self.psi(&self.apply(&x)?)?.first_difference(&x, n) {
                    failures.push(ThetaFailure {
                        generator: "-".into(),
                        identity: "psi(theta(x)) = x".into(),
                        basis: alg.display_element(&x),
                        witness: witness(Some(w)).unwrap_or_default(),
                    });
                }
            }
        }

        Ok(ThetaReport {
            order: n,
            generators,
            inverse_checks,
            failures,
        })
    }

    /// The R-basis elements of `A°` attached to a basis item: the item itself,
    /// except `e_j` at a transition vertex, which contributes `c·e_j`.
    fn submodule_basis(&self, item: BasisItem) -> Vec<AlgebraElement> {
        let alg = &self.alg;
        match item {
            BasisItem::Idempotent(v) if !alg.presentation().is_two_regular(v) => {
                vec![alg.element_from(&[(item, Poly::c_pow(1))])]
            }
            _ => vec![alg.basis_element(item)],
        }
    }
}

fn positive_out(alg: &TruncatedAlgebra, v: VertexId) -> ArrowId {
    alg.presentation()
        .quiver()
        .outgoing(v)
        .into_iter()
        .find(|&a| alg.signs().is_positive(a))
        .expect("two-regular vertices have a positive arrow")
}

impl TruncatedAlgebra {
    /// The first `m` arrows after `γ` along its admissible cycle, as a basis
    /// item; `e_{t(γ)}` when `m = 0`.
    pub fn prefix(&self, gamma: ArrowId, m: usize) -> BasisItem {
        if m == 0 {
            BasisItem::Idempotent(self.presentation().target(gamma))
        } else {
            BasisItem::Path {
                start: self.presentation().next(gamma),
                len: m,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaFailure {
    pub generator: String,
    pub identity: String,
    pub basis: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    pub generator: String,
    pub checks: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    pub order: usize,
    pub generators: Vec<GeneratorReport>,
    pub inverse_checks: usize,
    pub failures: Vec<ThetaFailure>,
}

impl ThetaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checks(&self) -> usize {
        self.inverse_checks + self.generators.iter().map(|g| g.checks).sum::<usize>()
    }
}

pub fn verify_theta(
    sp: StrictPresentation,
    signs: SignAssignment,
    order: usize,
) -> Result<ThetaReport> {
    Theta::new(sp, signs, order)?.verify()
}
