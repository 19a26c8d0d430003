//! Quivers with length-two monomial relations, the gentle axioms and the
//! successor maps σ (non-relation continuation) and ρ (relation continuation).
//!
//! Paths compose right to left: the relation pair `(a, b)` stands for the
//! composite `b∘a`, i.e. traverse `a` first and then `b`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::combinatorics;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ArrowId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver. Vertices and arrows keep their declaration order, which
/// seeds every tie-break downstream.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    pub fn new(name: impl Into<String>) -> Self {
        Quiver {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.vertex_index.contains_key(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        let id = VertexId(self.vertices.len());
        self.vertices.push(name.to_string());
        self.vertex_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<ArrowId> {
        if self.arrow_index.contains_key(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        let source = self
            .vertex_id(source)
            .ok_or_else(|| Error::UnknownVertex(source.to_string()))?;
        let target = self
            .vertex_id(target)
            .ok_or_else(|| Error::UnknownVertex(target.to_string()))?;
        Ok(self.push_arrow(name, source, target))
    }

    pub(crate) fn push_arrow(&mut self, name: &str, source: VertexId, target: VertexId) -> ArrowId {
        let id = ArrowId(self.arrows.len());
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        self.arrow_index.insert(name.to_string(), id);
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn outgoing(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrow_ids().filter(|&a| self.source(a) == v).collect()
    }

    /// Arrows ending at `v`, in declaration order.
    pub fn incoming(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrow_ids().filter(|&a| self.target(a) == v).collect()
    }

    /// All composable pairs `(a, b)` with `t(a) = s(b)`, ordered by `a` then `b`.
    pub fn composable_pairs(&self) -> Vec<(ArrowId, ArrowId)> {
        let mut pairs = Vec::new();
        for a in self.arrow_ids() {
            for b in self.outgoing(self.target(a)) {
                pairs.push((a, b));
            }
        }
        pairs
    }
}

/// Length-two monomial relations. `(first, second)` means `second∘first ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationSet {
    pairs: Vec<(ArrowId, ArrowId)>,
    lookup: HashSet<(ArrowId, ArrowId)>,
}

impl RelationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, quiver: &Quiver, first: ArrowId, second: ArrowId) -> Result<()> {
        if quiver.target(first) != quiver.source(second) {
            return Err(Error::NotComposable {
                first: quiver.arrow_name(first).to_string(),
                second: quiver.arrow_name(second).to_string(),
            });
        }
        if !self.lookup.insert((first, second)) {
            return Err(Error::DuplicateRelation {
                first: quiver.arrow_name(first).to_string(),
                second: quiver.arrow_name(second).to_string(),
            });
        }
        self.pairs.push((first, second));
        Ok(())
    }

    /// Inserts by arrow names.
    pub fn insert_named(&mut self, quiver: &Quiver, first: &str, second: &str) -> Result<()> {
        let a = quiver
            .arrow_id(first)
            .ok_or_else(|| Error::UnknownArrow(first.to_string()))?;
        let b = quiver
            .arrow_id(second)
            .ok_or_else(|| Error::UnknownArrow(second.to_string()))?;
        self.insert(quiver, a, b)
    }

    pub fn contains(&self, first: ArrowId, second: ArrowId) -> bool {
        self.lookup.contains(&(first, second))
    }

    pub fn pairs(&self) -> &[(ArrowId, ArrowId)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexClass {
    /// Two arrows in, two out, two relations pairing them gently.
    TwoRegularGentle,
    /// One arrow in, one out, no relation through the vertex.
    Transition,
    /// Every other local shape allowed by the gentle axioms.
    Boundary,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexClass::TwoRegularGentle => "two-regular-gentle",
            VertexClass::Transition => "transition",
            VertexClass::Boundary => "boundary",
        })
    }
}

/// A failed gentle axiom together with the vertex or arrow it concerns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom")]
pub enum Violation {
    /// More than two arrows start at a vertex.
    Ge1 { vertex: String, count: usize },
    /// More than two arrows end at a vertex.
    Ge2 { vertex: String, count: usize },
    /// An arrow has several continuations of the same kind.
    Ge3 {
        arrow: String,
        in_relation: bool,
        continuations: Vec<String>,
    },
    /// An arrow has several predecessors of the same kind.
    Ge4 {
        arrow: String,
        in_relation: bool,
        predecessors: Vec<String>,
    },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::Ge1 { .. } => "Ge1",
            Violation::Ge2 { .. } => "Ge2",
            Violation::Ge3 { .. } => "Ge3",
            Violation::Ge4 { .. } => "Ge4",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = |rel: bool| if rel { "inside I" } else { "outside I" };
        match self {
            Violation::Ge1 { vertex, count } => {
                write!(f, "(Ge1) vertex `{vertex}` has {count} outgoing arrows")
            }
            Violation::Ge2 { vertex, count } => {
                write!(f, "(Ge2) vertex `{vertex}` has {count} incoming arrows")
            }
            Violation::Ge3 {
                arrow,
                in_relation,
                continuations,
            } => write!(
                f,
                "(Ge3) arrow `{arrow}` has {} continuations with composite {}: {}",
                continuations.len(),
                kind(*in_relation),
                continuations.join(", ")
            ),
            Violation::Ge4 {
                arrow,
                in_relation,
                predecessors,
            } => write!(
                f,
                "(Ge4) arrow `{arrow}` has {} predecessors with composite {}: {}",
                predecessors.len(),
                kind(*in_relation),
                predecessors.join(", ")
            ),
        }
    }
}

/// A quiver with relations satisfying (Ge1)-(Ge4). Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentlePresentation {
    quiver: Quiver,
    relations: RelationSet,
    sigma: Vec<Option<ArrowId>>,
    rho: Vec<Option<ArrowId>>,
    sigma_inv: Vec<Option<ArrowId>>,
    rho_inv: Vec<Option<ArrowId>>,
    classes: Vec<VertexClass>,
}

/// Checks the gentle axioms and, on success, derives σ, ρ and the vertex classes.
pub fn validate(
    quiver: Quiver,
    relations: RelationSet,
) -> Result<GentlePresentation, Vec<Violation>> {
    let mut violations = Vec::new();
    for v in quiver.vertex_ids() {
        let out = quiver.outgoing(v).len();
        if out > 2 {
            violations.push(Violation::Ge1 {
                vertex: quiver.vertex_name(v).to_string(),
                count: out,
            });
        }
    }
    for v in quiver.vertex_ids() {
        let inc = quiver.incoming(v).len();
        if inc > 2 {
            violations.push(Violation::Ge2 {
                vertex: quiver.vertex_name(v).to_string(),
                count: inc,
            });
        }
    }

    let n = quiver.arrow_count();
    let mut sigma = vec![None; n];
    let mut rho = vec![None; n];
    let names = |arrows: &[ArrowId]| -> Vec<String> {
        arrows
            .iter()
            .map(|&a| quiver.arrow_name(a).to_string())
            .collect()
    };
    for a in quiver.arrow_ids() {
        let (rel, free): (Vec<_>, Vec<_>) = quiver
            .outgoing(quiver.target(a))
            .into_iter()
            .partition(|&b| relations.contains(a, b));
        for (group, in_relation) in [(&rel, true), (&free, false)] {
            if group.len() > 1 {
                violations.push(Violation::Ge3 {
                    arrow: quiver.arrow_name(a).to_string(),
                    in_relation,
                    continuations: names(group),
                });
            }
        }
        if rel.len() == 1 {
            rho[a.0] = Some(rel[0]);
        }
        if free.len() == 1 {
            sigma[a.0] = Some(free[0]);
        }
    }
    for b in quiver.arrow_ids() {
        let (rel, free): (Vec<_>, Vec<_>) = quiver
            .incoming(quiver.source(b))
            .into_iter()
            .partition(|&a| relations.contains(a, b));
        for (group, in_relation) in [(&rel, true), (&free, false)] {
            if group.len() > 1 {
                violations.push(Violation::Ge4 {
                    arrow: quiver.arrow_name(b).to_string(),
                    in_relation,
                    predecessors: names(group),
                });
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    let invert = |map: &[Option<ArrowId>]| {
        let mut inv = vec![None; n];
        for (a, image) in map.iter().enumerate() {
            if let Some(b) = image {
                inv[b.0] = Some(ArrowId(a));
            }
        }
        inv
    };
    let sigma_inv = invert(&sigma);
    let rho_inv = invert(&rho);

    let classes = quiver
        .vertex_ids()
        .map(|v| {
            let inc = quiver.incoming(v);
            let out = quiver.outgoing(v);
            let through = relations
                .pairs()
                .iter()
                .filter(|(a, _)| quiver.target(*a) == v)
                .count();
            match (inc.len(), out.len(), through) {
                (2, 2, 2) => VertexClass::TwoRegularGentle,
                (1, 1, 0) => VertexClass::Transition,
                _ => VertexClass::Boundary,
            }
        })
        .collect();

    Ok(GentlePresentation {
        quiver,
        relations,
        sigma,
        rho,
        sigma_inv,
        rho_inv,
        classes,
    })
}

impl GentlePresentation {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    /// The unique arrow `b` with `b∘a ∉ I`, if any.
    pub fn sigma(&self, a: ArrowId) -> Option<ArrowId> {
        self.sigma[a.0]
    }

    /// The unique arrow `b` with `b∘a ∈ I`, if any.
    pub fn rho(&self, a: ArrowId) -> Option<ArrowId> {
        self.rho[a.0]
    }

    pub fn sigma_preimage(&self, a: ArrowId) -> Option<ArrowId> {
        self.sigma_inv[a.0]
    }

    pub fn rho_preimage(&self, a: ArrowId) -> Option<ArrowId> {
        self.rho_inv[a.0]
    }

    pub fn vertex_class(&self, v: VertexId) -> VertexClass {
        self.classes[v.0]
    }

    pub fn vertex_classes(&self) -> &[VertexClass] {
        &self.classes
    }

    pub fn is_relation(&self, first: ArrowId, second: ArrowId) -> bool {
        self.relations.contains(first, second)
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        self.quiver.arrow_name(a)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        self.quiver.vertex_name(v)
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.quiver.source(a)
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.quiver.target(a)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        self.quiver.arrow_ids()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.quiver.vertex_ids()
    }

    /// Looks up an arrow by name.
    pub fn arrow(&self, name: &str) -> Result<ArrowId> {
        self.quiver
            .arrow_id(name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.quiver
            .vertex_id(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn names(&self, arrows: &[ArrowId]) -> Vec<String> {
        arrows
            .iter()
            .map(|&a| self.arrow_name(a).to_string())
            .collect()
    }
}

/// Outcome of the strictness test required by the duality and lattice theory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Strictness {
    pub admissible_complete: bool,
    pub offending_arrows: Vec<ArrowId>,
    pub offending_vertices: Vec<VertexId>,
}

/// True iff every vertex is two-regular-gentle or transition and every arrow
/// lies on an admissible cycle.
pub fn classify_strict(gp: &GentlePresentation) -> Strictness {
    let offending_vertices: Vec<_> = gp
        .vertex_ids()
        .filter(|&v| gp.vertex_class(v) == VertexClass::Boundary)
        .collect();
    let offending_arrows = combinatorics::admissible_decomposition(gp).uncovered;
    Strictness {
        admissible_complete: offending_vertices.is_empty() && offending_arrows.is_empty(),
        offending_arrows,
        offending_vertices,
    }
}

/// A gentle presentation in which every vertex is two-regular or transition
/// and every arrow lies on an admissible cycle; σ is then a permutation of Q₁.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictPresentation(GentlePresentation);

impl StrictPresentation {
    pub fn new(gp: GentlePresentation) -> Result<Self> {
        let strictness = classify_strict(&gp);
        if strictness.admissible_complete {
            Ok(StrictPresentation(gp))
        } else {
            Err(Error::NotAdmissibleComplete {
                arrows: gp.names(&strictness.offending_arrows),
                vertices: strictness
                    .offending_vertices
                    .iter()
                    .map(|&v| gp.vertex_name(v).to_string())
                    .collect(),
            })
        }
    }

    pub fn presentation(&self) -> &GentlePresentation {
        &self.0
    }

    pub fn into_inner(self) -> GentlePresentation {
        self.0
    }

    /// σ as a total map.
    pub fn next(&self, a: ArrowId) -> ArrowId {
        self.0.sigma(a).expect("σ is total on strict presentations")
    }

    pub fn is_transition(&self, v: VertexId) -> bool {
        self.0.vertex_class(v) == VertexClass::Transition
    }

    pub fn is_two_regular(&self, v: VertexId) -> bool {
        self.0.vertex_class(v) == VertexClass::TwoRegularGentle
    }
}

impl Deref for StrictPresentation {
    type Target = GentlePresentation;

    fn deref(&self) -> &GentlePresentation {
        &self.0
    }
}

/// Builds a presentation from `(name, source, target)` triples and relation
/// pairs `(first, second)` given by name. Vertices are declared in order of
/// first appearance unless listed explicitly.
pub fn build(
    name: &str,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[(&str, &str)],
) -> Result<(Quiver, RelationSet)> {
    let mut quiver = Quiver::new(name);
    for v in vertices {
        quiver.add_vertex(v)?;
    }
    for (_, s, t) in arrows {
        for v in [s, t] {
            if quiver.vertex_id(v).is_none() {
                quiver.add_vertex(v)?;
            }
        }
    }
    for (a, s, t) in arrows {
        quiver.add_arrow(a, s, t)?;
    }
    let mut rels = RelationSet::new();
    for (first, second) in relations {
        rels.insert_named(&quiver, first, second)?;
    }
    Ok((quiver, rels))
}

/// [`build`] followed by [`validate`]; violations become [`Error::NotGentle`].
pub fn gentle(
    name: &str,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[(&str, &str)],
) -> Result<GentlePresentation> {
    let (q, r) = build(name, vertices, arrows, relations)?;
    validate(q, r).map_err(|vs| Error::NotGentle(vs.iter().map(|v| v.to_string()).collect()))
}
