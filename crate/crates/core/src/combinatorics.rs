//! Chains of arrows driven by σ and ρ: admissible cycles, differential
//! cycles and walks, the split quiver Q′, finite projectivity over k[c],
//! the injective dimension and the Koszul dual.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{validate, ArrowId, GentlePresentation, Quiver, RelationSet, VertexId};

/// A maximal repetition-free σ-chain `(α₁, …, αₙ)` with `αᵢ₊₁ = σ(αᵢ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissiblePath {
    pub arrows: Vec<ArrowId>,
    pub is_cycle: bool,
}

impl AdmissiblePath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DifferentialKind {
    Cycle,
    Walk,
}

/// A maximal ρ-chain: every consecutive pair is a relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialPath {
    pub arrows: Vec<ArrowId>,
    pub kind: DifferentialKind,
}

impl DifferentialPath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == DifferentialKind::Cycle
    }
}

/// Follows an injective partial successor map from `start` until it is
/// undefined or returns to `start`. Injectivity makes `start` the only
/// possible repeat.
fn chain(start: ArrowId, next: impl Fn(ArrowId) -> Option<ArrowId>) -> (Vec<ArrowId>, bool) {
    let mut arrows = vec![start];
    let mut current = start;
    loop {
        match next(current) {
            None => return (arrows, false),
            Some(b) if b == start => return (arrows, true),
            Some(b) => {
                debug_assert!(!arrows.contains(&b), "successor map is not injective");
                arrows.push(b);
                current = b;
            }
        }
    }
}

pub fn admissible_path(gp: &GentlePresentation, alpha: ArrowId) -> AdmissiblePath {
    let (arrows, is_cycle) = chain(alpha, |a| gp.sigma(a));
    AdmissiblePath { arrows, is_cycle }
}

pub fn differential_path(gp: &GentlePresentation, alpha: ArrowId) -> DifferentialPath {
    let (arrows, closed) = chain(alpha, |a| gp.rho(a));
    DifferentialPath {
        arrows,
        kind: if closed {
            DifferentialKind::Cycle
        } else {
            DifferentialKind::Walk
        },
    }
}

/// Cyclic σ-orbits, each starting at its earliest-declared arrow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleDecomposition {
    pub cycles: Vec<AdmissiblePath>,
    pub uncovered: Vec<ArrowId>,
}

impl AdmissibleDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(AdmissiblePath::len).collect()
    }

    pub fn covers_all(&self) -> bool {
        self.uncovered.is_empty()
    }
}

pub fn admissible_decomposition(gp: &GentlePresentation) -> AdmissibleDecomposition {
    let n = gp.quiver().arrow_count();
    let mut covered = vec![false; n];
    let mut cycles = Vec::new();
    for a in gp.arrow_ids() {
        if covered[a.0] {
            continue;
        }
        let path = admissible_path(gp, a);
        if path.is_cycle {
            for b in &path.arrows {
                covered[b.0] = true;
            }
            cycles.push(path);
        }
    }
    let uncovered = gp.arrow_ids().filter(|a| !covered[a.0]).collect();
    AdmissibleDecomposition { cycles, uncovered }
}

/// Differential cycles plus the maximal differential walks (those starting
/// at an arrow without ρ-preimage).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialDecomposition {
    pub cycles: Vec<DifferentialPath>,
    pub walks: Vec<DifferentialPath>,
}

impl DifferentialDecomposition {
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(DifferentialPath::len).collect()
    }

    pub fn walk_lengths(&self) -> Vec<usize> {
        self.walks.iter().map(DifferentialPath::len).collect()
    }
}

pub fn differential_decomposition(gp: &GentlePresentation) -> DifferentialDecomposition {
    let n = gp.quiver().arrow_count();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    let mut walks = Vec::new();
    for a in gp.arrow_ids() {
        if seen[a.0] {
            continue;
        }
        let path = differential_path(gp, a);
        if path.is_cycle() {
            for b in &path.arrows {
                seen[b.0] = true;
            }
            cycles.push(path);
        }
    }
    for a in gp.arrow_ids() {
        if !seen[a.0] && gp.rho_preimage(a).is_none() {
            let path = differential_path(gp, a);
            for b in &path.arrows {
                seen[b.0] = true;
            }
            walks.push(path);
        }
    }
    debug_assert!(seen.iter().all(|&s| s));
    DifferentialDecomposition { cycles, walks }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    /// Equioriented line.
    A,
    /// Equioriented cycle.
    #[serde(rename = "Ã")]
    ATilde,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluedComponent {
    pub kind: ComponentKind,
    /// Arrows in path order.
    pub arrows: Vec<ArrowId>,
}

impl GluedComponent {
    pub fn length(&self) -> usize {
        self.arrows.len()
    }
}

/// The quiver Q′ obtained by splitting every vertex into the classes of
/// arrow ends glued along non-relation composites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluedQuiver {
    pub components: Vec<GluedComponent>,
    /// Vertices of Q without any arrow; they survive unchanged in Q′.
    pub isolated: Vec<VertexId>,
    /// Original vertex of each class of arrow ends.
    pub vertex_map: Vec<VertexId>,
    /// Class of `s_α` and `t_α` for every arrow α.
    pub arrow_ends: Vec<(usize, usize)>,
}

impl GluedQuiver {
    pub fn all_cyclic(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.kind == ComponentKind::ATilde)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let up = self.0[x];
            self.0[x] = root;
            x = up;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Builds Q′ straight from the relation set (it does not consult σ), so it
/// serves as an independent route to finite projectivity.
pub fn glue_split(gp: &GentlePresentation) -> GluedQuiver {
    let q = gp.quiver();
    let n = q.arrow_count();
    // Endpoint 2a is s_a, 2a + 1 is t_a.
    let mut uf = UnionFind::new(2 * n);
    for (a, b) in q.composable_pairs() {
        if !gp.is_relation(a, b) {
            uf.union(2 * b.0, 2 * a.0 + 1);
        }
    }
    let mut class_of = vec![usize::MAX; 2 * n];
    let mut vertex_map = Vec::new();
    for e in 0..2 * n {
        let root = uf.find(e);
        if class_of[root] == usize::MAX {
            class_of[root] = vertex_map.len();
            let arrow = ArrowId(e / 2);
            vertex_map.push(if e % 2 == 0 {
                q.source(arrow)
            } else {
                q.target(arrow)
            });
        }
        class_of[e] = class_of[root];
    }
    let arrow_ends: Vec<(usize, usize)> = (0..n)
        .map(|a| (class_of[2 * a], class_of[2 * a + 1]))
        .collect();

    let classes = vertex_map.len();
    let mut out_arrow = vec![None; classes];
    let mut in_arrow = vec![None; classes];
    for (a, &(s, t)) in arrow_ends.iter().enumerate() {
        out_arrow[s] = Some(a);
        in_arrow[t] = Some(a);
    }

    let mut visited = vec![false; n];
    let mut components = Vec::new();
    for a in 0..n {
        if visited[a] {
            continue;
        }
        let mut start = a;
        let mut cyclic = false;
        while let Some(p) = in_arrow[arrow_ends[start].0] {
            if p == a {
                cyclic = true;
                break;
            }
            start = p;
        }
        let mut arrows = Vec::new();
        let mut current = Some(start);
        while let Some(c) = current {
            if visited[c] {
                break;
            }
            visited[c] = true;
            arrows.push(ArrowId(c));
            current = out_arrow[arrow_ends[c].1];
        }
        components.push(GluedComponent {
            kind: if cyclic {
                ComponentKind::ATilde
            } else {
                ComponentKind::A
            },
            arrows,
        });
    }

    let isolated = q
        .vertex_ids()
        .filter(|&v| q.outgoing(v).is_empty() && q.incoming(v).is_empty())
        .collect();

    GluedQuiver {
        components,
        isolated,
        vertex_map,
        arrow_ends,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteProjectivity {
    pub finite_projective: bool,
    /// Arrows on no admissible cycle.
    pub witnesses: Vec<ArrowId>,
}

/// Decides whether every arrow lies on an admissible cycle, by the σ-orbit
/// cover and by the component types of Q′. The two must agree.
pub fn is_finite_projective(gp: &GentlePresentation) -> Result<FiniteProjectivity> {
    let decomposition = admissible_decomposition(gp);
    let glued = glue_split(gp);
    let by_cover = decomposition.covers_all();
    let by_glue = glued.all_cyclic();
    if by_cover != by_glue {
        return Err(Error::Internal(format!(
            "admissible cycles cover Q₁: {by_cover}, but all components of Q′ cyclic: {by_glue}"
        )));
    }
    Ok(FiniteProjectivity {
        finite_projective: by_cover,
        witnesses: decomposition.uncovered,
    })
}

/// Connected components of the underlying graph, as vertex lists.
pub fn connected_components(gp: &GentlePresentation) -> Vec<Vec<VertexId>> {
    let q = gp.quiver();
    let mut uf = UnionFind::new(q.vertex_count());
    for arrow in q.arrows() {
        uf.union(arrow.source.0, arrow.target.0);
    }
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    let mut slot = vec![usize::MAX; q.vertex_count()];
    for v in q.vertex_ids() {
        let root = uf.find(v.0);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(v);
    }
    groups
}

/// Whether a component is one vertex without arrows, or an equioriented
/// cycle all of whose length-two composites lie in I.
fn is_self_injective_shape(gp: &GentlePresentation, component: &[VertexId]) -> bool {
    let q = gp.quiver();
    let arrows: Vec<ArrowId> = q
        .arrow_ids()
        .filter(|&a| component.contains(&q.source(a)))
        .collect();
    if arrows.is_empty() {
        return component.len() == 1;
    }
    let equioriented = component
        .iter()
        .all(|&v| q.outgoing(v).len() == 1 && q.incoming(v).len() == 1);
    equioriented
        && arrows.iter().all(|&a| {
            let next = q.outgoing(q.target(a))[0];
            gp.is_relation(a, next)
        })
}

/// Self-injective dimension of the gentle algebra: the longest differential
/// walk if one exists, otherwise 0 or 1 depending on the component shapes.
pub fn injective_dimension(gp: &GentlePresentation) -> usize {
    let decomposition = differential_decomposition(gp);
    if let Some(longest) = decomposition.walks.iter().map(DifferentialPath::len).max() {
        return longest;
    }
    let components = connected_components(gp);
    if components.iter().all(|c| is_self_injective_shape(gp, c)) {
        0
    } else {
        1
    }
}

/// Name of the Koszul dual quiver; applying it twice restores the name.
pub fn dual_name(name: &str) -> String {
    match name.strip_suffix('!') {
        Some(stem) => stem.to_string(),
        None => format!("{name}!"),
    }
}

/// The opposite quiver (arrow names kept, directions reversed) with the
/// reversed non-relation composites as its relations.
pub fn koszul_dual(gp: &GentlePresentation) -> Result<GentlePresentation> {
    let q = gp.quiver();
    let mut dual = Quiver::new(dual_name(q.name()));
    for v in q.vertex_names() {
        dual.add_vertex(v)?;
    }
    for arrow in q.arrows() {
        dual.push_arrow(&arrow.name, arrow.target, arrow.source);
    }
    let mut relations = RelationSet::new();
    for (a, b) in q.composable_pairs() {
        if !gp.is_relation(a, b) {
            relations.insert(&dual, b, a)?;
        }
    }
    validate(dual, relations).map_err(|violations| {
        Error::Internal(format!(
            "Koszul dual failed the gentle axioms: {}",
            violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        ))
    })
}

/// Equality of presentations up to the order in which relations were listed.
pub fn same_presentation(a: &GentlePresentation, b: &GentlePresentation) -> bool {
    let (qa, qb) = (a.quiver(), b.quiver());
    if qa.vertex_names() != qb.vertex_names() || qa.arrows() != qb.arrows() {
        return false;
    }
    let mut ra = a.relations().pairs().to_vec();
    let mut rb = b.relations().pairs().to_vec();
    ra.sort();
    rb.sort();
    ra == rb
}
