//! Shared test support: random presentations, renaming, and a brute-force
//! model of the completed path algebra that never consults σ or the library's
//! multiplication table.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gentle::algebra::{BasisItem, Poly, SignAssignment, TruncatedAlgebra};
use gentle::{
    validate, ArrowId, GentlePresentation, Quiver, RelationSet, StrictPresentation, VertexId,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An admissible-complete presentation on `1..=max_vertices` vertices: each
/// vertex is two-regular or a transition vertex, out-slots are wired to
/// in-slots by a random bijection, and at every two-regular vertex one of the
/// two pairings of incoming with outgoing arrows is chosen as the relations.
pub fn random_strict(rng: &mut impl Rng, max_vertices: usize) -> StrictPresentation {
    let n = rng.gen_range(1..=max_vertices);
    let degrees: Vec<usize> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { 2 } else { 1 })
        .collect();
    let mut outs: Vec<usize> = Vec::new();
    let mut ins: Vec<usize> = Vec::new();
    for (v, &d) in degrees.iter().enumerate() {
        for _ in 0..d {
            outs.push(v);
            ins.push(v);
        }
    }
    ins.shuffle(rng);

    let mut q = Quiver::new(format!("random{n}"));
    for v in 0..n {
        q.add_vertex(&format!("{}", v + 1)).unwrap();
    }
    for (i, (&s, &t)) in outs.iter().zip(&ins).enumerate() {
        q.add_arrow(
            &format!("a{i}"),
            &format!("{}", s + 1),
            &format!("{}", t + 1),
        )
        .unwrap();
    }
    let mut relations = RelationSet::new();
    for v in q.vertex_ids().collect::<Vec<_>>() {
        let (inc, out) = (q.incoming(v), q.outgoing(v));
        if inc.len() == 2 {
            let crossed = rng.gen_bool(0.5);
            // The non-relation pairing is (inc[0], out[k]), (inc[1], out[1-k]).
            let k = usize::from(crossed);
            relations.insert(&q, inc[0], out[1 - k]).unwrap();
            relations.insert(&q, inc[1], out[k]).unwrap();
        }
    }
    let gp = validate(q, relations).expect("construction satisfies the gentle axioms");
    StrictPresentation::new(gp).expect("construction is admissible-complete")
}

/// A gentle presentation that need not be finite projective: a random strict
/// one with some arrows deleted and some transition vertices closed by a
/// relation.
pub fn random_gentle(rng: &mut impl Rng, max_vertices: usize) -> GentlePresentation {
    let base = random_strict(rng, max_vertices).into_inner();
    let q0 = base.quiver();
    let keep: Vec<ArrowId> = q0.arrow_ids().filter(|_| rng.gen_bool(0.85)).collect();

    let mut q = Quiver::new(q0.name());
    for v in q0.vertex_names() {
        q.add_vertex(v).unwrap();
    }
    for &a in &keep {
        let arrow = q0.arrow(a);
        q.add_arrow(
            &arrow.name,
            q0.vertex_name(arrow.source),
            q0.vertex_name(arrow.target),
        )
        .unwrap();
    }
    let mut relations = RelationSet::new();
    for &(a, b) in base.relations().pairs() {
        if keep.contains(&a) && keep.contains(&b) {
            relations
                .insert_named(&q, q0.arrow_name(a), q0.arrow_name(b))
                .unwrap();
        }
    }
    for v in q.vertex_ids().collect::<Vec<_>>() {
        let (inc, out) = (q.incoming(v), q.outgoing(v));
        if inc.len() == 1
            && out.len() == 1
            && !relations.contains(inc[0], out[0])
            && rng.gen_bool(0.3)
        {
            relations.insert(&q, inc[0], out[0]).unwrap();
        }
    }
    validate(q, relations).expect("deleting arrows and closing transitions keeps gentleness")
}

/// The same presentation with fresh vertex and arrow names and a shuffled
/// declaration order.
pub fn renamed(gp: &GentlePresentation, rng: &mut impl Rng) -> GentlePresentation {
    let q0 = gp.quiver();
    let mut vertex_order: Vec<VertexId> = q0.vertex_ids().collect();
    let mut arrow_order: Vec<ArrowId> = q0.arrow_ids().collect();
    vertex_order.shuffle(rng);
    arrow_order.shuffle(rng);
    let vname = |v: VertexId| format!("w{}", v.0 * 7 + 3);
    let aname = |a: ArrowId| format!("b{}", a.0 * 5 + 1);

    let mut q = Quiver::new("renamed");
    for &v in &vertex_order {
        q.add_vertex(&vname(v)).unwrap();
    }
    for &a in &arrow_order {
        q.add_arrow(&aname(a), &vname(q0.source(a)), &vname(q0.target(a)))
            .unwrap();
    }
    let mut pairs = gp.relations().pairs().to_vec();
    pairs.shuffle(rng);
    let mut relations = RelationSet::new();
    for (a, b) in pairs {
        relations.insert_named(&q, &aname(a), &aname(b)).unwrap();
    }
    validate(q, relations).unwrap()
}

/// Arrows reversed, relations `(a, b)` replaced by `(b, a)`.
pub fn opposite(gp: &GentlePresentation) -> GentlePresentation {
    let q0 = gp.quiver();
    let mut q = Quiver::new(q0.name());
    for v in q0.vertex_names() {
        q.add_vertex(v).unwrap();
    }
    for a in q0.arrows() {
        q.add_arrow(&a.name, q0.vertex_name(a.target), q0.vertex_name(a.source))
            .unwrap();
    }
    let mut relations = RelationSet::new();
    for &(a, b) in gp.relations().pairs() {
        relations.insert(&q, b, a).unwrap();
    }
    validate(q, relations).unwrap()
}

/// The sign assignment that gives `+1` to the later-declared arrow at every
/// two-regular vertex.
pub fn flipped(sp: &StrictPresentation, eps: &SignAssignment) -> SignAssignment {
    eps.flipped(sp)
}

// ---------------------------------------------------------------------------
// Brute-force path algebra.

/// A path in traversal order; empty paths carry their vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPath {
    pub vertex: VertexId,
    pub arrows: Vec<ArrowId>,
}

pub struct Oracle<'a> {
    gp: &'a GentlePresentation,
    eps: &'a SignAssignment,
}

impl<'a> Oracle<'a> {
    pub fn new(gp: &'a GentlePresentation, eps: &'a SignAssignment) -> Self {
        Oracle { gp, eps }
    }

    fn q(&self) -> &Quiver {
        self.gp.quiver()
    }

    /// The continuation of `a` outside the relation set, by scanning arrows.
    fn successor(&self, a: ArrowId) -> ArrowId {
        let q = self.q();
        let candidates: Vec<ArrowId> = q
            .arrow_ids()
            .filter(|&b| q.source(b) == q.target(a) && !self.gp.relations().contains(a, b))
            .collect();
        assert_eq!(candidates.len(), 1, "non-relation continuation is unique");
        candidates[0]
    }

    pub fn walk(&self, start: ArrowId, len: usize) -> Vec<ArrowId> {
        let mut out = vec![start];
        while out.len() < len {
            out.push(self.successor(*out.last().unwrap()));
        }
        out
    }

    pub fn cycle_length(&self, a: ArrowId) -> usize {
        let mut len = 1;
        let mut b = self.successor(a);
        while b != a {
            len += 1;
            b = self.successor(b);
        }
        len
    }

    pub fn interpret(&self, item: BasisItem) -> RawPath {
        let q = self.q();
        match item {
            BasisItem::Idempotent(v) => RawPath {
                vertex: v,
                arrows: vec![],
            },
            BasisItem::Path { start, len } => RawPath {
                vertex: q.source(start),
                arrows: self.walk(start, len),
            },
            BasisItem::FullCycle(b) => RawPath {
                vertex: q.source(b),
                arrows: self.walk(b, self.cycle_length(b)),
            },
        }
    }

    /// `x · y`: traverse `y`, then `x`. `None` when the composite is zero in
    /// the free algebra modulo the relations.
    pub fn concat(&self, x: &RawPath, y: &RawPath) -> Option<RawPath> {
        let q = self.q();
        let y_end = y.arrows.last().map_or(y.vertex, |&a| q.target(a));
        if y_end != x.vertex {
            return None;
        }
        let mut arrows = y.arrows.clone();
        arrows.extend_from_slice(&x.arrows);
        if arrows
            .windows(2)
            .any(|w| self.gp.relations().contains(w[0], w[1]))
        {
            return None;
        }
        Some(RawPath {
            vertex: y.vertex,
            arrows,
        })
    }

    /// Rewrites a non-relation path in the basis: a prefix that closes the
    /// admissible cycle at its start equals `c·e_s` minus the other cycle at
    /// `s`, and that other cycle composed with the rest vanishes.
    pub fn reduce(&self, p: &RawPath) -> BTreeMap<BasisItem, Poly> {
        let q = self.q();
        let mut out = BTreeMap::new();
        let Some(&first) = p.arrows.first() else {
            out.insert(BasisItem::Idempotent(p.vertex), Poly::one());
            return out;
        };
        let l = self.cycle_length(first);
        let len = p.arrows.len();
        if len < l {
            out.insert(BasisItem::Path { start: first, len }, Poly::one());
        } else if len > l {
            let rest = RawPath {
                vertex: p.vertex,
                arrows: p.arrows[l..].to_vec(),
            };
            for (k, v) in self.reduce(&rest) {
                out.insert(k, v.shift(1));
            }
        } else {
            let s = q.source(first);
            if self.eps.is_positive(first) {
                out.insert(BasisItem::FullCycle(first), Poly::one());
            } else {
                out.insert(BasisItem::Idempotent(s), Poly::c_pow(1));
                if let Some(&other) = q.outgoing(s).iter().find(|&&b| b != first) {
                    out.insert(BasisItem::FullCycle(other), -&Poly::one());
                }
            }
        }
        out
    }

    pub fn product(&self, x: BasisItem, y: BasisItem) -> BTreeMap<BasisItem, Poly> {
        match self.concat(&self.interpret(x), &self.interpret(y)) {
            Some(p) => self.reduce(&p),
            None => BTreeMap::new(),
        }
    }

    /// `|Q₀| + #(non-relation paths of length 1 ≤ n < ℓ from each arrow) + |Q₁⁺|`,
    /// counted by extending paths one arrow at a time.
    pub fn rank_by_enumeration(&self) -> usize {
        let q = self.q();
        let mut paths = 0;
        for a in q.arrow_ids() {
            let l = self.cycle_length(a);
            let mut frontier = vec![vec![a]];
            while let Some(p) = frontier.pop() {
                if p.len() >= l {
                    continue;
                }
                paths += 1;
                let last = *p.last().unwrap();
                for b in q.outgoing(q.target(last)) {
                    if !self.gp.relations().contains(last, b) {
                        let mut next = p.clone();
                        next.push(b);
                        frontier.push(next);
                    }
                }
            }
        }
        let positive = q.arrow_ids().filter(|&a| self.eps.is_positive(a)).count();
        q.vertex_count() + paths + positive
    }
}

/// The oracle's answer as an element of the library's algebra.
pub fn as_element(
    alg: &TruncatedAlgebra,
    terms: &BTreeMap<BasisItem, Poly>,
) -> gentle::algebra::AlgebraElement {
    let terms: Vec<(BasisItem, Poly)> = terms.iter().map(|(k, v)| (*k, v.clone())).collect();
    alg.element_from(&terms)
}
