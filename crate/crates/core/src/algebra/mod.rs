//! Exact arithmetic in the arrow-ideal completion of a strict gentle algebra,
//! modulo `c^N`, where `c` acts as the sum of all admissible cycles.
//!
//! The algebra is free over `k⟦c⟧` on the basis
//! `{eᵢ} ∪ {αₙ : 1 ≤ n < ℓ_α} ∪ {c_β : ε_β = +1}` and its dual
//! `ω = Hom_R(A, R)` is represented on the dual basis.

mod poly;
pub mod theta;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num::BigRational;
use serde::Serialize;

pub use poly::Poly;
pub use theta::{verify_theta, Generator, Theta, ThetaReport};

use crate::error::{Error, Result};
use crate::presentation::{ArrowId, StrictPresentation, VertexId};

/// A sign `ε_α ∈ {+1, −1}` per arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignAssignment(Vec<i8>);

impl SignAssignment {
    /// Takes raw signs in arrow declaration order; each entry must be ±1.
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(bad) = signs.iter().find(|s| !matches!(s, 1 | -1)) {
            return Err(Error::InvalidSigns(format!("sign {bad} is not ±1")));
        }
        Ok(SignAssignment(signs))
    }

    pub fn sign(&self, a: ArrowId) -> i8 {
        self.0[a.0]
    }

    pub fn is_positive(&self, a: ArrowId) -> bool {
        self.0[a.0] == 1
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// Swaps the two signs at every two-regular vertex; the other valid choice.
    pub fn flipped(&self, sp: &StrictPresentation) -> SignAssignment {
        SignAssignment(
            sp.arrow_ids()
                .map(|a| {
                    if sp.is_two_regular(sp.source(a)) {
                        -self.sign(a)
                    } else {
                        self.sign(a)
                    }
                })
                .collect(),
        )
    }

    /// Checks that arrows with a common source carry distinct signs and that
    /// arrows leaving transition vertices are negative.
    pub fn check(&self, sp: &StrictPresentation) -> Result<()> {
        let q = sp.quiver();
        if self.0.len() != q.arrow_count() {
            return Err(Error::InvalidSigns(format!(
                "{} signs for {} arrows",
                self.0.len(),
                q.arrow_count()
            )));
        }
        for v in q.vertex_ids() {
            let out = q.outgoing(v);
            if sp.is_transition(v) {
                if let Some(&a) = out.iter().find(|&&a| self.is_positive(a)) {
                    return Err(Error::InvalidSigns(format!(
                        "arrow `{}` leaves transition vertex `{}` but has sign +1",
                        sp.arrow_name(a),
                        sp.vertex_name(v)
                    )));
                }
            } else if out.len() == 2 && self.sign(out[0]) == self.sign(out[1]) {
                return Err(Error::InvalidSigns(format!(
                    "arrows `{}` and `{}` share source `{}` and sign {}",
                    sp.arrow_name(out[0]),
                    sp.arrow_name(out[1]),
                    sp.vertex_name(v),
                    self.sign(out[0])
                )));
            }
        }
        Ok(())
    }
}

/// At each two-regular vertex the first declared outgoing arrow gets `+1` and
/// the other `−1`; arrows leaving transition vertices get `−1`.
pub fn assign_signs(sp: &StrictPresentation) -> SignAssignment {
    let q = sp.quiver();
    let mut signs = vec![-1; q.arrow_count()];
    for v in q.vertex_ids() {
        if sp.is_two_regular(v) {
            signs[q.outgoing(v)[0].0] = 1;
        }
    }
    SignAssignment(signs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BasisItem {
    /// The trivial path `eᵢ`.
    Idempotent(VertexId),
    /// The non-relation path of length `len` (with `1 ≤ len < ℓ`) starting with `start`.
    Path { start: ArrowId, len: usize },
    /// The admissible cycle starting with a positive arrow.
    FullCycle(ArrowId),
}

/// The truncated algebra `Â / c^N`: a basis and its multiplication table.
#[derive(Debug)]
pub struct TruncatedAlgebra {
    id: u64,
    sp: StrictPresentation,
    signs: SignAssignment,
    order: usize,
    /// Admissible cycle through each arrow, rotated to start there.
    cycles: Vec<Vec<ArrowId>>,
    basis: Vec<BasisItem>,
    index: HashMap<BasisItem, usize>,
    table: Vec<Vec<Vec<(usize, Poly)>>>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

/// `Σ coefficient · basis item` over `Â / c^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: u64,
    coeffs: BTreeMap<usize, Poly>,
}

/// An `R`-linear functional `A → R`, stored by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaElement {
    algebra: u64,
    coeffs: BTreeMap<usize, Poly>,
}

macro_rules! linear_combination {
    ($ty:ident) => {
        impl $ty {
            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }

            /// Nonzero coefficients keyed by basis index.
            pub fn terms(&self) -> impl Iterator<Item = (usize, &Poly)> {
                self.coeffs.iter().map(|(&k, v)| (k, v))
            }

            pub fn coeff_at(&self, index: usize) -> Poly {
                self.coeffs.get(&index).cloned().unwrap_or_default()
            }

            fn add_term(&mut self, index: usize, p: &Poly) {
                if p.is_zero() {
                    return;
                }
                let entry = self.coeffs.entry(index).or_default();
                *entry += p;
                if entry.is_zero() {
                    self.coeffs.remove(&index);
                }
            }

            pub fn add(&self, other: &$ty) -> Result<$ty> {
                if self.algebra != other.algebra {
                    return Err(Error::MismatchedAlgebra);
                }
                let mut out = self.clone();
                for (k, p) in &other.coeffs {
                    out.add_term(*k, p);
                }
                Ok(out)
            }

            pub fn sub(&self, other: &$ty) -> Result<$ty> {
                self.add(&other.neg())
            }

            pub fn neg(&self) -> $ty {
                $ty {
                    algebra: self.algebra,
                    coeffs: self.coeffs.iter().map(|(&k, p)| (k, -p)).collect(),
                }
            }

            /// Multiplies every coefficient by the scalar `p ∈ R`, truncating below `order`.
            pub fn scale(&self, p: &Poly, order: usize) -> $ty {
                let mut out = $ty {
                    algebra: self.algebra,
                    coeffs: BTreeMap::new(),
                };
                for (&k, q) in &self.coeffs {
                    out.add_term(k, &q.mul_trunc(p, order));
                }
                out
            }

            /// Drops every `c`-power `≥ order`.
            pub fn truncate(&self, order: usize) -> $ty {
                let mut out = $ty {
                    algebra: self.algebra,
                    coeffs: BTreeMap::new(),
                };
                for (&k, q) in &self.coeffs {
                    out.add_term(k, &q.truncate(order));
                }
                out
            }

            /// Equality of all coefficients modulo `c^order`; returns the first
            /// basis index where they differ.
            pub fn first_difference(&self, other: &$ty, order: usize) -> Option<usize> {
                let diff = self.truncate(order).sub(&other.truncate(order)).ok()?;
                diff.coeffs.keys().next().copied()
            }
        }
    };
}

linear_combination!(AlgebraElement);
linear_combination!(OmegaElement);

impl TruncatedAlgebra {
    /// Builds basis and multiplication table. Rejects `order < 2` and invalid signs.
    pub fn new(sp: StrictPresentation, signs: SignAssignment, order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::TruncationTooSmall(order));
        }
        signs.check(&sp)?;
        let q = sp.quiver();

        let cycles: Vec<Vec<ArrowId>> = q
            .arrow_ids()
            .map(|a| {
                let mut cycle = vec![a];
                let mut next = sp.next(a);
                while next != a {
                    cycle.push(next);
                    next = sp.next(next);
                }
                cycle
            })
            .collect();

        let mut basis: Vec<BasisItem> = q.vertex_ids().map(BasisItem::Idempotent).collect();
        for a in q.arrow_ids() {
            for len in 1..cycles[a.0].len() {
                basis.push(BasisItem::Path { start: a, len });
            }
        }
        for a in q.arrow_ids() {
            if signs.is_positive(a) {
                basis.push(BasisItem::FullCycle(a));
            }
        }
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();

        let mut alg = TruncatedAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            sp,
            signs,
            order,
            cycles,
            basis,
            index,
            table: Vec::new(),
        };
        let n = alg.basis.len();
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(alg.item_product(alg.basis[i], alg.basis[j]));
            }
            table.push(row);
        }
        alg.table = table;
        Ok(alg)
    }

    pub fn presentation(&self) -> &StrictPresentation {
        &self.sp
    }

    pub fn signs(&self) -> &SignAssignment {
        &self.signs
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn basis(&self) -> &[BasisItem] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, item: BasisItem) -> Option<usize> {
        self.index.get(&item).copied()
    }

    /// Length ℓ_α of the admissible cycle starting with `a`.
    pub fn cycle_length(&self, a: ArrowId) -> usize {
        self.cycles[a.0].len()
    }

    /// σⁿ(a).
    pub fn sigma_pow(&self, a: ArrowId, n: usize) -> ArrowId {
        let cycle = &self.cycles[a.0];
        cycle[n % cycle.len()]
    }

    /// The path an item denotes, listed in traversal order.
    pub fn item_arrows(&self, item: BasisItem) -> Vec<ArrowId> {
        match item {
            BasisItem::Idempotent(_) => Vec::new(),
            BasisItem::Path { start, len } => self.cycles[start.0][..len].to_vec(),
            BasisItem::FullCycle(a) => self.cycles[a.0].clone(),
        }
    }

    pub fn item_source(&self, item: BasisItem) -> VertexId {
        match item {
            BasisItem::Idempotent(v) => v,
            BasisItem::Path { start, .. } | BasisItem::FullCycle(start) => self.sp.source(start),
        }
    }

    pub fn item_target(&self, item: BasisItem) -> VertexId {
        match item {
            BasisItem::Idempotent(v) => v,
            BasisItem::Path { start, len } => self.sp.target(self.sigma_pow(start, len - 1)),
            BasisItem::FullCycle(a) => self.sp.source(a),
        }
    }

    fn one_term(&self, item: BasisItem, p: Poly) -> Vec<(usize, Poly)> {
        vec![(self.index[&item], p)]
    }

    /// `c_a` written in the basis.
    fn cycle_terms(&self, a: ArrowId) -> Vec<(usize, Poly)> {
        let s = self.sp.source(a);
        if self.signs.is_positive(a) {
            return self.one_term(BasisItem::FullCycle(a), Poly::one());
        }
        let mut terms = self.one_term(BasisItem::Idempotent(s), Poly::c_pow(1));
        if self.sp.is_two_regular(s) {
            let partner = self
                .sp
                .quiver()
                .outgoing(s)
                .into_iter()
                .find(|&b| b != a)
                .expect("two-regular vertices have two outgoing arrows");
            terms.push((self.index[&BasisItem::FullCycle(partner)], -&Poly::one()));
        }
        terms
    }

    /// The non-relation path of length `len ≥ 1` starting with `a`, rewritten
    /// through `cᵏ`-multiples of basis items.
    fn path_terms(&self, a: ArrowId, len: usize) -> Vec<(usize, Poly)> {
        let l = self.cycle_length(a);
        let (k, r) = (len / l, len % l);
        if r > 0 {
            self.one_term(BasisItem::Path { start: a, len: r }, Poly::c_pow(k))
        } else {
            self.cycle_terms(a)
                .into_iter()
                .map(|(i, p)| (i, p.shift(k - 1)))
                .collect()
        }
    }

    fn path_of(item: BasisItem, cycle_len: impl Fn(ArrowId) -> usize) -> Option<(ArrowId, usize)> {
        match item {
            BasisItem::Idempotent(_) => None,
            BasisItem::Path { start, len } => Some((start, len)),
            BasisItem::FullCycle(a) => Some((a, cycle_len(a))),
        }
    }

    /// `x · y` (traverse `y`, then `x`) for basis items, without truncation.
    fn item_product(&self, x: BasisItem, y: BasisItem) -> Vec<(usize, Poly)> {
        match (x, y) {
            (BasisItem::Idempotent(i), BasisItem::Idempotent(j)) => {
                if i == j {
                    self.one_term(x, Poly::one())
                } else {
                    Vec::new()
                }
            }
            (BasisItem::Idempotent(i), _) => {
                if self.item_target(y) == i {
                    self.one_term(y, Poly::one())
                } else {
                    Vec::new()
                }
            }
            (_, BasisItem::Idempotent(j)) => {
                if self.item_source(x) == j {
                    self.one_term(x, Poly::one())
                } else {
                    Vec::new()
                }
            }
            _ => {
                let len = |a: ArrowId| self.cycle_length(a);
                let (xa, xn) = Self::path_of(x, len).expect("x is a path");
                let (ya, yn) = Self::path_of(y, len).expect("y is a path");
                if self.sigma_pow(ya, yn) == xa {
                    self.path_terms(ya, yn + xn)
                } else {
                    Vec::new()
                }
            }
        }
    }

    fn element(&self, coeffs: BTreeMap<usize, Poly>) -> AlgebraElement {
        AlgebraElement {
            algebra: self.id,
            coeffs,
        }
    }

    fn functional(&self, coeffs: BTreeMap<usize, Poly>) -> OmegaElement {
        OmegaElement {
            algebra: self.id,
            coeffs,
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        self.element(BTreeMap::new())
    }

    pub fn zero_functional(&self) -> OmegaElement {
        self.functional(BTreeMap::new())
    }

    pub fn basis_element(&self, item: BasisItem) -> AlgebraElement {
        self.element(BTreeMap::from([(self.index[&item], Poly::one())]))
    }

    pub fn basis_element_at(&self, index: usize) -> AlgebraElement {
        self.element(BTreeMap::from([(index, Poly::one())]))
    }

    /// The dual functional `p*` with `p*(q) = δ_pq`.
    pub fn dual(&self, item: BasisItem) -> OmegaElement {
        self.functional(BTreeMap::from([(self.index[&item], Poly::one())]))
    }

    pub fn dual_at(&self, index: usize) -> OmegaElement {
        self.functional(BTreeMap::from([(index, Poly::one())]))
    }

    /// Builds an element from `(item, coefficient)` pairs.
    pub fn element_from(&self, terms: &[(BasisItem, Poly)]) -> AlgebraElement {
        let mut out = self.zero();
        for (item, p) in terms {
            out.add_term(self.index[item], &p.truncate(self.order));
        }
        out
    }

    pub fn functional_from(&self, terms: &[(BasisItem, Poly)]) -> OmegaElement {
        let mut out = self.zero_functional();
        for (item, p) in terms {
            out.add_term(self.index[item], &p.truncate(self.order));
        }
        out
    }

    /// The unit `Σ eᵢ`.
    pub fn one(&self) -> AlgebraElement {
        let terms: Vec<_> = self
            .sp
            .vertex_ids()
            .map(|v| (BasisItem::Idempotent(v), Poly::one()))
            .collect();
        self.element_from(&terms)
    }

    /// The central element `c = Σ_α c_α`, i.e. `c · 1`.
    pub fn c(&self) -> AlgebraElement {
        self.one().scale(&Poly::c_pow(1), self.order)
    }

    /// The arrow `a` as an element (a path of length one, possibly rewritten).
    pub fn arrow(&self, a: ArrowId) -> AlgebraElement {
        let mut out = self.zero();
        for (i, p) in self.path_terms(a, 1) {
            out.add_term(i, &p.truncate(self.order));
        }
        out
    }

    fn own(&self, x: &AlgebraElement) -> Result<()> {
        if x.algebra == self.id {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra)
        }
    }

    fn own_functional(&self, x: &OmegaElement) -> Result<()> {
        if x.algebra == self.id {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra)
        }
    }

    /// `a · b`, bilinear extension of the basis table, truncated below `c^N`.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.own(a)?;
        self.own(b)?;
        let mut out = self.zero();
        for (&i, pa) in &a.coeffs {
            for (&j, pb) in &b.coeffs {
                let scalar = pa.mul_trunc(pb, self.order);
                if scalar.is_zero() {
                    continue;
                }
                for (k, pk) in &self.table[i][j] {
                    out.add_term(*k, &pk.mul_trunc(&scalar, self.order));
                }
            }
        }
        Ok(out)
    }

    /// Sign by which ν scales a basis path: the product of `ε_σ(α)·ε_α` over its arrows.
    pub fn nu_sign(&self, item: BasisItem) -> i8 {
        self.item_arrows(item)
            .into_iter()
            .map(|a| self.signs.sign(self.sp.next(a)) * self.signs.sign(a))
            .product()
    }

    /// The twist ν: fixes idempotents, scales each arrow α by `ε_σ(α)·ε_α`.
    pub fn nu(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.own(x)?;
        let coeffs = x
            .coeffs
            .iter()
            .map(|(&i, p)| {
                let p = if self.nu_sign(self.basis[i]) < 0 {
                    -p
                } else {
                    p.clone()
                };
                (i, p)
            })
            .collect();
        Ok(self.element(coeffs))
    }

    /// `φ(x)`, truncated.
    pub fn pair(&self, phi: &OmegaElement, x: &AlgebraElement) -> Result<Poly> {
        self.own(x)?;
        self.own_functional(phi)?;
        let mut acc = Poly::zero();
        for (i, p) in &x.coeffs {
            if let Some(q) = phi.coeffs.get(i) {
                acc += &p.mul_trunc(q, self.order);
            }
        }
        Ok(acc)
    }

    /// Left action `(a·φ)(x) = φ(x·a)`.
    pub fn left_act(&self, a: &AlgebraElement, phi: &OmegaElement) -> Result<OmegaElement> {
        self.own(a)?;
        self.own_functional(phi)?;
        Ok(self.act(phi, |q, j| &self.table[q][j], a))
    }

    /// Right action `(φ·a)(x) = φ(a·x)`.
    pub fn right_act(&self, phi: &OmegaElement, a: &AlgebraElement) -> Result<OmegaElement> {
        self.own(a)?;
        self.own_functional(phi)?;
        Ok(self.act(phi, |q, j| &self.table[j][q], a))
    }

    fn act<'t>(
        &'t self,
        phi: &OmegaElement,
        entry: impl Fn(usize, usize) -> &'t Vec<(usize, Poly)>,
        a: &AlgebraElement,
    ) -> OmegaElement {
        let mut out = self.zero_functional();
        for q in 0..self.basis.len() {
            let mut value = Poly::zero();
            for (&j, aj) in &a.coeffs {
                for (p, coef) in entry(q, j) {
                    if let Some(phi_p) = phi.coeffs.get(p) {
                        value += &coef.mul_trunc(phi_p, self.order).mul_trunc(aj, self.order);
                    }
                }
            }
            out.add_term(q, &value);
        }
        out
    }

    pub fn item_label(&self, item: BasisItem) -> String {
        match item {
            BasisItem::Idempotent(v) => format!("e_{}", self.sp.vertex_name(v)),
            BasisItem::Path { start, len } => format!("{}_{}", self.sp.arrow_name(start), len),
            BasisItem::FullCycle(a) => format!("c_{}", self.sp.arrow_name(a)),
        }
    }

    pub fn display_element(&self, x: &AlgebraElement) -> String {
        self.display_terms(&x.coeffs, "")
    }

    pub fn display_functional(&self, x: &OmegaElement) -> String {
        self.display_terms(&x.coeffs, "*")
    }

    fn display_terms(&self, coeffs: &BTreeMap<usize, Poly>, suffix: &str) -> String {
        if coeffs.is_empty() {
            return "0".into();
        }
        coeffs
            .iter()
            .map(|(&i, p)| {
                let label = self.item_label(self.basis[i]);
                if *p == Poly::one() {
                    format!("{label}{suffix}")
                } else {
                    format!("({p})·{label}{suffix}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for BasisItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisItem::Idempotent(v) => write!(f, "e[{}]", v.0),
            BasisItem::Path { start, len } => write!(f, "p[{},{}]", start.0, len),
            BasisItem::FullCycle(a) => write!(f, "c[{}]", a.0),
        }
    }
}

/// `|Q₀| + Σ_α (ℓ_α − 1) + |Q₁⁺|`, computed without building the algebra.
pub fn rank_formula(sp: &StrictPresentation) -> usize {
    let decomposition = crate::combinatorics::admissible_decomposition(sp);
    let paths: usize = decomposition
        .cycles
        .iter()
        .map(|c| c.len() * (c.len() - 1))
        .sum();
    let positive = sp.vertex_ids().filter(|&v| sp.is_two_regular(v)).count();
    sp.quiver().vertex_count() + paths + positive
}

/// Shorthand for `BigRational` integers in tests and callers.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn algebra(sp: StrictPresentation, order: usize) -> TruncatedAlgebra {
        let signs = assign_signs(&sp);
        TruncatedAlgebra::new(sp, signs, order).unwrap()
    }

    #[test]
    fn prototype_signs() {
        let sp = samples::strict(samples::prototype());
        let eps = assign_signs(&sp);
        let sign = |name: &str| eps.sign(sp.arrow(name).unwrap());
        assert_eq!(sign("α(2)"), 1);
        assert_eq!(sign("α(9)"), -1);
        assert_eq!(sign("α(1)"), -1);
        eps.check(&sp).unwrap();

        // ε(α(i)) = (−1)^i for i ≠ 8 and ε(α(8)) = −1.
        let chosen: Vec<i8> = (1..=11)
            .map(|i| if i == 8 || i % 2 == 1 { -1 } else { 1 })
            .collect();
        SignAssignment::new(chosen).unwrap().check(&sp).unwrap();
    }

    #[test]
    fn all_transition_means_all_negative() {
        let sp = samples::strict(samples::two_cycle());
        let eps = assign_signs(&sp);
        assert_eq!(eps.signs(), &[-1, -1]);
        let alg = TruncatedAlgebra::new(sp, eps, 3).unwrap();
        assert!(!alg
            .basis()
            .iter()
            .any(|b| matches!(b, BasisItem::FullCycle(_))));
    }

    #[test]
    fn invalid_signs_rejected() {
        let sp = samples::strict(samples::prototype());
        let mut raw = assign_signs(&sp).signs().to_vec();
        raw[0] = 1; // α(1) leaves the transition vertex 1
        let bad = SignAssignment::new(raw).unwrap();
        assert!(matches!(bad.check(&sp), Err(Error::InvalidSigns(_))));
        let mut raw = assign_signs(&sp).signs().to_vec();
        raw[1] = -1; // α(2) and α(9) both negative at vertex 2
        assert!(SignAssignment::new(raw).unwrap().check(&sp).is_err());
        assert!(SignAssignment::new(vec![0]).is_err());
    }

    #[test]
    fn truncation_order_at_least_two() {
        let sp = samples::strict(samples::two_loops());
        let eps = assign_signs(&sp);
        assert!(matches!(
            TruncatedAlgebra::new(sp, eps, 1),
            Err(Error::TruncationTooSmall(1))
        ));
    }

    #[test]
    fn hereditary_two_cycle_products() {
        let sp = samples::strict(samples::two_cycle());
        let alg = algebra(sp, 3);
        let gp = alg.presentation();
        let a = alg.arrow(gp.arrow("α").unwrap());
        let b = alg.arrow(gp.arrow("β").unwrap());
        let v1 = gp.vertex("1").unwrap();
        let v2 = gp.vertex("2").unwrap();
        let c_e = |v| alg.element_from(&[(BasisItem::Idempotent(v), Poly::c_pow(1))]);
        // β·α is the cycle at 1, α·β the cycle at 2.
        assert_eq!(alg.multiply(&b, &a).unwrap(), c_e(v1));
        assert_eq!(alg.multiply(&a, &b).unwrap(), c_e(v2));
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let alg = algebra(samples::strict(samples::prototype()), 4);
        for i in alg.presentation().vertex_ids() {
            for j in alg.presentation().vertex_ids() {
                let ei = alg.basis_element(BasisItem::Idempotent(i));
                let ej = alg.basis_element(BasisItem::Idempotent(j));
                let prod = alg.multiply(&ei, &ej).unwrap();
                if i == j {
                    assert_eq!(prod, ei);
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
    }

    #[test]
    fn prototype_two_cycle_product() {
        let alg = algebra(samples::strict(samples::prototype()), 4);
        let gp = alg.presentation();
        let a10 = gp.arrow("α(10)").unwrap();
        let a11 = gp.arrow("α(11)").unwrap();
        let x = alg.basis_element(BasisItem::Path { start: a10, len: 1 });
        let y = alg.basis_element(BasisItem::Path { start: a11, len: 1 });
        // α(10)·α(11) traverses α(11) then α(10): the 2-cycle at vertex 4.
        // α(11) is negative at 4 (α(4) is declared first), so the cycle is
        // c·e_4 − c_α(4).
        let expected = alg.element_from(&[
            (
                BasisItem::Idempotent(gp.vertex("4").unwrap()),
                Poly::c_pow(1),
            ),
            (
                BasisItem::FullCycle(gp.arrow("α(4)").unwrap()),
                -&Poly::one(),
            ),
        ]);
        assert_eq!(alg.multiply(&x, &y).unwrap(), expected);
        // α(11)·α(10) is the 2-cycle at vertex 6; α(10) is negative there too
        // (α(7) is declared first).
        let expected = alg.element_from(&[
            (
                BasisItem::Idempotent(gp.vertex("6").unwrap()),
                Poly::c_pow(1),
            ),
            (
                BasisItem::FullCycle(gp.arrow("α(7)").unwrap()),
                -&Poly::one(),
            ),
        ]);
        assert_eq!(alg.multiply(&y, &x).unwrap(), expected);
    }

    #[test]
    fn unit_and_centrality() {
        for sp in samples::strict_corpus() {
            let alg = algebra(sp, 4);
            let one = alg.one();
            let c = alg.c();
            for i in 0..alg.rank() {
                let x = alg.basis_element_at(i);
                assert_eq!(alg.multiply(&x, &one).unwrap(), x);
                assert_eq!(alg.multiply(&one, &x).unwrap(), x);
                assert_eq!(alg.multiply(&c, &x).unwrap(), alg.multiply(&x, &c).unwrap());
            }
        }
    }

    #[test]
    fn nu_fixes_idempotents_and_cycles_and_squares_to_identity() {
        for sp in samples::strict_corpus() {
            let alg = algebra(sp, 4);
            for &item in alg.basis() {
                let x = alg.basis_element(item);
                match item {
                    BasisItem::Idempotent(_) | BasisItem::FullCycle(_) => {
                        assert_eq!(alg.nu(&x).unwrap(), x)
                    }
                    BasisItem::Path { .. } => {}
                }
                assert_eq!(alg.nu(&alg.nu(&x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn nu_sign_telescopes() {
        let alg = algebra(samples::strict(samples::prototype()), 4);
        for &item in alg.basis() {
            if let BasisItem::Path { start, len } = item {
                let eps = alg.signs();
                assert_eq!(
                    alg.nu_sign(item),
                    eps.sign(start) * eps.sign(alg.sigma_pow(start, len))
                );
            }
        }
    }

    #[test]
    fn dual_pairing_and_unit_action() {
        let alg = algebra(samples::strict(samples::two_loops()), 3);
        let one = alg.one();
        for i in 0..alg.rank() {
            let phi = alg.dual_at(i);
            for j in 0..alg.rank() {
                let expected = if i == j { Poly::one() } else { Poly::zero() };
                assert_eq!(alg.pair(&phi, &alg.basis_element_at(j)).unwrap(), expected);
            }
            assert_eq!(alg.left_act(&one, &phi).unwrap(), phi);
            assert_eq!(alg.right_act(&phi, &one).unwrap(), phi);
        }
        // (e_i · e_j*)(x) = e_j*(x e_i) vanishes unless i = j.
        let sp = alg.presentation();
        let v = sp.vertex("1").unwrap();
        let e = alg.basis_element(BasisItem::Idempotent(v));
        let ed = alg.dual(BasisItem::Idempotent(v));
        assert_eq!(alg.left_act(&e, &ed).unwrap(), ed);
    }

    #[test]
    fn mismatched_algebras() {
        let a1 = algebra(samples::strict(samples::two_loops()), 3);
        let a2 = algebra(samples::strict(samples::two_loops()), 3);
        assert!(matches!(
            a1.multiply(&a1.one(), &a2.one()),
            Err(Error::MismatchedAlgebra)
        ));
    }

    #[test]
    fn rank_matches_formula() {
        for sp in samples::strict_corpus() {
            let expected = rank_formula(&sp);
            let alg = algebra(sp, 2);
            assert_eq!(alg.rank(), expected);
        }
        let alg = algebra(samples::strict(samples::prototype()), 2);
        // 7 idempotents + 9·8 + 2·1 paths + 4 positive cycles.
        assert_eq!(alg.rank(), 7 + 72 + 2 + 4);
    }
}
