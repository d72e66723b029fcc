//! Elements of `A^⊗n`, the braided tensor-product multiplication, structure
//! maps applied at a position, and the adjoint coaction on tensor powers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bhopf::BraidedHopf;
use crate::error::{Error, Result};
use crate::ncring::{format_term, parse_normal_word, AlgebraElement, NormalWord};
use crate::parse::parse_scalar;
use crate::scalar::{Rational, Scalar};

/// A tuple of normal words, one per tensor factor.
pub type Key = Vec<NormalWord>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    n: usize,
    terms: BTreeMap<Key, Scalar>,
}

/// Two-factor tensors (codomain of Δ and Ψ).
pub type Tensor2 = TensorElement;

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        TensorElement { n, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(n: usize) -> Self {
        TensorElement::pure(vec![NormalWord::ONE; n], Scalar::one())
    }

    pub fn pure(key: Key, c: Scalar) -> Self {
        let mut e = TensorElement::zero(key.len());
        e.add_term(key, &c);
        e
    }

    pub fn single(x: AlgebraElement) -> Self {
        let mut e = TensorElement::zero(1);
        for (w, c) in x.terms() {
            e.add_term(vec![*w], c);
        }
        e
    }

    /// `x_1 ⊗ ... ⊗ x_n` expanded multilinearly.
    pub fn from_factors(factors: &[AlgebraElement]) -> Self {
        factors.iter().fold(TensorElement::unit(0), |acc, x| acc.otimes(&TensorElement::single(x.clone())))
    }

    /// The generator `g` in slot `pos` (0-based) and units elsewhere.
    pub fn embed(n: usize, pos: usize, x: &AlgebraElement) -> Self {
        let factors: Vec<AlgebraElement> =
            (0..n).map(|i| if i == pos { x.clone() } else { AlgebraElement::one() }).collect();
        TensorElement::from_factors(&factors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[NormalWord]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: Key, c: &Scalar) {
        debug_assert_eq!(key.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        assert_eq!(self.n, other.n, "factor count mismatch");
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), &(x * c));
        }
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.n != other.n {
            return Err(Error::FactorMismatch { expected: self.n, got: other.n });
        }
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::one());
        Ok(e)
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut e = TensorElement::zero(self.n);
        e.add_scaled(self, c);
        e
    }

    /// Plain (unbraided) tensor product of two tensors.
    pub fn otimes(&self, other: &TensorElement) -> TensorElement {
        let mut e = TensorElement::zero(self.n + other.n);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().copied());
                e.add_term(k, &(c1 * c2));
            }
        }
        e
    }

    /// The element of `A` when `n = 1`.
    pub fn slot_element(&self) -> AlgebraElement {
        assert_eq!(self.n, 1);
        AlgebraElement::from_terms(self.terms.iter().map(|(k, c)| (k[0], c.clone())))
    }

    /// Largest word degree appearing in any slot.
    pub fn degree(&self) -> usize {
        self.terms.keys().flat_map(|k| k.iter().map(NormalWord::degree)).max().unwrap_or(0)
    }

    /// Per-slot maximal degrees.
    pub fn slot_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for k in self.terms.keys() {
            for (i, w) in k.iter().enumerate() {
                out[i] = out[i].max(w.degree());
            }
        }
        out
    }

    pub fn map_coeffs<F>(&self, f: F) -> Result<TensorElement>
    where
        F: Fn(&Scalar) -> Result<Scalar>,
    {
        let mut e = TensorElement::zero(self.n);
        for (k, c) in &self.terms {
            e.add_term(k.clone(), &f(c)?);
        }
        Ok(e)
    }

    /// Coefficientwise `t = t0`.
    pub fn specialize(&self, t0: &Rational) -> Result<TensorElement> {
        self.map_coeffs(|c| c.specialize(t0))
    }

    /// Replaces the `k` slots starting at `pos` (0-based) by `f` of their
    /// words; `f` returns tensors with `m` factors.
    pub fn map_slots<F>(&self, pos: usize, k: usize, m: usize, mut f: F) -> TensorElement
    where
        F: FnMut(&[NormalWord]) -> TensorElement,
    {
        assert!(pos + k <= self.n);
        let mut out = TensorElement::zero(self.n - k + m);
        for (key, c) in &self.terms {
            let img = f(&key[pos..pos + k]);
            debug_assert_eq!(img.n, m);
            for (ik, ic) in &img.terms {
                let mut nk = Vec::with_capacity(out.n);
                nk.extend_from_slice(&key[..pos]);
                nk.extend_from_slice(ik);
                nk.extend_from_slice(&key[pos + k..]);
                out.add_term(nk, &(c * ic));
            }
        }
        out
    }

    /// Tensor of the words grouped by the `b - c` charge and degree parity of
    /// the whole tuple; components in different classes never mix under the
    /// structure maps.
    pub fn homogeneous_parts(&self) -> BTreeMap<(i32, usize), TensorElement> {
        let mut out: BTreeMap<(i32, usize), TensorElement> = BTreeMap::new();
        for (k, c) in &self.terms {
            let class = key_class(k);
            out.entry(class).or_insert_with(|| TensorElement::zero(self.n)).add_term(k.clone(), c);
        }
        out
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermJson { coeff: c.to_string(), word: k.iter().map(|w| w.to_string()).collect() })
                .collect(),
        }
    }

    pub fn from_json(j: &TensorJson) -> Result<TensorElement> {
        let mut e = TensorElement::zero(j.n);
        for t in &j.terms {
            if t.word.len() != j.n {
                return Err(Error::FactorMismatch { expected: j.n, got: t.word.len() });
            }
            let key = t.word.iter().map(|w| parse_normal_word(w)).collect::<Result<Key>>()?;
            e.add_term(key, &parse_scalar(&t.coeff)?);
        }
        Ok(e)
    }
}

/// `(charge, degree parity)` of a tuple.
pub fn key_class(k: &[NormalWord]) -> (i32, usize) {
    (k.iter().map(NormalWord::charge).sum(), k.iter().map(NormalWord::degree).sum::<usize>() % 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let body: Vec<String> = k.iter().map(|w| w.to_string()).collect();
                format_term(c, &body.join(" ⊗ "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One-slot maps for [`apply_at`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotMap {
    /// Δ: one factor becomes two.
    Coproduct,
    Antipode,
    AntipodeInv,
    /// ε: the factor disappears.
    Counit,
    /// Inserts a unit factor before the position.
    Unit,
}

impl BraidedHopf {
    /// Braided tensor-product multiplication on `A^⊗n`: each factor of `v`
    /// is braided leftward past the remaining factors of `u`.
    pub fn tensor_mul(&self, u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
        if u.n != v.n {
            return Err(Error::FactorMismatch { expected: u.n, got: v.n });
        }
        let mut out = TensorElement::zero(u.n);
        for (p, cp) in &u.terms {
            for (q, cq) in &v.terms {
                out.add_scaled(&self.mul_keys(p, q), &(cp * cq));
            }
        }
        Ok(out)
    }

    /// Product of two pure tuples.
    pub fn mul_keys(&self, p: &[NormalWord], q: &[NormalWord]) -> TensorElement {
        let n = p.len();
        if n == 0 {
            return TensorElement::unit(0);
        }
        if n == 1 {
            return TensorElement::single(self.ring.mul_words(&p[0], &q[0]));
        }
        if q[0].is_one() {
            let rest = self.mul_keys(&p[1..], &q[1..]);
            return TensorElement::pure(vec![p[0]], Scalar::one()).otimes(&rest);
        }
        // p[1..] ⊗ q0, then carry q0 to the front
        let mut key: Key = p[1..].to_vec();
        key.push(q[0]);
        let mut e = TensorElement::pure(key, Scalar::one());
        for i in (0..n - 1).rev() {
            e = self.braid_slots(&e, i, false);
        }
        let mut out = TensorElement::zero(n);
        for (k, c) in &e.terms {
            let head = TensorElement::single(self.ring.mul_words(&p[0], &k[0]));
            let tail = self.mul_keys(&k[1..], &q[1..]);
            out.add_scaled(&head.otimes(&tail), c);
        }
        out
    }

    /// `id^i ⊗ f ⊗ id` with a 1-based position, as exposed to users.
    pub fn apply_at(&self, map: SlotMap, position: usize, u: &TensorElement) -> Result<TensorElement> {
        let limit = if map == SlotMap::Unit { u.n + 1 } else { u.n };
        if position == 0 || position > limit {
            return Err(Error::IndexOutOfRange { index: position, len: u.n });
        }
        let i = position - 1;
        Ok(match map {
            SlotMap::Coproduct => u.map_slots(i, 1, 2, |w| self.coproduct_word(&w[0])),
            SlotMap::Antipode => u.map_slots(i, 1, 1, |w| TensorElement::single(self.antipode_word(&w[0]))),
            SlotMap::AntipodeInv => u.map_slots(i, 1, 1, |w| TensorElement::single(self.antipode_inv_word(&w[0]))),
            SlotMap::Counit => u.map_slots(i, 1, 0, |w| TensorElement::pure(vec![], self.counit_word(&w[0]))),
            SlotMap::Unit => u.map_slots(i, 0, 1, |_| TensorElement::unit(1)),
        })
    }

    /// Ψ (or Ψ⁻¹ for `sign < 0`) on factors `position, position + 1`
    /// (1-based).
    pub fn braid_at(&self, position: usize, sign: i32, u: &TensorElement) -> Result<TensorElement> {
        if position == 0 || position >= u.n {
            return Err(Error::IndexOutOfRange { index: position, len: u.n });
        }
        Ok(self.braid_slots(u, position - 1, sign < 0))
    }

    /// 0-based Ψ^{±1} on slots `i, i + 1`.
    pub fn braid_slots(&self, u: &TensorElement, i: usize, inverse: bool) -> TensorElement {
        u.map_slots(i, 2, 2, |w| self.psi_words(&w[0], &w[1], inverse))
    }

    /// 0-based μ on slots `i, i + 1`.
    pub fn mul_slots(&self, u: &TensorElement, i: usize) -> TensorElement {
        u.map_slots(i, 2, 1, |w| TensorElement::single(self.ring.mul_words(&w[0], &w[1])))
    }

    /// 0-based Δ on slot `i`.
    pub fn coproduct_slot(&self, u: &TensorElement, i: usize) -> TensorElement {
        u.map_slots(i, 1, 2, |w| self.coproduct_word(&w[0]))
    }

    /// 0-based S on slot `i`.
    pub fn antipode_slot(&self, u: &TensorElement, i: usize) -> TensorElement {
        u.map_slots(i, 1, 1, |w| TensorElement::single(self.antipode_word(&w[0])))
    }

    /// 0-based ε on slot `i`.
    pub fn counit_slot(&self, u: &TensorElement, i: usize) -> TensorElement {
        u.map_slots(i, 1, 0, |w| TensorElement::pure(vec![], self.counit_word(&w[0])))
    }

    /// 0-based ad on slot `i`.
    pub fn adjoint_slot(&self, u: &TensorElement, i: usize) -> TensorElement {
        u.map_slots(i, 1, 2, |w| self.adjoint_word(&w[0]))
    }

    /// `Ad: A^⊗n → A^⊗n ⊗ A`, with
    /// `Ad_n = (id^n ⊗ μ)(id^(n-1) ⊗ Ψ ⊗ id)(Ad_(n-1) ⊗ ad)`.
    pub fn big_adjoint(&self, u: &TensorElement) -> TensorElement {
        u.map_slots(0, u.n, u.n + 1, |k| self.big_adjoint_key(k))
    }

    fn big_adjoint_key(&self, k: &[NormalWord]) -> TensorElement {
        let n = k.len();
        if n == 0 {
            return TensorElement::unit(1);
        }
        if n == 1 {
            return self.adjoint_word(&k[0]);
        }
        let e = self.adjoint_slot(&TensorElement::pure(k.to_vec(), Scalar::one()), n - 1);
        let e = e.map_slots(0, n - 1, n, |head| self.big_adjoint_key(head));
        let e = self.braid_slots(&e, n - 1, false);
        self.mul_slots(&e, n)
    }
}
