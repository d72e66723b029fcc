//! Braided Hopf structure: Δ, S, S⁻¹, ε, Ψ, Ψ⁻¹ on generators, their
//! extensions to all normal words, the adjoint coaction and the crossing
//! operators built from them.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

use crate::error::Result;
use crate::linalg::invert;
use crate::ncring::{AlgebraElement, Letter, NormalWord, RewriteSystem};
use crate::parse::{parse_element, parse_tensor};
use crate::scalar::{Rational, Scalar};
use crate::tensor::{Tensor2, TensorElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Instance {
    Bsl2,
    Classical,
}

impl std::str::FromStr for Instance {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bsl2" => Ok(Instance::Bsl2),
            "classical" => Ok(Instance::Classical),
            _ => Err(crate::error::Error::Parse(format!("unknown instance '{s}'"))),
        }
    }
}

/// Generator-level data, indexed by `Letter as usize`.
#[derive(Clone, Debug)]
pub struct StructureTables {
    pub delta: [Tensor2; 4],
    pub s: [AlgebraElement; 4],
    pub s_inv: [AlgebraElement; 4],
    pub eps: [Scalar; 4],
    pub psi: [[Tensor2; 4]; 4],
    pub psi_inv: [[Tensor2; 4]; 4],
}

const DELTA: [&str; 4] = ["a ⊗ a + b ⊗ c", "a ⊗ b + b ⊗ d", "c ⊗ a + d ⊗ c", "c ⊗ b + d ⊗ d"];
const ANTIPODE: [&str; 4] = ["(1 - t) a + t d", "-t b", "-t c", "a"];
const PSI: [[&str; 4]; 4] = [
    [
        "a ⊗ a + (1 - t) b ⊗ c",
        "b ⊗ a",
        "c ⊗ a + (1 - t)(d - a) ⊗ c",
        "d ⊗ a + (1 - t^-1) b ⊗ c",
    ],
    [
        "a ⊗ b + (1 - t) b ⊗ (d - a)",
        "t b ⊗ b",
        "t^-1 c ⊗ b + (1 + t)(1 - t^-1)^2 b ⊗ c - (1 - t^-1)(d - a) ⊗ (d - a)",
        "d ⊗ b + (1 - t^-1) b ⊗ (d - a)",
    ],
    ["a ⊗ c", "t^-1 b ⊗ c", "t c ⊗ c", "d ⊗ c"],
    [
        "a ⊗ d + (1 - t^-1) b ⊗ c",
        "b ⊗ d",
        "c ⊗ d + (1 - t^-1)(d - a) ⊗ c",
        "d ⊗ d - t^-1 (1 - t^-1) b ⊗ c",
    ],
];

fn gen_index(g: Letter, h: Letter) -> usize {
    4 * (g as usize) + h as usize
}

impl StructureTables {
    /// Tables of braided SL(2) over Q(t).
    pub fn bsl2() -> Self {
        let ring = RewriteSystem::bsl2();
        let delta = DELTA.map(|s| parse_tensor(s, &ring).unwrap());
        let s = ANTIPODE.map(|s| parse_element(s, &ring).unwrap());
        let eps = [Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one()];
        let psi = PSI.map(|row| row.map(|s| parse_tensor(s, &ring).unwrap()));
        StructureTables::complete(delta, s, eps, psi).expect("invertible tables")
    }

    /// The commutative Hopf algebra of SL(2): the same tables at `t = 1`,
    /// where Ψ is the flip.
    pub fn classical() -> Self {
        StructureTables::bsl2().specialize(&Rational::from_integer(1.into())).expect("no poles at t = 1")
    }

    /// Braided SL(2) with `Ψ(b ⊗ b)` scaled by an extra `t`; the axiom suite
    /// must reject it.
    pub fn corrupted() -> Self {
        let mut tables = StructureTables::bsl2();
        let ring = RewriteSystem::bsl2();
        tables.psi[1][1] = parse_tensor("t^2 b ⊗ b", &ring).unwrap();
        StructureTables::complete(tables.delta, tables.s, tables.eps, tables.psi).unwrap()
    }

    /// Derives S⁻¹ and Ψ⁻¹ by inverting S and Ψ on the degree-1 span.
    pub fn complete(delta: [Tensor2; 4], s: [AlgebraElement; 4], eps: [Scalar; 4], psi: [[Tensor2; 4]; 4]) -> Result<Self> {
        let letters = Letter::ALL;
        let s_mat: Vec<Vec<Scalar>> = letters
            .iter()
            .map(|&row| letters.iter().map(|&col| s[col as usize].coeff(&NormalWord::letter(row))).collect())
            .collect();
        let s_inv_mat = invert(&s_mat)?;
        let s_inv = letters.map(|col| {
            AlgebraElement::from_terms(
                letters.iter().map(|&row| (NormalWord::letter(row), s_inv_mat[row as usize][col as usize].clone())),
            )
        });
        let pairs: Vec<(Letter, Letter)> =
            letters.iter().flat_map(|&g| letters.iter().map(move |&h| (g, h))).collect();
        let key = |g: Letter, h: Letter| vec![NormalWord::letter(g), NormalWord::letter(h)];
        let psi_mat: Vec<Vec<Scalar>> = pairs
            .iter()
            .map(|&(og, oh)| pairs.iter().map(|&(ig, ih)| psi[ig as usize][ih as usize].coeff(&key(og, oh))).collect())
            .collect();
        let psi_inv_mat = invert(&psi_mat)?;
        let mut psi_inv: [[Tensor2; 4]; 4] = Default::default();
        for &(ig, ih) in &pairs {
            let mut e = TensorElement::zero(2);
            for &(og, oh) in &pairs {
                e.add_term(key(og, oh), &psi_inv_mat[gen_index(og, oh)][gen_index(ig, ih)]);
            }
            psi_inv[ig as usize][ih as usize] = e;
        }
        Ok(StructureTables { delta, s, s_inv, eps, psi, psi_inv })
    }

    pub fn specialize(&self, t0: &Rational) -> Result<Self> {
        let sp2 = |x: &Tensor2| x.specialize(t0);
        let sp1 = |x: &AlgebraElement| RewriteSystem::specialize(x, t0);
        let mut psi: [[Tensor2; 4]; 4] = Default::default();
        let mut psi_inv: [[Tensor2; 4]; 4] = Default::default();
        let mut delta: [Tensor2; 4] = Default::default();
        let mut s: [AlgebraElement; 4] = Default::default();
        let mut s_inv: [AlgebraElement; 4] = Default::default();
        let mut eps: [Scalar; 4] = Default::default();
        for i in 0..4 {
            delta[i] = sp2(&self.delta[i])?;
            s[i] = sp1(&self.s[i])?;
            s_inv[i] = sp1(&self.s_inv[i])?;
            eps[i] = self.eps[i].specialize(t0)?;
            for j in 0..4 {
                psi[i][j] = sp2(&self.psi[i][j])?;
                psi_inv[i][j] = sp2(&self.psi_inv[i][j])?;
            }
        }
        Ok(StructureTables { delta, s, s_inv, eps, psi, psi_inv })
    }
}

impl Default for TensorElement {
    fn default() -> Self {
        TensorElement::zero(2)
    }
}

#[derive(Default)]
struct Memo<K, V>(RwLock<HashMap<K, V>>);

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    fn get_or<F: FnOnce() -> V>(&self, k: &K, f: F) -> V {
        if let Some(v) = self.0.read().unwrap().get(k) {
            return v.clone();
        }
        let v = f();
        self.0.write().unwrap().insert(k.clone(), v.clone());
        v
    }
}

/// A braided Hopf algebra instance with memoized structure maps.
pub struct BraidedHopf {
    pub ring: RewriteSystem,
    pub tables: StructureTables,
    instance: Instance,
    delta: Memo<NormalWord, Tensor2>,
    s: Memo<NormalWord, AlgebraElement>,
    s_inv: Memo<NormalWord, AlgebraElement>,
    psi: Memo<(NormalWord, NormalWord, bool), Tensor2>,
    ad: Memo<NormalWord, Tensor2>,
    cross: Memo<(NormalWord, NormalWord, bool), Tensor2>,
    lambda: Memo<NormalWord, Tensor2>,
}

impl BraidedHopf {
    pub fn new(ring: RewriteSystem, tables: StructureTables, instance: Instance) -> Self {
        BraidedHopf {
            ring,
            tables,
            instance,
            delta: Memo::default(),
            s: Memo::default(),
            s_inv: Memo::default(),
            psi: Memo::default(),
            ad: Memo::default(),
            cross: Memo::default(),
            lambda: Memo::default(),
        }
    }

    pub fn bsl2() -> Self {
        BraidedHopf::new(RewriteSystem::bsl2(), StructureTables::bsl2(), Instance::Bsl2)
    }

    pub fn classical() -> Self {
        BraidedHopf::new(RewriteSystem::classical(), StructureTables::classical(), Instance::Classical)
    }

    pub fn corrupted() -> Self {
        BraidedHopf::new(RewriteSystem::bsl2(), StructureTables::corrupted(), Instance::Bsl2)
    }

    pub fn of(instance: Instance) -> Self {
        match instance {
            Instance::Bsl2 => BraidedHopf::bsl2(),
            Instance::Classical => BraidedHopf::classical(),
        }
    }

    pub fn instance(&self) -> Instance {
        self.instance
    }

    fn split_last(w: &NormalWord) -> (NormalWord, Letter) {
        let mut letters = w.letters();
        let x = letters.pop().expect("nonempty word");
        (NormalWord::from_letters(&letters).expect("prefix of a normal word is normal"), x)
    }

    pub fn coproduct_word(&self, w: &NormalWord) -> Tensor2 {
        if w.is_one() {
            return TensorElement::unit(2);
        }
        self.delta.get_or(w, || {
            let (head, x) = Self::split_last(w);
            let tail = &self.tables.delta[x as usize];
            if head.is_one() {
                return tail.clone();
            }
            self.tensor_mul(&self.coproduct_word(&head), tail).unwrap()
        })
    }

    pub fn coproduct(&self, x: &AlgebraElement) -> Tensor2 {
        let mut out = TensorElement::zero(2);
        for (w, c) in x.terms() {
            out.add_scaled(&self.coproduct_word(w), c);
        }
        out
    }

    /// `(x⊗y)(z⊗w) = x Ψ(y⊗z) w`.
    pub fn braided_mul2(&self, u: &Tensor2, v: &Tensor2) -> Tensor2 {
        self.tensor_mul(u, v).expect("two-factor tensors")
    }

    /// `S(xy) = μ (S⊗S) Ψ(x⊗y)`.
    pub fn antipode_word(&self, w: &NormalWord) -> AlgebraElement {
        if w.is_one() {
            return AlgebraElement::one();
        }
        self.s.get_or(w, || {
            let (head, x) = Self::split_last(w);
            if head.is_one() {
                return self.tables.s[x as usize].clone();
            }
            let swapped = self.psi_words(&head, &NormalWord::letter(x), false);
            let mut out = AlgebraElement::zero();
            for (k, c) in swapped.terms() {
                out.add_scaled(&self.ring.mul(&self.antipode_word(&k[0]), &self.antipode_word(&k[1])), c);
            }
            out
        })
    }

    /// `S⁻¹(xy) = μ Ψ⁻¹ (S⁻¹x ⊗ S⁻¹y)`.
    pub fn antipode_inv_word(&self, w: &NormalWord) -> AlgebraElement {
        if w.is_one() {
            return AlgebraElement::one();
        }
        self.s_inv.get_or(w, || {
            let (head, x) = Self::split_last(w);
            if head.is_one() {
                return self.tables.s_inv[x as usize].clone();
            }
            let pre = TensorElement::from_factors(&[self.antipode_inv_word(&head), self.tables.s_inv[x as usize].clone()]);
            let swapped = self.braid_slots(&pre, 0, true);
            self.mul_slots(&swapped, 0).slot_element()
        })
    }

    pub fn antipode(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.antipode_word(w), c);
        }
        out
    }

    pub fn antipode_inv(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.antipode_inv_word(w), c);
        }
        out
    }

    /// ε is multiplicative, so a word maps to the product of its letters.
    pub fn counit_word(&self, w: &NormalWord) -> Scalar {
        w.letters().iter().fold(Scalar::one(), |acc, x| &acc * &self.tables.eps[*x as usize])
    }

    pub fn counit(&self, x: &AlgebraElement) -> Scalar {
        x.terms().fold(Scalar::zero(), |acc, (w, c)| &acc + &(c * &self.counit_word(w)))
    }

    /// Ψ or Ψ⁻¹ on a pair of words, extended by
    /// `Ψ(xy⊗z) = (id⊗μ)(Ψ⊗id)(x⊗Ψ(y⊗z))` and
    /// `Ψ(x⊗yz) = (μ⊗id)(id⊗Ψ)(Ψ(x⊗y)⊗z)`; Ψ⁻¹ obeys the same laws.
    pub fn psi_words(&self, u: &NormalWord, v: &NormalWord, inverse: bool) -> Tensor2 {
        if u.is_one() || v.is_one() {
            return TensorElement::pure(vec![*v, *u], Scalar::one());
        }
        self.psi.get_or(&(*u, *v, inverse), || {
            let table = if inverse { &self.tables.psi_inv } else { &self.tables.psi };
            let mut out = TensorElement::zero(2);
            if u.degree() > 1 {
                let (head, x) = Self::split_last(u);
                for (k, c) in self.psi_words(&NormalWord::letter(x), v, inverse).terms() {
                    for (k2, c2) in self.psi_words(&head, &k[0], inverse).terms() {
                        let right = self.ring.mul_words(&k2[1], &k[1]);
                        for (w, c3) in right.terms() {
                            out.add_term(vec![k2[0], *w], &(&(c * c2) * c3));
                        }
                    }
                }
            } else if v.degree() > 1 {
                let (head, y) = Self::split_last(v);
                for (k, c) in self.psi_words(u, &head, inverse).terms() {
                    for (k2, c2) in self.psi_words(&k[1], &NormalWord::letter(y), inverse).terms() {
                        let left = self.ring.mul_words(&k[0], &k2[0]);
                        for (w, c3) in left.terms() {
                            out.add_term(vec![*w, k2[1]], &(&(c * c2) * c3));
                        }
                    }
                }
            } else {
                let g = u.letters()[0];
                let h = v.letters()[0];
                out = table[g as usize][h as usize].clone();
            }
            out
        })
    }

    pub fn braiding(&self, u: &Tensor2) -> Tensor2 {
        self.braid_slots(u, 0, false)
    }

    pub fn braiding_inv(&self, u: &Tensor2) -> Tensor2 {
        self.braid_slots(u, 0, true)
    }

    /// `ad = (id⊗μ)(Ψ⊗id)(S⊗Δ)Δ`.
    pub fn adjoint_word(&self, w: &NormalWord) -> Tensor2 {
        if w.is_one() {
            return TensorElement::unit(2);
        }
        self.ad.get_or(w, || {
            let e = self.coproduct_word(w);
            let e = self.antipode_slot(&e, 0);
            let e = self.coproduct_slot(&e, 1);
            let e = self.braid_slots(&e, 0, false);
            self.mul_slots(&e, 1)
        })
    }

    pub fn adjoint(&self, x: &AlgebraElement) -> Tensor2 {
        TensorElement::single(x.clone()).map_slots(0, 1, 2, |w| self.adjoint_word(&w[0]))
    }

    /// `R = (id⊗μ)(Ψ⊗id)(id⊗ad)` on a pair of words.
    pub fn crossing_pos_words(&self, u: &NormalWord, v: &NormalWord) -> Tensor2 {
        self.cross.get_or(&(*u, *v, false), || {
            let e = self.adjoint_slot(&TensorElement::pure(vec![*u, *v], Scalar::one()), 1);
            let e = self.braid_slots(&e, 0, false);
            self.mul_slots(&e, 1)
        })
    }

    /// `λ(α) = (μ⊗id)(id⊗Ψ)(id⊗id⊗S)(Δ⊗id)Δ(α)`; classically
    /// `α1 S(α3) ⊗ α2`.
    pub fn lambda_word(&self, w: &NormalWord) -> Tensor2 {
        self.lambda.get_or(w, || {
            let e = self.coproduct_slot(&self.coproduct_word(w), 0);
            let e = self.antipode_slot(&e, 2);
            let e = self.braid_slots(&e, 1, false);
            self.mul_slots(&e, 0)
        })
    }

    /// `R⁻¹ = (μ⊗id)(id⊗Ψ)(λ⊗id)` on a pair of words. Both crossings are Ψ,
    /// not Ψ⁻¹: every placement using Ψ⁻¹ fails `R R⁻¹ = id`.
    pub fn crossing_neg_words(&self, u: &NormalWord, v: &NormalWord) -> Tensor2 {
        self.cross.get_or(&(*u, *v, true), || {
            let e = TensorElement::pure(vec![*u, *v], Scalar::one()).map_slots(0, 1, 2, |w| self.lambda_word(&w[0]));
            let e = self.braid_slots(&e, 1, false);
            self.mul_slots(&e, 0)
        })
    }
}
