//! Bounded-degree ideal membership over Q(t), the Ad-invariant probe, and
//! the classical numeric oracle on SL(2, C) matrix tuples.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bhopf::BraidedHopf;
use crate::braidrep::{ideal_generators, BraidWord, IdealPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, ModEchelon, SparseRow};
use crate::ncring::NormalWord;
use crate::scalar::{Rational, Scalar};
use crate::tensor::{key_class, Key, TensorElement};

/// All `n`-tuples of normal words whose slots have degree at most `D`, in
/// the term order.
///
/// The bound is per slot: products `m·g·m'` are filtered slotwise, which is
/// what the braided product respects factor by factor.
#[derive(Clone, Debug)]
pub struct FilteredBasis {
    pub n: usize,
    pub max_degree: usize,
    pub keys: Vec<Key>,
    index: HashMap<Key, usize>,
}

impl FilteredBasis {
    pub fn new(n: usize, max_degree: usize) -> Self {
        let keys = monomials_bounded(&vec![max_degree; n]);
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        FilteredBasis { n, max_degree, keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn index_of(&self, k: &[NormalWord]) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn row(&self, x: &TensorElement) -> Result<SparseRow> {
        x.terms()
            .map(|(k, c)| {
                let i = self.index_of(k).ok_or(Error::DegreeOverflow { what: "element", degree: x.degree(), bound: self.max_degree })?;
                Ok((i, c.clone()))
            })
            .collect()
    }

    pub fn element(&self, row: &SparseRow) -> TensorElement {
        let mut e = TensorElement::zero(self.n);
        for (i, c) in row {
            e.add_term(self.keys[*i].clone(), c);
        }
        e
    }
}

/// Tuples with slot `i` of degree at most `bounds[i]`, sorted.
pub fn monomials_bounded(bounds: &[usize]) -> Vec<Key> {
    let mut out: Vec<Key> = vec![Vec::new()];
    for &b in bounds {
        let words = NormalWord::up_to_degree(b);
        out = out
            .into_iter()
            .flat_map(|k| {
                words.iter().map(move |w| {
                    let mut k2 = k.clone();
                    k2.push(*w);
                    k2
                })
            })
            .collect();
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    MemberAtD,
    NotMemberAtD,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MembershipReport {
    pub decision: Decision,
    pub max_degree: usize,
    /// Dimension of the filtered piece of `A^⊗n`.
    pub basis_dim: usize,
    /// Products `m·g·m'` generated in the relevant homogeneous classes.
    pub rows: usize,
    /// Rank of those products.
    pub rank: usize,
}

impl MembershipReport {
    pub fn is_member(&self) -> bool {
        self.decision == Decision::MemberAtD
    }
}

#[derive(Default)]
struct Block {
    rows: Vec<SparseRow>,
    modular: Option<ModEchelon>,
    selected: Vec<bool>,
    exact: Option<Echelon>,
    complete: bool,
}

type BlockKey = (Vec<usize>, Option<(i32, usize)>);

fn trace() -> bool {
    std::env::var_os("BSL2_TRACE").is_some()
}

/// The span of `{m·g·m'}` inside a filtered piece, built lazily one
/// homogeneous class at a time.
///
/// Membership is first attempted in smaller pieces (slot bounds starting at
/// the degrees of the element); their products are a subset of the full
/// piece's, so a positive answer there is a positive answer at `D`.
pub struct IdealSpan<'a> {
    h: &'a BraidedHopf,
    ideal: IdealPresentation,
    pub basis: FilteredBasis,
    /// `(charge, parity)` of each generator, when all are homogeneous.
    classes: Option<Vec<(i32, usize)>>,
    blocks: Mutex<BTreeMap<BlockKey, Block>>,
    seed: u64,
}

impl<'a> IdealSpan<'a> {
    pub fn new(h: &'a BraidedHopf, ideal: &IdealPresentation, max_degree: usize) -> Result<Self> {
        let gens: Vec<TensorElement> = ideal.nonzero().cloned().collect();
        for g in &gens {
            let deg = g.degree();
            if deg > max_degree {
                return Err(Error::DegreeOverflow { what: "ideal generator", degree: deg, bound: max_degree });
            }
        }
        let classes: Option<Vec<(i32, usize)>> = gens
            .iter()
            .map(|g| {
                let parts = g.homogeneous_parts();
                (parts.len() == 1).then(|| *parts.keys().next().unwrap())
            })
            .collect();
        Ok(IdealSpan {
            h,
            ideal: IdealPresentation { n: ideal.n, generators: gens },
            basis: FilteredBasis::new(ideal.n, max_degree),
            classes,
            blocks: Mutex::new(BTreeMap::new()),
            seed: 0x5eed,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.basis.max_degree
    }

    /// Products with slot degrees within `bounds` landing in `class` (all
    /// classes when blocking is off).
    fn products(&self, bounds: &[usize], class: Option<(i32, usize)>) -> Vec<TensorElement> {
        let mut jobs: Vec<(usize, Key, Key)> = Vec::new();
        for (gi, g) in self.ideal.generators.iter().enumerate() {
            let gd = g.slot_degrees();
            if gd.iter().zip(bounds).any(|(g, b)| g > b) {
                continue;
            }
            let room: Vec<usize> = gd.iter().zip(bounds).map(|(x, b)| b - x).collect();
            for m in &monomials_bounded(&room) {
                let room2: Vec<usize> = room.iter().zip(m).map(|(r, w)| r - w.degree()).collect();
                for m2 in monomials_bounded(&room2) {
                    if let (Some(target), Some(gc)) = (class, self.classes.as_ref().map(|c| c[gi])) {
                        let (c1, p1) = key_class(m);
                        let (c2, p2) = key_class(&m2);
                        if (c1 + gc.0 + c2, (p1 + gc.1 + p2) % 2) != target {
                            continue;
                        }
                    }
                    jobs.push((gi, m.clone(), m2));
                }
            }
        }
        jobs.par_iter()
            .map(|(gi, m, m2)| {
                let g = &self.ideal.generators[*gi];
                let left = TensorElement::pure(m.clone(), Scalar::one());
                let right = TensorElement::pure(m2.clone(), Scalar::one());
                let gm = self.h.tensor_mul(g, &right).expect("same arity");
                self.h.tensor_mul(&left, &gm).expect("same arity")
            })
            .filter(|p| !p.is_zero())
            .collect()
    }

    fn with_block<T>(&self, key: &BlockKey, f: impl FnOnce(&mut Block) -> Result<T>) -> Result<T> {
        let mut blocks = self.blocks.lock().unwrap();
        if !blocks.contains_key(key) {
            let clock = std::time::Instant::now();
            let mut rows: Vec<SparseRow> =
                self.products(&key.0, key.1).iter().map(|p| self.basis.row(p)).collect::<Result<_>>()?;
            rows.sort_by_key(|r| r.len());
            let mut m = ModEchelon::random(self.seed);
            let mut selected = vec![false; rows.len()];
            for (i, r) in rows.iter().enumerate() {
                selected[i] = m.insert(r)?;
            }
            if trace() {
                eprintln!("block {key:?}: {} rows, modular rank {} in {:?}", rows.len(), m.rank(), clock.elapsed());
            }
            blocks.insert(key.clone(), Block { rows, modular: Some(m), selected, ..Default::default() });
        }
        f(blocks.get_mut(key).unwrap())
    }

    fn parts(&self, x: &TensorElement) -> Vec<(Option<(i32, usize)>, TensorElement)> {
        if self.classes.is_some() {
            x.homogeneous_parts().into_iter().map(|(c, p)| (Some(c), p)).collect()
        } else {
            vec![(None, x.clone())]
        }
    }

    /// Exact echelon of the modular-independent rows of a block.
    fn selected_exact(block: &mut Block) -> &mut Echelon {
        if block.exact.is_none() {
            let clock = std::time::Instant::now();
            let chosen = block.rows.iter().zip(&block.selected).filter(|(_, k)| **k).map(|(r, _)| r.clone()).collect();
            let e = Echelon::from_rows(chosen);
            if trace() {
                eprintln!("  exact rank {} in {:?}", e.rank(), clock.elapsed());
            }
            block.exact = Some(e);
        }
        block.exact.as_mut().unwrap()
    }

    /// Exact bounded membership of `x`.
    pub fn contains(&self, x: &TensorElement) -> Result<MembershipReport> {
        if x.n() != self.ideal.n {
            return Err(Error::FactorMismatch { expected: self.ideal.n, got: x.n() });
        }
        let d = self.basis.max_degree;
        if x.degree() > d {
            return Err(Error::DegreeOverflow { what: "element", degree: x.degree(), bound: d });
        }
        let mut member = true;
        let mut rows = 0;
        let mut rank = 0;
        for (class, part) in self.parts(x) {
            let target = self.basis.row(&part)?;
            let start = part.slot_degrees();
            let mut inside = false;
            for k in 0..=d {
                let bounds: Vec<usize> = start.iter().map(|s| (s + k).min(d)).collect();
                let full = bounds.iter().all(|&b| b == d);
                let key = (bounds, class);
                let (hit, r, rk) = self.with_block(&key, |block| {
                    let probable = block.modular.as_ref().unwrap().contains(&target)?;
                    let mut hit = probable && Self::selected_exact(block).contains(&target);
                    if !hit && full {
                        // settle exactly: the modular pass may undercount
                        if !block.complete {
                            block.exact = Some(Echelon::from_rows(block.rows.clone()));
                            block.complete = true;
                        }
                        hit = block.exact.as_ref().unwrap().contains(&target);
                    }
                    let rk = block.exact.as_ref().map_or(block.modular.as_ref().unwrap().rank(), Echelon::rank);
                    Ok((hit, block.rows.len(), rk))
                })?;
                if hit || full {
                    inside = hit;
                    rows += r;
                    rank += rk;
                    break;
                }
            }
            member &= inside;
        }
        Ok(MembershipReport {
            decision: if member { Decision::MemberAtD } else { Decision::NotMemberAtD },
            max_degree: d,
            basis_dim: self.basis.len(),
            rows,
            rank,
        })
    }

    /// Representative of `x` modulo the full span (zero iff contained).
    pub fn reduce(&self, x: &TensorElement) -> Result<TensorElement> {
        let d = self.basis.max_degree;
        let mut out = TensorElement::zero(self.ideal.n);
        for (class, part) in self.parts(x) {
            let row = self.basis.row(&part)?;
            let key = (vec![d; self.ideal.n], class);
            let red = self.with_block(&key, |block| {
                if !block.complete {
                    block.exact = Some(Echelon::from_rows(block.rows.clone()));
                    block.complete = true;
                }
                Ok(block.exact.as_ref().unwrap().reduce(row))
            })?;
            out.add_scaled(&self.basis.element(&red), &Scalar::one());
        }
        Ok(out)
    }
}

/// Decides whether `x` lies in the span of `m·g·m'` with slotwise degree at
/// most `max_degree`.
pub fn membership(h: &BraidedHopf, x: &TensorElement, ideal: &IdealPresentation, max_degree: usize) -> Result<MembershipReport> {
    IdealSpan::new(h, ideal, max_degree)?.contains(x)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharvarReport {
    pub max_degree: usize,
    pub candidates: usize,
    pub invariants: Vec<TensorElement>,
}

impl Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = crate::tensor::TensorJson::deserialize(d)?;
        TensorElement::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Basis of `{x : Ad(x) - x ⊗ 1 ∈ I ⊗ A}` in the filtered piece, modulo the
/// ideal span.
pub fn charvar_probe(h: &BraidedHopf, ideal: &IdealPresentation, max_degree: usize) -> Result<CharvarReport> {
    let n = ideal.n;
    let span = IdealSpan::new(h, ideal, max_degree)?;
    let words = span.basis.keys.clone();
    // Ad(w) - w ⊗ 1 split by the last factor, each piece reduced mod I
    let images: Vec<BTreeMap<NormalWord, TensorElement>> = words
        .par_iter()
        .map(|k| {
            let w = TensorElement::pure(k.clone(), Scalar::one());
            let mut v = h.big_adjoint(&w);
            v.add_scaled(&w.otimes(&TensorElement::unit(1)), &Scalar::from_int(-1));
            let mut split: BTreeMap<NormalWord, TensorElement> = BTreeMap::new();
            for (key, c) in v.terms() {
                split.entry(key[n]).or_insert_with(|| TensorElement::zero(n)).add_term(key[..n].to_vec(), c);
            }
            split
        })
        .collect();
    let mut columns: BTreeMap<(NormalWord, usize), usize> = BTreeMap::new();
    let mut matrix: Vec<SparseRow> = Vec::with_capacity(words.len());
    for split in &images {
        let mut row = SparseRow::new();
        for (last, y) in split {
            let red = if ideal.nonzero().next().is_some() { span.reduce(y)? } else { y.clone() };
            for (key, c) in red.terms() {
                let idx = span.basis.index_of(key).ok_or(Error::DegreeOverflow { what: "adjoint image", degree: key.iter().map(NormalWord::degree).max().unwrap_or(0), bound: max_degree })?;
                let next = columns.len();
                let col = *columns.entry((*last, idx)).or_insert(next);
                row.insert(col, c.clone());
            }
        }
        matrix.push(row);
    }
    // left kernel: append an identity block beyond the pivot range
    let width = columns.len();
    let mut ech = Echelon::with_pivot_limit(width);
    let mut kernel: Vec<TensorElement> = Vec::new();
    for (i, row) in matrix.into_iter().enumerate() {
        let mut aug = row;
        aug.insert(width + i, Scalar::one());
        if let Some(r) = ech.insert(aug) {
            if r.keys().all(|&c| c >= width) {
                let mut x = TensorElement::zero(n);
                for (c, v) in &r {
                    x.add_term(words[c - width].clone(), v);
                }
                kernel.push(x);
            }
        }
    }
    let candidates = kernel.len();
    // quotient by the ideal span, keeping a canonical representative per
    // independent class
    let mut quotient = Echelon::new();
    let mut invariants = Vec::new();
    for x in kernel {
        let x = if ideal.nonzero().next().is_some() { span.reduce(&x)? } else { x };
        if let Some(r) = quotient.insert(span.basis.row(&x)?) {
            let _ = r;
            invariants.push(x);
        }
    }
    Ok(CharvarReport { max_degree, candidates, invariants })
}

/// Coefficientwise `t = 1`.
pub fn specialize_ideal(ideal: &IdealPresentation) -> Result<IdealPresentation> {
    ideal.specialize(&Rational::from_integer(1.into()))
}

pub type Matrix2 = [[Complex64; 2]; 2];

/// `n` matrices in SL(2, C).
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixTuple {
    pub mats: Vec<Matrix2>,
}

pub const DET_TOL: f64 = 1e-9;

impl MatrixTuple {
    pub fn new(mats: Vec<Matrix2>) -> Result<Self> {
        for (i, m) in mats.iter().enumerate() {
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            if (det - Complex64::new(1.0, 0.0)).norm() > DET_TOL {
                return Err(Error::Invalid(format!("matrix {i} has determinant {det}, not 1")));
            }
        }
        Ok(MatrixTuple { mats })
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    /// `[[[re, im], [re, im]], [[re, im], [re, im]]]` per matrix.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<[[[f64; 2]; 2]; 2]> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        MatrixTuple::new(
            raw.iter().map(|m| m.map(|row| row.map(|[re, im]| Complex64::new(re, im)))).collect(),
        )
    }

    pub fn to_json(&self) -> String {
        let raw: Vec<[[[f64; 2]; 2]; 2]> = self.mats.iter().map(|m| m.map(|row| row.map(|z| [z.re, z.im]))).collect();
        serde_json::to_string(&raw).unwrap()
    }
}

pub fn mat_mul(x: &Matrix2, y: &Matrix2) -> Matrix2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

/// Inverse of a determinant-one matrix.
pub fn mat_inv(x: &Matrix2) -> Matrix2 {
    [[x[1][1], -x[0][1]], [-x[1][0], x[0][0]]]
}

fn word_value(w: &NormalWord, m: &Matrix2) -> Complex64 {
    m[0][0].powu(w.a as u32) * m[0][1].powu(w.b as u32) * m[1][0].powu(w.c as u32) * m[1][1].powu(w.d as u32)
}

/// Evaluates a t = 1 tensor: factor `p` reads `a, b, c, d` as the entries of
/// `M_p`.
pub fn numeric_eval(x: &TensorElement, m: &MatrixTuple) -> Result<Complex64> {
    if x.n() != m.len() {
        return Err(Error::FactorMismatch { expected: x.n(), got: m.len() });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (key, c) in x.terms() {
        let c = c.as_rational().ok_or_else(|| Error::Invalid("coefficient depends on t; specialize first".into()))?;
        let mut term = Complex64::new(rational_to_f64(&c), 0.0);
        for (w, mat) in key.iter().zip(&m.mats) {
            term *= word_value(w, mat);
        }
        acc += term;
    }
    Ok(acc)
}

fn rational_to_f64(c: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepCheckReport {
    pub pass: bool,
    pub tol: f64,
    pub max_abs: f64,
    pub values: Vec<f64>,
}

/// Evaluates the t = 1 ideal generators on `M`.
pub fn rep_check_ideal(ideal: &IdealPresentation, m: &MatrixTuple, tol: f64) -> Result<RepCheckReport> {
    let values: Vec<f64> = ideal.generators.iter().map(|g| numeric_eval(g, m).map(|z| z.norm())).collect::<Result<_>>()?;
    let max_abs = values.iter().cloned().fold(0.0, f64::max);
    Ok(RepCheckReport { pass: max_abs < tol, tol, max_abs, values })
}

/// Pass iff every specialized generator of `I_{d(b)}` vanishes on `M`.
pub fn rep_check(h: &BraidedHopf, b: &BraidWord, m: &MatrixTuple, tol: f64) -> Result<RepCheckReport> {
    if m.len() != b.strands() {
        return Err(Error::StrandMismatch { braid: b.strands(), input: m.len() });
    }
    let ideal = specialize_ideal(&ideal_generators(h, b))?;
    rep_check_ideal(&ideal, m, tol)
}

/// The classical Wirtinger action on matrices:
/// `σ_i: (X_i, X_{i+1}) ↦ (X_{i+1}, X_{i+1}^{-1} X_i X_{i+1})`, with the
/// last letter of the word applied first.
pub fn wirtinger_action(b: &BraidWord, m: &MatrixTuple) -> Vec<Matrix2> {
    let mut xs = m.mats.clone();
    for &l in b.letters().iter().rev() {
        let i = l.unsigned_abs() as usize - 1;
        let (x, y) = (xs[i], xs[i + 1]);
        if l > 0 {
            xs[i] = y;
            xs[i + 1] = mat_mul(&mat_mul(&mat_inv(&y), &x), &y);
        } else {
            xs[i] = mat_mul(&mat_mul(&x, &y), &mat_inv(&x));
            xs[i + 1] = x;
        }
    }
    xs
}

/// Distance of `M` from being a fixed point of the Wirtinger action.
pub fn wirtinger_defect(b: &BraidWord, m: &MatrixTuple) -> f64 {
    let img = wirtinger_action(b, m);
    img.iter()
        .zip(&m.mats)
        .map(|(x, y)| (0..2).flat_map(|i| (0..2).map(move |j| (x[i][j] - y[i][j]).norm())).fold(0.0, f64::max))
        .fold(0.0, f64::max)
}

/// Distinct homogeneous classes touched by a tensor.
pub fn classes_of(x: &TensorElement) -> BTreeSet<(i32, usize)> {
    x.homogeneous_parts().keys().copied().collect()
}
