#![allow(dead_code)]

use braided_sl2::ncring::{Letter, NormalWord};
use braided_sl2::parse::{parse_element, parse_tensor};
use braided_sl2::{AlgebraElement, RewriteSystem, Scalar, TensorElement};
use braided_sl2::verify::{mat_inv, mat_mul, Matrix2, MatrixTuple};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Complex number with modulus in [0.5, 2].
pub fn moderate(r: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(r.gen_range(0.5..2.0), r.gen_range(0.0..std::f64::consts::TAU))
}

/// Unipotent-product `[[1, p], [0, 1]] [[1, 0], [q, 1]]` with small entries.
pub fn random_sl2(r: &mut ChaCha8Rng) -> Matrix2 {
    let p = c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0));
    let q = c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0));
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let diag = moderate(r);
    let d = [[diag, zero], [zero, one / diag]];
    mat_mul(&mat_mul(&[[one, p], [zero, one]], &d), &[[one, zero], [q, one]])
}

/// Two matrices diagonal in a common random basis.
pub fn commuting_pair(r: &mut ChaCha8Rng) -> MatrixTuple {
    let p = random_sl2(r);
    let zero = c(0.0, 0.0);
    let (l, m) = (moderate(r), moderate(r));
    let conj = |x: Complex64| mat_mul(&mat_mul(&p, &[[x, zero], [zero, x.inv()]]), &mat_inv(&p));
    MatrixTuple::new(vec![conj(l), conj(m)]).unwrap()
}

pub fn generic_pair(r: &mut ChaCha8Rng) -> MatrixTuple {
    MatrixTuple::new(vec![random_sl2(r), random_sl2(r)]).unwrap()
}

pub fn abelian_pair(r: &mut ChaCha8Rng) -> MatrixTuple {
    let x = random_sl2(r);
    MatrixTuple::new(vec![x, x]).unwrap()
}

/// Parabolic representation of the trefoil group. With
/// `X = [[1, 1], [0, 1]]` and `Y = [[1, 0], [y, 1]]` one gets
/// `XYX = [[1+y, 2+y], [y, 1+y]]` and `YXY = [[1+y, 1], [2y+y², 1+y]]`;
/// the (1,2) entries force `y = -1`, which also matches the (2,1) entries.
pub const TREFOIL_Y: f64 = -1.0;

pub fn parabolic_trefoil() -> MatrixTuple {
    let (one, zero) = (c(1.0, 0.0), c(0.0, 0.0));
    MatrixTuple::new(vec![[[one, one], [zero, one]], [[one, zero], [c(TREFOIL_Y, 0.0), one]]]).unwrap()
}

pub fn max_entry_diff(x: &Matrix2, y: &Matrix2) -> f64 {
    (0..2).flat_map(|i| (0..2).map(move |j| (x[i][j] - y[i][j]).norm())).fold(0.0, f64::max)
}

/// Hand-written commutative Hopf algebra of SL(2), used as an oracle.
pub struct Sl2 {
    ring: RewriteSystem,
    delta: Vec<TensorElement>,
    s: Vec<AlgebraElement>,
}

impl Sl2 {
    pub fn new() -> Self {
        let ring = RewriteSystem::classical();
        let delta = ["a ⊗ a + b ⊗ c", "a ⊗ b + b ⊗ d", "c ⊗ a + d ⊗ c", "c ⊗ b + d ⊗ d"]
            .iter()
            .map(|s| parse_tensor(s, &ring).unwrap())
            .collect();
        let s = ["d", "-b", "-c", "a"].iter().map(|s| parse_element(s, &ring).unwrap()).collect();
        Sl2 { ring, delta, s }
    }

    /// Slotwise product; no braiding since the algebra is commutative.
    pub fn mul(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(x.n());
        for (p, cp) in x.terms() {
            for (q, cq) in y.terms() {
                let factors: Vec<AlgebraElement> =
                    p.iter().zip(q).map(|(u, v)| self.ring.mul_words(u, v)).collect();
                out.add_scaled(&TensorElement::from_factors(&factors), &(cp * cq));
            }
        }
        out
    }

    pub fn fold<F: Fn(Letter) -> TensorElement>(&self, w: &NormalWord, n: usize, f: F) -> TensorElement {
        w.letters().into_iter().fold(TensorElement::unit(n), |acc, l| self.mul(&acc, &f(l)))
    }

    pub fn coproduct(&self, w: &NormalWord) -> TensorElement {
        self.fold(w, 2, |l| self.delta[l as usize].clone())
    }

    pub fn coproduct2(&self, w: &NormalWord) -> TensorElement {
        let mut out = TensorElement::zero(3);
        for (k, c) in self.coproduct(w).terms() {
            out.add_scaled(&self.coproduct(&k[0]).otimes(&TensorElement::pure(vec![k[1]], Scalar::one())), c);
        }
        out
    }

    pub fn antipode(&self, w: &NormalWord) -> TensorElement {
        self.fold(w, 1, |l| TensorElement::single(self.s[l as usize].clone()))
    }

    pub fn counit(&self, w: &NormalWord) -> Scalar {
        w.letters().iter().fold(Scalar::one(), |acc, &l| {
            if matches!(l, Letter::A | Letter::D) { acc } else { Scalar::zero() }
        })
    }

    pub fn slot(&self, w: NormalWord) -> TensorElement {
        TensorElement::pure(vec![w], Scalar::one())
    }

    /// `α ⊗ β ↦ β₂ ⊗ α S(β₁) β₃`.
    pub fn sigma(&self, x: NormalWord, y: NormalWord) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (k, c) in self.coproduct2(&y).terms() {
            let right = self.mul(&self.mul(&self.slot(x), &self.antipode(&k[0])), &self.slot(k[2]));
            out.add_scaled(&self.slot(k[1]).otimes(&right), c);
        }
        out
    }

    /// `α ⊗ β ↦ α₁ S(α₃) β ⊗ α₂`.
    pub fn sigma_inv(&self, x: NormalWord, y: NormalWord) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (k, c) in self.coproduct2(&x).terms() {
            let left = self.mul(&self.mul(&self.slot(k[0]), &self.antipode(&k[2])), &self.slot(y));
            out.add_scaled(&left.otimes(&self.slot(k[1])), c);
        }
        out
    }
}

