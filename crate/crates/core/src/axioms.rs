//! Exhaustive check of the braided Hopf axioms and the adjoint identities on
//! basis monomials of bounded degree.

use rayon::prelude::*;
use serde::Serialize;

use crate::bhopf::{BraidedHopf, Instance};
use crate::ncring::NormalWord;
use crate::scalar::Scalar;
use crate::tensor::TensorElement;

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing input with its difference, when any.
    pub example: Option<String>,
}

impl AxiomResult {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub instance: String,
    pub max_degree: usize,
    pub results: Vec<AxiomResult>,
    /// `S²` on the generators, for information.
    pub antipode_squared: Vec<(String, String)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(AxiomResult::pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.pass())
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "instance {} max-degree {}", self.instance, self.max_degree)?;
        for r in &self.results {
            let status = if r.pass() { "ok  " } else { "FAIL" };
            writeln!(f, "{status} {:<36} {:>6} cases {:>4} failures", r.name, r.cases, r.failures)?;
            if let Some(e) = &r.example {
                writeln!(f, "     first failure: {e}")?;
            }
        }
        for (g, v) in &self.antipode_squared {
            writeln!(f, "S^2({g}) = {v}")?;
        }
        Ok(())
    }
}

fn pure(words: &[NormalWord]) -> TensorElement {
    TensorElement::pure(words.to_vec(), Scalar::one())
}

fn check<I, F>(name: &'static str, inputs: &[I], f: F) -> AxiomResult
where
    I: Sync + std::fmt::Debug,
    F: Fn(&I) -> (TensorElement, TensorElement) + Sync,
{
    let bad: Vec<String> = inputs
        .par_iter()
        .filter_map(|x| {
            let (lhs, rhs) = f(x);
            let mut diff = lhs;
            diff.add_scaled(&rhs, &Scalar::from_int(-1));
            (!diff.is_zero()).then(|| format!("{x:?}: {diff}"))
        })
        .collect();
    AxiomResult { name, cases: inputs.len(), failures: bad.len(), example: bad.into_iter().next() }
}

impl BraidedHopf {
    fn antipode_inv_slot(&self, u: &TensorElement, i: usize) -> TensorElement {
        u.map_slots(i, 1, 1, |w| TensorElement::single(self.antipode_inv_word(&w[0])))
    }

    /// `Ad` on `A ⊗ A`.
    fn ad2(&self, u: &TensorElement) -> TensorElement {
        self.big_adjoint(u)
    }
}

/// Runs every identity on all monomials (pairs, triples) with each factor of
/// degree at most `max_degree`.
pub fn axioms_check(h: &BraidedHopf, max_degree: usize) -> AxiomReport {
    let basis = NormalWord::up_to_degree(max_degree);
    let singles: Vec<[NormalWord; 1]> = basis.iter().map(|w| [*w]).collect();
    let pairs: Vec<[NormalWord; 2]> = basis.iter().flat_map(|x| basis.iter().map(move |y| [*x, *y])).collect();
    let triples: Vec<[NormalWord; 3]> =
        pairs.iter().flat_map(|p| basis.iter().map(move |z| [p[0], p[1], *z])).collect();
    let e = |w: &[NormalWord]| pure(w);
    let mut r = Vec::new();

    r.push(check("associativity", &triples, |k| {
        let u = e(k);
        (h.mul_slots(&h.mul_slots(&u, 0), 0), h.mul_slots(&h.mul_slots(&u, 1), 0))
    }));
    r.push(check("unit", &singles, |k| {
        let x = e(k);
        let left = h.mul_slots(&TensorElement::unit(1).otimes(&x), 0);
        let right = h.mul_slots(&x.otimes(&TensorElement::unit(1)), 0);
        (left.otimes(&right), x.otimes(&x))
    }));
    r.push(check("coassociativity", &singles, |k| {
        let d = h.coproduct_slot(&e(k), 0);
        (h.coproduct_slot(&d, 0), h.coproduct_slot(&d, 1))
    }));
    r.push(check("counit", &singles, |k| {
        let x = e(k);
        let d = h.coproduct_slot(&x, 0);
        (h.counit_slot(&d, 0).otimes(&h.counit_slot(&d, 1)), x.otimes(&x))
    }));
    r.push(check("coproduct multiplicative", &pairs, |k| {
        let u = e(k);
        let lhs = h.coproduct_slot(&h.mul_slots(&u, 0), 0);
        let dx = h.coproduct_slot(&e(&k[..1]), 0);
        let dy = h.coproduct_slot(&e(&k[1..]), 0);
        (lhs, h.tensor_mul(&dx, &dy).unwrap())
    }));
    r.push(check("counit multiplicative", &pairs, |k| {
        let u = e(k);
        (h.counit_slot(&h.mul_slots(&u, 0), 0), h.counit_slot(&h.counit_slot(&u, 0), 0))
    }));
    r.push(check("antipode", &singles, |k| {
        let x = e(k);
        let d = h.coproduct_slot(&x, 0);
        let left = h.mul_slots(&h.antipode_slot(&d, 0), 0);
        let right = h.mul_slots(&h.antipode_slot(&d, 1), 0);
        let eps = h.counit_slot(&x, 0).otimes(&TensorElement::unit(1));
        (left.otimes(&right), eps.otimes(&eps))
    }));
    r.push(check("antipode inverse", &singles, |k| {
        let x = e(k);
        let a = h.antipode_inv_slot(&h.antipode_slot(&x, 0), 0);
        let b = h.antipode_slot(&h.antipode_inv_slot(&x, 0), 0);
        (a.otimes(&b), x.otimes(&x))
    }));
    r.push(check("braiding inverse", &pairs, |k| {
        let u = e(k);
        let a = h.braid_slots(&h.braid_slots(&u, 0, false), 0, true);
        let b = h.braid_slots(&h.braid_slots(&u, 0, true), 0, false);
        (a.otimes(&b), u.otimes(&u))
    }));
    r.push(check("braiding with unit", &singles, |k| {
        let x = e(k);
        let one = TensorElement::unit(1);
        let a = h.braid_slots(&x.otimes(&one), 0, false);
        let b = h.braid_slots(&one.otimes(&x), 0, false);
        (a.otimes(&b), one.otimes(&x).otimes(&x).otimes(&one))
    }));
    r.push(check("braid relation", &triples, |k| {
        let u = e(k);
        let l = h.braid_slots(&h.braid_slots(&h.braid_slots(&u, 0, false), 1, false), 0, false);
        let r = h.braid_slots(&h.braid_slots(&h.braid_slots(&u, 1, false), 0, false), 1, false);
        (l, r)
    }));
    r.push(check("braiding natural in product (left)", &triples, |k| {
        // Ψ(xy ⊗ z) = (id ⊗ μ)(Ψ ⊗ id)(id ⊗ Ψ)(x ⊗ y ⊗ z)
        let u = e(k);
        let lhs = h.braid_slots(&h.mul_slots(&u, 0), 0, false);
        let rhs = h.mul_slots(&h.braid_slots(&h.braid_slots(&u, 1, false), 0, false), 1);
        (lhs, rhs)
    }));
    r.push(check("braiding natural in product (right)", &triples, |k| {
        // Ψ(x ⊗ yz) = (μ ⊗ id)(id ⊗ Ψ)(Ψ ⊗ id)(x ⊗ y ⊗ z)
        let u = e(k);
        let lhs = h.braid_slots(&h.mul_slots(&u, 1), 0, false);
        let rhs = h.mul_slots(&h.braid_slots(&h.braid_slots(&u, 0, false), 1, false), 0);
        (lhs, rhs)
    }));
    r.push(check("braiding natural in coproduct", &pairs, |k| {
        let u = e(k);
        let left = h.coproduct_slot(&h.braid_slots(&u, 0, false), 0);
        let left_rhs = h.braid_slots(&h.braid_slots(&h.coproduct_slot(&u, 1), 0, false), 1, false);
        let right = h.coproduct_slot(&h.braid_slots(&u, 0, false), 1);
        let right_rhs = h.braid_slots(&h.braid_slots(&h.coproduct_slot(&u, 0), 1, false), 0, false);
        (left.otimes(&right), left_rhs.otimes(&right_rhs))
    }));
    r.push(check("braiding natural in antipode", &pairs, |k| {
        let u = e(k);
        let a = h.braid_slots(&h.antipode_slot(&u, 0), 0, false);
        let b = h.antipode_slot(&h.braid_slots(&u, 0, false), 1);
        let c = h.braid_slots(&h.antipode_slot(&u, 1), 0, false);
        let d = h.antipode_slot(&h.braid_slots(&u, 0, false), 0);
        (a.otimes(&c), b.otimes(&d))
    }));
    r.push(check("braiding natural in counit", &pairs, |k| {
        let u = e(k);
        let p = h.braid_slots(&u, 0, false);
        (h.counit_slot(&p, 0).otimes(&h.counit_slot(&p, 1)), h.counit_slot(&u, 1).otimes(&h.counit_slot(&u, 0)))
    }));
    r.push(check("antipode anti-multiplicative", &pairs, |k| {
        let u = e(k);
        let lhs = h.antipode_slot(&h.mul_slots(&u, 0), 0);
        let rhs = h.mul_slots(&h.braid_slots(&h.antipode_slot(&h.antipode_slot(&u, 0), 1), 0, false), 0);
        (lhs, rhs)
    }));
    r.push(check("antipode anti-comultiplicative", &singles, |k| {
        let x = e(k);
        let lhs = h.coproduct_slot(&h.antipode_slot(&x, 0), 0);
        let d = h.coproduct_slot(&x, 0);
        (lhs, h.braid_slots(&h.antipode_slot(&h.antipode_slot(&d, 0), 1), 0, false))
    }));
    r.push(check("adcomult", &singles, |k| {
        let x = e(k);
        let d = h.coproduct_slot(&x, 0);
        let lhs = h.mul_slots(&h.braid_slots(&h.adjoint_slot(&h.adjoint_slot(&d, 1), 0), 1, false), 2);
        (lhs, h.coproduct_slot(&h.adjoint_slot(&x, 0), 0))
    }));
    r.push(check("addelta", &singles, |k| {
        let a = h.adjoint_slot(&e(k), 0);
        (h.adjoint_slot(&a, 0), h.coproduct_slot(&a, 1))
    }));
    r.push(check("adepsilon", &singles, |k| {
        let x = e(k);
        let a = h.adjoint_slot(&x, 0);
        let left = h.counit_slot(&a, 0);
        let eps = h.counit_slot(&x, 0).otimes(&TensorElement::unit(1));
        (left.otimes(&h.counit_slot(&a, 1)), eps.otimes(&x))
    }));
    r.push(check("braided commutativity", &pairs, |k| {
        let u = e(k);
        let lhs = h.mul_slots(&h.braid_slots(&h.adjoint_slot(&h.braid_slots(&u, 0, false), 1), 0, false), 1);
        (lhs, h.mul_slots(&h.adjoint_slot(&u, 0), 1))
    }));
    r.push(check("admult", &pairs, |k| {
        let u = e(k);
        let lhs = h.adjoint_slot(&h.mul_slots(&u, 0), 0);
        let both = h.braid_slots(&h.adjoint_slot(&h.adjoint_slot(&u, 1), 0), 1, false);
        (lhs, h.mul_slots(&h.mul_slots(&both, 2), 0))
    }));
    r.push(check("ad commutes with braiding", &pairs, |k| {
        let u = e(k);
        let lhs = h.ad2(&h.braid_slots(&u, 0, false));
        (lhs, h.braid_slots(&h.ad2(&u), 0, false))
    }));
    r.push(check("ad commutes with antipode", &singles, |k| {
        let x = e(k);
        (h.adjoint_slot(&h.antipode_slot(&x, 0), 0), h.antipode_slot(&h.adjoint_slot(&x, 0), 0))
    }));

    let antipode_squared = NormalWord::of_degree(1)
        .iter()
        .map(|w| (w.to_string(), h.antipode(&h.antipode(&crate::ncring::AlgebraElement::word(*w))).to_string()))
        .collect();
    AxiomReport {
        instance: match h.instance() {
            Instance::Bsl2 => "bsl2".into(),
            Instance::Classical => "classical".into(),
        },
        max_degree,
        results: r,
        antipode_squared,
    }
}
