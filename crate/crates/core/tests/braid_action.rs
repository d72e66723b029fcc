mod common;

use braided_sl2::braidrep::{crossing_neg, crossing_pos, rho, BraidWord};
use braided_sl2::ncring::NormalWord;
use braided_sl2::scalar::Rational;
use braided_sl2::{BraidedHopf, Scalar, TensorElement};
use common::Sl2;
use rand::Rng;

fn pair(u: NormalWord, v: NormalWord) -> TensorElement {
    TensorElement::pure(vec![u, v], Scalar::one())
}

fn basis2() -> Vec<NormalWord> {
    NormalWord::up_to_degree(2)
}

#[test]
fn crossing_is_invertible_on_degree_two_pairs() {
    let h = BraidedHopf::bsl2();
    for &u in &basis2() {
        for &v in &basis2() {
            let x = pair(u, v);
            let y = crossing_pos(&h, &x).unwrap();
            assert_eq!(crossing_neg(&h, &y).unwrap(), x, "R⁻¹R on {u} ⊗ {v}");
            let z = crossing_neg(&h, &x).unwrap();
            assert_eq!(crossing_pos(&h, &z).unwrap(), x, "RR⁻¹ on {u} ⊗ {v}");
        }
    }
}

#[test]
fn braid_relation_on_generator_triples() {
    let h = BraidedHopf::bsl2();
    let gens = NormalWord::up_to_degree(1);
    let w1 = BraidWord::parse("1 2 1", None).unwrap();
    let w2 = BraidWord::parse("2 1 2", None).unwrap();
    let w3 = BraidWord::parse("-1 -2 -1", None).unwrap();
    let w4 = BraidWord::parse("-2 -1 -2", None).unwrap();
    for &x in &gens {
        for &y in &gens {
            for &z in &gens {
                let u = TensorElement::pure(vec![x, y, z], Scalar::one());
                assert_eq!(rho(&h, &w1, &u).unwrap(), rho(&h, &w2, &u).unwrap(), "{x} ⊗ {y} ⊗ {z}");
                assert_eq!(rho(&h, &w3, &u).unwrap(), rho(&h, &w4, &u).unwrap(), "{x} ⊗ {y} ⊗ {z}");
            }
        }
    }
}

#[test]
fn sigma_times_inverse_on_random_inputs() {
    let h = BraidedHopf::bsl2();
    let basis = basis2();
    let b = BraidWord::parse("1 -1", None).unwrap();
    let b_rev = BraidWord::parse("-1 1", None).unwrap();
    let mut r = common::rng(3);
    for _ in 0..50 {
        let mut x = TensorElement::zero(2);
        for _ in 0..r.gen_range(1..5) {
            let (u, v) = (basis[r.gen_range(0..basis.len())], basis[r.gen_range(0..basis.len())]);
            let c = Scalar::laurent([(r.gen_range(-2..3), Rational::from_integer(r.gen_range(-5..6).into()))]);
            x.add_scaled(&pair(u, v), &c);
        }
        assert_eq!(rho(&h, &b, &x).unwrap(), x);
        assert_eq!(rho(&h, &b_rev, &x).unwrap(), x);
    }
}

#[test]
fn classical_structure_maps_are_standard() {
    let h = BraidedHopf::classical();
    let o = Sl2::new();
    for &u in &basis2() {
        assert_eq!(h.coproduct_word(&u), o.coproduct(&u), "Δ({u})");
        assert_eq!(TensorElement::single(h.antipode_word(&u)), o.antipode(&u), "S({u})");
        assert_eq!(TensorElement::single(h.antipode_inv_word(&u)), o.antipode(&u), "S⁻¹({u})");
        assert_eq!(h.counit_word(&u), o.counit(&u), "ε({u})");
        for &v in &basis2() {
            assert_eq!(h.ring.mul_words(&u, &v), h.ring.mul_words(&v, &u));
            assert_eq!(h.psi_words(&u, &v, false), pair(v, u), "Ψ({u} ⊗ {v})");
            assert_eq!(h.psi_words(&u, &v, true), pair(v, u), "Ψ⁻¹({u} ⊗ {v})");
        }
    }
}

#[test]
fn classical_limit_matches_conjugation_maps() {
    let h = BraidedHopf::classical();
    let q = BraidedHopf::bsl2();
    let o = Sl2::new();
    let one = Rational::from_integer(1.into());
    let (pos, neg) = (BraidWord::parse("1", None).unwrap(), BraidWord::parse("-1", None).unwrap());
    for &u in &basis2() {
        for &v in &basis2() {
            let x = pair(u, v);
            let r = rho(&h, &pos, &x).unwrap();
            let ri = rho(&h, &neg, &x).unwrap();
            assert_eq!(r, o.sigma(u, v), "σ on {u} ⊗ {v}");
            assert_eq!(ri, o.sigma_inv(u, v), "σ⁻¹ on {u} ⊗ {v}");
            assert_eq!(rho(&q, &pos, &x).unwrap().specialize(&one).unwrap(), r);
            assert_eq!(rho(&q, &neg, &x).unwrap().specialize(&one).unwrap(), ri);
        }
    }
}

#[test]
fn classical_limit_on_second_strand() {
    let h = BraidedHopf::classical();
    let o = Sl2::new();
    let (pos, neg) = (BraidWord::parse("2", Some(3)).unwrap(), BraidWord::parse("-2", Some(3)).unwrap());
    for &w in &NormalWord::up_to_degree(1) {
        for &u in &basis2() {
            for &v in &basis2() {
                let x = TensorElement::pure(vec![w, u, v], Scalar::one());
                let head = o.slot(w);
                assert_eq!(rho(&h, &pos, &x).unwrap(), head.otimes(&o.sigma(u, v)));
                assert_eq!(rho(&h, &neg, &x).unwrap(), head.otimes(&o.sigma_inv(u, v)));
            }
        }
    }
}

/// `R⁻¹ = (μ⊗id)(id⊗Ψ^±)(λ^±⊗id)` with λ using `Ψ^±` inside.
fn inverse_wiring(h: &BraidedHopf, x: &TensorElement, inner_inv: bool, outer_inv: bool) -> TensorElement {
    let lambda = |w: &NormalWord| {
        let e = h.coproduct_slot(&h.coproduct_word(w), 0);
        let e = h.antipode_slot(&e, 2);
        h.mul_slots(&h.braid_slots(&e, 1, inner_inv), 0)
    };
    let e = x.map_slots(0, 1, 2, |w| lambda(&w[0]));
    h.mul_slots(&h.braid_slots(&e, 1, outer_inv), 0)
}

#[test]
fn only_the_psi_wiring_inverts_the_crossing() {
    let h = BraidedHopf::bsl2();
    let gens = NormalWord::up_to_degree(1);
    for (inner, outer) in [(false, false), (true, false), (false, true), (true, true)] {
        let mut ok = true;
        for &u in &gens {
            for &v in &gens {
                let x = pair(u, v);
                let y = crossing_pos(&h, &x).unwrap();
                ok &= inverse_wiring(&h, &y, inner, outer) == x;
            }
        }
        assert_eq!(ok, !inner && !outer, "inner Ψ⁻¹ {inner}, outer Ψ⁻¹ {outer}");
    }
}

#[test]
fn inverse_crossing_matches_adjoint_form() {
    // R⁻¹(x ⊗ y) = Ψ(x₀ ⊗ S(x₁) y) with ad(x) = x₀ ⊗ x₁
    let h = BraidedHopf::bsl2();
    for &u in &basis2() {
        for &v in &basis2() {
            let x = pair(u, v);
            let e = h.antipode_slot(&h.adjoint_slot(&x, 0), 1);
            let alt = h.braid_slots(&h.mul_slots(&e, 1), 0, false);
            assert_eq!(crossing_neg(&h, &x).unwrap(), alt, "{u} ⊗ {v}");
        }
    }
}
