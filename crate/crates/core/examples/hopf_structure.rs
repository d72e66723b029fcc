//! Coproduct, antipode, counit, braiding and adjoint coaction on small words.

use braided_sl2::ncring::NormalWord;
use braided_sl2::{BraidedHopf, TensorElement};

fn main() {
    let h = BraidedHopf::bsl2();
    for w in NormalWord::up_to_degree(1).into_iter().skip(1) {
        println!("Δ({w}) = {}", h.coproduct_word(&w));
        println!("S({w}) = {}", h.antipode_word(&w));
        println!("S⁻¹({w}) = {}", h.antipode_inv_word(&w));
        println!("ε({w}) = {}", h.counit_word(&w));
        println!("ad({w}) = {}", h.adjoint_word(&w));
    }
    let gens = NormalWord::up_to_degree(1);
    for &u in &gens[1..] {
        for &v in &gens[1..] {
            println!("Ψ({u} ⊗ {v}) = {}", h.psi_words(&u, &v, false));
        }
    }
    let x = TensorElement::pure(vec![gens[1], gens[2]], 1.into());
    println!("Ad({x}) = {}", h.big_adjoint(&x));
}
