//! The braid group action on `A^⊗n` and its classical limit.

use braided_sl2::braidrep::{rho, BraidWord};
use braided_sl2::parse::parse_tensor;
use braided_sl2::scalar::Rational;
use braided_sl2::BraidedHopf;

fn main() {
    let h = BraidedHopf::bsl2();
    let x = parse_tensor("a ⊗ b", &h.ring).unwrap();
    for w in ["1", "-1", "1 -1"] {
        let b = BraidWord::parse(w, Some(2)).unwrap();
        println!("ρ({w})(a ⊗ b) = {}", rho(&h, &b, &x).unwrap());
    }

    let y = parse_tensor("a ⊗ b ⊗ c", &h.ring).unwrap();
    let left = rho(&h, &BraidWord::parse("1 2 1", None).unwrap(), &y).unwrap();
    let right = rho(&h, &BraidWord::parse("2 1 2", None).unwrap(), &y).unwrap();
    println!("σ1σ2σ1 = σ2σ1σ2 on a ⊗ b ⊗ c: {}", left == right);

    let one = Rational::from_integer(1.into());
    let c = BraidedHopf::classical();
    let b = BraidWord::parse("1", None).unwrap();
    let at_one = rho(&h, &b, &x).unwrap().specialize(&one).unwrap();
    println!("classical ρ(σ1)(a ⊗ b) = {}", rho(&c, &b, &x).unwrap());
    println!("agrees with t = 1: {}", at_one == rho(&c, &b, &x).unwrap());
}
