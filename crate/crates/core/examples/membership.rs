//! Bounded-degree membership: the closed-form Hopf link generators lie in
//! the ideal generated by `ρ(σ1²)x - x`.
//!
//! `cargo run --release --example membership -- 4`

use braided_sl2::braidrep::{hopf_ideal, ideal_generators, BraidWord};
use braided_sl2::parse::parse_tensor;
use braided_sl2::verify::IdealSpan;
use braided_sl2::BraidedHopf;

fn main() {
    let d: usize = std::env::args().nth(1).map(|s| s.parse().expect("degree")).unwrap_or(3);
    let h = BraidedHopf::bsl2();
    let ideal = ideal_generators(&h, &BraidWord::parse("1 1", None).unwrap());
    let span = IdealSpan::new(&h, &ideal, d).unwrap();
    println!("filtered piece of dimension {} at D = {d}", span.basis.len());
    let mut candidates: Vec<_> = hopf_ideal(&h).nonzero().cloned().collect();
    candidates.push(parse_tensor("1 ⊗ 1", &h.ring).unwrap());
    candidates.push(parse_tensor("a ⊗ 1 - 1 ⊗ a", &h.ring).unwrap());
    for x in &candidates {
        let r = span.contains(x).unwrap();
        println!("{:<12} rank {:>4} of {:>5} products  {x}", if r.is_member() { "member" } else { "not member" }, r.rank, r.rows);
    }
}
