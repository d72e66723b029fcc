//! Generators of the ideal attached to a braid closure.
//!
//! `cargo run --example link_ideals -- "1 1 1"`

use braided_sl2::braidrep::{hopf_ideal, ideal_generators, trefoil_ideal, BraidWord};
use braided_sl2::verify::specialize_ideal;
use braided_sl2::BraidedHopf;

fn main() {
    let word = std::env::args().nth(1).unwrap_or_else(|| "1 1".into());
    let h = BraidedHopf::bsl2();
    let b = BraidWord::parse(&word, None).unwrap();
    let ideal = ideal_generators(&h, &b);
    println!("closure of [{word}] on {} strands", b.strands());
    print!("{ideal}");
    println!("at t = 1:");
    print!("{}", specialize_ideal(&ideal).unwrap());
    println!("closed-form Hopf link generators:");
    print!("{}", hopf_ideal(&h));
    println!("closed-form trefoil generators:");
    print!("{}", trefoil_ideal(&h));
}
