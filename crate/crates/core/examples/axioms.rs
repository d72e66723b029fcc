//! Runs the axiom suite. Pass a degree bound and optionally `classical`.
//!
//! `cargo run --release --example axioms -- 1 classical`

use braided_sl2::axioms::axioms_check;
use braided_sl2::{BraidedHopf, Instance};

fn main() {
    let mut args = std::env::args().skip(1);
    let degree = args.next().map(|s| s.parse().expect("degree")).unwrap_or(1);
    let instance: Instance = args.next().map(|s| s.parse().expect("instance")).unwrap_or(Instance::Bsl2);
    let report = axioms_check(&BraidedHopf::of(instance), degree);
    print!("{report}");
    let broken = axioms_check(&BraidedHopf::corrupted(), 1);
    println!("corrupted braiding fails {} identities", broken.failed().count());
}
