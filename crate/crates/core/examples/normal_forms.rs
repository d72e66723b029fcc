//! Normal forms in braided SL(2) and the classical ring.
//!
//! `cargo run --example normal_forms -- "a d" "b a" "d c b a"`

use braided_sl2::parse::parse_tensor;
use braided_sl2::{BraidedHopf, RewriteSystem};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() { vec!["a d".into(), "b a".into(), "d a".into(), "a b c d".into()] } else { args };
    let q = RewriteSystem::bsl2();
    let c = RewriteSystem::classical();
    for s in &inputs {
        println!("{s}");
        println!("  braided   {}", parse_tensor(s, &q).unwrap());
        println!("  classical {}", parse_tensor(s, &c).unwrap());
    }
    let report = BraidedHopf::bsl2().ring.check_confluence(4);
    println!("{} overlap ambiguities, {} unresolved", report.checked, report.failures.len());
}
