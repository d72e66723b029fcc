//! Ad-invariant classes of the quotient at bounded degree.
//!
//! With the zero ideal on one strand in the classical instance this is
//! the span of 1 and the trace a + d.

use braided_sl2::braidrep::{ideal_generators, BraidWord};
use braided_sl2::verify::charvar_probe;
use braided_sl2::BraidedHopf;

fn main() {
    for h in [BraidedHopf::classical(), BraidedHopf::bsl2()] {
        let ideal = ideal_generators(&h, &BraidWord::identity(1));
        for d in 1..=2 {
            let r = charvar_probe(&h, &ideal, d).unwrap();
            println!("{:?} D = {d}: {} of {} classes", h.instance(), r.invariants.len(), r.candidates);
            for x in &r.invariants {
                println!("  {x}");
            }
        }
    }
}
