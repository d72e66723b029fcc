//! The two Markov moves on small braids: conjugation maps and the
//! stabilization projection `μΨ` on the last two factors.

use braided_sl2::braidrep::{ideal_generators, markov_conjugate, markov_stabilize, BraidWord};
use braided_sl2::verify::IdealSpan;
use braided_sl2::BraidedHopf;

fn main() {
    for h in [BraidedHopf::classical(), BraidedHopf::bsl2()] {
        let (b, p) = markov_stabilize(&BraidWord::identity(1), 1).unwrap();
        println!("{:?}: projections of the generators for [1] on 2 strands", h.instance());
        for g in ideal_generators(&h, &b).nonzero() {
            println!("  {}", p.apply(&h, g).unwrap());
        }
    }

    // conjugating σ1 by σ1 leaves σ1² in place, so f = ρ(σ1) acts on the
    // Hopf link ideal
    let h = BraidedHopf::bsl2();
    let s1 = BraidWord::parse("1", Some(2)).unwrap();
    let m = markov_conjugate(&h, &s1, &s1).unwrap();
    let d = m.images.iter().flat_map(|g| g.slot_degrees()).max().unwrap_or(0);
    println!("images of the Hopf link generators under ρ(σ1) reach slot degree {d}");
    let span = IdealSpan::new(&h, &m.target, d).unwrap();
    for (g, x) in m.source.generators.iter().zip(&m.images) {
        let r = span.contains(x).unwrap();
        println!("  {:?} -> {:?}: {}", g.slot_degrees(), x.slot_degrees(), if r.is_member() { "member" } else { "not member" });
    }
}
