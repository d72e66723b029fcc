//! Evaluates the t = 1 ideals on SL(2, C) matrices and compares with the
//! Wirtinger fixed-point condition.

use braided_sl2::braidrep::BraidWord;
use braided_sl2::verify::{rep_check, wirtinger_defect, MatrixTuple};
use braided_sl2::BraidedHopf;

fn main() {
    let h = BraidedHopf::classical();
    let tuples = [
        ("parabolic", "[[[[1,0],[1,0]],[[0,0],[1,0]]],[[[1,0],[0,0]],[[-1,0],[1,0]]]]"),
        ("diagonal", "[[[[2,0],[0,0]],[[0,0],[0.5,0]]],[[[0,1],[0,0]],[[0,0],[0,-1]]]]"),
        ("equal", "[[[[1,0],[1,0]],[[1,0],[2,0]]],[[[1,0],[1,0]],[[1,0],[2,0]]]]"),
    ];
    for word in ["1 1", "1 1 1"] {
        let b = BraidWord::parse(word, Some(2)).unwrap();
        for (name, json) in tuples {
            let m = MatrixTuple::from_json(json).unwrap();
            let r = rep_check(&h, &b, &m, 1e-9).unwrap();
            println!(
                "[{word}] {name:<9} ideal max {:.2e}  wirtinger defect {:.2e}  {}",
                r.max_abs,
                wirtinger_defect(&b, &m),
                if r.pass { "representation" } else { "not a representation" }
            );
        }
    }
}
