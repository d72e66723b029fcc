use braided_sl2::parse::parse_tensor;
use braided_sl2::{BraidedHopf, TensorElement};

/// `(id⊗μ)(Ψ⊗id)(id⊗ad)Ψ` and `(id⊗μ)(ad⊗id)` on `x ⊗ y`.
fn both_sides(h: &BraidedHopf, x: &str) -> (TensorElement, TensorElement) {
    let u = parse_tensor(x, &h.ring).unwrap();
    let left = h.mul_slots(&h.braid_slots(&h.adjoint_slot(&h.braid_slots(&u, 0, false), 1), 0, false), 1);
    let right = h.mul_slots(&h.adjoint_slot(&u, 0), 1);
    (left, right)
}

#[test]
fn commutativity_at_a_a() {
    let h = BraidedHopf::bsl2();
    let expected = parse_tensor("a ⊗ a^2 d + t^-1 b ⊗ a c d - t^2 c ⊗ a^2 b - t d ⊗ a c b", &h.ring).unwrap();
    let (left, right) = both_sides(&h, "a ⊗ a");
    assert_eq!(left, expected);
    assert_eq!(right, expected);
}

#[test]
fn commutativity_at_b_c() {
    let h = BraidedHopf::bsl2();
    let expected = parse_tensor(
        "a ⊗ (-(1-t^-1) a^2 d + (1-t^-1) a d^2 + c b d) \
         + b ⊗ (-(t^-1-t^-3) a c d + (1-t^-1) c^2 b + c d^2) \
         + c ⊗ ((t^2-t+t^-1-t^-2) a^2 b - (t-t^-1) a b d - c b^2) \
         + d ⊗ ((1-t^-1) a^2 d - (1-t^-1) a d^2 - c b d)",
        &h.ring,
    )
    .unwrap();
    let (left, right) = both_sides(&h, "b ⊗ c");
    assert_eq!(left, expected);
    assert_eq!(right, expected);
}
