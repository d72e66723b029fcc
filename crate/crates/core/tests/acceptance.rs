//! One line per acceptance criterion, written straight to stdout so it shows
//! without `--nocapture`.

mod common;

use std::io::Write;
use std::time::Instant;

use braided_sl2::axioms::axioms_check;
use braided_sl2::braidrep::{
    crossing_neg, crossing_pos, hopf_ideal, ideal_generators, markov_conjugate, markov_stabilize, rho, trefoil_ideal,
    BraidWord, IdealPresentation,
};
use braided_sl2::linalg::Echelon;
use braided_sl2::ncring::NormalWord;
use braided_sl2::parse::parse_tensor;
use braided_sl2::scalar::Rational;
use braided_sl2::verify::{charvar_probe, rep_check_ideal, specialize_ideal, FilteredBasis, IdealSpan, MatrixTuple};
use braided_sl2::{AlgebraElement, BraidedHopf, Error, Scalar, TensorElement};
use rand::Rng;

const AXIOM_DEGREE: usize = 2;
const MEMBERSHIP_DEGREE: usize = 4;
const MARKOV_DEGREE: usize = 3;
const CONFLUENCE_INNER: usize = 4;
const NUMERIC_TOL: f64 = 1e-9;
const NONZERO_FLOOR: f64 = 1e-6;
const RANDOM_INPUTS: usize = 50;
const RANDOM_TRIPLES: usize = 500;

fn report(n: usize, name: &str, pass: bool, detail: &str, clock: Instant) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let line = format!("criterion {n:>2} {verdict} {name}: {detail} [{:.1?}]", clock.elapsed());
    writeln!(std::io::stdout().lock(), "{line}").unwrap();
    assert!(pass, "{line}");
}

fn braid(w: &str, n: usize) -> BraidWord {
    BraidWord::parse(w, Some(n)).unwrap()
}

fn pair(u: NormalWord, v: NormalWord) -> TensorElement {
    TensorElement::pure(vec![u, v], Scalar::one())
}

#[test]
fn criterion_01_axiom_suite() {
    let clock = Instant::now();
    let q = axioms_check(&BraidedHopf::bsl2(), AXIOM_DEGREE);
    let c = axioms_check(&BraidedHopf::classical(), AXIOM_DEGREE);
    let cases: usize = q.results.iter().chain(&c.results).map(|r| r.cases).sum();
    let failed: Vec<String> = q.failed().chain(c.failed()).map(|r| r.name.to_string()).collect();
    let detail = format!(
        "{} identities x 2 instances, {cases} cases at degree <= {AXIOM_DEGREE} per slot, failed {failed:?}",
        q.results.len()
    );
    report(1, "braided Hopf axioms and adjoint identities", failed.is_empty(), &detail, clock);
}

#[test]
fn criterion_02_reference_values() {
    let clock = Instant::now();
    let h = BraidedHopf::bsl2();
    let cases = [
        ("a ⊗ a", "a ⊗ a^2 d + t^-1 b ⊗ a c d - t^2 c ⊗ a^2 b - t d ⊗ a c b"),
        (
            "b ⊗ c",
            "a ⊗ (-(1-t^-1) a^2 d + (1-t^-1) a d^2 + c b d) \
             + b ⊗ (-(t^-1-t^-3) a c d + (1-t^-1) c^2 b + c d^2) \
             + c ⊗ ((t^2-t+t^-1-t^-2) a^2 b - (t-t^-1) a b d - c b^2) \
             + d ⊗ ((1-t^-1) a^2 d - (1-t^-1) a d^2 - c b d)",
        ),
    ];
    let mut ok = 0;
    for (input, reference) in cases {
        let u = parse_tensor(input, &h.ring).unwrap();
        let expected = parse_tensor(reference, &h.ring).unwrap();
        let left = h.mul_slots(&h.braid_slots(&h.adjoint_slot(&h.braid_slots(&u, 0, false), 1), 0, false), 1);
        let right = h.mul_slots(&h.adjoint_slot(&u, 0), 1);
        ok += (left == expected) as usize + (right == expected) as usize;
    }
    report(2, "braided commutativity at (a,a) and (b,c)", ok == 4, &format!("{ok}/4 sides equal the reference values"), clock);
}

#[test]
fn criterion_03_group_representation() {
    let clock = Instant::now();
    let h = BraidedHopf::bsl2();
    let basis = NormalWord::up_to_degree(2);
    let mut inverse_fail = 0;
    for &u in &basis {
        for &v in &basis {
            let x = pair(u, v);
            inverse_fail += (crossing_neg(&h, &crossing_pos(&h, &x).unwrap()).unwrap() != x) as usize;
            inverse_fail += (crossing_pos(&h, &crossing_neg(&h, &x).unwrap()).unwrap() != x) as usize;
        }
    }
    let gens = NormalWord::up_to_degree(1);
    let (w1, w2) = (braid("1 2 1", 3), braid("2 1 2", 3));
    let mut braid_fail = 0;
    for &x in &gens {
        for &y in &gens {
            for &z in &gens {
                let u = TensorElement::pure(vec![x, y, z], Scalar::one());
                braid_fail += (rho(&h, &w1, &u).unwrap() != rho(&h, &w2, &u).unwrap()) as usize;
            }
        }
    }
    let mut r = common::rng(0xacce);
    let cancel = braid("1 -1", 2);
    let mut random_fail = 0;
    for _ in 0..RANDOM_INPUTS {
        let mut x = TensorElement::zero(2);
        for _ in 0..r.gen_range(1..5) {
            let c = Scalar::laurent([(r.gen_range(-2..3), Rational::from_integer(r.gen_range(-5..6).into()))]);
            x.add_scaled(&pair(basis[r.gen_range(0..basis.len())], basis[r.gen_range(0..basis.len())]), &c);
        }
        random_fail += (rho(&h, &cancel, &x).unwrap() != x) as usize;
    }
    let detail = format!(
        "R R⁻¹ and R⁻¹ R on {} pairs: {inverse_fail} failures; braid relation on {} triples: {braid_fail}; \
         ρ(σ1)ρ(σ1⁻¹) on {RANDOM_INPUTS} random inputs: {random_fail}",
        basis.len() * basis.len(),
        gens.len().pow(3)
    );
    report(3, "braid group representation", inverse_fail + braid_fail + random_fail == 0, &detail, clock);
}

#[test]
fn criterion_04_classical_limit() {
    let clock = Instant::now();
    let h = BraidedHopf::classical();
    let q = BraidedHopf::bsl2();
    let o = common::Sl2::new();
    let one = Rational::from_integer(1.into());
    let basis = NormalWord::up_to_degree(2);
    let (pos, neg) = (braid("1", 2), braid("-1", 2));
    let mut fail = 0;
    for &u in &basis {
        fail += (h.coproduct_word(&u) != o.coproduct(&u)) as usize;
        fail += (TensorElement::single(h.antipode_word(&u)) != o.antipode(&u)) as usize;
        fail += (h.counit_word(&u) != o.counit(&u)) as usize;
        for &v in &basis {
            let x = pair(u, v);
            fail += (h.psi_words(&u, &v, false) != pair(v, u)) as usize;
            fail += (h.ring.mul_words(&u, &v) != h.ring.mul_words(&v, &u)) as usize;
            for (b, oracle) in [(&pos, o.sigma(u, v)), (&neg, o.sigma_inv(u, v))] {
                let r = rho(&h, b, &x).unwrap();
                fail += (r != oracle) as usize;
                fail += (rho(&q, b, &x).unwrap().specialize(&one).unwrap() != r) as usize;
            }
        }
    }
    let detail = format!("structure maps and σ1^±1 against the SL(2) conjugation oracle on degree <= 2: {fail} mismatches");
    report(4, "classical limit t = 1", fail == 0, &detail, clock);
}

/// Counts members of `xs` in the span of `ideal` at the given degree.
fn members(h: &BraidedHopf, ideal: &IdealPresentation, xs: &[TensorElement], d: usize) -> Result<usize, Error> {
    let span = IdealSpan::new(h, ideal, d)?;
    let mut n = 0;
    for x in xs {
        n += span.contains(x)?.is_member() as usize;
    }
    Ok(n)
}

fn mutual(n: usize, name: &str, word: &str, closed: fn(&BraidedHopf) -> IdealPresentation) {
    let clock = Instant::now();
    let h = BraidedHopf::bsl2();
    let from_rho = ideal_generators(&h, &braid(word, 2));
    let closed = closed(&h);
    let rg: Vec<TensorElement> = from_rho.nonzero().cloned().collect();
    let cg: Vec<TensorElement> = closed.nonzero().cloned().collect();
    let a = members(&h, &from_rho, &cg, MEMBERSHIP_DEGREE).unwrap();
    let b = members(&h, &closed, &rg, MEMBERSHIP_DEGREE).unwrap();
    let detail = format!(
        "closed form in ρ-ideal {a}/{}, ρ-generators in closed-form ideal {b}/{} at D = {MEMBERSHIP_DEGREE}",
        cg.len(),
        rg.len()
    );
    report(n, name, a == cg.len() && b == rg.len(), &detail, clock);
}

#[test]
fn criterion_05_hopf_link() {
    mutual(5, "Hopf link ideals agree", "1 1", hopf_ideal);
}

#[test]
fn criterion_06_trefoil() {
    mutual(6, "trefoil ideals agree", "1 1 1", trefoil_ideal);
}

fn vanishes(i: &IdealPresentation, m: &MatrixTuple) -> bool {
    rep_check_ideal(i, m, NUMERIC_TOL).unwrap().pass
}

fn nonzero(i: &IdealPresentation, m: &MatrixTuple) -> bool {
    rep_check_ideal(i, m, NUMERIC_TOL).unwrap().max_abs > NONZERO_FLOOR
}

#[test]
fn criterion_07_numeric_oracle() {
    let clock = Instant::now();
    let h = BraidedHopf::bsl2();
    let hopf = specialize_ideal(&ideal_generators(&h, &braid("1 1", 2))).unwrap();
    let tref = specialize_ideal(&ideal_generators(&h, &braid("1 1 1", 2))).unwrap();
    let mut r = common::rng(0x7e57);
    let (mut commuting, mut hopf_generic, mut abelian, mut tref_generic) = (0, 0, 0, 0);
    for _ in 0..20 {
        commuting += vanishes(&hopf, &common::commuting_pair(&mut r)) as usize;
        hopf_generic += nonzero(&hopf, &common::generic_pair(&mut r)) as usize;
        tref_generic += nonzero(&tref, &common::generic_pair(&mut r)) as usize;
    }
    for _ in 0..10 {
        abelian += vanishes(&tref, &common::abelian_pair(&mut r)) as usize;
    }
    let parabolic = vanishes(&tref, &common::parabolic_trefoil());
    let detail = format!(
        "Hopf vanishes on {commuting}/20 commuting, nonzero on {hopf_generic}/20 generic; trefoil vanishes on \
         parabolic y = {} ({parabolic}) and {abelian}/10 abelian, nonzero on {tref_generic}/20 generic \
         (tol {NUMERIC_TOL:e}, floor {NONZERO_FLOOR:e})",
        common::TREFOIL_Y
    );
    let pass = commuting == 20 && hopf_generic == 20 && parabolic && abelian == 10 && tref_generic == 20;
    report(7, "numeric SL(2, C) oracle", pass, &detail, clock);
}

#[test]
fn criterion_08_markov_conjugation() {
    let clock = Instant::now();
    let h = BraidedHopf::bsl2();
    let (b, c) = (braid("1 1", 2), braid("1", 2));
    // the target span is needed first; images are only worth computing if it exists
    let target = ideal_generators(&h, &c.concat(&b).unwrap());
    let target_degree = target.nonzero().flat_map(|g| g.slot_degrees()).max().unwrap_or(0);
    let (pass, detail) = match IdealSpan::new(&h, &target, MARKOV_DEGREE) {
        Err(e) => (false, format!("{e}; generators of I(σ1³) reach slot degree {target_degree}, so no member_at_{MARKOV_DEGREE} exists")),
        Ok(_) => {
            let m = markov_conjugate(&h, &b, &c).unwrap();
            let n = members(&h, &m.target, &m.images, MARKOV_DEGREE).unwrap();
            (n == m.images.len(), format!("{n}/{} images are members at D = {MARKOV_DEGREE}", m.images.len()))
        }
    };
    report(8, "Markov MI, f = ρ(σ1²) on I(σ1³)", pass, &detail, clock);
}

#[test]
fn criterion_08_markov_stabilization() {
    let clock = Instant::now();
    let mut parts = Vec::new();
    let mut pass = true;
    for h in [BraidedHopf::bsl2(), BraidedHopf::classical()] {
        let (stab, p) = markov_stabilize(&BraidWord::identity(1), 1).unwrap();
        let source = ideal_generators(&h, &stab);
        let target = ideal_generators(&h, &BraidWord::identity(1));
        let images: Vec<TensorElement> = source.generators.iter().map(|g| p.apply(&h, g).unwrap()).collect();
        let n = members(&h, &target, &images, MARKOV_DEGREE).unwrap();
        parts.push(format!("{:?}: {n}/{} projections are members", h.instance(), images.len()));
        if h.instance() == braided_sl2::Instance::Bsl2 {
            pass = n == images.len();
        }
    }
    let detail = format!("{} at D = {MARKOV_DEGREE}", parts.join("; "));
    report(8, "Markov MII, p = μΨ from I(σ1) to I(1)", pass, &detail, clock);
}

#[test]
fn criterion_09_confluence() {
    let clock = Instant::now();
    let h = BraidedHopf::bsl2();
    let conf = h.ring.check_confluence(CONFLUENCE_INNER);
    let words = NormalWord::up_to_degree(3);
    let mut r = common::rng(0xa550c);
    let mut fail = 0;
    for _ in 0..RANDOM_TRIPLES {
        let [x, y, z] = [(); 3].map(|_| AlgebraElement::word(words[r.gen_range(0..words.len())]));
        fail += (h.ring.mul(&h.ring.mul(&x, &y), &z) != h.ring.mul(&x, &h.ring.mul(&y, &z))) as usize;
    }
    let detail = format!(
        "{} ambiguities, {} unresolved; {fail}/{RANDOM_TRIPLES} associativity failures at degree <= 3",
        conf.checked,
        conf.failures.len()
    );
    report(9, "rewrite system is confluent", conf.failures.is_empty() && fail == 0, &detail, clock);
}

#[test]
fn criterion_10_character_variety() {
    let clock = Instant::now();
    let h = BraidedHopf::classical();
    let probe = charvar_probe(&h, &ideal_generators(&h, &BraidWord::identity(1)), 1).unwrap();
    let basis = FilteredBasis::new(1, 1);
    let rows = |xs: &[TensorElement]| xs.iter().map(|x| basis.row(x).unwrap()).collect::<Vec<_>>();
    let expected = [parse_tensor("1", &h.ring).unwrap(), parse_tensor("a + d", &h.ring).unwrap()];
    let got = Echelon::from_rows(rows(&probe.invariants));
    let both = Echelon::from_rows(rows(&probe.invariants).into_iter().chain(rows(&expected)).collect());
    let pass = got.rank() == 2 && both.rank() == 2;
    let shown: Vec<String> = probe.invariants.iter().map(|x| x.to_string()).collect();
    report(10, "classical trace functions at D = 1", pass, &format!("invariants {shown:?}"), clock);
}
