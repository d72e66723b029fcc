//! Braid words, the crossing operators R and R⁻¹, the representation ρ of
//! the braid group on `A^⊗n`, and the ideals attached to braid closures.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bhopf::BraidedHopf;
use crate::error::{Error, Result};
use crate::ncring::{AlgebraElement, Letter};
use crate::scalar::{Rational, Scalar};
use crate::tensor::{TensorElement, TensorJson};

/// `σ_{|l|}^{sign l}` letters on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::Invalid(format!("letter {l} is not a generator of B_{strands}")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Whitespace-separated nonzero integers; the strand count defaults to
    /// `max |letter| + 1`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| tok.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter '{tok}'"))))
            .collect::<Result<Vec<i32>>>()?;
        let inferred = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        BraidWord::new(strands.unwrap_or(inferred), letters)
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { braid: self.strands, input: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend(&other.letters);
        BraidWord::new(self.strands, letters)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Generators of `I_{d(b)}` on `n` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub n: usize,
    pub generators: Vec<TensorElement>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<TensorJson>,
}

impl IdealPresentation {
    pub fn nonzero(&self) -> impl Iterator<Item = &TensorElement> {
        self.generators.iter().filter(|g| !g.is_zero())
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { n: self.n, generators: self.generators.iter().map(TensorElement::to_json).collect() }
    }

    pub fn from_json(j: &IdealJson) -> Result<Self> {
        let generators = j.generators.iter().map(TensorElement::from_json).collect::<Result<Vec<_>>>()?;
        for g in &generators {
            if g.n() != j.n {
                return Err(Error::FactorMismatch { expected: j.n, got: g.n() });
            }
        }
        Ok(IdealPresentation { n: j.n, generators })
    }

    /// Coefficientwise `t = t0`.
    pub fn specialize(&self, t0: &Rational) -> Result<IdealPresentation> {
        Ok(IdealPresentation {
            n: self.n,
            generators: self.generators.iter().map(|g| g.specialize(t0)).collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "factors: {}", self.n)?;
        writeln!(f, "generators: {} ({} nonzero)", self.generators.len(), self.nonzero().count())?;
        for (i, g) in self.generators.iter().enumerate() {
            writeln!(f, "[{i}] {g}")?;
        }
        Ok(())
    }
}

/// Applies R (`sign > 0`) or R⁻¹ to factors `i, i + 1` (0-based).
pub fn crossing_at(h: &BraidedHopf, u: &TensorElement, i: usize, sign: i32) -> TensorElement {
    if sign > 0 {
        u.map_slots(i, 2, 2, |k| h.crossing_pos_words(&k[0], &k[1]))
    } else {
        u.map_slots(i, 2, 2, |k| h.crossing_neg_words(&k[0], &k[1]))
    }
}

/// `R = (id⊗μ)(Ψ⊗id)(id⊗ad)` on a two-factor tensor.
pub fn crossing_pos(h: &BraidedHopf, u: &TensorElement) -> Result<TensorElement> {
    if u.n() != 2 {
        return Err(Error::FactorMismatch { expected: 2, got: u.n() });
    }
    Ok(crossing_at(h, u, 0, 1))
}

/// `R⁻¹ = (μ⊗id)(id⊗Ψ)(λ⊗id)` on a two-factor tensor.
pub fn crossing_neg(h: &BraidedHopf, u: &TensorElement) -> Result<TensorElement> {
    if u.n() != 2 {
        return Err(Error::FactorMismatch { expected: 2, got: u.n() });
    }
    Ok(crossing_at(h, u, 0, -1))
}

/// ρ(b): the crossing of the first letter is applied first.
pub fn rho(h: &BraidedHopf, b: &BraidWord, u: &TensorElement) -> Result<TensorElement> {
    if u.n() != b.strands {
        return Err(Error::StrandMismatch { braid: b.strands, input: u.n() });
    }
    Ok(b.letters.iter().fold(u.clone(), |acc, &l| crossing_at(h, &acc, l.unsigned_abs() as usize - 1, l.signum())))
}

/// `ρ(b)(x) - x` for each generator `x` placed in each factor, factor-major
/// and `a < b < c < d` within a factor.
pub fn ideal_generators(h: &BraidedHopf, b: &BraidWord) -> IdealPresentation {
    let n = b.strands;
    let inputs: Vec<TensorElement> = (0..n)
        .flat_map(|p| Letter::ALL.iter().map(move |&g| TensorElement::embed(n, p, &AlgebraElement::letter(g))))
        .collect();
    let generators = inputs
        .par_iter()
        .map(|x| {
            let mut y = rho(h, b, x).expect("strand count matches");
            y.add_scaled(x, &Scalar::from_int(-1));
            y
        })
        .collect();
    IdealPresentation { n, generators }
}

/// Images of user-supplied elements: `ρ(b)(x) - x`.
pub fn ideal_images(h: &BraidedHopf, b: &BraidWord, xs: &[TensorElement]) -> Result<Vec<TensorElement>> {
    xs.iter()
        .map(|x| {
            let mut y = rho(h, b, x)?;
            y.add_scaled(x, &Scalar::from_int(-1));
            Ok(y)
        })
        .collect()
}

/// The Hopf-link ideal `(Ψ - id)Δ(g)`.
pub fn hopf_ideal(h: &BraidedHopf) -> IdealPresentation {
    let generators = Letter::ALL
        .iter()
        .map(|&g| {
            let delta = h.coproduct(&AlgebraElement::letter(g));
            let mut out = h.braiding(&delta);
            out.add_scaled(&delta, &Scalar::from_int(-1));
            out
        })
        .collect();
    IdealPresentation { n: 2, generators }
}

/// The trefoil ideal
/// `((id⊗μ)(Ψ⊗id) - (μ⊗id)(id⊗Ψ))(id⊗Δ)Δ(g)`.
pub fn trefoil_ideal(h: &BraidedHopf) -> IdealPresentation {
    let generators = Letter::ALL
        .iter()
        .map(|&g| {
            let d2 = h.coproduct_slot(&h.coproduct(&AlgebraElement::letter(g)), 1);
            let left = h.mul_slots(&h.braid_slots(&d2, 0, false), 1);
            let right = h.mul_slots(&h.braid_slots(&d2, 1, false), 0);
            let mut out = left;
            out.add_scaled(&right, &Scalar::from_int(-1));
            out
        })
        .collect();
    IdealPresentation { n: 2, generators }
}

/// Data for the first Markov move `b c ~ c b`.
#[derive(Clone, Debug)]
pub struct MarkovConjugate {
    /// Generators of `I_{d(bc)}`.
    pub source: IdealPresentation,
    /// Generators of `I_{d(cb)}`.
    pub target: IdealPresentation,
    /// `f(g) = ρ(b)(g)` for each source generator.
    pub images: Vec<TensorElement>,
}

/// First Markov move. With ρ applying the first letter first,
/// `ρ(b)(ρ(bc)x - x) = ρ(cb)y - y` for `y = ρ(b)x`, so the comparison map is
/// ρ of the left factor.
pub fn markov_conjugate(h: &BraidedHopf, b: &BraidWord, c: &BraidWord) -> Result<MarkovConjugate> {
    let bc = b.concat(c)?;
    let cb = c.concat(b)?;
    let source = ideal_generators(h, &bc);
    let target = ideal_generators(h, &cb);
    let images = source.generators.iter().map(|g| rho(h, b, g)).collect::<Result<Vec<_>>>()?;
    Ok(MarkovConjugate { source, target, images })
}

/// Projection `p_n(x_1 ⊗ ... ⊗ x_{n+1}) = x_1 ⊗ ... ⊗ μΨ(x_n ⊗ x_{n+1})`.
#[derive(Clone, Copy, Debug)]
pub struct Projection {
    pub n: usize,
}

impl Projection {
    pub fn apply(&self, h: &BraidedHopf, u: &TensorElement) -> Result<TensorElement> {
        if u.n() != self.n + 1 {
            return Err(Error::FactorMismatch { expected: self.n + 1, got: u.n() });
        }
        let i = self.n - 1;
        Ok(h.mul_slots(&h.braid_slots(u, i, false), i))
    }
}

/// Second Markov move: `b ∈ B_n` becomes `b σ_n^{sign}` in `B_{n+1}`.
pub fn markov_stabilize(b: &BraidWord, sign: i32) -> Result<(BraidWord, Projection)> {
    if sign != 1 && sign != -1 {
        return Err(Error::Invalid("stabilization sign must be +1 or -1".into()));
    }
    let n = b.strands;
    let mut letters = b.letters.clone();
    letters.push(sign * n as i32);
    Ok((BraidWord::new(n + 1, letters)?, Projection { n }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_tensor;

    #[test]
    fn braid_word_parsing() {
        let b = BraidWord::parse("-2 1", None).unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(b.letters(), &[-2, 1]);
        assert_eq!(BraidWord::parse("", None).unwrap().strands(), 1);
        assert!(BraidWord::parse("0", None).is_err());
        assert!(BraidWord::parse("3", Some(2)).is_err());
        assert!(BraidWord::parse("x", None).is_err());
    }

    #[test]
    fn crossing_unit_cases() {
        let h = BraidedHopf::bsl2();
        for g in Letter::ALL {
            let x = AlgebraElement::letter(g);
            let x1 = TensorElement::from_factors(&[x.clone(), AlgebraElement::one()]);
            let one_x = TensorElement::from_factors(&[AlgebraElement::one(), x.clone()]);
            assert_eq!(crossing_pos(&h, &x1).unwrap(), one_x);
            assert_eq!(crossing_pos(&h, &one_x).unwrap(), h.adjoint(&x));
            assert_eq!(crossing_neg(&h, &one_x).unwrap(), x1);
            assert_eq!(crossing_pos(&h, &crossing_neg(&h, &x1).unwrap()).unwrap(), x1);
        }
    }

    #[test]
    fn rho_identity_and_mismatch() {
        let h = BraidedHopf::bsl2();
        let u = parse_tensor("a ⊗ d", &h.ring).unwrap();
        assert_eq!(rho(&h, &BraidWord::identity(2), &u).unwrap(), u);
        assert!(matches!(rho(&h, &BraidWord::identity(3), &u), Err(Error::StrandMismatch { .. })));
    }

    #[test]
    fn unknot_has_zero_generators() {
        let h = BraidedHopf::bsl2();
        let ideal = ideal_generators(&h, &BraidWord::identity(1));
        assert_eq!(ideal.generators.len(), 4);
        assert_eq!(ideal.nonzero().count(), 0);
    }

    #[test]
    fn hopf_ideal_at_one_is_commutator() {
        let h = BraidedHopf::bsl2();
        let one = Rational::from_integer(1.into());
        let i1 = hopf_ideal(&h).specialize(&one).unwrap();
        assert_eq!(i1.generators[0], parse_tensor("c ⊗ b - b ⊗ c", &h.ring).unwrap());
    }

    #[test]
    fn closed_form_ideals_are_killed_by_counit() {
        let h = BraidedHopf::bsl2();
        for ideal in [hopf_ideal(&h), trefoil_ideal(&h)] {
            for g in &ideal.generators {
                let e = h.counit_slot(&h.counit_slot(g, 1), 0);
                assert!(e.is_zero());
            }
        }
    }

    #[test]
    fn stabilization_shape() {
        let (b, p) = markov_stabilize(&BraidWord::identity(1), 1).unwrap();
        assert_eq!(b, BraidWord::parse("1", None).unwrap());
        let h = BraidedHopf::bsl2();
        let x1 = parse_tensor("c ⊗ 1", &h.ring).unwrap();
        assert_eq!(p.apply(&h, &x1).unwrap(), parse_tensor("c", &h.ring).unwrap());
    }
}
