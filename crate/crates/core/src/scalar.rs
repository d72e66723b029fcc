//! Exact coefficients: the rational function field ℚ(t).
//!
//! A [`Scalar`] is a reduced fraction `num / den` of polynomials in `t` with
//! rational coefficients, `den` monic. Everything produced by the structure
//! tables is a Laurent polynomial (`den = t^k`), and that case never runs a
//! polynomial gcd.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Polynomial in `t` over ℚ, coefficients stored lowest degree first with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Largest `k` with `t^k | self`; 0 for the zero polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// `c * t^k` with `c` monic, i.e. the polynomial is exactly `t^k`.
    pub fn is_monic_monomial(&self) -> bool {
        !self.is_zero() && self.lead().is_some_and(|c| c.is_one()) && self.valuation() == self.degree()
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `t^k`; the caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Poly {
        if k == 0 {
            return self.clone();
        }
        Poly { coeffs: self.coeffs[k..].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let dlead = divisor.lead().unwrap();
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / dlead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(rational_to_f64(c), 0.0);
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at `x` in the prime field `F_p`; `None` when a coefficient
    /// denominator vanishes mod `p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, p), rational_mod(c, p)?, p);
        }
        Some(acc)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64, c.clone()))
            .collect();
        write!(f, "{}", format_laurent(&terms))
    }
}

fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        // numerator/denominator too large for direct conversion
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

fn rational_mod(c: &Rational, p: u64) -> Option<u64> {
    let n = bigint_mod(c.numer(), p);
    let d = inv_mod(bigint_mod(c.denom(), p), p)?;
    Some(mul_mod(n, d, p))
}

/// Element of ℚ(t) in canonical form: `den` monic, `gcd(num, den) = 1`, zero
/// stored as `0/1`. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: Rational) -> Self {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Scalar::t_pow(1)
    }

    /// `t^k`, any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        Scalar::monomial(Rational::one(), k)
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        if k >= 0 {
            Scalar { num: Poly::monomial(c, k as usize), den: Poly::one() }
        } else {
            Scalar { num: Poly::constant(c), den: Poly::monomial(Rational::one(), (-k) as usize) }
        }
    }

    /// Laurent polynomial from `(power, coefficient)` pairs.
    pub fn laurent<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        terms
            .into_iter()
            .fold(Scalar::zero(), |acc, (k, c)| acc + Scalar::monomial(c, k))
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let lead = den.lead().unwrap().clone();
        let (num, den) = if lead.is_one() {
            (num, den)
        } else {
            let inv = lead.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        if den.is_monic_monomial() {
            let m = num.valuation().min(den.degree());
            return Scalar { num: num.shift_down(m), den: den.shift_down(m) };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Scalar { num, den }
        } else {
            Scalar { num: num.div_rem(&g).0, den: den.div_rem(&g).0 }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Denominator is a power of `t`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monic_monomial()
    }

    /// Nonzero rational constant (no `t` dependence).
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree() == 0
    }

    /// `c * t^k` with `c ≠ 0`: a unit of the Laurent ring.
    pub fn is_laurent_unit(&self) -> bool {
        self.is_laurent() && !self.is_zero() && self.num.valuation() == self.num.degree()
    }

    /// `(power, coefficient)` pairs, lowest power first, if Laurent.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, Rational)>> {
        if !self.is_laurent() {
            return None;
        }
        let shift = self.den.degree() as i64;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64 - shift, c.clone()))
                .collect(),
        )
    }

    /// Rational value when `t` does not occur.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.num.coeffs()[0].clone())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Numeric value at `t = t0` in double precision.
    pub fn eval(&self, t0: Complex64) -> Result<Complex64> {
        let d = self.den.eval_complex(t0);
        if d.norm() == 0.0 {
            return Err(Error::Pole(format!("{t0}")));
        }
        Ok(self.num.eval_complex(t0) / d)
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, t0: &Rational) -> Result<Rational> {
        let d = self.den.eval_rational(t0);
        if d.is_zero() {
            return Err(Error::Pole(t0.to_string()));
        }
        Ok(self.num.eval_rational(t0) / d)
    }

    /// Constant scalar obtained by substituting `t = t0`.
    pub fn specialize(&self, t0: &Rational) -> Result<Scalar> {
        Ok(Scalar::from_rational(self.eval_rational(t0)?))
    }

    /// Value in `F_p` at `t = x`; `None` at a pole or a bad prime.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let n = self.num.eval_mod(x, p)?;
        let d = self.den.eval_mod(x, p)?;
        Some(mul_mod(n, inv_mod(d, p)?, p))
    }

    /// Rough size used for pivot selection.
    pub fn weight(&self) -> usize {
        self.num.coeffs().len() + if self.is_laurent() { 0 } else { 4 * self.den.coeffs().len() }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::from_rational(c)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::canonical(self.num.add(&rhs.num), self.den.clone());
        }
        if self.is_laurent() && rhs.is_laurent() {
            let (k1, k2) = (self.den.degree(), rhs.den.degree());
            let k = k1.max(k2);
            let num = self.num.shift_up(k - k1).add(&rhs.num.shift_up(k - k2));
            return Scalar::canonical(num, Poly::monomial(Rational::one(), k));
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Scalar::canonical(num, self.den.mul(&rhs.den))
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if rhs.is_constant() {
            let c = &rhs.num.coeffs()[0];
            return Scalar { num: self.num.scale(c), den: self.den.clone() };
        }
        if self.is_constant() {
            let c = &self.num.coeffs()[0];
            return Scalar { num: rhs.num.scale(c), den: rhs.den.clone() };
        }
        if self.is_laurent() && rhs.is_laurent() {
            let k = self.den.degree() + rhs.den.degree();
            return Scalar::canonical(self.num.mul(&rhs.num), Poly::monomial(Rational::one(), k));
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = rhs.den.div_rem(&g1).0;
        let n2 = rhs.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        Scalar::canonical(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn format_rational_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders `(power, coeff)` pairs as `c*t^k` terms, highest power first.
fn format_laurent(terms: &[(i64, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut sorted: Vec<&(i64, Rational)> = terms.iter().collect();
    sorted.sort_by_key(|t| std::cmp::Reverse(t.0));
    let mut out = String::new();
    for (i, (k, c)) in sorted.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let body = match k {
            0 => format_rational_coeff(&a),
            _ => {
                let tpart = if *k == 1 { "t".to_string() } else { format!("t^{k}") };
                if a.is_one() {
                    tpart
                } else if a.is_integer() {
                    format!("{}*{tpart}", a.numer())
                } else {
                    format!("({})*{tpart}", format_rational_coeff(&a))
                }
            }
        };
        out.push_str(&body);
    }
    out
}

impl Scalar {
    /// True when the canonical text has more than one term or a `/`, i.e.
    /// needs parentheses as a factor.
    pub fn needs_parens(&self) -> bool {
        let s = self.to_string();
        s.contains(' ') || s.contains('/')
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(terms) = self.laurent_terms() {
            return write!(f, "{}", format_laurent(&terms));
        }
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_scalar(s)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order (used only for deterministic sorting).
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |s: &Scalar| (s.den.coeffs().to_vec(), s.num.coeffs().to_vec());
        key(self).cmp(&key(other))
    }
}
