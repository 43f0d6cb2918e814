//! Exact arithmetic in `Z[q, q^-1]`.
//!
//! A [`LaurentPoly`] is stored as a list of `(exponent, coefficient)` pairs
//! sorted by exponent with no zero coefficient, so structural equality is
//! polynomial equality. Coefficients are `i64` and every operation uses
//! checked arithmetic: an overflow panics instead of wrapping.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Node;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(i32, i64)>", into = "Vec<(i32, i64)>")]
pub struct LaurentPoly {
    terms: Vec<(i32, i64)>,
}

#[track_caller]
fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("Laurent coefficient overflow in addition")
}

#[track_caller]
fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("Laurent coefficient overflow in multiplication")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(e, c)],
            }
        }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from arbitrary terms, merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut terms: Vec<(i32, i64)> = terms.into_iter().collect();
        terms.sort_by_key(|&(e, _)| e);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = checked_add(*lc, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    pub fn coeff(&self, e: i32) -> i64 {
        match self.terms.binary_search_by_key(&e, |&(x, _)| x) {
            Ok(k) => self.terms[k].1,
            Err(_) => 0,
        }
    }

    /// Value at `q = 0` for polynomials in `Z[q]`; the constant coefficient.
    pub fn constant_term(&self) -> i64 {
        self.coeff(0)
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Lowest term `(exponent, coefficient)`.
    pub fn leading_low(&self) -> Option<(i32, i64)> {
        self.terms.first().copied()
    }

    /// True when every exponent is `>= 0`.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    /// True when the polynomial lies in `q Z[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 1)
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> Self {
        if s == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| (e, checked_mul(c, s)))
                .collect(),
        }
    }

    /// Drops every term of exponent `>= horizon`.
    pub fn truncate_above(&self, horizon: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|&(e, _)| e < horizon)
                .collect(),
        }
    }

    /// Keeps the terms of exponent `<= 0`.
    pub fn nonpositive_part(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|&(e, _)| e <= 0)
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `r` with `r * den == self`, or an error when the
    /// division leaves a remainder.
    pub fn exact_divide(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_divisible = || Error::NotDivisible {
            num: self.to_string(),
            den: den.to_string(),
        };
        let (d_lo, d_hi) = (den.min_exponent().unwrap(), den.max_exponent().unwrap());
        let lead = den.terms.last().unwrap().1;
        let n_lo = self.min_exponent().unwrap();
        // long division from the top degree down, over a dense buffer
        let mut rem: Vec<i64> = vec![0; (self.max_exponent().unwrap() - n_lo + 1) as usize];
        for &(e, c) in &self.terms {
            rem[(e - n_lo) as usize] = c;
        }
        let dense_den: Vec<(usize, i64)> = den
            .terms
            .iter()
            .map(|&(e, c)| ((e - d_lo) as usize, c))
            .collect();
        let span = (d_hi - d_lo) as usize;
        let mut quotient = Vec::new();
        let mut top = rem.len();
        while top > span {
            let k = top - 1;
            let c = rem[k];
            if c != 0 {
                if c % lead != 0 {
                    return Err(not_divisible());
                }
                let qc = c / lead;
                let base = k - span;
                for &(off, dc) in &dense_den {
                    rem[base + off] = checked_add(rem[base + off], -checked_mul(qc, dc));
                }
                quotient.push((base as i32 + n_lo - d_lo, qc));
            }
            top -= 1;
        }
        if rem[..top].iter().any(|&c| c != 0) {
            return Err(not_divisible());
        }
        Ok(LaurentPoly::from_terms(quotient))
    }

    /// Bar-symmetric correction coefficient: keeps the terms of exponent `<= 0`
    /// and mirrors every strictly negative exponent onto the positive side.
    /// The difference `self - gamma_symmetrize(self)` lies in `q Z[q]`.
    pub fn gamma_symmetrize(&self) -> LaurentPoly {
        let low = self.nonpositive_part();
        let mirrored = self
            .terms
            .iter()
            .filter(|&&(e, _)| e < 0)
            .map(|&(e, c)| (-e, c));
        LaurentPoly::from_terms(low.terms.iter().copied().chain(mirrored))
    }
}

/// Quantum integer `[m]_i = (q_i^m - q_i^-m) / (q_i - q_i^-1)`.
pub fn quantum_integer(m: u32, node: Node) -> LaurentPoly {
    let d = node.q_exponent();
    let m = m as i32;
    LaurentPoly::from_terms((0..m).map(|k| (d * (m - 1 - 2 * k), 1)))
}

/// `[m]_i! = [m]_i [m-1]_i ... [1]_i`
pub fn quantum_factorial(m: u32, node: Node) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, j| {
        &acc * &quantum_integer(j, node)
    })
}

/// Gaussian binomial `[n choose k]_i`; zero when `k > n`.
pub fn quantum_binomial(n: u32, k: u32, node: Node) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let num = (n - k + 1..=n).fold(LaurentPoly::one(), |acc, j| {
        &acc * &quantum_integer(j, node)
    });
    num.exact_divide(&quantum_factorial(k, node))
        .expect("Gaussian binomials are Laurent polynomials")
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Vec<(i32, i64)>> for LaurentPoly {
    fn from(terms: Vec<(i32, i64)>) -> Self {
        LaurentPoly::from_terms(terms)
    }
}

impl From<LaurentPoly> for Vec<(i32, i64)> {
    fn from(p: LaurentPoly) -> Self {
        p.terms
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ea, ca) = a[i];
            let (eb, cb) = b[j];
            if ea < eb {
                out.push((ea, ca));
                i += 1;
            } else if eb < ea {
                out.push((eb, cb));
                j += 1;
            } else {
                let c = checked_add(ca, cb);
                if c != 0 {
                    out.push((ea, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = rhs.terms[0];
            return self.shift(e).scale(c);
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms[0];
            return rhs.shift(e).scale(c);
        }
        let lo = self.min_exponent().unwrap() + rhs.min_exponent().unwrap();
        let hi = self.max_exponent().unwrap() + rhs.max_exponent().unwrap();
        let mut dense = vec![0i64; (hi - lo + 1) as usize];
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &rhs.terms {
                let k = (ea + eb - lo) as usize;
                dense[k] = checked_add(dense[k], checked_mul(ca, cb));
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(k, c)| (k as i32 + lo, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form, ascending exponents: `q^-2 + 2*q^-1 + 3 + 5*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, &(e, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("q")?,
                (1, m) => write!(f, "{m}*q")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, m) => write!(f, "{m}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical text form; also tolerant of arbitrary term order
    /// and whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPolynomial(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms; a '-' right after '^' belongs to the exponent
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        pieces.push(cur);
        let mut terms = Vec::new();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-1, &piece[1..]),
                Some(b'+') => (1, &piece[1..]),
                _ => (1, &piece[..]),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, mono) = match body.split_once('*') {
                Some((c, m)) => (c.parse::<i64>().map_err(|_| bad())?, Some(m)),
                None if body.starts_with('q') => (1, Some(body)),
                None => (body.parse::<i64>().map_err(|_| bad())?, None),
            };
            let exp = match mono {
                None => 0,
                Some("q") => 1,
                Some(m) => m
                    .strip_prefix("q^")
                    .and_then(|x| x.parse::<i32>().ok())
                    .ok_or_else(bad)?,
            };
            terms.push((exp, sign * coeff));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_integer(2, Node::One), p("q^-1 + q"));
        assert_eq!(quantum_integer(2, Node::Two), p("q^-3 + q^3"));
        assert_eq!(quantum_integer(3, Node::One), p("q^-2 + 1 + q^2"));
        assert_eq!(quantum_integer(0, Node::One), LaurentPoly::zero());
        assert_eq!(quantum_factorial(0, Node::Two), LaurentPoly::one());
        assert_eq!(
            quantum_factorial(3, Node::One),
            &quantum_integer(2, Node::One) * &quantum_integer(3, Node::One)
        );
    }

    #[test]
    fn quantum_integer_matches_defining_quotient() {
        // (q_i^m - q_i^-m) = [m]_i (q_i - q_i^-1)
        for node in Node::ALL {
            let d = node.q_exponent();
            for m in 0..8u32 {
                let lhs = &LaurentPoly::q_pow(d * m as i32) - &LaurentPoly::q_pow(-d * m as i32);
                let den = &LaurentPoly::q_pow(d) - &LaurentPoly::q_pow(-d);
                assert_eq!(&quantum_integer(m, node) * &den, lhs);
            }
        }
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("q^2 - q^-1").bar(), p("q^-2 - q"));
        assert_eq!(p("5").bar(), p("5"));
        assert_eq!(p("q + q^-1").bar(), p("q + q^-1"));
    }

    #[test]
    fn exact_divide_examples() {
        let a = p("q + q^-1");
        let b = p("q^3 + q^-3");
        assert_eq!((&a * &b).exact_divide(&a).unwrap(), b);
        assert_eq!(b.exact_divide(&LaurentPoly::one()).unwrap(), b);
        assert!(matches!(
            p("q").exact_divide(&a),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(
            a.exact_divide(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            LaurentPoly::zero().exact_divide(&a).unwrap(),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            p("q^-2 + 2*q^-1 + 3 + 5*q").gamma_symmetrize(),
            p("q^-2 + 2*q^-1 + 3 + 2*q + q^2")
        );
        assert_eq!(p("1").gamma_symmetrize(), p("1"));
        assert_eq!(p("q^3").gamma_symmetrize(), LaurentPoly::zero());
    }

    #[test]
    fn text_form() {
        assert_eq!(
            p("q^-2 + 2*q^-1 + 3 + 5*q").to_string(),
            "q^-2 + 2*q^-1 + 3 + 5*q"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("q^2 - q^-1").to_string(), "-q^-1 + q^2");
        assert_eq!(p("-3*q").to_string(), "-3*q");
        assert_eq!(p("-1").to_string(), "-1");
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("2*x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let poly = p("q^-2 + 2*q^-1 + 3 + 5*q");
        let js = serde_json::to_string(&poly).unwrap();
        assert_eq!(js, "[[-2,1],[-1,2],[0,3],[1,5]]");
        let back: LaurentPoly = serde_json::from_str("[[1,5],[0,3],[-1,2],[-2,1],[4,0]]").unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn quantum_binomials() {
        assert_eq!(quantum_binomial(2, 1, Node::One), p("q^-1 + q"));
        assert_eq!(
            quantum_binomial(4, 2, Node::One),
            p("q^-4 + q^-2 + 2 + q^2 + q^4")
        );
        assert_eq!(quantum_binomial(2, 3, Node::One), LaurentPoly::zero());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_not_silent() {
        let big = LaurentPoly::constant(i64::MAX / 2 + 1);
        let _ = &big + &big;
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i32..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().iter().all(|&(_, c)| c != 0));
        }

        #[test]
        fn bar_is_an_involutive_ring_map(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }

        #[test]
        fn gamma_is_bar_fixed_and_close(a in arb_poly()) {
            let g = a.gamma_symmetrize();
            prop_assert!(g.is_bar_invariant());
            prop_assert!((&a - &g).in_q_zq());
        }

        #[test]
        fn exact_divide_inverts_multiplication(a in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!((&a * &d).exact_divide(&d).unwrap(), a);
        }

        #[test]
        fn quantum_integers_are_bar_fixed(m in 0u32..12, two in any::<bool>()) {
            let node = if two { Node::Two } else { Node::One };
            prop_assert!(quantum_integer(m, node).is_bar_invariant());
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
