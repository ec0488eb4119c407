//! Laurent polynomials in one variable with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::BigRational;

/// Sparse Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coef: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiplies by `var^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Exponent `i` becomes `-i`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Keeps only exponents divisible by `d` and divides them by `d`.
    /// Returns `None` if some exponent is not divisible.
    pub fn compress_exponents(&self, d: i64) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e.rem_euclid(d) != 0 {
                return None;
            }
            terms.insert(e / d, c.clone());
        }
        Some(Self { terms })
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact value at a nonzero integer (or at zero if no negative exponent).
    pub fn eval_int(&self, t0: i64) -> Result<BigRational> {
        if t0 == 0 {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::Input("evaluation at 0 with negative exponents".into()));
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let base = BigRational::from_integer(BigInt::from(t0));
        Ok(self
            .terms
            .iter()
            .map(|(&e, c)| BigRational::from_integer(c.clone()) * Pow::pow(&base, e as i32))
            .fold(BigRational::zero(), |a, b| a + b))
    }

    /// Value at the imaginary unit, `i^e` reduced through `e mod 4`.
    pub fn eval_at_i(&self) -> GaussianInt {
        let mut z = GaussianInt::default();
        for (&e, c) in &self.terms {
            match e.rem_euclid(4) {
                0 => z.re += c,
                1 => z.im += c,
                2 => z.re -= c,
                _ => z.im -= c,
            }
        }
        z
    }

    /// Value at a primitive cube root of unity, written `a + b·ω`.
    pub fn eval_at_omega(&self) -> EisensteinInt {
        let mut z = EisensteinInt::default();
        for (&e, c) in &self.terms {
            match e.rem_euclid(3) {
                0 => z.a += c,
                1 => z.b += c,
                // ω² = -1 - ω
                _ => {
                    z.a -= c;
                    z.b -= c;
                }
            }
        }
        z
    }

    pub fn residue_signed_sum(&self, sum: ResidueSum) -> BigInt {
        self.terms
            .iter()
            .map(|(&e, c)| c * BigInt::from(sum.weight(e)))
            .sum()
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mag = c.abs();
            if e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }

    /// Parses the text form, e.g. `-t^-4+t^-3+t^-1` or `2*A^3-1`.
    pub fn parse_in(s: &str, var: char) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("{why} in polynomial {s:?}"));
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(bad("empty input"));
        }
        let mut p = Self::zero();
        let mut i = 0;
        let read_int = |i: &mut usize| -> Option<BigInt> {
            let start = *i;
            while *i < src.len() && src[*i].is_ascii_digit() {
                *i += 1;
            }
            (start < *i).then(|| src[start..*i].iter().collect::<String>().parse().unwrap())
        };
        while i < src.len() {
            let mut sign = BigInt::one();
            if src[i] == '+' || src[i] == '-' {
                if src[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad("missing sign between terms"));
            }
            let coef = read_int(&mut i);
            if coef.is_some() && i < src.len() && src[i] == '*' {
                i += 1;
                if src.get(i) != Some(&var) {
                    return Err(bad("expected variable after '*'"));
                }
            }
            let exp = if i < src.len() && src[i] == var {
                i += 1;
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    let neg = src.get(i) == Some(&'-');
                    if neg {
                        i += 1;
                    }
                    let e = read_int(&mut i).ok_or_else(|| bad("missing exponent"))?;
                    let e: i64 = e.try_into().map_err(|_| bad("exponent out of range"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else if coef.is_some() {
                0
            } else {
                return Err(bad("expected coefficient or variable"));
            };
            p.add_term(exp, sign * coef.unwrap_or_else(BigInt::one));
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_in(s, 't')
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: i64,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    var: String,
    terms: Vec<JsonTerm>,
}

impl LaurentPoly {
    pub fn to_json_value(&self, var: &str) -> serde_json::Value {
        serde_json::to_value(JsonPoly {
            var: var.into(),
            terms: self
                .terms
                .iter()
                .map(|(&exp, c)| JsonTerm { exp, coef: c.to_string() })
                .collect(),
        })
        .expect("polynomial serializes")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value("t").serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in raw.terms {
            let c: BigInt = t.coef.parse().map_err(D::Error::custom)?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}

/// `re + im·i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: im.into() }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

/// `a + b·ω` with `ω = e^{2πi/3}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}w", self.a, self.b)
    }
}

/// Signed coefficient sums over residue classes of the exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResidueSum {
    /// `Σ_{i odd} c_i`
    L5,
    /// `Σ_{3|i} c_i`
    L6,
    /// `Σ_{3∤i} (-1)^{(i-1) mod 3} c_i`
    L7,
    /// `Σ_{3∤i} c_i`
    L8,
    /// `Σ_{i odd} (-1)^{(i-1)/2} c_i`
    L9,
}

impl ResidueSum {
    pub const ALL: [ResidueSum; 5] = [Self::L5, Self::L6, Self::L7, Self::L8, Self::L9];

    fn weight(self, e: i64) -> i64 {
        match self {
            Self::L5 => e.rem_euclid(2),
            Self::L6 => i64::from(e.rem_euclid(3) == 0),
            Self::L7 => match e.rem_euclid(3) {
                0 => 0,
                1 => 1,
                _ => -1,
            },
            Self::L8 => i64::from(e.rem_euclid(3) != 0),
            Self::L9 => match e.rem_euclid(4) {
                1 => 1,
                3 => -1,
                _ => 0,
            },
        }
    }
}

impl FromStr for ResidueSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L5" => Ok(Self::L5),
            "L6" => Ok(Self::L6),
            "L7" => Ok(Self::L7),
            "L8" => Ok(Self::L8),
            "L9" => Ok(Self::L9),
            _ => Err(Error::Input(format!("unknown residue-sum descriptor {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use proptest::prelude::*;

    fn trefoil() -> LaurentPoly {
        LaurentPoly::from_terms([(-4, -1), (-3, 1), (-1, 1)])
    }

    fn figure_eight() -> LaurentPoly {
        LaurentPoly::from_terms([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
    }

    #[test]
    fn ring_ops() {
        let a = LaurentPoly::from_terms([(1, 1), (0, 1)]);
        let b = LaurentPoly::from_terms([(1, 1), (0, -1)]);
        assert_eq!(&a * &b, LaurentPoly::from_terms([(2, 1), (0, -1)]));
        assert_eq!(&trefoil() * &LaurentPoly::one(), trefoil());
        let prod = &trefoil() * &figure_eight();
        assert_eq!((prod.min_exp(), prod.max_exp()), (Some(-6), Some(1)));
        assert_eq!(prod.eval_int(1).unwrap(), int(1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn integer_evaluation() {
        assert_eq!(trefoil().eval_int(1).unwrap(), int(1));
        assert_eq!(trefoil().eval_int(-1).unwrap(), int(-3));
        assert_eq!(LaurentPoly::zero().eval_int(5).unwrap(), int(0));
        assert_eq!(
            trefoil().eval_int(2).unwrap(),
            crate::exactnum::rational(-1 + 2 + 8, 16).unwrap()
        );
        assert!(trefoil().eval_int(0).is_err());
    }

    #[test]
    fn root_of_unity_evaluation() {
        assert_eq!(figure_eight().eval_at_i(), GaussianInt::new(-1, 0));
        assert_eq!(LaurentPoly::one().eval_at_i(), GaussianInt::new(1, 0));
        assert_eq!(trefoil().eval_at_i(), GaussianInt::new(-1, 0));
        assert_eq!(trefoil().eval_at_omega(), EisensteinInt::new(1, 0));
        assert_eq!(LaurentPoly::one().eval_at_omega(), EisensteinInt::new(1, 0));
        let cyclo = LaurentPoly::from_terms([(0, 1), (1, 1), (2, 1)]);
        assert_eq!(cyclo.eval_at_omega(), EisensteinInt::new(0, 0));
    }

    #[test]
    fn residue_sums() {
        assert_eq!(trefoil().residue_signed_sum(ResidueSum::L6), BigInt::from(1));
        assert_eq!(figure_eight().residue_signed_sum(ResidueSum::L8), BigInt::from(0));
        assert_eq!(trefoil().residue_signed_sum(ResidueSum::L9), BigInt::from(0));
        assert_eq!(trefoil().residue_signed_sum(ResidueSum::L9), trefoil().eval_at_i().im);
        assert!("L4".parse::<ResidueSum>().is_err());
        assert_eq!("L7".parse::<ResidueSum>(), Ok(ResidueSum::L7));
    }

    #[test]
    fn inversion() {
        assert_eq!(trefoil().invert_variable(), LaurentPoly::from_terms([(4, -1), (3, 1), (1, 1)]));
        assert_eq!(figure_eight().invert_variable(), figure_eight());
        assert_eq!(LaurentPoly::one().invert_variable(), LaurentPoly::one());
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(trefoil().to_string(), "-t^-4+t^-3+t^-1");
        assert_eq!(figure_eight().to_string(), "t^-2-t^-1+1-t+t^2");
        assert_eq!("-t^-4+t^-3+t^-1".parse::<LaurentPoly>().unwrap(), trefoil());
        assert_eq!("t^-2 - t^-1 + 1 - t + t^2".parse::<LaurentPoly>().unwrap(), figure_eight());
        assert_eq!("2*t^3-7".parse::<LaurentPoly>().unwrap(), LaurentPoly::from_terms([(3, 2), (0, -7)]));
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("t t".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        let json = serde_json::to_string(&trefoil()).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"coef":"-1","exp":-4},{"coef":"1","exp":-3},{"coef":"1","exp":-1}],"var":"t"}"#
        );
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, trefoil());
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(p in small_poly(), q in small_poly(), t0 in prop::sample::select(vec![1i64, -1, 2])) {
            let lhs = (&p * &q).eval_int(t0).unwrap();
            prop_assert_eq!(lhs, p.eval_int(t0).unwrap() * q.eval_int(t0).unwrap());
        }

        #[test]
        fn inversion_is_involution(p in small_poly()) {
            prop_assert_eq!(p.invert_variable().invert_variable(), p);
        }

        #[test]
        fn text_form_round_trips(p in small_poly()) {
            prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        }

        #[test]
        fn gaussian_parts_match_residue_sums(p in small_poly()) {
            let z = p.eval_at_i();
            prop_assert_eq!(z.im, p.residue_signed_sum(ResidueSum::L9));
            let even: BigInt = p.terms().filter(|(e, _)| e.rem_euclid(2) == 0)
                .map(|(e, c)| if e.rem_euclid(4) == 0 { c.clone() } else { -c }).sum();
            prop_assert_eq!(z.re, even);
        }

        #[test]
        fn eisenstein_parts_match_residue_sums(p in small_poly()) {
            // Σ_{3|i} c_i − ½Σ_{3∤i} c_i is the real part, so 2·Re = 2a − b.
            let z = p.eval_at_omega();
            let l6 = p.residue_signed_sum(ResidueSum::L6);
            let l7 = p.residue_signed_sum(ResidueSum::L7);
            let l8 = p.residue_signed_sum(ResidueSum::L8);
            prop_assert_eq!(BigInt::from(2) * &z.a - &z.b, BigInt::from(2) * l6 - l8);
            // Im part is (√3/2)·b and equals (√3/2)·L7.
            prop_assert_eq!(z.b, l7);
        }
    }
}
