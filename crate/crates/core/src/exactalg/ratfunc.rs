use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::scalar::{Field, Ring};

/// Rational function num/den in t, den monic and coprime to num.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

pub fn poly_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r;
    }
    match x.leading() {
        Some(l) => x.scale(&l.inv().unwrap()),
        None => x,
    }
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let g = poly_gcd(&num, &den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let l = d.leading().unwrap().inv().unwrap();
        n = n.scale(&l);
        d = d.scale(&l);
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    /// Polynomial part of the expansion at infinity.
    pub fn polynomial_part(&self) -> Poly<F> {
        self.num.div_rem(&self.den).0
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        RatFunc::new(self.num * o.den.clone() + o.num * self.den.clone(), self.den * o.den)
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        RatFunc::new(self.num * o.num, self.den * o.den)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::from_poly(Poly::from_i64(v))
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl<F: Field + fmt::Display> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}
