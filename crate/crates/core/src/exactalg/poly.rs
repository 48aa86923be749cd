use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Field, Ring};

/// Univariate polynomial in t, coefficients in ascending degree with
/// trailing zeros stripped. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable t.
    pub fn t() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, d: usize) -> Self {
        let mut v = vec![F::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// `None` stands for degree −∞.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> F {
        self.coeffs.get(d).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Substitute `t ↦ s(t)`.
    pub fn compose(&self, s: &Poly<F>) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| acc * s.clone() + Poly::constant(c.clone()))
    }

    /// Exact quotient and remainder.
    pub fn div_rem(&self, d: &Poly<F>) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top].clone() * inv.clone();
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - c.clone() * dc.clone();
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Field> Ring for Poly<F> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(F::from_i64(v))
    }
}

impl<F: Field + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let term = match d {
                0 => cs,
                _ => {
                    let var = if d == 1 { "t".to_string() } else { format!("t^{d}") };
                    if *c == F::one() {
                        var
                    } else if *c == -F::one() {
                        format!("-{var}")
                    } else if cs.contains('/') || cs.starts_with('-') {
                        format!("({cs})*{var}")
                    } else {
                        format!("{cs}*{var}")
                    }
                }
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + "))
    }
}
