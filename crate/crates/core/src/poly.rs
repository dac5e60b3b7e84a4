//! Exact polynomials in the order parameter `p` with unbounded integer
//! coefficients.
//!
//! Coefficients arising from `n`-chord diagrams have degree exactly `n`, a
//! zero constant term, and integer coefficients that overflow 64-bit
//! intermediates well before `n = 10`, so everything here is [`BigInt`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// A polynomial in `p`, stored dense with ascending powers.
///
/// Canonical form: trailing zero coefficients are stripped, so the zero
/// polynomial is the empty list and `coeffs.last()` is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PPolynomial {
    coeffs: Vec<BigInt>,
}

impl PPolynomial {
    pub fn zero() -> Self {
        PPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PPolynomial::constant(1)
    }

    /// The variable `p` itself.
    pub fn var() -> Self {
        PPolynomial::from_coeffs([0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        PPolynomial::normalized(vec![c.into()])
    }

    /// `c * p^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        PPolynomial::normalized(coeffs)
    }

    /// Build from ascending-power coefficients; trailing zeros are stripped.
    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        PPolynomial::normalized(coeffs.into_iter().map(Into::into).collect())
    }

    fn normalized(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PPolynomial { coeffs }
    }

    /// The falling factorial `p (p-1) ... (p-k+1)`; `k = 0` gives 1.
    pub fn falling_factorial(k: usize) -> Self {
        let mut acc = PPolynomial::one();
        for i in 0..k {
            acc = &acc * &PPolynomial::from_coeffs([-(i as i64), 1]);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending-power coefficient slice (canonical, no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `p^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, p: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c;
        }
        acc
    }

    pub fn eval_int(&self, p: u32) -> BigInt {
        self.eval(&BigInt::from(p))
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        PPolynomial::normalized(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = PPolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// JSON rendering: ascending powers, coefficients as decimal strings.
    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// LaTeX-friendly compact form.
    ///
    /// Coefficients of the form `p^a (2-p)^b` are written that way; anything
    /// else factors out the highest power of `p` dividing it, e.g.
    /// `-p(p^2-6p+4)`. Falls back to the expanded form for constants.
    pub fn latex_form(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let a = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let reduced = PPolynomial::normalized(self.coeffs[a..].to_vec());
        let b = reduced.degree().unwrap_or(0);
        if reduced == PPolynomial::from_coeffs([2, -1]).pow(b) {
            let mut s = String::new();
            s.push_str(&power_factor("p", a));
            s.push_str(&power_factor("(2-p)", b));
            if s.is_empty() {
                s.push('1');
            }
            return s;
        }
        if b == 0 {
            // c * p^a
            return self.to_string();
        }
        let negative = reduced.leading_coeff().is_some_and(Signed::is_negative);
        let inner = if negative { -&reduced } else { reduced };
        format!(
            "{}{}({inner})",
            if negative { "-" } else { "" },
            power_factor("p", a)
        )
    }
}

fn power_factor(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        2..=9 => format!("{base}^{e}"),
        _ => format!("{base}^{{{e}}}"),
    }
}

/// Expanded form, descending powers, explicit signs: `-p^3+6p^2-4p`.
impl fmt::Display for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if d == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "p")?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &PPolynomial {
    type Output = PPolynomial;
    fn add(self, rhs: &PPolynomial) -> PPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        PPolynomial::normalized(coeffs)
    }
}

impl Sub for &PPolynomial {
    type Output = PPolynomial;
    fn sub(self, rhs: &PPolynomial) -> PPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        PPolynomial::normalized(coeffs)
    }
}

impl Mul for &PPolynomial {
    type Output = PPolynomial;
    fn mul(self, rhs: &PPolynomial) -> PPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return PPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PPolynomial::normalized(coeffs)
    }
}

impl Neg for &PPolynomial {
    type Output = PPolynomial;
    fn neg(self) -> PPolynomial {
        PPolynomial::normalized(self.coeffs.iter().map(Neg::neg).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for PPolynomial {
            type Output = PPolynomial;
            fn $method(self, rhs: PPolynomial) -> PPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PPolynomial> for PPolynomial {
            type Output = PPolynomial;
            fn $method(self, rhs: &PPolynomial) -> PPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for PPolynomial {
    type Output = PPolynomial;
    fn neg(self) -> PPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_expanded_descending() {
        let p = PPolynomial::from_coeffs([0, -4, 6, -1]);
        assert_eq!(p.to_string(), "-p^3+6p^2-4p");
        assert_eq!(PPolynomial::zero().to_string(), "0");
        assert_eq!(PPolynomial::var().to_string(), "p");
        assert_eq!(PPolynomial::from_coeffs([0, -15, 15]).to_string(), "15p^2-15p");
        assert_eq!(PPolynomial::from_coeffs([1, 0, 1]).to_string(), "p^2+1");
        assert_eq!(PPolynomial::constant(-3).to_string(), "-3");
        assert_eq!(PPolynomial::from_coeffs([0, 2, -1]).to_string(), "-p^2+2p");
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(PPolynomial::falling_factorial(0), PPolynomial::one());
        assert_eq!(PPolynomial::falling_factorial(1), PPolynomial::var());
        let ff3 = PPolynomial::falling_factorial(3);
        assert_eq!(ff3, PPolynomial::from_coeffs([0, 2, -3, 1]));
        assert_eq!(ff3.eval_int(5), BigInt::from(60));
        // k > p evaluates to 0: the product passes through a zero factor.
        assert_eq!(PPolynomial::falling_factorial(5).eval_int(3), BigInt::zero());
    }

    #[test]
    fn arithmetic_and_eval_agree() {
        let a = PPolynomial::from_coeffs([0, 2, -1]); // p(2-p)
        let b = PPolynomial::var() * PPolynomial::from_coeffs([2, -1]);
        assert_eq!(a, b);
        let sq = a.pow(2);
        for p in 0..6u32 {
            assert_eq!(sq.eval_int(p), a.eval_int(p).pow(2));
        }
        assert_eq!((&a - &a), PPolynomial::zero());
        assert_eq!((&a + &(-&a)), PPolynomial::zero());
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = PPolynomial::from_coeffs([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(PPolynomial::from_coeffs([0, 0]).degree(), None);
    }

    #[test]
    fn latex_form_factored_families() {
        assert_eq!(PPolynomial::monomial(1, 2).latex_form(), "p^2");
        assert_eq!(PPolynomial::from_coeffs([0, 2, -1]).latex_form(), "p(2-p)");
        let p2_2mp = PPolynomial::monomial(1, 2) * PPolynomial::from_coeffs([2, -1]);
        assert_eq!(p2_2mp.latex_form(), "p^2(2-p)");
        let tri = PPolynomial::from_coeffs([0, -4, 6, -1]);
        assert_eq!(tri.latex_form(), "-p(p^2-6p+4)");
        assert_eq!(PPolynomial::from_coeffs([0, 0, 15]).latex_form(), "15p^2");
        assert_eq!(PPolynomial::one().latex_form(), "1");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let p = PPolynomial::from_coeffs([0, 2, -1]);
        assert_eq!(p.to_json().to_string(), r#"{"coeffs":["0","2","-1"]}"#);
    }
}
