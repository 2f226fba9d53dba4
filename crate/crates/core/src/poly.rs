//! Exact integer polynomials: the arithmetic substrate for everything else.
//!
//! Coefficients are arbitrary-precision (`BigInt`) and stored densely in
//! ascending order with no trailing zeros, so structural equality is
//! mathematical equality. Two text forms are supported and round-trip
//! loss-free: comma-separated coefficients from the constant term upward
//! (`"0,0,3,1"` is x^3+3x^2) and monomial sums (`"x^3+3x^2"`).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::PolyError;

/// Dense univariate polynomial over the integers.
///
/// The zero polynomial is the empty coefficient vector; everything else keeps
/// a nonzero leading coefficient, which `normalize` enforces after each
/// operation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c * x^k
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial flattened to 0; convenient for bounds.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// k-th Hasse derivative: coefficients `C(i, k) * a_i` shifted down by k.
    /// Integer-valued stand-in for the k-th derivative divided by k!.
    pub fn hasse_derivative(&self, k: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, c)| c * num_integer::binomial(BigInt::from(i), BigInt::from(k)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute x -> -x.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// self(other(x)) by Horner's rule on the outer polynomial.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// (a*x + b)^k expanded by exact binomials.
    pub fn linear_power(a: &BigInt, b: &BigInt, k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        for i in 0..=k {
            // C(k, i) * a^i * b^(k-i) on x^i
            let binom = num_integer::binomial(BigInt::from(k), BigInt::from(i));
            coeffs.push(binom * a.pow(i as u32) * b.pow((k - i) as u32));
        }
        Self::from_coeffs(coeffs)
    }

    /// GCD of all coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content; sign of the leading coefficient is preserved.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Flip signs so the leading coefficient is positive (zero is unchanged).
    pub fn sign_normalized(&self) -> Self {
        match self.leading() {
            Some(lc) if lc.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Parse either text form; see the module doc.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(PolyError::Parse("empty polynomial text".into()));
        }
        if trimmed.contains(',') {
            parse_comma_form(trimmed)
        } else {
            parse_monomial_form(trimmed)
        }
    }

    /// Canonical monomial rendering, e.g. `y^4-6y^2+8y` with `var = 'y'`.
    pub fn display_with(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let lead = out.is_empty();
            if c.is_negative() {
                out.push('-');
            } else if !lead {
                out.push('+');
            }
            let mag = c.abs();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push(var);
                if k > 1 {
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }

    /// Comma form, constant term first: x^3+3x^2 -> `0,0,3,1`.
    pub fn display_comma(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('x'))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.display_with('x'))
    }
}

fn parse_comma_form(text: &str) -> Result<IntPolynomial, PolyError> {
    let mut coeffs = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        let c = BigInt::from_str(piece)
            .map_err(|_| PolyError::Parse(format!("bad coefficient {piece:?}")))?;
        coeffs.push(c);
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Monomial-sum grammar: signed terms of the form `[coef][*][var[^exp]]`,
/// one variable letter per polynomial, whitespace ignored.
fn parse_monomial_form(text: &str) -> Result<IntPolynomial, PolyError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bytes = compact.as_bytes();
    if bytes.is_empty() {
        return Err(PolyError::Parse("empty polynomial text".into()));
    }

    let mut terms: Vec<(BigInt, usize)> = Vec::new();
    let mut var: Option<char> = None;
    let mut pos = 0usize;

    while pos < bytes.len() {
        let mut sign = 1i32;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        if pos >= bytes.len() {
            return Err(PolyError::Parse(format!("dangling sign in {text:?}")));
        }

        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coef = if pos > digits_start {
            BigInt::from_str(&compact[digits_start..pos]).expect("digits parse")
        } else {
            BigInt::one()
        };
        if sign < 0 {
            coef = -coef;
        }

        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
        }

        let mut exp = 0usize;
        if pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
            let v = bytes[pos] as char;
            match var {
                None => var = Some(v),
                Some(prev) if prev == v => {}
                Some(prev) => {
                    return Err(PolyError::Parse(format!(
                        "mixed variables {prev:?} and {v:?} in {text:?}"
                    )))
                }
            }
            pos += 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let e_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == e_start {
                    return Err(PolyError::Parse(format!("missing exponent in {text:?}")));
                }
                exp = compact[e_start..pos]
                    .parse::<usize>()
                    .map_err(|_| PolyError::Parse(format!("exponent too large in {text:?}")))?;
            } else {
                exp = 1;
            }
        } else if pos == digits_start {
            // neither digits nor a variable: unparseable character
            return Err(PolyError::Parse(format!(
                "unexpected character {:?} in {text:?}",
                compact[pos..].chars().next().unwrap()
            )));
        }

        terms.push((coef, exp));
    }

    let deg = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (c, e) in terms {
        coeffs[e] += c;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn parses_comma_form() {
        // 0,0,3,1 is x^3 + 3x^2
        let q = IntPolynomial::parse("0,0,3,1").unwrap();
        assert_eq!(q, p(&[0, 0, 3, 1]));
        assert_eq!(q.degree(), Some(3));
    }

    #[test]
    fn parses_monomial_form() {
        assert_eq!(IntPolynomial::parse("x^3+3x^2").unwrap(), p(&[0, 0, 3, 1]));
        assert_eq!(IntPolynomial::parse("y^3-27y").unwrap(), p(&[0, -27, 0, 1]));
        assert_eq!(IntPolynomial::parse("2x^4+x^3").unwrap(), p(&[0, 0, 0, 1, 2]));
        assert_eq!(IntPolynomial::parse("-x + 7").unwrap(), p(&[7, -1]));
        assert_eq!(IntPolynomial::parse("3*z^2 - 1").unwrap(), p(&[-1, 0, 3]));
        assert_eq!(IntPolynomial::parse("5").unwrap(), p(&[5]));
        assert_eq!(IntPolynomial::parse("x").unwrap(), p(&[0, 1]));
    }

    #[test]
    fn parse_rejects_bad_text() {
        assert!(IntPolynomial::parse("").is_err());
        assert!(IntPolynomial::parse("x^").is_err());
        assert!(IntPolynomial::parse("x+y").is_err());
        assert!(IntPolynomial::parse("3..2,1").is_err());
        assert!(IntPolynomial::parse("x^3+").is_err());
        assert!(IntPolynomial::parse("#").is_err());
    }

    #[test]
    fn display_round_trips() {
        let q = p(&[0, 8, -6, 0, 1]);
        assert_eq!(q.display_with('y'), "y^4-6y^2+8y");
        assert_eq!(IntPolynomial::parse(&q.display_with('y')).unwrap(), q);
        assert_eq!(q.display_comma(), "0,8,-6,0,1");
        assert_eq!(IntPolynomial::parse(&q.display_comma()).unwrap(), q);
        assert_eq!(IntPolynomial::zero().display_with('x'), "0");
        assert_eq!(IntPolynomial::parse("0").unwrap(), IntPolynomial::zero());
    }

    #[test]
    fn eval_matches_worked_values() {
        // eval(y^4-6y^2+8y, 9) = 6147
        let g = p(&[0, 8, -6, 0, 1]);
        assert_eq!(g.eval_i64(9), BigInt::from(6147));
        // eval(x^3+3x^2, 5) = 200
        let f = p(&[0, 0, 3, 1]);
        assert_eq!(f.eval_i64(5), BigInt::from(200));
        assert_eq!(f.eval_i64(-1), BigInt::from(2));
    }

    #[test]
    fn derivative_basics() {
        let f = p(&[0, 0, 3, 1]); // x^3+3x^2
        assert_eq!(f.derivative(), p(&[0, 6, 3])); // 3x^2+6x
        assert_eq!(p(&[7]).derivative(), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().derivative(), IntPolynomial::zero());
    }

    #[test]
    fn central_difference_is_exact_through_degree_two() {
        // (p(x+1) - p(x-1))/2 == p'(x) exactly when deg <= 2
        for q in [p(&[3, -2, 5]), p(&[0, 4]), p(&[9])] {
            let ahead = q.compose(&p(&[1, 1]));
            let behind = q.compose(&p(&[-1, 1]));
            let diff = ahead.sub(&behind);
            assert_eq!(diff, q.derivative().mul_scalar(&BigInt::from(2)));
        }
    }

    #[test]
    fn central_difference_correction_is_odd_hasse_tail() {
        // p(x+1) - p(x-1) == 2 * sum over odd k of H_k(p): the exact
        // second-order correction to the central difference.
        let q = p(&[1, -3, 0, 7, 2, -1, 4]);
        let ahead = q.compose(&p(&[1, 1]));
        let behind = q.compose(&p(&[-1, 1]));
        let mut odd_tail = IntPolynomial::zero();
        let mut k = 1;
        while k <= q.degree_or_zero() {
            odd_tail = odd_tail.add(&q.hasse_derivative(k));
            k += 2;
        }
        assert_eq!(ahead.sub(&behind), odd_tail.mul_scalar(&BigInt::from(2)));
        assert_eq!(q.hasse_derivative(1), q.derivative());
    }

    #[test]
    fn linear_power_expands_binomially() {
        let three = BigInt::from(3);
        let got = IntPolynomial::linear_power(&three, &three, 3); // (3x+3)^3
        assert_eq!(got, p(&[27, 81, 81, 27]));
        let byhand = p(&[3, 3]).mul(&p(&[3, 3])).mul(&p(&[3, 3]));
        assert_eq!(got, byhand);
    }

    #[test]
    fn compose_and_reflect() {
        let g = p(&[0, -27, 0, 1]); // y^3-27y
        assert_eq!(g.reflect(), p(&[0, 27, 0, -1]));
        let f = p(&[0, 0, 3, 1]);
        // 27*f(x) == g(3x+3) + 54
        let lhs = f.mul_scalar(&BigInt::from(27));
        let rhs = g.compose(&p(&[3, 3])).add(&p(&[54]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn content_and_primitive_part() {
        let q = p(&[6, -9, 12]);
        assert_eq!(q.content(), BigInt::from(3));
        assert_eq!(q.primitive_part(), p(&[2, -3, 4]));
        let neg = p(&[0, -4]);
        assert_eq!(neg.sign_normalized(), p(&[0, 4]));
        assert_eq!(IntPolynomial::zero().content(), BigInt::zero());
    }
}
