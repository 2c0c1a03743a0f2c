//! Exact integer polynomials and certified largest real roots.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial with coefficients stored lowest degree first. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[d] = BigInt::one();
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact sign of `p(num / 2^exp)`.
    fn sign_at(&self, x: &Dyadic) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * &x.num + (c << (x.exp as usize * (d - i)));
        }
        sign(&acc)
    }
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// `num / 2^exp`.
#[derive(Debug, Clone)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.exp as i32)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial of the amalgamation of `H` at `u` with `K` at
/// `v`: `pH * pKv + pHu * pK - x * pHu * pKv`.
pub fn amalgamate_poly(
    p_h: &IntPolynomial,
    p_hu: &IntPolynomial,
    p_k: &IntPolynomial,
    p_kv: &IntPolynomial,
) -> Result<IntPolynomial> {
    let one_less = |big: &IntPolynomial, small: &IntPolynomial| match (big.degree(), small.degree())
    {
        (Some(b), Some(s)) => b == s + 1,
        _ => false,
    };
    if !one_less(p_h, p_hu) || !one_less(p_k, p_kv) {
        return Err(Error::contract(
            "vertex-deleted polynomials must have degree one less than their parents",
        ));
    }
    let x = IntPolynomial::monomial(1);
    let a = p_h * p_kv;
    let b = p_hu * p_k;
    let c = &(&x * p_hu) * p_kv;
    Ok(&(&a + &b) - &c)
}

/// Largest real root of `p` to within `tol`, searched on `[0, 1 + max|c_i|]`.
///
/// For `x` above every root, `p` and all its derivatives share the sign of
/// the leading coefficient; for a real-rooted `p` that predicate fails
/// everywhere below the largest root, so it is bisected exactly on dyadic
/// rationals. The final bracket must straddle a sign change of `p` (or hit a
/// root exactly), otherwise [`Error::NoSignChange`] is returned.
pub fn largest_root(p: &IntPolynomial, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::contract("tolerance must be positive"));
    }
    let Some(lead) = p.leading() else {
        return Err(Error::NoSignChange);
    };
    let p = if lead.is_negative() { -p } else { p.clone() };
    let lead = p.leading().cloned().unwrap_or_default();
    let max_c = p.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound: BigInt = max_c / &lead + 2;

    let mut derivs = vec![p.clone()];
    while derivs.last().and_then(IntPolynomial::degree).unwrap_or(0) > 0 {
        let d = derivs.last().map(IntPolynomial::derivative).unwrap_or_default();
        derivs.push(d);
    }
    let above_all_roots = |x: &Dyadic| derivs.iter().all(|d| d.sign_at(x) > 0);

    let mut lo = Dyadic {
        num: BigInt::zero(),
        exp: 0,
    };
    let mut hi = Dyadic {
        num: bound,
        exp: 0,
    };
    if above_all_roots(&lo) {
        return Err(Error::NoSignChange);
    }
    while hi.to_f64() - lo.to_f64() >= tol {
        let mid = Dyadic {
            num: &lo.num + &hi.num,
            exp: lo.exp + 1,
        };
        lo = Dyadic {
            num: &lo.num << 1usize,
            exp: lo.exp + 1,
        };
        hi = Dyadic {
            num: &hi.num << 1usize,
            exp: hi.exp + 1,
        };
        if above_all_roots(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        if lo.exp > 200 {
            break;
        }
    }
    if p.sign_at(&lo) == 0 {
        // an exact hit is a crossing only for odd multiplicity
        let order = derivs.iter().position(|d| d.sign_at(&lo) != 0).unwrap_or(0);
        return if order % 2 == 1 {
            Ok(lo.to_f64())
        } else {
            Err(Error::NoSignChange)
        };
    }
    if p.sign_at(&lo) > 0 || p.sign_at(&hi) < 0 {
        return Err(Error::NoSignChange);
    }
    Ok(0.5 * (lo.to_f64() + hi.to_f64()))
}
