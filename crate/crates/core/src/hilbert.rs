//! Exact Hilbert polynomials and Hilbert functions of diagram structures,
//! the twisted free decomposition of the structure sheaf with its algebra
//! multiplication, and Hilbert-function equivalence of diagrams.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::{BoxCoord, Diagram};
use crate::error::{Error, Result};

/// Polynomial in one variable `d` with exact rational coefficients, stored
/// low degree first with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        ExactPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPolynomial {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients `c_0..c_deg`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn value(&self, d: i64) -> BigRational {
        let x = BigRational::from_integer(d.into());
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn scale(&self, factor: &BigRational) -> ExactPolynomial {
        ExactPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                a + b
            })
            .collect();
        ExactPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for ExactPolynomial {
    /// Highest degree first, e.g. `9*d - 11` or `1/2*d^2 + 1/2*d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if power == 1 {
                        write!(f, "d")?;
                    } else {
                        write!(f, "d^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact binomial coefficient `C(top, k)`.
pub(crate) fn binomial(top: u64, k: u64) -> u128 {
    assert!(top >= k, "binomial needs top >= k");
    let mut result: u128 = 1;
    for i in 1..=k as u128 {
        result = result
            .checked_mul(top as u128 - k as u128 + i)
            .expect("binomial coefficient exceeds u128");
        result /= i;
    }
    result
}

/// Euler characteristic of a twist on n-dimensional projective space, as a
/// polynomial in `d`: the degree-n polynomial `C(n + d - shift, n)`.
///
/// Support dimension -1 (an empty support) gives the zero polynomial.
pub fn b_poly(n: i32, shift: u32) -> ExactPolynomial {
    assert!(n >= -1, "support dimension must be at least -1");
    if n == -1 {
        return ExactPolynomial::zero();
    }
    let mut poly = ExactPolynomial::one();
    let mut factorial = BigInt::one();
    for t in 1..=n as i64 {
        let linear = ExactPolynomial::from_integers(&[t - shift as i64, 1]);
        poly = &poly * &linear;
        factorial *= t;
    }
    poly.scale(&BigRational::new(BigInt::one(), factorial))
}

/// Hilbert polynomial of the structure with support dimension `n`: the sum
/// of `b_poly(n, w)` over the box weights `w` of the diagram.
pub fn hilbert_polynomial(d: &Diagram, n: i32) -> ExactPolynomial {
    let mut total = ExactPolynomial::zero();
    for (w, &count) in d.diagonal_profile().counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        let term = b_poly(n, w as u32).scale(&BigRational::from_integer(count.into()));
        total = &total + &term;
    }
    total
}

/// Hilbert function value at `deg`: boxes of weight beyond `deg` contribute
/// nothing, the rest contribute the section count of their twist. Equals the
/// brute-force standard-monomial count in the ambient ring of the structure.
pub fn hilbert_function(d: &Diagram, n: u32, deg: u32) -> u64 {
    let mut total: u128 = 0;
    for (w, &count) in d.diagonal_profile().counts().iter().enumerate() {
        let w = w as u32;
        if w > deg {
            break;
        }
        total += count as u128 * binomial((n + deg - w) as u64, n as u64);
    }
    total.try_into().expect("Hilbert function value exceeds u64")
}

/// Number of boxes; also n! times the leading coefficient of the Hilbert
/// polynomial for every positive support dimension.
pub fn multiplicity(d: &Diagram) -> u64 {
    d.box_count()
}

/// The structure sheaf as a sum of twisted line bundles on the support, one
/// summand of twist `-w` per box of weight `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDecomposition {
    support_dim: i32,
    weights: Vec<u32>,
}

impl StructureDecomposition {
    pub fn support_dim(&self) -> i32 {
        self.support_dim
    }

    /// Box weights in increasing order, one entry per box.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn multiplicity(&self) -> u64 {
        self.weights.len() as u64
    }

    pub fn hilbert_polynomial(&self) -> ExactPolynomial {
        self.weights
            .iter()
            .fold(ExactPolynomial::zero(), |acc, &w| {
                &acc + &b_poly(self.support_dim, w)
            })
    }
}

impl fmt::Display for StructureDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weights.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        let mut i = 0;
        while i < self.weights.len() {
            let w = self.weights[i];
            let count = self.weights[i..].iter().take_while(|&&v| v == w).count();
            let base = if w == 0 {
                "O".to_string()
            } else {
                format!("O(-{w})")
            };
            terms.push(if count == 1 {
                base
            } else {
                format!("{base}^{count}")
            });
            i += count;
        }
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn structure_decomposition(d: &Diagram, n: i32) -> StructureDecomposition {
    let mut weights: Vec<u32> = d.boxes().iter().map(|b| b.weight()).collect();
    weights.sort_unstable();
    StructureDecomposition {
        support_dim: n,
        weights,
    }
}

/// Product of two basis sections in the structure algebra: the coordinatewise
/// sum when it stays inside the diagram, otherwise zero (`None`).
pub fn algebra_multiply(d: &Diagram, a: &BoxCoord, b: &BoxCoord) -> Result<Option<BoxCoord>> {
    for factor in [a, b] {
        if !d.contains(factor) {
            return Err(Error::BoxNotInDiagram {
                coord: factor.to_string(),
            });
        }
    }
    let product = a.entrywise_sum(b);
    Ok(if d.contains(&product) {
        Some(product)
    } else {
        None
    })
}

/// Equality of Hilbert functions, decided on the diagonal profiles.
pub fn same_hilbert_function(a: &Diagram, b: &Diagram) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.diagonal_profile() == b.diagonal_profile())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Partition;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn b_poly_small_cases() {
        assert_eq!(b_poly(1, 0), ExactPolynomial::from_integers(&[1, 1]));
        assert_eq!(b_poly(1, 3), ExactPolynomial::from_integers(&[-2, 1]));
        assert_eq!(
            b_poly(2, 1),
            ExactPolynomial::from_coeffs(vec![rat(0, 1), rat(1, 2), rat(1, 2)])
        );
        assert_eq!(b_poly(0, 7), ExactPolynomial::one());
        assert!(b_poly(-1, 0).is_zero());
    }

    #[test]
    fn hilbert_polynomials_of_the_two_line_structures() {
        let nine_d_minus_11 = ExactPolynomial::from_integers(&[-11, 9]);
        assert_eq!(hilbert_polynomial(&part(&[5, 4]).to_diagram(), 1), nine_d_minus_11);
        assert_eq!(
            hilbert_polynomial(&part(&[6, 2, 1]).to_diagram(), 1),
            nine_d_minus_11
        );
        // A single box is the reduced support itself.
        assert_eq!(hilbert_polynomial(&part(&[1]).to_diagram(), 2), b_poly(2, 0));
        assert!(hilbert_polynomial(&Diagram::empty(2), 1).is_zero());
    }

    #[test]
    fn hilbert_function_values() {
        let t = part(&[5, 4]).to_diagram();
        let t2 = part(&[6, 2, 1]).to_diagram();
        assert_eq!(hilbert_function(&t, 1, 1), 4);
        assert_eq!(hilbert_function(&t2, 1, 1), 4);
        // The functions differ in degrees 2 and 3 and nowhere else.
        assert_eq!(hilbert_function(&t, 1, 2), 9);
        assert_eq!(hilbert_function(&t2, 1, 2), 10);
        assert_eq!(hilbert_function(&t, 1, 3), 16);
        assert_eq!(hilbert_function(&t2, 1, 3), 17);
        for deg in [0, 1, 4, 5, 6, 10] {
            assert_eq!(hilbert_function(&t, 1, deg), hilbert_function(&t2, 1, deg));
        }
        for n in 0..4 {
            assert_eq!(hilbert_function(&t, n, 0), 1);
        }
    }

    #[test]
    fn hilbert_function_agrees_with_polynomial_beyond_max_weight() {
        let d = part(&[5, 4]).to_diagram();
        let p = hilbert_polynomial(&d, 1);
        for deg in 5..12 {
            assert_eq!(
                BigRational::from_integer(hilbert_function(&d, 1, deg).into()),
                p.value(deg as i64)
            );
        }
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&part(&[4, 4, 3, 1]).to_diagram()), 12);
        assert_eq!(multiplicity(&Diagram::empty(2)), 0);
        assert_eq!(multiplicity(&part(&[7, 7, 4, 2]).to_diagram()), 20);
    }

    #[test]
    fn decomposition_weights() {
        assert_eq!(
            structure_decomposition(&part(&[2, 1]).to_diagram(), 1).weights(),
            &[0, 1, 1]
        );
        assert_eq!(structure_decomposition(&part(&[1]).to_diagram(), 1).weights(), &[0]);
        let dec = structure_decomposition(&part(&[4, 1]).to_diagram(), 1);
        assert_eq!(dec.weights(), &[0, 1, 1, 2, 3]);
        assert_eq!(
            dec.hilbert_polynomial(),
            hilbert_polynomial(&part(&[4, 1]).to_diagram(), 1)
        );
        assert_eq!(dec.to_string(), "O + O(-1)^2 + O(-2) + O(-3)");
    }

    #[test]
    fn algebra_multiplication_uses_membership() {
        let bx = |i, j| BoxCoord::new(vec![i, j]);
        let d = part(&[2, 1]).to_diagram();
        assert_eq!(
            algebra_multiply(&d, &bx(1, 0), &bx(0, 0)).unwrap(),
            Some(bx(1, 0))
        );
        assert_eq!(algebra_multiply(&d, &bx(1, 0), &bx(1, 0)).unwrap(), None);

        let square = part(&[2, 2]).to_diagram();
        assert_eq!(
            algebra_multiply(&square, &bx(1, 0), &bx(0, 1)).unwrap(),
            Some(bx(1, 1))
        );

        assert!(matches!(
            algebra_multiply(&d, &bx(5, 5), &bx(0, 0)),
            Err(Error::BoxNotInDiagram { .. })
        ));
    }

    #[test]
    fn hilbert_function_equivalence() {
        let a = part(&[3, 1]).to_diagram();
        let b = part(&[2, 2]).to_diagram();
        assert!(same_hilbert_function(&a, &b).unwrap());
        assert!(!same_hilbert_function(
            &part(&[5, 4]).to_diagram(),
            &part(&[6, 2, 1]).to_diagram()
        )
        .unwrap());
        assert!(same_hilbert_function(&a, &a).unwrap());
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(ExactPolynomial::from_integers(&[-11, 9]).to_string(), "9*d - 11");
        assert_eq!(ExactPolynomial::from_integers(&[1, 1]).to_string(), "d + 1");
        assert_eq!(ExactPolynomial::zero().to_string(), "0");
        assert_eq!(b_poly(2, 1).to_string(), "1/2*d^2 + 1/2*d");
        assert_eq!(ExactPolynomial::from_integers(&[0, -1]).to_string(), "-d");
    }

    #[test]
    fn polynomial_value_and_arithmetic() {
        let p = ExactPolynomial::from_integers(&[-11, 9]);
        assert_eq!(p.value(6), rat(43, 1));
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.leading_coefficient(), Some(&rat(9, 1)));
    }
}
