//! Brute-force verification: exhaustive standard-monomial counting, exact
//! polynomial interpolation of degree tables, and the numerator check of the
//! two-variable resolution. Everything here is deliberately naive; its only
//! job is to be obviously correct.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::hilbert::ExactPolynomial;
use crate::ideal::MonomialIdeal;
use crate::resolution::DegreePair;

/// Default cap on the number of degree-d monomials a single count may visit.
pub const DEFAULT_MONOMIAL_CAP: u64 = 10_000_000;

/// Hilbert function values of the quotient by degree: entry `d` counts the
/// degree-d monomials in the ambient variables divisible by no generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    values: Vec<u64>,
}

impl DegreeTable {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, d: usize) -> Option<u64> {
        self.values.get(d).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Counts degree-d standard monomials by exhaustive recursion over exponent
/// vectors, with the default resource cap.
pub fn standard_monomial_count(ideal: &MonomialIdeal, d: u32) -> Result<u64> {
    standard_monomial_count_capped(ideal, d, DEFAULT_MONOMIAL_CAP)
}

pub fn standard_monomial_count_capped(ideal: &MonomialIdeal, d: u32, cap: u64) -> Result<u64> {
    let vars = ideal.vars().len();
    let ambient = monomials_of_degree(d as u64, vars as u64);
    if ambient > cap as u128 {
        return Err(Error::ResourceLimit {
            degree: d,
            needed: ambient.try_into().unwrap_or(u64::MAX),
            cap,
        });
    }
    let gens: Vec<&[u32]> = ideal.gens().iter().map(|g| g.exponents()).collect();
    let mut exps = vec![0u32; vars];
    Ok(count_rec(&gens, d, 0, &mut exps))
}

// Number of exponent vectors of length `vars` summing to `d`.
fn monomials_of_degree(d: u64, vars: u64) -> u128 {
    crate::hilbert::binomial(d + vars - 1, vars - 1)
}

fn count_rec(gens: &[&[u32]], remaining: u32, axis: usize, exps: &mut Vec<u32>) -> u64 {
    if axis + 1 == exps.len() {
        exps[axis] = remaining;
        let standard = !gens
            .iter()
            .any(|g| g.iter().zip(exps.iter()).all(|(ge, e)| ge <= e));
        exps[axis] = 0;
        return u64::from(standard);
    }
    let mut total = 0;
    for v in 0..=remaining {
        exps[axis] = v;
        total += count_rec(gens, remaining - v, axis + 1, exps);
    }
    exps[axis] = 0;
    total
}

/// Degree table of the quotient for all degrees up to `max_d` inclusive.
pub fn degree_table(ideal: &MonomialIdeal, max_d: u32, cap: u64) -> Result<DegreeTable> {
    let values = (0..=max_d)
        .map(|d| standard_monomial_count_capped(ideal, d, cap))
        .collect::<Result<Vec<u64>>>()?;
    Ok(DegreeTable { values })
}

/// Lagrange interpolation through the points `(start+t, values[start+t])`
/// for `t = 0..=degree_bound`, with one further table entry consumed as a
/// consistency check. Fails with `InconsistentValues` when the sampled range
/// starts below the degree where the table becomes polynomial.
pub fn interpolate_polynomial(
    table: &DegreeTable,
    start: usize,
    degree_bound: usize,
) -> Result<ExactPolynomial> {
    assert!(
        table.len() >= start + degree_bound + 2,
        "need {} consecutive values from degree {start}, table holds {}",
        degree_bound + 2,
        table.len()
    );
    let xs: Vec<i64> = (0..=degree_bound).map(|t| (start + t) as i64).collect();
    let mut poly = ExactPolynomial::zero();
    for (t, &x_t) in xs.iter().enumerate() {
        let y_t = BigRational::from_integer(table.values[start + t].into());
        let mut basis = ExactPolynomial::one();
        let mut denom = BigRational::one();
        for &x_s in xs.iter().filter(|&&x_s| x_s != x_t) {
            basis = &basis * &ExactPolynomial::from_integers(&[-x_s, 1]);
            denom *= BigRational::from_integer(BigInt::from(x_t - x_s));
        }
        poly = &poly + &basis.scale(&(y_t / denom));
    }
    let check_at = start + degree_bound + 1;
    let expected = BigRational::from_integer(table.values[check_at].into());
    if poly.value(check_at as i64) != expected {
        return Err(Error::InconsistentValues { degree: check_at });
    }
    Ok(poly)
}

/// Verifies that the alternating generator/syzygy degrees reproduce the
/// numerator of the two-variable Hilbert series:
///   (sum over boxes of t^weight) * (1-t)^2  =  1 - sum_j t^{n1j} + sum_i t^{n2i}.
pub fn k_polynomial_check(d2: &Diagram, p: &DegreePair) -> bool {
    assert_eq!(d2.dim(), 2, "the numerator identity is two-dimensional");
    let h: Vec<i64> = d2
        .diagonal_profile()
        .counts()
        .iter()
        .map(|&c| c as i64)
        .collect();
    let lhs = poly_mul(&poly_mul(&h, &[1, -1]), &[1, -1]);

    let top = p
        .gen_degrees()
        .iter()
        .chain(p.syz_degrees())
        .map(|&d| d as usize)
        .max()
        .unwrap_or(0);
    let mut rhs = vec![0i64; top + 1];
    rhs[0] = 1;
    for &a in p.gen_degrees() {
        rhs[a as usize] -= 1;
    }
    for &b in p.syz_degrees() {
        rhs[b as usize] += 1;
    }
    trim(&lhs) == trim(&rhs)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(a: &[i64]) -> Vec<i64> {
    let mut v = a.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}
