//! The degeneration of a union of two coplanar multiple structures onto a
//! single support: partswise sums as special fibers, the three-dimensional
//! intersection diagram, and the flatness identity of Hilbert polynomials.

use crate::diagram::{three_dim_diagram, Diagram, Partition};
use crate::error::{Error, Result};
use crate::hilbert::{b_poly, hilbert_polynomial, ExactPolynomial};
use crate::ideal::{ideal_from_diagram, ideal_intersection, Monomial, MonomialIdeal, VariableList};

/// Two monomial structures on linear subspaces of a common hyperplane:
/// `lam` on the subspace cut out by (x,y), `mu` on the one cut out by (z,y),
/// both of support dimension `n`. Either partition may be empty, in which
/// case that factor is the empty scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySetup {
    lam: Partition,
    mu: Partition,
    n: u32,
}

impl FamilySetup {
    pub fn new(lam: Partition, mu: Partition, n: u32) -> Self {
        FamilySetup { lam, mu, n }
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn support_dim(&self) -> u32 {
        self.n
    }
}

/// Diagram of the scheme-theoretic intersection of the two structures: the
/// three-dimensional diagram built from the pair, supported in codimension
/// three.
pub fn intersection_structure(f: &FamilySetup) -> Diagram {
    three_dim_diagram(&f.lam, &f.mu)
}

/// Evidence returned by [`flatness_check`]: the polynomials of the two
/// structures, of their intersection, and of the special fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessCheck {
    pub lam_polynomial: ExactPolynomial,
    pub mu_polynomial: ExactPolynomial,
    pub intersection_polynomial: ExactPolynomial,
    pub special_fiber_polynomial: ExactPolynomial,
    pub holds: bool,
}

/// Inclusion-exclusion identity behind the flatness of the degeneration:
/// the Hilbert polynomials of the two structures minus that of their
/// intersection equal the Hilbert polynomial of the partswise sum. The
/// intersection lives on a support of dimension n-1, read as the zero
/// polynomial when n = 0.
pub fn flatness_check(f: &FamilySetup) -> FlatnessCheck {
    let n = f.n as i32;
    let lam_polynomial = hilbert_polynomial(&f.lam.to_diagram(), n);
    let mu_polynomial = hilbert_polynomial(&f.mu.to_diagram(), n);
    let intersection_polynomial = hilbert_polynomial(&intersection_structure(f), n - 1);
    let special = f.lam.partswise_sum(&f.mu).to_diagram();
    let special_fiber_polynomial = hilbert_polynomial(&special, n);
    let union = &(&lam_polynomial + &mu_polynomial) - &intersection_polynomial;
    FlatnessCheck {
        holds: union == special_fiber_polynomial,
        lam_polynomial,
        mu_polynomial,
        intersection_polynomial,
        special_fiber_polynomial,
    }
}

fn xyz_vars() -> VariableList {
    VariableList::from_names(&["x", "y", "z"], 3).expect("static names are valid")
}

/// Ideal of the union of the two structures while their supports are still
/// distinct: the intersection of the (x,y)-ideal of `lam` and the
/// (z,y)-ideal of `mu` inside k[x,y,z].
pub fn generic_fiber_ideal(f: &FamilySetup) -> MonomialIdeal {
    let ambient = xyz_vars();
    let lam_vars = VariableList::from_names(&["x", "y"], 2).expect("static names are valid");
    let mu_vars = VariableList::from_names(&["z", "y"], 2).expect("static names are valid");
    let lam_ideal = ideal_from_diagram(&f.lam.to_diagram(), lam_vars)
        .expect("partition diagram matches its two codim variables")
        .with_variables(ambient.clone())
        .expect("x,y embed into x,y,z");
    let mu_ideal = ideal_from_diagram(&f.mu.to_diagram(), mu_vars)
        .expect("partition diagram matches its two codim variables")
        .with_variables(ambient)
        .expect("z,y embed into x,y,z");
    ideal_intersection(&lam_ideal, &mu_ideal).expect("both ideals share the ambient variables")
}

/// Ideal of the special fiber: substitute z by x in the generic fiber and
/// minimalize. Equals the ideal of the partswise sum of the partitions.
pub fn special_fiber_ideal(f: &FamilySetup) -> MonomialIdeal {
    let xy = VariableList::from_names(&["x", "y"], 2).expect("static names are valid");
    let generic = generic_fiber_ideal(f);
    let gens: Vec<_> = generic
        .gens()
        .iter()
        .map(|g| {
            let e = g.exponents();
            Monomial::new(vec![e[0] + e[2], e[1]])
        })
        .collect();
    MonomialIdeal::new(xy, gens).expect("exponent lengths match")
}

/// Telescoping relation between Euler characteristics on neighbouring
/// supports: for i > j,
///   b_j - b_i = sum over k in j..i of the (n-1)-dimensional b_k.
/// Verified as an identity of exact polynomials; i = j gives the empty sum.
pub fn binomial_identity_check(n: u32, i: u32, j: u32) -> Result<bool> {
    assert!(n >= 1, "the identity lowers the support dimension by one");
    if i < j {
        return Err(Error::InvalidRange {
            reason: format!("need i >= j, got i={i}, j={j}"),
        });
    }
    let lhs = &b_poly(n as i32, j) - &b_poly(n as i32, i);
    let mut rhs = ExactPolynomial::zero();
    for k in j..i {
        rhs = &rhs + &b_poly(n as i32 - 1, k);
    }
    Ok(lhs == rhs)
}
