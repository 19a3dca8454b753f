//! Degree pairs of minimal free resolutions read off the diagram corners,
//! staircase reconstruction from an admissible pair, the reduced-pair
//! equivalence, and the Hilbert-scheme dimension formula.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::hilbert::{binomial, same_hilbert_function};

/// Generator degrees and syzygy degrees of the length-one resolution of a
/// staircase ideal, both stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreePair {
    gen_degrees: Vec<u32>,
    syz_degrees: Vec<u32>,
}

impl DegreePair {
    /// Sorts both sequences into weakly decreasing order.
    pub fn new(mut gen_degrees: Vec<u32>, mut syz_degrees: Vec<u32>) -> Self {
        gen_degrees.sort_unstable_by(|a, b| b.cmp(a));
        syz_degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreePair {
            gen_degrees,
            syz_degrees,
        }
    }

    pub fn gen_degrees(&self) -> &[u32] {
        &self.gen_degrees
    }

    pub fn syz_degrees(&self) -> &[u32] {
        &self.syz_degrees
    }

    /// Whether some staircase diagram realizes this pair: one more generator
    /// than syzygies, each syzygy degree exceeding the matching generator
    /// degree, and equal degree sums.
    pub fn is_valid(&self) -> bool {
        self.validation_error().is_none()
    }

    fn validation_error(&self) -> Option<String> {
        if self.gen_degrees.len() != self.syz_degrees.len() + 1 {
            return Some(format!(
                "{} generator degrees need exactly {} syzygy degrees, found {}",
                self.gen_degrees.len(),
                self.gen_degrees.len().saturating_sub(1),
                self.syz_degrees.len()
            ));
        }
        if self.gen_degrees.contains(&0) {
            return Some("generator degrees must be positive".to_string());
        }
        for (i, (&b, &a)) in self.syz_degrees.iter().zip(&self.gen_degrees).enumerate() {
            if b <= a {
                return Some(format!(
                    "syzygy degree {b} at position {i} does not exceed generator degree {a}"
                ));
            }
        }
        let gen_sum: u64 = self.gen_degrees.iter().map(|&a| a as u64).sum();
        let syz_sum: u64 = self.syz_degrees.iter().map(|&b| b as u64).sum();
        if gen_sum != syz_sum {
            return Some(format!("degree sums differ: {gen_sum} vs {syz_sum}"));
        }
        None
    }
}

impl fmt::Display for DegreePair {
    /// The resolution shape, e.g. `0 -> S(-6)^2 -> S(-5)^2 + S(-2) -> I -> 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "0 -> {} -> {} -> I -> 0",
            summands(&self.syz_degrees),
            summands(&self.gen_degrees)
        )
    }
}

fn summands(degrees: &[u32]) -> String {
    if degrees.is_empty() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    let mut i = 0;
    while i < degrees.len() {
        let d = degrees[i];
        let count = degrees[i..].iter().take_while(|&&v| v == d).count();
        let base = format!("S(-{d})");
        terms.push(if count == 1 {
            base
        } else {
            format!("{base}^{count}")
        });
        i += count;
    }
    terms.join(" + ")
}

/// Reads the degree pair off the corners: generator degrees are the inner
/// corner weights, syzygy degrees the outer corner weights.
pub fn degree_pair(d: &Diagram) -> Result<DegreePair> {
    if d.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: d.dim(),
        });
    }
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let gens = d.inner_corners().iter().map(|c| c.weight()).collect();
    let syz = d.outer_corners()?.iter().map(|c| c.weight()).collect();
    Ok(DegreePair::new(gens, syz))
}

/// Canonical staircase realizing a valid pair: the corner for the largest
/// generator degree sits on the vertical axis and each following corner
/// steps right by the syzygy/generator gap. One of many diagrams with this
/// pair; its own degree pair is the input again.
pub fn staircase_from_pair(p: &DegreePair) -> Result<Diagram> {
    if let Some(reason) = p.validation_error() {
        return Err(Error::InvalidPair { reason });
    }
    let gens = p.gen_degrees();
    let syz = p.syz_degrees();
    let mut corners = vec![(0u32, gens[0])];
    let mut x = 0u32;
    for i in 1..gens.len() {
        x += syz[i - 1] - gens[i - 1];
        corners.push((x, gens[i] - x));
    }
    let height = gens[0];
    let parts: Vec<u32> = (0..height)
        .map(|row| {
            corners
                .iter()
                .filter(|&&(_, cy)| cy <= row)
                .map(|&(cx, _)| cx)
                .min()
                .expect("last corner sits on the horizontal axis")
        })
        .collect();
    let partition = crate::diagram::Partition::new(parts)
        .expect("corner x-coordinates decrease row by row");
    Ok(partition.to_diagram())
}

/// Degree pair with the common values of the two sides cancelled away.
/// Cancellation is multiset difference, so the result is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedPair {
    gen_degrees: Vec<u32>,
    syz_degrees: Vec<u32>,
}

impl ReducedPair {
    pub fn gen_degrees(&self) -> &[u32] {
        &self.gen_degrees
    }

    pub fn syz_degrees(&self) -> &[u32] {
        &self.syz_degrees
    }
}

pub fn reduce_pair(p: &DegreePair) -> ReducedPair {
    let mut counts: BTreeMap<u32, (u64, u64)> = BTreeMap::new();
    for &a in p.gen_degrees() {
        counts.entry(a).or_default().0 += 1;
    }
    for &b in p.syz_degrees() {
        counts.entry(b).or_default().1 += 1;
    }
    let mut gens = Vec::new();
    let mut syz = Vec::new();
    for (&value, &(g, s)) in counts.iter().rev() {
        let common = g.min(s);
        gens.extend(std::iter::repeat_n(value, (g - common) as usize));
        syz.extend(std::iter::repeat_n(value, (s - common) as usize));
    }
    ReducedPair {
        gen_degrees: gens,
        syz_degrees: syz,
    }
}

/// Equality of reduced degree pairs. Because cancellation is confluent this
/// decides the equivalence relation generated by primitive cancellations.
pub fn same_reduced_resolution(a: &Diagram, b: &Diagram) -> Result<bool> {
    Ok(reduce_pair(&degree_pair(a)?) == reduce_pair(&degree_pair(b)?))
}

/// Dimension of the Hilbert scheme of closed subschemes of projective
/// (n+2)-space at the point of the diagram structure.
///
/// Writing N = n+2, the value is
///   sum over syzygy/generator pairs with s >= g of C(s-g+N, N)
/// + sum over generator/syzygy pairs with g >= s of C(g-s+N, N)
/// - the analogous sums within the syzygy and generator sequences
/// + 1,
///
/// where ties count in both cross sums and the self sums include the
/// diagonal.
pub fn hilbert_scheme_dimension(d: &Diagram, n: u32) -> Result<u64> {
    let p = degree_pair(d)?;
    let cap = (n + 2) as u64;
    let cross = |left: &[u32], right: &[u32]| -> i128 {
        let mut total: i128 = 0;
        for &l in left {
            for &r in right {
                if l >= r {
                    total += binomial((l - r) as u64 + cap, cap) as i128;
                }
            }
        }
        total
    };
    let gens = p.gen_degrees();
    let syz = p.syz_degrees();
    let dim = cross(syz, gens) + cross(gens, syz) - cross(syz, syz) - cross(gens, gens) + 1;
    Ok(u64::try_from(dim).expect("Hilbert scheme dimension is non-negative"))
}

/// Whether the two structures are points of a common irreducible component
/// of the Hilbert scheme. Decided by Hilbert-function equivalence, which is
/// cross-checked against resolution equivalence.
pub fn same_component(a: &Diagram, b: &Diagram) -> Result<bool> {
    for d in [a, b] {
        if d.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: d.dim(),
            });
        }
    }
    if a.is_empty() || b.is_empty() {
        return Ok(a.is_empty() && b.is_empty());
    }
    let by_function = same_hilbert_function(a, b)?;
    let by_resolution = same_reduced_resolution(a, b)?;
    assert_eq!(
        by_function, by_resolution,
        "Hilbert-function and resolution equivalence must agree"
    );
    Ok(by_function)
}
