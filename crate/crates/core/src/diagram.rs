//! Young diagrams in arbitrary dimension, partitions, and the combinatorial
//! operations on them: unions, intersections, diagonal truncation, corners,
//! partswise sums and the three-dimensional intersection diagram.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Lower corner of a unit box, one coordinate per axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxCoord(Vec<u32>);

impl BoxCoord {
    pub fn new(coords: Vec<u32>) -> Self {
        assert!(!coords.is_empty(), "box coordinates need at least one axis");
        BoxCoord(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the coordinates; equals the degree of the corresponding monomial.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The box one step down along `axis`, or `None` on the boundary.
    pub fn decremented(&self, axis: usize) -> Option<BoxCoord> {
        if self.0[axis] == 0 {
            return None;
        }
        let mut c = self.0.clone();
        c[axis] -= 1;
        Some(BoxCoord(c))
    }

    pub fn incremented(&self, axis: usize) -> BoxCoord {
        let mut c = self.0.clone();
        c[axis] += 1;
        BoxCoord(c)
    }

    /// Coordinatewise sum (the product of the corresponding monomials).
    pub fn entrywise_sum(&self, other: &BoxCoord) -> BoxCoord {
        assert_eq!(self.dim(), other.dim());
        BoxCoord(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite staircase-closed set of boxes in the first hyperquadrant.
///
/// Immutable value type; every operation returns a fresh diagram and every
/// construction path re-checks the closure condition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    dim: usize,
    boxes: BTreeSet<BoxCoord>,
}

impl Diagram {
    /// Builds a diagram from an explicit box set, validating the staircase
    /// closure condition: wherever there is a box, the box immediately below
    /// it in each direction is present too.
    pub fn new(dim: usize, boxes: impl IntoIterator<Item = BoxCoord>) -> Result<Self> {
        assert!(dim >= 1, "diagram dimension must be at least 1");
        let boxes: BTreeSet<BoxCoord> = boxes.into_iter().collect();
        for b in &boxes {
            if b.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: b.dim(),
                });
            }
            for axis in 0..dim {
                if let Some(below) = b.decremented(axis) {
                    if !boxes.contains(&below) {
                        return Err(Error::NotStaircaseClosed {
                            coord: b.to_string(),
                            axis,
                        });
                    }
                }
            }
        }
        Ok(Diagram { dim, boxes })
    }

    pub fn empty(dim: usize) -> Self {
        assert!(dim >= 1);
        Diagram {
            dim,
            boxes: BTreeSet::new(),
        }
    }

    // Internal constructor for operations that preserve closure by design.
    fn from_closed(dim: usize, boxes: BTreeSet<BoxCoord>) -> Self {
        Diagram::new(dim, boxes).expect("operation must preserve staircase closure")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boxes(&self) -> &BTreeSet<BoxCoord> {
        &self.boxes
    }

    /// Number of boxes; equals the multiplicity of the associated structure.
    pub fn box_count(&self) -> u64 {
        self.boxes.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: &BoxCoord) -> bool {
        self.boxes.contains(b)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.boxes.iter().map(|b| b.weight()).max()
    }

    /// Two-dimensional diagram of a partition: row `j` holds `parts[j]` boxes.
    pub fn from_partition(p: &Partition) -> Diagram {
        let mut boxes = BTreeSet::new();
        for (j, &len) in p.parts().iter().enumerate() {
            for i in 0..len {
                boxes.insert(BoxCoord::new(vec![i, j as u32]));
            }
        }
        Diagram::from_closed(2, boxes)
    }

    /// Inverse of [`Diagram::from_partition`]; only defined in dimension two.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.dim,
            });
        }
        let rows = self
            .boxes
            .iter()
            .map(|b| b.coords()[1])
            .max()
            .map_or(0, |m| m as usize + 1);
        let mut parts = vec![0u32; rows];
        for b in &self.boxes {
            parts[b.coords()[1] as usize] += 1;
        }
        Partition::new(parts)
    }

    /// Set union of the box sets (the diagram of the ideal intersection).
    pub fn union(&self, other: &Diagram) -> Result<Diagram> {
        self.check_dim(other)?;
        let boxes = self.boxes.union(&other.boxes).cloned().collect();
        Ok(Diagram::from_closed(self.dim, boxes))
    }

    /// Set intersection of the box sets (the diagram of the ideal sum).
    pub fn intersection(&self, other: &Diagram) -> Result<Diagram> {
        self.check_dim(other)?;
        let boxes = self.boxes.intersection(&other.boxes).cloned().collect();
        Ok(Diagram::from_closed(self.dim, boxes))
    }

    fn check_dim(&self, other: &Diagram) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// Number of boxes on each diagonal, indexed by weight.
    pub fn diagonal_profile(&self) -> DiagonalProfile {
        let mut counts = match self.max_weight() {
            Some(m) => vec![0u64; m as usize + 1],
            None => Vec::new(),
        };
        for b in &self.boxes {
            counts[b.weight() as usize] += 1;
        }
        DiagonalProfile(counts)
    }

    /// Boxes of weight at most `k`: the intersection with the k-th
    /// infinitesimal neighbourhood of the support.
    pub fn truncate_at_diagonal(&self, k: u32) -> Diagram {
        let boxes = self
            .boxes
            .iter()
            .filter(|b| b.weight() <= k)
            .cloned()
            .collect();
        Diagram::from_closed(self.dim, boxes)
    }

    /// Boxes outside the diagram whose predecessor along every axis (where
    /// one exists) lies inside. These positions carry the minimal monomial
    /// generators of the associated ideal; the empty diagram has the origin
    /// as its only inner corner.
    pub fn inner_corners(&self) -> BTreeSet<BoxCoord> {
        if self.boxes.is_empty() {
            return std::iter::once(BoxCoord::new(vec![0; self.dim])).collect();
        }
        let mut candidates = BTreeSet::new();
        for b in &self.boxes {
            for axis in 0..self.dim {
                let c = b.incremented(axis);
                if !self.boxes.contains(&c) {
                    candidates.insert(c);
                }
            }
        }
        candidates
            .into_iter()
            .filter(|c| {
                (0..self.dim).all(|axis| match c.decremented(axis) {
                    Some(below) => self.boxes.contains(&below),
                    None => true,
                })
            })
            .collect()
    }

    /// Boxes `(i,j)` with `i,j >= 1` outside the diagram whose two neighbours
    /// below are outside as well, while the box at the corner closest to the
    /// origin is inside. These carry the syzygies; dimension two only.
    pub fn outer_corners(&self) -> Result<BTreeSet<BoxCoord>> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.dim,
            });
        }
        let mut out = BTreeSet::new();
        for b in &self.boxes {
            let c = b.incremented(0).incremented(1);
            let left = c.decremented(0).unwrap();
            let down = c.decremented(1).unwrap();
            if !self.boxes.contains(&c)
                && !self.boxes.contains(&left)
                && !self.boxes.contains(&down)
            {
                out.insert(c);
            }
        }
        Ok(out)
    }

    /// Adds a chosen subset of the inner corners. Choosing all of them yields
    /// the diagram of the product with the support ideal.
    pub fn thicken(&self, chosen: &BTreeSet<BoxCoord>) -> Result<Diagram> {
        let corners = self.inner_corners();
        for c in chosen {
            if !corners.contains(c) {
                return Err(Error::NotAnInnerCorner {
                    coord: c.to_string(),
                });
            }
        }
        let boxes = self.boxes.union(chosen).cloned().collect();
        Ok(Diagram::from_closed(self.dim, boxes))
    }

    /// Splits a three-dimensional diagram into its two-dimensional layers,
    /// indexed by the third coordinate.
    pub fn layers(&self) -> Result<Vec<Diagram>> {
        if self.dim != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: self.dim,
            });
        }
        let depth = self
            .boxes
            .iter()
            .map(|b| b.coords()[2])
            .max()
            .map_or(0, |m| m as usize + 1);
        let mut layers = vec![BTreeSet::new(); depth];
        for b in &self.boxes {
            let c = b.coords();
            layers[c[2] as usize].insert(BoxCoord::new(vec![c[0], c[1]]));
        }
        Ok(layers
            .into_iter()
            .map(|boxes| Diagram::from_closed(2, boxes))
            .collect())
    }
}

impl fmt::Display for Diagram {
    /// Two-dimensional diagrams render as rows of `[]` cells, top row first;
    /// three-dimensional diagrams as labeled layers. Higher dimensions fall
    /// back to the plain box list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(empty)");
        }
        match self.dim {
            2 => {
                let p = self.to_partition().expect("dim checked");
                let lines: Vec<String> = p
                    .parts()
                    .iter()
                    .rev()
                    .map(|&len| "[]".repeat(len as usize))
                    .collect();
                write!(f, "{}", lines.join("\n"))
            }
            3 => {
                let layers = self.layers().expect("dim checked");
                let mut first = true;
                for (k, layer) in layers.iter().enumerate() {
                    if !first {
                        writeln!(f)?;
                    }
                    first = false;
                    write!(f, "k={k}:\n{layer}")?;
                }
                Ok(())
            }
            _ => {
                let list: Vec<String> = self.boxes.iter().map(|b| b.to_string()).collect();
                write!(f, "{{{}}}", list.join(" "))
            }
        }
    }
}

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so the empty partition is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                reason: format!("parts must be weakly decreasing, got {} before {}", w[0], w[1]),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `j`, reading zero past the end.
    pub fn part(&self, j: usize) -> u32 {
        self.0.get(j).copied().unwrap_or(0)
    }

    /// Sum of the parts: the number of boxes in the diagram.
    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn to_diagram(&self) -> Diagram {
        Diagram::from_partition(self)
    }

    /// Partswise sum, the shorter partition padded with zeros.
    pub fn partswise_sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|j| self.part(j) + other.part(j)).collect();
        Partition::new(parts).expect("sum of weakly decreasing sequences is weakly decreasing")
    }

    /// Conjugate partition: column heights of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition::new(parts).expect("conjugate is weakly decreasing")
    }

    /// Parses `4,4,3,1`, `[4,4,3,1]` or `(4,4,3,1)`; empty forms give the
    /// empty partition.
    pub fn parse(text: &str) -> Result<Partition> {
        let t = text.trim();
        let inner = if (t.starts_with('[') && t.ends_with(']'))
            || (t.starts_with('(') && t.ends_with(')'))
        {
            &t[1..t.len() - 1]
        } else {
            t
        };
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let piece = piece.trim();
            let value: u32 = piece.parse().map_err(|_| Error::Parse {
                position: text.find(piece).unwrap_or(0),
                message: format!("expected a non-negative integer, got {piece:?}"),
            })?;
            parts.push(value);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Box counts per diagonal; two structures have the same Hilbert function
/// exactly when these agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalProfile(Vec<u64>);

impl DiagonalProfile {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for DiagonalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Three-dimensional diagram `{(i,j,k) : (i,j) in the diagram of mu, k < lam_j}`.
///
/// Layer `k` is the sub-diagram of `mu` on the rows where `lam` exceeds `k`,
/// and the box count is the sum over rows of `lam_j * mu_j`.
pub fn three_dim_diagram(lam: &Partition, mu: &Partition) -> Diagram {
    let mut boxes = BTreeSet::new();
    for j in 0..mu.len() {
        for i in 0..mu.part(j) {
            for k in 0..lam.part(j) {
                boxes.insert(BoxCoord::new(vec![i, j as u32, k]));
            }
        }
    }
    Diagram::from_closed(3, boxes)
}

/// All partitions of exactly `n`, in lexicographically decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("built decreasing"));
            return;
        }
        let mut p = max_part.min(remaining);
        while p >= 1 {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bx(coords: &[u32]) -> BoxCoord {
        BoxCoord::new(coords.to_vec())
    }

    #[test]
    fn box_weight() {
        assert_eq!(bx(&[0, 0]).weight(), 0);
        assert_eq!(bx(&[1, 2]).weight(), 3);
        assert_eq!(bx(&[2, 1, 1]).weight(), 4);
    }

    #[test]
    fn partition_to_diagram_rows() {
        let d = part(&[4, 4, 3, 1]).to_diagram();
        assert_eq!(d.box_count(), 12);
        assert_eq!(d.to_partition().unwrap(), part(&[4, 4, 3, 1]));

        assert!(Partition::empty().to_diagram().is_empty());

        let d = part(&[2, 1]).to_diagram();
        let expected: BTreeSet<_> = [bx(&[0, 0]), bx(&[1, 0]), bx(&[0, 1])].into();
        assert_eq!(*d.boxes(), expected);
    }

    #[test]
    fn diagram_partition_round_trip() {
        let d = Diagram::new(2, [bx(&[0, 0]), bx(&[1, 0]), bx(&[0, 1])]).unwrap();
        assert_eq!(d.to_partition().unwrap(), part(&[2, 1]));
        assert_eq!(Diagram::empty(2).to_partition().unwrap(), Partition::empty());
        let p = part(&[4, 4, 3, 2]);
        assert_eq!(p.to_diagram().to_partition().unwrap(), p);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = part(&[2, 1]).to_diagram();
        let b = three_dim_diagram(&part(&[1]), &part(&[1]));
        assert!(matches!(
            a.union(&b),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(b.to_partition().is_err());
        assert!(b.outer_corners().is_err());
    }

    #[test]
    fn closure_violation_is_rejected() {
        let err = Diagram::new(2, [bx(&[1, 0])]).unwrap_err();
        assert!(matches!(err, Error::NotStaircaseClosed { .. }));
    }

    #[test]
    fn union_and_intersection_match_the_ideal_example() {
        let t = part(&[2, 2, 1]).to_diagram();
        let s = part(&[4, 1]).to_diagram();
        assert_eq!(
            t.intersection(&s).unwrap().to_partition().unwrap(),
            part(&[2, 1])
        );
        assert_eq!(
            t.union(&s).unwrap().to_partition().unwrap(),
            part(&[4, 2, 1])
        );
        assert_eq!(t.union(&t).unwrap(), t);
    }

    #[test]
    fn diagonal_profiles() {
        assert_eq!(
            part(&[5, 4]).to_diagram().diagonal_profile().counts(),
            &[1, 2, 2, 2, 2]
        );
        assert_eq!(
            part(&[6, 2, 1]).to_diagram().diagonal_profile().counts(),
            &[1, 2, 3, 1, 1, 1]
        );
        assert!(Diagram::empty(2).diagonal_profile().counts().is_empty());
    }

    #[test]
    fn truncation_realizes_the_filtration_pictures() {
        let d = part(&[4, 1]).to_diagram();
        assert_eq!(
            d.truncate_at_diagonal(1).to_partition().unwrap(),
            part(&[2, 1])
        );
        assert_eq!(d.truncate_at_diagonal(3), d);
        assert_eq!(d.truncate_at_diagonal(17), d);
    }

    #[test]
    fn inner_corners_are_the_generators() {
        let d = part(&[4, 4, 3, 2]).to_diagram();
        let expected: BTreeSet<_> =
            [bx(&[4, 0]), bx(&[3, 2]), bx(&[2, 3]), bx(&[0, 4])].into();
        assert_eq!(d.inner_corners(), expected);

        let origin: BTreeSet<_> = [bx(&[0, 0])].into();
        assert_eq!(Diagram::empty(2).inner_corners(), origin);

        let d = part(&[3, 1]).to_diagram();
        let expected: BTreeSet<_> = [bx(&[3, 0]), bx(&[1, 1]), bx(&[0, 2])].into();
        assert_eq!(d.inner_corners(), expected);
    }

    #[test]
    fn outer_corners_are_the_syzygies() {
        let d = part(&[5, 4]).to_diagram();
        let expected: BTreeSet<_> = [bx(&[5, 1]), bx(&[4, 2])].into();
        assert_eq!(d.outer_corners().unwrap(), expected);

        let d = part(&[3, 1]).to_diagram();
        let expected: BTreeSet<_> = [bx(&[3, 1]), bx(&[1, 2])].into();
        assert_eq!(d.outer_corners().unwrap(), expected);

        let single = part(&[1]).to_diagram();
        let expected: BTreeSet<_> = [bx(&[1, 1])].into();
        assert_eq!(single.outer_corners().unwrap(), expected);
    }

    #[test]
    fn thicken_inserts_chosen_corners() {
        let single = part(&[1]).to_diagram();
        let all = single.inner_corners();
        let thick = single.thicken(&all).unwrap();
        assert_eq!(thick.to_partition().unwrap(), part(&[2, 1]));

        let d = part(&[2, 1]).to_diagram();
        let chosen: BTreeSet<_> = [bx(&[2, 0])].into();
        assert_eq!(
            d.thicken(&chosen).unwrap().to_partition().unwrap(),
            part(&[3, 1])
        );

        assert_eq!(d.thicken(&BTreeSet::new()).unwrap(), d);

        let bad: BTreeSet<_> = [bx(&[5, 5])].into();
        assert!(matches!(
            d.thicken(&bad),
            Err(Error::NotAnInnerCorner { .. })
        ));
    }

    #[test]
    fn partswise_sum_examples() {
        assert_eq!(
            part(&[4, 4, 3, 2]).partswise_sum(&part(&[3, 3, 1])),
            part(&[7, 7, 4, 2])
        );
        let lam = part(&[5, 2]);
        assert_eq!(lam.partswise_sum(&Partition::empty()), lam);
        assert_eq!(part(&[2, 1]).partswise_sum(&part(&[1, 1])), part(&[3, 2]));
    }

    #[test]
    fn three_dim_diagram_layers() {
        let d = three_dim_diagram(&part(&[4, 4, 3, 2]), &part(&[3, 3, 1]));
        assert_eq!(d.box_count(), 27);
        let layers: Vec<Partition> = d
            .layers()
            .unwrap()
            .iter()
            .map(|l| l.to_partition().unwrap())
            .collect();
        assert_eq!(
            layers,
            vec![
                part(&[3, 3, 1]),
                part(&[3, 3, 1]),
                part(&[3, 3, 1]),
                part(&[3, 3])
            ]
        );

        let single = three_dim_diagram(&part(&[1]), &part(&[1]));
        assert_eq!(single.boxes().iter().collect::<Vec<_>>(), [&bx(&[0, 0, 0])]);
    }

    #[test]
    fn three_dim_diagram_swaps_axes_with_its_mirror() {
        let lam = part(&[4, 2, 1]);
        let mu = part(&[3, 3]);
        let lhs = three_dim_diagram(&mu, &lam);
        let swapped = Diagram::new(
            3,
            three_dim_diagram(&lam, &mu).boxes().iter().map(|b| {
                let c = b.coords();
                BoxCoord::new(vec![c[2], c[1], c[0]])
            }),
        )
        .unwrap();
        assert_eq!(lhs, swapped);
    }

    #[test]
    fn conjugate_and_columns() {
        let lam = part(&[4, 2, 1]);
        assert_eq!(lam.conjugate(), part(&[3, 2, 1, 1]));
        assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn rendering() {
        assert_eq!(part(&[2, 1]).to_diagram().to_string(), "[]\n[][]");
        assert_eq!(
            part(&[4, 4, 3, 1]).to_diagram().to_string(),
            "[]\n[][][]\n[][][][]\n[][][][]"
        );
        assert_eq!(Diagram::empty(2).to_string(), "(empty)");
        let d = three_dim_diagram(&part(&[2]), &part(&[1]));
        assert_eq!(d.to_string(), "k=0:\n[]\nk=1:\n[]");
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(Partition::parse("7,7,4,2").unwrap(), part(&[7, 7, 4, 2]));
        assert_eq!(Partition::parse("[7, 7, 4, 2]").unwrap(), part(&[7, 7, 4, 2]));
        assert_eq!(Partition::parse("(3,1)").unwrap(), part(&[3, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("[]").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("3,0,0").unwrap(), part(&[3]));
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("a,b").is_err());
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(12).len(), 77);
        for p in partitions_of(6) {
            assert_eq!(p.sum(), 6);
        }
    }
}
