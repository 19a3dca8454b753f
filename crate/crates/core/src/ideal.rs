//! Monomial ideals over a named variable list, the dictionary between
//! cofinite monomial ideals in the codimension variables and Young diagrams,
//! and the filtration by infinitesimal neighbourhoods of the support.

use std::collections::BTreeSet;
use std::fmt;

use crate::diagram::{BoxCoord, Diagram};
use crate::error::{Error, Result};

/// Exponent vector aligned with a [`VariableList`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(var_count: usize) -> Self {
        Monomial(vec![0; var_count])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Least common multiple: entrywise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Ordered variable names; the first `codim_count` are the thickening
/// variables of the support, the rest are the support variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableList {
    names: Vec<String>,
    codim_count: usize,
}

impl VariableList {
    pub fn new(names: Vec<String>, codim_count: usize) -> Result<Self> {
        if codim_count == 0 || codim_count > names.len() {
            return Err(Error::InvalidVariableList {
                reason: format!(
                    "codim count {codim_count} out of range for {} variables",
                    names.len()
                ),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidVariableList {
                    reason: format!("duplicate variable name {n}"),
                });
            }
        }
        Ok(VariableList { names, codim_count })
    }

    /// Convenience constructor from string slices.
    pub fn from_names(names: &[&str], codim_count: usize) -> Result<Self> {
        VariableList::new(names.iter().map(|s| s.to_string()).collect(), codim_count)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn codim_count(&self) -> usize {
        self.codim_count
    }

    pub fn support_count(&self) -> usize {
        self.names.len() - self.codim_count
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VariableList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; codim {}]", self.names.join(","), self.codim_count)
    }
}

/// Monomial ideal stored by its minimal generating set.
///
/// Construction minimalizes, so equality of ideals is equality of values.
/// The unit ideal (generator 1) is legal and corresponds to the empty
/// diagram; an empty generator set is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: VariableList,
    gens: BTreeSet<Monomial>,
}

impl MonomialIdeal {
    pub fn new(vars: VariableList, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: BTreeSet<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.exponents().len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: g.exponents().len(),
                });
            }
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
            vars,
        })
    }

    pub fn unit(vars: VariableList) -> Self {
        let one = Monomial::one(vars.len());
        MonomialIdeal {
            gens: std::iter::once(one).collect(),
            vars,
        }
    }

    pub fn vars(&self) -> &VariableList {
        &self.vars
    }

    pub fn gens(&self) -> &BTreeSet<Monomial> {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Renders one generator using the ideal's variable names.
    pub fn monomial_string(&self, m: &Monomial) -> String {
        monomial_string(m, &self.vars)
    }

    /// Re-embeds the ideal into a larger variable list, matching by name.
    pub fn with_variables(&self, vars: VariableList) -> Result<MonomialIdeal> {
        let mut mapping = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            match vars.index_of(name) {
                Some(i) => mapping.push(i),
                None => {
                    return Err(Error::UnknownVariable { name: name.clone() });
                }
            }
        }
        let gens: BTreeSet<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; vars.len()];
                for (old, &new) in mapping.iter().enumerate() {
                    exps[new] = g.exponents()[old];
                }
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::new(vars, gens)
    }
}

fn monomial_string(m: &Monomial, vars: &VariableList) -> String {
    let mut factors = Vec::new();
    for (name, &e) in vars.names().iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => factors.push(name.clone()),
            _ => factors.push(format!("{name}^{e}")),
        }
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    /// Generators in descending exponent order, e.g. `x^5, x^4*y, y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .gens
            .iter()
            .rev()
            .map(|g| monomial_string(g, &self.vars))
            .collect();
        write!(f, "{}", gens.join(", "))
    }
}

/// Drops every generator divisible by another one.
pub fn minimalize(gens: BTreeSet<Monomial>) -> BTreeSet<Monomial> {
    gens.iter()
        .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
        .cloned()
        .collect()
}

/// Ideal of a diagram: the inner corners as monomials in the codimension
/// variables.
pub fn ideal_from_diagram(d: &Diagram, vars: VariableList) -> Result<MonomialIdeal> {
    if d.dim() != vars.codim_count() {
        return Err(Error::DimensionMismatch {
            expected: vars.codim_count(),
            found: d.dim(),
        });
    }
    let gens: BTreeSet<Monomial> = d
        .inner_corners()
        .iter()
        .map(|c| {
            let mut exps = c.coords().to_vec();
            exps.resize(vars.len(), 0);
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(vars, gens)
}

/// Diagram of an ideal: the exponent vectors of the codimension-variable
/// monomials outside the ideal. Inverse of [`ideal_from_diagram`].
pub fn diagram_from_ideal(ideal: &MonomialIdeal) -> Result<Diagram> {
    let vars = ideal.vars();
    let m = vars.codim_count();
    for g in ideal.gens() {
        if g.exponents()[m..].iter().any(|&e| e > 0) {
            return Err(Error::SupportVariableInGenerator {
                generator: ideal.monomial_string(g),
            });
        }
    }
    // A pure power in axis t bounds coordinate t of every standard monomial.
    let mut bounds = Vec::with_capacity(m);
    for t in 0..m {
        let bound = ideal
            .gens()
            .iter()
            .filter(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .all(|(s, &e)| s == t || e == 0)
            })
            .map(|g| g.exponents()[t])
            .min();
        match bound {
            Some(b) => bounds.push(b),
            None => {
                return Err(Error::NotCofinite {
                    variable: vars.names()[t].clone(),
                });
            }
        }
    }
    let mut boxes = BTreeSet::new();
    let mut coords = vec![0u32; m];
    collect_standard_boxes(ideal, &bounds, 0, &mut coords, &mut boxes);
    Diagram::new(m, boxes)
}

fn collect_standard_boxes(
    ideal: &MonomialIdeal,
    bounds: &[u32],
    axis: usize,
    coords: &mut Vec<u32>,
    out: &mut BTreeSet<BoxCoord>,
) {
    if axis == bounds.len() {
        let standard = !ideal.gens().iter().any(|g| {
            g.exponents()
                .iter()
                .take(bounds.len())
                .zip(coords.iter())
                .all(|(ge, ce)| ge <= ce)
        });
        if standard {
            out.insert(BoxCoord::new(coords.clone()));
        }
        return;
    }
    for v in 0..bounds[axis] {
        coords[axis] = v;
        collect_standard_boxes(ideal, bounds, axis + 1, coords, out);
    }
    coords[axis] = 0;
}

/// A Cohen-Macaulay structure ideal: generated in the codimension variables
/// with a pure power of each of them present.
pub fn is_cm_structure(ideal: &MonomialIdeal) -> bool {
    let m = ideal.vars().codim_count();
    let support_free = ideal
        .gens()
        .iter()
        .all(|g| g.exponents()[m..].iter().all(|&e| e == 0));
    let has_pure_powers = (0..m).all(|t| {
        ideal.gens().iter().any(|g| {
            g.exponents()
                .iter()
                .enumerate()
                .all(|(s, &e)| s == t || e == 0)
        })
    });
    support_free && has_pure_powers
}

pub fn ideal_sum(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_vars(a, b)?;
    let gens = a.gens().union(b.gens()).cloned().collect::<BTreeSet<_>>();
    MonomialIdeal::new(a.vars().clone(), gens)
}

/// Intersection via pairwise least common multiples.
pub fn ideal_intersection(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_vars(a, b)?;
    let mut gens = BTreeSet::new();
    for g in a.gens() {
        for h in b.gens() {
            gens.insert(g.lcm(h));
        }
    }
    MonomialIdeal::new(a.vars().clone(), gens)
}

fn check_vars(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.vars() != b.vars() {
        return Err(Error::VariableMismatch {
            left: a.vars().to_string(),
            right: b.vars().to_string(),
        });
    }
    Ok(())
}

/// Product with the support ideal `(x_1, ..., x_m)`. At diagram level this
/// introduces a box in every inner corner.
pub fn product_with_support_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let vars = ideal.vars();
    let m = vars.codim_count();
    for g in ideal.gens() {
        if g.exponents()[m..].iter().any(|&e| e > 0) {
            return Err(Error::SupportVariableInGenerator {
                generator: ideal.monomial_string(g),
            });
        }
    }
    let mut gens = BTreeSet::new();
    for g in ideal.gens() {
        for t in 0..m {
            let mut exps = g.exponents().to_vec();
            exps[t] += 1;
            gens.insert(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(vars.clone(), gens)
}

/// Diagram of the k-th infinitesimal neighbourhood: all boxes of weight at
/// most `k` in dimension `m`. Its ideal is the (k+1)-st power of the support
/// ideal.
pub fn infinitesimal_neighbourhood(m: usize, k: u32) -> Diagram {
    fn rec(dim: usize, axis: usize, budget: u32, coords: &mut Vec<u32>, out: &mut BTreeSet<BoxCoord>) {
        if axis == dim {
            out.insert(BoxCoord::new(coords.clone()));
            return;
        }
        for v in 0..=budget {
            coords[axis] = v;
            rec(dim, axis + 1, budget - v, coords, out);
        }
        coords[axis] = 0;
    }
    let mut boxes = BTreeSet::new();
    rec(m, 0, k, &mut vec![0; m], &mut boxes);
    Diagram::new(m, boxes).expect("simplex is staircase-closed")
}

/// Diagram-level S1-filtration: truncations at every diagonal up to the
/// maximal box weight. The last term is the diagram itself.
pub fn s1_filtration(d: &Diagram) -> Vec<Diagram> {
    let max = d.max_weight().unwrap_or(0);
    (0..=max).map(|k| d.truncate_at_diagonal(k)).collect()
}

/// One layer of the structure-sheaf filtration: passing from the k-th term
/// to the (k+1)-st adds a twisted free summand per new diagonal box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationLayer {
    level: u32,
    twists: Vec<u32>,
}

impl FiltrationLayer {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// All twist values equal `level + 1`, one per box on that diagonal.
    pub fn twists(&self) -> &[u32] {
        &self.twists
    }
}

/// Layers of the S1-filtration, one per diagonal above the origin.
pub fn filtration_layers(d: &Diagram) -> Vec<FiltrationLayer> {
    let profile = d.diagonal_profile();
    profile
        .counts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &count)| FiltrationLayer {
            level: (k - 1) as u32,
            twists: vec![k as u32; count as usize],
        })
        .collect()
}

/// Parses the comma-separated generator grammar, e.g. `x^4, x^3*y^2, y^4`.
/// Factors are a variable name with an optional `^` exponent or the literal
/// `1`; the `*` between factors is optional and whitespace is ignored.
pub fn parse_ideal(text: &str, vars: &VariableList) -> Result<MonomialIdeal> {
    let parser = IdealParser {
        bytes: text.as_bytes(),
        pos: 0,
        vars,
    };
    parser.run()
}

struct IdealParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a VariableList,
}

impl<'a> IdealParser<'a> {
    fn run(mut self) -> Result<MonomialIdeal> {
        let mut gens = BTreeSet::new();
        loop {
            gens.insert(self.monomial()?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                None => break,
                Some(c) => {
                    return Err(self.error(format!("expected ',' or end of input, found {:?}", c as char)));
                }
            }
        }
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.vars.len()];
        self.factor(&mut exps)?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.factor(&mut exps)?;
                }
                Some(c) if (c as char).is_ascii_alphabetic() || c == b'1' => {
                    self.factor(&mut exps)?;
                }
                _ => break,
            }
        }
        Ok(Monomial::new(exps))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(())
            }
            Some(c) if (c as char).is_ascii_alphabetic() => {
                let name = self.name();
                let index = self
                    .vars
                    .index_of(&name)
                    .ok_or(Error::UnknownVariable { name })?;
                let exponent = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.uint()?
                } else {
                    1
                };
                exps[index] += exponent;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected a variable, found {:?}", c as char))),
            None => Err(self.error("expected a variable, found end of input".to_string())),
        }
    }

    // NAME: one letter followed by digits, so `x y` and `xy` both mean x*y.
    fn name(&mut self) -> String {
        let start = self.pos;
        self.pos += 1;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an exponent".to_string()));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Parse {
            position: start,
            message: format!("exponent {digits} out of range"),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: String) -> Error {
        Error::Parse {
            position: self.pos,
            message,
        }
    }
}
