//! Combinatorics of multipartitions and tableaux: residues, degrees, orders,
//! the weak Bruhat graph, Garnir tableaux and root lattice arithmetic.

mod graph;
mod perm;
mod shape;
mod tableau;

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::FieldSpec;

pub use graph::{
    garnir_belt, garnir_tableau, is_terminal, is_terminal_chain, next_alternatives, above_alternatives,
    weak_bruhat_graph, Edge,
};
pub use perm::Permutation;
pub use shape::{dominates, multipartitions, Multipartition, Node};
pub use tableau::{d_above, d_below, d_residue, tableau_bruhat, Tableau};

/// Element of `I`: a class mod `e`, or an integer when `e = 0`. Always kept
/// in canonical form by [`AlgebraParams::norm`].
pub type Residue = i64;

/// Relative position of two residues in the quiver with edges `i -> i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arrow {
    Equal,
    /// `j = i + 1` and `j != i - 1`.
    Forward,
    /// `j = i - 1` and `j != i + 1`.
    Backward,
    /// `j = i + 1 = i - 1`; only when `e = 2`.
    Double,
    Unrelated,
}

/// Quantum characteristic, level and charge, together with the ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParams {
    field: FieldSpec,
    charge: Vec<Residue>,
}

impl AlgebraParams {
    pub fn new(field: FieldSpec, charge: Vec<i64>) -> Result<Self> {
        if charge.is_empty() {
            return Err(Error::param("level must be at least 1"));
        }
        let e = field.e();
        if e == 1 {
            return Err(Error::param("e = 1 is not allowed"));
        }
        let mut params = AlgebraParams { field, charge: vec![] };
        params.charge = charge.into_iter().map(|k| params.norm(k)).collect();
        Ok(params)
    }

    /// Parameters for purely combinatorial work: rationals with `xi = 2`
    /// when `e = 0`, otherwise the default prime field.
    pub fn combinatorial(e: u32, charge: Vec<i64>) -> Result<Self> {
        let field = match e {
            0 => FieldSpec::rational(BigRational::from_integer(BigInt::from(2)))?,
            _ => FieldSpec::default_for_e(e)?,
        };
        Self::new(field, charge)
    }

    pub fn e(&self) -> u32 {
        self.field.e()
    }

    pub fn level(&self) -> usize {
        self.charge.len()
    }

    pub fn charge(&self) -> &[Residue] {
        &self.charge
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    pub fn norm(&self, i: i64) -> Residue {
        match self.e() {
            0 => i,
            e => i.rem_euclid(e as i64),
        }
    }

    /// All of `I` when it is finite.
    pub fn residues(&self) -> Option<Vec<Residue>> {
        match self.e() {
            0 => None,
            e => Some((0..e as i64).collect()),
        }
    }

    /// `k_m + b - a` for the node `(a, b, m)`.
    #[inline]
    pub fn residue(&self, node: Node) -> Residue {
        self.norm(self.charge[node.comp - 1] + node.col as i64 - node.row as i64)
    }

    pub fn arrow(&self, i: Residue, j: Residue) -> Arrow {
        let (i, j) = (self.norm(i), self.norm(j));
        if i == j {
            return Arrow::Equal;
        }
        let up = self.norm(i + 1) == j;
        let down = self.norm(i - 1) == j;
        match (up, down) {
            (true, true) => Arrow::Double,
            (true, false) => Arrow::Forward,
            (false, true) => Arrow::Backward,
            (false, false) => Arrow::Unrelated,
        }
    }

    /// Cartan integer `a_{ij}`.
    pub fn cartan(&self, i: Residue, j: Residue) -> i64 {
        match self.arrow(i, j) {
            Arrow::Equal => 2,
            Arrow::Forward | Arrow::Backward => -1,
            Arrow::Double => -2,
            Arrow::Unrelated => 0,
        }
    }

    /// `(Lambda, alpha_i)`: the multiplicity of `i` in the charge.
    pub fn lambda_pairing(&self, i: Residue) -> i64 {
        let i = self.norm(i);
        self.charge.iter().filter(|&&k| k == i).count() as i64
    }

    /// `cont(mu)`.
    pub fn content(&self, mu: &Multipartition) -> RootVector {
        let mut alpha = RootVector::zero();
        for node in mu.nodes() {
            alpha.add_simple(self.residue(node), 1);
        }
        alpha
    }

    /// `def(alpha) = (Lambda, alpha) - (alpha, alpha)/2`.
    pub fn defect(&self, alpha: &RootVector) -> i64 {
        let lam: i64 = alpha.support().map(|(i, c)| c * self.lambda_pairing(i)).sum();
        let form = alpha.pairing(alpha, self);
        debug_assert!(form % 2 == 0, "(alpha, alpha) is even for a symmetric Cartan matrix");
        lam - form / 2
    }
}

/// Element of the positive root lattice, `sum_i c_i alpha_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coeffs: BTreeMap<Residue, i64>,
}

impl RootVector {
    pub fn zero() -> Self {
        RootVector::default()
    }

    pub fn simple(i: Residue) -> Self {
        let mut r = Self::zero();
        r.add_simple(i, 1);
        r
    }

    /// Adds `c * alpha_i`; the caller passes a normalized residue.
    pub fn add_simple(&mut self, i: Residue, c: i64) {
        let entry = self.coeffs.entry(i).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn coeff(&self, i: Residue) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (Residue, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn height(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Symmetric form `(self, other)` via the Cartan matrix.
    pub fn pairing(&self, other: &RootVector, params: &AlgebraParams) -> i64 {
        let mut total = 0;
        for (i, a) in self.support() {
            for (j, b) in other.support() {
                total += a * b * params.cartan(i, j);
            }
        }
        total
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        let mut r = self.clone();
        for (i, c) in other.support() {
            r.add_simple(i, -c);
        }
        r
    }
}

/// Laurent polynomial in `q` with integer coefficients, no zero terms stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (&e, &c) in &other.terms {
            r.add_term(e, c);
        }
        r
    }

    /// Grading shift `<m>`: multiplies by `q^m`.
    pub fn shift(&self, m: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + m, c)).collect() }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut r = Self::zero();
        for (&a, &c) in &self.terms {
            for (&b, &d) in &other.terms {
                r.add_term(a + b, c * d);
            }
        }
        r
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, &c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}q"),
                _ => format!("{c}q^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialized as `{"<exp>": coeff}` in increasing exponent order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), c)?;
        }
        map.end()
    }
}
