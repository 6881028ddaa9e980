//! Homogeneous generators `e(i)`, `y_r`, `psi_r` as exact matrices on a
//! Specht module, the homogeneous basis `v_T = psi_{w_T} z_mu`, and checks
//! of the graded structure.
//!
//! Weight idempotents come from partial fractions of the minimal polynomial
//! of each `X_r`. The power series `P_r(i)` and `Q_r(i)` are evaluated as
//! matrix expressions in `y_r(i) = xi^{i_r}(1 - y_r)`: since every `y_r` is
//! nilpotent, each denominator is a nonzero scalar plus a nilpotent matrix
//! whenever `i_r != i_{r+1}`, so it is invertible on the whole module and the
//! quotient agrees with the series on the block of `i`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::characters::{graded_character, GradedCharacter};
use crate::combinatorics::{tableau_bruhat, AlgebraParams, Arrow, Residue, Tableau};
use crate::error::{Error, Result};
use crate::linalg::{minimal_polynomial, Matrix, Poly};
use crate::report::Report;
use crate::scalars::PrimeField;
use crate::specht::ModuleRealization;

/// Default bound on the number of reduced words tried per permutation.
pub const DEFAULT_WORD_CAP: usize = 60;

/// Which reduced word of `w_T` defines `v_T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordChoice {
    Canonical,
    /// A uniformly chosen right descent is stripped at each step, driven by
    /// a ChaCha stream with this seed.
    Seeded(u64),
}

#[derive(Clone, Debug)]
pub struct GradedSpechtData {
    module: ModuleRealization,
    weights: Vec<Vec<Residue>>,
    idempotents: Vec<Matrix>,
    y: Vec<Matrix>,
    psi: Vec<Matrix>,
    words: Vec<Vec<usize>>,
    v: Matrix,
    v_inv: Matrix,
    degrees: Vec<i64>,
    residues: Vec<Vec<Residue>>,
}

/// Generalized eigenprojections of `x`, as `(i, E_i)` for the `i` with
/// `xi^i` an eigenvalue, in increasing `i`.
pub fn eigen_projectors(x: &Matrix, params: &AlgebraParams, xi: u64) -> Result<Vec<(Residue, Matrix)>> {
    let f = x.field();
    let minpoly = minimal_polynomial(x);
    let residues = params.residues().ok_or_else(|| Error::param("weight idempotents need e >= 2"))?;
    let mut factors = Vec::new();
    let mut covered = Poly::one(f);
    for i in residues {
        let root = f.pow(xi, i as u64);
        let lin = Poly::linear(f, root);
        let mut q = minpoly.clone();
        let mut mult = 0;
        loop {
            let (quot, rem) = q.div_rem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            q = quot;
            mult += 1;
        }
        if mult > 0 {
            let factor = lin.pow(mult);
            covered = covered.mul(&factor);
            factors.push((i, factor));
        }
    }
    if covered != minpoly {
        return Err(Error::convention(format!(
            "an eigenvalue of X is not a power of xi (minimal polynomial {:?})",
            minpoly.coeffs()
        )));
    }
    let mut out = Vec::with_capacity(factors.len());
    for (i, factor) in &factors {
        let (cofactor, _) = minpoly.div_rem(factor)?;
        let (g, s, _) = cofactor.ext_gcd(factor)?;
        debug_assert_eq!(g, Poly::one(f));
        let (_, e) = s.mul(&cofactor).div_rem(&minpoly)?;
        out.push((*i, e.eval_matrix(x)));
    }
    Ok(out)
}

fn invert(m: &Matrix, what: impl FnOnce() -> String) -> Result<Matrix> {
    m.inverse().map_err(|_| Error::convention(format!("{} is not invertible", what())))
}

impl GradedSpechtData {
    pub fn build(module: ModuleRealization) -> Result<Self> {
        Self::build_with(module, WordChoice::Canonical)
    }

    pub fn build_with(module: ModuleRealization, choice: WordChoice) -> Result<Self> {
        let f = module.field();
        let xi = module.xi();
        let params = module.params().clone();
        let n = module.dim();
        let d = module.d();
        let id = Matrix::identity(f, n);
        for r in 1..=d {
            for s in r + 1..=d {
                if module.x(r).mul(module.x(s)) != module.x(s).mul(module.x(r)) {
                    return Err(Error::convention(format!("X{r} and X{s} do not commute on S({})", module.shape())));
                }
            }
        }

        let projectors: Vec<Vec<(Residue, Matrix)>> =
            (1..=d).map(|r| eigen_projectors(module.x(r), &params, xi)).collect::<Result<_>>()?;

        // e(i) = prod_r E_{r, i_r}, depth first with pruning of zero products.
        let mut weights = Vec::new();
        let mut idempotents = Vec::new();
        let mut stack: Vec<(Vec<Residue>, Matrix)> = vec![(vec![], id.clone())];
        while let Some((prefix, acc)) = stack.pop() {
            let r = prefix.len();
            if r == d {
                weights.push(prefix);
                idempotents.push(acc);
                continue;
            }
            for (i, e) in projectors[r].iter().rev() {
                let m = acc.mul(e);
                if !m.is_zero() {
                    let mut w = prefix.clone();
                    w.push(*i);
                    stack.push((w, m));
                }
            }
        }

        let y: Vec<Matrix> = (1..=d)
            .map(|r| {
                let x = module.x(r);
                let mut acc = Matrix::zeros(f, n, n);
                for (i, e) in &projectors[r - 1] {
                    let c = f.pow_signed(xi, -*i).expect("xi is a unit");
                    let factor = x.scale(f.neg(c)).add_identity(1);
                    acc = acc.add(&factor.mul(e));
                }
                acc
            })
            .collect();
        for (r, yr) in y.iter().enumerate() {
            if !yr.pow(n).is_zero() {
                return Err(Error::convention(format!("y{} is not nilpotent on S({})", r + 1, module.shape())));
            }
        }

        let mut psi = Vec::with_capacity(d.saturating_sub(1));
        for r in 1..d {
            let (yr, yr1) = (&y[r - 1], &y[r]);
            let mut acc = Matrix::zeros(f, n, n);
            for (w, e) in weights.iter().zip(&idempotents) {
                let (a, b) = (w[r - 1], w[r]);
                let shape = module.shape();
                let ctx = || format!("at r = {r}, i = {w:?} on S({shape})");
                let ya = id.sub(yr).scale(f.pow(xi, a as u64));
                let yb = id.sub(yr1).scale(f.pow(xi, b as u64));
                let arrow = params.arrow(a, b);
                let p = if arrow == Arrow::Equal {
                    id.clone()
                } else {
                    let ratio = ya.mul(&invert(&yb, || format!("y_{{r+1}}(i) {}", ctx()))?);
                    invert(&id.sub(&ratio), || format!("1 - y_r(i)/y_{{r+1}}(i) {}", ctx()))?.scale(f.sub(1, xi))
                };
                let diff = || ya.sub(&yb);
                let q = match arrow {
                    Arrow::Equal => yr1.scale(xi).sub(yr).add_identity(f.sub(1, xi)),
                    Arrow::Unrelated => {
                        ya.sub(&yb.scale(xi)).mul(&invert(&diff(), || format!("y_r(i) - y_{{r+1}}(i) {}", ctx()))?)
                    }
                    Arrow::Forward => {
                        let inv = invert(&diff(), || format!("y_r(i) - y_{{r+1}}(i) {}", ctx()))?;
                        ya.sub(&yb.scale(xi)).mul(&inv).mul(&inv)
                    }
                    Arrow::Backward => Matrix::scalar(f, n, f.pow(xi, a as u64)),
                    Arrow::Double => invert(&diff(), || format!("y_r(i) - y_{{r+1}}(i) {}", ctx()))?
                        .scale(f.pow(xi, a as u64)),
                };
                let q_inv = invert(&q, || format!("Q_r(i) {}", ctx()))?;
                acc = acc.add(&module.t(r).add(&p).mul(&q_inv).mul(e));
            }
            psi.push(acc);
        }

        let tableaux = module.tableaux().to_vec();
        let degrees = tableaux.iter().map(|t| t.degree(&params)).collect::<Result<Vec<_>>>()?;
        let residues: Vec<Vec<Residue>> = tableaux.iter().map(|t| t.residue_sequence(&params)).collect();
        let words: Vec<Vec<usize>> = match choice {
            WordChoice::Canonical => tableaux.iter().map(|t| t.permutation().canonical_reduced_word()).collect(),
            WordChoice::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                tableaux.iter().map(|t| t.permutation().random_reduced_word(&mut rng)).collect()
            }
        };

        let z = module.unit_vector(module.initial_index());
        let apply = |word: &[usize], v: &[u64]| word.iter().rev().fold(v.to_vec(), |acc, &r| psi[r - 1].mul_vec(&acc));
        let columns: Vec<Vec<u64>> = words.iter().map(|w| apply(w, &z)).collect();
        let v = Matrix::from_columns(f, n, &columns);
        for (k, t) in tableaux.iter().enumerate() {
            if v.get(k, k) == 0 {
                return Err(Error::convention(format!(
                    "v_T has zero coefficient on z_T for T = {} in S({})",
                    t.filling_string(),
                    module.shape()
                )));
            }
        }
        let v_inv = invert(&v, || format!("the v-basis transition matrix of S({})", module.shape()))?;
        Ok(GradedSpechtData { module, weights, idempotents, y, psi, words, v, v_inv, degrees, residues })
    }

    pub fn module(&self) -> &ModuleRealization {
        &self.module
    }

    pub fn field(&self) -> PrimeField {
        self.module.field()
    }

    pub fn params(&self) -> &AlgebraParams {
        self.module.params()
    }

    pub fn d(&self) -> usize {
        self.module.d()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        self.module.tableaux()
    }

    /// Weights `i` with `e(i) != 0`, in lexicographic order.
    pub fn weights(&self) -> &[Vec<Residue>] {
        &self.weights
    }

    pub fn idempotent(&self, weight: &[Residue]) -> Option<&Matrix> {
        self.weights.iter().position(|w| w == weight).map(|k| &self.idempotents[k])
    }

    pub fn idempotents(&self) -> impl Iterator<Item = (&Vec<Residue>, &Matrix)> {
        self.weights.iter().zip(&self.idempotents)
    }

    pub fn y(&self, r: usize) -> &Matrix {
        &self.y[r - 1]
    }

    pub fn psi(&self, r: usize) -> &Matrix {
        &self.psi[r - 1]
    }

    /// Columns are the `v_T` in `z`-coordinates.
    pub fn v_matrix(&self) -> &Matrix {
        &self.v
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn residues(&self) -> &[Vec<Residue>] {
        &self.residues
    }

    /// `V^{-1} g V`: the operator `g` in `v`-coordinates.
    pub fn in_v_basis(&self, g: &Matrix) -> Matrix {
        self.v_inv.mul(g).mul(&self.v)
    }

    /// `v`-coordinates of a vector given in `z`-coordinates.
    pub fn v_coordinates(&self, z: &[u64]) -> Vec<u64> {
        self.v_inv.mul_vec(z)
    }

    /// `psi_{r_1} ... psi_{r_m} v` in `z`-coordinates.
    pub fn apply_psi_word(&self, word: &[usize], v: &[u64]) -> Vec<u64> {
        word.iter().rev().fold(v.to_vec(), |acc, &r| self.psi[r - 1].mul_vec(&acc))
    }

    fn e_or_zero(&self, w: &[Residue]) -> Matrix {
        self.idempotent(w).cloned().unwrap_or_else(|| Matrix::zeros(self.field(), self.dim(), self.dim()))
    }

    /// Every defining relation of the homogeneous presentation, including the
    /// cyclotomic one, as matrix identities on the module.
    pub fn verify_relations(&self) -> Report {
        let f = self.field();
        let n = self.dim();
        let d = self.d();
        let params = self.params();
        let shape = self.module.shape();
        let id = Matrix::identity(f, n);
        let zero = Matrix::zeros(f, n, n);
        let mut rep = Report::new();
        for name in ["klr.cyclotomic", "klr.idempotents", "klr.nilpotent"] {
            rep.declare(name);
        }
        let mut check = |name: &str, lhs: Matrix, rhs: &Matrix, what: &dyn Fn() -> String| {
            let ok = lhs == *rhs;
            rep.record(name, ok, || format!("S({shape}): {}", what()));
        };

        for (k, y) in self.y.iter().enumerate() {
            check("klr.nilpotent", y.pow(n), &zero, &|| format!("y{}^{n}", k + 1));
        }
        let mut sum = zero.clone();
        for (a, (wa, ea)) in self.idempotents().enumerate() {
            sum = sum.add(ea);
            for (b, (wb, eb)) in self.idempotents().enumerate() {
                let want = if a == b { ea.clone() } else { zero.clone() };
                check("klr.idempotents", ea.mul(eb), &want, &|| format!("e({wa:?}) e({wb:?})"));
            }
            if d >= 1 {
                let k = params.lambda_pairing(wa[0]) as usize;
                check("klr.cyclotomic", self.y(1).pow(k).mul(ea), &zero, &|| format!("y1^{k} e({wa:?})"));
            }
        }
        check("klr.idempotents", sum, &id, &|| "sum of e(i)".into());

        for r in 1..=d {
            for s in r + 1..=d {
                check("klr.y_commute", self.y(r).mul(self.y(s)), &self.y(s).mul(self.y(r)), &|| format!("y{r} y{s}"));
            }
        }
        for r in 1..d {
            let psi = self.psi(r);
            for s in (1..=d).filter(|&s| s != r && s != r + 1) {
                check("klr.psi_y_commute", psi.mul(self.y(s)), &self.y(s).mul(psi), &|| format!("psi{r} y{s}"));
            }
            for s in r + 2..d {
                let other = self.psi(s);
                check("klr.psi_commute", psi.mul(other), &other.mul(psi), &|| format!("psi{r} psi{s}"));
            }
        }

        for (w, e) in self.idempotents() {
            for r in 1..=d {
                check("klr.y_weight", self.y(r).mul(e), &e.mul(self.y(r)), &|| format!("y{r} e({w:?})"));
            }
            for r in 1..d {
                let psi = self.psi(r);
                let mut sw = w.clone();
                sw.swap(r - 1, r);
                let es = self.e_or_zero(&sw);
                check("klr.psi_weight", psi.mul(e), &es.mul(psi), &|| format!("psi{r} e({w:?})"));
                check("klr.psi_weight", e.mul(psi), &psi.mul(&es), &|| format!("e({w:?}) psi{r}"));

                let (a, b) = (w[r - 1], w[r]);
                let arrow = params.arrow(a, b);
                let delta = if arrow == Arrow::Equal { e.clone() } else { zero.clone() };
                let (yr, yr1) = (self.y(r), self.y(r + 1));
                check("klr.psi_y_next", psi.mul(yr1).mul(e), &yr.mul(psi).mul(e).add(&delta), &|| {
                    format!("psi{r} y{} e({w:?})", r + 1)
                });
                check("klr.y_next_psi", yr1.mul(psi).mul(e), &psi.mul(yr).mul(e).add(&delta), &|| {
                    format!("y{} psi{r} e({w:?})", r + 1)
                });
                let sq = match arrow {
                    Arrow::Equal => zero.clone(),
                    Arrow::Unrelated => e.clone(),
                    Arrow::Forward => yr1.sub(yr).mul(e),
                    Arrow::Backward => yr.sub(yr1).mul(e),
                    Arrow::Double => yr1.sub(yr).mul(&yr.sub(yr1)).mul(e),
                };
                check("klr.psi_square", psi.mul(psi).mul(e), &sq, &|| format!("psi{r}^2 e({w:?})"));

                if r + 1 < d {
                    let next = self.psi(r + 1);
                    let lhs = psi.mul(next).mul(psi).mul(e);
                    let base = next.mul(psi).mul(next).mul(e);
                    let c = w[r + 1];
                    let correction = if c != a {
                        zero.clone()
                    } else {
                        match arrow {
                            Arrow::Forward => e.clone(),
                            Arrow::Backward => e.scale(f.neg(1)),
                            Arrow::Double => {
                                self.y(r).add(self.y(r + 2)).sub(&self.y(r + 1).scale(2)).mul(e)
                            }
                            _ => zero.clone(),
                        }
                    };
                    check("klr.braid", lhs, &base.add(&correction), &|| format!("braid at {r} on e({w:?})"));
                }
            }
        }
        rep
    }

    /// Support of each `v_T` in the `z`-basis lies in `{S : S <= T}` with
    /// nonzero diagonal, and `v_{T^mu} = z_mu`.
    pub fn verify_v_basis(&self) -> Result<Report> {
        let mut rep = Report::new();
        let ts = self.tableaux();
        let shape = self.module.shape();
        for (k, t) in ts.iter().enumerate() {
            let mut ok = self.v.get(k, k) != 0;
            for (j, s) in ts.iter().enumerate() {
                if self.v.get(j, k) != 0 && !tableau_bruhat(s, t)? {
                    ok = false;
                }
            }
            rep.record("vbasis.triangular", ok, || format!("S({shape}): v_T for T = {}", t.filling_string()));
        }
        let k0 = self.module.initial_index();
        let col: Vec<u64> = (0..self.dim()).map(|j| self.v.get(j, k0)).collect();
        rep.record("vbasis.initial", col == self.module.unit_vector(k0), || format!("S({shape}): v_(T^mu) != z_mu"));
        Ok(rep)
    }

    /// For every `T` and generator: `y_r v_T` is supported on `S < T` with
    /// `i^S = i^T` and `deg S = deg T + 2`; `psi_r v_T` on `S` with
    /// `i^S = s_r i^T` and `deg S = deg T - a_{i_r, i_{r+1}}`; and
    /// `e(i) v_T = delta_{i, i^T} v_T`.
    pub fn verify_homogeneity(&self) -> Result<Report> {
        let params = self.params();
        let ts = self.tableaux();
        let shape = self.module.shape();
        let n = self.dim();
        let d = self.d();
        let mut rep = Report::new();
        for name in ["homogeneity.y", "homogeneity.y_lower", "homogeneity.psi", "homogeneity.weight"] {
            rep.declare(name);
        }
        for r in 1..=d {
            let g = self.in_v_basis(self.y(r));
            for k in 0..n {
                let mut ok = true;
                let mut lower = true;
                for j in 0..n {
                    if g.get(j, k) == 0 {
                        continue;
                    }
                    ok &= self.residues[j] == self.residues[k] && self.degrees[j] == self.degrees[k] + 2;
                    lower &= j != k && tableau_bruhat(&ts[j], &ts[k])?;
                }
                let tag = || format!("S({shape}): y{r} v_T for T = {}", ts[k].filling_string());
                rep.record("homogeneity.y", ok, tag);
                rep.record("homogeneity.y_lower", lower, tag);
            }
        }
        for r in 1..d {
            let g = self.in_v_basis(self.psi(r));
            for k in 0..n {
                let i = &self.residues[k];
                let mut si = i.clone();
                si.swap(r - 1, r);
                let want = self.degrees[k] - params.cartan(i[r - 1], i[r]);
                let ok = (0..n).all(|j| g.get(j, k) == 0 || (self.residues[j] == si && self.degrees[j] == want));
                rep.record("homogeneity.psi", ok, || format!("S({shape}): psi{r} v_T for T = {}", ts[k].filling_string()));
            }
        }
        for (w, e) in self.idempotents() {
            let g = self.in_v_basis(e);
            for k in 0..n {
                let diag = if self.residues[k] == *w { 1 } else { 0 };
                let ok = (0..n).all(|j| g.get(j, k) == if j == k { diag } else { 0 });
                rep.record("homogeneity.weight", ok, || format!("S({shape}): e({w:?}) v_T for T = {}", ts[k].filling_string()));
            }
        }
        Ok(rep)
    }

    /// For every `T` whose `w_T` has at most `cap` reduced words, each word
    /// applied to `z_mu` gives `v_T` plus `v_S` terms with `S < T`,
    /// `i^S = i^T` and `deg S = deg T`. Returns the report and the number of
    /// tableaux skipped because of the cap.
    pub fn verify_reduced_words(&self, cap: usize) -> Result<(Report, usize)> {
        let ts = self.tableaux();
        let shape = self.module.shape();
        let n = self.dim();
        let z = self.module.unit_vector(self.module.initial_index());
        let mut rep = Report::new();
        rep.declare("reduced_words.independent");
        let mut skipped = 0;
        for (k, t) in ts.iter().enumerate() {
            let Some(words) = t.permutation().reduced_words(cap) else {
                skipped += 1;
                continue;
            };
            for word in words {
                let c = self.v_coordinates(&self.apply_psi_word(&word, &z));
                let mut ok = c[k] == 1;
                for j in (0..n).filter(|&j| j != k && c[j] != 0) {
                    ok &= tableau_bruhat(&ts[j], t)?
                        && self.residues[j] == self.residues[k]
                        && self.degrees[j] == self.degrees[k];
                }
                rep.record("reduced_words.independent", ok, || {
                    format!("S({shape}): word {word:?} for T = {}", t.filling_string())
                });
            }
        }
        Ok((rep, skipped))
    }

    /// Graded dimensions of the weight spaces read off the matrices: `v_T`
    /// counts towards weight `i` in degree `deg T` when `e(i) v_T = v_T`,
    /// and each `rank e(i)` must equal the number of such `v_T`.
    pub fn graded_weight_dimensions(&self) -> Result<GradedCharacter> {
        let mut ch = GradedCharacter::new();
        for (w, e) in self.idempotents() {
            let g = self.in_v_basis(e);
            let mut count = 0;
            for k in 0..self.dim() {
                if (0..self.dim()).all(|j| g.get(j, k) == if j == k { 1 } else { 0 }) {
                    ch.add_term(w.clone(), self.degrees[k], 1);
                    count += 1;
                }
            }
            if e.rank() != count {
                return Err(Error::convention(format!(
                    "e({w:?}) has rank {} but fixes {count} of the v_T on S({})",
                    e.rank(),
                    self.module.shape()
                )));
            }
        }
        Ok(ch)
    }

    /// Weight dimensions from the matrices against `sum q^{deg T}`.
    pub fn verify_weight_dimensions(&self) -> Result<Report> {
        let mut rep = Report::new();
        let from_matrices = self.graded_weight_dimensions();
        let expected = graded_character(self.module.shape(), self.params())?;
        let ok = from_matrices.as_ref().is_ok_and(|c| *c == expected);
        rep.record("weights.dimensions", ok, || match &from_matrices {
            Ok(c) => format!("S({}): {c:?} != {expected:?}", self.module.shape()),
            Err(e) => format!("S({}): {e}", self.module.shape()),
        });
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{multipartitions, LaurentPoly, Multipartition};
    use crate::hecke::{RegularRep, DEFAULT_MAX_DIM};
    use crate::scalars::FieldSpec;
    use crate::specht::specht_module;

    fn data(e: u32, p: u64, charge: Vec<i64>, mu: &str) -> GradedSpechtData {
        let params = AlgebraParams::new(FieldSpec::prime(p, e).unwrap(), charge.clone()).unwrap();
        let mu = Multipartition::parse(mu, charge.len()).unwrap();
        let rep = RegularRep::build(&params, mu.size(), DEFAULT_MAX_DIM).unwrap();
        GradedSpechtData::build(specht_module(&mu, &rep).unwrap()).unwrap()
    }

    #[test]
    fn two_row_shape_e2() {
        let g = data(2, 5, vec![0], "2");
        assert_eq!(g.weights(), &[vec![0, 1]]);
        assert!(g.idempotent(&[0, 1]).unwrap().is_identity());
        assert!(g.y(1).is_zero() && g.y(2).is_zero());
        let z = g.module().unit_vector(0);
        assert!(g.psi(1).mul_vec(&z).iter().all(|&c| c == 0));
    }

    #[test]
    fn hook_e3() {
        let g = data(3, 7, vec![0], "2,1");
        assert_eq!(g.weights(), &[vec![0, 1, 2], vec![0, 2, 1]]);
        for (_, e) in g.idempotents() {
            assert_eq!(e.rank(), 1);
        }
        assert_eq!(g.degrees(), &[0, 1]);
        // psi_2 v_(T^mu) = v_T' for the tableau 1,3/2.
        let z = g.module().unit_vector(0);
        let c = g.v_coordinates(&g.psi(2).mul_vec(&z));
        assert_eq!(c, vec![0, 1]);
        let ch = g.graded_weight_dimensions().unwrap();
        assert_eq!(ch.get(&[0, 1, 2]), Some(&LaurentPoly::monomial(0, 1)));
        assert_eq!(ch.get(&[0, 2, 1]), Some(&LaurentPoly::monomial(1, 1)));
        let v = g.v_matrix();
        assert_eq!((v.get(0, 0), v.get(1, 0)), (1, 0));
        assert_ne!(v.get(1, 1), 0);
    }

    #[test]
    fn column_shape_has_one_weight() {
        let g = data(3, 7, vec![1], "1,1,1");
        assert_eq!(g.weights().len(), 1);
        let ch = g.graded_weight_dimensions().unwrap();
        assert_eq!(ch.total(), 1);
    }

    #[test]
    fn full_verification_small_grid() {
        let grid: Vec<(u32, u64, Vec<i64>, usize)> = vec![
            (2, 5, vec![0], 4),
            (3, 7, vec![0], 4),
            (3, 7, vec![0, 0], 3),
            (3, 7, vec![0, 1], 3),
            (2, 5, vec![0, 1], 3),
            (4, 5, vec![0, 2], 3),
        ];
        for (e, p, charge, d) in grid {
            let params = AlgebraParams::new(FieldSpec::prime(p, e).unwrap(), charge.clone()).unwrap();
            let rep = RegularRep::build(&params, d, DEFAULT_MAX_DIM).unwrap();
            for mu in multipartitions(d, charge.len()) {
                let module = specht_module(&mu, &rep).unwrap();
                let g = GradedSpechtData::build(module.clone()).unwrap();
                let mut report = g.verify_relations();
                report.merge(g.verify_v_basis().unwrap());
                report.merge(g.verify_homogeneity().unwrap());
                report.merge(g.verify_reduced_words(DEFAULT_WORD_CAP).unwrap().0);
                report.merge(g.verify_weight_dimensions().unwrap());
                assert!(report.all_passed(), "e={e} charge={charge:?} mu={mu}: {:#?}", report.checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
                let seeded = GradedSpechtData::build_with(module, WordChoice::Seeded(11)).unwrap();
                assert_eq!(seeded.graded_weight_dimensions().unwrap(), g.graded_weight_dimensions().unwrap());
            }
        }
    }

    #[test]
    fn longest_element_words_agree_up_to_lower_terms() {
        let g = data(3, 7, vec![0], "3,2");
        assert!(g.tableaux().iter().any(|t| t.permutation().count_reduced_words() > 1));
        let (rep, skipped) = g.verify_reduced_words(DEFAULT_WORD_CAP).unwrap();
        assert!(rep.all_passed());
        assert_eq!(skipped, 0);
        assert!(rep.get("reduced_words.independent").unwrap().instances > g.dim() as u64);
    }

    #[test]
    fn commuting_swaps_are_exact() {
        let g = data(3, 7, vec![0], "2,2");
        let z = g.module().unit_vector(g.module().initial_index());
        let a = g.apply_psi_word(&[1, 3], &z);
        let b = g.apply_psi_word(&[3, 1], &z);
        assert_eq!(a, b);
    }

    #[test]
    fn projectors_reject_foreign_eigenvalues() {
        let params = AlgebraParams::new(FieldSpec::prime(7, 3).unwrap(), vec![0]).unwrap();
        let f = PrimeField::new(7).unwrap();
        // 3 has order 6 in F_7, so it is not a power of xi = 2.
        let x = Matrix::scalar(f, 2, 3);
        assert!(matches!(eigen_projectors(&x, &params, 2), Err(Error::Convention(_))));
    }
}
