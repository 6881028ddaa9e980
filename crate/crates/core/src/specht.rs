//! Specht modules `S(mu) = H z_mu` inside `H / K(mu)`, with the standard
//! basis `z_T = T_{w_T} z_mu` and exact generator matrices in that basis.

use crate::combinatorics::{multipartitions, tableau_bruhat, AlgebraParams, Multipartition, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::hecke::{Generator, RegularRep, Side};
use crate::linalg::{Echelon, Matrix, Poly};
use crate::report::Report;
use crate::scalars::PrimeField;

/// Row-echelon basis of `K(mu)`, the span of all `m_{S,T}` with
/// `S, T` standard of a shape `nu` strictly dominating `mu`.
///
/// Stability under left and right multiplication by every generator is
/// checked; a failure means the cellular conventions are wrong and is
/// reported as a convention error.
pub fn cell_ideal(mu: &Multipartition, rep: &RegularRep) -> Result<Echelon> {
    check_shape(mu, rep)?;
    let dim = rep.dim();
    let mut ideal = Echelon::new(rep.field(), dim);
    for nu in multipartitions(mu.size(), mu.level()) {
        if nu == *mu || !nu.dominates(mu) {
            continue;
        }
        let m = rep.m_element(&nu)?;
        let ts = Tableau::standard(&nu);
        for s in &ts {
            for t in &ts {
                ideal.insert(&rep.m_st_from(&m, s, t).to_dense(dim));
            }
        }
    }
    let basis: Vec<Vec<u64>> = ideal.basis().map(<[u64]>::to_vec).collect();
    for g in rep.generators() {
        for side in [Side::Left, Side::Right] {
            let op = rep.operator_of(side, g);
            if let Some(k) = basis.iter().position(|b| !ideal.contains(&op.apply(b))) {
                return Err(Error::convention(format!(
                    "K({mu}) is not stable under {side:?} multiplication by {g} (basis vector {k})"
                )));
            }
        }
    }
    Ok(ideal)
}

fn check_shape(mu: &Multipartition, rep: &RegularRep) -> Result<()> {
    if mu.size() != rep.d() || mu.level() != rep.level() {
        return Err(Error::param(format!("{mu} does not match d = {}, l = {}", rep.d(), rep.level())));
    }
    Ok(())
}

/// `S(mu)` with generator matrices in the basis `z_T`, `T` standard in
/// canonical order. Column `T` of a matrix holds the coordinates of `g z_T`.
#[derive(Clone, Debug)]
pub struct ModuleRealization {
    params: AlgebraParams,
    f: PrimeField,
    xi: u64,
    shape: Multipartition,
    tableaux: Vec<Tableau>,
    t: Vec<Matrix>,
    x: Vec<Matrix>,
    ideal_dim: usize,
}

/// Builds `S(mu)`. Fails with a convention error if the `z_T` are dependent
/// modulo `K(mu)` or their span is not closed under the generators.
pub fn specht_module(mu: &Multipartition, rep: &RegularRep) -> Result<ModuleRealization> {
    let ideal = cell_ideal(mu, rep)?;
    let f = rep.field();
    let dim = rep.dim();
    let m = rep.m_element(mu)?;
    let tableaux = Tableau::standard(mu);
    let mut zs = Echelon::new(f, dim);
    let mut vectors = Vec::with_capacity(tableaux.len());
    for t in &tableaux {
        let z = rep.left_t_word(&t.permutation().canonical_reduced_word(), &m);
        let z = ideal.reduce(&z.to_dense(dim));
        if !zs.insert(&z) {
            return Err(Error::convention(format!(
                "z_T for T = {} is dependent on earlier z_T modulo K({mu})",
                t.filling_string()
            )));
        }
        vectors.push(z);
    }
    let n = tableaux.len();
    let matrix_of = |g: Generator| -> Result<Matrix> {
        let op = rep.operator_of(Side::Left, g);
        let mut cols = Vec::with_capacity(n);
        for (t, z) in tableaux.iter().zip(&vectors) {
            let image = ideal.reduce(&op.apply(z));
            let coords = zs.solve(&image).ok_or_else(|| {
                Error::convention(format!("{g} z_T leaves the span of the z_T for T = {}", t.filling_string()))
            })?;
            cols.push(coords);
        }
        Ok(Matrix::from_columns(f, n, &cols))
    };
    let d = rep.d();
    let t = (1..d).map(|r| matrix_of(Generator::T(r))).collect::<Result<Vec<_>>>()?;
    let x = (1..=d).map(|s| matrix_of(Generator::X(s))).collect::<Result<Vec<_>>>()?;
    Ok(ModuleRealization {
        params: rep.params().clone(),
        f,
        xi: rep.xi(),
        shape: mu.clone(),
        tableaux,
        t,
        x,
        ideal_dim: ideal.rank(),
    })
}

impl ModuleRealization {
    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn field(&self) -> PrimeField {
        self.f
    }

    pub fn xi(&self) -> u64 {
        self.xi
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn d(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal_dim
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.tableaux.iter().position(|s| s == t)
    }

    /// Position of `T^mu` in the basis.
    pub fn initial_index(&self) -> usize {
        self.index_of(&Tableau::initial(&self.shape)).expect("T^mu is standard")
    }

    /// Matrix of `T_r`.
    pub fn t(&self, r: usize) -> &Matrix {
        &self.t[r - 1]
    }

    /// Matrix of `X_s`.
    pub fn x(&self, s: usize) -> &Matrix {
        &self.x[s - 1]
    }

    pub fn unit_vector(&self, k: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[k] = 1;
        v
    }

    /// `T_{r_1} ... T_{r_m} v`.
    pub fn apply_t_word(&self, word: &[usize], v: &[u64]) -> Vec<u64> {
        word.iter().rev().fold(v.to_vec(), |acc, &r| self.t(r).mul_vec(&acc))
    }

    /// `X_r z_mu = xi^{i_r} z_mu` with `i = i^mu`.
    pub fn check_eigenvalues(&self) -> Report {
        let mut rep = Report::new();
        rep.declare("specht.eigenvalues");
        let k = self.initial_index();
        let z = self.unit_vector(k);
        let res = Tableau::initial(&self.shape).residue_sequence(&self.params);
        for (r, &i) in (1..=self.d()).zip(&res) {
            let c = self.f.pow(self.xi, i as u64);
            let got = self.x(r).mul_vec(&z);
            let want: Vec<u64> = z.iter().map(|&v| self.f.mul(v, c)).collect();
            rep.record("specht.eigenvalues", got == want, || format!("{}: X_{r} z_mu != xi^{i} z_mu", self.shape));
        }
        rep
    }

    /// Every defining relation of `H_d^Lambda` as a matrix identity on the
    /// module.
    pub fn check_relations(&self) -> Report {
        let f = self.f;
        let xi = self.xi;
        let n = self.dim();
        let d = self.d();
        let id = Matrix::identity(f, n);
        let mut rep = Report::new();
        let mut rec = |name: &str, m: Matrix, what: String| {
            rep.record(name, m.is_zero(), || format!("{}: {what}", self.shape));
        };
        for r in 1..=d {
            for s in r + 1..=d {
                rec("specht.x_commute", self.x(r).mul(self.x(s)).sub(&self.x(s).mul(self.x(r))), format!("X{r} X{s}"));
            }
        }
        for r in 1..d {
            let (t, xr, xr1) = (self.t(r), self.x(r), self.x(r + 1));
            rec("specht.txt", t.mul(xr).mul(t).sub(&xr1.scale(xi)), format!("T{r} X{r} T{r}"));
            rec(
                "specht.quadratic",
                t.mul(t).sub(&t.scale(f.sub(xi, 1))).sub(&id.scale(xi)),
                format!("T{r}^2"),
            );
            for s in (1..=d).filter(|&s| s != r && s != r + 1) {
                rec("specht.t_x_commute", t.mul(self.x(s)).sub(&self.x(s).mul(t)), format!("T{r} X{s}"));
            }
            if r + 1 < d {
                let u = self.t(r + 1);
                rec("specht.braid", t.mul(u).mul(t).sub(&u.mul(t).mul(u)), format!("braid at {r}"));
            }
            for s in r + 2..d {
                let u = self.t(s);
                rec("specht.t_commute", t.mul(u).sub(&u.mul(t)), format!("T{r} T{s}"));
            }
        }
        if d >= 1 {
            let poly = self.params.charge().iter().fold(Poly::one(f), |acc, &k| {
                acc.mul(&Poly::new(f, vec![f.neg(f.pow(xi, k as u64)), 1]))
            });
            rec("specht.cyclotomic", poly.eval_matrix(self.x(1)), "cyclotomic polynomial at X1".into());
        }
        rep
    }

    /// For every `mu`-tableau `S`, standard or not, `T_{w_S} z_mu` lies in
    /// the span of the `z_T` with `T` standard and `T <= S` in Bruhat order.
    /// Tableaux are enumerated exhaustively when there are at most `cap`.
    pub fn check_bruhat_support(&self, cap: usize) -> Result<Report> {
        let mut rep = Report::new();
        rep.declare("specht.bruhat_support");
        let d = self.d();
        let total: usize = (1..=d).product();
        if total > cap {
            return Ok(rep);
        }
        let z = self.unit_vector(self.initial_index());
        for w in Permutation::all(d) {
            let s = Tableau::new(self.shape.clone(), w.one_line().to_vec())?;
            let v = self.apply_t_word(&w.canonical_reduced_word(), &z);
            let mut ok = true;
            for (k, &c) in v.iter().enumerate() {
                if c != 0 && !tableau_bruhat(&self.tableaux[k], &s)? {
                    ok = false;
                }
            }
            rep.record("specht.bruhat_support", ok, || {
                format!("{}: T_w z_mu for S = {} has support outside the Bruhat interval", self.shape, s.filling_string())
            });
        }
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::DEFAULT_MAX_DIM;
    use crate::scalars::FieldSpec;

    fn rep(e: u32, p: u64, charge: Vec<i64>, d: usize) -> RegularRep {
        let params = AlgebraParams::new(FieldSpec::prime(p, e).unwrap(), charge).unwrap();
        RegularRep::build(&params, d, DEFAULT_MAX_DIM).unwrap()
    }

    #[test]
    fn cell_ideal_examples() {
        let r = rep(3, 7, vec![0], 2);
        let col = Multipartition::parse("1,1", 1).unwrap();
        assert_eq!(cell_ideal(&col, &r).unwrap().rank(), 1);
        let row = Multipartition::parse("2", 1).unwrap();
        assert_eq!(cell_ideal(&row, &r).unwrap().rank(), 0);

        let r2 = rep(3, 7, vec![0, 1], 3);
        let top = Multipartition::parse("3|_", 2).unwrap();
        assert_eq!(cell_ideal(&top, &r2).unwrap().rank(), 0);
        let shapes = multipartitions(3, 2);
        let dims: Vec<usize> = shapes.iter().map(|mu| cell_ideal(mu, &r2).unwrap().rank()).collect();
        for (a, mu) in shapes.iter().enumerate() {
            for (b, nu) in shapes.iter().enumerate() {
                if mu.dominates(nu) {
                    assert!(dims[a] <= dims[b], "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn one_dimensional_modules() {
        for d in 2..=3 {
            let r = rep(3, 7, vec![0], d);
            let row = specht_module(&Multipartition::new(vec![vec![d]]).unwrap(), &r).unwrap();
            let col = specht_module(&Multipartition::new(vec![vec![1; d]]).unwrap(), &r).unwrap();
            let f = r.field();
            for k in 1..d {
                assert_eq!(row.t(k).get(0, 0), r.xi());
                assert_eq!(col.t(k).get(0, 0), f.neg(1));
            }
        }
    }

    #[test]
    fn dimensions_and_relations() {
        let grid: Vec<(u32, u64, Vec<i64>, usize)> =
            vec![(2, 5, vec![0], 4), (3, 7, vec![0], 4), (3, 7, vec![0, 0], 3), (3, 7, vec![0, 1], 3)];
        for (e, p, charge, d) in grid {
            let r = rep(e, p, charge.clone(), d);
            let mut total = 0;
            for mu in multipartitions(d, charge.len()) {
                let m = specht_module(&mu, &r).unwrap();
                assert_eq!(m.dim(), Tableau::standard(&mu).len());
                total += m.dim() * m.dim();
                assert!(m.check_relations().all_passed(), "{mu}");
                assert!(m.check_eigenvalues().all_passed(), "{mu}");
                let b = m.check_bruhat_support(1000).unwrap();
                assert!(b.all_passed(), "{mu}: {b:?}");
            }
            assert_eq!(total, r.dim());
        }
    }

    #[test]
    fn eigenvalues_of_two_node_shapes() {
        let r = rep(2, 5, vec![0], 2);
        let m = specht_module(&Multipartition::parse("2", 1).unwrap(), &r).unwrap();
        assert_eq!(m.x(1).get(0, 0), 1);
        assert_eq!(m.x(2).get(0, 0), r.xi());
        let c = specht_module(&Multipartition::parse("1,1", 1).unwrap(), &r).unwrap();
        // i^mu = (0, e-1) down the column
        assert_eq!(c.x(2).get(0, 0), r.field().pow(r.xi(), 1));
        let r3 = rep(3, 7, vec![0], 2);
        let c3 = specht_module(&Multipartition::parse("1,1", 1).unwrap(), &r3).unwrap();
        assert_eq!(c3.x(2).get(0, 0), r3.field().pow(r3.xi(), 2));
    }

    #[test]
    fn empty_shape() {
        let r = rep(3, 7, vec![0, 2], 0);
        let m = specht_module(&Multipartition::empty(2), &r).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.check_eigenvalues().all_passed());
        assert_eq!(m.check_eigenvalues().get("specht.eigenvalues").unwrap().instances, 0);
    }
}
