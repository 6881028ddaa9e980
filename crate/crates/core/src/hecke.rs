//! The cyclotomic Hecke algebra `H_d^Lambda` on its Ariki-Koike basis
//! `T_w X_1^{a_1} ... X_d^{a_d}` (`0 <= a_r < l`), as its regular
//! representation.
//!
//! Basis index `= perm_index * l^d + exp_index`. Permutations are sorted by
//! length, then one-line notation; exponent vectors are read as base-`l`
//! numbers with `a_1` most significant. Index 0 is the identity.
//!
//! Multiplication is assembled from four operator families: `L(g)` and
//! `R(g)` for left and right multiplication by `T_r` and `X_s`. Right
//! multiplication by `T_r` and left multiplication by `T_r` have closed forms
//! on basis elements; `R(X_t)` needs the normal form of `X_t^l`, built by
//! recursion on `t`; `L(X_s)` is then read off as `X_s T_w X^a`.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::combinatorics::{AlgebraParams, Multipartition, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::linalg::{normalize_sparse, Poly, SparseMatrix};
use crate::report::Report;
use crate::scalars::PrimeField;

/// Largest regular representation built unless the caller asks otherwise.
pub const DEFAULT_MAX_DIM: usize = 1500;

type Sparse = Vec<(usize, u64)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `T_r`, `1 <= r < d`.
    T(usize),
    /// `X_s`, `1 <= s <= d`.
    X(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T(r) => write!(f, "T{r}"),
            Generator::X(s) => write!(f, "X{s}"),
        }
    }
}

/// `T_w X_1^{a_1} ... X_d^{a_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AKMonomial {
    pub w: Permutation,
    pub a: Vec<usize>,
}

impl fmt::Display for AKMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(ToString::to_string).collect();
        write!(f, "T{} * X^({})", self.w, a.join(","))
    }
}

/// Sparse combination of basis monomials, by basis index. No zero
/// coefficients are stored and indices increase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    f: PrimeField,
    terms: Sparse,
}

impl AlgebraElement {
    pub fn zero(f: PrimeField) -> Self {
        AlgebraElement { f, terms: vec![] }
    }

    pub fn from_terms(f: PrimeField, terms: Vec<(usize, u64)>) -> Self {
        AlgebraElement { f, terms: normalize_sparse(f, terms) }
    }

    pub fn from_dense(f: PrimeField, v: &[u64]) -> Self {
        let terms = v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        AlgebraElement { f, terms }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<u64> {
        let mut v = vec![0; dim];
        for &(i, c) in &self.terms {
            v[i] = c;
        }
        v
    }

    pub fn terms(&self) -> &[(usize, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut t = self.terms.clone();
        t.extend_from_slice(&other.terms);
        AlgebraElement::from_terms(self.f, t)
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(self.f.neg(1)))
    }

    pub fn scale(&self, c: u64) -> AlgebraElement {
        AlgebraElement::from_terms(self.f, self.terms.iter().map(|&(i, x)| (i, self.f.mul(x, c))).collect())
    }
}

/// Left or right multiplication operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The regular representation of `H_d^Lambda`.
#[derive(Clone, Debug)]
pub struct RegularRep {
    params: AlgebraParams,
    f: PrimeField,
    xi: u64,
    d: usize,
    l: usize,
    /// `l^d`.
    lpow: usize,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, usize>,
    words: Vec<Vec<usize>>,
    /// `[r-1][w]`: index of `s_r w` and whether it is shorter than `w`.
    left_next: Vec<Vec<(usize, bool)>>,
    /// `[r-1][w]`: index of `w s_r` and whether it is shorter than `w`.
    right_next: Vec<Vec<(usize, bool)>>,
    lt: Vec<SparseMatrix>,
    rt: Vec<SparseMatrix>,
    lx: Vec<SparseMatrix>,
    rx: Vec<SparseMatrix>,
}

impl RegularRep {
    /// Builds all operators. Needs prime-field parameters (`e >= 2`) and
    /// `l^d * d! <= max_dim`.
    pub fn build(params: &AlgebraParams, d: usize, max_dim: usize) -> Result<Self> {
        let (f, xi) = params
            .field()
            .prime_field()
            .ok_or_else(|| Error::param("the algebra engine needs a prime field with e >= 2"))?;
        let l = params.level();
        let mut lpow: usize = 1;
        let mut dim: usize = 1;
        for k in 1..=d {
            lpow = lpow.checked_mul(l).ok_or_else(|| too_big(d, l, max_dim))?;
            dim = dim.checked_mul(k * l).ok_or_else(|| too_big(d, l, max_dim))?;
        }
        if dim > max_dim {
            return Err(too_big(d, l, max_dim));
        }

        let mut perms = Permutation::all(d);
        perms.sort_by_cached_key(|w| (w.length(), w.clone()));
        let perm_index: HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let words = perms.iter().map(Permutation::canonical_reduced_word).collect();
        let table = |left: bool| -> Vec<Vec<(usize, bool)>> {
            (1..d)
                .map(|r| {
                    perms
                        .iter()
                        .map(|w| {
                            let mut u = w.clone();
                            let shorter = if left { w.has_left_descent(r) } else { w.has_right_descent(r) };
                            if left {
                                u.left_mul_s(r)
                            } else {
                                u.right_mul_s(r)
                            }
                            (perm_index[&u], shorter)
                        })
                        .collect()
                })
                .collect()
        };
        let left_next = table(true);
        let right_next = table(false);

        let mut rep = RegularRep {
            params: params.clone(),
            f,
            xi,
            d,
            l,
            lpow,
            perms,
            perm_index,
            words,
            left_next,
            right_next,
            lt: vec![],
            rt: vec![],
            lx: vec![],
            rx: vec![],
        };
        rep.lt = (1..d).map(|r| rep.operator(|i| rep.left_t(r, &[(i, 1)]))).collect();
        rep.rt = (1..d).map(|r| rep.operator(|i| rep.right_t(r, &[(i, 1)]))).collect();
        rep.build_rx()?;
        rep.lx = (1..=d).map(|s| rep.operator(|i| rep.left_x_column(s, i))).collect();
        Ok(rep)
    }

    fn operator(&self, col: impl Fn(usize) -> Sparse) -> SparseMatrix {
        SparseMatrix::from_columns(self.f, self.dim(), (0..self.dim()).map(col).collect())
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn field(&self) -> PrimeField {
        self.f
    }

    pub fn xi(&self) -> u64 {
        self.xi
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn level(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.perms.len() * self.lpow
    }

    fn decode(&self, mut e: usize) -> Vec<usize> {
        let mut a = vec![0; self.d];
        for s in (0..self.d).rev() {
            a[s] = e % self.l;
            e /= self.l;
        }
        a
    }

    fn encode(&self, a: &[usize]) -> usize {
        a.iter().fold(0, |acc, &x| acc * self.l + x)
    }

    fn index(&self, p: usize, a: &[usize]) -> usize {
        p * self.lpow + self.encode(a)
    }

    pub fn monomial(&self, idx: usize) -> AKMonomial {
        AKMonomial { w: self.perms[idx / self.lpow].clone(), a: self.decode(idx % self.lpow) }
    }

    pub fn index_of(&self, m: &AKMonomial) -> Option<usize> {
        if m.a.len() != self.d || m.a.iter().any(|&x| x >= self.l) {
            return None;
        }
        self.perm_index.get(&m.w).map(|&p| self.index(p, &m.a))
    }

    /// Canonical reduced word of the permutation with the given index.
    pub fn word_of(&self, p: usize) -> &[usize] {
        &self.words[p]
    }

    fn xi1(&self) -> u64 {
        self.f.sub(self.xi, 1)
    }

    /// `T_r x`: `T_r T_w = T_{s_r w}` when longer, else
    /// `(xi-1) T_w + xi T_{s_r w}`.
    fn left_t(&self, r: usize, x: &[(usize, u64)]) -> Sparse {
        let mut out = Vec::with_capacity(2 * x.len());
        for &(idx, c) in x {
            let (p, e) = (idx / self.lpow, idx % self.lpow);
            let (q, shorter) = self.left_next[r - 1][p];
            if shorter {
                out.push((idx, self.f.mul(c, self.xi1())));
                out.push((q * self.lpow + e, self.f.mul(c, self.xi)));
            } else {
                out.push((q * self.lpow + e, c));
            }
        }
        normalize_sparse(self.f, out)
    }

    /// `x T_r`, using `f T_r = T_r (s_r f) + (xi-1) Y (f - s_r f)/(Y - X)`
    /// for `f` in `X = X_r`, `Y = X_{r+1}`. Exponents never exceed `l-1`.
    fn right_t(&self, r: usize, x: &[(usize, u64)]) -> Sparse {
        let f = self.f;
        let mut out = Vec::new();
        for &(idx, c) in x {
            let (p, e) = (idx / self.lpow, idx % self.lpow);
            let mut a = self.decode(e);
            let (alpha, beta) = (a[r - 1], a[r]);
            a.swap(r - 1, r);
            let se = self.encode(&a);
            let (q, shorter) = self.right_next[r - 1][p];
            if shorter {
                out.push((p * self.lpow + se, f.mul(c, self.xi1())));
                out.push((q * self.lpow + se, f.mul(c, self.xi)));
            } else {
                out.push((q * self.lpow + se, c));
            }
            if alpha == beta {
                continue;
            }
            let cc = f.mul(c, self.xi1());
            let (lo, n, coef) = if alpha > beta { (beta, alpha - beta, f.neg(cc)) } else { (alpha, beta - alpha, cc) };
            let hi = lo + n;
            for j in 0..n {
                a[r - 1] = lo + j;
                a[r] = hi - j;
                out.push((self.index(p, &a), coef));
            }
        }
        normalize_sparse(f, out)
    }

    /// Builds `R(X_t)` for `t = 1..d`. Overflow `X_t^l` is replaced by its
    /// normal form `N_t`:
    /// `N_1 = X_1^l - prod_m (X_1 - xi^{k_m})`, and for `t > 1`
    /// `N_t = xi^{-1} (T N_{t-1} T + (xi-1) sum_{j=1}^{l-1} T X_{t-1}^j X_t^{l-j})`
    /// with `T = T_{t-1}`.
    fn build_rx(&mut self) -> Result<()> {
        let f = self.f;
        let (d, l) = (self.d, self.l);
        let xi_inv = f.inv(self.xi)?;
        let mut nf: Sparse = Vec::new();
        for t in 1..=d {
            nf = if t == 1 {
                let poly = self.cyclotomic_poly();
                (0..l)
                    .map(|j| {
                        let mut a = vec![0; d];
                        a[0] = j;
                        (self.index(0, &a), f.neg(poly.coeffs().get(j).copied().unwrap_or(0)))
                    })
                    .collect()
            } else {
                let mut acc = self.left_t(t - 1, &self.right_t(t - 1, &nf));
                for j in 1..l {
                    let mut a = vec![0; d];
                    a[t - 2] = j;
                    a[t - 1] = l - j;
                    acc.extend(self.left_t(t - 1, &[(self.index(0, &a), self.xi1())]));
                }
                normalize_sparse(f, acc.into_iter().map(|(i, c)| (i, f.mul(c, xi_inv))).collect())
            };
            let nf_t = normalize_sparse(f, nf.clone());
            let op = self.operator(|idx| {
                let (p, e) = (idx / self.lpow, idx % self.lpow);
                let mut a = self.decode(e);
                if a[t - 1] + 1 < l {
                    a[t - 1] += 1;
                    return vec![(self.index(p, &a), 1)];
                }
                let mut y = nf_t.clone();
                for u in 1..t {
                    for _ in 0..a[u - 1] {
                        y = self.rx[u - 1].apply_sparse(&y);
                    }
                }
                // y lies in H_t, so exponents beyond t are free.
                y = y
                    .into_iter()
                    .map(|(i, c)| {
                        let (q, ee) = (i / self.lpow, i % self.lpow);
                        let mut b = self.decode(ee);
                        for u in t + 1..=d {
                            debug_assert_eq!(b[u - 1], 0);
                            b[u - 1] = a[u - 1];
                        }
                        (self.index(q, &b), c)
                    })
                    .collect();
                for &r in self.words[p].iter().rev() {
                    y = self.left_t(r, &y);
                }
                y
            });
            self.rx.push(op);
        }
        Ok(())
    }

    /// `prod_m (x - xi^{k_m})`.
    pub fn cyclotomic_poly(&self) -> Poly {
        self.params.charge().iter().fold(Poly::one(self.f), |acc, &k| {
            acc.mul(&Poly::new(self.f, vec![self.f.neg(self.f.pow(self.xi, k as u64)), 1]))
        })
    }

    /// `X_s T_w X^a = (X_s T_{r_1} ... T_{r_m}) X^a`.
    fn left_x_column(&self, s: usize, idx: usize) -> Sparse {
        let (p, e) = (idx / self.lpow, idx % self.lpow);
        let mut y = self.rx[s - 1].column(0).to_vec();
        for &r in &self.words[p] {
            y = self.right_t(r, &y);
        }
        self.right_x_monomial(y, &self.decode(e))
    }

    fn right_x_monomial(&self, mut y: Sparse, a: &[usize]) -> Sparse {
        for (u, &k) in a.iter().enumerate() {
            for _ in 0..k {
                y = self.rx[u].apply_sparse(&y);
            }
        }
        y
    }

    pub fn operator_of(&self, side: Side, g: Generator) -> &SparseMatrix {
        match (side, g) {
            (Side::Left, Generator::T(r)) => &self.lt[r - 1],
            (Side::Right, Generator::T(r)) => &self.rt[r - 1],
            (Side::Left, Generator::X(s)) => &self.lx[s - 1],
            (Side::Right, Generator::X(s)) => &self.rx[s - 1],
        }
    }

    /// All generators `T_1..T_{d-1}, X_1..X_d`.
    pub fn generators(&self) -> Vec<Generator> {
        (1..self.d).map(Generator::T).chain((1..=self.d).map(Generator::X)).collect()
    }

    fn check_generator(&self, g: Generator) -> Result<()> {
        let ok = match g {
            Generator::T(r) => r >= 1 && r < self.d,
            Generator::X(s) => s >= 1 && s <= self.d,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::param(format!("{g} is not a generator for d = {}", self.d)))
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::from_terms(self.f, vec![(0, 1)])
    }

    pub fn basis_element(&self, idx: usize) -> AlgebraElement {
        AlgebraElement::from_terms(self.f, vec![(idx, 1)])
    }

    pub fn generator(&self, g: Generator) -> Result<AlgebraElement> {
        self.check_generator(g)?;
        Ok(AlgebraElement { f: self.f, terms: self.operator_of(Side::Left, g).column(0).to_vec() })
    }

    /// `T_w` for the permutation `w`.
    pub fn t_element(&self, w: &Permutation) -> Result<AlgebraElement> {
        let p = *self
            .perm_index
            .get(w)
            .ok_or_else(|| Error::param(format!("{w} is not a permutation of degree {}", self.d)))?;
        Ok(self.basis_element(p * self.lpow))
    }

    /// `g x`.
    pub fn lmul_generator(&self, g: Generator, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_generator(g)?;
        Ok(AlgebraElement { f: self.f, terms: self.operator_of(Side::Left, g).apply_sparse(&x.terms) })
    }

    /// `x g`.
    pub fn rmul_generator(&self, x: &AlgebraElement, g: Generator) -> Result<AlgebraElement> {
        self.check_generator(g)?;
        Ok(AlgebraElement { f: self.f, terms: self.operator_of(Side::Right, g).apply_sparse(&x.terms) })
    }

    /// `T_w x` for the word `w = (r_1, ..., r_m)`, i.e. `T_{r_1} ... T_{r_m} x`.
    pub fn left_t_word(&self, word: &[usize], x: &AlgebraElement) -> AlgebraElement {
        let mut y = x.terms.clone();
        for &r in word.iter().rev() {
            y = self.left_t(r, &y);
        }
        AlgebraElement { f: self.f, terms: y }
    }

    /// `x T_{r_1} ... T_{r_m}`.
    pub fn right_t_word(&self, x: &AlgebraElement, word: &[usize]) -> AlgebraElement {
        let mut y = x.terms.clone();
        for &r in word {
            y = self.right_t(r, &y);
        }
        AlgebraElement { f: self.f, terms: y }
    }

    /// `x y`, expanding `y` on the basis: `x T_w X^a = R(X^a) R(T_{r_m}) ... R(T_{r_1}) x`.
    pub fn element_product(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut acc = Vec::new();
        for &(idx, c) in &y.terms {
            let (p, e) = (idx / self.lpow, idx % self.lpow);
            let mut z: Sparse = x.terms.iter().map(|&(i, v)| (i, self.f.mul(v, c))).collect();
            for &r in &self.words[p] {
                z = self.right_t(r, &z);
            }
            acc.extend(self.right_x_monomial(z, &self.decode(e)));
        }
        AlgebraElement::from_terms(self.f, acc)
    }

    /// The anti-automorphism fixing every `T_r` and `X_s`:
    /// `star(T_w X^a) = X^a T_{w^{-1}}`.
    pub fn star(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut acc = Vec::new();
        for &(idx, c) in &x.terms {
            let (p, e) = (idx / self.lpow, idx % self.lpow);
            let mut z = vec![(e, c)];
            for &r in self.words[p].iter().rev() {
                z = self.right_t(r, &z);
            }
            acc.extend(z);
        }
        AlgebraElement::from_terms(self.f, acc)
    }

    /// `x_mu = sum of T_w over the row stabilizer of T^mu`.
    pub fn x_element(&self, mu: &Multipartition) -> Result<AlgebraElement> {
        self.check_shape(mu)?;
        let t = Tableau::initial(mu);
        let row = |k: usize| {
            let n = t.node_of(k);
            (n.comp, n.row)
        };
        let terms = self
            .perms
            .iter()
            .enumerate()
            .filter(|(_, w)| (1..=self.d).all(|k| row(k) == row(w.apply(k))))
            .map(|(p, _)| (p * self.lpow, 1))
            .collect();
        Ok(AlgebraElement::from_terms(self.f, terms))
    }

    /// Factors `(s, xi^{k_m})` of `u_mu = prod_{m>=2} prod_{s <= a_m} (X_s - xi^{k_m})`,
    /// `a_m = |mu^(1)| + ... + |mu^(m-1)|`.
    fn u_factors(&self, mu: &Multipartition) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        let mut a = 0;
        for (m, comp) in mu.components().iter().enumerate() {
            if m > 0 {
                let c = self.f.pow(self.xi, self.params.charge()[m] as u64);
                out.extend((1..=a).map(|s| (s, c)));
            }
            a += comp.iter().sum::<usize>();
        }
        out
    }

    fn apply_u(&self, x: &AlgebraElement, mu: &Multipartition) -> AlgebraElement {
        let mut y = x.terms.clone();
        for (s, c) in self.u_factors(mu) {
            let xs = self.rx[s - 1].apply_sparse(&y);
            let mut acc = xs;
            acc.extend(y.iter().map(|&(i, v)| (i, self.f.neg(self.f.mul(v, c)))));
            y = normalize_sparse(self.f, acc);
        }
        AlgebraElement { f: self.f, terms: y }
    }

    pub fn u_element(&self, mu: &Multipartition) -> Result<AlgebraElement> {
        self.check_shape(mu)?;
        Ok(self.apply_u(&self.one(), mu))
    }

    /// `m_mu = x_mu u_mu`.
    pub fn m_element(&self, mu: &Multipartition) -> Result<AlgebraElement> {
        Ok(self.apply_u(&self.x_element(mu)?, mu))
    }

    /// `m_{S,T} = T_{w_S} m_nu star(T_{w_T})`.
    pub fn m_st(&self, s: &Tableau, t: &Tableau) -> Result<AlgebraElement> {
        if s.shape() != t.shape() {
            return Err(Error::param(format!("tableaux of shapes {} and {}", s.shape(), t.shape())));
        }
        let m = self.m_element(s.shape())?;
        Ok(self.m_st_from(&m, s, t))
    }

    /// `m_{S,T}` given `m_nu` for their common shape.
    pub fn m_st_from(&self, m: &AlgebraElement, s: &Tableau, t: &Tableau) -> AlgebraElement {
        let mut word_t = t.permutation().canonical_reduced_word();
        word_t.reverse();
        let y = self.right_t_word(m, &word_t);
        self.left_t_word(&s.permutation().canonical_reduced_word(), &y)
    }

    fn check_shape(&self, mu: &Multipartition) -> Result<()> {
        if mu.size() != self.d || mu.level() != self.l {
            return Err(Error::param(format!(
                "{mu} is not an {}-multipartition of {}",
                self.l, self.d
            )));
        }
        Ok(())
    }

    /// Debug text `c * T[w] * X^a`, one term per line.
    pub fn describe(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms
            .iter()
            .map(|&(i, c)| {
                let m = self.monomial(i);
                let a: Vec<String> = m.a.iter().map(ToString::to_string).collect();
                format!("{} * T{} * X^({})", self.f.to_signed(c), m.w, a.join(","))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Operator of the algebra word `g_1 g_2 ... g_k`:
    /// `L(g_1)...L(g_k)` or `R(g_k)...R(g_1)`.
    fn word_operator(&self, side: Side, word: &[Generator]) -> SparseMatrix {
        let mut acc = SparseMatrix::identity(self.f, self.dim());
        for &g in word {
            let op = self.operator_of(side, g);
            acc = match side {
                Side::Left => acc.compose(op),
                Side::Right => op.compose(&acc),
            };
        }
        acc
    }

    /// Records whether `sum c * word = 0` on the given side.
    fn relation(&self, rep: &mut Report, name: &str, side: Side, terms: &[(u64, Vec<Generator>)]) {
        let ops: Vec<(u64, SparseMatrix)> = terms.iter().map(|(c, w)| (*c, self.word_operator(side, w))).collect();
        let refs: Vec<(u64, &SparseMatrix)> = ops.iter().map(|(c, m)| (*c, m)).collect();
        let total = SparseMatrix::linear_combination(&refs);
        let ok = total.is_zero();
        rep.record(name, ok, || {
            let words: Vec<String> = terms
                .iter()
                .map(|(c, w)| format!("{}*{}", self.f.to_signed(*c), w.iter().map(ToString::to_string).collect::<String>()))
                .collect();
            format!("{side:?}: {} has {} nonzero columns", words.join(" + "), total.dim() - (0..total.dim()).filter(|&j| total.column(j).is_empty()).count())
        });
    }

    /// Every defining relation, both exchange identities, and the
    /// commutation of left with right multiplication, as exact operator
    /// identities on both the left and the right regular representation.
    pub fn verify_relations(&self) -> Report {
        use Generator::{T, X};
        let f = self.f;
        let d = self.d;
        let mut rep = Report::new();
        let expected: usize = (1..=d).map(|k| k * self.l).product();
        rep.record("hecke.dimension", self.dim() == expected, || format!("dimension {} != {expected}", self.dim()));
        let neg = |c: u64| f.neg(c);
        let one = 1;
        let m1 = neg(1);
        let xi1 = self.xi1();
        for side in [Side::Left, Side::Right] {
            for r in 1..=d {
                for s in r + 1..=d {
                    self.relation(&mut rep, "hecke.x_commute", side, &[(one, vec![X(r), X(s)]), (m1, vec![X(s), X(r)])]);
                }
            }
            for r in 1..d {
                self.relation(&mut rep, "hecke.txt", side, &[(one, vec![T(r), X(r), T(r)]), (neg(self.xi), vec![X(r + 1)])]);
                for s in (1..=d).filter(|&s| s != r && s != r + 1) {
                    self.relation(&mut rep, "hecke.t_x_commute", side, &[(one, vec![T(r), X(s)]), (m1, vec![X(s), T(r)])]);
                }
                self.relation(
                    &mut rep,
                    "hecke.quadratic",
                    side,
                    &[(one, vec![T(r), T(r)]), (neg(xi1), vec![T(r)]), (neg(self.xi), vec![])],
                );
                if r + 1 < d {
                    self.relation(
                        &mut rep,
                        "hecke.braid",
                        side,
                        &[(one, vec![T(r), T(r + 1), T(r)]), (m1, vec![T(r + 1), T(r), T(r + 1)])],
                    );
                }
                for s in r + 2..d {
                    self.relation(&mut rep, "hecke.t_commute", side, &[(one, vec![T(r), T(s)]), (m1, vec![T(s), T(r)])]);
                }
                // X_{r+1} T_r = T_r X_r + (xi-1) X_{r+1}
                self.relation(
                    &mut rep,
                    "hecke.exchange",
                    side,
                    &[(one, vec![X(r + 1), T(r)]), (m1, vec![T(r), X(r)]), (neg(xi1), vec![X(r + 1)])],
                );
                // X_r T_r = T_r X_{r+1} - (xi-1) X_{r+1}
                self.relation(
                    &mut rep,
                    "hecke.exchange",
                    side,
                    &[(one, vec![X(r), T(r)]), (m1, vec![T(r), X(r + 1)]), (xi1, vec![X(r + 1)])],
                );
            }
            if d >= 1 {
                let poly = self.cyclotomic_poly();
                let terms: Vec<(u64, Vec<Generator>)> =
                    poly.coeffs().iter().enumerate().map(|(j, &c)| (c, vec![X(1); j])).collect();
                self.relation(&mut rep, "hecke.cyclotomic", side, &terms);
            }
        }
        let gens = self.generators();
        for &g in &gens {
            for &h in &gens {
                let a = self.operator_of(Side::Left, g).compose(self.operator_of(Side::Right, h));
                let b = self.operator_of(Side::Right, h).compose(self.operator_of(Side::Left, g));
                rep.record("hecke.left_right_commute", a == b, || format!("L({g}) and R({h}) differ in {} columns", a.diff_columns(&b)));
            }
            let lc = self.operator_of(Side::Left, g).column(0);
            let rc = self.operator_of(Side::Right, g).column(0);
            rep.record("hecke.unit", lc == rc, || format!("{g} 1 != 1 {g}"));
        }
        for r in 1..d {
            let mut w = Permutation::identity(d);
            w.right_mul_s(r);
            let expect = vec![(self.perm_index[&w] * self.lpow, 1)];
            rep.record("hecke.unit", self.lt[r - 1].column(0) == expect.as_slice(), || format!("T{r} is not a basis element"));
        }
        rep
    }

    /// A random element with at most `terms` nonzero coefficients.
    pub fn random_element<R: Rng>(&self, rng: &mut R, terms: usize) -> AlgebraElement {
        let t = (0..terms).map(|_| (rng.gen_range(0..self.dim()), rng.gen_range(0..self.f.p()))).collect();
        AlgebraElement::from_terms(self.f, t)
    }

    /// Associativity, unit and anti-multiplicativity of `star` on random
    /// triples.
    pub fn verify_products<R: Rng>(&self, rng: &mut R, trials: usize) -> Report {
        let mut rep = Report::new();
        for _ in 0..trials {
            let x = self.random_element(rng, 3);
            let y = self.random_element(rng, 3);
            let z = self.random_element(rng, 3);
            let xy = self.element_product(&x, &y);
            let lhs = self.element_product(&xy, &z);
            let rhs = self.element_product(&x, &self.element_product(&y, &z));
            rep.record("hecke.associativity", lhs == rhs, || {
                format!("({})({})({})", self.describe(&x), self.describe(&y), self.describe(&z))
            });
            let unit = self.element_product(&self.one(), &x) == x && self.element_product(&x, &self.one()) == x;
            rep.record("hecke.unit", unit, || format!("1 is not a unit for {}", self.describe(&x)));
            let star_ok = self.star(&xy) == self.element_product(&self.star(&y), &self.star(&x))
                && self.star(&self.star(&x)) == x;
            rep.record("hecke.star", star_ok, || format!("star fails on {} and {}", self.describe(&x), self.describe(&y)));
        }
        rep
    }
}

fn too_big(d: usize, l: usize, max_dim: usize) -> Error {
    Error::Resource(format!("regular representation for d = {d}, l = {l} exceeds {max_dim} basis elements"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn params(e: u32, p: u64, charge: Vec<i64>) -> AlgebraParams {
        AlgebraParams::new(FieldSpec::prime(p, e).unwrap(), charge).unwrap()
    }

    #[test]
    fn dimensions() {
        for (charge, d, dim) in [(vec![0], 3, 6), (vec![0, 1], 2, 8), (vec![0, 1], 3, 48)] {
            let rep = RegularRep::build(&params(3, 7, charge), d, DEFAULT_MAX_DIM).unwrap();
            assert_eq!(rep.dim(), dim);
        }
        let err = RegularRep::build(&params(3, 7, vec![0, 1]), 5, 1000).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
        let e0 = AlgebraParams::combinatorial(0, vec![0]).unwrap();
        assert!(matches!(RegularRep::build(&e0, 2, 100), Err(Error::Parameter(_))));
    }

    #[test]
    fn quadratic_and_commuting_examples() {
        let rep = RegularRep::build(&params(2, 5, vec![0]), 2, DEFAULT_MAX_DIM).unwrap();
        let t1 = rep.generator(Generator::T(1)).unwrap();
        let sq = rep.lmul_generator(Generator::T(1), &t1).unwrap();
        let xi = rep.xi();
        let expect = t1.scale(xi - 1).add(&rep.one().scale(xi));
        assert_eq!(sq, expect);
        assert_eq!(rep.element_product(&t1, &t1), sq);

        let rep2 = RegularRep::build(&params(3, 7, vec![0, 1]), 2, DEFAULT_MAX_DIM).unwrap();
        let x1 = rep2.generator(Generator::X(1)).unwrap();
        let x2 = rep2.generator(Generator::X(2)).unwrap();
        let x1x2 = rep2.element_product(&x1, &x2);
        let idx = rep2.index_of(&AKMonomial { w: Permutation::identity(2), a: vec![1, 1] }).unwrap();
        assert_eq!(x1x2, rep2.basis_element(idx));
        assert_eq!(rep2.element_product(&x2, &x1), x1x2);
    }

    #[test]
    fn level_one_x1_is_scalar() {
        for k in 0..3 {
            let rep = RegularRep::build(&params(3, 7, vec![k]), 3, DEFAULT_MAX_DIM).unwrap();
            let x1 = rep.generator(Generator::X(1)).unwrap();
            assert_eq!(x1, rep.one().scale(rep.field().pow(rep.xi(), k as u64)));
        }
    }

    #[test]
    fn relations_hold() {
        let grid: Vec<(u32, u64, Vec<i64>, usize)> = vec![
            (2, 5, vec![0], 4),
            (3, 7, vec![0], 4),
            (3, 7, vec![0, 0], 3),
            (3, 7, vec![0, 1], 3),
            (2, 5, vec![0, 1, 1], 2),
            (4, 5, vec![1, 3], 3),
        ];
        for (e, p, charge, d) in grid {
            let rep = RegularRep::build(&params(e, p, charge.clone()), d, DEFAULT_MAX_DIM).unwrap();
            let r = rep.verify_relations();
            assert!(r.all_passed(), "e={e} charge={charge:?} d={d}: {r:?}");
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let r = rep.verify_products(&mut rng, 20);
            assert!(r.all_passed(), "e={e} charge={charge:?} d={d}: {r:?}");
        }
    }

    #[test]
    fn lmul_matches_product() {
        let rep = RegularRep::build(&params(3, 7, vec![0, 2]), 3, DEFAULT_MAX_DIM).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in rep.generators() {
            let x = rep.random_element(&mut rng, 4);
            let ge = rep.generator(g).unwrap();
            assert_eq!(rep.lmul_generator(g, &x).unwrap(), rep.element_product(&ge, &x));
            assert_eq!(rep.rmul_generator(&x, g).unwrap(), rep.element_product(&x, &ge));
        }
        assert!(rep.lmul_generator(Generator::T(3), &rep.one()).is_err());
    }

    #[test]
    fn star_examples() {
        let rep = RegularRep::build(&params(3, 7, vec![0, 1]), 3, DEFAULT_MAX_DIM).unwrap();
        let t1 = rep.generator(Generator::T(1)).unwrap();
        let t2 = rep.generator(Generator::T(2)).unwrap();
        assert_eq!(rep.star(&rep.element_product(&t1, &t2)), rep.element_product(&t2, &t1));
        let x1 = rep.generator(Generator::X(1)).unwrap();
        assert_eq!(rep.star(&x1), x1);
        let t1x1 = rep.element_product(&t1, &x1);
        assert_eq!(rep.star(&t1x1), rep.element_product(&x1, &t1));
    }

    #[test]
    fn m_elements() {
        let rep = RegularRep::build(&params(3, 7, vec![0]), 3, DEFAULT_MAX_DIM).unwrap();
        let col = Multipartition::parse("1,1,1", 1).unwrap();
        assert_eq!(rep.m_element(&col).unwrap(), rep.one());
        let row = Multipartition::parse("3", 1).unwrap();
        let all: Vec<(usize, u64)> = (0..6).map(|p| (p, 1)).collect();
        assert_eq!(rep.m_element(&row).unwrap(), AlgebraElement::from_terms(rep.field(), all));
        let mu = Multipartition::parse("2,1", 1).unwrap();
        let t = Tableau::initial(&mu);
        assert_eq!(rep.m_st(&t, &t).unwrap(), rep.m_element(&mu).unwrap());

        // x_mu and u_mu commute.
        let rep2 = RegularRep::build(&params(3, 7, vec![0, 1]), 3, DEFAULT_MAX_DIM).unwrap();
        for mu in crate::combinatorics::multipartitions(3, 2) {
            let x = rep2.x_element(&mu).unwrap();
            let u = rep2.u_element(&mu).unwrap();
            assert_eq!(rep2.element_product(&x, &u), rep2.element_product(&u, &x), "{mu}");
            assert_eq!(rep2.star(&rep2.m_element(&mu).unwrap()), rep2.m_element(&mu).unwrap(), "{mu}");
        }
    }

    #[test]
    fn describe_text() {
        let rep = RegularRep::build(&params(2, 5, vec![0, 1]), 2, DEFAULT_MAX_DIM).unwrap();
        let t1 = rep.generator(Generator::T(1)).unwrap();
        assert_eq!(rep.describe(&t1), "1 * T[2,1] * X^(0,0)");
        assert_eq!(rep.describe(&AlgebraElement::zero(rep.field())), "0");
    }
}
