//! Graded characters, the graded branching rule, and the degree and defect
//! identities of tableau combinatorics.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinatorics::{
    above_alternatives, d_above, d_below, d_residue, garnir_tableau, multipartitions, next_alternatives,
    tableau_bruhat, weak_bruhat_graph, AlgebraParams, LaurentPoly, Multipartition, Node, Residue, RootVector,
    Tableau,
};
use crate::error::Result;
use crate::klr::GradedSpechtData;
use crate::linalg::Matrix;
use crate::report::Report;

/// `ch(M) = sum_i (graded dim of e(i) M) [i]`, weights in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedCharacter {
    entries: BTreeMap<Vec<Residue>, LaurentPoly>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        GradedCharacter::default()
    }

    pub fn add_term(&mut self, weight: Vec<Residue>, exp: i64, coeff: i64) {
        let poly = self.entries.entry(weight.clone()).or_insert_with(LaurentPoly::zero);
        poly.add_term(exp, coeff);
        if poly.is_zero() {
            self.entries.remove(&weight);
        }
    }

    pub fn get(&self, weight: &[Residue]) -> Option<&LaurentPoly> {
        self.entries.get(weight)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<Residue>, &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total dimension: every polynomial at `q = 1`.
    pub fn total(&self) -> i64 {
        self.entries.values().map(LaurentPoly::eval_at_one).sum()
    }

    /// Forgets the last residue of every weight.
    pub fn restrict(&self) -> GradedCharacter {
        let mut out = GradedCharacter::new();
        for (w, p) in &self.entries {
            let short = w[..w.len().saturating_sub(1)].to_vec();
            for (e, c) in p.terms() {
                out.add_term(short.clone(), e, c);
            }
        }
        out
    }

    /// `self + q^shift * other`.
    pub fn add_shifted(&mut self, other: &GradedCharacter, shift: i64) {
        for (w, p) in &other.entries {
            for (e, c) in p.terms() {
                self.add_term(w.clone(), e + shift, c);
            }
        }
    }
}

/// `ch(mu)[i] = sum of q^{deg T}` over standard `T` with `i^T = i`.
pub fn graded_character(mu: &Multipartition, params: &AlgebraParams) -> Result<GradedCharacter> {
    let mut ch = GradedCharacter::new();
    for t in Tableau::standard(mu) {
        ch.add_term(t.residue_sequence(params), t.degree(params)?, 1);
    }
    Ok(ch)
}

#[derive(Serialize)]
struct CharacterEntry<'a> {
    weight: &'a [Residue],
    poly: &'a LaurentPoly,
}

impl Serialize for GradedCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (w, p) in &self.entries {
            seq.serialize_element(&CharacterEntry { weight: w, poly: p })?;
        }
        seq.end()
    }
}

/// One section of the graded branching filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchRow {
    pub node: Node,
    pub residue: Residue,
    pub shape: Multipartition,
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingTable {
    pub shape: Multipartition,
    /// Removable nodes from bottom to top.
    pub rows: Vec<BranchRow>,
    /// `ch(mu) = sum_m q^{d_{A_m}} ch(mu_{A_m}) [res A_m]`, with the residue
    /// appended to every weight, and the same identity after restriction.
    pub identity_holds: bool,
}

pub fn branching_table(mu: &Multipartition, params: &AlgebraParams) -> Result<BranchingTable> {
    branching_table_with(mu, params, &graded_character(mu, params)?, |shape| graded_character(shape, params))
}

/// [`branching_table`] given `ch(mu)` and a source for the characters of the
/// smaller shapes.
fn branching_table_with(
    mu: &Multipartition,
    params: &AlgebraParams,
    ch: &GradedCharacter,
    sub_character: impl Fn(&Multipartition) -> Result<GradedCharacter>,
) -> Result<BranchingTable> {
    let mut rows = Vec::new();
    let mut appended = GradedCharacter::new();
    let mut restricted = GradedCharacter::new();
    for node in mu.removable().into_iter().rev() {
        let shape = mu.remove(node)?;
        let shift = d_below(mu, node, params)?;
        let residue = params.residue(node);
        let sub = sub_character(&shape)?;
        restricted.add_shifted(&sub, shift);
        for (w, p) in sub.entries() {
            let mut w = w.clone();
            w.push(residue);
            for (e, c) in p.terms() {
                appended.add_term(w.clone(), e + shift, c);
            }
        }
        rows.push(BranchRow { node, residue, shape, shift });
    }
    let identity_holds = if mu.size() == 0 { rows.is_empty() } else { appended == *ch && restricted == ch.restrict() };
    Ok(BranchingTable { shape: mu.clone(), rows, identity_holds })
}

/// Removable node of `mu` holding `d` in `t`, as a position in the
/// bottom-to-top order.
fn section_of(t: &Tableau, order: &[Node]) -> usize {
    let node = t.node_of(t.size());
    order.iter().position(|&n| n == node).expect("d sits in a removable node")
}

/// With `V_m` spanned by the `v_T` whose entry `d` lies in one of the `m`
/// lowest removable nodes: each `V_m` is stable under the image of
/// `H_{d-1}` (`e(j)` summed over the last residue, `y_r` for `r < d`,
/// `psi_s` for `s < d-1`), and `V_m / V_{m-1}` has the graded character of
/// `S(mu_{A_m})` shifted by `d_{A_m}(mu)`.
pub fn verify_branching_filtration(data: &GradedSpechtData) -> Result<Report> {
    let mut rep = Report::new();
    rep.declare("branching.invariant");
    rep.declare("branching.sections");
    let d = data.d();
    if d == 0 {
        return Ok(rep);
    }
    let params = data.params();
    let f = data.field();
    let mu = data.module().shape();
    let n = data.dim();
    let order: Vec<Node> = mu.removable().into_iter().rev().collect();
    let sections: Vec<usize> = data.tableaux().iter().map(|t| section_of(t, &order)).collect();

    let mut prefixes: Vec<Vec<Residue>> = data.weights().iter().map(|w| w[..d - 1].to_vec()).collect();
    prefixes.dedup();
    let mut generators: Vec<(String, Matrix)> = Vec::new();
    for j in &prefixes {
        let mut sum = Matrix::zeros(f, n, n);
        for (w, e) in data.idempotents() {
            if w[..d - 1] == j[..] {
                sum = sum.add(e);
            }
        }
        generators.push((format!("e({j:?})"), data.in_v_basis(&sum)));
    }
    let hat_e: Vec<Matrix> = generators.iter().map(|(_, m)| m.clone()).collect();
    for r in 1..d {
        generators.push((format!("y{r}"), data.in_v_basis(data.y(r))));
    }
    for s in 1..d.saturating_sub(1) {
        generators.push((format!("psi{s}"), data.in_v_basis(data.psi(s))));
    }

    for m in 0..order.len() {
        for (name, g) in &generators {
            let ok = (0..n)
                .filter(|&k| sections[k] <= m)
                .all(|k| (0..n).all(|j| g.get(j, k) == 0 || sections[j] <= m));
            rep.record("branching.invariant", ok, || format!("S({mu}): V_{} under {name}", m + 1));
        }
    }

    // rank of e(j) on span{v_T : section <= m, deg T = k}
    let rank_on = |e: &Matrix, m: Option<usize>, k: i64| -> usize {
        let Some(m) = m else { return 0 };
        let cols: Vec<Vec<u64>> = (0..n)
            .filter(|&t| sections[t] <= m && data.degrees()[t] == k)
            .map(|t| (0..n).map(|j| e.get(j, t)).collect())
            .collect();
        if cols.is_empty() {
            0
        } else {
            Matrix::from_columns(f, n, &cols).rank()
        }
    };
    let mut degrees: Vec<i64> = data.degrees().to_vec();
    degrees.sort_unstable();
    degrees.dedup();
    for (m, node) in order.iter().enumerate() {
        let mut section = GradedCharacter::new();
        for (j, e) in prefixes.iter().zip(&hat_e) {
            for &k in &degrees {
                let diff = rank_on(e, Some(m), k) as i64 - rank_on(e, m.checked_sub(1), k) as i64;
                if diff != 0 {
                    section.add_term(j.clone(), k, diff);
                }
            }
        }
        let shape = mu.remove(*node)?;
        let mut expected = GradedCharacter::new();
        expected.add_shifted(&graded_character(&shape, params)?, d_below(mu, *node, params)?);
        rep.record("branching.sections", section == expected, || {
            format!("S({mu}): section {} ({node}) is {section:?}, expected {expected:?}", m + 1)
        });
    }
    Ok(rep)
}

/// Residues that can matter for `mu`: all of `I` when finite, otherwise
/// the residues of the charge and of the nodes, addable nodes included.
fn relevant_residues(mu: &Multipartition, params: &AlgebraParams) -> Vec<Residue> {
    if let Some(all) = params.residues() {
        return all;
    }
    let mut out: Vec<Residue> = params.charge().to_vec();
    out.extend(mu.nodes().into_iter().chain(mu.addable()).map(|n| params.residue(n)));
    out.sort_unstable();
    out.dedup();
    out
}

/// Degree, defect, Garnir and weak Bruhat graph identities for a single
/// shape.
pub fn shape_identities(mu: &Multipartition, params: &AlgebraParams) -> Result<Report> {
    Ok(shape_identities_with(mu, params, |shape| graded_character(shape, params))?.0)
}

/// [`shape_identities`] with the characters of the shapes one node smaller
/// supplied by the caller. Also returns `ch(mu)`.
fn shape_identities_with(
    mu: &Multipartition,
    params: &AlgebraParams,
    sub_character: impl Fn(&Multipartition) -> Result<GradedCharacter>,
) -> Result<(Report, GradedCharacter)> {
    let mut rep = Report::new();
    let ts = Tableau::standard(mu);
    let alpha = params.content(mu);
    let def = params.defect(&alpha);
    let pairs: Vec<(i64, i64)> = ts.iter().map(|t| t.degree_pair(params)).collect();
    let res: Vec<Vec<Residue>> = ts.iter().map(|t| t.residue_sequence(params)).collect();

    for (t, &(deg, codeg)) in ts.iter().zip(&pairs) {
        rep.record("combinatorics.deg_codeg", deg + codeg == def, || {
            format!("{mu}: T = {}: deg {deg} + codeg {codeg} != def {def}", t.filling_string())
        });
    }
    for e in weak_bruhat_graph(&ts) {
        let i = &res[e.from];
        let want = -params.cartan(i[e.color - 1], i[e.color]);
        let got = pairs[e.to].0 - pairs[e.from].0;
        rep.record("combinatorics.edge_degree", got == want, || {
            format!("{mu}: edge {} ->{} {}: {got} != {want}", ts[e.from].filling_string(), e.color, ts[e.to].filling_string())
        });
    }
    for a in mu.removable() {
        let i = params.residue(a);
        let shape = mu.remove(a)?;
        let lhs = d_below(mu, a, params)? + d_above(&shape, a, params)?;
        let di = d_residue(mu, i, params);
        rep.record("combinatorics.defect_i", lhs == di + 1, || format!("{mu}, A = {a}: {lhs} != {}", di + 1));
        let mut smaller = alpha.clone();
        smaller.add_simple(i, -1);
        let rhs = params.defect(&smaller) + di + 1;
        rep.record("combinatorics.defect_iii", def == rhs, || format!("{mu}, A = {a}: def {def} != {rhs}"));
    }
    for i in relevant_residues(mu, params) {
        let want = params.lambda_pairing(i) - alpha.pairing(&RootVector::simple(i), params);
        let got = d_residue(mu, i, params);
        rep.record("combinatorics.defect_ii", got == want, || format!("{mu}, i = {i}: d_i {got} != {want}"));
    }
    for node in mu.nodes() {
        let Ok(g) = garnir_tableau(mu, node.row, node.col, node.comp) else { continue };
        let r = g.entry_at(node).expect("node of mu");
        if r >= mu.size() {
            continue;
        }
        let gi = g.residue_sequence(params);
        let mut target = gi.clone();
        target.swap(r - 1, r);
        let gdeg = g.degree(params)?;
        let want = -params.cartan(gi[r - 1], gi[r]);
        for (k, s) in ts.iter().enumerate() {
            if res[k] != target || *s == g || !tableau_bruhat(s, &g)? {
                continue;
            }
            let got = pairs[k].0 - gdeg;
            rep.record("combinatorics.garnir_degree", got == want, || {
                format!("{mu}: Garnir at {node}, S = {}: {got} != {want}", s.filling_string())
            });
        }
    }
    for t in &ts {
        for r in 1..mu.size() {
            if let Some(alts) = above_alternatives(t, r) {
                rep.record("combinatorics.above", alts.iter().any(|&x| x), || format!("{mu}: T = {}, r = {r}", t.filling_string()));
            }
            if let Some(alts) = next_alternatives(t, r) {
                rep.record("combinatorics.next", alts.iter().any(|&x| x), || format!("{mu}: T = {}, r = {r}", t.filling_string()));
            }
        }
    }
    let mut ch = GradedCharacter::new();
    for (w, &(deg, _)) in res.into_iter().zip(&pairs) {
        ch.add_term(w, deg, 1);
    }
    let table = branching_table_with(mu, params, &ch, sub_character)?;
    rep.record("combinatorics.branching_identity", table.identity_holds, || format!("{mu}: branching identity fails"));
    Ok((rep, ch))
}

/// All identities of [`shape_identities`] for every multipartition of size
/// at most `dmax`. Shapes are processed in parallel; the merged report does
/// not depend on scheduling.
pub fn defect_suite(params: &AlgebraParams, dmax: usize) -> Result<Report> {
    let mut rep = Report::new();
    for name in COMBINATORIAL_CHECKS {
        rep.declare(name);
    }
    // Characters of size d-1 feed the branching identity at size d.
    let mut previous: HashMap<Multipartition, GradedCharacter> = HashMap::new();
    for d in 0..=dmax {
        let shapes = multipartitions(d, params.level());
        let lookup = |shape: &Multipartition| -> Result<GradedCharacter> {
            Ok(previous.get(shape).cloned().expect("smaller shapes are processed first"))
        };
        let results: Vec<Result<(Report, GradedCharacter)>> =
            shapes.par_iter().map(|mu| shape_identities_with(mu, params, lookup)).collect();
        let mut current = HashMap::with_capacity(shapes.len());
        let mut total = LaurentPoly::zero();
        for (mu, r) in shapes.into_iter().zip(results) {
            let (shape_rep, ch) = r?;
            rep.merge(shape_rep);
            total = total.add(&square_of_sum(&ch));
            current.insert(mu, ch);
        }
        let total = total.eval_at_one();
        let want = (params.level() as i64).pow(d as u32) * (1..=d as i64).product::<i64>();
        rep.record("combinatorics.hecke_dim_sum", total == want, || format!("d = {d}: {total} != {want}"));
        previous = current;
    }
    Ok(rep)
}

/// `(sum_i ch(mu)[i])^2`, the contribution of one shape to the graded
/// dimension total.
fn square_of_sum(ch: &GradedCharacter) -> LaurentPoly {
    let mut all = LaurentPoly::zero();
    for (_, p) in ch.entries() {
        all = all.add(p);
    }
    all.mul(&all)
}

/// Checks produced by [`defect_suite`], in report order.
pub const COMBINATORIAL_CHECKS: [&str; 10] = [
    "combinatorics.deg_codeg",
    "combinatorics.edge_degree",
    "combinatorics.defect_i",
    "combinatorics.defect_iii",
    "combinatorics.defect_ii",
    "combinatorics.garnir_degree",
    "combinatorics.above",
    "combinatorics.next",
    "combinatorics.branching_identity",
    "combinatorics.hecke_dim_sum",
];

/// `sum over mu of d and S, T in T(mu) with i^S = i, i^T = j` of
/// `q^{deg S + deg T}`.
pub fn hecke_graded_dim_sum(i: &[Residue], j: &[Residue], params: &AlgebraParams, d: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for mu in multipartitions(d, params.level()) {
        let ch = graded_character(&mu, params)?;
        if let (Some(a), Some(b)) = (ch.get(i), ch.get(j)) {
            out = out.add(&a.mul(b));
        }
    }
    Ok(out)
}

/// [`hecke_graded_dim_sum`] summed over all pairs `(i, j)`. At `q = 1` this
/// is `sum_mu #T(mu)^2 = l^d d!`.
pub fn hecke_graded_dim_total(params: &AlgebraParams, d: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for mu in multipartitions(d, params.level()) {
        out = out.add(&square_of_sum(&graded_character(&mu, params)?));
    }
    Ok(out)
}
