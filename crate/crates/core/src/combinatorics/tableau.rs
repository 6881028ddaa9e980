use std::fmt;

use super::{AlgebraParams, Multipartition, Node, Permutation, Residue};
use crate::error::{Error, Result};

/// Filling of a multipartition diagram by `1..d`.
///
/// `entries[k]` is the entry in the node with label `k` (row reading order),
/// so `entries` is the one-line notation of `w_T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Multipartition,
    nodes: Vec<Node>,
    entries: Vec<usize>,
}

impl Tableau {
    pub fn new(shape: Multipartition, entries: Vec<usize>) -> Result<Self> {
        let nodes = shape.nodes();
        if entries.len() != nodes.len() {
            return Err(Error::param(format!(
                "shape {shape} has {} nodes but {} entries were given",
                nodes.len(),
                entries.len()
            )));
        }
        Permutation::from_one_line(entries.clone())?;
        Ok(Tableau { shape, nodes, entries })
    }

    /// `T^mu`: entries increase along successive rows.
    pub fn initial(shape: &Multipartition) -> Self {
        let d = shape.size();
        Tableau { nodes: shape.nodes(), shape: shape.clone(), entries: (1..=d).collect() }
    }

    /// Builds a tableau from explicit rows per component.
    pub fn from_rows(level: usize, rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        let mut comps: Vec<Vec<usize>> = rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect();
        comps.resize(level, Vec::new());
        let shape = Multipartition::new(comps)?;
        let entries = rows.iter().flatten().flatten().copied().collect();
        Tableau::new(shape, entries)
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Node occupied by `r`.
    pub fn node_of(&self, r: usize) -> Node {
        let k = self.entries.iter().position(|&x| x == r).expect("entry present");
        self.nodes[k]
    }

    /// Entry in a node of the diagram.
    pub fn entry_at(&self, n: Node) -> Option<usize> {
        self.shape.label_of(n).map(|k| self.entries[k])
    }

    /// `w_T`, defined by `w_T T^mu = T`.
    pub fn permutation(&self) -> Permutation {
        Permutation::from_one_line(self.entries.clone()).expect("entries form a permutation")
    }

    pub fn length(&self) -> usize {
        self.permutation().length()
    }

    /// `s_r T`: swaps the entries `r` and `r+1`.
    pub fn swap(&self, r: usize) -> Tableau {
        let entries = self
            .entries
            .iter()
            .map(|&x| if x == r { r + 1 } else if x == r + 1 { r } else { x })
            .collect();
        Tableau { shape: self.shape.clone(), nodes: self.nodes.clone(), entries }
    }

    pub fn is_row_strict(&self) -> bool {
        self.nodes
            .windows(2)
            .zip(self.entries.windows(2))
            .all(|(n, e)| n[0].comp != n[1].comp || n[0].row != n[1].row || e[0] < e[1])
    }

    pub fn is_column_strict(&self) -> bool {
        self.nodes.iter().zip(&self.entries).all(|(n, &x)| {
            if n.row == 1 {
                return true;
            }
            let above = Node::new(n.row - 1, n.col, n.comp);
            self.entry_at(above).is_none_or(|y| y < x)
        })
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_strict() && self.is_column_strict()
    }

    /// All standard tableaux of a shape, sorted by row reading word.
    pub fn standard(shape: &Multipartition) -> Vec<Tableau> {
        let d = shape.size();
        let nodes = shape.nodes();
        let mut out = Vec::new();
        // Place d, d-1, ... into removable nodes of the shrinking shape.
        fn go(
            shape: &Multipartition,
            full: &Multipartition,
            r: usize,
            entries: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if r == 0 {
                out.push(entries.clone());
                return;
            }
            for a in shape.removable() {
                let k = full.label_of(a).expect("node of the full shape");
                entries[k] = r;
                let smaller = shape.remove(a).expect("removable");
                go(&smaller, full, r - 1, entries, out);
            }
        }
        let mut words = Vec::new();
        go(shape, shape, d, &mut vec![0; d], &mut words);
        words.sort();
        for entries in words {
            out.push(Tableau { shape: shape.clone(), nodes: nodes.clone(), entries });
        }
        out
    }

    /// All row-strict tableaux of a shape, sorted by row reading word.
    pub fn row_strict(shape: &Multipartition) -> Vec<Tableau> {
        let d = shape.size();
        let nodes = shape.nodes();
        let mut out: Vec<Tableau> = Permutation::all(d)
            .into_iter()
            .map(|w| Tableau { shape: shape.clone(), nodes: nodes.clone(), entries: w.one_line().to_vec() })
            .filter(Tableau::is_row_strict)
            .collect();
        out.sort_by(|a, b| a.entries.cmp(&b.entries));
        out
    }

    /// `i^T`: residue of the node holding each of `1..d`.
    pub fn residue_sequence(&self, params: &AlgebraParams) -> Vec<Residue> {
        let mut res = vec![0; self.size()];
        for (n, &x) in self.nodes.iter().zip(&self.entries) {
            res[x - 1] = params.residue(*n);
        }
        res
    }

    /// Row lengths of `T_{<=a}` per component, keeping empty rows in place.
    pub fn shape_upto(&self, a: usize) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> =
            self.shape.components().iter().map(|c| vec![0; c.len()]).collect();
        for (n, &x) in self.nodes.iter().zip(&self.entries) {
            if x <= a {
                comps[n.comp - 1][n.row - 1] += 1;
            }
        }
        comps
    }

    /// `T_{<=(d-1)}` for a standard tableau, together with the node of `d`.
    pub fn remove_last(&self) -> Result<(Tableau, Node)> {
        let d = self.size();
        if d == 0 {
            return Err(Error::param("the empty tableau has no last entry"));
        }
        let a = self.node_of(d);
        let shape = self.shape.remove(a)?;
        let nodes = shape.nodes();
        let entries = self.nodes.iter().zip(&self.entries).filter(|(n, _)| **n != a).map(|(_, &x)| x).collect();
        Ok((Tableau { shape, nodes, entries }, a))
    }

    fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::param(format!("tableau {self} is not standard")))
        }
    }

    /// `deg(T) = d_A(mu) + deg(T_{<=(d-1)})`, `A` the node of `d`.
    pub fn degree(&self, params: &AlgebraParams) -> Result<i64> {
        self.require_standard()?;
        Ok(self.degree_pair(params).0)
    }

    /// `codeg(T) = d^A(mu_A) + codeg(T_{<=(d-1)})`.
    pub fn codegree(&self, params: &AlgebraParams) -> Result<i64> {
        self.require_standard()?;
        Ok(self.degree_pair(params).1)
    }

    /// `(deg, codeg)` for a tableau already known to be standard.
    pub fn degree_pair(&self, params: &AlgebraParams) -> (i64, i64) {
        let mut shape = self.shape.clone();
        let (mut deg, mut codeg) = (0, 0);
        for r in (1..=self.size()).rev() {
            let a = self.node_of(r);
            deg += d_below(&shape, a, params).expect("node of d is removable");
            shape = shape.remove(a).expect("node of d is removable");
            codeg += d_above(&shape, a, params).expect("removed node is addable");
        }
        (deg, codeg)
    }

    /// `r ->_T s`: same row of the same component, `s` to the right.
    pub fn is_east(&self, r: usize, s: usize) -> bool {
        let (a, b) = (self.node_of(r), self.node_of(s));
        a.comp == b.comp && a.row == b.row && b.col > a.col
    }

    /// `r |_T s`: same column of the same component, `s` lower.
    pub fn is_south(&self, r: usize, s: usize) -> bool {
        let (a, b) = (self.node_of(r), self.node_of(s));
        a.comp == b.comp && a.col == b.col && b.row > a.row
    }

    /// `r /_T s`: same component, `s` strictly north-east of `r`.
    pub fn is_north_east(&self, r: usize, s: usize) -> bool {
        let (a, b) = (self.node_of(r), self.node_of(s));
        a.comp == b.comp && b.row < a.row && b.col > a.col
    }

    /// `r` occupies an earlier node than `s`.
    pub fn is_earlier(&self, r: usize, s: usize) -> bool {
        self.node_of(r) < self.node_of(s)
    }

    /// Compact text form: components by `|`, rows by `/`, entries by `,`.
    pub fn filling_string(&self) -> String {
        let mut comps = Vec::new();
        let mut k = 0;
        for comp in self.shape.components() {
            if comp.is_empty() {
                comps.push("_".to_string());
                continue;
            }
            let mut rows = Vec::new();
            for &len in comp {
                rows.push(self.entries[k..k + len].iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
                k += len;
            }
            comps.push(rows.join("/"));
        }
        comps.join("|")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.filling_string())
    }
}

/// Bruhat order on tableaux of a common shape: `S <= T` iff `w_S <= w_T`.
pub fn tableau_bruhat(s: &Tableau, t: &Tableau) -> Result<bool> {
    if s.shape != t.shape {
        return Err(Error::param(format!("shapes {} and {} differ", s.shape, t.shape)));
    }
    Ok(s.permutation().bruhat_leq(&t.permutation()))
}

fn signed_count(mu: &Multipartition, i: Residue, params: &AlgebraParams, keep: impl Fn(Node) -> bool) -> i64 {
    let add = mu.addable().into_iter().filter(|&n| keep(n) && params.residue(n) == i).count() as i64;
    let rem = mu.removable().into_iter().filter(|&n| keep(n) && params.residue(n) == i).count() as i64;
    add - rem
}

/// `d_A(mu)`: addable minus removable `res(A)`-nodes strictly below `A`.
pub fn d_below(mu: &Multipartition, a: Node, params: &AlgebraParams) -> Result<i64> {
    if !mu.removable().contains(&a) {
        return Err(Error::param(format!("{a} is not a removable node of {mu}")));
    }
    let i = params.residue(a);
    Ok(signed_count(mu, i, params, |n| n > a))
}

/// `d^B(mu)`: addable minus removable `res(B)`-nodes strictly above `B`.
pub fn d_above(mu: &Multipartition, b: Node, params: &AlgebraParams) -> Result<i64> {
    if b.comp > mu.level() || !mu.addable().contains(&b) {
        return Err(Error::param(format!("{b} is not an addable node of {mu}")));
    }
    let i = params.residue(b);
    Ok(signed_count(mu, i, params, |n| n < b))
}

/// `d_i(mu)`: addable minus removable `i`-nodes.
pub fn d_residue(mu: &Multipartition, i: Residue, params: &AlgebraParams) -> i64 {
    signed_count(mu, params.norm(i), params, |_| true)
}
