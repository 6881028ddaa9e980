use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Node `(row, col, comp)`, all 1-based.
///
/// Ordered by component, then row, then column: this is the order in which
/// the initial tableau is filled, so "earlier" and "above" agree with `<`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        assert!(row >= 1 && col >= 1 && comp >= 1, "nodes are 1-based");
        Node { row, col, comp }
    }

    fn key(&self) -> (usize, usize, usize) {
        (self.comp, self.row, self.col)
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col, self.comp].serialize(s)
    }
}

/// An `l`-multipartition. Components carry no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    comps: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(mut comps: Vec<Vec<usize>>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::param("a multipartition needs at least one component"));
        }
        for (m, c) in comps.iter_mut().enumerate() {
            while c.last() == Some(&0) {
                c.pop();
            }
            if c.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::param(format!("component {} is not weakly decreasing: {:?}", m + 1, c)));
            }
            if c.contains(&0) {
                return Err(Error::param(format!("component {} has an interior zero part", m + 1)));
            }
        }
        Ok(Multipartition { comps })
    }

    pub fn empty(level: usize) -> Self {
        Multipartition { comps: vec![Vec::new(); level.max(1)] }
    }

    /// Parses `3,1|_|4,2`. Components are separated by `|`, parts by `,`, and
    /// `_` stands for an empty component. The empty string is the empty
    /// multipartition. Missing trailing components are padded up to `level`.
    pub fn parse(s: &str, level: usize) -> Result<Self> {
        let mut comps = Vec::new();
        if !s.trim().is_empty() {
            let mut offset = 0;
            for piece in s.split('|') {
                comps.push(parse_component(piece, offset)?);
                offset += piece.len() + 1;
            }
        }
        if comps.len() > level {
            return Err(Error::Parse {
                position: 0,
                message: format!("{} components given but the level is {}", comps.len(), level),
            });
        }
        comps.resize(level.max(1), Vec::new());
        Self::new(comps).map_err(|e| Error::Parse { position: 0, message: e.to_string() })
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    /// Row length `mu^{(comp)}_row`, zero outside the diagram.
    pub fn row_len(&self, row: usize, comp: usize) -> usize {
        self.comps.get(comp - 1).and_then(|c| c.get(row - 1)).copied().unwrap_or(0)
    }

    pub fn contains(&self, n: Node) -> bool {
        n.comp <= self.level() && n.col <= self.row_len(n.row, n.comp)
    }

    /// Nodes in label order (component, then row, then column).
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (m, comp) in self.comps.iter().enumerate() {
            for (a, &len) in comp.iter().enumerate() {
                for b in 1..=len {
                    out.push(Node::new(a + 1, b, m + 1));
                }
            }
        }
        out
    }

    /// Label (0-based) of a node of the diagram in the row reading order.
    pub fn label_of(&self, n: Node) -> Option<usize> {
        if !self.contains(n) {
            return None;
        }
        let before: usize = self.comps[..n.comp - 1].iter().flatten().sum();
        let rows: usize = self.comps[n.comp - 1][..n.row - 1].iter().sum();
        Some(before + rows + n.col - 1)
    }

    /// Removable nodes, top to bottom.
    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (m, comp) in self.comps.iter().enumerate() {
            for (a, &len) in comp.iter().enumerate() {
                let next = comp.get(a + 1).copied().unwrap_or(0);
                if len > next {
                    out.push(Node::new(a + 1, len, m + 1));
                }
            }
        }
        out
    }

    /// Addable nodes, top to bottom.
    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (m, comp) in self.comps.iter().enumerate() {
            for a in 0..=comp.len() {
                let len = comp.get(a).copied().unwrap_or(0);
                let above = if a == 0 { usize::MAX } else { comp[a - 1] };
                if len < above {
                    out.push(Node::new(a + 1, len + 1, m + 1));
                }
            }
        }
        out
    }

    /// `mu_A`; `A` must be removable.
    pub fn remove(&self, a: Node) -> Result<Multipartition> {
        if !self.removable().contains(&a) {
            return Err(Error::param(format!("{a} is not removable from {self}")));
        }
        let mut comps = self.comps.clone();
        comps[a.comp - 1][a.row - 1] -= 1;
        while comps[a.comp - 1].last() == Some(&0) {
            comps[a.comp - 1].pop();
        }
        Ok(Multipartition { comps })
    }

    /// `mu^B`; `B` must be addable.
    pub fn add(&self, b: Node) -> Result<Multipartition> {
        if b.comp > self.level() || !self.addable().contains(&b) {
            return Err(Error::param(format!("{b} is not addable to {self}")));
        }
        let mut comps = self.comps.clone();
        let comp = &mut comps[b.comp - 1];
        if comp.len() < b.row {
            comp.push(0);
        }
        comp[b.row - 1] += 1;
        Ok(Multipartition { comps })
    }

    pub fn dominates(&self, other: &Multipartition) -> bool {
        dominates(&self.comps, &other.comps)
    }
}

fn parse_component(piece: &str, offset: usize) -> Result<Vec<usize>> {
    let trimmed = piece.trim();
    if trimmed == "_" {
        return Ok(Vec::new());
    }
    if trimmed.is_empty() {
        return Err(Error::Parse {
            position: offset,
            message: "empty component; write `_` for an empty partition".into(),
        });
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for tok in piece.split(',') {
        let t = tok.trim();
        let lead = tok.len() - tok.trim_start().len();
        let v: usize = t.parse().map_err(|_| Error::Parse {
            position: pos + lead,
            message: format!("expected a positive integer, found {t:?}"),
        })?;
        if v == 0 {
            return Err(Error::Parse { position: pos + lead, message: "parts must be positive".into() });
        }
        parts.push(v);
        pos += tok.len() + 1;
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse { position: offset, message: format!("parts {parts:?} are not weakly decreasing") });
    }
    Ok(parts)
}

/// Dominance of multicompositions given as component lists (zero parts
/// allowed, missing rows read as zero).
pub fn dominates(mu: &[Vec<usize>], nu: &[Vec<usize>]) -> bool {
    let level = mu.len().max(nu.len());
    let (mut sm, mut sn) = (0i64, 0i64);
    for m in 0..level {
        let a = mu.get(m).map(Vec::as_slice).unwrap_or(&[]);
        let b = nu.get(m).map(Vec::as_slice).unwrap_or(&[]);
        let rows = a.len().max(b.len()).max(1);
        for c in 0..rows {
            sm += a.get(c).copied().unwrap_or(0) as i64;
            sn += b.get(c).copied().unwrap_or(0) as i64;
            if sm < sn {
                return false;
            }
        }
    }
    true
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "_".to_string()
                } else {
                    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.comps.serialize(s)
    }
}

/// Partitions of `n` in decreasing lexicographic order.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `level`-multipartitions of `d`: sizes of earlier components first
/// (largest first), then partitions in decreasing lexicographic order.
pub fn multipartitions(d: usize, level: usize) -> Vec<Multipartition> {
    fn go(d: usize, level: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Multipartition>) {
        if cur.len() + 1 == level {
            for p in partitions(d) {
                cur.push(p);
                out.push(Multipartition { comps: cur.clone() });
                cur.pop();
            }
            return;
        }
        for k in (0..=d).rev() {
            for p in partitions(k) {
                cur.push(p);
                go(d - k, level, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, level.max(1), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn removable_and_addable_nodes() {
        let mu = Multipartition::parse("3,1|_|4,2", 3).unwrap();
        let n = |a, b, m| Node::new(a, b, m);
        assert_eq!(mu.removable(), vec![n(1, 3, 1), n(2, 1, 1), n(1, 4, 3), n(2, 2, 3)]);
        assert_eq!(
            mu.addable(),
            vec![n(1, 4, 1), n(2, 2, 1), n(3, 1, 1), n(1, 1, 2), n(1, 5, 3), n(2, 3, 3), n(3, 1, 3)]
        );
        let empty = Multipartition::empty(1);
        assert!(empty.removable().is_empty());
        assert_eq!(empty.addable(), vec![n(1, 1, 1)]);
    }

    #[test]
    fn parse_and_format() {
        let mu = Multipartition::parse("3,1|_|4,2", 3).unwrap();
        assert_eq!(mu.to_string(), "3,1|_|4,2");
        assert_eq!(mu.size(), 10);
        assert_eq!(Multipartition::parse("", 2).unwrap(), Multipartition::empty(2));
        assert_eq!(Multipartition::parse("2", 2).unwrap().to_string(), "2|_");
        match Multipartition::parse("3,x", 1) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match Multipartition::parse("1|2,0", 2) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Multipartition::parse("1,2", 1).is_err());
        assert!(Multipartition::parse("1|1", 1).is_err());
        assert!(Multipartition::parse("1||1", 3).is_err());
    }

    #[test]
    fn dominance_examples() {
        let two = Multipartition::parse("2", 1).unwrap();
        let one_one = Multipartition::parse("1,1", 1).unwrap();
        assert!(two.dominates(&one_one));
        assert!(!one_one.dominates(&two));
        let a = Multipartition::parse("1|_", 2).unwrap();
        let b = Multipartition::parse("_|1", 2).unwrap();
        assert!(a.dominates(&b) && !b.dominates(&a));
        assert!(dominates(&[vec![1, 0, 1]], &[vec![0, 1, 1]]));
    }

    #[test]
    fn enumeration_counts() {
        // Numbers of l-multipartitions of d, checked against a generating-function brute force.
        fn count(d: usize, l: usize) -> usize {
            let p: Vec<usize> = (0..=d).map(|n| partitions(n).len()).collect();
            let mut acc = vec![0usize; d + 1];
            acc[0] = 1;
            for _ in 0..l {
                let mut next = vec![0usize; d + 1];
                for i in 0..=d {
                    for j in 0..=d - i {
                        next[i + j] += acc[i] * p[j];
                    }
                }
                acc = next;
            }
            acc[d]
        }
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(7).len(), 15);
        for l in 1..=3 {
            for d in 0..=6 {
                let all = multipartitions(d, l);
                assert_eq!(all.len(), count(d, l));
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
                assert!(all.iter().all(|m| m.size() == d && m.level() == l));
            }
        }
        assert_eq!(multipartitions(3, 2).len(), 10);
    }

    #[test]
    fn add_remove_inverse() {
        for mu in multipartitions(5, 2) {
            for a in mu.removable() {
                let smaller = mu.remove(a).unwrap();
                assert!(smaller.addable().contains(&a));
                assert_eq!(smaller.add(a).unwrap(), mu);
            }
        }
    }
}
