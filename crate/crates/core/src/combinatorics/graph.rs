use std::collections::HashMap;

use serde::Serialize;

use super::{Multipartition, Node, Tableau};
use crate::error::{Error, Result};

/// Edge `T ->r S` of the weak Bruhat graph, by positions in the standard
/// tableau list of the shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

/// Edges `T ->r S` with `S = s_r T` standard and `r` in an earlier node of
/// `T` than `r+1`, for the standard tableaux in canonical order.
pub fn weak_bruhat_graph(tableaux: &[Tableau]) -> Vec<Edge> {
    let index: HashMap<&[usize], usize> = tableaux.iter().enumerate().map(|(i, t)| (t.entries(), i)).collect();
    let mut edges = Vec::new();
    for (i, t) in tableaux.iter().enumerate() {
        for r in 1..t.size() {
            if !t.is_earlier(r, r + 1) {
                continue;
            }
            let s = t.swap(r);
            if let Some(&j) = index.get(s.entries()) {
                edges.push(Edge { from: i, to: j, color: r });
            }
        }
    }
    edges
}

/// `T` is `t`-terminal: some standard `S ->t T`.
pub fn is_terminal(t: &Tableau, r: usize) -> bool {
    r >= 1 && r < t.size() && t.is_earlier(r + 1, r) && t.swap(r).is_standard()
}

/// `T` is `(r_1, ..., r_m)`-terminal: `S_1 ->r_1 S_2 -> ... ->r_m T`.
pub fn is_terminal_chain(t: &Tableau, colors: &[usize]) -> bool {
    let mut cur = t.clone();
    for &r in colors.iter().rev() {
        if !is_terminal(&cur, r) {
            return false;
        }
        cur = cur.swap(r);
    }
    true
}

/// Which of the four alternatives hold for `r ->_T r+1` (same row).
/// Returns `None` if the hypothesis fails.
pub fn above_alternatives(t: &Tableau, r: usize) -> Option<[bool; 4]> {
    if r == 0 || r + 1 > t.size() || !t.is_east(r, r + 1) {
        return None;
    }
    let d = t.size();
    let alt1 = (1..d).filter(|&u| u.abs_diff(r) > 1).any(|u| is_terminal(t, u) && t.swap(u).is_east(r, r + 1));
    let alt2 = r + 2 <= d
        && is_terminal_chain(t, &[r, r + 1])
        && t.swap(r + 1).swap(r).is_east(r + 1, r + 2);
    let alt3 = r >= 2 && is_terminal_chain(t, &[r, r - 1]) && t.swap(r - 1).swap(r).is_east(r - 1, r);
    let alt4 = t.entries().iter().enumerate().all(|(k, &x)| x == k + 1);
    Some([alt1, alt2, alt3, alt4])
}

/// Which of the four alternatives hold for `r |_T r+1` (same column).
/// Returns `None` if the hypothesis fails.
pub fn next_alternatives(t: &Tableau, r: usize) -> Option<[bool; 4]> {
    if r == 0 || r + 1 > t.size() || !t.is_south(r, r + 1) {
        return None;
    }
    let d = t.size();
    let alt1 = (1..d).filter(|&u| u.abs_diff(r) > 1).any(|u| is_terminal(t, u) && t.swap(u).is_south(r, r + 1));
    let alt2 = r + 2 <= d
        && is_terminal_chain(t, &[r, r + 1])
        && t.swap(r + 1).swap(r).is_south(r + 1, r + 2);
    let alt3 = r >= 2 && is_terminal_chain(t, &[r, r - 1]) && t.swap(r - 1).swap(r).is_south(r - 1, r);
    let n = t.node_of(r);
    let alt4 = garnir_tableau(t.shape(), n.row, n.col, n.comp).is_ok_and(|g| g == *t);
    Some([alt1, alt2, alt3, alt4])
}

fn check_garnir(mu: &Multipartition, a: usize, b: usize, n: usize) -> Result<()> {
    if a == 0 || b == 0 || n == 0 || n > mu.level() {
        return Err(Error::param(format!("({a},{b},{n}) is not a node of {mu}")));
    }
    if !mu.contains(Node::new(a, b, n)) || !mu.contains(Node::new(a + 1, b, n)) {
        return Err(Error::param(format!("Garnir belt needs ({a},{b},{n}) and ({},{b},{n}) in {mu}", a + 1)));
    }
    Ok(())
}

/// Nodes `(a, c, n)` for `b <= c <= mu_a` and `(a+1, g, n)` for `g <= b`,
/// listed in column reading order.
pub fn garnir_belt(mu: &Multipartition, a: usize, b: usize, n: usize) -> Result<Vec<Node>> {
    check_garnir(mu, a, b, n)?;
    let mut belt = Vec::new();
    for g in 1..b {
        belt.push(Node::new(a + 1, g, n));
    }
    belt.push(Node::new(a, b, n));
    belt.push(Node::new(a + 1, b, n));
    for c in b + 1..=mu.row_len(a, n) {
        belt.push(Node::new(a, c, n));
    }
    Ok(belt)
}

/// Agrees with `T^mu` off the belt; on the belt the same entries are written
/// in increasing order along the column reading order.
pub fn garnir_tableau(mu: &Multipartition, a: usize, b: usize, n: usize) -> Result<Tableau> {
    let belt = garnir_belt(mu, a, b, n)?;
    let initial = Tableau::initial(mu);
    let mut values: Vec<usize> = belt.iter().map(|&x| initial.entry_at(x).expect("belt node")).collect();
    values.sort_unstable();
    let mut entries = initial.entries().to_vec();
    for (node, v) in belt.iter().zip(values) {
        entries[mu.label_of(*node).expect("belt node")] = v;
    }
    Tableau::new(mu.clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{multipartitions, tableau_bruhat};

    #[test]
    fn garnir_figure() {
        let mu = Multipartition::parse("3,1|7,6,5,2", 2).unwrap();
        let g = garnir_tableau(&mu, 2, 3, 2).unwrap();
        let row = |a: usize| -> Vec<usize> {
            (1..=mu.row_len(a, 2)).map(|c| g.entry_at(Node::new(a, c, 2)).unwrap()).collect()
        };
        assert_eq!(row(2), vec![12, 13, 16, 18, 19, 20]);
        assert_eq!(row(3), vec![14, 15, 17, 21, 22]);
        assert!(g.is_standard());
        assert_eq!(garnir_belt(&mu, 2, 3, 2).unwrap().len(), 7);
        assert!(garnir_tableau(&mu, 4, 1, 2).is_err());
    }

    #[test]
    fn degenerate_garnir_is_initial() {
        let mu = Multipartition::parse("1,1", 1).unwrap();
        assert_eq!(garnir_tableau(&mu, 1, 1, 1).unwrap(), Tableau::initial(&mu));
    }

    #[test]
    fn garnir_is_bruhat_maximal() {
        for l in 1..=2 {
            for d in 2..=7 {
                for mu in multipartitions(d, l) {
                    let all = Tableau::standard(&mu);
                    let initial = Tableau::initial(&mu);
                    for node in mu.nodes() {
                        let Ok(belt) = garnir_belt(&mu, node.row, node.col, node.comp) else { continue };
                        let fixed: Vec<&Tableau> = all
                            .iter()
                            .filter(|t| {
                                mu.nodes().iter().all(|&x| belt.contains(&x) || t.entry_at(x) == initial.entry_at(x))
                            })
                            .collect();
                        let maxima: Vec<&&Tableau> = fixed
                            .iter()
                            .filter(|t| fixed.iter().all(|s| tableau_bruhat(s, t).unwrap()))
                            .collect();
                        assert_eq!(maxima.len(), 1, "{mu} at {node}");
                        let g = garnir_tableau(&mu, node.row, node.col, node.comp).unwrap();
                        assert_eq!(**maxima[0], g, "{mu} at {node}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_graphs() {
        let mu = Multipartition::parse("2,1", 1).unwrap();
        let ts = Tableau::standard(&mu);
        let edges = weak_bruhat_graph(&ts);
        assert_eq!(edges.len(), 1);
        let e = edges[0];
        assert_eq!((ts[e.from].filling_string().as_str(), e.color, ts[e.to].filling_string().as_str()), ("1,2/3", 2, "1,3/2"));
        for s in ["4", "1,1,1,1"] {
            let m = Multipartition::parse(s, 1).unwrap();
            assert!(weak_bruhat_graph(&Tableau::standard(&m)).is_empty());
        }
    }

    #[test]
    fn graph_is_connected() {
        for mu in multipartitions(5, 2) {
            let ts = Tableau::standard(&mu);
            let edges = weak_bruhat_graph(&ts);
            let mut reached = vec![false; ts.len()];
            reached[0] = true;
            let mut changed = true;
            while changed {
                changed = false;
                for e in &edges {
                    if reached[e.from] != reached[e.to] {
                        reached[e.from] = true;
                        reached[e.to] = true;
                        changed = true;
                    }
                }
            }
            assert!(reached.iter().all(|&x| x), "{mu}");
        }
    }
}
