//! Plain backtracking oracles, vertex order `1..n`.

use std::collections::BTreeSet;

use super::Graph;

/// All stable sets including `∅`, sorted by cardinality and then
/// lexicographically.
pub fn stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    let masks = g.masks();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(v: usize, n: usize, masks: &[u64], blocked: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v > n {
            out.push(cur.clone());
            return;
        }
        rec(v + 1, n, masks, blocked, cur, out);
        if blocked & (1 << (v - 1)) == 0 {
            cur.push(v);
            rec(v + 1, n, masks, blocked | masks[v], cur, out);
            cur.pop();
        }
    }
    rec(1, g.n(), &masks, 0, &mut cur, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn stability_number(g: &Graph) -> usize {
    stable_sets(g).last().map_or(0, |s| s.len())
}

/// Stable sets not contained in a larger stable set.
pub fn maximal_stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    let masks = g.masks();
    stable_sets(g)
        .into_iter()
        .filter(|s| {
            let inside: u64 = s.iter().fold(0, |m, &v| m | 1 << (v - 1));
            let blocked: u64 = s.iter().fold(inside, |m, &v| m | masks[v]);
            (1..=g.n()).all(|v| blocked & (1 << (v - 1)) != 0)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCount {
    /// Proper maps `V → {0..k-1}`; colour permutations counted separately.
    pub count: u128,
    /// The first few labelings in lex order, entry `v-1` is the colour of `v`.
    pub witnesses: Vec<Vec<u32>>,
}

pub fn count_proper_colorings(g: &Graph, k: u32, max_witnesses: usize) -> ColoringCount {
    let adj = g.adjacency();
    let mut col = vec![u32::MAX; g.n() + 1];
    let mut res = ColoringCount { count: 0, witnesses: Vec::new() };
    fn rec(v: usize, n: usize, k: u32, adj: &[Vec<usize>], col: &mut [u32], max_w: usize, res: &mut ColoringCount) {
        if v > n {
            res.count += 1;
            if res.witnesses.len() < max_w {
                res.witnesses.push(col[1..].to_vec());
            }
            return;
        }
        for c in 0..k {
            if adj[v].iter().all(|&w| w > v || col[w] != c) {
                col[v] = c;
                rec(v + 1, n, k, adj, col, max_w, res);
            }
        }
        col[v] = u32::MAX;
    }
    rec(1, g.n(), k, &adj, &mut col, max_witnesses, &mut res);
    res
}

/// Undirected hamiltonian cycles, each counted once.
pub fn hamiltonian_cycles(g: &Graph) -> u64 {
    let n = g.n();
    if n < 3 {
        return 0;
    }
    let adj = g.adjacency();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    fn rec(v: usize, seen: u64, full: u64, adj: &[Vec<usize>]) -> u64 {
        if seen == full {
            return u64::from(adj[v].contains(&1));
        }
        adj[v]
            .iter()
            .filter(|&&w| seen & (1 << (w - 1)) == 0)
            .map(|&w| rec(w, seen | 1 << (w - 1), full, adj))
            .sum()
    }
    // every cycle is traced once in each direction from vertex 1
    rec(1, 1, full, &adj) / 2
}

/// Lengths `L` such that some simple cycle has exactly `L` vertices.
pub fn cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    let adj = g.adjacency();
    let mut out = BTreeSet::new();
    fn rec(s: usize, v: usize, len: usize, seen: u64, adj: &[Vec<usize>], out: &mut BTreeSet<usize>) {
        for &w in &adj[v] {
            if w == s && len >= 3 {
                out.insert(len);
            } else if w > s && seen & (1 << (w - 1)) == 0 {
                rec(s, w, len + 1, seen | 1 << (w - 1), adj, out);
            }
        }
    }
    for s in 1..=g.n() {
        rec(s, s, 1, 1 << (s - 1), &adj, &mut out);
    }
    out
}

/// Whether the edges admit a proper colouring with `k` colours.
pub fn edge_colorable(g: &Graph, k: u32) -> bool {
    let edges = g.edge_list();
    let mut used = vec![0u64; g.n() + 1];
    fn rec(e: usize, edges: &[(usize, usize)], k: u32, used: &mut [u64]) -> bool {
        let Some(&(a, b)) = edges.get(e) else { return true };
        for c in 0..k {
            let bit = 1u64 << c;
            if (used[a] | used[b]) & bit == 0 {
                used[a] |= bit;
                used[b] |= bit;
                if rec(e + 1, edges, k, used) {
                    return true;
                }
                used[a] &= !bit;
                used[b] &= !bit;
            }
        }
        false
    }
    rec(0, &edges, k, &mut used)
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn stable_set_examples() {
        let k3 = complete(3);
        assert_eq!(stable_sets(&k3), vec![vec![], vec![1], vec![2], vec![3]]);
        assert_eq!(stability_number(&k3), 1);
        let p = petersen();
        assert_eq!(stability_number(&p), 4);
        assert_eq!(stable_sets(&p).iter().filter(|s| s.len() == 4).count(), 5);
        let t = disjoint_triangles(2);
        assert_eq!(maximal_stable_sets(&t).len(), 9);
        assert_eq!(stable_sets(&t).len(), 16);
        assert_eq!(stability_number(&turan(5, 3).unwrap()), 2);
    }

    #[test]
    fn coloring_examples() {
        assert_eq!(count_proper_colorings(&complete(3), 3, 0).count, 6);
        assert_eq!(count_proper_colorings(&complete(4), 3, 0).count, 0);
        assert_eq!(count_proper_colorings(&cycle(5), 3, 0).count, 30);
        let w = count_proper_colorings(&path(2), 2, 5).witnesses;
        assert_eq!(w, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn hamiltonian_and_cycle_examples() {
        assert_eq!(hamiltonian_cycles(&complete(3)), 1);
        assert_eq!(hamiltonian_cycles(&complete(4)), 3);
        assert_eq!(hamiltonian_cycles(&complete(5)), 12);
        assert_eq!(hamiltonian_cycles(&cycle(5)), 1);
        assert_eq!(hamiltonian_cycles(&petersen()), 0);
        assert_eq!(cycle_lengths(&complete(3)), [3].into());
        assert_eq!(cycle_lengths(&cycle(6)), [6].into());
        assert_eq!(cycle_lengths(&complete(4)), [3, 4].into());
        assert_eq!(cycle_lengths(&petersen()), [5, 6, 8, 9].into());
        assert!(cycle_lengths(&path(4)).is_empty());
    }

    #[test]
    fn edge_coloring_examples() {
        assert!(edge_colorable(&path(3), 2));
        assert!(!edge_colorable(&complete(3), 2));
        assert!(edge_colorable(&star(3), 3));
        assert!(!edge_colorable(&petersen(), 3));
        assert!(edge_colorable(&petersen(), 4));
    }

    #[test]
    fn identification_keeps_non_colorability() {
        let w5 = odd_wheel(5).unwrap();
        assert_eq!(count_proper_colorings(&w5, 3, 0).count, 0);
        let h = w5.identify_vertices(3, 5).unwrap();
        assert_eq!(count_proper_colorings(&h, 3, 0).count, 0);
    }
}
