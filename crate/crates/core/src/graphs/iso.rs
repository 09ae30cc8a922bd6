//! Brute-force canonical forms for very small graphs.

use std::collections::BTreeSet;

use super::Graph;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = t;
            idx[j][i] = t;
            t += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k % 2 == 0 {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut p, &mut out);
    out
}

struct Canon {
    /// for each permutation, where each pair bit moves to
    maps: Vec<Vec<usize>>,
}

impl Canon {
    fn new(n: usize) -> Canon {
        let idx = pair_index(n);
        let maps = permutations(n)
            .into_iter()
            .map(|p| {
                let mut m = vec![0; n * (n - 1) / 2];
                for i in 0..n {
                    for j in i + 1..n {
                        m[idx[i][j]] = idx[p[i]][p[j]];
                    }
                }
                m
            })
            .collect();
        Canon { maps }
    }

    fn canon(&self, mask: u64) -> u64 {
        let bits: Vec<usize> = (0..64).filter(|b| mask >> b & 1 == 1).collect();
        self.maps
            .iter()
            .map(|m| bits.iter().fold(0u64, |acc, &b| acc | 1 << m[b]))
            .min()
            .unwrap_or(0)
    }
}

fn to_mask(g: &Graph, idx: &[Vec<usize>]) -> u64 {
    g.edges().fold(0, |acc, (a, b)| acc | 1 << idx[a - 1][b - 1])
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut t = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if mask >> t & 1 == 1 {
                g.add_edge(i, j).expect("valid pair");
            }
            t += 1;
        }
    }
    g
}

/// Smallest edge bitmask over all relabelings, so isomorphic graphs share
/// a form. Only meant for `n ≤ 8`.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    assert!(g.n() <= 8, "canonical form is brute force");
    let idx = pair_index(g.n());
    (g.n(), Canon::new(g.n()).canon(to_mask(g, &idx)))
}

/// One representative per isomorphism class on exactly `n` vertices, each
/// labelled by its canonical form. Practical up to `n = 6`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration only for tiny n");
    if n == 0 {
        return vec![Graph::new(0)];
    }
    let canon = Canon::new(n);
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs)
        .filter(|&m| canon.canon(m) == m)
        .map(|m| from_mask(n, m))
        .collect()
}

/// Connected bipartite graphs on `n` vertices, one per isomorphism class.
pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive enumeration only for tiny n");
    let canon = Canon::new(n);
    let idx = pair_index(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        for bi in 0..1u64 << (a * b) {
            let mut g = Graph::new(n);
            for r in 0..a {
                for c in 0..b {
                    if bi >> (r * b + c) & 1 == 1 {
                        g.add_edge(r + 1, a + c + 1).expect("valid pair");
                    }
                }
            }
            if !g.is_connected() {
                continue;
            }
            let key = canon.canon(to_mask(&g, &idx));
            if seen.insert(key) {
                out.push(from_mask(n, key));
            }
        }
    }
    out
}
