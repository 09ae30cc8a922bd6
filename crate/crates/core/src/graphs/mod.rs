//! Simple undirected graphs on vertices `1..=n`, posets, named families and
//! brute-force combinatorial oracles.

mod generators;
mod iso;
mod oracles;
mod poset;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

pub use generators::{
    complete, cycle, disjoint_triangles, empty, kneser, named, odd_wheel, path, petersen, star,
    turan,
};
pub use iso::{canonical_form, connected_bipartite_graphs, nonisomorphic_graphs};
pub use oracles::{
    count_proper_colorings, cycle_lengths, edge_colorable, hamiltonian_cycles,
    maximal_stable_sets, stability_number, stable_sets, ColoringCount,
};
pub use poset::Poset;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { n, edges: BTreeSet::new() }
    }

    /// Builds a graph from pairs; duplicates collapse, self-loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, Error> {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), Error> {
        for v in [a, b] {
            if v < 1 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Edges `(i, j)` with `i < j`, in lex order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + Clone + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Adjacency bitmasks, bit `j-1` of entry `i` set iff `{i,j} ∈ E`.
    /// Index 0 is unused.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask oracles support at most 64 vertices");
        let mut m = vec![0u64; self.n + 1];
        for &(a, b) in &self.edges {
            m[a] |= 1 << (b - 1);
            m[b] |= 1 << (a - 1);
        }
        m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n + 1];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    /// Two-colouring by BFS as `(A, B)` with vertex 1 in `A`; `None` if some
    /// odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency();
        let mut side = vec![None; self.n + 1];
        for s in 1..=self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &w in &adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        let a = (1..=self.n).filter(|&v| side[v] == Some(false)).collect();
        let b = (1..=self.n).filter(|&v| side[v] == Some(true)).collect();
        Some((a, b))
    }

    /// Merges `j` into `i`. Vertices above `j` shift down by one; parallel
    /// edges collapse.
    pub fn identify_vertices(&self, i: usize, j: usize) -> Result<Graph, Error> {
        for v in [i, j] {
            if v < 1 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if i == j {
            return Err(Error::InvalidParameter(format!("cannot identify vertex {i} with itself")));
        }
        if self.has_edge(i, j) {
            return Err(Error::AdjacentPair(i, j));
        }
        let map = |v: usize| identify_map(v, i, j);
        let mut g = Graph::new(self.n - 1);
        for &(a, b) in &self.edges {
            g.add_edge(map(a), map(b))?;
        }
        Ok(g)
    }

    /// Graph with vertices relabelled by `perm[v-1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for &(a, b) in &self.edges {
            g.add_edge(perm[a - 1], perm[b - 1]).expect("permutation");
        }
        g
    }

    /// Edge-list text: `n` then one `i j` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (a, b) in self.edges() {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

/// Where vertex `v` lands after identifying `j` into `i`.
pub fn identify_map(v: usize, i: usize, j: usize) -> usize {
    let v = if v == j { i } else { v };
    if v > j {
        v - 1
    } else {
        v
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E=[", self.n)?;
        for (k, (a, b)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "])")
    }
}

/// Reads either the plain edge-list format or DIMACS `p edge` / `e` lines.
pub fn parse_graph(text: &str) -> Result<Graph, Error> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let dimacs = lines.iter().any(|(_, l)| l.starts_with("p "));
    let int = |line: usize, s: &str| -> Result<usize, Error> {
        let v: i64 = s.parse().map_err(|_| Error::Malformed {
            line,
            msg: format!("expected integer, found `{s}`"),
        })?;
        if v < 0 {
            return Err(Error::Malformed { line, msg: format!("negative value {v}") });
        }
        Ok(v as usize)
    };
    let edge = |g: &mut Graph, line: usize, a: usize, b: usize| -> Result<(), Error> {
        if a < 1 || b < 1 {
            return Err(Error::Malformed { line, msg: "vertex indices start at 1".into() });
        }
        g.add_edge(a, b)
    };
    let mut g: Option<Graph> = None;
    for (line, l) in lines {
        let f: Vec<&str> = l.split_whitespace().collect();
        if dimacs {
            match f[0] {
                "c" => {}
                "p" => {
                    if f.len() < 3 || g.is_some() {
                        return Err(Error::Malformed { line, msg: "bad problem line".into() });
                    }
                    g = Some(Graph::new(int(line, f[2])?));
                }
                "e" => {
                    let gr = g.as_mut().ok_or(Error::Malformed {
                        line,
                        msg: "edge before problem line".into(),
                    })?;
                    if f.len() != 3 {
                        return Err(Error::Malformed { line, msg: "expected `e i j`".into() });
                    }
                    let (a, b) = (int(line, f[1])?, int(line, f[2])?);
                    edge(gr, line, a, b)?;
                }
                other => {
                    return Err(Error::Malformed { line, msg: format!("unknown record `{other}`") })
                }
            }
        } else {
            match (&mut g, f.len()) {
                (None, 1) => g = Some(Graph::new(int(line, f[0])?)),
                (Some(gr), 2) => {
                    let (a, b) = (int(line, f[0])?, int(line, f[1])?);
                    edge(gr, line, a, b)?;
                }
                _ => return Err(Error::Malformed { line, msg: format!("unexpected line `{l}`") }),
            }
        }
    }
    g.ok_or(Error::Malformed { line: 0, msg: "missing vertex count".into() })
}
