use super::Graph;
use crate::error::Error;

/// Strict partial order on `1..=m`, stored transitively closed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    m: usize,
    /// `gt[a][b]` iff `a > b`; row and column 0 unused.
    gt: Vec<Vec<bool>>,
}

impl Poset {
    /// Closes `pairs` (each `(a, b)` meaning `a > b`) transitively; cycles
    /// are rejected.
    pub fn from_relations(m: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Poset, Error> {
        let mut gt = vec![vec![false; m + 1]; m + 1];
        for (a, b) in pairs {
            if a < 1 || a > m || b < 1 || b > m {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n: m });
            }
            gt[a][b] = true;
        }
        for k in 1..=m {
            for i in 1..=m {
                if gt[i][k] {
                    for j in 1..=m {
                        if gt[k][j] {
                            gt[i][j] = true;
                        }
                    }
                }
            }
        }
        if (1..=m).any(|i| gt[i][i]) {
            return Err(Error::InvalidParameter("relation contains a cycle".into()));
        }
        Ok(Poset { m, gt })
    }

    pub fn antichain(m: usize) -> Poset {
        Poset::from_relations(m, []).expect("empty relation")
    }

    /// `1 > 2 > ... > m`.
    pub fn chain(m: usize) -> Poset {
        Poset::from_relations(m, (1..m).map(|i| (i, i + 1))).expect("chain")
    }

    /// Vertices `1..n` below edges `n+1..n+m` (edges in lex order); each
    /// edge lies above its two endpoints.
    pub fn incidence(g: &Graph) -> Poset {
        let n = g.n();
        let pairs = g
            .edges()
            .enumerate()
            .flat_map(|(e, (a, b))| [(n + e + 1, a), (n + e + 1, b)]);
        Poset::from_relations(n + g.m(), pairs).expect("incidence poset is acyclic")
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn greater(&self, a: usize, b: usize) -> bool {
        self.gt[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.gt[a][b] || self.gt[b][a]
    }

    /// All `(a, b)` with `a > b`, lex order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.m {
            for b in 1..=self.m {
                if self.gt[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether position vectors (`pos[e-1]` = rank of `e`, higher is
    /// greater) of some linear extensions realise exactly this order.
    pub fn realized_by(&self, exts: &[Vec<usize>]) -> bool {
        (1..=self.m).all(|a| {
            (1..=self.m).all(|b| {
                if a == b {
                    return true;
                }
                let all_above = exts.iter().all(|p| p[a - 1] > p[b - 1]);
                all_above == self.gt[a][b]
            })
        })
    }

    /// Linear extensions as rank vectors. Exponential; tiny posets only.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let m = self.m;
        let mut out = Vec::new();
        let mut pos = vec![0; m];
        // fill ranks 1..m bottom-up: the next element must have everything
        // below it already placed
        fn rec(rank: usize, m: usize, p: &Poset, pos: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rank > m {
                out.push(pos.clone());
                return;
            }
            for e in 1..=m {
                if pos[e - 1] == 0 && (1..=m).all(|b| !p.gt[e][b] || pos[b - 1] != 0) {
                    pos[e - 1] = rank;
                    rec(rank + 1, m, p, pos, out);
                    pos[e - 1] = 0;
                }
            }
        }
        rec(1, m, self, &mut pos, &mut out);
        out
    }

    /// Brute-force test of `dim ≤ t`.
    pub fn dimension_at_most(&self, t: usize) -> bool {
        if self.m <= 1 {
            return true;
        }
        let exts = self.linear_extensions();
        let mut pick = Vec::new();
        fn rec(start: usize, t: usize, exts: &[Vec<usize>], pick: &mut Vec<Vec<usize>>, p: &Poset) -> bool {
            if !pick.is_empty() && p.realized_by(pick) {
                return true;
            }
            if pick.len() == t {
                return false;
            }
            for i in start..exts.len() {
                pick.push(exts[i].clone());
                if rec(i, t, exts, pick, p) {
                    return true;
                }
                pick.pop();
            }
            false
        }
        rec(0, t, &exts, &mut pick, self)
    }
}
