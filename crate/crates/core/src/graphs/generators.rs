use super::Graph;
use crate::error::Error;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid edge")
}

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

pub fn complete(n: usize) -> Graph {
    build(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i, i + 1)))
}

/// `C_n` on `1..n` in cyclic order. Requires `n ≥ 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    build(n, (1..=n).map(|i| (i, i % n + 1)))
}

/// `K_{1,n}` with centre 1.
pub fn star(n: usize) -> Graph {
    build(n + 1, (2..=n + 1).map(|j| (1, j)))
}

/// Outer 5-cycle `1..5`, inner pentagram on `6..10`, spokes
/// `{1,6} {2,8} {3,10} {4,7} {5,9}`.
pub fn petersen() -> Graph {
    build(
        10,
        [
            (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
            (1, 6), (2, 8), (3, 10), (4, 7), (5, 9),
            (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
        ],
    )
}

/// Odd wheel: rim cycle `1..n` plus a hub at `n+1` joined to every rim vertex.
pub fn odd_wheel(n: usize) -> Result<Graph, Error> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("odd wheel needs odd rim length ≥ 3, got {n}")));
    }
    let mut g = Graph::new(n + 1);
    for (a, b) in cycle(n).edges() {
        g.add_edge(a, b)?;
    }
    for v in 1..=n {
        g.add_edge(v, n + 1)?;
    }
    Ok(g)
}

/// Turán graph `T(n, r)`: complete `r`-partite with near-equal consecutive
/// parts, larger parts first.
pub fn turan(n: usize, r: usize) -> Result<Graph, Error> {
    if r == 0 || r > n {
        return Err(Error::InvalidParameter(format!("Turán graph needs 1 ≤ r ≤ n, got n={n}, r={r}")));
    }
    let mut part = vec![0; n + 1];
    let (q, extra) = (n / r, n % r);
    let mut v = 1;
    for p in 0..r {
        let size = q + usize::from(p < extra);
        for _ in 0..size {
            part[v] = p;
            v += 1;
        }
    }
    Ok(build(
        n,
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).filter(|&(i, j)| part[i] != part[j]),
    ))
}

/// Kneser graph `K(m, k)`: `k`-subsets of `{1..m}` in lex order, adjacent
/// iff disjoint.
pub fn kneser(m: usize, k: usize) -> Result<Graph, Error> {
    if k == 0 || k > m || m > 64 {
        return Err(Error::InvalidParameter(format!("Kneser graph needs 1 ≤ k ≤ m ≤ 64, got ({m},{k})")));
    }
    let mut subsets: Vec<u64> = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        subsets.push(cur.iter().fold(0u64, |acc, &i| acc | 1 << i));
        let mut i = k;
        while i > 0 && cur[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for t in i..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
    let n = subsets.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if subsets[a] & subsets[b] == 0 {
                edges.push((a + 1, b + 1));
            }
        }
    }
    Ok(build(n, edges))
}

/// `t` disjoint triangles `{3s+1, 3s+2, 3s+3}`.
pub fn disjoint_triangles(t: usize) -> Graph {
    build(
        3 * t,
        (0..t).flat_map(|s| {
            let b = 3 * s;
            [(b + 1, b + 2), (b + 2, b + 3), (b + 1, b + 3)]
        }),
    )
}

/// Resolves a family name such as `petersen`, `k4`, `c6`, `p3`, `w5`, `s3`,
/// `e2`, `complete:4`, `cycle:6`, `path:3`, `wheel:5`, `star:3`, `empty:2`,
/// `turan:5:3`, `kneser:5:2` or `triangles:2`.
pub fn named(spec: &str) -> Result<Graph, Error> {
    let s = spec.trim().to_ascii_lowercase();
    let bad = || Error::InvalidParameter(format!("unknown graph `{spec}`"));
    let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
    if s == "petersen" {
        return Ok(petersen());
    }
    let parts: Vec<&str> = s.split(':').collect();
    let (name, args): (&str, Vec<usize>) = if parts.len() > 1 {
        (parts[0], parts[1..].iter().map(|t| num(t)).collect::<Result<_, _>>()?)
    } else {
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        (&s[..split], vec![num(&s[split..])?])
    };
    let one = || if args.len() == 1 { Ok(args[0]) } else { Err(bad()) };
    match name {
        "k" | "complete" => Ok(complete(one()?)),
        "c" | "cycle" => {
            let n = one()?;
            if n < 3 {
                return Err(Error::InvalidParameter("cycle needs n ≥ 3".into()));
            }
            Ok(cycle(n))
        }
        "p" | "path" => Ok(path(one()?)),
        "w" | "wheel" => odd_wheel(one()?),
        "s" | "star" => Ok(star(one()?)),
        "e" | "empty" => Ok(empty(one()?)),
        "triangles" => Ok(disjoint_triangles(one()?)),
        "turan" if args.len() == 2 => turan(args[0], args[1]),
        "kneser" if args.len() == 2 => kneser(args[0], args[1]),
        _ => Err(bad()),
    }
}
