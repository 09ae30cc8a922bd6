//! Sparse exact Gaussian elimination with Markowitz pivoting.
//!
//! The pivot is the nonzero minimising `(r−1)(c−1)` (current row and column
//! counts), ties broken by smallest row and then smallest column. Columns
//! never pivoted are free and set to zero.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num_traits::Zero;

use super::linsys::LinearSystem;
use crate::algebra::Rational;

type Row = Vec<(usize, Rational)>;

fn find(row: &Row, c: usize) -> Option<&Rational> {
    row.binary_search_by_key(&c, |e| e.0).ok().map(|k| &row[k].1)
}

/// `a − f·b` over sorted sparse rows, skipping column `skip`.
fn axpy(a: &Row, f: &Rational, b: &Row, skip: usize) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ca < cb {
            i += 1;
            (ca, a[i - 1].1.clone())
        } else if cb < ca {
            j += 1;
            (cb, -(f * &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ca, &a[i - 1].1 - f * &b[j - 1].1)
        };
        if c != skip && !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Some solution of `ls`, or `None` if inconsistent.
pub fn solve_exact(ls: &LinearSystem) -> Option<Vec<Rational>> {
    let (nr, nc) = (ls.num_rows(), ls.num_cols());
    let mut rows: Vec<Row> = vec![Vec::new(); nr];
    let mut colpat: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nc];
    for (c, col) in ls.entries.iter().enumerate() {
        for (r, v) in col {
            rows[*r].push((c, v.clone()));
            colpat[c].insert(*r);
        }
    }
    let mut rhs: Vec<Rational> = vec![Rational::zero(); nr];
    for (&r, v) in &ls.rhs {
        rhs[r] = v.clone();
    }
    let mut row_done = vec![false; nr];
    let key = |rows: &[Row], colpat: &[BTreeSet<usize>], r: usize, c: usize| -> u64 {
        ((rows[r].len() - 1) * (colpat[c].len() - 1)) as u64
    };
    let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    for r in 0..nr {
        for &(c, _) in &rows[r] {
            heap.push(Reverse((key(&rows, &colpat, r, c), r, c)));
        }
    }
    let mut pivots: Vec<(usize, Row, Rational)> = Vec::new();

    while let Some(Reverse((p, r, c))) = heap.pop() {
        if row_done[r] || !colpat[c].contains(&r) || key(&rows, &colpat, r, c) != p {
            continue;
        }
        let prow = std::mem::take(&mut rows[r]);
        let prhs = std::mem::take(&mut rhs[r]);
        row_done[r] = true;
        let a = find(&prow, c).expect("pivot entry").clone();
        for &(c2, _) in &prow {
            colpat[c2].remove(&r);
        }
        let targets: Vec<usize> = std::mem::take(&mut colpat[c]).into_iter().collect();
        for &r2 in &targets {
            let f = find(&rows[r2], c).expect("column pattern").clone() / &a;
            let new = axpy(&rows[r2], &f, &prow, c);
            for &(c2, _) in &rows[r2] {
                if c2 != c && find(&new, c2).is_none() {
                    colpat[c2].remove(&r2);
                }
            }
            for &(c2, _) in &new {
                colpat[c2].insert(r2);
            }
            rows[r2] = new;
            if !prhs.is_zero() {
                rhs[r2] -= &f * &prhs;
            }
            if rows[r2].is_empty() {
                if !rhs[r2].is_zero() {
                    return None;
                }
                row_done[r2] = true;
            }
        }
        for &r2 in &targets {
            for &(c2, _) in &rows[r2] {
                heap.push(Reverse((key(&rows, &colpat, r2, c2), r2, c2)));
            }
        }
        for &(c2, _) in &prow {
            if c2 == c {
                continue;
            }
            for &r2 in &colpat[c2] {
                heap.push(Reverse((key(&rows, &colpat, r2, c2), r2, c2)));
            }
        }
        pivots.push((c, prow, prhs / a));
    }
    if (0..nr).any(|r| !row_done[r] && rows[r].is_empty() && !rhs[r].is_zero()) {
        return None;
    }

    let mut x = vec![Rational::zero(); nc];
    for (c, prow, scaled_rhs) in pivots.into_iter().rev() {
        let a = find(&prow, c).expect("pivot entry").clone();
        let mut v = scaled_rhs * &a;
        for (c2, coef) in &prow {
            if *c2 != c && !x[*c2].is_zero() {
                v -= coef * &x[*c2];
            }
        }
        x[c] = v / a;
    }
    Some(x)
}
