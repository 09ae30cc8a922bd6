use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::compile::{CGen, Ctx};
use super::{OracleConfig, OracleResult};
use crate::error::Error;

enum Check {
    Gen(usize),
    /// A single witness factor whose slots are all assigned early; it must
    /// not vanish.
    Factor(usize, usize),
}

struct Plan {
    order: Vec<usize>,
    /// `checks[d]` runs once the first `d` variables of `order` are set.
    checks: Vec<Vec<Check>>,
}

/// Static variable order: repeatedly take the variable that completes the
/// most constraints, then the most used one, then the smallest.
fn plan(ctx: &Ctx) -> Plan {
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for g in &ctx.gens {
        sets.push(g.outer.clone());
        if g.witness {
            for f in &g.factors {
                if f.private.is_empty() && f.poly.slots.len() > 1 {
                    sets.push(f.poly.slots.clone());
                }
            }
        }
    }
    let outer: BTreeSet<usize> = ctx.gens.iter().flat_map(|g| g.outer.iter().copied()).collect();
    let mut member: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, s) in sets.iter().enumerate() {
        for &v in s {
            member.entry(v).or_default().push(k);
        }
    }
    let mut remaining: Vec<usize> = sets.iter().map(|s| s.len()).collect();
    let mut assigned = BTreeSet::new();
    let mut order = Vec::new();
    while order.len() < outer.len() {
        let best = outer
            .iter()
            .copied()
            .filter(|v| !assigned.contains(v))
            .max_by_key(|v| {
                let ms = &member[v];
                let completes = ms.iter().filter(|&&k| remaining[k] == 1).count();
                (completes, ms.len(), std::cmp::Reverse(*v))
            })
            .expect("unassigned variable");
        assigned.insert(best);
        for &k in &member[&best] {
            remaining[k] -= 1;
        }
        order.push(best);
    }
    let mut pos = vec![usize::MAX; ctx.slots.len()];
    for (d, &s) in order.iter().enumerate() {
        pos[s] = d + 1;
    }
    let depth = |slots: &[usize]| slots.iter().map(|&s| pos[s]).max().unwrap_or(0);
    let mut checks: Vec<Vec<Check>> = (0..=order.len()).map(|_| Vec::new()).collect();
    let mut gen_at: Vec<Vec<usize>> = (0..=order.len()).map(|_| Vec::new()).collect();
    for (gi, g) in ctx.gens.iter().enumerate() {
        let d = depth(&g.outer);
        gen_at[d].push(gi);
        if g.witness {
            for (fi, f) in g.factors.iter().enumerate() {
                if f.private.is_empty() {
                    let fd = depth(&f.poly.slots);
                    if fd < d {
                        checks[fd].push(Check::Factor(gi, fi));
                    }
                }
            }
        }
    }
    for (d, mut gs) in gen_at.into_iter().enumerate() {
        gs.sort_by_key(|&gi| (ctx.gens[gi].outer.len() + ctx.gens[gi].private.len(), gi));
        checks[d].extend(gs.into_iter().map(Check::Gen));
    }
    Plan { order, checks }
}

fn odometer(ctx: &Ctx, slots: &[usize], idx: &mut [usize]) -> bool {
    for &s in slots.iter().rev() {
        idx[s] += 1;
        if idx[s] < ctx.slots[s].values.len() {
            return true;
        }
        idx[s] = 0;
    }
    false
}

/// Number of private assignments completing `g` (any positive value when
/// not counting).
fn solve_gen(ctx: &Ctx, g: &CGen, idx: &mut [usize], count: bool) -> u128 {
    if g.private.is_empty() {
        return u128::from(ctx.gen_holds(g, idx));
    }
    for &s in &g.private {
        idx[s] = 0;
    }
    if g.disjoint_private {
        let size = |slots: &[usize]| slots.iter().map(|&s| ctx.slots[s].values.len() as u128).product::<u128>();
        let nonzero = |f: &super::compile::CFactor, idx: &mut [usize]| -> u128 {
            let mut nz = 0;
            loop {
                if !ctx.is_zero(&f.poly, idx) {
                    nz += 1;
                }
                if !odometer(ctx, &f.private, idx) {
                    return nz;
                }
            }
        };
        let fixed_zero = g
            .factors
            .iter()
            .filter(|f| f.private.is_empty())
            .map(|f| ctx.is_zero(&f.poly, idx))
            .collect::<Vec<_>>();
        if !g.witness {
            let total = size(&g.private);
            if fixed_zero.iter().any(|&z| z) {
                return total;
            }
            let mut prod_nz = 1u128;
            for f in g.factors.iter().filter(|f| !f.private.is_empty()) {
                let nz = nonzero(f, idx);
                if !count && nz < size(&f.private) {
                    return 1;
                }
                prod_nz *= nz;
            }
            total - prod_nz
        } else {
            if fixed_zero.iter().any(|&z| z) {
                return 0;
            }
            let mut prod_nz = 1u128;
            for f in g.factors.iter().filter(|f| !f.private.is_empty()) {
                let nz = nonzero(f, idx);
                if nz == 0 {
                    return 0;
                }
                prod_nz *= nz;
            }
            prod_nz
        }
    } else {
        let mut ok = 0u128;
        loop {
            if ctx.gen_holds(g, idx) {
                ok += 1;
                if !count {
                    return 1;
                }
            }
            if !odometer(ctx, &g.private, idx) {
                return ok;
            }
        }
    }
}

/// Sets `g`'s private slots to the first completing assignment.
fn pick_private(ctx: &Ctx, g: &CGen, idx: &mut [usize]) -> bool {
    for &s in &g.private {
        idx[s] = 0;
    }
    loop {
        if ctx.gen_holds(g, idx) {
            return true;
        }
        if !odometer(ctx, &g.private, idx) {
            return false;
        }
    }
}

struct Shared<'a> {
    ctx: &'a Ctx,
    plan: &'a Plan,
    count: bool,
    budget: u64,
    nodes: AtomicU64,
    /// Lowest branch that found a solution (feasibility mode).
    best: AtomicUsize,
    flush: u64,
}

struct Branch {
    id: usize,
    count: u128,
    witness: Option<Vec<usize>>,
    local_nodes: u64,
}

const FLUSH: u64 = 1 << 12;

impl Shared<'_> {
    /// Runs the checks scheduled at `depth`; `None` if one fails, else the
    /// multiplier from private variables.
    fn checks(&self, depth: usize, idx: &mut [usize]) -> Option<u128> {
        let mut mult = 1u128;
        for c in &self.plan.checks[depth] {
            match *c {
                Check::Factor(g, f) => {
                    if self.ctx.is_zero(&self.ctx.gens[g].factors[f].poly, idx) {
                        return None;
                    }
                }
                Check::Gen(g) => {
                    let n = solve_gen(self.ctx, &self.ctx.gens[g], idx, self.count);
                    if n == 0 {
                        return None;
                    }
                    if self.count {
                        mult = mult.checked_mul(n).expect("solution count overflow");
                    }
                }
            }
        }
        Some(mult)
    }

    fn tick(&self, b: &mut Branch) -> Result<(), Error> {
        b.local_nodes += 1;
        if b.local_nodes % self.flush == 0 {
            let total = self.nodes.fetch_add(self.flush, Ordering::Relaxed) + self.flush;
            if total > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
        }
        Ok(())
    }

    /// Returns `true` to stop the whole search.
    fn rec(&self, depth: usize, idx: &mut [usize], mult: u128, b: &mut Branch) -> Result<bool, Error> {
        let order = &self.plan.order;
        if depth == order.len() {
            b.count = b.count.checked_add(mult).expect("solution count overflow");
            if !self.count {
                b.witness = Some(idx.to_vec());
                self.best.fetch_min(b.id, Ordering::Relaxed);
                return Ok(true);
            }
            return Ok(false);
        }
        let s = order[depth];
        for v in 0..self.ctx.slots[s].values.len() {
            self.tick(b)?;
            if !self.count && self.best.load(Ordering::Relaxed) < b.id {
                return Ok(true);
            }
            idx[s] = v;
            if let Some(m) = self.checks(depth + 1, idx) {
                let m = if self.count { mult.checked_mul(m).expect("solution count overflow") } else { 1 };
                if self.rec(depth + 1, idx, m, b)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn branch(&self, id: usize, base: &[usize], mult: u128) -> Result<Branch, Error> {
        let mut b = Branch { id, count: 0, witness: None, local_nodes: 0 };
        let mut idx = base.to_vec();
        let s = self.plan.order[0];
        idx[s] = id;
        self.tick(&mut b)?;
        if let Some(m) = self.checks(1, &mut idx) {
            let m = if self.count { mult * m } else { 1 };
            self.rec(1, &mut idx, m, &mut b)?;
        }
        Ok(b)
    }
}

pub(super) fn run(ctx: &Ctx, config: &OracleConfig) -> Result<OracleResult, Error> {
    let none = |nodes| OracleResult {
        feasible: false,
        witness: None,
        count: config.count.then(|| BigUint::from(0u32)),
        nodes,
    };
    if ctx.trivially_infeasible {
        return Ok(none(0));
    }
    let plan = plan(ctx);
    let mut idx = vec![0usize; ctx.slots.len()];
    let shared = Shared {
        ctx,
        plan: &plan,
        count: config.count,
        budget: config.budget,
        nodes: AtomicU64::new(0),
        best: AtomicUsize::new(usize::MAX),
        flush: FLUSH.min(config.budget.max(1)),
    };
    let Some(root) = shared.checks(0, &mut idx) else {
        return Ok(none(0));
    };
    let free: u128 = ctx.free.iter().map(|&s| ctx.slots[s].values.len() as u128).product();

    let (count, witness, nodes) = if plan.order.is_empty() {
        (root, Some(idx.clone()), 0)
    } else {
        let width = ctx.slots[plan.order[0]].values.len();
        let branches: Vec<Result<Branch, Error>> = if config.parallel {
            (0..width).into_par_iter().map(|v| shared.branch(v, &idx, root)).collect()
        } else {
            let mut out = Vec::new();
            for v in 0..width {
                let b = shared.branch(v, &idx, root);
                let stop = matches!(&b, Ok(b) if b.witness.is_some()) || b.is_err();
                out.push(b);
                if stop && !config.count {
                    break;
                }
            }
            out
        };
        let mut count = 0u128;
        let mut witness = None;
        let mut nodes = 0;
        for b in branches {
            let b = b?;
            count += b.count;
            nodes += b.local_nodes;
            if witness.is_none() {
                witness = b.witness;
            }
        }
        (count, witness, nodes)
    };
    let count = count.checked_mul(free).expect("solution count overflow");

    let feasible = if config.count { count > 0 } else { witness.is_some() };
    let witness = if feasible {
        let mut idx = match witness {
            Some(w) => w,
            None => first_solution(ctx, config)?,
        };
        for &s in &ctx.free {
            idx[s] = 0;
        }
        for g in &ctx.gens {
            if !g.private.is_empty() {
                let ok = pick_private(ctx, g, &mut idx);
                debug_assert!(ok, "private variables must be completable");
            }
        }
        Some(
            ctx.slots
                .iter()
                .enumerate()
                .map(|(s, slot)| (slot.var, slot.labels[idx[s]]))
                .collect(),
        )
    } else {
        None
    };
    Ok(OracleResult {
        feasible,
        witness,
        count: config.count.then(|| BigUint::from(count)),
        nodes,
    })
}

/// In counting mode the leaves are not recorded; a second, stopping search
/// recovers a witness.
fn first_solution(ctx: &Ctx, config: &OracleConfig) -> Result<Vec<usize>, Error> {
    let cfg = OracleConfig { count: false, ..config.clone() };
    let plan = plan(ctx);
    let shared = Shared {
        ctx,
        plan: &plan,
        count: false,
        budget: cfg.budget,
        nodes: AtomicU64::new(0),
        best: AtomicUsize::new(usize::MAX),
        flush: FLUSH.min(config.budget.max(1)),
    };
    let mut idx = vec![0usize; ctx.slots.len()];
    shared.checks(0, &mut idx).expect("root checks passed before");
    if plan.order.is_empty() {
        return Ok(idx);
    }
    for v in 0..ctx.slots[plan.order[0]].values.len() {
        let b = shared.branch(v, &idx, 1)?;
        if let Some(w) = b.witness {
            return Ok(w);
        }
    }
    unreachable!("count was positive")
}
