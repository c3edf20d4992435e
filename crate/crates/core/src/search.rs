//! Search engines shared by the enumerators: cocycle-style maps determined
//! by their values on generators (homomorphisms, derivations, crossed
//! homomorphisms) and backtracking for relative Rota–Baxter maps.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, GroupAction};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

const UNSET: usize = usize::MAX;

/// A node cap shared by every worker of one search.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        let n = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.limit {
            Err(Error::SearchBudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// All maps `f: domain → codomain` with `f(x·y) = f(x)·twist(x, f(y))`,
/// where `twist(x, ·)` is an action of the domain on the codomain by
/// automorphisms (the identity for plain homomorphisms). `allowed(g, v)`
/// may veto the value `v` at a generator `g`. Results are sorted.
///
/// Such a map is fixed by its generator values; a candidate assignment is
/// accepted when the defining law holds on every edge `x → x·g` of the
/// Cayley graph, which implies it for all pairs.
pub fn enumerate_cocycles(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    twist: &(dyn Fn(usize, usize) -> usize + Sync),
    allowed: &(dyn Fn(usize, usize) -> bool + Sync),
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let gens = domain.generators().to_vec();
    let mut f = vec![UNSET; domain.order()];
    f[domain.identity()] = codomain.identity();
    let mut out = Vec::new();
    cocycle_rec(domain, codomain, twist, allowed, budget, &gens, 0, &f, &mut out)?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cocycle_rec(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    twist: &(dyn Fn(usize, usize) -> usize + Sync),
    allowed: &(dyn Fn(usize, usize) -> bool + Sync),
    budget: &Budget,
    gens: &[usize],
    level: usize,
    f: &[usize],
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if level == gens.len() {
        out.push(f.to_vec());
        return Ok(());
    }
    let g = gens[level];
    let active = &gens[..=level];
    for v in codomain.elements() {
        if f[g] != UNSET && f[g] != v {
            continue;
        }
        if !allowed(g, v) {
            continue;
        }
        budget.tick()?;
        let mut trial = f.to_vec();
        trial[g] = v;
        if close_span(domain, codomain, twist, active, &mut trial) {
            cocycle_rec(domain, codomain, twist, allowed, budget, gens, level + 1, &trial, out)?;
        }
        if f[g] != UNSET {
            // the value was forced by earlier generators
            break;
        }
    }
    Ok(())
}

/// Extends `f` over the span of `active` and checks every edge.
fn close_span(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    twist: &(dyn Fn(usize, usize) -> usize + Sync),
    active: &[usize],
    f: &mut [usize],
) -> bool {
    let mut queue: Vec<usize> = (0..f.len()).filter(|&x| f[x] != UNSET).collect();
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &g in active {
            if f[g] == UNSET {
                continue;
            }
            let y = domain.mul(x, g);
            let want = codomain.mul(f[x], twist(x, f[g]));
            if f[y] == UNSET {
                f[y] = want;
                queue.push(y);
            } else if f[y] != want {
                return false;
            }
        }
    }
    true
}

/// All homomorphisms `a → b` in lexicographic order of their tables; with
/// `bijective` only the isomorphisms.
pub fn enumerate_homomorphisms(a: &FiniteGroup, b: &FiniteGroup, bijective: bool, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    if bijective && a.order() != b.order() {
        return Ok(Vec::new());
    }
    let twist = |_: usize, y: usize| y;
    let allowed = |g: usize, v: usize| {
        let (og, ov) = (a.element_order(g), b.element_order(v));
        if bijective {
            og == ov
        } else {
            og % ov == 0
        }
    };
    let mut maps = enumerate_cocycles(a, b, &twist, &allowed, budget)?;
    if bijective {
        maps.retain(|m| crate::fingroup::is_bijection(m, b.order()));
    }
    Ok(maps)
}

/// All `B: H → G` with `B(h)·B(h') = B(h·φ(Bh)h')`, where `φ` is an action
/// of `G` on `H`. Sorted lexicographically.
///
/// Backtracking from the forced value `B(e) = e`: the smallest undecided
/// element is branched on, and every pair of decided elements forces the
/// value at `h·φ(Bh)h'`. The first branching level is split across the
/// rayon pool; nodes are counted against the shared budget.
pub fn enumerate_rrb(action: &GroupAction, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let s = RrbSearch { h: action.target(), g: action.actor(), act: action };
    let mut root = vec![UNSET; s.h.order()];
    let mut trail = Vec::new();
    if !s.assign(&mut root, &mut trail, s.h.identity(), s.g.identity()) {
        return Ok(Vec::new());
    }
    let Some(var) = root.iter().position(|&v| v == UNSET) else {
        return Ok(vec![root]);
    };
    let branches: Vec<Result<Vec<Vec<usize>>>> =
        s.g.elements()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|v| {
                budget.tick()?;
                let mut vals = root.clone();
                let mut trail = Vec::new();
                let mut out = Vec::new();
                if s.assign(&mut vals, &mut trail, var, v) {
                    s.dfs(&mut vals, &mut trail, budget, &mut out)?;
                }
                Ok(out)
            })
            .collect();
    let mut out = Vec::new();
    for b in branches {
        out.extend(b?);
    }
    out.sort();
    Ok(out)
}

struct RrbSearch<'a> {
    h: &'a FiniteGroup,
    g: &'a FiniteGroup,
    act: &'a GroupAction,
}

impl RrbSearch<'_> {
    /// Sets `vals[x] = v` and propagates; on conflict returns false with
    /// the partial assignments left on the trail for the caller to undo.
    fn assign(&self, vals: &mut [usize], trail: &mut Vec<usize>, x: usize, v: usize) -> bool {
        vals[x] = v;
        trail.push(x);
        let mut queue = vec![x];
        while let Some(x) = queue.pop() {
            for y in self.h.elements() {
                if vals[y] == UNSET {
                    continue;
                }
                for (a, b) in [(x, y), (y, x)] {
                    let t = self.h.mul(a, self.act.act(vals[a], b));
                    let want = self.g.mul(vals[a], vals[b]);
                    if vals[t] == UNSET {
                        vals[t] = want;
                        trail.push(t);
                        queue.push(t);
                    } else if vals[t] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&self, vals: &mut [usize], trail: &mut Vec<usize>, budget: &Budget, out: &mut Vec<Vec<usize>>) -> Result<()> {
        let Some(var) = vals.iter().position(|&v| v == UNSET) else {
            out.push(vals.to_vec());
            return Ok(());
        };
        for v in self.g.elements() {
            budget.tick()?;
            let mark = trail.len();
            if self.assign(vals, trail, var, v) {
                self.dfs(vals, trail, budget, out)?;
            }
            for x in trail.drain(mark..) {
                vals[x] = UNSET;
            }
        }
        Ok(())
    }
}
