//! Crossed homomorphisms (1-cocycles) on groups, 2-groups and crossed
//! modules, their graphs, the derived action and the formal inverse of a
//! bijective Rota–Baxter operator.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingroup::{check_len, invert_bijection, is_bijection, GroupAction};
use crate::rrb::{verify_rrb_two_group, verify_rrb_xmod, RrbTwoGroupOp, RrbXModOp, Semidirect};
use crate::search::{self, Budget};
use crate::twogroup::{check_groupoid_morphism, sub_two_group, validate_two_group_action, SubTwoGroup, TwoGroupAction};
use crate::xmod::XModAction;

/// Which structure a crossed homomorphism lives on. Always given
/// explicitly; table sizes alone are ambiguous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Group,
    TwoGroup,
    Xmod,
}

/// `D: G → H` with `D(g·g') = Dg·φ(g)Dg'`.
#[derive(Clone, Debug)]
pub struct CrossedHomGroup {
    map: Vec<usize>,
    action: Arc<GroupAction>,
}

impl CrossedHomGroup {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn action(&self) -> &Arc<GroupAction> {
        &self.action
    }
}

/// First failing pair in lexicographic order.
pub fn cocycle_failure(d: &[usize], action: &GroupAction) -> Option<Error> {
    let (g, h) = (action.actor(), action.target());
    if d[g.identity()] != h.identity() {
        let e = g.identity();
        return Some(Error::CocycleFailure { g: e, g2: e, lhs: d[e], rhs: h.mul(d[e], d[e]) });
    }
    let check = |x: usize| {
        let perm = action.perm(x);
        g.elements().find_map(|y| {
            let lhs = d[g.mul(x, y)];
            let rhs = h.mul(d[x], perm[d[y]]);
            (lhs != rhs).then_some(Error::CocycleFailure { g: x, g2: y, lhs, rhs })
        })
    };
    g.elements().collect::<Vec<_>>().into_par_iter().find_map_first(check)
}

pub fn verify_crossed_hom_group(d: Vec<usize>, action: &Arc<GroupAction>) -> Result<CrossedHomGroup> {
    check_len("D", &d, action.actor().order(), action.target().order())?;
    match cocycle_failure(&d, action) {
        Some(e) => Err(e),
        None => Ok(CrossedHomGroup { map: d, action: action.clone() }),
    }
}

/// `(D, D0): P ⇉ P0 → Q ⇉ Q0` relative to an action of `P` on `Q`.
#[derive(Clone, Debug)]
pub struct CrossedHom2Group {
    d: Vec<usize>,
    d0: Vec<usize>,
    action: Arc<TwoGroupAction>,
}

impl CrossedHom2Group {
    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn d0(&self) -> &[usize] {
        &self.d0
    }

    pub fn action(&self) -> &Arc<TwoGroupAction> {
        &self.action
    }
}

pub fn verify_crossed_hom_two_group(d: Vec<usize>, d0: Vec<usize>, action: &Arc<TwoGroupAction>) -> Result<CrossedHom2Group> {
    let (p, q) = (action.actor(), action.target());
    check_len("D", &d, p.arrows().order(), q.arrows().order())?;
    check_len("D0", &d0, p.objects().order(), q.objects().order())?;
    if let Some(e) = cocycle_failure(&d, action.phi()) {
        return Err(Error::component("D", e));
    }
    if let Some(e) = cocycle_failure(&d0, action.phi0()) {
        return Err(Error::component("D0", e));
    }
    check_groupoid_morphism(p, q, &d, &d0)?;
    Ok(CrossedHom2Group { d, d0, action: action.clone() })
}

/// `(D1, D0): (G1 → G0) → (H1 → H0)` relative to a crossed module action of
/// `G` on `H`.
#[derive(Clone, Debug)]
pub struct CrossedHomXMod {
    d1: Vec<usize>,
    d0: Vec<usize>,
    action: Arc<XModAction>,
}

impl CrossedHomXMod {
    pub fn d1(&self) -> &[usize] {
        &self.d1
    }

    pub fn d0(&self) -> &[usize] {
        &self.d0
    }

    pub fn action(&self) -> &Arc<XModAction> {
        &self.action
    }
}

/// `D1(g0 ▷ g1) = D0g0 ▷ (β1(g0)D1g1 · α(g0 ▷ g1)(D0g0)⁻¹)`, first failure
/// in `(g0, g1)` order.
pub fn mixed_failure(d1: &[usize], d0: &[usize], action: &XModAction) -> Option<Error> {
    let (g, h) = (action.actor(), action.target());
    g.g0().elements().find_map(|x| {
        let y = d0[x];
        let y_inv = h.g0().inv(y);
        g.g1().elements().find_map(|z| {
            let moved = g.act(x, z);
            let lhs = d1[moved];
            let rhs = h.act(y, h.g1().mul(action.beta1().act(x, d1[z]), action.alpha(moved, y_inv)));
            (lhs != rhs).then_some(Error::MixedFailure { g0: x, g1: z, lhs, rhs })
        })
    })
}

fn square_holds(d1: &[usize], d0: &[usize], action: &XModAction) -> Option<usize> {
    let (g, h) = (action.actor(), action.target());
    g.g1().elements().find(|&x| h.mu(d1[x]) != d0[g.mu(x)])
}

pub fn verify_crossed_hom_xmod(d1: Vec<usize>, d0: Vec<usize>, action: &Arc<XModAction>) -> Result<CrossedHomXMod> {
    let (g, h) = (action.actor(), action.target());
    check_len("D1", &d1, g.g1().order(), h.g1().order())?;
    check_len("D0", &d0, g.g0().order(), h.g0().order())?;
    if let Some(x) = square_holds(&d1, &d0, action) {
        return Err(Error::SquareFailure { detail: "∂∘D1 = D0∘μ".into(), witness: vec![x] });
    }
    if let Some(e) = cocycle_failure(&d1, &action.beta1_mu()) {
        return Err(Error::component("D1", e));
    }
    if let Some(e) = cocycle_failure(&d0, action.beta0()) {
        return Err(Error::component("D0", e));
    }
    if let Some(e) = mixed_failure(&d1, &d0, action) {
        return Err(e);
    }
    Ok(CrossedHomXMod { d1, d0, action: action.clone() })
}

/// `Gr(D) ⇉ Gr(D0) = {(Dp, p)}` inside `Q ⋊ P ⇉ Q0 ⋊ P0`, for raw maps.
/// Closure holds exactly when `(D, D0)` is a crossed homomorphism.
pub fn graph_closure(d: &[usize], d0: &[usize], sd: &Semidirect) -> Result<SubTwoGroup> {
    let p = sd.action.actor();
    let arrows: Vec<usize> = p.arrows().elements().map(|x| sd.arrow(d[x], x)).collect();
    let objects: Vec<usize> = p.objects().elements().map(|x| sd.object(d0[x], x)).collect();
    sub_two_group(&sd.group, &arrows, &objects)
}

pub fn graph_check(dh: &CrossedHom2Group) -> Result<SubTwoGroup> {
    let sd = Semidirect::new(dh.action())?;
    graph_closure(dh.d(), dh.d0(), &sd).map_err(|e| Error::invariant(&format!("graph of a crossed homomorphism: {e}"), vec![]))
}

/// `D̂(q,p) = (φ(p⁻¹)(q⁻¹·Dp), e)` on both levels.
pub fn hat_d_maps(d: &[usize], d0: &[usize], sd: &Semidirect) -> (Vec<usize>, Vec<usize>) {
    let act = &sd.action;
    let (p, q) = (act.actor(), act.target());
    let side = |d: &[usize], phi: &GroupAction, pg: &crate::fingroup::FiniteGroup, qg: &crate::fingroup::FiniteGroup| {
        let np = pg.order();
        (0..qg.order() * np)
            .map(|x| {
                let (a, b) = (x / np, x % np);
                phi.act(pg.inv(b), qg.mul(qg.inv(a), d[b])) * np + pg.identity()
            })
            .collect::<Vec<_>>()
    };
    (side(d, act.phi(), p.arrows(), q.arrows()), side(d0, act.phi0(), p.objects(), q.objects()))
}

pub fn hat_d(dh: &CrossedHom2Group) -> Result<RrbTwoGroupOp> {
    let sd = Semidirect::new(dh.action())?;
    let (hat, hat0) = hat_d_maps(dh.d(), dh.d0(), &sd);
    verify_rrb_two_group(hat, hat0, &sd.adjoint).map_err(|e| Error::invariant(&format!("D̂ is a Rota–Baxter operator: {e}"), vec![]))
}

/// `φ̃(p)q = Dp·φ(p)q·(Dp)⁻¹` with `D̃p = (Dp)⁻¹`.
pub fn derived_action(dh: &CrossedHom2Group) -> Result<(Arc<TwoGroupAction>, CrossedHom2Group)> {
    let act = dh.action();
    let (p, q) = (act.actor(), act.target());
    let side = |d: &[usize], phi: &GroupAction, pg: &crate::fingroup::FiniteGroup, qg: &crate::fingroup::FiniteGroup| {
        pg.elements()
            .map(|x| qg.elements().map(|y| qg.mul(qg.mul(d[x], phi.act(x, y)), qg.inv(d[x]))).collect())
            .collect::<Vec<Vec<usize>>>()
    };
    let lemma = |e: Error| Error::invariant(&format!("derived action: {e}"), vec![]);
    let tilde = validate_two_group_action(
        p,
        q,
        side(dh.d(), act.phi(), p.arrows(), q.arrows()),
        side(dh.d0(), act.phi0(), p.objects(), q.objects()),
    )
    .map_err(lemma)?;
    let tilde = Arc::new(tilde);
    let inv = |d: &[usize], g: &crate::fingroup::FiniteGroup| d.iter().map(|&x| g.inv(x)).collect::<Vec<_>>();
    let d = verify_crossed_hom_two_group(inv(dh.d(), q.arrows()), inv(dh.d0(), q.objects()), &tilde).map_err(lemma)?;
    Ok((tilde, d))
}

fn inverse_of(map: &[usize], size: usize, which: &str) -> Result<Vec<usize>> {
    if map.len() != size || !is_bijection(map, size) {
        return Err(Error::NotBijective { which: which.into() });
    }
    Ok(invert_bijection(map))
}

/// `(D1, D0) = (B1⁻¹, B0⁻¹)` for a bijective operator.
pub fn rrb_to_crossed_hom_xmod(op: &RrbXModOp) -> Result<CrossedHomXMod> {
    let g = op.action().actor();
    let d1 = inverse_of(op.b1(), g.g1().order(), "B1")?;
    let d0 = inverse_of(op.b0(), g.g0().order(), "B0")?;
    verify_crossed_hom_xmod(d1, d0, op.action())
}

/// `(B1, B0) = (D1⁻¹, D0⁻¹)` for a bijective crossed homomorphism.
pub fn crossed_hom_to_rrb_xmod(dh: &CrossedHomXMod) -> Result<RrbXModOp> {
    let h = dh.action().target();
    let b1 = inverse_of(dh.d1(), h.g1().order(), "D1")?;
    let b0 = inverse_of(dh.d0(), h.g0().order(), "D0")?;
    verify_rrb_xmod(b1, b0, dh.action())
}

/// The same inversion one level up; checked, not assumed.
pub fn rrb_to_crossed_hom_two_group(op: &RrbTwoGroupOp) -> Result<CrossedHom2Group> {
    let p = op.action().actor();
    let d = inverse_of(op.b(), p.arrows().order(), "B")?;
    let d0 = inverse_of(op.b0(), p.objects().order(), "B0")?;
    verify_crossed_hom_two_group(d, d0, op.action())
}

pub fn crossed_hom_to_rrb_two_group(dh: &CrossedHom2Group) -> Result<RrbTwoGroupOp> {
    let q = dh.action().target();
    let b = inverse_of(dh.d(), q.arrows().order(), "D")?;
    let b0 = inverse_of(dh.d0(), q.objects().order(), "D0")?;
    verify_rrb_two_group(b, b0, dh.action())
}

pub fn enumerate_crossed_homs_group(action: &GroupAction, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    search::enumerate_cocycles(action.actor(), action.target(), &|x, y| action.act(x, y), &|_, _| true, budget)
}

/// Component-wise enumeration filtered by the groupoid-morphism condition.
pub fn enumerate_crossed_homs_two_group(action: &TwoGroupAction, budget: &Budget) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let ds = enumerate_crossed_homs_group(action.phi(), budget)?;
    let d0s = enumerate_crossed_homs_group(action.phi0(), budget)?;
    let (p, q) = (action.actor(), action.target());
    Ok(ds
        .par_iter()
        .flat_map_iter(|d| d0s.iter().filter(move |d0| check_groupoid_morphism(p, q, d, d0).is_ok()).map(move |d0| (d.clone(), d0.clone())))
        .collect())
}

/// Component-wise enumeration filtered by the square and the mixed identity.
pub fn enumerate_crossed_homs_xmod(action: &XModAction, budget: &Budget) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let d1s = enumerate_crossed_homs_group(&action.beta1_mu(), budget)?;
    let d0s = enumerate_crossed_homs_group(action.beta0(), budget)?;
    Ok(d1s
        .par_iter()
        .flat_map_iter(|d1| {
            d0s.iter()
                .filter(move |d0| square_holds(d1, d0, action).is_none() && mixed_failure(d1, d0, action).is_none())
                .map(move |d0| (d1.clone(), d0.clone()))
        })
        .collect())
}
