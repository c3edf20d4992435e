//! Relative Rota–Baxter operators on groups, strict 2-groups and crossed
//! modules: verification and enumeration. Derived constructions live in the
//! submodules.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fingroup::{check_len, GroupAction};
use crate::search::{self, Budget};
use crate::twogroup::{check_groupoid_morphism, TwoGroupAction};
use crate::xmod::XModAction;

pub mod cayley;
pub mod construct;
pub mod correspondence;

pub use cayley::{cayley_factorization, CayleyFactorization};
pub use construct::*;
pub use correspondence::*;

/// `B: H → G` with `B(h)·B(h') = B(h·φ(Bh)h')` for an action `φ` of `G`
/// on `H`.
#[derive(Clone, Debug)]
pub struct RrbGroupOp {
    map: Vec<usize>,
    action: Arc<GroupAction>,
}

impl RrbGroupOp {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn action(&self) -> &Arc<GroupAction> {
        &self.action
    }

    #[inline]
    pub fn apply(&self, h: usize) -> usize {
        self.map[h]
    }
}

/// The first pair `(h, h')` in lexicographic order violating the operator
/// identity, if any.
pub fn rrb_group_failure(map: &[usize], action: &GroupAction) -> Option<Error> {
    let (h, g) = (action.target(), action.actor());
    let e = h.identity();
    if map[e] != g.identity() {
        // B(e)·B(e) = B(e) forces B(e) = e
        return Some(Error::RrbFailure { h: e, h2: e, lhs: g.mul(map[e], map[e]), rhs: map[e] });
    }
    let check = |a: usize| {
        let ba = map[a];
        let perm = action.perm(ba);
        h.elements().find_map(|b| {
            let lhs = g.mul(ba, map[b]);
            let rhs = map[h.mul(a, perm[b])];
            (lhs != rhs).then_some(Error::RrbFailure { h: a, h2: b, lhs, rhs })
        })
    };
    if h.order() < 64 {
        h.elements().find_map(check)
    } else {
        h.elements().collect::<Vec<_>>().into_par_iter().find_map_first(check)
    }
}

pub fn verify_rrb_group(map: Vec<usize>, action: &Arc<GroupAction>) -> Result<RrbGroupOp> {
    check_len("B", &map, action.target().order(), action.actor().order())?;
    match rrb_group_failure(&map, action) {
        Some(e) => Err(e),
        None => Ok(RrbGroupOp { map, action: action.clone() }),
    }
}

/// `(B, B0)` on `P ⇉ P0` relative to an action on `Q ⇉ Q0`: each component
/// is a relative Rota–Baxter operator and the pair is a groupoid morphism
/// `Q ⇉ Q0 → P ⇉ P0`.
#[derive(Clone, Debug)]
pub struct RrbTwoGroupOp {
    b: Vec<usize>,
    b0: Vec<usize>,
    action: Arc<TwoGroupAction>,
}

impl RrbTwoGroupOp {
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn b0(&self) -> &[usize] {
        &self.b0
    }

    pub fn action(&self) -> &Arc<TwoGroupAction> {
        &self.action
    }
}

pub fn verify_rrb_two_group(b: Vec<usize>, b0: Vec<usize>, action: &Arc<TwoGroupAction>) -> Result<RrbTwoGroupOp> {
    let (p, q) = (action.actor(), action.target());
    check_len("B", &b, q.arrows().order(), p.arrows().order())?;
    check_len("B0", &b0, q.objects().order(), p.objects().order())?;
    if let Some(e) = rrb_group_failure(&b, action.phi()) {
        return Err(Error::component("B", e));
    }
    if let Some(e) = rrb_group_failure(&b0, action.phi0()) {
        return Err(Error::component("B0", e));
    }
    check_groupoid_morphism(q, p, &b, &b0)?;
    Ok(RrbTwoGroupOp { b, b0, action: action.clone() })
}

/// `(B1, B0)` on `G1 → G0` relative to a crossed module action on
/// `H1 → H0`.
#[derive(Clone, Debug)]
pub struct RrbXModOp {
    b1: Vec<usize>,
    b0: Vec<usize>,
    action: Arc<XModAction>,
    beta1_mu: Arc<GroupAction>,
}

impl RrbXModOp {
    pub fn b1(&self) -> &[usize] {
        &self.b1
    }

    pub fn b0(&self) -> &[usize] {
        &self.b0
    }

    pub fn action(&self) -> &Arc<XModAction> {
        &self.action
    }

    /// `β1∘μ`, the action `B1` is relative to.
    pub fn beta1_mu(&self) -> &Arc<GroupAction> {
        &self.beta1_mu
    }
}

/// `B0h0 ▷ B1h1 = B1(h0 ▷ (β1(B0h0)h1 · α(B0h0 ▷ B1h1)h0⁻¹))`, first failure
/// in `(h0, h1)` order.
pub fn mixed_identity_failure(b1: &[usize], b0: &[usize], action: &XModAction) -> Option<Error> {
    let (g, h) = (action.actor(), action.target());
    h.g0().elements().find_map(|h0| {
        let x = b0[h0];
        let h0_inv = h.g0().inv(h0);
        h.g1().elements().find_map(|h1| {
            let lhs = g.act(x, b1[h1]);
            let inner = h.g1().mul(action.beta1().act(x, h1), action.alpha(lhs, h0_inv));
            let rhs = b1[h.act(h0, inner)];
            (lhs != rhs).then_some(Error::MixedIdentityFailure { h0, h1, lhs, rhs })
        })
    })
}

pub fn verify_rrb_xmod(b1: Vec<usize>, b0: Vec<usize>, action: &Arc<XModAction>) -> Result<RrbXModOp> {
    let (g, h) = (action.actor(), action.target());
    check_len("B1", &b1, h.g1().order(), g.g1().order())?;
    check_len("B0", &b0, h.g0().order(), g.g0().order())?;
    if let Some(x) = h.g1().elements().find(|&x| g.mu(b1[x]) != b0[h.mu(x)]) {
        return Err(Error::SquareFailure { detail: "μ∘B1 = B0∘∂".into(), witness: vec![x] });
    }
    let beta1_mu = Arc::new(action.beta1_mu());
    if let Some(e) = rrb_group_failure(&b1, &beta1_mu) {
        return Err(Error::component("B1", e));
    }
    if let Some(e) = rrb_group_failure(&b0, action.beta0()) {
        return Err(Error::component("B0", e));
    }
    if let Some(e) = mixed_identity_failure(&b1, &b0, action) {
        return Err(e);
    }
    Ok(RrbXModOp { b1, b0, action: action.clone(), beta1_mu })
}

pub fn enumerate_rrb_group(action: &GroupAction, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    search::enumerate_rrb(action, budget)
}

/// Component-wise enumeration filtered by the groupoid-morphism condition;
/// sorted by `(B, B0)`.
pub fn enumerate_rrb_two_group(action: &TwoGroupAction, budget: &Budget) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let bs = search::enumerate_rrb(action.phi(), budget)?;
    let b0s = search::enumerate_rrb(action.phi0(), budget)?;
    let (p, q) = (action.actor(), action.target());
    let out: Vec<(Vec<usize>, Vec<usize>)> = bs
        .par_iter()
        .flat_map_iter(|b| b0s.iter().filter(move |b0| check_groupoid_morphism(q, p, b, b0).is_ok()).map(move |b0| (b.clone(), b0.clone())))
        .collect();
    Ok(out)
}

/// Component-wise enumeration filtered by the square and the mixed
/// identity; sorted by `(B1, B0)`.
pub fn enumerate_rrb_xmod(action: &XModAction, budget: &Budget) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let b1s = search::enumerate_rrb(&action.beta1_mu(), budget)?;
    let b0s = search::enumerate_rrb(action.beta0(), budget)?;
    let (g, h) = (action.actor(), action.target());
    let out: Vec<(Vec<usize>, Vec<usize>)> = b1s
        .par_iter()
        .flat_map_iter(|b1| {
            b0s.iter()
                .filter(move |b0| h.g1().elements().all(|x| g.mu(b1[x]) == b0[h.mu(x)]) && mixed_identity_failure(b1, b0, action).is_none())
                .map(move |b0| (b1.clone(), b0.clone()))
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::FiniteGroup;
    use crate::twogroup::TwoGroup;
    use crate::xmod::CrossedModule;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3))
    }

    #[test]
    fn const_e_and_inverse_are_rota_baxter() {
        let g = s3();
        let ad = Arc::new(GroupAction::adjoint(&g));
        verify_rrb_group(vec![0; 6], &ad).unwrap();
        verify_rrb_group(g.elements().map(|x| g.inv(x)).collect(), &ad).unwrap();
    }

    #[test]
    fn identity_is_not_rota_baxter_on_s3() {
        let g = s3();
        let ad = Arc::new(GroupAction::adjoint(&g));
        let err = verify_rrb_group(g.elements().collect(), &ad).unwrap_err();
        assert!(matches!(err, Error::RrbFailure { .. }));
    }

    #[test]
    fn z2_operators_are_endomorphisms() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let ad = GroupAction::adjoint(&z2);
        assert_eq!(enumerate_rrb_group(&ad, &Budget::default()).unwrap(), vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn two_group_level_components() {
        let p = Arc::new(TwoGroup::discrete(&s3()));
        let ad = Arc::new(TwoGroupAction::adjoint(&p));
        let inv: Vec<usize> = p.arrows().elements().map(|x| p.arrows().inv(x)).collect();
        verify_rrb_two_group(inv.clone(), inv, &ad).unwrap();
        let err = verify_rrb_two_group(vec![0, 1, 2, 3, 4, 5], vec![0; 6], &ad).unwrap_err();
        assert!(matches!(err, Error::ComponentFailure { ref which, .. } if which == "B"));
    }

    #[test]
    fn xmod_level_square_failure() {
        let x = Arc::new(CrossedModule::identity_on(&s3()));
        let ad = Arc::new(XModAction::adjoint(&x));
        let inv: Vec<usize> = x.g1().elements().map(|a| x.g1().inv(a)).collect();
        verify_rrb_xmod(inv.clone(), inv.clone(), &ad).unwrap();
        verify_rrb_xmod(vec![0; 6], vec![0; 6], &ad).unwrap();
        let err = verify_rrb_xmod(inv, vec![0; 6], &ad).unwrap_err();
        assert!(matches!(err, Error::SquareFailure { .. }));
    }
}
