//! Passing relative Rota–Baxter operators between crossed modules and
//! 2-groups, and the descendant crossed module.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{invert_bijection, is_bijection};
use crate::xmod::{action_2group_from_xmod, action_xmod_from_2group, gamma_e, CrossedModule, KernelXMod, XModMorphism};

use super::construct::descendant_group;
use super::{verify_rrb_two_group, verify_rrb_xmod, RrbTwoGroupOp, RrbXModOp};

/// `B̃(h1,h0) = (B0h0 ▷ B1(β1(B0h0)⁻¹(h0⁻¹ ▷ h1)), B0h0)` on
/// `G1 ⋊ G0 ⇉ G0`, relative to the induced 2-group action.
pub fn rrb_xmod_to_2group(op: &RrbXModOp) -> Result<RrbTwoGroupOp> {
    let act = op.action();
    let (g, h) = (act.actor(), act.target());
    let two = Arc::new(action_2group_from_xmod(act)?);
    let (gn0, hn0) = (g.g0().order(), h.g0().order());
    let q = two.target();
    let tilde = q
        .arrows()
        .elements()
        .map(|y| {
            let (h1, h0) = (y / hn0, y % hn0);
            let x = op.b0()[h0];
            let inner = act.beta1().act(g.g0().inv(x), h.act(h.g0().inv(h0), h1));
            g.act(x, op.b1()[inner]) * gn0 + x
        })
        .collect();
    verify_rrb_two_group(tilde, op.b0().to_vec(), &two).map_err(|e| Error::invariant(&format!("induced 2-group operator: {e}"), vec![]))
}

/// `(B|ker s, B0)` relative to the induced crossed module action, together
/// with the kernel crossed modules of the actor and target.
pub fn rrb_2group_to_xmod(op: &RrbTwoGroupOp) -> Result<(RrbXModOp, KernelXMod, KernelXMod)> {
    let (action, kp, kq) = action_xmod_from_2group(op.action())?;
    let b1 = kq
        .embedding
        .iter()
        .map(|&x| kp.position(op.b()[x]).ok_or_else(|| Error::invariant("B maps ker s into ker s", vec![x])))
        .collect::<Result<Vec<_>>>()?;
    let out = verify_rrb_xmod(b1, op.b0().to_vec(), &Arc::new(action))
        .map_err(|e| Error::invariant(&format!("restricted operator: {e}"), vec![]))?;
    Ok((out, kp, kq))
}

/// `H1^B → H0^B` with
/// `h1 ·_B h1' = h1·β1(μB1h1)h1'`, `h0 ·_B h0' = h0·β0(B0h0)h0'` and
/// `h0 ▷_B h1 = h0 ▷ (β1(B0h0)h1 · α(B0h0 ▷ B1h1)h0⁻¹)`, with `(B1, B0)` as
/// a morphism into `G1 → G0`.
#[derive(Clone, Debug)]
pub struct DescendantXMod {
    pub xmod: Arc<CrossedModule>,
    pub morphism: XModMorphism,
    /// `theta[h1]` is the map `G0 → G1` assigned to `h1`.
    pub theta: Vec<Vec<usize>>,
    /// `tau1[h0]`, `tau0[h0]` are the bijections of `G1` and `G0`.
    pub tau1: Vec<Vec<usize>>,
    pub tau0: Vec<Vec<usize>>,
    mu_target: Arc<CrossedModule>,
}

pub fn descendant_xmod(op: &RrbXModOp) -> Result<DescendantXMod> {
    let act = op.action();
    let (g, h) = (act.actor(), act.target());
    let lemma = |e: Error| Error::invariant(&format!("descendant crossed module: {e}"), vec![]);
    let top = Arc::new(descendant_group(op.b1(), op.beta1_mu()).map_err(lemma)?);
    let bottom = Arc::new(descendant_group(op.b0(), act.beta0()).map_err(lemma)?);
    let mu: Vec<usize> = h.g1().elements().map(|x| h.mu(x)).collect();
    let perms: Vec<Vec<usize>> = h
        .g0()
        .elements()
        .map(|h0| {
            let x = op.b0()[h0];
            let h0_inv = h.g0().inv(h0);
            h.g1()
                .elements()
                .map(|h1| {
                    let moved = g.act(x, op.b1()[h1]);
                    h.act(h0, h.g1().mul(act.beta1().act(x, h1), act.alpha(moved, h0_inv)))
                })
                .collect()
        })
        .collect();
    let xmod = Arc::new(crate::xmod::validate_xmod(&top, &bottom, mu, perms).map_err(lemma)?);
    let morphism = XModMorphism::new(&xmod, g, op.b1().to_vec(), op.b0().to_vec()).map_err(lemma)?;

    // (θ, τ) into Map(G0,G1) → Diff(G1,G0,μ); † is the inverse in the
    // descendant groups
    let (g1, g0) = (g.g1(), g.g0());
    let theta = h
        .g1()
        .elements()
        .map(|h1| {
            let dag = top.inv(h1);
            g0.elements().map(|y| g1.mul(g1.inv(op.b1()[act.beta1().act(y, dag)]), g.act(y, op.b1()[dag]))).collect()
        })
        .collect();
    let tau0 = h
        .g0()
        .elements()
        .map(|h0| {
            let dag = bottom.inv(h0);
            g0.elements().map(|y| g0.mul(g0.mul(g0.inv(op.b0()[act.beta0().act(y, dag)]), y), op.b0()[dag])).collect()
        })
        .collect();
    let tau1 = h
        .g0()
        .elements()
        .map(|h0| {
            let x = op.b0()[h0];
            let dag = bottom.inv(h0);
            g1.elements()
                .map(|z| {
                    let inner = h.act(h0, act.beta1().act(x, act.alpha(z, dag)));
                    g1.mul(g1.inv(op.b1()[inner]), g.act(x, z))
                })
                .collect()
        })
        .collect();
    Ok(DescendantXMod { xmod, morphism, theta, tau1, tau0, mu_target: g.clone() })
}

impl DescendantXMod {
    /// Checks that `(θ, τ)` is a crossed module morphism into
    /// `Map(G0,G1) → Diff(G1,G0,μ)`: `θ` is a homomorphism into the units of
    /// the `⋆`-semigroup, `τ` into pairs of bijections commuting with `μ`,
    /// `Δ∘θ = τ∘∂`, and `θ(h0 ▷_B h1) = τ1(h0)∘θ(h1)∘τ0(h0)⁻¹`.
    pub fn check_map_diff(&self) -> Result<()> {
        let g = &self.mu_target;
        let d = &self.xmod;
        let (g1, g0) = (g.g1(), g.g0());
        let fail = |what: &str, w: Vec<usize>| Err(Error::invariant(&format!("(θ,τ) morphism: {what}"), w));
        if self.theta[d.g1().identity()] != gamma_e(g) {
            return fail("θ(e) = γ_e", vec![]);
        }
        for x in d.g1().elements() {
            for y in d.g1().elements() {
                let lhs = &self.theta[d.g1().mul(x, y)];
                if *lhs != crate::xmod::star(g, &self.theta[x], &self.theta[y]) {
                    return fail("θ is a homomorphism", vec![x, y]);
                }
            }
        }
        for x in d.g0().elements() {
            if !is_bijection(&self.tau1[x], g1.order()) || !is_bijection(&self.tau0[x], g0.order()) {
                return fail("τ lands in bijections", vec![x]);
            }
            if let Some(z) = g1.elements().find(|&z| g.mu(self.tau1[x][z]) != self.tau0[x][g.mu(z)]) {
                return fail("μ∘τ1 = τ0∘μ", vec![x, z]);
            }
            for y in d.g0().elements() {
                let xy = d.g0().mul(x, y);
                let c1: Vec<usize> = self.tau1[y].iter().map(|&v| self.tau1[x][v]).collect();
                let c0: Vec<usize> = self.tau0[y].iter().map(|&v| self.tau0[x][v]).collect();
                if self.tau1[xy] != c1 || self.tau0[xy] != c0 {
                    return fail("τ is a homomorphism", vec![x, y]);
                }
            }
        }
        for x in d.g1().elements() {
            let (d1, d0) = crate::xmod::delta(g, &self.theta[x]);
            let m = d.mu(x);
            if d1 != self.tau1[m] || d0 != self.tau0[m] {
                return fail("Δ∘θ = τ∘∂", vec![x]);
            }
        }
        for y in d.g0().elements() {
            let inv0 = invert_bijection(&self.tau0[y]);
            for x in d.g1().elements() {
                let moved: Vec<usize> = g0.elements().map(|z| self.tau1[y][self.theta[x][inv0[z]]]).collect();
                if self.theta[d.act(y, x)] != moved {
                    return fail("θ is equivariant", vec![y, x]);
                }
            }
        }
        Ok(())
    }
}

/// Re-verifies a Rota–Baxter operator on a crossed module on its
/// descendant, with the adjoint action of the descendant.
pub fn rota_baxter_on_descendant_xmod(op: &RrbXModOp, desc: &DescendantXMod) -> Result<RrbXModOp> {
    if !op.action().is_adjoint() {
        return Err(Error::NotAdjointAction);
    }
    let adj = Arc::new(crate::xmod::XModAction::adjoint(&desc.xmod));
    verify_rrb_xmod(op.b1().to_vec(), op.b0().to_vec(), &adj)
}
