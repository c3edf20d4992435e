//! Constructions from a relative Rota–Baxter operator on a 2-group: graph,
//! the Rota–Baxter operator on the semidirect product, descendants, twists,
//! `B̄`, `B⁺` and the two 2-groups of a Rota–Baxter group.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{invert_bijection, is_bijection, FiniteGroup, GroupAction};
use crate::twogroup::{semidirect_two_group, sub_two_group, SubTwoGroup, TwoGroup, TwoGroupAction, TwoGroupMorphism};
use crate::xmod::{xmod_to_two_group, CrossedModule};

use super::{verify_rrb_two_group, RrbGroupOp, RrbTwoGroupOp};

/// `Q ⋊ P ⇉ Q0 ⋊ P0` for an action, with its adjoint action. Arrow `(q,p)`
/// has index `q·|P| + p`.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub action: Arc<TwoGroupAction>,
    pub group: Arc<TwoGroup>,
    pub adjoint: Arc<TwoGroupAction>,
}

impl Semidirect {
    pub fn new(action: &Arc<TwoGroupAction>) -> Result<Self> {
        let group = Arc::new(semidirect_two_group(action)?);
        let adjoint = Arc::new(TwoGroupAction::adjoint(&group));
        Ok(Semidirect { action: action.clone(), group, adjoint })
    }

    #[inline]
    pub fn arrow(&self, q: usize, p: usize) -> usize {
        q * self.action.actor().arrows().order() + p
    }

    #[inline]
    pub fn object(&self, q0: usize, p0: usize) -> usize {
        q0 * self.action.actor().objects().order() + p0
    }

    pub fn split_arrow(&self, x: usize) -> (usize, usize) {
        let n = self.action.actor().arrows().order();
        (x / n, x % n)
    }

    pub fn split_object(&self, x: usize) -> (usize, usize) {
        let n = self.action.actor().objects().order();
        (x / n, x % n)
    }
}

/// `Gr(B) ⇉ Gr(B0)` inside the semidirect 2-group. Fails with the first
/// closure witness when `(B, B0)` is not an operator.
pub fn graph_2subgroup(b: &[usize], b0: &[usize], sd: &Semidirect) -> Result<SubTwoGroup> {
    let q = sd.action.target();
    let arrows: Vec<usize> = q.arrows().elements().map(|x| sd.arrow(x, b[x])).collect();
    let objects: Vec<usize> = q.objects().elements().map(|x| sd.object(x, b0[x])).collect();
    let sub = sub_two_group(&sd.group, &arrows, &objects)?;
    let mut member = vec![false; sd.group.arrows().order()];
    for &x in &arrows {
        member[x] = true;
    }
    for &x in &arrows {
        for &y in sd.group.by_tgt(sd.group.src(x)) {
            if member[y] && !member[sd.group.compose(x, y)] {
                return Err(Error::NotSubgroup { witness: vec![x, y] });
            }
        }
    }
    Ok(sub)
}

/// `B̂(q,p) = (e, p⁻¹·Bq)` and `B̂0(q0,p0) = (e, p0⁻¹·B0q0)`.
pub fn hat_b_maps(b: &[usize], b0: &[usize], sd: &Semidirect) -> (Vec<usize>, Vec<usize>) {
    let (p, q) = (sd.action.actor(), sd.action.target());
    let (pa, po) = (p.arrows(), p.objects());
    let hat = sd
        .group
        .arrows()
        .elements()
        .map(|x| {
            let (qq, pp) = sd.split_arrow(x);
            sd.arrow(q.arrows().identity(), pa.mul(pa.inv(pp), b[qq]))
        })
        .collect();
    let hat0 = sd
        .group
        .objects()
        .elements()
        .map(|x| {
            let (qq, pp) = sd.split_object(x);
            sd.object(q.objects().identity(), po.mul(po.inv(pp), b0[qq]))
        })
        .collect();
    (hat, hat0)
}

pub fn hat_b(op: &RrbTwoGroupOp, sd: &Semidirect) -> Result<RrbTwoGroupOp> {
    let (hat, hat0) = hat_b_maps(op.b(), op.b0(), sd);
    verify_rrb_two_group(hat, hat0, &sd.adjoint)
}

/// `q ·_B q' = q·φ(Bq)q'` on the carrier of the target of `action`.
pub fn descendant_group(b: &[usize], action: &GroupAction) -> Result<FiniteGroup> {
    let h = action.target();
    let n = h.order();
    let mut table = Vec::with_capacity(n * n);
    for x in h.elements() {
        let perm = action.perm(b[x]);
        for y in h.elements() {
            table.push(h.mul(x, perm[y]));
        }
    }
    let g = FiniteGroup::from_flat(n, table, Some(h.identity()))?;
    match h.labels() {
        Some(l) => g.with_labels(l.to_vec()),
        None => Ok(g),
    }
}

/// The descendant 2-group `Q^B ⇉ Q0^B` and `(B, B0)` as a homomorphism
/// from it to `P ⇉ P0`.
#[derive(Clone, Debug)]
pub struct Descendant {
    pub group: Arc<TwoGroup>,
    pub morphism: TwoGroupMorphism,
}

pub fn descendant_two_group(op: &RrbTwoGroupOp) -> Result<Descendant> {
    let act = op.action();
    let lemma = |e: Error| Error::invariant(&format!("descendant 2-group: {e}"), vec![]);
    let arrows = Arc::new(descendant_group(op.b(), act.phi()).map_err(lemma)?);
    let objects = Arc::new(descendant_group(op.b0(), act.phi0()).map_err(lemma)?);
    let group = Arc::new(act.target().with_groups(&arrows, &objects).map_err(lemma)?);
    let morphism = TwoGroupMorphism::new(&group, act.actor(), op.b().to_vec(), op.b0().to_vec()).map_err(lemma)?;
    Ok(Descendant { group, morphism })
}

/// The action of `Q^B ⇉ Q0^B` on the groupoid `P ⇉ P0`:
/// `φ^B(q)p = (B(φ(p)q†))⁻¹·p·Bq†` with `†` the inverse in `Q^B`, and
/// likewise on objects. `perms[q][p]` is `φ^B(q)p`.
#[derive(Clone, Debug)]
pub struct DescendantAction {
    pub perms: Vec<Vec<usize>>,
    pub perms0: Vec<Vec<usize>>,
}

pub fn descendant_action(op: &RrbTwoGroupOp, desc: &Descendant) -> Result<DescendantAction> {
    let act = op.action();
    let p = act.actor();
    let table = |b: &[usize], phi: &GroupAction, pg: &FiniteGroup, qb: &FiniteGroup| -> Vec<Vec<usize>> {
        qb.elements()
            .map(|x| {
                let dag = qb.inv(x);
                pg.elements().map(|y| pg.mul(pg.mul(pg.inv(b[phi.act(y, dag)]), y), b[dag])).collect()
            })
            .collect()
    };
    let perms = table(op.b(), act.phi(), p.arrows(), desc.group.arrows());
    let perms0 = table(op.b0(), act.phi0(), p.objects(), desc.group.objects());
    let out = DescendantAction { perms, perms0 };
    out.check(desc, p).map_err(|(what, w)| Error::invariant(&format!("descendant action: {what}"), w))?;
    Ok(out)
}

impl DescendantAction {
    /// Action laws on both levels and the groupoid-morphism conditions.
    fn check(&self, desc: &Descendant, p: &TwoGroup) -> std::result::Result<(), (&'static str, Vec<usize>)> {
        let qb = &desc.group;
        for (perms, g, target) in [(&self.perms, qb.arrows(), p.arrows().order()), (&self.perms0, qb.objects(), p.objects().order())] {
            if let Some(y) = (0..target).find(|&y| perms[g.identity()][y] != y) {
                return Err(("φ^B(e) = id", vec![y]));
            }
            for x in g.elements() {
                if !is_bijection(&perms[x], target) {
                    return Err(("bijective", vec![x]));
                }
                for &s in g.generators() {
                    let xs = g.mul(x, s);
                    if let Some(y) = (0..target).find(|&y| perms[xs][y] != perms[x][perms[s][y]]) {
                        return Err(("φ^B(q·q') = φ^B(q)∘φ^B(q')", vec![x, s, y]));
                    }
                }
            }
        }
        for x in qb.arrows().elements() {
            for y in p.arrows().elements() {
                let z = self.perms[x][y];
                if p.src(z) != self.perms0[qb.src(x)][p.src(y)] {
                    return Err(("src", vec![x, y]));
                }
                if p.tgt(z) != self.perms0[qb.tgt(x)][p.tgt(y)] {
                    return Err(("tgt", vec![x, y]));
                }
            }
        }
        for x0 in qb.objects().elements() {
            for y0 in p.objects().elements() {
                if self.perms[qb.unit(x0)][p.unit(y0)] != p.unit(self.perms0[x0][y0]) {
                    return Err(("unit", vec![x0, y0]));
                }
            }
        }
        for (x, x2) in qb.composable_pairs() {
            let xc = qb.compose(x, x2);
            for (y, y2) in p.composable_pairs() {
                if self.perms[xc][p.compose(y, y2)] != p.compose(self.perms[x][y], self.perms[x2][y2]) {
                    return Err(("composition", vec![x, x2, y, y2]));
                }
            }
        }
        Ok(())
    }
}

/// `(ρ⁻¹∘B∘θ, ρ0⁻¹∘B0∘θ0)`, after checking that `(θ×ρ, θ0×ρ0)` is an
/// automorphism of the semidirect 2-group.
pub fn twist_rrb(
    op: &RrbTwoGroupOp,
    sd: &Semidirect,
    theta: &[usize],
    theta0: &[usize],
    rho: &[usize],
    rho0: &[usize],
) -> Result<RrbTwoGroupOp> {
    let (p, q) = (sd.action.actor(), sd.action.target());
    for (name, map, size) in [
        ("theta", theta, q.arrows().order()),
        ("theta0", theta0, q.objects().order()),
        ("rho", rho, p.arrows().order()),
        ("rho0", rho0, p.objects().order()),
    ] {
        if !is_bijection(map, size) {
            return Err(Error::NotAutomorphism { what: name.into(), witness: vec![] });
        }
    }
    let f = sd.group.arrows().elements().map(|x| {
        let (a, b) = sd.split_arrow(x);
        sd.arrow(theta[a], rho[b])
    });
    let f0 = sd.group.objects().elements().map(|x| {
        let (a, b) = sd.split_object(x);
        sd.object(theta0[a], rho0[b])
    });
    TwoGroupMorphism::new(&sd.group, &sd.group, f.collect(), f0.collect())
        .map_err(|e| Error::NotAutomorphism { what: format!("θ×ρ on the semidirect 2-group: {e}"), witness: vec![] })?;
    let rho_inv = invert_bijection(rho);
    let rho0_inv = invert_bijection(rho0);
    let b = theta.iter().map(|&x| rho_inv[op.b()[x]]).collect();
    let b0 = theta0.iter().map(|&x| rho0_inv[op.b0()[x]]).collect();
    verify_rrb_two_group(b, b0, op.action())
}

/// `B̄p = p⁻¹·B(p⁻¹)` for a Rota–Baxter operator.
pub fn bar_b(op: &RrbTwoGroupOp) -> Result<RrbTwoGroupOp> {
    if !op.action().is_adjoint() {
        return Err(Error::NotAdjointAction);
    }
    let p = op.action().actor();
    let bar = |b: &[usize], g: &FiniteGroup| -> Vec<usize> { g.elements().map(|x| g.mul(g.inv(x), b[g.inv(x)])).collect() };
    verify_rrb_two_group(bar(op.b(), p.arrows()), bar(op.b0(), p.objects()), op.action())
}

/// `B⁺p = p·Bp` and `B0⁺`, as maps.
pub fn plus_maps(op: &RrbTwoGroupOp) -> (Vec<usize>, Vec<usize>) {
    let p = op.action().actor();
    let plus = |b: &[usize], g: &FiniteGroup| -> Vec<usize> { g.elements().map(|x| g.mul(x, b[x])).collect() };
    (plus(op.b(), p.arrows()), plus(op.b0(), p.objects()))
}

/// `(B⁺, B0⁺)` as a 2-group homomorphism from the descendant.
pub fn plus_b(op: &RrbTwoGroupOp, desc: &Descendant) -> Result<TwoGroupMorphism> {
    if !op.action().is_adjoint() {
        return Err(Error::NotAdjointAction);
    }
    let (f, f0) = plus_maps(op);
    TwoGroupMorphism::new(&desc.group, op.action().actor(), f, f0)
}

/// The two Rota–Baxter 2-groups of a Rota–Baxter group `(G, B)`: `(B, B)`
/// on `G ⇉ G`, and `(B̃, B)` on `G ⋊ G ⇉ G` with
/// `B̃(p,l) = (B(p·l)·(Bl)⁻¹, Bl)`.
pub fn rb_group_to_rb_2groups(rb: &RrbGroupOp) -> Result<(RrbTwoGroupOp, RrbTwoGroupOp)> {
    let act = rb.action();
    let g = act.actor();
    if **act != GroupAction::adjoint(g) {
        return Err(Error::NotAdjointAction);
    }
    let discrete = Arc::new(TwoGroup::discrete(g));
    let first = verify_rrb_two_group(rb.map().to_vec(), rb.map().to_vec(), &Arc::new(TwoGroupAction::adjoint(&discrete)))?;
    let pair = Arc::new(xmod_to_two_group(&CrossedModule::identity_on(g))?);
    let n = g.order();
    let b = rb.map();
    let tilde = pair
        .arrows()
        .elements()
        .map(|x| {
            let (p, l) = (x / n, x % n);
            g.mul(b[g.mul(p, l)], g.inv(b[l])) * n + b[l]
        })
        .collect();
    let second = verify_rrb_two_group(tilde, b.to_vec(), &Arc::new(TwoGroupAction::adjoint(&pair)))?;
    Ok((first, second))
}

/// Re-verifies `(B, B0)` as a Rota–Baxter operator on its descendant.
pub fn rota_baxter_on_descendant(op: &RrbTwoGroupOp, desc: &Descendant) -> Result<RrbTwoGroupOp> {
    if !op.action().is_adjoint() {
        return Err(Error::NotAdjointAction);
    }
    let adj = Arc::new(TwoGroupAction::adjoint(&desc.group));
    verify_rrb_two_group(op.b().to_vec(), op.b0().to_vec(), &adj)
}
