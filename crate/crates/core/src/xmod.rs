//! Crossed modules `G1 → G0`, their derivations and actor, actions of one
//! crossed module on another, and the passage to and from strict 2-groups.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{
    automorphism_group, check_len, invert_bijection, same_group, semidirect_product, subgroup, FiniteGroup, GroupAction, GroupHom,
};
use crate::search::{self, Budget};
use crate::twogroup::{validate_two_group, TwoGroup, TwoGroupAction};

/// `μ: G1 → G0` with an action of `G0` on `G1` satisfying both Peiffer
/// identities.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    mu: GroupHom,
    act: GroupAction,
}

impl PartialEq for CrossedModule {
    fn eq(&self, other: &Self) -> bool {
        self.mu == other.mu && self.act == other.act
    }
}

impl Eq for CrossedModule {}

pub fn validate_xmod(g1: &Arc<FiniteGroup>, g0: &Arc<FiniteGroup>, mu: Vec<usize>, act: Vec<Vec<usize>>) -> Result<CrossedModule> {
    let mu = GroupHom::new("mu", g1, g0, mu)?;
    let act = GroupAction::new(g0, g1, act)?;
    CrossedModule::new(mu, act)
}

impl CrossedModule {
    pub fn new(mu: GroupHom, act: GroupAction) -> Result<Self> {
        if !same_group(act.actor(), mu.codomain()) || !same_group(act.target(), mu.domain()) {
            return Err(Error::ActionMismatch("crossed module action does not match mu".into()));
        }
        let (g1, g0) = (mu.domain().clone(), mu.codomain().clone());
        for a in g1.elements() {
            let m = mu.apply(a);
            for b in g1.elements() {
                if act.act(m, b) != g1.conj(a, b) {
                    return Err(Error::Peiffer1Failure { g1: a, g1p: b });
                }
            }
        }
        for x in g0.elements() {
            for a in g1.elements() {
                if mu.apply(act.act(x, a)) != g0.conj(x, mu.apply(a)) {
                    return Err(Error::Peiffer2Failure { g0: x, g1: a });
                }
            }
        }
        Ok(CrossedModule { mu, act })
    }

    pub fn g1(&self) -> &Arc<FiniteGroup> {
        self.mu.domain()
    }

    pub fn g0(&self) -> &Arc<FiniteGroup> {
        self.mu.codomain()
    }

    #[inline]
    pub fn mu(&self, a: usize) -> usize {
        self.mu.apply(a)
    }

    pub fn mu_hom(&self) -> &GroupHom {
        &self.mu
    }

    /// `g0 ▷ g1`
    #[inline]
    pub fn act(&self, g0: usize, g1: usize) -> usize {
        self.act.act(g0, g1)
    }

    pub fn action(&self) -> &GroupAction {
        &self.act
    }

    /// `G →id G` with conjugation.
    pub fn identity_on(g: &Arc<FiniteGroup>) -> Self {
        CrossedModule::new(GroupHom::identity(g), GroupAction::adjoint(g)).expect("identity crossed module")
    }

    /// `{e} → G`.
    pub fn trivial_over(g: &Arc<FiniteGroup>) -> Self {
        let t = Arc::new(FiniteGroup::trivial());
        let mu = GroupHom::new("mu", &t, g, vec![g.identity()]).expect("trivial map");
        CrossedModule::new(mu, GroupAction::trivial(g, &t)).expect("trivial crossed module")
    }
}

/// The crossed module `ker s → P0` of a 2-group, with `μ = tgt` and
/// `p0 ▷ p = ι(p0)·p·ι(p0)⁻¹`. `embedding[i]` is the arrow of `P` at index
/// `i` of `G1`.
#[derive(Clone, Debug)]
pub struct KernelXMod {
    pub xmod: CrossedModule,
    pub embedding: Vec<usize>,
    position: Vec<usize>,
}

impl KernelXMod {
    /// Index in `G1` of an arrow of `ker s`.
    pub fn position(&self, p: usize) -> Option<usize> {
        let i = self.position[p];
        (i != usize::MAX).then_some(i)
    }
}

pub fn two_group_to_xmod(p: &TwoGroup) -> Result<KernelXMod> {
    let (g1, embedding) = subgroup(p.arrows(), &p.ker_src())?;
    let mut position = vec![usize::MAX; p.arrows().order()];
    for (i, &x) in embedding.iter().enumerate() {
        position[x] = i;
    }
    let a = p.arrows();
    let mu = embedding.iter().map(|&x| p.tgt(x)).collect();
    let act = p.objects().elements().map(|o| embedding.iter().map(|&x| position[a.conj(p.unit(o), x)]).collect()).collect();
    let xmod = validate_xmod(&g1, p.objects(), mu, act).map_err(|e| Error::invariant(&format!("kernel crossed module: {e}"), vec![]))?;
    Ok(KernelXMod { xmod, embedding, position })
}

/// `G1 ⋊ G0 ⇉ G0` with `s(g1,g0) = g0`, `t(g1,g0) = μg1·g0`,
/// `ι(g0) = (e,g0)`. The arrow `(g1,g0)` has index `g1·|G0| + g0`.
pub fn xmod_to_two_group(x: &CrossedModule) -> Result<TwoGroup> {
    let (g1, g0) = (x.g1(), x.g0());
    let arrows = Arc::new(semidirect_product(g1, g0, x.action())?);
    let n0 = g0.order();
    let src = arrows.elements().map(|a| a % n0).collect();
    let tgt = arrows.elements().map(|a| g0.mul(x.mu(a / n0), a % n0)).collect();
    let unit = g0.elements().map(|o| g1.identity() * n0 + o).collect();
    validate_two_group(&arrows, g0, src, tgt, unit).map_err(|e| Error::invariant(&format!("crossed module 2-group: {e}"), vec![]))
}

/// `π_P(k, p0) = embedding(k)·ι(p0)` from the round-trip 2-group back to `P`.
pub fn pi_map(p: &TwoGroup, k: &KernelXMod) -> Vec<usize> {
    let n0 = p.objects().order();
    let total = k.embedding.len() * n0;
    (0..total).map(|x| p.arrows().mul(k.embedding[x / n0], p.unit(x % n0))).collect()
}

/// The derivation law `γ(h0·h0') = γ(h0)·(h0 ▷ γ(h0'))`, checked on every
/// edge of the Cayley graph of `H0`.
pub fn check_derivation(h: &CrossedModule, gamma: &[usize], which: &str) -> Result<()> {
    let (h1, h0) = (h.g1(), h.g0());
    check_len(which, gamma, h0.order(), h1.order())?;
    if gamma[h0.identity()] != h1.identity() {
        return Err(Error::NotDerivation { which: which.into(), h0: h0.identity(), h0p: h0.identity() });
    }
    for x in h0.elements() {
        for &g in h0.generators() {
            if gamma[h0.mul(x, g)] != h1.mul(gamma[x], h.act(x, gamma[g])) {
                return Err(Error::NotDerivation { which: which.into(), h0: x, h0p: g });
            }
        }
    }
    Ok(())
}

/// `(γ1 ⋆ γ2)(h0) = γ1(∂γ2(h0)·h0)·γ2(h0)` for any maps `H0 → H1`.
pub fn star(h: &CrossedModule, a: &[usize], b: &[usize]) -> Vec<usize> {
    let (h1, h0) = (h.g1(), h.g0());
    h0.elements().map(|x| h1.mul(a[h0.mul(h.mu(b[x]), x)], b[x])).collect()
}

pub fn gamma_e(h: &CrossedModule) -> Vec<usize> {
    vec![h.g1().identity(); h.g0().order()]
}

/// `Δ(γ) = (h1 ↦ γ(∂h1)·h1, h0 ↦ ∂γ(h0)·h0)`.
pub fn delta(h: &CrossedModule, gamma: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (h1, h0) = (h.g1(), h.g0());
    let d1 = h1.elements().map(|x| h1.mul(gamma[h.mu(x)], x)).collect();
    let d0 = h0.elements().map(|x| h0.mul(h.mu(gamma[x]), x)).collect();
    (d1, d0)
}

/// All derivations under `⋆`, with the unit group.
#[derive(Clone, Debug)]
pub struct DerivationMonoid {
    /// Sorted lexicographically; `γ_e` is first.
    pub derivations: Vec<Vec<usize>>,
    /// `table[i·n + j]` is the index of `derivations[i] ⋆ derivations[j]`.
    pub table: Vec<usize>,
    /// Indices of the invertible derivations, ascending.
    pub units: Vec<usize>,
    /// The unit group over positions in `units`.
    pub unit_group: Arc<FiniteGroup>,
}

pub fn enumerate_derivations(h: &CrossedModule, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let twist = |x: usize, y: usize| h.act(x, y);
    let allowed = |_: usize, _: usize| true;
    search::enumerate_cocycles(h.g0(), h.g1(), &twist, &allowed, budget)
}

pub fn derivation_monoid(h: &CrossedModule) -> Result<DerivationMonoid> {
    let derivations = enumerate_derivations(h, &Budget::unlimited())?;
    let index: HashMap<&[usize], usize> = derivations.iter().enumerate().map(|(i, d)| (d.as_slice(), i)).collect();
    let n = derivations.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &derivations {
        for b in &derivations {
            let c = star(h, a, b);
            let i = *index.get(c.as_slice()).ok_or_else(|| Error::invariant("derivations closed under ⋆", c.clone()))?;
            table.push(i);
        }
    }
    let e = index[gamma_e(h).as_slice()];
    let units: Vec<usize> = (0..n).filter(|&i| (0..n).any(|j| table[i * n + j] == e && table[j * n + i] == e)).collect();
    let mut pos = vec![usize::MAX; n];
    for (k, &i) in units.iter().enumerate() {
        pos[i] = k;
    }
    let m = units.len();
    let mut utable = Vec::with_capacity(m * m);
    for &i in &units {
        for &j in &units {
            utable.push(pos[table[i * n + j]]);
        }
    }
    let unit_group = Arc::new(FiniteGroup::from_flat(m, utable, Some(pos[e]))?);
    Ok(DerivationMonoid { derivations, table, units, unit_group })
}

/// `(D(H0,H1) →Δ Aut(H1,H0,∂))` together with the underlying maps.
#[derive(Clone, Debug)]
pub struct Actor {
    pub xmod: CrossedModule,
    /// Invertible derivations, in the order of `xmod.g1()`.
    pub derivations: Vec<Vec<usize>>,
    /// Automorphism pairs `(ε, ρ)`, in the order of `xmod.g0()`.
    pub automorphisms: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Actor {
    pub fn derivation_index(&self, gamma: &[usize]) -> Option<usize> {
        self.derivations.iter().position(|d| d == gamma)
    }

    pub fn automorphism_index(&self, eps: &[usize], rho: &[usize]) -> Option<usize> {
        self.automorphisms.iter().position(|(e, r)| e == eps && r == rho)
    }
}

/// Pairs of automorphisms `(ε, ρ)` of `H1` and `H0` with `∂∘ε = ρ∘∂` and
/// `ε(h0 ▷ h1) = ρ(h0) ▷ ε(h1)`, sorted, identity first.
pub fn xmod_automorphisms(h: &CrossedModule) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let (_, aut1) = automorphism_group(h.g1())?;
    let (_, aut0) = automorphism_group(h.g0())?;
    let mut out = Vec::new();
    for e in &aut1 {
        for r in &aut0 {
            if is_xmod_automorphism(h, e.map(), r.map()) {
                out.push((e.map().to_vec(), r.map().to_vec()));
            }
        }
    }
    Ok(out)
}

fn is_xmod_automorphism(h: &CrossedModule, eps: &[usize], rho: &[usize]) -> bool {
    h.g1().elements().all(|x| h.mu(eps[x]) == rho[h.mu(x)])
        && h.g0().generators().iter().all(|&y| h.g1().elements().all(|x| eps[h.act(y, x)] == h.act(rho[y], eps[x])))
}

pub fn actor_xmod(h: &CrossedModule) -> Result<Actor> {
    let monoid = derivation_monoid(h)?;
    let derivations: Vec<Vec<usize>> = monoid.units.iter().map(|&i| monoid.derivations[i].clone()).collect();
    let automorphisms = xmod_automorphisms(h)?;
    let aut_index: HashMap<(&[usize], &[usize]), usize> =
        automorphisms.iter().enumerate().map(|(i, (e, r))| ((e.as_slice(), r.as_slice()), i)).collect();
    let m = automorphisms.len();
    let mut table = Vec::with_capacity(m * m);
    for (e1, r1) in &automorphisms {
        for (e2, r2) in &automorphisms {
            let e: Vec<usize> = e2.iter().map(|&x| e1[x]).collect();
            let r: Vec<usize> = r2.iter().map(|&x| r1[x]).collect();
            let i =
                *aut_index.get(&(e.as_slice(), r.as_slice())).ok_or_else(|| Error::invariant("automorphism pairs compose", e.clone()))?;
            table.push(i);
        }
    }
    let aut = Arc::new(FiniteGroup::from_flat(m, table, Some(0))?);
    let d_index: HashMap<&[usize], usize> = derivations.iter().enumerate().map(|(i, d)| (d.as_slice(), i)).collect();
    let mut delta_map = Vec::with_capacity(derivations.len());
    for d in &derivations {
        let (e, r) = delta(h, d);
        let i = *aut_index.get(&(e.as_slice(), r.as_slice())).ok_or_else(|| Error::invariant("Δ lands in Aut(H1,H0,∂)", d.clone()))?;
        delta_map.push(i);
    }
    let mut perms = Vec::with_capacity(m);
    for (eps, rho) in &automorphisms {
        let rho_inv = invert_bijection(rho);
        let mut perm = Vec::with_capacity(derivations.len());
        for d in &derivations {
            let moved: Vec<usize> = h.g0().elements().map(|x| eps[d[rho_inv[x]]]).collect();
            let i = *d_index.get(moved.as_slice()).ok_or_else(|| Error::invariant("actor action preserves D(H0,H1)", moved.clone()))?;
            perm.push(i);
        }
        perms.push(perm);
    }
    let xmod = validate_xmod(&monoid.unit_group, &aut, delta_map, perms)
        .map_err(|e| Error::invariant(&format!("actor crossed module: {e}"), vec![]))?;
    Ok(Actor { xmod, derivations, automorphisms })
}

/// A morphism of crossed modules `(ε, ρ)`.
#[derive(Clone, Debug)]
pub struct XModMorphism {
    pub eps: GroupHom,
    pub rho: GroupHom,
}

impl XModMorphism {
    pub fn new(from: &CrossedModule, to: &CrossedModule, eps: Vec<usize>, rho: Vec<usize>) -> Result<Self> {
        let eps = GroupHom::new("eps", from.g1(), to.g1(), eps)?;
        let rho = GroupHom::new("rho", from.g0(), to.g0(), rho)?;
        for x in from.g1().elements() {
            if to.mu(eps.apply(x)) != rho.apply(from.mu(x)) {
                return Err(Error::SquareFailure { detail: "∂∘ε = ρ∘μ".into(), witness: vec![x] });
            }
        }
        for y in from.g0().elements() {
            for x in from.g1().elements() {
                if eps.apply(from.act(y, x)) != to.act(rho.apply(y), eps.apply(x)) {
                    return Err(Error::EquivarianceFailure { g0: y, g1: x });
                }
            }
        }
        Ok(XModMorphism { eps, rho })
    }
}

/// An action `(α, β)` of `actor` on `target`: `alpha[g1]` is a derivation
/// `H0 → H1`, `beta1` and `beta0` are the two components of `β`.
#[derive(Clone, Debug)]
pub struct XModAction {
    actor: Arc<CrossedModule>,
    target: Arc<CrossedModule>,
    alpha: Vec<Vec<usize>>,
    beta1: GroupAction,
    beta0: GroupAction,
}

pub fn validate_xmod_action(
    actor: &Arc<CrossedModule>,
    target: &Arc<CrossedModule>,
    alpha: Vec<Vec<usize>>,
    beta1: Vec<Vec<usize>>,
    beta0: Vec<Vec<usize>>,
) -> Result<XModAction> {
    let beta1 = GroupAction::new(actor.g0(), target.g1(), beta1)?;
    let beta0 = GroupAction::new(actor.g0(), target.g0(), beta0)?;
    XModAction::new(actor, target, alpha, beta1, beta0)
}

impl XModAction {
    /// Checks that `(α, β)` is a crossed module morphism into the actor of
    /// `target`, without materialising the actor.
    pub fn new(
        actor: &Arc<CrossedModule>,
        target: &Arc<CrossedModule>,
        alpha: Vec<Vec<usize>>,
        beta1: GroupAction,
        beta0: GroupAction,
    ) -> Result<Self> {
        let (g, h) = (actor.as_ref(), target.as_ref());
        if !same_group(beta1.actor(), g.g0()) || !same_group(beta1.target(), h.g1()) {
            return Err(Error::ActionMismatch("beta1 does not act on H1 through G0".into()));
        }
        if !same_group(beta0.actor(), g.g0()) || !same_group(beta0.target(), h.g0()) {
            return Err(Error::ActionMismatch("beta0 does not act on H0 through G0".into()));
        }
        // β(g0) ∈ Aut(H1,H0,∂); enough on generators since β is a homomorphism
        for &y in g.g0().generators() {
            if !is_xmod_automorphism(h, beta1.perm(y), beta0.perm(y)) {
                return Err(Error::NotAutomorphism { what: "beta(g0) in Aut(H1,H0,∂)".into(), witness: vec![y] });
            }
        }
        if alpha.len() != g.g1().order() {
            return Err(Error::BadLength { map: "alpha".into(), len: alpha.len(), expected: g.g1().order() });
        }
        for (x, d) in alpha.iter().enumerate() {
            check_derivation(h, d, &format!("alpha({x})"))?;
        }
        if alpha[g.g1().identity()] != gamma_e(h) {
            return Err(Error::NotHom { map: "alpha".into(), a: g.g1().identity(), b: g.g1().identity() });
        }
        for x in g.g1().elements() {
            for &s in g.g1().generators() {
                if alpha[g.g1().mul(x, s)] != star(h, &alpha[x], &alpha[s]) {
                    return Err(Error::NotHom { map: "alpha".into(), a: x, b: s });
                }
            }
        }
        for x in g.g1().elements() {
            let (d1, d0) = delta(h, &alpha[x]);
            let m = g.mu(x);
            if d1 != beta1.perm(m) || d0 != beta0.perm(m) {
                return Err(Error::SquareFailure { detail: "Δ∘α = β∘μ".into(), witness: vec![x] });
            }
        }
        for y in g.g0().elements() {
            let inv0 = beta0.perm(g.g0().inv(y));
            for x in g.g1().elements() {
                let moved: Vec<usize> = h.g0().elements().map(|z| beta1.act(y, alpha[x][inv0[z]])).collect();
                if alpha[g.act(y, x)] != moved {
                    return Err(Error::EquivarianceFailure { g0: y, g1: x });
                }
            }
        }
        Ok(XModAction { actor: actor.clone(), target: target.clone(), alpha, beta1, beta0 })
    }

    /// `α(g1)g0 = g1·(g0 ▷ g1⁻¹)`, `β(g0) = (g0 ▷ ·, conjugation by g0)`.
    pub fn adjoint(x: &Arc<CrossedModule>) -> Self {
        let (g1, g0) = (x.g1(), x.g0());
        let alpha = g1.elements().map(|a| g0.elements().map(|y| g1.mul(a, x.act(y, g1.inv(a)))).collect()).collect();
        XModAction { actor: x.clone(), target: x.clone(), alpha, beta1: x.action().clone(), beta0: GroupAction::adjoint(g0) }
    }

    pub fn trivial(actor: &Arc<CrossedModule>, target: &Arc<CrossedModule>) -> Self {
        XModAction {
            actor: actor.clone(),
            target: target.clone(),
            alpha: vec![gamma_e(target); actor.g1().order()],
            beta1: GroupAction::trivial(actor.g0(), target.g1()),
            beta0: GroupAction::trivial(actor.g0(), target.g0()),
        }
    }

    pub fn actor(&self) -> &Arc<CrossedModule> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<CrossedModule> {
        &self.target
    }

    /// `α(g1)h0`
    #[inline]
    pub fn alpha(&self, g1: usize, h0: usize) -> usize {
        self.alpha[g1][h0]
    }

    pub fn alpha_maps(&self) -> &[Vec<usize>] {
        &self.alpha
    }

    pub fn beta1(&self) -> &GroupAction {
        &self.beta1
    }

    pub fn beta0(&self) -> &GroupAction {
        &self.beta0
    }

    /// `β1∘μ`, the action of `G1` on `H1`.
    pub fn beta1_mu(&self) -> GroupAction {
        self.beta1.pullback(self.actor.mu_hom()).expect("β1∘μ is an action")
    }

    /// True when this is the adjoint action of a crossed module on itself.
    pub fn is_adjoint(&self) -> bool {
        if !Arc::ptr_eq(&self.actor, &self.target) && *self.actor != *self.target {
            return false;
        }
        let adj = XModAction::adjoint(&self.actor);
        adj.alpha == self.alpha && adj.beta1 == self.beta1 && adj.beta0 == self.beta0
    }

    /// The images of `α` and `β` as indices into the actor of the target.
    pub fn into_actor(&self, actor: &Actor) -> Result<XModMorphism> {
        let mut eps = Vec::with_capacity(self.alpha.len());
        for (x, d) in self.alpha.iter().enumerate() {
            eps.push(actor.derivation_index(d).ok_or(Error::NotHom { map: "alpha".into(), a: x, b: x })?);
        }
        let mut rho = Vec::new();
        for y in self.actor.g0().elements() {
            rho.push(
                actor
                    .automorphism_index(self.beta1.perm(y), self.beta0.perm(y))
                    .ok_or(Error::NotAutomorphism { what: "beta".into(), witness: vec![y] })?,
            );
        }
        XModMorphism::new(&self.actor, &actor.xmod, eps, rho)
    }
}

/// `H1 ⋊ G1 → H0 ⋊ G0` with `(h0,g0) ⊵ (h1,g1) =
/// (h0 ▷ (β1(g0)h1 · α(g0▷g1)h0⁻¹), g0 ▷ g1)`. Pair indices as in
/// [`semidirect_product`].
pub fn semidirect_xmod(act: &XModAction) -> Result<CrossedModule> {
    let (g, h) = (act.actor(), act.target());
    let top = Arc::new(semidirect_product(h.g1(), g.g1(), &act.beta1_mu())?);
    let bottom = Arc::new(semidirect_product(h.g0(), g.g0(), act.beta0())?);
    let (n1, n0) = (g.g1().order(), g.g0().order());
    let mu = top.elements().map(|x| h.mu(x / n1) * n0 + g.mu(x % n1)).collect();
    let perms = bottom
        .elements()
        .map(|y| {
            let (h0, g0) = (y / n0, y % n0);
            top.elements()
                .map(|x| {
                    let (h1, g1) = (x / n1, x % n1);
                    let moved = g.act(g0, g1);
                    let inner = h.g1().mul(act.beta1().act(g0, h1), act.alpha(moved, h.g0().inv(h0)));
                    h.act(h0, inner) * n1 + moved
                })
                .collect()
        })
        .collect();
    validate_xmod(&top, &bottom, mu, perms).map_err(|e| Error::invariant(&format!("semidirect crossed module: {e}"), vec![]))
}

/// The 2-group action induced by a crossed module action:
/// `φ(g1,g0)(h1,h0) = (β1(μg1·g0)h1 · α(g1)(β0(g0)h0), β0(g0)h0)`, `φ0 = β0`.
pub fn action_2group_from_xmod(act: &XModAction) -> Result<TwoGroupAction> {
    let (g, h) = (act.actor(), act.target());
    let p = Arc::new(xmod_to_two_group(g)?);
    let q = Arc::new(xmod_to_two_group(h)?);
    let (gn0, hn0) = (g.g0().order(), h.g0().order());
    let phi = p
        .arrows()
        .elements()
        .map(|a| {
            let (g1, g0) = (a / gn0, a % gn0);
            let m = g.g0().mul(g.mu(g1), g0);
            q.arrows()
                .elements()
                .map(|b| {
                    let (h1, h0) = (b / hn0, b % hn0);
                    let moved0 = act.beta0().act(g0, h0);
                    h.g1().mul(act.beta1().act(m, h1), act.alpha(g1, moved0)) * hn0 + moved0
                })
                .collect()
        })
        .collect();
    let phi =
        GroupAction::new(p.arrows(), q.arrows(), phi).map_err(|e| Error::invariant(&format!("induced 2-group action: {e}"), vec![]))?;
    let phi0 = act.beta0().clone();
    TwoGroupAction::from_actions(&p, &q, phi, phi0).map_err(|e| Error::invariant(&format!("induced 2-group action: {e}"), vec![]))
}

/// The crossed module action induced by a 2-group action, between the
/// kernel crossed modules: `α(p)q0 = φ(p)ιq0·(ιq0)⁻¹`,
/// `β(p0)(q,q0) = (φ(ιp0)q, φ0(p0)q0)`.
pub fn action_xmod_from_2group(act: &TwoGroupAction) -> Result<(XModAction, KernelXMod, KernelXMod)> {
    let (p, q) = (act.actor(), act.target());
    let kp = two_group_to_xmod(p)?;
    let kq = two_group_to_xmod(q)?;
    let qa = q.arrows();
    let alpha = kp
        .embedding
        .iter()
        .map(|&a| {
            q.objects()
                .elements()
                .map(|o| {
                    let u = q.unit(o);
                    let v = qa.mul(act.phi().act(a, u), qa.inv(u));
                    kq.position(v).expect("α lands in ker s")
                })
                .collect()
        })
        .collect();
    let beta1 = p
        .objects()
        .elements()
        .map(|o| kq.embedding.iter().map(|&b| kq.position(act.phi().act(p.unit(o), b)).expect("β1 preserves ker s")).collect())
        .collect();
    let beta1 = GroupAction::new(kp.xmod.g0(), kq.xmod.g1(), beta1)?;
    let beta0 = act.phi0().clone();
    let action = XModAction::new(&Arc::new(kp.xmod.clone()), &Arc::new(kq.xmod.clone()), alpha, beta1, beta0)
        .map_err(|e| Error::invariant(&format!("induced crossed module action: {e}"), vec![]))?;
    Ok((action, kp, kq))
}
