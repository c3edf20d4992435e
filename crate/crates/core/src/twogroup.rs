//! Finite strict 2-groups: a groupoid `P ⇉ P0` whose arrow and object sets
//! are groups and whose structure maps are homomorphisms.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fingroup::{
    check_hom, check_len, greedy_generators, quotient, same_group, semidirect_product, subgroup, FiniteGroup, GroupAction, GroupHom,
};

/// A strict 2-group. Composition `p*p'` (defined when `src p = tgt p'`) is
/// derived from the group structure as `p·ι(src p)⁻¹·p'` and stored once.
#[derive(Clone, Debug)]
pub struct TwoGroup {
    arrows: Arc<FiniteGroup>,
    objects: Arc<FiniteGroup>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    unit: Vec<usize>,
    /// Arrows grouped by source / target object, each bucket sorted.
    by_src: Vec<Vec<usize>>,
    by_tgt: Vec<Vec<usize>>,
    /// Position of each arrow inside its `by_tgt` bucket.
    pos_tgt: Vec<usize>,
    /// Size of every fibre of `tgt`.
    fibre: usize,
    /// `comp[p·fibre + pos_tgt[p']] = p*p'` for composable pairs.
    comp: Vec<usize>,
}

impl PartialEq for TwoGroup {
    fn eq(&self, other: &Self) -> bool {
        self.arrows == other.arrows
            && self.objects == other.objects
            && self.src == other.src
            && self.tgt == other.tgt
            && self.unit == other.unit
    }
}

impl Eq for TwoGroup {}

/// Assembles and checks a 2-group from its groups and structure maps.
pub fn validate_two_group(
    arrows: &Arc<FiniteGroup>,
    objects: &Arc<FiniteGroup>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    unit: Vec<usize>,
) -> Result<TwoGroup> {
    check_hom("src", arrows, objects, &src)?;
    check_hom("tgt", arrows, objects, &tgt)?;
    check_hom("unit", objects, arrows, &unit)?;
    for o in objects.elements() {
        if src[unit[o]] != o {
            return Err(Error::GroupoidAxiomFailure { axiom: "src∘unit = id".into(), witness: vec![o] });
        }
        if tgt[unit[o]] != o {
            return Err(Error::GroupoidAxiomFailure { axiom: "tgt∘unit = id".into(), witness: vec![o] });
        }
    }
    let (n, m) = (arrows.order(), objects.order());
    let mut by_src = vec![Vec::new(); m];
    let mut by_tgt = vec![Vec::new(); m];
    let mut pos_tgt = vec![0; n];
    for p in arrows.elements() {
        by_src[src[p]].push(p);
        pos_tgt[p] = by_tgt[tgt[p]].len();
        by_tgt[tgt[p]].push(p);
    }
    let fibre = n / m;
    let mut comp = Vec::with_capacity(n * fibre);
    for p in arrows.elements() {
        let left = arrows.mul(p, arrows.inv(unit[src[p]]));
        for &q in &by_tgt[src[p]] {
            comp.push(arrows.mul(left, q));
        }
    }
    let g = TwoGroup { arrows: arrows.clone(), objects: objects.clone(), src, tgt, unit, by_src, by_tgt, pos_tgt, fibre, comp };
    g.check_groupoid_axioms()?;
    g.check_interchange()?;
    Ok(g)
}

impl TwoGroup {
    fn check_groupoid_axioms(&self) -> Result<()> {
        let fail = |axiom: &str, witness: Vec<usize>| Err(Error::GroupoidAxiomFailure { axiom: axiom.into(), witness });
        for p in self.arrows.elements() {
            for &q in &self.by_tgt[self.src[p]] {
                let c = self.compose(p, q);
                if self.src[c] != self.src[q] {
                    return fail("src(p*p') = src p'", vec![p, q]);
                }
                if self.tgt[c] != self.tgt[p] {
                    return fail("tgt(p*p') = tgt p", vec![p, q]);
                }
                for &r in &self.by_tgt[self.src[q]] {
                    if self.compose(c, r) != self.compose(p, self.compose(q, r)) {
                        return fail("associativity", vec![p, q, r]);
                    }
                }
            }
            if self.compose(self.unit[self.tgt[p]], p) != p {
                return fail("left unit", vec![p]);
            }
            if self.compose(p, self.unit[self.src[p]]) != p {
                return fail("right unit", vec![p]);
            }
            let q = self.groupoid_inverse(p);
            if self.src[q] != self.tgt[p]
                || self.tgt[q] != self.src[p]
                || self.compose(p, q) != self.unit[self.tgt[p]]
                || self.compose(q, p) != self.unit[self.src[p]]
            {
                return fail("groupoid inverse", vec![p]);
            }
        }
        Ok(())
    }

    /// `*` is a homomorphism on the group of composable pairs; checked
    /// against a generating set of that group.
    fn check_interchange(&self) -> Result<()> {
        let pairs: Vec<(usize, usize)> = self.composable_pairs().collect();
        let np = pairs.len();
        let mul = |x: usize, y: usize| {
            let (p, q) = pairs[x];
            let (p2, q2) = pairs[y];
            self.pair_index(self.arrows.mul(p, p2), self.arrows.mul(q, q2))
        };
        let e = self.arrows.identity();
        let order: Vec<usize> = (0..np).collect();
        let gens = greedy_generators(np, self.pair_index(e, e), &order, mul);
        let failure = (0..np).into_par_iter().find_map_first(|x| {
            let (p, p2) = pairs[x];
            gens.iter().find_map(|&y| {
                let (q, q2) = pairs[y];
                let lhs = self.compose(self.arrows.mul(p, q), self.arrows.mul(p2, q2));
                let rhs = self.arrows.mul(self.compose(p, p2), self.compose(q, q2));
                (lhs != rhs).then_some(Error::InterchangeFailure { p, p2, q, q2 })
            })
        });
        failure.map_or(Ok(()), Err)
    }

    pub fn arrows(&self) -> &Arc<FiniteGroup> {
        &self.arrows
    }

    pub fn objects(&self) -> &Arc<FiniteGroup> {
        &self.objects
    }

    #[inline]
    pub fn src(&self, p: usize) -> usize {
        self.src[p]
    }

    #[inline]
    pub fn tgt(&self, p: usize) -> usize {
        self.tgt[p]
    }

    #[inline]
    pub fn unit(&self, o: usize) -> usize {
        self.unit[o]
    }

    pub fn src_map(&self) -> &[usize] {
        &self.src
    }

    pub fn tgt_map(&self) -> &[usize] {
        &self.tgt
    }

    pub fn unit_map(&self) -> &[usize] {
        &self.unit
    }

    pub fn by_src(&self, o: usize) -> &[usize] {
        &self.by_src[o]
    }

    pub fn by_tgt(&self, o: usize) -> &[usize] {
        &self.by_tgt[o]
    }

    #[inline]
    pub fn composable(&self, p: usize, q: usize) -> bool {
        self.src[p] == self.tgt[q]
    }

    /// `p*q`; the pair must be composable.
    #[inline]
    pub fn compose(&self, p: usize, q: usize) -> usize {
        debug_assert!(self.composable(p, q));
        self.comp[p * self.fibre + self.pos_tgt[q]]
    }

    pub fn try_compose(&self, p: usize, q: usize) -> Option<usize> {
        self.composable(p, q).then(|| self.compose(p, q))
    }

    /// Dense index of a composable pair.
    #[inline]
    pub fn pair_index(&self, p: usize, q: usize) -> usize {
        p * self.fibre + self.pos_tgt[q]
    }

    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.elements().flat_map(move |p| self.by_tgt[self.src[p]].iter().map(move |&q| (p, q)))
    }

    pub fn pair_count(&self) -> usize {
        self.comp.len()
    }

    /// `ι(sp)·p⁻¹·ι(tp)`
    pub fn groupoid_inverse(&self, p: usize) -> usize {
        let a = &self.arrows;
        a.mul(a.mul(self.unit[self.src[p]], a.inv(p)), self.unit[self.tgt[p]])
    }

    pub fn ker_src(&self) -> Vec<usize> {
        self.by_src[self.objects.identity()].clone()
    }

    pub fn ker_tgt(&self) -> Vec<usize> {
        self.by_tgt[self.objects.identity()].clone()
    }

    /// `G ⇉ G` with identity structure maps.
    pub fn discrete(g: &Arc<FiniteGroup>) -> TwoGroup {
        let id: Vec<usize> = g.elements().collect();
        validate_two_group(g, g, id.clone(), id.clone(), id).expect("discrete 2-group")
    }

    /// The same groupoid carrying a different arrow and object multiplication.
    pub fn with_groups(&self, arrows: &Arc<FiniteGroup>, objects: &Arc<FiniteGroup>) -> Result<TwoGroup> {
        validate_two_group(arrows, objects, self.src.clone(), self.tgt.clone(), self.unit.clone())
    }
}

/// The four conditions for `(f, f0)` to be a morphism of groupoids
/// `from → to`; `f` and `f0` need not be homomorphisms.
pub fn check_groupoid_morphism(from: &TwoGroup, to: &TwoGroup, f: &[usize], f0: &[usize]) -> Result<()> {
    check_len("arrow map", f, from.arrows.order(), to.arrows.order())?;
    check_len("object map", f0, from.objects.order(), to.objects.order())?;
    let fail = |condition: &str, witness: Vec<usize>| Err(Error::NotGroupoidMorphism { condition: condition.into(), witness });
    for p in from.arrows.elements() {
        if to.src(f[p]) != f0[from.src(p)] {
            return fail("src∘f = f0∘src", vec![p]);
        }
        if to.tgt(f[p]) != f0[from.tgt(p)] {
            return fail("tgt∘f = f0∘tgt", vec![p]);
        }
    }
    for o in from.objects.elements() {
        if f[from.unit(o)] != to.unit(f0[o]) {
            return fail("f∘unit = unit∘f0", vec![o]);
        }
    }
    let pairs: Vec<(usize, usize)> = from.composable_pairs().collect();
    let bad = pairs.par_iter().find_first(|&&(p, q)| f[from.compose(p, q)] != to.compose(f[p], f[q]));
    if let Some(&(p, q)) = bad {
        return fail("f(p*p') = f(p)*f(p')", vec![p, q]);
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct TwoGroupMorphism {
    pub f: GroupHom,
    pub f0: GroupHom,
}

impl TwoGroupMorphism {
    pub fn new(from: &TwoGroup, to: &TwoGroup, f: Vec<usize>, f0: Vec<usize>) -> Result<Self> {
        let f = GroupHom::new("f", from.arrows(), to.arrows(), f)?;
        let f0 = GroupHom::new("f0", from.objects(), to.objects(), f0)?;
        check_groupoid_morphism(from, to, f.map(), f0.map())?;
        Ok(TwoGroupMorphism { f, f0 })
    }
}

/// An action of the 2-group `actor` on `target`: `phi` on arrows and `phi0`
/// on objects, jointly a groupoid morphism compatible with `*`.
#[derive(Clone, Debug)]
pub struct TwoGroupAction {
    actor: Arc<TwoGroup>,
    target: Arc<TwoGroup>,
    phi: GroupAction,
    phi0: GroupAction,
}

/// Checks raw permutation tables as a 2-group action.
pub fn validate_two_group_action(
    actor: &Arc<TwoGroup>,
    target: &Arc<TwoGroup>,
    phi: Vec<Vec<usize>>,
    phi0: Vec<Vec<usize>>,
) -> Result<TwoGroupAction> {
    let phi = GroupAction::new(actor.arrows(), target.arrows(), phi)?;
    let phi0 = GroupAction::new(actor.objects(), target.objects(), phi0)?;
    TwoGroupAction::from_actions(actor, target, phi, phi0)
}

impl TwoGroupAction {
    pub fn from_actions(actor: &Arc<TwoGroup>, target: &Arc<TwoGroup>, phi: GroupAction, phi0: GroupAction) -> Result<Self> {
        if !same_group(phi.actor(), actor.arrows()) || !same_group(phi.target(), target.arrows()) {
            return Err(Error::ActionMismatch("arrow action does not match the 2-groups".into()));
        }
        if !same_group(phi0.actor(), actor.objects()) || !same_group(phi0.target(), target.objects()) {
            return Err(Error::ActionMismatch("object action does not match the 2-groups".into()));
        }
        let (p, q) = (actor.as_ref(), target.as_ref());
        let fail = |condition: &str, witness: Vec<usize>| Err(Error::NotGroupoidMorphism { condition: condition.into(), witness });
        // Both sides of each condition are homomorphic in each argument, so
        // generators suffice.
        for &a in p.arrows().generators() {
            for &x in q.arrows().generators() {
                let y = phi.act(a, x);
                if q.src(y) != phi0.act(p.src(a), q.src(x)) {
                    return fail("src", vec![a, x]);
                }
                if q.tgt(y) != phi0.act(p.tgt(a), q.tgt(x)) {
                    return fail("tgt", vec![a, x]);
                }
            }
        }
        for &a0 in p.objects().generators() {
            for &x0 in q.objects().generators() {
                if q.unit(phi0.act(a0, x0)) != phi.act(p.unit(a0), q.unit(x0)) {
                    return fail("unit", vec![a0, x0]);
                }
            }
        }
        let gens_p = pair_generators(p);
        let gens_q = pair_generators(q);
        for &(a, a2) in &gens_p {
            for &(x, x2) in &gens_q {
                let lhs = phi.act(p.compose(a, a2), q.compose(x, x2));
                let rhs = q.compose(phi.act(a, x), phi.act(a2, x2));
                if lhs != rhs {
                    return Err(Error::EqPhiFailure { witness: vec![a, a2, x, x2] });
                }
            }
        }
        Ok(TwoGroupAction { actor: actor.clone(), target: target.clone(), phi, phi0 })
    }

    /// Conjugation on arrows and on objects.
    pub fn adjoint(p: &Arc<TwoGroup>) -> Self {
        TwoGroupAction {
            actor: p.clone(),
            target: p.clone(),
            phi: GroupAction::adjoint(p.arrows()),
            phi0: GroupAction::adjoint(p.objects()),
        }
    }

    pub fn trivial(actor: &Arc<TwoGroup>, target: &Arc<TwoGroup>) -> Self {
        TwoGroupAction {
            actor: actor.clone(),
            target: target.clone(),
            phi: GroupAction::trivial(actor.arrows(), target.arrows()),
            phi0: GroupAction::trivial(actor.objects(), target.objects()),
        }
    }

    pub fn actor(&self) -> &Arc<TwoGroup> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<TwoGroup> {
        &self.target
    }

    pub fn phi(&self) -> &GroupAction {
        &self.phi
    }

    pub fn phi0(&self) -> &GroupAction {
        &self.phi0
    }

    /// True when this is the conjugation action of a 2-group on itself.
    pub fn is_adjoint(&self) -> bool {
        if !Arc::ptr_eq(&self.actor, &self.target) && *self.actor != *self.target {
            return false;
        }
        let a = self.actor.arrows();
        let o = self.actor.objects();
        a.generators().iter().all(|&g| a.elements().all(|h| self.phi.act(g, h) == a.conj(g, h)))
            && o.generators().iter().all(|&g| o.elements().all(|h| self.phi0.act(g, h) == o.conj(g, h)))
    }
}

/// A generating set of the group of composable pairs.
fn pair_generators(g: &TwoGroup) -> Vec<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = g.composable_pairs().collect();
    let a = g.arrows();
    let mul = |x: usize, y: usize| {
        let (p, q) = pairs[x];
        let (p2, q2) = pairs[y];
        g.pair_index(a.mul(p, p2), a.mul(q, q2))
    };
    let e = a.identity();
    let order: Vec<usize> = (0..pairs.len()).collect();
    greedy_generators(pairs.len(), g.pair_index(e, e), &order, mul).into_iter().map(|x| pairs[x]).collect()
}

/// `Q ⋊ P ⇉ Q0 ⋊ P0` with componentwise structure maps. Arrow `(q,p)` has
/// index `q·|P| + p`, object `(q0,p0)` has index `q0·|P0| + p0`.
pub fn semidirect_two_group(act: &TwoGroupAction) -> Result<TwoGroup> {
    let (p, q) = (act.actor(), act.target());
    let arrows = Arc::new(semidirect_product(q.arrows(), p.arrows(), act.phi())?);
    let objects = Arc::new(semidirect_product(q.objects(), p.objects(), act.phi0())?);
    let (np, np0) = (p.arrows().order(), p.objects().order());
    let n = arrows.order();
    let src = (0..n).map(|x| q.src(x / np) * np0 + p.src(x % np)).collect();
    let tgt = (0..n).map(|x| q.tgt(x / np) * np0 + p.tgt(x % np)).collect();
    let unit = (0..objects.order()).map(|o| q.unit(o / np0) * np + p.unit(o % np0)).collect();
    validate_two_group(&arrows, &objects, src, tgt, unit)
        .map_err(|e| Error::invariant(&format!("semidirect 2-group is a 2-group: {e}"), vec![]))
}

/// The sub-2-group on the given arrow and object sets.
#[derive(Clone, Debug)]
pub struct SubTwoGroup {
    pub group: TwoGroup,
    pub arrows: Vec<usize>,
    pub objects: Vec<usize>,
}

pub fn sub_two_group(g: &TwoGroup, arrow_set: &[usize], object_set: &[usize]) -> Result<SubTwoGroup> {
    let (a, arrows) = subgroup(g.arrows(), arrow_set)?;
    let (o, objects) = subgroup(g.objects(), object_set)?;
    let mut opos = vec![usize::MAX; g.objects().order()];
    for (i, &x) in objects.iter().enumerate() {
        opos[x] = i;
    }
    let mut apos = vec![usize::MAX; g.arrows().order()];
    for (i, &x) in arrows.iter().enumerate() {
        apos[x] = i;
    }
    let restrict = |map: &dyn Fn(usize) -> usize, domain: &[usize], pos: &[usize]| -> Result<Vec<usize>> {
        domain
            .iter()
            .map(|&x| {
                let y = map(x);
                if pos[y] == usize::MAX {
                    Err(Error::NotSubgroup { witness: vec![x, y] })
                } else {
                    Ok(pos[y])
                }
            })
            .collect()
    };
    let src = restrict(&|x| g.src(x), &arrows, &opos)?;
    let tgt = restrict(&|x| g.tgt(x), &arrows, &opos)?;
    let unit = restrict(&|x| g.unit(x), &objects, &apos)?;
    let group = validate_two_group(&a, &o, src, tgt, unit)?;
    Ok(SubTwoGroup { group, arrows, objects })
}

/// `P/K ⇉ P0/K0` for a normal sub-2-group, with the projections.
pub fn quotient_two_group(g: &TwoGroup, k: &[usize], k0: &[usize]) -> Result<(TwoGroup, Vec<usize>, Vec<usize>)> {
    let qa = quotient(g.arrows(), k)?;
    let qo = quotient(g.objects(), k0)?;
    let proj = qa.projection.map().to_vec();
    let proj0 = qo.projection.map().to_vec();
    let mut src = vec![usize::MAX; qa.group.order()];
    let mut tgt = vec![usize::MAX; qa.group.order()];
    let mut unit = vec![usize::MAX; qo.group.order()];
    let set = |table: &mut Vec<usize>, at: usize, v: usize, witness: usize| -> Result<()> {
        if table[at] != usize::MAX && table[at] != v {
            return Err(Error::NotSubgroup { witness: vec![witness] });
        }
        table[at] = v;
        Ok(())
    };
    for p in g.arrows().elements() {
        set(&mut src, proj[p], proj0[g.src(p)], p)?;
        set(&mut tgt, proj[p], proj0[g.tgt(p)], p)?;
    }
    for o in g.objects().elements() {
        set(&mut unit, proj0[o], proj[g.unit(o)], o)?;
    }
    let group = validate_two_group(&qa.group, &qo.group, src, tgt, unit)?;
    Ok((group, proj, proj0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_over_t() -> Arc<TwoGroup> {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let t = Arc::new(FiniteGroup::trivial());
        Arc::new(validate_two_group(&z2, &t, vec![0, 0], vec![0, 0], vec![0]).unwrap())
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3))
    }

    /// S3 ⋊ S3 ⇉ S3 with s(p,l) = l and t(p,l) = p·l.
    fn s3_pair() -> Arc<TwoGroup> {
        let g = s3();
        let a = Arc::new(semidirect_product(&g, &g, &GroupAction::adjoint(&g)).unwrap());
        let src = a.elements().map(|x| x % 6).collect();
        let tgt = a.elements().map(|x| g.mul(x / 6, x % 6)).collect();
        let unit = g.elements().map(|l| g.identity() * 6 + l).collect();
        Arc::new(validate_two_group(&a, &g, src, tgt, unit).unwrap())
    }

    #[test]
    fn one_object_composition_is_multiplication() {
        let p = z2_over_t();
        assert_eq!(p.compose(1, 1), 0);
        assert_eq!(p.compose(0, 1), 1);
    }

    #[test]
    fn discrete_has_only_identities() {
        let p = TwoGroup::discrete(&s3());
        assert_eq!(p.pair_count(), 6);
        assert_eq!(p.ker_src(), vec![0]);
    }

    #[test]
    fn s3_pair_is_a_two_group() {
        let p = s3_pair();
        assert_eq!(p.arrows().order(), 36);
        assert_eq!(p.pair_count(), 36 * 6);
    }

    #[test]
    fn interchange_failure_is_detected() {
        // S3 ⇉ T: ker s = ker t = S3 does not commute with itself
        let g = s3();
        let t = Arc::new(FiniteGroup::trivial());
        let err = validate_two_group(&g, &t, vec![0; 6], vec![0; 6], vec![0]).unwrap_err();
        assert!(matches!(err, Error::InterchangeFailure { .. }));
    }

    #[test]
    fn non_hom_src_is_rejected() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let err = validate_two_group(&z2, &z2, vec![1, 0], vec![0, 1], vec![0, 1]).unwrap_err();
        assert!(matches!(err, Error::NotHom { ref map, .. } if map == "src"));
    }

    #[test]
    fn groupoid_inverse_formula() {
        let p = s3_pair();
        for x in p.arrows().elements() {
            let y = p.groupoid_inverse(x);
            assert_eq!(p.compose(x, y), p.unit(p.tgt(x)));
        }
    }

    #[test]
    fn kernel_identity() {
        let p = s3_pair();
        let a = p.arrows();
        for &q in &p.ker_src() {
            for &q2 in &p.ker_src() {
                let left = a.mul(q, p.unit(p.tgt(q2)));
                assert_eq!(p.compose(left, q2), a.mul(q, q2));
            }
        }
    }

    #[test]
    fn adjoint_and_trivial_actions_validate() {
        for p in [z2_over_t(), s3_pair(), Arc::new(TwoGroup::discrete(&s3()))] {
            let adj = TwoGroupAction::adjoint(&p);
            TwoGroupAction::from_actions(&p, &p, adj.phi().clone(), adj.phi0().clone()).unwrap();
            let triv = TwoGroupAction::trivial(&p, &p);
            TwoGroupAction::from_actions(&p, &p, triv.phi().clone(), triv.phi0().clone()).unwrap();
            assert!(adj.is_adjoint());
        }
    }

    #[test]
    fn left_multiplication_is_not_an_action_by_automorphisms() {
        let p = s3_pair();
        let a = p.arrows();
        let o = p.objects();
        let phi = a.elements().map(|x| a.elements().map(|y| a.mul(x, y)).collect()).collect();
        let phi0 = o.elements().map(|x| o.elements().map(|y| o.mul(x, y)).collect()).collect();
        let err = validate_two_group_action(&p, &p, phi, phi0).unwrap_err();
        assert!(matches!(err, Error::NotAutomorphism { .. }));
    }

    #[test]
    fn semidirect_of_one_object_groups() {
        let p = z2_over_t();
        let sd = semidirect_two_group(&TwoGroupAction::adjoint(&p)).unwrap();
        assert_eq!(sd.arrows().order(), 4);
        assert_eq!(sd.objects().order(), 1);
    }

    #[test]
    fn semidirect_composition_is_componentwise() {
        let g = Arc::new(TwoGroup::discrete(&s3()));
        let p = s3_pair();
        let act = TwoGroupAction::trivial(&g, &p);
        let sd = semidirect_two_group(&act).unwrap();
        let n = g.arrows().order();
        for (x, y) in sd.composable_pairs() {
            let c = sd.compose(x, y);
            assert_eq!(c / n, p.compose(x / n, y / n));
            assert_eq!(c % n, g.compose(x % n, y % n));
        }
    }

    #[test]
    fn semidirect_kernel_of_source() {
        let p = s3_pair();
        let sd = semidirect_two_group(&TwoGroupAction::adjoint(&p)).unwrap();
        assert_eq!(sd.arrows().order(), 1296);
        let n = p.arrows().order();
        let mut expected: Vec<usize> =
            sd.arrows().elements().filter(|&x| p.src(x / n) == p.objects().identity() && p.src(x % n) == p.objects().identity()).collect();
        expected.sort();
        assert_eq!(sd.ker_src(), expected);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let p = s3_pair();
        let all: Vec<usize> = p.arrows().elements().collect();
        let objs: Vec<usize> = p.objects().elements().collect();
        let (q, _, _) = quotient_two_group(&p, &all, &objs).unwrap();
        assert_eq!(q.arrows().order(), 1);
    }
}
