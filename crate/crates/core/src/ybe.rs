//! Set-theoretic braid maps and the categorical Yang–Baxter solution built
//! from a Rota–Baxter operator on a 2-group.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingroup::is_bijection;
use crate::rrb::{descendant_two_group, RrbTwoGroupOp};
use crate::twogroup::TwoGroup;

/// A map `X × X → X × X` on a carrier of size `n`, pair `(x, y)` at index
/// `x·n + y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetYBMap {
    n: usize,
    map: Vec<usize>,
}

impl SetYBMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let r = self.map[x * self.n + y];
        (r / self.n, r % self.n)
    }
}

fn braid_failure(n: usize, map: &[usize]) -> Option<Error> {
    let r = |x: usize, y: usize| {
        let v = map[x * n + y];
        (v / n, v % n)
    };
    let check = |a: usize| {
        for b in 0..n {
            for c in 0..n {
                // (R×Id)(Id×R)(R×Id)
                let (a1, b1) = r(a, b);
                let (b2, c2) = r(b1, c);
                let (a3, b3) = r(a1, b2);
                let lhs = [a3, b3, c2];
                // (Id×R)(R×Id)(Id×R)
                let (b1, c1) = r(b, c);
                let (a2, b2) = r(a, b1);
                let (b3, c3) = r(b2, c1);
                let rhs = [a2, b3, c3];
                if lhs != rhs {
                    return Some(Error::BraidFailure { triple: [a, b, c], lhs, rhs });
                }
            }
        }
        None
    };
    (0..n).into_par_iter().find_map_first(check)
}

/// Checks bijectivity and the braid relation on all `n³` triples; a failure
/// names the first triple in lexicographic order.
pub fn verify_set_ybe(n: usize, map: Vec<usize>) -> Result<SetYBMap> {
    crate::fingroup::check_len("R", &map, n * n, n * n)?;
    if !is_bijection(&map, n * n) {
        return Err(Error::NotBijective { which: "R".into() });
    }
    match braid_failure(n, &map) {
        Some(e) => Err(e),
        None => Ok(SetYBMap { n, map }),
    }
}

/// `(R, R0)` on arrows and objects of a 2-group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatYBSolution {
    pub r: SetYBMap,
    pub r0: SetYBMap,
}

/// `R_B(q,j) = (φ(Bq)j, (φ(Bq)j)† ·_B q ·_B j)` on arrows, and likewise on
/// objects, where `·_B` and `†` are taken in the descendant.
pub fn build_rb(op: &RrbTwoGroupOp) -> Result<CatYBSolution> {
    let desc = descendant_two_group(op)?;
    let act = op.action();
    let table = |b: &[usize], phi: &crate::fingroup::GroupAction, qb: &crate::fingroup::FiniteGroup| {
        let n = qb.order();
        let mut map = Vec::with_capacity(n * n);
        for q in qb.elements() {
            let perm = phi.perm(b[q]);
            for j in qb.elements() {
                let u = perm[j];
                map.push(u * n + qb.mul(qb.mul(qb.inv(u), q), j));
            }
        }
        SetYBMap { n, map }
    };
    Ok(CatYBSolution { r: table(op.b(), act.phi(), desc.group.arrows()), r0: table(op.b0(), act.phi0(), desc.group.objects()) })
}

/// Verifies both components as braid maps, then compatibility with
/// `s×s`, `t×t`, `ι×ι` and componentwise composition on `Q × Q`.
pub fn verify_cat_ybe(sol: CatYBSolution, q: &TwoGroup) -> Result<CatYBSolution> {
    let (n, n0) = (q.arrows().order(), q.objects().order());
    if sol.r.n != n || sol.r0.n != n0 {
        return Err(Error::BadLength { map: "R".into(), len: sol.r.n, expected: n });
    }
    let r = verify_set_ybe(n, sol.r.map)?;
    let r0 = verify_set_ybe(n0, sol.r0.map)?;
    let fail = |condition: &str, witness: Vec<usize>| Err(Error::FunctorialityFailure { condition: condition.into(), witness });
    for x in 0..n {
        for y in 0..n {
            let (u, v) = r.apply(x, y);
            if r0.apply(q.src(x), q.src(y)) != (q.src(u), q.src(v)) {
                return fail("R0∘(s×s) = (s×s)∘R", vec![x, y]);
            }
            if r0.apply(q.tgt(x), q.tgt(y)) != (q.tgt(u), q.tgt(v)) {
                return fail("R0∘(t×t) = (t×t)∘R", vec![x, y]);
            }
        }
    }
    for a in 0..n0 {
        for b in 0..n0 {
            let (u, v) = r0.apply(a, b);
            if r.apply(q.unit(a), q.unit(b)) != (q.unit(u), q.unit(v)) {
                return fail("R∘(ι×ι) = (ι×ι)∘R0", vec![a, b]);
            }
        }
    }
    let pairs: Vec<(usize, usize)> = q.composable_pairs().collect();
    let bad = pairs.par_iter().find_map_first(|&(x, x2)| {
        for &(y, y2) in &pairs {
            let lhs = r.apply(q.compose(x, x2), q.compose(y, y2));
            let ((u, v), (u2, v2)) = (r.apply(x, y), r.apply(x2, y2));
            let rhs = q.try_compose(u, u2).zip(q.try_compose(v, v2));
            if rhs != Some(lhs) {
                return Some(vec![x, x2, y, y2]);
            }
        }
        None
    });
    if let Some(w) = bad {
        return fail("R((q,j)*(q',j')) = R(q,j)*R(q',j')", w);
    }
    Ok(CatYBSolution { r, r0 })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fingroup::FiniteGroup;
    use crate::rrb::{twist_rrb, verify_rrb_two_group, Semidirect};
    use crate::twogroup::TwoGroupAction;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3))
    }

    #[test]
    fn identity_and_flip_are_braided() {
        let n = 4;
        verify_set_ybe(n, (0..n * n).collect()).unwrap();
        let flip = (0..n * n).map(|x| (x % n) * n + x / n).collect();
        verify_set_ybe(n, flip).unwrap();
    }

    #[test]
    fn conjugation_solution_on_s3() {
        let g = s3();
        let map = (0..36).map(|x| {
            let (q, j) = (x / 6, x % 6);
            j * 6 + g.mul(g.mul(g.inv(j), q), j)
        });
        verify_set_ybe(6, map.collect()).unwrap();
    }

    #[test]
    fn non_bijective_and_non_braided() {
        assert!(matches!(verify_set_ybe(2, vec![0; 4]), Err(Error::NotBijective { .. })));
        // swap two entries of the identity on a 2-element carrier
        let err = verify_set_ybe(2, vec![1, 0, 2, 3]).unwrap_err();
        assert!(matches!(err, Error::BraidFailure { .. }));
    }

    #[test]
    fn inverse_operator_on_s3() {
        let g = s3();
        let p = Arc::new(TwoGroup::discrete(&g));
        let ad = Arc::new(TwoGroupAction::adjoint(&p));
        let inv: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
        let op = verify_rrb_two_group(inv.clone(), inv, &ad).unwrap();
        let sol = verify_cat_ybe(build_rb(&op).unwrap(), &p).unwrap();
        for q in g.elements() {
            for j in g.elements() {
                assert_eq!(sol.r.apply(q, j), (g.mul(g.mul(g.inv(q), j), q), q));
            }
        }
    }

    #[test]
    fn mismatched_components_fail() {
        let g = s3();
        let p = Arc::new(TwoGroup::discrete(&g));
        let ad = Arc::new(TwoGroupAction::adjoint(&p));
        let inv: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
        let a = build_rb(&verify_rrb_two_group(inv.clone(), inv, &ad).unwrap()).unwrap();
        let b = build_rb(&verify_rrb_two_group(vec![0; 6], vec![0; 6], &ad).unwrap()).unwrap();
        let err = verify_cat_ybe(CatYBSolution { r: a.r, r0: b.r0 }, &p).unwrap_err();
        assert!(matches!(err, Error::FunctorialityFailure { .. }));
    }

    #[test]
    fn identity_twist_keeps_the_solution() {
        let g = s3();
        let p = Arc::new(TwoGroup::discrete(&g));
        let ad = Arc::new(TwoGroupAction::adjoint(&p));
        let inv: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
        let op = verify_rrb_two_group(inv.clone(), inv, &ad).unwrap();
        let sd = Semidirect::new(&ad).unwrap();
        let id: Vec<usize> = g.elements().collect();
        let twisted = twist_rrb(&op, &sd, &id, &id, &id, &id).unwrap();
        assert_eq!(build_rb(&twisted).unwrap(), build_rb(&op).unwrap());
    }
}
