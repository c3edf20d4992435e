//! The subgroup quadruple of a Rota–Baxter operator on a 2-group, its
//! Cayley transform between the two quotients, and the resulting unique
//! factorization `p = p⁺·(p⁻)⁻¹`.
//!
//! Every claimed property is checked under the ambient multiplication; a
//! failure is an `InvariantViolation` naming the property.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{is_bijection, is_normal, sorted_unique, FiniteGroup};
use crate::twogroup::{
    check_groupoid_morphism, quotient_two_group, semidirect_two_group, sub_two_group, SubTwoGroup, TwoGroup, TwoGroupAction,
    TwoGroupMorphism,
};

use super::construct::{descendant_two_group, plus_maps};
use super::RrbTwoGroupOp;

#[derive(Clone, Debug)]
pub struct CayleyFactorization {
    /// `Im B⁺`
    pub p_plus: SubTwoGroup,
    /// `Im B`
    pub p_minus: SubTwoGroup,
    /// `Ker B`
    pub k_plus: SubTwoGroup,
    /// `Ker B⁺`
    pub k_minus: SubTwoGroup,
    pub quotient_plus: Arc<TwoGroup>,
    pub quotient_minus: Arc<TwoGroup>,
    /// Cayley transform `P⁻/K⁻ → P⁺/K⁺` on arrows and objects.
    pub theta: Vec<usize>,
    pub theta0: Vec<usize>,
    /// `P^Θ` inside `P × P`, pair `(x, y)` at index `x·|P| + y`.
    pub p_theta: SubTwoGroup,
    /// `factors[p] = (p⁺, p⁻)` with `p = p⁺·(p⁻)⁻¹`.
    pub factors: Vec<(usize, usize)>,
    pub factors0: Vec<(usize, usize)>,
}

fn violation(lemma: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::invariant(&format!("{lemma}: {e}"), vec![])
}

fn image(map: &[usize]) -> Vec<usize> {
    sorted_unique(map)
}

fn kernel(map: &[usize], e: usize) -> Vec<usize> {
    (0..map.len()).filter(|&x| map[x] == e).collect()
}

/// Positions of `small` inside the sorted list `big`.
fn positions(big: &[usize], small: &[usize]) -> Option<Vec<usize>> {
    small.iter().map(|x| big.binary_search(x).ok()).collect()
}

fn normal_in(name: &str, k: &SubTwoGroup, p: &SubTwoGroup) -> Result<(Vec<usize>, Vec<usize>)> {
    let lemma = format!("{name} is a normal sub-2-group");
    let ka = positions(&p.arrows, &k.arrows).ok_or_else(|| Error::invariant(&lemma, k.arrows.clone()))?;
    let ko = positions(&p.objects, &k.objects).ok_or_else(|| Error::invariant(&lemma, k.objects.clone()))?;
    is_normal(p.group.arrows(), &ka).map_err(|(g, x)| Error::invariant(&lemma, vec![p.arrows[g], p.arrows[x]]))?;
    is_normal(p.group.objects(), &ko).map_err(|(g, x)| Error::invariant(&lemma, vec![p.objects[g], p.objects[x]]))?;
    Ok((ka, ko))
}

pub fn cayley_factorization(op: &RrbTwoGroupOp) -> Result<CayleyFactorization> {
    if !op.action().is_adjoint() {
        return Err(Error::NotAdjointAction);
    }
    let p = op.action().actor().clone();
    let (pa, po) = (p.arrows(), p.objects());
    let (bp, bp0) = plus_maps(op);
    let (b, b0) = (op.b(), op.b0());

    let sub = |name: &str, arrows: Vec<usize>, objects: Vec<usize>| {
        sub_two_group(&p, &arrows, &objects).map_err(violation(&format!("{name} is a sub-2-group")))
    };
    let p_plus = sub("Im B⁺", image(&bp), image(&bp0))?;
    let p_minus = sub("Im B", image(b), image(b0))?;
    let k_plus = sub("Ker B", kernel(b, pa.identity()), kernel(b0, po.identity()))?;
    let k_minus = sub("Ker B⁺", kernel(&bp, pa.identity()), kernel(&bp0, po.identity()))?;

    let (kpa, kpo) = normal_in("K⁺ in P⁺", &k_plus, &p_plus)?;
    let (kma, kmo) = normal_in("K⁻ in P⁻", &k_minus, &p_minus)?;
    let (quotient_plus, proj_plus, proj_plus0) = quotient_two_group(&p_plus.group, &kpa, &kpo).map_err(violation("P⁺/K⁺ is a 2-group"))?;
    let (quotient_minus, proj_minus, proj_minus0) =
        quotient_two_group(&p_minus.group, &kma, &kmo).map_err(violation("P⁻/K⁻ is a 2-group"))?;

    let theta =
        transform(b, &bp, &p_minus.arrows, &p_plus.arrows, &proj_minus, &proj_plus, quotient_minus.arrows().order(), "Θ well defined")?;
    let theta0 = transform(
        b0,
        &bp0,
        &p_minus.objects,
        &p_plus.objects,
        &proj_minus0,
        &proj_plus0,
        quotient_minus.objects().order(),
        "Θ0 well defined",
    )?;
    let theta_iso = TwoGroupMorphism::new(&quotient_minus, &quotient_plus, theta.clone(), theta0.clone())
        .map_err(violation("Θ is a 2-group homomorphism"))?;
    if !is_bijection(theta_iso.f.map(), quotient_plus.arrows().order())
        || !is_bijection(theta_iso.f0.map(), quotient_plus.objects().order())
    {
        return Err(Error::invariant("Θ is bijective", vec![]));
    }

    // P^Θ inside the direct product P × P
    let pp = Arc::new(p.as_ref().clone());
    let product = semidirect_two_group(&TwoGroupAction::trivial(&pp, &pp)).map_err(violation("P × P"))?;
    let (n, n0) = (pa.order(), po.order());
    let pair_set = |plus: &SubTwoGroup, minus: &SubTwoGroup, proj_p: &[usize], proj_m: &[usize], theta: &[usize], objects: bool| {
        let (pl, mi) = if objects { (&plus.objects, &minus.objects) } else { (&plus.arrows, &minus.arrows) };
        let width = if objects { n0 } else { n };
        let mut out = Vec::new();
        for (i, &x) in pl.iter().enumerate() {
            for (j, &y) in mi.iter().enumerate() {
                if theta[proj_m[j]] == proj_p[i] {
                    out.push(x * width + y);
                }
            }
        }
        out
    };
    let theta_arrows = pair_set(&p_plus, &p_minus, &proj_plus, &proj_minus, &theta, false);
    let theta_objects = pair_set(&p_plus, &p_minus, &proj_plus0, &proj_minus0, &theta0, true);
    let p_theta = sub_two_group(&product, &theta_arrows, &theta_objects).map_err(violation("P^Θ is a sub-2-group"))?;

    // σ(p) = (B⁺p, Bp) is an isomorphism P^B → P^Θ
    let desc = descendant_two_group(op)?;
    let sigma: Vec<usize> = pa.elements().map(|x| bp[x] * n + b[x]).collect();
    let sigma0: Vec<usize> = po.elements().map(|x| bp0[x] * n0 + b0[x]).collect();
    TwoGroupMorphism::new(&desc.group, &Arc::new(product.clone()), sigma.clone(), sigma0.clone())
        .map_err(violation("σ is a 2-group homomorphism"))?;
    if sorted_unique(&sigma) != p_theta.arrows || sigma.len() != p_theta.arrows.len() {
        return Err(Error::invariant("σ is a bijection onto P^Θ", sigma));
    }
    if sorted_unique(&sigma0) != p_theta.objects || sigma0.len() != p_theta.objects.len() {
        return Err(Error::invariant("σ0 is a bijection onto P0^Θ", sigma0));
    }

    // p = p⁺·(p⁻)⁻¹ with (p⁺, p⁻) unique in P^Θ
    let factor = |g: &FiniteGroup, set: &[usize], width: usize, bp: &[usize], b: &[usize], lemma: &str| {
        let mut found: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.order()];
        for &pair in set {
            let (x, y) = (pair / width, pair % width);
            found[g.mul(x, g.inv(y))].push((x, y));
        }
        g.elements()
            .map(|x| {
                let expect = (bp[x], b[x]);
                if found[x] != [expect] {
                    Err(Error::invariant(lemma, vec![x]))
                } else {
                    Ok(expect)
                }
            })
            .collect::<Result<Vec<_>>>()
    };
    let factors = factor(pa, &p_theta.arrows, n, &bp, b, "unique factorization in P^Θ")?;
    let factors0 = factor(po, &p_theta.objects, n0, &bp0, b0, "unique factorization in P0^Θ")?;
    check_groupoid_morphism(&p, &product, &sigma, &sigma0).map_err(violation("factor map is a groupoid morphism"))?;

    Ok(CayleyFactorization {
        p_plus,
        p_minus,
        k_plus,
        k_minus,
        quotient_plus: Arc::new(quotient_plus),
        quotient_minus: Arc::new(quotient_minus),
        theta,
        theta0,
        p_theta,
        factors,
        factors0,
    })
}

/// `Θ(coset of Bx) = coset of B⁺x` as a table on cosets, checked to be
/// well defined.
#[allow(clippy::too_many_arguments)]
fn transform(
    b: &[usize],
    bp: &[usize],
    minus: &[usize],
    plus: &[usize],
    proj_minus: &[usize],
    proj_plus: &[usize],
    size: usize,
    lemma: &str,
) -> Result<Vec<usize>> {
    let mut theta = vec![usize::MAX; size];
    for x in 0..b.len() {
        let i = minus.binary_search(&b[x]).map_err(|_| Error::invariant(lemma, vec![x]))?;
        let j = plus.binary_search(&bp[x]).map_err(|_| Error::invariant(lemma, vec![x]))?;
        let (from, to) = (proj_minus[i], proj_plus[j]);
        if theta[from] != usize::MAX && theta[from] != to {
            return Err(Error::invariant(lemma, vec![x]));
        }
        theta[from] = to;
    }
    Ok(theta)
}
