//! Brute-force oracles over raw tables. Nothing here calls the library's
//! checkers: only table data crosses over, so agreement is evidence.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rota2::fingroup::{FiniteGroup, GroupAction};
use rota2::twogroup::{TwoGroup, TwoGroupAction};
use rota2::xmod::{CrossedModule, XModAction};

/// Relative Rota–Baxter operators on `S3` for the conjugation action,
/// counted once by running [`rrb_oracle`] over all `6^6` maps.
pub const N_S3: usize = 8;

/// The largest `|codomain|^|domain|` for which plain enumeration is run.
pub const BRUTE_FORCE_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grp {
    pub rows: Vec<Vec<usize>>,
}

impl Grp {
    pub fn of(g: &FiniteGroup) -> Self {
        Grp { rows: g.rows() }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    pub fn e(&self) -> usize {
        (0..self.n()).find(|&e| (0..self.n()).all(|x| self.rows[e][x] == x && self.rows[x][e] == x)).expect("identity")
    }

    pub fn inv(&self, a: usize) -> usize {
        let e = self.e();
        (0..self.n()).find(|&b| self.rows[a][b] == e).expect("inverse")
    }
}

/// Closure, identity, inverses and associativity, straight from the axioms.
pub fn is_group(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return false;
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x)) else { return false };
    if !(0..n).all(|a| (0..n).any(|b| rows[a][b] == e && rows[b][a] == e)) {
        return false;
    }
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])))
}

pub fn is_hom(f: &[usize], a: &Grp, b: &Grp) -> bool {
    f.len() == a.n() && f.iter().all(|&x| x < b.n()) && (0..a.n()).all(|x| (0..a.n()).all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y])))
}

/// `perms[g]` is an automorphism of `h` and `g ↦ perms[g]` a homomorphism.
pub fn is_action(perms: &[Vec<usize>], g: &Grp, h: &Grp) -> bool {
    if perms.len() != g.n() {
        return false;
    }
    let autos = perms.iter().all(|p| {
        let mut seen = vec![false; h.n()];
        p.len() == h.n() && p.iter().all(|&x| x < h.n() && !std::mem::replace(&mut seen[x], true)) && is_hom(p, h, h)
    });
    autos && (0..g.n()).all(|x| (0..g.n()).all(|y| (0..h.n()).all(|v| perms[g.mul(x, y)][v] == perms[x][perms[y][v]])))
}

#[derive(Clone, Debug)]
pub struct TwoGrp {
    pub arrows: Grp,
    pub objects: Grp,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub u: Vec<usize>,
}

impl TwoGrp {
    pub fn of(p: &TwoGroup) -> Self {
        TwoGrp {
            arrows: Grp::of(p.arrows()),
            objects: Grp::of(p.objects()),
            s: p.src_map().to_vec(),
            t: p.tgt_map().to_vec(),
            u: p.unit_map().to_vec(),
        }
    }

    /// `p ∘ q` for `t(q) = s(p)`: `p · u(s p)⁻¹ · q`.
    pub fn compose(&self, p: usize, q: usize) -> usize {
        let a = &self.arrows;
        a.mul(a.mul(p, a.inv(self.u[self.s[p]])), q)
    }

    pub fn composable(&self) -> Vec<(usize, usize)> {
        let n = self.arrows.n();
        (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).filter(|&(p, q)| self.t[q] == self.s[p]).collect()
    }
}

/// Groups, homomorphic structure maps, `s∘u = t∘u = id`, and the
/// interchange law `(p∘q)(p'∘q') = (pp')∘(qq')`.
pub fn is_two_group(p: &TwoGrp) -> bool {
    if !is_group(&p.arrows.rows) || !is_group(&p.objects.rows) {
        return false;
    }
    let (a, o) = (&p.arrows, &p.objects);
    if !is_hom(&p.s, a, o) || !is_hom(&p.t, a, o) || !is_hom(&p.u, o, a) {
        return false;
    }
    if (0..o.n()).any(|x| p.s[p.u[x]] != x || p.t[p.u[x]] != x) {
        return false;
    }
    let pairs = p.composable();
    pairs
        .iter()
        .all(|&(x, y)| pairs.iter().all(|&(x2, y2)| a.mul(p.compose(x, y), p.compose(x2, y2)) == p.compose(a.mul(x, x2), a.mul(y, y2))))
}

/// `(f, f0)` commutes with source, target, unit and composition.
pub fn is_groupoid_morphism(from: &TwoGrp, to: &TwoGrp, f: &[usize], f0: &[usize]) -> bool {
    (0..from.arrows.n()).all(|x| f0[from.s[x]] == to.s[f[x]] && f0[from.t[x]] == to.t[f[x]])
        && (0..from.objects.n()).all(|o| f[from.u[o]] == to.u[f0[o]])
        && from.composable().iter().all(|&(x, y)| f[from.compose(x, y)] == to.compose(f[x], f[y]))
}

#[derive(Clone, Debug)]
pub struct XMod {
    pub g1: Grp,
    pub g0: Grp,
    pub mu: Vec<usize>,
    /// `act[g0][g1]`
    pub act: Vec<Vec<usize>>,
}

impl XMod {
    pub fn of(x: &CrossedModule) -> Self {
        XMod { g1: Grp::of(x.g1()), g0: Grp::of(x.g0()), mu: x.mu_hom().map().to_vec(), act: x.action().perms().to_vec() }
    }
}

/// `μ` a homomorphism, `▷` an action by automorphisms, and both Peiffer
/// identities.
pub fn is_xmod(x: &XMod) -> bool {
    if !is_group(&x.g1.rows) || !is_group(&x.g0.rows) || !is_hom(&x.mu, &x.g1, &x.g0) || !is_action(&x.act, &x.g0, &x.g1) {
        return false;
    }
    let (g1, g0) = (&x.g1, &x.g0);
    let equivariant = (0..g0.n()).all(|a| (0..g1.n()).all(|b| x.mu[x.act[a][b]] == g0.mul(g0.mul(a, x.mu[b]), g0.inv(a))));
    let peiffer = (0..g1.n()).all(|a| (0..g1.n()).all(|b| x.act[x.mu[a]][b] == g1.mul(g1.mul(a, b), g1.inv(a))));
    equivariant && peiffer
}

/// Every map `0..domain → 0..codomain`, in lexicographic order.
pub fn all_maps(domain: usize, codomain: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![0; domain]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut i = domain;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < codomain {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    })
}

pub fn map_count(domain: usize, codomain: usize) -> u64 {
    (codomain as u64).checked_pow(domain as u32).unwrap_or(u64::MAX)
}

/// All `B: H → G` with `B(h)B(h') = B(h · φ(Bh)h')`, where `phi[g][h]` is
/// the action of `G` on `H`.
pub fn rrb_oracle(g: &Grp, h: &Grp, phi: &[Vec<usize>]) -> Vec<Vec<usize>> {
    all_maps(h.n(), g.n()).filter(|b| (0..h.n()).all(|x| (0..h.n()).all(|y| g.mul(b[x], b[y]) == b[h.mul(x, phi[b[x]][y])]))).collect()
}

/// All `D: G → H` with `D(gg') = D(g) · φ(g)D(g')`.
pub fn crossed_hom_oracle(g: &Grp, h: &Grp, phi: &[Vec<usize>]) -> Vec<Vec<usize>> {
    all_maps(g.n(), h.n()).filter(|d| (0..g.n()).all(|x| (0..g.n()).all(|y| d[g.mul(x, y)] == h.mul(d[x], phi[x][d[y]])))).collect()
}

pub struct TwoAction {
    pub actor: TwoGrp,
    pub target: TwoGrp,
    pub phi: Vec<Vec<usize>>,
    pub phi0: Vec<Vec<usize>>,
}

impl TwoAction {
    pub fn of(a: &TwoGroupAction) -> Self {
        TwoAction {
            actor: TwoGrp::of(a.actor()),
            target: TwoGrp::of(a.target()),
            phi: a.phi().perms().to_vec(),
            phi0: a.phi0().perms().to_vec(),
        }
    }

    /// Whether every component search stays within [`BRUTE_FORCE_LIMIT`].
    pub fn small(&self) -> bool {
        map_count(self.target.arrows.n(), self.actor.arrows.n()) <= BRUTE_FORCE_LIMIT
            && map_count(self.target.objects.n(), self.actor.objects.n()) <= BRUTE_FORCE_LIMIT
    }
}

/// Componentwise operators that together form a groupoid morphism `Q → P`.
pub fn rrb_two_group_oracle(a: &TwoAction) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let bs = rrb_oracle(&a.actor.arrows, &a.target.arrows, &a.phi);
    let b0s = rrb_oracle(&a.actor.objects, &a.target.objects, &a.phi0);
    pairs_where(&bs, &b0s, |b, b0| is_groupoid_morphism(&a.target, &a.actor, b, b0))
}

pub fn crossed_hom_two_group_oracle(a: &TwoAction) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let ds = crossed_hom_oracle(&a.actor.arrows, &a.target.arrows, &a.phi);
    let d0s = crossed_hom_oracle(&a.actor.objects, &a.target.objects, &a.phi0);
    pairs_where(&ds, &d0s, |d, d0| is_groupoid_morphism(&a.actor, &a.target, d, d0))
}

fn pairs_where(
    tops: &[Vec<usize>],
    bottoms: &[Vec<usize>],
    keep: impl Fn(&[usize], &[usize]) -> bool,
) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let mut out = BTreeSet::new();
    for t in tops {
        for b in bottoms {
            if keep(t, b) {
                out.insert((t.clone(), b.clone()));
            }
        }
    }
    out
}

/// A crossed module `G` acting on a crossed module `H`: `alpha[g1][h0]`,
/// `beta1[g0][h1]`, `beta0[g0][h0]`.
pub struct XAction {
    pub actor: XMod,
    pub target: XMod,
    pub alpha: Vec<Vec<usize>>,
    pub beta1: Vec<Vec<usize>>,
    pub beta0: Vec<Vec<usize>>,
}

impl XAction {
    pub fn of(a: &XModAction) -> Self {
        XAction {
            actor: XMod::of(a.actor()),
            target: XMod::of(a.target()),
            alpha: a.alpha_maps().to_vec(),
            beta1: a.beta1().perms().to_vec(),
            beta0: a.beta0().perms().to_vec(),
        }
    }

    /// `G1` acting on `H1` through `μ`.
    pub fn beta1_mu(&self) -> Vec<Vec<usize>> {
        self.actor.mu.iter().map(|&g0| self.beta1[g0].clone()).collect()
    }

    pub fn small(&self) -> bool {
        let (g, h) = (&self.actor, &self.target);
        map_count(h.g1.n(), g.g1.n()).max(map_count(h.g0.n(), g.g0.n())) <= BRUTE_FORCE_LIMIT
            && map_count(g.g1.n(), h.g1.n()).max(map_count(g.g0.n(), h.g0.n())) <= BRUTE_FORCE_LIMIT
    }
}

/// `(B1: H1 → G1, B0: H0 → G0)`: the square `μ∘B1 = B0∘∂`, components
/// relative to `β1∘μ` and `β0`, and
/// `B0h0 ▷ B1h1 = B1(h0 ▷ (β1(B0h0)h1 · α(B0h0 ▷ B1h1)h0⁻¹))`.
pub fn rrb_xmod_oracle(a: &XAction) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let (g, h) = (&a.actor, &a.target);
    let b1s = rrb_oracle(&g.g1, &h.g1, &a.beta1_mu());
    let b0s = rrb_oracle(&g.g0, &h.g0, &a.beta0);
    pairs_where(&b1s, &b0s, |b1, b0| {
        let square = (0..h.g1.n()).all(|x| g.mu[b1[x]] == b0[h.mu[x]]);
        square
            && (0..h.g0.n()).all(|h0| {
                (0..h.g1.n()).all(|h1| {
                    let lhs = g.act[b0[h0]][b1[h1]];
                    let inner = h.g1.mul(a.beta1[b0[h0]][h1], a.alpha[lhs][h.g0.inv(h0)]);
                    lhs == b1[h.act[h0][inner]]
                })
            })
    })
}

/// `(D1: G1 → H1, D0: G0 → H0)`: the square `∂∘D1 = D0∘μ`, components
/// relative to `β1∘μ` and `β0`, and
/// `D1(g0 ▷ g1) = D0g0 ▷ (β1(g0)D1g1 · α(g0 ▷ g1)(D0g0)⁻¹)`.
pub fn crossed_hom_xmod_oracle(a: &XAction) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let (g, h) = (&a.actor, &a.target);
    let d1s = crossed_hom_oracle(&g.g1, &h.g1, &a.beta1_mu());
    let d0s = crossed_hom_oracle(&g.g0, &h.g0, &a.beta0);
    pairs_where(&d1s, &d0s, |d1, d0| {
        let square = (0..g.g1.n()).all(|x| h.mu[d1[x]] == d0[g.mu[x]]);
        square
            && (0..g.g0.n()).all(|x| {
                (0..g.g1.n()).all(|z| {
                    let moved = g.act[x][z];
                    let rhs = h.act[d0[x]][h.g1.mul(a.beta1[x][d1[z]], a.alpha[moved][h.g0.inv(d0[x])])];
                    d1[moved] == rhs
                })
            })
    })
}

pub fn is_bijection(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|&x| x < f.len() && !std::mem::replace(&mut seen[x], true))
}

pub fn inverse_map(f: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; f.len()];
    for (i, &x) in f.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// The braid relation `R12 R23 R12 = R23 R12 R23` on all triples of a
/// map `R(x, y) = (r[x·n+y] / n, r[x·n+y] % n)`; the first failing triple.
pub fn braid_oracle(n: usize, r: &[usize]) -> Option<[usize; 3]> {
    let app = |x: usize, y: usize| (r[x * n + y] / n, r[x * n + y] % n);
    let r12 = |[x, y, z]: [usize; 3]| {
        let (a, b) = app(x, y);
        [a, b, z]
    };
    let r23 = |[x, y, z]: [usize; 3]| {
        let (b, c) = app(y, z);
        [x, b, c]
    };
    (0..n * n * n).map(|i| [i / (n * n), (i / n) % n, i % n]).find(|&t| r12(r23(r12(t))) != r23(r12(r23(t))))
}

/// `[e1, e2] = e2` on integer vectors.
pub fn aff1_bracket(u: [i64; 2], v: [i64; 2]) -> [i64; 2] {
    [0, u[0] * v[1] - u[1] * v[0]]
}

/// `m` acts on column vectors, `m[row][col]`.
pub fn mat_vec(m: [[i64; 2]; 2], v: [i64; 2]) -> [i64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

/// `[Bu, Bv] = B([Bu, v] + [u, Bv] + [u, v])` for the adjoint action of
/// aff(1) on itself, checked on the basis (both sides are bilinear).
pub fn aff1_rrb_oracle(b: [[i64; 2]; 2]) -> bool {
    let basis = [[1, 0], [0, 1]];
    basis.iter().all(|&u| {
        basis.iter().all(|&v| {
            let (bu, bv) = (mat_vec(b, u), mat_vec(b, v));
            let lhs = aff1_bracket(bu, bv);
            let (x, y, z) = (aff1_bracket(bu, v), aff1_bracket(u, bv), aff1_bracket(u, v));
            lhs == mat_vec(b, [x[0] + y[0] + z[0], x[1] + y[1] + z[1]])
        })
    })
}

pub fn small_actions() -> Vec<(String, std::sync::Arc<GroupAction>)> {
    use rota2::fixtures;
    use std::sync::Arc;
    let mut out = Vec::new();
    for id in fixtures::GROUPS {
        let g = fixtures::group(id).unwrap();
        out.push((format!("ad:{id}"), Arc::new(GroupAction::adjoint(&g))));
        out.push((format!("trivial:{id}"), Arc::new(GroupAction::trivial(&g, &g))));
    }
    let group = |id: &str| fixtures::group(id).unwrap();
    let inversion = |id: &str| {
        let h = group(id);
        let z2 = group("Z2");
        let perms = vec![h.elements().collect(), h.elements().map(|x| h.inv(x)).collect()];
        Arc::new(GroupAction::new(&z2, &h, perms).unwrap())
    };
    out.push(("Z2 inverts Z3".into(), inversion("Z3")));
    out.push(("Z2 inverts Z4".into(), inversion("Z4")));
    // Z3 cycles the three involutions of Z2xZ2
    let v4 = group("Z2xZ2");
    let z3 = group("Z3");
    let rot: Vec<usize> = {
        let inv: Vec<usize> = v4.elements().filter(|&x| x != v4.identity()).collect();
        let mut r: Vec<usize> = v4.elements().collect();
        for k in 0..3 {
            r[inv[k]] = inv[(k + 1) % 3];
        }
        r
    };
    let rot2: Vec<usize> = rot.iter().map(|&x| rot[x]).collect();
    let id: Vec<usize> = v4.elements().collect();
    let mut perms = vec![Vec::new(); 3];
    perms[0] = id;
    perms[z3.generators()[0]] = rot.clone();
    perms[z3.mul(z3.generators()[0], z3.generators()[0])] = rot2;
    out.push(("Z3 rotates Z2xZ2".into(), Arc::new(GroupAction::new(&z3, &v4, perms).unwrap())));
    // S3 acting on Z3 through the sign
    let s3 = group("S3");
    let z3b = group("Z3");
    let sign: Vec<Vec<usize>> = s3
        .elements()
        .map(|g| if [0, 3, 4].contains(&g) { z3b.elements().collect() } else { z3b.elements().map(|x| z3b.inv(x)).collect() })
        .collect();
    out.push(("S3 acts on Z3 by sign".into(), Arc::new(GroupAction::new(&s3, &z3b, sign).unwrap())));
    out
}
