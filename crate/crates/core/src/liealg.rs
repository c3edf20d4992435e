//! Finite-dimensional Lie algebras over ℚ given by structure constants, Lie
//! algebra crossed modules and their actions, and the infinitesimal
//! Rota–Baxter and crossed-homomorphism identities. All arithmetic is exact.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;
pub type Vector = Vec<Q>;
/// `m[r][c]`: image of basis vector `c` has coordinate `m[r][c]` on `r`.
pub type Matrix = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Q::zero(); n]
}

pub fn basis(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn add(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(s: &Q, a: &[Q]) -> Vector {
    a.iter().map(|x| s * x).collect()
}

pub fn apply(m: &Matrix, v: &[Q]) -> Vector {
    m.iter().map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| if b.is_zero() { acc } else { acc + a * b })).collect()
}

/// `a ∘ b`
pub fn compose(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter().map(|row| (0..cols).map(|c| row.iter().zip(b).fold(Q::zero(), |acc, (x, brow)| acc + x * &brow[c])).collect()).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| basis(n, i)).collect()
}

pub fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![zero_vec(cols); rows]
}

pub fn scale_matrix(s: &Q, m: &Matrix) -> Matrix {
    m.iter().map(|r| scale(s, r)).collect()
}

fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(x, y)| sub(x, y)).collect()
}

pub fn show(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Structure constants `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Vec<Vector>>,
}

impl LieAlgebra {
    /// Checks antisymmetry and the Jacobi identity on basis triples.
    pub fn new(dim: usize, c: Vec<Vec<Vector>>) -> Result<Self> {
        let bad = |detail: String| Err(Error::NotLieAlgebra { detail });
        if c.len() != dim || c.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return bad(format!("structure constants must be {dim}×{dim}×{dim}"));
        }
        for (i, row) in c.iter().enumerate() {
            for (j, cij) in row.iter().enumerate() {
                if add(cij, &c[j][i]).iter().any(|x| !x.is_zero()) {
                    return bad(format!("antisymmetry fails at ({i},{j})"));
                }
            }
        }
        let g = LieAlgebra { dim, c };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let (x, y, z) = (basis(dim, i), basis(dim, j), basis(dim, k));
                    let s = add(
                        &add(&g.bracket(&x, &g.bracket(&y, &z)), &g.bracket(&y, &g.bracket(&z, &x))),
                        &g.bracket(&z, &g.bracket(&x, &y)),
                    );
                    if s.iter().any(|v| !v.is_zero()) {
                        return bad(format!("Jacobi identity fails at ({i},{j},{k})"));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &[Vec<Vector>] {
        &self.c
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, ck) in self.c[i][j].iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] += &ab * ck;
                    }
                }
            }
        }
        out
    }

    /// `ad_u` as a matrix.
    pub fn ad(&self, u: &[Q]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket(u, &basis(self.dim, j))).collect();
        transpose(&cols, self.dim)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, c: vec![vec![zero_vec(dim); dim]; dim] }
    }

    /// `[e1, e2] = e2`.
    pub fn aff1() -> Self {
        let mut c = vec![vec![zero_vec(2); 2]; 2];
        c[0][1] = vec![q(0), q(1)];
        c[1][0] = vec![q(0), q(-1)];
        LieAlgebra { dim: 2, c }
    }

    /// Basis `(h, e, f)` with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let mut c = vec![vec![zero_vec(3); 3]; 3];
        c[0][1] = vec![q(0), q(2), q(0)];
        c[1][0] = vec![q(0), q(-2), q(0)];
        c[0][2] = vec![q(0), q(0), q(-2)];
        c[2][0] = vec![q(0), q(0), q(2)];
        c[1][2] = vec![q(1), q(0), q(0)];
        c[2][1] = vec![q(-1), q(0), q(0)];
        LieAlgebra { dim: 3, c }
    }
}

/// Matrix whose `j`-th column is `cols[j]`.
fn transpose(cols: &[Vector], rows: usize) -> Matrix {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

fn matrix_of(rows: usize, cols: usize, f: impl Fn(usize) -> Vector) -> Matrix {
    let images: Vec<Vector> = (0..cols).map(f).collect();
    transpose(&images, rows)
}

fn check_shape(name: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::BadLength { map: format!("{name} ({rows}×{cols})"), len: m.len(), expected: rows });
    }
    Ok(())
}

fn failure(identity: &str, i: usize, j: usize, lhs: &[Q], rhs: &[Q]) -> Error {
    Error::IdentityFailure { identity: identity.into(), i, j, lhs: show(lhs), rhs: show(rhs) }
}

/// An action of `g` on `h` by derivations: `mats[i]` is the operator of
/// basis vector `i`, extended linearly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAction {
    actor: Arc<LieAlgebra>,
    target: Arc<LieAlgebra>,
    mats: Vec<Matrix>,
}

impl LieAction {
    /// Checks that each operator is a derivation and that the assignment
    /// is a Lie algebra homomorphism into `gl(h)`.
    pub fn new(actor: &Arc<LieAlgebra>, target: &Arc<LieAlgebra>, mats: Vec<Matrix>) -> Result<Self> {
        let (n, m) = (actor.dim(), target.dim());
        if mats.len() != n {
            return Err(Error::BadLength { map: "action".into(), len: mats.len(), expected: n });
        }
        for mat in &mats {
            check_shape("action operator", mat, m, m)?;
        }
        let out = LieAction { actor: actor.clone(), target: target.clone(), mats };
        for i in 0..n {
            check_derivation(target, &out.mats[i], &format!("action of e{i} is a derivation"))?;
        }
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (basis(n, i), basis(n, j));
                let lhs = out.operator(&actor.bracket(&x, &y));
                let rhs = commutator(&out.mats[i], &out.mats[j]);
                if lhs != rhs {
                    return Err(Error::NotAction { detail: format!("operators of [e{i},e{j}] and their commutator differ") });
                }
            }
        }
        Ok(out)
    }

    pub fn adjoint(g: &Arc<LieAlgebra>) -> Self {
        let mats = (0..g.dim()).map(|i| g.ad(&basis(g.dim(), i))).collect();
        LieAction { actor: g.clone(), target: g.clone(), mats }
    }

    pub fn trivial(actor: &Arc<LieAlgebra>, target: &Arc<LieAlgebra>) -> Self {
        LieAction { actor: actor.clone(), target: target.clone(), mats: vec![zero_matrix(target.dim(), target.dim()); actor.dim()] }
    }

    pub fn actor(&self) -> &Arc<LieAlgebra> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<LieAlgebra> {
        &self.target
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn operator(&self, x: &[Q]) -> Matrix {
        let m = self.target.dim();
        let mut out = zero_matrix(m, m);
        for (xi, mat) in x.iter().zip(&self.mats) {
            if xi.is_zero() {
                continue;
            }
            for r in 0..m {
                for c in 0..m {
                    out[r][c] += xi * &mat[r][c];
                }
            }
        }
        out
    }

    pub fn act(&self, x: &[Q], v: &[Q]) -> Vector {
        apply(&self.operator(x), v)
    }

    /// `x ↦ φ̄(f(x))` for a Lie homomorphism `f` given as a matrix.
    pub fn pullback(&self, from: &Arc<LieAlgebra>, f: &Matrix) -> Self {
        let mats = (0..from.dim()).map(|i| self.operator(&apply(f, &basis(from.dim(), i)))).collect();
        LieAction { actor: from.clone(), target: self.target.clone(), mats }
    }
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    mat_sub(&compose(a, b), &compose(b, a))
}

fn check_derivation(h: &LieAlgebra, d: &Matrix, what: &str) -> Result<()> {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (basis(n, i), basis(n, j));
            let lhs = apply(d, &h.bracket(&a, &b));
            let rhs = add(&h.bracket(&apply(d, &a), &b), &h.bracket(&a, &apply(d, &b)));
            if lhs != rhs {
                return Err(failure(what, i, j, &lhs, &rhs));
            }
        }
    }
    Ok(())
}

fn check_lie_hom(from: &LieAlgebra, to: &LieAlgebra, f: &Matrix, what: &str) -> Result<()> {
    let n = from.dim();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (basis(n, i), basis(n, j));
            let lhs = apply(f, &from.bracket(&a, &b));
            let rhs = to.bracket(&apply(f, &a), &apply(f, &b));
            if lhs != rhs {
                return Err(failure(what, i, j, &lhs, &rhs));
            }
        }
    }
    Ok(())
}

/// `∂̄: h1 → h0` with an action of `h0` on `h1` by derivations and
/// `∂̄(u ▷ a) = [u, ∂̄a]`, `∂̄a ▷ b = [a, b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieXMod {
    dbar: Matrix,
    act: LieAction,
}

impl LieXMod {
    pub fn new(dbar: Matrix, act: LieAction) -> Result<Self> {
        let (h1, h0) = (act.target().clone(), act.actor().clone());
        check_shape("∂̄", &dbar, h0.dim(), h1.dim())?;
        check_lie_hom(&h1, &h0, &dbar, "∂̄ is a homomorphism")?;
        for u in 0..h0.dim() {
            for a in 0..h1.dim() {
                let (bu, ba) = (basis(h0.dim(), u), basis(h1.dim(), a));
                let lhs = apply(&dbar, &act.act(&bu, &ba));
                let rhs = h0.bracket(&bu, &apply(&dbar, &ba));
                if lhs != rhs {
                    return Err(failure("∂̄(u ▷ a) = [u, ∂̄a]", u, a, &lhs, &rhs));
                }
            }
        }
        for a in 0..h1.dim() {
            for b in 0..h1.dim() {
                let (ba, bb) = (basis(h1.dim(), a), basis(h1.dim(), b));
                let lhs = act.act(&apply(&dbar, &ba), &bb);
                let rhs = h1.bracket(&ba, &bb);
                if lhs != rhs {
                    return Err(failure("∂̄a ▷ b = [a, b]", a, b, &lhs, &rhs));
                }
            }
        }
        Ok(LieXMod { dbar, act })
    }

    pub fn identity_on(g: &Arc<LieAlgebra>) -> Self {
        LieXMod { dbar: identity(g.dim()), act: LieAction::adjoint(g) }
    }

    pub fn h1(&self) -> &Arc<LieAlgebra> {
        self.act.target()
    }

    pub fn h0(&self) -> &Arc<LieAlgebra> {
        self.act.actor()
    }

    pub fn dbar(&self) -> &Matrix {
        &self.dbar
    }

    pub fn action(&self) -> &LieAction {
        &self.act
    }

    pub fn act(&self, u: &[Q], a: &[Q]) -> Vector {
        self.act.act(u, a)
    }
}

/// An action of `g = (g1 → g0)` on `h = (h1 → h0)`: `alpha[i]` is the
/// linear map `h0 → h1` of basis vector `i` of `g1`; `beta1`, `beta0` act
/// by derivations of `h1` and `h0`.
#[derive(Clone, Debug)]
pub struct LieXModAction {
    actor: Arc<LieXMod>,
    target: Arc<LieXMod>,
    alpha: Vec<Matrix>,
    beta1: LieAction,
    beta0: LieAction,
}

impl LieXModAction {
    /// Checks the morphism conditions into the actor on basis elements:
    /// `ᾱ(ξ)` is a derivation `h0 → h1`, `β̄(x)` is a derivation pair
    /// commuting with `∂̄` and compatible with `▷`, `Δ∘ᾱ = β̄∘μ̄`, `ᾱ`
    /// preserves brackets, and `ᾱ(x ▷ ξ) = β̄1(x)ᾱ(ξ) − ᾱ(ξ)β̄0(x)`.
    pub fn new(actor: &Arc<LieXMod>, target: &Arc<LieXMod>, alpha: Vec<Matrix>, beta1: LieAction, beta0: LieAction) -> Result<Self> {
        let (g1, g0) = (actor.h1(), actor.h0());
        let (h1, h0) = (target.h1(), target.h0());
        if alpha.len() != g1.dim() {
            return Err(Error::BadLength { map: "ᾱ".into(), len: alpha.len(), expected: g1.dim() });
        }
        for m in &alpha {
            check_shape("ᾱ", m, h1.dim(), h0.dim())?;
        }
        if beta1.actor() != g0 || beta1.target() != h1 || beta0.actor() != g0 || beta0.target() != h0 {
            return Err(Error::ActionMismatch("β̄ does not match the crossed modules".into()));
        }
        for (i, m) in alpha.iter().enumerate() {
            for u in 0..h0.dim() {
                for v in 0..h0.dim() {
                    let (bu, bv) = (basis(h0.dim(), u), basis(h0.dim(), v));
                    let lhs = apply(m, &h0.bracket(&bu, &bv));
                    let rhs = sub(&target.act(&bu, &apply(m, &bv)), &target.act(&bv, &apply(m, &bu)));
                    if lhs != rhs {
                        return Err(failure(&format!("ᾱ(e{i}) is a derivation"), u, v, &lhs, &rhs));
                    }
                }
            }
        }
        for x in 0..g0.dim() {
            let bx = basis(g0.dim(), x);
            let (d1, d0) = (beta1.operator(&bx), beta0.operator(&bx));
            if compose(target.dbar(), &d1) != compose(&d0, target.dbar()) {
                return Err(Error::SquareFailure { detail: format!("∂̄∘β̄1(e{x}) = β̄0(e{x})∘∂̄"), witness: vec![x] });
            }
            for u in 0..h0.dim() {
                for a in 0..h1.dim() {
                    let (bu, ba) = (basis(h0.dim(), u), basis(h1.dim(), a));
                    let lhs = apply(&d1, &target.act(&bu, &ba));
                    let rhs = add(&target.act(&apply(&d0, &bu), &ba), &target.act(&bu, &apply(&d1, &ba)));
                    if lhs != rhs {
                        return Err(failure(&format!("β̄(e{x}) is compatible with ▷"), u, a, &lhs, &rhs));
                    }
                }
            }
        }
        for (i, ai) in alpha.iter().enumerate() {
            let xi = basis(g1.dim(), i);
            let m = apply(actor.dbar(), &xi);
            if compose(ai, target.dbar()) != beta1.operator(&m) || compose(target.dbar(), ai) != beta0.operator(&m) {
                return Err(Error::SquareFailure { detail: format!("Δ∘ᾱ = β̄∘μ̄ at e{i}"), witness: vec![i] });
            }
        }
        let out = LieXModAction { actor: actor.clone(), target: target.clone(), alpha, beta1, beta0 };
        for i in 0..g1.dim() {
            for j in 0..g1.dim() {
                let (a, b) = (basis(g1.dim(), i), basis(g1.dim(), j));
                let lhs = out.alpha_of(&g1.bracket(&a, &b));
                let (ai, aj) = (&out.alpha[i], &out.alpha[j]);
                let rhs = mat_sub(&compose(ai, &compose(target.dbar(), aj)), &compose(aj, &compose(target.dbar(), ai)));
                if lhs != rhs {
                    return Err(Error::NotAction { detail: format!("ᾱ does not preserve [e{i},e{j}]") });
                }
            }
        }
        for x in 0..g0.dim() {
            let bx = basis(g0.dim(), x);
            for i in 0..g1.dim() {
                let lhs = out.alpha_of(&actor.act(&bx, &basis(g1.dim(), i)));
                let rhs = mat_sub(&compose(&out.beta1.operator(&bx), &out.alpha[i]), &compose(&out.alpha[i], &out.beta0.operator(&bx)));
                if lhs != rhs {
                    return Err(Error::EquivarianceFailure { g0: x, g1: i });
                }
            }
        }
        Ok(out)
    }

    /// `ᾱ(ξ)u = −u ▷ ξ`, `β̄1(x) = x ▷ ·`, `β̄0 = ad`.
    pub fn adjoint(x: &Arc<LieXMod>) -> Self {
        let (g1, g0) = (x.h1(), x.h0());
        let alpha = (0..g1.dim())
            .map(|i| {
                let xi = basis(g1.dim(), i);
                matrix_of(g1.dim(), g0.dim(), |u| scale(&q(-1), &x.act(&basis(g0.dim(), u), &xi)))
            })
            .collect();
        LieXModAction { actor: x.clone(), target: x.clone(), alpha, beta1: x.action().clone(), beta0: LieAction::adjoint(g0) }
    }

    pub fn actor(&self) -> &Arc<LieXMod> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<LieXMod> {
        &self.target
    }

    pub fn alpha_of(&self, xi: &[Q]) -> Matrix {
        let h = &self.target;
        let mut out = zero_matrix(h.h1().dim(), h.h0().dim());
        for (c, m) in xi.iter().zip(&self.alpha) {
            if !c.is_zero() {
                out = out.iter().zip(m).map(|(a, b)| add(a, &scale(c, b))).collect();
            }
        }
        out
    }

    pub fn beta1(&self) -> &LieAction {
        &self.beta1
    }

    pub fn beta0(&self) -> &LieAction {
        &self.beta0
    }

    /// `ξ ↦ β̄1(μ̄ξ)`
    pub fn beta1_mu(&self) -> LieAction {
        self.beta1.pullback(self.actor.h1(), self.actor.dbar())
    }
}

/// `B: h → g` with `[Bu, Bv] = B(φ̄(Bu)v − φ̄(Bv)u + [u, v])`.
#[derive(Clone, Debug)]
pub struct RrbLieOp {
    pub b: Matrix,
}

/// Both sides of the operator identity at a pair of vectors.
pub fn rrb_lie_sides(b: &Matrix, action: &LieAction, u: &[Q], v: &[Q]) -> (Vector, Vector) {
    let (g, h) = (action.actor(), action.target());
    let (bu, bv) = (apply(b, u), apply(b, v));
    let lhs = g.bracket(&bu, &bv);
    let inner = add(&sub(&action.act(&bu, v), &action.act(&bv, u)), &h.bracket(u, v));
    (lhs, apply(b, &inner))
}

pub fn verify_rrb_lie(b: Matrix, action: &LieAction) -> Result<RrbLieOp> {
    let (g, h) = (action.actor(), action.target());
    check_shape("B", &b, g.dim(), h.dim())?;
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let (lhs, rhs) = rrb_lie_sides(&b, action, &basis(n, i), &basis(n, j));
            if lhs != rhs {
                return Err(failure("[Bu,Bv] = B(φ̄(Bu)v − φ̄(Bv)u + [u,v])", i, j, &lhs, &rhs));
            }
        }
    }
    Ok(RrbLieOp { b })
}

#[derive(Clone, Debug)]
pub struct RrbLieXModOp {
    pub b1: Matrix,
    pub b0: Matrix,
}

/// `μ̄∘B1 = B0∘∂̄`, then `B1` relative to `β̄1∘μ̄`, `B0` relative to `β̄0`,
/// and `B0u ▷ B1a = B1(β̄1(B0u)a − ᾱ(B1a)u + u ▷ a)`.
pub fn verify_rrb_lie_xmod(b1: Matrix, b0: Matrix, action: &LieXModAction) -> Result<RrbLieXModOp> {
    let (g, h) = (action.actor(), action.target());
    check_shape("B1", &b1, g.h1().dim(), h.h1().dim())?;
    check_shape("B0", &b0, g.h0().dim(), h.h0().dim())?;
    if compose(g.dbar(), &b1) != compose(&b0, h.dbar()) {
        return Err(Error::SquareFailure { detail: "μ̄∘B1 = B0∘∂̄".into(), witness: vec![] });
    }
    verify_rrb_lie(b1.clone(), &action.beta1_mu()).map_err(|e| Error::component("B1", e))?;
    verify_rrb_lie(b0.clone(), action.beta0()).map_err(|e| Error::component("B0", e))?;
    let (n0, n1) = (h.h0().dim(), h.h1().dim());
    for u in 0..n0 {
        for a in 0..n1 {
            let (bu, ba) = (basis(n0, u), basis(n1, a));
            let (x, y) = (apply(&b0, &bu), apply(&b1, &ba));
            let lhs = g.act(&x, &y);
            let inner = add(&sub(&action.beta1().act(&x, &ba), &apply(&action.alpha_of(&y), &bu)), &h.act(&bu, &ba));
            let rhs = apply(&b1, &inner);
            if lhs != rhs {
                return Err(failure("B0u ▷ B1a = B1(β̄1(B0u)a − ᾱ(B1a)u + u ▷ a)", u, a, &lhs, &rhs));
            }
        }
    }
    Ok(RrbLieXModOp { b1, b0 })
}

/// `D: g → h` with `D[x,y] = φ̄(x)Dy − φ̄(y)Dx + [Dx, Dy]`.
pub fn verify_crossed_hom_lie(d: &Matrix, action: &LieAction) -> Result<()> {
    let (g, h) = (action.actor(), action.target());
    check_shape("D", d, h.dim(), g.dim())?;
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let (dx, dy) = (apply(d, &x), apply(d, &y));
            let lhs = apply(d, &g.bracket(&x, &y));
            let rhs = add(&sub(&action.act(&x, &dy), &action.act(&y, &dx)), &h.bracket(&dx, &dy));
            if lhs != rhs {
                return Err(failure("D[x,y] = φ̄(x)Dy − φ̄(y)Dx + [Dx,Dy]", i, j, &lhs, &rhs));
            }
        }
    }
    Ok(())
}

/// `∂̄∘D1 = D0∘μ̄`, the two component identities, and
/// `D1(x ▷ ξ) = β̄1(x)D1ξ − ᾱ(ξ)D0x + D0x ▷ D1ξ`.
pub fn verify_crossed_hom_lie_xmod(d1: &Matrix, d0: &Matrix, action: &LieXModAction) -> Result<()> {
    let (g, h) = (action.actor(), action.target());
    check_shape("D1", d1, h.h1().dim(), g.h1().dim())?;
    check_shape("D0", d0, h.h0().dim(), g.h0().dim())?;
    if compose(h.dbar(), d1) != compose(d0, g.dbar()) {
        return Err(Error::SquareFailure { detail: "∂̄∘D1 = D0∘μ̄".into(), witness: vec![] });
    }
    verify_crossed_hom_lie(d1, &action.beta1_mu()).map_err(|e| Error::component("D1", e))?;
    verify_crossed_hom_lie(d0, action.beta0()).map_err(|e| Error::component("D0", e))?;
    let (n0, n1) = (g.h0().dim(), g.h1().dim());
    for x in 0..n0 {
        for xi in 0..n1 {
            let (bx, bxi) = (basis(n0, x), basis(n1, xi));
            let (dx, dxi) = (apply(d0, &bx), apply(d1, &bxi));
            let lhs = apply(d1, &g.act(&bx, &bxi));
            let rhs = add(&sub(&action.beta1().act(&bx, &dxi), &apply(&action.alpha_of(&bxi), &dx)), &h.act(&dx, &dxi));
            if lhs != rhs {
                return Err(failure("D1(x ▷ ξ) = β̄1(x)D1ξ − ᾱ(ξ)D0x + D0x ▷ D1ξ", x, xi, &lhs, &rhs));
            }
        }
    }
    Ok(())
}

/// `B = 0` and `B = −Id`.
pub fn zero_and_negative_identity(n: usize) -> (Matrix, Matrix) {
    (zero_matrix(n, n), scale_matrix(&q(-1), &identity(n)))
}
