//! Finite groups given by Cayley tables, together with homomorphisms,
//! actions by automorphisms, semidirect products, automorphism groups,
//! subgroups and quotients.
//!
//! Elements are dense indices `0..order`. The identity is discovered while
//! validating, never assumed to sit at index 0. Every value of the types in
//! this module has passed validation, so downstream code may rely on the
//! group axioms without re-checking them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::search::{self, Budget};

/// Above this order, associativity is checked with Light's test over a
/// generating set instead of all triples.
const CUBIC_ASSOCIATIVITY_LIMIT: usize = 100;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
    generators: Vec<usize>,
    element_orders: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a square Cayley table (row `g`, column `h` holds `g·h`).
    pub fn from_table(rows: &[Vec<usize>], identity_hint: Option<usize>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat, identity_hint)
    }

    /// Same as [`FiniteGroup::from_table`] on a row-major flat table.
    pub fn from_flat(order: usize, table: Vec<usize>, identity_hint: Option<usize>) -> Result<Self> {
        let n = order;
        if n == 0 {
            return Err(Error::Empty);
        }
        if table.len() != n * n {
            return Err(Error::NotSquare { row: 0, len: table.len(), expected: n * n });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(Error::NotClosed { row: pos / n, col: pos % n, value: table[pos] });
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let is_identity = |e: usize| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a);
        let identity = match identity_hint {
            Some(e) if e < n && is_identity(e) => e,
            _ => (0..n).find(|&e| is_identity(e)).ok_or(Error::NoIdentity)?,
        };
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| mul(a, b) == identity && mul(b, a) == identity).ok_or(Error::NoInverse(a)))
            .collect::<Result<Vec<_>>>()?;
        check_associative(n, &table, identity)?;

        let element_orders: Vec<usize> = (0..n)
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != identity {
                    x = mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        let mut candidates: Vec<usize> = (0..n).collect();
        candidates.sort_by(|&a, &b| element_orders[b].cmp(&element_orders[a]).then(a.cmp(&b)));
        let generators = greedy_generators(n, identity, &candidates, mul);
        Ok(FiniteGroup { order: n, table, identity, inverses, labels: None, generators, element_orders })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::BadLength { map: "labels".into(), len: labels.len(), expected: self.order });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `g·h·g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inverses[g])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// A generating set, chosen greedily by decreasing element order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_flat(1, vec![0], Some(0)).and_then(|g| g.with_labels(vec!["e".into()])).expect("trivial group")
    }

    /// `Z/n` with element `k` at index `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let labels = (0..n).map(|k| k.to_string()).collect();
        FiniteGroup::from_flat(n, table, Some(0)).and_then(|g| g.with_labels(labels)).expect("cyclic group")
    }

    /// The symmetric group on `points` letters. Elements are the permutations
    /// in lexicographic order of their image lists, so index 0 is the
    /// identity; the product `σ·τ` applies `τ` first.
    pub fn symmetric(points: usize) -> Self {
        let perms = all_permutations(points);
        Self::from_permutations(&perms).expect("symmetric group")
    }

    /// Builds a group from a list of permutations closed under composition.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let n = perms.len();
        let mut table = Vec::with_capacity(n * n);
        for a in perms {
            for b in perms {
                let c: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                let idx = *index.get(c.as_slice()).ok_or(Error::NotSubgroup { witness: c.clone() })?;
                table.push(idx);
            }
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_flat(n, table, None)?.with_labels(labels)
    }

    pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<Self> {
        let act = GroupAction::trivial(b, a);
        semidirect_product(a, b, &act)
    }
}

fn check_associative(n: usize, table: &[usize], identity: usize) -> Result<()> {
    let mul = |a: usize, b: usize| table[a * n + b];
    if n <= CUBIC_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        return Ok(());
    }
    // Light's test: the elements s with (x·s)·y = x·(s·y) for all x, y form a
    // submagma, so it suffices to test a set whose left-normed products
    // cover the table.
    let order: Vec<usize> = (0..n).collect();
    let gens = greedy_generators(n, identity, &order, mul);
    for a in 0..n {
        for &b in &gens {
            let ab = mul(a, b);
            for c in 0..n {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Picks generators from `candidates` (in order) until the left-normed
/// products starting at `identity` reach every element.
pub(crate) fn greedy_generators(n: usize, identity: usize, candidates: &[usize], mul: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut reached = vec![false; n];
    reached[identity] = true;
    let mut members = vec![identity];
    let mut gens: Vec<usize> = Vec::new();
    for &c in candidates {
        if members.len() == n {
            break;
        }
        if reached[c] {
            continue;
        }
        gens.push(c);
        let mut i = 0;
        // re-scan everything with the enlarged generator set
        let mut frontier: Vec<usize> = members.clone();
        while i < frontier.len() {
            let x = frontier[i];
            i += 1;
            for &g in &gens {
                let y = mul(x, g);
                if !reached[y] {
                    reached[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

pub(crate) fn all_permutations(points: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; points], &mut out);
    out
}

/// Cycle notation with 1-based points, `e` for the identity.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut s = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        s.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            s.push_str(&(x + 1).to_string());
            x = perm[x];
        }
        s.push(')');
    }
    if s.is_empty() {
        "e".into()
    } else {
        s
    }
}

pub(crate) fn check_len(map: &str, values: &[usize], len: usize, size: usize) -> Result<()> {
    if values.len() != len {
        return Err(Error::BadLength { map: map.into(), len: values.len(), expected: len });
    }
    if let Some(i) = values.iter().position(|&v| v >= size) {
        return Err(Error::OutOfRange { map: map.into(), index: i, value: values[i], size });
    }
    Ok(())
}

pub(crate) fn is_bijection(values: &[usize], size: usize) -> bool {
    if values.len() != size {
        return false;
    }
    let mut seen = vec![false; size];
    for &v in values {
        if v >= size || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub(crate) fn invert_bijection(values: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; values.len()];
    for (i, &v) in values.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Checks `map(x·g) = map(x)·map(g)` for all `x` and generators `g`, which
/// is equivalent to the full homomorphism law.
pub(crate) fn check_hom(name: &str, domain: &FiniteGroup, codomain: &FiniteGroup, map: &[usize]) -> Result<()> {
    check_len(name, map, domain.order(), codomain.order())?;
    if map[domain.identity()] != codomain.identity() {
        return Err(Error::NotHom { map: name.into(), a: domain.identity(), b: domain.identity() });
    }
    for x in domain.elements() {
        for &g in domain.generators() {
            if map[domain.mul(x, g)] != codomain.mul(map[x], map[g]) {
                return Err(Error::NotHom { map: name.into(), a: x, b: g });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(name: &str, domain: &Arc<FiniteGroup>, codomain: &Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self> {
        check_hom(name, domain, codomain, &map)?;
        Ok(GroupHom { domain: domain.clone(), codomain: codomain.clone(), map })
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        GroupHom { domain: g.clone(), codomain: g.clone(), map: g.elements().collect() }
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn kernel(&self) -> Vec<usize> {
        let e = self.codomain.identity();
        self.domain.elements().filter(|&a| self.map[a] == e).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.codomain.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        (0..seen.len()).filter(|&v| seen[v]).collect()
    }
}

/// An action of `actor` on `target` by automorphisms; `perms[g][h] = φ(g)h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    actor: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    perms: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(actor: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, perms: Vec<Vec<usize>>) -> Result<Self> {
        let (na, nt) = (actor.order(), target.order());
        if perms.len() != na {
            return Err(Error::BadLength { map: "action".into(), len: perms.len(), expected: na });
        }
        for (g, p) in perms.iter().enumerate() {
            check_len(&format!("action[{g}]"), p, nt, nt)?;
            if !is_bijection(p, nt) {
                return Err(Error::NotAction { detail: format!("perm of {g} is not a bijection") });
            }
        }
        let e = actor.identity();
        if let Some(h) = (0..nt).find(|&h| perms[e][h] != h) {
            return Err(Error::NotAction { detail: format!("identity moves {h}") });
        }
        for g in actor.elements() {
            for &s in actor.generators() {
                let gs = &perms[actor.mul(g, s)];
                if let Some(h) = (0..nt).find(|&h| gs[h] != perms[g][perms[s][h]]) {
                    return Err(Error::NotAction { detail: format!("composition fails at ({g},{s}) on {h}") });
                }
            }
        }
        // The generators act by automorphisms, hence so does every element.
        for &s in actor.generators() {
            let p = &perms[s];
            for h in target.elements() {
                for &t in target.generators() {
                    if p[target.mul(h, t)] != target.mul(p[h], p[t]) {
                        return Err(Error::NotAutomorphism { what: format!("action of {s}"), witness: vec![h, t] });
                    }
                }
            }
        }
        Ok(GroupAction { actor: actor.clone(), target: target.clone(), perms })
    }

    pub fn from_fn(actor: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let perms = actor.elements().map(|g| target.elements().map(|h| f(g, h)).collect()).collect();
        Self::new(actor, target, perms)
    }

    pub fn trivial(actor: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        let id: Vec<usize> = target.elements().collect();
        GroupAction { actor: actor.clone(), target: target.clone(), perms: vec![id; actor.order()] }
    }

    /// Conjugation `g ↦ (h ↦ g·h·g⁻¹)`.
    pub fn adjoint(g: &Arc<FiniteGroup>) -> Self {
        let perms = g.elements().map(|x| g.elements().map(|h| g.conj(x, h)).collect()).collect();
        GroupAction { actor: g.clone(), target: g.clone(), perms }
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    #[inline]
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.perms[g][h]
    }

    pub fn perm(&self, g: usize) -> &[usize] {
        &self.perms[g]
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &v)| i == v))
    }

    /// `φ ∘ f` for a homomorphism `f` into the actor.
    pub fn pullback(&self, f: &GroupHom) -> Result<GroupAction> {
        if !same_group(f.codomain(), &self.actor) {
            return Err(Error::ActionMismatch("pullback along a map not landing in the actor".into()));
        }
        let perms = f.domain().elements().map(|x| self.perms[f.apply(x)].clone()).collect();
        GroupAction::new(f.domain(), &self.target, perms)
    }
}

/// `H ⋊ G` with `(h,g)·(h',g') = (h·φ(g)h', g·g')`. The pair `(h,g)` has
/// index `h·|G| + g`.
pub fn semidirect_product(h: &Arc<FiniteGroup>, g: &Arc<FiniteGroup>, phi: &GroupAction) -> Result<FiniteGroup> {
    if !same_group(phi.actor(), g) || !same_group(phi.target(), h) {
        return Err(Error::ActionMismatch("action does not match the factors".into()));
    }
    let (nh, ng) = (h.order(), g.order());
    let n = nh * ng;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let (ha, ga) = (a / ng, a % ng);
        for b in 0..n {
            let (hb, gb) = (b / ng, b % ng);
            let hh = h.mul(ha, phi.act(ga, hb));
            table.push(hh * ng + g.mul(ga, gb));
        }
    }
    let group = FiniteGroup::from_flat(n, table, Some(h.identity() * ng + g.identity()))?;
    let labels = (0..n).map(|a| format!("({},{})", h.label(a / ng), g.label(a % ng))).collect();
    group.with_labels(labels)
}

/// The automorphism group, over indices into the returned list of
/// automorphisms (sorted by map table, so the identity comes first). The
/// product `a·b` is the composite `a ∘ b`.
pub fn automorphism_group(g: &Arc<FiniteGroup>) -> Result<(FiniteGroup, Vec<GroupHom>)> {
    let maps = search::enumerate_homomorphisms(g, g, true, &Budget::unlimited())?;
    let index: HashMap<&[usize], usize> = maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let n = maps.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &maps {
        for b in &maps {
            let c: Vec<usize> = b.iter().map(|&x| a[x]).collect();
            table.push(*index.get(c.as_slice()).ok_or_else(|| Error::invariant("automorphisms compose", c.clone()))?);
        }
    }
    let group = FiniteGroup::from_flat(n, table, Some(0))?;
    let homs = maps.into_iter().map(|m| GroupHom { domain: g.clone(), codomain: g.clone(), map: m }).collect();
    Ok((group, homs))
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: Arc<FiniteGroup>,
    /// `embedding[i]` is the ambient element at subgroup index `i` (sorted).
    pub embedding: Vec<usize>,
    pub normal: bool,
    pub quotient: Option<Quotient>,
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    pub projection: GroupHom,
    /// Smallest ambient element of each coset.
    pub representatives: Vec<usize>,
}

pub(crate) fn sorted_unique(subset: &[usize]) -> Vec<usize> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// Restricts the ambient multiplication to `subset`.
pub fn subgroup(g: &Arc<FiniteGroup>, subset: &[usize]) -> Result<(Arc<FiniteGroup>, Vec<usize>)> {
    let elems = sorted_unique(subset);
    if elems.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(&x) = elems.iter().find(|&&x| x >= g.order()) {
        return Err(Error::NotSubgroup { witness: vec![x] });
    }
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i;
    }
    if pos[g.identity()] == usize::MAX {
        return Err(Error::NotSubgroup { witness: vec![g.identity()] });
    }
    let m = elems.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            let c = pos[g.mul(a, b)];
            if c == usize::MAX {
                return Err(Error::NotSubgroup { witness: vec![a, b] });
            }
            table.push(c);
        }
    }
    let mut sub = FiniteGroup::from_flat(m, table, Some(pos[g.identity()]))?;
    if let Some(labels) = g.labels() {
        sub = sub.with_labels(elems.iter().map(|&x| labels[x].clone()).collect())?;
    }
    Ok((Arc::new(sub), elems))
}

pub fn is_normal(g: &FiniteGroup, elems: &[usize]) -> std::result::Result<(), (usize, usize)> {
    let mut member = vec![false; g.order()];
    for &x in elems {
        member[x] = true;
    }
    for x in g.elements() {
        for &k in elems {
            if !member[g.conj(x, k)] {
                return Err((x, k));
            }
        }
    }
    Ok(())
}

/// The coset group `G/K` and the canonical projection.
pub fn quotient(g: &Arc<FiniteGroup>, subset: &[usize]) -> Result<Quotient> {
    let (_, elems) = subgroup(g, subset)?;
    is_normal(g, &elems).map_err(|(x, k)| Error::NotNormal { g: x, k })?;
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &k in &elems {
            coset[g.mul(x, k)] = c;
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[g.mul(a, b)]);
        }
    }
    let mut q = FiniteGroup::from_flat(m, table, Some(coset[g.identity()]))?;
    if g.labels().is_some() {
        q = q.with_labels(reps.iter().map(|&r| format!("{}K", g.label(r))).collect())?;
    }
    let q = Arc::new(q);
    let projection = GroupHom::new("projection", g, &q, coset)?;
    Ok(Quotient { group: q, projection, representatives: reps })
}

/// Subgroup check, normality flag, and the quotient when it is demanded
/// (`NotNormal` is only an error in that case).
pub fn subgroup_and_quotient(g: &Arc<FiniteGroup>, subset: &[usize], want_quotient: bool) -> Result<Subgroup> {
    let (group, embedding) = subgroup(g, subset)?;
    let normal = is_normal(g, &embedding).is_ok();
    let quotient = if want_quotient { Some(quotient(g, &embedding)?) } else { None };
    Ok(Subgroup { group, embedding, normal, quotient })
}

/// An isomorphism `a → b` if one exists: generator images are matched by
/// element order, then extended as homomorphisms and tested for bijectivity.
pub fn find_isomorphism(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let mut sig_a: Vec<usize> = a.elements().map(|x| a.element_order(x)).collect();
    let mut sig_b: Vec<usize> = b.elements().map(|x| b.element_order(x)).collect();
    sig_a.sort_unstable();
    sig_b.sort_unstable();
    if sig_a != sig_b {
        return None;
    }
    search::enumerate_homomorphisms(a, b, true, &Budget::unlimited()).ok()?.into_iter().next()
}

pub fn is_isomorphic(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    find_isomorphism(a, b).is_some()
}
