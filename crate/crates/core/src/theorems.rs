//! The theorem suite: for each fixture (a 2-group with an action on itself)
//! and each operator, run every construction and check every claimed
//! property. Reports are deterministic: no timings, and results are
//! assembled in operator order whatever the worker count.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingroup::is_bijection;
use crate::fixtures;
use crate::io::{read_json, Loader, Ref, TwoGroupFile};
use crate::mutation::single_entry_mutants;
use crate::rrb::{self, RrbTwoGroupOp, Semidirect};
use crate::search::Budget;
use crate::twogroup::TwoGroupAction;
use crate::xhom;
use crate::xmod::{action_xmod_from_2group, pi_map};
use crate::ybe;

/// A 2-group action plus, optionally, the operators to check. Without
/// operators, all of them are enumerated.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub name: String,
    pub action: Arc<TwoGroupAction>,
    pub operators: Option<Vec<(Vec<usize>, Vec<usize>)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorPair {
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    #[serde(rename = "B0")]
    pub b0: Vec<usize>,
}

/// `{"two_group": ref, "action": "adjoint"|"trivial"|path, "operators": [...]?}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BundleFile {
    pub two_group: Ref<TwoGroupFile>,
    #[serde(default = "default_action")]
    pub action: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operators: Option<Vec<OperatorPair>>,
}

fn default_action() -> String {
    "adjoint".into()
}

impl Bundle {
    pub fn load(path: &Path) -> Result<Bundle> {
        let f: BundleFile = read_json(path)?;
        let l = Loader::beside(path);
        let p = l.two_group(&f.two_group)?;
        let action = match f.action.as_str() {
            "adjoint" => Arc::new(TwoGroupAction::adjoint(&p)),
            "trivial" => Arc::new(TwoGroupAction::trivial(&p, &p)),
            other => l.two_group_action(&Ref::Name(other.into()))?,
        };
        let name = path.file_stem().map_or_else(|| "bundle".into(), |s| s.to_string_lossy().into_owned());
        let operators = f.operators.map(|v| v.into_iter().map(|o| (o.b, o.b0)).collect());
        Ok(Bundle { name, action, operators })
    }
}

/// Every corpus 2-group with its adjoint and trivial actions, plus the
/// decomposition operator on `S3 ⇉ S3`.
pub fn corpus() -> Result<Vec<Bundle>> {
    let mut out = Vec::new();
    for id in fixtures::two_group_ids() {
        let p = fixtures::two_group(&id)?;
        out.push(Bundle { name: format!("{id} adjoint"), action: Arc::new(TwoGroupAction::adjoint(&p)), operators: None });
        out.push(Bundle { name: format!("{id} trivial"), action: Arc::new(TwoGroupAction::trivial(&p, &p)), operators: None });
    }
    let p = fixtures::two_group("S3=>S3")?;
    let b = fixtures::decomposition_operator().map().to_vec();
    out.push(Bundle {
        name: "S3=>S3 decomposition".into(),
        action: Arc::new(TwoGroupAction::adjoint(&p)),
        operators: Some(vec![(b.clone(), b)]),
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub theorem: String,
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl TheoremResult {
    fn new(theorem: &str) -> Self {
        TheoremResult { theorem: theorem.into(), checked: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.checked += 1;
        if let Err(msg) = outcome {
            self.failures += 1;
            self.first_failure.get_or_insert(msg);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub fixture: String,
    pub operators: usize,
    pub results: Vec<TheoremResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub fixtures: Vec<FixtureReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.fixtures.iter().all(|f| f.results.iter().all(TheoremResult::passed))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for f in &self.fixtures {
            let _ = writeln!(s, "fixture {}: {} operator(s)", f.fixture, f.operators);
            for r in &f.results {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                let _ = write!(s, "  {verdict} {} ({} checked", r.theorem, r.checked);
                if r.failures > 0 {
                    let _ = write!(s, ", {} failed", r.failures);
                }
                s.push(')');
                if let Some(m) = &r.first_failure {
                    let _ = write!(s, ": {m}");
                }
                s.push('\n');
            }
        }
        let _ = writeln!(s, "overall: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }

    pub fn to_json(&self) -> String {
        crate::io::to_json_text(self)
    }
}

const VERIFY: &str = "operator identity";
const GRAPH: &str = "operator <=> graph sub-2-group <=> lifted operator on the semidirect product";
const DESCENDANT: &str = "descendant 2-group, homomorphism and action";
const DESCENDANT_XMOD: &str = "descendant crossed module and its map into Map -> Diff";
const CORRESPONDENCE: &str = "2-group / crossed module operator correspondence";
const YBE: &str = "categorical Yang-Baxter solution";
const FACTOR: &str = "Cayley transform and unique factorization";
const BAR_PLUS: &str = "B-bar operator and B-plus homomorphism";
const INVERSE: &str = "bijective crossed homomorphisms are formal inverses";
const XHOM: &str = "crossed homomorphism graph, lift and derived action";

fn msg(e: Error) -> String {
    e.to_string()
}

/// Sampling for fixtures too large for exhaustive single-entry mutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Random `(B, B0)` pairs per large fixture, half of them one-entry
    /// mutants of genuine operators.
    pub samples: usize,
    pub seed: u64,
}

/// Random candidate pairs, drawn sequentially so the list only depends on
/// the seed.
pub fn sample_pairs(act: &TwoGroupAction, ops: &[(Vec<usize>, Vec<usize>)], count: usize, seed: u64) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (n, n0) = (act.actor().arrows().order(), act.actor().objects().order());
    let (m, m0) = (act.target().arrows().order(), act.target().objects().order());
    (0..count)
        .map(|k| {
            if k % 2 == 1 && !ops.is_empty() {
                let (mut b, mut b0) = ops[rng.gen_range(0..ops.len())].clone();
                if rng.gen_bool(0.5) {
                    let i = rng.gen_range(0..m);
                    b[i] = (b[i] + rng.gen_range(1..n.max(2))) % n;
                } else {
                    let i = rng.gen_range(0..m0);
                    b0[i] = (b0[i] + rng.gen_range(1..n0.max(2))) % n0;
                }
                (b, b0)
            } else {
                ((0..m).map(|_| rng.gen_range(0..n)).collect(), (0..m0).map(|_| rng.gen_range(0..n0)).collect())
            }
        })
        .collect()
}

/// Runs the suite on one bundle.
pub fn run_bundle(bundle: &Bundle, budget: &Budget, opts: &Options) -> Result<FixtureReport> {
    let act = &bundle.action;
    let adjoint = act.is_adjoint();
    let enumerated = bundle.operators.is_none();
    let ops = match &bundle.operators {
        Some(v) => v.clone(),
        None => rrb::enumerate_rrb_two_group(act, budget)?,
    };
    let sd = Semidirect::new(act)?;
    let small = act.target().arrows().order() <= 8;

    let per_op: Vec<Vec<(&'static str, std::result::Result<(), String>)>> =
        ops.par_iter().map(|(b, b0)| check_operator(act, &sd, b, b0, adjoint, small)).collect();

    let mut names = vec![VERIFY, GRAPH, DESCENDANT, DESCENDANT_XMOD, CORRESPONDENCE, YBE];
    if adjoint {
        names.extend([FACTOR, BAR_PLUS]);
    }
    names.extend([INVERSE, XHOM]);
    let mut results: Vec<TheoremResult> = names.iter().map(|n| TheoremResult::new(n)).collect();
    let slot = |results: &[TheoremResult], name: &str| results.iter().position(|r| r.theorem == name).expect("known theorem");
    for outcomes in per_op {
        for (name, outcome) in outcomes {
            let i = slot(&results, name);
            results[i].record(outcome);
        }
    }

    if !small && opts.samples > 0 {
        let i = slot(&results, GRAPH);
        let pairs = sample_pairs(act, &ops, opts.samples, opts.seed);
        let outs: Vec<_> = pairs.par_iter().map(|(b, b0)| graph_agrees(act, &sd, b, b0)).collect();
        for o in outs {
            results[i].record(o);
        }
    }

    if enumerated {
        // counts agree across the correspondence
        let i = slot(&results, CORRESPONDENCE);
        let outcome =
            action_xmod_from_2group(act).and_then(|(xa, _, _)| rrb::enumerate_rrb_xmod(&xa, budget)).map_err(msg).and_then(|xs| {
                (xs.len() == ops.len()).then_some(()).ok_or(format!(
                    "{} 2-group operators but {} crossed module operators",
                    ops.len(),
                    xs.len()
                ))
            });
        results[i].record(outcome);
    }

    // crossed homomorphisms of the same action
    let same_size =
        act.actor().arrows().order() == act.target().arrows().order() && act.actor().objects().order() == act.target().objects().order();
    if enumerated && same_size {
        let homs = xhom::enumerate_crossed_homs_two_group(act, budget)?;
        let i = slot(&results, XHOM);
        let outs: Vec<std::result::Result<(), String>> = homs.par_iter().map(|(d, d0)| check_crossed_hom(act, d, d0)).collect();
        for o in outs {
            results[i].record(o);
        }
        let i = slot(&results, INVERSE);
        results[i].record(inverse_sets_agree(act, &ops, &homs, budget));
    }

    Ok(FixtureReport { fixture: bundle.name.clone(), operators: ops.len(), results })
}

fn check_operator(
    act: &Arc<TwoGroupAction>,
    sd: &Semidirect,
    b: &[usize],
    b0: &[usize],
    adjoint: bool,
    small: bool,
) -> Vec<(&'static str, std::result::Result<(), String>)> {
    let op = match rrb::verify_rrb_two_group(b.to_vec(), b0.to_vec(), act) {
        Ok(op) => op,
        Err(e) => return vec![(VERIFY, Err(format!("operator {b:?} / {b0:?}: {e}")))],
    };
    let mut out = vec![(VERIFY, Ok(()))];
    out.push((GRAPH, graph_agrees(act, sd, b, b0)));
    if small {
        let (n, n0) = (act.actor().arrows().order(), act.actor().objects().order());
        for m in single_entry_mutants(b, n) {
            out.push((GRAPH, graph_agrees(act, sd, &m.table, b0)));
        }
        for m in single_entry_mutants(b0, n0) {
            out.push((GRAPH, graph_agrees(act, sd, b, &m.table)));
        }
    }
    out.push((DESCENDANT, descendant(&op, adjoint)));
    let xmod_side = rrb::rrb_2group_to_xmod(&op);
    out.push((
        DESCENDANT_XMOD,
        xmod_side
            .as_ref()
            .map_err(|e| e.to_string())
            .and_then(|(x, _, _)| rrb::descendant_xmod(x).and_then(|d| d.check_map_diff()).map_err(msg)),
    ));
    out.push((CORRESPONDENCE, correspondence(&op)));
    out.push((YBE, ybe::build_rb(&op).and_then(|s| ybe::verify_cat_ybe(s, act.target())).map(|_| ()).map_err(msg)));
    if adjoint {
        out.push((FACTOR, rrb::cayley_factorization(&op).map(|_| ()).map_err(msg)));
        out.push((BAR_PLUS, bar_plus(&op)));
    }
    if is_bijection(b, b.len()) && is_bijection(b0, b0.len()) && b.len() == act.actor().arrows().order() {
        out.push((INVERSE, formal_inverse(&op)));
    }
    out
}

/// The three characterizations agree on a raw pair of maps.
fn graph_agrees(act: &Arc<TwoGroupAction>, sd: &Semidirect, b: &[usize], b0: &[usize]) -> std::result::Result<(), String> {
    let direct = rrb::verify_rrb_two_group(b.to_vec(), b0.to_vec(), act).is_ok();
    let graph = rrb::graph_2subgroup(b, b0, sd).is_ok();
    let (hat, hat0) = rrb::hat_b_maps(b, b0, sd);
    let lifted = rrb::verify_rrb_two_group(hat, hat0, &sd.adjoint).is_ok();
    if direct == graph && graph == lifted {
        Ok(())
    } else {
        Err(format!("verdicts differ on {b:?} / {b0:?}: operator {direct}, graph {graph}, lifted {lifted}"))
    }
}

fn descendant(op: &RrbTwoGroupOp, adjoint: bool) -> std::result::Result<(), String> {
    let desc = rrb::descendant_two_group(op).map_err(msg)?;
    rrb::descendant_action(op, &desc).map_err(msg)?;
    if adjoint {
        rrb::rota_baxter_on_descendant(op, &desc).map_err(msg)?;
        rrb::plus_b(op, &desc).map_err(msg)?;
    }
    Ok(())
}

/// To the crossed module level and back, compared under `π`.
fn correspondence(op: &RrbTwoGroupOp) -> std::result::Result<(), String> {
    let (xop, kp, kq) = rrb::rrb_2group_to_xmod(op).map_err(msg)?;
    let two = rrb::rrb_xmod_to_2group(&xop).map_err(msg)?;
    let (p, q) = (op.action().actor(), op.action().target());
    let (pi_p, pi_q) = (pi_map(p, &kp), pi_map(q, &kq));
    if let Some(y) = (0..pi_q.len()).find(|&y| pi_p[two.b()[y]] != op.b()[pi_q[y]]) {
        return Err(format!("π∘B̃ and B∘π differ at {y}"));
    }
    if two.b0() != op.b0() {
        return Err("object components differ after the round trip".into());
    }
    let (back, _, _) = rrb::rrb_2group_to_xmod(&two).map_err(msg)?;
    if back.b1() != xop.b1() || back.b0() != xop.b0() {
        return Err("crossed module operator changed after the round trip".into());
    }
    Ok(())
}

fn bar_plus(op: &RrbTwoGroupOp) -> std::result::Result<(), String> {
    let bar = rrb::bar_b(op).map_err(msg)?;
    let twice = rrb::bar_b(&bar).map_err(msg)?;
    if twice.b() != op.b() || twice.b0() != op.b0() {
        return Err("B-bar is not an involution".into());
    }
    Ok(())
}

fn formal_inverse(op: &RrbTwoGroupOp) -> std::result::Result<(), String> {
    let dh = xhom::rrb_to_crossed_hom_two_group(op).map_err(msg)?;
    let back = xhom::crossed_hom_to_rrb_two_group(&dh).map_err(msg)?;
    if back.b() != op.b() || back.b0() != op.b0() {
        return Err("inverting twice changed the operator".into());
    }
    let (xop, _, _) = rrb::rrb_2group_to_xmod(op).map_err(msg)?;
    let xd = xhom::rrb_to_crossed_hom_xmod(&xop).map_err(msg)?;
    let xback = xhom::crossed_hom_to_rrb_xmod(&xd).map_err(msg)?;
    if xback.b1() != xop.b1() || xback.b0() != xop.b0() {
        return Err("inverting twice changed the crossed module operator".into());
    }
    Ok(())
}

fn check_crossed_hom(act: &Arc<TwoGroupAction>, d: &[usize], d0: &[usize]) -> std::result::Result<(), String> {
    let dh = xhom::verify_crossed_hom_two_group(d.to_vec(), d0.to_vec(), act).map_err(msg)?;
    xhom::graph_check(&dh).map_err(msg)?;
    xhom::hat_d(&dh).map_err(msg)?;
    let (_, tilde) = xhom::derived_action(&dh).map_err(msg)?;
    let (again, _) = xhom::derived_action(&tilde).map_err(msg)?;
    if again.phi().perms() != act.phi().perms() || again.phi0().perms() != act.phi0().perms() {
        return Err(format!("derived action is not an involution for {d:?}"));
    }
    Ok(())
}

/// Bijective crossed homomorphisms against inverted bijective operators,
/// at the 2-group level and at the crossed module level.
fn inverse_sets_agree(
    act: &Arc<TwoGroupAction>,
    ops: &[(Vec<usize>, Vec<usize>)],
    homs: &[(Vec<usize>, Vec<usize>)],
    budget: &Budget,
) -> std::result::Result<(), String> {
    let bij = |(a, b): &&(Vec<usize>, Vec<usize>)| is_bijection(a, a.len()) && is_bijection(b, b.len());
    let inv = |(a, b): &(Vec<usize>, Vec<usize>)| (crate::fingroup::invert_bijection(a), crate::fingroup::invert_bijection(b));
    let lhs: BTreeSet<_> = homs.iter().filter(bij).cloned().collect();
    let rhs: BTreeSet<_> = ops.iter().filter(bij).map(inv).collect();
    if lhs != rhs {
        return Err(format!("2-group level: {} bijective crossed homomorphisms, {} inverted operators", lhs.len(), rhs.len()));
    }
    let (xa, _, _) = action_xmod_from_2group(act).map_err(msg)?;
    let xhoms = xhom::enumerate_crossed_homs_xmod(&xa, budget).map_err(msg)?;
    let xops = rrb::enumerate_rrb_xmod(&xa, budget).map_err(msg)?;
    let lhs: BTreeSet<_> = xhoms.iter().filter(bij).cloned().collect();
    let rhs: BTreeSet<_> = xops.iter().filter(bij).map(inv).collect();
    if lhs != rhs {
        return Err(format!("crossed module level: {} bijective crossed homomorphisms, {} inverted operators", lhs.len(), rhs.len()));
    }
    Ok(())
}

pub fn run(bundles: &[Bundle], budget: &Budget, opts: &Options) -> Result<Report> {
    let fixtures = bundles.iter().map(|b| run_bundle(b, budget, opts)).collect::<Result<Vec<_>>>()?;
    Ok(Report { fixtures })
}
