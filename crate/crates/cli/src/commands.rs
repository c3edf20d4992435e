use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rota2::io::{matrix, LieOperatorFile};
use rota2::io::{read_json, ActionFile, Loader, OpKind, OpLevel, OperatorFile, Ref, SolutionFile, TwoGroupFile, XModActionFile, XModFile};
use rota2::liealg::{verify_crossed_hom_lie, verify_rrb_lie, LieAction};
use rota2::rrb::{self, RrbTwoGroupOp};
use rota2::search::Budget;
use rota2::theorems::{self, Bundle, Options};
use rota2::twogroup::SubTwoGroup;
use rota2::xmod::{two_group_to_xmod, xmod_to_two_group};
use rota2::{fixtures, xhom, ybe, Error, Result};
use serde_json::{json, Value};

use crate::{Format, Kind, Level, OpKindArg, Outcome, Target};

fn pretty(v: &impl serde::Serialize) -> String {
    rota2::io::to_json_text(v)
}

/// Turns a mathematical failure into a FAIL report with exit code 1; I/O
/// and parse errors still abort.
fn verdict(what: &str, r: Result<String>, f: Format) -> Result<Outcome> {
    match r {
        Ok(summary) => Ok(Outcome::pass(match f {
            Format::Text => format!("PASS {what}: {summary}\n"),
            Format::Json => pretty(&json!({"status": "PASS", "kind": what, "summary": summary})),
        })),
        Err(e) if e.exit_code() == 1 => Ok(Outcome {
            output: match f {
                Format::Text => format!("FAIL {what}: {e}\n"),
                Format::Json => pretty(&json!({"status": "FAIL", "kind": what, "error": e.to_string()})),
            },
            code: 1,
        }),
        Err(e) => Err(e),
    }
}

fn note_input(name: &str, inputs: &mut Vec<PathBuf>) -> bool {
    let p = Path::new(name);
    let is_file = p.is_file() || name.ends_with(".json");
    if is_file {
        inputs.push(p.to_path_buf());
    }
    is_file
}

pub(crate) fn kind_of_id(id: &str) -> Kind {
    if id.starts_with("ad:") || id.starts_with("trivial:") {
        Kind::Action
    } else if id.contains("=>") {
        Kind::TwoGroup
    } else if id.contains("->") {
        Kind::Xmod
    } else if fixtures::LIE_ALGEBRAS.contains(&id) {
        Kind::Lie
    } else {
        Kind::Group
    }
}

fn kind_of_value(v: &Value) -> Result<Kind> {
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("table") {
        Kind::Group
    } else if has("arrow_group") {
        Kind::TwoGroup
    } else if has("g1") {
        Kind::Xmod
    } else if has("perms") || has("alpha") {
        Kind::Action
    } else if has("structure") {
        Kind::Lie
    } else {
        return Err(Error::Parse("cannot tell what kind of structure this is; pass --kind".into()));
    })
}

/// Level of an action: from its file contents, or from the id after
/// `ad:` / `trivial:`.
fn action_level(input: &str, file: Option<&Value>) -> Level {
    match file {
        Some(v) if v.get("alpha").is_some() => Level::Xmod,
        Some(v) if v.get("object_level").is_some() => Level::TwoGroup,
        Some(_) => Level::Group,
        None => match kind_of_id(input.split_once(':').map_or(input, |(_, id)| id)) {
            Kind::TwoGroup => Level::TwoGroup,
            Kind::Xmod => Level::Xmod,
            _ => Level::Group,
        },
    }
}

pub fn validate(input: &str, kind: Option<Kind>, f: Format, inputs: &mut Vec<PathBuf>) -> Result<Outcome> {
    let file = if note_input(input, inputs) { Some(read_json::<Value>(Path::new(input))?) } else { None };
    let kind = match (kind, &file) {
        (Some(k), _) => k,
        (None, Some(v)) => kind_of_value(v)?,
        (None, None) => kind_of_id(input),
    };
    let l = Loader::new("");
    let (what, r) = match kind {
        Kind::Group => ("group", l.group(&Ref::Name(input.into())).map(|g| format!("order {}", g.order()))),
        Kind::TwoGroup => (
            "2-group",
            l.two_group(&Ref::Name(input.into())).map(|p| format!("{} arrows, {} objects", p.arrows().order(), p.objects().order())),
        ),
        Kind::Xmod => {
            ("crossed module", l.xmod(&Ref::Name(input.into())).map(|x| format!("|G1| = {}, |G0| = {}", x.g1().order(), x.g0().order())))
        }
        Kind::Lie => ("Lie algebra", l.lie_algebra(input).map(|g| format!("dimension {}", g.dim()))),
        Kind::Action => {
            let r = Ref::Name(input.into());
            match action_level(input, file.as_ref()) {
                Level::Group => (
                    "group action",
                    l.group_action(&r).map(|a| format!("order {} acting on order {}", a.actor().order(), a.target().order())),
                ),
                Level::TwoGroup => (
                    "2-group action",
                    l.two_group_action(&r)
                        .map(|a| format!("{} arrows acting on {} arrows", a.actor().arrows().order(), a.target().arrows().order())),
                ),
                Level::Xmod => (
                    "crossed module action",
                    l.xmod_action(&r).map(|a| format!("|G1| = {} acting on |H1| = {}", a.actor().g1().order(), a.target().g1().order())),
                ),
            }
        }
    };
    verdict(what, r, f)
}

fn level_name(l: Level) -> &'static str {
    match l {
        Level::Group => "group",
        Level::TwoGroup => "two_group",
        Level::Xmod => "xmod",
    }
}

pub fn enumerate(action: &str, level: Level, kind: OpKindArg, f: Format, budget: &Budget, inputs: &mut Vec<PathBuf>) -> Result<Outcome> {
    note_input(action, inputs);
    let l = Loader::new("");
    let r = Ref::Name(action.to_string());
    let rrb = kind == OpKindArg::Rrb;
    let (top, bottom) = match (level, rrb) {
        (Level::Group, true) => ("B", ""),
        (Level::Group, false) => ("D", ""),
        (Level::TwoGroup, true) => ("B", "B0"),
        (Level::TwoGroup, false) => ("D", "D0"),
        (Level::Xmod, true) => ("B1", "B0"),
        (Level::Xmod, false) => ("D1", "D0"),
    };
    let records: Vec<Value> = match level {
        Level::Group => {
            let a = l.group_action(&r)?;
            let maps = if rrb { rrb::enumerate_rrb_group(&a, budget)? } else { xhom::enumerate_crossed_homs_group(&a, budget)? };
            maps.into_iter().map(|b| json!({ top: b })).collect()
        }
        Level::TwoGroup => {
            let a = l.two_group_action(&r)?;
            let pairs = if rrb { rrb::enumerate_rrb_two_group(&a, budget)? } else { xhom::enumerate_crossed_homs_two_group(&a, budget)? };
            pairs.into_iter().map(|(b, b0)| json!({ top: b, bottom: b0 })).collect()
        }
        Level::Xmod => {
            let a = l.xmod_action(&r)?;
            let pairs = if rrb { rrb::enumerate_rrb_xmod(&a, budget)? } else { xhom::enumerate_crossed_homs_xmod(&a, budget)? };
            pairs.into_iter().map(|(b, b0)| json!({ top: b, bottom: b0 })).collect()
        }
    };
    let output = match f {
        Format::Text => {
            let mut s = String::new();
            for r in &records {
                let _ = writeln!(s, "{r}");
            }
            let _ = writeln!(s, "count: {}", records.len());
            s
        }
        Format::Json => pretty(&json!({
            "level": level_name(level),
            "kind": if rrb { "rrb" } else { "crossed_hom" },
            "count": records.len(),
            "operators": records,
        })),
    };
    Ok(Outcome::pass(output))
}

fn load_operator(path: &Path, inputs: &mut Vec<PathBuf>) -> Result<(OperatorFile, Loader)> {
    inputs.push(path.to_path_buf());
    Ok((read_json(path)?, Loader::beside(path)))
}

fn verify_operator(op: &OperatorFile, l: &Loader) -> Result<String> {
    let rrb = op.kind == OpKind::Rrb;
    match op.level {
        OpLevel::Group => {
            let a = l.group_action(&op.action)?;
            if rrb {
                rrb::verify_rrb_group(op.b.clone(), &a)?;
            } else {
                xhom::verify_crossed_hom_group(op.b.clone(), &a)?;
            }
        }
        OpLevel::TwoGroup => {
            let a = l.two_group_action(&op.action)?;
            let (b, b0) = op.pair()?;
            if rrb {
                rrb::verify_rrb_two_group(b, b0, &a)?;
            } else {
                xhom::verify_crossed_hom_two_group(b, b0, &a)?;
            }
        }
        OpLevel::Xmod => {
            let a = l.xmod_action(&op.action)?;
            let (b1, b0) = op.pair()?;
            if rrb {
                rrb::verify_rrb_xmod(b1, b0, &a)?;
            } else {
                xhom::verify_crossed_hom_xmod(b1, b0, &a)?;
            }
        }
    }
    Ok("all identities hold".into())
}

fn verify_lie(v: Value, l: &Loader) -> Result<String> {
    let f: LieOperatorFile = serde_json::from_value(v)?;
    let g = l.lie_algebra(&f.algebra)?;
    let action = match f.action.as_str() {
        "ad" => LieAction::adjoint(&g),
        "trivial" => LieAction::trivial(&g, &g),
        other => return Err(Error::Parse(format!("Lie action must be \"ad\" or \"trivial\", not {other:?}"))),
    };
    let b = matrix(&f.b)?;
    match f.kind {
        OpKind::Rrb => verify_rrb_lie(b, &action).map(|_| ())?,
        OpKind::CrossedHom => verify_crossed_hom_lie(&b, &action)?,
    }
    Ok("all identities hold".into())
}

pub fn verify(path: &Path, f: Format, inputs: &mut Vec<PathBuf>) -> Result<Outcome> {
    inputs.push(path.to_path_buf());
    let v: Value = read_json(path)?;
    let l = Loader::beside(path);
    if v.get("algebra").is_some() {
        return verdict("Lie operator", verify_lie(v, &l), f);
    }
    let op: OperatorFile = serde_json::from_value(v)?;
    let what = match (op.level, op.kind) {
        (OpLevel::Group, OpKind::Rrb) => "group operator",
        (OpLevel::TwoGroup, OpKind::Rrb) => "2-group operator",
        (OpLevel::Xmod, OpKind::Rrb) => "crossed module operator",
        (OpLevel::Group, OpKind::CrossedHom) => "group crossed homomorphism",
        (OpLevel::TwoGroup, OpKind::CrossedHom) => "2-group crossed homomorphism",
        (OpLevel::Xmod, OpKind::CrossedHom) => "crossed module crossed homomorphism",
    };
    verdict(what, verify_operator(&op, &l), f)
}

pub fn theorems(
    paths: &[PathBuf],
    corpus: bool,
    samples: usize,
    seed: u64,
    f: Format,
    budget: &Budget,
    inputs: &mut Vec<PathBuf>,
) -> Result<Outcome> {
    let mut bundles = if corpus { theorems::corpus()? } else { Vec::new() };
    for p in paths {
        inputs.push(p.clone());
        bundles.push(Bundle::load(p)?);
    }
    if bundles.is_empty() {
        return Err(Error::Parse("give one or more bundle files, or --corpus".into()));
    }
    let report = theorems::run(&bundles, budget, &Options { samples, seed })?;
    let output = match f {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    Ok(Outcome { output, code: if report.passed() { 0 } else { 1 } })
}

/// A relative Rota–Baxter operator at the 2-group level, converting from
/// the crossed module level if needed.
fn two_group_operator(path: &Path, inputs: &mut Vec<PathBuf>) -> Result<RrbTwoGroupOp> {
    let (op, l) = load_operator(path, inputs)?;
    if op.kind != OpKind::Rrb {
        return Err(Error::Parse("expected a relative Rota-Baxter operator, not a crossed homomorphism".into()));
    }
    match op.level {
        OpLevel::TwoGroup => {
            let (b, b0) = op.pair()?;
            rrb::verify_rrb_two_group(b, b0, &l.two_group_action(&op.action)?)
        }
        OpLevel::Xmod => {
            let (b1, b0) = op.pair()?;
            rrb::rrb_xmod_to_2group(&rrb::verify_rrb_xmod(b1, b0, &l.xmod_action(&op.action)?)?)
        }
        OpLevel::Group => Err(Error::Parse("expected a 2-group or crossed module operator".into())),
    }
}

pub fn ybe(path: &Path, f: Format, inputs: &mut Vec<PathBuf>) -> Result<Outcome> {
    let op = two_group_operator(path, inputs)?;
    let sol = ybe::verify_cat_ybe(ybe::build_rb(&op)?, op.action().target())?;
    let output = match f {
        Format::Json => pretty(&SolutionFile { n: sol.r.n(), n0: sol.r0.n(), r: sol.r.map().to_vec(), r0: sol.r0.map().to_vec() }),
        Format::Text => {
            let mut s = String::new();
            for (name, m) in [("arrows", &sol.r), ("objects", &sol.r0)] {
                let _ = writeln!(s, "R on {name} ({} elements)", m.n());
                for x in 0..m.n() {
                    for y in 0..m.n() {
                        let (u, v) = m.apply(x, y);
                        let _ = writeln!(s, "  ({x}, {y})\t({u}, {v})");
                    }
                }
            }
            s
        }
    };
    Ok(Outcome::pass(output))
}

fn sub_json(s: &SubTwoGroup) -> Value {
    json!({"arrows": s.arrows, "objects": s.objects})
}

pub fn factorize(path: &Path, f: Format, inputs: &mut Vec<PathBuf>) -> Result<Outcome> {
    let op = two_group_operator(path, inputs)?;
    let c = rrb::cayley_factorization(&op)?;
    let output = match f {
        Format::Json => pretty(&json!({
            "image_b_plus": sub_json(&c.p_plus),
            "image_b": sub_json(&c.p_minus),
            "kernel_b": sub_json(&c.k_plus),
            "kernel_b_plus": sub_json(&c.k_minus),
            "arrows": c.factors,
            "objects": c.factors0,
        })),
        Format::Text => {
            let mut s = String::new();
            for (name, sub) in [("Im B+", &c.p_plus), ("Im B", &c.p_minus), ("Ker B", &c.k_plus), ("Ker B+", &c.k_minus)] {
                let _ = writeln!(s, "{name}: arrows {:?}, objects {:?}", sub.arrows, sub.objects);
            }
            for (name, fs) in [("arrow", &c.factors), ("object", &c.factors0)] {
                for (p, (a, b)) in fs.iter().enumerate() {
                    let _ = writeln!(s, "{name} {p} = {a} . {b}^-1");
                }
            }
            s
        }
    };
    Ok(Outcome::pass(output))
}

fn operator_file(level: OpLevel, kind: OpKind, top: &[usize], b0: &[usize], action: Ref<Value>) -> OperatorFile {
    let (b, b1) = match level {
        OpLevel::Xmod => (Vec::new(), Some(top.to_vec())),
        _ => (top.to_vec(), None),
    };
    OperatorFile { level, kind, b, b0: Some(b0.to_vec()), b1, action }
}

fn convert_operator(path: &Path, to: Target, inputs: &mut Vec<PathBuf>) -> Result<OperatorFile> {
    let (op, l) = load_operator(path, inputs)?;
    let rrb = op.kind == OpKind::Rrb;
    let inline = |v: Value| Ref::Inline(v);
    match (op.level, to) {
        (OpLevel::TwoGroup, Target::Xmod) if rrb => {
            let (b, b0) = op.pair()?;
            let two = rrb::verify_rrb_two_group(b, b0, &l.two_group_action(&op.action)?)?;
            let (x, _, _) = rrb::rrb_2group_to_xmod(&two)?;
            let action = inline(serde_json::to_value(XModActionFile::from_action(x.action()))?);
            Ok(operator_file(OpLevel::Xmod, OpKind::Rrb, x.b1(), x.b0(), action))
        }
        (OpLevel::Xmod, Target::TwoGroup) if rrb => {
            let (b1, b0) = op.pair()?;
            let x = rrb::verify_rrb_xmod(b1, b0, &l.xmod_action(&op.action)?)?;
            let two = rrb::rrb_xmod_to_2group(&x)?;
            let action = inline(serde_json::to_value(ActionFile::from_two_group_action(two.action()))?);
            Ok(operator_file(OpLevel::TwoGroup, OpKind::Rrb, two.b(), two.b0(), action))
        }
        (OpLevel::TwoGroup, Target::CrossedHom) if rrb => {
            let (b, b0) = op.pair()?;
            let d = xhom::rrb_to_crossed_hom_two_group(&rrb::verify_rrb_two_group(b, b0, &l.two_group_action(&op.action)?)?)?;
            Ok(operator_file(OpLevel::TwoGroup, OpKind::CrossedHom, d.d(), d.d0(), op.action.clone()))
        }
        (OpLevel::TwoGroup, Target::Rrb) if !rrb => {
            let (d, d0) = op.pair()?;
            let b = xhom::crossed_hom_to_rrb_two_group(&xhom::verify_crossed_hom_two_group(d, d0, &l.two_group_action(&op.action)?)?)?;
            Ok(operator_file(OpLevel::TwoGroup, OpKind::Rrb, b.b(), b.b0(), op.action.clone()))
        }
        (OpLevel::Xmod, Target::CrossedHom) if rrb => {
            let (b1, b0) = op.pair()?;
            let d = xhom::rrb_to_crossed_hom_xmod(&rrb::verify_rrb_xmod(b1, b0, &l.xmod_action(&op.action)?)?)?;
            Ok(operator_file(OpLevel::Xmod, OpKind::CrossedHom, d.d1(), d.d0(), op.action.clone()))
        }
        (OpLevel::Xmod, Target::Rrb) if !rrb => {
            let (d1, d0) = op.pair()?;
            let b = xhom::crossed_hom_to_rrb_xmod(&xhom::verify_crossed_hom_xmod(d1, d0, &l.xmod_action(&op.action)?)?)?;
            Ok(operator_file(OpLevel::Xmod, OpKind::Rrb, b.b1(), b.b0(), op.action.clone()))
        }
        (level, to) => Err(Error::Parse(format!("no conversion from a {level:?} {:?} to {to:?}", op.kind))),
    }
}

pub fn convert(path: &Path, to: Target, inputs: &mut Vec<PathBuf>) -> Result<Outcome> {
    let v: Value = read_json(path)?;
    let l = Loader::beside(path);
    let output = if v.get("level").is_some() {
        pretty(&convert_operator(path, to, inputs)?)
    } else {
        inputs.push(path.to_path_buf());
        match (kind_of_value(&v)?, to) {
            (Kind::TwoGroup, Target::Xmod) => {
                let p = l.two_group(&Ref::Inline(serde_json::from_value::<TwoGroupFile>(v)?))?;
                pretty(&XModFile::from_xmod(&two_group_to_xmod(&p)?.xmod))
            }
            (Kind::Xmod, Target::TwoGroup) => {
                let x = l.xmod(&Ref::Inline(serde_json::from_value::<XModFile>(v)?))?;
                pretty(&TwoGroupFile::from_two_group(&xmod_to_two_group(&x)?))
            }
            (kind, to) => return Err(Error::Parse(format!("no conversion from {kind:?} to {to:?}"))),
        }
    };
    Ok(Outcome::pass(output))
}
