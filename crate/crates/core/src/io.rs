//! JSON file formats. Structures may be given inline, as a path (relative
//! to the referring file) or as a built-in id from [`crate::fixtures`].

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, GroupAction};
use crate::fixtures;
use crate::liealg::{LieAlgebra, Matrix, Q};
use crate::twogroup::{validate_two_group, validate_two_group_action, TwoGroup, TwoGroupAction};
use crate::xmod::{validate_xmod, validate_xmod_action, CrossedModule, XModAction};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile { order: g.order(), table: g.rows(), labels: g.labels().map(|l| l.to_vec()) }
    }
}

/// Either a reference (built-in id or path) or an inline value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Name(String),
    Inline(T),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoGroupFile {
    pub arrow_group: Ref<GroupFile>,
    pub object_group: Ref<GroupFile>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub unit: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XModFile {
    pub g1: Ref<GroupFile>,
    pub g0: Ref<GroupFile>,
    pub mu: Vec<usize>,
    pub act: Vec<Vec<usize>>,
}

impl TwoGroupFile {
    pub fn from_two_group(p: &TwoGroup) -> Self {
        TwoGroupFile {
            arrow_group: Ref::Inline(GroupFile::from_group(p.arrows())),
            object_group: Ref::Inline(GroupFile::from_group(p.objects())),
            src: p.src_map().to_vec(),
            tgt: p.tgt_map().to_vec(),
            unit: p.unit_map().to_vec(),
        }
    }
}

impl XModFile {
    pub fn from_xmod(x: &CrossedModule) -> Self {
        XModFile {
            g1: Ref::Inline(GroupFile::from_group(x.g1())),
            g0: Ref::Inline(GroupFile::from_group(x.g0())),
            mu: x.mu_hom().map().to_vec(),
            act: x.action().perms().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectLevel {
    pub perms: Vec<Vec<usize>>,
}

/// Group action, or 2-group action when `object_level` is present. The
/// actor and target are group or 2-group references accordingly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionFile {
    pub actor: Ref<Value>,
    pub target: Ref<Value>,
    pub perms: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_level: Option<ObjectLevel>,
}

impl ActionFile {
    pub fn from_two_group_action(a: &TwoGroupAction) -> Self {
        let inline = |p: &TwoGroup| Ref::Inline(serde_json::to_value(TwoGroupFile::from_two_group(p)).expect("2-group serializes"));
        ActionFile {
            actor: inline(a.actor()),
            target: inline(a.target()),
            perms: a.phi().perms().to_vec(),
            object_level: Some(ObjectLevel { perms: a.phi0().perms().to_vec() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XModActionFile {
    pub actor: Ref<XModFile>,
    pub target: Ref<XModFile>,
    pub alpha: Vec<Vec<usize>>,
    pub beta1: Vec<Vec<usize>>,
    pub beta0: Vec<Vec<usize>>,
}

impl XModActionFile {
    pub fn from_action(a: &XModAction) -> Self {
        XModActionFile {
            actor: Ref::Inline(XModFile::from_xmod(a.actor())),
            target: Ref::Inline(XModFile::from_xmod(a.target())),
            alpha: a.alpha_maps().to_vec(),
            beta1: a.beta1().perms().to_vec(),
            beta0: a.beta0().perms().to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpLevel {
    Group,
    TwoGroup,
    Xmod,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    #[default]
    Rrb,
    CrossedHom,
}

/// `action` is an inline action, a path to an action file, or
/// `ad:<id>` / `trivial:<id>` for the adjoint or trivial action on a
/// built-in structure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorFile {
    pub level: OpLevel,
    #[serde(default)]
    pub kind: OpKind,
    #[serde(rename = "B", alias = "D", default, skip_serializing_if = "Vec::is_empty")]
    pub b: Vec<usize>,
    #[serde(rename = "B0", alias = "D0", default, skip_serializing_if = "Option::is_none")]
    pub b0: Option<Vec<usize>>,
    #[serde(rename = "B1", alias = "D1", default, skip_serializing_if = "Option::is_none")]
    pub b1: Option<Vec<usize>>,
    pub action: Ref<Value>,
}

impl OperatorFile {
    /// `(B, B0)` at the 2-group level, `(B1, B0)` at the crossed module
    /// level (where `B1` may also be given as `B`).
    pub fn pair(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        let b0 = self.b0.clone().ok_or_else(|| Error::Parse("operator needs \"B0\"".into()))?;
        let top = match self.level {
            OpLevel::Xmod => self.b1.clone().unwrap_or_else(|| self.b.clone()),
            _ => self.b.clone(),
        };
        Ok((top, b0))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub n: usize,
    pub n0: usize,
    #[serde(rename = "R")]
    pub r: Vec<usize>,
    #[serde(rename = "R0")]
    pub r0: Vec<usize>,
}

/// `structure[i][j][k] = [num, den]`, the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieAlgebraFile {
    pub dim: usize,
    pub structure: Vec<Vec<Vec<[i64; 2]>>>,
}

impl LieAlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Result<Self> {
        let structure = g
            .structure()
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(rational_pair).collect::<Result<Vec<_>>>()).collect())
            .collect::<Result<_>>()?;
        Ok(LieAlgebraFile { dim: g.dim(), structure })
    }
}

fn rational_pair(x: &Q) -> Result<[i64; 2]> {
    use num_traits::ToPrimitive;
    match (x.numer().to_i64(), x.denom().to_i64()) {
        (Some(n), Some(d)) => Ok([n, d]),
        _ => Err(Error::Parse(format!("{x} does not fit a 64-bit fraction"))),
    }
}

pub fn rational(p: [i64; 2]) -> Result<Q> {
    if p[1] == 0 {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(crate::liealg::ratio(p[0], p[1]))
}

/// `{"level": "lie", "algebra": ref, "action": "ad"|"trivial", "B": matrix}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieOperatorFile {
    pub algebra: String,
    #[serde(default = "default_lie_action")]
    pub action: String,
    #[serde(default)]
    pub kind: OpKind,
    #[serde(rename = "B", alias = "D")]
    pub b: Vec<Vec<[i64; 2]>>,
}

fn default_lie_action() -> String {
    "ad".into()
}

pub fn matrix(rows: &[Vec<[i64; 2]>]) -> Result<Matrix> {
    rows.iter().map(|r| r.iter().map(|&p| rational(p)).collect()).collect()
}

pub fn matrix_file(m: &Matrix) -> Result<Vec<Vec<[i64; 2]>>> {
    m.iter().map(|r| r.iter().map(rational_pair).collect()).collect()
}

/// Indented JSON with arrays of scalars kept on one line, so tables read
/// as rows. Ends with a newline.
pub fn to_json_text<T: Serialize>(v: &T) -> String {
    fn scalar(v: &Value) -> bool {
        !matches!(v, Value::Array(_) | Value::Object(_))
    }
    fn write(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent + 1);
        match v {
            Value::Array(items) if items.iter().all(scalar) => {
                out.push_str(&serde_json::to_string(v).expect("JSON value"));
            }
            Value::Array(items) => {
                out.push_str("[\n");
                for (i, x) in items.iter().enumerate() {
                    out.push_str(&pad);
                    write(x, indent + 1, out);
                    out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Object(map) if !map.is_empty() => {
                out.push_str("{\n");
                for (i, (k, x)) in map.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str(&serde_json::to_string(k).expect("JSON key"));
                    out.push_str(": ");
                    write(x, indent + 1, out);
                    out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
            _ => out.push_str(&serde_json::to_string(v).expect("JSON value")),
        }
    }
    let mut out = String::new();
    write(&serde_json::to_value(v).expect("serializable"), 0, &mut out);
    out.push('\n');
    out
}

/// Resolves references relative to a base directory.
#[derive(Clone, Debug)]
pub struct Loader {
    base: PathBuf,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

impl Loader {
    pub fn new(base: impl Into<PathBuf>) -> Self {
        Loader { base: base.into() }
    }

    /// A loader for references inside `file`.
    pub fn beside(file: &Path) -> Self {
        Loader::new(file.parent().map(Path::to_path_buf).unwrap_or_default())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.base.join(name)
    }

    fn is_file(&self, name: &str) -> bool {
        name.ends_with(".json") || self.path(name).is_file()
    }

    pub fn group(&self, r: &Ref<GroupFile>) -> Result<Arc<FiniteGroup>> {
        match r {
            Ref::Name(n) if !self.is_file(n) => fixtures::group(n),
            Ref::Name(n) => self.group(&Ref::Inline(read_json(&self.path(n))?)),
            Ref::Inline(f) => {
                if f.table.len() != f.order {
                    return Err(Error::BadLength { map: "table".into(), len: f.table.len(), expected: f.order });
                }
                let g = FiniteGroup::from_table(&f.table, None)?;
                let g = match &f.labels {
                    Some(l) => g.with_labels(l.clone())?,
                    None => g,
                };
                Ok(Arc::new(g))
            }
        }
    }

    pub fn two_group(&self, r: &Ref<TwoGroupFile>) -> Result<Arc<TwoGroup>> {
        match r {
            Ref::Name(n) if !self.is_file(n) => fixtures::two_group(n),
            Ref::Name(n) => Loader::beside(&self.path(n)).two_group(&Ref::Inline(read_json(&self.path(n))?)),
            Ref::Inline(f) => {
                let a = self.group(&f.arrow_group)?;
                let o = self.group(&f.object_group)?;
                Ok(Arc::new(validate_two_group(&a, &o, f.src.clone(), f.tgt.clone(), f.unit.clone())?))
            }
        }
    }

    pub fn xmod(&self, r: &Ref<XModFile>) -> Result<Arc<CrossedModule>> {
        match r {
            Ref::Name(n) if !self.is_file(n) => fixtures::xmod(n),
            Ref::Name(n) => Loader::beside(&self.path(n)).xmod(&Ref::Inline(read_json(&self.path(n))?)),
            Ref::Inline(f) => {
                let g1 = self.group(&f.g1)?;
                let g0 = self.group(&f.g0)?;
                Ok(Arc::new(validate_xmod(&g1, &g0, f.mu.clone(), f.act.clone())?))
            }
        }
    }

    pub fn lie_algebra(&self, name: &str) -> Result<Arc<LieAlgebra>> {
        if !self.is_file(name) {
            return fixtures::lie_algebra(name);
        }
        let f: LieAlgebraFile = read_json(&self.path(name))?;
        let c =
            f.structure.iter().map(|row| row.iter().map(|v| v.iter().map(|&p| rational(p)).collect()).collect()).collect::<Result<_>>()?;
        Ok(Arc::new(LieAlgebra::new(f.dim, c)?))
    }

    fn builtin<'a>(&self, name: &'a str) -> Option<(bool, &'a str)> {
        if let Some(id) = name.strip_prefix("ad:") {
            Some((true, id))
        } else {
            name.strip_prefix("trivial:").map(|id| (false, id))
        }
    }

    /// The file contents behind an action reference, and a loader for the
    /// references inside it.
    fn action_value(&self, r: &Ref<Value>) -> Result<(Value, Loader)> {
        match r {
            Ref::Name(n) => Ok((read_json(&self.path(n))?, Loader::beside(&self.path(n)))),
            Ref::Inline(v) => Ok((v.clone(), self.clone())),
        }
    }

    fn value<T: for<'de> Deserialize<'de>>(r: &Ref<Value>) -> Result<Ref<T>> {
        Ok(match r {
            Ref::Name(n) => Ref::Name(n.clone()),
            Ref::Inline(v) => Ref::Inline(serde_json::from_value(v.clone())?),
        })
    }

    pub fn group_action(&self, r: &Ref<Value>) -> Result<Arc<GroupAction>> {
        if let Some((ad, id)) = self.builtin_ref(r) {
            let g = fixtures::group(id)?;
            return Ok(Arc::new(if ad { GroupAction::adjoint(&g) } else { GroupAction::trivial(&g, &g) }));
        }
        let (v, l) = self.action_value(r)?;
        let f: ActionFile = serde_json::from_value(v)?;
        let actor = l.group(&Self::value(&f.actor)?)?;
        let target = l.group(&Self::value(&f.target)?)?;
        Ok(Arc::new(GroupAction::new(&actor, &target, f.perms)?))
    }

    pub fn two_group_action(&self, r: &Ref<Value>) -> Result<Arc<TwoGroupAction>> {
        if let Some((ad, id)) = self.builtin_ref(r) {
            let p = self.two_group(&Ref::Name(id.into()))?;
            return Ok(Arc::new(if ad { TwoGroupAction::adjoint(&p) } else { TwoGroupAction::trivial(&p, &p) }));
        }
        let (v, l) = self.action_value(r)?;
        let f: ActionFile = serde_json::from_value(v)?;
        let actor = l.two_group(&Self::value(&f.actor)?)?;
        let target = l.two_group(&Self::value(&f.target)?)?;
        let phi0 = f.object_level.ok_or_else(|| Error::Parse("2-group action needs \"object_level\"".into()))?.perms;
        Ok(Arc::new(validate_two_group_action(&actor, &target, f.perms, phi0)?))
    }

    pub fn xmod_action(&self, r: &Ref<Value>) -> Result<Arc<XModAction>> {
        if let Some((ad, id)) = self.builtin_ref(r) {
            let x = self.xmod(&Ref::Name(id.into()))?;
            return Ok(Arc::new(if ad { XModAction::adjoint(&x) } else { XModAction::trivial(&x, &x) }));
        }
        let (v, l) = self.action_value(r)?;
        let f: XModActionFile = serde_json::from_value(v)?;
        let actor = l.xmod(&f.actor)?;
        let target = l.xmod(&f.target)?;
        Ok(Arc::new(validate_xmod_action(&actor, &target, f.alpha, f.beta1, f.beta0)?))
    }

    fn builtin_ref<'a>(&self, r: &'a Ref<Value>) -> Option<(bool, &'a str)> {
        match r {
            Ref::Name(n) => self.builtin(n),
            Ref::Inline(_) => None,
        }
    }
}
