use std::path::Path;

use rota2::fingroup::GroupAction;
use rota2::io::{
    matrix_file, ActionFile, GroupFile, LieAlgebraFile, Loader, OpKind, OpLevel, OperatorFile, Ref, TwoGroupFile, XModActionFile, XModFile,
};
use rota2::liealg::zero_and_negative_identity;
use rota2::theorems::{BundleFile, OperatorPair};
use rota2::{fixtures, Error, Result};
use serde_json::{json, Value};

use crate::{Kind, Outcome};

fn pretty(v: &impl serde::Serialize) -> String {
    rota2::io::to_json_text(v)
}

fn group_action_file(a: &GroupAction) -> Result<ActionFile> {
    Ok(ActionFile {
        actor: Ref::Inline(serde_json::to_value(GroupFile::from_group(a.actor()))?),
        target: Ref::Inline(serde_json::to_value(GroupFile::from_group(a.target()))?),
        perms: a.perms().to_vec(),
        object_level: None,
    })
}

/// JSON for one built-in id.
fn export_one(id: &str, kind: Kind) -> Result<String> {
    let l = Loader::new("");
    Ok(match kind {
        Kind::Group => pretty(&GroupFile::from_group(&*fixtures::group(id)?)),
        Kind::TwoGroup => pretty(&TwoGroupFile::from_two_group(&*fixtures::two_group(id)?)),
        Kind::Xmod => pretty(&XModFile::from_xmod(&*fixtures::xmod(id)?)),
        Kind::Lie => pretty(&LieAlgebraFile::from_algebra(&*fixtures::lie_algebra(id)?)?),
        Kind::Action => {
            let r = Ref::Name(id.to_string());
            let inner = id.split_once(':').map_or(id, |(_, rest)| rest);
            if inner.contains("=>") {
                pretty(&ActionFile::from_two_group_action(&*l.two_group_action(&r)?))
            } else if inner.contains("->") {
                pretty(&XModActionFile::from_action(&*l.xmod_action(&r)?))
            } else {
                pretty(&group_action_file(&*l.group_action(&r)?)?)
            }
        }
    })
}

/// File name for an id: `S3xS3=>S3` becomes `S3xS3-S3`.
pub fn slug(id: &str) -> String {
    id.replace("=>", "-").replace("->", "-")
}

/// The on-disk corpus: structures, operators and theorem bundles.
fn corpus_files() -> Result<Vec<(String, String)>> {
    let mut files = Vec::new();
    for id in fixtures::GROUPS {
        files.push((format!("groups/{id}.json"), export_one(id, Kind::Group)?));
    }
    for id in fixtures::two_group_ids() {
        files.push((format!("two_groups/{}.json", slug(&id)), export_one(&id, Kind::TwoGroup)?));
        for action in ["adjoint", "trivial"] {
            let bundle =
                BundleFile { two_group: Ref::Name(format!("../two_groups/{}.json", slug(&id))), action: action.into(), operators: None };
            files.push((format!("bundles/{}_{action}.json", slug(&id)), pretty(&bundle)));
        }
    }
    for id in fixtures::xmod_ids() {
        files.push((format!("xmods/{}.json", slug(&id)), export_one(&id, Kind::Xmod)?));
    }
    for id in fixtures::LIE_ALGEBRAS {
        files.push((format!("lie/{id}.json"), export_one(id, Kind::Lie)?));
    }

    let decomposition = fixtures::decomposition_operator().map().to_vec();
    let pair = |b: &[usize], b0: &[usize]| OperatorPair { b: b.to_vec(), b0: b0.to_vec() };
    let bundles = [("S3-S3_decomposition", "S3=>S3", pair(&decomposition, &decomposition)), ("Z2-T_inverse", "Z2=>T", pair(&[0, 1], &[0]))];
    for (name, id, op) in bundles {
        let bundle = BundleFile {
            two_group: Ref::Name(format!("../two_groups/{}.json", slug(id))),
            action: "adjoint".into(),
            operators: Some(vec![op]),
        };
        files.push((format!("bundles/{name}.json"), pretty(&bundle)));
    }

    let op = |level, b: &[usize], b0: Option<&[usize]>, action: &str| OperatorFile {
        level,
        kind: OpKind::Rrb,
        b: b.to_vec(),
        b0: b0.map(<[usize]>::to_vec),
        b1: None,
        action: Ref::Name(action.into()),
    };
    files.push(("operators/S3_decomposition.json".into(), pretty(&op(OpLevel::Group, &decomposition, None, "ad:S3"))));
    files.push((
        "operators/S3-S3_decomposition.json".into(),
        pretty(&op(OpLevel::TwoGroup, &decomposition, Some(&decomposition), "ad:S3=>S3")),
    ));
    files.push(("operators/Z2-T_inverse.json".into(), pretty(&op(OpLevel::TwoGroup, &[0, 1], Some(&[0]), "ad:Z2=>T"))));
    let (zero, neg) = zero_and_negative_identity(2);
    for (name, m) in [("zero", &zero), ("negative_identity", &neg)] {
        let v: Value = json!({"algebra": "../lie/aff1.json", "action": "ad", "B": matrix_file(m)?});
        files.push((format!("operators/aff1_{name}.json"), pretty(&v)));
    }
    Ok(files)
}

pub fn export(id: Option<&str>, kind: Option<Kind>, all: Option<&Path>) -> Result<Outcome> {
    if let Some(dir) = all {
        let files = corpus_files()?;
        for (name, text) in &files {
            let path = dir.join(name);
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent).map_err(|e| Error::Io(format!("{}: {e}", parent.display())))?;
            }
            std::fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        }
        return Ok(Outcome::pass(format!("wrote {} files under {}\n", files.len(), dir.display())));
    }
    let id = id.ok_or_else(|| Error::Parse("give a built-in id or --all <dir>".into()))?;
    let kind = kind.unwrap_or_else(|| crate::commands::kind_of_id(id));
    Ok(Outcome::pass(export_one(id, kind)?))
}
