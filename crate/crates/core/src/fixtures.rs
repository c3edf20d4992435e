//! Built-in structures, addressable by short ids (`S3`, `S3=>S3`,
//! `S3xS3=>S3`, `Z2=>T`, `e->S3`, `S3->S3`, `aff1`, ...).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, GroupAction};
use crate::liealg::LieAlgebra;
use crate::rrb::{verify_rrb_group, RrbGroupOp};
use crate::twogroup::{validate_two_group, TwoGroup};
use crate::xmod::{xmod_to_two_group, CrossedModule};

pub const GROUPS: [&str; 6] = ["T", "Z2", "Z3", "Z4", "S3", "Z2xZ2"];
pub const LIE_ALGEBRAS: [&str; 3] = ["aff1", "ab2", "sl2"];

fn unknown(kind: &str, id: &str) -> Error {
    Error::Parse(format!("unknown {kind} id {id:?}"))
}

/// `T` (trivial), `Zn`, `Sn` for n ≤ 5, `Z2xZ2`.
pub fn group(id: &str) -> Result<Arc<FiniteGroup>> {
    let g = match id {
        "T" | "e" => FiniteGroup::trivial(),
        "Z2xZ2" | "V4" => {
            let z2 = Arc::new(FiniteGroup::cyclic(2));
            FiniteGroup::direct_product(&z2, &z2)?
        }
        _ => {
            if let Some(n) = id.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()).filter(|&n| n >= 1) {
                FiniteGroup::cyclic(n)
            } else if let Some(n) = id.strip_prefix('S').and_then(|n| n.parse::<usize>().ok()).filter(|&n| (1..=5).contains(&n)) {
                FiniteGroup::symmetric(n)
            } else {
                return Err(unknown("group", id));
            }
        }
    };
    Ok(Arc::new(g))
}

/// `G=>G` (discrete), `GxG=>G` (from `G →id G`), `Z2=>T`.
pub fn two_group(id: &str) -> Result<Arc<TwoGroup>> {
    if id == "Z2=>T" {
        let z2 = group("Z2")?;
        let t = group("T")?;
        return Ok(Arc::new(validate_two_group(&z2, &t, vec![0, 0], vec![0, 0], vec![0])?));
    }
    let (arrows, objects) = id.split_once("=>").ok_or_else(|| unknown("2-group", id))?;
    if arrows == objects {
        return Ok(Arc::new(TwoGroup::discrete(&group(objects)?)));
    }
    if arrows == format!("{objects}x{objects}") {
        return Ok(Arc::new(xmod_to_two_group(&CrossedModule::identity_on(&group(objects)?))?));
    }
    Err(unknown("2-group", id))
}

/// `e->G`, `G->G` (identity with conjugation), `Z2->T`.
pub fn xmod(id: &str) -> Result<Arc<CrossedModule>> {
    let (top, bottom) = id.split_once("->").ok_or_else(|| unknown("crossed module", id))?;
    if top == "e" {
        return Ok(Arc::new(CrossedModule::trivial_over(&group(bottom)?)));
    }
    if top == bottom {
        return Ok(Arc::new(CrossedModule::identity_on(&group(top)?)));
    }
    if id == "Z2->T" {
        let z2 = group("Z2")?;
        let t = group("T")?;
        let x = crate::xmod::validate_xmod(&z2, &t, vec![0, 0], vec![vec![0, 1]])?;
        return Ok(Arc::new(x));
    }
    Err(unknown("crossed module", id))
}

pub fn lie_algebra(id: &str) -> Result<Arc<LieAlgebra>> {
    match id {
        "aff1" => Ok(Arc::new(LieAlgebra::aff1())),
        "ab2" => Ok(Arc::new(LieAlgebra::abelian(2))),
        "sl2" => Ok(Arc::new(LieAlgebra::sl2())),
        _ => Err(unknown("Lie algebra", id)),
    }
}

/// The 2-group fixtures of the corpus, smallest first.
pub fn two_group_ids() -> Vec<String> {
    let mut ids: Vec<String> = GROUPS.iter().map(|g| format!("{g}=>{g}")).collect();
    ids.push("Z2=>T".into());
    ids.push("Z2xZ2=>Z2".into());
    ids.push("S3xS3=>S3".into());
    ids
}

pub fn xmod_ids() -> Vec<String> {
    let mut ids: Vec<String> = GROUPS.iter().map(|g| format!("e->{g}")).collect();
    ids.push("Z2->T".into());
    ids.extend(GROUPS.iter().filter(|g| **g != "T").map(|g| format!("{g}->{g}")));
    ids
}

/// `S3 = A3·⟨(12)⟩` and the Rota–Baxter operator `B(x·y) = y⁻¹` with
/// respect to conjugation.
pub fn decomposition_operator() -> RrbGroupOp {
    let g = group("S3").expect("S3");
    let mut b = vec![usize::MAX; g.order()];
    for x in [0, 3, 4] {
        for y in [0, 2] {
            b[g.mul(x, y)] = g.inv(y);
        }
    }
    verify_rrb_group(b, &Arc::new(GroupAction::adjoint(&g))).expect("decomposition operator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_resolve() {
        for id in two_group_ids() {
            two_group(&id).unwrap();
        }
        for id in xmod_ids() {
            xmod(&id).unwrap();
        }
        assert_eq!(two_group("S3xS3=>S3").unwrap().arrows().order(), 36);
        assert_eq!(two_group("Z2xZ2=>Z2").unwrap().arrows().order(), 4);
        assert!(group("Q8").is_err());
    }

    #[test]
    fn decomposition_values() {
        let op = decomposition_operator();
        assert_eq!(op.map(), &[0, 2, 2, 0, 0, 2]);
    }
}
