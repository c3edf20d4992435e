mod common;

use std::sync::Arc;

use common::{is_bijection, is_hom, small_actions, Grp};
use proptest::prelude::*;
use proptest::sample::{select, Index};
use rota2::fingroup::FiniteGroup;
use rota2::liealg::{self, LieAction, LieAlgebra, Matrix};
use rota2::rrb;
use rota2::search::Budget;
use rota2::xmod::XModAction;
use rota2::{fixtures, xhom};

fn small_matrix(dim: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), dim)
        .prop_map(|m| m.into_iter().map(|r| r.into_iter().map(liealg::q).collect()).collect())
}

fn small_vector(dim: usize) -> impl Strategy<Value = Vec<liealg::Q>> {
    prop::collection::vec((-3i64..=3).prop_map(liealg::q), dim)
}

proptest! {
    // An operator accepted on the basis satisfies the identity everywhere;
    // a violation anywhere means it must be rejected.
    #[test]
    fn lie_basis_verdict_extends_to_all_vectors(
        sl2 in any::<bool>(),
        b3 in small_matrix(3),
        b2 in small_matrix(2),
        u in small_vector(3),
        v in small_vector(3),
    ) {
        let (g, b) = if sl2 { (LieAlgebra::sl2(), b3) } else { (LieAlgebra::aff1(), b2) };
        let n = g.dim();
        let ad = LieAction::adjoint(&Arc::new(g));
        let (lhs, rhs) = liealg::rrb_lie_sides(&b, &ad, &u[..n], &v[..n]);
        let verdict = liealg::verify_rrb_lie(b, &ad).is_ok();
        prop_assert!(!verdict || lhs == rhs);
    }

    #[test]
    fn fixture_groups_obey_the_axioms(id in select(fixtures::GROUPS.to_vec()), a in any::<Index>(), b in any::<Index>(), c in any::<Index>()) {
        let g = fixtures::group(id).unwrap();
        let n = g.order();
        let (a, b, c) = (a.index(n), b.index(n), c.index(n));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), a), a);
        prop_assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
    }

    #[test]
    fn s3_table_mutants_are_rejected(cell in 0usize..36, shift in 1usize..6) {
        let s3 = fixtures::group("S3").unwrap();
        let mut rows = s3.rows();
        let (r, c) = (cell / 6, cell % 6);
        rows[r][c] = (rows[r][c] + shift) % 6;
        prop_assert!(FiniteGroup::from_table(&rows, None).is_err());
    }

    #[test]
    fn descendant_makes_b_a_homomorphism(which in any::<Index>(), pick in any::<Index>()) {
        let actions = small_actions();
        let (_, act) = &actions[which.index(actions.len())];
        let ops = rrb::enumerate_rrb_group(act, &Budget::default()).unwrap();
        let b = &ops[pick.index(ops.len())];
        let d = rrb::descendant_group(b, act).unwrap();
        prop_assert!(is_hom(b, &Grp::of(&d), &Grp::of(act.actor())));
    }

    #[test]
    fn inverting_twice_is_the_identity(which in any::<Index>(), pick in any::<Index>()) {
        let ids = fixtures::xmod_ids();
        let x = fixtures::xmod(&ids[which.index(ids.len())]).unwrap();
        let act = Arc::new(XModAction::adjoint(&x));
        let homs = xhom::enumerate_crossed_homs_xmod(&act, &Budget::default()).unwrap();
        let (d1, d0) = homs[pick.index(homs.len())].clone();
        let dh = xhom::verify_crossed_hom_xmod(d1.clone(), d0.clone(), &act).unwrap();
        match xhom::crossed_hom_to_rrb_xmod(&dh) {
            Ok(op) => {
                let back = xhom::rrb_to_crossed_hom_xmod(&op).unwrap();
                prop_assert_eq!(back.d1(), &d1[..]);
                prop_assert_eq!(back.d0(), &d0[..]);
            }
            Err(e) => {
                prop_assert!(matches!(e, rota2::Error::NotBijective { .. }), "{}", e);
                prop_assert!(!(is_bijection(&d1) && is_bijection(&d0)));
            }
        }
    }
}
