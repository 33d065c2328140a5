use super::rep::{affine_matrix, matrix_equal, MatrixOracle};
use super::*;
use crate::circular::{CircularSet, LiftedSet};
use crate::perm::{AffinePermutation, Permutation};
use crate::racg::{Racg, SearchOutcome};

fn w(n: usize, s: &str) -> CactusWord {
    CactusWord::parse(n, s).unwrap()
}

fn lifted(n: usize, seq: &[usize]) -> LiftedSet {
    LiftedSet::from_circular(&CircularSet::new(n, seq.to_vec()).unwrap())
}

#[test]
fn pi_examples() {
    assert!(w(3, "").pi().is_identity());
    assert!(w(2, "s(1,2) s(2,1)").pi().is_identity());
    assert_eq!(w(4, "s(1,3)").pi().images(), &[3, 2, 1, 4]);
    let two = w(4, "s(1,2) s(3,1)");
    let expected = crate::perm::interval_reversal(4, 1, 2)
        .unwrap()
        .compose(&crate::perm::interval_reversal(4, 3, 1).unwrap())
        .unwrap();
    assert_eq!(two.pi(), expected);
}

#[test]
fn phi_of_the_three_letter_example() {
    let e = w(4, "s(1,2) s(3,1) s(2,3)").phi();
    let third = LiftedSet::new(4, vec![1, 6]).unwrap();
    assert_eq!(
        e.diagram_part(),
        &[lifted(4, &[1, 2]), lifted(4, &[3, 4, 2]), third]
    );
    assert_eq!(
        e.affine_part(),
        &AffinePermutation::from_window(vec![-1, 6, 1, 4]).unwrap()
    );
    assert_eq!(e.perm_part(), w(4, "s(1,2) s(3,1) s(2,3)").pi());
}

#[test]
fn phi_generators_and_empty() {
    for n in 2..=6 {
        for g in generators(n) {
            let e = CactusWord::new(n, vec![g]).unwrap().phi();
            assert_eq!(e.diagram_part(), &[g.lifted_support(n)]);
            assert_eq!(e.perm_part(), g.reversal(n));
        }
    }
    let e = w(3, "").phi();
    assert!(e.diagram_part().is_empty() && e.perm_part().is_identity());
}

#[test]
fn generator_images_are_distinct() {
    for n in 2..=7 {
        let mut images: Vec<_> = generators(n).iter().map(|g| g.lifted_support(n)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), n * (n - 1));
        // on the cylinder they are the circular intervals themselves
        for g in generators(n) {
            assert_eq!(g.lifted_support(n).to_circular().unwrap(), g.support(n));
        }
    }
}

#[test]
fn identity_examples() {
    assert!(w(4, "s(1,2) s(3,4) s(1,2) s(3,4)").is_identity());
    assert!(!w(2, "s(1,2) s(2,1)").is_identity());
    let rel = w(3, "s(1,2) s(1,3) s(2,3) s(1,3)");
    assert!(rel.is_identity());
    let d = rel.phi();
    let racg = Racg::new(LiftedGraph { n: 3 });
    assert_eq!(
        racg.brute_force_equal(d.diagram_part(), &[], 6, 200_000),
        SearchOutcome::Reachable
    );
}

#[test]
fn equality_examples() {
    assert!(w(3, "s(1,2) s(1,3)").equals(&w(3, "s(1,3) s(2,3)")).unwrap());
    assert!(!w(3, "s(1,2)").equals(&w(3, "s(2,1)")).unwrap());
    assert!(!matrix_equal(&w(3, "s(1,2)"), &w(3, "s(2,1)")).unwrap());
    let x = w(5, "s(5,2) s(1,3) s(2,4)");
    assert!(x.equals(&x).unwrap());
    assert!(x.equals(&w(4, "")).is_err());
}

#[test]
fn lift_reduce_examples() {
    assert_eq!(w(4, "s(1,2) s(1,2) s(3,4)").lift_reduce(), w(4, "s(3,4)"));
    let q = w(4, "s(2,3) s(1,4) s(2,3)");
    assert_eq!(q.lift_reduce(), w(4, "s(1,4)"));
    assert!(matrix_equal(&q, &w(4, "s(1,4)")).unwrap());
    let geo = w(4, "s(1,2) s(2,3) s(3,4)");
    assert_eq!(geo.lift_reduce(), geo);
}

#[test]
fn purity_examples() {
    assert!(w(2, "s(1,2) s(2,1)").is_pure());
    assert!(!w(3, "s(1,2)").is_pure());
    for n in 2..=5 {
        for (_, l, r) in defining_relations(n).unwrap() {
            assert!(l.concat(&r.inverse()).unwrap().is_pure());
        }
    }
}

#[test]
fn order_examples() {
    assert_eq!(w(3, "s(1,2)").order(), Order::Finite(2));
    assert_eq!(w(4, "s(1,2) s(1,4)").order(), Order::Finite(4));
    assert_eq!(w(2, "s(1,2) s(2,1)").order(), Order::Infinite);
    assert_eq!(w(5, "").order(), Order::Finite(1));
    assert_eq!(Order::Infinite.to_string(), "infinite");
}

#[test]
fn torsion_elements() {
    assert_eq!(CactusWord::torsion_element(1, 2).unwrap(), w(2, "s(1,2)"));
    assert_eq!(CactusWord::torsion_element(2, 4).unwrap(), w(4, "s(1,2) s(1,4)"));
    assert_eq!(
        CactusWord::torsion_element(3, 8).unwrap(),
        w(8, "s(1,2) s(1,4) s(1,8)")
    );
    assert!(CactusWord::torsion_element(3, 7).is_err());
    assert!(CactusWord::torsion_element(0, 7).is_err());
}

#[test]
fn decreasing_examples() {
    assert!(w(4, "s(1,4) s(2,3)").is_decreasing());
    assert!(!w(4, "s(2,3) s(1,4)").is_decreasing());
    assert!(w(4, "").is_decreasing());
    assert!(!w(4, "s(1,2) s(3,4)").is_irreducibly_decreasing().unwrap());
    assert!(w(4, "s(1,4) s(2,3)").is_irreducibly_decreasing().unwrap());
    assert!(w(4, "s(3,1)").is_irreducibly_decreasing().unwrap());
    assert!(w(4, "s(2,3) s(1,4)").is_irreducibly_decreasing().is_err());
}

#[test]
fn classic_examples() {
    let c = |n, s| ClassicCactusWord::parse(n, s).unwrap();
    assert!(embed_classic(&c(3, "")).is_empty());
    assert_eq!(embed_classic(&c(3, "s(1,2) s(1,3)")), w(3, "s(1,2) s(1,3)"));
    assert!(equal_classic(&c(4, "s(1,2) s(3,4)"), &c(4, "s(3,4) s(1,2)")).unwrap());
    assert!(equal_classic(&c(3, "s(1,2) s(1,3)"), &c(3, "s(1,3) s(2,3)")).unwrap());
    assert!(!equal_classic(&c(3, "s(1,2)"), &c(3, "s(2,3)")).unwrap());
    for n in 2..=5 {
        for (_, l, r) in classic_relations(n).unwrap() {
            assert!(equal_classic(&l, &r).unwrap(), "{l} = {r}");
            assert!(l.embed().equals(&r.embed()).unwrap());
        }
    }
}

#[test]
fn classic_matrix_oracle_separates_generators() {
    let alpha = SubsetGraph { n: 3 }.alphabet(2).unwrap();
    let rep = alpha.geometric_rep();
    let d1 = psi(&ClassicCactusWord::parse(3, "s(1,2)").unwrap());
    let d2 = psi(&ClassicCactusWord::parse(3, "s(2,3)").unwrap());
    assert_ne!(rep.rep_matrix(&d1.0).unwrap(), rep.rep_matrix(&d2.0).unwrap());
}

#[test]
fn epsilon_and_split_examples() {
    assert_eq!(w(4, "s(1,2) s(1,3)").epsilon(3).unwrap(), w(4, "s(1,3)"));
    let x = w(4, "s(1,2) s(2,4) s(4,1)");
    assert_eq!(x.epsilon(2).unwrap(), x);
    assert!(w(4, "s(1,2) s(3,4)").epsilon(3).unwrap().is_empty());
    assert!(x.epsilon(1).is_err() && x.epsilon(5).is_err());

    let (u, v) = w(3, "s(1,3) s(1,2)").split(3).unwrap();
    assert_eq!((u, v.clone()), (w(3, "s(1,3) s(1,2) s(1,3)"), w(3, "s(1,3)")));
    assert!(w(3, "s(1,3) s(1,2) s(1,3)").equals(&w(3, "s(2,3)")).unwrap());
    assert_eq!(w(3, "s(1,2)").split(3).unwrap(), (w(3, "s(1,2)"), w(3, "")));
    assert_eq!(w(3, "s(1,3)").split(3).unwrap(), (w(3, ""), w(3, "s(1,3)")));
}

#[test]
fn range_and_rotation_examples() {
    assert!(w(4, "s(1,2) s(2,3)").in_range(2, 2).unwrap());
    assert!(!w(4, "s(1,3)").in_range(2, 2).unwrap());
    assert!(w(4, "").in_range(3, 4).unwrap());
    assert!(w(4, "").in_range(3, 2).is_err());
    assert_eq!(w(4, "s(1,2)").rotate(1), w(4, "s(2,3)"));
    assert_eq!(w(4, "s(4,1)").rotate(1), w(4, "s(1,2)"));
    let x = w(4, "s(4,2) s(1,3)");
    assert_eq!(x.rotate(4), x);
    assert_eq!(x.rotate(-1).rotate(1), x);
}

#[test]
fn relation_families() {
    let r2 = defining_relations(2).unwrap();
    assert_eq!(r2.len(), 2);
    assert!(r2
        .iter()
        .all(|(k, _, r)| *k == RelationKind::Involution && r.is_empty()));
    for n in 2..=5 {
        for (_, l, r) in defining_relations(n).unwrap() {
            assert_eq!(l.len(), if r.is_empty() { 2 } else { r.len() });
        }
    }
}

#[test]
fn affine_matrix_is_a_homomorphism() {
    let n = 4;
    let gens = generators(n);
    for a in &gens {
        for b in &gens {
            let fa = a.affine_reversal(n);
            let fb = b.affine_reversal(n);
            let prod = affine_matrix(&fa.compose(&fb).unwrap());
            assert_eq!(prod, &affine_matrix(&fa) * &affine_matrix(&fb));
        }
    }
}

#[test]
fn matrix_oracle_rejects_foreign_letters() {
    let a = w(4, "s(1,2)");
    let oracle = MatrixOracle::new(4, [&a]).unwrap();
    assert!(oracle.image(&w(4, "s(2,3)")).is_err());
    assert!(oracle.image(&w(3, "s(1,2)")).is_err());
    assert_eq!(oracle.basis().len(), 1);
}

#[test]
fn lifted_nested_identity_holds_for_every_pair() {
    // s_{k,l} · [i,j]_c = [s_{k,l}(j), s_{k,l}(i)]_c whenever [i,j]_c ⊂_c [k,l]_c
    for n in 2..=7 {
        for x in generators(n) {
            for y in generators(n) {
                if x.support(n).csubset(&y.support(n)).unwrap() {
                    let moved = x.lifted_support(n).act(&y.affine_reversal(n));
                    let expected = x.conjugated_by(&y.reversal(n)).lifted_support(n);
                    assert_eq!(moved, expected, "n={n} {x} in {y}");
                }
            }
        }
    }
}

#[test]
fn perm_part_is_projection() {
    let x = w(5, "s(4,2) s(1,3) s(5,1)");
    let p: Permutation = x.pi();
    assert_eq!(x.phi().perm_part(), p);
}
