use cactus::coxeter_cactus::{iso_check, CoxeterDiagram};

fn diagrams() -> Vec<CoxeterDiagram> {
    (3..=8)
        .flat_map(|n| {
            [
                CoxeterDiagram::path(n).unwrap(),
                CoxeterDiagram::cycle(n).unwrap(),
            ]
        })
        .collect()
}

#[test]
fn arc_counts() {
    for n in 3..=8 {
        assert_eq!(
            CoxeterDiagram::cycle(n)
                .unwrap()
                .enumerate_irr_finite()
                .unwrap()
                .len(),
            n * (n - 1)
        );
        assert_eq!(
            CoxeterDiagram::path(n)
                .unwrap()
                .enumerate_irr_finite()
                .unwrap()
                .len(),
            n * (n + 1) / 2
        );
    }
}

#[test]
fn omega_is_an_involution_on_subarcs() {
    for d in diagrams() {
        let arcs = d.enumerate_irr_finite().unwrap();
        for j in &arcs {
            for i in &arcs {
                if !d.proper_subarc(i, j).unwrap() {
                    continue;
                }
                let image = d.omega_arc(j, i).unwrap();
                assert!(d.proper_subarc(&image, j).unwrap());
                assert_eq!(image.len, i.len);
                assert_eq!(d.omega_arc(j, &image).unwrap(), *i);
            }
        }
    }
}

#[test]
fn omega_fixes_disjoint_arcs() {
    for d in diagrams() {
        let arcs = d.enumerate_irr_finite().unwrap();
        for j in &arcs {
            for i in &arcs {
                if d.product_condition(i, j).unwrap() {
                    assert_eq!(d.omega_arc(j, i).unwrap(), *i);
                    assert!(d.product_condition(j, i).unwrap());
                }
            }
        }
    }
}

#[test]
fn cycle_presentation_matches_affine_cactus() {
    for n in 3..=7 {
        let report = iso_check(n).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn unsupported_diagrams_are_rejected() {
    let star = CoxeterDiagram::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
    assert!(star.enumerate_irr_finite().is_err());
    assert!(CoxeterDiagram::cycle(2).is_err());
    let path = CoxeterDiagram::path(4).unwrap();
    assert!(path.omega_action(&[2, 3], &[1, 2]).is_err());
}
