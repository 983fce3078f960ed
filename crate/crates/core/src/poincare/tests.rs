use super::*;
use crate::corpus;
use crate::germ::Subspace;

fn analysis(g: crate::Result<crate::GluedGerm>, n: usize) -> GluingAnalysis {
    GluingAnalysis::new(g.unwrap(), n)
}

#[test]
fn node_is_strongly_large_by_theorem() {
    let a = analysis(corpus::node(), 6);
    let c = classify_gluing(&a).unwrap();
    assert!(c.strongly_large.is_theorem_backed(), "{}", c.strongly_large);
    assert!(c.checks.iter().all(SeriesCheck::passed));
    assert!(c.beta1_flag.is_none());
    let k = a.residue_field_glued().unwrap();
    assert_eq!(k.betas(), &[1, 2, 2, 2, 2, 2, 2]);
}

#[test]
fn weakly_large_formula_matches_direct_on_two_planes() {
    let a = analysis(corpus::plane_along_line(), 4);
    let p_v_y = a.betti_factor_in_glued(Side::Y).unwrap().series().unwrap();
    let p_x_z = a.betti_z_in(Side::X).unwrap().series().unwrap();
    let p_v_x = a.betti_factor_in_glued(Side::X).unwrap().series().unwrap();
    let f = weakly_large_formula(&p_v_y, &p_x_z).unwrap();
    assert_eq!(first_mismatch(&f, &p_v_x), None, "{f} vs {p_v_x}");
}

#[test]
fn strongly_large_formula_matches_direct_for_cusp_and_line() {
    let a = analysis(corpus::cusp_and_line(), 4);
    let x_z = a.betti_z_in(Side::X).unwrap().series().unwrap();
    let y_z = a.betti_z_in(Side::Y).unwrap().series().unwrap();
    for w in a.test_subspaces(Side::Y).unwrap() {
        let y_w = a.betti_in_factor(Side::Y, &w).unwrap().series().unwrap();
        let f = strongly_large_formula(&y_w, &x_z, &y_z).unwrap();
        let direct = a.betti_transported(Side::Y, &w).unwrap().series().unwrap();
        assert_eq!(f, direct, "{}", w.name());
    }
    // oracle: (1+t)/(1-2t) from the residue field resolution
    assert_eq!(a.residue_field_glued().unwrap().betas(), &[1, 3, 6, 12, 24]);
}

#[test]
fn two_planes_certified_in_every_class() {
    let a = analysis(corpus::plane_along_line(), 6);
    let c = classify_gluing(&a).unwrap();
    for v in [&c.weakly_large, &c.large, &c.strongly_large] {
        assert!(v.holds(), "{v}");
    }
}

#[test]
fn corrupted_check_is_refuted_with_a_diff() {
    let good = TruncatedSeries::new(vec![1, 2, 2, 2], 3);
    let bad = TruncatedSeries::new(vec![1, 2, 3, 2], 3);
    let check = SeriesCheck::new("probe", good, bad);
    let v = verdict(&[&check], 3, None);
    assert_eq!(
        v,
        Verdict::Refuted {
            detail: "probe: t^2 coefficient 2 vs 3".into()
        }
    );
}

#[test]
fn convolution_on_node_and_two_planes() {
    for g in [corpus::node(), corpus::plane_along_line()] {
        let a = analysis(g, 4);
        for side in [Side::X, Side::Y] {
            for w in a.test_subspaces(side).unwrap() {
                let r = convolution_check(&a, side, &w, 4).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }
}

#[test]
fn convolution_readings_can_disagree() {
    let a = analysis(corpus::plane_along_origin(), 4);
    let w = Subspace::origin(a.factor(Side::X).clone());
    let r = convolution_check(&a, Side::X, &w, 4).unwrap();
    assert!(r.passed());
    assert!(r.rows.iter().any(|row| row.readings_disagree));
}

#[test]
fn convolution_rejects_jmax_beyond_bound() {
    let a = analysis(corpus::node(), 3);
    let w = Subspace::origin(a.factor(Side::X).clone());
    assert!(convolution_check(&a, Side::X, &w, 4).is_err());
}

#[test]
fn strong_betti_formula_matches_series_formula() {
    for (name, g) in corpus::all().unwrap() {
        let a = GluingAnalysis::new(g, 3);
        let x_z = a.betti_z_in(Side::X).unwrap();
        let y_z = a.betti_z_in(Side::Y).unwrap();
        for w in a.test_subspaces(Side::Y).unwrap() {
            let y_w = a.betti_in_factor(Side::Y, &w).unwrap();
            let s = strongly_large_formula(&y_w.series().unwrap(), &x_z.series().unwrap(), &y_z.series().unwrap())
                .unwrap();
            for j in 0..=2 {
                let b = betti_formula_strong(j, y_w.betas(), x_z.betas(), y_z.betas()).unwrap();
                assert_eq!(b as i64, s.coeff(j), "{name} {} j={j}", w.name());
            }
        }
    }
}
