//! Exhaustive checks of the structure of reflection-symmetric maximal
//! diagrams and of the fold/unfold correspondence.

use std::collections::HashSet;

use maxchord::bijection::{from_quotient, insert_type1, strip_type1, to_quotient, unfold};
use maxchord::counting::{d_parallel, d_vertical};
use maxchord::diagram::chords_cross;
use maxchord::oracle::{axis_fixed_counts, maximal_symmetric_diagrams, AxisType};
use maxchord::{ChordDiagram, CountBig, SignedMatching, SymmetryElement};

#[test]
fn fold_is_a_bijection_onto_one_vertex_matchings() {
    for g in 1..=5usize {
        let diagrams = maximal_symmetric_diagrams(g, AxisType::TypeTwo);
        let folded: HashSet<SignedMatching> = diagrams
            .iter()
            .map(|d| {
                let sm = to_quotient(d).unwrap();
                assert_eq!(&from_quotient(&sm).unwrap(), d, "g={g}");
                sm
            })
            .collect();
        assert_eq!(folded.len(), diagrams.len(), "fold not injective at g={g}");

        let unicellular: HashSet<SignedMatching> = SignedMatching::all(g)
            .filter(|sm| sm.is_unicellular_map())
            .collect();
        assert_eq!(folded, unicellular, "image mismatch at g={g}");
        for sm in &unicellular {
            assert_eq!(&to_quotient(&from_quotient(sm).unwrap()).unwrap(), sm);
        }
        assert_eq!(
            CountBig::from(unicellular.len()),
            d_parallel(g as u32).unwrap()
        );
    }
}

#[test]
fn one_vertex_matchings_count_the_parallel_column() {
    for g in 0..=6usize {
        let count = SignedMatching::all(g)
            .filter(|sm| sm.is_unicellular_map())
            .count();
        assert_eq!(
            CountBig::from(count),
            d_parallel(g as u32).unwrap(),
            "g={g}"
        );
    }
}

#[test]
fn unfolding_preserves_maximality_exactly_for_one_vertex_maps() {
    for g in 1..=4usize {
        for sm in SignedMatching::all(g) {
            assert_eq!(unfold(&sm).is_maximal(), sm.is_unicellular_map(), "{sm}");
        }
    }
}

#[test]
fn every_gluing_has_one_face_and_satisfies_euler() {
    for g in 0..=4usize {
        for sm in SignedMatching::all(g) {
            let r = sm.glue();
            assert_eq!(r.face_count, 1);
            assert_eq!(r.vertex_count + r.face_count + r.euler_genus, 2 + g);
            assert_eq!(r.orientable, sm.twist().iter().all(|&t| !t));
            if r.orientable {
                assert_eq!(r.euler_genus % 2, 0, "{sm}");
            }
        }
    }
}

#[test]
fn twist_bit_matches_mirror_chord_crossing() {
    for g in 1..=5usize {
        for d in maximal_symmetric_diagrams(g, AxisType::TypeTwo) {
            let sm = to_quotient(&d).unwrap();
            let rho = SymmetryElement::type_two_axis(d.points());
            for (a, b) in d.chords() {
                let mirror = (rho.apply(a), rho.apply(b));
                let side = |i: usize| if i < 2 * g { i } else { 4 * g - 1 - i };
                assert_eq!(sm.twist()[side(a)], chords_cross((a, b), mirror), "{d}");
            }
        }
    }
}

#[test]
fn orientable_quotients_have_no_crossing_mirror_pairs() {
    let mut orientable = 0;
    for g in 1..=5usize {
        for sm in SignedMatching::all(g).filter(|sm| sm.is_unicellular_map()) {
            if !sm.glue().orientable {
                continue;
            }
            orientable += 1;
            let d = from_quotient(&sm).unwrap();
            let rho = SymmetryElement::type_two_axis(d.points());
            for (a, b) in d.chords() {
                assert!(!chords_cross((a, b), (rho.apply(a), rho.apply(b))));
            }
        }
    }
    assert!(orientable > 0);
}

#[test]
fn arc_symmetric_maximal_diagrams_have_no_axis_chords() {
    for g in 1..=5usize {
        let rho = SymmetryElement::type_two_axis(4 * g);
        for d in maximal_symmetric_diagrams(g, AxisType::TypeTwo) {
            let classes = d.axis_chord_classes(&rho).unwrap();
            assert!(
                classes.vertical.is_empty() && classes.horizontal.is_empty(),
                "{d}"
            );
            assert_eq!(classes.mirror_orbits.len(), g);
        }
    }
}

#[test]
fn point_symmetric_maximal_diagrams_strip_to_arc_symmetric_ones() {
    for g in 1..=5usize {
        let sigma = SymmetryElement::type_one_axis(4 * g);
        let rho_small = SymmetryElement::type_two_axis(4 * (g - 1));
        let mut remainders = HashSet::new();
        let type_one = maximal_symmetric_diagrams(g, AxisType::TypeOne);
        for d in &type_one {
            let classes = d.axis_chord_classes(&sigma).unwrap();
            assert_eq!(classes.vertical, vec![(0, 2 * g)]);
            assert_eq!(classes.horizontal.len(), 1);

            let stripped = strip_type1(d).unwrap();
            let rest = &stripped.remainder;
            assert_eq!(rest.n(), 2 * (g - 1));
            if g > 1 {
                assert!(rest.is_maximal(), "{d}");
                assert!(rest.is_fixed_by(&rho_small).unwrap(), "{d}");
            }
            assert_eq!(&insert_type1(rest, stripped.horizontal.0).unwrap(), d);
            remainders.insert(rest.clone());
        }
        // Every arc-symmetric diagram one genus down is reached.
        let expected = maximal_symmetric_diagrams(g - 1, AxisType::TypeTwo).len();
        assert_eq!(remainders.len(), expected, "g={g}");
        assert_eq!(type_one.len(), (2 * g - 1) * expected);
    }
}

#[test]
fn every_insertion_slot_yields_a_point_symmetric_maximal_diagram() {
    for g in 1..=5usize {
        let sigma = SymmetryElement::type_one_axis(4 * g);
        let mut produced = HashSet::new();
        for d in maximal_symmetric_diagrams(g - 1, AxisType::TypeTwo) {
            for a in 1..2 * g {
                let bigger = insert_type1(&d, a).unwrap();
                assert!(bigger.is_maximal());
                assert!(bigger.is_fixed_by(&sigma).unwrap());
                produced.insert(bigger);
            }
        }
        assert_eq!(
            CountBig::from(produced.len()),
            d_vertical(g as u32).unwrap()
        );
    }
}

#[test]
fn type_one_count_is_multiplier_times_type_two() {
    for g in 1..=6usize {
        let one = maxchord::oracle::reflection_fixed_oracle(g, AxisType::TypeOne, false).unwrap();
        let two = CountBig::from(maximal_symmetric_diagrams(g - 1, AxisType::TypeTwo).len());
        assert_eq!(one, two * (2 * g - 1), "g={g}");
    }
}

#[test]
fn all_axes_of_a_type_fix_equally_many() {
    assert_eq!(
        axis_fixed_counts(1, AxisType::TypeOne, false).unwrap(),
        vec![1, 1]
    );
    assert_eq!(
        axis_fixed_counts(2, AxisType::TypeTwo, false).unwrap(),
        vec![5; 4]
    );
    assert_eq!(
        axis_fixed_counts(3, AxisType::TypeOne, false).unwrap(),
        vec![25; 6]
    );
    assert_eq!(
        axis_fixed_counts(3, AxisType::TypeTwo, false).unwrap(),
        vec![41; 6]
    );
}

#[test]
fn fold_rejects_diagrams_with_wrong_symmetry() {
    for d in maximal_symmetric_diagrams(2, AxisType::TypeOne) {
        let rho = SymmetryElement::type_two_axis(8);
        if !d.is_fixed_by(&rho).unwrap() {
            assert!(to_quotient(&d).is_err());
        }
    }
    let not_one_vertex: SignedMatching = "2; 0-1:0 2-3:0".parse().unwrap();
    assert!(from_quotient(&not_one_vertex).is_err());
    assert!(strip_type1(&ChordDiagram::new(&[(0, 3), (1, 2)]).unwrap()).is_err());
}
