use kontsevich::algebra::Graded;
use kontsevich::{
    closure_skeleton, kontsevich_link, kontsevich_of_braid, realize, tau_project, BraidWord,
    CircleDiagram, Complex64, HorizontalSeries, HorizontalWord,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_word(rng: &mut StdRng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let letters: Vec<i64> = (0..rng.gen_range(0..=max_len))
        .map(|_| {
            let g = rng.gen_range(1..n) as i64;
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::from_signed(n, &letters).unwrap()
}

#[test]
fn components_match_permutation_cycles() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..50 {
        let word = random_word(&mut rng, 5, 8);
        let skeleton = closure_skeleton(&word);
        let perm = word.permutation();
        assert_eq!(skeleton.n_components(), perm.cycles().len(), "{word}");
        let mut strands: Vec<usize> = skeleton.cycles.concat();
        strands.sort_unstable();
        assert_eq!(strands, (1..=word.n_strands()).collect::<Vec<_>>());
        for cycle in &skeleton.cycles {
            for (k, &s) in cycle.iter().enumerate() {
                assert_eq!(perm.apply(s), cycle[(k + 1) % cycle.len()]);
            }
        }
    }
}

#[test]
fn linking_numbers_match_crossing_count() {
    let mut rng = StdRng::seed_from_u64(23);
    let mut multi_component = 0;
    while multi_component < 20 {
        let word = random_word(&mut rng, 4, 6);
        let result = kontsevich_link(&word, 1, 256).unwrap();
        let n = result.skeleton.n_components();
        if n < 2 {
            continue;
        }
        multi_component += 1;
        let crossings = word.crossing_linking();
        for a in 0..n {
            for b in a + 1..n {
                let mut expected = 0.0;
                for &i in &result.skeleton.cycles[a] {
                    for &j in &result.skeleton.cycles[b] {
                        expected += crossings[i - 1][j - 1];
                    }
                }
                let got = result.linking_coefficient(a, b).unwrap();
                assert!((got - expected).abs() < 1e-6, "{word}: lk({a},{b}) = {got}, expected {expected}");
            }
        }
    }
}

#[test]
fn tau_is_linear_and_graded() {
    let word = BraidWord::parse("1 2 -1", 3).unwrap();
    let z = kontsevich_of_braid(&word, 3, 128).unwrap();
    let w = kontsevich_of_braid(&BraidWord::parse("2 2", 3).unwrap(), 3, 128).unwrap();
    let alpha = Complex64::new(0.7, -1.3);

    let combo = z.axpy(alpha, &w).unwrap();
    let lhs = tau_project(&combo, &word).unwrap();
    let rhs = tau_project(&z, &word)
        .unwrap()
        .axpy(alpha, &tau_project(&w, &word).unwrap())
        .unwrap();
    assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    assert!(lhs.max_abs_diff(&tau_project(&z, &word).unwrap()) > 1e-3);

    let image = tau_project(&z, &word).unwrap();
    for (diagram, _) in image.terms() {
        let chords = diagram.degree();
        assert!(chords <= 3);
    }
    for m in 0..=3 {
        for hw in kontsevich::enumerate_words(3, m) {
            let single = HorizontalSeries::from_terms(3, 3, [(hw, Complex64::new(1.0, 0.0))]).unwrap();
            for (diagram, _) in tau_project(&single, &word).unwrap().terms() {
                assert_eq!(diagram.degree(), m);
            }
        }
    }
}

#[test]
fn circle_canonical_form_ignores_rotation() {
    let base = vec![vec![0, 1, 0, 2, 1, 2], vec![3, 3]];
    let expected = CircleDiagram::new(base.clone()).unwrap();
    for r in 0..6 {
        let mut rotated = base.clone();
        rotated[0].rotate_left(r);
        rotated[1].rotate_left(r % 2);
        assert_eq!(CircleDiagram::new(rotated).unwrap(), expected);
    }
    let relabelled = CircleDiagram::new(vec![vec![7, 4, 7, 5, 4, 5], vec![9, 9]]).unwrap();
    assert_eq!(relabelled, expected);
}

#[test]
fn word_and_inverse_cancel() {
    let word = BraidWord::parse("1 -2 1 3", 4).unwrap();
    let round_trip = word.concat(&word.inverse()).unwrap();
    let z = kontsevich_of_braid(&round_trip, 3, 512).unwrap();
    let one = HorizontalSeries::identity(4, 3);
    assert!(z.max_abs_diff(&one, 3) < 1e-6, "{}", z.max_abs_diff(&one, 3));
}

#[test]
fn realized_loops_stay_separated_and_end_on_the_line() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..10 {
        let word = random_word(&mut rng, 5, 6);
        let lp = realize(&word);
        assert!(lp.min_separation(2000) > 0.5 - 1e-9);
        let ends = lp.final_positions();
        let mut sorted = ends.clone();
        sorted.sort_by(f64::total_cmp);
        for (k, x) in sorted.iter().enumerate() {
            assert!((x - k as f64).abs() < 1e-12);
        }
    }
}

#[test]
fn identity_word_has_no_chords() {
    let z = kontsevich_of_braid(&BraidWord::identity(3).unwrap(), 4, 64).unwrap();
    assert_eq!(z.terms().count(), 1);
    assert_eq!(z.coefficient(&HorizontalWord::empty(3)), Complex64::new(1.0, 0.0));
}
