mod common;

use inertial::chromatic::{
    chromatic_number, fractional_chromatic, fractional_chromatic_with, independence_number, optimal_coloring,
    ChromaticOptions, FractionalOptions,
};
use inertial::generators::*;
use inertial::harness::enumerate_labeled_graphs;
use inertial::{Graph, Rational};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn int(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[test]
fn fractional_sandwich_on_small_graphs() {
    // n/alpha <= chi_f <= chi
    for n in 1..=6 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            let chi = chromatic_number(&g, 64).unwrap();
            let alpha = independence_number(&g).unwrap();
            let chi_f = fractional_chromatic(&g).unwrap();
            let lower = Rational::new(BigInt::from(n), BigInt::from(alpha));
            assert!(lower <= chi_f && chi_f <= int(chi), "{g}: {lower} {chi_f} {chi}");
        }
    }
}

#[test]
fn chromatic_number_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let plain = ChromaticOptions {
        spectral_pruning: false,
        ..ChromaticOptions::default()
    };
    for _ in 0..1000 {
        let g = common::random_graph(&mut rng, 7, 0.5);
        let want = common::chi_brute(&g);
        let c = optimal_coloring(&g, &plain).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.num_colors, want, "{g}");
        assert_eq!(chromatic_number(&g, 64).unwrap(), want, "{g}");
    }
}

#[test]
fn independence_number_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in [5, 9, 12, 16] {
        for _ in 0..40 {
            let g = common::random_graph(&mut rng, n, 0.3);
            assert_eq!(independence_number(&g).unwrap(), common::alpha_brute(&g), "{g}");
        }
    }
}

#[test]
fn vertex_transitive_graphs_have_chif_n_over_alpha() {
    let graphs: Vec<Graph> = vec![
        gen_cycle(7).unwrap(),
        gen_cycle(10).unwrap(),
        petersen(),
        gen_kneser(6, 2).unwrap(),
        gen_complete(6).unwrap(),
        gen_complete_multipartite(&[3, 3, 3]).unwrap(),
        common::clebsch(),
    ];
    for g in graphs {
        let alpha = independence_number(&g).unwrap();
        let c = fractional_chromatic_with(
            &g,
            &FractionalOptions {
                max_order: 64,
                ..FractionalOptions::default()
            },
        )
        .unwrap();
        assert!(c.verify(&g));
        assert_eq!(c.value, Rational::new(BigInt::from(g.order()), BigInt::from(alpha)), "{g}");
    }
}

#[test]
fn generalized_petersen_values() {
    let g = gen_generalized_petersen(15, 4).unwrap();
    assert_eq!(chromatic_number(&g, 64).unwrap(), 3);
    let g = gen_generalized_petersen(5, 2).unwrap();
    assert_eq!(fractional_chromatic(&g).unwrap(), Rational::new(5.into(), 2.into()));
}
