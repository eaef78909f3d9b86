//! Randomized properties tying the solver, the certificates, and the
//! exhaustive oracle together on small domain graphs.

use proptest::prelude::*;
use subcubic_tsp::generators::random_two_connected_subcubic;
use subcubic_tsp::multigraph::{ConnectivityClass, Multigraph};
use subcubic_tsp::{approx, oracle, walk, Half};

/// exc <= (n + n2)/4 + 1, scaled by 4 to stay in integers.
fn within_excess_bound(g: &Multigraph, exc: i64) -> bool {
    let (n, n2, _) = g.degree_profile();
    4 * exc <= (n + n2) as i64 + 4
}

fn quarter(g: &Multigraph) -> Half {
    let (n, n2, _) = g.degree_profile();
    assert_eq!((n + n2) % 2, 0, "n + n2 is even on degree-2/3 graphs");
    Half::halves(((n + n2) / 2) as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    // The solver meets the excess bound and its walk validates with
    // length exactly n + exc - 2, inside the (5n + n2)/4 - 1 budget.
    #[test]
    fn solver_bound_and_walk(n in 3usize..48, seed: u64) {
        let g = random_two_connected_subcubic(n, seed).unwrap();
        let f = approx::solve(&g).unwrap();
        prop_assert!(within_excess_bound(&g, f.exc()));
        let w = walk::cover_to_walk(&g, &f).unwrap();
        prop_assert_eq!(walk::validate_walk(&g, &w).unwrap(), w.length());
        prop_assert_eq!(w.length() as i64, g.n() as i64 + f.exc() - 2);
        let (n, n2, _) = g.degree_profile();
        prop_assert!(4 * (w.length() as i64 + 1) <= (5 * n + n2) as i64);
    }

    // Through- and avoiding covers honor the flag and their scan bounds at
    // every edge, not just the solver's root.
    #[test]
    fn algo_honors_flag_and_certificate(n in 3usize..20, seed: u64) {
        let g = random_two_connected_subcubic(n, seed).unwrap();
        for (e, _) in g.edges() {
            let s = approx::scan(&g, e).unwrap();
            let through = approx::algo(&g, e, true).unwrap();
            prop_assert!(through.contains(e));
            prop_assert!(
                Half::from_int(through.exc()) <= quarter(&g) + s.delta + Half::from_int(2)
            );
            let avoiding = approx::algo(&g, e, false).unwrap();
            prop_assert!(!avoiding.contains(e));
            prop_assert!(Half::from_int(avoiding.exc()) <= quarter(&g) + s.delta_hat);
        }
    }

    // Identical inputs give identical covers and walks.
    #[test]
    fn solve_is_reproducible(n in 3usize..32, seed: u64) {
        let g = random_two_connected_subcubic(n, seed).unwrap();
        let f1 = approx::solve(&g).unwrap();
        let f2 = approx::solve(&g).unwrap();
        prop_assert_eq!(&f1, &f2);
        prop_assert_eq!(f1.render(&g), f2.render(&g));
        let w1 = walk::cover_to_walk(&g, &f1).unwrap();
        let w2 = walk::cover_to_walk(&g, &f2).unwrap();
        prop_assert_eq!(w1.render(), w2.render());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // The exhaustive optimum never exceeds the solver's excess, and itself
    // fits under the bound the solver certifies.
    #[test]
    fn oracle_never_loses_to_the_solver(n in 4usize..12, seed: u64) {
        let g = random_two_connected_subcubic(n, seed).unwrap();
        let f = approx::solve(&g).unwrap();
        let exact = oracle::exact(&g, None).unwrap();
        prop_assert!(exact.exc <= f.exc());
        prop_assert!(within_excess_bound(&g, exact.exc));
        // The oracle's witness is itself a valid even cover of that excess.
        let w = subcubic_tsp::cover::validate(&g, exact.witness.iter().copied()).unwrap();
        prop_assert_eq!(w.exc(), exact.exc);
    }

    // Scan yields sound upper certificates for the true deltas on every
    // edge; pairs sum to zero at roots whose removal keeps 2-connectivity,
    // and recursion through parallel closures only lowers the sum.
    #[test]
    fn scan_certificates_are_sound(n in 4usize..12, seed: u64) {
        let g = random_two_connected_subcubic(n, seed).unwrap();
        let (vn, n2, _) = g.degree_profile();
        prop_assert_eq!((vn + n2) % 2, 0);
        for (e, _) in g.edges() {
            let s = approx::scan(&g, e).unwrap();
            prop_assert!(s.delta <= Half::NEG_HALF);
            prop_assert!(s.delta + s.delta_hat <= Half::ZERO);
            if g.without_edge(e).connectivity_class() == ConnectivityClass::TwoConnected {
                prop_assert_eq!(s.delta + s.delta_hat, Half::ZERO);
            }
            let r = oracle::exact(&g, Some(e)).unwrap();
            let (delta, delta_hat) = (r.delta.unwrap(), r.delta_hat.unwrap());
            prop_assert!(delta <= s.delta);
            prop_assert!(delta_hat <= s.delta_hat);
            prop_assert!(delta <= Half::NEG_HALF);
            prop_assert!(delta + delta_hat <= Half::ZERO);
        }
    }

    // The augmentation subroutine picks an index whose through-cover stays
    // within (n + n2)/4 + 1 of the augmented graph, matching the oracle's
    // view that some augmentation has delta <= -1.
    #[test]
    fn subroutine_meets_its_augmented_bound(n in 4usize..9, seed: u64) {
        let g = random_two_connected_subcubic(n, seed).unwrap();
        let mut deg2: Vec<_> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
        deg2.truncate(4);
        for &u in &deg2 {
            for &v1 in &deg2 {
                for &v2 in &deg2 {
                    if u == v1 || u == v2 || v1 >= v2 {
                        continue;
                    }
                    let (i, f) = approx::subroutine(&g, u, v1, v2).unwrap();
                    let (zi, root) = g.with_edge(u, if i == 1 { v1 } else { v2 });
                    let checked = subcubic_tsp::cover::validate(&zi, f.edges()).unwrap();
                    prop_assert!(checked.contains(root));
                    prop_assert!(
                        Half::from_int(checked.exc()) <= quarter(&zi) + Half::from_int(1)
                    );
                    let best = [v1, v2]
                        .iter()
                        .map(|&t| {
                            let (z, r) = g.with_edge(u, t);
                            oracle::exact(&z, Some(r)).unwrap().delta.unwrap()
                        })
                        .min()
                        .unwrap();
                    prop_assert!(best <= Half::from_int(-1));
                }
            }
        }
    }
}
