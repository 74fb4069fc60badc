//! The enumeration kernels against each other and against a naive
//! vertex-by-vertex counter written here.

use domlex::graph::catalog_up_to;
use domlex::oracle::{
    domination_number, domination_polynomial, domination_polynomial_ie, gamma_sets, is_dominating,
    monitor_number, OracleConfig,
};
use domlex::{formulas, Graph, IntPoly, VertexSet};
use num_bigint::BigInt;

/// Counts dominating sets by size checking every vertex of every subset.
fn naive_counts(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u64; n + 1];
    for set in 0u64..1 << n {
        let dominated = (0..n)
            .all(|v| set >> v & 1 == 1 || (0..n).any(|u| set >> u & 1 == 1 && g.has_edge(u, v)));
        if dominated {
            counts[set.count_ones() as usize] += 1;
        }
    }
    counts
}

fn naive_gamma(g: &Graph) -> usize {
    naive_counts(g).iter().position(|&c| c > 0).unwrap()
}

fn extra_graphs() -> Vec<Graph> {
    vec![
        Graph::path(6).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::friendship(2).unwrap(),
        Graph::biclique(3, 3).unwrap(),
    ]
}

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn kernels_match_naive_counter() {
    for g in catalog_up_to(5).unwrap().iter().chain(&extra_graphs()) {
        let naive = IntPoly::new(naive_counts(g));
        assert_eq!(domination_polynomial(g, &cfg()).unwrap(), naive, "{g:?}");
        assert_eq!(domination_polynomial_ie(g, &cfg()).unwrap(), naive, "{g:?}");
    }
}

#[test]
fn frozen_small_polynomials() {
    // computed with naive_counts and checked by hand
    let c5 = IntPoly::new(naive_counts(&Graph::cycle(5).unwrap()));
    assert_eq!(c5, IntPoly::new([0, 0, 5, 10, 5, 1]));
    let star3 = IntPoly::new(naive_counts(&Graph::star(3).unwrap()));
    assert_eq!(star3, IntPoly::new([0, 1, 3, 4, 1]));
    let k22 = IntPoly::new(naive_counts(&Graph::biclique(2, 2).unwrap()));
    assert_eq!(k22, IntPoly::new([0, 0, 6, 4, 1]));
    let p3 = IntPoly::new(naive_counts(&Graph::path(3).unwrap()));
    assert_eq!(p3, IntPoly::new([0, 1, 3, 1]));
}

#[test]
fn product_polynomial_from_external_enumeration() {
    // P4[P3], counted by an independent subset enumeration over networkx's
    // lexicographic_product
    let g = Graph::path(4)
        .unwrap()
        .lexicographic(&Graph::path(3).unwrap())
        .unwrap();
    let expected = IntPoly::new([0, 0, 12, 108, 381, 720, 898, 788, 495, 220, 66, 12, 1]);
    assert_eq!(domination_polynomial(&g, &cfg()).unwrap(), expected);
    assert_eq!(domination_polynomial_ie(&g, &cfg()).unwrap(), expected);
}

#[test]
fn supersets_of_dominating_sets_dominate() {
    for g in catalog_up_to(4).unwrap() {
        let n = g.order();
        for set in 0u64..1 << n {
            let s = VertexSet::from_mask(set);
            if !is_dominating(&g, s) {
                continue;
            }
            for extra in 0..n {
                let mut t = s;
                t.insert(extra);
                assert!(is_dominating(&g, t));
            }
        }
    }
}

#[test]
fn gamma_is_lowest_coefficient() {
    for g in catalog_up_to(5).unwrap().iter().chain(&extra_graphs()) {
        let d = domination_polynomial(g, &cfg()).unwrap();
        let gamma = domination_number(g, &cfg()).unwrap();
        assert_eq!(d.min_degree_nonzero(), Some(gamma));
        assert_eq!(gamma, naive_gamma(g));
        let total: u64 = naive_counts(g).iter().sum();
        assert_eq!(d.evaluate(&BigInt::from(1)), BigInt::from(total));
        assert_eq!(
            BigInt::from(gamma_sets(g, &cfg()).unwrap().len()),
            d.coeff(gamma)
        );
        assert_eq!(d.coeff(g.order()), BigInt::from(1));
    }
}

#[test]
fn union_multiplies_polynomials() {
    let cat = catalog_up_to(3).unwrap();
    for g in &cat {
        for h in &cat {
            let u = g.union(h).unwrap();
            let parts = [
                domination_polynomial(g, &cfg()).unwrap(),
                domination_polynomial(h, &cfg()).unwrap(),
            ];
            assert_eq!(
                domination_polynomial(&u, &cfg()).unwrap(),
                formulas::union_product(&parts).unwrap()
            );
        }
    }
    let k3 = Graph::complete(3).unwrap();
    assert_eq!(
        domination_polynomial(&k3.union(&k3).unwrap(), &cfg()).unwrap(),
        IntPoly::binomial_shift(3).power(2)
    );
}

#[test]
fn product_domination_number_bounds() {
    let c = cfg();
    let outer = catalog_up_to(4).unwrap();
    let inner = catalog_up_to(3).unwrap();
    let mut checked = 0;
    for g in &outer {
        for h in &inner {
            let gamma_h = domination_number(h, &c).unwrap();
            let product = domination_number(&g.lexicographic(h).unwrap(), &c).unwrap();
            let gamma_g = domination_number(g, &c).unwrap();
            if gamma_h == 1 && g.order() >= 2 && h.order() >= 2 {
                assert_eq!(product, gamma_g, "{g:?} [{h:?}]");
                checked += 1;
            }
            if gamma_h >= 2 && !g.has_isolated_vertex() {
                let iota_g = monitor_number(g, &c).unwrap();
                assert!(
                    gamma_g <= product && product <= gamma_g + iota_g,
                    "{g:?} [{h:?}]"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn parallel_matches_serial_on_larger_graphs() {
    let g = Graph::path(5)
        .unwrap()
        .lexicographic(&Graph::path(4).unwrap())
        .unwrap();
    let serial = domination_polynomial(&g, &cfg()).unwrap();
    for t in [2, 4, 7] {
        assert_eq!(
            domination_polynomial(&g, &cfg().with_threads(t)).unwrap(),
            serial
        );
    }
    assert_eq!(
        domination_polynomial_ie(&g, &cfg().with_threads(4)).unwrap(),
        serial
    );
}
