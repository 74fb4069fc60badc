//! Algebraic laws of the lexicographic product over small catalogs.

use domlex::graph::{catalog_up_to, is_isomorphic, is_isomorphic_within};
use domlex::Graph;

fn catalog(max: usize) -> Vec<Graph> {
    catalog_up_to(max).unwrap()
}

#[test]
fn every_constructor_is_well_formed() {
    let mut graphs = catalog(5);
    for n in 1..=8 {
        graphs.push(Graph::star(n).unwrap());
        graphs.push(Graph::friendship(n).unwrap());
        graphs.push(Graph::biclique(n, 3).unwrap());
    }
    let base = graphs.clone();
    for g in base.iter().take(20) {
        for h in base.iter().take(20) {
            graphs.push(g.lexicographic(h).unwrap());
            graphs.push(g.join(h).unwrap());
            graphs.push(g.union(h).unwrap());
        }
    }
    for g in &graphs {
        assert!(g.is_well_formed());
        assert!(g.complement().is_well_formed());
        assert_eq!(g.edge_count() * 2, g.degrees().iter().sum::<usize>());
    }
}

#[test]
fn order_and_edge_counts_of_products() {
    let cat = catalog(4);
    for g in &cat {
        for h in &cat {
            let p = g.lexicographic(h).unwrap();
            assert_eq!(p.order(), g.order() * h.order());
            assert_eq!(
                p.edge_count(),
                g.edge_count() * h.order().pow(2) + g.order() * h.edge_count()
            );
        }
    }
}

#[test]
fn associativity() {
    let k1 = Graph::complete(1).unwrap();
    let k2 = Graph::complete(2).unwrap();
    let e2 = Graph::empty(2).unwrap();
    let p3 = Graph::path(3).unwrap();
    let small = [k1, k2, e2, p3];
    for a in &small {
        for b in &small {
            for c in &small {
                let left = a.lexicographic(b).unwrap().lexicographic(c).unwrap();
                let right = a.lexicographic(&b.lexicographic(c).unwrap()).unwrap();
                assert_eq!(left, right);
                if left.order() <= 10 {
                    assert!(is_isomorphic(&left, &right).unwrap());
                }
            }
        }
    }
    for a in &catalog(3) {
        for b in &catalog(3) {
            for c in &catalog(3) {
                let left = a.lexicographic(b).unwrap().lexicographic(c).unwrap();
                let right = a.lexicographic(&b.lexicographic(c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn unit_laws() {
    let k1 = Graph::complete(1).unwrap();
    for g in &catalog(5) {
        assert_eq!(&k1.lexicographic(g).unwrap(), g);
        assert_eq!(&g.lexicographic(&k1).unwrap(), g);
    }
}

#[test]
fn right_distributivity_over_union() {
    let cat = catalog(3);
    for g in &cat {
        for h in &cat {
            for k in &cat {
                let left = g.union(h).unwrap().lexicographic(k).unwrap();
                let right = g
                    .lexicographic(k)
                    .unwrap()
                    .union(&h.lexicographic(k).unwrap())
                    .unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn complement_commutes_with_product() {
    let cat = catalog(3);
    for g in &cat {
        for h in &cat {
            let left = g.lexicographic(h).unwrap().complement();
            let right = g.complement().lexicographic(&h.complement()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn complement_is_an_involution() {
    for g in &catalog(5) {
        assert_eq!(&g.complement().complement(), g);
    }
}

#[test]
fn commutation_theorem() {
    for g in &catalog(4) {
        for n in [2, 3] {
            let e = Graph::empty(n).unwrap();
            let k = Graph::complete(n).unwrap();
            let commutes_empty = is_isomorphic_within(
                &g.lexicographic(&e).unwrap(),
                &e.lexicographic(g).unwrap(),
                12,
            )
            .unwrap();
            assert_eq!(commutes_empty, g.edge_count() == 0, "{g:?}, n = {n}");
            let commutes_complete = is_isomorphic_within(
                &g.lexicographic(&k).unwrap(),
                &k.lexicographic(g).unwrap(),
                12,
            )
            .unwrap();
            assert_eq!(commutes_complete, g.is_complete(), "{g:?}, n = {n}");
        }
    }
}

#[test]
fn product_shapes_from_lemmas() {
    let iso = |a: &Graph, b: &Graph| is_isomorphic(a, b).unwrap();
    let k2 = Graph::complete(2).unwrap();
    let e = |n| Graph::empty(n).unwrap();
    assert!(iso(
        &k2.lexicographic(&e(2)).unwrap(),
        &Graph::biclique(2, 2).unwrap()
    ));
    let s2k2 = Graph::star(2).unwrap().lexicographic(&k2).unwrap();
    let rhs = k2.join(&k2.union(&k2).unwrap()).unwrap();
    assert!(iso(&s2k2, &rhs));
    assert!(iso(
        &e(3).lexicographic(&k2).unwrap(),
        &k2.union(&k2.union(&k2).unwrap()).unwrap()
    ));
    assert!(iso(
        &Graph::biclique(2, 2).unwrap(),
        &Graph::cycle(4).unwrap()
    ));
}
