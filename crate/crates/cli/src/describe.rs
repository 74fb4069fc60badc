//! Short readable names for catalog graphs in reports.

use domlex::graph::is_isomorphic_within;
use domlex::Graph;

/// A family name (`K3`, `E2`, `P4`, `C5`, `S3`, `F2`, `B(2,3)`,
/// `union(K2,E1)`) when `g` is isomorphic to one, otherwise the order and
/// edge list, e.g. `G4[0-1 0-2 0-3 1-2]`.
pub fn describe(g: &Graph) -> String {
    let n = g.order();
    let iso = |h: Graph| is_isomorphic_within(g, &h, n).unwrap_or(false);
    let mut candidates: Vec<(String, Graph)> = vec![
        (format!("K{n}"), Graph::complete(n).unwrap()),
        (format!("E{n}"), Graph::empty(n).unwrap()),
        (format!("P{n}"), Graph::path(n).unwrap()),
    ];
    if n >= 3 {
        candidates.push((format!("C{n}"), Graph::cycle(n).unwrap()));
    }
    if n >= 2 {
        candidates.push((format!("S{}", n - 1), Graph::star(n - 1).unwrap()));
    }
    if n % 2 == 1 && n >= 3 {
        let k = (n - 1) / 2;
        candidates.push((format!("F{k}"), Graph::friendship(k).unwrap()));
    }
    for m in 2..n.saturating_sub(1) {
        if m <= n - m {
            candidates.push((
                format!("B({m},{})", n - m),
                Graph::biclique(m, n - m).unwrap(),
            ));
        }
    }
    if n >= 3 {
        let k2_plus = Graph::complete(2)
            .unwrap()
            .union(&Graph::empty(n - 2).unwrap())
            .unwrap();
        let rest = if n == 3 {
            "K1".to_string()
        } else {
            format!("E{}", n - 2)
        };
        candidates.push((format!("union(K2,{rest})"), k2_plus));
    }
    if g.order() <= 10 || g.edge_count() == 0 || g.is_complete() {
        if let Some((name, _)) = candidates.into_iter().find(|(_, h)| iso(h.clone())) {
            return name;
        }
    }
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("G{n}[{}]", edges.join(" "))
}
