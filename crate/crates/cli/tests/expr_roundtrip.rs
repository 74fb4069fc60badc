use domlex_cli::GraphExpr;
use proptest::prelude::*;

fn atom() -> impl Strategy<Value = GraphExpr> {
    prop_oneof![
        (0usize..=6).prop_map(GraphExpr::Complete),
        (0usize..=6).prop_map(GraphExpr::Path),
        (3usize..=6).prop_map(GraphExpr::Cycle),
        (0usize..=6).prop_map(GraphExpr::Empty),
        (1usize..=6).prop_map(GraphExpr::Star),
        (1usize..=3).prop_map(GraphExpr::Friendship),
        (1usize..=3, 1usize..=3).prop_map(|(m, n)| GraphExpr::Biclique(m, n)),
    ]
}

fn expr() -> impl Strategy<Value = GraphExpr> {
    atom().prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| GraphExpr::Lex(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| GraphExpr::Comp(Box::new(a))),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(GraphExpr::Join),
            prop::collection::vec(inner, 2..=3).prop_map(GraphExpr::Union),
        ]
    })
}

proptest! {
    #[test]
    fn render_then_parse(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(GraphExpr::parse(&text).unwrap(), e.clone());
        // whitespace between tokens is ignored
        let spaced = text.replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(GraphExpr::parse(&spaced).unwrap(), e);
    }
}
