//! Search for pairs `(G, H)` where `D(G[H], x)` differs from the candidate
//! `D(G, D(H, x) - 1)`, alongside a check of the true composition law
//! `D(G[K_n], x) = D(G, (1+x)^n - 1)`.

use domlex::formulas::{false_identity_probe, lex_complete_right};
use domlex::graph::catalog_up_to;
use domlex::oracle::{domination_polynomial, OracleConfig};
use domlex::{Graph, IntPoly};
use serde::{Serialize, Serializer};

use crate::describe::describe;
use crate::error::CliError;

pub const DEFAULT_MAX_G: usize = 4;
pub const DEFAULT_MAX_H: usize = 3;

fn as_strings<S: Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
    p.to_decimal_strings().serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub g: String,
    pub h: String,
    #[serde(serialize_with = "as_strings")]
    pub probe: IntPoly,
    #[serde(serialize_with = "as_strings")]
    pub oracle: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntResult {
    pub pairs_tested: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Pairs with `H` complete.
    pub complete_pairs: usize,
    /// Complete pairs where the composition law held.
    pub confirmations: usize,
}

/// Tests every pair from the order-`1..=max_g` and order-`1..=max_h`
/// catalogs.
pub fn hunt(max_g: usize, max_h: usize, config: &OracleConfig) -> Result<HuntResult, CliError> {
    let outer = catalog_up_to(max_g)?;
    let inner = catalog_up_to(max_h)?;
    let oracle = |g: &Graph| domination_polynomial(g, config);
    let outer_polys = outer.iter().map(oracle).collect::<Result<Vec<_>, _>>()?;
    let inner_polys = inner.iter().map(oracle).collect::<Result<Vec<_>, _>>()?;

    let mut result = HuntResult {
        pairs_tested: 0,
        counterexamples: Vec::new(),
        complete_pairs: 0,
        confirmations: 0,
    };
    for (g, d_g) in outer.iter().zip(&outer_polys) {
        for (h, d_h) in inner.iter().zip(&inner_polys) {
            let actual = oracle(&g.lexicographic(h)?)?;
            let probe = false_identity_probe(d_g, d_h);
            result.pairs_tested += 1;
            if probe != actual {
                result.counterexamples.push(Counterexample {
                    g: describe(g),
                    h: describe(h),
                    probe,
                    oracle: actual.clone(),
                });
            }
            if h.is_complete() {
                result.complete_pairs += 1;
                if lex_complete_right(d_g, h.order())? == actual {
                    result.confirmations += 1;
                }
            }
        }
    }
    Ok(result)
}
