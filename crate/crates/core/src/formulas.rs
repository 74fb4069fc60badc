//! Closed-form domination polynomials of unions, joins and special
//! lexicographic products.
//!
//! Every formula works on `(order, polynomial)` data of the operands and never
//! builds a graph, so results are available well past the 64-vertex limit.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    UnionProduct,
    Join,
    LexEmptyLeft,
    LexCompleteComplete,
    LexCompleteLeft,
    LexStarLeft,
    LexFriendshipLeft,
    LexCompleteRight,
    FalseIdentity,
}

impl FormulaId {
    pub const ALL: [FormulaId; 9] = [
        FormulaId::UnionProduct,
        FormulaId::Join,
        FormulaId::LexEmptyLeft,
        FormulaId::LexCompleteComplete,
        FormulaId::LexCompleteLeft,
        FormulaId::LexStarLeft,
        FormulaId::LexFriendshipLeft,
        FormulaId::LexCompleteRight,
        FormulaId::FalseIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::UnionProduct => "union-product",
            FormulaId::Join => "join",
            FormulaId::LexEmptyLeft => "lex-empty-left",
            FormulaId::LexCompleteComplete => "lex-complete-complete",
            FormulaId::LexCompleteLeft => "lex-complete-left",
            FormulaId::LexStarLeft => "lex-star-left",
            FormulaId::LexFriendshipLeft => "lex-friendship-left",
            FormulaId::LexCompleteRight => "lex-complete-right",
            FormulaId::FalseIdentity => "false-identity",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = FormulaId::ALL.iter().map(|id| id.name()).collect();
                format!(
                    "unknown formula {s:?}; expected one of {}",
                    known.join(", ")
                )
            })
    }
}

fn at_least_one(family: &'static str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter {
            family,
            value,
            expected: "at least 1",
        });
    }
    Ok(())
}

fn exponent(n: usize) -> u32 {
    u32::try_from(n).expect("exponent fits in u32")
}

/// Domination polynomial of a disjoint union: the product of the parts.
pub fn union_product(parts: &[IntPoly]) -> Result<IntPoly> {
    if parts.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(parts.iter().cloned().product())
}

/// Domination polynomial of `G_1 ∨ .. ∨ G_k` from the orders `n_i` and
/// polynomials `D(G_i, x)`:
///
/// `sum_{j<k} ((1+x)^{n_j} - 1)((1+x)^{n_{j+1} + .. + n_k} - 1) + sum_i D(G_i, x)`
pub fn join_formula(orders: &[usize], polys: &[IntPoly]) -> Result<IntPoly> {
    if orders.len() != polys.len() {
        return Err(Error::LengthMismatch {
            orders: orders.len(),
            polys: polys.len(),
        });
    }
    if orders.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut result: IntPoly = polys.iter().cloned().sum();
    let mut tail: usize = orders.iter().sum();
    for &n in &orders[..orders.len() - 1] {
        tail -= n;
        result = &result + &(&IntPoly::binomial_shift(n) * &IntPoly::binomial_shift(tail));
    }
    Ok(result)
}

/// `D((nK_1)[G], x) = D(G, x)^n`.
pub fn lex_empty_left(n: usize, d_g: &IntPoly) -> IntPoly {
    d_g.power(exponent(n))
}

/// `D(K_m[K_n], x) = (1+x)^{mn} - 1`.
pub fn lex_complete_complete(m: usize, n: usize) -> Result<IntPoly> {
    at_least_one("complete", m)?;
    at_least_one("complete", n)?;
    Ok(IntPoly::binomial_shift(m * n))
}

/// `D(K_m[G], x) = ((1+x)^{|G|} - 1) sum_{j=1}^{m-1} ((1+x)^{(m-j)|G|} - 1) + m D(G, x)`.
pub fn lex_complete_left(m: usize, g_order: usize, d_g: &IntPoly) -> Result<IntPoly> {
    at_least_one("complete", m)?;
    let sum: IntPoly = (1..m)
        .map(|j| IntPoly::binomial_shift((m - j) * g_order))
        .sum();
    let scaled = d_g * &IntPoly::constant(m);
    Ok(&(&IntPoly::binomial_shift(g_order) * &sum) + &scaled)
}

/// `D(K_{1,n}[G], x) = ((1+x)^{|G|} - 1)((1+x)^{n|G|} - 1) + D(G, x) + D(G, x)^n`.
pub fn lex_star_left(n: usize, g_order: usize, d_g: &IntPoly) -> Result<IntPoly> {
    at_least_one("star", n)?;
    let cross = &IntPoly::binomial_shift(g_order) * &IntPoly::binomial_shift(n * g_order);
    Ok(&(&cross + d_g) + &d_g.power(exponent(n)))
}

/// `D(F_n[G], x) = ((1+x)^{|G|} - 1)((1+x)^{2n|G|} - 1) + D(G, x)
///  + (((1+x)^{|G|} - 1)^2 + 2 D(G, x))^n`.
pub fn lex_friendship_left(n: usize, g_order: usize, d_g: &IntPoly) -> Result<IntPoly> {
    at_least_one("friendship", n)?;
    let shift = IntPoly::binomial_shift(g_order);
    let cross = &shift * &IntPoly::binomial_shift(2 * n * g_order);
    let blade = &shift.power(2) + &(d_g * &IntPoly::constant(2));
    Ok(&(&cross + d_g) + &blade.power(exponent(n)))
}

/// `D(G[K_n], x) = D(G, (1+x)^n - 1)`.
pub fn lex_complete_right(d_g: &IntPoly, n: usize) -> Result<IntPoly> {
    at_least_one("complete", n)?;
    Ok(d_g.compose(&IntPoly::binomial_shift(n)))
}

/// The candidate `D(G, D(H, x) - 1)`, which does not equal `D(G[H], x)` in
/// general.
pub fn false_identity_probe(d_g: &IntPoly, d_h: &IntPoly) -> IntPoly {
    d_g.compose(&(d_h - &IntPoly::one()))
}
