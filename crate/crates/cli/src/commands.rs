//! Subcommand bodies. Each returns the text for standard output and the
//! process exit code, so they can be tested without spawning the binary.

use std::fmt::Write;
use std::path::PathBuf;

use domlex::formulas::{self, FormulaId};
use domlex::graph::is_isomorphic_within;
use domlex::oracle::{
    domination_polynomial, minimum_dominating_set, monitor_witness, OracleConfig,
};
use domlex::{Graph, IntPoly};

use crate::error::{exit, CliError};
use crate::expr::GraphExpr;
use crate::hunt::hunt;
use crate::report::*;
use crate::verify::{verify, Law, VerifyOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            code: exit::SUCCESS,
        }
    }
}

/// Where a graph comes from.
#[derive(Clone, Debug)]
pub enum Input {
    Expr(String),
    EdgeList(PathBuf),
}

pub struct Loaded {
    pub label: String,
    pub expr: Option<GraphExpr>,
    pub graph: Graph,
}

pub fn load(input: &Input) -> Result<Loaded, CliError> {
    match input {
        Input::Expr(text) => {
            let expr = GraphExpr::parse(text)?;
            let graph = expr.eval()?;
            Ok(Loaded {
                label: expr.to_string(),
                expr: Some(expr),
                graph,
            })
        }
        Input::EdgeList(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Loaded {
                label: path.display().to_string(),
                expr: None,
                graph: Graph::from_edge_list(&text)?,
            })
        }
    }
}

/// Evaluates a closed form on the operands of `expr`. Operand polynomials
/// come from the oracle; the full product is never enumerated.
pub fn apply_formula(
    id: FormulaId,
    expr: &GraphExpr,
    config: &OracleConfig,
) -> Result<IntPoly, CliError> {
    use GraphExpr as E;
    let operand = |e: &GraphExpr| -> Result<(usize, IntPoly), CliError> {
        let g = e.eval()?;
        Ok((g.order(), domination_polynomial(&g, config)?))
    };
    let result = match (id, expr) {
        (FormulaId::UnionProduct, E::Union(parts)) => {
            let polys = parts
                .iter()
                .map(|p| operand(p).map(|o| o.1))
                .collect::<Result<Vec<_>, _>>()?;
            formulas::union_product(&polys)?
        }
        (FormulaId::Join, E::Join(parts)) => {
            let (orders, polys): (Vec<_>, Vec<_>) = parts
                .iter()
                .map(operand)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .unzip();
            formulas::join_formula(&orders, &polys)?
        }
        (FormulaId::LexEmptyLeft, E::Lex(a, b)) if matches!(**a, E::Empty(_)) => {
            let E::Empty(n) = **a else { unreachable!() };
            formulas::lex_empty_left(n, &operand(b)?.1)
        }
        (FormulaId::LexCompleteComplete, E::Lex(a, b)) => match (&**a, &**b) {
            (E::Complete(m), E::Complete(n)) => formulas::lex_complete_complete(*m, *n)?,
            _ => return inapplicable(id, expr),
        },
        (FormulaId::LexCompleteLeft, E::Lex(a, b)) if matches!(**a, E::Complete(_)) => {
            let E::Complete(m) = **a else { unreachable!() };
            let (n_g, d_g) = operand(b)?;
            formulas::lex_complete_left(m, n_g, &d_g)?
        }
        (FormulaId::LexStarLeft, E::Lex(a, b)) if matches!(**a, E::Star(_)) => {
            let E::Star(n) = **a else { unreachable!() };
            let (n_g, d_g) = operand(b)?;
            formulas::lex_star_left(n, n_g, &d_g)?
        }
        (FormulaId::LexFriendshipLeft, E::Lex(a, b)) if matches!(**a, E::Friendship(_)) => {
            let E::Friendship(n) = **a else {
                unreachable!()
            };
            let (n_g, d_g) = operand(b)?;
            formulas::lex_friendship_left(n, n_g, &d_g)?
        }
        (FormulaId::LexCompleteRight, E::Lex(a, b)) if matches!(**b, E::Complete(_)) => {
            let E::Complete(n) = **b else { unreachable!() };
            formulas::lex_complete_right(&operand(a)?.1, n)?
        }
        (FormulaId::FalseIdentity, E::Lex(a, b)) => {
            formulas::false_identity_probe(&operand(a)?.1, &operand(b)?.1)
        }
        _ => return inapplicable(id, expr),
    };
    Ok(result)
}

fn inapplicable<T>(id: FormulaId, expr: &GraphExpr) -> Result<T, CliError> {
    Err(CliError::Usage(format!(
        "formula {id} does not apply to {expr}"
    )))
}

pub fn poly(
    input: &Input,
    formula: Option<FormulaId>,
    config: &OracleConfig,
    json: bool,
) -> Result<Output, CliError> {
    let loaded = load(input)?;
    let g = &loaded.graph;
    let polynomial = match formula {
        None => domination_polynomial(g, config)?,
        Some(id) => match &loaded.expr {
            Some(expr) => apply_formula(id, expr, config)?,
            None => {
                return Err(CliError::Usage(
                    "--formula needs a graph expression, not an edge list".into(),
                ))
            }
        },
    };
    if !json {
        return Ok(Output::ok(format!("{polynomial}\n")));
    }
    let iota = match monitor_witness(g, config) {
        Ok((_, u)) => Some(u.len()),
        Err(domlex::Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(Output::ok(to_json(&PolyReport {
        expr: loaded.label,
        order: g.order(),
        edges: g.edge_count(),
        polynomial: polynomial.to_decimal_strings(),
        gamma: polynomial.min_degree_nonzero(),
        iota,
    })))
}

pub fn gamma(input: &Input, config: &OracleConfig, json: bool) -> Result<Output, CliError> {
    let loaded = load(input)?;
    let witness = minimum_dominating_set(&loaded.graph, config)?;
    if json {
        return Ok(Output::ok(to_json(&GammaReport {
            expr: loaded.label,
            order: loaded.graph.order(),
            gamma: witness.len(),
            witness: witness.iter().collect(),
        })));
    }
    Ok(Output::ok(format!(
        "{}\nwitness: {witness}\n",
        witness.len()
    )))
}

pub fn iota(input: &Input, config: &OracleConfig, json: bool) -> Result<Output, CliError> {
    let loaded = load(input)?;
    let (gamma_set, monitors) = monitor_witness(&loaded.graph, config)?;
    if json {
        return Ok(Output::ok(to_json(&IotaReport {
            expr: loaded.label,
            order: loaded.graph.order(),
            iota: monitors.len(),
            gamma_set: gamma_set.iter().collect(),
            monitor_set: monitors.iter().collect(),
        })));
    }
    Ok(Output::ok(format!(
        "{}\ngamma-set: {gamma_set}\nmonitor set: {monitors}\n",
        monitors.len()
    )))
}

pub fn verify_law(law: Law, opts: &VerifyOptions, json: bool) -> Result<Output, CliError> {
    let reports = verify(law, opts)?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    let failed = reports.len() - passed;
    let stdout = if json {
        to_json(&VerifySummary {
            law: law.name(),
            passed,
            failed,
            reports: &reports,
        })
    } else {
        let mut s = String::new();
        for r in &reports {
            writeln!(s, "{r}").unwrap();
        }
        writeln!(s, "{law}: {passed}/{} passed", reports.len()).unwrap();
        s
    };
    let code = if failed == 0 {
        exit::SUCCESS
    } else {
        exit::FAILURE
    };
    Ok(Output { stdout, code })
}

pub fn hunt_pairs(
    max_g: usize,
    max_h: usize,
    config: &OracleConfig,
    json: bool,
) -> Result<Output, CliError> {
    let result = hunt(max_g, max_h, config)?;
    let code = if result.confirmations == result.complete_pairs {
        exit::SUCCESS
    } else {
        exit::FAILURE
    };
    let stdout = if json {
        to_json(&result)
    } else {
        let mut s = String::new();
        writeln!(s, "pairs tested: {}", result.pairs_tested).unwrap();
        writeln!(
            s,
            "counterexamples to D(G[H],x) = D(G,D(H,x)-1): {}",
            result.counterexamples.len()
        )
        .unwrap();
        for c in &result.counterexamples {
            writeln!(
                s,
                "  {}[{}]: probe = {}, oracle = {}",
                c.g, c.h, c.probe, c.oracle
            )
            .unwrap();
        }
        writeln!(
            s,
            "D(G[Kn],x) = D(G,(1+x)^n-1): {}/{} confirmed",
            result.confirmations, result.complete_pairs
        )
        .unwrap();
        s
    };
    Ok(Output { stdout, code })
}

pub fn iso(left: &Input, right: &Input, limit: usize, json: bool) -> Result<Output, CliError> {
    let (a, b) = (load(left)?, load(right)?);
    let isomorphic = is_isomorphic_within(&a.graph, &b.graph, limit)?;
    let stdout = if json {
        to_json(&IsoReport {
            left: a.label,
            right: b.label,
            isomorphic,
        })
    } else if isomorphic {
        "isomorphic\n".to_string()
    } else {
        "not isomorphic\n".to_string()
    };
    let code = if isomorphic {
        exit::SUCCESS
    } else {
        exit::FAILURE
    };
    Ok(Output { stdout, code })
}
