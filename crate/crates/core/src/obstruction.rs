//! Sufficient conditions for a graph to have no super edge-magic labeling.
//!
//! Every rule here is sound: a verdict is returned only when its hypotheses
//! hold, and absence of a verdict says nothing. All arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::ObstructionError;
use crate::graph::Graph;
use crate::interval::sem_interval;
use crate::labeling::{edge_label_total, triangular};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// Every degree even and `q = 2 (mod 4)`.
    #[serde(rename = "EVEN_DEG_Q_MOD4")]
    EvenDegQMod4,
    /// Even order `n >= 6` with degree sequence `4, 2, ..., 2`.
    #[serde(rename = "DEGSEQ_4_2_EVEN_ORDER")]
    Degseq42EvenOrder,
    /// No vertex bijection makes the valence formula an integer.
    #[serde(rename = "VALENCE_INTEGRALITY")]
    ValenceIntegrality,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::EvenDegQMod4 => "EVEN_DEG_Q_MOD4",
            Rule::Degseq42EvenOrder => "DEGSEQ_4_2_EVEN_ORDER",
            Rule::ValenceIntegrality => "VALENCE_INTEGRALITY",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub rule: Rule,
    pub justification: String,
    pub parameters: BTreeMap<String, Value>,
}

impl ObstructionVerdict {
    fn new(rule: Rule, justification: String, parameters: Value) -> Self {
        let parameters = match parameters {
            Value::Object(map) => map.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        ObstructionVerdict {
            rule,
            justification,
            parameters,
        }
    }
}

fn ratio_json(r: Ratio<i64>) -> Value {
    json!([r.numer(), r.denom()])
}

pub fn check_even_degree_parity(g: &Graph) -> Option<ObstructionVerdict> {
    let q = g.size();
    let degrees = g.degree_sequence();
    if !degrees.all_even() || q % 4 != 2 {
        return None;
    }
    Some(ObstructionVerdict::new(
        Rule::EvenDegQMod4,
        format!("every vertex degree is even and q = {q} = 2 (mod 4)"),
        json!({ "q": q, "q_mod_4": q % 4, "degrees": degrees.distinct() }),
    ))
}

pub fn check_degseq_4_2_even_order(g: &Graph) -> Option<ObstructionVerdict> {
    let p = g.order();
    if p % 2 != 0 || p < 6 {
        return None;
    }
    let degrees = g.degree_sequence();
    let d = degrees.as_slice();
    if d[0] != 4 || d[1..].iter().any(|&x| x != 2) {
        return None;
    }
    Some(ObstructionVerdict::new(
        Rule::Degseq42EvenOrder,
        format!(
            "even order {p} >= 6 with degree sequence 4,2,...,2 forces q = {} and valence \
             {} + 2a/{} for the label a of the degree-4 vertex, never an integer \
             (degree sequence only; connectivity not required)",
            p + 1,
            5 * p / 2 + 1,
            p + 1
        ),
        json!({ "order": p, "order_parity": "even", "q": g.size() }),
    ))
}

/// The valence a super edge-magic labeling of an order-`n` graph with degree
/// sequence `4, 2, ..., 2` would have if its degree-4 vertex carried label
/// `alpha`: `(5n^2 + 7n + 2 + 4 alpha) / (2(n + 1))`.
pub fn theorem_valence_gap(n: i64, alpha: i64) -> Result<Ratio<i64>, ObstructionError> {
    if n < 6 || n % 2 != 0 || alpha < 1 || alpha > n {
        return Err(ObstructionError::Domain { n, alpha });
    }
    let value = Ratio::new(5 * n * n + 7 * n + 2 + 4 * alpha, 2 * (n + 1));
    debug_assert_eq!(value, Ratio::from_integer(5 * n / 2 + 1) + Ratio::new(2 * alpha, n + 1));
    Ok(value)
}

/// Fires when no vertex bijection gives an integral valence.
///
/// Exact when the graph has at most two distinct degrees: the weighted sum
/// then depends only on `T`, the total label on the high-degree vertices, and
/// the `h`-subsets of `1..=p` realise every integer `T` between
/// `h(h+1)/2` and `h(2p-h+1)/2`. With three or more distinct degrees only the
/// rounded extremes are compared.
pub fn check_valence_integrality(g: &Graph) -> Result<Option<ObstructionVerdict>, ObstructionError> {
    let (p, q) = (g.order(), g.size());
    if q == 0 {
        return Err(ObstructionError::Edgeless);
    }
    let constant = edge_label_total(p, q);
    let degrees = g.degree_sequence();
    let distinct = degrees.distinct();
    let qi = q as i64;

    match distinct.as_slice() {
        [d] => {
            let numerator = *d as i64 * triangular(p as i64) + constant;
            if numerator % qi == 0 {
                return Ok(None);
            }
            Ok(Some(ObstructionVerdict::new(
                Rule::ValenceIntegrality,
                format!("{d}-regular: every bijection gives valence {numerator}/{q}, not an integer"),
                json!({ "q": q, "numerator": numerator, "distinct_degrees": distinct }),
            )))
        }
        [hi, lo] => {
            let (hi, lo) = (*hi as i64, *lo as i64);
            let h = degrees.as_slice().iter().filter(|&&x| x as i64 == hi).count() as i64;
            let pi = p as i64;
            let t_min = triangular(h);
            let t_max = h * (2 * pi - h + 1) / 2;
            let base = lo * triangular(pi) + constant;
            if (t_min..=t_max).any(|t| (base + (hi - lo) * t) % qi == 0) {
                return Ok(None);
            }
            Ok(Some(ObstructionVerdict::new(
                Rule::ValenceIntegrality,
                format!(
                    "valence is ({base} + {}T)/{q} where T in [{t_min}, {t_max}] is the label total \
                     on the {h} vertices of degree {hi}; no T makes it an integer",
                    hi - lo
                ),
                json!({
                    "q": q,
                    "distinct_degrees": distinct,
                    "high_degree_count": h,
                    "label_total_range": [t_min, t_max],
                }),
            )))
        }
        _ => {
            let interval = sem_interval(g).expect("q >= 1");
            if !interval.is_empty() {
                return Ok(None);
            }
            Ok(Some(ObstructionVerdict::new(
                Rule::ValenceIntegrality,
                format!(
                    "valence formula ranges over [{}, {}], which contains no integer",
                    interval.min_value, interval.max_value
                ),
                json!({
                    "q": q,
                    "distinct_degrees": distinct,
                    "min_value": ratio_json(interval.min_value),
                    "max_value": ratio_json(interval.max_value),
                }),
            )))
        }
    }
}

/// The first rule that fires, in the order parity, degree sequence, integrality.
pub fn first_obstruction(g: &Graph) -> Option<ObstructionVerdict> {
    all_obstructions(g).into_iter().next()
}

pub fn all_obstructions(g: &Graph) -> Vec<ObstructionVerdict> {
    let mut out = Vec::new();
    out.extend(check_even_degree_parity(g));
    out.extend(check_degseq_4_2_even_order(g));
    if g.size() > 0 {
        out.extend(check_valence_integrality(g).expect("q >= 1"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_two_cycle, Graph};

    fn c(m: usize, n: usize) -> Graph {
        make_two_cycle(m, n).unwrap()
    }

    #[test]
    fn parity_rule() {
        assert_eq!(check_even_degree_parity(&c(3, 3)).unwrap().rule, Rule::EvenDegQMod4);
        assert!(check_even_degree_parity(&make_cycle(6).unwrap()).is_some());
        assert!(check_even_degree_parity(&c(3, 5)).is_none());
        // path: q = 2 but odd degrees
        assert!(check_even_degree_parity(&Graph::new(3, [(0, 1), (1, 2)]).unwrap()).is_none());
    }

    #[test]
    fn degseq_rule() {
        assert_eq!(check_degseq_4_2_even_order(&c(3, 4)).unwrap().rule, Rule::Degseq42EvenOrder);
        assert!(check_degseq_4_2_even_order(&c(3, 5)).is_none());
        let disconnected = make_cycle(6).unwrap().disjoint_union(&c(3, 4));
        assert!(check_degseq_4_2_even_order(&disconnected).is_some());
        assert!(check_degseq_4_2_even_order(&make_cycle(6).unwrap()).is_none());
        assert!(check_degseq_4_2_even_order(&Graph::empty(6)).is_none());
    }

    #[test]
    fn degseq_rule_fires_on_odd_m_plus_n() {
        for m in 3..=8 {
            for n in 3..=8 {
                let fires = check_degseq_4_2_even_order(&c(m, n)).is_some();
                assert_eq!(fires, (m + n) % 2 == 1, "C({m},{n})");
            }
        }
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(theorem_valence_gap(6, 1).unwrap(), Ratio::new(114, 7));
        assert_eq!(theorem_valence_gap(6, 1).unwrap(), Ratio::from_integer(16) + Ratio::new(2, 7));
        assert_eq!(theorem_valence_gap(8, 4).unwrap(), Ratio::from_integer(21) + Ratio::new(8, 9));
        for alpha in 1..=6 {
            assert!(!theorem_valence_gap(6, alpha).unwrap().is_integer());
        }
    }

    #[test]
    fn theorem_domain() {
        assert!(theorem_valence_gap(7, 1).is_err());
        assert!(theorem_valence_gap(4, 1).is_err());
        assert!(theorem_valence_gap(6, 0).is_err());
        assert!(theorem_valence_gap(6, 7).is_err());
    }

    #[test]
    fn integrality_examples() {
        assert_eq!(
            check_valence_integrality(&c(3, 4)).unwrap().unwrap().rule,
            Rule::ValenceIntegrality
        );
        assert!(check_valence_integrality(&make_cycle(3).unwrap()).unwrap().is_none());
        assert!(check_valence_integrality(&c(3, 5)).unwrap().is_none());
        // C_4: 46/4 for every bijection
        assert!(check_valence_integrality(&make_cycle(4).unwrap()).unwrap().is_some());
        assert_eq!(
            check_valence_integrality(&Graph::empty(2)),
            Err(ObstructionError::Edgeless)
        );
    }

    #[test]
    fn ordering_of_rules() {
        assert_eq!(first_obstruction(&c(3, 3)).unwrap().rule, Rule::EvenDegQMod4);
        assert_eq!(first_obstruction(&c(3, 4)).unwrap().rule, Rule::Degseq42EvenOrder);
        assert!(first_obstruction(&c(3, 5)).is_none());
        assert!(first_obstruction(&Graph::empty(4)).is_none());
    }

    #[test]
    fn verdict_json() {
        let v = check_degseq_4_2_even_order(&c(3, 4)).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.contains(r#""rule":"DEGSEQ_4_2_EVEN_ORDER""#));
        assert!(text.contains(r#""order":6"#));
    }
}
