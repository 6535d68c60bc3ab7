//! Edge costs `c(i,j) = (i+j) / (2√(ij))` and the AG index.

use std::cmp::Ordering;
use std::sync::OnceLock;

use thiserror::Error;

use crate::bounds::Quadruplet;
use crate::exact::ExactValue;
use crate::graph::{Census, ChemicalGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AgError {
    #[error("degree pair ({0}, {1}) outside 1..=4")]
    DegreeOutOfRange(usize, usize),
}

fn cost_from_scratch(i: usize, j: usize) -> ExactValue {
    let (i, j) = (i.min(j), i.max(j));
    match (i, j) {
        _ if i == j => ExactValue::one(),
        (1, 2) | (2, 4) => ExactValue::sqrt2(3, 4),
        (1, 3) => ExactValue::sqrt3(2, 3),
        (1, 4) => ExactValue::rational(5, 4),
        (2, 3) => ExactValue::sqrt6(5, 12),
        (3, 4) => ExactValue::sqrt3(7, 12),
        _ => unreachable!(),
    }
}

fn cost_table() -> &'static [[ExactValue; 4]; 4] {
    static TABLE: OnceLock<[[ExactValue; 4]; 4]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|i| std::array::from_fn(|j| cost_from_scratch(i + 1, j + 1)))
    })
}

/// Exact cost of an edge joining vertices of degrees `i` and `j`.
pub fn edge_cost(i: usize, j: usize) -> Result<ExactValue, AgError> {
    if !(1..=4).contains(&i) || !(1..=4).contains(&j) {
        return Err(AgError::DegreeOutOfRange(i, j));
    }
    Ok(cost(i, j).clone())
}

/// Table lookup for degrees already known to be in range.
pub(crate) fn cost(i: usize, j: usize) -> &'static ExactValue {
    &cost_table()[i - 1][j - 1]
}

/// Sum of `x(i,j) · c(i,j)` over edge types.
pub fn census_value(census: &Census) -> ExactValue {
    let mut total = ExactValue::zero();
    for i in 1..=4 {
        for j in i..=4 {
            let x = census.x(i, j);
            if x > 0 {
                total += &(cost(i, j) * x as i64);
            }
        }
    }
    total
}

pub fn ag_value(g: &ChemicalGraph) -> ExactValue {
    census_value(&g.census())
}

/// `12·AG` packed as integer coefficients on `1, √2, √3, √6`. All edge
/// costs have denominators dividing 12, so this is exact and cheap; used as
/// a hash-friendly fingerprint in sweeps.
pub fn ag_scaled12(census: &Census) -> [i64; 4] {
    let x = |i, j| census.x(i, j) as i64;
    [
        12 * (x(1, 1) + x(2, 2) + x(3, 3) + x(4, 4)) + 15 * x(1, 4),
        9 * (x(1, 2) + x(2, 4)),
        8 * x(1, 3) + 7 * x(3, 4),
        5 * x(2, 3),
    ]
}

/// Inverse of [`ag_scaled12`].
pub fn from_scaled12(k: [i64; 4]) -> ExactValue {
    ExactValue::rational(k[0], 12)
        + ExactValue::sqrt2(k[1], 12)
        + ExactValue::sqrt3(k[2], 12)
        + ExactValue::sqrt6(k[3], 12)
}

/// `f(t) = 3/4·t1 + (3/√2 − 1)·t2 + (21/(4√3) − 3/2)·t3 + 2·t4`, the AG
/// value shared by every member of `G(n,m)` with degree census `t`.
pub fn f_value(q: &Quadruplet) -> ExactValue {
    let t2_coeff = ExactValue::sqrt2(3, 2) - ExactValue::one();
    let t3_coeff = ExactValue::sqrt3(7, 4) - ExactValue::rational(3, 2);
    ExactValue::rational(3, 4) * q.t1 as i64
        + t2_coeff * q.t2 as i64
        + t3_coeff * q.t3 as i64
        + ExactValue::integer(2 * q.t4 as i64)
}

pub fn exact_compare(a: &ExactValue, b: &ExactValue) -> Ordering {
    a.exact_cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactValue as V;

    #[test]
    fn cost_matrix_against_printed_values() {
        let printed = [
            [1.0000, 1.0607, 1.1547, 1.2500],
            [1.0607, 1.0000, 1.0206, 1.0607],
            [1.1547, 1.0206, 1.0000, 1.0104],
            [1.2500, 1.0607, 1.0104, 1.0000],
        ];
        for i in 1..=4 {
            for j in 1..=4 {
                let c = edge_cost(i, j).unwrap();
                let direct = (i + j) as f64 / (2.0 * ((i * j) as f64).sqrt());
                assert!((c.to_f64() - direct).abs() < 1e-12);
                assert!((c.to_f64() - printed[i - 1][j - 1]).abs() < 5e-5);
                assert_eq!(c, edge_cost(j, i).unwrap());
                let expected = if i == j {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                };
                assert_eq!(c.exact_cmp(&V::one()), expected);
            }
        }
        assert_eq!(edge_cost(1, 4).unwrap(), V::rational(5, 4));
        assert_eq!(edge_cost(2, 3).unwrap(), V::sqrt6(5, 12));
        assert_eq!(edge_cost(0, 1), Err(AgError::DegreeOutOfRange(0, 1)));
        assert_eq!(edge_cost(2, 5), Err(AgError::DegreeOutOfRange(2, 5)));
    }

    #[test]
    fn comparisons() {
        let (c12, c24, c23) = (cost(1, 2), cost(2, 4), cost(2, 3));
        assert_eq!(exact_compare(c12, c24), Ordering::Equal);
        assert_eq!(exact_compare(c23, c24), Ordering::Less);
        assert!((c24 - c24).is_zero());
    }

    #[test]
    fn small_graphs() {
        let k2 = ChemicalGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(ag_value(&k2), V::one());
        let p3 = ChemicalGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(ag_value(&p3), V::sqrt2(3, 2));
        let k4 = ChemicalGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(ag_value(&k4), V::integer(6));
        let star = ChemicalGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(ag_value(&star), V::integer(5));
        assert_eq!(ag_value(&ChemicalGraph::empty(3).unwrap()), V::zero());
    }

    #[test]
    fn scaled_form_matches() {
        let g = ChemicalGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (0, 2)])
            .unwrap();
        let census = g.census();
        let [a, b, c, d] = ag_scaled12(&census);
        let v = V::integer(a) + V::sqrt2(b, 1) + V::sqrt3(c, 1) + V::sqrt6(d, 1);
        assert_eq!(v, ag_value(&g) * 12);
        assert_eq!(from_scaled12([a, b, c, d]), ag_value(&g));
    }

    #[test]
    fn functional_values() {
        let q = |t1, t2, t3, t4| Quadruplet { t1, t2, t3, t4 };
        assert_eq!(f_value(&q(4, 0, 0, 1)), V::integer(5));
        assert_eq!(f_value(&q(0, 0, 0, 5)), V::integer(10));
        assert_eq!(f_value(&q(8, 1, 0, 3)), V::integer(11) + V::sqrt2(3, 2));
        assert!((f_value(&q(8, 1, 0, 3)).to_f64() - 13.1213).abs() < 5e-5);
    }
}
