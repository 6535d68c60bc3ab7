//! Degree census targets, the sharp upper bound `UB(n,m)` and the 22 pairs
//! where it is not attained.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ag::f_value;
use crate::exact::ExactValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("no degree census with t2 + t3 <= 1 exists for n = {n}, m = {m}")]
    InfeasiblePair { n: usize, m: usize },
    #[error("m = {m} outside the connected range [n-1, min(2n, n(n-1)/2)] for n = {n}")]
    SizeOutOfRange { n: usize, m: usize },
}

/// Target numbers of vertices of degree 1, 2, 3 and 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quadruplet {
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
    pub t4: usize,
}

impl Quadruplet {
    pub fn new(t1: usize, t2: usize, t3: usize, t4: usize) -> Self {
        Quadruplet { t1, t2, t3, t4 }
    }

    pub fn order(&self) -> usize {
        self.t1 + self.t2 + self.t3 + self.t4
    }

    pub fn degree_sum(&self) -> usize {
        self.t1 + 2 * self.t2 + 3 * self.t3 + 4 * self.t4
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.t1, self.t2, self.t3, self.t4]
    }
}

/// The unique `(t1,t2,t3,t4)` with `Σt = n`, `Σi·t_i = 2m` and `t2 + t3 ≤ 1`,
/// if it has no negative entry.
pub fn canonical_quadruplet(n: usize, m: usize) -> Option<Quadruplet> {
    if n == 0 {
        return None;
    }
    let (n, m) = (n as i64, m as i64);
    let r = 2 * m - n;
    let t1 = (4 * n - 2 * m).div_euclid(3);
    let t4 = r.div_euclid(3);
    let t2 = (r.rem_euclid(3) == 1) as i64;
    let t3 = (r.rem_euclid(3) == 2) as i64;
    if t1 < 0 || t4 < 0 {
        return None;
    }
    let q = Quadruplet::new(t1 as usize, t2 as usize, t3 as usize, t4 as usize);
    debug_assert_eq!(q.order() as i64, n);
    debug_assert_eq!(q.degree_sum() as i64, 2 * m);
    Some(q)
}

/// `(2m − n) mod 3`.
pub fn residue(n: usize, m: usize) -> u8 {
    (2 * m as i64 - n as i64).rem_euclid(3) as u8
}

/// `(2n+5m)/6` plus `0`, `3/√2 − 13/6` or `21/(4√3) − 37/12` by residue.
/// Defined for every pair, including those without a canonical quadruplet.
pub fn upper_bound_formula(n: usize, m: usize) -> ExactValue {
    let base = ExactValue::rational(2 * n as i64 + 5 * m as i64, 6);
    match residue(n, m) {
        0 => base,
        1 => base + ExactValue::sqrt2(3, 2) - ExactValue::rational(13, 6),
        _ => base + ExactValue::sqrt3(7, 4) - ExactValue::rational(37, 12),
    }
}

/// `UB(n,m)`, which equals `f` at the canonical quadruplet.
pub fn upper_bound(n: usize, m: usize) -> Result<ExactValue, BoundsError> {
    if canonical_quadruplet(n, m).is_none() {
        return Err(BoundsError::InfeasiblePair { n, m });
    }
    Ok(upper_bound_formula(n, m))
}

pub fn is_connected_range(n: usize, m: usize) -> bool {
    n >= 1 && m + 1 >= n && m <= (2 * n).min(n * (n - 1) / 2)
}

/// Pairs whose maximum AG value lies strictly below `UB(n,m)`, each attained
/// by a single graph.
pub const EXCEPTIONAL_PAIRS: [(usize, usize); 22] = [
    (1, 0),
    (2, 1),
    (3, 2),
    (3, 3),
    (4, 3),
    (4, 4),
    (4, 5),
    (4, 6),
    (5, 5),
    (5, 6),
    (5, 7),
    (5, 8),
    (5, 9),
    (6, 5),
    (6, 6),
    (6, 7),
    (6, 8),
    (6, 9),
    (7, 6),
    (7, 8),
    (8, 8),
    (10, 9),
];

type Coeffs = [(i64, i64); 4];

const EXCEPTIONAL_VALUES: [Coeffs; 22] = [
    [(0, 1), (0, 1), (0, 1), (0, 1)],
    [(1, 1), (0, 1), (0, 1), (0, 1)],
    [(0, 1), (3, 2), (0, 1), (0, 1)],
    [(3, 1), (0, 1), (0, 1), (0, 1)],
    [(0, 1), (0, 1), (2, 1), (0, 1)],
    [(1, 1), (0, 1), (2, 3), (5, 6)],
    [(1, 1), (0, 1), (0, 1), (5, 3)],
    [(6, 1), (0, 1), (0, 1), (0, 1)],
    [(7, 2), (3, 2), (0, 1), (0, 1)],
    [(5, 4), (3, 2), (7, 12), (5, 6)],
    [(1, 1), (9, 2), (0, 1), (0, 1)],
    [(2, 1), (3, 2), (7, 3), (0, 1)],
    [(3, 1), (0, 1), (7, 2), (0, 1)],
    [(15, 4), (3, 2), (0, 1), (0, 1)],
    [(5, 2), (3, 4), (5, 4), (5, 12)],
    [(7, 2), (3, 1), (0, 1), (0, 1)],
    [(9, 2), (0, 1), (7, 3), (0, 1)],
    [(17, 4), (3, 2), (7, 4), (0, 1)],
    [(15, 4), (0, 1), (23, 12), (0, 1)],
    [(5, 2), (9, 2), (0, 1), (0, 1)],
    [(5, 1), (3, 1), (0, 1), (0, 1)],
    [(15, 2), (0, 1), (11, 6), (0, 1)],
];

pub fn is_exceptional(n: usize, m: usize) -> bool {
    EXCEPTIONAL_PAIRS.contains(&(n, m))
}

/// Maximum AG value at an exceptional pair, in closed form.
pub fn exceptional_value(n: usize, m: usize) -> Option<ExactValue> {
    let k = EXCEPTIONAL_PAIRS.iter().position(|&p| p == (n, m))?;
    let [a, b, c, d] = EXCEPTIONAL_VALUES[k];
    Some(ExactValue::from_ratios(a, b, c, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub ub: ExactValue,
    pub residue: u8,
    pub exceptional: bool,
    /// The attained maximum: `ub`, or the closed form at an exceptional pair.
    pub sharp: ExactValue,
}

impl BoundReport {
    pub fn gap(&self) -> ExactValue {
        &self.ub - &self.sharp
    }
}

/// The attained maximum AG value over chemical graphs of order `n` and size
/// `m`, for `m` in the connected range.
pub fn sharp_bound(n: usize, m: usize) -> Result<BoundReport, BoundsError> {
    if !is_connected_range(n, m) {
        return Err(BoundsError::SizeOutOfRange { n, m });
    }
    let ub = upper_bound_formula(n, m);
    let exceptional = exceptional_value(n, m);
    Ok(BoundReport {
        n,
        m,
        residue: residue(n, m),
        exceptional: exceptional.is_some(),
        sharp: exceptional.unwrap_or_else(|| ub.clone()),
        ub,
    })
}

/// `f` at the canonical quadruplet; agrees with [`upper_bound`].
pub fn bound_via_census(n: usize, m: usize) -> Option<ExactValue> {
    canonical_quadruplet(n, m).map(|q| f_value(&q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn quadruplet_examples() {
        assert_eq!(
            canonical_quadruplet(17, 17),
            Some(Quadruplet::new(11, 0, 1, 5))
        );
        assert_eq!(canonical_quadruplet(1, 0), None);
        assert_eq!(
            canonical_quadruplet(5, 4),
            Some(Quadruplet::new(4, 0, 0, 1))
        );
        assert_eq!(
            canonical_quadruplet(12, 11),
            Some(Quadruplet::new(8, 1, 0, 3))
        );
        assert_eq!(canonical_quadruplet(0, 0), None);
        // 2m > 4n leaves t1 negative
        assert_eq!(canonical_quadruplet(3, 7), None);
    }

    #[test]
    fn at_most_one_small_quadruplet() {
        for n in 1..=30usize {
            for m in 0..=2 * n + 2 {
                let mut found = Vec::new();
                for t4 in 0..=n {
                    for t3 in 0..=n - t4 {
                        for t2 in 0..=n - t4 - t3 {
                            let q = Quadruplet::new(n - t4 - t3 - t2, t2, t3, t4);
                            if q.degree_sum() == 2 * m && t2 + t3 <= 1 {
                                found.push(q);
                            }
                        }
                    }
                }
                assert!(found.len() <= 1, "({n},{m}): {found:?}");
                assert_eq!(
                    found.first().copied(),
                    canonical_quadruplet(n, m),
                    "({n},{m})"
                );
            }
        }
    }

    #[test]
    fn formula_agrees_with_census_functional() {
        for n in 1..=60usize {
            for m in 0..=2 * n {
                match bound_via_census(n, m) {
                    Some(v) => assert_eq!(upper_bound(n, m).unwrap(), v, "({n},{m})"),
                    None => {
                        assert_eq!(upper_bound(n, m), Err(BoundsError::InfeasiblePair { n, m }))
                    }
                }
            }
        }
    }

    #[test]
    fn bound_examples() {
        assert_eq!(upper_bound(2, 1).unwrap(), ExactValue::rational(3, 2));
        assert_eq!(upper_bound(5, 4).unwrap(), ExactValue::integer(5));
        let ub67 = upper_bound(6, 7).unwrap();
        assert!((ub67.to_f64() - 7.7811).abs() < 5e-5);
        assert_eq!(
            ub67,
            ExactValue::rational(47, 6) + ExactValue::sqrt3(7, 4) - ExactValue::rational(37, 12)
        );
        assert!((upper_bound(17, 17).unwrap().to_f64() - 19.7811).abs() < 5e-5);
        assert_eq!(
            upper_bound(17, 17).unwrap(),
            ExactValue::rational(201, 12) + ExactValue::sqrt3(7, 4)
        );
    }

    #[test]
    fn sharp_examples() {
        let r = sharp_bound(10, 9).unwrap();
        assert!(r.exceptional);
        assert_eq!(
            r.sharp,
            ExactValue::rational(15, 2) + ExactValue::sqrt3(11, 6)
        );
        assert!((r.sharp.to_f64() - 10.6754).abs() < 5e-5);

        let r = sharp_bound(12, 11).unwrap();
        assert!(!r.exceptional);
        assert_eq!(r.residue, 1);
        assert_eq!(r.sharp, ExactValue::integer(11) + ExactValue::sqrt2(3, 2));

        let r = sharp_bound(4, 5).unwrap();
        assert!(r.exceptional);
        assert!((r.sharp.to_f64() - 5.0825).abs() < 5e-5);

        assert_eq!(
            sharp_bound(5, 3),
            Err(BoundsError::SizeOutOfRange { n: 5, m: 3 })
        );
        assert_eq!(
            sharp_bound(4, 7),
            Err(BoundsError::SizeOutOfRange { n: 4, m: 7 })
        );
    }

    #[test]
    fn exceptional_gaps_are_positive_and_bounded() {
        let mut gaps = Vec::new();
        for &(n, m) in &EXCEPTIONAL_PAIRS {
            let r = sharp_bound(n, m).unwrap();
            assert_eq!(r.gap().signum(), Ordering::Greater, "({n},{m})");
            assert!(r.gap() <= ExactValue::rational(1, 2));
            gaps.push(r.gap());
        }
        assert_eq!(gaps.iter().max().unwrap(), &ExactValue::rational(1, 2));
        let min = gaps.iter().min().unwrap();
        assert_eq!(
            min,
            &(ExactValue::rational(5, 4) - ExactValue::sqrt2(3, 1) + ExactValue::sqrt3(7, 4))
        );
    }

    #[test]
    fn report_json() {
        let r = sharp_bound(17, 17).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["residue"], 2);
        assert_eq!(json["exceptional"], false);
        assert!((json["ub"]["float"].as_f64().unwrap() - 19.7811).abs() < 5e-5);
        let back: BoundReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
