//! The range of values the degree-weighted valence formula can take.
//!
//! For a bijection `g: V -> {1..p}` the quantity
//! `(sum of deg(u) g(u) + (p+1) + ... + (p+q)) / q` is the valence any super
//! edge-magic labeling with vertex part `g` must have. Its extremes over all
//! bijections bound every achievable valence.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::SolverError;
use crate::graph::{DegreeSequence, Graph};
use crate::labeling::edge_label_total;

/// Min and max of `sum deg(u) g(u)` over all bijections `g` onto `1..=p`.
///
/// The minimum pairs the largest degree with the smallest label, the maximum
/// pairs largest with largest.
pub fn rearrangement_extremes(degrees: &DegreeSequence) -> (i64, i64) {
    let desc = degrees.as_slice();
    let p = desc.len() as i64;
    let min = desc
        .iter()
        .zip(1..=p)
        .map(|(&d, l)| d as i64 * l)
        .sum();
    let max = desc
        .iter()
        .zip((1..=p).rev())
        .map(|(&d, l)| d as i64 * l)
        .sum();
    (min, max)
}

/// The integers between the smallest and largest achievable values of the
/// valence formula. Empty when no integer lies between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValenceInterval {
    pub lo: i64,
    pub hi: i64,
    pub min_value: Ratio<i64>,
    pub max_value: Ratio<i64>,
}

impl ValenceInterval {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k <= self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }
}

/// Serialized as `[lo, hi]`; `lo > hi` marks the empty interval.
impl Serialize for ValenceInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

pub fn sem_interval(g: &Graph) -> Result<ValenceInterval, SolverError> {
    let q = g.size() as i64;
    if q == 0 {
        return Err(SolverError::Edgeless);
    }
    let constant = edge_label_total(g.order(), g.size());
    let (min, max) = rearrangement_extremes(&g.degree_sequence());
    let min_value = Ratio::new(min + constant, q);
    let max_value = Ratio::new(max + constant, q);
    Ok(ValenceInterval {
        lo: Integer::div_ceil(&(min + constant), &q),
        hi: Integer::div_floor(&(max + constant), &q),
        min_value,
        max_value,
    })
}
