use std::fmt;

use serde::{Deserialize, Serialize};

/// A point of `N^k`.
///
/// The same value is used as a factorization of a semigroup element and as
/// the coordinate of a unit cube in a diagram. Ordering is lexicographic;
/// [`LatticePoint::le`] gives the componentwise partial order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<u32>);

impl LatticePoint {
    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// `Σ x_i · g_i`.
    pub fn dot(&self, weights: &[u64]) -> u64 {
        debug_assert_eq!(self.0.len(), weights.len());
        self.0
            .iter()
            .zip(weights)
            .map(|(&x, &w)| u64::from(x).checked_mul(w).expect("weight overflow"))
            .fold(0u64, |acc, v| acc.checked_add(v).expect("weight overflow"))
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &LatticePoint) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self < other` (≤ and different).
    pub fn lt(&self, other: &LatticePoint) -> bool {
        self != other && self.le(other)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self − other`, or `None` if some coordinate would go negative.
    pub fn checked_sub(&self, other: &LatticePoint) -> Option<LatticePoint> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(LatticePoint)
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// The point with coordinate `axis` incremented.
    pub fn step_up(&self, axis: usize) -> LatticePoint {
        let mut c = self.0.clone();
        c[axis] += 1;
        LatticePoint(c)
    }

    /// The point with coordinate `axis` decremented, if it is positive.
    pub fn step_down(&self, axis: usize) -> Option<LatticePoint> {
        let mut c = self.0.clone();
        c[axis] = c[axis].checked_sub(1)?;
        Some(LatticePoint(c))
    }

    /// Drops coordinate `axis`.
    pub fn project_out(&self, axis: usize) -> LatticePoint {
        let mut c = self.0.clone();
        c.remove(axis);
        LatticePoint(c)
    }
}

impl From<Vec<u32>> for LatticePoint {
    fn from(v: Vec<u32>) -> Self {
        LatticePoint(v)
    }
}

impl<const K: usize> From<[u32; K]> for LatticePoint {
    fn from(v: [u32; K]) -> Self {
        LatticePoint(v.to_vec())
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
