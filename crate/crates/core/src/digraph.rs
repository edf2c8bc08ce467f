//! Weighted Cayley digraphs `C(N; s_1..s_k; p_1..p_k)` on `Z_N`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::paths::{gcd, residue_distances};
use crate::semigroup::NumericalSemigroup;

/// Vertices are the residues `0..N`; every vertex `v` has an arc
/// `v → v + s_i` of weight `p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedCayleyDigraph {
    modulus: u64,
    steps: Vec<u64>,
    weights: Vec<u64>,
}

impl WeightedCayleyDigraph {
    /// Steps are reduced mod `N`. For `N = 1` the digraph is a single vertex
    /// and the step values are irrelevant.
    pub fn new(modulus: u64, steps: &[u64], weights: &[u64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidDigraph("modulus must be positive".into()));
        }
        if steps.is_empty() {
            return Err(Error::InvalidDigraph("at least one step is required".into()));
        }
        if steps.len() != weights.len() {
            return Err(Error::InvalidDigraph(format!(
                "{} steps but {} weights",
                steps.len(),
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidDigraph("weights must be positive".into()));
        }
        let reduced: Vec<u64> = steps.iter().map(|s| s % modulus).collect();
        if modulus > 1 {
            if reduced.contains(&0) {
                return Err(Error::InvalidDigraph("steps must be nonzero mod N".into()));
            }
            let distinct: HashSet<_> = reduced.iter().collect();
            if distinct.len() != reduced.len() {
                return Err(Error::InvalidDigraph("steps must be distinct mod N".into()));
            }
            if reduced.iter().fold(modulus, |g, &s| gcd(g, s)) != 1 {
                return Err(Error::InvalidDigraph(format!(
                    "gcd(N, steps) != 1 for N={modulus}, steps={reduced:?}"
                )));
            }
        }
        Ok(Self { modulus, steps: reduced, weights: weights.to_vec() })
    }

    /// Unit weights.
    pub fn unweighted(modulus: u64, steps: &[u64]) -> Result<Self> {
        Self::new(modulus, steps, &vec![1; steps.len()])
    }

    /// `G_S = C(m; other generators; other generators)` for a minimal
    /// generator `m` of `S`.
    pub fn of_semigroup(semigroup: &NumericalSemigroup, m: u64) -> Result<Self> {
        semigroup.generator_index(m).ok_or(Error::NotAGenerator { value: m })?;
        let others: Vec<u64> = semigroup.generators().iter().copied().filter(|&g| g != m).collect();
        if others.is_empty() {
            // S = N with m = 1: a single vertex digraph with a dummy loop.
            return Self::new(1, &[1], &[1]);
        }
        Self::new(m, &others, &others)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> usize {
        self.steps.len()
    }

    /// Vertex label `Σ x_i·s_i mod N` of a cube.
    pub fn class_of(&self, x: &LatticePoint) -> u64 {
        x.coords()
            .iter()
            .zip(&self.steps)
            .fold(0u64, |acc, (&c, &s)| (acc + (u64::from(c) % self.modulus) * s) % self.modulus)
    }

    /// `‖x‖ = Σ x_i·p_i`.
    pub fn weight_of(&self, x: &LatticePoint) -> u64 {
        x.dot(&self.weights)
    }

    /// `d(0, v)` for every vertex `v`.
    pub fn distances_from_origin(&self) -> Vec<u64> {
        residue_distances(self.modulus, &self.steps, &self.weights)
    }

    /// `d(u, v) = d(0, v − u)` by translation invariance.
    pub fn distance(&self, u: u64, v: u64) -> u64 {
        let n = self.modulus;
        let diff = ((v % n) + n - (u % n)) % n;
        self.distances_from_origin()[diff as usize]
    }

    pub fn diameter(&self) -> u64 {
        self.distances_from_origin().into_iter().max().unwrap_or(0)
    }

    /// Minimum weight per class and every lattice point achieving it.
    ///
    /// Points below a minimum-weight point are themselves of minimum weight
    /// in their class, so the candidates form an order ideal of `N^k` and are
    /// reached by growing from the origin one unit step at a time.
    pub fn min_weight_table(&self) -> MinWeightTable {
        let dist = self.distances_from_origin();
        let n = self.modulus as usize;
        let k = self.degree();
        let mut candidates: Vec<Vec<LatticePoint>> = vec![Vec::new(); n];
        let origin = LatticePoint::origin(k);
        let mut seen: HashSet<LatticePoint> = HashSet::from([origin.clone()]);
        let mut frontier = vec![(origin, 0u64, 0u64)];
        while let Some((x, class, weight)) = frontier.pop() {
            for axis in 0..k {
                let c = ((class + self.steps[axis]) % self.modulus) as usize;
                let w = weight + self.weights[axis];
                if w != dist[c] {
                    continue;
                }
                let y = x.step_up(axis);
                if seen.insert(y.clone()) {
                    frontier.push((y, c as u64, w));
                }
            }
        }
        for x in seen {
            let c = self.class_of(&x) as usize;
            candidates[c].push(x);
        }
        for list in &mut candidates {
            list.sort();
        }
        MinWeightTable { weights: dist, candidates }
    }
}

/// Per residue class: the minimum weight and all points attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeightTable {
    weights: Vec<u64>,
    candidates: Vec<Vec<LatticePoint>>,
}

impl MinWeightTable {
    pub fn weight(&self, class: u64) -> u64 {
        self.weights[class as usize]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn candidates(&self, class: u64) -> &[LatticePoint] {
        &self.candidates[class as usize]
    }

    pub fn all_candidates(&self) -> &[Vec<LatticePoint>] {
        &self.candidates
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}
