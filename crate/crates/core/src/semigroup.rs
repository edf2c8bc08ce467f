//! Numerical semigroup arithmetic: membership, Apéry sets, Frobenius and
//! pseudo-Frobenius numbers, and closed subsets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::{gcd, residue_distances};

/// A numerical semigroup given by its minimal system of generators.
///
/// Construction rejects non-coprime and non-minimal generator lists. The
/// Apéry set of the multiplicity is computed once and backs membership tests.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    multiplicity_apery: Vec<u64>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl NumericalSemigroup {
    /// Builds the semigroup from a minimal generating system. The input may
    /// be given in any order; duplicates are an error.
    pub fn new(generators: &[u64]) -> Result<Self> {
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        if gens[0] == 0 {
            return Err(Error::InvalidGenerators("generators must be positive".into()));
        }
        if gens.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGenerators(format!("duplicate generator in {gens:?}")));
        }
        if gens.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
            return Err(Error::InvalidGenerators(format!("gcd of {gens:?} is not 1")));
        }
        for (i, &g) in gens.iter().enumerate() {
            let others: Vec<u64> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            if spanned_by(&others, g) {
                return Err(Error::InvalidGenerators(format!(
                    "{g} is a combination of the other generators"
                )));
            }
        }
        let m = gens[0];
        let multiplicity_apery = residue_distances(m, &gens[1..], &gens[1..]);
        Ok(Self { generators: gens, multiplicity_apery })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Position of `g` among the minimal generators.
    pub fn generator_index(&self, g: u64) -> Option<usize> {
        self.generators.iter().position(|&x| x == g)
    }

    /// Membership: `x ∈ S` iff `x ≥ w_{x mod m}` in the Apéry set of the
    /// multiplicity.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        let m = self.multiplicity();
        x >= self.multiplicity_apery[(x % m) as usize]
    }

    pub fn contains_u(&self, x: u64) -> bool {
        x >= self.multiplicity_apery[(x % self.multiplicity()) as usize]
    }

    /// `Ap(S, m)`, computed as shortest-path weights on `Z_m`.
    pub fn apery(&self, m: u64) -> Result<AperySet> {
        if m == 0 || !self.contains_u(m) {
            return Err(Error::InvalidModulus(m));
        }
        if m == self.multiplicity() {
            return Ok(AperySet { modulus: m, table: self.multiplicity_apery.clone() });
        }
        let table = residue_distances(m, &self.generators, &self.generators);
        Ok(AperySet { modulus: m, table })
    }

    /// Largest integer outside the semigroup; `-1` when the semigroup is `N`.
    pub fn frobenius(&self) -> i64 {
        let max = *self.multiplicity_apery.iter().max().expect("nonempty table");
        max as i64 - self.multiplicity() as i64
    }

    /// Gaps `z` with `z + g ∈ S` for every generator `g` (equivalently for
    /// every nonzero element).
    pub fn pseudo_frobenius(&self) -> BTreeSet<i64> {
        let f = self.frobenius();
        (0..=f)
            .filter(|&z| {
                !self.contains(z)
                    && self.generators.iter().all(|&g| self.contains(z + g as i64))
            })
            .collect()
    }

    /// All gaps in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        let f = self.frobenius();
        (0..=f).filter(|&z| !self.contains(z)).map(|z| z as u64).collect()
    }

    /// Whether `set` is closed under `≤_S`. Every element must lie in `S`.
    ///
    /// Closure under subtracting single generators implies closure under
    /// `≤_S`, since `a − b ∈ S` is a sum of generators and each partial sum
    /// stays in `S`.
    pub fn is_closed(&self, set: &BTreeSet<u64>) -> Result<bool> {
        if let Some(&bad) = set.iter().find(|&&a| !self.contains_u(a)) {
            return Err(Error::NotInSemigroup(bad as i64));
        }
        Ok(set.iter().all(|&a| {
            self.generators
                .iter()
                .filter(|&&g| g <= a && self.contains_u(a - g))
                .all(|&g| set.contains(&(a - g)))
        }))
    }
}

/// Whether `target` is a nonnegative combination of `gens`.
fn spanned_by(gens: &[u64], target: u64) -> bool {
    if target == 0 {
        return true;
    }
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for v in 1..=t {
        reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[t]
}

/// The Apéry set `Ap(S, m)` stored as one minimum per residue class mod `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperySet {
    modulus: u64,
    table: Vec<u64>,
}

impl AperySet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `w_i` indexed by residue.
    pub fn table(&self) -> &[u64] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn max(&self) -> u64 {
        *self.table.iter().max().expect("nonempty Apéry set")
    }

    pub fn contains(&self, s: u64) -> bool {
        self.table[(s % self.modulus) as usize] == s
    }

    /// Elements in increasing order.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.table.clone();
        v.sort_unstable();
        v
    }

    pub fn to_set(&self) -> BTreeSet<u64> {
        self.table.iter().copied().collect()
    }
}

/// A finite subset of a semigroup that is closed under `≤_S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSet {
    elements: BTreeSet<u64>,
}

impl ClosedSet {
    pub fn new(semigroup: &NumericalSemigroup, elements: BTreeSet<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::NotClosed("closed sets must be nonempty".into()));
        }
        if !semigroup.is_closed(&elements)? {
            return Err(Error::NotClosed(format!("{elements:?}")));
        }
        Ok(Self { elements })
    }

    pub fn from_apery(ap: &AperySet) -> Self {
        Self { elements: ap.to_set() }
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: u64) -> bool {
        self.elements.contains(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn membership() {
        let s = sg(&[5, 13, 14]);
        assert!(s.contains(0));
        assert!(!s.contains(22));
        assert!(s.contains(27));
        assert!(!s.contains(-5));
    }

    #[test]
    fn apery_sets() {
        let s = sg(&[5, 13, 14]);
        assert_eq!(s.apery(5).unwrap().table(), &[0, 26, 27, 13, 14]);
        assert_eq!(sg(&[2, 3]).apery(2).unwrap().sorted(), vec![0, 3]);
        let s4 = sg(&[5, 13, 14, 22]);
        let ap = s4.apery(22).unwrap();
        assert_eq!(ap.len(), 22);
        assert_eq!(ap.max(), 43);
    }

    #[test]
    fn apery_rejects_bad_modulus() {
        let s = sg(&[5, 13, 14]);
        assert_eq!(s.apery(0), Err(Error::InvalidModulus(0)));
        assert_eq!(s.apery(22), Err(Error::InvalidModulus(22)));
    }

    #[test]
    fn frobenius_numbers() {
        assert_eq!(sg(&[5, 13, 14]).frobenius(), 22);
        assert_eq!(sg(&[2, 3]).frobenius(), 1);
        assert_eq!(sg(&[17, 49, 50]).frobenius(), 376);
        assert_eq!(sg(&[1]).frobenius(), -1);
    }

    #[test]
    fn pseudo_frobenius_numbers() {
        assert_eq!(sg(&[5, 13, 14]).pseudo_frobenius(), BTreeSet::from([21, 22]));
        assert_eq!(sg(&[2, 3]).pseudo_frobenius(), BTreeSet::from([1]));
        assert_eq!(sg(&[5, 13, 14, 22]).pseudo_frobenius(), BTreeSet::from([9, 17, 21]));
        assert!(sg(&[1]).pseudo_frobenius().is_empty());
    }

    #[test]
    fn closed_sets() {
        let s4 = sg(&[5, 13, 14, 22]);
        assert!(s4.is_closed(&s4.apery(22).unwrap().to_set()).unwrap());
        assert!(sg(&[2, 3]).is_closed(&BTreeSet::from([0])).unwrap());
        let t = sg(&[5, 13, 14]);
        assert!(!t.is_closed(&BTreeSet::from([0, 13, 27])).unwrap());
        assert_eq!(t.is_closed(&BTreeSet::from([0, 22])), Err(Error::NotInSemigroup(22)));
        assert!(ClosedSet::new(&t, BTreeSet::from([0, 13, 27])).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(NumericalSemigroup::new(&[4, 6]).is_err());
        assert!(NumericalSemigroup::new(&[3, 5, 8]).is_err());
        assert!(NumericalSemigroup::new(&[3, 3, 5]).is_err());
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert_eq!(sg(&[14, 5, 13]).generators(), &[5, 13, 14]);
    }
}
