//! The semigroups `S_n = ⟨n, 3n−2, 3n−1, F(T_n)⟩` with `T_n = ⟨n, 3n−2, 3n−1⟩`
//! for odd `n ≥ 5`, and the Sabariego–Santos digraphs `G_t`.
//!
//! Every closed form here is checked against the generic computations in
//! [`crate::semigroup`] and [`crate::factorization`]; a disagreement is
//! reported as [`Error::FormulaMismatch`].
//!
//! Apéry elements of `F(T)` never use the fourth generator, so factorizations
//! and normal forms are triples over `(n, 3n−2, 3n−1)`.

mod construct;
mod sabariego;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::digraph::WeightedCayleyDigraph;
use crate::error::{Error, Result};
use crate::factorization::factorizations_over;
use crate::lattice::LatticePoint;
use crate::semigroup::{AperySet, ClosedSet, NumericalSemigroup};

pub use construct::{ConstructedLShape, FamilyCase};
pub use sabariego::{sabariego_santos, TableOneRow, TABLE_ONE};

/// The unique factorization `(x, y, z)` of an Apéry element with `z < 2`,
/// `y < (n+1)/2` and `x < (3n−1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalForm {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl NormalForm {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Self { x, y, z }
    }

    pub fn point(&self) -> LatticePoint {
        LatticePoint(vec![self.x, self.y, self.z])
    }

    pub fn le(&self, other: &NormalForm) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    pub fn lt(&self, other: &NormalForm) -> bool {
        self != other && self.le(other)
    }

    fn from_point(p: &LatticePoint) -> Self {
        let c = p.coords();
        Self::new(c[0], c[1], c[2])
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// One member of the family, with `Ap(S, F(T))` precomputed.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    n: u64,
    t: NumericalSemigroup,
    frob_t: u64,
    s: NumericalSemigroup,
    apery: AperySet,
}

fn mismatch(what: impl Into<String>) -> Error {
    Error::FormulaMismatch(what.into())
}

impl FamilyInstance {
    /// Builds the instance for odd `n ≥ 5` and cross-checks `F(T)`, `PF(T)`,
    /// `F(S)` and `max Ap(S, F(T))` against brute force.
    pub fn build(n: u64) -> Result<Self> {
        if n < 5 || n.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("family parameter must be odd and at least 5, got {n}")));
        }
        let frob_t = (3 * n - 7)
            .checked_mul(n)
            .map(|v| v / 2 + 2)
            .ok_or(Error::Overflow("F(T)"))?;
        let t = NumericalSemigroup::new(&[n, 3 * n - 2, 3 * n - 1])?;
        if t.frobenius() != frob_t as i64 {
            return Err(mismatch(format!("F(T) = {} but formula gives {frob_t}", t.frobenius())));
        }
        let pf_t = t.pseudo_frobenius();
        let expected_pf_t = BTreeSet::from([frob_t as i64 - 1, frob_t as i64]);
        if pf_t != expected_pf_t {
            return Err(mismatch(format!("PF(T) = {pf_t:?}, expected {expected_pf_t:?}")));
        }
        let s = NumericalSemigroup::new(&[n, 3 * n - 2, 3 * n - 1, frob_t])?;
        if s.frobenius() != frob_t as i64 - 1 {
            return Err(mismatch(format!("F(S) = {}, expected F(T) - 1", s.frobenius())));
        }
        let apery = s.apery(frob_t)?;
        let expected_max = n * (3 * n - 7) + 3;
        if apery.max() != expected_max || apery.max() != 2 * frob_t - 1 {
            return Err(mismatch(format!("max Ap(S,F(T)) = {}, expected {expected_max}", apery.max())));
        }
        Ok(Self { n, t, frob_t, s, apery })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `T = ⟨n, 3n−2, 3n−1⟩`.
    pub fn t(&self) -> &NumericalSemigroup {
        &self.t
    }

    /// `S = ⟨n, 3n−2, 3n−1, F(T)⟩`.
    pub fn s(&self) -> &NumericalSemigroup {
        &self.s
    }

    pub fn frobenius_t(&self) -> u64 {
        self.frob_t
    }

    pub fn apery(&self) -> &AperySet {
        &self.apery
    }

    pub fn closed_set(&self) -> ClosedSet {
        ClosedSet::from_apery(&self.apery)
    }

    /// `(n−1)/2`, the largest index with a nonempty `M_i`.
    pub fn half(&self) -> u32 {
        ((self.n - 1) / 2) as u32
    }

    fn tgens(&self) -> [u64; 3] {
        [self.n, 3 * self.n - 2, 3 * self.n - 1]
    }

    /// Factorizations in `T` of `s`.
    pub fn factorizations_t(&self, s: u64) -> Vec<LatticePoint> {
        factorizations_over(&self.tgens(), s)
    }

    /// Value of a triple under `(n, 3n−2, 3n−1)`.
    pub fn value(&self, nf: &NormalForm) -> u64 {
        nf.point().dot(&self.tgens())
    }

    pub fn normal_form(&self, s: u64) -> Result<NormalForm> {
        if !self.apery.contains(s) {
            return Err(Error::InvalidParameter(format!("{s} is not in Ap(S, {})", self.frob_t)));
        }
        let n = self.n as u32;
        let mut found = self
            .factorizations_t(s)
            .into_iter()
            .map(|p| NormalForm::from_point(&p))
            .filter(|f| f.z < 2 && 2 * f.y < n + 1 && 2 * f.x < 3 * n - 1);
        match (found.next(), found.next()) {
            (Some(nf), None) => Ok(nf),
            (None, _) => Err(mismatch(format!("no normal form for {s}"))),
            (Some(_), Some(_)) => Err(mismatch(format!("normal form of {s} is not unique"))),
        }
    }

    /// `(s, nf(s))` for every Apéry element, in increasing order of `s`.
    pub fn normal_forms(&self) -> Result<Vec<(u64, NormalForm)>> {
        self.apery.sorted().into_iter().map(|s| Ok((s, self.normal_form(s)?))).collect()
    }

    /// The region `F = F_1 ∪ F_2 ∪ F_3 ∪ F_4` listed box by box.
    pub fn f_region(&self) -> BTreeSet<NormalForm> {
        let n = self.n as i64;
        let mut region = BTreeSet::new();
        let mut boxed = |xmax: i64, ys: std::ops::RangeInclusive<i64>, z: u32| {
            for y in ys {
                for x in 0..=xmax {
                    region.insert(NormalForm::new(x as u32, y as u32, z));
                }
            }
        };
        boxed((3 * n - 3) / 2, 0..=(n - 3) / 2, 0);
        boxed(1, (n - 1) / 2..=(n - 1) / 2, 0);
        boxed((3 * n - 3) / 2, 0..=(n - 7) / 2, 1);
        boxed((3 * n - 5) / 2, (n - 5) / 2..=(n - 5) / 2, 1);
        region
    }

    /// Checks that `nf` maps `Ap(S, F(T))` onto `F` and `|F| = F(T)`.
    pub fn verify_f_region(&self) -> Result<BTreeSet<NormalForm>> {
        let region = self.f_region();
        let image: BTreeSet<NormalForm> = self.normal_forms()?.into_iter().map(|(_, nf)| nf).collect();
        if image.len() != self.apery.len() {
            return Err(mismatch("nf is not injective"));
        }
        if image != region {
            return Err(mismatch("nf(Ap(S,F(T))) differs from F"));
        }
        if region.len() as u64 != self.frob_t {
            return Err(mismatch(format!("|F| = {}, expected {}", region.len(), self.frob_t)));
        }
        Ok(region)
    }

    /// The four Apéry elements used to generate `F` by closure.
    pub fn endings(&self) -> [i64; 4] {
        let n = self.n as i64;
        let (a, b, c) = (n, 3 * n - 2, 3 * n - 1);
        [
            (3 * n - 3) / 2 * a + (n - 3) / 2 * b,
            a + (n - 1) / 2 * b,
            (3 * n - 5) / 2 * a + (n - 5) / 2 * b + c,
            (3 * n - 3) / 2 * a + (n - 7).div_euclid(2) * b + c,
        ]
    }

    /// The number of factorizations predicted from the normal form alone:
    /// the single-factorization conditions for `i = 1`, and the five
    /// conditions for `i ≥ 2` intersected with `F`.
    pub fn predicted_count(&self, nf: &NormalForm) -> Option<u32> {
        let n = self.n as i64;
        let (x, y, z) = (nf.x as i64, nf.y as i64, nf.z as i64);
        let unique = (y == 0 && z == 0 && x <= (3 * n - 3) / 2)
            || (y == 0 && z == 1 && x <= (3 * n - 7) / 2)
            || (x == 2 && z == 0 && (1..=(n - 3) / 2).contains(&y))
            || (x <= 1 && z == 0 && (1..=(n - 1) / 2).contains(&y))
            || (x <= 2 && z == 1 && (1..=(n - 5) / 2).contains(&y));
        if unique {
            return Some(1);
        }
        (2..=(n - 1) / 2).find_map(|i| {
            let hit = (y == i - 2 && z == 1 && ((3 * n - 5) / 2..=(3 * n - 3) / 2).contains(&x))
                || (y == i - 1 && z == 0 && (3 * (i - 1)..=(3 * n - 3) / 2).contains(&x))
                || (y == i - 1 && z == 1 && (3 * (i - 1)..=(3 * n - 7) / 2).contains(&x))
                || ((i..=(n - 3) / 2).contains(&y) && z == 0 && (3 * (i - 1)..=3 * i - 1).contains(&x))
                || ((i..=(n - 5) / 2).contains(&y) && z == 1 && (3 * (i - 1)..=3 * i - 1).contains(&x));
            hit.then_some(i as u32)
        })
    }

    /// `M_i = {s ∈ Ap(S, F(T)) : #Z(s) = i}` by brute force, checked against
    /// [`FamilyInstance::predicted_count`].
    pub fn classify_mi(&self) -> Result<BTreeMap<u32, BTreeSet<u64>>> {
        let mut classes: BTreeMap<u32, BTreeSet<u64>> = BTreeMap::new();
        for (s, nf) in self.normal_forms()? {
            let count = self.factorizations_t(s).len() as u32;
            let predicted = self.predicted_count(&nf);
            if predicted != Some(count) {
                return Err(mismatch(format!(
                    "{s} with nf {nf} has {count} factorizations, predicted {predicted:?}"
                )));
            }
            classes.entry(count).or_default().insert(s);
        }
        Ok(classes)
    }

    /// `6n − 12i − 1` for `1 ≤ i ≤ (n−1)/2` (which gives `6n − 13` at
    /// `i = 1`), zero beyond.
    pub fn mi_size_formula(&self, i: u32) -> u64 {
        if i == 0 || i > self.half() {
            0
        } else {
            6 * self.n - 12 * u64::from(i) - 1
        }
    }

    fn check_index(&self, i: u32) -> Result<()> {
        if !(2..=self.half()).contains(&i) {
            return Err(Error::InvalidParameter(format!(
                "index {i} outside 2..={} for n = {}",
                self.half(),
                self.n
            )));
        }
        Ok(())
    }

    /// The two minimal normal forms of `M_i`, `((3n−5)/2, i−2, 1)` and
    /// `(3(i−1), i−1, 0)`, checked against the minimal elements of
    /// `nf(M_i)` found by brute force.
    pub fn minimal_nf(&self, i: u32) -> Result<[NormalForm; 2]> {
        self.check_index(i)?;
        let formula = self.minimal_nf_formula(i);
        let forms: Vec<NormalForm> = self
            .normal_forms()?
            .into_iter()
            .filter(|&(s, _)| self.factorizations_t(s).len() as u32 == i)
            .map(|(_, nf)| nf)
            .collect();
        let minimals: BTreeSet<NormalForm> =
            forms.iter().filter(|a| !forms.iter().any(|b| b.lt(a))).copied().collect();
        if minimals != BTreeSet::from(formula) {
            return Err(mismatch(format!("minimal normal forms of M_{i} are {minimals:?}")));
        }
        Ok(formula)
    }

    fn minimal_nf_formula(&self, i: u32) -> [NormalForm; 2] {
        let n = self.n as u32;
        [NormalForm::new((3 * n - 5) / 2, i - 2, 1), NormalForm::new(3 * (i - 1), i - 1, 0)]
    }

    /// `(s_i, s'_i)`: the elements whose normal forms are minimal in `M_i`.
    pub fn minimal_elements(&self, i: u32) -> Result<(u64, u64)> {
        self.check_index(i)?;
        let (n, i) = (self.n, u64::from(i));
        let s_i = (3 * n - 5) / 2 * n + (i - 2) * (3 * n - 2) + 3 * n - 1;
        let s_prime = 3 * (i - 1) * n + (i - 1) * (3 * n - 2);
        Ok((s_i, s_prime))
    }

    /// The three pairs of the minimal presentation of `T`.
    pub fn presentation_formula(&self) -> [(LatticePoint, LatticePoint); 3] {
        let n = self.n as u32;
        [
            ([0, 0, 2].into(), [3, 1, 0].into()),
            ([0, n.div_ceil(2), 0].into(), [(3 * n - 5) / 2, 0, 1].into()),
            ([(3 * n).div_ceil(2), 0, 0].into(), [0, (n - 1) / 2, 1].into()),
        ]
    }

    /// `{(3n²−9n+4)/2, (3n²−7n+2)/2, (3n²−13n+8)/2}`, checked against the
    /// brute-force pseudo-Frobenius numbers of `S`.
    pub fn pf_family(&self) -> Result<BTreeSet<i64>> {
        let n = self.n as i64;
        let formula =
            BTreeSet::from([(3 * n * n - 9 * n + 4) / 2, (3 * n * n - 7 * n + 2) / 2, (3 * n * n - 13 * n + 8) / 2]);
        let brute = self.s.pseudo_frobenius();
        if brute != formula {
            return Err(mismatch(format!("PF(S) = {brute:?}, formula gives {formula:?}")));
        }
        Ok(formula)
    }

    /// `C(F(T); n, 3n−2, 3n−1; n, 3n−2, 3n−1)`.
    pub fn family_digraph(&self) -> WeightedCayleyDigraph {
        WeightedCayleyDigraph::of_semigroup(&self.s, self.frob_t).expect("F(T) is a generator of S")
    }

    /// `(n+3)/2`.
    pub fn lshape_count_formula(&self) -> usize {
        ((self.n + 3) / 2) as usize
    }

    /// The choice restrictions every L-shape obeys, for `3 ≤ i ≤ (n−1)/2`:
    /// `L ∩ Z(s'_i) ⊆ {(3(i−1), i−1, 0), (0, 0, 2(i−1))}` and `L ∩ Z(s_i)`
    /// within the three admissible triples. Points are given over the four
    /// generators of `S` or the three of `T`.
    pub fn restrictions_hold(&self, points: &[LatticePoint]) -> bool {
        let n = self.n as u32;
        let triples: BTreeSet<LatticePoint> =
            points.iter().map(|p| LatticePoint(p.coords()[..3].to_vec())).collect();
        (3..=self.half()).all(|i| {
            let (s_i, s_prime) = self.minimal_elements(i).expect("index in range");
            let allowed_prime: BTreeSet<LatticePoint> =
                BTreeSet::from([[3 * (i - 1), i - 1, 0].into(), [0, 0, 2 * (i - 1)].into()]);
            let allowed_s: BTreeSet<LatticePoint> = BTreeSet::from([
                [(3 * n - 5) / 2, i - 2, 1].into(),
                [0, (n - 3) / 2 + i, 0].into(),
                [(3 * n - 5) / 2 - 3 * (i - 2), 0, 2 * (i - 2) + 1].into(),
            ]);
            let ok_prime = self
                .factorizations_t(s_prime)
                .iter()
                .filter(|f| triples.contains(*f))
                .all(|f| allowed_prime.contains(f));
            let ok_s =
                self.factorizations_t(s_i).iter().filter(|f| triples.contains(*f)).all(|f| allowed_s.contains(f));
            ok_prime && ok_s
        })
    }
}
