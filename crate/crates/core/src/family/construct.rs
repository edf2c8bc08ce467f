//! The explicit `(n+3)/2` L-shapes of `Ap(S, F(T))`.
//!
//! An L-shape is fixed by the factorizations it takes for the elements
//! `s_i` and `s'_i` (`2 ≤ i ≤ (n−1)/2`) whose normal forms are minimal in
//! `M_i`. Every other element `c ∈ M_i` (`i ≥ 2`) satisfies
//! `Z(c) = (nf(c) − nf(m)) + Z(m)` for a minimal `m` below it, so its
//! factorization is the translate of the one chosen for `m`; elements with a
//! single factorization are fixed outright. The completed point set is then
//! run through the L-shape verifier.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{mismatch, FamilyInstance, NormalForm};
use crate::diagram::{is_lshape, Diagram};
use crate::error::Result;
use crate::lattice::LatticePoint;

/// Which branch of the construction produced an L-shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum FamilyCase {
    /// `s_i ↦ (0, (n−3)/2+i, 0)` with `s'_i ↦ (0, 0, 2(i−1))`.
    TopColumnLow,
    /// `s_i ↦ (0, (n−3)/2+i, 0)` with `s'_i ↦ (3(i−1), i−1, 0)`.
    TopColumnFlat,
    /// `s_i ↦ ((3n−5)/2, i−2, 1)`: the region `F` itself.
    NormalForms,
    /// The `j`-th diagram of the chain ending at `(5, 0, n−4)`.
    Chain { j: u32 },
}

#[derive(Clone, Debug)]
pub struct ConstructedLShape {
    pub case: FamilyCase,
    pub diagram: Diagram,
}

impl FamilyInstance {
    /// Choices for `s_i` and `s'_i` in each case, keyed by element.
    pub fn choice_sequences(&self) -> Vec<(FamilyCase, BTreeMap<u64, LatticePoint>)> {
        let n = self.n as u32;
        let h = self.half();
        let column = |i: u32| LatticePoint::from([0, (n - 3) / 2 + i, 0]);
        let along_f = |i: u32| LatticePoint::from([(3 * n - 5) / 2, i - 2, 1]);
        let chain = |i: u32| LatticePoint::from([(3 * n - 5) / 2 - 3 * (i - 2), 0, 2 * (i - 2) + 1]);
        let low = |i: u32| LatticePoint::from([0, 0, 2 * (i - 1)]);
        let flat = |i: u32| LatticePoint::from([3 * (i - 1), i - 1, 0]);

        let sequence = |pick_s: &dyn Fn(u32) -> LatticePoint, pick_prime: &dyn Fn(u32) -> LatticePoint| {
            (2..=h)
                .flat_map(|i| {
                    let (s_i, s_prime) = self.minimal_elements(i).expect("index in range");
                    [(s_i, pick_s(i)), (s_prime, pick_prime(i))]
                })
                .collect::<BTreeMap<u64, LatticePoint>>()
        };

        let mut out = vec![
            (FamilyCase::TopColumnLow, sequence(&column, &low)),
            (FamilyCase::TopColumnFlat, sequence(&column, &flat)),
            (FamilyCase::NormalForms, sequence(&along_f, &flat)),
        ];
        for j in 0..=(n - 5) / 2 {
            let pick = move |i: u32| if i + j >= h { chain(i) } else { column(i) };
            out.push((FamilyCase::Chain { j }, sequence(&pick, &low)));
        }
        out
    }

    /// Completes a choice sequence to a full point set (triples, one per
    /// Apéry element).
    fn complete(&self, choices: &BTreeMap<u64, LatticePoint>) -> Result<Vec<LatticePoint>> {
        let forms: BTreeMap<u64, NormalForm> = self.normal_forms()?.into_iter().collect();
        let mut minimals: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        for i in 2..=self.half() {
            let (s_i, s_prime) = self.minimal_elements(i)?;
            minimals.insert(i, vec![s_i, s_prime]);
        }
        let mut points = Vec::with_capacity(forms.len());
        for (&c, nf) in &forms {
            let count = self.factorizations_t(c).len() as u32;
            if count == 1 {
                points.push(nf.point());
                continue;
            }
            let below = minimals.get(&count).ok_or_else(|| mismatch(format!("{c} has {count} factorizations")))?;
            let translates: BTreeSet<LatticePoint> = below
                .iter()
                .filter(|m| forms[*m].le(nf))
                .map(|m| {
                    let shift = nf.point().checked_sub(&forms[m].point()).expect("nf(m) ≤ nf(c)");
                    choices[m].add(&shift)
                })
                .collect();
            let mut it = translates.into_iter();
            match (it.next(), it.next()) {
                (Some(p), None) => points.push(p),
                (None, _) => return Err(mismatch(format!("no minimal element of M_{count} below {c}"))),
                (Some(a), Some(b)) => {
                    return Err(mismatch(format!("{c}: choices translate to both {a} and {b}")));
                }
            }
        }
        Ok(points)
    }

    /// Builds the `(n+3)/2` L-shapes and verifies each one.
    pub fn construct_lshape_family(&self) -> Result<Vec<ConstructedLShape>> {
        let closed = self.closed_set();
        let mut out = Vec::new();
        for (case, choices) in self.choice_sequences() {
            let points: Vec<LatticePoint> = self
                .complete(&choices)?
                .into_iter()
                .map(|p| {
                    let mut c = p.0;
                    c.push(0);
                    LatticePoint(c)
                })
                .collect();
            if !is_lshape(&self.s, &closed, &points)? {
                return Err(mismatch(format!("case {case:?} does not give an L-shape")));
            }
            out.push(ConstructedLShape { case, diagram: Diagram::for_closed_set(&self.s, &closed, points) });
        }
        let distinct: BTreeSet<Vec<LatticePoint>> = out.iter().map(|l| l.diagram.points()).collect();
        if distinct.len() != self.lshape_count_formula() || out.len() != distinct.len() {
            return Err(mismatch(format!(
                "{} distinct L-shapes constructed, expected {}",
                distinct.len(),
                self.lshape_count_formula()
            )));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_gives_four() {
        let f = FamilyInstance::build(5).unwrap();
        let shapes = f.construct_lshape_family().unwrap();
        assert_eq!(shapes.len(), 4);
        let normal = shapes.iter().find(|l| l.case == FamilyCase::NormalForms).unwrap();
        let region: Vec<LatticePoint> = f
            .f_region()
            .into_iter()
            .map(|nf| LatticePoint::from([nf.x, nf.y, nf.z, 0]))
            .collect();
        let mut region = region;
        region.sort();
        assert_eq!(normal.diagram.points(), region);
    }

    #[test]
    fn seventeen_gives_ten() {
        let f = FamilyInstance::build(17).unwrap();
        let shapes = f.construct_lshape_family().unwrap();
        assert_eq!(shapes.len(), 10);
        assert_eq!(shapes.iter().filter(|l| matches!(l.case, FamilyCase::Chain { .. })).count(), 7);
    }
}
