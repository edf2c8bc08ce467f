//! Factorization sets, factorization graphs and minimal presentations.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::semigroup::NumericalSemigroup;

/// `Z(s)` for `S`: every `x` with `Σ x_i·n_i = s`, in lexicographic order.
/// Empty iff `s ∉ S`.
pub fn factorizations(semigroup: &NumericalSemigroup, s: i64) -> Result<BTreeSet<LatticePoint>> {
    if s < 0 {
        return Err(Error::Negative(s));
    }
    Ok(factorizations_over(semigroup.generators(), s as u64).into_iter().collect())
}

/// Bounded depth-first enumeration of `{x ∈ N^k : Σ x_i·g_i = target}`.
///
/// The first coordinate is tried from its upper bound `target / g_1`
/// downwards; the last coordinate is solved by divisibility.
pub fn factorizations_over(gens: &[u64], target: u64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    if gens.is_empty() {
        if target == 0 {
            out.push(LatticePoint(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; gens.len()];
    descend(gens, 0, target, &mut current, &mut out);
    out
}

fn descend(gens: &[u64], depth: usize, rest: u64, current: &mut [u32], out: &mut Vec<LatticePoint>) {
    let g = gens[depth];
    if depth + 1 == gens.len() {
        if rest.is_multiple_of(g) {
            current[depth] = u32::try_from(rest / g).expect("coordinate overflow");
            out.push(LatticePoint(current.to_vec()));
            current[depth] = 0;
        }
        return;
    }
    let bound = rest / g;
    for c in (0..=bound).rev() {
        current[depth] = c as u32;
        descend(gens, depth + 1, rest - c * g, current, out);
    }
    current[depth] = 0;
}

/// The graph on `Z(s)` joining two factorizations when their supports meet.
#[derive(Clone, Debug)]
pub struct FactorizationGraph {
    pub element: u64,
    pub vertices: Vec<LatticePoint>,
    pub edges: Vec<(usize, usize)>,
}

impl FactorizationGraph {
    /// Connected components as sorted vertex lists, ordered by their
    /// lexicographically smallest member.
    pub fn components(&self) -> Vec<Vec<LatticePoint>> {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<LatticePoint>> = Default::default();
        for i in 0..self.vertices.len() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.vertices[i].clone());
        }
        let mut comps: Vec<Vec<LatticePoint>> = groups
            .into_values()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        comps.sort();
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub fn factorization_graph(semigroup: &NumericalSemigroup, s: i64) -> Result<FactorizationGraph> {
    if !semigroup.contains(s) {
        return Err(Error::NotInSemigroup(s));
    }
    let vertices: Vec<LatticePoint> = factorizations(semigroup, s)?.into_iter().collect();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if !vertices[i].meet(&vertices[j]).is_zero() {
                edges.push((i, j));
            }
        }
    }
    Ok(FactorizationGraph { element: s as u64, vertices, edges })
}

/// A relation `left ~ right` between two factorizations of one element,
/// reduced by the componentwise minimum and ordered so `left < right`
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PresentationPair {
    pub left: LatticePoint,
    pub right: LatticePoint,
}

impl PresentationPair {
    pub fn new(a: LatticePoint, b: LatticePoint) -> Self {
        let common = a.meet(&b);
        let a = a.checked_sub(&common).expect("meet is below a");
        let b = b.checked_sub(&common).expect("meet is below b");
        if a <= b {
            Self { left: a, right: b }
        } else {
            Self { left: b, right: a }
        }
    }

    /// Value of either side under the given generators.
    pub fn degree(&self, gens: &[u64]) -> u64 {
        self.left.dot(gens)
    }
}

/// Elements whose factorization graph is disconnected, within the search
/// bound `F(S) + n_1 + n_k`.
pub fn betti_elements(semigroup: &NumericalSemigroup) -> Vec<FactorizationGraph> {
    let gens = semigroup.generators();
    let bound = semigroup.frobenius() + (gens[0] + gens[gens.len() - 1]) as i64;
    (1..=bound)
        .filter(|&s| semigroup.contains(s))
        .filter_map(|s| factorization_graph(semigroup, s).ok())
        .filter(|g| !g.is_connected())
        .collect()
}

/// A minimal presentation: for every Betti element, one pair joining the
/// representative (lexicographically smallest factorization) of each
/// component to the representative of the first component.
pub fn minimal_presentation(semigroup: &NumericalSemigroup) -> Vec<PresentationPair> {
    let mut pairs = Vec::new();
    for graph in betti_elements(semigroup) {
        let comps = graph.components();
        let base = comps[0][0].clone();
        for comp in &comps[1..] {
            pairs.push(PresentationPair::new(base.clone(), comp[0].clone()));
        }
    }
    pairs.sort();
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t5() -> NumericalSemigroup {
        NumericalSemigroup::new(&[5, 13, 14]).unwrap()
    }

    fn pts(v: &[[u32; 3]]) -> BTreeSet<LatticePoint> {
        v.iter().map(|&p| LatticePoint::from(p)).collect()
    }

    #[test]
    fn factorization_sets() {
        let t = t5();
        assert_eq!(factorizations(&t, 28).unwrap(), pts(&[[3, 1, 0], [0, 0, 2]]));
        assert_eq!(factorizations(&t, 0).unwrap(), pts(&[[0, 0, 0]]));
        assert_eq!(factorizations(&t, 39).unwrap(), pts(&[[0, 3, 0], [5, 0, 1]]));
        assert!(factorizations(&t, 22).unwrap().is_empty());
        assert_eq!(factorizations(&t, -1), Err(Error::Negative(-1)));
    }

    #[test]
    fn graphs() {
        let t = t5();
        let g = factorization_graph(&t, 28).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 0));
        assert!(!g.is_connected());
        assert!(factorization_graph(&t, 5).unwrap().is_connected());
        let g40 = factorization_graph(&t, 40).unwrap();
        let comps = g40.components();
        let find = |p: [u32; 3]| comps.iter().position(|c| c.contains(&LatticePoint::from(p)));
        assert_ne!(find([8, 0, 0]), find([0, 2, 1]));
        assert!(find([8, 0, 0]).is_some() && find([0, 2, 1]).is_some());
        assert!(factorization_graph(&t, 22).is_err());
    }

    #[test]
    fn presentations() {
        let p = minimal_presentation(&t5());
        let expected = vec![
            PresentationPair::new([0, 0, 2].into(), [3, 1, 0].into()),
            PresentationPair::new([0, 3, 0].into(), [5, 0, 1].into()),
            PresentationPair::new([8, 0, 0].into(), [0, 2, 1].into()),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(p, expected);

        let two_three = minimal_presentation(&NumericalSemigroup::new(&[2, 3]).unwrap());
        assert_eq!(two_three, vec![PresentationPair::new([3, 0].into(), [0, 2].into())]);

        let t7 = minimal_presentation(&NumericalSemigroup::new(&[7, 19, 20]).unwrap());
        assert_eq!(t7.len(), 3);
        assert!(t7.contains(&PresentationPair::new([0, 4, 0].into(), [8, 0, 1].into())));
        assert!(t7.contains(&PresentationPair::new([11, 0, 0].into(), [0, 3, 1].into())));
    }

    #[test]
    fn pair_normalization() {
        let p = PresentationPair::new([4, 1, 0].into(), [1, 0, 2].into());
        assert_eq!(p.left, LatticePoint::from([0, 0, 2]));
        assert_eq!(p.right, LatticePoint::from([3, 1, 0]));
    }
}
