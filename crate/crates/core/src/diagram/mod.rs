//! Minimum distance diagrams of weighted Cayley digraphs and L-shapes of
//! closed subsets of numerical semigroups.
//!
//! Both are enumerated by the same search: every class (a residue mod `N`, or
//! an element of the closed set) gets a list of candidate lattice points, and
//! the search returns every choice of one candidate per class whose union is
//! an order ideal of `N^k`. Verification ([`is_mdd`], [`is_lshape`]) is an
//! independent path that works from the point set alone.

mod render;
pub(crate) mod search;

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::digraph::WeightedCayleyDigraph;
use crate::error::{Error, Result};
use crate::factorization::factorizations_over;
use crate::lattice::LatticePoint;
use crate::semigroup::{ClosedSet, NumericalSemigroup};

pub use render::RenderFormat;
use search::ClassSpec;

/// One unit cube of a diagram with its class label and weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub coords: LatticePoint,
    pub class: u64,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramSource {
    Digraph { modulus: u64, steps: Vec<u64>, weights: Vec<u64> },
    ClosedSet { generators: Vec<u64>, elements: Vec<u64> },
}

/// A finite order ideal of `N^k` in bijection with a set of labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    dimension: usize,
    cells: Vec<Cell>,
    source: DiagramSource,
}

impl Diagram {
    fn from_cells(dimension: usize, mut cells: Vec<Cell>, source: DiagramSource) -> Self {
        cells.sort();
        Self { dimension, cells, source }
    }

    /// Labels every point of `points` with its vertex and weight in `graph`.
    pub fn for_digraph(graph: &WeightedCayleyDigraph, points: impl IntoIterator<Item = LatticePoint>) -> Self {
        let cells = points
            .into_iter()
            .map(|p| Cell { class: graph.class_of(&p), weight: graph.weight_of(&p), coords: p })
            .collect();
        let source = DiagramSource::Digraph {
            modulus: graph.modulus(),
            steps: graph.steps().to_vec(),
            weights: graph.weights().to_vec(),
        };
        Self::from_cells(graph.degree(), cells, source)
    }

    /// Labels every point with its value `Ax` under the generators of `semigroup`.
    pub fn for_closed_set(
        semigroup: &NumericalSemigroup,
        closed: &ClosedSet,
        points: impl IntoIterator<Item = LatticePoint>,
    ) -> Self {
        let gens = semigroup.generators();
        let cells = points
            .into_iter()
            .map(|p| {
                let v = p.dot(gens);
                Cell { class: v, weight: v, coords: p }
            })
            .collect();
        let source = DiagramSource::ClosedSet {
            generators: gens.to_vec(),
            elements: closed.elements().iter().copied().collect(),
        };
        Self::from_cells(semigroup.embedding_dimension(), cells, source)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn source(&self) -> &DiagramSource {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Points in lexicographic order; this list is the diagram's identity.
    pub fn points(&self) -> Vec<LatticePoint> {
        self.cells.iter().map(|c| c.coords.clone()).collect()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.cells.binary_search_by(|c| c.coords.cmp(p)).is_ok()
    }

    /// The sorted point list with coordinate `axis` removed.
    pub fn project_out(&self, axis: usize) -> Vec<LatticePoint> {
        let mut v: Vec<LatticePoint> = self.cells.iter().map(|c| c.coords.project_out(axis)).collect();
        v.sort();
        v
    }

    /// Sorted multiset of cell weights.
    pub fn weights(&self) -> Vec<u64> {
        let mut w: Vec<u64> = self.cells.iter().map(|c| c.weight).collect();
        w.sort_unstable();
        w
    }

    pub fn render(&self, format: RenderFormat) -> Result<String> {
        match format {
            RenderFormat::Ascii => render::ascii(self),
            RenderFormat::Json => Ok(render::json(self)),
        }
    }
}

/// Whether every point below a member is a member.
pub fn is_downward_closed(points: &[LatticePoint]) -> bool {
    let set: HashSet<&LatticePoint> = points.iter().collect();
    points.iter().all(|p| {
        (0..p.dim()).all(|axis| p.step_down(axis).is_none_or(|q| set.contains(&q)))
    })
}

/// Whether the unit cubes at `points` form a face-connected solid.
pub fn is_face_connected(points: &[LatticePoint]) -> bool {
    let Some(first) = points.first() else { return true };
    let set: HashSet<&LatticePoint> = points.iter().collect();
    let mut seen: HashSet<LatticePoint> = HashSet::from([first.clone()]);
    let mut queue = VecDeque::from([first.clone()]);
    while let Some(p) = queue.pop_front() {
        for axis in 0..p.dim() {
            let up = Some(p.step_up(axis));
            for q in [up, p.step_down(axis)].into_iter().flatten() {
                if set.contains(&q) && seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    seen.len() == points.len()
}

/// Checks the minimum distance diagram conditions for `diagram` against
/// `graph`, recomputing labels and weights from the coordinates.
pub fn is_mdd(graph: &WeightedCayleyDigraph, diagram: &Diagram) -> Result<bool> {
    if diagram.dimension() != graph.degree() {
        return Err(Error::DimensionMismatch { expected: graph.degree(), found: diagram.dimension() });
    }
    is_mdd_points(graph, &diagram.points())
}

pub fn is_mdd_points(graph: &WeightedCayleyDigraph, points: &[LatticePoint]) -> Result<bool> {
    if let Some(p) = points.iter().find(|p| p.dim() != graph.degree()) {
        return Err(Error::DimensionMismatch { expected: graph.degree(), found: p.dim() });
    }
    if points.len() as u64 != graph.modulus() {
        return Ok(false);
    }
    let dist = graph.distances_from_origin();
    let mut labels = HashSet::new();
    for p in points {
        let class = graph.class_of(p);
        if !labels.insert(class) || graph.weight_of(p) != dist[class as usize] {
            return Ok(false);
        }
    }
    Ok(is_downward_closed(points))
}

/// Checks that `points` is an L-shape of `closed`: `x ↦ Ax` is a bijection
/// onto the closed set and the point set is downward closed.
pub fn is_lshape(semigroup: &NumericalSemigroup, closed: &ClosedSet, points: &[LatticePoint]) -> Result<bool> {
    let k = semigroup.embedding_dimension();
    if let Some(p) = points.iter().find(|p| p.dim() != k) {
        return Err(Error::DimensionMismatch { expected: k, found: p.dim() });
    }
    if points.len() != closed.len() {
        return Ok(false);
    }
    let mut hit = BTreeSet::new();
    for p in points {
        let v = p.dot(semigroup.generators());
        if !closed.contains(v) || !hit.insert(v) {
            return Ok(false);
        }
    }
    Ok(is_downward_closed(points))
}

fn collect_diagrams(mut diagrams: Vec<Diagram>) -> Vec<Diagram> {
    diagrams.sort_by(|a, b| a.cells.iter().map(|c| &c.coords).cmp(b.cells.iter().map(|c| &c.coords)));
    diagrams.dedup_by(|a, b| a.points() == b.points());
    diagrams
}

/// Every minimum distance diagram of `graph`, in canonical order.
pub fn enumerate_mdds(graph: &WeightedCayleyDigraph) -> Vec<Diagram> {
    let table = graph.min_weight_table();
    let classes: Vec<ClassSpec> = table
        .all_candidates()
        .iter()
        .enumerate()
        .map(|(class, cands)| ClassSpec {
            label: class as u64,
            weight: table.weight(class as u64),
            candidates: cands.clone(),
        })
        .collect();
    let diagrams = search::enumerate(&classes)
        .into_iter()
        .map(|points| Diagram::for_digraph(graph, points))
        .collect();
    collect_diagrams(diagrams)
}

/// Every L-shape of the closed set `closed`, in canonical order. The
/// candidates for an element `c` are its factorizations.
pub fn lshapes_closed(semigroup: &NumericalSemigroup, closed: &ClosedSet) -> Vec<Diagram> {
    let gens = semigroup.generators();
    let classes: Vec<ClassSpec> = closed
        .elements()
        .iter()
        .map(|&c| ClassSpec { label: c, weight: c, candidates: factorizations_over(gens, c) })
        .collect();
    let diagrams = search::enumerate(&classes)
        .into_iter()
        .map(|points| Diagram::for_closed_set(semigroup, closed, points))
        .collect();
    collect_diagrams(diagrams)
}

/// Like [`lshapes_closed`], but validates an arbitrary finite set first.
pub fn lshapes_of_set(semigroup: &NumericalSemigroup, elements: &BTreeSet<u64>) -> Result<Vec<Diagram>> {
    let closed = ClosedSet::new(semigroup, elements.clone())?;
    Ok(lshapes_closed(semigroup, &closed))
}

/// L-shapes of `Ap(S, m)` for a minimal generator `m`. The diagrams keep all
/// `k` coordinates; the coordinate of `m` is always zero.
pub fn lshapes_apery(semigroup: &NumericalSemigroup, m: u64) -> Result<Vec<Diagram>> {
    semigroup.generator_index(m).ok_or(Error::NotAGenerator { value: m })?;
    let closed = ClosedSet::from_apery(&semigroup.apery(m)?);
    Ok(lshapes_closed(semigroup, &closed))
}
