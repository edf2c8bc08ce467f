//! Exhaustive search for order ideals of `N^k` that pick exactly one
//! candidate point per class.
//!
//! Every class carries a weight that strictly exceeds the weight of any class
//! owning a point below one of its candidates. Classes are assigned in
//! nondecreasing weight order, so when a class is reached all points below
//! its candidates already belong to assigned classes, and a candidate is
//! usable iff none of the points below it has been ruled out.
//!
//! Ruling out is tracked with forward checking: choosing a point for a class
//! kills its siblings and, transitively, every candidate above a killed
//! point. A class whose live candidates drop to zero prunes the branch.

use std::collections::HashMap;

use crate::lattice::LatticePoint;

#[derive(Clone, Debug)]
pub(crate) struct ClassSpec {
    pub label: u64,
    pub weight: u64,
    pub candidates: Vec<LatticePoint>,
}

struct Universe {
    points: Vec<LatticePoint>,
    class_of: Vec<usize>,
    succs: Vec<Vec<usize>>,
    /// Point ids per class, in the class's candidate order.
    members: Vec<Vec<usize>>,
}

impl Universe {
    fn build(classes: &[ClassSpec]) -> (Self, Vec<bool>) {
        let mut points = Vec::new();
        let mut class_of = Vec::new();
        let mut index: HashMap<LatticePoint, usize> = HashMap::new();
        let mut members = Vec::with_capacity(classes.len());
        for (c, spec) in classes.iter().enumerate() {
            let mut ids = Vec::with_capacity(spec.candidates.len());
            for p in &spec.candidates {
                let id = *index.entry(p.clone()).or_insert_with(|| {
                    points.push(p.clone());
                    class_of.push(c);
                    points.len() - 1
                });
                ids.push(id);
            }
            members.push(ids);
        }
        let mut succs = vec![Vec::new(); points.len()];
        // Points with a predecessor outside the universe can never be used.
        let mut orphan = vec![false; points.len()];
        for (id, p) in points.iter().enumerate() {
            for axis in 0..p.dim() {
                if let Some(q) = p.step_down(axis) {
                    match index.get(&q) {
                        Some(&qid) => succs[qid].push(id),
                        None => orphan[id] = true,
                    }
                }
            }
        }
        (Self { points, class_of, succs, members }, orphan)
    }
}

struct State<'a> {
    universe: &'a Universe,
    dead: Vec<bool>,
    alive: Vec<usize>,
    assigned: Vec<Option<usize>>,
    trail: Vec<usize>,
    scratch: Vec<usize>,
}

impl<'a> State<'a> {
    /// Kills `start` and everything above it. Returns false if an
    /// unassigned class loses its last live candidate.
    fn kill(&mut self, start: usize) -> bool {
        let mut ok = true;
        self.scratch.clear();
        self.scratch.push(start);
        while let Some(p) = self.scratch.pop() {
            if self.dead[p] {
                continue;
            }
            self.dead[p] = true;
            self.trail.push(p);
            let c = self.universe.class_of[p];
            self.alive[c] -= 1;
            if self.alive[c] == 0 && self.assigned[c].is_none() {
                ok = false;
            }
            self.scratch.extend_from_slice(&self.universe.succs[p]);
        }
        ok
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().expect("trail above mark");
            self.dead[p] = false;
            self.alive[self.universe.class_of[p]] += 1;
        }
    }

    fn assign(&mut self, class: usize, point: usize) -> bool {
        self.assigned[class] = Some(point);
        let mut ok = true;
        for i in 0..self.universe.members[class].len() {
            let q = self.universe.members[class][i];
            if q != point && !self.kill(q) {
                ok = false;
            }
        }
        ok
    }
}

/// All systems of representatives (one candidate per class) whose union is
/// downward closed. Each solution lists the chosen point per class index.
pub(crate) fn enumerate(classes: &[ClassSpec]) -> Vec<Vec<LatticePoint>> {
    let (universe, orphan) = Universe::build(classes);
    let mut state = State {
        universe: &universe,
        dead: vec![false; universe.points.len()],
        alive: universe.members.iter().map(Vec::len).collect(),
        assigned: vec![None; classes.len()],
        trail: Vec::new(),
        scratch: Vec::new(),
    };
    for (id, _) in orphan.iter().enumerate().filter(|(_, &o)| o) {
        state.kill(id);
    }
    state.trail.clear();
    if state.alive.contains(&0) {
        return Vec::new();
    }

    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&c| (classes[c].weight, classes[c].label));

    let mut solutions = Vec::new();
    // (next candidate index to try, trail mark) for each assigned depth.
    let mut frames: Vec<(usize, usize)> = Vec::with_capacity(order.len());
    let mut next = 0usize;
    loop {
        let depth = frames.len();
        if depth == order.len() {
            solutions.push(
                state
                    .assigned
                    .iter()
                    .map(|a| universe.points[a.expect("complete assignment")].clone())
                    .collect(),
            );
        } else {
            let class = order[depth];
            let members = &universe.members[class];
            if let Some(i) = (next..members.len()).find(|&i| !state.dead[members[i]]) {
                let mark = state.trail.len();
                frames.push((i + 1, mark));
                if state.assign(class, members[i]) {
                    next = 0;
                    continue;
                }
                // Conflict: fall through to undo this frame.
            }
        }
        // Backtrack one level.
        let Some((resume, mark)) = frames.pop() else { break };
        state.undo_to(mark);
        state.assigned[order[frames.len()]] = None;
        next = resume;
    }
    solutions
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(label: u64, weight: u64, cands: &[[u32; 2]]) -> ClassSpec {
        ClassSpec {
            label,
            weight,
            candidates: cands.iter().map(|&c| LatticePoint::from(c)).collect(),
        }
    }

    #[test]
    fn single_class() {
        let sols = enumerate(&[spec(0, 0, &[[0, 0]])]);
        assert_eq!(sols, vec![vec![LatticePoint::from([0, 0])]]);
    }

    #[test]
    fn two_way_choice() {
        // Class 2 may be (2,0) or (0,2); class 3 can only sit on (0,2).
        let classes = [
            spec(0, 0, &[[0, 0]]),
            spec(1, 1, &[[1, 0]]),
            spec(4, 1, &[[0, 1]]),
            spec(2, 2, &[[2, 0], [0, 2]]),
            spec(3, 3, &[[0, 3]]),
        ];
        let sols = enumerate(&classes);
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0][3], LatticePoint::from([0, 2]));
    }

    #[test]
    fn orphans_are_pruned() {
        // (1,1) has predecessor (0,1) outside the universe.
        let classes = [spec(0, 0, &[[0, 0]]), spec(1, 1, &[[1, 0]]), spec(2, 2, &[[1, 1]])];
        assert!(enumerate(&classes).is_empty());
    }
}
