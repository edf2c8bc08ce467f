//! Brute-force oracles shared by the integration tests. None of these use
//! the library's algorithms beyond its plain data types.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use lshape_core::{LatticePoint, NumericalSemigroup};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Reachability table `0..=bound` by the k-fold sums of `gens`.
pub fn reachable(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut r = vec![false; bound as usize + 1];
    r[0] = true;
    for v in 1..=bound as usize {
        r[v] = gens.iter().any(|&g| g as usize <= v && r[v - g as usize]);
    }
    r
}

/// `x ∈ ⟨gens⟩` by a nested loop over every coefficient vector.
pub fn loop_contains(gens: &[u64], x: i64) -> bool {
    if x < 0 {
        return false;
    }
    !loop_factorizations(gens, x as u64).is_empty()
}

/// Every coefficient vector in the box `x_i ≤ s / g_i` whose value is `s`.
pub fn loop_factorizations(gens: &[u64], s: u64) -> BTreeSet<LatticePoint> {
    let bounds: Vec<u64> = gens.iter().map(|g| s / g).collect();
    let mut out = BTreeSet::new();
    let mut x = vec![0u64; gens.len()];
    loop {
        let v: u64 = x.iter().zip(gens).map(|(a, b)| a * b).sum();
        if v == s {
            out.insert(LatticePoint(x.iter().map(|&c| c as u32).collect()));
        }
        let mut i = 0;
        loop {
            if i == x.len() {
                return out;
            }
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Upper bound on the Frobenius number (Schur's bound, `(n_1−1)(n_k−1)`).
pub fn frobenius_bound(gens: &[u64]) -> u64 {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    (lo.saturating_sub(1)) * (hi.saturating_sub(1)) + 1
}

pub fn brute_frobenius(gens: &[u64]) -> i64 {
    let b = frobenius_bound(gens);
    let r = reachable(gens, b);
    (0..=b).rev().find(|&v| !r[v as usize]).map_or(-1, |v| v as i64)
}

/// `w_i = min{s ∈ S : s ≡ i mod m}` by scanning upwards.
pub fn brute_apery(gens: &[u64], m: u64) -> Vec<u64> {
    let bound = frobenius_bound(gens) + m + 1;
    let r = reachable(gens, bound);
    (0..m)
        .map(|i| (i..=bound).step_by(m as usize).find(|&v| r[v as usize]).expect("class reached"))
        .collect()
}

/// Gaps `z` with `z + s ∈ S` for every nonzero `s ∈ S`.
pub fn brute_pseudo_frobenius(gens: &[u64]) -> BTreeSet<i64> {
    let b = frobenius_bound(gens);
    let r = reachable(gens, 2 * b + 2);
    (0..=b)
        .filter(|&z| !r[z as usize])
        .filter(|&z| (1..=b + 1).filter(|&s| r[s as usize]).all(|s| r[(z + s) as usize]))
        .map(|z| z as i64)
        .collect()
}

/// Unit-weight distances from vertex 0 by breadth-first search.
pub fn bfs_levels(modulus: u64, steps: &[u64]) -> Vec<u64> {
    let n = modulus as usize;
    let mut level = vec![u64::MAX; n];
    level[0] = 0;
    let mut q = VecDeque::from([0usize]);
    while let Some(v) = q.pop_front() {
        for &s in steps {
            let w = (v + s as usize) % n;
            if level[w] == u64::MAX {
                level[w] = level[v] + 1;
                q.push_back(w);
            }
        }
    }
    level
}

/// Minimum weight per class by enumerating every lattice point with weight
/// at most `max_weight`.
pub fn box_min_weights(modulus: u64, steps: &[u64], weights: &[u64], max_weight: u64) -> Vec<u64> {
    let mut best = vec![u64::MAX; modulus as usize];
    for p in box_points(steps.len(), weights, max_weight) {
        let class = p.coords().iter().zip(steps).map(|(&c, &s)| c as u64 * s).sum::<u64>() % modulus;
        let w = p.dot(weights);
        best[class as usize] = best[class as usize].min(w);
    }
    best
}

/// All lattice points of weight at most `max_weight`.
pub fn box_points(k: usize, weights: &[u64], max_weight: u64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(i: usize, w: u64, cur: &mut Vec<u32>, weights: &[u64], max: u64, out: &mut Vec<LatticePoint>) {
        if i == cur.len() {
            out.push(LatticePoint(cur.clone()));
            return;
        }
        let mut x = 0u32;
        while w + x as u64 * weights[i] <= max {
            cur[i] = x;
            rec(i + 1, w + x as u64 * weights[i], cur, weights, max, out);
            x += 1;
        }
        cur[i] = 0;
    }
    rec(0, 0, &mut cur, weights, max_weight, &mut out);
    out
}

/// Counts order ideals picking one candidate per class with a plain
/// weight-ordered depth-first search and no propagation. `classes` holds
/// `(weight, candidates)`.
pub fn plain_order_ideal_count(classes: &[(u64, Vec<LatticePoint>)]) -> usize {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&c| classes[c].0);
    let mut chosen: HashSet<LatticePoint> = HashSet::new();
    fn rec(
        i: usize,
        order: &[usize],
        classes: &[(u64, Vec<LatticePoint>)],
        chosen: &mut HashSet<LatticePoint>,
    ) -> usize {
        if i == order.len() {
            return 1;
        }
        let mut total = 0;
        for p in &classes[order[i]].1 {
            let ok = (0..p.dim()).all(|a| p.step_down(a).is_none_or(|q| chosen.contains(&q)));
            if ok {
                chosen.insert(p.clone());
                total += rec(i + 1, order, classes, chosen);
                chosen.remove(p);
            }
        }
        total
    }
    rec(0, &order, classes, &mut chosen)
}

/// Box-enumerated candidates of a digraph, as input for
/// [`plain_order_ideal_count`].
pub fn digraph_classes(modulus: u64, steps: &[u64], weights: &[u64]) -> Vec<(u64, Vec<LatticePoint>)> {
    let levels = {
        // Generous bound: any class is reached within N steps of the lightest arc.
        let maxw = modulus * weights.iter().max().unwrap();
        box_min_weights(modulus, steps, weights, maxw)
    };
    let maxw = *levels.iter().max().unwrap();
    let mut classes: Vec<(u64, Vec<LatticePoint>)> = levels.iter().map(|&w| (w, Vec::new())).collect();
    for p in box_points(steps.len(), weights, maxw) {
        let class = p.coords().iter().zip(steps).map(|(&c, &s)| c as u64 * s).sum::<u64>() % modulus;
        if p.dot(weights) == levels[class as usize] {
            classes[class as usize].1.push(p);
        }
    }
    classes
}

/// A random numerical semigroup with `k` minimal generators, all at most
/// `max_gen`, multiplicity at least `min_mult`.
pub fn random_semigroup(rng: &mut ChaCha8Rng, k: usize, min_mult: u64, max_mult: u64, max_gen: u64) -> NumericalSemigroup {
    loop {
        let m = rng.gen_range(min_mult..=max_mult);
        let mut gens = vec![m];
        while gens.len() < k {
            gens.push(rng.gen_range(m + 1..=max_gen.max(m + 1)));
        }
        if let Ok(s) = NumericalSemigroup::new(&gens) {
            if s.embedding_dimension() == k {
                return s;
            }
        }
    }
}
