use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Label-setting shortest paths from residue 0 on `Z_modulus`, with an arc
/// `r → r + step_i (mod modulus)` of weight `weight_i` for every step.
///
/// Every residue must be reachable; callers guarantee this via a gcd check.
pub(crate) fn residue_distances(modulus: u64, steps: &[u64], weights: &[u64]) -> Vec<u64> {
    debug_assert_eq!(steps.len(), weights.len());
    let n = usize::try_from(modulus).expect("modulus fits in memory");
    let mut dist = vec![u64::MAX; n];
    let mut heap = BinaryHeap::new();
    dist[0] = 0;
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for (&s, &w) in steps.iter().zip(weights) {
            let next = ((r as u64 + s % modulus) % modulus) as usize;
            let nd = d.checked_add(w).expect("path weight overflow");
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
