use std::collections::BTreeSet;

use lshape_core::family::FamilyInstance;
use lshape_core::{enumerate_mdds, lshapes_closed, minimal_presentation, LatticePoint, PresentationPair};

fn odd_range(hi: u64) -> impl Iterator<Item = u64> {
    (5..=hi).step_by(2)
}

#[test]
fn construction_equals_generic_enumeration() {
    for n in odd_range(41) {
        let f = FamilyInstance::build(n).unwrap();
        let built: BTreeSet<Vec<LatticePoint>> =
            f.construct_lshape_family().unwrap().iter().map(|l| l.diagram.points()).collect();
        let generic: Vec<Vec<LatticePoint>> =
            lshapes_closed(f.s(), &f.closed_set()).iter().map(|d| d.points()).collect();
        assert_eq!(built.len(), f.lshape_count_formula(), "n = {n}");
        assert_eq!(generic.len(), f.lshape_count_formula(), "n = {n}");
        assert_eq!(built, generic.into_iter().collect(), "n = {n}");
    }
}

#[test]
fn every_lshape_respects_the_choice_restrictions() {
    for n in odd_range(21) {
        let f = FamilyInstance::build(n).unwrap();
        for d in lshapes_closed(f.s(), &f.closed_set()) {
            assert!(f.restrictions_hold(&d.points()), "n = {n}");
        }
    }
}

#[test]
fn factorization_counts() {
    for n in odd_range(41) {
        let f = FamilyInstance::build(n).unwrap();
        let classes = f.classify_mi().unwrap();
        for i in 1..=f.half() + 2 {
            let size = classes.get(&i).map_or(0, BTreeSet::len) as u64;
            assert_eq!(size, f.mi_size_formula(i), "n = {n}, i = {i}");
        }
        assert_eq!(classes.values().map(BTreeSet::len).sum::<usize>() as u64, f.frobenius_t());
        for i in 2..=f.half() {
            f.minimal_nf(i).unwrap();
        }
        let total: usize = f.apery().sorted().iter().map(|&s| f.factorizations_t(s).len()).sum();
        let weighted: usize = classes.iter().map(|(&i, set)| i as usize * set.len()).sum();
        assert_eq!(total, weighted);
    }
}

#[test]
fn closed_forms_hold() {
    for n in odd_range(41) {
        let f = FamilyInstance::build(n).unwrap();
        assert_eq!(f.verify_f_region().unwrap().len() as u64, f.frobenius_t());
        f.pf_family().unwrap();
        for e in f.endings() {
            assert!(f.apery().contains(e as u64), "n = {n}: {e}");
        }
    }
}

#[test]
fn presentations_match_the_closed_form() {
    for n in odd_range(41) {
        let f = FamilyInstance::build(n).unwrap();
        let mut expected: Vec<PresentationPair> =
            f.presentation_formula().into_iter().map(|(a, b)| PresentationPair::new(a, b)).collect();
        expected.sort();
        assert_eq!(minimal_presentation(f.t()), expected, "n = {n}");
    }
}

/// `nf(s') < nf(s)` iff every factorization of `s` dominates exactly one
/// factorization of `s'`, within each `M_i`.
#[test]
fn normal_forms_control_domination() {
    for n in odd_range(13) {
        let f = FamilyInstance::build(n).unwrap();
        for (i, members) in f.classify_mi().unwrap() {
            let members: Vec<u64> = members.into_iter().collect();
            for &s in &members {
                for &sp in &members {
                    if s == sp {
                        continue;
                    }
                    let nf_lt = f.normal_form(sp).unwrap().lt(&f.normal_form(s).unwrap());
                    let zs = f.factorizations_t(s);
                    let zsp = f.factorizations_t(sp);
                    let dominated = zs.iter().all(|z| zsp.iter().filter(|w| LatticePoint::lt(w, z)).count() == 1);
                    assert_eq!(nf_lt, dominated, "n = {n}, i = {i}, s = {s}, s' = {sp}");
                }
            }
        }
    }
}

#[test]
fn digraph_counterpart_has_matching_diagrams() {
    for n in odd_range(17) {
        let f = FamilyInstance::build(n).unwrap();
        let mdds = enumerate_mdds(&f.family_digraph());
        assert_eq!(mdds.len(), f.lshape_count_formula(), "n = {n}");
        for d in &mdds {
            assert_eq!(d.weights(), f.apery().sorted());
        }
    }
}
