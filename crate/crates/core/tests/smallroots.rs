mod common;

use std::collections::HashSet;

use coxauto::coxeter::{gens_of, RootId, RootVector};
use coxauto::smallroots::{
    affine_dominance_oracle, affine_structure, build_small_roots, classify_type, cone_member, depth, dominates,
    dominates_ids, parabolic_positive_roots, recount_dp_inf, Transition, TypeClass,
};
use coxauto::{parse_coxeter_system, CoxeterSystem, Element};
use proptest::prelude::*;

fn vec_of(sys: &CoxeterSystem, coords: &[i64]) -> RootVector {
    RootVector(coords.iter().map(|&c| sys.field().from_int(c)).collect())
}

#[test]
fn spec_examples() {
    let a2 = parse_coxeter_system("A2").unwrap();
    assert_eq!(classify_type(&a2, 0b11).unwrap(), TypeClass::Finite);
    let t333 = parse_coxeter_system("triangle(3,3,3)").unwrap();
    assert_eq!(classify_type(&t333, 0b111).unwrap(), TypeClass::Affine);
    let t33i = parse_coxeter_system("triangle(3,3,inf)").unwrap();
    assert_eq!(classify_type(&t33i, 0b111).unwrap(), TypeClass::Indefinite);
    assert!(classify_type(&a2, 0).is_err());

    let i2 = parse_coxeter_system("I2(inf)").unwrap();
    let t = build_small_roots(&i2, 0).unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(t.transition(0, 1), Transition::Exit);
    assert_eq!(t.transition(0, 0), Transition::Negative);
    assert_eq!(build_small_roots(&parse_coxeter_system("~G2").unwrap(), 0).unwrap().len(), 12);
    assert_eq!(build_small_roots(&a2, 0).unwrap().len(), 3);

    // Dominance.
    let (s, t_) = (i2.simple_vector(0), i2.simple_vector(1));
    assert!(!dominates(&i2, &s, &t_).unwrap());
    assert!(!dominates(&i2, &t_, &s).unwrap());
    assert!(dominates(&i2, &s, &vec_of(&i2, &[2, 1])).unwrap());
    assert!(dominates(&i2, &vec_of(&i2, &[-1, 0]), &s).is_err());
    let a1 = t333.simple_vector(0);
    let a1_delta = vec_of(&t333, &[2, 1, 1]);
    assert!(dominates(&t333, &a1, &a1_delta).unwrap());

    // Small inversion sets.
    assert!(t.small_inversion_set(&i2.identity()).is_empty());
    let st = i2.element_from_word(&[0, 1]);
    assert_eq!(t.small_inversion_set(&st), vec![0]);
    let tri = parse_coxeter_system("triangle(3,2,6)").unwrap();
    let tt = build_small_roots(&tri, 0).unwrap();
    assert_eq!(tt.small_inversion_set(&tri.element_from_word(&[0, 2])), vec![0, 2]);

    // Sphericity.
    let g2 = parse_coxeter_system("~G2").unwrap();
    let (sph, all) = build_small_roots(&g2, 0).unwrap().spherical_analysis();
    assert_eq!((sph.len(), all), (8, false));
    let a3 = parse_coxeter_system("~A3").unwrap();
    let (sph, all) = build_small_roots(&a3, 0).unwrap().spherical_analysis();
    assert_eq!((sph.len(), all), (12, true));
    assert_eq!(t.spherical_analysis(), (vec![0, 1], true));

    // Cones.
    let ab = vec_of(&a2, &[1, 1]);
    assert!(cone_member(&a2, &ab, &[a2.simple_vector(0), a2.simple_vector(1)]));
    assert!(!cone_member(&a2, &a2.simple_vector(1), &[a2.simple_vector(0)]));
    let d_minus = vec_of(&t333, &[1, 0, 1]);
    assert!(cone_member(&t333, &d_minus, &[t333.simple_vector(0), t333.simple_vector(2)]));

    // Affine oracle.
    let aff = affine_structure(&t333).unwrap();
    assert!(affine_dominance_oracle(&t333, &aff, &a1, &a1).unwrap());
    assert!(affine_dominance_oracle(&t333, &aff, &a1, &a1_delta).unwrap());
    assert!(!affine_dominance_oracle(&t333, &aff, &a1, &t333.simple_vector(1)).unwrap());
    assert!(affine_structure(&a2).is_err());
}

#[test]
fn table_invariants() {
    for g in ["A3", "B3", "H3", "I2(inf)", "~A2", "~C2", "~G2", "triangle(3,3,inf)", "triangle(3,2,6)", "triangle(inf,2,inf)"] {
        let sys = parse_coxeter_system(g).unwrap();
        let f = sys.field();
        let mut prev: Option<HashSet<RootId>> = None;
        for n in 0..=2 {
            let table = build_small_roots(&sys, n).unwrap();
            let roots: HashSet<RootId> = table.nodes().iter().map(|x| x.root).collect();
            if let Some(p) = &prev {
                assert!(p.is_subset(&roots), "{g}: Σ_{} ⊄ Σ_{n}", n - 1);
            }
            for (id, node) in table.nodes().iter().enumerate() {
                assert!(node.dp_inf() <= n);
                assert_eq!(node.depth, depth(&sys, node.root));
                let support = node
                    .vector
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| f.sign(c) > 0)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i);
                assert_eq!(node.support, support);
                assert_eq!(node.spherical, sys.is_spherical(support));
                for s in 0..sys.rank() as u8 {
                    let b = sys.form_simple(s, &node.vector);
                    match table.transition(id as u32, s) {
                        Transition::Negative => assert_eq!(node.root, sys.simple_root(s)),
                        Transition::Exit => {
                            let img = sys.reflect_root(s, node.root);
                            assert!(!img.negative && !table.contains(img.id));
                        }
                        Transition::Node(k) => {
                            let img = table.node(k);
                            assert_eq!(img.root, sys.reflect_root(s, node.root).id);
                            // Equivariance of the dominated sets on ascents.
                            if f.sign(&b) < 0 {
                                for d in &node.dominated {
                                    let r = sys.reflect_root(s, *d);
                                    assert!(!r.negative && img.dominated.contains(&r.id));
                                }
                                let extra = (f.sign(&(&b + &f.one())) <= 0) as usize;
                                assert_eq!(img.dp_inf(), node.dp_inf() + extra);
                            }
                        }
                    }
                }
            }
            prev = Some(roots);
        }
    }
}

#[test]
fn affine_counts() {
    for (g, r, h) in [("~A2", 2, 3), ("~C2", 2, 4), ("~G2", 2, 6), ("~A3", 3, 4), ("~B3", 3, 6), ("~C3", 3, 6)] {
        let sys = parse_coxeter_system(g).unwrap();
        let aff = affine_structure(&sys).unwrap();
        assert_eq!((aff.finite_rank, aff.coxeter_number), (r, h as u64), "{g}");
        for v in (0..sys.rank() as u8).map(|s| sys.form_simple(s, &aff.delta)) {
            assert!(v.is_zero());
        }
        for n in 0..=2 {
            assert_eq!(build_small_roots(&sys, n).unwrap().len(), r * h * (n + 1), "{g} n={n}");
        }
    }
}

#[test]
fn spherical_roots_are_small() {
    for g in ["~C2", "~G2", "triangle(3,3,inf)", "triangle(3,2,6)", "~B3"] {
        let sys = parse_coxeter_system(g).unwrap();
        let table = build_small_roots(&sys, 0).unwrap();
        // Every positive root of a finite standard parabolic.
        for set in 1..(1u64 << sys.rank()) {
            if !sys.is_spherical(set) {
                continue;
            }
            for r in parabolic_positive_roots(&sys, set) {
                assert!(table.contains(r), "{g}: spherical root not small");
            }
        }
        // And every spherical root reached within depth 6.
        let mut frontier: Vec<RootId> = (0..sys.rank() as u8).map(|s| sys.simple_root(s)).collect();
        let mut seen: HashSet<RootId> = frontier.iter().copied().collect();
        for _ in 0..6 {
            let mut next = Vec::new();
            for r in frontier {
                if sys.is_spherical(sys.support(&sys.root(r))) {
                    assert!(table.contains(r), "{g}");
                }
                for s in 0..sys.rank() as u8 {
                    let img = sys.reflect_root(s, r);
                    if !img.negative && seen.insert(img.id) {
                        next.push(img.id);
                    }
                }
            }
            frontier = next;
        }
    }
}

#[test]
fn dominance_matches_affine_oracle() {
    for g in ["~A2", "~C2", "~G2"] {
        let sys = parse_coxeter_system(g).unwrap();
        let aff = affine_structure(&sys).unwrap();
        let table = build_small_roots(&sys, 2).unwrap();
        for a in table.nodes() {
            for b in table.nodes() {
                assert_eq!(
                    dominates(&sys, &a.vector, &b.vector).unwrap(),
                    affine_dominance_oracle(&sys, &aff, &a.vector, &b.vector).unwrap(),
                    "{g}"
                );
            }
        }
    }
}

/// Dominance straight from its definition, over the elements of a ball:
/// `a ⪯ b` fails as soon as some `N(w)` contains `b` but not `a`.
#[test]
fn dominance_against_inversion_sets() {
    for (g, radius) in [("I2(inf)", 8), ("~A2", 9), ("~C2", 10), ("triangle(3,3,inf)", 8)] {
        let sys = parse_coxeter_system(g).unwrap();
        let ball: Vec<Element> = sys.ball(radius).into_iter().flatten().collect();
        let table = build_small_roots(&sys, 1).unwrap();
        for a in table.nodes() {
            for b in table.nodes() {
                let refuted = ball.iter().any(|w| w.contains_root(b.root) && !w.contains_root(a.root));
                assert_eq!(dominates_ids(&sys, a.root, b.root), !refuted, "{g}");
            }
        }
    }
}

#[test]
fn dp_inf_recount() {
    for g in ["A2", "A3", "B3", "H3", "I2(inf)", "~A2", "~C2", "~G2", "triangle(3,3,inf)", "triangle(3,2,6)"] {
        let sys = parse_coxeter_system(g).unwrap();
        for n in 0..=2 {
            let table = build_small_roots(&sys, n).unwrap();
            if table.len() > 50 {
                continue;
            }
            let bfs: Vec<usize> = table.nodes().iter().map(|x| x.dp_inf()).collect();
            assert_eq!(recount_dp_inf(&sys, &table), bfs, "{g} n={n}");
        }
    }
}

fn cone_case() -> impl Strategy<Value = (usize, Vec<u8>, u64, usize)> {
    (0..4usize, prop::collection::vec(0u8..3, 1..9), any::<u64>(), 0..64usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    /// Fourier–Motzkin against Carathéodory's brute force, on subsets of
    /// inversion sets and arbitrary positive roots.
    #[test]
    fn cone_member_matches_caratheodory((g, word, mask, pick) in cone_case()) {
        let sys = parse_coxeter_system(["~A2", "~G2", "triangle(3,3,inf)", "B3"][g]).unwrap();
        let r = sys.rank() as u8;
        let w = word.iter().fold(sys.identity(), |w, &s| sys.mult_right(&w, s % r));
        let inv = w.inv();
        let gens: Vec<RootVector> = inv
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, x)| sys.root(*x))
            .collect();
        let ball: Vec<RootId> = sys.ball(4).into_iter().flatten().flat_map(|e| e.inv().to_vec()).collect();
        let gamma = sys.root(ball[pick % ball.len()]);
        let raw: Vec<Vec<_>> = gens.iter().map(|v| v.coords().to_vec()).collect();
        prop_assert_eq!(
            cone_member(&sys, &gamma, &gens),
            common::caratheodory_member(sys.field(), gamma.coords(), &raw)
        );
        for x in inv {
            let v = sys.root(*x);
            prop_assert_eq!(
                cone_member(&sys, &v, &gens),
                common::caratheodory_member(sys.field(), v.coords(), &raw)
            );
        }
    }
}

#[test]
fn subsets_of_generators() {
    let sys = parse_coxeter_system("~C3").unwrap();
    for set in 1..(1u64 << sys.rank()) {
        let c = classify_type(&sys, set).unwrap();
        let want = if set == (1 << sys.rank()) - 1 {
            TypeClass::Affine
        } else {
            TypeClass::Finite
        };
        assert_eq!(c, want, "{:?}", gens_of(set));
    }
}
