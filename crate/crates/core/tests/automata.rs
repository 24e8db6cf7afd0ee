use coxauto::automata::{
    build_canonical_automaton, build_shadow_automaton, check_morphism, isomorphic, minimize, minimize_with_map,
    reading_element, restrict_to_parabolic, Automaton, MorphismCheck, Payload,
};
use coxauto::coxeter::parabolic_word;
use coxauto::garside::{intersect_parabolic, low_elements, smallest_shadow, JoinStrategy, Shadow};
use coxauto::par::Exec;
use coxauto::smallroots::build_small_roots;
use coxauto::{parse_coxeter_system, CoxeterSystem};
use num_bigint::BigUint;

fn canonical(sys: &CoxeterSystem, n: usize) -> Automaton {
    build_canonical_automaton(sys, &build_small_roots(sys, n).unwrap())
}

fn smallest(sys: &CoxeterSystem) -> Shadow {
    smallest_shadow(sys, JoinStrategy::ConeSearch { cap: None }, 10_000, Exec::Parallel)
        .unwrap()
        .shadow
}

fn words(sys: &CoxeterSystem, ws: &[&str]) -> Shadow {
    let parsed: Vec<Vec<u8>> = ws.iter().map(|w| sys.parse_word(w).unwrap()).collect();
    Shadow::from_words(sys, &parsed)
}

#[test]
fn shadow_automata() {
    let i2 = parse_coxeter_system("I2(inf)").unwrap();
    let a = build_shadow_automaton(&i2, &words(&i2, &["e", "1", "2"]), Exec::Sequential).unwrap();
    assert_eq!((a.len(), a.transition_count()), (3, 4));
    assert_eq!(a.count_accepted(5), BigUint::from(2u32));
    assert_eq!(a.count_accepted(0), BigUint::from(1u32));

    let a2 = parse_coxeter_system("A2").unwrap();
    let w = smallest(&a2);
    let a = build_shadow_automaton(&a2, &w, Exec::Sequential).unwrap();
    assert_eq!(a.len(), 6);
    for (q, x) in w.elements().iter().enumerate() {
        for s in 0..2 {
            match a.next(q as u32, s) {
                Some(t) => assert_eq!(w.elements()[t as usize], a2.mult_left(s, x)),
                None => assert!(x.has_left_descent(s)),
            }
        }
    }
    let c2 = parse_coxeter_system("~C2").unwrap();
    assert_eq!(build_shadow_automaton(&c2, &smallest(&c2), Exec::Parallel).unwrap().len(), 24);
}

#[test]
fn canonical_automata() {
    for (g, want) in [("~A2", 16), ("I2(inf)", 3), ("~G2", 49), ("A2", 6)] {
        assert_eq!(canonical(&parse_coxeter_system(g).unwrap(), 0).len(), want, "{g}");
    }
    let a2 = parse_coxeter_system("A2").unwrap();
    assert_eq!(canonical(&a2, 0).count_accepted(3), BigUint::from(2u32));
    // States carry their small inversion sets.
    let g2 = parse_coxeter_system("~G2").unwrap();
    let table = build_small_roots(&g2, 0).unwrap();
    let a = build_canonical_automaton(&g2, &table);
    for q in 0..a.len() as u32 {
        let Payload::SmallSet { nodes, reading } = a.payload(q) else { panic!() };
        assert_eq!(a.run(reading), Some(q));
        assert_eq!(&table.small_inversion_set(&reading_element(&g2, reading)), nodes);
    }
}

#[test]
fn minimization() {
    for (g, want) in [("~C2", 24), ("~G2", 41), ("A2", 6), ("~A2", 16)] {
        let sys = parse_coxeter_system(g).unwrap();
        let a = canonical(&sys, 0);
        let m = minimize(&a, Exec::Parallel);
        assert_eq!(m.len(), want, "{g}");
        assert_eq!(minimize(&m, Exec::Sequential).len(), m.len());
        for k in 0..=8 {
            assert_eq!(a.count_accepted(k), m.count_accepted(k));
        }
        let (_, map) = minimize_with_map(&a, Exec::Sequential);
        assert_eq!(check_morphism(&map, &a, &m), MorphismCheck::TotallySurjective);
    }
    let a2 = parse_coxeter_system("~A2").unwrap();
    let a = canonical(&a2, 0);
    assert!(isomorphic(&a, &minimize(&a, Exec::Parallel)));
}

#[test]
fn morphisms() {
    let sys = parse_coxeter_system("~C2").unwrap();
    let a = canonical(&sys, 0);
    let id: Vec<u32> = (0..a.len() as u32).collect();
    assert_eq!(check_morphism(&id, &a, &a), MorphismCheck::TotallySurjective);
    assert!(isomorphic(&a, &a));

    // A bigger shadow of I2(inf) onto the smallest one.
    let i2 = parse_coxeter_system("I2(inf)").unwrap();
    let big = words(&i2, &["e", "1", "2", "12", "21"]);
    let small = smallest(&i2);
    let ab = build_shadow_automaton(&i2, &big, Exec::Sequential).unwrap();
    let asm = build_shadow_automaton(&i2, &small, Exec::Sequential).unwrap();
    let f: Vec<u32> = big
        .elements()
        .iter()
        .map(|w| small.project_index(&i2, w).unwrap() as u32)
        .collect();
    assert_eq!(check_morphism(&f, &ab, &asm), MorphismCheck::TotallySurjective);
    // The reverse direction is no morphism at all.
    assert!(matches!(check_morphism(&[0, 1, 2], &asm, &ab), MorphismCheck::NotMorphism(_)));

    // Canonical automaton onto the low elements.
    let a2 = parse_coxeter_system("~A2").unwrap();
    let table = build_small_roots(&a2, 0).unwrap();
    let a0 = build_canonical_automaton(&a2, &table);
    let l0 = low_elements(&a2, &table, Exec::Parallel);
    let al = build_shadow_automaton(&a2, &l0, Exec::Parallel).unwrap();
    let f: Vec<u32> = (0..a0.len() as u32)
        .map(|q| {
            let Payload::SmallSet { reading, .. } = a0.payload(q) else { panic!() };
            l0.project_index(&a2, &reading_element(&a2, reading)).unwrap() as u32
        })
        .collect();
    assert_eq!(check_morphism(&f, &a0, &al), MorphismCheck::TotallySurjective);
    assert!(isomorphic(&a0, &al));

    // Finite: canonical and smallest-shadow automata agree.
    let fin = parse_coxeter_system("A2").unwrap();
    let w = build_shadow_automaton(&fin, &smallest(&fin), Exec::Sequential).unwrap();
    assert!(isomorphic(&canonical(&fin, 0), &w));
}

#[test]
fn parabolic_restriction() {
    let g = parse_coxeter_system("triangle(inf,2,inf)").unwrap();
    let b = words(&g, &["e", "1", "2", "3", "13", "23", "123"]);
    let a = build_shadow_automaton(&g, &b, Exec::Sequential).unwrap();
    assert!(isomorphic(&restrict_to_parabolic(&a, 0b111), &a));
    let su = restrict_to_parabolic(&a, 0b101);
    assert_eq!(su.len(), 4);
    assert_eq!(su.letters(), 2);
    for set in [0b001u64, 0b010, 0b011, 0b101, 0b110, 0b111] {
        let sub = g.parabolic_subsystem(set).unwrap();
        let cut = intersect_parabolic(&g, &b, set);
        let moved: Vec<Vec<u8>> = cut.words().iter().map(|w| parabolic_word(w, set).unwrap()).collect();
        let inner = build_shadow_automaton(&sub, &Shadow::from_words(&sub, &moved), Exec::Sequential).unwrap();
        assert!(isomorphic(&restrict_to_parabolic(&a, set), &inner), "{set:b}");
    }
}

#[test]
fn dot_output_is_stable() {
    let sys = parse_coxeter_system("~A2").unwrap();
    let a = minimize(&canonical(&sys, 0), Exec::Parallel);
    let dot = a.to_dot(&sys, sys.name());
    assert_eq!(dot, minimize(&canonical(&sys, 0), Exec::Sequential).to_dot(&sys, sys.name()));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> q").count(), a.transition_count() + 1);
}
