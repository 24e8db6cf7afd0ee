//! Deterministic partial automata over the generators, with every state final.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::coxeter::{gens_of, CoxeterSystem, Element, Gen, GenSet};
use crate::error::Result;
use crate::garside::Shadow;
use crate::par::Exec;
use crate::smallroots::{SmallRootTable, Transition};

/// Marker for an undefined transition.
pub const NONE: u32 = u32::MAX;

/// What a state stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Element(Element),
    /// Sorted small-root node ids, and the word read to reach the state.
    SmallSet { nodes: Vec<u32>, reading: Vec<Gen> },
    /// A class of a minimized automaton, with the original state it came from.
    Class { representative: u32 },
}

#[derive(Clone, Debug)]
pub struct Automaton {
    letters: usize,
    initial: u32,
    delta: Vec<u32>,
    payloads: Vec<Payload>,
    labels: Vec<String>,
}

impl Automaton {
    /// Assembles an automaton from a flat transition table
    /// (`delta[q * letters + s]`, [`NONE`] if undefined).
    pub fn from_parts(letters: usize, initial: u32, delta: Vec<u32>, payloads: Vec<Payload>, labels: Vec<String>) -> Self {
        assert_eq!(delta.len(), payloads.len() * letters);
        assert_eq!(labels.len(), payloads.len());
        Automaton {
            letters,
            initial,
            delta,
            payloads,
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.payloads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payloads.is_empty()
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn next(&self, q: u32, s: Gen) -> Option<u32> {
        let t = self.delta[q as usize * self.letters + s as usize];
        (t != NONE).then_some(t)
    }

    pub fn payload(&self, q: u32) -> &Payload {
        &self.payloads[q as usize]
    }

    pub fn label(&self, q: u32) -> &str {
        &self.labels[q as usize]
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().filter(|&&t| t != NONE).count()
    }

    /// The state reached by reading `word`, if every step is defined.
    pub fn run(&self, word: &[Gen]) -> Option<u32> {
        word.iter().try_fold(self.initial, |q, &s| self.next(q, s))
    }

    pub fn accepts(&self, word: &[Gen]) -> bool {
        self.run(word).is_some()
    }

    /// Number of accepted words of each length `0..=max_len`.
    pub fn count_by_length(&self, max_len: usize) -> Vec<BigUint> {
        let mut occ = vec![BigUint::zero(); self.len()];
        occ[self.initial as usize] = BigUint::one();
        let mut out = Vec::with_capacity(max_len + 1);
        for k in 0..=max_len {
            out.push(occ.iter().sum());
            if k == max_len {
                break;
            }
            let mut next = vec![BigUint::zero(); self.len()];
            for (q, c) in occ.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for s in 0..self.letters {
                    let t = self.delta[q * self.letters + s];
                    if t != NONE {
                        next[t as usize] += c;
                    }
                }
            }
            occ = next;
        }
        out
    }

    /// Number of accepted words of length `k`.
    pub fn count_accepted(&self, k: usize) -> BigUint {
        self.count_by_length(k).pop().expect("nonempty")
    }

    /// Keeps the transitions labeled in `set`; with `trim`, also drops the
    /// states no longer reachable from the initial state.
    pub fn restrict_letters(&self, set: GenSet, trim: bool) -> Automaton {
        let mut delta = self.delta.clone();
        for (i, t) in delta.iter_mut().enumerate() {
            if set & (1 << (i % self.letters)) == 0 {
                *t = NONE;
            }
        }
        let a = Automaton { delta, ..self.clone() };
        if trim {
            a.trim().0
        } else {
            a
        }
    }

    /// The automaton over the alphabet `gens`, letter `i` reading `gens[i]`;
    /// with `trim`, only the part reachable from the initial state.
    pub fn select_letters(&self, gens: &[usize], trim: bool) -> Automaton {
        let mut delta = Vec::with_capacity(self.len() * gens.len());
        for q in 0..self.len() {
            for &s in gens {
                delta.push(self.delta[q * self.letters + s]);
            }
        }
        let a = Automaton {
            letters: gens.len(),
            delta,
            ..self.clone()
        };
        if trim {
            a.trim().0
        } else {
            a
        }
    }

    /// The part reachable from the initial state, renumbered in BFS order,
    /// with the map from old to new ids ([`NONE`] for dropped states).
    pub fn trim(&self) -> (Automaton, Vec<u32>) {
        let mut map = vec![NONE; self.len()];
        let mut order = vec![self.initial];
        map[self.initial as usize] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for s in 0..self.letters as Gen {
                if let Some(t) = self.next(q, s) {
                    if map[t as usize] == NONE {
                        map[t as usize] = order.len() as u32;
                        order.push(t);
                    }
                }
            }
        }
        let mut delta = Vec::with_capacity(order.len() * self.letters);
        for &q in &order {
            for s in 0..self.letters {
                let t = self.delta[q as usize * self.letters + s];
                delta.push(if t == NONE { NONE } else { map[t as usize] });
            }
        }
        let a = Automaton {
            letters: self.letters,
            initial: 0,
            delta,
            payloads: order.iter().map(|&q| self.payloads[q as usize].clone()).collect(),
            labels: order.iter().map(|&q| self.labels[q as usize].clone()).collect(),
        };
        (a, map)
    }

    /// Graphviz rendering with byte-stable output.
    pub fn to_dot(&self, sys: &CoxeterSystem, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\""));
        let _ = writeln!(out, "  rankdir=LR;");
        let _ = writeln!(out, "  node [shape=circle];");
        let _ = writeln!(out, "  start [shape=point];");
        for q in 0..self.len() {
            let _ = writeln!(out, "  q{q} [label=\"{}\"];", self.labels[q].replace('"', "\\\""));
        }
        let _ = writeln!(out, "  start -> q{};", self.initial);
        for q in 0..self.len() {
            for s in 0..self.letters {
                let t = self.delta[q * self.letters + s];
                if t != NONE {
                    let _ = writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", sys.gen_name(s as Gen));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `A_B`: states `B`, initial `e`, and `x -> π_B(sx)` for each `s ∉ D_L(x)`.
pub fn build_shadow_automaton(sys: &CoxeterSystem, b: &Shadow, exec: Exec) -> Result<Automaton> {
    let rank = sys.rank();
    let elems = b.elements();
    let rows = exec.map(elems, |x| -> Result<Vec<u32>> {
        (0..rank as Gen)
            .map(|s| {
                if x.has_left_descent(s) {
                    Ok(NONE)
                } else {
                    b.project_index(sys, &sys.mult_left(s, x)).map(|i| i as u32)
                }
            })
            .collect()
    });
    let mut delta = Vec::with_capacity(elems.len() * rank);
    for row in rows {
        delta.extend(row?);
    }
    let initial = b
        .index_of(&sys.identity())
        .ok_or_else(|| crate::Error::ShadowViolation("shadow does not contain the identity".into()))?;
    Ok(Automaton {
        letters: rank,
        initial: initial as u32,
        delta,
        payloads: elems.iter().cloned().map(Payload::Element).collect(),
        labels: b.format(sys),
    })
}

fn bit_test(bits: &[u64], i: u32) -> bool {
    bits[i as usize / 64] & (1 << (i % 64)) != 0
}

fn bit_ids(bits: &[u64]) -> Vec<u32> {
    let mut out = Vec::new();
    for (k, &w) in bits.iter().enumerate() {
        let mut x = w;
        while x != 0 {
            out.push((k * 64) as u32 + x.trailing_zeros());
            x &= x - 1;
        }
    }
    out
}

/// `A_n`: states are the n-small inversion sets, reached from `∅` by
/// `A -> {a_s} ∪ (s(A) ∩ Σ_n)` whenever `a_s ∉ A`.
pub fn build_canonical_automaton(sys: &CoxeterSystem, table: &SmallRootTable) -> Automaton {
    let rank = sys.rank();
    let words = table.len().div_ceil(64).max(1);
    let mut states: Vec<Vec<u64>> = vec![vec![0; words]];
    let mut readings: Vec<Vec<Gen>> = vec![Vec::new()];
    let mut index: HashMap<Vec<u64>, u32> = HashMap::new();
    index.insert(states[0].clone(), 0);
    let mut delta: Vec<u32> = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let cur = states[head].clone();
        for s in 0..rank as Gen {
            // Simple roots occupy node ids 0..rank.
            if bit_test(&cur, s as u32) {
                delta.push(NONE);
                continue;
            }
            let mut next = vec![0u64; words];
            next[s as usize / 64] |= 1 << (s % 64);
            for a in bit_ids(&cur) {
                if let Transition::Node(t) = table.transition(a, s) {
                    next[t as usize / 64] |= 1 << (t % 64);
                }
            }
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = states.len() as u32;
                    let mut reading = readings[head].clone();
                    reading.push(s);
                    index.insert(next.clone(), id);
                    states.push(next);
                    readings.push(reading);
                    id
                }
            };
            delta.push(id);
        }
        head += 1;
    }
    let payloads: Vec<Payload> = states
        .iter()
        .zip(readings)
        .map(|(bits, reading)| Payload::SmallSet {
            nodes: bit_ids(bits),
            reading,
        })
        .collect();
    let labels = payloads
        .iter()
        .map(|p| match p {
            Payload::SmallSet { nodes, .. } => {
                let ids: Vec<String> = nodes.iter().map(u32::to_string).collect();
                format!("{{{}}}", ids.join(","))
            }
            _ => unreachable!(),
        })
        .collect();
    Automaton {
        letters: rank,
        initial: 0,
        delta,
        payloads,
        labels,
    }
}

/// The element whose projection labels the state reached by `reading`:
/// reading `s_1 ... s_k` corresponds to `s_k ... s_1`.
pub fn reading_element(sys: &CoxeterSystem, reading: &[Gen]) -> Element {
    let rev: Vec<Gen> = reading.iter().rev().copied().collect();
    sys.element_from_word(&rev)
}

/// Moore partition refinement. Returns the minimal automaton and, for every
/// state of `a`, its state in the result.
pub fn minimize_with_map(a: &Automaton, exec: Exec) -> (Automaton, Vec<u32>) {
    let n = a.len();
    let k = a.letters;
    let sink = n as u32;
    // Class 0: all (final) states; class 1: the sink.
    let mut class: Vec<u32> = (0..=n).map(|q| if q == n { 1 } else { 0 }).collect();
    let mut count = if n == 0 { 1 } else { 2 };
    loop {
        let sigs: Vec<Vec<u32>> = exec.map_range(n + 1, |q| {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[q]);
            for s in 0..k {
                let t = if q == n { sink } else { a.delta[q * k + s] };
                let t = if t == NONE { sink } else { t };
                sig.push(class[t as usize]);
            }
            sig
        });
        let mut ids: HashMap<&[u32], u32> = HashMap::new();
        let mut next = Vec::with_capacity(n + 1);
        for sig in &sigs {
            let fresh = ids.len() as u32;
            next.push(*ids.entry(sig.as_slice()).or_insert(fresh));
        }
        let new_count = ids.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    let sink_class = class[n];
    // Renumber live classes by first occurrence.
    let mut renum: HashMap<u32, u32> = HashMap::new();
    let mut reps: Vec<u32> = Vec::new();
    for q in 0..n {
        if class[q] == sink_class {
            continue;
        }
        renum.entry(class[q]).or_insert_with(|| {
            reps.push(q as u32);
            (reps.len() - 1) as u32
        });
    }
    let mut delta = Vec::with_capacity(reps.len() * k);
    for &r in &reps {
        for s in 0..k {
            let t = a.delta[r as usize * k + s];
            delta.push(if t == NONE || class[t as usize] == sink_class {
                NONE
            } else {
                renum[&class[t as usize]]
            });
        }
    }
    let map: Vec<u32> = (0..n)
        .map(|q| renum.get(&class[q]).copied().unwrap_or(NONE))
        .collect();
    let quotient = Automaton {
        letters: k,
        initial: map[a.initial as usize],
        delta,
        payloads: reps.iter().map(|&r| Payload::Class { representative: r }).collect(),
        labels: reps.iter().map(|&r| a.labels[r as usize].clone()).collect(),
    };
    let (trimmed, tmap) = quotient.trim();
    let map = map
        .into_iter()
        .map(|c| if c == NONE { NONE } else { tmap[c as usize] })
        .collect();
    (trimmed, map)
}

pub fn minimize(a: &Automaton, exec: Exec) -> Automaton {
    minimize_with_map(a, exec).0
}

/// Why a state map fails to be (totally surjective) a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Initial { expected: u32, got: u32 },
    /// `q --s-->` exists but its image transition is missing or disagrees.
    Edge { state: u32, letter: Gen },
    NotSurjective { state: u32 },
    /// `f(q) --s-->` exists in the target but `q --s-->` does not.
    NoLift { state: u32, letter: Gen },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Initial { expected, got } => write!(f, "initial state maps to {got}, expected {expected}"),
            Witness::Edge { state, letter } => write!(f, "edge {state} --{}--> not preserved", letter + 1),
            Witness::NotSurjective { state } => write!(f, "target state {state} not in the image"),
            Witness::NoLift { state, letter } => write!(f, "edge from image of {state} by {} does not lift", letter + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismCheck {
    NotMorphism(Witness),
    /// A morphism, with the reason it is not totally surjective.
    Morphism(Witness),
    TotallySurjective,
}

/// Classifies the state map `f` from `a` to `b`. All states being final,
/// finality is preserved and reflected automatically.
pub fn check_morphism(f: &[u32], a: &Automaton, b: &Automaton) -> MorphismCheck {
    assert_eq!(f.len(), a.len());
    assert_eq!(a.letters, b.letters);
    if f[a.initial as usize] != b.initial {
        return MorphismCheck::NotMorphism(Witness::Initial {
            expected: b.initial,
            got: f[a.initial as usize],
        });
    }
    for q in 0..a.len() as u32 {
        for s in 0..a.letters as Gen {
            if let Some(t) = a.next(q, s) {
                if b.next(f[q as usize], s) != Some(f[t as usize]) {
                    return MorphismCheck::NotMorphism(Witness::Edge { state: q, letter: s });
                }
            }
        }
    }
    let mut hit = vec![false; b.len()];
    for &x in f {
        hit[x as usize] = true;
    }
    if let Some(p) = hit.iter().position(|h| !h) {
        return MorphismCheck::Morphism(Witness::NotSurjective { state: p as u32 });
    }
    for q in 0..a.len() as u32 {
        for s in 0..a.letters as Gen {
            if b.next(f[q as usize], s).is_some() && a.next(q, s).is_none() {
                return MorphismCheck::Morphism(Witness::NoLift { state: q, letter: s });
            }
        }
    }
    MorphismCheck::TotallySurjective
}

/// The isomorphism from `a` to `b` if one exists. Both automata are
/// deterministic and trim, so walking them in lockstep from the initial
/// states determines the only candidate.
pub fn isomorphism(a: &Automaton, b: &Automaton) -> Option<Vec<u32>> {
    if a.len() != b.len() || a.letters != b.letters {
        return None;
    }
    let mut fwd = vec![NONE; a.len()];
    let mut bwd = vec![NONE; b.len()];
    fwd[a.initial as usize] = b.initial;
    bwd[b.initial as usize] = a.initial;
    let mut queue = VecDeque::from([a.initial]);
    while let Some(q) = queue.pop_front() {
        let p = fwd[q as usize];
        for s in 0..a.letters as Gen {
            match (a.next(q, s), b.next(p, s)) {
                (None, None) => {}
                (Some(x), Some(y)) => {
                    if fwd[x as usize] == NONE && bwd[y as usize] == NONE {
                        fwd[x as usize] = y;
                        bwd[y as usize] = x;
                        queue.push_back(x);
                    } else if fwd[x as usize] != y || bwd[y as usize] != x {
                        return None;
                    }
                }
                _ => return None,
            }
        }
    }
    fwd.iter().all(|&x| x != NONE).then_some(fwd)
}

pub fn isomorphic(a: &Automaton, b: &Automaton) -> bool {
    isomorphism(a, b).is_some()
}

/// `A_B^(I)`: the transitions labeled in `I` and the states they reach from
/// `e`, over the alphabet `I` numbered as in
/// [`CoxeterSystem::parabolic_subsystem`].
pub fn restrict_to_parabolic(a: &Automaton, set: GenSet) -> Automaton {
    a.select_letters(&gens_of(set), true)
}
