//! Joins in the weak order, Garside shadows and their projections, and low
//! elements.

use std::collections::{HashMap, HashSet};

use crate::coxeter::{weak_leq, CoxeterSystem, Element, Gen, GenSet, RootId, RootVector};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::smallroots::{cone_member_ids, SmallRootTable, Transition};

/// Where a shadow came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Explicit,
    /// `Gar_S(X)`; `S̃` when `X = S`.
    Closure,
    Low(usize),
    ParabolicImage(GenSet),
    ParabolicIntersection(GenSet),
}

/// A finite set of elements sorted by length, then lexicographically by
/// normal word.
#[derive(Clone, Debug)]
pub struct Shadow {
    elements: Vec<Element>,
    words: Vec<Vec<Gen>>,
    index: HashMap<Element, usize>,
    provenance: Provenance,
}

impl Shadow {
    pub fn new(sys: &CoxeterSystem, elements: impl IntoIterator<Item = Element>, provenance: Provenance) -> Self {
        let mut uniq: Vec<(Vec<Gen>, Element)> = Vec::new();
        let mut seen = HashSet::new();
        for e in elements {
            if seen.insert(e.clone()) {
                uniq.push((sys.normal_word(&e), e));
            }
        }
        uniq.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        let index = uniq.iter().enumerate().map(|(i, (_, e))| (e.clone(), i)).collect();
        let (words, elements) = uniq.into_iter().unzip();
        Shadow {
            elements,
            words,
            index,
            provenance,
        }
    }

    /// Builds a shadow from words (not necessarily reduced).
    pub fn from_words(sys: &CoxeterSystem, words: &[Vec<Gen>]) -> Self {
        Shadow::new(sys, words.iter().map(|w| sys.element_from_word(w)), Provenance::Explicit)
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Normal (lexicographically first) words, parallel to [`elements`](Self::elements).
    pub fn words(&self) -> &[Vec<Gen>] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.index.contains_key(w)
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn max_len(&self) -> usize {
        self.elements.last().map_or(0, Element::len)
    }

    /// Rendered word list, one per element.
    pub fn format(&self, sys: &CoxeterSystem) -> Vec<String> {
        self.words.iter().map(|w| sys.format_word(w)).collect()
    }

    /// Whether every element lies in `other`.
    pub fn is_subset(&self, other: &Shadow) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// `π_B(w)`: the longest element of `B` below `w`.
    pub fn project(&self, sys: &CoxeterSystem, w: &Element) -> Result<Element> {
        self.project_index(sys, w).map(|i| self.elements[i].clone())
    }

    /// Index of `π_B(w)` in this shadow.
    pub fn project_index(&self, sys: &CoxeterSystem, w: &Element) -> Result<usize> {
        if let Some(i) = self.index_of(w) {
            return Ok(i);
        }
        let mut best: Option<usize> = None;
        let mut tie = false;
        for (i, g) in self.elements.iter().enumerate().rev() {
            if let Some(b) = best {
                if g.len() < self.elements[b].len() {
                    break;
                }
            }
            if g.len() > w.len() || !weak_leq(g, w) {
                continue;
            }
            match best {
                None => best = Some(i),
                Some(_) => tie = true,
            }
        }
        match (best, tie) {
            (Some(i), false) => Ok(i),
            (Some(_), true) => Err(Error::ShadowViolation(format!(
                "two longest prefixes of {} in the shadow",
                sys.format_word(w.word())
            ))),
            (None, _) => Err(Error::ShadowViolation("shadow does not contain the identity".into())),
        }
    }
}

/// Outcome of a join search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinResult {
    Join(Element),
    /// No join found among elements of length at most the cap.
    NotFoundWithinCap(usize),
    /// Certified: the pair has no common upper bound.
    Unbounded,
}

impl JoinResult {
    pub fn element(&self) -> Option<&Element> {
        match self {
            JoinResult::Join(w) => Some(w),
            _ => None,
        }
    }
}

/// `u ∨ v` by ascent inside the cone of `N(u) ∪ N(v)`.
///
/// If the join `j` exists then `N(j)` is the set of positive roots in
/// `cone(N(u) ∪ N(v))`, so an ascent `ws` stays below `j` exactly when
/// `w(a_s)` lies in that cone. Starting from `u` the walk therefore climbs
/// to `j`; if it gets stuck before dominating `v`, no upper bound exists.
///
/// Unboundedness is also certified when two roots of the cone have
/// `B(beta, gamma) <= -1`: they generate an infinite dihedral root
/// subsystem whose positive roots all lie in the cone, while `N(j)` is finite.
pub fn join(sys: &CoxeterSystem, u: &Element, v: &Element, cap: usize) -> JoinResult {
    if weak_leq(v, u) {
        return JoinResult::Join(u.clone());
    }
    if weak_leq(u, v) {
        return JoinResult::Join(v.clone());
    }
    let mut gens: Vec<RootId> = u.inv().iter().chain(v.inv()).copied().collect();
    gens.sort_unstable();
    gens.dedup();
    let field = sys.field();
    let mut seen_vectors: Vec<RootVector> = Vec::with_capacity(gens.len() + 8);
    let unbounded_with = |r: RootId, seen: &mut Vec<RootVector>| {
        let v = sys.root(r);
        let bad = seen
            .iter()
            .any(|x| field.sign(&(&sys.form(x, &v) + &field.one())) <= 0);
        seen.push(v);
        bad
    };
    for &g in &gens {
        if unbounded_with(g, &mut seen_vectors) {
            return JoinResult::Unbounded;
        }
    }
    let mut w = u.clone();
    let mut rejected: HashSet<RootId> = HashSet::new();
    loop {
        if weak_leq(v, &w) {
            return JoinResult::Join(w);
        }
        if w.len() >= cap {
            return JoinResult::NotFoundWithinCap(cap);
        }
        let mut stepped = false;
        for s in 0..sys.rank() as Gen {
            let img = sys.right_image(&w, s);
            if img.negative || rejected.contains(&img.id) {
                continue;
            }
            if gens.binary_search(&img.id).is_ok() || cone_member_ids(sys, img.id, &gens) {
                if gens.binary_search(&img.id).is_err() && unbounded_with(img.id, &mut seen_vectors) {
                    return JoinResult::Unbounded;
                }
                w = sys.ascend_right(&w, s).expect("ascent");
                stepped = true;
                break;
            }
            rejected.insert(img.id);
        }
        if !stepped {
            return JoinResult::Unbounded;
        }
    }
}

/// Reference join: breadth-first search upward from `u` through all
/// elements of length at most `cap`. Exponential; used as a test oracle.
pub fn join_bfs(sys: &CoxeterSystem, u: &Element, v: &Element, cap: usize) -> JoinResult {
    let mut level = vec![u.clone()];
    let mut len = u.len();
    loop {
        if let Some(w) = level.iter().find(|w| weak_leq(v, w)) {
            return JoinResult::Join(w.clone());
        }
        if len >= cap || level.is_empty() {
            return JoinResult::NotFoundWithinCap(cap);
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for w in &level {
            for s in 0..sys.rank() as Gen {
                if let Some(ws) = sys.ascend_right(w, s) {
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
        }
        level = next;
        len += 1;
    }
}

/// The default join cap for a set whose longest element has length `max_len`.
pub fn default_cap(max_len: usize) -> usize {
    2 * max_len + 8
}

/// Result of [`verify_shadow`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Shadow,
    NotShadow(String),
    IndeterminateAtCap(usize),
}

/// Checks the Garside-shadow axioms: `S ∪ {e} ⊆ B`, closure under suffixes,
/// and closure under joins of bounded pairs.
pub fn verify_shadow(sys: &CoxeterSystem, b: &Shadow, cap: Option<usize>, exec: Exec) -> Verdict {
    if !b.contains(&sys.identity()) {
        return Verdict::NotShadow("missing identity".into());
    }
    for s in 0..sys.rank() as Gen {
        if !b.contains(&sys.generator(s)) {
            return Verdict::NotShadow(format!("missing generator {}", sys.gen_name(s)));
        }
    }
    for (w, word) in b.elements().iter().zip(b.words()) {
        for s in 0..sys.rank() as Gen {
            if w.has_left_descent(s) && !b.contains(&sys.mult_left(s, w)) {
                return Verdict::NotShadow(format!(
                    "suffix {} of {} missing",
                    sys.format_word(&sys.normal_word(&sys.mult_left(s, w))),
                    sys.format_word(word)
                ));
            }
        }
    }
    let cap = cap.unwrap_or_else(|| default_cap(b.max_len()));
    let n = b.len();
    let elems = b.elements();
    let rows = exec.map_range(n, |i| {
        let mut capped = false;
        for j in (i + 1)..n {
            match join(sys, &elems[i], &elems[j], cap) {
                JoinResult::Join(w) if !b.contains(&w) => return Err((i, j, w)),
                JoinResult::NotFoundWithinCap(_) => capped = true,
                _ => {}
            }
        }
        Ok(capped)
    });
    let mut capped = false;
    for r in rows {
        match r {
            Err((i, j, w)) => {
                return Verdict::NotShadow(format!(
                    "join of {} and {} is {}, not in the set",
                    sys.format_word(&b.words()[i]),
                    sys.format_word(&b.words()[j]),
                    sys.format_word(&sys.normal_word(&w))
                ))
            }
            Ok(c) => capped |= c,
        }
    }
    if capped {
        Verdict::IndeterminateAtCap(cap)
    } else {
        Verdict::Shadow
    }
}

/// How joins are computed during a closure.
#[derive(Clone, Copy, Debug)]
pub enum JoinStrategy<'a> {
    /// [`join`] with the given cap, or [`default_cap`] of the current set.
    ConeSearch { cap: Option<usize> },
    /// Joins inside a known finite Garside shadow containing the seed: the
    /// join of two of its elements is their shortest common upper bound in
    /// it, and the pair is unbounded when there is none.
    Ambient(&'a Shadow),
}

/// A closure result.
#[derive(Clone, Debug)]
pub struct Closure {
    pub shadow: Shadow,
    /// No join search hit its cap, or re-running with a cap larger by 4
    /// produced the same set.
    pub cap_stable: bool,
    /// Largest cap used.
    pub cap: Option<usize>,
}

/// `Gar_S(X)`: the smallest Garside shadow containing `X`.
pub fn garside_closure(
    sys: &CoxeterSystem,
    seed: &[Element],
    strategy: JoinStrategy<'_>,
    budget: usize,
    exec: Exec,
) -> Result<Closure> {
    match strategy {
        JoinStrategy::Ambient(amb) => ambient_closure(sys, seed, amb, budget),
        JoinStrategy::ConeSearch { cap } => {
            let (shadow, capped, used) = cone_closure(sys, seed, cap, 0, budget, exec)?;
            if !capped {
                return Ok(Closure {
                    shadow,
                    cap_stable: true,
                    cap: Some(used),
                });
            }
            let (again, _, used2) = cone_closure(sys, seed, cap.map(|c| c + 4), 4, budget, exec)?;
            let stable = again.len() == shadow.len() && again.is_subset(&shadow);
            Ok(Closure {
                shadow,
                cap_stable: stable,
                cap: Some(used2),
            })
        }
    }
}

/// `S̃ = Gar_S(S)`.
pub fn smallest_shadow(sys: &CoxeterSystem, strategy: JoinStrategy<'_>, budget: usize, exec: Exec) -> Result<Closure> {
    let gens: Vec<Element> = (0..sys.rank() as Gen).map(|s| sys.generator(s)).collect();
    garside_closure(sys, &gens, strategy, budget, exec)
}

fn seeded(sys: &CoxeterSystem, seed: &[Element]) -> Vec<Element> {
    let mut out = vec![sys.identity()];
    out.extend((0..sys.rank() as Gen).map(|s| sys.generator(s)));
    out.extend(seed.iter().cloned());
    out
}

fn cone_closure(
    sys: &CoxeterSystem,
    seed: &[Element],
    fixed_cap: Option<usize>,
    extra: usize,
    budget: usize,
    exec: Exec,
) -> Result<(Shadow, bool, usize)> {
    let mut elems: Vec<Element> = Vec::new();
    let mut set: HashSet<Element> = HashSet::new();
    let mut pending: Vec<Element> = seeded(sys, seed);
    let mut capped = false;
    let mut max_cap = 0;
    // Elements with index < `done` have been joined with each other.
    let mut done = 0;
    loop {
        // Suffix closure of the pending elements.
        while let Some(w) = pending.pop() {
            if !set.insert(w.clone()) {
                continue;
            }
            if set.len() > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            for s in 0..sys.rank() as Gen {
                if w.has_left_descent(s) {
                    pending.push(sys.mult_left(s, &w));
                }
            }
            elems.push(w);
        }
        if done == elems.len() {
            break;
        }
        let cap = fixed_cap.unwrap_or_else(|| default_cap(elems.iter().map(Element::len).max().unwrap_or(0)) + extra);
        max_cap = max_cap.max(cap);
        let n = elems.len();
        let start = done;
        let results = exec.map_range(n - start, |k| {
            let j = start + k;
            let mut found = Vec::new();
            let mut hit = false;
            for i in 0..j {
                match join(sys, &elems[i], &elems[j], cap) {
                    JoinResult::Join(w) => found.push(w),
                    JoinResult::NotFoundWithinCap(_) => hit = true,
                    JoinResult::Unbounded => {}
                }
            }
            (found, hit)
        });
        done = n;
        for (found, hit) in results {
            capped |= hit;
            pending.extend(found.into_iter().filter(|w| !set.contains(w)));
        }
    }
    Ok((Shadow::new(sys, elems, Provenance::Closure), capped, max_cap))
}

/// Upper sets inside a finite shadow, as bitsets over its indices.
struct UpperSets {
    words: usize,
    up: Vec<Vec<u64>>,
}

impl UpperSets {
    fn new(amb: &Shadow) -> Self {
        let n = amb.len();
        let words = n.div_ceil(64);
        let elems = amb.elements();
        let up = (0..n)
            .map(|i| {
                let mut bits = vec![0u64; words];
                for (j, w) in elems.iter().enumerate() {
                    if w.len() >= elems[i].len() && weak_leq(&elems[i], w) {
                        bits[j / 64] |= 1 << (j % 64);
                    }
                }
                bits
            })
            .collect();
        UpperSets { words, up }
    }

    /// Shortest common upper bound, by index (indices are sorted by length).
    fn join(&self, i: usize, j: usize) -> Option<usize> {
        (0..self.words).find_map(|k| {
            let x = self.up[i][k] & self.up[j][k];
            (x != 0).then(|| k * 64 + x.trailing_zeros() as usize)
        })
    }
}

fn ambient_closure(sys: &CoxeterSystem, seed: &[Element], amb: &Shadow, budget: usize) -> Result<Closure> {
    let ups = UpperSets::new(amb);
    let n = amb.len();
    let idx = |w: &Element| {
        amb.index_of(w).ok_or_else(|| {
            Error::ShadowViolation(format!(
                "{} is outside the ambient shadow",
                sys.format_word(&sys.normal_word(w))
            ))
        })
    };
    let mut member = vec![false; n];
    let mut order: Vec<usize> = Vec::new();
    let mut pending: Vec<usize> = seeded(sys, seed).iter().map(idx).collect::<Result<_>>()?;
    let mut done = 0;
    loop {
        while let Some(i) = pending.pop() {
            if member[i] {
                continue;
            }
            member[i] = true;
            order.push(i);
            if order.len() > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            let w = &amb.elements()[i];
            for s in 0..sys.rank() as Gen {
                if w.has_left_descent(s) {
                    pending.push(idx(&sys.mult_left(s, w))?);
                }
            }
        }
        if done == order.len() {
            break;
        }
        let len = order.len();
        for b in done..len {
            for a in 0..b {
                if let Some(k) = ups.join(order[a], order[b]) {
                    if !member[k] {
                        pending.push(k);
                    }
                }
            }
        }
        done = len;
    }
    let shadow = Shadow::new(
        sys,
        order.iter().map(|&i| amb.elements()[i].clone()),
        Provenance::Closure,
    );
    Ok(Closure {
        shadow,
        cap_stable: true,
        cap: None,
    })
}

/// An n-low element with its n-small inversion set.
#[derive(Clone, Debug)]
pub struct LowElement {
    pub element: Element,
    pub small: Vec<u32>,
}

/// The n-low elements, found breadth-first by left multiplication.
///
/// Low elements are closed under suffixes, so every low element is reached
/// through low elements. For low `w` and an ascent `s`, `sw` is low iff
/// every root of `s(Σ_n(w))` that is not n-small lies in `cone(Σ_n(sw))`.
pub fn low_elements_detailed(sys: &CoxeterSystem, table: &SmallRootTable, exec: Exec) -> Vec<LowElement> {
    let mut all = vec![LowElement {
        element: sys.identity(),
        small: Vec::new(),
    }];
    let mut level: Vec<usize> = vec![0];
    let mut seen: HashSet<Element> = HashSet::new();
    seen.insert(sys.identity());
    while !level.is_empty() {
        let candidates: Vec<(usize, Gen)> = level
            .iter()
            .flat_map(|&i| {
                let w = &all[i].element;
                (0..sys.rank() as Gen)
                    .filter(|&s| !w.has_left_descent(s))
                    .map(move |s| (i, s))
            })
            .collect();
        let results = exec.map(&candidates, |&(i, s)| {
            let low = &all[i];
            let mut small = vec![s as u32];
            let mut exits: Vec<RootId> = Vec::new();
            for &node in &low.small {
                match table.transition(node, s) {
                    Transition::Node(t) => small.push(t),
                    Transition::Exit => exits.push(sys.reflect_root(s, table.node(node).root).id),
                    Transition::Negative => unreachable!("s is an ascent"),
                }
            }
            small.sort_unstable();
            small.dedup();
            let roots: Vec<RootId> = small.iter().map(|&k| table.node(k).root).collect();
            if exits.iter().all(|&g| cone_member_ids(sys, g, &roots)) {
                Some(LowElement {
                    element: sys.mult_left(s, &low.element),
                    small,
                })
            } else {
                None
            }
        });
        let mut next = Vec::new();
        for low in results.into_iter().flatten() {
            if seen.insert(low.element.clone()) {
                next.push(all.len());
                all.push(low);
            }
        }
        level = next;
    }
    all
}

/// `L_n` as a shadow.
pub fn low_elements(sys: &CoxeterSystem, table: &SmallRootTable, exec: Exec) -> Shadow {
    Shadow::new(
        sys,
        low_elements_detailed(sys, table, exec).into_iter().map(|l| l.element),
        Provenance::Low(table.level()),
    )
}

/// `p_I(B)`.
pub fn parabolic_image(sys: &CoxeterSystem, b: &Shadow, set: GenSet) -> Shadow {
    Shadow::new(
        sys,
        b.elements().iter().map(|w| sys.parabolic_part(w, set)),
        Provenance::ParabolicImage(set),
    )
}

/// `B ∩ W_I`.
pub fn intersect_parabolic(sys: &CoxeterSystem, b: &Shadow, set: GenSet) -> Shadow {
    Shadow::new(
        sys,
        b.elements().iter().filter(|w| w.support() & !set == 0).cloned(),
        Provenance::ParabolicIntersection(set),
    )
}

/// Whether `Gar_S(B) ∩ W_I = B` for a subset `B` of `W_I`. Reports only;
/// nothing else relies on the answer.
pub fn min_parab_check(sys: &CoxeterSystem, b: &Shadow, set: GenSet, cap: Option<usize>, budget: usize) -> Result<bool> {
    let closure = garside_closure(sys, b.elements(), JoinStrategy::ConeSearch { cap }, budget, Exec::Sequential)?;
    let cut = intersect_parabolic(sys, &closure.shadow, set);
    Ok(cut.len() == b.len() && cut.is_subset(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_coxeter_system;
    use crate::smallroots::build_small_roots;

    #[test]
    fn joins_in_small_groups() {
        let a2 = parse_coxeter_system("A2").unwrap();
        let (s, t) = (a2.generator(0), a2.generator(1));
        assert_eq!(join(&a2, &s, &a2.identity(), 5), JoinResult::Join(s.clone()));
        assert_eq!(join(&a2, &s, &t, 3), JoinResult::Join(a2.element_from_word(&[0, 1, 0])));
        let i2 = parse_coxeter_system("I2(inf)").unwrap();
        let (s, t) = (i2.generator(0), i2.generator(1));
        assert_eq!(join(&i2, &s, &t, 12), JoinResult::Unbounded);
        assert_eq!(join_bfs(&i2, &s, &t, 12), JoinResult::NotFoundWithinCap(12));
    }

    #[test]
    fn remark_group_shadow() {
        let g = parse_coxeter_system("triangle(inf,2,inf)").unwrap();
        let b = Shadow::from_words(&g, &[vec![], vec![0], vec![1], vec![2], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
        assert_eq!(verify_shadow(&g, &b, None, Exec::Sequential), Verdict::Shadow);
        let ts = g.element_from_word(&[1, 0]);
        assert_eq!(b.project(&g, &ts).unwrap(), g.generator(1));
        let img = parabolic_image(&g, &b, 0b011);
        assert_eq!(img.format(&g), vec!["e", "1", "2", "12"]);
        let cut = intersect_parabolic(&g, &b, 0b011);
        assert_eq!(cut.format(&g), vec!["e", "1", "2"]);
    }

    #[test]
    fn closures() {
        let i2 = parse_coxeter_system("I2(inf)").unwrap();
        let c = smallest_shadow(&i2, JoinStrategy::ConeSearch { cap: None }, 1000, Exec::Sequential).unwrap();
        assert_eq!(c.shadow.format(&i2), vec!["e", "1", "2"]);
        assert!(c.cap_stable);
        let a2 = parse_coxeter_system("A2").unwrap();
        let c = smallest_shadow(&a2, JoinStrategy::ConeSearch { cap: None }, 1000, Exec::Sequential).unwrap();
        assert_eq!(c.shadow.len(), 6);
        let missing = Shadow::from_words(&i2, &[vec![], vec![0]]);
        assert!(matches!(verify_shadow(&i2, &missing, None, Exec::Sequential), Verdict::NotShadow(_)));
    }

    #[test]
    fn low_element_counts() {
        for (name, count) in [("I2(inf)", 3), ("A2", 6), ("~A2", 16)] {
            let sys = parse_coxeter_system(name).unwrap();
            let t = build_small_roots(&sys, 0).unwrap();
            assert_eq!(low_elements(&sys, &t, Exec::Sequential).len(), count, "{name}");
        }
    }
}
