//! Group elements as reduced words with their left inversion sets.

use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use super::{CoxeterSystem, Gen, GenSet, RootId, SignedRoot};

/// An element `w` of a Coxeter group.
///
/// Stores one reduced word and the left inversion set `N(w)` as sorted root
/// ids. Equality and hashing look only at `N(w)`, which determines `w`.
#[derive(Clone, Debug)]
pub struct Element {
    word: Vec<Gen>,
    inv: Vec<RootId>,
    descents: GenSet,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.inv == other.inv
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inv.hash(state);
    }
}

impl Element {
    fn from_parts(word: Vec<Gen>, inv: Vec<RootId>, rank: usize) -> Self {
        debug_assert_eq!(word.len(), inv.len());
        let descents = inv
            .iter()
            .take_while(|r| (r.0 as usize) < rank)
            .fold(0, |acc, r| acc | (1u64 << r.0));
        Element { word, inv, descents }
    }

    /// The stored reduced word (one of possibly many).
    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    /// `N(w)` as sorted root ids.
    pub fn inv(&self) -> &[RootId] {
        &self.inv
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Left descent set `D_L(w)`.
    pub fn descents(&self) -> GenSet {
        self.descents
    }

    pub fn has_left_descent(&self, s: Gen) -> bool {
        self.descents & (1 << s) != 0
    }

    pub fn contains_root(&self, r: RootId) -> bool {
        self.inv.binary_search(&r).is_ok()
    }

    /// Generators occurring in the stored word; independent of the word chosen.
    pub fn support(&self) -> GenSet {
        self.word.iter().fold(0, |acc, &s| acc | (1 << s))
    }
}

fn insert_sorted(v: &mut Vec<RootId>, r: RootId) {
    if let Err(pos) = v.binary_search(&r) {
        v.insert(pos, r);
    }
}

impl CoxeterSystem {
    pub fn identity(&self) -> Element {
        Element::from_parts(Vec::new(), Vec::new(), self.rank())
    }

    pub fn generator(&self, s: Gen) -> Element {
        Element::from_parts(vec![s], vec![self.simple_root(s)], self.rank())
    }

    /// The left inversion sequence `beta_j = r_1 ... r_{j-1}(a_{r_j})` of a
    /// reduced word; its entries enumerate `N(w)`.
    pub fn inversion_sequence(&self, word: &[Gen]) -> Vec<SignedRoot> {
        (0..word.len())
            .map(|j| self.act_word(&word[..j], SignedRoot::positive(self.simple_root(word[j]))))
            .collect()
    }

    /// Position `j` in `word` with `beta_j = target`.
    fn exchange_position(&self, word: &[Gen], target: RootId) -> usize {
        self.inversion_sequence(word)
            .iter()
            .position(|b| !b.negative && b.id == target)
            .expect("root not in inversion set")
    }

    /// `sw`.
    pub fn mult_left(&self, s: Gen, w: &Element) -> Element {
        let alpha = self.simple_root(s);
        if !w.has_left_descent(s) {
            let mut inv: Vec<RootId> = w
                .inv
                .iter()
                .map(|&r| {
                    let img = self.reflect_root(s, r);
                    debug_assert!(!img.negative);
                    img.id
                })
                .collect();
            inv.sort_unstable();
            insert_sorted(&mut inv, alpha);
            let mut word = Vec::with_capacity(w.word.len() + 1);
            word.push(s);
            word.extend_from_slice(&w.word);
            Element::from_parts(word, inv, self.rank())
        } else {
            let mut inv: Vec<RootId> = w
                .inv
                .iter()
                .filter(|&&r| r != alpha)
                .map(|&r| self.reflect_root(s, r).id)
                .collect();
            inv.sort_unstable();
            let j = self.exchange_position(&w.word, alpha);
            let mut word = w.word.clone();
            word.remove(j);
            Element::from_parts(word, inv, self.rank())
        }
    }

    /// `w(a_s)` as a signed root.
    pub fn right_image(&self, w: &Element, s: Gen) -> SignedRoot {
        self.act_word(&w.word, SignedRoot::positive(self.simple_root(s)))
    }

    pub fn is_right_descent(&self, w: &Element, s: Gen) -> bool {
        self.right_image(w, s).negative
    }

    /// Right descent set `D_R(w)`.
    pub fn right_descents(&self, w: &Element) -> GenSet {
        (0..self.rank() as Gen)
            .filter(|&s| self.is_right_descent(w, s))
            .fold(0, |acc, s| acc | (1 << s))
    }

    /// `ws`.
    pub fn mult_right(&self, w: &Element, s: Gen) -> Element {
        let img = self.right_image(w, s);
        self.mult_right_with(w, s, img)
    }

    fn mult_right_with(&self, w: &Element, s: Gen, img: SignedRoot) -> Element {
        if !img.negative {
            let mut inv = w.inv.clone();
            insert_sorted(&mut inv, img.id);
            let mut word = w.word.clone();
            word.push(s);
            Element::from_parts(word, inv, self.rank())
        } else {
            let inv: Vec<RootId> = w.inv.iter().copied().filter(|&r| r != img.id).collect();
            let j = self.exchange_position(&w.word, img.id);
            let mut word = w.word.clone();
            word.remove(j);
            Element::from_parts(word, inv, self.rank())
        }
    }

    /// `ws` if it is longer than `w`.
    pub fn ascend_right(&self, w: &Element, s: Gen) -> Option<Element> {
        let img = self.right_image(w, s);
        (!img.negative).then(|| self.mult_right_with(w, s, img))
    }

    /// The element represented by an arbitrary (not necessarily reduced) word.
    pub fn element_from_word(&self, word: &[Gen]) -> Element {
        word.iter().fold(self.identity(), |w, &s| self.mult_right(&w, s))
    }

    /// Whether each letter of `word` increases the length.
    pub fn is_reduced_word(&self, word: &[Gen]) -> bool {
        let mut w = self.identity();
        for &s in word {
            match self.ascend_right(&w, s) {
                Some(next) => w = next,
                None => return false,
            }
        }
        true
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        v.word.iter().fold(u.clone(), |w, &s| self.mult_right(&w, s))
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let rev: Vec<Gen> = w.word.iter().rev().copied().collect();
        self.element_from_word(&rev)
    }

    /// `u <=_R w`, i.e. `N(u) ⊆ N(w)`.
    pub fn weak_leq(&self, u: &Element, w: &Element) -> bool {
        weak_leq(u, w)
    }

    /// The lexicographically first reduced word of `w`.
    pub fn normal_word(&self, w: &Element) -> Vec<Gen> {
        let mut out = Vec::with_capacity(w.len());
        let mut cur = w.clone();
        while !cur.is_identity() {
            let s = cur.descents().trailing_zeros() as Gen;
            out.push(s);
            cur = self.mult_left(s, &cur);
        }
        out
    }

    /// All `p` with `p <=_R w`.
    pub fn prefixes(&self, w: &Element) -> Vec<Element> {
        self.close_downward(w, |x| {
            (0..self.rank() as Gen)
                .filter_map(|s| {
                    let img = self.right_image(x, s);
                    img.negative.then(|| self.mult_right_with(x, s, img))
                })
                .collect()
        })
    }

    /// All `v` such that `w = uv` is reduced for some `u`.
    pub fn suffixes(&self, w: &Element) -> Vec<Element> {
        self.close_downward(w, |x| {
            (0..self.rank() as Gen)
                .filter(|&s| x.has_left_descent(s))
                .map(|s| self.mult_left(s, x))
                .collect()
        })
    }

    fn close_downward(&self, w: &Element, step: impl Fn(&Element) -> Vec<Element>) -> Vec<Element> {
        let mut seen: HashSet<Element> = HashSet::new();
        seen.insert(w.clone());
        let mut out = vec![w.clone()];
        let mut frontier = vec![w.clone()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for y in step(x) {
                    if seen.insert(y.clone()) {
                        out.push(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.word.cmp(&b.word)));
        out
    }

    /// `w = w_I * w^I` with `w_I` in `W_I` and `w^I` having no left descent in `I`.
    pub fn coset_split(&self, w: &Element, set: GenSet) -> (Element, Element) {
        let mut head = self.identity();
        let mut rest = w.clone();
        while rest.descents() & set != 0 {
            let s = (rest.descents() & set).trailing_zeros() as Gen;
            rest = self.mult_left(s, &rest);
            head = self.mult_right(&head, s);
        }
        (head, rest)
    }

    /// `p_I(w) = w_I`.
    pub fn parabolic_part(&self, w: &Element, set: GenSet) -> Element {
        self.coset_split(w, set).0
    }

    /// Elements of length at most `radius`, grouped by length.
    pub fn ball(&self, radius: usize) -> Vec<Vec<Element>> {
        self.ball_in(radius, self.all_gens())
    }

    /// Like [`ball`](Self::ball) inside the standard parabolic `W_I`.
    pub fn ball_in(&self, radius: usize, set: GenSet) -> Vec<Vec<Element>> {
        let mut levels = vec![vec![self.identity()]];
        for _ in 0..radius {
            let mut seen: HashSet<Element> = HashSet::new();
            let mut next = Vec::new();
            for w in levels.last().expect("nonempty") {
                for s in 0..self.rank() as Gen {
                    if set & (1 << s) == 0 {
                        continue;
                    }
                    if let Some(ws) = self.ascend_right(w, s) {
                        if seen.insert(ws.clone()) {
                            next.push(ws);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        levels
    }
}

/// `N(u) ⊆ N(w)`.
pub fn weak_leq(u: &Element, w: &Element) -> bool {
    if u.inv.len() > w.inv.len() {
        return false;
    }
    let mut it = w.inv.iter();
    'outer: for r in &u.inv {
        for x in it.by_ref() {
            if x == r {
                continue 'outer;
            }
            if x > r {
                return false;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use crate::coxeter::{parse_coxeter_system, RootVector};

    #[test]
    fn left_multiplication_in_a2() {
        let sys = parse_coxeter_system("A2").unwrap();
        let f = sys.field();
        let s = sys.generator(0);
        assert_eq!(sys.mult_left(0, &s), sys.identity());
        let st = sys.mult_left(0, &sys.generator(1));
        assert_eq!(st.word(), &[0, 1]);
        let roots: Vec<RootVector> = st.inv().iter().map(|&r| sys.root(r)).collect();
        assert!(roots.contains(&RootVector(vec![f.one(), f.zero()])));
        assert!(roots.contains(&RootVector(vec![f.one(), f.one()])));
        assert_eq!(sys.mult_right(&st, 1), s);
    }

    #[test]
    fn reduced_words() {
        let sys = parse_coxeter_system("A2").unwrap();
        assert!(!sys.is_reduced_word(&[0, 0]));
        assert!(sys.is_reduced_word(&[0, 1, 0]));
        assert!(!sys.is_reduced_word(&[0, 1, 0, 1]));
        assert_eq!(sys.element_from_word(&[0, 1, 0]), sys.element_from_word(&[1, 0, 1]));
    }

    #[test]
    fn prefixes_and_suffixes() {
        let sys = parse_coxeter_system("A2").unwrap();
        let st = sys.element_from_word(&[0, 1]);
        let words = |v: Vec<super::Element>| v.iter().map(|e| e.word().to_vec()).collect::<Vec<_>>();
        assert_eq!(words(sys.prefixes(&st)), vec![vec![], vec![0], vec![0, 1]]);
        assert_eq!(words(sys.suffixes(&st)), vec![vec![], vec![1], vec![0, 1]]);
        assert_eq!(sys.suffixes(&sys.identity()).len(), 1);
    }

    #[test]
    fn coset_splits() {
        let sys = parse_coxeter_system("A2").unwrap();
        let (h, r) = sys.coset_split(&sys.element_from_word(&[0, 1, 0]), 0b01);
        assert_eq!(h, sys.generator(0));
        assert_eq!(r, sys.element_from_word(&[1, 0]));
        let g = parse_coxeter_system("triangle(inf,2,inf)").unwrap();
        let (h, r) = g.coset_split(&g.element_from_word(&[0, 1, 2]), 0b011);
        assert_eq!(h, g.element_from_word(&[0, 1]));
        assert_eq!(r, g.generator(2));
    }

    #[test]
    fn normal_words_are_lex_first() {
        let sys = parse_coxeter_system("A2").unwrap();
        let w = sys.element_from_word(&[1, 0, 1]);
        assert_eq!(sys.normal_word(&w), vec![0, 1, 0]);
        assert_eq!(sys.ball(5).iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 2, 2, 1]);
    }
}
