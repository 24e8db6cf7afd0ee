//! Small roots, dominance, and cone membership.
//!
//! A positive root `beta` is n-small when it strictly dominates at most `n`
//! positive roots. The table of n-small roots is built breadth-first from the
//! simple roots using the ascent rule: for `B(a_s, beta) < 0`,
//! `D(s beta) = s(D(beta)) ∪ {a_s}` when `B(a_s, beta) <= -1`, and
//! `s(D(beta))` otherwise.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::coxeter::{determinant, gens_of, positive_definite, CoxeterSystem, Element, Gen, GenSet, RootId, RootVector};
use crate::error::{Error, Result};
use crate::field::{FieldContext, Scalar};

/// Type of a standard parabolic subgroup.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TypeClass {
    Finite,
    Affine,
    Indefinite,
}

/// Classifies the standard parabolic subgroup on `set`.
///
/// Reducible subsets that are not finite are reported as `Indefinite`;
/// affine type is only recognized on connected subsets.
pub fn classify_type(sys: &CoxeterSystem, set: GenSet) -> Result<TypeClass> {
    if set == 0 {
        return Err(Error::EmptySubset);
    }
    let field = sys.field();
    if positive_definite(field, sys.gram_restricted(set)) {
        return Ok(TypeClass::Finite);
    }
    if sys.components(set).len() != 1 {
        return Ok(TypeClass::Indefinite);
    }
    if !determinant(field, sys.gram_restricted(set)).is_zero() {
        return Ok(TypeClass::Indefinite);
    }
    // Connected, singular, every proper subdiagram finite.
    let all_proper_finite = gens_of(set)
        .into_iter()
        .all(|i| positive_definite(field, sys.gram_restricted(set & !(1 << i))));
    Ok(if all_proper_finite {
        TypeClass::Affine
    } else {
        TypeClass::Indefinite
    })
}

/// Image of a table root under a simple reflection.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Transition {
    /// Another (or the same) small root, by node id.
    Node(u32),
    /// The root was `a_s` itself.
    Negative,
    /// The image is positive but not n-small.
    Exit,
}

#[derive(Clone, Debug)]
pub struct SmallRootNode {
    pub root: RootId,
    pub vector: RootVector,
    /// Length of the shortest element sending the root negative.
    pub depth: u32,
    /// Positive roots strictly dominated by this one, sorted.
    pub dominated: Vec<RootId>,
    pub support: GenSet,
    pub spherical: bool,
    /// Indexed by generator.
    pub transitions: Vec<Transition>,
}

impl SmallRootNode {
    /// `dp_inf`: the number of strictly dominated positive roots.
    pub fn dp_inf(&self) -> usize {
        self.dominated.len()
    }
}

/// The n-small roots of a Coxeter system, simple roots first.
#[derive(Clone, Debug)]
pub struct SmallRootTable {
    level: usize,
    rank: usize,
    nodes: Vec<SmallRootNode>,
    index: HashMap<RootId, u32>,
}

impl SmallRootTable {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SmallRootNode] {
        &self.nodes
    }

    pub fn node(&self, id: u32) -> &SmallRootNode {
        &self.nodes[id as usize]
    }

    pub fn node_of(&self, root: RootId) -> Option<u32> {
        self.index.get(&root).copied()
    }

    pub fn contains(&self, root: RootId) -> bool {
        self.index.contains_key(&root)
    }

    pub fn transition(&self, node: u32, s: Gen) -> Transition {
        self.nodes[node as usize].transitions[s as usize]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `Σ_n(w) = N(w) ∩ Σ_n` as sorted node ids.
    pub fn small_inversion_set(&self, w: &Element) -> Vec<u32> {
        let mut out: Vec<u32> = w.inv().iter().filter_map(|r| self.node_of(*r)).collect();
        out.sort_unstable();
        out
    }

    /// Node ids of spherical small roots, and whether all small roots are spherical.
    pub fn spherical_analysis(&self) -> (Vec<u32>, bool) {
        let sph: Vec<u32> = (0..self.nodes.len() as u32)
            .filter(|&i| self.nodes[i as usize].spherical)
            .collect();
        let all = sph.len() == self.nodes.len();
        (sph, all)
    }

    /// Human-readable dump: one line per root.
    pub fn dump(&self, sys: &CoxeterSystem) -> String {
        let field = sys.field();
        let mut out = String::new();
        let _ = writeln!(out, "# id\tdepth\tdp_inf\tsupport\tspherical\tcoords\tapprox");
        for (i, node) in self.nodes.iter().enumerate() {
            let exact: Vec<String> = node.vector.coords().iter().map(|c| field.format(c)).collect();
            let approx: Vec<String> = node
                .vector
                .coords()
                .iter()
                .map(|c| format!("{:.6}", field.to_f64(c)))
                .collect();
            let support: Vec<String> = gens_of(node.support).iter().map(|&s| (s + 1).to_string()).collect();
            let _ = writeln!(
                out,
                "{i}\t{}\t{}\t{{{}}}\t{}\t({})\t({})",
                node.depth,
                node.dp_inf(),
                support.join(","),
                node.spherical,
                exact.join(", "),
                approx.join(", ")
            );
        }
        out
    }
}

/// Builds the table of n-small roots.
pub fn build_small_roots(sys: &CoxeterSystem, n: usize) -> Result<SmallRootTable> {
    let rank = sys.rank();
    let field = sys.field();
    let minus_one = field.from_int(-1);
    let mut sph_cache: HashMap<GenSet, bool> = HashMap::new();
    let mut spherical = |set: GenSet| *sph_cache.entry(set).or_insert_with(|| sys.is_spherical(set));

    let mut nodes: Vec<SmallRootNode> = Vec::new();
    let mut index: HashMap<RootId, u32> = HashMap::new();
    for s in 0..rank as Gen {
        let root = sys.simple_root(s);
        index.insert(root, s as u32);
        nodes.push(SmallRootNode {
            root,
            vector: sys.simple_vector(s),
            depth: 1,
            dominated: Vec::new(),
            support: 1 << s,
            spherical: true,
            transitions: vec![Transition::Exit; rank],
        });
    }
    // Sign of B(a_s, beta) per (node, s), filled as nodes are processed.
    let mut form_signs: Vec<Vec<i8>> = Vec::new();
    let mut i = 0;
    while i < nodes.len() {
        let beta = nodes[i].root;
        let mut signs = vec![0i8; rank];
        for s in 0..rank as Gen {
            if beta == sys.simple_root(s) {
                signs[s as usize] = 1;
                nodes[i].transitions[s as usize] = Transition::Negative;
                continue;
            }
            let b = sys.form_simple(s, &nodes[i].vector);
            let sign = field.sign(&b);
            signs[s as usize] = sign;
            match sign {
                0 => nodes[i].transitions[s as usize] = Transition::Node(i as u32),
                1 => {}
                _ => {
                    let image = sys.reflect_root(s, beta);
                    debug_assert!(!image.negative);
                    let mut dominated: Vec<RootId> = nodes[i]
                        .dominated
                        .iter()
                        .map(|&d| sys.reflect_root(s, d).id)
                        .collect();
                    if field.sign(&(&b - &minus_one)) <= 0 {
                        dominated.push(sys.simple_root(s));
                    }
                    dominated.sort_unstable();
                    dominated.dedup();
                    if dominated.len() > n {
                        nodes[i].transitions[s as usize] = Transition::Exit;
                        continue;
                    }
                    let id = match index.get(&image.id) {
                        Some(&id) => {
                            if nodes[id as usize].dominated != dominated {
                                return Err(Error::Internal(format!(
                                    "inconsistent dominated set for small root {id}"
                                )));
                            }
                            id
                        }
                        None => {
                            let id = nodes.len() as u32;
                            let vector = sys.root(image.id);
                            let support = sys.support(&vector);
                            index.insert(image.id, id);
                            nodes.push(SmallRootNode {
                                root: image.id,
                                vector,
                                depth: nodes[i].depth + 1,
                                dominated,
                                support,
                                spherical: spherical(support),
                                transitions: vec![Transition::Exit; rank],
                            });
                            id
                        }
                    };
                    nodes[i].transitions[s as usize] = Transition::Node(id);
                }
            }
        }
        form_signs.push(signs);
        i += 1;
    }
    // Depth-decreasing steps land on roots of smaller depth, all present.
    for i in 0..nodes.len() {
        for s in 0..rank as Gen {
            if form_signs[i][s as usize] == 1 && nodes[i].transitions[s as usize] != Transition::Negative {
                let image = sys.reflect_root(s, nodes[i].root);
                let id = index.get(&image.id).copied().ok_or_else(|| {
                    Error::Internal("small roots not closed under descent".to_string())
                })?;
                nodes[i].transitions[s as usize] = Transition::Node(id);
            }
        }
    }
    Ok(SmallRootTable {
        level: n,
        rank,
        nodes,
        index,
    })
}

/// Depth by greedy descent: reflect by the first simple reflection with
/// `B(a_s, beta) > 0` until a simple root is reached.
pub fn depth(sys: &CoxeterSystem, root: RootId) -> u32 {
    let field = sys.field();
    let mut cur = root;
    let mut d = 1;
    while cur.0 as usize >= sys.rank() {
        let v = sys.root(cur);
        let s = (0..sys.rank() as Gen)
            .find(|&s| field.sign(&sys.form_simple(s, &v)) > 0)
            .expect("a non-simple positive root has a descent");
        cur = sys.reflect_root(s, cur).id;
        d += 1;
    }
    d
}

/// `a ⪯ b` by the criterion: equal, or `B(a, b) >= 1` with `dp(a) < dp(b)`.
pub fn dominates(sys: &CoxeterSystem, a: &RootVector, b: &RootVector) -> Result<bool> {
    for v in [a, b] {
        if sys.is_positive_vector(v) != Some(true) {
            return Err(Error::NotPositive);
        }
    }
    let (ia, ib) = (sys.intern(a.clone()), sys.intern(b.clone()));
    Ok(dominates_ids(sys, ia, ib))
}

/// [`dominates`] on interned roots.
pub fn dominates_ids(sys: &CoxeterSystem, a: RootId, b: RootId) -> bool {
    if a == b {
        return true;
    }
    let field = sys.field();
    let form = sys.form(&sys.root(a), &sys.root(b));
    field.sign(&(&form - &field.one())) >= 0 && depth(sys, a) < depth(sys, b)
}

/// `dp_inf` of every node recounted from pairwise [`dominates_ids`] within
/// the table. Dominated roots of a small root are themselves small, so the
/// recount is exact.
pub fn recount_dp_inf(sys: &CoxeterSystem, table: &SmallRootTable) -> Vec<usize> {
    let field = sys.field();
    let nodes = table.nodes();
    nodes
        .iter()
        .map(|b| {
            nodes
                .iter()
                .filter(|a| {
                    a.root != b.root
                        && a.depth < b.depth
                        && field.sign(&(&sys.form(&a.vector, &b.vector) - &field.one())) >= 0
                })
                .count()
        })
        .collect()
}

#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<Scalar>,
    constant: Scalar,
    origin: Vec<u64>,
}

fn origin_union(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn origin_count(a: &[u64]) -> u32 {
    a.iter().map(|x| x.count_ones()).sum()
}

/// Divides by the absolute value of the leading coefficient. Returns `None`
/// for constant rows, which are decided on the spot.
fn normalize(field: &FieldContext, mut row: Ineq) -> std::result::Result<Ineq, bool> {
    let Some(lead) = row.coeffs.iter().find(|c| !c.is_zero()).cloned() else {
        // `constant >= 0` either always holds or is infeasible.
        return Err(field.sign(&row.constant) >= 0);
    };
    let mut scale = field.inv(&lead).expect("nonzero");
    if field.sign(&lead) < 0 {
        scale = -&scale;
    }
    if scale != field.one() {
        for c in row.coeffs.iter_mut() {
            *c = field.mul(c, &scale);
        }
        row.constant = field.mul(&row.constant, &scale);
    }
    Ok(row)
}

/// Whether `gamma` is a nonnegative combination of `gens`.
///
/// By Farkas' lemma this fails exactly when some `y` has `g·y >= 0` for every
/// generator and `gamma·y = -1`; that system is decided by Fourier–Motzkin
/// elimination with Chernikov's redundancy rule.
pub fn cone_member(sys: &CoxeterSystem, gamma: &RootVector, gens: &[RootVector]) -> bool {
    let field = sys.field();
    let Some(j) = gamma.coords().iter().position(|c| !c.is_zero()) else {
        return true;
    };
    if gens.contains(gamma) {
        return true;
    }
    let reach = gens.iter().fold(0, |acc, g| acc | sys.support(g));
    if sys.support(gamma) & !reach != 0 {
        return false;
    }
    let dim = gamma.coords().len();
    let words = gens.len().div_ceil(64).max(1);
    let inv_gj = field.inv(&gamma.coords()[j]).expect("nonzero");
    let ratio: Vec<Scalar> = gamma.coords().iter().map(|c| field.mul(c, &inv_gj)).collect();

    // Substitute y_j = (-1 - sum_{l != j} gamma_l y_l) / gamma_j.
    let mut rows: Vec<Ineq> = Vec::new();
    let mut seen: HashSet<(Vec<Scalar>, Scalar)> = HashSet::new();
    for (k, g) in gens.iter().enumerate() {
        let gj = &g.coords()[j];
        let coeffs: Vec<Scalar> = (0..dim)
            .map(|l| {
                if l == j {
                    field.zero()
                } else {
                    &g.coords()[l] - &field.mul(gj, &ratio[l])
                }
            })
            .collect();
        let constant = -&field.mul(gj, &inv_gj);
        let mut origin = vec![0u64; words];
        origin[k / 64] |= 1 << (k % 64);
        match normalize(field, Ineq { coeffs, constant, origin }) {
            Ok(row) => {
                if seen.insert((row.coeffs.clone(), row.constant.clone())) {
                    rows.push(row);
                }
            }
            Err(true) => {}
            Err(false) => return true,
        }
    }

    let mut remaining: Vec<usize> = (0..dim).filter(|&l| l != j).collect();
    let mut eliminated = 0u32;
    while !remaining.is_empty() {
        // Eliminate the variable producing the fewest new rows.
        let (pos_in_remaining, var) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &l)| {
                let p = rows.iter().filter(|r| field.sign(&r.coeffs[l]) > 0).count();
                let q = rows.iter().filter(|r| field.sign(&r.coeffs[l]) < 0).count();
                p * q
            })
            .map(|(i, &l)| (i, l))
            .expect("nonempty");
        remaining.swap_remove(pos_in_remaining);
        eliminated += 1;

        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match field.sign(&r.coeffs[var]) {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => zero.push(r),
            }
        }
        let mut next = zero;
        let mut seen: HashSet<(Vec<Scalar>, Scalar)> =
            next.iter().map(|r| (r.coeffs.clone(), r.constant.clone())).collect();
        for p in &pos {
            for q in &neg {
                let origin = origin_union(&p.origin, &q.origin);
                if origin_count(&origin) > eliminated + 1 {
                    continue;
                }
                // Both rows are normalized, so the coefficients of `var` are
                // a > 0 and -b < 0; combine as b*p + a*q.
                let a = &p.coeffs[var];
                let b = -&q.coeffs[var];
                let coeffs: Vec<Scalar> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .enumerate()
                    .map(|(l, (x, y))| {
                        if l == var {
                            field.zero()
                        } else {
                            &field.mul(&b, x) + &field.mul(a, y)
                        }
                    })
                    .collect();
                let constant = &field.mul(&b, &p.constant) + &field.mul(a, &q.constant);
                match normalize(field, Ineq { coeffs, constant, origin }) {
                    Ok(row) => {
                        if seen.insert((row.coeffs.clone(), row.constant.clone())) {
                            next.push(row);
                        }
                    }
                    Err(true) => {}
                    Err(false) => return true,
                }
            }
        }
        rows = next;
    }
    // Every remaining row is constant and satisfied: a separating y exists.
    false
}

/// [`cone_member`] on interned roots.
pub fn cone_member_ids(sys: &CoxeterSystem, gamma: RootId, gens: &[RootId]) -> bool {
    if gens.contains(&gamma) {
        return true;
    }
    let vectors: Vec<RootVector> = gens.iter().map(|&g| sys.root(g)).collect();
    cone_member(sys, &sys.root(gamma), &vectors)
}

/// Data of an irreducible affine Coxeter system.
#[derive(Clone, Debug)]
pub struct AffineStructure {
    /// Spans the radical of the form; smallest coordinate equal to 1.
    pub delta: RootVector,
    /// Coxeter number of the underlying finite group.
    pub coxeter_number: u64,
    /// Rank of the underlying finite group.
    pub finite_rank: usize,
}

/// Positive roots of the finite standard parabolic on `set`.
pub fn parabolic_positive_roots(sys: &CoxeterSystem, set: GenSet) -> Vec<RootId> {
    let mut seen: HashSet<RootId> = gens_of(set).iter().map(|&s| sys.simple_root(s as Gen)).collect();
    let mut stack: Vec<RootId> = seen.iter().copied().collect();
    while let Some(r) = stack.pop() {
        for s in gens_of(set) {
            let img = sys.reflect_root(s as Gen, r);
            if !img.negative && seen.insert(img.id) {
                stack.push(img.id);
            }
        }
    }
    let mut out: Vec<RootId> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

pub fn affine_structure(sys: &CoxeterSystem) -> Result<AffineStructure> {
    if classify_type(sys, sys.all_gens())? != TypeClass::Affine {
        return Err(Error::NotAffine);
    }
    let field = sys.field();
    let rank = sys.rank();
    // Null vector of the Gram matrix: reduce to echelon form; the corank is 1.
    let mut m: Vec<Vec<Scalar>> = (0..rank).map(|i| (0..rank).map(|j| sys.gram(i, j).clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..rank {
        let Some(p) = (row..rank).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = field.inv(&m[row][col])?;
        for c in 0..rank {
            m[row][c] = field.mul(&m[row][c], &inv);
        }
        for r in 0..rank {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..rank {
                    let delta = field.mul(&f, &m[row][c]);
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free = (0..rank)
        .find(|c| !pivots.contains(c))
        .ok_or_else(|| Error::Internal("affine Gram matrix is nonsingular".into()))?;
    let mut delta = vec![field.zero(); rank];
    delta[free] = field.one();
    for (r, &c) in pivots.iter().enumerate() {
        delta[c] = -&m[r][free];
    }
    if field.sign(&delta[0]) < 0 {
        delta = delta.iter().map(|x| -x).collect();
    }
    let min = delta
        .iter()
        .min_by(|a, b| field.cmp(a, b))
        .cloned()
        .expect("rank >= 2");
    if field.sign(&min) <= 0 {
        return Err(Error::Internal("radical vector is not positive".into()));
    }
    let inv_min = field.inv(&min)?;
    let delta = RootVector(delta.iter().map(|x| field.mul(x, &inv_min)).collect());

    let finite_rank = rank - 1;
    let best = (0..rank)
        .map(|i| parabolic_positive_roots(sys, sys.all_gens() & !(1 << i)).len())
        .max()
        .expect("rank >= 2");
    Ok(AffineStructure {
        delta,
        coxeter_number: (2 * best / finite_rank) as u64,
        finite_rank,
    })
}

/// `beta ⪯ beta'` in affine type: `beta' - beta` is a nonnegative multiple of `delta`.
pub fn affine_dominance_oracle(
    sys: &CoxeterSystem,
    aff: &AffineStructure,
    beta: &RootVector,
    beta_prime: &RootVector,
) -> Result<bool> {
    for v in [beta, beta_prime] {
        if sys.is_positive_vector(v) != Some(true) {
            return Err(Error::NotPositive);
        }
    }
    let field = sys.field();
    let diff: Vec<Scalar> = beta_prime.coords().iter().zip(beta.coords()).map(|(a, b)| a - b).collect();
    // delta[i] == 1 for some i; the candidate multiple is diff[i].
    let i = aff
        .delta
        .coords()
        .iter()
        .position(|c| *c == field.one())
        .expect("normalized delta");
    let k = &diff[i];
    if field.sign(k) < 0 {
        return Ok(false);
    }
    Ok(diff
        .iter()
        .zip(aff.delta.coords())
        .all(|(d, c)| *d == field.mul(k, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_coxeter_system;

    #[test]
    fn classification() {
        let a2 = parse_coxeter_system("A2").unwrap();
        assert_eq!(classify_type(&a2, 0b11).unwrap(), TypeClass::Finite);
        let at = parse_coxeter_system("triangle(3,3,3)").unwrap();
        assert_eq!(classify_type(&at, 0b111).unwrap(), TypeClass::Affine);
        let ind = parse_coxeter_system("triangle(3,3,inf)").unwrap();
        assert_eq!(classify_type(&ind, 0b111).unwrap(), TypeClass::Indefinite);
        assert_eq!(classify_type(&ind, 0).unwrap_err(), Error::EmptySubset);
        let i2 = parse_coxeter_system("I2(inf)").unwrap();
        assert_eq!(classify_type(&i2, 0b11).unwrap(), TypeClass::Affine);
    }

    #[test]
    fn infinite_dihedral_table() {
        let sys = parse_coxeter_system("I2(inf)").unwrap();
        let t = build_small_roots(&sys, 0).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.transition(1, 0), Transition::Exit);
        let st = sys.element_from_word(&[0, 1]);
        assert_eq!(t.small_inversion_set(&st), vec![0]);
        assert_eq!(t.spherical_analysis(), (vec![0, 1], true));
    }

    #[test]
    fn finite_table_is_all_roots() {
        let sys = parse_coxeter_system("A2").unwrap();
        assert_eq!(build_small_roots(&sys, 0).unwrap().len(), 3);
    }

    #[test]
    fn dominance_examples() {
        let sys = parse_coxeter_system("I2(inf)").unwrap();
        let f = sys.field();
        let a_s = sys.simple_vector(0);
        let a_t = sys.simple_vector(1);
        assert!(!dominates(&sys, &a_s, &a_t).unwrap());
        assert!(!dominates(&sys, &a_t, &a_s).unwrap());
        let big = RootVector(vec![f.from_int(2), f.one()]);
        assert!(dominates(&sys, &a_s, &big).unwrap());
        let neg = RootVector(vec![f.from_int(-1), f.zero()]);
        assert_eq!(dominates(&sys, &neg, &a_s).unwrap_err(), Error::NotPositive);
    }

    #[test]
    fn cone_examples() {
        let sys = parse_coxeter_system("~A2").unwrap();
        let f = sys.field();
        let v = |c: [i64; 3]| RootVector(c.iter().map(|&x| f.from_int(x)).collect());
        assert!(cone_member(&sys, &v([1, 1, 0]), &[v([1, 0, 0]), v([0, 1, 0])]));
        assert!(!cone_member(&sys, &v([0, 1, 0]), &[v([1, 0, 0])]));
        assert!(cone_member(&sys, &v([1, 0, 1]), &[v([1, 0, 0]), v([0, 0, 1])]));
        assert!(!cone_member(&sys, &v([1, 0, 0]), &[v([1, 1, 0]), v([0, 0, 1])]));
        assert!(cone_member(&sys, &v([1, 1, 0]), &[v([2, 1, 1]), v([0, 1, -1]), v([0, 0, 1])]));
    }

    #[test]
    fn affine_data() {
        let sys = parse_coxeter_system("~A2").unwrap();
        let aff = affine_structure(&sys).unwrap();
        assert_eq!(aff.coxeter_number, 3);
        let f = sys.field();
        assert_eq!(aff.delta, RootVector(vec![f.one(), f.one(), f.one()]));
        let a1 = sys.simple_vector(1);
        let shifted = RootVector(vec![f.one(), f.from_int(2), f.one()]);
        assert!(affine_dominance_oracle(&sys, &aff, &a1, &shifted).unwrap());
        assert!(affine_dominance_oracle(&sys, &aff, &a1, &a1).unwrap());
        assert!(!affine_dominance_oracle(&sys, &aff, &a1, &sys.simple_vector(2)).unwrap());
        for (name, h) in [("~C2", 4), ("~G2", 6), ("~B3", 6), ("~C3", 6), ("~A3", 4), ("~D5", 8)] {
            let sys = parse_coxeter_system(name).unwrap();
            assert_eq!(affine_structure(&sys).unwrap().coxeter_number, h, "{name}");
        }
        let a2 = parse_coxeter_system("A2").unwrap();
        assert_eq!(affine_structure(&a2).unwrap_err(), Error::NotAffine);
    }

    #[test]
    fn sigma_sizes_level_zero() {
        for (name, size, sph) in [("~A2", 6, 6), ("~C2", 8, 7), ("~G2", 12, 8)] {
            let sys = parse_coxeter_system(name).unwrap();
            let t = build_small_roots(&sys, 0).unwrap();
            assert_eq!(t.len(), size, "{name}");
            assert_eq!(t.spherical_analysis().0.len(), sph, "{name}");
        }
    }
}
