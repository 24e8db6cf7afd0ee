//! Coxeter systems and their Tits representation.
//!
//! A [`CoxeterSystem`] owns the Coxeter matrix, the field of definition of
//! its bilinear form, the Gram matrix, and an interning store for positive
//! roots. Roots are referred to by [`RootId`]; the action of simple
//! reflections on interned roots is cached, so group computations never
//! redo field arithmetic for a root they have already seen.

mod element;
mod presets;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

pub use element::{weak_leq, Element};
pub use presets::{parse_coxeter_system, preset_matrix};

use crate::error::{Error, Result};
use crate::field::{FieldContext, Scalar};

/// Index of a simple reflection.
pub type Gen = u8;

/// A set of generators as a bit mask.
pub type GenSet = u64;

/// Coxeter matrix with `None` standing for an infinite label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Option<u64>>,
}

impl CoxeterMatrix {
    /// Validates a full matrix given row by row.
    pub fn new(rows: Vec<Vec<Option<u64>>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 || rank > 64 {
            return Err(Error::Parse(format!("rank {rank} out of range 1..=64")));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::Parse(format!("row {} has {} entries", i + 1, row.len())));
            }
        }
        for i in 0..rank {
            if rows[i][i] != Some(1) {
                return Err(Error::BadDiagonal(i));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Asymmetric(i, j));
                }
                if let Some(m) = rows[i][j] {
                    if m < 2 {
                        return Err(Error::InvalidLabel(m));
                    }
                }
            }
        }
        Ok(CoxeterMatrix {
            rank,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix with all off-diagonal labels 2 except the listed edges.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, Option<u64>)]) -> Result<Self> {
        let mut rows = vec![vec![Some(2); rank]; rank];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for &(i, j, m) in edges {
            if i >= rank || j >= rank || i == j {
                return Err(Error::Parse(format!("bad edge ({}, {})", i + 1, j + 1)));
            }
            rows[i][j] = m;
            rows[j][i] = m;
        }
        CoxeterMatrix::new(rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m(s, t)`, `None` meaning infinity.
    pub fn m(&self, s: usize, t: usize) -> Option<u64> {
        self.entries[s * self.rank + t]
    }

    pub fn finite_labels(&self) -> Vec<u64> {
        let mut labels: Vec<u64> = self.entries.iter().flatten().copied().filter(|&m| m >= 2).collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    /// Whether `s` and `t` are joined in the Coxeter graph (label not 2).
    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        s != t && self.m(s, t) != Some(2)
    }
}

/// Identifier of an interned positive root.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub u32);

/// A root given as `+beta` or `-beta` for an interned positive root `beta`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub id: RootId,
    pub negative: bool,
}

impl SignedRoot {
    pub fn positive(id: RootId) -> Self {
        SignedRoot { id, negative: false }
    }
}

/// Coordinates of a vector in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<Scalar>);

impl RootVector {
    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }
}

const UNKNOWN: u32 = u32::MAX;
const NEG_BIT: u32 = 1 << 31;

#[derive(Default)]
struct RootStore {
    vectors: Vec<RootVector>,
    index: HashMap<RootVector, RootId>,
    reflect: Vec<u32>,
}

/// A finitely generated Coxeter system with its geometric representation.
pub struct CoxeterSystem {
    name: String,
    matrix: CoxeterMatrix,
    field: FieldContext,
    gram: Vec<Vec<Scalar>>,
    store: RwLock<RootStore>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("name", &self.name)
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl CoxeterSystem {
    /// Builds the Tits representation: `B(a_s, a_t) = -cos(pi/m)`, and `-1`
    /// for infinite labels.
    pub fn new(name: impl Into<String>, matrix: CoxeterMatrix) -> Result<Self> {
        let field = FieldContext::new(&matrix.finite_labels())?;
        let rank = matrix.rank();
        let mut gram = vec![vec![field.zero(); rank]; rank];
        for (s, row) in gram.iter_mut().enumerate() {
            for (t, entry) in row.iter_mut().enumerate() {
                *entry = match matrix.m(s, t) {
                    None => field.from_int(-1),
                    Some(1) => field.one(),
                    Some(m) => -&field.cos_pi_over(m)?,
                };
            }
        }
        let sys = CoxeterSystem {
            name: name.into(),
            matrix,
            field,
            gram,
            store: RwLock::new(RootStore::default()),
        };
        for s in 0..rank {
            let id = sys.intern(sys.simple_vector(s as Gen));
            debug_assert_eq!(id.0 as usize, s);
        }
        Ok(sys)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The standard parabolic subsystem `(W_I, I)`, its generators
    /// renumbered in increasing order.
    pub fn parabolic_subsystem(&self, set: GenSet) -> Result<CoxeterSystem> {
        let gens = gens_of(set);
        if gens.is_empty() {
            return Err(Error::EmptySubset);
        }
        let rows = gens
            .iter()
            .map(|&s| gens.iter().map(|&t| self.matrix.m(s, t)).collect())
            .collect();
        let names: Vec<String> = gens.iter().map(|&s| (s + 1).to_string()).collect();
        CoxeterSystem::new(format!("{}[{}]", self.name, names.join(",")), CoxeterMatrix::new(rows)?)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn gram(&self, s: usize, t: usize) -> &Scalar {
        &self.gram[s][t]
    }

    pub fn all_gens(&self) -> GenSet {
        if self.rank() == 64 {
            u64::MAX
        } else {
            (1u64 << self.rank()) - 1
        }
    }

    pub fn gen_name(&self, s: Gen) -> String {
        (s as usize + 1).to_string()
    }

    /// Renders a word: concatenated digits for rank at most 9, dotted otherwise.
    pub fn format_word(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        let parts: Vec<String> = word.iter().map(|&s| self.gen_name(s)).collect();
        if self.rank() <= 9 {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    /// Parses a word written as by [`format_word`](Self::format_word).
    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Vec::new());
        }
        let parts: Vec<&str> = if text.contains('.') || text.contains(' ') {
            text.split(['.', ' ']).filter(|p| !p.is_empty()).collect()
        } else if self.rank() <= 9 {
            text.split("").filter(|p| !p.is_empty()).collect()
        } else {
            vec![text]
        };
        parts
            .into_iter()
            .map(|p| {
                let k: usize = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad generator `{p}` in word `{text}`")))?;
                if k == 0 || k > self.rank() {
                    return Err(Error::Parse(format!("generator {k} out of range")));
                }
                Ok((k - 1) as Gen)
            })
            .collect()
    }

    pub fn simple_vector(&self, s: Gen) -> RootVector {
        let mut v = vec![self.field.zero(); self.rank()];
        v[s as usize] = self.field.one();
        RootVector(v)
    }

    pub fn simple_root(&self, s: Gen) -> RootId {
        RootId(s as u32)
    }

    /// `B(u, v)`.
    pub fn form(&self, u: &RootVector, v: &RootVector) -> Scalar {
        let mut acc = self.field.zero();
        for (i, ui) in u.0.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let gv = self.form_simple(i as Gen, v);
            acc = &acc + &self.field.mul(ui, &gv);
        }
        acc
    }

    /// `B(a_s, v)`.
    pub fn form_simple(&self, s: Gen, v: &RootVector) -> Scalar {
        let mut acc = self.field.zero();
        for (t, vt) in v.0.iter().enumerate() {
            if vt.is_zero() {
                continue;
            }
            let g = &self.gram[s as usize][t];
            if g.is_zero() {
                continue;
            }
            acc = &acc + &self.field.mul(g, vt);
        }
        acc
    }

    /// `s(v) = v - 2 B(a_s, v) a_s`.
    pub fn reflect_vector(&self, s: Gen, v: &RootVector) -> RootVector {
        let b = self.form_simple(s, v);
        let mut out = v.clone();
        let i = s as usize;
        out.0[i] = &(&out.0[i] - &b) - &b;
        out
    }

    /// Sign pattern of a nonzero vector: `Some(true)` if all coordinates are
    /// nonnegative, `Some(false)` if all are nonpositive, `None` otherwise.
    pub fn is_positive_vector(&self, v: &RootVector) -> Option<bool> {
        let mut pos = false;
        let mut neg = false;
        for c in &v.0 {
            match self.field.sign(c) {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        match (pos, neg) {
            (true, false) => Some(true),
            (false, true) => Some(false),
            _ => None,
        }
    }

    /// Interns a positive root.
    pub fn intern(&self, v: RootVector) -> RootId {
        if let Some(&id) = self.store.read().expect("root store").index.get(&v) {
            return id;
        }
        let mut store = self.store.write().expect("root store");
        if let Some(&id) = store.index.get(&v) {
            return id;
        }
        let id = RootId(store.vectors.len() as u32);
        assert!(id.0 < NEG_BIT, "root store overflow");
        store.vectors.push(v.clone());
        store.index.insert(v, id);
        let rank = self.rank();
        store.reflect.extend(std::iter::repeat_n(UNKNOWN, rank));
        id
    }

    /// Looks up a positive root without interning it.
    pub fn lookup(&self, v: &RootVector) -> Option<RootId> {
        self.store.read().expect("root store").index.get(v).copied()
    }

    pub fn root(&self, id: RootId) -> RootVector {
        self.store.read().expect("root store").vectors[id.0 as usize].clone()
    }

    /// Number of positive roots interned so far.
    pub fn interned_roots(&self) -> usize {
        self.store.read().expect("root store").vectors.len()
    }

    /// `s(beta)` for an interned positive root `beta`.
    pub fn reflect_root(&self, s: Gen, id: RootId) -> SignedRoot {
        if id.0 == s as u32 {
            return SignedRoot {
                id,
                negative: true,
            };
        }
        let rank = self.rank();
        let slot = id.0 as usize * rank + s as usize;
        let v = {
            let store = self.store.read().expect("root store");
            let cached = store.reflect[slot];
            if cached != UNKNOWN {
                return decode(cached);
            }
            store.vectors[id.0 as usize].clone()
        };
        let image = self.reflect_vector(s, &v);
        let target = self.intern(image);
        let mut store = self.store.write().expect("root store");
        store.reflect[slot] = target.0;
        SignedRoot::positive(target)
    }

    pub fn reflect_signed(&self, s: Gen, r: SignedRoot) -> SignedRoot {
        let mut out = self.reflect_root(s, r.id);
        out.negative ^= r.negative;
        out
    }

    /// `r_1 ... r_k (root)` for `word = r_1 ... r_k`.
    pub fn act_word(&self, word: &[Gen], root: SignedRoot) -> SignedRoot {
        word.iter()
            .rev()
            .fold(root, |acc, &s| self.reflect_signed(s, acc))
    }

    /// Generators with a nonzero coordinate in `v`.
    pub fn support(&self, v: &RootVector) -> GenSet {
        v.0.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// Gram matrix restricted to the generators in `set`, in index order.
    pub fn gram_restricted(&self, set: GenSet) -> Vec<Vec<Scalar>> {
        let idx = gens_of(set);
        idx.iter()
            .map(|&i| idx.iter().map(|&j| self.gram[i][j].clone()).collect())
            .collect()
    }

    /// Whether the Gram matrix on `set` is positive definite, i.e. whether the
    /// standard parabolic subgroup on `set` is finite.
    pub fn is_spherical(&self, set: GenSet) -> bool {
        positive_definite(&self.field, self.gram_restricted(set))
    }

    /// Connected components of the Coxeter graph restricted to `set`.
    pub fn components(&self, set: GenSet) -> Vec<GenSet> {
        let mut left = set;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in gens_of(set) {
                    if comp & (1 << w) == 0 && self.matrix.adjacent(v, w) {
                        comp |= 1 << w;
                        stack.push(w);
                    }
                }
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }
}

fn decode(raw: u32) -> SignedRoot {
    SignedRoot {
        id: RootId(raw & !NEG_BIT),
        negative: raw & NEG_BIT != 0,
    }
}

/// Indices of the bits set in `set`.
/// A word over `set` rewritten in the letters of
/// [`CoxeterSystem::parabolic_subsystem`]; `None` if it leaves `set`.
pub fn parabolic_word(word: &[Gen], set: GenSet) -> Option<Vec<Gen>> {
    word.iter()
        .map(|&s| (set >> s & 1 == 1).then(|| (set & ((1 << s) - 1)).count_ones() as Gen))
        .collect()
}

pub fn gens_of(set: GenSet) -> Vec<usize> {
    (0..64).filter(|i| set & (1u64 << i) != 0).collect()
}

/// Positive definiteness by Gaussian elimination: all pivots positive.
pub fn positive_definite(field: &FieldContext, mut m: Vec<Vec<Scalar>>) -> bool {
    let n = m.len();
    for k in 0..n {
        if field.sign(&m[k][k]) <= 0 {
            return false;
        }
        let pivot_inv = field.inv(&m[k][k]).expect("nonzero pivot");
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = field.mul(&m[i][k], &pivot_inv);
            for j in k..n {
                let delta = field.mul(&f, &m[k][j]);
                m[i][j] = &m[i][j] - &delta;
            }
        }
    }
    true
}

/// Determinant by Gaussian elimination over the field.
pub fn determinant(field: &FieldContext, mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = field.one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return field.zero();
        };
        if p != k {
            m.swap(p, k);
            det = -&det;
        }
        det = field.mul(&det, &m[k][k]);
        let pivot_inv = field.inv(&m[k][k]).expect("nonzero pivot");
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = field.mul(&m[i][k], &pivot_inv);
            for j in k..n {
                let delta = field.mul(&f, &m[k][j]);
                m[i][j] = &m[i][j] - &delta;
            }
        }
    }
    det
}
