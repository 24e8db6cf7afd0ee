//! Statistics rows and per-instance conjecture checks.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::automata::{build_canonical_automaton, build_shadow_automaton, minimize_with_map, Automaton, Payload, NONE};
use crate::coxeter::{CoxeterSystem, Gen};
use crate::error::{Error, Result};
use crate::garside::{low_elements, low_elements_detailed, smallest_shadow, verify_shadow, Closure, JoinStrategy, Verdict};
use crate::par::Exec;
use crate::smallroots::build_small_roots;

/// How `S̃` is computed.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShadowStrategy {
    /// Cone search up to rank 3, joins inside `L_0` above.
    #[default]
    Auto,
    ConeSearch,
    AmbientLow,
}

/// Limits and strategies shared by the reports.
#[derive(Copy, Clone, Debug, Serialize)]
pub struct Caps {
    /// Fixed join cap; `None` uses the default cap of the current set.
    pub join_cap: Option<usize>,
    pub budget: usize,
    pub strategy: ShadowStrategy,
    #[serde(skip)]
    pub exec: Exec,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            join_cap: None,
            budget: 100_000,
            strategy: ShadowStrategy::Auto,
            exec: Exec::Parallel,
        }
    }
}

/// `S̃` according to `caps`.
pub fn compute_smallest_shadow(sys: &CoxeterSystem, caps: &Caps) -> Result<Closure> {
    let ambient = match caps.strategy {
        ShadowStrategy::ConeSearch => false,
        ShadowStrategy::AmbientLow => true,
        ShadowStrategy::Auto => sys.rank() > 3,
    };
    if ambient {
        let table = build_small_roots(sys, 0)?;
        let low = low_elements(sys, &table, caps.exec);
        if low.len() > caps.budget {
            return Err(Error::BudgetExceeded(caps.budget));
        }
        smallest_shadow(sys, JoinStrategy::Ambient(&low), caps.budget, caps.exec)
    } else {
        smallest_shadow(sys, JoinStrategy::ConeSearch { cap: caps.join_cap }, caps.budget, caps.exec)
    }
}

/// One row of the statistics table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsRow {
    pub group: String,
    pub a0: usize,
    /// `None` when the closure failed.
    pub a_tilde: Option<usize>,
    pub a_min: usize,
    pub sigma: usize,
    pub sigma_sph: usize,
    pub cap_stable: bool,
}

pub const CSV_HEADER: &str = "group,a0,a_tilde,a_min,sigma,sigma_sph,cap_stable";

impl StatsRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.group,
            self.a0,
            self.a_tilde.map_or_else(|| "indeterminate".to_string(), |x| x.to_string()),
            self.a_min,
            self.sigma,
            self.sigma_sph,
            self.cap_stable
        )
    }
}

pub fn stats_csv(rows: &[StatsRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

pub fn stats_row(sys: &CoxeterSystem, caps: &Caps) -> Result<StatsRow> {
    let table = build_small_roots(sys, 0)?;
    let a0 = build_canonical_automaton(sys, &table);
    let (min, _) = minimize_with_map(&a0, caps.exec);
    let (sph, _) = table.spherical_analysis();
    let (a_tilde, cap_stable) = match compute_smallest_shadow(sys, caps) {
        Ok(c) => {
            let a = build_shadow_automaton(sys, &c.shadow, caps.exec)?;
            (Some(a.len()), c.cap_stable)
        }
        Err(Error::BudgetExceeded(_)) => (None, false),
        Err(e) => return Err(e),
    };
    Ok(StatsRow {
        group: sys.name().to_string(),
        a0: a0.len(),
        a_tilde,
        a_min: min.len(),
        sigma: table.len(),
        sigma_sph: sph.len(),
        cap_stable,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// `A_S̃` is minimal.
    One,
    /// `A_0` is minimal iff every small root is spherical.
    Two,
    /// `L_n` is a Garside shadow.
    DyHo1(usize),
    /// `w -> Σ_n(w)` is a bijection from `L_n` onto the states of `A_n`.
    DyHo2(usize),
}

impl Conjecture {
    pub fn id(&self) -> String {
        match self {
            Conjecture::One => "conj1".into(),
            Conjecture::Two => "conj2".into(),
            Conjecture::DyHo1(n) => format!("dyho1({n})"),
            Conjecture::DyHo2(n) => format!("dyho2({n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReportVerdict {
    Holds,
    Fails { witness: Value },
    Indeterminate { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub group: String,
    pub conjecture: String,
    pub verdict: ReportVerdict,
    pub numbers: BTreeMap<String, Value>,
    /// Present when the automaton was not minimal: two reading words whose
    /// states minimization merges.
    pub merged_states: Option<(String, String)>,
    pub caps: Caps,
}

impl ConjectureReport {
    /// Pretty JSON with keys sorted.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }
}

/// Whether states `p` and `q` have the same defined transitions along every
/// word of length at most `depth`.
pub fn same_behaviour(a: &Automaton, p: u32, q: u32, depth: usize) -> bool {
    if depth == 0 {
        return true;
    }
    (0..a.letters() as Gen).all(|s| match (a.next(p, s), a.next(q, s)) {
        (None, None) => true,
        (Some(x), Some(y)) => same_behaviour(a, x, y, depth - 1),
        _ => false,
    })
}

fn reading_of(a: &Automaton, q: u32) -> Vec<Gen> {
    // Shortest word reaching q.
    let mut prev: Vec<Option<(u32, Gen)>> = vec![None; a.len()];
    let mut seen = vec![false; a.len()];
    seen[a.initial() as usize] = true;
    let mut queue = std::collections::VecDeque::from([a.initial()]);
    while let Some(x) = queue.pop_front() {
        if x == q {
            break;
        }
        for s in 0..a.letters() as Gen {
            if let Some(y) = a.next(x, s) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    prev[y as usize] = Some((x, s));
                    queue.push_back(y);
                }
            }
        }
    }
    let mut word = Vec::new();
    let mut cur = q;
    while let Some((p, s)) = prev[cur as usize] {
        word.push(s);
        cur = p;
    }
    word.reverse();
    match a.payload(q) {
        Payload::SmallSet { reading, .. } if reading.len() == word.len() => reading.clone(),
        _ => word,
    }
}

/// Two reading words whose states `map` merges. In rank three the pair
/// `su`, `tsu` (with `m(s,u) = 2`) is tried first.
pub fn merged_pair(sys: &CoxeterSystem, a: &Automaton, map: &[u32]) -> Option<(Vec<Gen>, Vec<Gen>)> {
    if sys.rank() == 3 {
        for (s, t, u) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
            if sys.matrix().m(s as usize, u as usize) != Some(2) {
                continue;
            }
            let (w1, w2) = (vec![s, u], vec![t, s, u]);
            if let (Some(p), Some(q)) = (a.run(&w1), a.run(&w2)) {
                if p != q && map[p as usize] == map[q as usize] {
                    return Some((w1, w2));
                }
            }
        }
    }
    let mut first: BTreeMap<u32, u32> = BTreeMap::new();
    for (q, &c) in map.iter().enumerate() {
        if c == NONE {
            continue;
        }
        if let Some(&p) = first.get(&c) {
            return Some((reading_of(a, p), reading_of(a, q as u32)));
        }
        first.insert(c, q as u32);
    }
    None
}

pub fn check_conjecture(sys: &CoxeterSystem, which: Conjecture, caps: &Caps) -> Result<ConjectureReport> {
    let mut numbers = BTreeMap::new();
    let mut merged_states = None;
    let fmt_pair = |(a, b): (Vec<Gen>, Vec<Gen>)| (sys.format_word(&a), sys.format_word(&b));
    let verdict = match which {
        Conjecture::One => match compute_smallest_shadow(sys, caps) {
            Err(Error::BudgetExceeded(b)) => ReportVerdict::Indeterminate {
                reason: format!("closure exceeded the element budget {b}"),
            },
            Err(e) => return Err(e),
            Ok(closure) => {
                let a = build_shadow_automaton(sys, &closure.shadow, caps.exec)?;
                let (m, map) = minimize_with_map(&a, caps.exec);
                numbers.insert("a_tilde".into(), json!(a.len()));
                numbers.insert("a_tilde_min".into(), json!(m.len()));
                numbers.insert("cap_stable".into(), json!(closure.cap_stable));
                if let Some(cap) = closure.cap {
                    numbers.insert("join_cap_used".into(), json!(cap));
                }
                if a.len() != m.len() {
                    merged_states = merged_pair(sys, &a, &map).map(fmt_pair);
                }
                if !closure.cap_stable {
                    ReportVerdict::Indeterminate {
                        reason: format!("closure not stable at join cap {}", closure.cap.unwrap_or(0)),
                    }
                } else if a.len() == m.len() {
                    ReportVerdict::Holds
                } else {
                    ReportVerdict::Fails {
                        witness: json!({ "merged_states": merged_states }),
                    }
                }
            }
        },
        Conjecture::Two => {
            let table = build_small_roots(sys, 0)?;
            let a0 = build_canonical_automaton(sys, &table);
            let (m, map) = minimize_with_map(&a0, caps.exec);
            let (sph, all_sph) = table.spherical_analysis();
            let minimal = m.len() == a0.len();
            numbers.insert("a0".into(), json!(a0.len()));
            numbers.insert("a_min".into(), json!(m.len()));
            numbers.insert("minimal".into(), json!(minimal));
            numbers.insert("sigma".into(), json!(table.len()));
            numbers.insert("sigma_sph".into(), json!(sph.len()));
            numbers.insert("sigma_eq_sph".into(), json!(all_sph));
            if !minimal {
                merged_states = merged_pair(sys, &a0, &map).map(fmt_pair);
            }
            if minimal == all_sph {
                ReportVerdict::Holds
            } else {
                ReportVerdict::Fails {
                    witness: json!({ "minimal": minimal, "sigma_eq_sph": all_sph, "merged_states": merged_states }),
                }
            }
        }
        Conjecture::DyHo1(n) => {
            let table = build_small_roots(sys, n)?;
            let low = low_elements(sys, &table, caps.exec);
            numbers.insert("low".into(), json!(low.len()));
            match verify_shadow(sys, &low, caps.join_cap, caps.exec) {
                Verdict::Shadow => ReportVerdict::Holds,
                Verdict::NotShadow(reason) => ReportVerdict::Fails { witness: json!(reason) },
                Verdict::IndeterminateAtCap(cap) => ReportVerdict::Indeterminate {
                    reason: format!("join search reached cap {cap}"),
                },
            }
        }
        Conjecture::DyHo2(n) => {
            let table = build_small_roots(sys, n)?;
            let low = low_elements_detailed(sys, &table, caps.exec);
            let an = build_canonical_automaton(sys, &table);
            let mut images: BTreeMap<Vec<u32>, Vec<Gen>> = BTreeMap::new();
            let mut collision = None;
            for l in &low {
                if let Some(prev) = images.insert(l.small.clone(), l.element.word().to_vec()) {
                    collision.get_or_insert((prev, l.element.word().to_vec()));
                }
            }
            numbers.insert("low".into(), json!(low.len()));
            numbers.insert("images".into(), json!(images.len()));
            numbers.insert("states".into(), json!(an.len()));
            match collision {
                Some(pair) => ReportVerdict::Fails {
                    witness: json!({ "same_small_inversions": fmt_pair(pair) }),
                },
                None if images.len() == an.len() => ReportVerdict::Holds,
                None => ReportVerdict::Fails {
                    witness: json!({ "low": low.len(), "states": an.len() }),
                },
            }
        }
    };
    Ok(ConjectureReport {
        group: sys.name().to_string(),
        conjecture: which.id(),
        verdict,
        numbers,
        merged_states,
        caps: *caps,
    })
}
