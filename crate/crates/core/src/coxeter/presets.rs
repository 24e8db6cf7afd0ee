//! Named Coxeter systems and the plain-text group description format.
//!
//! A description is either `type <preset>` or a block
//!
//! ```text
//! rank 3
//! m 1 2 3
//! m 2 3 inf
//! ```
//!
//! where unlisted off-diagonal labels default to 2. A bare preset name is
//! accepted as shorthand for `type <preset>`.

use super::{CoxeterMatrix, CoxeterSystem};
use crate::error::{Error, Result};

type Edge = (usize, usize, Option<u64>);

fn chain(nodes: &[usize], label: u64) -> Vec<Edge> {
    nodes.windows(2).map(|w| (w[0], w[1], Some(label))).collect()
}

fn parse_label(text: &str) -> Result<Option<u64>> {
    let t = text.trim().to_ascii_lowercase();
    if t == "inf" || t == "infinity" || t == "oo" || t == "∞" {
        return Ok(None);
    }
    let m: u64 = t
        .parse()
        .map_err(|_| Error::Parse(format!("bad label `{text}`")))?;
    if m < 2 {
        return Err(Error::InvalidLabel(m));
    }
    Ok(Some(m))
}

fn parse_args(inner: &str, count: usize) -> Result<Vec<Option<u64>>> {
    let args: Vec<&str> = inner.split(',').collect();
    if args.len() != count {
        return Err(Error::Parse(format!("expected {count} labels in `{inner}`")));
    }
    args.into_iter().map(parse_label).collect()
}

fn split_family(name: &str) -> Option<(char, usize)> {
    let mut chars = name.chars();
    let letter = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    Some((letter, n))
}

fn finite_edges(letter: char, n: usize) -> Option<Vec<Edge>> {
    let nodes: Vec<usize> = (0..n).collect();
    let edges = match (letter, n) {
        ('A', n) if n >= 1 => chain(&nodes, 3),
        ('B' | 'C', n) if n >= 2 => {
            let mut e = chain(&nodes, 3);
            e.last_mut().expect("n >= 2").2 = Some(4);
            e
        }
        ('D', n) if n >= 4 => {
            let mut e = chain(&nodes[..n - 1], 3);
            e.push((n - 3, n - 1, Some(3)));
            e
        }
        ('E', 6..=8) => {
            let mut e = chain(&[0, 2, 3], 3);
            e.extend(chain(&nodes[3..], 3));
            e.push((1, 3, Some(3)));
            e
        }
        ('F', 4) => vec![(0, 1, Some(3)), (1, 2, Some(4)), (2, 3, Some(3))],
        ('G', 2) => vec![(0, 1, Some(6))],
        ('H', 3) => vec![(0, 1, Some(5)), (1, 2, Some(3))],
        ('H', 4) => vec![(0, 1, Some(5)), (1, 2, Some(3)), (2, 3, Some(3))],
        _ => return None,
    };
    Some(edges)
}

/// Edges of the affine diagram of finite rank `n` (so `n + 1` nodes).
fn affine_edges(letter: char, n: usize) -> Option<Vec<Edge>> {
    let nodes: Vec<usize> = (0..=n).collect();
    let edges = match (letter, n) {
        ('A', 1) => vec![(0, 1, None)],
        ('A', n) if n >= 2 => {
            let mut e = chain(&nodes, 3);
            e.push((n, 0, Some(3)));
            e
        }
        ('B', n) if n >= 3 => {
            let mut e = vec![(0, 1, Some(4))];
            e.extend(chain(&nodes[1..n - 1], 3));
            e.push((n - 2, n - 1, Some(3)));
            e.push((n - 2, n, Some(3)));
            e
        }
        ('C', n) if n >= 2 => {
            let mut e = chain(&nodes, 3);
            e.first_mut().expect("n >= 2").2 = Some(4);
            e.last_mut().expect("n >= 2").2 = Some(4);
            e
        }
        ('D', n) if n >= 4 => {
            let mut e = vec![(0, 2, Some(3)), (1, 2, Some(3))];
            e.extend(chain(&nodes[2..n - 1], 3));
            e.push((n - 2, n - 1, Some(3)));
            e.push((n - 2, n, Some(3)));
            e
        }
        ('E', 6) => {
            let mut e = chain(&[0, 1, 2, 3, 4], 3);
            e.extend(chain(&[2, 5, 6], 3));
            e
        }
        ('E', 7) => {
            let mut e = chain(&nodes[..7], 3);
            e.push((3, 7, Some(3)));
            e
        }
        ('E', 8) => {
            let mut e = chain(&nodes[..8], 3);
            e.push((2, 8, Some(3)));
            e
        }
        ('F', 4) => vec![
            (0, 1, Some(3)),
            (1, 2, Some(3)),
            (2, 3, Some(4)),
            (3, 4, Some(3)),
        ],
        ('G', 2) => vec![(0, 1, Some(3)), (1, 2, Some(6))],
        _ => return None,
    };
    Some(edges)
}

/// The Coxeter matrix of a named group.
///
/// Finite types: `A<n>`, `B<n>`, `C<n>`, `D<n>`, `E6`-`E8`, `F4`, `G2`,
/// `H3`, `H4`, `I2(m)`. Affine types take a `~` prefix (`~C2`) or an
/// `affine:` prefix (`affine:C2`). `triangle(a,b,c)` is the rank-three group
/// with `m12 = a`, `m13 = b`, `m23 = c`.
pub fn preset_matrix(name: &str) -> Result<CoxeterMatrix> {
    let raw = name.trim();
    let unknown = || Error::UnknownPreset(raw.to_string());
    let lower = raw.to_ascii_lowercase();
    if let Some(inner) = lower.strip_prefix("triangle(").and_then(|r| r.strip_suffix(')')) {
        let l = parse_args(inner, 3)?;
        return CoxeterMatrix::from_edges(3, &[(0, 1, l[0]), (0, 2, l[1]), (1, 2, l[2])]);
    }
    if let Some(inner) = lower.strip_prefix("i2(").and_then(|r| r.strip_suffix(')')) {
        let l = parse_args(inner, 1)?;
        return CoxeterMatrix::from_edges(2, &[(0, 1, l[0])]);
    }
    let (affine, family) = if let Some(rest) = raw.strip_prefix('~') {
        (true, rest)
    } else if let Some(rest) = lower.strip_prefix("affine:") {
        (true, &raw[raw.len() - rest.len()..])
    } else {
        (false, raw)
    };
    let (letter, n) = split_family(family).ok_or_else(unknown)?;
    let edges = if affine {
        affine_edges(letter, n).ok_or_else(unknown)?
    } else {
        finite_edges(letter, n).ok_or_else(unknown)?
    };
    let rank = if affine { n + 1 } else { n };
    CoxeterMatrix::from_edges(rank, &edges)
}

/// Canonical display name for a preset (`affine:C2` becomes `~C2`).
fn canonical_name(name: &str) -> String {
    let raw = name.trim();
    match raw.to_ascii_lowercase().strip_prefix("affine:") {
        Some(rest) => format!("~{}", rest.to_ascii_uppercase()),
        None => raw.to_string(),
    }
}

/// Parses a group description; see the module docs for the format.
pub fn parse_coxeter_system(spec: &str) -> Result<CoxeterSystem> {
    let lines: Vec<&str> = spec
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let Some(first) = lines.first() else {
        return Err(Error::Parse("empty group description".into()));
    };
    let mut head = first.split_whitespace();
    match head.next() {
        Some("type") => {
            let name = head.collect::<Vec<_>>().join("");
            if lines.len() > 1 {
                return Err(Error::Parse("trailing lines after `type`".into()));
            }
            CoxeterSystem::new(canonical_name(&name), preset_matrix(&name)?)
        }
        Some("rank") => {
            let rank: usize = head
                .next()
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| Error::Parse("`rank` needs a positive integer".into()))?;
            if rank == 0 || rank > 64 {
                return Err(Error::Parse(format!("rank {rank} out of range 1..=64")));
            }
            let mut rows = vec![vec![Some(2); rank]; rank];
            for (i, row) in rows.iter_mut().enumerate() {
                row[i] = Some(1);
            }
            for line in &lines[1..] {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[0] != "m" {
                    return Err(Error::Parse(format!("expected `m <i> <j> <label>`, got `{line}`")));
                }
                let idx = |p: &str| -> Result<usize> {
                    let k: usize = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad index `{p}`")))?;
                    if k == 0 || k > rank {
                        return Err(Error::Parse(format!("index {k} out of range")));
                    }
                    Ok(k - 1)
                };
                let (i, j) = (idx(parts[1])?, idx(parts[2])?);
                let label = if parts[3] == "1" && i == j {
                    Some(1)
                } else {
                    parse_label(parts[3])?
                };
                rows[i][j] = label;
                if i != j {
                    rows[j][i] = label;
                }
            }
            CoxeterSystem::new(format!("rank{rank}"), CoxeterMatrix::new(rows)?)
        }
        _ if lines.len() == 1 => CoxeterSystem::new(canonical_name(first), preset_matrix(first)?),
        _ => Err(Error::Parse(format!("unrecognized description starting `{first}`"))),
    }
}
