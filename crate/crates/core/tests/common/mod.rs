//! Oracles shared by the integration tests. None of them use root systems
//! or inversion sets.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use coxauto::field::{FieldContext, Scalar};
use coxauto::CoxeterSystem;

/// Reducedness by the word problem solution: a word is reduced iff no word
/// reachable from it by braid moves has two equal adjacent letters.
pub fn tits_reduced(sys: &CoxeterSystem, word: &[u8]) -> bool {
    let m = sys.matrix();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        if w.windows(2).any(|p| p[0] == p[1]) {
            return false;
        }
        for i in 0..w.len() {
            if i + 1 >= w.len() {
                break;
            }
            let (s, t) = (w[i], w[i + 1]);
            let Some(mst) = m.m(s as usize, t as usize) else { continue };
            let k = mst as usize;
            if i + k > w.len() {
                continue;
            }
            let alternating = (0..k).all(|j| w[i + j] == if j % 2 == 0 { s } else { t });
            if !alternating {
                continue;
            }
            let mut v = w.clone();
            for j in 0..k {
                v[i + j] = if j % 2 == 0 { t } else { s };
            }
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    true
}

/// All reduced words of length at most `k`, by the braid-move oracle.
pub fn reduced_words(sys: &CoxeterSystem, k: usize) -> Vec<Vec<Vec<u8>>> {
    let mut levels = vec![vec![Vec::new()]];
    for _ in 0..k {
        let mut next = Vec::new();
        for w in levels.last().unwrap() {
            for s in 0..sys.rank() as u8 {
                let mut v: Vec<u8> = w.clone();
                v.push(s);
                if tits_reduced(sys, &v) {
                    next.push(v);
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Solves `cols · x = rhs` exactly. Returns `Some(x)` when the columns are
/// linearly independent and the system is consistent.
pub fn solve_independent(f: &FieldContext, cols: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = rhs.len();
    let k = cols.len();
    let mut a: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    for c in 0..k {
        let p = (pivot_row..rows).find(|&r| !a[r][c].is_zero())?;
        a.swap(pivot_row, p);
        let inv = f.inv(&a[pivot_row][c]).unwrap();
        for x in a[pivot_row].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][c].is_zero() {
                let factor = a[r][c].clone();
                for j in 0..=k {
                    let d = f.mul(&factor, &a[pivot_row][j]);
                    a[r][j] = &a[r][j] - &d;
                }
            }
        }
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|c| a[c][k].clone()).collect())
}

/// Cone membership by Carathéodory: `gamma` is a nonnegative combination of
/// some linearly independent subset of `gens`.
pub fn caratheodory_member(f: &FieldContext, gamma: &[Scalar], gens: &[Vec<Scalar>]) -> bool {
    if gamma.iter().all(|x| x.is_zero()) {
        return true;
    }
    let dim = gamma.len();
    let n = gens.len();
    let mut chosen = Vec::new();
    fn rec(
        f: &FieldContext,
        gamma: &[Scalar],
        gens: &[Vec<Scalar>],
        start: usize,
        dim: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if !chosen.is_empty() {
            let cols: Vec<Vec<Scalar>> = chosen.iter().map(|&i| gens[i].clone()).collect();
            if let Some(x) = solve_independent(f, &cols, gamma) {
                if x.iter().all(|c| f.sign(c) >= 0) {
                    return true;
                }
            }
        }
        if chosen.len() == dim {
            return false;
        }
        for i in start..gens.len() {
            chosen.push(i);
            if rec(f, gamma, gens, i + 1, dim, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let _ = n;
    rec(f, gamma, gens, 0, dim, &mut chosen)
}
