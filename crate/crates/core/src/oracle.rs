//! Definition-level reference computations.
//!
//! Nothing here uses elimination, splittings or intersection formulas: every
//! quantity comes from listing codewords and filtering them. Only the field
//! arithmetic and the stored basis rows are shared with the fast paths.

use std::collections::HashSet;

use crate::budget::Budget;
use crate::codes::Code;
use crate::error::Result;
use crate::field::PrimeField;
use crate::symplectic::SympVector;

/// Mixed-radix counter over all coefficient tuples of the basis rows.
pub struct CodewordIterator {
    field: PrimeField,
    rows: Vec<Vec<u32>>,
    cols: usize,
    counter: Vec<u32>,
    done: bool,
}

impl CodewordIterator {
    pub fn new(code: &Code) -> Self {
        Self {
            field: code.field(),
            rows: code.space().basis().to_rows(),
            cols: 2 * code.n(),
            counter: vec![0; code.space().dim_f()],
            done: false,
        }
    }
}

impl Iterator for CodewordIterator {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let f = self.field;
        let mut v = vec![0u32; self.cols];
        for (c, row) in self.counter.iter().zip(&self.rows) {
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(*c, r));
            }
        }
        // advance
        self.done = true;
        for c in self.counter.iter_mut() {
            *c += 1;
            if *c < f.order() {
                self.done = false;
                break;
            }
            *c = 0;
        }
        Some(v)
    }
}

fn codewords(code: &Code, budget: Budget) -> Result<Vec<Vec<u32>>> {
    budget.check(code.field().power_count(code.space().dim_f()))?;
    Ok(CodewordIterator::new(code).collect())
}

/// Every codeword once, in counter order.
pub fn enumerate(code: &Code, budget: Budget) -> Result<Vec<SympVector>> {
    let f = code.field();
    codewords(code, budget)?
        .into_iter()
        .map(|c| SympVector::from_coords(f, c))
        .collect()
}

fn omega(f: PrimeField, u: &[u32], v: &[u32]) -> u32 {
    let mut acc = 0;
    for i in 0..u.len() / 2 {
        acc = f.add(acc, f.mul(u[2 * i], v[2 * i + 1]));
        acc = f.sub(acc, f.mul(u[2 * i + 1], v[2 * i]));
    }
    acc
}

fn weight(v: &[u32]) -> usize {
    v.chunks_exact(2).filter(|p| p[0] != 0 || p[1] != 0).count()
}

fn support_mask(v: &[u32]) -> u64 {
    v.chunks_exact(2)
        .enumerate()
        .filter(|(_, p)| p[0] != 0 || p[1] != 0)
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn orthogonal_to_all(f: PrimeField, v: &[u32], others: &[Vec<u32>]) -> bool {
    others.iter().all(|o| omega(f, v, o) == 0)
}

/// Minimum weight over codewords outside `rad(C)`, with radical membership
/// decided by pairing against every codeword.
pub fn brute_min_distance(code: &Code, budget: Budget) -> Result<Option<usize>> {
    let f = code.field();
    let all = codewords(code, budget)?;
    let gens = code.space().basis().to_rows();
    Ok(all
        .iter()
        .filter(|c| !orthogonal_to_all(f, c, &gens))
        .map(|c| weight(c))
        .min())
}

pub fn brute_distribution(code: &Code, budget: Budget) -> Result<Vec<u128>> {
    let mut t = vec![0u128; code.n() + 1];
    for c in codewords(code, budget)? {
        t[weight(&c)] += 1;
    }
    Ok(t)
}

/// `B_b` as a literal count of pairs `(J, c)` with `|J| = b` and
/// `supp(c) ⊆ J`.
pub fn brute_moments(code: &Code, budget: Budget) -> Result<Vec<u128>> {
    let n = code.n();
    budget.check(code.field().power_count(code.space().dim_f()) << n)?;
    let masks: Vec<u64> = codewords(code, budget)?.iter().map(|c| support_mask(c)).collect();
    let mut t = vec![0u128; n + 1];
    for j in 0u64..1 << n {
        t[j.count_ones() as usize] += masks.iter().filter(|&&m| m & !j == 0).count() as u128;
    }
    Ok(t)
}

fn log_q(q: u32, mut size: usize) -> usize {
    let mut e = 0;
    while size > 1 {
        debug_assert_eq!(size % q as usize, 0);
        size /= q as usize;
        e += 1;
    }
    e
}

/// Spanning subset of a finite set of vectors closed under linear
/// combination, built by greedy closure.
fn generators(f: PrimeField, set: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let Some(first) = set.first() else {
        return Vec::new();
    };
    let mut span: HashSet<Vec<u32>> = HashSet::from([vec![0; first.len()]]);
    let mut gens = Vec::new();
    for v in set {
        if span.contains(v) {
            continue;
        }
        let mut next = HashSet::with_capacity(span.len() * f.order() as usize);
        for s in &span {
            for c in 0..f.order() {
                next.insert(s.iter().zip(v).map(|(&a, &b)| f.add(a, f.mul(c, b))).collect());
            }
        }
        span = next;
        gens.push(v.clone());
    }
    gens
}

/// `(α(A), β(A))` for every support mask, from filtered codeword lists.
pub fn brute_alpha_beta(code: &Code, budget: Budget) -> Result<Vec<(usize, usize)>> {
    let n = code.n();
    let f = code.field();
    let q = f.order();
    budget.check(code.field().power_count(code.space().dim_f()) << n)?;
    let all = codewords(code, budget)?;
    let code_gens = code.space().basis().to_rows();
    let radical: Vec<&Vec<u32>> = all.iter().filter(|c| orthogonal_to_all(f, c, &code_gens)).collect();
    let mut out = Vec::with_capacity(1 << n);
    for j in 0u64..1 << n {
        let inside: Vec<Vec<u32>> = all.iter().filter(|c| support_mask(c) & !j == 0).cloned().collect();
        let dim_f = log_q(q, inside.len());
        let gens = generators(f, &inside);
        let own_rad = inside.iter().filter(|c| orthogonal_to_all(f, c, &gens)).count();
        let sym = (dim_f - log_q(q, own_rad)) / 2;
        let irk = dim_f - sym;
        let rad_in = log_q(q, radical.iter().filter(|c| support_mask(c) & !j == 0).count());
        out.push((sym, irk - rad_in));
    }
    Ok(out)
}
