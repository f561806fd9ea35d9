//! Exhaustive search for base sequences `BS(m, n)` at small sizes.
//!
//! Two engines share one contract. [`search_bs`] walks every sign pattern in
//! lexicographic order; it is slow and obviously correct. [`search_bs_pruned`]
//! assigns positions from both ends of all four sequences at once and cuts a
//! branch as soon as some lag's partial NPAF sum can no longer be cancelled
//! by the products still undetermined at that lag.
//!
//! Results are sorted lexicographically over the concatenation `a|b|c|d`
//! with `+` before `-`, independent of engine and worker count.

use std::cmp::Ordering;

use rayon::prelude::*;
use thiserror::Error;

use crate::seq::{bs_verify, BaseSeqQuad, Seq};

/// Largest total length `2(m + n)` accepted by [`search_bs`].
pub const NAIVE_GUARD: usize = 40;
/// Largest total length `2(m + n)` accepted by [`search_bs_pruned`].
pub const PRUNED_GUARD: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search needs m >= n >= 1 (got m={m}, n={n})")]
    Orientation { m: usize, n: usize },
    #[error("total length 2(m+n) = {total} exceeds the guard {guard}")]
    GuardExceeded { total: usize, guard: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpec {
    pub m: usize,
    pub n: usize,
    /// Keep only the lexicographically least member of each orbit under
    /// negating single sequences and reversing all four together.
    pub symmetry_reduction: bool,
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            symmetry_reduction: false,
            limit: None,
        }
    }

    pub fn with_symmetry_reduction(mut self, on: bool) -> Self {
        self.symmetry_reduction = on;
        self
    }

    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn total_len(&self) -> usize {
        2 * (self.m + self.n)
    }

    fn lens(&self) -> [usize; 4] {
        [self.m, self.m, self.n, self.n]
    }

    fn validate(&self, guard: usize) -> Result<(), SearchError> {
        if self.n == 0 || self.m < self.n {
            return Err(SearchError::Orientation { m: self.m, n: self.n });
        }
        if self.total_len() > guard {
            return Err(SearchError::GuardExceeded {
                total: self.total_len(),
                guard,
            });
        }
        Ok(())
    }
}

type Quad = [Vec<i64>; 4];

/// Orders `+1` before `-1`, position by position across `a|b|c|d`.
fn lex_cmp(x: &Quad, y: &Quad) -> Ordering {
    x.iter()
        .flatten()
        .map(|v| -v)
        .cmp(y.iter().flatten().map(|v| -v))
}

fn is_canonical(quad: &Quad) -> bool {
    for reverse in [false, true] {
        for mask in 0u8..16 {
            if !reverse && mask == 0 {
                continue;
            }
            let image: Quad = std::array::from_fn(|k| {
                let sign = if mask >> k & 1 == 1 { -1 } else { 1 };
                let mut s: Vec<i64> = quad[k].iter().map(|v| sign * v).collect();
                if reverse {
                    s.reverse();
                }
                s
            });
            if lex_cmp(&image, quad) == Ordering::Less {
                return false;
            }
        }
    }
    true
}

fn npaf_sums_vanish(quad: &Quad) -> bool {
    let max_len = quad.iter().map(Vec::len).max().unwrap_or(0);
    (1..max_len).all(|j| {
        quad.iter()
            .map(|s| s.iter().zip(s.iter().skip(j)).map(|(x, y)| x * y).sum::<i64>())
            .sum::<i64>()
            == 0
    })
}

fn certify_all(spec: &SearchSpec, found: Vec<Quad>) -> Vec<BaseSeqQuad> {
    found
        .into_iter()
        .map(|[a, b, c, d]| {
            bs_verify(
                Seq::from_slice(&a),
                Seq::from_slice(&b),
                Seq::from_slice(&c),
                Seq::from_slice(&d),
                spec.m,
                spec.n,
            )
            .expect("search produced an uncertifiable quadruple")
        })
        .collect()
}

/// Plain enumeration of all `2^(2(m+n))` sign patterns in lexicographic order.
pub fn search_bs(spec: &SearchSpec) -> Result<Vec<BaseSeqQuad>, SearchError> {
    spec.validate(NAIVE_GUARD)?;
    let lens = spec.lens();
    let total = spec.total_len();
    let mut found = Vec::new();
    for code in 0u64..(1u64 << total) {
        if spec.limit.is_some_and(|l| found.len() >= l) {
            break;
        }
        let mut bit = total;
        let quad: Quad = lens.map(|len| {
            (0..len)
                .map(|_| {
                    bit -= 1;
                    if code >> bit & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .collect()
        });
        if !npaf_sums_vanish(&quad) {
            continue;
        }
        if spec.symmetry_reduction && !is_canonical(&quad) {
            continue;
        }
        found.push(quad);
    }
    Ok(certify_all(spec, found))
}

/// Backtracking state: the four partially assigned sequences plus, for each
/// lag `j >= 1`, the sum of products already determined and the number of
/// products still open.
#[derive(Debug, Clone)]
struct Pruner {
    vals: [Vec<i64>; 4],
    partial: Vec<i64>,
    open: Vec<i64>,
}

impl Pruner {
    fn new(lens: [usize; 4]) -> Self {
        let max_len = lens.iter().copied().max().unwrap_or(0);
        let open = (0..max_len)
            .map(|j| {
                if j == 0 {
                    0
                } else {
                    lens.iter().map(|&l| l.saturating_sub(j) as i64).sum()
                }
            })
            .collect();
        Self {
            vals: lens.map(|l| vec![0; l]),
            partial: vec![0; max_len],
            open,
        }
    }

    fn partners(&self, seq: usize, pos: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let s = &self.vals[seq];
        (1..s.len()).flat_map(move |j| {
            let up = s.get(pos + j).copied().filter(|&v| v != 0);
            let down = pos.checked_sub(j).map(|p| s[p]).filter(|&v| v != 0);
            up.into_iter().chain(down).map(move |v| (j, v))
        })
    }

    fn assign(&mut self, seq: usize, pos: usize, value: i64) {
        let updates: Vec<(usize, i64)> = self.partners(seq, pos).collect();
        for (j, partner) in updates {
            self.partial[j] += value * partner;
            self.open[j] -= 1;
        }
        self.vals[seq][pos] = value;
    }

    fn unassign(&mut self, seq: usize, pos: usize) {
        let value = self.vals[seq][pos];
        self.vals[seq][pos] = 0;
        let updates: Vec<(usize, i64)> = self.partners(seq, pos).collect();
        for (j, partner) in updates {
            self.partial[j] -= value * partner;
            self.open[j] += 1;
        }
    }

    fn feasible(&self) -> bool {
        self.partial
            .iter()
            .zip(&self.open)
            .skip(1)
            .all(|(p, o)| p.abs() <= *o)
    }
}

/// Fill position `k` of every sequence before `k + 1`, taking positions
/// alternately from the front and the back.
fn decision_order(lens: [usize; 4]) -> Vec<(usize, usize)> {
    let max_len = lens.iter().copied().max().unwrap_or(0);
    let mut order = Vec::new();
    for k in 0..max_len {
        for (seq, &len) in lens.iter().enumerate() {
            if k < len {
                let pos = if k % 2 == 0 { k / 2 } else { len - 1 - k / 2 };
                order.push((seq, pos));
            }
        }
    }
    order
}

struct Walker<'a> {
    order: &'a [(usize, usize)],
    fix_leading: bool,
    symmetry_reduction: bool,
}

impl Walker<'_> {
    fn domain(&self, seq_pos: (usize, usize)) -> &'static [i64] {
        // With symmetry reduction every orbit has a canonical member whose
        // sequences all start with +1.
        if self.fix_leading && seq_pos.1 == 0 {
            &[1]
        } else {
            &[1, -1]
        }
    }

    fn dfs(&self, state: &mut Pruner, depth: usize, out: &mut Vec<Quad>) {
        if depth == self.order.len() {
            let quad = state.vals.clone();
            if !self.symmetry_reduction || is_canonical(&quad) {
                out.push(quad);
            }
            return;
        }
        let (seq, pos) = self.order[depth];
        for &v in self.domain((seq, pos)) {
            state.assign(seq, pos, v);
            if state.feasible() {
                self.dfs(state, depth + 1, out);
            }
            state.unassign(seq, pos);
        }
    }

    fn prefixes(&self, state: &mut Pruner, depth: usize, stop: usize, out: &mut Vec<Pruner>) {
        if depth == stop {
            out.push(state.clone());
            return;
        }
        let (seq, pos) = self.order[depth];
        for &v in self.domain((seq, pos)) {
            state.assign(seq, pos, v);
            if state.feasible() {
                self.prefixes(state, depth + 1, stop, out);
            }
            state.unassign(seq, pos);
        }
    }
}

/// Decisions made sequentially before the remaining subtrees are handed to
/// worker threads.
const SPLIT_DEPTH: usize = 10;

/// Backtracking search with NPAF feasibility pruning; same result set and
/// order as [`search_bs`].
pub fn search_bs_pruned(spec: &SearchSpec) -> Result<Vec<BaseSeqQuad>, SearchError> {
    spec.validate(PRUNED_GUARD)?;
    let lens = spec.lens();
    let order = decision_order(lens);
    let walker = Walker {
        order: &order,
        fix_leading: spec.symmetry_reduction,
        symmetry_reduction: spec.symmetry_reduction,
    };
    let split = SPLIT_DEPTH.min(order.len());
    let mut roots = Vec::new();
    walker.prefixes(&mut Pruner::new(lens), 0, split, &mut roots);
    let mut found: Vec<Quad> = roots
        .into_par_iter()
        .flat_map_iter(|mut state| {
            let mut out = Vec::new();
            walker.dfs(&mut state, split, &mut out);
            out
        })
        .collect();
    found.sort_by(lex_cmp);
    if let Some(limit) = spec.limit {
        found.truncate(limit);
    }
    Ok(certify_all(spec, found))
}
