//! Generation of `Sd(n, k)`, the subsets of `{1, ..., n}` whose elements
//! sum to `k`, in constant amortised time.
//!
//! The current subset lives in a linked array `c[0..=capacity]`. For a
//! subset `a_1 < a_2 < ... < a_m` of `{1, ..., n}` the array holds
//! `c[0] = a_1`, `c[a_i] = a_{i+1}` and `c[a_m] = n + 1`; every cell that is
//! not an element holds its own successor `c[i] = i + 1`. The empty set is
//! therefore `[n + 1, 2, 3, ..., n + 1]`, and a run of consecutive elements
//! costs nothing to link because the unused cells already point forward.
//!
//! The walk chooses elements from the top down. Two jumps keep every node
//! of the recursion tree either a leaf or a node with two children:
//!
//! * elements larger than the remaining sum are skipped in one step,
//! * when the remaining sum is within `m - 1` of `1 + 2 + ... + m`, the
//!   forced run `{d + 1, ..., m}` is linked in one step.
//!
//! Each call does a constant amount of work, so the total work is bounded
//! by a constant times the number of subsets visited.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bench::OpCounter;
use crate::error::{Error, Result};

/// `1 + 2 + ... + m`.
#[inline]
pub fn triangular(m: usize) -> u64 {
    let m = m as u64;
    m * (m + 1) / 2
}

/// Linked-array state shared by successive subset-sum traversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C4State {
    c: Vec<usize>,
    active: usize,
}

impl C4State {
    /// Empty-set state of capacity `n`, serving `n`. Costs `n + 1` writes,
    /// the only linear-time step in the life of the state.
    pub fn new(n: usize) -> Self {
        let mut c = Vec::with_capacity(n + 1);
        c.push(n + 1);
        c.extend(2..=n + 1);
        C4State { c, active: n }
    }

    /// Empty-set state of the given capacity, initially serving `active`.
    pub fn with_active(capacity: usize, active: usize) -> Result<Self> {
        if active > capacity {
            return Err(Error::CapacityExceeded {
                capacity,
                requested: active,
            });
        }
        let mut state = C4State::new(capacity);
        state.c[0] = active + 1;
        state.active = active;
        Ok(state)
    }

    pub fn capacity(&self) -> usize {
        self.c.len() - 1
    }

    pub fn active_n(&self) -> usize {
        self.active
    }

    /// The whole array, `capacity + 1` cells.
    pub fn cells(&self) -> &[usize] {
        &self.c
    }

    /// The cells `c[0..=active_n]` that encode the current subset.
    pub fn active_cells(&self) -> &[usize] {
        &self.c[..=self.active]
    }

    /// Only the empty set has `c[0] = n + 1`.
    pub fn is_empty_set(&self) -> bool {
        self.c[0] == self.active + 1
    }

    /// Re-targets an empty-set state at `new_n = active_n ± 1` in O(1).
    pub fn shift_active(&mut self, new_n: usize) -> Result<()> {
        if !self.is_empty_set() {
            return Err(Error::StateNotEmpty);
        }
        if new_n > self.capacity() {
            return Err(Error::CapacityExceeded {
                capacity: self.capacity(),
                requested: new_n,
            });
        }
        if new_n.abs_diff(self.active) != 1 {
            return Err(Error::NonAdjacentShift {
                from: self.active,
                to: new_n,
            });
        }
        // Shrinking leaves c[new_n] = new_n + 1 in place; growing has to
        // refresh the new top cell, which may hold a stale value.
        if new_n > self.active {
            self.c[new_n] = new_n + 1;
        }
        self.c[0] = new_n + 1;
        self.active = new_n;
        Ok(())
    }

    /// Visits every subset of `{1, ..., active_n}` summing to `k` and
    /// returns how many there were. Out-of-range `k` visits nothing.
    pub fn generate<F>(&mut self, k: i64, mut visit: F) -> u64
    where
        F: FnMut(&SubsetView<'_>),
    {
        let mut counter = OpCounter::default();
        let _ = self.try_generate_counted(k, &mut counter, |s| {
            visit(s);
            ControlFlow::Continue(())
        });
        counter.outputs
    }

    /// Instrumented traversal that stops as soon as `visit` breaks. The
    /// state is restored to the empty set either way.
    pub fn try_generate_counted<F>(
        &mut self,
        k: i64,
        counter: &mut OpCounter,
        visit: F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&SubsetView<'_>) -> ControlFlow<()>,
    {
        let n = self.active;
        counter.steps += 1;
        if k < 0 || k as u64 > triangular(n) {
            return ControlFlow::Continue(());
        }
        let mut walk = Walk {
            c: &mut self.c,
            end: n + 1,
            visit,
            steps: 0,
            outputs: 0,
        };
        let flow = walk.descend(n, k as u64, n + 1);
        counter.steps += walk.steps;
        counter.outputs += walk.outputs;
        self.c[0] = n + 1;
        flow
    }
}

/// `init_c4`: the empty-set state for `n`.
pub fn init_c4(n: usize) -> C4State {
    C4State::new(n)
}

/// Runs [`C4State::generate`] after checking that `state` serves `n`.
pub fn gen_ksum<F>(state: &mut C4State, n: usize, k: i64, visit: F) -> Result<u64>
where
    F: FnMut(&SubsetView<'_>),
{
    if state.active_n() != n {
        return Err(Error::InvalidParameter(format!(
            "state serves n = {}, not {n}",
            state.active_n()
        )));
    }
    Ok(state.generate(k, visit))
}

struct Walk<'a, F> {
    c: &'a mut [usize],
    end: usize,
    visit: F,
    steps: u64,
    outputs: u64,
}

impl<F> Walk<'_, F>
where
    F: FnMut(&SubsetView<'_>) -> ControlFlow<()>,
{
    fn emit(&mut self, first: usize) -> ControlFlow<()> {
        self.c[0] = first;
        self.outputs += 1;
        (self.visit)(&SubsetView {
            cells: self.c,
            end: self.end,
        })
    }

    /// Extends the chosen elements (a list starting at `head`, all larger
    /// than `m`) by subsets of `{1, ..., m}` summing to `sum`.
    /// Requires `sum <= triangular(m)` and `c[1..=m]` in unused form.
    fn descend(&mut self, m: usize, sum: u64, head: usize) -> ControlFlow<()> {
        self.steps += 1;
        if sum == 0 {
            return self.emit(head);
        }
        let m = m.min(sum as usize);
        let full = triangular(m);
        if sum == full {
            // {1, ..., m}: c[1..m] already chain forward.
            self.c[m] = head;
            let flow = self.emit(1);
            self.c[m] = m + 1;
            return flow;
        }
        let deficit = full - sum;
        if deficit < m as u64 {
            // Without m the rest cannot reach the sum, and the same holds
            // all the way down to deficit + 1.
            let d = deficit as usize;
            self.c[m] = head;
            let flow = self.descend(d, triangular(d) - deficit, d + 1);
            self.c[m] = m + 1;
            return flow;
        }
        // Here m <= sum <= triangular(m - 1): both branches are non-empty.
        self.c[m] = head;
        let flow = self.descend(m - 1, sum - m as u64, m);
        self.c[m] = m + 1;
        flow?;
        self.descend(m - 1, sum, head)
    }
}

/// Read-only view of the subset currently encoded in a [`C4State`].
/// Decoding walks the linked list, so it costs O(size).
#[derive(Clone, Copy)]
pub struct SubsetView<'a> {
    cells: &'a [usize],
    end: usize,
}

impl<'a> SubsetView<'a> {
    pub fn is_empty(&self) -> bool {
        self.cells[0] == self.end
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> SubsetIter<'a> {
        SubsetIter {
            cells: self.cells,
            end: self.end,
            next: self.cells[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn sum(&self) -> u64 {
        self.iter().map(|x| x as u64).sum()
    }
}

impl fmt::Debug for SubsetView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending, space separated; the empty set is `-`.
impl fmt::Display for SubsetView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for (idx, x) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

pub struct SubsetIter<'a> {
    cells: &'a [usize],
    end: usize,
    next: usize,
}

impl Iterator for SubsetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.next == self.end {
            return None;
        }
        let x = self.next;
        self.next = self.cells[x];
        Some(x)
    }
}

/// `|Sd(n, k)|` by the recurrence `|Sd(n, k)| = |Sd(n-1, k)| + |Sd(n-1, k-n)|`.
pub fn count_ksum(n: i64, k: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::InvalidParameter(format!("n must be >= 0, got {n}")));
    }
    let n = n as usize;
    if k < 0 || k as u64 > triangular(n) {
        return Ok(BigUint::zero());
    }
    let k = k as usize;
    let mut ways = vec![BigUint::zero(); k + 1];
    ways[0] = BigUint::one();
    for j in 1..=n.min(k) {
        for s in (j..=k).rev() {
            let (lo, hi) = ways.split_at_mut(s);
            hi[0] += &lo[s - j];
        }
    }
    Ok(std::mem::take(&mut ways[k]))
}

/// All of `|Sd(j, s)|` for `j <= max_n`, for repeated lookups.
#[derive(Debug, Clone)]
pub struct KsumTable {
    rows: Vec<Vec<BigUint>>,
}

impl KsumTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for j in 1..=max_n {
            let prev = &rows[j - 1];
            let width = triangular(j) as usize + 1;
            let row = (0..width)
                .map(|s| {
                    let mut v = prev.get(s).cloned().unwrap_or_default();
                    if s >= j {
                        if let Some(x) = prev.get(s - j) {
                            v += x;
                        }
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        KsumTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Zero outside `0 <= k <= triangular(n)`. Panics if `n > max_n`.
    pub fn get(&self, n: usize, k: i64) -> BigUint {
        if k < 0 {
            return BigUint::zero();
        }
        self.rows[n].get(k as usize).cloned().unwrap_or_default()
    }
}
