//! Brute-force enumeration of tatami coverings of small rectangles.
//!
//! This is the ground truth the symbolic generators are checked against. It
//! shares nothing with them beyond the [`Covering`] type: cells are filled in
//! row-major order, the first empty cell taking a monomino, a horizontal
//! domino or a vertical domino, and a branch is cut as soon as a lattice
//! point with all four incident cells decided has four distinct tiles.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grid::{Covering, Tile, TileKind};

/// Default cap on `rows * cols`.
pub const CELL_GUARD: usize = 144;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classify {
    VerticalCount,
    HorizontalCount,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleQuery {
    pub rows: usize,
    pub cols: usize,
    pub monomino_count: Option<usize>,
    /// Monominoes at `(1, 1)` and `(1, cols)`.
    pub require_top_corner_monominoes: bool,
    pub classify_by: Classify,
    /// Skip the [`CELL_GUARD`] check.
    pub unguarded: bool,
}

impl OracleQuery {
    pub fn rect(rows: usize, cols: usize) -> Self {
        OracleQuery {
            rows,
            cols,
            monomino_count: None,
            require_top_corner_monominoes: false,
            classify_by: Classify::None,
            unguarded: false,
        }
    }

    /// `n x n` with `n` monominoes in the top corners, classified by
    /// vertical dominoes for even `n` and horizontal dominoes for odd `n`.
    pub fn square(n: usize) -> Self {
        OracleQuery {
            rows: n,
            cols: n,
            monomino_count: Some(n),
            require_top_corner_monominoes: true,
            classify_by: if n.is_multiple_of(2) {
                Classify::VerticalCount
            } else {
                Classify::HorizontalCount
            },
            unguarded: false,
        }
    }

    pub fn with_monominoes(mut self, count: usize) -> Self {
        self.monomino_count = Some(count);
        self
    }

    pub fn with_top_corners(mut self) -> Self {
        self.require_top_corner_monominoes = true;
        self
    }

    pub fn classified_by(mut self, classify: Classify) -> Self {
        self.classify_by = classify;
        self
    }

    fn check(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "grid must be at least 1x1, got {}x{}",
                self.rows, self.cols
            )));
        }
        let cells = self.rows * self.cols;
        if !self.unguarded && cells > CELL_GUARD {
            return Err(Error::GuardExceeded {
                size: cells as u128,
                limit: CELL_GUARD as u128,
            });
        }
        if let Some(m) = self.monomino_count {
            if m > cells || !(cells - m).is_multiple_of(2) {
                return Err(Error::InvalidParameter(format!(
                    "{m} monominoes cannot complete a {}x{} grid with dominoes",
                    self.rows, self.cols
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    /// Class value to count; empty when the query is unclassified.
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

impl Histogram {
    pub fn get(&self, key: usize) -> u64 {
        self.counts.get(&key).copied().unwrap_or(0)
    }
}

/// Visits every covering matching `query` exactly once.
pub fn enumerate_coverings<F>(query: &OracleQuery, mut visit: F) -> Result<Histogram>
where
    F: FnMut(&Covering),
{
    run(query, Some(&mut visit))
}

/// Same search as [`enumerate_coverings`] without building coverings.
pub fn count_coverings(query: &OracleQuery) -> Result<Histogram> {
    run::<fn(&Covering)>(query, None)
}

/// Number of coverings in `VD(n, k)` for even `n`, `HD(n, k)` for odd `n`.
pub fn oracle_vd(n: usize, k: usize) -> Result<u64> {
    Ok(oracle_vd_histogram(n)?.get(k))
}

pub fn oracle_vd_histogram(n: usize) -> Result<Histogram> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
    }
    count_coverings(&OracleQuery::square(n))
}

fn run<F>(query: &OracleQuery, visit: Option<&mut F>) -> Result<Histogram>
where
    F: FnMut(&Covering),
{
    query.check()?;
    let mut search = Search {
        rows: query.rows,
        cols: query.cols,
        query,
        owner: vec![EMPTY; query.rows * query.cols],
        tiles: Vec::new(),
        monominoes: 0,
        histogram: Histogram::default(),
        visit,
    };
    search.fill(0);
    Ok(search.histogram)
}

const EMPTY: u32 = u32::MAX;

struct Search<'q, 'v, F> {
    rows: usize,
    cols: usize,
    query: &'q OracleQuery,
    owner: Vec<u32>,
    tiles: Vec<Tile>,
    monominoes: usize,
    histogram: Histogram,
    visit: Option<&'v mut F>,
}

impl<F> Search<'_, '_, F>
where
    F: FnMut(&Covering),
{
    fn fill(&mut self, mut pos: usize) {
        while pos < self.owner.len() && self.owner[pos] != EMPTY {
            pos += 1;
        }
        if pos == self.owner.len() {
            self.record();
            return;
        }
        let (r, c) = (pos / self.cols, pos % self.cols);
        let corner =
            self.query.require_top_corner_monominoes && r == 0 && (c == 0 || c == self.cols - 1);

        if self
            .query
            .monomino_count
            .is_none_or(|m| self.monominoes < m)
        {
            self.monominoes += 1;
            self.place(pos, &[pos], Tile::monomino(r + 1, c + 1));
            self.monominoes -= 1;
        }
        if corner {
            return;
        }
        let right_is_corner =
            self.query.require_top_corner_monominoes && r == 0 && c + 2 == self.cols;
        if c + 1 < self.cols && self.owner[pos + 1] == EMPTY && !right_is_corner {
            self.place(pos, &[pos, pos + 1], Tile::hdomino(r + 1, c + 1));
        }
        if r + 1 < self.rows {
            self.place(pos, &[pos, pos + self.cols], Tile::vdomino(r + 1, c + 1));
        }
    }

    fn place(&mut self, pos: usize, cells: &[usize], tile: Tile) {
        let id = self.tiles.len() as u32;
        for &cell in cells {
            self.owner[cell] = id;
        }
        self.tiles.push(tile);
        if cells.iter().all(|&cell| self.corners_ok(cell)) {
            self.fill(pos + 1);
        }
        self.tiles.pop();
        for &cell in cells {
            self.owner[cell] = EMPTY;
        }
    }

    /// Checks the four lattice points at the corners of `cell`.
    fn corners_ok(&self, cell: usize) -> bool {
        let (r, c) = (cell / self.cols, cell % self.cols);
        // (top, left) cell of each 2x2 block containing `cell`
        let blocks = [
            (r.checked_sub(1), c.checked_sub(1)),
            (r.checked_sub(1), Some(c)),
            (Some(r), c.checked_sub(1)),
            (Some(r), Some(c)),
        ];
        blocks.iter().all(|&block| match block {
            (Some(top), Some(left)) if top + 1 < self.rows && left + 1 < self.cols => {
                let at = top * self.cols + left;
                let ids = [
                    self.owner[at],
                    self.owner[at + 1],
                    self.owner[at + self.cols],
                    self.owner[at + self.cols + 1],
                ];
                ids.contains(&EMPTY)
                    || ids[0] == ids[1]
                    || ids[0] == ids[2]
                    || ids[0] == ids[3]
                    || ids[1] == ids[2]
                    || ids[1] == ids[3]
                    || ids[2] == ids[3]
            }
            _ => true,
        })
    }

    fn record(&mut self) {
        if self
            .query
            .monomino_count
            .is_some_and(|m| m != self.monominoes)
        {
            return;
        }
        self.histogram.total += 1;
        let class = match self.query.classify_by {
            Classify::VerticalCount => Some(TileKind::VDomino),
            Classify::HorizontalCount => Some(TileKind::HDomino),
            Classify::None => None,
        };
        if let Some(kind) = class {
            let key = self.tiles.iter().filter(|t| t.kind == kind).count();
            *self.histogram.counts.entry(key).or_insert(0) += 1;
        }
        if let Some(visit) = self.visit.as_mut() {
            let covering = Covering::new(self.rows, self.cols, self.tiles.clone())
                .expect("search only produces perfect covers");
            visit(&covering);
        }
    }
}
