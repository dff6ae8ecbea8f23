//! Explicit tilings of a rectangular grid by monominoes and dominoes.
//!
//! Cells are addressed 1-based as `(row, col)` with row 1 at the top.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TileKind {
    Monomino,
    HDomino,
    VDomino,
}

impl TileKind {
    pub fn letter(self) -> char {
        match self {
            TileKind::Monomino => 'M',
            TileKind::HDomino => 'H',
            TileKind::VDomino => 'V',
        }
    }

    pub fn from_letter(c: &str) -> Option<Self> {
        match c {
            "M" => Some(TileKind::Monomino),
            "H" => Some(TileKind::HDomino),
            "V" => Some(TileKind::VDomino),
            _ => None,
        }
    }
}

/// A tile anchored at its top-left cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tile {
    pub kind: TileKind,
    pub row: usize,
    pub col: usize,
}

impl Tile {
    pub fn new(kind: TileKind, row: usize, col: usize) -> Self {
        Tile { kind, row, col }
    }

    pub fn monomino(row: usize, col: usize) -> Self {
        Tile::new(TileKind::Monomino, row, col)
    }

    pub fn hdomino(row: usize, col: usize) -> Self {
        Tile::new(TileKind::HDomino, row, col)
    }

    pub fn vdomino(row: usize, col: usize) -> Self {
        Tile::new(TileKind::VDomino, row, col)
    }

    pub fn area(&self) -> usize {
        match self.kind {
            TileKind::Monomino => 1,
            _ => 2,
        }
    }

    /// The one or two cells covered by the tile.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let second = match self.kind {
            TileKind::Monomino => None,
            TileKind::HDomino => Some((self.row, self.col + 1)),
            TileKind::VDomino => Some((self.row + 1, self.col)),
        };
        std::iter::once((self.row, self.col)).chain(second)
    }
}

/// A perfect cover of a `rows x cols` grid. Tiles are kept sorted by
/// anchor, so two coverings of the same tiles compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Covering {
    rows: usize,
    cols: usize,
    tiles: Vec<Tile>,
    // Index into `tiles` for every cell, row-major.
    owner: Vec<u32>,
}

const UNCOVERED: u32 = u32::MAX;

impl Covering {
    /// Checks that the tiles cover every cell exactly once.
    pub fn new(rows: usize, cols: usize, mut tiles: Vec<Tile>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Structural(format!(
                "grid must be at least 1x1, got {rows}x{cols}"
            )));
        }
        tiles.sort_by_key(|t| (t.row, t.col));
        let mut owner = vec![UNCOVERED; rows * cols];
        for (idx, tile) in tiles.iter().enumerate() {
            for (r, c) in tile.cells() {
                if r == 0 || c == 0 || r > rows || c > cols {
                    return Err(Error::Structural(format!(
                        "{} tile at ({}, {}) leaves the {rows}x{cols} grid",
                        tile.kind.letter(),
                        tile.row,
                        tile.col
                    )));
                }
                let cell = &mut owner[(r - 1) * cols + (c - 1)];
                if *cell != UNCOVERED {
                    return Err(Error::Structural(format!("cell ({r}, {c}) covered twice")));
                }
                *cell = idx as u32;
            }
        }
        if let Some(pos) = owner.iter().position(|&o| o == UNCOVERED) {
            return Err(Error::Structural(format!(
                "cell ({}, {}) not covered",
                pos / cols + 1,
                pos % cols + 1
            )));
        }
        Ok(Covering {
            rows,
            cols,
            tiles,
            owner,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn count(&self, kind: TileKind) -> usize {
        self.tiles.iter().filter(|t| t.kind == kind).count()
    }

    /// The tile covering `(row, col)`.
    pub fn tile_at(&self, row: usize, col: usize) -> &Tile {
        &self.tiles[self.owner_index(row, col)]
    }

    fn owner_index(&self, row: usize, col: usize) -> usize {
        self.owner[(row - 1) * self.cols + (col - 1)] as usize
    }

    /// Reports every interior lattice point where four distinct tiles meet.
    pub fn validate_tatami(&self) -> TatamiReport {
        let mut violations = Vec::new();
        for i in 1..self.rows {
            for j in 1..self.cols {
                let a = self.owner_index(i, j);
                let b = self.owner_index(i, j + 1);
                let c = self.owner_index(i + 1, j);
                let d = self.owner_index(i + 1, j + 1);
                if a != b && a != c && a != d && b != c && b != d && c != d {
                    violations.push((i, j));
                }
            }
        }
        TatamiReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn is_tatami(&self) -> bool {
        self.validate_tatami().valid
    }

    /// One character per cell: `o` monomino, `<` `>` horizontal domino,
    /// `^` `v` vertical domino. Every row ends with a newline.
    pub fn render_ascii(&self) -> String {
        let mut grid = vec![b'?'; self.rows * self.cols];
        for tile in &self.tiles {
            let at = (tile.row - 1) * self.cols + (tile.col - 1);
            match tile.kind {
                TileKind::Monomino => grid[at] = b'o',
                TileKind::HDomino => {
                    grid[at] = b'<';
                    grid[at + 1] = b'>';
                }
                TileKind::VDomino => {
                    grid[at] = b'^';
                    grid[at + self.cols] = b'v';
                }
            }
        }
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for row in grid.chunks(self.cols) {
            out.extend(row.iter().map(|&b| b as char));
            out.push('\n');
        }
        out
    }

    /// A standalone SVG document with one `<rect>` per tile.
    pub fn render_svg(&self) -> String {
        const CELL: usize = 24;
        let width = self.cols * CELL;
        let height = self.rows * CELL;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        for tile in &self.tiles {
            let (class, fill, w, h) = match tile.kind {
                TileKind::Monomino => ("monomino", "#f2c14e", 1, 1),
                TileKind::HDomino => ("hdomino", "#5b8e7d", 2, 1),
                TileKind::VDomino => ("vdomino", "#bc4b51", 1, 2),
            };
            let _ = writeln!(
                out,
                r##"  <rect class="{class}" x="{}" y="{}" width="{}" height="{}" fill="{fill}" stroke="#222" stroke-width="1"/>"##,
                (tile.col - 1) * CELL,
                (tile.row - 1) * CELL,
                w * CELL,
                h * CELL,
            );
        }
        out.push_str("</svg>\n");
        out
    }

    /// `grid ROWS COLS` followed by one `KIND ROW COL` line per tile.
    pub fn serialize_tiles(&self) -> String {
        let mut out = format!("grid {} {}\n", self.rows, self.cols);
        for t in &self.tiles {
            let _ = writeln!(out, "{} {} {}", t.kind.letter(), t.row, t.col);
        }
        out
    }

    pub fn parse_tiles(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(idx, l)| (idx + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `grid ROWS COLS` header"))?;
        let header: Vec<&str> = header.split_whitespace().collect();
        let (rows, cols) = match header.as_slice() {
            ["grid", r, c] => (parse_num(line_no, r)?, parse_num(line_no, c)?),
            _ => return Err(Error::parse(line_no, "expected `grid ROWS COLS`")),
        };
        let mut tiles = Vec::new();
        for (line_no, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [kind, r, c] = fields.as_slice() else {
                return Err(Error::parse(line_no, "expected `KIND ROW COL`"));
            };
            let kind = TileKind::from_letter(kind)
                .ok_or_else(|| Error::parse(line_no, format!("unknown tile kind `{kind}`")))?;
            tiles.push(Tile::new(
                kind,
                parse_num(line_no, r)?,
                parse_num(line_no, c)?,
            ));
        }
        Covering::new(rows, cols, tiles)
    }
}

fn parse_num(line: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("`{s}` is not a non-negative integer")))
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TatamiReport {
    pub valid: bool,
    /// Lattice points `(i, j)`: the corner shared by rows `i`, `i + 1` and
    /// columns `j`, `j + 1`.
    pub violations: Vec<(usize, usize)>,
}
