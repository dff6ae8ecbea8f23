//! Coverings of the two-way infinite strip of height `r` with finitely many
//! structural features, up to horizontal translation.
//!
//! A featureless region of the strip is filled with vertical or horizontal
//! bond (running brick pattern). Reading the features from left to right, a
//! covering is determined by its feature sequence, and a sequence is valid
//! when each feature's left bond matches the right bond of its predecessor.
//! For the height-`r` strip there are `4r` features:
//!
//! | kind | count | left bond | right bond |
//! |------|-------|-----------|------------|
//! | vertical / horizontal bidimer | `r - 1` each | V | V |
//! | clockwise / counterclockwise vortex | `r - 2` each | V | V |
//! | vee on the top / bottom boundary | 1 each | V | V |
//! | `NE`, `SE` loner | 1 each | H | V |
//! | `NW`, `SW` loner | 1 each | V | H |
//!
//! `NE`/`NW` loners sit on the bottom boundary and `SE`/`SW` on the top.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::One;

use crate::bench::OpCounter;
use crate::error::{Error, Result};

/// Cap on the number of raw sequences `brute_filter_count` will try.
pub const BRUTE_FORCE_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bond {
    Vertical,
    Horizontal,
}

impl Bond {
    pub fn letter(self) -> char {
        match self {
            Bond::Vertical => 'V',
            Bond::Horizontal => 'H',
        }
    }

    fn fill(self) -> char {
        match self {
            Bond::Vertical => '|',
            Bond::Horizontal => '=',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Boundary {
    Top,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FeatureKind {
    VBidimer,
    HBidimer,
    CwVortex,
    CcwVortex,
    VeeTop,
    VeeBottom,
    LonerNE,
    LonerNW,
    LonerSE,
    LonerSW,
}

impl FeatureKind {
    /// Kinds in code order.
    pub const ALL: [FeatureKind; 10] = [
        FeatureKind::VBidimer,
        FeatureKind::HBidimer,
        FeatureKind::CwVortex,
        FeatureKind::CcwVortex,
        FeatureKind::VeeTop,
        FeatureKind::VeeBottom,
        FeatureKind::LonerNE,
        FeatureKind::LonerNW,
        FeatureKind::LonerSE,
        FeatureKind::LonerSW,
    ];

    /// Number of positions in a strip of height `r`; `None` for kinds
    /// without a position.
    fn positions(self, r: usize) -> Option<usize> {
        match self {
            FeatureKind::VBidimer | FeatureKind::HBidimer => Some(r - 1),
            FeatureKind::CwVortex | FeatureKind::CcwVortex => Some(r - 2),
            _ => None,
        }
    }

    pub fn left_bond(self) -> Bond {
        match self {
            FeatureKind::LonerNE | FeatureKind::LonerSE => Bond::Horizontal,
            _ => Bond::Vertical,
        }
    }

    pub fn right_bond(self) -> Bond {
        match self {
            FeatureKind::LonerNW | FeatureKind::LonerSW => Bond::Horizontal,
            _ => Bond::Vertical,
        }
    }

    pub fn boundary(self) -> Option<Boundary> {
        match self {
            FeatureKind::VeeTop | FeatureKind::LonerSE | FeatureKind::LonerSW => {
                Some(Boundary::Top)
            }
            FeatureKind::VeeBottom | FeatureKind::LonerNE | FeatureKind::LonerNW => {
                Some(Boundary::Bottom)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Feature {
    pub kind: FeatureKind,
    /// `1..=r-1` for bidimers, `1..=r-2` for vortices.
    pub position: Option<usize>,
    /// Unique symbol in `0..4r`.
    pub code: usize,
}

impl Feature {
    pub fn left_bond(&self) -> Bond {
        self.kind.left_bond()
    }

    pub fn right_bond(&self) -> Bond {
        self.kind.right_bond()
    }
}

fn check_height(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "strip height must be >= 2, got {r}"
        )));
    }
    Ok(())
}

/// The `4r` features of the height-`r` strip, indexed by code.
pub fn feature_alphabet(r: usize) -> Result<Vec<Feature>> {
    check_height(r)?;
    let mut out = Vec::with_capacity(4 * r);
    for kind in FeatureKind::ALL {
        match kind.positions(r) {
            Some(count) => {
                for p in 1..=count {
                    out.push(Feature {
                        kind,
                        position: Some(p),
                        code: out.len(),
                    });
                }
            }
            None => out.push(Feature {
                kind,
                position: None,
                code: out.len(),
            }),
        }
    }
    debug_assert_eq!(out.len(), 4 * r);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripCounts {
    /// Coverings whose leftmost region is vertical bond.
    pub vertical: BigUint,
    /// Coverings whose leftmost region is horizontal bond.
    pub horizontal: BigUint,
    pub total: BigUint,
}

/// `V_r(n) = 4(r-1) V_r(n-1) + 2 H_r(n-1)`, `H_r(n) = 2 V_r(n-1)`,
/// from `V_r(0) = H_r(0) = 1`.
pub fn count_strip(r: usize, n: usize) -> Result<StripCounts> {
    check_height(r)?;
    let mut v = BigUint::one();
    let mut h = BigUint::one();
    let grow = BigUint::from(4 * (r - 1));
    for _ in 0..n {
        let next_v = &grow * &v + &h * 2u32;
        h = v * 2u32;
        v = next_v;
    }
    Ok(StripCounts {
        total: &v + &h,
        vertical: v,
        horizontal: h,
    })
}

/// A feature sequence with the bond of its leftmost region.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StripCovering {
    r: usize,
    leftmost_bond: Bond,
    features: Vec<Feature>,
}

impl StripCovering {
    pub fn new(r: usize, leftmost_bond: Bond, features: Vec<Feature>) -> Result<Self> {
        let alphabet = feature_alphabet(r)?;
        let mut bond = leftmost_bond;
        for (idx, f) in features.iter().enumerate() {
            if alphabet.get(f.code) != Some(f) {
                return Err(Error::InvalidParameter(format!(
                    "{f:?} is not a feature of the height-{r} strip"
                )));
            }
            if f.left_bond() != bond {
                return Err(Error::InvalidParameter(format!(
                    "feature {idx} ({:?}) needs {:?} bond on its left, found {bond:?}",
                    f.kind,
                    f.left_bond()
                )));
            }
            bond = f.right_bond();
        }
        Ok(StripCovering {
            r,
            leftmost_bond,
            features,
        })
    }

    /// Builds a non-empty covering from feature codes.
    pub fn from_codes(r: usize, codes: &[usize]) -> Result<Self> {
        let alphabet = feature_alphabet(r)?;
        let features = codes
            .iter()
            .map(|&c| {
                alphabet.get(c).copied().ok_or_else(|| {
                    Error::InvalidParameter(format!("code {c} outside 0..{}", 4 * r))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let first = features
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty code sequence".into()))?;
        StripCovering::new(r, first.left_bond(), features)
    }

    pub fn height(&self) -> usize {
        self.r
    }

    pub fn leftmost_bond(&self) -> Bond {
        self.leftmost_bond
    }

    pub fn rightmost_bond(&self) -> Bond {
        self.features
            .last()
            .map_or(self.leftmost_bond, Feature::right_bond)
    }

    pub fn features(&self) -> &[Feature] {
        &self.features
    }

    pub fn codes(&self) -> impl Iterator<Item = usize> + '_ {
        self.features.iter().map(|f| f.code)
    }
}

/// `bond:V ; 3,0,11`, with `-` for an empty sequence.
impl fmt::Display for StripCovering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bond:{} ; ", self.leftmost_bond.letter())?;
        if self.features.is_empty() {
            return f.write_str("-");
        }
        for (idx, code) in self.codes().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{code}")?;
        }
        Ok(())
    }
}

/// Left-to-right generator of all coverings with exactly `n` features.
///
/// The sequences form a tree in which a node with vertical bond on its
/// right has `4r - 2` children and one with horizontal bond has 2. Moving
/// between consecutive leaves climbs and re-descends the same number of
/// levels, each level being one tree node, so the work per covering is
/// constant on average.
pub struct StripGenerator {
    n: usize,
    alphabet: Vec<Feature>,
    // Codes allowed after vertical / horizontal bond, and at the root.
    after_vertical: Vec<usize>,
    after_horizontal: Vec<usize>,
    root: Vec<usize>,
    choice: Vec<usize>,
    current: StripCovering,
    state: GenState,
    steps: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GenState {
    Fresh,
    Running,
    Done,
}

impl StripGenerator {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        let alphabet = feature_alphabet(r)?;
        let codes_after = |bond: Bond| -> Vec<usize> {
            alphabet
                .iter()
                .filter(|f| f.left_bond() == bond)
                .map(|f| f.code)
                .collect()
        };
        let after_vertical = codes_after(Bond::Vertical);
        let after_horizontal = codes_after(Bond::Horizontal);
        let root = after_vertical
            .iter()
            .chain(&after_horizontal)
            .copied()
            .collect();
        Ok(StripGenerator {
            n,
            current: StripCovering {
                r,
                leftmost_bond: Bond::Vertical,
                features: Vec::with_capacity(n),
            },
            alphabet,
            after_vertical,
            after_horizontal,
            root,
            choice: vec![0; n],
            state: GenState::Fresh,
            steps: 0,
        })
    }

    /// Tree nodes touched so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn options(&self, depth: usize) -> &[usize] {
        if depth == 0 {
            return &self.root;
        }
        match self.current.features[depth - 1].right_bond() {
            Bond::Vertical => &self.after_vertical,
            Bond::Horizontal => &self.after_horizontal,
        }
    }

    fn set(&mut self, depth: usize, choice: usize) {
        self.steps += 1;
        self.choice[depth] = choice;
        let feature = self.alphabet[self.options(depth)[choice]];
        if depth < self.current.features.len() {
            self.current.features[depth] = feature;
        } else {
            self.current.features.push(feature);
        }
    }

    /// Advances to the next covering. The reference is valid until the
    /// next call.
    pub fn next_covering(&mut self) -> Option<&StripCovering> {
        match self.state {
            GenState::Done => return None,
            GenState::Fresh => {
                self.state = GenState::Running;
                self.steps += 1;
                if self.n == 0 {
                    self.current.leftmost_bond = Bond::Vertical;
                    return Some(&self.current);
                }
                for depth in 0..self.n {
                    self.set(depth, 0);
                }
            }
            GenState::Running => {
                if self.n == 0 {
                    if self.current.leftmost_bond == Bond::Vertical {
                        self.steps += 1;
                        self.current.leftmost_bond = Bond::Horizontal;
                        return Some(&self.current);
                    }
                    self.state = GenState::Done;
                    return None;
                }
                let mut depth = self.n - 1;
                loop {
                    self.steps += 1;
                    if self.choice[depth] + 1 < self.options(depth).len() {
                        break;
                    }
                    if depth == 0 {
                        self.state = GenState::Done;
                        return None;
                    }
                    depth -= 1;
                }
                self.set(depth, self.choice[depth] + 1);
                for d in depth + 1..self.n {
                    self.set(d, 0);
                }
            }
        }
        self.current.leftmost_bond = self.current.features[0].left_bond();
        Some(&self.current)
    }
}

/// Visits each covering of the height-`r` strip with `n` features once.
pub fn gen_strip<F>(r: usize, n: usize, mut visit: F) -> Result<u64>
where
    F: FnMut(&StripCovering),
{
    let mut counter = OpCounter::default();
    let _ = try_gen_strip_counted(r, n, &mut counter, |c| {
        visit(c);
        ControlFlow::Continue(())
    })?;
    Ok(counter.outputs)
}

pub fn try_gen_strip_counted<F>(
    r: usize,
    n: usize,
    counter: &mut OpCounter,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&StripCovering) -> ControlFlow<()>,
{
    let mut generator = StripGenerator::new(r, n)?;
    counter.preprocessing += 4 * r as u64 + n as u64;
    let mut flow = ControlFlow::Continue(());
    while let Some(covering) = generator.next_covering() {
        counter.outputs += 1;
        flow = visit(covering);
        if flow.is_break() {
            break;
        }
    }
    counter.steps += generator.steps();
    Ok(flow)
}

/// Counts valid sequences by filtering all `(4r)^n` raw code sequences.
pub fn brute_filter_count(r: usize, n: usize) -> Result<BigUint> {
    let alphabet = feature_alphabet(r)?;
    let size = (4 * r as u128)
        .checked_pow(n as u32)
        .filter(|&s| s <= BRUTE_FORCE_GUARD)
        .ok_or(Error::GuardExceeded {
            size: (4 * r as u128).saturating_pow(n as u32),
            limit: BRUTE_FORCE_GUARD,
        })?;
    if n == 0 {
        return Ok(BigUint::from(2u32));
    }
    let radix = alphabet.len();
    let mut digits = vec![0usize; n];
    let mut valid = 0u64;
    for _ in 0..size {
        if digits
            .windows(2)
            .all(|w| alphabet[w[0]].right_bond() == alphabet[w[1]].left_bond())
        {
            valid += 1;
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < radix {
                break;
            }
            *d = 0;
        }
    }
    Ok(BigUint::from(valid))
}

/// Text schematic, one line per strip row (row 1 on top).
///
/// Bond regions are drawn as `margin` columns of `|` (vertical) or `=`
/// (horizontal); each feature is one column. Glyphs: `V`/`H` vertical and
/// horizontal bidimer on rows `p, p+1`; `C`/`A` clockwise and
/// counterclockwise vortex on rows `p..=p+2`; `v` top vee; `^` bottom
/// vee; loners `/` (`NE` bottom, `SW` top) and `\` (`NW` bottom, `SE`
/// top). The rest of a feature column is `.`.
pub fn render_strip_schematic(s: &StripCovering, margin: usize) -> Result<String> {
    if margin == 0 {
        return Err(Error::InvalidParameter("margin must be >= 1".into()));
    }
    let s = StripCovering::new(s.r, s.leftmost_bond, s.features.clone())?;
    let r = s.r;
    let width = margin + s.features.len() * (margin + 1);
    let mut rows: Vec<String> = vec![String::with_capacity(width); r];
    for row in rows.iter_mut() {
        row.extend(std::iter::repeat_n(s.leftmost_bond.fill(), margin));
    }
    for f in &s.features {
        for (y, row) in rows.iter_mut().enumerate() {
            row.push(glyph(f, y + 1, r));
            row.extend(std::iter::repeat_n(f.right_bond().fill(), margin));
        }
    }
    let mut out = String::with_capacity(r * (width + 1));
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

fn glyph(f: &Feature, row: usize, r: usize) -> char {
    let span = |len: usize| f.position.is_some_and(|p| (p..p + len).contains(&row));
    match f.kind {
        FeatureKind::VBidimer if span(2) => 'V',
        FeatureKind::HBidimer if span(2) => 'H',
        FeatureKind::CwVortex if span(3) => 'C',
        FeatureKind::CcwVortex if span(3) => 'A',
        FeatureKind::VeeTop if row == 1 => 'v',
        FeatureKind::VeeBottom if row == r => '^',
        FeatureKind::LonerNE if row == r => '/',
        FeatureKind::LonerNW if row == r => '\\',
        FeatureKind::LonerSE if row == 1 => '\\',
        FeatureKind::LonerSW if row == 1 => '/',
        _ => '.',
    }
}
