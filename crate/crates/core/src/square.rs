//! `n x n` tatami coverings with `n` monominoes, two of them in the top
//! corners, classified by their number `k` of vertical dominoes.
//!
//! The coverings are generated through a symbolic set `VH(n, k)` whose
//! elements list the sizes of the flipped diagonals of a covering:
//!
//! * `Dominant`: for `1 <= i <= (n-1)/2`, one diagonal of `n - i - 1`
//!   dominoes, any subset of `{1, ..., n-i-2}` for the other diagonals of the
//!   same slope (the companions), and any subset of `{1, ..., i-1}` for the
//!   diagonals of the opposite slope. Every such triple occurs twice, once
//!   per factor order (`Side::Left`, `Side::Right`).
//! * `Balanced`: two subsets of `{1, ..., (n-2)/2}`.
//!
//! The sizes always add up to `k`. For even `n` the elements are in
//! bijection with the coverings with `k` vertical dominoes, for odd `n` the
//! count equals that of coverings with `k` horizontal dominoes.
//!
//! # Geometry (even `n`)
//!
//! The base covering has monominoes at columns 1 and `n` of every odd row
//! and horizontal dominoes in running bond elsewhere. Each non-corner
//! monomino sits at the end of two staircases of horizontal dominoes, one
//! per slope. Flipping a staircase of `d` dominoes turns them vertical and
//! moves the monomino `d` steps along the diagonal. For each slope the
//! staircase sizes are exactly `1, ..., n-2`, one staircase per size, so a
//! diagonal is named by its slope and size:
//!
//! * descending (`\`): even `d` starts at `(d+1, n)` and climbs to the left;
//!   odd `d` starts at `(n-d, 1)` and falls to the right,
//! * ascending (`/`): the mirror image.
//!
//! The first factor of an element holds descending diagonals, the second
//! ascending ones. `Side::Left` has the dominant diagonal descending,
//! `Side::Right` has it ascending; mirroring a covering swaps the two.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bench::OpCounter;
use crate::error::{Error, Result};
use crate::grid::{Covering, Tile, TileKind};
use crate::ksum::{triangular, C4State, KsumTable, SubsetView};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VhElement {
    Dominant {
        side: Side,
        i: usize,
        /// Always `n - i - 1`.
        largest: usize,
        companions: Vec<usize>,
        opposite: Vec<usize>,
    },
    Balanced {
        left: Vec<usize>,
        right: Vec<usize>,
    },
}

impl VhElement {
    /// Total number of dominoes over all flipped diagonals.
    pub fn diagonal_sum(&self) -> usize {
        match self {
            VhElement::Dominant {
                largest,
                companions,
                opposite,
                ..
            } => largest + companions.iter().sum::<usize>() + opposite.iter().sum::<usize>(),
            VhElement::Balanced { left, right } => {
                left.iter().sum::<usize>() + right.iter().sum::<usize>()
            }
        }
    }

    /// Checks the ranges of every part for the given `n`.
    pub fn check(&self, n: usize) -> Result<()> {
        let bad = |message: String| Err(Error::InvalidElement { n, message });
        if n < 2 {
            return bad("n must be >= 2".into());
        }
        match self {
            VhElement::Dominant {
                i,
                largest,
                companions,
                opposite,
                ..
            } => {
                if *i < 1 || *i > (n - 1) / 2 {
                    return bad(format!("i = {i} outside 1..={}", (n - 1) / 2));
                }
                if *largest != n - i - 1 {
                    return bad(format!(
                        "largest diagonal must be {}, got {largest}",
                        n - i - 1
                    ));
                }
                check_set("companions", companions, n - i - 2, n)?;
                check_set("opposite", opposite, i - 1, n)
            }
            VhElement::Balanced { left, right } => {
                check_set("left set", left, (n - 2) / 2, n)?;
                check_set("right set", right, (n - 2) / 2, n)
            }
        }
    }

    /// The mirror image: sides swap, and so do the two balanced sets.
    pub fn mirrored(&self) -> VhElement {
        match self.clone() {
            VhElement::Dominant {
                side,
                i,
                largest,
                companions,
                opposite,
            } => VhElement::Dominant {
                side: match side {
                    Side::Left => Side::Right,
                    Side::Right => Side::Left,
                },
                i,
                largest,
                companions,
                opposite,
            },
            VhElement::Balanced { left, right } => VhElement::Balanced {
                left: right,
                right: left,
            },
        }
    }

    /// Parses the text form, checking it against `n`.
    pub fn parse(text: &str, n: usize) -> Result<VhElement> {
        parse_vh(text, n)
    }
}

fn check_set(what: &str, set: &[usize], max: usize, n: usize) -> Result<()> {
    let ascending = set.windows(2).all(|w| w[0] < w[1]);
    let in_range = set.iter().all(|&x| (1..=max).contains(&x));
    if ascending && in_range {
        Ok(())
    } else {
        Err(Error::InvalidElement {
            n,
            message: format!("{what} {set:?} must be ascending within 1..={max}"),
        })
    }
}

fn write_group<I>(f: &mut fmt::Formatter<'_>, items: I, starred: bool) -> fmt::Result
where
    I: IntoIterator<Item = usize>,
{
    f.write_str("{")?;
    for (idx, x) in items.into_iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    if starred {
        f.write_str("*")?;
    }
    f.write_str("}")
}

fn write_dominant<A, B>(
    f: &mut fmt::Formatter<'_>,
    side: Side,
    largest: usize,
    companions: A,
    opposite: B,
) -> fmt::Result
where
    A: IntoIterator<Item = usize>,
    B: IntoIterator<Item = usize>,
{
    match side {
        Side::Left => {
            write_group(f, [largest], true)?;
            write_group(f, companions, false)?;
            write_group(f, opposite, false)
        }
        Side::Right => {
            write_group(f, opposite, false)?;
            write_group(f, [largest], true)?;
            write_group(f, companions, false)
        }
    }
}

fn write_balanced<A, B>(f: &mut fmt::Formatter<'_>, left: A, right: B) -> fmt::Result
where
    A: IntoIterator<Item = usize>,
    B: IntoIterator<Item = usize>,
{
    f.write_str("B")?;
    write_group(f, left, false)?;
    write_group(f, right, false)
}

/// `{largest*}{companions}{opposite}` for `Left`,
/// `{opposite}{largest*}{companions}` for `Right`, `B{left}{right}` for
/// balanced elements.
impl fmt::Display for VhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VhElement::Dominant {
                side,
                largest,
                companions,
                opposite,
                ..
            } => write_dominant(
                f,
                *side,
                *largest,
                companions.iter().copied(),
                opposite.iter().copied(),
            ),
            VhElement::Balanced { left, right } => {
                write_balanced(f, left.iter().copied(), right.iter().copied())
            }
        }
    }
}

pub fn serialize_vh(e: &VhElement) -> String {
    e.to_string()
}

pub fn parse_vh(text: &str, n: usize) -> Result<VhElement> {
    let text = text.trim();
    let err = |m: &str| Error::parse(1, format!("`{text}`: {m}"));
    let (balanced, body) = match text.strip_prefix('B') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let mut groups = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let inner = rest.strip_prefix('{').ok_or_else(|| err("expected `{`"))?;
        let close = inner.find('}').ok_or_else(|| err("unclosed `{`"))?;
        let (content, starred) = match inner[..close].strip_suffix('*') {
            Some(c) => (c, true),
            None => (&inner[..close], false),
        };
        let values = if content.is_empty() {
            Vec::new()
        } else {
            content
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| err("group members must be non-negative integers"))?
        };
        groups.push((values, starred));
        rest = &inner[close + 1..];
    }
    let element = if balanced {
        match groups.as_slice() {
            [(left, false), (right, false)] => VhElement::Balanced {
                left: left.clone(),
                right: right.clone(),
            },
            _ => return Err(err("balanced form is `B{..}{..}` without `*`")),
        }
    } else {
        let (side, largest, companions, opposite) = match groups.as_slice() {
            [(l, true), (c, false), (o, false)] => (Side::Left, l, c, o),
            [(o, false), (l, true), (c, false)] => (Side::Right, l, c, o),
            _ => return Err(err("dominant form needs three groups, one starred")),
        };
        let &[largest] = largest.as_slice() else {
            return Err(err("the starred group holds exactly one size"));
        };
        if largest + 1 >= n {
            return Err(Error::InvalidElement {
                n,
                message: format!("largest diagonal {largest} too big"),
            });
        }
        VhElement::Dominant {
            side,
            i: n - 1 - largest,
            largest,
            companions: companions.clone(),
            opposite: opposite.clone(),
        }
    };
    element.check(n)?;
    Ok(element)
}

/// A generated element, borrowing its sets from the generator state.
#[derive(Debug, Clone, Copy)]
pub enum VhView<'a> {
    Dominant {
        side: Side,
        i: usize,
        largest: usize,
        companions: SubsetView<'a>,
        opposite: SubsetView<'a>,
    },
    Balanced {
        left: SubsetView<'a>,
        right: SubsetView<'a>,
    },
}

impl VhView<'_> {
    pub fn to_element(&self) -> VhElement {
        match *self {
            VhView::Dominant {
                side,
                i,
                largest,
                companions,
                opposite,
            } => VhElement::Dominant {
                side,
                i,
                largest,
                companions: companions.to_vec(),
                opposite: opposite.to_vec(),
            },
            VhView::Balanced { left, right } => VhElement::Balanced {
                left: left.to_vec(),
                right: right.to_vec(),
            },
        }
    }
}

impl fmt::Display for VhView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VhView::Dominant {
                side,
                largest,
                companions,
                opposite,
                ..
            } => write_dominant(f, side, largest, companions.iter(), opposite.iter()),
            VhView::Balanced { left, right } => write_balanced(f, left.iter(), right.iter()),
        }
    }
}

/// Visits every element of `VH(n, k)` once.
///
/// Order: dominant elements by ascending `i`, then ascending companion sum
/// `k1`, all `Left` elements of a `(i, k1)` block before its `Right`
/// elements; then balanced elements by ascending left sum.
pub fn gen_vh<F>(n: usize, k: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&VhView<'_>),
{
    let mut counter = OpCounter::default();
    let _ = try_gen_vh_counted(n, k, &mut counter, |v| {
        visit(v);
        ControlFlow::Continue(())
    })?;
    Ok(counter.outputs)
}

/// Instrumented [`gen_vh`] that stops when `visit` breaks.
///
/// Two [`C4State`]s are allocated once (the O(n) preprocessing, recorded in
/// `counter.preprocessing`); between consecutive `i` the subset sizes they
/// serve move by one, so re-targeting them is O(1).
pub fn try_gen_vh_counted<F>(
    n: usize,
    k: u64,
    counter: &mut OpCounter,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&VhView<'_>) -> ControlFlow<()>,
{
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
    }
    let i_max = (n - 1) / 2;
    let half = (n - 2) / 2;
    let major_cap = n.saturating_sub(3).max(half);
    let mut major = C4State::with_active(major_cap, if i_max >= 1 { n - 3 } else { half })?;
    let mut minor = C4State::with_active(half, 0)?;
    counter.preprocessing += (major_cap + 1 + half + 1) as u64;

    let mut major_ops = OpCounter::default();
    let mut minor_ops = OpCounter::default();
    let mut outputs = 0u64;
    let k = k as i64;

    let flow = 'run: {
        for i in 1..=i_max {
            if i > 1 {
                major.shift_active(n - i - 2)?;
                minor.shift_active(i - 1)?;
            }
            counter.steps += 1;
            let largest = n - i - 1;
            let rest = k - largest as i64;
            if rest < 0 {
                continue;
            }
            let lo = (rest - triangular(i - 1) as i64).max(0);
            let hi = rest.min(triangular(n - i - 2) as i64);
            for k1 in lo..=hi {
                for side in [Side::Left, Side::Right] {
                    counter.steps += 1;
                    let flow = major.try_generate_counted(k1, &mut major_ops, |companions| {
                        minor.try_generate_counted(rest - k1, &mut minor_ops, |opposite| {
                            outputs += 1;
                            visit(&VhView::Dominant {
                                side,
                                i,
                                largest,
                                companions: *companions,
                                opposite: *opposite,
                            })
                        })
                    });
                    if flow.is_break() {
                        break 'run flow;
                    }
                }
            }
        }

        retarget(&mut major, half, counter)?;
        retarget(&mut minor, half, counter)?;
        let lo = (k - triangular(half) as i64).max(0);
        let hi = k.min(triangular(half) as i64);
        for k1 in lo..=hi {
            counter.steps += 1;
            let flow = major.try_generate_counted(k1, &mut major_ops, |left| {
                minor.try_generate_counted(k - k1, &mut minor_ops, |right| {
                    outputs += 1;
                    visit(&VhView::Balanced {
                        left: *left,
                        right: *right,
                    })
                })
            });
            if flow.is_break() {
                break 'run flow;
            }
        }
        ControlFlow::Continue(())
    };

    counter.steps += major_ops.steps + minor_ops.steps;
    counter.outputs += outputs;
    Ok(flow)
}

/// Moves an empty state one step at a time; at most one step is needed
/// between the last dominant block and the balanced block.
fn retarget(state: &mut C4State, target: usize, counter: &mut OpCounter) -> Result<()> {
    while state.active_n() != target {
        let next = if state.active_n() < target {
            state.active_n() + 1
        } else {
            state.active_n() - 1
        };
        state.shift_active(next)?;
        counter.steps += 1;
    }
    Ok(())
}

/// `|VH(n, k)|` without enumeration. Equals `|VD(n, k)|` for even `n` and
/// `|HD(n, k)|` for odd `n`.
pub fn count_vd(n: usize, k: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
    }
    let table = KsumTable::new(n.saturating_sub(3).max((n - 2) / 2));
    Ok(count_with(&table, n, k as i64))
}

/// `|VH(n, k)|` for `k = 0..=max_diagonal_sum(n)`.
pub fn count_vd_all(n: usize) -> Result<Vec<BigUint>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
    }
    let table = KsumTable::new(n.saturating_sub(3).max((n - 2) / 2));
    Ok((0..=max_diagonal_sum(n) as i64)
        .map(|k| count_with(&table, n, k))
        .collect())
}

/// Largest `k` with `VH(n, k)` non-empty.
pub fn max_diagonal_sum(n: usize) -> u64 {
    let half = (n.max(2) - 2) / 2;
    let balanced = 2 * triangular(half);
    if n >= 3 {
        balanced.max((n - 2) as u64 + triangular(n - 3))
    } else {
        balanced
    }
}

fn count_with(table: &KsumTable, n: usize, k: i64) -> BigUint {
    let mut total = BigUint::zero();
    for i in 1..=(n - 1) / 2 {
        let rest = k - (n - i - 1) as i64;
        if rest < 0 {
            continue;
        }
        let mut block = BigUint::zero();
        for k1 in 0..=rest {
            let a = table.get(n - i - 2, k1);
            if a.is_zero() {
                continue;
            }
            block += a * table.get(i - 1, rest - k1);
        }
        total += block * 2u32;
    }
    let half = (n - 2) / 2;
    for k1 in 0..=k {
        total += table.get(half, k1) * table.get(half, k - k1);
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slope {
    Descending,
    Ascending,
}

/// Start cell and step of the staircase of `size` dominoes with the given
/// slope, 1-based.
fn staircase(n: usize, slope: Slope, size: usize) -> (usize, usize, isize, isize) {
    match (slope, size.is_multiple_of(2)) {
        (Slope::Descending, true) => (size + 1, n, -1, -1),
        (Slope::Descending, false) => (n - size, 1, 1, 1),
        (Slope::Ascending, true) => (size + 1, 1, -1, 1),
        (Slope::Ascending, false) => (n - size, n, 1, -1),
    }
}

/// The covering of the `n x n` grid named by `e`; `n` must be even.
pub fn render_square(e: &VhElement, n: usize) -> Result<Covering> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "coverings are only realised for even n, got {n}"
        )));
    }
    e.check(n)?;

    let mut flips: Vec<(Slope, usize)> = Vec::new();
    match e {
        VhElement::Dominant {
            side,
            largest,
            companions,
            opposite,
            ..
        } => {
            let (own, other) = match side {
                Side::Left => (Slope::Descending, Slope::Ascending),
                Side::Right => (Slope::Ascending, Slope::Descending),
            };
            flips.push((own, *largest));
            flips.extend(companions.iter().map(|&d| (own, d)));
            flips.extend(opposite.iter().map(|&d| (other, d)));
        }
        VhElement::Balanced { left, right } => {
            flips.extend(left.iter().map(|&d| (Slope::Descending, d)));
            flips.extend(right.iter().map(|&d| (Slope::Ascending, d)));
        }
    }

    // Tile kind by anchor cell, row-major, 0-based.
    let mut anchors: Vec<Option<TileKind>> = vec![None; n * n];
    let at = |r: usize, c: usize| (r - 1) * n + (c - 1);
    for r in 1..=n {
        if r % 2 == 1 {
            anchors[at(r, 1)] = Some(TileKind::Monomino);
            anchors[at(r, n)] = Some(TileKind::Monomino);
            for c in (2..n - 1).step_by(2) {
                anchors[at(r, c)] = Some(TileKind::HDomino);
            }
        } else {
            for c in (1..n).step_by(2) {
                anchors[at(r, c)] = Some(TileKind::HDomino);
            }
        }
    }

    let clash = |slope: Slope, size: usize| Error::InvalidElement {
        n,
        message: format!("{slope:?} diagonal of size {size} overlaps another flip"),
    };
    for (slope, size) in flips {
        let (r0, c0, dr, dc) = staircase(n, slope, size);
        let cell =
            |t: usize, dir: isize, origin: usize| (origin as isize + t as isize * dir) as usize;
        if anchors[at(r0, c0)].take() != Some(TileKind::Monomino) {
            return Err(clash(slope, size));
        }
        for t in 1..=size {
            let col = cell(t, dc, c0).min(cell(t - 1, dc, c0));
            if anchors[at(cell(t, dr, r0), col)].take() != Some(TileKind::HDomino) {
                return Err(clash(slope, size));
            }
        }
        for t in 1..=size {
            let top = cell(t, dr, r0).min(cell(t - 1, dr, r0));
            anchors[at(top, cell(t - 1, dc, c0))] = Some(TileKind::VDomino);
        }
        anchors[at(cell(size, dr, r0), cell(size, dc, c0))] = Some(TileKind::Monomino);
    }

    let tiles = anchors
        .iter()
        .enumerate()
        .filter_map(|(idx, kind)| kind.map(|kind| Tile::new(kind, idx / n + 1, idx % n + 1)))
        .collect();
    Covering::new(n, n, tiles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elements(n: usize, k: u64) -> Vec<VhElement> {
        let mut out = Vec::new();
        gen_vh(n, k, |v| out.push(v.to_element())).unwrap();
        out
    }

    #[test]
    fn zero_vertical_dominoes() {
        for n in (2..=12).step_by(2) {
            assert_eq!(
                elements(n, 0),
                vec![VhElement::Balanced {
                    left: vec![],
                    right: vec![]
                }]
            );
        }
        assert!(elements(2, 1).is_empty());
    }

    #[test]
    fn base_covering() {
        let base = render_square(
            &VhElement::Balanced {
                left: vec![],
                right: vec![],
            },
            8,
        )
        .unwrap();
        assert_eq!(base.count(TileKind::Monomino), 8);
        assert_eq!(base.count(TileKind::VDomino), 0);
        assert_eq!(base.count(TileKind::HDomino), 28);
        assert!(base.is_tatami());
        assert_eq!(
            base.render_ascii().lines().take(2).collect::<Vec<_>>(),
            ["o<><><>o", "<><><><>"]
        );
    }

    #[test]
    fn single_flip_geometry() {
        let e = VhElement::Balanced {
            left: vec![],
            right: vec![1],
        };
        let c = render_square(&e, 8).unwrap();
        let art = c.render_ascii();
        let last: Vec<&str> = art.lines().skip(6).collect();
        assert_eq!(last, ["o<><><>^", "<><><>ov"]);

        let e = VhElement::Balanced {
            left: vec![2],
            right: vec![],
        };
        let art = render_square(&e, 8).unwrap().render_ascii();
        let top: Vec<&str> = art.lines().take(3).collect();
        assert_eq!(top, ["o<><>o^o", "<><><>v^", "o<><><>v"]);
    }

    #[test]
    fn mirror_swaps_sides() {
        for e in elements(8, 7) {
            let a = render_square(&e, 8).unwrap();
            let b = render_square(&e.mirrored(), 8).unwrap();
            let flipped: Vec<String> = a
                .render_ascii()
                .lines()
                .map(|l| {
                    l.chars()
                        .rev()
                        .map(|ch| match ch {
                            '<' => '>',
                            '>' => '<',
                            other => other,
                        })
                        .collect()
                })
                .collect();
            assert_eq!(b.render_ascii().lines().collect::<Vec<_>>(), flipped);
        }
    }

    #[test]
    fn dominant_flip_counts() {
        let e = VhElement::Dominant {
            side: Side::Left,
            i: 1,
            largest: 6,
            companions: vec![1],
            opposite: vec![],
        };
        let c = render_square(&e, 8).unwrap();
        assert_eq!(c.count(TileKind::Monomino), 8);
        assert_eq!(c.count(TileKind::VDomino), 7);
        assert_eq!(c.count(TileKind::HDomino), 21);
        assert!(c.is_tatami());
    }

    #[test]
    fn render_rejects_bad_input() {
        let base = VhElement::Balanced {
            left: vec![],
            right: vec![],
        };
        assert!(render_square(&base, 7).is_err());
        let e = VhElement::Balanced {
            left: vec![4],
            right: vec![],
        };
        assert!(matches!(
            render_square(&e, 8),
            Err(Error::InvalidElement { .. })
        ));
        let e = VhElement::Dominant {
            side: Side::Left,
            i: 2,
            largest: 6,
            companions: vec![],
            opposite: vec![],
        };
        assert!(render_square(&e, 8).is_err());
    }

    #[test]
    fn text_form() {
        let e = VhElement::Dominant {
            side: Side::Left,
            i: 1,
            largest: 6,
            companions: vec![1],
            opposite: vec![],
        };
        assert_eq!(e.to_string(), "{6*}{1}{}");
        assert_eq!(parse_vh("{6*}{1}{}", 8).unwrap(), e);
        let r = e.mirrored();
        assert_eq!(r.to_string(), "{}{6*}{1}");
        assert_eq!(parse_vh("{}{6*}{1}", 8).unwrap(), r);
        let b = VhElement::Balanced {
            left: vec![1],
            right: vec![1, 2, 3],
        };
        assert_eq!(serialize_vh(&b), "B{1}{1,2,3}");
        assert_eq!(parse_vh("B{1}{1,2,3}", 8).unwrap(), b);
    }

    #[test]
    fn parse_rejects_invalid() {
        for text in [
            "{6}{1}{}",
            "{6*}{1}",
            "{6*}{6}{}",
            "{7*}{}{}",
            "{6*,1}{}{}",
            "{5*}{}{2}",
            "B{4}{}",
            "B{1*}{}",
            "B{2,1}{}",
            "{x*}{}{}",
            "{6*}{1}{}junk",
        ] {
            assert!(parse_vh(text, 8).is_err(), "{text}");
        }
    }

    #[test]
    fn view_display_matches_element() {
        gen_vh(9, 12, |v| {
            assert_eq!(v.to_string(), v.to_element().to_string())
        })
        .unwrap();
    }

    #[test]
    fn counts_match_generation() {
        for n in 2..=12 {
            let all = count_vd_all(n).unwrap();
            for (k, expected) in all.iter().enumerate() {
                let got = gen_vh(n, k as u64, |_| {}).unwrap();
                assert_eq!(BigUint::from(got), *expected, "n={n} k={k}");
            }
            let beyond = gen_vh(n, max_diagonal_sum(n) + 1, |_| {}).unwrap();
            assert_eq!(beyond, 0);
            assert!(!all.last().unwrap().is_zero());
        }
    }
}
