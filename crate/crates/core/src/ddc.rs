//! Distinct difference configurations and their doubly periodic versions.
//!
//! A [`DotPattern`] is a DDC when all ordered difference vectors between its
//! dots are distinct. A [`PeriodicDdc`] places dots in a shape `S` and
//! replicates them over a lattice tiling; it is a doubly periodic `S`-DDC
//! when the differences stay distinct after reduction modulo the lattice.
//! Folding along a direction turns such a pattern into a Sidon set in
//! `Z_|S|` and back.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::folding::{Direction, Folding};
use crate::group::SidonSequence;
use crate::lattice::{Lattice, Point, Shape, Tiling};
use crate::search::{max_sidon, DifferenceTable};

/// Largest shape `max_ddc_dots` will search by default.
pub const DDC_SEARCH_CAP: u64 = 49;

/// Two dot pairs with the same difference vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentCollision {
    pub first: [Point; 2],
    pub second: [Point; 2],
    pub difference: Point,
}

impl fmt::Display for SegmentCollision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.first;
        let [c, d] = self.second;
        write!(f, "{a} - {b} and {c} - {d} both give {}", self.difference)
    }
}

impl std::error::Error for SegmentCollision {}

fn check_distinct(dots: &[Point]) -> Result<()> {
    let mut sorted = dots.to_vec();
    sorted.sort();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(Error::DuplicateDot(w[0].x, w[0].y)),
        None => Ok(()),
    }
}

/// A finite set of dots in `Z^2`, serialized as `{"dots": [[x, y], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDots", into = "RawDots")]
pub struct DotPattern {
    dots: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct RawDots {
    dots: Vec<Point>,
}

impl TryFrom<RawDots> for DotPattern {
    type Error = Error;
    fn try_from(raw: RawDots) -> Result<Self> {
        DotPattern::new(raw.dots)
    }
}

impl From<DotPattern> for RawDots {
    fn from(p: DotPattern) -> Self {
        RawDots { dots: p.dots }
    }
}

impl DotPattern {
    pub fn new(mut dots: Vec<Point>) -> Result<DotPattern> {
        check_distinct(&dots)?;
        dots.sort();
        Ok(DotPattern { dots })
    }

    pub fn dots(&self) -> &[Point] {
        &self.dots
    }

    pub fn len(&self) -> usize {
        self.dots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dots.is_empty()
    }

    /// Rows top to bottom over the bounding box.
    pub fn render_ascii(&self) -> String {
        if self.dots.is_empty() {
            return String::new();
        }
        let (xs, ys): (Vec<i64>, Vec<i64>) = self.dots.iter().map(|p| (p.x, p.y)).unzip();
        let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
        let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        render(x0..=x1, y0..=y1, |p| {
            Some(self.dots.binary_search(&p).is_ok())
        })
    }
}

fn render(
    xs: std::ops::RangeInclusive<i64>,
    ys: std::ops::RangeInclusive<i64>,
    cell: impl Fn(Point) -> Option<bool>,
) -> String {
    let mut lines = Vec::new();
    for y in ys.rev() {
        let line: String = xs
            .clone()
            .map(|x| match cell(Point::new(x, y)) {
                Some(true) => '•',
                Some(false) => '.',
                None => ' ',
            })
            .collect();
        lines.push(line.trim_end().to_string());
    }
    lines.join("\n")
}

/// Checks that all ordered differences `a - b`, `a != b`, are distinct.
pub fn is_ddc(pattern: &DotPattern) -> Result<(), SegmentCollision> {
    distinct_differences(pattern.dots(), |a, b| a - b)
}

fn distinct_differences<K: std::hash::Hash + Eq>(
    dots: &[Point],
    key: impl Fn(Point, Point) -> K,
) -> Result<(), SegmentCollision> {
    let mut seen: HashMap<K, [Point; 2]> = HashMap::new();
    for &a in dots {
        for &b in dots {
            if a == b {
                continue;
            }
            if let Some(&first) = seen.get(&key(a, b)) {
                return Err(SegmentCollision {
                    first,
                    second: [a, b],
                    difference: a - b,
                });
            }
            seen.insert(key(a, b), [a, b]);
        }
    }
    Ok(())
}

/// Dots inside the shape of a lattice tiling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPeriodic", into = "RawPeriodic")]
pub struct PeriodicDdc {
    tiling: Tiling,
    dots: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct RawPeriodic {
    lattice: Lattice,
    shape: Shape,
    dots: Vec<Point>,
}

impl TryFrom<RawPeriodic> for PeriodicDdc {
    type Error = Error;
    fn try_from(raw: RawPeriodic) -> Result<Self> {
        PeriodicDdc::new(raw.lattice, raw.shape, raw.dots)
    }
}

impl From<PeriodicDdc> for RawPeriodic {
    fn from(c: PeriodicDdc) -> Self {
        RawPeriodic {
            lattice: *c.tiling.lattice(),
            shape: c.tiling.shape().clone(),
            dots: c.dots,
        }
    }
}

impl PeriodicDdc {
    pub fn new(lattice: Lattice, shape: Shape, dots: Vec<Point>) -> Result<PeriodicDdc> {
        PeriodicDdc::on_tiling(Tiling::new(lattice, shape)?, dots)
    }

    pub fn on_tiling(tiling: Tiling, mut dots: Vec<Point>) -> Result<PeriodicDdc> {
        if let Some(p) = dots.iter().find(|&&p| !tiling.shape().contains(p)) {
            return Err(Error::PointOutsideShape(p.x, p.y));
        }
        check_distinct(&dots)?;
        dots.sort();
        Ok(PeriodicDdc { tiling, dots })
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    pub fn lattice(&self) -> &Lattice {
        self.tiling.lattice()
    }

    pub fn shape(&self) -> &Shape {
        self.tiling.shape()
    }

    pub fn dots(&self) -> &[Point] {
        &self.dots
    }

    pub fn len(&self) -> usize {
        self.dots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dots.is_empty()
    }

    pub fn pattern(&self) -> DotPattern {
        DotPattern {
            dots: self.dots.clone(),
        }
    }

    /// Whether the replicated pattern has a dot at `p`.
    pub fn has_dot(&self, p: Point) -> bool {
        self.dots
            .binary_search(&self.tiling.reduce(p).offset)
            .is_ok()
    }

    /// Distinct ordered differences modulo the lattice. The reported
    /// difference is the raw `a - b`.
    pub fn is_doubly_periodic_ddc(&self) -> Result<(), SegmentCollision> {
        let hnf = self.tiling.hnf();
        distinct_differences(&self.dots, |a, b| hnf.coset_index(a - b))
    }

    /// Checks every translate `S + u` of the shape as a plain DDC. Modulo
    /// the lattice these are all the windows, so `u` ranges over `S`.
    pub fn windows_are_ddc(&self) -> Result<(), SegmentCollision> {
        for &u in self.shape().points() {
            let window: Vec<Point> = self
                .shape()
                .points()
                .iter()
                .map(|&w| w + u)
                .filter(|&p| self.has_dot(p))
                .collect();
            is_ddc(&DotPattern::new(window).expect("window points are distinct"))?;
        }
        Ok(())
    }

    /// Rows top to bottom over the bounding box of the shape; cells outside
    /// the shape are blank.
    pub fn render_ascii(&self) -> String {
        let (lo, hi) = self.shape().bounds();
        render(lo.x..=hi.x, lo.y..=hi.y, |p| {
            self.shape()
                .contains(p)
                .then(|| self.dots.binary_search(&p).is_ok())
        })
    }
}

/// Dots at `(i, α^i mod p)` on the `(p-1) x p` rectangle with lattice
/// `[[p-1, 0], [0, p]]`.
pub fn construct_welch(p: u64, alpha: u64) -> Result<PeriodicDdc> {
    let field = Field::new(p, 1)?;
    let a = field.from_int(alpha % p)?;
    if !field.is_primitive(&a)? {
        return Err(Error::NotPrimitive(vec![alpha]));
    }
    let w = p as i64 - 1;
    let lattice = Lattice::new([[w, 0], [0, p as i64]])?;
    let shape = Shape::rectangle(w, p as i64)?;
    let dots = (0..w)
        .map(|i| Ok(Point::new(i, field.to_int(&field.pow(&a, i)?)? as i64)))
        .collect::<Result<_>>()?;
    PeriodicDdc::new(lattice, shape, dots)
}

/// Dots at `(i, j)` with `α^i + β^j = 1` on the `(q-1) x (q-1)` square with
/// lattice `[[q-1, 0], [0, q-1]]`.
pub fn construct_golomb(
    field: &Field,
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<PeriodicDdc> {
    let q = field.order();
    if q < 3 {
        return Err(Error::OutOfRange(format!(
            "Golomb construction needs q >= 3, got {q}"
        )));
    }
    for g in [alpha, beta] {
        if !field.is_primitive(g)? {
            return Err(Error::NotPrimitive(g.coeffs().to_vec()));
        }
    }
    let w = q as i64 - 1;
    let one = field.one();
    let mut dots = Vec::new();
    for i in 0..w {
        let a = field.pow(alpha, i)?;
        if a == one {
            continue;
        }
        let j = field.log_base(beta, &field.sub(&one, &a)?)?;
        dots.push(Point::new(i, j as i64));
    }
    PeriodicDdc::new(Lattice::rectangular(w, w)?, Shape::rectangle(w, w)?, dots)
}

/// Which point is moved to the origin before unfolding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    /// The dot with the smallest `y`, ties broken by smallest `x`.
    LowerLeft,
    /// No translation.
    Origin,
    Dot(Point),
}

impl FromStr for Anchor {
    type Err = Error;

    /// `lower-left`, `origin`, or `x,y`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower-left" => Ok(Anchor::LowerLeft),
            "origin" => Ok(Anchor::Origin),
            _ => {
                let bad = || Error::OutOfRange(format!("cannot parse anchor {s:?}"));
                let (a, b) = s.split_once(',').ok_or_else(bad)?;
                let x = a.trim().parse().map_err(|_| bad())?;
                let y = b.trim().parse().map_err(|_| bad())?;
                Ok(Anchor::Dot(Point::new(x, y)))
            }
        }
    }
}

impl PeriodicDdc {
    pub fn anchor_point(&self, anchor: Anchor) -> Result<Point> {
        match anchor {
            Anchor::Origin => Ok(Point::ORIGIN),
            Anchor::LowerLeft => self
                .dots
                .iter()
                .min_by_key(|p| (p.y, p.x))
                .copied()
                .ok_or(Error::EmptyPattern),
            Anchor::Dot(p) if self.dots.contains(&p) => Ok(p),
            Anchor::Dot(p) => Err(Error::AnchorNotDot(p.x, p.y)),
        }
    }
}

/// Moves the anchor to the origin, then reads the positions of the dots along
/// the folded-row as a subset of `Z_|S|`.
pub fn unfold_to_sidon(c: &PeriodicDdc, d: Direction, anchor: Anchor) -> Result<SidonSequence> {
    let folding = Folding::new(c.tiling.clone(), d)?;
    let shift = c.anchor_point(anchor)?;
    let residues: Vec<u64> = c
        .dots
        .iter()
        .map(|&p| folding.position_of(p - shift) as u64)
        .collect();
    SidonSequence::cyclic(folding.size() as u64, &residues)
}

/// Places a dot at the `t`-th point of the folded-row for each `t` in `s`.
///
/// Unfolding the result with [`Anchor::Origin`] gives `s` back; with any
/// other anchor it gives `s - t0`, where `t0` is the row position of the
/// anchor dot.
pub fn fold_sidon_to_ddc(s: &SidonSequence, tiling: &Tiling, d: Direction) -> Result<PeriodicDdc> {
    let n = tiling.size() as u64;
    let residues = match s.group().as_cyclic() {
        Some(m) if m == n => s.residues().expect("cyclic group"),
        _ => {
            return Err(Error::GroupMismatch {
                expected: n,
                got: s.group().moduli().to_vec(),
            })
        }
    };
    if !s.is_sidon() {
        return Err(Error::NotSidon);
    }
    let folding = Folding::new(tiling.clone(), d)?;
    let dots = residues
        .iter()
        .map(|&t| folding.point_at(t as usize))
        .collect();
    PeriodicDdc::on_tiling(tiling.clone(), dots)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DdcSearchResult {
    pub max: usize,
    pub witness: PeriodicDdc,
}

/// Exact maximum number of dots in a doubly periodic DDC on the tiling.
pub fn max_ddc_dots(tiling: &Tiling) -> Result<DdcSearchResult> {
    max_ddc_dots_with_cap(tiling, DDC_SEARCH_CAP)
}

pub fn max_ddc_dots_with_cap(tiling: &Tiling, cap: u64) -> Result<DdcSearchResult> {
    let n = tiling.size();
    if n as u64 > cap {
        return Err(Error::SearchCapExceeded {
            size: n as u64,
            cap,
        });
    }
    let table = DifferenceTable::new(n, |a, b| tiling.cell_difference(a, b));
    let cells = max_sidon(&table);
    let dots = cells.iter().map(|&c| tiling.point(c)).collect();
    Ok(DdcSearchResult {
        max: cells.len(),
        witness: PeriodicDdc::on_tiling(tiling.clone(), dots)?,
    })
}
