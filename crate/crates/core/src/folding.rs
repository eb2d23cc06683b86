//! Folding a sequence of length `|S|` onto a cyclic shape `S` and unfolding
//! it back.
//!
//! Starting at the origin, the folded-row repeatedly steps by a direction
//! `(d1, d2)`; whenever the step leaves the shape it is pulled back by the
//! lattice (`p - c(p)`). A triple `(L, S, d)` defines a folding when the row
//! visits all `|S|` cells before returning to the origin, which happens
//! exactly when `d` generates the cyclic group `Z^2 / L`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::lattice::{Lattice, Point, Tiling};

/// A nonzero integer step vector, serialized as `[d1, d2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct Direction {
    d1: i64,
    d2: i64,
}

impl Direction {
    pub fn new(d1: i64, d2: i64) -> Result<Direction> {
        if d1 == 0 && d2 == 0 {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction { d1, d2 })
    }

    pub fn d1(&self) -> i64 {
        self.d1
    }

    pub fn d2(&self) -> i64 {
        self.d2
    }

    /// `gcd(|d1|, |d2|)`.
    pub fn tau(&self) -> i64 {
        gcd(self.d1, self.d2)
    }

    pub fn as_point(&self) -> Point {
        Point::new(self.d1, self.d2)
    }

    pub fn reversed(&self) -> Direction {
        Direction {
            d1: -self.d1,
            d2: -self.d2,
        }
    }
}

impl TryFrom<[i64; 2]> for Direction {
    type Error = Error;
    fn try_from([d1, d2]: [i64; 2]) -> Result<Self> {
        Direction::new(d1, d2)
    }
}

impl From<Direction> for [i64; 2] {
    fn from(d: Direction) -> Self {
        [d.d1, d.d2]
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.d1, self.d2)
    }
}

impl FromStr for Direction {
    type Err = Error;

    /// Parses `"d1,d2"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("cannot parse direction {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let d1 = a.trim().parse().map_err(|_| bad())?;
        let d2 = b.trim().parse().map_err(|_| bad())?;
        Direction::new(d1, d2)
    }
}

/// The first `|S|` points of a folded-row, and whether they are distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedRow {
    pub points: Vec<Point>,
    pub complete: bool,
}

/// Runs the step rule `|S|` times from the origin.
pub fn folded_row(tiling: &Tiling, d: Direction) -> FoldedRow {
    let n = tiling.size();
    let mut seen = vec![false; n];
    let mut points = Vec::with_capacity(n);
    let mut complete = true;
    let mut current = Point::ORIGIN;
    for _ in 0..n {
        let cell = tiling.cell_of(current);
        complete &= !std::mem::replace(&mut seen[cell], true);
        points.push(current);
        current = tiling.reduce(current + d.as_point()).offset;
    }
    FoldedRow { points, complete }
}

/// Whether `(L, S, d)` defines a folding, by walking the row until it either
/// covers the shape or revisits a cell.
pub fn defines_folding(tiling: &Tiling, d: Direction) -> bool {
    let n = tiling.size();
    let mut seen = vec![false; n];
    let mut current = Point::ORIGIN;
    let mut visited = 0;
    loop {
        let cell = tiling.cell_of(current);
        if seen[cell] {
            break;
        }
        seen[cell] = true;
        visited += 1;
        current = tiling.reduce(current + d.as_point()).offset;
    }
    let walked = visited == n;
    debug_assert_eq!(walked, returns_to_origin_after_size(tiling, d));
    walked
}

/// The other characterization: `|S| d` reduces to the origin and no smaller
/// positive multiple does.
pub fn returns_to_origin_after_size(tiling: &Tiling, d: Direction) -> bool {
    let n = tiling.size() as i64;
    let at = |i: i64| tiling.reduce(i * d.as_point()).offset;
    at(n) == Point::ORIGIN && (1..n).all(|i| at(i) != Point::ORIGIN)
}

/// Closed-form folding test from the generator matrix.
///
/// With `τ = gcd(d1, d2)` and `d1, d2 > 0`:
/// * `(+d1, +d2)`: `gcd((d1 v22 - d2 v21)/τ, (d2 v11 - d1 v12)/τ) = 1` and `gcd(τ, |S|) = 1`
/// * `(+d1, -d2)`: `gcd((d1 v22 + d2 v21)/τ, (d2 v11 + d1 v12)/τ) = 1` and `gcd(τ, |S|) = 1`
/// * `(+d1, 0)`: `gcd(v12, v22) = 1` and `gcd(d1, |S|) = 1`
/// * `(0, +d2)`: `gcd(v11, v21) = 1` and `gcd(d2, |S|) = 1`
///
/// The first two require every entry of the matrix to be nonzero. Returns
/// `None` when no case applies (including `d1 < 0`).
pub fn defines_folding_gcd(lattice: &Lattice, size: u64, d: Direction) -> Option<bool> {
    let [[v11, v12], [v21, v22]] = lattice.rows();
    let all_nonzero = v11 != 0 && v12 != 0 && v21 != 0 && v22 != 0;
    let size = size as i64;
    let tau = d.tau();
    match (d.d1.signum(), d.d2.signum()) {
        (1, 1) if all_nonzero => {
            let (d1, d2) = (d.d1, d.d2);
            let a = (d1 * v22 - d2 * v21) / tau;
            let b = (d2 * v11 - d1 * v12) / tau;
            Some(gcd(a, b) == 1 && gcd(tau, size) == 1)
        }
        (1, -1) if all_nonzero => {
            let (d1, d2) = (d.d1, -d.d2);
            let a = (d1 * v22 + d2 * v21) / tau;
            let b = (d2 * v11 + d1 * v12) / tau;
            Some(gcd(a, b) == 1 && gcd(tau, size) == 1)
        }
        (1, 0) => Some(gcd(v12, v22) == 1 && gcd(d.d1, size) == 1),
        (0, 1) => Some(gcd(v11, v21) == 1 && gcd(d.d2, size) == 1),
        _ => None,
    }
}

/// Every folding direction with `0 <= d1, d2 < |S|`, one per folded-row.
///
/// Two directions give the same row exactly when they are congruent modulo
/// the lattice, so candidates are deduplicated by coset and the first one in
/// `(d1, d2)` order is kept. `|S| = 1` has the single trivial direction.
pub fn folding_directions(tiling: &Tiling) -> Vec<Direction> {
    let n = tiling.size();
    let bound = n.max(2) as i64;
    let hnf = tiling.hnf();
    let mut tried = vec![false; n];
    let mut out = Vec::new();
    for d1 in 0..bound {
        for d2 in 0..bound {
            let Ok(d) = Direction::new(d1, d2) else {
                continue;
            };
            let coset = hnf.coset_index(d.as_point());
            if std::mem::replace(&mut tried[coset], true) {
                continue;
            }
            if defines_folding(tiling, d) {
                out.push(d);
            }
        }
    }
    out
}

/// A folding `(L, S, d)` with its row order precomputed.
#[derive(Debug, Clone)]
pub struct Folding {
    tiling: Tiling,
    direction: Direction,
    /// cell visited at each position of the row
    order: Vec<usize>,
    /// position of each cell along the row
    position: Vec<usize>,
}

impl Folding {
    pub fn new(tiling: Tiling, direction: Direction) -> Result<Folding> {
        let row = folded_row(&tiling, direction);
        if !row.complete {
            return Err(Error::NoFolding(direction.d1, direction.d2));
        }
        let order: Vec<usize> = row.points.iter().map(|&p| tiling.cell_of(p)).collect();
        let mut position = vec![0; order.len()];
        for (t, &cell) in order.iter().enumerate() {
            position[cell] = t;
        }
        Ok(Folding {
            tiling,
            direction,
            order,
            position,
        })
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// The shape point at row position `t`.
    pub fn point_at(&self, t: usize) -> Point {
        self.tiling.point(self.order[t])
    }

    /// Row position of the cell congruent to `p`.
    pub fn position_of(&self, p: Point) -> usize {
        self.position[self.tiling.cell_of(p)]
    }

    /// Writes `seq[t]` at the `t`-th point of the row. The result is indexed
    /// like [`crate::lattice::Shape::points`].
    pub fn fold<T: Clone>(&self, seq: &[T]) -> Result<Vec<T>> {
        if seq.len() != self.size() {
            return Err(Error::LengthMismatch {
                expected: self.size(),
                got: seq.len(),
            });
        }
        Ok(self.position.iter().map(|&t| seq[t].clone()).collect())
    }

    /// Reads an array over the shape in row order.
    pub fn unfold<T: Clone>(&self, array: &[T]) -> Result<Vec<T>> {
        if array.len() != self.size() {
            return Err(Error::LengthMismatch {
                expected: self.size(),
                got: array.len(),
            });
        }
        Ok(self.order.iter().map(|&cell| array[cell].clone()).collect())
    }
}

/// Folds `seq` onto the shape along `d`.
pub fn fold<T: Clone>(seq: &[T], tiling: &Tiling, d: Direction) -> Result<Vec<T>> {
    Folding::new(tiling.clone(), d)?.fold(seq)
}

/// Unfolds an array over the shape along `d`.
pub fn unfold<T: Clone>(array: &[T], tiling: &Tiling, d: Direction) -> Result<Vec<T>> {
    Folding::new(tiling.clone(), d)?.unfold(array)
}
