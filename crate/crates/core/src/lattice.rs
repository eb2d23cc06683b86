//! Sublattices of Z^2, lattice tilings by finite shapes, and periods of
//! doubly periodic patterns.
//!
//! Every lattice is handled through its Hermite normal form: rows `(a, b)`
//! and `(0, d)` with `a, d > 0` and `0 <= b < d`. Reducing `x` modulo `a`
//! with the first row and then `y` modulo `d` with the second gives a
//! canonical representative of each coset of `Z^2 / L` in the box
//! `[0, a) x [0, d)`, so a shape tiles exactly when its points hit every
//! such representative once.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arith::{ext_gcd, gcd};
use crate::error::{Error, Result};

/// A grid point `(x, y)`, serialized as `[x, y]`. `x` runs horizontally
/// (columns), `y` vertically (rows, upwards).
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<Point> for i64 {
    type Output = Point;
    fn mul(self, p: Point) -> Point {
        Point::new(self * p.x, self * p.y)
    }
}

fn cross(u: Point, v: Point) -> i64 {
    u.x * v.y - u.y * v.x
}

/// A full-rank sublattice of Z^2 given by a generator matrix whose rows are
/// the basis vectors. Serialized row-major as `[[v11, v12], [v21, v22]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[[i64; 2]; 2]", into = "[[i64; 2]; 2]")]
pub struct Lattice {
    rows: [[i64; 2]; 2],
}

impl TryFrom<[[i64; 2]; 2]> for Lattice {
    type Error = Error;
    fn try_from(rows: [[i64; 2]; 2]) -> Result<Self> {
        Lattice::new(rows)
    }
}

impl From<Lattice> for [[i64; 2]; 2] {
    fn from(l: Lattice) -> Self {
        l.rows
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.rows;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Hermite normal form `(a, b), (0, d)` of a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hnf {
    pub a: i64,
    pub b: i64,
    pub d: i64,
}

impl Hnf {
    /// Reduces a point into the box `[0, a) x [0, d)`.
    pub fn canonical(&self, p: Point) -> Point {
        let t = p.x.div_euclid(self.a);
        let x = p.x - t * self.a;
        let y = (p.y - t * self.b).rem_euclid(self.d);
        Point::new(x, y)
    }

    /// Index of the coset of `p` in `0..a*d`.
    pub fn coset_index(&self, p: Point) -> usize {
        let c = self.canonical(p);
        (c.x * self.d + c.y) as usize
    }

    pub fn volume(&self) -> u64 {
        (self.a * self.d) as u64
    }

    pub fn lattice(&self) -> Lattice {
        Lattice {
            rows: [[self.a, self.b], [0, self.d]],
        }
    }

    /// The lattice spanned by this one and an extra vector.
    fn join(self, w: Point) -> Hnf {
        let (g, s, t) = ext_gcd(self.a, w.x);
        let top_y = s * self.b + t * w.y;
        let leftover = (w.x / g) * self.b - (self.a / g) * w.y;
        let d = gcd(self.d, leftover);
        Hnf {
            a: g,
            b: top_y.rem_euclid(d),
            d,
        }
    }
}

impl Lattice {
    pub fn new(rows: [[i64; 2]; 2]) -> Result<Lattice> {
        let det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
        if det == 0 {
            return Err(Error::SingularLattice(rows));
        }
        Ok(Lattice { rows })
    }

    /// The lattice with basis `(w, 0), (0, h)`.
    pub fn rectangular(w: i64, h: i64) -> Result<Lattice> {
        Self::new([[w, 0], [0, h]])
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        self.rows
    }

    pub fn basis(&self) -> [Point; 2] {
        [self.rows[0].into(), self.rows[1].into()]
    }

    pub fn determinant(&self) -> i64 {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }

    /// `|det G|`: the number of cosets of Z^2 / L.
    pub fn volume(&self) -> u64 {
        self.determinant().unsigned_abs()
    }

    pub fn hnf(&self) -> Hnf {
        let [[v11, v12], [v21, v22]] = self.rows;
        let (g, s, t) = ext_gcd(v11, v21);
        let d = self.determinant().abs() / g;
        Hnf {
            a: g,
            b: (s * v12 + t * v22).rem_euclid(d),
            d,
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        self.hnf().canonical(p) == Point::ORIGIN
    }

    /// Same lattice (possibly different bases).
    pub fn same_as(&self, other: &Lattice) -> bool {
        self.hnf() == other.hnf()
    }

    /// The smallest lattice containing `self` and every vector of `extra`.
    pub fn join(&self, extra: &[Point]) -> Lattice {
        extra.iter().fold(self.hnf(), |h, &w| h.join(w)).lattice()
    }
}

/// A finite set of grid points containing the origin, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct Shape {
    points: Vec<Point>,
}

impl TryFrom<Vec<Point>> for Shape {
    type Error = Error;
    fn try_from(points: Vec<Point>) -> Result<Self> {
        Shape::new(points)
    }
}

impl From<Shape> for Vec<Point> {
    fn from(s: Shape) -> Self {
        s.points
    }
}

impl Shape {
    pub fn new(mut points: Vec<Point>) -> Result<Shape> {
        points.sort_unstable();
        points.dedup();
        if points.binary_search(&Point::ORIGIN).is_err() {
            return Err(Error::ShapeWithoutOrigin);
        }
        Ok(Shape { points })
    }

    /// `{(x, y) : 0 <= x < w, 0 <= y < h}`.
    pub fn rectangle(w: i64, h: i64) -> Result<Shape> {
        if w < 1 || h < 1 {
            return Err(Error::OutOfRange(format!("rectangle {w} x {h}")));
        }
        Self::new(
            (0..w)
                .flat_map(|x| (0..h).map(move |y| Point::new(x, y)))
                .collect(),
        )
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    /// Inclusive bounding box `(min, max)`.
    pub fn bounds(&self) -> (Point, Point) {
        let xs = self.points.iter().map(|p| p.x);
        let ys = self.points.iter().map(|p| p.y);
        (
            Point::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            Point::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }
}

/// The rectangle `[0, a) x [0, d)` read off the Hermite normal form; always a
/// complete set of coset representatives.
pub fn fundamental_shape(lattice: &Lattice) -> Shape {
    let h = lattice.hnf();
    Shape::rectangle(h.a, h.d).expect("HNF diagonal is positive")
}

/// `c(p)` and `p - c(p)`: the lattice point whose copy of the shape holds `p`,
/// and the position of `p` inside the copy at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    pub center: Point,
    pub offset: Point,
}

/// A lattice together with a shape it tiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    lattice: Lattice,
    shape: Shape,
    hnf: Hnf,
    /// coset index -> index of the shape point in that coset
    cell_of_coset: Vec<u32>,
}

impl Tiling {
    pub fn new(lattice: Lattice, shape: Shape) -> Result<Tiling> {
        let hnf = lattice.hnf();
        let n = lattice.volume() as usize;
        if shape.len() != n {
            return Err(Error::NotTiling(format!(
                "shape has {} points but the lattice has volume {n}",
                shape.len()
            )));
        }
        let mut cell_of_coset = vec![u32::MAX; n];
        for (i, &p) in shape.points.iter().enumerate() {
            let c = hnf.coset_index(p);
            if cell_of_coset[c] != u32::MAX {
                let q = shape.points[cell_of_coset[c] as usize];
                return Err(Error::NotTiling(format!(
                    "{q} and {p} are congruent modulo the lattice"
                )));
            }
            cell_of_coset[c] = i as u32;
        }
        Ok(Tiling {
            lattice,
            shape,
            hnf,
            cell_of_coset,
        })
    }

    /// The lattice with its HNF rectangle as the shape.
    pub fn fundamental(lattice: Lattice) -> Tiling {
        Tiling::new(lattice, fundamental_shape(&lattice)).expect("HNF rectangle tiles")
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn hnf(&self) -> Hnf {
        self.hnf
    }

    /// `|S| = V(L)`.
    pub fn size(&self) -> usize {
        self.shape.len()
    }

    pub fn point(&self, cell: usize) -> Point {
        self.shape.points[cell]
    }

    /// Index into [`Shape::points`] of the cell congruent to `p`.
    pub fn cell_of(&self, p: Point) -> usize {
        self.cell_of_coset[self.hnf.coset_index(p)] as usize
    }

    pub fn reduce(&self, p: Point) -> Reduction {
        let offset = self.point(self.cell_of(p));
        Reduction {
            center: p - offset,
            offset,
        }
    }

    /// `cell_of(point(a) - point(b))`: the group law of Z^2 / L on cells.
    pub fn cell_difference(&self, a: usize, b: usize) -> usize {
        self.cell_of(self.point(a) - self.point(b))
    }
}

/// Whether `shape` is a complete set of coset representatives of Z^2 / L.
pub fn is_lattice_tiling(lattice: &Lattice, shape: &Shape) -> bool {
    Tiling::new(*lattice, shape.clone()).is_ok()
}

/// Reduction of a single point; builds the tiling on every call.
pub fn reduce(lattice: &Lattice, shape: &Shape, p: Point) -> Result<Reduction> {
    Ok(Tiling::new(*lattice, shape.clone())?.reduce(p))
}

/// A basis `{(π1, π2), (ξ1, ξ2)}` of a period lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodPair {
    pub first: Point,
    pub second: Point,
}

impl PeriodPair {
    pub fn volume(&self) -> u64 {
        cross(self.first, self.second).unsigned_abs()
    }

    pub fn lattice(&self) -> Result<Lattice> {
        Lattice::new([self.first.into(), self.second.into()])
    }
}

/// Basis of the lattice of all translations fixing the doubly periodic
/// pattern whose dots inside the tiling's shape are `dots`.
///
/// Every symmetry is congruent modulo `L` to some point of the shape, so it
/// suffices to test the shape's points as translation vectors; the result is
/// `L` joined with the ones that fix the pattern.
pub fn minimal_period(tiling: &Tiling, dots: &[Point]) -> Result<PeriodPair> {
    let mut is_dot = vec![false; tiling.size()];
    for &d in dots {
        let cell = tiling
            .shape()
            .index_of(d)
            .ok_or(Error::PointOutsideShape(d.x, d.y))?;
        is_dot[cell] = true;
    }
    let symmetries: Vec<Point> = tiling
        .shape()
        .points()
        .iter()
        .copied()
        .filter(|&t| dots.iter().all(|&d| is_dot[tiling.cell_of(d + t)]))
        .collect();
    let [first, second] = tiling.lattice().join(&symmetries).basis();
    Ok(PeriodPair { first, second })
}

/// Whether translating by `t` maps the pattern onto itself.
pub fn is_symmetry(tiling: &Tiling, dots: &[Point], t: Point) -> bool {
    let cells: HashSet<usize> = dots.iter().map(|&d| tiling.cell_of(d)).collect();
    dots.iter().all(|&d| cells.contains(&tiling.cell_of(d + t)))
}
