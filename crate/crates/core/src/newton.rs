//! p-adic valuations and Newton polygons.
//!
//! The Newton polygon of `f = sum a_i x^i` with respect to a prime `p` is the
//! lower convex hull of the points `(i, v_p(a_i))` over nonzero
//! coefficients. Dumas' theorem says the segment-vector system of a product
//! is the union of the systems of its factors; [`verify_dumas`] checks that
//! on concrete instances.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Largest `k` with `p^k | n`.
pub fn p_adic_valuation(n: &BigInt, p: &BigInt) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if n.is_zero() {
        return Err(Error::InfiniteValuation);
    }
    Ok(valuation_unchecked(n, p))
}

fn valuation_unchecked(n: &BigInt, p: &BigInt) -> u64 {
    let mut k = 0;
    let mut n = n.abs();
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ValuationPoint {
    pub index: usize,
    pub val: u64,
}

impl ValuationPoint {
    pub fn new(index: usize, val: u64) -> Self {
        ValuationPoint { index, val }
    }
}

impl fmt::Display for ValuationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.index, self.val)
    }
}

/// Points `(i, v_p(a_i))` for every nonzero coefficient, in index order.
pub fn valuation_points(f: &Polynomial, p: &BigInt) -> Result<Vec<ValuationPoint>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| ValuationPoint::new(i, valuation_unchecked(c, p)))
        .collect())
}

/// `(b - a) x (c - a)`; negative when `c` lies strictly below the line
/// through `a` and `b` (for `a.index < b.index`).
fn cross(a: ValuationPoint, b: ValuationPoint, c: ValuationPoint) -> i128 {
    let (ax, ay) = (a.index as i128, a.val as i128);
    let (bx, by) = (b.index as i128, b.val as i128);
    let (cx, cy) = (c.index as i128, c.val as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

/// Lower convex hull of points sorted by strictly increasing index, by
/// Andrew's monotone chain. Collinear interior points are dropped so that
/// consecutive slopes strictly increase.
pub fn lower_hull(points: &[ValuationPoint]) -> Vec<ValuationPoint> {
    debug_assert!(points.windows(2).all(|w| w[0].index < w[1].index));
    let mut hull: Vec<ValuationPoint> = Vec::with_capacity(points.len());
    for &pt in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
            hull.pop();
        }
        hull.push(pt);
    }
    hull
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    #[serde(with = "crate::decimal::plain")]
    pub prime: BigInt,
    pub vertices: Vec<ValuationPoint>,
}

/// A hull edge between consecutive vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: ValuationPoint,
    pub to: ValuationPoint,
}

impl Edge {
    pub fn dx(&self) -> i64 {
        (self.to.index - self.from.index) as i64
    }

    pub fn dy(&self) -> i64 {
        self.to.val as i64 - self.from.val as i64
    }

    /// Slope as a reduced fraction `(num, den)` with `den > 0`.
    pub fn slope(&self) -> (i64, i64) {
        let (dx, dy) = (self.dx(), self.dy());
        let g = dx.gcd(&dy);
        (dy / g, dx / g)
    }

    pub fn segment_vector(&self) -> SegmentVector {
        SegmentVector::from_displacement(self.dx(), self.dy())
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.slope();
        if den == 1 {
            write!(f, "{} -> {}  slope {}", self.from, self.to, num)
        } else {
            write!(f, "{} -> {}  slope {}/{}", self.from, self.to, num, den)
        }
    }
}

impl NewtonPolygon {
    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|w| Edge {
                from: w[0],
                to: w[1],
            })
            .collect()
    }

    /// Edges with negative slope, left to right.
    pub fn negative_slope_segments(&self) -> Vec<Edge> {
        self.edges().into_iter().filter(|e| e.dy() < 0).collect()
    }

    pub fn segment_vectors(&self) -> SegmentVectors {
        SegmentVectors::from_edges(&self.edges())
    }
}

pub fn newton_polygon(f: &Polynomial, p: &BigInt) -> Result<NewtonPolygon> {
    let points = valuation_points(f, p)?;
    Ok(NewtonPolygon {
        prime: p.clone(),
        vertices: lower_hull(&points),
    })
}

/// Primitive lattice direction `(dx, dy)` with `dx > 0`, `gcd(dx, |dy|) = 1`,
/// repeated `multiplicity` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SegmentVector {
    pub dx: i64,
    pub dy: i64,
    #[serde(rename = "mult")]
    pub multiplicity: u64,
}

impl SegmentVector {
    /// Splits the displacement of an edge into primitive steps.
    pub fn from_displacement(dx: i64, dy: i64) -> Self {
        assert!(dx > 0, "hull edges advance in index");
        let g = dx.gcd(&dy);
        SegmentVector {
            dx: dx / g,
            dy: dy / g,
            multiplicity: g as u64,
        }
    }
}

impl fmt::Display for SegmentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})x{}", self.dx, self.dy, self.multiplicity)
    }
}

/// Multiset of primitive directions, merged by direction and kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SegmentVectors(BTreeMap<(i64, i64), u64>);

impl SegmentVectors {
    pub fn from_edges(edges: &[Edge]) -> Self {
        let mut out = SegmentVectors::default();
        for e in edges {
            out.insert(e.segment_vector());
        }
        out
    }

    pub fn insert(&mut self, v: SegmentVector) {
        *self.0.entry((v.dx, v.dy)).or_insert(0) += v.multiplicity;
    }

    pub fn union(&self, other: &SegmentVectors) -> SegmentVectors {
        let mut out = self.clone();
        for v in other.iter() {
            out.insert(v);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = SegmentVector> + '_ {
        self.0.iter().map(|(&(dx, dy), &m)| SegmentVector {
            dx,
            dy,
            multiplicity: m,
        })
    }

    pub fn to_vec(&self) -> Vec<SegmentVector> {
        self.iter().collect()
    }

    /// `sum dx * multiplicity`, the horizontal extent covered.
    pub fn total_width(&self) -> u64 {
        self.iter().map(|v| v.dx as u64 * v.multiplicity).sum()
    }
}

impl fmt::Display for SegmentVectors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Number of integer points on the closed segment `AB`:
/// `gcd(|x1 - x2|, |y1 - y2|) + 1`.
pub fn lattice_points_on_segment(a: (i64, i64), b: (i64, i64)) -> u64 {
    let dx = (a.0 - b.0).unsigned_abs();
    let dy = (a.1 - b.1).unsigned_abs();
    dx.gcd(&dy) + 1
}

/// Outcome of comparing the segment vectors of `g * h` against the union of
/// those of `g` and `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DumasCheck {
    pub product: SegmentVectors,
    pub left: SegmentVectors,
    pub right: SegmentVectors,
    pub holds: bool,
}

pub fn dumas_check(g: &Polynomial, h: &Polynomial, p: &BigInt) -> Result<DumasCheck> {
    if g.is_zero() || h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let product = newton_polygon(&(g * h), p)?.segment_vectors();
    let left = newton_polygon(g, p)?.segment_vectors();
    let right = newton_polygon(h, p)?.segment_vectors();
    let holds = product == left.union(&right);
    Ok(DumasCheck {
        product,
        left,
        right,
        holds,
    })
}

pub fn verify_dumas(g: &Polynomial, h: &Polynomial, p: &BigInt) -> Result<bool> {
    dumas_check(g, h, p).map(|c| c.holds)
}
