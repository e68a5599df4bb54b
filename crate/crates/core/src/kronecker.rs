//! Exact factor search over `Z[x]` by Kronecker's method.
//!
//! A factor `g` of degree `d` is pinned down by its values at `d + 1`
//! integer points, and each value must divide the corresponding value of
//! `f`. We enumerate divisor tuples at the points `0, 1, -1, 2, -2, ...` and
//! build the candidate in Newton form. For an integer polynomial and integer
//! nodes every divided difference is an integer, so a tuple whose partial
//! divided differences stop being integral is abandoned at that depth; this
//! prunes the tree without losing any integer candidate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::positive_divisors;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const DEFAULT_DIVISOR_CAP: u64 = 1_000_000_000_000;

/// Number of extra sample points used as a cheap divisibility filter before
/// exact polynomial division.
const FILTER_POINTS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Largest factor degree tried; `None` means `floor(n / 2)`.
    pub max_degree: Option<usize>,
    /// Largest `|f(x_j)|` whose divisors are enumerated.
    pub divisor_cap: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_degree: None,
            divisor_cap: DEFAULT_DIVISOR_CAP,
        }
    }
}

/// The `j`-th sample point: 0, 1, -1, 2, -2, ...
pub fn sample_point(j: usize) -> i64 {
    let k = j.div_ceil(2) as i64;
    if j % 2 == 1 {
        k
    } else {
        -k
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSearch {
    /// `(g, h)` with `g * h = f`, `1 <= deg g <= deg h`.
    pub pair: Option<(Polynomial, Polynomial)>,
    /// Highest candidate degree that was fully searched.
    pub searched_degree: usize,
    /// Some sample value exceeded the divisor cap.
    pub truncated: bool,
    /// No factor exists at all: every degree up to `floor(n / 2)` was
    /// covered without truncation.
    pub exhaustive: bool,
}

/// Quotient `f / g` when it exists in `Z[x]`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let g_deg = g.degree()?;
    let Some(f_deg) = f.degree() else {
        return Some(Polynomial::zero());
    };
    if f_deg < g_deg {
        return None;
    }
    let lead = g.leading_coeff();
    let gc = g.coeffs();
    let mut rem: Vec<BigInt> = f.coeffs().to_vec();
    let mut quot = vec![BigInt::zero(); f_deg - g_deg + 1];
    for k in (0..=f_deg - g_deg).rev() {
        let top = &rem[k + g_deg];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(&lead);
        if !r.is_zero() {
            return None;
        }
        for (i, c) in gc.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    rem.iter().all(Zero::is_zero).then(|| Polynomial::new(quot))
}

struct Node {
    x: i64,
    /// Candidate values for `g(x)`: `d, -d` for each positive divisor `d`.
    candidates: Vec<i128>,
}

struct Search<'a> {
    f: &'a Polynomial,
    nodes: &'a [Node],
    filters: Vec<(i128, i128)>,
    lead: BigInt,
}

impl Search<'_> {
    /// Depth-first over divisor tuples. `row[i]` holds the divided
    /// difference `g[x_{k-i}, ..., x_k]` of the current prefix and
    /// `newton[k]` the Newton coefficient `g[x_0, ..., x_k]`.
    fn descend(
        &self,
        depth: usize,
        degree: usize,
        row: &mut Vec<i128>,
        newton: &mut Vec<i128>,
    ) -> Option<(Polynomial, Polynomial)> {
        let node = &self.nodes[depth];
        for &c in &node.candidates {
            if depth == 0 && c < 0 {
                // g and -g are the same factor up to a unit.
                continue;
            }
            let mut next = Vec::with_capacity(depth + 1);
            next.push(c);
            let mut ok = true;
            for i in 1..=depth {
                let num = next[i - 1] - row[i - 1];
                let den = (node.x - self.nodes[depth - i].x) as i128;
                if num % den != 0 {
                    ok = false;
                    break;
                }
                next.push(num / den);
            }
            if !ok {
                continue;
            }
            newton.push(next[depth]);
            let found = if depth == degree {
                self.accept(newton)
            } else {
                let mut saved = std::mem::replace(row, next);
                let r = self.descend(depth + 1, degree, row, newton);
                std::mem::swap(row, &mut saved);
                r
            };
            newton.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn eval_newton(&self, newton: &[i128], x: i128) -> Option<i128> {
        let mut acc: i128 = 0;
        for k in (0..newton.len()).rev() {
            let shift = x.checked_sub(self.nodes[k].x as i128)?;
            acc = acc.checked_mul(shift)?.checked_add(newton[k])?;
        }
        Some(acc)
    }

    fn accept(&self, newton: &[i128]) -> Option<(Polynomial, Polynomial)> {
        let lead = *newton.last().unwrap();
        if lead == 0 || !(&self.lead % BigInt::from(lead)).is_zero() {
            return None;
        }
        for &(x, fx) in &self.filters {
            match self.eval_newton(newton, x) {
                Some(0) => return None,
                Some(gx) if fx % gx != 0 => return None,
                _ => {}
            }
        }
        let g = newton_to_monomial(newton, self.nodes);
        let h = divide_exact(self.f, &g)?;
        Some((g, h))
    }
}

fn newton_to_monomial(newton: &[i128], nodes: &[Node]) -> Polynomial {
    // Horner on the Newton basis: g = c_0 + (x - x_0)(c_1 + (x - x_1)(...)).
    let mut acc = Polynomial::zero();
    for k in (0..newton.len()).rev() {
        let shift = Polynomial::linear_root(&BigInt::from(nodes[k].x));
        acc = &(&acc * &shift) + &Polynomial::constant(BigInt::from(newton[k]));
    }
    acc
}

/// Searches for a nontrivial factorization `f = g * h` with
/// `1 <= deg g <= max_degree`.
pub fn kronecker_find_factor(f: &Polynomial, limits: &SearchLimits) -> Result<FactorSearch> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => {
            return Err(Error::InvalidArgument(
                "factor search needs degree >= 2".into(),
            ))
        }
    };
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let full = n / 2;
    let max_d = limits.max_degree.unwrap_or(full).min(n - 1);

    let mut nodes: Vec<Node> = Vec::new();
    let mut searched_degree = 0;
    for d in 1..=max_d {
        while nodes.len() < d + 1 {
            let x = sample_point(nodes.len());
            let v = f.evaluate_i64(x);
            if v.is_zero() {
                let g = Polynomial::linear_root(&BigInt::from(x));
                let h = divide_exact(f, &g).expect("x - r divides f when f(r) = 0");
                return Ok(FactorSearch {
                    pair: Some((g, h)),
                    searched_degree,
                    truncated: false,
                    exhaustive: false,
                });
            }
            let Some(mag) = v.abs().to_u64().filter(|&m| m <= limits.divisor_cap) else {
                return Ok(FactorSearch {
                    pair: None,
                    searched_degree,
                    truncated: true,
                    exhaustive: false,
                });
            };
            let candidates = positive_divisors(mag)
                .into_iter()
                .flat_map(|d| [d as i128, -(d as i128)])
                .collect();
            nodes.push(Node { x, candidates });
        }
        let filters = (d + 1..d + 1 + FILTER_POINTS)
            .filter_map(|j| {
                let x = sample_point(j);
                let v = f.evaluate_i64(x).to_i128()?;
                (v != 0).then_some((x as i128, v))
            })
            .collect();
        let search = Search {
            f,
            nodes: &nodes,
            filters,
            lead: f.leading_coeff(),
        };
        if let Some((g, h)) = search.descend(0, d, &mut Vec::new(), &mut Vec::new()) {
            let (g, h) = orient_pair(g, h);
            return Ok(FactorSearch {
                pair: Some((g, h)),
                searched_degree,
                truncated: false,
                exhaustive: false,
            });
        }
        searched_degree = d;
    }
    Ok(FactorSearch {
        pair: None,
        searched_degree,
        truncated: false,
        exhaustive: max_d >= full,
    })
}

/// Makes the leading coefficient of `g` positive by moving the sign to `h`.
fn orient_pair(g: Polynomial, h: Polynomial) -> (Polynomial, Polynomial) {
    if g.leading_coeff().is_negative() {
        (-g, -h)
    } else {
        (g, h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    /// Factors of degree >= 1 with positive leading coefficient, sorted by
    /// degree and then by coefficients.
    pub factors: Vec<Polynomial>,
    /// `+1` or `-1`; `unit * product(factors)` is the input.
    pub unit: i8,
    /// Every factor was proven irreducible by an untruncated search.
    pub exhaustive: bool,
    pub limits: SearchLimits,
    pub detail: String,
}

impl Factorization {
    pub fn product(&self) -> Polynomial {
        let p = self
            .factors
            .iter()
            .fold(Polynomial::one(), |acc, g| &acc * g);
        if self.unit < 0 {
            -p
        } else {
            p
        }
    }
}

/// Splits `f` completely, recursing on every factor pair found.
pub fn full_factor(f: &Polynomial, limits: &SearchLimits) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit: i8 = if f.leading_coeff().is_negative() { -1 } else { 1 };
    let f_pos = if unit < 0 { -f } else { f.clone() };
    let (k, rest) = f_pos.strip_x_power();
    let mut factors: Vec<Polynomial> = vec![Polynomial::from_i64(&[0, 1]); k];
    let mut detail = String::from(
        "integer content is kept inside the factors; each factor has positive leading coefficient",
    );
    let mut exhaustive = true;

    if rest.degree() == Some(0) {
        let c = rest.constant_term();
        if !c.is_one() {
            match factors.first_mut() {
                Some(first) => *first = first.scale(&c),
                None => return Err(Error::InvalidArgument("nonzero constant has no factors".into())),
            }
            detail.push_str(&format!("; constant {c} merged into the first factor"));
        }
    } else {
        let mut work = vec![rest];
        while let Some(g) = work.pop() {
            if g.degree() == Some(1) {
                factors.push(g);
                continue;
            }
            let search = kronecker_find_factor(&g, limits)?;
            match search.pair {
                Some((a, b)) => {
                    work.push(a);
                    work.push(b);
                }
                None => {
                    exhaustive &= search.exhaustive;
                    factors.push(g);
                }
            }
        }
    }
    factors.sort_by(Polynomial::canonical_cmp);
    let out = Factorization {
        factors,
        unit,
        exhaustive,
        limits: *limits,
        detail,
    };
    debug_assert_eq!(&out.product(), f);
    Ok(out)
}

/// Whether `f` is irreducible over Q as far as exhaustive search can tell:
/// `Some(true)` irreducible, `Some(false)` reducible, `None` undecided.
pub fn oracle_irreducible(f: &Polynomial, limits: &SearchLimits) -> Result<Option<bool>> {
    match f.degree() {
        None | Some(0) => Err(Error::InvalidArgument("constant polynomial".into())),
        Some(1) => Ok(Some(true)),
        Some(_) if f.constant_term().is_zero() => Ok(Some(false)),
        Some(_) => {
            let s = kronecker_find_factor(f, limits)?;
            Ok(match s.pair {
                Some(_) => Some(false),
                None if s.exhaustive => Some(true),
                None => None,
            })
        }
    }
}
