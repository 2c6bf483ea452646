//! Rigorous upper bounds on `λ(G)` for 3-graphs by exhaustive grid scan.
//!
//! Every simplex point lies within L1 distance `n / D` of a grid point with
//! coordinates `k_i / D`, and each partial derivative satisfies
//! `0 <= λ(E_i, x) <= (Σ_{j≠i} x_j)^2 / 2 <= 1/2` on the simplex. Hence
//! `λ(G) <= max_grid λ + n / (2D)`. Grid values are exact integers
//! `Σ_e k_a k_b k_c` over `D^3`, so the bound is an exact rational.
//!
//! For a left-compressed graph sorting any weighting into nonincreasing order
//! does not lower the objective, and sorting does not increase L1 distance to
//! a sorted point, so only nonincreasing grid points need to be scanned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::LagrangianError;
use crate::hypergraph::UniformHypergraph;

/// Default cap on the number of grid points visited.
pub const DEFAULT_GRID_BUDGET: u128 = 10_000_000_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct GridCertificate {
    pub denominator: u64,
    /// Only nonincreasing grid points were scanned.
    pub monotone_only: bool,
    pub points_scanned: u128,
    /// Largest `λ(G, k / D)` over the scanned grid.
    pub grid_maximum: BigRational,
    /// Numerators `k` of a grid point attaining `grid_maximum`.
    pub maximizer: Vec<u64>,
    /// `n / (2D)`.
    pub mesh_term: BigRational,
    pub upper_bound: BigRational,
}

impl GridCertificate {
    pub fn upper_bound_f64(&self) -> f64 {
        self.upper_bound.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn certifies_below(&self, threshold: &BigRational) -> bool {
        &self.upper_bound < threshold
    }
}

/// Number of grid points with denominator `d` on the simplex in `n`
/// coordinates; with `monotone`, only nonincreasing ones (partitions of `d`
/// into at most `n` parts).
pub fn grid_point_count(n: usize, d: u64, monotone: bool) -> u128 {
    if n == 0 {
        return u128::from(d == 0);
    }
    if monotone {
        // Partitions into at most n parts = partitions with parts of size <= n.
        let d = d as usize;
        let mut ways = vec![0u128; d + 1];
        ways[0] = 1;
        for part in 1..=n {
            for s in part..=d {
                ways[s] = ways[s].saturating_add(ways[s - part]);
            }
        }
        ways[d]
    } else {
        let mut c: u128 = 1;
        for i in 1..n as u128 {
            c = c.saturating_mul(d as u128 + i) / i;
        }
        c
    }
}

/// Certified upper bound on `λ(G)` for a 3-graph from a grid with
/// denominator `denominator`. Fails if more than `budget` points would be
/// visited.
pub fn grid_certify(
    g: &UniformHypergraph,
    denominator: u64,
    budget: u128,
) -> Result<GridCertificate, LagrangianError> {
    if g.r() != 3 {
        return Err(LagrangianError::UnsupportedUniformity(g.r()));
    }
    if denominator == 0 {
        return Err(LagrangianError::ZeroDenominator);
    }
    let n = g.n();
    let monotone = g.is_left_compressed();
    let points = grid_point_count(n, denominator, monotone);
    let d3 = (denominator as u128).pow(3);
    if points > budget || d3.saturating_mul(g.edge_count().max(1) as u128) > i64::MAX as u128 / 4 {
        return Err(LagrangianError::BudgetExceeded { points, budget });
    }

    let (best, maximizer) = if n < 3 {
        (0, vec![0; n])
    } else {
        Scan::new(g, monotone).run(denominator)
    };

    let d = BigInt::from(denominator);
    let grid_maximum = BigRational::new(BigInt::from(best), d.pow(3));
    let mesh_term = BigRational::new(BigInt::from(n), BigInt::from(2) * &d);
    let upper_bound = &grid_maximum + &mesh_term;
    Ok(GridCertificate {
        denominator,
        monotone_only: monotone,
        points_scanned: points,
        grid_maximum,
        maximizer,
        mesh_term,
        upper_bound,
    })
}

struct Scan {
    n: usize,
    monotone: bool,
    /// `links[v]`: pairs `(a, w)` with `a < v < w` and `avw` an edge (0-based).
    links: Vec<Vec<(usize, usize)>>,
}

/// Per-thread buffers. `q[v * n + w]` holds `Σ k_a k_b` over edges `abw`
/// with `a < b < v`; `c[v * n + w]` holds `Σ k_a` over edges `avw` with `a < v`.
struct Work {
    k: Vec<u64>,
    q: Vec<u64>,
    c: Vec<u64>,
    best: (u64, Vec<u64>),
}

impl Scan {
    fn new(g: &UniformHypergraph, monotone: bool) -> Self {
        let n = g.n();
        let mut links = vec![Vec::new(); n];
        for e in g.edges() {
            let v: Vec<usize> = e.vertices().map(|x| x - 1).collect();
            links[v[1]].push((v[0], v[2]));
        }
        Self { n, monotone, links }
    }

    fn run(&self, d: u64) -> (u64, Vec<u64>) {
        let first: Vec<u64> = if self.monotone {
            (d.div_ceil(self.n as u64)..=d).collect()
        } else {
            (0..=d).collect()
        };
        let n = self.n;
        if n == 3 {
            let mut w = Work { k: vec![0; n], q: vec![0; n * n], c: vec![0; n * n], best: (0, Vec::new()) };
            self.descend(0, d, d, 0, &mut w);
            return w.best;
        }
        let results: Vec<(u64, Vec<u64>)> = first
            .into_par_iter()
            .map_init(
                || Work { k: vec![0; n], q: vec![0; n * n], c: vec![0; n * n], best: (0, Vec::new()) },
                |w, k0| {
                    w.best = (0, Vec::new());
                    w.k[0] = k0;
                    // Levels 0 and 1 carry no complete pair yet.
                    w.q[n..2 * n].iter_mut().for_each(|x| *x = 0);
                    self.descend(1, d - k0, k0, 0, w);
                    std::mem::take(&mut w.best)
                },
            )
            .collect();
        let mut best = (0u64, Vec::new());
        for r in results {
            if r.0 > best.0 || best.1.is_empty() {
                best = r;
            }
        }
        best
    }

    fn descend(&self, v: usize, remaining: u64, cap: u64, value: u64, w: &mut Work) {
        let n = self.n;
        let (row, next) = (v * n, (v + 1) * n);
        for x in &mut w.c[row + v + 1..row + n] {
            *x = 0;
        }
        for &(a, t) in &self.links[v] {
            w.c[row + t] += w.k[a];
        }
        let (lo, hi) = self.range(v, remaining, cap);
        if v + 3 == n {
            self.last_three(remaining, lo, hi, value, w);
            return;
        }
        let p_v = w.q[row + v];
        for kv in lo..=hi {
            w.k[v] = kv;
            for t in v + 1..n {
                w.q[next + t] = w.q[row + t] + kv * w.c[row + t];
            }
            self.descend(v + 1, remaining - kv, kv, value + kv * p_v, w);
        }
        w.k[v] = 0;
    }

    fn range(&self, v: usize, remaining: u64, cap: u64) -> (u64, u64) {
        if self.monotone {
            (remaining.div_ceil((self.n - v) as u64), cap.min(remaining))
        } else {
            (0, remaining)
        }
    }

    /// Vertices `n-2`, `n-1`, `n` (1-based). For each weight `u` of the first,
    /// the last weight is forced and the objective is a concave integer
    /// quadratic in the middle one, `total(m) = base + m s - b m^2`, so its
    /// maximum over an integer range sits at an endpoint or next to the vertex
    /// of the parabola.
    fn last_three(&self, remaining: u64, lo: u64, hi: u64, value: u64, w: &mut Work) {
        let n = self.n;
        let (v, pen, last) = (n - 3, n - 2, n - 1);
        let row = v * n;
        let (c_pen, c_last) = (w.c[row + pen] as i64, w.c[row + last] as i64);
        let (q_v, q_pen, q_last) = (w.q[row + v] as i64, w.q[row + pen] as i64, w.q[row + last] as i64);
        // Σ k_a over edges `a pen last` with `a < v`, plus the indicator of `v pen last`.
        let mut b0 = 0i64;
        let mut b1 = 0i64;
        for &(a, t) in &self.links[pen] {
            if t == last {
                if a == v {
                    b1 = 1;
                } else {
                    b0 += w.k[a] as i64;
                }
            }
        }
        let value = value as i64;
        let inv_2b = if b1 == 0 && b0 > 0 { 1.0 / (2 * b0) as f64 } else { 0.0 };
        let mut best = (i64::MIN, 0u64, 0u64);
        for u in lo..=hi {
            let r = remaining - u;
            let (mlo, mhi) = if self.monotone { (r.div_ceil(2), u.min(r)) } else { (0, r) };
            if mlo > mhi {
                continue;
            }
            let ui = u as i64;
            let ri = r as i64;
            let p = q_pen + ui * c_pen;
            let a = q_last + ui * c_last;
            let b = b0 + ui * b1;
            let base = value + ui * q_v + ri * a;
            let slope = p - a + ri * b;
            let total = |m: u64| {
                let m = m as i64;
                base + m * (slope - b * m)
            };
            let mut m_best = mlo;
            let mut t_best = total(mlo);
            let t_hi = total(mhi);
            if t_hi > t_best {
                (m_best, t_best) = (mhi, t_hi);
            }
            if b > 0 && slope > 0 {
                // Within one of floor(slope / 2b); when it is off by one the
                // nearest integer to the vertex is still among the three.
                let q = if b1 == 0 { slope as f64 * inv_2b } else { slope as f64 / (2 * b) as f64 };
                let guess = q as u64;
                for m in [guess.saturating_sub(1), guess, guess + 1] {
                    if m > mlo && m < mhi {
                        let t = total(m);
                        if t > t_best {
                            (m_best, t_best) = (m, t);
                        }
                    }
                }
            }
            if t_best > best.0 {
                best = (t_best, u, m_best);
            }
        }
        if best.0 > w.best.0 as i64 || (best.0 != i64::MIN && w.best.1.is_empty()) {
            let (t, u, m) = best;
            let mut k = w.k.clone();
            k[v] = u;
            k[pen] = m;
            k[last] = remaining - u - m;
            w.best = (t as u64, k);
        }
    }
}
