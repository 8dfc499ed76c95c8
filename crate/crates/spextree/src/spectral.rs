//! Spectral-radius computation: a deterministic shifted power iteration for
//! arbitrary graphs, and exact small quotient matrices for the join-form
//! constructions.
//!
//! The power iteration runs on `A + I` with an all-ones start vector, so the
//! plus/minus oscillation of bipartite spectra cannot stall it, and the unit
//! shift is subtracted at the end. Each component is handled separately; on
//! a connected component the iterate stays strictly positive and the ratio
//! bounds `min_i (Bx)_i/x_i <= rho(B) <= max_i (Bx)_i/x_i` give a certified
//! bracket whose width is the stopping criterion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Iteration cap for the power method.
pub const MAX_POWER_ITERATIONS: u64 = 1_000_000;

/// Default tolerance used by callers that do not pick their own.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Tolerance of roots extracted from quotient matrices.
pub const QUOTIENT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralMethod {
    PowerIteration,
    QuotientExact,
    ClosedForm,
}

/// A computed spectral radius together with how it was obtained and the
/// certified tolerance of the value.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SpectralValue {
    pub value: f64,
    pub method: SpectralMethod,
    pub tolerance: f64,
}

/// Largest adjacency eigenvalue of `g`, within `tol`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralValue> {
    if g.n() == 0 {
        return Err(Error::Range("spectral radius requires n >= 1".into()));
    }
    if tol <= 0.0 {
        return Err(Error::Range(format!("tolerance must be positive, got {tol}")));
    }
    let mut value: f64 = 0.0;
    for comp in g.components() {
        value = value.max(component_radius(g, &comp, tol)?);
    }
    Ok(SpectralValue {
        value,
        method: SpectralMethod::PowerIteration,
        tolerance: tol,
    })
}

fn component_radius(g: &Graph, comp: &[u32], tol: f64) -> Result<f64> {
    let m = comp.len();
    if m == 1 {
        return Ok(0.0);
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        local[v as usize] = i;
    }
    let adj: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| g.neighbors(v).map(|w| local[w as usize]).collect())
        .collect();

    let mut x = vec![1.0f64; m];
    let mut y = vec![0.0f64; m];
    let mut last = (f64::NEG_INFINITY, f64::INFINITY);
    for iter in 1..=MAX_POWER_ITERATIONS {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..m {
            let mut s = x[i]; // unit shift
            for &j in &adj[i] {
                s += x[j];
            }
            y[i] = s;
            let ratio = s / x[i];
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        last = (lo - 1.0, hi - 1.0);
        if hi - lo <= tol {
            let mut num = 0.0;
            let mut den = 0.0;
            for i in 0..m {
                num += x[i] * y[i];
                den += x[i] * x[i];
            }
            return Ok(num / den - 1.0);
        }
        let max = y.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        for i in 0..m {
            x[i] = y[i] / max;
        }
        if iter == MAX_POWER_ITERATIONS {
            break;
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_POWER_ITERATIONS,
        lo: last.0,
        hi: last.1,
    })
}

/// Quotient matrix of an equitable partition: entry `(i, j)` is the number
/// of neighbors in class `j` of any vertex of class `i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    entries: Vec<Vec<f64>>,
    class_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn new(entries: Vec<Vec<f64>>, class_sizes: Vec<usize>) -> Result<Self> {
        let order = entries.len();
        if !(order == 2 || order == 3) {
            return Err(Error::Range(format!("quotient order must be 2 or 3, got {order}")));
        }
        if class_sizes.len() != order {
            return Err(Error::Range("one class size per quotient row is required".into()));
        }
        for row in &entries {
            if row.len() != order {
                return Err(Error::Range("quotient matrix must be square".into()));
            }
            if row.iter().any(|&e| e < 0.0 || !e.is_finite()) {
                return Err(Error::Range("quotient entries must be nonnegative".into()));
            }
        }
        if class_sizes.iter().any(|&s| s == 0) {
            return Err(Error::Range("class sizes must be positive".into()));
        }
        Ok(QuotientMatrix {
            entries,
            class_sizes,
        })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Largest eigenvalue. Order 2 is in closed form; order 3 bisects the
    /// characteristic cubic, starting from its largest critical point so the
    /// bracket always straddles the largest real root.
    pub fn perron_root(&self) -> SpectralValue {
        let value = match self.order() {
            2 => {
                let (a, b) = (self.entries[0][0], self.entries[0][1]);
                let (c, d) = (self.entries[1][0], self.entries[1][1]);
                two_by_two_root(a, b, c, d)
            }
            _ => self.cubic_root(),
        };
        SpectralValue {
            value,
            method: SpectralMethod::QuotientExact,
            tolerance: QUOTIENT_TOL,
        }
    }

    fn cubic_root(&self) -> f64 {
        let e = &self.entries;
        let tr = e[0][0] + e[1][1] + e[2][2];
        let m2 = (e[0][0] * e[1][1] - e[0][1] * e[1][0])
            + (e[0][0] * e[2][2] - e[0][2] * e[2][0])
            + (e[1][1] * e[2][2] - e[1][2] * e[2][1]);
        let det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
        let p = |x: f64| ((x - tr) * x + m2) * x - det;

        // the quotient of an equitable partition is symmetrizable, so all
        // three roots are real and the larger critical point sits between
        // the top two
        let disc = (tr * tr - 3.0 * m2).max(0.0);
        let lo0 = (tr + disc.sqrt()) / 3.0;
        if p(lo0) >= 0.0 {
            return lo0; // top two roots coincide up to rounding
        }
        let hi0 = self
            .entries
            .iter()
            .map(|row| row.iter().sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max)
            + 1.0;
        let (mut lo, mut hi) = (lo0, hi0);
        while hi - lo > QUOTIENT_TOL {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break; // f64 resolution reached
            }
            if p(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

fn two_by_two_root(a: f64, b: f64, c: f64, d: f64) -> f64 {
    0.5 * (a + d) + (0.25 * (a - d) * (a - d) + b * c).sqrt()
}

/// The exact equitable quotient of `S_{n,k}^p` over the classes
/// (clique, matched, isolated); empty classes are dropped.
pub fn s_quotient(n: usize, k: usize, p: usize) -> Result<QuotientMatrix> {
    crate::graph::s_graph(n, k, p)?; // same parameter validation
    let (kf, pf) = (k as f64, p as f64);
    let m = n - k - 2 * p;
    if p == 0 {
        QuotientMatrix::new(
            vec![vec![kf - 1.0, (n - k) as f64], vec![kf, 0.0]],
            vec![k, n - k],
        )
    } else if m == 0 {
        QuotientMatrix::new(
            vec![vec![kf - 1.0, 2.0 * pf], vec![kf, 1.0]],
            vec![k, 2 * p],
        )
    } else {
        QuotientMatrix::new(
            vec![
                vec![kf - 1.0, 2.0 * pf, m as f64],
                vec![kf, 1.0, 0.0],
                vec![kf, 0.0, 0.0],
            ],
            vec![k, 2 * p, m],
        )
    }
}

/// Spectral bound for a join `H1 join H2` where `H1` has `n0` vertices and
/// maximum degree `d`, and `H2` has `n - n0` vertices and maximum degree
/// `d2`: the Perron root of `[[d, n-n0], [n0, d2]]`.
pub fn join_spectral_bound(d: usize, d2: usize, n0: usize, n: usize) -> Result<SpectralValue> {
    if n0 > n {
        return Err(Error::Range(format!("join bound requires n0 <= n, got n0={n0}, n={n}")));
    }
    if d > n0 {
        return Err(Error::Range(format!("join bound requires d <= n0, got d={d}, n0={n0}")));
    }
    Ok(SpectralValue {
        value: two_by_two_root(d as f64, (n - n0) as f64, n0 as f64, d2 as f64),
        method: SpectralMethod::ClosedForm,
        tolerance: 1e-12,
    })
}

/// Both closed forms in circulation for `rho(S_{n,q}^0)`.
///
/// The widely printed expression has radicand constant `(3q^2+2q+1)/4`; the
/// quotient of the 2-class equitable partition gives `(3q^2+2q-1)/4`. The
/// star case `q = 1` equals `sqrt(n-1)` and settles it for the quotient
/// variant, which is the one used everywhere downstream; the printed value
/// is carried alongside for transparency.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct S0ClosedForm {
    /// `(q-1)/2 + sqrt(qn - (3q^2+2q+1)/4)` as printed in the literature.
    pub printed: f64,
    /// `(q-1)/2 + sqrt(qn - (3q^2+2q-1)/4)`, the exact quotient root.
    pub exact: f64,
}

pub fn rho_s0_closed_form(n: usize, q: usize) -> Result<S0ClosedForm> {
    if q < 1 || n <= q {
        return Err(Error::Range(format!(
            "closed form requires n > q >= 1, got n={n}, q={q}"
        )));
    }
    let (nf, qf) = (n as f64, q as f64);
    let base = 0.5 * (qf - 1.0);
    Ok(S0ClosedForm {
        printed: base + (qf * nf - (3.0 * qf * qf + 2.0 * qf + 1.0) / 4.0).sqrt(),
        exact: base + (qf * nf - (3.0 * qf * qf + 2.0 * qf - 1.0) / 4.0).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{kab_graph, s_graph};

    #[test]
    fn power_iteration_on_stars_and_bipartite() {
        let star = kab_graph(1, 4, 0).unwrap();
        let rho = spectral_radius(&star, 1e-10).unwrap();
        assert!((rho.value - 2.0).abs() <= 1e-10, "{}", rho.value);

        let k29 = kab_graph(2, 9, 0).unwrap();
        let rho = spectral_radius(&k29, 1e-10).unwrap();
        assert!((rho.value - 18f64.sqrt()).abs() <= 1e-10);
    }

    #[test]
    fn power_iteration_handles_disconnection_and_tiny_graphs() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        assert!((spectral_radius(&g, 1e-10).unwrap().value - 2.0).abs() <= 1e-10);
        assert_eq!(spectral_radius(&Graph::empty(5), 1e-10).unwrap().value, 0.0);
        assert_eq!(spectral_radius(&Graph::empty(1), 1e-10).unwrap().value, 0.0);
        assert!(spectral_radius(&Graph::empty(0), 1e-10).is_err());
        assert!(spectral_radius(&Graph::empty(2), 0.0).is_err());
    }

    #[test]
    fn connected_value_at_least_average_degree() {
        let g = s_graph(30, 3, 5).unwrap();
        let rho = spectral_radius(&g, 1e-10).unwrap().value;
        let avg = 2.0 * g.edge_count() as f64 / g.n() as f64;
        assert!(rho >= avg - 1e-9);
    }

    #[test]
    fn s_quotient_hand_counted_rows() {
        let q = s_quotient(10, 1, 1).unwrap();
        assert_eq!(
            q.entries(),
            &[vec![0.0, 2.0, 7.0], vec![1.0, 1.0, 0.0], vec![1.0, 0.0, 0.0]]
        );
        let q = s_quotient(8, 2, 2).unwrap();
        assert_eq!(
            q.entries(),
            &[vec![1.0, 4.0, 2.0], vec![2.0, 1.0, 0.0], vec![2.0, 0.0, 0.0]]
        );
        let q = s_quotient(10, 2, 0).unwrap();
        assert_eq!(q.entries(), &[vec![1.0, 8.0], vec![2.0, 0.0]]);
        // fully matched independent side drops the empty class
        let q = s_quotient(10, 2, 4).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.entries(), &[vec![1.0, 8.0], vec![2.0, 1.0]]);
    }

    #[test]
    fn quotient_roots_match_known_values() {
        // [[1,98],[2,1]] has Perron root exactly 15
        let j = QuotientMatrix::new(vec![vec![1.0, 98.0], vec![2.0, 1.0]], vec![2, 98]).unwrap();
        assert!((j.perron_root().value - 15.0).abs() < 1e-12);

        // largest root of x^3 - x^2 - 9x + 7, bisected here independently
        let poly = |x: f64| ((x - 1.0) * x - 9.0) * x + 7.0;
        let (mut lo, mut hi) = (3.0, 4.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if poly(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let expected = 0.5 * (lo + hi);
        let q = s_quotient(10, 1, 1).unwrap();
        assert!((q.perron_root().value - expected).abs() <= 1e-11);
        assert!((expected - 3.151148).abs() < 1e-5);

        // 2x2 star-like case: 0.5 + sqrt(16.25)
        let q = s_quotient(10, 2, 0).unwrap();
        assert!((q.perron_root().value - (0.5 + 16.25f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn quotient_agrees_with_power_iteration() {
        for (n, k, p) in [(10, 1, 1), (12, 3, 2), (30, 2, 14), (9, 4, 2), (50, 6, 0)] {
            let exact = s_quotient(n, k, p).unwrap().perron_root().value;
            let numeric = spectral_radius(&s_graph(n, k, p).unwrap(), 1e-10)
                .unwrap()
                .value;
            assert!(
                (exact - numeric).abs() <= 1e-8,
                "S_{{{n},{k}}}^{p}: exact {exact} vs numeric {numeric}"
            );
        }
    }

    #[test]
    fn join_bound_examples() {
        let b = join_spectral_bound(0, 0, 1, 10).unwrap();
        assert!((b.value - 9f64.sqrt()).abs() < 1e-12);
        let b = join_spectral_bound(1, 0, 2, 10).unwrap();
        assert!((b.value - (0.5 + 16.25f64.sqrt())).abs() < 1e-12);
        assert!(join_spectral_bound(3, 0, 2, 10).is_err());
        assert!(join_spectral_bound(0, 0, 11, 10).is_err());
    }

    #[test]
    fn closed_form_variants() {
        let v = rho_s0_closed_form(25, 1).unwrap();
        assert!((v.exact - 24f64.sqrt()).abs() < 1e-12);
        assert!((v.printed - 23.5f64.sqrt()).abs() < 1e-12);
        let v = rho_s0_closed_form(10, 2).unwrap();
        assert!((v.exact - (0.5 + 16.25f64.sqrt())).abs() < 1e-12);
        for q in 1..=8 {
            for n in (q + 1)..=60 {
                let v = rho_s0_closed_form(n, q).unwrap();
                assert!(v.printed < v.exact);
            }
        }
        assert!(rho_s0_closed_form(5, 5).is_err());
        assert!(rho_s0_closed_form(5, 0).is_err());
    }

    #[test]
    fn quotient_matrix_validation() {
        assert!(QuotientMatrix::new(vec![vec![1.0]], vec![1]).is_err());
        assert!(QuotientMatrix::new(vec![vec![1.0, -2.0], vec![1.0, 0.0]], vec![1, 1]).is_err());
        assert!(QuotientMatrix::new(vec![vec![1.0, 2.0], vec![1.0, 0.0]], vec![0, 1]).is_err());
    }
}
