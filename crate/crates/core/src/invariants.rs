//! What a Laplacian characteristic polynomial tells about its graph.
//!
//! From `p(x) = det(xI - L)` alone we recover the order, the number of
//! edges (half the trace), the number of components (multiplicity of the
//! root 0), the number of spanning trees (matrix-tree theorem) and, through
//! Newton's identities, `Σd²` and, once the triangle count is known, `Σd³`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::graph::Graph;
use crate::spectral::{eigenvalues_float, IntPolynomial, IntSymMatrix, MatrixKind, SpectralError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InvariantError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has degree 0")]
    Constant,
    #[error("0 is not a root, so this is not a Laplacian polynomial")]
    ZeroNotRoot,
    #[error("root sum {0} is odd or negative, so this is not a Laplacian polynomial")]
    BadTrace(BigInt),
    #[error("spanning-tree product {product} is not divisible by the order {order}")]
    Indivisible { product: BigInt, order: usize },
    #[error("derived degree moment is negative or out of range")]
    InconsistentMoments,
    #[error("graph has no edges")]
    Edgeless,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicInvariants {
    pub order: usize,
    pub edges: usize,
    pub components: usize,
    /// Zero for disconnected graphs.
    pub spanning_trees: BigUint,
}

pub fn derive_basic_invariants(p: &IntPolynomial) -> Result<BasicInvariants, InvariantError> {
    if !p.is_monic() {
        return Err(InvariantError::NotMonic);
    }
    let n = p.degree();
    if n == 0 {
        return Err(InvariantError::Constant);
    }
    if !p.coeff(0).is_zero() {
        return Err(InvariantError::ZeroNotRoot);
    }
    let trace = -p.coeff(n - 1);
    if trace.is_negative() || trace.is_odd() {
        return Err(InvariantError::BadTrace(trace));
    }
    let edges = (trace / 2u32).to_usize().ok_or(InvariantError::InconsistentMoments)?;
    let components = p.zero_root_multiplicity();
    let spanning_trees = if components == 1 {
        let product = p.coeff(1).abs();
        let (q, r) = product.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err(InvariantError::Indivisible { product, order: n });
        }
        q.to_biguint().unwrap()
    } else {
        BigUint::zero()
    };
    Ok(BasicInvariants {
        order: n,
        edges,
        components,
        spanning_trees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMoments {
    /// `Σ d(v) = 2m`
    pub s1: BigInt,
    /// `Σ d(v)²`
    pub s2: BigInt,
    /// `Σ d(v)³`
    pub s3: BigInt,
    pub triangles: u64,
}

/// Degree moments from the Laplacian polynomial and the triangle count:
/// `s₂ = tr(L²) - 2m` and `s₃ = tr(L³) + 6Δ - 3s₂`.
pub fn degree_moment_sums(p: &IntPolynomial, triangles: u64) -> Result<DegreeMoments, InvariantError> {
    let basic = derive_basic_invariants(p)?;
    let traces = p.power_sums(3);
    let s1 = BigInt::from(2 * basic.edges);
    let s2 = &traces[2] - &s1;
    let s3 = &traces[3] + BigInt::from(6 * triangles) - BigInt::from(3) * &s2;
    if s2.is_negative() || s3.is_negative() || s2 < s1 {
        return Err(InvariantError::InconsistentMoments);
    }
    Ok(DegreeMoments {
        s1,
        s2,
        s3,
        triangles,
    })
}

/// Counts `n_0..=n_dmax` of vertices by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeDistribution {
    counts: Vec<usize>,
}

impl DegreeDistribution {
    pub fn from_counts(counts: Vec<usize>) -> Self {
        DegreeDistribution { counts }
    }

    pub fn of_graph(g: &Graph) -> Self {
        let mut counts = vec![0; g.max_degree() + 1];
        for d in g.degrees() {
            counts[d] += 1;
        }
        DegreeDistribution { counts }
    }

    /// Number of vertices of degree `d`.
    pub fn count(&self, d: usize) -> usize {
        self.counts.get(d).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn max_degree(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// Same distribution, padded or trimmed to degrees `0..=dmax`.
    pub fn normalized(&self, dmax: usize) -> Self {
        let mut counts = self.counts.clone();
        counts.resize(dmax + 1, 0);
        DegreeDistribution { counts }
    }
}

/// The four moment equations on `(n_0..n_dmax)`. The paper-style system has
/// no isolated vertices; `allow_isolated` adds `n_0` as an unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSystem {
    pub order: u64,
    pub edges: u64,
    pub s2: u64,
    pub s3: u64,
    pub dmax: usize,
    pub allow_isolated: bool,
}

impl DegreeSystem {
    pub fn new(order: u64, edges: u64, s2: u64, s3: u64) -> Self {
        DegreeSystem {
            order,
            edges,
            s2,
            s3,
            dmax: 5,
            allow_isolated: false,
        }
    }

    /// The system seen by the spectrum alone: isolated vertices are ruled
    /// out exactly when the graph is connected with at least two vertices.
    pub fn from_spectrum(
        basic: &BasicInvariants,
        moments: &DegreeMoments,
        dmax: usize,
    ) -> Result<Self, InvariantError> {
        let to_u64 = |x: &BigInt| x.to_u64().ok_or(InvariantError::InconsistentMoments);
        Ok(DegreeSystem {
            order: basic.order as u64,
            edges: basic.edges as u64,
            s2: to_u64(&moments.s2)?,
            s3: to_u64(&moments.s3)?,
            dmax,
            allow_isolated: !(basic.components == 1 && basic.order >= 2),
        })
    }
}

/// Every nonnegative integer solution of the moment equations, by bounded
/// exhaustive search over `n_dmax, ..., n_2` (then `n_1` and `n_0` are
/// forced). Solutions come back sorted; an empty set means infeasible.
pub fn solve_degree_distribution(sys: &DegreeSystem) -> Vec<DegreeDistribution> {
    let mut out = Vec::new();
    let mut counts = vec![0u64; sys.dmax + 1];
    let sum1 = 2 * sys.edges;
    search(sys, sys.dmax, sum1, sys.s2, sys.s3, sys.order, &mut counts, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    sys: &DegreeSystem,
    d: usize,
    rem1: u64,
    rem2: u64,
    rem3: u64,
    rem_vertices: u64,
    counts: &mut [u64],
    out: &mut Vec<DegreeDistribution>,
) {
    if d <= 1 {
        // degree-1 vertices absorb all three remaining moments equally
        let n1 = rem1;
        if rem2 != n1 || rem3 != n1 || n1 > rem_vertices {
            return;
        }
        let n0 = rem_vertices - n1;
        if n0 > 0 && !sys.allow_isolated {
            return;
        }
        if sys.dmax >= 1 {
            counts[1] = n1;
        } else if n1 > 0 {
            return;
        }
        counts[0] = n0;
        out.push(DegreeDistribution::from_counts(
            counts.iter().map(|&c| c as usize).collect(),
        ));
        counts[0] = 0;
        if sys.dmax >= 1 {
            counts[1] = 0;
        }
        return;
    }
    let (w1, w2, w3) = (d as u64, (d * d) as u64, (d * d * d) as u64);
    let max = (rem1 / w1).min(rem2 / w2).min(rem3 / w3).min(rem_vertices);
    for k in 0..=max {
        counts[d] = k;
        search(
            sys,
            d - 1,
            rem1 - k * w1,
            rem2 - k * w2,
            rem3 - k * w3,
            rem_vertices - k,
            counts,
            out,
        );
    }
    counts[d] = 0;
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// Largest Laplacian eigenvalue.
    pub mu1: f64,
    /// Maximum degree.
    pub lower: usize,
    /// Maximum of `d(u) + d(v)` over edges.
    pub upper: usize,
    pub ok: bool,
}

/// Checks `max d(v) < μ₁ ≤ max_{uv ∈ E} d(u) + d(v)`. Floating point cannot
/// certify the strict inequality, so the lower side is `max d < μ₁ + tol`.
pub fn check_spectral_bounds(g: &Graph, tol: f64) -> Result<BoundReport, InvariantError> {
    if g.size() == 0 {
        return Err(InvariantError::Edgeless);
    }
    let spectrum = eigenvalues_float(&IntSymMatrix::of(g, MatrixKind::Laplacian), tol)?;
    let mu1 = spectrum.largest().unwrap();
    let lower = g.max_degree();
    let upper = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v))
        .max()
        .unwrap();
    let ok = (lower as f64) < mu1 + tol && mu1 <= upper as f64 + tol;
    Ok(BoundReport {
        mu1,
        lower,
        upper,
        ok,
    })
}

/// Laplacian polynomial of the complement: the nonzero roots `μ` become
/// `n - μ`, i.e. `x · (-1)^(n-1) · q(n - x)` for `p = x · q`.
pub fn complement_spectrum(p: &IntPolynomial, n: usize) -> Result<IntPolynomial, InvariantError> {
    if !p.is_monic() {
        return Err(InvariantError::NotMonic);
    }
    let q = p.div_x_pow(1).ok_or(InvariantError::ZeroNotRoot)?;
    // q(n - x) = u(-x) with u(x) = q(x + n)
    let mut r = q.shift(&BigInt::from(n)).reflect();
    if n % 2 == 0 {
        r = r.scale(&BigInt::from(-1));
    }
    Ok(r.mul_x_pow(1))
}
