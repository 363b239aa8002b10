use alloc::vec::Vec;

use super::{IntSymMatrix, SpectralError};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Floating-point eigenvalues, largest first.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumFloat {
    pub values: Vec<f64>,
    pub tolerance: f64,
}

impl SpectrumFloat {
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }
}

/// Cyclic Jacobi rotations until every off-diagonal entry is below `tol`.
pub fn eigenvalues_float(m: &IntSymMatrix, tol: f64) -> Result<SpectrumFloat, SpectralError> {
    if !(tol > 0.0) {
        return Err(SpectralError::BadTolerance(tol));
    }
    let n = m.dim();
    if n == 0 {
        return Err(SpectralError::EmptyMatrix);
    }
    let mut a: Vec<f64> = m.rows().flatten().map(|&x| x as f64).collect();
    let off_max = |a: &[f64]| {
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                worst = libm::fmax(worst, libm::fabs(a[i * n + j]));
            }
        }
        worst
    };
    let mut sweeps = 0;
    while off_max(&a) >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence {
                sweeps,
                residual: off_max(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = libm::copysign(1.0, theta)
                    / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(SpectrumFloat {
        values,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, path, Family};
    use crate::spectral::MatrixKind;

    fn spectrum(g: &crate::Graph, kind: MatrixKind) -> Vec<f64> {
        eigenvalues_float(&IntSymMatrix::of(g, kind), DEFAULT_TOLERANCE)
            .unwrap()
            .values
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-10)
    }

    #[test]
    fn known_spectra() {
        let k3 = build(Family::Complete, 3).unwrap();
        assert!(close(&spectrum(&k3, MatrixKind::Laplacian), &[3.0, 3.0, 0.0]));
        assert!(close(&spectrum(&path(3), MatrixKind::Laplacian), &[3.0, 1.0, 0.0]));
        let r2 = 2f64.sqrt();
        assert!(close(&spectrum(&path(3), MatrixKind::Adjacency), &[r2, 0.0, -r2]));
    }

    #[test]
    fn trace_is_preserved() {
        let g = build(Family::Cycle, 7).unwrap().complement();
        let m = IntSymMatrix::of(&g, MatrixKind::Laplacian);
        let s = eigenvalues_float(&m, 1e-12).unwrap();
        let sum: f64 = s.values.iter().sum();
        assert!((sum - m.trace() as f64).abs() < 7.0 * 1e-9);
        assert!(s.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn rejects_bad_input() {
        let m = IntSymMatrix::of(&path(2), MatrixKind::Laplacian);
        assert!(matches!(eigenvalues_float(&m, 0.0), Err(SpectralError::BadTolerance(_))));
        let empty = IntSymMatrix::of(&crate::Graph::empty(0), MatrixKind::Laplacian);
        assert_eq!(eigenvalues_float(&empty, 1e-12), Err(SpectralError::EmptyMatrix));
    }
}
