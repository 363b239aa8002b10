use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Degree,
    Laplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::Adjacency, MatrixKind::Degree, MatrixKind::Laplacian];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Degree => "degree",
            MatrixKind::Laplacian => "laplacian",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMatrixKind;

impl fmt::Display for UnknownMatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of adjacency, degree, laplacian")
    }
}

impl core::error::Error for UnknownMatrixKind {}

impl FromStr for MatrixKind {
    type Err = UnknownMatrixKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MatrixKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or(UnknownMatrixKind)
    }
}

/// Dense symmetric integer matrix built from a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<i64>,
    kind: MatrixKind,
}

impl IntSymMatrix {
    pub fn of(g: &Graph, kind: MatrixKind) -> Self {
        let n = g.order();
        let mut entries = vec![0i64; n * n];
        for v in 0..n {
            if kind != MatrixKind::Adjacency {
                entries[v * n + v] = g.degree(v) as i64;
            }
            if kind != MatrixKind::Degree {
                let off = if kind == MatrixKind::Adjacency { 1 } else { -1 };
                for &w in g.neighbors(v) {
                    entries[v * n + w] = off;
                }
            }
        }
        let m = IntSymMatrix { n, entries, kind };
        debug_assert!(m.check_invariants());
        m
    }

    fn check_invariants(&self) -> bool {
        let n = self.n;
        let symmetric = (0..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(j, i)));
        symmetric
            && match self.kind {
                MatrixKind::Laplacian => (0..n).all(|i| {
                    self.get(i, i) >= 0 && (0..n).map(|j| self.get(i, j)).sum::<i64>() == 0
                }),
                MatrixKind::Adjacency => (0..n).all(|i| {
                    self.get(i, i) == 0 && (0..n).all(|j| matches!(self.get(i, j), 0 | 1))
                }),
                MatrixKind::Degree => (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j) == 0)),
            }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Largest absolute row sum; bounds every eigenvalue in absolute value.
    pub fn max_abs_row_sum(&self) -> u64 {
        self.rows()
            .map(|r| r.iter().map(|x| x.unsigned_abs()).sum::<u64>())
            .max()
            .unwrap_or(0)
    }

    /// `[tr(M^0), tr(M^1), ..., tr(M^kmax)]`, exact.
    pub fn power_traces(&self, kmax: usize) -> Vec<BigInt> {
        if let Some(t) = self.power_traces_i128(kmax) {
            return t.into_iter().map(BigInt::from).collect();
        }
        self.power_traces_big(kmax)
    }

    fn power_traces_i128(&self, kmax: usize) -> Option<Vec<i128>> {
        let n = self.n;
        let base: Vec<i128> = self.entries.iter().map(|&x| i128::from(x)).collect();
        let mut power = identity_i128(n);
        let mut out = Vec::with_capacity(kmax + 1);
        out.push(n as i128);
        for _ in 0..kmax {
            let mut next = vec![0i128; n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = power[i * n + k];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let b = base[k * n + j];
                        if b != 0 {
                            let cell = &mut next[i * n + j];
                            *cell = cell.checked_add(a.checked_mul(b)?)?;
                        }
                    }
                }
            }
            power = next;
            let mut tr = 0i128;
            for i in 0..n {
                tr = tr.checked_add(power[i * n + i])?;
            }
            out.push(tr);
        }
        Some(out)
    }

    fn power_traces_big(&self, kmax: usize) -> Vec<BigInt> {
        let n = self.n;
        let mut power: Vec<BigInt> = identity_i128(n).into_iter().map(BigInt::from).collect();
        let mut out = Vec::with_capacity(kmax + 1);
        out.push(BigInt::from(n));
        for _ in 0..kmax {
            let mut next = vec![BigInt::zero(); n * n];
            for i in 0..n {
                for k in 0..n {
                    if power[i * n + k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let b = self.get(k, j);
                        if b != 0 {
                            next[i * n + j] += &power[i * n + k] * b;
                        }
                    }
                }
            }
            power = next;
            out.push((0..n).map(|i| &power[i * n + i]).sum());
        }
        out
    }
}

fn identity_i128(n: usize) -> Vec<i128> {
    let mut m = vec![0i128; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}
