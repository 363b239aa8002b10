//! Exact characteristic polynomials as hashable, totally ordered keys.

use std::fmt;

use dsq_core::spectral::char_poly;
use dsq_core::{Graph, IntPolynomial, IntSymMatrix, MatrixKind};
use num_bigint::{BigInt, Sign};
use sha2::{Digest, Sha256};

/// Injective byte encoding of a coefficient vector: for each coefficient,
/// low degree first, a sign byte, a 4-byte big-endian length and the
/// big-endian magnitude.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(Vec<u8>);

impl Fingerprint {
    pub fn of_poly(p: &IntPolynomial) -> Self {
        let mut bytes = Vec::new();
        for c in p.coeffs() {
            let (sign, magnitude) = c.to_bytes_be();
            bytes.push(match sign {
                Sign::Minus => 0,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            });
            let magnitude: &[u8] = if sign == Sign::NoSign { &[] } else { &magnitude };
            bytes.extend_from_slice(&(magnitude.len() as u32).to_be_bytes());
            bytes.extend_from_slice(magnitude);
        }
        Fingerprint(bytes)
    }

    pub fn of_graph(g: &Graph, kind: MatrixKind) -> Self {
        Self::of_poly(&char_poly(&IntSymMatrix::of(g, kind)))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn polynomial(&self) -> IntPolynomial {
        let mut coeffs = Vec::new();
        let mut rest = &self.0[..];
        while let [sign, tail @ ..] = rest {
            let len = u32::from_be_bytes(tail[..4].try_into().unwrap()) as usize;
            let magnitude = &tail[4..4 + len];
            let sign = match sign {
                0 => Sign::Minus,
                1 => Sign::NoSign,
                _ => Sign::Plus,
            };
            coeffs.push(BigInt::from_bytes_be(sign, magnitude));
            rest = &tail[4 + len..];
        }
        IntPolynomial::new(coeffs)
    }

    /// First 8 bytes of SHA-256 over the encoding, in hex. Stable across
    /// runs and platforms; for display and CSV only, never for equality.
    pub fn short_hash(&self) -> String {
        let digest = Sha256::digest(&self.0);
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fingerprint({})", self.polynomial())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dsq_core::graph::{build, centipede, path};
    use dsq_core::Family;

    #[test]
    fn round_trips_and_separates() {
        let polys = [
            IntPolynomial::from_i64(&[0, 9, -6, 1]),
            IntPolynomial::from_i64(&[0, -9, 6, 1]),
            IntPolynomial::from_i64(&[0, 0, 0, 1]),
            IntPolynomial::new(vec![BigInt::from(1) << 200u32, BigInt::from(-7), BigInt::from(1)]),
        ];
        let prints: Vec<Fingerprint> = polys.iter().map(Fingerprint::of_poly).collect();
        for (p, f) in polys.iter().zip(&prints) {
            assert_eq!(&f.polynomial(), p);
        }
        for i in 0..prints.len() {
            for j in i + 1..prints.len() {
                assert_ne!(prints[i], prints[j]);
            }
        }
    }

    #[test]
    fn cospectral_graphs_share_a_fingerprint() {
        // K_{1,4} and C4 + K1 have the same adjacency spectrum
        let star = build(Family::Star, 5).unwrap();
        let c4k1 = build(Family::Cycle, 4).unwrap().disjoint_union(&Graph::empty(1));
        assert_eq!(
            Fingerprint::of_graph(&star, MatrixKind::Adjacency),
            Fingerprint::of_graph(&c4k1, MatrixKind::Adjacency)
        );
        assert_ne!(
            Fingerprint::of_graph(&star, MatrixKind::Laplacian),
            Fingerprint::of_graph(&c4k1, MatrixKind::Laplacian)
        );
        assert_ne!(
            Fingerprint::of_graph(&centipede(6), MatrixKind::Laplacian),
            Fingerprint::of_graph(&path(6), MatrixKind::Laplacian)
        );
        assert_eq!(Fingerprint::of_graph(&path(3), MatrixKind::Laplacian).short_hash().len(), 16);
    }
}
