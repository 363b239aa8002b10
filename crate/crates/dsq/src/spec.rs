//! Textual graph arguments: `centipede:8`, `centipede` (size taken from
//! context), `kinv-path:4` for the triangle chain over a path, or graph6.

use std::fmt;
use std::str::FromStr;

use dsq_core::families::k_inverse;
use dsq_core::graph::{build, graph6, path, Family};
use dsq_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("`{0}` is neither a family name, `kinv-path`, nor valid graph6")]
    Unrecognized(String),
    #[error("bad size in `{0}`")]
    BadSize(String),
    #[error("`{0}` needs an explicit size here")]
    MissingSize(String),
    #[error(transparent)]
    Graph(#[from] dsq_core::GraphError),
    #[error(transparent)]
    Family(#[from] dsq_core::families::FamilyError),
    #[error("graph6: {0}")]
    Graph6(#[from] graph6::Graph6Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Builder { family: Family, size: Option<usize> },
    /// `K⁻¹(P_t)`: `t` triangles glued in a row.
    ChainOverPath { triangles: Option<usize> },
    Literal(Graph),
}

impl GraphSpec {
    /// The graph, with `default_size` filling in a missing size.
    pub fn resolve(&self, default_size: Option<usize>) -> Result<Graph, SpecError> {
        let need = |size: Option<usize>| size.or(default_size).ok_or_else(|| SpecError::MissingSize(self.to_string()));
        match self {
            GraphSpec::Builder { family, size } => Ok(build(*family, need(*size)?)?),
            GraphSpec::ChainOverPath { triangles } => Ok(k_inverse(&path(need(*triangles)?))?.graph),
            GraphSpec::Literal(g) => Ok(g.clone()),
        }
    }

    pub fn has_size(&self) -> bool {
        match self {
            GraphSpec::Builder { size, .. } => size.is_some(),
            GraphSpec::ChainOverPath { triangles } => triangles.is_some(),
            GraphSpec::Literal(_) => true,
        }
    }
}

impl FromStr for GraphSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        if let Some(code) = s.strip_prefix("g6:") {
            return Ok(GraphSpec::Literal(graph6::decode(code.as_bytes())?));
        }
        let (head, size) = match s.split_once(':') {
            Some((h, z)) => (h, Some(z.parse().map_err(|_| SpecError::BadSize(s.into()))?)),
            None => (s, None),
        };
        if head.eq_ignore_ascii_case("kinv-path") {
            return Ok(GraphSpec::ChainOverPath { triangles: size });
        }
        if let Ok(family) = head.parse::<Family>() {
            return Ok(GraphSpec::Builder { family, size });
        }
        graph6::decode(s.as_bytes())
            .map(GraphSpec::Literal)
            .map_err(|_| SpecError::Unrecognized(s.into()))
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let with_size = |f: &mut fmt::Formatter<'_>, name: &str, size: &Option<usize>| match size {
            Some(z) => write!(f, "{name}:{z}"),
            None => f.write_str(name),
        };
        match self {
            GraphSpec::Builder { family, size } => with_size(f, family.name(), size),
            GraphSpec::ChainOverPath { triangles } => with_size(f, "kinv-path", triangles),
            GraphSpec::Literal(g) => write!(f, "g6:{}", graph6::encode(g)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_form() {
        let c8: GraphSpec = "centipede:8".parse().unwrap();
        assert_eq!(c8.resolve(None).unwrap(), dsq_core::graph::centipede(8));
        let bare: GraphSpec = "centipede".parse().unwrap();
        assert!(bare.resolve(None).is_err());
        assert_eq!(bare.resolve(Some(6)).unwrap().order(), 6);
        let chain: GraphSpec = "kinv-path:3".parse().unwrap();
        assert_eq!(chain.resolve(None).unwrap().size(), 9);
        let k3: GraphSpec = "Bw".parse().unwrap();
        assert_eq!(k3, "g6:Bw".parse().unwrap());
        assert_eq!(k3.to_string(), "g6:Bw");
        assert!("centipede:x".parse::<GraphSpec>().is_err());
        assert!("centipede:7".parse::<GraphSpec>().unwrap().resolve(None).is_err());
    }
}
