//! Lazy reading of newline-separated graph6 files.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use dsq_core::graph::graph6::{self, Graph6Error};
use dsq_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum StreamError {
    #[error("cannot read graph6 stream: {0}")]
    Io(#[from] io::Error),
    #[error("line {line} (byte {offset}): {source}")]
    Malformed {
        line: usize,
        offset: u64,
        #[source]
        source: Graph6Error,
    },
}

/// A decoded record and where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    /// 1-based line number.
    pub line: usize,
    /// Byte offset of the start of the line.
    pub offset: u64,
    pub graph: Graph,
}

/// A record that failed to decode, kept when bad lines are skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedRecord {
    pub line: usize,
    pub offset: u64,
    pub message: String,
}

pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    offset: u64,
    buf: Vec<u8>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader {
            inner,
            line: 0,
            offset: 0,
            buf: Vec::new(),
        }
    }

    pub fn lines_read(&self) -> usize {
        self.line
    }

    pub fn bytes_read(&self) -> u64 {
        self.offset
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Record, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            let start = self.offset;
            match self.inner.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(k) => self.offset += k as u64,
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            let body = self.buf.trim_ascii_end();
            // blank lines and a lone header carry no graph
            if body.is_empty() || body == graph6::HEADER.as_bytes() {
                continue;
            }
            let line = self.line;
            return Some(
                graph6::decode(&self.buf)
                    .map(|graph| Record {
                        line,
                        offset: start,
                        graph,
                    })
                    .map_err(|source| StreamError::Malformed {
                        line,
                        offset: start,
                        source,
                    }),
            );
        }
    }
}

pub fn ingest_graph6_stream(path: &Path) -> Result<Graph6Reader<BufReader<File>>, StreamError> {
    Ok(Graph6Reader::new(BufReader::new(File::open(path)?)))
}

/// Drains a reader. Malformed records abort unless `skip_bad`, in which
/// case they are returned alongside the good ones.
pub fn read_all<R: BufRead>(
    reader: Graph6Reader<R>,
    skip_bad: bool,
) -> Result<(Vec<Record>, Vec<SkippedRecord>), StreamError> {
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for item in reader {
        match item {
            Ok(r) => good.push(r),
            Err(StreamError::Malformed { line, offset, source }) if skip_bad => bad.push(SkippedRecord {
                line,
                offset,
                message: source.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok((good, bad))
}
