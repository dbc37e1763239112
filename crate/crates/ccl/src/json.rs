//! JSON forms of certificates and reduction traces.

use std::fs;
use std::path::Path;

use ccl_core::cover::{CoverCertificate, Provenance};
use ccl_core::partition::CliquePartition;
use ccl_core::sequence::ReductionTrace;
use ccl_core::Clique;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub t: usize,
    pub n: usize,
    pub cliques: Vec<Vec<usize>>,
    pub provenance: Vec<String>,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("{origin}: {source}")]
    Io {
        origin: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}: {source}")]
    Json {
        origin: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("unknown provenance tag {0:?}")]
    UnknownTag(String),
    #[error("size field says {size} but {cliques} cliques are listed")]
    SizeMismatch { size: usize, cliques: usize },
}

impl CertificateFile {
    pub fn new(cert: &CoverCertificate, partition: Option<&CliquePartition<'_>>) -> Self {
        CertificateFile {
            t: cert.t,
            n: cert.n,
            cliques: cert.cliques.iter().map(|c| c.vertices().to_vec()).collect(),
            provenance: cert
                .provenance
                .iter()
                .map(|p| p.as_str().to_string())
                .collect(),
            size: cert.len(),
            partition: partition.map(|p| p.parts().iter().map(|c| c.vertices().to_vec()).collect()),
        }
    }

    pub fn to_certificate(&self) -> Result<CoverCertificate, CertificateError> {
        if self.size != self.cliques.len() {
            return Err(CertificateError::SizeMismatch {
                size: self.size,
                cliques: self.cliques.len(),
            });
        }
        let provenance = self
            .provenance
            .iter()
            .map(|s| {
                s.parse::<Provenance>()
                    .map_err(|_| CertificateError::UnknownTag(s.clone()))
            })
            .collect::<Result<_, _>>()?;
        Ok(CoverCertificate {
            t: self.t,
            n: self.n,
            cliques: self.cliques.iter().cloned().map(Clique::new).collect(),
            provenance,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn read(path: &Path) -> Result<Self, CertificateError> {
        let origin = path.display().to_string();
        let text = fs::read_to_string(path).map_err(|source| CertificateError::Io {
            origin: origin.clone(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| CertificateError::Json { origin, source })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: u8,
    pub f_before: i64,
    pub f_after: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFile {
    pub steps: Vec<TraceStep>,
    #[serde(rename = "final")]
    pub final_sequence: Vec<u8>,
    #[serde(rename = "type")]
    pub kind: u8,
}

impl From<&ReductionTrace> for TraceFile {
    fn from(t: &ReductionTrace) -> Self {
        TraceFile {
            steps: t
                .steps
                .iter()
                .map(|s| TraceStep {
                    op: s.op.id(),
                    f_before: s.f_before,
                    f_after: s.f_after,
                })
                .collect(),
            final_sequence: t.final_sequence.entries().to_vec(),
            kind: t.final_type.kind(),
        }
    }
}
