//! The JSON system file.
//!
//! ```json
//! {
//!   "format": 1,
//!   "dim": 2,
//!   "psi": [[-1, 1], [1, -1]],
//!   "delta": [{"label": "a", "vector": [2, -2]}]
//! }
//! ```
//!
//! `format` may be omitted on input. Output lists Ψ sorted and Δ in its
//! original order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::system::{canonical_psi, validate_system, MinusculeSystem, SimpleSystem};
use crate::vector::IntVector;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub label: String,
    pub vector: IntVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u64>,
    pub dim: usize,
    pub psi: Vec<IntVector>,
    pub delta: Vec<RootEntry>,
}

impl SystemFile {
    pub fn from_system(sys: &MinusculeSystem) -> Self {
        SystemFile {
            format: Some(FORMAT_VERSION),
            dim: sys.dim(),
            psi: sys.psi().to_vec(),
            delta: sys
                .delta()
                .roots()
                .iter()
                .map(|(label, vector)| RootEntry { label: label.clone(), vector: vector.clone() })
                .collect(),
        }
    }

    /// Checked Ψ (sorted, deduplicated) and Δ, not yet validated.
    pub fn into_parts(self) -> Result<(Vec<IntVector>, SimpleSystem)> {
        if let Some(f) = self.format.filter(|&f| f != FORMAT_VERSION) {
            return Err(Error::UnsupportedFormat(f));
        }
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let vectors = self.psi.iter().chain(self.delta.iter().map(|r| &r.vector));
        for v in vectors {
            if v.dim() != self.dim {
                return Err(Error::DimensionMismatch { left: self.dim, right: v.dim() });
            }
        }
        let delta = SimpleSystem::new(self.delta.into_iter().map(|r| (r.label, r.vector)).collect())?;
        Ok((canonical_psi(self.psi)?, delta))
    }
}

pub fn parse_system_file(text: &str) -> Result<SystemFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses and validates.
pub fn read_system(text: &str) -> Result<MinusculeSystem> {
    let (psi, delta) = parse_system_file(text)?.into_parts()?;
    validate_system(psi, delta)
}

/// Pretty-printed with a trailing newline.
pub fn write_system(sys: &MinusculeSystem) -> String {
    let mut s = serde_json::to_string_pretty(&SystemFile::from_system(sys)).expect("plain data");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogEntry;

    #[test]
    fn round_trip() {
        for entry in
            [CatalogEntry::Hesse, CatalogEntry::CrossC { n: 3 }, CatalogEntry::SchlafliAffine { level: -8 }]
        {
            let sys = entry.build().unwrap();
            let text = write_system(&sys);
            let back = read_system(&text).unwrap();
            assert_eq!(back, sys);
            assert_eq!(back.delta(), sys.delta());
            assert_eq!(write_system(&back), text);
        }
    }

    #[test]
    fn format_is_optional() {
        let text = r#"{"dim": 2, "psi": [[1, -1], [-1, 1]], "delta": [{"label": "a", "vector": [2, -2]}]}"#;
        let sys = read_system(text).unwrap();
        assert_eq!(sys.len(), 2);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(read_system("{"), Err(Error::Parse(_))));
        let wrong_version =
            r#"{"format": 2, "dim": 1, "psi": [[1]], "delta": [{"label": "a", "vector": [2]}]}"#;
        assert!(matches!(read_system(wrong_version), Err(Error::UnsupportedFormat(2))));
        let wrong_dim = r#"{"dim": 2, "psi": [[1]], "delta": [{"label": "a", "vector": [2]}]}"#;
        assert!(matches!(read_system(wrong_dim), Err(Error::DimensionMismatch { .. })));
        let extra = r#"{"dim": 1, "psi": [[1]], "delta": [], "colour": 3}"#;
        assert!(matches!(read_system(extra), Err(Error::Parse(_))));
        let invalid = r#"{"dim": 1, "psi": [[1]], "delta": [{"label": "a", "vector": [2]}]}"#;
        assert!(matches!(read_system(invalid), Err(Error::Invalid(_))));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = read_system("{\n  \"dim\": 1,\n  \"psi\": [[1,]]\n}").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }
}
