//! The JSON code file format.
//!
//! ```json
//! {"q": 2, "p": 2, "r": 1, "modulus": [1, 1], "n": 3, "kind": "linear",
//!  "generator": [[1, 1, 1]], "parity": [[1, 1, 0], [0, 1, 1]]}
//! ```
//!
//! Field elements are integers `0..q`, read as base-p coefficient vectors
//! modulo `modulus` (lowest degree first). `p`, `r` and `modulus` may be
//! omitted, in which case the canonical field of order `q` is used. A linear
//! code needs `generator` or `parity`; an explicit code needs `codewords`.

use std::path::Path;

use crcodes::{Code, Field, FieldElement, FieldSpec, Guards};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Linear,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub kind: CodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<Vec<u32>>>,
}

fn widen(rows: Vec<Vec<FieldElement>>) -> Vec<Vec<u32>> {
    rows.into_iter().map(|r| r.into_iter().map(u32::from).collect()).collect()
}

impl CodeFile {
    /// Serialisable form of a code; explicit codes are enumerated within
    /// the guards.
    pub fn from_code(code: &Code, guards: &Guards) -> CliResult<Self> {
        let spec = code.field().spec().clone();
        let mut file = CodeFile {
            q: code.q() as u32,
            p: Some(spec.p),
            r: Some(spec.r),
            modulus: Some(spec.modulus),
            n: code.n(),
            kind: CodeKind::Linear,
            generator: None,
            parity: None,
            codewords: None,
        };
        match (code.generator(), code.parity()) {
            (Some(g), Some(h)) => {
                file.generator = Some(widen(g.row_vecs()));
                file.parity = Some(widen(h.row_vecs()));
            }
            _ => {
                file.kind = CodeKind::Explicit;
                file.codewords = Some(widen(code.codewords(guards)?));
            }
        }
        Ok(file)
    }

    fn field(&self) -> Result<Field, String> {
        let spec = match (self.p, self.r, &self.modulus) {
            (None, None, None) => FieldSpec::canonical(self.q).map_err(|e| e.to_string())?,
            (Some(p), Some(r), Some(m)) => FieldSpec::new(p, r, m.clone()).map_err(|e| e.to_string())?,
            _ => return Err("`p`, `r` and `modulus` must be given together or not at all".into()),
        };
        if spec.q() != self.q {
            return Err(format!("q = {} but p^r = {}", self.q, spec.q()));
        }
        Field::new(spec).map_err(|e| e.to_string())
    }

    fn rows(&self, name: &str, rows: &[Vec<u32>]) -> Result<Vec<Vec<FieldElement>>, String> {
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != self.n {
                    return Err(format!("{name} row {i} has length {}, expected n = {}", row.len(), self.n));
                }
                row.iter()
                    .map(|&x| {
                        if x < self.q {
                            Ok(x as FieldElement)
                        } else {
                            Err(format!("{name} row {i} has entry {x} outside 0..{}", self.q))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Builds the code; the error string explains what is wrong.
    pub fn to_code(&self) -> Result<Code, String> {
        let field = self.field()?;
        match self.kind {
            CodeKind::Linear => {
                if let Some(h) = &self.parity {
                    let rows = self.rows("parity", h)?;
                    Code::from_parity_check(&field, self.n, &rows).map_err(|e| e.to_string())
                } else if let Some(g) = &self.generator {
                    let rows = self.rows("generator", g)?;
                    Code::from_generator(&field, self.n, &rows).map_err(|e| e.to_string())
                } else {
                    Err("a linear code needs `generator` or `parity`".into())
                }
            }
            CodeKind::Explicit => {
                let words = self.codewords.as_ref().ok_or("an explicit code needs `codewords`")?;
                let words = self.rows("codeword", words)?;
                Code::from_codewords(&field, self.n, words).map_err(|e| e.to_string())
            }
        }
    }
}

/// Reads and validates a code file. Syntax errors carry serde's line and
/// column; semantic errors point at line 1.
pub fn read_code(path: &Path) -> CliResult<Code> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_code(&text, path)
}

pub fn parse_code(text: &str, path: &Path) -> CliResult<Code> {
    let file: CodeFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    file.to_code().map_err(|msg| CliError::Parse { path: path.to_path_buf(), line: 1, column: 1, msg })
}

pub fn write_code(code: &Code, path: &Path, guards: &Guards) -> CliResult<()> {
    let file = CodeFile::from_code(code, guards)?;
    let text = serde_json::to_string_pretty(&file).expect("code files always serialise");
    std::fs::write(path, text + "\n").map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_linear_and_explicit() {
        let g = Guards::default();
        let f = Field::gf(4).unwrap();
        let lin = Code::from_generator(&f, 3, &[vec![1, 2, 3]]).unwrap();
        let file = CodeFile::from_code(&lin, &g).unwrap();
        assert_eq!(file.kind, CodeKind::Linear);
        let back = file.to_code().unwrap();
        assert!(back.same_set(&lin, &g).unwrap());

        let exp = Code::from_codewords(&f, 2, vec![vec![0, 0], vec![1, 3]]).unwrap();
        let file = CodeFile::from_code(&exp, &g).unwrap();
        assert_eq!(file.kind, CodeKind::Explicit);
        assert!(file.to_code().unwrap().same_set(&exp, &g).unwrap());
    }

    #[test]
    fn bad_files_report_position() {
        let p = Path::new("x.json");
        let err = parse_code("{\"q\": 2,\n \"n\": }", p).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
        let err = parse_code(r#"{"q":2,"n":2,"kind":"linear","parity":[[1,2]]}"#, p).unwrap_err();
        assert!(err.to_string().contains("outside 0..2"), "{err}");
        let err = parse_code(r#"{"q":6,"n":2,"kind":"linear","parity":[[1,1]]}"#, p).unwrap_err();
        assert!(err.to_string().contains("prime power"), "{err}");
        let err = parse_code(r#"{"q":2,"n":2,"kind":"explicit"}"#, p).unwrap_err();
        assert!(err.to_string().contains("codewords"), "{err}");
    }

    #[test]
    fn canonical_field_when_modulus_omitted() {
        let code =
            parse_code(r#"{"q":3,"n":4,"kind":"linear","parity":[[0,1,1,1],[1,0,1,2]]}"#, Path::new("t")).unwrap();
        assert_eq!((code.q(), code.dimension()), (3, Some(2)));
    }
}
