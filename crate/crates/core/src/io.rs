//! Interchange formats: MacKay alist for individual check matrices and a
//! JSON bundle for whole codes. Both round-trip bit-exactly.

use serde::{Deserialize, Serialize};

use crate::css::CssCode;
use crate::error::Error;
use crate::gf2::BitMatrix;

/// Serialize a check matrix in alist form (1-based indices, unpadded).
pub fn matrix_to_alist(m: &BitMatrix) -> String {
    let (rows, cols) = (m.rows(), m.cols());
    let col_lists: Vec<Vec<usize>> = (0..cols)
        .map(|c| (0..rows).filter(|&r| m.get(r, c)).collect())
        .collect();
    let row_lists: Vec<Vec<usize>> = (0..rows).map(|r| m.row(r).ones()).collect();
    let max_col = col_lists.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = row_lists.iter().map(Vec::len).max().unwrap_or(0);
    let join = |v: &[usize], offset: usize| {
        v.iter()
            .map(|x| (x + offset).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    out.push_str(&format!("{cols} {rows}\n"));
    out.push_str(&format!("{max_col} {max_row}\n"));
    out.push_str(&join(
        &col_lists.iter().map(Vec::len).collect::<Vec<_>>(),
        0,
    ));
    out.push('\n');
    out.push_str(&join(
        &row_lists.iter().map(Vec::len).collect::<Vec<_>>(),
        0,
    ));
    out.push('\n');
    for list in &col_lists {
        out.push_str(&join(list, 1));
        out.push('\n');
    }
    for list in &row_lists {
        out.push_str(&join(list, 1));
        out.push('\n');
    }
    out
}

fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<usize>, Error> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected integer, found {tok:?}"),
            })
        })
        .collect()
}

/// Parse an alist matrix. Zero entries in the index lists (padding used
/// by some writers) are ignored.
pub fn matrix_from_alist(text: &str) -> Result<BitMatrix, Error> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let need = |idx: usize| -> Result<(usize, &str), Error> {
        lines.get(idx).copied().ok_or(Error::Parse {
            line: lines.last().map_or(1, |(n, _)| *n),
            message: "unexpected end of alist".into(),
        })
    };
    let (ln, header) = need(0)?;
    let dims = parse_numbers(header, ln)?;
    if dims.len() != 2 {
        return Err(Error::Parse {
            line: ln,
            message: "header must be \"n m\"".into(),
        });
    }
    let (cols, rows) = (dims[0], dims[1]);
    let (ln, _) = need(1)?;
    let _ = ln;
    let (ln, degrees_line) = need(2)?;
    let col_degrees = parse_numbers(degrees_line, ln)?;
    if col_degrees.len() != cols {
        return Err(Error::Parse {
            line: ln,
            message: format!("expected {cols} column degrees"),
        });
    }
    let (ln, degrees_line) = need(3)?;
    let row_degrees = parse_numbers(degrees_line, ln)?;
    if row_degrees.len() != rows {
        return Err(Error::Parse {
            line: ln,
            message: format!("expected {rows} row degrees"),
        });
    }
    let mut m = BitMatrix::zeros(rows, cols);
    for c in 0..cols {
        let (ln, list_line) = need(4 + c)?;
        let entries = parse_numbers(list_line, ln)?;
        let nonzero: Vec<usize> = entries.iter().copied().filter(|&e| e != 0).collect();
        if nonzero.len() != col_degrees[c] {
            return Err(Error::Parse {
                line: ln,
                message: format!(
                    "column {} lists {} entries, degree says {}",
                    c + 1,
                    nonzero.len(),
                    col_degrees[c]
                ),
            });
        }
        for e in nonzero {
            if e > rows {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("row index {e} out of range"),
                });
            }
            m.set(e - 1, c, true);
        }
    }
    // Cross-check the row lists against the column lists.
    for r in 0..rows {
        let (ln, list_line) = need(4 + cols + r)?;
        let entries = parse_numbers(list_line, ln)?;
        let mut nonzero: Vec<usize> = entries.iter().copied().filter(|&e| e != 0).collect();
        nonzero.sort_unstable();
        let expect: Vec<usize> = m.row(r).ones().iter().map(|c| c + 1).collect();
        if nonzero != expect {
            return Err(Error::Parse {
                line: ln,
                message: format!("row {} list disagrees with column lists", r + 1),
            });
        }
    }
    Ok(m)
}

/// Both check matrices of a CSS code: X block, blank line, Z block.
pub fn code_to_alist(code: &CssCode) -> String {
    format!(
        "{}\n{}",
        matrix_to_alist(code.h_x()),
        matrix_to_alist(code.h_z())
    )
}

/// Inverse of [`code_to_alist`]. The X block's header fixes where the Z
/// block starts.
pub fn code_from_alist(text: &str) -> Result<CssCode, Error> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "empty alist".into(),
        });
    }
    let dims = parse_numbers(lines[0], 1)?;
    if dims.len() != 2 {
        return Err(Error::Parse {
            line: 1,
            message: "header must be \"n m\"".into(),
        });
    }
    let x_len = 4 + dims[0] + dims[1];
    if lines.len() < x_len {
        return Err(Error::Parse {
            line: lines.len(),
            message: "truncated X block".into(),
        });
    }
    let h_x = matrix_from_alist(&lines[..x_len].join("\n"))?;
    let h_z = matrix_from_alist(&lines[x_len..].join("\n"))?;
    CssCode::new(h_x, h_z)
}

/// JSON bundle for a CSS code; `schema` is always 1.
#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct CodeBundle {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    /// Check supports as sorted qubit-index lists.
    pub h_x: Vec<Vec<usize>>,
    pub h_z: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl CodeBundle {
    pub fn from_code(code: &CssCode, name: Option<String>) -> Self {
        let supports = |m: &BitMatrix| (0..m.rows()).map(|r| m.row(r).ones()).collect();
        CodeBundle {
            schema: 1,
            name,
            n: code.num_qubits(),
            h_x: supports(code.h_x()),
            h_z: supports(code.h_z()),
            labels: code.labels().map(|l| l.to_vec()),
        }
    }

    pub fn to_code(&self) -> Result<CssCode, Error> {
        if self.schema != 1 {
            return Err(Error::Parse {
                line: 1,
                message: format!("unsupported schema {}", self.schema),
            });
        }
        let build = |rows: &[Vec<usize>]| -> Result<BitMatrix, Error> {
            let mut m = BitMatrix::zeros(rows.len(), self.n);
            for (r, support) in rows.iter().enumerate() {
                for &c in support {
                    if c >= self.n {
                        return Err(Error::Parse {
                            line: 1,
                            message: format!("qubit index {c} out of range for n = {}", self.n),
                        });
                    }
                    m.set(r, c, true);
                }
            }
            Ok(m)
        };
        let code = CssCode::new(build(&self.h_x)?, build(&self.h_z)?)?;
        Ok(match &self.labels {
            Some(labels) => code.with_labels(labels.clone()),
            None => code,
        })
    }

    pub fn to_json(&self) -> Result<String, Error> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }
}
