//! The textual algebra file format.
//!
//! ```text
//! # optional comments
//! width=2
//! TT
//! FF
//! UU
//! ```
//!
//! The first significant line declares the width; every following line is
//! one element literal. Blank lines and `#` comments are skipped. Parsing
//! reports the offending line number; whether the listed universe actually
//! forms an algebra is checked separately by
//! [`FiniteCAlgebra::from_universe`].

use crate::algebra::FiniteCAlgebra;
use crate::error::{Error, Result};
use crate::vector::TritVec;

/// Parses the raw `(width, elements)` content of an algebra file.
pub fn parse_algebra_text(text: &str) -> Result<(usize, Vec<TritVec>)> {
    let mut width: Option<usize> = None;
    let mut elements = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        match width {
            None => {
                let value = content
                    .strip_prefix("width=")
                    .ok_or_else(|| Error::FileFormat {
                        line,
                        message: format!("expected `width=<n>`, found {content:?}"),
                    })?;
                let parsed: usize = value.trim().parse().map_err(|_| Error::FileFormat {
                    line,
                    message: format!("invalid width {value:?}"),
                })?;
                TritVec::undefined(parsed).map_err(|e| Error::FileFormat {
                    line,
                    message: e.to_string(),
                })?;
                width = Some(parsed);
            }
            Some(w) => {
                let element = TritVec::parse(content).map_err(|e| Error::FileFormat {
                    line,
                    message: e.to_string(),
                })?;
                if element.width() as usize != w {
                    return Err(Error::FileFormat {
                        line,
                        message: format!(
                            "element {content} has width {}, file declares {w}",
                            element.width()
                        ),
                    });
                }
                elements.push(element);
            }
        }
    }
    match width {
        Some(w) => Ok((w, elements)),
        None => Err(Error::FileFormat {
            line: 1,
            message: "missing `width=<n>` header".to_string(),
        }),
    }
}

/// Parses and validates a complete algebra (constants present, universe
/// closed).
pub fn parse_algebra(text: &str) -> Result<FiniteCAlgebra> {
    let (width, elements) = parse_algebra_text(text)?;
    FiniteCAlgebra::from_universe(width, elements)
}

/// Renders an algebra back into the file format, canonically ordered.
pub fn render_algebra(m: &FiniteCAlgebra) -> String {
    let mut out = format!("width={}\n", m.width());
    for e in m.elements() {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}
