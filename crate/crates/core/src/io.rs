//! Group files: one JSON document per group.
//!
//! ```json
//! {
//!   "name": "S3",
//!   "degree": 3,
//!   "generators": ["(0 1 2)", "(0 1)"],
//!   "expected_order": 6,
//!   "tags": ["soluble"]
//! }
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<u64>,
    #[serde(default)]
    pub tags: Vec<String>,
}

impl GroupSpecFile {
    /// Describes an existing group, recording its order.
    pub fn describe(name: &str, g: &Group, tags: &[&str]) -> Self {
        GroupSpecFile {
            name: name.to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.to_string()).collect(),
            expected_order: Some(g.order()),
            tags: tags.iter().map(|t| t.to_string()).collect(),
        }
    }

    pub fn build(&self) -> Result<Group> {
        self.build_with(Config::default())
    }

    pub fn build_with(&self, config: Config) -> Result<Group> {
        if self.degree == 0 {
            return Err(Error::Parse { line: 1, column: 1, message: "degree must be positive".into() });
        }
        let gens = self
            .generators
            .iter()
            .map(|s| Permutation::parse_cycles(self.degree, s))
            .collect::<Result<Vec<_>>>()?;
        let g = Group::with_config(self.degree, &gens, config)?;
        if let Some(expected) = self.expected_order {
            if expected != g.order() {
                return Err(Error::OrderMismatch { expected, actual: g.order() });
            }
        }
        Ok(g)
    }
}

/// Parses the text of a group file. Cycle-notation errors are reported at
/// their position in the file.
pub fn parse_spec(text: &str) -> Result<GroupSpecFile> {
    let spec: GroupSpecFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    for (i, s) in spec.generators.iter().enumerate() {
        if let Err(Error::Parse { column, message, .. }) = Permutation::parse_cycles(spec.degree.max(1), s) {
            let (line, col) = locate_string(text, "generators", i, column);
            return Err(Error::Parse { line, column: col, message: format!("generator {i}: {message}") });
        }
    }
    Ok(spec)
}

/// Line and column in `text` of `offset_col` (1-based) inside the `index`-th
/// string of the array under `key`. Falls back to the key position.
fn locate_string(text: &str, key: &str, index: usize, offset_col: usize) -> (usize, usize) {
    let key_pat = format!("\"{key}\"");
    let start = text.find(&key_pat).map(|p| p + key_pat.len()).unwrap_or(0);
    let bytes = text.as_bytes();
    let mut pos = start;
    let mut seen = 0;
    let mut target = None;
    while pos < bytes.len() {
        match bytes[pos] {
            b'"' => {
                if seen == index {
                    target = Some(pos + 1);
                    break;
                }
                seen += 1;
                pos += 1;
                while pos < bytes.len() && bytes[pos] != b'"' {
                    pos += if bytes[pos] == b'\\' { 2 } else { 1 };
                }
                pos += 1;
            }
            b']' => break,
            _ => pos += 1,
        }
    }
    let at = target.map(|t| t + offset_col.saturating_sub(1)).unwrap_or(start);
    let before = &text[..at.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
    (line, column)
}

/// Canonical rendering: pretty JSON with fields in declaration order and a
/// trailing newline.
pub fn render_spec(spec: &GroupSpecFile) -> String {
    let mut s = serde_json::to_string_pretty(spec).expect("spec serializes");
    s.push('\n');
    s
}

/// Reads and builds a group file.
pub fn parse_group_file(path: &Path) -> Result<(GroupSpecFile, Group)> {
    let text = std::fs::read_to_string(path)?;
    let spec = parse_spec(&text)?;
    let g = spec.build()?;
    Ok((spec, g))
}

/// The `.json` files of a directory in name order.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn write_spec(dir: &Path, file_stem: &str, spec: &GroupSpecFile) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{file_stem}.json"));
    std::fs::write(&path, render_spec(spec))?;
    Ok(path)
}
