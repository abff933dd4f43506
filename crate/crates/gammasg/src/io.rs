//! The table file format (`.gsg`), corpus directories, and their parsers.
//!
//! Grammar (one item per line, `#` starts a comment line, blank lines are
//! ignored):
//!
//! ```text
//! gamma-semigroup v1
//! T <n>
//! G <m>
//! zero <index>          (optional)
//! names <n labels>      (optional)
//! <n*m data lines: for each a, for each gamma, the n entries [a gamma 0..n-1]>
//! ```
//!
//! Serialization is canonical: fields in the order above, single spaces, no
//! trailing whitespace, lines terminated by a single line feed. Parsing a
//! serialized instance reproduces it exactly on the semantic fields.

use std::fs;
use std::path::Path;

use crate::enumerate::CorpusInstance;
use crate::error::{Error, Result};
use crate::semigroup::GammaSemigroup;

/// The fixed header line.
pub const HEADER: &str = "gamma-semigroup v1";

struct Cursor<'a> {
    /// `(line_number, content)` for lines that are neither blank nor comments.
    lines: Vec<(usize, &'a str)>,
    at: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Cursor { lines, at: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.at).copied()
    }

    fn next(&mut self, expecting: &str) -> Result<(usize, &'a str)> {
        match self.lines.get(self.at) {
            Some(&item) => {
                self.at += 1;
                Ok(item)
            }
            None => Err(Error::SyntaxError {
                line: self.lines.last().map(|&(ln, _)| ln + 1).unwrap_or(1),
                reason: format!("unexpected end of input, expected {expecting}"),
            }),
        }
    }
}

fn keyword_value(line: &str, keyword: &str) -> Option<String> {
    line.strip_prefix(keyword)
        .and_then(|rest| rest.strip_prefix(' '))
        .map(|rest| rest.trim().to_string())
}

fn parse_count(line_no: usize, line: &str, keyword: &str) -> Result<usize> {
    let value = keyword_value(line, keyword).ok_or_else(|| Error::SyntaxError {
        line: line_no,
        reason: format!("expected `{keyword} <count>`, found `{line}`"),
    })?;
    value.parse().map_err(|_| Error::SyntaxError {
        line: line_no,
        reason: format!("`{value}` is not a base-10 count"),
    })
}

/// Parse one instance from table-file text. Errors: `SyntaxError` with the
/// offending line; entry-range violations as `IndexOutOfRange` carrying the
/// data line; all remaining construction errors (associativity, zero law)
/// pass through unchanged.
pub fn parse(text: &str) -> Result<GammaSemigroup> {
    let mut cur = Cursor::new(text);
    let (line_no, header) = cur.next("the header line")?;
    if header != HEADER {
        return Err(Error::SyntaxError {
            line: line_no,
            reason: format!("expected header `{HEADER}`, found `{header}`"),
        });
    }
    let (ln, l) = cur.next("`T <n>`")?;
    let n = parse_count(ln, l, "T")?;
    let (ln, l) = cur.next("`G <m>`")?;
    let m = parse_count(ln, l, "G")?;

    let mut zero: Option<(usize, usize)> = None;
    let mut names: Option<(usize, Vec<String>)> = None;
    while let Some((ln, l)) = cur.peek() {
        if let Some(v) = keyword_value(l, "zero") {
            if zero.is_some() {
                return Err(Error::SyntaxError {
                    line: ln,
                    reason: "duplicate `zero` line".to_string(),
                });
            }
            let z = v.parse().map_err(|_| Error::SyntaxError {
                line: ln,
                reason: format!("`{v}` is not a base-10 index"),
            })?;
            zero = Some((ln, z));
            cur.at += 1;
        } else if let Some(v) = keyword_value(l, "names") {
            if names.is_some() {
                return Err(Error::SyntaxError {
                    line: ln,
                    reason: "duplicate `names` line".to_string(),
                });
            }
            names = Some((ln, v.split_whitespace().map(str::to_string).collect()));
            cur.at += 1;
        } else {
            break;
        }
    }
    if let Some((ln, ref labels)) = names {
        if labels.len() != n {
            return Err(Error::SyntaxError {
                line: ln,
                reason: format!("expected {n} names, found {}", labels.len()),
            });
        }
    }

    let mut table = Vec::with_capacity(n * m * n);
    for _ in 0..n * m {
        let (ln, l) = cur.next("a data line")?;
        let entries: Vec<&str> = l.split_whitespace().collect();
        if entries.len() != n {
            return Err(Error::SyntaxError {
                line: ln,
                reason: format!("expected {n} entries, found {}", entries.len()),
            });
        }
        for raw in entries {
            let value: usize = raw.parse().map_err(|_| Error::SyntaxError {
                line: ln,
                reason: format!("`{raw}` is not a base-10 entry"),
            })?;
            if value >= n {
                return Err(Error::IndexOutOfRange {
                    position: table.len(),
                    line: Some(ln),
                });
            }
            table.push(value);
        }
    }
    if let Some((ln, l)) = cur.peek() {
        return Err(Error::SyntaxError {
            line: ln,
            reason: format!("unexpected trailing content `{l}`"),
        });
    }

    let mut s = GammaSemigroup::new(n, m, table, zero.map(|(_, z)| z))?;
    if let Some((_, labels)) = names {
        s = s.with_element_names(labels)?;
    }
    Ok(s)
}

/// Serialize an instance to canonical table-file text.
pub fn serialize(s: &GammaSemigroup) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("T {}\n", s.n()));
    out.push_str(&format!("G {}\n", s.m()));
    if let Some(z) = s.zero() {
        out.push_str(&format!("zero {z}\n"));
    }
    if let Some(names) = s.element_names() {
        out.push_str(&format!("names {}\n", names.join(" ")));
    }
    for a in 0..s.n() {
        for g in 0..s.m() {
            let row: Vec<String> = (0..s.n())
                .map(|b| s.triple_product(a, g, b).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Write a corpus to a directory: one `<id>.gsg` file per instance plus a
/// `manifest.tsv` (columns `id`, `class`, `provenance`, `file`) in corpus
/// order. Creates the directory if needed.
pub fn write_corpus(dir: &Path, corpus: &[CorpusInstance]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut manifest = String::from("id\tclass\tprovenance\tfile\n");
    for item in corpus {
        let file = format!("{}.gsg", item.id);
        fs::write(dir.join(&file), serialize(&item.instance))?;
        manifest.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            item.id, item.class, item.provenance, file
        ));
    }
    fs::write(dir.join("manifest.tsv"), manifest)?;
    Ok(())
}

/// Read a corpus directory previously produced by [`write_corpus`].
pub fn read_corpus(dir: &Path) -> Result<Vec<CorpusInstance>> {
    let manifest_path = dir.join("manifest.tsv");
    let text = fs::read_to_string(&manifest_path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 || line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(Error::SyntaxError {
                line: i + 1,
                reason: format!("manifest row has {} fields, expected 4", fields.len()),
            });
        }
        let instance = parse(&fs::read_to_string(dir.join(fields[3]))?)?;
        out.push(CorpusInstance {
            id: fields[0].to_string(),
            class: fields[1].to_string(),
            provenance: fields[2].to_string(),
            instance,
        });
    }
    Ok(out)
}
