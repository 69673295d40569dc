//! Reading graphs from arguments and corpus files.

use std::fs;
use std::path::Path;

use indsat::graph::generators::make;
use indsat::graph::parse_graph6;
use indsat::{Error, Graph, Result};

/// An existing file (its first graph), a graph6 string, or a family name
/// such as `K5`, `C~7` or `spider:3x2`.
pub fn graph_arg(arg: &str) -> Result<Graph> {
    if Path::new(arg).is_file() {
        return corpus(Path::new(arg))?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Contract(format!("no graph in file {arg}")));
    }
    match parse_graph6(arg) {
        Ok(g) => Ok(g),
        Err(parse_err) => make(arg).map_err(|_| parse_err),
    }
}

/// One graph6 per line; blank lines and `#` comments are skipped. A
/// malformed line aborts with its line number.
pub fn corpus(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Contract(format!("cannot read {}: {e}", path.display())))?;
    parse_corpus(&text)
}

pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Error::Parse {
            offset: 0,
            message: format!("line {}: {e}", i + 1),
        })?;
        out.push(g);
    }
    Ok(out)
}
