//! Corpus assembly: graphs from a file or from small-graph enumeration.
//!
//! An input file holds either one graph6 string per line or a single edge
//! list (`n` on its first line, then one `u v` pair per line). The two are
//! told apart by the first significant line: edge lists start with a bare
//! integer, while graph6 bytes never fall in the ASCII digit range.

use crate::GlobalOpts;
use anyhow::{bail, Context, Result};
use bei_core::graph::{enumerate_graphs, parse_edge_list, parse_graph6};
use bei_core::Graph;
use std::fs;
use std::path::Path;

/// One corpus graph, echoed everywhere by its graph6 form.
#[derive(Debug)]
pub struct Entry {
    pub graph: Graph,
    pub graph6: String,
}

impl Entry {
    fn new(graph: Graph) -> Entry {
        let graph6 = graph.to_graph6();
        Entry { graph, graph6 }
    }
}

pub fn load(opts: &GlobalOpts) -> Result<Vec<Entry>> {
    let mut graphs = match (&opts.input, opts.enumerate) {
        (Some(path), None) => read_file(path)?,
        (None, Some(n)) => {
            enumerate_graphs(n, opts.connected).context("enumerating the corpus")?
        }
        (None, None) => bail!("either --input or --enumerate is required"),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    if opts.connected {
        graphs.retain(|g| g.is_connected());
    }
    if graphs.is_empty() {
        bail!("the corpus is empty");
    }
    Ok(graphs.into_iter().map(Entry::new).collect())
}

fn read_file(path: &Path) -> Result<Vec<Graph>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let significant = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let Some(first) = significant else {
        bail!("{}: no graphs found", path.display());
    };
    // Graph6 bytes lie in 63..=126, so a line of digits and spaces can
    // only open an edge list; routing it there keeps parse errors in the
    // format the user wrote.
    let looks_numeric = !first.is_empty()
        && first
            .bytes()
            .all(|b| b.is_ascii_digit() || b.is_ascii_whitespace());
    if looks_numeric {
        let g = parse_edge_list(&text).with_context(|| format!("{}", path.display()))?;
        return Ok(vec![g]);
    }
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line)
            .with_context(|| format!("{}:{}: bad graph6 line", path.display(), idx + 1))?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::OrderArg;
    use std::io::Write as _;

    fn opts() -> GlobalOpts {
        GlobalOpts {
            input: None,
            enumerate: None,
            connected: false,
            order: OrderArg::Lex,
            characteristics: vec![2],
            max_degree: None,
            jobs: 1,
            out: None,
        }
    }

    fn file_with(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn graph6_lines_with_comments_and_blanks() {
        let f = file_with("# header\nBW\n\nBw\n");
        let mut o = opts();
        o.input = Some(f.path().to_path_buf());
        let entries = load(&o).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].graph6, "BW");
        assert_eq!(entries[1].graph, Graph::complete(3));
    }

    #[test]
    fn edge_list_detected_by_leading_integer() {
        let f = file_with("# a path\n4\n1 2\n2 3\n3 4\n");
        let mut o = opts();
        o.input = Some(f.path().to_path_buf());
        let entries = load(&o).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].graph, Graph::path(4));
    }

    #[test]
    fn numeric_first_line_routes_to_the_edge_list_parser() {
        let f = file_with("4 3\n1 2\n");
        let mut o = opts();
        o.input = Some(f.path().to_path_buf());
        let err = format!("{:#}", load(&o).unwrap_err());
        assert!(err.contains("vertex count"), "wrong parser: {err}");
    }

    #[test]
    fn bad_graph6_reports_the_line() {
        let f = file_with("BW\nnot-a-graph\n");
        let mut o = opts();
        o.input = Some(f.path().to_path_buf());
        let err = format!("{:#}", load(&o).unwrap_err());
        assert!(err.contains(":2:"), "missing line number: {err}");
    }

    #[test]
    fn connected_filter_applies_to_files_too() {
        let f = file_with("B?\nBw\n");
        let mut o = opts();
        o.input = Some(f.path().to_path_buf());
        o.connected = true;
        let entries = load(&o).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].graph6, "Bw");
    }

    #[test]
    fn enumeration_counts() {
        let mut o = opts();
        o.enumerate = Some(4);
        assert_eq!(load(&o).unwrap().len(), 11);
        o.connected = true;
        assert_eq!(load(&o).unwrap().len(), 6);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        let f = file_with("# nothing here\n");
        let mut o = opts();
        o.input = Some(f.path().to_path_buf());
        assert!(load(&o).is_err());
        let mut o = opts();
        o.enumerate = Some(0);
        assert!(load(&o).is_err());
    }
}
