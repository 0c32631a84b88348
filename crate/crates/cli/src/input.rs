use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use semlab::format::{parse_graph, GraphFormat};
use semlab::{make_cactus, make_cycle, make_two_cycle_with_cycles, CactusSpec, Graph, SemLabeling};

/// Where the graph comes from. `--gen` wins over `--g6`, which wins over a file.
#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Generate a graph: `cycle N`, `two-cycle M N [EXTRA_CYCLE...]`, or
    /// `cactus "LEN LEN@CYCLE.POS ..."`
    #[arg(long = "gen", num_args = 1.., value_name = "FAMILY ARGS")]
    pub generate: Option<Vec<String>>,

    /// Graph as a graph6 string
    #[arg(long)]
    pub g6: Option<String>,

    /// Format of the graph file (default: graph6 for *.g6, edge-list otherwise)
    #[arg(long, value_name = "edge-list|graph6")]
    pub format: Option<GraphFormat>,

    /// Graph file, `-` for stdin
    pub file: Option<PathBuf>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph> {
        if let Some(args) = &self.generate {
            return generate(args);
        }
        if let Some(text) = &self.g6 {
            return parse_graph(text, GraphFormat::Graph6).context("parse graph6 string");
        }
        let path = self
            .file
            .as_ref()
            .ok_or_else(|| anyhow!("no graph given: use --gen, --g6 or a file"))?;
        let format = self.format.unwrap_or_else(|| guess_format(path));
        let text = read_text(path)?;
        parse_graph(&text, format).with_context(|| format!("parse {} as {format}", path.display()))
    }
}

fn guess_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => GraphFormat::Graph6,
        _ => GraphFormat::EdgeList,
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("read {}", path.display()))
}

pub fn read_certificate(path: &Path) -> Result<SemLabeling> {
    let text = read_text(path)?;
    SemLabeling::from_json(&text).with_context(|| format!("parse certificate {}", path.display()))
}

fn generate(args: &[String]) -> Result<Graph> {
    let numbers = |rest: &[String]| -> Result<Vec<usize>> {
        rest.iter()
            .map(|s| s.parse().with_context(|| format!("expected a number, found {s:?}")))
            .collect()
    };
    let (family, rest) = args.split_first().ok_or_else(|| anyhow!("--gen needs a family"))?;
    let graph = match family.as_str() {
        "cycle" => match numbers(rest)?.as_slice() {
            [n] => make_cycle(*n)?,
            _ => bail!("usage: --gen cycle N"),
        },
        "two-cycle" => match numbers(rest)?.as_slice() {
            [m, n, extra @ ..] => make_two_cycle_with_cycles(*m, *n, extra)?,
            _ => bail!("usage: --gen two-cycle M N [EXTRA_CYCLE...]"),
        },
        "cactus" => {
            let spec = CactusSpec::parse(&rest.join(" "))?;
            make_cactus(&spec)?
        }
        other => bail!("unknown family {other:?}; expected cycle, two-cycle or cactus"),
    };
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn generators() {
        assert_eq!(generate(&args("cycle 5")).unwrap().size(), 5);
        let g = generate(&args("two-cycle 3 3 4")).unwrap();
        assert_eq!((g.order(), g.size()), (9, 10));
        let g = generate(&args("cactus 3 3@0.1 3@1.2")).unwrap();
        assert_eq!((g.order(), g.size()), (7, 9));
        assert!(generate(&args("cycle")).is_err());
        assert!(generate(&args("cycle 2")).is_err());
        assert!(generate(&args("petersen")).is_err());
    }

    #[test]
    fn precedence() {
        let input = GraphInput {
            generate: Some(args("cycle 4")),
            g6: Some("Bw".into()),
            format: None,
            file: Some("missing.txt".into()),
        };
        assert_eq!(input.load().unwrap().order(), 4);
        let input = GraphInput {
            generate: None,
            ..input
        };
        assert_eq!(input.load().unwrap().order(), 3);
    }
}
