//! The family mini-language: `name:args` strings for the built-in graph
//! families, so every report names its graphs reproducibly.

use alpha_index::graph::{
    bug, complete, complete_minus_edge, cycle, graph6_decode, path, path_kite, Graph, GraphError,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown family '{0}'; expected complete:n, path:n, cycle:n, kme:n, bug:p,q,r, or kite:p,q")]
    Unknown(String),
    #[error("family '{family}' takes {expected} argument(s), got {got}")]
    Arity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("invalid count '{0}'")]
    BadCount(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Builds a graph from a family spec such as `complete:5` or `bug:6,3,5`.
pub fn parse_family(spec: &str) -> Result<Graph, FamilyError> {
    let (name, rest) = spec
        .split_once(':')
        .ok_or_else(|| FamilyError::Unknown(spec.to_string()))?;
    let args: Vec<usize> = rest
        .split(',')
        .map(|token| {
            token
                .trim()
                .parse()
                .map_err(|_| FamilyError::BadCount(token.trim().to_string()))
        })
        .collect::<Result<_, _>>()?;
    let arity = |family: &'static str, expected: usize| {
        if args.len() == expected {
            Ok(())
        } else {
            Err(FamilyError::Arity {
                family,
                expected,
                got: args.len(),
            })
        }
    };
    match name {
        "complete" => {
            arity("complete", 1)?;
            Ok(complete(args[0])?)
        }
        "path" => {
            arity("path", 1)?;
            Ok(path(args[0])?)
        }
        "cycle" => {
            arity("cycle", 1)?;
            Ok(cycle(args[0])?)
        }
        "kme" => {
            arity("kme", 1)?;
            Ok(complete_minus_edge(args[0])?)
        }
        "bug" => {
            arity("bug", 3)?;
            Ok(bug(args[0], args[1], args[2])?.graph)
        }
        "kite" => {
            arity("kite", 2)?;
            Ok(path_kite(args[0], args[1])?)
        }
        other => Err(FamilyError::Unknown(other.to_string())),
    }
}

/// Builds a graph from either notation: a family spec (optionally behind
/// a `family:` prefix) or a graph6 string (optionally behind `graph6:`).
/// Bare values with a colon are family specs; graph6 text never contains
/// one, its alphabet starting above the colon's code point.
pub fn parse_graph_input(text: &str) -> Result<Graph, FamilyError> {
    if let Some(rest) = text.strip_prefix("family:") {
        return parse_family(rest);
    }
    if let Some(rest) = text.strip_prefix("graph6:") {
        return Ok(graph6_decode(rest)?);
    }
    if text.contains(':') {
        parse_family(text)
    } else {
        Ok(graph6_decode(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alpha_index::graph::is_isomorphic;

    #[test]
    fn families_build() {
        assert_eq!(parse_family("complete:5").unwrap(), complete(5).unwrap());
        assert_eq!(parse_family("path:4").unwrap(), path(4).unwrap());
        assert_eq!(parse_family("cycle:6").unwrap(), cycle(6).unwrap());
        assert_eq!(
            parse_family("kme:4").unwrap(),
            complete_minus_edge(4).unwrap()
        );
        assert_eq!(parse_family("bug:6,3,5").unwrap().order(), 12);
        assert_eq!(parse_family("kite:2,3").unwrap().order(), 5);
    }

    #[test]
    fn family_errors_are_specific() {
        assert!(matches!(
            parse_family("star:4"),
            Err(FamilyError::Unknown(_))
        ));
        assert!(matches!(parse_family("K5"), Err(FamilyError::Unknown(_))));
        assert!(matches!(
            parse_family("bug:6,3"),
            Err(FamilyError::Arity { expected: 3, got: 2, .. })
        ));
        assert!(matches!(
            parse_family("path:four"),
            Err(FamilyError::BadCount(_))
        ));
        assert!(matches!(
            parse_family("path:0"),
            Err(FamilyError::Graph(_))
        ));
    }

    #[test]
    fn graph_inputs_accept_both_notations() {
        let from_family = parse_graph_input("family:complete:3").unwrap();
        let bare_family = parse_graph_input("complete:3").unwrap();
        let from_graph6 = parse_graph_input("graph6:Bw").unwrap();
        let bare_graph6 = parse_graph_input("Bw").unwrap();
        assert_eq!(from_family, bare_family);
        assert_eq!(from_graph6, bare_graph6);
        assert!(is_isomorphic(&from_family, &from_graph6).unwrap());
    }
}
