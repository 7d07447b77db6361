//! JSON file formats for posets and polytopes, and resolution of
//! command-line arguments that name one.

use std::path::Path;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::polytope::{LatticePolytope, PolytopeSpec};
use crate::poset::{Poset, PosetSpec};

/// Parses `{"d": int, "covers": [[i, j], ...]}`.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let spec: PosetSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Poset::from_spec(&spec)
}

/// Parses `{"ambient_dim": m, "vertices": [[...], ...]}`.
pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let spec: PolytopeSpec =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    LatticePolytope::from_spec(&spec)
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string(&p.to_spec()).expect("poset specs serialize")
}

pub fn polytope_to_json(p: &LatticePolytope) -> String {
    serde_json::to_string_pretty(&p.to_spec()).expect("polytope specs serialize")
}

fn read_source(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

/// A poset given as inline JSON, a file path, or `@name` for a fixture.
pub fn load_poset(arg: &str) -> Result<Poset> {
    if let Some(name) = arg.strip_prefix('@') {
        return fixtures::named_poset(name)
            .ok_or_else(|| Error::Parse(format!("unknown poset fixture {name:?}")));
    }
    parse_poset(&read_source(arg)?)
}

/// A polytope given as inline JSON, a file path, or `@name` for a fixture.
pub fn load_polytope(arg: &str) -> Result<LatticePolytope> {
    if let Some(name) = arg.strip_prefix('@') {
        return fixtures::named_polytope(name)
            .ok_or_else(|| Error::Parse(format!("unknown polytope fixture {name:?}")));
    }
    parse_polytope(&read_source(arg)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_examples() {
        assert_eq!(parse_poset(r#"{"d":2,"covers":[[1,2]]}"#).unwrap(), Poset::chain(2));
        assert_eq!(parse_poset(r#"{"d":3,"covers":[]}"#).unwrap(), Poset::antichain(3));
        assert!(matches!(
            parse_poset(r#"{"d":2,"covers":[[1,2],[2,1]]}"#),
            Err(Error::CycleDetected(_, _))
        ));
        assert!(matches!(parse_poset("{\"d\":"), Err(Error::Parse(_))));
    }

    #[test]
    fn round_trips() {
        let p = fixtures::p6();
        assert_eq!(parse_poset(&poset_to_json(&p)).unwrap(), p);
        let q = fixtures::reflexive_simplex(3);
        assert_eq!(parse_polytope(&polytope_to_json(&q)).unwrap(), q);
        assert_eq!(load_poset("@chain-2").unwrap(), Poset::chain(2));
        assert!(load_polytope("@nothing").is_err());
    }

    #[test]
    fn polytope_format_checks_lengths() {
        let text = r#"{"ambient_dim": 2, "vertices": [[0, 0], [1, 0, 0]]}"#;
        assert!(matches!(parse_polytope(text), Err(Error::DimensionMismatch(2, 3))));
    }
}
