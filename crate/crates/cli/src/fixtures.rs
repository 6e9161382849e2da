//! Curve descriptions bundled with the binary.

use std::path::Path;

use crate::format::{CurveFile, FormatError};

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
}

pub const ALL: [Fixture; 4] = [
    Fixture { name: "thm2", text: include_str!("../fixtures/thm2.json") },
    Fixture { name: "prop53", text: include_str!("../fixtures/prop53.json") },
    Fixture { name: "thm4", text: include_str!("../fixtures/thm4.json") },
    Fixture { name: "prop54", text: include_str!("../fixtures/prop54.json") },
];

/// Looks up a bundled fixture by name, with or without `.json`.
pub fn get(name: &str) -> Option<Fixture> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    ALL.into_iter().find(|f| f.name == stem)
}

pub fn parse(name: &str) -> CurveFile {
    let f = get(name).unwrap_or_else(|| panic!("no bundled fixture `{name}`"));
    CurveFile::parse(f.text).unwrap_or_else(|e| panic!("bundled fixture `{name}` is invalid: {e}"))
}

#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error, String),
    Format(FormatError, String),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Io(e, p) => write!(f, "cannot read `{p}`: {e}"),
            LoadError::Format(e, p) => write!(f, "`{p}`: {e}"),
        }
    }
}

impl std::error::Error for LoadError {}

/// Reads `spec` as a file path; if no such file exists and the file name
/// matches a bundled fixture, the bundled copy is used.
pub fn load(spec: &str) -> Result<CurveFile, LoadError> {
    let path = Path::new(spec);
    let text = if path.exists() {
        std::fs::read_to_string(path).map_err(|e| LoadError::Io(e, spec.into()))?
    } else {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or(spec);
        match get(name) {
            Some(f) => f.text.to_string(),
            None => {
                return Err(LoadError::Io(std::io::Error::from(std::io::ErrorKind::NotFound), spec.into()));
            }
        }
    };
    CurveFile::parse(&text).map_err(|e| LoadError::Format(e, spec.into()))
}
