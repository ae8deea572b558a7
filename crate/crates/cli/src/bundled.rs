//! Ring files shipped with the binary.

use crate::spec::RingSpec;
use crate::CliError;

pub const RINGS: [(&str, &str); 5] = [
    ("regular-2d", include_str!("../rings/regular-2d.ring")),
    ("two-planes", include_str!("../rings/two-planes.ring")),
    ("two-planes-thick", include_str!("../rings/two-planes-thick.ring")),
    ("veronese", include_str!("../rings/veronese.ring")),
    ("fermat-cubic", include_str!("../rings/fermat-cubic.ring")),
];

/// A bundled ring by name, with or without the `.ring` suffix.
pub fn bundled(name: &str) -> Option<Result<RingSpec, CliError>> {
    let stem = name.strip_suffix(".ring").unwrap_or(name);
    RINGS
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(n, text)| RingSpec::parse(n, text))
}

/// Reads a ring file from disk, falling back to the bundled rings.
pub fn load(path: &str) -> Result<RingSpec, CliError> {
    match std::fs::read_to_string(path) {
        Ok(text) => {
            let stem = std::path::Path::new(path)
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or(path);
            RingSpec::parse(stem, &text)
        }
        Err(e) => bundled(path).unwrap_or_else(|| Err(CliError::Io(format!("{path}: {e}")))),
    }
}
