//! Resource caps shared by the enumerating operations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable holding a JSON fragment that overrides defaults,
/// e.g. `{"max_circuits": 5000}`.
pub const CAPS_ENV: &str = "GEODETIC_FORGE_CAPS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// Upper bound on generator-image assignments tried by hom counting.
    pub hom_assignments: u64,
    /// Largest graph on which embedded circuits are enumerated.
    pub circuit_vertices: usize,
    pub max_circuits: usize,
    /// Rewrite steps allowed per normal-form computation.
    pub rewrite_steps: usize,
    /// Words visited by an irreducible-word census.
    pub census_words: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            hom_assignments: 10_000_000,
            circuit_vertices: 64,
            max_circuits: 1_000_000,
            rewrite_steps: 100_000,
            census_words: 10_000_000,
        }
    }
}

impl Caps {
    /// Applies a JSON fragment on top of `self`.
    pub fn merged_with_json(&self, fragment: &str) -> Result<Caps> {
        let mut base = serde_json::to_value(self)?;
        let patch: serde_json::Value = serde_json::from_str(fragment)?;
        let serde_json::Value::Object(patch) = patch else {
            return Err(Error::Parse("caps override must be a JSON object".into()));
        };
        let obj = base.as_object_mut().expect("caps serialize to an object");
        for (k, v) in patch {
            obj.insert(k, v);
        }
        let caps: Caps = serde_json::from_value(base)?;
        caps.validate()?;
        Ok(caps)
    }

    /// Defaults, overridden by [`CAPS_ENV`] when set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var(CAPS_ENV) {
            Ok(fragment) if !fragment.trim().is_empty() => Caps::default().merged_with_json(&fragment),
            _ => Ok(Caps::default()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.hom_assignments == 0
            || self.circuit_vertices == 0
            || self.max_circuits == 0
            || self.rewrite_steps == 0
            || self.census_words == 0
        {
            return Err(Error::Parse("caps must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fragment_overrides_only_named_fields() {
        let caps = Caps::default().merged_with_json(r#"{"max_circuits": 12}"#).unwrap();
        assert_eq!(caps.max_circuits, 12);
        assert_eq!(caps.circuit_vertices, 64);
    }

    #[test]
    fn rejects_unknown_and_zero() {
        assert!(Caps::default().merged_with_json(r#"{"bogus": 1}"#).is_err());
        assert!(Caps::default().merged_with_json(r#"{"rewrite_steps": 0}"#).is_err());
        assert!(Caps::default().merged_with_json("[1]").is_err());
    }
}
