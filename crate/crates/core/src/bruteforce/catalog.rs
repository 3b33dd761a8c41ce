//! Named matrix representations, read from a TOML catalog.
//!
//! ```toml
//! [[entry]]
//! id = "so5"
//! description = "so(5) on C^5"
//! construction = { kind = "so", n = 5 }
//! highest_weight = [{ type = "B2", labels = [1, 0] }]
//! ```
//!
//! `kind` is one of `sl`, `so`, `sp` (with `n`; `sp` acts on `C^{2n}`), `sym`
//! (with `k`), `spin` (with `n`), `half-spin` (with `n` even and
//! `chirality = "+"` or `"-"`, the even and odd degree parts) and `tensor`
//! (with `factors = [id, id]`). `highest_weight` lists one simple factor per
//! tensor factor and ties the matrices to their weight system.

use std::path::Path;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::construct::{self, ModuleMatrices};
use crate::error::{Error, Result};
use crate::repweights::IrrepSpec;
use crate::rootsys::{build_root_system, parse_type};

const BUILTIN: &str = include_str!("../../data/catalog.toml");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Construction {
    Sl { n: usize },
    So { n: usize },
    Sp { n: usize },
    Sym { k: usize },
    Spin { n: usize },
    HalfSpin { n: usize, chirality: String },
    Tensor { factors: [String; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeight {
    #[serde(rename = "type")]
    pub root_type: String,
    pub labels: Vec<i64>,
}

impl HighestWeight {
    pub fn to_spec(&self) -> Result<IrrepSpec> {
        let (family, rank) = parse_type(&self.root_type)?;
        IrrepSpec::from_labels(Arc::new(build_root_system(family, rank)?), &self.labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    #[serde(default)]
    pub description: String,
    pub construction: Construction,
    pub highest_weight: Vec<HighestWeight>,
}

impl CatalogEntry {
    pub fn specs(&self) -> Result<Vec<IrrepSpec>> {
        self.highest_weight.iter().map(HighestWeight::to_spec).collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Catalog {
    #[serde(rename = "entry")]
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cat: Catalog = toml::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        for (i, e) in cat.entries.iter().enumerate() {
            if cat.entries[..i].iter().any(|f| f.id == e.id) {
                return Err(Error::Catalog(format!("duplicate id '{}'", e.id)));
            }
        }
        Ok(cat)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// The catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::from_toml_str(BUILTIN).expect("builtin catalog parses"))
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownCatalogEntry(id.to_string()))
    }

    /// Matrices for `id`, without validation.
    pub fn module(&self, id: &str) -> Result<ModuleMatrices> {
        self.module_at_depth(id, 0)
    }

    fn module_at_depth(&self, id: &str, depth: usize) -> Result<ModuleMatrices> {
        if depth > 8 {
            return Err(Error::Catalog(format!("tensor nesting too deep at '{id}'")));
        }
        let unsupported = |msg: &str| Err(Error::Unsupported(format!("{id}: {msg}")));
        Ok(match &self.get(id)?.construction {
            Construction::Sl { n } if *n >= 2 => construct::sl_defining(*n),
            Construction::So { n } if *n >= 3 => construct::so_defining(*n),
            Construction::Sp { n } if *n >= 1 => construct::sp_defining(*n),
            Construction::Sym { k } if *k >= 1 => construct::sym_power(*k),
            Construction::Spin { n } if (3..=12).contains(n) => construct::spin(*n),
            Construction::HalfSpin { n, chirality } if (6..=12).contains(n) && n % 2 == 0 => match chirality.as_str() {
                "+" => construct::half_spin(*n, true),
                "-" => construct::half_spin(*n, false),
                _ => return unsupported("chirality must be \"+\" or \"-\""),
            },
            Construction::Tensor { factors } => {
                let a = self.module_at_depth(&factors[0], depth + 1)?;
                let b = self.module_at_depth(&factors[1], depth + 1)?;
                construct::tensor(&a, &b)
            }
            _ => return unsupported("parameters out of range"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let cat = Catalog::builtin();
        assert!(cat.get("so5").is_ok());
        assert!(cat.get("spin12+").is_ok());
        assert!(matches!(cat.get("g2"), Err(Error::UnknownCatalogEntry(_))));
    }

    #[test]
    fn rejects_duplicates_and_bad_kinds() {
        let dup = r#"
            [[entry]]
            id = "a"
            construction = { kind = "sl", n = 2 }
            highest_weight = [{ type = "A1", labels = [1] }]
            [[entry]]
            id = "a"
            construction = { kind = "sl", n = 2 }
            highest_weight = [{ type = "A1", labels = [1] }]
        "#;
        assert!(matches!(Catalog::from_toml_str(dup), Err(Error::Catalog(_))));
        let bad = r#"
            [[entry]]
            id = "x"
            construction = { kind = "g2" }
            highest_weight = []
        "#;
        assert!(matches!(Catalog::from_toml_str(bad), Err(Error::Catalog(_))));
    }

    #[test]
    fn out_of_range_parameters() {
        let text = r#"
            [[entry]]
            id = "spin14"
            construction = { kind = "spin", n = 14 }
            highest_weight = [{ type = "D7", labels = [0, 0, 0, 0, 0, 0, 1] }]
        "#;
        let cat = Catalog::from_toml_str(text).unwrap();
        assert!(matches!(cat.module("spin14"), Err(Error::Unsupported(_))));
    }
}
