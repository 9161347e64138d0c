//! A small table of reference knots and fingerprint identification,
//! including connected sums of up to three table entries.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::braidgen::BraidWord;
use crate::invariants::{det_of, is_trivial, LaurentPoly, RolfsenCoeffs};
use crate::{Error, Result};

const BUNDLED: &str = include_str!("../data/catalog.json");
const SCHEMA_VERSION: &str = "v1";
/// Largest number of prime summands tried by [`Catalog::identify`].
pub const MAX_SUMMANDS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Reversible,
    FullyAmphicheiral,
    NegativeAmphicheiral,
    PositiveAmphicheiral,
    Chiral,
}

impl Symmetry {
    /// Classes that no simple minimal knot can have.
    pub fn is_obstructed(self) -> bool {
        matches!(self, Symmetry::NegativeAmphicheiral | Symmetry::Chiral)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
    pub alexander: RolfsenCoeffs,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jones: Option<LaurentPoly>,
    pub symmetry: Symmetry,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibered: Option<bool>,
    /// A braid whose closure is this knot, used to recompute the invariants.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<BraidWord>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub provenance: String,
}

impl CatalogEntry {
    pub fn alexander_poly(&self) -> LaurentPoly {
        self.alexander.normalized().to_poly()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CatalogFile {
    Versioned { version: String, entries: Vec<serde_json::Value> },
    Bare(Vec<serde_json::Value>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

fn parse_entries(text: &str, origin: &str) -> Result<Vec<CatalogEntry>> {
    let schema = |location: String, message: String| Error::Schema { location, message };
    let file: CatalogFile = serde_json::from_str(text).map_err(|e| {
        schema(format!("{origin}:{}:{}", e.line(), e.column()), e.to_string())
    })?;
    let raw = match file {
        CatalogFile::Versioned { version, entries } => {
            if version != SCHEMA_VERSION {
                return Err(schema(
                    format!("{origin}: version"),
                    format!("unsupported version {version:?}, expected {SCHEMA_VERSION:?}"),
                ));
            }
            entries
        }
        CatalogFile::Bare(entries) => entries,
    };
    let mut out = Vec::with_capacity(raw.len());
    let mut names = HashSet::new();
    for (i, value) in raw.into_iter().enumerate() {
        let entry: CatalogEntry = serde_json::from_value(value)
            .map_err(|e| schema(format!("{origin}: entries[{i}]"), e.to_string()))?;
        let at = |field: &str| format!("{origin}: entries[{i}] ({}).{field}", entry.name);
        if entry.alexander.value_at_one().abs() != 1 {
            return Err(schema(
                at("alexander"),
                format!("{} evaluates to {} at t=1, expected ±1", entry.alexander, entry.alexander.value_at_one()),
            ));
        }
        if !names.insert(entry.name.clone()) {
            return Err(schema(at("name"), "duplicate name".into()));
        }
        out.push(entry);
    }
    Ok(out)
}

/// The bundled table, merged with the file at `path` if given. Entries in
/// the file replace bundled entries of the same name.
pub fn load_catalog(path: Option<&Path>) -> Result<Catalog> {
    let mut catalog = Catalog::bundled();
    if let Some(path) = path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Schema { location: path.display().to_string(), message: e.to_string() })?;
        for entry in parse_entries(&text, &path.display().to_string())? {
            match catalog.entries.iter_mut().find(|e| e.name == entry.name) {
                Some(slot) => *slot = entry,
                None => catalog.entries.push(entry),
            }
        }
    }
    Ok(catalog)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchStrength {
    AlexanderOnly,
    AlexanderAndJones,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub name: String,
    pub mirrored: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    /// e.g. `"4_1"` or `"3_1 # m(3_1)"`.
    pub label: String,
    pub summands: Vec<Summand>,
    pub strength: MatchStrength,
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.strength {
            MatchStrength::AlexanderOnly => "Δ",
            MatchStrength::AlexanderAndJones => "Δ+V",
        };
        write!(f, "{} [{tag}]", self.label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub candidates: Vec<Candidate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction_note: Option<String>,
}

impl Identification {
    pub fn best(&self) -> Option<&Candidate> {
        self.candidates.first()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.candidates.iter().map(|c| c.label.as_str()).collect()
    }
}

fn label(summands: &[Summand]) -> String {
    summands
        .iter()
        .map(|s| if s.mirrored { format!("m({})", s.name) } else { s.name.clone() })
        .join(" # ")
}

impl Catalog {
    pub fn bundled() -> Self {
        let entries = parse_entries(BUNDLED, "bundled catalog").expect("bundled catalog is valid");
        Self { entries }
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name || e.aliases.iter().any(|a| a == name))
    }

    /// Candidates whose Alexander polynomial equals `alex` up to sign and
    /// `t ↔ 1/t`, among single entries and connected sums of up to
    /// [`MAX_SUMMANDS`] entries. With `jones` given, a candidate whose
    /// summands all carry a Jones fingerprint is kept only if some choice of
    /// mirrors reproduces `jones` or its mirror image.
    ///
    /// `writhe` is not used for matching; it is accepted so that callers
    /// hand over the whole fingerprint of a braid.
    pub fn identify(&self, alex: &LaurentPoly, jones: Option<&LaurentPoly>, _writhe: i64) -> Identification {
        let target = match crate::invariants::normalize_alexander(alex) {
            Ok(t) => t,
            Err(_) => return Identification { candidates: vec![], obstruction_note: None },
        };
        let mut candidates = Vec::new();

        if is_trivial(&target) {
            let unknot_jones_ok = jones.is_none_or(|v| v.is_one());
            if unknot_jones_ok {
                let strength = if jones.is_some() { MatchStrength::AlexanderAndJones } else { MatchStrength::AlexanderOnly };
                let summands = vec![Summand { name: "unknot".into(), mirrored: false }];
                candidates.push(Candidate { label: label(&summands), summands, strength });
            }
        }

        let prime: Vec<(usize, LaurentPoly, u64)> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.name != "unknot")
            .map(|(i, e)| {
                let a = e.alexander_poly();
                let d = det_of(&a);
                (i, a, d)
            })
            .collect();
        let (span, det) = (target.span(), det_of(&target));

        for size in 1..=MAX_SUMMANDS {
            for combo in prime.iter().combinations_with_replacement(size) {
                if combo.iter().map(|c| c.1.span()).sum::<i64>() != span {
                    continue;
                }
                if combo.iter().map(|c| c.2 as u128).product::<u128>() != det as u128 {
                    continue;
                }
                let product = combo.iter().fold(LaurentPoly::one(), |acc, c| &acc * &c.1);
                if product != target {
                    continue;
                }
                let entries: Vec<&CatalogEntry> = combo.iter().map(|c| &self.entries[c.0]).collect();
                if let Some(c) = self.check_jones(&entries, jones) {
                    candidates.push(c);
                }
            }
        }

        candidates.sort_by_key(|c| (std::cmp::Reverse(c.strength), c.summands.len()));
        let obstruction_note = self.obstruction_note(&candidates);
        Identification { candidates, obstruction_note }
    }

    fn check_jones(&self, entries: &[&CatalogEntry], jones: Option<&LaurentPoly>) -> Option<Candidate> {
        let plain = |mirrors: &[bool]| -> Vec<Summand> {
            entries
                .iter()
                .zip(mirrors)
                .map(|(e, &m)| Summand { name: e.name.clone(), mirrored: m })
                .collect()
        };
        let fingerprints: Option<Vec<&LaurentPoly>> = entries.iter().map(|e| e.jones.as_ref()).collect();
        let (Some(query), Some(fps)) = (jones, fingerprints) else {
            let summands = plain(&vec![false; entries.len()]);
            return Some(Candidate { label: label(&summands), summands, strength: MatchStrength::AlexanderOnly });
        };
        let query_mirror = query.invert_var();
        // Fewest mirrors first, so amphicheiral summands stay unmirrored.
        let mut choices: Vec<Vec<bool>> =
            (0..entries.len()).map(|_| [false, true]).multi_cartesian_product().collect();
        choices.sort_by_key(|m| (m.iter().filter(|&&b| b).count(), m.clone()));
        choices.into_iter().find_map(|mirrors| {
            let v = fps.iter().zip(&mirrors).fold(LaurentPoly::one(), |acc, (fp, &m)| {
                if m { &acc * &fp.invert_var() } else { &acc * fp }
            });
            (v == *query || v == query_mirror).then(|| {
                let summands = plain(&mirrors);
                Candidate { label: label(&summands), summands, strength: MatchStrength::AlexanderAndJones }
            })
        })
    }

    fn obstruction_note(&self, candidates: &[Candidate]) -> Option<String> {
        if candidates.is_empty() {
            return None;
        }
        let obstructed = |c: &Candidate| {
            c.summands.iter().any(|s| self.get(&s.name).is_some_and(|e| e.symmetry.is_obstructed()))
        };
        candidates.iter().all(obstructed).then(|| {
            "every candidate involves a negative amphicheiral or chiral knot, which cannot occur as a \
             simple minimal knot; the identification is probably wrong"
                .to_string()
        })
    }
}
