//! On-disk poset documents.
//!
//! A poset file is a single JSON document with fields `n`, `relations`,
//! and optional `labels`, `parts`, `realizer`. Relations may be any
//! generating set (covers or more); the loader closes them transitively
//! and rejects cycles, so the in-memory form is canonical. A realizer, if
//! present, must satisfy the realizer invariant after closure.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::construct::ConstructionRecord;
use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset, Realizer};

/// The serialized shape. Field names are part of the format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetFile {
    pub n: usize,
    pub relations: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realizer: Option<(Vec<usize>, Vec<usize>)>,
}

/// A loaded document: the closed poset plus whatever named structure the
/// file carried.
#[derive(Debug, Clone)]
pub struct PosetDocument {
    pub poset: Poset,
    pub parts: BTreeMap<String, Vec<usize>>,
    pub realizer: Option<Realizer>,
}

impl PosetFile {
    /// Serializes a generated record; relations are written as the cover
    /// set, the smallest generating set.
    pub fn from_record(record: &ConstructionRecord) -> PosetFile {
        PosetFile {
            n: record.poset.n(),
            relations: record.poset.cover_edges().edges,
            labels: record.poset.labels().map(|l| l.to_vec()),
            parts: Some(record.parts.clone()),
            realizer: record
                .realizer
                .as_ref()
                .map(|r| (r.lx.order().to_vec(), r.ly.order().to_vec())),
        }
    }

    pub fn from_document(doc: &PosetDocument) -> PosetFile {
        PosetFile {
            n: doc.poset.n(),
            relations: doc.poset.cover_edges().edges,
            labels: doc.poset.labels().map(|l| l.to_vec()),
            parts: if doc.parts.is_empty() { None } else { Some(doc.parts.clone()) },
            realizer: doc
                .realizer
                .as_ref()
                .map(|r| (r.lx.order().to_vec(), r.ly.order().to_vec())),
        }
    }

    /// Validates and closes the document into its in-memory form.
    pub fn into_document(self) -> Result<PosetDocument> {
        let mut poset = Poset::from_relations(self.n, &self.relations)?;
        if let Some(labels) = self.labels {
            if labels.len() != self.n {
                return Err(Error::File(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    self.n
                )));
            }
            poset = poset.with_labels(labels);
        }
        let parts = self.parts.unwrap_or_default();
        for (name, elems) in &parts {
            for &e in elems {
                if e >= self.n {
                    return Err(Error::File(format!(
                        "part {name} references element {e} out of range"
                    )));
                }
            }
        }
        let realizer = match self.realizer {
            None => None,
            Some((lx, ly)) => {
                let realizer = Realizer {
                    lx: LinearExtension::new(&poset, lx)?,
                    ly: LinearExtension::new(&poset, ly)?,
                };
                poset.check_realizer(&realizer)?;
                Some(realizer)
            }
        };
        Ok(PosetDocument { poset, parts, realizer })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<PosetFile> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn save(path: &Path, file: &PosetFile) -> Result<()> {
    std::fs::write(path, file.to_json()? + "\n")?;
    Ok(())
}

pub fn load(path: &Path) -> Result<PosetDocument> {
    let text = std::fs::read_to_string(path)?;
    PosetFile::from_json(&text)?.into_document()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_antichain_es, build_r};

    #[test]
    fn record_round_trips() {
        let rec = build_r(3).unwrap();
        let file = PosetFile::from_record(&rec);
        let text = file.to_json().unwrap();
        let doc = PosetFile::from_json(&text).unwrap().into_document().unwrap();
        assert_eq!(doc.poset, rec.poset);
        assert_eq!(doc.parts, rec.parts);
        assert_eq!(doc.realizer, rec.realizer);
    }

    #[test]
    fn loader_closes_relations() {
        let file = PosetFile {
            n: 3,
            relations: vec![(0, 1), (1, 2)],
            labels: None,
            parts: None,
            realizer: None,
        };
        let doc = file.into_document().unwrap();
        assert!(doc.poset.lt(0, 2));
    }

    #[test]
    fn loader_rejects_cycles_and_bad_realizers() {
        let cyclic = PosetFile {
            n: 2,
            relations: vec![(0, 1), (1, 0)],
            labels: None,
            parts: None,
            realizer: None,
        };
        assert!(matches!(cyclic.into_document(), Err(Error::CycleDetected(_))));

        let bad_realizer = PosetFile {
            n: 2,
            relations: vec![],
            labels: None,
            parts: None,
            realizer: Some((vec![0, 1], vec![0, 1])),
        };
        assert!(matches!(bad_realizer.into_document(), Err(Error::InvalidRealizer(_))));
    }

    #[test]
    fn antichain_realizer_survives_round_trip() {
        let rec = build_antichain_es(4).unwrap();
        let text = PosetFile::from_record(&rec).to_json().unwrap();
        let doc = PosetFile::from_json(&text).unwrap().into_document().unwrap();
        assert!(doc.realizer.is_some());
    }

    #[test]
    fn field_names_are_stable() {
        let rec = build_antichain_es(2).unwrap();
        let text = PosetFile::from_record(&rec).to_json().unwrap();
        for key in ["\"n\"", "\"relations\"", "\"labels\"", "\"parts\"", "\"realizer\""] {
            assert!(text.contains(key), "missing {key} in {text}");
        }
    }
}
