//! CSV ingestion: group-key columns, then `order`, then `count`.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::distribution::OrderDistribution;
use crate::permutation::Alphabet;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("header: {0}")]
    Header(String),
    #[error("row {row}: {message}")]
    Malformed { row: u64, message: String },
    #[error("row {row}: invalid order '{label}': {message}")]
    InvalidOrder {
        row: u64,
        label: String,
        message: String,
    },
    #[error("row {row}: order '{label}' already given for group [{group}] on row {first_row}")]
    DuplicateOrder {
        row: u64,
        first_row: u64,
        group: String,
        label: String,
    },
    #[error("group [{group}] has zero total count")]
    ZeroTotal { group: String },
    #[error("group [{group}]: {message}")]
    Group { group: String, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug, Default)]
pub struct IngestConfig {
    pub alphabet: Alphabet,
    /// Key columns defining the groups. `None` uses every column before
    /// `order`; a subset pools counts over the remaining key columns.
    pub group_by: Option<Vec<String>>,
}

/// One distribution per distinct group key.
#[derive(Clone, Debug)]
pub struct Group {
    /// `(column, value)` pairs in column order.
    pub keys: Vec<(String, String)>,
    pub distribution: OrderDistribution,
}

impl Group {
    pub fn label(&self) -> String {
        self.keys
            .iter()
            .map(|(_, v)| v.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn key(&self, column: &str) -> Option<&str> {
        self.keys
            .iter()
            .find(|(c, _)| c == column)
            .map(|(_, v)| v.as_str())
    }
}

pub fn ingest_csv(path: &Path, config: &IngestConfig) -> Result<Vec<Group>, IngestError> {
    let file = File::open(path).map_err(|source| IngestError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ingest_reader(file, config)
}

pub fn ingest_reader<R: Read>(reader: R, config: &IngestConfig) -> Result<Vec<Group>, IngestError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    let order_col = header
        .iter()
        .position(|h| h == "order")
        .ok_or_else(|| IngestError::Header("missing column 'order'".into()))?;
    if header.get(order_col + 1).map(String::as_str) != Some("count")
        || header.len() != order_col + 2
    {
        return Err(IngestError::Header(
            "expected key columns, then 'order', then 'count' as the last column".into(),
        ));
    }
    let key_cols = &header[..order_col];
    let selected: Vec<usize> = match &config.group_by {
        None => (0..order_col).collect(),
        Some(cols) => cols
            .iter()
            .map(|c| {
                key_cols
                    .iter()
                    .position(|h| h == c)
                    .ok_or_else(|| IngestError::Header(format!("unknown group column '{c}'")))
            })
            .collect::<Result<_, _>>()?,
    };

    let alphabet = &config.alphabet;
    let size = (1..=alphabet.len()).product::<usize>();
    let mut first_seen: BTreeMap<(Vec<String>, usize), u64> = BTreeMap::new();
    let mut groups: BTreeMap<Vec<String>, Vec<u64>> = BTreeMap::new();

    for record in rdr.records() {
        let record = record?;
        let row = record.position().map_or(0, |p| p.line());
        if record.len() != header.len() {
            return Err(IngestError::Malformed {
                row,
                message: format!("expected {} fields, found {}", header.len(), record.len()),
            });
        }
        let label = &record[order_col];
        let perm = alphabet
            .parse(label)
            .map_err(|e| IngestError::InvalidOrder {
                row,
                label: label.to_string(),
                message: e.to_string(),
            })?;
        let count: u64 = record[order_col + 1]
            .parse()
            .map_err(|_| IngestError::Malformed {
                row,
                message: format!(
                    "count '{}' is not a non-negative integer",
                    &record[order_col + 1]
                ),
            })?;
        let full_key: Vec<String> = (0..order_col).map(|k| record[k].to_string()).collect();
        let idx = perm.lex_rank();
        if let Some(&first_row) = first_seen.get(&(full_key.clone(), idx)) {
            return Err(IngestError::DuplicateOrder {
                row,
                first_row,
                group: full_key.join(", "),
                label: label.to_string(),
            });
        }
        first_seen.insert((full_key.clone(), idx), row);
        let key: Vec<String> = selected.iter().map(|&k| full_key[k].clone()).collect();
        let weights = groups.entry(key).or_insert_with(|| vec![0; size]);
        weights[idx] = weights[idx]
            .checked_add(count)
            .ok_or_else(|| IngestError::Malformed {
                row,
                message: "count overflow".into(),
            })?;
    }

    groups
        .into_iter()
        .map(|(key, weights)| {
            let name = key.join(", ");
            if weights.iter().all(|&w| w == 0) {
                return Err(IngestError::ZeroTotal { group: name });
            }
            let distribution = OrderDistribution::from_count_vector(alphabet.len(), weights)
                .map_err(|e| IngestError::Group {
                    group: name,
                    message: e.to_string(),
                })?;
            let keys = selected
                .iter()
                .map(|&k| key_cols[k].clone())
                .zip(key)
                .collect();
            Ok(Group { keys, distribution })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ingest(text: &str) -> Result<Vec<Group>, IngestError> {
        ingest_reader(text.as_bytes(), &IngestConfig::default())
    }

    #[test]
    fn two_groups() {
        let g = ingest(
            "condition,order,count\nb,SOV,1\nb,SVO,2\na,SOV,3\na,OSV,1\nb,VSO,0\nb,VOS,1\na,OVS,2\na,VSO,5\n",
        )
        .unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].key("condition"), Some("a"));
        assert_eq!(g[0].distribution.total_frequency(), Some(11));
        assert_eq!(g[1].distribution.m(), 3);
    }

    #[test]
    fn diagnostics_name_rows() {
        let dup = ingest("g,order,count\na,SOV,1\na,SOV,2\n").unwrap_err();
        assert!(matches!(
            dup,
            IngestError::DuplicateOrder {
                row: 3,
                first_row: 2,
                ..
            }
        ));
        let bad = ingest("g,order,count\na,SOX,1\n").unwrap_err();
        assert!(matches!(bad, IngestError::InvalidOrder { row: 2, .. }));
        let neg = ingest("g,order,count\na,SOV,-1\n").unwrap_err();
        assert!(matches!(neg, IngestError::Malformed { row: 2, .. }));
        let zero = ingest("g,order,count\na,SOV,0\n").unwrap_err();
        assert!(matches!(zero, IngestError::ZeroTotal { .. }));
        assert!(matches!(
            ingest("g,count,order\n").unwrap_err(),
            IngestError::Header(_)
        ));
    }

    #[test]
    fn pooled_groups() {
        let cfg = IngestConfig {
            group_by: Some(vec!["lang".into()]),
            ..IngestConfig::default()
        };
        let g = ingest_reader(
            "cond,lang,order,count\nx,en,SOV,1\ny,en,SOV,2\nx,ru,SVO,1\n".as_bytes(),
            &cfg,
        )
        .unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].distribution.weights()[0], 3);
        assert_eq!(g[0].keys, vec![("lang".to_string(), "en".to_string())]);
    }
}
