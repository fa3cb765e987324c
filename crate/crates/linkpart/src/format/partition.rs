use linkpart_core::partition::Provenance;
use linkpart_core::{PartKind, Partition};
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionFile {
    parts: Vec<Vec<usize>>,
    kinds: Vec<String>,
}

fn kind_name(k: PartKind) -> String {
    match k {
        PartKind::Clique => "clique".into(),
        PartKind::Linked(c) => format!("linked:{c}"),
        PartKind::Raw => "raw".into(),
    }
}

fn parse_kind(s: &str) -> Option<PartKind> {
    match s {
        "clique" => Some(PartKind::Clique),
        "raw" => Some(PartKind::Raw),
        _ => s.strip_prefix("linked:")?.parse().ok().map(PartKind::Linked),
    }
}

pub fn write_partition(p: &Partition) -> String {
    let file = PartitionFile { parts: p.parts().to_vec(), kinds: p.kinds().iter().map(|&k| kind_name(k)).collect() };
    let mut s = serde_json::to_string(&file).expect("partition serializes");
    s.push('\n');
    s
}

/// Checks that the parts partition `0..n`; kind invariants need the graph ([`Partition::validate`]).
pub fn parse_partition(text: &str, n: usize) -> Result<Partition, FormatError> {
    let file: PartitionFile = serde_json::from_str(text).map_err(FormatError::json)?;
    let kinds = file
        .kinds
        .iter()
        .map(|k| parse_kind(k).ok_or_else(|| FormatError::new(0, format!("unknown part kind `{k}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(n, file.parts, kinds, Provenance::Manual).map_err(|e| FormatError::new(0, e.to_string()))
}
