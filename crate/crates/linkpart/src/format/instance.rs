use linkpart_core::geometry::{FatObject, GeometricInstance};
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    dimension: usize,
    beta: f64,
    seed: u64,
    objects: Vec<ObjectFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum ObjectFile {
    Ball { center: Vec<f64>, radius: f64 },
    Box { center: Vec<f64>, half_extents: Vec<f64> },
}

/// Pretty JSON with shortest round-trip decimals, so grid values are exact.
pub fn write_instance(inst: &GeometricInstance) -> String {
    let file = InstanceFile {
        dimension: inst.dimension,
        beta: inst.beta,
        seed: inst.seed,
        objects: inst
            .objects
            .iter()
            .map(|o| match o.clone() {
                FatObject::Ball { center, radius } => ObjectFile::Ball { center, radius },
                FatObject::Box { center, half_extents } => ObjectFile::Box { center, half_extents },
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("instance serializes");
    s.push('\n');
    s
}

/// Parses and validates dimensions and fatness.
pub fn parse_instance(text: &str) -> Result<GeometricInstance, FormatError> {
    let file: InstanceFile = serde_json::from_str(text).map_err(FormatError::json)?;
    let objects = file
        .objects
        .into_iter()
        .map(|o| match o {
            ObjectFile::Ball { center, radius } => FatObject::Ball { center, radius },
            ObjectFile::Box { center, half_extents } => FatObject::Box { center, half_extents },
        })
        .collect::<Vec<_>>();
    for (i, o) in objects.iter().enumerate() {
        if o.dimension() != file.dimension {
            return Err(FormatError::new(0, format!("object {i} has dimension {}, expected {}", o.dimension(), file.dimension)));
        }
    }
    let inst = GeometricInstance { dimension: file.dimension, beta: file.beta, objects, seed: file.seed };
    inst.validate().map_err(|e| FormatError::new(0, e.to_string()))?;
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkpart_core::geometry::generate_instance;

    #[test]
    fn round_trip_is_exact() {
        let inst = generate_instance(3, 2.5, 40, 9.0, 0.5, 4).unwrap();
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(write_instance(&back), text);
    }

    #[test]
    fn rejects_bad_objects() {
        let thin = r#"{"dimension":2,"beta":1.0,"seed":0,"objects":[{"type":"ball","center":[0,0],"radius":0.5}]}"#;
        assert!(parse_instance(thin).is_err());
        let mixed = r#"{"dimension":2,"beta":1.0,"seed":0,"objects":[{"type":"ball","center":[0],"radius":1}]}"#;
        assert!(parse_instance(mixed).is_err());
        let unknown = "{\n\"dimension\":2,\n\"beta\":1.0,\"seed\":0,\"objects\":[{\"type\":\"disk\"}]}";
        assert_eq!(parse_instance(unknown).unwrap_err().line, 3);
    }
}
