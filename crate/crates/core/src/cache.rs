//! On-disk memo of f-vectors, keyed by tuple and period.
//!
//! Entries are plain JSON. A stored vector is only used after it passes the
//! same validation as [`FVector::from_coeffs`]; anything unreadable or
//! inconsistent is recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::partition::{f_vector, FVector, TupleSpec};

#[derive(Serialize, Deserialize)]
struct Entry {
    tuple: Vec<u64>,
    period: u64,
    f: Vec<String>,
}

/// File that holds the f-vector of `spec` under `dir`.
pub fn entry_path(dir: &Path, spec: &TupleSpec) -> PathBuf {
    let parts: Vec<String> = spec.parts().iter().map(u64::to_string).collect();
    dir.join(format!("f_{}_D{}.json", parts.join("-"), spec.period()))
}

fn load(path: &Path, spec: &TupleSpec) -> Option<FVector> {
    let entry: Entry = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if entry.tuple != spec.parts() || entry.period != spec.period() {
        return None;
    }
    let f = entry.f.iter().map(|s| s.parse::<BigInt>().ok()).collect::<Option<Vec<_>>>()?;
    FVector::from_coeffs(spec, f).ok()
}

fn store(path: &Path, fv: &FVector) -> std::io::Result<()> {
    let entry = Entry {
        tuple: fv.spec().parts().to_vec(),
        period: fv.spec().period(),
        f: fv.coeffs().iter().map(BigInt::to_string).collect(),
    };
    fs::create_dir_all(path.parent().unwrap_or(Path::new(".")))?;
    fs::write(path, serde_json::to_string(&entry).expect("plain data"))
}

/// The f-vector of `spec`, read from `dir` when a valid entry exists and
/// written back otherwise. Write failures are ignored: the cache is only an
/// optimization.
pub fn cached_f_vector(dir: Option<&Path>, spec: &TupleSpec) -> FVector {
    let Some(dir) = dir else {
        return f_vector(spec);
    };
    let path = entry_path(dir, spec);
    if let Some(fv) = load(&path, spec) {
        return fv;
    }
    let fv = f_vector(spec);
    let _ = store(&path, &fv);
    fv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_rejects_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let spec = TupleSpec::new(&[2, 3]).unwrap();
        let fresh = cached_f_vector(Some(dir.path()), &spec);
        let path = entry_path(dir.path(), &spec);
        assert!(path.exists());
        assert_eq!(cached_f_vector(Some(dir.path()), &spec), fresh);

        // a tampered entry must not be trusted
        fs::write(&path, r#"{"tuple":[2,3],"period":6,"f":["1","1","1","1","1","1","1","1"]}"#).unwrap();
        assert!(load(&path, &spec).is_none());
        assert_eq!(cached_f_vector(Some(dir.path()), &spec), fresh);
        assert!(load(&path, &spec).is_some());
    }

    #[test]
    fn keyed_by_period() {
        let dir = tempfile::tempdir().unwrap();
        let a = TupleSpec::new(&[2, 3]).unwrap();
        let b = TupleSpec::with_period(&[2, 3], Some(12)).unwrap();
        assert_ne!(entry_path(dir.path(), &a), entry_path(dir.path(), &b));
        assert_eq!(cached_f_vector(Some(dir.path()), &b).coeffs().len(), 20);
    }
}
