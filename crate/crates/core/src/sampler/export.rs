//! CSV and JSON export of sample batches.

use super::ensemble::{SampleBatch, PAIRING_TOL};
use super::sphere::to_sphere;
use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchMetadata {
    pub version: String,
    pub seed: u64,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: f64,
    #[serde(rename = "L")]
    pub l: f64,
    pub r1: f64,
    pub r2: f64,
    pub trials: usize,
    pub pairing_tol: f64,
}

impl BatchMetadata {
    pub fn of(batch: &SampleBatch) -> Self {
        let d = batch.params.droplet();
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: batch.seed,
            big_n: batch.params.big_n,
            n: batch.params.n,
            l: batch.params.l,
            r1: d.r1,
            r2: d.r2,
            trials: batch.trials,
            pairing_tol: PAIRING_TOL,
        }
    }
}

/// Seventeen significant digits, exact on round trip.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV writer whose first line is `# {metadata json}`.
pub fn csv_with_header<T: Serialize>(path: &Path, meta: &T) -> Result<csv::Writer<BufWriter<File>>> {
    let mut f = BufWriter::new(File::create(path)?);
    writeln!(f, "# {}", serde_json::to_string(meta)?)?;
    Ok(csv::Writer::from_writer(f))
}

/// Writes `(trial, re, im)` rows, plus `(theta, phi)` when `sphere` is set, and a JSON sidecar.
pub fn write_batch(batch: &SampleBatch, csv_path: &Path, meta_path: &Path, sphere: bool) -> Result<()> {
    let meta = BatchMetadata::of(batch);
    let mut w = csv_with_header(csv_path, &meta)?;
    if sphere {
        w.write_record(["trial", "re", "im", "theta", "phi"])?;
    } else {
        w.write_record(["trial", "re", "im"])?;
    }
    for (t, pts) in batch.eigen_pairs.iter().enumerate() {
        for z in pts {
            let mut rec = vec![t.to_string(), fmt_f64(z.re), fmt_f64(z.im)];
            if sphere {
                let s = to_sphere(*z);
                rec.push(fmt_f64(s.theta));
                rec.push(fmt_f64(s.phi));
            }
            w.write_record(&rec)?;
        }
    }
    w.flush()?;
    std::fs::write(meta_path, serde_json::to_string_pretty(&meta)? + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::EnsembleParams;
    use crate::sampler::ensemble::sample_ensemble;

    #[test]
    fn round_trip_and_reproducible() {
        let e = EnsembleParams::new(3, 5.0, 1.0).unwrap();
        let b = sample_ensemble(&e, 4, 9).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let (c1, m1, c2) = (dir.path().join("a.csv"), dir.path().join("a.json"), dir.path().join("b.csv"));
        write_batch(&b, &c1, &m1, true).unwrap();
        write_batch(&b, &c2, &m1, true).unwrap();
        let text = std::fs::read_to_string(&c1).unwrap();
        assert_eq!(text, std::fs::read_to_string(&c2).unwrap());
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("# {\"version\""));
        assert_eq!(lines.next().unwrap(), "trial,re,im,theta,phi");
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first[1].parse::<f64>().unwrap(), b.eigen_pairs[0][0].re);
        assert_eq!(text.lines().count(), 2 + 12);
        let meta: BatchMetadata = serde_json::from_str(&std::fs::read_to_string(&m1).unwrap()).unwrap();
        assert_eq!(meta.seed, 9);
    }
}
