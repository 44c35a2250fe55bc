//! CSV artifact writers and the JSON run manifest.
//!
//! Every run writes its data as plain CSV plus a manifest holding the
//! fully resolved configuration, so a run can be replayed bit-exactly
//! from the manifest alone. Floats are formatted with Rust's shortest
//! round-trip representation, which makes byte comparison of replayed
//! files meaningful.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::asymptotics::ConvergenceRow;
use crate::ensemble::CdfValue;
use crate::error::Result;
use crate::growth::SampleBatch;
use crate::tw::TwValue;

/// Fully resolved description of one run: enough to reproduce every
/// output byte for byte.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub command: String,
    pub config: Value,
    pub outputs: Vec<String>,
}

impl Manifest {
    pub fn new(command: &str, config: Value, outputs: Vec<String>) -> Self {
        Manifest {
            command: command.to_string(),
            config,
            outputs,
        }
    }

    /// Manifest path conventionally paired with an output file.
    pub fn path_for(out: &Path) -> std::path::PathBuf {
        let mut s = out.as_os_str().to_owned();
        s.push(".manifest.json");
        s.into()
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut w, self)?;
        w.write_all(b"\n")?;
        w.flush()?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Ok(serde_json::from_reader(File::open(path)?)?)
    }
}

pub fn write_samples_csv(path: &Path, batch: &SampleBatch) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "sample_index,raw,rescaled")?;
    for (i, (&raw, &resc)) in batch.raw.iter().zip(&batch.rescaled).enumerate() {
        writeln!(w, "{i},{raw},{resc}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_cdf_csv(path: &Path, rows: &[CdfValue]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "t,p,err,method")?;
    for r in rows {
        writeln!(w, "{},{},{},{}", r.t, r.p, r.err, r.method)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_tw_csv(path: &Path, rows: &[TwValue]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "s,F,method,est_err")?;
    for r in rows {
        writeln!(w, "{},{},{},{}", r.s, r.f, r.method, r.est_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_convergence_csv(path: &Path, rows: &[ConvergenceRow]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "N,sup_dist,grid_lo,grid_hi")?;
    for r in rows {
        writeln!(w, "{},{},{},{}", r.n, r.sup_dist, r.grid_lo, r.grid_hi)?;
    }
    w.flush()?;
    Ok(())
}
