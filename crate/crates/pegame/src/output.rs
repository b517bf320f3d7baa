//! Trajectory CSV and metrics JSON.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use pegame_core::sim::GameResult;
use serde::{Deserialize, Serialize};

use crate::Error;

pub const CSV_HEADER: [&str; 20] = [
    "f", "xp", "yp", "zp", "xpd", "ypd", "zpd", "xe", "ye", "ze", "xed", "yed", "zed", "upx", "upy", "upz", "uex",
    "uey", "uez", "dist",
];

pub const UNITS_LINE: &str =
    "# f: rad; positions: m (rho-scaled LVLH); velocities: m/rad; controls: m/s^2; dist: m (relative)";

/// Summary written next to each trajectory.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub captured: bool,
    pub delta_f: f64,
    pub final_distance_m: f64,
    pub min_distance_m: f64,
    pub cost: f64,
    pub steps: usize,
    pub strategy: String,
    pub seed: Option<u64>,
}

impl Metrics {
    pub fn new(r: &GameResult, seed: Option<u64>) -> Self {
        Self {
            captured: r.captured,
            delta_f: r.delta_f,
            final_distance_m: r.final_distance,
            min_distance_m: r.min_distance,
            cost: r.cost,
            steps: r.steps,
            strategy: r.strategy.name().to_string(),
            seed,
        }
    }
}

pub fn write_trajectory<W: Write>(mut w: W, r: &GameResult) -> Result<(), Error> {
    writeln!(w, "{UNITS_LINE}").map_err(|e| Error::Io("trajectory".into(), e))?;
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(CSV_HEADER)?;
    for s in &r.samples {
        let mut row = Vec::with_capacity(20);
        row.push(s.f);
        row.extend_from_slice(&s.pursuer.0);
        row.extend_from_slice(&s.evader.0);
        row.extend_from_slice(&s.u_p);
        row.extend_from_slice(&s.u_e);
        row.push(s.relative.distance());
        csv.write_record(row.iter().map(|v| format!("{v:e}")))?;
    }
    csv.flush().map_err(|e| Error::Io("trajectory".into(), e))?;
    Ok(())
}

pub fn write_metrics<W: Write>(w: W, m: &Metrics) -> Result<(), Error> {
    serde_json::to_writer_pretty(w, m)?;
    Ok(())
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::Io(path.display().to_string(), e))
}

/// Writes `<stem>.csv` and `<stem>.json` into `dir`, creating it if needed.
pub fn write_run(dir: &Path, stem: &str, r: &GameResult, seed: Option<u64>) -> Result<(PathBuf, PathBuf), Error> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(dir.display().to_string(), e))?;
    let csv = dir.join(format!("{stem}.csv"));
    let json = dir.join(format!("{stem}.json"));
    write_trajectory(create(&csv)?, r)?;
    let mut w = create(&json)?;
    write_metrics(&mut w, &Metrics::new(r, seed))?;
    w.write_all(b"\n").map_err(|e| Error::Io(json.display().to_string(), e))?;
    w.flush().map_err(|e| Error::Io(json.display().to_string(), e))?;
    Ok((csv, json))
}
