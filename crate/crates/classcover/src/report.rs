//! Report emission. Report bodies are deterministic; the wall-clock time
//! and the resolved configuration go to a `.meta.json` sidecar.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::Serialize;

use crate::config::RunConfig;

/// A finished report: CSV rows or one JSON value.
pub enum Report {
    Csv { header: Vec<&'static str>, rows: Vec<Vec<String>> },
    Json(serde_json::Value),
}

impl Report {
    pub fn render(&self) -> anyhow::Result<Vec<u8>> {
        match self {
            Report::Csv { header, rows } => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(header)?;
                for r in rows {
                    w.write_record(r)?;
                }
                Ok(w.into_inner().map_err(|e| anyhow::anyhow!("{e}"))?)
            }
            Report::Json(v) => {
                let mut out = serde_json::to_vec_pretty(v)?;
                out.push(b'\n');
                Ok(out)
            }
        }
    }
}

#[derive(Serialize)]
struct Meta<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a [String],
    config: &'a RunConfig,
    unix_time: u64,
    report_sha256: String,
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

/// Writes to `cfg.out` (plus sidecar) or standard output.
pub fn emit(report: &Report, cfg: &RunConfig, argv: &[String]) -> anyhow::Result<()> {
    let bytes = report.render()?;
    match &cfg.out {
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(&bytes)?;
            so.flush()?;
        }
        Some(path) => {
            std::fs::write(path, &bytes).with_context(|| format!("writing {}", path.display()))?;
            let meta = Meta {
                tool: env!("CARGO_PKG_NAME"),
                version: env!("CARGO_PKG_VERSION"),
                command: argv,
                config: cfg,
                unix_time: std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
                report_sha256: crate::cache::hex_sha256(&bytes),
            };
            let side = sidecar_path(path);
            std::fs::write(&side, serde_json::to_vec_pretty(&meta)?)
                .with_context(|| format!("writing {}", side.display()))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_commas() {
        let r = Report::Csv {
            header: vec!["group", "class_rep"],
            rows: vec![vec!["A_5".into(), "(1,2)".into()]],
        };
        assert_eq!(String::from_utf8(r.render().unwrap()).unwrap(), "group,class_rep\nA_5,\"(1,2)\"\n");
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(sidecar_path(Path::new("/tmp/x.csv")), PathBuf::from("/tmp/x.csv.meta.json"));
    }
}
