use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// `# ` metadata lines opening every emitted file.
pub fn header(command: &str, config: &BTreeMap<String, String>) -> String {
    let mut s = format!("# cliquefactor {}\n# command: {command}\n", env!("CARGO_PKG_VERSION"));
    for (k, v) in config {
        let _ = writeln!(s, "# config: {k}={v}");
    }
    s
}

/// Writes `text` to `path`, or to standard output when no path is given.
pub fn write_text(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

pub const REPORT_COLUMNS: [&str; 13] = [
    "instance", "n", "r", "min_degree", "alpha", "mode", "covered", "weight", "weight_num", "weight_den", "factor", "wall_ms", "seed",
];

/// One CSV row per (instance, mode); rationals are `p/q` strings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportRow {
    pub instance: String,
    pub n: usize,
    pub r: usize,
    pub min_degree: Option<usize>,
    pub alpha: Option<usize>,
    pub mode: String,
    pub covered: Option<usize>,
    pub weight: Option<(String, String)>,
    pub factor: String,
    pub wall_ms: Option<u128>,
    pub seed: u64,
}

impl ReportRow {
    fn fields(&self) -> Vec<String> {
        let opt = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        let (num, den) = self.weight.clone().unwrap_or_else(|| ("-".into(), "-".into()));
        let weight = if num == "-" { "-".to_string() } else { format!("{num}/{den}") };
        vec![
            self.instance.clone(),
            self.n.to_string(),
            self.r.to_string(),
            opt(self.min_degree),
            opt(self.alpha),
            self.mode.clone(),
            opt(self.covered),
            weight,
            num,
            den,
            self.factor.clone(),
            self.wall_ms.map_or_else(|| "-".to_string(), |v| v.to_string()),
            self.seed.to_string(),
        ]
    }
}

pub fn csv_table(columns: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Input(format!("csv: {e}"));
    w.write_record(columns).map_err(fail)?;
    for row in rows {
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Input(e.to_string()))
}

pub fn report_csv(rows: &[ReportRow]) -> CliResult<String> {
    csv_table(&REPORT_COLUMNS, rows.iter().map(ReportRow::fields))
}

/// Plotting script for a CSV produced by `sweep` or `frac-vs-int`.
pub fn plot_script(csv_path: &str, x: &str, y: &str, group: &str) -> String {
    format!(
        "# cliquefactor {version}\n\
         import pandas as pd\n\
         import matplotlib.pyplot as plt\n\
         \n\
         df = pd.read_csv({csv_path:?}, comment=\"#\")\n\
         for key, part in df.groupby({group:?}):\n\
         \x20   plt.plot(part[{x:?}], pd.to_numeric(part[{y:?}], errors=\"coerce\"), marker=\"o\", label=str(key))\n\
         plt.xlabel({x:?})\n\
         plt.ylabel({y:?})\n\
         plt.legend()\n\
         plt.savefig({png:?})\n",
        version = env!("CARGO_PKG_VERSION"),
        png = format!("{csv_path}.png"),
    )
}
