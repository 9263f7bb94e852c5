//! CSV rendering of scan tables and the matching plot scripts.

use primezeta::{Method, ScanTable};

pub const CSV_HEADER: [&str; 5] = ["t_or_s", "method", "re", "im", "abs_diff_vs_reference"];

/// 15 significant digits in scientific notation.
pub fn format_number(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.14e}")
    }
}

fn optional(v: Option<f64>) -> String {
    v.map_or_else(|| "nan".to_string(), format_number)
}

/// One record per (sample, method), in scan order.
pub fn render_scan_csv(table: &ScanTable) -> csv::Result<Vec<u8>> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    writer.write_record(CSV_HEADER)?;
    for row in &table.rows {
        let abscissa = format_number(row.abscissa);
        for sample in &row.samples {
            writer.write_record([
                abscissa.as_str(),
                sample.method.as_str(),
                &optional(sample.value.map(|v| v.re)),
                &optional(sample.value.map(|v| v.im)),
                &optional(sample.diff_vs_reference),
            ])?;
        }
    }
    writer.into_inner().map_err(|e| e.into_error().into())
}

#[derive(Debug, Clone, Copy)]
pub enum Component {
    Re,
    Im,
}

/// A standalone matplotlib script that reads `csv_name` from its own directory.
pub fn plot_script(
    csv_name: &str,
    title: &str,
    x_label: &str,
    component: Component,
    methods: &[Method],
) -> String {
    let column = match component {
        Component::Re => "re",
        Component::Im => "im",
    };
    let y_label = match component {
        Component::Re => "Re P(s)",
        Component::Im => "Im P(s)",
    };
    let methods = methods
        .iter()
        .map(|m| format!("\"{}\"", m.as_str()))
        .collect::<Vec<_>>()
        .join(", ");
    format!(
        r#"#!/usr/bin/env python3
# Generated by primezeta. Reads {csv_name} from this script's directory.
import csv
from pathlib import Path

import matplotlib.pyplot as plt

data = {{}}
with open(Path(__file__).with_name("{csv_name}"), newline="") as fh:
    for row in csv.DictReader(fh):
        xs, ys = data.setdefault(row["method"], ([], []))
        xs.append(float(row["t_or_s"]))
        ys.append(float(row["{column}"]))

fig, ax = plt.subplots(figsize=(10, 5))
for method in [{methods}]:
    if method in data:
        ax.plot(*data[method], label=method, linewidth=1)
ax.set_xlabel("{x_label}")
ax.set_ylabel("{y_label}")
ax.set_title("{title}")
ax.legend()
ax.grid(True, alpha=0.3)
fig.savefig(Path(__file__).with_suffix(".png"), dpi=150, bbox_inches="tight")
"#
    )
}
