use std::io::{self, Write};

use clap::ValueEnum;
use nilpath_core::ParityReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn emit(report: &ParityReport, format: Format) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Table => write_table(&mut out, report),
        Format::Json => {
            serde_json::to_writer(&mut out, report)?;
            writeln!(out)
        }
        Format::Csv => write_csv(out, report),
    }
}

fn write_table(out: &mut impl Write, report: &ParityReport) -> io::Result<()> {
    writeln!(out, "command:    {}", report.command)?;
    let params: Vec<String> = report
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    writeln!(out, "parameters: {}", params.join(" "))?;
    writeln!(out, "verdict:    {}", report.verdict)?;
    writeln!(out, "elapsed_ms: {:.3}", report.elapsed_ms)?;
    writeln!(out)?;

    let header = ["check", "expected", "observed", "source"];
    let rows: Vec<[&str; 4]> = report
        .details
        .iter()
        .map(|d| [&*d.check, &*d.expected, &*d.observed, &*d.source])
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut dyn Write, cells: [&str; 4], mark: &str| -> io::Result<()> {
        writeln!(
            out,
            "{mark} {:<w0$}  {:<w1$}  {:<w2$}  {}",
            cells[0],
            cells[1],
            cells[2],
            cells[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
        )
    };
    line(out, header, " ")?;
    for (row, d) in rows.into_iter().zip(&report.details) {
        line(out, row, if d.passed() { " " } else { "!" })?;
    }
    Ok(())
}

fn write_csv(out: impl Write, report: &ParityReport) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["check", "expected", "observed", "source"])?;
    for d in &report.details {
        w.write_record([&d.check, &d.expected, &d.observed, &d.source])?;
    }
    w.flush()
}
