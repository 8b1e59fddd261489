//! Output sinks: JSON lines to stdout or a file, plus an optional CSV
//! summary file. Identical runs produce identical bytes, apart from the
//! `runtime_ms` field inside verification reports.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use alpha_index::conjecture::{ScanDirection, ScanRecord};
use alpha_index::spectral::SolverRoute;
use alpha_index::verify::VerificationReport;

/// One alpha-index evaluation of a single graph.
#[derive(Debug, Serialize)]
pub struct RhoLine {
    pub graph6: String,
    pub order: usize,
    pub alpha: f64,
    pub rho: f64,
    pub route: SolverRoute,
    pub iterations: usize,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perron: Option<Vec<f64>>,
}

pub struct Sink {
    out: Box<dyn Write>,
    csv: Option<CsvFile>,
}

struct CsvFile {
    writer: BufWriter<File>,
    header_done: bool,
}

impl Sink {
    pub fn new(output: Option<&Path>, csv: Option<&Path>) -> io::Result<Self> {
        let out: Box<dyn Write> = match output {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(io::stdout().lock()),
        };
        let csv = match csv {
            Some(path) => Some(CsvFile {
                writer: BufWriter::new(File::create(path)?),
                header_done: false,
            }),
            None => None,
        };
        Ok(Sink { out, csv })
    }

    /// Writes one value as a JSON line and returns the serialized text,
    /// so callers can reuse it for stderr notices.
    pub fn emit_json<T: Serialize>(&mut self, value: &T) -> io::Result<String> {
        let line = serde_json::to_string(value).expect("output types serialize");
        writeln!(self.out, "{line}")?;
        Ok(line)
    }

    /// Writes one plain text line to the primary output.
    pub fn emit_line(&mut self, line: &str) -> io::Result<()> {
        writeln!(self.out, "{line}")
    }

    /// Appends one CSV row, writing `header` first on the first call.
    pub fn emit_csv(&mut self, header: &str, row: &str) -> io::Result<()> {
        if let Some(csv) = &mut self.csv {
            if !csv.header_done {
                writeln!(csv.writer, "{header}")?;
                csv.header_done = true;
            }
            writeln!(csv.writer, "{row}")?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()?;
        if let Some(csv) = &mut self.csv {
            csv.writer.flush()?;
        }
        Ok(())
    }
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

pub const REPORT_CSV_HEADER: &str =
    "claim,instances_checked,violations,indeterminate,min_margin,extremal_witness,runtime_ms,parameters";

pub fn report_csv_row(report: &VerificationReport) -> String {
    let parameters = report
        .parameters
        .iter()
        .map(|(key, value)| format!("{key}={value}"))
        .collect::<Vec<_>>()
        .join(";");
    format!(
        "{},{},{},{},{},{},{},{}",
        csv_field(&report.claim),
        report.instances_checked,
        report.violations.len(),
        report.indeterminate.len(),
        report.min_margin.map(|m| m.to_string()).unwrap_or_default(),
        csv_field(report.extremal_witness.as_deref().unwrap_or("")),
        report.runtime_ms,
        csv_field(&parameters),
    )
}

pub const SCAN_CSV_HEADER: &str =
    "conjecture,base_graph,root_u,root_v,p,q,alpha,lhs,rhs,direction,proved_zone";

pub fn scan_csv_row(record: &ScanRecord) -> String {
    let direction = match record.direction {
        ScanDirection::Consistent => "consistent",
        ScanDirection::Reversed => "reversed",
        ScanDirection::Indeterminate => "indeterminate",
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        record.conjecture,
        csv_field(&record.base_graph),
        record.root_u,
        record.root_v.map(|v| v.to_string()).unwrap_or_default(),
        record.p,
        record.q,
        record.alpha,
        record.lhs,
        record.rhs,
        direction,
        record.proved_zone,
    )
}

pub const RHO_CSV_HEADER: &str = "graph6,order,alpha,rho,route,iterations,residual";

pub fn rho_csv_row(line: &RhoLine) -> String {
    let route = match line.route {
        SolverRoute::Power => "power",
        SolverRoute::JacobiFallback => "jacobi_fallback",
        SolverRoute::Jacobi => "jacobi",
    };
    format!(
        "{},{},{},{},{},{},{}",
        csv_field(&line.graph6),
        line.order,
        line.alpha,
        line.rho,
        route,
        line.iterations,
        line.residual,
    )
}
