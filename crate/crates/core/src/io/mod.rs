//! Reading frequency tables and rendering reports.

mod dot;
mod ingest;
mod report;

pub use dot::{hasse_dot, permutohedron_dot};
pub use ingest::{ingest_csv, ingest_reader, Group, IngestConfig, IngestError};
pub use report::{
    ensemble_json, ensemble_table, exact_json, parse_exact_json, report_json, report_table,
    RenderOptions, ReportRow,
};
