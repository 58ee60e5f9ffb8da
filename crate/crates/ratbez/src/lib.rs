//! File formats, the counterexample-family sweep, SVG plots and the
//! command-line front end for [`ratbez_core`].

pub mod cli;
pub mod curve_file;
mod error;
pub mod experiments;
pub mod format;
pub mod plot;
pub mod table_csv;

pub use error::{Error, Result};
pub use experiments::{run_table1, table1_row, Table1Row, TableConfig};
