use anyhow::Result;
use clap::{Args, Subcommand};
use serde::Serialize;
use whitten::census::Census;

use crate::output::{outln, print_json, Exit, Format, Table};

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[command(subcommand)]
    pub action: CensusAction,
}

#[derive(Subcommand, Debug)]
pub enum CensusAction {
    /// Check every record: names, counts, matrices, groups and polynomials.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the records.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Serialize)]
struct VerifyReport {
    records: usize,
    pass: bool,
    problems: Vec<String>,
}

pub fn run(census: &Census, args: &CensusArgs) -> Result<()> {
    match &args.action {
        CensusAction::Verify { format } => {
            let problems = census.verify();
            let report = VerifyReport {
                records: census.records.len(),
                pass: problems.is_empty(),
                problems,
            };
            match format {
                Format::Json => print_json(&report)?,
                Format::Text | Format::Tsv => {
                    for p in &report.problems {
                        outln!("{p}");
                    }
                    outln!(
                        "{} records, {} problem(s)",
                        report.records,
                        report.problems.len()
                    );
                }
            }
            if !report.pass {
                return Err(Exit::mismatch("census verification failed"));
            }
        }
        CensusAction::List { format } => {
            let mut t = Table::new(
                "Census",
                &["link", "thistlethwaite", "mu", "crossings", "alternating", "order", "calibration"],
            );
            for r in &census.records {
                t.push(vec![
                    r.rolfsen.clone(),
                    r.thistlethwaite.clone(),
                    r.mu.to_string(),
                    r.crossings.to_string(),
                    r.alternating.to_string(),
                    r.sigma_order.to_string(),
                    r.calibration.element()?.to_string(),
                ]);
            }
            crate::output::emit(&t.render(*format, false));
        }
    }
    Ok(())
}
