use anyhow::Result;
use clap::Args;
use serde::Serialize;
use whitten::group::{gamma_order, Lattice, LatticeOptions};

use crate::output::{outln, print_json, Exit, Format};

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Number of components, 1 to 5.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub mu: u8,
    /// Count subgroups.
    #[arg(long)]
    pub subgroups: bool,
    /// Count conjugacy classes of subgroups.
    #[arg(long)]
    pub conjugacy: bool,
    /// Allow the multi-hour lattice for μ = 5.
    #[arg(long)]
    pub allow_long: bool,
    /// Print lattice progress to stderr.
    #[arg(long)]
    pub progress: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Serialize, Debug)]
pub struct GroupReport {
    pub mu: usize,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroups: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugacy_classes: Option<usize>,
}

pub fn lattice_counts(mu: usize, allow_long: bool, progress: bool) -> Result<(usize, usize)> {
    let opts = LatticeOptions {
        allow_long,
        progress,
        ..Default::default()
    };
    let lat = Lattice::compute(mu, &opts)?;
    let classes = lat.conjugacy_class_ids().into_iter().max().map_or(0, |m| m + 1);
    Ok((lat.len(), classes))
}

pub fn run(args: &GroupArgs) -> Result<()> {
    let mu = usize::from(args.mu);
    let (want_subs, want_classes) = if args.subgroups || args.conjugacy {
        (args.subgroups, args.conjugacy)
    } else {
        (true, true)
    };
    if mu == 5 && !args.allow_long {
        return Err(Exit::usage("the μ = 5 lattice takes hours; pass --allow-long"));
    }
    let mut report = GroupReport {
        mu,
        order: gamma_order(mu),
        subgroups: None,
        conjugacy_classes: None,
    };
    let (subs, classes) = lattice_counts(mu, args.allow_long, args.progress)?;
    if want_subs {
        report.subgroups = Some(subs);
    }
    if want_classes {
        report.conjugacy_classes = Some(classes);
    }
    match args.format {
        Format::Json => print_json(&report)?,
        Format::Text => {
            outln!("order {}", report.order);
            if let Some(n) = report.subgroups {
                outln!("subgroups {n}");
            }
            if let Some(n) = report.conjugacy_classes {
                outln!("conjugacy classes {n}");
            }
        }
        Format::Tsv => {
            outln!("mu\torder\tsubgroups\tconjugacy_classes");
            let opt = |o: Option<usize>| o.map_or(String::new(), |n| n.to_string());
            outln!("{}\t{}\t{}\t{}", mu, report.order, opt(report.subgroups), opt(report.conjugacy_classes));
        }
    }
    Ok(())
}
