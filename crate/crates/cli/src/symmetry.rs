use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use serde::Serialize;
use whitten::census::Census;
use whitten::diagram::parse_pd;
use whitten::group::{identify_group, match_named_subgroup_2, Subgroup};
use whitten::sym_filter::{sigma_prime, FilterOptions, FilterReport, Verdict};

use crate::output::{outln, print_json, Exit, Format};

#[derive(Args, Debug)]
pub struct SymmetryArgs {
    /// Census link, e.g. `7^2_5`, `7²₅` or `L7a2`.
    #[arg(required_unless_present_any = ["pd", "pd_file"], conflicts_with_all = ["pd", "pd_file"])]
    pub link: Option<String>,
    /// PD code given inline, e.g. `X[1,3,2,4], X[3,1,4,2]`.
    #[arg(long, conflicts_with = "pd_file")]
    pub pd: Option<String>,
    /// PD code read from a file.
    #[arg(long)]
    pub pd_file: Option<PathBuf>,
    /// Add the clasped 2-cable stage.
    #[arg(long)]
    pub satellites: bool,
    /// Compare with the census ground truth.
    #[arg(long)]
    pub compare: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Serialize, Debug)]
pub struct SymmetryReport {
    pub link: Option<String>,
    pub mu: usize,
    pub satellites: bool,
    pub order: usize,
    pub coset_index: usize,
    pub isomorphism: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub generators: Vec<String>,
    pub filter: FilterReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truth: Option<Truth>,
}

#[derive(Serialize, Debug)]
pub struct Truth {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub verdict: Verdict,
}

fn name_of(h: &Subgroup) -> Option<String> {
    (h.mu() == 2).then(|| {
        let m = match_named_subgroup_2(h);
        if m.conjugate {
            format!("conjugate of {}", m.name)
        } else {
            m.name.to_string()
        }
    })
}

pub fn report(census: &Census, args: &SymmetryArgs) -> Result<SymmetryReport> {
    let opts = FilterOptions::with_satellites(args.satellites);
    let (link, diagram) = match (&args.link, &args.pd, &args.pd_file) {
        (Some(name), _, _) => {
            let r = census.get(name)?;
            (Some(r.rolfsen.clone()), r.diagram()?)
        }
        (_, Some(text), _) => (None, parse_pd(text)?),
        (_, _, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            (None, parse_pd(&text)?)
        }
        _ => return Err(Exit::usage("give a link name, --pd or --pd-file")),
    };
    if args.compare && link.is_none() {
        return Err(Exit::usage("--compare needs a census link"));
    }
    let mut filter = sigma_prime(&diagram, &opts)?;
    filter.name = link.clone();
    let truth = match (&link, args.compare) {
        (Some(name), true) => {
            let s = census.ground_truth_sigma(name)?;
            let verdict = filter.compare(&s);
            Some(Truth {
                order: s.order(),
                name: name_of(&s),
                verdict,
            })
        }
        _ => None,
    };
    let h = &filter.sigma_prime;
    Ok(SymmetryReport {
        link,
        mu: filter.mu,
        satellites: args.satellites,
        order: h.order(),
        coset_index: h.coset_index(),
        isomorphism: identify_group(h).to_string(),
        name: name_of(h),
        generators: h.small_generating_set().iter().map(|g| g.to_string()).collect(),
        truth,
        filter,
    })
}

pub fn run(census: &Census, args: &SymmetryArgs) -> Result<()> {
    let r = report(census, args)?;
    match args.format {
        Format::Json => print_json(&r)?,
        Format::Text => {
            if let Some(l) = &r.link {
                outln!("link {l}");
            }
            outln!("components {}", r.mu);
            let stages: Vec<String> =
                r.filter.stages.iter().map(|s| format!("{} {}", s.stage, s.remaining)).collect();
            outln!("stages {}", stages.join(" -> "));
            outln!("order {}", r.order);
            outln!("cosets {}", r.coset_index);
            if let Some(n) = &r.name {
                outln!("name {n}");
            }
            outln!("isomorphic to {}", r.isomorphism);
            outln!("generators {}", r.generators.join(" "));
            if !r.filter.closed {
                outln!("warning: surviving set was not closed; reporting a maximal subgroup inside it");
            }
            if !r.filter.retained_on_limit.is_empty() {
                outln!("retained on resource limit {}", r.filter.retained_on_limit.len());
            }
            if let Some(t) = &r.truth {
                let name = t.name.as_deref().map(|n| format!(" {n}")).unwrap_or_default();
                outln!("ground truth order {}{name}", t.order);
                outln!("verdict {}", t.verdict);
            }
        }
        Format::Tsv => {
            outln!("link\tmu\torder\tcosets\tisomorphism\tname\tverdict");
            outln!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.link.as_deref().unwrap_or("-"),
                r.mu,
                r.order,
                r.coset_index,
                r.isomorphism,
                r.name.as_deref().unwrap_or(""),
                r.truth.as_ref().map(|t| t.verdict.to_string()).unwrap_or_default()
            );
        }
    }
    if !r.filter.retained_on_limit.is_empty() {
        return Err(Exit {
            code: 4,
            message: format!(
                "{} element(s) kept because an invariant hit a resource limit",
                r.filter.retained_on_limit.len()
            ),
        }
        .into());
    }
    if matches!(r.truth.as_ref().map(|t| t.verdict), Some(Verdict::NotContaining)) {
        return Err(Exit::mismatch("Σ′ misses a ground-truth symmetry"));
    }
    Ok(())
}
