use std::collections::BTreeMap;

use anyhow::Result;
use clap::Args;
use rayon::prelude::*;
use whitten::census::{parse_rolfsen, Census, LinkRecord};
use whitten::group::{
    enumerate_gamma, gamma_order, identify_group, match_named_subgroup_2, Named2, Subgroup,
};
use whitten::sym_filter::{FilterOptions, FilterReport, Verdict};

use crate::expected;
use crate::group::lattice_counts;
use crate::output::{Exit, Format, Table};

const TABLES: [u8; 7] = [2, 3, 6, 8, 9, 10, 11];

#[derive(Args, Debug)]
pub struct TableArgs {
    /// One of 2, 3, 6, 8, 9, 10, 11.
    #[arg(value_parser = parse_which)]
    pub which: u8,
    /// Compare with the embedded reference values; exit 5 on any mismatch.
    #[arg(long)]
    pub diff: bool,
    /// Also run the invariant filter (tables 8, 10, 11) and compare Σ′ with Σ.
    #[arg(long)]
    pub filter: bool,
    /// Use the satellite stage when filtering.
    #[arg(long)]
    pub satellites: bool,
    /// Include μ = 5 in table 2.
    #[arg(long)]
    pub allow_long: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn parse_which(s: &str) -> std::result::Result<u8, String> {
    let n: u8 = s.parse().map_err(|_| format!("`{s}` is not a table number"))?;
    if TABLES.contains(&n) {
        Ok(n)
    } else {
        Err(format!("table {n} is not available; choose one of 2, 3, 6, 8, 9, 10, 11"))
    }
}

fn sort_key(r: &LinkRecord) -> (usize, usize, usize) {
    parse_rolfsen(&r.rolfsen).map_or((usize::MAX, 0, 0), |(c, mu, k)| (c, mu, k))
}

fn prime_links(census: &Census, mu: usize) -> Vec<&LinkRecord> {
    let mut v: Vec<&LinkRecord> = census.records.iter().filter(|r| r.mu == mu && r.crossings > 0).collect();
    v.sort_by_key(|r| sort_key(r));
    v
}

/// Smallest sorted index list over all conjugates; equal iff conjugate.
fn conjugacy_key(h: &Subgroup, all: &[whitten::WhittenElement]) -> Vec<usize> {
    all.iter()
        .map(|g| {
            let c = h.conjugate(g).expect("conjugate");
            let mut idx: Vec<usize> = c.elements().iter().map(|e| e.index()).collect();
            idx.sort_unstable();
            idx
        })
        .min()
        .unwrap_or_default()
}

fn realized_classes(census: &Census, mu: usize) -> Result<usize> {
    let all = enumerate_gamma(mu)?;
    let keys: Result<Vec<Vec<usize>>> = prime_links(census, mu)
        .par_iter()
        .map(|r| Ok(conjugacy_key(&r.sigma()?, &all)))
        .collect();
    let mut keys = keys?;
    keys.sort();
    keys.dedup();
    Ok(keys.len())
}

fn table2(census: &Census, allow_long: bool) -> Result<Table> {
    let mut t = Table::new(
        "Subgroups of the Whitten group",
        &["mu", "order", "subgroups", "conjugacy classes", "realized (<= 8 crossings)"],
    );
    for &(mu, order, subs, classes, realized) in &expected::GROUPS {
        if mu == 5 && !allow_long {
            continue;
        }
        let (s, c) = lattice_counts(mu, allow_long, false)?;
        let r = if mu == 1 { None } else { Some(realized_classes(census, mu)?) };
        t.check(format!("mu={mu} order"), gamma_order(mu), order);
        t.check(format!("mu={mu} subgroups"), s, subs);
        t.check(format!("mu={mu} classes"), c, classes);
        if let Some(r) = r {
            t.check(format!("mu={mu} realized"), r, realized);
        }
        t.push(vec![
            mu.to_string(),
            gamma_order(mu).to_string(),
            s.to_string(),
            c.to_string(),
            r.map_or("-".into(), |r| r.to_string()),
        ]);
    }
    Ok(t)
}

fn table3(census: &Census) -> Result<Table> {
    let mut t = Table::new(
        "Link types by components and crossings (U: unoriented, OS: oriented and labeled)",
        &["crossings", "2-U", "2-OS", "3-U", "3-OS", "4-U", "4-OS", "all-U", "all-OS"],
    );
    for &(cr, want) in &expected::LINK_TYPES {
        let mut row = vec![cr.to_string()];
        let (mut all_u, mut all_os) = (0, 0);
        for (k, mu) in (2..=4).enumerate() {
            let u = census.cell(cr, mu).count();
            let got = if u == 0 { None } else { Some((u, census.count_link_types(cr, mu)?)) };
            t.check(format!("({cr},{mu})"), fmt_cell(got), fmt_cell(want[k]));
            if let Some((u, os)) = got {
                all_u += u;
                all_os += os;
                row.push(u.to_string());
                row.push(os.to_string());
            } else {
                row.push(String::new());
                row.push(String::new());
            }
        }
        row.push(all_u.to_string());
        row.push(all_os.to_string());
        t.push(row);
    }
    Ok(t)
}

fn fmt_cell(c: Option<(usize, usize)>) -> String {
    c.map_or("empty".into(), |(u, os)| format!("{u} U / {os} OS"))
}

fn table6() -> Result<Table> {
    let mut t = Table::new(
        "Named symmetry groups of two-component links",
        &["name", "order", "isomorphic to", "elements"],
    );
    for (n, &(name, order, iso)) in Named2::CATALOG.iter().zip(&expected::NAMED) {
        let h = n.subgroup().expect("catalog group");
        let label = identify_group(&h).to_string();
        t.check(format!("{n} name"), n.as_str(), name);
        t.check(format!("{n} order"), h.order(), order);
        t.check(format!("{n} isomorphism"), &label, iso);
        let els: Vec<String> = h.elements().iter().map(|g| g.to_string()).collect();
        t.push(vec![n.to_string(), h.order().to_string(), label, els.join(" ")]);
    }
    Ok(t)
}

fn named(h: &Subgroup) -> String {
    let m = match_named_subgroup_2(h);
    if m.conjugate {
        format!("~{}", m.name)
    } else {
        m.name.to_string()
    }
}

fn run_filter(records: &[&LinkRecord], census: &Census, satellites: bool) -> Result<Vec<FilterReport>> {
    let opts = FilterOptions::with_satellites(satellites);
    Ok(records
        .par_iter()
        .map(|r| census.compare_to_truth(&r.rolfsen, &opts))
        .collect::<whitten::Result<Vec<_>>>()?)
}

fn verdict_cell(v: Option<Verdict>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

fn table8(census: &Census, args: &TableArgs) -> Result<Table> {
    let links = prime_links(census, 2);
    let mut cols = vec!["link", "thistlethwaite", "group"];
    if args.filter {
        cols.extend(["filter", "verdict"]);
    }
    let mut t = Table::new("Symmetry group of each two-component link", &cols);
    let reports = if args.filter { Some(run_filter(&links, census, args.satellites)?) } else { None };
    let want: BTreeMap<&str, (&str, &str)> =
        expected::TWO_COMPONENT.iter().map(|&(l, th, g)| (l, (th, g))).collect();
    t.check("row count", links.len(), want.len());
    for (i, r) in links.iter().enumerate() {
        let name = named(&r.sigma()?);
        match want.get(r.rolfsen.as_str()) {
            Some(&(th, g)) => {
                t.check(format!("{} thistlethwaite", r.rolfsen), &r.thistlethwaite, th);
                t.check(format!("{} group", r.rolfsen), &name, g);
            }
            None => t.mismatches.push(format!("{} is not in the reference table", r.rolfsen)),
        }
        let mut row = vec![r.rolfsen.clone(), r.thistlethwaite.clone(), name.clone()];
        if let Some(reps) = &reports {
            let rep = &reps[i];
            let f = named(&rep.sigma_prime);
            if rep.verdict != Some(Verdict::Equal) {
                t.mismatches.push(format!("{} filter gives {f}: {}", r.rolfsen, verdict_cell(rep.verdict)));
            }
            row.push(f);
            row.push(verdict_cell(rep.verdict));
        }
        t.push(row);
    }
    Ok(t)
}

fn table9(census: &Census) -> Result<Table> {
    let mut t = Table::new("Two-component links by symmetry group", &["group", "links"]);
    let mut got: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut records: Vec<&LinkRecord> = census.records.iter().filter(|r| r.mu == 2).collect();
    records.sort_by_key(|r| sort_key(r));
    for r in records {
        got.entry(named(&r.sigma()?)).or_default().push(r.rolfsen.clone());
    }
    let mut want: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    want.insert("Gamma2", vec!["0^2_1"]);
    for &(l, _, g) in &expected::TWO_COMPONENT {
        want.entry(g).or_default().push(l);
    }
    for n in Named2::CATALOG {
        let links = got.remove(n.as_str()).unwrap_or_default();
        let w = want.get(n.as_str()).map(|v| v.join(" ")).unwrap_or_default();
        t.check(n, links.join(" "), w);
        t.push(vec![n.to_string(), if links.is_empty() { "none".into() } else { links.join(" ") }]);
    }
    for (n, links) in got {
        t.mismatches.push(format!("{n}: unexpected group for {}", links.join(" ")));
        t.push(vec![n, links.join(" ")]);
    }
    Ok(t)
}

fn table_multi(census: &Census, args: &TableArgs, mu: usize) -> Result<Table> {
    let reference: &[(&str, &str, usize, &str)] =
        if mu == 3 { &expected::THREE_COMPONENT } else { &expected::FOUR_COMPONENT };
    let links = prime_links(census, mu);
    let mut cols = vec!["link", "thistlethwaite", "order", "isomorphic to", "generators"];
    if args.filter {
        cols.extend(["filter order", "verdict"]);
    }
    let title = format!("Symmetry groups of {}-component links", if mu == 3 { "three" } else { "four" });
    let mut t = Table::new(title, &cols);
    let reports = if args.filter { Some(run_filter(&links, census, args.satellites)?) } else { None };
    let want: BTreeMap<&str, (&str, usize, &str)> =
        reference.iter().map(|&(l, th, o, iso)| (l, (th, o, iso))).collect();
    t.check("row count", links.len(), want.len());
    for (i, r) in links.iter().enumerate() {
        let s = r.sigma()?;
        let iso = identify_group(&s).to_string();
        match want.get(r.rolfsen.as_str()) {
            Some(&(th, o, w)) => {
                t.check(format!("{} thistlethwaite", r.rolfsen), &r.thistlethwaite, th);
                t.check(format!("{} order", r.rolfsen), s.order(), o);
                t.check(format!("{} isomorphism", r.rolfsen), &iso, w);
            }
            None => t.mismatches.push(format!("{} is not in the reference table", r.rolfsen)),
        }
        let mut row = vec![
            r.rolfsen.clone(),
            r.thistlethwaite.clone(),
            s.order().to_string(),
            iso,
            r.sigma_generators.join(" "),
        ];
        if let Some(reps) = &reports {
            let rep = &reps[i];
            if rep.verdict != Some(Verdict::Equal) {
                t.mismatches.push(format!(
                    "{} filter order {}: {}",
                    r.rolfsen,
                    rep.sigma_prime.order(),
                    verdict_cell(rep.verdict)
                ));
            }
            row.push(rep.sigma_prime.order().to_string());
            row.push(verdict_cell(rep.verdict));
        }
        t.push(row);
    }
    Ok(t)
}

pub fn build(census: &Census, args: &TableArgs) -> Result<Table> {
    if args.filter && ![8, 10, 11].contains(&args.which) {
        return Err(Exit::usage("--filter applies to tables 8, 10 and 11"));
    }
    match args.which {
        2 => table2(census, args.allow_long),
        3 => table3(census),
        6 => table6(),
        8 => table8(census, args),
        9 => table9(census),
        10 => table_multi(census, args, 3),
        11 => table_multi(census, args, 4),
        n => Err(Exit::usage(format!("no table {n}"))),
    }
}

pub fn run(census: &Census, args: &TableArgs) -> Result<()> {
    let t = build(census, args)?;
    crate::output::emit(&t.render(args.format, args.diff));
    if args.diff && !t.mismatches.is_empty() {
        return Err(Exit::mismatch(format!("table {}: {} mismatch(es)", args.which, t.mismatches.len())));
    }
    Ok(())
}
