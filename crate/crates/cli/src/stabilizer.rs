use anyhow::Result;
use clap::Args;
use serde::Serialize;
use whitten::group::identify_group;
use whitten::linkmat::{
    classify_triple, stabilizer_bruteforce, stabilizer_structured_3, stabilizer_structured_4, LinkingMatrix, Quad4,
    QuadType, Triple,
};

use crate::output::{outln, print_json, Exit, Format};

#[derive(Args, Debug)]
pub struct StabilizerArgs {
    #[command(flatten)]
    pub input: StabilizerInput,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct StabilizerInput {
    /// Linking numbers z1,z2,z3 of a three-component link.
    #[arg(long, allow_hyphen_values = true)]
    pub triple: Option<String>,
    /// Linking numbers z1,z2,z3,z4 of a four-component link in the quad layout.
    #[arg(long, allow_hyphen_values = true)]
    pub quad: Option<String>,
    /// Full matrix, rows separated by `;`, e.g. `0,1;1,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct StabilizerReport {
    pub matrix: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
    pub order: usize,
    pub isomorphism: String,
    pub elements: Vec<String>,
}

fn ints(text: &str, n: usize) -> Result<Vec<i64>> {
    let v: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Exit::usage(format!("expected {n} comma-separated integers, got `{text}`")))?;
    if v.len() != n {
        return Err(Exit::usage(format!("expected {n} integers, got {}", v.len())));
    }
    Ok(v)
}

fn quad_name(t: QuadType) -> &'static str {
    match t {
        QuadType::AAAA => "(a,a,a,a)",
        QuadType::AAMinusAA => "(a,a,-a,a)",
        QuadType::AMinusAMinusAA => "(a,-a,-a,a)",
    }
}

pub fn report(args: &StabilizerInput) -> Result<StabilizerReport> {
    let (matrix, form, stab) = if let Some(t) = &args.triple {
        let z = ints(t, 3)?;
        let tr = Triple::new(z[0], z[1], z[2]);
        let m = tr.to_matrix();
        let s = stabilizer_structured_3(&m)?;
        (m, Some(classify_triple(tr).0.to_string()), s)
    } else if let Some(q) = &args.quad {
        let z = ints(q, 4)?;
        let quad = Quad4::new(z[0], z[1], z[2], z[3]);
        let m = quad.to_matrix();
        match QuadType::detect(quad) {
            Some(ty) => (m.clone(), Some(quad_name(ty).to_string()), stabilizer_structured_4(&m)?),
            None => {
                let s = stabilizer_bruteforce(&m)?;
                (m, None, s)
            }
        }
    } else {
        let text = args.matrix.as_deref().unwrap_or_default();
        let m = LinkingMatrix::parse(text).map_err(|e| Exit::usage(e.to_string()))?;
        let s = stabilizer_bruteforce(&m)?;
        (m, None, s)
    };
    Ok(StabilizerReport {
        matrix: matrix.rows().to_vec(),
        form,
        order: stab.order(),
        isomorphism: identify_group(&stab).to_string(),
        elements: stab.elements().iter().map(|g| g.to_string()).collect(),
    })
}

pub fn run(args: &StabilizerArgs) -> Result<()> {
    let r = report(&args.input)?;
    match args.format {
        Format::Json => print_json(&r)?,
        Format::Text => {
            let rows: Vec<String> = r
                .matrix
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            outln!("matrix {}", rows.join("; "));
            if let Some(f) = &r.form {
                outln!("form {f}");
            }
            outln!("order {}", r.order);
            outln!("isomorphic to {}", r.isomorphism);
            outln!("elements");
            for e in &r.elements {
                outln!("  {e}");
            }
        }
        Format::Tsv => {
            outln!("element");
            for e in &r.elements {
                outln!("{e}");
            }
        }
    }
    Ok(())
}
