use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

use semigroup_forge::claims::{run_claims, ClaimOptions, ClaimSection};
use semigroup_forge::constructions::family_monoid;
use semigroup_forge::families::{enumerate, member};
use semigroup_forge::{ConstructionId, FamilyId, PartialPerm, VerificationReport};

use crate::config::{Cli, Command, Format, NRange, Property, RunArgs, UsageError};
use crate::render;

pub const SCHEMA_VERSION: u32 = 1;

pub struct Output {
    pub text: String,
    pub path: Option<PathBuf>,
    pub all_hold: bool,
}

#[derive(Serialize)]
pub struct VerifySection {
    pub n: usize,
    pub reports: Vec<VerificationReport>,
}

pub fn run(cli: Cli) -> Result<Output, UsageError> {
    match cli.command {
        Command::Claims { run, mutate } => claims(&run, mutate),
        Command::Verify { construction, run } => verify(construction, &run),
        Command::Table {
            families,
            props,
            n,
            format,
            out,
        } => {
            let text = table(&families, &props, &n, format)?;
            Ok(Output {
                text,
                path: out,
                all_hold: true,
            })
        }
        Command::Inspect {
            element,
            n,
            family,
            format,
            out,
        } => {
            let text = inspect(&element, n, family, format)?;
            Ok(Output {
                text,
                path: out,
                all_hold: true,
            })
        }
    }
}

fn claims(run: &RunArgs, mutate: bool) -> Result<Output, UsageError> {
    let mut sections: Vec<ClaimSection> = Vec::new();
    for n in run.n.0.clone() {
        let opts = ClaimOptions {
            mode: run.mode_for(n)?,
            mutate_poi_right: mutate,
        };
        sections.push(run_claims(n, opts)?);
    }
    let all_hold = sections.iter().all(ClaimSection::all_hold);
    let text = match run.format {
        Format::Json => render::json(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "claims",
            "mutated": mutate,
            "all_hold": all_hold,
            "sections": sections,
        })),
        Format::Csv => render::reports_csv(sections.iter().map(|s| (s.n, s.reports.as_slice())))?,
        Format::Text => {
            let mut out = String::new();
            for s in &sections {
                out.push_str(&render::reports_text(s.n, &s.reports));
                out.push_str(&render::notes_text(&s.notes));
            }
            out.push_str(&render::summary(sections.iter().flat_map(|s| &s.reports)));
            out
        }
    };
    Ok(Output {
        text,
        path: run.out.clone(),
        all_hold,
    })
}

fn verify(c: ConstructionId, run: &RunArgs) -> Result<Output, UsageError> {
    let mut sections = Vec::new();
    for n in run.n.0.clone() {
        let mode = run.mode_for(n)?;
        let actions = c.action_pair(n)?;
        let mut reports = vec![actions.check_totality(mode)];
        reports.extend(actions.check_all(mode));
        reports.sort_by(|a, b| a.law.cmp(&b.law));
        sections.push(VerifySection { n, reports });
    }
    let all_hold = sections.iter().all(|s| s.reports.iter().all(|r| r.holds));
    let text = match run.format {
        Format::Json => render::json(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "construction": c,
            "all_hold": all_hold,
            "sections": sections,
        })),
        Format::Csv => render::reports_csv(sections.iter().map(|s| (s.n, s.reports.as_slice())))?,
        Format::Text => {
            let mut out = format!("{c}\n");
            for s in &sections {
                out.push_str(&render::reports_text(s.n, &s.reports));
            }
            out.push_str(&render::summary(sections.iter().flat_map(|s| &s.reports)));
            out
        }
    };
    Ok(Output {
        text,
        path: run.out.clone(),
        all_hold,
    })
}

fn property(f: FamilyId, n: usize, p: Property) -> Result<bool, UsageError> {
    let m = family_monoid(f, n)?;
    Ok(match p {
        Property::Inverse => m.is_inverse().holds,
        Property::Regular => m.is_regular().holds,
        Property::Aperiodic => m.is_aperiodic().holds,
        Property::JTrivial => m.is_j_trivial().holds,
    })
}

fn table(
    families: &[FamilyId],
    props: &[Property],
    n: &NRange,
    format: Format,
) -> Result<String, UsageError> {
    if families.is_empty() {
        return Err(UsageError("--families is empty".into()));
    }
    let mut columns = vec!["n".to_string()];
    columns.extend(families.iter().map(|f| f.tag().to_string()));
    for p in props {
        columns.extend(families.iter().map(|f| format!("{f}.{}", p.name())));
    }
    let mut rows: Vec<Vec<Value>> = Vec::new();
    for k in n.0.clone() {
        let mut row = vec![json!(k)];
        for &f in families {
            row.push(json!(enumerate(f, k)?.len()));
        }
        for &p in props {
            for &f in families {
                row.push(json!(property(f, k, p)?));
            }
        }
        rows.push(row);
    }
    Ok(match format {
        Format::Json => render::json(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "table",
            "columns": columns,
            "rows": rows,
        })),
        Format::Csv => render::table_csv(&columns, &rows)?,
        Format::Text => render::table_text(&columns, &rows),
    })
}

fn inspect(
    element: &str,
    n: usize,
    family: Option<FamilyId>,
    format: Format,
) -> Result<String, UsageError> {
    let s = PartialPerm::parse(element, n)?;
    let mut fields: Vec<(&str, Value)> = vec![
        ("element", json!(s.to_string())),
        ("n", json!(n)),
        ("rank", json!(s.rank())),
        ("domain", json!(s.dom())),
        ("image", json!(s.im())),
        ("inverse", json!(s.inverse().to_string())),
        ("order-preserving", json!(s.is_order_preserving())),
        ("order-reversing", json!(s.is_order_reversing())),
        ("monotone", json!(s.is_monotone())),
        ("isometry", json!(s.is_isometry())),
        ("extensive", json!(s.is_extensive())),
        ("co-extensive", json!(s.is_coextensive())),
        ("idempotent", json!(s * s == s)),
        (
            "families",
            json!(FamilyId::ALL
                .iter()
                .filter(|f| member(**f, &s))
                .map(|f| f.tag())
                .collect::<Vec<_>>()),
        ),
    ];
    if let Some(f) = family {
        let m = family_monoid(f, n)?;
        fields.push(("family", json!(f.tag())));
        match m.index_of(&s) {
            None => fields.push(("member", json!(false))),
            Some(x) => {
                let g = m.green();
                fields.push(("member", json!(true)));
                fields.push(("regular", json!(m.is_regular_element(x))));
                fields.push(("r-class-size", json!(g.r.class(x).len())));
                fields.push(("l-class-size", json!(g.l.class(x).len())));
                fields.push(("h-class-size", json!(g.h.class(x).len())));
                fields.push(("d-class-size", json!(g.d.class(x).len())));
            }
        }
    }
    Ok(match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
            obj.insert("command".into(), json!("inspect"));
            for (k, v) in fields {
                obj.insert(k.into(), v);
            }
            render::json(&Value::Object(obj))
        }
        Format::Csv => {
            let columns: Vec<String> = fields.iter().map(|(k, _)| k.to_string()).collect();
            let row: Vec<Value> = fields.into_iter().map(|(_, v)| v).collect();
            render::table_csv(&columns, &[row])?
        }
        Format::Text => fields
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", render::plain(v)))
            .collect(),
    })
}
