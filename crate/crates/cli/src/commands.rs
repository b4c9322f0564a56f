use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use horrocks_core::exact::FieldSpec;
use horrocks_core::moduli::{family_dimension, tabulated_dimensions, DimensionRecord};
use horrocks_core::shapes::{
    enumerate_all_candidates, enumerate_candidates, labels_of_shape, shape_of_label,
    transform_shape, Candidate, ClassFilter, Mode, MonadShape,
};
use horrocks_core::spectrum::{enumerate_spectra, Spectrum};
use horrocks_core::verify::{fixture, verify_instance, MonadInstance, Status, VerificationReport};
use serde_json::json;

use crate::table::{Format, Table};
use crate::{Command, Output};

const CHECKS: [&str; 7] = ["validate", "complex", "subbundle", "surjective", "stable", "spectrum", "c2"];

pub fn run(cmd: Command) -> Result<u8> {
    let (table, out, code) = match cmd {
        Command::Spectra { c2, out } => (spectra(c2)?, out, 0),
        Command::Shapes { c2, class, mode, spectrum, out } => {
            (shapes(c2, class.into(), mode.into(), spectrum.as_deref())?, out, 0)
        }
        Command::Verify { paths, dmax, field, checks, out } => {
            let (t, code) = verify(&paths, dmax, field.as_deref(), &checks)?;
            (t, out, code)
        }
        Command::Dims { a, b, tabulated, out } => (dims(a, b, tabulated, out.format)?, out, 0),
        Command::Transform { shape, a, b, fixture, r, u, v, out } => {
            (transform(shape, a, b, fixture, r, u, v)?, out, 0)
        }
    };
    emit(&table, &out)?;
    Ok(code)
}

fn emit(table: &Table, out: &Output) -> Result<()> {
    let text = table.render(out.format)?;
    match &out.output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn spectra(c2: i64) -> Result<Table> {
    if c2 < 2 || c2 % 2 != 0 {
        bail!("c2 must be even and at least 2, got {c2}");
    }
    let list = enumerate_spectra(c2 as usize)?;
    let json = json!(list
        .iter()
        .map(|x| json!({
            "label": x.catalog_label(),
            "r": x.r_ascii(),
            "values": x.values(),
        }))
        .collect::<Vec<_>>());
    let mut t = Table::new(vec!["Label", "Spectrum", "r", "Values"], json);
    for x in &list {
        t.rows.push(vec![
            x.catalog_label().unwrap_or_default(),
            x.to_string(),
            x.r_ascii(),
            format!("{:?}", x.values()),
        ]);
    }
    Ok(t)
}

fn flag(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn shapes(c2: i64, class: ClassFilter, mode: Mode, spectrum: Option<&str>) -> Result<Table> {
    let list: Vec<Candidate> = match spectrum {
        Some(s) => {
            let x = Spectrum::parse_r(s)?;
            enumerate_candidates(c2, &x, class, mode)?
        }
        None => enumerate_all_candidates(c2, class, mode)?,
    };
    let mut t = Table::new(
        vec!["Spectrum", "b", "a", "Label", "Homotopy free?", "Obstructions", "Verdict", "Citation"],
        json!({}),
    );
    for c in &list {
        let obstructions: Vec<String> = c.obstructions.iter().map(|o| o.to_string()).collect();
        t.rows.push(vec![
            c.spectrum.r_ascii(),
            MonadShape::power_notation(c.shape.b()),
            MonadShape::power_notation(c.shape.a()),
            c.label.clone().unwrap_or_else(|| "-".into()),
            flag(c.homotopy_free),
            obstructions.join(" "),
            c.annotation.as_ref().map_or("-".into(), |a| a.verdict.to_string()),
            c.annotation.as_ref().map_or(String::new(), |a| a.citation.clone()),
        ]);
    }
    if class == ClassFilter::Negative {
        t.notes.push(if list.is_empty() {
            "no negative minimal Horrocks monads for this c2".to_string()
        } else {
            format!(
                "no negative minimal Horrocks monads are expected; the {} candidate(s) above survive the generator and obstruction filters only",
                list.len()
            )
        });
    }
    let unlisted = list.iter().filter(|c| c.unlisted).count();
    if unlisted > 0 && class != ClassFilter::Negative {
        t.notes.push(format!("{unlisted} candidate(s) without a table label"));
    }
    t.json = json!({"c2": c2, "class": class, "mode": mode, "candidates": list, "notes": t.notes});
    Ok(t)
}

fn resolve(path: &str) -> Result<MonadInstance> {
    if Path::new(path).exists() {
        return Ok(MonadInstance::load(path)?);
    }
    fixture(path).with_context(|| format!("{path}: no such file or bundled fixture"))
}

fn parse_field(field: &str) -> Result<FieldSpec> {
    if field.eq_ignore_ascii_case("rational") || field.eq_ignore_ascii_case("qq") {
        return Ok(FieldSpec::Rational);
    }
    let p: u64 = field.parse().with_context(|| format!("bad field {field:?}"))?;
    Ok(FieldSpec::prime(p)?)
}

fn verify(paths: &[String], dmax: u32, field: Option<&str>, checks: &[String]) -> Result<(Table, u8)> {
    for c in checks {
        if !CHECKS.contains(&c.as_str()) {
            bail!("unknown check {c:?}; expected one of {}", CHECKS.join(", "));
        }
    }
    let field = field.map(parse_field).transpose()?;
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut notes = Vec::new();
    for path in paths {
        let mut m = resolve(path)?;
        if let Some(f) = field {
            if f != m.field {
                let mut data = m.to_file_data();
                data.field = f;
                m = MonadInstance::from_file_data(data)
                    .with_context(|| format!("{path}: reducing to {f}"))?;
                if !f.is_rational() {
                    notes.push(format!("{}: checked over {f}, a screen only", m.display_name()));
                }
            }
        }
        let mut r = verify_instance(&m, dmax).with_context(|| path.clone())?;
        if !checks.is_empty() {
            r.reports.retain(|c| checks.contains(&c.check));
            r.status = horrocks_core::verify::overall(&r.reports);
        }
        reports.push(r);
    }
    let worst = if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::Inconclusive) {
        2
    } else {
        0
    };
    let mut t = Table::new(vec!["Instance", "Check", "Status", "Detail"], json!(reports));
    for r in &reports {
        for c in &r.reports {
            let mut detail = c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            if let Some(n) = &c.note {
                detail = format!("{detail} ({n})");
            }
            t.rows.push(vec![r.instance.clone(), c.check.clone(), c.status.to_string(), detail]);
        }
        notes.push(format!(
            "{}: {} c2={} field={} d_max={} spectrum={} status={}",
            r.instance,
            r.shape,
            r.c2,
            r.field,
            r.d_max,
            r.spectrum.as_deref().unwrap_or("-"),
            r.status
        ));
    }
    t.notes = notes;
    Ok((t, worst))
}

fn dims(a: Vec<i64>, b: Vec<i64>, tabulated: bool, format: Format) -> Result<Table> {
    let records: Vec<DimensionRecord> = if tabulated {
        tabulated_dimensions()
    } else {
        if a.is_empty() && b.is_empty() {
            bail!("give --a and --b, or --tabulated");
        }
        vec![family_dimension(&MonadShape::new(a, b)?)]
    };
    let mut t = Table::new(
        vec!["Spectrum", "a", "b", "h", "w", "g", "s", "dim", "8c2-5"],
        json!(records),
    );
    for r in &records {
        let dim = if r.is_expected() && format == Format::Md {
            format!("**{}**", r.dim)
        } else {
            r.dim.to_string()
        };
        t.rows.push(vec![
            r.spectrum.as_ref().map_or("-".into(), |x| x.r_ascii()),
            MonadShape::power_notation(r.shape.a()),
            MonadShape::power_notation(r.shape.b()),
            r.h.to_string(),
            r.w.to_string(),
            r.g.to_string(),
            r.s.to_string(),
            dim,
            r.expected_dim.to_string(),
        ]);
        if !r.reliable {
            t.notes.push(format!("{}: not homotopy free, the count is not a dimension", r.shape));
        }
    }
    Ok(t)
}

#[allow(clippy::too_many_arguments)]
fn transform(
    label: Option<String>,
    a: Vec<i64>,
    b: Vec<i64>,
    fixture_path: Option<String>,
    r: i64,
    u: i64,
    v: i64,
) -> Result<Table> {
    let old = match (label, fixture_path) {
        (Some(l), _) => shape_of_label(&l)?,
        (None, Some(p)) => resolve(&p)?.shape().clone(),
        (None, None) if !b.is_empty() => MonadShape::new(a, b)?,
        _ => bail!("give --shape, --fixture or --a/--b"),
    };
    let new = transform_shape(&old, r, u, v)?;
    let (old_labels, new_labels) = (labels_of_shape(&old), labels_of_shape(&new));
    let json = json!({
        "r": r, "u": u, "v": v,
        "from": {"a": old.a(), "b": old.b(), "c2": old.c2(), "labels": old_labels},
        "to": {"a": new.a(), "b": new.b(), "c2": new.c2(), "labels": new_labels},
    });
    let mut t = Table::new(vec!["", "a", "b", "c2", "Labels"], json);
    for (name, s, labels) in [("from", &old, &old_labels), ("to", &new, &new_labels)] {
        t.rows.push(vec![
            name.to_string(),
            MonadShape::power_notation(s.a()),
            MonadShape::power_notation(s.b()),
            s.c2().to_string(),
            if labels.is_empty() { "-".into() } else { labels.join(" ") },
        ]);
    }
    Ok(t)
}

