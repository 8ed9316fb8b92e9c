//! Library side of the `hopfore` binary: job parsing, command dispatch and
//! report assembly.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod setup;

use serde_json::{json, Value};

use config::{JobConfig, COMMANDS, DEGREE_COMMANDS};
use error::CliError;
use report::{Report, Status};

/// Command-line replacements for keys of the job document.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub command: Option<String>,
    pub degree: Option<u32>,
}

fn job_object(doc: &mut Value) -> Result<&mut serde_json::Map<String, Value>, CliError> {
    doc.get_mut("job")
        .and_then(Value::as_object_mut)
        .ok_or_else(|| CliError::invalid("job", "missing or not an object"))
}

fn apply_overrides(doc: &mut Value, ov: &Overrides) -> Result<(), CliError> {
    if let Some(c) = &ov.command {
        if !COMMANDS.contains(&c.as_str()) {
            return Err(CliError::invalid("--command", format!("unknown command `{c}`")));
        }
        job_object(doc)?.insert("command".into(), json!(c));
    }
    if let Some(d) = ov.degree {
        let job = job_object(doc)?;
        let name = job.get("command").and_then(Value::as_str).unwrap_or_default();
        if !DEGREE_COMMANDS.contains(&name) {
            return Err(CliError::invalid("--degree", format!("the {name} command takes no degree")));
        }
        job.insert("degree".into(), json!(d));
    }
    Ok(())
}

/// Parses a job document, applying overrides before schema validation.
pub fn parse_config(text: &str, ov: &Overrides) -> Result<JobConfig, CliError> {
    let mut doc: Value = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    apply_overrides(&mut doc, ov)?;
    JobConfig::from_value(doc)
}

/// Runs a parsed job. Errors mean invalid input; verified failures come
/// back as a report with status `fail`.
pub fn execute(cfg: &JobConfig) -> Result<Report, CliError> {
    let ctx = setup::field(&cfg.field)?;
    let ext = cfg.extension.as_ref().map(|spec| setup::extension(&ctx, spec)).transpose()?;
    let derived = match &ext {
        Some(e) => commands::derived(e),
        None => json!({ "field": ctx.kind().to_string() }),
    };
    let outcome = commands::run(cfg, &ctx, ext.as_ref())?;
    Ok(Report {
        config: serde_json::to_value(cfg).expect("configs serialize"),
        derived,
        status: if outcome.passed { Status::Pass } else { Status::Fail },
        witness: outcome.witness,
        result: outcome.result,
    })
}
