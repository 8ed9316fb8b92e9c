//! The job document read by `hopfore`. Exact scalars are strings parsed by
//! the field context ("1/2", "zeta^3", "t^2+1"); unknown keys are rejected.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::{Map, Value};

use crate::error::CliError;

/// A parsed job document. The job object carries its command name under
/// `command` next to the command parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub field: FieldSpec,
    pub extension: Option<ExtensionSpec>,
    pub job: Job,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    field: FieldSpec,
    #[serde(default)]
    extension: Option<ExtensionSpec>,
    job: Value,
}

#[derive(Serialize)]
struct Flat<'a> {
    field: &'a FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    extension: Option<&'a ExtensionSpec>,
    job: Map<String, Value>,
}

fn path_of<E>(e: &serde_path_to_error::Error<E>) -> String {
    let p = e.path().to_string();
    if p == "." {
        String::new()
    } else {
        p
    }
}

impl JobConfig {
    /// Validates a document, reporting the key path of the first problem.
    pub fn from_value(doc: Value) -> Result<Self, CliError> {
        let header: Header = serde_path_to_error::deserialize(doc).map_err(|e| {
            let path = path_of(&e);
            CliError::invalid(path, e.into_inner())
        })?;
        let Value::Object(mut params) = header.job else {
            return Err(CliError::invalid("job", "expected an object"));
        };
        let command = match params.remove("command") {
            Some(Value::String(c)) if COMMANDS.contains(&c.as_str()) => c,
            Some(Value::String(c)) => {
                return Err(CliError::invalid(
                    "job.command",
                    format!("unknown command `{c}`, expected one of {COMMANDS:?}"),
                ))
            }
            Some(_) => return Err(CliError::invalid("job.command", "expected a string")),
            None => return Err(CliError::invalid("job", "missing field `command`")),
        };
        let tagged = Value::Object(Map::from_iter([(command, Value::Object(params))]));
        let job: Job = serde_path_to_error::deserialize(tagged).map_err(|e| {
            // The first segment is the command name; report it as `job`.
            let path = path_of(&e);
            let rest = path.split_once('.').map(|(_, r)| format!("job.{r}")).unwrap_or_else(|| "job".into());
            CliError::invalid(rest, e.into_inner())
        })?;
        Ok(JobConfig { field: header.field, extension: header.extension, job })
    }
}

impl Serialize for JobConfig {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut job = Map::new();
        job.insert("command".into(), Value::String(self.job.name().into()));
        if let Value::Object(tagged) = serde_json::to_value(&self.job).map_err(serde::ser::Error::custom)? {
            for (_, params) in tagged {
                if let Value::Object(params) = params {
                    job.extend(params);
                }
            }
        }
        Flat { field: &self.field, extension: self.extension.as_ref(), job }.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic { n: u32 },
    Prime { p: u64 },
    Extension { p: u64, e: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub free_rank: usize,
    #[serde(default)]
    pub torsion_orders: Vec<u64>,
}

/// Data of kG(θ, a, δ): θ by generator images, a by coordinates and the
/// cocycle α by generator values (zero when absent).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    pub group: GroupSpec,
    pub theta: Vec<String>,
    pub a: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
    /// Skip the cocycle identities when building α (negative controls).
    #[serde(default, skip_serializing_if = "is_false")]
    pub unchecked_alpha: bool,
    /// Replace S(x) = −x·a⁻¹ by +x·a⁻¹ (negative control).
    #[serde(default, skip_serializing_if = "is_false")]
    pub mutate_antipode: bool,
    /// Radius of the box of group elements used when G is infinite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_radius: Option<i64>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// ⟨xⁿ − β(1 − aⁿ)⟩, classified into its standard form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub n: u32,
    #[serde(default = "zero_scalar")]
    pub beta: String,
}

fn zero_scalar() -> String {
    "0".into()
}

/// A term c·g·x^d of an element of H, as (coordinates of g, d, c).
pub type TermSpec = (Vec<i64>, u32, String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Job {
    Qbinom {
        n: u64,
        m: u64,
        q: String,
    },
    Classify {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<u32>,
    },
    HopfCheck {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<u32>,
        /// Run the grading check; by default only in Cases 1 and 2.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grading: Option<bool>,
    },
    SkewPrimitives {
        target: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<u32>,
    },
    Quotient {
        n: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<String>,
        /// Quotient by ⟨xⁿ − tail⟩ for an arbitrary tail instead.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tail: Option<Vec<TermSpec>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<u32>,
    },
    Simples {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quotient: Option<IdealSpec>,
    },
    Tensor {
        sigma: Vec<String>,
        alpha: String,
        lambda: Vec<String>,
        beta: String,
    },
    Verma {
        lambda: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quotient: Option<IdealSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        betas: Option<Vec<String>>,
    },
}

pub const COMMANDS: [&str; 8] =
    ["qbinom", "classify", "hopf-check", "skew-primitives", "quotient", "simples", "tensor", "verma"];

/// Commands that take a `degree` parameter.
pub const DEGREE_COMMANDS: [&str; 4] = ["classify", "hopf-check", "skew-primitives", "quotient"];

impl Job {
    pub fn name(&self) -> &'static str {
        match self {
            Job::Qbinom { .. } => "qbinom",
            Job::Classify { .. } => "classify",
            Job::HopfCheck { .. } => "hopf-check",
            Job::SkewPrimitives { .. } => "skew-primitives",
            Job::Quotient { .. } => "quotient",
            Job::Simples { .. } => "simples",
            Job::Tensor { .. } => "tensor",
            Job::Verma { .. } => "verma",
        }
    }
}
