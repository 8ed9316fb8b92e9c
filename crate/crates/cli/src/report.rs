use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Invalid,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Invalid => 2,
        }
    }
}

/// The JSON document written for every run. Key order is fixed and no
/// timing data is included, so equal inputs give byte-identical output.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: Value,
    pub derived: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub result: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are plain JSON");
        s.push('\n');
        s
    }
}

/// Document for input that never reached a computation.
pub fn invalid_document(err: &CliError) -> String {
    let doc = json!({
        "status": Status::Invalid,
        "error": { "path": err.path(), "message": err.to_string() },
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("error values are plain JSON");
    s.push('\n');
    s
}
