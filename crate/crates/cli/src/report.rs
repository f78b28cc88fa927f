use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::json::big;

/// One verification cell: every method's value and whether they agree.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub m: usize,
    pub n: usize,
    pub parity: String,
    pub values: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub errors: BTreeMap<String, String>,
    pub agree: bool,
}

impl ReportRow {
    pub fn new(m: usize, n: usize, parity: &str) -> Self {
        ReportRow { m, n, parity: parity.into(), values: BTreeMap::new(), errors: BTreeMap::new(), agree: true }
    }

    /// Records a method's outcome. A failed method is listed but does
    /// not count as disagreement.
    pub fn record<E: std::fmt::Display>(&mut self, method: &str, value: Result<BigInt, E>) {
        match value {
            Ok(v) => {
                self.values.insert(method.into(), big(&v));
            }
            Err(e) => {
                self.errors.insert(method.into(), e.to_string());
            }
        }
        self.refresh();
    }

    /// Adds a yes/no check; false marks the row as disagreeing.
    pub fn check(&mut self, name: &str, ok: bool) {
        self.values.insert(name.into(), Value::Bool(ok));
        self.refresh();
    }

    fn refresh(&mut self) {
        let nums: Vec<&Value> = self.values.values().filter(|v| !v.is_boolean()).collect();
        let checks_ok = self.values.values().filter_map(Value::as_bool).all(|b| b);
        self.agree = checks_ok && nums.iter().all(|v| Some(*v) == nums.first().copied());
    }
}
