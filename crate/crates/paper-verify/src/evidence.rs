//! Evidence gathered by a check: named boolean conditions and the exact
//! values they were decided on.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::Value;

#[derive(Debug, Clone, Default)]
pub struct Evidence {
    checks: Vec<(String, bool)>,
    values: BTreeMap<String, Value>,
    computed: Vec<String>,
}

impl Evidence {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record an exact value under `key`.
    pub fn value(&mut self, key: &str, v: Value) -> &mut Self {
        self.values.insert(key.into(), v);
        self
    }

    /// Record a condition; the claim passes only if all of them hold.
    pub fn check(&mut self, what: &str, ok: bool) -> &mut Self {
        self.checks.push((what.into(), ok));
        self
    }

    /// Short human summary of the computed result.
    pub fn computed(&mut self, s: impl Into<String>) -> &mut Self {
        self.computed.push(s.into());
        self
    }

    /// (passed, computed, detail, values). A pass needs at least one
    /// condition and at least one recorded value.
    pub fn finish(self) -> (bool, String, String, BTreeMap<String, Value>) {
        let failed: Vec<&str> = self.checks.iter().filter(|(_, ok)| !ok).map(|(w, _)| w.as_str()).collect();
        let passed = failed.is_empty() && !self.checks.is_empty() && !self.values.is_empty();
        let detail = if passed {
            let all: Vec<&str> = self.checks.iter().map(|(w, _)| w.as_str()).collect();
            format!("{} conditions hold: {}", all.len(), all.join("; "))
        } else if self.checks.is_empty() || self.values.is_empty() {
            "check recorded no conditions or no values".into()
        } else {
            format!("failed: {}", failed.join("; "))
        };
        (passed, self.computed.join("; "), detail, self.values)
    }
}

pub fn int(n: i64) -> Value {
    Value::from(n)
}

pub fn uint(n: u64) -> Value {
    Value::from(n)
}

pub fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(n.to_string()),
    }
}

pub fn rat(r: &BigRational) -> Value {
    if r.is_integer() {
        big(r.numer())
    } else {
        Value::from(r.to_string())
    }
}

pub fn ints<T: Copy + Into<i64>>(v: &[T]) -> Value {
    Value::from(v.iter().map(|&x| x.into()).collect::<Vec<i64>>())
}

pub fn uints<T: Copy + Into<u64>>(v: &[T]) -> Value {
    Value::from(v.iter().map(|&x| x.into()).collect::<Vec<u64>>())
}

pub fn text(s: impl Into<String>) -> Value {
    Value::from(s.into())
}

pub fn flag(b: bool) -> Value {
    Value::from(b)
}

pub fn list(v: Vec<Value>) -> Value {
    Value::Array(v)
}
