//! Reports and their text and machine renderings.

use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Map, Value};

use super::spec::{Format, JobSpec};

/// Version string of the machine format.
pub const SCHEMA: &str = "thetalie-report/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub name: String,
    pub status: Status,
    pub data: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub job: Value,
    pub sections: Vec<Section>,
    /// Wall-clock time per section; not part of the report body.
    pub timing: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(job: &JobSpec) -> Self {
        let analyses: Vec<&str> = job.analyses.iter().map(|a| a.name()).collect();
        let echo = json!({
            "type": job.kac.cartan_type.to_string(),
            "kac": job.kac.coords,
            "m": job.m(),
            "analyses": analyses,
            "seed": job.seed,
            "caps": {
                "group_order": job.caps.group_order,
                "h1": job.caps.h1,
                "retries": job.caps.retries,
            },
            "real_form": job.real_form.to_string(),
        });
        Report { job: echo, sections: Vec::new(), timing: Vec::new() }
    }

    /// True iff every section succeeded.
    pub fn success(&self) -> bool {
        self.sections.iter().all(|s| s.status == Status::Ok)
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn render(&self, format: Format, with_timing: bool) -> String {
        match format {
            Format::Text => self.render_text(with_timing),
            Format::Machine => self.render_machine(with_timing),
        }
    }

    pub fn to_value(&self, with_timing: bool) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let (status, message) = match &s.status {
                    Status::Ok => ("ok", None),
                    Status::Failed(m) => ("failed", Some(m.clone())),
                    Status::Skipped(m) => ("skipped", Some(m.clone())),
                };
                let mut obj = Map::new();
                obj.insert("name".into(), Value::String(s.name.clone()));
                obj.insert("status".into(), Value::String(status.into()));
                if let Some(m) = message {
                    obj.insert("message".into(), Value::String(m));
                }
                if !s.data.is_null() {
                    obj.insert("data".into(), s.data.clone());
                }
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("schema".into(), Value::String(SCHEMA.into()));
        top.insert("job".into(), self.job.clone());
        top.insert("sections".into(), Value::Array(sections));
        top.insert("success".into(), Value::Bool(self.success()));
        if with_timing {
            let t: Map<String, Value> = self.timing.iter().map(|(n, d)| (n.clone(), json!(d.as_secs_f64() * 1000.0))).collect();
            top.insert("timing_ms".into(), Value::Object(t));
        }
        Value::Object(top)
    }

    pub fn render_machine(&self, with_timing: bool) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value(with_timing)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_text(&self, with_timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{SCHEMA}");
        let _ = writeln!(out, "job");
        write_value(&mut out, &self.job, 1);
        for s in &self.sections {
            match &s.status {
                Status::Ok => {
                    let _ = writeln!(out, "[{}] ok", s.name);
                }
                Status::Failed(m) => {
                    let _ = writeln!(out, "[{}] FAILED: {m}", s.name);
                }
                Status::Skipped(m) => {
                    let _ = writeln!(out, "[{}] skipped: {m}", s.name);
                }
            }
            write_value(&mut out, &s.data, 1);
        }
        let _ = writeln!(out, "result: {}", if self.success() { "all sections succeeded" } else { "some sections failed" });
        if with_timing {
            let _ = writeln!(out, "timing");
            for (n, d) in &self.timing {
                let _ = writeln!(out, "  {n}: {:.3} ms", d.as_secs_f64() * 1000.0);
            }
        }
        out
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object()) => {
            let parts: Option<Vec<String>> = a.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_value(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        write_value(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Null => {}
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other).unwrap_or_default());
        }
    }
}
