use serde::Serialize;
use serde_json::{json, Value as Json};

/// One verified identity or measured defect.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check_name: String,
    pub params: Json,
    /// Measured deviation; absent for exact symbolic identities.
    pub defect: Option<f64>,
    /// Allowed deviation; absent for exact symbolic identities.
    pub tolerance: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckRecord {
    pub fn exact(name: impl Into<String>, params: Json, pass: bool, detail: Option<String>) -> Self {
        Self { check_name: name.into(), params, defect: None, tolerance: None, pass, detail }
    }

    pub fn measured(name: impl Into<String>, params: Json, defect: f64, tolerance: f64) -> Self {
        Self { check_name: name.into(), params, defect: Some(defect), tolerance: Some(tolerance), pass: defect <= tolerance, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<CheckRecord>) -> Self {
        Self { suite: suite.to_string(), pass: checks.iter().all(|c| c.pass), checks }
    }
}

/// Command output: the JSON document and whether every check in it passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Json,
    pub pass: bool,
}

impl Output {
    /// Wrap a command body; adds the schema version and command name.
    pub fn new(command: &str, body: Json, pass: bool) -> Self {
        let mut json = json!({ "schema": 1, "command": command });
        if let (Some(map), Json::Object(body)) = (json.as_object_mut(), body) {
            map.extend(body);
        }
        Self { json, pass }
    }
}

fn scalar_text(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Null => "-".into(),
        other => other.to_string(),
    }
}

fn fmt_num(v: &Json) -> String {
    match v.as_f64() {
        Some(x) => format!("{x:.3e}"),
        None => "exact".into(),
    }
}

fn is_check_list(items: &[Json]) -> bool {
    !items.is_empty() && items.iter().all(|i| i.get("check_name").is_some())
}

fn is_suite_list(items: &[Json]) -> bool {
    !items.is_empty() && items.iter().all(|i| i.get("suite").is_some() && i.get("checks").is_some())
}

// structured twins of a printed field; JSON output only
const TEXT_SKIP: [&str; 2] = ["terms", "entries"];

fn flatten(prefix: &str, v: &Json, rows: &mut Vec<(String, String)>) {
    match v {
        Json::Object(map) => {
            for (k, v) in map.iter().filter(|(k, _)| !TEXT_SKIP.contains(&k.as_str())) {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, rows);
            }
        }
        Json::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, rows);
            }
        }
        Json::Array(items) => rows.push((prefix.to_string(), items.iter().map(scalar_text).collect::<Vec<_>>().join(", "))),
        _ => rows.push((prefix.to_string(), scalar_text(v))),
    }
}

fn render_checks(items: &[Json], out: &mut String) {
    let nw = items.iter().filter_map(|i| i["check_name"].as_str()).map(str::len).max().unwrap_or(0);
    for i in items {
        let pass = if i["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "  {pass}  {:<nw$}  defect {:>10}  tol {:>10}",
            scalar_text(&i["check_name"]),
            fmt_num(&i["defect"]),
            fmt_num(&i["tolerance"]),
        ));
        if let Some(d) = i.get("detail").and_then(Json::as_str) {
            out.push_str(&format!("  ({d})"));
        }
        out.push('\n');
    }
}

/// Aligned plain-text rendering of a command's JSON output.
pub fn render_text(json: &Json) -> String {
    let Some(map) = json.as_object() else { return scalar_text(json) + "\n" };
    let mut rows = Vec::new();
    let mut tables = String::new();
    for (k, v) in map {
        match v {
            Json::Array(items) if is_check_list(items) => {
                tables.push_str(&format!("{k}:\n"));
                render_checks(items, &mut tables);
            }
            Json::Array(items) if is_suite_list(items) => {
                for s in items {
                    let pass = if s["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                    tables.push_str(&format!("{} [{pass}]\n", scalar_text(&s["suite"])));
                    render_checks(s["checks"].as_array().map_or(&[][..], Vec::as_slice), &mut tables);
                }
            }
            _ if TEXT_SKIP.contains(&k.as_str()) => {}
            _ => flatten(k, v, &mut rows),
        }
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out: String = rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect();
    out.push_str(&tables);
    out
}
