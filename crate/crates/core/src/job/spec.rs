//! Line-oriented `key = value` job files.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::cartan::DEFAULT_RETRY_CAP;
use crate::galois::{RealForm, DEFAULT_H1_CAP};
use crate::grading::KacSpec;
use crate::liealg::CartanType;
use crate::weyl::DEFAULT_GROUP_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Analysis {
    Grade,
    Cartan,
    Weights,
    Weyl,
    Strata,
    Families,
    Central,
    H1,
    RealOrbits,
}

impl Analysis {
    pub const ALL: [Analysis; 9] = [
        Analysis::Grade,
        Analysis::Cartan,
        Analysis::Weights,
        Analysis::Weyl,
        Analysis::Strata,
        Analysis::Families,
        Analysis::Central,
        Analysis::H1,
        Analysis::RealOrbits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Analysis::Grade => "grade",
            Analysis::Cartan => "cartan",
            Analysis::Weights => "weights",
            Analysis::Weyl => "weyl",
            Analysis::Strata => "strata",
            Analysis::Families => "families",
            Analysis::Central => "central",
            Analysis::H1 => "h1",
            Analysis::RealOrbits => "real-orbits",
        }
    }

    pub fn dependencies(self) -> &'static [Analysis] {
        match self {
            Analysis::Grade => &[],
            Analysis::Cartan => &[Analysis::Grade],
            Analysis::Weights => &[Analysis::Cartan],
            Analysis::Weyl => &[Analysis::Cartan, Analysis::Weights],
            Analysis::Strata => &[Analysis::Weyl, Analysis::Weights],
            Analysis::Families | Analysis::Central => &[Analysis::Strata],
            Analysis::H1 => &[Analysis::Weyl],
            Analysis::RealOrbits => &[Analysis::Strata, Analysis::H1],
        }
    }

    /// The set together with everything it depends on.
    pub fn closure(requested: impl IntoIterator<Item = Analysis>) -> BTreeSet<Analysis> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<Analysis> = requested.into_iter().collect();
        while let Some(a) = stack.pop() {
            if out.insert(a) {
                stack.extend_from_slice(a.dependencies());
            }
        }
        out
    }
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Analysis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Analysis::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| format!("unknown analysis '{s}'"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "machine" => Ok(Format::Machine),
            _ => Err(format!("unknown format '{s}', expected text or machine")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub group_order: usize,
    pub h1: usize,
    pub retries: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { group_order: DEFAULT_GROUP_CAP, h1: DEFAULT_H1_CAP, retries: DEFAULT_RETRY_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub kac: KacSpec,
    /// Analyses to run, closed under dependencies.
    pub analyses: BTreeSet<Analysis>,
    pub seed: u64,
    pub caps: Caps,
    pub format: Format,
    pub real_form: RealForm,
}

impl JobSpec {
    pub fn new(kac: KacSpec, requested: impl IntoIterator<Item = Analysis>) -> Self {
        JobSpec {
            kac,
            analyses: Analysis::closure(requested),
            seed: 0,
            caps: Caps::default(),
            format: Format::Text,
            real_form: RealForm::Split,
        }
    }

    pub fn m(&self) -> u32 {
        self.kac.order().expect("validated Kac coordinates")
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct JobParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// Largest grading order accepted in job files.
pub const MAX_ORDER: u32 = 1024;

const KEYS: [&str; 10] = ["type", "kac", "m", "analyses", "seed", "cap_group_order", "cap_h1", "cap_retries", "format", "real_form"];

struct Entry<'a> {
    value: &'a str,
    line: usize,
    col: usize,
}

impl Entry<'_> {
    fn err(&self, message: impl Into<String>) -> JobParseError {
        JobParseError { line: self.line, col: self.col, message: message.into() }
    }

    fn number<T: FromStr>(&self) -> Result<T, JobParseError> {
        self.value.parse().map_err(|_| self.err(format!("expected a nonnegative integer, found '{}'", self.value)))
    }
}

/// Parses a job file. Comments start with `#`. Required keys: `type`, `kac`.
pub fn parse_job(text: &str) -> Result<JobSpec, JobParseError> {
    let mut entries: Vec<Option<Entry>> = (0..KEYS.len()).map(|_| None).collect();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let key_col = body.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let (key, value) = body.split_once('=').ok_or(JobParseError { line, col: key_col, message: "expected 'key = value'".into() })?;
        let key = key.trim();
        let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| JobParseError { line, col: key_col, message: format!("unknown key '{key}'") })?;
        if entries[slot].is_some() {
            return Err(JobParseError { line, col: key_col, message: format!("duplicate key '{key}'") });
        }
        let eq = body.find('=').expect("split above");
        let lead = value.chars().take_while(|c| c.is_whitespace()).count();
        let col = body[..eq + 1].chars().count() + lead + 1;
        let value = value.trim();
        if value.is_empty() {
            return Err(JobParseError { line, col, message: format!("empty value for '{key}'") });
        }
        entries[slot] = Some(Entry { value, line, col });
    }
    let end = JobParseError { line: text.lines().count().max(1), col: 1, message: String::new() };
    let missing = |k: &str| JobParseError { message: format!("missing key '{k}'"), ..end.clone() };
    let get = |k: &str| entries[KEYS.iter().position(|x| *x == k).expect("known key")].as_ref();

    let ty_entry = get("type").ok_or_else(|| missing("type"))?;
    let cartan_type: CartanType = ty_entry.value.parse().map_err(|e: crate::liealg::LieError| ty_entry.err(e.to_string()))?;
    let kac_entry = get("kac").ok_or_else(|| missing("kac"))?;
    let kac = KacSpec::parse(cartan_type, kac_entry.value).map_err(|e| kac_entry.err(e.to_string()))?;
    let m = kac.order().map_err(|e| kac_entry.err(e.to_string()))?;
    if m > MAX_ORDER {
        return Err(kac_entry.err(format!("m = {m} exceeds the supported maximum {MAX_ORDER}")));
    }
    if let Some(e) = get("m") {
        let declared: u32 = e.number()?;
        if declared != m {
            return Err(e.err(format!("Kac coordinates give m = {m}, but m = {declared} was declared")));
        }
    }
    let analyses = match get("analyses") {
        None => Analysis::closure(Analysis::ALL),
        Some(e) if e.value == "all" => Analysis::closure(Analysis::ALL),
        Some(e) => {
            let mut list = Vec::new();
            for part in e.value.split(',') {
                list.push(part.trim().parse::<Analysis>().map_err(|m| e.err(m))?);
            }
            Analysis::closure(list)
        }
    };
    let mut job = JobSpec::new(kac, []);
    job.analyses = analyses;
    if let Some(e) = get("seed") {
        job.seed = e.number()?;
    }
    for (key, slot) in [("cap_group_order", &mut job.caps.group_order), ("cap_h1", &mut job.caps.h1), ("cap_retries", &mut job.caps.retries)] {
        if let Some(e) = get(key) {
            *slot = e.number()?;
            if *slot == 0 {
                return Err(e.err("caps must be positive"));
            }
        }
    }
    if let Some(e) = get("format") {
        job.format = e.value.parse().map_err(|m| e.err(m))?;
    }
    if let Some(e) = get("real_form") {
        job.real_form = match e.value {
            "split" => RealForm::Split,
            "compact" => RealForm::Compact,
            other => return Err(e.err(format!("unknown real form '{other}', expected split or compact"))),
        };
    }
    Ok(job)
}
