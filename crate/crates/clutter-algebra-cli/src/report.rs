use clutter_algebra::Error;
use serde_json::{json, Value};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVER_CAP: i32 = 3;
pub const EXIT_CROSS_CHECK: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Done,
    Holds,
    Fails,
}

impl Status {
    pub fn of(v: bool) -> Status {
        if v { Status::Holds } else { Status::Fails }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Done | Status::Holds => EXIT_TRUE,
            Status::Fails => EXIT_FALSE,
        }
    }
}

/// Outcome of one subcommand.
pub struct Report {
    pub property: String,
    pub status: Status,
    /// The result the verdict rests on, in words.
    pub basis: String,
    pub body: Vec<String>,
    /// Certificate in an input format of this tool, printed under the body.
    pub certificate: Option<String>,
    pub json: Value,
    pub cross_checks: Vec<String>,
}

impl Report {
    pub fn new(property: &str, status: Status, basis: &str) -> Report {
        Report {
            property: property.into(),
            status,
            basis: basis.into(),
            body: Vec::new(),
            certificate: None,
            json: Value::Null,
            cross_checks: Vec::new(),
        }
    }

    pub fn line(mut self, s: impl Into<String>) -> Report {
        self.body.push(s.into());
        self
    }

    pub fn lines<I: IntoIterator<Item = String>>(mut self, it: I) -> Report {
        self.body.extend(it);
        self
    }

    pub fn certificate(mut self, s: impl Into<String>) -> Report {
        self.certificate = Some(s.into());
        self
    }

    pub fn json(mut self, v: Value) -> Report {
        self.json = v;
        self
    }

    pub fn checks(mut self, c: Vec<String>) -> Report {
        self.cross_checks = c;
        self
    }

    fn verdict(&self) -> Value {
        match self.status {
            Status::Done => Value::Null,
            Status::Holds => json!(true),
            Status::Fails => json!(false),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let v = match self.status {
            Status::Done => "done",
            Status::Holds => "true",
            Status::Fails => "false",
        };
        out.push_str(&format!("{}: {v}\n", self.property));
        out.push_str(&format!("# by: {}\n", self.basis));
        for l in &self.body {
            out.push_str(l);
            out.push('\n');
        }
        if let Some(c) = &self.certificate {
            out.push_str("# certificate\n");
            out.push_str(c);
            if !c.ends_with('\n') {
                out.push('\n');
            }
        }
        for c in &self.cross_checks {
            out.push_str(&format!("# cross-check: {c}\n"));
        }
        out
    }

    pub fn render_json(&self) -> Value {
        json!({
            self.property.clone(): {
                "verdict": self.verdict(),
                "basis": self.basis,
                "certificate": self.json,
                "certificate_text": self.certificate,
            },
            "cross_checks": self.cross_checks,
        })
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::OverCap(_) => EXIT_OVER_CAP,
        Error::CrossCheck(_) => EXIT_CROSS_CHECK,
        _ => EXIT_USAGE,
    }
}
