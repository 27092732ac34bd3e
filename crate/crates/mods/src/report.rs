//! The machine-readable output format.
//!
//! One record per line: a key, then zero or more whitespace-separated value
//! tokens. The first line is always `format_version 1`. Keys may repeat
//! (e.g. one `bound` line per bound); repeated keys keep emission order.
//! Vertex sets are written as ascending labels, arcs as `u->v` tokens. The
//! format carries no timestamps or machine state, so identical runs are
//! byte-identical and diffable.

use std::fmt::Display;
use std::fmt::Write as _;

pub const FORMAT_VERSION: u32 = 1;

/// Line-oriented key/value writer.
#[derive(Default)]
pub struct Structured {
    buf: String,
}

impl Structured {
    pub fn new(command: &str) -> Self {
        let mut s = Structured { buf: String::new() };
        s.field("format_version", FORMAT_VERSION);
        s.field("command", command);
        s
    }

    pub fn field(&mut self, key: &str, value: impl Display) {
        writeln!(self.buf, "{} {}", key, value).unwrap();
    }

    /// A key with a list of tokens; an empty list writes the bare key.
    pub fn list(&mut self, key: &str, values: impl IntoIterator<Item = impl Display>) {
        self.buf.push_str(key);
        for v in values {
            write!(self.buf, " {}", v).unwrap();
        }
        self.buf.push('\n');
    }

    /// A repeated-record line: `key tok tok ...`.
    pub fn row(&mut self, key: &str, tokens: &[String]) {
        self.list(key, tokens.iter());
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// Renders an arc as a single token.
pub fn arc_token(u: usize, v: usize) -> String {
    format!("{}->{}", u, v)
}

/// Parses structured output back into `(key, tokens)` records, in order.
pub fn parse_structured(text: &str) -> Vec<(String, Vec<String>)> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut toks = l.split_whitespace().map(str::to_string);
            let key = toks.next().unwrap_or_default();
            (key, toks.collect())
        })
        .collect()
}

/// First record with the given key.
pub fn lookup<'a>(records: &'a [(String, Vec<String>)], key: &str) -> Option<&'a [String]> {
    records
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_slice())
}
