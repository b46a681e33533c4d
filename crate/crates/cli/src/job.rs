//! Job documents: whitespace- or newline-separated `key=value` tokens, with
//! `#` comments. A leading `--` on a key is ignored, so inline flags such as
//! `--a=1/2` read the same as document lines.

use std::collections::BTreeMap;
use std::fmt;

use branchlaw::HalfInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Command {
    Epsilon,
    DistChar,
    RealPacket,
    CompactBranch,
    GlBranch,
    UnitaryDepth0,
    VerifyAll,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Epsilon,
        Command::DistChar,
        Command::RealPacket,
        Command::CompactBranch,
        Command::GlBranch,
        Command::UnitaryDepth0,
        Command::VerifyAll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Epsilon => "epsilon",
            Command::DistChar => "dist-char",
            Command::RealPacket => "real-packet",
            Command::CompactBranch => "compact-branch",
            Command::GlBranch => "gl-branch",
            Command::UnitaryDepth0 => "unitary-depth0",
            Command::VerifyAll => "verify-all",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Machine,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Table => "table",
            OutputFormat::Machine => "machine",
        }
    }

    pub fn from_name(s: &str) -> Option<OutputFormat> {
        match s {
            "table" => Some(OutputFormat::Table),
            "machine" => Some(OutputFormat::Machine),
            _ => None,
        }
    }
}

/// A typed parameter value. `Display` gives the canonical text, which parses
/// back to the same value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Half(HalfInt),
    IntList(Vec<i64>),
    HalfList(Vec<HalfInt>),
    Word(String),
    WordList(Vec<String>),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Half(v) => write!(f, "{v}"),
            Value::IntList(v) => f.write_str(&join(v)),
            Value::HalfList(v) => f.write_str(&join(v)),
            Value::Word(v) => f.write_str(v),
            Value::WordList(v) => f.write_str(&v.join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub params: BTreeMap<String, Value>,
    pub output_format: OutputFormat,
}

impl JobSpec {
    pub fn int(&self, key: &str) -> Option<i64> {
        match self.params.get(key) {
            Some(Value::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn half(&self, key: &str) -> Option<HalfInt> {
        match self.params.get(key) {
            Some(Value::Half(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn ints(&self, key: &str) -> Option<&[i64]> {
        match self.params.get(key) {
            Some(Value::IntList(v)) => Some(v),
            _ => None,
        }
    }

    pub fn halves(&self, key: &str) -> Option<&[HalfInt]> {
        match self.params.get(key) {
            Some(Value::HalfList(v)) => Some(v),
            _ => None,
        }
    }

    pub fn word(&self, key: &str) -> Option<&str> {
        match self.params.get(key) {
            Some(Value::Word(v)) => Some(v),
            _ => None,
        }
    }

    pub fn words(&self, key: &str) -> Option<&[String]> {
        match self.params.get(key) {
            Some(Value::WordList(v)) => Some(v),
            _ => None,
        }
    }

    /// Canonical `key=value` pairs, `command` first, then parameters in key
    /// order, then `format`. Feeding them back to [`parse_job`] reproduces
    /// this job.
    pub fn echo(&self) -> Vec<(String, String)> {
        let mut out = vec![("command".to_string(), self.command.name().to_string())];
        out.extend(self.params.iter().map(|(k, v)| (k.clone(), v.to_string())));
        out.push(("format".to_string(), self.output_format.name().to_string()));
        out
    }

    pub fn to_document(&self) -> String {
        self.echo().into_iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Int,
    Half,
    IntList,
    HalfList,
    Word(&'static [&'static str]),
    LabelList,
}

struct Field {
    key: &'static str,
    kind: Kind,
    required: bool,
}

const fn req(key: &'static str, kind: Kind) -> Field {
    Field { key, kind, required: true }
}

const fn opt(key: &'static str, kind: Kind) -> Field {
    Field { key, kind, required: false }
}

const CASES: Kind = Kind::Word(&["arch", "tame"]);

/// Accepted keys for a command; `case` selects between the archimedean and
/// tame layouts where both exist.
fn schema(command: Command, case: Option<&str>) -> Vec<Field> {
    use Kind::*;
    match (command, case) {
        (Command::Epsilon, Some("arch")) => vec![req("case", CASES), req("a", Half)],
        (Command::Epsilon, Some("tame")) => vec![
            req("case", CASES),
            req("q", Int),
            req("exp", Int),
            opt("unif", Word(&["1", "-1"])),
        ],
        (Command::DistChar, Some("arch")) => {
            vec![req("case", CASES), req("m", HalfList), req("n", HalfList)]
        }
        (Command::DistChar, Some("tame")) => {
            vec![req("case", CASES), req("q", Int), req("m", IntList), req("n", IntList)]
        }
        (Command::Epsilon | Command::DistChar, _) => vec![req("case", CASES)],
        (Command::RealPacket, _) => vec![req("m", HalfList), req("n", HalfList)],
        (Command::CompactBranch, _) => {
            vec![opt("n", Int), req("lambda", HalfList), req("mu", HalfList)]
        }
        (Command::GlBranch, _) => vec![req("pi", LabelList), req("mu", LabelList), opt("q", Int)],
        (Command::UnitaryDepth0, _) => vec![req("q", Int), req("m", IntList), req("n", IntList)],
        (Command::VerifyAll, _) => vec![opt("bound", Half)],
    }
}

struct Token<'a> {
    key: &'a str,
    value: &'a str,
    line: usize,
    column: usize,
    value_column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn tokenize(input: &str) -> Result<Vec<Token<'_>>, ParseError> {
    let mut out = Vec::new();
    for (li, raw) in input.lines().enumerate() {
        let line = li + 1;
        let text = raw.split('#').next().unwrap_or("");
        let mut rest = text;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let tok = &tail[..len];
            let column = text[..offset + start].chars().count() + 1;
            let (tok, column) = match tok.strip_prefix("--") {
                Some(t) => (t, column + 2),
                None => (tok, column),
            };
            let Some(eq) = tok.find('=') else {
                return Err(err(line, column, format!("expected key=value, found {tok:?}")));
            };
            let key = &tok[..eq];
            if key.is_empty() {
                return Err(err(line, column, "missing key before '='"));
            }
            out.push(Token {
                key,
                value: &tok[eq + 1..],
                line,
                column,
                value_column: column + key.chars().count() + 1,
            });
            offset += start + len;
            rest = &tail[len..];
        }
    }
    Ok(out)
}

/// Splits a comma list, returning each item with its column.
fn items(value: &str, column: usize) -> Vec<(&str, usize)> {
    if value.is_empty() {
        return Vec::new();
    }
    let mut col = column;
    value
        .split(',')
        .map(|item| {
            let here = col;
            col += item.chars().count() + 1;
            (item, here)
        })
        .collect()
}

fn parse_int(s: &str, line: usize, column: usize) -> Result<i64, ParseError> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, column, format!("malformed integer {s:?}")));
    }
    s.parse().map_err(|_| err(line, column, format!("integer {s:?} out of range")))
}

fn parse_half(s: &str, line: usize, column: usize) -> Result<HalfInt, ParseError> {
    s.parse::<HalfInt>()
        .map_err(|_| err(line, column, format!("malformed half-integer {s:?} (write n or n/2)")))
}

fn valid_label(s: &str) -> bool {
    let (id, degree) = match s.split_once(':') {
        Some((id, d)) => (id, Some(d)),
        None => (s, None),
    };
    let id_ok = !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let degree_ok = degree.is_none_or(|d| d.parse::<usize>().is_ok_and(|d| d > 0));
    id_ok && degree_ok
}

fn parse_value(t: &Token<'_>, kind: Kind) -> Result<Value, ParseError> {
    let (line, col) = (t.line, t.value_column);
    Ok(match kind {
        Kind::Int => Value::Int(parse_int(t.value, line, col)?),
        Kind::Half => Value::Half(parse_half(t.value, line, col)?),
        Kind::IntList => Value::IntList(
            items(t.value, col)
                .into_iter()
                .map(|(s, c)| parse_int(s, line, c))
                .collect::<Result<_, _>>()?,
        ),
        Kind::HalfList => Value::HalfList(
            items(t.value, col)
                .into_iter()
                .map(|(s, c)| parse_half(s, line, c))
                .collect::<Result<_, _>>()?,
        ),
        Kind::Word(allowed) => {
            if !allowed.contains(&t.value) {
                return Err(err(
                    line,
                    col,
                    format!("{} must be one of {}, found {:?}", t.key, allowed.join("|"), t.value),
                ));
            }
            Value::Word(t.value.to_string())
        }
        Kind::LabelList => Value::WordList(
            items(t.value, col)
                .into_iter()
                .map(|(s, c)| {
                    if valid_label(s) {
                        Ok(s.to_string())
                    } else {
                        Err(err(line, c, format!("malformed label {s:?} (write name or name:degree)")))
                    }
                })
                .collect::<Result<_, _>>()?,
        ),
    })
}

/// Parses and validates a job document. Every key must belong to the
/// command's schema, every required key must be present, and numbers are
/// read exactly.
pub fn parse_job(input: &str) -> Result<JobSpec, ParseError> {
    let tokens = tokenize(input)?;
    let mut seen: BTreeMap<&str, &Token<'_>> = BTreeMap::new();
    for t in &tokens {
        if let Some(prev) = seen.insert(t.key, t) {
            return Err(err(
                t.line,
                t.column,
                format!("duplicate key {:?} (first given at line {}, column {})", t.key, prev.line, prev.column),
            ));
        }
    }
    let Some(cmd_tok) = seen.get("command") else {
        let (line, column) = tokens.first().map_or((1, 1), |t| (t.line, t.column));
        return Err(err(line, column, "missing required key \"command\""));
    };
    let command = Command::from_name(cmd_tok.value).ok_or_else(|| {
        let names: Vec<&str> = Command::ALL.iter().map(|c| c.name()).collect();
        err(
            cmd_tok.line,
            cmd_tok.value_column,
            format!("unknown command {:?} (expected one of {})", cmd_tok.value, names.join(", ")),
        )
    })?;
    let output_format = match seen.get("format") {
        None => OutputFormat::default(),
        Some(t) => OutputFormat::from_name(t.value).ok_or_else(|| {
            err(t.line, t.value_column, format!("format must be table|machine, found {:?}", t.value))
        })?,
    };

    if let Some(t) = seen.get("case") {
        parse_value(t, CASES)?;
    }
    let case = seen.get("case").map(|t| t.value);
    let fields = schema(command, case);
    let mut params = BTreeMap::new();
    for t in &tokens {
        if t.key == "command" || t.key == "format" {
            continue;
        }
        let Some(field) = fields.iter().find(|f| f.key == t.key) else {
            let known: Vec<&str> = fields.iter().map(|f| f.key).collect();
            return Err(err(
                t.line,
                t.column,
                format!("unknown key {:?} for {command} (accepted: {})", t.key, known.join(", ")),
            ));
        };
        params.insert(t.key.to_string(), parse_value(t, field.kind)?);
    }
    if let Some(missing) = fields.iter().find(|f| f.required && !params.contains_key(f.key)) {
        return Err(err(
            cmd_tok.line,
            cmd_tok.column,
            format!("missing required key {:?} for {command}", missing.key),
        ));
    }
    Ok(JobSpec { command, params, output_format })
}
