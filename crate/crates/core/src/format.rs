//! Line-based text formats: profiles, control instances, and the source
//! problems of the reductions. See `docs/formats.md`.
//!
//! Writers emit canonical text; parsers accept that text plus blank lines and
//! trailing whitespace, and report the 1-based line and column of the first
//! problem.

use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::instance::{ControlInstance, GcaiInstance, GcdiInstance, GcpiInstance, Problem};
use crate::profile::{Profile, ProfileBuilder};
use crate::reductions::{Literal, LrbdsInstance, RbdsInstance, Rx3cInstance, ThreeSatInstance};
use crate::rules::RuleSpec;
use crate::subset::Subset;

pub const PROFILE_HEADER: &str = "gi-profile v1";
pub const INSTANCE_HEADER: &str = "gi-instance v1";
pub const RX3C_HEADER: &str = "rx3c v1";
pub const CNF3_HEADER: &str = "cnf3 v1";
pub const RBDS_HEADER: &str = "rbds v1";
pub const LRBDS_HEADER: &str = "lrbds v1";

#[derive(Debug, Clone, Copy)]
struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, msg: impl Into<String>) -> Error {
        ParseError::new(self.number, column, msg).into()
    }

    /// Whitespace-separated tokens with their 1-based columns.
    fn tokens(&self) -> Vec<(usize, &'a str)> {
        let base = self.text.as_ptr() as usize;
        self.text
            .split_whitespace()
            .map(|tok| (tok.as_ptr() as usize - base + 1, tok))
            .collect()
    }

    fn end_column(&self) -> usize {
        self.text.trim_end().chars().count() + 1
    }
}

/// Non-blank lines with their numbers, trailing whitespace removed.
struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = Line<'a>> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = Line<'a>> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(move |(i, l)| Line {
                    number: i + 1,
                    text: l.trim_end(),
                })
                .filter(|l| !l.text.is_empty()),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<Line<'a>> {
        let line = self.inner.next()?;
        self.last = line.number;
        Some(line)
    }

    fn peek(&mut self) -> Option<Line<'a>> {
        self.inner.peek().copied()
    }

    fn expect(&mut self, what: &str) -> Result<Line<'a>> {
        self.next().ok_or_else(|| {
            ParseError::new(
                self.last + 1,
                1,
                format!("unexpected end of input, expected {what}"),
            )
            .into()
        })
    }

    fn expect_exact(&mut self, header: &str) -> Result<Line<'a>> {
        let line = self.expect(&format!("`{header}`"))?;
        if line.text.trim_start() != header {
            return Err(line.err(1, format!("expected `{header}`")));
        }
        Ok(line)
    }

    fn finish(&mut self) -> Result<()> {
        match self.next() {
            None => Ok(()),
            Some(line) => Err(line.err(1, "unexpected trailing content")),
        }
    }
}

fn number<T: std::str::FromStr>(line: &Line, (column, tok): (usize, &str)) -> Result<T> {
    tok.parse().map_err(|_| {
        line.err(
            column,
            format!("expected a non-negative integer, got `{tok}`"),
        )
    })
}

/// A `keyword value...` line; returns the value tokens.
fn keyword<'a>(line: &Line<'a>, key: &str) -> Result<Vec<(usize, &'a str)>> {
    let toks = line.tokens();
    match toks.first() {
        Some(&(_, k)) if k == key => Ok(toks[1..].to_vec()),
        Some(&(col, k)) => Err(line.err(col, format!("expected `{key}`, got `{k}`"))),
        None => Err(line.err(1, format!("expected `{key}`"))),
    }
}

fn single<'a>(line: &Line<'a>, key: &str) -> Result<(usize, &'a str)> {
    let vals = keyword(line, key)?;
    match vals.as_slice() {
        [one] => Ok(*one),
        [] => Err(line.err(line.end_column(), format!("`{key}` needs a value"))),
        [_, (col, _), ..] => Err(line.err(*col, format!("`{key}` takes one value"))),
    }
}

fn input_at(line: Line<'_>, column: usize) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::Input(msg) => line.err(column, msg),
        other => other,
    }
}

// ---- profiles ----

pub fn write_profile(profile: &Profile) -> String {
    let mut out = String::new();
    write_profile_into(&mut out, profile);
    out
}

fn write_profile_into(out: &mut String, profile: &Profile) {
    let n = profile.n();
    let _ = writeln!(out, "{PROFILE_HEADER}");
    let _ = writeln!(out, "n {n}");
    for i in 0..n {
        out.extend((0..n).map(|j| if profile.phi(i, j) { '1' } else { '0' }));
        if let Some(name) = profile.name(i) {
            let _ = write!(out, " # {name}");
        }
        out.push('\n');
    }
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut lines = Lines::new(text);
    let profile = read_profile(&mut lines)?;
    lines.finish()?;
    Ok(profile)
}

fn read_profile(lines: &mut Lines) -> Result<Profile> {
    lines.expect_exact(PROFILE_HEADER)?;
    let line = lines.expect("`n <count>`")?;
    let tok = single(&line, "n")?;
    let n: usize = number(&line, tok)?;
    if n == 0 {
        return Err(line.err(tok.0, "a profile needs at least one individual"));
    }
    let mut b = ProfileBuilder::new(n)?;
    for i in 0..n {
        let line = lines.expect(&format!("row {i} of {n}"))?;
        let (bits, name) = match line.text.find('#') {
            Some(at) => (&line.text[..at], Some(&line.text[at + 1..])),
            None => (line.text, None),
        };
        let lead = bits.len() - bits.trim_start().len();
        let bits = bits.trim();
        let mut count = 0;
        for (j, ch) in bits.chars().enumerate() {
            let col = lead + j + 1;
            match ch {
                '0' | '1' if j < n => {
                    b.set(i, j, ch == '1');
                }
                '0' | '1' => return Err(line.err(col, format!("row has more than {n} entries"))),
                other => return Err(line.err(col, format!("expected 0 or 1, got `{other}`"))),
            }
            count += 1;
        }
        if count < n {
            return Err(line.err(
                lead + count + 1,
                format!("row has {count} entries, expected {n}"),
            ));
        }
        if let Some(name) = name {
            b.name(i, name)?;
        }
    }
    Ok(b.build())
}

// ---- instances ----

fn subset_field(out: &mut String, key: &str, subset: &Subset) {
    out.push_str(key);
    out.push(':');
    for i in subset.iter() {
        let _ = write!(out, " {i}");
    }
    out.push('\n');
}

pub fn write_instance(inst: &ControlInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{INSTANCE_HEADER}");
    let _ = writeln!(out, "problem: {}", inst.problem());
    let _ = writeln!(out, "rule: {}", inst.rule());
    subset_field(&mut out, "S", inst.target());
    if let ControlInstance::Gcai(i) = inst {
        subset_field(&mut out, "T", i.society());
    }
    if let Some(k) = inst.budget() {
        let _ = writeln!(out, "k: {k}");
    }
    write_profile_into(&mut out, inst.profile());
    out
}

struct Field<'a> {
    line: Line<'a>,
    /// Column where the value starts.
    column: usize,
    value: &'a str,
}

impl Field<'_> {
    fn indices(&self) -> Result<Vec<(usize, usize)>> {
        self.line
            .tokens()
            .into_iter()
            .filter(|&(col, _)| col >= self.column)
            .map(|tok| Ok((tok.0, number(&self.line, tok)?)))
            .collect()
    }

    fn subset(&self, n: usize, what: &str) -> Result<Subset> {
        let mut out = Subset::empty(n);
        for (col, i) in self.indices()? {
            if i >= n {
                return Err(self
                    .line
                    .err(col, format!("{what} names individual {i}, but n = {n}")));
            }
            out.insert(i);
        }
        Ok(out)
    }
}

/// Parses an instance. The `S ⊄ f(...)` assumption is not checked here;
/// see [`ControlInstance::require_strict`].
pub fn parse_instance(text: &str) -> Result<ControlInstance> {
    let mut lines = Lines::new(text);
    lines.expect_exact(INSTANCE_HEADER)?;
    let mut fields: Vec<(&str, Field)> = Vec::new();
    while let Some(line) = lines.peek() {
        if line.text.trim_start() == PROFILE_HEADER {
            break;
        }
        let line = lines.next().expect("peeked");
        let Some(colon) = line.text.find(':') else {
            return Err(line.err(1, "expected `key: value` or `gi-profile v1`"));
        };
        let key = line.text[..colon].trim();
        if !matches!(key, "problem" | "rule" | "S" | "T" | "k") {
            let col = line.text.len() - line.text.trim_start().len() + 1;
            return Err(line.err(col, format!("unknown field `{key}`")));
        }
        if fields.iter().any(|(k, _)| *k == key) {
            return Err(line.err(1, format!("duplicate field `{key}`")));
        }
        let rest = &line.text[colon + 1..];
        let column = colon + 2 + (rest.len() - rest.trim_start().len());
        fields.push((
            key,
            Field {
                line,
                column,
                value: rest.trim(),
            },
        ));
    }
    let header_end = lines.last;
    let take = |key: &str| fields.iter().position(|(k, _)| *k == key);
    let missing = |key: &str| -> Error {
        ParseError::new(header_end + 1, 1, format!("missing field `{key}`")).into()
    };

    let problem_field = &fields[take("problem").ok_or_else(|| missing("problem"))?].1;
    let problem: Problem = problem_field
        .value
        .parse()
        .map_err(input_at(problem_field.line, problem_field.column))?;
    let rule_field = &fields[take("rule").ok_or_else(|| missing("rule"))?].1;
    let rule: RuleSpec = rule_field
        .value
        .parse()
        .map_err(input_at(rule_field.line, rule_field.column))?;
    let s_field = &fields[take("S").ok_or_else(|| missing("S"))?].1;
    let t_field = take("T").map(|i| &fields[i].1);
    let k_field = take("k").map(|i| &fields[i].1);

    let profile = read_profile(&mut lines)?;
    lines.finish()?;
    let n = profile.n();
    let target = s_field.subset(n, "S")?;
    let budget = |f: Option<&Field>| -> Result<usize> {
        let f = f.ok_or_else(|| missing("k"))?;
        let toks: Vec<_> = f
            .line
            .tokens()
            .into_iter()
            .filter(|t| t.0 >= f.column)
            .collect();
        match toks.as_slice() {
            [tok] => number(&f.line, *tok),
            _ => Err(f.line.err(f.column, "`k` takes one integer")),
        }
    };
    let unexpected = |f: Option<&Field>, key: &str| -> Result<()> {
        match f {
            Some(f) => Err(f.line.err(1, format!("`{key}` is not used by {problem}"))),
            None => Ok(()),
        }
    };
    let at_s = input_at(s_field.line, s_field.column);
    Ok(match problem {
        Problem::Gcai => {
            let society = t_field.ok_or_else(|| missing("T"))?.subset(n, "T")?;
            let k = budget(k_field)?;
            GcaiInstance::new(profile, rule, target, society, k)
                .map_err(at_s)?
                .into()
        }
        Problem::Gcdi => {
            unexpected(t_field, "T")?;
            let k = budget(k_field)?;
            GcdiInstance::new(profile, rule, target, k)
                .map_err(at_s)?
                .into()
        }
        Problem::Gcpi => {
            unexpected(t_field, "T")?;
            unexpected(k_field, "k")?;
            GcpiInstance::new(profile, rule, target)
                .map_err(at_s)?
                .into()
        }
    })
}

/// Index list as typed on a command line: `1 2`, `1,2`, `[1 2]` or empty.
pub fn parse_indices(text: &str) -> Result<Vec<usize>> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::input(format!("`{tok}` is not an individual index")))
        })
        .collect()
}

// ---- source problems ----

pub fn write_rx3c(src: &Rx3cInstance) -> String {
    let mut out = format!("{RX3C_HEADER}\nkappa {}\n", src.kappa());
    for [a, b, c] in src.sets() {
        let _ = writeln!(out, "set {a} {b} {c}");
    }
    out
}

pub fn parse_rx3c(text: &str) -> Result<Rx3cInstance> {
    let mut lines = Lines::new(text);
    lines.expect_exact(RX3C_HEADER)?;
    let line = lines.expect("`kappa <K>`")?;
    let kappa: usize = number(&line, single(&line, "kappa")?)?;
    let mut sets = Vec::new();
    let mut last = line;
    while let Some(line) = lines.next() {
        let vals = keyword(&line, "set")?;
        if vals.len() != 3 {
            return Err(line.err(1, "a set has exactly three elements"));
        }
        let mut set = [0usize; 3];
        for (slot, tok) in set.iter_mut().zip(vals) {
            *slot = number(&line, tok)?;
        }
        sets.push(set);
        last = line;
    }
    Rx3cInstance::new(kappa, sets).map_err(input_at(last, 1))
}

fn literal_text(l: Literal) -> String {
    format!("{}{}", if l.positive { '+' } else { '-' }, l.var)
}

pub fn write_cnf3(src: &ThreeSatInstance) -> String {
    let mut out = format!("{CNF3_HEADER}\nvars {}\n", src.vars());
    for clause in src.clauses() {
        let lits: Vec<_> = clause.iter().map(|&l| literal_text(l)).collect();
        let _ = writeln!(out, "clause {}", lits.join(" "));
    }
    out
}

pub fn parse_cnf3(text: &str) -> Result<ThreeSatInstance> {
    let mut lines = Lines::new(text);
    lines.expect_exact(CNF3_HEADER)?;
    let line = lines.expect("`vars <M>`")?;
    let vars: usize = number(&line, single(&line, "vars")?)?;
    let mut clauses = Vec::new();
    let mut last = line;
    while let Some(line) = lines.next() {
        let vals = keyword(&line, "clause")?;
        if vals.len() != 3 {
            return Err(line.err(1, "a clause has exactly three literals"));
        }
        let mut clause = [Literal::pos(0); 3];
        for (slot, (col, tok)) in clause.iter_mut().zip(vals) {
            let positive = match tok.as_bytes()[0] {
                b'+' => true,
                b'-' => false,
                _ => return Err(line.err(col, format!("literal `{tok}` needs a + or - sign"))),
            };
            let var = number(&line, (col + 1, &tok[1..]))?;
            if var >= vars {
                return Err(line.err(col, format!("variable {var} not declared")));
            }
            *slot = Literal { var, positive };
        }
        clauses.push(clause);
        last = line;
    }
    ThreeSatInstance::new(vars, clauses).map_err(input_at(last, 1))
}

fn write_edges(out: &mut String, edges: &[(usize, usize)]) {
    for (r, b) in edges {
        let _ = writeln!(out, "edge {r} {b}");
    }
}

fn read_edges(lines: &mut Lines, red: usize, blue: usize) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    while let Some(line) = lines.next() {
        let vals = keyword(&line, "edge")?;
        let [r, b] = vals.as_slice() else {
            return Err(line.err(1, "an edge has a red and a blue endpoint"));
        };
        let (r, b): (usize, usize) = (number(&line, *r)?, number(&line, *b)?);
        if r >= red || b >= blue {
            return Err(line.err(1, format!("edge ({r}, {b}) outside the vertex ranges")));
        }
        edges.push((r, b));
    }
    Ok(edges)
}

pub fn write_rbds(src: &RbdsInstance) -> String {
    let mut out = format!(
        "{RBDS_HEADER}\nred {}\nblue {}\nk {}\n",
        src.red(),
        src.blue(),
        src.k()
    );
    write_edges(&mut out, src.edges());
    out
}

pub fn parse_rbds(text: &str) -> Result<RbdsInstance> {
    let mut lines = Lines::new(text);
    lines.expect_exact(RBDS_HEADER)?;
    let mut header = |key: &str| -> Result<usize> {
        let line = lines.expect(&format!("`{key} <count>`"))?;
        number(&line, single(&line, key)?)
    };
    let red = header("red")?;
    let blue = header("blue")?;
    let k = header("k")?;
    let edges = read_edges(&mut lines, red, blue)?;
    RbdsInstance::new(red, blue, k, edges)
}

pub fn write_lrbds(src: &LrbdsInstance) -> String {
    let labels: Vec<_> = src.labels().iter().map(|l| l.to_string()).collect();
    let mut out = format!("{LRBDS_HEADER}\nk {}\n", src.k());
    if labels.is_empty() {
        out.push_str("red-labels\n");
    } else {
        let _ = writeln!(out, "red-labels {}", labels.join(" "));
    }
    let _ = writeln!(out, "blue {}", src.blue());
    write_edges(&mut out, src.edges());
    out
}

pub fn parse_lrbds(text: &str) -> Result<LrbdsInstance> {
    let mut lines = Lines::new(text);
    lines.expect_exact(LRBDS_HEADER)?;
    let line = lines.expect("`k <K>`")?;
    let k: usize = number(&line, single(&line, "k")?)?;
    let line = lines.expect("`red-labels ...`")?;
    let mut labels = Vec::new();
    for tok in keyword(&line, "red-labels")? {
        let label: usize = number(&line, tok)?;
        if label == 0 || label > k {
            return Err(line.err(tok.0, format!("label {label} outside 1..={k}")));
        }
        labels.push(label);
    }
    let line = lines.expect("`blue <count>`")?;
    let blue: usize = number(&line, single(&line, "blue")?)?;
    let edges = read_edges(&mut lines, labels.len(), blue)?;
    LrbdsInstance::new(k, labels, blue, edges)
}
