//! Line-oriented poset and incidence files, plus a JSON mirror of each.
//!
//! ```text
//! # comment
//! poset NAME
//! elements a b c
//! relations covers
//! a < b
//! ```
//!
//! ```text
//! incidence NAME
//! rows x y
//! cols u v
//! pairs
//! x u
//! ```

use posetdim::{IncidenceStructure, Poset, RelationMode};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Covers,
    Pairs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub relations: Mode,
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceDocument {
    pub name: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Document {
    Poset(PosetDocument),
    Incidence(IncidenceDocument),
}

impl PosetDocument {
    pub fn from_poset(name: &str, p: &Poset) -> Self {
        PosetDocument {
            name: name.to_string(),
            elements: p.labels().to_vec(),
            relations: Mode::Covers,
            pairs: p
                .covers()
                .into_iter()
                .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
                .collect(),
        }
    }

    pub fn to_poset(&self) -> CliResult<Poset> {
        let mode = match self.relations {
            Mode::Covers => RelationMode::Covers,
            Mode::Pairs => RelationMode::Pairs,
        };
        Ok(Poset::from_relation(&self.elements, &self.pairs, mode)?)
    }
}

impl IncidenceDocument {
    pub fn from_incidence(name: &str, r: &IncidenceStructure) -> Self {
        IncidenceDocument {
            name: name.to_string(),
            rows: r.rows().to_vec(),
            cols: r.cols().to_vec(),
            pairs: r
                .pairs()
                .into_iter()
                .map(|(x, y)| (r.rows()[x].clone(), r.cols()[y].clone()))
                .collect(),
        }
    }

    pub fn to_incidence(&self) -> CliResult<IncidenceStructure> {
        Ok(IncidenceStructure::new(&self.rows, &self.cols, &self.pairs)?)
    }
}

/// A label is one non-empty token with no whitespace, `#` or `<`.
pub fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '#' || c == '<')
}

struct Line<'a> {
    number: usize,
    text: &'a str,
    /// Byte offset of each token plus the token.
    tokens: Vec<(usize, &'a str)>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (j, c) in body.char_indices() {
                match (c.is_whitespace(), start) {
                    (false, None) => start = Some(j),
                    (true, Some(s)) => {
                        tokens.push((s, &body[s..j]));
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some(s) = start {
                tokens.push((s, &body[s..]));
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                text: raw,
                tokens,
            })
        })
        .collect()
}

fn err_at(line: &Line, token: usize, message: impl Into<String>) -> CliError {
    let col = line.tokens.get(token).map_or(line.text.len(), |t| t.0) + 1;
    CliError::parse(line.number, col, message)
}

fn header<'a>(line: &Line<'a>, keyword: &str) -> CliResult<Vec<&'a str>> {
    if line.tokens[0].1 != keyword {
        return Err(err_at(line, 0, format!("expected `{keyword}`")));
    }
    let rest: Vec<&str> = line.tokens[1..].iter().map(|t| t.1).collect();
    for (i, l) in rest.iter().enumerate() {
        if !valid_label(l) {
            return Err(err_at(line, i + 1, format!("invalid label `{l}`")));
        }
    }
    Ok(rest)
}

fn name_of(line: &Line, keyword: &str) -> CliResult<String> {
    let rest = header(line, keyword)?;
    match rest.as_slice() {
        [n] => Ok(n.to_string()),
        _ => Err(err_at(line, 0, format!("`{keyword}` takes exactly one name"))),
    }
}

fn missing(what: &str) -> CliError {
    CliError::parse(0, 0, format!("missing `{what}` line"))
}

pub fn parse_poset_document(text: &str) -> CliResult<PosetDocument> {
    let ls = lines(text);
    let mut it = ls.iter();
    let name = name_of(it.next().ok_or_else(|| missing("poset"))?, "poset")?;
    let elements = header(it.next().ok_or_else(|| missing("elements"))?, "elements")?;
    let mline = it.next().ok_or_else(|| missing("relations"))?;
    let mode = match header(mline, "relations")?.as_slice() {
        ["covers"] => Mode::Covers,
        ["pairs"] => Mode::Pairs,
        _ => return Err(err_at(mline, 1, "expected `covers` or `pairs`")),
    };
    let mut pairs = Vec::new();
    for l in it {
        match l.tokens.as_slice() {
            [(_, a), (_, "<"), (_, b)] => {
                for (k, lab) in [(0, a), (2, b)] {
                    if !elements.contains(lab) {
                        return Err(err_at(l, k, format!("unknown element `{lab}`")));
                    }
                }
                pairs.push((a.to_string(), b.to_string()));
            }
            [_, (_, "<")] | [_] => return Err(err_at(l, l.tokens.len(), "expected `a < b`")),
            _ => return Err(err_at(l, 0, "expected `a < b`")),
        }
    }
    Ok(PosetDocument {
        name,
        elements: elements.iter().map(|s| s.to_string()).collect(),
        relations: mode,
        pairs,
    })
}

pub fn parse_incidence_document(text: &str) -> CliResult<IncidenceDocument> {
    let ls = lines(text);
    let mut it = ls.iter();
    let name = name_of(it.next().ok_or_else(|| missing("incidence"))?, "incidence")?;
    let rows = header(it.next().ok_or_else(|| missing("rows"))?, "rows")?;
    let cols = header(it.next().ok_or_else(|| missing("cols"))?, "cols")?;
    let pl = it.next().ok_or_else(|| missing("pairs"))?;
    if !header(pl, "pairs")?.is_empty() {
        return Err(err_at(pl, 1, "`pairs` takes no arguments"));
    }
    let mut pairs = Vec::new();
    for l in it {
        match l.tokens.as_slice() {
            [(_, x), (_, y)] => {
                if !rows.contains(x) {
                    return Err(err_at(l, 0, format!("unknown row `{x}`")));
                }
                if !cols.contains(y) {
                    return Err(err_at(l, 1, format!("unknown column `{y}`")));
                }
                pairs.push((x.to_string(), y.to_string()));
            }
            _ => return Err(err_at(l, 0, "expected `row col`")),
        }
    }
    Ok(IncidenceDocument {
        name,
        rows: rows.iter().map(|s| s.to_string()).collect(),
        cols: cols.iter().map(|s| s.to_string()).collect(),
        pairs,
    })
}

fn check_labels<'a>(labels: impl IntoIterator<Item = &'a String>) -> CliResult<()> {
    for l in labels {
        if !valid_label(l) {
            return Err(CliError::parse(1, 1, format!("invalid label `{l}`")));
        }
    }
    Ok(())
}

/// Either format, text or JSON (detected by a leading `{`).
pub fn parse_document(text: &str) -> CliResult<Document> {
    if text.trim_start().starts_with('{') {
        let doc: Document = serde_json::from_str(text)
            .map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))?;
        match &doc {
            Document::Poset(d) => check_labels(&d.elements)?,
            Document::Incidence(d) => check_labels(d.rows.iter().chain(&d.cols))?,
        }
        return Ok(doc);
    }
    let first = lines(text).into_iter().next().map(|l| l.tokens[0].1);
    match first {
        Some("incidence") => Ok(Document::Incidence(parse_incidence_document(text)?)),
        _ => Ok(Document::Poset(parse_poset_document(text)?)),
    }
}

pub fn parse_poset(text: &str) -> CliResult<Poset> {
    match parse_document(text)? {
        Document::Poset(d) => d.to_poset(),
        Document::Incidence(_) => Err(CliError::Usage("expected a poset, found an incidence structure".into())),
    }
}

pub fn parse_incidence(text: &str) -> CliResult<IncidenceStructure> {
    match parse_document(text)? {
        Document::Incidence(d) => d.to_incidence(),
        Document::Poset(_) => Err(CliError::Usage("expected an incidence structure, found a poset".into())),
    }
}

pub fn emit_poset_document(d: &PosetDocument) -> String {
    let mut out = format!("poset {}\nelements {}\nrelations ", d.name, d.elements.join(" "));
    out.push_str(match d.relations {
        Mode::Covers => "covers\n",
        Mode::Pairs => "pairs\n",
    });
    for (a, b) in &d.pairs {
        out.push_str(&format!("{a} < {b}\n"));
    }
    out
}

pub fn emit_poset(name: &str, p: &Poset) -> String {
    emit_poset_document(&PosetDocument::from_poset(name, p))
}

pub fn emit_incidence(name: &str, r: &IncidenceStructure) -> String {
    let d = IncidenceDocument::from_incidence(name, r);
    let mut out = format!("incidence {}\nrows {}\ncols {}\npairs\n", d.name, d.rows.join(" "), d.cols.join(" "));
    for (x, y) in &d.pairs {
        out.push_str(&format!("{x} {y}\n"));
    }
    out
}

pub fn emit_json(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialise")
}

#[cfg(test)]
mod tests {
    use super::*;
    use posetdim::random_poset;

    #[test]
    fn two_chain() {
        let p = parse_poset("poset t\nelements a b\nrelations covers\na < b\n").unwrap();
        assert!(p.is_chain());
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_poset("# header\n\nposet t # trailing\nelements a b c\nrelations pairs\na < c\n\nb < c\n").unwrap();
        assert_eq!(p.strict_pair_count(), 2);
    }

    #[test]
    fn round_trips() {
        for seed in 0..10 {
            let p = random_poset(6, 0.4, seed).unwrap();
            assert_eq!(parse_poset(&emit_poset("r", &p)).unwrap(), p);
            let json = emit_json(&Document::Poset(PosetDocument::from_poset("r", &p)));
            assert_eq!(parse_poset(&json).unwrap(), p);
        }
        let r = IncidenceStructure::new(&["x", "y"], &["u", "v"], &[("x", "u"), ("y", "v")]).unwrap();
        assert_eq!(parse_incidence(&emit_incidence("r", &r)).unwrap(), r);
        let json = emit_json(&Document::Incidence(IncidenceDocument::from_incidence("r", &r)));
        assert_eq!(parse_incidence(&json).unwrap(), r);
    }

    #[test]
    fn malformed_relation_reports_its_line() {
        let err = parse_poset("poset t\nelements a b\nrelations covers\na <\n").unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (4, 4)),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_poset("poset t\nelements a b\nrelations covers\na < z\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 4, column: 5, .. }));
        let err = parse_poset("poset t\nelements a b\nrelations sideways\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 3, .. }));
    }

    #[test]
    fn cycles_are_rejected() {
        let err = parse_poset("poset t\nelements a b\nrelations covers\na < b\nb < a\n").unwrap_err();
        assert!(matches!(err, CliError::Core(posetdim::Error::CycleDetected(..))));
    }

    #[test]
    fn bad_json_labels() {
        let json = r#"{"type":"poset","name":"t","elements":["a b"],"relations":"covers","pairs":[]}"#;
        assert!(matches!(parse_poset(json), Err(CliError::Parse { .. })));
    }
}
