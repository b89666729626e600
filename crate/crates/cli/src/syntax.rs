//! Lexer and recursive-descent parser for the input language.
//!
//! ```text
//! quiver QA { vertices: 1 2 3 4; arrow a: 1 -> 3; arrow b: 2 -> 3; arrow c: 3 -> 4; }
//! rep W over QA { dim 1 = 1; dim 3 = 2; map a = [[1],[0]]; }
//! morphism alpha: QP -> QA { vertex 3a -> 3; arrow c1 -> c; }
//! ```

use std::collections::HashSet;
use std::sync::Arc;

use quiverrank::{parse_rational, Matrix, Quiver, QuiverMorphism, Rational, Representation};
use thiserror::Error;

use crate::document::{Document, MorphismEntry, RepEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line: pos.line, col: pos.col, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Equals,
    Arrow,
    Minus,
    Slash,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Slash => "`/`".into(),
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
            continue;
        }
        if is_word_char(c) {
            let mut w = String::new();
            while chars.peek().is_some_and(|&c| is_word_char(c)) {
                w.push(bump(&mut chars).expect("peeked"));
            }
            out.push((Tok::Word(w), pos));
            continue;
        }
        bump(&mut chars);
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            ':' => Tok::Colon,
            '=' => Tok::Equals,
            '/' => Tok::Slash,
            '-' if chars.peek() == Some(&'>') => {
                bump(&mut chars);
                Tok::Arrow
            }
            '-' => Tok::Minus,
            other => return err(pos, format!("unexpected character `{other}`")),
        };
        out.push((tok, pos));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn next(&mut self, what: &str) -> Result<(Tok, Pos), ParseError> {
        match self.toks.get(self.at) {
            Some(t) => {
                self.at += 1;
                Ok(t.clone())
            }
            None => err(self.end, format!("expected {what}, found end of input")),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, ParseError> {
        let (t, pos) = self.next(&tok.describe())?;
        if t != tok {
            return err(pos, format!("expected {}, found {}", tok.describe(), t.describe()));
        }
        Ok(pos)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.next(what)? {
            (Tok::Word(w), pos) => Ok((w, pos)),
            (t, pos) => err(pos, format!("expected {what}, found {}", t.describe())),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<Pos, ParseError> {
        let (w, pos) = self.word(&format!("`{kw}`"))?;
        if w != kw {
            return err(pos, format!("expected `{kw}`, found `{w}`"));
        }
        Ok(pos)
    }

    fn natural(&mut self) -> Result<usize, ParseError> {
        let (w, pos) = self.word("a dimension")?;
        w.parse().or_else(|_| err(pos, format!("`{w}` is not a natural number")))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let pos = self.pos();
        let mut text = String::new();
        if self.eat(&Tok::Minus) {
            text.push('-');
        }
        text.push_str(&self.word("a number")?.0);
        if self.eat(&Tok::Slash) {
            text.push('/');
            text.push_str(&self.word("a denominator")?.0);
        }
        parse_rational(&text).map_or_else(|| err(pos, format!("`{text}` is not a rational number")), Ok)
    }

    /// `[[r, ...], ...]` as its rows; `[]` has no rows.
    fn matrix(&mut self) -> Result<Vec<Vec<Rational>>, ParseError> {
        self.expect(Tok::LBracket)?;
        let mut rows = Vec::new();
        if self.eat(&Tok::RBracket) {
            return Ok(rows);
        }
        loop {
            self.expect(Tok::LBracket)?;
            let mut row = Vec::new();
            if !self.eat(&Tok::RBracket) {
                loop {
                    row.push(self.rational()?);
                    if self.eat(&Tok::RBracket) {
                        break;
                    }
                    self.expect(Tok::Comma)?;
                }
            }
            rows.push(row);
            if self.eat(&Tok::RBracket) {
                return Ok(rows);
            }
            self.expect(Tok::Comma)?;
        }
    }
}

/// Parses a whole document, resolving every cross-reference.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let toks = lex(text)?;
    let lines = text.split('\n').collect::<Vec<_>>();
    let end = Pos { line: lines.len(), col: lines.last().map_or(0, |l| l.chars().count()) + 1 };
    let mut p = Parser { toks, at: 0, end };
    let mut doc = Document::default();
    while p.peek().is_some() {
        let (kw, pos) = p.word("`quiver`, `rep` or `morphism`")?;
        match kw.as_str() {
            "quiver" => parse_quiver(&mut p, &mut doc)?,
            "rep" => parse_rep(&mut p, &mut doc)?,
            "morphism" => parse_morphism(&mut p, &mut doc)?,
            other => return err(pos, format!("expected `quiver`, `rep` or `morphism`, found `{other}`")),
        }
    }
    Ok(doc)
}

fn parse_quiver(p: &mut Parser, doc: &mut Document) -> Result<(), ParseError> {
    let (name, name_pos) = p.word("a quiver name")?;
    if doc.quiver(&name).is_some() {
        return err(name_pos, format!("duplicate quiver `{name}`"));
    }
    p.expect(Tok::LBrace)?;
    p.keyword("vertices")?;
    p.expect(Tok::Colon)?;
    let mut vertices: Vec<String> = Vec::new();
    while !p.eat(&Tok::Semi) {
        p.eat(&Tok::Comma);
        let (v, pos) = p.word("a vertex name")?;
        if vertices.contains(&v) {
            return err(pos, format!("duplicate vertex `{v}`"));
        }
        vertices.push(v);
    }
    if vertices.is_empty() {
        return err(name_pos, format!("quiver `{name}` has no vertices"));
    }
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    while !p.eat(&Tok::RBrace) {
        p.keyword("arrow")?;
        let (a, pos) = p.word("an arrow name")?;
        if arrows.iter().any(|(b, _, _)| *b == a) {
            return err(pos, format!("duplicate arrow `{a}`"));
        }
        p.expect(Tok::Colon)?;
        let (t, tpos) = p.word("a vertex name")?;
        p.expect(Tok::Arrow)?;
        let (h, hpos) = p.word("a vertex name")?;
        for (v, vpos) in [(&t, tpos), (&h, hpos)] {
            if !vertices.contains(v) {
                return err(vpos, format!("unknown vertex `{v}` in quiver `{name}`"));
            }
        }
        p.expect(Tok::Semi)?;
        arrows.push((a, t, h));
    }
    let q = Quiver::new(
        vertices.iter().map(String::as_str),
        arrows.iter().map(|(a, t, h)| (a.as_str(), t.as_str(), h.as_str())),
    )
    .or_else(|e| err(name_pos, e.to_string()))?;
    doc.quivers.push((name, Arc::new(q)));
    Ok(())
}

fn parse_rep(p: &mut Parser, doc: &mut Document) -> Result<(), ParseError> {
    let (name, name_pos) = p.word("a representation name")?;
    if doc.rep(&name).is_some() {
        return err(name_pos, format!("duplicate representation `{name}`"));
    }
    p.keyword("over")?;
    let (qname, qpos) = p.word("a quiver name")?;
    let q = match doc.quiver(&qname) {
        Some(q) => q.clone(),
        None => return err(qpos, format!("unknown quiver `{qname}`")),
    };
    p.expect(Tok::LBrace)?;
    let mut dims = vec![0; q.num_vertices()];
    let mut seen_dims = HashSet::new();
    let mut maps: Vec<Option<(Vec<Vec<Rational>>, Pos)>> = vec![None; q.num_arrows()];
    while !p.eat(&Tok::RBrace) {
        let (kw, kpos) = p.word("`dim` or `map`")?;
        match kw.as_str() {
            "dim" => {
                let (v, vpos) = p.word("a vertex name")?;
                let Some(i) = q.vertex_index(&v) else {
                    return err(vpos, format!("unknown vertex `{v}` in quiver `{qname}`"));
                };
                if !seen_dims.insert(i) {
                    return err(vpos, format!("dimension at `{v}` given twice"));
                }
                p.expect(Tok::Equals)?;
                dims[i] = p.natural()?;
            }
            "map" => {
                let (a, apos) = p.word("an arrow name")?;
                let Some(i) = q.arrow_index(&a) else {
                    return err(apos, format!("unknown arrow `{a}` in quiver `{qname}`"));
                };
                if maps[i].is_some() {
                    return err(apos, format!("map for arrow `{a}` given twice"));
                }
                p.expect(Tok::Equals)?;
                maps[i] = Some((p.matrix()?, apos));
            }
            other => return err(kpos, format!("expected `dim` or `map`, found `{other}`")),
        }
        p.expect(Tok::Semi)?;
    }
    let mut mats = Vec::with_capacity(q.num_arrows());
    for (i, arrow) in q.arrows().iter().enumerate() {
        let (h, t) = (dims[arrow.head], dims[arrow.tail]);
        let m = match maps[i].take() {
            None if h == 0 || t == 0 => Matrix::zeros(h, t),
            None => return err(name_pos, format!("map for arrow `{}` is missing", arrow.name)),
            Some((rows, apos)) => {
                let r = rows.len();
                let c = if r == 0 { t } else { rows[0].len() };
                if r != h || c != t || rows.iter().any(|row| row.len() != c) {
                    let found = if rows.iter().any(|row| row.len() != c) {
                        "rows of different lengths".to_string()
                    } else {
                        format!("{r}x{c}")
                    };
                    return err(
                        apos,
                        format!("dimension mismatch for arrow `{}`: expected {h}x{t}, found {found}", arrow.name),
                    );
                }
                Matrix::new(h, t, rows.into_iter().flatten().collect()).expect("shape checked")
            }
        };
        mats.push(m);
    }
    let rep = Representation::new(q, dims, mats).or_else(|e| err(name_pos, e.to_string()))?;
    doc.reps.push(RepEntry { name, quiver: qname, rep });
    Ok(())
}

fn parse_morphism(p: &mut Parser, doc: &mut Document) -> Result<(), ParseError> {
    let (name, name_pos) = p.word("a morphism name")?;
    if doc.morphism(&name).is_some() {
        return err(name_pos, format!("duplicate morphism `{name}`"));
    }
    p.expect(Tok::Colon)?;
    let mut ends = Vec::new();
    for i in 0..2 {
        if i == 1 {
            p.expect(Tok::Arrow)?;
        }
        let (qname, qpos) = p.word("a quiver name")?;
        match doc.quiver(&qname) {
            Some(q) => ends.push((qname, q.clone())),
            None => return err(qpos, format!("unknown quiver `{qname}`")),
        }
    }
    let (target, target_q) = ends.pop().expect("two ends");
    let (source, source_q) = ends.pop().expect("two ends");
    p.expect(Tok::LBrace)?;
    let mut vertices: Vec<(String, String)> = Vec::new();
    let mut arrows: Vec<(String, String)> = Vec::new();
    while !p.eat(&Tok::RBrace) {
        let (kw, kpos) = p.word("`vertex` or `arrow`")?;
        let (from, fpos) = p.word("a source name")?;
        p.expect(Tok::Arrow)?;
        let (to, tpos) = p.word("a target name")?;
        match kw.as_str() {
            "vertex" => {
                if source_q.vertex_index(&from).is_none() {
                    return err(fpos, format!("unknown vertex `{from}` in quiver `{source}`"));
                }
                if target_q.vertex_index(&to).is_none() {
                    return err(tpos, format!("unknown vertex `{to}` in quiver `{target}`"));
                }
                vertices.push((from, to));
            }
            "arrow" => {
                if source_q.arrow_index(&from).is_none() {
                    return err(fpos, format!("unknown arrow `{from}` in quiver `{source}`"));
                }
                if target_q.arrow_index(&to).is_none() {
                    return err(tpos, format!("unknown arrow `{to}` in quiver `{target}`"));
                }
                arrows.push((from, to));
            }
            other => return err(kpos, format!("expected `vertex` or `arrow`, found `{other}`")),
        }
        p.expect(Tok::Semi)?;
    }
    let morphism = QuiverMorphism::from_names(source_q, target_q, &name_pairs(&vertices), &name_pairs(&arrows))
        .or_else(|e| err(name_pos, e.to_string()))?;
    doc.morphisms.push(MorphismEntry { name, source, target, morphism });
    Ok(())
}

fn name_pairs(v: &[(String, String)]) -> Vec<(&str, &str)> {
    v.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}
