//! The corpus DSL: a line-oriented description of groups, optional
//! automorphism actions, and golden expectations.
//!
//! Grammar (one entry per line, `#` starts a comment):
//!
//! ```text
//! group NAME = EXPR [with automorphism AUT] [expect KEY=INT{, KEY=INT}] [tags TAG...]
//! EXPR := cyclic(INT) | symmetric(INT) | alternating(INT) | dihedral(INT)
//!       | direct(EXPR, EXPR) | wreath(EXPR, EXPR)
//!       | psl2(INT) | agl1(INT) | gl2_vectors(INT)
//!       | perm_group("CYCLES"{, "CYCLES"})
//! AUT  := frobenius(INT) | perm("CYCLES") | inner("CYCLES")
//! ```
//!
//! `frobenius(e)` applies `x -> x^(p^e)` to the field of a top-level
//! `psl2`/`agl1` construction; `perm` extends the group by an explicit
//! normalizing permutation; `inner` acts by conjugation with a group
//! element. An entry tagged `noncoprime` is a negative control: it is kept
//! in the corpus with its failed witnesses instead of being rejected.

use num_bigint::BigUint;

use crate::action::CoprimeAction;
use crate::construct::{self, FrobeniusTarget};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A group-construction expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructExpr {
    Cyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    Dihedral(u64),
    Direct(Box<ConstructExpr>, Box<ConstructExpr>),
    Wreath(Box<ConstructExpr>, Box<ConstructExpr>),
    Psl2(u64),
    Agl1(u64),
    Gl2Vectors(u64),
    PermGroup(Vec<String>),
}

/// An automorphism expression attached to an entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismExpr {
    Frobenius(u64),
    Perm(String),
    Inner(String),
}

/// One parsed corpus entry.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub construction: ConstructExpr,
    pub automorphism: Option<AutomorphismExpr>,
    pub expect: Vec<(String, BigUint)>,
    pub tags: Vec<String>,
    pub line: usize,
}

impl CorpusEntry {
    /// Negative-control entries are expected to fail the coprimality check.
    pub fn expects_coprime(&self) -> bool {
        !self.tags.iter().any(|t| t == "noncoprime")
    }
}

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(BigUint),
    Str(String),
    LParen,
    RParen,
    Comma,
    Equals,
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Lexer {
            text: text.as_bytes(),
            pos: 0,
            line,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn next_token(&mut self) -> Result<Option<(Token, usize)>> {
        while self.pos < self.text.len() && (self.text[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.text.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.text[self.pos] as char;
        let token = match c {
            '(' => {
                self.pos += 1;
                Token::LParen
            }
            ')' => {
                self.pos += 1;
                Token::RParen
            }
            ',' => {
                self.pos += 1;
                Token::Comma
            }
            '=' => {
                self.pos += 1;
                Token::Equals
            }
            '"' => {
                self.pos += 1;
                let begin = self.pos;
                while self.pos < self.text.len() && self.text[self.pos] != b'"' {
                    self.pos += 1;
                }
                if self.pos >= self.text.len() {
                    return Err(self.error("unterminated string"));
                }
                let s = std::str::from_utf8(&self.text[begin..self.pos])
                    .map_err(|_| self.error("invalid utf-8 in string"))?
                    .to_string();
                self.pos += 1;
                Token::Str(s)
            }
            c if c.is_ascii_digit() => {
                while self.pos < self.text.len() && (self.text[self.pos] as char).is_ascii_digit()
                {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                Token::Int(digits.parse().map_err(|_| self.error("bad integer"))?)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while self.pos < self.text.len() {
                    let ch = self.text[self.pos] as char;
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                Token::Ident(
                    std::str::from_utf8(&self.text[start..self.pos])
                        .unwrap()
                        .to_string(),
                )
            }
            other => return Err(self.error(format!("unexpected character `{other}`"))),
        };
        Ok(Some((token, start + 1)))
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    tokens: Vec<(Token, usize)>,
    at: usize,
    line: usize,
}

impl Parser {
    fn error_at(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col,
            msg: msg.into(),
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let col = self
            .tokens
            .get(self.at)
            .or_else(|| self.tokens.last())
            .map_or(1, |(_, c)| *c);
        self.error_at(col, msg)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(t, _)| t.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<()> {
        match self.next() {
            Some(t) if t == *want => Ok(()),
            _ => {
                self.at = self.at.saturating_sub(1);
                Err(self.error(format!("expected {what}")))
            }
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String> {
        match self.next() {
            Some(Token::Ident(s)) => Ok(s),
            _ => {
                self.at = self.at.saturating_sub(1);
                Err(self.error(format!("expected {what}")))
            }
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        let got = self.expect_ident(&format!("keyword `{kw}`"))?;
        if got != kw {
            self.at -= 1;
            return Err(self.error(format!("expected keyword `{kw}`, found `{got}`")));
        }
        Ok(())
    }

    fn expect_int(&mut self, what: &str) -> Result<BigUint> {
        match self.next() {
            Some(Token::Int(n)) => Ok(n),
            _ => {
                self.at = self.at.saturating_sub(1);
                Err(self.error(format!("expected {what}")))
            }
        }
    }

    fn int_arg_u64(&mut self, ctor: &str) -> Result<u64> {
        use num_traits::ToPrimitive;
        let n = self.expect_int(&format!("integer argument for `{ctor}`"))?;
        n.to_u64()
            .ok_or_else(|| self.error(format!("argument of `{ctor}` is too large")))
    }

    fn parse_expr(&mut self) -> Result<ConstructExpr> {
        let name = self.expect_ident("a constructor name")?;
        self.expect(&Token::LParen, &format!("`(` after `{name}`"))?;
        let expr = match name.as_str() {
            "cyclic" => ConstructExpr::Cyclic(self.int_arg_u64("cyclic")?),
            "symmetric" => ConstructExpr::Symmetric(self.int_arg_u64("symmetric")?),
            "alternating" => ConstructExpr::Alternating(self.int_arg_u64("alternating")?),
            "dihedral" => ConstructExpr::Dihedral(self.int_arg_u64("dihedral")?),
            "psl2" => ConstructExpr::Psl2(self.int_arg_u64("psl2")?),
            "agl1" => ConstructExpr::Agl1(self.int_arg_u64("agl1")?),
            "gl2_vectors" => ConstructExpr::Gl2Vectors(self.int_arg_u64("gl2_vectors")?),
            "direct" | "wreath" => {
                let a = self.parse_expr()?;
                self.expect(&Token::Comma, &format!("`,` between `{name}` arguments"))?;
                let b = self.parse_expr()?;
                if name == "direct" {
                    ConstructExpr::Direct(Box::new(a), Box::new(b))
                } else {
                    ConstructExpr::Wreath(Box::new(a), Box::new(b))
                }
            }
            "perm_group" => {
                let mut strings = Vec::new();
                loop {
                    match self.next() {
                        Some(Token::Str(s)) => strings.push(s),
                        _ => {
                            self.at = self.at.saturating_sub(1);
                            return Err(self.error("expected a quoted cycle string"));
                        }
                    }
                    match self.peek() {
                        Some(Token::Comma) => {
                            self.next();
                        }
                        _ => break,
                    }
                }
                ConstructExpr::PermGroup(strings)
            }
            other => return Err(self.error(format!("unknown constructor `{other}`"))),
        };
        match self.peek() {
            Some(Token::RParen) => {
                self.next();
            }
            Some(Token::Comma) => {
                return Err(self.error(format!("too many arguments for `{name}`")))
            }
            _ => return Err(self.error(format!("expected `)` to close `{name}`"))),
        }
        Ok(expr)
    }

    fn parse_automorphism(&mut self) -> Result<AutomorphismExpr> {
        let name = self.expect_ident("an automorphism kind")?;
        self.expect(&Token::LParen, &format!("`(` after `{name}`"))?;
        let expr = match name.as_str() {
            "frobenius" => AutomorphismExpr::Frobenius(self.int_arg_u64("frobenius")?),
            "perm" | "inner" => {
                let s = match self.next() {
                    Some(Token::Str(s)) => s,
                    _ => {
                        self.at = self.at.saturating_sub(1);
                        return Err(self.error("expected a quoted cycle string"));
                    }
                };
                if name == "perm" {
                    AutomorphismExpr::Perm(s)
                } else {
                    AutomorphismExpr::Inner(s)
                }
            }
            other => return Err(self.error(format!("unknown automorphism kind `{other}`"))),
        };
        self.expect(&Token::RParen, &format!("`)` to close `{name}`"))?;
        Ok(expr)
    }

    fn parse_entry(&mut self) -> Result<CorpusEntry> {
        self.expect_keyword("group")?;
        let name = self.expect_ident("a group name")?;
        self.expect(&Token::Equals, "`=` after the group name")?;
        let construction = self.parse_expr()?;
        let mut automorphism = None;
        let mut expect = Vec::new();
        let mut tags = Vec::new();
        while let Some(token) = self.next() {
            match token {
                Token::Ident(kw) if kw == "with" => {
                    self.expect_keyword("automorphism")?;
                    automorphism = Some(self.parse_automorphism()?);
                }
                Token::Ident(kw) if kw == "expect" => loop {
                    let key = self.expect_ident("an invariant name")?;
                    self.expect(&Token::Equals, "`=` in an expectation")?;
                    let value = self.expect_int("an integer expectation")?;
                    expect.push((key, value));
                    match self.peek() {
                        Some(Token::Comma) => {
                            self.next();
                        }
                        _ => break,
                    }
                },
                Token::Ident(kw) if kw == "tags" => {
                    while let Some(Token::Ident(_)) = self.peek() {
                        if let Some(Token::Ident(tag)) = self.next() {
                            tags.push(tag);
                        }
                    }
                }
                _ => {
                    self.at = self.at.saturating_sub(1);
                    return Err(self.error("expected `with`, `expect`, `tags` or end of line"));
                }
            }
        }
        Ok(CorpusEntry {
            name,
            construction,
            automorphism,
            expect,
            tags,
            line: self.line,
        })
    }
}

/// Parses a corpus file into entries, reporting errors with line and column.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut lexer = Lexer::new(line, lineno + 1);
        let mut tokens = Vec::new();
        while let Some(tok) = lexer.next_token()? {
            tokens.push(tok);
        }
        let mut parser = Parser {
            tokens,
            at: 0,
            line: lineno + 1,
        };
        entries.push(parser.parse_entry()?);
    }
    let mut names = std::collections::HashSet::new();
    for e in &entries {
        if !names.insert(e.name.clone()) {
            return Err(Error::Parse {
                line: e.line,
                col: 1,
                msg: format!("duplicate group name `{}`", e.name),
            });
        }
    }
    Ok(entries)
}

// ---------------------------------------------------------------------------
// Elaboration
// ---------------------------------------------------------------------------

/// A corpus entry turned into concrete group values.
#[derive(Debug, Clone)]
pub struct ElaboratedEntry {
    pub name: String,
    pub group: PermGroup,
    pub action: Option<CoprimeAction>,
    pub expect: Vec<(String, BigUint)>,
    pub tags: Vec<String>,
    pub expects_coprime: bool,
}

/// Field context carried out of a top-level `psl2`/`agl1` construction.
struct FieldContext {
    field: FieldSpec,
    target: FrobeniusTarget,
}

fn eval_expr(expr: &ConstructExpr) -> Result<(PermGroup, Option<FieldContext>)> {
    match expr {
        ConstructExpr::Cyclic(n) => Ok((construct::cyclic(*n)?, None)),
        ConstructExpr::Symmetric(n) => Ok((construct::symmetric(*n)?, None)),
        ConstructExpr::Alternating(n) => Ok((construct::alternating(*n)?, None)),
        ConstructExpr::Dihedral(n) => Ok((construct::dihedral(*n)?, None)),
        ConstructExpr::Direct(a, b) => {
            let (ga, _) = eval_expr(a)?;
            let (gb, _) = eval_expr(b)?;
            Ok((construct::direct_product(&ga, &gb), None))
        }
        ConstructExpr::Wreath(a, b) => {
            let (ga, _) = eval_expr(a)?;
            let (gb, _) = eval_expr(b)?;
            Ok((construct::wreath_product(&ga, &gb), None))
        }
        ConstructExpr::Psl2(q) => {
            let field = FieldSpec::for_order(*q)?;
            let group = construct::psl2(&field)?;
            Ok((
                group,
                Some(FieldContext {
                    field,
                    target: FrobeniusTarget::ProjectiveLine,
                }),
            ))
        }
        ConstructExpr::Agl1(q) => {
            let field = FieldSpec::for_order(*q)?;
            let group = construct::agl1(&field)?;
            Ok((
                group,
                Some(FieldContext {
                    field,
                    target: FrobeniusTarget::AffineLine,
                }),
            ))
        }
        ConstructExpr::Gl2Vectors(q) => {
            let field = FieldSpec::for_order(*q)?;
            Ok((construct::gl2_vectors(&field)?, None))
        }
        ConstructExpr::PermGroup(strings) => {
            let mut degree = 1;
            let mut parsed = Vec::new();
            for s in strings {
                let p = Permutation::parse_cycles_auto(s)?;
                degree = degree.max(p.degree());
                parsed.push(s.clone());
            }
            let gens = parsed
                .iter()
                .map(|s| Permutation::parse_cycles(s, degree))
                .collect::<Result<Vec<_>>>()?;
            Ok((PermGroup::new(degree, gens)?, None))
        }
    }
}

/// Builds the group and, when present, the action of a parsed entry.
pub fn elaborate(entry: &CorpusEntry) -> Result<ElaboratedEntry> {
    let (group, field_ctx) = eval_expr(&entry.construction)?;
    let action = match &entry.automorphism {
        None => None,
        Some(AutomorphismExpr::Frobenius(e)) => {
            let ctx = field_ctx.as_ref().ok_or_else(|| {
                Error::invalid(format!(
                    "entry `{}`: frobenius needs a psl2 or agl1 construction",
                    entry.name
                ))
            })?;
            let e = u32::try_from(*e)
                .map_err(|_| Error::invalid("frobenius exponent too large"))?;
            let phi = construct::frobenius_automorphism(&ctx.field, ctx.target, e)?;
            let ambient = construct::extend_by(&group, &phi)?;
            Some(CoprimeAction::build(
                ambient,
                group.generators().to_vec(),
                vec![phi],
            )?)
        }
        Some(AutomorphismExpr::Perm(s)) => {
            let phi = Permutation::parse_cycles(s, group.degree())?;
            let ambient = construct::extend_by(&group, &phi)?;
            Some(CoprimeAction::build(
                ambient,
                group.generators().to_vec(),
                vec![phi],
            )?)
        }
        Some(AutomorphismExpr::Inner(s)) => {
            let phi = Permutation::parse_cycles(s, group.degree())?;
            if !group.checked_contains(&phi)? {
                return Err(Error::invalid(format!(
                    "entry `{}`: inner automorphism element is not in the group",
                    entry.name
                )));
            }
            Some(CoprimeAction::build(
                group.clone(),
                group.generators().to_vec(),
                vec![phi],
            )?)
        }
    };
    Ok(ElaboratedEntry {
        name: entry.name.clone(),
        group,
        action,
        expect: entry.expect.clone(),
        tags: entry.tags.clone(),
        expects_coprime: entry.expects_coprime(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_simple_entry() {
        let entries = parse_corpus("group S5 = symmetric(5)\n").unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].name, "S5");
        assert_eq!(entries[0].construction, ConstructExpr::Symmetric(5));
    }

    #[test]
    fn parses_nested_constructions_and_goldens() {
        let entries =
            parse_corpus("group W = wreath(alternating(5), cyclic(2)) expect lambda=1, order=7200\n")
                .unwrap();
        let e = &entries[0];
        assert_eq!(
            e.construction,
            ConstructExpr::Wreath(
                Box::new(ConstructExpr::Alternating(5)),
                Box::new(ConstructExpr::Cyclic(2))
            )
        );
        assert_eq!(e.expect.len(), 2);
        assert_eq!(e.expect[0], ("lambda".to_string(), 1u32.into()));
    }

    #[test]
    fn arity_errors_are_located() {
        let err = parse_corpus("group Bad = wreath(alternating(5))\n").unwrap_err();
        match err {
            Error::Parse { line, col, msg } => {
                assert_eq!(line, 1);
                assert!(col > 1);
                assert!(msg.contains("`,`"), "message was: {msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_constructors_are_located() {
        let err = parse_corpus("group Bad = sporadic(5)\n").unwrap_err();
        match err {
            Error::Parse { line, msg, .. } => {
                assert_eq!(line, 1);
                assert!(msg.contains("sporadic"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# corpus\n\ngroup A = cyclic(3) # trailing\n";
        assert_eq!(parse_corpus(text).unwrap().len(), 1);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        assert!(parse_corpus("group A = cyclic(3)\ngroup A = cyclic(5)\n").is_err());
    }

    #[test]
    fn elaborates_actions() {
        let text = "group P = psl2(32) with automorphism frobenius(1)\n";
        let entry = &parse_corpus(text).unwrap()[0];
        let e = elaborate(entry).unwrap();
        assert_eq!(e.group.order(), 32736u32.into());
        let act = e.action.unwrap();
        assert!(act.is_coprime());
        assert!(act.is_semidirect());
        assert_eq!(*act.a_order(), 5u32.into());
    }

    #[test]
    fn elaborates_explicit_permutation_actions() {
        let text = "group C5 = cyclic(5) with automorphism perm(\"(1 4)(2 3)\")\n";
        let e = elaborate(&parse_corpus(text).unwrap()[0]).unwrap();
        let act = e.action.unwrap();
        assert_eq!(act.ambient().order(), 10u32.into());
        assert!(act.is_coprime());
    }

    #[test]
    fn inner_actions_fail_coprimality_but_elaborate() {
        let text = "group A5i = alternating(5) with automorphism inner(\"(0 1)(2 3)\") tags noncoprime\n";
        let entry = &parse_corpus(text).unwrap()[0];
        assert!(!entry.expects_coprime());
        let e = elaborate(entry).unwrap();
        let act = e.action.unwrap();
        assert!(!act.is_coprime());
        assert!(!act.is_semidirect());
    }

    #[test]
    fn perm_group_construction_infers_degree() {
        let text = "group V = perm_group(\"(0 1)(2 3)\", \"(0 2)(1 3)\")\n";
        let e = elaborate(&parse_corpus(text).unwrap()[0]).unwrap();
        assert_eq!(e.group.degree(), 4);
        assert_eq!(e.group.order(), 4u32.into());
    }

    #[test]
    fn frobenius_on_a_plain_construction_is_rejected() {
        let text = "group X = symmetric(4) with automorphism frobenius(1)\n";
        let entry = &parse_corpus(text).unwrap()[0];
        assert!(elaborate(entry).is_err());
    }
}
