//! The line-oriented `.gq` quiver format.
//!
//! ```text
//! # comments run to the end of the line
//! quiver NAME
//! vertex ID [ID ...]
//! arrow NAME : SRC -> TGT
//! rel B . A        # the composite "A then B" lies in I; needs t(A) = s(B)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, ParseError, ParseErrorKind};
use crate::presentation::{Quiver, RelationSet};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Dot,
    To,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn is_ident_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, ':' | '.' | '#')
}

fn lex(line: &str, line_no: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c == '#' {
            break;
        } else if c.is_whitespace() {
            i += 1;
        } else if c == ':' {
            tokens.push(Token {
                tok: Tok::Colon,
                column,
            });
            i += 1;
        } else if c == '.' {
            tokens.push(Token {
                tok: Tok::Dot,
                column,
            });
            i += 1;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            tokens.push(Token {
                tok: Tok::To,
                column,
            });
            i += 2;
        } else if is_ident_char(c) {
            let start = i;
            while i < chars.len()
                && is_ident_char(chars[i])
                && !(chars[i] == '-' && chars.get(i + 1) == Some(&'>'))
            {
                i += 1;
            }
            tokens.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
        } else {
            return Err(ParseError {
                line: line_no,
                column,
                kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
            });
        }
    }
    Ok(tokens)
}

struct LineParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    end_column: usize,
}

impl LineParser<'_> {
    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column,
            kind,
        }
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.column)
            .unwrap_or(self.end_column)
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        match self.tokens.get(self.pos) {
            Some(Token {
                tok: Tok::Ident(s),
                column,
            }) => {
                self.pos += 1;
                Ok((s.clone(), *column))
            }
            _ => Err(self.err(
                self.here(),
                ParseErrorKind::Syntax(format!("expected {what}")),
            )),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) if t.tok == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(
                self.here(),
                ParseErrorKind::Syntax(format!("expected `{what}`")),
            )),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.tokens.len() {
            Err(self.err(
                self.here(),
                ParseErrorKind::Syntax("unexpected trailing input".into()),
            ))
        } else {
            Ok(())
        }
    }
}

/// Parses `.gq` text into a quiver and its relation set. Declaration order is
/// preserved. Relations may only mention arrows declared on earlier lines.
pub fn parse(text: &str) -> Result<(Quiver, RelationSet), ParseError> {
    let mut quiver = Quiver::new("Q");
    let mut named = false;
    let mut relations = RelationSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens = lex(raw, line)?;
        if tokens.is_empty() {
            continue;
        }
        let mut p = LineParser {
            tokens: &tokens,
            pos: 0,
            line,
            end_column: raw.chars().count() + 1,
        };
        let (keyword, kw_col) = p.ident("a keyword")?;
        match keyword.as_str() {
            "quiver" => {
                if named {
                    return Err(p.err(kw_col, ParseErrorKind::DuplicateQuiverName));
                }
                let (name, _) = p.ident("a quiver name")?;
                p.finish()?;
                quiver.set_name(name);
                named = true;
            }
            "vertex" => {
                let (first, col) = p.ident("a vertex identifier")?;
                let mut ids = vec![(first, col)];
                while p.pos < tokens.len() {
                    ids.push(p.ident("a vertex identifier")?);
                }
                for (id, col) in ids {
                    quiver
                        .add_vertex(&id)
                        .map_err(|_| p.err(col, ParseErrorKind::DuplicateName(id.clone())))?;
                }
            }
            "arrow" => {
                let (name, name_col) = p.ident("an arrow name")?;
                p.expect(Tok::Colon, ":")?;
                let (src, src_col) = p.ident("a source vertex")?;
                p.expect(Tok::To, "->")?;
                let (tgt, tgt_col) = p.ident("a target vertex")?;
                p.finish()?;
                if quiver.arrow_id(&name).is_some() {
                    return Err(p.err(name_col, ParseErrorKind::DuplicateName(name)));
                }
                for (v, col) in [(&src, src_col), (&tgt, tgt_col)] {
                    if quiver.vertex_id(v).is_none() {
                        return Err(p.err(col, ParseErrorKind::UndeclaredVertex(v.clone())));
                    }
                }
                quiver
                    .add_arrow(&name, &src, &tgt)
                    .map_err(|e| p.err(name_col, ParseErrorKind::Syntax(e.to_string())))?;
            }
            "rel" => {
                let (second, second_col) = p.ident("an arrow name")?;
                p.expect(Tok::Dot, ".")?;
                let (first, first_col) = p.ident("an arrow name")?;
                p.finish()?;
                let lookup = |name: &str, col: usize| {
                    quiver.arrow_id(name).ok_or_else(|| {
                        p.err(col, ParseErrorKind::UndeclaredArrow(name.to_string()))
                    })
                };
                let b = lookup(&second, second_col)?;
                let a = lookup(&first, first_col)?;
                relations.insert(&quiver, a, b).map_err(|e| {
                    let kind = match e {
                        Error::NotComposable { .. } => ParseErrorKind::NotComposable {
                            first: first.clone(),
                            second: second.clone(),
                            first_target: quiver.vertex_name(quiver.target(a)).to_string(),
                            second_source: quiver.vertex_name(quiver.source(b)).to_string(),
                        },
                        _ => ParseErrorKind::DuplicateRelation {
                            first: first.clone(),
                            second: second.clone(),
                        },
                    };
                    p.err(kw_col, kind)
                })?;
            }
            other => {
                return Err(p.err(
                    kw_col,
                    ParseErrorKind::Syntax(format!("unknown keyword `{other}`")),
                ))
            }
        }
    }
    Ok((quiver, relations))
}

/// Canonical serialization: one `vertex` line, then arrows and relations in
/// declaration order. `parse(&to_dsl(q, r))` reproduces `(q, r)`.
pub fn to_dsl(quiver: &Quiver, relations: &RelationSet) -> String {
    let mut out = String::new();
    writeln!(out, "quiver {}", quiver.name()).unwrap();
    if quiver.vertex_count() > 0 {
        writeln!(out, "vertex {}", quiver.vertex_names().join(" ")).unwrap();
    }
    for arrow in quiver.arrows() {
        writeln!(
            out,
            "arrow {} : {} -> {}",
            arrow.name,
            quiver.vertex_name(arrow.source),
            quiver.vertex_name(arrow.target)
        )
        .unwrap();
    }
    for &(a, b) in relations.pairs() {
        writeln!(
            out,
            "rel {} . {}",
            quiver.arrow_name(b),
            quiver.arrow_name(a)
        )
        .unwrap();
    }
    out
}
