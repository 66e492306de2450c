use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    Newline,
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        col,
        msg: msg.into(),
    })
}

/// Splits `text` into tokens; `#` starts a comment running to the end of the line.
/// Newlines are kept as tokens only when `keep_newlines` is set.
pub fn tokenize(text: &str, keep_newlines: bool) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l0, c0) = (line, col);
        if ch == '\n' {
            chars.next();
            if keep_newlines {
                out.push(Token { tok: Tok::Newline, line: l0, col: c0 });
            }
            line += 1;
            col = 1;
        } else if ch.is_whitespace() {
            chars.next();
            col += 1;
        } else if ch == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
                col += 1;
            }
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Int(s), line: l0, col: c0 });
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric() || **c == '_') {
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Ident(s), line: l0, col: c0 });
        } else if "=,;:+-*^".contains(ch) {
            chars.next();
            col += 1;
            out.push(Token { tok: Tok::Sym(ch), line: l0, col: c0 });
        } else {
            return err(l0, c0, format!("unexpected character {ch:?}"));
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

pub struct Cursor {
    toks: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub fn new(toks: Vec<Token>) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    pub fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        let t = self.peek();
        err(t.line, t.col, msg)
    }

    pub fn describe(&self) -> String {
        match &self.peek().tok {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(s) => format!("'{s}'"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.fail(format!("expected '{c}', found {}", self.describe()))
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.next();
                Ok(())
            }
            _ => self.fail(format!("expected '{kw}', found {}", self.describe())),
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                self.next();
                Ok((s, t.line, t.col))
            }
            _ => self.fail(format!("expected a name, found {}", self.describe())),
        }
    }

    pub fn expect_int(&mut self) -> Result<(u64, usize, usize)> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(s) => {
                self.next();
                match s.parse::<u64>() {
                    Ok(v) => Ok((v, t.line, t.col)),
                    Err(_) => err(t.line, t.col, format!("integer {s} is too large")),
                }
            }
            _ => self.fail(format!("expected an integer, found {}", self.describe())),
        }
    }

    pub fn skip_newlines(&mut self) {
        while self.peek().tok == Tok::Newline {
            self.next();
        }
    }
}
