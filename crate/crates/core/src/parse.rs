//! Tokenizer shared by the residue-set, polynomial and exponential grammars.

use num_bigint::BigUint;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Kind {
    Number(BigUint),
    X,
    Caret,
    Plus,
    Colon,
    Comma,
    LBrace,
    RBrace,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub kind: Kind,
    pub text: String,
    /// 1-based character column.
    pub column: usize,
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<Token>, Error> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let value = text
                .parse::<BigUint>()
                .expect("ascii digits parse as a natural");
            tokens.push(Token {
                kind: Kind::Number(value),
                text,
                column,
            });
            continue;
        }
        let kind = match c {
            'x' => Kind::X,
            '^' => Kind::Caret,
            '+' => Kind::Plus,
            ':' => Kind::Colon,
            ',' => Kind::Comma,
            '{' => Kind::LBrace,
            '}' => Kind::RBrace,
            _ => {
                return Err(Error::Parse {
                    column,
                    token: c.to_string(),
                    message: "unexpected character".into(),
                })
            }
        };
        tokens.push(Token {
            kind,
            text: c.to_string(),
            column,
        });
        i += 1;
    }
    Ok(tokens)
}

/// Cursor over a token list that knows where the input ended.
pub(crate) struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    end_column: usize,
}

impl Cursor {
    pub fn new(input: &str) -> Result<Self, Error> {
        Ok(Cursor {
            tokens: tokenize(input)?,
            pos: 0,
            end_column: input.chars().count() + 1,
        })
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn eat(&mut self, kind: &Kind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Error pointing at the current token, or at end of input.
    pub fn error(&self, message: impl Into<String>) -> Error {
        match self.peek() {
            Some(t) => Error::Parse {
                column: t.column,
                token: t.text.clone(),
                message: message.into(),
            },
            None => Error::Parse {
                column: self.end_column,
                token: "<end of input>".into(),
                message: message.into(),
            },
        }
    }

    pub fn expect(&mut self, kind: &Kind, what: &str) -> Result<(), Error> {
        if self.eat(kind) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    pub fn number(&mut self, what: &str) -> Result<(BigUint, Token), Error> {
        match self.peek() {
            Some(Token {
                kind: Kind::Number(n),
                ..
            }) => {
                let n = n.clone();
                let tok = self.next().expect("peeked");
                Ok((n, tok))
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    pub fn finish(&self) -> Result<(), Error> {
        if self.is_done() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// Narrows a parsed number to `u64`, blaming `tok` when it does not fit.
pub(crate) fn to_u64(n: &BigUint, tok: &Token) -> Result<u64, Error> {
    u64::try_from(n).map_err(|_| Error::Parse {
        column: tok.column,
        token: tok.text.clone(),
        message: "number does not fit in 64 bits".into(),
    })
}
