//! Presentation file grammar (`.fp`):
//!
//! ```text
//! gens: a b x y
//! rel: a^3
//! rel: (x a)^2 = 1
//! rel: a b = b a
//! ```
//!
//! A relator is a product of factors; a factor is a generator, a
//! parenthesized word, or `factor^k` with any integer `k`. Whitespace and
//! `*` both act as concatenation, `1` is the empty word, and `w1 = w2` is
//! rewritten to the relator `w1 w2^-1`. Lines starting with `#` are comments.

use super::{free_reduce, invert_word, FpError, Letter, Presentation, Word};

pub fn parse_presentation(text: &str) -> Result<Presentation, FpError> {
    let mut generators: Vec<String> = Vec::new();
    let mut relators: Vec<Word> = Vec::new();
    let mut saw_gens = false;
    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("gens:") {
            if saw_gens {
                return Err(FpError::Syntax {
                    line: line_no,
                    col: 1,
                    message: "duplicate gens: line".into(),
                });
            }
            saw_gens = true;
            for name in rest.split_whitespace() {
                if !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                    || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(FpError::Syntax {
                        line: line_no,
                        col: 1,
                        message: format!("bad generator name {name:?}"),
                    });
                }
                if generators.iter().any(|g| g == name) {
                    return Err(FpError::Syntax {
                        line: line_no,
                        col: 1,
                        message: format!("duplicate generator {name:?}"),
                    });
                }
                generators.push(name.to_string());
            }
        } else if let Some(rest) = line.strip_prefix("rel:") {
            if !saw_gens {
                return Err(FpError::Syntax {
                    line: line_no,
                    col: 1,
                    message: "rel: before gens:".into(),
                });
            }
            let mut p = Parser {
                gens: &generators,
                line: line_no,
                chars: rest.char_indices().peekable(),
                text: rest,
            };
            let lhs = p.parse_word()?;
            let word = if p.eat('=') {
                let rhs = p.parse_word()?;
                p.expect_end()?;
                let mut w = lhs;
                w.extend(invert_word(&rhs));
                w
            } else {
                p.expect_end()?;
                lhs
            };
            let mut w = word;
            free_reduce(&mut w);
            if w.is_empty() {
                return Err(FpError::EmptyRelator { line: line_no });
            }
            relators.push(w);
        } else {
            return Err(FpError::Syntax {
                line: line_no,
                col: 1,
                message: format!("expected `gens:` or `rel:`, got {line:?}"),
            });
        }
    }
    if !saw_gens {
        return Err(FpError::Syntax {
            line: 0,
            col: 0,
            message: "missing gens: line".into(),
        });
    }
    Ok(Presentation {
        generators,
        relators,
    })
}

struct Parser<'a> {
    gens: &'a [String],
    line: usize,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_whitespace() || c == '*' {
                self.chars.next();
            } else {
                break;
            }
        }
    }

    fn col(&mut self) -> usize {
        self.chars.peek().map_or(self.text.len(), |&(i, _)| i) + 1
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.chars.peek().is_some_and(|&(_, x)| x == c) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<(), FpError> {
        self.skip_ws();
        if let Some(&(i, c)) = self.chars.peek() {
            return Err(FpError::Syntax {
                line: self.line,
                col: i + 1,
                message: format!("unexpected {c:?}"),
            });
        }
        Ok(())
    }

    /// word := factor+  (stops at `=`, `)`, or end of line)
    fn parse_word(&mut self) -> Result<Word, FpError> {
        let mut out: Word = Vec::new();
        let mut any = false;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                None => break,
                Some(&(_, '=' | ')')) => break,
                Some(_) => {
                    let f = self.parse_factor()?;
                    out.extend(f);
                    any = true;
                }
            }
        }
        if !any {
            return Err(FpError::Syntax {
                line: self.line,
                col: self.col(),
                message: "expected a word".into(),
            });
        }
        Ok(out)
    }

    /// factor := atom ('^' int)?
    fn parse_factor(&mut self) -> Result<Word, FpError> {
        let base = self.parse_atom()?;
        self.skip_ws();
        if self.chars.peek().is_some_and(|&(_, c)| c == '^') {
            self.chars.next();
            let k = self.parse_int()?;
            let mut out = Word::new();
            let (reps, word) = if k >= 0 {
                (k as usize, base)
            } else {
                ((-k) as usize, invert_word(&base))
            };
            for _ in 0..reps {
                out.extend(word.iter().copied());
            }
            Ok(out)
        } else {
            Ok(base)
        }
    }

    /// atom := generator | '(' word ')' | '1'
    fn parse_atom(&mut self) -> Result<Word, FpError> {
        self.skip_ws();
        let Some(&(start, c)) = self.chars.peek() else {
            return Err(FpError::Syntax {
                line: self.line,
                col: self.col(),
                message: "expected a factor".into(),
            });
        };
        if c == '(' {
            self.chars.next();
            let w = self.parse_word()?;
            if !self.eat(')') {
                return Err(FpError::Syntax {
                    line: self.line,
                    col: self.col(),
                    message: "unclosed `(`".into(),
                });
            }
            return Ok(w);
        }
        if c == '1' {
            self.chars.next();
            return Ok(Word::new());
        }
        if !c.is_ascii_alphabetic() {
            return Err(FpError::Syntax {
                line: self.line,
                col: start + 1,
                message: format!("unexpected {c:?}"),
            });
        }
        let mut name = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        match self.gens.iter().position(|g| *g == name) {
            Some(gen) => Ok(vec![Letter {
                gen,
                inverse: false,
            }]),
            None => Err(FpError::UnknownGenerator {
                name,
                line: self.line,
                col: start + 1,
            }),
        }
    }

    fn parse_int(&mut self) -> Result<i64, FpError> {
        self.skip_ws();
        let mut s = String::new();
        if self.chars.peek().is_some_and(|&(_, c)| c == '-') {
            s.push('-');
            self.chars.next();
        }
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s.parse().map_err(|_| FpError::Syntax {
            line: self.line,
            col: self.col(),
            message: "expected an integer exponent".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(p: &Presentation, i: usize) -> String {
        p.word_to_string(&p.relators[i])
    }

    #[test]
    fn single_power_relator() {
        let p = parse_presentation("gens: a\nrel: a^3").unwrap();
        assert_eq!(p.generators, vec!["a"]);
        assert_eq!(letters(&p, 0), "a a a");
    }

    #[test]
    fn parenthesized_square() {
        let p = parse_presentation("gens: x a\nrel: (x a)^2 = 1").unwrap();
        assert_eq!(letters(&p, 0), "x a x a");
    }

    #[test]
    fn equation_rewrites_to_relator() {
        let p = parse_presentation("gens: a b\nrel: a b = b a").unwrap();
        assert_eq!(letters(&p, 0), "a b a^-1 b^-1");
    }

    #[test]
    fn star_is_concatenation() {
        let p = parse_presentation("gens: a b\nrel: a*b*a^-1*b^-1").unwrap();
        assert_eq!(letters(&p, 0), "a b a^-1 b^-1");
    }

    #[test]
    fn unknown_generator() {
        let err = parse_presentation("gens: a\nrel: a*q").unwrap_err();
        assert!(matches!(err, FpError::UnknownGenerator { ref name, .. } if name == "q"));
    }

    #[test]
    fn empty_relator_rejected() {
        assert!(matches!(
            parse_presentation("gens: a\nrel: a = a"),
            Err(FpError::EmptyRelator { line: 2 })
        ));
        assert!(matches!(
            parse_presentation("gens: a\nrel: a a^-1"),
            Err(FpError::EmptyRelator { .. })
        ));
    }

    #[test]
    fn negative_exponent() {
        let p = parse_presentation("gens: x a\nrel: x a x = a^-1").unwrap();
        assert_eq!(letters(&p, 0), "x a x a");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_presentation("gens: a\nrel: (a").unwrap_err();
        assert!(matches!(err, FpError::Syntax { line: 2, .. }));
        assert!(parse_presentation("rel: a").is_err());
    }
}
