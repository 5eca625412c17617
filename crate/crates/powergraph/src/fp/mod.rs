//! Finitely presented groups: parse a presentation, enumerate cosets of the
//! trivial subgroup (Todd-Coxeter, Felsch-style), and realize the result as a
//! concrete Cayley-table [`Group`](crate::Group).

mod parse;
mod realize;
mod todd_coxeter;

pub use parse::parse_presentation;
pub use realize::{realize, realize_with_generators};
pub use todd_coxeter::{todd_coxeter, todd_coxeter_seeded, CosetTable, TableStatus};

use thiserror::Error;

pub const DEFAULT_MAX_COSETS: usize = 100_000;

#[derive(Debug, Error)]
pub enum FpError {
    #[error("unknown generator {name:?} at line {line}, column {col}")]
    UnknownGenerator {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("relator at line {line} reduces to the empty word")]
    EmptyRelator { line: usize },
    #[error("coset enumeration exceeded {0} cosets (larger or infinite group?)")]
    Overflow(usize),
    #[error("coset table is not complete")]
    IncompleteTable,
    #[error("permutation closure exceeds order cap {0}")]
    ClosureExceedsCap(usize),
}

/// A letter of a word: generator index with exponent sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

/// A freely reduced word in the generators.
pub type Word = Vec<Letter>;

/// A finite presentation: named generators plus freely reduced relators.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn word_to_string(&self, w: &Word) -> String {
        w.iter()
            .map(|l| {
                let name = &self.generators[l.gen];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn free_reduce(w: &mut Word) {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w.iter() {
        if let Some(&top) = out.last() {
            if top.gen == l.gen && top.inverse != l.inverse {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    *w = out;
}

pub(crate) fn invert_word(w: &Word) -> Word {
    w.iter()
        .rev()
        .map(|l| Letter {
            gen: l.gen,
            inverse: !l.inverse,
        })
        .collect()
}
