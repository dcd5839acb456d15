use crate::error::Result;
use crate::types::{Line, Page, SPACE};

/// A symbol of a flattened page: a line symbol or the artificial line break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlatSymbol<T> {
    Break,
    Symbol(T),
}

impl<T> FlatSymbol<T> {
    pub fn is_break(&self) -> bool {
        matches!(self, FlatSymbol::Break)
    }
}

/// Lines concatenated with a break before, between and after them.
///
/// Positions are 1-based: `breaks` holds every `p` such that
/// `symbols[p - 1]` is a break, so a grid point `(i, j)` of the solver lies
/// on a break exactly when `i` is listed here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatSequence<T> {
    pub symbols: Vec<FlatSymbol<T>>,
    /// Positions of the line breaks; one more than the number of lines.
    pub breaks: Vec<usize>,
    /// Positions of line breaks and spaces, ascending.
    pub ext_breaks: Vec<usize>,
}

impl<T: Clone> FlatSequence<T> {
    pub fn from_lines(lines: &[Vec<T>], is_space: impl Fn(&T) -> bool) -> Self {
        let total = lines.iter().map(Vec::len).sum::<usize>() + lines.len() + 1;
        let mut symbols = Vec::with_capacity(total);
        let mut breaks = Vec::with_capacity(lines.len() + 1);
        let mut ext_breaks = Vec::with_capacity(lines.len() + 1);
        symbols.push(FlatSymbol::Break);
        breaks.push(1);
        ext_breaks.push(1);
        for line in lines {
            for s in line {
                symbols.push(FlatSymbol::Symbol(s.clone()));
                if is_space(s) {
                    ext_breaks.push(symbols.len());
                }
            }
            symbols.push(FlatSymbol::Break);
            breaks.push(symbols.len());
            ext_breaks.push(symbols.len());
        }
        FlatSequence {
            symbols,
            breaks,
            ext_breaks,
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn line_count(&self) -> usize {
        self.breaks.len().saturating_sub(1)
    }

    /// Inverse of [`FlatSequence::from_lines`].
    pub fn unflatten(&self) -> Vec<Vec<T>> {
        self.breaks
            .windows(2)
            .map(|w| {
                self.symbols[w[0]..w[1] - 1]
                    .iter()
                    .map(|s| match s {
                        FlatSymbol::Symbol(t) => t.clone(),
                        FlatSymbol::Break => unreachable!("break inside a line"),
                    })
                    .collect()
            })
            .collect()
    }
}

/// Flattens the characters of a page. The empty page gives a single break.
pub fn flatten(page: &Page) -> FlatSequence<char> {
    let lines: Vec<Vec<char>> = page
        .lines
        .iter()
        .map(|l| l.text().chars().collect())
        .collect();
    FlatSequence::from_lines(&lines, |&c| c == SPACE)
}

impl FlatSequence<char> {
    /// Rebuilds the lines (without baselines) of a flattened page.
    pub fn to_page(&self, id: impl Into<String>) -> Result<Page> {
        let lines = self
            .unflatten()
            .into_iter()
            .map(|chars| Line::new(chars.into_iter().collect::<String>()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Page::new(id, lines))
    }
}

/// Cost marker for forbidden operations. Larger than any finite path cost.
pub const INFINITY: u32 = u32::MAX;

/// Substitution cost between a hypothesis and a ground-truth symbol.
///
/// Without segmentation: 0 for equal symbols, 1 for two different
/// characters, forbidden whenever a line break is involved.
///
/// With segmentation a hypothesis line break behaves like a space inside a
/// merged line: it maps to a ground-truth space for free and to any other
/// character for 1. Ground-truth line breaks are still only matched by the
/// solver's line-level recursion.
pub fn substitution_cost(h: FlatSymbol<char>, g: FlatSymbol<char>, segmentation: bool) -> u32 {
    use FlatSymbol::*;
    match (h, g, segmentation) {
        (Break, Break, _) => 0,
        (_, Break, _) => INFINITY,
        (Break, Symbol(_), false) => INFINITY,
        (Break, Symbol(c), true) => u32::from(c != SPACE),
        (Symbol(a), Symbol(b), _) => u32::from(a != b),
    }
}
