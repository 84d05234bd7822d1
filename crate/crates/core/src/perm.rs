//! Permutations of `1..=n` and their cycle notation.

use alloc::{string::String, vec, vec::Vec};
use core::fmt::{self, Write};

use crate::error::{Error, ParseError, ParseErrorKind};

/// A bijection of the points `1..=n`.
///
/// Ordering is lexicographic on the image sequence, so the identity is the least permutation of
/// its degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list, `images[i - 1]` being the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidImages);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidImages);
            }
            seen[x - 1] = true;
            out.push((x - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// The 1-based image list.
    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `x ↦ other(self(x))`: `self` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    // compose without the degree check
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// The same permutation on `degree` points, fixing the added ones.
    pub fn extend_degree(&self, degree: usize) -> Result<Permutation, Error> {
        if degree < self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: degree,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Permutation { images })
    }

    /// Disjoint cycles of length at least two, each starting at its least point, ordered by that
    /// point. Points are 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation such as `"(1,3,2)"`, `"(1,2)(3,4)"` or `"()"`.
    ///
    /// Without an explicit `degree` the result acts on the largest mentioned point (at least 1).
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Permutation, ParseError> {
        let cycles = parse_cycle_list(text)?;
        let largest = cycles.iter().flatten().map(|&(_, p)| p).max().unwrap_or(0);
        let n = match degree {
            Some(d) => {
                if let Some(&(column, point)) =
                    cycles.iter().flatten().find(|&&(_, p)| p > d || d == 0)
                {
                    return Err(ParseError {
                        column,
                        kind: ParseErrorKind::DegreeTooSmall { degree: d, point },
                    });
                }
                if d == 0 {
                    return Err(ParseError {
                        column: 1,
                        kind: ParseErrorKind::DegreeTooSmall {
                            degree: 0,
                            point: 1,
                        },
                    });
                }
                d
            }
            None => largest.max(1),
        };
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cycle in &cycles {
            for (i, &(_, p)) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()].1;
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Canonical cycle notation; the identity is `"()"`.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{self}");
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_char('(')?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_char(',')?;
                }
                write!(f, "{p}")?;
            }
            f.write_char(')')?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Comma,
    Int(usize),
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some((i, c)) = chars.next() {
        let column = i + 1;
        let token = match c {
            '(' => Token::Open,
            ')' => Token::Close,
            ',' => Token::Comma,
            c if c.is_whitespace() => continue,
            c if c.is_ascii_digit() => {
                let mut value = Some(c as usize - '0' as usize);
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    chars.next();
                    let digit = d as usize - '0' as usize;
                    value = value
                        .and_then(|v| v.checked_mul(10))
                        .and_then(|v| v.checked_add(digit));
                }
                match value {
                    Some(v) if v > 0 => Token::Int(v),
                    _ => {
                        return Err(ParseError {
                            column,
                            kind: ParseErrorKind::BadPoint,
                        })
                    }
                }
            }
            c => {
                return Err(ParseError {
                    column,
                    kind: ParseErrorKind::UnexpectedChar(c),
                })
            }
        };
        tokens.push((column, token));
    }
    Ok(tokens)
}

type Cycle = Vec<(usize, usize)>;

// Each point is tagged with its column.
fn parse_cycle_list(text: &str) -> Result<Vec<Cycle>, ParseError> {
    let tokens = lex(text)?;
    let end_column = text.chars().count() + 1;
    let mut pos = 0;
    let peek = |pos: usize| tokens.get(pos).copied();
    let unexpected = |tok: Option<(usize, Token)>| match tok {
        None => ParseError {
            column: end_column,
            kind: ParseErrorKind::UnexpectedEnd,
        },
        Some((column, t)) => ParseError {
            column,
            kind: ParseErrorKind::UnexpectedChar(match t {
                Token::Open => '(',
                Token::Close => ')',
                Token::Comma => ',',
                Token::Int(_) => {
                    // only reachable where a delimiter was required
                    text.chars().nth(column - 1).unwrap_or('?')
                }
            }),
        },
    };

    // "()" is only valid as the whole expression.
    if matches!(tokens.as_slice(), [(_, Token::Open), (_, Token::Close)]) {
        return Ok(Vec::new());
    }

    let mut cycles = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    loop {
        match peek(pos) {
            Some((_, Token::Open)) => pos += 1,
            tok => return Err(unexpected(tok)),
        }
        let open_column = tokens[pos - 1].0;
        let mut cycle = Vec::new();
        loop {
            match peek(pos) {
                Some((column, Token::Int(p))) => {
                    if seen.contains(&p) {
                        return Err(ParseError {
                            column,
                            kind: ParseErrorKind::RepeatedPoint(p),
                        });
                    }
                    seen.push(p);
                    cycle.push((column, p));
                    pos += 1;
                }
                tok => return Err(unexpected(tok)),
            }
            match peek(pos) {
                Some((_, Token::Comma)) => pos += 1,
                Some((_, Token::Close)) => {
                    pos += 1;
                    break;
                }
                tok => return Err(unexpected(tok)),
            }
        }
        if cycle.len() < 2 {
            return Err(ParseError {
                column: open_column,
                kind: ParseErrorKind::ShortCycle,
            });
        }
        cycles.push(cycle);
        if pos == tokens.len() {
            return Ok(cycles);
        }
    }
}
