//! Textual pattern notation.
//!
//! ```text
//! perm    := digit+ | int ("," int)+
//! pattern := "cl:" perm
//!          | "bv:" perm ";x={" ints? "};y={" ints? "}"
//!          | "m:"  perm ";r={" boxes? "}"
//!          | "mm:" perm [";r={" boxes? "}"] ";marks=[" region (";" region)* "]"
//!          | "bar:" perm ";bars={" ints "}"
//!          | "brt:" perm ";t={" pairs "}"
//!          | "iv:" perm "|" perm
//! region  := "{" boxes "}" ("<=" | "=" | ">=") int
//! boxes   := "(" int "," int ")" ("," "(" int "," int ")")*
//! ```
//!
//! Whitespace is ignored everywhere. The optional `r` block of a marked mesh
//! pattern is sugar for a leading `= 0` region; [`format_pattern`] always
//! writes regions out explicitly and sorts every set ascending.

use std::fmt::Write as _;

use thiserror::Error;

use crate::pattern::{
    BarredPattern, BivincularPattern, BruhatRestrictedPattern, Cell, Comparison, IntervalPattern,
    MarkedMeshPattern, MarkedRegion, MeshPattern, Pattern, PatternError,
};
use crate::perm::{Permutation, Transposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid pattern: {0}")]
    Invalid(#[from] PatternError),
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { src, chars, at: 0 }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.at).map_or(self.src.len(), |&(o, _)| o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { position: self.offset(), message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn eat(&mut self, literal: &str) -> bool {
        let n = literal.chars().count();
        let matches = self.chars.len() >= self.at + n
            && self.chars[self.at..self.at + n].iter().map(|&(_, c)| c).eq(literal.chars());
        if matches {
            self.at += n;
        }
        matches
    }

    fn expect(&mut self, literal: &str) -> Result<(), ParseError> {
        if self.eat(literal) {
            Ok(())
        } else {
            self.error(format!("expected {literal:?}"))
        }
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let start = self.at;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            return self.error("expected a digit");
        }
        Ok(self.chars[start..self.at].iter().map(|&(_, c)| c).collect())
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        let here = self.offset();
        let text = self.digits()?;
        text.parse()
            .map_err(|_| ParseError::Syntax { position: here, message: format!("integer {text} out of range") })
    }

    fn perm(&mut self) -> Result<Permutation, ParseError> {
        let here = self.offset();
        let first = self.digits()?;
        let values: Vec<usize> = if self.peek() == Some(',') {
            let mut values = vec![first.parse().map_err(|_| ParseError::Syntax {
                position: here,
                message: "integer out of range".into(),
            })?];
            while self.eat(",") {
                values.push(self.int()?);
            }
            values
        } else {
            first.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
        };
        Permutation::new(values).map_err(|e| ParseError::Invalid(e.into()))
    }

    /// `{` ints? `}` after the opening brace has been consumed by the caller.
    fn int_set(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut out = Vec::new();
        if self.eat("}") {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat("}") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn pair(&mut self) -> Result<(usize, usize), ParseError> {
        self.expect("(")?;
        let a = self.int()?;
        self.expect(",")?;
        let b = self.int()?;
        self.expect(")")?;
        Ok((a, b))
    }

    /// Pairs up to and including the closing brace.
    fn pair_set(&mut self) -> Result<Vec<(usize, usize)>, ParseError> {
        let mut out = Vec::new();
        if self.eat("}") {
            return Ok(out);
        }
        loop {
            out.push(self.pair()?);
            if self.eat("}") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn cells(&mut self) -> Result<Vec<Cell>, ParseError> {
        Ok(self.pair_set()?.into_iter().map(|(c, r)| Cell::new(c, r)).collect())
    }

    fn region(&mut self) -> Result<MarkedRegion, ParseError> {
        self.expect("{")?;
        let cells = self.cells()?;
        if cells.is_empty() {
            return self.error("a marked region needs at least one box");
        }
        let cmp = if self.eat("<=") {
            Comparison::AtMost
        } else if self.eat(">=") {
            Comparison::AtLeast
        } else if self.eat("=") {
            Comparison::Exactly
        } else {
            return self.error("expected one of \"<=\", \"=\", \">=\"");
        };
        let threshold = self.int()?;
        Ok(MarkedRegion::new(cells, cmp, threshold)?)
    }

    fn pattern(&mut self) -> Result<Pattern, ParseError> {
        let pat = if self.eat("cl:") {
            Pattern::Classical(self.perm()?)
        } else if self.eat("bv:") {
            let perm = self.perm()?;
            self.expect(";x={")?;
            let x = self.int_set()?;
            self.expect(";y={")?;
            let y = self.int_set()?;
            Pattern::Bivincular(BivincularPattern::new(perm, x, y)?)
        } else if self.eat("mm:") {
            let perm = self.perm()?;
            let shaded = if self.eat(";r={") { self.cells()? } else { Vec::new() };
            self.expect(";marks=[")?;
            let mut marks = vec![self.region()?];
            while self.eat(";") {
                marks.push(self.region()?);
            }
            self.expect("]")?;
            Pattern::MarkedMesh(MarkedMeshPattern::with_shading(perm, shaded, marks)?)
        } else if self.eat("m:") {
            let perm = self.perm()?;
            self.expect(";r={")?;
            let cells = self.cells()?;
            Pattern::Mesh(MeshPattern::new(perm, cells)?)
        } else if self.eat("bar:") {
            let perm = self.perm()?;
            self.expect(";bars={")?;
            let bars = self.int_set()?;
            Pattern::Barred(BarredPattern::new(perm, bars)?)
        } else if self.eat("brt:") {
            let perm = self.perm()?;
            self.expect(";t={")?;
            let ts = self
                .pair_set()?
                .into_iter()
                .map(|(a, b)| Transposition::new(a, b).map_err(PatternError::from))
                .collect::<Result<Vec<_>, _>>()?;
            Pattern::BruhatRestricted(BruhatRestrictedPattern::new(perm, ts)?)
        } else if self.eat("iv:") {
            let lower = self.perm()?;
            self.expect("|")?;
            let upper = self.perm()?;
            Pattern::Interval(IntervalPattern::new(lower, upper)?)
        } else {
            return self.error("expected a pattern tag (cl:, bv:, m:, mm:, bar:, brt:, iv:)");
        };
        if self.at != self.chars.len() {
            return self.error("trailing input");
        }
        Ok(pat)
    }
}

/// Parses a pattern in the notation described at module level.
pub fn parse_pattern(text: &str) -> Result<Pattern, ParseError> {
    Parser::new(text).pattern()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Canonical text for a pattern; sets are written in ascending order.
pub fn format_pattern(pattern: &Pattern) -> String {
    match pattern {
        Pattern::Classical(p) => format!("cl:{p}"),
        Pattern::Bivincular(b) => format!(
            "bv:{};x={{{}}};y={{{}}}",
            b.perm(),
            join(b.position_adjacencies()),
            join(b.value_adjacencies())
        ),
        Pattern::Mesh(m) => format!("m:{};r={{{}}}", m.perm(), join(m.shaded())),
        Pattern::MarkedMesh(m) => {
            let mut out = format!("mm:{};marks=[", m.perm());
            for (i, r) in m.regions().iter().enumerate() {
                if i > 0 {
                    out.push(';');
                }
                let _ = write!(out, "{{{}}}{}{}", join(r.cells()), r.cmp().symbol(), r.threshold());
            }
            out.push(']');
            out
        }
        Pattern::Barred(b) => format!("bar:{};bars={{{}}}", b.full(), join(b.barred())),
        Pattern::BruhatRestricted(b) => format!(
            "brt:{};t={{{}}}",
            b.perm(),
            join(b.restrictions().iter().map(|t| format!("({},{})", t.a(), t.b())))
        ),
        Pattern::Interval(i) => format!("iv:{}|{}", i.lower(), i.upper()),
    }
}

impl std::str::FromStr for Pattern {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pattern(s)
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_pattern(self))
    }
}
