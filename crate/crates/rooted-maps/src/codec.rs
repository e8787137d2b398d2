//! Line-oriented text format for maps and marks.
//!
//! ```text
//! map v1
//! edges <n>
//! root <dart>            # `root -` only for the vertex map
//! sigma <2n images>      # omitted when n = 0
//! mark <kind> <value>    # zero or more
//! ```
//!
//! `#` starts a comment. The edge involution is never serialized (always
//! `d ^ 1`). Corner marks take a dart index for the corner preceding that
//! dart, or the value `2n` for the half of the root corner before the arrow.

use std::fmt::Write as _;

use thiserror::Error;

use crate::map::{CornerSlot, Mark, MapError, MarkError, RootedMap};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

pub fn encode(map: &RootedMap, marks: &[Mark]) -> String {
    let mut out = String::new();
    out.push_str("map v1\n");
    let _ = writeln!(out, "edges {}", map.n_edges());
    match map.root_dart() {
        Some(r) => {
            let _ = writeln!(out, "root {r}");
        }
        None => out.push_str("root -\n"),
    }
    if map.n_darts() > 0 {
        out.push_str("sigma");
        for d in 0..map.n_darts() {
            let _ = write!(out, " {}", map.sigma(d));
        }
        out.push('\n');
    }
    for mark in marks {
        let line = match *mark {
            Mark::Discovery(rank) => format!("mark discovery {rank}"),
            Mark::Vertex(Some(d)) => format!("mark vertex {d}"),
            Mark::Vertex(None) => "mark vertex -".to_string(),
            Mark::Leaf(d) => format!("mark leaf {d}"),
            Mark::Corner(Some(CornerSlot::Before(d))) => format!("mark corner {d}"),
            Mark::Corner(Some(CornerSlot::RootLeft)) => format!("mark corner {}", map.n_darts()),
            Mark::Corner(None) => "mark corner -".to_string(),
            Mark::SideEdge(d) => format!("mark side-edge {d}"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

struct Lines<'a> {
    tokens: Vec<(usize, usize, Vec<(usize, &'a str)>)>, // line no, first col, words
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut tokens = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(at) => &raw[..at],
                None => raw,
            };
            let mut words = Vec::new();
            let mut col = 0;
            for word in line.split_whitespace() {
                let at = line[col..].find(word).unwrap() + col;
                words.push((at + 1, word));
                col = at + word.len();
            }
            if !words.is_empty() {
                tokens.push((i + 1, words[0].0, words));
            }
        }
        Lines { tokens, pos: 0 }
    }

    fn next(&mut self) -> Option<&(usize, usize, Vec<(usize, &'a str)>)> {
        let item = self.tokens.get(self.pos);
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn expect(&mut self, what: &str) -> Result<&(usize, usize, Vec<(usize, &'a str)>), ParseError> {
        let last_line = self.tokens.last().map(|t| t.0).unwrap_or(1);
        match self.tokens.get(self.pos) {
            Some(item) => {
                self.pos += 1;
                Ok(item)
            }
            None => Err(ParseError::new(
                last_line + 1,
                1,
                format!("expected {what}, found end of input"),
            )),
        }
    }
}

fn parse_usize(line: usize, col: usize, word: &str, what: &str) -> Result<usize, ParseError> {
    word.parse()
        .map_err(|_| ParseError::new(line, col, format!("invalid {what} `{word}`")))
}

pub fn decode(text: &str) -> Result<(RootedMap, Vec<Mark>), ParseError> {
    let mut lines = Lines::new(text);

    let &(line, col, ref words) = lines.expect("header `map v1`")?;
    if words.len() != 2 || words[0].1 != "map" || words[1].1 != "v1" {
        return Err(ParseError::new(line, col, "expected header `map v1`"));
    }

    let &(line, col, ref words) = lines.expect("`edges <n>`")?;
    if words.len() != 2 || words[0].1 != "edges" {
        return Err(ParseError::new(line, col, "expected `edges <n>`"));
    }
    let n_edges = parse_usize(line, words[1].0, words[1].1, "edge count")?;

    let &(line, col, ref words) = lines.expect("`root <dart>`")?;
    if words.len() != 2 || words[0].1 != "root" {
        return Err(ParseError::new(line, col, "expected `root <dart>` or `root -`"));
    }
    let root = match words[1].1 {
        "-" => None,
        w => Some(parse_usize(line, words[1].0, w, "root dart")?),
    };

    let mut sigma = Vec::new();
    if n_edges > 0 {
        let &(line, col, ref words) = lines.expect("`sigma <images>`")?;
        if words.is_empty() || words[0].1 != "sigma" {
            return Err(ParseError::new(line, col, "expected `sigma <images>`"));
        }
        for &(wcol, w) in &words[1..] {
            sigma.push(parse_usize(line, wcol, w, "sigma image")?);
        }
        if sigma.len() != 2 * n_edges {
            return Err(ParseError::new(
                line,
                col,
                format!("sigma has {} images, expected {}", sigma.len(), 2 * n_edges),
            ));
        }
    }

    let map = RootedMap::build(n_edges, sigma, root).map_err(|e| match e {
        MapError::NotAPermutation { index, .. } => {
            ParseError::new(line, col, format!("sigma is not a permutation (near image {index})"))
        }
        other => ParseError::new(line, col, other.to_string()),
    })?;

    let mut marks = Vec::new();
    while let Some(&(line, col, ref words)) = lines.next() {
        if words[0].1 != "mark" || words.len() != 3 {
            return Err(ParseError::new(line, col, "expected `mark <kind> <value>`"));
        }
        let (vcol, value) = words[2];
        let number = |what: &str| parse_usize(line, vcol, value, what);
        let mark = match words[1].1 {
            "discovery" => Mark::Discovery(number("discovery rank")?),
            "vertex" => match value {
                "-" => Mark::Vertex(None),
                _ => Mark::Vertex(Some(number("dart")?)),
            },
            "leaf" => Mark::Leaf(number("dart")?),
            "corner" => match value {
                "-" => Mark::Corner(None),
                _ => {
                    let at = number("corner position")?;
                    if at == map.n_darts() && map.n_darts() > 0 {
                        Mark::Corner(Some(CornerSlot::RootLeft))
                    } else {
                        Mark::Corner(Some(CornerSlot::Before(at)))
                    }
                }
            },
            "side-edge" => Mark::SideEdge(number("dart")?),
            kind => {
                return Err(ParseError::new(
                    line,
                    words[1].0,
                    format!("unknown mark kind `{kind}`"),
                ))
            }
        };
        mark.validate(&map).map_err(|e: MarkError| {
            ParseError::new(line, vcol, e.to_string())
        })?;
        marks.push(mark);
    }
    Ok((map, marks))
}
