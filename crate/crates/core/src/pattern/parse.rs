use std::fmt;
use std::str::FromStr;

use super::{PatternError, PatternSpec, VertexName};
use crate::graph::{Graph, VertexSet};

/// Ring marks: `*` or a combining ring above. Separators: `|` or `‖`.
fn normalize(text: &str) -> String {
    text.trim().replace('\u{030A}', "*").replace('‖', "|")
}

/// Index token list: digits with optional ring marks. Returns `(index, ringed, offset)`.
fn tokens(body: &str, base: usize) -> Result<Vec<(u8, bool, usize)>, PatternError> {
    let mut out: Vec<(u8, bool, usize)> = Vec::new();
    for (off, ch) in body.char_indices() {
        match ch {
            '1'..='5' => out.push((ch as u8 - b'0', false, base + off)),
            '*' => match out.last_mut() {
                Some(t) => t.1 = true,
                None => return Err(PatternError::Unexpected { ch, offset: base + off }),
            },
            '0' | '6'..='9' => return Err(PatternError::DigitOutOfRange { ch, offset: base + off }),
            c if c.is_whitespace() => {}
            _ => return Err(PatternError::Unexpected { ch, offset: base + off }),
        }
    }
    Ok(out)
}

fn parse_explicit(body: &str, base: usize) -> Result<PatternSpec, PatternError> {
    let (head, tail) = body.split_once(':').ok_or(PatternError::Unbalanced)?;
    let toks = tokens(head, base)?;
    let mut edges = Vec::new();
    for (k, pair) in tail.split(',').map(str::trim).filter(|p| !p.is_empty()).enumerate() {
        let ends = tokens(pair, base + head.len() + 1 + k)?;
        match ends.as_slice() {
            [(a, false, _), (b, false, _)] => edges.push((*a, *b)),
            _ => return Err(PatternError::UnknownVertex(pair.to_string())),
        }
    }
    let mut seen = 0u8;
    for &(i, _, _) in &toks {
        if seen & (1 << i) != 0 {
            return Err(PatternError::DuplicateAcrossComponents(i));
        }
        seen |= 1 << i;
    }
    PatternSpec::from_parts(
        toks.iter().map(|t| t.0),
        edges,
        toks.iter().filter(|t| t.1).map(|t| t.0),
    )
}

/// Parses the text form, with or without outer parentheses.
pub fn parse_pattern(text: &str) -> Result<PatternSpec, PatternError> {
    let text = normalize(text);
    let (body, base) = if let Some(inner) = text.strip_prefix('{') {
        (inner.strip_suffix('}').ok_or(PatternError::Unbalanced)?, 1)
    } else if let Some(inner) = text.strip_prefix('(') {
        (inner.strip_suffix(')').ok_or(PatternError::Unbalanced)?, 1)
    } else {
        (text.as_str(), 0)
    };
    if body.contains(':') {
        return parse_explicit(body, base);
    }
    if body.contains(['(', ')', '{', '}']) {
        return Err(PatternError::Unbalanced);
    }
    let mut indices = Vec::new();
    let mut edges = Vec::new();
    let mut rings = Vec::new();
    let mut used = 0u8;
    if body.trim().is_empty() {
        return Ok(PatternSpec::empty());
    }
    let mut offset = base;
    for part in body.split('|') {
        let toks = tokens(part, offset)?;
        offset += part.len() + 1;
        if toks.is_empty() {
            return Err(PatternError::EmptyComponent);
        }
        let mut digits: Vec<u8> = toks.iter().map(|t| t.0).collect();
        let closed = digits.len() > 1 && digits.first() == digits.last();
        if closed {
            digits.pop();
            if digits.len() < 3 {
                return Err(PatternError::ShortCycle(toks.iter().map(|t| t.0).collect()));
            }
        }
        let mut local = 0u8;
        for &d in &digits {
            if local & (1 << d) != 0 {
                return Err(PatternError::IllegalRepetition(d));
            }
            if used & (1 << d) != 0 {
                return Err(PatternError::DuplicateAcrossComponents(d));
            }
            local |= 1 << d;
        }
        used |= local;
        for w in digits.windows(2) {
            edges.push((w[0], w[1]));
        }
        if closed {
            edges.push((digits[digits.len() - 1], digits[0]));
        }
        indices.extend(&digits);
        rings.extend(toks.iter().filter(|t| t.1).map(|t| t.0));
    }
    PatternSpec::from_parts(indices, edges, rings)
}

impl FromStr for PatternSpec {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pattern(s)
    }
}

/// A pattern graph with some named vertices deleted, e.g. `(12*3451)-{u3,u4}`
/// or `(1*2*4*)-u1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternExpr {
    pub spec: PatternSpec,
    pub deleted: Vec<VertexName>,
}

impl PatternExpr {
    pub fn realize(&self) -> Result<Graph, PatternError> {
        let mut gone = VertexSet::EMPTY;
        for &name in &self.deleted {
            let v = self.spec.vertex(name).ok_or_else(|| PatternError::UnknownVertex(name.to_string()))?;
            gone.insert(v);
        }
        self.spec
            .realize()
            .delete_vertices(gone)
            .map_err(|_| PatternError::UnknownVertex("every vertex".into()))
    }
}

impl FromStr for PatternExpr {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let close = match s.chars().next() {
            Some('(') => ')',
            Some('{') => '}',
            _ => return Ok(PatternExpr { spec: parse_pattern(s)?, deleted: Vec::new() }),
        };
        let end = s.find(close).ok_or(PatternError::Unbalanced)?;
        let spec = parse_pattern(&s[..=end])?;
        let mut deleted = Vec::new();
        let mut rest = s[end + 1..].trim();
        while let Some(r) = rest.strip_prefix('-') {
            let r = r.trim_start();
            if let Some(inner) = r.strip_prefix('{') {
                let stop = inner.find('}').ok_or(PatternError::Unbalanced)?;
                for name in inner[..stop].split(',') {
                    deleted.push(name.parse()?);
                }
                rest = inner[stop + 1..].trim();
            } else {
                let stop = r.find(|c: char| c == '-' || c.is_whitespace()).unwrap_or(r.len());
                deleted.push(r[..stop].parse()?);
                rest = r[stop..].trim();
            }
        }
        if let Some(ch) = rest.chars().next() {
            return Err(PatternError::Unexpected { ch, offset: s.len() - rest.len() });
        }
        Ok(PatternExpr { spec, deleted })
    }
}

impl fmt::Display for PatternExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)?;
        match self.deleted.as_slice() {
            [] => Ok(()),
            [one] => write!(f, "-{one}"),
            many => {
                let names: Vec<String> = many.iter().map(|n| n.to_string()).collect();
                write!(f, "-{{{}}}", names.join(","))
            }
        }
    }
}

impl fmt::Debug for PatternExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternExpr{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_component() {
        let s = parse_pattern("(1324)").unwrap();
        assert_eq!(s.components().unwrap(), vec![vec![1, 3, 2, 4]]);
        assert!(s.ring_set().is_empty());
        assert_eq!(s.u_edges().collect::<Vec<_>>(), vec![(1, 3), (2, 3), (2, 4)]);
    }

    #[test]
    fn two_components() {
        let s = parse_pattern("(14|23)").unwrap();
        assert_eq!(s.components().unwrap(), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(parse_pattern("(23|14)").unwrap().to_string(), "(14|23)");
    }

    #[test]
    fn ringed_cycle() {
        let s = parse_pattern("(1*2*3*4*5*1*)").unwrap();
        assert_eq!(s.components().unwrap(), vec![vec![1, 2, 3, 4, 5, 1]]);
        assert_eq!(s.ring_set(), vec![1, 2, 3, 4, 5]);
        assert_eq!(s.to_string(), "(1*2*3*4*5*1)");
        // a ring written only on the closing digit still counts
        assert!(parse_pattern("(12341*)").unwrap().is_ringed(1));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_pattern("(162)"), Err(PatternError::DigitOutOfRange { ch: '6', offset: 2 })));
        assert!(matches!(parse_pattern("(1213)"), Err(PatternError::IllegalRepetition(1))));
        assert!(matches!(parse_pattern("(12|23)"), Err(PatternError::DuplicateAcrossComponents(2))));
        assert!(matches!(parse_pattern("(1||2)"), Err(PatternError::EmptyComponent)));
        assert!(matches!(parse_pattern("(121)"), Err(PatternError::ShortCycle(_))));
        assert!(matches!(parse_pattern("(12"), Err(PatternError::Unbalanced)));
        assert!(matches!(parse_pattern("(*1)"), Err(PatternError::Unexpected { ch: '*', .. })));
    }

    #[test]
    fn canonical_orientation() {
        assert_eq!(parse_pattern("(4231)").unwrap().to_string(), "(1324)");
        assert_eq!(parse_pattern("(3*1*2)").unwrap().to_string(), "(21*3*)");
        assert_eq!(parse_pattern("(12*435*1)").unwrap().to_string(), "(12*435*1)");
        assert_eq!(parse_pattern("(2*413*)").unwrap().to_string(), "(2*413*)");
        assert_eq!(parse_pattern("()").unwrap().to_string(), "()");
        assert_eq!(parse_pattern("(5|3|1)").unwrap().to_string(), "(1|3|5)");
    }

    #[test]
    fn unicode_marks() {
        assert_eq!(parse_pattern("(1\u{030A}3‖2\u{030A})").unwrap(), parse_pattern("(1*3|2*)").unwrap());
    }

    #[test]
    fn deletion_expressions() {
        let e: PatternExpr = "(12*3451)-{u3,u4}".parse().unwrap();
        assert_eq!(e.deleted, vec![VertexName::U(3), VertexName::U(4)]);
        assert_eq!(e.realize().unwrap().order(), 8);
        let e: PatternExpr = "(1*2*4*)-u1".parse().unwrap();
        assert_eq!(e.to_string(), "(1*2*4*)-u1");
        assert_eq!(e.realize().unwrap().order(), 7);
        let e: PatternExpr = "(1234*5*1) - v3".parse().unwrap();
        assert_eq!(e.deleted, vec![VertexName::V(3)]);
        assert!("(12)-u4".parse::<PatternExpr>().unwrap().realize().is_err());
        assert!("(12)-w1".parse::<PatternExpr>().is_err());
    }
}
