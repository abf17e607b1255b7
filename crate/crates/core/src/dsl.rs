//! Text syntax for [`PosetExpr`].
//!
//! ```text
//! expr  := atom | "dual(" expr ")" | "osum(" list ")" | "osum_i(" ilist ")" | "wedge(" list ")"
//! atom  := "chain(" int ")" | "antichain(" int ")" | "v(" int ")" | "fan(" ints ")"
//!        | "harp(" ints ")" | "diamond(" int ")" | "butterfly" | "point" | "boolean(" int ")"
//! ilist := iexpr ("," iexpr)*      iexpr := expr [ "[" int "," int "]" ]
//! ```
//!
//! The optional `[a,b]` suffix on an `osum_i` operand names the interval
//! endpoints (element indices) explicitly.

use std::fmt;

use crate::expr::{LargeOperand, PosetExpr};

/// A syntax or argument error, located by byte offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    /// Tokens that would have been accepted here; empty for argument errors.
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

const NAMES: [&str; 13] = [
    "antichain",
    "boolean",
    "butterfly",
    "chain",
    "diamond",
    "dual",
    "fan",
    "harp",
    "osum",
    "osum_i",
    "point",
    "v",
    "wedge",
];

fn constructor_names() -> Vec<String> {
    NAMES.iter().map(|s| format!("`{s}`")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(v) => format!("integer {v}"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Returns the next token and its offset without consuming it.
    fn peek(&mut self) -> Result<(Tok, usize, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start, start));
        };
        if c.is_ascii_alphabetic() || c == '_' {
            let len = rest
                .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                .unwrap_or(rest.len());
            return Ok((Tok::Ident(rest[..len].to_string()), start, start + len));
        }
        if c.is_ascii_digit() {
            let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let value = rest[..len].parse().map_err(|_| ParseError {
                offset: start,
                expected: vec![],
                message: "integer out of range".into(),
            })?;
            return Ok((Tok::Int(value), start, start + len));
        }
        if "(),[]".contains(c) {
            return Ok((Tok::Punct(c), start, start + 1));
        }
        Err(ParseError {
            offset: start,
            expected: vec![],
            message: format!("unexpected character `{c}`"),
        })
    }

    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        let (tok, start, end) = self.peek()?;
        self.pos = end;
        Ok((tok, start))
    }

    fn unexpected(tok: &Tok, offset: usize, expected: &[&str]) -> ParseError {
        ParseError {
            offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: format!("unexpected {}", tok.describe()),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.next()? {
            (Tok::Punct(d), _) if d == c => Ok(()),
            (tok, at) => Err(Self::unexpected(&tok, at, &[&format!("`{c}`")])),
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        match self.next()? {
            (Tok::Int(v), _) => Ok(v),
            (tok, at) => Err(Self::unexpected(&tok, at, &["integer"])),
        }
    }

    /// Parses `int ("," int)* ")"`, the opening paren already consumed.
    fn ints(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.int()?];
        loop {
            match self.next()? {
                (Tok::Punct(','), _) => out.push(self.int()?),
                (Tok::Punct(')'), _) => return Ok(out),
                (tok, at) => return Err(Self::unexpected(&tok, at, &["`,`", "`)`"])),
            }
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        let mut out = vec![item(self)?];
        loop {
            match self.next()? {
                (Tok::Punct(','), _) => out.push(item(self)?),
                (Tok::Punct(')'), _) => return Ok(out),
                (tok, at) => return Err(Self::unexpected(&tok, at, &["`,`", "`)`"])),
            }
        }
    }

    fn large_operand(&mut self) -> Result<LargeOperand, ParseError> {
        let expr = self.expr()?;
        let interval = match self.peek()? {
            (Tok::Punct('['), _, end) => {
                self.pos = end;
                let a = self.int()?;
                self.punct(',')?;
                let b = self.int()?;
                self.punct(']')?;
                Some((a, b))
            }
            _ => None,
        };
        Ok(LargeOperand { expr, interval })
    }

    fn expr(&mut self) -> Result<PosetExpr, ParseError> {
        let (tok, at) = self.next()?;
        let Tok::Ident(name) = tok else {
            return Err(ParseError {
                expected: constructor_names(),
                ..Self::unexpected(&tok, at, &[])
            });
        };
        let e = match name.as_str() {
            "butterfly" => PosetExpr::Butterfly,
            "point" => PosetExpr::Point,
            _ if NAMES.contains(&name.as_str()) => {
                self.punct('(')?;
                match name.as_str() {
                    "chain" | "antichain" | "v" | "diamond" | "boolean" => {
                        let k = self.int()?;
                        self.punct(')')?;
                        match name.as_str() {
                            "chain" => PosetExpr::Chain(k),
                            "antichain" => PosetExpr::Antichain(k),
                            "v" => PosetExpr::Vee(k),
                            "diamond" => PosetExpr::Diamond(k),
                            _ => PosetExpr::Boolean(k),
                        }
                    }
                    "fan" => PosetExpr::Fan(self.ints()?),
                    "harp" => PosetExpr::Harp(self.ints()?),
                    "dual" => {
                        let inner = self.expr()?;
                        self.punct(')')?;
                        PosetExpr::Dual(Box::new(inner))
                    }
                    "osum" => PosetExpr::Osum(self.list(Self::expr)?),
                    "wedge" => PosetExpr::Wedge(self.list(Self::expr)?),
                    _ => PosetExpr::OsumLarge(self.list(Self::large_operand)?),
                }
            }
            _ => {
                return Err(ParseError {
                    offset: at,
                    expected: constructor_names(),
                    message: format!("unknown constructor `{name}`"),
                })
            }
        };
        e.validate_node().map_err(|err| ParseError {
            offset: at,
            expected: vec![],
            message: match err {
                crate::Error::InvalidArgument { reason, .. } => format!("{name}: {reason}"),
                other => other.to_string(),
            },
        })?;
        Ok(e)
    }
}

/// Parses a construction expression. Arguments are range-checked here, so a
/// successful parse only fails at elaboration for structural reasons (no
/// bottom for a wedge, no or ambiguous large interval).
pub fn parse(text: &str) -> Result<PosetExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    match p.next()? {
        (Tok::End, _) => Ok(e),
        (tok, at) => Err(Parser::unexpected(&tok, at, &["end of input"])),
    }
}

fn join_ints(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, items: &[String]) -> fmt::Result {
    write!(f, "{name}({})", items.join(", "))
}

impl fmt::Display for PosetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetExpr::Chain(k) => write!(f, "chain({k})"),
            PosetExpr::Antichain(k) => write!(f, "antichain({k})"),
            PosetExpr::Vee(k) => write!(f, "v({k})"),
            PosetExpr::Fan(ls) => write!(f, "fan({})", join_ints(ls)),
            PosetExpr::Harp(ls) => write!(f, "harp({})", join_ints(ls)),
            PosetExpr::Diamond(k) => write!(f, "diamond({k})"),
            PosetExpr::Butterfly => f.write_str("butterfly"),
            PosetExpr::Point => f.write_str("point"),
            PosetExpr::Boolean(n) => write!(f, "boolean({n})"),
            PosetExpr::Dual(e) => write!(f, "dual({e})"),
            PosetExpr::Osum(v) => write_list(f, "osum", &v.iter().map(|e| e.to_string()).collect::<Vec<_>>()),
            PosetExpr::Wedge(v) => write_list(f, "wedge", &v.iter().map(|e| e.to_string()).collect::<Vec<_>>()),
            PosetExpr::OsumLarge(v) => {
                let items: Vec<String> = v
                    .iter()
                    .map(|o| match o.interval {
                        Some((a, b)) => format!("{}[{a},{b}]", o.expr),
                        None => o.expr.to_string(),
                    })
                    .collect();
                write_list(f, "osum_i", &items)
            }
        }
    }
}

impl PosetExpr {
    /// Normal form used for cache keys: wedge operands (which commute up to
    /// isomorphism) are sorted; every other operator keeps its order.
    pub fn canonical(&self) -> PosetExpr {
        match self {
            PosetExpr::Dual(e) => PosetExpr::Dual(Box::new(e.canonical())),
            PosetExpr::Osum(v) => PosetExpr::Osum(v.iter().map(PosetExpr::canonical).collect()),
            PosetExpr::Wedge(v) => {
                let mut parts: Vec<PosetExpr> = v.iter().map(PosetExpr::canonical).collect();
                parts.sort_by_cached_key(|e| e.to_string());
                PosetExpr::Wedge(parts)
            }
            PosetExpr::OsumLarge(v) => PosetExpr::OsumLarge(
                v.iter()
                    .map(|o| LargeOperand {
                        expr: o.expr.canonical(),
                        interval: o.interval,
                    })
                    .collect(),
            ),
            other => other.clone(),
        }
    }

    pub fn canonical_text(&self) -> String {
        self.canonical().to_string()
    }
}

impl std::str::FromStr for PosetExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_nested_construction() {
        let text = "wedge(chain(2), osum_i(diamond(3), harp(4,3)))";
        let e = parse(text).unwrap();
        assert_eq!(
            e,
            PosetExpr::Wedge(vec![
                PosetExpr::Chain(2),
                PosetExpr::OsumLarge(vec![
                    LargeOperand::new(PosetExpr::Diamond(3)),
                    LargeOperand::new(PosetExpr::Harp(vec![4, 3])),
                ]),
            ])
        );
        assert_eq!(e.to_string(), text);
        assert_eq!(parse("  fan( 3 , 2 ) ").unwrap(), PosetExpr::Fan(vec![3, 2]));
    }

    #[test]
    fn argument_errors_are_located() {
        let err = parse("osum(point, fan(2,3))").unwrap_err();
        assert_eq!(err.offset, 12);
        assert!(err.message.contains("non-increasing"), "{err}");
        assert!(parse("chain(0)").is_err());
    }

    #[test]
    fn syntax_errors_list_expectations() {
        let err = parse("fan(3,)").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(err.expected, vec!["integer"]);
        let err = parse("chain(2) x").unwrap_err();
        assert_eq!(err.expected, vec!["end of input"]);
        let err = parse("tree(2)").unwrap_err();
        assert!(err.expected.contains(&"`fan`".to_string()));
        assert!(parse("chain(2").is_err());
        assert!(parse("chain(99999999999999999999999)").is_err());
    }

    #[test]
    fn interval_suffix() {
        let e = parse("osum_i(fan(3,3)[0,2], chain(2))").unwrap();
        let PosetExpr::OsumLarge(ops) = &e else { panic!() };
        assert_eq!(ops[0].interval, Some((0, 2)));
        assert_eq!(e.to_string(), "osum_i(fan(3,3)[0,2], chain(2))");
    }

    #[test]
    fn canonical_sorts_wedges_only() {
        let a = parse("wedge(diamond(2), chain(3))").unwrap();
        let b = parse("wedge(chain(3), diamond(2))").unwrap();
        assert_eq!(a.canonical_text(), b.canonical_text());
        let c = parse("osum(diamond(2), chain(3))").unwrap();
        let d = parse("osum(chain(3), diamond(2))").unwrap();
        assert_ne!(c.canonical_text(), d.canonical_text());
    }

    fn ints(min: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(min..7usize, 1..4)
    }

    fn arb_expr() -> impl Strategy<Value = PosetExpr> {
        let leaf = prop_oneof![
            (1..9usize).prop_map(PosetExpr::Chain),
            (1..9usize).prop_map(PosetExpr::Antichain),
            (1..9usize).prop_map(PosetExpr::Vee),
            (1..9usize).prop_map(PosetExpr::Diamond),
            (0..7usize).prop_map(PosetExpr::Boolean),
            ints(2).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                PosetExpr::Fan(v)
            }),
            ints(2).prop_map(PosetExpr::Harp),
            Just(PosetExpr::Butterfly),
            Just(PosetExpr::Point),
        ];
        leaf.prop_recursive(3, 20, 3, |inner| {
            let operand = (inner.clone(), prop::option::of((0..9usize, 0..9usize)))
                .prop_map(|(expr, interval)| LargeOperand { expr, interval });
            prop_oneof![
                inner.clone().prop_map(|e| PosetExpr::Dual(Box::new(e))),
                prop::collection::vec(inner.clone(), 1..4).prop_map(PosetExpr::Osum),
                prop::collection::vec(inner, 1..4).prop_map(PosetExpr::Wedge),
                prop::collection::vec(operand, 1..4).prop_map(PosetExpr::OsumLarge),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(e in arb_expr()) {
            let text = e.to_string();
            prop_assert_eq!(parse(&text).unwrap(), e.clone());
            let canon = e.canonical_text();
            prop_assert_eq!(parse(&canon).unwrap().to_string(), canon.clone());
            prop_assert_eq!(parse(&canon).unwrap().canonical_text(), canon);
        }
    }
}
