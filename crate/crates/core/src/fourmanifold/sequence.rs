//! Line-oriented twist-sequence files.
//!
//! ```text
//! start T(5,8)
//! twist n=-1 w=5 -> T(5,3)
//! twist n=-1 w=5 -> T(5,-2)
//! identify T(2,-5)
//! twist n=2 w=2 -> T(2,-1)
//! end unknot
//! ```
//!
//! `start` names the knot reached by the hypothesized `(1,ω)` move from the
//! unknot. Whitespace inside a line is ignored and `#` starts a comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::knot::{apply_full_strand_twist, isotopic, TorusKnotParams, TwistMove};

use super::ledger::{FourManifoldLedger, Linear, Summand};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Twist {
        line: usize,
        mv: TwistMove,
        result: TorusKnotParams,
    },
    Identify {
        line: usize,
        knot: TorusKnotParams,
    },
}

impl Step {
    pub fn line(&self) -> usize {
        match self {
            Step::Twist { line, .. } | Step::Identify { line, .. } => *line,
        }
    }
}

/// Step description before validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawStep {
    Twist {
        n: i64,
        omega: u64,
        result: TorusKnotParams,
    },
    Identify(TorusKnotParams),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSequence {
    start: TorusKnotParams,
    start_line: usize,
    steps: Vec<Step>,
    end_line: usize,
}

impl TwistSequence {
    /// Validates a sequence given programmatically; line numbers are those of
    /// its serialization.
    pub fn build(start: TorusKnotParams, steps: Vec<RawStep>) -> Result<Self> {
        let numbered = steps
            .into_iter()
            .enumerate()
            .map(|(i, s)| (i + 2, s))
            .collect::<Vec<_>>();
        let end_line = numbered.len() + 2;
        validate(start, 1, numbered, end_line)
    }

    pub fn start(&self) -> TorusKnotParams {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Twist moves with the knot each one produces.
    pub fn moves(&self) -> Vec<(TwistMove, TorusKnotParams)> {
        self.steps
            .iter()
            .filter_map(|s| match *s {
                Step::Twist { mv, result, .. } => Some((mv, result)),
                Step::Identify { .. } => None,
            })
            .collect()
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let knot = |k: TorusKnotParams| format!("T({},{})", k.p(), k.q());
        writeln!(out, "start {}", knot(self.start)).unwrap();
        for s in &self.steps {
            match *s {
                Step::Twist { mv, result, .. } => writeln!(
                    out,
                    "twist n={} w={} -> {}",
                    mv.n(),
                    mv.omega(),
                    knot(result)
                )
                .unwrap(),
                Step::Identify { knot: k, .. } => writeln!(out, "identify {}", knot(k)).unwrap(),
            }
        }
        out.push_str("end unknot\n");
        out
    }
}

fn semantic(line: usize, message: String) -> Error {
    Error::Semantic { line, message }
}

/// Knot produced by a move, when it can be determined from the parameters.
fn twist_target(current: TorusKnotParams, mv: TwistMove, line: usize) -> Result<TorusKnotParams> {
    if mv.omega() <= 1 {
        return Ok(current);
    }
    if mv.omega() == current.p().unsigned_abs() {
        return apply_full_strand_twist(current, mv);
    }
    if mv.omega() == current.q().unsigned_abs() {
        let swapped = TorusKnotParams::new(current.q(), current.p())?;
        return apply_full_strand_twist(swapped, mv);
    }
    Err(semantic(
        line,
        format!(
            "twist {mv} on {current}: a disk meeting {} strands is not a full-strand twist",
            mv.omega()
        ),
    ))
}

fn validate(
    start: TorusKnotParams,
    start_line: usize,
    raw: Vec<(usize, RawStep)>,
    end_line: usize,
) -> Result<TwistSequence> {
    let mut current = start;
    let mut steps = Vec::with_capacity(raw.len());
    for (line, step) in raw {
        match step {
            RawStep::Twist { n, omega, result } => {
                let mv = TwistMove::new(n, omega).map_err(|e| semantic(line, e.to_string()))?;
                if !mv.is_supported() {
                    return Err(semantic(
                        line,
                        format!("twist {mv}: odd |n| >= 3 is not supported"),
                    ));
                }
                let expected = twist_target(current, mv, line).map_err(|e| match e {
                    Error::Semantic { .. } => e,
                    other => semantic(line, other.to_string()),
                })?;
                if !isotopic(expected, result) {
                    return Err(semantic(
                        line,
                        format!("twist {mv} on {current} gives {expected}, not {result}"),
                    ));
                }
                steps.push(Step::Twist { line, mv, result });
                current = result;
            }
            RawStep::Identify(knot) => {
                if !isotopic(current, knot) {
                    return Err(semantic(
                        line,
                        format!("{knot} is not the same knot as {current}"),
                    ));
                }
                steps.push(Step::Identify { line, knot });
                current = knot;
            }
        }
    }
    if !current.is_trivial() {
        return Err(semantic(
            end_line,
            format!("sequence ends at {current}, not at the unknot"),
        ));
    }
    Ok(TwistSequence {
        start,
        start_line,
        steps,
        end_line,
    })
}

/// Character cursor over one line that skips whitespace and reports
/// 1-based columns of the original text.
struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        let chars = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Self {
            chars,
            pos: 0,
            line,
            text,
        }
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(c, _)| c)
            .unwrap_or_else(|| self.text.chars().count() + 1)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        let start = self.pos;
        for c in token.chars() {
            if !self.eat(c) {
                let col = self.column();
                self.pos = start;
                return Err(Error::Parse {
                    line: self.line,
                    column: col,
                    message: format!("expected `{token}`"),
                });
            }
        }
        Ok(())
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        let mut s = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            s.push(c);
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    fn knot(&mut self) -> Result<TorusKnotParams> {
        self.expect("T(")?;
        let p = self.int()?;
        self.expect(",")?;
        let q = self.int()?;
        self.expect(")")?;
        TorusKnotParams::new(p, q).map_err(|e| semantic(self.line, e.to_string()))
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.chars.len() {
            Err(self.error("unexpected trailing text"))
        } else {
            Ok(())
        }
    }
}

enum Statement {
    Start(TorusKnotParams),
    Step(RawStep),
    End,
}

fn statement(c: &mut Cursor) -> Result<Statement> {
    let st = match c.peek() {
        Some('s') => {
            c.expect("start")?;
            Statement::Start(c.knot()?)
        }
        Some('t') => {
            c.expect("twist")?;
            c.expect("n=")?;
            let n = c.int()?;
            c.expect("w=")?;
            let col = c.column();
            let w = c.int()?;
            let omega = u64::try_from(w).map_err(|_| Error::Parse {
                line: c.line,
                column: col,
                message: "ω must be nonnegative".into(),
            })?;
            c.expect("->")?;
            Statement::Step(RawStep::Twist {
                n,
                omega,
                result: c.knot()?,
            })
        }
        Some('i') => {
            c.expect("identify")?;
            Statement::Step(RawStep::Identify(c.knot()?))
        }
        Some('e') => {
            c.expect("end")?;
            c.expect("unknot")?;
            Statement::End
        }
        _ => return Err(c.error("expected `start`, `twist`, `identify` or `end`")),
    };
    c.finish()?;
    Ok(st)
}

pub fn parse_sequence(text: &str) -> Result<TwistSequence> {
    let mut start: Option<(usize, TorusKnotParams)> = None;
    let mut steps = Vec::new();
    let mut end_line = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut c = Cursor::new(body, line);
        if end_line.is_some() {
            return Err(c.error("text after `end unknot`"));
        }
        match statement(&mut c)? {
            Statement::Start(k) => {
                if start.is_some() {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: "duplicate `start`".into(),
                    });
                }
                start = Some((line, k));
            }
            Statement::Step(s) => {
                if start.is_none() {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: "sequence must begin with `start`".into(),
                    });
                }
                steps.push((line, s));
            }
            Statement::End => {
                if start.is_none() {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: "sequence must begin with `start`".into(),
                    });
                }
                end_line = Some(line);
            }
        }
    }
    let Some((start_line, start)) = start else {
        return Err(Error::Parse {
            line: last_line.max(1),
            column: 1,
            message: "empty sequence: expected `start T(p,q)`".into(),
        });
    };
    let Some(end_line) = end_line else {
        return Err(Error::Parse {
            line: last_line + 1,
            column: 1,
            message: "missing `end unknot`".into(),
        });
    };
    validate(start, start_line, steps, end_line)
}

/// Summands of the closed manifold built from the sequence.
///
/// With `symbolic_omega` the hypothesized `(1,ω)` move from the unknot to the
/// start knot is included with unknown `ω`; otherwise the sequence itself
/// must start at the unknot.
pub fn ledger_from_sequence(s: &TwistSequence, symbolic_omega: bool) -> Result<FourManifoldLedger> {
    let mut l = FourManifoldLedger::new();
    if symbolic_omega {
        l.push(Summand::MinusCp2 {
            coefficient: Linear::omega(),
        });
    } else if !s.start.is_trivial() {
        return Err(semantic(
            s.start_line,
            format!("sequence starts at {}, not at the unknot", s.start),
        ));
    }
    for (mv, _) in s.moves() {
        let w = Linear::constant(mv.omega() as i64);
        let summand = match mv.n() {
            1 => Summand::MinusCp2 { coefficient: w },
            -1 => Summand::PlusCp2 { coefficient: w },
            n if n % 2 == 0 => Summand::S2xS2 {
                alpha: w,
                beta: w.scale(-n / 2),
            },
            _ => {
                return Err(Error::UnsupportedStep(format!(
                    "twist {mv}: odd |n| >= 3 has no homological model"
                )))
            }
        };
        l.push(summand);
    }
    debug_assert!(s.end_line > s.start_line);
    Ok(l)
}
