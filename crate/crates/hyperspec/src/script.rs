//! Edge-move scripts, one operation per line:
//!
//! ```text
//! # comment
//! MOVE 3:1 4:1 -> 0     move edges 3 and 4 from vertex 1 to vertex 0
//! PM 1 2                move the edges of 2 that avoid 1 onto 1
//! NE 1 2 2 5            move the edges of v1=2 except f=2 to u2=5 (e=1)
//! ```
//!
//! Labels in each line refer to the hypergraph produced by the previous line.

use hyperspec_core::moves::{move_edges, ne_move, pm_merge, EdgeMove, Moved};
use hyperspec_core::{Error, Result, UniformHypergraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Move(EdgeMove),
    Pm { u1: usize, u2: usize },
    Ne { e: usize, f: usize, v1: usize, u2: usize },
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse { line, message: format!("`{tok}` is not a non-negative integer") })
}

pub fn parse_script(text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let err = |message: &str| Error::Parse { line, message: message.to_string() };
        let step = match toks[0].to_ascii_uppercase().as_str() {
            "MOVE" => {
                let arrow = toks
                    .iter()
                    .position(|&t| t == "->")
                    .ok_or_else(|| err("MOVE needs `-> target`"))?;
                if arrow + 2 != toks.len() {
                    return Err(err("MOVE needs exactly one target after `->`"));
                }
                let mut sources = Vec::new();
                for pair in &toks[1..arrow] {
                    let (e, v) = pair.split_once(':').ok_or_else(|| err("sources are `edge:vertex`"))?;
                    sources.push((number(line, e)?, number(line, v)?));
                }
                Step::Move(EdgeMove::new(sources, number(line, toks[arrow + 1])?))
            }
            "PM" if toks.len() == 3 => Step::Pm {
                u1: number(line, toks[1])?,
                u2: number(line, toks[2])?,
            },
            "NE" if toks.len() == 5 => Step::Ne {
                e: number(line, toks[1])?,
                f: number(line, toks[2])?,
                v1: number(line, toks[3])?,
                u2: number(line, toks[4])?,
            },
            _ => return Err(err("expected `MOVE e:v ... -> u`, `PM u1 u2` or `NE e f v1 u2`")),
        };
        steps.push(step);
    }
    Ok(steps)
}

pub fn apply_step(h: &UniformHypergraph, step: &Step) -> Result<Moved> {
    match step {
        Step::Move(mv) => move_edges(h, mv),
        Step::Pm { u1, u2 } => pm_merge(h, *u1, *u2),
        Step::Ne { e, f, v1, u2 } => ne_move(h, *e, *f, *v1, *u2),
    }
}
