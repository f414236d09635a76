//! Extended Gauss code.
//!
//! Tokens: `O<k><s>` / `U<k><s>` for the over / under passage of classical
//! crossing `k` with sign `s`; `X<j>a` / `X<j>b` for the two passages of
//! double point `j`, optionally followed by `+` or `-` giving the sign of
//! `d_a × d_b`; `*` marks the base point. Without that suffix the planar
//! chirality is inferred, preferring `+`.

use std::collections::BTreeMap;

use super::{Kind, SingularKnotDiagram, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Over(usize, i8),
    Under(usize, i8),
    Dp(usize, bool, Option<i8>),
}

fn parse_sign(c: char) -> Option<i8> {
    match c {
        '+' => Some(1),
        '-' | '−' => Some(-1),
        _ => None,
    }
}

fn parse_token(pos: usize, tok: &str) -> Result<Tok> {
    let err = |m: &str| Error::Parse { position: pos, message: format!("{m} in token {tok:?}") };
    let mut chars = tok.chars();
    let head = chars.next().ok_or_else(|| err("empty token"))?;
    let rest: String = chars.collect();
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    if digits.is_empty() {
        return Err(err("missing label"));
    }
    let label: usize = digits.parse().map_err(|_| err("bad label"))?;
    if label == 0 {
        return Err(err("labels start at 1"));
    }
    let tail: Vec<char> = rest[digits.len()..].chars().collect();
    match head {
        'O' | 'U' => {
            let [c] = tail[..] else { return Err(err("expected exactly one sign")) };
            let s = parse_sign(c).ok_or_else(|| err("bad sign"))?;
            Ok(if head == 'O' { Tok::Over(label, s) } else { Tok::Under(label, s) })
        }
        'X' => {
            let (first, chir) = match tail[..] {
                ['a'] => (true, None),
                ['b'] => (false, None),
                ['a', c] => (true, Some(parse_sign(c).ok_or_else(|| err("bad chirality"))?)),
                ['b', c] => (false, Some(parse_sign(c).ok_or_else(|| err("bad chirality"))?)),
                _ => return Err(err("expected a or b")),
            };
            Ok(Tok::Dp(label, first, chir))
        }
        _ => Err(err("unknown token kind")),
    }
}

impl SingularKnotDiagram {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Vec<&str> = text.split_whitespace().collect();
        let mut toks: Vec<(usize, Tok)> = Vec::new();
        let mut base: Option<usize> = None;
        for (i, t) in raw.iter().enumerate() {
            if *t == "*" {
                if base.is_some() {
                    return Err(Error::Parse { position: i, message: "second base point".into() });
                }
                base = Some(toks.len());
            } else {
                toks.push((i, parse_token(i, t)?));
            }
        }
        if let Some(b) = base {
            toks.rotate_left(b);
        }
        let last = raw.len();

        let mut classical: BTreeMap<usize, Vec<(usize, usize, bool, i8)>> = BTreeMap::new();
        let mut doubles: BTreeMap<usize, Vec<(usize, usize, bool, Option<i8>)>> = BTreeMap::new();
        for (w, &(src, t)) in toks.iter().enumerate() {
            match t {
                Tok::Over(k, s) => classical.entry(k).or_default().push((w, src, true, s)),
                Tok::Under(k, s) => classical.entry(k).or_default().push((w, src, false, s)),
                Tok::Dp(j, a, c) => doubles.entry(j).or_default().push((w, src, a, c)),
            }
        }

        let mut vertex_at = vec![usize::MAX; toks.len()];
        let mut vertices = Vec::new();
        for (k, occ) in &classical {
            let bad = |m: String| Error::Parse { position: occ.last().map_or(last, |o| o.1), message: m };
            if occ.len() != 2 {
                return Err(bad(format!("crossing {k} occurs {} times", occ.len())));
            }
            let (o, u) = if occ[0].2 { (occ[0], occ[1]) } else { (occ[1], occ[0]) };
            if !o.2 || u.2 {
                return Err(bad(format!("crossing {k} needs one O and one U")));
            }
            if o.3 != u.3 {
                return Err(bad(format!("crossing {k} has inconsistent signs")));
            }
            let over_first = o.0 < u.0;
            let rot = if over_first { o.3 } else { -o.3 };
            vertex_at[o.0] = vertices.len();
            vertex_at[u.0] = vertices.len();
            vertices.push(Vertex { kind: Kind::Crossing { over_first }, rot });
        }
        let mut unknown = Vec::new();
        for (j, occ) in &doubles {
            let bad = |m: String| Error::Parse { position: occ.last().map_or(last, |o| o.1), message: m };
            if occ.len() != 2 {
                return Err(bad(format!("double point {j} occurs {} times", occ.len())));
            }
            let (a, b) = if occ[0].2 { (occ[0], occ[1]) } else { (occ[1], occ[0]) };
            if !a.2 || b.2 {
                return Err(bad(format!("double point {j} needs one a and one b")));
            }
            let chir = match (a.3, b.3) {
                (Some(x), Some(y)) if x != y => return Err(bad(format!("double point {j} has two chiralities"))),
                (Some(x), _) | (_, Some(x)) => Some(x),
                _ => None,
            };
            let flip = if a.0 < b.0 { 1 } else { -1 };
            vertex_at[a.0] = vertices.len();
            vertex_at[b.0] = vertices.len();
            if chir.is_none() {
                unknown.push((vertices.len(), flip));
            }
            vertices.push(Vertex { kind: Kind::Double { label: *j }, rot: chir.unwrap_or(1) * flip });
        }

        let based = base.is_some();
        if unknown.len() > 16 {
            return Err(Error::ResourceCap { what: "double points without chirality", value: unknown.len(), cap: 16 });
        }
        let mut last_err = None;
        for mask in 0..1u32 << unknown.len() {
            let mut vs = vertices.clone();
            for (bit, &(v, flip)) in unknown.iter().enumerate() {
                vs[v].rot = if mask & (1 << bit) == 0 { flip } else { -flip };
            }
            match SingularKnotDiagram::new(vertex_at.clone(), vs, based) {
                Ok(d) => return Ok(d),
                Err(e @ Error::NonPlanar(_)) => last_err = Some(e),
                Err(e) => return Err(e),
            }
        }
        Err(last_err.unwrap_or_else(|| Error::NonPlanar(text.to_string())))
    }

    /// Code with classical crossings numbered by first appearance.
    pub fn to_gauss(&self) -> String {
        let pos = self.positions();
        let mut number = vec![0; self.vertices.len()];
        let mut next = 1;
        let mut toks = Vec::with_capacity(self.word.len() + 1);
        if self.based {
            toks.push("*".to_string());
        }
        let sgn = |s: i8| if s > 0 { '+' } else { '-' };
        for (t, &v) in self.word.iter().enumerate() {
            let first = pos[v].0 == t;
            let vx = self.vertices[v];
            match vx.kind {
                Kind::Crossing { over_first } => {
                    if number[v] == 0 {
                        number[v] = next;
                        next += 1;
                    }
                    let over = over_first == first;
                    let s = vx.sign().expect("crossing");
                    toks.push(format!("{}{}{}", if over { 'O' } else { 'U' }, number[v], sgn(s)));
                }
                Kind::Double { label } => {
                    toks.push(format!("X{label}{}{}", if first { 'a' } else { 'b' }, sgn(vx.rot)));
                }
            }
        }
        toks.join(" ")
    }
}
