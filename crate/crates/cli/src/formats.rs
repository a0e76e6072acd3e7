//! Text formats: algebra files, complex files, module files and module
//! expressions.
//!
//! Algebra files list vertices, arrows and relations:
//!
//! ```text
//! vertex: 1
//! arrow: alpha 1 2
//! relation: 1*alpha*gamma - 1*beta*delta
//! ```
//!
//! Complex files give the multiplicity vectors of both degrees and the
//! differential entrywise (rows = degree-0 summands, columns = degree -1
//! summands, each entry an element of `e_w A e_v` written as a rational
//! combination of paths from the row's vertex to the column's vertex):
//!
//! ```text
//! deg -1: 0 1 1 1
//! deg 0: 3 0 0 0
//! diff:
//! 0 0 0
//! 1*alpha 0 0
//! 0 1*beta 0
//! ```

use num_traits::{One, Signed, Zero};

use tiltlab::error::{Error, Result};
use tiltlab::exactla::Rat;
use tiltlab::modcat::{
    basis_indices, hom_from_projective, map_from_summands, map_into_summands,
    realize_projectives, RepMap, Representation,
};
use tiltlab::quiveralg::{AlgebraPresentation, AlgebraRef, Arrow, Path, PathComb, Quiver};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_rational(s: &str, line: usize) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<num_bigint::BigInt> {
        t.parse::<num_bigint::BigInt>()
            .map_err(|_| parse_err(line, format!("bad integer `{t}`")))
    };
    if let Some((n, d)) = s.split_once('/') {
        let num = parse_int(n)?;
        let den = parse_int(d)?;
        if den.is_zero() {
            return Err(parse_err(line, "zero denominator"));
        }
        Ok(Rat::new(num, den))
    } else {
        Ok(Rat::from_integer(parse_int(s)?))
    }
}

fn format_rational(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse one path token: either arrow names joined by `*`, or a lazy path
/// `e<vertex>`.
fn parse_path(token: &str, quiver: &Quiver, line: usize) -> Result<Path> {
    let names: Vec<&str> = token.split('*').collect();
    if names.len() == 1 {
        let name = names[0];
        if let Some(a) = quiver.arrow_index(name) {
            return Path::from_arrows(quiver, vec![a])
                .map_err(|e| parse_err(line, e.to_string()));
        }
        if let Some(rest) = name.strip_prefix('e') {
            if let Some(v) = quiver.vertex_index(rest) {
                return Ok(Path::lazy(v));
            }
        }
        return Err(parse_err(line, format!("unknown arrow or vertex `{name}`")));
    }
    let mut arrows = Vec::with_capacity(names.len());
    for name in names {
        let a = quiver
            .arrow_index(name)
            .ok_or_else(|| parse_err(line, format!("unknown arrow `{name}`")))?;
        arrows.push(a);
    }
    Path::from_arrows(quiver, arrows).map_err(|e| parse_err(line, e.to_string()))
}

/// Parse a rational path combination like `1*alpha*gamma - 1/2*beta*delta`.
fn parse_comb(text: &str, quiver: &Quiver, line: usize) -> Result<PathComb> {
    let mut terms = Vec::new();
    // tokenize on +/- while keeping signs
    let mut rest = text.trim();
    let mut sign = Rat::one();
    if let Some(stripped) = rest.strip_prefix('-') {
        sign = -Rat::one();
        rest = stripped.trim_start();
    }
    loop {
        let end = rest
            .char_indices()
            .skip(1)
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = rest[..end].trim();
        let (coeff_str, path_str) = term
            .split_once('*')
            .ok_or_else(|| parse_err(line, format!("term `{term}` must be coeff*path")))?;
        let coeff = parse_rational(coeff_str.trim(), line)? * &sign;
        let path = parse_path(path_str.trim(), quiver, line)?;
        terms.push((coeff, path));
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' {
            -Rat::one()
        } else {
            Rat::one()
        };
        rest = rest[end + 1..].trim_start();
    }
    let comb = PathComb::new(terms);
    comb.endpoints(quiver)
        .map_err(|e| parse_err(line, e.to_string()))?;
    Ok(comb)
}

fn format_comb(comb: &PathComb, quiver: &Quiver) -> String {
    if comb.terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, p)) in comb.terms.iter().enumerate() {
        let mag = format_rational(&c.abs());
        let path = p.display(quiver);
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&format!("{mag}*{path}"));
    }
    out
}

/// Strip comments and blank lines, keeping 1-based line numbers.
fn content_lines(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let no_comment = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let trimmed = no_comment.trim();
            if trimmed.is_empty() {
                None
            } else {
                Some((i + 1, trimmed.to_string()))
            }
        })
        .collect()
}

/// Parse an algebra file into a presentation.
pub fn parse_algebra(text: &str) -> Result<AlgebraPresentation> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(usize, String, String, String)> = Vec::new();
    let mut relations: Vec<(usize, String)> = Vec::new();
    for (line, content) in content_lines(text) {
        if let Some(rest) = content.strip_prefix("vertex:") {
            let name = rest.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(parse_err(line, "vertex needs a single name"));
            }
            vertices.push(name.to_string());
        } else if let Some(rest) = content.strip_prefix("arrow:") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(parse_err(line, "arrow needs `name src tgt`"));
            }
            arrows.push((
                line,
                parts[0].to_string(),
                parts[1].to_string(),
                parts[2].to_string(),
            ));
        } else if let Some(rest) = content.strip_prefix("relation:") {
            relations.push((line, rest.trim().to_string()));
        } else {
            return Err(parse_err(line, format!("unrecognized line `{content}`")));
        }
    }
    if vertices.is_empty() {
        return Err(parse_err(0, "no vertices"));
    }
    let mut arrow_list = Vec::new();
    for (line, name, src, tgt) in arrows {
        let s = vertices
            .iter()
            .position(|v| *v == src)
            .ok_or_else(|| parse_err(line, format!("unknown vertex `{src}`")))?;
        let t = vertices
            .iter()
            .position(|v| *v == tgt)
            .ok_or_else(|| parse_err(line, format!("unknown vertex `{tgt}`")))?;
        arrow_list.push(Arrow {
            name,
            src: s,
            tgt: t,
        });
    }
    let quiver = Quiver::new(vertices, arrow_list).map_err(|e| parse_err(0, e.to_string()))?;
    let mut combs = Vec::new();
    for (line, text) in relations {
        let comb = parse_comb(&text, &quiver, line)?;
        if comb.terms.iter().any(|(_, p)| p.len() < 2) {
            return Err(parse_err(line, "relation paths must have length at least 2"));
        }
        combs.push(comb);
    }
    AlgebraPresentation::new(quiver, combs).map_err(|e| parse_err(0, e.to_string()))
}

/// Canonical printer; `parse . print` is the identity on printed output.
pub fn print_algebra(pres: &AlgebraPresentation) -> String {
    let q = &pres.quiver;
    let mut out = String::new();
    for v in q.vertex_names() {
        out.push_str(&format!("vertex: {v}\n"));
    }
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow: {} {} {}\n",
            a.name,
            q.vertex_name(a.src),
            q.vertex_name(a.tgt)
        ));
    }
    for rel in &pres.relations {
        out.push_str(&format!("relation: {}\n", format_comb(rel, q)));
    }
    out
}

/// Parse a complex file over the given algebra.
pub fn parse_complex(text: &str, algebra: &AlgebraRef) -> Result<tiltlab::complexcat::TwoTermComplex> {
    let q = algebra.quiver();
    let nv = q.vertex_count();
    let lines = content_lines(text);
    let mut idx = 0;
    let parse_mults = |expected_prefix: &str, line: usize, content: &str| -> Result<Vec<usize>> {
        let rest = content
            .strip_prefix(expected_prefix)
            .ok_or_else(|| parse_err(line, format!("expected `{expected_prefix}` line")))?;
        let mults: Vec<usize> = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(line, format!("bad multiplicity `{t}`")))
            })
            .collect::<Result<_>>()?;
        if mults.len() != nv {
            return Err(parse_err(
                line,
                format!("expected {nv} multiplicities, found {}", mults.len()),
            ));
        }
        Ok(mults)
    };
    let (l1, c1) = lines
        .get(idx)
        .ok_or_else(|| parse_err(0, "missing `deg -1:` line"))?;
    let m_minus1 = parse_mults("deg -1:", *l1, c1)?;
    idx += 1;
    let (l2, c2) = lines
        .get(idx)
        .ok_or_else(|| parse_err(0, "missing `deg 0:` line"))?;
    let m_zero = parse_mults("deg 0:", *l2, c2)?;
    idx += 1;
    let (l3, c3) = lines
        .get(idx)
        .ok_or_else(|| parse_err(0, "missing `diff:` line"))?;
    if c3.trim() != "diff:" {
        return Err(parse_err(*l3, "expected `diff:`"));
    }
    idx += 1;
    // summand vertex lists
    let src_verts: Vec<usize> = layout_vertices(&m_minus1);
    let tgt_verts: Vec<usize> = layout_vertices(&m_zero);
    // no rows are written when either term is zero
    let expect_rows = if src_verts.is_empty() || tgt_verts.is_empty() {
        0
    } else {
        tgt_verts.len()
    };
    let mut entries: Vec<Vec<Option<PathComb>>> = Vec::new();
    for row in 0..expect_rows {
        let (line, content) = lines
            .get(idx)
            .ok_or_else(|| parse_err(0, format!("missing differential row {}", row + 1)))?;
        idx += 1;
        // split row into entry tokens: entries contain no whitespace except
        // inside combinations; use top-level splitting by runs separated by
        // whitespace where `+`/`-` glue terms -- entries are separated by
        // whitespace and combinations must be written without spaces or
        // wrapped in parentheses
        let toks = split_entries(content);
        if toks.len() != src_verts.len() {
            return Err(parse_err(
                *line,
                format!("expected {} entries, found {}", src_verts.len(), toks.len()),
            ));
        }
        let mut row_entries = Vec::new();
        for (col, tok) in toks.iter().enumerate() {
            if *tok == "0" {
                row_entries.push(None);
                continue;
            }
            let comb = parse_comb(tok, q, *line)?;
            let (s, t) = comb
                .endpoints(q)
                .map_err(|e| parse_err(*line, e.to_string()))?;
            // entry for (row P_w, col P_v) lives in e_w A e_v: paths w -> v
            if s != tgt_verts[row] || t != src_verts[col] {
                return Err(parse_err(
                    *line,
                    format!(
                        "entry ({},{}) must be a combination of paths from vertex {} to vertex {}",
                        row + 1,
                        col + 1,
                        q.vertex_name(tgt_verts[row]),
                        q.vertex_name(src_verts[col])
                    ),
                ));
            }
            row_entries.push(Some(comb));
        }
        entries.push(row_entries);
    }
    if idx != lines.len() {
        return Err(parse_err(lines[idx].0, "trailing content after the differential"));
    }
    build_complex(algebra, m_minus1, m_zero, &entries)
}

fn layout_vertices(mults: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (v, &k) in mults.iter().enumerate() {
        for _ in 0..k {
            out.push(v);
        }
    }
    out
}

/// Entries are whitespace-separated; combinations may use parentheses to
/// include spaces around their +/- signs.
fn split_entries(row: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in row.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                continue;
            }
            _ => {}
        }
        if ch != '(' && ch != ')' {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn build_complex(
    algebra: &AlgebraRef,
    m_minus1: Vec<usize>,
    m_zero: Vec<usize>,
    entries: &[Vec<Option<PathComb>>],
) -> Result<tiltlab::complexcat::TwoTermComplex> {
    let term_minus1 = realize_projectives(algebra, &m_minus1);
    let term_zero = realize_projectives(algebra, &m_zero);
    let src_verts = layout_vertices(&m_minus1);
    let tgt_verts = layout_vertices(&m_zero);
    let mut column_maps = Vec::new();
    for (col, &v) in src_verts.iter().enumerate() {
        let pv = Representation::projective(algebra.clone(), v);
        // map P_v -> each row summand
        let mut pieces = Vec::new();
        for (row, &w) in tgt_verts.iter().enumerate() {
            let pw = Representation::projective(algebra.clone(), w);
            let piece = match &entries[row][col] {
                None => RepMap::zero(pv.clone(), pw.clone())?,
                Some(comb) => {
                    let x = algebra.eval_comb(comb);
                    let coords: Vec<Rat> = basis_indices(algebra, w, v)
                        .iter()
                        .map(|&i| x[i].clone())
                        .collect();
                    hom_from_projective(algebra, v, &pw, &coords)
                }
            };
            pieces.push(piece);
        }
        column_maps.push(map_into_summands(&pv, &pieces, &term_zero));
    }
    let diff = if column_maps.is_empty() {
        RepMap::zero(term_minus1.clone(), term_zero.clone())?
    } else {
        map_from_summands(&term_minus1, &column_maps, &term_zero)
    };
    tiltlab::complexcat::TwoTermComplex::new(algebra.clone(), m_minus1, m_zero, diff)
}

/// Print a complex file (entries reconstructed from the differential).
pub fn print_complex(t: &tiltlab::complexcat::TwoTermComplex) -> String {
    let alg = t.algebra();
    let q = alg.quiver();
    let mut out = String::new();
    out.push_str(&format!(
        "deg -1: {}\n",
        t.mults_minus1()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    ));
    out.push_str(&format!(
        "deg 0: {}\n",
        t.mults_zero()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    ));
    out.push_str("diff:\n");
    let src_verts = layout_vertices(t.mults_minus1());
    let tgt_verts = layout_vertices(t.mults_zero());
    if src_verts.is_empty() || tgt_verts.is_empty() {
        return out;
    }
    // recover each block entry as an algebra element by evaluating the
    // differential on the lazy-path generator of the source summand
    for (row, &w) in tgt_verts.iter().enumerate() {
        let mut toks = Vec::new();
        for (col, &v) in src_verts.iter().enumerate() {
            let x = block_element(t, row, col, v, w);
            if x.iter().all(Zero::is_zero) {
                toks.push("0".to_string());
            } else {
                // express over the path labels of the basis
                let mut comb_terms = Vec::new();
                for (i, c) in x.iter().enumerate() {
                    if !c.is_zero() {
                        comb_terms.push((c.clone(), basis_path(alg, i)));
                    }
                }
                toks.push(format_comb(&PathComb::new(comb_terms), q));
            }
        }
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

fn basis_path(alg: &AlgebraRef, i: usize) -> Path {
    // basis expressions of assembled algebras are single paths
    let expr = alg.basis_expression(i);
    expr.terms[0].1.clone()
}

/// The element of `e_w A e_v` in block (row, col) of the differential.
fn block_element(
    t: &tiltlab::complexcat::TwoTermComplex,
    row: usize,
    col: usize,
    v: usize,
    w: usize,
) -> Vec<Rat> {
    let alg = t.algebra();
    // offsets of the summands inside each vertex space
    let src_verts = layout_vertices(t.mults_minus1());
    let tgt_verts = layout_vertices(t.mults_zero());
    let dim_at = |p: usize, u: usize| basis_indices(alg, p, u).len();
    let src_off: usize = src_verts[..col].iter().map(|&p| dim_at(p, v)).sum();
    let tgt_off: usize = tgt_verts[..row].iter().map(|&p| dim_at(p, v)).sum();
    // image of the lazy generator of the col summand at vertex v, read off
    // in the row summand's coordinates
    let lazy_pos = basis_indices(alg, v, v)
        .iter()
        .position(|&b| b == alg.idempotent_index(v))
        .expect("lazy path");
    let mut result = vec![Rat::zero(); alg.dim()];
    let basis_wv = basis_indices(alg, w, v);
    for (k, &bi) in basis_wv.iter().enumerate() {
        let val = t
            .diff()
            .mat(v)
            .at(tgt_off + k, src_off + lazy_pos)
            .clone();
        result[bi] = val;
    }
    result
}

/// Parse a module file: dimension vector plus arrow matrices.
pub fn parse_module(text: &str, algebra: &AlgebraRef) -> Result<Representation> {
    let q = algebra.quiver();
    let nv = q.vertex_count();
    let lines = content_lines(text);
    let mut dims: Option<Vec<usize>> = None;
    let mut mats: Vec<Option<Vec<Vec<Rat>>>> = vec![None; q.arrows().len()];
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix("dims:") {
            let d: Vec<usize> = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_err(line, format!("bad dimension `{t}`")))
                })
                .collect::<Result<_>>()?;
            if d.len() != nv {
                return Err(parse_err(line, format!("expected {nv} dimensions")));
            }
            dims = Some(d);
        } else if let Some(rest) = content.strip_prefix("arrow ") {
            let (name, rows_text) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line, "arrow line needs `arrow name: rows`"))?;
            let a = q
                .arrow_index(name.trim())
                .ok_or_else(|| parse_err(line, format!("unknown arrow `{}`", name.trim())))?;
            let rows: Vec<Vec<Rat>> = rows_text
                .split(';')
                .map(|row| {
                    row.split_whitespace()
                        .map(|t| parse_rational(t, line))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?;
            mats[a] = Some(rows);
        } else {
            return Err(parse_err(line, format!("unrecognized line `{content}`")));
        }
    }
    let dims = dims.ok_or_else(|| parse_err(0, "missing `dims:` line"))?;
    let arrow_mats: Vec<tiltlab::exactla::Matrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let (r, c) = (dims[arrow.tgt], dims[arrow.src]);
            match &mats[a] {
                None => Ok(tiltlab::exactla::Matrix::zero(r, c)),
                Some(rows) => {
                    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                        return Err(parse_err(
                            0,
                            format!("arrow {} expects a {}x{} matrix", arrow.name, r, c),
                        ));
                    }
                    Ok(tiltlab::exactla::Matrix::from_fn(r, c, |i, j| {
                        rows[i][j].clone()
                    }))
                }
            }
        })
        .collect::<Result<_>>()?;
    Representation::new(algebra.clone(), dims, arrow_mats)
}

/// Module expressions over the canonical modules: `P1`, `I4+S3+S2`,
/// `2*P1+S1`, or `0`. Vertex part of a name is the vertex's name.
pub fn parse_module_expr(expr: &str, algebra: &AlgebraRef) -> Result<Representation> {
    let expr = expr.trim();
    if expr == "0" {
        return Ok(Representation::zero(algebra.clone()));
    }
    let mut parts: Vec<Representation> = Vec::new();
    for raw_term in expr.split('+') {
        let term = raw_term.trim();
        if term.is_empty() {
            return Err(parse_err(0, "empty term in module expression"));
        }
        let (mult, name) = match term.split_once('*') {
            Some((m, n)) => (
                m.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(0, format!("bad multiplicity in `{term}`")))?,
                n.trim(),
            ),
            None => (1, term),
        };
        if name.len() < 2 {
            return Err(parse_err(0, format!("malformed module name `{name}`")));
        }
        let (kind, vertex_name) = name.split_at(1);
        let v = algebra
            .quiver()
            .vertex_index(vertex_name)
            .ok_or_else(|| parse_err(0, format!("unknown vertex `{vertex_name}` in `{name}`")))?;
        let rep = match kind {
            "P" => Representation::projective(algebra.clone(), v),
            "I" => Representation::injective(algebra.clone(), v),
            "S" => Representation::simple(algebra.clone(), v),
            _ => return Err(parse_err(0, format!("module names start with P, I or S: `{name}`"))),
        };
        for _ in 0..mult {
            parts.push(rep.clone());
        }
    }
    if parts.is_empty() {
        return Err(parse_err(0, "empty module expression"));
    }
    Representation::direct_sum(&parts.iter().collect::<Vec<_>>())
}
