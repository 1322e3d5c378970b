//! Line-oriented text formats: quandle, action, cocycle, chain and
//! triple-point files. `#` starts a comment anywhere, parsing tolerates
//! arbitrary whitespace, and writers emit canonical single-space-separated
//! output.

use crate::chain::{Chain, Tuple};
use crate::cocycle::{CoefficientGroup, Cocycle};
use crate::error::{Error, Result};
use crate::group::{GroupPresentation, XSetAction};
use crate::homology::ComplexVariant;
use crate::quandle::{FiniteGroupTable, FiniteQuandle, Involution, SymmetricQuandle};
use crate::surface::{ColoredTriplePointData, SurfaceColoring, WeightTerm};
use num_bigint::BigInt;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            None
        } else {
            Some((i + 1, trimmed))
        }
    })
}

fn parse_usize(lineno: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: expected an index, got '{tok}'")))
}

/// Resolves an element token: a bare index, or a label from the alias table.
pub fn resolve_token(lineno: usize, tok: &str, labels: Option<&[String]>) -> Result<usize> {
    if let Ok(v) = tok.parse::<usize>() {
        return Ok(v);
    }
    if let Some(ls) = labels {
        if let Some(i) = ls.iter().position(|l| l == tok) {
            return Ok(i);
        }
    }
    Err(Error::Parse(format!(
        "line {lineno}: unknown element '{tok}'"
    )))
}

/// Parsed quandle file: the verified quandle, an optional involution (not
/// yet checked for goodness) and an optional label table.
#[derive(Debug, Clone)]
pub struct QuandleFile {
    pub quandle: FiniteQuandle,
    pub rho: Option<Involution>,
    pub labels: Option<Vec<String>>,
}

impl QuandleFile {
    /// The symmetric quandle, requiring a rho line and verifying goodness.
    pub fn symmetric(&self) -> Result<SymmetricQuandle> {
        let rho = self
            .rho
            .clone()
            .ok_or_else(|| Error::Invalid("quandle file carries no rho line".into()))?;
        SymmetricQuandle::new(self.quandle.clone(), rho)
    }

    pub fn resolve(&self, lineno: usize, tok: &str) -> Result<usize> {
        let v = resolve_token(lineno, tok, self.labels.as_deref())?;
        if v >= self.quandle.order() {
            return Err(Error::EntryOutOfRange {
                value: v,
                n: self.quandle.order(),
            });
        }
        Ok(v)
    }
}

/// Parses a quandle file: `quandle <n>`, `n` table rows, then optional
/// `rho <i..>` and `labels <tok..>` lines.
pub fn parse_quandle_file(text: &str) -> Result<QuandleFile> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty quandle file".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("quandle") {
        return Err(Error::Parse(format!(
            "line {lineno}: expected 'quandle <n>' header"
        )));
    }
    let n = parse_usize(
        lineno,
        toks.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: missing order")))?,
    )?;
    let mut table = Vec::with_capacity(n);
    let mut rho = None;
    let mut labels = None;
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "rho" => {
                let vals: Vec<usize> = toks[1..]
                    .iter()
                    .map(|t| parse_usize(lineno, t))
                    .collect::<Result<_>>()?;
                if vals.len() != n {
                    return Err(Error::Parse(format!(
                        "line {lineno}: rho line needs {n} entries"
                    )));
                }
                rho = Some(Involution::new(vals)?);
            }
            "labels" => {
                let ls: Vec<String> = toks[1..].iter().map(|t| t.to_string()).collect();
                if ls.len() != n {
                    return Err(Error::Parse(format!(
                        "line {lineno}: labels line needs {n} tokens"
                    )));
                }
                labels = Some(ls);
            }
            _ => {
                if table.len() == n {
                    return Err(Error::Parse(format!(
                        "line {lineno}: unexpected extra row"
                    )));
                }
                let row: Vec<usize> = toks
                    .iter()
                    .map(|t| parse_usize(lineno, t))
                    .collect::<Result<_>>()?;
                table.push(row);
            }
        }
    }
    if table.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} table rows, found {}",
            table.len()
        )));
    }
    Ok(QuandleFile {
        quandle: FiniteQuandle::from_table(table)?,
        rho,
        labels,
    })
}

/// Writes a quandle file in canonical form.
pub fn write_quandle_file(
    q: &FiniteQuandle,
    rho: Option<&Involution>,
    labels: Option<&[String]>,
) -> String {
    let n = q.order();
    let mut out = format!("quandle {n}\n");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| q.op(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(r) = rho {
        let vals: Vec<String> = r.as_slice().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("rho {}\n", vals.join(" ")));
    }
    if let Some(ls) = labels {
        out.push_str(&format!("labels {}\n", ls.join(" ")));
    }
    out
}

/// Parses an action file: `xset <ySize> <xSize>` plus `ySize` rows. The
/// table is raw; validation against a symmetric quandle happens separately.
pub fn parse_xset_file(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty xset file".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("xset") {
        return Err(Error::Parse(format!(
            "line {lineno}: expected 'xset <ySize> <xSize>' header"
        )));
    }
    let y_size = parse_usize(
        lineno,
        toks.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: missing ySize")))?,
    )?;
    let x_size = parse_usize(
        lineno,
        toks.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: missing xSize")))?,
    )?;
    let mut table = Vec::with_capacity(y_size);
    for (lineno, line) in lines {
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| parse_usize(lineno, t))
            .collect::<Result<_>>()?;
        if row.len() != x_size {
            return Err(Error::Parse(format!(
                "line {lineno}: row needs {x_size} entries"
            )));
        }
        table.push(row);
    }
    if table.len() != y_size {
        return Err(Error::Parse(format!(
            "expected {y_size} rows, found {}",
            table.len()
        )));
    }
    Ok(table)
}

pub fn write_xset_file(action: &XSetAction) -> String {
    let mut out = format!("xset {} {}\n", action.y_size(), action.x_size());
    for row in action.table() {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&vals.join(" "));
        out.push('\n');
    }
    out
}

fn parse_coeff(lineno: usize, tok: &str) -> Result<CoefficientGroup> {
    if tok == "Z" {
        return Ok(CoefficientGroup::Integers);
    }
    if let Some(m) = tok.strip_prefix("Z/") {
        let m: u64 = m
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad modulus in '{tok}'")))?;
        if m < 2 {
            return Err(Error::Parse(format!(
                "line {lineno}: modulus must be at least 2"
            )));
        }
        return Ok(CoefficientGroup::IntegersMod(m));
    }
    Err(Error::Parse(format!(
        "line {lineno}: expected coefficient group Z or Z/m, got '{tok}'"
    )))
}

/// Header and entries of a parsed cocycle file.
pub type CocycleFileData = (usize, CoefficientGroup, ComplexVariant, Vec<(Tuple, BigInt)>);

/// Parses a cocycle file: header
/// `cocycle deg=<n> coeff=<Z|Z/m> variant=<R|Q|Rrho|Qrho>`, then entry lines
/// `y x1 .. xn value`. Label aliases resolve through `labels`. The cocycle
/// conditions are not checked here; load through [`Cocycle::verified`] or
/// call `check` afterwards.
pub fn parse_cocycle_file(text: &str, labels: Option<&[String]>) -> Result<CocycleFileData> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty cocycle file".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("cocycle") {
        return Err(Error::Parse(format!(
            "line {lineno}: expected 'cocycle' header"
        )));
    }
    let mut deg = None;
    let mut coeff = None;
    let mut variant = None;
    for tok in toks {
        if let Some(v) = tok.strip_prefix("deg=") {
            deg = Some(parse_usize(lineno, v)?);
        } else if let Some(v) = tok.strip_prefix("coeff=") {
            coeff = Some(parse_coeff(lineno, v)?);
        } else if let Some(v) = tok.strip_prefix("variant=") {
            variant = Some(ComplexVariant::parse(v)?);
        } else {
            return Err(Error::Parse(format!(
                "line {lineno}: unknown header field '{tok}'"
            )));
        }
    }
    let deg = deg.ok_or_else(|| Error::Parse(format!("line {lineno}: missing deg=")))?;
    let coeff = coeff.ok_or_else(|| Error::Parse(format!("line {lineno}: missing coeff=")))?;
    let variant =
        variant.ok_or_else(|| Error::Parse(format!("line {lineno}: missing variant=")))?;
    let mut entries = Vec::new();
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != deg + 2 {
            return Err(Error::Parse(format!(
                "line {lineno}: entry needs {} fields (y, {} x's, value)",
                deg + 2,
                deg
            )));
        }
        let y = resolve_token(lineno, toks[0], labels)?;
        let xs: Vec<usize> = toks[1..=deg]
            .iter()
            .map(|t| resolve_token(lineno, t, labels))
            .collect::<Result<_>>()?;
        let value: BigInt = toks[deg + 1]
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad value '{}'", toks[deg + 1])))?;
        entries.push((Tuple::new(y, xs), value));
    }
    Ok((deg, coeff, variant, entries))
}

pub fn write_cocycle_file(theta: &Cocycle, labels: Option<&[String]>) -> String {
    let name = |i: usize| -> String {
        match labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    };
    let mut out = format!(
        "cocycle deg={} coeff={} variant={}\n",
        theta.degree(),
        theta.coefficient_group(),
        theta.variant()
    );
    for (t, v) in theta.entries() {
        let mut fields = vec![t.y.to_string()];
        fields.extend(t.xs.iter().map(|&x| name(x)));
        fields.push(v.to_string());
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a chain file: `chain deg=<n>` then lines `coeff y x1 .. xn`.
pub fn parse_chain_file(text: &str, labels: Option<&[String]>) -> Result<Chain> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty chain file".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("chain") {
        return Err(Error::Parse(format!(
            "line {lineno}: expected 'chain deg=<n>' header"
        )));
    }
    let deg_tok = toks
        .next()
        .ok_or_else(|| Error::Parse(format!("line {lineno}: missing deg=")))?;
    let deg = match deg_tok.strip_prefix("deg=") {
        Some(v) => parse_usize(lineno, v)?,
        None => {
            return Err(Error::Parse(format!(
                "line {lineno}: expected deg=<n>, got '{deg_tok}'"
            )))
        }
    };
    let mut chain = Chain::zero(deg);
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != deg + 2 {
            return Err(Error::Parse(format!(
                "line {lineno}: term needs {} fields (coeff, y, {} x's)",
                deg + 2,
                deg
            )));
        }
        let coeff: BigInt = toks[0]
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad coefficient '{}'", toks[0])))?;
        let y = resolve_token(lineno, toks[1], labels)?;
        let xs: Vec<usize> = toks[2..]
            .iter()
            .map(|t| resolve_token(lineno, t, labels))
            .collect::<Result<_>>()?;
        chain.add_term(Tuple::new(y, xs), coeff);
    }
    Ok(chain)
}

pub fn write_chain_file(chain: &Chain, labels: Option<&[String]>) -> String {
    let name = |i: usize| -> String {
        match labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    };
    let mut out = format!("chain deg={}\n", chain.degree());
    for (t, c) in chain.terms() {
        let mut fields = vec![c.to_string(), t.y.to_string()];
        fields.extend(t.xs.iter().map(|&x| name(x)));
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

/// Parses triple-point data: `surface coloring <id>` block headers followed
/// by weight lines `<sign> y x1 x2 x3` with sign `+1`, `-1`, `+` or `-`.
pub fn parse_surface_file(
    text: &str,
    labels: Option<&[String]>,
) -> Result<ColoredTriplePointData> {
    let mut colorings: Vec<SurfaceColoring> = Vec::new();
    for (lineno, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "surface" {
            if toks.len() != 3 || toks[1] != "coloring" {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected 'surface coloring <id>'"
                )));
            }
            colorings.push(SurfaceColoring {
                id: toks[2].to_string(),
                terms: Vec::new(),
            });
            continue;
        }
        let block = colorings.last_mut().ok_or_else(|| {
            Error::Parse(format!(
                "line {lineno}: weight line before any 'surface coloring' header"
            ))
        })?;
        if toks.len() != 5 {
            return Err(Error::Parse(format!(
                "line {lineno}: weight line needs sign, y and three x's"
            )));
        }
        let sign = match toks[0] {
            "+1" | "+" => 1i8,
            "-1" | "-" => -1i8,
            other => {
                return Err(Error::Parse(format!(
                    "line {lineno}: bad sign '{other}'"
                )))
            }
        };
        let y = resolve_token(lineno, toks[1], labels)?;
        let xs: Vec<usize> = toks[2..]
            .iter()
            .map(|t| resolve_token(lineno, t, labels))
            .collect::<Result<_>>()?;
        block.terms.push(WeightTerm::new(sign, y, [xs[0], xs[1], xs[2]]));
    }
    if colorings.is_empty() {
        return Err(Error::Parse("no coloring blocks in surface file".into()));
    }
    Ok(ColoredTriplePointData { colorings })
}

pub fn write_surface_file(data: &ColoredTriplePointData, labels: Option<&[String]>) -> String {
    let name = |i: usize| -> String {
        match labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    };
    let mut out = String::new();
    for block in &data.colorings {
        out.push_str(&format!("surface coloring {}\n", block.id));
        for t in &block.terms {
            let mut fields = vec![
                if t.sign > 0 { "+1" } else { "-1" }.to_string(),
                t.tuple.y.to_string(),
            ];
            fields.extend(t.tuple.xs.iter().map(|&x| name(x)));
            out.push_str(&fields.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Prints a presentation: one `gen <k>` line then one relator line of
/// signed generator indices each.
pub fn format_presentation(p: &GroupPresentation) -> String {
    let mut out = format!("gen {}\n", p.generators);
    for rel in &p.relators {
        out.push_str(&crate::group::format_word(rel));
        out.push('\n');
    }
    out
}

/// Parses a group file: `group <n>` then `n` multiplication table rows.
pub fn parse_group_file(text: &str) -> Result<FiniteGroupTable> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty group file".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("group") {
        return Err(Error::Parse(format!(
            "line {lineno}: expected 'group <n>' header"
        )));
    }
    let n = parse_usize(
        lineno,
        toks.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: missing order")))?,
    )?;
    let mut table = Vec::with_capacity(n);
    for (lineno, line) in lines {
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| parse_usize(lineno, t))
            .collect::<Result<_>>()?;
        table.push(row);
    }
    if table.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rows, found {}",
            table.len()
        )));
    }
    FiniteGroupTable::from_mul_table(table)
}
