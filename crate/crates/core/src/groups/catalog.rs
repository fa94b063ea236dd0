//! The curated group catalog: parsing, verification, lookup.
//!
//! Catalog files are plain text, one group per file:
//!
//! ```text
//! group 2D3
//! order 12
//! cyclotomic 12
//! defining E_1/2
//! gen a = [[z12^10, 0], [0, z12^2]]
//! gen b = [[0, -1], [1, 0]]
//! class E    rep e     size 1 angle 0 pi
//! class C3   rep a     size 2 angle 2/3 pi
//! irrep A_0 vector : 1, 1, 1, 1, 1, 1
//! irrep E_1/2 spinor : 2, -2, 1, -1, 0, 0
//! alias A0 = A_0
//! rep A_1 gen a = [[1]]
//! rep A_1 gen b = [[-1]]
//! note free-form documentation line
//! ```
//!
//! Irrep values are listed in the file's own class order; they are
//! permuted into the group's canonical class order on load. Classes are
//! matched to computed classes through their representative words, or by
//! the signature (size, trace-from-angle) when a word is omitted;
//! ambiguous signatures without words are an error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{parse_cyclotomic, Cyclotomic, Matrix};
use crate::error::{Error, Result};
use crate::groups::chartab::{CharacterTable, Irrep, IrrepKind};
use crate::groups::{close_group, FiniteGroup};

/// A representation of a catalog group given by matrices for every
/// element (aligned with the group's element indices).
pub struct NamedRep {
    pub name: String,
    pub dim: usize,
    pub mats: Vec<Matrix<Cyclotomic>>,
}

impl NamedRep {
    /// Matrix of the representative of class `c`.
    pub fn class_matrix<'a>(&'a self, group: &FiniteGroup, c: usize) -> &'a Matrix<Cyclotomic> {
        &self.mats[group.classes()[c].representative]
    }
}

/// A catalog group: closed matrix group, verified character table,
/// defining and auxiliary representations, irrep-name aliases.
pub struct GroupData {
    pub name: String,
    pub field_order: u32,
    pub group: FiniteGroup,
    pub table: CharacterTable,
    reps: Vec<NamedRep>,
    aliases: BTreeMap<String, String>,
    pub defining_irrep: Option<String>,
    pub notes: Vec<String>,
    pub gen_labels: Vec<String>,
}

fn normalize_name(s: &str) -> String {
    s.chars()
        .filter(|c| *c != '{' && *c != '}' && *c != '_')
        .collect::<String>()
        .to_ascii_lowercase()
}

impl GroupData {
    /// The defining representation (always present).
    pub fn defining_rep(&self) -> &NamedRep {
        &self.reps[0]
    }

    pub fn reps(&self) -> &[NamedRep] {
        &self.reps
    }

    pub fn rep_names(&self) -> Vec<String> {
        self.reps.iter().map(|r| r.name.clone()).collect()
    }

    /// Resolve a representation by name. `defining` and the designated
    /// defining irrep name both resolve to the defining representation.
    pub fn rep_named(&self, name: &str) -> Result<&NamedRep> {
        let norm = normalize_name(name);
        if norm == "defining" {
            return Ok(&self.reps[0]);
        }
        if let Some(def) = &self.defining_irrep {
            if normalize_name(def) == norm {
                return Ok(&self.reps[0]);
            }
        }
        if let Some(canon) = self.aliases.get(&norm) {
            let canon_norm = normalize_name(canon);
            if let Some(r) = self.reps.iter().find(|r| normalize_name(&r.name) == canon_norm) {
                return Ok(r);
            }
        }
        self.reps
            .iter()
            .find(|r| normalize_name(&r.name) == norm)
            .ok_or_else(|| Error::UnknownRep {
                name: name.to_string(),
                group: self.name.clone(),
                available: self.rep_names().join(", "),
            })
    }

    /// Resolve an irrep by name, honoring aliases and loose spelling
    /// (`E1/2`, `E_{1/2}` and `E_1/2` all match).
    pub fn irrep_named(&self, name: &str) -> Result<&Irrep> {
        let norm = normalize_name(name);
        let target = self
            .aliases
            .get(&norm)
            .map(|s| normalize_name(s))
            .unwrap_or(norm);
        self.table
            .irreps()
            .iter()
            .find(|i| normalize_name(&i.name) == target)
            .ok_or_else(|| Error::UnknownIrrep {
                name: name.to_string(),
                group: self.name.clone(),
                available: self
                    .table
                    .irrep_names()
                    .join(", "),
            })
    }

    /// Irreps in catalog order.
    pub fn irreps(&self) -> &[Irrep] {
        self.table.irreps()
    }
}

// ---------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------

struct RawClass {
    name: String,
    word: Option<Vec<String>>,
    size: usize,
    angle: Option<Rational64>,
    line: usize,
}

struct RawGroup {
    name: String,
    order: usize,
    cyclotomic: u32,
    defining: Option<String>,
    gens: Vec<(String, String)>,
    classes: Vec<RawClass>,
    irreps: Vec<(String, IrrepKind, Vec<String>, usize)>,
    aliases: Vec<(String, String)>,
    reps: Vec<(String, String, String)>, // (rep name, gen label, matrix)
    notes: Vec<String>,
}

fn parse_err(file: &str, line: usize, message: impl Into<String>) -> Error {
    Error::CatalogParse {
        file: file.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_angle(s: &str, file: &str, line: usize) -> Result<Rational64> {
    let body = s
        .trim()
        .strip_suffix("pi")
        .ok_or_else(|| parse_err(file, line, "angle must end in `pi`"))?
        .trim();
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (
            n.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(file, line, "bad angle numerator"))?,
            d.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(file, line, "bad angle denominator"))?,
        ),
        None => (
            body.parse::<i64>()
                .map_err(|_| parse_err(file, line, "bad angle"))?,
            1,
        ),
    };
    if den == 0 {
        return Err(parse_err(file, line, "zero angle denominator"));
    }
    Ok(Rational64::new(num, den))
}

fn parse_raw(file: &str, text: &str) -> Result<RawGroup> {
    let mut name = None;
    let mut order = None;
    let mut cyclotomic = None;
    let mut defining = None;
    let mut gens = Vec::new();
    let mut classes = Vec::new();
    let mut irreps = Vec::new();
    let mut aliases = Vec::new();
    let mut reps = Vec::new();
    let mut notes = Vec::new();

    for (ln, raw_line) in text.lines().enumerate() {
        let lineno = ln + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "group" => name = Some(rest.to_string()),
            "order" => {
                order = Some(
                    rest.parse::<usize>()
                        .map_err(|_| parse_err(file, lineno, "bad order"))?,
                )
            }
            "cyclotomic" => {
                cyclotomic = Some(
                    rest.parse::<u32>()
                        .map_err(|_| parse_err(file, lineno, "bad cyclotomic order"))?,
                )
            }
            "defining" => defining = Some(rest.to_string()),
            "note" => notes.push(rest.to_string()),
            "gen" => {
                let (label, matrix) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(file, lineno, "expected `gen <label> = [[...]]`"))?;
                gens.push((label.trim().to_string(), matrix.trim().to_string()));
            }
            "class" => {
                // class <name> [rep <word tokens>] size <k> angle <rat> pi
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                if tokens.is_empty() {
                    return Err(parse_err(file, lineno, "class needs a name"));
                }
                let cname = tokens[0].to_string();
                let mut word = None;
                let mut size = None;
                let mut angle = None;
                let mut i = 1;
                while i < tokens.len() {
                    match tokens[i] {
                        "rep" => {
                            let mut w = Vec::new();
                            i += 1;
                            while i < tokens.len() && !matches!(tokens[i], "size" | "angle") {
                                w.push(tokens[i].to_string());
                                i += 1;
                            }
                            word = Some(w);
                        }
                        "size" => {
                            size = Some(tokens[i + 1].parse::<usize>().map_err(|_| {
                                parse_err(file, lineno, "bad class size")
                            })?);
                            i += 2;
                        }
                        "angle" => {
                            let joined = tokens[i + 1..].join(" ");
                            angle = Some(parse_angle(&joined, file, lineno)?);
                            break;
                        }
                        other => {
                            return Err(parse_err(
                                file,
                                lineno,
                                format!("unexpected token `{other}` in class line"),
                            ))
                        }
                    }
                }
                let size =
                    size.ok_or_else(|| parse_err(file, lineno, "class line needs `size`"))?;
                classes.push(RawClass {
                    name: cname,
                    word,
                    size,
                    angle,
                    line: lineno,
                });
            }
            "irrep" => {
                // irrep <name> spinor|vector : v, v, ...
                let (head, values) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(file, lineno, "irrep line needs `:`"))?;
                let head_tokens: Vec<&str> = head.split_whitespace().collect();
                if head_tokens.len() != 2 {
                    return Err(parse_err(
                        file,
                        lineno,
                        "expected `irrep <name> spinor|vector : ...`",
                    ));
                }
                let kind = match head_tokens[1] {
                    "spinor" => IrrepKind::Spinor,
                    "vector" => IrrepKind::Vector,
                    other => {
                        return Err(parse_err(
                            file,
                            lineno,
                            format!("unknown irrep kind `{other}`"),
                        ))
                    }
                };
                let vals: Vec<String> =
                    values.split(',').map(|v| v.trim().to_string()).collect();
                irreps.push((head_tokens[0].to_string(), kind, vals, lineno));
            }
            "alias" => {
                let (a, b) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(file, lineno, "expected `alias X = Y`"))?;
                aliases.push((a.trim().to_string(), b.trim().to_string()));
            }
            "rep" => {
                // rep <name> gen <label> = [[...]]
                let tokens: Vec<&str> = rest.splitn(3, char::is_whitespace).collect();
                if tokens.len() != 3 || tokens[1] != "gen" {
                    return Err(parse_err(
                        file,
                        lineno,
                        "expected `rep <name> gen <label> = [[...]]`",
                    ));
                }
                let (label, matrix) = tokens[2]
                    .split_once('=')
                    .ok_or_else(|| parse_err(file, lineno, "rep gen line needs `=`"))?;
                reps.push((
                    tokens[0].to_string(),
                    label.trim().to_string(),
                    matrix.trim().to_string(),
                ));
            }
            other => {
                return Err(parse_err(
                    file,
                    lineno,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    Ok(RawGroup {
        name: name.ok_or_else(|| parse_err(file, 0, "missing `group` line"))?,
        order: order.ok_or_else(|| parse_err(file, 0, "missing `order` line"))?,
        cyclotomic: cyclotomic.ok_or_else(|| parse_err(file, 0, "missing `cyclotomic` line"))?,
        defining,
        gens,
        classes,
        irreps,
        aliases,
        reps,
        notes,
    })
}

/// Parse a matrix literal `[[a, b], [c, d]]` with cyclotomic entries.
pub fn parse_matrix(text: &str) -> Result<Matrix<Cyclotomic>> {
    let bad = |m: &str| Error::BadCyclotomicLiteral(text.to_string(), m.to_string());
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("matrix must be wrapped in [ ]"))?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth == 1 {
                    cur.clear();
                    continue;
                }
            }
            ']' => {
                if depth == 0 {
                    return Err(bad("unbalanced brackets"));
                }
                depth -= 1;
                if depth == 0 {
                    let entries = cur
                        .split(',')
                        .map(|e| parse_cyclotomic(e))
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(entries);
                    continue;
                }
            }
            _ => {}
        }
        if depth >= 1 {
            cur.push(ch);
        }
    }
    if rows.is_empty() {
        return Err(bad("empty matrix"));
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(bad("ragged rows"));
    }
    Ok(Matrix::from_rows(rows))
}

fn verify_err(name: &str, message: impl Into<String>) -> Error {
    Error::CatalogVerify {
        name: name.to_string(),
        message: message.into(),
    }
}

/// Expected defining-rep trace of a rotation by `angle` (multiple of pi),
/// for the group dimension at hand.
fn expected_trace(dim: usize, angle: Rational64) -> Option<f64> {
    let theta = std::f64::consts::PI * angle.numer().to_f64()? / angle.denom().to_f64()?;
    match dim {
        1 => Some(1.0),
        2 => Some(2.0 * (theta / 2.0).cos()),
        3 => Some(1.0 + 2.0 * theta.cos()),
        _ => None,
    }
}

fn build(raw: RawGroup, file: &str) -> Result<GroupData> {
    let n = raw.cyclotomic;
    let mut gen_labels = Vec::new();
    let mut gens = Vec::new();
    for (label, text) in &raw.gens {
        gen_labels.push(label.clone());
        gens.push(parse_matrix(text)?);
    }
    let mut group = close_group(&gens, n, raw.order)
        .map_err(|e| verify_err(&raw.name, format!("closure failed: {e}")))?;
    if group.order() != raw.order {
        return Err(verify_err(
            &raw.name,
            format!("declared order {} but closure has {}", raw.order, group.order()),
        ));
    }

    let gen_index = |label: &str| -> Result<usize> {
        gen_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| verify_err(&raw.name, format!("unknown generator `{label}`")))
    };

    // --- class matching -------------------------------------------------
    let k = group.classes().len();
    if raw.classes.len() != k {
        return Err(verify_err(
            &raw.name,
            format!("{} class lines for {} computed classes", raw.classes.len(), k),
        ));
    }
    let mut assignment: Vec<Option<usize>> = vec![None; k]; // file idx -> class idx
    let mut taken = vec![false; k];
    // pass 1: word-pinned
    for (fi, fc) in raw.classes.iter().enumerate() {
        let Some(word) = &fc.word else { continue };
        let mut m = Matrix::<Cyclotomic>::identity(group.dim());
        if word.len() != 1 || word[0] != "e" {
            for label in word {
                let gi = gen_index(label)?;
                m = m.mul(&gens[gi]);
            }
        }
        let idx = group.find(&m).ok_or_else(|| {
            verify_err(&raw.name, format!("class {}: word does not evaluate into the group", fc.name))
        })?;
        let ci = group.class_of(idx);
        if taken[ci] {
            return Err(verify_err(
                &raw.name,
                format!("class {}: representative already claimed", fc.name),
            ));
        }
        taken[ci] = true;
        assignment[fi] = Some(ci);
    }
    // pass 2: signature matching by (size, trace-from-angle)
    for (fi, fc) in raw.classes.iter().enumerate() {
        if assignment[fi].is_some() {
            continue;
        }
        let angle = fc.angle.ok_or_else(|| {
            parse_err(file, fc.line, "class without a word needs an angle to match by signature")
        })?;
        let expect = expected_trace(group.dim(), angle).ok_or_else(|| {
            verify_err(&raw.name, "signature matching supports dimensions 1-3 only; pin classes with words")
        })?;
        let candidates: Vec<usize> = (0..k)
            .filter(|&ci| !taken[ci])
            .filter(|&ci| group.classes()[ci].size() == fc.size)
            .filter(|&ci| {
                let t = group.classes()[ci].trace.to_complex();
                (t.re - expect).abs() < 1e-9 && t.im.abs() < 1e-9
            })
            .collect();
        match candidates.len() {
            0 => {
                return Err(verify_err(
                    &raw.name,
                    format!("class {}: no computed class matches its signature", fc.name),
                ))
            }
            1 => {
                taken[candidates[0]] = true;
                assignment[fi] = Some(candidates[0]);
            }
            _ => {
                return Err(Error::AmbiguousClassMatch {
                    group: raw.name.clone(),
                    first: fc.name.clone(),
                    second: raw
                        .classes
                        .iter()
                        .enumerate()
                        .find(|(fj, other)| *fj != fi && assignment[*fj].is_none() && other.size == fc.size)
                        .map(|(_, c)| c.name.clone())
                        .unwrap_or_else(|| "<unknown>".to_string()),
                });
            }
        }
    }

    // validate sizes and angle/trace consistency, attach metadata
    for (fi, fc) in raw.classes.iter().enumerate() {
        let ci = assignment[fi].unwrap();
        let class = &group.classes()[ci];
        if class.size() != fc.size {
            return Err(verify_err(
                &raw.name,
                format!(
                    "class {}: declared size {} but computed {}",
                    fc.name,
                    fc.size,
                    class.size()
                ),
            ));
        }
        if let Some(angle) = fc.angle {
            if let Some(expect) = expected_trace(group.dim(), angle) {
                let t = class.trace.to_complex();
                if (t.re - expect).abs() > 1e-9 || t.im.abs() > 1e-9 {
                    return Err(verify_err(
                        &raw.name,
                        format!(
                            "class {}: angle {} pi is inconsistent with trace {}",
                            fc.name, angle, class.trace
                        ),
                    ));
                }
            }
        }
    }
    {
        let classes = group.classes_mut();
        for (fi, fc) in raw.classes.iter().enumerate() {
            let ci = assignment[fi].unwrap();
            classes[ci].name = fc.name.clone();
            classes[ci].angle = fc.angle;
        }
    }

    // --- character table -------------------------------------------------
    let mut rows = Vec::new();
    for (iname, kind, vals, lineno) in &raw.irreps {
        if vals.len() != k {
            return Err(parse_err(
                file,
                *lineno,
                format!("irrep {iname}: {} values for {} classes", vals.len(), k),
            ));
        }
        let mut values = vec![Cyclotomic::zero(); k];
        for (fi, v) in vals.iter().enumerate() {
            let ci = assignment[fi].unwrap();
            values[ci] = parse_cyclotomic(v)?.embed_into(n).map_err(|_| {
                parse_err(file, *lineno, format!("character value `{v}` not in Q(zeta_{n})"))
            })?;
        }
        rows.push((iname.clone(), *kind, values));
    }
    let mut table = CharacterTable::new(rows)?;
    table
        .verify(&group)
        .map_err(|e| verify_err(&raw.name, format!("{e}")))?;

    // --- representations --------------------------------------------------
    let mut reps: Vec<NamedRep> = vec![NamedRep {
        name: "defining".to_string(),
        dim: group.dim(),
        mats: group.elements().to_vec(),
    }];
    // group auxiliary rep generator images by name (file order preserved)
    let mut aux: Vec<(String, BTreeMap<usize, Matrix<Cyclotomic>>)> = Vec::new();
    for (rname, glabel, mtext) in &raw.reps {
        let gi = gen_index(glabel)?;
        let m = embed_matrix_checked(&parse_matrix(mtext)?, n, &raw.name)?;
        match aux.iter_mut().find(|(name, _)| name == rname) {
            Some((_, map)) => {
                map.insert(gi, m);
            }
            None => {
                let mut map = BTreeMap::new();
                map.insert(gi, m);
                aux.push((rname.clone(), map));
            }
        }
    }
    for (rname, images) in aux {
        if images.len() != gens.len() {
            return Err(verify_err(
                &raw.name,
                format!("rep {rname}: needs an image for every generator"),
            ));
        }
        let dim = images.values().next().unwrap().rows();
        if images.values().any(|m| !m.is_square() || m.rows() != dim) {
            return Err(verify_err(&raw.name, format!("rep {rname}: ragged images")));
        }
        // evaluate along the closure words
        let mut mats = Vec::with_capacity(group.order());
        for i in 0..group.order() {
            let mut acc = Matrix::<Cyclotomic>::identity(dim);
            for &g in group.word(i) {
                acc = acc.mul(&images[&g]);
            }
            mats.push(embed_matrix_checked(&acc, n, &raw.name)?);
        }
        // homomorphism: rho(h) rho(g) = rho(hg) for all h and generators g
        for h in 0..group.order() {
            for (&gi, img) in &images {
                let gidx = group
                    .find(&gens[gi])
                    .expect("generator is a group element");
                let hg = group.mul_index(h, gidx);
                if mats[h].mul(img) != mats[hg] {
                    return Err(verify_err(
                        &raw.name,
                        format!("rep {rname}: generator images do not satisfy the group relations"),
                    ));
                }
            }
        }
        // the rep must realize the irrep row of the same name
        let irrep = table.irrep(&rname).ok_or_else(|| {
            verify_err(&raw.name, format!("rep {rname}: no irrep of that name"))
        })?;
        for (ci, class) in group.classes().iter().enumerate() {
            if mats[class.representative].trace() != irrep.values[ci] {
                return Err(verify_err(
                    &raw.name,
                    format!(
                        "rep {rname}: class {} trace does not match the character table",
                        class.name
                    ),
                ));
            }
        }
        reps.push(NamedRep {
            name: rname,
            dim,
            mats,
        });
    }

    // defining irrep designation, when declared, must match traces
    if let Some(def) = &raw.defining {
        let irrep = table.irrep(def).ok_or_else(|| {
            verify_err(&raw.name, format!("defining irrep {def} not in table"))
        })?;
        for (ci, class) in group.classes().iter().enumerate() {
            if group.element(class.representative).trace() != irrep.values[ci] {
                return Err(verify_err(
                    &raw.name,
                    format!("defining rep traces do not match irrep {def}"),
                ));
            }
        }
    }

    let mut aliases = BTreeMap::new();
    for (a, b) in &raw.aliases {
        aliases.insert(normalize_name(a), b.clone());
    }

    Ok(GroupData {
        name: raw.name,
        field_order: n,
        group,
        table,
        reps,
        aliases,
        defining_irrep: raw.defining,
        notes: raw.notes,
        gen_labels,
    })
}

fn embed_matrix_checked(
    m: &Matrix<Cyclotomic>,
    order: u32,
    group: &str,
) -> Result<Matrix<Cyclotomic>> {
    crate::groups::embed_matrix(m, order)
        .map_err(|e| verify_err(group, format!("entry outside Q(zeta_{order}): {e}")))
}

/// Parse and fully verify one catalog file.
pub fn load_group(file_name: &str, text: &str) -> Result<GroupData> {
    let raw = parse_raw(file_name, text)?;
    build(raw, file_name)
}

// ---------------------------------------------------------------------
// the catalog
// ---------------------------------------------------------------------

const EMBEDDED: &[(&str, &str)] = &[
    ("trivial1.txt", include_str!("../../catalog/trivial1.txt")),
    ("trivial2.txt", include_str!("../../catalog/trivial2.txt")),
    ("c2.txt", include_str!("../../catalog/c2.txt")),
    ("c3.txt", include_str!("../../catalog/c3.txt")),
    ("c4.txt", include_str!("../../catalog/c4.txt")),
    ("c6.txt", include_str!("../../catalog/c6.txt")),
    ("2c2.txt", include_str!("../../catalog/2c2.txt")),
    ("2c3.txt", include_str!("../../catalog/2c3.txt")),
    ("2c4.txt", include_str!("../../catalog/2c4.txt")),
    ("2c6.txt", include_str!("../../catalog/2c6.txt")),
    ("d2.txt", include_str!("../../catalog/d2.txt")),
    ("d3.txt", include_str!("../../catalog/d3.txt")),
    ("d4.txt", include_str!("../../catalog/d4.txt")),
    ("d6.txt", include_str!("../../catalog/d6.txt")),
    ("2d2.txt", include_str!("../../catalog/2d2.txt")),
    ("2d3.txt", include_str!("../../catalog/2d3.txt")),
    ("2d4.txt", include_str!("../../catalog/2d4.txt")),
    ("2d6.txt", include_str!("../../catalog/2d6.txt")),
    ("t.txt", include_str!("../../catalog/t.txt")),
    ("2t.txt", include_str!("../../catalog/2t.txt")),
    ("o.txt", include_str!("../../catalog/o.txt")),
    ("2o.txt", include_str!("../../catalog/2o.txt")),
    ("i.txt", include_str!("../../catalog/i.txt")),
    ("2i.txt", include_str!("../../catalog/2i.txt")),
];

/// All catalog groups, loaded and verified. Groups whose files parse but
/// fail verification are kept as failure messages so callers can report
/// them (the `verify` command treats them as mismatches).
pub struct Catalog {
    groups: BTreeMap<String, GroupData>,
    failures: BTreeMap<String, String>,
}

impl Catalog {
    /// The catalog compiled into the binary.
    pub fn embedded() -> Catalog {
        let mut cat = Catalog {
            groups: BTreeMap::new(),
            failures: BTreeMap::new(),
        };
        for (name, text) in EMBEDDED {
            cat.ingest(name, text);
        }
        cat
    }

    /// Scan a directory for `*.txt` group files (sorted by file name).
    pub fn from_dir(dir: &Path) -> Result<Catalog> {
        let mut cat = Catalog {
            groups: BTreeMap::new(),
            failures: BTreeMap::new(),
        };
        let mut files: Vec<_> = std::fs::read_dir(dir)?
            .collect::<std::io::Result<Vec<_>>>()?
            .into_iter()
            .map(|e| e.path())
            .filter(|p| p.extension().map(|e| e == "txt").unwrap_or(false))
            .collect();
        files.sort();
        for path in files {
            let text = std::fs::read_to_string(&path)?;
            let fname = path
                .file_name()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_default();
            cat.ingest(&fname, &text);
        }
        Ok(cat)
    }

    fn ingest(&mut self, file_name: &str, text: &str) {
        match load_group(file_name, text) {
            Ok(gd) => {
                self.groups.insert(gd.name.clone(), gd);
            }
            Err(e) => {
                let key = parse_raw(file_name, text)
                    .map(|r| r.name)
                    .unwrap_or_else(|_| file_name.to_string());
                self.failures.insert(key, e.to_string());
            }
        }
    }

    pub fn names(&self) -> Vec<&str> {
        self.groups.keys().map(|s| s.as_str()).collect()
    }

    pub fn failures(&self) -> &BTreeMap<String, String> {
        &self.failures
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupData> {
        self.groups.values()
    }

    /// Look up a group by name (case-insensitive).
    pub fn get(&self, name: &str) -> Result<&GroupData> {
        if let Some(g) = self.groups.get(name) {
            return Ok(g);
        }
        let lower = name.to_ascii_lowercase();
        if let Some(g) = self
            .groups
            .values()
            .find(|g| g.name.to_ascii_lowercase() == lower)
        {
            return Ok(g);
        }
        if let Some(msg) = self
            .failures
            .iter()
            .find(|(k, _)| k.to_ascii_lowercase() == lower)
            .map(|(_, v)| v)
        {
            return Err(Error::CatalogVerify {
                name: name.to_string(),
                message: msg.clone(),
            });
        }
        let mut available = String::new();
        for (i, n) in self.names().iter().enumerate() {
            if i > 0 {
                let _ = write!(available, ", ");
            }
            let _ = write!(available, "{n}");
        }
        Err(Error::UnknownGroup {
            name: name.to_string(),
            available,
        })
    }

    /// The vector rotation group covered by a double group `2G`, when the
    /// catalog has both.
    pub fn vector_partner(&self, double_name: &str) -> Option<&GroupData> {
        let base = double_name.strip_prefix('2')?;
        self.groups.get(base)
    }
}
