use std::fmt::Write;

use super::{CodeError, PauliString, StabilizerCode};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Stabilizers,
    LogicalX,
    LogicalZ,
}

fn syntax(line: usize, message: impl Into<String>) -> CodeError {
    CodeError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses the text format and validates the result.
///
/// ```text
/// n=4 k=2 name=c422
/// [stabilizers]
/// XXXX
/// ZZZZ
/// [logical_x]
/// XXII
/// XIXI
/// [logical_z]
/// ZIZI
/// ZZII
/// ```
pub fn parse_code(text: &str) -> Result<StabilizerCode, CodeError> {
    let mut header: Option<(usize, usize, Option<String>)> = None;
    let mut section = None;
    let mut gens = Vec::new();
    let mut lx = Vec::new();
    let mut lz = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let Some((n, _, _)) = &header else {
            header = Some(parse_header(line, body)?);
            continue;
        };
        match body {
            "[stabilizers]" => section = Some(Section::Stabilizers),
            "[logical_x]" => section = Some(Section::LogicalX),
            "[logical_z]" => section = Some(Section::LogicalZ),
            _ if body.starts_with('[') => return Err(syntax(line, format!("unknown section {body}"))),
            _ => {
                let target = match section {
                    Some(Section::Stabilizers) => &mut gens,
                    Some(Section::LogicalX) => &mut lx,
                    Some(Section::LogicalZ) => &mut lz,
                    None => return Err(syntax(line, "operator before any section header")),
                };
                let p: PauliString = body.parse().map_err(|e| syntax(line, format!("{e}")))?;
                if p.n() != *n {
                    return Err(syntax(
                        line,
                        format!("operator has {} qubits, expected {n}", p.n()),
                    ));
                }
                target.push(p);
            }
        }
    }

    let (n, k, name) = header.ok_or_else(|| syntax(last_line.max(1), "missing `n=.. k=..` header"))?;
    for (label, found, expected) in [
        ("stabilizers", gens.len(), n.saturating_sub(k)),
        ("logical_x", lx.len(), k),
        ("logical_z", lz.len(), k),
    ] {
        if found != expected {
            return Err(syntax(
                last_line,
                format!("[{label}] has {found} lines, expected {expected}"),
            ));
        }
    }
    let code = StabilizerCode {
        n,
        k,
        generators: gens,
        logical_x: lx,
        logical_z: lz,
        name,
    };
    code.validate().map_err(CodeError::Invalid)?;
    Ok(code)
}

fn parse_header(line: usize, body: &str) -> Result<(usize, usize, Option<String>), CodeError> {
    let (mut n, mut k, mut name) = (None, None, None);
    for tok in body.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("expected key=value, found {tok:?}")))?;
        let int = || {
            value
                .parse::<usize>()
                .map_err(|_| syntax(line, format!("{key} must be a nonnegative integer")))
        };
        match key {
            "n" => n = Some(int()?),
            "k" => k = Some(int()?),
            "name" => name = Some(value.to_string()),
            _ => return Err(syntax(line, format!("unknown header key {key:?}"))),
        }
    }
    match (n, k) {
        (Some(0), _) => Err(syntax(line, "n must be positive")),
        (Some(n), Some(k)) if k <= n => Ok((n, k, name)),
        (Some(_), Some(_)) => Err(syntax(line, "k exceeds n")),
        _ => Err(syntax(line, "header needs both n and k")),
    }
}

pub fn serialize_code(code: &StabilizerCode) -> String {
    let mut out = format!("n={} k={}", code.n, code.k);
    if let Some(name) = &code.name {
        write!(out, " name={name}").expect("string write");
    }
    out.push('\n');
    for (title, ops) in [
        ("[stabilizers]", &code.generators),
        ("[logical_x]", &code.logical_x),
        ("[logical_z]", &code.logical_z),
    ] {
        out.push_str(title);
        out.push('\n');
        for p in ops {
            writeln!(out, "{p}").expect("string write");
        }
    }
    out
}
