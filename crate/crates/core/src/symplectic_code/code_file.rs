//! Text format for classical codes.
//!
//! ```text
//! # comment lines start with '#'
//! p=2 m=1 n=5 r=4 mod=0,1
//! 1 0 0 1 0 0 1 1 0 0
//! ...
//! ```
//!
//! Each of the `r` data lines holds `2n` field elements (a-block, then
//! b-block) in the integer encoding. The rows must be F_p-independent.

use std::path::Path;
use std::sync::Arc;

use super::{ClassicalCode, SymplecticVector};
use crate::error::{Error, Result};
use crate::finite_field::{join, FieldCtx, FieldElement};

fn parse_err(line: usize, msg: impl AsRef<str>) -> Error {
    Error::Parse(format!("line {line}: {}", msg.as_ref()))
}

pub fn parse_code(text: &str) -> Result<ClassicalCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let (mut p, mut m, mut n, mut r, mut modulus) = (None, None, None, None, None);
    for tok in header.split_whitespace() {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(hl, format!("expected key=value, got {tok:?}")))?;
        let int = |v: &str| {
            v.parse::<u64>()
                .map_err(|_| parse_err(hl, format!("{k}: expected an integer, got {v:?}")))
        };
        match k {
            "p" => p = Some(int(v)?),
            "m" => m = Some(int(v)?),
            "n" => n = Some(int(v)?),
            "r" => r = Some(int(v)?),
            "mod" => {
                let c = v
                    .split(',')
                    .map(|c| c.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| parse_err(hl, "mod: expected comma-separated integers"))?;
                modulus = Some(c);
            }
            other => return Err(parse_err(hl, format!("unknown key {other:?}"))),
        }
    }
    let missing = |k: &str| parse_err(hl, format!("header lacks {k}"));
    let p = p.ok_or_else(|| missing("p"))?;
    let m = m.ok_or_else(|| missing("m"))?;
    let n = n.ok_or_else(|| missing("n"))? as usize;
    let r = r.ok_or_else(|| missing("r"))? as usize;
    let modulus = modulus.ok_or_else(|| missing("mod"))?;
    if p > u32::MAX as u64 || m > 64 {
        return Err(parse_err(hl, "field parameters out of range"));
    }
    if n == 0 {
        return Err(parse_err(hl, "n must be positive"));
    }
    let field = Arc::new(FieldCtx::new(p as u32, m as u32, Some(modulus)).map_err(|e| parse_err(hl, e.to_string()))?);

    let mut vectors = Vec::with_capacity(r);
    for (ln, line) in lines {
        if vectors.len() == r {
            return Err(parse_err(ln, format!("more than r = {r} data lines")));
        }
        let vals = line
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| parse_err(ln, "expected integers"))?;
        if vals.len() != 2 * n {
            return Err(parse_err(
                ln,
                format!("expected {} entries, found {}", 2 * n, vals.len()),
            ));
        }
        if let Some(bad) = vals.iter().find(|&&x| x >= field.q()) {
            return Err(parse_err(ln, format!("entry {bad} is not below q = {}", field.q())));
        }
        let elems: Vec<FieldElement> = vals.into_iter().map(FieldElement).collect();
        vectors.push(SymplecticVector::new(elems[..n].to_vec(), elems[n..].to_vec())?);
    }
    if vectors.len() != r {
        return Err(parse_err(
            0,
            format!("expected r = {r} data lines, found {}", vectors.len()),
        ));
    }
    let code = ClassicalCode::new(field, n, &vectors)?;
    if code.rank() != r {
        return Err(parse_err(
            0,
            format!("rows have rank {} but header declares r = {r}", code.rank()),
        ));
    }
    Ok(code)
}

/// Header line plus one line per canonical basis vector.
pub fn format_code(code: &ClassicalCode) -> String {
    let f = code.field();
    let mut out = format!(
        "p={} m={} n={} r={} mod={}\n",
        f.p(),
        f.m(),
        code.n(),
        code.rank(),
        join(f.modulus(), ",")
    );
    for v in code.basis() {
        let vals: Vec<u32> = v.a.iter().chain(&v.b).map(|x| x.0).collect();
        out.push_str(&join(&vals, " "));
        out.push('\n');
    }
    out
}

pub fn read_code(path: impl AsRef<Path>) -> Result<ClassicalCode> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_code(&text)
}

pub fn write_code(path: impl AsRef<Path>, code: &ClassicalCode) -> std::io::Result<()> {
    std::fs::write(path, format_code(code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic_code::{search_selforthogonal, SearchOptions};
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let text = "# five qubit\np=2 m=1 n=5 r=4 mod=0,1\n\
                    1 0 0 1 0 0 1 1 0 0\n0 1 0 0 1 0 0 1 1 0\n\
                    # interleaved comment\n1 0 1 0 0 0 0 0 1 1\n0 1 0 1 0 1 0 0 0 1\n";
        let code = parse_code(text).unwrap();
        assert_eq!(code.rank(), 4);
        assert_eq!(code.n(), 5);
    }

    #[test]
    fn zero_code() {
        let code = parse_code("p=3 m=1 n=2 r=0 mod=0,1\n").unwrap();
        assert_eq!(code.rank(), 0);
        assert_eq!(format_code(&code), "p=3 m=1 n=2 r=0 mod=0,1\n");
    }

    #[test]
    fn rejects_malformed() {
        let cases = [
            "",
            "p=2 m=1 n=1 r=1\n0 1\n",
            "p=2 m=1 n=1 r=1 mod=0,1\n0 1 1\n",
            "p=2 m=1 n=1 r=1 mod=0,1\n0 2\n",
            "p=2 m=1 n=1 r=2 mod=0,1\n0 1\n0 1\n",
            "p=2 m=1 n=1 r=1 mod=0,1\n0 1\n1 0\n",
            "p=4 m=1 n=1 r=0 mod=0,1\n",
            "p=2 m=2 n=1 r=0 mod=1,0,1\n",
            "p=2 m=1 n=1 r=1 mod=0,1\nx y\n",
        ];
        for c in cases {
            assert!(matches!(parse_code(c), Err(Error::Parse(_))), "{c:?}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn format_parse_roundtrip(seed in 0u64..1000, r in 0usize..=3) {
            let field = Arc::new(FieldCtx::new(3, 1, None).unwrap());
            let code = search_selforthogonal(field, 3, r, 1, seed, &SearchOptions::default()).unwrap();
            let text = format_code(&code);
            prop_assert_eq!(parse_code(&text).unwrap(), code);
        }
    }
}
