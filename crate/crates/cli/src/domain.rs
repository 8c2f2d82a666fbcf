//! Domain files: whitespace separated `key=value` pairs, `#` comments.
//!
//! ```text
//! family=pullback
//! base_field=Q
//! extension=a^2-2
//! group=Q
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use semistar_core::algebra::{BaseField, ExtensionField, ValueGroup};
use semistar_core::dplusm::{PullbackDomain, ValuationDomain};
use semistar_core::numsgr::NumericalSemigroup;
use semistar_core::semistar::DomainHandle;

use crate::syntax::{base_field, field_expr, lex_at, Cursor, ParseError};

const KEYS: [&str; 5] = ["family", "generators", "base_field", "extension", "group"];

struct Entry {
    value: String,
    line: usize,
    col: usize,
}

fn entries(text: &str) -> Result<BTreeMap<&'static str, Entry>, ParseError> {
    let mut out: BTreeMap<&'static str, Entry> = BTreeMap::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = body.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i].is_whitespace() {
                i += 1;
                continue;
            }
            let kcol = i + 1;
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let key: String = chars[start..i].iter().collect();
            let Some(known) = KEYS.iter().find(|k| **k == key) else {
                let found = if key.is_empty() { format!("'{}'", chars[i]) } else { format!("'{key}'") };
                let expected: Vec<String> = KEYS.iter().map(|k| format!("'{k}'")).collect();
                let expected: Vec<&str> = expected.iter().map(String::as_str).collect();
                return Err(ParseError::new(line, kcol, &expected, found));
            };
            while i < chars.len() && chars[i] == ' ' {
                i += 1;
            }
            if chars.get(i) != Some(&'=') {
                let found = chars.get(i).map_or("end of line".to_string(), |c| format!("'{c}'"));
                return Err(ParseError::new(line, i + 1, &["'='"], found));
            }
            i += 1;
            while i < chars.len() && chars[i] == ' ' {
                i += 1;
            }
            let vcol = i + 1;
            let vstart = i;
            let mut depth = 0i32;
            while i < chars.len() && (depth > 0 || !chars[i].is_whitespace()) {
                match chars[i] {
                    '[' => depth += 1,
                    ']' => depth -= 1,
                    _ => {}
                }
                i += 1;
            }
            let value: String = chars[vstart..i].iter().collect();
            if value.is_empty() {
                return Err(ParseError::new(line, vcol, &["a value"], "end of line"));
            }
            if out.contains_key(known) {
                return Err(ParseError::new(line, kcol, &["each key at most once"], format!("'{key}' again")));
            }
            out.insert(known, Entry { value, line, col: vcol });
        }
    }
    Ok(out)
}

fn generators(e: &Entry) -> Result<Vec<u64>, ParseError> {
    let toks = lex_at(&e.value, e.line, e.col)?;
    let mut c = Cursor::new(&toks);
    c.expect_sym('[')?;
    let mut out = Vec::new();
    loop {
        let t = c.peek();
        let n = c.int()?;
        out.push(u64::try_from(n).map_err(|_| ParseError::semantic(t, "a generator below 2^64"))?);
        if !c.eat_sym(',') {
            break;
        }
    }
    c.expect_sym(']')?;
    c.expect_end()?;
    Ok(out)
}

fn extension(base: BaseField, e: Option<&Entry>) -> Result<Arc<ExtensionField>, ParseError> {
    let Some(e) = e else {
        return Ok(Arc::new(ExtensionField::trivial(base)));
    };
    let toks = lex_at(&e.value, e.line, e.col)?;
    let mut c = Cursor::new(&toks);
    let poly = field_expr(&mut c)?;
    c.expect_end()?;
    let coeffs = poly.polynomial().map_err(|m| ParseError::new(e.line, e.col, &["a polynomial in a"], m))?;
    let k = ExtensionField::new(base, coeffs)
        .map_err(|err| ParseError::new(e.line, e.col, &["an irreducible polynomial"], err.to_string()))?;
    Ok(Arc::new(k))
}

fn group(e: &Entry) -> Result<ValueGroup, ParseError> {
    match e.value.as_str() {
        "Z" => Ok(ValueGroup::Integers),
        "Q" => Ok(ValueGroup::Rationals),
        "ZxZ_lex" => Ok(ValueGroup::LexProduct),
        v => Err(ParseError::new(e.line, e.col, &["'Z'", "'Q'", "'ZxZ_lex'"], format!("'{v}'"))),
    }
}

/// Parses and validates a domain file.
pub fn parse_domain(text: &str) -> Result<Arc<DomainHandle>, ParseError> {
    let mut m = entries(text)?;
    let Some(family) = m.remove("family") else {
        return Err(ParseError::new(1, 1, &["'family'"], "no family key"));
    };
    let reject = |m: &BTreeMap<&str, Entry>, keys: &[&str]| -> Result<(), ParseError> {
        for k in keys {
            if let Some(e) = m.get(k) {
                let msg = format!("no '{k}' for family {}", family.value);
                return Err(ParseError::new(e.line, e.col - k.len() - 1, &[&msg], format!("'{k}'")));
            }
        }
        Ok(())
    };
    let fail = |e: &Entry, what: &str, err: semistar_core::Error| ParseError::new(e.line, e.col, &[what], err.to_string());
    match family.value.as_str() {
        "numsgr" => {
            reject(&m, &["base_field", "extension", "group"])?;
            let e = m.get("generators").ok_or_else(|| ParseError::new(family.line, family.col, &["'generators'"], "none"))?;
            let s = NumericalSemigroup::new(&generators(e)?).map_err(|err| fail(e, "coprime generators", err))?;
            Ok(DomainHandle::semigroup(s))
        }
        "pullback" | "valuation" => {
            reject(&m, &["generators"])?;
            let base = match m.get("base_field") {
                Some(e) => base_field(&e.value, e.line, e.col)?,
                None => BaseField::Rationals,
            };
            let k = extension(base, m.get("extension"))?;
            let g = match m.get("group") {
                Some(e) => group(e)?,
                None => return Err(ParseError::new(family.line, family.col, &["'group'"], "none")),
            };
            let v = ValuationDomain::new(k.clone(), g);
            if family.value == "valuation" {
                return Ok(DomainHandle::valuation(v));
            }
            let at = m.get("group").expect("checked");
            if k.degree() < 2 {
                let e = m.get("extension").unwrap_or(&family);
                return Err(ParseError::new(e.line, e.col, &["a proper extension k < K"], "degree 1"));
            }
            let p = PullbackDomain::new(v).map_err(|err| fail(at, "a rank one group", err))?;
            Ok(DomainHandle::pullback(p))
        }
        other => Err(ParseError::new(
            family.line,
            family.col,
            &["'numsgr'", "'pullback'", "'valuation'"],
            format!("'{other}'"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let d = parse_domain("family=numsgr generators=[3,4,5]").unwrap();
        assert_eq!(d.describe(), "numsgr<3,4,5>");
        let d = parse_domain("family=pullback\nbase_field=Q\nextension=a^2-2  # sqrt 2\ngroup=Q\n").unwrap();
        assert_eq!(d.field().degree(), 2);
        assert!(d.is_dense());
        let d = parse_domain("family=valuation base_field=Fp:3 group=ZxZ_lex").unwrap();
        assert!(d.is_lex());
    }

    #[test]
    fn diagnostics() {
        let e = parse_domain("family=numsgr\ncolour=red").unwrap_err();
        assert_eq!((e.line, e.col), (2, 1));
        let e = parse_domain("family=numsgr generators=[4,6]").unwrap_err();
        assert_eq!((e.line, e.col), (1, 26));
        let e = parse_domain("family=pullback extension=a^2-2 group=ZxZ_lex").unwrap_err();
        assert!(e.to_string().contains("rank one"), "{e}");
        let e = parse_domain("family=pullback extension=a^2-1 group=Z").unwrap_err();
        assert!(e.to_string().contains("irreducible"), "{e}");
        let e = parse_domain("family=valuation group=R").unwrap_err();
        assert_eq!(e.found, "'R'");
        assert!(parse_domain("family=numsgr generators=[3,4] group=Z").is_err());
        assert!(parse_domain("family=numsgr family=numsgr").is_err());
    }
}
