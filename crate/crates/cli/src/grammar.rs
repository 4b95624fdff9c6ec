//! Text grammars for Young functions and test functions.
//!
//! ```text
//! phi  := "power:p=" v | "maxpow:p1=" v ",p2=" v
//!       | "pwlog:p1=" v ",a=" v ",p2=" v ",b=" v [",k=" v] | "conj(" phi ")"
//! f    := term ("+" term)*
//! term := [v "*"] ("chi:t=" v | "chi:c=" v ",t=" v | "radpow:beta=" v ",t=" (v | "inf"))
//! ```
//!
//! Whitespace is ignored everywhere.

use morrey_orlicz::orlicz::PowerLogInverse;
use morrey_orlicz::{OrliczSpec, TestFunction};

use crate::error::{CliError, CliResult};

const PHI_FORMS: &str = "power:p=<v> | maxpow:p1=<v>,p2=<v> | pwlog:p1=<v>,a=<v>,p2=<v>,b=<v>[,k=<v>] | conj(<spec>)";
const TERM_FORMS: &str = "[k*]chi:t=<v> | [k*]chi:c=<x>,t=<v> | [k*]radpow:beta=<v>,t=<v|inf>";

fn strip(s: &str) -> String {
    s.chars().filter(|c| !c.is_ascii_whitespace()).collect()
}

fn grammar(msg: String) -> CliError {
    CliError::Grammar(msg)
}

fn number(key: &str, v: &str) -> CliResult<f64> {
    v.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| grammar(format!("`{key}={v}` is not a finite number")))
}

/// Parses `k1=v1,k2=v2` against the allowed keys, in any order.
fn fields<'a>(body: &'a str, required: &[&str], optional: &[&str], form: &str) -> CliResult<Vec<(&'a str, f64)>> {
    fields_inf(body, required, optional, &[], form)
}

/// As [`fields`], with `inf` accepted for the keys in `unbounded`.
fn fields_inf<'a>(
    body: &'a str,
    required: &[&str],
    optional: &[&str],
    unbounded: &[&str],
    form: &str,
) -> CliResult<Vec<(&'a str, f64)>> {
    let mut out: Vec<(&str, f64)> = Vec::new();
    for part in body.split(',') {
        let (k, v) =
            part.split_once('=').ok_or_else(|| grammar(format!("`{part}` is not key=value; expected {form}")))?;
        if !required.contains(&k) && !optional.contains(&k) {
            return Err(grammar(format!("unknown key `{k}`; expected {form}")));
        }
        if out.iter().any(|(seen, _)| *seen == k) {
            return Err(grammar(format!("key `{k}` given twice in `{body}`")));
        }
        let x = if unbounded.contains(&k) && v == "inf" { f64::INFINITY } else { number(k, v)? };
        out.push((k, x));
    }
    if let Some(k) = required.iter().find(|k| !out.iter().any(|(seen, _)| seen == *k)) {
        return Err(grammar(format!("missing key `{k}`; expected {form}")));
    }
    Ok(out)
}

fn get(fs: &[(&str, f64)], key: &str) -> Option<f64> {
    fs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

/// Parses a Young-function spec.
pub fn parse_orlicz(text: &str) -> CliResult<OrliczSpec> {
    let s = strip(text);
    parse_orlicz_inner(&s)
}

fn parse_orlicz_inner(s: &str) -> CliResult<OrliczSpec> {
    if let Some(rest) = s.strip_prefix("conj(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| grammar(format!("unbalanced parentheses in `{s}`")))?;
        return Ok(parse_orlicz_inner(inner)?.conjugate()?);
    }
    let (head, body) =
        s.split_once(':').ok_or_else(|| grammar(format!("`{s}` has no `name:` prefix; expected {PHI_FORMS}")))?;
    match head {
        "power" => {
            let f = fields(body, &["p"], &[], "power:p=<v>")?;
            Ok(OrliczSpec::power(get(&f, "p").unwrap_or_default())?)
        }
        "maxpow" => {
            let f = fields(body, &["p1", "p2"], &[], "maxpow:p1=<v>,p2=<v>")?;
            Ok(OrliczSpec::max_power(get(&f, "p1").unwrap_or_default(), get(&f, "p2").unwrap_or_default())?)
        }
        "pwlog" => {
            let f = fields(body, &["p1", "a", "p2", "b"], &["k"], "pwlog:p1=<v>,a=<v>,p2=<v>,b=<v>[,k=<v>]")?;
            let v = |k: &str| get(&f, k).unwrap_or_default();
            Ok(OrliczSpec::power_log_inverse(PowerLogInverse {
                p_low: v("p1"),
                a_low: v("a"),
                k_low: get(&f, "k").unwrap_or(1.0),
                p_high: v("p2"),
                b_high: v("b"),
            })?)
        }
        other => Err(grammar(format!("unknown function family `{other}`; expected {PHI_FORMS}"))),
    }
}

/// Splits on `+` signs that separate terms, not exponent signs like `1e+3`.
fn split_terms(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    for (i, &b) in bytes.iter().enumerate() {
        let exponent = i >= 2 && matches!(bytes[i - 1], b'e' | b'E') && bytes[i - 2].is_ascii_digit();
        if b == b'+' && i > start && !exponent {
            out.push(&s[start..i]);
            start = i + 1;
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_term(term: &str, n: usize) -> CliResult<TestFunction> {
    let (coef, atom) = match term.split_once('*') {
        Some((k, rest)) => (number("coefficient", k)?, rest),
        None => (1.0, term),
    };
    let (head, body) = atom
        .split_once(':')
        .ok_or_else(|| grammar(format!("`{atom}` has no `name:` prefix; expected {TERM_FORMS}")))?;
    let f = match head {
        "chi" => {
            let f = fields(body, &["t"], &["c"], "chi:t=<v> or chi:c=<x>,t=<v>")?;
            let t = get(&f, "t").unwrap_or_default();
            match get(&f, "c") {
                Some(c) => TestFunction::translated_indicator(n, c, t)?,
                None => TestFunction::indicator(n, t)?,
            }
        }
        "radpow" => {
            let f = fields_inf(body, &["beta", "t"], &[], &["t"], "radpow:beta=<v>,t=<v|inf>")?;
            TestFunction::radial_power(n, get(&f, "beta").unwrap_or_default(), get(&f, "t").unwrap_or_default())?
        }
        other => return Err(grammar(format!("unknown test function `{other}`; expected {TERM_FORMS}"))),
    };
    Ok(f.scaled(coef))
}

/// Parses a test function in dimension `n`.
pub fn parse_function(text: &str, n: usize) -> CliResult<TestFunction> {
    let s = strip(text);
    if s.is_empty() {
        return Err(grammar(format!("empty test function; expected {TERM_FORMS}")));
    }
    let mut acc = TestFunction::zero(n)?;
    for term in split_terms(&s) {
        if term.is_empty() {
            return Err(grammar(format!("empty term in `{s}`")));
        }
        acc = acc.add(&parse_term(term, n)?)?;
    }
    Ok(acc)
}

/// Parses `f1; f2; ...`.
pub fn parse_function_list(text: &str, n: usize) -> CliResult<Vec<TestFunction>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(|s| parse_function(s, n)).collect()
}

/// Parses `v1,v2,...`.
pub fn parse_list(key: &str, text: &str) -> CliResult<Vec<f64>> {
    strip(text).split(',').map(|v| number(key, v)).collect()
}
