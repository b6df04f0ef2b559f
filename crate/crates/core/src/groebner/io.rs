//! Text form of monomials, binomials and monomial ideals in named variables.
//!
//! Monomials are written `a^2*b` (the `*` is optional when names are
//! unambiguous, so `a^2b` parses too) and `1` for the unit. Monomial ideals
//! print as `⟨m1, m2, …⟩`; binomial lists one `m - m'` per line.

use super::binomial::Binomial;
use super::order::Exponent;
use crate::error::{Error, Result};

pub fn format_monomial(m: &[i64], names: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .zip(names)
        .filter(|(&e, _)| e != 0)
        .map(|(&e, name)| {
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn format_binomial(b: &Binomial, names: &[String]) -> String {
    format!(
        "{} - {}",
        format_monomial(b.lead(), names),
        format_monomial(b.trail(), names)
    )
}

pub fn format_ideal(gens: &[Exponent], names: &[String]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| format_monomial(g, names)).collect();
    format!("⟨{}⟩", parts.join(", "))
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses one monomial. `line`/`col0` locate the text for error messages.
pub fn parse_monomial_at(text: &str, names: &[String], line: usize, col0: usize) -> Result<Exponent> {
    let mut exps = vec![0i64; names.len()];
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut any = false;
    let skip = |pos: &mut usize| {
        while *pos < chars.len() && (chars[*pos].is_whitespace() || chars[*pos] == '*') {
            *pos += 1;
        }
    };
    skip(&mut pos);
    if chars[pos..].iter().collect::<String>().trim() == "1" {
        return Ok(exps);
    }
    while pos < chars.len() {
        let rest: String = chars[pos..].iter().collect();
        let hit = names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.chars().count());
        let Some((idx, name)) = hit else {
            return Err(perr(line, col0 + pos + 1, format!("unknown variable in '{}'", text.trim())));
        };
        pos += name.chars().count();
        let mut e = 1i64;
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(perr(line, col0 + pos + 1, "expected exponent after '^'"));
            }
            let digits: String = chars[start..pos].iter().collect();
            e = digits
                .parse()
                .map_err(|_| perr(line, col0 + start + 1, "exponent out of range"))?;
        }
        exps[idx] = exps[idx].checked_add(e).ok_or(Error::Overflow)?;
        any = true;
        skip(&mut pos);
    }
    if !any {
        return Err(perr(line, col0 + 1, "empty monomial"));
    }
    Ok(exps)
}

pub fn parse_monomial(text: &str, names: &[String]) -> Result<Exponent> {
    parse_monomial_at(text, names, 1, 0)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

/// Monomial ideal: generators separated by commas and/or newlines, with
/// optional surrounding `⟨ ⟩` or `< >`.
pub fn parse_monomial_list(text: &str, names: &[String]) -> Result<Vec<Exponent>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        let mut col = 0;
        for piece in line.split(',') {
            let trimmed: String = piece
                .chars()
                .map(|c| if matches!(c, '⟨' | '⟩' | '<' | '>') { ' ' } else { c })
                .collect();
            if !trimmed.trim().is_empty() {
                out.push(parse_monomial_at(&trimmed, names, ln + 1, col)?);
            }
            col += piece.chars().count() + 1;
        }
    }
    Ok(out)
}

/// One binomial `m - m'` per line (also accepts `m = m'`).
pub fn parse_binomial_list(text: &str, names: &[String]) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim().trim_end_matches(',');
        if line.is_empty() {
            continue;
        }
        let line = line.replace('−', "-");
        let (a, b, split) = match line.find(" - ").or_else(|| line.find('-')) {
            Some(k) => {
                let width = if line[k..].starts_with(" - ") { 3 } else { 1 };
                (&line[..k], &line[k + width..], k)
            }
            None => match line.find('=') {
                Some(k) => (&line[..k], &line[k + 1..], k),
                None => return Err(perr(ln + 1, 1, "expected 'm - m'")),
            },
        };
        let lead = parse_monomial_at(a, names, ln + 1, 0)?;
        let trail = parse_monomial_at(b, names, ln + 1, split + 1)?;
        out.push(Binomial::new(lead, trail));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Vec<String> {
        ["a", "b", "c"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn monomial_round_trip() {
        let names = abc();
        for m in [vec![0, 0, 0], vec![2, 0, 1], vec![0, 13, 0]] {
            let s = format_monomial(&m, &names);
            assert_eq!(parse_monomial(&s, &names).unwrap(), m);
        }
        assert_eq!(format_monomial(&[2, 0, 1], &names), "a^2*c");
    }

    #[test]
    fn juxtaposed_names() {
        let names = abc();
        assert_eq!(parse_monomial("a^2b c^3", &names).unwrap(), vec![2, 1, 3]);
        let xs: Vec<String> = (1..=11).map(|i| format!("x{i}")).collect();
        let m = parse_monomial("x1^2*x11", &xs).unwrap();
        assert_eq!(m[0], 2);
        assert_eq!(m[10], 1);
    }

    #[test]
    fn ideal_and_binomials() {
        let names = abc();
        let j = parse_monomial_list("⟨a^2, b*c,\n c^4⟩", &names).unwrap();
        assert_eq!(j, vec![vec![2, 0, 0], vec![0, 1, 1], vec![0, 0, 4]]);
        assert_eq!(format_ideal(&j, &names), "⟨a^2, b*c, c^4⟩");
        let bs = parse_binomial_list("a^14 - 1\nb - a^9 # comment\n", &names).unwrap();
        assert_eq!(bs[0], Binomial::new(vec![14, 0, 0], vec![0, 0, 0]));
        assert_eq!(bs[1], Binomial::new(vec![0, 1, 0], vec![9, 0, 0]));
    }

    #[test]
    fn errors_are_located() {
        let names = abc();
        match parse_monomial_list("a\nb*q", &names) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 3);
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_monomial("a^", &names).is_err());
    }
}
