//! PD code text: `X[a,b,c,d]` tuples, a JSON array of 4-tuples, or `unknot`.

use serde_json::Value;

use super::diagram::KnotDiagram;
use crate::error::{bail, Error, Result};

/// Parses PD text and builds the diagram.
pub fn parse_pd(text: &str) -> Result<KnotDiagram> {
    KnotDiagram::from_pd(&parse_tuples(text)?)
}

/// Parses PD text into raw tuples without building the diagram.
pub fn parse_tuples(text: &str) -> Result<Vec<[usize; 4]>> {
    let body: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let t = body.trim();
    if t.is_empty() || t.eq_ignore_ascii_case("unknot") {
        return Ok(vec![]);
    }
    if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("PD JSON: {e}")))?;
        return tuples_from_json(&v);
    }
    let mut out = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',' || c == ';');
        if rest.is_empty() {
            break;
        }
        let Some(after) = rest.strip_prefix("X[").or_else(|| rest.strip_prefix("x[")) else {
            bail!(Parse, "expected X[a,b,c,d] at {:?}", rest.chars().take(20).collect::<String>());
        };
        let Some(end) = after.find(']') else { bail!(Parse, "unterminated crossing {}", out.len() + 1) };
        out.push(parse_four(&after[..end], out.len() + 1)?);
        rest = &after[end + 1..];
    }
    Ok(out)
}

fn parse_four(s: &str, index: usize) -> Result<[usize; 4]> {
    let nums: Vec<&str> = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()).collect();
    if nums.len() != 4 {
        bail!(Parse, "crossing {index} has {} entries, expected 4", nums.len());
    }
    let mut out = [0; 4];
    for (slot, n) in out.iter_mut().zip(nums) {
        *slot = n.parse().map_err(|_| Error::Parse(format!("crossing {index}: {n:?} is not a positive integer")))?;
    }
    Ok(out)
}

/// `[[a,b,c,d], ...]`.
pub fn tuples_from_json(v: &Value) -> Result<Vec<[usize; 4]>> {
    let Some(arr) = v.as_array() else { bail!(Parse, "PD JSON must be an array of 4-tuples") };
    arr.iter()
        .enumerate()
        .map(|(i, x)| {
            let t: Vec<u64> = x
                .as_array()
                .map(|a| a.iter().filter_map(Value::as_u64).collect())
                .filter(|a: &Vec<u64>| a.len() == 4 && x.as_array().unwrap().len() == 4)
                .ok_or_else(|| Error::Parse(format!("crossing {} is not a 4-tuple of positive integers", i + 1)))?;
            Ok([t[0] as usize, t[1] as usize, t[2] as usize, t[3] as usize])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let a = parse_tuples("X[1,4,2,5] X[3,6,4,1]\nX[5, 2, 6, 3]").unwrap();
        let b = parse_tuples("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(a, b);
        assert!(parse_tuples(" unknot ").unwrap().is_empty());
        assert!(parse_tuples("# comment\nX[1,2,3]").is_err());
        assert!(parse_tuples("Y[1,2,3,4]").is_err());
        assert!(parse_tuples("[[1,2,3]]").is_err());
        assert_eq!(parse_pd("[]").unwrap().region_count(), 2);
    }
}
