//! JSON literals for series: `[{"exp":"p/q","coef":"r/s"}, ...]`,
//! `{"terms":[...], "trunc":"p/q"}` or a bare rational constant.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::{format_rational, parse_rational};

use super::series::PuiseuxSeries;
use super::PuiseuxError;

#[derive(Debug, Serialize, Deserialize)]
struct TermLiteral {
    exp: Value,
    coef: Value,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SeriesLiteral {
    Terms(Vec<TermLiteral>),
    Full {
        terms: Vec<TermLiteral>,
        #[serde(default)]
        trunc: Option<Value>,
    },
    Constant(Value),
}

fn scalar(v: &Value) -> Result<crate::exact::Rational, PuiseuxError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        other => return Err(PuiseuxError::Parse(other.to_string())),
    };
    Ok(parse_rational(&text)?)
}

/// Parses a series literal. A literal without `"trunc"` is exact.
pub fn parse_series(v: &Value) -> Result<PuiseuxSeries, PuiseuxError> {
    let lit: SeriesLiteral =
        serde_json::from_value(v.clone()).map_err(|e| PuiseuxError::Parse(e.to_string()))?;
    let (terms, trunc) = match lit {
        SeriesLiteral::Terms(t) => (t, None),
        SeriesLiteral::Full { terms, trunc } => (terms, trunc),
        SeriesLiteral::Constant(c) => {
            return Ok(PuiseuxSeries::constant(scalar(&c)?));
        }
    };
    let trunc = match trunc {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) if s == "inf" => None,
        Some(t) => Some(scalar(&t)?),
    };
    let mut parsed = Vec::with_capacity(terms.len());
    for t in &terms {
        parsed.push((scalar(&t.exp)?, scalar(&t.coef)?));
    }
    let mut exps: Vec<_> = parsed.iter().map(|(e, _)| e.clone()).collect();
    exps.sort();
    if exps.windows(2).any(|w| w[0] == w[1]) {
        return Err(PuiseuxError::Parse("repeated exponent".into()));
    }
    if let Some(t) = &trunc {
        if parsed.iter().any(|(e, _)| e >= t) {
            return Err(PuiseuxError::Parse(
                "term at or beyond the truncation order".into(),
            ));
        }
    }
    Ok(PuiseuxSeries::from_terms(parsed, trunc))
}

pub fn series_to_json(s: &PuiseuxSeries) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .iter()
        .map(|(e, c)| {
            serde_json::json!({"exp": format_rational(e), "coef": format_rational(c)})
        })
        .collect();
    match s.trunc() {
        None => Value::Array(terms),
        Some(t) => serde_json::json!({"terms": terms, "trunc": format_rational(t)}),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use serde_json::json;

    #[test]
    fn round_trip() {
        let v = json!({"terms": [{"exp": "1/2", "coef": "3"}, {"exp": "2", "coef": "-1/4"}], "trunc": "5"});
        let s = parse_series(&v).unwrap();
        assert_eq!(s.terms()[0], (ratio(1, 2), int(3)));
        assert_eq!(s.trunc(), Some(&int(5)));
        assert_eq!(parse_series(&series_to_json(&s)).unwrap(), s);
        let exact = parse_series(&json!([{"exp": "0", "coef": "1"}])).unwrap();
        assert!(exact.is_exact());
        assert_eq!(parse_series(&json!("2/3")).unwrap(), PuiseuxSeries::constant(ratio(2, 3)));
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(parse_series(&json!([{"exp": "x", "coef": "1"}])).is_err());
        assert!(parse_series(&json!({"terms": [{"exp": "6", "coef": "1"}], "trunc": "5"})).is_err());
        assert!(parse_series(&json!([{"exp": "1", "coef": "1"}, {"exp": "1", "coef": "2"}])).is_err());
    }
}
