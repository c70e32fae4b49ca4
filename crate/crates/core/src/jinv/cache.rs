//! On-disk cache of the invariants and the process-wide shared instance.

use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::exact::{format_rational, parse_rational, Exponent};

use super::invariants::{cubic_vars, CubicInvariants, Poly};
use super::JinvError;

/// Environment variable overriding the cache location.
pub const CACHE_ENV: &str = "TROPJ_INVARIANTS_CACHE";
pub const CACHE_FILE_NAME: &str = "tropj-invariants.json";
const FORMAT: &str = "tropj-invariants/1";

/// `$TROPJ_INVARIANTS_CACHE`, else a file next to the running executable.
pub fn default_cache_path() -> PathBuf {
    if let Some(p) = std::env::var_os(CACHE_ENV) {
        return PathBuf::from(p);
    }
    std::env::current_exe()
        .ok()
        .and_then(|exe| exe.parent().map(Path::to_path_buf))
        .unwrap_or_else(std::env::temp_dir)
        .join(CACHE_FILE_NAME)
}

fn poly_to_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([e.entries(), format_rational(c)]))
            .collect(),
    )
}

fn poly_from_json(v: &Value) -> Result<Poly, JinvError> {
    let bad = || JinvError::Cache("malformed polynomial".into());
    let vars = cubic_vars();
    let mut terms = Vec::new();
    for term in v.as_array().ok_or_else(bad)? {
        let pair = term.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
        let exps = pair[0]
            .as_array()
            .filter(|a| a.len() == vars.len())
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_i64().and_then(|k| i32::try_from(k).ok()).ok_or_else(bad))
            .collect::<Result<Vec<_>, _>>()?;
        let coef = parse_rational(pair[1].as_str().ok_or_else(bad)?)?;
        terms.push((Exponent::new(exps), coef));
    }
    Ok(Poly::from_terms(&vars, terms))
}

fn payload(inv: &CubicInvariants) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("format".into(), json!(FORMAT));
    m.insert("variables".into(), json!(cubic_vars().names()));
    m.insert("S".into(), poly_to_json(&inv.s));
    m.insert("A".into(), poly_to_json(&inv.a));
    m.insert("Delta".into(), poly_to_json(&inv.delta));
    m
}

fn digest(payload: &Map<String, Value>) -> String {
    let text = serde_json::to_string(payload).expect("serializable");
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Canonical JSON text including the content hash.
pub fn serialize(inv: &CubicInvariants) -> String {
    let mut m = payload(inv);
    let hash = digest(&m);
    m.insert("sha256".into(), json!(hash));
    serde_json::to_string(&Value::Object(m)).expect("serializable")
}

/// Parses a cache, checking the hash and the Weierstrass certificate.
pub fn deserialize(text: &str) -> Result<CubicInvariants, JinvError> {
    let v: Value = serde_json::from_str(text).map_err(|e| JinvError::Cache(e.to_string()))?;
    let mut m = v
        .as_object()
        .cloned()
        .ok_or_else(|| JinvError::Cache("not an object".into()))?;
    let stored = m
        .remove("sha256")
        .and_then(|h| h.as_str().map(str::to_owned))
        .ok_or_else(|| JinvError::Cache("missing hash".into()))?;
    if m.get("format") != Some(&json!(FORMAT))
        || m.get("variables") != Some(&json!(cubic_vars().names()))
    {
        return Err(JinvError::Cache("unknown format".into()));
    }
    if digest(&m) != stored {
        return Err(JinvError::Cache("hash mismatch".into()));
    }
    let get = |k: &str| m.get(k).ok_or_else(|| JinvError::Cache(format!("missing {k}")));
    CubicInvariants::from_parts(
        poly_from_json(get("S")?)?,
        poly_from_json(get("A")?)?,
        poly_from_json(get("Delta")?)?,
    )
}

/// Loads the cache at `path`, rebuilding and rewriting it when absent or
/// invalid. A failed write is not an error.
pub fn load_or_build(path: &Path) -> Result<CubicInvariants, JinvError> {
    if let Ok(text) = std::fs::read_to_string(path) {
        if let Ok(inv) = deserialize(&text) {
            return Ok(inv);
        }
    }
    let inv = CubicInvariants::build()?;
    write_cache(path, &inv).ok();
    Ok(inv)
}

/// Writes atomically through a temporary file in the same directory.
pub fn write_cache(path: &Path, inv: &CubicInvariants) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, serialize(inv))?;
    std::fs::rename(&tmp, path)
}

/// The shared invariants; the first caller loads or builds them and
/// concurrent callers wait for that single computation.
pub fn invariants() -> Result<&'static CubicInvariants, JinvError> {
    static SHARED: OnceLock<Result<CubicInvariants, JinvError>> = OnceLock::new();
    SHARED
        .get_or_init(|| load_or_build(&default_cache_path()))
        .as_ref()
        .map_err(Clone::clone)
}
