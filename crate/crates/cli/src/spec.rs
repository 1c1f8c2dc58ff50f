//! Polytope spec files: explicit halfspaces or a named generator.

use std::path::Path;

use delzant_core::delzant::{make_chopped_simplex, make_cube, make_product, make_simplex, scale};
use delzant_core::exact::{format_rational, parse_rational};
use delzant_core::polytope::{HRepJson, HalfSpaceJson};
use delzant_core::{validate_delzant, DelzantPolytope, HPolytope, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfSpaceJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub args: Vec<Value>,
}

pub struct Loaded {
    pub name: String,
    pub polytope: DelzantPolytope,
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let value = read_json(path)?;
    let spec: SpecFile = serde_json::from_value(value)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let default_name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    from_spec(&spec, default_name)
}

pub fn from_spec(spec: &SpecFile, default_name: String) -> Result<Loaded, CliError> {
    let polytope = match (&spec.halfspaces, &spec.generator) {
        (Some(_), Some(_)) => {
            return Err(CliError::Parse(
                "spec has both \"halfspaces\" and \"generator\"".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Parse(
                "spec needs \"halfspaces\" or \"generator\"".into(),
            ))
        }
        (Some(hs), None) => {
            let dim = spec
                .dim
                .or_else(|| hs.first().map(|h| h.normal.len()))
                .ok_or_else(|| CliError::Parse("cannot infer the dimension".into()))?;
            let json = HRepJson {
                dim,
                halfspaces: hs.clone(),
            };
            let p = HPolytope::try_from(&json).map_err(|e| CliError::Parse(e.to_string()))?;
            validate_delzant(&p)?
        }
        (None, Some(g)) => generate(g, &spec.args)?,
    };
    Ok(Loaded {
        name: spec.name.clone().unwrap_or(default_name),
        polytope,
    })
}

fn arg_string(v: &Value) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(CliError::Parse(format!(
            "expected a number or string, got {v}"
        ))),
    }
}

fn arg_rational(v: &Value) -> Result<Rational, CliError> {
    let s = arg_string(v)?;
    parse_rational(&s).map_err(|_| CliError::Parse(format!("not a rational: {s}")))
}

fn arg_dim(v: &Value) -> Result<usize, CliError> {
    let s = arg_string(v)?;
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(CliError::Parse(format!("not a positive dimension: {s}"))),
    }
}

/// A factor: a nested spec object, or `"kind:n"` / `"kind:n:scale"`.
fn factor(v: &Value) -> Result<DelzantPolytope, CliError> {
    if v.is_object() {
        let spec: SpecFile =
            serde_json::from_value(v.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
        return Ok(from_spec(&spec, String::new())?.polytope);
    }
    let s = arg_string(v)?;
    let parts: Vec<&str> = s.split(':').collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(CliError::Parse(format!(
            "bad factor {s}; expected kind:n[:scale]"
        )));
    }
    let mut args = vec![Value::String(parts[1].to_string())];
    args.push(Value::String(parts.get(2).unwrap_or(&"1").to_string()));
    generate(parts[0], &args)
}

fn expect_args(name: &str, args: &[Value], allowed: &[usize]) -> Result<(), CliError> {
    if allowed.contains(&args.len()) {
        Ok(())
    } else {
        Err(CliError::Parse(format!(
            "{name} takes {} arguments, got {}",
            allowed
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(" or "),
            args.len()
        )))
    }
}

pub const GENERATORS: &[&str] = &["simplex", "cube", "chopped_simplex", "product", "scale"];

pub fn generate(name: &str, args: &[Value]) -> Result<DelzantPolytope, CliError> {
    let p = match name {
        "simplex" | "cube" => {
            expect_args(name, args, &[1, 2])?;
            let n = arg_dim(&args[0])?;
            let s = match args.get(1) {
                Some(v) => arg_rational(v)?,
                None => Rational::from_integer(1.into()),
            };
            if name == "simplex" {
                make_simplex(n, &s)?
            } else {
                make_cube(n, &s)?
            }
        }
        "chopped_simplex" => {
            expect_args(name, args, &[2, 3])?;
            let n = match args.get(2) {
                Some(v) => arg_dim(v)?,
                None => 2,
            };
            make_chopped_simplex(n, &arg_rational(&args[0])?, &arg_rational(&args[1])?)?
        }
        "product" => {
            expect_args(name, args, &[2])?;
            make_product(&factor(&args[0])?, &factor(&args[1])?)?
        }
        "scale" => {
            expect_args(name, args, &[2])?;
            scale(&factor(&args[0])?, &arg_rational(&args[1])?)?
        }
        _ => {
            return Err(CliError::Parse(format!(
                "unknown generator {name}; known: {}",
                GENERATORS.join(", ")
            )))
        }
    };
    Ok(p)
}

/// Materialized spec for a polytope.
pub fn to_spec(name: &str, d: &DelzantPolytope) -> SpecFile {
    let json = HRepJson::from(d.hrep());
    SpecFile {
        name: Some(name.to_string()),
        dim: Some(json.dim),
        halfspaces: Some(json.halfspaces),
        generator: None,
        args: Vec::new(),
    }
}

pub fn generator_label(name: &str, args: &[String]) -> String {
    let shown: Vec<String> = args
        .iter()
        .map(|a| match parse_rational(a) {
            Ok(r) => format_rational(&r),
            Err(_) => a.clone(),
        })
        .collect();
    format!("{name}({})", shown.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn spec(v: Value) -> Result<Loaded, CliError> {
        from_spec(&serde_json::from_value(v).unwrap(), "x".into())
    }

    #[test]
    fn generator_and_halfspaces_agree() {
        let a = spec(json!({"generator": "cube", "args": [2, "1"]})).unwrap();
        let b = spec(json!({"name": "sq", "halfspaces": [
            {"normal": [1, 0], "offset": "0"}, {"normal": [-1, 0], "offset": "-1"},
            {"normal": [0, 1], "offset": 0}, {"normal": [0, -1], "offset": "-1"}]}))
        .unwrap();
        assert_eq!(a.polytope.hrep(), b.polytope.hrep());
        assert_eq!((a.name.as_str(), b.name.as_str()), ("x", "sq"));
    }

    #[test]
    fn factors() {
        let p = generate(
            "product",
            &[
                json!("simplex:1"),
                json!({"generator": "simplex", "args": [2]}),
            ],
        )
        .unwrap();
        assert_eq!((p.vertex_count(), p.facet_count()), (6, 5));
        let s = generate("scale", &[json!("cube:2:1/2"), json!("4")]).unwrap();
        assert_eq!(s.volume(), &Rational::from_integer(4.into()));
        assert!(matches!(
            generate("product", &[json!("simplex")]),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            generate("simplex", &[json!("0")]),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            generate("simplex", &[json!("2"), json!("-1")]),
            Err(CliError::Domain(_))
        ));
    }

    #[test]
    fn labels() {
        assert_eq!(
            generator_label("chopped_simplex", &["3".into(), "2/20".into(), "x".into()]),
            "chopped_simplex(3,1/10,x)"
        );
    }
}
