//! Character table files (`hallmark-ct/1`).
//!
//! ```json
//! {"schema": "hallmark-ct/1", "name": "C3", "order": 3, "exponent": 3,
//!  "classes": [{"label": "1", "size": 1, "order": 1}, ...],
//!  "characters": [[{"n": 1, "terms": [[1, 0]]}, ...], ...]}
//! ```
//!
//! A value `{"n": n, "terms": [[c, e], ...]}` stands for `Σ c ζ_n^e`.
//! Coefficients are integers (or decimal strings for large ones). The first
//! class must be the identity. Loading checks the class-size sum, that
//! degrees divide the order, and both orthogonality relations between rows.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, ParseErrorKind, Result};
use crate::numtheory::lcm;

pub const SCHEMA: &str = "hallmark-ct/1";

#[derive(Clone, Debug, Serialize)]
pub struct TableClass {
    pub label: String,
    #[serde(serialize_with = "ser_big")]
    pub size: BigUint,
    pub order: u64,
}

fn ser_big<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub name: String,
    pub order: BigUint,
    pub exponent: u64,
    pub classes: Vec<TableClass>,
    pub characters: Vec<Vec<Cyclotomic>>,
    degrees: Vec<BigUint>,
}

fn schema_err(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::parse(ParseErrorKind::Schema, path, msg)
}

fn big_int(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| schema_err(path, "expected an integer")),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| schema_err(path, "expected a decimal integer string")),
        _ => Err(schema_err(path, "expected an integer")),
    }
}

fn positive(v: &Value, path: &str) -> Result<BigUint> {
    let n = big_int(v, path)?;
    match n.to_biguint() {
        Some(u) if !u.is_zero() => Ok(u),
        _ => Err(schema_err(path, "expected a positive integer")),
    }
}

fn small(v: &Value, path: &str) -> Result<u64> {
    v.as_u64()
        .filter(|&x| x > 0)
        .ok_or_else(|| schema_err(path, "expected a positive integer"))
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema_err(format!("{path}{key}"), "missing"))
}

fn parse_value(v: &Value, path: &str) -> Result<Cyclotomic> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema_err(path, "value must be an object {n, terms}"))?;
    let n = small(field(obj, "n", &format!("{path}."))?, &format!("{path}.n"))?;
    let terms = field(obj, "terms", &format!("{path}."))?
        .as_array()
        .ok_or_else(|| schema_err(format!("{path}.terms"), "must be an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        let tp = format!("{path}.terms[{i}]");
        let pair = t
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| schema_err(&tp, "term must be [coefficient, exponent]"))?;
        let c = big_int(&pair[0], &format!("{tp}[0]"))?;
        let e = pair[1]
            .as_i64()
            .ok_or_else(|| schema_err(format!("{tp}[1]"), "exponent must be an integer"))?;
        out.push((c, e));
    }
    Ok(Cyclotomic::from_terms(n, out))
}

fn value_to_json(x: &Cyclotomic) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(e, c)| match i64::try_from(c) {
            Ok(small) => json!([small, e]),
            Err(_) => json!([c.to_string(), e]),
        })
        .collect();
    json!({"n": x.modulus(), "terms": terms})
}

impl CharacterTable {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| {
            Error::parse(
                ParseErrorKind::Syntax,
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        let obj = v.as_object().ok_or_else(|| schema_err("$", "top level must be an object"))?;
        match obj.get("schema").and_then(Value::as_str) {
            Some(SCHEMA) => {}
            Some(other) => return Err(schema_err("schema", format!("unsupported schema `{other}`"))),
            None => return Err(schema_err("schema", "missing")),
        }
        let name = field(obj, "name", "")?
            .as_str()
            .ok_or_else(|| schema_err("name", "must be a string"))?
            .to_string();
        let order = positive(field(obj, "order", "")?, "order")?;
        let exponent = small(field(obj, "exponent", "")?, "exponent")?;
        let class_list = field(obj, "classes", "")?
            .as_array()
            .filter(|a| !a.is_empty())
            .ok_or_else(|| schema_err("classes", "must be a nonempty array"))?;
        let mut classes = Vec::with_capacity(class_list.len());
        for (i, c) in class_list.iter().enumerate() {
            let path = format!("classes[{i}]");
            let co = c.as_object().ok_or_else(|| schema_err(&path, "must be an object"))?;
            let label = field(co, "label", &format!("{path}."))?
                .as_str()
                .ok_or_else(|| schema_err(format!("{path}.label"), "must be a string"))?
                .to_string();
            let size = positive(field(co, "size", &format!("{path}."))?, &format!("{path}.size"))?;
            let eo = small(field(co, "order", &format!("{path}."))?, &format!("{path}.order"))?;
            if exponent % eo != 0 {
                return Err(schema_err(
                    format!("{path}.order"),
                    format!("element order {eo} does not divide exponent {exponent}"),
                ));
            }
            classes.push(TableClass { label, size, order: eo });
        }
        if !(classes[0].size.is_one() && classes[0].order == 1) {
            return Err(schema_err("classes[0]", "first class must be the identity"));
        }
        let total: BigUint = classes.iter().map(|c| &c.size).sum();
        if total != order {
            return Err(Error::parse(
                ParseErrorKind::SizeSum,
                "classes",
                format!("class sizes sum to {total}, order is {order}"),
            ));
        }
        let rows = field(obj, "characters", "")?
            .as_array()
            .ok_or_else(|| schema_err("characters", "must be an array"))?;
        if rows.len() != classes.len() {
            return Err(schema_err(
                "characters",
                format!("{} characters for {} classes", rows.len(), classes.len()),
            ));
        }
        let mut characters = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let path = format!("characters[{i}]");
            let vals = row
                .as_array()
                .filter(|r| r.len() == classes.len())
                .ok_or_else(|| schema_err(&path, format!("must be an array of {} values", classes.len())))?;
            let mut out = Vec::with_capacity(vals.len());
            for (k, v) in vals.iter().enumerate() {
                let vp = format!("{path}[{k}]");
                let x = parse_value(v, &vp)?;
                if exponent % x.modulus() != 0 {
                    return Err(schema_err(
                        format!("{vp}.n"),
                        format!("modulus {} does not divide exponent {exponent}", x.modulus()),
                    ));
                }
                out.push(x);
            }
            characters.push(out);
        }
        let table = CharacterTable::from_parts(name, order, exponent, classes, characters)?;
        table.check_orthogonality()?;
        Ok(table)
    }

    /// Assembles a table, checking degrees but not orthogonality.
    pub fn from_parts(
        name: String,
        order: BigUint,
        exponent: u64,
        classes: Vec<TableClass>,
        characters: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self> {
        let mut degrees = Vec::with_capacity(characters.len());
        for (i, row) in characters.iter().enumerate() {
            let path = format!("characters[{i}][0]");
            let d = row[0]
                .to_integer()
                .and_then(|d| d.to_biguint())
                .filter(|d| !d.is_zero())
                .ok_or_else(|| {
                    Error::parse(ParseErrorKind::DegreeDivisibility, &path, "degree must be a positive integer")
                })?;
            if !(&order % &d).is_zero() {
                return Err(Error::parse(
                    ParseErrorKind::DegreeDivisibility,
                    &path,
                    format!("degree {d} does not divide the order {order}"),
                ));
            }
            degrees.push(d);
        }
        Ok(CharacterTable {
            name,
            order,
            exponent,
            classes,
            characters,
            degrees,
        })
    }

    /// `Σ_K |K| χ(g_K) conj(ψ(g_K))`.
    pub fn inner_product_times_order(&self, i: usize, j: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(1);
        for (k, class) in self.classes.iter().enumerate() {
            let term = self.characters[i][k].mul(&self.characters[j][k].conj());
            acc = acc.add(&term.scale(&BigInt::from_biguint(Sign::Plus, class.size.clone())));
        }
        acc
    }

    fn check_orthogonality(&self) -> Result<()> {
        let order = BigInt::from_biguint(Sign::Plus, self.order.clone());
        for i in 0..self.characters.len() {
            for j in i..self.characters.len() {
                let s = self.inner_product_times_order(i, j);
                let want = if i == j { order.clone() } else { BigInt::zero() };
                if s.to_integer().as_ref() != Some(&want) {
                    let path = if i == j {
                        format!("characters[{i}]")
                    } else {
                        format!("characters[{i}] / characters[{j}]")
                    };
                    return Err(Error::parse(
                        ParseErrorKind::Orthogonality,
                        path,
                        format!("inner product times |G| is {s}, expected {want}"),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self, chi: usize) -> &BigUint {
        &self.degrees[chi]
    }

    pub fn degrees(&self) -> &[BigUint] {
        &self.degrees
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the character with all values 1.
    pub fn trivial_character(&self) -> Option<usize> {
        let one = Cyclotomic::integer(1);
        self.characters.iter().position(|row| row.iter().all(|v| *v == one))
    }

    /// Applies `ζ ↦ ζ^k` to every value (`k` prime to the exponent).
    pub fn galois_conjugate(&self, k: i64) -> CharacterTable {
        assert_eq!((k.rem_euclid(self.exponent as i64) as u64).gcd(&self.exponent), 1);
        let characters = self
            .characters
            .iter()
            .map(|row| row.iter().map(|v| v.galois(k)).collect())
            .collect();
        CharacterTable {
            characters,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| json!({"label": c.label, "size": biguint_json(&c.size), "order": c.order}))
            .collect();
        let chars: Vec<Value> = self
            .characters
            .iter()
            .map(|row| Value::Array(row.iter().map(value_to_json).collect()))
            .collect();
        json!({
            "schema": SCHEMA,
            "name": self.name,
            "order": biguint_json(&self.order),
            "exponent": self.exponent,
            "classes": classes,
            "characters": chars,
        })
        .to_string()
    }
}

fn biguint_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(x) => json!(x),
        Err(_) => json!(n.to_string()),
    }
}

/// Least common multiple of the element orders.
pub fn exponent_of(orders: &[u64]) -> u64 {
    orders.iter().fold(1, |a, &b| lcm(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C3: &str = r#"{"schema":"hallmark-ct/1","name":"C3","order":3,"exponent":3,
      "classes":[{"label":"1","size":1,"order":1},{"label":"g","size":1,"order":3},{"label":"g2","size":1,"order":3}],
      "characters":[
        [{"n":1,"terms":[[1,0]]},{"n":1,"terms":[[1,0]]},{"n":1,"terms":[[1,0]]}],
        [{"n":1,"terms":[[1,0]]},{"n":3,"terms":[[1,1]]},{"n":3,"terms":[[1,2]]}],
        [{"n":1,"terms":[[1,0]]},{"n":3,"terms":[[1,2]]},{"n":3,"terms":[[1,1]]}]]}"#;

    fn kind(e: Error) -> (ParseErrorKind, String) {
        match e {
            Error::Parse { kind, path, .. } => (kind, path),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parses_and_round_trips() {
        let t = CharacterTable::parse(C3).unwrap();
        assert_eq!(t.class_count(), 3);
        assert_eq!(t.trivial_character(), Some(0));
        let again = CharacterTable::parse(&t.to_json()).unwrap();
        assert_eq!(again.characters, t.characters);
    }

    #[test]
    fn size_sum_error() {
        let bad = C3.replace(r#""order":3,"exponent""#, r#""order":4,"exponent""#);
        assert_eq!(kind(CharacterTable::parse(&bad).unwrap_err()).0, ParseErrorKind::SizeSum);
    }

    #[test]
    fn orthogonality_error() {
        let bad = C3.replacen(r#"{"n":3,"terms":[[1,1]]},{"n":3,"terms":[[1,2]]}]"#, r#"{"n":3,"terms":[[1,1]]},{"n":3,"terms":[[1,1]]}]"#, 1);
        let (k, path) = kind(CharacterTable::parse(&bad).unwrap_err());
        assert_eq!(k, ParseErrorKind::Orthogonality);
        assert_eq!(path, "characters[0] / characters[1]");
    }

    #[test]
    fn schema_errors_are_positioned() {
        let bad = C3.replacen(r#"[[1,2]]"#, r#"[[1]]"#, 1);
        let (k, path) = kind(CharacterTable::parse(&bad).unwrap_err());
        assert_eq!(k, ParseErrorKind::Schema);
        assert_eq!(path, "characters[1][2].terms[0]");
        let bad = C3.replace("hallmark-ct/1", "hallmark-ct/0");
        assert_eq!(kind(CharacterTable::parse(&bad).unwrap_err()).1, "schema");
        assert_eq!(kind(CharacterTable::parse("[").unwrap_err()).0, ParseErrorKind::Syntax);
    }

    #[test]
    fn degree_must_divide_order() {
        let bad = r#"{"schema":"hallmark-ct/1","name":"x","order":2,"exponent":2,
          "classes":[{"label":"1","size":1,"order":1},{"label":"g","size":1,"order":2}],
          "characters":[[{"n":1,"terms":[[1,0]]},{"n":1,"terms":[[1,0]]}],
                        [{"n":1,"terms":[[3,0]]},{"n":1,"terms":[[-1,0]]}]]}"#;
        let (k, path) = kind(CharacterTable::parse(bad).unwrap_err());
        assert_eq!(k, ParseErrorKind::DegreeDivisibility);
        assert_eq!(path, "characters[1][0]");
    }
}
