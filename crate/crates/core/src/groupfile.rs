//! Group generator files.
//!
//! ```json
//! {"name": "A5", "degree": 5, "generators": [[2,3,4,5,1], [1,2,4,5,3]]}
//! ```
//!
//! Images are 1-based in the file and 0-based in memory. Rejections carry a
//! JSON path such as `generators[1][3]`.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, ParseErrorKind, Result};
use crate::group::PermutationGroup;
use crate::perm::{Permutation, MAX_DEGREE};

#[derive(Clone, Debug)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

#[derive(Serialize)]
struct GroupFileOut<'a> {
    name: &'a str,
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| {
            Error::parse(
                ParseErrorKind::Syntax,
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::parse(ParseErrorKind::Schema, "$", "top level must be an object"))?;
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            Some(_) => return Err(Error::parse(ParseErrorKind::Schema, "name", "must be a string")),
            None => return Err(Error::parse(ParseErrorKind::Schema, "name", "missing")),
        };
        let degree = obj
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse(ParseErrorKind::Schema, "degree", "missing or not a non-negative integer"))?
            as usize;
        if degree > MAX_DEGREE {
            return Err(Error::capacity("degree", degree, MAX_DEGREE));
        }
        let gens = obj
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse(ParseErrorKind::Schema, "generators", "missing or not an array"))?;
        let mut generators = Vec::with_capacity(gens.len());
        for (gi, g) in gens.iter().enumerate() {
            let arr = g.as_array().ok_or_else(|| {
                Error::parse(ParseErrorKind::Schema, format!("generators[{gi}]"), "must be an array")
            })?;
            if arr.len() != degree {
                return Err(Error::parse(
                    ParseErrorKind::Schema,
                    format!("generators[{gi}]"),
                    format!("has {} images, expected {degree}", arr.len()),
                ));
            }
            let mut images = Vec::with_capacity(degree);
            let mut hit = vec![None; degree];
            for (pi, x) in arr.iter().enumerate() {
                let path = format!("generators[{gi}][{pi}]");
                let img = x
                    .as_u64()
                    .ok_or_else(|| Error::parse(ParseErrorKind::Schema, &path, "image must be a positive integer"))?
                    as usize;
                if img == 0 || img > degree {
                    return Err(Error::parse(
                        ParseErrorKind::NotBijection,
                        &path,
                        format!("image {img} outside 1..={degree}"),
                    ));
                }
                if let Some(prev) = hit[img - 1] {
                    return Err(Error::parse(
                        ParseErrorKind::NotBijection,
                        &path,
                        format!("image {img} already used at position {prev}"),
                    ));
                }
                hit[img - 1] = Some(pi);
                images.push(img - 1);
            }
            generators.push(Permutation::from_images(images)?);
        }
        Ok(GroupFile {
            name,
            degree,
            generators,
        })
    }

    pub fn from_group(name: &str, g: &PermutationGroup) -> Self {
        GroupFile {
            name: name.to_string(),
            degree: g.degree(),
            generators: g.generators().to_vec(),
        }
    }

    pub fn build(&self) -> Result<PermutationGroup> {
        PermutationGroup::new(self.degree, self.generators.clone())
    }

    pub fn to_json(&self) -> String {
        let out = GroupFileOut {
            name: &self.name,
            degree: self.degree,
            generators: self
                .generators
                .iter()
                .map(|g| g.images().map(|x| x + 1).collect())
                .collect(),
        };
        serde_json::to_string(&out).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_one_based_images() {
        let f = GroupFile::parse(r#"{"name":"A5","degree":5,"generators":[[2,3,4,5,1],[1,2,4,5,3]]}"#).unwrap();
        assert_eq!(f.generators[0].apply(0), 1);
        assert_eq!(f.build().unwrap().order_u64(), Some(60));
    }

    #[test]
    fn non_bijection_is_position_precise() {
        let err = GroupFile::parse(r#"{"name":"x","degree":3,"generators":[[1,2,3],[2,2,3]]}"#).unwrap_err();
        match err {
            Error::Parse { kind, path, .. } => {
                assert_eq!(kind, ParseErrorKind::NotBijection);
                assert_eq!(path, "generators[1][1]");
            }
            other => panic!("{other:?}"),
        }
        let err = GroupFile::parse(r#"{"name":"x","degree":3,"generators":[[1,2,4]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { kind: ParseErrorKind::NotBijection, ref path, .. } if path == "generators[0][2]"));
    }

    #[test]
    fn schema_and_syntax_errors() {
        assert!(matches!(
            GroupFile::parse("{").unwrap_err(),
            Error::Parse { kind: ParseErrorKind::Syntax, .. }
        ));
        assert!(matches!(
            GroupFile::parse(r#"{"name":"x","degree":3,"generators":[[1,2]]}"#).unwrap_err(),
            Error::Parse { kind: ParseErrorKind::Schema, .. }
        ));
    }

    #[test]
    fn json_round_trip() {
        let f = GroupFile::parse(r#"{"name":"S3","degree":3,"generators":[[2,1,3],[2,3,1]]}"#).unwrap();
        let again = GroupFile::parse(&f.to_json()).unwrap();
        assert_eq!(again.generators, f.generators);
    }
}
