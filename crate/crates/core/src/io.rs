//! JSON document formats: codewords, flats, classification records.
//!
//! A codeword document identifies its field by (p, n, irreducible) and
//! carries either the value table (in point-index order, bit-exact) or the
//! reduced-form terms:
//!
//! ```json
//! { "p": 2, "n": 2, "irreducible": [1,1,1], "m": 2, "repr": "table",
//!   "values": [0,1,1,0, ...] }
//! { "p": 3, "n": 1, "irreducible": [], "m": 2, "repr": "poly",
//!   "terms": [ { "exps": [1,1], "coeff": 2 } ] }
//! ```

use crate::classify::{ClassTag, Classification, HyperplaneRef, Witness};
use crate::field::{shared_field, Elem, FieldError, FieldSpec};
use crate::geometry::AffineFlat;
use crate::poly::{FuncTable, PolyError, ReducedPoly};
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("field `repr` must be \"table\" or \"poly\", got `{got}`")]
    UnknownRepr { got: String },
    #[error("missing field `{name}` (required when repr = \"{repr}\")")]
    MissingField { name: &'static str, repr: String },
    #[error("field `values` has {got} entries, expected q^m = {expected}")]
    ValuesLength { expected: usize, got: usize },
    #[error("field `{name}`: {source}")]
    BadContent {
        name: &'static str,
        source: PolyError,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("no supported field has p = {p}, n = {n}")]
    UnsupportedField { p: usize, n: usize },
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exps: Vec<u8>,
    pub coeff: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodewordDoc {
    pub p: usize,
    pub n: usize,
    pub irreducible: Vec<u8>,
    pub m: usize,
    pub repr: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<TermDoc>>,
}

impl CodewordDoc {
    pub fn from_table(t: &FuncTable) -> Self {
        let f = t.field();
        CodewordDoc {
            p: f.p(),
            n: f.n(),
            irreducible: f.irreducible().to_vec(),
            m: t.m(),
            repr: "table".to_string(),
            values: Some(t.values().iter().map(|v| v.0).collect()),
            terms: None,
        }
    }

    pub fn from_poly(p: &ReducedPoly) -> Self {
        let f = p.field();
        CodewordDoc {
            p: f.p(),
            n: f.n(),
            irreducible: f.irreducible().to_vec(),
            m: p.m(),
            repr: "poly".to_string(),
            values: None,
            terms: Some(
                p.terms()
                    .iter()
                    .map(|(mono, c)| TermDoc {
                        exps: mono.exps.clone(),
                        coeff: c.0,
                    })
                    .collect(),
            ),
        }
    }

    /// Resolves the declared field against the fixed encodings; a mismatch
    /// in (p, n, irreducible) is an error.
    pub fn resolve_field(&self) -> Result<Arc<FieldSpec>, DocError> {
        let q = self.p.pow(self.n as u32);
        let field = shared_field(q).map_err(|_| DocError::UnsupportedField {
            p: self.p,
            n: self.n,
        })?;
        if !field.matches_encoding(self.p, self.n, &self.irreducible) {
            return Err(DocError::Field(FieldError::Mismatch {
                file_p: self.p,
                file_n: self.n,
                file_irr: self.irreducible.clone(),
                p: field.p(),
                n: field.n(),
                irr: field.irreducible().to_vec(),
            }));
        }
        Ok(field)
    }

    pub fn to_table(&self) -> Result<FuncTable, DocError> {
        let field = self.resolve_field()?;
        match self.repr.as_str() {
            "table" => {
                let values = self.values.as_ref().ok_or(DocError::MissingField {
                    name: "values",
                    repr: self.repr.clone(),
                })?;
                let expected = field.q().pow(self.m as u32);
                if values.len() != expected {
                    return Err(DocError::ValuesLength {
                        expected,
                        got: values.len(),
                    });
                }
                FuncTable::from_values(
                    field,
                    self.m,
                    values.iter().map(|&v| Elem(v)).collect(),
                )
                .map_err(|source| DocError::BadContent {
                    name: "values",
                    source,
                })
            }
            "poly" => {
                let terms = self.terms.as_ref().ok_or(DocError::MissingField {
                    name: "terms",
                    repr: self.repr.clone(),
                })?;
                let poly = ReducedPoly::from_terms(
                    field,
                    self.m,
                    terms.iter().map(|t| (t.exps.clone(), Elem(t.coeff))),
                )
                .map_err(|source| DocError::BadContent {
                    name: "terms",
                    source,
                })?;
                Ok(crate::poly::to_table(&poly))
            }
            other => Err(DocError::UnknownRepr {
                got: other.to_string(),
            }),
        }
    }
}

pub fn parse_codeword(json: &str) -> Result<FuncTable, DocError> {
    let doc: CodewordDoc = serde_json::from_str(json)?;
    doc.to_table()
}

/// Flats serialize as base plus direction rows, elements by index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlatDoc {
    pub base: Vec<u8>,
    pub directions: Vec<Vec<u8>>,
}

impl From<&AffineFlat> for FlatDoc {
    fn from(flat: &AffineFlat) -> Self {
        FlatDoc {
            base: flat.base().iter().map(|e| e.0).collect(),
            directions: flat
                .directions()
                .iter()
                .map(|d| d.iter().map(|e| e.0).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HyperplaneDoc {
    pub normal: Vec<u8>,
    pub offset: u8,
}

impl From<&HyperplaneRef> for HyperplaneDoc {
    fn from(h: &HyperplaneRef) -> Self {
        HyperplaneDoc {
            normal: h.normal.iter().map(|e| e.0).collect(),
            offset: h.offset.0,
        }
    }
}

/// Flat JSON view of a classification: tag plus whichever witness fields
/// the configuration carries.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationDoc {
    pub tag: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hull: Option<FlatDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flat: Option<FlatDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stack_normal: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stack_offsets: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversal: Option<HyperplaneDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversals: Option<Vec<HyperplaneDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil_members: Option<Vec<HyperplaneDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl ClassificationDoc {
    pub fn new(c: &Classification) -> Self {
        let mut doc = ClassificationDoc {
            tag: c.tag.as_str(),
            hull: None,
            flat: None,
            stack_normal: None,
            stack_offsets: None,
            transversal: None,
            transversals: None,
            pencil_members: None,
            support: None,
            diagnostic: None,
        };
        if c.tag == ClassTag::Unknown {
            doc.diagnostic = Some(
                "no characterized configuration matched; for a genuine codeword of the stated \
                 weight this indicates a defect upstream"
                    .to_string(),
            );
        }
        match &c.witness {
            None => {}
            Some(Witness::ParallelStack {
                hull,
                stack_normal,
                offsets,
            }) => {
                doc.hull = Some(hull.into());
                doc.stack_normal = Some(stack_normal.iter().map(|e| e.0).collect());
                doc.stack_offsets = Some(offsets.iter().map(|e| e.0).collect());
            }
            Some(Witness::ParallelMinusTransversal {
                hull,
                stack_normal,
                offsets,
                transversal,
            }) => {
                doc.hull = Some(hull.into());
                doc.stack_normal = Some(stack_normal.iter().map(|e| e.0).collect());
                doc.stack_offsets = Some(offsets.iter().map(|e| e.0).collect());
                doc.transversal = Some(transversal.into());
            }
            Some(Witness::PencilMinusBase { hull, members }) => {
                doc.hull = Some(hull.into());
                doc.pencil_members = Some(members.iter().map(HyperplaneDoc::from).collect());
            }
            Some(Witness::FlatSupport { flat }) => {
                doc.flat = Some(flat.into());
            }
            Some(Witness::TwoTransversals {
                hull,
                stack_normal,
                offsets,
                transversals,
            }) => {
                doc.hull = Some(hull.into());
                doc.stack_normal = Some(stack_normal.iter().map(|e| e.0).collect());
                doc.stack_offsets = Some(offsets.iter().map(|e| e.0).collect());
                doc.transversals = Some(transversals.iter().map(HyperplaneDoc::from).collect());
            }
            Some(Witness::Contained { hull, support }) => {
                doc.hull = Some(hull.into());
                doc.support = Some(support.clone());
            }
        }
        doc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::shared_field;
    use crate::grm::{construct_second_a, CodeParams};

    #[test]
    fn table_document_round_trip() {
        let f = shared_field(4).unwrap();
        let params = CodeParams::new(f, 3, 5).unwrap();
        let t = construct_second_a(&params, None, None).unwrap();
        let doc = CodewordDoc::from_table(&t);
        let json = serde_json::to_string(&doc).unwrap();
        let back = parse_codeword(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn poly_document_evaluates() {
        let json = r#"{"p":3,"n":1,"irreducible":[],"m":2,"repr":"poly",
                       "terms":[{"exps":[1,1],"coeff":1}]}"#;
        let t = parse_codeword(json).unwrap();
        assert_eq!(t.weight(), 4);
    }

    #[test]
    fn wrong_values_length_names_the_field() {
        let json = r#"{"p":3,"n":1,"irreducible":[],"m":2,"repr":"table",
                       "values":[0,0,0]}"#;
        match parse_codeword(json) {
            Err(DocError::ValuesLength { expected, got }) => {
                assert_eq!((expected, got), (9, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn field_mismatch_is_detected() {
        // GF(4) declared with the wrong modulus
        let json = r#"{"p":2,"n":2,"irreducible":[1,0,1],"m":1,"repr":"table",
                       "values":[0,1,1,1]}"#;
        assert!(matches!(
            parse_codeword(json),
            Err(DocError::Field(FieldError::Mismatch { .. }))
        ));
    }

    #[test]
    fn unknown_repr_is_rejected() {
        let json = r#"{"p":3,"n":1,"irreducible":[],"m":1,"repr":"matrix","values":[0,1,2]}"#;
        assert!(matches!(
            parse_codeword(json),
            Err(DocError::UnknownRepr { .. })
        ));
    }

    #[test]
    fn missing_terms_is_reported() {
        let json = r#"{"p":3,"n":1,"irreducible":[],"m":1,"repr":"poly"}"#;
        match parse_codeword(json) {
            Err(DocError::MissingField { name, .. }) => assert_eq!(name, "terms"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
