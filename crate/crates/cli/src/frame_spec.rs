//! Frame descriptors: `godel:m`, `lukasiewicz:m`, `dprod:m1,m2,m3`, or a bare
//! family name whose chain is fitted to the data.

use crate::error::{CliError, Result};
use crate::grades::lcm;
use galois_factor_core::fuzzy::{Frame, FrameKind};
use galois_factor_core::grade::{AdjointTriple, GradeChain, TripleFamily};
use std::fmt;
use std::str::FromStr;

/// Largest chain granularity an auto-detected frame may use.
pub const AUTO_GRANULARITY_LIMIT: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Godel,
    Lukasiewicz,
    DiscretizedProduct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameSpec {
    pub family: Family,
    /// `None`: fit `m` to the data. Gödel and Łukasiewicz take one value, the product three.
    pub granularity: Option<Vec<u32>>,
    pub kind: FrameKind,
}

impl FromStr for FrameSpec {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self> {
        let (name, params) = match text.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p)),
            None => (text.trim(), None),
        };
        let family = match name {
            "godel" | "goedel" | "gödel" => Family::Godel,
            "lukasiewicz" | "łukasiewicz" => Family::Lukasiewicz,
            "dprod" | "product" => Family::DiscretizedProduct,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown frame `{other}` (expected godel, lukasiewicz or dprod)"
                )))
            }
        };
        let granularity = params
            .map(|p| {
                p.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<u32>()
                            .ok()
                            .filter(|&m| m > 0)
                            .ok_or_else(|| {
                                CliError::Usage(format!(
                                    "frame `{text}`: `{v}` is not a positive integer"
                                ))
                            })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .transpose()?;
        let arity_ok = match (&granularity, family) {
            (None, _) => true,
            (Some(g), Family::DiscretizedProduct) => g.len() == 1 || g.len() == 3,
            (Some(g), _) => g.len() == 1,
        };
        if !arity_ok {
            return Err(CliError::Usage(format!(
                "frame `{text}`: wrong number of parameters"
            )));
        }
        Ok(FrameSpec {
            family,
            granularity,
            kind: FrameKind::ConceptForming,
        })
    }
}

impl fmt::Display for FrameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Godel => "godel",
            Family::Lukasiewicz => "lukasiewicz",
            Family::DiscretizedProduct => "dprod",
        };
        match &self.granularity {
            None => f.write_str(name),
            Some(g) => {
                let list: Vec<String> = g.iter().map(u32::to_string).collect();
                write!(f, "{name}:{}", list.join(","))
            }
        }
    }
}

pub fn kind_name(kind: FrameKind) -> &'static str {
    match kind {
        FrameKind::ConceptForming => "concept-forming",
        FrameKind::PropertyOriented => "property-oriented",
        FrameKind::ObjectOriented => "object-oriented",
    }
}

pub fn parse_kind(name: &str) -> Result<FrameKind> {
    match name {
        "concept-forming" => Ok(FrameKind::ConceptForming),
        "property-oriented" => Ok(FrameKind::PropertyOriented),
        "object-oriented" => Ok(FrameKind::ObjectOriented),
        other => Err(CliError::Input(format!("unknown frame kind `{other}`"))),
    }
}

impl FrameSpec {
    pub fn with_kind(mut self, kind: FrameKind) -> Self {
        self.kind = kind;
        self
    }

    /// The relation chain `P` this spec pins down, if any.
    pub fn relation_chain(&self) -> Option<u32> {
        let g = self.granularity.as_ref()?;
        Some(match (self.family, g.as_slice()) {
            (Family::DiscretizedProduct, [m1, m2, m3]) => match self.kind {
                FrameKind::ConceptForming => *m3,
                FrameKind::PropertyOriented => *m1,
                FrameKind::ObjectOriented => *m2,
            },
            (_, g) => g[0],
        })
    }

    /// Fixes a bare family to the least common multiple of `denominators`.
    pub fn fitted<I: IntoIterator<Item = u64>>(&self, denominators: I) -> Result<FrameSpec> {
        if self.granularity.is_some() {
            return Ok(self.clone());
        }
        let mut m = 1u64;
        for q in denominators {
            m = lcm(m, q)
                .filter(|&m| m <= AUTO_GRANULARITY_LIMIT)
                .ok_or_else(|| {
                    CliError::Input(format!(
                        "no chain with at most {AUTO_GRANULARITY_LIMIT} grades holds every value; give the frame explicitly"
                    ))
                })?;
        }
        Ok(FrameSpec {
            granularity: Some(vec![m as u32]),
            ..self.clone()
        })
    }

    pub fn build(&self) -> Result<Frame> {
        let g = self
            .granularity
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("frame `{self}` has no granularity")))?;
        let chain = |m: u32| GradeChain::new(m).map_err(CliError::from);
        let triple = match (self.family, g) {
            (Family::Godel, [m]) => AdjointTriple::godel(chain(*m)?),
            (Family::Lukasiewicz, [m]) => AdjointTriple::lukasiewicz(chain(*m)?),
            (Family::DiscretizedProduct, [m]) => AdjointTriple::discretized_product(*m, *m, *m)?,
            (Family::DiscretizedProduct, [m1, m2, m3]) => {
                AdjointTriple::discretized_product(*m1, *m2, *m3)?
            }
            _ => unreachable!("arity checked on parse"),
        };
        let (p1, p2, p3) = triple.domains();
        // invert each arrangement: (L1,L2,P), (P,L2,L1), (L1,P,L2)
        let (l1, l2, p) = match self.kind {
            FrameKind::ConceptForming => (p1, p2, p3),
            FrameKind::PropertyOriented => (p3, p2, p1),
            FrameKind::ObjectOriented => (p1, p3, p2),
        };
        Ok(Frame::new(self.kind, l1, l2, p, vec![triple])?)
    }

    /// The spec a single-triple frame was built from.
    pub fn of_frame(frame: &Frame) -> Result<FrameSpec> {
        let [t] = frame.triples() else {
            return Err(CliError::Input(
                "frames with several triples have no descriptor".into(),
            ));
        };
        let (p1, p2, p3) = t.domains();
        let (family, granularity) = match t.family() {
            TripleFamily::Godel => (Family::Godel, vec![p1.m()]),
            TripleFamily::Lukasiewicz => (Family::Lukasiewicz, vec![p1.m()]),
            TripleFamily::DiscretizedProduct => {
                (Family::DiscretizedProduct, vec![p1.m(), p2.m(), p3.m()])
            }
            TripleFamily::Custom => {
                return Err(CliError::Input("custom triples have no descriptor".into()))
            }
        };
        Ok(FrameSpec {
            family,
            granularity: Some(granularity),
            kind: frame.kind(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let s: FrameSpec = "dprod:4,8,10".parse().unwrap();
        assert_eq!(s.build().unwrap().descriptor(), "dprod:4,8,10");
        assert_eq!(s.relation_chain(), Some(10));
        let s: FrameSpec = "godel:4".parse().unwrap();
        assert!(s.build().unwrap().is_godel());
        assert_eq!(s.to_string(), "godel:4");
        assert_eq!(
            "dprod:4"
                .parse::<FrameSpec>()
                .unwrap()
                .build()
                .unwrap()
                .descriptor(),
            "dprod:4,4,4"
        );
    }

    #[test]
    fn bad_descriptors() {
        for bad in [
            "minimum:4",
            "godel:0",
            "godel:4,4",
            "dprod:1,2",
            "lukasiewicz:x",
        ] {
            assert!(bad.parse::<FrameSpec>().is_err(), "{bad}");
        }
        assert!("godel".parse::<FrameSpec>().unwrap().build().is_err());
    }

    #[test]
    fn fitting_uses_the_lcm() {
        let s: FrameSpec = "lukasiewicz".parse().unwrap();
        let fitted = s.fitted([2, 4, 3, 1]).unwrap();
        assert_eq!(fitted.granularity, Some(vec![12]));
        assert!(s.fitted([997, 991]).is_err());
    }

    #[test]
    fn kinds_round_trip() {
        for kind in [
            FrameKind::ConceptForming,
            FrameKind::PropertyOriented,
            FrameKind::ObjectOriented,
        ] {
            let spec = "dprod:2,3,4".parse::<FrameSpec>().unwrap().with_kind(kind);
            let frame = spec.build().unwrap();
            assert_eq!(frame.kind(), kind);
            assert_eq!(FrameSpec::of_frame(&frame).unwrap(), spec);
            assert_eq!(parse_kind(kind_name(kind)).unwrap(), kind);
        }
    }
}
