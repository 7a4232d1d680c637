//! Serializable command results. Field order is the JSON key order.

use crate::document::{ContextDocument, SCHEMA};
use crate::grades::fraction;
use galois_factor_core::boolean::{BooleanContext, ConceptLattice, FormalConcept};
use galois_factor_core::factor::{BlockBounds, Bound, CnLattice, Factorization, NecessityPair};
use galois_factor_core::fuzzy::{FnLattice, FuzzyConceptLattice, Graded, MultiAdjointConcept};
use galois_factor_core::oracle::OracleReport;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Input {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame: Option<String>,
    pub attributes: Vec<String>,
    pub objects: Vec<String>,
}

impl Input {
    pub fn of(doc: &ContextDocument) -> Self {
        match doc {
            ContextDocument::Boolean(c) => Input {
                kind: "boolean",
                frame: None,
                attributes: c.attributes().to_vec(),
                objects: c.objects().to_vec(),
            },
            ContextDocument::Fuzzy(c) => Input {
                kind: "fuzzy",
                frame: Some(c.frame().descriptor()),
                attributes: c.attributes().to_vec(),
                objects: c.objects().to_vec(),
            },
        }
    }

    pub fn is_fuzzy(&self) -> bool {
        self.kind == "fuzzy"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MismatchEntry {
    pub input: String,
    pub fast: String,
    pub oracle: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct OracleSummary {
    pub checked: usize,
    pub agrees: bool,
    pub mismatches: Vec<MismatchEntry>,
}

impl From<OracleReport> for OracleSummary {
    fn from(r: OracleReport) -> Self {
        OracleSummary {
            checked: r.checked,
            agrees: r.agrees(),
            mismatches: r
                .mismatches
                .into_iter()
                .map(|m| MismatchEntry {
                    input: m.input,
                    fast: m.fast,
                    oracle: m.oracle,
                })
                .collect(),
        }
    }
}

/// Boolean sets are listed by name; graded sets as `i/m` aligned with `input.objects`
/// (extents) or `input.attributes` (intents).
#[derive(Debug, Clone, Serialize)]
pub struct ConceptEntry {
    pub index: usize,
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

pub fn grades<S>(set: &Graded<S>) -> Vec<String> {
    (0..set.len()).map(|i| fraction(set.get(i))).collect()
}

pub fn names_of_objects(
    ctx: &BooleanContext,
    x: &galois_factor_core::boolean::ObjectSubset,
) -> Vec<String> {
    ctx.object_names(x).into_iter().map(String::from).collect()
}

pub fn names_of_attributes(
    ctx: &BooleanContext,
    y: &galois_factor_core::boolean::AttributeSubset,
) -> Vec<String> {
    ctx.attribute_names(y)
        .into_iter()
        .map(String::from)
        .collect()
}

fn covers(c: &[(usize, usize)]) -> Vec<[usize; 2]> {
    c.iter().map(|&(i, j)| [i, j]).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeBody {
    pub concepts: Vec<ConceptEntry>,
    /// `[lower, upper]` index pairs of the Hasse diagram.
    pub covers: Vec<[usize; 2]>,
    pub top: Option<usize>,
    pub bottom: Option<usize>,
    pub atoms: Vec<usize>,
    pub coatoms: Vec<usize>,
}

impl LatticeBody {
    pub fn boolean(ctx: &BooleanContext, l: &ConceptLattice) -> Self {
        LatticeBody {
            concepts: l
                .concepts()
                .iter()
                .enumerate()
                .map(|(index, c)| ConceptEntry {
                    index,
                    extent: names_of_objects(ctx, c.extent()),
                    intent: names_of_attributes(ctx, c.intent()),
                })
                .collect(),
            covers: covers(l.covers()),
            top: l.top(),
            bottom: l.bottom(),
            atoms: l.atoms(),
            coatoms: l.coatoms(),
        }
    }

    pub fn fuzzy(l: &FuzzyConceptLattice) -> Self {
        LatticeBody {
            concepts: l
                .concepts()
                .iter()
                .enumerate()
                .map(|(index, c)| ConceptEntry {
                    index,
                    extent: grades(c.extent()),
                    intent: grades(c.intent()),
                })
                .collect(),
            covers: covers(l.covers()),
            top: l.top(),
            bottom: l.bottom(),
            atoms: l.hasse().atoms(),
            coatoms: l.hasse().coatoms(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairEntry {
    /// Position in `pairs`; absent when `C_N` is not materialized.
    pub index: Option<usize>,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
}

fn pair_entry(ctx: &BooleanContext, index: Option<usize>, p: &NecessityPair) -> PairEntry {
    PairEntry {
        index,
        objects: names_of_objects(ctx, p.objects()),
        attributes: names_of_attributes(ctx, p.attributes()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CnBody {
    pub element_count: u128,
    pub materialized: bool,
    pub atoms: Vec<PairEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join_irreducible: Option<Vec<usize>>,
}

impl CnBody {
    pub fn new(ctx: &BooleanContext, cn: &CnLattice) -> Self {
        let el = cn.elements();
        let atom_index = |i: usize| el.map(|e| e.atom_indices()[i]);
        CnBody {
            element_count: cn.element_count(),
            materialized: cn.is_materialized(),
            atoms: cn
                .atoms()
                .iter()
                .enumerate()
                .map(|(i, a)| pair_entry(ctx, atom_index(i), a))
                .collect(),
            pairs: el.map(|e| {
                e.pairs()
                    .iter()
                    .enumerate()
                    .map(|(i, p)| pair_entry(ctx, Some(i), p))
                    .collect()
            }),
            covers: el.map(|e| covers(e.covers())),
            join_irreducible: el.map(|e| e.hasse().join_irreducibles()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundEntry {
    Concept {
        extent: Vec<String>,
        intent: Vec<String>,
    },
    IdentifiedWithTop,
    IdentifiedWithBottom,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsEntry {
    pub upper: BoundEntry,
    pub lower: BoundEntry,
    pub upper_closed: Option<bool>,
    pub lower_closed: Option<bool>,
    pub upper_is_coatom: Option<bool>,
    pub lower_within_upper: Option<bool>,
    pub property_oriented: bool,
    pub all_hold: bool,
}

fn concept_entry(ctx: &BooleanContext, c: &FormalConcept) -> BoundEntry {
    BoundEntry::Concept {
        extent: names_of_objects(ctx, c.extent()),
        intent: names_of_attributes(ctx, c.intent()),
    }
}

impl BoundsEntry {
    pub fn new(ctx: &BooleanContext, b: &BlockBounds) -> Self {
        let bound = |x: &Bound| match x {
            Bound::Concept(c) => concept_entry(ctx, c),
            Bound::IdentifiedWithTop => BoundEntry::IdentifiedWithTop,
            Bound::IdentifiedWithBottom => BoundEntry::IdentifiedWithBottom,
        };
        BoundsEntry {
            upper: bound(&b.upper),
            lower: bound(&b.lower),
            upper_closed: b.upper_closed,
            lower_closed: b.lower_closed,
            upper_is_coatom: b.upper_is_coatom,
            lower_within_upper: b.lower_within_upper,
            property_oriented: b.property_oriented,
            all_hold: b.all_hold(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalizationEntry {
    pub unchanged: bool,
    pub collapsed: bool,
    pub removed_full_rows: Vec<String>,
    pub removed_empty_rows: Vec<String>,
    pub removed_full_columns: Vec<String>,
    pub removed_empty_columns: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockEntry {
    pub index: usize,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub incidences: usize,
    /// Interval of concepts the block delimits; absent for a single-block core.
    pub bounds: Option<BoundsEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RStarEntry {
    /// Cells of `R*`.
    pub cells: usize,
    /// Cells of the core relation.
    pub relation_cells: usize,
    pub covers_relation: bool,
    /// The intersection over all of `C_N` was formed and matched the atom rectangles.
    pub intersection_checked: bool,
    /// One string per core attribute over the core objects, `1` inside `R*`.
    pub rows: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorBody {
    pub normalization: NormalizationEntry,
    pub blocks: Vec<BlockEntry>,
    pub partition: bool,
    /// `exact` when the union of block relations rebuilds the input.
    pub reconstruction: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rstar: Option<RStarEntry>,
    /// Core incidences as `(attribute, object)`, for drawing.
    #[serde(skip)]
    pub edges: Vec<(String, String)>,
}

impl FactorBody {
    pub fn new(
        f: &Factorization,
        bounds: Vec<Option<BlockBounds>>,
        rstar: Option<RStarEntry>,
        exact: bool,
    ) -> Self {
        let n = f.normalization();
        let core = f.core();
        let own = |v: Vec<&str>| v.into_iter().map(String::from).collect();
        FactorBody {
            normalization: NormalizationEntry {
                unchanged: n.is_unchanged(),
                collapsed: n.collapsed(),
                removed_full_rows: own(n.removed_full_rows()),
                removed_empty_rows: own(n.removed_empty_rows()),
                removed_full_columns: own(n.removed_full_cols()),
                removed_empty_columns: own(n.removed_empty_cols()),
            },
            blocks: f
                .blocks()
                .iter()
                .zip(bounds)
                .enumerate()
                .map(|(index, (b, bounds))| BlockEntry {
                    index,
                    objects: names_of_objects(core, b.objects()),
                    attributes: names_of_attributes(core, b.attributes()),
                    incidences: b.context().incidence_count(),
                    bounds: bounds.map(|x| BoundsEntry::new(core, &x)),
                })
                .collect(),
            partition: f.is_partition(),
            reconstruction: if exact { "exact" } else { "mismatch" },
            rstar,
            edges: (0..core.attribute_count())
                .flat_map(|a| {
                    core.row(a)
                        .iter()
                        .map(move |b| (core.attributes()[a].clone(), core.objects()[b].clone()))
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FnEntry {
    pub index: usize,
    pub g: Vec<String>,
    pub f: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FnBody {
    pub candidates: u128,
    pub pairs: Vec<FnEntry>,
    pub covers: Vec<[usize; 2]>,
    pub top: Option<usize>,
    pub bottom: Option<usize>,
}

impl FnBody {
    pub fn new(l: &FnLattice) -> Self {
        FnBody {
            candidates: l.candidates(),
            pairs: l
                .pairs()
                .iter()
                .enumerate()
                .map(|(index, p)| FnEntry {
                    index,
                    g: grades(p.g()),
                    f: grades(p.f()),
                })
                .collect(),
            covers: covers(l.covers()),
            top: l.top(),
            bottom: l.bottom(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BooleanCheckEntry {
    pub index: usize,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    /// Absent for the trivial pairs `(∅, ∅)` and `(B, A)`.
    pub bounds: Option<BoundsEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fp3Entry {
    pub holds: bool,
    pub top_normalized: bool,
    pub godel: bool,
    pub violated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AttributeEntry {
    pub attribute: String,
    pub fp4: bool,
    pub fp4_prime: bool,
    pub up: String,
    pub up_pi: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fp4Entry {
    pub attributes: Vec<AttributeEntry>,
    pub hypothesis_holds: bool,
    pub inequality_holds: bool,
    pub uncovered: Vec<String>,
    pub top_normalized: bool,
    pub godel: bool,
    pub violated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalEntry {
    /// Index into the concept lattice of the context.
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub lower_extent: Vec<String>,
    pub upper_extent: Vec<String>,
    pub ordered: bool,
}

impl IntervalEntry {
    pub fn new(
        lattice: &FuzzyConceptLattice,
        lower: &MultiAdjointConcept,
        upper: &MultiAdjointConcept,
        ordered: bool,
    ) -> Self {
        IntervalEntry {
            lower: lattice.index_of(lower),
            upper: lattice.index_of(upper),
            lower_extent: grades(lower.extent()),
            upper_extent: grades(upper.extent()),
            ordered,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct FuzzyCheckEntry {
    pub index: usize,
    pub g: Vec<String>,
    pub f: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fp1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fp2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fp3: Option<Fp3Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fp4: Option<Fp4Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fp5: Option<IntervalEntry>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CheckBody {
    Boolean {
        pairs: Vec<BooleanCheckEntry>,
    },
    Fuzzy {
        props: Vec<String>,
        top_normalized: bool,
        pairs: Vec<FuzzyCheckEntry>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ReconstructBody {
    pub blocks: usize,
    pub exact: bool,
    pub context: serde_json::Value,
    #[serde(skip)]
    pub cxt: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Body {
    Lattice(LatticeBody),
    Cn(CnBody),
    Factor(FactorBody),
    Fn(FnBody),
    Check(CheckBody),
    Reconstruct(ReconstructBody),
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: Input,
    #[serde(flatten)]
    pub body: Body,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    /// Validation failures; non-empty means exit status 1.
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, input: Input, body: Body) -> Self {
        Report {
            schema: SCHEMA,
            command,
            input,
            body,
            oracle: None,
            failures: Vec::new(),
        }
    }

    pub fn with_oracle(mut self, summary: OracleSummary) -> Self {
        if !summary.agrees {
            self.failures.push(format!(
                "oracle disagrees with the fast path on {} entries",
                summary.mismatches.len()
            ));
        }
        self.oracle = Some(summary);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// `{b1/0.5, b2/1}` with grades as decimals, zero entries kept.
pub fn graded_text(names: &[String], values: &[String]) -> String {
    let items: Vec<String> = names
        .iter()
        .zip(values)
        .map(|(n, v)| format!("{n}/{}", fraction_to_decimal(v)))
        .collect();
    format!("{{{}}}", items.join(", "))
}

/// `i/m` back to the decimal form used in listings.
pub fn fraction_to_decimal(v: &str) -> String {
    match v.split_once('/') {
        Some((i, m)) => match (i.parse(), m.parse()) {
            (Ok(i), Ok(m)) => crate::grades::decimal(i, m),
            _ => v.to_string(),
        },
        None => v.to_string(),
    }
}
