use crate::error::{Error, Result};
use crate::grade::{AdjointTriple, GradeChain, TripleFamily};
use alloc::format;
use alloc::vec::Vec;

/// How the domains of each triple `(&: P1×P2→P3)` are laid out over `L1`, `L2`, `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameKind {
    /// `(P1, P2, P3) = (L1, L2, P)`: derivation operators `↑`, `↓`.
    ConceptForming,
    /// `(P1, P2, P3) = (P, L2, L1)`: `↑π`, `↓N`.
    PropertyOriented,
    /// `(P1, P2, P3) = (L1, P, L2)`: `↑N`, `↓π`.
    ObjectOriented,
}

impl FrameKind {
    fn arrangement(
        self,
        l1: GradeChain,
        l2: GradeChain,
        p: GradeChain,
    ) -> (GradeChain, GradeChain, GradeChain) {
        match self {
            FrameKind::ConceptForming => (l1, l2, p),
            FrameKind::PropertyOriented => (p, l2, l1),
            FrameKind::ObjectOriented => (l1, p, l2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    Up,
    Down,
    UpPi,
    DownN,
    UpN,
    DownPi,
}

impl Operator {
    pub fn kind(self) -> FrameKind {
        match self {
            Operator::Up | Operator::Down => FrameKind::ConceptForming,
            Operator::UpPi | Operator::DownN => FrameKind::PropertyOriented,
            Operator::UpN | Operator::DownPi => FrameKind::ObjectOriented,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Operator::Up => "↑",
            Operator::Down => "↓",
            Operator::UpPi => "↑π",
            Operator::DownN => "↓N",
            Operator::UpN => "↑N",
            Operator::DownPi => "↓π",
        }
    }
}

/// Chains `L1` (attribute grades), `L2` (object grades), `P` (relation grades)
/// and the adjoint triples selectable by `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    kind: FrameKind,
    l1: GradeChain,
    l2: GradeChain,
    p: GradeChain,
    triples: Vec<AdjointTriple>,
}

impl Frame {
    /// Every triple must have the domains `kind` prescribes.
    pub fn new(
        kind: FrameKind,
        l1: GradeChain,
        l2: GradeChain,
        p: GradeChain,
        triples: Vec<AdjointTriple>,
    ) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::FrameMismatch(
                "a frame needs at least one triple".into(),
            ));
        }
        let expected = kind.arrangement(l1, l2, p);
        for t in &triples {
            if t.domains() != expected {
                let (p1, p2, p3) = t.domains();
                return Err(Error::FrameMismatch(format!(
                    "triple {} has domains ({p1}, {p2}, {p3}) but a {kind:?} frame needs ({}, {}, {})",
                    t.name(),
                    expected.0,
                    expected.1,
                    expected.2
                )));
            }
        }
        Ok(Frame {
            kind,
            l1,
            l2,
            p,
            triples,
        })
    }

    /// `L1 = L2 = P`; all three arrangements coincide, so all six operators apply.
    pub fn uniform(triples: Vec<AdjointTriple>) -> Result<Self> {
        let chain = triples
            .first()
            .ok_or_else(|| Error::FrameMismatch("a frame needs at least one triple".into()))?
            .domains()
            .0;
        Frame::new(FrameKind::ConceptForming, chain, chain, chain, triples)
    }

    pub fn godel(m: u32) -> Result<Self> {
        Frame::uniform(alloc::vec![AdjointTriple::godel(GradeChain::new(m)?)])
    }

    pub fn lukasiewicz(m: u32) -> Result<Self> {
        Frame::uniform(alloc::vec![AdjointTriple::lukasiewicz(GradeChain::new(m)?)])
    }

    /// A single discretized product triple; uniform when `m1 = m2 = m3`,
    /// concept-forming otherwise.
    pub fn discretized_product(m1: u32, m2: u32, m3: u32) -> Result<Self> {
        let t = AdjointTriple::discretized_product(m1, m2, m3)?;
        let (p1, p2, p3) = t.domains();
        Frame::new(FrameKind::ConceptForming, p1, p2, p3, alloc::vec![t])
    }

    pub fn kind(&self) -> FrameKind {
        self.kind
    }

    pub fn l1(&self) -> GradeChain {
        self.l1
    }

    pub fn l2(&self) -> GradeChain {
        self.l2
    }

    pub fn p(&self) -> GradeChain {
        self.p
    }

    pub fn triples(&self) -> &[AdjointTriple] {
        &self.triples
    }

    pub fn is_uniform(&self) -> bool {
        self.l1 == self.l2 && self.l2 == self.p
    }

    /// Every triple is the Gödel triple.
    pub fn is_godel(&self) -> bool {
        self.triples
            .iter()
            .all(|t| t.family() == TripleFamily::Godel)
    }

    pub fn supports(&self, op: Operator) -> bool {
        self.is_uniform() || op.kind() == self.kind
    }

    pub(crate) fn require(&self, op: Operator) -> Result<()> {
        if self.supports(op) {
            Ok(())
        } else {
            Err(Error::OperatorUnavailable {
                operator: op.symbol(),
            })
        }
    }

    /// `godel:m`, `lukasiewicz:m` or `dprod:m1,m2,m3` for single-triple frames.
    pub fn descriptor(&self) -> alloc::string::String {
        match self.triples.as_slice() {
            [t] => t.name(),
            ts => format!("multi:{}", ts.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_frames_support_everything() {
        let f = Frame::discretized_product(4, 4, 4).unwrap();
        assert!(f.is_uniform());
        for op in [
            Operator::Up,
            Operator::Down,
            Operator::UpPi,
            Operator::DownN,
            Operator::UpN,
            Operator::DownPi,
        ] {
            assert!(f.supports(op));
        }
    }

    #[test]
    fn mixed_chains_restrict_operators() {
        let f = Frame::discretized_product(4, 8, 10).unwrap();
        assert!(f.supports(Operator::Up) && f.supports(Operator::Down));
        assert_eq!(
            f.require(Operator::UpN),
            Err(Error::OperatorUnavailable { operator: "↑N" })
        );
    }

    #[test]
    fn wrong_arrangement_is_rejected_at_construction() {
        let t = AdjointTriple::discretized_product(4, 8, 10).unwrap();
        let (c4, c8, c10) = (
            GradeChain::new(4).unwrap(),
            GradeChain::new(8).unwrap(),
            GradeChain::new(10).unwrap(),
        );
        // property-oriented needs (P, L2, L1): P = 4, L2 = 8, L1 = 10
        assert!(Frame::new(
            FrameKind::PropertyOriented,
            c10,
            c8,
            c4,
            alloc::vec![t.clone()]
        )
        .is_ok());
        assert!(matches!(
            Frame::new(FrameKind::ObjectOriented, c4, c8, c10, alloc::vec![t]),
            Err(Error::FrameMismatch(_))
        ));
    }
}
