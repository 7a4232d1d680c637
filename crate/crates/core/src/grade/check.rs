use super::triple::AdjointTriple;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Residuum {
    /// `↙`
    Left,
    /// `↖`
    Right,
}

/// One failed law, with the numerators that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripleFailure {
    Adjointness {
        x: u32,
        y: u32,
        z: u32,
    },
    /// `⊥1 & y = ⊥3` fails at `y`.
    LeftAnnihilation {
        y: u32,
    },
    /// `x & ⊥2 = ⊥3` fails at `x`.
    RightAnnihilation {
        x: u32,
    },
    /// `⊤3 ↙ y = ⊤1` (or `⊤3 ↖ x = ⊤2`) fails at `arg`.
    TopPreservation {
        residuum: Residuum,
        arg: u32,
    },
    /// `(z1 ∧ z2) ↙ y = (z1↙y) ∧ (z2↙y)` (or its `↖` twin) fails.
    MeetDistribution {
        residuum: Residuum,
        z1: u32,
        z2: u32,
        arg: u32,
    },
}

impl fmt::Display for TripleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleFailure::Adjointness { x, y, z } => {
                write!(f, "adjoint property fails at x={x}, y={y}, z={z}")
            }
            TripleFailure::LeftAnnihilation { y } => write!(f, "⊥ & {y} ≠ ⊥"),
            TripleFailure::RightAnnihilation { x } => write!(f, "{x} & ⊥ ≠ ⊥"),
            TripleFailure::TopPreservation { residuum, arg } => {
                write!(f, "⊤ {residuum:?}-residuum {arg} ≠ ⊤")
            }
            TripleFailure::MeetDistribution {
                residuum,
                z1,
                z2,
                arg,
            } => write!(
                f,
                "{residuum:?} residuum does not distribute over the meet of {z1} and {z2} at {arg}"
            ),
        }
    }
}

/// At most one witness per law, so the report stays readable.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TripleReport {
    pub failures: Vec<TripleFailure>,
    /// Number of `(x, y, z)` triples checked for adjointness.
    pub checked: u64,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive check of adjointness, the boundary laws and meet distribution
/// of both residua. On a chain, binary meets plus the empty meet (top
/// preservation) cover every finite meet.
pub fn check_triple_properties(t: &AdjointTriple) -> TripleReport {
    let (p1, p2, p3) = t.domains();
    let mut report = TripleReport::default();
    let mut adj = None;
    'outer: for z in 0..=p3.m() {
        for y in 0..=p2.m() {
            for x in 0..=p1.m() {
                report.checked += 1;
                let mid = t.conj_num(x, y) <= z;
                if (x <= t.res_left_num(z, y)) != mid || (y <= t.res_right_num(z, x)) != mid {
                    adj = Some(TripleFailure::Adjointness { x, y, z });
                    break 'outer;
                }
            }
        }
    }
    report.failures.extend(adj);

    report.failures.extend(
        (0..=p2.m())
            .find(|&y| t.conj_num(0, y) != 0)
            .map(|y| TripleFailure::LeftAnnihilation { y }),
    );
    report.failures.extend(
        (0..=p1.m())
            .find(|&x| t.conj_num(x, 0) != 0)
            .map(|x| TripleFailure::RightAnnihilation { x }),
    );
    report.failures.extend(
        (0..=p2.m())
            .find(|&y| t.res_left_num(p3.m(), y) != p1.m())
            .map(|arg| TripleFailure::TopPreservation {
                residuum: Residuum::Left,
                arg,
            }),
    );
    report.failures.extend(
        (0..=p1.m())
            .find(|&x| t.res_right_num(p3.m(), x) != p2.m())
            .map(|arg| TripleFailure::TopPreservation {
                residuum: Residuum::Right,
                arg,
            }),
    );

    let meet = |residuum: Residuum, args: u32, f: &dyn Fn(u32, u32) -> u32| {
        for z1 in 0..=p3.m() {
            for z2 in z1..=p3.m() {
                for arg in 0..=args {
                    if f(z1.min(z2), arg) != f(z1, arg).min(f(z2, arg)) {
                        return Some(TripleFailure::MeetDistribution {
                            residuum,
                            z1,
                            z2,
                            arg,
                        });
                    }
                }
            }
        }
        None
    };
    let left = meet(Residuum::Left, p2.m(), &|z, y| t.res_left_num(z, y));
    let right = meet(Residuum::Right, p1.m(), &|z, x| t.res_right_num(z, x));
    report.failures.extend(left);
    report.failures.extend(right);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::GradeChain;

    #[test]
    fn shipped_triples_pass() {
        for m in 1..=16 {
            let c = GradeChain::new(m).unwrap();
            assert!(check_triple_properties(&AdjointTriple::godel(c)).passed());
            assert!(check_triple_properties(&AdjointTriple::lukasiewicz(c)).passed());
        }
        for (a, b, c) in [(4, 8, 10), (4, 4, 4), (3, 5, 7)] {
            let t = AdjointTriple::discretized_product(a, b, c).unwrap();
            assert!(check_triple_properties(&t).passed(), "{}", t.name());
        }
    }

    #[test]
    fn corrupted_residuum_is_caught_with_witness() {
        let c = GradeChain::new(4).unwrap();
        let g = AdjointTriple::godel(c);
        let (conj, l, r) = g.tables();
        let mut l = l.to_vec();
        // 0.25 ↙ 0.75 should be 0.25
        l[5 + 3] = 2;
        let bad = AdjointTriple::from_tables(c, c, c, conj.to_vec(), l, r.to_vec()).unwrap();
        let report = check_triple_properties(&bad);
        assert!(!report.passed());
        assert_eq!(
            report.failures[0],
            TripleFailure::Adjointness { x: 2, y: 3, z: 1 }
        );
    }
}
