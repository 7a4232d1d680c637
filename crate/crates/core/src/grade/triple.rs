use super::chain::{Grade, GradeChain};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleFamily {
    Godel,
    Lukasiewicz,
    DiscretizedProduct,
    Custom,
}

/// `(&, ↙, ↖)` with `&: P1×P2→P3`, `↙: P3×P2→P1`, `↖: P3×P1→P2`, stored as
/// dense numerator tables. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointTriple {
    family: TripleFamily,
    p1: GradeChain,
    p2: GradeChain,
    p3: GradeChain,
    /// `conj[x * |P2| + y]`
    conj: Vec<u32>,
    /// `res_left[z * |P2| + y]`
    res_left: Vec<u32>,
    /// `res_right[z * |P1| + x]`
    res_right: Vec<u32>,
}

fn table<F: FnMut(u32, u32) -> u32>(rows: GradeChain, cols: GradeChain, mut f: F) -> Vec<u32> {
    let mut t = Vec::with_capacity(rows.len() * cols.len());
    for r in 0..=rows.m() {
        for c in 0..=cols.m() {
            t.push(f(r, c));
        }
    }
    t
}

impl AdjointTriple {
    /// Minimum and its two-case residuum on one chain.
    pub fn godel(chain: GradeChain) -> Self {
        let conj = table(chain, chain, |x, y| x.min(y));
        let res = table(chain, chain, |z, y| if y <= z { chain.m() } else { z });
        AdjointTriple {
            family: TripleFamily::Godel,
            p1: chain,
            p2: chain,
            p3: chain,
            conj,
            res_left: res.clone(),
            res_right: res,
        }
    }

    /// `max{0, x+y−1}` and `min{1, 1−y+z}` on one chain.
    pub fn lukasiewicz(chain: GradeChain) -> Self {
        let m = chain.m();
        let conj = table(chain, chain, |x, y| (x + y).saturating_sub(m));
        let res = table(chain, chain, |z, y| (m - y + z).min(m));
        AdjointTriple {
            family: TripleFamily::Lukasiewicz,
            p1: chain,
            p2: chain,
            p3: chain,
            conj,
            res_left: res.clone(),
            res_right: res,
        }
    }

    /// `x & y = ⌈m3·x·y⌉/m3` over `[0,1]_m1 × [0,1]_m2`, with the floor residua.
    pub fn discretized_product(m1: u32, m2: u32, m3: u32) -> Result<Self> {
        let (p1, p2, p3) = (
            GradeChain::new(m1)?,
            GradeChain::new(m2)?,
            GradeChain::new(m3)?,
        );
        let (m1, m2, m3) = (u64::from(m1), u64::from(m2), u64::from(m3));
        // x = i/m1, y = j/m2, z = k/m3
        let conj = table(p1, p2, |i, j| {
            (m3 * u64::from(i) * u64::from(j)).div_ceil(m1 * m2) as u32
        });
        let res_left = table(p3, p2, |k, j| {
            let (k, j) = (u64::from(k), u64::from(j));
            if j * m3 <= k * m2 {
                m1 as u32
            } else {
                (m1 * k * m2 / (m3 * j)) as u32
            }
        });
        let res_right = table(p3, p1, |k, i| {
            let (k, i) = (u64::from(k), u64::from(i));
            if i * m3 <= k * m1 {
                m2 as u32
            } else {
                (m2 * k * m1 / (m3 * i)) as u32
            }
        });
        Ok(AdjointTriple {
            family: TripleFamily::DiscretizedProduct,
            p1,
            p2,
            p3,
            conj,
            res_left,
            res_right,
        })
    }

    /// A triple from explicit tables; only shapes and ranges are validated.
    /// Use [`check_triple_properties`](super::check_triple_properties) for adjointness.
    pub fn from_tables(
        p1: GradeChain,
        p2: GradeChain,
        p3: GradeChain,
        conj: Vec<u32>,
        res_left: Vec<u32>,
        res_right: Vec<u32>,
    ) -> Result<Self> {
        let shapes = [
            ("conjunctor table", conj.len(), p1.len() * p2.len()),
            ("left residuum table", res_left.len(), p3.len() * p2.len()),
            ("right residuum table", res_right.len(), p3.len() * p1.len()),
        ];
        for (what, found, expected) in shapes {
            if found != expected {
                return Err(Error::DimensionMismatch {
                    what,
                    expected,
                    found,
                });
            }
        }
        for (t, codomain) in [(&conj, p3), (&res_left, p1), (&res_right, p2)] {
            if let Some(&v) = t.iter().find(|&&v| v > codomain.m()) {
                return Err(Error::GradeOutOfRange {
                    numerator: v,
                    m: codomain.m(),
                });
            }
        }
        Ok(AdjointTriple {
            family: TripleFamily::Custom,
            p1,
            p2,
            p3,
            conj,
            res_left,
            res_right,
        })
    }

    /// A triple whose residua are derived from `conj` by adjointness.
    pub fn from_conjunctor(
        p1: GradeChain,
        p2: GradeChain,
        p3: GradeChain,
        conj: Vec<u32>,
    ) -> Result<Self> {
        let (res_left, res_right) = residua_by_adjointness(p1, p2, p3, &conj)?;
        Self::from_tables(p1, p2, p3, conj, res_left, res_right)
    }

    pub fn family(&self) -> TripleFamily {
        self.family
    }

    pub fn domains(&self) -> (GradeChain, GradeChain, GradeChain) {
        (self.p1, self.p2, self.p3)
    }

    pub fn name(&self) -> alloc::string::String {
        match self.family {
            TripleFamily::Godel => format!("godel:{}", self.p1.m()),
            TripleFamily::Lukasiewicz => format!("lukasiewicz:{}", self.p1.m()),
            TripleFamily::DiscretizedProduct => {
                format!("dprod:{},{},{}", self.p1.m(), self.p2.m(), self.p3.m())
            }
            TripleFamily::Custom => {
                format!("custom:{},{},{}", self.p1.m(), self.p2.m(), self.p3.m())
            }
        }
    }

    /// `x & y` on numerators; `x ∈ P1`, `y ∈ P2`.
    #[inline]
    pub fn conj_num(&self, x: u32, y: u32) -> u32 {
        self.conj[x as usize * self.p2.len() + y as usize]
    }

    /// `z ↙ y` on numerators; `z ∈ P3`, `y ∈ P2`, result in `P1`.
    #[inline]
    pub fn res_left_num(&self, z: u32, y: u32) -> u32 {
        self.res_left[z as usize * self.p2.len() + y as usize]
    }

    /// `z ↖ x` on numerators; `z ∈ P3`, `x ∈ P1`, result in `P2`.
    #[inline]
    pub fn res_right_num(&self, z: u32, x: u32) -> u32 {
        self.res_right[z as usize * self.p1.len() + x as usize]
    }

    pub fn conj(&self, x: Grade, y: Grade) -> Result<Grade> {
        check(x, self.p1, "x")?;
        check(y, self.p2, "y")?;
        self.p3.grade(self.conj_num(x.numerator(), y.numerator()))
    }

    pub fn res_left(&self, z: Grade, y: Grade) -> Result<Grade> {
        check(z, self.p3, "z")?;
        check(y, self.p2, "y")?;
        self.p1
            .grade(self.res_left_num(z.numerator(), y.numerator()))
    }

    pub fn res_right(&self, z: Grade, x: Grade) -> Result<Grade> {
        check(z, self.p3, "z")?;
        check(x, self.p1, "x")?;
        self.p2
            .grade(self.res_right_num(z.numerator(), x.numerator()))
    }

    /// `P1 = P2` and `x & y = y & x` everywhere.
    pub fn is_commutative(&self) -> bool {
        self.p1 == self.p2
            && (0..=self.p1.m())
                .all(|x| (0..=x).all(|y| self.conj_num(x, y) == self.conj_num(y, x)))
    }

    /// `↙ = ↖` pointwise (requires `P1 = P2`).
    pub fn residua_coincide(&self) -> bool {
        self.p1 == self.p2 && self.res_left == self.res_right
    }

    #[cfg(test)]
    pub(crate) fn tables(&self) -> (&[u32], &[u32], &[u32]) {
        (&self.conj, &self.res_left, &self.res_right)
    }
}

fn check(g: Grade, chain: GradeChain, role: &str) -> Result<()> {
    if g.chain() != chain {
        return Err(Error::FrameMismatch(format!(
            "argument {role} = {g} is not on {chain}"
        )));
    }
    Ok(())
}

/// `z↙y = max{x | x&y ≤ z}` and `z↖x = max{y | x&y ≤ z}` by exhaustive search,
/// then verified against the adjoint property.
pub fn residua_by_adjointness(
    p1: GradeChain,
    p2: GradeChain,
    p3: GradeChain,
    conj: &[u32],
) -> Result<(Vec<u32>, Vec<u32>)> {
    let expected = p1.len() * p2.len();
    if conj.len() != expected {
        return Err(Error::DimensionMismatch {
            what: "conjunctor table",
            expected,
            found: conj.len(),
        });
    }
    let c = |x: u32, y: u32| conj[x as usize * p2.len() + y as usize];
    let mut res_left = Vec::with_capacity(p3.len() * p2.len());
    for z in 0..=p3.m() {
        for y in 0..=p2.m() {
            let best = (0..=p1.m()).rev().find(|&x| c(x, y) <= z);
            res_left.push(best.ok_or(Error::NoResiduum {
                side: "left",
                z,
                arg: y,
            })?);
        }
    }
    let mut res_right = Vec::with_capacity(p3.len() * p1.len());
    for z in 0..=p3.m() {
        for x in 0..=p1.m() {
            let best = (0..=p2.m()).rev().find(|&y| c(x, y) <= z);
            res_right.push(best.ok_or(Error::NoResiduum {
                side: "right",
                z,
                arg: x,
            })?);
        }
    }
    for z in 0..=p3.m() {
        for y in 0..=p2.m() {
            for x in 0..=p1.m() {
                let mid = c(x, y) <= z;
                let left = x <= res_left[z as usize * p2.len() + y as usize];
                let right = y <= res_right[z as usize * p1.len() + x as usize];
                if left != mid || right != mid {
                    return Err(Error::NotAdjoint { x, y, z });
                }
            }
        }
    }
    Ok((res_left, res_right))
}
