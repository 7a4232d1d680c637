use super::context::{FuzzyContext, GradedAttributeSet, GradedObjectSet};
use super::frame::Operator;
use crate::error::{Error, Result};
use crate::order::Hasse;
use alloc::vec::Vec;

/// Default cap on the number of grid candidates a single enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// `(g, f)` with `g^↑N = f` and `f^↓N = g`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuzzyNecessityPair {
    pub(crate) g: GradedObjectSet,
    pub(crate) f: GradedAttributeSet,
}

impl FuzzyNecessityPair {
    pub fn new(ctx: &FuzzyContext, g: GradedObjectSet, f: GradedAttributeSet) -> Result<Self> {
        if ctx.up_n(&g)? != f || ctx.down_n(&f)? != g {
            return Err(Error::NotInFn);
        }
        Ok(FuzzyNecessityPair { g, f })
    }

    /// `(g, g^↑N)`, provided `g` is a fixpoint of `↓N∘↑N`.
    pub fn from_objects(ctx: &FuzzyContext, g: GradedObjectSet) -> Result<Self> {
        let f = ctx.up_n(&g)?;
        Self::new(ctx, g, f)
    }

    pub fn g(&self) -> &GradedObjectSet {
        &self.g
    }

    pub fn f(&self) -> &GradedAttributeSet {
        &self.f
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.g.leq(&other.g)
    }
}

/// `F_N` in canonical order with its Hasse diagram.
#[derive(Debug, Clone)]
pub struct FnLattice {
    pairs: Vec<FuzzyNecessityPair>,
    hasse: Hasse,
    candidates: u128,
}

impl FnLattice {
    pub fn pairs(&self) -> &[FuzzyNecessityPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn hasse(&self) -> &Hasse {
        &self.hasse
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.hasse.covers()
    }

    /// Grid candidates visited.
    pub fn candidates(&self) -> u128 {
        self.candidates
    }

    pub fn index_of_objects(&self, g: &GradedObjectSet) -> Option<usize> {
        self.pairs.binary_search_by(|p| p.g.cmp(g)).ok()
    }

    pub fn index_of(&self, pair: &FuzzyNecessityPair) -> Option<usize> {
        self.index_of_objects(&pair.g)
            .filter(|&i| self.pairs[i].f == pair.f)
    }

    pub fn contains(&self, pair: &FuzzyNecessityPair) -> bool {
        self.index_of(pair).is_some()
    }

    pub fn top(&self) -> Option<usize> {
        self.hasse.top()
    }

    pub fn bottom(&self) -> Option<usize> {
        self.hasse.bottom()
    }
}

pub(crate) fn require_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Visits every vector of `n` numerators in `0..=m` in lexicographic order.
pub(crate) fn for_each_grid_point<F: FnMut(&[u32])>(n: usize, m: u32, mut visit: F) {
    let mut point = alloc::vec![0u32; n];
    loop {
        visit(&point);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if point[i] < m {
                point[i] += 1;
                break;
            }
            point[i] = 0;
        }
    }
}

/// All fixpoints `g` of `↓N∘↑N` over `L2^B`, paired with `g^↑N`.
///
/// Scans the whole grid; fails with [`Error::BudgetExceeded`] instead of truncating.
/// Meet-closure of the result is verified before it is returned.
pub fn fn_enumerate(ctx: &FuzzyContext, budget: u128) -> Result<FnLattice> {
    ctx.check(Operator::UpN)?;
    ctx.check(Operator::DownN)?;
    let candidates = ctx.object_grid_size();
    require_budget(candidates, budget)?;

    let (l1, l2) = (ctx.frame().l1(), ctx.frame().l2());
    let mut pairs = Vec::new();
    for_each_grid_point(ctx.object_count(), l2.m(), |g| {
        let f = ctx.up_n_raw(g);
        if ctx.down_n_raw(&f) == g {
            pairs.push(FuzzyNecessityPair {
                g: ctx.wrap(l2, g.to_vec()),
                f: ctx.wrap(l1, f),
            });
        }
    });
    // lexicographic grid order is already canonical

    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let g = pairs[i].g.meet(&pairs[j].g);
            let found = pairs.binary_search_by(|p| p.g.cmp(&g));
            let ok = found.is_ok_and(|k| pairs[k].f == pairs[i].f.meet(&pairs[j].f));
            if !ok {
                return Err(Error::ContractViolation(alloc::format!(
                    "F_N is not meet-closed: pairs {i} and {j}"
                )));
            }
        }
    }

    let hasse = Hasse::from_linear_extension(pairs.len(), |i, j| pairs[i].leq(&pairs[j]));
    Ok(FnLattice {
        pairs,
        hasse,
        candidates,
    })
}

/// Componentwise infimum, re-verified to lie in `F_N`.
pub fn fn_meet(
    ctx: &FuzzyContext,
    p: &FuzzyNecessityPair,
    q: &FuzzyNecessityPair,
) -> Result<FuzzyNecessityPair> {
    ctx.own(&p.g)?;
    ctx.own(&q.g)?;
    FuzzyNecessityPair::new(ctx, p.g.meet(&q.g), p.f.meet(&q.f)).map_err(|e| match e {
        Error::NotInFn => Error::ContractViolation("meet of two F_N pairs left F_N".into()),
        e => e,
    })
}
