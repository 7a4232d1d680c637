//! The closure system `C_N` of a Boolean context and its independent blocks.

mod blocks;
pub(crate) mod cn;
mod dsu;

pub use blocks::{
    block_bounds, factorize, rstar, Block, BlockBounds, BlockMask, Bound, Factorization,
};
pub use cn::{
    cn_atoms, cn_enumerate, complement, CnElements, CnLattice, NecessityPair, MATERIALIZE_LIMIT,
};
