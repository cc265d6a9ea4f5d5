//! Combinatorics of extensions of Kronecker quiver modules.
//!
//! Isomorphism classes of modules over the Kronecker path algebra are grouped
//! into decomposition symbols (preprojective indices, preinjective indices and
//! a Segre symbol for the regular part). The extension monoid product of two
//! symbol classes is again a finite union of symbol classes and can be
//! computed purely combinatorially; this crate implements that computation
//! together with a brute-force oracle over small prime fields that checks
//! every formula against explicit matrix representations.
//!
//! Top-level map:
//! - [`partition`], [`order`], [`lr`]: partitions, dominance and generalized
//!   majorization, horizontal strips, Littlewood-Richardson coefficients.
//! - [`symbol`]: Segre and decomposition symbols, dimension vectors, defect,
//!   Hom/Ext dimension tables, point counting, the symbol grammar.
//! - [`ext`]: the normal-ordering product engine and the particular products
//!   it is built from.
//! - [`preinj`]: chain products of preinjectives, embedding criteria and
//!   minimal cokernels.
//! - [`oracle`]: explicit representations over F_q, Hom-dimension ranks,
//!   classification back to symbols, extension and submodule enumeration,
//!   Hall numbers and the verification sweep.

pub mod error;
pub mod ext;
pub mod lr;
pub mod oracle;
pub mod order;
pub mod partition;
pub mod preinj;
pub mod symbol;

mod par;

pub use par::configure_threads;
pub use partition::{IntVec, Partition};
pub use symbol::{DecompSymbol, DimVector, SegreEntry, SegreSymbol, SymbolSet};
