//! Exact computations on edge rings of finite simple graphs.
//!
//! The edge ring `K[G]` is the subring of `K[t_1, ..., t_d]` generated by the
//! monomials `t_i t_j` for edges `{i, j}` of `G`. Its depth is bracketed from
//! two sides:
//!
//! * from below, by `r - pd(S / in(I_G))`, using a reduced Gröbner basis of the
//!   toric ideal `I_G` and the multigraded Betti numbers of its initial ideal;
//! * from above, by `r - (j + 1)` whenever the semigroup complex `Δ_s` has
//!   nonvanishing reduced homology in degree `j`.
//!
//! When the two bounds meet the depth is known exactly. The [`depth`] module
//! assembles reports; [`depth::verify`] reruns the full check for the graphs
//! `G_{k+6}` of [`graph::Graph::family`].

pub mod binom;
pub mod cli;
pub mod depth;
pub mod error;
pub mod graph;
pub mod homology;
pub mod monomial;
pub mod semigroup;
pub mod toric;

pub use binom::{BinomialBasis, ExponentVector, MonomialOrder, PureBinomial};
pub use error::{Error, Result};
pub use graph::{DegreeVector, Graph, IncidenceColumns};
pub use homology::{FieldChoice, SimplicialComplex};
pub use monomial::{BettiTable, MonomialIdeal};


