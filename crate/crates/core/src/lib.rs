//! Exact-arithmetic toolkit for the fundamental polytope of a binary linear
//! code: LP decoding, vertex (LP pseudocodeword) enumeration, and mechanical
//! checks of the half-integral structure of cycle-code pseudocodewords.

pub mod channelsim;
pub mod code;
pub mod error;
pub mod exec;
pub mod limits;
pub mod lp;
pub mod polytope;
pub mod ratmath;
pub mod structure;
pub mod vertexenum;

pub use channelsim::{ChannelModel, TrialSummary};
pub use code::{Codeword, NodeId, ParityCheckMatrix, Subgraph, TannerGraph};
pub use error::{Error, Result};
pub use exec::Exec;
pub use limits::Limits;
pub use lp::{Certificate, CostVector, DecodeResult};
pub use polytope::{Constraint, ConstraintTag, FundamentalPolytope, PolytopePoint, Relation};
pub use ratmath::{RatMatrix, RatVector, Rational};
pub use structure::StructureReport;
pub use vertexenum::{ClassifiedVertex, VertexKind};
