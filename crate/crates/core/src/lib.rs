//! Plane spanning trees in simple drawings of complete bipartite graphs.
//!
//! A *shooting star* rooted at a vertex `v` is a plane spanning tree of height
//! two that contains every edge at `v`. Every simple drawing of `K_{m,n}` has
//! one for every choice of `v`; this crate finds them:
//!
//! * [`search`] builds one for any simple drawing by inserting the vertices
//!   of the opposite class one at a time and repairing crossings with the
//!   newest star edge.
//! * [`monotone`] and [`wedge`] are direct constructions for x-monotone and
//!   straight-line drawings.
//! * [`oracle`] enumerates the answers by brute force on small inputs.
//!
//! All geometry is exact: coordinates are rationals and no predicate rounds.

pub mod corpus;
pub mod crossing;
pub mod drawing;
pub mod error;
pub mod format;
pub mod geom;
pub mod monotone;
pub mod oracle;
pub mod planar;
pub mod region;
pub mod render;
pub mod search;
pub mod star;
pub mod validate;
pub mod wedge;

pub use crossing::{compute_crossings, crossing_direction, Crossing, CrossingIndex, Direction};
pub use drawing::{restrict, Color, Drawing, Edge, EdgeId, Param, Subdrawing, Vertex, VertexRef};
pub use error::{Error, Result};
pub use geom::{Point, Rational};

pub use search::{find_shooting_star, SearchOptions};
pub use star::{certify, verify_plane, ShootingStar};
pub use validate::{validate_simple, ValidationReport};
