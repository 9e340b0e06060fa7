//! Distance and beer-distance queries on interval and proper interval graphs.

pub mod beer_interval;
pub mod beer_proper;
pub mod beers;
pub mod bits;
pub mod enumeration;
pub mod error;
pub mod generate;
pub mod graphfile;
pub mod interval;
pub mod oracle;
pub mod proper;
pub mod range;
pub mod tree;

pub use beer_interval::IntervalBeerIndex;
pub use beer_proper::{BeerIndex, CompactIndex, CompactOptions};
pub use beers::BeerSet;
pub use bits::{BitVector, Mode};
pub use enumeration::{DyckPath, Series, TwinClasses};
pub use error::{Error, Result};
pub use graphfile::{GraphFile, Kind};
pub use interval::{Distance, IntervalGraph};
pub use proper::ProperIntervalGraph;
pub use range::{Bound, Grid2D, Grid3D, Interval, PredecessorSet, Rect2, Rect3};
pub use tree::{Order, OrdinalTree};
