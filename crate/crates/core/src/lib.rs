pub mod aut;
pub mod cuts;
pub mod error;
pub mod export;
pub mod graph;
pub mod perm;
pub mod report;
pub mod sortdist;
pub mod toric;
pub mod verify;

pub use cuts::{enumerate_tn, tn_size, Cuts, PartitionClass};
pub use error::{Error, Result};
pub use graph::Graph;
pub use perm::{Perm, ZeroPerm};
pub use toric::{Convention, Dihedral};
