pub mod cyclotomic;
pub mod linalg;
pub mod qcomb;
pub mod rewrite;
pub mod hopf;
pub mod targets;
pub mod paction;
pub mod mutation;
pub mod pcoaction;
pub mod corpus;
