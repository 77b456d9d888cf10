//! Exact restricted root data of reductive symmetric pairs and a decision
//! engine for the real-spherical conditions (PP), (QP) and the bounded
//! multiplicity condition (BB).
pub mod catalog;
pub mod cli;
pub mod criteria;
pub mod families;
pub mod linalg;
pub mod pairdatum;
pub mod report;
pub mod rootsys;
