pub mod axioms;
pub mod catalog;
pub mod coherence;
pub mod hdomain;
pub mod predicates;
pub mod replay;
pub mod sample;
pub mod search;
pub mod suite;
mod verdict;

pub use sample::{SampleSpec, Sampler};
pub use verdict::{Outcome, Reason, SampleReport, Verdict, Witness};
