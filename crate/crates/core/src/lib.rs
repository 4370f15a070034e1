pub mod group;
pub mod graph;
pub mod epg;
pub mod topology;
pub mod verifier;
