pub mod chars;
pub mod cli;
pub mod divsum;
pub mod eisenstein;
pub mod error;
pub mod lfun;
pub mod parallel;
pub mod special;
pub mod spectral;
