pub mod cli;
pub mod engine;
pub mod formula;
pub mod kernel;
pub mod oracle;
pub mod transform;
