pub mod certificate;
pub mod commands;
pub mod error;
pub mod fixtures;
pub mod instance;
pub mod sweep;
