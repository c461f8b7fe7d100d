pub mod linalg;
pub mod angles;
pub mod code;
pub mod oracle;
pub mod analysis;
