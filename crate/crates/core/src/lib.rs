pub mod exact;
pub mod puiseux;
pub mod subdivision;
pub mod tropcurve;
pub mod jinv;
pub mod cli;
