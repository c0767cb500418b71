//! Verification campaigns over the t-perfection decision procedures, and
//! the `tperfect` command-line front end.

pub mod campaigns;
pub mod cli;
pub mod report;
pub mod sweep;

pub use campaigns::{Verifier, CAMPAIGNS};
pub use report::{CampaignReport, CheckRecord};
