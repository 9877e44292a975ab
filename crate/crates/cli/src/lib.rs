//! Command-line front end for `romankit`: coefficient evaluation, the
//! reference tables, identity sweeps and the discrepancy ledger.

pub mod commands;
pub mod ledger;
pub mod output;
pub mod published;
pub mod tables;
