//! Front-end support for the `rankcode` command.

pub mod catalog;
