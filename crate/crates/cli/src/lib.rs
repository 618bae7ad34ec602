pub mod corpus;
pub mod parse;
pub mod run;
