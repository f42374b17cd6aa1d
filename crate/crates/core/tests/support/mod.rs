#![allow(dead_code)]

pub mod strategies;
pub mod vertex_oracle;
