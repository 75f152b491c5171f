#![no_std]
extern crate alloc;

pub mod arith;
pub mod cech;
pub mod groebner;
pub mod harness;
pub mod homolog;
pub mod poly;
pub mod sr;
