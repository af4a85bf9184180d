#![allow(dead_code)]

pub mod brute;
pub mod observe;
