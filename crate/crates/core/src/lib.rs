//! Exact verification of the finite computations behind exceptional Siegel-Weil theorems:
//! Weyl double cosets, intertwining c-functions and their orders, convergence verdicts,
//! archimedean multiplier recipes and octonion/Jordan algebra identities.

pub mod exactnum;
pub mod rootsys;
pub mod eiscalc;
pub mod archmult;
pub mod compalg;
pub mod config;
pub mod report;
pub mod cases;
