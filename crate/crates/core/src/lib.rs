pub mod arith;
pub mod combinatorics;
pub mod cone;
pub mod dressian;
pub mod error;
pub mod euler;
pub mod gauge;
pub mod hyperfield;
pub mod io;
pub mod linalg;
pub mod lorentzian;
pub mod polynomial;
pub mod polytopes;
pub mod representations;
