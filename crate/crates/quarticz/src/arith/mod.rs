//! Exact base arithmetic.

pub mod field;
pub mod gauss;
pub mod poly;
pub mod series;

pub use field::{chi, chi_m1, is_prime, kronecker_char, legendre, odd_primes_upto, FpElement};
pub use gauss::{gauss_primary_decompose, GaussInt};
pub use poly::{GaussPolynomial, IntPolynomial};
pub use series::{series_combine, Index, QuarterSeries, SeriesOp};
