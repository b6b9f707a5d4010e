//! Exact rational and polynomial arithmetic, Sturm sequences, real root isolation,
//! and real algebraic numbers represented by isolating intervals.

pub mod poly;
pub mod positivity;
pub mod rational;
pub mod roots;
pub mod sturm;

pub use poly::Poly;
pub use positivity::{positive_on_open_interval, Positivity};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use roots::{
    default_width, isolate_real_roots, isolate_roots_above, pow2_inv, rational_roots,
    IsolatingInterval, RealAlgebraic, DEFAULT_WIDTH_BITS,
};
pub use sturm::{square_free_part, sturm_sign_changes, SturmChain};
