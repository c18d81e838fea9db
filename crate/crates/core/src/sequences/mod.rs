//! Bernoulli- and Euler-type number and polynomial families, Dirichlet
//! characters, and the [`SequenceSpec`] description used everywhere else.

pub mod character;
pub mod names;
pub mod numbers;
pub mod spec;

pub use character::{gen_bernoulli_number, gen_bernoulli_poly, DirichletCharacter};
pub use names::{catalog, normalize, parse_params, parse_spec};
pub use numbers::{
    alt_power_sum, bernoulli_number, bernoulli_poly, euler_number, euler_poly, power_sum, tangent_number,
    zigzag_number,
};
pub use spec::{bern_diff_sum, euler_diff_sum, Arg, Base, Multiplier, SequenceSpec, Sign};
