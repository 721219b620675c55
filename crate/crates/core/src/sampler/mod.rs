//! Monte Carlo realization of the matrix model `G = U (Y†Y)^{1/2}` with
//! `Y = X A^{-1/2}`.

pub mod coulomb;
pub mod ensemble;
pub mod export;
pub mod haar;
pub mod histogram;
pub mod quaternion;
pub mod rng;
pub mod sphere;
pub mod wishart;

pub use coulomb::{boltzmann_log_ratio, cayley_klein, coulomb_energy};
pub use ensemble::{pair_conjugates, sample_ensemble, sample_trial, SampleBatch};
pub use export::{write_batch, BatchMetadata};
pub use haar::haar_symplectic_unitary;
pub use histogram::{empirical_radial_density, RadialHistogram};
pub use quaternion::{ginibre_quaternion, QuaternionMatrix};
pub use rng::trial_rng;
pub use sphere::{from_sphere, to_sphere, SpherePoint};
pub use wishart::{hermitian_power, wishart_inv_sqrt};
