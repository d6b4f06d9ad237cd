//! Deformed-Gaussian error laws: densities, misfit objectives, influence
//! kernels and analytic gradients for the Gaussian, Rényi, Tsallis and
//! Kaniadakis families.

mod constants;
mod density;
mod gradient;
mod influence;
mod objective;

pub use constants::{kaniadakis_constants, renyi_normalizer, tsallis_normalizer, KaniadakisConstants};
pub use density::{gaussian_pdf, kaniadakis_pdf, pdf, renyi_pdf, tsallis_pdf};
pub use gradient::objective_gradient;
pub use influence::influence_kernel;
pub use objective::objective;
