//! Dual time/frequency grids, the symmetric Fourier pair, linear
//! convolution and the rectangle-window spectrum.

mod convolution;
mod delta;
mod grid;
mod signal;
mod sinc;
mod transform;

pub use convolution::{convolve, convolve_kernel};
pub use delta::{unit_delta, DeltaSpike};
pub(crate) use delta::shift_add;
pub use grid::DualGrid;
pub use signal::{relative_l2, Domain, SpectralSignal};
pub use sinc::{sinc, windowed_sinc_spectrum, WindowSpectrum};
pub use transform::{forward_ft, forward_ft_of, inverse_ft};
