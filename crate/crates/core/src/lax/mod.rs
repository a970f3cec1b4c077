//! Lax matrices, refactorization, monodromy and spectral invariance.

mod family;
mod verify;

pub use family::{
    crystal_w, crystal_z, lax_adler, lax_crystal, lax_projector, lax_projector_matrix, AdlerLax,
    CrystalLax, CrystalSide, LaxError, LaxFamily, ProjectorLax,
};
pub use verify::{
    check_spectral_all, check_spectral_invariance, inverse_property_holds, matrices_agree,
    monodromy, refactorization_holds, spectra_agree, spectral_invariants, spectrum,
    verify_lax_from_map, verify_refactorization, LaxRepresentation,
};
