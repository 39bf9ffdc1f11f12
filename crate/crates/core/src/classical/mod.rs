//! Hochschild and Chevalley-Eilenberg coboundaries, the Gerstenhaber-Schack
//! complex of a morphism, the S-complex, and the maps to the deformation
//! complexes of the morphism models.

mod complexes;
mod hochschild;

pub use complexes::{
    gs_components, gs_d, gs_from_components, gs_to_prop, gs_transport_signs, prop_to_gs, prop_to_s, s_components, s_delta, s_from_components, s_to_prop, s_transport_sign, GSCochain,
    SCochain,
};
pub use hochschild::{chevalley_eilenberg_b, hochschild_b, Bimodule, LieModule};
