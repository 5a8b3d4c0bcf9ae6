//! Worked examples and translations: pairings, anti-involutive categories,
//! dioperads and operads with exchangeable outputs.

mod anti_involutive;
mod dioperad;
mod hry;
mod pairing;

pub use anti_involutive::{anti_involutive_to_cyclic, AntiInvolutive, FinAntiInvolutiveCategory};
pub use dioperad::{
    block, cyclic_to_dioperad, dioperad_to_cyclic, DiProfile, FinDioperad, FromDioperad, Polarization, SortingIso,
};
pub use hry::{cyclic_to_hry, hry_to_cyclic, FinHryOperad, FromHry, POINT};
pub use pairing::{pairing_colors, pairing_cyclic, Pairing, PAIRING_ID};
