//! Closed 4-manifolds assembled from twist sequences, and the sphere tests
//! applied to them.

pub mod ledger;
pub mod sequence;
pub mod templates;

pub use ledger::{
    characteristic_check, gilmer_viro_check, kikuchi_eliminate, omega_squared_target,
    FourManifoldLedger, KikuchiInapplicable, KikuchiResult, Linear, Parity, QuadPoly, Summand,
};
pub use sequence::{ledger_from_sequence, parse_sequence, RawStep, Step, TwistSequence};
pub use templates::{applicable_kinds, template_sequences, Template, TemplateKind};
