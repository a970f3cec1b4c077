//! Parameter-dependent Yang-Baxter maps acting on labeled tuples.
//!
//! Slots are addressed 1-based in every public function (`R_12`, `T_1`, ...);
//! products of maps act right-to-left, so `T_1 = R_1n ⋯ R_13 R_12` applies
//! `R_12` first.

mod check;
mod map;
mod sample;
mod slot;
mod transfer;

pub use check::{
    check_braid_involutivity, check_exchange_symmetry, check_reversibility,
    check_transfer_commutativity, check_transfer_commutativity_all, check_transfer_product,
    check_yang_baxter, run_check, tuples_equivalent, CheckReport, LaxMode, Outcome, Property,
    RunLabel, SampleRun, Witness,
};
pub use map::{apply, apply_rij, braid, MapError, YangBaxterMap, YbError};
pub use sample::{sample, Domain, ParamRule, RationalRange, SampleError, SampleRng, SlotDomain};
pub use slot::{LabeledTuple, Slot, SlotKind, SlotValue};
pub use transfer::{transfer_map, transfer_product};
