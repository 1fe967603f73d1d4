//! Checkable claims. Each check returns a [`Certificate`].

mod certificate;
pub mod collections;
pub mod fullness;
pub mod lemmas;

pub use certificate::{Certificate, Status};
pub use collections::{
    kp_collection, lefschetz_vanishing_triples, verify_gram, verify_kp_chi, verify_kp_count, verify_lefschetz_510,
    WithinBlock,
};
pub use fullness::{generation_closure, verify_510_steps};
pub use lemmas::{verify_igr_ec, verify_lemma, verify_prop_main, Lemma, LemmaBounds};
