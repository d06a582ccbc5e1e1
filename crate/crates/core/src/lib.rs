//! Decide whether an automorphism of a closed oriented surface, given by
//! its action on mod-2 homology (typically as a Dehn-twist word), extends
//! over the 4-sphere; enumerate its invariant spin structures as quadratic
//! forms; and synthesize an explicit twist word realizing an extendable
//! embedding when one exists.
//!
//! Everything is exact arithmetic over GF(2). The decision procedure:
//! an automorphism extends over the 4-sphere exactly when its homology
//! action fixes a quadratic form with Arf invariant 0.

pub mod construct;
pub mod embed;
pub mod error;
pub mod extend;
pub mod gf2;
pub mod homology;
pub mod quadform;
pub mod twist;

pub use error::{Error, Result};
pub use extend::{arf_shortcut, decide, invariant_forms, unique_form, ExtendabilityReport};
pub use gf2::{Gf2Mat, Gf2Vec};
pub use homology::{CurveClass, HomologySpace};
pub use quadform::QuadraticForm;
pub use twist::{parse_word, transvection, HomologyAction, TwistWord};
