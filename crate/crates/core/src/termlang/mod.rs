//! Terms in the generators `∘ᵢʲ`, `σ*` and `id_c`: parsing, printing and
//! evaluation in a cyclic operad.
//!
//! ```text
//! (tau^2 * (x o[1,3] y))    ([2 0 1] * x)    (id_c o[1,0] x)
//! ```

mod eval;
mod syntax;

pub use eval::{
    axiom_instances, eval_term, infer_profile, instance_terms, normalize_powers, Axiom, TermInstance, Valuation,
};
pub use syntax::{parse_term, print_term, ParseError, PermExpr, Term};
