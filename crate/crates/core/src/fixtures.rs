//! Small bundled structures used by the examples, the CLI and the tests.

use crate::constructions::{
    anti_involutive_to_cyclic, cyclic_to_dioperad, cyclic_to_hry, pairing_cyclic, FinAntiInvolutiveCategory,
    FinDioperad, FinHryOperad, Polarization,
};
use crate::cyclic::TableCyclicOperad;
use crate::element::Label;
use crate::error::{Error, Result};
use crate::functors::{LeftAdjoint, RightAdjoint};
use crate::operad::{EndOperad, FinOperad};
use crate::profile::{Color, Profile};
use crate::termlang::{parse_term, Term, Valuation};

/// Names accepted by [`by_name`]-style lookups in the CLI.
pub const NAMES: &[&str] = &["pairing", "anti-involutive", "end-operad", "r-end", "l-end", "dioperad", "hry", "term"];

/// The color of the boolean endomorphism operad.
pub fn bool_color() -> Color {
    Color::named("b")
}

/// `End({0,1})` on one color.
pub fn end_operad() -> EndOperad {
    EndOperad::boolean(bool_color())
}

/// `End({0,1})` tabulated up to arity two.
pub fn end_table() -> Result<FinOperad> {
    FinOperad::materialize(&end_operad(), 2, u128::MAX)
}

/// The pairing `A × B → C` with `A = {a0, a1}`, `B = {b0, b1, b2}`,
/// `C = {z0, z1, z2}` and `f(aᵢ, bⱼ) = z_{i+j mod 3}`.
pub fn pairing() -> Result<TableCyclicOperad> {
    pairing_sized(2, 3, 3)
}

/// The pairing `f(aᵢ, bⱼ) = z_{i+j mod |C|}` on sets of the given sizes;
/// with `C` empty, `A` or `B` must be empty too.
pub fn pairing_sized(a: usize, b: usize, c: usize) -> Result<TableCyclicOperad> {
    let names = |prefix: &str, n: usize| (0..n).map(|k| format!("{prefix}{k}")).collect::<Vec<_>>();
    let (aa, bb, cc) = (names("a", a), names("b", b), names("z", c));
    let index = |s: &str| s[1..].parse::<usize>().unwrap_or(0);
    pairing_cyclic(&refs(&aa), &refs(&bb), &refs(&cc), |x, y| format!("z{}", (index(x) + index(y)) % c.max(1)))
}

/// `Σ₃` as a one-object anti-involutive category.
pub fn symmetric_group() -> Result<FinAntiInvolutiveCategory> {
    FinAntiInvolutiveCategory::symmetric_group(Color::named("c"), 3)
}

/// The cyclic operad of [`symmetric_group`].
pub fn anti_involutive() -> Result<TableCyclicOperad> {
    anti_involutive_to_cyclic(&symmetric_group()?)
}

/// `R(End({0,1}))` tabulated up to norm one.
pub fn r_end() -> Result<TableCyclicOperad> {
    TableCyclicOperad::materialize(&RightAdjoint::new(end_operad()), 1, u128::MAX)
}

/// `L(End({0,1}))` tabulated up to norm two, i.e. operations of arity at
/// most two.
pub fn l_end() -> Result<TableCyclicOperad> {
    TableCyclicOperad::materialize(&LeftAdjoint::new(end_operad()), 2, u128::MAX)
}

/// The dioperad of the pairing, with `c` as the input side.
pub fn dioperad() -> Result<FinDioperad> {
    let p = pairing()?;
    let pol = Polarization::of(crate::collection::Collection::colors(&p))?;
    cyclic_to_dioperad(&p, &pol, 1)
}

/// `R(End({0,1}))` up to norm one read as an operad with exchangeable
/// outputs.
pub fn hry() -> Result<FinHryOperad> {
    cyclic_to_hry(&r_end()?, 1)
}

/// A composition in [`r_end`] with its valuation.
pub fn term() -> Result<(Term, Valuation<Label>)> {
    let t = parse_term("(tau * (x o[1,0] y))").map_err(|e| Error::Invalid(e.to_string()))?;
    let c = Color::pair(bool_color(), bool_color());
    let p = Profile(vec![c.clone(), c]);
    let env = Valuation::new()
        .with("x", p.clone(), Label::from("<f01,f10>"))
        .with("y", p, Label::from("<f10,f01>"));
    Ok((t, env))
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}
