//! The forgetful functor from cyclic operads to operads, its left and right
//! adjoints, their units and counits, and checks of the adjunction laws.

mod forget;
mod left;
mod right;
mod units;

use crate::collection::{IdentityMorphism, Morphism, Then};
use crate::cyclic::{compare_morphisms, positivize, validate_cyclic_morphism, CyclicOperad};
use crate::operad::{validate_operad_morphism, FinOperad, Operad, OperadMorphism};
use crate::report::{CheckConfig, Law, Report};

pub use forget::{cyclic_profile, operadic_profile, Forget};
pub use left::{raised, raised_profile, LeftAdjoint};
pub use right::{component_profile, RightAdjoint};
pub use units::{
    compare_operad_morphisms, CounitFR, CounitLF, FMap, LMap, OperadIdentity, OperadThen, RMap, UnitFR, UnitLF,
};

/// `LO → LFLO → LO`, `L(η)` followed by `ε_{LO}`, is the identity.
///
/// `counit_shift` rotates the counit away from the true one (`0`).
pub fn triangle_left<O: Operad>(o: &O, counit_shift: i64, cfg: &CheckConfig) -> Report {
    let lo = LeftAdjoint::new(o);
    let first = LMap::<_, O, O>::new(UnitLF);
    let second = CounitLF::perturbed(&lo, counit_shift);
    let composite = Then::<_, _, LeftAdjoint<&Forget<&LeftAdjoint<&O>>>>::new(first, second);
    compare_morphisms(&composite, &IdentityMorphism, &lo, Law::Triangle, cfg)
}

/// `FP → FLFP → FP`, `η_{FP}` followed by `F(ε)`, is the identity.
pub fn triangle_forget_lf<P: CyclicOperad>(p: &P, counit_shift: i64, cfg: &CheckConfig) -> Report {
    let fp = Forget::new(p);
    let lfp = LeftAdjoint::new(&fp);
    let second = FMap::<_, LeftAdjoint<&Forget<&P>>, P>::new(CounitLF::perturbed(p, counit_shift), &lfp);
    let composite = OperadThen::<_, _, Forget<&LeftAdjoint<&Forget<&P>>>>::new(UnitLF, second);
    compare_operad_morphisms(&composite, &OperadIdentity, &fp, Law::Triangle, cfg)
}

/// `RO → RFRO → RO`, `η_{RO}` followed by `R(ε)`, is the identity.
pub fn triangle_right<O: Operad>(o: &O, cfg: &CheckConfig) -> Report {
    let ro = RightAdjoint::new(o);
    let first = UnitFR::new(&ro);
    let second = RMap::<_, Forget<&RightAdjoint<&O>>, O>::new(CounitFR);
    let composite = Then::<_, _, RightAdjoint<&Forget<&RightAdjoint<&O>>>>::new(first, second);
    compare_morphisms(&composite, &IdentityMorphism, &ro, Law::Triangle, cfg)
}

/// `FP → FRFP → FP`, `F(η)` followed by `ε_{FP}`, is the identity.
pub fn triangle_forget_fr<P: CyclicOperad>(p: &P, cfg: &CheckConfig) -> Report {
    let fp = Forget::new(p);
    let first = FMap::<_, P, RightAdjoint<&Forget<&P>>>::new(UnitFR::new(p), p);
    let composite = OperadThen::<_, _, Forget<&RightAdjoint<&Forget<&P>>>>::new(first, CounitFR);
    compare_operad_morphisms(&composite, &OperadIdentity, &fp, Law::Triangle, cfg)
}

/// The unit `O → FLO` is an operad morphism and the counit `LFP → P` a
/// cyclic one.
pub fn validate_units_lf<O: Operad, P: CyclicOperad>(o: &O, p: &P, cfg: &CheckConfig) -> Report {
    let lo = LeftAdjoint::new(o);
    let flo = Forget::new(&lo);
    let mut report = validate_operad_morphism(&UnitLF, o, &flo, cfg);
    let fp = Forget::new(p);
    let lfp = LeftAdjoint::new(&fp);
    report.merge(validate_cyclic_morphism(&CounitLF::new(p), &lfp, p, cfg));
    report
}

/// The unit `P → RFP` is a cyclic morphism and the counit `FRO → O` an
/// operad one.
pub fn validate_units_fr<O: Operad, P: CyclicOperad>(o: &O, p: &P, cfg: &CheckConfig) -> Report {
    let fp = Forget::new(p);
    let rfp = RightAdjoint::new(&fp);
    let mut report = validate_cyclic_morphism(&UnitFR::new(p), p, &rfp, cfg);
    let ro = RightAdjoint::new(o);
    let fro = Forget::new(&ro);
    report.merge(validate_operad_morphism(&CounitFR, &fro, o, cfg));
    report
}

/// Naturality of `η : O → FLO` along an operad morphism `f : S → T`:
/// `FL(f) ∘ η_S = η_T ∘ f`.
pub fn naturality_unit_lf<S, T, F>(f: &F, s: &S, _t: &T, cfg: &CheckConfig) -> Report
where
    S: Operad,
    T: Operad,
    F: OperadMorphism<S, T>,
{
    let ls = LeftAdjoint::new(s);
    let fl_f = FMap::<_, LeftAdjoint<&S>, LeftAdjoint<&T>>::new(LMap::<_, S, T>::new(f), &ls);
    let lhs = OperadThen::<_, _, Forget<&LeftAdjoint<&S>>>::new(UnitLF, fl_f);
    let rhs = OperadThen::<_, _, T>::new(f, UnitLF);
    compare_operad_morphisms::<S, Forget<LeftAdjoint<&T>>, _, _>(&lhs, &rhs, s, Law::Naturality, cfg)
}

/// Naturality of `ε : LFP → P` along a cyclic morphism `g : P → Q`:
/// `g ∘ ε_P = ε_Q ∘ LF(g)`.
pub fn naturality_counit_lf<P, Q, G>(g: &G, p: &P, q: &Q, cfg: &CheckConfig) -> Report
where
    P: CyclicOperad,
    Q: CyclicOperad,
    G: Morphism<P, Q>,
{
    let fp = Forget::new(p);
    let lfp = LeftAdjoint::new(&fp);
    let lhs = Then::<_, _, P>::new(CounitLF::new(p), g);
    let lf_g = LMap::<_, Forget<&P>, Forget<&Q>>::new(FMap::<_, P, Q>::new(g, p));
    let rhs = Then::<_, _, LeftAdjoint<Forget<&Q>>>::new(lf_g, CounitLF::new(q));
    compare_morphisms::<_, Q, _, _>(&lhs, &rhs, &lfp, Law::Naturality, cfg)
}

/// Naturality of `η : P → RFP` along a cyclic morphism `g : P → Q`:
/// `RF(g) ∘ η_P = η_Q ∘ g`.
pub fn naturality_unit_fr<P, Q, G>(g: &G, p: &P, q: &Q, cfg: &CheckConfig) -> Report
where
    P: CyclicOperad,
    Q: CyclicOperad,
    G: Morphism<P, Q>,
{
    let rf_g = RMap::<_, Forget<&P>, Forget<&Q>>::new(FMap::<_, P, Q>::new(g, p));
    let lhs = Then::<_, _, RightAdjoint<Forget<&P>>>::new(UnitFR::new(p), rf_g);
    let rhs = Then::<_, _, Q>::new(g, UnitFR::new(q));
    compare_morphisms::<_, RightAdjoint<Forget<&Q>>, _, _>(&lhs, &rhs, p, Law::Naturality, cfg)
}

/// Naturality of `ε : FRO → O` along an operad morphism `f : S → T`:
/// `f ∘ ε_S = ε_T ∘ FR(f)`.
pub fn naturality_counit_fr<S, T, F>(f: &F, s: &S, _t: &T, cfg: &CheckConfig) -> Report
where
    S: Operad,
    T: Operad,
    F: OperadMorphism<S, T>,
{
    let rs = RightAdjoint::new(s);
    let frs = Forget::new(&rs);
    let lhs = OperadThen::<_, _, S>::new(CounitFR, f);
    let fr_f = FMap::<_, RightAdjoint<&S>, RightAdjoint<&T>>::new(RMap::<_, S, T>::new(f), &rs);
    let rhs = OperadThen::<_, _, Forget<RightAdjoint<&T>>>::new(fr_f, CounitFR);
    compare_operad_morphisms::<_, T, _, _>(&lhs, &rhs, &frs, Law::Naturality, cfg)
}

/// Entries larger than this are not tabulated by [`forget_positive`].
const TABULATION_LIMIT: u128 = 1 << 20;

/// `FGRO = FRO` as tables up to `cfg.bound`: positivizing only touches the
/// empty profile, which `F` never sees.
pub fn forget_positive<O: Operad>(o: &O, cfg: &CheckConfig) -> Report {
    let ro = RightAdjoint::new(o);
    let mut report = Report::new();
    let plain = FinOperad::materialize(&Forget::new(&ro), cfg.bound, TABULATION_LIMIT);
    let pos = FinOperad::materialize(&Forget::new(positivize(&ro)), cfg.bound, TABULATION_LIMIT);
    match (plain, pos) {
        (Ok(a), Ok(b)) => report.check(Law::ForgetPositive, a == b, || "tables of FGRO and FRO differ".into()),
        (Err(e), _) | (_, Err(e)) => report.fail(Law::Closure, format!("tabulating FRO: {e}")),
    }
    report
}
