//! Colored symmetric operads with entries `O(c₁, …, cₙ; c)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::collection::random_index;
use crate::element::{Element, Label};
use crate::error::{Error, Result};
use crate::profile::{BiProfile, Color, Permutation};
use crate::report::{CheckConfig, Law, Report};

/// A colored operad. Inputs are counted from 1 in compositions; the
/// permutations acting on `O(c₁, …, cₙ; c)` are permutations of the `n`
/// inputs in zero-based one-line notation, with `σ* x ∈ O(c̲σ; c)`.
pub trait Operad {
    type Elem: Element;

    fn colors(&self) -> &BTreeSet<Color>;

    /// Largest arity with available entries, `None` when unbounded.
    fn max_arity(&self) -> Option<usize>;

    fn entry_size(&self, bp: &BiProfile) -> u128;

    fn elements(&self, bp: &BiProfile) -> Result<Vec<Self::Elem>>;

    fn sample(&self, bp: &BiProfile, rng: &mut dyn RngCore) -> Option<Self::Elem>;

    fn contains(&self, bp: &BiProfile, x: &Self::Elem) -> bool;

    /// Reads an element of `bp` from its printed form.
    fn parse_element(&self, bp: &BiProfile, text: &str) -> Result<Self::Elem>;

    fn act(&self, bp: &BiProfile, sigma: &Permutation, x: &Self::Elem) -> Result<Self::Elem>;

    fn identity(&self, c: &Color) -> Result<Self::Elem>;

    /// `x ∘ᵢ y` for `x ∈ O(c̲; c)`, `y ∈ O(d̲; cᵢ)`, with `i` counted from 1.
    fn compose(
        &self,
        bx: &BiProfile,
        x: &Self::Elem,
        i: usize,
        by: &BiProfile,
        y: &Self::Elem,
    ) -> Result<Self::Elem>;

    /// Nonempty entries of arity at most `bound`, in biprofile order.
    fn support(&self, bound: usize) -> Vec<BiProfile>;
}

impl<O: Operad + ?Sized> Operad for &O {
    type Elem = O::Elem;

    fn colors(&self) -> &BTreeSet<Color> {
        (**self).colors()
    }

    fn max_arity(&self) -> Option<usize> {
        (**self).max_arity()
    }

    fn entry_size(&self, bp: &BiProfile) -> u128 {
        (**self).entry_size(bp)
    }

    fn elements(&self, bp: &BiProfile) -> Result<Vec<Self::Elem>> {
        (**self).elements(bp)
    }

    fn sample(&self, bp: &BiProfile, rng: &mut dyn RngCore) -> Option<Self::Elem> {
        (**self).sample(bp, rng)
    }

    fn contains(&self, bp: &BiProfile, x: &Self::Elem) -> bool {
        (**self).contains(bp, x)
    }

    fn parse_element(&self, bp: &BiProfile, text: &str) -> Result<Self::Elem> {
        (**self).parse_element(bp, text)
    }

    fn act(&self, bp: &BiProfile, sigma: &Permutation, x: &Self::Elem) -> Result<Self::Elem> {
        (**self).act(bp, sigma, x)
    }

    fn identity(&self, c: &Color) -> Result<Self::Elem> {
        (**self).identity(c)
    }

    fn compose(&self, bx: &BiProfile, x: &Self::Elem, i: usize, by: &BiProfile, y: &Self::Elem) -> Result<Self::Elem> {
        (**self).compose(bx, x, i, by, y)
    }

    fn support(&self, bound: usize) -> Vec<BiProfile> {
        (**self).support(bound)
    }
}

pub fn operad_bound<O: Operad + ?Sized>(o: &O, bound: usize) -> usize {
    o.max_arity().map_or(bound, |m| m.min(bound))
}

/// Checks that grafting `by` into input `i` of `bx` is well typed.
pub fn check_graft(bx: &BiProfile, i: usize, by: &BiProfile) -> Result<BiProfile> {
    let ci = bx.input(i)?;
    if *ci != by.output {
        return Err(Error::ColorMismatch {
            left: ci.clone(),
            right: by.output.clone(),
        });
    }
    bx.splice(i, by)
}

/// All biprofiles of arity at most `bound` over `colors`.
pub fn all_biprofiles(colors: &BTreeSet<Color>, bound: usize) -> Vec<BiProfile> {
    let list: Vec<Color> = colors.iter().cloned().collect();
    let mut out = Vec::new();
    for n in 0..=bound {
        for output in &list {
            for inputs in crate::profile::Profile::all_of_length(&list, n) {
                out.push(BiProfile::new(inputs.0, output.clone()));
            }
        }
    }
    out.sort();
    out
}

/// The permutation `π` with `(σ*x) ∘ᵢ (ρ*y) = π*(x ∘_{σ(i)} y)`, all
/// permutations zero-based and `i` counted from 1.
pub fn block_permutation(sigma: &Permutation, rho: &Permutation, i: usize) -> Permutation {
    let n = sigma.len();
    let m = rho.len();
    let s = sigma.apply(i - 1) + 1;
    // Position (from 1) of input q of x in x ∘ₛ y.
    let pos = |q: usize| if q < s { q } else { q + m - 1 };
    let mut images = Vec::with_capacity(n + m - 1);
    for t in 1..=n + m - 1 {
        let p = if t < i {
            pos(sigma.apply(t - 1) + 1)
        } else if t < i + m {
            s + rho.apply(t - i)
        } else {
            pos(sigma.apply(t - m) + 1)
        };
        images.push(p - 1);
    }
    Permutation::new(images).expect("block permutation is a bijection")
}

fn seeded(cfg: &CheckConfig, bp: &BiProfile) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bp.to_string().bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100000001b3);
    }
    ChaCha8Rng::seed_from_u64(cfg.seed ^ h)
}

/// Enumerated or sampled witnesses of an operad entry.
pub fn operad_witnesses<O: Operad + ?Sized>(
    o: &O,
    bp: &BiProfile,
    cfg: &CheckConfig,
) -> Result<Vec<O::Elem>> {
    if o.entry_size(bp) <= cfg.max_enumerate {
        return o.elements(bp);
    }
    let mut rng = seeded(cfg, bp);
    let mut out = Vec::new();
    for _ in 0..cfg.samples {
        if let Some(x) = o.sample(bp, &mut rng) {
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    Ok(out)
}

struct OpWitnesses<'a, O: Operad + ?Sized> {
    o: &'a O,
    cfg: &'a CheckConfig,
    cache: HashMap<BiProfile, Vec<O::Elem>>,
}

impl<'a, O: Operad + ?Sized> OpWitnesses<'a, O> {
    fn get(&mut self, bp: &BiProfile) -> Result<Vec<O::Elem>> {
        if let Some(v) = self.cache.get(bp) {
            return Ok(v.clone());
        }
        let v = operad_witnesses(self.o, bp, self.cfg)?;
        self.cache.insert(bp.clone(), v.clone());
        Ok(v)
    }
}

fn record<T: PartialEq + fmt::Display>(
    report: &mut Report,
    law: Law,
    result: Result<(T, T)>,
    describe: impl FnOnce() -> String,
) {
    match result {
        Ok((a, b)) => {
            let holds = a == b;
            report.check(law, holds, || format!("{}: {a} ≠ {b}", describe()));
        }
        Err(e) => report.fail(Law::Closure, format!("{}: {e}", describe())),
    }
}

/// Checks unit, associativity (sequential and parallel) and equivariance
/// on every instance whose profiles have arity at most `cfg.bound`.
pub fn validate_operad<O: Operad + ?Sized>(o: &O, cfg: &CheckConfig) -> Report {
    let mut report = Report::new();
    let bound = operad_bound(o, cfg.bound);
    let support = o.support(bound);
    let mut w = OpWitnesses {
        o,
        cfg,
        cache: HashMap::new(),
    };
    for c in o.colors() {
        if let Err(e) = o.identity(c) {
            report.fail(Law::OperadUnit, format!("identity of {c}: {e}"));
        }
    }
    // Units.
    for bp in &support {
        let xs = match w.get(bp) {
            Ok(xs) => xs,
            Err(e) => {
                report.fail(Law::Closure, format!("elements of {bp}: {e}"));
                continue;
            }
        };
        let unary = BiProfile::new(vec![bp.output.clone()], bp.output.clone());
        for x in &xs {
            record(
                &mut report,
                Law::OperadUnit,
                (|| Ok((o.compose(&unary, &o.identity(&bp.output)?, 1, bp, x)?, x.clone())))(),
                || format!("id ∘₁ {x} in {bp}"),
            );
            for i in 1..=bp.arity() {
                let ci = bp.inputs[i - 1].clone();
                let unary = BiProfile::new(vec![ci.clone()], ci.clone());
                record(
                    &mut report,
                    Law::OperadUnit,
                    (|| Ok((o.compose(bp, x, i, &unary, &o.identity(&ci)?)?, x.clone())))(),
                    || format!("{x} ∘{i} id in {bp}"),
                );
            }
        }
    }
    // Associativity.
    for bx in &support {
        for i in 1..=bx.arity() {
            for by in support.iter().filter(|b| b.output == bx.inputs[i - 1]) {
                let bxy = bx.splice(i, by).expect("typed graft");
                if bxy.arity() > bound {
                    continue;
                }
                // Sequential: z into input j of y.
                for j in 1..=by.arity() {
                    for bz in support.iter().filter(|b| b.output == by.inputs[j - 1]) {
                        let byz = by.splice(j, bz).expect("typed graft");
                        let total = bxy.splice(i - 1 + j, bz).expect("typed graft");
                        if byz.arity() > bound || total.arity() > bound {
                            continue;
                        }
                        let (xs, ys, zs) = match (w.get(bx), w.get(by), w.get(bz)) {
                            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                            _ => continue,
                        };
                        for x in &xs {
                            for y in &ys {
                                for z in &zs {
                                    let result = (|| {
                                        let l = o.compose(&bxy, &o.compose(bx, x, i, by, y)?, i - 1 + j, bz, z)?;
                                        let r = o.compose(bx, x, i, &byz, &o.compose(by, y, j, bz, z)?)?;
                                        Ok((l, r))
                                    })();
                                    record(&mut report, Law::OperadAssociativity, result, || {
                                        format!("({x} ∘{i} {y}) ∘{} {z} vs {x} ∘{i} ({y} ∘{j} {z})", i - 1 + j)
                                    });
                                }
                            }
                        }
                    }
                }
                // Parallel: z into input k > i of x.
                for k in i + 1..=bx.arity() {
                    for bz in support.iter().filter(|b| b.output == bx.inputs[k - 1]) {
                        let bxz = bx.splice(k, bz).expect("typed graft");
                        let total = bxy.splice(k - 1 + by.arity(), bz).expect("typed graft");
                        if bxz.arity() > bound || total.arity() > bound {
                            continue;
                        }
                        let (xs, ys, zs) = match (w.get(bx), w.get(by), w.get(bz)) {
                            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                            _ => continue,
                        };
                        let m = by.arity();
                        for x in &xs {
                            for y in &ys {
                                for z in &zs {
                                    let result = (|| {
                                        let l = o.compose(&bxy, &o.compose(bx, x, i, by, y)?, k - 1 + m, bz, z)?;
                                        let r = o.compose(&bxz, &o.compose(bx, x, k, bz, z)?, i, by, y)?;
                                        Ok((l, r))
                                    })();
                                    record(&mut report, Law::OperadAssociativity, result, || {
                                        format!("({x} ∘{i} {y}) ∘{} {z} vs ({x} ∘{k} {z}) ∘{i} {y}", k - 1 + m)
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // Equivariance, with σ and ρ over generators above the full-symmetry arity.
    let perms = |n: usize| -> Vec<Permutation> {
        if n <= cfg.full_symmetry_arity {
            Permutation::all(n).collect()
        } else {
            let mut g = Permutation::generators(n);
            g.push(Permutation::identity(n));
            g
        }
    };
    for bx in &support {
        for by in &support {
            if bx.arity() == 0 || bx.arity() + by.arity() - 1 > bound {
                continue;
            }
            let (xs, ys) = match (w.get(bx), w.get(by)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => continue,
            };
            for sigma in perms(bx.arity()) {
                for rho in perms(by.arity()) {
                    let sx = bx.act(&sigma).expect("arity");
                    for i in 1..=bx.arity() {
                        if sx.inputs[i - 1] != by.output {
                            continue;
                        }
                        let s = sigma.apply(i - 1) + 1;
                        let pi = block_permutation(&sigma, &rho, i);
                        let ry = by.act(&rho).expect("arity");
                        let plain = bx.splice(s, by).expect("typed");
                        for x in &xs {
                            for y in &ys {
                                let result = (|| {
                                    let l = o.compose(&sx, &o.act(bx, &sigma, x)?, i, &ry, &o.act(by, &rho, y)?)?;
                                    let r = o.act(&plain, &pi, &o.compose(bx, x, s, by, y)?)?;
                                    Ok((l, r))
                                })();
                                record(&mut report, Law::OperadEquivariance, result, || {
                                    format!("({sigma}* {x}) ∘{i} ({rho}* {y})")
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    // Functoriality of the action.
    for bp in &support {
        let xs = w.get(bp).unwrap_or_default();
        let all = perms(bp.arity());
        for x in &xs {
            for s in &all {
                for t in &all {
                    let result = (|| {
                        let q = bp.act(s)?;
                        Ok((o.act(&q, t, &o.act(bp, s, x)?)?, o.act(bp, &s.compose(t), x)?))
                    })();
                    record(&mut report, Law::OperadEquivariance, result, || {
                        format!("{t}*{s}* {x} in {bp}")
                    });
                }
            }
        }
    }
    report
}

/// A morphism of operads.
pub trait OperadMorphism<S: Operad + ?Sized, T: Operad + ?Sized> {
    fn map_color(&self, c: &Color) -> Result<Color>;

    fn map_element(&self, bp: &BiProfile, x: &S::Elem) -> Result<T::Elem>;

    fn map_biprofile(&self, bp: &BiProfile) -> Result<BiProfile> {
        Ok(BiProfile::new(
            bp.inputs.iter().map(|c| self.map_color(c)).collect::<Result<_>>()?,
            self.map_color(&bp.output)?,
        ))
    }
}

impl<S, T, M> OperadMorphism<S, T> for &M
where
    S: Operad + ?Sized,
    T: Operad + ?Sized,
    M: OperadMorphism<S, T> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        (**self).map_color(c)
    }

    fn map_element(&self, bp: &BiProfile, x: &S::Elem) -> Result<T::Elem> {
        (**self).map_element(bp, x)
    }
}

/// Checks membership, equivariance, identities and compositions.
pub fn validate_operad_morphism<S, T, F>(f: &F, s: &S, t: &T, cfg: &CheckConfig) -> Report
where
    S: Operad + ?Sized,
    T: Operad + ?Sized,
    F: OperadMorphism<S, T> + ?Sized,
{
    let mut report = Report::new();
    let bound = operad_bound(s, cfg.bound);
    let support = s.support(bound);
    let mut w = OpWitnesses {
        o: s,
        cfg,
        cache: HashMap::new(),
    };
    for c in s.colors() {
        let result = (|| {
            let fc = f.map_color(c)?;
            let unary = BiProfile::new(vec![c.clone()], c.clone());
            Ok((f.map_element(&unary, &s.identity(c)?)?, t.identity(&fc)?))
        })();
        record(&mut report, Law::MorphismUnit, result, || format!("f(id_{c})"));
    }
    for bp in &support {
        let xs = w.get(bp).unwrap_or_default();
        let Ok(fbp) = f.map_biprofile(bp) else {
            report.fail(Law::MorphismColors, format!("colors of {bp}"));
            continue;
        };
        let perms: Vec<Permutation> = if bp.arity() <= cfg.full_symmetry_arity {
            Permutation::all(bp.arity()).collect()
        } else {
            Permutation::generators(bp.arity())
        };
        for x in &xs {
            match f.map_element(bp, x) {
                Ok(fx) => report.check(Law::MorphismEquivariance, t.contains(&fbp, &fx), || {
                    format!("f({x}) = {fx} not in {fbp}")
                }),
                Err(e) => report.fail(Law::MorphismEquivariance, format!("f({x}) in {bp}: {e}")),
            }
            for sigma in &perms {
                let result = (|| {
                    let q = bp.act(sigma)?;
                    let l = f.map_element(&q, &s.act(bp, sigma, x)?)?;
                    let r = t.act(&fbp, sigma, &f.map_element(bp, x)?)?;
                    Ok((l, r))
                })();
                record(&mut report, Law::MorphismEquivariance, result, || {
                    format!("f({sigma}* {x}) in {bp}")
                });
            }
        }
    }
    for bx in &support {
        for i in 1..=bx.arity() {
            for by in support.iter().filter(|b| b.output == bx.inputs[i - 1]) {
                let bxy = bx.splice(i, by).expect("typed");
                if bxy.arity() > bound {
                    continue;
                }
                let (xs, ys) = match (w.get(bx), w.get(by)) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => continue,
                };
                for x in &xs {
                    for y in &ys {
                        let result = (|| {
                            let l = f.map_element(&bxy, &s.compose(bx, x, i, by, y)?)?;
                            let r = t.compose(
                                &f.map_biprofile(bx)?,
                                &f.map_element(bx, x)?,
                                i,
                                &f.map_biprofile(by)?,
                                &f.map_element(by, y)?,
                            )?;
                            Ok((l, r))
                        })();
                        record(&mut report, Law::MorphismComposition, result, || {
                            format!("f({x} ∘{i} {y})")
                        });
                    }
                }
            }
        }
    }
    report
}

/// Table-backed operad morphism.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableOperadMorphism {
    pub color_map: BTreeMap<Color, Color>,
    pub components: BTreeMap<(BiProfile, Label), Label>,
}

impl<S, T> OperadMorphism<S, T> for TableOperadMorphism
where
    S: Operad<Elem = Label> + ?Sized,
    T: Operad<Elem = Label> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        self.color_map.get(c).cloned().ok_or_else(|| Error::UnknownColor(c.clone()))
    }

    fn map_element(&self, bp: &BiProfile, x: &Label) -> Result<Label> {
        self.components
            .get(&(bp.clone(), x.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("component at `{x}` in {bp}")))
    }
}

/// A table-backed operad up to a fixed arity.
#[derive(Clone, Debug, PartialEq)]
pub struct FinOperad {
    colors: BTreeSet<Color>,
    max_arity: usize,
    entries: BTreeMap<BiProfile, Vec<Label>>,
    index: HashMap<BiProfile, HashMap<Label, u32>>,
    actions: HashMap<(BiProfile, Permutation), Vec<u32>>,
    identities: BTreeMap<Color, Label>,
    compositions: HashMap<(BiProfile, usize, BiProfile), Vec<u32>>,
}

const MISSING: u32 = u32::MAX;

impl FinOperad {
    pub fn new(
        colors: BTreeSet<Color>,
        max_arity: usize,
        entries: impl IntoIterator<Item = (BiProfile, Vec<Label>)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut index = HashMap::new();
        for (bp, elems) in entries {
            if elems.is_empty() {
                continue;
            }
            for c in bp.inputs.iter().chain([&bp.output]) {
                if !colors.contains(c) {
                    return Err(Error::UnknownColor(c.clone()));
                }
            }
            if bp.arity() > max_arity {
                return Err(Error::Invalid(format!("{bp} exceeds arity bound {max_arity}")));
            }
            let mut idx = HashMap::new();
            for (k, x) in elems.iter().enumerate() {
                if idx.insert(x.clone(), k as u32).is_some() {
                    return Err(Error::Invalid(format!("element `{x}` repeated in {bp}")));
                }
            }
            if map.insert(bp.clone(), elems).is_some() {
                return Err(Error::Invalid(format!("entry {bp} listed twice")));
            }
            index.insert(bp, idx);
        }
        Ok(FinOperad {
            colors,
            max_arity,
            entries: map,
            index,
            actions: HashMap::new(),
            identities: BTreeMap::new(),
            compositions: HashMap::new(),
        })
    }

    /// Tabulates `source` up to arity `bound`.
    pub fn materialize<O: Operad + ?Sized>(source: &O, bound: usize, max_entry: u128) -> Result<Self> {
        let bound = operad_bound(source, bound);
        let support = source.support(bound);
        let mut elems_of = HashMap::new();
        let mut entries = Vec::new();
        for bp in &support {
            let size = source.entry_size(bp);
            if size > max_entry {
                return Err(Error::Invalid(format!(
                    "entry {bp} has more than {max_entry} elements"
                )));
            }
            let elems = source.elements(bp)?;
            entries.push((bp.clone(), elems.iter().map(|x| Label::from(x.to_string())).collect()));
            elems_of.insert(bp.clone(), elems);
        }
        let mut out = FinOperad::new(source.colors().clone(), bound, entries)?;
        let lab = |x: &O::Elem| Label::from(x.to_string());
        for c in source.colors() {
            if let Ok(id) = source.identity(c) {
                out.identities.insert(c.clone(), lab(&id));
            }
        }
        for bp in &support {
            for sigma in Permutation::all(bp.arity()) {
                let q = bp.act(&sigma)?;
                let mut table = Vec::new();
                for x in &elems_of[bp] {
                    let y = lab(&source.act(bp, &sigma, x)?);
                    table.push(out.position(&q, &y).ok_or_else(|| Error::NotAnElement {
                        profile: crate::profile::Profile::empty(),
                        element: format!("{y} in {q}"),
                    })?);
                }
                out.actions.insert((bp.clone(), sigma), table);
            }
        }
        for bx in &support {
            for i in 1..=bx.arity() {
                for by in support.iter().filter(|b| b.output == bx.inputs[i - 1]) {
                    let bxy = bx.splice(i, by)?;
                    if bxy.arity() > bound {
                        continue;
                    }
                    let mut table = Vec::new();
                    for x in &elems_of[bx] {
                        for y in &elems_of[by] {
                            let z = lab(&source.compose(bx, x, i, by, y)?);
                            table.push(out.position(&bxy, &z).ok_or_else(|| {
                                Error::Closure(format!("{z} is not in {bxy}"))
                            })?);
                        }
                    }
                    out.compositions.insert((bx.clone(), i, by.clone()), table);
                }
            }
        }
        Ok(out)
    }

    pub fn position(&self, bp: &BiProfile, x: &Label) -> Option<u32> {
        self.index.get(bp)?.get(x).copied()
    }

    pub fn entry(&self, bp: &BiProfile) -> &[Label] {
        self.entries.get(bp).map_or(&[], Vec::as_slice)
    }

    pub fn entries(&self) -> &BTreeMap<BiProfile, Vec<Label>> {
        &self.entries
    }

    pub fn identities(&self) -> &BTreeMap<Color, Label> {
        &self.identities
    }

    pub fn set_identity(&mut self, c: &Color, x: Label) -> Result<()> {
        let bp = BiProfile::new(vec![c.clone()], c.clone());
        self.position(&bp, &x).ok_or_else(|| Error::Invalid(format!("`{x}` is not in {bp}")))?;
        self.identities.insert(c.clone(), x);
        Ok(())
    }

    fn locate(&self, bp: &BiProfile, x: &Label) -> Result<u32> {
        self.position(bp, x)
            .ok_or_else(|| Error::Invalid(format!("`{x}` is not an element of {bp}")))
    }

    pub fn set_action(&mut self, bp: &BiProfile, sigma: Permutation, x: &Label, y: &Label) -> Result<()> {
        let k = self.locate(bp, x)?;
        let q = bp.act(&sigma)?;
        let t = self.locate(&q, y)?;
        let size = self.entry(bp).len();
        let table = self
            .actions
            .entry((bp.clone(), sigma))
            .or_insert_with(|| vec![MISSING; size]);
        table[k as usize] = t;
        Ok(())
    }

    pub fn set_composition(
        &mut self,
        bx: &BiProfile,
        x: &Label,
        i: usize,
        by: &BiProfile,
        y: &Label,
        z: &Label,
    ) -> Result<()> {
        let bxy = check_graft(bx, i, by)?;
        let a = self.locate(bx, x)? as usize;
        let b = self.locate(by, y)? as usize;
        let r = self.locate(&bxy, z)?;
        let width = self.entry(by).len();
        let size = self.entry(bx).len() * width;
        let table = self
            .compositions
            .entry((bx.clone(), i, by.clone()))
            .or_insert_with(|| vec![MISSING; size]);
        table[a * width + b] = r;
        Ok(())
    }

    /// Action records in canonical order.
    pub fn action_records(&self) -> Vec<(BiProfile, Permutation, Label, Label)> {
        let mut out = Vec::new();
        for ((bp, sigma), table) in &self.actions {
            let q = bp.act(sigma).expect("stored arity");
            for (k, &t) in table.iter().enumerate() {
                if t != MISSING {
                    out.push((bp.clone(), sigma.clone(), self.entry(bp)[k].clone(), self.entry(&q)[t as usize].clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// Composition records in canonical order.
    pub fn composition_records(&self) -> Vec<(BiProfile, Label, usize, BiProfile, Label, Label)> {
        let mut out = Vec::new();
        for ((bx, i, by), table) in &self.compositions {
            let bxy = bx.splice(*i, by).expect("stored graft");
            let width = self.entry(by).len();
            for (k, &t) in table.iter().enumerate() {
                if t != MISSING {
                    out.push((
                        bx.clone(),
                        self.entry(bx)[k / width].clone(),
                        *i,
                        by.clone(),
                        self.entry(by)[k % width].clone(),
                        self.entry(&bxy)[t as usize].clone(),
                    ));
                }
            }
        }
        out.sort();
        out
    }

    pub fn max_arity_value(&self) -> usize {
        self.max_arity
    }
}

impl Operad for FinOperad {
    type Elem = Label;

    fn colors(&self) -> &BTreeSet<Color> {
        &self.colors
    }

    fn max_arity(&self) -> Option<usize> {
        Some(self.max_arity)
    }

    fn entry_size(&self, bp: &BiProfile) -> u128 {
        self.entry(bp).len() as u128
    }

    fn elements(&self, bp: &BiProfile) -> Result<Vec<Label>> {
        Ok(self.entry(bp).to_vec())
    }

    fn sample(&self, bp: &BiProfile, rng: &mut dyn RngCore) -> Option<Label> {
        let e = self.entry(bp);
        (!e.is_empty()).then(|| e[random_index(rng, e.len())].clone())
    }

    fn contains(&self, bp: &BiProfile, x: &Label) -> bool {
        self.position(bp, x).is_some()
    }

    fn parse_element(&self, bp: &BiProfile, text: &str) -> Result<Label> {
        let x = Label::from(text);
        self.locate(bp, &x)?;
        Ok(x)
    }

    fn act(&self, bp: &BiProfile, sigma: &Permutation, x: &Label) -> Result<Label> {
        let k = self.locate(bp, x)?;
        let q = bp.act(sigma)?;
        let t = self
            .actions
            .get(&(bp.clone(), sigma.clone()))
            .map(|t| t[k as usize])
            .filter(|&t| t != MISSING)
            .ok_or_else(|| Error::MissingTable(format!("action of {sigma} on `{x}` in {bp}")))?;
        Ok(self.entry(&q)[t as usize].clone())
    }

    fn identity(&self, c: &Color) -> Result<Label> {
        self.identities.get(c).cloned().ok_or_else(|| Error::MissingIdentity(c.clone()))
    }

    fn compose(&self, bx: &BiProfile, x: &Label, i: usize, by: &BiProfile, y: &Label) -> Result<Label> {
        let bxy = check_graft(bx, i, by)?;
        let a = self.locate(bx, x)? as usize;
        let b = self.locate(by, y)? as usize;
        let width = self.entry(by).len();
        let t = self
            .compositions
            .get(&(bx.clone(), i, by.clone()))
            .map(|t| t[a * width + b])
            .filter(|&t| t != MISSING)
            .ok_or_else(|| Error::MissingTable(format!("`{x}` ∘{i} `{y}`")))?;
        Ok(self.entry(&bxy)[t as usize].clone())
    }

    fn support(&self, bound: usize) -> Vec<BiProfile> {
        self.entries.keys().filter(|bp| bp.arity() <= bound).cloned().collect()
    }
}

/// A function `∏ X_{cᵢ} → X_c`, stored as its value table with the first
/// argument most significant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EndFn {
    pub arity: usize,
    pub values: Vec<u8>,
}

impl fmt::Display for EndFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.iter().all(|&v| v < 10) {
            write!(f, "f{}", self.values.iter().join(""))
        } else {
            write!(f, "f{}", self.values.iter().join("."))
        }
    }
}

/// The endomorphism operad of a family of finite sets `X_c = {0, …, k_c − 1}`:
/// `End(X)(c₁, …, cₙ; c)` is the set of all functions `∏ X_{cᵢ} → X_c`.
///
/// Entries are computed on demand and have `k_c^{∏ k_{cᵢ}}` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndOperad {
    sizes: BTreeMap<Color, u8>,
    colors: BTreeSet<Color>,
}

impl EndOperad {
    pub fn new(sizes: impl IntoIterator<Item = (Color, u8)>) -> Result<Self> {
        let sizes: BTreeMap<Color, u8> = sizes.into_iter().collect();
        if sizes.values().any(|&k| k == 0) {
            return Err(Error::Invalid("carriers must be nonempty".into()));
        }
        let colors = sizes.keys().cloned().collect();
        Ok(EndOperad { sizes, colors })
    }

    /// `End({0, 1})` on a single color.
    pub fn boolean(color: Color) -> Self {
        EndOperad::new([(color, 2)]).expect("nonempty carrier")
    }

    fn size(&self, c: &Color) -> Result<usize> {
        self.sizes.get(c).map(|&k| k as usize).ok_or_else(|| Error::UnknownColor(c.clone()))
    }

    fn radices(&self, bp: &BiProfile) -> Result<Vec<usize>> {
        bp.inputs.iter().map(|c| self.size(c)).collect()
    }

    fn table_len(&self, bp: &BiProfile) -> Result<usize> {
        Ok(self.radices(bp)?.iter().product())
    }

    /// Decodes a table position into its argument tuple.
    fn decode(radices: &[usize], mut k: usize) -> Vec<usize> {
        let mut args = vec![0; radices.len()];
        for t in (0..radices.len()).rev() {
            args[t] = k % radices[t];
            k /= radices[t];
        }
        args
    }

    fn encode(radices: &[usize], args: &[usize]) -> usize {
        args.iter().zip(radices).fold(0, |acc, (&a, &r)| acc * r + a)
    }

    /// Evaluates `f` at `args`.
    pub fn eval(&self, bp: &BiProfile, f: &EndFn, args: &[usize]) -> Result<usize> {
        let radices = self.radices(bp)?;
        Ok(f.values[Self::encode(&radices, args)] as usize)
    }

    fn check(&self, bp: &BiProfile, f: &EndFn) -> Result<()> {
        if self.contains(bp, f) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("`{f}` is not an element of {bp}")))
        }
    }
}

impl Operad for EndOperad {
    type Elem = EndFn;

    fn colors(&self) -> &BTreeSet<Color> {
        &self.colors
    }

    fn max_arity(&self) -> Option<usize> {
        None
    }

    fn entry_size(&self, bp: &BiProfile) -> u128 {
        let (Ok(len), Ok(k)) = (self.table_len(bp), self.size(&bp.output)) else {
            return 0;
        };
        let Ok(len) = u32::try_from(len) else {
            return u128::MAX;
        };
        (k as u128).checked_pow(len).unwrap_or(u128::MAX)
    }

    fn elements(&self, bp: &BiProfile) -> Result<Vec<EndFn>> {
        let len = self.table_len(bp)?;
        let k = self.size(&bp.output)?;
        if self.entry_size(bp) > 1 << 20 {
            return Err(Error::SizeGuard(format!("entry {bp} is too large to enumerate")));
        }
        Ok((0..len)
            .map(|_| 0..k as u8)
            .multi_cartesian_product()
            .map(|values| EndFn { arity: bp.arity(), values })
            .collect())
    }

    fn sample(&self, bp: &BiProfile, rng: &mut dyn RngCore) -> Option<EndFn> {
        let len = self.table_len(bp).ok()?;
        let k = self.size(&bp.output).ok()?;
        Some(EndFn {
            arity: bp.arity(),
            values: (0..len).map(|_| rng.gen_range(0..k as u8)).collect(),
        })
    }

    fn contains(&self, bp: &BiProfile, f: &EndFn) -> bool {
        match (self.table_len(bp), self.size(&bp.output)) {
            (Ok(len), Ok(k)) => {
                f.arity == bp.arity() && f.values.len() == len && f.values.iter().all(|&v| (v as usize) < k)
            }
            _ => false,
        }
    }

    fn parse_element(&self, bp: &BiProfile, text: &str) -> Result<EndFn> {
        let body = text
            .strip_prefix('f')
            .ok_or_else(|| Error::Invalid(format!("malformed function `{text}`")))?;
        let values: Vec<u8> = if body.contains('.') {
            body.split('.').map(|d| d.parse().map_err(|_| Error::Invalid(format!("malformed function `{text}`")))).collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|ch| ch.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Invalid(format!("malformed function `{text}`"))))
                .collect::<Result<_>>()?
        };
        let f = EndFn { arity: bp.arity(), values };
        self.check(bp, &f)?;
        Ok(f)
    }

    fn act(&self, bp: &BiProfile, sigma: &Permutation, f: &EndFn) -> Result<EndFn> {
        self.check(bp, f)?;
        let q = bp.act(sigma)?;
        let radices = self.radices(&q)?;
        let old = self.radices(bp)?;
        let len = self.table_len(&q)?;
        // (σ* f)(a) = f(b) with b_{σ(t)} = a_t.
        let values = (0..len)
            .map(|k| {
                let a = Self::decode(&radices, k);
                let mut b = vec![0; a.len()];
                for (t, &at) in a.iter().enumerate() {
                    b[sigma.apply(t)] = at;
                }
                f.values[Self::encode(&old, &b)]
            })
            .collect();
        Ok(EndFn { arity: f.arity, values })
    }

    fn identity(&self, c: &Color) -> Result<EndFn> {
        let k = self.size(c)?;
        Ok(EndFn { arity: 1, values: (0..k as u8).collect() })
    }

    fn compose(&self, bx: &BiProfile, x: &EndFn, i: usize, by: &BiProfile, y: &EndFn) -> Result<EndFn> {
        let bxy = check_graft(bx, i, by)?;
        self.check(bx, x)?;
        self.check(by, y)?;
        let radices = self.radices(&bxy)?;
        let rx = self.radices(bx)?;
        let ry = self.radices(by)?;
        let m = by.arity();
        let len = self.table_len(&bxy)?;
        let values = (0..len)
            .map(|k| {
                let a = Self::decode(&radices, k);
                let inner = y.values[Self::encode(&ry, &a[i - 1..i - 1 + m])] as usize;
                let mut args = Vec::with_capacity(bx.arity());
                args.extend_from_slice(&a[..i - 1]);
                args.push(inner);
                args.extend_from_slice(&a[i - 1 + m..]);
                x.values[Self::encode(&rx, &args)]
            })
            .collect();
        Ok(EndFn { arity: bxy.arity(), values })
    }

    fn support(&self, bound: usize) -> Vec<BiProfile> {
        all_biprofiles(&self.colors, bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Color {
        Color::named("b")
    }

    fn bp(n: usize) -> BiProfile {
        BiProfile::new(vec![b(); n], b())
    }

    #[test]
    fn end_entry_sizes() {
        let end = EndOperad::boolean(b());
        for n in 0..4 {
            assert_eq!(end.entry_size(&bp(n)), 1u128 << (1 << n));
        }
        assert_eq!(end.elements(&bp(2)).unwrap().len(), 16);
    }

    #[test]
    fn end_composition_and_action() {
        let end = EndOperad::boolean(b());
        let and = end.parse_element(&bp(2), "f0001").unwrap();
        let not = end.parse_element(&bp(1), "f10").unwrap();
        // and(not a, b): table over (a, b) = 00, 01, 10, 11.
        assert_eq!(end.compose(&bp(2), &and, 1, &bp(1), &not).unwrap().to_string(), "f0100");
        let proj = end.parse_element(&bp(2), "f0011").unwrap();
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(end.act(&bp(2), &swap, &proj).unwrap().to_string(), "f0101");
    }

    #[test]
    fn end_is_an_operad() {
        let end = EndOperad::boolean(b());
        let report = validate_operad(&end, &CheckConfig::with_bound(2));
        assert!(report.is_clean(), "{report}");
    }

    #[test]
    fn materialized_end_agrees() {
        let end = EndOperad::boolean(b());
        let table = FinOperad::materialize(&end, 2, 1 << 10).unwrap();
        let report = validate_operad(&table, &CheckConfig::with_bound(2));
        assert!(report.is_clean(), "{report}");
        assert!(!table.composition_records().is_empty());
    }

    #[test]
    fn block_permutation_identity() {
        let p = block_permutation(&Permutation::identity(3), &Permutation::identity(2), 2);
        assert!(p.is_identity());
    }
}
