//! Colored collections: an entry for every profile together with an action
//! of `Σₙ⁺` (or only of its cyclic subgroup), and their morphisms.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{Element, Label};
use crate::error::{Error, Result};
use crate::profile::{Color, InvolutiveSet, Permutation, Profile};
use crate::report::{CheckConfig, Law, Report};

/// Which permutations act on entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Symmetry {
    /// All of `Σₙ⁺`.
    #[default]
    Full,
    /// Only the powers of `τ_{n+1}`.
    Cyclic,
}

impl Symmetry {
    /// Every acting permutation of `[0, len)`.
    pub fn permutations(self, len: usize) -> Vec<Permutation> {
        match self {
            Symmetry::Full => Permutation::all(len).collect(),
            Symmetry::Cyclic => (0..len.max(1))
                .map(|k| Permutation::tau_power(len, k as i64))
                .take(len.max(1))
                .collect(),
        }
    }

    /// A generating set of the acting group on `[0, len)`.
    pub fn generators(self, len: usize) -> Vec<Permutation> {
        match self {
            Symmetry::Full => Permutation::generators(len),
            Symmetry::Cyclic => vec![Permutation::tau_power(len, 1)],
        }
    }

    pub fn admits(self, sigma: &Permutation) -> bool {
        match self {
            Symmetry::Full => true,
            Symmetry::Cyclic => sigma.tau_exponent().is_some(),
        }
    }
}

/// An assignment of a finite set to every profile, with a right action of
/// permutations: `σ* : P(c̲) → P(c̲σ)`.
///
/// Entries may be computed on demand; `support` lists the nonempty ones.
pub trait Collection {
    type Elem: Element;

    fn colors(&self) -> &InvolutiveSet;

    fn symmetry(&self) -> Symmetry {
        Symmetry::Full
    }

    /// Largest `‖c̲‖` with available entries, `None` when unbounded.
    fn max_norm(&self) -> Option<usize>;

    /// Number of elements, saturating at `u128::MAX`.
    fn entry_size(&self, p: &Profile) -> u128;

    fn elements(&self, p: &Profile) -> Result<Vec<Self::Elem>>;

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<Self::Elem>;

    fn contains(&self, p: &Profile, x: &Self::Elem) -> bool;

    /// Reads an element of `p` from its printed form.
    fn parse_element(&self, p: &Profile, text: &str) -> Result<Self::Elem>;

    fn act(&self, p: &Profile, sigma: &Permutation, x: &Self::Elem) -> Result<Self::Elem>;

    /// Nonempty entries of norm at most `bound`, in profile order.
    fn support(&self, bound: usize) -> Vec<Profile>;
}

impl<C: Collection + ?Sized> Collection for &C {
    type Elem = C::Elem;

    fn colors(&self) -> &InvolutiveSet {
        (**self).colors()
    }

    fn symmetry(&self) -> Symmetry {
        (**self).symmetry()
    }

    fn max_norm(&self) -> Option<usize> {
        (**self).max_norm()
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        (**self).entry_size(p)
    }

    fn elements(&self, p: &Profile) -> Result<Vec<Self::Elem>> {
        (**self).elements(p)
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<Self::Elem> {
        (**self).sample(p, rng)
    }

    fn contains(&self, p: &Profile, x: &Self::Elem) -> bool {
        (**self).contains(p, x)
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<Self::Elem> {
        (**self).parse_element(p, text)
    }

    fn act(&self, p: &Profile, sigma: &Permutation, x: &Self::Elem) -> Result<Self::Elem> {
        (**self).act(p, sigma, x)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        (**self).support(bound)
    }
}

/// Bound actually usable on `c`: the requested one clipped to what `c` has.
pub fn effective_bound<C: Collection + ?Sized>(c: &C, bound: usize) -> usize {
    c.max_norm().map_or(bound, |m| m.min(bound))
}

/// Checks that `p` is a profile in the colors of `c` whose norm is in range.
pub fn check_profile<C: Collection + ?Sized>(c: &C, p: &Profile) -> Result<()> {
    for color in p.colors() {
        if !c.colors().contains(color) {
            return Err(Error::UnknownColor(color.clone()));
        }
    }
    if let Some(max) = c.max_norm() {
        if p.norm() > max as isize {
            return Err(Error::BeyondBound {
                profile: p.clone(),
                bound: max,
            });
        }
    }
    Ok(())
}

fn profile_seed(seed: u64, p: &Profile) -> u64 {
    let mut h = DefaultHasher::new();
    p.to_string().hash(&mut h);
    seed ^ h.finish()
}

/// Per-profile witness elements: the whole entry when it is small, a
/// deterministic sample otherwise.
pub struct Witnesses<'a, C: Collection + ?Sized> {
    source: &'a C,
    cfg: CheckConfig,
    cache: HashMap<Profile, Vec<C::Elem>>,
}

impl<'a, C: Collection + ?Sized> Witnesses<'a, C> {
    pub fn new(source: &'a C, cfg: &CheckConfig) -> Self {
        Witnesses {
            source,
            cfg: cfg.clone(),
            cache: HashMap::new(),
        }
    }

    pub fn get(&mut self, p: &Profile) -> Result<&[C::Elem]> {
        if !self.cache.contains_key(p) {
            let elems = if self.source.entry_size(p) <= self.cfg.max_enumerate {
                self.source.elements(p)?
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(profile_seed(self.cfg.seed, p));
                let mut out = Vec::new();
                for _ in 0..self.cfg.samples {
                    if let Some(x) = self.source.sample(p, &mut rng) {
                        if !out.contains(&x) {
                            out.push(x);
                        }
                    }
                }
                out
            };
            self.cache.insert(p.clone(), elems);
        }
        Ok(&self.cache[p])
    }
}

/// Draws `count` elements of `p` with a seeded generator.
pub fn sample_elements<C: Collection + ?Sized>(
    c: &C,
    p: &Profile,
    count: usize,
    seed: u64,
) -> Vec<C::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(profile_seed(seed, p));
    (0..count).filter_map(|_| c.sample(p, &mut rng)).collect()
}

pub(crate) fn random_index(rng: &mut dyn RngCore, len: usize) -> usize {
    rng.gen_range(0..len)
}

/// A table-backed collection.
#[derive(Clone, Debug, PartialEq)]
pub struct FinCollection {
    colors: InvolutiveSet,
    symmetry: Symmetry,
    max_norm: usize,
    entries: BTreeMap<Profile, Vec<Label>>,
    index: HashMap<Profile, HashMap<Label, u32>>,
    actions: HashMap<Profile, HashMap<Permutation, Vec<u32>>>,
}

impl FinCollection {
    /// Entries without action tables. Empty element lists are dropped.
    pub fn new(
        colors: InvolutiveSet,
        symmetry: Symmetry,
        max_norm: usize,
        entries: impl IntoIterator<Item = (Profile, Vec<Label>)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut index = HashMap::new();
        for (p, elems) in entries {
            if elems.is_empty() {
                continue;
            }
            for c in p.colors() {
                if !colors.contains(c) {
                    return Err(Error::UnknownColor(c.clone()));
                }
            }
            if p.norm() > max_norm as isize {
                return Err(Error::BeyondBound {
                    profile: p,
                    bound: max_norm,
                });
            }
            let mut idx = HashMap::new();
            for (k, x) in elems.iter().enumerate() {
                if idx.insert(x.clone(), k as u32).is_some() {
                    return Err(Error::Invalid(format!("element `{x}` repeated in {p}")));
                }
            }
            if map.insert(p.clone(), elems).is_some() {
                return Err(Error::Invalid(format!("entry {p} listed twice")));
            }
            index.insert(p, idx);
        }
        Ok(FinCollection {
            colors,
            symmetry,
            max_norm,
            entries: map,
            index,
            actions: HashMap::new(),
        })
    }

    /// Copies the entries and every action table of `source` up to `bound`.
    pub fn materialize<C: Collection + ?Sized>(
        source: &C,
        bound: usize,
        max_entry: u128,
    ) -> Result<Self>
    where
        C::Elem: ToString,
    {
        let bound = effective_bound(source, bound);
        let support = source.support(bound);
        let mut entries = Vec::new();
        let mut elems_of = HashMap::new();
        for p in &support {
            let size = source.entry_size(p);
            if size > max_entry {
                return Err(Error::EntryTooLarge {
                    profile: p.clone(),
                    size: if size == u128::MAX { "too many".into() } else { size.to_string() },
                    limit: max_entry,
                });
            }
            let elems = source.elements(p)?;
            entries.push((p.clone(), elems.iter().map(|x| Label::from(x.to_string())).collect()));
            elems_of.insert(p.clone(), elems);
        }
        let mut out = FinCollection::new(source.colors().clone(), source.symmetry(), bound, entries)?;
        for p in &support {
            let elems = &elems_of[p];
            for sigma in source.symmetry().permutations(p.len()) {
                let target = p.act(&sigma)?;
                let mut table = Vec::with_capacity(elems.len());
                for x in elems {
                    let y = source.act(p, &sigma, x)?;
                    let label = Label::from(y.to_string());
                    let k = out.position(&target, &label).ok_or_else(|| Error::NotAnElement {
                        profile: target.clone(),
                        element: label.to_string(),
                    })?;
                    table.push(k);
                }
                out.actions.entry(p.clone()).or_default().insert(sigma, table);
            }
        }
        Ok(out)
    }

    pub fn set_action(&mut self, p: &Profile, sigma: Permutation, source: &Label, target: &Label) -> Result<()> {
        let k = self.position(p, source).ok_or_else(|| Error::NotAnElement {
            profile: p.clone(),
            element: source.to_string(),
        })?;
        let q = p.act(&sigma)?;
        let t = self.position(&q, target).ok_or_else(|| Error::NotAnElement {
            profile: q.clone(),
            element: target.to_string(),
        })?;
        let size = self.entries[p].len();
        let table = self
            .actions
            .entry(p.clone())
            .or_default()
            .entry(sigma)
            .or_insert_with(|| vec![u32::MAX; size]);
        table[k as usize] = t;
        Ok(())
    }

    pub fn position(&self, p: &Profile, x: &Label) -> Option<u32> {
        self.index.get(p)?.get(x).copied()
    }

    pub fn entries(&self) -> &BTreeMap<Profile, Vec<Label>> {
        &self.entries
    }

    pub fn entry(&self, p: &Profile) -> &[Label] {
        self.entries.get(p).map_or(&[], Vec::as_slice)
    }

    /// Action tables as `(profile, σ, source, target)` in canonical order.
    pub fn action_records(&self) -> Vec<(Profile, Permutation, Label, Label)> {
        let mut out = Vec::new();
        for (p, elems) in &self.entries {
            let Some(tables) = self.actions.get(p) else { continue };
            let mut perms: Vec<_> = tables.keys().collect();
            perms.sort();
            for sigma in perms {
                let target = p.act(sigma).expect("stored action has matching arity");
                for (k, &t) in tables[sigma].iter().enumerate() {
                    if t == u32::MAX {
                        continue;
                    }
                    out.push((p.clone(), sigma.clone(), elems[k].clone(), self.entry(&target)[t as usize].clone()));
                }
            }
        }
        out
    }

    pub fn max_norm_value(&self) -> usize {
        self.max_norm
    }

    pub fn set_max_norm(&mut self, bound: usize) {
        self.max_norm = bound;
    }
}

impl Collection for FinCollection {
    type Elem = Label;

    fn colors(&self) -> &InvolutiveSet {
        &self.colors
    }

    fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    fn max_norm(&self) -> Option<usize> {
        Some(self.max_norm)
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        self.entry(p).len() as u128
    }

    fn elements(&self, p: &Profile) -> Result<Vec<Label>> {
        Ok(self.entry(p).to_vec())
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<Label> {
        let elems = self.entry(p);
        (!elems.is_empty()).then(|| elems[random_index(rng, elems.len())].clone())
    }

    fn contains(&self, p: &Profile, x: &Label) -> bool {
        self.position(p, x).is_some()
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<Label> {
        let x = Label::from(text);
        if self.contains(p, &x) {
            Ok(x)
        } else {
            Err(Error::NotAnElement {
                profile: p.clone(),
                element: text.to_string(),
            })
        }
    }

    fn act(&self, p: &Profile, sigma: &Permutation, x: &Label) -> Result<Label> {
        let k = self.position(p, x).ok_or_else(|| Error::NotAnElement {
            profile: p.clone(),
            element: x.to_string(),
        })?;
        let target = p.act(sigma)?;
        let t = self
            .actions
            .get(p)
            .and_then(|m| m.get(sigma))
            .map(|table| table[k as usize])
            .filter(|&t| t != u32::MAX)
            .ok_or_else(|| Error::MissingTable(format!("action of {sigma} on `{x}` in {p}")))?;
        self.entry(&target)
            .get(t as usize)
            .cloned()
            .ok_or(Error::EmptyEntry(target))
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        self.entries
            .keys()
            .filter(|p| p.norm() <= bound as isize)
            .cloned()
            .collect()
    }
}

/// Checks orbit closure and functoriality of the action on every supported
/// profile within `cfg.bound`.
///
/// All pairs `(σ, σ′)` are tried up to `cfg.full_symmetry_arity`; above it,
/// `σ′` ranges over generators, which is enough once every `σ` is covered.
pub fn validate_collection<C: Collection + ?Sized>(c: &C, cfg: &CheckConfig) -> Report {
    validate_collection_as(c, c.symmetry(), cfg)
}

/// [`validate_collection`] for the action restricted to `sym`.
pub fn validate_collection_as<C: Collection + ?Sized>(c: &C, sym: Symmetry, cfg: &CheckConfig) -> Report {
    let mut report = Report::new();
    let bound = effective_bound(c, cfg.bound);
    let mut witnesses = Witnesses::new(c, cfg);
    for p in c.support(bound) {
        let perms = sym.permutations(p.len());
        let seconds = if p.norm() <= cfg.full_symmetry_arity as isize {
            perms.clone()
        } else {
            sym.generators(p.len())
        };
        for sigma in &perms {
            let target = p.act(sigma).expect("permutation of matching length");
            report.check(Law::OrbitClosure, c.entry_size(&target) > 0, || {
                format!("{p} is supported but {p}{sigma} = {target} is empty")
            });
        }
        let xs = match witnesses.get(&p) {
            Ok(xs) => xs.to_vec(),
            Err(e) => {
                report.fail(Law::Closure, format!("elements of {p}: {e}"));
                continue;
            }
        };
        let id = Permutation::identity(p.len());
        for x in &xs {
            match c.act(&p, &id, x) {
                Ok(y) => report.check(Law::ActionIdentity, &y == x, || {
                    format!("id* {x} = {y} in {p}")
                }),
                Err(e) => report.fail(Law::ActionIdentity, format!("id* {x} in {p}: {e}")),
            }
            for sigma in &perms {
                let q = p.act(sigma).expect("matching length");
                let once = match c.act(&p, sigma, x) {
                    Ok(y) => y,
                    Err(e) => {
                        report.fail(Law::ActionFunctoriality, format!("{sigma}* {x} in {p}: {e}"));
                        continue;
                    }
                };
                for tau in &seconds {
                    let lhs = c.act(&q, tau, &once);
                    let rhs = c.act(&p, &sigma.compose(tau), x);
                    match (lhs, rhs) {
                        (Ok(a), Ok(b)) => report.check(Law::ActionFunctoriality, a == b, || {
                            format!("{tau}*{sigma}* {x} = {a} but ({sigma}{tau})* {x} = {b} in {p}")
                        }),
                        (Err(e), _) | (_, Err(e)) => report.fail(
                            Law::ActionFunctoriality,
                            format!("{tau}*{sigma}* {x} in {p}: {e}"),
                        ),
                    }
                }
            }
        }
    }
    report
}

/// A morphism of collections (or of anything built on them): an involutive
/// map of colors and a map of elements over it.
pub trait Morphism<S: Collection + ?Sized, T: Collection + ?Sized> {
    fn map_color(&self, c: &Color) -> Result<Color>;

    /// Image of `x ∈ S(p)` in `T(f p)`.
    fn map_element(&self, p: &Profile, x: &S::Elem) -> Result<T::Elem>;

    fn map_profile(&self, p: &Profile) -> Result<Profile> {
        p.colors()
            .iter()
            .map(|c| self.map_color(c))
            .collect::<Result<Vec<_>>>()
            .map(Profile)
    }
}

impl<S, T, M> Morphism<S, T> for &M
where
    S: Collection + ?Sized,
    T: Collection + ?Sized,
    M: Morphism<S, T> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        (**self).map_color(c)
    }

    fn map_element(&self, p: &Profile, x: &S::Elem) -> Result<T::Elem> {
        (**self).map_element(p, x)
    }
}

/// The identity morphism.
pub struct IdentityMorphism;

impl<S: Collection + ?Sized> Morphism<S, S> for IdentityMorphism {
    fn map_color(&self, c: &Color) -> Result<Color> {
        Ok(c.clone())
    }

    fn map_element(&self, _p: &Profile, x: &S::Elem) -> Result<S::Elem> {
        Ok(x.clone())
    }
}

/// `second ∘ first`.
pub struct Then<F, G, M: ?Sized> {
    pub first: F,
    pub second: G,
    _mid: PhantomData<fn(&M)>,
}

impl<F, G, M: ?Sized> Then<F, G, M> {
    pub fn new(first: F, second: G) -> Self {
        Then {
            first,
            second,
            _mid: PhantomData,
        }
    }
}

impl<S, M, T, F, G> Morphism<S, T> for Then<F, G, M>
where
    S: Collection + ?Sized,
    M: Collection + ?Sized,
    T: Collection + ?Sized,
    F: Morphism<S, M>,
    G: Morphism<M, T>,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        self.second.map_color(&self.first.map_color(c)?)
    }

    fn map_element(&self, p: &Profile, x: &S::Elem) -> Result<T::Elem> {
        let mid = self.first.map_element(p, x)?;
        let q = Morphism::<S, M>::map_profile(&self.first, p)?;
        self.second.map_element(&q, &mid)
    }
}

/// Table-backed morphism between table-backed structures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableMorphism {
    pub color_map: BTreeMap<Color, Color>,
    pub components: BTreeMap<(Profile, Label), Label>,
}

impl<S, T> Morphism<S, T> for TableMorphism
where
    S: Collection<Elem = Label> + ?Sized,
    T: Collection<Elem = Label> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        self.color_map
            .get(c)
            .cloned()
            .ok_or_else(|| Error::UnknownColor(c.clone()))
    }

    fn map_element(&self, p: &Profile, x: &Label) -> Result<Label> {
        self.components
            .get(&(p.clone(), x.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("component at `{x}` in {p}")))
    }
}

/// Checks that the color map commutes with the involutions, that components
/// land in the right entries, and that every equivariance square commutes.
pub fn validate_collection_morphism<S, T, F>(f: &F, source: &S, target: &T, cfg: &CheckConfig) -> Report
where
    S: Collection + ?Sized,
    T: Collection + ?Sized,
    F: Morphism<S, T> + ?Sized,
{
    let mut report = Report::new();
    for c in source.colors().colors() {
        let ok = (|| -> Result<bool> {
            let lhs = f.map_color(&source.colors().dagger(c)?)?;
            let rhs = target.colors().dagger(&f.map_color(c)?)?;
            Ok(lhs == rhs)
        })();
        match ok {
            Ok(holds) => report.check(Law::MorphismColors, holds, || format!("f({c}†) ≠ f({c})†")),
            Err(e) => report.fail(Law::MorphismColors, format!("color {c}: {e}")),
        }
    }
    let bound = effective_bound(source, cfg.bound);
    let mut witnesses = Witnesses::new(source, cfg);
    let sym = source.symmetry();
    for p in source.support(bound) {
        let xs = match witnesses.get(&p) {
            Ok(xs) => xs.to_vec(),
            Err(e) => {
                report.fail(Law::Closure, format!("elements of {p}: {e}"));
                continue;
            }
        };
        let fp = match f.map_profile(&p) {
            Ok(fp) => fp,
            Err(e) => {
                report.fail(Law::MorphismColors, format!("{p}: {e}"));
                continue;
            }
        };
        let perms = if p.norm() <= cfg.full_symmetry_arity as isize {
            sym.permutations(p.len())
        } else {
            sym.generators(p.len())
        };
        for x in &xs {
            let fx = match f.map_element(&p, x) {
                Ok(fx) => fx,
                Err(e) => {
                    report.fail(Law::MorphismEquivariance, format!("f at {x} in {p}: {e}"));
                    continue;
                }
            };
            report.check(Law::MorphismEquivariance, target.contains(&fp, &fx), || {
                format!("f({x}) = {fx} is not in {fp}")
            });
            for sigma in &perms {
                let result = (|| -> Result<(T::Elem, T::Elem)> {
                    let q = p.act(sigma)?;
                    let lhs = f.map_element(&q, &source.act(&p, sigma, x)?)?;
                    let rhs = target.act(&fp, sigma, &fx)?;
                    Ok((lhs, rhs))
                })();
                match result {
                    Ok((a, b)) => report.check(Law::MorphismEquivariance, a == b, || {
                        format!("f({sigma}* {x}) = {a} but {sigma}* f({x}) = {b} in {p}")
                    }),
                    Err(e) => report.fail(Law::MorphismEquivariance, format!("{sigma} at {x} in {p}: {e}")),
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::label;

    fn c(name: &str) -> Color {
        Color::named(name)
    }

    /// One color with trivial involution; entry at (c,c) is {u, v} with the
    /// swap acting by exchanging them.
    fn swap_collection() -> FinCollection {
        let colors = InvolutiveSet::trivial([c("c")]);
        let p = Profile(vec![c("c"), c("c")]);
        let mut coll = FinCollection::new(colors, Symmetry::Full, 2, [(p.clone(), vec![label("u"), label("v")])]).unwrap();
        let swap = Permutation::new(vec![1, 0]).unwrap();
        let id = Permutation::identity(2);
        coll.set_action(&p, id.clone(), &label("u"), &label("u")).unwrap();
        coll.set_action(&p, id, &label("v"), &label("v")).unwrap();
        coll.set_action(&p, swap.clone(), &label("u"), &label("v")).unwrap();
        coll.set_action(&p, swap, &label("v"), &label("u")).unwrap();
        coll
    }

    #[test]
    fn consistent_collection_is_clean() {
        let report = validate_collection(&swap_collection(), &CheckConfig::default());
        assert!(report.is_clean(), "{report}");
        assert!(report.checked > 0);
    }

    #[test]
    fn perturbed_action_is_reported() {
        let mut coll = swap_collection();
        let p = Profile(vec![c("c"), c("c")]);
        let swap = Permutation::new(vec![1, 0]).unwrap();
        coll.set_action(&p, swap.clone(), &label("u"), &label("u")).unwrap();
        let report = validate_collection(&coll, &CheckConfig::default());
        // σ = swap: (swap)*(swap)* u = (swap)* u = u, but (id)* u = u holds;
        // with v: (swap)* v = u, then (swap)* u = u ≠ v.
        assert!(!report.is_clean());
        assert!(report
            .violations
            .iter()
            .all(|v| v.law == Law::ActionFunctoriality));
    }

    #[test]
    fn missing_rotation_breaks_orbit_closure() {
        let colors = InvolutiveSet::trivial([c("a"), c("b")]);
        let p = Profile(vec![c("a"), c("b")]);
        let mut coll = FinCollection::new(colors, Symmetry::Cyclic, 2, [(p.clone(), vec![label("x")])]).unwrap();
        coll.set_action(&p, Permutation::identity(2), &label("x"), &label("x")).unwrap();
        let report = validate_collection(&coll, &CheckConfig::default());
        assert!(report.count(Law::OrbitClosure) >= 1);
    }

    #[test]
    fn identity_and_composite_morphisms_are_clean() {
        let coll = swap_collection();
        let cfg = CheckConfig::default();
        let id: &dyn Morphism<FinCollection, FinCollection> = &IdentityMorphism;
        assert!(validate_collection_morphism(id, &coll, &coll, &cfg).is_clean());
        let twice = Then::<_, _, FinCollection>::new(IdentityMorphism, IdentityMorphism);
        assert!(validate_collection_morphism(&twice, &coll, &coll, &cfg).is_clean());
    }

    #[test]
    fn swapped_component_is_reported() {
        let coll = swap_collection();
        let p = Profile(vec![c("c"), c("c")]);
        let mut f = TableMorphism::default();
        f.color_map.insert(c("c"), c("c"));
        // u, v ↦ u is not equivariant: swap* u = v ↦ u but swap* f(u) = v.
        f.components.insert((p.clone(), label("u")), label("u"));
        f.components.insert((p.clone(), label("v")), label("u"));
        let report = validate_collection_morphism::<_, _, TableMorphism>(&f, &coll, &coll, &CheckConfig::default());
        assert!(report.count(Law::MorphismEquivariance) > 0);
    }
}
