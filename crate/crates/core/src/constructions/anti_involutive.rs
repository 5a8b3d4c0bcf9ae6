use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rand::RngCore;

use crate::collection::{random_index, Collection};
use crate::cyclic::{CyclicOperad, TableCyclicOperad};
use crate::element::{label, Label};
use crate::error::{Error, Result};
use crate::profile::{Color, InvolutiveSet, Permutation, Profile};
use crate::report::{Law, Report};

/// A finite category `𝒞` with `ι : 𝒞ᵒᵖ → 𝒞` and `ιιᵒᵖ = id`.
///
/// The involution of the object set is `ι` on objects; on arrows it sends
/// `f : a → b` to `ιf : ιb → ιa`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinAntiInvolutiveCategory {
    objects: InvolutiveSet,
    homs: BTreeMap<(Color, Color), Vec<Label>>,
    identities: BTreeMap<Color, Label>,
    /// `(a, b, c, g, f) ↦ g ∘ f` for `f : a → b`, `g : b → c`.
    composition: HashMap<(Color, Color, Color, Label, Label), Label>,
    /// `(a, b, f) ↦ ιf`.
    involution: HashMap<(Color, Color, Label), Label>,
}

impl FinAntiInvolutiveCategory {
    pub fn new(objects: InvolutiveSet) -> Self {
        FinAntiInvolutiveCategory {
            objects,
            homs: BTreeMap::new(),
            identities: BTreeMap::new(),
            composition: HashMap::new(),
            involution: HashMap::new(),
        }
    }

    /// A group as a one-object category on `object`, with `ι` the inverse.
    pub fn group(object: Color, elements: &[String], mul: impl Fn(&str, &str) -> String, unit: &str) -> Result<Self> {
        let objects = InvolutiveSet::trivial([object.clone()]);
        let mut cat = FinAntiInvolutiveCategory::new(objects);
        let o = object;
        cat.set_hom(&o, &o, elements.iter().map(|g| label(g)).collect())?;
        cat.set_identity(&o, label(unit))?;
        for g in elements {
            for h in elements {
                cat.set_composite(&o, &o, &o, &label(g), &label(h), label(&mul(g, h)))?;
            }
            let inv = elements
                .iter()
                .find(|h| mul(g, h) == unit)
                .ok_or_else(|| Error::Invalid(format!("{g} has no inverse")))?;
            cat.set_involute(&o, &o, &label(g), label(inv))?;
        }
        Ok(cat)
    }

    /// `ℤ/n` on the labels `0, …, n−1`.
    pub fn cyclic_group(object: Color, n: usize) -> Result<Self> {
        let elems: Vec<String> = (0..n).map(|k| k.to_string()).collect();
        let parse = |s: &str| s.parse::<usize>().unwrap_or(0);
        Self::group(object, &elems, |a, b| ((parse(a) + parse(b)) % n).to_string(), "0")
    }

    /// `ℤ/2 × ℤ/2` on the labels `00, 01, 10, 11`.
    pub fn klein_four(object: Color) -> Result<Self> {
        let elems: Vec<String> = ["00", "01", "10", "11"].map(String::from).to_vec();
        let xor = |a: &str, b: &str| a.chars().zip(b.chars()).map(|(x, y)| if x == y { '0' } else { '1' }).collect();
        Self::group(object, &elems, xor, "00")
    }

    /// The permutations of `n` letters, labeled by one-line notation, with the
    /// product `σσ′ = σ ∘ σ′`.
    pub fn symmetric_group(object: Color, n: usize) -> Result<Self> {
        let name = |p: &Permutation| p.images().iter().join("");
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let by_name: HashMap<String, Permutation> = perms.iter().map(|p| (name(p), p.clone())).collect();
        let elems: Vec<String> = perms.iter().map(name).collect();
        Self::group(object, &elems, |a, b| name(&by_name[a].compose(&by_name[b])), &name(&Permutation::identity(n)))
    }

    /// Every group of order at most six, by name.
    pub fn small_groups(object: Color) -> Result<Vec<(String, Self)>> {
        let mut out = Vec::new();
        for n in 1..=6 {
            out.push((format!("Z{n}"), Self::cyclic_group(object.clone(), n)?));
        }
        out.push(("Z2xZ2".into(), Self::klein_four(object.clone())?));
        out.push(("S3".into(), Self::symmetric_group(object, 3)?));
        Ok(out)
    }

    pub fn objects(&self) -> &InvolutiveSet {
        &self.objects
    }

    fn check_object(&self, c: &Color) -> Result<()> {
        if self.objects.contains(c) {
            Ok(())
        } else {
            Err(Error::UnknownColor(c.clone()))
        }
    }

    pub fn set_hom(&mut self, a: &Color, b: &Color, arrows: Vec<Label>) -> Result<()> {
        self.check_object(a)?;
        self.check_object(b)?;
        self.homs.insert((a.clone(), b.clone()), arrows);
        Ok(())
    }

    pub fn hom(&self, a: &Color, b: &Color) -> &[Label] {
        self.homs.get(&(a.clone(), b.clone())).map_or(&[], Vec::as_slice)
    }

    fn require(&self, a: &Color, b: &Color, f: &Label) -> Result<()> {
        if self.hom(a, b).contains(f) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{f} is not an arrow {a} → {b}")))
        }
    }

    pub fn set_identity(&mut self, a: &Color, id: Label) -> Result<()> {
        self.require(a, a, &id)?;
        self.identities.insert(a.clone(), id);
        Ok(())
    }

    pub fn set_composite(&mut self, a: &Color, b: &Color, c: &Color, g: &Label, f: &Label, gf: Label) -> Result<()> {
        self.require(a, b, f)?;
        self.require(b, c, g)?;
        self.require(a, c, &gf)?;
        self.composition
            .insert((a.clone(), b.clone(), c.clone(), g.clone(), f.clone()), gf);
        Ok(())
    }

    pub fn set_involute(&mut self, a: &Color, b: &Color, f: &Label, image: Label) -> Result<()> {
        self.require(a, b, f)?;
        self.require(&self.objects.dagger(b)?, &self.objects.dagger(a)?, &image)?;
        self.involution.insert((a.clone(), b.clone(), f.clone()), image);
        Ok(())
    }

    pub fn identity(&self, a: &Color) -> Result<Label> {
        self.identities.get(a).cloned().ok_or_else(|| Error::MissingIdentity(a.clone()))
    }

    /// `g ∘ f` for `f : a → b`, `g : b → c`.
    pub fn compose(&self, a: &Color, b: &Color, c: &Color, g: &Label, f: &Label) -> Result<Label> {
        self.composition
            .get(&(a.clone(), b.clone(), c.clone(), g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("{g} ∘ {f} for {a} → {b} → {c}")))
    }

    /// `ιf : ιb → ιa` for `f : a → b`.
    pub fn involute(&self, a: &Color, b: &Color, f: &Label) -> Result<Label> {
        self.involution
            .get(&(a.clone(), b.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("ι{f} for {f} : {a} → {b}")))
    }

    /// Checks the category laws, `ιι = id`, `ι id = id` and
    /// `ι(g ∘ f) = ιf ∘ ιg`.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let objects: Vec<Color> = self.objects.colors().cloned().collect();
        let mut run = |law: Law, what: &dyn Fn() -> Result<bool>, describe: &dyn Fn() -> String| match what() {
            Ok(holds) => report.check(law, holds, describe),
            Err(e) => report.fail(Law::Closure, format!("{}: {e}", describe())),
        };
        for a in &objects {
            for b in &objects {
                for f in self.hom(a, b) {
                    run(
                        Law::Unit,
                        &|| Ok(self.compose(a, b, b, &self.identity(b)?, f)? == *f && self.compose(a, a, b, f, &self.identity(a)?)? == *f),
                        &|| format!("identities around {f} : {a} → {b}"),
                    );
                    run(
                        Law::Unit,
                        &|| {
                            let (ia, ib) = (self.objects.dagger(a)?, self.objects.dagger(b)?);
                            Ok(self.involute(&ib, &ia, &self.involute(a, b, f)?)? == *f)
                        },
                        &|| format!("ιι{f} = {f}"),
                    );
                    for c in &objects {
                        for g in self.hom(b, c) {
                            run(
                                Law::Associativity,
                                &|| {
                                    let (ia, ib, ic) = (self.objects.dagger(a)?, self.objects.dagger(b)?, self.objects.dagger(c)?);
                                    let left = self.involute(a, c, &self.compose(a, b, c, g, f)?)?;
                                    let right = self.compose(&ic, &ib, &ia, &self.involute(a, b, f)?, &self.involute(b, c, g)?)?;
                                    Ok(left == right)
                                },
                                &|| format!("ι({g} ∘ {f}) = ι{f} ∘ ι{g}"),
                            );
                            for d in &objects {
                                for h in self.hom(c, d) {
                                    run(
                                        Law::Associativity,
                                        &|| {
                                            let left = self.compose(a, c, d, h, &self.compose(a, b, c, g, f)?)?;
                                            let right = self.compose(a, b, d, &self.compose(b, c, d, h, g)?, f)?;
                                            Ok(left == right)
                                        },
                                        &|| format!("({h} ∘ {g}) ∘ {f}"),
                                    );
                                }
                            }
                        }
                    }
                }
            }
            run(
                Law::Unit,
                &|| {
                    let ia = self.objects.dagger(a)?;
                    Ok(self.involute(a, a, &self.identity(a)?)? == self.identity(&ia)?)
                },
                &|| format!("ι id_{a} = id_ι{a}"),
            );
        }
        report
    }
}

/// The cyclic operad of an anti-involutive category,
/// `P(c₀, c₁) = 𝒞(c₁; ιc₀)`, concentrated in norm one.
///
/// `τ*` is `ι`, `∘₁⁰` is composition and `∘₀⁰` is the rest forced by the
/// axioms: `x ∘₀⁰ y = τ*((τ⁻¹)*x ∘₁⁰ y) = ι(ιx ∘ y)`.
#[derive(Clone, Debug)]
pub struct AntiInvolutive<'a> {
    cat: &'a FinAntiInvolutiveCategory,
}

impl<'a> AntiInvolutive<'a> {
    pub fn new(cat: &'a FinAntiInvolutiveCategory) -> Self {
        AntiInvolutive { cat }
    }

    /// The hom-set `𝒞(c₁; ιc₀)` behind `P(c₀, c₁)`.
    fn hom(&self, p: &Profile) -> Option<(Color, Color)> {
        match p.colors() {
            [c0, c1] => Some((c1.clone(), self.cat.objects.dagger(c0).ok()?)),
            _ => None,
        }
    }

    fn entry(&self, p: &Profile) -> &[Label] {
        self.hom(p).map_or(&[], |(a, b)| self.cat.hom(&a, &b))
    }

    fn arrow(&self, p: &Profile) -> Result<(Color, Color)> {
        self.hom(p).ok_or_else(|| Error::EmptyEntry(p.clone()))
    }
}

impl Collection for AntiInvolutive<'_> {
    type Elem = Label;

    fn colors(&self) -> &InvolutiveSet {
        &self.cat.objects
    }

    fn max_norm(&self) -> Option<usize> {
        Some(1)
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        self.entry(p).len() as u128
    }

    fn elements(&self, p: &Profile) -> Result<Vec<Label>> {
        Ok(self.entry(p).to_vec())
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<Label> {
        let e = self.entry(p);
        (!e.is_empty()).then(|| e[random_index(rng, e.len())].clone())
    }

    fn contains(&self, p: &Profile, x: &Label) -> bool {
        self.entry(p).contains(x)
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<Label> {
        let x = label(text);
        if self.contains(p, &x) {
            Ok(x)
        } else {
            Err(Error::NotAnElement {
                profile: p.clone(),
                element: text.into(),
            })
        }
    }

    /// The swap sends `f : c₁ → ιc₀` to `ιf : c₀ → ιc₁`.
    fn act(&self, p: &Profile, sigma: &Permutation, x: &Label) -> Result<Label> {
        let (a, b) = self.arrow(p)?;
        if sigma.len() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: sigma.len(),
            });
        }
        if !self.contains(p, x) {
            return Err(Error::NotAnElement {
                profile: p.clone(),
                element: x.to_string(),
            });
        }
        if sigma.is_identity() {
            Ok(x.clone())
        } else {
            self.cat.involute(&a, &b, x)
        }
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        if bound < 1 {
            return Vec::new();
        }
        let colors: Vec<Color> = self.cat.objects.colors().cloned().collect();
        Profile::all_of_length(&colors, 2)
            .into_iter()
            .filter(|p| !self.entry(p).is_empty())
            .collect()
    }
}

impl CyclicOperad for AntiInvolutive<'_> {
    fn identity(&self, c: &Color) -> Result<Label> {
        self.cat.identity(c)
    }

    fn compose_i0(&self, cp: &Profile, x: &Label, i: usize, dp: &Profile, y: &Label) -> Result<Label> {
        // x : c₁ → ιc₀, y : d₁ → ιd₀
        let (c1, ic0) = self.arrow(cp)?;
        let (d1, id0) = self.arrow(dp)?;
        let cat = self.cat;
        match i {
            // ιd₀ = c₁
            1 => cat.compose(&d1, &c1, &ic0, x, y),
            // ιd₀ = c₀: ι(ιx ∘ y) with ιx : c₀ → ιc₁
            0 => {
                let c0 = cat.objects.dagger(&ic0)?;
                let ic1 = cat.objects.dagger(&c1)?;
                let ix = cat.involute(&c1, &ic0, x)?;
                let z = cat.compose(&d1, &id0, &ic1, &ix, y)?;
                debug_assert_eq!(id0, c0);
                cat.involute(&d1, &ic1, &z)
            }
            _ => Err(Error::IndexOutOfRange {
                index: i as i64,
                max: 1,
            }),
        }
    }
}

/// Tabulates the cyclic operad of `cat`.
pub fn anti_involutive_to_cyclic(cat: &FinAntiInvolutiveCategory) -> Result<TableCyclicOperad> {
    TableCyclicOperad::materialize(&AntiInvolutive::new(cat), 1, u128::MAX)
}
