use std::collections::{BTreeMap, BTreeSet};

use rand::RngCore;

use crate::collection::{effective_bound, random_index, Collection, FinCollection, Symmetry};
use crate::cyclic::{CyclicOperad, TableCyclicOperad};
use crate::element::{label, Label};
use crate::error::{Error, Result};
use crate::operad::{check_graft, Operad};
use crate::profile::{BiProfile, Color, InvolutiveSet, Permutation, Profile};

/// Label of the point in the empty profile added by [`hry_to_cyclic`].
pub const POINT: &str = "*";

/// An operad with exchangeable outputs, in tables: `O(c₁, …, cₙ; c₀)` is
/// stored at the profile `(c₀, …, cₙ)`, on which all of `Σₙ⁺` acts;
/// compositions are the usual `∘ᵢ` for `i ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinHryOperad {
    collection: FinCollection,
    colors: BTreeSet<Color>,
    point: Label,
    identities: BTreeMap<Color, Label>,
    compositions: BTreeMap<(Profile, Label, usize, Profile, Label), Label>,
}

fn output_first(bp: &BiProfile) -> Profile {
    Profile(std::iter::once(bp.output.clone()).chain(bp.inputs.iter().cloned()).collect())
}

fn biprofile(p: &Profile) -> Option<BiProfile> {
    let (first, rest) = p.colors().split_first()?;
    Some(BiProfile::new(rest.to_vec(), first.clone()))
}

impl FinHryOperad {
    /// Entries over a trivially involutive color set; the empty profile is
    /// not allowed.
    pub fn new(collection: FinCollection) -> Result<Self> {
        if let Some(c) = collection.colors().colors().find(|c| collection.colors().dagger(c).ok().as_ref() != Some(*c)) {
            return Err(Error::NontrivialInvolution(c.clone()));
        }
        if collection.entry_size(&Profile::empty()) > 0 {
            return Err(Error::Invalid("an operad has no entry at the empty profile".into()));
        }
        let colors = collection.colors().underlying();
        Ok(FinHryOperad {
            collection,
            colors,
            point: label(POINT),
            identities: BTreeMap::new(),
            compositions: BTreeMap::new(),
        })
    }

    pub fn collection(&self) -> &FinCollection {
        &self.collection
    }

    pub fn collection_mut(&mut self) -> &mut FinCollection {
        &mut self.collection
    }

    /// The label used for the point of `P( )` when translating.
    pub fn point(&self) -> &Label {
        &self.point
    }

    pub fn set_point(&mut self, point: Label) {
        self.point = point;
    }

    pub fn identities(&self) -> &BTreeMap<Color, Label> {
        &self.identities
    }

    pub fn set_identity(&mut self, c: &Color, x: Label) -> Result<()> {
        let p = Profile(vec![c.clone(), c.clone()]);
        if !self.collection.contains(&p, &x) {
            return Err(Error::NotAnElement {
                profile: p,
                element: x.to_string(),
            });
        }
        self.identities.insert(c.clone(), x);
        Ok(())
    }

    /// Records `x ∘ᵢ y = z` for `x ∈ O(cp)`, `y ∈ O(dp)`, `i ≥ 1`.
    pub fn set_composition(&mut self, cp: &Profile, x: &Label, i: usize, dp: &Profile, y: &Label, z: Label) -> Result<()> {
        let q = self.graft(cp, i, dp)?;
        for (p, e) in [(cp, x), (dp, y), (&q, &z)] {
            if !self.collection.contains(p, e) {
                return Err(Error::NotAnElement {
                    profile: p.clone(),
                    element: e.to_string(),
                });
            }
        }
        self.compositions
            .insert((cp.clone(), x.clone(), i, dp.clone(), y.clone()), z);
        Ok(())
    }

    pub fn compositions(&self) -> &BTreeMap<(Profile, Label, usize, Profile, Label), Label> {
        &self.compositions
    }

    fn graft(&self, cp: &Profile, i: usize, dp: &Profile) -> Result<Profile> {
        if i == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                max: cp.norm() as i64,
            });
        }
        let (ci, d0) = (cp.get(i)?, dp.get(0)?);
        if ci != d0 {
            return Err(Error::ColorMismatch {
                left: ci.clone(),
                right: d0.clone(),
            });
        }
        cp.compose(i, 0, dp)
    }

    /// `x ∘ᵢ y` in profile form.
    pub fn compose_at(&self, cp: &Profile, x: &Label, i: usize, dp: &Profile, y: &Label) -> Result<(Profile, Label)> {
        let q = self.graft(cp, i, dp)?;
        let z = self
            .compositions
            .get(&(cp.clone(), x.clone(), i, dp.clone(), y.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("`{x}` ∘{i} `{y}` for {cp} and {dp}")))?;
        Ok((q, z))
    }

    /// The `Σₙ⁺` action in profile form.
    pub fn act_at(&self, p: &Profile, sigma: &Permutation, x: &Label) -> Result<(Profile, Label)> {
        Ok((p.act(sigma)?, self.collection.act(p, sigma, x)?))
    }
}

impl Operad for FinHryOperad {
    type Elem = Label;

    fn colors(&self) -> &BTreeSet<Color> {
        &self.colors
    }

    fn max_arity(&self) -> Option<usize> {
        Some(self.collection.max_norm_value())
    }

    fn entry_size(&self, bp: &BiProfile) -> u128 {
        self.collection.entry_size(&output_first(bp))
    }

    fn elements(&self, bp: &BiProfile) -> Result<Vec<Label>> {
        self.collection.elements(&output_first(bp))
    }

    fn sample(&self, bp: &BiProfile, rng: &mut dyn RngCore) -> Option<Label> {
        self.collection.sample(&output_first(bp), rng)
    }

    fn contains(&self, bp: &BiProfile, x: &Label) -> bool {
        self.collection.contains(&output_first(bp), x)
    }

    fn parse_element(&self, bp: &BiProfile, text: &str) -> Result<Label> {
        self.collection.parse_element(&output_first(bp), text)
    }

    fn act(&self, bp: &BiProfile, sigma: &Permutation, x: &Label) -> Result<Label> {
        self.collection.act(&output_first(bp), &sigma.extend_fixing_zero(), x)
    }

    fn identity(&self, c: &Color) -> Result<Label> {
        self.identities.get(c).cloned().ok_or_else(|| Error::MissingIdentity(c.clone()))
    }

    fn compose(&self, bx: &BiProfile, x: &Label, i: usize, by: &BiProfile, y: &Label) -> Result<Label> {
        check_graft(bx, i, by)?;
        self.compose_at(&output_first(bx), x, i, &output_first(by), y).map(|(_, z)| z)
    }

    fn support(&self, bound: usize) -> Vec<BiProfile> {
        let mut out: Vec<BiProfile> = self.collection.support(bound).iter().filter_map(biprofile).collect();
        out.sort();
        out
    }
}

/// The cyclic operad of an operad with exchangeable outputs: the same
/// entries plus a point at `P( )`, `∘ᵢ⁰ = ∘ᵢ` for `i ≥ 1`, and
///
/// ```text
/// x ∘₀⁰ y = τ*((τ⁻¹)*x ∘₁ y)              if n > 0
///         = (τ^{n+1})*((τ⁻¹)*y ∘₁ x)      if n = 0 < m
///         = *                             if n = m = 0
/// ```
#[derive(Clone, Debug)]
pub struct FromHry<'a> {
    o: &'a FinHryOperad,
}

impl<'a> FromHry<'a> {
    pub fn new(o: &'a FinHryOperad) -> Self {
        FromHry { o }
    }

    fn entry(&self, p: &Profile) -> Vec<Label> {
        if p.is_empty() {
            vec![self.o.point.clone()]
        } else {
            self.o.collection.entry(p).to_vec()
        }
    }
}

impl Collection for FromHry<'_> {
    type Elem = Label;

    fn colors(&self) -> &InvolutiveSet {
        self.o.collection.colors()
    }

    fn max_norm(&self) -> Option<usize> {
        Some(self.o.collection.max_norm_value())
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        self.entry(p).len() as u128
    }

    fn elements(&self, p: &Profile) -> Result<Vec<Label>> {
        Ok(self.entry(p))
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

    fn act(&self, p: &Profile, sigma: &Permutation, x: &Label) -> Result<Label> {
        if p.is_empty() && sigma.is_empty() && *x == self.o.point {
            return Ok(x.clone());
        }
        self.o.collection.act(p, sigma, x)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        std::iter::once(Profile::empty())
            .chain(self.o.collection.support(bound))
            .collect()
    }
}

impl CyclicOperad for FromHry<'_> {
    fn identity(&self, c: &Color) -> Result<Label> {
        self.o.identity(c)
    }

    fn compose_i0(&self, cp: &Profile, x: &Label, i: usize, dp: &Profile, y: &Label) -> Result<Label> {
        if i >= 1 {
            return self.o.compose_at(cp, x, i, dp, y).map(|(_, z)| z);
        }
        let (n, m) = (cp.len() - 1, dp.len() - 1);
        let o = self.o;
        if n > 0 {
            let (cq, xr) = o.act_at(cp, &Permutation::tau_power(n + 1, -1), x)?;
            let (q, z) = o.compose_at(&cq, &xr, 1, dp, y)?;
            o.act_at(&q, &Permutation::tau_power(n + m, 1), &z).map(|(_, z)| z)
        } else if m > 0 {
            let (dq, yr) = o.act_at(dp, &Permutation::tau_power(m + 1, -1), y)?;
            let (q, z) = o.compose_at(&dq, &yr, 1, cp, x)?;
            o.act_at(&q, &Permutation::tau_power(n + m, n as i64 + 1), &z).map(|(_, z)| z)
        } else {
            Ok(o.point.clone())
        }
    }
}

/// Tabulates the cyclic operad of `o`.
pub fn hry_to_cyclic(o: &FinHryOperad) -> Result<TableCyclicOperad> {
    TableCyclicOperad::materialize(&FromHry::new(o), o.collection.max_norm_value(), u128::MAX)
}

/// Reads an operad with exchangeable outputs off a cyclic operad on a
/// trivially involutive color set, forgetting `P( )` and `∘₀⁰`.
///
/// When `P( )` is a point its label is kept, so that translating back
/// gives `P` again when `P` is positive.
pub fn cyclic_to_hry<P: CyclicOperad + ?Sized>(p: &P, bound: usize) -> Result<FinHryOperad> {
    if let Some(c) = p.colors().colors().find(|c| p.colors().dagger(c).ok().as_ref() != Some(*c)) {
        return Err(Error::NontrivialInvolution(c.clone()));
    }
    if p.symmetry() != Symmetry::Full {
        return Err(Error::Invalid("exchangeable outputs need the full symmetric action".into()));
    }
    let bound = effective_bound(p, bound);
    let table = TableCyclicOperad::materialize(p, bound, u128::MAX)?;
    let source = table.collection();
    let entries = source
        .entries()
        .iter()
        .filter(|(q, _)| !q.is_empty())
        .map(|(q, e)| (q.clone(), e.clone()));
    let mut collection = FinCollection::new(source.colors().clone(), Symmetry::Full, bound, entries)?;
    for (q, sigma, x, y) in source.action_records() {
        if !q.is_empty() {
            collection.set_action(&q, sigma, &x, &y)?;
        }
    }
    let mut out = FinHryOperad::new(collection)?;
    if let [point] = source.entry(&Profile::empty()) {
        out.set_point(point.clone());
    }
    for (c, x) in table.identities() {
        out.set_identity(c, x.clone())?;
    }
    for (cp, x, i, dp, y, z) in table.composition_records() {
        if i >= 1 {
            out.set_composition(&cp, &x, i, &dp, &y, z)?;
        }
    }
    Ok(out)
}
