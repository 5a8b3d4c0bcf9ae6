use std::collections::{BTreeMap, HashMap};

use rand::RngCore;

use super::{graft, CyclicOperad};
use crate::collection::{effective_bound, Collection, FinCollection, Symmetry};
use crate::element::Label;
use crate::error::{Error, Result};
use crate::profile::{Color, InvolutiveSet, Permutation, Profile};

const MISSING: u32 = u32::MAX;

/// A cyclic operad given by explicit tables up to a norm bound: entries,
/// action tables, identities and the compositions `∘ᵢ⁰`.
#[derive(Clone, Debug, PartialEq)]
pub struct TableCyclicOperad {
    collection: FinCollection,
    unital: bool,
    identities: BTreeMap<Color, Label>,
    compositions: HashMap<(Profile, usize, Profile), Vec<u32>>,
}

impl TableCyclicOperad {
    /// Wraps a collection; identities and compositions are added afterwards.
    pub fn new(collection: FinCollection, unital: bool) -> Self {
        TableCyclicOperad {
            collection,
            unital,
            identities: BTreeMap::new(),
            compositions: HashMap::new(),
        }
    }

    /// Tabulates `source` up to norm `bound`, refusing entries with more
    /// than `max_entry` elements.
    pub fn materialize<P: CyclicOperad + ?Sized>(source: &P, bound: usize, max_entry: u128) -> Result<Self> {
        let bound = effective_bound(source, bound);
        let collection = FinCollection::materialize(source, bound, max_entry)?;
        let mut out = TableCyclicOperad::new(collection, source.has_identities());
        let lab = |x: &P::Elem| Label::from(x.to_string());
        if source.has_identities() {
            for c in source.colors().colors() {
                out.set_identity(c, lab(&source.identity(c)?))?;
            }
        }
        let support = source.support(bound);
        let mut elems = HashMap::new();
        for p in &support {
            elems.insert(p.clone(), source.elements(p)?);
        }
        for cp in &support {
            for i in 0..cp.len() {
                for dp in &support {
                    let Ok(out_p) = graft(&out, cp, i, dp, 0) else { continue };
                    if out_p.norm() > bound as isize {
                        continue;
                    }
                    for x in &elems[cp] {
                        for y in &elems[dp] {
                            let z = source.compose_i0(cp, x, i, dp, y)?;
                            out.set_composition(cp, &lab(x), i, dp, &lab(y), &lab(&z))?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn collection(&self) -> &FinCollection {
        &self.collection
    }

    pub fn collection_mut(&mut self) -> &mut FinCollection {
        &mut self.collection
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn identities(&self) -> &BTreeMap<Color, Label> {
        &self.identities
    }

    pub fn set_identity(&mut self, c: &Color, x: Label) -> Result<()> {
        let p = Profile(vec![self.colors().dagger(c)?, c.clone()]);
        if !self.collection.contains(&p, &x) {
            return Err(Error::NotAnElement {
                profile: p,
                element: x.to_string(),
            });
        }
        self.identities.insert(c.clone(), x);
        self.unital = true;
        Ok(())
    }

    fn locate(&self, p: &Profile, x: &Label) -> Result<usize> {
        self.collection
            .position(p, x)
            .map(|k| k as usize)
            .ok_or_else(|| Error::NotAnElement {
                profile: p.clone(),
                element: x.to_string(),
            })
    }

    /// Records `x ∘ᵢ⁰ y = z`, overwriting any previous value.
    pub fn set_composition(
        &mut self,
        cp: &Profile,
        x: &Label,
        i: usize,
        dp: &Profile,
        y: &Label,
        z: &Label,
    ) -> Result<()> {
        let out = graft(self, cp, i, dp, 0)?;
        let a = self.locate(cp, x)?;
        let b = self.locate(dp, y)?;
        let r = self.locate(&out, z)? as u32;
        let width = self.collection.entry(dp).len();
        let size = self.collection.entry(cp).len() * width;
        let table = self
            .compositions
            .entry((cp.clone(), i, dp.clone()))
            .or_insert_with(|| vec![MISSING; size]);
        table[a * width + b] = r;
        Ok(())
    }

    /// Composition records `(c̲, x, i, d̲, y, x ∘ᵢ⁰ y)` in canonical order.
    pub fn composition_records(&self) -> Vec<(Profile, Label, usize, Profile, Label, Label)> {
        let mut out = Vec::new();
        for ((cp, i, dp), table) in &self.compositions {
            let target = cp.compose(*i, 0, dp).expect("stored graft");
            let width = self.collection.entry(dp).len();
            for (k, &t) in table.iter().enumerate() {
                if t != MISSING {
                    out.push((
                        cp.clone(),
                        self.collection.entry(cp)[k / width].clone(),
                        *i,
                        dp.clone(),
                        self.collection.entry(dp)[k % width].clone(),
                        self.collection.entry(&target)[t as usize].clone(),
                    ));
                }
            }
        }
        out.sort();
        out
    }

    /// Every `(c̲, i, d̲)` for which `∘ᵢ⁰` must be tabulated, in order.
    pub fn required_compositions(&self) -> Vec<(Profile, usize, Profile)> {
        let bound = self.collection.max_norm_value();
        let support = self.collection.support(bound);
        let mut out = Vec::new();
        for cp in &support {
            for i in 0..cp.len() {
                for dp in &support {
                    if graft(self, cp, i, dp, 0).is_ok_and(|q| q.norm() <= bound as isize) {
                        out.push((cp.clone(), i, dp.clone()));
                    }
                }
            }
        }
        out
    }
}

impl Collection for TableCyclicOperad {
    type Elem = Label;

    fn colors(&self) -> &InvolutiveSet {
        self.collection.colors()
    }

    fn symmetry(&self) -> Symmetry {
        self.collection.symmetry()
    }

    fn max_norm(&self) -> Option<usize> {
        self.collection.max_norm()
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        self.collection.entry_size(p)
    }

    fn elements(&self, p: &Profile) -> Result<Vec<Label>> {
        self.collection.elements(p)
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<Label> {
        self.collection.sample(p, rng)
    }

    fn contains(&self, p: &Profile, x: &Label) -> bool {
        self.collection.contains(p, x)
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<Label> {
        self.collection.parse_element(p, text)
    }

    fn act(&self, p: &Profile, sigma: &Permutation, x: &Label) -> Result<Label> {
        self.collection.act(p, sigma, x)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        self.collection.support(bound)
    }
}

impl CyclicOperad for TableCyclicOperad {
    fn has_identities(&self) -> bool {
        self.unital
    }

    fn identity(&self, c: &Color) -> Result<Label> {
        self.identities.get(c).cloned().ok_or_else(|| Error::MissingIdentity(c.clone()))
    }

    fn compose_i0(&self, cp: &Profile, x: &Label, i: usize, dp: &Profile, y: &Label) -> Result<Label> {
        let out = cp.compose(i, 0, dp)?;
        let a = self.locate(cp, x)?;
        let b = self.locate(dp, y)?;
        let width = self.collection.entry(dp).len();
        let t = self
            .compositions
            .get(&(cp.clone(), i, dp.clone()))
            .map(|t| t[a * width + b])
            .filter(|&t| t != MISSING)
            .ok_or_else(|| Error::MissingTable(format!("`{x}` ∘{i}⁰ `{y}` for {cp} and {dp}")))?;
        self.collection
            .entry(&out)
            .get(t as usize)
            .cloned()
            .ok_or(Error::EmptyEntry(out))
    }
}
