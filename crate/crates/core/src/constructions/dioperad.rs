use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::collection::{effective_bound, random_index, Collection, Morphism, Symmetry};
use crate::cyclic::{self, CyclicOperad, TableCyclicOperad};
use crate::element::{label, Label};
use crate::error::{Error, Result};
use crate::profile::{iota_lower, Color, InvolutiveSet, Permutation, Profile};

/// Inputs and outputs of a dioperad entry, `D(d̲ over c̲)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct DiProfile {
    pub inputs: Vec<Color>,
    pub outputs: Vec<Color>,
}

impl DiProfile {
    pub fn new(inputs: Vec<Color>, outputs: Vec<Color>) -> Self {
        DiProfile { inputs, outputs }
    }

    pub fn legs(&self) -> usize {
        self.inputs.len() + self.outputs.len()
    }

    pub fn norm(&self) -> isize {
        self.legs() as isize - 1
    }

    /// Feeds output `j` of `giver` into input `i` of `self`: inputs become
    /// `c₀…c_{i−1}, (giver's inputs), c_{i+1}…`, outputs
    /// `(giver's outputs before j), (own outputs), (giver's outputs after j)`.
    pub fn graft(&self, i: usize, giver: &DiProfile, j: usize) -> Result<DiProfile> {
        let (ci, dj) = (self.input(i)?, giver.output(j)?);
        if ci != dj {
            return Err(Error::ColorMismatch {
                left: ci.clone(),
                right: dj.clone(),
            });
        }
        let inputs = self.inputs[..i]
            .iter()
            .chain(&giver.inputs)
            .chain(&self.inputs[i + 1..])
            .cloned()
            .collect();
        let outputs = giver.outputs[..j]
            .iter()
            .chain(&self.outputs)
            .chain(&giver.outputs[j + 1..])
            .cloned()
            .collect();
        Ok(DiProfile::new(inputs, outputs))
    }

    fn input(&self, i: usize) -> Result<&Color> {
        self.inputs.get(i).ok_or(Error::IndexOutOfRange {
            index: i as i64,
            max: self.inputs.len() as i64 - 1,
        })
    }

    fn output(&self, j: usize) -> Result<&Color> {
        self.outputs.get(j).ok_or(Error::IndexOutOfRange {
            index: j as i64,
            max: self.outputs.len() as i64 - 1,
        })
    }

    /// Whether `ρ` on `[0, legs)` keeps inputs among inputs.
    pub fn preserves_blocks(&self, rho: &Permutation) -> bool {
        let k = self.inputs.len();
        rho.len() == self.legs() && (0..rho.len()).all(|t| (t < k) == (rho.apply(t) < k))
    }

    /// Acts by a permutation of the legs, inputs first, that preserves the
    /// two blocks.
    pub fn act(&self, rho: &Permutation) -> Result<DiProfile> {
        if !self.preserves_blocks(rho) {
            return Err(Error::Invalid(format!("{rho} mixes inputs and outputs of {self}")));
        }
        let all: Vec<Color> = self.inputs.iter().chain(&self.outputs).cloned().collect();
        let mut acted = rho.act(&all)?;
        let outputs = acted.split_off(self.inputs.len());
        Ok(DiProfile::new(acted, outputs))
    }

    /// Every block-preserving permutation of the legs.
    pub fn block_permutations(&self) -> Vec<Permutation> {
        let (k, l) = (self.inputs.len(), self.outputs.len());
        Permutation::all(k)
            .cartesian_product(Permutation::all(l).collect::<Vec<_>>())
            .map(|(a, b)| block(&a, &b))
            .collect()
    }
}

/// `σ ⊔ ρ` on `[0, k + l)`.
pub fn block(sigma: &Permutation, rho: &Permutation) -> Permutation {
    let k = sigma.len();
    let images = sigma.images().iter().copied().chain(rho.images().iter().map(|&t| t + k)).collect();
    Permutation::new(images).expect("a block sum of permutations")
}

impl fmt::Display for DiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} → {})", self.inputs.iter().join(", "), self.outputs.iter().join(", "))
    }
}

/// A table-backed colored dioperad, in the convention of
/// [`DiProfile::graft`] for compositions and with the block-preserving
/// permutations of the legs (inputs first) acting on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDioperad {
    colors: BTreeSet<Color>,
    max_norm: usize,
    entries: BTreeMap<DiProfile, Vec<Label>>,
    actions: BTreeMap<(DiProfile, Permutation, Label), Label>,
    identities: BTreeMap<Color, Label>,
    compositions: BTreeMap<(DiProfile, Label, usize, DiProfile, Label, usize), Label>,
}

impl FinDioperad {
    pub fn new(colors: BTreeSet<Color>, max_norm: usize) -> Self {
        FinDioperad {
            colors,
            max_norm,
            entries: BTreeMap::new(),
            actions: BTreeMap::new(),
            identities: BTreeMap::new(),
            compositions: BTreeMap::new(),
        }
    }

    pub fn colors(&self) -> &BTreeSet<Color> {
        &self.colors
    }

    pub fn max_norm(&self) -> usize {
        self.max_norm
    }

    pub fn set_entry(&mut self, dp: DiProfile, elems: Vec<Label>) -> Result<()> {
        for c in dp.inputs.iter().chain(&dp.outputs) {
            if !self.colors.contains(c) {
                return Err(Error::UnknownColor(c.clone()));
            }
        }
        if dp.norm() > self.max_norm as isize {
            return Err(Error::Invalid(format!("{dp} has more than {} legs", self.max_norm + 1)));
        }
        if elems.is_empty() {
            self.entries.remove(&dp);
        } else {
            self.entries.insert(dp, elems);
        }
        Ok(())
    }

    pub fn entries(&self) -> &BTreeMap<DiProfile, Vec<Label>> {
        &self.entries
    }

    pub fn entry(&self, dp: &DiProfile) -> &[Label] {
        self.entries.get(dp).map_or(&[], Vec::as_slice)
    }

    fn require(&self, dp: &DiProfile, x: &Label) -> Result<()> {
        if self.entry(dp).contains(x) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("`{x}` is not an element of D{dp}")))
        }
    }

    pub fn set_action(&mut self, dp: &DiProfile, rho: Permutation, x: &Label, y: Label) -> Result<()> {
        let target = dp.act(&rho)?;
        self.require(dp, x)?;
        self.require(&target, &y)?;
        self.actions.insert((dp.clone(), rho, x.clone()), y);
        Ok(())
    }

    pub fn actions(&self) -> &BTreeMap<(DiProfile, Permutation, Label), Label> {
        &self.actions
    }

    /// `ρ* x` for a block-preserving `ρ`.
    pub fn act(&self, dp: &DiProfile, rho: &Permutation, x: &Label) -> Result<Label> {
        if rho.is_identity() && self.entry(dp).contains(x) {
            return Ok(x.clone());
        }
        self.actions
            .get(&(dp.clone(), rho.clone(), x.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("action of {rho} on `{x}` in D{dp}")))
    }

    pub fn set_identity(&mut self, c: &Color, x: Label) -> Result<()> {
        self.require(&DiProfile::new(vec![c.clone()], vec![c.clone()]), &x)?;
        self.identities.insert(c.clone(), x);
        Ok(())
    }

    pub fn identities(&self) -> &BTreeMap<Color, Label> {
        &self.identities
    }

    pub fn identity(&self, c: &Color) -> Result<Label> {
        self.identities.get(c).cloned().ok_or_else(|| Error::MissingIdentity(c.clone()))
    }

    #[allow(clippy::too_many_arguments)]
    pub fn set_composition(
        &mut self,
        dx: &DiProfile,
        x: &Label,
        i: usize,
        dy: &DiProfile,
        y: &Label,
        j: usize,
        z: Label,
    ) -> Result<()> {
        let target = dx.graft(i, dy, j)?;
        self.require(dx, x)?;
        self.require(dy, y)?;
        self.require(&target, &z)?;
        self.compositions
            .insert((dx.clone(), x.clone(), i, dy.clone(), y.clone(), j), z);
        Ok(())
    }

    pub fn compositions(&self) -> &BTreeMap<(DiProfile, Label, usize, DiProfile, Label, usize), Label> {
        &self.compositions
    }

    /// Output `j` of `y` fed into input `i` of `x`.
    pub fn compose(&self, dx: &DiProfile, x: &Label, i: usize, dy: &DiProfile, y: &Label, j: usize) -> Result<(DiProfile, Label)> {
        let target = dx.graft(i, dy, j)?;
        let z = self
            .compositions
            .get(&(dx.clone(), x.clone(), i, dy.clone(), y.clone(), j))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("`{x}` ∘ `{y}` at input {i} of {dx}, output {j} of {dy}")))?;
        Ok((target, z))
    }

    /// Whether every nonempty entry has at least one input and one output.
    pub fn is_gan(&self) -> bool {
        self.entries
            .keys()
            .all(|dp| !dp.inputs.is_empty() && !dp.outputs.is_empty())
    }

    /// The sub-dioperad of entries with at least one input and one output;
    /// grafting keeps that property.
    pub fn gan_restriction(&self) -> FinDioperad {
        let keep = |dp: &DiProfile| !dp.inputs.is_empty() && !dp.outputs.is_empty();
        FinDioperad {
            colors: self.colors.clone(),
            max_norm: self.max_norm,
            entries: self.entries.iter().filter(|(dp, _)| keep(dp)).map(|(k, v)| (k.clone(), v.clone())).collect(),
            actions: self.actions.iter().filter(|(k, _)| keep(&k.0)).map(|(k, v)| (k.clone(), v.clone())).collect(),
            identities: self.identities.clone(),
            compositions: self
                .compositions
                .iter()
                .filter(|(k, _)| keep(&k.0) && keep(&k.3))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// A choice of which side of each free pair `{c, c†}` counts as inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    colors: InvolutiveSet,
    sides: BTreeMap<Color, (Color, u8)>,
    named: BTreeMap<(Color, u8), Color>,
}

impl Polarization {
    /// Polarized colors `x^0`, `x^1` keep their polarity; in any other free
    /// pair the smaller color is the input side and names the pair.
    pub fn of(colors: &InvolutiveSet) -> Result<Self> {
        let mut sides = BTreeMap::new();
        for c in colors.colors() {
            let d = colors.dagger(c)?;
            if d == *c {
                return Err(Error::NonFreeInvolution(c.clone()));
            }
            let side = match (c.as_polar(), d.as_polar()) {
                (Some((b, a)), Some((b2, a2))) if b == b2 && a != a2 => (b.clone(), a),
                _ if c < &d => (c.clone(), 0),
                _ => (d.clone(), 1),
            };
            sides.insert(c.clone(), side);
        }
        let named = sides.iter().map(|(c, s)| (s.clone(), c.clone())).collect();
        Ok(Polarization {
            colors: colors.clone(),
            sides,
            named,
        })
    }

    /// The standard polarization of `ι_!` of a plain set.
    pub fn lower(plain: &BTreeSet<Color>) -> Self {
        Polarization::of(&iota_lower(plain)).expect("ι_! is free")
    }

    pub fn colors(&self) -> &InvolutiveSet {
        &self.colors
    }

    pub fn bases(&self) -> BTreeSet<Color> {
        self.sides.values().map(|(b, _)| b.clone()).collect()
    }

    pub fn side(&self, c: &Color) -> Result<&(Color, u8)> {
        self.sides.get(c).ok_or_else(|| Error::UnknownColor(c.clone()))
    }

    pub fn color(&self, base: &Color, polarity: u8) -> Result<Color> {
        self.named
            .get(&(base.clone(), polarity))
            .cloned()
            .ok_or_else(|| Error::UnknownColor(base.clone()))
    }

    /// The cyclic profile `c₁⁰, …, c_k⁰, d₁¹, …, d_l¹` of `D(d̲ over c̲)`.
    pub fn profile(&self, dp: &DiProfile) -> Result<Profile> {
        let ins = dp.inputs.iter().map(|c| self.color(c, 0));
        let outs = dp.outputs.iter().map(|c| self.color(c, 1));
        ins.chain(outs).collect::<Result<_>>().map(Profile)
    }

    /// Sorts a profile into inputs and outputs, keeping the order within
    /// each: returns the entry and the `π` with `c̲π` sorted.
    pub fn split(&self, p: &Profile) -> Result<(DiProfile, Permutation)> {
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        for (t, c) in p.colors().iter().enumerate() {
            let (base, a) = self.side(c)?;
            if *a == 0 {
                ins.push((t, base.clone()));
            } else {
                outs.push((t, base.clone()));
            }
        }
        let images = ins.iter().chain(&outs).map(|(t, _)| *t).collect();
        let dp = DiProfile::new(
            ins.into_iter().map(|(_, b)| b).collect(),
            outs.into_iter().map(|(_, b)| b).collect(),
        );
        Ok((dp, Permutation::new(images)?))
    }
}

/// A leg, remembered by which factor (`0`/`1`) it came from and its
/// position in that factor's sorted profile.
type Tag = (u8, usize);

fn surgery<T: Clone>(c: &[T], i: usize, d: &[T], j: usize) -> Vec<T> {
    c[..i]
        .iter()
        .chain(&d[j + 1..])
        .chain(&d[..j])
        .chain(&c[i + 1..])
        .cloned()
        .collect()
}

/// Legs of the dioperadic composite in [`DiProfile::graft`] order, for a
/// receiver (factor `r`, input `i`) and a giver (factor `g`, output `j`).
fn graft_tags(rx: (u8, &DiProfile, usize), gy: (u8, &DiProfile, usize)) -> Vec<Tag> {
    let (r, dx, i) = rx;
    let (g, dy, j) = gy;
    let (kx, lx) = (dx.inputs.len(), dx.outputs.len());
    let (ky, ly) = (dy.inputs.len(), dy.outputs.len());
    let mut out: Vec<Tag> = (0..i).map(|t| (r, t)).collect();
    out.extend((0..ky).map(|t| (g, t)));
    out.extend((i + 1..kx).map(|t| (r, t)));
    out.extend((0..j).map(|t| (g, ky + t)));
    out.extend((0..lx).map(|t| (r, kx + t)));
    out.extend((j + 1..ly).map(|t| (g, ky + t)));
    out
}

/// The `σ` with `from σ = to`.
fn reorder(from: &[Tag], to: &[Tag]) -> Permutation {
    let images = to
        .iter()
        .map(|tag| from.iter().position(|t| t == tag).expect("same legs"))
        .collect();
    Permutation::new(images).expect("a reordering of the same legs")
}

/// The dioperad of a cyclic operad on a freely involutive color set:
/// `D(d̲ over c̲) = P(c₁⁰, …, c_k⁰, d₁¹, …, d_l¹)`, with compositions and
/// actions carried over from `P`.
pub fn cyclic_to_dioperad<P>(p: &P, pol: &Polarization, bound: usize) -> Result<FinDioperad>
where
    P: CyclicOperad + ?Sized,
{
    if p.symmetry() != Symmetry::Full {
        return Err(Error::Invalid("dioperads need the full symmetric action".into()));
    }
    for c in p.colors().colors() {
        pol.side(c)?;
    }
    let bound = effective_bound(p, bound);
    let lab = |x: &P::Elem| label(&x.to_string());
    let mut d = FinDioperad::new(pol.bases(), bound);
    let mut elems = BTreeMap::new();
    for q in p.support(bound) {
        let (dp, pi) = pol.split(&q)?;
        if pi.is_identity() {
            let xs = p.elements(&q)?;
            d.set_entry(dp.clone(), xs.iter().map(lab).collect())?;
            elems.insert(dp, (q, xs));
        }
    }
    for (dp, (q, xs)) in &elems {
        for rho in dp.block_permutations() {
            if rho.is_identity() {
                continue;
            }
            for x in xs {
                d.set_action(dp, rho.clone(), &lab(x), lab(&p.act(q, &rho, x)?))?;
            }
        }
    }
    if p.has_identities() {
        for b in pol.bases() {
            d.set_identity(&b, lab(&p.identity(&pol.color(&b, 1)?)?))?;
        }
    }
    for (dx, (qx, xs)) in &elems {
        for (dy, (qy, ys)) in &elems {
            if dx.legs() + dy.legs() > bound + 3 {
                continue;
            }
            for i in 0..dx.inputs.len() {
                for j in 0..dy.outputs.len() {
                    if dx.inputs[i] != dy.outputs[j] {
                        continue;
                    }
                    let jj = dy.inputs.len() + j;
                    let tags_x: Vec<Tag> = (0..dx.legs()).map(|t| (0, t)).collect();
                    let tags_y: Vec<Tag> = (0..dy.legs()).map(|t| (1, t)).collect();
                    let sigma = reorder(&surgery(&tags_x, i, &tags_y, jj), &graft_tags((0, dx, i), (1, dy, j)));
                    for x in xs {
                        for y in ys {
                            let (q, z) = cyclic::compose(p, qx, x, i, jj, qy, y)?;
                            let z = p.act(&q, &sigma, &z)?;
                            d.set_composition(dx, &lab(x), i, dy, &lab(y), j, lab(&z))?;
                        }
                    }
                }
            }
        }
    }
    Ok(d)
}

/// The cyclic operad of a dioperad, lazily: `P(c̲)` is the entry of `c̲`
/// sorted into inputs and outputs, and elements keep their labels.
#[derive(Clone, Debug)]
pub struct FromDioperad<'a> {
    d: &'a FinDioperad,
    pol: Polarization,
}

impl<'a> FromDioperad<'a> {
    /// Over `ι_!` of the dioperad's colors.
    pub fn new(d: &'a FinDioperad) -> Self {
        FromDioperad {
            d,
            pol: Polarization::lower(&d.colors),
        }
    }

    /// Over the colors named by `pol`, whose bases must be the dioperad's.
    pub fn with_polarization(d: &'a FinDioperad, pol: Polarization) -> Result<Self> {
        if pol.bases() != d.colors {
            return Err(Error::Invalid("polarization does not match the dioperad's colors".into()));
        }
        Ok(FromDioperad { d, pol })
    }

    fn entry(&self, p: &Profile) -> &'a [Label] {
        match self.pol.split(p) {
            Ok((dp, _)) => self.d.entry(&dp),
            Err(_) => &[],
        }
    }
}

impl Collection for FromDioperad<'_> {
    type Elem = Label;

    fn colors(&self) -> &InvolutiveSet {
        self.pol.colors()
    }

    fn max_norm(&self) -> Option<usize> {
        Some(self.d.max_norm)
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

    /// With `c̲π` sorted, `σ*` is the dioperad action of `π⁻¹σπ′`, where
    /// `π′` sorts `c̲σ`.
    fn act(&self, p: &Profile, sigma: &Permutation, x: &Label) -> Result<Label> {
        let (dp, pi) = self.pol.split(p)?;
        let (_, pi2) = self.pol.split(&p.act(sigma)?)?;
        let rho = pi.inverse().compose(sigma).compose(&pi2);
        if !self.d.entry(&dp).contains(x) {
            return Err(Error::NotAnElement {
                profile: p.clone(),
                element: x.to_string(),
            });
        }
        self.d.act(&dp, &rho, x)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        let mut out = BTreeSet::new();
        for dp in self.d.entries.keys() {
            if dp.norm() > bound as isize {
                continue;
            }
            let Ok(q) = self.pol.profile(dp) else { continue };
            for sigma in Permutation::all(q.len()) {
                out.insert(q.act(&sigma).expect("matching length"));
            }
        }
        out.into_iter().collect()
    }
}

impl CyclicOperad for FromDioperad<'_> {
    fn identity(&self, c: &Color) -> Result<Label> {
        self.d.identity(&self.pol.side(c)?.0)
    }

    fn compose_i0(&self, cp: &Profile, x: &Label, i: usize, dp: &Profile, y: &Label) -> Result<Label> {
        let (sx, pc) = self.pol.split(cp)?;
        let (sy, pd) = self.pol.split(dp)?;
        let (pci, pdi) = (pc.inverse(), pd.inverse());
        let (a, b) = (pci.apply(i), pdi.apply(0));
        let tags_c: Vec<Tag> = (0..cp.len()).map(|s| (0, pci.apply(s))).collect();
        let tags_d: Vec<Tag> = (0..dp.len()).map(|s| (1, pdi.apply(s))).collect();
        let (kx, ky) = (sx.inputs.len(), sy.inputs.len());
        let (res, w, conv) = if self.pol.side(cp.get(i)?)?.1 == 0 {
            let (res, w) = self.d.compose(&sx, x, a, &sy, y, b - ky)?;
            (res, w, graft_tags((0, &sx, a), (1, &sy, b - ky)))
        } else {
            let (res, w) = self.d.compose(&sy, y, b, &sx, x, a - kx)?;
            (res, w, graft_tags((1, &sy, b), (0, &sx, a - kx)))
        };
        let q = cp.compose(i, 0, dp)?;
        let (_, pq) = self.pol.split(&q)?;
        let target: Vec<Tag> = pq.act(&surgery(&tags_c, i, &tags_d, 0))?;
        self.d.act(&res, &reorder(&conv, &target), &w)
    }
}

/// Tabulates the cyclic operad of `d` over `ι_!` of its colors.
pub fn dioperad_to_cyclic(d: &FinDioperad) -> Result<TableCyclicOperad> {
    TableCyclicOperad::materialize(&FromDioperad::new(d), d.max_norm, u128::MAX)
}

/// `x ↦ π*x` with `c̲π` sorted: the comparison between a cyclic operad and
/// the round trip through dioperads, which relabels unsorted entries.
pub struct SortingIso<'a, P: ?Sized> {
    source: &'a P,
    pol: &'a Polarization,
}

impl<'a, P: CyclicOperad + ?Sized> SortingIso<'a, P> {
    pub fn new(source: &'a P, pol: &'a Polarization) -> Self {
        SortingIso { source, pol }
    }
}

impl<'a, P, T> Morphism<P, T> for SortingIso<'a, P>
where
    P: CyclicOperad<Elem = Label> + ?Sized,
    T: Collection<Elem = Label> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        Ok(c.clone())
    }

    fn map_element(&self, p: &Profile, x: &Label) -> Result<Label> {
        let (_, pi) = self.pol.split(p)?;
        self.source.act(p, &pi, x)
    }
}
