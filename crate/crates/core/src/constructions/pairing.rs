use std::collections::BTreeMap;

use rand::RngCore;

use crate::collection::{random_index, Collection};
use crate::cyclic::{CyclicOperad, TableCyclicOperad};
use crate::element::{label, Label};
use crate::error::{Error, Result};
use crate::profile::{Color, InvolutiveSet, Permutation, Profile};

/// Label of the two identities.
pub const PAIRING_ID: &str = "id";

/// The cyclic operad of a pairing `f : A × B → C` over `{c, c†}`:
/// `P(c) = A`, `P(c†) = B`, `P( ) = C`, identities in `P(c†, c)` and
/// `P(c, c†)`, and `∘₀⁰ = f` (or `f` after the swap).
#[derive(Clone, Debug)]
pub struct Pairing {
    colors: InvolutiveSet,
    a: Vec<Label>,
    b: Vec<Label>,
    c: Vec<Label>,
    f: BTreeMap<(Label, Label), Label>,
}

/// The colors `c` and `c†`.
pub fn pairing_colors() -> (Color, Color) {
    (Color::named("c"), Color::named("c†"))
}

impl Pairing {
    pub fn new(a: Vec<Label>, b: Vec<Label>, c: Vec<Label>, f: BTreeMap<(Label, Label), Label>) -> Result<Self> {
        for x in &a {
            for y in &b {
                let z = f
                    .get(&(x.clone(), y.clone()))
                    .ok_or_else(|| Error::MissingTable(format!("f({x}, {y})")))?;
                if !c.contains(z) {
                    return Err(Error::Invalid(format!("f({x}, {y}) = {z} is not in C")));
                }
            }
        }
        let (c0, c1) = pairing_colors();
        let colors = InvolutiveSet::new([(c0.clone(), c1.clone()), (c1, c0)])?;
        Ok(Pairing { colors, a, b, c, f })
    }

    /// `f` given as a function on labels.
    pub fn from_fn(a: &[&str], b: &[&str], c: &[&str], f: impl Fn(&str, &str) -> String) -> Result<Self> {
        let table = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .map(|(x, y)| ((label(x), label(y)), label(&f(x, y))))
            .collect();
        let labels = |s: &[&str]| s.iter().map(|x| label(x)).collect();
        Pairing::new(labels(a), labels(b), labels(c), table)
    }

    fn entry(&self, p: &Profile) -> Vec<Label> {
        let (c0, c1) = pairing_colors();
        match p.colors() {
            [] => self.c.clone(),
            [x] if *x == c0 => self.a.clone(),
            [x] if *x == c1 => self.b.clone(),
            [x, y] if x != y => vec![label(PAIRING_ID)],
            _ => Vec::new(),
        }
    }

    fn is_identity(p: &Profile) -> bool {
        p.len() == 2
    }
}

impl Collection for Pairing {
    type Elem = Label;

    fn colors(&self) -> &InvolutiveSet {
        &self.colors
    }

    fn max_norm(&self) -> Option<usize> {
        Some(1)
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

    /// Every permutation acts trivially: the only entry of arity two is a
    /// point on each side.
    fn act(&self, p: &Profile, sigma: &Permutation, x: &Label) -> Result<Label> {
        if sigma.len() != p.len() {
            return Err(Error::ArityMismatch {
                expected: p.len(),
                found: sigma.len(),
            });
        }
        if !self.contains(p, x) {
            return Err(Error::NotAnElement {
                profile: p.clone(),
                element: x.to_string(),
            });
        }
        Ok(x.clone())
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        let colors: Vec<Color> = self.colors.colors().cloned().collect();
        (0..=bound.min(1) + 1)
            .flat_map(|len| Profile::all_of_length(&colors, len))
            .filter(|p| !self.entry(p).is_empty())
            .collect()
    }
}

impl CyclicOperad for Pairing {
    fn identity(&self, _c: &Color) -> Result<Label> {
        Ok(label(PAIRING_ID))
    }

    fn compose_i0(&self, cp: &Profile, x: &Label, _i: usize, dp: &Profile, y: &Label) -> Result<Label> {
        if Pairing::is_identity(cp) {
            return Ok(y.clone());
        }
        if Pairing::is_identity(dp) {
            return Ok(x.clone());
        }
        let (a, b) = if cp.colors()[0] == pairing_colors().0 { (x, y) } else { (y, x) };
        self.f
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| Error::MissingTable(format!("f({a}, {b})")))
    }
}

/// Tabulates the cyclic operad of the pairing `f : A × B → C`.
pub fn pairing_cyclic(a: &[&str], b: &[&str], c: &[&str], f: impl Fn(&str, &str) -> String) -> Result<TableCyclicOperad> {
    TableCyclicOperad::materialize(&Pairing::from_fn(a, b, c, f)?, 1, u128::MAX)
}
