//! The JSON document format: a top-level `"kind"` tag and one struct per
//! kind. Loading goes through the library types, so saving a loaded
//! document always produces the canonical form.

use std::collections::{BTreeMap, BTreeSet};

use cycad::collection::{Collection, FinCollection, Symmetry, TableMorphism};
use cycad::constructions::{DiProfile, FinDioperad, FinHryOperad};
use cycad::cyclic::TableCyclicOperad;
use cycad::element::{label, Label};
use cycad::operad::FinOperad;
use cycad::profile::{BiProfile, Color, InvolutiveSet, Permutation, Profile};
use cycad::termlang::{parse_term, print_term, Term, Valuation};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const KINDS: &[&str] = &[
    "involutive-set",
    "collection",
    "operad",
    "cyclic-operad",
    "dioperad",
    "hry-operad",
    "morphism",
    "term",
];

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    InvolutiveSet(InvolutiveSetDoc),
    Collection(CollectionDoc),
    Operad(OperadDoc),
    CyclicOperad(CyclicDoc),
    Dioperad(DioperadDoc),
    HryOperad(HryDoc),
    Morphism(MorphismDoc),
    Term(TermDoc),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryDoc {
    #[default]
    Full,
    Cyclic,
}

impl SymmetryDoc {
    fn is_full(&self) -> bool {
        *self == SymmetryDoc::Full
    }
}

impl From<SymmetryDoc> for Symmetry {
    fn from(s: SymmetryDoc) -> Self {
        match s {
            SymmetryDoc::Full => Symmetry::Full,
            SymmetryDoc::Cyclic => Symmetry::Cyclic,
        }
    }
}

impl From<Symmetry> for SymmetryDoc {
    fn from(s: Symmetry) -> Self {
        match s {
            Symmetry::Full => SymmetryDoc::Full,
            Symmetry::Cyclic => SymmetryDoc::Cyclic,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry<P> {
    pub profile: P,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Action<P> {
    pub profile: P,
    pub perm: Permutation,
    pub input: String,
    pub output: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Slot<P> {
    pub profile: P,
    pub element: String,
}

/// `left ∘ᵢ right = output` (with `j` for dioperads).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Composition<P> {
    pub left: Slot<P>,
    pub i: usize,
    pub right: Slot<P>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub output: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityDoc {
    pub color: Color,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvolutiveSetDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// `c ↦ c†`.
    pub colors: BTreeMap<Color, Color>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollectionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub colors: BTreeMap<Color, Color>,
    #[serde(default, skip_serializing_if = "SymmetryDoc::is_full")]
    pub symmetry: SymmetryDoc,
    pub max_norm: usize,
    pub entries: Vec<Entry<Profile>>,
    #[serde(default)]
    pub actions: Vec<Action<Profile>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclicDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub colors: BTreeMap<Color, Color>,
    #[serde(default, skip_serializing_if = "SymmetryDoc::is_full")]
    pub symmetry: SymmetryDoc,
    pub max_norm: usize,
    #[serde(default = "yes")]
    pub unital: bool,
    pub entries: Vec<Entry<Profile>>,
    #[serde(default)]
    pub actions: Vec<Action<Profile>>,
    #[serde(default)]
    pub identities: Vec<IdentityDoc>,
    /// The compositions `∘ᵢ⁰`.
    #[serde(default)]
    pub compositions: Vec<Composition<Profile>>,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperadDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub colors: BTreeSet<Color>,
    pub max_arity: usize,
    pub entries: Vec<Entry<BiProfile>>,
    #[serde(default)]
    pub actions: Vec<Action<BiProfile>>,
    #[serde(default)]
    pub identities: Vec<IdentityDoc>,
    #[serde(default)]
    pub compositions: Vec<Composition<BiProfile>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DioperadDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub colors: BTreeSet<Color>,
    pub max_norm: usize,
    pub entries: Vec<Entry<DiProfile>>,
    #[serde(default)]
    pub actions: Vec<Action<DiProfile>>,
    #[serde(default)]
    pub identities: Vec<IdentityDoc>,
    /// Output `j` of `right` grafted into input `i` of `left`.
    #[serde(default)]
    pub compositions: Vec<Composition<DiProfile>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub colors: BTreeSet<Color>,
    pub max_norm: usize,
    pub point: String,
    pub entries: Vec<Entry<Profile>>,
    #[serde(default)]
    pub actions: Vec<Action<Profile>>,
    #[serde(default)]
    pub identities: Vec<IdentityDoc>,
    /// The compositions `∘ᵢ`, `i ≥ 1`.
    #[serde(default)]
    pub compositions: Vec<Composition<Profile>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub profile: Profile,
    pub input: String,
    pub output: String,
}

/// A morphism of cyclic operads with its source and target inline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub source: CyclicDoc,
    pub target: CyclicDoc,
    pub colors: BTreeMap<Color, Color>,
    pub components: Vec<ComponentDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Binding {
    pub name: String,
    pub profile: Profile,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub term: String,
    /// The involution the term is read against, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<BTreeMap<Color, Color>>,
    #[serde(default)]
    pub valuation: Vec<Binding>,
}

fn strings(v: &[Label]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn labels(v: &[String]) -> Vec<Label> {
    v.iter().map(|x| label(x)).collect()
}

fn at<T>(field: &str, r: cycad::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Schema(format!("{field}: {e}")))
}

fn closure<T>(field: &str, r: cycad::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Closure(format!("{field}: {e}")))
}

fn involution(field: &str, colors: &BTreeMap<Color, Color>) -> Result<InvolutiveSet, CliError> {
    at(field, InvolutiveSet::new(colors.iter().map(|(a, b)| (a.clone(), b.clone()))))
}

fn identity_docs(ids: &BTreeMap<Color, Label>) -> Vec<IdentityDoc> {
    ids.iter()
        .map(|(c, x)| IdentityDoc {
            color: c.clone(),
            element: x.to_string(),
        })
        .collect()
}

fn entry_docs<P: Clone>(entries: &BTreeMap<P, Vec<Label>>) -> Vec<Entry<P>> {
    entries
        .iter()
        .map(|(p, xs)| Entry {
            profile: p.clone(),
            elements: strings(xs),
        })
        .collect()
}

fn action_docs<P>(records: Vec<(P, Permutation, Label, Label)>) -> Vec<Action<P>> {
    records
        .into_iter()
        .map(|(profile, perm, x, y)| Action {
            profile,
            perm,
            input: x.to_string(),
            output: y.to_string(),
        })
        .collect()
}

fn composition_docs<P>(records: Vec<(P, Label, usize, P, Label, Label)>) -> Vec<Composition<P>> {
    records
        .into_iter()
        .map(|(cp, x, i, dp, y, z)| Composition {
            left: Slot {
                profile: cp,
                element: x.to_string(),
            },
            i,
            right: Slot {
                profile: dp,
                element: y.to_string(),
            },
            j: None,
            output: z.to_string(),
        })
        .collect()
}

impl InvolutiveSetDoc {
    pub fn build(&self) -> Result<InvolutiveSet, CliError> {
        involution("colors", &self.colors)
    }
}

fn build_collection(
    colors: &BTreeMap<Color, Color>,
    symmetry: SymmetryDoc,
    max_norm: usize,
    entries: &[Entry<Profile>],
    actions: &[Action<Profile>],
) -> Result<FinCollection, CliError> {
    let colors = involution("colors", colors)?;
    let mut c = at(
        "entries",
        FinCollection::new(
            colors,
            symmetry.into(),
            max_norm,
            entries.iter().map(|e| (e.profile.clone(), labels(&e.elements))),
        ),
    )?;
    for (k, a) in actions.iter().enumerate() {
        closure(
            &format!("actions[{k}]"),
            c.set_action(&a.profile, a.perm.clone(), &label(&a.input), &label(&a.output)),
        )?;
    }
    Ok(c)
}

type CollectionParts = (BTreeMap<Color, Color>, SymmetryDoc, Vec<Entry<Profile>>, Vec<Action<Profile>>);

fn collection_parts(c: &FinCollection) -> CollectionParts {
    (
        c.colors().table().clone(),
        c.symmetry().into(),
        entry_docs(c.entries()),
        action_docs(c.action_records()),
    )
}

impl CollectionDoc {
    pub fn build(&self) -> Result<FinCollection, CliError> {
        build_collection(&self.colors, self.symmetry, self.max_norm, &self.entries, &self.actions)
    }

    pub fn from_table(c: &FinCollection, name: Option<String>) -> Self {
        let (colors, symmetry, entries, actions) = collection_parts(c);
        CollectionDoc {
            name,
            colors,
            symmetry,
            max_norm: c.max_norm_value(),
            entries,
            actions,
        }
    }
}

impl CyclicDoc {
    pub fn build(&self) -> Result<TableCyclicOperad, CliError> {
        let c = build_collection(&self.colors, self.symmetry, self.max_norm, &self.entries, &self.actions)?;
        let mut p = TableCyclicOperad::new(c, self.unital);
        for (k, id) in self.identities.iter().enumerate() {
            closure(&format!("identities[{k}]"), p.set_identity(&id.color, label(&id.element)))?;
        }
        for (k, r) in self.compositions.iter().enumerate() {
            if r.j.is_some_and(|j| j != 0) {
                return Err(CliError::Schema(format!("compositions[{k}].j: only ∘ᵢ⁰ is tabulated")));
            }
            closure(
                &format!("compositions[{k}]"),
                p.set_composition(
                    &r.left.profile,
                    &label(&r.left.element),
                    r.i,
                    &r.right.profile,
                    &label(&r.right.element),
                    &label(&r.output),
                ),
            )?;
        }
        Ok(p)
    }

    pub fn from_table(p: &TableCyclicOperad, name: Option<String>) -> Self {
        let c = p.collection();
        let (colors, symmetry, entries, actions) = collection_parts(c);
        CyclicDoc {
            name,
            colors,
            symmetry,
            max_norm: c.max_norm_value(),
            unital: p.is_unital(),
            entries,
            actions,
            identities: identity_docs(p.identities()),
            compositions: composition_docs(p.composition_records()),
        }
    }
}

impl OperadDoc {
    pub fn build(&self) -> Result<FinOperad, CliError> {
        let mut o = at(
            "entries",
            FinOperad::new(
                self.colors.clone(),
                self.max_arity,
                self.entries.iter().map(|e| (e.profile.clone(), labels(&e.elements))),
            ),
        )?;
        for (k, a) in self.actions.iter().enumerate() {
            closure(
                &format!("actions[{k}]"),
                o.set_action(&a.profile, a.perm.clone(), &label(&a.input), &label(&a.output)),
            )?;
        }
        for (k, id) in self.identities.iter().enumerate() {
            closure(&format!("identities[{k}]"), o.set_identity(&id.color, label(&id.element)))?;
        }
        for (k, r) in self.compositions.iter().enumerate() {
            closure(
                &format!("compositions[{k}]"),
                o.set_composition(
                    &r.left.profile,
                    &label(&r.left.element),
                    r.i,
                    &r.right.profile,
                    &label(&r.right.element),
                    &label(&r.output),
                ),
            )?;
        }
        Ok(o)
    }

    pub fn from_table(o: &FinOperad, name: Option<String>) -> Self {
        OperadDoc {
            name,
            colors: cycad::operad::Operad::colors(o).clone(),
            max_arity: o.max_arity_value(),
            entries: entry_docs(o.entries()),
            actions: action_docs(o.action_records()),
            identities: identity_docs(o.identities()),
            compositions: composition_docs(o.composition_records()),
        }
    }
}

impl DioperadDoc {
    pub fn build(&self) -> Result<FinDioperad, CliError> {
        let mut d = FinDioperad::new(self.colors.clone(), self.max_norm);
        for (k, e) in self.entries.iter().enumerate() {
            at(&format!("entries[{k}]"), d.set_entry(e.profile.clone(), labels(&e.elements)))?;
        }
        for (k, a) in self.actions.iter().enumerate() {
            closure(
                &format!("actions[{k}]"),
                d.set_action(&a.profile, a.perm.clone(), &label(&a.input), label(&a.output)),
            )?;
        }
        for (k, id) in self.identities.iter().enumerate() {
            closure(&format!("identities[{k}]"), d.set_identity(&id.color, label(&id.element)))?;
        }
        for (k, r) in self.compositions.iter().enumerate() {
            let j = r
                .j
                .ok_or_else(|| CliError::Schema(format!("compositions[{k}].j: missing field `j`")))?;
            closure(
                &format!("compositions[{k}]"),
                d.set_composition(
                    &r.left.profile,
                    &label(&r.left.element),
                    r.i,
                    &r.right.profile,
                    &label(&r.right.element),
                    j,
                    label(&r.output),
                ),
            )?;
        }
        Ok(d)
    }

    pub fn from_table(d: &FinDioperad, name: Option<String>) -> Self {
        DioperadDoc {
            name,
            colors: d.colors().clone(),
            max_norm: d.max_norm(),
            entries: entry_docs(d.entries()),
            actions: d
                .actions()
                .iter()
                .map(|((dp, rho, x), y)| Action {
                    profile: dp.clone(),
                    perm: rho.clone(),
                    input: x.to_string(),
                    output: y.to_string(),
                })
                .collect(),
            identities: identity_docs(d.identities()),
            compositions: d
                .compositions()
                .iter()
                .map(|((dx, x, i, dy, y, j), z)| Composition {
                    left: Slot {
                        profile: dx.clone(),
                        element: x.to_string(),
                    },
                    i: *i,
                    right: Slot {
                        profile: dy.clone(),
                        element: y.to_string(),
                    },
                    j: Some(*j),
                    output: z.to_string(),
                })
                .collect(),
        }
    }
}

impl HryDoc {
    pub fn build(&self) -> Result<FinHryOperad, CliError> {
        let colors: BTreeMap<Color, Color> = self.colors.iter().map(|c| (c.clone(), c.clone())).collect();
        let c = build_collection(&colors, SymmetryDoc::Full, self.max_norm, &self.entries, &self.actions)?;
        let mut o = at("entries", FinHryOperad::new(c))?;
        o.set_point(label(&self.point));
        for (k, id) in self.identities.iter().enumerate() {
            closure(&format!("identities[{k}]"), o.set_identity(&id.color, label(&id.element)))?;
        }
        for (k, r) in self.compositions.iter().enumerate() {
            closure(
                &format!("compositions[{k}]"),
                o.set_composition(
                    &r.left.profile,
                    &label(&r.left.element),
                    r.i,
                    &r.right.profile,
                    &label(&r.right.element),
                    label(&r.output),
                ),
            )?;
        }
        Ok(o)
    }

    pub fn from_table(o: &FinHryOperad, name: Option<String>) -> Self {
        let c = o.collection();
        HryDoc {
            name,
            colors: c.colors().underlying(),
            max_norm: c.max_norm_value(),
            point: o.point().to_string(),
            entries: entry_docs(c.entries()),
            actions: action_docs(c.action_records()),
            identities: identity_docs(o.identities()),
            compositions: o
                .compositions()
                .iter()
                .map(|((cp, x, i, dp, y), z)| Composition {
                    left: Slot {
                        profile: cp.clone(),
                        element: x.to_string(),
                    },
                    i: *i,
                    right: Slot {
                        profile: dp.clone(),
                        element: y.to_string(),
                    },
                    j: None,
                    output: z.to_string(),
                })
                .collect(),
        }
    }
}

impl MorphismDoc {
    pub fn build(&self) -> Result<(TableCyclicOperad, TableCyclicOperad, TableMorphism), CliError> {
        let source = self.source.build().map_err(|e| e.within("source"))?;
        let target = self.target.build().map_err(|e| e.within("target"))?;
        let mut f = TableMorphism {
            color_map: self.colors.clone(),
            components: BTreeMap::new(),
        };
        for (k, c) in self.components.iter().enumerate() {
            if !source.collection().entry(&c.profile).contains(&label(&c.input)) {
                return Err(CliError::Closure(format!(
                    "components[{k}]: `{}` is not an element of entry {}",
                    c.input, c.profile
                )));
            }
            f.components.insert((c.profile.clone(), label(&c.input)), label(&c.output));
        }
        Ok((source, target, f))
    }

    pub fn from_tables(
        source: &TableCyclicOperad,
        target: &TableCyclicOperad,
        f: &TableMorphism,
        name: Option<String>,
    ) -> Self {
        MorphismDoc {
            name,
            source: CyclicDoc::from_table(source, None),
            target: CyclicDoc::from_table(target, None),
            colors: f.color_map.clone(),
            components: f
                .components
                .iter()
                .map(|((p, x), y)| ComponentDoc {
                    profile: p.clone(),
                    input: x.to_string(),
                    output: y.to_string(),
                })
                .collect(),
        }
    }
}

/// A parsed term with its valuation.
pub struct LoadedTerm {
    pub term: Term,
    pub colors: Option<InvolutiveSet>,
    pub bindings: Vec<Binding>,
}

impl LoadedTerm {
    pub fn profiles(&self) -> BTreeMap<String, Profile> {
        self.bindings.iter().map(|b| (b.name.clone(), b.profile.clone())).collect()
    }

    /// The valuation in `p`, parsing each element against its profile.
    pub fn valuation<P: Collection>(&self, p: &P) -> Result<Valuation<P::Elem>, CliError> {
        let mut env = Valuation::new();
        for (k, b) in self.bindings.iter().enumerate() {
            let x = closure(&format!("valuation[{k}]"), p.parse_element(&b.profile, &b.element))?;
            env.insert(&b.name, b.profile.clone(), x);
        }
        Ok(env)
    }
}

impl TermDoc {
    pub fn build(&self) -> Result<LoadedTerm, CliError> {
        let term = parse_term(&self.term).map_err(|e| CliError::Schema(format!("term: {e}")))?;
        let colors = self.colors.as_ref().map(|c| involution("colors", c)).transpose()?;
        let mut seen = BTreeSet::new();
        for (k, b) in self.valuation.iter().enumerate() {
            if !seen.insert(&b.name) {
                return Err(CliError::Schema(format!("valuation[{k}].name: `{}` bound twice", b.name)));
            }
        }
        Ok(LoadedTerm {
            term,
            colors,
            bindings: self.valuation.clone(),
        })
    }

    /// Canonical form: the printed term and bindings sorted by name.
    pub fn canonical(&self) -> Result<Self, CliError> {
        let t = self.build()?;
        let mut valuation = self.valuation.clone();
        valuation.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(TermDoc {
            name: self.name.clone(),
            term: print_term(&t.term),
            colors: self.colors.clone(),
            valuation,
        })
    }
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::InvolutiveSet(_) => "involutive-set",
            Document::Collection(_) => "collection",
            Document::Operad(_) => "operad",
            Document::CyclicOperad(_) => "cyclic-operad",
            Document::Dioperad(_) => "dioperad",
            Document::HryOperad(_) => "hry-operad",
            Document::Morphism(_) => "morphism",
            Document::Term(_) => "term",
        }
    }

    /// Checks the document and rewrites it in canonical form.
    pub fn canonical(&self) -> Result<Document, CliError> {
        Ok(match self {
            Document::InvolutiveSet(d) => {
                d.build()?;
                Document::InvolutiveSet(d.clone())
            }
            Document::Collection(d) => Document::Collection(CollectionDoc::from_table(&d.build()?, d.name.clone())),
            Document::Operad(d) => Document::Operad(OperadDoc::from_table(&d.build()?, d.name.clone())),
            Document::CyclicOperad(d) => Document::CyclicOperad(CyclicDoc::from_table(&d.build()?, d.name.clone())),
            Document::Dioperad(d) => Document::Dioperad(DioperadDoc::from_table(&d.build()?, d.name.clone())),
            Document::HryOperad(d) => Document::HryOperad(HryDoc::from_table(&d.build()?, d.name.clone())),
            Document::Morphism(d) => {
                let (s, t, f) = d.build()?;
                Document::Morphism(MorphismDoc::from_tables(&s, &t, &f, d.name.clone()))
            }
            Document::Term(d) => Document::Term(d.canonical()?),
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }
}

fn typed<T: DeserializeOwned>(value: Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        CliError::Schema(format!("{path}: {}", e.into_inner()))
    })
}

/// Parses and checks a document, returning it in canonical form.
pub fn parse(text: &str) -> Result<Document, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let mut value: Value =
        serde_path_to_error::deserialize(de).map_err(|e| CliError::Schema(format!("not JSON: {}", e.into_inner())))?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| CliError::Schema("the document must be a JSON object".into()))?;
    let kind = match obj.remove("kind") {
        Some(Value::String(k)) => k,
        Some(_) => return Err(CliError::Schema("kind: expected a string".into())),
        None => return Err(CliError::Schema("missing field `kind`".into())),
    };
    let doc = match kind.as_str() {
        "involutive-set" => Document::InvolutiveSet(typed(value)?),
        "collection" => Document::Collection(typed(value)?),
        "operad" => Document::Operad(typed(value)?),
        "cyclic-operad" => Document::CyclicOperad(typed(value)?),
        "dioperad" => Document::Dioperad(typed(value)?),
        "hry-operad" => Document::HryOperad(typed(value)?),
        "morphism" => Document::Morphism(typed(value)?),
        "term" => Document::Term(typed(value)?),
        other => {
            return Err(CliError::Schema(format!(
                "kind: unknown kind `{other}`, expected one of {}",
                KINDS.join(", ")
            )))
        }
    };
    doc.canonical()
}

pub fn load(path: &std::path::Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| e.within(&path.display().to_string()))
}
