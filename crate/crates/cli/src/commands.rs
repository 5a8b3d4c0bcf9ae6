use std::path::Path;

use cycad::collection::{validate_collection_as, Collection, Symmetry};
use cycad::constructions::{
    cyclic_to_dioperad, cyclic_to_hry, dioperad_to_cyclic, hry_to_cyclic, FromDioperad, FromHry, Polarization,
};
use cycad::cyclic::{positivize, validate, validate_cyclic_morphism, CyclicOperad, Rotations, TableCyclicOperad, Variant};
use cycad::fixtures;
use cycad::functors::{
    forget_positive, triangle_forget_fr, triangle_forget_lf, triangle_left, triangle_right, validate_units_fr,
    validate_units_lf, Forget, LeftAdjoint, RightAdjoint,
};
use cycad::operad::{validate_operad, FinOperad, Operad};
use cycad::report::{CheckConfig, Report};
use cycad::termlang::{eval_term, infer_profile, print_term};
use serde::Serialize;

use crate::doc::{self, Binding, CyclicDoc, DioperadDoc, Document, HryDoc, OperadDoc, TermDoc};
use crate::dot;
use crate::error::CliError;
use crate::Outcome;

fn report(r: Report) -> Outcome {
    let mut text = serde_json::to_string_pretty(&r).expect("reports serialize");
    text.push('\n');
    Outcome { text, ok: r.is_clean() }
}

fn document(d: Document) -> Outcome {
    Outcome {
        text: d.to_json(),
        ok: true,
    }
}

fn wrong_kind(d: &Document, wanted: &str) -> CliError {
    CliError::Usage(format!("expected a {wanted} document, found {}", d.kind()))
}

fn name_of(d: &Document) -> Option<String> {
    match d {
        Document::InvolutiveSet(x) => x.name.clone(),
        Document::Collection(x) => x.name.clone(),
        Document::Operad(x) => x.name.clone(),
        Document::CyclicOperad(x) => x.name.clone(),
        Document::Dioperad(x) => x.name.clone(),
        Document::HryOperad(x) => x.name.clone(),
        Document::Morphism(x) => x.name.clone(),
        Document::Term(x) => x.name.clone(),
    }
}

fn applied(functor: &str, d: &Document) -> Option<String> {
    name_of(d).map(|n| format!("{functor}({n})"))
}

fn cyclic_variant<P: CyclicOperad>(p: &P, unital: bool, nonsigma: bool, cfg: &CheckConfig) -> Report {
    let rotations = nonsigma || p.symmetry() == Symmetry::Cyclic;
    let variant = Variant {
        unital,
        symmetry: if rotations { Symmetry::Cyclic } else { Symmetry::Full },
    };
    if rotations && p.symmetry() == Symmetry::Full {
        validate(&Rotations::new(p), variant, cfg)
    } else {
        validate(p, variant, cfg)
    }
}

pub fn check(file: &Path, unital: bool, nonsigma: bool, bound: usize) -> Result<Outcome, CliError> {
    let cfg = CheckConfig::with_bound(bound);
    let r = match doc::load(file)? {
        Document::InvolutiveSet(d) => {
            d.build()?;
            Report::new()
        }
        Document::Collection(d) => {
            let c = d.build()?;
            let sym = if nonsigma { Symmetry::Cyclic } else { c.symmetry() };
            validate_collection_as(&c, sym, &cfg)
        }
        Document::Operad(d) => validate_operad(&d.build()?, &cfg),
        Document::CyclicOperad(d) => cyclic_variant(&d.build()?, unital, nonsigma, &cfg),
        Document::Dioperad(d) => {
            let d = d.build()?;
            cyclic_variant(&FromDioperad::new(&d), unital, nonsigma, &cfg)
        }
        Document::HryOperad(d) => {
            let o = d.build()?;
            let mut r = validate_operad(&o, &cfg);
            r.merge(cyclic_variant(&FromHry::new(&o), unital, nonsigma, &cfg));
            r
        }
        Document::Morphism(d) => {
            let (s, t, f) = d.build()?;
            validate_cyclic_morphism(&f, &s, &t, &cfg)
        }
        Document::Term(d) => {
            let t = d.build()?;
            if let Some(colors) = &t.colors {
                infer_profile(colors, &t.profiles(), &t.term)?;
            }
            Report::new()
        }
    };
    Ok(report(r))
}

pub fn functor(functor: &str, file: &Path, bound: usize, max_entry: u128) -> Result<Outcome, CliError> {
    let d = doc::load(file)?;
    let name = applied(functor, &d);
    let out = match (functor, &d) {
        ("F", Document::CyclicOperad(c)) => {
            let p = c.build()?;
            Document::Operad(OperadDoc::from_table(
                &FinOperad::materialize(&Forget::new(&p), bound, max_entry)?,
                name,
            ))
        }
        ("G", Document::CyclicOperad(c)) => {
            let p = c.build()?;
            Document::CyclicOperad(CyclicDoc::from_table(
                &TableCyclicOperad::materialize(&positivize(&p), bound, max_entry)?,
                name,
            ))
        }
        ("L", Document::Operad(o)) => {
            let o = o.build()?;
            Document::CyclicOperad(CyclicDoc::from_table(
                &TableCyclicOperad::materialize(&LeftAdjoint::new(&o), bound, max_entry)?,
                name,
            ))
        }
        ("R", Document::Operad(o)) => {
            let o = o.build()?;
            Document::CyclicOperad(CyclicDoc::from_table(
                &TableCyclicOperad::materialize(&RightAdjoint::new(&o), bound, max_entry)?,
                name,
            ))
        }
        ("F" | "G", _) => return Err(wrong_kind(&d, "cyclic-operad")),
        _ => return Err(wrong_kind(&d, "operad")),
    };
    Ok(document(out))
}

fn adjunction_on_operad<O: Operad>(lf: bool, o: &O, cfg: &CheckConfig) -> Report {
    let mut r;
    if lf {
        r = triangle_left(o, 0, cfg);
        r.merge(validate_units_lf(o, &LeftAdjoint::new(o), cfg));
    } else {
        r = triangle_right(o, cfg);
        r.merge(validate_units_fr(o, &RightAdjoint::new(o), cfg));
        r.merge(forget_positive(o, cfg));
    }
    r
}

pub fn adjoint_check(lf: bool, file: &Path, bound: usize) -> Result<Outcome, CliError> {
    let cfg = CheckConfig::with_bound(bound);
    let r = match doc::load(file)? {
        Document::Operad(d) => adjunction_on_operad(lf, &d.build()?, &cfg),
        Document::CyclicOperad(d) => {
            let p = d.build()?;
            let fp = Forget::new(&p);
            let mut r = if lf {
                let mut r = triangle_forget_lf(&p, 0, &cfg);
                r.merge(validate_units_lf(&fp, &p, &cfg));
                r
            } else {
                let mut r = triangle_forget_fr(&p, &cfg);
                r.merge(validate_units_fr(&fp, &p, &cfg));
                r
            };
            r.merge(adjunction_on_operad(lf, &fp, &cfg));
            r
        }
        other => return Err(wrong_kind(&other, "operad or cyclic-operad")),
    };
    Ok(report(r))
}

#[derive(Serialize)]
struct Evaluated {
    profile: cycad::profile::Profile,
    element: String,
}

pub fn eval(term: &Path, operad: &Path) -> Result<Outcome, CliError> {
    let t = match doc::load(term)? {
        Document::Term(t) => t.build()?,
        other => return Err(wrong_kind(&other, "term")),
    };
    let p = match doc::load(operad)? {
        Document::CyclicOperad(c) => c.build()?,
        other => return Err(wrong_kind(&other, "cyclic-operad")),
    };
    let env = t.valuation(&p)?;
    let (profile, x) = eval_term(&p, &env, &t.term)?;
    let mut text = serde_json::to_string_pretty(&Evaluated {
        profile,
        element: x.to_string(),
    })
    .expect("results serialize");
    text.push('\n');
    Ok(Outcome { text, ok: true })
}

pub fn convert(dioperad: bool, to_cyclic: bool, file: &Path, bound: usize) -> Result<Outcome, CliError> {
    let d = doc::load(file)?;
    let name = name_of(&d);
    let out = match (dioperad, to_cyclic, &d) {
        (true, true, Document::Dioperad(x)) => {
            Document::CyclicOperad(CyclicDoc::from_table(&dioperad_to_cyclic(&x.build()?)?, name))
        }
        (false, true, Document::HryOperad(x)) => {
            Document::CyclicOperad(CyclicDoc::from_table(&hry_to_cyclic(&x.build()?)?, name))
        }
        (true, false, Document::CyclicOperad(x)) => {
            let p = x.build()?;
            let pol = Polarization::of(p.colors())?;
            Document::Dioperad(DioperadDoc::from_table(&cyclic_to_dioperad(&p, &pol, bound)?, name))
        }
        (false, false, Document::CyclicOperad(x)) => {
            Document::HryOperad(HryDoc::from_table(&cyclic_to_hry(&x.build()?, bound)?, name))
        }
        (true, true, _) => return Err(wrong_kind(&d, "dioperad")),
        (false, true, _) => return Err(wrong_kind(&d, "hry-operad")),
        (_, false, _) => return Err(wrong_kind(&d, "cyclic-operad")),
    };
    Ok(document(out))
}

pub fn export_dot(term: &Path) -> Result<Outcome, CliError> {
    let t = match doc::load(term)? {
        Document::Term(t) => t.build()?,
        other => return Err(wrong_kind(&other, "term")),
    };
    Ok(Outcome {
        text: dot::export_dot(&t.term, t.colors.as_ref(), &t.profiles())?,
        ok: true,
    })
}

/// The bundled fixture `name` as a document.
pub fn fixture_document(name: &str) -> Result<Document, CliError> {
    let named = Some(name.to_string());
    Ok(match name {
        "pairing" => Document::CyclicOperad(CyclicDoc::from_table(&fixtures::pairing()?, named)),
        "anti-involutive" => Document::CyclicOperad(CyclicDoc::from_table(&fixtures::anti_involutive()?, named)),
        "end-operad" => Document::Operad(OperadDoc::from_table(&fixtures::end_table()?, named)),
        "r-end" => Document::CyclicOperad(CyclicDoc::from_table(&fixtures::r_end()?, named)),
        "l-end" => Document::CyclicOperad(CyclicDoc::from_table(&fixtures::l_end()?, named)),
        "dioperad" => Document::Dioperad(DioperadDoc::from_table(&fixtures::dioperad()?, named)),
        "hry" => Document::HryOperad(HryDoc::from_table(&fixtures::hry()?, named)),
        "term" => {
            let (t, env) = fixtures::term()?;
            let colors = fixtures::r_end()?.colors().table().clone();
            Document::Term(TermDoc {
                name: named,
                term: print_term(&t),
                colors: Some(colors),
                valuation: env
                    .iter()
                    .map(|(name, (profile, x))| Binding {
                        name: name.clone(),
                        profile: profile.clone(),
                        element: x.to_string(),
                    })
                    .collect(),
            })
        }
        other => return Err(CliError::Usage(format!("no fixture named `{other}`"))),
    })
}

pub fn fixture(name: &str) -> Result<Outcome, CliError> {
    fixture_document(name).map(document)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_survives_a_load_and_save_byte_for_byte() {
        for name in fixtures::NAMES {
            let text = fixture_document(name).unwrap().to_json();
            let again = doc::parse(&text).unwrap().to_json();
            assert_eq!(text, again, "{name}");
        }
    }

    #[test]
    fn reordered_input_saves_canonically() {
        let text = fixture_document("pairing").unwrap().to_json();
        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        v["entries"].as_array_mut().unwrap().reverse();
        v["compositions"].as_array_mut().unwrap().reverse();
        assert_eq!(doc::parse(&v.to_string()).unwrap().to_json(), text);
    }
}
