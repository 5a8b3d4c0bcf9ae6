//! Grafting trees of terms as Graphviz DOT.

use std::collections::BTreeMap;
use std::fmt::Write;

use cycad::profile::{Color, InvolutiveSet, Permutation, Profile};
use cycad::termlang::{PermExpr, Term};

use crate::error::CliError;

/// A leg of the tree: the node it hangs off, its index there, its color.
#[derive(Clone, Debug)]
struct Leg {
    node: usize,
    local: usize,
    color: Color,
}

#[derive(Default)]
struct Tree {
    nodes: Vec<String>,
    edges: Vec<(Leg, Leg, usize, usize)>,
}

impl Tree {
    fn legs(
        &mut self,
        t: &Term,
        colors: Option<&InvolutiveSet>,
        profiles: &BTreeMap<String, Profile>,
    ) -> Result<Vec<Leg>, CliError> {
        let unsound = |m: String| CliError::Usage(format!("unsound term: {m}"));
        let leaf = |tree: &mut Tree, name: String, p: Profile| {
            let node = tree.nodes.len();
            tree.nodes.push(name);
            p.0.into_iter()
                .enumerate()
                .map(|(local, color)| Leg { node, local, color })
                .collect()
        };
        match t {
            Term::Var(name) => {
                let p = profiles
                    .get(name)
                    .cloned()
                    .ok_or_else(|| unsound(format!("no profile for `{name}`")))?;
                Ok(leaf(self, name.clone(), p))
            }
            Term::Id(c) => {
                let dagger = match colors {
                    Some(colors) => colors.dagger(c)?,
                    None => c.clone(),
                };
                Ok(leaf(self, format!("id_{c}"), Profile(vec![dagger, c.clone()])))
            }
            Term::Compose { left, i, j, right } => {
                let l = self.legs(left, colors, profiles)?;
                let r = self.legs(right, colors, profiles)?;
                let (li, rj) = match (l.get(*i), r.get(*j)) {
                    (Some(a), Some(b)) => (a.clone(), b.clone()),
                    _ => return Err(unsound(format!("no legs {i} and {j} to graft in {t}"))),
                };
                if let Some(colors) = colors {
                    if li.color != colors.dagger(&rj.color)? {
                        return Err(unsound(format!("`{}` does not graft onto `{}` in {t}", li.color, rj.color)));
                    }
                }
                self.edges.push((li, rj, *i, *j));
                let mut out = l[..*i].to_vec();
                out.extend_from_slice(&r[j + 1..]);
                out.extend_from_slice(&r[..*j]);
                out.extend_from_slice(&l[i + 1..]);
                Ok(out)
            }
            Term::Act { perm, term } => {
                let legs = self.legs(term, colors, profiles)?;
                let sigma = match perm {
                    PermExpr::Tau(k) => Permutation::tau_power(legs.len(), *k),
                    PermExpr::Literal(s) => s.clone(),
                };
                sigma.act(&legs).map_err(|e| unsound(format!("{e} in {t}")))
            }
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text for the grafting tree of `t`: a node per variable or identity,
/// an edge labeled `(i,j)` per grafting, and a point per external leg
/// labeled by its index in the result.
pub fn export_dot(
    t: &Term,
    colors: Option<&InvolutiveSet>,
    profiles: &BTreeMap<String, Profile>,
) -> Result<String, CliError> {
    let mut tree = Tree::default();
    let legs = tree.legs(t, colors, profiles)?;
    let mut out = String::new();
    writeln!(out, "graph term {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (k, name) in tree.nodes.iter().enumerate() {
        writeln!(out, "  n{k} [label={}];", quote(name)).unwrap();
    }
    for (a, b, i, j) in &tree.edges {
        writeln!(
            out,
            "  n{} -- n{} [label={}, taillabel={}, headlabel={}];",
            a.node,
            b.node,
            quote(&format!("({i},{j})")),
            quote(&a.color.to_string()),
            quote(&b.color.to_string())
        )
        .unwrap();
    }
    for (t, leg) in legs.iter().enumerate() {
        writeln!(out, "  leg{t} [shape=point, xlabel={}];", quote(&t.to_string())).unwrap();
        writeln!(
            out,
            "  n{} -- leg{t} [label={}, taillabel={}];",
            leg.node,
            quote(&leg.color.to_string()),
            quote(&leg.local.to_string())
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}
