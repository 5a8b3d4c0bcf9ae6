//! Elements of entries.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use itertools::Itertools;

/// Anything that can live in an entry of a finite operad: compared by
/// value and printable for reports and tables.
pub trait Element: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> Element for T where T: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

/// Element of a table-backed structure.
pub type Label = Arc<str>;

pub fn label(text: &str) -> Label {
    Arc::from(text)
}

/// A finite product element, one component per factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tuple<E>(pub Vec<E>);

impl<E: fmt::Display> fmt::Display for Tuple<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0.iter().join(","))
    }
}

/// Splits `<a,b,…>` into its top-level components, respecting nested
/// brackets of every kind.
pub fn split_tuple(text: &str) -> Option<Vec<&str>> {
    let body = text.strip_prefix('<')?.strip_suffix('>')?;
    if body.is_empty() {
        return Some(Vec::new());
    }
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in body.char_indices() {
        match ch {
            '<' | '(' | '[' => depth += 1,
            '>' | ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&body[start..k]);
                start = k + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then(|| {
        parts.push(&body[start..]);
        parts
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_round_trip() {
        let t = Tuple(vec![Tuple(vec![1, 2]), Tuple(vec![])]);
        let text = t.to_string();
        assert_eq!(text, "<<1,2>,<>>");
        assert_eq!(split_tuple(&text).unwrap(), vec!["<1,2>", "<>"]);
        assert_eq!(split_tuple("<>").unwrap(), Vec::<&str>::new());
        assert!(split_tuple("<a,(b>").is_none());
    }
}
