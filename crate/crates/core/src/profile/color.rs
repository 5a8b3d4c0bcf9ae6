use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A color. Plain names come from input files; polarized and paired colors
/// are produced by the free and cofree involutive sets on a plain set.
///
/// The textual form is `name`, `base^0` / `base^1`, or `(first,second)`,
/// and [`FromStr`] parses exactly what [`fmt::Display`] prints.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Named(Arc<str>),
    /// `base^polarity`, an element of `Σ₂ × X`.
    Polar(Arc<Color>, u8),
    /// `(first, second)`, an element of `X^{Σ₂}`.
    Pair(Arc<Color>, Arc<Color>),
}

impl Color {
    pub fn named(name: &str) -> Self {
        Color::Named(Arc::from(name))
    }

    pub fn polar(base: Color, polarity: u8) -> Self {
        debug_assert!(polarity < 2);
        Color::Polar(Arc::new(base), polarity)
    }

    pub fn pair(first: Color, second: Color) -> Self {
        Color::Pair(Arc::new(first), Arc::new(second))
    }

    /// Base color and polarity of a polarized color.
    pub fn as_polar(&self) -> Option<(&Color, u8)> {
        match self {
            Color::Polar(base, a) => Some((base, *a)),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Color, &Color)> {
        match self {
            Color::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Named(name) => f.write_str(name),
            Color::Polar(base, a) => write!(f, "{base}^{a}"),
            Color::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Characters that delimit a color name in text.
pub(crate) fn is_name_char(ch: char) -> bool {
    !ch.is_whitespace() && !matches!(ch, '(' | ')' | '[' | ']' | ',' | '^')
}

/// Parses one color starting at the front of `text`, returning it and the
/// number of bytes consumed.
pub(crate) fn parse_color_prefix(text: &str) -> Option<(Color, usize)> {
    let (mut color, mut pos) = if let Some(rest) = text.strip_prefix('(') {
        let (first, a) = parse_color_prefix(rest)?;
        let rest = &rest[a..];
        let rest2 = rest.strip_prefix(',')?;
        let (second, b) = parse_color_prefix(rest2)?;
        let rest3 = rest2[b..].strip_prefix(')')?;
        (Color::pair(first, second), text.len() - rest3.len())
    } else {
        let len: usize = text
            .chars()
            .take_while(|&ch| is_name_char(ch))
            .map(char::len_utf8)
            .sum();
        if len == 0 {
            return None;
        }
        (Color::named(&text[..len]), len)
    };
    loop {
        let rest = &text[pos..];
        if let Some(tail) = rest.strip_prefix("^0") {
            color = Color::polar(color, 0);
            pos = text.len() - tail.len();
        } else if let Some(tail) = rest.strip_prefix("^1") {
            color = Color::polar(color, 1);
            pos = text.len() - tail.len();
        } else {
            break;
        }
    }
    Some((color, pos))
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_color_prefix(s) {
            Some((color, used)) if used == s.len() => Ok(color),
            _ => Err(Error::Invalid(format!("malformed color `{s}`"))),
        }
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite set with an involution `c ↦ c†`, stored as an explicit table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvolutiveSet {
    dagger: BTreeMap<Color, Color>,
}

impl InvolutiveSet {
    /// Builds the set from `(color, dagger)` pairs. Every color must appear
    /// exactly once on the left and the table must square to the identity.
    pub fn new(table: impl IntoIterator<Item = (Color, Color)>) -> Result<Self> {
        let mut dagger = BTreeMap::new();
        for (c, d) in table {
            if let Some(prev) = dagger.insert(c.clone(), d.clone()) {
                if prev != d {
                    return Err(Error::Invalid(format!("color `{c}` listed twice")));
                }
            }
        }
        for (c, d) in &dagger {
            match dagger.get(d) {
                Some(back) if back == c => {}
                Some(back) => {
                    return Err(Error::NotInvolutive {
                        color: c.clone(),
                        image: d.clone(),
                        back: back.clone(),
                    })
                }
                None => return Err(Error::UnknownColor(d.clone())),
            }
        }
        Ok(InvolutiveSet { dagger })
    }

    /// The trivial involution on a plain set.
    pub fn trivial(colors: impl IntoIterator<Item = Color>) -> Self {
        InvolutiveSet {
            dagger: colors.into_iter().map(|c| (c.clone(), c)).collect(),
        }
    }

    pub fn dagger(&self, c: &Color) -> Result<Color> {
        self.dagger
            .get(c)
            .cloned()
            .ok_or_else(|| Error::UnknownColor(c.clone()))
    }

    pub fn contains(&self, c: &Color) -> bool {
        self.dagger.contains_key(c)
    }

    pub fn colors(&self) -> impl Iterator<Item = &Color> + '_ {
        self.dagger.keys()
    }

    pub fn len(&self) -> usize {
        self.dagger.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dagger.is_empty()
    }

    pub fn table(&self) -> &BTreeMap<Color, Color> {
        &self.dagger
    }

    pub fn is_trivial(&self) -> bool {
        self.dagger.iter().all(|(c, d)| c == d)
    }

    /// Forgets the involution.
    pub fn underlying(&self) -> BTreeSet<Color> {
        self.dagger.keys().cloned().collect()
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = &Color> + '_ {
        self.dagger.iter().filter(|(c, d)| c == d).map(|(c, _)| c)
    }
}

/// The free involutive set `Σ₂ × X`: elements `x^0`, `x^1` with `(x^0)† = x^1`.
pub fn iota_lower(plain: &BTreeSet<Color>) -> InvolutiveSet {
    InvolutiveSet {
        dagger: plain
            .iter()
            .flat_map(|x| {
                [
                    (Color::polar(x.clone(), 0), Color::polar(x.clone(), 1)),
                    (Color::polar(x.clone(), 1), Color::polar(x.clone(), 0)),
                ]
            })
            .collect(),
    }
}

/// The cofree involutive set `X^{Σ₂}`: ordered pairs with `(a,b)† = (b,a)`.
pub fn iota_upper(plain: &BTreeSet<Color>) -> InvolutiveSet {
    let mut dagger = BTreeMap::new();
    for a in plain {
        for b in plain {
            dagger.insert(
                Color::pair(a.clone(), b.clone()),
                Color::pair(b.clone(), a.clone()),
            );
        }
    }
    InvolutiveSet { dagger }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(name: &str) -> Color {
        Color::named(name)
    }

    #[test]
    fn swap_involution() {
        let s = InvolutiveSet::new([(c("a"), c("b")), (c("b"), c("a"))]).unwrap();
        assert_eq!(s.dagger(&c("a")).unwrap(), c("b"));
        for x in s.colors() {
            assert_eq!(&s.dagger(&s.dagger(x).unwrap()).unwrap(), x);
        }
        assert!(matches!(s.dagger(&c("z")), Err(Error::UnknownColor(_))));
    }

    #[test]
    fn trivial_involution() {
        let s = InvolutiveSet::trivial([c("c")]);
        assert_eq!(s.dagger(&c("c")).unwrap(), c("c"));
        assert!(s.is_trivial());
    }

    #[test]
    fn rejects_non_involution() {
        let err = InvolutiveSet::new([(c("a"), c("b")), (c("b"), c("c")), (c("c"), c("a"))])
            .unwrap_err();
        assert!(matches!(err, Error::NotInvolutive { .. }));
    }

    #[test]
    fn lower_on_point() {
        let s = iota_lower(&BTreeSet::from([c("*")]));
        assert_eq!(s.len(), 2);
        let zero = Color::polar(c("*"), 0);
        assert_eq!(s.dagger(&zero).unwrap(), Color::polar(c("*"), 1));
        assert_eq!(s.fixed_points().count(), 0);
    }

    #[test]
    fn upper_on_point_and_pair() {
        let s = iota_upper(&BTreeSet::from([c("*")]));
        assert_eq!(s.len(), 1);
        assert_eq!(s.fixed_points().count(), 1);
        let s = iota_upper(&BTreeSet::from([c("a"), c("b")]));
        assert_eq!(s.len(), 4);
        let fixed: Vec<_> = s.fixed_points().cloned().collect();
        assert_eq!(
            fixed,
            vec![Color::pair(c("a"), c("a")), Color::pair(c("b"), c("b"))]
        );
    }

    #[test]
    fn color_text_round_trip() {
        let samples = [
            c("c†"),
            Color::polar(c("*"), 1),
            Color::pair(Color::polar(c("a"), 0), c("b")),
            Color::polar(Color::pair(c("x"), c("y")), 0),
        ];
        for color in samples {
            let text = color.to_string();
            assert_eq!(text.parse::<Color>().unwrap(), color, "{text}");
        }
        assert!("(a,b".parse::<Color>().is_err());
        assert!("".parse::<Color>().is_err());
    }
}
