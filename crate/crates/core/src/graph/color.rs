use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

use super::{Graph, GraphError};

/// Separator used when one palette is nested inside another
/// (`"A1/ff"`). Plain labels may not contain it, so namespaced palettes
/// can never collide with a label supplied as a prediction.
pub const NAMESPACE_SEP: char = '/';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("color label is empty")]
    Empty,
    #[error("color label {0:?} contains reserved character {1:?}")]
    Reserved(String, char),
    #[error("color {0:?} is not of the form <palette>#<rank>")]
    Malformed(String),
}

/// Opaque color token. Equality is exact token equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorLabel(Arc<str>);

impl ColorLabel {
    /// A plain label: non-empty, without `#` or `/`.
    pub fn new(s: &str) -> Result<Self, LabelError> {
        if s.is_empty() {
            return Err(LabelError::Empty);
        }
        for reserved in ['#', NAMESPACE_SEP] {
            if s.contains(reserved) {
                return Err(LabelError::Reserved(s.to_owned(), reserved));
            }
        }
        Ok(ColorLabel(s.into()))
    }

    /// `prefix/inner`. `prefix` must itself be a plain label.
    pub fn namespaced(prefix: &str, inner: &ColorLabel) -> Self {
        debug_assert!(ColorLabel::new(prefix).is_ok(), "bad namespace {prefix:?}");
        ColorLabel(format!("{prefix}{NAMESPACE_SEP}{}", inner.0).into())
    }

    /// Accepts plain or namespaced labels (`a/b/c`, every segment plain).
    pub fn parse_palette(s: &str) -> Result<Self, LabelError> {
        if s.is_empty() {
            return Err(LabelError::Empty);
        }
        for segment in s.split(NAMESPACE_SEP) {
            ColorLabel::new(segment)?;
        }
        Ok(ColorLabel(s.into()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_namespaced(&self) -> bool {
        self.0.contains(NAMESPACE_SEP)
    }
}

impl fmt::Debug for ColorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for ColorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for ColorLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// A color `palette#rank`. Ranks order the colors within a palette.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color {
    pub palette: ColorLabel,
    pub rank: u32,
}

impl Color {
    pub fn new(palette: ColorLabel, rank: u32) -> Self {
        Color { palette, rank }
    }

    /// Same rank, palette moved under `prefix`.
    pub fn namespaced(&self, prefix: &str) -> Self {
        Color {
            palette: ColorLabel::namespaced(prefix, &self.palette),
            rank: self.rank,
        }
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.palette, self.rank)
    }
}

impl FromStr for Color {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || LabelError::Malformed(s.to_owned());
        let (palette, rank) = s.rsplit_once('#').ok_or_else(malformed)?;
        if rank.is_empty() || !rank.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let rank = rank.parse::<u32>().map_err(|_| malformed())?;
        let palette = ColorLabel::parse_palette(palette)?;
        Ok(Color { palette, rank })
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Vertex → color assignment, possibly partial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<&Color> {
        self.colors.get(v).and_then(Option::as_ref)
    }

    pub fn set(&mut self, v: usize, color: Color) {
        self.colors[v] = Some(color);
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Option<&Color>)> {
        self.colors.iter().enumerate().map(|(v, c)| (v, c.as_ref()))
    }
}

impl FromIterator<Color> for Coloring {
    fn from_iter<T: IntoIterator<Item = Color>>(iter: T) -> Self {
        Coloring {
            colors: iter.into_iter().map(Some).collect(),
        }
    }
}

/// True iff no edge has equal endpoint colors. Every vertex must be colored.
pub fn is_proper(graph: &Graph, coloring: &Coloring) -> Result<bool, GraphError> {
    if coloring.len() != graph.n() {
        return Err(GraphError::ColoringSize {
            got: coloring.len(),
            n: graph.n(),
        });
    }
    if let Some(v) = (0..graph.n()).find(|&v| coloring.get(v).is_none()) {
        return Err(GraphError::Uncolored(v));
    }
    Ok(graph
        .edges()
        .iter()
        .all(|&(u, v)| coloring.get(u) != coloring.get(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &str, r: u32) -> Color {
        Color::new(ColorLabel::new(p).unwrap(), r)
    }

    #[test]
    fn labels_validate() {
        assert!(ColorLabel::new("c1").is_ok());
        assert_eq!(ColorLabel::new(""), Err(LabelError::Empty));
        assert!(matches!(ColorLabel::new("a#b"), Err(LabelError::Reserved(_, '#'))));
        assert!(matches!(ColorLabel::new("a/b"), Err(LabelError::Reserved(_, '/'))));
    }

    #[test]
    fn color_text_form() {
        let col = c("c1", 0);
        assert_eq!(col.to_string(), "c1#0");
        assert_eq!("c1#0".parse::<Color>().unwrap(), col);
        let nested = col.namespaced("A2");
        assert_eq!(nested.to_string(), "A2/c1#0");
        assert_eq!("A2/c1#0".parse::<Color>().unwrap(), nested);
        for bad in ["", "#0", "c1", "c1#", "c1#-1", "c1#+1", "a//b#1", "a#b#1"] {
            assert!(bad.parse::<Color>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn k2_same_color_is_improper() {
        let g = Graph::complete(2);
        let col: Coloring = [c("p", 0), c("p", 0)].into_iter().collect();
        assert!(!is_proper(&g, &col).unwrap());
    }

    #[test]
    fn k2_distinct_ranks_is_proper() {
        let g = Graph::complete(2);
        let col: Coloring = [c("p", 0), c("p", 1)].into_iter().collect();
        assert!(is_proper(&g, &col).unwrap());
    }

    #[test]
    fn c5_two_colors_is_improper() {
        let g = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let col: Coloring = (0..5).map(|i| c("p", i % 2)).collect();
        assert!(!is_proper(&g, &col).unwrap());
    }

    #[test]
    fn uncolored_vertex_reported() {
        let g = Graph::complete(3);
        let mut col = Coloring::uncolored(3);
        col.set(0, c("p", 0));
        col.set(2, c("p", 1));
        assert_eq!(is_proper(&g, &col), Err(GraphError::Uncolored(1)));
    }
}
