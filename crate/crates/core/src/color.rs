use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
    Green,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Blue, Color::Green];

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
            Color::Green => "green",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            "green" => Ok(Color::Green),
            other => Err(format!("unknown color name {other:?}")),
        }
    }
}

/// A partial edge coloring indexed by canonical edge index. `None` is the
/// explicit "uncolored" state.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeColoring {
    colors: Vec<Option<Color>>,
}

impl EdgeColoring {
    pub fn uncolored(edge_count: usize) -> Self {
        EdgeColoring { colors: vec![None; edge_count] }
    }

    pub fn from_colors(colors: Vec<Color>) -> Self {
        EdgeColoring { colors: colors.into_iter().map(Some).collect() }
    }

    pub fn from_partial(colors: Vec<Option<Color>>) -> Self {
        EdgeColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, edge: usize) -> Option<Color> {
        self.colors[edge]
    }

    pub fn set(&mut self, edge: usize, color: Color) {
        self.colors[edge] = Some(color);
    }

    pub fn clear(&mut self, edge: usize) {
        self.colors[edge] = None;
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// The colors of a total coloring; `None` if any edge is uncolored.
    pub fn to_total(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_none()).count()
    }
}
