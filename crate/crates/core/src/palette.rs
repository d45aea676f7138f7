//! Uniform palettes: color multisets `(a, b, c)` of red, blue and green with
//! no color used more than `⌈k/2⌉` times, where `k = a + b + c`.

use std::fmt;

use thiserror::Error;

use crate::color::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PaletteError {
    #[error("palette length must be positive")]
    ZeroLength,
    #[error("cannot split {palette} into uniform parts of sizes {sizes:?}")]
    Infeasible { palette: Palette, sizes: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Palette {
    pub red: usize,
    pub blue: usize,
    pub green: usize,
}

impl Palette {
    pub const fn new(red: usize, blue: usize, green: usize) -> Self {
        Palette { red, blue, green }
    }

    pub fn len(&self) -> usize {
        self.red + self.blue + self.green
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_uniform(&self) -> bool {
        let cap = self.len().div_ceil(2);
        self.red <= cap && self.blue <= cap && self.green <= cap
    }

    pub fn count(&self, c: Color) -> usize {
        match c {
            Color::Red => self.red,
            Color::Blue => self.blue,
            Color::Green => self.green,
        }
    }

    fn count_mut(&mut self, c: Color) -> &mut usize {
        match c {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
            Color::Green => &mut self.green,
        }
    }

    pub fn has_non_red(&self) -> bool {
        self.blue + self.green > 0
    }

    /// The colors as a list, reds first, then blues, then greens.
    pub fn to_colors(&self) -> Vec<Color> {
        let mut out = Vec::with_capacity(self.len());
        for c in Color::ALL {
            out.extend(std::iter::repeat_n(c, self.count(c)));
        }
        out
    }

    pub fn from_colors(colors: &[Color]) -> Self {
        let mut p = Palette::default();
        for &c in colors {
            *p.count_mut(c) += 1;
        }
        p
    }

    fn checked_sub(&self, other: &Palette) -> Option<Palette> {
        Some(Palette {
            red: self.red.checked_sub(other.red)?,
            blue: self.blue.checked_sub(other.blue)?,
            green: self.green.checked_sub(other.green)?,
        })
    }
}

impl fmt::Display for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.red, self.blue, self.green)
    }
}

/// Uniform `k`-palettes with at most `k/2` reds, in construction order.
///
/// For `k = 2m` these are `(i, m−j, m−i+j)`, for `k = 2m+1` they are
/// `(i, m+1−j, m−i+j)`; `i` runs over `0..=m` and `j` over `0..=i`
/// (resp. `0..=i+1`).
pub fn uniform_palettes(k: usize) -> Result<Vec<Palette>, PaletteError> {
    if k == 0 {
        return Err(PaletteError::ZeroLength);
    }
    let m = k / 2;
    let odd = k % 2;
    let mut out = Vec::new();
    for i in 0..=m {
        for j in 0..=i + odd {
            out.push(Palette::new(i, m + odd - j, m - i + j));
        }
    }
    Ok(out)
}

pub fn uniform_palette_count(k: usize) -> usize {
    let m = k / 2;
    if k.is_multiple_of(2) {
        (m + 1) * (m + 2) / 2
    } else {
        (m + 1) * (m + 4) / 2
    }
}

/// A sequence of uniform palettes, one per size in `sizes`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaletteSeq {
    pub parts: Vec<Palette>,
}

impl PaletteSeq {
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Palette::len).collect()
    }
}

/// Lazy cartesian product of `uniform_palettes(kᵢ)`, last component fastest.
pub struct PaletteSeqIter {
    options: Vec<Vec<Palette>>,
    cursor: Option<Vec<usize>>,
}

impl Iterator for PaletteSeqIter {
    type Item = PaletteSeq;

    fn next(&mut self) -> Option<PaletteSeq> {
        let cur = self.cursor.as_mut()?;
        let item = PaletteSeq { parts: cur.iter().zip(&self.options).map(|(&i, o)| o[i]).collect() };
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.cursor = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.options[pos].len() {
                break;
            }
            cur[pos] = 0;
        }
        Some(item)
    }
}

pub fn uniform_palette_seqs(sizes: &[usize]) -> Result<PaletteSeqIter, PaletteError> {
    if sizes.is_empty() {
        return Err(PaletteError::ZeroLength);
    }
    let options = sizes.iter().map(|&k| uniform_palettes(k)).collect::<Result<Vec<_>, _>>()?;
    Ok(PaletteSeqIter { cursor: Some(vec![0; options.len()]), options })
}

/// Two distinct uniform `k`-palettes: the first red-free one, and a second
/// with at most one red (red-free too when `k` is odd).
pub fn special_palettes(k: usize) -> Result<(Palette, Palette), PaletteError> {
    let all = uniform_palettes(k)?;
    let no_red = all[0];
    let low_red =
        if k % 2 == 1 { all[1] } else { *all.iter().find(|p| p.red == 1).expect("even k ≥ 2 has a one-red palette") };
    Ok((no_red, low_red))
}

/// Splits a uniform palette into uniform parts of the given sizes.
///
/// Each part is filled by repeatedly drawing from the color with the most
/// units left (ties: red, blue, green). If that ever produces a non-uniform
/// part, an exhaustive search takes over.
pub fn split_palette(p: Palette, sizes: &[usize]) -> Result<Vec<Palette>, PaletteError> {
    split_palette_where(p, sizes, |_| true)
}

/// Like [`split_palette`], with an extra predicate every returned split must
/// satisfy. The greedy split is tried first; the exhaustive search returns
/// the first acceptable split in lexicographic order of parts.
pub fn split_palette_where(
    p: Palette,
    sizes: &[usize],
    accept: impl Fn(&[Palette]) -> bool,
) -> Result<Vec<Palette>, PaletteError> {
    let infeasible = || PaletteError::Infeasible { palette: p, sizes: sizes.to_vec() };
    if sizes.is_empty() || sizes.iter().sum::<usize>() != p.len() {
        return Err(infeasible());
    }
    if sizes.contains(&0) {
        return Err(PaletteError::ZeroLength);
    }
    if let Some(parts) = greedy_split(p, sizes) {
        if accept(&parts) {
            return Ok(parts);
        }
    }
    let mut parts = Vec::with_capacity(sizes.len());
    if exhaustive_split(p, sizes, &mut parts, &accept) {
        Ok(parts)
    } else {
        Err(infeasible())
    }
}

fn greedy_split(p: Palette, sizes: &[usize]) -> Option<Vec<Palette>> {
    let mut left = p;
    let mut parts = Vec::with_capacity(sizes.len());
    for &k in sizes {
        let mut part = Palette::default();
        for _ in 0..k {
            let c = Color::ALL.into_iter().max_by(|a, b| left.count(*a).cmp(&left.count(*b)).then(b.cmp(a))).unwrap();
            *left.count_mut(c) -= 1;
            *part.count_mut(c) += 1;
        }
        if !part.is_uniform() {
            return None;
        }
        parts.push(part);
    }
    Some(parts)
}

fn exhaustive_split(
    left: Palette,
    sizes: &[usize],
    parts: &mut Vec<Palette>,
    accept: &impl Fn(&[Palette]) -> bool,
) -> bool {
    let Some((&k, rest)) = sizes.split_first() else {
        return accept(parts);
    };
    for red in 0..=k.min(left.red) {
        for blue in 0..=(k - red).min(left.blue) {
            let part = Palette::new(red, blue, k - red - blue);
            let Some(remaining) = left.checked_sub(&part) else { continue };
            if !part.is_uniform() {
                continue;
            }
            parts.push(part);
            if exhaustive_split(remaining, rest, parts, accept) {
                return true;
            }
            parts.pop();
        }
    }
    false
}
