//! Strong edge-colourings: palettes, partial colourings, verification and
//! the table of known upper bounds for planar graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Girth, Graph};

/// Colour ids are 1-based.
pub type Colour = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringError {
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("edge {0} is already coloured")]
    AlreadyColoured(Edge),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("colour {colour} is outside the palette 1..={palette}")]
    OffPalette { colour: Colour, palette: u32 },
    #[error("colour {colour} on {edge} clashes with {other}")]
    Conflict { edge: Edge, other: Edge, colour: Colour },
    #[error("malformed colouring document: {0}")]
    Document(String),
}

/// The colour set `{1, ..., k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Palette(u32);

impl Palette {
    pub fn new(k: u32) -> Result<Self, ColouringError> {
        if k == 0 {
            Err(ColouringError::EmptyPalette)
        } else {
            Ok(Palette(k))
        }
    }

    pub fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, c: Colour) -> bool {
        (1..=self.0).contains(&c)
    }

    pub fn colours(self) -> std::ops::RangeInclusive<Colour> {
        1..=self.0
    }
}

/// Edge to colour assignment over a palette.
///
/// [`PartialColouring::assign`] keeps the colouring strong with respect to a
/// host graph; [`PartialColouring::set_unchecked`] does not. Either way
/// [`verify_strong`] is the authority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColouring {
    palette: Palette,
    colours: BTreeMap<Edge, Colour>,
}

impl PartialColouring {
    pub fn new(palette: Palette) -> Self {
        PartialColouring { palette, colours: BTreeMap::new() }
    }

    pub fn palette(&self) -> Palette {
        self.palette
    }

    /// Replaces the palette; colours already assigned are kept as they are.
    pub fn set_palette(&mut self, palette: Palette) {
        self.palette = palette;
    }

    pub fn get(&self, e: Edge) -> Option<Colour> {
        self.colours.get(&e).copied()
    }

    pub fn is_coloured(&self, e: Edge) -> bool {
        self.colours.contains_key(&e)
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Colour)> + '_ {
        self.colours.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of distinct colours in use.
    pub fn colours_used(&self) -> usize {
        self.colours.values().collect::<BTreeSet<_>>().len()
    }

    /// Largest colour in use, 0 when nothing is coloured.
    pub fn max_colour(&self) -> Colour {
        self.colours.values().copied().max().unwrap_or(0)
    }

    pub fn is_total(&self, g: &Graph) -> bool {
        g.edges().all(|e| self.colours.contains_key(&e))
    }

    /// Colours on the coloured edges of `N2(e)` in `g`.
    pub fn neighbourhood_colours(&self, g: &Graph, e: Edge) -> BTreeSet<Colour> {
        let mut used = BTreeSet::new();
        g.for_each_n2(e, |f| {
            if f != e {
                if let Some(&c) = self.colours.get(&f) {
                    used.insert(c);
                }
            }
        });
        used
    }

    /// Palette colours absent from `SC(N2(e))`.
    pub fn free_colours(&self, g: &Graph, e: Edge) -> Result<BTreeSet<Colour>, ColouringError> {
        if !g.contains_edge(e) {
            return Err(ColouringError::UnknownEdge(e));
        }
        if self.is_coloured(e) {
            return Err(ColouringError::AlreadyColoured(e));
        }
        let used = self.neighbourhood_colours(g, e);
        Ok(self.palette.colours().filter(|c| !used.contains(c)).collect())
    }

    /// Lowest free colour of an uncoloured edge, if any.
    pub fn lowest_free(&self, g: &Graph, e: Edge) -> Option<Colour> {
        let used = self.neighbourhood_colours(g, e);
        self.palette.colours().find(|c| !used.contains(c))
    }

    /// Colours `e` with `c`, refusing colours off the palette or already
    /// present in `N2(e)`.
    pub fn assign(&mut self, g: &Graph, e: Edge, c: Colour) -> Result<(), ColouringError> {
        if !g.contains_edge(e) {
            return Err(ColouringError::UnknownEdge(e));
        }
        if !self.palette.contains(c) {
            return Err(ColouringError::OffPalette { colour: c, palette: self.palette.size() });
        }
        let mut clash = None;
        g.for_each_n2(e, |f| {
            if f != e && clash.is_none() && self.colours.get(&f) == Some(&c) {
                clash = Some(f);
            }
        });
        if let Some(other) = clash {
            return Err(ColouringError::Conflict { edge: e, other, colour: c });
        }
        self.colours.insert(e, c);
        Ok(())
    }

    pub fn set_unchecked(&mut self, e: Edge, c: Colour) {
        self.colours.insert(e, c);
    }

    pub fn unassign(&mut self, e: Edge) -> Option<Colour> {
        self.colours.remove(&e)
    }

    /// Serialisable form keyed on the external vertex labels of `g`.
    pub fn to_document(&self, g: &Graph) -> ColouringDocument {
        ColouringDocument {
            palette: self.palette.size(),
            colours: self
                .colours
                .iter()
                .map(|(e, &c)| (format!("{}-{}", g.label(e.u), g.label(e.v)), c))
                .collect(),
        }
    }

    /// Reads a colouring document against `g`. Keys may list the endpoints
    /// in either order.
    pub fn from_document(g: &Graph, doc: &ColouringDocument) -> Result<Self, ColouringError> {
        let palette = Palette::new(doc.palette)?;
        let mut out = PartialColouring::new(palette);
        for (key, &c) in &doc.colours {
            let bad = || ColouringError::Document(format!("bad edge key {key:?}"));
            let (a, b) = key.split_once('-').ok_or_else(bad)?;
            let a: u32 = a.trim().parse().map_err(|_| bad())?;
            let b: u32 = b.trim().parse().map_err(|_| bad())?;
            let (ia, ib) = match (g.index_of(a), g.index_of(b)) {
                (Some(x), Some(y)) if x != y => (x, y),
                _ => return Err(bad()),
            };
            let e = Edge::new(ia, ib);
            if !g.contains_edge(e) {
                return Err(ColouringError::Document(format!("{key} is not an edge of the graph")));
            }
            out.set_unchecked(e, c);
        }
        Ok(out)
    }
}

/// JSON form: `{ "palette": k, "colours": { "u-v": c, ... } }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringDocument {
    pub palette: u32,
    pub colours: BTreeMap<String, Colour>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    AdjacentConflict,
    Distance2Conflict,
    OffPalette,
    Uncoloured,
}

/// One reason a colouring fails to be strong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub edge: Edge,
    /// The clashing edge for the two conflict kinds.
    pub other: Option<Edge>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.other {
            Some(o) => write!(f, "{:?} between {} and {}", self.kind, self.edge, o),
            None => write!(f, "{:?} at {}", self.kind, self.edge),
        }
    }
}

/// Checks that no two edges within distance 2 share a colour, that every
/// colour is on the palette, and (if `require_total`) that every edge is
/// coloured. Returns all violations; an empty list means valid.
pub fn verify_strong(g: &Graph, c: &PartialColouring, require_total: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    for e in g.edges() {
        match c.get(e) {
            None if require_total => out.push(Violation { kind: ViolationKind::Uncoloured, edge: e, other: None }),
            None => {}
            Some(col) => {
                if !c.palette().contains(col) {
                    out.push(Violation { kind: ViolationKind::OffPalette, edge: e, other: None });
                }
                for f in g.n2_unchecked(e, false) {
                    if f > e && c.get(f) == Some(col) {
                        let kind = if e.is_adjacent(&f) {
                            ViolationKind::AdjacentConflict
                        } else {
                            ViolationKind::Distance2Conflict
                        };
                        out.push(Violation { kind, edge: e, other: Some(f) });
                    }
                }
            }
        }
    }
    out
}

pub fn is_strong(g: &Graph, c: &PartialColouring) -> bool {
    verify_strong(g, c, true).is_empty()
}

/// `max d(u) + d(v) - 1` over edges: the edges at `u` or `v` pairwise
/// conflict. 0 for edgeless graphs.
pub fn trivial_lower_bound(g: &Graph) -> usize {
    g.edges().map(|e| g.degree(e.u) + g.degree(e.v) - 1).max().unwrap_or(0)
}

/// Shape of an entry of the bound table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundFormula {
    FourDeltaPlusFour,
    FourDelta,
    ThreeDeltaPlusOne,
    ThreeDelta,
}

impl BoundFormula {
    pub fn eval(self, delta: usize) -> usize {
        match self {
            BoundFormula::FourDeltaPlusFour => 4 * delta + 4,
            BoundFormula::FourDelta => 4 * delta,
            BoundFormula::ThreeDeltaPlusOne => 3 * delta + 1,
            BoundFormula::ThreeDelta => 3 * delta,
        }
    }
}

impl fmt::Display for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundFormula::FourDeltaPlusFour => "4D+4",
            BoundFormula::FourDelta => "4D",
            BoundFormula::ThreeDeltaPlusOne => "3D+1",
            BoundFormula::ThreeDelta => "3D",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("the bound table starts at maximum degree 3, got {0}")]
pub struct DeltaTooSmall(pub usize);

use BoundFormula::*;

/// Rows: no girth restriction, g >= 4, g >= 5, g >= 6, g >= 7.
/// Columns: D >= 7, D in {5, 6}, D = 4, D = 3.
const BOUND_TABLE: [[BoundFormula; 4]; 5] = [
    [FourDelta, FourDeltaPlusFour, FourDeltaPlusFour, ThreeDeltaPlusOne],
    [FourDelta, FourDelta, FourDeltaPlusFour, ThreeDeltaPlusOne],
    [FourDelta, FourDelta, FourDelta, ThreeDeltaPlusOne],
    [ThreeDeltaPlusOne, ThreeDeltaPlusOne, ThreeDeltaPlusOne, ThreeDelta],
    [ThreeDelta, ThreeDelta, ThreeDelta, ThreeDelta],
];

/// Table entry for planar graphs of maximum degree `delta` and girth `girth`.
pub fn known_bound_formula(delta: usize, girth: Girth) -> Result<BoundFormula, DeltaTooSmall> {
    let col = match delta {
        0..=2 => return Err(DeltaTooSmall(delta)),
        3 => 3,
        4 => 2,
        5 | 6 => 1,
        _ => 0,
    };
    let row = match girth {
        Girth::Acyclic => 4,
        Girth::Finite(g) => g.clamp(3, 7) - 3,
    };
    Ok(BOUND_TABLE[row][col])
}

/// Known upper bound on the strong chromatic index of a planar graph with
/// maximum degree `delta >= 3` and the given girth.
pub fn known_bound(delta: usize, girth: Girth) -> Result<usize, DeltaTooSmall> {
    known_bound_formula(delta, girth).map(|f| f.eval(delta))
}
