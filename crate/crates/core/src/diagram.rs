//! Chord diagrams, face walks, genus and the dihedral action on the circle.
//!
//! Points are labelled `0..2n` clockwise. A diagram is stored as its mate
//! sequence: `mate[i]` is the other end of the chord through point `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A chord as an ordered pair `(a, b)` with `a < b`.
pub type Chord = (usize, usize);

/// True iff two chords with distinct endpoints intersect inside the circle.
pub fn chords_cross(x: Chord, y: Chord) -> bool {
    let (a, b) = (x.0.min(x.1), x.0.max(x.1));
    let inside = |p: usize| a < p && p < b;
    inside(y.0) != inside(y.1)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    mate: Vec<usize>,
}

impl ChordDiagram {
    /// Builds a diagram from a list of point pairs covering `0..2n` exactly once.
    pub fn new(pairs: &[(usize, usize)]) -> Result<Self> {
        let points = 2 * pairs.len();
        let mut mate = vec![usize::MAX; points];
        for &(a, b) in pairs {
            for p in [a, b] {
                if p >= points {
                    return Err(Error::PointOutOfRange { point: p, points });
                }
            }
            if a == b {
                return Err(Error::SelfPair(a));
            }
            for p in [a, b] {
                if mate[p] != usize::MAX {
                    return Err(Error::DuplicatePoint(p));
                }
            }
            mate[a] = b;
            mate[b] = a;
        }
        if let Some(p) = mate.iter().position(|&m| m == usize::MAX) {
            return Err(Error::UncoveredPoint(p));
        }
        Ok(Self { mate })
    }

    /// Builds a diagram from its mate sequence.
    pub fn from_mate(mate: Vec<usize>) -> Result<Self> {
        let points = mate.len();
        if points % 2 == 1 {
            return Err(Error::OddPointCount(points));
        }
        for (i, &m) in mate.iter().enumerate() {
            if m >= points {
                return Err(Error::PointOutOfRange { point: m, points });
            }
            if m == i {
                return Err(Error::SelfPair(i));
            }
        }
        for (i, &m) in mate.iter().enumerate() {
            if mate[m] != i {
                // Point m is claimed by i but paired elsewhere.
                return Err(Error::DuplicatePoint(m));
            }
        }
        Ok(Self { mate })
    }

    /// The empty diagram with no chords.
    pub fn empty() -> Self {
        Self { mate: Vec::new() }
    }

    pub(crate) fn from_mate_unchecked(mate: Vec<usize>) -> Self {
        debug_assert!(Self::from_mate(mate.clone()).is_ok());
        Self { mate }
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.mate.len() / 2
    }

    /// Number of points, `2n`.
    pub fn points(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self) -> &[usize] {
        &self.mate
    }

    pub fn partner(&self, point: usize) -> usize {
        self.mate[point]
    }

    /// Chords sorted by their smaller endpoint.
    pub fn chords(&self) -> Vec<Chord> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(i, &m)| i < m)
            .map(|(i, &m)| (i, m))
            .collect()
    }

    /// Cycles of `i -> mate[i] + 1 (mod 2n)`, each starting at its smallest
    /// point, sorted by that point.
    pub fn face_walks(&self) -> FaceWalkDecomposition {
        let points = self.points();
        if points == 0 {
            return FaceWalkDecomposition {
                walks: Vec::new(),
                count: 1,
            };
        }
        let mut seen = vec![false; points];
        let mut walks = Vec::new();
        for start in 0..points {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                walk.push(i);
                i = (self.mate[i] + 1) % points;
            }
            walks.push(walk);
        }
        let count = walks.len();
        FaceWalkDecomposition { walks, count }
    }

    /// Number of face walks, without materializing them.
    pub fn face_count(&self) -> usize {
        let points = self.points();
        if points == 0 {
            return 1;
        }
        let mut seen = vec![false; points];
        let mut count = 0;
        for start in 0..points {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = (self.mate[i] + 1) % points;
            }
        }
        count
    }

    /// Genus of the surface obtained by gluing the `2n`-gon: `(n + 1 - F) / 2`.
    pub fn genus(&self) -> usize {
        let n = self.n();
        let faces = self.face_count();
        assert!(
            faces <= n + 1 && (n + 1 - faces).is_multiple_of(2),
            "face count {faces} incompatible with {n} chords"
        );
        (n + 1 - faces) / 2
    }

    /// True iff the diagram has exactly one face walk.
    pub fn is_maximal(&self) -> bool {
        !self.mate.is_empty() && self.single_face_walk()
    }

    // Early exit on the first cycle shorter than 2n.
    fn single_face_walk(&self) -> bool {
        let points = self.points();
        let mut i = 0;
        for step in 1..=points {
            i = (self.mate[i] + 1) % points;
            if i == 0 {
                return step == points;
            }
        }
        false
    }

    fn check_size(&self, s: &SymmetryElement) -> Result<()> {
        if s.points() != self.points() {
            return Err(Error::SizeMismatch {
                diagram: self.points(),
                symmetry: s.points(),
            });
        }
        Ok(())
    }

    /// Image of the diagram under a symmetry of the circle.
    pub fn apply(&self, s: &SymmetryElement) -> Result<Self> {
        self.check_size(s)?;
        let mut mate = vec![0; self.points()];
        for (i, &m) in self.mate.iter().enumerate() {
            mate[s.apply(i)] = s.apply(m);
        }
        Ok(Self { mate })
    }

    pub fn is_fixed_by(&self, s: &SymmetryElement) -> Result<bool> {
        self.check_size(s)?;
        Ok(self.fixed_by_unchecked(s))
    }

    pub(crate) fn fixed_by_unchecked(&self, s: &SymmetryElement) -> bool {
        self.mate
            .iter()
            .enumerate()
            .all(|(i, &m)| self.mate[s.apply(i)] == s.apply(m))
    }

    /// Splits the chords of a reflection-fixed diagram into vertical chords
    /// (both ends on the axis), horizontal chords (ends swapped by the
    /// reflection) and mirror pairs.
    pub fn axis_chord_classes(&self, s: &SymmetryElement) -> Result<AxisChordClasses> {
        if s.kind() == SymmetryKind::Rotation {
            return Err(Error::Precondition(format!("{s} is not a reflection")));
        }
        if !self.is_fixed_by(s)? {
            return Err(Error::NotFixed(s.to_string()));
        }
        let mut classes = AxisChordClasses::default();
        for (a, b) in self.chords() {
            let (sa, sb) = (s.apply(a), s.apply(b));
            if sa == a && sb == b {
                classes.vertical.push((a, b));
            } else if sa == b {
                classes.horizontal.push((a, b));
            } else {
                let mirror = (sa.min(sb), sa.max(sb));
                if (a, b) < mirror {
                    classes.mirror_orbits.push(((a, b), mirror));
                }
            }
        }
        Ok(classes)
    }

    /// Lexicographically smallest mate sequence over all `4n` dihedral images.
    pub fn canonical_form(&self) -> Self {
        let points = self.points();
        let mut best = self.mate.clone();
        let mut image = vec![0; points];
        for s in SymmetryElement::dihedral(points) {
            for (i, &m) in self.mate.iter().enumerate() {
                image[s.apply(i)] = s.apply(m);
            }
            if image < best {
                best.copy_from_slice(&image);
            }
        }
        Self { mate: best }
    }

    /// Pair-list rendering, e.g. `0-2 1-3`.
    pub fn to_pair_list(&self) -> String {
        self.chords()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Mate sequence separated by single spaces, e.g. `2 3 0 1`.
impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.mate.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Accepts either a mate sequence (`2 3 0 1`) or a pair list (`0-2 1-3`).
impl FromStr for ChordDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_index = |tok: &str| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid point index `{tok}`")))
        };
        if s.contains('-') {
            let pairs = s
                .split_whitespace()
                .map(|tok| {
                    let (a, b) = tok
                        .split_once('-')
                        .ok_or_else(|| Error::Parse(format!("expected `a-b`, got `{tok}`")))?;
                    Ok((parse_index(a)?, parse_index(b)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Self::new(&pairs)
        } else {
            let mate = s
                .split_whitespace()
                .map(parse_index)
                .collect::<Result<Vec<_>>>()?;
            Self::from_mate(mate)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalkDecomposition {
    pub walks: Vec<Vec<usize>>,
    /// Equals `walks.len()`, except for the empty diagram where it is 1.
    pub count: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxisChordClasses {
    pub vertical: Vec<Chord>,
    pub horizontal: Vec<Chord>,
    pub mirror_orbits: Vec<(Chord, Chord)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    Rotation,
    /// Axis through two opposite points.
    PointReflection,
    /// Axis through the midpoints of two opposite arcs.
    ArcReflection,
}

/// An element of the dihedral group acting on `points` evenly spaced points,
/// stored as the affine map `i -> ±i + offset (mod points)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryElement {
    points: usize,
    reflection: bool,
    offset: usize,
}

impl SymmetryElement {
    fn affine(points: usize, reflection: bool, offset: i64) -> Self {
        let offset = if points == 0 {
            0
        } else {
            offset.rem_euclid(points as i64) as usize
        };
        Self {
            points,
            reflection,
            offset,
        }
    }

    /// `i -> i + k`.
    pub fn rotation(points: usize, k: usize) -> Self {
        Self::affine(points, false, k as i64)
    }

    /// `i -> 2p - i`, axis through points `p` and `p + points/2`.
    pub fn point_reflection(points: usize, p: usize) -> Self {
        Self::affine(points, true, 2 * p as i64)
    }

    /// `i -> 2p + 1 - i`, axis between points `p` and `p + 1`.
    pub fn arc_reflection(points: usize, p: usize) -> Self {
        Self::affine(points, true, 2 * p as i64 + 1)
    }

    /// Reflection through point 0, `i -> -i`.
    pub fn type_one_axis(points: usize) -> Self {
        Self::point_reflection(points, 0)
    }

    /// Reflection through the arc `(points-1, 0)`, `i -> points - 1 - i`.
    pub fn type_two_axis(points: usize) -> Self {
        Self::affine(points, true, points as i64 - 1)
    }

    pub fn identity(points: usize) -> Self {
        Self::rotation(points, 0)
    }

    pub fn rotations(points: usize) -> impl Iterator<Item = Self> {
        (0..points.max(1)).map(move |k| Self::rotation(points, k))
    }

    /// All reflections: `points/2` through points, then `points/2` through arcs.
    pub fn reflections(points: usize) -> impl Iterator<Item = Self> {
        let half = points / 2;
        (0..half)
            .map(move |p| Self::point_reflection(points, p))
            .chain((0..half).map(move |p| Self::arc_reflection(points, p)))
    }

    /// All `2 * points` elements of the dihedral group, rotations first.
    pub fn dihedral(points: usize) -> impl Iterator<Item = Self> {
        Self::rotations(points).chain(Self::reflections(points))
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn kind(&self) -> SymmetryKind {
        match (self.reflection, self.offset % 2) {
            (false, _) => SymmetryKind::Rotation,
            (true, 0) => SymmetryKind::PointReflection,
            (true, _) => SymmetryKind::ArcReflection,
        }
    }

    /// Rotation offset in `0..points`, or axis index in `0..points/2`.
    pub fn parameter(&self) -> usize {
        let half = (self.points / 2).max(1);
        match self.kind() {
            SymmetryKind::Rotation => self.offset,
            SymmetryKind::PointReflection => (self.offset / 2) % half,
            SymmetryKind::ArcReflection => (self.offset / 2) % half,
        }
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        if self.reflection {
            (self.offset + self.points - i) % self.points
        } else {
            (i + self.offset) % self.points
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.points != other.points {
            return Err(Error::SizeMismatch {
                diagram: other.points,
                symmetry: self.points,
            });
        }
        let inner = if self.reflection {
            -(other.offset as i64)
        } else {
            other.offset as i64
        };
        Ok(Self::affine(
            self.points,
            self.reflection != other.reflection,
            inner + self.offset as i64,
        ))
    }

    pub fn inverse(&self) -> Self {
        if self.reflection {
            *self
        } else {
            Self::affine(self.points, false, -(self.offset as i64))
        }
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind() {
            SymmetryKind::Rotation => "rotation",
            SymmetryKind::PointReflection => "point-reflection",
            SymmetryKind::ArcReflection => "arc-reflection",
        };
        write!(f, "{name}({}) on {} points", self.parameter(), self.points)
    }
}
