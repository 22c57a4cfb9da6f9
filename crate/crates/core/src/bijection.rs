//! Reflection-symmetric maximal diagrams and rooted one-vertex one-face maps.
//!
//! A maximal diagram on `4g` points fixed by the arc reflection
//! `rho(i) = 4g - 1 - i` folds onto a `(2g+1)`-gon: sides `0..2g` come from
//! the left half of the circle, the extra side `2g` is the axis and becomes a
//! boundary. Each mirror pair of chords glues two sides, with a twist when
//! the two chords cross. Contracting the boundary gives a rooted map with one
//! face and `g` edges; the diagram is maximal iff that map has one vertex.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{Chord, ChordDiagram, SymmetryElement};
use crate::error::{Error, Result};
use crate::oracle::Matchings;

/// A perfect matching on the sides `0..2g` of the quotient polygon with one
/// twist bit per matched pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedMatching {
    g: usize,
    mate: Vec<usize>,
    twist: Vec<bool>,
}

impl SignedMatching {
    /// Builds a matching from `(u, v, twisted)` triples covering `0..2g`.
    pub fn new(g: usize, pairs: &[(usize, usize, bool)]) -> Result<Self> {
        if pairs.len() != g {
            return Err(Error::Precondition(format!(
                "expected {g} pairs, got {}",
                pairs.len()
            )));
        }
        let plain: Vec<(usize, usize)> = pairs.iter().map(|&(u, v, _)| (u, v)).collect();
        let mate = ChordDiagram::new(&plain)?.mate().to_vec();
        let mut twist = vec![false; 2 * g];
        for &(u, v, t) in pairs {
            twist[u] = t;
            twist[v] = t;
        }
        Ok(Self { g, mate, twist })
    }

    /// Builds a matching from a mate sequence and per-side twist bits.
    pub fn from_parts(mate: Vec<usize>, twist: Vec<bool>) -> Result<Self> {
        let g = mate.len() / 2;
        let mate = ChordDiagram::from_mate(mate)?.mate().to_vec();
        if twist.len() != mate.len() {
            return Err(Error::Precondition(format!(
                "{} twist bits for {} sides",
                twist.len(),
                mate.len()
            )));
        }
        if let Some(i) = (0..mate.len()).find(|&i| twist[i] != twist[mate[i]]) {
            return Err(Error::Precondition(format!(
                "twist bits differ across pair {}-{}",
                i, mate[i]
            )));
        }
        Ok(Self { g, mate, twist })
    }

    pub fn empty() -> Self {
        Self {
            g: 0,
            mate: Vec::new(),
            twist: Vec::new(),
        }
    }

    /// Number of glued pairs, i.e. edges of the map.
    pub fn g(&self) -> usize {
        self.g
    }

    pub fn mate(&self) -> &[usize] {
        &self.mate
    }

    pub fn twist(&self) -> &[bool] {
        &self.twist
    }

    /// `(u, v, twisted)` with `u < v`, sorted by `u`.
    pub fn pairs(&self) -> Vec<(usize, usize, bool)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| u < v)
            .map(|(u, &v)| (u, v, self.twist[u]))
            .collect()
    }

    /// Every signed matching with `g` pairs: `(2g-1)!! * 2^g` of them.
    pub fn all(g: usize) -> impl Iterator<Item = SignedMatching> {
        Matchings::new(2 * g).flat_map(move |mate| {
            (0u64..1 << g).map(move |bits| {
                let mut twist = vec![false; 2 * g];
                let mut pair = 0;
                for u in 0..2 * g {
                    if u < mate[u] {
                        let t = bits >> pair & 1 == 1;
                        twist[u] = t;
                        twist[mate[u]] = t;
                        pair += 1;
                    }
                }
                SignedMatching {
                    g,
                    mate: mate.clone(),
                    twist,
                }
            })
        })
    }

    /// Glues the `(2g+1)`-gon and contracts its boundary side.
    ///
    /// Side `s` runs from corner `s` to corner `s + 1 (mod 2g+1)`; side `2g`
    /// is the boundary. An untwisted pair identifies the head of one side
    /// with the tail of the other; a twisted pair identifies tails with tails
    /// and heads with heads.
    pub fn glue(&self) -> GluingReport {
        let corners = 2 * self.g + 1;
        let head = |s: usize| (s + 1) % corners;
        let mut classes = DisjointSets::new(corners);
        for (u, v, twisted) in self.pairs() {
            if twisted {
                classes.union(u, v);
                classes.union(head(u), head(v));
            } else {
                classes.union(head(u), v);
                classes.union(u, head(v));
            }
        }
        let boundary = 2 * self.g;
        classes.union(boundary, head(boundary));

        let vertex_count = classes.count();
        let face_count = 1;
        // V - E + F = 2 - euler_genus with E = g.
        let euler_genus = 2 + self.g - vertex_count - face_count;
        GluingReport {
            vertex_count,
            face_count,
            orientable: self.twist.iter().all(|&t| !t),
            euler_genus,
        }
    }

    /// True iff the glued map has a single vertex.
    pub fn is_unicellular_map(&self) -> bool {
        self.glue().vertex_count == 1
    }
}

/// `g; u-v:t ...`, pairs sorted by smaller endpoint.
impl fmt::Display for SignedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.g)?;
        for (u, v, t) in self.pairs() {
            write!(f, " {u}-{v}:{}", u8::from(t))?;
        }
        Ok(())
    }
}

impl FromStr for SignedMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(msg);
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| bad(format!("expected `g; u-v:t ...`, got `{s}`")))?;
        let g: usize = head
            .trim()
            .parse()
            .map_err(|_| bad(format!("invalid pair count `{}`", head.trim())))?;
        let parse_index = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| bad(format!("invalid side index `{tok}`")))
        };
        let pairs = body
            .split_whitespace()
            .map(|tok| {
                let (ends, t) = tok
                    .split_once(':')
                    .ok_or_else(|| bad(format!("expected `u-v:t`, got `{tok}`")))?;
                let (u, v) = ends
                    .split_once('-')
                    .ok_or_else(|| bad(format!("expected `u-v:t`, got `{tok}`")))?;
                let twisted = match t {
                    "0" => false,
                    "1" => true,
                    _ => return Err(bad(format!("twist must be 0 or 1, got `{t}`"))),
                };
                Ok((parse_index(u)?, parse_index(v)?, twisted))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedMatching::new(g, &pairs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GluingReport {
    pub vertex_count: usize,
    pub face_count: usize,
    pub orientable: bool,
    /// Twice the genus if orientable, the number of cross-caps otherwise.
    pub euler_genus: usize,
}

impl fmt::Display for GluingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} F={} {} euler_genus={}",
            self.vertex_count,
            self.face_count,
            if self.orientable {
                "orientable"
            } else {
                "non-orientable"
            },
            self.euler_genus
        )
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

/// Folds a maximal diagram fixed by `rho(i) = 4g - 1 - i` onto its quotient.
pub fn to_quotient(d: &ChordDiagram) -> Result<SignedMatching> {
    if d.points() == 0 {
        return Ok(SignedMatching::empty());
    }
    if !d.is_maximal() {
        return Err(Error::NotMaximal);
    }
    let points = d.points();
    let half = points / 2;
    let rho = SymmetryElement::type_two_axis(points);
    let classes = d.axis_chord_classes(&rho).map_err(|e| match e {
        Error::NotFixed(_) => {
            Error::NotFixed(format!("the arc reflection i -> {} - i", points - 1))
        }
        other => other,
    })?;
    if !classes.vertical.is_empty() || !classes.horizontal.is_empty() {
        return Err(Error::InvariantViolation(format!(
            "maximal diagram fixed by an arc reflection has axis chords: vertical {:?}, horizontal {:?}",
            classes.vertical, classes.horizontal
        )));
    }
    let side = |i: usize| if i < half { i } else { points - 1 - i };
    let pairs: Vec<_> = classes
        .mirror_orbits
        .iter()
        .map(|&((a, b), _)| (side(a), side(b), (a < half) != (b < half)))
        .collect();
    SignedMatching::new(half / 2, &pairs)
}

/// Unfolds a one-vertex signed matching into a maximal diagram on `4g` points.
pub fn from_quotient(sm: &SignedMatching) -> Result<ChordDiagram> {
    if !sm.is_unicellular_map() {
        return Err(Error::NotUnicellular);
    }
    Ok(unfold(sm))
}

/// The doubled diagram of any signed matching, maximal or not.
pub fn unfold(sm: &SignedMatching) -> ChordDiagram {
    let points = 4 * sm.g();
    let rho = |i: usize| points - 1 - i;
    let mut chords: Vec<Chord> = Vec::with_capacity(2 * sm.g());
    for (u, v, twisted) in sm.pairs() {
        if twisted {
            chords.push((u, rho(v)));
            chords.push((v, rho(u)));
        } else {
            chords.push((u, v));
            chords.push((rho(u), rho(v)));
        }
    }
    ChordDiagram::new(&chords).expect("unfolding a signed matching covers every point once")
}

/// A maximal diagram fixed by the point reflection `sigma(i) = -i`, split
/// into its two axis chords and the remaining arc-symmetric diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrippedTypeOne {
    pub remainder: ChordDiagram,
    pub vertical: Chord,
    pub horizontal: Chord,
}

/// Removes the vertical chord `{0, 2g}` and the unique horizontal chord,
/// relabelling the rest from former point 1 onward so that the induced
/// reflection becomes `i -> 4(g-1) - 1 - i`.
pub fn strip_type1(d: &ChordDiagram) -> Result<StrippedTypeOne> {
    if !d.is_maximal() {
        return Err(Error::NotMaximal);
    }
    let points = d.points();
    let sigma = SymmetryElement::type_one_axis(points);
    let classes = d.axis_chord_classes(&sigma).map_err(|e| match e {
        Error::NotFixed(_) => Error::NotFixed("the point reflection i -> -i".into()),
        other => other,
    })?;
    let (vertical, horizontal) = match (&classes.vertical[..], &classes.horizontal[..]) {
        ([v], [h]) => (*v, *h),
        (v, h) => {
            return Err(Error::InvariantViolation(format!(
                "expected one vertical and one horizontal chord, found {} and {}",
                v.len(),
                h.len()
            )))
        }
    };
    let removed = [vertical.0, vertical.1, horizontal.0, horizontal.1];
    let kept: Vec<usize> = (1..points).filter(|p| !removed.contains(p)).collect();
    let mut label = vec![usize::MAX; points];
    for (new, &old) in kept.iter().enumerate() {
        label[old] = new;
    }
    let mate = kept.iter().map(|&old| label[d.partner(old)]).collect();
    Ok(StrippedTypeOne {
        remainder: ChordDiagram::from_mate_unchecked(mate),
        vertical,
        horizontal,
    })
}

/// Inverse of [`strip_type1`]: inserts the vertical chord `{0, 2g}` and the
/// horizontal chord `{a, 4g - a}` into an arc-symmetric diagram on `4(g-1)`
/// points. `a` ranges over `1..2g`, giving `2g - 1` insertion slots.
pub fn insert_type1(d: &ChordDiagram, a: usize) -> Result<ChordDiagram> {
    let points = d.points() + 4;
    let half = points / 2;
    if !d.points().is_multiple_of(4) {
        return Err(Error::Precondition(format!(
            "{} points is not a multiple of 4",
            d.points()
        )));
    }
    if a == 0 || a >= half {
        return Err(Error::Precondition(format!(
            "horizontal slot {a} outside 1..{half}"
        )));
    }
    let horizontal = (a, points - a);
    let slots: Vec<usize> = (1..points)
        .filter(|&p| p != half && p != horizontal.0 && p != horizontal.1)
        .collect();
    let mut chords = vec![(0, half), horizontal];
    chords.extend(d.chords().into_iter().map(|(x, y)| (slots[x], slots[y])));
    ChordDiagram::new(&chords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crossing() -> ChordDiagram {
        ChordDiagram::new(&[(0, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn glue_base_cases() {
        let twisted: SignedMatching = "1; 0-1:1".parse().unwrap();
        let report = twisted.glue();
        assert_eq!(report.vertex_count, 1);
        assert_eq!(report.face_count, 1);
        assert!(!report.orientable);
        assert_eq!(report.euler_genus, 1);

        let plain: SignedMatching = "1; 0-1:0".parse().unwrap();
        let report = plain.glue();
        assert_eq!(report.vertex_count, 2);
        assert!(report.orientable);
        assert_eq!(report.euler_genus, 0);

        assert!(twisted.is_unicellular_map());
        assert!(!plain.is_unicellular_map());
        assert!(SignedMatching::empty().is_unicellular_map());
    }

    #[test]
    fn five_of_twelve_at_two_edges() {
        let all: Vec<_> = SignedMatching::all(2).collect();
        assert_eq!(all.len(), 12);
        assert_eq!(all.iter().filter(|sm| sm.is_unicellular_map()).count(), 5);
    }

    #[test]
    fn fold_and_unfold_the_crossing_pair() {
        let sm = to_quotient(&crossing()).unwrap();
        assert_eq!(sm.to_string(), "1; 0-1:1");
        assert_eq!(sm.glue().vertex_count, 1);
        assert_eq!(from_quotient(&sm).unwrap(), crossing());

        let plain: SignedMatching = "1; 0-1:0".parse().unwrap();
        assert_eq!(from_quotient(&plain), Err(Error::NotUnicellular));
        let doubled = unfold(&plain);
        assert_eq!(doubled.chords(), vec![(0, 1), (2, 3)]);
        assert_eq!(doubled.face_count(), 3);
    }

    #[test]
    fn to_quotient_rejects_bad_input() {
        let nested = ChordDiagram::new(&[(0, 3), (1, 2)]).unwrap();
        assert_eq!(to_quotient(&nested), Err(Error::NotMaximal));
        let rho = SymmetryElement::type_two_axis(8);
        let asymmetric = Matchings::new(8)
            .map(|m| ChordDiagram::from_mate(m).unwrap())
            .find(|d| d.is_maximal() && !d.is_fixed_by(&rho).unwrap())
            .unwrap();
        assert!(matches!(to_quotient(&asymmetric), Err(Error::NotFixed(_))));
    }

    #[test]
    fn strip_the_crossing_pair() {
        let stripped = strip_type1(&crossing()).unwrap();
        assert_eq!(stripped.vertical, (0, 2));
        assert_eq!(stripped.horizontal, (1, 3));
        assert_eq!(stripped.remainder, ChordDiagram::empty());
        assert_eq!(insert_type1(&ChordDiagram::empty(), 1).unwrap(), crossing());
        assert!(insert_type1(&ChordDiagram::empty(), 2).is_err());
    }

    #[test]
    fn text_format() {
        let sm = SignedMatching::new(2, &[(1, 3, false), (0, 2, true)]).unwrap();
        assert_eq!(sm.to_string(), "2; 0-2:1 1-3:0");
        assert_eq!(sm.to_string().parse::<SignedMatching>().unwrap(), sm);
        assert_eq!(SignedMatching::empty().to_string(), "0;");
        assert_eq!(
            "0;".parse::<SignedMatching>().unwrap(),
            SignedMatching::empty()
        );
        assert!("1; 0-1:2".parse::<SignedMatching>().is_err());
        assert!("1; 0-0:1".parse::<SignedMatching>().is_err());
        assert!("2; 0-1:1".parse::<SignedMatching>().is_err());
    }
}
