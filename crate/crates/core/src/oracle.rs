//! Brute-force enumerators used to validate the closed forms.
//!
//! Full enumeration walks all `(2n-1)!!` diagrams. Reflection-fixed counts
//! only walk diagrams symmetric under the chosen axis, choosing one chord per
//! mirror orbit. Counting work is split across threads by the partner of
//! point 0; streamed output stays single-threaded and ordered.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::counting::CountBig;
use crate::diagram::{ChordDiagram, SymmetryElement, SymmetryKind};
use crate::error::{Error, Result};

/// Largest chord count walked by full enumeration without `force`.
pub const MAX_FULL_CHORDS: usize = 8;
/// Largest genus walked by symmetric-only enumeration without `force`.
pub const MAX_SYMMETRIC_GENUS: usize = 7;
/// Largest genus for the dihedral oracle without `force`.
pub const MAX_DIHEDRAL_GENUS: usize = 3;
/// Largest genus for the per-axis comparison without `force`.
pub const MAX_AXIS_CHECK_GENUS: usize = 3;

fn guard(what: &'static str, value: usize, limit: usize, force: bool) -> Result<()> {
    if value > limit && !force {
        return Err(Error::GuardExceeded { what, value, limit });
    }
    Ok(())
}

/// Perfect matchings of `0..points` as mate sequences. The smallest unpaired
/// point is paired with each larger unpaired point in increasing order.
#[derive(Debug, Clone)]
pub struct Matchings {
    points: usize,
    mate: Vec<usize>,
    stack: Vec<(usize, usize)>,
    first_partner: Option<usize>,
    started: bool,
    done: bool,
}

const UNPAIRED: usize = usize::MAX;

impl Matchings {
    pub fn new(points: usize) -> Self {
        assert!(points.is_multiple_of(2), "odd number of points");
        Self {
            points,
            mate: vec![UNPAIRED; points],
            stack: Vec::with_capacity(points / 2),
            first_partner: None,
            started: false,
            done: false,
        }
    }

    /// Only the matchings in which point 0 is paired with `partner`.
    pub fn with_first_partner(points: usize, partner: usize) -> Self {
        assert!(partner > 0 && partner < points, "partner out of range");
        Self {
            first_partner: Some(partner),
            ..Self::new(points)
        }
    }

    fn next_unpaired(&self, from: usize) -> Option<usize> {
        (from..self.points).find(|&p| self.mate[p] == UNPAIRED)
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.mate[a] = b;
        self.mate[b] = a;
        self.stack.push((a, b));
    }

    fn fill(&mut self) {
        while let Some(a) = self.next_unpaired(0) {
            let b = match (self.stack.is_empty(), self.first_partner) {
                (true, Some(b)) => b,
                _ => self
                    .next_unpaired(a + 1)
                    .expect("even number of unpaired points"),
            };
            self.pair(a, b);
        }
    }
}

impl Iterator for Matchings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            if self.stack.is_empty() {
                self.done = true;
            }
            return Some(self.mate.clone());
        }
        while let Some((a, b)) = self.stack.pop() {
            self.mate[a] = UNPAIRED;
            self.mate[b] = UNPAIRED;
            if self.stack.is_empty() && self.first_partner.is_some() {
                break;
            }
            if let Some(next) = self.next_unpaired(b + 1) {
                self.pair(a, next);
                self.fill();
                return Some(self.mate.clone());
            }
        }
        self.done = true;
        None
    }
}

/// Streams every diagram with `n` chords exactly once, in the order of
/// [`Matchings`].
pub fn enumerate_diagrams(n: usize, force: bool) -> Result<impl Iterator<Item = ChordDiagram>> {
    guard("chords", n, MAX_FULL_CHORDS, force)?;
    Ok(Matchings::new(2 * n).map(ChordDiagram::from_mate_unchecked))
}

/// Runs `f` over every diagram with `n` chords, one thread-pool task per
/// partner of point 0, and sums the results.
fn fold_diagrams<T, F>(n: usize, f: F) -> T
where
    T: Send + Default + std::ops::Add<Output = T>,
    F: Fn(&ChordDiagram) -> T + Sync,
{
    if n == 0 {
        return f(&ChordDiagram::empty());
    }
    (1..2 * n)
        .into_par_iter()
        .map(|b| {
            Matchings::with_first_partner(2 * n, b)
                .map(ChordDiagram::from_mate_unchecked)
                .fold(T::default(), |acc, d| acc + f(&d))
        })
        .reduce(T::default, |x, y| x + y)
}

/// Labelled diagram counts by genus for a fixed number of chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusTally {
    pub n: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl GenusTally {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, genus: usize) -> u64 {
        self.counts.get(&genus).copied().unwrap_or(0)
    }
}

pub fn genus_tally(n: usize, force: bool) -> Result<GenusTally> {
    guard("chords", n, MAX_FULL_CHORDS, force)?;
    let per_genus = fold_diagrams(n, |d| {
        let mut v = vec![0u64; n / 2 + 1];
        v[d.genus()] += 1;
        TallyVec(v)
    });
    let counts = per_genus
        .0
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect();
    Ok(GenusTally { n, counts })
}

#[derive(Default)]
struct TallyVec(Vec<u64>);

impl std::ops::Add for TallyVec {
    type Output = TallyVec;

    fn add(self, other: TallyVec) -> TallyVec {
        let (mut long, short) = if self.0.len() >= other.0.len() {
            (self.0, other.0)
        } else {
            (other.0, self.0)
        };
        for (x, y) in long.iter_mut().zip(short) {
            *x += y;
        }
        TallyVec(long)
    }
}

fn burnside_quotient(sum: u64, order: u64, what: &str) -> Result<CountBig> {
    if !sum.is_multiple_of(order) {
        return Err(Error::InexactDivision {
            context: format!("{what}: Burnside sum {sum} over group of order {order}"),
        });
    }
    Ok(CountBig::from(sum / order))
}

/// Maximal diagrams of genus `g` up to rotation, by Burnside's lemma over
/// all `4g` rotations and full enumeration.
pub fn d_star_oracle(g: usize, force: bool) -> Result<CountBig> {
    if g == 0 {
        return Err(Error::Precondition("genus must be at least 1".into()));
    }
    guard("chords", 2 * g, MAX_FULL_CHORDS, force)?;
    let points = 4 * g;
    let rotations: Vec<_> = SymmetryElement::rotations(points).collect();
    let fixed: u64 = fold_diagrams(2 * g, |d| {
        if d.is_maximal() {
            rotations.iter().filter(|s| d.fixed_by_unchecked(s)).count() as u64
        } else {
            0
        }
    });
    burnside_quotient(fixed, points as u64, "rotation classes")
}

/// The two reflection axis types for maximal diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisType {
    /// Axis through two opposite points.
    TypeOne,
    /// Axis through the midpoints of two opposite arcs.
    TypeTwo,
}

impl AxisType {
    pub fn canonical_axis(self, points: usize) -> SymmetryElement {
        match self {
            AxisType::TypeOne => SymmetryElement::type_one_axis(points),
            AxisType::TypeTwo => SymmetryElement::type_two_axis(points),
        }
    }

    /// All `points / 2` reflections of this type.
    pub fn axes(self, points: usize) -> Vec<SymmetryElement> {
        (0..points / 2)
            .map(|p| match self {
                AxisType::TypeOne => SymmetryElement::point_reflection(points, p),
                AxisType::TypeTwo => SymmetryElement::arc_reflection(points, p),
            })
            .collect()
    }

    pub fn of(s: &SymmetryElement) -> Option<Self> {
        match s.kind() {
            SymmetryKind::Rotation => None,
            SymmetryKind::PointReflection => Some(AxisType::TypeOne),
            SymmetryKind::ArcReflection => Some(AxisType::TypeTwo),
        }
    }
}

/// Depth-first walk over matchings of `0..points` fixed by the reflection
/// `s`. For each smallest unpaired point `a` and each candidate partner `b`,
/// the mirror chord `{s(a), s(b)}` is forced; the choice is kept only when
/// that chord is `{a, b}` itself or is disjoint from it and still free.
struct SymmetricWalk<'a, F> {
    s: &'a SymmetryElement,
    mate: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize])> SymmetricWalk<'_, F> {
    fn run(&mut self) {
        let Some(a) = self.mate.iter().position(|&m| m == UNPAIRED) else {
            (self.visit)(&self.mate);
            return;
        };
        for b in a + 1..self.mate.len() {
            self.try_pair(a, b);
        }
    }

    fn try_pair(&mut self, a: usize, b: usize) {
        if self.mate[b] != UNPAIRED {
            return;
        }
        let (sa, sb) = (self.s.apply(a), self.s.apply(b));
        let self_mirror = (sa == a && sb == b) || (sa == b && sb == a);
        if !self_mirror {
            let disjoint = sa != a && sa != b && sb != a && sb != b;
            if !disjoint || self.mate[sa] != UNPAIRED || self.mate[sb] != UNPAIRED {
                return;
            }
        }
        self.mate[a] = b;
        self.mate[b] = a;
        self.mate[sa] = sb;
        self.mate[sb] = sa;
        self.run();
        for p in [a, b, sa, sb] {
            self.mate[p] = UNPAIRED;
        }
    }
}

fn count_symmetric_maximal(points: usize, s: &SymmetryElement) -> u64 {
    (1..points)
        .into_par_iter()
        .map(|b| {
            let mut count = 0u64;
            let mut walk = SymmetricWalk {
                s,
                mate: vec![UNPAIRED; points],
                visit: |mate: &[usize]| {
                    if ChordDiagram::from_mate_unchecked(mate.to_vec()).is_maximal() {
                        count += 1;
                    }
                },
            };
            walk.try_pair(0, b);
            count
        })
        .sum()
}

/// Every diagram on `points` points fixed by the reflection `s`, in
/// depth-first order.
pub fn symmetric_diagrams(points: usize, s: &SymmetryElement) -> Vec<ChordDiagram> {
    let mut out = Vec::new();
    if points == 0 {
        out.push(ChordDiagram::empty());
        return out;
    }
    let mut walk = SymmetricWalk {
        s,
        mate: vec![UNPAIRED; points],
        visit: |mate: &[usize]| out.push(ChordDiagram::from_mate_unchecked(mate.to_vec())),
    };
    walk.run();
    out
}

/// Maximal diagrams of genus `g` fixed by the canonical axis of one type.
pub fn maximal_symmetric_diagrams(g: usize, axis: AxisType) -> Vec<ChordDiagram> {
    let points = 4 * g;
    let s = axis.canonical_axis(points);
    symmetric_diagrams(points, &s)
        .into_iter()
        .filter(|d| points == 0 || d.is_maximal())
        .collect()
}

/// Number of maximal diagrams of genus `g` fixed by the canonical axis of
/// the given type, walking symmetric diagrams only.
pub fn reflection_fixed_oracle(g: usize, axis: AxisType, force: bool) -> Result<CountBig> {
    if g == 0 {
        return Err(Error::Precondition("genus must be at least 1".into()));
    }
    guard("genus", g, MAX_SYMMETRIC_GENUS, force)?;
    let points = 4 * g;
    Ok(CountBig::from(count_symmetric_maximal(
        points,
        &axis.canonical_axis(points),
    )))
}

/// Same count as [`reflection_fixed_oracle`] by filtering all diagrams.
pub fn reflection_fixed_bruteforce(g: usize, axis: AxisType, force: bool) -> Result<CountBig> {
    guard("chords", 2 * g, MAX_FULL_CHORDS, force)?;
    let s = axis.canonical_axis(4 * g);
    let count: u64 = fold_diagrams(2 * g, |d| {
        u64::from(d.is_maximal() && d.fixed_by_unchecked(&s))
    });
    Ok(CountBig::from(count))
}

/// Result of the two independent dihedral class counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralCount {
    /// Burnside average over all `8g` elements of the dihedral group.
    pub burnside: CountBig,
    /// Number of distinct canonical forms among maximal diagrams.
    pub canonical_classes: CountBig,
}

#[derive(Default)]
struct DihedralPartial {
    fixed: u64,
    forms: HashSet<ChordDiagram>,
}

impl std::ops::Add for DihedralPartial {
    type Output = DihedralPartial;

    fn add(mut self, mut other: DihedralPartial) -> DihedralPartial {
        if self.forms.len() < other.forms.len() {
            std::mem::swap(&mut self.forms, &mut other.forms);
        }
        self.forms.extend(other.forms);
        self.fixed += other.fixed;
        self
    }
}

/// Maximal diagrams of genus `g` up to all dihedral symmetries, computed
/// twice. Disagreement between the methods is reported as an error.
pub fn d_circle_oracle(g: usize, force: bool) -> Result<DihedralCount> {
    if g == 0 {
        return Err(Error::Precondition("genus must be at least 1".into()));
    }
    guard("genus", g, MAX_DIHEDRAL_GENUS, force)?;
    guard("chords", 2 * g, MAX_FULL_CHORDS, force)?;
    let points = 4 * g;
    let group: Vec<_> = SymmetryElement::dihedral(points).collect();
    let partial = fold_diagrams(2 * g, |d| {
        let mut part = DihedralPartial::default();
        if d.is_maximal() {
            part.fixed = group.iter().filter(|s| d.fixed_by_unchecked(s)).count() as u64;
            part.forms.insert(d.canonical_form());
        }
        part
    });
    let burnside = burnside_quotient(partial.fixed, group.len() as u64, "dihedral classes")?;
    let canonical_classes = CountBig::from(partial.forms.len());
    if burnside != canonical_classes {
        return Err(Error::InvariantViolation(format!(
            "Burnside count {burnside} disagrees with {canonical_classes} canonical forms"
        )));
    }
    Ok(DihedralCount {
        burnside,
        canonical_classes,
    })
}

/// Number of maximal diagrams fixed by each axis of the given type.
pub fn axis_fixed_counts(g: usize, axis: AxisType, force: bool) -> Result<Vec<u64>> {
    if g == 0 {
        return Err(Error::Precondition("genus must be at least 1".into()));
    }
    guard("genus", g, MAX_AXIS_CHECK_GENUS, force)?;
    let points = 4 * g;
    Ok(axis
        .axes(points)
        .iter()
        .map(|s| count_symmetric_maximal(points, s))
        .collect())
}

/// True iff every axis of the given type fixes the same number of maximal
/// diagrams.
pub fn axis_independence_check(g: usize, axis: AxisType, force: bool) -> Result<bool> {
    let counts = axis_fixed_counts(g, axis, force)?;
    Ok(counts.windows(2).all(|w| w[0] == w[1]))
}
