//! Pitch classes as residues mod 12 and the transposition/inversion group.
//!
//! A [`TiElement`] is one of the 24 maps `T_n(x) = x + n` and
//! `I_n(x) = -x + n` on pitch classes. Composition is right to left:
//! `a.compose(b)` applies `b` first, then `a`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// An equal-tempered pitch class, `0` = C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PitchClass(u8);

impl PitchClass {
    pub const C: PitchClass = PitchClass(0);

    /// Reduces any integer mod 12.
    pub const fn new(value: i64) -> Self {
        PitchClass(value.rem_euclid(12) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = PitchClass> {
        (0..12).map(PitchClass)
    }

    pub const fn add(self, semitones: i64) -> Self {
        PitchClass::new(self.0 as i64 + semitones)
    }

    /// Directed interval `other - self` in `0..12`.
    pub const fn interval_to(self, other: PitchClass) -> u8 {
        PitchClass::new(other.0 as i64 - self.0 as i64).0
    }
}

impl From<u8> for PitchClass {
    fn from(value: u8) -> Self {
        PitchClass::new(value as i64)
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TiKind {
    Transposition,
    Inversion,
}

/// `T_n` or `I_n`, with `n` reduced mod 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TiElement {
    kind: TiKind,
    index: u8,
}

impl TiElement {
    pub const IDENTITY: TiElement = TiElement::t(0);

    pub const fn t(n: i64) -> Self {
        TiElement {
            kind: TiKind::Transposition,
            index: PitchClass::new(n).0,
        }
    }

    pub const fn i(n: i64) -> Self {
        TiElement {
            kind: TiKind::Inversion,
            index: PitchClass::new(n).0,
        }
    }

    pub const fn kind(self) -> TiKind {
        self.kind
    }

    pub const fn index(self) -> u8 {
        self.index
    }

    pub const fn is_inversion(self) -> bool {
        matches!(self.kind, TiKind::Inversion)
    }

    /// `T_0..T_11` followed by `I_0..I_11`.
    pub fn all() -> impl Iterator<Item = TiElement> {
        (0..12).map(TiElement::t).chain((0..12).map(TiElement::i))
    }

    /// Position in [`TiElement::all`].
    pub const fn ordinal(self) -> usize {
        match self.kind {
            TiKind::Transposition => self.index as usize,
            TiKind::Inversion => 12 + self.index as usize,
        }
    }

    pub const fn apply(self, x: PitchClass) -> PitchClass {
        match self.kind {
            TiKind::Transposition => tn_apply(self.index as i64, x),
            TiKind::Inversion => in_apply(self.index as i64, x),
        }
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub const fn compose(self, other: TiElement) -> TiElement {
        let (m, n) = (self.index as i64, other.index as i64);
        match (self.kind, other.kind) {
            (TiKind::Transposition, TiKind::Transposition) => TiElement::t(m + n),
            (TiKind::Transposition, TiKind::Inversion) => TiElement::i(m + n),
            (TiKind::Inversion, TiKind::Transposition) => TiElement::i(m - n),
            (TiKind::Inversion, TiKind::Inversion) => TiElement::t(m - n),
        }
    }

    pub const fn inverse(self) -> TiElement {
        match self.kind {
            TiKind::Transposition => TiElement::t(-(self.index as i64)),
            TiKind::Inversion => self,
        }
    }
}

impl fmt::Display for TiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TiKind::Transposition => write!(f, "T_{}", self.index),
            TiKind::Inversion => write!(f, "I_{}", self.index),
        }
    }
}

pub const fn tn_apply(n: i64, x: PitchClass) -> PitchClass {
    PitchClass::new(x.0 as i64 + n)
}

pub const fn in_apply(n: i64, x: PitchClass) -> PitchClass {
    PitchClass::new(n - x.0 as i64)
}

pub const fn ti_compose(a: TiElement, b: TiElement) -> TiElement {
    a.compose(b)
}

pub const fn ti_invert(a: TiElement) -> TiElement {
    a.inverse()
}

/// Shortest distance around the pitch-class clock, in `0..=6` semitones.
pub const fn circ_dist(x: PitchClass, y: PitchClass) -> u8 {
    let d = x.interval_to(y);
    if d > 6 {
        12 - d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pc(v: i64) -> PitchClass {
        PitchClass::new(v)
    }

    #[test]
    fn transposition_examples() {
        assert_eq!(tn_apply(4, pc(11)), pc(3));
        assert_eq!(tn_apply(0, pc(5)), pc(5));
        assert_eq!(tn_apply(7, pc(2)), pc(9));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(in_apply(0, pc(4)), pc(8));
        assert_eq!(in_apply(0, pc(0)), pc(0));
        assert_eq!(in_apply(6, pc(2)), pc(4));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            ti_compose(TiElement::i(3), TiElement::t(4)),
            TiElement::i(11)
        );
        assert_eq!(
            ti_compose(TiElement::t(0), TiElement::i(5)),
            TiElement::i(5)
        );
        assert_eq!(
            ti_compose(TiElement::i(2), TiElement::i(2)),
            TiElement::IDENTITY
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(ti_invert(TiElement::t(5)), TiElement::t(7));
        assert_eq!(ti_invert(TiElement::i(9)), TiElement::i(9));
        assert_eq!(ti_invert(TiElement::t(0)), TiElement::t(0));
    }

    #[test]
    fn circ_dist_examples() {
        assert_eq!(circ_dist(pc(4), pc(3)), 1);
        assert_eq!(circ_dist(pc(7), pc(9)), 2);
        assert_eq!(circ_dist(pc(0), pc(6)), 6);
    }

    #[test]
    fn construction_reduces() {
        assert_eq!(PitchClass::new(-1).value(), 11);
        assert_eq!(PitchClass::new(24).value(), 0);
        assert_eq!(TiElement::t(13), TiElement::t(1));
        assert_eq!(TiElement::i(-3).index(), 9);
    }

    fn graph(g: TiElement) -> Vec<PitchClass> {
        PitchClass::all().map(|x| g.apply(x)).collect()
    }

    #[test]
    fn the_24_elements_are_distinct_functions() {
        let mut graphs: Vec<_> = TiElement::all().map(graph).collect();
        graphs.sort();
        graphs.dedup();
        assert_eq!(graphs.len(), 24);
        for (k, g) in TiElement::all().enumerate() {
            assert_eq!(g.ordinal(), k);
        }
    }

    #[test]
    fn dihedral_presentation() {
        let s = TiElement::t(1);
        let t = TiElement::i(0);
        let s12 = (0..12).fold(TiElement::IDENTITY, |acc, _| acc.compose(s));
        assert_eq!(s12, TiElement::IDENTITY);
        assert_eq!(t.compose(t), TiElement::IDENTITY);
        assert_eq!(t.compose(s).compose(t), s.inverse());
    }

    fn ti_element() -> impl Strategy<Value = TiElement> {
        (0usize..24).prop_map(|k| TiElement::all().nth(k).unwrap())
    }

    proptest! {
        #[test]
        fn inversion_is_transposed_i0(n in 0i64..12, x in 0i64..12) {
            prop_assert_eq!(tn_apply(n, in_apply(0, pc(x))), in_apply(n, pc(x)));
        }

        #[test]
        fn compose_matches_pointwise(a in ti_element(), b in ti_element()) {
            let ab = a.compose(b);
            for x in PitchClass::all() {
                prop_assert_eq!(ab.apply(x), a.apply(b.apply(x)));
            }
        }

        #[test]
        fn compose_is_associative(a in ti_element(), b in ti_element(), c in ti_element()) {
            prop_assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
        }

        #[test]
        fn inverse_cancels(a in ti_element()) {
            prop_assert_eq!(a.compose(a.inverse()), TiElement::IDENTITY);
            prop_assert_eq!(a.inverse().compose(a), TiElement::IDENTITY);
        }

        #[test]
        fn circ_dist_is_a_bounded_metric(x in 0i64..12, y in 0i64..12, z in 0i64..12) {
            let (x, y, z) = (pc(x), pc(y), pc(z));
            prop_assert!(circ_dist(x, y) <= 6);
            prop_assert_eq!(circ_dist(x, y), circ_dist(y, x));
            prop_assert_eq!(circ_dist(x, y) == 0, x == y);
            prop_assert!(circ_dist(x, z) <= circ_dist(x, y) + circ_dist(y, z));
        }
    }
}
