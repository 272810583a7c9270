//! The two actions on consonant triads.
//!
//! The componentwise action applies a [`TiElement`] to each tone. The
//! contextual action uses `P`, `L` and `R`, each an inversion `I_n` whose
//! index `n` is the sum of two of the triad's own tones:
//!
//! | op | index       | components exchanged |
//! |----|-------------|----------------------|
//! | P  | `y1 + y3`   | 1 ↔ 3                |
//! | L  | `y2 + y3`   | 2 ↔ 3                |
//! | R  | `y1 + y2`   | 1 ↔ 2                |
//!
//! Words over `{P, L, R}` are read right to left, so `LR` means "R, then L".
//! With `s = LR` and `t = L` every element of the group they generate has a
//! unique normal form `s^k t^e`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permgroup::Permutation;
use crate::pitchspace::{PitchClass, TiElement};
use crate::triads::{all_triads, ConsonantTriad, Parity, TRIAD_COUNT};

/// The permutation of the canonical triad indexing induced by `f`.
pub fn triad_permutation(f: impl Fn(ConsonantTriad) -> ConsonantTriad) -> Permutation {
    Permutation::from_fn(TRIAD_COUNT, |k| f(ConsonantTriad::from_index(k)).index())
}

pub fn ti_on_triad(g: TiElement, y: ConsonantTriad) -> ConsonantTriad {
    y.transform(g)
}

pub fn ti_permutation(g: TiElement) -> Permutation {
    triad_permutation(|y| y.transform(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PlrOp {
    P,
    L,
    R,
}

impl PlrOp {
    pub const ALL: [PlrOp; 3] = [PlrOp::P, PlrOp::L, PlrOp::R];

    /// The two component positions whose sum indexes the inversion.
    pub const fn axis_components(self) -> (usize, usize) {
        match self {
            PlrOp::P => (0, 2),
            PlrOp::L => (1, 2),
            PlrOp::R => (0, 1),
        }
    }

    /// The component that moves; the other two are exchanged.
    pub const fn moving_component(self) -> usize {
        match self {
            PlrOp::P => 1,
            PlrOp::L => 0,
            PlrOp::R => 2,
        }
    }

    pub fn inversion_for(self, y: ConsonantTriad) -> TiElement {
        let (i, j) = self.axis_components();
        let tones = y.tones();
        TiElement::i(tones[i].value() as i64 + tones[j].value() as i64)
    }

    pub fn apply(self, y: ConsonantTriad) -> ConsonantTriad {
        y.transform(self.inversion_for(y))
    }

    pub fn axis(self, y: ConsonantTriad) -> InversionAxis {
        InversionAxis::of(self.inversion_for(y))
    }

    pub fn permutation(self) -> Permutation {
        triad_permutation(|y| self.apply(y))
    }

    pub const fn letter(self) -> char {
        match self {
            PlrOp::P => 'P',
            PlrOp::L => 'L',
            PlrOp::R => 'R',
        }
    }
}

impl fmt::Display for PlrOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub fn p_apply(y: ConsonantTriad) -> ConsonantTriad {
    PlrOp::P.apply(y)
}

pub fn l_apply(y: ConsonantTriad) -> ConsonantTriad {
    PlrOp::L.apply(y)
}

pub fn r_apply(y: ConsonantTriad) -> ConsonantTriad {
    PlrOp::R.apply(y)
}

/// The two antipodal clock points fixed by an inversion, in half-semitone
/// ticks (`0..24`). Tick `t` sits at clock position `t / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionAxis {
    pub ticks: [u8; 2],
}

impl InversionAxis {
    /// The axis of `I_n` passes through `n/2` and `n/2 + 6`.
    pub fn of(inversion: TiElement) -> Self {
        debug_assert!(inversion.is_inversion());
        let n = inversion.index();
        InversionAxis { ticks: [n, n + 12] }
    }

    pub fn clock_positions(self) -> [f64; 2] {
        self.ticks.map(|t| t as f64 / 2.0)
    }
}

impl fmt::Display for InversionAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.clock_positions();
        write!(f, "{a}-{b}")
    }
}

pub fn inversion_axis(op: PlrOp, y: ConsonantTriad) -> InversionAxis {
    op.axis(y)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid PLR word `{word}`: unexpected `{found}` at position {position}")]
pub struct WordError {
    pub word: String,
    pub found: char,
    pub position: usize,
}

/// A word over `{P, L, R}`, written and applied right to left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PlrWord(Vec<PlrOp>);

impl PlrWord {
    pub fn new(letters: Vec<PlrOp>) -> Self {
        PlrWord(letters)
    }

    pub fn letters(&self) -> &[PlrOp] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The word `self other`; the letters of `other` act first.
    pub fn concat(&self, other: &PlrWord) -> PlrWord {
        PlrWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn repeat(&self, times: usize) -> PlrWord {
        PlrWord(self.0.repeat(times))
    }

    pub fn apply(&self, y: ConsonantTriad) -> ConsonantTriad {
        self.0.iter().rev().fold(y, |acc, op| op.apply(acc))
    }

    pub fn permutation(&self) -> Permutation {
        triad_permutation(|y| self.apply(y))
    }
}

impl From<PlrOp> for PlrWord {
    fn from(op: PlrOp) -> Self {
        PlrWord(vec![op])
    }
}

impl FromStr for PlrWord {
    type Err = WordError;

    /// Accepts letters `P`, `L`, `R`; `""` and `"1"` are the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "1" {
            return Ok(PlrWord::default());
        }
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                'P' => Ok(PlrOp::P),
                'L' => Ok(PlrOp::L),
                'R' => Ok(PlrOp::R),
                found => Err(WordError {
                    word: s.to_string(),
                    found,
                    position,
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PlrWord)
    }
}

impl fmt::Display for PlrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for op in &self.0 {
            write!(f, "{op}")?;
        }
        Ok(())
    }
}

pub fn word_apply(w: &PlrWord, y: ConsonantTriad) -> ConsonantTriad {
    w.apply(y)
}

/// `s^k t^e` with `s = LR`, `t = L`; `t^e` acts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DihedralNormalForm {
    k: u8,
    e: bool,
}

impl DihedralNormalForm {
    pub const IDENTITY: DihedralNormalForm = DihedralNormalForm { k: 0, e: false };

    pub fn new(k: i64, e: bool) -> Self {
        DihedralNormalForm {
            k: k.rem_euclid(12) as u8,
            e,
        }
    }

    pub fn k(self) -> u8 {
        self.k
    }

    pub fn e(self) -> bool {
        self.e
    }

    /// `(k, e)` for `e = false` first, then `e = true`, `k` ascending.
    pub fn all() -> impl Iterator<Item = DihedralNormalForm> {
        [false, true]
            .into_iter()
            .flat_map(|e| (0..12).map(move |k| DihedralNormalForm::new(k, e)))
    }

    /// The word `(LR)^k L^e`.
    pub fn word(self) -> PlrWord {
        let s = PlrWord::new(vec![PlrOp::L, PlrOp::R]).repeat(self.k as usize);
        if self.e {
            s.concat(&PlrOp::L.into())
        } else {
            s
        }
    }

    pub fn apply(self, y: ConsonantTriad) -> ConsonantTriad {
        let flipped = if self.e { PlrOp::L.apply(y) } else { y };
        (0..self.k).fold(flipped, |acc, _| PlrOp::L.apply(PlrOp::R.apply(acc)))
    }

    pub fn permutation(self) -> Permutation {
        triad_permutation(|y| self.apply(y))
    }

    /// A single letter equal to this element, if any.
    pub fn as_letter(self) -> Option<PlrOp> {
        let perm = self.permutation();
        PlrOp::ALL.into_iter().find(|op| op.permutation() == perm)
    }
}

/// Renders as `1`, `t`, `s`, `s^k`, `s t`, or `s^k t`.
impl fmt::Display for DihedralNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k, self.e) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "t"),
            (1, e) => write!(f, "s{}", if e { " t" } else { "" }),
            (k, e) => write!(f, "s^{k}{}", if e { " t" } else { "" }),
        }
    }
}

/// Matches the permutation of `w` against the 24 normal forms.
pub fn word_normal_form(w: &PlrWord) -> DihedralNormalForm {
    let perm = w.permutation();
    DihedralNormalForm::all()
        .find(|nf| nf.permutation() == perm)
        .expect("every PLR word has a dihedral normal form")
}

/// Every `g` with `gY = Z`. Exactly one by simple transitivity.
pub fn ti_solutions(y: ConsonantTriad, z: ConsonantTriad) -> Vec<TiElement> {
    TiElement::all().filter(|&g| y.transform(g) == z).collect()
}

pub fn find_ti(y: ConsonantTriad, z: ConsonantTriad) -> TiElement {
    let solutions = ti_solutions(y, z);
    debug_assert_eq!(solutions.len(), 1);
    solutions[0]
}

pub fn plr_solutions(y: ConsonantTriad, z: ConsonantTriad) -> Vec<DihedralNormalForm> {
    DihedralNormalForm::all()
        .filter(|nf| nf.apply(y) == z)
        .collect()
}

pub fn find_plr(y: ConsonantTriad, z: ConsonantTriad) -> DihedralNormalForm {
    let solutions = plr_solutions(y, z);
    debug_assert_eq!(solutions.len(), 1);
    solutions[0]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Uniform triadic transformation `⟨σ, t+, t−⟩`: transpose the root of a
/// major triad by `t+` and of a minor triad by `t−`, flipping parity iff
/// `σ` is `−`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Utt {
    pub sign: Sign,
    pub tplus: u8,
    pub tminus: u8,
}

impl Utt {
    pub const P: Utt = Utt::new(Sign::Minus, 0, 0);
    pub const L: Utt = Utt::new(Sign::Minus, 4, 8);
    pub const R: Utt = Utt::new(Sign::Minus, 9, 3);
    /// Diatonic mediant. Exposed for reference only.
    pub const M: Utt = Utt::new(Sign::Minus, 9, 8);
    /// Dominant, `T_5`.
    pub const D: Utt = Utt::transposition(5);

    pub const fn new(sign: Sign, tplus: i64, tminus: i64) -> Self {
        Utt {
            sign,
            tplus: PitchClass::new(tplus).value(),
            tminus: PitchClass::new(tminus).value(),
        }
    }

    pub const fn transposition(n: i64) -> Self {
        Utt::new(Sign::Plus, n, n)
    }

    pub fn all() -> impl Iterator<Item = Utt> {
        [Sign::Plus, Sign::Minus]
            .into_iter()
            .flat_map(|sign| (0..12).flat_map(move |a| (0..12).map(move |b| Utt::new(sign, a, b))))
    }

    pub fn apply(self, y: ConsonantTriad) -> ConsonantTriad {
        let shift = match y.parity() {
            Parity::Major => self.tplus,
            Parity::Minor => self.tminus,
        };
        let parity = match self.sign {
            Sign::Plus => y.parity(),
            Sign::Minus => y.parity().flip(),
        };
        ConsonantTriad::from_root(y.root().add(shift as i64), parity)
    }

    pub fn permutation(self) -> Permutation {
        triad_permutation(|y| self.apply(y))
    }

    /// Reads the parameters off the images of C major and c minor, then
    /// checks the whole permutation.
    pub fn from_permutation(p: &Permutation) -> Option<Utt> {
        let c_major = ConsonantTriad::C_MAJOR;
        let c_minor = ConsonantTriad::minor(PitchClass::C);
        let image_major = ConsonantTriad::from_index(p.apply(c_major.index()));
        let image_minor = ConsonantTriad::from_index(p.apply(c_minor.index()));
        let sign = if image_major.parity() == Parity::Major {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let candidate = Utt::new(
            sign,
            image_major.root().value() as i64,
            image_minor.root().value() as i64,
        );
        (candidate.permutation() == *p).then_some(candidate)
    }

    /// `self ∘ other`, computed on the induced permutations.
    pub fn compose(self, other: Utt) -> Utt {
        Utt::from_permutation(&self.permutation().compose(&other.permutation()))
            .expect("uniform triadic transformations are closed under composition")
    }
}

impl fmt::Display for Utt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "<{sign},{},{}>", self.tplus, self.tminus)
    }
}

pub fn utt_apply(u: Utt, y: ConsonantTriad) -> ConsonantTriad {
    u.apply(y)
}

/// A quasi-uniform triadic transformation: roots of major triads move by
/// `on_major`, roots of minor triads by `on_minor` (each a transposition or
/// inversion of the root), and parity flips iff `sign` is `−`.
///
/// Uniform transformations are the case where both root maps are
/// transpositions. Componentwise `I_n` is `⟨−, I_{n−7}, I_{n−7}⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuasiUtt {
    pub sign: Sign,
    pub on_major: TiElement,
    pub on_minor: TiElement,
}

impl QuasiUtt {
    pub fn all() -> impl Iterator<Item = QuasiUtt> {
        [Sign::Plus, Sign::Minus].into_iter().flat_map(|sign| {
            TiElement::all().flat_map(move |on_major| {
                TiElement::all().map(move |on_minor| QuasiUtt {
                    sign,
                    on_major,
                    on_minor,
                })
            })
        })
    }

    pub fn apply(self, y: ConsonantTriad) -> ConsonantTriad {
        let (g, parity) = match (y.parity(), self.sign) {
            (Parity::Major, Sign::Plus) => (self.on_major, Parity::Major),
            (Parity::Major, Sign::Minus) => (self.on_major, Parity::Minor),
            (Parity::Minor, Sign::Plus) => (self.on_minor, Parity::Minor),
            (Parity::Minor, Sign::Minus) => (self.on_minor, Parity::Major),
        };
        ConsonantTriad::from_root(g.apply(y.root()), parity)
    }

    pub fn permutation(self) -> Permutation {
        triad_permutation(|y| self.apply(y))
    }
}

impl From<Utt> for QuasiUtt {
    fn from(u: Utt) -> Self {
        QuasiUtt {
            sign: u.sign,
            on_major: TiElement::t(u.tplus as i64),
            on_minor: TiElement::t(u.tminus as i64),
        }
    }
}

/// The moving voice of `op` on `y`: (from, to).
pub fn moving_voice(op: PlrOp, y: ConsonantTriad) -> (PitchClass, PitchClass) {
    let c = op.moving_component();
    let before = y.tones()[c];
    (before, op.inversion_for(y).apply(before))
}

pub fn triads_by_op(op: PlrOp) -> impl Iterator<Item = (ConsonantTriad, ConsonantTriad)> {
    all_triads().map(move |y| (y, op.apply(y)))
}
