//! The 24 consonant triads as ordered pitch-class triples.
//!
//! Majors are `T_n⟨0,4,7⟩` and minors are `I_n⟨0,4,7⟩`. The canonical index
//! runs majors 0..12 by root, then minors 12..24 by the inversion index `n`,
//! so index 12 is f minor `⟨0,8,5⟩`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pitchspace::{PitchClass, TiElement};

pub const TRIAD_COUNT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Major,
    Minor,
}

impl Parity {
    pub const fn flip(self) -> Parity {
        match self {
            Parity::Major => Parity::Minor,
            Parity::Minor => Parity::Major,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriadError {
    #[error("unrecognized chord name `{0}`")]
    BadName(String),
    #[error("malformed triple literal `{0}`")]
    BadLiteral(String),
    #[error("`{0}` is not a consonant triad")]
    NotConsonant(String),
}

/// An ordered consonant triad `⟨y1, y2, y3⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConsonantTriad {
    tones: [PitchClass; 3],
}

impl ConsonantTriad {
    pub const C_MAJOR: ConsonantTriad = ConsonantTriad::major(PitchClass::C);

    pub fn new(tones: [PitchClass; 3]) -> Result<Self, TriadError> {
        let intervals = (
            tones[0].interval_to(tones[1]),
            tones[0].interval_to(tones[2]),
        );
        match intervals {
            (4, 7) | (8, 5) => Ok(ConsonantTriad { tones }),
            _ => Err(TriadError::NotConsonant(format_triple(tones))),
        }
    }

    pub const fn major(root: PitchClass) -> Self {
        ConsonantTriad {
            tones: [root, root.add(4), root.add(7)],
        }
    }

    pub const fn minor(root: PitchClass) -> Self {
        ConsonantTriad {
            tones: [root.add(7), root.add(3), root],
        }
    }

    pub const fn from_root(root: PitchClass, parity: Parity) -> Self {
        match parity {
            Parity::Major => ConsonantTriad::major(root),
            Parity::Minor => ConsonantTriad::minor(root),
        }
    }

    /// Panics if `index >= 24`.
    pub fn from_index(index: usize) -> Self {
        assert!(index < TRIAD_COUNT, "triad index {index} out of range");
        if index < 12 {
            ConsonantTriad::major(PitchClass::new(index as i64))
        } else {
            ConsonantTriad::minor(PitchClass::new(index as i64 - 12 - 7))
        }
    }

    pub const fn index(self) -> usize {
        match self.parity() {
            Parity::Major => self.tones[0].value() as usize,
            Parity::Minor => 12 + self.tones[0].value() as usize,
        }
    }

    pub const fn tones(self) -> [PitchClass; 3] {
        self.tones
    }

    pub const fn parity(self) -> Parity {
        if self.tones[0].interval_to(self.tones[1]) == 4 {
            Parity::Major
        } else {
            Parity::Minor
        }
    }

    pub const fn root(self) -> PitchClass {
        match self.parity() {
            Parity::Major => self.tones[0],
            Parity::Minor => self.tones[2],
        }
    }

    /// Applies `g` to each component. The result is always consonant.
    pub fn transform(self, g: TiElement) -> Self {
        ConsonantTriad {
            tones: self.tones.map(|x| g.apply(x)),
        }
    }

    pub fn pitch_set(self) -> BTreeSet<PitchClass> {
        self.tones.into_iter().collect()
    }

    pub fn common_tones(self, other: ConsonantTriad) -> BTreeSet<PitchClass> {
        common_tones(self, other)
    }

    pub fn name(self) -> TriadName {
        TriadName::of(self, Spelling::Sharp)
    }

    pub fn spell(self, spelling: Spelling) -> String {
        match spelling {
            Spelling::Verbose => {
                let sharp = TriadName::of(self, Spelling::Sharp);
                let flat = TriadName::of(self, Spelling::Flat);
                if sharp == flat {
                    sharp.to_string()
                } else {
                    format!("{sharp}/{flat}")
                }
            }
            other => TriadName::of(self, other).to_string(),
        }
    }

    pub fn literal(self) -> String {
        format_triple(self.tones)
    }
}

impl fmt::Display for ConsonantTriad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.name().fmt(f)
    }
}

impl FromStr for ConsonantTriad {
    type Err = TriadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_name(s)
    }
}

impl Serialize for ConsonantTriad {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ConsonantTriad {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_name(&s).map_err(serde::de::Error::custom)
    }
}

fn format_triple(tones: [PitchClass; 3]) -> String {
    format!("<{},{},{}>", tones[0], tones[1], tones[2])
}

/// Entries 0..12 are `T_n⟨0,4,7⟩`, entries 12..24 are `I_n⟨0,4,7⟩`.
pub fn triad_table() -> [ConsonantTriad; TRIAD_COUNT] {
    let base = ConsonantTriad::C_MAJOR;
    std::array::from_fn(|k| {
        let g = TiElement::all().nth(k).expect("24 elements");
        base.transform(g)
    })
}

pub fn all_triads() -> impl Iterator<Item = ConsonantTriad> {
    (0..TRIAD_COUNT).map(ConsonantTriad::from_index)
}

pub fn common_tones(y: ConsonantTriad, z: ConsonantTriad) -> BTreeSet<PitchClass> {
    y.pitch_set()
        .intersection(&z.pitch_set())
        .copied()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Accidental {
    Natural,
    Sharp,
    Flat,
}

/// How black-key roots are spelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Spelling {
    /// First spelling in the triad table, e.g. `C#`.
    #[default]
    Sharp,
    Flat,
    /// Both spellings, e.g. `C#/Db`.
    Verbose,
    /// The spelling whose key signature has fewer accidentals; ties go to flats
    /// (`Gb`, `eb`).
    KeySignature,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriadName {
    pub letter: char,
    pub accidental: Accidental,
    pub parity: Parity,
}

const NATURALS: [(char, u8); 7] = [
    ('C', 0),
    ('D', 2),
    ('E', 4),
    ('F', 5),
    ('G', 7),
    ('A', 9),
    ('B', 11),
];

impl TriadName {
    pub fn of(triad: ConsonantTriad, spelling: Spelling) -> Self {
        let root = triad.root();
        let parity = triad.parity();
        let natural = NATURALS.iter().find(|(_, v)| *v == root.value());
        let (letter, accidental) = match natural {
            Some(&(letter, _)) => (letter, Accidental::Natural),
            None => {
                let use_flat = match spelling {
                    Spelling::Flat => true,
                    Spelling::KeySignature => prefers_flats(root, parity),
                    Spelling::Sharp | Spelling::Verbose => false,
                };
                if use_flat {
                    (letter_of(root.add(1)), Accidental::Flat)
                } else {
                    (letter_of(root.add(-1)), Accidental::Sharp)
                }
            }
        };
        TriadName {
            letter,
            accidental,
            parity,
        }
    }

    pub fn root(&self) -> PitchClass {
        let base = NATURALS
            .iter()
            .find(|(c, _)| *c == self.letter.to_ascii_uppercase())
            .map(|&(_, v)| v)
            .expect("letter is A-G");
        let shift = match self.accidental {
            Accidental::Natural => 0,
            Accidental::Sharp => 1,
            Accidental::Flat => -1,
        };
        PitchClass::new(base as i64 + shift)
    }

    pub fn triad(&self) -> ConsonantTriad {
        ConsonantTriad::from_root(self.root(), self.parity)
    }
}

fn letter_of(pc: PitchClass) -> char {
    NATURALS
        .iter()
        .find(|(_, v)| *v == pc.value())
        .map(|&(c, _)| c)
        .expect("natural pitch class")
}

// Sharps in the key signature of a major key with this tonic.
fn sharps_of_major(tonic: PitchClass) -> u8 {
    PitchClass::new(7 * tonic.value() as i64).value()
}

fn prefers_flats(root: PitchClass, parity: Parity) -> bool {
    let relative_major = match parity {
        Parity::Major => root,
        Parity::Minor => root.add(3),
    };
    sharps_of_major(relative_major) >= 6
}

impl fmt::Display for TriadName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.parity {
            Parity::Major => self.letter.to_ascii_uppercase(),
            Parity::Minor => self.letter.to_ascii_lowercase(),
        };
        let acc = match self.accidental {
            Accidental::Natural => "",
            Accidental::Sharp => "#",
            Accidental::Flat => "b",
        };
        write!(f, "{letter}{acc}")
    }
}

impl FromStr for TriadName {
    type Err = TriadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TriadError::BadName(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        if !matches!(letter.to_ascii_uppercase(), 'A'..='G') {
            return Err(bad());
        }
        let accidental = match chars.next() {
            None => Accidental::Natural,
            Some('#') => Accidental::Sharp,
            Some('b') => Accidental::Flat,
            Some(_) => return Err(bad()),
        };
        if chars.next().is_some() {
            return Err(bad());
        }
        let parity = if letter.is_ascii_uppercase() {
            Parity::Major
        } else {
            Parity::Minor
        };
        Ok(TriadName {
            letter: letter.to_ascii_uppercase(),
            accidental,
            parity,
        })
    }
}

/// Parses `[A-Ga-g](#|b)?` (upper case = major) or a literal `<p,q,r>`.
pub fn parse_name(text: &str) -> Result<ConsonantTriad, TriadError> {
    if text.starts_with('<') {
        return parse_literal(text);
    }
    text.parse::<TriadName>().map(|n| n.triad())
}

fn parse_literal(text: &str) -> Result<ConsonantTriad, TriadError> {
    let bad = || TriadError::BadLiteral(text.to_string());
    let inner = text
        .strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .ok_or_else(bad)?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut tones = [PitchClass::C; 3];
    for (slot, part) in tones.iter_mut().zip(parts) {
        let v: u8 = part.trim().parse().map_err(|_| bad())?;
        if v > 11 {
            return Err(bad());
        }
        *slot = PitchClass::from(v);
    }
    ConsonantTriad::new(tones).map_err(|_| TriadError::NotConsonant(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: i64, b: i64, c: i64) -> ConsonantTriad {
        ConsonantTriad::new([PitchClass::new(a), PitchClass::new(b), PitchClass::new(c)]).unwrap()
    }

    fn set(v: &[i64]) -> BTreeSet<PitchClass> {
        v.iter().map(|&x| PitchClass::new(x)).collect()
    }

    // All consonant triads, row by row: (major, minor).
    const ROWS: [([i64; 3], [i64; 3]); 12] = [
        ([0, 4, 7], [0, 8, 5]),
        ([1, 5, 8], [1, 9, 6]),
        ([2, 6, 9], [2, 10, 7]),
        ([3, 7, 10], [3, 11, 8]),
        ([4, 8, 11], [4, 0, 9]),
        ([5, 9, 0], [5, 1, 10]),
        ([6, 10, 1], [6, 2, 11]),
        ([7, 11, 2], [7, 3, 0]),
        ([8, 0, 3], [8, 4, 1]),
        ([9, 1, 4], [9, 5, 2]),
        ([10, 2, 5], [10, 6, 3]),
        ([11, 3, 6], [11, 7, 4]),
    ];

    #[test]
    fn table_reproduces_rows() {
        let table = triad_table();
        for (n, (maj, min)) in ROWS.iter().enumerate() {
            assert_eq!(table[n], triple(maj[0], maj[1], maj[2]));
            assert_eq!(table[12 + n], triple(min[0], min[1], min[2]));
        }
        assert_eq!(table[1], triple(1, 5, 8));
        assert_eq!(table[12], triple(0, 8, 5));
        assert_eq!(table[0], triple(0, 4, 7));
    }

    #[test]
    fn table_entries_distinct_and_indexed() {
        let table = triad_table();
        let ordered: BTreeSet<_> = table.iter().collect();
        let unordered: BTreeSet<_> = table.iter().map(|t| t.pitch_set()).collect();
        assert_eq!(ordered.len(), 24);
        assert_eq!(unordered.len(), 24);
        for (k, t) in table.iter().enumerate() {
            assert_eq!(t.index(), k);
            assert_eq!(ConsonantTriad::from_index(k), *t);
            assert_eq!(t.parity() == Parity::Major, k < 12);
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_name("Ab").unwrap(), triple(8, 0, 3));
        assert_eq!(parse_name("f").unwrap(), triple(0, 8, 5));
        assert_eq!(
            parse_name("<0,1,3>"),
            Err(TriadError::NotConsonant("<0,1,3>".into()))
        );
        assert_eq!(parse_name("C#").unwrap(), parse_name("Db").unwrap());
        assert_eq!(parse_name("<7,3,0>").unwrap(), parse_name("c").unwrap());
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in [
            "", "H", "C##", "Cx", "cb5", "<1,2>", "<0,4,12>", "<a,b,c>", "<0,4,7",
        ] {
            assert!(parse_name(bad).is_err(), "{bad} should not parse");
        }
        match parse_name("H") {
            Err(TriadError::BadName(tok)) => assert_eq!(tok, "H"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn root_and_parity_examples() {
        let c = triple(0, 4, 7);
        assert_eq!((c.root(), c.parity()), (PitchClass::new(0), Parity::Major));
        let f = triple(0, 8, 5);
        assert_eq!((f.root(), f.parity()), (PitchClass::new(5), Parity::Minor));
        let b = triple(11, 3, 6);
        assert_eq!((b.root(), b.parity()), (PitchClass::new(11), Parity::Major));
    }

    #[test]
    fn common_tone_examples() {
        let c = triple(0, 4, 7);
        assert_eq!(common_tones(c, triple(7, 3, 0)), set(&[0, 7]));
        assert_eq!(common_tones(c, c), set(&[0, 4, 7]));
        assert_eq!(common_tones(c, triple(4, 0, 9)), set(&[0, 4]));
    }

    #[test]
    fn names_round_trip() {
        for t in all_triads() {
            for spelling in [Spelling::Sharp, Spelling::Flat, Spelling::KeySignature] {
                assert_eq!(parse_name(&t.spell(spelling)).unwrap(), t);
            }
            assert_eq!(parse_name(&t.literal()).unwrap(), t);
        }
    }

    #[test]
    fn spellings() {
        let db = parse_name("Db").unwrap();
        assert_eq!(db.to_string(), "C#");
        assert_eq!(db.spell(Spelling::Verbose), "C#/Db");
        assert_eq!(db.spell(Spelling::KeySignature), "Db");
        assert_eq!(parse_name("a").unwrap().spell(Spelling::Verbose), "a");
        let keysig: Vec<String> = ["Gb", "eb", "g#", "bb", "c#", "f#", "Ab"]
            .iter()
            .map(|s| parse_name(s).unwrap().spell(Spelling::KeySignature))
            .collect();
        assert_eq!(keysig, ["Gb", "eb", "g#", "bb", "c#", "f#", "Ab"]);
    }

    #[test]
    fn unusual_enharmonics_parse() {
        assert_eq!(parse_name("Cb").unwrap(), parse_name("B").unwrap());
        assert_eq!(parse_name("e#").unwrap(), parse_name("f").unwrap());
    }
}
