//! Progressions, step-by-step transformation analysis, the commutative
//! squares of the repertoire examples, and the parsimony study over trichords.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::neoriemann::{find_plr, find_ti, ti_on_triad, DihedralNormalForm, PlrOp, PlrWord};
use crate::pitchspace::{circ_dist, PitchClass, TiElement};
use crate::triads::{all_triads, parse_name, ConsonantTriad, Parity, Spelling, TriadError};

/// Progression files shipped with the crate.
pub mod fixtures {
    pub const PACHELBEL: &str = include_str!("../fixtures/pachelbel.txt");
    pub const WAGNER: &str = include_str!("../fixtures/wagner.txt");
    pub const IVES: &str = include_str!("../fixtures/ives.txt");
    pub const BEETHOVEN: &str = include_str!("../fixtures/beethoven.txt");
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty progression")]
    Empty,
    #[error("line {line}, column {column}: `{token}`: {source}")]
    Token {
        line: usize,
        column: usize,
        token: String,
        source: TriadError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("need at least two chords to analyze, got {0}")]
    TooShort(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Progression {
    pub triads: Vec<ConsonantTriad>,
    pub source: Option<String>,
}

impl Progression {
    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    pub fn len(&self) -> usize {
        self.triads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triads.is_empty()
    }

    pub fn names(&self, spelling: Spelling) -> Vec<String> {
        self.triads.iter().map(|t| t.spell(spelling)).collect()
    }
}

/// Whitespace-separated chord names; a token starting with `#` comments out
/// the rest of its line. Columns are 1-based and count characters.
pub fn parse_progression(text: &str) -> Result<Progression, ParseError> {
    let mut triads = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let mut rest = line;
        let mut offset = 0;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                break;
            }
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            let triad = parse_name(token).map_err(|source| ParseError::Token {
                line: line_no + 1,
                column: line[..offset].chars().count() + 1,
                token: token.to_string(),
                source,
            })?;
            triads.push(triad);
            offset += end;
            rest = &trimmed[end..];
        }
    }
    if triads.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(Progression {
        triads,
        source: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransformationStep {
    pub from: ConsonantTriad,
    pub to: ConsonantTriad,
    pub ti: TiElement,
    pub plr: DihedralNormalForm,
}

impl TransformationStep {
    pub fn between(from: ConsonantTriad, to: ConsonantTriad) -> Self {
        TransformationStep {
            from,
            to,
            ti: find_ti(from, to),
            plr: find_plr(from, to),
        }
    }

    /// First triad on which the two transformations disagree; `None` when
    /// they are the same permutation.
    pub fn distinguishing_triad(&self) -> Option<ConsonantTriad> {
        all_triads().find(|&y| ti_on_triad(self.ti, y) != self.plr.apply(y))
    }
}

impl Serialize for TransformationStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TransformationStep", 4)?;
        s.serialize_field("from", &self.from.spell(Spelling::KeySignature))?;
        s.serialize_field("to", &self.to.spell(Spelling::KeySignature))?;
        s.serialize_field("ti", &self.ti.to_string())?;
        s.serialize_field("plr", &self.plr.to_string())?;
        s.end()
    }
}

pub fn analyze(p: &Progression) -> Result<Vec<TransformationStep>, AnalysisError> {
    if p.len() < 2 {
        return Err(AnalysisError::TooShort(p.len()));
    }
    Ok(p.triads
        .windows(2)
        .map(|w| TransformationStep::between(w[0], w[1]))
        .collect())
}

/// Aligned text, one step per line.
pub fn format_steps(steps: &[TransformationStep]) -> String {
    let rows: Vec<[String; 4]> = steps
        .iter()
        .map(|s| {
            let plr = match s.plr.as_letter() {
                Some(op) => format!("{} (= {})", s.plr, op.letter()),
                None => s.plr.to_string(),
            };
            [
                s.from.spell(Spelling::KeySignature),
                s.to.spell(Spelling::KeySignature),
                s.ti.to_string(),
                plr,
            ]
        })
        .collect();
    let header = ["from", "to", "T/I", "PLR"];
    let width = |k: usize| {
        rows.iter()
            .map(|r| r[k].len())
            .chain([header[k].len()])
            .max()
            .unwrap_or(0)
    };
    let (w0, w1, w2) = (width(0), width(1), width(2));
    let mut out = format!(
        "{:w0$}  {:w1$}  {:w2$}  {}\n",
        header[0], header[1], header[2], header[3]
    );
    for r in &rows {
        out.push_str(&format!(
            "{:w0$}  {:w1$}  {:w2$}  {}\n",
            r[0], r[1], r[2], r[3]
        ));
    }
    out
}

#[derive(Serialize)]
pub struct StepsDocument<'a> {
    pub steps: &'a [TransformationStep],
}

/// `{"steps": [{"from", "to", "ti", "plr"}, ...]}`
pub fn steps_json(steps: &[TransformationStep]) -> StepsDocument<'_> {
    StepsDocument { steps }
}

/// ```text
/// top_left  --horiz-->  top_right
///    | vert                | vert
/// bottom_left --horiz--> bottom_right
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareReport {
    pub horiz: TiElement,
    pub vert: PlrWord,
    pub top_left: ConsonantTriad,
    pub top_right: ConsonantTriad,
    pub bottom_left: ConsonantTriad,
    /// `vert(horiz(top_left))`
    pub across_then_down: ConsonantTriad,
    /// `horiz(vert(top_left))`
    pub down_then_across: ConsonantTriad,
}

impl SquareReport {
    pub fn commutes(&self) -> bool {
        self.across_then_down == self.down_then_across
    }

    pub fn bottom_right(&self) -> ConsonantTriad {
        self.across_then_down
    }

    /// Top-left, top-right, bottom-left, bottom-right.
    pub fn corners(&self) -> [ConsonantTriad; 4] {
        [
            self.top_left,
            self.top_right,
            self.bottom_left,
            self.bottom_right(),
        ]
    }

    pub fn corner_names(&self) -> [String; 4] {
        self.corners().map(|t| t.spell(Spelling::KeySignature))
    }
}

impl fmt::Display for SquareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [tl, tr, bl, br] = self.corner_names();
        let arrow = format!("--{}-->", self.horiz);
        let pad = tl.len().max(bl.len());
        writeln!(f, "{tl:pad$} {arrow} {tr}")?;
        writeln!(
            f,
            "{:pad$} {:w$} {}",
            self.vert,
            "",
            self.vert,
            w = arrow.len()
        )?;
        writeln!(f, "{bl:pad$} {arrow} {br}")?;
        write!(f, "commutes: {}", self.commutes())
    }
}

pub fn verify_square(top_left: ConsonantTriad, horiz: TiElement, vert: &PlrWord) -> SquareReport {
    let top_right = ti_on_triad(horiz, top_left);
    let bottom_left = vert.apply(top_left);
    SquareReport {
        horiz,
        vert: vert.clone(),
        top_left,
        top_right,
        bottom_left,
        across_then_down: vert.apply(top_right),
        down_then_across: ti_on_triad(horiz, bottom_left),
    }
}

/// The commutative squares for the Pachelbel, Wagner and Ives examples, in
/// that order. Corners come from the fixture files.
pub fn repertoire_squares() -> Vec<(&'static str, SquareReport)> {
    let square = |name, text: &str, horiz, vert: &str| {
        let p = parse_progression(text).expect("fixture parses");
        (
            name,
            verify_square(p.triads[0], horiz, &vert.parse().expect("valid word")),
        )
    };
    vec![
        square("pachelbel", fixtures::PACHELBEL, TiElement::t(7), "R"),
        square("wagner", fixtures::WAGNER, TiElement::t(5), "R"),
        square("ives", fixtures::IVES, TiElement::i(6), "LR"),
    ]
}

/// `C`, then `R` and `L` alternately: 25 chords ending back on `C`.
pub fn beethoven_sequence() -> Progression {
    let mut triads = vec![ConsonantTriad::C_MAJOR];
    for step in 0..24 {
        let op = if step % 2 == 0 { PlrOp::R } else { PlrOp::L };
        triads.push(op.apply(*triads.last().expect("nonempty")));
    }
    Progression {
        triads,
        source: Some("R and L alternately from C".into()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootMotion {
    pub from: ConsonantTriad,
    pub to: ConsonantTriad,
    /// Signed, in `-5..=6`.
    pub semitones: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualMotionReport {
    pub word: String,
    pub motions: Vec<RootMotion>,
    pub majors_up_five: bool,
    pub minors_down_five: bool,
}

impl DualMotionReport {
    pub fn passed(&self) -> bool {
        self.majors_up_five && self.minors_down_five
    }
}

impl fmt::Display for DualMotionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.motions {
            writeln!(
                f,
                "{}({}) = {:<3} root {:>2} -> {:>2} ({:+})",
                self.word,
                m.from.spell(Spelling::KeySignature),
                m.to.spell(Spelling::KeySignature),
                m.from.root().value(),
                m.to.root().value(),
                m.semitones
            )?;
        }
        writeln!(f, "majors up 5: {}", self.majors_up_five)?;
        write!(f, "minors down 5: {}", self.minors_down_five)
    }
}

fn signed_motion(from: PitchClass, to: PitchClass) -> i8 {
    let up = from.interval_to(to) as i8;
    if up > 6 {
        up - 12
    } else {
        up
    }
}

pub fn ives_dual_motion_report() -> DualMotionReport {
    let word: PlrWord = "LR".parse().expect("valid word");
    let motions: Vec<RootMotion> = all_triads()
        .map(|y| {
            let z = word.apply(y);
            RootMotion {
                from: y,
                to: z,
                semitones: signed_motion(y.root(), z.root()),
            }
        })
        .collect();
    let all_shift = |parity, shift| {
        motions
            .iter()
            .filter(|m| m.from.parity() == parity)
            .all(|m| m.semitones == shift)
    };
    DualMotionReport {
        word: word.to_string(),
        majors_up_five: all_shift(Parity::Major, 5),
        minors_down_five: all_shift(Parity::Minor, -5),
        motions,
    }
}

/// Moving-voice displacement of the `P`, `L` and `R` analogues on an ordered
/// trichord `⟨y1,y2,y3⟩`: `P` reflects `y2` through `y1,y3`, `L` reflects `y1`
/// through `y2,y3`, `R` reflects `y3` through `y1,y2`.
pub fn trichord_displacements(y: [PitchClass; 3]) -> [u8; 3] {
    let reflect = |moving: usize, a: usize, b: usize| {
        let image =
            PitchClass::new(y[a].value() as i64 + y[b].value() as i64 - y[moving].value() as i64);
        circ_dist(y[moving], image)
    };
    [reflect(1, 0, 2), reflect(0, 1, 2), reflect(2, 0, 1)]
}

pub const MERGE_RULE: &str = "each T/I class is represented by its member <0,a,b> minimizing \
(maxDisp, sumDisp, displacements, rep); maxDisp and sumDisp are the same for every member";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParsimonyRow {
    pub class_rep: [u8; 3],
    /// `P`, `L`, `R`.
    pub displacements: [u8; 3],
    pub max_disp: u8,
    pub sum_disp: u8,
    pub excluded: bool,
    pub members: Vec<[u8; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParsimonyStudy {
    pub merge_rule: &'static str,
    pub rows: Vec<ParsimonyRow>,
}

impl ParsimonyStudy {
    pub fn row_containing(&self, rep: [u8; 3]) -> Option<&ParsimonyRow> {
        self.rows.iter().find(|r| r.members.contains(&rep))
    }

    pub fn ranked(&self) -> impl Iterator<Item = &ParsimonyRow> {
        self.rows.iter().filter(|r| !r.excluded)
    }

    /// True when the consonant class has strictly smaller `maxDisp` than every
    /// other non-excluded class.
    pub fn consonant_strictly_best(&self) -> bool {
        let Some(consonant) = self.row_containing([0, 4, 7]) else {
            return false;
        };
        self.ranked()
            .filter(|r| r != &consonant)
            .all(|r| r.max_disp > consonant.max_disp)
    }
}

impl fmt::Display for ParsimonyStudy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let triple = |t: [u8; 3]| format!("<{},{},{}>", t[0], t[1], t[2]);
        writeln!(
            f,
            "{:<10}  {:>2} {:>2} {:>2}  {:>3}  {:>3}  members",
            "class", "P", "L", "R", "max", "sum"
        )?;
        for r in &self.rows {
            let [p, l, rr] = r.displacements;
            let members: Vec<String> = r.members.iter().map(|&m| triple(m)).collect();
            let flag = if r.excluded { "  (excluded)" } else { "" };
            writeln!(
                f,
                "{:<10}  {:>2} {:>2} {:>2}  {:>3}  {:>3}  {}{}",
                triple(r.class_rep),
                p,
                l,
                rr,
                r.max_disp,
                r.sum_disp,
                members.join(" "),
                flag
            )?;
        }
        write!(f, "merge rule: {}", self.merge_rule)
    }
}

// Smallest sorted pitch-class set in the T/I orbit of `rep`.
fn class_key(rep: [u8; 3]) -> [u8; 3] {
    TiElement::all()
        .map(|g| {
            let mut set = rep.map(|x| g.apply(PitchClass::new(x as i64)).value());
            set.sort_unstable();
            set
        })
        .min()
        .expect("group is nonempty")
}

/// Every `⟨0,a,b⟩` with `0<a<b≤11`, grouped into T/I classes. The class
/// `⟨0,4,8⟩` has all displacements zero and is flagged excluded. Rows are
/// ordered by `(excluded, maxDisp, sumDisp, classRep)`.
pub fn parsimony_study() -> ParsimonyStudy {
    let mut classes: BTreeMap<[u8; 3], Vec<[u8; 3]>> = BTreeMap::new();
    for a in 1..12u8 {
        for b in a + 1..12u8 {
            classes
                .entry(class_key([0, a, b]))
                .or_default()
                .push([0, a, b]);
        }
    }
    let mut rows: Vec<ParsimonyRow> = classes
        .into_values()
        .map(|members| {
            let stats = |rep: [u8; 3]| {
                let d = trichord_displacements(rep.map(|x| PitchClass::new(x as i64)));
                let max = *d.iter().max().expect("three voices");
                let sum: u8 = d.iter().sum();
                (max, sum, d, rep)
            };
            let (max_disp, sum_disp, displacements, class_rep) = members
                .iter()
                .map(|&m| stats(m))
                .min()
                .expect("class is nonempty");
            ParsimonyRow {
                class_rep,
                displacements,
                max_disp,
                sum_disp,
                excluded: max_disp == 0,
                members,
            }
        })
        .collect();
    rows.sort_by_key(|r| (r.excluded, r.max_disp, r.sum_disp, r.class_rep));
    ParsimonyStudy {
        merge_rule: MERGE_RULE,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(name: &str) -> ConsonantTriad {
        parse_name(name).unwrap()
    }

    fn pcs(v: [u8; 3]) -> [PitchClass; 3] {
        v.map(|x| PitchClass::new(x as i64))
    }

    #[test]
    fn parses_pachelbel() {
        let p = parse_progression("D A b f#").unwrap();
        let lits: Vec<String> = p.triads.iter().map(|t| t.literal()).collect();
        assert_eq!(lits, ["<2,6,9>", "<9,1,4>", "<6,2,11>", "<1,9,6>"]);
        assert_eq!(parse_progression("C").unwrap().len(), 1);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_progression("C a\n  F H d") {
            Err(ParseError::Token {
                line,
                column,
                token,
                ..
            }) => {
                assert_eq!((line, column, token.as_str()), (2, 5, "H"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_progression("H")
                .unwrap_err()
                .to_string()
                .split(':')
                .next(),
            Some("line 1, column 1")
        );
        assert_eq!(parse_progression(""), Err(ParseError::Empty));
        assert_eq!(
            parse_progression("# only a comment\n\n"),
            Err(ParseError::Empty)
        );
    }

    #[test]
    fn comments_and_sharps() {
        let p = parse_progression("# header f#\nC# f# # trailing G\n<0,4,7>").unwrap();
        assert_eq!(p.names(Spelling::Sharp), ["C#", "f#", "C"]);
    }

    #[test]
    fn analyze_examples() {
        let steps = analyze(&parse_progression(fixtures::PACHELBEL).unwrap()).unwrap();
        assert_eq!(steps[0].ti, TiElement::t(7));
        let wagner = analyze(&parse_progression("Ab f").unwrap()).unwrap();
        assert_eq!(wagner[0].plr.as_letter(), Some(PlrOp::R));
        let cc = analyze(&parse_progression("C C").unwrap()).unwrap();
        assert_eq!(cc[0].ti, TiElement::IDENTITY);
        assert_eq!(cc[0].plr, DihedralNormalForm::IDENTITY);
        assert_eq!(
            analyze(&parse_progression("C").unwrap()),
            Err(AnalysisError::TooShort(1))
        );
    }

    #[test]
    fn steps_json_shape() {
        let steps = analyze(&parse_progression("C c").unwrap()).unwrap();
        assert_eq!(
            serde_json::to_value(steps_json(&steps)).unwrap(),
            serde_json::json!({"steps": [{"from": "C", "to": "c", "ti": "I_7", "plr": "s^8 t"}]})
        );
        let text = format_steps(&steps);
        assert!(
            text.lines().nth(1).unwrap().ends_with("s^8 t (= P)"),
            "{text}"
        );
    }

    #[test]
    fn squares() {
        let names: Vec<[String; 4]> = repertoire_squares()
            .iter()
            .map(|(_, s)| s.corner_names())
            .collect();
        assert_eq!(names[0], ["D", "A", "b", "f#"]);
        assert_eq!(names[1], ["Ab", "Db", "f", "bb"]);
        assert_eq!(names[2], ["D", "a", "G", "e"]);
        assert!(repertoire_squares().iter().all(|(_, s)| s.commutes()));
    }

    #[test]
    fn fixture_corners_match_squares() {
        for (name, square) in repertoire_squares() {
            let text = match name {
                "pachelbel" => fixtures::PACHELBEL,
                "wagner" => fixtures::WAGNER,
                _ => fixtures::IVES,
            };
            assert_eq!(parse_progression(text).unwrap().triads, square.corners());
        }
    }

    #[test]
    fn beethoven_matches_fixture() {
        let seq = beethoven_sequence();
        assert_eq!(
            seq.triads,
            parse_progression(fixtures::BEETHOVEN).unwrap().triads
        );
        assert_eq!(
            seq.names(Spelling::KeySignature).join(" "),
            "C a F d Bb g Eb c Ab f Db bb Gb eb B g# E c# A f# D b G e C"
        );
    }

    #[test]
    fn ives_motion() {
        let r = ives_dual_motion_report();
        assert!(r.passed());
        let of = |n: &str| r.motions.iter().find(|m| m.from == t(n)).unwrap();
        assert_eq!((of("D").to, of("D").semitones), (t("G"), 5));
        assert_eq!((of("a").to, of("a").semitones), (t("e"), -5));
        assert_eq!(of("C").to, t("F"));
    }

    // Oracle: reflect each voice about the other two, as a multiset.
    fn displacement_multiset(rep: [u8; 3]) -> Vec<u8> {
        let mut out: Vec<u8> = (0..3)
            .map(|i| {
                let others: i64 = (0..3).filter(|&j| j != i).map(|j| rep[j] as i64).sum();
                let image = (others - rep[i] as i64).rem_euclid(12) as u8;
                let d = (image as i16 - rep[i] as i16).rem_euclid(12) as u8;
                d.min(12 - d)
            })
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn parsimony_examples() {
        assert_eq!(trichord_displacements(pcs([0, 4, 7])), [1, 1, 2]);
        assert_eq!(trichord_displacements(pcs([0, 4, 8])), [0, 0, 0]);
        assert_eq!(trichord_displacements(pcs([0, 1, 3])), [1, 4, 5]);
        let study = parsimony_study();
        assert_eq!(
            study.rows.iter().map(|r| r.members.len()).sum::<usize>(),
            55
        );
        assert_eq!(study.rows.len(), 12);
        let consonant = study.row_containing([0, 3, 7]).unwrap();
        assert_eq!(consonant.class_rep, [0, 4, 7]);
        assert_eq!(consonant.displacements, [1, 1, 2]);
        assert_eq!(&study.rows[0], consonant);
        assert!(study.row_containing([0, 4, 8]).unwrap().excluded);
        assert_eq!(study.rows.iter().filter(|r| r.excluded).count(), 1);
        assert!(study.consonant_strictly_best());
        assert_eq!(study.row_containing([0, 1, 3]).unwrap().max_disp, 5);
    }

    #[test]
    fn parsimony_agrees_with_oracle() {
        let study = parsimony_study();
        for row in &study.rows {
            let expected = displacement_multiset(row.class_rep);
            for &m in &row.members {
                assert_eq!(
                    displacement_multiset(m),
                    expected,
                    "{m:?} in class of {:?}",
                    row.class_rep
                );
            }
            assert_eq!(row.max_disp, *expected.iter().max().unwrap());
            assert_eq!(row.sum_disp, expected.iter().sum::<u8>());
        }
        let best_other = study
            .ranked()
            .filter(|r| r.class_rep != [0, 4, 7])
            .map(|r| r.max_disp)
            .min()
            .unwrap();
        assert_eq!(best_other, 3);
    }

    fn triad() -> impl Strategy<Value = ConsonantTriad> {
        (0usize..24).prop_map(ConsonantTriad::from_index)
    }

    proptest! {
        #[test]
        fn analysis_is_total_and_correct(seq in prop::collection::vec(triad(), 2..12)) {
            let p = Progression { triads: seq, source: None };
            for s in analyze(&p).unwrap() {
                prop_assert_eq!(ti_on_triad(s.ti, s.from), s.to);
                prop_assert_eq!(s.plr.apply(s.from), s.to);
                match s.distinguishing_triad() {
                    Some(y) => prop_assert_ne!(ti_on_triad(s.ti, y), s.plr.apply(y)),
                    None => prop_assert!(s.ti == TiElement::t(0) || s.ti == TiElement::t(6)),
                }
            }
        }

        #[test]
        fn every_square_commutes(y in triad(), g in 0usize..24, word in "[PLR]{0,8}") {
            let horiz = TiElement::all().nth(g).unwrap();
            let vert: PlrWord = word.parse().unwrap();
            prop_assert!(verify_square(y, horiz, &vert).commutes());
        }

        #[test]
        fn progression_text_round_trips(seq in prop::collection::vec(triad(), 1..30)) {
            let text = seq.iter().map(|t| t.spell(Spelling::Flat)).collect::<Vec<_>>().join(" ");
            prop_assert_eq!(parse_progression(&text).unwrap().triads, seq);
        }
    }
}
