//! Machine checks of the group structure on the 24 consonant triads.
//!
//! Every report here is produced by running the computation; the fields are
//! private and there is no other constructor. A report never panics on a
//! failed check, it records `false`.

use std::fmt;

use serde::Serialize;

use crate::neoriemann::{ti_permutation, DihedralNormalForm, PlrOp, PlrWord, QuasiUtt, Sign, Utt};
use crate::permgroup::{
    centralizer_semiregular, centralizer_within, check_dihedral_witness, is_dihedral_24,
    regular_reps, CayleyTable, PermGroup, Permutation,
};
use crate::pitchspace::TiElement;
use crate::triads::TRIAD_COUNT;

pub fn build_ti_group() -> PermGroup {
    PermGroup::generate(
        TRIAD_COUNT,
        [TiElement::t(1), TiElement::i(0)].map(ti_permutation),
    )
    .expect("triad permutations")
}

pub fn build_plr_group() -> PermGroup {
    PermGroup::generate(TRIAD_COUNT, PlrOp::ALL.map(PlrOp::permutation))
        .expect("triad permutations")
}

pub fn build_transposition_group() -> PermGroup {
    PermGroup::generate(TRIAD_COUNT, [ti_permutation(TiElement::t(1))]).expect("triad permutations")
}

/// The 288 uniform triadic transformations.
pub fn build_u() -> PermGroup {
    PermGroup::from_elements(TRIAD_COUNT, Utt::all().map(Utt::permutation))
        .expect("uniform triadic transformations form a group")
}

/// The 1152 quasi-uniform triadic transformations.
pub fn build_q() -> PermGroup {
    PermGroup::from_elements(TRIAD_COUNT, QuasiUtt::all().map(QuasiUtt::permutation))
        .expect("quasi-uniform triadic transformations form a group")
}

/// Name of a triad permutation as a T/I element, if it is one.
pub fn ti_name(p: &Permutation) -> Option<TiElement> {
    TiElement::all().find(|&g| ti_permutation(g) == *p)
}

/// Name of a triad permutation as a PLR normal form, if it is one.
pub fn plr_name(p: &Permutation) -> Option<DihedralNormalForm> {
    DihedralNormalForm::all().find(|nf| nf.permutation() == *p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

fn check(name: &'static str, passed: bool) -> Check {
    Check { name, passed }
}

/// Renders `[ok]`/`[FAIL]` lines for a list of checks.
fn write_checks(f: &mut fmt::Formatter<'_>, checks: &[Check]) -> fmt::Result {
    for c in checks {
        writeln!(f, "[{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub s: String,
    pub t: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    ti_order: usize,
    plr_order: usize,
    ti_simply_transitive: bool,
    plr_simply_transitive: bool,
    both_simply_transitive: bool,
    /// The centralizer of PLR in Sym(S) is exactly T/I.
    ti_centralizes_plr: bool,
    /// The centralizer of T/I in Sym(S) is exactly PLR.
    plr_centralizes_ti: bool,
    ti_dihedral: Option<WitnessPair>,
    plr_dihedral: Option<WitnessPair>,
    standard_witnesses_valid: bool,
    lr_order: usize,
    l_and_r_generate_plr: bool,
    p_equals_r_lr3: bool,
    pairs_checked: usize,
    all_pairs_commute: bool,
    intersection: Vec<String>,
}

impl DualityReport {
    pub fn ti_order(&self) -> usize {
        self.ti_order
    }

    pub fn plr_order(&self) -> usize {
        self.plr_order
    }

    pub fn both_simply_transitive(&self) -> bool {
        self.both_simply_transitive
    }

    pub fn ti_centralizes_plr(&self) -> bool {
        self.ti_centralizes_plr
    }

    pub fn plr_centralizes_ti(&self) -> bool {
        self.plr_centralizes_ti
    }

    pub fn dihedral_witnesses(&self) -> (Option<&WitnessPair>, Option<&WitnessPair>) {
        (self.ti_dihedral.as_ref(), self.plr_dihedral.as_ref())
    }

    pub fn all_pairs_commute(&self) -> bool {
        self.all_pairs_commute
    }

    pub fn pairs_checked(&self) -> usize {
        self.pairs_checked
    }

    /// T/I elements that are also in the PLR-group.
    pub fn intersection(&self) -> &[String] {
        &self.intersection
    }

    pub fn checks(&self) -> Vec<Check> {
        vec![
            check("ti_order_24", self.ti_order == 24),
            check("plr_order_24", self.plr_order == 24),
            check("ti_simply_transitive", self.ti_simply_transitive),
            check("plr_simply_transitive", self.plr_simply_transitive),
            check("ti_dihedral", self.ti_dihedral.is_some()),
            check("plr_dihedral", self.plr_dihedral.is_some()),
            check("standard_witnesses_valid", self.standard_witnesses_valid),
            check("lr_order_12", self.lr_order == 12),
            check("l_and_r_generate_plr", self.l_and_r_generate_plr),
            check("p_equals_r_lr3", self.p_equals_r_lr3),
            check(
                "all_pairs_commute",
                self.all_pairs_commute && self.pairs_checked == 576,
            ),
            check("centralizer_of_ti_is_plr", self.plr_centralizes_ti),
            check("centralizer_of_plr_is_ti", self.ti_centralizes_plr),
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks()
            .into_iter()
            .find(|c| !c.passed)
            .map(|c| c.name)
    }
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "T/I-group order: {}", self.ti_order)?;
        writeln!(f, "PLR-group order: {}", self.plr_order)?;
        if let Some(w) = &self.ti_dihedral {
            writeln!(f, "T/I dihedral witness: s = {}, t = {}", w.s, w.t)?;
        }
        if let Some(w) = &self.plr_dihedral {
            writeln!(f, "PLR dihedral witness: s = {}, t = {}", w.s, w.t)?;
        }
        writeln!(f, "commuting pairs checked: {}", self.pairs_checked)?;
        writeln!(f, "T/I ∩ PLR: {}", self.intersection.join(", "))?;
        write_checks(f, &self.checks())
    }
}

fn ti_witness(group: &PermGroup) -> Option<WitnessPair> {
    is_dihedral_24(group).map(|w| WitnessPair {
        s: ti_name(&w.s).map_or_else(|| w.s.to_string(), |g| g.to_string()),
        t: ti_name(&w.t).map_or_else(|| w.t.to_string(), |g| g.to_string()),
    })
}

fn plr_witness(group: &PermGroup) -> Option<WitnessPair> {
    is_dihedral_24(group).map(|w| WitnessPair {
        s: plr_name(&w.s).map_or_else(|| w.s.to_string(), |nf| nf.to_string()),
        t: plr_name(&w.t).map_or_else(|| w.t.to_string(), |nf| nf.to_string()),
    })
}

fn word(s: &str) -> PlrWord {
    s.parse().expect("valid PLR word")
}

pub fn verify_duality() -> DualityReport {
    let ti = build_ti_group();
    let plr = build_plr_group();

    let centralizer_of_ti = centralizer_semiregular(&ti).ok();
    let centralizer_of_plr = centralizer_semiregular(&plr).ok();

    let lr = word("LR").permutation();
    let l = word("L").permutation();
    let standard_witnesses_valid = check_dihedral_witness(&plr, &lr, &l)
        && check_dihedral_witness(
            &ti,
            &ti_permutation(TiElement::t(1)),
            &ti_permutation(TiElement::i(0)),
        );

    let l_and_r = PermGroup::generate(TRIAD_COUNT, [PlrOp::L, PlrOp::R].map(PlrOp::permutation))
        .expect("triad permutations");

    let mut pairs_checked = 0;
    let mut all_pairs_commute = true;
    for g in ti.elements() {
        for h in plr.elements() {
            pairs_checked += 1;
            all_pairs_commute &= g.commutes_with(h);
        }
    }

    let intersection = ti
        .intersection(&plr)
        .iter()
        .map(|p| ti_name(p).map_or_else(|| p.to_string(), |g| g.to_string()))
        .collect();

    DualityReport {
        ti_order: ti.order(),
        plr_order: plr.order(),
        ti_simply_transitive: ti.is_simply_transitive(),
        plr_simply_transitive: plr.is_simply_transitive(),
        both_simply_transitive: ti.is_simply_transitive() && plr.is_simply_transitive(),
        ti_centralizes_plr: centralizer_of_plr.as_ref() == Some(&ti),
        plr_centralizes_ti: centralizer_of_ti.as_ref() == Some(&plr),
        ti_dihedral: ti_witness(&ti),
        plr_dihedral: plr_witness(&plr),
        standard_witnesses_valid,
        lr_order: lr.order(),
        l_and_r_generate_plr: l_and_r == plr,
        p_equals_r_lr3: word("RLRLRLR").permutation() == PlrOp::P.permutation(),
        pairs_checked,
        all_pairs_commute,
        intersection,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookReport {
    u_order: usize,
    q_order: usize,
    q_contains_u: bool,
    q_contains_ti: bool,
    /// (a) centralizer of the transpositions in Sym(S) is U.
    sym_centralizer_of_transpositions_is_u: bool,
    /// (b) centralizer of T/I within Q is PLR.
    q_centralizer_of_ti_is_plr: bool,
    /// (c) centralizer of PLR within Q is T/I.
    q_centralizer_of_plr_is_ti: bool,
    /// (d) centralizer of the transpositions within Q is U.
    q_centralizer_of_transpositions_is_u: bool,
    /// Q-restricted duality agrees with the Sym(S) result.
    restriction_agrees: bool,
    /// (e) the σ=+ part is a normal abelian subgroup ≅ Z12 × Z12 of index 2.
    plus_subgroup_order: usize,
    plus_subgroup_is_z12_squared: bool,
    plus_subgroup_normal: bool,
    /// (e) P⟨+,a,b⟩P = ⟨+,b,a⟩ for every a, b.
    conjugation_by_p_swaps: bool,
    conjugation_example: String,
}

impl HookReport {
    pub fn u_order(&self) -> usize {
        self.u_order
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn conjugation_example(&self) -> &str {
        &self.conjugation_example
    }

    pub fn checks(&self) -> Vec<Check> {
        vec![
            check("u_order_288", self.u_order == 288),
            check("q_order_1152", self.q_order == 1152),
            check("q_contains_u", self.q_contains_u),
            check("q_contains_ti", self.q_contains_ti),
            check(
                "a_sym_centralizer_of_transpositions_is_u",
                self.sym_centralizer_of_transpositions_is_u,
            ),
            check(
                "b_q_centralizer_of_ti_is_plr",
                self.q_centralizer_of_ti_is_plr,
            ),
            check(
                "c_q_centralizer_of_plr_is_ti",
                self.q_centralizer_of_plr_is_ti,
            ),
            check(
                "d_q_centralizer_of_transpositions_is_u",
                self.q_centralizer_of_transpositions_is_u,
            ),
            check("restriction_agrees_with_sym", self.restriction_agrees),
            check(
                "e_plus_subgroup_is_z12_squared",
                self.plus_subgroup_is_z12_squared,
            ),
            check("e_plus_subgroup_normal", self.plus_subgroup_normal),
            check("e_conjugation_by_p_swaps", self.conjugation_by_p_swaps),
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks()
            .into_iter()
            .find(|c| !c.passed)
            .map(|c| c.name)
    }
}

impl fmt::Display for HookReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "|U| = {}", self.u_order)?;
        writeln!(f, "|Q| = {}", self.q_order)?;
        writeln!(f, "|U+| = {}", self.plus_subgroup_order)?;
        writeln!(f, "P <+,2,5> P = {}", self.conjugation_example)?;
        write_checks(f, &self.checks())
    }
}

// Abelian of order 144 and exponent 12, generated by two order-12 elements
// whose cyclic subgroups meet trivially.
fn is_z12_squared(group: &PermGroup, a: &Permutation, b: &Permutation) -> bool {
    let cyclic_a = PermGroup::generate(group.degree(), [a.clone()]).expect("same degree");
    let cyclic_b = PermGroup::generate(group.degree(), [b.clone()]).expect("same degree");
    let span = PermGroup::generate(group.degree(), [a.clone(), b.clone()]).expect("same degree");
    group.order() == 144
        && group.is_abelian()
        && group.elements().iter().all(|g| 12 % g.order() == 0)
        && a.order() == 12
        && b.order() == 12
        && cyclic_a.intersection(&cyclic_b).len() == 1
        && span == *group
}

pub fn verify_hook() -> HookReport {
    let u = build_u();
    let q = build_q();
    let ti = build_ti_group();
    let plr = build_plr_group();
    let transpositions = build_transposition_group();

    let sym_c_t = centralizer_semiregular(&transpositions).ok();
    let sym_c_ti = centralizer_semiregular(&ti).ok();
    let sym_c_plr = centralizer_semiregular(&plr).ok();
    let q_c_ti = centralizer_within(&ti, &q).ok();
    let q_c_plr = centralizer_within(&plr, &q).ok();
    let q_c_t = centralizer_within(&transpositions, &q).ok();

    let plus = PermGroup::from_elements(
        TRIAD_COUNT,
        Utt::all()
            .filter(|u| u.sign == Sign::Plus)
            .map(Utt::permutation),
    )
    .expect("sign-preserving transformations form a group");
    let plus_subgroup_normal = u.elements().iter().all(|g| {
        let g_inv = g.inverse();
        plus.elements()
            .iter()
            .all(|h| plus.contains(&g.compose(h).compose(&g_inv)))
    });
    let root_major = Utt::new(Sign::Plus, 1, 0).permutation();
    let root_minor = Utt::new(Sign::Plus, 0, 1).permutation();

    let p = Utt::P.permutation();
    let conjugation_by_p_swaps = (0..12).all(|a| {
        (0..12).all(|b| {
            let conj = p
                .compose(&Utt::new(Sign::Plus, a, b).permutation())
                .compose(&p);
            conj == Utt::new(Sign::Plus, b, a).permutation()
        })
    });
    let conjugation_example = Utt::P
        .compose(Utt::new(Sign::Plus, 2, 5))
        .compose(Utt::P)
        .to_string();

    HookReport {
        u_order: u.order(),
        q_order: q.order(),
        q_contains_u: u.is_subgroup_of(&q),
        q_contains_ti: ti.is_subgroup_of(&q),
        sym_centralizer_of_transpositions_is_u: sym_c_t.as_ref() == Some(&u),
        q_centralizer_of_ti_is_plr: q_c_ti.as_ref() == Some(&plr),
        q_centralizer_of_plr_is_ti: q_c_plr.as_ref() == Some(&ti),
        q_centralizer_of_transpositions_is_u: q_c_t.as_ref() == Some(&u),
        restriction_agrees: q_c_ti.is_some()
            && q_c_ti == sym_c_ti
            && q_c_plr.is_some()
            && q_c_plr == sym_c_plr,
        plus_subgroup_order: plus.order(),
        plus_subgroup_is_z12_squared: is_z12_squared(&plus, &root_major, &root_minor),
        plus_subgroup_normal,
        conjugation_by_p_swaps,
        conjugation_example,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CayleyReport {
    pub group: String,
    pub order: usize,
    pub left_order: usize,
    pub right_order: usize,
    /// The centralizer of the left image is the right image.
    pub centralizer_of_left_is_right: bool,
    pub centralizer_of_right_is_left: bool,
    /// The two images meet exactly in the image of the center.
    pub intersection_is_center: bool,
}

impl CayleyReport {
    pub fn passed(&self) -> bool {
        self.left_order == self.order
            && self.right_order == self.order
            && self.centralizer_of_left_is_right
            && self.centralizer_of_right_is_left
            && self.intersection_is_center
    }
}

pub fn verify_cayley(group: &str, table: &CayleyTable) -> CayleyReport {
    let reps = regular_reps(table).expect("valid table gives permutation groups");
    let c_left = centralizer_semiregular(&reps.left).ok();
    let c_right = centralizer_semiregular(&reps.right).ok();
    let center_image: std::collections::BTreeSet<Permutation> = table
        .center()
        .into_iter()
        .map(|z| reps.left_images[z].clone())
        .collect();
    CayleyReport {
        group: group.to_string(),
        order: table.order(),
        left_order: reps.left.order(),
        right_order: reps.right.order(),
        centralizer_of_left_is_right: c_left.as_ref() == Some(&reps.right),
        centralizer_of_right_is_left: c_right.as_ref() == Some(&reps.left),
        intersection_is_center: reps.left.intersection(&reps.right) == center_image,
    }
}

/// The three standard Cayley examples: the dihedral group of order 24,
/// `Z12`, and `S3`.
pub fn verify_cayley_examples() -> Vec<CayleyReport> {
    vec![
        verify_cayley("D12", &CayleyTable::dihedral(12)),
        verify_cayley("Z12", &CayleyTable::cyclic(12)),
        verify_cayley("S3", &CayleyTable::symmetric3()),
    ]
}
