//! Permutations of `{0, …, N-1}` and the finite groups they generate.
//!
//! Everything here is exhaustive: groups are stored as their full sorted
//! element lists, which is exact and fast for the orders this crate deals
//! with (at most a few thousand elements on a few dozen points).
//!
//! Composition is right to left, matching function notation: `a.compose(&b)`
//! is the permutation `i ↦ a(b(i))`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection on 0..{degree}")]
    NotBijection { degree: usize },
    #[error("point {index} is out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error(
        "group is not semiregular: point {point} has a stabilizer of order {stabilizer_order}"
    )]
    NotSemiregular {
        point: usize,
        stabilizer_order: usize,
    },
    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,
    #[error("element set is not closed under composition")]
    NotClosed,
    #[error("invalid group table: {0}")]
    InvalidTable(#[from] TableError),
    #[error("centralizer search would examine about {candidates} candidates")]
    SearchTooLarge { candidates: u128 },
}

/// A bijection on `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            if i >= degree || std::mem::replace(&mut seen[i], true) {
                return Err(PermError::NotBijection { degree });
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Panics if `f` is not a bijection on `0..degree`.
    pub fn from_fn(degree: usize, f: impl FnMut(usize) -> usize) -> Self {
        Permutation::from_images((0..degree).map(f).collect()).expect("function is a bijection")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Permutation {
            images: images.into(),
        }
    }

    pub fn pow(&self, exp: usize) -> Permutation {
        (0..exp).fold(Permutation::identity(self.degree()), |acc, _| {
            self.compose(&acc)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    pub fn order(&self) -> usize {
        let mut current = self.clone();
        let mut n = 1;
        while !current.is_identity() {
            current = self.compose(&current);
            n += 1;
        }
        n
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images()
            .enumerate()
            .filter(|(i, j)| i == j)
            .map(|(i, _)| i)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, i) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A permutation group, stored as its sorted element list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: Vec::new(),
        }
    }

    /// Breadth-first closure of `generators` under composition.
    pub fn generate(
        degree: usize,
        generators: impl IntoIterator<Item = Permutation>,
    ) -> Result<Self, PermError> {
        let generators: Vec<Permutation> = generators.into_iter().collect();
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            elements,
            generators,
        })
    }

    /// Wraps an element set that is already a group, checking closure and
    /// picking a small generating set greedily.
    pub fn from_elements(
        degree: usize,
        elements: impl IntoIterator<Item = Permutation>,
    ) -> Result<Self, PermError> {
        let mut elements: Vec<Permutation> = elements.into_iter().collect();
        for e in &elements {
            if e.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: e.degree(),
                });
            }
        }
        elements.sort();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span = PermGroup::trivial(degree);
        for e in &elements {
            if !span.contains(e) {
                generators.push(e.clone());
                span = PermGroup::generate(degree, generators.clone())?;
            }
        }
        if span.elements != elements {
            return Err(PermError::NotClosed);
        }
        span.generators = generators;
        Ok(span)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn intersection(&self, other: &PermGroup) -> BTreeSet<Permutation> {
        self.elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect()
    }

    /// Generators if any were recorded, otherwise every element.
    fn generating_set(&self) -> &[Permutation] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    fn check_point(&self, i: usize) -> Result<(), PermError> {
        if i < self.degree {
            Ok(())
        } else {
            Err(PermError::IndexOutOfRange {
                index: i,
                degree: self.degree,
            })
        }
    }

    pub fn orbit(&self, i: usize) -> Result<BTreeSet<usize>, PermError> {
        self.check_point(i)?;
        Ok(self.elements.iter().map(|g| g.apply(i)).collect())
    }

    pub fn stabilizer(&self, i: usize) -> Result<PermGroup, PermError> {
        self.check_point(i)?;
        PermGroup::from_elements(
            self.degree,
            self.elements.iter().filter(|g| g.apply(i) == i).cloned(),
        )
    }

    /// Orbits in order of their smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut orbits = Vec::new();
        for i in 0..self.degree {
            if assigned[i] {
                continue;
            }
            let orbit: BTreeSet<usize> = self.elements.iter().map(|g| g.apply(i)).collect();
            for &j in &orbit {
                assigned[j] = true;
            }
            orbits.push(orbit.into_iter().collect());
        }
        orbits
    }

    /// `Err(point)` names the first point with a nontrivial stabilizer.
    pub fn check_semiregular(&self) -> Result<(), PermError> {
        for i in 0..self.degree {
            let stabilizer_order = self.elements.iter().filter(|g| g.apply(i) == i).count();
            if stabilizer_order != 1 {
                return Err(PermError::NotSemiregular {
                    point: i,
                    stabilizer_order,
                });
            }
        }
        Ok(())
    }

    pub fn is_semiregular(&self) -> bool {
        self.check_semiregular().is_ok()
    }

    pub fn is_simply_transitive(&self) -> bool {
        self.order() == self.degree
            && (self.degree == 0
                || self
                    .orbit(0)
                    .map(|o| o.len() == self.degree)
                    .unwrap_or(false))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generating_set();
        gens.iter().all(|a| gens.iter().all(|b| a.commutes_with(b)))
    }
}

// Bound on the number of candidate maps the base-point search may examine.
const CENTRALIZER_BUDGET: u128 = 50_000_000;

/// Centralizer of a semiregular group in the full symmetric group.
///
/// A permutation `f` commuting with `H` is pinned down by the images of one
/// base point per `H`-orbit, via `f(h·b) = h·f(b)`. We enumerate those base
/// images, skipping assignments that send two orbits into the same orbit
/// (those can never be bijective), and keep the candidates that are
/// bijections commuting with every generator of `H`. `Sym(N)` itself is never
/// scanned.
pub fn centralizer_semiregular(h: &PermGroup) -> Result<PermGroup, PermError> {
    h.check_semiregular()?;
    let degree = h.degree();
    let orbits = h.orbits();
    let m = orbits.len();

    let estimate = (1..=m as u128)
        .chain(std::iter::repeat_n(h.order() as u128, m))
        .fold(1u128, |acc, x| acc.saturating_mul(x));
    if estimate > CENTRALIZER_BUDGET {
        return Err(PermError::SearchTooLarge {
            candidates: estimate,
        });
    }

    // For each point p: its orbit and the unique element carrying that
    // orbit's base point to p.
    let mut orbit_of = vec![0usize; degree];
    let mut carrier = vec![0usize; degree];
    for (j, orbit) in orbits.iter().enumerate() {
        let base = orbit[0];
        for (e, g) in h.elements().iter().enumerate() {
            let p = g.apply(base);
            orbit_of[p] = j;
            carrier[p] = e;
        }
    }

    let mut found = Vec::new();
    let mut targets = vec![0usize; m];
    let mut used = vec![false; m];
    assign_bases(
        0,
        h,
        &orbit_of,
        &carrier,
        &mut targets,
        &mut used,
        &mut found,
    );
    PermGroup::from_elements(degree, found)
}

fn assign_bases(
    j: usize,
    h: &PermGroup,
    orbit_of: &[usize],
    carrier: &[usize],
    targets: &mut [usize],
    used: &mut [bool],
    found: &mut Vec<Permutation>,
) {
    let degree = h.degree();
    if j == targets.len() {
        let images: Vec<usize> = (0..degree)
            .map(|p| h.elements()[carrier[p]].apply(targets[orbit_of[p]]))
            .collect();
        if let Ok(f) = Permutation::from_images(images) {
            if h.generating_set().iter().all(|g| f.commutes_with(g)) {
                found.push(f);
            }
        }
        return;
    }
    for c in 0..degree {
        let target_orbit = orbit_of[c];
        if used[target_orbit] {
            continue;
        }
        used[target_orbit] = true;
        targets[j] = c;
        assign_bases(j + 1, h, orbit_of, carrier, targets, used, found);
        used[target_orbit] = false;
    }
}

/// `C_G(H)`: the elements of `G` commuting with all of `H`.
pub fn centralizer_within(h: &PermGroup, g: &PermGroup) -> Result<PermGroup, PermError> {
    if h.degree() != g.degree() {
        return Err(PermError::DegreeMismatch {
            expected: g.degree(),
            found: h.degree(),
        });
    }
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotSubgroup);
    }
    let gens = h.generating_set();
    PermGroup::from_elements(
        g.degree(),
        g.elements()
            .iter()
            .filter(|x| gens.iter().all(|y| x.commutes_with(y)))
            .cloned(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table has {found} entries, expected {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error("closure fails: product {a}*{b} = {product} is not an element")]
    Closure { a: usize, b: usize, product: usize },
    #[error("identity axiom fails: no two-sided identity element")]
    Identity,
    #[error("inverse axiom fails: element {0} has no inverse")]
    Inverse(usize),
    #[error("associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})")]
    Associativity { a: usize, b: usize, c: usize },
}

/// A finite group given by its multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    products: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl CayleyTable {
    /// `products[a * order + b]` is `a·b`. Every group axiom is checked
    /// exhaustively.
    pub fn new(order: usize, products: Vec<usize>) -> Result<Self, TableError> {
        if products.len() != order * order {
            return Err(TableError::WrongSize {
                expected: order * order,
                found: products.len(),
            });
        }
        let mul = |a: usize, b: usize| products[a * order + b];
        for a in 0..order {
            for b in 0..order {
                let product = mul(a, b);
                if product >= order {
                    return Err(TableError::Closure { a, b, product });
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(TableError::Identity)?;
        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or(TableError::Inverse(a))?;
            inverses.push(inv);
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(TableError::Associativity { a, b, c });
                    }
                }
            }
        }
        Ok(CayleyTable {
            order,
            products,
            identity,
            inverses,
        })
    }

    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        let products = (0..order * order)
            .map(|k| mul(k / order, k % order))
            .collect();
        CayleyTable::new(order, products)
    }

    pub fn cyclic(n: usize) -> Self {
        CayleyTable::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
    }

    /// Dihedral group of order `2n`; element `k + n·e` stands for `s^k t^e`.
    pub fn dihedral(n: usize) -> Self {
        CayleyTable::from_fn(2 * n, |a, b| {
            let (k1, e1) = (a % n, a / n);
            let (k2, e2) = (b % n, b / n);
            let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 } % n;
            k + n * ((e1 + e2) % 2)
        })
        .expect("dihedral group")
    }

    /// Table of a concrete permutation group, elements in sorted order.
    pub fn from_group(group: &PermGroup) -> Self {
        let els = group.elements();
        CayleyTable::from_fn(els.len(), |a, b| {
            els.binary_search(&els[a].compose(&els[b])).expect("closed")
        })
        .expect("permutation group")
    }

    /// The symmetric group on three letters.
    pub fn symmetric3() -> Self {
        let s3 = PermGroup::generate(
            3,
            [
                Permutation::from_fn(3, |i| (i + 1) % 3),
                Permutation::from_fn(3, |i| [1, 0, 2][i]),
            ],
        )
        .expect("degree 3");
        CayleyTable::from_group(&s3)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.products[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.product(z, x) == self.product(x, z)))
            .collect()
    }
}

/// Images of each element under the left and right regular representations.
#[derive(Clone, Debug)]
pub struct RegularReps {
    pub left: PermGroup,
    pub right: PermGroup,
    pub left_images: Vec<Permutation>,
    pub right_images: Vec<Permutation>,
}

/// Left action `x ↦ g·x` and right action `x ↦ x·g⁻¹` of a group on itself.
pub fn regular_reps(table: &CayleyTable) -> Result<RegularReps, PermError> {
    let n = table.order();
    let left_images: Vec<Permutation> = (0..n)
        .map(|g| Permutation::from_fn(n, |x| table.product(g, x)))
        .collect();
    let right_images: Vec<Permutation> = (0..n)
        .map(|g| Permutation::from_fn(n, |x| table.product(x, table.inverse(g))))
        .collect();
    let left = PermGroup::from_elements(n, left_images.clone())?;
    let right = PermGroup::from_elements(n, right_images.clone())?;
    Ok(RegularReps {
        left,
        right,
        left_images,
        right_images,
    })
}

/// Generators `s`, `t` with `s^12 = t^2 = 1` and `tst = s⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralWitness {
    pub s: Permutation,
    pub t: Permutation,
}

/// True when `s`, `t` satisfy the order-24 dihedral presentation and
/// generate exactly `group`.
pub fn check_dihedral_witness(group: &PermGroup, s: &Permutation, t: &Permutation) -> bool {
    group.order() == 24
        && group.contains(s)
        && group.contains(t)
        && s.order() == 12
        && t.order() == 2
        && t.compose(s).compose(t) == s.inverse()
        && PermGroup::generate(group.degree(), [s.clone(), t.clone()])
            .map(|span| span == *group)
            .unwrap_or(false)
}

/// First `(s, t)` in element order satisfying the dihedral presentation of
/// order 24, or `None`.
pub fn is_dihedral_24(group: &PermGroup) -> Option<DihedralWitness> {
    if group.order() != 24 {
        return None;
    }
    let rotations: Vec<&Permutation> = group
        .elements()
        .iter()
        .filter(|s| s.order() == 12)
        .collect();
    let flips: Vec<&Permutation> = group.elements().iter().filter(|t| t.order() == 2).collect();
    for s in &rotations {
        for t in &flips {
            if check_dihedral_witness(group, s, t) {
                return Some(DihedralWitness {
                    s: (*s).clone(),
                    t: (*t).clone(),
                });
            }
        }
    }
    None
}
