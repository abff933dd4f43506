//! Ideal predicates, one-step generation formulas, full catalog enumeration
//! via union closure of principal ideals, 0-minimal/least ideal detection,
//! and restriction of an instance to a closed subset.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{ElementSet, GammaSemigroup};

/// Default cap on the number of distinct ideals a catalog may hold.
pub const CATALOG_CAP: usize = 1 << 20;

/// The three flavors of ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
}

impl IdealKind {
    /// All three kinds, in a fixed order.
    pub fn all() -> [IdealKind; 3] {
        [IdealKind::Left, IdealKind::Right, IdealKind::TwoSided]
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
        })
    }
}

/// The complete, duplicate-free list of ideals of one kind, sorted by
/// (cardinality, then lexicographic membership).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCatalog {
    pub kind: IdealKind,
    pub ideals: Vec<ElementSet>,
}

/// Intersection of all ideals of a kind, with a flag recording whether that
/// intersection is itself an ideal (it can be empty, or fail closure, for the
/// one-sided kinds on instances without a zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeastIdeal {
    pub set: ElementSet,
    pub is_ideal: bool,
}

/// An instance induced on a closed subset, with the embedding recorded:
/// `element_map[new_index] = old_index` (ascending in the old order).
#[derive(Clone, Debug)]
pub struct Restriction {
    pub instance: GammaSemigroup,
    pub element_map: Vec<usize>,
}

impl Restriction {
    /// Translate a subset of the restricted carrier back to the parent.
    pub fn lift_set(&self, s: &ElementSet, parent_n: usize) -> ElementSet {
        ElementSet::from_members(parent_n, s.iter().map(|i| self.element_map[i]))
    }

    /// Translate a subset of the parent carrier into restricted coordinates.
    /// Members outside the restriction are dropped.
    pub fn project_set(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_members(
            self.element_map.len(),
            self.element_map
                .iter()
                .enumerate()
                .filter_map(|(new, &old)| s.contains(old).then_some(new)),
        )
    }
}

/// `B` nonempty and `[T Gamma B] subset B`.
pub fn is_left_ideal(s: &GammaSemigroup, b: &ElementSet) -> bool {
    is_ideal(s, b, IdealKind::Left)
}

/// `B` nonempty and `[B Gamma T] subset B`.
pub fn is_right_ideal(s: &GammaSemigroup, b: &ElementSet) -> bool {
    is_ideal(s, b, IdealKind::Right)
}

/// Both left and right.
pub fn is_two_sided_ideal(s: &GammaSemigroup, b: &ElementSet) -> bool {
    is_ideal(s, b, IdealKind::TwoSided)
}

/// Kind-generic ideal predicate; the empty set is never an ideal.
pub fn is_ideal(s: &GammaSemigroup, b: &ElementSet, kind: IdealKind) -> bool {
    ideal_violation(s, b, kind).is_none() && !b.is_empty()
}

/// First closure violation in scan order, if any: for the left law the scan
/// is `(t, gamma, b)` with `b` in `B`, for the right law `(b, gamma, t)` with
/// `b` in `B`; the two-sided kind scans the left law first.
pub fn ideal_violation(
    s: &GammaSemigroup,
    b: &ElementSet,
    kind: IdealKind,
) -> Option<(usize, usize, usize)> {
    let left = |s: &GammaSemigroup, b: &ElementSet| {
        for t in 0..s.n() {
            for g in 0..s.m() {
                for x in b.iter() {
                    if !b.contains(s.triple_product(t, g, x)) {
                        return Some((t, g, x));
                    }
                }
            }
        }
        None
    };
    let right = |s: &GammaSemigroup, b: &ElementSet| {
        for x in b.iter() {
            for g in 0..s.m() {
                for t in 0..s.n() {
                    if !b.contains(s.triple_product(x, g, t)) {
                        return Some((x, g, t));
                    }
                }
            }
        }
        None
    };
    match kind {
        IdealKind::Left => left(s, b),
        IdealKind::Right => right(s, b),
        IdealKind::TwoSided => left(s, b).or_else(|| right(s, b)),
    }
}

/// The one-step generation formula: left `B u [T Gamma B]`, right
/// `B u [B Gamma T]`, two-sided `B u [T Gamma B] u [B Gamma T] u [T Gamma B Gamma T]`.
/// The result of each formula is already closed (checked in debug builds and
/// monitored by the conformance suite).
pub fn generated_ideal(s: &GammaSemigroup, b: &ElementSet, kind: IdealKind) -> Result<ElementSet> {
    if b.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    let t = s.full_set();
    let g = s.full_gammas();
    let out = match kind {
        IdealKind::Left => b.union(&s.subset_product(&t, &g, b)),
        IdealKind::Right => b.union(&s.subset_product(b, &g, &t)),
        IdealKind::TwoSided => {
            let tgb = s.subset_product(&t, &g, b);
            let bgt = s.subset_product(b, &g, &t);
            let tgbgt = s.subset_product(&s.subset_product(&t, &g, b), &g, &t);
            b.union(&tgb).union(&bgt).union(&tgbgt)
        }
    };
    debug_assert!(is_ideal(s, &out, kind), "one-step formula not closed");
    Ok(out)
}

/// `generated_ideal` of the singleton `{a}`.
pub fn principal_ideal(s: &GammaSemigroup, a: usize, kind: IdealKind) -> ElementSet {
    generated_ideal(s, &ElementSet::singleton(s.n(), a), kind)
        .expect("singleton generator is nonempty")
}

/// Every ideal of the kind, by union-closure of the distinct principal
/// ideals (ideals are exactly the unions of the principal ideals of their
/// elements). Errors with `CatalogTooLarge` past [`CATALOG_CAP`] sets.
pub fn all_ideals(s: &GammaSemigroup, kind: IdealKind) -> Result<IdealCatalog> {
    all_ideals_capped(s, kind, CATALOG_CAP)
}

/// As [`all_ideals`] with an explicit cap.
pub fn all_ideals_capped(
    s: &GammaSemigroup,
    kind: IdealKind,
    cap: usize,
) -> Result<IdealCatalog> {
    let mut catalog: BTreeSet<ElementSet> = (0..s.n())
        .map(|a| principal_ideal(s, a, kind))
        .collect();
    if catalog.len() > cap {
        return Err(Error::CatalogTooLarge { limit: cap });
    }
    loop {
        let snapshot: Vec<ElementSet> = catalog.iter().cloned().collect();
        let mut grew = false;
        for (i, x) in snapshot.iter().enumerate() {
            for y in snapshot.iter().skip(i + 1) {
                let u = x.union(y);
                if catalog.insert(u) {
                    grew = true;
                    if catalog.len() > cap {
                        return Err(Error::CatalogTooLarge { limit: cap });
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    let ideals: Vec<ElementSet> = catalog.into_iter().collect();
    debug_assert!(ideals.windows(2).all(|w| w[0] < w[1]));
    Ok(IdealCatalog { kind, ideals })
}

/// 0-minimality: `B` is an ideal of the kind, `B != {0}`, and the only ideal
/// of that kind strictly contained in `B` is `{0}`. Working criterion: the
/// principal ideal of every nonzero member of `B` equals `B`.
pub fn is_0_minimal_ideal(s: &GammaSemigroup, b: &ElementSet, kind: IdealKind) -> Result<bool> {
    let z = s.zero().ok_or(Error::NoZero)?;
    if !is_ideal(s, b, kind) {
        return Ok(false);
    }
    let zero_set = ElementSet::singleton(s.n(), z);
    if *b == zero_set {
        return Ok(false);
    }
    Ok(b.iter()
        .filter(|&e| e != z)
        .all(|e| principal_ideal(s, e, kind) == *b))
}

/// All 0-minimal ideals of the kind, in catalog order.
pub fn zero_minimal_ideals(s: &GammaSemigroup, kind: IdealKind) -> Result<Vec<ElementSet>> {
    let catalog = all_ideals(s, kind)?;
    let mut out = Vec::new();
    for b in catalog.ideals {
        if is_0_minimal_ideal(s, &b, kind)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// Intersection of all ideals of the kind (equivalently, of the principal
/// ideals). For the two-sided kind on a finite instance this is the kernel —
/// nonempty and itself an ideal; for the one-sided kinds it may be empty or
/// fail closure, which the `is_ideal` flag records.
pub fn least_ideal(s: &GammaSemigroup, kind: IdealKind) -> LeastIdeal {
    let mut set = s.full_set();
    for a in 0..s.n() {
        set = set.intersection(&principal_ideal(s, a, kind));
    }
    let ok = is_ideal(s, &set, kind);
    LeastIdeal { set, is_ideal: ok }
}

/// Induce an instance on a closed nonempty subset. The zero carries over iff
/// it belongs to `S`; names are carried for the surviving elements.
pub fn restrict_to(s: &GammaSemigroup, subset: &ElementSet) -> Result<Restriction> {
    if subset.is_empty() {
        return Err(Error::BadShape {
            detail: "cannot restrict to the empty subset".to_string(),
        });
    }
    for a in subset.iter() {
        for g in 0..s.m() {
            for b in subset.iter() {
                if !subset.contains(s.triple_product(a, g, b)) {
                    return Err(Error::NotClosed { a, gamma: g, b });
                }
            }
        }
    }
    let element_map: Vec<usize> = subset.iter().collect();
    let index_of = |old: usize| element_map.iter().position(|&x| x == old).unwrap();
    let n2 = element_map.len();
    let mut table = vec![0usize; n2 * s.m() * n2];
    for (ai, &a) in element_map.iter().enumerate() {
        for g in 0..s.m() {
            for (bi, &b) in element_map.iter().enumerate() {
                table[(ai * s.m() + g) * n2 + bi] = index_of(s.triple_product(a, g, b));
            }
        }
    }
    let zero = s.zero().and_then(|z| {
        subset
            .contains(z)
            .then(|| element_map.iter().position(|&x| x == z).unwrap())
    });
    let mut instance = GammaSemigroup::new(n2, s.m(), table, zero)?;
    if let Some(names) = s.element_names() {
        instance = instance
            .with_element_names(element_map.iter().map(|&e| names[e].clone()).collect())?;
    }
    if let Some(gnames) = s.gamma_names() {
        instance = instance.with_gamma_names(gnames.to_vec())?;
    }
    Ok(Restriction {
        instance,
        element_map,
    })
}
