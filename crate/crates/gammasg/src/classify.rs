//! Simplicity and 0-simplicity classification. Every predicate is computed by
//! two independent routes — the definitional one over the full ideal catalog
//! (route A) and the elementwise characterization (route B) — with route A's
//! verdict returned and any disagreement logged rather than asserted away.

use std::fmt;

use crate::error::{Error, Result};
use crate::green::{d_related, primitive_idempotents};
use crate::ideals::{all_ideals, restrict_to, zero_minimal_ideals, IdealKind};
use crate::semigroup::{ElementSet, GammaSemigroup, GammaSet};

/// Tri-state classification verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    /// The predicate requires a designated zero and none is present.
    NotApplicable,
}

impl Tri {
    fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    /// `Some(bool)` unless not applicable.
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::NotApplicable => None,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::NotApplicable => "not-applicable",
        })
    }
}

/// A logged route divergence: the definitional and characterization routes
/// disagreed on one flag for one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub flag: &'static str,
    pub route_a: bool,
    pub route_b: bool,
}

/// Full classification of one instance. Flag values are the route-A
/// (definitional) verdicts; `disagreements` lists every flag where route B
/// differed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub left_simple: Tri,
    pub right_simple: Tri,
    pub simple: Tri,
    pub left_0_simple: Tri,
    pub right_0_simple: Tri,
    pub zero_simple: Tri,
    pub completely_zero_simple: Tri,
    pub gamma_group_with_zero: Tri,
    pub disagreements: Vec<Disagreement>,
}

fn column(s: &GammaSemigroup, e: usize) -> ElementSet {
    s.subset_product(
        &s.full_set(),
        &s.full_gammas(),
        &ElementSet::singleton(s.n(), e),
    )
}

fn row(s: &GammaSemigroup, e: usize) -> ElementSet {
    s.subset_product(
        &ElementSet::singleton(s.n(), e),
        &s.full_gammas(),
        &s.full_set(),
    )
}

fn sandwich(s: &GammaSemigroup, e: usize) -> ElementSet {
    s.subset_product(&column(s, e), &s.full_gammas(), &s.full_set())
}

fn catalog_is_only_full(s: &GammaSemigroup, kind: IdealKind) -> Result<bool> {
    Ok(all_ideals(s, kind)?.ideals == vec![s.full_set()])
}

fn catalog_is_zero_and_full(s: &GammaSemigroup, kind: IdealKind, z: usize) -> Result<bool> {
    let want = vec![ElementSet::singleton(s.n(), z), s.full_set()];
    Ok(all_ideals(s, kind)?.ideals == want)
}

fn tgt_not_zero(s: &GammaSemigroup, z: usize) -> bool {
    let t = s.full_set();
    s.subset_product(&t, &s.full_gammas(), &t) != ElementSet::singleton(s.n(), z)
}

/// Route A: the only left ideal is `T`. Route B: `[T Gamma e] = T` for every
/// `e`. Returns route A.
pub fn is_left_simple(s: &GammaSemigroup) -> Result<bool> {
    catalog_is_only_full(s, IdealKind::Left)
}

fn left_simple_b(s: &GammaSemigroup) -> bool {
    let t = s.full_set();
    (0..s.n()).all(|e| column(s, e) == t)
}

/// Right twin of [`is_left_simple`].
pub fn is_right_simple(s: &GammaSemigroup) -> Result<bool> {
    catalog_is_only_full(s, IdealKind::Right)
}

fn right_simple_b(s: &GammaSemigroup) -> bool {
    let t = s.full_set();
    (0..s.n()).all(|e| row(s, e) == t)
}

/// Route A: the only two-sided ideal is `T`. Route B:
/// `[T Gamma e Gamma T] = T` for every `e`.
pub fn is_simple(s: &GammaSemigroup) -> Result<bool> {
    catalog_is_only_full(s, IdealKind::TwoSided)
}

fn simple_b(s: &GammaSemigroup) -> bool {
    let t = s.full_set();
    (0..s.n()).all(|e| sandwich(s, e) == t)
}

/// Route A: `[T Gamma T] != {0}` and the two-sided ideals are exactly
/// `{0}` and `T`. Route B: `[T Gamma T] != {0}` and
/// `[T Gamma e Gamma T] = T` for every nonzero `e`. Errors with `NoZero`
/// when no zero is designated.
pub fn is_0_simple(s: &GammaSemigroup) -> Result<bool> {
    let z = s.zero().ok_or(Error::NoZero)?;
    Ok(tgt_not_zero(s, z) && catalog_is_zero_and_full(s, IdealKind::TwoSided, z)?)
}

fn zero_simple_b(s: &GammaSemigroup, z: usize) -> bool {
    let t = s.full_set();
    tgt_not_zero(s, z) && (0..s.n()).filter(|&e| e != z).all(|e| sandwich(s, e) == t)
}

/// Left twin: `[T Gamma T] != {0}` and the left ideals are exactly `{0}` and
/// `T` (route B: `[T Gamma e] = T` for every nonzero `e`).
pub fn is_left_0_simple(s: &GammaSemigroup) -> Result<bool> {
    let z = s.zero().ok_or(Error::NoZero)?;
    Ok(tgt_not_zero(s, z) && catalog_is_zero_and_full(s, IdealKind::Left, z)?)
}

fn left_0_simple_b(s: &GammaSemigroup, z: usize) -> bool {
    let t = s.full_set();
    tgt_not_zero(s, z) && (0..s.n()).filter(|&e| e != z).all(|e| column(s, e) == t)
}

/// Right twin of [`is_left_0_simple`].
pub fn is_right_0_simple(s: &GammaSemigroup) -> Result<bool> {
    let z = s.zero().ok_or(Error::NoZero)?;
    Ok(tgt_not_zero(s, z) && catalog_is_zero_and_full(s, IdealKind::Right, z)?)
}

fn right_0_simple_b(s: &GammaSemigroup, z: usize) -> bool {
    let t = s.full_set();
    tgt_not_zero(s, z) && (0..s.n()).filter(|&e| e != z).all(|e| row(s, e) == t)
}

/// Route A: 0-simple and a primitive idempotent exists. Route B: 0-simple
/// and both a 0-minimal left ideal and a 0-minimal right ideal exist.
pub fn is_completely_0_simple(s: &GammaSemigroup) -> Result<bool> {
    Ok(is_0_simple(s)? && !primitive_idempotents(s).is_empty())
}

fn completely_0_simple_b(s: &GammaSemigroup) -> Result<bool> {
    Ok(is_0_simple(s)?
        && !zero_minimal_ideals(s, IdealKind::Left)?.is_empty()
        && !zero_minimal_ideals(s, IdealKind::Right)?.is_empty())
}

/// Whether the closed subset `S` is a gamma-group with zero: `0 in S`,
/// `|S| >= 2`, and on the restricted instance every nonzero `s0` satisfies
/// `[S Gamma s0] = S = [s0 Gamma S]`. Errors: `NoZero` when the instance has
/// no designated zero, `NotClosed` when `S` is not closed.
pub fn is_gamma_group_with_zero(s: &GammaSemigroup, subset: &ElementSet) -> Result<bool> {
    let z = s.zero().ok_or(Error::NoZero)?;
    let restriction = restrict_to(s, subset)?;
    if !subset.contains(z) || subset.cardinality() < 2 {
        return Ok(false);
    }
    let r = &restriction.instance;
    let rz = r.zero().expect("zero survives restriction");
    let t = r.full_set();
    let g = GammaSet::full(r.m());
    Ok((0..r.n()).filter(|&x| x != rz).all(|x| {
        let sx = ElementSet::singleton(r.n(), x);
        r.subset_product(&t, &g, &sx) == t && r.subset_product(&sx, &g, &t) == t
    }))
}

/// Whether all nonzero elements are pairwise D-related. Errors with `NoZero`
/// when no zero is designated.
pub fn d_class_of_nonzero_is_single(s: &GammaSemigroup) -> Result<bool> {
    let z = s.zero().ok_or(Error::NoZero)?;
    let nonzero: Vec<usize> = (0..s.n()).filter(|&e| e != z).collect();
    Ok(nonzero
        .iter()
        .all(|&e| nonzero.iter().all(|&f| d_related(s, e, f))))
}

/// Classify an instance on every flag, running both routes and logging any
/// disagreement. Flags that require a zero come back `NotApplicable` when
/// none is designated (the crate never adjoins one silently).
pub fn classify(s: &GammaSemigroup) -> Result<Classification> {
    let mut disagreements = Vec::new();
    let mut check = |flag: &'static str, a: bool, b: bool| {
        if a != b {
            disagreements.push(Disagreement {
                flag,
                route_a: a,
                route_b: b,
            });
        }
        Tri::from_bool(a)
    };

    let left_simple = check("left_simple", is_left_simple(s)?, left_simple_b(s));
    let right_simple = check("right_simple", is_right_simple(s)?, right_simple_b(s));
    let simple = check("simple", is_simple(s)?, simple_b(s));

    let (left_0_simple, right_0_simple, zero_simple, completely_zero_simple, gamma_group) =
        match s.zero() {
            None => (
                Tri::NotApplicable,
                Tri::NotApplicable,
                Tri::NotApplicable,
                Tri::NotApplicable,
                Tri::NotApplicable,
            ),
            Some(z) => {
                let l0 = check(
                    "left_0_simple",
                    is_left_0_simple(s)?,
                    left_0_simple_b(s, z),
                );
                let r0 = check(
                    "right_0_simple",
                    is_right_0_simple(s)?,
                    right_0_simple_b(s, z),
                );
                let zs = check("zero_simple", is_0_simple(s)?, zero_simple_b(s, z));
                let c0 = check(
                    "completely_zero_simple",
                    is_completely_0_simple(s)?,
                    completely_0_simple_b(s)?,
                );
                let gg = Tri::from_bool(is_gamma_group_with_zero(s, &s.full_set())?);
                (l0, r0, zs, c0, gg)
            }
        };

    Ok(Classification {
        left_simple,
        right_simple,
        simple,
        left_0_simple,
        right_0_simple,
        zero_simple,
        completely_zero_simple,
        gamma_group_with_zero: gamma_group,
        disagreements,
    })
}
