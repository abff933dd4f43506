//! Shared fixtures and independent brute-force oracles for the integration
//! tests.
//!
//! Fixture tables are written out literally (flat, row-major in `(a, gamma,
//! b)`) or derived through `from_semigroup`, so expected values in the tests
//! never depend on the code paths under test. The oracles re-derive ideal and
//! primality facts from first principles — raw `triple_product` loops over
//! every subset — and deliberately avoid the catalog machinery they are used
//! to check.

#![allow(dead_code)]

use gammasg::enumerate::from_semigroup;
use gammasg::ideals::IdealKind;
use gammasg::{ElementSet, GammaSemigroup};

/// Subset literal helper.
pub fn set(n: usize, members: &[usize]) -> ElementSet {
    ElementSet::from_members(n, members.iter().copied())
}

/// Catalog literal helper (already in (cardinality, lex) order in the tests).
pub fn sets(n: usize, catalogs: &[&[usize]]) -> Vec<ElementSet> {
    catalogs.iter().map(|members| set(n, members)).collect()
}

fn names(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

/// Five-element, one-gamma instance with elements named e,f,g,h,i.
/// e absorbs everything, i is a two-sided identity, and f,g,h sit between;
/// its one-sided ideal catalogs differ from the two-sided one.
pub fn five_with_identity() -> GammaSemigroup {
    let flat = vec![
        0, 0, 0, 0, 0, // e row
        0, 0, 3, 0, 1, // f row
        0, 0, 2, 0, 2, // g row
        0, 0, 3, 0, 3, // h row
        0, 1, 2, 3, 4, // i row
    ];
    GammaSemigroup::new(5, 1, flat, None)
        .expect("five-element fixture is associative")
        .with_element_names(names(&["e", "f", "g", "h", "i"]))
        .expect("five labels fit")
}

/// A near-miss variant of [`five_with_identity`] with `[g gamma g] = h`
/// instead of `g`; fails associativity first at `(1, 0, 2, 0, 2)`.
pub fn nonassoc_five_flat() -> Vec<usize> {
    vec![
        0, 0, 0, 0, 0, //
        0, 0, 3, 0, 1, //
        0, 0, 3, 0, 2, //
        0, 0, 3, 0, 3, //
        0, 1, 2, 3, 4,
    ]
}

/// Four-element commutative instance named a,b,c,d whose kernel {a,d} is an
/// order-2 group; b and c generate strictly larger ideals.
pub fn four_with_group_kernel() -> GammaSemigroup {
    let flat = vec![
        0, 0, 3, 3, // a row
        0, 0, 3, 3, // b row
        3, 3, 0, 0, // c row
        3, 3, 0, 0, // d row
    ];
    GammaSemigroup::new(4, 1, flat, None)
        .expect("four-element fixture is associative")
        .with_element_names(names(&["a", "b", "c", "d"]))
        .expect("four labels fit")
}

/// Addition mod k as a binary Cayley table.
pub fn zmod_add_flat(k: usize) -> Vec<usize> {
    (0..k)
        .flat_map(|a| (0..k).map(move |b| (a + b) % k))
        .collect()
}

/// Multiplication mod k as a binary Cayley table.
pub fn zmod_mul_flat(k: usize) -> Vec<usize> {
    (0..k)
        .flat_map(|a| (0..k).map(move |b| (a * b) % k))
        .collect()
}

/// Fourth roots of unity (index k encodes i^k, so the binary product is
/// addition mod 4) with both imaginary units as gammas. Simple.
pub fn units_full() -> GammaSemigroup {
    from_semigroup(&zmod_add_flat(4), &[1, 3]).expect("unit-circle fixture")
}

/// Fourth roots of unity with the single gamma i.
pub fn units_i() -> GammaSemigroup {
    from_semigroup(&zmod_add_flat(4), &[1]).expect("unit-circle fixture")
}

/// [`units_i`] with a fresh zero adjoined at index 4; completely 0-simple.
pub fn units_i_zero() -> GammaSemigroup {
    units_i().adjoin_zero()
}

/// Integers mod 6 under multiplication, gamma {1}, zero 0. Commutative, with
/// a five-ideal two-sided catalog and four prime ideals.
pub fn zmod6() -> GammaSemigroup {
    from_semigroup(&zmod_mul_flat(6), &[1])
        .expect("modular fixture")
        .with_zero(0)
        .expect("0 absorbs")
}

/// Integers mod 6 under multiplication with gamma {2, 3}; its primes {0,3}
/// and {0,2,4} are incomparable yet their union is still an ideal.
pub fn zmod6_gamma23() -> GammaSemigroup {
    from_semigroup(&zmod_mul_flat(6), &[2, 3])
        .expect("modular fixture")
        .with_zero(0)
        .expect("0 absorbs")
}

/// Three-element nilpotent instance: the only nonzero product is
/// `[1 gamma 1] = 2`. The subset {0,1} absorbs `T Gamma E Gamma T` without
/// being an ideal, which is the standing two-sided-characterization
/// counterexample.
pub fn nil3() -> GammaSemigroup {
    GammaSemigroup::new(3, 1, vec![0, 0, 0, 0, 2, 0, 0, 0, 0], Some(0))
        .expect("nilpotent fixture is associative")
}

/// The five 2x2 matrix units over a zero: carrier {0, E12, E21, E11, E22}
/// with E(i,j)E(k,l) = E(i,l) when j = k, else 0. Completely 0-simple with
/// two 0-minimal left ideals.
pub fn matrix_units() -> GammaSemigroup {
    let flat = vec![
        0, 0, 0, 0, 0, // 0 row
        0, 0, 3, 0, 1, // E12 row
        0, 4, 0, 2, 0, // E21 row
        0, 1, 0, 3, 0, // E11 row
        0, 0, 2, 0, 4, // E22 row
    ];
    GammaSemigroup::new(5, 1, flat, Some(0)).expect("matrix-unit fixture is associative")
}

/// Order-2 group with both gammas acting (`[a gamma b] = a + gamma + b` mod
/// 2), then a fresh zero adjoined. 0-simple, yet its idempotent order is not
/// antisymmetric and it has no primitive idempotent, so the definitional and
/// 0-minimal-ideal routes to completely-0-simple disagree on it.
pub fn zero_adjoined_parity() -> GammaSemigroup {
    GammaSemigroup::new(2, 2, vec![0, 1, 1, 0, 1, 0, 0, 1], None)
        .expect("parity fixture is associative")
        .adjoin_zero()
}

/// Two elements, two gammas, zero 0: gamma 0 reaches the whole carrier but
/// gamma 1 collapses everything to zero. 0-simple while a single-gamma
/// product is degenerate.
pub fn gamma_collapse_probe() -> GammaSemigroup {
    GammaSemigroup::new(2, 2, vec![0, 0, 0, 0, 0, 1, 0, 0], Some(0))
        .expect("collapse probe is associative")
}

/// Every fixture worth sweeping in cross-checks, with stable labels.
pub fn all_fixtures() -> Vec<(&'static str, GammaSemigroup)> {
    vec![
        ("five_with_identity", five_with_identity()),
        ("four_with_group_kernel", four_with_group_kernel()),
        ("units_full", units_full()),
        ("units_i", units_i()),
        ("units_i_zero", units_i_zero()),
        ("zmod6", zmod6()),
        ("zmod6_gamma23", zmod6_gamma23()),
        ("nil3", nil3()),
        ("matrix_units", matrix_units()),
        ("zero_adjoined_parity", zero_adjoined_parity()),
        ("gamma_collapse_probe", gamma_collapse_probe()),
    ]
}

/// Setwise product `A Gamma B` over all gammas, by raw table lookups.
pub fn brute_product(s: &GammaSemigroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(s.n());
    for x in a.iter() {
        for g in 0..s.m() {
            for y in b.iter() {
                out.insert(s.triple_product(x, g, y));
            }
        }
    }
    out
}

/// Ideal predicate written from first principles: nonempty, and closed under
/// the appropriate one- or two-sided multiplication, checked entry by entry.
pub fn brute_is_ideal(s: &GammaSemigroup, b: &ElementSet, kind: IdealKind) -> bool {
    if b.is_empty() {
        return false;
    }
    let left_closed = (0..s.n()).all(|t| {
        (0..s.m()).all(|g| b.iter().all(|x| b.contains(s.triple_product(t, g, x))))
    });
    let right_closed = (0..s.n()).all(|t| {
        (0..s.m()).all(|g| b.iter().all(|x| b.contains(s.triple_product(x, g, t))))
    });
    match kind {
        IdealKind::Left => left_closed,
        IdealKind::Right => right_closed,
        IdealKind::TwoSided => left_closed && right_closed,
    }
}

/// Every ideal of the kind, by scanning all 2^n - 1 nonempty subsets; sorted
/// by (cardinality, then lexicographic membership) so the result is directly
/// comparable with the library catalogs.
pub fn brute_all_ideals(s: &GammaSemigroup, kind: IdealKind) -> Vec<ElementSet> {
    let n = s.n();
    assert!(n <= 16, "subset oracle is meant for small carriers");
    let mut out = Vec::new();
    for mask in 1usize..(1 << n) {
        let b = ElementSet::from_members(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if brute_is_ideal(s, &b, kind) {
            out.push(b);
        }
    }
    out.sort();
    out
}

/// Primality by the raw pair definition over the brute-force two-sided
/// catalog: no pair (E, F) of two-sided ideals outside Q multiplies into Q.
pub fn brute_is_prime(s: &GammaSemigroup, q: &ElementSet) -> bool {
    assert!(brute_is_ideal(s, q, IdealKind::TwoSided), "Q must be an ideal");
    let catalog = brute_all_ideals(s, IdealKind::TwoSided);
    for e in &catalog {
        if e.is_subset_of(q) {
            continue;
        }
        for f in &catalog {
            if f.is_subset_of(q) {
                continue;
            }
            if brute_product(s, e, f).is_subset_of(q) {
                return false;
            }
        }
    }
    true
}

/// Every prime two-sided ideal, pairwise brute force, in catalog order.
pub fn brute_prime_ideals(s: &GammaSemigroup) -> Vec<ElementSet> {
    brute_all_ideals(s, IdealKind::TwoSided)
        .into_iter()
        .filter(|q| brute_is_prime(s, q))
        .collect()
}
