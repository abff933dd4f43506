//! Prime two-sided ideals: the ideal-pair definition, the principal-pair
//! (elementwise) characterization, the commutative shortcut, primality inside
//! a restricted sub-instance, chain union/intersection, and the full prime
//! catalog.
//!
//! Witness and scan-order conventions, fixed crate-wide: catalogs are sorted
//! by (cardinality, lexicographic membership); pair scans iterate the first
//! component (`E`) in that order, the second (`F`) innermost; element scans
//! iterate `(e, f)` lexicographically. The first violation found is the
//! reported witness.

use crate::error::{Error, Result};
use crate::ideals::{all_ideals, is_two_sided_ideal, principal_ideal, restrict_to, IdealKind};
use crate::semigroup::{ElementSet, GammaSemigroup};

/// Outcome of a primality test. A witness is present exactly when
/// `is_prime` is false, and is a pair of two-sided ideals `(E, F)` with
/// `[E Gamma F] subset Q` while neither `E` nor `F` is contained in `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeVerdict {
    pub is_prime: bool,
    pub witness: Option<(ElementSet, ElementSet)>,
}

impl PrimeVerdict {
    fn prime() -> Self {
        PrimeVerdict {
            is_prime: true,
            witness: None,
        }
    }

    fn refuted(e: ElementSet, f: ElementSet) -> Self {
        PrimeVerdict {
            is_prime: false,
            witness: Some((e, f)),
        }
    }

    /// Re-verify a stored witness against an instance and target ideal.
    pub fn witness_valid(&self, s: &GammaSemigroup, q: &ElementSet) -> bool {
        match &self.witness {
            None => self.is_prime,
            Some((e, f)) => {
                !self.is_prime
                    && is_two_sided_ideal(s, e)
                    && is_two_sided_ideal(s, f)
                    && s.subset_product(e, &s.full_gammas(), f).is_subset_of(q)
                    && !e.is_subset_of(q)
                    && !f.is_subset_of(q)
            }
        }
    }
}

fn require_two_sided(s: &GammaSemigroup, q: &ElementSet) -> Result<()> {
    if is_two_sided_ideal(s, q) {
        Ok(())
    } else {
        Err(Error::NotAnIdeal)
    }
}

/// Definitional route: quantify over all pairs from the two-sided catalog.
/// Errors: `NotAnIdeal` when `Q` is not a two-sided ideal.
pub fn is_prime_ideal(s: &GammaSemigroup, q: &ElementSet) -> Result<PrimeVerdict> {
    require_two_sided(s, q)?;
    let catalog = all_ideals(s, IdealKind::TwoSided)?.ideals;
    let gammas = s.full_gammas();
    for e in &catalog {
        if e.is_subset_of(q) {
            continue;
        }
        for f in &catalog {
            if f.is_subset_of(q) {
                continue;
            }
            if s.subset_product(e, &gammas, f).is_subset_of(q) {
                return Ok(PrimeVerdict::refuted(e.clone(), f.clone()));
            }
        }
    }
    Ok(PrimeVerdict::prime())
}

/// Elementwise route: quantify `(e, f)` over element pairs, using the
/// principal two-sided ideals. Agrees with [`is_prime_ideal`] (the
/// conformance suite checks this equivalence on every instance).
pub fn is_prime_by_elements(s: &GammaSemigroup, q: &ElementSet) -> Result<PrimeVerdict> {
    require_two_sided(s, q)?;
    let gammas = s.full_gammas();
    let principals: Vec<ElementSet> = (0..s.n())
        .map(|a| principal_ideal(s, a, IdealKind::TwoSided))
        .collect();
    for e in 0..s.n() {
        if q.contains(e) {
            continue;
        }
        for f in 0..s.n() {
            if q.contains(f) {
                continue;
            }
            if s
                .subset_product(&principals[e], &gammas, &principals[f])
                .is_subset_of(q)
            {
                return Ok(PrimeVerdict::refuted(
                    principals[e].clone(),
                    principals[f].clone(),
                ));
            }
        }
    }
    Ok(PrimeVerdict::prime())
}

/// Commutative shortcut: on a commutative instance, scan bare element
/// products `[e Gamma f] subset Q`. The returned witness is the pair of
/// principal ideals of the violating elements (valid because products can be
/// rearranged in the commutative case; re-verified by the suite). Errors:
/// `NotCommutative` (with the first witnessing triple) on non-commutative
/// input, `NotAnIdeal` as above.
pub fn is_prime_commutative(s: &GammaSemigroup, q: &ElementSet) -> Result<PrimeVerdict> {
    if let Some((a, gamma, b)) = s.commutativity_witness() {
        return Err(Error::NotCommutative { a, gamma, b });
    }
    require_two_sided(s, q)?;
    let gammas = s.full_gammas();
    for e in 0..s.n() {
        if q.contains(e) {
            continue;
        }
        let se = ElementSet::singleton(s.n(), e);
        for f in 0..s.n() {
            if q.contains(f) {
                continue;
            }
            let sf = ElementSet::singleton(s.n(), f);
            if s.subset_product(&se, &gammas, &sf).is_subset_of(q) {
                return Ok(PrimeVerdict::refuted(
                    principal_ideal(s, e, IdealKind::TwoSided),
                    principal_ideal(s, f, IdealKind::TwoSided),
                ));
            }
        }
    }
    Ok(PrimeVerdict::prime())
}

/// Primality of `H intersect Q` inside the instance restricted to `H`.
/// The verdict (and any witness) is in restricted coordinates; use the
/// restriction's element map to translate back. Errors: `NotAnIdeal` when
/// `H` is not a two-sided ideal or the intersection is empty.
pub fn prime_restricted(
    s: &GammaSemigroup,
    h: &ElementSet,
    q: &ElementSet,
) -> Result<PrimeVerdict> {
    require_two_sided(s, h)?;
    let restriction = restrict_to(s, h)?;
    let hq = restriction.project_set(&q.intersection(h));
    if hq.is_empty() {
        return Err(Error::NotAnIdeal);
    }
    is_prime_ideal(&restriction.instance, &hq)
}

fn validate_chain(s: &GammaSemigroup, chain: &[ElementSet]) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::EmptyChain);
    }
    for (index, q) in chain.iter().enumerate() {
        let verdict = is_prime_ideal(s, q).map_err(|e| match e {
            Error::NotAnIdeal => Error::NotPrime { index },
            other => other,
        })?;
        if !verdict.is_prime {
            return Err(Error::NotPrime { index });
        }
    }
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            if !chain[i].is_subset_of(&chain[j]) && !chain[j].is_subset_of(&chain[i]) {
                return Err(Error::NotAChain { i, j });
            }
        }
    }
    Ok(())
}

/// Verdict on the union of a chain of prime ideals (total order by
/// inclusion). Errors: `EmptyChain`, `NotPrime` (first non-prime member),
/// `NotAChain` (first incomparable position pair).
pub fn chain_union_primes(s: &GammaSemigroup, chain: &[ElementSet]) -> Result<PrimeVerdict> {
    validate_chain(s, chain)?;
    let mut union = ElementSet::empty(s.n());
    for q in chain {
        union = union.union(q);
    }
    is_prime_ideal(s, &union)
}

/// Verdict on the intersection of a chain of prime ideals. Same errors as
/// [`chain_union_primes`].
pub fn chain_intersection_primes(
    s: &GammaSemigroup,
    chain: &[ElementSet],
) -> Result<PrimeVerdict> {
    validate_chain(s, chain)?;
    let mut inter = s.full_set();
    for q in chain {
        inter = inter.intersection(q);
    }
    is_prime_ideal(s, &inter)
}

/// All prime two-sided ideals, in catalog order.
pub fn all_prime_ideals(s: &GammaSemigroup) -> Result<Vec<ElementSet>> {
    let catalog = all_ideals(s, IdealKind::TwoSided)?.ideals;
    let mut out = Vec::new();
    for q in catalog {
        if is_prime_ideal(s, &q)?.is_prime {
            out.push(q);
        }
    }
    Ok(out)
}
