//! Corpus construction: exhaustive table enumeration, seeded rejection
//! sampling, derivation from binary Cayley tables, a labeled set of
//! structured families, isomorphism reduction, and corpus manifests.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semigroup::GammaSemigroup;

/// Largest table (in cells, `n*m*n`) enumerated exhaustively.
pub const CELL_CAP: usize = 12;

/// Default per-instance try budget for rejection sampling.
pub const MAX_TRIES_DEFAULT: usize = 200_000;

/// Permutation-pair budget for canonicalization (`n! * m!` at most this).
pub const CANON_BUDGET: usize = 50_000;

/// Every associative table of shape `(n, m)`, in lexicographic flat-table
/// order, each emitted exactly once. Errors with `TooLarge` past the cell
/// cap.
pub fn enumerate_exhaustive(n: usize, m: usize) -> Result<Vec<GammaSemigroup>> {
    if n == 0 || m == 0 {
        return Err(Error::BadShape {
            detail: format!("carrier sizes must be positive (got n={n}, m={m})"),
        });
    }
    let cells = n * m * n;
    if cells > CELL_CAP {
        return Err(Error::TooLarge {
            cells,
            cap: CELL_CAP,
        });
    }
    let mut flat = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        match GammaSemigroup::new(n, m, flat.clone(), None) {
            Ok(s) => out.push(s),
            Err(Error::NotAssociative { .. }) => {}
            Err(other) => return Err(other),
        }
        // Advance the odometer (last cell fastest).
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            flat[pos] += 1;
            if flat[pos] < n {
                break;
            }
            flat[pos] = 0;
        }
    }
}

/// Rejection-sample a uniform associative table of shape `(n, m)`,
/// deterministic for a fixed `(n, m, seed, max_tries)`. The generator is
/// ChaCha8 seeded with `seed`; each try draws `n*m*n` cells uniformly.
/// Errors with `ExhaustedTries` when no associative table appears within
/// `max_tries`.
pub fn random_instance(
    n: usize,
    m: usize,
    seed: u64,
    max_tries: usize,
) -> Result<GammaSemigroup> {
    if n == 0 || m == 0 {
        return Err(Error::BadShape {
            detail: format!("carrier sizes must be positive (got n={n}, m={m})"),
        });
    }
    let cells = n * m * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let flat: Vec<usize> = (0..cells).map(|_| rng.gen_range(0..n)).collect();
        match GammaSemigroup::new(n, m, flat, None) {
            Ok(s) => return Ok(s),
            Err(Error::NotAssociative { .. }) => {}
            Err(other) => return Err(other),
        }
    }
    Err(Error::ExhaustedTries { tries: max_tries })
}

/// Derive an instance from an associative binary Cayley table (`n*n`
/// row-major, entries in `0..n`) and a nonempty list of gamma elements:
/// `[a gamma b] := (a * gamma) * b`. The result is always associative (still
/// validated). Errors: `NotAssociativeBinary` with the first failing
/// `(a, b, c)`; `IndexOutOfRange` for bad entries; `BadShape` for a
/// non-square table or empty gamma list.
pub fn from_semigroup(sg_table: &[usize], gamma: &[usize]) -> Result<GammaSemigroup> {
    let n = (1..).find(|&k| k * k >= sg_table.len()).unwrap_or(0);
    if n == 0 || n * n != sg_table.len() {
        return Err(Error::BadShape {
            detail: format!("binary table length {} is not a positive square", sg_table.len()),
        });
    }
    for (position, &entry) in sg_table.iter().enumerate() {
        if entry >= n {
            return Err(Error::IndexOutOfRange {
                position,
                line: None,
            });
        }
    }
    if gamma.is_empty() {
        return Err(Error::BadShape {
            detail: "gamma element list is empty".to_string(),
        });
    }
    if let Some(&bad) = gamma.iter().find(|&&g| g >= n) {
        return Err(Error::BadShape {
            detail: format!("gamma element {bad} is outside the carrier 0..{n}"),
        });
    }
    let mul = |a: usize, b: usize| sg_table[a * n + b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(Error::NotAssociativeBinary { a, b, c });
                }
            }
        }
    }
    let m = gamma.len();
    let mut table = vec![0usize; n * m * n];
    for a in 0..n {
        for (gi, &g) in gamma.iter().enumerate() {
            for b in 0..n {
                table[(a * m + gi) * n + b] = mul(mul(a, g), b);
            }
        }
    }
    GammaSemigroup::new(n, m, table, None)
}

fn zmod_add_table(k: usize) -> Vec<usize> {
    (0..k)
        .flat_map(|a| (0..k).map(move |b| (a + b) % k))
        .collect()
}

fn zmod_mul_table(k: usize) -> Vec<usize> {
    (0..k)
        .flat_map(|a| (0..k).map(move |b| (a * b) % k))
        .collect()
}

fn matrix_units_b2() -> GammaSemigroup {
    // Carrier {zero, E12, E21, E11, E22}; product of unit matrices
    // E(i,j) * E(k,l) = E(i,l) when j = k, else zero.
    let coords = [(0, 1), (1, 0), (0, 0), (1, 1)];
    let elem = |i: usize, l: usize| {
        coords
            .iter()
            .position(|&(p, q)| (p, q) == (i, l))
            .map(|x| x + 1)
            .unwrap_or(0)
    };
    let n = 5;
    let mut table = vec![0usize; n * n];
    for x in 1..n {
        for y in 1..n {
            let (i, j) = coords[x - 1];
            let (k, l) = coords[y - 1];
            if j == k {
                table[x * n + y] = elem(i, l);
            }
        }
    }
    GammaSemigroup::new(n, 1, table, Some(0)).expect("matrix-unit table is a fixture")
}

/// The labeled structured families, restricted to carriers of size at most
/// `max_n`. Labels are stable and usable as corpus filters.
pub fn structured_families(max_n: usize) -> Vec<(String, GammaSemigroup)> {
    let mut out: Vec<(String, GammaSemigroup)> = Vec::new();

    for n in 2..=6 {
        out.push((
            format!("zero-mult-{n}"),
            GammaSemigroup::new(n, 1, vec![0; n * n], Some(0))
                .expect("zero-multiplication table is a fixture"),
        ));
    }
    for n in 3..=6 {
        let mut flat = vec![0usize; n * n];
        flat[n + 1] = 2; // the single nonzero product [1 gamma 1] = 2
        out.push((
            format!("nil-{n}"),
            GammaSemigroup::new(n, 1, flat, Some(0)).expect("nilpotent table is a fixture"),
        ));
    }
    for n in 2..=5 {
        let left: Vec<usize> = (0..n).flat_map(|a| std::iter::repeat_n(a, n)).collect();
        let right: Vec<usize> = (0..n).flat_map(|_| 0..n).collect();
        out.push((
            format!("left-zero-{n}"),
            GammaSemigroup::new(n, 1, left, None).expect("left-zero band is a fixture"),
        ));
        out.push((
            format!("right-zero-{n}"),
            GammaSemigroup::new(n, 1, right, None).expect("right-zero band is a fixture"),
        ));
    }
    for k in 2..=6 {
        let add = zmod_add_table(k);
        out.push((
            format!("cyclic-{k}-id"),
            from_semigroup(&add, &[0])
                .expect("cyclic group table is a fixture")
                .adjoin_zero(),
        ));
        out.push((
            format!("cyclic-{k}-gen"),
            from_semigroup(&add, &[1])
                .expect("cyclic group table is a fixture")
                .adjoin_zero(),
        ));
    }
    out.push(("matrix-units-b2".to_string(), matrix_units_b2()));

    // Fourth roots of unity under multiplication, encoded by exponent:
    // index k represents i^k, so the product table is addition mod 4.
    let c4 = zmod_add_table(4);
    out.push((
        "complex-units-full".to_string(),
        from_semigroup(&c4, &[1, 3]).expect("unit-circle table is a fixture"),
    ));
    out.push((
        "complex-units-i".to_string(),
        from_semigroup(&c4, &[1]).expect("unit-circle table is a fixture"),
    ));
    out.push((
        "complex-units-i-zero".to_string(),
        from_semigroup(&c4, &[1])
            .expect("unit-circle table is a fixture")
            .adjoin_zero(),
    ));

    for k in [4, 5, 6, 7, 8] {
        out.push((
            format!("zmod-{k}"),
            from_semigroup(&zmod_mul_table(k), &[1])
                .expect("modular multiplication table is a fixture")
                .with_zero(0)
                .expect("0 absorbs under multiplication"),
        ));
    }
    out.push((
        "zmod-6-gamma23".to_string(),
        from_semigroup(&zmod_mul_table(6), &[2, 3])
            .expect("modular multiplication table is a fixture")
            .with_zero(0)
            .expect("0 absorbs under multiplication"),
    ));

    out.retain(|(_, s)| s.n() <= max_n);
    out
}

fn factorial(k: usize) -> usize {
    (1..=k).product::<usize>().max(1)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(factorial(k));
    let mut items: Vec<usize> = (0..k).collect();
    fn heap(items: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if size <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..size {
            heap(items, size - 1, out);
            if size.is_multiple_of(2) {
                items.swap(i, size - 1);
            } else {
                items.swap(0, size - 1);
            }
        }
    }
    heap(&mut items, k, &mut out);
    out
}

/// Canonical form under isomorphism: the lexicographically least
/// `(table, zero)` over all pairs of carrier and gamma permutations. Names
/// are dropped. Idempotent and isomorphism-invariant. Errors with
/// `TooLargeForCanonicalization` when `n! * m!` exceeds the budget.
pub fn canonical_form(s: &GammaSemigroup) -> Result<GammaSemigroup> {
    let (n, m) = (s.n(), s.m());
    if factorial(n).saturating_mul(factorial(m)) > CANON_BUDGET {
        return Err(Error::TooLargeForCanonicalization {
            budget: CANON_BUDGET,
        });
    }
    let mut best: Option<(Vec<usize>, Option<usize>)> = None;
    for sigma in &permutations(n) {
        for tau in &permutations(m) {
            let mut table = vec![0usize; n * m * n];
            for a in 0..n {
                for g in 0..m {
                    for b in 0..n {
                        table[(sigma[a] * m + tau[g]) * n + sigma[b]] =
                            sigma[s.triple_product(a, g, b)];
                    }
                }
            }
            let candidate = (table, s.zero().map(|z| sigma[z]));
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    let (table, zero) = best.expect("at least the identity permutation ran");
    GammaSemigroup::new(n, m, table, zero)
}

/// Deduplicate a list of instances under isomorphism; the survivors are the
/// canonical forms, in order of first appearance.
pub fn iso_reduce(instances: &[GammaSemigroup]) -> Result<Vec<GammaSemigroup>> {
    let mut seen: HashSet<GammaSemigroup> = HashSet::new();
    let mut out = Vec::new();
    for s in instances {
        let canon = canonical_form(s)?;
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    Ok(out)
}

/// How one corpus part produces instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Every associative table for each in-range shape within the cell cap.
    Exhaustive,
    /// `count` rejection-sampled instances per in-range shape. The i-th
    /// instance at shape `(n, m)` uses the derived seed
    /// `seed + 1_000_003*n + 10_007*m + i`.
    Random {
        seed: u64,
        count: usize,
        max_tries: usize,
    },
    /// The structured families, optionally filtered to the given labels.
    Structured { families: Option<Vec<String>> },
}

/// One part of a corpus: a shape range, a strategy, and optional
/// zero-adjunction / isomorphism-reduction transforms (applied in the order
/// reduce-then-adjoin).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Inclusive carrier-size range.
    pub n_range: (usize, usize),
    /// Inclusive gamma-count range.
    pub m_range: (usize, usize),
    pub strategy: Strategy,
    pub adjoin_zero: bool,
    pub iso_reduce: bool,
    /// Shapes beyond this many cells are skipped in exhaustive mode.
    pub cell_cap: usize,
}

/// A produced instance with its stable id, report class, and provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusInstance {
    pub id: String,
    pub class: String,
    pub provenance: String,
    pub instance: GammaSemigroup,
}

/// An ordered list of corpus parts; the unit the conformance engine runs on.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CorpusManifest {
    pub parts: Vec<CorpusSpec>,
}

fn apply_transforms(
    spec: &CorpusSpec,
    class: &str,
    provenance: &str,
    raw: Vec<(String, GammaSemigroup)>,
) -> Result<Vec<CorpusInstance>> {
    let mut staged: Vec<(String, String, GammaSemigroup)> = if spec.iso_reduce {
        let instances: Vec<GammaSemigroup> = raw.iter().map(|(_, s)| s.clone()).collect();
        iso_reduce(&instances)?
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                (
                    format!("{class}-c{i:04}"),
                    format!("{provenance} iso-reduced"),
                    s,
                )
            })
            .collect()
    } else {
        raw.into_iter()
            .map(|(id, s)| (id, provenance.to_string(), s))
            .collect()
    };
    if spec.adjoin_zero {
        staged = staged
            .into_iter()
            .map(|(id, prov, s)| (format!("{id}+0"), format!("{prov} zero-adjoined"), s.adjoin_zero()))
            .collect();
    }
    let class_suffix = if spec.adjoin_zero { "+0" } else { "" };
    Ok(staged
        .into_iter()
        .map(|(id, provenance, instance)| CorpusInstance {
            id,
            class: format!("{class}{class_suffix}"),
            provenance,
            instance,
        })
        .collect())
}

/// Materialize every part of a manifest, in order.
pub fn build_corpus(manifest: &CorpusManifest) -> Result<Vec<CorpusInstance>> {
    let mut out = Vec::new();
    for spec in &manifest.parts {
        match &spec.strategy {
            Strategy::Exhaustive => {
                for n in spec.n_range.0..=spec.n_range.1 {
                    for m in spec.m_range.0..=spec.m_range.1 {
                        if n == 0 || m == 0 || n * m * n > spec.cell_cap {
                            continue;
                        }
                        let class = format!("exh-{n}x{m}");
                        let raw: Vec<(String, GammaSemigroup)> = enumerate_exhaustive(n, m)?
                            .into_iter()
                            .enumerate()
                            .map(|(i, s)| (format!("{class}-{i:04}"), s))
                            .collect();
                        let provenance = format!("exhaustive n={n} m={m}");
                        out.extend(apply_transforms(spec, &class, &provenance, raw)?);
                    }
                }
            }
            Strategy::Random {
                seed,
                count,
                max_tries,
            } => {
                for n in spec.n_range.0..=spec.n_range.1 {
                    for m in spec.m_range.0..=spec.m_range.1 {
                        let class = format!("rnd-{n}x{m}");
                        let mut raw = Vec::with_capacity(*count);
                        for i in 0..*count {
                            let derived = seed
                                .wrapping_add(1_000_003u64.wrapping_mul(n as u64))
                                .wrapping_add(10_007u64.wrapping_mul(m as u64))
                                .wrapping_add(i as u64);
                            raw.push((
                                format!("{class}-{i:04}"),
                                random_instance(n, m, derived, *max_tries)?,
                            ));
                        }
                        let provenance =
                            format!("random n={n} m={m} base-seed={seed} count={count}");
                        out.extend(apply_transforms(spec, &class, &provenance, raw)?);
                    }
                }
            }
            Strategy::Structured { families } => {
                for (label, instance) in structured_families(spec.n_range.1) {
                    if let Some(filter) = families {
                        if !filter.iter().any(|f| f == &label) {
                            continue;
                        }
                    }
                    if instance.m() < spec.m_range.0 || instance.m() > spec.m_range.1 {
                        continue;
                    }
                    let class = format!("fam-{label}");
                    let provenance = format!("structured family {label}");
                    out.extend(apply_transforms(
                        spec,
                        &class,
                        &provenance,
                        vec![(class.clone(), instance)],
                    )?);
                }
            }
        }
    }
    Ok(out)
}

/// The pinned default conformance corpus: every exhaustive shape with at most
/// [`CELL_CAP`] cells (raw, no zero designated), all structured families, and
/// 1000 seeded random instances (250 at each of the four tractable shapes).
pub fn default_conformance_manifest() -> CorpusManifest {
    let base = CorpusSpec {
        n_range: (1, 3),
        m_range: (1, 12),
        strategy: Strategy::Exhaustive,
        adjoin_zero: false,
        iso_reduce: false,
        cell_cap: CELL_CAP,
    };
    let mut parts = vec![
        base.clone(),
        CorpusSpec {
            n_range: (1, 12),
            m_range: (1, 3),
            strategy: Strategy::Structured { families: None },
            ..base.clone()
        },
    ];
    for (n, m) in [(2, 1), (2, 2), (2, 3), (3, 1)] {
        parts.push(CorpusSpec {
            n_range: (n, n),
            m_range: (m, m),
            strategy: Strategy::Random {
                seed: 1729,
                count: 250,
                max_tries: MAX_TRIES_DEFAULT,
            },
            ..base.clone()
        });
    }
    CorpusManifest { parts }
}
