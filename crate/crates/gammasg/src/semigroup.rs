//! Core representation: finite carriers with a ternary product `[a gamma b]`,
//! dense subset types, and the elementwise predicates everything else builds on.
//!
//! An instance is a pair of finite index sets — elements `0..n` and operation
//! symbols (gammas) `0..m` — together with a total table
//! `[a gamma b] : n x m x n -> n` satisfying the mixed associativity law
//! `[[a alpha b] beta c] = [a alpha [b beta c]]` for all choices. An optional
//! element may be designated as the zero (two-sided absorbing member).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// How an element counts as idempotent: under some gamma, or under all gammas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum IdempotentMode {
    /// `exists gamma: [e gamma e] = e` (the default; matches the existential
    /// products used by the idempotent order).
    #[default]
    Exists,
    /// `for all gamma: [e gamma e] = e`.
    ForAll,
}

/// Which regularity predicate to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RegularityMode {
    /// `exists alpha, beta in Gamma, x in T: [[e alpha x] beta e] = e`
    /// (the default; the D-class regularity facts are stated for this form).
    #[default]
    Standard,
    /// `exists alpha: [e alpha e] = e` (the one-step sandwich form; an
    /// element is one-step regular exactly when it is an exists-mode
    /// idempotent).
    OneStep,
}

/// Dense subset of the element carrier `0..n`.
///
/// Ordered by (cardinality, then lexicographic comparison of the ascending
/// member list); this ordering fixes catalog order and witness selection
/// throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Vec<bool>,
}

impl ElementSet {
    /// The empty subset of a carrier of size `n`.
    pub fn empty(n: usize) -> Self {
        ElementSet {
            members: vec![false; n],
        }
    }

    /// The full carrier `0..n`.
    pub fn full(n: usize) -> Self {
        ElementSet {
            members: vec![true; n],
        }
    }

    /// The singleton `{e}` inside a carrier of size `n`.
    pub fn singleton(n: usize, e: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(e);
        s
    }

    /// Subset of a carrier of size `n` with the given members.
    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = Self::empty(n);
        for e in members {
            s.insert(e);
        }
        s
    }

    /// Size of the owning carrier (not the subset's cardinality).
    pub fn carrier_size(&self) -> usize {
        self.members.len()
    }

    /// Number of members.
    pub fn cardinality(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    /// True when no member is present.
    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    /// Membership test.
    pub fn contains(&self, e: usize) -> bool {
        self.members.get(e).copied().unwrap_or(false)
    }

    /// Add a member (panics if out of carrier range).
    pub fn insert(&mut self, e: usize) {
        assert!(e < self.members.len(), "element {e} outside carrier");
        self.members[e] = true;
    }

    /// Remove a member.
    pub fn remove(&mut self, e: usize) {
        assert!(e < self.members.len(), "element {e} outside carrier");
        self.members[e] = false;
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    /// Subset test against a set over the same carrier.
    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.same_carrier(other);
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    /// Union with a set over the same carrier.
    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.same_carrier(other);
        ElementSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a || b)
                .collect(),
        }
    }

    /// Intersection with a set over the same carrier.
    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.same_carrier(other);
        ElementSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }

    /// Members of `self` not in `other` (same carrier).
    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.same_carrier(other);
        ElementSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a && !b)
                .collect(),
        }
    }

    /// Render as `{i,j,...}` using plain indices.
    pub fn render_indices(&self) -> String {
        let inner: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }

    /// Render as `{x,y,...}` using the instance's element names when present.
    pub fn render(&self, owner: &GammaSemigroup) -> String {
        let inner: Vec<String> = self.iter().map(|e| owner.element_label(e)).collect();
        format!("{{{}}}", inner.join(","))
    }

    fn same_carrier(&self, other: &ElementSet) {
        assert_eq!(
            self.members.len(),
            other.members.len(),
            "set operation across different carriers"
        );
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.same_carrier(other);
        self.cardinality()
            .cmp(&other.cardinality())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

/// Dense subset of the gamma carrier `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaSet {
    members: Vec<bool>,
}

impl GammaSet {
    /// The empty gamma subset.
    pub fn empty(m: usize) -> Self {
        GammaSet {
            members: vec![false; m],
        }
    }

    /// All gammas `0..m`.
    pub fn full(m: usize) -> Self {
        GammaSet {
            members: vec![true; m],
        }
    }

    /// The singleton `{g}`.
    pub fn singleton(m: usize, g: usize) -> Self {
        let mut s = Self::empty(m);
        assert!(g < m, "gamma {g} outside carrier");
        s.members[g] = true;
        s
    }

    /// Gamma subset with the given members.
    pub fn from_members<I: IntoIterator<Item = usize>>(m: usize, members: I) -> Self {
        let mut s = Self::empty(m);
        for g in members {
            assert!(g < m, "gamma {g} outside carrier");
            s.members[g] = true;
        }
        s
    }

    /// Size of the owning gamma carrier.
    pub fn carrier_size(&self) -> usize {
        self.members.len()
    }

    /// Membership test.
    pub fn contains(&self, g: usize) -> bool {
        self.members.get(g).copied().unwrap_or(false)
    }

    /// True when no member is present.
    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }
}

/// A validated finite instance: carrier size `n`, gamma count `m`, the full
/// ternary table, an optional designated zero, and optional cosmetic names.
///
/// Equality, ordering, and hashing consider only the semantic fields
/// `(n, m, table, zero)`; names are presentation metadata.
#[derive(Clone, Debug)]
pub struct GammaSemigroup {
    n: usize,
    m: usize,
    table: Vec<usize>,
    zero: Option<usize>,
    element_names: Option<Vec<String>>,
    gamma_names: Option<Vec<String>>,
}

impl PartialEq for GammaSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.m == other.m
            && self.table == other.table
            && self.zero == other.zero
    }
}

impl Eq for GammaSemigroup {}

impl Hash for GammaSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.m.hash(state);
        self.table.hash(state);
        self.zero.hash(state);
    }
}

impl PartialOrd for GammaSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GammaSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.m, &self.table, self.zero).cmp(&(
            other.n,
            other.m,
            &other.table,
            other.zero,
        ))
    }
}

impl GammaSemigroup {
    /// Build and fully validate an instance.
    ///
    /// `table` is row-major in `(a, gamma, b)`: the entry for `[a gamma b]`
    /// lives at flat offset `(a*m + gamma)*n + b`. Validation order: shape,
    /// entry ranges, associativity over every tuple `(a, alpha, b, beta, c)`
    /// (first lexicographic witness reported), then the zero law if a zero
    /// index was supplied.
    pub fn new(n: usize, m: usize, table: Vec<usize>, zero: Option<usize>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::BadShape {
                detail: format!("carrier sizes must be positive (got n={n}, m={m})"),
            });
        }
        let expected = n * m * n;
        if table.len() != expected {
            return Err(Error::BadShape {
                detail: format!(
                    "table length {} does not match n*m*n = {expected}",
                    table.len()
                ),
            });
        }
        for (position, &entry) in table.iter().enumerate() {
            if entry >= n {
                return Err(Error::IndexOutOfRange {
                    position,
                    line: None,
                });
            }
        }
        let s = GammaSemigroup {
            n,
            m,
            table,
            zero: None,
            element_names: None,
            gamma_names: None,
        };
        s.check_associative()?;
        let s = match zero {
            Some(z) => s.with_zero(z)?,
            None => s,
        };
        Ok(s)
    }

    fn check_associative(&self) -> Result<()> {
        for a in 0..self.n {
            for alpha in 0..self.m {
                for b in 0..self.n {
                    let ab = self.triple_product(a, alpha, b);
                    for beta in 0..self.m {
                        for c in 0..self.n {
                            let left = self.triple_product(ab, beta, c);
                            let right = self.triple_product(a, alpha, self.triple_product(b, beta, c));
                            if left != right {
                                return Err(Error::NotAssociative {
                                    a,
                                    alpha,
                                    b,
                                    beta,
                                    c,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Designate `z` as the zero after verifying its absorption law.
    pub fn with_zero(mut self, z: usize) -> Result<Self> {
        if z >= self.n {
            return Err(Error::ZeroOutOfRange { zero: z, n: self.n });
        }
        for e in 0..self.n {
            for g in 0..self.m {
                if self.triple_product(e, g, z) != z || self.triple_product(z, g, e) != z {
                    return Err(Error::BadZero {
                        element: e,
                        gamma: g,
                    });
                }
            }
        }
        self.zero = Some(z);
        Ok(self)
    }

    /// Attach cosmetic element names (must supply exactly `n`).
    pub fn with_element_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::BadShape {
                detail: format!("expected {} element names, got {}", self.n, names.len()),
            });
        }
        self.element_names = Some(names);
        Ok(self)
    }

    /// Attach cosmetic gamma names (must supply exactly `m`).
    pub fn with_gamma_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.m {
            return Err(Error::BadShape {
                detail: format!("expected {} gamma names, got {}", self.m, names.len()),
            });
        }
        self.gamma_names = Some(names);
        Ok(self)
    }

    /// Carrier size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of gammas.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The designated zero, if any.
    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    /// The raw table, row-major in `(a, gamma, b)`.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Cosmetic element names, if attached.
    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    /// Cosmetic gamma names, if attached.
    pub fn gamma_names(&self) -> Option<&[String]> {
        self.gamma_names.as_deref()
    }

    /// Printable label for an element: its name when present, else its index.
    pub fn element_label(&self, e: usize) -> String {
        match &self.element_names {
            Some(names) => names[e].clone(),
            None => e.to_string(),
        }
    }

    /// Printable label for a gamma: its name when present, else its index.
    pub fn gamma_label(&self, g: usize) -> String {
        match &self.gamma_names {
            Some(names) => names[g].clone(),
            None => g.to_string(),
        }
    }

    /// The ternary product `[a gamma b]`. Panics on out-of-range indices;
    /// ranges are otherwise enforced by construction.
    pub fn triple_product(&self, a: usize, gamma: usize, b: usize) -> usize {
        assert!(
            a < self.n && gamma < self.m && b < self.n,
            "triple_product index out of range: ({a}, {gamma}, {b})"
        );
        self.table[(a * self.m + gamma) * self.n + b]
    }

    /// The setwise product `{ [a g b] : a in A, g in G, b in B }`.
    /// Empty inputs yield the empty set.
    pub fn subset_product(&self, a: &ElementSet, g: &GammaSet, b: &ElementSet) -> ElementSet {
        assert_eq!(a.carrier_size(), self.n, "left set has wrong carrier");
        assert_eq!(b.carrier_size(), self.n, "right set has wrong carrier");
        assert_eq!(g.carrier_size(), self.m, "gamma set has wrong carrier");
        let mut out = ElementSet::empty(self.n);
        for x in a.iter() {
            for gamma in g.iter() {
                for y in b.iter() {
                    out.insert(self.triple_product(x, gamma, y));
                }
            }
        }
        out
    }

    /// The full element carrier as a set.
    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// The full gamma carrier as a set.
    pub fn full_gammas(&self) -> GammaSet {
        GammaSet::full(self.m)
    }

    /// Adjoin a fresh zero element at index `n` (always fresh: if the
    /// instance already had a designated zero, the new element supersedes it).
    /// Old products are unchanged; every product involving the new element is
    /// the new element.
    pub fn adjoin_zero(&self) -> GammaSemigroup {
        let n2 = self.n + 1;
        let z = self.n;
        let mut table = vec![z; n2 * self.m * n2];
        for a in 0..self.n {
            for g in 0..self.m {
                for b in 0..self.n {
                    table[(a * self.m + g) * n2 + b] = self.triple_product(a, g, b);
                }
            }
        }
        let element_names = self.element_names.as_ref().map(|names| {
            let mut names = names.clone();
            names.push("0".to_string());
            names
        });
        GammaSemigroup {
            n: n2,
            m: self.m,
            table,
            zero: Some(z),
            element_names,
            gamma_names: self.gamma_names.clone(),
        }
    }

    /// True iff `e` absorbs on both sides under every gamma (whether or not
    /// it is the designated zero).
    pub fn is_zero_element(&self, e: usize) -> bool {
        (0..self.n).all(|x| {
            (0..self.m).all(|g| {
                self.triple_product(x, g, e) == e && self.triple_product(e, g, x) == e
            })
        })
    }

    /// True iff `[a g b] = [b g a]` for all `a, g, b`.
    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// First lexicographic `(a, gamma, b)` with `[a gamma b] != [b gamma a]`,
    /// if any.
    pub fn commutativity_witness(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for g in 0..self.m {
                for b in 0..self.n {
                    if self.triple_product(a, g, b) != self.triple_product(b, g, a) {
                        return Some((a, g, b));
                    }
                }
            }
        }
        None
    }

    /// Idempotency of `e` under the chosen mode.
    pub fn is_idempotent(&self, e: usize, mode: IdempotentMode) -> bool {
        let holds = |g: usize| self.triple_product(e, g, e) == e;
        match mode {
            IdempotentMode::Exists => (0..self.m).any(holds),
            IdempotentMode::ForAll => (0..self.m).all(holds),
        }
    }

    /// All idempotents under the chosen mode, ascending.
    pub fn idempotents(&self, mode: IdempotentMode) -> Vec<usize> {
        (0..self.n).filter(|&e| self.is_idempotent(e, mode)).collect()
    }

    /// Regularity of `e` under the chosen mode.
    pub fn is_regular(&self, e: usize, mode: RegularityMode) -> bool {
        match mode {
            RegularityMode::OneStep => {
                (0..self.m).any(|g| self.triple_product(e, g, e) == e)
            }
            RegularityMode::Standard => (0..self.m).any(|alpha| {
                (0..self.n).any(|x| {
                    let ex = self.triple_product(e, alpha, x);
                    (0..self.m).any(|beta| self.triple_product(ex, beta, e) == e)
                })
            }),
        }
    }
}

impl fmt::Display for GammaSemigroup {
    /// Compact human-readable rendering: one block per gamma, rows by left
    /// operand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} m={}{}", self.n, self.m, match self.zero {
            Some(z) => format!(" zero={}", self.element_label(z)),
            None => String::new(),
        })?;
        for g in 0..self.m {
            writeln!(f, "gamma {}:", self.gamma_label(g))?;
            for a in 0..self.n {
                let row: Vec<String> = (0..self.n)
                    .map(|b| self.element_label(self.triple_product(a, g, b)))
                    .collect();
                writeln!(f, "  {} | {}", self.element_label(a), row.join(" "))?;
            }
        }
        Ok(())
    }
}
