//! Green's relations L, R, and D, the idempotent order with its monitored
//! poset laws, primitive idempotents, and regularity structure.

use crate::ideals::{principal_ideal, IdealKind};
use crate::semigroup::{ElementSet, GammaSemigroup, IdempotentMode, RegularityMode};

/// `e L f` iff the extended principal left ideals coincide:
/// `{e} u [T Gamma e] = {f} u [T Gamma f]`.
pub fn l_related(s: &GammaSemigroup, e: usize, f: usize) -> bool {
    principal_ideal(s, e, IdealKind::Left) == principal_ideal(s, f, IdealKind::Left)
}

/// `e R f` iff the extended principal right ideals coincide.
pub fn r_related(s: &GammaSemigroup, e: usize, f: usize) -> bool {
    principal_ideal(s, e, IdealKind::Right) == principal_ideal(s, f, IdealKind::Right)
}

/// `e D f` iff some `c` has `e L c` and `c R f` (the composition L then R).
pub fn d_related(s: &GammaSemigroup, e: usize, f: usize) -> bool {
    (0..s.n()).any(|c| l_related(s, e, c) && r_related(s, c, f))
}

/// Partitions for L, R, and D, plus the monitored composition datum.
///
/// `d_class_of` labels the classes of the equivalence join of L and R (the
/// finest equivalence containing both); when `lr_composition_commutes` holds
/// — it did on every instance this crate's corpus has seen — the join
/// coincides with the composition `d_related` on all pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenStructure {
    pub l_class_of: Vec<usize>,
    pub r_class_of: Vec<usize>,
    pub d_class_of: Vec<usize>,
    pub l_classes: Vec<Vec<usize>>,
    pub r_classes: Vec<Vec<usize>>,
    pub d_classes: Vec<Vec<usize>>,
    /// Whether the compositions L-then-R and R-then-L agree on all pairs.
    pub lr_composition_commutes: bool,
}

fn classes_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let count = labels.iter().copied().max().map_or(0, |x| x + 1);
    let mut out = vec![Vec::new(); count];
    for (e, &c) in labels.iter().enumerate() {
        out[c].push(e);
    }
    out
}

/// Label a partition from a pairwise equivalence predicate; classes are
/// numbered by least member, members ascend.
fn label_partition(n: usize, mut related: impl FnMut(usize, usize) -> bool) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for e in 0..n {
        if label[e] != usize::MAX {
            continue;
        }
        label[e] = next;
        for (f, slot) in label.iter_mut().enumerate().skip(e + 1) {
            if *slot == usize::MAX && related(e, f) {
                *slot = next;
            }
        }
        next += 1;
    }
    label
}

/// Compute the full Green structure of an instance.
pub fn green_structure(s: &GammaSemigroup) -> GreenStructure {
    let n = s.n();
    let left: Vec<ElementSet> = (0..n)
        .map(|e| principal_ideal(s, e, IdealKind::Left))
        .collect();
    let right: Vec<ElementSet> = (0..n)
        .map(|e| principal_ideal(s, e, IdealKind::Right))
        .collect();
    let l_class_of = label_partition(n, |e, f| left[e] == left[f]);
    let r_class_of = label_partition(n, |e, f| right[e] == right[f]);

    // Equivalence join of L and R: connected components of the union graph.
    let mut join = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if join[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        join[start] = next;
        while let Some(e) = stack.pop() {
            for f in 0..n {
                if join[f] == usize::MAX
                    && (l_class_of[e] == l_class_of[f] || r_class_of[e] == r_class_of[f])
                {
                    join[f] = next;
                    stack.push(f);
                }
            }
        }
        next += 1;
    }

    let lr = |e: usize, f: usize| {
        (0..n).any(|c| l_class_of[e] == l_class_of[c] && r_class_of[c] == r_class_of[f])
    };
    let rl = |e: usize, f: usize| {
        (0..n).any(|c| r_class_of[e] == r_class_of[c] && l_class_of[c] == l_class_of[f])
    };
    let mut commutes = true;
    'outer: for e in 0..n {
        for f in 0..n {
            if lr(e, f) != rl(e, f) {
                commutes = false;
                break 'outer;
            }
        }
    }

    GreenStructure {
        l_classes: classes_from_labels(&l_class_of),
        r_classes: classes_from_labels(&r_class_of),
        d_classes: classes_from_labels(&join),
        l_class_of,
        r_class_of,
        d_class_of: join,
        lr_composition_commutes: commutes,
    }
}

/// The idempotent order: `e <= f` iff some `x, y` in Gamma give
/// `[e x f] = [f y e] = e`. Both arguments are expected to be idempotents
/// (Exists mode); the predicate itself is total.
pub fn idempotent_le(s: &GammaSemigroup, e: usize, f: usize) -> bool {
    (0..s.m()).any(|x| s.triple_product(e, x, f) == e)
        && (0..s.m()).any(|y| s.triple_product(f, y, e) == e)
}

/// The `<=` relation over the Exists-mode idempotents, with the poset laws
/// monitored rather than assumed: the crate records whether antisymmetry and
/// transitivity actually hold on this instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentOrder {
    /// Exists-mode idempotents, ascending.
    pub idempotents: Vec<usize>,
    /// `le[i][j]` is `idempotents[i] <= idempotents[j]`.
    pub le: Vec<Vec<bool>>,
    /// No two distinct idempotents below each other.
    pub antisymmetric: bool,
    /// `e <= f <= g` implies `e <= g` over the listed idempotents.
    pub transitive: bool,
}

/// Compute the idempotent order and its monitored laws.
pub fn idempotent_order(s: &GammaSemigroup) -> IdempotentOrder {
    let idempotents = s.idempotents(IdempotentMode::Exists);
    let k = idempotents.len();
    let le: Vec<Vec<bool>> = idempotents
        .iter()
        .map(|&e| {
            idempotents
                .iter()
                .map(|&f| idempotent_le(s, e, f))
                .collect()
        })
        .collect();
    let mut antisymmetric = true;
    let mut transitive = true;
    for i in 0..k {
        for j in 0..k {
            if i != j && le[i][j] && le[j][i] {
                antisymmetric = false;
            }
            for l in 0..k {
                if le[i][j] && le[j][l] && !le[i][l] {
                    transitive = false;
                }
            }
        }
    }
    IdempotentOrder {
        idempotents,
        le,
        antisymmetric,
        transitive,
    }
}

/// Nonzero Exists-mode idempotents minimal in the order: no *other* nonzero
/// idempotent lies below them. Without a designated zero every idempotent
/// counts as nonzero. Ascending order.
pub fn primitive_idempotents(s: &GammaSemigroup) -> Vec<usize> {
    let z = s.zero();
    let nonzero_idems: Vec<usize> = s
        .idempotents(IdempotentMode::Exists)
        .into_iter()
        .filter(|&e| Some(e) != z)
        .collect();
    nonzero_idems
        .iter()
        .copied()
        .filter(|&e| {
            !nonzero_idems
                .iter()
                .any(|&f| f != e && idempotent_le(s, f, e))
        })
        .collect()
}

/// Elements regular under the chosen mode, ascending.
pub fn regular_elements(s: &GammaSemigroup, mode: RegularityMode) -> Vec<usize> {
    (0..s.n()).filter(|&e| s.is_regular(e, mode)).collect()
}

/// Whether Standard-mode regularity is constant on every D-class (composition
/// form of D): for all `e, f`, `e D f` implies they are equally regular.
pub fn is_regular_class_consistent(s: &GammaSemigroup) -> bool {
    let reg: Vec<bool> = (0..s.n())
        .map(|e| s.is_regular(e, RegularityMode::Standard))
        .collect();
    for e in 0..s.n() {
        for f in 0..s.n() {
            if reg[e] != reg[f] && d_related(s, e, f) {
                return false;
            }
        }
    }
    true
}

/// Text egg-box diagram: one block per D-class; rows are R-classes, columns
/// L-classes, each cell listing the members of the intersection.
pub fn egg_box_text(s: &GammaSemigroup) -> String {
    let gs = green_structure(s);
    let mut out = String::new();
    for (di, dmembers) in gs.d_classes.iter().enumerate() {
        let set = ElementSet::from_members(s.n(), dmembers.iter().copied());
        out.push_str(&format!("D-class {}: {}\n", di, set.render(s)));
        let mut rlabels: Vec<usize> = dmembers.iter().map(|&e| gs.r_class_of[e]).collect();
        rlabels.sort_unstable();
        rlabels.dedup();
        let mut llabels: Vec<usize> = dmembers.iter().map(|&e| gs.l_class_of[e]).collect();
        llabels.sort_unstable();
        llabels.dedup();
        for &r in &rlabels {
            let mut cells = Vec::new();
            for &l in &llabels {
                let cell: Vec<String> = dmembers
                    .iter()
                    .filter(|&&e| gs.r_class_of[e] == r && gs.l_class_of[e] == l)
                    .map(|&e| s.element_label(e))
                    .collect();
                cells.push(if cell.is_empty() {
                    "-".to_string()
                } else {
                    cell.join(",")
                });
            }
            out.push_str(&format!("  | {} |\n", cells.join(" | ")));
        }
    }
    out
}
