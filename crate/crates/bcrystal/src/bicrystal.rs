//! The two crystal structures on the lattice: statistics `ε_i`, `φ_i`,
//! operators `ẽ_i`, `f̃_i`, their star twins, the selectors `m`/`M`, and the
//! jump function tying the two structures together.
//!
//! All operations assume a member element (membership is the caller's
//! precondition and is debug-asserted, not re-checked in release builds).

use crate::lattice::CrystalElement;
use crate::tableaux::{family, gamma, gamma_star, tableau, Partition, Tableau};

/// Outcome of maximizing `Σ_λ` (or `Σ*_λ`) over the partition family:
/// the maximum `value`, the least maximizer `argmin` (intersection of all
/// maximizers) and the greatest maximizer `argmax` (their union).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectorResult {
    pub value: i64,
    pub argmin: Partition,
    pub argmax: Partition,
}

/// Signed unit coordinate updates accumulated from `v(s,t) = e_{s,t} - e_{s-1,t}`
/// over the cells of a partition inside a tableau.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoveVector {
    deltas: Vec<((usize, usize), i64)>,
}

impl MoveVector {
    /// Sums `v(I_T(s,t))` over the cells of `lambda` in `tab`.
    pub fn from_partition(tab: &Tableau, lambda: &Partition) -> MoveVector {
        let mut mv = MoveVector::default();
        for (s, t) in lambda.cells() {
            let (a, c) = tab.cell(s, t).index;
            mv.push((a, c), 1);
            if a >= 2 {
                mv.push((a - 1, c), -1);
            }
        }
        mv
    }

    fn push(&mut self, key: (usize, usize), sign: i64) {
        if let Some(entry) = self.deltas.iter_mut().find(|(k, _)| *k == key) {
            entry.1 += sign;
        } else {
            self.deltas.push((key, sign));
        }
    }

    pub fn apply(&self, b: &CrystalElement) -> CrystalElement {
        b.with_deltas(&self.deltas)
    }

    pub fn revert(&self, b: &CrystalElement) -> CrystalElement {
        let negated: Vec<_> = self.deltas.iter().map(|&(k, d)| (k, -d)).collect();
        b.with_deltas(&negated)
    }
}

fn family_value(b: &CrystalElement, i: usize, star: bool, lambda: &Partition) -> i64 {
    if star {
        gamma_star(b, i, lambda).expect("family member")
    } else {
        gamma(b, i, lambda).expect("family member")
    }
}

/// Maximizes the candidate sums over `Π_i` (or `Π_i*`).
///
/// The intersection and union of maximizers are again maximizers, so
/// `argmin`/`argmax` are well-defined; for totally ordered families they are
/// the literal min and max.
pub fn select(b: &CrystalElement, i: usize, star: bool) -> SelectorResult {
    debug_assert!(b.is_member(), "select requires a member element");
    let family = family(b.cartan(), i, star);
    let values: Vec<i64> = family
        .members()
        .iter()
        .map(|p| family_value(b, i, star, p))
        .collect();
    let value = *values.iter().max().expect("family is non-empty");
    let mut argmin: Option<Partition> = None;
    let mut argmax: Option<Partition> = None;
    for (p, &v) in family.members().iter().zip(&values) {
        if v == value {
            argmin = Some(match argmin {
                None => p.clone(),
                Some(m) => m.intersection(p),
            });
            argmax = Some(match argmax {
                None => p.clone(),
                Some(m) => m.union(p),
            });
        }
    }
    let argmin = argmin.expect("at least one maximizer");
    let argmax = argmax.expect("at least one maximizer");
    debug_assert_eq!(family_value(b, i, star, &argmin), value);
    debug_assert_eq!(family_value(b, i, star, &argmax), value);
    debug_assert!(argmax.contains(&argmin));
    SelectorResult {
        value,
        argmin,
        argmax,
    }
}

/// `ε_i(b)`, the maximum of the usual sums.
pub fn epsilon(b: &CrystalElement, i: usize) -> i64 {
    select(b, i, false).value
}

/// `ε_i*(b)`, the maximum of the star sums.
pub fn epsilon_star(b: &CrystalElement, i: usize) -> i64 {
    select(b, i, true).value
}

/// `φ_i(b) = ε_i(b) + ⟨h_i, wt(b)⟩`, star or usual.
pub fn phi(b: &CrystalElement, i: usize, star: bool) -> i64 {
    select(b, i, star).value + b.weight().pair(b.cartan(), i)
}

/// The lowering operator `f̃_i` (or `f̃_i*`): adds the move sum over the
/// least maximizer. Total on members.
pub fn f(b: &CrystalElement, i: usize, star: bool) -> CrystalElement {
    let sel = select(b, i, star);
    let tab = tableau(b.cartan(), i, star);
    let moved = MoveVector::from_partition(&tab, &sel.argmin).apply(b);
    debug_assert!(moved.is_member(), "f must stay inside the crystal");
    moved
}

/// The raising operator `ẽ_i` (or `ẽ_i*`): subtracts the move sum over the
/// greatest maximizer, or `None` when `ε` (resp. `ε*`) vanishes.
pub fn e(b: &CrystalElement, i: usize, star: bool) -> Option<CrystalElement> {
    let sel = select(b, i, star);
    debug_assert!(sel.value >= 0, "ε must be nonnegative on members");
    if sel.value == 0 {
        return None;
    }
    let tab = tableau(b.cartan(), i, star);
    let moved = MoveVector::from_partition(&tab, &sel.argmax).revert(b);
    debug_assert!(moved.is_member(), "e must stay inside the crystal");
    Some(moved)
}

/// `jump_i(b) = ε_i(b) + ε_i*(b) + ⟨h_i, wt(b)⟩`; nonnegative on members,
/// zero exactly when `f̃_i` and `f̃_i*` coincide.
pub fn jump(b: &CrystalElement, i: usize) -> i64 {
    let j = epsilon(b, i) + epsilon_star(b, i) + b.weight().pair(b.cartan(), i);
    debug_assert!(j >= 0, "jump must be nonnegative on members");
    j
}

/// Strict-removable nodes of a strict partition: cells whose removal leaves
/// a strict partition, listed by increasing row.
pub fn strict_removable_nodes(mu: &Partition) -> Vec<(usize, usize)> {
    debug_assert!(mu.is_strict());
    let len = mu.len();
    (1..=len)
        .filter(|&s| {
            let v = mu.part(s);
            if s == len {
                true
            } else {
                v - 1 > mu.part(s + 1)
            }
        })
        .map(|s| (s, mu.part(s)))
        .collect()
}

/// Strict-addable nodes of a strict partition inside `shape`: cells whose
/// addition keeps the partition strict, restricted to the tableau shape,
/// listed by increasing row.
pub fn strict_addable_nodes(mu: &Partition, shape: &Partition) -> Vec<(usize, usize)> {
    debug_assert!(mu.is_strict());
    let len = mu.len();
    let mut nodes = Vec::new();
    for s in 1..=len + 1 {
        let new_val = mu.part(s) + 1;
        let strict_above = s == 1 || new_val < mu.part(s - 1);
        if strict_above && shape.contains_cell(s, new_val) {
            nodes.push((s, new_val));
        }
    }
    nodes
}

/// The diagonal companions of consecutive strict-removable nodes:
/// `R'_p = (s_p, t_{p+1} + (s_{p+1} - s_p))`.
pub fn removable_companions(removable: &[(usize, usize)]) -> Vec<(usize, isize)> {
    removable
        .windows(2)
        .map(|w| {
            let (s_p, _) = w[0];
            let (s_q, t_q) = w[1];
            (s_p, t_q as isize + (s_q as isize - s_p as isize))
        })
        .collect()
}

/// The diagonal companions of consecutive strict-addable nodes:
/// `A'_q = (u_{q+1}, v_q + (u_q - u_{q+1}))`.
pub fn addable_companions(addable: &[(usize, usize)]) -> Vec<(usize, isize)> {
    addable
        .windows(2)
        .map(|w| {
            let (u_q, v_q) = w[0];
            let (u_r, _) = w[1];
            (u_r, v_q as isize + (u_q as isize - u_r as isize))
        })
        .collect()
}

/// Cell containment for possibly out-of-range companion columns.
pub fn contains_signed(lambda: &Partition, cell: (usize, isize)) -> bool {
    cell.1 >= 1 && lambda.contains_cell(cell.0, cell.1 as usize)
}
