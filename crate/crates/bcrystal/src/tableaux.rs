//! Partitions, the local linear forms `∂_{s,t}` and `∂*_{s,t}`, the tableaux
//! `T_i` / `T_i*` filled with them, and the partition families indexing the
//! candidate sums `Σ_λ` and `Σ*_λ`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cartan::{CartanType, Family};
use crate::error::{Error, Result};
use crate::lattice::CrystalElement;

/// A partition: weakly decreasing nonnegative integers, trailing zeros
/// trimmed. Cells are addressed 1-based: `(i, j) ∈ λ` iff `j ≤ λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(k)`; `η_0` is empty.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The staircase `δ_k = (k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length with zero padding.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Nonzero parts pairwise distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Componentwise max.
    pub fn union(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        Partition::new((1..=rows).map(|i| self.part(i).max(other.part(i))))
    }

    /// Componentwise min.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        Partition::new((1..=rows).map(|i| self.part(i).min(other.part(i))))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `∂_{s,t}(b) = x_{s,t} + Σ_{k>t} ⟨h_t,α_k⟩ x_{s,k}
///             + Σ_{k<t} ⟨h_t,α_k⟩ x_{s+1,k} + x_{s+1,t}`.
///
/// Reads outside the index domain are zero. `(s, t)` itself must lie in the
/// domain.
pub fn partial(b: &CrystalElement, s: usize, t: usize) -> i64 {
    let cartan = b.cartan();
    assert!(
        cartan.in_domain(s, t),
        "({s},{t}) outside domain of {cartan}"
    );
    let n = cartan.rank();
    let mut v = b.get(s, t) + b.get(s + 1, t);
    for k in t + 1..=n {
        v += cartan.pairing(t, k) * b.get(s, k);
    }
    for k in 1..t {
        v += cartan.pairing(t, k) * b.get(s + 1, k);
    }
    v
}

/// `∂*_{s,t}(b) = x_{s-1,t} + Σ_{k>t} ⟨h_t,α_k⟩ x_{s-1,k}
///              + Σ_{k<t} ⟨h_t,α_k⟩ x_{s,k} + x_{s,t}`; row 0 reads are zero.
pub fn partial_star(b: &CrystalElement, s: usize, t: usize) -> i64 {
    let cartan = b.cartan();
    assert!(
        cartan.in_domain(s, t),
        "({s},{t}) outside domain of {cartan}"
    );
    let n = cartan.rank();
    let mut v = b.get(s, t);
    if s >= 2 {
        v += b.get(s - 1, t);
        for k in t + 1..=n {
            v += cartan.pairing(t, k) * b.get(s - 1, k);
        }
    }
    for k in 1..t {
        v += cartan.pairing(t, k) * b.get(s, k);
    }
    v
}

/// One cell of a tableau: a coordinate index, a star flag, and a scalar
/// coefficient (2 only in type B's `T_n*` at columns `t ≥ 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub index: (usize, usize),
    pub star: bool,
    pub coeff: i64,
}

impl Cell {
    pub fn eval(&self, b: &CrystalElement) -> i64 {
        let (a, c) = self.index;
        let v = if self.star {
            partial_star(b, a, c)
        } else {
            partial(b, a, c)
        };
        self.coeff * v
    }

    pub fn token(&self) -> String {
        let coeff = if self.coeff == 1 {
            String::new()
        } else {
            self.coeff.to_string()
        };
        let star = if self.star { "*" } else { "" };
        format!("{coeff}∂{star}[{},{}]", self.index.0, self.index.1)
    }
}

/// The tableau `T_i` (usual) or `T_i*` (star) of a Cartan type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    cartan: CartanType,
    i: usize,
    star: bool,
    shape: Partition,
    cells: Vec<((usize, usize), Cell)>,
}

impl Tableau {
    fn build(cartan: CartanType, i: usize, star: bool) -> Tableau {
        let n = cartan.rank();
        assert!(
            (1..=n).contains(&i),
            "node index {i} out of range for {cartan}"
        );
        let (shape, fill): (Partition, Box<dyn Fn(usize, usize) -> Cell>) =
            match (cartan.family(), star) {
                (Family::A, false) => (
                    Partition::row(n + 1 - i),
                    Box::new(move |_, t| Cell {
                        index: (t, i),
                        star: false,
                        coeff: 1,
                    }),
                ),
                (Family::B, false) => (
                    Partition::row(n),
                    Box::new(move |_, t| Cell {
                        index: (t, i),
                        star: false,
                        coeff: 1,
                    }),
                ),
                (Family::D, false) => (
                    Partition::row(n - 1),
                    Box::new(move |_, t| Cell {
                        index: (t, i),
                        star: false,
                        coeff: 1,
                    }),
                ),
                (Family::A, true) => (
                    Partition::row(i),
                    Box::new(move |_, t| Cell {
                        index: (t, i + 1 - t),
                        star: true,
                        coeff: 1,
                    }),
                ),
                (Family::B, true) if i < n => (
                    Partition::row(i),
                    Box::new(move |_, t| Cell {
                        index: (t, i + 1 - t),
                        star: true,
                        coeff: 1,
                    }),
                ),
                (Family::B, true) => (
                    // T_n*: staircase δ_n, first column plain, the rest doubled
                    Partition::staircase(n),
                    Box::new(move |s, t| {
                        if t >= 2 {
                            Cell {
                                index: (s + t - 1, n + 1 - t),
                                star: true,
                                coeff: 2,
                            }
                        } else {
                            Cell {
                                index: (s, n),
                                star: true,
                                coeff: 1,
                            }
                        }
                    }),
                ),
                (Family::D, true) if i <= n - 2 => (
                    Partition::row(i),
                    Box::new(move |_, t| Cell {
                        index: (t, i + 1 - t),
                        star: true,
                        coeff: 1,
                    }),
                ),
                (Family::D, true) => (
                    // T_{n-1}* and T_n*: staircase δ_{n-1} whose first column
                    // alternates between columns n-1 and n with the row parity;
                    // T_n* is the (n-1 ↔ n) swap of T_{n-1}*.
                    Partition::staircase(n - 1),
                    Box::new(move |s, t| {
                        if t >= 2 {
                            Cell {
                                index: (s + t - 1, n - t),
                                star: true,
                                coeff: 1,
                            }
                        } else {
                            let odd_col = if i == n - 1 { n - 1 } else { n };
                            let even_col = if i == n - 1 { n } else { n - 1 };
                            Cell {
                                index: (s, if s % 2 == 1 { odd_col } else { even_col }),
                                star: true,
                                coeff: 1,
                            }
                        }
                    }),
                ),
            };
        let cells = shape.cells().map(|(s, t)| ((s, t), fill(s, t))).collect();
        Tableau {
            cartan,
            i,
            star,
            shape,
            cells,
        }
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn node(&self) -> usize {
        self.i
    }

    pub fn is_star(&self) -> bool {
        self.star
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn cell(&self, s: usize, t: usize) -> Cell {
        self.cells
            .iter()
            .find(|((a, b), _)| (*a, *b) == (s, t))
            .map(|(_, c)| *c)
            .expect("cell inside the shape")
    }

    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), Cell)> + '_ {
        self.cells.iter().copied()
    }

    /// Grid of cell tokens, one row per shape row.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (r, &len) in self.shape.parts().iter().enumerate() {
            let row: Vec<String> = (1..=len).map(|c| self.cell(r + 1, c).token()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Cached tableau lookup. Population is idempotent, so racing first accesses
/// are harmless.
pub fn tableau(cartan: CartanType, i: usize, star: bool) -> Arc<Tableau> {
    type Key = (CartanType, usize, bool);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Tableau>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("tableau cache poisoned");
    map.entry((cartan, i, star))
        .or_insert_with(|| Arc::new(Tableau::build(cartan, i, star)))
        .clone()
}

/// The family `Π_i` (usual) or `Π_i*` (star): all non-empty partitions
/// (strict in the star case) contained in the shape of the tableau, ordered
/// by containment; closed under union and intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionFamily {
    cartan: CartanType,
    i: usize,
    star: bool,
    members: Vec<Partition>,
}

impl PartitionFamily {
    pub fn new(cartan: CartanType, i: usize, star: bool) -> PartitionFamily {
        let shape = tableau(cartan, i, star).shape().clone();
        let mut members = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        fn extend(
            shape: &Partition,
            strict: bool,
            row: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if row > shape.len() {
                return;
            }
            let above = if row == 1 {
                usize::MAX
            } else {
                current[row - 2]
            };
            let cap = shape.part(row).min(if strict {
                above.saturating_sub(1)
            } else {
                above
            });
            for v in 1..=cap {
                current.push(v);
                out.push(Partition::new(current.clone()));
                extend(shape, strict, row + 1, current, out);
                current.pop();
            }
        }
        extend(&shape, star, 1, &mut current, &mut members);
        members.sort_by_key(|p| (p.size(), p.parts().to_vec()));
        PartitionFamily {
            cartan,
            i,
            star,
            members,
        }
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members.contains(p)
    }

    pub fn is_star(&self) -> bool {
        self.star
    }
}

/// Cached family lookup, mirroring [`tableau`].
pub fn family(cartan: CartanType, i: usize, star: bool) -> Arc<PartitionFamily> {
    type Key = (CartanType, usize, bool);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<PartitionFamily>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("family cache poisoned");
    map.entry((cartan, i, star))
        .or_insert_with(|| Arc::new(PartitionFamily::new(cartan, i, star)))
        .clone()
}

/// `Σ_λ(b) = Σ_{s=|λ|}^{|η|} ∂_{s,i}(b)` for `λ ∈ Π_i`, the tail sum of the
/// usual tableau row from column `|λ|`.
pub fn gamma(b: &CrystalElement, i: usize, lambda: &Partition) -> Result<i64> {
    let tab = tableau(b.cartan(), i, false);
    if !(lambda.len() == 1 && lambda.part(1) <= tab.shape().part(1)) {
        return Err(Error::NotInFamily {
            partition: lambda.to_string(),
        });
    }
    let width = tab.shape().part(1);
    Ok((lambda.size()..=width).map(|s| partial(b, s, i)).sum())
}

/// `Σ*_λ(b) = Σ_{(s,t)∈λ} T_i*(s,t)(b)` for `λ ∈ Π_i*`, coefficients
/// included.
pub fn gamma_star(b: &CrystalElement, i: usize, lambda: &Partition) -> Result<i64> {
    let tab = tableau(b.cartan(), i, true);
    if lambda.is_empty() || !tab.shape().contains(lambda) || !lambda.is_strict() {
        return Err(Error::NotInFamily {
            partition: lambda.to_string(),
        });
    }
    Ok(lambda.cells().map(|(s, t)| tab.cell(s, t).eval(b)).sum())
}

/// Coefficient vector of a linear form in the coordinates, recovered by
/// evaluating at unit vectors. Used to compare sums against closed-form
/// function lists.
pub fn linear_form_coeffs(
    cartan: CartanType,
    eval: impl Fn(&CrystalElement) -> i64,
) -> Vec<((usize, usize), i64)> {
    let mut coeffs = Vec::new();
    for (s, t) in cartan.index_domain().iter() {
        let unit = CrystalElement::new(cartan, [((s, t), 1)]).expect("unit in domain");
        let c = eval(&unit);
        if c != 0 {
            coeffs.push(((s, t), c));
        }
    }
    coeffs
}
