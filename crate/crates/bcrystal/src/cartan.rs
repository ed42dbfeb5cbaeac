//! Root-system data for the finite families A, B and D.
//!
//! Everything downstream is driven by three pieces of data fixed here: the
//! Cartan pairings `⟨h_i, α_j⟩`, the two-parameter index domain carrying the
//! lattice coordinates, and (for type A) the convex order on positive roots
//! used by the PBW coordinates.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The three supported families of finite Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::D => 'D',
        }
    }
}

/// A finite Cartan type `X_n` with `X ∈ {A, B, D}`.
///
/// Ranks are restricted to the range where the family is honest: `A_n` needs
/// `n ≥ 1`, `B_n` needs `n ≥ 2`, and `D_n` needs `n ≥ 4` so that the nodes
/// `n-2`, `n-1`, `n` are distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::B => 2,
            Family::D => 4,
        };
        if rank < min {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        CartanType::new(Family::A, rank)
    }

    pub fn b(rank: usize) -> Result<Self> {
        CartanType::new(Family::B, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        CartanType::new(Family::D, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The Cartan pairing `⟨h_i, α_j⟩`.
    ///
    /// Diagonal entries are 2; off-diagonal entries lie in `{0, -1, -2}`,
    /// with -2 occurring only at `(i, j) = (n, n-1)` in type B.
    ///
    /// Panics when an index is outside `1..=rank`.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        let n = self.rank;
        assert!(
            (1..=n).contains(&i) && (1..=n).contains(&j),
            "index out of range for {self}: ({i},{j})"
        );
        if i == j {
            return 2;
        }
        match self.family {
            Family::A => {
                if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                }
            }
            Family::B => {
                // short root at node n: the arrow gives ⟨h_n, α_{n-1}⟩ = -2
                if i == n && j == n - 1 {
                    -2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                }
            }
            Family::D => {
                // chain 1-2-...-(n-2) with both n-1 and n attached to n-2
                let adjacent = (i.abs_diff(j) == 1 && i.min(j) <= n - 2 && i.max(j) < n)
                    || (i.min(j) == n - 2 && i.max(j) == n);
                if adjacent {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// The finite set of coordinate positions `(s, t)` that may be nonzero.
    pub fn index_domain(&self) -> IndexDomain {
        let n = self.rank;
        let mut pairs = BTreeSet::new();
        let max_s = |t: usize| match self.family {
            Family::A => n + 1 - t,
            Family::B => n,
            Family::D => n - 1,
        };
        for t in 1..=n {
            for s in 1..=max_s(t) {
                pairs.insert((s, t));
            }
        }
        IndexDomain {
            cartan: *self,
            pairs,
        }
    }

    /// True when `(s, t)` carries a coordinate; reads outside are zero.
    pub fn in_domain(&self, s: usize, t: usize) -> bool {
        if s < 1 || t < 1 || t > self.rank {
            return false;
        }
        match self.family {
            Family::A => s + t <= self.rank + 1,
            Family::B => s <= self.rank,
            Family::D => s < self.rank,
        }
    }

    /// Positive roots in simple-root coordinates, built by closing the
    /// simple roots under the simple reflections.
    pub fn positive_root_vectors(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            roots.insert(v.clone());
            queue.push(v);
        }
        while let Some(beta) = queue.pop() {
            for i in 1..=n {
                let pair: i64 = (1..=n).map(|t| self.pairing(i, t) * beta[t - 1]).sum();
                let mut refl = beta.clone();
                refl[i - 1] -= pair;
                if refl.iter().all(|&c| c >= 0)
                    && refl.iter().any(|&c| c > 0)
                    && roots.insert(refl.clone())
                {
                    queue.push(refl);
                }
            }
        }
        roots.into_iter().collect()
    }

    /// Positive roots of type A listed in the fixed convex order: intervals
    /// grouped by increasing right endpoint, within a group by increasing
    /// left endpoint (`[1,1], [1,2], [2,2], [1,3], ...`).
    pub fn convex_order(&self) -> Result<Vec<RootInterval>> {
        if self.family != Family::A {
            return Err(Error::TypeAOnly {
                cartan: self.to_string(),
            });
        }
        let mut order = Vec::with_capacity(self.rank * (self.rank + 1) / 2);
        for hi in 1..=self.rank {
            for lo in 1..=hi {
                order.push(RootInterval { lo, hi });
            }
        }
        Ok(order)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("expected a cartan type like \"A3\", got {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(err)? {
            'A' | 'a' => Family::A,
            'B' | 'b' => Family::B,
            'D' | 'd' => Family::D,
            _ => return Err(err()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        CartanType::new(family, rank)
    }
}

/// The index domain `{(s, t)}` of a Cartan type, with the canonical
/// coordinate order used for printed tuples: `s` descending, then `t`
/// descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexDomain {
    cartan: CartanType,
    pairs: BTreeSet<(usize, usize)>,
}

impl IndexDomain {
    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, s: usize, t: usize) -> bool {
        self.pairs.contains(&(s, t))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// Positions ordered for tuple I/O: `(s, t)` with `s` descending, then
    /// `t` descending, e.g. `(3,1), (2,2), (2,1), (1,3), (1,2), (1,1)` for A3.
    pub fn canonical_order(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.pairs.iter().copied().collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }
}

/// An interval `[lo, hi]` standing for the type-A positive root
/// `α_lo + α_{lo+1} + ... + α_hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootInterval {
    pub lo: usize,
    pub hi: usize,
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// An integer weight written in simple-root coordinates,
/// `wt = Σ_t coeffs[t-1] · α_t`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    coeffs: Vec<i64>,
}

impl WeightVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        WeightVector { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        WeightVector {
            coeffs: vec![0; rank],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> i64 {
        self.coeffs[t - 1]
    }

    /// `⟨h_i, wt⟩` under the pairings of `cartan`.
    pub fn pair(&self, cartan: CartanType, i: usize) -> i64 {
        (1..=cartan.rank())
            .map(|t| cartan.pairing(i, t) * self.coeffs[t - 1])
            .sum()
    }

    /// Sum of the coefficients; for `-wt` of a crystal element this is the
    /// number of lowering steps from the highest-weight element.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn negate(&self) -> WeightVector {
        WeightVector {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        WeightVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Adds `sign · α_i`.
    pub fn add_alpha(&self, i: usize, sign: i64) -> WeightVector {
        let mut coeffs = self.coeffs.clone();
        coeffs[i - 1] += sign;
        WeightVector { coeffs }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["A1", "A3", "B2", "D4", "B7"] {
            let c: CartanType = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert!("C3".parse::<CartanType>().is_err());
        assert!("A0".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("D3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn pairing_values() {
        let a3 = CartanType::a(3).unwrap();
        assert_eq!(a3.pairing(1, 1), 2);
        assert_eq!(a3.pairing(1, 2), -1);
        assert_eq!(a3.pairing(1, 3), 0);

        // the single -2 entry sits at (n, n-1) in type B
        for n in 2..=5 {
            let b = CartanType::b(n).unwrap();
            assert_eq!(b.pairing(n, n - 1), -2);
            assert_eq!(b.pairing(n - 1, n), -1);
        }

        let d4 = CartanType::d(4).unwrap();
        assert_eq!(d4.pairing(2, 4), -1);
        assert_eq!(d4.pairing(4, 2), -1);
        assert_eq!(d4.pairing(3, 4), 0);
        assert_eq!(d4.pairing(4, 3), 0);
        assert_eq!(d4.pairing(1, 2), -1);
    }

    #[test]
    fn pairing_range() {
        for c in [
            CartanType::a(4).unwrap(),
            CartanType::b(3).unwrap(),
            CartanType::d(5).unwrap(),
        ] {
            let n = c.rank();
            for i in 1..=n {
                for j in 1..=n {
                    let v = c.pairing(i, j);
                    if i == j {
                        assert_eq!(v, 2);
                    } else {
                        assert!(v == 0 || v == -1 || v == -2);
                        if v == -2 {
                            assert_eq!((c.family(), i, j), (Family::B, n, n - 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn index_domains() {
        let a3 = CartanType::a(3).unwrap().index_domain();
        let expect: BTreeSet<_> = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]
            .into_iter()
            .collect();
        assert_eq!(a3.iter().collect::<BTreeSet<_>>(), expect);

        let b2 = CartanType::b(2).unwrap().index_domain();
        assert_eq!(b2.len(), 4);
        assert!(b2.contains(2, 2) && b2.contains(1, 1));

        let d4 = CartanType::d(4).unwrap().index_domain();
        assert_eq!(d4.len(), 12);
        assert!(d4.contains(3, 4) && !d4.contains(4, 1));
    }

    #[test]
    fn domain_size_equals_positive_root_count() {
        for c in [
            CartanType::a(1).unwrap(),
            CartanType::a(2).unwrap(),
            CartanType::a(3).unwrap(),
            CartanType::a(4).unwrap(),
            CartanType::b(2).unwrap(),
            CartanType::b(3).unwrap(),
            CartanType::b(4).unwrap(),
            CartanType::d(4).unwrap(),
            CartanType::d(5).unwrap(),
        ] {
            let roots = c.positive_root_vectors();
            assert_eq!(roots.len(), c.index_domain().len(), "{c}");
        }
    }

    #[test]
    fn canonical_order_matches_printed_tuples() {
        let a3 = CartanType::a(3).unwrap().index_domain();
        assert_eq!(
            a3.canonical_order(),
            vec![(3, 1), (2, 2), (2, 1), (1, 3), (1, 2), (1, 1)]
        );
    }

    #[test]
    fn convex_order_type_a() {
        let a2 = CartanType::a(2).unwrap();
        let order: Vec<_> = a2.convex_order().unwrap();
        assert_eq!(
            order,
            vec![
                RootInterval { lo: 1, hi: 1 },
                RootInterval { lo: 1, hi: 2 },
                RootInterval { lo: 2, hi: 2 },
            ]
        );

        let a1 = CartanType::a(1).unwrap();
        assert_eq!(a1.convex_order().unwrap().len(), 1);

        let a3 = CartanType::a(3).unwrap();
        let order: Vec<_> = a3.convex_order().unwrap();
        let pairs: Vec<(usize, usize)> = order.iter().map(|r| (r.lo, r.hi)).collect();
        assert_eq!(pairs, vec![(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3)]);
        // same right endpoint => increasing left endpoint
        for w in order.windows(2) {
            if w[0].hi == w[1].hi {
                assert!(w[0].lo < w[1].lo);
            }
        }

        assert!(CartanType::b(2).unwrap().convex_order().is_err());
    }
}
