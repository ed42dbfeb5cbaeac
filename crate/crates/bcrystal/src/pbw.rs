//! Type-A bijection between PBW exponent data along the fixed convex order
//! and the polyhedral coordinates, with the slot-wise extended version.
//!
//! Printed PBW tuples list exponents in reverse convex order
//! `(c_ℓ, ..., c_1)`, mirroring the canonical descending coordinate tuples.

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::{CartanType, Family, RootInterval};
use crate::error::{Error, Result};
use crate::extended::ExtendedElement;
use crate::lattice::CrystalElement;

/// Nonnegative exponents indexed by the type-A positive-root intervals in
/// convex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwDatum {
    cartan: CartanType,
    exps: Vec<i64>,
}

impl PbwDatum {
    /// Builds a datum from exponents listed in convex order.
    pub fn new(cartan: CartanType, exps: Vec<i64>) -> Result<Self> {
        if cartan.family() != Family::A {
            return Err(Error::TypeAOnly {
                cartan: cartan.to_string(),
            });
        }
        let len = cartan.rank() * (cartan.rank() + 1) / 2;
        if exps.len() != len {
            return Err(Error::Parse(format!(
                "{} expects {} exponents, got {}",
                cartan,
                len,
                exps.len()
            )));
        }
        if let Some(&bad) = exps.iter().find(|&&c| c < 0) {
            return Err(Error::Parse(format!("negative exponent {bad}")));
        }
        Ok(PbwDatum { cartan, exps })
    }

    pub fn zero(cartan: CartanType) -> Result<Self> {
        let len = cartan.rank() * (cartan.rank() + 1) / 2;
        PbwDatum::new(cartan, vec![0; len])
    }

    /// Parses the printed tuple, which lists exponents in reverse convex
    /// order.
    pub fn from_tuple(cartan: CartanType, values: &[i64]) -> Result<Self> {
        let mut exps: Vec<i64> = values.to_vec();
        exps.reverse();
        PbwDatum::new(cartan, exps)
    }

    /// The printed tuple: exponents in reverse convex order.
    pub fn to_tuple(&self) -> Vec<i64> {
        let mut v = self.exps.clone();
        v.reverse();
        v
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    /// Exponent of the interval root `[lo, hi]`; intervals are positioned at
    /// `hi(hi-1)/2 + lo - 1` in the convex order.
    pub fn exponent(&self, lo: usize, hi: usize) -> i64 {
        debug_assert!(1 <= lo && lo <= hi && hi <= self.cartan.rank());
        self.exps[hi * (hi - 1) / 2 + lo - 1]
    }

    /// Exponents paired with their intervals, in convex order.
    pub fn iter(&self) -> impl Iterator<Item = (RootInterval, i64)> + '_ {
        self.cartan
            .convex_order()
            .expect("type A")
            .into_iter()
            .zip(self.exps.iter().copied())
    }

    /// The coordinate image: `b_{i,j} = Σ_{t=1}^{j} c_{[t, i+j-1]}`. Always
    /// lands inside the crystal.
    pub fn to_polyhedral(&self) -> CrystalElement {
        let mut entries = Vec::new();
        for (s, t) in self.cartan.index_domain().iter() {
            let v: i64 = (1..=t).map(|a| self.exponent(a, s + t - 1)).sum();
            entries.push(((s, t), v));
        }
        let b = CrystalElement::new(self.cartan, entries).expect("partial sums are nonnegative");
        debug_assert!(b.is_member_chains(), "image must satisfy the chains");
        b
    }

    /// The inverse: `c_{[i,j]} = b_{j-i+1,i} - b_{j-i+2,i-1}` with column 0
    /// reading zero. Requires a member element.
    pub fn from_polyhedral(b: &CrystalElement) -> Result<Self> {
        if b.cartan().family() != Family::A {
            return Err(Error::TypeAOnly {
                cartan: b.cartan().to_string(),
            });
        }
        debug_assert!(b.is_member(), "conversion requires a member element");
        let order = b.cartan().convex_order()?;
        let exps = order
            .iter()
            .map(|r| {
                let u = b.get(r.hi - r.lo + 1, r.lo);
                let v = if r.lo >= 2 {
                    b.get(r.hi - r.lo + 2, r.lo - 1)
                } else {
                    0
                };
                u - v
            })
            .collect();
        PbwDatum::new(b.cartan(), exps)
    }
}

impl fmt::Display for PbwDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.to_tuple().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Applies the bijection slot-wise to a finitely supported family of data.
pub fn extended_to_polyhedral(
    cartan: CartanType,
    slots: &BTreeMap<i64, PbwDatum>,
) -> Result<ExtendedElement> {
    let components = slots
        .iter()
        .map(|(&k, c)| (k, c.to_polyhedral()))
        .collect::<Vec<_>>();
    ExtendedElement::new(cartan, components)
}

/// Slot-wise inverse; slots holding `𝟏` are omitted from the result.
pub fn extended_from_polyhedral(b: &ExtendedElement) -> Result<BTreeMap<i64, PbwDatum>> {
    b.support()
        .map(|(k, c)| Ok((k, PbwDatum::from_polyhedral(c)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CartanType {
        CartanType::a(3).unwrap()
    }

    #[test]
    fn golden_pairs() {
        let c = PbwDatum::from_tuple(a3(), &[1, 2, 2, 1, 0, 3]).unwrap();
        let b = c.to_polyhedral();
        assert_eq!(b.to_tuple(), [2, 4, 0, 5, 1, 3]);
        assert_eq!(PbwDatum::from_polyhedral(&b).unwrap(), c);

        let c = PbwDatum::from_tuple(a3(), &[1, 2, 0, 0, 1, 2]).unwrap();
        let b = c.to_polyhedral();
        assert_eq!(b.to_tuple(), [0, 2, 1, 3, 1, 2]);
        assert_eq!(PbwDatum::from_polyhedral(&b).unwrap(), c);
    }

    #[test]
    fn zero_maps_to_one() {
        let c = PbwDatum::zero(a3()).unwrap();
        assert!(c.to_polyhedral().is_one());
        let back = PbwDatum::from_polyhedral(&CrystalElement::one(a3())).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn exponent_indexing() {
        let c = PbwDatum::from_tuple(a3(), &[1, 2, 2, 1, 0, 3]).unwrap();
        assert_eq!(c.exponent(1, 1), 3);
        assert_eq!(c.exponent(1, 2), 0);
        assert_eq!(c.exponent(2, 2), 1);
        assert_eq!(c.exponent(1, 3), 2);
        assert_eq!(c.exponent(2, 3), 2);
        assert_eq!(c.exponent(3, 3), 1);
    }

    #[test]
    fn image_is_member_on_small_boxes() {
        // exhaust small exponent boxes; every image satisfies the chains and
        // converts back to the same datum
        let a2 = CartanType::a(2).unwrap();
        for c1 in 0..3 {
            for c2 in 0..3 {
                for c3 in 0..3 {
                    let c = PbwDatum::new(a2, vec![c1, c2, c3]).unwrap();
                    let b = c.to_polyhedral();
                    assert!(b.is_member_chains());
                    assert_eq!(PbwDatum::from_polyhedral(&b).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn extended_slotwise() {
        let c0 = PbwDatum::from_tuple(a3(), &[1, 2, 2, 1, 0, 3]).unwrap();
        let c1 = PbwDatum::from_tuple(a3(), &[1, 2, 0, 0, 1, 2]).unwrap();
        let slots: BTreeMap<i64, PbwDatum> = [(0, c0), (1, c1)].into_iter().collect();
        let ext = extended_to_polyhedral(a3(), &slots).unwrap();
        assert_eq!(ext.component(0).to_tuple(), [2, 4, 0, 5, 1, 3]);
        assert_eq!(ext.component(1).to_tuple(), [0, 2, 1, 3, 1, 2]);
        assert_eq!(extended_from_polyhedral(&ext).unwrap(), slots);

        let empty = extended_to_polyhedral(a3(), &BTreeMap::new()).unwrap();
        assert!(empty.is_unit());
    }

    #[test]
    fn rejects_non_type_a() {
        assert!(PbwDatum::zero(CartanType::b(2).unwrap()).is_err());
        let d4 = CartanType::d(4).unwrap();
        assert!(PbwDatum::from_polyhedral(&CrystalElement::one(d4)).is_err());
    }

    #[test]
    fn tuple_validation() {
        assert!(PbwDatum::from_tuple(a3(), &[1, 2, 3]).is_err());
        assert!(PbwDatum::from_tuple(a3(), &[0, 0, 0, 0, 0, -1]).is_err());
    }
}
