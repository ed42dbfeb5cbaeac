//! The extended crystal: integer-indexed families of lattice elements with
//! the operators `Ê_{(i,k)}`, `F̂_{(i,k)}` mixing the usual structure on slot
//! `k` with the star structure on slot `k+1`, plus the type-A extended
//! planar layout.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bicrystal::{self, select};
use crate::cartan::{CartanType, Family, WeightVector};
use crate::error::{Error, Result};
use crate::lattice::CrystalElement;
use crate::tableaux::{gamma, gamma_star, Partition, PartitionFamily};

/// An element of the extended crystal: one lattice element per integer slot,
/// all but finitely many equal to `𝟏`. Slot 0 is the display anchor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedElement {
    cartan: CartanType,
    components: BTreeMap<i64, CrystalElement>,
}

impl ExtendedElement {
    /// The element with every slot equal to `𝟏`.
    pub fn unit(cartan: CartanType) -> Self {
        ExtendedElement {
            cartan,
            components: BTreeMap::new(),
        }
    }

    pub fn new(
        cartan: CartanType,
        slots: impl IntoIterator<Item = (i64, CrystalElement)>,
    ) -> Result<Self> {
        let mut components = BTreeMap::new();
        for (k, b) in slots {
            if b.cartan() != cartan {
                return Err(Error::CartanMismatch {
                    left: cartan.to_string(),
                    right: b.cartan().to_string(),
                });
            }
            if !b.is_one() {
                components.insert(k, b);
            }
        }
        Ok(ExtendedElement { cartan, components })
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    /// The component at slot `k` (`𝟏` when absent).
    pub fn component(&self, k: i64) -> CrystalElement {
        self.components
            .get(&k)
            .cloned()
            .unwrap_or_else(|| CrystalElement::one(self.cartan))
    }

    /// Replaces slot `k`, normalizing `𝟏` components away.
    pub fn with_component(&self, k: i64, b: CrystalElement) -> ExtendedElement {
        debug_assert_eq!(b.cartan(), self.cartan);
        let mut components = self.components.clone();
        if b.is_one() {
            components.remove(&k);
        } else {
            components.insert(k, b);
        }
        ExtendedElement {
            cartan: self.cartan,
            components,
        }
    }

    /// Slots holding a component different from `𝟏`.
    pub fn support(&self) -> impl Iterator<Item = (i64, &CrystalElement)> + '_ {
        self.components.iter().map(|(&k, b)| (k, b))
    }

    pub fn is_unit(&self) -> bool {
        self.components.is_empty()
    }

    /// `ŵt(𝐛) = Σ_k (-1)^k wt(b^{(k)})`.
    pub fn weight(&self) -> WeightVector {
        let mut acc = WeightVector::zero(self.cartan.rank());
        for (&k, b) in &self.components {
            let w = b.weight();
            acc = acc.add(&if k.rem_euclid(2) == 0 { w } else { w.negate() });
        }
        acc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ExtendedJson::from(self)).expect("extended element serializes")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let raw: ExtendedJson =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for ExtendedElement {
    /// Lists slots from the highest down to the lowest, underlining slot 0
    /// as `_(...)_`; the all-`𝟏` element prints as `(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "(1)");
        }
        let lo = *self.components.keys().min().unwrap();
        let hi = *self.components.keys().max().unwrap();
        let lo = lo.min(0);
        let hi = hi.max(0);
        let mut first = true;
        for k in (lo..=hi).rev() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let b = self.component(k);
            if k == 0 {
                write!(f, "_{b}_")?;
            } else {
                write!(f, "{b}")?;
            }
        }
        Ok(())
    }
}

/// JSON wire format: `{"cartan":"A3","slots":{"0":[...],"1":[...]}}` with
/// canonical descending tuples per slot; absent slots mean `𝟏`.
#[derive(Serialize, Deserialize)]
struct ExtendedJson {
    cartan: String,
    slots: BTreeMap<String, Vec<i64>>,
}

impl From<&ExtendedElement> for ExtendedJson {
    fn from(b: &ExtendedElement) -> Self {
        ExtendedJson {
            cartan: b.cartan.to_string(),
            slots: b
                .support()
                .map(|(k, c)| (k.to_string(), c.to_tuple()))
                .collect(),
        }
    }
}

impl TryFrom<ExtendedJson> for ExtendedElement {
    type Error = Error;

    fn try_from(raw: ExtendedJson) -> Result<Self> {
        let cartan: CartanType = raw.cartan.parse()?;
        let mut slots = Vec::new();
        for (k, tuple) in raw.slots {
            let k: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad slot index {k:?}")))?;
            slots.push((k, CrystalElement::from_tuple(cartan, &tuple)?));
        }
        ExtendedElement::new(cartan, slots)
    }
}

/// A label of the extended family: a base partition from `Π_i`
/// (unstarred) or `Π_i*` (starred).
///
/// Order: unstarred below every starred; unstarred by containment; starred
/// by reverse containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedLabel {
    pub base: Partition,
    pub starred: bool,
}

impl ExtendedLabel {
    pub fn le(&self, other: &ExtendedLabel) -> bool {
        match (self.starred, other.starred) {
            (false, true) => true,
            (true, false) => false,
            (false, false) => other.base.contains(&self.base),
            (true, true) => self.base.contains(&other.base),
        }
    }
}

impl fmt::Display for ExtendedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, if self.starred { "*" } else { "" })
    }
}

/// The labels of `Π̂_i`: the unstarred block then the starred block.
pub fn extended_labels(cartan: CartanType, i: usize) -> Vec<ExtendedLabel> {
    let mut labels: Vec<ExtendedLabel> = PartitionFamily::new(cartan, i, false)
        .members()
        .iter()
        .map(|p| ExtendedLabel {
            base: p.clone(),
            starred: false,
        })
        .collect();
    labels.extend(
        PartitionFamily::new(cartan, i, true)
            .members()
            .iter()
            .map(|p| ExtendedLabel {
                base: p.clone(),
                starred: true,
            }),
    );
    labels
}

/// `Σ̂^{(k)}_γ(𝐛)`: the usual sum on slot `k` for unstarred `γ`, the star sum
/// on slot `k+1` for starred `γ`.
pub fn sigma_hat(b: &ExtendedElement, i: usize, k: i64, label: &ExtendedLabel) -> Result<i64> {
    if label.starred {
        gamma_star(&b.component(k + 1), i, &label.base)
    } else {
        gamma(&b.component(k), i, &label.base)
    }
}

/// `ε̂_{(i,k)}(𝐛) = ε_i(b^{(k)}) - ε_i*(b^{(k+1)})`; may be negative.
pub fn eps_hat(b: &ExtendedElement, i: usize, k: i64) -> i64 {
    bicrystal::epsilon(&b.component(k), i) - bicrystal::epsilon_star(&b.component(k + 1), i)
}

/// Maximizes `Σ̂^{(k)}_γ` over `Π̂_i`, returning the value with the least and
/// greatest maximizing labels.
///
/// Resolution through the order: the least maximizer is unstarred iff the
/// unstarred block attains the maximum (`ε̂ ≥ 0`), in which case it is
/// `m_i(b^{(k)})`; otherwise it is the label of `M_i*(b^{(k+1)})`. Dually the
/// greatest maximizer is starred iff `ε̂ ≤ 0`, resolving to `m_i*(b^{(k+1)})`,
/// and to `M_i(b^{(k)})` otherwise.
pub fn select_hat(b: &ExtendedElement, i: usize, k: i64) -> (i64, ExtendedLabel, ExtendedLabel) {
    let usual = select(&b.component(k), i, false);
    let star = select(&b.component(k + 1), i, true);
    let value = usual.value.max(star.value);
    let least = if usual.value == value {
        ExtendedLabel {
            base: usual.argmin,
            starred: false,
        }
    } else {
        ExtendedLabel {
            base: star.argmax,
            starred: true,
        }
    };
    let greatest = if star.value == value {
        ExtendedLabel {
            base: star.argmin,
            starred: true,
        }
    } else {
        ExtendedLabel {
            base: usual.argmax,
            starred: false,
        }
    };
    (value, least, greatest)
}

/// `F̂_{(i,k)}`: lowers slot `k` by `f̃_i` when the least maximizer is
/// unstarred (`ε̂ ≥ 0`), else raises slot `k+1` by `ẽ_i*`. Total.
pub fn f_hat(b: &ExtendedElement, i: usize, k: i64) -> ExtendedElement {
    let (_, least, _) = select_hat(b, i, k);
    if !least.starred {
        b.with_component(k, bicrystal::f(&b.component(k), i, false))
    } else {
        let raised = bicrystal::e(&b.component(k + 1), i, true)
            .expect("starred least maximizer forces ε_i* > 0");
        b.with_component(k + 1, raised)
    }
}

/// `Ê_{(i,k)}`: raises slot `k` by `ẽ_i` when the greatest maximizer is
/// unstarred (`ε̂ > 0`), else lowers slot `k+1` by `f̃_i*`. Total.
pub fn e_hat(b: &ExtendedElement, i: usize, k: i64) -> ExtendedElement {
    let (_, _, greatest) = select_hat(b, i, k);
    if !greatest.starred {
        let raised = bicrystal::e(&b.component(k), i, false)
            .expect("unstarred greatest maximizer forces ε_i > 0");
        b.with_component(k, raised)
    } else {
        b.with_component(k + 1, bicrystal::f(&b.component(k + 1), i, true))
    }
}

/// Type-A integer relabeling of `Π̂_i`: unstarred `λ ↦ |λ|`, starred
/// `μ* ↦ n+2-|μ|`. The dispatch branch for node `i` switches past `n+1-i`.
pub fn label_as_integer(cartan: CartanType, label: &ExtendedLabel) -> Result<usize> {
    if cartan.family() != Family::A {
        return Err(Error::TypeAOnly {
            cartan: cartan.to_string(),
        });
    }
    let n = cartan.rank();
    Ok(if label.starred {
        n + 2 - label.base.size()
    } else {
        label.base.size()
    })
}

/// Planar points of the extended layout, keyed by `(k, s, t)`.
pub type ExtendedPlacement = BTreeMap<(i64, usize, usize), (i64, i64)>;

/// Placement of the type-A extended layout: slot `k` coordinates land at
/// `(-s-2t+3-kn, s)` for even `k` and `(-s-2t+3-kn, n-s+2)` for odd `k`.
pub fn extended_configuration(
    cartan: CartanType,
    window: std::ops::RangeInclusive<i64>,
) -> Result<ExtendedPlacement> {
    if cartan.family() != Family::A {
        return Err(Error::TypeAOnly {
            cartan: cartan.to_string(),
        });
    }
    let n = cartan.rank() as i64;
    let mut placement = BTreeMap::new();
    for k in window {
        for (s, t) in cartan.index_domain().iter() {
            let x = -(s as i64) - 2 * t as i64 + 3 - k * n;
            let y = if k.rem_euclid(2) == 0 {
                s as i64
            } else {
                n - s as i64 + 2
            };
            placement.insert((k, s, t), (x, y));
        }
    }
    Ok(placement)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CartanType {
        CartanType::a(3).unwrap()
    }

    fn a3_extended() -> ExtendedElement {
        let b0 = CrystalElement::from_tuple(a3(), &[2, 4, 0, 5, 1, 3]).unwrap();
        let b1 = CrystalElement::from_tuple(a3(), &[0, 2, 1, 3, 1, 2]).unwrap();
        ExtendedElement::new(a3(), [(0, b0), (1, b1)]).unwrap()
    }

    fn d4_extended() -> ExtendedElement {
        let d4 = CartanType::d(4).unwrap();
        let b0 = CrystalElement::from_tuple(d4, &[0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 0]).unwrap();
        let b1 = CrystalElement::from_tuple(d4, &[0, 0, 0, 2, 0, 0, 2, 1, 2, 1, 1, 0]).unwrap();
        ExtendedElement::new(d4, [(0, b0), (1, b1)]).unwrap()
    }

    #[test]
    fn sigma_hat_values_a3() {
        let b = a3_extended();
        let row = |k: usize, starred| ExtendedLabel {
            base: Partition::row(k),
            starred,
        };
        assert_eq!(sigma_hat(&b, 1, 0, &row(1, false)).unwrap(), 2);
        assert_eq!(sigma_hat(&b, 1, 0, &row(2, false)).unwrap(), 0);
        assert_eq!(sigma_hat(&b, 1, 0, &row(3, false)).unwrap(), 2);
        assert_eq!(sigma_hat(&b, 1, 0, &row(1, true)).unwrap(), 2);
    }

    #[test]
    fn sigma_hat_values_d4() {
        let b = d4_extended();
        let row = |k: usize, starred| ExtendedLabel {
            base: Partition::row(k),
            starred,
        };
        assert_eq!(sigma_hat(&b, 1, 0, &row(1, false)).unwrap(), 1);
        assert_eq!(sigma_hat(&b, 1, 0, &row(2, false)).unwrap(), 1);
        assert_eq!(sigma_hat(&b, 1, 0, &row(3, false)).unwrap(), 2);
        assert_eq!(sigma_hat(&b, 1, 0, &row(1, true)).unwrap(), 0);
    }

    #[test]
    fn eps_hat_values() {
        assert_eq!(eps_hat(&a3_extended(), 1, 0), 0);
        assert_eq!(eps_hat(&d4_extended(), 1, 0), 2);
        assert_eq!(eps_hat(&ExtendedElement::unit(a3()), 1, 0), 0);
    }

    #[test]
    fn select_hat_a3() {
        let b = a3_extended();
        let (value, least, greatest) = select_hat(&b, 1, 0);
        assert_eq!(value, 2);
        assert_eq!(
            least,
            ExtendedLabel {
                base: Partition::row(1),
                starred: false
            }
        );
        assert_eq!(
            greatest,
            ExtendedLabel {
                base: Partition::row(1),
                starred: true
            }
        );
    }

    #[test]
    fn select_hat_d4() {
        let b = d4_extended();
        let (value, least, greatest) = select_hat(&b, 1, 0);
        assert_eq!(value, 2);
        assert!(!least.starred && !greatest.starred);
        assert_eq!(least.base, Partition::row(3));
        assert_eq!(greatest.base, Partition::row(3));
    }

    #[test]
    fn select_hat_unit() {
        // all sums vanish, so the extremes of the order win: the smallest
        // unstarred label and the starred label with the largest base
        let b = ExtendedElement::unit(a3());
        let (value, least, greatest) = select_hat(&b, 1, 0);
        assert_eq!(value, 0);
        assert_eq!(
            least,
            ExtendedLabel {
                base: Partition::row(1),
                starred: false
            }
        );
        assert!(greatest.starred);
        // Π_1* for A3 is {(1)}
        assert_eq!(greatest.base, Partition::row(1));
        // every label maximizes here, so the extremes bound the whole family
        for l in extended_labels(a3(), 1) {
            assert!(least.le(&l));
            assert!(l.le(&greatest));
        }
    }

    #[test]
    fn operators_a3() {
        let b = a3_extended();
        let up = e_hat(&b, 1, 0);
        assert_eq!(up.component(0), b.component(0));
        assert_eq!(up.component(1).to_tuple(), [0, 2, 1, 3, 1, 3]);

        let down = f_hat(&b, 1, 0);
        assert_eq!(down.component(1), b.component(1));
        assert_eq!(down.component(0).to_tuple(), [2, 4, 0, 5, 1, 4]);
    }

    #[test]
    fn operators_d4() {
        let b = d4_extended();
        let up = e_hat(&b, 1, 0);
        assert_eq!(up.component(1), b.component(1));
        assert_eq!(
            up.component(0).to_tuple(),
            [0, 0, 0, 1, 0, 1, 3, 0, 2, 1, 0, 0]
        );

        let down = f_hat(&b, 1, 0);
        assert_eq!(down.component(1), b.component(1));
        assert_eq!(
            down.component(0).to_tuple(),
            [0, 0, 0, 3, 0, 1, 3, 0, 2, 1, 0, 0]
        );
    }

    #[test]
    fn weights() {
        assert_eq!(ExtendedElement::unit(a3()).weight(), WeightVector::zero(3));
        // wt(b^{(0)}) - wt(b^{(1)}) with column sums (5,5,5) and (3,3,3)
        assert_eq!(a3_extended().weight().coeffs(), &[-2, -2, -2]);

        // a single slot at k=1 contributes with a flipped sign
        let b = CrystalElement::from_tuple(a3(), &[0, 0, 0, 0, 0, 2]).unwrap();
        let e = ExtendedElement::new(a3(), [(1, b.clone())]).unwrap();
        assert_eq!(e.weight(), b.weight().negate());
    }

    #[test]
    fn display_underlines_slot_zero() {
        let b = a3_extended();
        assert_eq!(b.to_string(), "(0,2,1,3,1,2) _(2,4,0,5,1,3)_");
        assert_eq!(ExtendedElement::unit(a3()).to_string(), "(1)");
    }

    #[test]
    fn json_round_trip() {
        let b = a3_extended();
        assert_eq!(ExtendedElement::from_json(&b.to_json()).unwrap(), b);
        let parsed = ExtendedElement::from_json(
            r#"{"cartan":"A3","slots":{"0":[2,4,0,5,1,3],"1":[0,2,1,3,1,2]}}"#,
        )
        .unwrap();
        assert_eq!(parsed, b);
    }

    #[test]
    fn integer_relabeling() {
        let b = a3_extended();
        let (_, least, greatest) = select_hat(&b, 1, 0);
        assert_eq!(label_as_integer(a3(), &least).unwrap(), 1);
        assert_eq!(label_as_integer(a3(), &greatest).unwrap(), 4);
        assert!(label_as_integer(CartanType::d(4).unwrap(), &least).is_err());
    }

    #[test]
    fn extended_layout() {
        let placement = extended_configuration(a3(), 0..=1).unwrap();
        assert_eq!(placement[&(0, 1, 1)], (0, 1));
        assert_eq!(placement[&(1, 1, 1)], (-3, 4));
        assert_eq!(placement[&(0, 1, 3)], (-4, 1));

        // injective over a 3-slot window
        let placement = extended_configuration(a3(), -1..=1).unwrap();
        let points: std::collections::BTreeSet<_> = placement.values().collect();
        assert_eq!(points.len(), placement.len());

        assert!(extended_configuration(CartanType::b(2).unwrap(), 0..=0).is_err());
    }
}
