//! Lattice points of the polyhedral crystal.
//!
//! A [`CrystalElement`] is a finitely supported family of nonnegative
//! integers `b_{s,t}` over the index domain of its Cartan type. Membership in
//! the crystal is decided by two independent routes: the explicit chains of
//! inequalities ([`CrystalElement::is_member_chains`]) and nonnegativity of
//! the boxed linear functionals ([`CrystalElement::is_member_boxed`]). The
//! two must agree on every point; the `membership_dual` suite checks this.
//!
//! Membership is deliberately not enforced by the type: linear forms are
//! evaluated on arbitrary nonnegative points, and crystal operations state
//! membership as a precondition instead.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, Family, WeightVector};
use crate::error::{Error, Result};

/// A lattice point: a map `(s,t) -> b_{s,t} ≥ 0` supported on the index
/// domain. Absent keys read as zero, as do reads outside the domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrystalElement {
    cartan: CartanType,
    coords: BTreeMap<(usize, usize), i64>,
}

impl CrystalElement {
    /// The highest-weight element `𝟏` (all coordinates zero).
    pub fn one(cartan: CartanType) -> Self {
        CrystalElement {
            cartan,
            coords: BTreeMap::new(),
        }
    }

    /// Builds an element from explicit entries. Rejects negative values and
    /// nonzero values outside the index domain; zero entries are normalized
    /// away.
    pub fn new(
        cartan: CartanType,
        entries: impl IntoIterator<Item = ((usize, usize), i64)>,
    ) -> Result<Self> {
        let mut coords = BTreeMap::new();
        for ((s, t), v) in entries {
            if v < 0 {
                return Err(Error::NegativeValue { s, t, value: v });
            }
            if v == 0 {
                continue;
            }
            if !cartan.in_domain(s, t) {
                return Err(Error::OutsideDomain {
                    cartan: cartan.to_string(),
                    s,
                    t,
                });
            }
            coords.insert((s, t), v);
        }
        Ok(CrystalElement { cartan, coords })
    }

    /// Builds an element from the canonical descending tuple
    /// (`s` descending, then `t` descending), e.g. `(2,4,0,5,1,3)` lists
    /// `b_{3,1}, b_{2,2}, b_{2,1}, b_{1,3}, b_{1,2}, b_{1,1}` for A3.
    pub fn from_tuple(cartan: CartanType, values: &[i64]) -> Result<Self> {
        let order = cartan.index_domain().canonical_order();
        if values.len() != order.len() {
            return Err(Error::Parse(format!(
                "{} expects {} coordinates, got {}",
                cartan,
                order.len(),
                values.len()
            )));
        }
        CrystalElement::new(cartan, order.into_iter().zip(values.iter().copied()))
    }

    /// The canonical descending tuple of all coordinates.
    pub fn to_tuple(&self) -> Vec<i64> {
        self.cartan
            .index_domain()
            .canonical_order()
            .into_iter()
            .map(|(s, t)| self.get(s, t))
            .collect()
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    /// Coordinate read; zero outside the support, the domain, or at row 0.
    pub fn get(&self, s: usize, t: usize) -> i64 {
        self.coords.get(&(s, t)).copied().unwrap_or(0)
    }

    /// Nonzero coordinates in key order.
    pub fn support(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.coords.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_one(&self) -> bool {
        self.coords.is_empty()
    }

    /// Total coordinate sum; equals the height of `-wt`.
    pub fn height(&self) -> i64 {
        self.coords.values().sum()
    }

    /// `wt(b) = -Σ b_{s,t} α_t`.
    pub fn weight(&self) -> WeightVector {
        let mut coeffs = vec![0i64; self.cartan.rank()];
        for (&(_, t), &v) in &self.coords {
            coeffs[t - 1] -= v;
        }
        WeightVector::new(coeffs)
    }

    /// Membership via the explicit chains of inequalities of the set
    /// description for the element's family.
    pub fn is_member_chains(&self) -> bool {
        let n = self.cartan.rank();
        let ge = |chain: &[i64]| chain.windows(2).all(|w| w[0] >= w[1]);
        match self.cartan.family() {
            Family::A => {
                // b_{1,k} ≥ b_{2,k-1} ≥ ... ≥ b_{k,1}
                (1..=n).all(|k| {
                    let chain: Vec<i64> = (1..=k).map(|s| self.get(s, k + 1 - s)).collect();
                    ge(&chain)
                })
            }
            Family::B => {
                let antidiag = (1..=n.saturating_sub(1)).all(|k| {
                    let chain: Vec<i64> = (1..=k).map(|s| self.get(s, k + 1 - s)).collect();
                    ge(&chain)
                });
                // b_{k,n} ≥ b_{k+1,n-1} ≥ ... ≥ b_{n,k}
                let tails = (1..=n).all(|k| {
                    let chain: Vec<i64> = (0..=n - k).map(|j| self.get(k + j, n - j)).collect();
                    ge(&chain)
                });
                // row k weakly decreases from column n-k+1 to n
                let rows = (2..=n).all(|k| {
                    let chain: Vec<i64> = (n - k + 1..=n).map(|t| self.get(k, t)).collect();
                    ge(&chain)
                });
                antidiag && tails && rows
            }
            Family::D => {
                let antidiag = (1..=n - 2).all(|k| {
                    let chain: Vec<i64> = (1..=k).map(|s| self.get(s, k + 1 - s)).collect();
                    ge(&chain)
                });
                // b_{k,n-1}+b_{k,n} ≥ b_{k+1,n-2} ≥ ... ≥ b_{n-1,k}
                let tails = (1..=n - 2).all(|k| {
                    let mut chain = vec![self.get(k, n - 1) + self.get(k, n)];
                    chain.extend((1..=n - 1 - k).map(|j| self.get(k + j, n - 1 - j)));
                    ge(&chain)
                });
                // row k: b_{k,n-k} ≥ ... ≥ b_{k,n-2} ≥ b_{k,n-1}+b_{k,n}
                let rows = (2..=n - 1).all(|k| {
                    let mut chain: Vec<i64> = (n - k..=n - 2).map(|t| self.get(k, t)).collect();
                    chain.push(self.get(k, n - 1) + self.get(k, n));
                    ge(&chain)
                });
                // the two alternating spin chains, columns n-1 and n swapping
                // with each row
                let alt = |first: usize, second: usize| {
                    let chain: Vec<i64> = (1..=n - 1)
                        .map(|s| self.get(s, if s % 2 == 1 { first } else { second }))
                        .collect();
                    ge(&chain)
                };
                antidiag && tails && rows && alt(n - 1, n) && alt(n, n - 1)
            }
        }
    }

    /// Membership via the boxed functionals: every admissible form with
    /// support in the index domain must evaluate `≥ 0`.
    pub fn is_member_boxed(&self) -> bool {
        self.coords.values().all(|&v| v >= 0)
            && BoxedForm::all_with_support(self.cartan)
                .iter()
                .all(|form| form.eval(self) >= 0)
    }

    /// Membership; the chains route is the default.
    pub fn is_member(&self) -> bool {
        self.is_member_chains()
    }

    /// Applies signed unit deltas. Used by the crystal operators; the result
    /// of a legal move on a member never goes negative.
    pub(crate) fn with_deltas(&self, deltas: &[((usize, usize), i64)]) -> CrystalElement {
        let mut coords = self.coords.clone();
        for &((s, t), d) in deltas {
            if d == 0 || !self.cartan.in_domain(s, t) {
                continue;
            }
            let v = coords.entry((s, t)).or_insert(0);
            *v += d;
            assert!(*v >= 0, "coordinate ({s},{t}) driven negative");
            if *v == 0 {
                coords.remove(&(s, t));
            }
        }
        CrystalElement {
            cartan: self.cartan,
            coords,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ElementJson::from(self)).expect("element serializes")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let raw: ElementJson =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.to_tuple().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// JSON wire format: `{"cartan":"A3","entries":[[s,t,v],...]}` with
/// unordered entries.
#[derive(Serialize, Deserialize)]
struct ElementJson {
    cartan: String,
    entries: Vec<(usize, usize, i64)>,
}

impl From<&CrystalElement> for ElementJson {
    fn from(b: &CrystalElement) -> Self {
        ElementJson {
            cartan: b.cartan.to_string(),
            entries: b.support().map(|((s, t), v)| (s, t, v)).collect(),
        }
    }
}

impl TryFrom<ElementJson> for CrystalElement {
    type Error = Error;

    fn try_from(raw: ElementJson) -> Result<Self> {
        let cartan: CartanType = raw.cartan.parse()?;
        CrystalElement::new(cartan, raw.entries.into_iter().map(|(s, t, v)| ((s, t), v)))
    }
}

/// Label of a boxed functional: a plain `j` or a barred `j̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoxedLabel {
    Plain(usize),
    Barred(usize),
}

/// A boxed linear functional `⧉j⧉_s` of the element's family.
///
/// Admissible labels: type A has plain `j ∈ 1..=n+1`; type B has plain and
/// barred `j ∈ 1..=n`; type D has plain `j ∈ 1..=n` and barred `j ∈ 1..=n+1`.
/// Reads outside the index domain (including column 0) evaluate to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxedForm {
    cartan: CartanType,
    label: BoxedLabel,
    shift: usize,
}

impl BoxedForm {
    pub fn new(cartan: CartanType, label: BoxedLabel, shift: usize) -> Result<Self> {
        let n = cartan.rank();
        let ok = match (cartan.family(), label) {
            (Family::A, BoxedLabel::Plain(j)) => (1..=n + 1).contains(&j),
            (Family::A, BoxedLabel::Barred(_)) => false,
            (Family::B, BoxedLabel::Plain(j)) | (Family::B, BoxedLabel::Barred(j)) => {
                (1..=n).contains(&j)
            }
            (Family::D, BoxedLabel::Plain(j)) => (1..=n).contains(&j),
            (Family::D, BoxedLabel::Barred(j)) => (1..=n + 1).contains(&j),
        };
        if !ok || shift == 0 {
            return Err(Error::Parse(format!(
                "invalid boxed form {label:?} with shift {shift} for {cartan}"
            )));
        }
        Ok(BoxedForm {
            cartan,
            label,
            shift,
        })
    }

    /// The terms of the form as `(coefficient, (s, t))` pairs, before any
    /// domain filtering.
    fn terms(&self) -> Vec<(i64, (usize, isize))> {
        let n = self.cartan.rank() as isize;
        let s = self.shift;
        match (self.cartan.family(), self.label) {
            (Family::A, BoxedLabel::Plain(j)) => {
                vec![(1, (s, j as isize)), (-1, (s + 1, j as isize - 1))]
            }
            (Family::A, BoxedLabel::Barred(_)) => unreachable!("validated at construction"),
            (Family::B, BoxedLabel::Plain(j)) => {
                vec![(1, (s, j as isize)), (-1, (s + 1, j as isize - 1))]
            }
            (Family::B, BoxedLabel::Barred(j)) => {
                let row = s + self.cartan.rank() - j + 1;
                vec![(1, (row, j as isize - 1)), (-1, (row, j as isize))]
            }
            (Family::D, BoxedLabel::Plain(j)) if j == self.cartan.rank() - 1 => {
                vec![(1, (s, n - 1)), (1, (s, n)), (-1, (s + 1, n - 2))]
            }
            (Family::D, BoxedLabel::Plain(j)) => {
                vec![(1, (s, j as isize)), (-1, (s + 1, j as isize - 1))]
            }
            (Family::D, BoxedLabel::Barred(j)) if j == self.cartan.rank() + 1 => {
                vec![(1, (s, n))]
            }
            (Family::D, BoxedLabel::Barred(j)) if j == self.cartan.rank() => {
                vec![(1, (s, n - 1)), (-1, (s + 1, n))]
            }
            (Family::D, BoxedLabel::Barred(j)) if j == self.cartan.rank() - 1 => {
                vec![(1, (s + 1, n - 2)), (-1, (s + 1, n - 1)), (-1, (s + 1, n))]
            }
            (Family::D, BoxedLabel::Barred(j)) => {
                let row = s + self.cartan.rank() - j;
                vec![(1, (row, j as isize - 1)), (-1, (row, j as isize))]
            }
        }
    }

    /// Integer value of the form at `b`; out-of-domain reads are zero.
    pub fn eval(&self, b: &CrystalElement) -> i64 {
        assert_eq!(b.cartan(), self.cartan, "cartan types differ");
        self.terms()
            .into_iter()
            .map(
                |(c, (s, t))| {
                    if t >= 1 {
                        c * b.get(s, t as usize)
                    } else {
                        0
                    }
                },
            )
            .sum()
    }

    /// True when at least one term reads an in-domain coordinate.
    pub fn has_support(&self) -> bool {
        self.terms()
            .into_iter()
            .any(|(_, (s, t))| t >= 1 && self.cartan.in_domain(s, t as usize))
    }

    /// All admissible forms with support in the index domain; membership is
    /// nonnegativity of every one of them.
    pub fn all_with_support(cartan: CartanType) -> Vec<BoxedForm> {
        let n = cartan.rank();
        let mut labels = Vec::new();
        match cartan.family() {
            Family::A => labels.extend((1..=n + 1).map(BoxedLabel::Plain)),
            Family::B => {
                labels.extend((1..=n).map(BoxedLabel::Plain));
                labels.extend((1..=n).map(BoxedLabel::Barred));
            }
            Family::D => {
                labels.extend((1..=n).map(BoxedLabel::Plain));
                labels.extend((1..=n + 1).map(BoxedLabel::Barred));
            }
        }
        let max_shift = n + 1;
        let mut forms = Vec::new();
        for label in labels {
            for shift in 1..=max_shift {
                let form = BoxedForm::new(cartan, label, shift).expect("label is admissible");
                if form.has_support() {
                    forms.push(form);
                }
            }
        }
        forms
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CartanType {
        CartanType::a(3).unwrap()
    }

    fn a3_example() -> CrystalElement {
        CrystalElement::from_tuple(a3(), &[2, 4, 0, 5, 1, 3]).unwrap()
    }

    fn d4_example() -> CrystalElement {
        CrystalElement::from_tuple(
            CartanType::d(4).unwrap(),
            &[0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 0],
        )
        .unwrap()
    }

    #[test]
    fn construction() {
        let one = CrystalElement::one(a3());
        assert!(one.is_one());
        assert_eq!(one.to_tuple(), vec![0; 6]);

        let b = a3_example();
        assert_eq!(b.get(1, 1), 3);
        assert_eq!(b.get(2, 2), 4);
        assert_eq!(b.get(1, 3), 5);
        assert_eq!(b.to_tuple(), vec![2, 4, 0, 5, 1, 3]);
        assert_eq!(b.to_string(), "(2,4,0,5,1,3)");

        assert!(CrystalElement::new(a3(), [((1, 4), 1)]).is_err());
        assert!(CrystalElement::new(a3(), [((1, 1), -1)]).is_err());
        // zero out of domain is fine
        assert!(CrystalElement::new(a3(), [((9, 9), 0)]).is_ok());
    }

    #[test]
    fn membership_chains() {
        assert!(a3_example().is_member_chains());
        assert!(CrystalElement::one(a3()).is_member_chains());
        // chain k=3 needs b_{1,3} ≥ b_{2,2}
        let bad = CrystalElement::new(a3(), [((2, 2), 1)]).unwrap();
        assert!(!bad.is_member_chains());

        assert!(d4_example().is_member_chains());
    }

    #[test]
    fn membership_boxed() {
        assert!(a3_example().is_member_boxed());
        assert!(CrystalElement::one(a3()).is_member_boxed());
        let bad = CrystalElement::new(a3(), [((2, 2), 1)]).unwrap();
        assert!(!bad.is_member_boxed());
        assert!(d4_example().is_member_boxed());
    }

    #[test]
    fn boxed_labels_validated() {
        assert!(BoxedForm::new(a3(), BoxedLabel::Barred(1), 1).is_err());
        assert!(BoxedForm::new(a3(), BoxedLabel::Plain(5), 1).is_err());
        assert!(BoxedForm::new(a3(), BoxedLabel::Plain(4), 1).is_ok());
        assert!(BoxedForm::new(a3(), BoxedLabel::Plain(1), 0).is_err());
        let d4 = CartanType::d(4).unwrap();
        assert!(BoxedForm::new(d4, BoxedLabel::Barred(5), 1).is_ok());
        assert!(BoxedForm::new(d4, BoxedLabel::Barred(6), 1).is_err());
        let b2 = CartanType::b(2).unwrap();
        assert!(BoxedForm::new(b2, BoxedLabel::Barred(2), 1).is_ok());
        assert!(BoxedForm::new(b2, BoxedLabel::Barred(3), 1).is_err());
    }

    #[test]
    fn boxed_eval_values() {
        let b = a3_example();
        let f = |j, s| {
            BoxedForm::new(a3(), BoxedLabel::Plain(j), s)
                .unwrap()
                .eval(&b)
        };
        // b_{1,2} - b_{2,1}
        assert_eq!(f(2, 1), 1);
        // single coordinate b_{s,1}
        assert_eq!(f(1, 1), 3);
        assert_eq!(f(1, 3), 2);
        // (1,4) and (2,3) are both outside the domain
        assert_eq!(f(4, 1), 0);
    }

    #[test]
    fn weights() {
        assert_eq!(CrystalElement::one(a3()).weight(), WeightVector::zero(3));
        assert_eq!(a3_example().weight().coeffs(), &[-5, -5, -5]);
        assert_eq!(d4_example().weight().coeffs(), &[-2, -3, -2, -2]);
    }

    #[test]
    fn json_round_trip() {
        let b = a3_example();
        let back = CrystalElement::from_json(&b.to_json()).unwrap();
        assert_eq!(b, back);
        let parsed = CrystalElement::from_json(
            r#"{"cartan":"A3","entries":[[1,3,5],[1,1,3],[2,2,4],[1,2,1],[3,1,2]]}"#,
        )
        .unwrap();
        assert_eq!(parsed, b);
        assert!(CrystalElement::from_json(r#"{"cartan":"A3","entries":[[1,4,1]]}"#).is_err());
    }

    #[test]
    fn tuple_errors() {
        assert!(CrystalElement::from_tuple(a3(), &[1, 2, 3]).is_err());
        assert!(CrystalElement::from_tuple(a3(), &[0, 0, 0, 0, 0, -1]).is_err());
    }
}
