//! The sliding diamond rule: a planar configuration of the coordinates and,
//! for each position, a diamond of neighbours whose ε-weighted sum evaluates
//! `∂_{s,t}` / `∂*_{s,t}` by a second, independent route.
//!
//! Diamond membership is derived from nonzero Cartan pairings, not from the
//! planar geometry; the configuration exists for rendering.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cartan::{CartanType, Family};
use crate::lattice::CrystalElement;

/// Planar placement of the coordinates `b_{s,t}`.
///
/// Types A and B put `b_{s,t}` at `(2s+t-3, t)`; type D does the same for
/// `t ≠ n` and folds `b_{s,n}` onto level `n-2` at `(2s+n-4, n-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    cartan: CartanType,
    placement: BTreeMap<(usize, usize), (i64, i64)>,
}

impl Configuration {
    fn build(cartan: CartanType) -> Configuration {
        let n = cartan.rank();
        let mut placement = BTreeMap::new();
        for (s, t) in cartan.index_domain().iter() {
            let point = if cartan.family() == Family::D && t == n {
                (2 * s as i64 + n as i64 - 4, n as i64 - 2)
            } else {
                (2 * s as i64 + t as i64 - 3, t as i64)
            };
            placement.insert((s, t), point);
        }
        Configuration { cartan, placement }
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn point(&self, s: usize, t: usize) -> Option<(i64, i64)> {
        self.placement.get(&(s, t)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), (i64, i64))> + '_ {
        self.placement.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_injective(&self) -> bool {
        let points: std::collections::BTreeSet<_> = self.placement.values().collect();
        points.len() == self.placement.len()
    }
}

/// Cached configuration per type.
pub fn configuration(cartan: CartanType) -> Arc<Configuration> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<Configuration>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("configuration cache poisoned");
    map.entry(cartan)
        .or_insert_with(|| Arc::new(Configuration::build(cartan)))
        .clone()
}

/// A diamond `◇_{s,t}` or `◇*_{s,t}`: the coordinate positions it contains
/// together with their coefficients `ε_{u,v}` (1 on column `t`, the Cartan
/// pairing `⟨h_t, α_v⟩` elsewhere). Positions outside the index domain are
/// omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diamond {
    center: (usize, usize),
    star: bool,
    members: Vec<((usize, usize), i64)>,
}

impl Diamond {
    pub fn new(cartan: CartanType, s: usize, t: usize, star: bool) -> Diamond {
        assert!(
            cartan.in_domain(s, t),
            "({s},{t}) outside domain of {cartan}"
        );
        let n = cartan.rank();
        let mut members = Vec::new();
        let mut push = |u: Option<usize>, v: usize, coeff: i64| {
            if let Some(u) = u {
                if cartan.in_domain(u, v) {
                    members.push(((u, v), coeff));
                }
            }
        };
        // rows holding the column-t pair and the off-column neighbours
        let (top, bottom) = if star {
            (s.checked_sub(1), Some(s))
        } else {
            (Some(s), Some(s + 1))
        };
        push(top, t, 1);
        push(bottom, t, 1);
        for k in t + 1..=n {
            let c = cartan.pairing(t, k);
            if c != 0 {
                push(top, k, c);
            }
        }
        for k in 1..t {
            let c = cartan.pairing(t, k);
            if c != 0 {
                push(bottom, k, c);
            }
        }
        Diamond {
            center: (s, t),
            star,
            members,
        }
    }

    pub fn center(&self) -> (usize, usize) {
        self.center
    }

    pub fn is_star(&self) -> bool {
        self.star
    }

    pub fn members(&self) -> &[((usize, usize), i64)] {
        &self.members
    }
}

/// The ε-weighted sum over the diamond at `(s,t)`; by contract this equals
/// `partial(b, s, t)` (or `partial_star` when `star` is set), computed
/// through the diamond route.
pub fn diamond_sum(b: &CrystalElement, s: usize, t: usize, star: bool) -> i64 {
    Diamond::new(b.cartan(), s, t, star)
        .members()
        .iter()
        .map(|&((u, v), c)| c * b.get(u, v))
        .sum()
}

/// ASCII rendering of the configuration with the requested diamond's
/// members bracketed.
pub fn render(b: &CrystalElement, s: usize, t: usize, star: bool) -> String {
    let config = configuration(b.cartan());
    let diamond = Diamond::new(b.cartan(), s, t, star);
    let marked: std::collections::BTreeSet<_> =
        diamond.members().iter().map(|&(pos, _)| pos).collect();

    let xs: Vec<i64> = config.iter().map(|(_, (x, _))| x).collect();
    let ys: Vec<i64> = config.iter().map(|(_, (_, y))| y).collect();
    let (xmin, xmax) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (ymin, ymax) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());

    let mut grid: BTreeMap<(i64, i64), String> = BTreeMap::new();
    for ((u, v), (x, y)) in config.iter() {
        let val = b.get(u, v);
        let cell = if marked.contains(&(u, v)) {
            format!("[{val}]")
        } else {
            format!(" {val} ")
        };
        grid.insert((x, y), cell);
    }

    let mut out = String::new();
    for y in (ymin..=ymax).rev() {
        let mut line = String::new();
        for x in xmin..=xmax {
            match grid.get(&(x, y)) {
                Some(cell) => line.push_str(&format!("{cell:^5}")),
                None => line.push_str("     "),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{partial, partial_star};

    fn a3_example() -> CrystalElement {
        CrystalElement::from_tuple(CartanType::a(3).unwrap(), &[2, 4, 0, 5, 1, 3]).unwrap()
    }

    fn d4_example() -> CrystalElement {
        CrystalElement::from_tuple(
            CartanType::d(4).unwrap(),
            &[0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 0],
        )
        .unwrap()
    }

    #[test]
    fn placements() {
        let a3 = configuration(CartanType::a(3).unwrap());
        assert_eq!(a3.point(1, 1), Some((0, 1)));
        assert_eq!(a3.point(2, 2), Some((3, 2)));
        assert_eq!(a3.point(1, 3), Some((2, 3)));

        let d4 = configuration(CartanType::d(4).unwrap());
        assert_eq!(d4.point(1, 4), Some((2, 2)));

        let b2 = configuration(CartanType::b(2).unwrap());
        assert_eq!(b2.point(2, 1), Some((2, 1)));

        for c in [
            CartanType::a(4).unwrap(),
            CartanType::b(3).unwrap(),
            CartanType::d(5).unwrap(),
        ] {
            assert!(configuration(c).is_injective(), "{c}");
        }
    }

    #[test]
    fn diamond_members_a3() {
        let a3 = CartanType::a(3).unwrap();
        let d = Diamond::new(a3, 1, 1, false);
        let mut members = d.members().to_vec();
        members.sort();
        assert_eq!(members, vec![((1, 1), 1), ((1, 2), -1), ((2, 1), 1)]);

        let d = Diamond::new(a3, 2, 2, true);
        let mut members = d.members().to_vec();
        members.sort();
        assert_eq!(
            members,
            vec![((1, 2), 1), ((1, 3), -1), ((2, 1), -1), ((2, 2), 1)]
        );
    }

    #[test]
    fn diamond_members_b() {
        let b3 = CartanType::b(3).unwrap();
        let d = Diamond::new(b3, 1, 3, false);
        // ⟨h_n, α_{n-1}⟩ = -2 lands on (s+1, n-1)
        assert!(d.members().contains(&((2, 2), -2)));
        assert!(d.members().contains(&((1, 3), 1)));
        assert!(d.members().contains(&((2, 3), 1)));
    }

    #[test]
    fn sums_match_forms() {
        let b = a3_example();
        assert_eq!(diamond_sum(&b, 2, 1, false), -2);
        assert_eq!(diamond_sum(&b, 1, 1, false), 2);
        assert_eq!(diamond_sum(&b, 3, 1, false), 2);
        assert_eq!(diamond_sum(&b, 1, 3, true), 4);
        assert_eq!(diamond_sum(&b, 2, 2, true), 0);
        assert_eq!(diamond_sum(&b, 3, 1, true), -2);

        let d = d4_example();
        assert_eq!(diamond_sum(&d, 3, 3, true), 1);
        for (s, t) in d.cartan().index_domain().iter() {
            assert_eq!(diamond_sum(&d, s, t, false), partial(&d, s, t));
            assert_eq!(diamond_sum(&d, s, t, true), partial_star(&d, s, t));
        }

        let one = CrystalElement::one(CartanType::b(3).unwrap());
        for (s, t) in one.cartan().index_domain().iter() {
            assert_eq!(diamond_sum(&one, s, t, false), 0);
            assert_eq!(diamond_sum(&one, s, t, true), 0);
        }
    }

    /// Diamond member multisets agree with the support and coefficients of
    /// the corresponding linear form.
    #[test]
    fn members_match_form_support() {
        for cartan in [
            CartanType::a(3).unwrap(),
            CartanType::b(3).unwrap(),
            CartanType::d(4).unwrap(),
        ] {
            for (s, t) in cartan.index_domain().iter() {
                for star in [false, true] {
                    let diamond = Diamond::new(cartan, s, t, star);
                    let mut got = diamond.members().to_vec();
                    got.sort();
                    let form = crate::tableaux::linear_form_coeffs(cartan, |b| {
                        if star {
                            partial_star(b, s, t)
                        } else {
                            partial(b, s, t)
                        }
                    });
                    assert_eq!(got, form, "{cartan} ({s},{t}) star={star}");
                }
            }
        }
    }

    #[test]
    fn render_marks_members() {
        let b = a3_example();
        let grid = render(&b, 1, 1, false);
        assert!(grid.contains("[3]"));
        assert!(grid.contains("[0]"));
        assert!(grid.contains("[1]"));
        // b_{1,3} = 5 stays unmarked
        assert!(grid.contains('5') && !grid.contains("[5]"));
    }
}
