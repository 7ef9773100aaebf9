//! The registered verification suites.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Check, Checker, Suite};
use crate::cycles::{self, Cycle};
use crate::domino::{enumerate_sdt, is_variable, DominoTableau, SquareClass};
use crate::error::Result;
use crate::group::{factorial, permutation_unrank, permutations, SignedPermutation};
use crate::partition::Partition;
use crate::plactic::{
    applicable_moves, apply_move, left_tableau_fibers, move_sign_law, plactic_class,
};
use crate::rs_maps::{g_infinity, g_r, g_r_inverse, left_tableau};
use crate::sign_laws::{
    corollary_check, g_infinity_law_holds, involution_rhs, rhs_main, type_a_law_holds,
};

pub fn suites() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(MainLaw),
        Box::new(TypeALaw),
        Box::new(GInfinityLaw),
        Box::new(ColorToSpin),
        Box::new(InvolutionLaw),
        Box::new(Bijection),
        Box::new(CycleStructure),
        Box::new(RankRelation),
        Box::new(PlacticMoves),
        Box::new(PlacticClasses),
        Box::new(Mobius),
    ]
}

/// A checker over `H_n` in rank order.
struct OverGroup<F> {
    n: usize,
    check: F,
}

impl<F: Fn(&SignedPermutation) -> Check + Sync> Checker for OverGroup<F> {
    fn len(&self) -> u64 {
        SignedPermutation::group_order(self.n)
    }

    fn describe(&self, index: u64) -> String {
        self.element(index).to_string()
    }

    fn check(&self, index: u64) -> Check {
        (self.check)(&self.element(index))
    }
}

impl<F> OverGroup<F> {
    fn element(&self, index: u64) -> SignedPermutation {
        SignedPermutation::unrank(self.n, index).expect("index in range")
    }
}

fn over_group<F>(n: usize, check: F) -> Box<dyn Checker>
where
    F: Fn(&SignedPermutation) -> Check + Sync + 'static,
{
    Box::new(OverGroup { n, check })
}

/// A checker over a precomputed list.
struct OverList<T, F> {
    items: Vec<T>,
    describe: fn(&T) -> String,
    check: F,
}

impl<T: Sync, F: Fn(&T) -> Check + Sync> Checker for OverList<T, F> {
    fn len(&self) -> u64 {
        self.items.len() as u64
    }

    fn describe(&self, index: u64) -> String {
        (self.describe)(&self.items[index as usize])
    }

    fn check(&self, index: u64) -> Check {
        (self.check)(&self.items[index as usize])
    }
}

fn tableau_json(t: &DominoTableau) -> String {
    serde_json::to_string(t).expect("tableau serializes")
}

struct MainLaw;

impl Suite for MainLaw {
    fn name(&self) -> &'static str {
        "main"
    }

    fn description(&self) -> &'static str {
        "sign(w) = (-1)^d (-1)^(spin P + spin Q) sign(P) sign(Q) under G_r"
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        Ok(over_group(n, move |w| {
            let mut c = Check::default();
            let rhs = rhs_main(w, r);
            c.expect(w.sign() == rhs.value, || {
                format!(
                    "sign {} but formula gives {} ({rhs:?})",
                    w.sign(),
                    rhs.value
                )
            });
            let (p, q) = g_r(w, r);
            c.expect(p.d_statistic() == q.d_statistic(), || "d(P) != d(Q)".into());
            c
        }))
    }
}

struct TypeALaw;

impl Suite for TypeALaw {
    fn name(&self) -> &'static str {
        "typeA"
    }

    fn description(&self) -> &'static str {
        "sign(w) = (-1)^e sign(P) sign(Q) under RS on S_n"
    }

    fn ranked(&self) -> bool {
        false
    }

    fn default_max_n(&self) -> usize {
        6
    }

    fn prepare(&self, n: usize, _: usize) -> Result<Box<dyn Checker>> {
        struct Perms(usize);
        impl Checker for Perms {
            fn len(&self) -> u64 {
                factorial(self.0)
            }
            fn describe(&self, index: u64) -> String {
                let p = permutation_unrank(self.0, index);
                p.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
            fn check(&self, index: u64) -> Check {
                let p = permutation_unrank(self.0, index);
                if type_a_law_holds(&p) {
                    Check::pass(1)
                } else {
                    Check::fail(1, "type A sign law fails")
                }
            }
        }
        Ok(Box::new(Perms(n)))
    }
}

struct GInfinityLaw;

impl Suite for GInfinityLaw {
    fn name(&self) -> &'static str {
        "ginf"
    }

    fn description(&self) -> &'static str {
        "sign(w) = (-1)^e (-1)^(spin P + spin Q) sign(P) sign(Q) under G_inf"
    }

    fn ranked(&self) -> bool {
        false
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, _: usize) -> Result<Box<dyn Checker>> {
        Ok(over_group(n, |w| {
            let mut c = Check::default();
            c.expect(g_infinity_law_holds(w), || "G_inf sign law fails".into());
            let (p, q) = g_infinity(w);
            c.expect(
                p.twice_spin() + q.twice_spin() == 2 * w.total_color(),
                || "spin(P) + spin(Q) != tc(w)".into(),
            );
            c
        }))
    }
}

struct ColorToSpin;

impl Suite for ColorToSpin {
    fn name(&self) -> &'static str {
        "tc"
    }

    fn description(&self) -> &'static str {
        "2 tc(w) = 2 spin(P) + 2 spin(Q), the same at every rank"
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        Ok(over_group(n, move |w| {
            let mut c = Check::default();
            let spin_sum = |r| {
                let (p, q) = g_r(w, r);
                p.vertical_count() + q.vertical_count()
            };
            let here = spin_sum(r);
            c.expect(here == 2 * w.total_color(), || {
                format!("twice spin sum {here} but tc = {}", w.total_color())
            });
            let next = spin_sum(r + 1);
            c.expect(here == next, || {
                format!("spin sum {here} at rank {r}, {next} at rank {}", r + 1)
            });
            c
        }))
    }
}

struct InvolutionLaw;

impl Suite for InvolutionLaw {
    fn name(&self) -> &'static str {
        "involution"
    }

    fn description(&self) -> &'static str {
        "G_r(i) = (P, P) and sign(i) = (-1)^d (-1)^(2 spin P) for involutions i"
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        let items: Vec<SignedPermutation> = SignedPermutation::enumerate(n)
            .filter(|w| w.is_involution())
            .collect();
        Ok(Box::new(OverList {
            items,
            describe: |w: &SignedPermutation| w.to_string(),
            check: move |i: &SignedPermutation| {
                let mut c = Check::default();
                match involution_rhs(i, r) {
                    Ok(v) => {
                        c.expect(v == i.sign(), || {
                            format!("sign {} but lemma gives {v}", i.sign())
                        });
                        c.expect(rhs_main(i, r).value == v, || {
                            "lemma and main formula disagree".into()
                        });
                    }
                    Err(e) => c.expect(false, || e.to_string()),
                }
                c
            },
        }))
    }
}

struct Bijection;

impl Suite for Bijection {
    fn name(&self) -> &'static str {
        "bijection"
    }

    fn description(&self) -> &'static str {
        "G_r^-1 . G_r = id on H_n and the sum over shapes of |SDT_r(shape)|^2 is 2^n n!"
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        struct RoundTrip {
            n: usize,
            r: usize,
        }
        impl Checker for RoundTrip {
            fn len(&self) -> u64 {
                SignedPermutation::group_order(self.n)
            }
            fn describe(&self, index: u64) -> String {
                SignedPermutation::unrank(self.n, index)
                    .expect("in range")
                    .to_string()
            }
            fn check(&self, index: u64) -> Check {
                let w = SignedPermutation::unrank(self.n, index).expect("in range");
                let (p, q) = g_r(&w, self.r);
                let mut c = Check::default();
                c.expect(p.validate().is_ok() && q.validate().is_ok(), || {
                    "invalid tableau".into()
                });
                c.expect(p.shape() == q.shape(), || "shapes differ".into());
                let back = g_r_inverse(&p, &q, self.r);
                c.expect(back.as_ref() == Ok(&w), || {
                    format!("inverse gives {back:?}")
                });
                c
            }
            fn global(&self) -> Check {
                let mut by_shape: BTreeMap<Partition, u64> = BTreeMap::new();
                for t in enumerate_sdt(self.r, self.n) {
                    *by_shape.entry(t.shape()).or_default() += 1;
                }
                let total: u64 = by_shape.values().map(|c| c * c).sum();
                let order = SignedPermutation::group_order(self.n);
                let mut c = Check::default();
                c.expect(total == order, || {
                    format!("sum of squares {total}, group order {order}")
                });
                c
            }
        }
        Ok(Box::new(RoundTrip { n, r }))
    }
}

fn sdt_list<F>(n: usize, r: usize, check: F) -> Box<dyn Checker>
where
    F: Fn(&DominoTableau) -> Check + Sync + 'static,
{
    Box::new(OverList {
        items: enumerate_sdt(r, n),
        describe: tableau_json,
        check,
    })
}

struct CycleStructure;

impl Suite for CycleStructure {
    fn name(&self) -> &'static str {
        "cycles"
    }

    fn description(&self) -> &'static str {
        "cycles partition the labels; moving through keeps fixed-square labels and trades variable squares"
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        Ok(sdt_list(n, r, move |t| {
            let mut c = Check::default();
            let all = match cycles::cycles(t) {
                Ok(all) => all,
                Err(e) => return Check::fail(1, e.to_string()),
            };
            let mut seen = BTreeSet::new();
            let disjoint = all.iter().flat_map(|c| c.labels()).all(|l| seen.insert(*l));
            c.expect(disjoint && seen.len() == t.len(), || {
                "cycles do not partition the labels".into()
            });
            for cy in &all {
                let moved = match cycles::move_through(t, cy) {
                    Ok(m) => m,
                    Err(e) => return Check::fail(c.checks + 1, e.to_string()),
                };
                c.expect(moved.validate().is_ok(), || {
                    format!("MT through {:?} is not a tableau", cy.labels())
                });
                for &l in cy.labels() {
                    let d = t.domino(l).expect("label present");
                    let fixed = d.cells().into_iter().find(|&s| !is_variable(s, r));
                    c.expect(fixed.is_some_and(|f| moved.label_of(f) == Some(l)), || {
                        format!("label {l} leaves its fixed square")
                    });
                }
                if cy.is_open() {
                    let squares = [cy.begin_square(), cy.final_square()];
                    c.expect(
                        squares.iter().all(|s| s.is_some_and(|s| is_variable(s, r))),
                        || format!("boundary squares of {:?} are not variable", cy.labels()),
                    );
                    c.expect(
                        moved.shape() != t.shape() || moved.zero_region() != t.zero_region(),
                        || "open cycle preserved the shape".into(),
                    );
                } else {
                    c.expect(moved.shape() == t.shape(), || {
                        "closed cycle changed the shape".into()
                    });
                }
            }
            c
        }))
    }
}

struct RankRelation;

impl Suite for RankRelation {
    fn name(&self) -> &'static str {
        "relation"
    }

    fn description(&self) -> &'static str {
        "t_{r,r+1}(T) = MT(T, Delta(T)) in every order; d and spin preserved"
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        Ok(sdt_list(n, r, move |t| relation_check(t, r)))
    }
}

fn same_type(c: &Cycle, r: usize) -> bool {
    match (c.begin_square(), c.final_square()) {
        (Some(b), Some(f)) => {
            let even = |s: crate::cell::Cell| s.row.is_multiple_of(2) && s.col.is_multiple_of(2);
            SquareClass::of(b, r).kind == SquareClass::of(f, r).kind && even(b) == even(f)
        }
        _ => false,
    }
}

fn relation_check(t: &DominoTableau, r: usize) -> Check {
    let mut c = Check::default();
    let shifted = match cycles::rank_shift(t, r + 1) {
        Ok(s) => s,
        Err(e) => return Check::fail(1, e.to_string()),
    };
    let delta = match cycles::delta(t) {
        Ok(d) => d,
        Err(e) => return Check::fail(1, e.to_string()),
    };
    c.expect(delta.len() == r + 1, || {
        format!("|Delta| = {}", delta.len())
    });
    for cy in &delta {
        c.expect(cy.is_open() && same_type(cy, r), || {
            format!(
                "cycle {:?} has boundary squares of different types",
                cy.labels()
            )
        });
    }
    for order in permutations(delta.len()) {
        let arranged: Vec<Cycle> = order
            .iter()
            .map(|&i| delta[i as usize - 1].clone())
            .collect();
        let moved = cycles::move_through_set(t, &arranged);
        c.expect(moved.as_ref() == Ok(&shifted), || match &moved {
            Ok(m) => format!("MT in order {order:?} gives {}", tableau_json(m)),
            Err(e) => format!("MT in order {order:?} fails: {e}"),
        });
    }
    c.expect(
        *shifted.zero_region() == Partition::staircase(r + 1),
        || "shifted core is not canonical".into(),
    );
    c.expect(shifted.d_statistic() == t.d_statistic(), || {
        "d changes under the shift".into()
    });
    c.expect(shifted.vertical_count() == t.vertical_count(), || {
        "spin changes under the shift".into()
    });
    c
}

struct PlacticMoves;

impl Suite for PlacticMoves {
    fn name(&self) -> &'static str {
        "plactic"
    }

    fn description(&self) -> &'static str {
        "every D_i^r move keeps the left tableau and scales sign(w) and the formula by its sign factor"
    }

    fn default_max_n(&self) -> usize {
        6
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        Ok(over_group(n, move |w| {
            let mut c = Check::default();
            let lt = left_tableau(w, r);
            let f = rhs_main(w, r).value;
            for m in applicable_moves(w, r) {
                let v = match apply_move(w, &m) {
                    Ok(v) => v,
                    Err(e) => return Check::fail(c.checks + 1, e.to_string()),
                };
                let factor = move_sign_law(&m);
                c.expect(left_tableau(&v, r) == lt, || {
                    format!("D{} to {v} changes the left tableau", m.operator)
                });
                c.expect(v.sign() == factor * w.sign(), || {
                    format!("D{} to {v}: sign factor", m.operator)
                });
                c.expect(rhs_main(&v, r).value == factor * f, || {
                    format!("D{} to {v}: formula factor", m.operator)
                });
                let undo = applicable_moves(&v, r)
                    .iter()
                    .any(|m2| m2.operator == m.operator && apply_move(&v, m2).as_ref() == Ok(w));
                c.expect(undo, || format!("D{} to {v} cannot be undone", m.operator));
            }
            c
        }))
    }
}

struct PlacticClasses;

impl Suite for PlacticClasses {
    fn name(&self) -> &'static str {
        "classes"
    }

    fn description(&self) -> &'static str {
        "plactic classes coincide with the fibers of the G_r left tableau"
    }

    fn default_max_n(&self) -> usize {
        5
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        Ok(Box::new(OverList {
            items: left_tableau_fibers(n, r),
            describe: |f: &BTreeSet<SignedPermutation>| {
                f.first().map(|w| w.to_string()).unwrap_or_default()
            },
            check: move |fiber: &BTreeSet<SignedPermutation>| {
                let w = fiber.first().expect("fibers are nonempty");
                let class = plactic_class(w, r);
                if &class == fiber {
                    Check::pass(1)
                } else {
                    Check::fail(
                        1,
                        format!("class has {} elements, fiber {}", class.len(), fiber.len()),
                    )
                }
            },
        }))
    }
}

struct Mobius;

struct MobiusChecker {
    n: usize,
    r: usize,
    images: Vec<(DominoTableau, DominoTableau)>,
    by_left: HashMap<DominoTableau, Vec<u64>>,
    by_right: HashMap<DominoTableau, Vec<u64>>,
}

impl Checker for MobiusChecker {
    fn len(&self) -> u64 {
        self.images.len() as u64
    }

    fn describe(&self, index: u64) -> String {
        SignedPermutation::unrank(self.n, index)
            .expect("in range")
            .to_string()
    }

    fn check(&self, index: u64) -> Check {
        let el = |i: u64| SignedPermutation::unrank(self.n, i).expect("in range");
        let x = el(index);
        let (px, qx) = &self.images[index as usize];
        let mut c = Check::default();
        for &yi in &self.by_left[px] {
            let y = el(yi);
            let qy = &self.images[yi as usize].1;
            for &x2i in &self.by_right[qx] {
                let x2 = el(x2i);
                let px2 = &self.images[x2i as usize].0;
                let y2 = match g_r_inverse(px2, qy, self.r) {
                    Ok(y2) => y2,
                    Err(e) => return Check::fail(c.checks + 1, e.to_string()),
                };
                let ok = corollary_check(&x, &y, &x2, &y2, self.r);
                c.expect(ok == Ok(true), || {
                    format!("y = {y}, x' = {x2}, y' = {y2}: {ok:?}")
                });
            }
        }
        c
    }
}

impl Suite for Mobius {
    fn name(&self) -> &'static str {
        "mobius"
    }

    fn description(&self) -> &'static str {
        "mu(x, y) and mu(x', y') have equal parity for tableau-matched quadruples"
    }

    fn default_max_n(&self) -> usize {
        4
    }

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>> {
        let images: Vec<_> = SignedPermutation::enumerate(n)
            .map(|w| g_r(&w, r))
            .collect();
        let mut by_left: HashMap<DominoTableau, Vec<u64>> = HashMap::new();
        let mut by_right: HashMap<DominoTableau, Vec<u64>> = HashMap::new();
        for (i, (p, q)) in images.iter().enumerate() {
            by_left.entry(p.clone()).or_default().push(i as u64);
            by_right.entry(q.clone()).or_default().push(i as u64);
        }
        Ok(Box::new(MobiusChecker {
            n,
            r,
            images,
            by_left,
            by_right,
        }))
    }
}
