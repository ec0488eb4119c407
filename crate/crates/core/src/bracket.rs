//! Kauffman bracket and the Jones polynomial.
//!
//! At `X(a,b,c,d)` the A-smoothing joins `a–b` and `c–d`, the B-smoothing
//! joins `a–d` and `b–c`. `⟨unknot⟩ = 1` and every further loop contributes
//! `δ = -A² - A⁻²`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagram::{Crossing, PlanarDiagram};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A Laurent polynomial in the bracket variable `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketPoly(pub LaurentPoly);

impl BracketPoly {
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }
}

impl std::fmt::Display for BracketPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0.display_in("A"))
    }
}

fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

fn smoothing(x: &Crossing, a_smoothing: bool) -> [(u32, u32); 2] {
    let [a, b, c, d] = *x;
    if a_smoothing {
        [(a, b), (c, d)]
    } else {
        [(a, d), (b, c)]
    }
}

fn find(parent: &mut [u32], x: u32) -> u32 {
    let mut r = x;
    while parent[r as usize] != r {
        r = parent[r as usize];
    }
    let mut y = x;
    while parent[y as usize] != r {
        let next = parent[y as usize];
        parent[y as usize] = r;
        y = next;
    }
    r
}

/// Full state sum over all `2^n` smoothings.
pub fn bracket_oracle(d: &PlanarDiagram) -> BracketPoly {
    let crossings = d.crossings();
    let n = crossings.len();
    if n == 0 {
        return BracketPoly(LaurentPoly::one());
    }
    assert!(n < 63, "state sum over {n} crossings is out of reach");
    let labels = 2 * n as u32;
    // (A-exponent, loops) -> number of states
    let mut tally: HashMap<(i64, u32), u64> = HashMap::new();
    let mut parent: Vec<u32> = Vec::with_capacity(labels as usize + 1);
    for state in 0u64..(1u64 << n) {
        parent.clear();
        parent.extend(0..=labels);
        let mut loops = labels;
        for (i, x) in crossings.iter().enumerate() {
            for (p, q) in smoothing(x, state >> i & 1 == 0) {
                let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                if rp != rq {
                    parent[rp as usize] = rq;
                    loops -= 1;
                }
            }
        }
        let a_count = n as i64 - i64::from(state.count_ones());
        let exp = a_count - (n as i64 - a_count);
        *tally.entry((exp, loops)).or_default() += 1;
    }
    let delta = delta();
    let max_loops = tally.keys().map(|&(_, l)| l).max().unwrap_or(1);
    let delta_pows: Vec<LaurentPoly> = std::iter::successors(Some(LaurentPoly::one()), |p| Some(p * &delta))
        .take(max_loops as usize)
        .collect();
    let mut out = LaurentPoly::zero();
    for ((exp, loops), count) in tally {
        out += &delta_pows[loops as usize - 1].shift(exp).scale(&BigInt::from(count));
    }
    BracketPoly(out)
}

/// Greedy processing order: next is the crossing with the most arcs already
/// open on the boundary, ties broken by index.
pub fn greedy_order(crossings: &[Crossing]) -> Vec<usize> {
    let n = crossings.len();
    let mut open = vec![false; 2 * n + 1];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let shared = crossings[i].iter().filter(|&&l| open[l as usize]).count();
                (shared, std::cmp::Reverse(i))
            })
            .expect("crossing left");
        done[best] = true;
        order.push(best);
        for &l in &crossings[best] {
            open[l as usize] = !open[l as usize];
        }
    }
    order
}

/// Boundary state: pairing of open arc ends, plus whether a loop has
/// already closed (the first closed loop carries no factor of `δ`).
#[derive(Clone, PartialEq, Eq, Hash)]
struct BoundaryState {
    pairs: Vec<(u32, u32)>,
    closed_any: bool,
}

impl BoundaryState {
    fn partner(&self, label: u32) -> Option<(usize, u32)> {
        self.pairs.iter().enumerate().find_map(|(i, &(x, y))| {
            if x == label {
                Some((i, y))
            } else if y == label {
                Some((i, x))
            } else {
                None
            }
        })
    }

    /// Joins the arc ends `p` and `q`; returns true if that closes a loop.
    fn connect(&mut self, p: u32, q: u32) -> bool {
        if p == q {
            return true;
        }
        let pp = self.partner(p);
        if let Some((i, other)) = pp {
            if other == q {
                self.pairs.swap_remove(i);
                return true;
            }
        }
        let end1 = match pp {
            Some((i, other)) => {
                self.pairs.swap_remove(i);
                other
            }
            None => p,
        };
        let end2 = match self.partner(q) {
            Some((i, other)) => {
                self.pairs.swap_remove(i);
                other
            }
            None => q,
        };
        self.pairs.push((end1.min(end2), end1.max(end2)));
        false
    }

    fn normalize(&mut self) {
        self.pairs.sort_unstable();
    }
}

/// Bracket by sweeping crossings in greedy order.
pub fn bracket_fast(d: &PlanarDiagram) -> BracketPoly {
    bracket_with_order(d, &greedy_order(d.crossings()))
}

/// Bracket by sweeping crossings in the given order (a permutation of the
/// crossing indices). The order changes only the cost.
pub fn bracket_with_order(d: &PlanarDiagram, order: &[usize]) -> BracketPoly {
    let crossings = d.crossings();
    if crossings.is_empty() {
        return BracketPoly(LaurentPoly::one());
    }
    assert_eq!(order.len(), crossings.len(), "order must cover every crossing");
    let delta = delta();
    let mut states: HashMap<BoundaryState, LaurentPoly> = HashMap::new();
    states.insert(BoundaryState { pairs: Vec::new(), closed_any: false }, LaurentPoly::one());
    for &i in order {
        let x = &crossings[i];
        let mut next: HashMap<BoundaryState, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (state, coef) in &states {
            for (a_smoothing, shift) in [(true, 1), (false, -1)] {
                let mut s = state.clone();
                let mut extra_loops = 0u32;
                for (p, q) in smoothing(x, a_smoothing) {
                    if s.connect(p, q) {
                        if s.closed_any {
                            extra_loops += 1;
                        } else {
                            s.closed_any = true;
                        }
                    }
                }
                s.normalize();
                let mut term = coef.shift(shift);
                for _ in 0..extra_loops {
                    term = &term * &delta;
                }
                next.entry(s).and_modify(|acc| *acc += &term).or_insert(term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let mut out = LaurentPoly::zero();
    for (state, coef) in states {
        debug_assert!(state.pairs.is_empty() && state.closed_any);
        out += &coef;
    }
    BracketPoly(out)
}

/// Writhe-normalizes a bracket and substitutes `t = A⁻⁴`.
pub fn jones_from_bracket(bracket: &BracketPoly, writhe: i64) -> Result<LaurentPoly> {
    // (-A³)^{-w}
    let sign = if writhe.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
    let normalized = bracket.0.shift(-3 * writhe).scale(&sign);
    let compressed = normalized.compress_exponents(4).ok_or_else(|| {
        Error::InvariantViolation(format!(
            "normalized bracket {} has exponents not divisible by 4",
            normalized.display_in("A")
        ))
    })?;
    Ok(compressed.invert_variable())
}

/// Jones polynomial of a valid knot diagram; `jones(unknot) = 1`.
pub fn jones(d: &PlanarDiagram) -> Result<LaurentPoly> {
    jones_from_bracket(&bracket_fast(d), d.writhe())
}

pub fn jones_oracle(d: &PlanarDiagram) -> Result<LaurentPoly> {
    jones_from_bracket(&bracket_oracle(d), d.writhe())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, BraidWord};
    use proptest::prelude::*;

    fn braid(k: u32, w: &[i32]) -> PlanarDiagram {
        BraidWord::new(k, w.to_vec()).unwrap().to_pd().unwrap()
    }

    fn printed_trefoil() -> LaurentPoly {
        "-t^-4+t^-3+t^-1".parse().unwrap()
    }

    fn printed_figure_eight() -> LaurentPoly {
        "t^-2-t^-1+1-t+t^2".parse().unwrap()
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(bracket_oracle(&PlanarDiagram::unknot()).0, LaurentPoly::one());
        assert_eq!(bracket_fast(&PlanarDiagram::unknot()).0, LaurentPoly::one());
        assert_eq!(jones(&PlanarDiagram::unknot()).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&braid(2, &[1])).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&braid(2, &[-1])).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn trefoil_matches_printed_polynomial() {
        let d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)").unwrap();
        // 8 states: A^7 - A^3 - A^-5 for the negative trefoil
        assert_eq!(bracket_oracle(&d).0, "A^7-A^3-A^-5".parse_poly_a());
        assert_eq!(bracket_fast(&d), bracket_oracle(&d));
        assert_eq!(jones(&d).unwrap(), printed_trefoil());
        assert_eq!(jones(&braid(2, &[-1, -1, -1])).unwrap(), printed_trefoil());
        assert_eq!(jones(&braid(2, &[1, 1, 1])).unwrap(), printed_trefoil().invert_variable());
    }

    #[test]
    fn figure_eight_matches_printed_polynomial() {
        let d = parse_pd("X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)").unwrap();
        assert_eq!(bracket_fast(&d), bracket_oracle(&d));
        assert_eq!(jones(&d).unwrap(), printed_figure_eight());
        assert_eq!(jones(&braid(3, &[1, -2, 1, -2])).unwrap(), printed_figure_eight());
        assert_eq!(jones(&d.mirror()).unwrap(), printed_figure_eight());
    }

    #[test]
    fn reidemeister_moves() {
        let base = jones(&braid(2, &[1, 1, 1])).unwrap();
        // R1 via stabilization, R2 by a cancelling pair, R3 by the braid relation
        assert_eq!(jones(&braid(3, &[1, 1, 1, 2])).unwrap(), base);
        assert_eq!(jones(&braid(3, &[1, 1, 1, -2])).unwrap(), base);
        assert_eq!(jones(&braid(3, &[1, 2, -2, 1, 1, 2])).unwrap(), base);
        let r3a = jones(&braid(3, &[1, 2, 1, 2])).unwrap();
        let r3b = jones(&braid(3, &[2, 1, 2, 2])).unwrap();
        assert_eq!(r3a, r3b);
        // conjugation
        assert_eq!(
            jones(&braid(3, &[1, -2, 1, -2])).unwrap(),
            jones(&braid(3, &[-2, 1, -2, 1])).unwrap()
        );
    }

    #[test]
    fn order_does_not_change_bracket() {
        let d = braid(4, &[1, -2, 3, -2, 1, 3, -1]);
        let expected = bracket_oracle(&d);
        let n = d.crossing_count();
        let forward: Vec<usize> = (0..n).collect();
        let backward: Vec<usize> = (0..n).rev().collect();
        let interleaved: Vec<usize> = (0..n).step_by(2).chain((1..n).step_by(2)).collect();
        for order in [forward, backward, interleaved] {
            assert_eq!(bracket_with_order(&d, &order), expected);
        }
    }

    #[test]
    fn bad_writhe_is_detected() {
        let d = braid(2, &[1, 1, 1]);
        assert!(matches!(
            jones_from_bracket(&bracket_fast(&d), d.writhe() + 1),
            Err(Error::InvariantViolation(_))
        ));
    }

    trait ParseA {
        fn parse_poly_a(&self) -> LaurentPoly;
    }

    impl ParseA for str {
        fn parse_poly_a(&self) -> LaurentPoly {
            LaurentPoly::parse_in(self, 'A').unwrap()
        }
    }

    fn knotted_braid() -> impl Strategy<Value = BraidWord> {
        (2u32..5)
            .prop_flat_map(|k| {
                let letter = (1..k as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
                (Just(k), prop::collection::vec(letter, 1..10))
            })
            .prop_filter_map("knot closures only", |(k, w)| {
                let b = BraidWord::new(k, w).ok()?;
                (b.closure_components() == 1).then_some(b)
            })
    }

    proptest! {
        #[test]
        fn fast_matches_oracle(b in knotted_braid()) {
            let d = b.to_pd().unwrap();
            prop_assert_eq!(bracket_fast(&d), bracket_oracle(&d));
        }

        #[test]
        fn mirror_inverts_variable(b in knotted_braid()) {
            let d = b.to_pd().unwrap();
            let j = jones(&d).unwrap();
            prop_assert_eq!(jones(&d.mirror()).unwrap(), j.invert_variable());
            prop_assert_eq!(j.eval_int(1).unwrap(), crate::exactnum::int(1));
        }
    }
}
