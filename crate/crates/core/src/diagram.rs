//! Planar diagrams of knots.
//!
//! A crossing is written `X(a,b,c,d)`: the under-strand enters at `a` and
//! leaves at `c`, and the labels are listed counterclockwise. Arc labels run
//! `1..=2n` and increase along the orientation of the knot, wrapping from `2n`
//! back to `1`. The over-strand runs either `b -> d` (a negative crossing) or
//! `d -> b` (a positive crossing).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Crossing = [u32; 4];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    signs: Vec<i8>,
}

/// One reason a diagram is not a valid oriented knot diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    LabelOutOfRange { crossing: usize, label: u32 },
    Multiplicity { label: u32, count: usize },
    OrientationConflict { label: u32 },
    ComponentCount(usize),
    LabelOrder { crossing: usize },
    SignMismatch { crossing: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LabelOutOfRange { crossing, label } => {
                write!(f, "crossing {crossing}: label {label} out of range")
            }
            Violation::Multiplicity { label, count } => {
                write!(f, "label {label} appears {count} times (expected 2)")
            }
            Violation::OrientationConflict { label } => {
                write!(f, "no consistent orientation through label {label}")
            }
            Violation::ComponentCount(n) => write!(f, "{n} components (expected 1)"),
            Violation::LabelOrder { crossing } => {
                write!(f, "crossing {crossing}: labels do not increase along the strand")
            }
            Violation::SignMismatch { crossing } => {
                write!(f, "crossing {crossing}: stored sign disagrees with orientation")
            }
        }
    }
}

/// Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramReport {
    pub violations: Vec<Violation>,
}

impl DiagramReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn into_result(self) -> Result<()> {
        if let Some(n) = self.violations.iter().find_map(|v| match v {
            Violation::ComponentCount(n) => Some(*n),
            _ => None,
        }) {
            return Err(Error::LinksUnsupported(n));
        }
        match self.violations.first() {
            None => Ok(()),
            Some(_) => Err(Error::InvalidDiagram(
                self.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            )),
        }
    }
}

/// Result of orienting a crossing list: for each crossing whether the
/// over-strand runs `b -> d`.
struct Oriented {
    over_b_to_d: Vec<bool>,
    components: usize,
    label_order_ok: Vec<bool>,
}

/// Parity union-find over crossing variables plus one "true" node.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), parity: vec![false; n] }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }

    /// Records `value(x) xor value(y) == rel`; false on contradiction.
    fn relate(&mut self, x: usize, y: usize, rel: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px ^ py == rel;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ rel;
        true
    }
}

fn check_labels(crossings: &[Crossing], report: &mut DiagramReport) {
    let n2 = 2 * crossings.len() as u32;
    let mut counts = vec![0usize; n2 as usize + 1];
    for (i, x) in crossings.iter().enumerate() {
        for &label in x {
            if label == 0 || label > n2 {
                report.violations.push(Violation::LabelOutOfRange { crossing: i, label });
            } else {
                counts[label as usize] += 1;
            }
        }
    }
    for (label, &count) in counts.iter().enumerate().skip(1) {
        if count != 2 {
            report.violations.push(Violation::Multiplicity { label: label as u32, count });
        }
    }
}

/// Orients every crossing. Assumes each label in `1..=2n` occurs exactly twice.
fn orient(crossings: &[Crossing]) -> std::result::Result<Oriented, Violation> {
    let n = crossings.len();
    let n2 = 2 * n;
    let truth = n;
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n2 + 1];
    for (i, x) in crossings.iter().enumerate() {
        for (pos, &label) in x.iter().enumerate() {
            occurrences[label as usize].push((i, pos));
        }
    }
    // "incoming" for an occurrence, as (variable, negation): value = var ^ neg.
    let literal = |(i, pos): (usize, usize)| match pos {
        0 => (truth, false),
        2 => (truth, true),
        1 => (i, false),
        _ => (i, true),
    };
    let mut dsu = ParityDsu::new(n + 1);
    for (label, occ) in occurrences.iter().enumerate().skip(1) {
        let (v1, n1) = literal(occ[0]);
        let (v2, n2) = literal(occ[1]);
        // exactly one end of every arc is incoming
        if !dsu.relate(v1, v2, !(n1 ^ n2)) {
            return Err(Violation::OrientationConflict { label: label as u32 });
        }
    }
    let (truth_root, truth_parity) = dsu.find(truth);
    let over_b_to_d: Vec<bool> = (0..n)
        .map(|i| {
            let (root, parity) = dsu.find(i);
            if root == truth_root {
                // value(truth) is true
                parity ^ truth_parity ^ true
            } else {
                // unconstrained: only possible for components made solely of over-arcs
                parity
            }
        })
        .collect();

    // successor of each arc along the orientation
    let mut next = vec![0u32; n2 + 1];
    let mut label_order_ok = Vec::with_capacity(n);
    let succ = |l: u32| l % n2 as u32 + 1;
    for (i, &[a, b, c, d]) in crossings.iter().enumerate() {
        let (over_in, over_out) = if over_b_to_d[i] { (b, d) } else { (d, b) };
        next[a as usize] = c;
        next[over_in as usize] = over_out;
        label_order_ok.push(c == succ(a) && over_out == succ(over_in));
    }
    let mut seen = vec![false; n2 + 1];
    let mut components = 0;
    for start in 1..=n2 {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut l = start;
        while !seen[l] {
            seen[l] = true;
            l = next[l] as usize;
        }
    }
    Ok(Oriented { over_b_to_d, components, label_order_ok })
}

fn sign_of(over_b_to_d: bool) -> i8 {
    if over_b_to_d {
        -1
    } else {
        1
    }
}

/// Checks a bare crossing list against every diagram invariant.
pub fn validate_crossings(crossings: &[Crossing]) -> DiagramReport {
    validate_with_signs(crossings, None)
}

fn validate_with_signs(crossings: &[Crossing], signs: Option<&[i8]>) -> DiagramReport {
    let mut report = DiagramReport::default();
    check_labels(crossings, &mut report);
    if !report.is_valid() || crossings.is_empty() {
        return report;
    }
    match orient(crossings) {
        Err(v) => report.violations.push(v),
        Ok(o) => {
            if o.components != 1 {
                report.violations.push(Violation::ComponentCount(o.components));
            }
            for (i, ok) in o.label_order_ok.iter().enumerate() {
                if !ok {
                    report.violations.push(Violation::LabelOrder { crossing: i });
                }
            }
            if let Some(signs) = signs {
                for (i, &b2d) in o.over_b_to_d.iter().enumerate() {
                    if signs.get(i) != Some(&sign_of(b2d)) {
                        report.violations.push(Violation::SignMismatch { crossing: i });
                    }
                }
            }
        }
    }
    report.violations.sort();
    report
}

impl PlanarDiagram {
    /// The crossingless unknot diagram.
    pub fn unknot() -> Self {
        Self { crossings: Vec::new(), signs: Vec::new() }
    }

    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self> {
        if crossings.is_empty() {
            return Err(Error::InvalidDiagram("empty diagram (use \"U\" for the unknot)".into()));
        }
        validate_crossings(&crossings).into_result()?;
        let o = orient(&crossings).expect("validated");
        let signs = o.over_b_to_d.into_iter().map(sign_of).collect();
        Ok(Self { crossings, signs })
    }

    /// Stores crossings and signs as given, without checking them. Meant for
    /// inspecting damaged data with [`PlanarDiagram::validate`].
    pub fn from_parts_unchecked(crossings: Vec<Crossing>, signs: Vec<i8>) -> Self {
        Self { crossings, signs }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| i64::from(s)).sum()
    }

    pub fn is_unknot_token(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn validate(&self) -> DiagramReport {
        if self.crossings.is_empty() {
            let mut report = DiagramReport::default();
            if !self.signs.is_empty() {
                report.violations.push(Violation::SignMismatch { crossing: 0 });
            }
            return report;
        }
        validate_with_signs(&self.crossings, Some(&self.signs))
    }

    /// Swaps over- and under-strand at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s < 0 { [b, c, d, a] } else { [d, a, b, c] })
            .collect();
        Self { crossings, signs: self.signs.iter().map(|s| -s).collect() }
    }

    pub fn to_pd_string(&self) -> String {
        if self.crossings.is_empty() {
            return "U".into();
        }
        self.crossings
            .iter()
            .map(|[a, b, c, d]| format!("X({a},{b},{c},{d})"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Parses `X(a,b,c,d),X(...)` (square brackets accepted too) or `U`.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty diagram (use \"U\" for the unknot)".into()));
    }
    if s == "U" {
        return Ok(PlanarDiagram::unknot());
    }
    let mut crossings = Vec::new();
    let mut rest = s.as_str();
    loop {
        let body = rest
            .strip_prefix("X(")
            .or_else(|| rest.strip_prefix("X["))
            .ok_or_else(|| Error::Parse(format!("expected X(...) at {rest:?}")))?;
        let close = body
            .find([')', ']'])
            .ok_or_else(|| Error::Parse("unterminated crossing".into()))?;
        let labels = body[..close]
            .split(',')
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad label {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let crossing: Crossing = labels
            .try_into()
            .map_err(|v: Vec<u32>| Error::Parse(format!("crossing has {} labels", v.len())))?;
        crossings.push(crossing);
        rest = &body[close + 1..];
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("expected ',' at {rest:?}")))?;
    }
    PlanarDiagram::from_crossings(crossings)
}

impl FromStr for PlanarDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

/// A braid word: `g` is the generator `σ_g`, `-g` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Input("braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() >= strands {
                return Err(Error::Input(format!("generator {l} invalid on {strands} strands")));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Algebraic letter sum.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    /// Number of cycles of the underlying permutation, i.e. closure components.
    pub fn closure_components(&self) -> usize {
        let k = self.strands as usize;
        let mut perm: Vec<usize> = (0..k).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; k];
        let mut cycles = 0;
        for s in 0..k {
            if !seen[s] {
                cycles += 1;
                let mut j = s;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        cycles
    }

    /// PD code of the braid closure.
    pub fn to_pd(&self) -> Result<PlanarDiagram> {
        let components = self.closure_components();
        if components != 1 {
            return Err(Error::LinksUnsupported(components));
        }
        if self.letters.is_empty() {
            return Ok(PlanarDiagram::unknot());
        }
        let k = self.strands as usize;
        let mut pos: Vec<usize> = (0..k).collect();
        let mut next_id = k;
        let mut raw_ids: Vec<[usize; 4]> = Vec::new();
        // (incoming, outgoing) of the over-strand
        let mut overs: Vec<(usize, usize)> = Vec::new();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (el, er) = (pos[i], pos[i + 1]);
            let (fl, fr) = (next_id, next_id + 1);
            next_id += 2;
            if l > 0 {
                // over-strand left to right
                raw_ids.push([er, fr, fl, el]);
                overs.push((el, fr));
            } else {
                raw_ids.push([el, er, fr, fl]);
                overs.push((er, fl));
            }
            pos[i] = fl;
            pos[i + 1] = fr;
        }
        // closure: the top of position j is the bottom of position j
        let mut alias: Vec<usize> = (0..next_id).collect();
        for (j, &top) in pos.iter().enumerate() {
            alias[top] = j;
        }
        let canon = |e: usize| alias[e];
        let mut next_edge = vec![usize::MAX; next_id];
        for (ids, (over_in, over_out)) in raw_ids.iter().zip(&overs) {
            next_edge[canon(ids[0])] = canon(ids[2]);
            next_edge[canon(*over_in)] = canon(*over_out);
        }
        let start = canon(raw_ids[0][0]);
        let mut label = vec![0u32; next_id];
        let mut e = start;
        let mut n = 0;
        loop {
            n += 1;
            label[e] = n;
            e = next_edge[e];
            if e == start {
                break;
            }
        }
        debug_assert_eq!(n as usize, 2 * self.letters.len());
        let crossings = raw_ids
            .iter()
            .map(|ids| ids.map(|id| label[canon(id)]))
            .collect();
        PlanarDiagram::from_crossings(crossings)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "strands: {}; word: {}", self.strands, word.join(","))
    }
}

/// Parses `strands: k; word: 1,-2,1`.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected \"strands: k; word: ...\", got {s:?}"));
        let (strands, word) = s.split_once(';').ok_or_else(bad)?;
        let strands = strands.strip_prefix("strands:").ok_or_else(bad)?;
        let word = word.strip_prefix("word:").ok_or_else(bad)?;
        let strands: u32 = strands.parse().map_err(|_| bad())?;
        let letters = if word.is_empty() {
            Vec::new()
        } else {
            word.split(',')
                .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        BraidWord::new(strands, letters)
    }
}

pub fn braid_to_pd(b: &BraidWord) -> Result<PlanarDiagram> {
    b.to_pd()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";

    #[test]
    fn parses_trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.signs(), &[-1, -1, -1]);
        assert_eq!(d.writhe(), -3);
        assert!(d.validate().is_valid());
        assert_eq!(d.to_pd_string(), TREFOIL);
        assert_eq!(parse_pd(" X[1, 4,2,5], X(3,6,4,1) ,X(5,2,6,3)").unwrap(), d);
    }

    #[test]
    fn rejects_bad_pd() {
        assert!(matches!(parse_pd("X(1,4,2,5)"), Err(Error::InvalidDiagram(_))));
        let r = validate_crossings(&[[1, 4, 2, 5]]);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::LabelOutOfRange { label: 4, .. })));
        assert!(matches!(parse_pd(""), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("X(1,2,3)"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("X(1,2,2,1)Y"), Err(Error::Parse(_))));
        assert_eq!(parse_pd("U").unwrap(), PlanarDiagram::unknot());
    }

    #[test]
    fn multiplicity_violation() {
        let r = validate_crossings(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 1]]);
        assert!(r.violations.contains(&Violation::Multiplicity { label: 1, count: 3 }));
        assert!(r.violations.contains(&Violation::Multiplicity { label: 3, count: 1 }));
    }

    #[test]
    fn links_are_rejected() {
        // Hopf link, labels per component
        let hopf = [[4, 1, 3, 2], [2, 3, 1, 4]];
        let r = validate_crossings(&hopf);
        assert!(r.violations.contains(&Violation::ComponentCount(2)));
        assert_eq!(PlanarDiagram::from_crossings(hopf.to_vec()), Err(Error::LinksUnsupported(2)));
        let b: BraidWord = "strands: 2; word: 1,1".parse().unwrap();
        assert_eq!(b.to_pd(), Err(Error::LinksUnsupported(2)));
        let b: BraidWord = "strands: 3; word: 1,1,1".parse().unwrap();
        assert_eq!(b.to_pd(), Err(Error::LinksUnsupported(2)));
    }

    #[test]
    fn relabelled_diagram_is_rejected() {
        // trefoil with labels 2 and 3 swapped breaks label succession
        let r = validate_crossings(&[[1, 4, 3, 5], [2, 6, 4, 1], [5, 3, 6, 2]]);
        assert!(!r.is_valid());
    }

    #[test]
    fn one_crossing_kinks() {
        let d = PlanarDiagram::from_crossings(vec![[1, 2, 2, 1]]).unwrap();
        assert_eq!(d.signs(), &[-1]);
        let d = PlanarDiagram::from_crossings(vec![[1, 1, 2, 2]]).unwrap();
        assert_eq!(d.signs(), &[1]);
    }

    #[test]
    fn braid_closures() {
        let b: BraidWord = "strands: 2; word: 1,1,1".parse().unwrap();
        let d = b.to_pd().unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        let b: BraidWord = "strands: 3; word: 1,-2,1,-2".parse().unwrap();
        assert_eq!(b.to_pd().unwrap().writhe(), 0);
        let b: BraidWord = "strands: 2; word: 1".parse().unwrap();
        assert_eq!(b.to_pd().unwrap().crossing_count(), 1);
        let b: BraidWord = "strands:1;word:".parse().unwrap();
        assert_eq!(b.to_pd().unwrap(), PlanarDiagram::unknot());
        assert!("strands: 2; word: 2".parse::<BraidWord>().is_err());
        assert!("strands: 2; word: 0".parse::<BraidWord>().is_err());
        assert!("2; 1,1".parse::<BraidWord>().is_err());
        assert_eq!(b.to_string(), "strands: 1; word: ");
    }

    #[test]
    fn braid_signs_match_letters() {
        // The braid closure places crossing i at letter i.
        let b = BraidWord::new(4, vec![1, -2, 3, -2, 1, 3, -1]).unwrap();
        let d = b.to_pd().unwrap();
        let expected: Vec<i8> = b.letters().iter().map(|l| l.signum() as i8).collect();
        assert_eq!(d.signs(), expected.as_slice());
    }

    #[test]
    fn mirror_flips_signs() {
        let d = parse_pd(TREFOIL).unwrap();
        let m = d.mirror();
        assert_eq!(m.writhe(), 3);
        assert!(m.validate().is_valid());
        assert_eq!(m.mirror(), d);
        assert_eq!(PlanarDiagram::unknot().mirror(), PlanarDiagram::unknot());
    }

    #[test]
    fn damaged_signs_are_reported() {
        let d = parse_pd(TREFOIL).unwrap();
        let bad = PlanarDiagram::from_parts_unchecked(d.crossings().to_vec(), vec![-1, 1, -1]);
        assert_eq!(bad.validate().violations, vec![Violation::SignMismatch { crossing: 1 }]);
    }

    fn knotted_braid() -> impl Strategy<Value = BraidWord> {
        (2u32..5)
            .prop_flat_map(|k| {
                let letter = (1..k as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
                (Just(k), prop::collection::vec(letter, 1..12))
            })
            .prop_filter_map("closure must be a knot", |(k, w)| {
                let b = BraidWord::new(k, w).ok()?;
                (b.closure_components() == 1).then_some(b)
            })
    }

    proptest! {
        #[test]
        fn braid_writhe_is_exponent_sum(b in knotted_braid()) {
            let d = b.to_pd().unwrap();
            prop_assert_eq!(d.writhe(), b.exponent_sum());
            prop_assert!(d.validate().is_valid());
        }

        #[test]
        fn mirror_is_involution(b in knotted_braid()) {
            let d = b.to_pd().unwrap();
            prop_assert_eq!(d.mirror().mirror(), d.clone());
            prop_assert!(d.mirror().validate().is_valid());
        }
    }
}
