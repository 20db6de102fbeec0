//! Discharging replay on concrete plane graphs.
//!
//! Vertices start with `2d(v) - 6` and faces with `r(f) - 6`, which sums to
//! `-12` on a connected plane graph. The rules move charge according to the
//! structure of the graph only, so the final map does not depend on the order
//! in which rules are applied.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::girth6::{configurations_of, find_configuration, ConfigKind, Configuration};
use crate::graph::{Embedding, Graph};

pub type Charge = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("embedding has {0} connected components; discharging needs exactly one")]
    Disconnected(usize),
    #[error("charge map does not belong to this embedding")]
    Mismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(i) => write!(f, "f{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl Rule {
    pub const ALL: [Rule; 6] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6];
}

/// Rule label as written in transfers; R6 splits into three cases by the
/// other neighbour of the receiving 2-vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleCase {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6_1,
    R6_2,
    R6_3,
}

impl fmt::Display for RuleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleCase::R1 => "R1",
            RuleCase::R2 => "R2",
            RuleCase::R3 => "R3",
            RuleCase::R4 => "R4",
            RuleCase::R5 => "R5",
            RuleCase::R6_1 => "R6.1",
            RuleCase::R6_2 => "R6.2",
            RuleCase::R6_3 => "R6.3",
        };
        f.write_str(s)
    }
}

impl Serialize for RuleCase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn charge_str<S: Serializer>(c: &Charge, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    #[serde(serialize_with = "charge_str")]
    pub amount: Charge,
    pub rule: RuleCase,
}

/// Face inequality `r(f) ≥ 6 + 2α` checked when R1 fires on a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FaceCheck {
    pub face: usize,
    pub length: usize,
    pub alpha: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeMap {
    pub vertex: Vec<Charge>,
    pub face: Vec<Charge>,
    pub ledger: Vec<Transfer>,
    /// Filled by R1 for faces whose boundary contains a cycle.
    pub face_checks: Vec<FaceCheck>,
}

impl ChargeMap {
    pub fn total(&self) -> Charge {
        self.vertex.iter().chain(&self.face).fold(Charge::zero(), |a, b| a + b)
    }

    pub fn get(&self, x: Element) -> Charge {
        match x {
            Element::Vertex(v) => self.vertex[v],
            Element::Face(f) => self.face[f],
        }
    }

    fn slot(&mut self, x: Element) -> &mut Charge {
        match x {
            Element::Vertex(v) => &mut self.vertex[v],
            Element::Face(f) => &mut self.face[f],
        }
    }

    fn apply(&mut self, t: Transfer) {
        *self.slot(t.from) -= t.amount;
        *self.slot(t.to) += t.amount;
        self.ledger.push(t);
    }

    /// Elements with negative charge, vertices first.
    pub fn negatives(&self) -> Vec<(Element, Charge)> {
        let vs = self.vertex.iter().enumerate().map(|(i, &c)| (Element::Vertex(i), c));
        let fs = self.face.iter().enumerate().map(|(i, &c)| (Element::Face(i), c));
        vs.chain(fs).filter(|(_, c)| c.is_negative()).collect()
    }

    /// `self` with `ledger` replayed on top, without recording it again.
    pub fn replay(&self, ledger: &[Transfer]) -> ChargeMap {
        let mut out = ChargeMap { ledger: Vec::new(), ..self.clone() };
        for t in ledger {
            *out.slot(t.from) -= t.amount;
            *out.slot(t.to) += t.amount;
        }
        out.ledger = self.ledger.iter().chain(ledger).cloned().collect();
        out
    }
}

fn connected(e: &Embedding) -> Result<(), DischargeError> {
    match e.components().len() {
        1 => Ok(()),
        n => Err(DischargeError::Disconnected(n)),
    }
}

/// `ω(v) = 2d(v) - 6` and `ω(f) = r(f) - 6`.
pub fn initial_charges(e: &Embedding) -> Result<ChargeMap, DischargeError> {
    connected(e)?;
    let g = e.graph();
    Ok(ChargeMap {
        vertex: g.vertices().map(|v| Charge::from(2 * g.degree(v) as i64 - 6)).collect(),
        face: e.faces().iter().map(|f| Charge::from(f.len() as i64 - 6)).collect(),
        ledger: Vec::new(),
        face_checks: Vec::new(),
    })
}

/// Applies R1–R6 in order.
pub fn apply_rules(e: &Embedding, init: &ChargeMap) -> Result<ChargeMap, DischargeError> {
    apply_rules_in_order(e, init, &Rule::ALL)
}

/// Applies the given rules in the given order.
pub fn apply_rules_in_order(e: &Embedding, init: &ChargeMap, order: &[Rule]) -> Result<ChargeMap, DischargeError> {
    connected(e)?;
    let g = e.graph();
    if init.vertex.len() != g.vertex_count() || init.face.len() != e.faces().len() {
        return Err(DischargeError::Mismatch);
    }
    let mut map = init.clone();
    for &rule in order {
        for t in transfers(e, rule, &mut map.face_checks) {
            map.apply(t);
        }
    }
    Ok(map)
}

fn transfers(e: &Embedding, rule: Rule, checks: &mut Vec<FaceCheck>) -> Vec<Transfer> {
    let g = e.graph();
    let mut out = Vec::new();
    let give = |out: &mut Vec<Transfer>, from: Element, to: usize, amount: Charge, rule: RuleCase| {
        out.push(Transfer { from, to: Element::Vertex(to), amount, rule });
    };
    match rule {
        Rule::R1 => {
            let cyclic = g.edge_count() >= g.vertex_count();
            for (i, f) in e.faces().iter().enumerate() {
                let mut alpha = 0;
                for v in f.vertex_walk() {
                    if g.degree(v) == 1 {
                        alpha += 1;
                        give(&mut out, Element::Face(i), v, Charge::from(2), RuleCase::R1);
                    }
                }
                if cyclic && alpha > 0 {
                    checks.push(FaceCheck { face: i, length: f.len(), alpha, holds: f.len() >= 6 + 2 * alpha });
                }
            }
        }
        Rule::R2 => {
            for v in g.vertices().filter(|&v| g.degree(v) >= 5) {
                for &y in g.neighbours(v).iter().filter(|&&y| g.degree(y) == 1) {
                    give(&mut out, Element::Vertex(v), y, Charge::from(2), RuleCase::R2);
                }
            }
        }
        Rule::R3 | Rule::R4 | Rule::R5 => {
            let (l, amount, case) = match rule {
                Rule::R3 => (3, Charge::new(2, 3), RuleCase::R3),
                Rule::R4 => (2, Charge::from(1), RuleCase::R4),
                _ => (1, Charge::from(2), RuleCase::R5),
            };
            for v in g.vertices().filter(|&v| g.is_kl(v, 4, l)) {
                for &y in g.neighbours(v).iter().filter(|&&y| g.degree(y) == 2) {
                    give(&mut out, Element::Vertex(v), y, amount, case);
                }
            }
        }
        Rule::R6 => {
            for v in g.vertices().filter(|&v| g.degree(v) >= 5) {
                for &y in g.neighbours(v).iter().filter(|&&y| g.degree(y) == 2) {
                    let (amount, case) = r6_case(g, y, v);
                    give(&mut out, Element::Vertex(v), y, amount, case);
                }
            }
        }
    }
    out
}

/// R6 amount for the 2-vertex `y` adjacent to the 5⁺-vertex `v`, decided by
/// the other neighbour `z` of `y`. The three cases cover every `z`.
fn r6_case(g: &Graph, y: usize, v: usize) -> (Charge, RuleCase) {
    let z = g.neighbours(y).iter().copied().find(|&t| t != v).expect("2-vertex");
    if g.degree(z) <= 3 {
        (Charge::from(2), RuleCase::R6_1)
    } else if g.is_kl(z, 4, 3) {
        (Charge::new(4, 3), RuleCase::R6_2)
    } else {
        (Charge::from(1), RuleCase::R6_3)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Verdict {
    /// Girth below 6 or maximum degree below 4.
    OutOfScope { reason: String },
    /// In scope and a reducible configuration is present.
    Consistent { configuration: ConfigKind },
    /// In scope with no reducible configuration.
    TheoremViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeElement {
    pub element: Element,
    #[serde(serialize_with = "charge_str")]
    pub charge: Charge,
    /// First configuration, in kind order, with an anchor near the element.
    pub nearby: Option<ConfigKind>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(serialize_with = "charge_str")]
    pub initial_total: Charge,
    #[serde(serialize_with = "charge_str")]
    pub final_total: Charge,
    pub negatives: Vec<NegativeElement>,
    pub ledger_size: usize,
    /// Initial charges plus the ledger reproduce the final map.
    pub replay_ok: bool,
    pub face_bound_failures: usize,
    pub verdict: Verdict,
}

/// Audits `final_map` produced from `initial` on `e`.
pub fn audit(e: &Embedding, initial: &ChargeMap, final_map: &ChargeMap) -> Report {
    let g = e.graph();
    let delta = g.max_degree();
    let verdict = if !g.girth().at_least(6) {
        Verdict::OutOfScope { reason: format!("girth {} is below 6", g.girth()) }
    } else if delta < 4 {
        Verdict::OutOfScope { reason: format!("maximum degree {delta} is below 4") }
    } else {
        match find_configuration(g) {
            Some(c) => Verdict::Consistent { configuration: c.kind() },
            None => Verdict::TheoremViolation,
        }
    };
    let all: Vec<Configuration> = ConfigKind::ALL.iter().flat_map(|&k| configurations_of(g, k)).collect();
    let negatives = final_map
        .negatives()
        .into_iter()
        .map(|(element, charge)| {
            let near = nearby_vertices(e, element);
            let nearby = all.iter().find(|c| c.vertices().iter().any(|v| near.contains(v))).map(Configuration::kind);
            NegativeElement { element, charge, nearby }
        })
        .collect();
    let replay = initial.replay(&final_map.ledger[initial.ledger.len().min(final_map.ledger.len())..]);
    Report {
        initial_total: initial.total(),
        final_total: final_map.total(),
        negatives,
        ledger_size: final_map.ledger.len(),
        replay_ok: replay.vertex == final_map.vertex && replay.face == final_map.face,
        face_bound_failures: final_map.face_checks.iter().filter(|c| !c.holds).count(),
        verdict,
    }
}

/// Vertices within distance 2 of a vertex, or on the boundary of a face.
fn nearby_vertices(e: &Embedding, x: Element) -> Vec<usize> {
    let g = e.graph();
    let mut out: Vec<usize> = match x {
        Element::Vertex(v) => {
            let mut s = vec![v];
            for &w in g.neighbours(v) {
                s.push(w);
                s.extend_from_slice(g.neighbours(w));
            }
            s
        }
        Element::Face(f) => e.faces()[f].vertex_walk().collect(),
    };
    out.sort_unstable();
    out.dedup();
    out
}

/// Initial charges, rules and audit in one call.
pub fn discharge(e: &Embedding) -> Result<(ChargeMap, ChargeMap, Report), DischargeError> {
    let init = initial_charges(e)?;
    let fin = apply_rules(e, &init)?;
    let report = audit(e, &init, &fin);
    Ok((init, fin, report))
}
