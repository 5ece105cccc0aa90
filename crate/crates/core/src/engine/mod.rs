//! Fact graph over Fano-threefold families with provenance-tracked
//! propagation rules.
//!
//! Three rules fire during propagation:
//!
//! * R1 (descent): an additive structure descends along a blow-down, so
//!   `Additive(X)` and an edge `X → Y` derive `Additive(Y)`;
//! * R2 (contrapositive): `NotAdditive(Y)` and `X → Y` derive
//!   `NotAdditive(X)`;
//! * R3 (products): `Additive(Y)`, `Additive(Z)` and `X = Y×Z` derive
//!   `Additive(X)`.
//!
//! Toric nodes are never axiomatized: their statuses are computed from
//! their polytopes when the base is loaded. Everything non-polyhedral
//! enters as a cited axiom with a quote anchor.

pub mod kb;

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::additivity::{inscribed_in_rectangle, verify_witness};
use crate::db::PolytopeDb;
use crate::error::{Error, Result};

const KB_EMBEDDED: &str = include_str!("../../data/threefolds.kb");

/// The additive list in its published order (by Picard number, then index).
pub const MAIN_THEOREM_LIST: &[&str] = &[
    "P3", "Q3", "II_28", "II_30", "II_31", "II_33", "II_34", "II_35", "II_36", "III_23",
    "III_26", "III_27", "III_28", "III_29", "III_30", "III_31", "IV_10", "IV_11", "IV_12",
];

/// The toric additive list (criterion verdicts alone, no cited axioms).
pub const TORIC_ADDITIVE_LIST: &[&str] = &[
    "P3", "II_33", "II_34", "II_35", "II_36", "III_26", "III_27", "III_28", "III_29",
    "III_30", "III_31", "IV_10", "IV_11", "IV_12",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Threefold,
    Surface,
    Curve,
}

#[derive(Clone, Debug)]
pub struct VarietyNode {
    pub id: String,
    pub picard: u32,
    /// Sort index within the Picard class (the family number).
    pub index: u32,
    pub kind: NodeKind,
    /// Name of the polytope in the dataset when the variety is toric.
    pub polytope: Option<String>,
    /// Marked for the primitive-toric check: primitive toric Fano nodes.
    pub primitive_toric: bool,
    pub description: String,
}

#[derive(Clone, Debug)]
pub struct BlowDownEdge {
    pub child: String,
    pub parent: String,
    pub center: String,
    /// Number of blow-up centers; equals the Picard drop.
    pub centers: u32,
}

#[derive(Clone, Debug)]
pub struct ProductEdge {
    pub id: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Additive,
    NotAdditive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Additive => "additive",
            Status::NotAdditive => "not-additive",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Provenance {
    /// Criterion run on the node's polytope; carries the witness vertex or
    /// a refutation summary.
    Computed { detail: String },
    /// Cited result with a quote anchor.
    Cited { cite: String, quote: String },
    /// Rule application over earlier facts.
    Derived {
        rule: &'static str,
        premises: Vec<usize>,
        via: String,
    },
}

#[derive(Clone, Debug)]
pub struct Fact {
    pub id: usize,
    pub node: String,
    pub status: Status,
    pub provenance: Provenance,
    pub note: Option<String>,
}

#[derive(Default, Clone, Debug)]
struct NodeFacts {
    additive: Option<usize>,
    not_additive: Option<usize>,
}

/// The loaded, propagatable fact graph.
#[derive(Debug)]
pub struct KnowledgeBase {
    pub nodes: BTreeMap<String, VarietyNode>,
    pub blowdowns: Vec<BlowDownEdge>,
    pub products: Vec<ProductEdge>,
    pub facts: Vec<Fact>,
    by_node: BTreeMap<String, NodeFacts>,
}

/// Which fact sources to load.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomPolicy {
    /// Cited axioms and computed toric verdicts (the shipped setup).
    All,
    /// Computed toric verdicts only.
    ToricOnly,
}

/// The embedded knowledge base source (also the `FANOSCOPE_DATA` override
/// file name).
pub const KB_FILE_NAME: &str = "threefolds.kb";

pub fn kb_text() -> String {
    crate::db::data_text(KB_FILE_NAME, KB_EMBEDDED)
}

/// Parse, validate and close a knowledge base over the polytope dataset.
/// Toric verdicts are computed here; no propagation is run yet.
pub fn load_knowledge_base(
    text: &str,
    db: &PolytopeDb,
    policy: AxiomPolicy,
) -> Result<KnowledgeBase> {
    let raw = kb::parse_kb(text)?;
    let mut nodes = BTreeMap::new();
    for n in &raw.nodes {
        let kind = match n.kind.as_str() {
            "threefold" => NodeKind::Threefold,
            "surface" => NodeKind::Surface,
            "curve" => NodeKind::Curve,
            other => {
                return Err(Error::KnowledgeBase(format!(
                    "line {}: unknown node kind {other}",
                    n.line
                )))
            }
        };
        if let Some(poly) = &n.toric {
            db.get(poly).map_err(|_| {
                Error::KnowledgeBase(format!(
                    "line {}: toric node {} references unknown polytope {poly}",
                    n.line, n.id
                ))
            })?;
        }
        let node = VarietyNode {
            id: n.id.clone(),
            picard: n.picard,
            index: n.index,
            kind,
            polytope: n.toric.clone(),
            primitive_toric: n.primitive,
            description: n.desc.clone(),
        };
        if nodes.insert(n.id.clone(), node).is_some() {
            return Err(Error::KnowledgeBase(format!(
                "line {}: duplicate node id {}",
                n.line, n.id
            )));
        }
    }
    let mut blowdowns = Vec::new();
    for e in &raw.edges {
        let child = nodes.get(&e.child).ok_or_else(|| {
            Error::KnowledgeBase(format!("line {}: dangling edge child {}", e.line, e.child))
        })?;
        let parent = nodes.get(&e.parent).ok_or_else(|| {
            Error::KnowledgeBase(format!("line {}: dangling edge parent {}", e.line, e.parent))
        })?;
        if child.picard != parent.picard + e.centers {
            return Err(Error::KnowledgeBase(format!(
                "line {}: edge {} -> {} drops Picard number by {}, but has {} center(s)",
                e.line,
                e.child,
                e.parent,
                child.picard as i64 - parent.picard as i64,
                e.centers
            )));
        }
        blowdowns.push(BlowDownEdge {
            child: e.child.clone(),
            parent: e.parent.clone(),
            center: e.center.clone(),
            centers: e.centers,
        });
    }
    let mut products = Vec::new();
    for p in &raw.products {
        for id in [&p.id, &p.left, &p.right] {
            if !nodes.contains_key(id) {
                return Err(Error::KnowledgeBase(format!(
                    "line {}: dangling product reference {id}",
                    p.line
                )));
            }
        }
        let (x, l, r) = (&nodes[&p.id], &nodes[&p.left], &nodes[&p.right]);
        if x.picard != l.picard + r.picard {
            return Err(Error::KnowledgeBase(format!(
                "line {}: product {} has Picard number {} != {} + {}",
                p.line, p.id, x.picard, l.picard, r.picard
            )));
        }
        products.push(ProductEdge {
            id: p.id.clone(),
            left: p.left.clone(),
            right: p.right.clone(),
        });
    }

    let mut base = KnowledgeBase {
        nodes,
        blowdowns,
        products,
        facts: Vec::new(),
        by_node: BTreeMap::new(),
    };

    // Computed facts: the criterion on every toric node's polytope.
    let toric_ids: Vec<String> = base
        .nodes
        .values()
        .filter(|n| n.polytope.is_some())
        .map(|n| n.id.clone())
        .collect();
    for id in toric_ids {
        let poly_name = base.nodes[&id].polytope.clone().unwrap();
        let polytope = &db.get(&poly_name)?.polytope;
        let verdict = inscribed_in_rectangle(polytope);
        let (status, detail) = match (&verdict.witness, verdict.inscribed) {
            (Some(w), true) => (Status::Additive, format!("witness v0={}", w.v0)),
            _ => (
                Status::NotAdditive,
                format!(
                    "refuted at all {} vertices",
                    polytope.vertices().len()
                ),
            ),
        };
        base.add_fact(id, status, Provenance::Computed { detail }, None)?;
    }

    if policy == AxiomPolicy::All {
        for a in &raw.axioms {
            if !base.nodes.contains_key(&a.id) {
                return Err(Error::KnowledgeBase(format!(
                    "line {}: axiom references unknown node {}",
                    a.line, a.id
                )));
            }
            if base.nodes[&a.id].polytope.is_some() {
                return Err(Error::KnowledgeBase(format!(
                    "line {}: toric node {} must be computed, not axiomatized",
                    a.line, a.id
                )));
            }
            let status = if a.additive {
                Status::Additive
            } else {
                Status::NotAdditive
            };
            base.add_fact(
                a.id.clone(),
                status,
                Provenance::Cited {
                    cite: a.cite.clone(),
                    quote: a.quote.clone(),
                },
                a.note.clone(),
            )?;
        }
    }
    Ok(base)
}

impl KnowledgeBase {
    fn add_fact(
        &mut self,
        node: String,
        status: Status,
        provenance: Provenance,
        note: Option<String>,
    ) -> Result<usize> {
        let id = self.facts.len();
        let slot = self.by_node.entry(node.clone()).or_default();
        match status {
            Status::Additive => {
                if slot.additive.is_none() {
                    slot.additive = Some(id);
                }
            }
            Status::NotAdditive => {
                if slot.not_additive.is_none() {
                    slot.not_additive = Some(id);
                }
            }
        }
        self.facts.push(Fact {
            id,
            node,
            status,
            provenance,
            note,
        });
        Ok(id)
    }

    pub fn fact_for(&self, node: &str, status: Status) -> Option<&Fact> {
        let slot = self.by_node.get(node)?;
        let id = match status {
            Status::Additive => slot.additive?,
            Status::NotAdditive => slot.not_additive?,
        };
        Some(&self.facts[id])
    }

    /// The resolved status of a node, when unambiguous.
    pub fn status(&self, node: &str) -> Option<Status> {
        let slot = self.by_node.get(node)?;
        match (slot.additive, slot.not_additive) {
            (Some(_), None) => Some(Status::Additive),
            (None, Some(_)) => Some(Status::NotAdditive),
            _ => None,
        }
    }

    /// Inject an extra fact (used to probe consistency checking).
    pub fn inject_fact(&mut self, node: &str, status: Status, why: &str) -> Result<usize> {
        if !self.nodes.contains_key(node) {
            return Err(Error::UnknownName(node.to_string()));
        }
        self.add_fact(
            node.to_string(),
            status,
            Provenance::Cited {
                cite: "injected".into(),
                quote: why.into(),
            },
            None,
        )
    }

    /// Run R1/R2/R3 to fixpoint. Deterministic iteration order; returns the
    /// number of facts derived. Idempotent: a second call derives nothing.
    pub fn propagate(&mut self) -> usize {
        let mut added = 0;
        loop {
            let mut new_facts: Vec<(String, Status, Provenance)> = Vec::new();
            for e in &self.blowdowns {
                if let Some(f) = self.fact_for(&e.child, Status::Additive) {
                    if self.fact_for(&e.parent, Status::Additive).is_none() {
                        new_facts.push((
                            e.parent.clone(),
                            Status::Additive,
                            Provenance::Derived {
                                rule: "R1",
                                premises: vec![f.id],
                                via: format!(
                                    "blow-down {} -> {} ({})",
                                    e.child, e.parent, e.center
                                ),
                            },
                        ));
                        break;
                    }
                }
                if let Some(f) = self.fact_for(&e.parent, Status::NotAdditive) {
                    if self.fact_for(&e.child, Status::NotAdditive).is_none() {
                        new_facts.push((
                            e.child.clone(),
                            Status::NotAdditive,
                            Provenance::Derived {
                                rule: "R2",
                                premises: vec![f.id],
                                via: format!(
                                    "blow-down {} -> {} ({})",
                                    e.child, e.parent, e.center
                                ),
                            },
                        ));
                        break;
                    }
                }
            }
            if new_facts.is_empty() {
                for p in &self.products {
                    let (l, r) = (
                        self.fact_for(&p.left, Status::Additive),
                        self.fact_for(&p.right, Status::Additive),
                    );
                    if let (Some(fl), Some(fr)) = (l, r) {
                        if self.fact_for(&p.id, Status::Additive).is_none() {
                            new_facts.push((
                                p.id.clone(),
                                Status::Additive,
                                Provenance::Derived {
                                    rule: "R3",
                                    premises: vec![fl.id, fr.id],
                                    via: format!("product {} = {} x {}", p.id, p.left, p.right),
                                },
                            ));
                            break;
                        }
                    }
                }
            }
            if new_facts.is_empty() {
                break;
            }
            for (node, status, prov) in new_facts {
                self.add_fact(node, status, prov, None).expect("valid node");
                added += 1;
            }
        }
        added
    }

    /// Render the chain of a fact down to its computed/cited leaves.
    pub fn provenance_chain(&self, fact_id: usize) -> String {
        let f = &self.facts[fact_id];
        match &f.provenance {
            Provenance::Computed { detail } => {
                format!("Computed({}, {detail})", f.node)
            }
            Provenance::Cited { cite, .. } => format!("Cited({}, {cite})", f.node),
            Provenance::Derived { rule, premises, via } => {
                let inner = premises
                    .iter()
                    .map(|&p| self.provenance_chain(p))
                    .collect::<Vec<_>>()
                    .join(" & ");
                format!("{}({}) <= {rule}[{via}] <= {inner}", f.status.as_str(), f.node)
            }
        }
    }
}

/// One contradiction: a node carrying both statuses.
#[derive(Debug)]
pub struct Contradiction {
    pub node: String,
    pub additive_chain: String,
    pub not_additive_chain: String,
}

#[derive(Debug, Default)]
pub struct ConsistencyReport {
    pub contradictions: Vec<Contradiction>,
    pub errors: Vec<String>,
}

impl ConsistencyReport {
    pub fn ok(&self) -> bool {
        self.contradictions.is_empty() && self.errors.is_empty()
    }
}

/// Check the propagated base: no node carries both statuses, every toric
/// node's computed status matches a fresh criterion run (with the witness
/// re-verified), and every derived fact replays from its premises.
pub fn consistency(base: &KnowledgeBase, db: &PolytopeDb) -> ConsistencyReport {
    let mut report = ConsistencyReport::default();
    for (id, slot) in &base.by_node {
        if let (Some(a), Some(n)) = (slot.additive, slot.not_additive) {
            report.contradictions.push(Contradiction {
                node: id.clone(),
                additive_chain: base.provenance_chain(a),
                not_additive_chain: base.provenance_chain(n),
            });
        }
    }
    for node in base.nodes.values() {
        let Some(poly_name) = &node.polytope else {
            continue;
        };
        let polytope = match db.get(poly_name) {
            Ok(p) => &p.polytope,
            Err(e) => {
                report.errors.push(format!("{}: {e}", node.id));
                continue;
            }
        };
        let verdict = inscribed_in_rectangle(polytope);
        let expected = if verdict.inscribed {
            Status::Additive
        } else {
            Status::NotAdditive
        };
        let computed = base.facts.iter().find(|f| {
            f.node == node.id && matches!(f.provenance, Provenance::Computed { .. })
        });
        match computed {
            Some(f) if f.status == expected => {}
            Some(f) => report.errors.push(format!(
                "{}: computed status {} disagrees with criterion {}",
                node.id,
                f.status.as_str(),
                expected.as_str()
            )),
            None => report
                .errors
                .push(format!("{}: toric node has no computed fact", node.id)),
        }
        if let Some(w) = &verdict.witness {
            if let Err(e) = verify_witness(polytope, w) {
                report
                    .errors
                    .push(format!("{}: witness fails re-verification: {e}", node.id));
            }
        }
    }
    // replay derived facts
    for f in &base.facts {
        let Provenance::Derived { rule, premises, .. } = &f.provenance else {
            continue;
        };
        let replayed = match (*rule, premises.as_slice()) {
            ("R1", [p]) => {
                let prem = &base.facts[*p];
                prem.status == Status::Additive
                    && f.status == Status::Additive
                    && base
                        .blowdowns
                        .iter()
                        .any(|e| e.child == prem.node && e.parent == f.node)
            }
            ("R2", [p]) => {
                let prem = &base.facts[*p];
                prem.status == Status::NotAdditive
                    && f.status == Status::NotAdditive
                    && base
                        .blowdowns
                        .iter()
                        .any(|e| e.parent == prem.node && e.child == f.node)
            }
            ("R3", [l, r]) => {
                let (fl, fr) = (&base.facts[*l], &base.facts[*r]);
                fl.status == Status::Additive
                    && fr.status == Status::Additive
                    && f.status == Status::Additive
                    && base
                        .products
                        .iter()
                        .any(|p| p.id == f.node && p.left == fl.node && p.right == fr.node)
            }
            _ => false,
        };
        if !replayed {
            report.errors.push(format!(
                "fact {} on {} does not replay from its premises",
                f.id, f.node
            ));
        }
    }
    report
}

/// One row of the classification report.
#[derive(Debug)]
pub struct ReportRow {
    pub id: String,
    pub picard: u32,
    pub note: Option<String>,
    pub provenance: String,
}

#[derive(Debug)]
pub struct MainTheoremReport {
    pub additive: Vec<ReportRow>,
    pub unknown: Vec<String>,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
}

impl MainTheoremReport {
    pub fn diff_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "additive": self.additive.iter().map(|r| json!({
                "id": r.id,
                "picard": r.picard,
                "note": r.note,
                "provenance": r.provenance,
            })).collect::<Vec<_>>(),
            "unknown": self.unknown,
            "missing": self.missing,
            "extra": self.extra,
        })
    }
}

/// The additive threefold families, ordered by (Picard number, family
/// index), diffed against the expected list.
pub fn main_theorem_report(base: &KnowledgeBase, expected: &[&str]) -> MainTheoremReport {
    let mut rows: Vec<&VarietyNode> = base
        .nodes
        .values()
        .filter(|n| n.kind == NodeKind::Threefold)
        .collect();
    rows.sort_by_key(|n| (n.picard, n.index));
    let mut additive = Vec::new();
    let mut unknown = Vec::new();
    for node in rows {
        match base.status(&node.id) {
            Some(Status::Additive) => {
                let fact = base.fact_for(&node.id, Status::Additive).expect("status");
                additive.push(ReportRow {
                    id: node.id.clone(),
                    picard: node.picard,
                    note: fact.note.clone(),
                    provenance: base.provenance_chain(fact.id),
                });
            }
            Some(Status::NotAdditive) => {}
            None => unknown.push(node.id.clone()),
        }
    }
    let got: Vec<&str> = additive.iter().map(|r| r.id.as_str()).collect();
    let missing = expected
        .iter()
        .filter(|e| !got.contains(e))
        .map(|s| s.to_string())
        .collect();
    let extra = got
        .iter()
        .filter(|g| !expected.contains(g))
        .map(|s| s.to_string())
        .collect();
    MainTheoremReport {
        additive,
        unknown,
        missing,
        extra,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shipped() -> KnowledgeBase {
        let mut base =
            load_knowledge_base(KB_EMBEDDED, PolytopeDb::builtin(), AxiomPolicy::All).unwrap();
        base.propagate();
        base
    }

    #[test]
    fn shipped_base_loads_with_enough_nodes() {
        let base = shipped();
        assert!(base.nodes.len() >= 40);
        let toric_threefolds = base
            .nodes
            .values()
            .filter(|n| n.kind == NodeKind::Threefold && n.polytope.is_some())
            .count();
        assert_eq!(toric_threefolds, 18);
        assert!(base
            .blowdowns
            .iter()
            .any(|e| e.child == "IV_12" && e.parent == "II_33"));
    }

    #[test]
    fn propagation_is_idempotent() {
        let mut base =
            load_knowledge_base(KB_EMBEDDED, PolytopeDb::builtin(), AxiomPolicy::All).unwrap();
        let first = base.propagate();
        assert!(first > 0);
        assert_eq!(base.propagate(), 0);
    }

    #[test]
    fn derived_examples() {
        let base = shipped();
        // descent from the computed IV_12 down to II_33
        assert_eq!(base.status("II_33"), Some(Status::Additive));
        // contrapositive: V5 is not additive, so its curve blow-ups are not
        let f = base.fact_for("II_20", Status::NotAdditive).unwrap();
        assert!(matches!(&f.provenance, Provenance::Derived { rule: "R2", .. }));
        // product rule gives P1 x S7
        assert_eq!(base.status("IV_10"), Some(Status::Additive));
        // surfaces: S5 inherits non-additivity from S6
        let f = base.fact_for("S5", Status::NotAdditive).unwrap();
        assert!(matches!(&f.provenance, Provenance::Derived { rule: "R2", .. }));
    }

    #[test]
    fn shipped_base_is_consistent_and_matches_list() {
        let base = shipped();
        let report = consistency(&base, PolytopeDb::builtin());
        assert!(report.ok(), "{report:?}");
        let main = main_theorem_report(&base, MAIN_THEOREM_LIST);
        assert!(main.diff_empty(), "missing={:?} extra={:?}", main.missing, main.extra);
        assert_eq!(main.additive.len(), 19);
        assert!(main.unknown.is_empty());
        let iii23 = main.additive.iter().find(|r| r.id == "III_23").unwrap();
        assert_eq!(iii23.note.as_deref(), Some("particular member of the family"));
    }

    #[test]
    fn toric_only_policy_yields_the_toric_list() {
        let mut base =
            load_knowledge_base(KB_EMBEDDED, PolytopeDb::builtin(), AxiomPolicy::ToricOnly)
                .unwrap();
        base.propagate();
        let main = main_theorem_report(&base, TORIC_ADDITIVE_LIST);
        assert!(main.diff_empty(), "missing={:?} extra={:?}", main.missing, main.extra);
        assert_eq!(main.additive.len(), 14);
        assert!(!main.unknown.is_empty());
    }

    #[test]
    fn primitive_toric_nodes_are_additive() {
        let base = shipped();
        for node in base.nodes.values().filter(|n| n.primitive_toric) {
            assert!(node.polytope.is_some(), "{} marked primitive toric", node.id);
            assert_eq!(base.status(&node.id), Some(Status::Additive), "{}", node.id);
        }
    }

    #[test]
    fn injected_contradiction_is_detected() {
        let mut base =
            load_knowledge_base(KB_EMBEDDED, PolytopeDb::builtin(), AxiomPolicy::All).unwrap();
        base.inject_fact("V_2", Status::Additive, "probe").unwrap();
        base.propagate();
        let report = consistency(&base, PolytopeDb::builtin());
        assert!(!report.ok());
        assert!(report.contradictions.iter().any(|c| c.node == "V_2"));
    }

    #[test]
    fn dangling_polytope_is_a_load_error() {
        let text = "node X picard=1 index=1 kind=threefold toric=NOPE desc=\"x\"";
        let err = load_knowledge_base(text, PolytopeDb::builtin(), AxiomPolicy::All).unwrap_err();
        assert!(matches!(err, Error::KnowledgeBase(_)));
    }

    #[test]
    fn toric_statuses_match_expected_table() {
        let base = shipped();
        for id in TORIC_ADDITIVE_LIST {
            assert_eq!(base.status(id), Some(Status::Additive), "{id}");
        }
        for id in ["III_25", "IV_9", "V_2", "V_3"] {
            assert_eq!(base.status(id), Some(Status::NotAdditive), "{id}");
            let f = base
                .facts
                .iter()
                .find(|f| f.node == id && matches!(f.provenance, Provenance::Computed { .. }))
                .unwrap();
            assert_eq!(f.status, Status::NotAdditive);
        }
    }
}
