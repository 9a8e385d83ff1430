//! Reducible configurations and their mechanical certificates.
//!
//! A configuration is a concrete plane host, a surgery that shrinks it, and
//! the edges left uncolored afterwards (the *variables*). Every other host
//! edge is colored by the smaller graph. [`check`] confirms that:
//!
//! * the surgery is valid and keeps every conflict between colored edges,
//!   so a coloring of the smaller graph restricts to a proper partial one;
//! * each variable keeps at least its claimed number of available colors;
//! * the conflicts among variables that the host really has are among the
//!   transcribed ones;
//! * the claimed lists can always be completed, by the degree-list theorem,
//!   a nonzero polynomial coefficient, or a pairing argument plus Hall.

mod hosts;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::choosability::{degree_feasible_colorable, hall_by_bounds, ChoosabilityError};
use crate::embedding::{parse_peg, to_peg, EmbeddedGraph, EmbeddingError, Surgery};
use crate::facial_coloring::{conflict_graph, ColorSet};
use crate::nullstellensatz::{
    cn_witness, coefficient, lemma_polynomial, serialize_bigint, ConflictPairs, LemmaId, Monomial,
    NullstellensatzError, Witness,
};
use crate::simple::SimpleGraph;

pub use hosts::{catalog, four_vertex_host, ringed_face};

#[derive(Debug, Error)]
pub enum ReducibilityError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Nullstellensatz(#[from] NullstellensatzError),
    #[error("invalid configuration document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("configuration `{name}`: {message}")]
    Schema { name: String, message: String },
    #[error("no configuration named `{0}`")]
    UnknownConfiguration(String),
}

/// How the host is shrunk before coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum SurgeryOp {
    ContractFace { face: usize },
    ContractEdge { edge: usize },
    /// Identify `e` and `f`, two edges of `face`; they end up with one color.
    IdentifyEdges { e: usize, f: usize, face: usize },
    DeleteVertices { vertices: Vec<usize> },
}

impl SurgeryOp {
    pub fn apply(&self, g: &EmbeddedGraph) -> Result<Surgery, EmbeddingError> {
        match self {
            SurgeryOp::ContractFace { face } => g.contract_face(*face),
            SurgeryOp::ContractEdge { edge } => g.contract_edge(*edge),
            SurgeryOp::IdentifyEdges { e, f, face } => g.identify_edges(*e, *f, *face),
            SurgeryOp::DeleteVertices { vertices } => g.delete_vertices(vertices),
        }
    }

    fn identified(&self) -> Vec<(usize, usize)> {
        match *self {
            SurgeryOp::IdentifyEdges { e, f, .. } => vec![(e, f)],
            _ => Vec::new(),
        }
    }
}

/// The argument that completes the coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Lists at least as long as degrees in the conflict graph, with a
    /// spare color or a block that is neither complete nor an odd cycle.
    DegreeList,
    /// Nonzero coefficient of `target` in the product of the pair factors.
    Nullstellensatz {
        target: Vec<u8>,
        #[serde(default)]
        lemma: Option<LemmaId>,
    },
    /// Either some listed pair of nonconflicting variables shares a color,
    /// leaving the rest completable with one color less each, or every such
    /// pair has disjoint lists and Hall's condition holds.
    HallWithPairing { pairs: Vec<(usize, usize)> },
}

#[derive(Clone, Debug)]
pub struct Configuration {
    pub name: String,
    pub description: String,
    pub ell: usize,
    pub palette: u32,
    pub host: EmbeddedGraph,
    pub surgery: SurgeryOp,
    /// Host edge of each variable; `None` marks an index the factor list
    /// skips.
    pub variables: Vec<Option<usize>>,
    /// Claimed lower bound on the available colors of each variable.
    pub bounds: Vec<u8>,
    /// Transcribed conflicts, 1-based, in factor orientation.
    pub pairs: Vec<(usize, usize)>,
    pub certificate: Certificate,
}

fn default_ell() -> usize {
    3
}

fn default_palette() -> u32 {
    10
}

#[derive(Serialize, Deserialize)]
struct ConfigurationDoc {
    name: String,
    #[serde(default)]
    description: String,
    #[serde(default = "default_ell")]
    ell: usize,
    #[serde(default = "default_palette")]
    palette: u32,
    /// PEG text.
    host: String,
    surgery: SurgeryOp,
    variables: Vec<Option<usize>>,
    bounds: Vec<u8>,
    pairs: Vec<(usize, usize)>,
    certificate: Certificate,
}

impl Configuration {
    pub fn from_json(text: &str) -> Result<Self, ReducibilityError> {
        let doc: ConfigurationDoc = serde_json::from_str(text)?;
        Ok(Configuration {
            host: parse_peg(&doc.host)?,
            name: doc.name,
            description: doc.description,
            ell: doc.ell,
            palette: doc.palette,
            surgery: doc.surgery,
            variables: doc.variables,
            bounds: doc.bounds,
            pairs: doc.pairs,
            certificate: doc.certificate,
        })
    }

    pub fn to_json(&self) -> String {
        let doc = ConfigurationDoc {
            name: self.name.clone(),
            description: self.description.clone(),
            ell: self.ell,
            palette: self.palette,
            host: to_peg(&self.host),
            surgery: self.surgery.clone(),
            variables: self.variables.clone(),
            bounds: self.bounds.clone(),
            pairs: self.pairs.clone(),
            certificate: self.certificate.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn uncolored(&self) -> Vec<usize> {
        self.variables.iter().flatten().copied().collect()
    }

    fn schema(&self, message: impl Into<String>) -> ReducibilityError {
        ReducibilityError::Schema { name: self.name.clone(), message: message.into() }
    }

    fn validate(&self) -> Result<ConflictPairs, ReducibilityError> {
        if self.ell == 0 {
            return Err(self.schema("ell must be at least 1"));
        }
        if self.bounds.len() != self.variables.len() {
            return Err(self.schema(format!(
                "{} bounds for {} variables",
                self.bounds.len(),
                self.variables.len()
            )));
        }
        if let Some(&b) = self.bounds.iter().find(|&&b| b as u32 > self.palette) {
            return Err(self.schema(format!("bound {b} exceeds the palette of {}", self.palette)));
        }
        let mut seen = BTreeSet::new();
        for &e in self.variables.iter().flatten() {
            self.host.check_edge(e)?;
            if !seen.insert(e) {
                return Err(self.schema(format!("edge {e} is listed as two variables")));
            }
        }
        for (e, f) in self.surgery.identified() {
            if seen.contains(&e) || seen.contains(&f) {
                return Err(self.schema("identified edges stay colored and cannot be variables"));
            }
        }
        let pairs = ConflictPairs::from_one_based(self.variables.len(), &self.pairs)?;
        match &self.certificate {
            Certificate::DegreeList => {}
            Certificate::Nullstellensatz { target, .. } => {
                if target.len() != self.variables.len() {
                    return Err(self.schema(format!("target has {} exponents", target.len())));
                }
            }
            Certificate::HallWithPairing { pairs: far } => {
                if far.iter().any(|&(a, b)| a == b || a.max(b) >= self.variables.len()) {
                    return Err(self.schema("pairing refers to an unknown variable"));
                }
                if self.variables.len() >= 24 {
                    return Err(self.schema("Hall check is limited to 23 variables"));
                }
            }
        }
        Ok(pairs)
    }
}

/// Colored-edge counts around one uncolored edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodRow {
    pub edge: usize,
    /// Colored edges within facial distance `ell`.
    pub colored: usize,
    /// The same, counting identified edges once since they share a color.
    pub classes: usize,
}

/// For each edge of `uncolored`, the colored edges (all edges not in
/// `uncolored`) within facial distance `ell`. Each pair in `identified` is
/// one color class.
pub fn neighborhood_audit(
    g: &EmbeddedGraph,
    ell: usize,
    uncolored: &[usize],
    identified: &[(usize, usize)],
) -> Result<Vec<NeighborhoodRow>, EmbeddingError> {
    let blank: BTreeSet<usize> = uncolored.iter().copied().collect();
    for &(e, f) in identified {
        g.check_edge(e)?;
        g.check_edge(f)?;
    }
    let class = |x: usize| identified.iter().find(|&&(_, f)| f == x).map_or(x, |&(e, _)| e);
    uncolored
        .iter()
        .map(|&edge| {
            let colored: Vec<usize> =
                g.facial_neighborhood(ell, edge)?.into_iter().filter(|x| !blank.contains(x)).collect();
            let classes: BTreeSet<usize> = colored.iter().map(|&x| class(x)).collect();
            Ok(NeighborhoodRow { edge, colored: colored.len(), classes: classes.len() })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub variable: usize,
    #[serde(flatten)]
    pub counts: NeighborhoodRow,
    pub claimed: u8,
    /// Palette size minus the colored classes nearby.
    pub recomputed: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub configuration: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub neighborhood: Vec<AuditRow>,
    /// Conflicts among variables measured on the host, 1-based.
    pub derived_pairs: Vec<(usize, usize)>,
    #[serde(serialize_with = "serialize_optional_bigint")]
    pub coefficient: Option<BigInt>,
    pub witness: Option<Witness>,
}

fn serialize_optional_bigint<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => serialize_bigint(v, s),
        None => s.serialize_none(),
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "configuration {}: {}", self.configuration, if self.passed { "certified" } else { "NOT certified" })?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        for row in &self.neighborhood {
            writeln!(
                f,
                "  X{} = edge {}: {} colored neighbors in {} classes, {} available (claimed {})",
                row.variable + 1,
                row.counts.edge,
                row.counts.colored,
                row.counts.classes,
                row.recomputed,
                row.claimed
            )?;
        }
        Ok(())
    }
}

/// Degree-list theorem on each component of `graph` with lists of the given
/// sizes. Lists are initial segments of the palette; the theorem's
/// conclusion depends only on sizes and structure.
fn degree_list(graph: &SimpleGraph, sizes: &[usize]) -> (bool, String) {
    let mut notes = Vec::new();
    for part in graph.components() {
        let sub = graph.induced(&part);
        let lists: Vec<ColorSet> = part.iter().map(|&v| ColorSet::palette(sizes[v] as u32)).collect();
        match degree_feasible_colorable(&sub, &lists, 1_000_000) {
            Ok(choice) if choice.guaranteed() => notes.push(format!("{:?}: {:?}", part, choice.guarantee)),
            Ok(_) => return (false, format!("component {part:?} is a Gallai tree with tight lists")),
            Err(ChoosabilityError::ListTooShort { vertex, size, degree }) => {
                return (false, format!("variable {} has {size} colors but {degree} conflicts", part[vertex] + 1))
            }
            Err(e) => return (false, e.to_string()),
        }
    }
    (true, notes.join("; "))
}

fn check_surgery(config: &Configuration, checks: &mut Vec<Check>) -> Result<Option<Surgery>, ReducibilityError> {
    let g = &config.host;
    let surgery = match config.surgery.apply(g) {
        Ok(s) => s,
        Err(e) => {
            checks.push(Check { name: "surgery".into(), passed: false, detail: e.to_string() });
            return Ok(None);
        }
    };
    let blank: BTreeSet<usize> = config.uncolored().into_iter().collect();
    let colored: Vec<usize> = (0..g.edge_count()).filter(|e| !blank.contains(e)).collect();
    let lost: Vec<usize> = colored.iter().copied().filter(|&e| surgery.edge_map[e].is_none()).collect();
    checks.push(Check {
        name: "surgery".into(),
        passed: lost.is_empty(),
        detail: if lost.is_empty() {
            format!(
                "{} vertices, {} edges after surgery; every colored edge survives",
                surgery.graph.vertex_count(),
                surgery.graph.edge_count()
            )
        } else {
            format!("colored edges {lost:?} are removed by the surgery")
        },
    });
    if !lost.is_empty() {
        return Ok(Some(surgery));
    }

    let mut far = true;
    let mut far_detail = Vec::new();
    for (e, f) in config.surgery.identified() {
        let d = g.facial_distance(e, f)?;
        far &= d.is_none_or(|d| d > config.ell);
        far_detail.push(format!(
            "edges {e} and {f} at facial distance {}",
            d.map_or("infinity".into(), |d| d.to_string())
        ));
    }
    if !far_detail.is_empty() {
        checks.push(Check { name: "identified edges apart".into(), passed: far, detail: far_detail.join("; ") });
    }

    let before = conflict_graph(g, config.ell).map_err(|e| config.schema(e.to_string()))?;
    let after = conflict_graph(&surgery.graph, config.ell).map_err(|e| config.schema(e.to_string()))?;
    let mut broken = Vec::new();
    for (i, &e) in colored.iter().enumerate() {
        for &f in &colored[i + 1..] {
            if !before.graph.has_edge(e, f) {
                continue;
            }
            let (a, b) = (surgery.edge_map[e].expect("kept"), surgery.edge_map[f].expect("kept"));
            if a == b || !after.graph.has_edge(a, b) {
                broken.push((e, f));
            }
        }
    }
    checks.push(Check {
        name: "conflicts preserved".into(),
        passed: broken.is_empty(),
        detail: if broken.is_empty() {
            format!("all {} conflicts between colored edges persist", before.graph.edge_count())
        } else {
            format!("conflicts {broken:?} are lost, so the restriction may be improper")
        },
    });
    Ok(Some(surgery))
}

/// Runs every check on `config`. Deterministic; errors only on schema
/// violations, never on a failed check.
pub fn check(config: &Configuration) -> Result<CertificateReport, ReducibilityError> {
    let transcribed = config.validate()?;
    let mut checks = Vec::new();
    check_surgery(config, &mut checks)?;

    let identified = config.surgery.identified();
    let counts = neighborhood_audit(&config.host, config.ell, &config.uncolored(), &identified)?;
    let mut rows = Vec::new();
    let mut counts = counts.into_iter();
    for (variable, edge) in config.variables.iter().enumerate() {
        if edge.is_some() {
            let counts = counts.next().expect("one row per uncolored edge");
            rows.push(AuditRow {
                variable,
                recomputed: config.palette.saturating_sub(counts.classes as u32),
                counts,
                claimed: config.bounds[variable],
            });
        }
    }
    let short: Vec<String> = rows
        .iter()
        .filter(|r| r.recomputed < r.claimed as u32)
        .map(|r| format!("X{} has {} < {}", r.variable + 1, r.recomputed, r.claimed))
        .collect();
    checks.push(Check {
        name: "available colors".into(),
        passed: short.is_empty(),
        detail: if short.is_empty() {
            "every variable keeps at least its claimed number of colors".into()
        } else {
            short.join(", ")
        },
    });

    let conflicts = conflict_graph(&config.host, config.ell).map_err(|e| config.schema(e.to_string()))?;
    let mut derived = Vec::new();
    for (i, a) in config.variables.iter().enumerate() {
        for (j, b) in config.variables.iter().enumerate().skip(i + 1) {
            if let (Some(a), Some(b)) = (a, b) {
                if conflicts.graph.has_edge(*a, *b) {
                    derived.push((i + 1, j + 1));
                }
            }
        }
    }
    let listed: BTreeSet<(usize, usize)> =
        transcribed.unordered().into_iter().map(|(i, j)| (i + 1, j + 1)).collect();
    let missing: Vec<_> = derived.iter().filter(|p| !listed.contains(p)).collect();
    checks.push(Check {
        name: "conflicts transcribed".into(),
        passed: missing.is_empty(),
        detail: if missing.is_empty() {
            format!("{} host conflicts, all among the {} listed", derived.len(), listed.len())
        } else {
            format!("host conflicts {missing:?} are not listed")
        },
    });

    let vars = config.variables.len();
    let sizes: Vec<usize> = config.bounds.iter().map(|&b| b as usize).collect();
    let conflict_vars = SimpleGraph::from_edges(
        vars,
        &transcribed.pairs().to_vec(),
    )
    .expect("validated pairs");
    let mut coefficient_value = None;
    let mut witness = None;

    match &config.certificate {
        Certificate::DegreeList => {
            let (passed, detail) = degree_list(&conflict_vars, &sizes);
            checks.push(Check { name: "degree-list extension".into(), passed, detail });
        }
        Certificate::Nullstellensatz { target, lemma } => {
            let target = Monomial::new(target.clone())?;
            let c = coefficient(&transcribed, &target)?;
            checks.push(Check {
                name: "coefficient".into(),
                passed: !c.value.is_zero(),
                detail: format!("coefficient of {} is {}{}", target, c.value, c.note.map(|n| format!(" ({n})")).unwrap_or_default()),
            });
            let over: Vec<String> = target
                .exponents()
                .iter()
                .zip(&config.bounds)
                .enumerate()
                .filter(|(_, (k, b))| k >= b)
                .map(|(i, (k, b))| format!("X{} exponent {k} with {b} colors", i + 1))
                .collect();
            checks.push(Check {
                name: "exponents below list sizes".into(),
                passed: over.is_empty(),
                detail: if over.is_empty() { "every exponent is below its bound".into() } else { over.join(", ") },
            });
            if let Some(id) = lemma {
                let published = lemma_polynomial(*id).published;
                checks.push(Check {
                    name: "published value".into(),
                    passed: c.value == BigInt::from(published),
                    detail: format!("{id} lists {published}, computed {}", c.value),
                });
            }
            coefficient_value = Some(c.value);
            let from_host = ConflictPairs::from_one_based(vars, &derived)?;
            let found = cn_witness(&from_host, &config.bounds)?;
            checks.push(Check {
                name: "host conflicts certified".into(),
                passed: found.is_some(),
                detail: match &found {
                    Some(w) => format!("{} has coefficient {}", w.monomial, w.coefficient),
                    None => "no monomial below the bounds survives".into(),
                },
            });
            witness = found;
        }
        Certificate::HallWithPairing { pairs: far } => {
            for &(a, b) in far {
                let rest: Vec<usize> = (0..vars).filter(|&v| v != a && v != b).collect();
                let sub = conflict_vars.induced(&rest);
                let reduced: Vec<usize> = rest.iter().map(|&v| sizes[v].saturating_sub(1)).collect();
                let apart = !conflict_vars.has_edge(a, b);
                let (ok, detail) = degree_list(&sub, &reduced);
                checks.push(Check {
                    name: format!("pair X{} X{}", a + 1, b + 1),
                    passed: apart && ok,
                    detail: if apart { detail } else { "the pair is in conflict".into() },
                });
            }
            let unions: Vec<(Vec<usize>, usize)> = far.iter().map(|&(a, b)| (vec![a, b], sizes[a] + sizes[b])).collect();
            let violator = hall_by_bounds(&sizes, &unions);
            checks.push(Check {
                name: "Hall condition".into(),
                passed: violator.is_none(),
                detail: match violator {
                    None => "every family of variables has enough colors".into(),
                    Some(v) => format!("variables {v:?} may lack distinct colors"),
                },
            });
        }
    }

    Ok(CertificateReport {
        configuration: config.name.clone(),
        passed: checks.iter().all(|c| c.passed),
        checks,
        neighborhood: rows,
        derived_pairs: derived,
        coefficient: coefficient_value,
        witness,
    })
}

/// Looks up a catalog configuration by name.
pub fn configuration(name: &str) -> Result<Configuration, ReducibilityError> {
    catalog()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| ReducibilityError::UnknownConfiguration(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::generate::cycle;

    #[test]
    fn whole_catalog_certifies() {
        for config in catalog() {
            let report = check(&config).unwrap();
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn audit_on_bare_cycle() {
        let c7 = cycle(7).unwrap();
        let rows = neighborhood_audit(&c7, 3, &(0..7).collect::<Vec<_>>(), &[]).unwrap();
        assert!(rows.iter().all(|r| r.colored == 0));
    }

    #[test]
    fn json_round_trip() {
        let config = configuration("eight-face").unwrap();
        let back = Configuration::from_json(&config.to_json()).unwrap();
        assert_eq!(check(&back).unwrap(), check(&config).unwrap());
    }

    #[test]
    fn overclaimed_bounds_fail() {
        let mut config = configuration("three-thread").unwrap();
        config.bounds = vec![2];
        let report = check(&config).unwrap();
        assert!(!report.passed);
        assert!(report.checks.iter().any(|c| c.name == "available colors" && !c.passed));
    }
}
