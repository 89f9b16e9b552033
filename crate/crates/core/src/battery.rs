//! Batch verification: run every theorem check over a configured family of
//! rings and collect one report per ring.
//!
//! A ring in the config is either a ring-expression string (`"Z(6)"`,
//! `"M(2, Z(2))"`) or `@path/to/ring.json` for an explicit-table ring file.
//! Rings that fail to construct are recorded on their report's `error`
//! field and do not abort the rest of the battery; only a failed theorem
//! entry (hypotheses satisfied, conclusion violated) counts as a battery
//! failure.

use serde::{Deserialize, Serialize};

use crate::ideals::{enumerate_ideals, ideal_generated_by, is_subring};
use crate::parse::parse_ring_expr;
use crate::ring::FiniteRing;
use crate::structure::RingHom;
use crate::subset::Subset;
use crate::theorems::{
    verify_element_corollaries, verify_hom_pushforward, verify_monotonicity, verify_p_ideal,
    verify_prime_ideal_containment, verify_prime_implies_trivial, verify_product_theorem,
    verify_s_set_ideal_props, verify_semiprimeness_containment, verify_square_zero,
    verify_subring_containment, CheckStatus, TheoremEntry, TheoremId,
};

/// Ceiling on distinct subsets fed to the per-subset checks of one ring.
pub const SUBSET_CAP: usize = 64;
/// Ceiling on `(a, I)` cells fed to the S-set proposition per ring.
pub const S_SET_CELL_CAP: usize = 256;
/// Product-theorem cells are generated only while `|R|^2` stays at or
/// below this bound.
pub const PRODUCT_ORDER_CAP: usize = 256;
/// Ceiling on auto-generated homomorphisms per ring.
pub const AUTO_HOM_CAP: usize = 8;

/// Which subsets of each ring the per-subset verifiers receive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetPolicy {
    /// Whole ring, then principal ideals by ascending generator, then
    /// singletons, then any remaining ideals — deduplicated in that
    /// priority order and capped at [`SUBSET_CAP`].
    #[default]
    Default,
    /// Whole ring only.
    Whole,
}

/// An explicitly configured homomorphism. When a config lists any homs,
/// automatic hom generation is disabled and exactly these are checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum HomSpec {
    /// The identity map on `ring`.
    Identity { ring: String },
    /// The projection `ring -> ring / ideal`; `ideal` lists member labels.
    Quotient { ring: String, ideal: Vec<String> },
    /// The inclusion of the subring with the listed member labels.
    Inclusion { ring: String, subring: Vec<String> },
}

impl HomSpec {
    pub fn ring_ref(&self) -> &str {
        match self {
            HomSpec::Identity { ring }
            | HomSpec::Quotient { ring, .. }
            | HomSpec::Inclusion { ring, .. } => ring,
        }
    }
}

/// A battery run description, deserializable from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatteryConfig {
    /// Ring references: expression strings, or `@file.json` paths.
    pub rings: Vec<String>,
    #[serde(default)]
    pub subset_policy: SubsetPolicy,
    #[serde(default)]
    pub homs: Vec<HomSpec>,
}

impl BatteryConfig {
    pub fn from_json_str(text: &str) -> Result<BatteryConfig, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The stock battery: cyclic rings through order 12, zero-multiplication
    /// rings through order 8, every scaled ring on four elements, the two
    /// even-residue subrings featured in the worked examples, a 2x2 matrix
    /// ring, and two product rings.
    pub fn default_battery() -> BatteryConfig {
        let mut rings: Vec<String> = Vec::new();
        for n in 1..=12 {
            rings.push(format!("Z({n})"));
        }
        for n in 1..=8 {
            rings.push(format!("N({n})"));
        }
        for e in 0..4 {
            rings.push(format!("SZ(4, {e})"));
        }
        rings.push("2Z(16)".to_string());
        rings.push("2Z(4)".to_string());
        rings.push("M(2, Z(2))".to_string());
        rings.push("Z(2) x Z(3)".to_string());
        rings.push("N(2) x N(2)".to_string());
        BatteryConfig {
            rings,
            subset_policy: SubsetPolicy::Default,
            homs: Vec::new(),
        }
    }
}

/// Pass/fail/skip tallies for one report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

/// All theorem entries for one ring, ordered by theorem id.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    /// Ring descriptor, or the raw config reference when construction failed.
    pub ring: String,
    pub entries: Vec<TheoremEntry>,
    pub summary: ReportSummary,
    /// Construction failure, recorded instead of entries; never set on a
    /// ring that produced entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    fn new(ring: String, mut entries: Vec<TheoremEntry>) -> VerificationReport {
        entries.sort_by_key(|e| e.theorem); // stable: keeps generation order per id
        let mut summary = ReportSummary {
            pass: 0,
            fail: 0,
            skip: 0,
        };
        for entry in &entries {
            match entry.status() {
                CheckStatus::Pass => summary.pass += 1,
                CheckStatus::Fail => summary.fail += 1,
                CheckStatus::Skip => summary.skip += 1,
            }
        }
        VerificationReport {
            ring,
            entries,
            summary,
            error: None,
        }
    }

    fn construction_error(ring: String, message: String) -> VerificationReport {
        VerificationReport {
            ring,
            entries: Vec::new(),
            summary: ReportSummary {
                pass: 0,
                fail: 0,
                skip: 0,
            },
            error: Some(message),
        }
    }

    /// True when some entry had its hypotheses satisfied but its conclusion
    /// violated. Construction errors are recorded, not counted as failures.
    pub fn has_failure(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.status() == CheckStatus::Fail)
    }
}

/// Builds a ring from a config reference: `@path` loads a ring file (the
/// reference itself becomes the descriptor), anything else parses as a
/// ring expression. Errors come back as display strings for report
/// embedding.
pub fn resolve_ring_ref(reference: &str) -> Result<FiniteRing, String> {
    if let Some(path) = reference.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read ring file {path:?}: {e}"))?;
        let ring = FiniteRing::from_json_str(&text)
            .map_err(|e| format!("invalid ring file {path:?}: {e}"))?;
        Ok(ring.with_descriptor(reference))
    } else {
        let expr = parse_ring_expr(reference).map_err(|e| e.to_string())?;
        expr.build().map_err(|e| e.to_string())
    }
}

/// The subset family a policy yields for one ring.
pub fn battery_subsets(ring: &FiniteRing, policy: SubsetPolicy) -> Vec<Subset> {
    let whole = Subset::whole(ring);
    match policy {
        SubsetPolicy::Whole => vec![whole],
        SubsetPolicy::Default => {
            let mut out = vec![whole];
            for x in ring.elements() {
                let generator = Subset::singleton(ring, x).expect("element index in range");
                let principal = ideal_generated_by(ring, &generator);
                if !out.contains(&principal) {
                    out.push(principal);
                }
            }
            for x in ring.elements() {
                let singleton = Subset::singleton(ring, x).expect("element index in range");
                if !out.contains(&singleton) {
                    out.push(singleton);
                }
            }
            for ideal in enumerate_ideals(ring) {
                if !out.contains(&ideal) {
                    out.push(ideal);
                }
            }
            out.truncate(SUBSET_CAP);
            out
        }
    }
}

fn auto_homs(ring: &FiniteRing) -> Vec<RingHom> {
    let mut homs = vec![RingHom::identity(ring)
        .validate()
        .expect("identity map is a homomorphism")];
    let ideals = enumerate_ideals(ring);
    for ideal in &ideals {
        if homs.len() >= AUTO_HOM_CAP {
            return homs;
        }
        let (_, projection) = ring
            .quotient(ideal)
            .expect("quotient by an enumerated ideal");
        homs.push(projection);
    }
    for ideal in &ideals {
        if homs.len() >= AUTO_HOM_CAP {
            return homs;
        }
        if is_subring(ring, ideal).expect("enumerated ideal is nonempty") {
            let inclusion = RingHom::inclusion(ring, ideal)
                .expect("ideal closed under multiplication is a subring")
                .validate()
                .expect("inclusion map is a homomorphism");
            homs.push(inclusion);
        }
    }
    homs
}

fn subset_from_labels(ring: &FiniteRing, labels: &[String]) -> Result<Subset, String> {
    if labels.is_empty() {
        return Err("label list must be nonempty".to_string());
    }
    let mut subset = Subset::empty(ring);
    for label in labels {
        let index = ring.index_of_label(label).ok_or_else(|| {
            format!("no element labeled {label:?} in {}", ring.descriptor())
        })?;
        subset.insert(index);
    }
    Ok(subset)
}

fn build_hom(ring: &FiniteRing, spec: &HomSpec) -> Result<RingHom, String> {
    match spec {
        HomSpec::Identity { .. } => RingHom::identity(ring)
            .validate()
            .map_err(|e| e.to_string()),
        HomSpec::Quotient { ideal, .. } => {
            let subset = subset_from_labels(ring, ideal)?;
            let (_, projection) = ring.quotient(&subset).map_err(|e| e.to_string())?;
            Ok(projection)
        }
        HomSpec::Inclusion { subring, .. } => {
            let subset = subset_from_labels(ring, subring)?;
            RingHom::inclusion(ring, &subset)
                .map_err(|e| e.to_string())?
                .validate()
                .map_err(|e| e.to_string())
        }
    }
}

/// All entries for one successfully constructed ring.
fn ring_entries(ring: &FiniteRing, config: &BatteryConfig) -> Vec<TheoremEntry> {
    let mut entries = Vec::new();
    let whole = Subset::whole(ring);
    let subsets = battery_subsets(ring, config.subset_policy);

    for a in &subsets {
        entries.push(
            verify_monotonicity(ring, a, &whole).expect("battery subset is contained in R"),
        );
        entries.push(
            verify_semiprimeness_containment(ring, a).expect("battery subset is nonempty"),
        );
        entries
            .push(verify_subring_containment(ring, a).expect("battery subset is nonempty"));
        entries.push(verify_p_ideal(ring, a).expect("battery subset is nonempty"));
    }

    let mut cells = 0usize;
    'cells: for i in &subsets {
        for a in ring.elements() {
            if cells == S_SET_CELL_CAP {
                break 'cells;
            }
            entries.push(
                verify_s_set_ideal_props(ring, a, i).expect("battery cell is well-formed"),
            );
            cells += 1;
        }
    }

    entries.push(verify_square_zero(ring));
    entries.push(verify_prime_implies_trivial(ring));
    entries.push(verify_element_corollaries(ring));
    entries.push(verify_prime_ideal_containment(ring));

    if ring.order() * ring.order() <= PRODUCT_ORDER_CAP {
        entries.push(
            verify_product_theorem(ring, ring, &whole, &whole)
                .expect("product order stays under the element cap"),
        );
        if let Some(proper) = enumerate_ideals(ring)
            .iter()
            .find(|i| i.len() > 1 && i.len() < ring.order())
        {
            entries.push(
                verify_product_theorem(ring, ring, proper, &whole)
                    .expect("product order stays under the element cap"),
            );
        }
    }

    if config.homs.is_empty() {
        for hom in auto_homs(ring) {
            entries.push(verify_hom_pushforward(&hom).expect("auto hom is validated"));
        }
    }
    entries
}

/// Runs the whole battery. Reports come back sorted by ring descriptor,
/// entries within a report by theorem id. An empty config yields an empty
/// report list (a vacuous success).
pub fn run_battery(config: &BatteryConfig) -> Vec<VerificationReport> {
    // One slot per configured ring, keyed by the raw reference so explicit
    // homs can attach to it.
    let mut slots: Vec<(String, Result<FiniteRing, String>, Vec<TheoremEntry>)> = Vec::new();
    for reference in &config.rings {
        let resolved = resolve_ring_ref(reference);
        let entries = match &resolved {
            Ok(ring) => ring_entries(ring, config),
            Err(_) => Vec::new(),
        };
        slots.push((reference.clone(), resolved, entries));
    }

    for spec in &config.homs {
        let reference = spec.ring_ref().to_string();
        if !slots.iter().any(|(r, _, _)| *r == reference) {
            let resolved = resolve_ring_ref(&reference);
            slots.push((reference.clone(), resolved, Vec::new()));
        }
        let slot = slots
            .iter_mut()
            .find(|(r, _, _)| *r == reference)
            .expect("slot just ensured");
        match &slot.1 {
            Err(_) => {} // the ring's own construction error already tells the story
            Ok(ring) => match build_hom(ring, spec) {
                Ok(hom) => slot
                    .2
                    .push(verify_hom_pushforward(&hom).expect("configured hom is validated")),
                Err(message) => slot.2.push(TheoremEntry::skip(
                    TheoremId::HomPushforward,
                    format!("skipped: hom construction failed: {message}"),
                )),
            },
        }
    }

    let mut reports: Vec<VerificationReport> = slots
        .into_iter()
        .map(|(reference, resolved, entries)| match resolved {
            Ok(ring) => VerificationReport::new(ring.descriptor().to_string(), entries),
            Err(message) => VerificationReport::construction_error(reference, message),
        })
        .collect();
    reports.sort_by(|a, b| a.ring.cmp(&b.ring));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_battery_shape() {
        let config = BatteryConfig::default_battery();
        assert_eq!(config.rings.len(), 29, "12 + 8 + 4 + 5 stock rings");
        assert_eq!(config.subset_policy, SubsetPolicy::Default);
        assert!(config.homs.is_empty());
        assert!(config.rings.contains(&"2Z(16)".to_string()));
        assert!(config.rings.contains(&"M(2, Z(2))".to_string()));
        assert!(config.rings.contains(&"N(2) x N(2)".to_string()));
    }

    #[test]
    fn config_round_trips_through_json() {
        let config = BatteryConfig {
            rings: vec!["Z(6)".into(), "@rings/custom.json".into()],
            subset_policy: SubsetPolicy::Whole,
            homs: vec![HomSpec::Quotient {
                ring: "Z(6)".into(),
                ideal: vec!["0".into(), "3".into()],
            }],
        };
        let json = serde_json::to_string(&config).unwrap();
        assert!(json.contains("\"subset_policy\":\"whole\""), "{json}");
        assert!(json.contains("\"kind\":\"quotient\""), "{json}");
        let back = BatteryConfig::from_json_str(&json).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn config_rejects_unknown_fields() {
        assert!(BatteryConfig::from_json_str(r#"{"rings": [], "typo": 1}"#).is_err());
        assert!(BatteryConfig::from_json_str(r#"{"rings": ["Z(2)"], "subset_policy": "everything"}"#).is_err());
    }

    #[test]
    fn subset_policy_default_for_z6() {
        let ring = FiniteRing::zn(6).unwrap();
        let subsets = battery_subsets(&ring, SubsetPolicy::Default);
        // whole, then {0}, {0,2,4}, {0,3} from principal ideals, then the
        // five nonzero singletons; enumerated ideals add nothing new.
        assert_eq!(subsets.len(), 9);
        assert_eq!(subsets[0], Subset::whole(&ring));
        assert!(subsets.contains(&Subset::from_indices(&ring, [0, 3]).unwrap()));
        assert!(subsets.contains(&Subset::from_indices(&ring, [0, 2, 4]).unwrap()));
        assert!(subsets.contains(&Subset::singleton(&ring, 5).unwrap()));
        let mut seen = std::collections::HashSet::new();
        for s in &subsets {
            assert!(seen.insert(s.clone()), "duplicate subset in policy output");
        }
    }

    #[test]
    fn subset_policy_whole_is_single() {
        let ring = FiniteRing::zn(6).unwrap();
        let subsets = battery_subsets(&ring, SubsetPolicy::Whole);
        assert_eq!(subsets, vec![Subset::whole(&ring)]);
    }

    #[test]
    fn resolve_ring_ref_parses_expressions() {
        let ring = resolve_ring_ref("2Z(16)").unwrap();
        assert_eq!(ring.order(), 8);
        assert_eq!(ring.descriptor(), "2Z(16)");
        let err = resolve_ring_ref("Z(6").unwrap_err();
        assert!(err.contains("byte 3"), "{err}");
    }

    #[test]
    fn resolve_ring_ref_loads_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("plain.json");
        let ring = FiniteRing::zn(3).unwrap();
        std::fs::write(&path, ring.to_json_string()).unwrap();
        let reference = format!("@{}", path.display());
        let loaded = resolve_ring_ref(&reference).unwrap();
        assert_eq!(loaded.order(), 3);
        assert_eq!(loaded.descriptor(), reference, "file rings keep their reference as descriptor");
        assert!(resolve_ring_ref("@/no/such/file.json").unwrap_err().contains("cannot read"));
    }

    #[test]
    fn empty_config_is_a_vacuous_success() {
        let config = BatteryConfig {
            rings: vec![],
            subset_policy: SubsetPolicy::Default,
            homs: vec![],
        };
        let reports = run_battery(&config);
        assert!(reports.is_empty());
    }

    #[test]
    fn construction_errors_are_recorded_not_fatal() {
        let config = BatteryConfig {
            rings: vec!["Z(0)".into(), "Z(4)".into()],
            subset_policy: SubsetPolicy::Whole,
            homs: vec![],
        };
        let reports = run_battery(&config);
        assert_eq!(reports.len(), 2);
        // Sorted by descriptor: "Z(0)" < "Z(4)".
        assert_eq!(reports[0].ring, "Z(0)");
        assert!(reports[0].error.as_deref().unwrap().contains("order must be at least 1"));
        assert!(reports[0].entries.is_empty());
        assert!(!reports[0].has_failure(), "construction errors are not theorem failures");
        assert_eq!(reports[1].ring, "Z(4)");
        assert!(reports[1].error.is_none());
        assert!(!reports[1].has_failure());
        assert!(reports[1].summary.pass > 0);
    }

    #[test]
    fn reports_sort_by_descriptor_and_entries_by_theorem() {
        let config = BatteryConfig {
            rings: vec!["Z(4)".into(), "N(3)".into()],
            subset_policy: SubsetPolicy::Whole,
            homs: vec![],
        };
        let reports = run_battery(&config);
        assert_eq!(reports[0].ring, "N(3)");
        assert_eq!(reports[1].ring, "Z(4)");
        for report in &reports {
            let ids: Vec<TheoremId> = report.entries.iter().map(|e| e.theorem).collect();
            let mut sorted = ids.clone();
            sorted.sort();
            assert_eq!(ids, sorted, "entries ordered by theorem id in {}", report.ring);
        }
    }

    #[test]
    fn explicit_homs_suppress_auto_homs() {
        let config = BatteryConfig {
            rings: vec!["Z(4)".into()],
            subset_policy: SubsetPolicy::Whole,
            homs: vec![HomSpec::Quotient {
                ring: "Z(4)".into(),
                ideal: vec!["0".into(), "2".into()],
            }],
        };
        let reports = run_battery(&config);
        assert_eq!(reports.len(), 1);
        let hom_entries: Vec<&TheoremEntry> = reports[0]
            .entries
            .iter()
            .filter(|e| e.theorem == TheoremId::HomPushforward)
            .collect();
        assert_eq!(hom_entries.len(), 1, "exactly the configured hom");
        assert_eq!(hom_entries[0].status(), CheckStatus::Pass, "{}", hom_entries[0].notes);
        assert!(hom_entries[0].notes.contains("not injective"), "{}", hom_entries[0].notes);
    }

    #[test]
    fn bad_hom_spec_becomes_a_skip_entry() {
        let config = BatteryConfig {
            rings: vec!["Z(4)".into()],
            subset_policy: SubsetPolicy::Whole,
            homs: vec![HomSpec::Quotient {
                ring: "Z(4)".into(),
                ideal: vec!["0".into(), "7".into()],
            }],
        };
        let reports = run_battery(&config);
        let entry = reports[0]
            .entries
            .iter()
            .find(|e| e.theorem == TheoremId::HomPushforward)
            .unwrap();
        assert_eq!(entry.status(), CheckStatus::Skip);
        assert!(entry.notes.contains("no element labeled \"7\""), "{}", entry.notes);
        assert!(!reports[0].has_failure());
    }

    #[test]
    fn hom_only_ring_gets_its_own_report() {
        let config = BatteryConfig {
            rings: vec!["Z(4)".into()],
            subset_policy: SubsetPolicy::Whole,
            homs: vec![HomSpec::Identity {
                ring: "Z(6)".into(),
            }],
        };
        let reports = run_battery(&config);
        assert_eq!(reports.len(), 2);
        assert_eq!(reports[1].ring, "Z(6)");
        assert_eq!(reports[1].entries.len(), 1);
        assert_eq!(reports[1].entries[0].theorem, TheoremId::HomPushforward);
        // The Z(4) report keeps only its own checks (no hom entries at all:
        // the explicit list owns hom generation and lists none for Z(4)).
        assert!(reports[0]
            .entries
            .iter()
            .all(|e| e.theorem != TheoremId::HomPushforward));
    }

    #[test]
    fn auto_homs_are_capped_and_validated() {
        let ring = FiniteRing::zn(12).unwrap();
        let homs = auto_homs(&ring);
        assert!(homs.len() <= AUTO_HOM_CAP);
        assert_eq!(homs.len(), AUTO_HOM_CAP, "Z(12) has enough ideals to hit the cap");
        for h in &homs {
            assert!(h.is_validated());
        }
    }

    #[test]
    fn mini_battery_exercises_every_theorem_nonvacuously() {
        let config = BatteryConfig {
            rings: vec![
                "Z(6)".into(),
                "2Z(16)".into(),
                "N(4)".into(),
                "M(2, Z(2))".into(),
            ],
            subset_policy: SubsetPolicy::Default,
            homs: vec![],
        };
        let reports = run_battery(&config);
        assert_eq!(reports.len(), 4);
        for report in &reports {
            assert!(!report.has_failure(), "failures in {}: {:?}", report.ring, report.entries.iter().filter(|e| e.status() == CheckStatus::Fail).collect::<Vec<_>>());
            assert!(report.error.is_none());
        }
        for id in TheoremId::ALL {
            let non_skip = reports.iter().flat_map(|r| &r.entries).any(|e| {
                e.theorem == id && e.status() != CheckStatus::Skip
            });
            assert!(non_skip, "theorem {id} never ran non-vacuously");
        }
    }

    #[test]
    fn report_serialization_schema() {
        let config = BatteryConfig {
            rings: vec!["Z(4)".into()],
            subset_policy: SubsetPolicy::Whole,
            homs: vec![],
        };
        let reports = run_battery(&config);
        let json = serde_json::to_value(&reports[0]).unwrap();
        assert_eq!(json["ring"], "Z(4)");
        assert!(json["entries"].is_array());
        assert!(json["summary"]["pass"].as_u64().unwrap() > 0);
        assert_eq!(json["summary"]["fail"], 0);
        assert!(json.get("error").is_none(), "error key elided when clean");
        let first = &json["entries"][0];
        assert!(first.get("theorem").is_some());
        assert!(first.get("status").is_some());
        assert!(first.get("witnesses").is_some());
        assert!(first.get("notes").is_some());
    }
}
