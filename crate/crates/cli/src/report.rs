use serde::Serialize;

use transversal_core::analysis::{
    ConstraintWitness, ConversionReport, CrossCheck, EngineRun, IrrationalReport, OverlapReport, TwoQubitReport,
    Verdict,
};
use transversal_core::angles::{HierarchyLevel, RationalAngle};

/// Machine-readable result of one command. Field names are stable.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub code_name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<OverlapReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible_set: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_qubit_family: Option<TwoQubitReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_two_qubit_family: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irrational: Option<IrrationalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conversion: Option<ConversionReport>,
    pub hierarchy: Vec<HierarchyEntry>,
    pub witnesses: Vec<ConstraintWitness>,
    pub cross_checks: Vec<CrossCheckEntry>,
    /// `ran` when some oracle ran, otherwise `skipped: <reason>`.
    pub oracle: String,
    pub engine_agreement: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct HierarchyEntry {
    pub gate: String,
    pub level: HierarchyLevel,
}

#[derive(Debug, Serialize)]
pub struct CrossCheckEntry {
    pub gate: String,
    pub check: CrossCheck,
}

impl Report {
    pub fn new(command: &str, code_name: String) -> Self {
        Self {
            command: command.into(),
            code_name,
            engine_agreement: true,
            oracle: "skipped: not requested".into(),
            ..Self::default()
        }
    }

    pub fn add_cross_check(&mut self, gate: String, check: CrossCheck) {
        self.engine_agreement &= check.agree;
        self.cross_checks.push(CrossCheckEntry { gate, check });
        self.update_oracle_marker();
    }

    fn update_oracle_marker(&mut self) {
        let oracle_runs: Vec<&EngineRun> = self
            .cross_checks
            .iter()
            .flat_map(|c| c.check.runs.iter())
            .filter(|(name, _)| name == "oracle" || name == "float")
            .map(|(_, r)| r)
            .collect();
        self.oracle = if oracle_runs.iter().any(|r| r.summary().is_some()) {
            "ran".into()
        } else {
            match oracle_runs.iter().find_map(|r| match r {
                EngineRun::Skipped(why) => Some(why.clone()),
                EngineRun::Ran(_) => None,
            }) {
                Some(why) => format!("skipped: {why}"),
                None => "skipped: not requested".into(),
            }
        };
    }

    pub fn render_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("{} {}", self.command, self.code_name));
        if let Some(c) = &self.classification {
            match c.k_max {
                Some(k) => out.push(format!("k_max: {k}")),
                None => out.push("k_max: none (Z(1) is not transversal)".into()),
            }
            if let Some(p) = &c.logical_action {
                out.push(format!("logical action at k_max: {}", angles(p)));
            }
            out.push(format!(
                "odd denominators up to {}: {} angles, all rejected: {}",
                c.odd_sweep.q_cap,
                c.odd_sweep.entries.len(),
                c.odd_sweep.all_rejected
            ));
            for s in &c.skipped {
                out.push(format!("engine skipped: {s}"));
            }
        }
        if let Some(s) = &self.admissible_set {
            out.push(format!("admissible angles: {s}"));
        }
        if let Some(v) = &self.verdict {
            out.push(format!("preserves codespace: {}", v.preserves_codespace));
            if let Some(p) = &v.logical_diagonal {
                out.push(format!("logical phases: {}", angles(p)));
                out.push(format!("nontrivial: {}", v.nontrivial));
            }
        }
        if let Some(f) = &self.two_qubit_family {
            out.push(format!("two-qubit family (k = {}): {}", f.k, f.describe()));
        }
        if let Some(m) = self.in_two_qubit_family {
            out.push(format!("in two-qubit family: {m}"));
        }
        if let Some(r) = &self.irrational {
            out.push(format!(
                "irrational angles forced trivial: {} (nullspace dimension {})",
                r.logical_phase_forced_zero, r.nullspace_dimension
            ));
        }
        if let Some(c) = &self.conversion {
            out.push(format!("maps source into target: {}", c.verdict.preserves_codespace));
            if let Some(m) = c.failing_state {
                out.push(format!("first state leaving the target: {m}"));
            }
            out.push(format!("gate^4 preserves source: {}", c.d4_preserves_source));
        }
        for h in &self.hierarchy {
            let level = match h.level {
                HierarchyLevel::Level(l) => l.to_string(),
                HierarchyLevel::NotInHierarchy => "not in hierarchy".into(),
            };
            out.push(format!("hierarchy level of {}: {level}", h.gate));
        }
        for w in &self.witnesses {
            out.push(format!(
                "witness {:?}: generators {:?}, sector {}, {} mod {} != 0",
                w.kind, w.subset, w.sector, w.observed_value, w.required_modulus
            ));
        }
        for c in &self.cross_checks {
            let runs: Vec<String> = c
                .check
                .runs
                .iter()
                .map(|(name, r)| match r {
                    EngineRun::Ran(_) => format!("{name} ran"),
                    EngineRun::Skipped(_) => format!("{name} skipped"),
                })
                .collect();
            out.push(format!("cross-check {}: {} (agree: {})", c.gate, runs.join(", "), c.check.agree));
        }
        out.push(format!("oracle: {}", self.oracle));
        out.push(format!("engine agreement: {}", self.engine_agreement));
        for n in &self.notes {
            out.push(format!("note: {n}"));
        }
        out.join("\n")
    }
}

fn angles(p: &[RationalAngle]) -> String {
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
