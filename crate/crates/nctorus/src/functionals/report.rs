//! The serializable result of a functional run and its text rendering.

use super::Options;
use crate::arith::RatFun;
use crate::residue::{pi_value_text, IntegralKey, word_label, GroupSum, Normalization, ResidueTerm, Table};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Version of the JSON layout of reports and tables.
pub const SCHEMA_VERSION: u32 = 1;

/// Which functional produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionalKind {
    Metric,
    Torsion,
    Closedness,
    Einstein,
}

impl FunctionalKind {
    pub fn name(self) -> &'static str {
        match self {
            FunctionalKind::Metric => "metric",
            FunctionalKind::Torsion => "torsion",
            FunctionalKind::Closedness => "closedness",
            FunctionalKind::Einstein => "einstein",
        }
    }
}

/// Grouped residue values of one functional run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctionalReport {
    pub schema_version: u32,
    pub functional: FunctionalKind,
    /// The residue convention the values are expressed in.
    pub convention: String,
    pub normalization: Normalization,
    pub commutative: bool,
    /// Descriptions of the input one-forms.
    pub inputs: Vec<String>,
    /// Groups after canonicalizing two-slot terms to `δ₁ … δ₂` order.
    pub groups: Vec<GroupSum>,
    /// Groups formed without the slot transposition (Einstein only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub raw_groups: Vec<GroupSum>,
    /// The regenerated first-derivative-pair tables (Einstein only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<Table>,
    /// Every reduced contribution, canonicalized.
    pub terms: Vec<ResidueTerm>,
    /// True iff every group sums to zero.
    pub overall_zero: bool,
}

impl FunctionalReport {
    pub fn new(functional: FunctionalKind, inputs: Vec<String>, groups: Vec<GroupSum>, terms: Vec<ResidueTerm>, opts: &Options) -> Self {
        let convention = format!(
            "Wres(P) = N/4 * int_{{S^1}} tau(tr P_{{-2}}) with tr the normalized matrix trace; values are listed as multiples of pi; N = {}",
            opts.normalization.factor()
        );
        FunctionalReport {
            schema_version: SCHEMA_VERSION,
            functional,
            convention,
            normalization: opts.normalization,
            commutative: opts.commutative,
            inputs,
            overall_zero: groups.iter().all(|g| g.zero),
            groups,
            raw_groups: Vec::new(),
            tables: Vec::new(),
            terms,
        }
    }

    /// The contributions whose algebra word renders as `word`.
    pub fn contributions(&self, word: &str) -> Vec<&ResidueTerm> {
        self.terms.iter().filter(|t| word_label(&t.uv_word) == word).collect()
    }

    /// The contributions of `word`, with equal integral keys merged:
    /// `(key, k power, summed value/π)`, dropping cancelled keys.
    pub fn merged_contributions(&self, word: &str) -> Vec<(IntegralKey, i64, RatFun)> {
        let mut by_key: BTreeMap<IntegralKey, (i64, RatFun)> = BTreeMap::new();
        for t in self.contributions(word) {
            let e = by_key.entry(t.key).or_insert_with(|| (t.k_power, RatFun::zero()));
            e.1 = &e.1 + &t.value;
        }
        by_key.into_iter().filter(|(_, (_, v))| !v.is_zero()).map(|(k, (p, v))| (k, p, v)).collect()
    }
}

fn verdict(zero: bool) -> &'static str {
    if zero {
        "zero"
    } else {
        "NONZERO"
    }
}

/// Plain-text rendering: a header, one line per group and the verdict.
pub fn render_text(r: &FunctionalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "functional: {}", r.functional.name());
    let _ = writeln!(out, "convention: {}", r.convention);
    if r.commutative {
        let _ = writeln!(out, "commutative specialization: on");
    }
    for (i, input) in r.inputs.iter().enumerate() {
        let _ = writeln!(out, "input {}: {}", i + 1, input);
    }
    let _ = writeln!(out, "groups: {}", r.groups.len());
    for g in &r.groups {
        let _ = writeln!(
            out,
            "  [{}] {} | {} | {} terms | {}",
            verdict(g.zero),
            word_label(&g.uv_word),
            g.slots,
            g.terms,
            pi_value_text(&g.sum, g.k_power)
        );
    }
    if !r.raw_groups.is_empty() {
        let nonzero = r.raw_groups.iter().filter(|g| !g.zero).count();
        let _ = writeln!(out, "groups without slot transposition: {} ({} nonzero)", r.raw_groups.len(), nonzero);
    }
    for t in &r.tables {
        let kp = t.rows.first().map_or(0, |row| row.k_power);
        let _ = writeln!(out, "  table {}: {} rows, sum {} [{}]", t.id, t.rows.len(), pi_value_text(&t.sum, kp), verdict(t.zero));
    }
    if r.functional == FunctionalKind::Metric {
        let _ = writeln!(out, "(the metric is not expected to vanish)");
    } else {
        let _ = writeln!(out, "overall: {}", verdict(r.overall_zero));
    }
    out
}
