//! The acceptance checks, shared by the `verify` command and the
//! acceptance test harness. Each criterion yields a pass/fail verdict with
//! human-readable details.

mod golden;
mod props;

pub use golden::{golden_rows, parse_golden, GoldenRow, PUBLISHED_SYMBOL, B_MINUS_2, TABLES_TSV};
pub use props::{run_properties, PropertyReport, SymbolGen};

use crate::algebra::{lift, parse_symbol, Generator, NcSymbol, SigmaBasis};
use crate::arith::{fmt_rat, gauss_real, rat, rat_int, Rat, RatFun};
use crate::functionals::{
    einstein_functional, einstein_symbol, is_algebra_derivative_group, is_second_derivative_group, metric_coefficients, metric_functional,
    spectral_closedness, symbolic_forms, tensoriality_check, torsion_generic, FaultSite, FunctionalReport, Options, TermDeletion,
    SCHEMA_VERSION,
};
use crate::psido::commutative::{agrees_with_engine, oracle_inverse_dirac};
use crate::psido::{anticommutator_with_dirac, compose, dirac_symbol, inverse_dirac, inverse_dirac_squared, DiracVariant, OneForm};
use crate::residue::{
    assemble_f, beta_formula_j, build_table, canonicalize, closed_form_j, pi_value_text, quadrature_oracle, reduce_symbol, six_tables,
    IntegralKey, Normalization, Table,
};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::f64::consts::PI;

/// Criteria that cannot pass as stated; see the README for the analysis.
/// They are still run and reported as failures.
pub const KNOWN_UNATTAINABLE: [u8; 2] = [5, 10];

/// Settings of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Sample points `s` for the quadrature oracle.
    pub oracle_samples: Vec<Rat>,
    pub dirac_depth: u32,
    pub laplace_depth: u32,
    /// Iterations of each randomized property check.
    pub property_cases: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            oracle_samples: vec![rat(1, 2), rat_int(1), rat_int(2), rat_int(3)],
            dirac_depth: 3,
            laplace_depth: 4,
            property_cases: 1000,
            seed: 2024,
        }
    }
}

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Listed in [`KNOWN_UNATTAINABLE`].
    pub known_unattainable: bool,
    pub details: Vec<String>,
}

/// All criteria of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub criteria: Vec<CriterionResult>,
    pub all_passed: bool,
    /// Failed criteria outside [`KNOWN_UNATTAINABLE`].
    pub unexpected_failures: Vec<u8>,
}

impl VerifyReport {
    fn new(criteria: Vec<CriterionResult>) -> Self {
        let unexpected_failures = criteria.iter().filter(|c| !c.passed && !c.known_unattainable).map(|c| c.id).collect();
        VerifyReport { schema_version: SCHEMA_VERSION, all_passed: criteria.iter().all(|c| c.passed), criteria, unexpected_failures }
    }

    /// One `PASS`/`FAIL` line per criterion followed by indented details.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let tag = match (c.passed, c.known_unattainable) {
                (true, _) => "PASS",
                (false, false) => "FAIL",
                (false, true) => "FAIL (known)",
            };
            out.push_str(&format!("criterion {:>2} {}: {}\n", c.id, tag, c.title));
            for d in &c.details {
                out.push_str(&format!("    {d}\n"));
            }
        }
        let failed: Vec<String> = self.criteria.iter().filter(|c| !c.passed).map(|c| c.id.to_string()).collect();
        if failed.is_empty() {
            out.push_str("summary: all criteria passed\n");
        } else {
            out.push_str(&format!("summary: failed criteria {}\n", failed.join(", ")));
        }
        out
    }
}

/// Lazily computed pipeline results shared between criteria.
pub struct Verifier {
    cfg: VerifyConfig,
    einstein: OnceCell<FunctionalReport>,
    einstein_raw: OnceCell<FunctionalReport>,
}

fn fmt_pi(v: &RatFun, k_power: i64) -> String {
    pi_value_text(v, k_power)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

impl Verifier {
    pub fn new(cfg: VerifyConfig) -> Self {
        Verifier { cfg, einstein: OnceCell::new(), einstein_raw: OnceCell::new() }
    }

    fn opts(&self, normalization: Normalization) -> Options {
        Options { normalization, dirac_depth: self.cfg.dirac_depth, laplace_depth: self.cfg.laplace_depth, ..Options::default() }
    }

    fn uv() -> (OneForm, OneForm) {
        (OneForm::symbolic("u"), OneForm::symbolic("v"))
    }

    fn einstein(&self, norm: Normalization) -> Result<&FunctionalReport, String> {
        let cell = match norm {
            Normalization::Table => &self.einstein,
            Normalization::Raw => &self.einstein_raw,
        };
        if cell.get().is_none() {
            let (u, v) = Self::uv();
            let r = einstein_functional(&u, &v, &self.opts(norm)).map_err(|e| e.to_string())?;
            let _ = cell.set(r);
        }
        Ok(cell.get().expect("just set"))
    }

    /// Runs every criterion in order.
    pub fn run_all(&self) -> VerifyReport {
        VerifyReport::new((1..=10).map(|id| self.run(id)).collect())
    }

    /// Runs one criterion (1–10).
    pub fn run(&self, id: u8) -> CriterionResult {
        let (title, outcome) = match id {
            1 => ("metric functional", self.metric()),
            2 => ("torsion functional and its integral values", self.torsion()),
            3 => ("spectral closedness for products of 1 to 4 one-forms", self.closedness()),
            4 => ("parametrix golden tests", self.parametrix()),
            5 => ("table reproduction", self.tables()),
            6 => ("vanishing sums", self.vanishing()),
            7 => ("integral oracle and merged-pole identity", self.oracle()),
            8 => ("normalization ledger", self.normalization()),
            9 => ("randomized property suites", self.properties()),
            10 => ("negative control", self.negative_control()),
            _ => ("unknown criterion", Err(format!("no criterion {id}"))),
        };
        let (passed, details) = match outcome {
            Ok(r) => r,
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        CriterionResult { id, title, passed, known_unattainable: KNOWN_UNATTAINABLE.contains(&id), details }
    }

    fn metric(&self) -> Result<(bool, Vec<String>), String> {
        let opts = self.opts(Normalization::Raw);
        let (u, v) = Self::uv();
        let m = metric_coefficients(&metric_functional(&u, &v, &opts).map_err(|e| e.to_string())?);
        let two = RatFun::constant(rat_int(2));
        let mut details: Vec<String> = m.iter().map(|(w, (p, val))| format!("{w} -> {}", fmt_pi(val, *p))).collect();
        let symbolic_ok = m.len() == 2 && m.get("u_1 v_1") == Some(&(-1, two.clone())) && m.get("u_2 v_2") == Some(&(1, two.clone()));
        let basis = |a: &OneForm, b: &OneForm| metric_functional(a, b, &opts).map(|r| metric_coefficients(&r)).map_err(|e| e.to_string());
        let s1 = OneForm::sigma1();
        let s2 = OneForm::k_sigma2();
        let one_one = basis(&s1, &s1)?;
        let mixed = basis(&s1, &s2)?;
        let two_two = basis(&s2, &s2)?;
        let basis_ok = one_one.get("1") == Some(&(-1, two.clone())) && one_one.len() == 1 && mixed.is_empty() && two_two.get("1") == Some(&(1, two)) && two_two.len() == 1;
        details.push(format!("symbolic u, v: {}", mark(symbolic_ok)));
        details.push(format!("basis forms (sigma1,sigma1), (sigma1,k sigma2), (k sigma2,k sigma2): {}", mark(basis_ok)));
        Ok((symbolic_ok && basis_ok, details))
    }

    fn torsion(&self) -> Result<(bool, Vec<String>), String> {
        let r = torsion_generic(&self.opts(Normalization::Raw)).map_err(|e| e.to_string())?;
        let mut details = Vec::new();
        let mut ok = r.overall_zero;
        let expected = [("\\mathsf{a}", -2, vec![rat(-3, 2), rat_int(1), rat(1, 2)]), ("\\mathsf{b}", 0, vec![rat(-3, 2), rat(1, 2), rat(-1, 2), rat(3, 2)])];
        for (word, k_power, values) in expected {
            let got = r.merged_contributions(word);
            let mut got_vals: Vec<Option<Rat>> = got.iter().map(|(_, _, v)| v.as_constant()).collect();
            let mut want: Vec<Option<Rat>> = values.into_iter().map(Some).collect();
            got_vals.sort();
            want.sort();
            let powers_ok = got.iter().all(|(_, p, _)| *p == k_power);
            let group_ok = got_vals == want && powers_ok;
            ok &= group_ok;
            let shown: Vec<String> = got.iter().map(|(_, p, v)| fmt_pi(v, *p)).collect();
            details.push(format!("{word}: [{}] {}", shown.join(", "), mark(group_ok)));
        }
        details.push(format!("overall: {}", if r.overall_zero { "zero" } else { "NONZERO" }));
        Ok((ok, details))
    }

    fn closedness(&self) -> Result<(bool, Vec<String>), String> {
        let opts = self.opts(Normalization::Raw);
        let mut ok = true;
        let mut details = Vec::new();
        for n in 1..=4 {
            let r = spectral_closedness(&symbolic_forms(n), &opts).map_err(|e| e.to_string())?;
            ok &= r.overall_zero;
            details.push(format!("length {n}: {} groups, {} terms, {}", r.groups.len(), r.terms.len(), if r.overall_zero { "zero" } else { "NONZERO" }));
        }
        Ok((ok, details))
    }

    fn parametrix(&self) -> Result<(bool, Vec<String>), String> {
        let err = |e: crate::psido::PsidoError| e.to_string();
        let c = inverse_dirac_squared(DiracVariant::Standard, self.cfg.laplace_depth.saturating_sub(1).max(1)).map_err(err)?;
        let b0 = NcSymbol::monomial(gauss_real(rat_int(1)), SigmaBasis::Id, (0, 0), &[Generator::B0(1)]);
        let c_ok = c.part(-2) == b0;
        let b = inverse_dirac(DiracVariant::Standard, self.cfg.dirac_depth.max(2)).map_err(err)?;
        let golden = parse_symbol(B_MINUS_2).map_err(|e| e.to_string())?;
        let b2_ok = b.part(-2) == golden;
        let prod = compose(&dirac_symbol(), &b, -2).map_err(err)?;
        let id_ok = lift::lift_equal(&prod, &NcSymbol::one(), false);
        let oracle = oracle_inverse_dirac(self.cfg.dirac_depth).map_err(err)?;
        let oracle_ok = agrees_with_engine(&b, &oracle);
        let details = vec![
            format!("c_-2 = b_0: {}", mark(c_ok)),
            format!("b_-2 equals the published display term for term ({} terms): {}", golden.len(), mark(b2_ok)),
            format!("rho(D_k) o b = Id through degree -2 (modulo b_0 (xi_1^2 + k^2 xi_2^2) = 1): {}", mark(id_ok)),
            format!("commutative specialization agrees with the matrix oracle: {}", mark(oracle_ok)),
        ];
        Ok((c_ok && b2_ok && id_ok && oracle_ok, details))
    }

    fn tables(&self) -> Result<(bool, Vec<String>), String> {
        let report = self.einstein(Normalization::Table)?;
        let golden = golden_rows();
        let mut details = Vec::new();
        let mut strict_ok = true;
        let row_set = |rows: Vec<(Rat, IntegralKey, i64, RatFun)>| -> Vec<String> {
            let mut v: Vec<String> = rows.iter().map(|(c, k, p, val)| format!("{} x F{:?} = {}", fmt_rat(c), (k.m, k.n, k.beta, k.a, k.b), fmt_pi(val, *p))).collect();
            v.sort();
            v
        };
        let published = parse_symbol(PUBLISHED_SYMBOL).map_err(|e| e.to_string())?;
        let published_terms: Vec<_> = reduce_symbol(&published, Normalization::Table).map_err(|e| e.to_string())?.iter().map(canonicalize).collect();
        let mut published_ok = true;
        for id in ["u1v1_d1d1", "u1v1_d2d2", "u2v2_d1d1"] {
            let spec = six_tables().into_iter().find(|s| s.id == id).expect("known table");
            let want = row_set(golden.iter().filter(|r| r.table == id).map(|r| (r.coeff.clone(), r.key, r.k_power, r.value.clone())).collect());
            let as_set = |t: &Table| row_set(t.rows.iter().map(|r| (r.coeff.clone(), r.key, r.k_power, r.result.clone())).collect());
            let engine = report.tables.iter().find(|t| t.id == id).ok_or("missing table")?;
            let got = as_set(engine);
            let common = got.iter().filter(|g| want.contains(g)).count();
            let same = got == want;
            strict_ok &= same;
            details.push(format!("{id}: engine {} rows, published {} rows, {} identical rows: {}", got.len(), want.len(), common, mark(same)));
            let from_published = as_set(&build_table(&spec, &published_terms));
            let a_same = from_published == want;
            published_ok &= a_same;
            details.push(format!("{id}: pipeline on the published symbol reproduces all {} rows: {}", want.len(), mark(a_same)));
        }
        let engine_sym = einstein_symbol(&Self::uv().0, &Self::uv().1, &self.opts(Normalization::Table)).map_err(|e| e.to_string())?;
        let sectors = engine_sym
            .id_component()
            .even_xi()
            .filter(|k, _| k.word.iter().any(Generator::is_slot) && !k.word.iter().any(|g| matches!(g, Generator::Coeff(c) if c.is_derived())));
        let equivalent = lift::lift_equal(&sectors, &published, true);
        details.push(format!(
            "engine symbol ({} terms) equals the published symbol ({} terms) under the trace and the b_0 relation: {}",
            sectors.len(),
            published.len(),
            mark(equivalent)
        ));
        let spots = [
            ("Table 1 row 1", rat_int(2), IntegralKey::new(3, 0, 1, 0, 0), "1/8"),
            ("Table 1 row 5", rat_int(2), IntegralKey::new(1, 1, 1, 0, 0), "1/(s^2 + s)"),
            ("Table 1 row 6", rat_int(-2), IntegralKey::new(3, 1, 1, 0, 0), "(-3*s - 1)/(8*s^3 + 24*s^2 + 24*s + 8)"),
            ("Table 2 row 12", rat_int(18), IntegralKey::new(4, 1, 3, 6, 0), "(9*s^2 + 36*s + 45)/(16*s^4 + 64*s^3 + 96*s^2 + 64*s + 16)"),
        ];
        let mut spot_ok = true;
        for (name, c, key, want) in spots {
            let (p, f) = assemble_f(&key, Normalization::Table).map_err(|e| e.to_string())?;
            let v = f.scale(&c);
            let ok = v.to_expr() == want;
            spot_ok &= ok;
            details.push(format!("{name}: {} {}", fmt_pi(&v, p), mark(ok)));
        }
        if !strict_ok {
            details.push(
                "the engine's rows are a different but equivalent representative: words are only defined modulo b_0 (xi_1^2 + k^2 xi_2^2) = 1, \
                 so row sets depend on the written form while every group total agrees"
                    .into(),
            );
        }
        Ok((strict_ok && published_ok && equivalent && spot_ok, details))
    }

    fn vanishing(&self) -> Result<(bool, Vec<String>), String> {
        let r = self.einstein(Normalization::Table)?;
        let mut details = Vec::new();
        let tables_ok = r.tables.len() == 6 && r.tables.iter().all(|t| t.zero);
        for t in &r.tables {
            details.push(format!("table {} ({} rows): {}", t.id, t.rows.len(), if t.zero { "sums to 0" } else { "NONZERO" }));
        }
        let second: Vec<_> = r.groups.iter().filter(|g| is_second_derivative_group(g)).collect();
        let algebra: Vec<_> = r.groups.iter().filter(|g| is_algebra_derivative_group(g)).collect();
        let second_ok = !second.is_empty() && second.iter().all(|g| g.zero);
        let algebra_ok = !algebra.is_empty() && algebra.iter().all(|g| g.zero);
        details.push(format!("second-derivative groups: {} of {} vanish", second.iter().filter(|g| g.zero).count(), second.len()));
        details.push(format!("algebra-derivative groups: {} of {} vanish", algebra.iter().filter(|g| g.zero).count(), algebra.len()));
        details.push(format!("overall Einstein verdict: {}", if r.overall_zero { "zero" } else { "NONZERO" }));
        let (u, v) = Self::uv();
        let comm = einstein_functional(&u, &v, &Options { commutative: true, ..self.opts(Normalization::Table) }).map_err(|e| e.to_string())?;
        details.push(format!("commutative specialization: {}", if comm.overall_zero { "zero" } else { "NONZERO" }));
        Ok((tables_ok && second_ok && algebra_ok && r.overall_zero && comm.overall_zero, details))
    }

    fn oracle(&self) -> Result<(bool, Vec<String>), String> {
        let r = self.einstein(Normalization::Table)?;
        let triples: BTreeSet<(u32, u32, u32)> = r.terms.iter().map(|t| (t.key.beta, t.key.m, t.key.n)).collect();
        let mut worst = 0.0f64;
        let mut merged_ok = true;
        let mut failures = Vec::new();
        for &(beta, m, n) in &triples {
            let j = closed_form_j(beta, m, n).map_err(|e| e.to_string())?;
            for s in &self.cfg.oracle_samples {
                let exact = j.eval(s).map_err(|e| e.to_string())?.to_f64().unwrap_or(f64::NAN) * PI;
                let numeric = quadrature_oracle(beta, m, n, s.to_f64().unwrap_or(f64::NAN)).map_err(|e| e.to_string())?;
                let diff = (exact - numeric).abs();
                worst = worst.max(diff);
                if diff.is_nan() || diff > 1e-9 {
                    failures.push(format!("J({beta},{m},{n}; s={}) closed form {exact} vs quadrature {numeric}", fmt_rat(s)));
                }
            }
            let at_one = j.eval(&rat_int(1)).map_err(|e| e.to_string())?;
            let merged = closed_form_j(beta, m + n, 0).map_err(|e| e.to_string())?.as_constant();
            if merged.as_ref() != Some(&at_one) {
                merged_ok = false;
                failures.push(format!("J({beta},{m},{n}; 1) != J({beta},{},0)", m + n));
            }
        }
        let samples: Vec<String> = self.cfg.oracle_samples.iter().map(fmt_rat).collect();
        let mut details = vec![
            format!("{} distinct (beta, m, n) triples, samples s in {{{}}}", triples.len(), samples.join(", ")),
            format!("largest deviation from quadrature: {worst:.3e}"),
            format!("merged-pole identity J(beta,m,n;1) = J(beta,m+n,0): {}", mark(merged_ok)),
        ];
        details.extend(failures.iter().take(10).cloned());
        Ok((failures.is_empty() && !triples.is_empty(), details))
    }

    fn normalization(&self) -> Result<(bool, Vec<String>), String> {
        let golden = golden_rows();
        let mut ok = true;
        let mut details = Vec::new();
        for no in [1, 3, 5, 6] {
            let row = golden.iter().find(|r| r.table == "u1v1_d1d1" && r.no == no).ok_or("missing golden row")?;
            let (_, raw) = assemble_f(&row.key, Normalization::Raw).map_err(|e| e.to_string())?;
            let quarter = raw.scale(&row.coeff).scale(&rat(1, 4));
            let beta = beta_formula_j(row.key.beta, row.key.m + row.key.n).map_err(|e| e.to_string())?;
            let published_at_one = row.value.eval(&rat_int(1)).map_err(|e| e.to_string())?;
            let raw_at_one = raw.eval(&rat_int(1)).map_err(|e| e.to_string())?;
            let row_ok = quarter == row.value && raw_at_one == beta.clone() * rat_int(4) && published_at_one == &row.coeff * &beta;
            ok &= row_ok;
            details.push(format!(
                "Table 1 row {no}: published {} = coeff x F/4; Beta formula at s = 1 gives F = {} pi: {}",
                fmt_pi(&row.value, row.k_power),
                fmt_rat(&(beta * rat_int(4))),
                mark(row_ok)
            ));
        }
        let table = self.einstein(Normalization::Table)?;
        let raw = self.einstein(Normalization::Raw)?;
        let verdicts = |r: &FunctionalReport| r.groups.iter().map(|g| g.zero).collect::<Vec<_>>();
        let tv = |r: &FunctionalReport| r.tables.iter().map(|t| t.zero).collect::<Vec<_>>();
        let same = verdicts(table) == verdicts(raw) && tv(table) == tv(raw) && table.overall_zero == raw.overall_zero;
        let tor = |n| torsion_generic(&self.opts(n)).map(|r| r.overall_zero).map_err(|e| e.to_string());
        let tor_same = tor(Normalization::Table)? == tor(Normalization::Raw)?;
        details.push(format!("Einstein group and table verdicts identical under N = 1 and N = 4: {}", mark(same)));
        details.push(format!("torsion verdict identical under N = 1 and N = 4: {}", mark(tor_same)));
        Ok((ok && same && tor_same, details))
    }

    fn properties(&self) -> Result<(bool, Vec<String>), String> {
        let r = run_properties(self.cfg.property_cases, self.cfg.seed);
        let enough = r.leibniz >= 1000 && r.transpose >= 100 && r.associativity > 0;
        let mut details = vec![
            format!("Leibniz rule: {} random pairs", r.leibniz),
            format!("commuting derivations: {} random symbols", r.commuting),
            format!("grading: {} random pairs", r.grading),
            format!("transpose involution: {} random values", r.transpose),
            format!("associativity: {} random triples ({} skipped: third derivatives of k)", r.associativity, r.skipped),
        ];
        if !enough {
            details.push("fewer cases than required (1000 symbols, 100 transpositions)".into());
        }
        details.extend(r.failures.iter().take(5).cloned());
        Ok((r.passed() && enough, details))
    }

    fn negative_control(&self) -> Result<(bool, Vec<String>), String> {
        let (u, v) = Self::uv();
        let base = self.opts(Normalization::Table);
        let rho0 = anticommutator_with_dirac(&u, &v).map_err(|e| e.to_string())?.part(0);
        let mut detected = 0;
        for index in 0..rho0.len() {
            let opts = Options { deletion: Some(TermDeletion { site: FaultSite::Anticommutator, degree: 0, index }), ..base };
            let r = einstein_functional(&u, &v, &opts).map_err(|e| e.to_string())?;
            if !tensoriality_check(&r) && !r.overall_zero {
                detected += 1;
            }
        }
        let mut details = vec![format!("deleting one zero-order term of u{{D_k, v}}: {detected} of {} deletions break the verdicts", rho0.len())];
        if detected == 0 {
            details.push(
                "every zero-order term is an order-zero off-diagonal symbol whose residue against b_-2 vanishes on its own \
                 (the spectral closedness statement), so no such deletion can be detected"
                    .into(),
            );
        }
        let opts = Options { deletion: Some(TermDeletion { site: FaultSite::Parametrix, degree: -2, index: 0 }), ..base };
        let r = einstein_functional(&u, &v, &opts).map_err(|e| e.to_string())?;
        details.push(format!(
            "supplementary control, first term of b_-2 deleted: tensoriality {}, Einstein verdict {}",
            if tensoriality_check(&r) { "passes" } else { "fails" },
            if r.overall_zero { "zero" } else { "nonzero" }
        ));
        Ok((detected > 0, details))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_criteria_pass() {
        let v = Verifier::new(VerifyConfig { property_cases: 20, ..VerifyConfig::default() });
        for id in [1, 2, 3, 4] {
            let r = v.run(id);
            assert!(r.passed, "criterion {id}: {:?}", r.details);
        }
        assert!(!v.run(11).passed);
    }
}
