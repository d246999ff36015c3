//! Seeded randomized checks of the algebraic identities: Leibniz rule,
//! commuting derivations, grading, slot transposition and associativity of
//! composition. All comparisons are exact (modulo the `b₀` relation).

use crate::algebra::lift::lift_equal;
use crate::algebra::{print::symbol_to_string, AlgebraError, Generator, NcSymbol, SigmaBasis, Word};
use crate::arith::{gauss, rat, rat_int, Poly, RatFun};
use crate::psido::{compose, PsidoError};
use crate::residue::{transpose_slots, IntegralKey, ResidueTerm, SlotPattern};
use rand::rngs::Xoshiro256PlusPlus;
use rand::{RngExt, SeedableRng};
use serde::Serialize;

/// Counts of executed checks and any counterexamples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub leibniz: usize,
    pub commuting: usize,
    pub grading: usize,
    pub transpose: usize,
    pub associativity: usize,
    /// Associativity cases discarded because they need third derivatives of `k`.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random small symbols. With `slots = false` no `δᵢ(k)` is generated, so
/// two derivations can always be applied.
pub struct SymbolGen {
    rng: Xoshiro256PlusPlus,
}

impl SymbolGen {
    pub fn new(seed: u64) -> Self {
        SymbolGen { rng: Xoshiro256PlusPlus::seed_from_u64(seed) }
    }

    fn generator(&mut self, slots: bool) -> Generator {
        let choices = if slots { 7 } else { 5 };
        match self.rng.random_range(0..choices) {
            0 => Generator::K([-2, -1, 1, 2][self.rng.random_range(0..4)]),
            1 => Generator::B0(self.rng.random_range(1..=2)),
            2 => Generator::u(self.rng.random_range(1..=2)),
            3 => Generator::v(self.rng.random_range(1..=2)),
            4 => Generator::free("a"),
            _ => Generator::DK(self.rng.random_range(1..=2)),
        }
    }

    pub fn word(&mut self, slots: bool) -> Word {
        let len = self.rng.random_range(0..=3);
        (0..len).map(|_| self.generator(slots)).collect()
    }

    /// A symbol with 1–3 terms and total ξ degree at most `max_xi`.
    pub fn symbol(&mut self, slots: bool, max_xi: u32) -> NcSymbol {
        let mut s = NcSymbol::zero();
        for _ in 0..self.rng.random_range(1..=3) {
            let re = rat(self.rng.random_range(-3..=3), self.rng.random_range(1..=3));
            let im = if self.rng.random_bool(0.25) { rat_int(self.rng.random_range(-1..=1)) } else { rat_int(0) };
            let sigma = SigmaBasis::ALL[self.rng.random_range(0..4)];
            let x1 = self.rng.random_range(0..=max_xi);
            let xi = (x1, self.rng.random_range(0..=max_xi - x1));
            let w = self.word(slots);
            s.add_assign(&NcSymbol::monomial(gauss(re, im), sigma, xi, &w));
        }
        s
    }

    /// A random nonzero rational function of low degree.
    pub fn ratfun(&mut self) -> RatFun {
        let mut poly = |lo: i64| {
            let deg = self.rng.random_range(0..=3);
            Poly::new((0..=deg).map(|_| rat_int(self.rng.random_range(lo..=4))).collect())
        };
        let num = poly(-4);
        let mut den = poly(1);
        if den.is_zero() {
            den = Poly::one();
        }
        RatFun::new(num, den).unwrap_or_else(|_| RatFun::one())
    }

    pub fn k_power(&mut self) -> i64 {
        self.rng.random_range(-4..=2)
    }
}

fn fail(report: &mut PropertyReport, what: &str, inputs: &[&NcSymbol]) {
    let shown: Vec<String> = inputs.iter().map(|s| symbol_to_string(s).replace('\n', " ")).collect();
    report.failures.push(format!("{what}: {}", shown.join(" ; ")));
}

fn leibniz(g: &mut SymbolGen, r: &mut PropertyReport) -> Result<(), AlgebraError> {
    let p = g.symbol(true, 2);
    let q = g.symbol(true, 2);
    for j in 1..=2 {
        let lhs = p.mul(&q).delta(j)?;
        let rhs = p.delta(j)?.mul(&q).add(&p.mul(&q.delta(j)?));
        if !lift_equal(&lhs, &rhs, false) {
            fail(r, &format!("Leibniz rule for delta_{j}"), &[&p, &q]);
        }
    }
    r.leibniz += 1;
    Ok(())
}

fn commuting(g: &mut SymbolGen, r: &mut PropertyReport) -> Result<(), AlgebraError> {
    let p = g.symbol(false, 2);
    if !lift_equal(&p.delta(1)?.delta(2)?, &p.delta(2)?.delta(1)?, false) {
        fail(r, "delta_1 delta_2 = delta_2 delta_1", &[&p]);
    }
    let q = g.symbol(true, 2);
    for i in 1..=2 {
        for j in 1..=2 {
            if !lift_equal(&q.dxi(i).delta(j)?, &q.delta(j)?.dxi(i), false) {
                fail(r, &format!("d_xi{i} delta_{j} = delta_{j} d_xi{i}"), &[&q]);
            }
        }
    }
    r.commuting += 1;
    Ok(())
}

fn grading(g: &mut SymbolGen, r: &mut PropertyReport) -> Result<(), AlgebraError> {
    let p = g.symbol(true, 2);
    let q = g.symbol(true, 2);
    let only = |s: &NcSymbol, d: i64| s.degrees().iter().all(|&e| e == d);
    for dp in p.degrees() {
        for dq in q.degrees() {
            if !only(&p.part(dp).mul(&q.part(dq)), dp + dq) {
                fail(r, "degree of a product", &[&p, &q]);
            }
        }
        for j in 1..=2 {
            if !only(&p.part(dp).dxi(j), dp - 1) || !only(&p.part(dp).delta(j)?, dp) {
                fail(r, "degree of a derivative", &[&p]);
            }
        }
    }
    r.grading += 1;
    Ok(())
}

fn transpose(g: &mut SymbolGen, r: &mut PropertyReport) {
    let k_power = g.k_power();
    let value = g.ratfun();
    let t = ResidueTerm {
        uv_word: vec![Generator::u(1), Generator::v(2)],
        slots: SlotPattern::TwoSlot(2, 1),
        key: IntegralKey::new(1, 1, 0, 0, 0),
        alpha: 1,
        coeff: rat_int(1),
        k_power,
        value: value.clone(),
        transposed: false,
    };
    let once = transpose_slots(&t);
    let expected = &RatFun::s_pow(k_power) * &value.inverse_s();
    if transpose_slots(&once) != t || once.value != expected || once.slots != SlotPattern::TwoSlot(1, 2) {
        r.failures.push(format!("transpose involution: value {value}, k power {k_power}"));
    }
    r.transpose += 1;
}

fn associativity(g: &mut SymbolGen, r: &mut PropertyReport) -> Result<(), PsidoError> {
    // With total ξ degree ≤ 1 in P and Q and no slots in R, at most two
    // derivations reach any `k`, so no third derivative can arise.
    let p = g.symbol(true, 1);
    let q = g.symbol(true, 1);
    let s = g.symbol(false, 2);
    let top = [&p, &q, &s].iter().map(|x| x.max_degree().unwrap_or(0)).sum::<i64>();
    let cutoff = top - 2;
    let lhs = compose(&compose(&p, &q, cutoff - 4)?, &s, cutoff)?;
    let rhs = compose(&p, &compose(&q, &s, cutoff - 4)?, cutoff)?;
    if !lift_equal(&lhs.at_least(cutoff), &rhs.at_least(cutoff), false) {
        fail(r, "(P o Q) o R = P o (Q o R)", &[&p, &q, &s]);
    }
    r.associativity += 1;
    Ok(())
}

/// Runs `cases` iterations of each algebraic property check (and `cases / 4`
/// associativity triples, which are more expensive) from a fixed seed.
pub fn run_properties(cases: usize, seed: u64) -> PropertyReport {
    let mut g = SymbolGen::new(seed);
    let mut r = PropertyReport::default();
    for _ in 0..cases {
        for step in [leibniz, commuting, grading] {
            if let Err(e) = step(&mut g, &mut r) {
                r.failures.push(format!("unexpected error: {e}"));
            }
        }
        transpose(&mut g, &mut r);
    }
    for _ in 0..cases.div_ceil(4) {
        match associativity(&mut g, &mut r) {
            Ok(()) => {}
            Err(PsidoError::Algebra(AlgebraError::ThirdDerivative)) => r.skipped += 1,
            Err(e) => r.failures.push(format!("unexpected error: {e}")),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let r = run_properties(40, 7);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.leibniz, 40);
        assert!(r.associativity > 0);
    }
}
