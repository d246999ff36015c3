//! Words over generators and their canonical normal form.

use super::generator::Generator;

/// An ordered product of generators.
pub type Word = Vec<Generator>;

/// Canonical normal form of a word.
///
/// Algebra-class generators are moved (stably) in front of commutant-class
/// ones, since the two classes commute. Inside the commutant part every
/// maximal run of `k`/`b₀` powers is merged into a single block written
/// `b₀^m k^a`; zero powers are dropped. Slot generators (`δᵢ(k)`, `δᵢδⱼ(k)`)
/// keep their relative order and separate the blocks.
pub fn word_normalize(word: &[Generator]) -> Word {
    let mut out: Word = word.iter().filter(|g| g.is_algebra()).cloned().collect();
    let mut run = (0u32, 0i64);
    for g in word.iter().filter(|g| !g.is_algebra()) {
        match g {
            Generator::B0(m) => run.0 += m,
            Generator::K(a) => run.1 += a,
            _ => {
                flush_block(&mut out, &mut run);
                out.push(g.clone());
            }
        }
    }
    flush_block(&mut out, &mut run);
    out
}

fn flush_block(out: &mut Word, run: &mut (u32, i64)) {
    if run.0 != 0 {
        out.push(Generator::B0(run.0));
    }
    if run.1 != 0 {
        out.push(Generator::K(run.1));
    }
    *run = (0, 0);
}

/// Normal form in the commutative specialization: every commutator is
/// dropped, so algebra generators are sorted, all `k`/`b₀` powers are merged
/// into one leading block and the slots are sorted after it.
pub fn commutative_normalize(word: &[Generator]) -> Word {
    let mut alg: Word = word.iter().filter(|g| g.is_algebra()).cloned().collect();
    alg.sort();
    let (mut m, mut a) = (0u32, 0i64);
    let mut slots: Word = Vec::new();
    for g in word.iter().filter(|g| !g.is_algebra()) {
        match g {
            Generator::B0(p) => m += p,
            Generator::K(p) => a += p,
            _ => slots.push(g.clone()),
        }
    }
    slots.sort();
    let mut out = alg;
    flush_block(&mut out, &mut (m, a));
    out.extend(slots);
    out
}

/// A canonical word split into its algebra prefix and the alternating
/// commutant structure `block₀ slot₁ block₁ … slotₙ blockₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub algebra: Word,
    /// `(b₀ power, k power)` for each of the `slots.len() + 1` blocks.
    pub blocks: Vec<(u32, i64)>,
    pub slots: Word,
}

/// Splits a word (any form) into [`BlockForm`].
pub fn block_form(word: &[Generator]) -> BlockForm {
    let algebra: Word = word.iter().filter(|g| g.is_algebra()).cloned().collect();
    let mut blocks = vec![(0u32, 0i64)];
    let mut slots = Vec::new();
    for g in word.iter().filter(|g| !g.is_algebra()) {
        let last = blocks.last_mut().unwrap();
        match g {
            Generator::B0(p) => last.0 += p,
            Generator::K(p) => last.1 += p,
            _ => {
                slots.push(g.clone());
                blocks.push((0, 0));
            }
        }
    }
    BlockForm { algebra, blocks, slots }
}

impl BlockForm {
    /// Reassembles the canonical word.
    pub fn to_word(&self) -> Word {
        let mut out = self.algebra.clone();
        for (i, b) in self.blocks.iter().enumerate() {
            flush_block(&mut out, &mut b.clone());
            if let Some(s) = self.slots.get(i) {
                out.push(s.clone());
            }
        }
        out
    }

    /// Total `b₀` power.
    pub fn b0_power(&self) -> u32 {
        self.blocks.iter().map(|b| b.0).sum()
    }
}

/// Total `b₀` power of a word.
pub fn b0_power(word: &[Generator]) -> u32 {
    word.iter()
        .map(|g| if let Generator::B0(m) = g { *m } else { 0 })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn spec_examples() {
        assert_eq!(word_normalize(&[K(1), Generator::u(1)]), vec![Generator::u(1), K(1)]);
        assert_eq!(word_normalize(&[K(2), B0(1), K(1)]), vec![B0(1), K(3)]);
        assert_eq!(word_normalize(&[DK(1), K(1)]), vec![DK(1), K(1)]);
        assert_eq!(word_normalize(&[K(1), K(-1), DK(2)]), vec![DK(2)]);
    }

    #[test]
    fn block_form_round_trip() {
        let w = word_normalize(&[B0(2), K(1), DK(1), B0(1), DK(2), K(-1)]);
        let bf = block_form(&w);
        assert_eq!(bf.blocks, vec![(2, 1), (1, 0), (0, -1)]);
        assert_eq!(bf.to_word(), w);
    }

    #[test]
    fn commutative_form() {
        let w = commutative_normalize(&[DK(2), K(1), Generator::v(1), DK(1), B0(1), Generator::u(2)]);
        assert_eq!(w, vec![Generator::u(2), Generator::v(1), B0(1), K(1), DK(1), DK(2)]);
    }
}
