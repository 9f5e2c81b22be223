//! Normal ordering of words in skew-commuting generators.
//!
//! A presentation lists letters in their normal order. Each letter is either
//! cyclic (`g^N = 1`) or nilpotent (`x^N = 0`), and every pair of letters
//! skew-commutes: `b a = c_{ba} a b` for `a` before `b`. Words are sorted by
//! adjacent swaps, collecting the factors, then powers are reduced. The
//! relations are homogeneous, so the result does not depend on the swap order.

use crate::cyclotomic::CycNum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterKind {
    /// `g^order = 1`
    Cyclic(u32),
    /// `x^index = 0`
    Nilpotent(u32),
}

impl LetterKind {
    /// Number of distinct nonzero powers in a normal form.
    pub fn bound(&self) -> u32 {
        match *self {
            LetterKind::Cyclic(n) | LetterKind::Nilpotent(n) => n,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Letter {
    pub name: String,
    pub kind: LetterKind,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    conductor: u32,
    letters: Vec<Letter>,
    /// `swap[b][a]`, for `a < b`: `x_b x_a = swap[b][a] · x_a x_b`.
    swap: Vec<Vec<CycNum>>,
}

impl Presentation {
    /// All pairs commute until [`Presentation::set_swap`] says otherwise.
    pub fn new(conductor: u32, letters: Vec<Letter>) -> Self {
        let k = letters.len();
        Presentation {
            conductor,
            swap: vec![vec![CycNum::one(conductor); k]; k],
            letters,
        }
    }

    /// Declares `x_later · x_earlier = factor · x_earlier · x_later`.
    pub fn set_swap(&mut self, later: usize, earlier: usize, factor: CycNum) {
        assert!(earlier < later, "swap factors are indexed by (later, earlier)");
        self.swap[later][earlier] = factor;
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of normal monomials.
    pub fn dim(&self) -> usize {
        self.letters.iter().map(|l| l.kind.bound() as usize).product()
    }

    /// Mixed-radix index of an exponent vector; the first letter is most significant.
    pub fn index_of(&self, exps: &[u32]) -> usize {
        self.letters
            .iter()
            .zip(exps)
            .fold(0, |acc, (l, &e)| acc * l.kind.bound() as usize + e as usize)
    }

    pub fn exponents_of(&self, mut index: usize) -> Vec<u32> {
        let mut out = vec![0; self.letters.len()];
        for (slot, l) in out.iter_mut().zip(&self.letters).rev() {
            let b = l.kind.bound() as usize;
            *slot = (index % b) as u32;
            index /= b;
        }
        out
    }

    /// The word spelling the normal monomial with these exponents.
    pub fn word_of(&self, exps: &[u32]) -> Vec<usize> {
        exps.iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
            .collect()
    }

    pub fn label(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e > 0)
            .map(|(l, &e)| if e == 1 { l.name.clone() } else { format!("{}^{}", l.name, e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("")
        }
    }

    /// Rewrites a word to `c · (normal monomial)`; `None` means the word is zero.
    pub fn normal_order(&self, word: &[usize]) -> Option<(CycNum, usize)> {
        let mut w = word.to_vec();
        let mut coeff = CycNum::one(self.conductor);
        // bubble sort, recording one factor per adjacent transposition
        let len = w.len();
        for pass in 0..len {
            let mut swapped = false;
            for i in 0..len.saturating_sub(1 + pass) {
                let (b, a) = (w[i], w[i + 1]);
                if b > a {
                    coeff = &coeff * &self.swap[b][a];
                    w.swap(i, i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        let mut exps = vec![0u32; self.letters.len()];
        for &l in &w {
            exps[l] += 1;
        }
        for (e, l) in exps.iter_mut().zip(&self.letters) {
            match l.kind {
                LetterKind::Cyclic(n) => *e %= n,
                LetterKind::Nilpotent(n) => {
                    if *e >= n {
                        return None;
                    }
                }
            }
        }
        Some((coeff, self.index_of(&exps)))
    }

    /// Product of two normal monomials, by concatenating and normal ordering.
    pub fn multiply(&self, i: usize, j: usize) -> Option<(CycNum, usize)> {
        let mut word = self.word_of(&self.exponents_of(i));
        word.extend(self.word_of(&self.exponents_of(j)));
        self.normal_order(&word)
    }
}
