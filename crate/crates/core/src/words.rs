//! Cartan's admissible words and p-pairs.

use std::fmt;

/// Letters of admissible words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Sigma,
    Phi,
    Gamma,
}

/// Which admissibility rule applies. `Two` is the characteristic 2 rule on
/// the letters σ and γ₂ only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Odd,
    Two,
}

impl Style {
    pub fn for_prime(p: u64) -> Style {
        if p == 2 {
            Style::Two
        } else {
            Style::Odd
        }
    }

    fn alphabet(self) -> &'static [Letter] {
        match self {
            Style::Odd => &[Letter::Sigma, Letter::Phi, Letter::Gamma],
            Style::Two => &[Letter::Sigma, Letter::Gamma],
        }
    }
}

/// A word read left to right; degrees are computed from the right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of σ and φ letters.
    pub fn height(&self) -> usize {
        self.0.iter().filter(|l| **l != Letter::Gamma).count()
    }

    pub fn format(&self, p: u64) -> String {
        let mut s = String::new();
        for l in &self.0 {
            match l {
                Letter::Sigma => s.push('σ'),
                Letter::Phi => s.push_str(&format!("φ{p}")),
                Letter::Gamma => s.push_str(&format!("γ{p}")),
            }
        }
        s
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::Sigma => "σ",
                Letter::Phi => "φ",
                Letter::Gamma => "γ",
            })?;
        }
        Ok(())
    }
}

pub fn word_degree(w: &Word, p: u64) -> u64 {
    w.0.iter().rev().fold(0, |deg, l| match l {
        Letter::Sigma => deg + 1,
        Letter::Gamma => p * deg,
        Letter::Phi => p * deg + 2,
    })
}

/// Number of φ and γ letters.
pub fn word_twisting(w: &Word) -> u32 {
    w.0.iter().filter(|l| **l != Letter::Sigma).count() as u32
}

pub fn is_admissible(w: &Word, style: Style) -> bool {
    let l = &w.0;
    match style {
        Style::Two => {
            l.first() == Some(&Letter::Sigma)
                && l.len() >= 2
                && l[l.len() - 2..] == [Letter::Sigma, Letter::Sigma]
                && l.iter().all(|x| *x != Letter::Phi)
        }
        Style::Odd => {
            if !matches!(l.first(), Some(Letter::Sigma | Letter::Phi))
                || l.last() != Some(&Letter::Sigma)
            {
                return false;
            }
            let mut sigmas = 0;
            for x in l.iter().rev() {
                match x {
                    Letter::Sigma => sigmas += 1,
                    _ if sigmas % 2 == 1 => return false,
                    _ => {}
                }
            }
            true
        }
    }
}

/// Bounds for enumeration; words are kept when both bounds hold.
#[derive(Clone, Copy, Debug)]
pub struct WordBounds {
    pub max_degree: Option<u64>,
    pub max_twisting: Option<u32>,
}

impl WordBounds {
    pub fn degree(max_degree: u64) -> Self {
        WordBounds {
            max_degree: Some(max_degree),
            max_twisting: None,
        }
    }

    pub fn twisting(max_twisting: u32) -> Self {
        WordBounds {
            max_degree: None,
            max_twisting: Some(max_twisting),
        }
    }
}

/// Generates words from the right. Every letter added on the left raises the
/// degree (the suffix degree is already positive when φ or γ is added), so a
/// degree or twisting bound makes the search finite.
fn grow(
    style: Style,
    p: u64,
    height: usize,
    bounds: WordBounds,
    suffix: &mut Vec<Letter>,
    state: (u64, usize, u32, usize),
    out: &mut Vec<Word>,
) {
    let (deg, h, twist, sigmas) = state;
    if h == height {
        let w = Word(suffix.iter().rev().copied().collect());
        if is_admissible(&w, style) {
            out.push(w);
        }
    }
    for &l in style.alphabet() {
        let next = match l {
            Letter::Sigma => (deg + 1, h + 1, twist, sigmas + 1),
            Letter::Gamma | Letter::Phi => {
                let parity_ok = match style {
                    Style::Odd => sigmas % 2 == 0,
                    Style::Two => true,
                };
                if deg == 0 || !parity_ok {
                    continue;
                }
                let d = if l == Letter::Phi { p * deg + 2 } else { p * deg };
                let dh = usize::from(l == Letter::Phi);
                (d, h + dh, twist + 1, sigmas)
            }
        };
        if next.1 > height
            || bounds.max_degree.is_some_and(|m| next.0 > m)
            || bounds.max_twisting.is_some_and(|m| next.2 > m)
        {
            continue;
        }
        suffix.push(l);
        grow(style, p, height, bounds, suffix, next, out);
        suffix.pop();
    }
}

fn sort_words(words: &mut Vec<Word>, p: u64) {
    words.sort_by_key(|w| (word_degree(w, p), w.clone()));
    words.dedup();
}

/// Admissible words of the given height within the bounds, sorted by degree.
///
/// # Panics
///
/// If neither bound is set.
pub fn enumerate_words_with(p: u64, style: Style, height: usize, bounds: WordBounds) -> Vec<Word> {
    assert!(
        bounds.max_degree.is_some() || bounds.max_twisting.is_some(),
        "unbounded word enumeration"
    );
    let mut out = Vec::new();
    grow(style, p, height, bounds, &mut Vec::new(), (0, 0, 0, 0), &mut out);
    sort_words(&mut out, p);
    out
}

/// Admissible words for the prime `p` of the given height and degree at most
/// `max_degree`.
pub fn enumerate_words(p: u64, height: usize, max_degree: u64) -> Vec<Word> {
    enumerate_words_with(p, Style::for_prime(p), height, WordBounds::degree(max_degree))
}

/// The pair `(σ^{k+1}γα, σ^kφα)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PPair {
    pub gamma_word: Word,
    pub phi_word: Word,
    /// Degree of the γ word, one less than that of the φ word.
    pub degree: u64,
    pub twisting: u32,
    pub weight: u64,
}

/// p-pairs of the given height, built from the σ/φ/γ words (also for
/// `p = 2`), sorted by degree.
pub fn enumerate_p_pairs_with(p: u64, height: usize, bounds: WordBounds) -> Vec<PPair> {
    // the φ word has degree one more than the pair degree
    let wide = WordBounds {
        max_degree: bounds.max_degree.map(|d| d + 1),
        ..bounds
    };
    let mut out = Vec::new();
    for w in enumerate_words_with(p, Style::Odd, height, wide) {
        let k = w.0.iter().take_while(|l| **l == Letter::Sigma).count();
        if w.0.get(k) != Some(&Letter::Phi) {
            continue;
        }
        let mut gamma = vec![Letter::Sigma; k + 1];
        gamma.push(Letter::Gamma);
        gamma.extend_from_slice(&w.0[k + 1..]);
        let gamma_word = Word(gamma);
        let degree = word_degree(&gamma_word, p);
        if bounds.max_degree.is_some_and(|m| degree > m) {
            continue;
        }
        let twisting = word_twisting(&w);
        out.push(PPair {
            gamma_word,
            phi_word: w,
            degree,
            twisting,
            weight: p.pow(twisting),
        });
    }
    out.sort_by_key(|pp| (pp.degree, pp.phi_word.clone()));
    out
}

pub fn enumerate_p_pairs(p: u64, height: usize, max_degree: u64) -> Vec<PPair> {
    enumerate_p_pairs_with(p, height, WordBounds::degree(max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn degree_recursion() {
        let w = |v: Vec<Letter>| Word(v);
        assert_eq!(word_degree(&w(vec![Sigma, Sigma]), 3), 2);
        assert_eq!(word_degree(&w(vec![Sigma, Gamma, Gamma, Sigma, Sigma]), 3), 2 * 9 + 1);
        assert_eq!(word_degree(&w(vec![Phi, Gamma, Sigma, Sigma]), 5), 2 * 25 + 2);
        assert_eq!(word_twisting(&w(vec![Phi, Gamma, Phi, Gamma, Sigma, Sigma])), 4);
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&Word(vec![Sigma, Gamma, Sigma, Sigma]), Style::Odd));
        assert!(!is_admissible(&Word(vec![Sigma, Gamma, Sigma]), Style::Odd));
        assert!(!is_admissible(&Word(vec![Gamma, Sigma, Sigma]), Style::Odd));
        assert!(!is_admissible(&Word(vec![Sigma, Gamma, Sigma]), Style::Two));
        assert!(is_admissible(&Word(vec![Sigma, Gamma, Gamma, Sigma, Sigma]), Style::Two));
    }
}
