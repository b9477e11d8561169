use std::collections::BTreeSet;

use extbar_core::words::{
    enumerate_p_pairs, enumerate_words, word_degree, word_twisting, Letter, Word,
};

fn all_strings(alphabet: &[Letter], len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// Admissibility written out letter by letter: reading right to left, every
/// φ or γ must have an even number of σ to its right; the word ends in σ.
fn oracle_admissible(w: &[Letter], p: u64) -> bool {
    if w.last() != Some(&Letter::Sigma) {
        return false;
    }
    if p == 2 {
        if w.contains(&Letter::Phi) || w[0] != Letter::Sigma || w.len() < 2 {
            return false;
        }
        return w[w.len() - 2] == Letter::Sigma;
    }
    if w[0] == Letter::Gamma {
        return false;
    }
    (0..w.len()).all(|i| {
        w[i] == Letter::Sigma || w[i + 1..].iter().filter(|l| **l == Letter::Sigma).count() % 2 == 0
    })
}

fn brute_force(p: u64, height: usize, max_degree: u64) -> BTreeSet<Word> {
    let alphabet: &[Letter] = if p == 2 {
        &[Letter::Sigma, Letter::Gamma]
    } else {
        &[Letter::Sigma, Letter::Phi, Letter::Gamma]
    };
    let mut out = BTreeSet::new();
    for len in 1..=height + 8 {
        for w in all_strings(alphabet, len) {
            let word = Word(w.clone());
            if word.height() == height && oracle_admissible(&w, p) && word_degree(&word, p) <= max_degree {
                out.insert(word);
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for (p, max_degree) in [(2u64, 40u64), (3, 40), (5, 60)] {
        for height in 1..=4 {
            let got: BTreeSet<Word> = enumerate_words(p, height, max_degree).into_iter().collect();
            assert_eq!(got, brute_force(p, height, max_degree), "p={p} height={height}");
        }
    }
}

#[test]
fn words_are_sorted_by_degree() {
    let ws = enumerate_words(3, 3, 60);
    assert!(ws.windows(2).all(|w| word_degree(&w[0], 3) <= word_degree(&w[1], 3)));
}

#[test]
fn low_degree_words() {
    // height 3 at p = 2: σσσ (3), σγσσ (5), σγγσσ (9)
    let ws: Vec<u64> = enumerate_words(2, 3, 10).iter().map(|w| word_degree(w, 2)).collect();
    assert_eq!(ws, vec![3, 5, 9]);
    // height 3 at p = 3: σσσ (3), σγσσ (7), φσσ (8)
    let ws: Vec<u64> = enumerate_words(3, 3, 8).iter().map(|w| word_degree(w, 3)).collect();
    assert_eq!(ws, vec![3, 7, 8]);
}

#[test]
fn pairs_are_adjacent_admissible_words() {
    for p in [2u64, 3, 5] {
        // height 2 has none: a φ or γ would face a single σ
        assert!(enumerate_p_pairs(p, 2, 80).is_empty());
        for height in 3..=4 {
            let pairs = enumerate_p_pairs(p, height, 80);
            assert!(!pairs.is_empty());
            let mut seen = BTreeSet::new();
            for pp in &pairs {
                assert!(oracle_admissible(pp.gamma_word.letters(), 3));
                assert!(oracle_admissible(pp.phi_word.letters(), 3));
                assert_eq!(pp.gamma_word.height(), height);
                assert_eq!(pp.phi_word.height(), height);
                assert_eq!(word_degree(&pp.phi_word, p), pp.degree + 1);
                assert_eq!(word_degree(&pp.gamma_word, p), pp.degree);
                assert_eq!(word_twisting(&pp.gamma_word), pp.twisting);
                assert_eq!(pp.weight, p.pow(pp.twisting));
                assert!(seen.insert(pp.gamma_word.clone()));
                assert!(seen.insert(pp.phi_word.clone()));
            }
        }
    }
}

#[test]
fn odd_words_split_into_pairs_and_pure_sigma() {
    // every admissible word other than σ^h starts, after its σ prefix, with
    // φ or γ; each of them lies in exactly one pair
    let p = 3;
    for height in 2..=4 {
        let words: BTreeSet<Word> = enumerate_words(p, height, 80)
            .into_iter()
            .filter(|w| word_degree(w, p) <= 79)
            .collect();
        let mut covered: BTreeSet<Word> = BTreeSet::new();
        for pp in enumerate_p_pairs(p, height, 80) {
            if word_degree(&pp.phi_word, p) <= 79 {
                covered.insert(pp.gamma_word);
                covered.insert(pp.phi_word);
            }
        }
        let rest: Vec<&Word> = words.difference(&covered).collect();
        assert_eq!(rest, vec![&Word(vec![Letter::Sigma; height])], "height={height}");
    }
}
