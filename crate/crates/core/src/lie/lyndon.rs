use crate::exact::Composition;

/// Whether `w` is strictly smaller than each of its proper rotations
/// (which also rules out periodic words).
pub fn is_lyndon(w: &Composition) -> bool {
    let l = w.letters();
    !l.is_empty() && (1..l.len()).all(|i| l < &[&l[i..], &l[..i]].concat()[..])
}

/// Lyndon words over `alphabet` with weight `<= max_weight`, in canonical
/// order.
///
/// Enumerates prenecklaces with the Fredricksen–Kessler–Maiorana
/// recursion, pruning by weight since letters are positive.
pub fn lyndon_words(alphabet: &[u32], max_weight: u64) -> Vec<Composition> {
    let mut letters: Vec<u32> = alphabet.iter().copied().filter(|&a| a > 0).collect();
    letters.sort_unstable();
    letters.dedup();
    let mut out = Vec::new();
    // word as indices into `letters`
    fn go(
        t: usize,
        p: usize,
        word: &mut Vec<usize>,
        weight: u64,
        letters: &[u32],
        cap: u64,
        out: &mut Vec<Composition>,
    ) {
        if t > 0 && p == t {
            out.push(Composition::from_letters(
                word.iter().map(|&i| letters[i]).collect(),
            ));
        }
        let start = if t == 0 { 0 } else { word[t - p] };
        for i in start..letters.len() {
            let w = weight + u64::from(letters[i]);
            if w > cap {
                break;
            }
            word.push(i);
            let period = if t > 0 && i == word[t - p] { p } else { t + 1 };
            go(t + 1, period, word, w, letters, cap, out);
            word.pop();
        }
    }
    go(0, 0, &mut Vec::new(), 0, &letters, max_weight, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{free_lie_dimensions, GradedGeneratorSet};

    fn show(ws: &[Composition]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(show(&lyndon_words(&[2, 3], 5)), ["2", "3", "2,3"]);
        assert!(lyndon_words(&[2, 3], 5).iter().all(|w| w.weight() != 4));
        assert_eq!(show(&lyndon_words(&[1], 3)), ["1"]);
        assert!(lyndon_words(&[], 5).is_empty());
    }

    #[test]
    fn agrees_with_brute_force() {
        for alphabet in [&[1u32, 2][..], &[2, 3], &[1, 2, 3], &[1, 3]] {
            let brute: Vec<Composition> = Composition::words_over(alphabet, 12)
                .into_iter()
                .filter(is_lyndon)
                .collect();
            assert_eq!(lyndon_words(alphabet, 12), brute, "{alphabet:?}");
        }
    }

    #[test]
    fn lyndon_counts_are_witt_numbers() {
        let l =
            free_lie_dimensions(&GradedGeneratorSet::from_degrees(&[2, 3], 24).unwrap()).unwrap();
        let words = lyndon_words(&[2, 3], 24);
        for n in 1..=24u64 {
            let count = words.iter().filter(|w| w.weight() == n).count() as u64;
            assert_eq!(count, l.get(n as i64).unwrap(), "weight {n}");
        }
    }
}
