//! Random and exhaustive graph generation.
//!
//! Endpoint strings use `0` for a left endpoint and `1` for a right endpoint.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::enumeration::DyckWords;
use crate::error::Result;
use crate::interval::IntervalGraph;
use crate::proper::ProperIntervalGraph;

/// A uniformly random Dyck word with `n` up-steps, by the cycle lemma: among
/// the rotations of a shuffled word with `n` ups and `n + 1` downs exactly one
/// stays non-negative until its final down-step.
pub fn random_dyck<R: Rng + ?Sized>(n: usize, rng: &mut R) -> String {
    let mut steps: Vec<u8> = std::iter::repeat_n(b'0', n).chain(std::iter::repeat_n(b'1', n + 1)).collect();
    steps.shuffle(rng);
    let mut height = 0i64;
    let (mut lowest, mut at) = (0i64, 0usize);
    for (i, &s) in steps.iter().enumerate() {
        height += if s == b'0' { 1 } else { -1 };
        if height < lowest {
            lowest = height;
            at = i;
        }
    }
    steps.rotate_left(at + 1);
    steps.pop();
    String::from_utf8(steps).unwrap()
}

/// A uniformly random Dyck word with `n >= 1` up-steps touching zero only at
/// its ends.
pub fn random_irreducible_dyck<R: Rng + ?Sized>(n: usize, rng: &mut R) -> String {
    assert!(n >= 1, "an irreducible Dyck word needs at least one step pair");
    format!("0{}1", random_dyck(n - 1, rng))
}

/// A connected proper interval graph on `n` vertices.
pub fn random_proper<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProperIntervalGraph {
    ProperIntervalGraph::parse(&random_irreducible_dyck(n, rng), false).unwrap()
}

/// A connected interval graph on `n` vertices: a random irreducible endpoint
/// shape where each right endpoint closes a uniformly chosen open interval.
/// Returns the endpoint string and the vertices in right-endpoint order.
pub fn random_interval_parts<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (String, Vec<usize>) {
    let s = random_irreducible_dyck(n, rng);
    let mut open = Vec::new();
    let mut rights = Vec::with_capacity(n);
    let mut next = 0;
    for c in s.bytes() {
        if c == b'0' {
            next += 1;
            open.push(next);
        } else {
            let i = rng.gen_range(0..open.len());
            rights.push(open.swap_remove(i));
        }
    }
    (s, rights)
}

pub fn random_interval<R: Rng + ?Sized>(n: usize, rng: &mut R) -> IntervalGraph {
    let (s, rights) = random_interval_parts(n, rng);
    IntervalGraph::from_endpoints(&s, Some(&rights)).unwrap()
}

/// Each vertex independently with probability `density`.
pub fn random_beers<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Vec<usize> {
    (1..=n).filter(|_| rng.gen_bool(density.clamp(0.0, 1.0))).collect()
}

/// All Dyck words with `n` up-steps, in lexicographic order.
pub fn dyck_words(n: usize) -> Vec<String> {
    DyckWords::new(n).map(|p| p.to_string()).collect()
}

/// Every interval representation on `n` vertices up to endpoint order: each
/// Dyck word with every choice of which open interval each right endpoint
/// closes.
pub fn interval_representations(n: usize) -> Vec<(String, Vec<usize>)> {
    fn go(s: &[u8], i: usize, next: usize, open: &mut Vec<usize>, rights: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == s.len() {
            out.push(rights.clone());
            return;
        }
        if s[i] == b'0' {
            open.push(next + 1);
            go(s, i + 1, next + 1, open, rights, out);
            open.pop();
        } else {
            for k in 0..open.len() {
                let v = open.remove(k);
                rights.push(v);
                go(s, i + 1, next, open, rights, out);
                rights.pop();
                open.insert(k, v);
            }
        }
    }
    let mut out = Vec::new();
    for s in dyck_words(n) {
        let mut all = Vec::new();
        go(s.as_bytes(), 0, 0, &mut Vec::new(), &mut Vec::new(), &mut all);
        out.extend(all.into_iter().map(|r| (s.clone(), r)));
    }
    out
}

/// Builds a graph from [`interval_representations`] output.
pub fn interval_from_parts(s: &str, rights: &[usize]) -> Result<IntervalGraph> {
    IntervalGraph::from_endpoints(s, Some(rights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn balanced(s: &str) -> bool {
        let mut h = 0i64;
        s.bytes().all(|c| {
            h += if c == b'0' { 1 } else { -1 };
            h >= 0
        }) && h == 0
    }

    #[test]
    fn counts() {
        assert_eq!(dyck_words(4).len(), 14);
        assert_eq!(interval_representations(3).len(), 15);
        assert_eq!(interval_representations(4).len(), 105);
    }

    #[test]
    fn random_words_are_balanced() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..30 {
            let s = random_dyck(n, &mut rng);
            assert_eq!(s.len(), 2 * n);
            assert!(balanced(&s));
        }
        for n in 1..30 {
            assert!(random_proper(n, &mut rng).is_connected());
            assert!(random_interval(n, &mut rng).is_connected());
        }
    }

    #[test]
    fn uniform_over_small_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen = std::collections::HashMap::new();
        for _ in 0..14_000 {
            *seen.entry(random_dyck(4, &mut rng)).or_insert(0) += 1;
        }
        assert_eq!(seen.len(), 14);
        assert!(seen.values().all(|&c| (800..1200).contains(&c)));
    }
}
