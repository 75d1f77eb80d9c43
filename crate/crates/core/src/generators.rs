//! Named posets and seeded random instances.
//!
//! Finite truncations only: the chains standing in for the rationals cannot be
//! dense and scatteredness is not a finitely testable property.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{check_size, Result};
use crate::incidence::open_split;
use crate::limits::Limits;
use crate::poset::Poset;

/// Seed for every randomized constructor. Identical seed and parameters give
/// identical output on every platform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// Binary words of length at most `d`, shortest first, then lexicographic.
fn words(d: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for len in 1..=d {
        for bits in 0..1usize << len {
            out.push(
                (0..len)
                    .rev()
                    .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
                    .collect(),
            );
        }
    }
    out
}

fn word_label(w: &str) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_string()
    }
}

fn words_poset<F>(d: usize, limits: &Limits, leq: F) -> Result<Poset>
where
    F: Fn(&str, &str) -> bool,
{
    let size = (1usize << (d + 1).min(usize::BITS as usize - 1)) - 1;
    check_size("word poset elements", size, limits.max_elements)?;
    let ws = words(d);
    let labels = ws.iter().map(|w| word_label(w)).collect();
    Poset::from_fn(labels, |i, j| leq(&ws[i], &ws[j]))
}

/// Depth-`d` truncation of the dyadic tree: words ordered by prefix.
pub fn binary_tree(d: usize) -> Result<Poset> {
    binary_tree_with(d, &Limits::default())
}

pub fn binary_tree_with(d: usize, limits: &Limits) -> Result<Poset> {
    words_poset(d, limits, |s, t| t.starts_with(s))
}

/// Depth-`d` truncation of Ω(η): `s <= t` iff `|s| <= |t|` and `s <=lex t↾|s|`.
/// Every level is a chain and the tree order is contained in it.
pub fn omega_eta(d: usize) -> Result<Poset> {
    omega_eta_with(d, &Limits::default())
}

pub fn omega_eta_with(d: usize, limits: &Limits) -> Result<Poset> {
    words_poset(d, limits, |s, t| s.len() <= t.len() && s <= &t[..s.len()])
}

/// Rado's poset on `{(m, n) : 0 <= m < n <= N}`:
/// `(m,n) <= (m',n')` iff (`m = m'` and `n <= n'`) or `n < m'`.
pub fn rado(big_n: usize) -> Result<Poset> {
    rado_with(big_n, &Limits::default())
}

pub fn rado_with(big_n: usize, limits: &Limits) -> Result<Poset> {
    check_size("rado elements", big_n * (big_n + 1) / 2, limits.max_elements)?;
    let mut pts = Vec::new();
    for n in 1..=big_n {
        for m in 0..n {
            pts.push((m, n));
        }
    }
    pts.sort();
    let labels = pts.iter().map(|(m, n)| format!("({m},{n})")).collect();
    Poset::from_fn(labels, |i, j| {
        let ((m, n), (m2, n2)) = (pts[i], pts[j]);
        (m == m2 && n <= n2) || n < m2
    })
}

/// `{0} ∪ 3×2`: a least element `0` below three disjoint 2-chains `i.0 < i.1`.
pub fn spider_a() -> Poset {
    let mut labels = vec!["0".to_string()];
    let mut pairs = Vec::new();
    for i in 0..3 {
        labels.push(format!("{i}.0"));
        labels.push(format!("{i}.1"));
        pairs.push(("0".to_string(), format!("{i}.0")));
        pairs.push((format!("{i}.0"), format!("{i}.1")));
    }
    Poset::from_relation(&labels, &pairs, crate::RelationMode::Covers).expect("fixture")
}

/// The 3-irreducible poset obtained from the open split of [`spider_a`]
/// restricted to `{(0,0)} ∪ {((i,j), j) : i < 3, j < 2}`.
pub fn three_irreducible_b() -> Poset {
    let split = open_split(&spider_a());
    let mut keep = vec!["(0,0)".to_string()];
    for i in 0..3 {
        for j in 0..2 {
            keep.push(format!("({i}.{j},{j})"));
        }
    }
    split.induced_by_labels(&keep).expect("fixture labels")
}

/// Finite truncations of the ten obstructions, keyed by name.
pub fn obstruction_catalog(d: usize) -> Result<Vec<(String, Poset)>> {
    obstruction_catalog_with(d, &Limits::default())
}

pub fn obstruction_catalog_with(d: usize, limits: &Limits) -> Result<Vec<(String, Poset)>> {
    check_size("catalog chain length", 1usize << d.min(62), limits.max_elements)?;
    let eta = Poset::chain(1 << d);
    let t2 = binary_tree_with(d, limits)?;
    let om = omega_eta_with(d, limits)?;
    let b_eta = open_split(&Poset::chain(d));
    let b_t2 = open_split(&t2);
    let b_om = open_split(&om);
    check_size("catalog split elements", b_om.len(), limits.max_elements)?;
    Ok(vec![
        ("eta".to_string(), eta),
        ("t2".to_string(), t2.clone()),
        ("omega_eta".to_string(), om.clone()),
        ("b_eta".to_string(), b_eta),
        ("b_t2".to_string(), b_t2.clone()),
        ("b_omega_eta".to_string(), b_om.clone()),
        ("t2_dual".to_string(), t2.dual()),
        ("omega_eta_dual".to_string(), om.dual()),
        ("b_t2_dual".to_string(), b_t2.dual()),
        ("b_omega_eta_dual".to_string(), b_om.dual()),
    ])
}

/// Random poset: a random DAG on a shuffled labelling, transitively closed.
/// Each forward pair of the hidden linear order becomes a relation with probability `p`.
pub fn random_poset(n: usize, p: f64, seed: impl Into<Seed>) -> Result<Poset> {
    random_poset_with(n, p, seed, &Limits::default())
}

pub fn random_poset_with(n: usize, p: f64, seed: impl Into<Seed>, limits: &Limits) -> Result<Poset> {
    check_size("random poset elements", n, limits.max_elements)?;
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.into().0);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                up[perm[i]].insert(perm[j]);
            }
        }
    }
    // Close in reverse hidden order so successors are already closed.
    for i in (0..n).rev() {
        let x = perm[i];
        let succ: Vec<usize> = up[x].iter().filter(|&y| y != x).collect();
        for y in succ {
            let row = up[y].clone();
            up[x].union_with(&row);
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(Poset::from_rows_unchecked(labels, up))
}

/// Canonical code of a poset on at most 8 elements: the lexicographically
/// least strict-order bit pattern over all relabellings.
pub(crate) fn canonical_code(p: &Poset) -> u64 {
    let n = p.len();
    assert!(n <= 8, "canonical codes are for tiny posets");
    let mut perm: Vec<usize> = (0..n).collect();
    // Only relabellings that list elements by nondecreasing down-set size.
    perm.sort_by_key(|&x| (p.down_set(x).count(), p.up_set(x).count()));
    let key = |x: usize| (p.down_set(x).count(), p.up_set(x).count());
    let mut best = u64::MAX;
    permute_within_classes(&mut perm, 0, &key, &mut |perm| {
        let mut code = 0u64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    code = code << 1 | u64::from(p.lt(perm[i], perm[j]));
                }
            }
        }
        best = best.min(code);
    });
    best
}

fn permute_within_classes<K, F>(perm: &mut [usize], start: usize, key: &K, visit: &mut F)
where
    K: Fn(usize) -> (usize, usize),
    F: FnMut(&[usize]),
{
    if start == perm.len() {
        visit(perm);
        return;
    }
    let mut end = start + 1;
    while end < perm.len() && key(perm[end]) == key(perm[start]) {
        end += 1;
    }
    heap_permutations(perm, start, end, &mut |perm| {
        permute_within_classes(perm, end, key, visit)
    });
}

fn heap_permutations<F: FnMut(&mut [usize])>(perm: &mut [usize], start: usize, end: usize, f: &mut F) {
    fn rec<F: FnMut(&mut [usize])>(perm: &mut [usize], start: usize, k: usize, f: &mut F) {
        if k <= 1 {
            f(perm);
            return;
        }
        for i in 0..k {
            rec(perm, start, k - 1, f);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            if i + 1 < k {
                perm.swap(start + j, start + k - 1);
            }
        }
    }
    rec(perm, start, end - start, f);
}

/// One representative of each isomorphism class of `n`-element posets.
///
/// Built by adding a new maximal element above each down-set of every
/// `(n-1)`-element representative and rejecting duplicates by canonical code.
pub fn all_posets(n: usize) -> Result<Vec<Poset>> {
    check_size("all_posets size", n, 6)?;
    let mut level: Vec<Poset> = vec![Poset::empty()];
    for k in 1..=n {
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        let mut next: Vec<(u64, Poset)> = Vec::new();
        for base in &level {
            let m = base.len();
            for mask in 0u32..1 << m {
                let downset = (0..m).all(|x| {
                    mask >> x & 1 == 0 || base.down_set(x).iter().all(|y| mask >> y & 1 == 1)
                });
                if !downset {
                    continue;
                }
                let up: Vec<BitSet> = (0..k)
                    .map(|x| {
                        if x == m {
                            BitSet::from_indices(k, [m])
                        } else {
                            let mut row = BitSet::from_indices(k, base.up_set(x).iter());
                            if mask >> x & 1 == 1 {
                                row.insert(m);
                            }
                            row
                        }
                    })
                    .collect();
                let labels = (0..k).map(|i| i.to_string()).collect();
                let cand = Poset::from_rows_unchecked(labels, up);
                let code = canonical_code(&cand);
                if seen.insert(code) {
                    next.push((code, cand));
                }
            }
        }
        next.sort_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, p)| p).collect();
    }
    Ok(level)
}

/// Every poset with at most `n` elements, smallest first.
pub fn all_posets_up_to(n: usize) -> Result<Vec<Poset>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(all_posets(k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::width;

    #[test]
    fn tree_sizes_and_widths() {
        assert_eq!(binary_tree(0).unwrap().len(), 1);
        for d in 0..5 {
            let t = binary_tree(d).unwrap();
            assert_eq!(t.len(), (1 << (d + 1)) - 1);
            assert_eq!(width(&t).width, 1 << d);
        }
        assert!(binary_tree(6).is_err());
    }

    #[test]
    fn omega_eta_contains_tree_order() {
        let om1 = omega_eta(1).unwrap();
        assert!(om1.is_chain() && om1.len() == 3);
        for d in 0..5 {
            let t = binary_tree(d).unwrap();
            let o = omega_eta(d).unwrap();
            for x in 0..t.len() {
                for y in 0..t.len() {
                    if t.leq(x, y) {
                        assert!(o.leq(x, y));
                    }
                }
            }
        }
        assert_eq!(width(&omega_eta(3).unwrap()).width, 3);
    }

    #[test]
    fn rado_clauses() {
        let r5 = rado(5).unwrap();
        let i = |p: &Poset, s: &str| p.index_of(s).unwrap();
        assert!(r5.leq(i(&r5, "(0,1)"), i(&r5, "(0,5)")));
        let r3 = rado(3).unwrap();
        assert!(r3.leq(i(&r3, "(0,1)"), i(&r3, "(2,3)")));
        let r4 = rado(4).unwrap();
        assert!(r4.incomparable(i(&r4, "(0,4)"), i(&r4, "(1,4)")));
    }

    #[test]
    fn lemma_fixtures() {
        assert_eq!(spider_a().len(), 7);
        let b = three_irreducible_b();
        assert_eq!(b.len(), 7);
        assert_eq!(b.strict_pair_count(), 6);
    }

    #[test]
    fn catalog_shape() {
        let cat = obstruction_catalog(2).unwrap();
        assert_eq!(cat.len(), 10);
        for (name, p) in &cat {
            if name.starts_with("b_") {
                // union of two antichains: no chain of length 3
                assert!(p.heights().iter().all(|&h| h <= 1), "{name}");
            }
        }
    }

    #[test]
    fn random_determinism_and_extremes() {
        assert!(random_poset(7, 0.0, 3).unwrap().is_antichain());
        assert!(random_poset(7, 1.0, 3).unwrap().is_chain());
        assert_eq!(random_poset(9, 0.4, 11).unwrap(), random_poset(9, 0.4, 11).unwrap());
    }

    #[test]
    fn class_counts() {
        // Oracle: canonical codes over all labelled posets by brute force.
        fn brute(n: usize) -> usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
            let mut codes = BTreeSet::new();
            for mask in 0u64..1 << pairs.len() {
                let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                let rel = |x: usize, y: usize| {
                    x == y || pairs.iter().position(|&p| p == (x, y)).is_some_and(|k| mask >> k & 1 == 1)
                };
                if let Ok(p) = Poset::from_fn(labels, rel) {
                    codes.insert(canonical_code(&p));
                }
            }
            codes.len()
        }
        assert_eq!(brute(2), 2);
        assert_eq!(brute(3), 5);
        assert_eq!(all_posets(2).unwrap().len(), 2);
        assert_eq!(all_posets(3).unwrap().len(), 5);
        assert_eq!(all_posets(4).unwrap().len(), brute(4));
        let counts: Vec<usize> = (0..=6).map(|n| all_posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63, 318]);
    }
}
