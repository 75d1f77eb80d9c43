//! Finite lattices: distributivity, join-irreducibles, prime spectra and chain factorizations.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::dimension::dm_dimension_with;
use crate::embed::is_isomorphic;
use crate::error::{check_size, Error, Result};
use crate::incidence::set_label;
use crate::limits::Limits;
use crate::poset::{direct_product_with, EmbeddingMap, Poset};
use crate::width::width;

/// Join and meet tables of a finite lattice.
#[derive(Debug, Clone)]
pub struct Lattice {
    n: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

fn least_in(p: &Poset, set: &BitSet) -> Option<usize> {
    set.iter().find(|&z| set.is_subset(p.up_set(z)))
}

fn greatest_in(p: &Poset, set: &BitSet) -> Option<usize> {
    set.iter().find(|&z| set.is_subset(p.down_set(z)))
}

impl Lattice {
    pub fn new(p: &Poset) -> Result<Lattice> {
        let n = p.len();
        if n == 0 {
            return Err(Error::NotALattice("empty poset".into()));
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let j = least_in(p, &p.up_set(x).intersection(p.up_set(y)))
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no join", p.label(x), p.label(y))))?;
                let m = greatest_in(p, &p.down_set(x).intersection(p.down_set(y)))
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no meet", p.label(x), p.label(y))))?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        let all = BitSet::full(n);
        let bottom = least_in(p, &all).expect("finite lattice has a bottom");
        let top = greatest_in(p, &all).expect("finite lattice has a top");
        Ok(Lattice { n, join, meet, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))))
        })
    }
}

/// Every pair has a join and a meet. The empty poset is not a lattice.
pub fn is_lattice(p: &Poset) -> bool {
    Lattice::new(p).is_ok()
}

pub fn is_distributive(p: &Poset) -> bool {
    Lattice::new(p).map(|l| l.is_distributive()).unwrap_or(false)
}

fn distributive(t: &Poset) -> Result<Lattice> {
    let l = Lattice::new(t).map_err(|e| Error::NotDistributive(e.to_string()))?;
    if !l.is_distributive() {
        return Err(Error::NotDistributive("distributive law fails on some triple".into()));
    }
    Ok(l)
}

/// Indices of the elements with exactly one lower cover.
pub fn join_irreducible_indices(t: &Poset) -> Result<Vec<usize>> {
    Lattice::new(t)?;
    Ok((0..t.len()).filter(|&x| t.lower_covers(x).len() == 1).collect())
}

pub fn join_irreducibles(t: &Poset) -> Result<Poset> {
    Ok(t.induced(&join_irreducible_indices(t)?))
}

/// A proper nonempty ideal whose complement is a filter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeIdeal {
    pub members: BitSet,
}

impl PrimeIdeal {
    pub fn verify(&self, t: &Poset, l: &Lattice) -> bool {
        let m = &self.members;
        let n = t.len();
        let comp = m.complement();
        !m.is_empty()
            && !comp.is_empty()
            && m.iter().all(|x| t.down_set(x).is_subset(m))
            && m.iter().all(|x| m.iter().all(|y| m.contains(l.join(x, y))))
            && comp.iter().all(|x| t.up_set(x).is_subset(&comp))
            && comp.iter().all(|x| comp.iter().all(|y| comp.contains(l.meet(x, y))))
            && m.capacity() == n
    }
}

/// The prime ideals of a finite distributive lattice ordered by inclusion.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub ideals: Vec<PrimeIdeal>,
    pub poset: Poset,
}

pub fn spectrum(t: &Poset) -> Result<Spectrum> {
    let l = distributive(t)?;
    let n = t.len();
    // Finite ideals are principal: test each proper down-set ↓a.
    let mut ideals = Vec::new();
    for a in (0..n).filter(|&a| a != l.top()) {
        let cand = PrimeIdeal {
            members: t.down_set(a).clone(),
        };
        if cand.verify(t, &l) {
            ideals.push(cand);
        }
    }
    let by_definition: BTreeSet<BitSet> = ideals.iter().map(|i| i.members.clone()).collect();
    let from_irreducibles: BTreeSet<BitSet> = join_irreducible_indices(t)?
        .into_iter()
        .map(|j| t.up_set(j).complement())
        .collect();
    if by_definition != from_irreducibles {
        return Err(Error::InternalInconsistency(
            "prime ideals differ from complements of principal filters of join-irreducibles".into(),
        ));
    }
    let labels = ideals.iter().map(|i| set_label(t.labels(), &i.members)).collect();
    let poset = Poset::from_fn(labels, |x, y| ideals[x].members.is_subset(&ideals[y].members))?;
    Ok(Spectrum { ideals, poset })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DilworthCheck {
    pub dimension: usize,
    pub spectrum_width: usize,
}

impl DilworthCheck {
    pub fn holds(&self) -> bool {
        self.dimension == self.spectrum_width
    }
}

/// Dimension of `t` beside the width of its spectrum. The two agree for every
/// distributive lattice with at least two elements; the one-element lattice
/// has an empty spectrum.
pub fn dilworth_check(t: &Poset) -> Result<DilworthCheck> {
    dilworth_check_with(t, &Limits::default())
}

pub fn dilworth_check_with(t: &Poset, limits: &Limits) -> Result<DilworthCheck> {
    let spec = spectrum(t)?;
    let (dimension, _) = dm_dimension_with(t, limits)?;
    Ok(DilworthCheck {
        dimension,
        spectrum_width: width(&spec.poset).width,
    })
}

/// `x ↦ (number of chain-i join-irreducibles below x)_i` for a chain cover of
/// the join-irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainFactorization {
    pub n: usize,
    /// Join-irreducibles of each chain, bottom to top, as indices into the lattice.
    pub chains: Vec<Vec<usize>>,
    pub coordinates: Vec<Vec<usize>>,
}

impl ChainFactorization {
    /// Order in both directions, joins and meets map to coordinatewise max and min.
    pub fn verify(&self, t: &Poset) -> bool {
        let Ok(l) = Lattice::new(t) else {
            return false;
        };
        let c = &self.coordinates;
        let n = t.len();
        if c.len() != n || c.iter().any(|v| v.len() != self.n) {
            return false;
        }
        let le = |x: usize, y: usize| c[x].iter().zip(&c[y]).all(|(a, b)| a <= b);
        let zip = |x: usize, y: usize, f: fn(usize, usize) -> usize| -> Vec<usize> {
            c[x].iter().zip(&c[y]).map(|(&a, &b)| f(a, b)).collect()
        };
        (0..n).all(|x| {
            (0..n).all(|y| {
                t.leq(x, y) == le(x, y)
                    && c[l.join(x, y)] == zip(x, y, usize::max)
                    && c[l.meet(x, y)] == zip(x, y, usize::min)
            })
        })
    }

    /// The product of chains (factor `i` has `|chains[i]| + 1` elements) and the map into it.
    pub fn to_embedding(&self, limits: &Limits) -> Result<(Poset, EmbeddingMap)> {
        let lens: Vec<usize> = self.chains.iter().map(|c| c.len() + 1).collect();
        let mut product = Poset::chain(1);
        for &k in &lens {
            product = direct_product_with(&product, &Poset::chain(k), limits)?;
        }
        let assignment = self
            .coordinates
            .iter()
            .map(|cs| cs.iter().zip(&lens).fold(0, |acc, (&c, &k)| acc * k + c))
            .collect();
        Ok((product, EmbeddingMap { assignment }))
    }
}

pub fn chain_factorization(t: &Poset) -> Result<ChainFactorization> {
    distributive(t)?;
    let ji = join_irreducible_indices(t)?;
    let jp = t.induced(&ji);
    let cover = width(&jp);
    let chains: Vec<Vec<usize>> = cover.chains.iter().map(|c| c.iter().map(|&i| ji[i]).collect()).collect();
    let coordinates = (0..t.len())
        .map(|x| chains.iter().map(|c| c.iter().filter(|&&j| t.leq(j, x)).count()).collect())
        .collect();
    let f = ChainFactorization {
        n: chains.len(),
        chains,
        coordinates,
    };
    if !f.verify(t) {
        return Err(Error::InternalInconsistency("chain factorization is not a lattice embedding".into()));
    }
    Ok(f)
}

/// All lattice homomorphisms from `t` onto a finite chain, as value vectors
/// normalised to `0..c`. Includes the constant map.
pub fn chain_homomorphisms(t: &Poset) -> Result<Vec<Vec<usize>>> {
    check_size("lattice for homomorphism enumeration", t.len(), 8)?;
    let l = Lattice::new(t)?;
    let order = t.topological_order();
    let n = t.len();
    let mut found = BTreeSet::new();
    let mut h = vec![usize::MAX; n];
    homs(t, &l, &order, 0, &mut h, &mut found);
    Ok(found.into_iter().collect())
}

fn homs(t: &Poset, l: &Lattice, order: &[usize], k: usize, h: &mut [usize], found: &mut BTreeSet<Vec<usize>>) {
    if k == order.len() {
        let n = t.len();
        let ok = (0..n).all(|x| {
            (0..n).all(|y| h[l.join(x, y)] == h[x].max(h[y]) && h[l.meet(x, y)] == h[x].min(h[y]))
        });
        if ok {
            let values: BTreeSet<usize> = h.iter().copied().collect();
            let rank: Vec<usize> = h.iter().map(|v| values.range(..v).count()).collect();
            found.insert(rank);
        }
        return;
    }
    let x = order[k];
    let lo = t.down_set(x).iter().filter(|&y| y != x).map(|y| h[y]).max().unwrap_or(0);
    for v in lo..order.len() {
        h[x] = v;
        homs(t, l, order, k + 1, h, found);
    }
    h[x] = usize::MAX;
}

/// Whether some `m` chain homomorphisms separate all points, i.e. `t` is a
/// sublattice of a product of `m` chains.
pub fn embeds_in_chain_product(t: &Poset, m: usize) -> Result<bool> {
    let hs = chain_homomorphisms(t)?;
    let n = t.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let all: u64 = if pairs.len() == 64 { u64::MAX } else { (1u64 << pairs.len()) - 1 };
    let masks: Vec<u64> = hs
        .iter()
        .map(|h| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| h[x] != h[y])
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    Ok(cover_with(&masks, all, 0, m))
}

fn cover_with(masks: &[u64], need: u64, start: usize, left: usize) -> bool {
    if need == 0 {
        return true;
    }
    if left == 0 {
        return false;
    }
    // Some chosen map must separate the lowest unseparated pair.
    let bit = need & need.wrapping_neg();
    (start..masks.len())
        .chain(0..start)
        .filter(|&i| masks[i] & bit != 0)
        .any(|i| cover_with(masks, need & !masks[i], start, left - 1))
}

/// The spectrum of the interval `[x, y]` matches the prime ideals of `t` that contain `x` but not `y`.
pub fn interval_spectrum_check(t: &Poset, x: usize, y: usize) -> Result<bool> {
    distributive(t)?;
    if !t.lt(x, y) {
        return Err(Error::PreconditionViolated(format!(
            "{} is not strictly below {}",
            t.label(x),
            t.label(y)
        )));
    }
    let interval: Vec<usize> = t.up_set(x).intersection(t.down_set(y)).iter().collect();
    let sub = spectrum(&t.induced(&interval))?;
    let full = spectrum(t)?;
    let keep: Vec<usize> = (0..full.ideals.len())
        .filter(|&i| full.ideals[i].members.contains(x) && !full.ideals[i].members.contains(y))
        .collect();
    is_isomorphic(&sub.poset, &full.poset.induced(&keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{all_posets_up_to, random_poset};
    use crate::incidence::initial_segments;
    use crate::poset::direct_product;
    use crate::RelationMode;

    fn boolean(k: usize) -> Poset {
        let c2 = Poset::chain(2);
        let mut b = Poset::chain(1);
        for _ in 0..k {
            b = direct_product(&b, &c2).unwrap();
        }
        b
    }

    fn m3() -> Poset {
        Poset::from_relation(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            RelationMode::Covers,
        )
        .unwrap()
    }

    #[test]
    fn lattice_tests() {
        assert!(is_lattice(&m3()));
        assert!(!is_distributive(&m3()));
        assert!(!is_lattice(&Poset::antichain(2)));
        assert!(!is_lattice(&Poset::empty()));
        assert!(is_distributive(&boolean(3)));
        for p in all_posets_up_to(4).unwrap() {
            assert!(is_distributive(&initial_segments(&p).unwrap().poset));
        }
    }

    #[test]
    fn irreducibles() {
        assert!(join_irreducibles(&boolean(3)).unwrap().is_antichain());
        assert_eq!(join_irreducibles(&boolean(3)).unwrap().len(), 3);
        let j = join_irreducibles(&Poset::chain(5)).unwrap();
        assert!(j.is_chain());
        assert_eq!(j.len(), 4);
        assert!(matches!(join_irreducibles(&Poset::antichain(2)), Err(Error::NotALattice(_))));
        for p in all_posets_up_to(5).unwrap() {
            let t = initial_segments(&p).unwrap().poset;
            assert!(is_isomorphic(&join_irreducibles(&t).unwrap(), &p).unwrap());
        }
    }

    #[test]
    fn spectra() {
        let s = spectrum(&Poset::chain(4)).unwrap();
        assert_eq!(s.poset.len(), 3);
        assert!(s.poset.is_chain());
        let s = spectrum(&boolean(2)).unwrap();
        assert_eq!(s.poset.len(), 2);
        assert!(s.poset.is_antichain());
        assert!(matches!(spectrum(&m3()), Err(Error::NotDistributive(_))));
        // Degenerate case: the 2-chain has a single prime ideal.
        assert_eq!(spectrum(&Poset::chain(2)).unwrap().poset.len(), 1);
        assert_eq!(spectrum(&Poset::chain(1)).unwrap().poset.len(), 0);
    }

    #[test]
    fn spectrum_is_order_isomorphic_to_irreducibles() {
        for p in all_posets_up_to(4).unwrap() {
            let t = initial_segments(&p).unwrap().poset;
            let s = spectrum(&t).unwrap();
            assert!(is_isomorphic(&s.poset, &join_irreducibles(&t).unwrap()).unwrap());
        }
    }

    #[test]
    fn dilworth() {
        let d = dilworth_check(&boolean(3)).unwrap();
        assert_eq!((d.dimension, d.spectrum_width), (3, 3));
        let d = dilworth_check(&Poset::chain(4)).unwrap();
        assert_eq!((d.dimension, d.spectrum_width), (1, 1));
        for p in all_posets_up_to(4).unwrap().into_iter().filter(|p| !p.is_empty()) {
            let t = initial_segments(&p).unwrap().poset;
            let d = dilworth_check(&t).unwrap();
            assert!(d.holds());
            assert_eq!(d.dimension, width(&p).width);
        }
    }

    #[test]
    fn factorization() {
        let f = chain_factorization(&boolean(2)).unwrap();
        assert_eq!(f.n, 2);
        let (prod, map) = f.to_embedding(&Limits::default()).unwrap();
        assert!(map.verify(&boolean(2), &prod));
        assert!(is_isomorphic(&prod, &boolean(2)).unwrap());
        for seed in 0..20 {
            let p = random_poset(6, 0.3, seed).unwrap();
            let t = initial_segments(&p).unwrap().poset;
            let f = chain_factorization(&t).unwrap();
            assert_eq!(f.n, width(&p).width);
            let (prod, map) = f.to_embedding(&Limits::default()).unwrap();
            assert!(map.verify(&t, &prod));
        }
    }

    #[test]
    fn factorization_is_minimal_on_small_lattices() {
        assert!(embeds_in_chain_product(&boolean(2), 2).unwrap());
        assert!(!embeds_in_chain_product(&boolean(2), 1).unwrap());
        assert!(!embeds_in_chain_product(&boolean(3), 2).unwrap());
        assert!(embeds_in_chain_product(&Poset::chain(5), 1).unwrap());
        assert!(embeds_in_chain_product(&Poset::chain(1), 0).unwrap());
    }

    #[test]
    fn intervals() {
        let b = boolean(2);
        let (bot, top) = {
            let l = Lattice::new(&b).unwrap();
            (l.bottom(), l.top())
        };
        assert!(interval_spectrum_check(&b, bot, top).unwrap());
        let c = Poset::chain(4);
        assert!(interval_spectrum_check(&c, 1, 2).unwrap());
        let inner: Vec<usize> = (1..=2).collect();
        assert_eq!(spectrum(&c.induced(&inner)).unwrap().poset.len(), 1);
        assert!(matches!(interval_spectrum_check(&c, 2, 1), Err(Error::PreconditionViolated(_))));
        for seed in 0..20 {
            let t = initial_segments(&random_poset(5, 0.3, seed).unwrap()).unwrap().poset;
            for x in 0..t.len() {
                for y in 0..t.len() {
                    if t.lt(x, y) {
                        assert!(interval_spectrum_check(&t, x, y).unwrap());
                    }
                }
            }
        }
    }
}
