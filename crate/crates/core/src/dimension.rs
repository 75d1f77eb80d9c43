//! Exact Dushnik–Miller, interval and Ferrers dimension with certificates.
//!
//! The solver colours the critical pairs of the poset: a set of critical pairs
//! can be reversed by one linear extension iff adding all reversals keeps the
//! order acyclic. Colour classes are grown incrementally with a transitive
//! closure per colour, so an alternating cycle of any length is detected the
//! moment it would close.

use crate::bitset::BitSet;
use crate::error::{check_size, Error, Result};
use crate::incidence::{canonical_coding_with, IncidenceStructure};
use crate::limits::Limits;
use crate::poset::{direct_product_with, EmbeddingMap, LinearOrder, Poset};

/// Linear extensions whose intersection is the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    pub extensions: Vec<LinearOrder>,
}

impl Realizer {
    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn verify(&self, p: &Poset) -> bool {
        if self.extensions.is_empty() || !self.extensions.iter().all(|l| l.is_extension_of(p)) {
            return false;
        }
        let pos: Vec<Vec<usize>> = self.extensions.iter().map(LinearOrder::positions).collect();
        (0..p.len()).all(|x| {
            (0..p.len()).all(|y| x == y || p.lt(x, y) == pos.iter().all(|ps| ps[x] < ps[y]))
        })
    }
}

/// Ferrers super-relations of `ρ` intersecting to `ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersCover {
    pub relations: Vec<IncidenceStructure>,
}

impl FerrersCover {
    pub fn verify(&self, r: &IncidenceStructure) -> bool {
        if self.relations.is_empty() {
            return false;
        }
        let (n, m) = (r.row_count(), r.col_count());
        for rel in &self.relations {
            if rel.row_count() != n || rel.col_count() != m {
                return false;
            }
            if !matches!(crate::incidence::is_ferrers(rel), Ok(true)) {
                return false;
            }
        }
        (0..n).all(|x| {
            (0..m).all(|y| r.related(x, y) == self.relations.iter().all(|s| s.related(x, y)))
        })
    }
}

/// Incomparable pairs `(a, b)` with `D(a) ⊆ D(b)` and `U(b) ⊆ U(a)` (strict sets).
/// A family of extensions is a realizer iff each such pair has `b` below `a` somewhere.
pub fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || p.comparable(a, b) {
                continue;
            }
            let mut da = p.down_set(a).clone();
            da.remove(a);
            let mut ub = p.up_set(b).clone();
            ub.remove(b);
            if da.is_subset(p.down_set(b)) && ub.is_subset(p.up_set(a)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// One colour class: the order plus every reversal assigned to it, transitively closed.
#[derive(Clone)]
struct Closure {
    up: Vec<BitSet>,
}

impl Closure {
    fn of(p: &Poset) -> Self {
        Closure {
            up: p.rows().to_vec(),
        }
    }

    #[inline]
    fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Can `b < a` be added without a cycle?
    #[inline]
    fn admits(&self, (a, b): (usize, usize)) -> bool {
        !self.leq(a, b)
    }

    #[inline]
    fn reverses(&self, (a, b): (usize, usize)) -> bool {
        self.leq(b, a)
    }

    fn add(&mut self, (a, b): (usize, usize)) {
        let row_a = self.up[a].clone();
        for u in 0..self.up.len() {
            if self.up[u].contains(b) {
                self.up[u].union_with(&row_a);
            }
        }
    }

    fn extension(&self) -> LinearOrder {
        let n = self.up.len();
        let below: Vec<usize> = (0..n)
            .map(|x| (0..n).filter(|&u| self.up[u].contains(x)).count())
            .collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&x| (below[x], x));
        LinearOrder::new_unchecked(perm)
    }
}

struct Colouring<'a> {
    pairs: &'a [(usize, usize)],
    k: usize,
    nodes: u64,
    budget: u64,
}

impl Colouring<'_> {
    fn solve(&mut self, classes: &mut Vec<Closure>, base: &Closure) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SizeLimitExceeded {
                what: "dimension search nodes",
                size: self.nodes as usize,
                limit: self.budget as usize,
            });
        }
        // Most constrained unreversed pair first.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (i, &pair) in self.pairs.iter().enumerate() {
            if classes.iter().any(|c| c.reverses(pair)) {
                continue;
            }
            let mut options: Vec<usize> = (0..classes.len()).filter(|&c| classes[c].admits(pair)).collect();
            if classes.len() < self.k {
                options.push(classes.len());
            }
            if options.is_empty() {
                return Ok(false);
            }
            if best.as_ref().is_none_or(|(_, o)| options.len() < o.len()) {
                let forced = options.len() == 1;
                best = Some((i, options));
                if forced {
                    break;
                }
            }
        }
        let Some((i, options)) = best else {
            return Ok(true);
        };
        let pair = self.pairs[i];
        for c in options {
            if c == classes.len() {
                let mut fresh = base.clone();
                fresh.add(pair);
                classes.push(fresh);
                if self.solve(classes, base)? {
                    return Ok(true);
                }
                classes.pop();
            } else {
                let saved = classes[c].clone();
                classes[c].add(pair);
                if self.solve(classes, base)? {
                    return Ok(true);
                }
                classes[c] = saved;
            }
        }
        Ok(false)
    }
}

/// Pairs that cannot share an extension because they form a 2-element alternating cycle.
fn conflicts(p: &Poset, pairs: &[(usize, usize)]) -> Vec<BitSet> {
    let m = pairs.len();
    (0..m)
        .map(|i| {
            let (a1, b1) = pairs[i];
            BitSet::from_indices(
                m,
                (0..m).filter(|&j| {
                    let (a2, b2) = pairs[j];
                    i != j && p.leq(a1, b2) && p.leq(a2, b1)
                }),
            )
        })
        .collect()
}

fn greedy_clique(adj: &[BitSet]) -> usize {
    let m = adj.len();
    let mut best = 0;
    for seed in 0..m {
        let mut cand = adj[seed].clone();
        let mut size = 1;
        while let Some(v) = cand.iter().max_by_key(|&v| (adj[v].intersection(&cand).count(), usize::MAX - v)) {
            size += 1;
            cand.intersect_with(&adj[v]);
        }
        best = best.max(size);
    }
    best
}

fn greedy_classes(p: &Poset, pairs: &[(usize, usize)]) -> Vec<Closure> {
    let base = Closure::of(p);
    let mut classes: Vec<Closure> = Vec::new();
    for &pair in pairs {
        if classes.iter().any(|c| c.reverses(pair)) {
            continue;
        }
        match classes.iter_mut().find(|c| c.admits(pair)) {
            Some(c) => c.add(pair),
            None => {
                let mut c = base.clone();
                c.add(pair);
                classes.push(c);
            }
        }
    }
    classes
}

/// Exact order dimension with a minimum realizer. Empty and one-element posets have dimension 1.
pub fn dm_dimension(p: &Poset) -> Result<(usize, Realizer)> {
    dm_dimension_with(p, &Limits::default())
}

pub fn dm_dimension_with(p: &Poset, limits: &Limits) -> Result<(usize, Realizer)> {
    check_size("dimension solver elements", p.len(), limits.max_lattice)?;
    let pairs = critical_pairs(p);
    if pairs.is_empty() {
        let r = Realizer {
            extensions: vec![Closure::of(p).extension()],
        };
        return Ok((1, r));
    }
    let greedy = greedy_classes(p, &pairs);
    let upper = greedy.len();
    let lower = greedy_clique(&conflicts(p, &pairs)).max(2);
    let base = Closure::of(p);
    let mut found = greedy;
    for k in lower..upper {
        let mut solver = Colouring {
            pairs: &pairs,
            k,
            nodes: 0,
            budget: limits.search_budget,
        };
        let mut classes = Vec::new();
        if solver.solve(&mut classes, &base)? {
            found = classes;
            break;
        }
    }
    let realizer = Realizer {
        extensions: found.iter().map(Closure::extension).collect(),
    };
    if !realizer.verify(p) {
        return Err(Error::InternalInconsistency("solver produced an invalid realizer".into()));
    }
    Ok((realizer.len(), realizer))
}

/// Independent brute force: smallest `k` such that some `k` linear extensions
/// intersect to the order. Extensions come from filtering all permutations.
pub fn dm_dimension_oracle(p: &Poset) -> Result<usize> {
    dm_dimension_oracle_with(p, &Limits::default())
}

pub fn dm_dimension_oracle_with(p: &Poset, limits: &Limits) -> Result<usize> {
    let n = p.len();
    check_size("dimension oracle elements", n, limits.max_oracle.min(8))?;
    if n <= 1 {
        return Ok(1);
    }
    let bit = |x: usize, y: usize| 1u64 << (x * n + y);
    let mut target = 0u64;
    let mut all = 0u64;
    for x in 0..n {
        for y in 0..n {
            if x != y {
                all |= bit(x, y);
                if p.lt(x, y) {
                    target |= bit(x, y);
                }
            }
        }
    }
    let mut masks = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut pos = vec![0; n];
        for (i, &x) in perm.iter().enumerate() {
            pos[x] = i;
        }
        if (0..n).all(|x| (0..n).all(|y| !p.lt(x, y) || pos[x] < pos[y])) {
            let mut m = 0u64;
            for x in 0..n {
                for y in 0..n {
                    if x != y && pos[x] < pos[y] {
                        m |= bit(x, y);
                    }
                }
            }
            masks.push(m);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    fn search(masks: &[u64], inter: u64, target: u64, depth: usize, n: usize) -> bool {
        if inter == target {
            return true;
        }
        if depth == 0 {
            return false;
        }
        // First pair still ordered the same way by every chosen extension.
        let (x, y) = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| x != y && inter >> (x * n + y) & 1 == 1 && target >> (x * n + y) & 1 == 0)
            .expect("inter differs from target");
        let need = 1u64 << (y * n + x);
        masks
            .iter()
            .filter(|&&m| m & need != 0)
            .any(|&m| search(masks, inter & m, target, depth - 1, n))
    }
    for k in 1..=n {
        if search(&masks, all, target, k, n) {
            return Ok(k);
        }
    }
    Err(Error::InternalInconsistency("no realizer found by oracle".into()))
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Ferrers dimension via the dimension of the Galois lattice. The cover is
/// synthesised from a minimum realizer of `Gal(R)` through the canonical coding.
pub fn ferrers_dimension(r: &IncidenceStructure) -> Result<(usize, FerrersCover)> {
    ferrers_dimension_with(r, &Limits::default())
}

pub fn ferrers_dimension_with(r: &IncidenceStructure, limits: &Limits) -> Result<(usize, FerrersCover)> {
    let (gal, coding) = canonical_coding_with(r, limits)?;
    let (k, realizer) = dm_dimension_with(&gal.poset, limits)?;
    let relations = realizer
        .extensions
        .iter()
        .map(|l| {
            let pos = l.positions();
            IncidenceStructure::from_fn(r.rows().to_vec(), r.cols().to_vec(), |x, y| {
                pos[coding.f[x]] <= pos[coding.g[y]]
            })
        })
        .collect();
    let cover = FerrersCover { relations };
    if !cover.verify(r) {
        return Err(Error::InternalInconsistency("synthesised Ferrers cover does not verify".into()));
    }
    Ok((k, cover))
}

/// Interval dimension: the Ferrers dimension of the strict order.
pub fn interval_dimension(p: &Poset) -> Result<usize> {
    interval_dimension_with(p, &Limits::default())
}

pub fn interval_dimension_with(p: &Poset, limits: &Limits) -> Result<usize> {
    Ok(ferrers_dimension_with(&IncidenceStructure::lt(p), limits)?.0)
}

/// Brute-force search for a `k`-member Ferrers cover of `r`. `None` is a proof of absence.
///
/// Only inclusion-minimal Ferrers super-relations of `ρ` are considered: any
/// cover can trade each member for a minimal one below it.
pub fn minimal_ferrers_cover_oracle(r: &IncidenceStructure, k: usize) -> Result<Option<FerrersCover>> {
    minimal_ferrers_cover_oracle_with(r, k, &Limits::default())
}

pub fn minimal_ferrers_cover_oracle_with(
    r: &IncidenceStructure,
    k: usize,
    limits: &Limits,
) -> Result<Option<FerrersCover>> {
    let (n, m) = (r.row_count(), r.col_count());
    let cells = n * m;
    check_size("Ferrers oracle cells", cells, limits.max_ferrers_cells.min(24))?;
    let cell = |x: usize, y: usize| 1u32 << (x * m + y);
    let mut rho = 0u32;
    for (x, y) in r.pairs() {
        rho |= cell(x, y);
    }
    let free: Vec<u32> = (0..cells as u32).filter(|&c| rho >> c & 1 == 0).collect();
    let row_bits = if m == 0 { 0 } else { (1u32 << m) - 1 };
    let row_mask = |rel: u32, x: usize| (rel >> (x * m)) & row_bits;
    let is_ferrers = |rel: u32| {
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (ra, rb) = (row_mask(rel, a), row_mask(rel, b));
                ra & !rb == 0 || rb & !ra == 0
            })
        })
    };
    let mut supers: Vec<u32> = Vec::new();
    for sub in 0u32..1 << free.len() {
        let mut rel = rho;
        for (i, &c) in free.iter().enumerate() {
            if sub >> i & 1 == 1 {
                rel |= 1 << c;
            }
        }
        if is_ferrers(rel) {
            supers.push(rel);
        }
    }
    let minimal: Vec<u32> = supers
        .iter()
        .copied()
        .filter(|&a| !supers.iter().any(|&b| b != a && b & !a == 0))
        .collect();
    let outside: u32 = free.iter().fold(0, |acc, &c| acc | 1 << c);

    fn cover(minimal: &[u32], excluded: u32, outside: u32, left: usize, chosen: &mut Vec<u32>) -> bool {
        let missing = outside & !excluded;
        if missing == 0 {
            return true;
        }
        if left == 0 {
            return false;
        }
        let c = missing.trailing_zeros();
        for &f in minimal.iter().filter(|&&f| f >> c & 1 == 0) {
            chosen.push(f);
            if cover(minimal, excluded | (outside & !f), outside, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if k == 0 || !cover(&minimal, 0, outside, k, &mut chosen) {
        return Ok(None);
    }
    // Pad with the full relation so exactly k members are returned.
    let full = if cells == 0 { 0 } else { u32::MAX >> (32 - cells) };
    while chosen.len() < k {
        chosen.push(full);
    }
    let relations = chosen
        .iter()
        .map(|&rel| {
            IncidenceStructure::from_fn(r.rows().to_vec(), r.cols().to_vec(), |x, y| rel & cell(x, y) != 0)
        })
        .collect();
    Ok(Some(FerrersCover { relations }))
}

/// Smallest `k` for which the oracle finds a cover.
pub fn ferrers_dimension_oracle(r: &IncidenceStructure) -> Result<usize> {
    for k in 1..=r.row_count().max(r.col_count()).max(1) {
        if minimal_ferrers_cover_oracle(r, k)?.is_some() {
            return Ok(k);
        }
    }
    Err(Error::InternalInconsistency("no Ferrers cover found".into()))
}

/// `x ↦ (rank of x in each extension)`, an embedding into a product of chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainProductEmbedding {
    /// Length of each chain factor (the number of elements of `P`).
    pub chain_len: usize,
    pub coordinates: Vec<Vec<usize>>,
}

impl ChainProductEmbedding {
    pub fn verify(&self, p: &Poset) -> bool {
        let c = &self.coordinates;
        let distinct = (0..c.len()).all(|x| (x + 1..c.len()).all(|y| c[x] != c[y]));
        distinct
            && (0..p.len()).all(|x| {
                (0..p.len()).all(|y| p.leq(x, y) == c[x].iter().zip(&c[y]).all(|(a, b)| a <= b))
            })
    }

    /// Materialises the product of chains and the embedding map into it.
    pub fn to_embedding(&self, limits: &Limits) -> Result<(Poset, EmbeddingMap)> {
        let k = self.coordinates.first().map_or(0, Vec::len);
        let chain = Poset::chain(self.chain_len);
        let mut product = Poset::chain(1);
        for _ in 0..k {
            product = direct_product_with(&product, &chain, limits)?;
        }
        // Index of (c_1, ..., c_k) in the row-major product (leading 1-chain factor).
        let assignment = self
            .coordinates
            .iter()
            .map(|cs| cs.iter().fold(0, |acc, &c| acc * self.chain_len + c))
            .collect();
        Ok((product, EmbeddingMap { assignment }))
    }
}

pub fn chain_product_embedding(p: &Poset, r: &Realizer) -> Result<ChainProductEmbedding> {
    if !r.verify(p) {
        return Err(Error::InvalidRealizer("extensions do not intersect to the order".into()));
    }
    let pos: Vec<Vec<usize>> = r.extensions.iter().map(LinearOrder::positions).collect();
    let coordinates = (0..p.len())
        .map(|x| pos.iter().map(|ps| ps[x]).collect())
        .collect();
    let e = ChainProductEmbedding {
        chain_len: p.len(),
        coordinates,
    };
    debug_assert!(e.verify(p));
    Ok(e)
}
