//! Incidence structures, Galois lattices, MacNeille completion and splits.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::embed::find_embedding;
use crate::error::{check_size, Error, Result};
use crate::limits::Limits;
use crate::poset::{direct_product_with, ordinal_product_2, pair_label, EmbeddingMap, Poset};

/// A binary relation `rel ⊆ rows × cols`. `rel[x]` is the set of columns related to row `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    rows: Vec<String>,
    cols: Vec<String>,
    rel: Vec<BitSet>,
}

impl IncidenceStructure {
    pub fn new<S: AsRef<str>>(rows: &[S], cols: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let rows: Vec<String> = rows.iter().map(|s| s.as_ref().to_string()).collect();
        let cols: Vec<String> = cols.iter().map(|s| s.as_ref().to_string()).collect();
        for side in [&rows, &cols] {
            let mut seen = BTreeSet::new();
            for l in side.iter() {
                if !seen.insert(l) {
                    return Err(Error::DuplicateElement(l.clone()));
                }
            }
        }
        let find = |side: &[String], s: &str| {
            side.iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut rel = vec![BitSet::new(cols.len()); rows.len()];
        for (a, b) in pairs {
            let x = find(&rows, a.as_ref())?;
            let y = find(&cols, b.as_ref())?;
            rel[x].insert(y);
        }
        Ok(IncidenceStructure { rows, cols, rel })
    }

    pub fn from_fn<F: Fn(usize, usize) -> bool>(rows: Vec<String>, cols: Vec<String>, f: F) -> Self {
        let m = cols.len();
        let rel = (0..rows.len())
            .map(|x| BitSet::from_indices(m, (0..m).filter(|&y| f(x, y))))
            .collect();
        IncidenceStructure { rows, cols, rel }
    }

    /// `(E, <=, E)`
    pub fn leq(p: &Poset) -> Self {
        Self::from_fn(p.labels().to_vec(), p.labels().to_vec(), |x, y| p.leq(x, y))
    }

    /// `(E, <, E)`
    pub fn lt(p: &Poset) -> Self {
        Self::from_fn(p.labels().to_vec(), p.labels().to_vec(), |x, y| p.lt(x, y))
    }

    /// `x ρ y` iff `y` is not below `x`; its closed sets are exactly the down-sets of `p`.
    pub fn not_below(p: &Poset) -> Self {
        Self::from_fn(p.labels().to_vec(), p.labels().to_vec(), |x, y| !p.leq(y, x))
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn cols(&self) -> &[String] {
        &self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rel[x].contains(y)
    }

    /// Columns related to row `x`.
    pub fn row(&self, x: usize) -> &BitSet {
        &self.rel[x]
    }

    pub fn pair_count(&self) -> usize {
        self.rel.iter().map(BitSet::count).sum()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, r) in self.rel.iter().enumerate() {
            out.extend(r.iter().map(|y| (x, y)));
        }
        out
    }

    pub fn complement(&self) -> Self {
        IncidenceStructure {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            rel: self.rel.iter().map(BitSet::complement).collect(),
        }
    }

    pub fn structure_dual(&self) -> Self {
        Self::from_fn(self.cols.clone(), self.rows.clone(), |y, x| self.related(x, y))
    }

    /// Rows related to every column of `ys`.
    pub fn lower(&self, ys: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.rows.len(),
            (0..self.rows.len()).filter(|&x| ys.is_subset(&self.rel[x])),
        )
    }

    /// Columns related to every row of `xs`.
    pub fn upper(&self, xs: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.cols.len());
        for x in xs.iter() {
            out.intersect_with(&self.rel[x]);
        }
        out
    }

    /// `lower(upper(xs))`
    pub fn closure(&self, xs: &BitSet) -> BitSet {
        self.lower(&self.upper(xs))
    }
}

/// A family of subsets of a labelled ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    pub ground: Vec<String>,
    pub members: BTreeSet<BitSet>,
}

impl SubsetFamily {
    pub fn is_intersection_closed(&self) -> bool {
        self.members.contains(&BitSet::full(self.ground.len()))
            && self.members.iter().all(|a| {
                self.members
                    .iter()
                    .all(|b| self.members.contains(&a.intersection(b)))
            })
    }
}

/// Principal down-sets `{↓x : x ∈ P}`.
pub fn down_family(p: &Poset) -> SubsetFamily {
    SubsetFamily {
        ground: p.labels().to_vec(),
        members: (0..p.len()).map(|x| p.down_set(x).clone()).collect(),
    }
}

/// All intersections of subfamilies; the empty subfamily contributes the ground set.
pub fn moore_closure(family: &SubsetFamily) -> SubsetFamily {
    let mut members: BTreeSet<BitSet> = BTreeSet::new();
    members.insert(BitSet::full(family.ground.len()));
    for m in &family.members {
        let new: Vec<BitSet> = members.iter().map(|s| s.intersection(m)).collect();
        members.extend(new);
    }
    SubsetFamily {
        ground: family.ground.clone(),
        members,
    }
}

/// A poset whose elements are subsets of a ground set ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledLattice {
    pub poset: Poset,
    pub ground: Vec<String>,
    pub labels: Vec<BitSet>,
}

pub(crate) fn set_label(ground: &[String], s: &BitSet) -> String {
    let parts: Vec<&str> = s.iter().map(|i| ground[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

impl LabeledLattice {
    pub(crate) fn from_sets(ground: Vec<String>, sets: Vec<BitSet>) -> Self {
        let names = sets.iter().map(|s| set_label(&ground, s)).collect();
        let n = sets.len();
        let up = (0..n)
            .map(|i| BitSet::from_indices(n, (0..n).filter(|&j| sets[i].is_subset(&sets[j]))))
            .collect();
        LabeledLattice {
            poset: Poset::from_rows_unchecked(names, up),
            ground,
            labels: sets,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, set: &BitSet) -> Option<usize> {
        self.labels.iter().position(|s| s == set)
    }

    pub fn family(&self) -> SubsetFamily {
        SubsetFamily {
            ground: self.ground.clone(),
            members: self.labels.iter().cloned().collect(),
        }
    }

    /// Injective labels, order = inclusion, intersection-closed, contains the ground set.
    pub fn verify(&self) -> bool {
        let n = self.labels.len();
        let distinct = self.labels.iter().collect::<BTreeSet<_>>().len() == n;
        let order = (0..n).all(|i| {
            (0..n).all(|j| self.poset.leq(i, j) == self.labels[i].is_subset(&self.labels[j]))
        });
        distinct && order && self.family().is_intersection_closed()
    }
}

/// Enumerates the closed sets of a closure operator on `0..n` in lectic order.
fn next_closure<C>(n: usize, cap: usize, what: &'static str, close: C) -> Result<Vec<BitSet>>
where
    C: Fn(&BitSet) -> BitSet,
{
    let mut out = Vec::new();
    let mut current = close(&BitSet::new(n));
    loop {
        out.push(current.clone());
        check_size(what, out.len(), cap)?;
        let mut advanced = false;
        for i in (0..n).rev() {
            if current.contains(i) {
                current.remove(i);
                continue;
            }
            let mut cand = current.clone();
            cand.insert(i);
            let closed = close(&cand);
            // Accept if no new element below i was added.
            let fresh = closed.difference(&cand);
            if fresh.first().is_none_or(|j| j > i) {
                current = closed;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(out);
        }
    }
}

/// The Galois lattice of `r`: closed row-sets `lower(upper(X))` ordered by inclusion.
pub fn galois_lattice(r: &IncidenceStructure) -> Result<LabeledLattice> {
    galois_lattice_with(r, &Limits::default())
}

pub fn galois_lattice_with(r: &IncidenceStructure, limits: &Limits) -> Result<LabeledLattice> {
    let sets = next_closure(r.row_count(), limits.max_lattice, "galois lattice size", |x| {
        r.closure(x)
    })?;
    Ok(LabeledLattice::from_sets(r.rows.clone(), sets))
}

/// MacNeille completion: the Galois lattice of `(E, <=, E)`.
pub fn macneille(p: &Poset) -> Result<LabeledLattice> {
    macneille_with(p, &Limits::default())
}

pub fn macneille_with(p: &Poset, limits: &Limits) -> Result<LabeledLattice> {
    galois_lattice_with(&IncidenceStructure::leq(p), limits)
}

/// The lattice of down-sets of `p`, ordered by inclusion.
pub fn initial_segments(p: &Poset) -> Result<LabeledLattice> {
    initial_segments_with(p, &Limits::default())
}

pub fn initial_segments_with(p: &Poset, limits: &Limits) -> Result<LabeledLattice> {
    let n = p.len();
    let sets = next_closure(n, limits.max_lattice, "initial segment lattice size", |x| {
        let mut d = BitSet::new(n);
        for i in x.iter() {
            d.union_with(p.down_set(i));
        }
        d
    })?;
    Ok(LabeledLattice::from_sets(p.labels().to_vec(), sets))
}

/// A 2×2 crossing: `x ρ y`, `x' ρ y'` but neither `x ρ y'` nor `x' ρ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FerrersViolation {
    pub x: usize,
    pub y: usize,
    pub x2: usize,
    pub y2: usize,
}

/// Ferrers test by the quadruple definition, cross-checked against nested rows.
/// Returns the first violation in index order, if any.
pub fn ferrers_violation(r: &IncidenceStructure) -> Result<Option<FerrersViolation>> {
    let mut quad = None;
    'outer: for (x, y) in r.pairs() {
        for (x2, y2) in r.pairs() {
            if !r.related(x, y2) && !r.related(x2, y) {
                quad = Some(FerrersViolation { x, y, x2, y2 });
                break 'outer;
            }
        }
    }
    let n = r.row_count();
    let nested = (0..n).all(|a| {
        (0..n).all(|b| r.row(a).is_subset(r.row(b)) || r.row(b).is_subset(r.row(a)))
    });
    if nested != quad.is_none() {
        return Err(Error::InternalInconsistency(
            "Ferrers quadruple test and nested-rows test disagree".into(),
        ));
    }
    Ok(quad)
}

pub fn is_ferrers(r: &IncidenceStructure) -> Result<bool> {
    Ok(ferrers_violation(r)?.is_none())
}

/// A pair of maps `rows(R) -> rows(R')`, `cols(R) -> cols(R')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coding {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

/// `x ρ y` iff `f(x) ρ' g(y)` for every row `x` and column `y`.
pub fn is_coding(r: &IncidenceStructure, target: &IncidenceStructure, c: &Coding) -> bool {
    if c.f.len() != r.row_count() || c.g.len() != r.col_count() {
        return false;
    }
    if c.f.iter().any(|&v| v >= target.row_count()) || c.g.iter().any(|&v| v >= target.col_count()) {
        return false;
    }
    (0..r.row_count()).all(|x| {
        (0..r.col_count()).all(|y| r.related(x, y) == target.related(c.f[x], c.g[y]))
    })
}

/// `f(x) = lower(upper({x}))`, `g(y) = lower({y})`, as indices into `Gal(R)`.
/// The returned coding maps `R` into `(Gal(R), ⊆, Gal(R))`.
pub fn canonical_coding(r: &IncidenceStructure) -> Result<(LabeledLattice, Coding)> {
    canonical_coding_with(r, &Limits::default())
}

pub fn canonical_coding_with(
    r: &IncidenceStructure,
    limits: &Limits,
) -> Result<(LabeledLattice, Coding)> {
    let gal = galois_lattice_with(r, limits)?;
    let (n, m) = (r.row_count(), r.col_count());
    let locate = |s: BitSet| {
        gal.position(&s)
            .ok_or_else(|| Error::InternalInconsistency("closed set missing from lattice".into()))
    };
    let f = (0..n)
        .map(|x| locate(r.closure(&BitSet::from_indices(n, [x]))))
        .collect::<Result<Vec<_>>>()?;
    let g = (0..m)
        .map(|y| locate(r.lower(&BitSet::from_indices(m, [y]))))
        .collect::<Result<Vec<_>>>()?;
    let coding = Coding { f, g };
    let target = IncidenceStructure::leq(&gal.poset);
    if !is_coding(r, &target, &coding) {
        return Err(Error::InternalInconsistency("canonical pair is not a coding".into()));
    }
    Ok((gal, coding))
}

/// `B(R)`: rows tagged `(x,0)`, columns tagged `(y,1)`, `(x,0) < (y,1)` iff `x ρ y`.
pub fn bipartite(r: &IncidenceStructure) -> Poset {
    let (n, m) = (r.row_count(), r.col_count());
    let total = n + m;
    let labels = r
        .rows
        .iter()
        .map(|l| pair_label(l, "0"))
        .chain(r.cols.iter().map(|l| pair_label(l, "1")))
        .collect();
    let up = (0..total)
        .map(|i| {
            if i < n {
                BitSet::from_indices(total, std::iter::once(i).chain(r.rel[i].iter().map(|y| y + n)))
            } else {
                BitSet::from_indices(total, [i])
            }
        })
        .collect();
    Poset::from_rows_unchecked(labels, up)
}

/// `B(P) = B((E, <=, E))`
pub fn split(p: &Poset) -> Poset {
    bipartite(&IncidenceStructure::leq(p))
}

/// `B(P̌) = B((E, <, E))`
pub fn open_split(p: &Poset) -> Poset {
    bipartite(&IncidenceStructure::lt(p))
}

/// `B(P)` into `B((2·P)̌)` via rows `x ↦ (x,0)` and columns `y ↦ (y,1)`.
pub fn split_into_doubled_open_split(p: &Poset) -> (Poset, EmbeddingMap) {
    let n = p.len();
    let host = open_split(&ordinal_product_2(p));
    let assignment = (0..n).map(|x| 2 * x).chain((0..n).map(|y| 2 * n + 2 * y + 1)).collect();
    (host, EmbeddingMap { assignment })
}

/// `B(P̌)` into `B(2·P)` via rows `x ↦ (x,1)` and columns `y ↦ (y,0)`.
pub fn open_split_into_doubled_split(p: &Poset) -> (Poset, EmbeddingMap) {
    let n = p.len();
    let host = split(&ordinal_product_2(p));
    let assignment = (0..n).map(|x| 2 * x + 1).chain((0..n).map(|y| 2 * n + 2 * y)).collect();
    (host, EmbeddingMap { assignment })
}

/// `B(P)` into `P × (D + D)` where `D` is a linear extension of the dual:
/// `(x,0) ↦ (x, pos_D x)` and `(y,1) ↦ (y, |P| + pos_D y)`.
pub fn split_into_chain_product(p: &Poset, limits: &Limits) -> Result<(Poset, EmbeddingMap)> {
    let n = p.len();
    let mut d = p.topological_order();
    d.reverse();
    let mut pos = vec![0; n];
    for (i, &x) in d.iter().enumerate() {
        pos[x] = i;
    }
    let host = direct_product_with(p, &Poset::chain(2 * n), limits)?;
    let assignment = (0..n)
        .map(|x| x * 2 * n + pos[x])
        .chain((0..n).map(|y| y * 2 * n + n + pos[y]))
        .collect();
    Ok((host, EmbeddingMap { assignment }))
}

fn two_plus_two() -> Poset {
    Poset::from_relation(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], crate::RelationMode::Pairs)
        .expect("fixture")
}

/// Interval-order test: the strict order is Ferrers, cross-checked against
/// the absence of an induced `2+2`.
pub fn is_interval_order(p: &Poset) -> Result<bool> {
    let ferrers = is_ferrers(&IncidenceStructure::lt(p))?;
    let has_2p2 = find_embedding(&two_plus_two(), p)?.is_some();
    if ferrers == has_2p2 {
        return Err(Error::InternalInconsistency(
            "Ferrers test and 2+2 search disagree on interval order".into(),
        ));
    }
    Ok(ferrers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::is_isomorphic;
    use crate::generators::all_posets_up_to;
    use crate::RelationMode;

    fn staircase() -> IncidenceStructure {
        let l = vec!["1".to_string(), "2".into(), "3".into()];
        IncidenceStructure::from_fn(l.clone(), l, |x, y| (x + 1) + (y + 1) <= 4)
    }

    fn set(n: usize, xs: &[usize]) -> BitSet {
        BitSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn complement_and_dual_involutions() {
        let r = staircase();
        assert_eq!(r.complement().complement(), r);
        assert_eq!(r.structure_dual().structure_dual(), r);
        let full = IncidenceStructure::from_fn(vec!["a".into()], vec!["b".into(), "c".into()], |_, _| true);
        assert_eq!(full.complement().pair_count(), 0);
    }

    #[test]
    fn polars() {
        let r = staircase();
        assert_eq!(r.lower(&BitSet::new(3)), BitSet::full(3));
        assert_eq!(r.lower(&set(3, &[2])), set(3, &[0]));
        assert_eq!(r.upper(&set(3, &[0])), r.structure_dual().lower(&set(3, &[0])));
        for mask in 0..8usize {
            let y = BitSet::from_indices(3, (0..3).filter(|i| mask >> i & 1 == 1));
            let l = r.lower(&y);
            assert_eq!(r.lower(&r.upper(&l)), l);
        }
    }

    #[test]
    fn galois_lattices() {
        let empty = IncidenceStructure::from_fn(vec!["a".into(), "b".into()], vec!["c".into()], |_, _| false);
        let g = galois_lattice(&empty).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.poset.is_chain());
        assert!(g.verify());

        let g = galois_lattice(&staircase()).unwrap();
        assert!(g.poset.is_chain());

        let r = IncidenceStructure::from_fn(
            vec!["a".into(), "b".into(), "c".into()],
            vec!["x".into(), "y".into(), "z".into()],
            |i, j| i != j,
        );
        let g = galois_lattice(&r).unwrap();
        let gd = galois_lattice(&r.structure_dual()).unwrap();
        assert_eq!(g.len(), 8);
        assert!(is_isomorphic(&gd.poset, &g.poset.dual()).unwrap());
    }

    #[test]
    fn lectic_order_is_deterministic_and_duplicate_free() {
        let r = staircase().complement();
        let g = galois_lattice(&r).unwrap();
        let uniq: BTreeSet<_> = g.labels.iter().collect();
        assert_eq!(uniq.len(), g.len());
        assert_eq!(g, galois_lattice(&r).unwrap());
    }

    #[test]
    fn macneille_examples() {
        let m = macneille(&Poset::chain(4)).unwrap();
        assert!(is_isomorphic(&m.poset, &Poset::chain(4)).unwrap());

        let m = macneille(&Poset::antichain(2)).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.labels.contains(&BitSet::new(2)));

        let p = two_plus_two();
        let m = macneille(&p).unwrap();
        // Oracle: every cut lower(upper(X)) over all 16 subsets X.
        let r = IncidenceStructure::leq(&p);
        let cuts: BTreeSet<BitSet> = (0..16usize)
            .map(|mask| r.closure(&BitSet::from_indices(4, (0..4).filter(|i| mask >> i & 1 == 1))))
            .collect();
        assert_eq!(cuts.len(), 6);
        assert_eq!(m.labels.iter().cloned().collect::<BTreeSet<_>>(), cuts);
        for x in 0..4 {
            assert!(m.position(p.down_set(x)).is_some());
        }
    }

    #[test]
    fn initial_segment_lattices() {
        let s = initial_segments(&Poset::antichain(3)).unwrap();
        assert_eq!(s.len(), 8);
        let s = initial_segments(&Poset::chain(3)).unwrap();
        assert!(s.poset.is_chain() && s.len() == 4);
        for p in all_posets_up_to(4).unwrap() {
            let direct = initial_segments(&p).unwrap();
            let via = galois_lattice(&IncidenceStructure::not_below(&p)).unwrap();
            let a: BTreeSet<_> = direct.labels.iter().collect();
            let b: BTreeSet<_> = via.labels.iter().collect();
            assert_eq!(a, b);
            assert!(direct.verify());
        }
        let tight = Limits {
            max_lattice: 100,
            ..Limits::default()
        };
        assert!(initial_segments_with(&Poset::antichain(8), &tight).is_err());
    }

    #[test]
    fn moore_families() {
        let f = SubsetFamily {
            ground: vec!["a".into(), "b".into(), "c".into()],
            members: [set(3, &[0]), set(3, &[1])].into_iter().collect(),
        };
        let m = moore_closure(&f);
        let expect: BTreeSet<_> = [BitSet::new(3), set(3, &[0]), set(3, &[1]), BitSet::full(3)]
            .into_iter()
            .collect();
        assert_eq!(m.members, expect);
        assert_eq!(moore_closure(&m), m);
        assert!(m.is_intersection_closed());

        let d = down_family(&Poset::antichain(2));
        assert_eq!(d.members.len(), 2);
        for p in all_posets_up_to(5).unwrap() {
            assert_eq!(down_family(&p).members.len(), p.len());
            let labels: BTreeSet<_> = macneille(&p).unwrap().labels.into_iter().collect();
            assert_eq!(moore_closure(&down_family(&p)).members, labels);
        }
    }

    #[test]
    fn ferrers_examples() {
        assert!(is_ferrers(&staircase()).unwrap());
        let id = IncidenceStructure::from_fn(vec!["1".into(), "2".into()], vec!["1".into(), "2".into()], |x, y| x == y);
        let v = ferrers_violation(&id).unwrap().unwrap();
        assert_eq!((v.x, v.y, v.x2, v.y2), (0, 0, 1, 1));
        assert!(!is_ferrers(&IncidenceStructure::lt(&two_plus_two())).unwrap());
    }

    #[test]
    fn codings() {
        let r = staircase().complement();
        let id = Coding {
            f: (0..3).collect(),
            g: (0..3).collect(),
        };
        assert!(is_coding(&r, &r, &id));
        let konst = Coding {
            f: vec![0; 3],
            g: vec![0; 3],
        };
        assert!(!is_coding(&r, &r, &konst));
        for p in all_posets_up_to(4).unwrap() {
            for r in [IncidenceStructure::lt(&p), IncidenceStructure::not_below(&p)] {
                let (gal, c) = canonical_coding(&r).unwrap();
                for x in 0..r.row_count() {
                    for y in 0..r.col_count() {
                        assert_eq!(r.related(x, y), gal.labels[c.f[x]].is_subset(&gal.labels[c.g[y]]));
                    }
                }
            }
        }
    }

    #[test]
    fn splits() {
        let one = Poset::chain(1);
        assert!(split(&one).is_chain() && split(&one).len() == 2);
        assert!(open_split(&one).is_antichain() && open_split(&one).len() == 2);
        let os = open_split(&Poset::from_relation(&["a", "b"], &[("a", "b")], RelationMode::Pairs).unwrap());
        assert_eq!(os.len(), 4);
        assert_eq!(os.strict_pair_count(), 1);
        assert!(os.lt(os.index_of("(a,0)").unwrap(), os.index_of("(b,1)").unwrap()));
    }

    #[test]
    fn explicit_split_embeddings() {
        for p in all_posets_up_to(4).unwrap() {
            let (h, m) = split_into_doubled_open_split(&p);
            assert!(m.verify(&split(&p), &h));
            let (h, m) = open_split_into_doubled_split(&p);
            assert!(m.verify(&open_split(&p), &h));
        }
        for p in all_posets_up_to(5).unwrap() {
            let (h, m) = split_into_chain_product(&p, &Limits::default()).unwrap();
            assert!(m.verify(&split(&p), &h));
        }
    }

    #[test]
    fn interval_orders() {
        assert!(is_interval_order(&Poset::chain(5)).unwrap());
        assert!(!is_interval_order(&two_plus_two()).unwrap());
        let v = Poset::from_relation(&["z", "a", "b"], &[("z", "a"), ("z", "b")], RelationMode::Covers).unwrap();
        assert!(is_interval_order(&v).unwrap());
        for p in all_posets_up_to(5).unwrap() {
            is_interval_order(&p).unwrap();
        }
    }
}
