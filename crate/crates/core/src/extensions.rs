//! Linear extensions, separation, conjugate orders and transitive orientations.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::dimension::dm_dimension_with;
use crate::error::{check_size, Error, Result};
use crate::generators::binary_tree;
use crate::limits::Limits;
use crate::poset::{Graph, LinearOrder, Poset};

/// Lazily enumerates every linear extension once, in lexicographic order of index sequences.
pub struct LinearExtensions<'a> {
    p: &'a Poset,
    prefix: Vec<usize>,
    next_try: Vec<usize>,
    placed: BitSet,
    done: bool,
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        let n = self.p.len();
        if self.done {
            return None;
        }
        loop {
            let d = self.prefix.len();
            if d == n {
                let out = LinearOrder::new_unchecked(self.prefix.clone());
                match self.prefix.pop() {
                    Some(x) => self.placed.remove(x),
                    None => self.done = true,
                }
                return Some(out);
            }
            let start = self.next_try[d];
            let cand = (start..n).find(|&x| {
                !self.placed.contains(x)
                    && self.p.down_set(x).iter().all(|y| y == x || self.placed.contains(y))
            });
            match cand {
                Some(x) => {
                    self.next_try[d] = x + 1;
                    self.next_try[d + 1] = 0;
                    self.prefix.push(x);
                    self.placed.insert(x);
                }
                None => {
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    let x = self.prefix.pop().expect("nonempty prefix");
                    self.placed.remove(x);
                }
            }
        }
    }
}

pub fn linear_extensions(p: &Poset) -> Result<LinearExtensions<'_>> {
    linear_extensions_with(p, &Limits::default())
}

pub fn linear_extensions_with<'a>(p: &'a Poset, limits: &Limits) -> Result<LinearExtensions<'a>> {
    check_size("linear extension enumeration", p.len(), limits.max_enumeration)?;
    Ok(LinearExtensions {
        p,
        prefix: Vec::with_capacity(p.len()),
        next_try: vec![0; p.len() + 1],
        placed: BitSet::new(p.len()),
        done: false,
    })
}

/// `x <_P z`, `y ∥ x`, `y ∥ z` and `x <_L y <_L z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// The first separating triple of `l` (by positions of `x`, then `z`, then `y`), if any.
pub fn is_separating(p: &Poset, l: &LinearOrder) -> Result<Option<SeparationWitness>> {
    if !l.is_extension_of(p) {
        return Err(Error::NotAnExtension(l.labels(p).join(" ")));
    }
    Ok(separation_witness(p, l))
}

fn separation_witness(p: &Poset, l: &LinearOrder) -> Option<SeparationWitness> {
    let seq = l.as_slice();
    for (i, &x) in seq.iter().enumerate() {
        for (k, &z) in seq.iter().enumerate().skip(i + 1) {
            if !p.lt(x, z) {
                continue;
            }
            if let Some(&y) = seq[i + 1..k]
                .iter()
                .find(|&&y| p.incomparable(x, y) && p.incomparable(y, z))
            {
                return Some(SeparationWitness { x, y, z });
            }
        }
    }
    None
}

/// Depth-first search over extensions, pruning any prefix that already forces a separating triple.
pub fn find_nonseparating_extension(p: &Poset) -> Result<Option<LinearOrder>> {
    find_nonseparating_extension_with(p, &Limits::default())
}

pub fn find_nonseparating_extension_with(p: &Poset, limits: &Limits) -> Result<Option<LinearOrder>> {
    check_size("non-separating search elements", p.len(), limits.max_elements)?;
    let mut search = NonSepSearch::new(p, limits.search_budget);
    let mut prefix = Vec::with_capacity(p.len());
    if search.extend(&mut prefix, &mut |_| true)? {
        Ok(Some(LinearOrder::new_unchecked(prefix)))
    } else {
        Ok(None)
    }
}

/// Every non-separating extension, stopping after `cap` of them.
/// Returns the extensions and whether the enumeration was complete.
pub fn nonseparating_extensions(p: &Poset, cap: usize, limits: &Limits) -> Result<(Vec<LinearOrder>, bool)> {
    check_size("non-separating search elements", p.len(), limits.max_elements)?;
    let mut search = NonSepSearch::new(p, limits.search_budget);
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(p.len());
    let stopped = search.extend(&mut prefix, &mut |ext| {
        out.push(LinearOrder::new_unchecked(ext.to_vec()));
        out.len() >= cap
    })?;
    Ok((out, !stopped))
}

struct NonSepSearch<'a> {
    p: &'a Poset,
    placed: BitSet,
    nodes: u64,
    budget: u64,
    order: Vec<usize>,
}

impl<'a> NonSepSearch<'a> {
    fn new(p: &'a Poset, budget: u64) -> Self {
        NonSepSearch {
            p,
            placed: BitSet::new(p.len()),
            nodes: 0,
            budget,
            order: (0..p.len()).collect(),
        }
    }

    /// Placing `y` is fatal if some placed `x ∥ y` has an unplaced `z > x` with `z ∥ y`:
    /// that `z` must come after `y`, giving the triple `x <_L y <_L z`.
    fn dooms(&self, y: usize) -> bool {
        let p = self.p;
        self.placed.iter().any(|x| {
            p.incomparable(x, y)
                && p.up_set(x)
                    .iter()
                    .any(|z| z != x && z != y && !self.placed.contains(z) && p.incomparable(y, z))
        })
    }

    /// Returns `Ok(true)` once `visit` asks to stop.
    fn extend(&mut self, prefix: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SizeLimitExceeded {
                what: "extension search nodes",
                size: self.nodes as usize,
                limit: self.budget as usize,
            });
        }
        if prefix.len() == self.p.len() {
            return Ok(visit(prefix));
        }
        let order = self.order.clone();
        for y in order {
            if self.placed.contains(y)
                || !self.p.down_set(y).iter().all(|u| u == y || self.placed.contains(u))
                || self.dooms(y)
            {
                continue;
            }
            self.placed.insert(y);
            prefix.push(y);
            if self.extend(prefix, visit)? {
                return Ok(true);
            }
            prefix.pop();
            self.placed.remove(y);
        }
        Ok(false)
    }
}

/// Non-separating extension read off a 2-element realizer from the dimension solver.
pub fn nonseparating_from_realizer(p: &Poset, limits: &Limits) -> Result<Option<LinearOrder>> {
    let (k, r) = dm_dimension_with(p, limits)?;
    if k > 2 {
        return Ok(None);
    }
    let l = r.extensions[0].clone();
    if separation_witness(p, &l).is_some() {
        return Err(Error::InternalInconsistency(
            "member of a 2-realizer is separating".into(),
        ));
    }
    Ok(Some(l))
}

/// The complement of a non-separating extension `c`: keep `c` on comparable
/// pairs and reverse it on incomparable ones. `None` if that is not a linear order.
pub fn conjugate(p: &Poset, c: &LinearOrder) -> Result<Option<LinearOrder>> {
    if let Some(w) = is_separating(p, c)? {
        return Err(Error::NotNonSeparating(
            p.label(w.x).to_string(),
            p.label(w.y).to_string(),
            p.label(w.z).to_string(),
        ));
    }
    let n = p.len();
    let pos = c.positions();
    let before = |x: usize, y: usize| p.lt(x, y) || (p.incomparable(x, y) && pos[y] < pos[x]);
    // A strict total order has predecessor counts 0..n-1, each once, and is transitive.
    let preds: Vec<usize> = (0..n).map(|y| (0..n).filter(|&x| x != y && before(x, y)).count()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&x| preds[x]);
    let linear = perm.iter().enumerate().all(|(i, &x)| preds[x] == i)
        && (0..n).all(|i| (i + 1..n).all(|j| before(perm[i], perm[j])));
    if !linear {
        return Ok(None);
    }
    let out = LinearOrder::new_unchecked(perm);
    let cp = c.positions();
    let op = out.positions();
    let meets = (0..n).all(|x| (0..n).all(|y| x == y || p.lt(x, y) == (cp[x] < cp[y] && op[x] < op[y])));
    if !meets {
        return Err(Error::InternalInconsistency("conjugate does not intersect to the order".into()));
    }
    Ok(Some(out))
}

/// A transitive orientation: `arcs` lists `(a, b)` for `a -> b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.len();
        let mut dir = vec![BitSet::new(n); n];
        for &(a, b) in &self.arcs {
            if !g.adjacent(a, b) || dir[b].contains(a) || dir[a].contains(b) {
                return false;
            }
            dir[a].insert(b);
        }
        if self.arcs.len() != g.edge_count() {
            return false;
        }
        (0..n).all(|a| dir[a].iter().all(|b| dir[b].iter().all(|c| dir[a].contains(c))))
    }
}

#[derive(Clone)]
struct OrientState {
    out: Vec<BitSet>,
}

struct OrientSearch<'a> {
    g: &'a Graph,
    nodes: u64,
    budget: u64,
}

impl OrientSearch<'_> {
    /// Orient `a -> b` and everything it forces. `false` on contradiction.
    fn force(&self, st: &mut OrientState, a: usize, b: usize) -> bool {
        let g = self.g;
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            if st.out[b].contains(a) {
                return false;
            }
            if st.out[a].contains(b) {
                continue;
            }
            st.out[a].insert(b);
            let n = g.len();
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                let (ac, bc) = (g.adjacent(a, c), g.adjacent(b, c));
                // c -> a would force c -b; a -> b -> c would force a - c.
                if ac && !bc {
                    queue.push((a, c));
                }
                if bc && !ac {
                    queue.push((c, b));
                }
                if st.out[b].contains(c) {
                    if !ac {
                        return false;
                    }
                    queue.push((a, c));
                }
                if st.out[c].contains(a) {
                    if !bc {
                        return false;
                    }
                    queue.push((c, b));
                }
            }
        }
        true
    }

    fn solve(&mut self, st: OrientState) -> Result<Option<OrientState>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SizeLimitExceeded {
                what: "orientation search nodes",
                size: self.nodes as usize,
                limit: self.budget as usize,
            });
        }
        let open = self
            .g
            .edges()
            .into_iter()
            .find(|&(a, b)| !st.out[a].contains(b) && !st.out[b].contains(a));
        let Some((a, b)) = open else {
            return Ok(Some(st));
        };
        for (u, v) in [(a, b), (b, a)] {
            let mut next = st.clone();
            if self.force(&mut next, u, v) {
                if let Some(done) = self.solve(next)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }
}

/// A transitive orientation of `g`, or `None` (a proof that none exists).
pub fn is_comparability_graph(g: &Graph) -> Result<Option<Orientation>> {
    is_comparability_graph_with(g, &Limits::default())
}

pub fn is_comparability_graph_with(g: &Graph, limits: &Limits) -> Result<Option<Orientation>> {
    check_size("orientation graph vertices", g.len(), limits.max_elements)?;
    let mut search = OrientSearch {
        g,
        nodes: 0,
        budget: limits.search_budget,
    };
    let start = OrientState {
        out: vec![BitSet::new(g.len()); g.len()],
    };
    let Some(st) = search.solve(start)? else {
        return Ok(None);
    };
    let mut arcs = Vec::new();
    for (a, row) in st.out.iter().enumerate() {
        arcs.extend(row.iter().map(|b| (a, b)));
    }
    let o = Orientation { arcs };
    if !o.verify(g) {
        return Err(Error::InternalInconsistency("orientation search returned a non-transitive orientation".into()));
    }
    Ok(Some(o))
}

/// The three characterisations of dimension at most two, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dim2Verdicts {
    pub dimension_at_most_2: bool,
    pub nonseparating_exists: bool,
    pub cocomparability: bool,
}

impl Dim2Verdicts {
    pub fn agree(&self) -> bool {
        self.dimension_at_most_2 == self.nonseparating_exists && self.nonseparating_exists == self.cocomparability
    }
}

pub fn dim2_verdicts(p: &Poset, limits: &Limits) -> Result<Dim2Verdicts> {
    let dimension_at_most_2 = dm_dimension_with(p, limits)?.0 <= 2;
    let searched = find_nonseparating_extension_with(p, limits)?;
    if let Some(l) = &searched {
        if separation_witness(p, l).is_some() {
            return Err(Error::InternalInconsistency("search returned a separating extension".into()));
        }
    }
    let from_realizer = nonseparating_from_realizer(p, limits)?;
    if searched.is_some() != from_realizer.is_some() {
        return Err(Error::InternalInconsistency(
            "extension search and realizer extraction disagree".into(),
        ));
    }
    let cocomparability = is_comparability_graph_with(&p.incomparability_graph(), limits)?.is_some();
    Ok(Dim2Verdicts {
        dimension_at_most_2,
        nonseparating_exists: searched.is_some(),
        cocomparability,
    })
}

/// Dimension at most two, checked three ways; disagreement is an error.
pub fn dim2_test(p: &Poset) -> Result<bool> {
    dim2_test_with(p, &Limits::default())
}

pub fn dim2_test_with(p: &Poset, limits: &Limits) -> Result<bool> {
    let v = dim2_verdicts(p, limits)?;
    if !v.agree() {
        return Err(Error::InternalInconsistency(format!("dimension-two characterisations disagree: {v:?}")));
    }
    Ok(v.dimension_at_most_2)
}

/// The nestedness conditions on `D(z) = ↓z ∩ I` without checking the hypotheses.
pub fn lemma24_conditions(p: &Poset, l: &LinearOrder, initial: &BitSet) -> bool {
    let n = p.len();
    let pos = l.positions();
    let d: Vec<BitSet> = (0..n).map(|z| p.down_set(z).intersection(initial)).collect();
    for x in (0..n).filter(|&x| !initial.contains(x)) {
        for y in (0..n).filter(|&y| !initial.contains(y)) {
            if x == y || !p.incomparable(x, y) {
                continue;
            }
            if !d[x].is_subset(&d[y]) && !d[y].is_subset(&d[x]) {
                return false;
            }
            let proper = d[x].is_subset(&d[y]) && d[x] != d[y];
            if proper && pos[x] < pos[y] {
                return false;
            }
        }
    }
    true
}

/// For a poset of dimension at most two, a non-separating `l` and an initial
/// segment `initial` of `l`, the down-set traces on `initial` are nested and
/// ordered against `l`.
pub fn lemma24_check(p: &Poset, l: &LinearOrder, initial: &BitSet) -> Result<bool> {
    lemma24_check_with(p, l, initial, &Limits::default())
}

pub fn lemma24_check_with(p: &Poset, l: &LinearOrder, initial: &BitSet, limits: &Limits) -> Result<bool> {
    if dm_dimension_with(p, limits)?.0 > 2 {
        return Err(Error::PreconditionViolated("poset has dimension above 2".into()));
    }
    if is_separating(p, l)?.is_some() {
        return Err(Error::PreconditionViolated("extension is separating".into()));
    }
    let k = initial.count();
    if initial.capacity() != p.len() || !l.as_slice()[..k].iter().all(|&x| initial.contains(x)) {
        return Err(Error::PreconditionViolated("set is not an initial segment of the extension".into()));
    }
    Ok(lemma24_conditions(p, l, initial))
}

/// First internal node whose successor in `l` is not one of its two children.
pub fn t2_cover_violation(tree: &Poset, l: &LinearOrder) -> Option<usize> {
    let seq = l.as_slice();
    let pos = l.positions();
    (0..tree.len()).find(|&x| {
        let children = tree.upper_covers(x);
        !children.is_empty() && (pos[x] + 1 >= seq.len() || !children.contains(&seq[pos[x] + 1]))
    })
}

/// Every non-separating extension of `binary_tree(d)` puts one child of each
/// internal node immediately after it. Enumerates exhaustively up to a cap and
/// then adds seeded random samples.
pub fn t2_cover_check(d: usize) -> Result<bool> {
    t2_cover_check_with(d, &Limits::default())
}

const T2_ENUMERATION_CAP: usize = 200_000;
const T2_SAMPLES: usize = 2_000;

pub fn t2_cover_check_with(d: usize, limits: &Limits) -> Result<bool> {
    check_size("t2 cover depth", d, 4)?;
    let tree = binary_tree(d)?;
    let (exts, complete) = nonseparating_extensions(&tree, T2_ENUMERATION_CAP, limits)?;
    if exts.iter().any(|l| t2_cover_violation(&tree, l).is_some()) {
        return Ok(false);
    }
    if !complete {
        let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
        for _ in 0..T2_SAMPLES {
            let mut search = NonSepSearch::new(&tree, limits.search_budget);
            search.order.shuffle(&mut rng);
            let mut prefix = Vec::new();
            if !search.extend(&mut prefix, &mut |_| true)? {
                return Err(Error::InternalInconsistency("tree lost its non-separating extension".into()));
            }
            if t2_cover_violation(&tree, &LinearOrder::new_unchecked(prefix)).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{all_posets_up_to, omega_eta, three_irreducible_b};
    use crate::RelationMode;

    fn two_plus_two() -> Poset {
        Poset::from_relation(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], RelationMode::Pairs).unwrap()
    }

    fn xyz() -> Poset {
        Poset::from_relation(&["x", "y", "z"], &[("x", "z")], RelationMode::Pairs).unwrap()
    }

    #[test]
    fn extension_counts() {
        assert_eq!(linear_extensions(&Poset::chain(5)).unwrap().count(), 1);
        assert_eq!(linear_extensions(&Poset::antichain(4)).unwrap().count(), 24);
        assert_eq!(linear_extensions(&two_plus_two()).unwrap().count(), 6);
        assert_eq!(linear_extensions(&Poset::empty()).unwrap().count(), 1);
        assert!(linear_extensions(&Poset::antichain(11)).is_err());
        for l in linear_extensions(&two_plus_two()).unwrap() {
            assert!(l.is_extension_of(&two_plus_two()));
        }
    }

    #[test]
    fn separation() {
        let p = xyz();
        let l = LinearOrder::from_labels(&p, &["x", "y", "z"]).unwrap();
        assert_eq!(is_separating(&p, &l).unwrap(), Some(SeparationWitness { x: 0, y: 1, z: 2 }));
        let l = LinearOrder::from_labels(&p, &["y", "x", "z"]).unwrap();
        assert_eq!(is_separating(&p, &l).unwrap(), None);
        let c = Poset::chain(4);
        assert_eq!(is_separating(&c, &LinearOrder::identity(4)).unwrap(), None);
        let bad = LinearOrder::from_labels(&p, &["z", "x", "y"]).unwrap();
        assert!(matches!(is_separating(&p, &bad), Err(Error::NotAnExtension(_))));
    }

    #[test]
    fn nonseparating_search() {
        let c = Poset::chain(4);
        assert_eq!(find_nonseparating_extension(&c).unwrap(), Some(LinearOrder::identity(4)));
        assert!(find_nonseparating_extension(&omega_eta(3).unwrap()).unwrap().is_some());
        assert!(find_nonseparating_extension(&three_irreducible_b()).unwrap().is_none());
    }

    #[test]
    fn conjugates() {
        let a = Poset::antichain(2);
        let c = LinearOrder::new(vec![0, 1]).unwrap();
        assert_eq!(conjugate(&a, &c).unwrap(), Some(LinearOrder::new(vec![1, 0]).unwrap()));

        let p = two_plus_two();
        let sep = LinearOrder::from_labels(&p, &["a", "c", "b", "d"]).unwrap();
        assert!(matches!(conjugate(&p, &sep), Err(Error::NotNonSeparating(..))));
        let ok = LinearOrder::from_labels(&p, &["a", "b", "c", "d"]).unwrap();
        let conj = conjugate(&p, &ok).unwrap().unwrap();
        assert_eq!(conj.labels(&p), vec!["c", "d", "a", "b"]);
        assert!(is_separating(&p, &conj).unwrap().is_none());

        for p in all_posets_up_to(5).unwrap() {
            for l in linear_extensions(&p).unwrap() {
                if is_separating(&p, &l).unwrap().is_none() {
                    let c2 = conjugate(&p, &l).unwrap().expect("non-separating has a complement");
                    assert!(is_separating(&p, &c2).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn orientations() {
        let c4 = Graph::cycle(4);
        assert!(is_comparability_graph(&c4).unwrap().unwrap().verify(&c4));
        assert!(is_comparability_graph(&Graph::cycle(5)).unwrap().is_none());
        let empty = Poset::chain(3).incomparability_graph();
        assert_eq!(is_comparability_graph(&empty).unwrap().unwrap().arcs, vec![]);
    }

    #[test]
    fn five_cycle_has_no_orientation_by_enumeration() {
        // Oracle: all 2^5 orientations of C5.
        let g = Graph::cycle(5);
        let edges = g.edges();
        let any = (0u32..32).any(|mask| {
            let arcs = edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (a, b) } else { (b, a) })
                .collect();
            Orientation { arcs }.verify(&g)
        });
        assert!(!any);
    }

    #[test]
    fn dim2() {
        assert!(dim2_test(&binary_tree(2).unwrap()).unwrap());
        assert!(!dim2_test(&three_irreducible_b()).unwrap());
        assert!(dim2_test(&Poset::chain(3)).unwrap());
        for p in all_posets_up_to(5).unwrap() {
            dim2_test(&p).unwrap();
        }
    }

    #[test]
    fn lemma24() {
        let c = Poset::chain(4);
        let l = LinearOrder::identity(4);
        for k in 0..=4 {
            let init = BitSet::from_indices(4, 0..k);
            assert!(lemma24_check(&c, &l, &init).unwrap());
        }
        // The hypothesis matters: x <_L y <_L z is separating and breaks condition (2).
        let p = xyz();
        let sep = LinearOrder::from_labels(&p, &["x", "y", "z"]).unwrap();
        let init = BitSet::from_indices(3, [0]);
        assert!(!lemma24_conditions(&p, &sep, &init));
        assert!(matches!(lemma24_check(&p, &sep, &init), Err(Error::PreconditionViolated(_))));
        let bad_init = BitSet::from_indices(3, [0]);
        let ok = LinearOrder::from_labels(&p, &["y", "x", "z"]).unwrap();
        assert!(lemma24_check(&p, &ok, &bad_init).is_err());
    }

    #[test]
    fn t2_covers() {
        assert!(t2_cover_check(1).unwrap());
        assert!(t2_cover_check(2).unwrap());
        let tree = binary_tree(2).unwrap();
        let witness = linear_extensions(&tree)
            .unwrap()
            .find(|l| is_separating(&tree, l).unwrap().is_some() && t2_cover_violation(&tree, l).is_some());
        assert!(witness.is_some());
    }
}
