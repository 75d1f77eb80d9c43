//! Finite posets, linear orders, graphs and order embeddings.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{check_size, Error, Result};
use crate::limits::Limits;

/// How the pair list handed to [`Poset::from_relation`] is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RelationMode {
    /// The pairs are cover relations of a Hasse diagram.
    Covers,
    /// The pairs are arbitrary strict comparabilities.
    #[default]
    Pairs,
}

/// A finite partial order. Elements are addressed by index; identity is by label.
///
/// `up[x]` holds every `y` with `x <= y` and `down[y]` every `x` with `x <= y`.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

fn build_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateElement(l.clone()));
        }
    }
    Ok(index)
}

fn transpose(rows: &[BitSet]) -> Vec<BitSet> {
    let n = rows.len();
    let mut cols = vec![BitSet::new(n); n];
    for (i, row) in rows.iter().enumerate() {
        for j in row.iter() {
            cols[j].insert(i);
        }
    }
    cols
}

impl Poset {
    /// Builds a poset from rows that are already known to be a valid order.
    pub(crate) fn from_rows_unchecked(labels: Vec<String>, up: Vec<BitSet>) -> Poset {
        let index = build_index(&labels).expect("labels must be distinct");
        let down = transpose(&up);
        Poset {
            labels,
            index,
            up,
            down,
        }
    }

    /// Builds a poset from `x <= y` rows after checking the three order axioms.
    pub fn from_rows(labels: Vec<String>, up: Vec<BitSet>) -> Result<Poset> {
        let n = labels.len();
        if up.len() != n || up.iter().any(|r| r.capacity() != n) {
            return Err(Error::InvalidOrder("matrix shape does not match".into()));
        }
        let index = build_index(&labels)?;
        for (x, row) in up.iter().enumerate() {
            if !row.contains(x) {
                return Err(Error::InvalidOrder(format!("`{}` not reflexive", labels[x])));
            }
            for y in row.iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::InvalidOrder(format!(
                        "`{}` and `{}` violate antisymmetry",
                        labels[x], labels[y]
                    )));
                }
                if !up[y].is_subset(row) {
                    return Err(Error::InvalidOrder(format!(
                        "transitivity fails through `{}` <= `{}`",
                        labels[x], labels[y]
                    )));
                }
            }
        }
        let down = transpose(&up);
        Ok(Poset {
            labels,
            index,
            up,
            down,
        })
    }

    /// Builds a poset from a predicate `leq(x, y)` and validates it.
    pub fn from_fn<F>(labels: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let up = (0..n)
            .map(|x| BitSet::from_indices(n, (0..n).filter(|&y| leq(x, y))))
            .collect();
        Poset::from_rows(labels, up)
    }

    /// Reflexive-transitive closure of `pairs` over `elements`.
    pub fn from_relation<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
        _mode: RelationMode,
    ) -> Result<Poset> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let index = build_index(&labels)?;
        let n = labels.len();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        for (a, b) in pairs {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            up[a].insert(b);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleDetected(labels[x].clone(), labels[y].clone()));
                }
            }
        }
        Ok(Poset::from_rows_unchecked(labels, up))
    }

    /// The `n`-element chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let up = (0..n).map(|i| BitSet::from_indices(n, i..n)).collect();
        Poset::from_rows_unchecked(labels, up)
    }

    /// The `n`-element antichain.
    pub fn antichain(n: usize) -> Poset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let up = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        Poset::from_rows_unchecked(labels, up)
    }

    pub fn empty() -> Poset {
        Poset::antichain(0)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up[x].contains(y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    /// `{y : x <= y}`
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// `{y : y <= x}`
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.up
    }

    /// Cover pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self.up[x]
                    .intersection(&self.down[y])
                    .count();
                if between == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn lower_covers(&self, y: usize) -> Vec<usize> {
        self.down[y]
            .iter()
            .filter(|&x| x != y && self.up[x].intersection(&self.down[y]).count() == 2)
            .collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.up[x]
            .iter()
            .filter(|&y| y != x && self.up[x].intersection(&self.down[y]).count() == 2)
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].count() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].count() == 1).collect()
    }

    /// Length of the longest chain ending at each element (minimal elements have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let order = self.topological_order();
        let mut h = vec![0; self.len()];
        for &y in &order {
            h[y] = self.down[y]
                .iter()
                .filter(|&x| x != y)
                .map(|x| h[x] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// Elements sorted so that `x < y` implies `x` comes first; ties by index.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&x| (self.down[x].count(), x));
        idx
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|x| self.up[x].count() + self.down[x].count() == self.len() + 1)
    }

    pub fn is_antichain(&self) -> bool {
        self.up.iter().all(|r| r.count() == 1)
    }

    /// Number of pairs `x < y`.
    pub fn strict_pair_count(&self) -> usize {
        self.up.iter().map(|r| r.count() - 1).sum()
    }

    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Restriction to the given element indices, in the given order.
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let m = subset.len();
        let labels = subset.iter().map(|&x| self.labels[x].clone()).collect();
        let up = subset
            .iter()
            .map(|&x| BitSet::from_indices(m, (0..m).filter(|&j| self.leq(x, subset[j]))))
            .collect();
        Poset::from_rows_unchecked(labels, up)
    }

    /// Restriction to the elements carrying the given labels.
    pub fn induced_by_labels<S: AsRef<str>>(&self, subset: &[S]) -> Result<Poset> {
        let idx = subset
            .iter()
            .map(|s| self.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.induced(&idx))
    }

    pub fn relabel(&self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.len() {
            return Err(Error::InvalidOrder("label count mismatch".into()));
        }
        let index = build_index(&labels)?;
        Ok(Poset {
            labels,
            index,
            up: self.up.clone(),
            down: self.down.clone(),
        })
    }

    pub fn incomparability_graph(&self) -> Graph {
        let n = self.len();
        let adj = (0..n)
            .map(|x| self.up[x].union(&self.down[x]).complement())
            .collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }
}

pub(crate) fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Cartesian product ordered componentwise. Elements listed row-major over `p` then `q`.
pub fn direct_product(p: &Poset, q: &Poset) -> Result<Poset> {
    direct_product_with(p, q, &Limits::default())
}

pub fn direct_product_with(p: &Poset, q: &Poset, limits: &Limits) -> Result<Poset> {
    let (m, k) = (p.len(), q.len());
    check_size("direct product elements", m * k, limits.max_elements)?;
    let n = m * k;
    let mut labels = Vec::with_capacity(n);
    for x in 0..m {
        for u in 0..k {
            labels.push(pair_label(p.label(x), q.label(u)));
        }
    }
    let up = (0..n)
        .map(|i| {
            let (x, u) = (i / k, i % k);
            BitSet::from_indices(
                n,
                (0..n).filter(|&j| p.leq(x, j / k) && q.leq(u, j % k)),
            )
        })
        .collect();
    Poset::from_rows(labels, up)
}

/// Lexicographic product of a finite sequence of posets; the first factor is most significant.
pub fn lex_product(factors: &[Poset]) -> Result<Poset> {
    lex_product_with(factors, &Limits::default())
}

pub fn lex_product_with(factors: &[Poset], limits: &Limits) -> Result<Poset> {
    let mut size: usize = 1;
    for f in factors {
        size = size.saturating_mul(f.len());
        check_size("lexicographic product elements", size, limits.max_elements)?;
    }
    let dims: Vec<usize> = factors.iter().map(Poset::len).collect();
    let tuples: Vec<Vec<usize>> = mixed_radix(&dims);
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(factors).map(|(&i, f)| f.label(i)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let leq = |a: &[usize], b: &[usize]| -> bool {
        for (i, f) in factors.iter().enumerate() {
            if a[i] != b[i] {
                return f.lt(a[i], b[i]);
            }
        }
        true
    };
    let n = tuples.len();
    let up = (0..n)
        .map(|i| BitSet::from_indices(n, (0..n).filter(|&j| leq(&tuples[i], &tuples[j]))))
        .collect();
    Poset::from_rows(labels, up)
}

fn mixed_radix(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for t in &out {
            for i in 0..d {
                let mut t = t.clone();
                t.push(i);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// `2·P`: pairs `(x, i)`, `i ∈ {0, 1}`, with `(x,i) <= (x',i')` iff `x < x'` or (`x = x'` and `i <= i'`).
pub fn ordinal_product_2(p: &Poset) -> Poset {
    let n = p.len();
    let labels = (0..2 * n)
        .map(|i| pair_label(p.label(i / 2), if i % 2 == 0 { "0" } else { "1" }))
        .collect();
    let up = (0..2 * n)
        .map(|a| {
            let (x, i) = (a / 2, a % 2);
            BitSet::from_indices(
                2 * n,
                (0..2 * n).filter(|&b| {
                    let (y, j) = (b / 2, b % 2);
                    p.lt(x, y) || (x == y && i <= j)
                }),
            )
        })
        .collect();
    Poset::from_rows_unchecked(labels, up)
}

/// Disjoint union with no cross comparabilities. Labels are kept when they do
/// not collide; otherwise every element is tagged `(x,0)` / `(y,1)`.
pub fn disjoint_sum(p: &Poset, q: &Poset) -> Poset {
    let collide = q.labels.iter().any(|l| p.index.contains_key(l));
    let labels: Vec<String> = if collide {
        p.labels
            .iter()
            .map(|l| pair_label(l, "0"))
            .chain(q.labels.iter().map(|l| pair_label(l, "1")))
            .collect()
    } else {
        p.labels.iter().chain(&q.labels).cloned().collect()
    };
    let (m, n) = (p.len(), p.len() + q.len());
    let mut up = Vec::with_capacity(n);
    for x in 0..m {
        up.push(BitSet::from_indices(n, p.up[x].iter()));
    }
    for y in 0..q.len() {
        up.push(BitSet::from_indices(n, q.up[y].iter().map(|j| j + m)));
    }
    Poset::from_rows_unchecked(labels, up)
}

/// A total order on the elements of an ambient poset, listed from smallest to largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    perm: Vec<usize>,
}

impl LinearOrder {
    pub fn new(perm: Vec<usize>) -> Result<LinearOrder> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &x in &perm {
            if x >= n || seen[x] {
                return Err(Error::InvalidOrder(format!(
                    "sequence is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(LinearOrder { perm })
    }

    pub(crate) fn new_unchecked(perm: Vec<usize>) -> LinearOrder {
        LinearOrder { perm }
    }

    pub fn from_labels<S: AsRef<str>>(p: &Poset, labels: &[S]) -> Result<LinearOrder> {
        if labels.len() != p.len() {
            return Err(Error::InvalidOrder(format!(
                "expected {} elements, got {}",
                p.len(),
                labels.len()
            )));
        }
        let perm = labels
            .iter()
            .map(|s| p.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(perm)
    }

    pub fn identity(n: usize) -> LinearOrder {
        LinearOrder {
            perm: (0..n).collect(),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `pos[x]` = rank of `x` (0 = smallest).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (i, &x) in self.perm.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    pub fn reversed(&self) -> LinearOrder {
        let mut perm = self.perm.clone();
        perm.reverse();
        LinearOrder { perm }
    }

    pub fn is_extension_of(&self, p: &Poset) -> bool {
        if self.perm.len() != p.len() {
            return false;
        }
        let pos = self.positions();
        (0..p.len()).all(|x| p.up_set(x).iter().all(|y| pos[x] <= pos[y]))
    }

    pub fn labels<'a>(&self, p: &'a Poset) -> Vec<&'a str> {
        self.perm.iter().map(|&x| p.label(x)).collect()
    }

    /// The chain this order defines, as a poset on the ambient labels.
    pub fn to_poset(&self, labels: &[String]) -> Poset {
        let pos = self.positions();
        let n = self.perm.len();
        let up = (0..n)
            .map(|x| BitSet::from_indices(n, (0..n).filter(|&y| pos[x] <= pos[y])))
            .collect();
        Poset::from_rows_unchecked(labels.to_vec(), up)
    }
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = labels.len();
        build_index(&labels)?;
        let mut adj = vec![BitSet::new(n); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidOrder(format!("bad edge ({a}, {b})")));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { labels, adj })
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(labels, &edges).expect("cycle with n >= 3")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, a: usize) -> &BitSet {
        &self.adj[a]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.adj[a].iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }
}

/// Injective map from pattern indices to host indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingMap {
    pub assignment: Vec<usize>,
}

impl EmbeddingMap {
    /// Checks injectivity and `x <= y` iff `f(x) <= f(y)`.
    pub fn verify(&self, pattern: &Poset, host: &Poset) -> bool {
        let f = &self.assignment;
        if f.len() != pattern.len() || f.iter().any(|&v| v >= host.len()) {
            return false;
        }
        let mut seen = BitSet::new(host.len());
        for &v in f {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        (0..f.len()).all(|x| (0..f.len()).all(|y| pattern.leq(x, y) == host.leq(f[x], f[y])))
    }

    pub fn label_pairs<'a>(&self, pattern: &'a Poset, host: &'a Poset) -> Vec<(&'a str, &'a str)> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(x, &v)| (pattern.label(x), host.label(v)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_plus_two() -> Poset {
        Poset::from_relation(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], RelationMode::Pairs)
            .unwrap()
    }

    #[test]
    fn closure_and_cycles() {
        let p = Poset::from_relation(&["a", "b", "c"], &[("a", "b"), ("b", "c")], RelationMode::Pairs)
            .unwrap();
        assert!(p.leq(0, 2));
        assert!(p.is_chain());
        let q = Poset::from_relation(&["a", "b"], &[], RelationMode::Pairs).unwrap();
        assert!(q.is_antichain());
        let err = Poset::from_relation(&["a", "b"], &[("a", "b"), ("b", "a")], RelationMode::Pairs);
        assert!(matches!(err, Err(Error::CycleDetected(_, _))));
        let err = Poset::from_relation(&["a"], &[("a", "z")], RelationMode::Covers);
        assert_eq!(err.unwrap_err(), Error::UnknownElement("z".into()));
    }

    #[test]
    fn dual_and_induced() {
        let c = Poset::chain(3);
        let d = c.dual();
        assert!(d.leq(2, 0));
        assert_eq!(d.dual(), c);
        assert_eq!(Poset::antichain(2).dual(), Poset::antichain(2));
        let sub = c.induced(&[0, 2]);
        assert!(sub.is_chain() && sub.len() == 2);
        assert_eq!(c.induced(&[0, 1, 2]), c);
        assert!(c.induced(&[]).is_empty());
        assert!(c.induced_by_labels(&["0", "9"]).is_err());
    }

    #[test]
    fn products() {
        let c2 = Poset::chain(2);
        let diamond = direct_product(&c2, &c2).unwrap();
        assert_eq!(diamond.len(), 4);
        assert_eq!(diamond.covers().len(), 4);
        assert!(diamond.incomparable(1, 2));

        let lex = lex_product(&[c2.clone(), c2.clone()]).unwrap();
        assert!(lex.is_chain() && lex.len() == 4);
        let lex = lex_product(&[c2.clone(), Poset::antichain(2)]).unwrap();
        assert!(lex.incomparable(0, 1) && lex.incomparable(2, 3));
        assert!(lex.lt(0, 2) && lex.lt(0, 3) && lex.lt(1, 2) && lex.lt(1, 3));
        let lex = lex_product(&[Poset::chain(3), Poset::chain(4)]).unwrap();
        assert!(lex.is_chain() && lex.len() == 12);

        assert!(ordinal_product_2(&c2).is_chain());
        let q = ordinal_product_2(&Poset::antichain(2));
        assert_eq!(q.len(), 4);
        assert_eq!(q.covers().len(), 2);
        assert!(!q.is_chain() && q.strict_pair_count() == 2);

        let big = Poset::chain(9);
        assert!(matches!(
            direct_product(&big, &big),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn sums_and_graphs() {
        let s = disjoint_sum(&Poset::chain(2), &Poset::chain(2));
        assert_eq!(s.len(), 4);
        assert_eq!(s.strict_pair_count(), 2);
        assert_eq!(disjoint_sum(&two_plus_two(), &Poset::empty()), two_plus_two());

        assert_eq!(Poset::chain(3).incomparability_graph().edge_count(), 0);
        assert_eq!(Poset::antichain(3).incomparability_graph().edge_count(), 3);
        let g = two_plus_two().incomparability_graph();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn linear_orders() {
        let p = two_plus_two();
        let l = LinearOrder::from_labels(&p, &["a", "c", "b", "d"]).unwrap();
        assert!(l.is_extension_of(&p));
        let bad = LinearOrder::from_labels(&p, &["b", "a", "c", "d"]).unwrap();
        assert!(!bad.is_extension_of(&p));
        assert!(LinearOrder::new(vec![0, 0]).is_err());
    }

    #[test]
    fn heights_and_covers() {
        let p = two_plus_two();
        assert_eq!(p.heights(), vec![0, 1, 0, 1]);
        assert_eq!(p.minimal_elements(), vec![0, 2]);
        assert_eq!(p.upper_covers(0), vec![1]);
        assert_eq!(p.lower_covers(3), vec![2]);
    }
}
