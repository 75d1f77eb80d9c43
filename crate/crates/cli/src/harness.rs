//! Batch suites replaying the finite identities over exhaustive and seeded random instances.

use std::fmt;
use std::str::FromStr;

use posetdim::dimension::{dm_dimension_with, ferrers_dimension_oracle, ferrers_dimension_with, interval_dimension_with};
use posetdim::extensions::{conjugate, dim2_verdicts, lemma24_check_with, nonseparating_extensions, t2_cover_check_with};
use posetdim::incidence::{
    canonical_coding_with, down_family, galois_lattice_with, initial_segments_with, is_coding, macneille_with,
    moore_closure, open_split_into_doubled_split, split_into_chain_product, split_into_doubled_open_split,
};
use posetdim::lattice::{embeds_in_chain_product, join_irreducibles};
use posetdim::{
    all_posets_up_to, bipartite, chain_factorization, dilworth_check, find_embedding_with, interval_spectrum_check,
    is_ferrers, is_isomorphic, is_lattice, is_separating, open_split, random_poset, spectrum, split, width, BitSet,
    EmbeddingMap, IncidenceStructure, Limits, Poset, Realizer,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::format::{emit_incidence, emit_poset, parse_document, Document};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Splits,
    Galois,
    Dilworth,
    Theorem11,
    Lemma24,
    Bouchet,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Identities,
        Suite::Splits,
        Suite::Galois,
        Suite::Dilworth,
        Suite::Theorem11,
        Suite::Lemma24,
        Suite::Bouchet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Splits => "splits",
            Suite::Galois => "galois",
            Suite::Dilworth => "dilworth",
            Suite::Theorem11 => "theorem11",
            Suite::Lemma24 => "lemma24",
            Suite::Bouchet => "bouchet",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CliError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Poset(Poset),
    Incidence(IncidenceStructure),
    /// The complete binary tree of the given depth.
    Tree(usize),
}

impl Instance {
    pub fn serialize(&self) -> String {
        match self {
            Instance::Poset(p) => emit_poset("instance", p),
            Instance::Incidence(r) => emit_incidence("instance", r),
            Instance::Tree(d) => format!("binary_tree {d}\n"),
        }
    }

    pub fn parse(text: &str) -> CliResult<Instance> {
        if let Some(d) = text.trim().strip_prefix("binary_tree ") {
            let d = d.trim().parse().map_err(|_| CliError::parse(1, 13, "expected a depth"))?;
            return Ok(Instance::Tree(d));
        }
        Ok(match parse_document(text)? {
            Document::Poset(d) => Instance::Poset(d.to_poset()?),
            Document::Incidence(d) => Instance::Incidence(d.to_incidence()?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub serialization: String,
    pub identity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub max_size: usize,
    pub trials: usize,
    pub seed: u64,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn failed(&self) -> usize {
        self.instances - self.passed
    }
}

/// Runs suites. `mutate_dimension` deliberately breaks the dimension solver
/// (adds one for posets with at least two elements) to show the harness notices.
#[derive(Debug, Clone)]
#[derive(Default)]
pub struct Harness {
    pub limits: Limits,
    pub mutate_dimension: bool,
}


type Check = posetdim::Result<Vec<String>>;

macro_rules! expect {
    ($out:ident, $cond:expr, $($fmt:tt)+) => {
        if !$cond {
            $out.push(format!($($fmt)+));
        }
    };
}

fn random_incidence(rng: &mut ChaCha8Rng, n: usize, m: usize) -> IncidenceStructure {
    let rows = (0..n).map(|i| format!("r{i}")).collect();
    let cols = (0..m).map(|j| format!("c{j}")).collect();
    let bits: Vec<bool> = (0..n * m).map(|_| rng.gen_bool(0.5)).collect();
    IncidenceStructure::from_fn(rows, cols, |x, y| bits[x * m + y])
}

/// Every relation with `1..=k` rows and `1..=k` columns.
fn all_incidences(k: usize) -> Vec<IncidenceStructure> {
    let mut out = Vec::new();
    for n in 1..=k {
        for m in 1..=k {
            let rows: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
            let cols: Vec<String> = (0..m).map(|j| format!("c{j}")).collect();
            for bits in 0u32..1 << (n * m) {
                out.push(IncidenceStructure::from_fn(rows.clone(), cols.clone(), |x, y| {
                    bits >> (x * m + y) & 1 == 1
                }));
            }
        }
    }
    out
}

/// Does some `f: E -> T`, `g: F -> T` satisfy `x ρ y ⇔ f(x) ≤ g(y)`?
/// Enumerates `f`; each column then needs a `t` whose down-set pulls back to its column.
pub fn coding_exists(r: &IncidenceStructure, t: &Poset) -> bool {
    let (n, m, k) = (r.row_count(), r.col_count(), t.len());
    if k == 0 {
        return n == 0 || m == 0;
    }
    let columns: Vec<Vec<bool>> = (0..m).map(|y| (0..n).map(|x| r.related(x, y)).collect()).collect();
    let mut f = vec![0usize; n];
    loop {
        let ok = columns
            .iter()
            .all(|col| (0..k).any(|g| (0..n).all(|x| t.leq(f[x], g) == col[x])));
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            f[i] += 1;
            if f[i] < k {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

impl Harness {
    fn dim(&self, p: &Poset) -> posetdim::Result<usize> {
        let k = dm_dimension_with(p, &self.limits)?.0;
        Ok(if self.mutate_dimension && p.len() >= 2 { k + 1 } else { k })
    }

    fn idim(&self, p: &Poset) -> posetdim::Result<usize> {
        interval_dimension_with(p, &self.limits)
    }

    fn fdim(&self, r: &IncidenceStructure) -> posetdim::Result<usize> {
        Ok(ferrers_dimension_with(r, &self.limits)?.0)
    }

    fn big(&self) -> Limits {
        Limits {
            max_elements: self.limits.max_elements.max(256),
            ..self.limits
        }
    }

    /// The instances of a suite, in canonical order.
    pub fn instances(&self, suite: Suite, max_size: usize, trials: usize, seed: u64) -> CliResult<Vec<(String, Instance)>> {
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let posets = |out: &mut Vec<(String, Instance)>, rng: &mut ChaCha8Rng, min_n: usize| -> CliResult<()> {
            let exhaustive = all_posets_up_to(max_size.min(6))?;
            for (i, p) in exhaustive.into_iter().filter(|p| p.len() >= min_n).enumerate() {
                out.push((format!("all/{i:05}"), Instance::Poset(p)));
            }
            for i in 0..trials {
                let n = rng.gen_range(min_n.max(1)..=max_size.max(min_n.max(1)));
                let density = rng.gen_range(0.1..0.7);
                let s: u64 = rng.gen();
                out.push((format!("random/{i:05}"), Instance::Poset(random_poset(n, density, s)?)));
            }
            Ok(())
        };
        match suite {
            Suite::Identities | Suite::Theorem11 => posets(&mut out, &mut rng, 0)?,
            Suite::Dilworth => posets(&mut out, &mut rng, 1)?,
            Suite::Lemma24 => {
                posets(&mut out, &mut rng, 0)?;
                for d in 1..=3 {
                    out.push((format!("tree/{d}"), Instance::Tree(d)));
                }
            }
            Suite::Splits | Suite::Galois => {
                let exhaustive = all_posets_up_to(max_size.min(6))?;
                for (i, p) in exhaustive.into_iter().enumerate() {
                    out.push((format!("all/{i:05}"), Instance::Poset(p)));
                }
                for i in 0..trials {
                    let n = rng.gen_range(1..=4);
                    let m_cap = if suite == Suite::Galois { (12 / n).min(4) } else { 4 };
                    let m = rng.gen_range(1..=m_cap);
                    out.push((format!("random/{i:05}"), Instance::Incidence(random_incidence(&mut rng, n, m))));
                }
            }
            Suite::Bouchet => {
                for (i, r) in all_incidences(3).into_iter().enumerate() {
                    out.push((format!("all/{i:05}"), Instance::Incidence(r)));
                }
                for i in 0..trials {
                    let (n, m) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
                    out.push((format!("random/{i:05}"), Instance::Incidence(random_incidence(&mut rng, n, m))));
                }
            }
        }
        Ok(out)
    }

    /// Violated identities for one instance; errors count as violations.
    pub fn check(&self, suite: Suite, inst: &Instance, max_size: usize) -> Vec<String> {
        let res = match (suite, inst) {
            (Suite::Identities, Instance::Poset(p)) => self.identities(p),
            (Suite::Splits, Instance::Poset(p)) => self.splits_poset(p),
            (Suite::Splits, Instance::Incidence(r)) => self.splits_incidence(r),
            (Suite::Galois, Instance::Poset(p)) => self.galois_poset(p),
            (Suite::Galois, Instance::Incidence(r)) => self.galois_incidence(r),
            (Suite::Dilworth, Instance::Poset(p)) => self.dilworth(p),
            (Suite::Theorem11, Instance::Poset(p)) => self.theorem11(p),
            (Suite::Lemma24, Instance::Poset(p)) => self.lemma24(p),
            (Suite::Lemma24, Instance::Tree(d)) => {
                t2_cover_check_with(*d, &self.limits).map(|ok| if ok { vec![] } else { vec![format!("tree-successor-is-a-child: fails at depth {d}")] })
            }
            (Suite::Bouchet, Instance::Incidence(r)) => self.bouchet(r, max_size),
            _ => Ok(vec![format!("instance kind not accepted by suite {suite}")]),
        };
        res.unwrap_or_else(|e| vec![format!("error: {e}")])
    }

    pub fn run(&self, suite: Suite, max_size: usize, trials: usize, seed: u64) -> CliResult<VerifyReport> {
        let instances = self.instances(suite, max_size, trials, seed)?;
        let results: Vec<(String, String, Vec<String>)> = instances
            .par_iter()
            .map(|(id, inst)| (id.clone(), inst.serialize(), self.check(suite, inst, max_size)))
            .collect();
        let mut failures = Vec::new();
        let mut passed = 0;
        for (id, ser, violations) in results {
            if violations.is_empty() {
                passed += 1;
            }
            for v in violations {
                failures.push(Failure {
                    instance: id.clone(),
                    serialization: ser.clone(),
                    identity: v,
                });
            }
        }
        Ok(VerifyReport {
            suite,
            max_size,
            trials,
            seed,
            instances: instances.len(),
            passed,
            failures,
        })
    }

    /// Re-runs one serialised instance.
    pub fn replay(&self, suite: Suite, serialization: &str, max_size: usize) -> CliResult<Vec<String>> {
        Ok(self.check(suite, &Instance::parse(serialization)?, max_size))
    }

    fn identities(&self, p: &Poset) -> Check {
        let mut out = Vec::new();
        let d = self.dim(p)?;
        let i = self.idim(p)?;
        let f_leq = self.fdim(&IncidenceStructure::leq(p))?;
        expect!(out, f_leq == d, "ferrers-dimension-of-order: F-dim(E,<=,E) = {f_leq}, dim = {d}");
        let lt = IncidenceStructure::lt(p);
        let f_lt = self.fdim(&lt)?;
        expect!(out, f_lt == i, "ferrers-dimension-of-strict-order: F-dim(E,<,E) = {f_lt}, I-dim = {i}");
        if p.len() * p.len() <= self.limits.max_ferrers_cells {
            let o = ferrers_dimension_oracle(&lt)?;
            expect!(out, o == i, "interval-dimension-oracle: oracle = {o}, I-dim = {i}");
        }
        for (name, r) in [("order", IncidenceStructure::leq(p)), ("strict-order", lt)] {
            let f = self.fdim(&r)?;
            let ib = self.idim(&bipartite(&r))?;
            let g = self.dim(&galois_lattice_with(&r, &self.limits)?.poset)?;
            expect!(out, f == ib && ib == g, "bipartite-galois-dimensions({name}): F-dim = {f}, I-dim(B) = {ib}, dim(Gal) = {g}");
        }
        let sp = split(p);
        let osp = open_split(p);
        let (isp, iosp) = (self.idim(&sp)?, self.idim(&osp)?);
        let (dsp, dosp) = (self.dim(&sp)?, self.dim(&osp)?);
        expect!(out, isp == d, "split-interval-dimension: I-dim(B(P)) = {isp}, dim = {d}");
        expect!(out, iosp == i, "open-split-interval-dimension: I-dim(B(P^)) = {iosp}, I-dim = {i}");
        expect!(out, d <= dsp && dsp <= d + 1, "split-dimension-bounds: dim = {d}, dim(B(P)) = {dsp}");
        expect!(out, i <= dosp && dosp <= i + 1, "open-split-dimension-bounds: I-dim = {i}, dim(B(P^)) = {dosp}");
        for (name, iq, dq) in [("split", isp, dsp), ("open-split", iosp, dosp)] {
            expect!(out, iq <= dq && dq <= iq + 1, "bipartite-dimension-bounds({name}): I-dim = {iq}, dim = {dq}");
        }
        Ok(out)
    }

    fn galois_into_split_completion(&self, r: &IncidenceStructure) -> posetdim::Result<bool> {
        let gal = galois_lattice_with(r, &self.limits)?.poset;
        let host = macneille_with(&bipartite(r), &self.limits)?.poset;
        Ok(find_embedding_with(&gal, &host, &self.limits)?.is_some())
    }

    fn splits_poset(&self, p: &Poset) -> Check {
        let mut out = Vec::new();
        let (h, m) = split_into_doubled_open_split(p);
        expect!(out, m.verify(&split(p), &h), "split-into-doubled-open-split: explicit map fails");
        let (h, m) = open_split_into_doubled_split(p);
        expect!(out, m.verify(&open_split(p), &h), "open-split-into-doubled-split: explicit map fails");
        let (h, m) = split_into_chain_product(p, &self.big())?;
        expect!(out, m.verify(&split(p), &h), "split-into-product-with-doubled-chain: explicit map fails");
        for (name, r) in [("order", IncidenceStructure::leq(p)), ("strict-order", IncidenceStructure::lt(p))] {
            expect!(out, self.galois_into_split_completion(&r)?, "galois-into-split-completion({name}): no embedding");
        }
        Ok(out)
    }

    fn splits_incidence(&self, r: &IncidenceStructure) -> Check {
        let mut out = Vec::new();
        expect!(out, self.galois_into_split_completion(r)?, "galois-into-split-completion: no embedding");
        let (gal, c) = canonical_coding_with(r, &self.limits)?;
        let injective = |v: &[usize]| v.iter().collect::<std::collections::BTreeSet<_>>().len() == v.len();
        if injective(&c.f) && injective(&c.g) {
            let target = bipartite(&IncidenceStructure::leq(&gal.poset));
            let k = gal.len();
            let assignment = c.f.iter().copied().chain(c.g.iter().map(|&y| k + y)).collect();
            let map = EmbeddingMap { assignment };
            expect!(out, map.verify(&bipartite(r), &target), "injective-coding-induces-split-embedding: map fails");
        }
        Ok(out)
    }

    fn galois_poset(&self, p: &Poset) -> Check {
        let mut out = Vec::new();
        let m = macneille_with(p, &self.limits)?;
        expect!(out, m.family() == moore_closure(&down_family(p)), "macneille-is-moore-closure: families differ");
        let segs = initial_segments_with(p, &self.limits)?;
        for (name, lat) in [("macneille", &m), ("initial-segments", &segs)] {
            let assignment: Option<Vec<usize>> = (0..p.len()).map(|x| lat.position(p.down_set(x))).collect();
            let ok = assignment.is_some_and(|a| EmbeddingMap { assignment: a }.verify(p, &lat.poset));
            expect!(out, ok, "principal-down-sets-embed({name}): map fails");
        }
        let g = galois_lattice_with(&IncidenceStructure::leq(p), &self.limits)?;
        expect!(out, g.family() == m.family(), "galois-of-order-is-macneille: families differ");
        let g = galois_lattice_with(&IncidenceStructure::not_below(p), &self.limits)?;
        expect!(out, g.family() == segs.family(), "galois-of-not-below-is-initial-segments: families differ");
        Ok(out)
    }

    fn galois_incidence(&self, r: &IncidenceStructure) -> Check {
        let mut out = Vec::new();
        let n = r.row_count();
        for bits in 0u32..1 << n {
            let x = BitSet::from_indices(n, (0..n).filter(|&i| bits >> i & 1 == 1));
            let up = r.upper(&x);
            expect!(out, x.is_subset(&r.closure(&x)), "closure-is-extensive: fails on {x:?}");
            expect!(out, r.upper(&r.lower(&up)) == up, "upper-lower-upper: fails on {x:?}");
        }
        let gal = galois_lattice_with(r, &self.limits)?;
        expect!(out, gal.verify() && gal.family().is_intersection_closed(), "closed-sets-intersection-closed: fails");
        let inv = galois_lattice_with(&r.structure_dual(), &self.limits)?.poset;
        expect!(out, is_isomorphic(&inv, &gal.poset.dual())?, "inverse-relation-dual-lattice: not isomorphic");
        let (lat, c) = canonical_coding_with(r, &self.limits)?;
        expect!(out, is_coding(r, &IncidenceStructure::leq(&lat.poset), &c), "canonical-coding: not a coding");
        let (f, cover) = ferrers_dimension_with(r, &self.limits)?;
        expect!(out, cover.verify(r), "ferrers-cover-certificate: does not intersect to the relation");
        let g = self.dim(&gal.poset)?;
        expect!(out, f == g, "ferrers-dimension-is-galois-dimension: F-dim = {f}, dim(Gal) = {g}");
        if n * r.col_count() <= self.limits.max_ferrers_cells {
            let o = ferrers_dimension_oracle(r)?;
            expect!(out, o == f, "ferrers-dimension-oracle: oracle = {o}, solver = {f}");
        }
        expect!(out, is_ferrers(r)? == (f <= 1), "ferrers-test-vs-dimension: F-dim = {f}");
        Ok(out)
    }

    fn dilworth(&self, p: &Poset) -> Check {
        let mut out = Vec::new();
        let t = initial_segments_with(p, &self.limits)?.poset;
        let d = dilworth_check(&t)?;
        let dim = self.dim(&t)?;
        expect!(out, dim == d.spectrum_width, "dimension-equals-spectrum-width: dim = {dim}, width(Spec) = {}", d.spectrum_width);
        let w = width(p).width;
        expect!(out, dim == w, "segment-lattice-dimension-is-width: dim = {dim}, width(P) = {w}");
        let spec = spectrum(&t)?;
        let ji = join_irreducibles(&t)?;
        expect!(out, spec.ideals.len() == ji.len(), "spectrum-size: |Spec| = {}, |J| = {}", spec.ideals.len(), ji.len());
        expect!(out, is_isomorphic(&ji, p)?, "join-irreducibles-recover-poset: not isomorphic");
        let f = chain_factorization(&t)?;
        expect!(out, f.verify(&t), "chain-factorization-is-lattice-embedding: fails");
        expect!(out, f.n == d.spectrum_width, "chain-factorization-size: n = {}, width(Spec) = {}", f.n, d.spectrum_width);
        if t.len() <= 8 && f.n > 0 {
            expect!(out, !embeds_in_chain_product(&t, f.n - 1)?, "chain-factorization-minimal: fits in {} chains", f.n - 1);
        }
        if t.len() <= 16 {
            for x in 0..t.len() {
                for y in 0..t.len() {
                    if t.lt(x, y) {
                        expect!(out, interval_spectrum_check(&t, x, y)?, "interval-spectrum: fails on [{}, {}]", t.label(x), t.label(y));
                    }
                }
            }
        }
        Ok(out)
    }

    fn theorem11(&self, p: &Poset) -> Check {
        let mut out = Vec::new();
        let mut v = dim2_verdicts(p, &self.limits)?;
        if self.mutate_dimension {
            v.dimension_at_most_2 = self.dim(p)? <= 2;
        }
        expect!(out, v.agree(), "dimension-two-characterisations: {v:?}");
        if let Some(c) = posetdim::extensions::find_nonseparating_extension_with(p, &self.limits)? {
            match conjugate(p, &c)? {
                Some(c2) => {
                    let r = Realizer { extensions: vec![c, c2.clone()] };
                    expect!(out, r.verify(p), "conjugate-intersects-to-order: fails");
                    expect!(out, is_separating(p, &c2)?.is_none(), "conjugate-is-non-separating: fails");
                }
                None => out.push("conjugate-is-linear: fails".into()),
            }
        }
        Ok(out)
    }

    fn lemma24(&self, p: &Poset) -> Check {
        let mut out = Vec::new();
        if self.dim(p)? > 2 {
            return Ok(out);
        }
        let (exts, _) = nonseparating_extensions(p, 5_000, &self.limits)?;
        for l in exts {
            for k in 0..=p.len() {
                let init = BitSet::from_indices(p.len(), l.as_slice()[..k].iter().copied());
                if !lemma24_check_with(p, &l, &init, &self.limits)? {
                    out.push(format!("nested-down-set-traces: fails for L = {} and |I| = {k}", l.labels(p).join(" ")));
                }
            }
        }
        Ok(out)
    }

    fn lattices(&self, max_size: usize) -> posetdim::Result<Vec<Poset>> {
        Ok(all_posets_up_to(max_size.min(6))?.into_iter().filter(is_lattice).collect())
    }

    fn bouchet(&self, r: &IncidenceStructure, max_size: usize) -> Check {
        let mut out = Vec::new();
        let gal = galois_lattice_with(r, &self.limits)?.poset;
        for t in self.lattices(max_size)? {
            let coding = coding_exists(r, &t);
            let embeds = find_embedding_with(&gal, &t, &self.limits)?.is_some();
            expect!(out, coding == embeds, "coding-iff-galois-embeds: coding = {coding}, embedding = {embeds}, |T| = {}, T covers = {:?}", t.len(), t.covers());
        }
        Ok(out)
    }
}

/// Runs a named suite with the default harness.
pub fn verify_suite(name: &str, max_size: usize, trials: usize, seed: u64) -> CliResult<VerifyReport> {
    Harness::default().run(name.parse()?, max_size, trials, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(CliError::UnknownSuite(_))));
    }

    #[test]
    fn coding_examples() {
        let chain2 = Poset::chain(2);
        let id = IncidenceStructure::leq(&Poset::antichain(2));
        assert!(!coding_exists(&id, &chain2));
        assert!(coding_exists(&IncidenceStructure::leq(&chain2), &chain2));
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let rep = Harness::default().run(s, 3, 3, 7).unwrap();
            assert_eq!(rep.failures, vec![], "{s}");
            assert_eq!(rep.passed, rep.instances);
        }
    }

    #[test]
    fn mutation_is_caught_and_replays() {
        let h = Harness {
            mutate_dimension: true,
            ..Harness::default()
        };
        let rep = h.run(Suite::Identities, 3, 2, 1).unwrap();
        assert!(!rep.failures.is_empty());
        assert!(rep.failed() >= 1);
        let f = &rep.failures[0];
        assert!(h.replay(Suite::Identities, &f.serialization, 3).unwrap().contains(&f.identity));
    }

    #[test]
    fn instance_round_trip() {
        for inst in [Instance::Tree(2), Instance::Poset(Poset::chain(3)), Instance::Incidence(random_incidence(&mut ChaCha8Rng::seed_from_u64(1), 2, 3))] {
            assert_eq!(Instance::parse(&inst.serialize()).unwrap(), inst);
        }
    }
}
