use std::collections::BTreeMap;

use posetdim::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph of the cover relation, one `rank=same` group per height, bottom first.
pub fn export_hasse(name: &str, p: &Poset) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=plaintext];\n", quote(name));
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, h) in p.heights().into_iter().enumerate() {
        ranks.entry(h).or_default().push(x);
    }
    for xs in ranks.values() {
        let names: Vec<String> = xs.iter().map(|&x| quote(p.label(x))).collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", names.join("; ")));
    }
    for (a, b) in p.covers() {
        out.push_str(&format!("  {} -> {};\n", quote(p.label(a)), quote(p.label(b))));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use posetdim::random_poset;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn chain_and_antichain() {
        assert_eq!(edges(&export_hasse("c", &Poset::chain(2))), 1);
        let dot = export_hasse("a", &Poset::antichain(4));
        assert_eq!(edges(&dot), 0);
        assert_eq!(dot.matches("\"").count() / 2, 5);
    }

    #[test]
    fn one_edge_per_cover() {
        for seed in 0..10 {
            let p = random_poset(8, 0.4, seed).unwrap();
            assert_eq!(edges(&export_hasse("r", &p)), p.covers().len());
        }
    }
}
