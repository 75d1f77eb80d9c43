//! Size caps that keep every solver exact.

/// Caps applied by constructions and solvers. Exceeding one is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Ground-set cap for constructed posets (products, splits, generators).
    pub max_elements: usize,
    /// Cap on the number of closed sets in a Galois / initial-segment lattice.
    /// Lattice-valued posets and the dimension solver are bounded by this.
    pub max_lattice: usize,
    /// Cap for enumerating all linear extensions.
    pub max_enumeration: usize,
    /// Cap for the brute-force dimension oracle.
    pub max_oracle: usize,
    /// Cell cap (|E|·|F|) for the Ferrers cover oracle.
    pub max_ferrers_cells: usize,
    /// Node budget for backtracking searches (embedding, orientation, extensions).
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 64,
            max_lattice: 4096,
            max_enumeration: 10,
            max_oracle: 7,
            max_ferrers_cells: 20,
            search_budget: 50_000_000,
        }
    }
}

impl Limits {
    /// A tighter profile for constrained environments.
    pub fn strict() -> Self {
        Limits {
            max_elements: 32,
            max_lattice: 512,
            max_enumeration: 8,
            max_oracle: 6,
            max_ferrers_cells: 12,
            search_budget: 1_000_000,
        }
    }

    /// Look up a named profile (`default` or `strict`).
    pub fn profile(name: &str) -> Option<Self> {
        match name {
            "default" => Some(Self::default()),
            "strict" => Some(Self::strict()),
            _ => None,
        }
    }
}
