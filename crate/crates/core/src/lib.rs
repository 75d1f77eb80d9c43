//! Order dimension of finite posets, Galois lattices, Ferrers relations and
//! separating extensions.

pub mod bitset;
pub mod dimension;
pub mod embed;
pub mod error;
pub mod extensions;
pub mod generators;
pub mod incidence;
pub mod lattice;
pub mod limits;
pub mod poset;
pub mod width;

pub use bitset::BitSet;
pub use dimension::{
    chain_product_embedding, critical_pairs, dm_dimension, dm_dimension_oracle, dm_dimension_oracle_with,
    dm_dimension_with, ferrers_dimension, ferrers_dimension_oracle, ferrers_dimension_with, interval_dimension,
    interval_dimension_with, minimal_ferrers_cover_oracle, ChainProductEmbedding, FerrersCover, Realizer,
};
pub use embed::{find_embedding, find_embedding_with, is_isomorphic};
pub use error::{Error, Result};
pub use extensions::{
    conjugate, dim2_test, dim2_test_with, find_nonseparating_extension, is_comparability_graph, is_separating,
    lemma24_check, linear_extensions, t2_cover_check, Orientation, SeparationWitness,
};
pub use generators::{
    all_posets, all_posets_up_to, binary_tree, obstruction_catalog, omega_eta, rado, random_poset, spider_a,
    three_irreducible_b, Seed,
};
pub use incidence::{
    bipartite, canonical_coding, ferrers_violation, galois_lattice, galois_lattice_with, initial_segments,
    initial_segments_with, is_coding, is_ferrers, is_interval_order, macneille, macneille_with, open_split, split,
    Coding, IncidenceStructure, LabeledLattice, SubsetFamily,
};
pub use lattice::{
    chain_factorization, dilworth_check, interval_spectrum_check, is_distributive, is_lattice, join_irreducibles,
    spectrum, ChainFactorization, DilworthCheck, PrimeIdeal, Spectrum,
};
pub use limits::Limits;
pub use poset::{
    direct_product, disjoint_sum, lex_product, ordinal_product_2, EmbeddingMap, Graph, LinearOrder, Poset,
    RelationMode,
};
pub use width::{width, Width};
