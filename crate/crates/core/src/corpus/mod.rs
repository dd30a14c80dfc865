//! Standard small rings, the checked-in corpus manifest and ring-spec I/O.

mod constructors;
mod manifest;
mod spec_io;

pub use constructors::{
    gf4, gf8, gf9, make_direct_product, make_gf, make_matrix_ring, make_upper_triangular, make_zmod,
};
pub use manifest::{
    Constructor, Corpus, CorpusEntry, Expected, ExteriorGrid, Manifest, ParityGrid, Tier,
};
pub use spec_io::{parse_ring, parse_spec, write_spec};
