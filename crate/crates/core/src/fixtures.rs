//! Bundled example algebras used by tests and the `selftest` command.

use crate::algebra::{parse_algebra, GentleAlgebra};

/// Three vertices, arrows b: 2->1, a: 3->2, c: 3->1, ideal generated by ab.
pub const ALGEBRA_I_DSL: &str = "\
vertices 1 2 3
arrow b 2 1
arrow a 3 2
arrow c 3 1
relation a b
";

/// The five-vertex algebra of the octagon triangulation: two oriented
/// 3-cycles with full relations glued at vertex 3.
pub const OCTAGON_DSL: &str = "\
vertices 1 2 3 4 5
arrow a 1 2
arrow b 2 3
arrow c 3 1
arrow d 3 4
arrow e 4 5
arrow f 5 3
relation a b
relation b c
relation c a
relation d e
relation e f
relation f d
";

/// Four vertices with two loops; hosts the band a~ e a d~ f d.
pub const BAND_DSL: &str = "\
vertices 1 2 3 4
arrow a 2 1
arrow b 1 4
arrow c 4 2
arrow d 3 1
arrow e 2 2
arrow f 3 3
relation a b
relation b c
relation c a
relation e e
relation f f
";

/// Linear A5 quiver 1 <- 2 <- 3 <- 4 <- 5, hereditary.
pub const A5_DSL: &str = "\
vertices 1 2 3 4 5
arrow a 2 1
arrow b 3 2
arrow c 4 3
arrow d 5 4
";

/// Five-vertex tree quiver 2 -> 1, 2 -> 3, 3 -> 4, 5 -> 4, hereditary.
pub const COUNTEREXAMPLE_DSL: &str = "\
vertices 1 2 3 4 5
arrow a 2 1
arrow b 2 3
arrow c 3 4
arrow d 5 4
";

/// Five-vertex gentle algebra with relations ca, db, ec (third worked
/// multiplication example).
pub const EXTENDED_DSL: &str = "\
vertices 1 2 3 4 5
arrow a 1 2
arrow b 1 3
arrow c 4 1
arrow d 5 1
arrow e 5 4
relation c a
relation d b
relation e c
";

pub fn algebra_i() -> GentleAlgebra {
    parse_algebra(ALGEBRA_I_DSL).unwrap()
}

pub fn octagon() -> GentleAlgebra {
    let mut a = parse_algebra(OCTAGON_DSL).unwrap();
    a.from_triangulation = true;
    a
}

pub fn band_algebra() -> GentleAlgebra {
    parse_algebra(BAND_DSL).unwrap()
}

pub fn a5() -> GentleAlgebra {
    parse_algebra(A5_DSL).unwrap()
}

pub fn counterexample() -> GentleAlgebra {
    parse_algebra(COUNTEREXAMPLE_DSL).unwrap()
}

pub fn extended_example() -> GentleAlgebra {
    parse_algebra(EXTENDED_DSL).unwrap()
}
