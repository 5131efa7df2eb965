//! Quiver-Grassmannian Euler characteristics via successor-closed
//! subquivers, F-polynomials, g-vectors and the cluster character.

use crate::algebra::GentleAlgebra;
use crate::modules::{diagram_of_sum, Module, ModuleDiagram, ModuleSum};
use crate::poly::{LaurentCC, YPolynomial};
use crate::rep::g_vector_homological as g_homological_rep;
use crate::strings::{left_attach, right_attach_inv, StringWord};

/// Generating function of successor-closed subquivers of one diagram
/// component, graded by dimension vector.
///
/// Components are paths or cycles, so a transfer-matrix sweep over the node
/// line suffices: the state tracks membership of the previous node, edge
/// constraints are checked between neighbours.
fn component_poly(
    alg: &GentleAlgebra,
    d: &ModuleDiagram,
    range: (usize, usize),
    cyclic: bool,
) -> YPolynomial {
    let n = alg.vertex_count();
    let (lo, hi) = range;
    let size = hi - lo;
    if size == 0 {
        return YPolynomial::one(n);
    }
    // edge (u, v) allowed with membership (mu, mv)?
    let ok = |u: usize, v: usize, mu: bool, mv: bool| -> bool {
        for e in &d.edges {
            if e.from == u && e.to == v && mu && !mv {
                return false;
            }
            if e.from == v && e.to == u && mv && !mu {
                return false;
            }
        }
        true
    };
    let unit = |node: usize, include: bool| -> YPolynomial {
        if include {
            let mut e = vec![0u32; n];
            e[d.nodes[node].vertex] = 1;
            YPolynomial::monomial(e, 1)
        } else {
            YPolynomial::one(n)
        }
    };
    let mut total = YPolynomial::zero();
    // split on the membership of the first node; cycles check the wrap edge
    // against it at the end
    for init in [false, true] {
        // dp[state of current node]
        let mut dp: Vec<YPolynomial> = vec![YPolynomial::zero(), YPolynomial::zero()];
        dp[usize::from(init)] = unit(lo, init);
        for k in 1..size {
            let (prev, cur) = (lo + k - 1, lo + k);
            let mut next = vec![YPolynomial::zero(), YPolynomial::zero()];
            for prev_in in [false, true] {
                if dp[usize::from(prev_in)].is_zero() {
                    continue;
                }
                for cur_in in [false, true] {
                    if !ok(prev, cur, prev_in, cur_in) {
                        continue;
                    }
                    let add = dp[usize::from(prev_in)].mul(&unit(cur, cur_in));
                    next[usize::from(cur_in)] = next[usize::from(cur_in)].add(&add);
                }
            }
            dp = next;
        }
        for last_in in [false, true] {
            if dp[usize::from(last_in)].is_zero() {
                continue;
            }
            if cyclic && size > 1 && !ok(hi - 1, lo, last_in, init) {
                continue;
            }
            total = total.add(&dp[usize::from(last_in)]);
        }
    }
    total
}

/// F-polynomial of a diagram: the product over components.
pub fn f_polynomial_of_diagram(alg: &GentleAlgebra, d: &ModuleDiagram) -> YPolynomial {
    let n = alg.vertex_count();
    let mut f = YPolynomial::one(n);
    for (idx, &range) in d.components.iter().enumerate() {
        let cyclic = d.component_cyclic[idx];
        f = f.mul(&component_poly(alg, d, range, cyclic));
    }
    f
}

/// F-polynomial of a module sum; multiplicative over direct sums.
pub fn f_polynomial(alg: &GentleAlgebra, m: &ModuleSum) -> YPolynomial {
    f_polynomial_of_diagram(alg, &diagram_of_sum(alg, m))
}

/// Euler characteristic of Gr_e: the coefficient of y^e in the F-polynomial.
pub fn chi(alg: &GentleAlgebra, m: &ModuleSum, e: &[u32]) -> i64 {
    f_polynomial(alg, m).coeff(e)
}

/// Brute-force successor-closed subset count: the oracle for `chi`.
pub fn chi_naive(alg: &GentleAlgebra, m: &ModuleSum, e: &[u32]) -> i64 {
    let d = diagram_of_sum(alg, m);
    let n = d.nodes.len();
    assert!(n <= 24, "naive enumeration limited to small diagrams");
    let mut count = 0;
    'subset: for mask in 0u32..(1 << n) {
        for edge in &d.edges {
            if mask & (1 << edge.from) != 0 && mask & (1 << edge.to) == 0 {
                continue 'subset;
            }
        }
        let mut dim = vec![0u32; alg.vertex_count()];
        for (k, node) in d.nodes.iter().enumerate() {
            if mask & (1 << k) != 0 {
                dim[node.vertex] += 1;
            }
        }
        if dim == e {
            count += 1;
        }
    }
    count
}

/// Combinatorial g-vector of a string module: g = b + r - a, where a counts
/// bottoms, b counts interior tops, and r records the hook/cohook
/// attachability of the two ends.
pub fn g_vector_string(alg: &GentleAlgebra, w: &StringWord) -> Vec<i64> {
    let n = alg.vertex_count();
    let mut g = vec![0i64; n];
    match w {
        StringWord::Zero => return g,
        StringWord::Trivial { vertex, .. } => {
            // the single node is a bottom
            g[*vertex] -= 1;
        }
        StringWord::Word(l) => {
            let s = l.len();
            for p in 0..=s {
                let into_left = p > 0 && l[p - 1].direct; // edge p-1 -> p
                let into_right = p < s && !l[p].direct; // edge p+1 -> p
                let out_left = p > 0 && !l[p - 1].direct;
                let out_right = p < s && l[p].direct;
                let vertex = w.node_vertex(alg, p);
                let is_bottom = !(out_left || out_right) && (into_left || into_right || s == 0);
                let is_top_interior = p > 0 && p < s && out_left && out_right;
                if is_bottom {
                    g[vertex] -= 1;
                }
                if is_top_interior {
                    g[vertex] += 1;
                }
            }
        }
    }
    if let Some(a) = left_attach(alg, w) {
        g[alg.quiver().source(a)] += 1;
    }
    if let Some(b) = right_attach_inv(alg, w) {
        g[alg.quiver().source(b)] += 1;
    }
    g
}

/// g-vector: combinatorial on strings, homological on bands; additive on
/// direct sums.
pub fn g_vector(alg: &GentleAlgebra, m: &ModuleSum) -> Vec<i64> {
    let n = alg.vertex_count();
    let mut g = vec![0i64; n];
    for s in m.summands() {
        let part = match s {
            Module::String(sm) => g_vector_string(alg, sm.word()),
            Module::Band(_) => {
                g_homological_rep(alg, &ModuleSum::from_module(s.clone()))
            }
        };
        for i in 0..n {
            g[i] += part[i];
        }
    }
    g
}

/// Homological g-vector via a minimal injective copresentation.
pub fn g_vector_homological(alg: &GentleAlgebra, m: &ModuleSum) -> Vec<i64> {
    g_homological_rep(alg, m)
}

/// Cluster character CC(L) = sum_e chi(Gr_e(L)) x^{B e + g_L} y^e.
pub fn cluster_character(alg: &GentleAlgebra, m: &ModuleSum) -> LaurentCC {
    let b = alg.exchange_matrix();
    let g = g_vector(alg, m);
    let f = f_polynomial(alg, m);
    let mut cc = LaurentCC::zero();
    for (e, c) in f.terms() {
        let ei: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        let be = b.mul_vec(&ei);
        let xexp: Vec<i64> = be.iter().zip(&g).map(|(p, q)| p + q).collect();
        cc.add_term(xexp, e.clone(), *c);
    }
    cc
}

/// Every term of CC(L) has multidegree g under deg(x_i) = e_i,
/// deg(y_j) = -(j-th column of B). Returns the common degree.
pub fn cc_multidegree(alg: &GentleAlgebra, cc: &LaurentCC) -> Option<Vec<i64>> {
    let b = alg.exchange_matrix();
    let mut deg: Option<Vec<i64>> = None;
    for ((x, y), _) in cc.terms() {
        let yi: Vec<i64> = y.iter().map(|&v| v as i64).collect();
        let by = b.mul_vec(&yi);
        let d: Vec<i64> = x.iter().zip(&by).map(|(p, q)| p - q).collect();
        match &deg {
            None => deg = Some(d),
            Some(existing) => {
                if *existing != d {
                    return None;
                }
            }
        }
    }
    deg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::modules::{dim_vector, parse_module_sum};

    fn msum(alg: &GentleAlgebra, expr: &str) -> ModuleSum {
        parse_module_sum(alg, expr).unwrap()
    }

    fn ypoly(n: usize, terms: &[(&[u32], i64)]) -> YPolynomial {
        let mut p = YPolynomial::zero();
        for (e, c) in terms {
            assert_eq!(e.len(), n);
            p.add_term(e.to_vec(), *c);
        }
        p
    }

    #[test]
    fn grassmannian_table() {
        // L = M(a~ c b~) over algebra (i)
        let alg = fixtures::algebra_i();
        let m = msum(&alg, "str a~ c b~");
        let table: &[(&[u32], i64)] = &[
            (&[0, 0, 0], 1),
            (&[1, 0, 0], 1),
            (&[0, 1, 0], 1),
            (&[1, 1, 0], 2),
            (&[1, 2, 0], 1),
            (&[1, 1, 1], 1),
            (&[1, 2, 1], 1),
        ];
        for (e, expected) in table {
            assert_eq!(chi(&alg, &m, e), *expected, "chi at {e:?}");
            assert_eq!(chi_naive(&alg, &m, e), *expected);
        }
        // no other nonzero entries
        assert_eq!(f_polynomial(&alg, &m).num_terms(), 7);
    }

    #[test]
    fn chi_trivial_cases() {
        let alg = fixtures::octagon();
        let m = msum(&alg, "str b d");
        assert_eq!(chi(&alg, &m, &[0, 0, 0, 0, 0]), 1);
        let d = dim_vector(&alg, &m);
        assert_eq!(chi(&alg, &m, &d), 1);
    }

    #[test]
    fn f_polynomial_string_golden() {
        let alg = fixtures::algebra_i();
        let f = f_polynomial(&alg, &msum(&alg, "str a~ c b~"));
        let expected = ypoly(
            3,
            &[
                (&[0, 0, 0], 1),
                (&[1, 0, 0], 1),
                (&[0, 1, 0], 1),
                (&[1, 1, 0], 2),
                (&[1, 2, 0], 1),
                (&[1, 1, 1], 1),
                (&[1, 2, 1], 1),
            ],
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn f_polynomial_band_golden() {
        let alg = fixtures::band_algebra();
        let f = f_polynomial(&alg, &msum(&alg, "band a~ e a d~ f d"));
        let expected = ypoly(
            4,
            &[
                (&[0, 0, 0, 0], 1),
                (&[1, 0, 0, 0], 2),
                (&[2, 0, 0, 0], 1),
                (&[1, 1, 0, 0], 1),
                (&[1, 0, 1, 0], 1),
                (&[2, 1, 0, 0], 1),
                (&[2, 0, 1, 0], 1),
                (&[2, 2, 0, 0], 1),
                (&[2, 0, 2, 0], 1),
                (&[2, 1, 1, 0], 1),
                (&[2, 1, 2, 0], 1),
                (&[2, 2, 1, 0], 1),
                (&[2, 2, 2, 0], 1),
            ],
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn f_polynomial_of_zero_is_one() {
        let alg = fixtures::octagon();
        assert_eq!(f_polynomial(&alg, &ModuleSum::zero()), YPolynomial::one(5));
    }

    #[test]
    fn f_multiplicative_on_sums() {
        let alg = fixtures::octagon();
        let a = msum(&alg, "str c~ d");
        let b = msum(&alg, "str b f~");
        let ab = a.plus(&b);
        assert_eq!(f_polynomial(&alg, &ab), f_polynomial(&alg, &a).mul(&f_polynomial(&alg, &b)));
    }

    #[test]
    fn f_constant_and_top_terms() {
        let alg = fixtures::octagon();
        for expr in ["str c~ d", "str b d", "str f c"] {
            let m = msum(&alg, expr);
            let f = f_polynomial(&alg, &m);
            assert_eq!(f.coeff(&vec![0; 5]), 1);
            assert_eq!(f.coeff(&dim_vector(&alg, &m)), 1);
        }
    }

    #[test]
    fn g_vector_goldens() {
        let alg = fixtures::algebra_i();
        assert_eq!(g_vector(&alg, &msum(&alg, "str e(1,+)")), vec![-1, 1, 1]);

        let oct = fixtures::octagon();
        assert_eq!(g_vector(&oct, &msum(&oct, "str c~ d")), vec![-1, 0, 1, -1, 0]);
        assert_eq!(g_vector(&oct, &ModuleSum::zero()), vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn g_vector_agrees_with_homological() {
        let oct = fixtures::octagon();
        for expr in ["str c~ d", "str b d", "str b f~", "str e(3,+)", "str f c", "str b", "str e"] {
            let m = msum(&oct, expr);
            assert_eq!(g_vector(&oct, &m), g_vector_homological(&oct, &m), "at {expr}");
        }
        let alg = fixtures::algebra_i();
        for expr in ["str e(1,+)", "str e(2,+)", "str e(3,+)", "str b", "str a~ c b~", "str b c~"] {
            let m = msum(&alg, expr);
            assert_eq!(g_vector(&alg, &m), g_vector_homological(&alg, &m), "at {expr}");
        }
    }

    #[test]
    fn cc_specializes_to_f() {
        let oct = fixtures::octagon();
        for expr in ["str c~ d", "str b f~", "str f c"] {
            let m = msum(&oct, expr);
            let cc = cluster_character(&oct, &m);
            assert_eq!(cc.specialize_x(), f_polynomial(&oct, &m));
        }
    }

    #[test]
    fn cc_is_homogeneous_of_degree_g() {
        let oct = fixtures::octagon();
        for expr in ["str c~ d", "str b f~", "str b d + str e"] {
            let m = msum(&oct, expr);
            let cc = cluster_character(&oct, &m);
            assert_eq!(cc_multidegree(&oct, &cc), Some(g_vector(&oct, &m)), "at {expr}");
        }
    }

    #[test]
    fn cc_of_zero_is_one() {
        let oct = fixtures::octagon();
        assert_eq!(cluster_character(&oct, &ModuleSum::zero()), LaurentCC::one(5));
    }

    #[test]
    fn band_f_matches_naive_chi() {
        let alg = fixtures::band_algebra();
        let m = msum(&alg, "band a~ e a d~ f d");
        let f = f_polynomial(&alg, &m);
        for (e, c) in f.terms() {
            assert_eq!(chi_naive(&alg, &m, e), *c);
        }
    }
}
