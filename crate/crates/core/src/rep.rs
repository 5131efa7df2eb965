//! Explicit representations over the rationals built from module diagrams.
//! These drive the independent Hom/Ext oracles and the homological g-vector.

use crate::algebra::{parse_bound_quiver, GentleAlgebra, VertexId};
use crate::linalg::{Matrix, Q};
use crate::modules::{diagram_of_sum, projective, Module, ModuleDiagram, ModuleSum};
use num_traits::{One, Zero};

/// A representation: a rational vector space per vertex, a matrix per arrow.
/// Arrow matrices map coordinate columns of the source space to the target.
#[derive(Debug, Clone)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn zero(alg: &GentleAlgebra) -> Self {
        let dims = vec![0; alg.vertex_count()];
        let maps = (0..alg.quiver().arrow_count())
            .map(|a| {
                Matrix::zeros(
                    dims[alg.quiver().target(a)],
                    dims[alg.quiver().source(a)],
                )
            })
            .collect();
        Representation { dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Representation of a diagram: one basis element per node, identity action
/// along every edge (band modules use the scalar one).
pub fn rep_of_diagram(alg: &GentleAlgebra, d: &ModuleDiagram) -> Representation {
    let nv = alg.vertex_count();
    let mut dims = vec![0usize; nv];
    let mut pos = Vec::with_capacity(d.nodes.len());
    for n in &d.nodes {
        pos.push(dims[n.vertex]);
        dims[n.vertex] += 1;
    }
    let mut maps: Vec<Matrix> = (0..alg.quiver().arrow_count())
        .map(|a| Matrix::zeros(dims[alg.quiver().target(a)], dims[alg.quiver().source(a)]))
        .collect();
    for e in &d.edges {
        let m = &mut maps[e.arrow];
        m[(pos[e.to], pos[e.from])] = Q::one();
    }
    Representation { dims, maps }
}

pub fn rep_of_sum(alg: &GentleAlgebra, m: &ModuleSum) -> Representation {
    rep_of_diagram(alg, &diagram_of_sum(alg, m))
}

pub fn rep_of_module(alg: &GentleAlgebra, m: &Module) -> Representation {
    rep_of_sum(alg, &ModuleSum::from_module(m.clone()))
}

// ---------------------------------------------------------------------------
// Hom spaces

struct HomLayout {
    offsets: Vec<usize>,
    total: usize,
}

fn hom_layout(v: &Representation, w: &Representation) -> HomLayout {
    let mut offsets = Vec::with_capacity(v.dims.len());
    let mut total = 0;
    for i in 0..v.dims.len() {
        offsets.push(total);
        total += v.dims[i] * w.dims[i];
    }
    HomLayout { offsets, total }
}

/// Basis of Hom(V, W): each element is a flattened family of matrices
/// phi_i in W_i x V_i, row-major per vertex.
pub fn hom_space(alg: &GentleAlgebra, v: &Representation, w: &Representation) -> Vec<Vec<Q>> {
    let layout = hom_layout(v, w);
    if layout.total == 0 {
        return Vec::new();
    }
    let var = |i: usize, r: usize, c: usize| layout.offsets[i] + r * v.dims[i] + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for a in 0..alg.quiver().arrow_count() {
        let s = alg.quiver().source(a);
        let t = alg.quiver().target(a);
        // phi_t . V_a = W_a . phi_s, entrywise (r < w_t, c < v_s)
        for r in 0..w.dims[t] {
            for c in 0..v.dims[s] {
                let mut row = vec![Q::zero(); layout.total];
                for k in 0..v.dims[t] {
                    if !v.maps[a][(k, c)].is_zero() {
                        row[var(t, r, k)] += v.maps[a][(k, c)].clone();
                    }
                }
                for k in 0..w.dims[s] {
                    if !w.maps[a][(r, k)].is_zero() {
                        row[var(s, k, c)] -= w.maps[a][(r, k)].clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        // no constraints: the whole space
        return (0..layout.total)
            .map(|k| {
                let mut e = vec![Q::zero(); layout.total];
                e[k] = Q::one();
                e
            })
            .collect();
    }
    let mut m = Matrix::zeros(rows.len(), layout.total);
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    m.kernel_basis()
}

pub fn hom_dim_rep(alg: &GentleAlgebra, v: &Representation, w: &Representation) -> usize {
    hom_space(alg, v, w).len()
}

// ---------------------------------------------------------------------------
// Projective presentation and Ext

/// A module map given per vertex.
pub struct RepMap {
    pub blocks: Vec<Matrix>,
}

/// The projective string module P(i) as a representation, together with the
/// coordinates (vertex position) of its generator.
fn projective_rep(alg: &GentleAlgebra, i: VertexId) -> (Representation, usize) {
    let m = Module::String(projective(alg, i));
    let d = diagram_of_sum(alg, &ModuleSum::from_module(m));
    // generator = node from which every node is reachable
    let n = d.nodes.len();
    let mut gen = None;
    for start in 0..n {
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in d.successors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count == n {
            gen = Some(start);
            break;
        }
    }
    let gen = gen.expect("projective diagram has a generator");
    assert_eq!(d.nodes[gen].vertex, i);
    // position of the generator inside the vertex-i block
    let mut pos = 0;
    for k in 0..gen {
        if d.nodes[k].vertex == i {
            pos += 1;
        }
    }
    (rep_of_diagram(alg, &d), pos)
}

/// Per-vertex bases of top(V) = V / rad V, as coordinate vectors of V.
fn top_basis(alg: &GentleAlgebra, v: &Representation) -> Vec<Vec<Vec<Q>>> {
    let nv = alg.vertex_count();
    let mut out = Vec::with_capacity(nv);
    for i in 0..nv {
        let di = v.dims[i];
        if di == 0 {
            out.push(Vec::new());
            continue;
        }
        // columns of all incoming maps span rad_i
        let mut rad_cols: Vec<Vec<Q>> = Vec::new();
        for a in alg.quiver().in_arrows(i) {
            let m = &v.maps[a];
            for c in 0..m.cols {
                rad_cols.push((0..m.rows).map(|r| m[(r, c)].clone()).collect());
            }
        }
        // complete rad basis to a basis of V_i with standard vectors; the
        // added vectors represent a basis of the top
        let mut mat = Matrix::zeros(di, rad_cols.len() + di);
        for (j, col) in rad_cols.iter().enumerate() {
            for r in 0..di {
                mat[(r, j)] = col[r].clone();
            }
        }
        for j in 0..di {
            mat[(j, rad_cols.len() + j)] = Q::one();
        }
        let pivots = mat.clone().rref_pivots();
        let mut tops = Vec::new();
        for p in pivots {
            if p >= rad_cols.len() {
                let idx = p - rad_cols.len();
                let mut e = vec![Q::zero(); di];
                e[idx] = Q::one();
                tops.push(e);
            }
        }
        out.push(tops);
    }
    out
}

impl Matrix {
    fn rref_pivots(mut self) -> Vec<usize> {
        self.rref()
    }
}

/// Minimal projective cover data: P0, the map P0 -> V, and the multiplicity
/// vector of P(i) in P0.
pub struct Cover {
    pub p0: Representation,
    pub map: RepMap,
    pub mults: Vec<usize>,
}

/// Build the projective cover P0 -> V (surjective, tops matched).
pub fn projective_cover(alg: &GentleAlgebra, v: &Representation) -> Cover {
    let nv = alg.vertex_count();
    let tops = top_basis(alg, v);
    let mults: Vec<usize> = tops.iter().map(|t| t.len()).collect();

    // Assemble P0 = sum of P(i)^mults[i], with block bookkeeping.
    let mut p0 = Representation {
        dims: vec![0; nv],
        maps: (0..alg.quiver().arrow_count())
            .map(|_a| Matrix::zeros(0, 0))
            .collect(),
    };
    // temporary: collect (rep, generator pos, top vector, vertex) per copy
    struct Copy {
        rep: Representation,
        gen_vertex: VertexId,
        gen_pos: usize,
        top: Vec<Q>,
        offset: Vec<usize>,
    }
    let mut copies: Vec<Copy> = Vec::new();
    for i in 0..nv {
        if mults[i] == 0 {
            continue;
        }
        let (rep, gen_pos) = projective_rep(alg, i);
        for t in &tops[i] {
            let offset: Vec<usize> = (0..nv).map(|k| p0.dims[k]).collect();
            for k in 0..nv {
                p0.dims[k] += rep.dims[k];
            }
            copies.push(Copy {
                rep: rep.clone(),
                gen_vertex: i,
                gen_pos,
                top: t.clone(),
                offset,
            });
        }
    }
    // arrow maps of P0: block diagonal
    p0.maps = (0..alg.quiver().arrow_count())
        .map(|a| {
            let s = alg.quiver().source(a);
            let t = alg.quiver().target(a);
            let mut m = Matrix::zeros(p0.dims[t], p0.dims[s]);
            for c in &copies {
                let block = &c.rep.maps[a];
                for r in 0..block.rows {
                    for cc in 0..block.cols {
                        if !block[(r, cc)].is_zero() {
                            m[(c.offset[t] + r, c.offset[s] + cc)] = block[(r, cc)].clone();
                        }
                    }
                }
            }
            m
        })
        .collect();

    // The map P0 -> V: image of each copy basis element. Each copy is a
    // string module; propagate the generator's image along the diagram
    // edges (each non-generator node has a unique incoming edge path).
    let mut blocks: Vec<Matrix> = (0..nv).map(|i| Matrix::zeros(v.dims[i], p0.dims[i])).collect();
    for c in &copies {
        // basis images inside the copy, per vertex-position
        // walk the copy's diagram: rebuild it to know the edges
        let d = diagram_of_sum(
            alg,
            &ModuleSum::from_module(Module::String(projective(alg, c.gen_vertex))),
        );
        let n = d.nodes.len();
        // vertex positions of copy nodes
        let mut posv = vec![0usize; n];
        let mut counts = vec![0usize; nv];
        for (k, node) in d.nodes.iter().enumerate() {
            posv[k] = counts[node.vertex];
            counts[node.vertex] += 1;
        }
        let gen_node = (0..n)
            .find(|&k| d.nodes[k].vertex == c.gen_vertex && posv[k] == c.gen_pos)
            .unwrap();
        // BFS from generator, carrying image vectors in V
        let mut img: Vec<Option<Vec<Q>>> = vec![None; n];
        img[gen_node] = Some(c.top.clone());
        let mut queue = std::collections::VecDeque::from([gen_node]);
        while let Some(x) = queue.pop_front() {
            let xv = img[x].clone().unwrap();
            for e in d.edges.iter().filter(|e| e.from == x) {
                if img[e.to].is_none() {
                    let m = &v.maps[e.arrow];
                    let out: Vec<Q> = (0..m.rows)
                        .map(|r| (0..m.cols).map(|cc| &m[(r, cc)] * &xv[cc]).sum())
                        .collect();
                    img[e.to] = Some(out);
                    queue.push_back(e.to);
                }
            }
        }
        for (k, node) in d.nodes.iter().enumerate() {
            let vimg = img[k].as_ref().expect("projective diagram connected");
            let col = c.offset[node.vertex] + posv[k];
            for r in 0..v.dims[node.vertex] {
                blocks[node.vertex][(r, col)] = vimg[r].clone();
            }
        }
    }

    Cover { p0, map: RepMap { blocks }, mults }
}

/// Kernel of a module map as a representation plus per-vertex basis columns
/// inside the source.
pub struct KernelRep {
    pub rep: Representation,
    pub basis: Vec<Vec<Vec<Q>>>,
}

pub fn kernel_rep(alg: &GentleAlgebra, source: &Representation, map: &RepMap) -> KernelRep {
    let nv = alg.vertex_count();
    let mut basis: Vec<Vec<Vec<Q>>> = Vec::with_capacity(nv);
    for i in 0..nv {
        let b = &map.blocks[i];
        if source.dims[i] == 0 {
            basis.push(Vec::new());
            continue;
        }
        if b.rows == 0 {
            basis.push(
                (0..source.dims[i])
                    .map(|k| {
                        let mut e = vec![Q::zero(); source.dims[i]];
                        e[k] = Q::one();
                        e
                    })
                    .collect(),
            );
            continue;
        }
        basis.push(b.kernel_basis());
    }
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    // induced arrow maps in kernel coordinates: solve B_t x = M . k
    let maps: Vec<Matrix> = (0..alg.quiver().arrow_count())
        .map(|a| {
            let s = alg.quiver().source(a);
            let t = alg.quiver().target(a);
            let mut m = Matrix::zeros(dims[t], dims[s]);
            if dims[s] == 0 || source.dims[t] == 0 {
                return m;
            }
            // matrix whose columns are the target kernel basis
            let bt = &basis[t];
            let mut sys = Matrix::zeros(source.dims[t], bt.len() + 1);
            for (j, col) in bt.iter().enumerate() {
                for r in 0..source.dims[t] {
                    sys[(r, j)] = col[r].clone();
                }
            }
            for (j, k) in basis[s].iter().enumerate() {
                let mv = &source.maps[a];
                let y: Vec<Q> = (0..mv.rows)
                    .map(|r| (0..mv.cols).map(|c| &mv[(r, c)] * &k[c]).sum())
                    .collect();
                // solve sys[.., ..bt.len()] x = y
                let mut aug = sys.clone();
                for r in 0..source.dims[t] {
                    aug[(r, bt.len())] = y[r].clone();
                }
                let pivots = aug.rref();
                // read solution: for each pivot column p < bt.len(), value is
                // the augmented entry of its row
                let mut x = vec![Q::zero(); bt.len()];
                for (row, &p) in pivots.iter().enumerate() {
                    if p < bt.len() {
                        x[p] = aug[(row, bt.len())].clone();
                    } else {
                        // inconsistent: M.k not in span -- cannot happen for
                        // a genuine submodule
                        panic!("kernel not closed under action");
                    }
                }
                for r in 0..dims[t] {
                    m[(r, j)] = x[r].clone();
                }
            }
            m
        })
        .collect();
    KernelRep { rep: Representation { dims, maps }, basis }
}

/// dim Ext^1(S, X) by exact linear algebra: from 0 -> K -> P0 -> S -> 0,
/// Ext^1(S, X) = coker(Hom(P0, X) -> Hom(K, X)).
pub fn ext_dim_rep(alg: &GentleAlgebra, s: &Representation, x: &Representation) -> usize {
    if s.total_dim() == 0 || x.total_dim() == 0 {
        return 0;
    }
    let cover = projective_cover(alg, s);
    let kernel = kernel_rep(alg, &cover.p0, &cover.map);
    if kernel.rep.total_dim() == 0 {
        return 0;
    }
    let hom_k = hom_space(alg, &kernel.rep, x);
    if hom_k.is_empty() {
        return 0;
    }
    let hom_p = hom_space(alg, &cover.p0, x);
    // restriction: phi |-> phi . B, flattened into Hom(K, X) coordinates
    let layout_k = hom_layout(&kernel.rep, x);
    let layout_p = hom_layout(&cover.p0, x);
    let nv = alg.vertex_count();
    let mut images: Vec<Vec<Q>> = Vec::new();
    for phi in &hom_p {
        let mut psi = vec![Q::zero(); layout_k.total];
        for i in 0..nv {
            let (xr, pc, kc) = (x.dims[i], cover.p0.dims[i], kernel.rep.dims[i]);
            for r in 0..xr {
                for c in 0..kc {
                    // psi_i[r, c] = sum_m phi_i[r, m] * B_i[m, c]
                    let mut acc = Q::zero();
                    for m in 0..pc {
                        let pv = &phi[layout_p.offsets[i] + r * pc + m];
                        if !pv.is_zero() {
                            acc += pv * &kernel.basis[i][c][m];
                        }
                    }
                    psi[layout_k.offsets[i] + r * kernel.rep.dims[i] + c] = acc;
                }
            }
        }
        images.push(psi);
    }
    hom_k.len() - crate::linalg::span_dim(&images)
}

/// dim Hom by the linear oracle.
pub fn hom_dim_oracle(alg: &GentleAlgebra, x: &ModuleSum, y: &ModuleSum) -> usize {
    hom_dim_rep(alg, &rep_of_sum(alg, x), &rep_of_sum(alg, y))
}

/// dim Ext^1 by the linear oracle.
pub fn ext_dim_oracle(alg: &GentleAlgebra, s: &ModuleSum, x: &ModuleSum) -> usize {
    ext_dim_rep(alg, &rep_of_sum(alg, s), &rep_of_sum(alg, x))
}

// ---------------------------------------------------------------------------
// Opposite algebra and the homological g-vector

/// The opposite gentle algebra: arrows reversed, relations transposed.
pub fn opposite(alg: &GentleAlgebra) -> GentleAlgebra {
    let q = alg.quiver();
    let mut text = String::from("vertices");
    for v in q.vertex_names() {
        text.push(' ');
        text.push_str(v);
    }
    text.push('\n');
    for a in q.arrows() {
        text.push_str(&format!(
            "arrow {} {} {}\n",
            a.name,
            q.vertex_name(a.target),
            q.vertex_name(a.source)
        ));
    }
    for &(a, b) in alg.relations() {
        text.push_str(&format!("relation {} {}\n", q.arrow(b).name, q.arrow(a).name));
    }
    GentleAlgebra::new(parse_bound_quiver(&text).expect("opposite parses"))
        .expect("opposite of a gentle algebra is gentle")
}

/// The dual module D(V) as a representation over the opposite algebra.
pub fn dual_rep(alg_op: &GentleAlgebra, v: &Representation) -> Representation {
    let maps = (0..alg_op.quiver().arrow_count())
        .map(|a| v.maps[a].transpose())
        .collect();
    Representation { dims: v.dims.clone(), maps }
}

/// g-vector from a minimal injective copresentation 0 -> L -> I0 -> I1:
/// g_i = (mult of I(i) in I1) - (mult in I0). Computed as the projective
/// presentation of DL over the opposite algebra.
pub fn g_vector_homological(alg: &GentleAlgebra, m: &ModuleSum) -> Vec<i64> {
    let n = alg.vertex_count();
    if m.is_zero() {
        return vec![0; n];
    }
    let op = opposite(alg);
    let v = rep_of_sum(alg, m);
    let dv = dual_rep(&op, &v);
    let cover = projective_cover(&op, &dv);
    let kernel = kernel_rep(&op, &cover.p0, &cover.map);
    let tops_k = top_basis(&op, &kernel.rep);
    (0..n)
        .map(|i| tops_k[i].len() as i64 - cover.mults[i] as i64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::modules::{injective, simple};
    use crate::strings::parse_word;

    fn msum(alg: &GentleAlgebra, expr: &str) -> ModuleSum {
        crate::modules::parse_module_sum(alg, expr).unwrap()
    }

    #[test]
    fn hom_between_simples_is_delta() {
        let alg = fixtures::octagon();
        for i in 0..5 {
            for j in 0..5 {
                let si = ModuleSum::from_module(Module::simple(i));
                let sj = ModuleSum::from_module(Module::simple(j));
                assert_eq!(hom_dim_oracle(&alg, &si, &sj), usize::from(i == j));
            }
        }
    }

    #[test]
    fn hom_example_dimension_two() {
        // dim Hom(M(b), tau S(3)) = 2 over algebra (i)
        let alg = fixtures::algebra_i();
        let x = msum(&alg, "str b");
        let t = msum(&alg, "str b c~ a");
        assert_eq!(hom_dim_oracle(&alg, &x, &t), 2);
    }

    #[test]
    fn ext_oracle_octagon_example() {
        let alg = fixtures::octagon();
        let s = msum(&alg, "str b f~");
        let x = msum(&alg, "str c~ d");
        assert_eq!(ext_dim_oracle(&alg, &s, &x), 1);
    }

    #[test]
    fn ext_vanishes_on_projective_source() {
        let alg = fixtures::octagon();
        for i in 0..5 {
            let p = ModuleSum::from_module(Module::String(crate::modules::projective(&alg, i)));
            let x = msum(&alg, "str c~ d");
            assert_eq!(ext_dim_oracle(&alg, &p, &x), 0);
        }
    }

    #[test]
    fn ext_into_injective_vanishes_over_hereditary() {
        let alg = fixtures::a5();
        for i in 0..5 {
            let inj = ModuleSum::from_module(Module::String(injective(&alg, i)));
            let s = msum(&alg, "str b a");
            assert_eq!(ext_dim_oracle(&alg, &s, &inj), 0);
        }
    }

    #[test]
    fn band_hom_with_scalar_one() {
        let alg = fixtures::band_algebra();
        let b = msum(&alg, "band a~ e a d~ f d");
        // End(band) contains at least the identity
        assert!(hom_dim_oracle(&alg, &b, &b) >= 1);
    }

    #[test]
    fn ext_band_example() {
        // Ext^1(M(c e a d~), band) = 1
        let alg = fixtures::band_algebra();
        let s = msum(&alg, "str c e a d~");
        let x = msum(&alg, "band a~ e a d~ f d");
        assert_eq!(ext_dim_oracle(&alg, &s, &x), 1);
    }

    #[test]
    fn g_homological_goldens() {
        let alg = fixtures::algebra_i();
        let s1 = ModuleSum::from_module(Module::simple(0));
        assert_eq!(g_vector_homological(&alg, &s1), vec![-1, 1, 1]);

        let oct = fixtures::octagon();
        let m = msum(&oct, "str c~ d");
        assert_eq!(g_vector_homological(&oct, &m), vec![-1, 0, 1, -1, 0]);
        // injectives: 0 -> I(i) -> I(i) -> 0 gives -e_i
        for i in 0..5 {
            let inj = ModuleSum::from_module(Module::String(injective(&oct, i)));
            let mut e = vec![0i64; 5];
            e[i] = -1;
            assert_eq!(g_vector_homological(&oct, &inj), e);
        }
        let _ = simple(&oct, 0);
        let _ = parse_word(&oct, "c~ d").unwrap();
    }
}

// ---------------------------------------------------------------------------
// Stable-morphism tests

/// Representation of a word in a fixed orientation.
pub fn rep_of_word(alg: &GentleAlgebra, w: &crate::strings::StringWord) -> Representation {
    rep_of_diagram(alg, &crate::modules::diagram_of_word(alg, w))
}

/// Representation of a band in its stored rotation.
pub fn rep_of_band(alg: &GentleAlgebra, b: &crate::strings::Band) -> Representation {
    rep_of_diagram(alg, &crate::modules::diagram_of_band(alg, b))
}

/// Per-vertex coordinates (vertex, offset) of each diagram node.
pub fn node_coordinates(
    alg: &GentleAlgebra,
    d: &crate::modules::ModuleDiagram,
) -> Vec<(usize, usize)> {
    let mut counts = vec![0usize; alg.vertex_count()];
    d.nodes
        .iter()
        .map(|n| {
            let c = (n.vertex, counts[n.vertex]);
            counts[n.vertex] += 1;
            c
        })
        .collect()
}

/// A module map commutes with all arrow actions.
pub fn is_module_map(
    alg: &GentleAlgebra,
    v: &Representation,
    w: &Representation,
    h: &[Matrix],
) -> bool {
    for a in 0..alg.quiver().arrow_count() {
        let s = alg.quiver().source(a);
        let t = alg.quiver().target(a);
        let lhs = h[t].mul(&v.maps[a]);
        let rhs = w.maps[a].mul(&h[s]);
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn flatten_blocks(v: &Representation, w: &Representation, h: &[Matrix]) -> Vec<Q> {
    let layout = hom_layout(v, w);
    let mut out = vec![Q::zero(); layout.total];
    for i in 0..v.dims.len() {
        for r in 0..w.dims[i] {
            for c in 0..v.dims[i] {
                out[layout.offsets[i] + r * v.dims[i] + c] = h[i][(r, c)].clone();
            }
        }
    }
    out
}

/// Does the map h: V -> W factor through a projective module? Equivalent
/// to factoring through the projective cover of W.
pub fn factors_through_projective(
    alg: &GentleAlgebra,
    v: &Representation,
    w: &Representation,
    h: &[Matrix],
) -> bool {
    debug_assert!(is_module_map(alg, v, w, h));
    let cover = projective_cover(alg, w);
    let hom_vp = hom_space(alg, v, &cover.p0);
    let layout_vp = hom_layout(v, &cover.p0);
    let mut span: Vec<Vec<Q>> = Vec::new();
    for phi in &hom_vp {
        // compose with the cover map per vertex
        let blocks: Vec<Matrix> = (0..alg.vertex_count())
            .map(|i| {
                let (pr, vc) = (cover.p0.dims[i], v.dims[i]);
                let mut m = Matrix::zeros(pr, vc);
                for r in 0..pr {
                    for c in 0..vc {
                        m[(r, c)] = phi[layout_vp.offsets[i] + r * vc + c].clone();
                    }
                }
                cover.map.blocks[i].mul(&m)
            })
            .collect();
        span.push(flatten_blocks(v, w, &blocks));
    }
    let target = flatten_blocks(v, w, h);
    let base_rank = crate::linalg::span_dim(&span);
    span.push(target);
    crate::linalg::span_dim(&span) == base_rank
}

/// Does the map h: V -> W factor through an injective module? Tested as
/// factoring through a projective over the opposite algebra.
pub fn factors_through_injective(
    alg: &GentleAlgebra,
    v: &Representation,
    w: &Representation,
    h: &[Matrix],
) -> bool {
    debug_assert!(is_module_map(alg, v, w, h));
    let op = opposite(alg);
    let dv = dual_rep(&op, v);
    let dw = dual_rep(&op, w);
    let ht: Vec<Matrix> = h.iter().map(|m| m.transpose()).collect();
    factors_through_projective(&op, &dw, &dv, &ht)
}
