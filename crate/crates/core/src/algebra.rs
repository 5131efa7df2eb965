//! Bound quivers, the gentle axioms, sign functions and the exchange matrix.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{AxiomViolation, DomainError, Error, ParseError};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver with named vertices and arrows.
///
/// Declaration order of the vertices fixes the coordinate order of every
/// dimension vector, g-vector and polynomial exponent in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self, Error> {
        let mut vindex = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(ParseError::DuplicateVertex { line: 0, name: v.clone() }.into());
            }
        }
        let mut q = Quiver { vertices, arrows: Vec::new() };
        let mut names = BTreeSet::new();
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(ParseError::DuplicateArrow { line: 0, name }.into());
            }
            let source = *vindex
                .get(&s)
                .ok_or(ParseError::UnknownVertex { line: 0, name: s.clone() })?;
            let target = *vindex
                .get(&t)
                .ok_or(ParseError::UnknownVertex { line: 0, name: t.clone() })?;
            q.arrows.push(Arrow { name, source, target });
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a].target
    }

    /// Arrows with the given source, in declaration order.
    pub fn out_arrows(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == v).collect()
    }

    /// Arrows with the given target, in declaration order.
    pub fn in_arrows(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == v).collect()
    }
}

/// Parse result of the algebra DSL before any gentleness validation.
///
/// Relations of any length >= 2 are kept so that `validate_gentle` can
/// report (G4) violations instead of refusing to read the file.
#[derive(Debug, Clone)]
pub struct BoundQuiverSpec {
    pub quiver: Quiver,
    /// Each relation is a composable path, stored as arrow ids left to right.
    pub relations: Vec<Vec<ArrowId>>,
}

/// Check the gentle axioms (G1)-(G4) plus finite-dimensionality.
///
/// Returns the list of violations; empty means the bound quiver presents a
/// gentle algebra. Loops count once as outgoing and once as incoming.
pub fn validate_gentle(spec: &BoundQuiverSpec) -> Vec<AxiomViolation> {
    let q = &spec.quiver;
    let mut out = Vec::new();

    for v in 0..q.vertex_count() {
        let outs = q.out_arrows(v);
        if outs.len() > 2 {
            out.push(AxiomViolation {
                axiom: "G1",
                witness: format!(
                    "vertex {} is the source of {} arrows ({})",
                    q.vertex_name(v),
                    outs.len(),
                    outs.iter().map(|&a| q.arrow(a).name.clone()).collect::<Vec<_>>().join(", ")
                ),
            });
        }
        let ins = q.in_arrows(v);
        if ins.len() > 2 {
            out.push(AxiomViolation {
                axiom: "G1",
                witness: format!(
                    "vertex {} is the target of {} arrows ({})",
                    q.vertex_name(v),
                    ins.len(),
                    ins.iter().map(|&a| q.arrow(a).name.clone()).collect::<Vec<_>>().join(", ")
                ),
            });
        }
    }

    for rel in &spec.relations {
        if rel.len() != 2 {
            out.push(AxiomViolation {
                axiom: "G4",
                witness: format!(
                    "relation {} has length {}",
                    rel.iter().map(|&a| q.arrow(a).name.clone()).collect::<Vec<_>>().join(""),
                    rel.len()
                ),
            });
        }
    }

    // (G2)/(G3) only make sense against the set of length-2 relations.
    let rels: BTreeSet<(ArrowId, ArrowId)> = spec
        .relations
        .iter()
        .filter(|r| r.len() == 2)
        .map(|r| (r[0], r[1]))
        .collect();
    let in_ideal = |a: ArrowId, b: ArrowId| rels.contains(&(a, b));

    for a in 0..q.arrow_count() {
        let succ: Vec<ArrowId> = q.out_arrows(q.target(a));
        let free: Vec<&str> = succ
            .iter()
            .filter(|&&b| !in_ideal(a, b))
            .map(|&b| q.arrow(b).name.as_str())
            .collect();
        if free.len() > 1 {
            out.push(AxiomViolation {
                axiom: "G2",
                witness: format!("arrow {} composes with both {}", q.arrow(a).name, free.join(" and ")),
            });
        }
        let bound: Vec<&str> = succ
            .iter()
            .filter(|&&b| in_ideal(a, b))
            .map(|&b| q.arrow(b).name.as_str())
            .collect();
        if bound.len() > 1 {
            out.push(AxiomViolation {
                axiom: "G3",
                witness: format!("arrow {} has relations with both {}", q.arrow(a).name, bound.join(" and ")),
            });
        }
        let pred: Vec<ArrowId> = q.in_arrows(q.source(a));
        let free: Vec<&str> = pred
            .iter()
            .filter(|&&c| !in_ideal(c, a))
            .map(|&c| q.arrow(c).name.as_str())
            .collect();
        if free.len() > 1 {
            out.push(AxiomViolation {
                axiom: "G2",
                witness: format!("both {} compose with arrow {}", free.join(" and "), q.arrow(a).name),
            });
        }
        let bound: Vec<&str> = pred
            .iter()
            .filter(|&&c| in_ideal(c, a))
            .map(|&c| q.arrow(c).name.as_str())
            .collect();
        if bound.len() > 1 {
            out.push(AxiomViolation {
                axiom: "G3",
                witness: format!("both {} have relations with arrow {}", bound.join(" and "), q.arrow(a).name),
            });
        }
    }

    // Finite-dimensionality: no directed cycle of arrows avoiding the ideal.
    // Walk the composition graph arrow -> arrow.
    if out.is_empty() {
        let n = q.arrow_count();
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        fn dfs(
            a: ArrowId,
            q: &Quiver,
            rels: &BTreeSet<(ArrowId, ArrowId)>,
            state: &mut [u8],
        ) -> Option<ArrowId> {
            state[a] = 1;
            for b in q.out_arrows(q.target(a)) {
                if rels.contains(&(a, b)) {
                    continue;
                }
                match state[b] {
                    0 => {
                        if let Some(w) = dfs(b, q, rels, state) {
                            return Some(w);
                        }
                    }
                    1 => return Some(b),
                    _ => {}
                }
            }
            state[a] = 2;
            None
        }
        for a in 0..n {
            if state[a] == 0 {
                if let Some(w) = dfs(a, q, &rels, &mut state) {
                    out.push(AxiomViolation {
                        axiom: "FIN",
                        witness: format!(
                            "unbounded direct paths through arrow {} (algebra is infinite-dimensional)",
                            q.arrow(w).name
                        ),
                    });
                    break;
                }
            }
        }
    }

    out
}

/// A gentle algebra: bound quiver + sign functions sigma, epsilon.
///
/// Extended host algebras produced by the multiplication theorem reuse this
/// type with `gentle == false`; only sign-free operations (diagrams,
/// F-polynomials) are meaningful for those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentleAlgebra {
    quiver: Quiver,
    relations: BTreeSet<(ArrowId, ArrowId)>,
    sigma: Vec<i8>,
    epsilon: Vec<i8>,
    /// Set when the algebra was produced from a polygon triangulation.
    pub from_triangulation: bool,
    /// False for extended host algebras that fail the gentle axioms.
    pub gentle: bool,
}

impl GentleAlgebra {
    /// Build from a raw bound quiver, checking the gentle axioms and
    /// constructing sign functions.
    pub fn new(spec: BoundQuiverSpec) -> Result<Self, Error> {
        let report = validate_gentle(&spec);
        if !report.is_empty() {
            return Err(DomainError::NotGentle(report).into());
        }
        let relations: BTreeSet<(ArrowId, ArrowId)> =
            spec.relations.iter().map(|r| (r[0], r[1])).collect();
        let (sigma, epsilon) = compute_signs_for(&spec.quiver, &relations)?;
        Ok(GentleAlgebra {
            quiver: spec.quiver,
            relations,
            sigma,
            epsilon,
            from_triangulation: false,
            gentle: true,
        })
    }

    /// Copy of the algebra with extra arrows and unchanged relations; the
    /// result may fail the gentle axioms, in which case only diagram-level
    /// computations are valid over it.
    pub fn extend(&self, added: &[(String, VertexId, VertexId)]) -> GentleAlgebra {
        let mut quiver = self.quiver.clone();
        for (name, s, t) in added {
            assert!(quiver.arrow_id(name).is_none(), "added arrow name clash");
            quiver.arrows.push(Arrow { name: name.clone(), source: *s, target: *t });
        }
        let spec = BoundQuiverSpec {
            quiver: quiver.clone(),
            relations: self.relations.iter().map(|&(a, b)| vec![a, b]).collect(),
        };
        let report = validate_gentle(&spec);
        let gentle = report.is_empty();
        let (sigma, epsilon) = if gentle {
            compute_signs_for(&quiver, &self.relations).expect("gentle extension has signs")
        } else {
            (vec![1; quiver.arrow_count()], vec![1; quiver.arrow_count()])
        };
        GentleAlgebra {
            quiver,
            relations: self.relations.clone(),
            sigma,
            epsilon,
            from_triangulation: false,
            gentle,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn relations(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.relations
    }

    /// Path `a` then `b` lies in the ideal.
    pub fn in_ideal(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.contains(&(a, b))
    }

    pub fn sigma(&self, a: ArrowId) -> i8 {
        self.sigma[a]
    }

    pub fn epsilon(&self, a: ArrowId) -> i8 {
        self.epsilon[a]
    }

    /// The unique arrow `b` with `ab` composable and not in the ideal.
    pub fn comp_next(&self, a: ArrowId) -> Option<ArrowId> {
        self.quiver
            .out_arrows(self.quiver.target(a))
            .into_iter()
            .find(|&b| !self.in_ideal(a, b))
    }

    /// The unique arrow `c` with `ca` composable and not in the ideal.
    pub fn comp_prev(&self, a: ArrowId) -> Option<ArrowId> {
        self.quiver
            .in_arrows(self.quiver.source(a))
            .into_iter()
            .find(|&c| !self.in_ideal(c, a))
    }

    /// The exchange matrix B(Q): `b_ij = #{arrows j -> i} - #{arrows i -> j}`.
    /// Loops contribute nothing.
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let n = self.vertex_count();
        let mut b = vec![vec![0i64; n]; n];
        for a in self.quiver.arrows() {
            if a.source == a.target {
                continue;
            }
            // arrow j -> i adds to b_ij
            b[a.target][a.source] += 1;
            b[a.source][a.target] -= 1;
        }
        ExchangeMatrix { entries: b }
    }

    /// Serialize back to DSL text.
    pub fn to_dsl(&self) -> String {
        let mut s = String::new();
        s.push_str("vertices");
        for v in self.quiver.vertex_names() {
            s.push(' ');
            s.push_str(v);
        }
        s.push('\n');
        for a in self.quiver.arrows() {
            s.push_str(&format!(
                "arrow {} {} {}\n",
                a.name,
                self.quiver.vertex_name(a.source),
                self.quiver.vertex_name(a.target)
            ));
        }
        for &(a, b) in &self.relations {
            s.push_str(&format!(
                "relation {} {}\n",
                self.quiver.arrow(a).name,
                self.quiver.arrow(b).name
            ));
        }
        s
    }
}

/// Skew-symmetric exchange matrix of a quiver, in vertex declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == -self.entries[j][i]))
    }

    /// Matrix-vector product over the integers.
    pub fn mul_vec(&self, e: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(e).map(|(&b, &x)| b * x).sum())
            .collect()
    }

    /// The j-th column.
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries.iter().map(|row| row[j]).collect()
    }
}

/// Union-find with parity for the two-coloring of sign variables.
struct Parity {
    parent: Vec<usize>,
    // parity relative to parent
    rel: Vec<i8>,
}

impl Parity {
    fn new(n: usize) -> Self {
        Parity { parent: (0..n).collect(), rel: vec![1; n] }
    }

    fn find(&mut self, x: usize) -> (usize, i8) {
        if self.parent[x] == x {
            return (x, 1);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.rel[x] *= p;
        (root, self.rel[x])
    }

    /// Enforce sign(x) = rel * sign(y). Returns false on contradiction.
    fn union(&mut self, x: usize, y: usize, rel: i8) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px == rel * py;
        }
        // sign(rx) = px^-1 * rel * py * sign(ry); parities are +/-1
        self.parent[rx] = ry;
        self.rel[rx] = px * rel * py;
        true
    }
}

/// Construct sign functions sigma, epsilon: Q1 -> {-1, +1} satisfying
///
/// * distinct arrows with a common source have opposite sigma,
/// * distinct arrows with a common target have opposite epsilon,
/// * `sigma(b) = -epsilon(a)` whenever `ab` is a composable path outside
///   the ideal, so that concatenation of strings is governed by the sign
///   rule `sigma(w) = -epsilon(v)`.
///
/// Free components are seeded deterministically: vertices in declaration
/// order, first outgoing arrow gets sigma = +1, first incoming gets
/// epsilon = +1.
pub fn compute_signs(algebra: &GentleAlgebra) -> (Vec<i8>, Vec<i8>) {
    (algebra.sigma.clone(), algebra.epsilon.clone())
}

fn compute_signs_for(
    quiver: &Quiver,
    relations: &BTreeSet<(ArrowId, ArrowId)>,
) -> Result<(Vec<i8>, Vec<i8>), Error> {
    let n = quiver.arrow_count();
    // variable 2a = sigma(a), 2a+1 = epsilon(a)
    let mut uf = Parity::new(2 * n);
    let fail = |msg: String| -> Error { DomainError::SignInconsistency(msg).into() };

    for v in 0..quiver.vertex_count() {
        let outs = quiver.out_arrows(v);
        for w in outs.windows(2) {
            if !uf.union(2 * w[0], 2 * w[1], -1) {
                return Err(fail(format!(
                    "sigma conflict at common source {}",
                    quiver.vertex_name(v)
                )));
            }
        }
        let ins = quiver.in_arrows(v);
        for w in ins.windows(2) {
            if !uf.union(2 * w[0] + 1, 2 * w[1] + 1, -1) {
                return Err(fail(format!(
                    "epsilon conflict at common target {}",
                    quiver.vertex_name(v)
                )));
            }
        }
    }
    for a in 0..n {
        for b in quiver.out_arrows(quiver.target(a)) {
            if !relations.contains(&(a, b)) {
                // sigma(b) = -epsilon(a)
                if !uf.union(2 * b, 2 * a + 1, -1) {
                    return Err(fail(format!(
                        "composition conflict on path {}{}",
                        quiver.arrow(a).name,
                        quiver.arrow(b).name
                    )));
                }
            }
        }
    }

    // Deterministic seeding.
    let mut value: Vec<Option<i8>> = vec![None; 2 * n];
    let mut assigned: BTreeMap<usize, i8> = BTreeMap::new();
    let resolve = |uf: &mut Parity, var: usize, want: i8, assigned: &mut BTreeMap<usize, i8>| {
        let (root, parity) = uf.find(var);
        assigned.entry(root).or_insert(want * parity);
    };
    for v in 0..quiver.vertex_count() {
        if let Some(&first_out) = quiver.out_arrows(v).first() {
            resolve(&mut uf, 2 * first_out, 1, &mut assigned);
        }
        if let Some(&first_in) = quiver.in_arrows(v).first() {
            resolve(&mut uf, 2 * first_in + 1, 1, &mut assigned);
        }
    }
    for var in 0..2 * n {
        resolve(&mut uf, var, 1, &mut assigned);
    }
    for var in 0..2 * n {
        let (root, parity) = uf.find(var);
        value[var] = Some(assigned[&root] * parity);
    }

    let sigma: Vec<i8> = (0..n).map(|a| value[2 * a].unwrap()).collect();
    let epsilon: Vec<i8> = (0..n).map(|a| value[2 * a + 1].unwrap()).collect();
    Ok((sigma, epsilon))
}

/// Parse the line-oriented algebra DSL into a raw bound quiver.
///
/// Grammar (UTF-8, `#` comments):
/// ```text
/// vertices <id> <id> ...
/// arrow <name> <source> <target>
/// relation <name> <name> ...
/// ```
pub fn parse_bound_quiver(text: &str) -> Result<BoundQuiverSpec, Error> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut raw_relations: Vec<(usize, Vec<String>)> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let stripped = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let toks: Vec<&str> = stripped.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match toks[0] {
            "vertices" => {
                for t in &toks[1..] {
                    vertices.push((*t).to_string());
                }
            }
            "arrow" => {
                if toks.len() != 4 {
                    return Err(ParseError::Syntax {
                        line,
                        col: 1,
                        msg: "expected `arrow <name> <source> <target>`".into(),
                    }
                    .into());
                }
                arrows.push((toks[1].to_string(), toks[2].to_string(), toks[3].to_string()));
            }
            "relation" => {
                if toks.len() < 3 {
                    return Err(ParseError::Syntax {
                        line,
                        col: 1,
                        msg: "expected `relation <name> <name> ...`".into(),
                    }
                    .into());
                }
                raw_relations.push((line, toks[1..].iter().map(|t| t.to_string()).collect()));
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    col: 1,
                    msg: format!("unknown directive `{other}`"),
                }
                .into());
            }
        }
    }

    // Report duplicates with line info before Quiver::new would.
    {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(ParseError::DuplicateVertex { line: 0, name: v.clone() }.into());
            }
        }
        let mut seen = BTreeSet::new();
        for (name, _, _) in &arrows {
            if !seen.insert(name.clone()) {
                return Err(ParseError::DuplicateArrow { line: 0, name: name.clone() }.into());
            }
        }
    }

    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (line, names) in raw_relations {
        let mut rel = Vec::new();
        for name in &names {
            let a = quiver
                .arrow_id(name)
                .ok_or(ParseError::UnknownArrow { line, name: name.clone() })?;
            rel.push(a);
        }
        for w in rel.windows(2) {
            if quiver.target(w[0]) != quiver.source(w[1]) {
                return Err(ParseError::NonComposableRelation { line, path: names.join("") }.into());
            }
        }
        relations.push(rel);
    }
    Ok(BoundQuiverSpec { quiver, relations })
}

/// Parse the DSL and build the gentle algebra (validation + signs).
pub fn parse_algebra(text: &str) -> Result<GentleAlgebra, Error> {
    GentleAlgebra::new(parse_bound_quiver(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_gent_a_exs_i() {
        let a = fixtures::algebra_i();
        assert_eq!(a.vertex_count(), 3);
        assert_eq!(a.quiver().arrow_count(), 3);
        assert_eq!(a.relations().len(), 1);
        let ab = (a.quiver().arrow_id("a").unwrap(), a.quiver().arrow_id("b").unwrap());
        assert!(a.relations().contains(&ab));
    }

    #[test]
    fn parse_trivial_algebra() {
        let a = parse_algebra("vertices p\n").unwrap();
        assert_eq!(a.vertex_count(), 1);
        assert_eq!(a.quiver().arrow_count(), 0);
    }

    #[test]
    fn non_composable_relation_rejected() {
        // t(b) = 1 but s(a) = 3, so `relation b a` is not a path.
        let err = parse_algebra(
            "vertices 1 2 3\narrow b 2 1\narrow a 3 2\nrelation b a\n",
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parse(ParseError::NonComposableRelation { .. })));
    }

    #[test]
    fn octagon_is_gentle() {
        let spec = parse_bound_quiver(fixtures::OCTAGON_DSL).unwrap();
        assert!(validate_gentle(&spec).is_empty());
    }

    #[test]
    fn long_relation_violates_g4() {
        let spec = parse_bound_quiver(
            "vertices 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\nrelation a b c\n",
        )
        .unwrap();
        let report = validate_gentle(&spec);
        assert!(report.iter().any(|v| v.axiom == "G4"));
    }

    #[test]
    fn three_arrows_out_violates_g1() {
        let spec = parse_bound_quiver(
            "vertices 0 1 2 3\narrow a 0 1\narrow b 0 2\narrow c 0 3\n",
        )
        .unwrap();
        let report = validate_gentle(&spec);
        assert!(report.iter().any(|v| v.axiom == "G1"));
    }

    #[test]
    fn unbounded_cycle_detected() {
        // 3-cycle with no relations is infinite-dimensional.
        let spec = parse_bound_quiver(
            "vertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\n",
        )
        .unwrap();
        let report = validate_gentle(&spec);
        assert!(report.iter().any(|v| v.axiom == "FIN"));
    }

    #[test]
    fn sign_conditions_hold() {
        for alg in [fixtures::algebra_i(), fixtures::octagon(), fixtures::band_algebra()] {
            let q = alg.quiver();
            for v in 0..q.vertex_count() {
                let outs = q.out_arrows(v);
                if outs.len() == 2 {
                    assert_eq!(alg.sigma(outs[0]), -alg.sigma(outs[1]));
                }
                let ins = q.in_arrows(v);
                if ins.len() == 2 {
                    assert_eq!(alg.epsilon(ins[0]), -alg.epsilon(ins[1]));
                }
            }
            for a in 0..q.arrow_count() {
                for b in q.out_arrows(q.target(a)) {
                    if !alg.in_ideal(a, b) {
                        assert_eq!(alg.sigma(b), -alg.epsilon(a), "composable pair must connect");
                    }
                }
            }
        }
    }

    #[test]
    fn single_arrow_signs_are_positive() {
        let a = parse_algebra("vertices 1 2\narrow a 1 2\n").unwrap();
        let id = a.quiver().arrow_id("a").unwrap();
        assert_eq!(a.sigma(id), 1);
        assert_eq!(a.epsilon(id), 1);
    }

    #[test]
    fn signs_fail_on_non_gentle_string_misuse() {
        // Two composable continuations of `a` violate (G2); the constraint
        // system for the signs is then unsatisfiable.
        let spec = parse_bound_quiver(
            "vertices 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 2 4\n",
        )
        .unwrap();
        let rels: BTreeSet<(ArrowId, ArrowId)> = BTreeSet::new();
        let r = super::compute_signs_for(&spec.quiver, &rels);
        assert!(r.is_err());
    }

    #[test]
    fn exchange_matrix_examples() {
        let a = fixtures::algebra_i();
        let b = a.exchange_matrix();
        assert_eq!(b.entries, vec![vec![0, 1, 1], vec![-1, 0, 1], vec![-1, -1, 0]]);
        assert!(b.is_skew_symmetric());

        let oct = fixtures::octagon();
        let b = oct.exchange_matrix();
        assert!(b.is_skew_symmetric());
        // c: 3 -> 1 gives b_13 = 1; a: 1 -> 2 gives b_21 = 1.
        assert_eq!(b.entries[0][2], 1);
        assert_eq!(b.entries[1][0], 1);
    }

    #[test]
    fn loop_only_quiver_has_zero_exchange_matrix() {
        let a = parse_algebra("vertices 1\narrow e 1 1\nrelation e e\n").unwrap();
        assert_eq!(a.exchange_matrix().entries, vec![vec![0]]);
    }

    #[test]
    fn dsl_round_trip() {
        for alg in [fixtures::algebra_i(), fixtures::octagon(), fixtures::band_algebra()] {
            let text = alg.to_dsl();
            let again = parse_algebra(&text).unwrap();
            assert_eq!(alg.quiver(), again.quiver());
            assert_eq!(alg.relations(), again.relations());
        }
    }
}
