//! Polygon triangulations, their gentle algebras, arc modules, elementary
//! laminations, the cut-reflect-reglue involution, twisted duals, and the
//! type-B variable formulas.

use crate::algebra::{parse_bound_quiver, GentleAlgebra};
use crate::error::{DomainError, Error};
use crate::invariants::{cluster_character, f_polynomial, g_vector};
use crate::modules::{Module, ModuleSum};
use crate::multiplication::multiplication_data;
use crate::poly::{LaurentCC, YPolynomial};
use crate::strings::{Letter, StringWord};

/// Regular polygon with vertices 0..m-1 counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Polygon {
    pub m: usize,
}

impl Polygon {
    pub fn new(m: usize) -> Result<Self, Error> {
        if m < 4 {
            return Err(DomainError::InvalidTriangulation("polygon needs at least 4 vertices".into()).into());
        }
        Ok(Polygon { m })
    }
}

/// Unordered pair of non-adjacent polygon vertices, stored with a < b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    pub a: usize,
    pub b: usize,
}

impl Diagonal {
    pub fn new(p: Polygon, a: usize, b: usize) -> Result<Self, Error> {
        let (a, b) = (a % p.m, b % p.m);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if a == b || (b - a) == 1 || (a == 0 && b == p.m - 1) {
            return Err(DomainError::InvalidTriangulation(format!(
                "({a},{b}) is not a diagonal of the {}-gon",
                p.m
            ))
            .into());
        }
        Ok(Diagonal { a, b })
    }

    pub fn is_diameter(&self, p: Polygon) -> bool {
        2 * (self.b - self.a) == p.m
    }
}

/// x lies in the cyclic interval [lo, hi) of Z/m.
fn in_cyclic(m: usize, x: usize, lo: usize, hi: usize) -> bool {
    let span = (hi + m - lo) % m;
    let off = (x + m - lo) % m;
    off < span
}

/// Strict interior crossing of diagonals; shared endpoints never cross.
pub fn crossing(m: usize, d1: Diagonal, d2: Diagonal) -> bool {
    if d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b {
        return false;
    }
    let inside = |x: usize| in_cyclic(m, x, d1.a + 1, d1.b);
    inside(d2.a) != inside(d2.b)
}

/// An ordered maximal collection of pairwise non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub polygon: Polygon,
    pub diagonals: Vec<Diagonal>,
}

impl Triangulation {
    pub fn new(polygon: Polygon, diagonals: Vec<Diagonal>) -> Result<Self, Error> {
        for (i, d) in diagonals.iter().enumerate() {
            for e in &diagonals[i + 1..] {
                if d == e {
                    return Err(DomainError::InvalidTriangulation(format!(
                        "duplicate diagonal ({},{})",
                        d.a, d.b
                    ))
                    .into());
                }
                if crossing(polygon.m, *d, *e) {
                    return Err(DomainError::InvalidTriangulation(format!(
                        "diagonals ({},{}) and ({},{}) cross",
                        d.a, d.b, e.a, e.b
                    ))
                    .into());
                }
            }
        }
        if diagonals.len() != polygon.m - 3 {
            return Err(DomainError::InvalidTriangulation(format!(
                "expected {} diagonals, got {}",
                polygon.m - 3,
                diagonals.len()
            ))
            .into());
        }
        Ok(Triangulation { polygon, diagonals })
    }

    pub fn index_of(&self, d: Diagonal) -> Option<usize> {
        self.diagonals.iter().position(|x| *x == d)
    }

    /// Edge test: boundary edge or diagonal of the triangulation.
    fn is_edge(&self, u: usize, v: usize) -> bool {
        let m = self.polygon.m;
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        if v - u == 1 || (u == 0 && v == m - 1) {
            return true;
        }
        self.diagonals.contains(&Diagonal { a: u, b: v })
    }

    /// The triangles, as ccw vertex triples p < q < r.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let m = self.polygon.m;
        let mut out = Vec::new();
        for p in 0..m {
            for q in p + 1..m {
                if !self.is_edge(p, q) {
                    continue;
                }
                for r in q + 1..m {
                    if self.is_edge(q, r) && self.is_edge(p, r) {
                        out.push((p, q, r));
                    }
                }
            }
        }
        out
    }
}

/// The gentle algebra of a triangulation: one quiver vertex per diagonal,
/// an arrow between ccw-consecutive diagonal sides of each triangle, and
/// full relations on the internal 3-cycles.
pub fn triangulation_algebra(t: &Triangulation) -> Result<GentleAlgebra, Error> {
    let k = t.diagonals.len();
    let mut text = String::from("vertices");
    for i in 1..=k {
        text.push_str(&format!(" {i}"));
    }
    text.push('\n');
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    for (p, q, r) in t.triangles() {
        let sides = [(p, q), (q, r), (p, r)];
        let idx: Vec<Option<usize>> = sides
            .iter()
            .map(|&(u, v)| t.index_of(Diagonal { a: u, b: v }))
            .collect();
        // ccw order of the sides is (p,q), (q,r), (r,p)
        for s in 0..3 {
            let nxt = (s + 1) % 3;
            if let (Some(i), Some(j)) = (idx[s], idx[nxt]) {
                arrows.push((i, j));
            }
        }
    }
    for &(i, j) in &arrows {
        text.push_str(&format!("arrow a{}_{} {} {}\n", i + 1, j + 1, i + 1, j + 1));
    }
    // relations: paths i -> j -> k with an arrow k -> i
    for &(i, j) in &arrows {
        for &(j2, k2) in &arrows {
            if j2 == j && arrows.contains(&(k2, i)) {
                text.push_str(&format!("relation a{}_{} a{}_{}\n", i + 1, j + 1, j2 + 1, k2 + 1));
            }
        }
    }
    let mut alg = GentleAlgebra::new(parse_bound_quiver(&text)?)?;
    alg.from_triangulation = true;
    Ok(alg)
}

/// Crossings of a diagonal with the triangulation, ordered along the arc.
fn ordered_crossings(t: &Triangulation, gamma: Diagonal) -> Vec<usize> {
    let m = t.polygon.m;
    let mut crossed: Vec<(usize, usize)> = Vec::new();
    for (i, d) in t.diagonals.iter().enumerate() {
        if crossing(m, gamma, *d) {
            // endpoint of d on the ccw side (gamma.a, gamma.b)
            let c = if in_cyclic(m, d.a, gamma.a + 1, gamma.b) { d.a } else { d.b };
            let dprime = if c == d.a { d.b } else { d.a };
            // the region cut off around gamma.a is the cyclic interval
            // (dprime, c); nested regions order the crossings along gamma
            let key = (c + m - dprime) % m;
            crossed.push((key, i));
        }
    }
    crossed.sort();
    crossed.into_iter().map(|(_, i)| i).collect()
}

/// The string module of an arc: a basis element per crossing with the
/// triangulation. Zero for diagonals of the triangulation.
pub fn arc_module(
    alg: &GentleAlgebra,
    t: &Triangulation,
    gamma: Diagonal,
) -> Result<ModuleSum, Error> {
    if t.index_of(gamma).is_some() {
        return Ok(ModuleSum::zero());
    }
    let crossings = ordered_crossings(t, gamma);
    if crossings.is_empty() {
        return Ok(ModuleSum::zero());
    }
    if crossings.len() == 1 {
        return Ok(ModuleSum::from_module(Module::simple(crossings[0])));
    }
    let mut letters = Vec::new();
    for w in crossings.windows(2) {
        let (i, j) = (w[0], w[1]);
        // find the arrow between diagonals i and j (either direction)
        let mut found = None;
        for a in 0..alg.quiver().arrow_count() {
            let (s, t2) = (alg.quiver().source(a), alg.quiver().target(a));
            if (s, t2) == (i, j) {
                found = Some(Letter::direct(a));
                break;
            }
            if (s, t2) == (j, i) {
                found = Some(Letter::inverse(a));
                break;
            }
        }
        let Some(l) = found else {
            return Err(DomainError::Other(format!(
                "consecutive crossings {} and {} share no arrow",
                i + 1,
                j + 1
            ))
            .into());
        };
        letters.push(l);
    }
    Ok(ModuleSum::from_module(Module::string(alg, &StringWord::Word(letters))?))
}

/// The cluster variable attached to an arc: x_i for a diagonal of the
/// triangulation, 1 for boundary-degenerate input, CC of the arc module
/// otherwise.
pub fn arc_variable(
    alg: &GentleAlgebra,
    t: &Triangulation,
    gamma: Diagonal,
) -> Result<LaurentCC, Error> {
    if let Some(i) = t.index_of(gamma) {
        let n = alg.vertex_count();
        let mut x = vec![0i64; n];
        x[i] = 1;
        return Ok(LaurentCC::monomial(x, vec![0; n], 1));
    }
    Ok(cluster_character(alg, &arc_module(alg, t, gamma)?))
}

/// The elementary lamination of `base` crosses `gamma`: the endpoints of
/// base are pushed one step clockwise, so gamma must separate the shifted
/// endpoints.
pub fn lamination_crosses(m: usize, base: Diagonal, gamma: Diagonal) -> bool {
    // shifted endpoints sit in the open arcs (base.a - 1, base.a) and
    // (base.b - 1, base.b); integers in the ccw arc from a' to b' are
    // {base.a, ..., base.b - 1}
    let inside = |x: usize| in_cyclic(m, x, base.a, base.b);
    inside(gamma.a) != inside(gamma.b)
}

/// d-vector of a pair of diagonals: coordinate i is 1 when the elementary
/// lamination of tau_i crosses both.
pub fn lamination_dvector(t: &Triangulation, g1: Diagonal, g2: Diagonal) -> Vec<u32> {
    t.diagonals
        .iter()
        .map(|&d| {
            u32::from(
                lamination_crosses(t.polygon.m, d, g1) && lamination_crosses(t.polygon.m, d, g2),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// The even polygon with a diameter: theta, rho, F_d, restriction

/// Geometry of the 2n+2-gon with a fixed oriented diameter.
#[derive(Debug, Clone, Copy)]
pub struct DiameterGeometry {
    pub m: usize,
    /// oriented from d0 to d1 = d0 + m/2
    pub d0: usize,
}

impl DiameterGeometry {
    pub fn new(m: usize, d: Diagonal, from_low: bool) -> Result<Self, Error> {
        if m % 2 != 0 || 2 * (d.b - d.a) != m {
            return Err(DomainError::Other(format!("({},{}) is not a diameter", d.a, d.b)).into());
        }
        Ok(DiameterGeometry { m, d0: if from_low { d.a } else { d.b } })
    }

    pub fn d1(&self) -> usize {
        (self.d0 + self.m / 2) % self.m
    }

    pub fn diameter(&self) -> Diagonal {
        let (a, b) = (self.d0.min(self.d1()), self.d0.max(self.d1()));
        Diagonal { a, b }
    }

    /// Half-turn of the polygon.
    pub fn theta(&self, v: usize) -> usize {
        (v + self.m / 2) % self.m
    }

    pub fn theta_diag(&self, d: Diagonal) -> Diagonal {
        normalize(self.m, self.theta(d.a), self.theta(d.b))
    }

    /// Reflection along the diameter.
    pub fn rho(&self, v: usize) -> usize {
        (2 * self.d0 + self.m - v % self.m) % self.m
    }

    pub fn rho_diag(&self, d: Diagonal) -> Diagonal {
        normalize(self.m, self.rho(d.a), self.rho(d.b))
    }

    /// Reflection across the perpendicular bisector of the diameter.
    fn mirror(&self, v: usize) -> usize {
        (self.d0 + self.d1() + self.m - v % self.m) % self.m
    }

    /// Strictly left of the oriented diameter: the ccw arc (d0, d1).
    pub fn left(&self, v: usize) -> bool {
        in_cyclic(self.m, v, self.d0 + 1, self.d1())
    }

    /// Strictly right: the ccw arc (d1, d0).
    pub fn right(&self, v: usize) -> bool {
        in_cyclic(self.m, v, self.d1() + 1, self.d0)
    }

    /// Cut along the diameter, reflect the right half, reglue.
    pub fn fd(&self, d: Diagonal) -> Diagonal {
        let on_d = |v: usize| v == self.d0 || v == self.d1();
        let all_left = (self.left(d.a) || on_d(d.a)) && (self.left(d.b) || on_d(d.b));
        let all_right = (self.right(d.a) || on_d(d.a)) && (self.right(d.b) || on_d(d.b));
        if all_left {
            d
        } else if all_right {
            normalize(self.m, self.mirror(d.a), self.mirror(d.b))
        } else {
            // crosses the diameter: reflect the right endpoint
            let (l, r) = if self.left(d.a) { (d.a, d.b) } else { (d.b, d.a) };
            normalize(self.m, l, self.mirror(r))
        }
    }
}

fn normalize(m: usize, a: usize, b: usize) -> Diagonal {
    let (a, b) = (a % m, b % m);
    if a <= b {
        Diagonal { a, b }
    } else {
        Diagonal { a: b, b: a }
    }
}

/// Everything needed to evaluate type-B variables over a theta-invariant
/// triangulation.
pub struct TypeBContext {
    pub geometry: DiameterGeometry,
    pub n: usize,
    /// The theta-invariant triangulation T.
    pub t: Triangulation,
    /// The rho-invariant triangulation T' = F_d(T), ordered with the
    /// diameter at index n.
    pub tprime: Triangulation,
    pub aprime: GentleAlgebra,
    /// Full subalgebra on vertices 1..n: the restricted algebra.
    pub abar: GentleAlgebra,
    /// Vertex involution induced by rho on diagonal indices (0-based).
    pub sigma_v: Vec<usize>,
    /// Arrow involution (0-based arrow ids of aprime).
    pub sigma_a: Vec<usize>,
}

impl TypeBContext {
    pub fn new(t: Triangulation, orient_from_low: bool) -> Result<Self, Error> {
        let m = t.polygon.m;
        if m % 2 != 0 || m < 6 {
            return Err(DomainError::InvalidTriangulation(
                "type-B setup needs an even polygon with at least 6 vertices".into(),
            )
            .into());
        }
        let n = m / 2 - 1;
        let diameters: Vec<Diagonal> = t
            .diagonals
            .iter()
            .copied()
            .filter(|d| d.is_diameter(t.polygon))
            .collect();
        if diameters.len() != 1 {
            return Err(DomainError::InvalidTriangulation(
                "triangulation must contain exactly one diameter".into(),
            )
            .into());
        }
        let geometry = DiameterGeometry::new(m, diameters[0], orient_from_low)?;
        // theta-invariance
        for d in &t.diagonals {
            if t.index_of(geometry.theta_diag(*d)).is_none() {
                return Err(DomainError::InvalidTriangulation(format!(
                    "triangulation is not invariant under the half-turn: image of ({},{}) missing",
                    d.a, d.b
                ))
                .into());
            }
        }
        // T' = F_d(T), ordered: left diagonals, then d, then the rest
        let images: Vec<Diagonal> = t.diagonals.iter().map(|&d| geometry.fd(d)).collect();
        let mut left: Vec<Diagonal> = Vec::new();
        let mut right: Vec<Diagonal> = Vec::new();
        for &d in &images {
            if d == geometry.diameter() {
                continue;
            }
            let fully_left = (geometry.left(d.a) || d.a == geometry.d0 || d.a == geometry.d1())
                && (geometry.left(d.b) || d.b == geometry.d0 || d.b == geometry.d1());
            if fully_left {
                left.push(d);
            } else {
                right.push(d);
            }
        }
        if left.len() != n - 1 {
            return Err(DomainError::InvalidTriangulation(format!(
                "expected {} diagonals left of the diameter, found {}",
                n - 1,
                left.len()
            ))
            .into());
        }
        let mut ordered = left;
        ordered.push(geometry.diameter());
        ordered.extend(right);
        let tprime = Triangulation::new(t.polygon, ordered)?;
        let aprime = triangulation_algebra(&tprime)?;
        // sigma on vertices: index of the rho-image
        let mut sigma_v = Vec::with_capacity(2 * n - 1);
        for d in &tprime.diagonals {
            let img = geometry.rho_diag(*d);
            let idx = tprime.index_of(img).ok_or_else(|| -> Error {
                DomainError::InvalidTriangulation(
                    "F_d image triangulation is not rho-invariant".into(),
                )
                .into()
            })?;
            sigma_v.push(idx);
        }
        // sigma on arrows: x: i -> j maps to the arrow sigma(j) -> sigma(i)
        let q = aprime.quiver();
        let mut sigma_a = Vec::with_capacity(q.arrow_count());
        for a in 0..q.arrow_count() {
            let (s, t2) = (q.source(a), q.target(a));
            let (ns, nt) = (sigma_v[t2], sigma_v[s]);
            let img = (0..q.arrow_count())
                .find(|&b| q.source(b) == ns && q.target(b) == nt)
                .ok_or_else(|| -> Error {
                    DomainError::InvalidTriangulation("quiver is not symmetric".into()).into()
                })?;
            sigma_a.push(img);
        }
        // restricted algebra: full subquiver on vertices 1..n
        let mut text = String::from("vertices");
        for i in 1..=n {
            text.push_str(&format!(" {i}"));
        }
        text.push('\n');
        for a in 0..q.arrow_count() {
            let (s, t2) = (q.source(a), q.target(a));
            if s < n && t2 < n {
                text.push_str(&format!(
                    "arrow {} {} {}\n",
                    q.arrow(a).name,
                    s + 1,
                    t2 + 1
                ));
            }
        }
        for &(a, b) in aprime.relations() {
            let keep = |x: usize| q.source(x) < n && q.target(x) < n;
            if keep(a) && keep(b) {
                text.push_str(&format!(
                    "relation {} {}\n",
                    q.arrow(a).name,
                    q.arrow(b).name
                ));
            }
        }
        let abar = GentleAlgebra::new(parse_bound_quiver(&text)?)?;
        Ok(TypeBContext { geometry, n, t, tprime, aprime, abar, sigma_v, sigma_a })
    }

    /// Twisted dual of a string word: reverse, keep direction flags,
    /// rename arrows through sigma.
    pub fn nabla_word(&self, w: &StringWord) -> StringWord {
        match w {
            StringWord::Zero => StringWord::Zero,
            StringWord::Trivial { vertex, sign } => {
                StringWord::Trivial { vertex: self.sigma_v[*vertex], sign: -sign }
            }
            StringWord::Word(l) => StringWord::Word(
                l.iter()
                    .rev()
                    .map(|c| Letter { arrow: self.sigma_a[c.arrow], direct: c.direct })
                    .collect(),
            ),
        }
    }

    pub fn nabla(&self, m: &ModuleSum) -> Result<ModuleSum, Error> {
        let mut parts = Vec::new();
        for s in m.summands() {
            let part = match s {
                Module::String(sm) => Module::string(&self.aprime, &self.nabla_word(sm.word()))?,
                Module::Band(bm) => {
                    let w = StringWord::Word(bm.band().letters().to_vec());
                    Module::band(&self.aprime, &self.nabla_word(&w))?
                }
            };
            parts.push(part);
        }
        Ok(ModuleSum::new(parts))
    }

    /// Restriction: kill all vertices with index > n; string modules split
    /// into the surviving segments.
    pub fn restrict_module(&self, m: &ModuleSum) -> Result<ModuleSum, Error> {
        let n = self.n;
        let mut parts: Vec<Module> = Vec::new();
        for s in m.summands() {
            let word = match s {
                Module::String(sm) => sm.word().clone(),
                Module::Band(_) => {
                    return Err(DomainError::Unsupported(
                        "restriction of band modules".into(),
                    )
                    .into())
                }
            };
            match &word {
                StringWord::Zero => {}
                StringWord::Trivial { vertex, .. } => {
                    if *vertex < n {
                        parts.push(Module::string(&self.abar, &self.map_word(&word))?);
                    }
                }
                StringWord::Word(l) => {
                    // surviving segments of consecutive nodes with vertex < n
                    let nodes = l.len() + 1;
                    let keep: Vec<bool> = (0..nodes)
                        .map(|k| word.node_vertex(&self.aprime, k) < n)
                        .collect();
                    let mut start = None;
                    for k in 0..=nodes {
                        if k < nodes && keep[k] {
                            if start.is_none() {
                                start = Some(k);
                            }
                        } else if let Some(s0) = start.take() {
                            let seg = crate::strings::subword(&self.aprime, &word, s0, k - 1);
                            parts.push(Module::string(&self.abar, &self.map_word(&seg))?);
                        }
                    }
                }
            }
        }
        Ok(ModuleSum::new(parts))
    }

    /// Map a word over the big algebra into the restricted algebra by
    /// matching arrow endpoints.
    fn map_word(&self, w: &StringWord) -> StringWord {
        match w {
            StringWord::Zero => StringWord::Zero,
            StringWord::Trivial { vertex, sign } => {
                StringWord::Trivial { vertex: *vertex, sign: *sign }
            }
            StringWord::Word(l) => StringWord::Word(
                l.iter()
                    .map(|c| {
                        let q = self.aprime.quiver();
                        let (s, t) = (q.source(c.arrow), q.target(c.arrow));
                        let qb = self.abar.quiver();
                        let a = (0..qb.arrow_count())
                            .find(|&b| qb.source(b) == s && qb.target(b) == t)
                            .expect("restricted arrow exists");
                        Letter { arrow: a, direct: c.direct }
                    })
                    .collect(),
            ),
        }
    }

    /// Restriction of a dimension-style vector: the first n coordinates.
    pub fn restrict_vector(&self, v: &[u32]) -> Vec<u32> {
        v[..self.n].to_vec()
    }

    /// Res on a set of diagonals of the big polygon: identify all vertices
    /// right of the diameter with a single new vertex.
    pub fn restrict_diagonals(&self, ds: &[Diagonal]) -> Vec<Diagonal> {
        let g = &self.geometry;
        let np = self.n + 3;
        // relabel: d0 -> 0, ..., d1 -> n+1, collapsed -> n+2
        let relabel = |v: usize| -> usize {
            if g.left(v) || v == g.d0 || v == g.d1() {
                (v + g.m - g.d0) % g.m
            } else {
                self.n + 2
            }
        };
        let mut out: Vec<Diagonal> = Vec::new();
        for d in ds {
            let (x, y) = (relabel(d.a), relabel(d.b));
            if x == y {
                continue;
            }
            let (x, y) = if x < y { (x, y) } else { (y, x) };
            // adjacency in the small polygon makes the image a boundary edge
            if y - x == 1 || (x == 0 && y == np - 1) {
                continue;
            }
            let img = Diagonal { a: x, b: y };
            if !out.contains(&img) {
                out.push(img);
            }
        }
        out
    }

    /// The orthogonal module of a theta-orbit, via F_d.
    pub fn orbit_module(&self, d: Diagonal) -> Result<ModuleSum, Error> {
        let g = &self.geometry;
        let d1 = g.fd(d);
        let d2 = g.fd(g.theta_diag(d));
        let m1 = arc_module(&self.aprime, &self.tprime, d1)?;
        if d1 == d2 {
            return Ok(m1);
        }
        let m2 = arc_module(&self.aprime, &self.tprime, d2)?;
        Ok(m1.plus(&m2))
    }

    /// Orbit representatives of all diagonals of the big polygon.
    pub fn all_orbits(&self) -> Vec<Diagonal> {
        let m = self.geometry.m;
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 2..m {
                if a == 0 && b == m - 1 {
                    continue;
                }
                let d = Diagonal { a, b };
                let rep = d.min(self.geometry.theta_diag(d));
                if seen.insert(rep) {
                    out.push(rep);
                }
            }
        }
        out
    }

    pub fn orbit_in_t(&self, d: Diagonal) -> bool {
        self.t.index_of(d).is_some() || self.t.index_of(self.geometry.theta_diag(d)).is_some()
    }
}

/// Symmetric-module types of the classification lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricType {
    I,
    S,
    R,
}

pub fn symmetric_type(ctx: &TypeBContext, n: &ModuleSum) -> Result<SymmetricType, Error> {
    if ctx.nabla(n)? != *n {
        return Err(DomainError::Other("module is not nabla-invariant".into()).into());
    }
    match n.summands() {
        [_] => Ok(SymmetricType::I),
        [l, r] => {
            if l == r {
                Ok(SymmetricType::R)
            } else {
                Ok(SymmetricType::S)
            }
        }
        _ => Err(DomainError::Other(
            "symmetric indecomposables have at most two summands".into(),
        )
        .into()),
    }
}

/// Case-(ii) witness data of the type-B formula.
#[derive(Debug, Clone)]
pub struct TypeBWitness {
    pub g1g2: ModuleSum,
    pub sunder_dim: Vec<u32>,
    pub m: ModuleSum,
}

/// F-polynomial and g-vector of the type-B cluster variable of an
/// orthogonal indecomposable module N.
pub fn typeb_variable(
    ctx: &TypeBContext,
    n_mod: &ModuleSum,
) -> Result<(YPolynomial, Vec<i64>, Option<TypeBWitness>), Error> {
    let ty = symmetric_type(ctx, n_mod)?;
    if ty == SymmetricType::R {
        return Err(DomainError::Unsupported("type R does not occur here".into()).into());
    }
    let res_n = ctx.restrict_module(n_mod)?;
    let dims = crate::modules::dim_vector(&ctx.aprime, n_mod);
    let dim_at_d = dims[ctx.n - 1];
    let indecomposable = res_n.summands().len() == 1;
    if indecomposable {
        let f = f_polynomial(&ctx.abar, &res_n);
        let mut g = g_vector(&ctx.abar, &res_n);
        g[ctx.n - 1] *= 2;
        if dim_at_d != 0 {
            g[ctx.n - 1] += 1;
        }
        return Ok((f, g, None));
    }
    // case (ii): N = L + nabla(L) with a generating extension
    if n_mod.summands().len() != 2 {
        return Err(DomainError::Other("case (ii) needs exactly two summands".into()).into());
    }
    let l = ModuleSum::from_module(n_mod.summands()[0].clone());
    let nl = ModuleSum::from_module(n_mod.summands()[1].clone());
    let (x, s) = if crate::homext::ext_basis(&ctx.aprime, &nl, &l)?.len() == 1 {
        (l, nl)
    } else {
        (nl, l)
    };
    let data = multiplication_data(&ctx.aprime, &x, &s)?;
    if !data.added_arrows.is_empty() {
        return Err(DomainError::Other(
            "triangulation algebra produced an extended host".into(),
        )
        .into());
    }
    // the middle term consists of nabla-invariant type-I summands
    for smd in data.y.summands() {
        let one = ModuleSum::from_module(smd.clone());
        if ctx.nabla(&one)? != one {
            return Err(DomainError::Other(
                "middle term is not a sum of nabla-invariant modules".into(),
            )
            .into());
        }
    }
    if ctx.nabla(&data.m)? != data.m {
        return Err(DomainError::Other("minimum extension is not nabla-invariant".into()).into());
    }
    let sunder_sum = ModuleSum::from_module(Module::String(data.sunder.clone()));
    let dim_su = crate::modules::dim_vector(&ctx.aprime, &sunder_sum);
    let res_dim_su = ctx.restrict_vector(&dim_su);
    let res_m = ctx.restrict_module(&data.m)?;
    let f_res_n = f_polynomial(&ctx.abar, &res_n);
    let f_res_m = f_polynomial(&ctx.abar, &res_m);
    let f = f_res_n.sub(&f_res_m.mul_monomial(&res_dim_su, 1));
    // g = D(g_res + e_n): D doubles the last coordinate only
    let mut g = g_vector(&ctx.abar, &res_n);
    g[ctx.n - 1] += 1;
    g[ctx.n - 1] *= 2;
    Ok((
        f,
        g,
        Some(TypeBWitness { g1g2: data.y.clone(), sunder_dim: dim_su, m: data.m.clone() }),
    ))
}

/// Type-B exchange matrix from the restricted algebra: the last row of
/// B(Q(Abar)) is doubled.
pub fn typeb_seed_matrix(ctx: &TypeBContext) -> Vec<Vec<i64>> {
    let b = ctx.abar.exchange_matrix();
    let n = ctx.n;
    let mut out = b.entries.clone();
    for j in 0..n {
        if j != n - 1 {
            out[n - 1][j] *= 2;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{parse_module_sum, pretty};

    fn octagon_t() -> Triangulation {
        let p = Polygon::new(8).unwrap();
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        Triangulation::new(p, vec![d(0, 2), d(2, 4), d(0, 4), d(0, 6), d(4, 6)]).unwrap()
    }

    fn ctx() -> TypeBContext {
        TypeBContext::new(octagon_t(), true).unwrap()
    }

    #[test]
    fn octagon_tprime_is_the_fixture_algebra() {
        let c = ctx();
        let fixture = crate::fixtures::octagon();
        assert_eq!(
            c.aprime.exchange_matrix().entries,
            fixture.exchange_matrix().entries
        );
        assert_eq!(c.aprime.relations().len(), 6);
        // arrows match as index pairs
        let mut pairs: Vec<(usize, usize)> = (0..c.aprime.quiver().arrow_count())
            .map(|a| (c.aprime.quiver().source(a), c.aprime.quiver().target(a)))
            .collect();
        pairs.sort();
        let mut expect: Vec<(usize, usize)> = (0..fixture.quiver().arrow_count())
            .map(|a| (fixture.quiver().source(a), fixture.quiver().target(a)))
            .collect();
        expect.sort();
        assert_eq!(pairs, expect);
        assert!(c.aprime.from_triangulation);
    }

    #[test]
    fn square_with_one_diagonal() {
        let p = Polygon::new(4).unwrap();
        let t = Triangulation::new(p, vec![Diagonal::new(p, 0, 2).unwrap()]).unwrap();
        let alg = triangulation_algebra(&t).unwrap();
        assert_eq!(alg.vertex_count(), 1);
        assert_eq!(alg.quiver().arrow_count(), 0);
    }

    #[test]
    fn zigzag_hexagon_is_a3() {
        let p = Polygon::new(6).unwrap();
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        let t = Triangulation::new(p, vec![d(0, 2), d(0, 3), d(3, 5)]).unwrap();
        let alg = triangulation_algebra(&t).unwrap();
        assert_eq!(alg.vertex_count(), 3);
        assert_eq!(alg.quiver().arrow_count(), 2);
        assert!(alg.relations().is_empty());
        // quiver 1 <- 2 -> 3
        let mut pairs: Vec<(usize, usize)> = (0..2)
            .map(|a| (alg.quiver().source(a), alg.quiver().target(a)))
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(1, 0), (1, 2)]);
    }

    #[test]
    fn arc_modules_of_the_figure() {
        let c = ctx();
        let p = c.t.polygon;
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        // gray diameter (1,7) in T' coordinates: module 5/3/1
        let gray = arc_module(&c.aprime, &c.tprime, d(1, 7)).unwrap();
        assert_eq!(pretty(&c.aprime, &gray), "5/3/1");
        let blue1 = arc_module(&c.aprime, &c.tprime, d(1, 5)).unwrap();
        assert_eq!(pretty(&c.aprime, &blue1), "3/14");
        let blue2 = arc_module(&c.aprime, &c.tprime, d(3, 7)).unwrap();
        assert_eq!(pretty(&c.aprime, &blue2), "25/3");
        // member of the triangulation: zero
        assert!(arc_module(&c.aprime, &c.tprime, d(0, 2)).unwrap().is_zero());
    }

    #[test]
    fn fd_is_an_involution() {
        let c = ctx();
        let g = &c.geometry;
        for a in 0..8usize {
            for b in a + 2..8 {
                if a == 0 && b == 7 {
                    continue;
                }
                let d = Diagonal { a, b };
                assert_eq!(g.fd(g.fd(d)), d, "F_d not involutive at ({a},{b})");
            }
        }
        // diameters map to rho-invariant diagonals
        for d0 in [1usize, 2, 3] {
            let dm = Diagonal { a: d0, b: d0 + 4 };
            let img = g.fd(dm);
            assert_eq!(g.rho_diag(img), img, "image of a diameter must be rho-invariant");
        }
    }

    #[test]
    fn fd_maps_t_to_tprime() {
        let c = ctx();
        let imgs: std::collections::BTreeSet<Diagonal> =
            c.t.diagonals.iter().map(|&d| c.geometry.fd(d)).collect();
        let tp: std::collections::BTreeSet<Diagonal> =
            c.tprime.diagonals.iter().copied().collect();
        assert_eq!(imgs, tp);
    }

    #[test]
    fn nabla_swaps_the_blue_pair() {
        let c = ctx();
        let m = parse_module_sum(&c.aprime, "str a3_1~ a3_4").unwrap();
        // identify by pretty form instead of arrow names
        assert_eq!(pretty(&c.aprime, &m), "3/14");
        let nm = c.nabla(&m).unwrap();
        assert_eq!(pretty(&c.aprime, &nm), "25/3");
        assert_eq!(c.nabla(&nm).unwrap(), m);
    }

    #[test]
    fn restriction_examples() {
        let c = ctx();
        let p = c.t.polygon;
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        let n = c.orbit_module(d(1, 7)).unwrap();
        assert_eq!(pretty(&c.aprime, &n), "25/3 + 3/14");
        let res = c.restrict_module(&n).unwrap();
        assert_eq!(pretty(&c.abar, &res), "2/3 + 3/1");
        // restriction of a non-crossing orbit is a single diagonal
        let o = c.restrict_diagonals(&[d(0, 2), c.geometry.theta_diag(d(0, 2))]);
        assert_eq!(o.len(), 1);
    }

    #[test]
    fn skein_relation_for_the_exchange_pair() {
        let c = ctx();
        let p = c.t.polygon;
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        // (1,5) x (3,7): y^0 x(1,7) x(3,5) + y^{e3} x(1,3) x(5,7)
        let lhs = arc_variable(&c.aprime, &c.tprime, d(1, 5))
            .unwrap()
            .mul(&arc_variable(&c.aprime, &c.tprime, d(3, 7)).unwrap());
        let t1 = arc_variable(&c.aprime, &c.tprime, d(1, 7))
            .unwrap()
            .mul(&arc_variable(&c.aprime, &c.tprime, d(3, 5)).unwrap());
        let t2 = arc_variable(&c.aprime, &c.tprime, d(1, 3))
            .unwrap()
            .mul(&arc_variable(&c.aprime, &c.tprime, d(5, 7)).unwrap());
        let d1 = lamination_dvector(&c.tprime, d(1, 3), d(5, 7));
        let d2 = lamination_dvector(&c.tprime, d(1, 7), d(3, 5));
        assert_eq!(d1, vec![0, 0, 0, 0, 0]);
        assert_eq!(d2, vec![0, 0, 1, 0, 0]);
        let rhs = t1.shift(&[0; 5], &d1).add(&t2.shift(&[0; 5], &d2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn typeb_final_example() {
        let c = ctx();
        let p = c.t.polygon;
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        // the blue pair comes from the orbit [(1,7),(3,5)]
        let n = c.orbit_module(d(1, 7)).unwrap();
        let (f, g, witness) = typeb_variable(&c, &n).unwrap();
        let mut expect = YPolynomial::zero();
        expect.add_term(vec![0, 0, 0], 1);
        expect.add_term(vec![1, 0, 0], 1);
        expect.add_term(vec![1, 0, 1], 2);
        expect.add_term(vec![1, 0, 2], 1);
        expect.add_term(vec![1, 1, 2], 1);
        assert_eq!(f, expect, "F_N mismatch");
        assert_eq!(g, vec![-1, 0, 0]);
        let w = witness.unwrap();
        assert_eq!(w.sunder_dim, vec![0, 0, 1, 0, 0]);
        assert_eq!(pretty(&c.aprime, &w.g1g2), "2/3/4 + 5/3/1");
    }

    #[test]
    fn typeb_case_i_gray_diameter() {
        let c = ctx();
        let p = c.t.polygon;
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        // the gray arc 5/3/1 comes from the theta-fixed diameter (1,5)
        let n = c.orbit_module(d(1, 5)).unwrap();
        assert_eq!(pretty(&c.aprime, &n), "5/3/1");
        assert_eq!(symmetric_type(&c, &n).unwrap(), SymmetricType::I);
        // another type-I orbit: the diameter (2,6) maps to itself
        let n2 = c.orbit_module(d(2, 6)).unwrap();
        assert_eq!(symmetric_type(&c, &n2).unwrap(), SymmetricType::I);
        let (f, g, w) = typeb_variable(&c, &n2).unwrap();
        assert!(w.is_none());
        // dim at the diameter is nonzero, so g = D g_res + e_n
        let res = c.restrict_module(&n2).unwrap();
        let mut expect_g = g_vector(&c.abar, &res);
        expect_g[2] *= 2;
        expect_g[2] += 1;
        assert_eq!(g, expect_g);
        assert_eq!(f, f_polynomial(&c.abar, &res));
    }
}
