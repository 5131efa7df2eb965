//! Sparse exact polynomials: Z[y_1..y_n] with non-negative exponents, and
//! Laurent polynomials in x with y-polynomial coefficients flattened to
//! terms indexed by (x-exponent vector, y-exponent vector).

use std::collections::BTreeMap;

/// Polynomial in the coefficient variables y, exponents per quiver vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct YPolynomial {
    terms: BTreeMap<Vec<u32>, i64>,
}

impl YPolynomial {
    pub fn zero() -> Self {
        YPolynomial { terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut t = BTreeMap::new();
        t.insert(vec![0; n], 1);
        YPolynomial { terms: t }
    }

    pub fn monomial(exp: Vec<u32>, coeff: i64) -> Self {
        let mut p = YPolynomial::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, exp: &[u32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &YPolynomial) -> YPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &YPolynomial) -> YPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -*c);
        }
        out
    }

    pub fn mul(&self, other: &YPolynomial) -> YPolynomial {
        let mut out = YPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, exp: &[u32], coeff: i64) -> YPolynomial {
        let mut out = YPolynomial::zero();
        for (e, c) in &self.terms {
            let ne: Vec<u32> = e.iter().zip(exp).map(|(x, y)| x + y).collect();
            out.add_term(ne, c * coeff);
        }
        out
    }

    /// Exact division; panics when not divisible (used by the mutation
    /// recurrence where divisibility is guaranteed).
    pub fn div_exact(&self, other: &YPolynomial) -> YPolynomial {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut out = YPolynomial::zero();
        // leading term of the divisor under the BTreeMap (lex) order
        let (dexp, dcoef) = {
            let (e, c) = other.terms.iter().next_back().unwrap();
            (e.clone(), *c)
        };
        while !rem.is_zero() {
            let (rexp, rcoef) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (e.clone(), *c)
            };
            assert!(
                rexp.iter().zip(&dexp).all(|(a, b)| a >= b) && rcoef % dcoef == 0,
                "inexact polynomial division"
            );
            let qexp: Vec<u32> = rexp.iter().zip(&dexp).map(|(a, b)| a - b).collect();
            let qcoef = rcoef / dcoef;
            out.add_term(qexp.clone(), qcoef);
            let piece = other.mul_monomial(&qexp, -qcoef);
            rem = rem.add(&piece);
        }
        out
    }

    /// Total degree then lexicographic term order used for printing.
    pub fn ordered_terms(&self) -> Vec<(Vec<u32>, i64)> {
        let mut t: Vec<(Vec<u32>, i64)> = self.terms.iter().map(|(e, c)| (e.clone(), *c)).collect();
        t.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(&b.0))
        });
        t
    }

    pub fn render(&self, var_names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.ordered_terms().into_iter().enumerate() {
            let mono = render_monomial(&e, var_names, "y");
            let mut piece = String::new();
            if c < 0 {
                piece.push_str(if k == 0 { "-" } else { " - " });
            } else if k > 0 {
                piece.push_str(" + ");
            }
            let mag = c.unsigned_abs();
            if mono.is_empty() {
                piece.push_str(&mag.to_string());
            } else if mag == 1 {
                piece.push_str(&mono);
            } else {
                piece.push_str(&format!("{mag}*{mono}"));
            }
            out.push_str(&piece);
        }
        out
    }
}

fn render_var(name: &str, prefix: &str) -> String {
    if name.chars().all(|c| c.is_ascii_alphanumeric()) {
        format!("{prefix}{name}")
    } else {
        format!("{prefix}[{name}]")
    }
}

fn render_monomial(exp: &[impl Copy + Into<i64>], var_names: &[String], prefix: &str) -> String {
    let mut parts = Vec::new();
    for (i, e) in exp.iter().enumerate() {
        let e: i64 = (*e).into();
        if e == 0 {
            continue;
        }
        let v = render_var(&var_names[i], prefix);
        if e == 1 {
            parts.push(v);
        } else {
            parts.push(format!("{v}^{e}"));
        }
    }
    parts.join("*")
}

/// Laurent polynomial in x with polynomial y-part: the cluster character
/// value space Z[y][x^-1, x].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentCC {
    terms: BTreeMap<(Vec<i64>, Vec<u32>), i64>,
}

impl LaurentCC {
    pub fn zero() -> Self {
        LaurentCC { terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        LaurentCC::monomial(vec![0; n], vec![0; n], 1)
    }

    pub fn monomial(xexp: Vec<i64>, yexp: Vec<u32>, coeff: i64) -> Self {
        let mut p = LaurentCC::zero();
        p.add_term(xexp, yexp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, xexp: Vec<i64>, yexp: Vec<u32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (xexp, yexp);
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<i64>, Vec<u32>), &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &LaurentCC) -> LaurentCC {
        let mut out = self.clone();
        for ((x, y), c) in &other.terms {
            out.add_term(x.clone(), y.clone(), *c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentCC) -> LaurentCC {
        let mut out = LaurentCC::zero();
        for ((xa, ya), ca) in &self.terms {
            for ((xb, yb), cb) in &other.terms {
                let x: Vec<i64> = xa.iter().zip(xb).map(|(p, q)| p + q).collect();
                let y: Vec<u32> = ya.iter().zip(yb).map(|(p, q)| p + q).collect();
                out.add_term(x, y, ca * cb);
            }
        }
        out
    }

    /// Multiply by the monomial x^xexp y^yexp.
    pub fn shift(&self, xexp: &[i64], yexp: &[u32]) -> LaurentCC {
        let mut out = LaurentCC::zero();
        for ((x, y), c) in &self.terms {
            let nx: Vec<i64> = x.iter().zip(xexp).map(|(p, q)| p + q).collect();
            let ny: Vec<u32> = y.iter().zip(yexp).map(|(p, q)| p + q).collect();
            out.add_term(nx, ny, *c);
        }
        out
    }

    /// Specialize every x variable to 1.
    pub fn specialize_x(&self) -> YPolynomial {
        let mut p = YPolynomial::zero();
        for ((_, y), c) in &self.terms {
            p.add_term(y.clone(), *c);
        }
        p
    }

    pub fn render(&self, var_names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut ts: Vec<(&(Vec<i64>, Vec<u32>), &i64)> = self.terms.iter().collect();
        ts.sort_by(|a, b| {
            let da: u32 = a.0 .1.iter().sum();
            let db: u32 = b.0 .1.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        let mut out = String::new();
        for (k, ((x, y), c)) in ts.into_iter().enumerate() {
            let xm = render_monomial(x, var_names, "x");
            let ym = render_monomial(&y.iter().map(|&v| v as i64).collect::<Vec<i64>>(), var_names, "y");
            let mono = match (xm.is_empty(), ym.is_empty()) {
                (true, true) => String::new(),
                (false, true) => xm,
                (true, false) => ym,
                (false, false) => format!("{ym}*{xm}"),
            };
            if *c < 0 {
                out.push_str(if k == 0 { "-" } else { " - " });
            } else if k > 0 {
                out.push_str(" + ");
            }
            let mag = c.unsigned_abs();
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn poly_arithmetic() {
        let n = 2;
        let one = YPolynomial::one(n);
        let y1 = YPolynomial::monomial(vec![1, 0], 1);
        let p = one.add(&y1);
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(&[1, 0]), 2);
        assert_eq!(sq.coeff(&[2, 0]), 1);
        let q = sq.div_exact(&p);
        assert_eq!(q, p);
        assert_eq!(p.render(&names(2)), "1 + y1");
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = YPolynomial::monomial(vec![1], 2);
        p.add_term(vec![1], -2);
        assert!(p.is_zero());
    }

    #[test]
    fn laurent_specialization() {
        let mut l = LaurentCC::zero();
        l.add_term(vec![-1, 0], vec![0, 0], 1);
        l.add_term(vec![-1, 1], vec![1, 0], 1);
        let p = l.specialize_x();
        assert_eq!(p.coeff(&[0, 0]), 1);
        assert_eq!(p.coeff(&[1, 0]), 1);
        assert_eq!(l.render(&names(2)), "x1^-1 + y1*x1^-1*x2");
    }
}
