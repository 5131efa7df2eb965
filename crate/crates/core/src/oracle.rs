//! Independent Fomin-Zelevinsky seed mutation with principal coefficients,
//! and BFS enumeration of cluster variables in finite type.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{DomainError, Error};
use crate::poly::YPolynomial;

/// A seed with principal coefficients: exchange matrix, c-matrix (the
/// coefficient bottom part), and per-slot (F-polynomial, g-vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub b: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
    pub vars: Vec<(YPolynomial, Vec<i64>)>,
    /// Initial exchange matrix (columns give the y-degrees).
    pub b0: Vec<Vec<i64>>,
}

fn is_skew_symmetrizable(b: &[Vec<i64>]) -> bool {
    let n = b.len();
    for i in 0..n {
        if b[i].len() != n || b[i][i] != 0 {
            return false;
        }
        for j in 0..n {
            // signs must oppose: b_ij > 0 iff b_ji < 0
            if (b[i][j] > 0 && b[j][i] >= 0) || (b[i][j] < 0 && b[j][i] <= 0) {
                if b[i][j] != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Initial seed: F = 1, g = e_i, c = identity.
pub fn initial_seed(b: Vec<Vec<i64>>) -> Result<Seed, Error> {
    let n = b.len();
    if !is_skew_symmetrizable(&b) {
        return Err(DomainError::Other("matrix is not skew-symmetrizable".into()).into());
    }
    let c: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let vars = (0..n)
        .map(|i| {
            let mut g = vec![0i64; n];
            g[i] = 1;
            (YPolynomial::one(n), g)
        })
        .collect();
    Ok(Seed { b: b.clone(), c, vars, b0: b })
}

fn pos(x: i64) -> i64 {
    x.max(0)
}

/// Mutate the seed at slot k (0-based).
pub fn mutate(seed: &Seed, k: usize) -> Seed {
    let n = seed.b.len();
    assert!(k < n);
    // extended matrix mutation for B and C
    let mut nb = seed.b.clone();
    let mut nc = seed.c.clone();
    for i in 0..n {
        for j in 0..n {
            if i == k || j == k {
                nb[i][j] = -seed.b[i][j];
            } else {
                nb[i][j] =
                    seed.b[i][j] + pos(seed.b[i][k]) * pos(seed.b[k][j])
                        - pos(-seed.b[i][k]) * pos(-seed.b[k][j]);
            }
            if j == k {
                nc[i][j] = -seed.c[i][j];
            } else {
                nc[i][j] =
                    seed.c[i][j] + pos(seed.c[i][k]) * pos(seed.b[k][j])
                        - pos(-seed.c[i][k]) * pos(-seed.b[k][j]);
            }
        }
    }
    // F-polynomial recurrence with c-vector coefficients
    let mut plus = YPolynomial::one(n);
    let mut minus = YPolynomial::one(n);
    let yplus: Vec<u32> = (0..n).map(|j| pos(seed.c[j][k]) as u32).collect();
    let yminus: Vec<u32> = (0..n).map(|j| pos(-seed.c[j][k]) as u32).collect();
    plus = plus.mul_monomial(&yplus, 1);
    minus = minus.mul_monomial(&yminus, 1);
    for i in 0..n {
        let e = pos(seed.b[i][k]);
        for _ in 0..e {
            plus = plus.mul(&seed.vars[i].0);
        }
        let e = pos(-seed.b[i][k]);
        for _ in 0..e {
            minus = minus.mul(&seed.vars[i].0);
        }
    }
    let new_f = plus.add(&minus).div_exact(&seed.vars[k].0);
    // g-vector from homogeneity of the exchange relation:
    // g'_k = sum_i [b_ik]+ g_i - sum_j [c_jk]+ b0_j - g_k
    let mut new_g = vec![0i64; n];
    for i in 0..n {
        let e = pos(seed.b[i][k]);
        for t in 0..n {
            new_g[t] += e * seed.vars[i].1[t];
        }
    }
    for j in 0..n {
        let e = pos(seed.c[j][k]);
        for t in 0..n {
            new_g[t] -= e * seed.b0[t][j];
        }
    }
    for t in 0..n {
        new_g[t] -= seed.vars[k].1[t];
    }
    let mut vars = seed.vars.clone();
    vars[k] = (new_f, new_g);
    Seed { b: nb, c: nc, vars, b0: seed.b0.clone() }
}

/// Canonical key under relabelling of the seed slots: sort the variables
/// and permute the exchange matrix rows and columns the same way. Distinct
/// variables per seed make the permutation well defined in finite type.
fn seed_key(seed: &Seed) -> String {
    let n = seed.b.len();
    let mut order: Vec<usize> = (0..n).collect();
    let keys: Vec<String> = seed.vars.iter().map(|(f, g)| format!("{f:?}|{g:?}")).collect();
    order.sort_by(|&i, &j| keys[i].cmp(&keys[j]));
    let permuted: Vec<Vec<i64>> = order
        .iter()
        .map(|&i| order.iter().map(|&j| seed.b[i][j]).collect())
        .collect();
    let vs: Vec<&str> = order.iter().map(|&i| keys[i].as_str()).collect();
    format!("{:?}#{}", permuted, vs.join(";"))
}

fn var_key(f: &YPolynomial, g: &[i64]) -> String {
    format!("{f:?}|{g:?}")
}

/// BFS over the exchange graph, collecting all (F, g) pairs. Errors when
/// more than `cap` distinct seeds appear (guards infinite type).
pub fn enumerate_variables(
    b: Vec<Vec<i64>>,
    cap: usize,
) -> Result<Vec<(YPolynomial, Vec<i64>)>, Error> {
    let n = b.len();
    let start = initial_seed(b)?;
    let mut seen_seeds = BTreeSet::new();
    let mut seen_vars = BTreeSet::new();
    let mut vars = Vec::new();
    let mut queue = VecDeque::new();
    seen_seeds.insert(seed_key(&start));
    for (f, g) in &start.vars {
        if seen_vars.insert(var_key(f, g)) {
            vars.push((f.clone(), g.clone()));
        }
    }
    queue.push_back(start);
    while let Some(seed) = queue.pop_front() {
        for k in 0..n {
            let next = mutate(&seed, k);
            let key = seed_key(&next);
            if seen_seeds.insert(key) {
                if seen_seeds.len() > cap {
                    return Err(DomainError::Other(format!(
                        "seed cap {cap} exceeded; matrix looks like infinite type"
                    ))
                    .into());
                }
                for (f, g) in &next.vars {
                    if seen_vars.insert(var_key(f, g)) {
                        vars.push((f.clone(), g.clone()));
                    }
                }
                queue.push_back(next);
            }
        }
    }
    Ok(vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_seed_shape() {
        let s = initial_seed(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        assert_eq!(s.c, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(s.vars[0].0, YPolynomial::one(2));
        assert_eq!(s.vars[0].1, vec![1, 0]);
    }

    #[test]
    fn rank_two_mutation() {
        let s = initial_seed(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let m = mutate(&s, 0);
        let mut expect = YPolynomial::one(2);
        expect.add_term(vec![1, 0], 1);
        assert_eq!(m.vars[0].0, expect, "F = 1 + y1 after one mutation");
        assert_eq!(m.vars[0].1, vec![-1, 1]);
    }

    #[test]
    fn mutation_is_involutive() {
        let b = vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]];
        let s = initial_seed(b).unwrap();
        for path in [vec![0], vec![1, 2], vec![0, 1, 2, 0]] {
            let mut cur = s.clone();
            for &k in &path {
                cur = mutate(&cur, k);
            }
            for k in 0..3 {
                let back = mutate(&mutate(&cur, k), k);
                assert_eq!(back, cur, "mu_{k} not involutive after {path:?}");
            }
        }
    }

    #[test]
    fn rank_one_has_two_variables() {
        let vars = enumerate_variables(vec![vec![0]], 10).unwrap();
        assert_eq!(vars.len(), 2);
    }

    #[test]
    fn a2_has_five_variables() {
        let vars = enumerate_variables(vec![vec![0, 1], vec![-1, 0]], 100).unwrap();
        assert_eq!(vars.len(), 5);
    }

    #[test]
    fn b2_has_six_variables() {
        // type B2: skew-symmetrizable with a 2
        let vars = enumerate_variables(vec![vec![0, 1], vec![-2, 0]], 100).unwrap();
        assert_eq!(vars.len(), 6);
    }

    #[test]
    fn laurent_positivity_observed() {
        let vars = enumerate_variables(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]], 1000)
            .unwrap();
        for (f, _) in &vars {
            assert_eq!(f.coeff(&[0, 0, 0]), 1, "constant term 1");
            for (_, c) in f.terms() {
                assert!(*c > 0, "nonnegative coefficients");
            }
        }
        // type A3 has 9 cluster variables (diagonals of the hexagon)
        assert_eq!(vars.len(), 9);
    }

    #[test]
    fn infinite_type_hits_cap() {
        // Markov quiver is infinite type
        let b = vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]];
        assert!(enumerate_variables(b, 50).is_err());
    }
}
