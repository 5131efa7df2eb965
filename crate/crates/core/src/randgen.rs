//! Seeded random gentle algebras and random strings, used by the property
//! test suites and the fuzz mode of the self test.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{parse_bound_quiver, validate_gentle, GentleAlgebra};
use crate::strings::{pair_ok, Letter, StringWord};

/// Draw a random gentle algebra with at most `max_vertices` vertices and
/// `max_arrows` arrows. Rejection-samples until the gentle axioms and
/// finite-dimensionality hold.
pub fn random_gentle(rng: &mut StdRng, max_vertices: usize, max_arrows: usize) -> GentleAlgebra {
    loop {
        if let Some(alg) = try_random(rng, max_vertices, max_arrows) {
            return alg;
        }
    }
}

fn try_random(rng: &mut StdRng, max_vertices: usize, max_arrows: usize) -> Option<GentleAlgebra> {
    let nv = rng.gen_range(1..=max_vertices);
    let na = rng.gen_range(0..=max_arrows);
    let mut out_deg = vec![0usize; nv];
    let mut in_deg = vec![0usize; nv];
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    for _ in 0..na {
        let s = rng.gen_range(0..nv);
        let t = rng.gen_range(0..nv);
        if out_deg[s] >= 2 || in_deg[t] >= 2 {
            continue;
        }
        out_deg[s] += 1;
        in_deg[t] += 1;
        arrows.push((s, t));
    }
    // choose relations vertex by vertex so that (G2)/(G3) hold
    let mut relations: Vec<(usize, usize)> = Vec::new();
    for v in 0..nv {
        let ins: Vec<usize> = (0..arrows.len()).filter(|&a| arrows[a].1 == v).collect();
        let outs: Vec<usize> = (0..arrows.len()).filter(|&a| arrows[a].0 == v).collect();
        match (ins.len(), outs.len()) {
            (0, _) | (_, 0) => {}
            (1, 1) => {
                if rng.gen_bool(0.5) {
                    relations.push((ins[0], outs[0]));
                }
            }
            (1, 2) => {
                let pick = *outs.choose(rng).unwrap();
                relations.push((ins[0], pick));
            }
            (2, 1) => {
                let pick = *ins.choose(rng).unwrap();
                relations.push((pick, outs[0]));
            }
            (2, 2) => {
                if rng.gen_bool(0.5) {
                    relations.push((ins[0], outs[0]));
                    relations.push((ins[1], outs[1]));
                } else {
                    relations.push((ins[0], outs[1]));
                    relations.push((ins[1], outs[0]));
                }
            }
            _ => unreachable!("degrees capped at two"),
        }
    }
    // serialize through the DSL to reuse the full validation path
    let mut text = String::from("vertices");
    for v in 0..nv {
        text.push_str(&format!(" v{v}"));
    }
    text.push('\n');
    for (k, (s, t)) in arrows.iter().enumerate() {
        text.push_str(&format!("arrow a{k} v{s} v{t}\n"));
    }
    for (a, b) in &relations {
        text.push_str(&format!("relation a{a} a{b}\n"));
    }
    let spec = parse_bound_quiver(&text).ok()?;
    if !validate_gentle(&spec).is_empty() {
        return None;
    }
    GentleAlgebra::new(spec).ok()
}

/// All strings of letter length <= `max_len`, plus the trivial strings.
pub fn enumerate_strings(alg: &GentleAlgebra, max_len: usize) -> Vec<StringWord> {
    let mut out: Vec<StringWord> = Vec::new();
    for v in 0..alg.vertex_count() {
        out.push(StringWord::trivial(v, 1));
    }
    let mut frontier: Vec<Vec<Letter>> = Vec::new();
    for a in 0..alg.quiver().arrow_count() {
        frontier.push(vec![Letter::direct(a)]);
        frontier.push(vec![Letter::inverse(a)]);
    }
    let mut len = 1;
    while len <= max_len && !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            out.push(StringWord::Word(w.clone()));
            if len < max_len {
                let last = *w.last().unwrap();
                for a in 0..alg.quiver().arrow_count() {
                    for cand in [Letter::direct(a), Letter::inverse(a)] {
                        if pair_ok(alg, last, cand) {
                            let mut l = w.clone();
                            l.push(cand);
                            next.push(l);
                        }
                    }
                }
            }
        }
        frontier = next;
        len += 1;
    }
    out
}

/// Random valid string of length <= max_len (may return a trivial string).
pub fn random_string(rng: &mut StdRng, alg: &GentleAlgebra, max_len: usize) -> StringWord {
    let target = rng.gen_range(0..=max_len);
    if target == 0 || alg.quiver().arrow_count() == 0 {
        let v = rng.gen_range(0..alg.vertex_count());
        return StringWord::trivial(v, if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    let a = rng.gen_range(0..alg.quiver().arrow_count());
    let mut letters = vec![if rng.gen_bool(0.5) {
        Letter::direct(a)
    } else {
        Letter::inverse(a)
    }];
    while letters.len() < target {
        let last = *letters.last().unwrap();
        let mut options = Vec::new();
        for a in 0..alg.quiver().arrow_count() {
            for cand in [Letter::direct(a), Letter::inverse(a)] {
                if pair_ok(alg, last, cand) {
                    options.push(cand);
                }
            }
        }
        match options.choose(rng) {
            Some(&c) => letters.push(c),
            None => break,
        }
    }
    StringWord::Word(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn random_algebras_are_gentle() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let alg = random_gentle(&mut rng, 6, 8);
            assert!(alg.gentle);
        }
    }

    #[test]
    fn random_strings_are_valid() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let alg = random_gentle(&mut rng, 6, 8);
            for _ in 0..20 {
                let w = random_string(&mut rng, &alg, 6);
                assert!(crate::strings::is_valid(&alg, &w));
            }
        }
    }

    #[test]
    fn enumerated_strings_are_valid() {
        let alg = crate::fixtures::octagon();
        let all = enumerate_strings(&alg, 4);
        assert!(all.iter().all(|w| crate::strings::is_valid(&alg, w)));
        // every inverse is present too
        for w in &all {
            if let StringWord::Word(_) = w {
                assert!(all.contains(&w.invert()));
            }
        }
    }
}
