//! Replays the bundled example suite and, optionally, randomized checks.

use gentle_core::algebra::GentleAlgebra;
use gentle_core::ar::{tau, tau_inv};
use gentle_core::error::{DomainError, Error};
use gentle_core::fixtures;
use gentle_core::homext::{ext_basis, ext_dim_oracle, hom_dim, hom_dim_oracle};
use gentle_core::invariants::{
    chi, cluster_character, f_polynomial, g_vector, g_vector_homological,
};
use gentle_core::modules::{parse_module_sum, pretty, Module, ModuleSum};
use gentle_core::multiplication::{
    cc_relation, classify_sequence, multiplication_data, verify_decomposition, SequenceClass,
};
use gentle_core::poly::YPolynomial;
use gentle_core::randgen::{random_gentle, random_string};
use rand::rngs::StdRng;
use rand::SeedableRng;

struct Suite {
    failures: Vec<String>,
}

impl Suite {
    fn check(&mut self, name: &str, ok: bool, detail: String) {
        if ok {
            println!("ok   {name}");
        } else {
            println!("FAIL {name}: {detail}");
            self.failures.push(name.to_string());
        }
    }
}

fn msum(alg: &GentleAlgebra, e: &str) -> ModuleSum {
    parse_module_sum(alg, e).expect("fixture expression parses")
}

fn ypoly(n: usize, terms: &[(&[u32], i64)]) -> YPolynomial {
    let mut p = YPolynomial::zero();
    for (e, c) in terms {
        assert_eq!(e.len(), n);
        p.add_term(e.to_vec(), *c);
    }
    p
}

pub fn run(fuzz: usize, seed: u64) -> Result<(), Error> {
    let mut s = Suite { failures: Vec::new() };

    // --- three-vertex algebra -------------------------------------------
    let a1 = fixtures::algebra_i();
    s.check(
        "exchange matrix of the three-vertex algebra",
        a1.exchange_matrix().entries == vec![vec![0, 1, 1], vec![-1, 0, 1], vec![-1, -1, 0]],
        format!("{:?}", a1.exchange_matrix().entries),
    );
    let l = msum(&a1, "str a~ c b~");
    let f = f_polynomial(&a1, &l);
    let expect = ypoly(
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
    s.check("F-polynomial of the four-node string", f == expect, format!("{f:?}"));
    let table: &[(&[u32], i64)] = &[
        (&[0, 0, 0], 1),
        (&[1, 0, 0], 1),
        (&[0, 1, 0], 1),
        (&[1, 1, 0], 2),
        (&[1, 2, 0], 1),
        (&[1, 1, 1], 1),
        (&[1, 2, 1], 1),
    ];
    s.check(
        "Grassmannian table",
        table.iter().all(|(e, c)| chi(&a1, &l, e) == *c),
        "chi mismatch".into(),
    );
    s.check(
        "g-vector of the simple at 1",
        g_vector(&a1, &msum(&a1, "str e(1,+)")) == vec![-1, 1, 1],
        String::new(),
    );
    let t = tau(&a1, &Module::simple(2));
    s.check("tau of the simple at 3", pretty(&a1, &ModuleSum::from_module(t)) == "32/21", String::new());
    s.check(
        "Hom dimension two example",
        hom_dim(&a1, &msum(&a1, "str b"), &msum(&a1, "str b c~ a")) == 2,
        String::new(),
    );
    let rep = verify_decomposition(&a1, &msum(&a1, "str b"), &msum(&a1, "str e(3,+)"))?;
    s.check(
        "arrow-extension identity F_X F_S = F_Y + y3",
        rep.holds && rep.data.m.is_zero(),
        format!("{:?}", rep.first_failure),
    );

    // --- octagon algebra -------------------------------------------------
    let oct = fixtures::octagon();
    s.check(
        "g-vector golden (-1,0,1,-1,0)",
        g_vector(&oct, &msum(&oct, "str c~ d")) == vec![-1, 0, 1, -1, 0]
            && g_vector_homological(&oct, &msum(&oct, "str c~ d")) == vec![-1, 0, 1, -1, 0],
        String::new(),
    );
    let x = msum(&oct, "str c~ d");
    let sx = msum(&oct, "str b f~");
    let data = multiplication_data(&oct, &x, &sx)?;
    s.check(
        "octagon exchange data",
        pretty(&oct, &data.xbar) == "1 + 4"
            && pretty(&oct, &data.s_mod_sunder) == "2 + 5"
            && pretty(&data.host, &data.m) == "1/2 + 4/5"
            && data.added_arrows.is_empty(),
        format!(
            "xbar {}, s/s {}, m {}",
            pretty(&oct, &data.xbar),
            pretty(&oct, &data.s_mod_sunder),
            pretty(&data.host, &data.m)
        ),
    );
    let ccr = cc_relation(&oct, &x, &sx)?;
    s.check(
        "octagon exchange relation in cluster characters",
        ccr.holds && ccr.exp_y == vec![0; 5] && ccr.exp_m == vec![0; 5],
        String::new(),
    );
    s.check(
        "cluster character specializes to F",
        cluster_character(&oct, &x).specialize_x() == f_polynomial(&oct, &x),
        String::new(),
    );

    // --- band algebra ------------------------------------------------------
    let ba = fixtures::band_algebra();
    let band = msum(&ba, "band a~ e a d~ f d");
    let fband = f_polynomial(&ba, &band);
    s.check(
        "band F-polynomial has 13 terms with top y1^2 y2^2 y3^2",
        fband.num_terms() == 13 && fband.coeff(&[2, 2, 2, 0]) == 1 && fband.coeff(&[1, 0, 0, 0]) == 2,
        format!("{fband:?}"),
    );
    s.check("tau fixes bands", tau(&ba, &band.summands()[0]) == band.summands()[0], String::new());
    let srep = verify_decomposition(&ba, &band, &msum(&ba, "str c e a d~"))?;
    s.check(
        "band multiplication identity (corrected middle 1/4)",
        srep.holds && pretty(&srep.data.host, &srep.data.m) == "1/4",
        format!("{:?}", srep.first_failure),
    );

    // --- hereditary A5 and the tree counterexample -------------------------
    let a5 = fixtures::a5();
    let d5 = multiplication_data(&a5, &msum(&a5, "str b a"), &msum(&a5, "str d c"))?;
    s.check(
        "A5: Xbar = 1 and Sunder = 4/3",
        pretty(&a5, &d5.xbar) == "1"
            && pretty(&a5, &ModuleSum::from_module(Module::String(d5.sunder.clone()))) == "4/3",
        String::new(),
    );
    let ccr5 = cc_relation(&a5, &msum(&a5, "str b a"), &msum(&a5, "str d c"))?;
    s.check("A5 exchange identity with coefficient y3 y4", ccr5.holds, String::new());
    let ce = fixtures::counterexample();
    let class = classify_sequence(&ce, &msum(&ce, "str c"), &msum(&ce, "str b"))?;
    s.check(
        "generalized almost split but not almost split",
        class == SequenceClass::GeneralizedAlmostSplit,
        format!("{class}"),
    );

    // --- extended-host examples --------------------------------------------
    let ex = fixtures::extended_example();
    let d1 = multiplication_data(&ex, &msum(&ex, "str a~ d~ e"), &msum(&ex, "str c d~"))?;
    s.check(
        "added arrow 2 -> 4 with gentle host",
        d1.added_arrows.len() == 1 && d1.host.gentle && pretty(&d1.host, &d1.m) == "2/4",
        String::new(),
    );
    let d2 = multiplication_data(&ex, &msum(&ex, "str b"), &msum(&ex, "str c d~"))?;
    s.check(
        "added arrow 3 -> 5 with non-string host",
        d2.added_arrows.len() == 1 && !d2.host.gentle && pretty(&d2.host, &d2.m) == "3/5",
        String::new(),
    );

    // --- type B ------------------------------------------------------------
    {
        use gentle_core::typeb::*;
        let p = Polygon::new(8)?;
        let d = |a, b| Diagonal::new(p, a, b).unwrap();
        let t = Triangulation::new(p, vec![d(0, 2), d(2, 4), d(0, 4), d(0, 6), d(4, 6)])?;
        let ctx = TypeBContext::new(t, true)?;
        let n = ctx.orbit_module(d(1, 7))?;
        let (f, g, _) = typeb_variable(&ctx, &n)?;
        let expect = ypoly(
            3,
            &[
                (&[0, 0, 0], 1),
                (&[1, 0, 0], 1),
                (&[1, 0, 1], 2),
                (&[1, 0, 2], 1),
                (&[1, 1, 2], 1),
            ],
        );
        s.check(
            "type-B final example",
            f == expect && g == vec![-1, 0, 0],
            format!("{f:?} {g:?}"),
        );
    }

    // --- randomized fuzzing --------------------------------------------------
    if fuzz > 0 {
        let threads: usize = std::env::var("GENTLE_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
            .filter(|&v| v > 0)
            .unwrap_or(1);
        let shard = fuzz.div_ceil(threads);
        let mut handles = Vec::new();
        for tid in 0..threads {
            let lo = tid * shard;
            let hi = ((tid + 1) * shard).min(fuzz);
            if lo >= hi {
                break;
            }
            handles.push(std::thread::spawn(move || fuzz_range(seed, lo, hi)));
        }
        let mut failures = Vec::new();
        let mut stats = (0usize, 0usize);
        for h in handles {
            match h.join() {
                Ok(Ok((pairs, verified))) => {
                    stats.0 += pairs;
                    stats.1 += verified;
                }
                Ok(Err(msg)) => failures.push(msg),
                Err(_) => failures.push("fuzz thread panicked".to_string()),
            }
        }
        s.check(
            &format!(
                "fuzz: {} algebras, {} module pairs, {} decompositions verified",
                fuzz, stats.0, stats.1
            ),
            failures.is_empty(),
            failures.join("; "),
        );
    }

    if s.failures.is_empty() {
        println!("selftest: all checks passed");
        Ok(())
    } else {
        Err(DomainError::Other(format!("{} selftest failures", s.failures.len())).into())
    }
}

type FuzzStats = (usize, usize);

fn fuzz_range(seed: u64, lo: usize, hi: usize) -> Result<FuzzStats, String> {
    let mut pairs = 0;
    let mut verified = 0;
    for case in lo..hi {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(case as u64));
        let alg = random_gentle(&mut rng, 6, 8);
        for _ in 0..4 {
            let xw = random_string(&mut rng, &alg, 6);
            let sw = random_string(&mut rng, &alg, 6);
            let x = ModuleSum::from_module(
                Module::string(&alg, &xw).map_err(|e| e.to_string())?,
            );
            let sm = ModuleSum::from_module(
                Module::string(&alg, &sw).map_err(|e| e.to_string())?,
            );
            pairs += 1;
            let hd = hom_dim(&alg, &x, &sm);
            let ho = hom_dim_oracle(&alg, &x, &sm);
            if hd != ho {
                return Err(format!("hom mismatch {hd} vs {ho} (case {case})"));
            }
            let basis = ext_basis(&alg, &sm, &x).map_err(|e| e.to_string())?;
            let eo = ext_dim_oracle(&alg, &sm, &x);
            if basis.len() != eo {
                return Err(format!("ext mismatch {} vs {eo} (case {case})", basis.len()));
            }
            if g_vector(&alg, &x) != g_vector_homological(&alg, &x) {
                return Err(format!("g-vector mismatch (case {case})"));
            }
            if !gentle_core::modules::is_projective(&alg, &x.summands()[0]) {
                let tx = tau(&alg, &x.summands()[0]);
                if tau_inv(&alg, &tx) != x.summands()[0] {
                    return Err(format!("tau round trip failed (case {case})"));
                }
            }
            if basis.len() == 1 {
                let rep = verify_decomposition(&alg, &x, &sm).map_err(|e| e.to_string())?;
                if !rep.holds {
                    return Err(format!(
                        "decomposition failed at e = {:?} (case {case})",
                        rep.first_failure
                    ));
                }
                verified += 1;
            }
        }
    }
    Ok((pairs, verified))
}
